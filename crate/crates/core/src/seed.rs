//! Seeds, mutation, principal coefficients, c- and g-matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_math::{gcd_all, rat_from_str, rat_int, rat_to_string, Matrix, Rational};

/// Vertex identifier `level:ordinal`. Diagram seeds use (level, string
/// ordinal); square products use (left vertex, right vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub level: usize,
    pub ordinal: usize,
}

impl VertexId {
    pub const fn new(level: usize, ordinal: usize) -> Self {
        VertexId { level, ordinal }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.level, self.ordinal)
    }
}

impl FromStr for VertexId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid vertex id {s:?}, expected i:j"));
        let (a, b) = s.trim().split_once(':').ok_or_else(bad)?;
        Ok(VertexId::new(
            a.trim().parse().map_err(|_| bad())?,
            b.trim().parse().map_err(|_| bad())?,
        ))
    }
}

impl Serialize for VertexId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses `"1:1,1:2"` (commas or whitespace).
pub fn parse_script(text: &str) -> Result<Vec<VertexId>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

/// Mutation steps applied first to last, then an optional relabeling of
/// vertex ids (old id to new id).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MutationScript {
    pub steps: Vec<VertexId>,
    pub relabel: Option<BTreeMap<VertexId, VertexId>>,
}

impl MutationScript {
    pub fn new(steps: Vec<VertexId>) -> Self {
        MutationScript { steps, relabel: None }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl fmt::Display for MutationScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Exchange matrix with frozen set and multipliers. Vertices are kept sorted
/// by (level, ordinal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    vertices: Vec<VertexId>,
    frozen: Vec<bool>,
    eps: Matrix,
    d: Vec<u64>,
}

fn pos(x: &Rational) -> Rational {
    if x.is_positive() {
        x.clone()
    } else {
        Rational::zero()
    }
}

impl Seed {
    /// Validates and sorts. `eps` is indexed like `vertices`.
    pub fn new(vertices: Vec<VertexId>, frozen: Vec<bool>, eps: Matrix, d: Vec<u64>) -> Result<Seed> {
        let n = vertices.len();
        if frozen.len() != n || d.len() != n || eps.rows() != n || eps.cols() != n {
            return Err(Error::Domain("seed component sizes disagree".into()));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&k| vertices[k]);
        if order.windows(2).any(|w| vertices[w[0]] == vertices[w[1]]) {
            return Err(Error::Domain("duplicate vertex id".into()));
        }
        let seed = Seed {
            vertices: order.iter().map(|&k| vertices[k]).collect(),
            frozen: order.iter().map(|&k| frozen[k]).collect(),
            eps: Matrix::from_fn(n, n, |i, j| eps.get(order[i], order[j]).clone()),
            d: order.iter().map(|&k| d[k]).collect(),
        };
        seed.validate()?;
        Ok(seed)
    }

    /// Skew-symmetrizability, positive multipliers, and integrality outside
    /// the frozen block with half-integers allowed inside it.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        if self.d.contains(&0) {
            return Err(Error::Domain("multipliers must be positive".into()));
        }
        let two = rat_int(2);
        for a in 0..n {
            for b in 0..n {
                let e = self.eps.get(a, b);
                let lhs = e * rat_int(self.d[a] as i64);
                let rhs = -(self.eps.get(b, a) * rat_int(self.d[b] as i64));
                if lhs != rhs {
                    return Err(Error::Domain(format!(
                        "exchange matrix not skew-symmetrizable at ({}, {})",
                        self.vertices[a], self.vertices[b]
                    )));
                }
                let ok = if self.frozen[a] && self.frozen[b] {
                    (e * &two).is_integer()
                } else {
                    e.is_integer()
                };
                if !ok {
                    return Err(Error::Domain(format!(
                        "non-integral entry at ({}, {})",
                        self.vertices[a], self.vertices[b]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn epsilon(&self) -> &Matrix {
        &self.eps
    }

    pub fn multipliers(&self) -> &[u64] {
        &self.d
    }

    pub fn is_frozen(&self, idx: usize) -> bool {
        self.frozen[idx]
    }

    pub fn index(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn frozen_vertices(&self) -> Vec<VertexId> {
        (0..self.len())
            .filter(|&k| self.frozen[k])
            .map(|k| self.vertices[k])
            .collect()
    }

    pub fn unfrozen_vertices(&self) -> Vec<VertexId> {
        (0..self.len())
            .filter(|&k| !self.frozen[k])
            .map(|k| self.vertices[k])
            .collect()
    }

    /// `epsilon_{ab}` by id.
    pub fn eps(&self, a: VertexId, b: VertexId) -> Option<&Rational> {
        Some(self.eps.get(self.index(a)?, self.index(b)?))
    }

    fn unfrozen_index(&self, c: VertexId) -> Result<usize> {
        let k = self
            .index(c)
            .ok_or_else(|| Error::InvalidVertex(format!("unknown vertex {c}")))?;
        if self.frozen[k] {
            return Err(Error::InvalidVertex(format!("cannot mutate frozen vertex {c}")));
        }
        Ok(k)
    }

    /// Mutation at an unfrozen vertex.
    pub fn mutate(&self, c: VertexId) -> Result<Seed> {
        let k = self.unfrozen_index(c)?;
        Ok(self.mutate_index(k))
    }

    fn mutate_index(&self, k: usize) -> Seed {
        let n = self.len();
        let eps = Matrix::from_fn(n, n, |a, b| {
            let e = self.eps.get(a, b);
            if a == k || b == k {
                -e.clone()
            } else {
                let (ak, kb) = (self.eps.get(a, k), self.eps.get(k, b));
                if ak.is_zero() || kb.is_zero() {
                    e.clone()
                } else {
                    e + pos(ak) * pos(kb) - pos(&-ak) * pos(&-kb)
                }
            }
        });
        Seed {
            vertices: self.vertices.clone(),
            frozen: self.frozen.clone(),
            eps,
            d: self.d.clone(),
        }
    }

    /// Applies the steps, then the relabeling.
    pub fn apply_script(&self, script: &MutationScript) -> Result<Seed> {
        let mut s = self.clone();
        for &v in &script.steps {
            s = s.mutate(v)?;
        }
        match &script.relabel {
            Some(map) => s.relabel(map),
            None => Ok(s),
        }
    }

    /// Renames vertices via `sigma` (ids missing from the map are kept).
    pub fn relabel(&self, sigma: &BTreeMap<VertexId, VertexId>) -> Result<Seed> {
        let ids: Vec<VertexId> = self.vertices.iter().map(|v| *sigma.get(v).unwrap_or(v)).collect();
        Seed::new(ids, self.frozen.clone(), self.eps.clone(), self.d.clone())
    }

    /// Restriction to the unfrozen vertices, multipliers rescaled to gcd 1.
    pub fn unfrozen_part(&self) -> Seed {
        let keep: Vec<usize> = (0..self.len()).filter(|&k| !self.frozen[k]).collect();
        let g = gcd_all(keep.iter().map(|&k| self.d[k])).max(1);
        Seed {
            vertices: keep.iter().map(|&k| self.vertices[k]).collect(),
            frozen: vec![false; keep.len()],
            eps: Matrix::from_fn(keep.len(), keep.len(), |i, j| self.eps.get(keep[i], keep[j]).clone()),
            d: keep.iter().map(|&k| self.d[k] / g).collect(),
        }
    }

    /// Langlands dual: `(-eps^T, L / d_a)` with `L` the lcm of multipliers.
    pub fn langlands_dual(&self) -> Seed {
        let l = self.d.iter().fold(1u64, |a, &b| a.lcm(&b));
        let n = self.len();
        Seed {
            vertices: self.vertices.clone(),
            frozen: self.frozen.clone(),
            eps: Matrix::from_fn(n, n, |a, b| -self.eps.get(b, a).clone()),
            d: self.d.iter().map(|&x| l / x).collect(),
        }
    }

    pub fn to_json(&self) -> SeedJson {
        let n = self.len();
        SeedJson {
            vertices: self.vertices.iter().map(|v| v.to_string()).collect(),
            frozen: self.frozen_vertices().iter().map(|v| v.to_string()).collect(),
            epsilon: (0..n)
                .map(|i| (0..n).map(|j| rat_to_string(self.eps.get(i, j))).collect())
                .collect(),
            d: self.d.clone(),
        }
    }

    pub fn from_json(j: &SeedJson) -> Result<Seed> {
        let vertices: Vec<VertexId> = j.vertices.iter().map(|v| v.parse()).collect::<Result<_>>()?;
        let frozen_ids: Vec<VertexId> = j.frozen.iter().map(|v| v.parse()).collect::<Result<_>>()?;
        if let Some(v) = frozen_ids.iter().find(|v| !vertices.contains(v)) {
            return Err(Error::InvalidVertex(format!("frozen vertex {v} not in vertex list")));
        }
        let n = vertices.len();
        if j.epsilon.len() != n || j.epsilon.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("epsilon must be square over the vertex list".into()));
        }
        let mut eps = Matrix::zeros(n, n);
        for (a, row) in j.epsilon.iter().enumerate() {
            for (b, e) in row.iter().enumerate() {
                eps.set(a, b, rat_from_str(e)?);
            }
        }
        let frozen = vertices.iter().map(|v| frozen_ids.contains(v)).collect();
        Seed::new(vertices, frozen, eps, j.d.clone())
    }
}

/// JSON form of a seed; entries are `"n/d"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub vertices: Vec<String>,
    pub frozen: Vec<String>,
    pub epsilon: Vec<Vec<String>>,
    pub d: Vec<u64>,
}

/// Whether `sigma` is a seed isomorphism from `s1` onto `s2`.
pub fn seed_isomorphic(s1: &Seed, s2: &Seed, sigma: &BTreeMap<VertexId, VertexId>) -> bool {
    if s1.len() != s2.len() {
        return false;
    }
    let mut image = Vec::with_capacity(s1.len());
    for (a, v) in s1.vertices.iter().enumerate() {
        let Some(w) = sigma.get(v) else { return false };
        let Some(b) = s2.index(*w) else { return false };
        if s1.frozen[a] != s2.frozen[b] || s1.d[a] != s2.d[b] {
            return false;
        }
        image.push(b);
    }
    let mut sorted = image.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != image.len() {
        return false;
    }
    (0..s1.len()).all(|a| (0..s1.len()).all(|b| s1.eps.get(a, b) == s2.eps.get(image[a], image[b])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Green,
    Red,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Green => "green",
            Color::Red => "red",
        })
    }
}

/// Unfrozen seed with principal coefficients. Only the unfrozen block of
/// the exchange matrix and the block toward the auxiliary copies (the
/// c-matrix) are stored; both are integral.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedSeed {
    vertices: Vec<VertexId>,
    d: Vec<u64>,
    eps: Vec<i64>,
    c: Vec<i64>,
}

fn overflow() -> Error {
    Error::Domain("integer overflow during mutation".into())
}

fn mut_entry(e: i64, ak: i64, kb: i64) -> Result<i64> {
    let v = e as i128 + (ak.max(0) as i128) * (kb.max(0) as i128) - ((-ak).max(0) as i128) * ((-kb).max(0) as i128);
    v.to_i64().ok_or_else(overflow)
}

impl FramedSeed {
    /// Attaches principal coefficients to the unfrozen part of `s`.
    pub fn frame(s: &Seed) -> Result<FramedSeed> {
        let u = s.unfrozen_part();
        let n = u.len();
        let ints = u
            .eps
            .to_i64()
            .ok_or_else(|| Error::Domain("unfrozen exchange matrix must be integral".into()))?;
        let mut c = vec![0i64; n * n];
        for i in 0..n {
            c[i * n + i] = 1;
        }
        Ok(FramedSeed {
            vertices: u.vertices,
            d: u.d,
            eps: ints.concat(),
            c,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn multipliers(&self) -> &[u64] {
        &self.d
    }

    pub fn index(&self, v: VertexId) -> Result<usize> {
        self.vertices
            .binary_search(&v)
            .map_err(|_| Error::InvalidVertex(format!("unknown or frozen vertex {v}")))
    }

    pub fn eps_at(&self, a: usize, b: usize) -> i64 {
        self.eps[a * self.len() + b]
    }

    pub fn c_at(&self, a: usize, b: usize) -> i64 {
        self.c[a * self.len() + b]
    }

    pub fn mutate(&mut self, v: VertexId) -> Result<()> {
        let k = self.index(v)?;
        self.mutate_index(k)
    }

    pub fn mutate_index(&mut self, k: usize) -> Result<()> {
        let n = self.len();
        let mut eps = self.eps.clone();
        let mut c = self.c.clone();
        for a in 0..n {
            let ak = self.eps[a * n + k];
            for b in 0..n {
                eps[a * n + b] = if a == k || b == k {
                    -self.eps[a * n + b]
                } else {
                    mut_entry(self.eps[a * n + b], ak, self.eps[k * n + b])?
                };
                c[a * n + b] = if a == k {
                    -self.c[a * n + b]
                } else {
                    mut_entry(self.c[a * n + b], ak, self.c[k * n + b])?
                };
            }
        }
        self.eps = eps;
        self.c = c;
        Ok(())
    }

    pub fn apply_steps(&mut self, steps: &[VertexId]) -> Result<()> {
        for &v in steps {
            self.mutate(v)?;
        }
        Ok(())
    }

    /// Renames rows and columns of the unfrozen block by `sigma`; the
    /// auxiliary columns of the c-matrix are left alone.
    pub fn permute(&mut self, sigma: &BTreeMap<VertexId, VertexId>) -> Result<()> {
        let n = self.len();
        let mut target = vec![0usize; n];
        for (a, v) in self.vertices.iter().enumerate() {
            let w = sigma.get(v).copied().unwrap_or(*v);
            target[a] = self.index(w)?;
        }
        let mut seen = target.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != n {
            return Err(Error::Domain("relabeling is not a bijection".into()));
        }
        let mut eps = vec![0i64; n * n];
        let mut c = vec![0i64; n * n];
        for a in 0..n {
            for b in 0..n {
                eps[target[a] * n + target[b]] = self.eps[a * n + b];
                c[target[a] * n + b] = self.c[a * n + b];
            }
        }
        self.eps = eps;
        self.c = c;
        Ok(())
    }

    pub fn c_matrix(&self) -> Matrix {
        let n = self.len();
        Matrix::from_fn(n, n, |a, b| rat_int(self.c[a * n + b]))
    }

    pub fn epsilon(&self) -> Matrix {
        let n = self.len();
        Matrix::from_fn(n, n, |a, b| rat_int(self.eps[a * n + b]))
    }

    /// Current unfrozen seed.
    pub fn base(&self) -> Seed {
        Seed {
            vertices: self.vertices.clone(),
            frozen: vec![false; self.len()],
            eps: self.epsilon(),
            d: self.d.clone(),
        }
    }

    pub fn color_index(&self, a: usize) -> Color {
        let n = self.len();
        if self.c[a * n..(a + 1) * n].iter().all(|&x| x >= 0) {
            Color::Green
        } else {
            Color::Red
        }
    }

    /// Green iff row `v` of the c-matrix is entrywise non-negative.
    pub fn vertex_color(&self, v: VertexId) -> Result<Color> {
        Ok(self.color_index(self.index(v)?))
    }

    /// Each c-matrix row is entirely non-negative or entirely non-positive.
    pub fn is_sign_coherent(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            let row = &self.c[a * n..(a + 1) * n];
            row.iter().all(|&x| x >= 0) || row.iter().all(|&x| x <= 0)
        })
    }

    pub fn c_is_identity(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.c[a * n + b] == i64::from(a == b)))
    }

    /// If the c-matrix equals `sign` times a permutation matrix, the map
    /// `a -> b` with `c[a][b] = sign`.
    pub fn c_permutation(&self, sign: i64) -> Option<Vec<usize>> {
        let n = self.len();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        for a in 0..n {
            let row = &self.c[a * n..(a + 1) * n];
            let mut hit = None;
            for (b, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    x if x == sign && hit.is_none() && !used[b] => hit = Some(b),
                    _ => return None,
                }
            }
            let b = hit?;
            used[b] = true;
            perm.push(b);
        }
        Some(perm)
    }
}

/// c-matrix after running `steps` on the framed unfrozen part of `s`.
pub fn c_matrix(s: &Seed, steps: &[VertexId]) -> Result<Matrix> {
    let mut f = FramedSeed::frame(s)?;
    f.apply_steps(steps)?;
    Ok(f.c_matrix())
}

/// g-matrix of `steps`: inverse transpose of the Langlands dual c-matrix.
pub fn g_matrix(s: &Seed, steps: &[VertexId]) -> Result<Matrix> {
    let dual = s.unfrozen_part().langlands_dual();
    let c = c_matrix(&dual, steps)?;
    let det = c.det()?;
    if !(det.abs()).is_one() {
        return Err(Error::Verification(format!("dual c-matrix has determinant {det}")));
    }
    c.transpose().inverse()
}
