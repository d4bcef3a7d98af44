//! Symmetrizable generalized Cartan matrices and Weyl group elements.
//!
//! Convention: `C[i][j] = <alpha_i^vee, alpha_j>`, so `s_i(alpha_j) =
//! alpha_j - C[i][j] alpha_i`. Indices in the public API are 1-based.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Order `m_ij` of `s_i s_j` in the Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraidExponent {
    Finite(usize),
    Infinite,
}

impl fmt::Display for BraidExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidExponent::Finite(m) => write!(f, "{m}"),
            BraidExponent::Infinite => f.write_str("infinity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    label: String,
    c: Vec<Vec<i64>>,
    d: Vec<i64>,
    corank: usize,
    /// `levels x levels` matrix whose top-left block is `c`; carries the
    /// entries used between a node level and an extra (corank) level.
    ext: Vec<Vec<i64>>,
    type_a: bool,
}

/// On-disk form of a custom Cartan matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CartanJson {
    #[serde(rename = "C")]
    pub c: Vec<Vec<i64>>,
    #[serde(rename = "D")]
    pub d: Vec<i64>,
    #[serde(default)]
    pub corank: usize,
    /// Optional extended matrix of size `(r + corank)^2`.
    #[serde(rename = "C_ext", default, skip_serializing_if = "Option::is_none")]
    pub c_ext: Option<Vec<Vec<i64>>>,
}

fn a_matrix(n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    c
}

fn transpose(c: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = c.len();
    (0..n).map(|i| (0..n).map(|j| c[j][i]).collect()).collect()
}

/// Minimal positive integer symmetrizer of `c`, if one exists.
fn symmetrizer(c: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = c.len();
    // D_j = D_i * C_ji / C_ij, propagated over connected components; kept as
    // fractions (num, den).
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some((1, 1));
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let (ni, di) = d[i].unwrap();
            for j in 0..n {
                if i == j || c[i][j] == 0 {
                    continue;
                }
                let num = ni * c[j][i];
                let den = di * c[i][j];
                let g = num.gcd(&den);
                let (num, den) = if den / g < 0 {
                    (-num / g, -den / g)
                } else {
                    (num / g, den / g)
                };
                match d[j] {
                    None => {
                        d[j] = Some((num, den));
                        stack.push(j);
                    }
                    Some((nj, dj)) => {
                        if nj * den != num * dj {
                            return None;
                        }
                    }
                }
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(|x| x.unwrap()).collect();
    let l = d.iter().fold(1i64, |acc, &(_, den)| acc.lcm(&den));
    let ints: Vec<i64> = d.iter().map(|&(num, den)| num * (l / den)).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if ints.iter().any(|&x| x <= 0) {
        return None;
    }
    Some(ints.into_iter().map(|x| x / g).collect())
}

impl CartanData {
    /// Standard Cartan matrix for a type label.
    pub fn from_name(name: &str) -> Result<CartanData> {
        let unknown = || Error::UnknownType(name.to_string());
        let trimmed = name.trim();
        if trimmed == "A1xA1" {
            return Self::build("A1xA1", vec![vec![2, 0], vec![0, 2]], None, 0, None, false);
        }
        let (kind, rank) = trimmed.split_at(1.min(trimmed.len()));
        let n: usize = rank.parse().map_err(|_| unknown())?;
        let c = match (kind, n) {
            ("A", 1..=9) => a_matrix(n),
            ("B", 2) => vec![vec![2, -2], vec![-1, 2]],
            ("B", 3..=4) => {
                let mut c = a_matrix(n);
                c[n - 1][n - 2] = -2;
                c
            }
            ("C", 3) => {
                let mut c = a_matrix(n);
                c[n - 1][n - 2] = -2;
                transpose(&c)
            }
            ("D", 4) => {
                let mut c = a_matrix(4);
                c[2][3] = 0;
                c[3][2] = 0;
                c[1][3] = -1;
                c[3][1] = -1;
                c
            }
            ("G", 2) => vec![vec![2, -3], vec![-1, 2]],
            ("F", 4) => {
                let mut c = a_matrix(4);
                c[2][1] = -2;
                c
            }
            _ => return Err(unknown()),
        };
        Self::build(trimmed, c, None, 0, None, kind == "A")
    }

    /// Validates custom data.
    pub fn from_json(j: &CartanJson) -> Result<CartanData> {
        Self::build(
            "custom",
            j.c.clone(),
            Some(j.d.clone()),
            j.corank,
            j.c_ext.clone(),
            false,
        )
    }

    pub fn from_json_str(s: &str) -> Result<CartanData> {
        let j: CartanJson = serde_json::from_str(s).map_err(|e| Error::InvalidCartan(e.to_string()))?;
        Self::from_json(&j)
    }

    pub fn to_json(&self) -> CartanJson {
        CartanJson {
            c: self.c.clone(),
            d: self.d.clone(),
            corank: self.corank,
            c_ext: (self.corank > 0).then(|| self.ext.clone()),
        }
    }

    fn build(
        label: &str,
        c: Vec<Vec<i64>>,
        d: Option<Vec<i64>>,
        corank: usize,
        ext: Option<Vec<Vec<i64>>>,
        type_a: bool,
    ) -> Result<CartanData> {
        let bad = |m: String| Error::InvalidCartan(m);
        let r = c.len();
        if r == 0 {
            return Err(bad("rank must be positive".into()));
        }
        if c.iter().any(|row| row.len() != r) {
            return Err(bad("C must be square".into()));
        }
        validate_gcm(&c)?;
        let d = match d {
            Some(d) => d,
            None => symmetrizer(&c).ok_or_else(|| bad("C is not symmetrizable".into()))?,
        };
        check_symmetrizer(&c, &d)?;
        if d.iter().fold(0i64, |a, &x| a.gcd(&x)) != 1 {
            return Err(bad("gcd of D must be 1".into()));
        }
        let levels = r + corank;
        let ext = match ext {
            Some(ext) => {
                if ext.len() != levels || ext.iter().any(|row| row.len() != levels) {
                    return Err(bad(format!("C_ext must be {levels}x{levels}")));
                }
                for i in 0..r {
                    if ext[i][..r] != c[i][..] {
                        return Err(bad("top-left block of C_ext must equal C".into()));
                    }
                }
                let mut dext = d.clone();
                dext.resize(levels, 1);
                for i in 0..levels {
                    for j in 0..levels {
                        let (a, b) = (ext[i][j], ext[j][i]);
                        if (i < r || j < r) && i != j && ((a == 0) != (b == 0) || a > 0) {
                            return Err(bad("C_ext has invalid off-diagonal entries".into()));
                        }
                        if (i < r || j < r) && a * dext[j] != b * dext[i] {
                            return Err(bad("C_ext is not symmetrized by (D, 1, ..., 1)".into()));
                        }
                    }
                }
                ext
            }
            None => {
                let mut ext = vec![vec![0; levels]; levels];
                for (row, src) in ext.iter_mut().zip(&c) {
                    row[..r].copy_from_slice(&src[..r]);
                }
                for (i, row) in ext.iter_mut().enumerate().skip(r) {
                    row[i] = 2;
                }
                ext
            }
        };
        Ok(CartanData {
            label: label.to_string(),
            c,
            d,
            corank,
            ext,
            type_a,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn corank(&self) -> usize {
        self.corank
    }

    /// Number of string-diagram levels, `r + corank`.
    pub fn levels(&self) -> usize {
        self.rank() + self.corank
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// `C_ij` with 1-based indices up to `levels()`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.ext[i - 1][j - 1]
    }

    /// `D_i` with a 1-based index; extra levels have multiplier 1.
    pub fn d(&self, i: usize) -> i64 {
        if i <= self.rank() {
            self.d[i - 1]
        } else {
            1
        }
    }

    pub fn is_type_a(&self) -> bool {
        self.type_a
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange(format!("{i} not in 1..={}", self.rank())))
        } else {
            Ok(())
        }
    }

    pub fn braid_exponent(&self, i: usize, j: usize) -> Result<BraidExponent> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::Domain("braid exponent needs i != j".into()));
        }
        Ok(match self.c[i - 1][j - 1] * self.c[j - 1][i - 1] {
            0 => BraidExponent::Finite(2),
            1 => BraidExponent::Finite(3),
            2 => BraidExponent::Finite(4),
            3 => BraidExponent::Finite(6),
            _ => BraidExponent::Infinite,
        })
    }

    /// Identity element in the default representation.
    pub fn identity(&self) -> WeylElement {
        if self.type_a {
            WeylElement::Perm((0..=self.rank() as u8).collect())
        } else {
            self.identity_matrix()
        }
    }

    /// Identity element in the matrix representation, whatever the type.
    pub fn identity_matrix(&self) -> WeylElement {
        let r = self.rank();
        let mut w = vec![0i64; r * r];
        for i in 0..r {
            w[i * r + i] = 1;
        }
        WeylElement::Mat { r, winv: w.clone(), w }
    }

    /// `s_i * w`.
    pub fn left_multiply(&self, i: usize, w: &WeylElement) -> WeylElement {
        match w {
            WeylElement::Perm(u) => {
                let mut u = u.clone();
                u.swap(i - 1, i);
                WeylElement::Perm(u)
            }
            WeylElement::Mat { r, w, winv } => {
                let r = *r;
                let row = &self.c[i - 1];
                // s_i w: row i becomes row_i - sum_j C_ij row_j.
                let mut nw = w.clone();
                for col in 0..r {
                    let mut acc = w[(i - 1) * r + col];
                    for (j, &cij) in row.iter().enumerate() {
                        if cij != 0 {
                            acc -= cij * w[j * r + col];
                        }
                    }
                    nw[(i - 1) * r + col] = acc;
                }
                // w^{-1} s_i: column j becomes col_j - C_ij col_i.
                let mut ninv = winv.clone();
                for (j, &cij) in row.iter().enumerate() {
                    if cij == 0 {
                        continue;
                    }
                    for k in 0..r {
                        ninv[k * r + j] -= cij * winv[k * r + (i - 1)];
                    }
                }
                WeylElement::Mat { r, w: nw, winv: ninv }
            }
        }
    }

    /// Whether `l(s_i w) > l(w)`, i.e. `w^{-1}(alpha_i)` is a positive root.
    pub fn length_increases_on_left(&self, i: usize, w: &WeylElement) -> bool {
        match w {
            WeylElement::Perm(u) => u[i - 1] < u[i],
            WeylElement::Mat { r, winv, .. } => (0..*r).all(|k| winv[k * r + (i - 1)] >= 0),
        }
    }

    /// Folds a word `i_1 ... i_n` into `s_{i_1} ... s_{i_n}`.
    pub fn element_of_word(&self, word: &[usize]) -> WeylElement {
        word.iter()
            .rev()
            .fold(self.identity(), |w, &i| self.left_multiply(i, &w))
    }

    /// Length via repeated left descents.
    pub fn length(&self, w: &WeylElement) -> usize {
        let mut cur = w.clone();
        let mut len = 0;
        while let Some(i) = (1..=self.rank()).find(|&i| !self.length_increases_on_left(i, &cur)) {
            cur = self.left_multiply(i, &cur);
            len += 1;
        }
        len
    }

    /// Longest element and one reduced word for it.
    pub fn longest_element(&self) -> Result<(WeylElement, Vec<usize>)> {
        const CAP: usize = 10_000;
        let mut w = self.identity();
        let mut word = Vec::new();
        while let Some(i) = (1..=self.rank()).find(|&i| self.length_increases_on_left(i, &w)) {
            w = self.left_multiply(i, &w);
            word.push(i);
            if word.len() > CAP {
                return Err(Error::NonFiniteType(format!("{} has no longest element", self.label)));
            }
        }
        word.reverse();
        Ok((w, word))
    }

    /// Order of the Coxeter element `s_1 s_2 ... s_r`.
    pub fn coxeter_number(&self) -> Result<usize> {
        const CAP: usize = 10_000;
        let word: Vec<usize> = (1..=self.rank()).collect();
        let c = self.element_of_word(&word);
        let e = self.identity();
        let mut cur = c.clone();
        for k in 1..=CAP {
            if cur == e {
                return Ok(k);
            }
            cur = word.iter().rev().fold(cur, |w, &i| self.left_multiply(i, &w));
        }
        Err(Error::NonFiniteType(format!(
            "{} has infinite Coxeter element",
            self.label
        )))
    }
}

#[allow(clippy::needless_range_loop)]
fn validate_gcm(c: &[Vec<i64>]) -> Result<()> {
    let n = c.len();
    for i in 0..n {
        if c[i][i] != 2 {
            return Err(Error::InvalidCartan("diagonal entries must be 2".into()));
        }
        for j in 0..n {
            if i != j && (c[i][j] > 0 || (c[i][j] == 0) != (c[j][i] == 0)) {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal entries ({},{}) invalid",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

fn check_symmetrizer(c: &[Vec<i64>], d: &[i64]) -> Result<()> {
    let n = c.len();
    if d.len() != n || d.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidCartan("D must have r positive entries".into()));
    }
    for i in 0..n {
        for j in 0..n {
            if c[i][j] * d[j] != c[j][i] * d[i] {
                return Err(Error::InvalidCartan("D^-1 C is not symmetric".into()));
            }
        }
    }
    Ok(())
}

/// Weyl group element. Type A uses one-line permutations of `0..=r`, every
/// other type the integer matrix of the action on simple roots.
#[derive(Clone, Debug)]
pub enum WeylElement {
    Perm(Vec<u8>),
    /// `w` and `w^{-1}` in row-major order; column `j` of `w` is `w(alpha_j)`.
    Mat {
        r: usize,
        w: Vec<i64>,
        winv: Vec<i64>,
    },
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (WeylElement::Perm(a), WeylElement::Perm(b)) => a == b,
            (WeylElement::Mat { w: a, .. }, WeylElement::Mat { w: b, .. }) => a == b,
            _ => false,
        }
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            WeylElement::Perm(u) => {
                0u8.hash(state);
                u.hash(state);
            }
            WeylElement::Mat { w, .. } => {
                1u8.hash(state);
                w.hash(state);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_types() {
        let a2 = CartanData::from_name("A2").unwrap();
        assert_eq!(a2.matrix(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.symmetrizer(), &[1, 1]);
        let b2 = CartanData::from_name("B2").unwrap();
        assert_eq!(b2.entry(1, 2), -2);
        assert_eq!(b2.entry(2, 1), -1);
        assert_eq!(b2.symmetrizer(), &[2, 1]);
        let g2 = CartanData::from_name("G2").unwrap();
        assert_eq!(g2.entry(1, 2) * g2.entry(2, 1), 3);
        assert_eq!(g2.symmetrizer(), &[3, 1]);
        assert_eq!(CartanData::from_name("B3").unwrap().symmetrizer(), &[1, 1, 2]);
        assert_eq!(CartanData::from_name("C3").unwrap().symmetrizer(), &[2, 2, 1]);
        assert_eq!(CartanData::from_name("F4").unwrap().symmetrizer(), &[1, 1, 2, 2]);
        assert!(CartanData::from_name("E6").is_err());
        assert!(CartanData::from_name("A0").is_err());
    }

    #[test]
    fn braid_exponents() {
        let a2 = CartanData::from_name("A2").unwrap();
        assert_eq!(a2.braid_exponent(1, 2).unwrap(), BraidExponent::Finite(3));
        let a1a1 = CartanData::from_name("A1xA1").unwrap();
        assert_eq!(a1a1.braid_exponent(1, 2).unwrap(), BraidExponent::Finite(2));
        let g2 = CartanData::from_name("G2").unwrap();
        assert_eq!(g2.braid_exponent(1, 2).unwrap(), BraidExponent::Finite(6));
        assert!(g2.braid_exponent(1, 1).is_err());
        let aff = CartanData::from_json_str(r#"{"C":[[2,-2],[-2,2]],"D":[1,1],"corank":0}"#).unwrap();
        assert_eq!(aff.braid_exponent(1, 2).unwrap(), BraidExponent::Infinite);
    }

    #[test]
    fn weyl_examples() {
        let a1 = CartanData::from_name("A1").unwrap();
        let s1 = a1.left_multiply(1, &a1.identity());
        assert_eq!(s1, WeylElement::Perm(vec![1, 0]));
        assert!(a1.length_increases_on_left(1, &a1.identity()));
        assert!(!a1.length_increases_on_left(1, &s1));

        let a2 = CartanData::from_name("A2").unwrap();
        let s2 = a2.element_of_word(&[2]);
        let s1s2 = a2.left_multiply(1, &s2);
        assert_eq!(a2.length(&s1s2), 2);
        assert!(!a2.length_increases_on_left(1, &s1s2));
        let s1 = a2.element_of_word(&[1]);
        assert_eq!(a2.left_multiply(1, &s1), a2.identity());
    }

    #[test]
    fn longest_and_coxeter() {
        for (name, len, h) in [
            ("A2", 3, 3),
            ("B2", 4, 4),
            ("G2", 6, 6),
            ("A3", 6, 4),
            ("D4", 12, 6),
            ("F4", 24, 12),
        ] {
            let c = CartanData::from_name(name).unwrap();
            let (w0, word) = c.longest_element().unwrap();
            assert_eq!(word.len(), len, "{name}");
            assert_eq!(c.length(&w0), len);
            assert_eq!(c.element_of_word(&word), w0);
            assert_eq!(c.coxeter_number().unwrap(), h, "{name}");
        }
        let aff = CartanData::from_json_str(r#"{"C":[[2,-2],[-2,2]],"D":[1,1]}"#).unwrap();
        assert!(matches!(aff.longest_element(), Err(Error::NonFiniteType(_))));
        assert!(matches!(aff.coxeter_number(), Err(Error::NonFiniteType(_))));
    }

    #[test]
    fn custom_json_validation() {
        assert!(CartanData::from_json_str(r#"{"C":[[2,-1],[0,2]],"D":[1,1]}"#).is_err());
        assert!(CartanData::from_json_str(r#"{"C":[[2,-2],[-1,2]],"D":[1,1]}"#).is_err());
        assert!(CartanData::from_json_str(r#"{"C":[[2,-2],[-1,2]],"D":[4,2]}"#).is_err());
        let c = CartanData::from_json_str(r#"{"C":[[2,-1],[-1,2]],"D":[1,1],"corank":1}"#).unwrap();
        assert_eq!(c.levels(), 3);
        assert_eq!(c.entry(3, 1), 0);
        let ext = r#"{"C":[[2]],"D":[1],"corank":1,"C_ext":[[2,-1],[-1,2]]}"#;
        let c = CartanData::from_json_str(ext).unwrap();
        assert_eq!(c.entry(1, 2), -1);
    }
}
