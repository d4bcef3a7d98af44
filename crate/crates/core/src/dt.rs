//! Maximal green sequences, Donaldson-Thomas scripts and their orders,
//! square products of bipartite Dynkin seeds and Zamolodchikov periodicity.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::{braids_equal, BraidEquality, BraidWord};
use crate::cartan_weyl::CartanData;
use crate::diagram::{triangulation_seed, Triangulation};
use crate::error::{Error, Result};
use crate::exact_math::{rat_int, Matrix};
use crate::seed::{seed_isomorphic, Color, FramedSeed, MutationScript, Seed, VertexId};

/// `t_k`: how many later letters equal the `k`-th one.
pub fn t_values(word: &BraidWord) -> Vec<usize> {
    let w = word.letters();
    (0..w.len())
        .map(|k| w[k + 1..].iter().filter(|&&x| x == w[k]).count())
        .collect()
}

/// Seed of the all-bottom triangulation of `word`, frozen strings included.
pub fn conf_e_seed(word: &BraidWord, c: &CartanData) -> Result<Seed> {
    triangulation_seed(&Triangulation::all_bottom(word.clone()), c)
}

/// `L_1, ..., L_n` where `L_k` mutates `(i_k, 1), ..., (i_k, t_k)`.
pub fn maximal_green_sequence(word: &BraidWord, c: &CartanData) -> Result<MutationScript> {
    for &i in word.letters() {
        c.check_index(i)?;
    }
    let steps = word
        .letters()
        .iter()
        .zip(t_values(word))
        .flat_map(|(&i, t)| (1..=t).map(move |j| VertexId::new(i, j)))
        .collect();
    Ok(MutationScript::new(steps))
}

/// Outcome of running a sequence on the framed unfrozen seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenReport {
    /// First step (0-based) whose vertex was red when mutated.
    pub first_red_step: Option<usize>,
    pub final_all_red: bool,
    pub final_c: Matrix,
}

impl GreenReport {
    pub fn is_maximal_green(&self) -> bool {
        self.first_red_step.is_none() && self.final_all_red
    }
}

pub fn check_green_sequence(seed: &Seed, steps: &[VertexId]) -> Result<GreenReport> {
    let mut f = FramedSeed::frame(seed)?;
    let mut first_red_step = None;
    for (n, &v) in steps.iter().enumerate() {
        if first_red_step.is_none() && f.vertex_color(v)? == Color::Red {
            first_red_step = Some(n);
        }
        f.mutate(v)?;
    }
    let final_all_red = (0..f.len()).all(|a| f.color_index(a) == Color::Red);
    Ok(GreenReport {
        first_red_step,
        final_all_red,
        final_c: f.c_matrix(),
    })
}

/// Mutation script followed by a vertex bijection, verified to realize the
/// Donaldson-Thomas transformation of `seed`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtScript {
    pub seed: Seed,
    pub script: MutationScript,
    pub sigma: BTreeMap<VertexId, VertexId>,
}

/// JSON form: `{"script":["i:j",...],"sigma":{"i:j":"i:k",...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DtScriptJson {
    pub script: Vec<VertexId>,
    pub sigma: BTreeMap<VertexId, VertexId>,
}

impl DtScript {
    pub fn to_json(&self) -> DtScriptJson {
        DtScriptJson {
            script: self.script.steps.clone(),
            sigma: self.sigma.clone(),
        }
    }

    /// Checks that the c-matrix becomes `-id` and the seed returns to itself.
    pub fn verify(&self) -> Result<()> {
        let mut f = FramedSeed::frame(&self.seed)?;
        f.apply_steps(&self.script.steps)?;
        let end = f.base().relabel(&self.sigma)?;
        f.permute(&self.sigma)?;
        let n = f.len();
        let minus_id = (0..n).all(|a| (0..n).all(|b| f.c_at(a, b) == -i64::from(a == b)));
        if !minus_id {
            return Err(Error::Verification(format!(
                "c-matrix after DT is not -id:\n{}",
                f.c_matrix()
            )));
        }
        let id: BTreeMap<_, _> = end.vertices().iter().map(|&v| (v, v)).collect();
        if !seed_isomorphic(&end, &self.seed, &id) {
            return Err(Error::Verification("DT does not return the seed to itself".into()));
        }
        Ok(())
    }
}

/// DT of the pair `(b, d)`, computed on the all-bottom seed of `d b^o`.
pub fn dt_script(b: &BraidWord, d: &BraidWord, c: &CartanData) -> Result<DtScript> {
    let word = d.concat(&b.reverse());
    if word.is_empty() {
        return Err(Error::Domain("the word d b^o must be nonempty".into()));
    }
    let seed = conf_e_seed(&word, c)?.unfrozen_part();
    let script = maximal_green_sequence(&word, c)?;
    let mut counts = vec![0usize; c.levels() + 1];
    for &i in word.letters() {
        counts[i] += 1;
    }
    let sigma = seed
        .vertices()
        .iter()
        .map(|&v| (v, VertexId::new(v.level, counts[v.level] - v.ordinal)))
        .collect();
    let ds = DtScript { seed, script, sigma };
    ds.verify()?;
    Ok(ds)
}

/// Least powers at which an iterated transformation becomes trivial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    /// Least `k` with identity c-matrix and identity vertex map.
    pub order: Option<usize>,
    /// Least `k` whose c-matrix is some permutation matrix.
    pub order_up_to_permutation: Option<usize>,
}

fn iterate_order(
    seed: &Seed,
    max_power: usize,
    mut step: impl FnMut(&mut FramedSeed) -> Result<()>,
) -> Result<OrderReport> {
    let mut f = FramedSeed::frame(seed)?;
    let mut report = OrderReport::default();
    for k in 1..=max_power {
        step(&mut f)?;
        if report.order_up_to_permutation.is_none() && f.c_permutation(1).is_some() {
            report.order_up_to_permutation = Some(k);
        }
        if f.c_is_identity() {
            report.order = Some(k);
            break;
        }
    }
    Ok(report)
}

/// Powers of (script, then sigma) until the c-matrix is the identity.
pub fn dt_order(ds: &DtScript, max_power: usize) -> Result<OrderReport> {
    iterate_order(&ds.seed, max_power, |f| {
        f.apply_steps(&ds.script.steps)?;
        f.permute(&ds.sigma)
    })
}

/// `2(m + n)` for the least `m <= 4` with `(d b^o)^m` braid-equal to the
/// `2n`-th power of the longest element, when that can be decided.
pub fn periodicity_bound(b: &BraidWord, d: &BraidWord, c: &CartanData, node_cap: usize) -> Option<usize> {
    let w = d.concat(&b.reverse());
    let (_, w0) = c.longest_element().ok()?;
    let two_n0 = 2 * w0.len();
    for m in 1..=4 {
        let total = w.len() * m;
        if w.is_empty() || !total.is_multiple_of(two_n0) {
            continue;
        }
        let n = total / two_n0;
        let wm = w.power(m);
        if c.element_of_word(wm.letters()) != c.identity() {
            continue;
        }
        let omega_n = BraidWord(w0.clone()).power(2 * n);
        if braids_equal(&wm, &omega_n, c, node_cap) == BraidEquality::True {
            return Some(2 * (m + n));
        }
    }
    None
}

pub const DEFAULT_MAX_POWER: usize = 64;

/// Finite-type Cartan data with a bipartite coloring; `true` is black.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteDynkin {
    cartan: CartanData,
    black: Vec<bool>,
}

impl BipartiteDynkin {
    pub fn new(cartan: CartanData, black: Vec<bool>) -> Result<Self> {
        let r = cartan.rank();
        if black.len() != r {
            return Err(Error::Domain(format!("coloring needs {r} entries")));
        }
        cartan.longest_element()?;
        for i in 1..=r {
            for j in i + 1..=r {
                if cartan.entry(i, j) != 0 && black[i - 1] == black[j - 1] {
                    return Err(Error::Domain(format!("adjacent vertices {i} and {j} share a color")));
                }
            }
        }
        Ok(BipartiteDynkin { cartan, black })
    }

    /// Coloring by parity of the distance from the lowest vertex of each
    /// component; that vertex is black.
    pub fn standard(cartan: CartanData) -> Result<Self> {
        let r = cartan.rank();
        let mut color: Vec<Option<bool>> = vec![None; r];
        for root in 0..r {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(true);
            let mut stack = vec![root];
            while let Some(i) = stack.pop() {
                for j in 0..r {
                    if j != i && cartan.entry(i + 1, j + 1) != 0 && color[j].is_none() {
                        color[j] = Some(!color[i].unwrap());
                        stack.push(j);
                    }
                }
            }
        }
        let black = color.into_iter().map(|c| c.unwrap()).collect();
        Self::new(cartan, black)
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn is_black(&self, i: usize) -> bool {
        self.black[i - 1]
    }

    /// `c(i)`: `+1` for black, `-1` for white.
    pub fn sign(&self, i: usize) -> i64 {
        if self.is_black(i) {
            1
        } else {
            -1
        }
    }

    /// `eps_ab = c(a) C_ba` off the diagonal.
    pub fn eps(&self, a: usize, b: usize) -> i64 {
        if a == b {
            0
        } else {
            self.sign(a) * self.cartan.entry(b, a)
        }
    }

    pub fn seed(&self) -> Result<Seed> {
        let r = self.cartan.rank();
        let ids = (1..=r).map(|i| VertexId::new(i, 0)).collect();
        let eps = Matrix::from_fn(r, r, |a, b| rat_int(self.eps(a + 1, b + 1)));
        let d = self.cartan.symmetrizer().iter().map(|&x| x as u64).collect();
        Seed::new(ids, vec![false; r], eps, d)
    }

    /// Products of the black and of the white simple reflections.
    pub fn black_white_words(&self) -> (BraidWord, BraidWord) {
        let r = self.cartan.rank();
        let black = (1..=r).filter(|&i| self.is_black(i)).collect();
        let white = (1..=r).filter(|&i| !self.is_black(i)).collect();
        (BraidWord(black), BraidWord(white))
    }
}

/// Seed on `I x I'` with vertex ids `(i, i')`.
pub fn square_product(l: &BipartiteDynkin, r: &BipartiteDynkin) -> Result<Seed> {
    let (n, m) = (l.cartan.rank(), r.cartan.rank());
    let ids: Vec<VertexId> = (1..=n)
        .flat_map(|i| (1..=m).map(move |ip| VertexId::new(i, ip)))
        .collect();
    let k = ids.len();
    let eps = Matrix::from_fn(k, k, |a, b| {
        let (x, y) = (ids[a], ids[b]);
        let e = if x.ordinal == y.ordinal {
            -r.sign(x.ordinal) * l.eps(x.level, y.level)
        } else if x.level == y.level {
            l.sign(x.level) * r.eps(x.ordinal, y.ordinal)
        } else {
            0
        };
        rat_int(e)
    });
    let d: Vec<u64> = ids
        .iter()
        .map(|v| (l.cartan.d(v.level) * r.cartan.d(v.ordinal)) as u64)
        .collect();
    let g = d.iter().fold(0u64, |a, &b| a.gcd(&b));
    Seed::new(ids, vec![false; k], eps, d.iter().map(|x| x / g).collect())
}

/// Black vertices of the square product: the two factor colors agree.
pub fn square_black(l: &BipartiteDynkin, r: &BipartiteDynkin, v: VertexId) -> bool {
    l.is_black(v.level) == r.is_black(v.ordinal)
}

/// Mutations at all black vertices, then all white ones, each in
/// lexicographic order.
pub fn zamolodchikov_tau(l: &BipartiteDynkin, r: &BipartiteDynkin, s: &Seed) -> Result<MutationScript> {
    let (black, white): (Vec<VertexId>, Vec<VertexId>) = s.vertices().iter().partition(|&&v| square_black(l, r, v));
    for class in [&black, &white] {
        for (x, &a) in class.iter().enumerate() {
            for &b in &class[x + 1..] {
                if !s.eps(a, b).is_none_or(|e| *e == rat_int(0)) {
                    return Err(Error::Verification(format!(
                        "same-colored vertices {a} and {b} are adjacent"
                    )));
                }
            }
        }
    }
    Ok(MutationScript::new(black.into_iter().chain(white).collect()))
}

/// Order of the Zamolodchikov transformation of `l [] r`.
pub fn za_order(l: &BipartiteDynkin, r: &BipartiteDynkin, max_power: usize) -> Result<OrderReport> {
    let s = square_product(l, r)?;
    let tau = zamolodchikov_tau(l, r, &s)?;
    let back = s.apply_script(&tau)?;
    if back != s {
        return Err(Error::Verification("tau does not preserve the square product".into()));
    }
    iterate_order(&s, max_power, |f| f.apply_steps(&tau.steps))
}

/// `(p, q)` with `p = w b w ...` and `q = b w b ...`, `n + 1` factors each.
pub fn delta_square_words(dynkin: &BipartiteDynkin, n: usize) -> (BraidWord, BraidWord) {
    let (b, w) = dynkin.black_white_words();
    let alt = |first: &BraidWord, second: &BraidWord| {
        (0..=n).fold(BraidWord::empty(), |acc, k| {
            acc.concat(if k % 2 == 0 { first } else { second })
        })
    };
    (alt(&w, &b), alt(&b, &w))
}

/// `2(h + n + 1) / gcd(h, n + 1)`.
pub fn delta_square_bound(h: usize, n: usize) -> usize {
    2 * (h + n + 1) / h.gcd(&(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;
    use num_traits::Signed;

    fn cart(name: &str) -> CartanData {
        CartanData::from_name(name).unwrap()
    }

    fn word(name: &str, s: &str) -> BraidWord {
        parse_braid(s, &cart(name)).unwrap()
    }

    fn v(i: usize, j: usize) -> VertexId {
        VertexId::new(i, j)
    }

    #[test]
    fn mgs_examples() {
        let s = maximal_green_sequence(&word("A1", "1 1 1 1"), &cart("A1")).unwrap();
        assert_eq!(s.steps, vec![v(1, 1), v(1, 2), v(1, 3), v(1, 1), v(1, 2), v(1, 1)]);
        assert!(maximal_green_sequence(&word("A1", "1"), &cart("A1"))
            .unwrap()
            .is_empty());

        let w = word("A3", "2 1 3 2 1 3 1 3 2 2 1");
        let s = maximal_green_sequence(&w, &cart("A3")).unwrap();
        let expected = [
            (2, 1),
            (2, 2),
            (2, 3),
            (1, 1),
            (1, 2),
            (1, 3),
            (3, 1),
            (3, 2),
            (2, 1),
            (2, 2),
            (1, 1),
            (1, 2),
            (3, 1),
            (1, 1),
            (2, 1),
        ];
        assert_eq!(s.steps, expected.iter().map(|&(i, j)| v(i, j)).collect::<Vec<_>>());
        let seed = conf_e_seed(&w, &cart("A3")).unwrap().unfrozen_part();
        assert_eq!(seed.len(), 8);
        assert!(check_green_sequence(&seed, &s.steps).unwrap().is_maximal_green());
    }

    #[test]
    fn a1_four_letters_colors_and_reversal() {
        let c = cart("A1");
        let w = word("A1", "1 1 1 1");
        let seed = conf_e_seed(&w, &c).unwrap().unfrozen_part();
        let mut f = FramedSeed::frame(&seed).unwrap();
        f.apply_steps(&[v(1, 1), v(1, 2), v(1, 3)]).unwrap();
        let colors: Vec<Color> = (1..=3).map(|j| f.vertex_color(v(1, j)).unwrap()).collect();
        assert_eq!(colors, vec![Color::Green, Color::Green, Color::Red]);
        f.apply_steps(&[v(1, 1), v(1, 2), v(1, 1)]).unwrap();
        let p = Matrix::from_i64(&[vec![0, 0, -1], vec![0, -1, 0], vec![-1, 0, 0]]);
        assert_eq!(f.c_matrix(), p);
    }

    #[test]
    fn dt_examples() {
        let a1 = cart("A1");
        let ds = dt_script(&BraidWord::empty(), &word("A1", "1 1 1 1"), &a1).unwrap();
        assert_eq!(ds.script.steps.len(), 6);
        dt_script(&BraidWord::empty(), &word("A2", "1 2 1"), &cart("A2")).unwrap();
        let ds = dt_script(&word("A1", "1"), &word("A1", "1"), &a1).unwrap();
        assert_eq!(ds.script.steps, vec![v(1, 1)]);
        assert_eq!(ds.sigma[&v(1, 1)], v(1, 1));
        assert!(dt_script(&BraidWord::empty(), &BraidWord::empty(), &a1).is_err());
    }

    #[test]
    fn dt_orders() {
        let a1 = cart("A1");
        let ds = dt_script(&BraidWord::empty(), &word("A1", "1 1"), &a1).unwrap();
        assert_eq!(dt_order(&ds, 10).unwrap().order, Some(2));
        assert_eq!(
            periodicity_bound(&BraidWord::empty(), &word("A1", "1 1"), &a1, 1000),
            Some(4)
        );
        let w = word("A1", "1 1 1");
        assert_eq!(periodicity_bound(&BraidWord::empty(), &w, &a1, 1000), Some(10));
        let ds = dt_script(&BraidWord::empty(), &w, &a1).unwrap();
        let order = dt_order(&ds, 10).unwrap().order.unwrap();
        assert_eq!(10 % order, 0);
        assert_eq!(order, 5);
    }

    #[test]
    fn square_products() {
        let a2 = BipartiteDynkin::standard(cart("A2")).unwrap();
        let a1 = BipartiteDynkin::standard(cart("A1")).unwrap();
        let s = square_product(&a2, &a1).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.eps(v(1, 1), v(2, 1)).unwrap().abs(), rat_int(1));
        let s = square_product(&a1, &a1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(za_order(&a2, &a1, 10).unwrap().order, Some(5));
        let o = za_order(&a1, &a1, 10).unwrap().order.unwrap();
        assert_eq!(4 % o, 0);
        let a2b = BipartiteDynkin::standard(cart("A2")).unwrap();
        let o = za_order(&a2, &a2b, 12).unwrap().order.unwrap();
        assert_eq!(6 % o, 0);
    }

    #[test]
    fn d4_square_a3_shape() {
        let d4 = BipartiteDynkin::standard(cart("D4")).unwrap();
        let a3 = BipartiteDynkin::standard(cart("A3")).unwrap();
        let s = square_product(&d4, &a3).unwrap();
        assert_eq!(s.len(), 12);
        let degree = |x: VertexId| {
            s.vertices()
                .iter()
                .filter(|&&y| *s.eps(x, y).unwrap() != rat_int(0))
                .count()
        };
        for ip in 1..=3 {
            let outer: Vec<usize> = [1, 3, 4].iter().map(|&i| degree(v(i, ip))).collect();
            assert!(outer.iter().all(|&x| x == outer[0]));
        }
        let total: usize = s.vertices().iter().map(|&x| degree(x)).sum();
        assert_eq!(total, 2 * 17);
    }

    #[test]
    fn bad_coloring_rejected() {
        assert!(BipartiteDynkin::new(cart("A2"), vec![true, true]).is_err());
    }

    #[test]
    fn delta_square_dt_orders() {
        for (name, n) in [("A1", 1), ("A2", 1), ("A2", 2), ("A3", 1), ("B2", 1)] {
            let c = cart(name);
            let dy = BipartiteDynkin::standard(c.clone()).unwrap();
            let (p, q) = delta_square_words(&dy, n);
            let ds = dt_script(&p, &q, &c).unwrap();
            let bound = delta_square_bound(c.coxeter_number().unwrap(), n);
            let order = dt_order(&ds, bound).unwrap().order.expect("order within bound");
            assert_eq!(bound % order, 0, "{name} n={n}");
        }
    }

    #[test]
    fn colors_change_only_on_the_mutated_level() {
        let c = cart("A3");
        let w = word("A3", "2 1 3 2 1 3 1 3 2 2 1");
        let seed = conf_e_seed(&w, &c).unwrap().unfrozen_part();
        let mut f = FramedSeed::frame(&seed).unwrap();
        for (k, (&i, t)) in w.letters().iter().zip(t_values(&w)).enumerate() {
            let before: Vec<Color> = (0..f.len()).map(|a| f.color_index(a)).collect();
            for j in 1..=t {
                f.mutate(v(i, j)).unwrap();
            }
            for (a, &vx) in seed.vertices().iter().enumerate() {
                if vx.level != i {
                    assert_eq!(f.color_index(a), before[a], "L_{} changed {vx}", k + 1);
                }
            }
        }
    }

    #[test]
    fn dt_order_is_constant_on_braid_classes() {
        let c = cart("A2");
        for start in ["1 2 1 1", "1 2 1 2", "2 1 2 1 2"] {
            let w = word("A2", start);
            let class = crate::braid::orbit(&w, &c, 1000).unwrap();
            let orders: Vec<Option<usize>> = class
                .iter()
                .map(|x| {
                    dt_order(&dt_script(&BraidWord::empty(), x, &c).unwrap(), 64)
                        .unwrap()
                        .order
                })
                .collect();
            assert!(
                orders.iter().all(|o| *o == orders[0] && o.is_some()),
                "{start}: {orders:?}"
            );
        }
    }
}
