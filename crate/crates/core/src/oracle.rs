//! Brute-force point counts in type A over `GF(q)` with `q <= 4`, by
//! enumerating chains of complete flags in `GF(q)^{r+1}`.
//!
//! A subspace is stored as the bitmask of the vectors it contains.
//! Intersection is a bitwise and. With `q^{r+1} <= 64` every subspace fits
//! in a `u64`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// Largest total word length the oracle accepts.
pub const MAX_WORD_LENGTH: usize = 5;

/// GF(q) for q in {2, 3, 4}; elements are `0..q`. For GF(4) the elements
/// `2` and `3` are `x` and `x + 1` with `x^2 = x + 1`.
#[derive(Clone, Copy, Debug)]
struct Field {
    q: usize,
}

impl Field {
    fn new(q: u32) -> Result<Field> {
        match q {
            2..=4 => Ok(Field { q: q as usize }),
            _ => Err(Error::Domain(format!("oracle supports q in {{2, 3, 4}}, got {q}"))),
        }
    }

    fn add(self, a: usize, b: usize) -> usize {
        match self.q {
            3 => (a + b) % 3,
            _ => a ^ b,
        }
    }

    fn mul(self, a: usize, b: usize) -> usize {
        const GF4: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        match self.q {
            4 => GF4[a][b],
            q => (a * b) % q,
        }
    }
}

/// Vectors of `GF(q)^n` are indexed by their base-`q` digits.
struct Space {
    field: Field,
    n: usize,
    size: usize,
}

impl Space {
    fn digits(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        let mut v = v;
        for _ in 0..self.n {
            out.push(v % self.field.q);
            v /= self.field.q;
        }
        out
    }

    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &x| acc * self.field.q + x)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.digits(a), self.digits(b));
        self.index(
            &x.iter()
                .zip(&y)
                .map(|(&s, &t)| self.field.add(s, t))
                .collect::<Vec<_>>(),
        )
    }

    fn scale(&self, k: usize, a: usize) -> usize {
        self.index(&self.digits(a).iter().map(|&s| self.field.mul(k, s)).collect::<Vec<_>>())
    }

    fn span(&self, gens: &[usize]) -> u64 {
        gens.iter().fold(1u64, |acc, &g| self.extend(acc, g))
    }

    /// The span of `subspace` and `v`.
    fn extend(&self, subspace: u64, v: usize) -> u64 {
        let mut out = subspace;
        for m in (0..self.size).filter(|&m| subspace & (1u64 << m) != 0) {
            for k in 1..self.field.q {
                out |= 1u64 << self.add(m, self.scale(k, v));
            }
        }
        out
    }

    #[cfg(test)]
    fn dim(&self, subspace: u64) -> usize {
        let mut count = subspace.count_ones() as usize;
        let mut d = 0;
        while count > 1 {
            count /= self.field.q;
            d += 1;
        }
        d
    }

    /// Every subspace, grouped by dimension.
    fn subspaces(&self) -> Vec<Vec<u64>> {
        let mut by_dim: Vec<Vec<u64>> = vec![Vec::new(); self.n + 1];
        by_dim[0].push(1);
        for d in 1..=self.n {
            let mut found: Vec<u64> = Vec::new();
            for &lower in &by_dim[d - 1] {
                for v in 1..self.size {
                    if lower & (1u64 << v) != 0 {
                        continue;
                    }
                    found.push(self.extend(lower, v));
                }
            }
            found.sort_unstable();
            found.dedup();
            by_dim[d] = found;
        }
        by_dim
    }
}

/// `|Conf(F_q)|` for the pair `(b, d)` in type `A_r`, `r <= 2`.
///
/// The left edge is fixed to the standard flag on top and the opposite
/// standard flag on the bottom. A top letter `k` moves a flag to one that
/// differs exactly in its `k`-dimensional subspace. Bottom flags are
/// positions relative to the opposite Borel, so a bottom letter `k` changes
/// the subspace of dimension `r + 1 - k`. The ends must be
/// transverse, and the raw count is multiplied by `(q - 1)^r` for the
/// decoration of the last flag.
pub fn brute_force_f(r: usize, b: &BraidWord, d: &BraidWord, q: u32) -> Result<BigInt> {
    if !(1..=2).contains(&r) {
        return Err(Error::Domain(format!("oracle supports ranks 1 and 2, got {r}")));
    }
    let field = Field::new(q)?;
    if b.len() + d.len() > MAX_WORD_LENGTH {
        return Err(Error::Budget(format!(
            "total word length {} exceeds the oracle budget {MAX_WORD_LENGTH}",
            b.len() + d.len()
        )));
    }
    for &i in b.letters().iter().chain(d.letters()) {
        if i == 0 || i > r {
            return Err(Error::IndexOutOfRange(format!("letter {i} not in 1..={r}")));
        }
    }
    let n = r + 1;
    let space = Space {
        field,
        n,
        size: field.q.pow(n as u32),
    };
    let subspaces = space.subspaces();

    // Flags as (U_1, ..., U_r).
    let mut flags: Vec<Vec<u64>> = subspaces[1].iter().map(|&u| vec![u]).collect();
    for level in &subspaces[2..=r] {
        flags = flags
            .into_iter()
            .flat_map(|f| {
                let last = *f.last().expect("nonempty flag");
                level
                    .iter()
                    .filter(move |&&u| u & last == last)
                    .map(move |&u| {
                        let mut g = f.clone();
                        g.push(u);
                        g
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    let id: HashMap<&Vec<u64>, usize> = flags.iter().enumerate().map(|(k, f)| (f, k)).collect();

    let unit = |k: usize| -> usize {
        let mut digits = vec![0; n];
        digits[k] = 1;
        space.index(&digits)
    };
    let standard: Vec<u64> = (1..=r)
        .map(|k| space.span(&(0..k).map(unit).collect::<Vec<_>>()))
        .collect();
    let opposite: Vec<u64> = (1..=r)
        .map(|k| space.span(&(n - k..n).map(unit).collect::<Vec<_>>()))
        .collect();

    let differs_only_at = |f: &[u64], g: &[u64], k: usize| (0..r).all(|m| (m == k - 1) != (f[m] == g[m]));
    let walk = |start: &Vec<u64>, word: &BraidWord, dual: bool| -> Vec<BigInt> {
        let mut counts = vec![BigInt::from(0); flags.len()];
        counts[id[start]] = BigInt::from(1);
        for &k in word.letters() {
            let k = if dual { r + 1 - k } else { k };
            let mut next = vec![BigInt::from(0); flags.len()];
            for (a, count) in counts.iter().enumerate() {
                if *count == BigInt::from(0) {
                    continue;
                }
                for (bi, g) in flags.iter().enumerate() {
                    if differs_only_at(&flags[a], g, k) {
                        next[bi] += count;
                    }
                }
            }
            counts = next;
        }
        counts
    };
    let top = walk(&standard, b, false);
    let bottom = walk(&opposite, d, true);

    let zero_vector = 1u64;
    let transverse = |f: &[u64], g: &[u64]| (1..=r).all(|i| f[i - 1] & g[r - i] == zero_vector);
    let mut raw = BigInt::from(0);
    for (a, ta) in top.iter().enumerate() {
        if *ta == BigInt::from(0) {
            continue;
        }
        for (bi, tb) in bottom.iter().enumerate() {
            if *tb != BigInt::from(0) && transverse(&flags[a], &flags[bi]) {
                raw += ta * tb;
            }
        }
    }
    Ok(raw * BigInt::from(q - 1).pow(r as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[usize]) -> BraidWord {
        BraidWord(letters.to_vec())
    }

    #[test]
    fn gf4_is_a_field() {
        let f = Field::new(4).unwrap();
        for a in 1..4 {
            assert_eq!((1..4).filter(|&b| f.mul(a, b) == 1).count(), 1);
            for b in 0..4 {
                for c in 0..4 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn flag_counts() {
        for q in 2..=4u32 {
            let field = Field::new(q).unwrap();
            let qs = q as usize;
            let space = Space {
                field,
                n: 3,
                size: qs.pow(3),
            };
            let subs = space.subspaces();
            let lines = qs * qs + qs + 1;
            assert_eq!(subs.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, lines, lines, 1]);
            assert!(subs[2].iter().all(|&p| space.dim(p) == 2));
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(brute_force_f(1, &w(&[]), &w(&[1, 1, 1]), 2).unwrap(), BigInt::from(5));
        assert_eq!(brute_force_f(1, &w(&[]), &w(&[]), 3).unwrap(), BigInt::from(2));
        // Value of the dynamic program at q = 2, frozen.
        assert_eq!(brute_force_f(2, &w(&[]), &w(&[1, 2]), 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn rejects_out_of_budget() {
        assert!(matches!(
            brute_force_f(1, &w(&[1; 3]), &w(&[1; 3]), 2),
            Err(Error::Budget(_))
        ));
        assert!(brute_force_f(3, &w(&[]), &w(&[]), 2).is_err());
        assert!(brute_force_f(1, &w(&[]), &w(&[]), 5).is_err());
        assert!(brute_force_f(1, &w(&[2]), &w(&[]), 2).is_err());
    }

    #[test]
    fn agrees_with_dp_over_gf4() {
        use crate::cartan_weyl::CartanData;
        use crate::counting::count_f;
        let c = CartanData::from_name("A2").unwrap();
        let words = [vec![], vec![1], vec![2, 1], vec![1, 2, 1], vec![2, 2]];
        for b in &words {
            for d in &words {
                if b.len() + d.len() > 4 {
                    continue;
                }
                let f = count_f(&c, &w(b), &w(d)).unwrap().f;
                assert_eq!(
                    brute_force_f(2, &w(b), &w(d), 4).unwrap(),
                    f.eval(&BigInt::from(4)),
                    "{b:?} {d:?}"
                );
            }
        }
    }
}
