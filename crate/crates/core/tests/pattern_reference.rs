//! Independent reference for the type A point count: enumerate every subset
//! of triangles where the state moves, walking a triangulation left to
//! right. Bottom letters act on the left of the permutation and top letters
//! on the right. The result must not depend on the triangulation.

use dbs_core::counting::count_f;
use dbs_core::diagram::Side;
use dbs_core::{BraidWord, CartanData, Polynomial};

/// `sum` over all move patterns, i.e. `f / (q - 1)^r`.
fn reference_sum(n: usize, top: &[usize], bottom: &[usize], pattern: &[Side]) -> Polynomial {
    let (mut ti, mut bi) = (0, 0);
    let cells: Vec<(Side, usize)> = pattern
        .iter()
        .map(|&s| match s {
            Side::Top => {
                ti += 1;
                (s, top[ti - 1])
            }
            Side::Bottom => {
                bi += 1;
                (s, bottom[bi - 1])
            }
        })
        .collect();
    let identity: Vec<usize> = (0..n).collect();
    let q = Polynomial::q();
    let qm1 = Polynomial::q_minus_1();
    let mut total = Polynomial::zero();
    'subsets: for mask in 0u32..(1 << cells.len()) {
        let mut u = identity.clone();
        let mut term = Polynomial::one();
        for (pos, &(side, k)) in cells.iter().enumerate() {
            let moves = mask & (1 << pos) != 0;
            let descent = match side {
                Side::Bottom => u[k - 1] > u[k],
                Side::Top => {
                    let at = |x: usize| u.iter().position(|&y| y == x).unwrap();
                    at(k - 1) > at(k)
                }
            };
            if !moves {
                if descent {
                    continue 'subsets;
                }
                term = &term * &qm1;
                continue;
            }
            term = if descent { &term * &q } else { term };
            match side {
                Side::Bottom => u.swap(k - 1, k),
                Side::Top => {
                    for x in u.iter_mut() {
                        if *x == k - 1 {
                            *x = k;
                        } else if *x == k {
                            *x = k - 1;
                        }
                    }
                }
            }
        }
        if u == identity {
            total = &total + &term;
        }
    }
    total
}

/// Every interleaving of `a` top cells and `b` bottom cells.
fn patterns(a: usize, b: usize) -> Vec<Vec<Side>> {
    if a == 0 && b == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    if a > 0 {
        for mut p in patterns(a - 1, b) {
            p.insert(0, Side::Top);
            out.push(p);
        }
    }
    if b > 0 {
        for mut p in patterns(a, b - 1) {
            p.insert(0, Side::Bottom);
            out.push(p);
        }
    }
    out
}

fn all_words(rank: usize, len: usize) -> Vec<Vec<usize>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|w| {
                (1..=rank).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect()
    })
}

#[test]
fn reference_reproduces_the_trefoil() {
    let sum = reference_sum(2, &[], &[1, 1, 1], &[Side::Bottom; 3]);
    // f = (q - 1) * sum, with sum = (q - 1)^3 + 2q(q - 1).
    assert_eq!(
        sum,
        &Polynomial::from_i64(&[-1, 3, -3, 1]) + &Polynomial::from_i64(&[0, -2, 2])
    );
}

#[test]
fn reference_is_independent_of_the_pattern_and_matches_the_dp() {
    for (rank, max_total) in [(1usize, 5usize), (2, 4), (3, 3)] {
        let c = CartanData::from_name(&format!("A{rank}")).unwrap();
        let scale = Polynomial::q_minus_1().pow(rank);
        for total in 0..=max_total {
            for lt in 0..=total {
                for top in all_words(rank, lt) {
                    for bottom in all_words(rank, total - lt) {
                        let dp = count_f(&c, &BraidWord(top.clone()), &BraidWord(bottom.clone()))
                            .unwrap()
                            .f;
                        for p in patterns(lt, total - lt) {
                            let f = &reference_sum(rank + 1, &top, &bottom, &p) * &scale;
                            assert_eq!(f, dp, "A{rank} top {top:?} bottom {bottom:?} pattern {p:?}");
                        }
                    }
                }
            }
        }
    }
}
