//! Point counts `f(q)` and `g(q) = f(q) / (q - 1)^{2 r}` of the decorated
//! and undecorated cells, by a dynamic program over Weyl group states.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::cartan_weyl::{CartanData, WeylElement};
use crate::error::{Error, Result};
use crate::exact_math::{poly_divide_by_q_minus_1_power, Polynomial, RationalFunction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountResult {
    pub f: Polynomial,
    pub g: RationalFunction,
    pub r_tilde: usize,
    pub word_used: BraidWord,
}

/// Weight of a triangle with letter `i` taking the state `u` to `v`.
pub fn step_weight(c: &CartanData, i: usize, u: &WeylElement, v: &WeylElement) -> Polynomial {
    let rises = c.length_increases_on_left(i, u);
    let siu = c.left_multiply(i, u);
    if *v == siu {
        if rises {
            Polynomial::one()
        } else {
            Polynomial::q()
        }
    } else if v == u && rises {
        Polynomial::q_minus_1()
    } else {
        Polynomial::zero()
    }
}

/// `f` and `g` for the pair `(b, d)`, computed on the word `d` followed by
/// the reverse of `b`.
pub fn count_f(c: &CartanData, b: &BraidWord, d: &BraidWord) -> Result<CountResult> {
    for &i in b.letters().iter().chain(d.letters()) {
        c.check_index(i)?;
    }
    let word = d.concat(&b.reverse());
    let mut states: HashMap<WeylElement, Polynomial> = HashMap::new();
    states.insert(c.identity(), Polynomial::one());
    let q = Polynomial::q();
    let qm1 = Polynomial::q_minus_1();
    for &i in word.letters() {
        let mut next: HashMap<WeylElement, Polynomial> = HashMap::with_capacity(states.len() * 2);
        for (u, weight) in &states {
            let siu = c.left_multiply(i, u);
            let moved = if c.length_increases_on_left(i, u) {
                let stay = next.entry(u.clone()).or_default();
                *stay = &*stay + &(weight * &qm1);
                weight.clone()
            } else {
                weight * &q
            };
            let slot = next.entry(siu).or_default();
            *slot = &*slot + &moved;
        }
        states = next;
    }
    let r_tilde = c.levels();
    let sum = states.remove(&c.identity()).unwrap_or_default();
    let f = &sum * &qm1.pow(r_tilde);
    let g = poly_divide_by_q_minus_1_power(&f, 2 * r_tilde);
    Ok(CountResult {
        f,
        g,
        r_tilde,
        word_used: word,
    })
}

/// `1 - ord_{q=1} g`; conjecturally the number of link components.
pub fn component_lower_bound(g: &RationalFunction) -> Result<i64> {
    if g.is_zero() {
        return Err(Error::Domain("component count of the zero function".into()));
    }
    Ok(1 - g.order_at_one()?)
}
