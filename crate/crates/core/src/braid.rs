//! Positive braid words: parsing, reversal, braid moves and a bounded
//! equality search.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan_weyl::{BraidExponent, CartanData};
use crate::error::{Error, Result};

/// Word in the simple reflections; letters are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BraidWord(pub Vec<usize>);

impl BraidWord {
    /// Checks every letter against the rank of `c`.
    pub fn new(letters: Vec<usize>, c: &CartanData) -> Result<BraidWord> {
        for &i in &letters {
            c.check_index(i)?;
        }
        Ok(BraidWord(letters))
    }

    pub fn empty() -> BraidWord {
        BraidWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `b^o`: the letters in reverse order.
    pub fn reverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn power(&self, k: usize) -> BraidWord {
        BraidWord(self.0.repeat(k))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses `"1 2 1"`, `"s1,s2,s1"` and mixtures; the empty string and `"e"`
/// give the empty word.
pub fn parse_braid(text: &str, c: &CartanData) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split(|ch: char| ch.is_whitespace() || ch == ',') {
        if tok.is_empty() {
            continue;
        }
        if tok == "e" && text.trim() == "e" {
            break;
        }
        let digits = tok.strip_prefix(['s', 'S']).unwrap_or(tok);
        let i: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("invalid braid letter {tok:?}")))?;
        c.check_index(i)?;
        letters.push(i);
    }
    Ok(BraidWord(letters))
}

/// Alternation `i j i ...` of length `m`.
fn alternation(i: usize, j: usize, m: usize) -> Vec<usize> {
    (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

/// Length `m_ij` of the braid move starting at `pos`, if one applies.
pub fn braid_move_length(word: &[usize], pos: usize, c: &CartanData) -> Option<usize> {
    let i = *word.get(pos)?;
    let j = *word.get(pos + 1)?;
    if i == j {
        return None;
    }
    let BraidExponent::Finite(m) = c.braid_exponent(i, j).ok()? else {
        return None;
    };
    (pos + m <= word.len() && word[pos..pos + m] == alternation(i, j, m)[..]).then_some(m)
}

/// Replaces the alternation of length `m_ij` at `pos` by the one starting
/// with the other letter.
pub fn apply_braid_move(b: &BraidWord, pos: usize, c: &CartanData) -> Result<BraidWord> {
    let w = &b.0;
    if pos + 1 >= w.len() || w[pos] == w[pos + 1] {
        return Err(Error::NoBraidMove(format!("no alternating pair at position {pos}")));
    }
    let (i, j) = (w[pos], w[pos + 1]);
    let m = match c.braid_exponent(i, j)? {
        BraidExponent::Finite(m) => m,
        BraidExponent::Infinite => {
            return Err(Error::NoBraidMove(format!("m_{i}{j} is infinite")));
        }
    };
    if braid_move_length(w, pos, c).is_none() {
        return Err(Error::NoBraidMove(format!(
            "letters at position {pos} do not alternate {i},{j} for {m} steps"
        )));
    }
    let mut out = w.clone();
    out[pos..pos + m].copy_from_slice(&alternation(j, i, m));
    Ok(BraidWord(out))
}

/// All words reachable from `b` by one braid move.
pub fn braid_neighbors(b: &BraidWord, c: &CartanData) -> Vec<BraidWord> {
    (0..b.len())
        .filter(|&p| braid_move_length(&b.0, p, c).is_some())
        .map(|p| apply_braid_move(b, p, c).expect("move checked"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidEquality {
    True,
    False,
    Undecided,
}

impl fmt::Display for BraidEquality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BraidEquality::True => "true",
            BraidEquality::False => "false",
            BraidEquality::Undecided => "undecided",
        })
    }
}

/// Breadth-first search over the braid-move graph from `a`.
pub fn braids_equal(a: &BraidWord, b: &BraidWord, c: &CartanData, node_cap: usize) -> BraidEquality {
    if a.len() != b.len() {
        return BraidEquality::False;
    }
    match braid_orbit(a, c, node_cap, Some(b)) {
        OrbitSearch::Found => BraidEquality::True,
        OrbitSearch::Complete(_) => BraidEquality::False,
        OrbitSearch::Capped => BraidEquality::Undecided,
    }
}

enum OrbitSearch {
    Found,
    Complete(Vec<BraidWord>),
    Capped,
}

fn braid_orbit(start: &BraidWord, c: &CartanData, cap: usize, target: Option<&BraidWord>) -> OrbitSearch {
    let mut seen: HashSet<BraidWord> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(w) = queue.pop_front() {
        if Some(&w) == target {
            return OrbitSearch::Found;
        }
        order.push(w.clone());
        for n in braid_neighbors(&w, c) {
            if seen.insert(n.clone()) {
                if seen.len() > cap {
                    return OrbitSearch::Capped;
                }
                queue.push_back(n);
            }
        }
    }
    OrbitSearch::Complete(order)
}

/// Every word braid-equivalent to `b`, in BFS order, or `None` past the cap.
pub fn orbit(b: &BraidWord, c: &CartanData, node_cap: usize) -> Option<Vec<BraidWord>> {
    match braid_orbit(b, c, node_cap, None) {
        OrbitSearch::Complete(v) => Some(v),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cart(name: &str) -> CartanData {
        CartanData::from_name(name).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_braid("1 1 1", &cart("A1")).unwrap().0, vec![1, 1, 1]);
        assert_eq!(parse_braid("s2, s1, s3", &cart("A3")).unwrap().0, vec![2, 1, 3]);
        assert!(parse_braid("", &cart("A3")).unwrap().is_empty());
        assert!(parse_braid("e", &cart("A3")).unwrap().is_empty());
        let err = parse_braid("4", &cart("A2")).unwrap_err();
        assert!(err.to_string().contains("index out of range"), "{err}");
        assert!(parse_braid("x", &cart("A2")).is_err());
        assert!(parse_braid("0", &cart("A2")).is_err());
    }

    #[test]
    fn reversal() {
        assert_eq!(BraidWord(vec![1, 2, 3]).reverse().0, vec![3, 2, 1]);
        assert!(BraidWord::empty().reverse().is_empty());
        assert_eq!(BraidWord(vec![1, 1]).reverse().0, vec![1, 1]);
    }

    #[test]
    fn moves() {
        let a2 = cart("A2");
        assert_eq!(
            apply_braid_move(&BraidWord(vec![1, 2, 1]), 0, &a2).unwrap().0,
            vec![2, 1, 2]
        );
        let a1a1 = cart("A1xA1");
        assert_eq!(
            apply_braid_move(&BraidWord(vec![1, 2]), 0, &a1a1).unwrap().0,
            vec![2, 1]
        );
        let b2 = cart("B2");
        assert_eq!(
            apply_braid_move(&BraidWord(vec![1, 2, 1, 2]), 0, &b2).unwrap().0,
            vec![2, 1, 2, 1]
        );
        assert!(apply_braid_move(&BraidWord(vec![1, 2, 2]), 0, &a2).is_err());
        let aff = CartanData::from_json_str(r#"{"C":[[2,-2],[-2,2]],"D":[1,1]}"#).unwrap();
        assert!(apply_braid_move(&BraidWord(vec![1, 2, 1, 2]), 0, &aff).is_err());
    }

    #[test]
    fn equality_search() {
        let a2 = cart("A2");
        let eq = braids_equal(&BraidWord(vec![1, 2, 1]), &BraidWord(vec![2, 1, 2]), &a2, 1000);
        assert_eq!(eq, BraidEquality::True);
        let a1a1 = cart("A1xA1");
        let eq = braids_equal(&BraidWord(vec![1, 1]), &BraidWord(vec![2, 2]), &a1a1, 1000);
        assert_eq!(eq, BraidEquality::False);
        let c3 = BraidWord(vec![1, 2]).power(3);
        let w02 = BraidWord(vec![1, 2, 1]).power(2);
        assert_eq!(braids_equal(&c3, &w02, &a2, 100_000), BraidEquality::True);
        assert_eq!(braids_equal(&c3, &w02, &a2, 1), BraidEquality::Undecided);
        assert_eq!(braids_equal(&c3, &BraidWord(vec![1]), &a2, 10), BraidEquality::False);
    }
}
