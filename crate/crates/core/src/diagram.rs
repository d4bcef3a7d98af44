//! Trapezoid triangulations, string diagrams, seeds assembled from nodes,
//! diagonal flips, braid moves on a base and the transposition symmetry.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{braid_move_length, BraidWord};
use crate::cartan_weyl::{BraidExponent, CartanData};
use crate::error::{Error, Result};
use crate::exact_math::{rat, Matrix};
use crate::seed::{MutationScript, Seed, VertexId};

/// Which base carries a triangle's labeled edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Top,
    Bottom,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }

    fn symbol(self) -> char {
        match self {
            Side::Top => 'T',
            Side::Bottom => 'B',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Top => "top",
            Side::Bottom => "bottom",
        })
    }
}

/// Parses a pattern such as `"TBTB"` (case-insensitive).
pub fn parse_pattern(text: &str) -> Result<Vec<Side>> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c.to_ascii_uppercase() {
            'T' => Ok(Side::Top),
            'B' => Ok(Side::Bottom),
            _ => Err(Error::Parse(format!("invalid pattern symbol {c:?}, expected T or B"))),
        })
        .collect()
}

pub fn pattern_string(pattern: &[Side]) -> String {
    pattern.iter().map(|s| s.symbol()).collect()
}

/// Top word, bottom word and the left-to-right order of their triangles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangulation {
    top: BraidWord,
    bottom: BraidWord,
    pattern: Vec<Side>,
}

pub fn build_triangulation(top: BraidWord, bottom: BraidWord, pattern: Vec<Side>) -> Result<Triangulation> {
    let tops = pattern.iter().filter(|&&s| s == Side::Top).count();
    if tops != top.len() || pattern.len() - tops != bottom.len() {
        return Err(Error::WrongTriangulation);
    }
    Ok(Triangulation { top, bottom, pattern })
}

/// JSON form: `{"top":[...],"bottom":[...],"pattern":"TB..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
    pub pattern: String,
}

impl Triangulation {
    /// The unique triangulation with every triangle on the bottom base.
    pub fn all_bottom(word: BraidWord) -> Triangulation {
        let pattern = vec![Side::Bottom; word.len()];
        Triangulation {
            top: BraidWord::empty(),
            bottom: word,
            pattern,
        }
    }

    pub fn top(&self) -> &BraidWord {
        &self.top
    }

    pub fn bottom(&self) -> &BraidWord {
        &self.bottom
    }

    pub fn pattern(&self) -> &[Side] {
        &self.pattern
    }

    pub fn word(&self, side: Side) -> &BraidWord {
        match side {
            Side::Top => &self.top,
            Side::Bottom => &self.bottom,
        }
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }

    /// `(side, letter)` of every triangle, left to right.
    pub fn triangles(&self) -> Vec<(Side, usize)> {
        let (mut t, mut b) = (0, 0);
        self.pattern
            .iter()
            .map(|&s| match s {
                Side::Top => {
                    t += 1;
                    (s, self.top.0[t - 1])
                }
                Side::Bottom => {
                    b += 1;
                    (s, self.bottom.0[b - 1])
                }
            })
            .collect()
    }

    /// Pattern positions of the triangles on `side`, in word order.
    pub fn positions_on(&self, side: Side) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.pattern[p] == side).collect()
    }

    pub fn to_json(&self) -> TriangulationJson {
        TriangulationJson {
            top: self.top.0.clone(),
            bottom: self.bottom.0.clone(),
            pattern: pattern_string(&self.pattern),
        }
    }

    pub fn from_json(j: &TriangulationJson, c: &CartanData) -> Result<Triangulation> {
        build_triangulation(
            BraidWord::new(j.top.clone(), c)?,
            BraidWord::new(j.bottom.clone(), c)?,
            parse_pattern(&j.pattern)?,
        )
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "top [{}] bottom [{}] pattern {}",
            self.top,
            self.bottom,
            pattern_string(&self.pattern)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Node {
    /// Triangle index in the pattern.
    pub position: usize,
    pub level: usize,
    /// `+1` for a bottom triangle, `-1` for a top one.
    pub sign: i8,
}

/// Segment of a level between consecutive nodes. `None` ends are open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramString {
    pub id: VertexId,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl DiagramString {
    pub fn is_closed(&self) -> bool {
        self.left.is_some() && self.right.is_some()
    }

    /// Whether `p` lies strictly inside the string.
    pub fn covers(&self, p: usize) -> bool {
        self.left.is_none_or(|l| l < p) && self.right.is_none_or(|r| p < r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringDiagram {
    nodes: Vec<Node>,
    strings: Vec<Vec<DiagramString>>,
}

impl StringDiagram {
    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn levels(&self) -> usize {
        self.strings.len()
    }

    /// Strings on a 1-based level, left to right.
    pub fn strings_on(&self, level: usize) -> &[DiagramString] {
        &self.strings[level - 1]
    }

    pub fn strings(&self) -> impl Iterator<Item = &DiagramString> {
        self.strings.iter().flatten()
    }

    pub fn closed_strings(&self) -> Vec<VertexId> {
        self.strings().filter(|s| s.is_closed()).map(|s| s.id).collect()
    }

    /// Number of nodes on a 1-based level.
    pub fn node_count(&self, level: usize) -> usize {
        self.strings[level - 1].len() - 1
    }

    fn string_covering(&self, level: usize, p: usize) -> Result<&DiagramString> {
        let mut hits = self.strings[level - 1].iter().filter(|s| s.covers(p));
        match (hits.next(), hits.next()) {
            (Some(s), None) => Ok(s),
            _ => Err(Error::Domain(format!(
                "no unique string on level {level} over triangle {p}"
            ))),
        }
    }
}

pub fn string_diagram(t: &Triangulation, c: &CartanData) -> Result<StringDiagram> {
    let mut nodes = Vec::with_capacity(t.len());
    for (p, (side, letter)) in t.triangles().into_iter().enumerate() {
        c.check_index(letter)?;
        let sign = if side == Side::Bottom { 1 } else { -1 };
        nodes.push(Node {
            position: p,
            level: letter,
            sign,
        });
    }
    let strings = (1..=c.levels())
        .map(|lev| {
            let pos: Vec<usize> = nodes.iter().filter(|n| n.level == lev).map(|n| n.position).collect();
            (0..=pos.len())
                .map(|j| DiagramString {
                    id: VertexId::new(lev, j),
                    left: j.checked_sub(1).map(|k| pos[k]),
                    right: pos.get(j).copied(),
                })
                .collect()
        })
        .collect();
    Ok(StringDiagram { nodes, strings })
}

/// Sums the node contributions. Unfrozen vertices are the closed strings.
pub fn seed_from_diagram(sd: &StringDiagram, c: &CartanData) -> Result<Seed> {
    let ids: Vec<VertexId> = sd.strings().map(|s| s.id).collect();
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let n = ids.len();
    let mut eps = Matrix::zeros(n, n);
    let mut add = |a: usize, b: usize, num: i64, den: i64| {
        let v = eps.get(a, b) + rat(num, den);
        eps.set(a, b, v);
    };
    let mut seen = vec![0usize; sd.levels()];
    for node in sd.nodes() {
        let i = node.level;
        let k = seen[i - 1];
        seen[i - 1] += 1;
        let s = i64::from(node.sign);
        let a = index[&VertexId::new(i, k)];
        let b = index[&VertexId::new(i, k + 1)];
        add(a, b, -s, 1);
        add(b, a, s, 1);
        for j in (1..=sd.levels()).filter(|&j| j != i) {
            let (cij, cji) = (c.entry(i, j), c.entry(j, i));
            if cij == 0 && cji == 0 {
                continue;
            }
            let cc = index[&sd.string_covering(j, node.position)?.id];
            add(a, cc, -s * cji, 2);
            add(b, cc, s * cji, 2);
            add(cc, a, s * cij, 2);
            add(cc, b, -s * cij, 2);
        }
    }
    let frozen = sd.strings().map(|s| !s.is_closed()).collect();
    let d = ids.iter().map(|v| c.d(v.level) as u64).collect();
    Seed::new(ids, frozen, eps, d)
}

/// Seed of the string diagram of `t`.
pub fn triangulation_seed(t: &Triangulation, c: &CartanData) -> Result<Seed> {
    seed_from_diagram(&string_diagram(t, c)?, c)
}

/// Swaps the triangles at pattern positions `k` and `k + 1`.
pub fn flip_diagonal(t: &Triangulation, k: usize) -> Result<(Triangulation, MutationScript)> {
    if k + 1 >= t.len() {
        return Err(Error::IndexOutOfRange(format!(
            "diagonal {k} of a {}-triangle trapezoid",
            t.len()
        )));
    }
    if t.pattern[k] == t.pattern[k + 1] {
        return Err(Error::Domain(format!(
            "triangles {k} and {} lie on the same base",
            k + 1
        )));
    }
    let tri = t.triangles();
    let mut steps = Vec::new();
    if tri[k].1 == tri[k + 1].1 {
        let level = tri[k].1;
        let before = tri[..k].iter().filter(|x| x.1 == level).count();
        steps.push(VertexId::new(level, before + 1));
    }
    let mut out = t.clone();
    out.pattern.swap(k, k + 1);
    Ok((out, MutationScript::new(steps)))
}

/// Flips diagonals until the letters `pos..pos + len` of `side` sit on
/// consecutive triangles. The flip scripts are concatenated.
pub fn make_consecutive(
    t: &Triangulation,
    side: Side,
    pos: usize,
    len: usize,
) -> Result<(Triangulation, MutationScript)> {
    if len == 0 || pos + len > t.word(side).len() {
        return Err(Error::IndexOutOfRange(format!(
            "letters {pos}..{} of the {side} word",
            pos + len
        )));
    }
    let mut cur = t.clone();
    let mut steps = Vec::new();
    loop {
        let window = &cur.positions_on(side)[pos..pos + len];
        let (first, last) = (window[0], window[len - 1]);
        let Some(g) = (first..=last).find(|&p| cur.pattern[p] != side) else {
            return Ok((cur, MutationScript::new(steps)));
        };
        let (next, script) = flip_diagonal(&cur, g - 1)?;
        steps.extend(script.steps);
        cur = next;
    }
}

/// Braid move on the letters of `side` starting at letter `pos`. The moved
/// letters must occupy consecutive triangles (see [`make_consecutive`]).
pub fn braid_move_on_base(
    t: &Triangulation,
    side: Side,
    pos: usize,
    c: &CartanData,
) -> Result<(Triangulation, MutationScript)> {
    let word = t.word(side).letters();
    if pos + 1 >= word.len() || word[pos] == word[pos + 1] {
        return Err(Error::NoBraidMove(format!(
            "no alternating pair at {side} letter {pos}"
        )));
    }
    let (i0, j0) = (word[pos], word[pos + 1]);
    let m = match c.braid_exponent(i0, j0)? {
        BraidExponent::Finite(m) => m,
        BraidExponent::Infinite => return Err(Error::NoBraidMove(format!("m_{i0}{j0} is infinite"))),
    };
    if braid_move_length(word, pos, c).is_none() {
        return Err(Error::NoBraidMove(format!(
            "{side} letters at {pos} do not alternate for {m} steps"
        )));
    }
    let window: Vec<usize> = t.positions_on(side)[pos..pos + m].to_vec();
    if window.windows(2).any(|w| w[1] != w[0] + 1) {
        return Err(Error::NoBraidMove(format!(
            "{side} letters {pos}..{} are not on consecutive triangles",
            pos + m
        )));
    }
    let start = window[0];
    let tri = t.triangles();
    let before = |level: usize| tri[..start].iter().filter(|x| x.1 == level).count();

    let mut script = MutationScript::default();
    match m {
        2 => {}
        3 => {
            let (i, j) = (i0, j0);
            let (k, mj) = (before(i), before(j));
            script.steps.push(VertexId::new(i, k + 1));
            let mut relabel = BTreeMap::new();
            relabel.insert(VertexId::new(i, k + 1), VertexId::new(j, mj + 1));
            for x in k + 2..=t_count(&tri, i) {
                relabel.insert(VertexId::new(i, x), VertexId::new(i, x - 1));
            }
            for x in mj + 1..=t_count(&tri, j) {
                relabel.insert(VertexId::new(j, x), VertexId::new(j, x + 1));
            }
            script.relabel = Some(relabel);
        }
        4 | 6 => {
            // `i` is the level with C_ij = -2 or -3.
            let (i, j) = if c.entry(i0, j0) < c.entry(j0, i0) {
                (i0, j0)
            } else {
                (j0, i0)
            };
            let (k, mj) = (before(i), before(j));
            let a = VertexId::new(i, k + 1);
            let cc = VertexId::new(j, mj + 1);
            if m == 4 {
                script.steps = vec![a, cc, a];
            } else {
                let b = VertexId::new(i, k + 2);
                let d = VertexId::new(j, mj + 2);
                script.steps = vec![d, cc, b, a, d, b, d, cc, a, d];
                if i0 != i {
                    script.steps.reverse();
                }
            }
        }
        _ => unreachable!("braid exponents are 2, 3, 4 or 6"),
    }
    let mut out = t.clone();
    let letters = match side {
        Side::Top => &mut out.top.0,
        Side::Bottom => &mut out.bottom.0,
    };
    for (q, x) in letters[pos..pos + m].iter_mut().enumerate() {
        *x = if q % 2 == 0 { j0 } else { i0 };
    }
    Ok((out, script))
}

fn t_count(tri: &[(Side, usize)], level: usize) -> usize {
    tri.iter().filter(|x| x.1 == level).count()
}

/// Horizontal flip exchanging the bases: the triangulation for `(d^o, b^o)`.
pub fn transposition(t: &Triangulation) -> Triangulation {
    Triangulation {
        top: t.bottom.reverse(),
        bottom: t.top.reverse(),
        pattern: t.pattern.iter().rev().map(|s| s.opposite()).collect(),
    }
}

/// `(i, j) -> (i, n_i - j)` between the diagram and its transpose.
pub fn transposition_bijection(sd: &StringDiagram) -> BTreeMap<VertexId, VertexId> {
    sd.strings()
        .map(|s| {
            let n = sd.node_count(s.id.level);
            (s.id, VertexId::new(s.id.level, n - s.id.ordinal))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat_int;
    use crate::seed::seed_isomorphic;

    fn cart(name: &str) -> CartanData {
        CartanData::from_name(name).unwrap()
    }

    fn tri(top: &[usize], bottom: &[usize], pattern: &str) -> Triangulation {
        build_triangulation(
            BraidWord(top.to_vec()),
            BraidWord(bottom.to_vec()),
            parse_pattern(pattern).unwrap(),
        )
        .unwrap()
    }

    fn v(i: usize, j: usize) -> VertexId {
        VertexId::new(i, j)
    }

    #[test]
    fn triangulation_validation() {
        assert!(build_triangulation(
            BraidWord::empty(),
            BraidWord(vec![1, 1, 1]),
            parse_pattern("BBB").unwrap()
        )
        .is_ok());
        assert!(build_triangulation(BraidWord(vec![1]), BraidWord(vec![1]), parse_pattern("TB").unwrap()).is_ok());
        let err =
            build_triangulation(BraidWord(vec![1]), BraidWord(vec![1]), parse_pattern("BB").unwrap()).unwrap_err();
        assert_eq!(err.to_string(), "Wrong Triangulation!");
        assert!(parse_pattern("TX").is_err());
    }

    #[test]
    fn worked_example_with_extra_level() {
        let c = CartanData::from_json_str(r#"{"C":[[2,-1,0],[-1,2,-1],[0,-1,2]],"D":[1,1,1],"corank":1}"#).unwrap();
        let t = tri(&[1, 2, 3], &[3, 1, 1, 3, 2], "BBBTTTBB");
        let sd = string_diagram(&t, &c).unwrap();
        let signed: Vec<i64> = sd.nodes().iter().map(|n| i64::from(n.sign) * n.level as i64).collect();
        assert_eq!(signed, vec![3, 1, 1, -1, -2, -3, 3, 2]);
        assert_eq!(sd.closed_strings(), vec![v(1, 1), v(1, 2), v(2, 1), v(3, 1), v(3, 2)]);
        assert_eq!(sd.strings_on(4).len(), 1);
        let s = seed_from_diagram(&sd, &c).unwrap();
        for a in sd.closed_strings() {
            for &b in s.vertices() {
                assert!(s.eps(a, b).unwrap().is_integer());
            }
        }
    }

    #[test]
    fn small_diagrams() {
        let sd = string_diagram(&tri(&[], &[1], "B"), &cart("A2")).unwrap();
        assert_eq!(sd.nodes().len(), 1);
        assert_eq!(sd.strings_on(1).len(), 2);
        assert!(sd.closed_strings().is_empty());
        let sd = string_diagram(&tri(&[], &[1, 1], "BB"), &cart("A1")).unwrap();
        assert_eq!(sd.closed_strings(), vec![v(1, 1)]);
    }

    #[test]
    fn three_letter_a1_seed() {
        let s = triangulation_seed(&tri(&[], &[1, 1, 1], "BBB"), &cart("A1")).unwrap();
        assert_eq!(s.unfrozen_vertices(), vec![v(1, 1), v(1, 2)]);
        assert_eq!(s.eps(v(1, 1), v(1, 2)).unwrap(), &rat_int(-1));
        assert_eq!(s.eps(v(1, 2), v(1, 1)).unwrap(), &rat_int(1));
        assert_eq!(s.eps(v(1, 0), v(1, 1)).unwrap(), &rat_int(-1));
    }

    #[test]
    fn flips() {
        let (t, s) = flip_diagonal(&tri(&[1], &[2], "TB"), 0).unwrap();
        assert!(s.is_empty());
        assert_eq!(pattern_string(t.pattern()), "BT");
        let (_, s) = flip_diagonal(&tri(&[1], &[1], "TB"), 0).unwrap();
        assert_eq!(s.steps, vec![v(1, 1)]);
        assert!(flip_diagonal(&tri(&[], &[1, 1], "BB"), 0).is_err());
    }

    #[test]
    fn braid_move_scripts() {
        let (t, s) = braid_move_on_base(&tri(&[], &[1, 2, 1], "BBB"), Side::Bottom, 0, &cart("A2")).unwrap();
        assert_eq!(t.bottom().0, vec![2, 1, 2]);
        assert_eq!(s.steps, vec![v(1, 1)]);
        let (_, s) = braid_move_on_base(&tri(&[], &[1, 2, 1, 2], "BBBB"), Side::Bottom, 0, &cart("B2")).unwrap();
        assert_eq!(s.steps, vec![v(1, 1), v(2, 1), v(1, 1)]);
        let (_, s) =
            braid_move_on_base(&tri(&[], &[1, 2, 1, 2, 1, 2], "BBBBBB"), Side::Bottom, 0, &cart("G2")).unwrap();
        assert_eq!(s.steps.len(), 10);
        assert_eq!(s.steps[0], v(2, 2));
        assert_eq!(s.steps[9], v(2, 2));
        assert!(braid_move_on_base(&tri(&[], &[1, 2, 2], "BBB"), Side::Bottom, 0, &cart("A2")).is_err());
        assert!(braid_move_on_base(&tri(&[2], &[1, 1], "BTB"), Side::Bottom, 0, &cart("A2")).is_err());
    }

    /// Every triangulation with words over `1..=r` of total length `len`.
    fn all_triangulations(r: usize, len: usize) -> Vec<Triangulation> {
        let mut out = Vec::new();
        let letters_total = r.pow(len as u32);
        for mask in 0..(1usize << len) {
            let pattern: Vec<Side> = (0..len)
                .map(|p| if mask >> p & 1 == 1 { Side::Top } else { Side::Bottom })
                .collect();
            for code in 0..letters_total {
                let mut x = code;
                let (mut top, mut bottom) = (Vec::new(), Vec::new());
                for s in &pattern {
                    let l = x % r + 1;
                    x /= r;
                    match s {
                        Side::Top => top.push(l),
                        Side::Bottom => bottom.push(l),
                    }
                }
                out.push(build_triangulation(BraidWord(top), BraidWord(bottom), pattern.clone()).unwrap());
            }
        }
        out
    }

    fn check_move(t: &Triangulation, t2: &Triangulation, script: &MutationScript, c: &CartanData) {
        let s = triangulation_seed(t, c).unwrap();
        let moved = s.apply_script(script).unwrap();
        let target = triangulation_seed(t2, c).unwrap();
        let id: BTreeMap<_, _> = moved.vertices().iter().map(|&x| (x, x)).collect();
        assert!(seed_isomorphic(&moved, &target, &id), "{t} -> {t2} via {script}");
    }

    fn exhaustive(name: &str, max_len: usize) {
        let c = cart(name);
        for len in 1..=max_len {
            for t in all_triangulations(c.rank(), len) {
                let s = triangulation_seed(&t, &c).unwrap();
                for k in 0..len.saturating_sub(1) {
                    if let Ok((t2, script)) = flip_diagonal(&t, k) {
                        if script.is_empty() {
                            assert_eq!(triangulation_seed(&t2, &c).unwrap(), s, "{t} flip {k}");
                        }
                        check_move(&t, &t2, &script, &c);
                    }
                }
                for side in [Side::Top, Side::Bottom] {
                    for pos in 0..t.word(side).len() {
                        if let Ok((t2, script)) = braid_move_on_base(&t, side, pos, &c) {
                            check_move(&t, &t2, &script, &c);
                        }
                    }
                }
                let tt = transposition(&t);
                assert_eq!(transposition(&tt), t);
                let sd = string_diagram(&t, &c).unwrap();
                let sigma = transposition_bijection(&sd);
                let st = triangulation_seed(&tt, &c).unwrap();
                assert!(seed_isomorphic(&s, &st, &sigma), "transposition of {t}");
            }
        }
    }

    #[test]
    fn exhaustive_a2() {
        exhaustive("A2", 5);
    }

    #[test]
    fn exhaustive_b2() {
        exhaustive("B2", 5);
    }

    #[test]
    fn exhaustive_g2() {
        exhaustive("G2", 5);
    }

    #[test]
    fn g2_moves_in_context() {
        let c = cart("G2");
        for len in 6..=7 {
            for t in all_triangulations(2, len) {
                for side in [Side::Top, Side::Bottom] {
                    for pos in 0..t.word(side).len() {
                        if braid_move_length(t.word(side).letters(), pos, &c) == Some(6) {
                            if let Ok((t2, script)) = braid_move_on_base(&t, side, pos, &c) {
                                check_move(&t, &t2, &script, &c);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn normalization_then_move() {
        let c = cart("A2");
        let t = tri(&[1, 2], &[1, 2, 1], "BTBTB");
        assert!(braid_move_on_base(&t, Side::Bottom, 0, &c).is_err());
        let (t1, pre) = make_consecutive(&t, Side::Bottom, 0, 3).unwrap();
        check_move(&t, &t1, &pre, &c);
        let (t2, script) = braid_move_on_base(&t1, Side::Bottom, 0, &c).unwrap();
        check_move(&t1, &t2, &script, &c);
    }

    #[test]
    fn transposition_small() {
        let c = cart("A1");
        let sd = string_diagram(&tri(&[], &[1, 1, 1], "BBB"), &c).unwrap();
        let sigma = transposition_bijection(&sd);
        assert_eq!(sigma[&v(1, 1)], v(1, 2));
        assert_eq!(sigma[&v(1, 2)], v(1, 1));
    }
}
