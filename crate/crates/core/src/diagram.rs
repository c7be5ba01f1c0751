//! Link diagrams as PD codes, smoothing states and enhanced states.
//!
//! A crossing is a 4-tuple of arc labels listed counterclockwise starting from
//! the incoming under-strand. The A-smoothing joins positions (0,1) and (2,3),
//! the B-smoothing joins (0,3) and (1,2). Crossingless components are carried
//! as a count of free loops.
//!
//! Internally arcs are renumbered densely in increasing label order, so "the
//! smallest member arc" of a loop means the same thing in both numberings.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default crossing cap for enhanced-state enumeration and state sums.
pub const DEFAULT_STATE_CAP: usize = 20;

/// Hard limit imposed by the `u64` choice bit-vector.
pub const MAX_STATE_CROSSINGS: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothing {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    crossings: Vec<[usize; 4]>,
    arc_labels: Vec<u64>,
    free_loops: usize,
    signs: Vec<i8>,
}

/// JSON shape of a diagram: `{ "crossings": [[a,b,c,d],...], "free_loops": k }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<[u64; 4]>,
    #[serde(default)]
    pub free_loops: usize,
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so roots are loop minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi as usize] = lo;
        }
    }
}

impl LinkDiagram {
    /// Builds a diagram from PD tuples that follow the incoming-under
    /// convention. Inconsistent strand directions are rejected.
    pub fn from_pd(crossings: &[[u64; 4]], free_loops: usize) -> Result<Self> {
        Self::build(crossings, free_loops, true)
    }

    /// Builds a diagram whose tuples are counterclockwise with the under
    /// strand at positions 0 and 2, in either direction. Each component is
    /// oriented by traversal and tuples are rotated by two where needed.
    pub fn from_unoriented(crossings: &[[u64; 4]], free_loops: usize) -> Result<Self> {
        Self::build(crossings, free_loops, false)
    }

    pub fn unknot() -> Self {
        Self::free(1)
    }

    /// A crossingless diagram of `k` unlinked circles.
    pub fn free(k: usize) -> Self {
        Self {
            crossings: Vec::new(),
            arc_labels: Vec::new(),
            free_loops: k,
            signs: Vec::new(),
        }
    }

    fn build(raw: &[[u64; 4]], free_loops: usize, strict: bool) -> Result<Self> {
        let mut labels: Vec<u64> = raw.iter().flatten().copied().collect();
        labels.sort_unstable();
        let mut counts: Vec<(u64, usize)> = Vec::new();
        for &l in &labels {
            match counts.last_mut() {
                Some((x, n)) if *x == l => *n += 1,
                _ => counts.push((l, 1)),
            }
        }
        if let Some((l, n)) = counts.iter().find(|(_, n)| *n != 2) {
            return Err(Error::MalformedDiagram(format!(
                "arc {l} appears {n} times, expected 2"
            )));
        }
        let arc_labels: Vec<u64> = counts.iter().map(|(l, _)| *l).collect();
        let index = |l: u64| arc_labels.binary_search(&l).unwrap();
        let crossings: Vec<[usize; 4]> = raw
            .iter()
            .map(|t| [index(t[0]), index(t[1]), index(t[2]), index(t[3])])
            .collect();
        let mut d = Self {
            crossings,
            arc_labels,
            free_loops,
            signs: Vec::new(),
        };
        d.orient(strict)?;
        if !d.is_planar() {
            return Err(Error::MalformedDiagram(
                "crossing data does not describe a planar diagram".into(),
            ));
        }
        Ok(d)
    }

    fn arc_ends(&self) -> Vec<[(usize, usize); 2]> {
        let mut ends = vec![[(usize::MAX, 0); 2]; self.arc_labels.len()];
        let mut seen = vec![0usize; self.arc_labels.len()];
        for (x, t) in self.crossings.iter().enumerate() {
            for (p, &a) in t.iter().enumerate() {
                ends[a][seen[a]] = (x, p);
                seen[a] += 1;
            }
        }
        ends
    }

    /// Orients every component, checks (strict) or repairs (lenient) the
    /// incoming-under convention, and computes crossing signs.
    fn orient(&mut self, strict: bool) -> Result<()> {
        let ends = self.arc_ends();
        let n = self.arc_labels.len();
        let other = |a: usize, e: (usize, usize)| if ends[a][0] == e { ends[a][1] } else { ends[a][0] };
        let mut head: Vec<Option<(usize, usize)>> = vec![None; n];
        for start in 0..n {
            if head[start].is_some() {
                continue;
            }
            // traverse with the arc entering at its first endpoint
            let mut comp: Vec<usize> = Vec::new();
            let mut a = start;
            let mut h = ends[start][0];
            loop {
                comp.push(a);
                head[a] = Some(h);
                let (x, p) = h;
                let out = (x, (p + 2) % 4);
                a = self.crossings[x][out.1];
                h = other(a, out);
                if a == start {
                    break;
                }
            }
            // first under passage decides the direction; components that
            // only pass over keep the traversal direction chosen above
            let under = comp
                .iter()
                .map(|&a| head[a].unwrap())
                .filter(|&(_, p)| p % 2 == 0)
                .min();
            if let Some((_, p)) = under {
                if p == 2 {
                    for &a in &comp {
                        let hd = head[a].unwrap();
                        head[a] = Some(other(a, hd));
                    }
                }
            }
        }
        let mut head: Vec<(usize, usize)> = head.into_iter().map(Option::unwrap).collect();
        let mut rotated = vec![false; self.crossings.len()];
        for x in 0..self.crossings.len() {
            let a0 = self.crossings[x][0];
            if head[a0] != (x, 0) {
                if strict {
                    return Err(Error::MalformedDiagram(format!(
                        "crossing {} does not start at its incoming under-strand",
                        x + 1
                    )));
                }
                self.crossings[x].rotate_left(2);
                rotated[x] = true;
            }
        }
        for h in head.iter_mut() {
            if rotated[h.0] {
                h.1 = (h.1 + 2) % 4;
            }
        }
        // over-strand entering at position 3 makes a positive crossing
        self.signs = (0..self.crossings.len())
            .map(|x| if head[self.crossings[x][3]] == (x, 3) { 1 } else { -1 })
            .collect();
        Ok(())
    }

    /// Counts faces of the underlying 4-valent map and compares with the
    /// genus-0 value `c + 2·(#components)`.
    pub fn is_planar(&self) -> bool {
        let c = self.crossings.len();
        if c == 0 {
            return true;
        }
        let ends = self.arc_ends();
        let alpha = |(x, p): (usize, usize)| {
            let a = self.crossings[x][p];
            if ends[a][0] == (x, p) {
                ends[a][1]
            } else {
                ends[a][0]
            }
        };
        let mut seen = vec![false; 4 * c];
        let mut faces = 0;
        for s in 0..4 * c {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = (s / 4, s % 4);
            while !seen[d.0 * 4 + d.1] {
                seen[d.0 * 4 + d.1] = true;
                let (x, p) = alpha(d);
                d = (x, (p + 1) % 4);
            }
        }
        let mut uf = UnionFind::new(c);
        for e in &ends {
            uf.union(e[0].0 as u32, e[1].0 as u32);
        }
        let comps = (0..c as u32).filter(|&x| uf.find(x) == x).count();
        faces == c + 2 * comps
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_labels.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Crossing tuples in the original arc labels.
    pub fn crossings(&self) -> Vec<[u64; 4]> {
        self.crossings
            .iter()
            .map(|t| t.map(|a| self.arc_labels[a]))
            .collect()
    }

    /// Crossing tuples in dense arc indices `0..arc_count`.
    pub fn dense_crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn arc_label(&self, arc: usize) -> u64 {
        self.arc_labels[arc]
    }

    pub fn sign(&self, crossing: usize) -> i8 {
        self.signs[crossing]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// `(n₊, n₋)`: numbers of positive and negative crossings.
    pub fn signed_counts(&self) -> (usize, usize) {
        let pos = self.signs.iter().filter(|&&s| s > 0).count();
        (pos, self.signs.len() - pos)
    }

    pub fn with_free_loops(&self, extra: usize) -> Self {
        let mut d = self.clone();
        d.free_loops += extra;
        d
    }

    /// Disjoint union; the second diagram's arcs are relabelled above the first.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.arc_labels.iter().max().map_or(0, |m| m + 1);
        let mut raw = self.crossings();
        raw.extend(other.crossings().into_iter().map(|t| t.map(|a| a + shift)));
        Self::from_pd(&raw, self.free_loops + other.free_loops)
            .expect("disjoint union of valid diagrams is valid")
    }

    /// The tuple of crossing `x` with over and under exchanged, started at the
    /// old over-strand's incoming arc so orientations are kept.
    fn flipped_tuple(&self, x: usize) -> [u64; 4] {
        let mut t = self.crossings()[x];
        if self.signs[x] > 0 {
            t.rotate_right(1);
        } else {
            t.rotate_left(1);
        }
        t
    }

    /// Switches over- and under-strand at one crossing.
    pub fn flip_crossing(&self, crossing: usize) -> Self {
        let mut raw = self.crossings();
        raw[crossing] = self.flipped_tuple(crossing);
        Self::from_pd(&raw, self.free_loops).expect("crossing change keeps planarity")
    }

    /// Mirror image: every crossing flipped.
    pub fn mirror(&self) -> Self {
        let raw: Vec<[u64; 4]> = (0..self.crossings.len())
            .map(|x| self.flipped_tuple(x))
            .collect();
        Self::from_pd(&raw, self.free_loops).expect("mirror keeps planarity")
    }

    fn check_state_cap(&self, cap: usize) -> Result<()> {
        let c = self.crossings.len();
        let cap = cap.min(MAX_STATE_CROSSINGS);
        if c > cap {
            return Err(Error::TooLarge {
                what: "crossings",
                required: c as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    /// Number of loops of the state given by `choices`, free loops included.
    /// Bit `i` of `choices` set means a B-smoothing at crossing `i`.
    pub fn loop_count(&self, choices: u64) -> usize {
        let mut uf = self.smoothing_union_find(choices);
        let n = self.arc_labels.len() as u32;
        (0..n).filter(|&a| uf.find(a) == a).count() + self.free_loops
    }

    fn smoothing_union_find(&self, choices: u64) -> UnionFind {
        let mut uf = UnionFind::new(self.arc_labels.len());
        for (i, t) in self.crossings.iter().enumerate() {
            let [a, b, c, d] = t.map(|x| x as u32);
            if choices >> i & 1 == 0 {
                uf.union(a, b);
                uf.union(c, d);
            } else {
                uf.union(a, d);
                uf.union(b, c);
            }
        }
        uf
    }

    /// Loops of a smoothing, numbered by their smallest member arc, followed
    /// by the free loops.
    pub fn resolve_state(&self, choices: &[Smoothing]) -> Result<SmoothingState> {
        if choices.len() != self.crossings.len() {
            return Err(Error::Arity {
                expected: self.crossings.len(),
                got: choices.len(),
            });
        }
        self.check_state_cap(MAX_STATE_CROSSINGS)?;
        let bits = choices
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, s)| if *s == Smoothing::B { acc | 1 << i } else { acc });
        Ok(self.resolve_bits(bits))
    }

    /// Same as [`resolve_state`](Self::resolve_state) with the choices packed
    /// into a bit-vector (bit `i` = B at crossing `i`).
    pub fn resolve_bits(&self, choices: u64) -> SmoothingState {
        let mut uf = self.smoothing_union_find(choices);
        let n = self.arc_labels.len();
        let mut loop_of_arc = vec![u32::MAX; n];
        let mut next = 0u32;
        for a in 0..n {
            let r = uf.find(a as u32) as usize;
            if loop_of_arc[r] == u32::MAX {
                loop_of_arc[r] = next;
                next += 1;
            }
            loop_of_arc[a] = loop_of_arc[r];
        }
        SmoothingState {
            choices,
            crossings: self.crossings.len(),
            arc_loops: next as usize,
            free_loops: self.free_loops,
            loop_of_arc,
        }
    }

    /// Flips site `site` from A to B and reports how the loops change.
    pub fn resmooth(&self, s: &SmoothingState, site: usize) -> Result<Resmoothing> {
        if site >= self.crossings.len() {
            return Err(Error::NotASite(site));
        }
        if s.choices >> site & 1 == 1 {
            return Err(Error::NotASite(site));
        }
        let target = self.resolve_bits(s.choices | 1 << site);
        let loop_map: Vec<usize> = s.loop_minima().iter().enumerate().map(|(l, &m)| match m {
            Some(a) => target.loop_of_arc[a] as usize,
            None => target.arc_loops + (l - s.arc_loops),
        }).collect();
        let t = self.crossings[site];
        let mut old: Vec<usize> = t.iter().map(|&a| s.loop_of_arc[a] as usize).collect();
        old.sort_unstable();
        old.dedup();
        let mut new: Vec<usize> = t.iter().map(|&a| target.loop_of_arc[a] as usize).collect();
        new.sort_unstable();
        new.dedup();
        let change = match (old.len(), new.len()) {
            (2, 1) => LoopChange::Merge {
                a: old[0],
                b: old[1],
                into: new[0],
            },
            (1, 2) => LoopChange::Split {
                from: old[0],
                a: new[0],
                b: new[1],
            },
            _ => {
                return Err(Error::MalformedDiagram(
                    "resmoothing neither merges nor splits (non-planar data)".into(),
                ))
            }
        };
        Ok(Resmoothing {
            target,
            change,
            loop_map,
        })
    }

    /// Streams every enhanced state, choices ascending then label bit-vector
    /// ascending (bit `k` set means loop `k` carries `X`).
    pub fn enhanced_states(&self, cap: usize) -> Result<impl Iterator<Item = EnhancedState> + '_> {
        self.check_state_cap(cap)?;
        let c = self.crossings.len();
        Ok((0..1u64 << c).flat_map(move |bits| {
            let st = Arc::new(self.resolve_bits(bits));
            let k = st.loop_count();
            (0..1u64 << k).map(move |lab| EnhancedState {
                state: Arc::clone(&st),
                labels: (0..k)
                    .map(|i| if lab >> i & 1 == 0 { Label::One } else { Label::X })
                    .collect(),
            })
        }))
    }

    /// Closed-form count `Σ_choices 2^{|loops|}`.
    pub fn enhanced_state_count(&self) -> Result<u128> {
        self.check_state_cap(MAX_STATE_CROSSINGS)?;
        let c = self.crossings.len();
        Ok((0..1u64 << c)
            .map(|b| 1u128 << self.loop_count(b))
            .sum())
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson {
            crossings: self.crossings(),
            free_loops: self.free_loops,
        }
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        Self::from_pd(&j.crossings, j.free_loops)
    }
}

impl fmt::Display for LinkDiagram {
    /// PD text, e.g. `X(1,3,2,4); X(3,1,4,2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings()
            .iter()
            .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
            .collect();
        if self.free_loops > 0 || parts.is_empty() {
            parts.push(format!("O({})", self.free_loops));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Parses `X(a,b,c,d)` and `O(k)` entries separated by `;` or newlines.
pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let b = text.as_bytes();
    let mut pos = 0usize;
    let mut crossings = Vec::new();
    let mut free = 0usize;
    let err = |pos: usize, msg: &str| Error::Syntax {
        pos,
        msg: msg.to_string(),
    };
    // separators, blank lines and `#` comments
    let skip = |pos: &mut usize| {
        while *pos < b.len() {
            if b[*pos] == b'#' {
                while *pos < b.len() && b[*pos] != b'\n' {
                    *pos += 1;
                }
            } else if b[*pos].is_ascii_whitespace() || b[*pos] == b';' {
                *pos += 1;
            } else {
                break;
            }
        }
    };
    let ws = |pos: &mut usize| {
        while *pos < b.len() && b[*pos] == b' ' || *pos < b.len() && b[*pos] == b'\t' {
            *pos += 1;
        }
    };
    let number = |pos: &mut usize| -> Result<u64> {
        ws(pos);
        let start = *pos;
        while *pos < b.len() && b[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if start == *pos {
            return Err(err(start, "expected a non-negative integer"));
        }
        text[start..*pos]
            .parse()
            .map_err(|_| err(start, "integer out of range"))
    };
    let expect = |pos: &mut usize, ch: u8| -> Result<()> {
        ws(pos);
        if *pos < b.len() && b[*pos] == ch {
            *pos += 1;
            Ok(())
        } else {
            Err(err(*pos, &format!("expected `{}`", ch as char)))
        }
    };
    loop {
        skip(&mut pos);
        if pos >= b.len() {
            break;
        }
        match b[pos] {
            b'X' => {
                pos += 1;
                expect(&mut pos, b'(')?;
                let mut t = [0u64; 4];
                for (i, slot) in t.iter_mut().enumerate() {
                    if i > 0 {
                        expect(&mut pos, b',')?;
                    }
                    *slot = number(&mut pos)?;
                }
                expect(&mut pos, b')')?;
                crossings.push(t);
            }
            b'O' => {
                pos += 1;
                expect(&mut pos, b'(')?;
                free += number(&mut pos)? as usize;
                expect(&mut pos, b')')?;
            }
            _ => return Err(err(pos, "expected `X(` or `O(`")),
        }
        ws(&mut pos);
        if pos < b.len() && !matches!(b[pos], b';' | b'\n' | b'\r' | b'#') {
            return Err(err(pos, "expected `;` or newline between entries"));
        }
    }
    LinkDiagram::from_pd(&crossings, free)
}

impl std::str::FromStr for LinkDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

/// A smoothing choice at every crossing with its loop partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmoothingState {
    choices: u64,
    crossings: usize,
    arc_loops: usize,
    free_loops: usize,
    loop_of_arc: Vec<u32>,
}

impl SmoothingState {
    /// Bit-vector of choices; bit `i` set means a B-smoothing at crossing `i`.
    pub fn bits(&self) -> u64 {
        self.choices
    }

    pub fn smoothing(&self, site: usize) -> Smoothing {
        if self.choices >> site & 1 == 1 {
            Smoothing::B
        } else {
            Smoothing::A
        }
    }

    pub fn choices(&self) -> Vec<Smoothing> {
        (0..self.crossings).map(|i| self.smoothing(i)).collect()
    }

    pub fn n_b(&self) -> usize {
        self.choices.count_ones() as usize
    }

    pub fn loop_count(&self) -> usize {
        self.arc_loops + self.free_loops
    }

    /// Loops formed by arcs (excludes free loops).
    pub fn arc_loop_count(&self) -> usize {
        self.arc_loops
    }

    pub fn loop_of_arc(&self, arc: usize) -> usize {
        self.loop_of_arc[arc] as usize
    }

    /// Member arcs of each loop; free loops have no arcs.
    pub fn loops(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.loop_count()];
        for (a, &l) in self.loop_of_arc.iter().enumerate() {
            out[l as usize].push(a);
        }
        out
    }

    /// Smallest arc of every loop (`None` for free loops).
    fn loop_minima(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.loop_count()];
        for (a, &l) in self.loop_of_arc.iter().enumerate() {
            if out[l as usize].is_none() {
                out[l as usize] = Some(a);
            }
        }
        out
    }
}

impl fmt::Display for SmoothingState {
    /// Site 0 first: `"01"` is A at site 0, B at site 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.crossings {
            write!(f, "{}", self.choices >> i & 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopChange {
    Merge { a: usize, b: usize, into: usize },
    Split { from: usize, a: usize, b: usize },
}

#[derive(Clone, Debug)]
pub struct Resmoothing {
    pub target: SmoothingState,
    pub change: LoopChange,
    /// Old loop index to the new loop containing its smallest arc.
    pub loop_map: Vec<usize>,
}

/// Loop label: `One` is `+1` (the unit 1), `X` is `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    One,
    X,
}

impl Label {
    pub fn value(self) -> i64 {
        match self {
            Label::One => 1,
            Label::X => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnhancedState {
    pub state: Arc<SmoothingState>,
    pub labels: Vec<Label>,
}

impl EnhancedState {
    pub fn n_b(&self) -> usize {
        self.state.n_b()
    }

    /// `#(+1 loops) − #(−1 loops)`.
    pub fn lambda(&self) -> i64 {
        self.labels.iter().map(|l| l.value()).sum()
    }

    /// Quantum grading `n_B + λ`.
    pub fn j(&self) -> i64 {
        self.n_b() as i64 + self.lambda()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Smoothing::{A, B};

    fn hopf() -> LinkDiagram {
        parse_pd("X(1,3,2,4); X(3,1,4,2)").unwrap()
    }

    #[test]
    fn parse_free_loops_and_hopf() {
        let d = parse_pd("O(1)").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 1);
        let h = hopf();
        assert_eq!(h.crossing_count(), 2);
        assert_eq!(h.arc_count(), 4);
        assert_eq!(h.to_string(), "X(1,3,2,4); X(3,1,4,2)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_pd("X(1,2,3,4); X(1,2,3,4)"),
            Err(Error::MalformedDiagram(_))
        ));
        assert!(matches!(
            parse_pd("X(1,2,3)"),
            Err(Error::Syntax { pos: 7, .. })
        ));
        assert!(matches!(parse_pd("Y(1)"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(
            parse_pd("X(1,1,2,2) X(3,3,4,4)"),
            Err(Error::Syntax { .. })
        ));
        // arc 1 used once
        assert!(matches!(
            parse_pd("X(1,2,2,3); X(3,4,4,5)"),
            Err(Error::MalformedDiagram(_))
        ));
    }

    #[test]
    fn newline_separated_entries() {
        let d = parse_pd("X(1,3,2,4)\nX(3,1,4,2)\nO(2)\n").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.free_loops(), 2);
    }

    #[test]
    fn inconsistent_orientation_rejected() {
        // first tuple listed from the outgoing under arc
        assert!(matches!(
            parse_pd("X(2,5,1,4); X(3,6,4,1); X(5,2,6,3)"),
            Err(Error::MalformedDiagram(_))
        ));
    }

    #[test]
    fn hopf_loop_counts() {
        let h = hopf();
        assert_eq!(h.resolve_state(&[A, A]).unwrap().loop_count(), 2);
        assert_eq!(h.resolve_state(&[A, B]).unwrap().loop_count(), 1);
        assert_eq!(h.resolve_state(&[B, A]).unwrap().loop_count(), 1);
        assert_eq!(h.resolve_state(&[B, B]).unwrap().loop_count(), 2);
        assert_eq!(
            h.resolve_state(&[A]),
            Err(Error::Arity {
                expected: 2,
                got: 1
            })
        );
        let u = LinkDiagram::unknot();
        assert_eq!(u.resolve_state(&[]).unwrap().loop_count(), 1);
    }

    #[test]
    fn loops_numbered_by_smallest_arc() {
        let h = hopf();
        let s = h.resolve_state(&[A, A]).unwrap();
        // A at both: (1,3)(2,4) and (3,1)(4,2)
        assert_eq!(s.loops(), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn enhanced_state_counts() {
        let u = LinkDiagram::unknot();
        let states: Vec<_> = u.enhanced_states(DEFAULT_STATE_CAP).unwrap().collect();
        assert_eq!(states.len(), 2);
        assert_eq!(states[0].labels, vec![Label::One]);
        assert_eq!(states[1].labels, vec![Label::X]);

        assert_eq!(hopf().enhanced_states(20).unwrap().count(), 12);
        assert_eq!(hopf().enhanced_state_count().unwrap(), 12);

        let empty = LinkDiagram::free(0);
        let states: Vec<_> = empty.enhanced_states(20).unwrap().collect();
        assert_eq!(states.len(), 1);
        assert!(states[0].labels.is_empty());
        assert_eq!(states[0].j(), 0);
    }

    #[test]
    fn enumeration_cap() {
        assert_eq!(
            hopf().enhanced_states(1).err(),
            Some(Error::TooLarge {
                what: "crossings",
                required: 2,
                cap: 1
            })
        );
    }

    #[test]
    fn resmooth_hopf() {
        let h = hopf();
        let s00 = h.resolve_bits(0b00);
        let r = h.resmooth(&s00, 0).unwrap();
        assert_eq!(r.target.to_string(), "10");
        assert!(matches!(r.change, LoopChange::Merge { .. }));
        assert_eq!(r.target.loop_count(), 1);

        let s01 = h.resolve_bits(0b10);
        assert_eq!(s01.to_string(), "01");
        let r = h.resmooth(&s01, 0).unwrap();
        assert_eq!(r.target.to_string(), "11");
        assert!(matches!(r.change, LoopChange::Split { .. }));

        let s10 = h.resolve_bits(0b01);
        assert_eq!(s10.to_string(), "10");
        assert_eq!(h.resmooth(&s10, 0).err(), Some(Error::NotASite(0)));
    }

    #[test]
    fn writhe_values() {
        assert_eq!(LinkDiagram::unknot().writhe(), 0);
        assert_eq!(hopf().writhe(), 2);
        let t = parse_pd("X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)").unwrap();
        assert_eq!(t.writhe(), -3);
        assert_eq!(t.mirror().writhe(), 3);
        assert_eq!(parse_pd("X(1,1,2,2)").unwrap().writhe(), 1);
        assert_eq!(parse_pd("X(1,2,2,1)").unwrap().writhe(), -1);
    }

    #[test]
    fn mirror_and_flip() {
        let h = hopf();
        let f = h.flip_crossing(1);
        // the over-only component is re-oriented by convention, so only the
        // total is meaningful
        assert_eq!(f.writhe(), 0);
        assert_eq!(h.mirror().writhe(), -2);
        assert_eq!(h.mirror().mirror(), h);
    }

    #[test]
    fn nonplanar_data_rejected() {
        // a virtual crossing pattern: two crossings whose arcs pair up crosswise
        assert!(matches!(
            LinkDiagram::from_unoriented(&[[1, 2, 3, 4], [1, 3, 2, 4]], 0),
            Err(Error::MalformedDiagram(_))
        ));
    }

    #[test]
    fn json_roundtrip() {
        let h = hopf().with_free_loops(1);
        let j = serde_json::to_string(&h.to_json()).unwrap();
        assert_eq!(j, r#"{"crossings":[[1,3,2,4],[3,1,4,2]],"free_loops":1}"#);
        let back: DiagramJson = serde_json::from_str(&j).unwrap();
        assert_eq!(LinkDiagram::from_json(&back).unwrap(), h);
    }
}
