//! Plane multigraphs, the dichromatic polynomial and the medial link.
//!
//! Edge `k` owns the darts `2k` (at its first endpoint) and `2k + 1` (at its
//! second). A rotation lists the darts around each node counterclockwise.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::potts_bracket;
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest edge count accepted by the dichromatic routines.
pub const EDGE_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarMultigraph {
    nodes: usize,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<usize>>,
    planar: bool,
}

/// Graph file format. `rotation` maps a node (as a string key) to its darts
/// in cyclic order; when absent, darts are taken in edge order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub nodes: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rotation: Option<BTreeMap<String, Vec<usize>>>,
}

impl PlanarMultigraph {
    /// Validates the rotation system and records whether it is genus 0.
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= nodes || v >= nodes) {
            return Err(Error::MalformedGraph(format!("edge ({u},{v}) names a missing node")));
        }
        if rotation.len() != nodes {
            return Err(Error::MalformedGraph(format!(
                "rotation covers {} nodes, graph has {nodes}",
                rotation.len()
            )));
        }
        let mut seen = vec![false; 2 * edges.len()];
        for (n, darts) in rotation.iter().enumerate() {
            for &h in darts {
                if h >= seen.len() || seen[h] {
                    return Err(Error::MalformedGraph(format!(
                        "dart {h} is unknown or repeated in the rotation"
                    )));
                }
                seen[h] = true;
                let e = edges[h / 2];
                let owner = if h % 2 == 0 { e.0 } else { e.1 };
                if owner != n {
                    return Err(Error::MalformedGraph(format!(
                        "dart {h} belongs to node {owner}, listed at node {n}"
                    )));
                }
            }
        }
        if let Some(h) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedGraph(format!("dart {h} missing from the rotation")));
        }
        let mut g = Self {
            nodes,
            edges,
            rotation,
            planar: false,
        };
        g.planar = g.euler_holds();
        Ok(g)
    }

    /// Darts in edge order at every node. Planar for trees, cycles and other
    /// simple cases, not in general.
    pub fn with_default_rotation(nodes: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut rotation = vec![Vec::new(); nodes];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if u >= nodes || v >= nodes {
                return Err(Error::MalformedGraph(format!("edge ({u},{v}) names a missing node")));
            }
            rotation[u].push(2 * k);
            rotation[v].push(2 * k + 1);
        }
        Self::new(nodes, edges, rotation)
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn is_planar(&self) -> bool {
        self.planar
    }

    pub fn dart_node(&self, h: usize) -> usize {
        let e = self.edges[h / 2];
        if h % 2 == 0 {
            e.0
        } else {
            e.1
        }
    }

    /// Next dart counterclockwise around the dart's node.
    fn sigma(&self, h: usize) -> usize {
        let r = &self.rotation[self.dart_node(h)];
        let i = r.iter().position(|&x| x == h).unwrap();
        r[(i + 1) % r.len()]
    }

    fn sigma_inv(&self, h: usize) -> usize {
        let r = &self.rotation[self.dart_node(h)];
        let i = r.iter().position(|&x| x == h).unwrap();
        r[(i + r.len() - 1) % r.len()]
    }

    /// Faces as dart orbits of `h ↦ σ(α(h))`; isolated nodes count one face
    /// each and contribute no orbit.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; 2 * self.edges.len()];
        let mut out = Vec::new();
        for start in 0..seen.len() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                orbit.push(h);
                h = self.sigma(h ^ 1);
            }
            out.push(orbit);
        }
        out
    }

    fn euler_holds(&self) -> bool {
        let isolated = self.rotation.iter().filter(|r| r.is_empty()).count();
        let f = self.faces().len() + isolated;
        self.nodes as i64 - self.edges.len() as i64 + f as i64 == 2 * self.components() as i64
    }

    pub fn components(&self) -> usize {
        components_of(self.nodes, self.edges.iter().copied())
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// Connected components as standalone graphs with their rotations.
    pub fn split_components(&self) -> Vec<PlanarMultigraph> {
        let mut uf = UnionFind::new(self.nodes);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for n in 0..self.nodes {
            groups.entry(uf.find(n)).or_default().push(n);
        }
        groups
            .values()
            .map(|members| {
                let local: HashMap<usize, usize> =
                    members.iter().enumerate().map(|(i, &n)| (n, i)).collect();
                let kept: Vec<usize> = (0..self.edges.len())
                    .filter(|&k| local.contains_key(&self.edges[k].0))
                    .collect();
                let new_edge: HashMap<usize, usize> =
                    kept.iter().enumerate().map(|(i, &k)| (k, i)).collect();
                let edges = kept
                    .iter()
                    .map(|&k| (local[&self.edges[k].0], local[&self.edges[k].1]))
                    .collect();
                let rotation = members
                    .iter()
                    .map(|&n| {
                        self.rotation[n]
                            .iter()
                            .map(|&h| 2 * new_edge[&(h / 2)] + h % 2)
                            .collect()
                    })
                    .collect();
                Self::new(members.len(), edges, rotation).expect("component of a valid graph")
            })
            .collect()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            nodes: self.nodes,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            rotation: Some(
                self.rotation
                    .iter()
                    .enumerate()
                    .map(|(n, r)| (n.to_string(), r.clone()))
                    .collect(),
            ),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        match &j.rotation {
            None => Self::with_default_rotation(j.nodes, edges),
            Some(map) => {
                let mut rotation = vec![Vec::new(); j.nodes];
                for (k, darts) in map {
                    let n: usize = k
                        .parse()
                        .map_err(|_| Error::MalformedGraph(format!("rotation key `{k}` is not a node")))?;
                    if n >= j.nodes {
                        return Err(Error::MalformedGraph(format!("rotation names missing node {n}")));
                    }
                    rotation[n] = darts.clone();
                }
                Self::new(j.nodes, edges, rotation)
            }
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: GraphJson =
            serde_json::from_str(s).map_err(|e| Error::MalformedGraph(e.to_string()))?;
        Self::from_json(&j)
    }

    fn check_edge_cap(&self) -> Result<()> {
        if self.edges.len() > EDGE_CAP {
            return Err(Error::TooLarge {
                what: "edges",
                required: self.edges.len() as u128,
                cap: EDGE_CAP as u128,
            });
        }
        Ok(())
    }
}

/// A spanning subgraph: all nodes, the edges whose bits are set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpanningSubgraph {
    pub edges: u64,
}

impl SpanningSubgraph {
    pub fn edge_count(self) -> usize {
        self.edges.count_ones() as usize
    }

    /// `|H|`, isolated nodes included.
    pub fn components(self, g: &PlanarMultigraph) -> usize {
        components_of(
            g.nodes,
            (0..g.edges.len())
                .filter(|&k| self.edges >> k & 1 == 1)
                .map(|k| g.edges[k]),
        )
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Returns true when two classes were joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.0[a.max(b)] = a.min(b);
        true
    }
}

fn components_of(nodes: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut uf = UnionFind::new(nodes);
    nodes - edges.filter(|&(u, v)| uf.union(u, v)).count()
}

fn q_pow(n: usize) -> LaurentPoly {
    LaurentPoly::monomial(1, &[("Q", n as i64)])
}

fn one_plus_v() -> LaurentPoly {
    LaurentPoly::one() + LaurentPoly::var("v")
}

/// Dichromatic polynomial by deletion–contraction, memoized on a relabeled
/// edge list. A self-loop contributes `(1 + v)`; a class of `k` parallel
/// edges is removed at once via `Z = Z(G − class) + ((1+v)^k − 1) Z(G / class)`.
pub fn dichromatic_dc(g: &PlanarMultigraph) -> Result<LaurentPoly> {
    g.check_edge_cap()?;
    let mut memo = HashMap::new();
    Ok(dc(g.nodes, g.edges.clone(), &mut memo))
}

type DcKey = (usize, Vec<(usize, usize)>);

fn dc(nodes: usize, edges: Vec<(usize, usize)>, memo: &mut HashMap<DcKey, LaurentPoly>) -> LaurentPoly {
    let (nodes, edges, isolated) = normalize(nodes, edges);
    let key = (nodes, edges);
    if let Some(p) = memo.get(&key) {
        return p * &q_pow(isolated);
    }
    let (nodes, mut edges) = key.clone();
    let out = if edges.is_empty() {
        q_pow(nodes)
    } else {
        let (u, v) = edges[edges.len() - 1];
        let k = edges.iter().filter(|&&e| e == (u, v)).count();
        edges.retain(|&e| e != (u, v));
        let factor = one_plus_v().pow(k as i64).expect("nonnegative power");
        if u == v {
            factor * dc(nodes, edges, memo)
        } else {
            let contracted = contract(&edges, u, v);
            dc(nodes, edges, memo) + (factor - LaurentPoly::one()) * dc(nodes - 1, contracted, memo)
        }
    };
    memo.insert(key, out.clone());
    out * q_pow(isolated)
}

/// Merges node `v` into `u` and closes the gap in the labels.
fn contract(edges: &[(usize, usize)], u: usize, v: usize) -> Vec<(usize, usize)> {
    let relabel = |x: usize| {
        let x = if x == v { u } else { x };
        if x > v {
            x - 1
        } else {
            x
        }
    };
    edges.iter().map(|&(a, b)| (relabel(a), relabel(b))).collect()
}

/// Drops isolated nodes (returned as a count), orders endpoints, relabels
/// nodes by first appearance and sorts the edge list.
fn normalize(nodes: usize, edges: Vec<(usize, usize)>) -> (usize, Vec<(usize, usize)>, usize) {
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    edges.sort_unstable();
    let mut label: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in &edges {
        for x in [a, b] {
            let next = label.len();
            label.entry(x).or_insert(next);
        }
    }
    let used = label.len();
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = (label[&a], label[&b]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    (used, edges, nodes - used)
}

/// `Σ_H Q^{|H|} v^{e(H)}` over all spanning subgraphs.
pub fn dichromatic_subgraph_sum(g: &PlanarMultigraph) -> Result<LaurentPoly> {
    g.check_edge_cap()?;
    let e = g.edges.len();
    let n = g.nodes;
    let hist = (0..1u64 << e)
        .into_par_iter()
        .fold(
            || vec![0u64; (n + 1) * (e + 1)],
            |mut h, bits| {
                let s = SpanningSubgraph { edges: bits };
                h[s.components(g) * (e + 1) + s.edge_count()] += 1;
                h
            },
        )
        .reduce(
            || vec![0u64; (n + 1) * (e + 1)],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(hist
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| {
            LaurentPoly::monomial(c as i64, &[("Q", (i / (e + 1)) as i64), ("v", (i % (e + 1)) as i64)])
        })
        .sum())
}

/// Medial diagram: one crossing per edge, in edge order, whose A-smoothing
/// keeps the two endpoint circles apart and whose B-smoothing joins them.
///
/// The arc of the corner between dart `h` and the next dart around its node
/// is labeled `h + 1`. At the edge with darts `h1`, `h2` the crossing reads
/// `(⟨h1,σh1⟩, ⟨σ⁻¹h1,h1⟩, ⟨h2,σh2⟩, ⟨σ⁻¹h2,h2⟩)`.
pub fn medial_link(g: &PlanarMultigraph) -> Result<LinkDiagram> {
    if g.nodes == 0 {
        return Err(Error::MalformedGraph("empty graph has no medial link".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.planar {
        return Err(Error::NotPlanar(format!(
            "V - E + F = {} - {} + {}",
            g.nodes,
            g.edges.len(),
            g.faces().len()
        )));
    }
    if g.edges.is_empty() {
        return Ok(LinkDiagram::unknot());
    }
    let corner = |h: usize| h as u64 + 1;
    let tuples: Vec<[u64; 4]> = (0..g.edges.len())
        .map(|k| {
            let (h1, h2) = (2 * k, 2 * k + 1);
            [
                corner(h1),
                corner(g.sigma_inv(h1)),
                corner(h2),
                corner(g.sigma_inv(h2)),
            ]
        })
        .collect();
    let d = LinkDiagram::from_unoriented(&tuples, 0)?;
    let all_a = d.loop_count(0);
    if all_a != g.nodes {
        return Err(Error::MalformedDiagram(format!(
            "medial all-A state has {all_a} loops, graph has {} nodes",
            g.nodes
        )));
    }
    Ok(d)
}

/// `2|H| + e(H) − N`, the loop count of the medial state with B-set `H`.
pub fn state_loop_count_formula(g: &PlanarMultigraph, h: SpanningSubgraph) -> i64 {
    2 * h.components(g) as i64 + h.edge_count() as i64 - g.nodes as i64
}

/// `S^N {K(G)}` with `S^2 = Q`, multiplied over connected components.
pub fn dichromatic_via_bracket(g: &PlanarMultigraph) -> Result<LaurentPoly> {
    if g.nodes == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut acc = LaurentPoly::one();
    for c in g.split_components() {
        let d = medial_link(&c)?;
        let z = LaurentPoly::monomial(1, &[("S", c.nodes as i64)]) * potts_bracket(&d)?;
        acc = acc * z.reduce_square("S", "Q");
    }
    if let Some((lo, hi)) = acc.degree_range("S") {
        if (lo, hi) != (0, 0) {
            return Err(Error::MalformedParity {
                var: "S".into(),
                exponent: if lo != 0 { lo } else { hi },
            });
        }
    }
    Ok(acc)
}

/// Random connected plane multigraph with exactly `edges` edges, grown one
/// edge at a time: either a pendant edge to a new node or an edge across a
/// face between two of its corners (self-loops and parallel edges included).
pub fn random_planar_graph(rng: &mut impl Rng, edges: usize) -> PlanarMultigraph {
    let mut g = PlanarMultigraph {
        nodes: 1,
        edges: Vec::new(),
        rotation: vec![Vec::new()],
        planar: true,
    };
    for _ in 0..edges {
        let k = g.edges.len();
        let (d1, d2) = (2 * k, 2 * k + 1);
        if g.edges.is_empty() || rng.gen_bool(0.35) {
            let u = rng.gen_range(0..g.nodes);
            let w = g.nodes;
            g.nodes += 1;
            g.edges.push((u, w));
            let r = &mut g.rotation[u];
            let pos = if r.is_empty() { 0 } else { rng.gen_range(0..r.len()) + 1 };
            r.insert(pos, d1);
            g.rotation.push(vec![d2]);
        } else {
            // corners of a face are the pairs (y, σy) with y = α(x), x in the orbit
            let faces = g.faces();
            let face = &faces[rng.gen_range(0..faces.len())];
            let y1 = face[rng.gen_range(0..face.len())] ^ 1;
            let y2 = face[rng.gen_range(0..face.len())] ^ 1;
            let (u, w) = (g.dart_node(y1), g.dart_node(y2));
            g.edges.push((u, w));
            if y1 == y2 {
                let r = &mut g.rotation[u];
                let i = r.iter().position(|&x| x == y1).unwrap();
                r.insert(i + 1, d2);
                r.insert(i + 1, d1);
            } else {
                let i = g.rotation[u].iter().position(|&x| x == y1).unwrap();
                g.rotation[u].insert(i + 1, d1);
                let j = g.rotation[w].iter().position(|&x| x == y2).unwrap();
                g.rotation[w].insert(j + 1, d2);
            }
        }
    }
    let out = PlanarMultigraph::new(g.nodes, g.edges, g.rotation).expect("consistent rotation");
    debug_assert!(out.planar && out.is_connected());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn cycle(n: usize) -> PlanarMultigraph {
        PlanarMultigraph::with_default_rotation(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    #[test]
    fn small_polynomials() {
        let node = PlanarMultigraph::with_default_rotation(1, vec![]).unwrap();
        assert_eq!(dichromatic_dc(&node).unwrap(), p("Q"));
        assert_eq!(dichromatic_via_bracket(&node).unwrap(), p("Q"));
        let edge = PlanarMultigraph::with_default_rotation(2, vec![(0, 1)]).unwrap();
        assert_eq!(dichromatic_dc(&edge).unwrap(), p("Q^2 + Q*v"));
        assert_eq!(dichromatic_subgraph_sum(&edge).unwrap(), p("Q^2 + Q*v"));
        assert_eq!(dichromatic_via_bracket(&edge).unwrap(), p("Q^2 + Q*v"));
        let tri = cycle(3);
        let expect = p("Q^3 + 3*Q^2*v + 3*Q*v^2 + Q*v^3");
        assert_eq!(dichromatic_dc(&tri).unwrap(), expect);
        assert_eq!(dichromatic_subgraph_sum(&tri).unwrap(), expect);
        assert_eq!(dichromatic_via_bracket(&tri).unwrap(), expect);
        let empty = PlanarMultigraph::with_default_rotation(4, vec![]).unwrap();
        assert_eq!(dichromatic_subgraph_sum(&empty).unwrap(), p("Q^4"));
    }

    #[test]
    fn chromatic_values() {
        let chrom = |g: &PlanarMultigraph| {
            dichromatic_dc(g).unwrap().substitute("v", &LaurentPoly::constant(-1)).unwrap()
        };
        let path = PlanarMultigraph::with_default_rotation(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(chrom(&path), p("Q^3 - 2*Q^2 + Q"));
        assert_eq!(chrom(&cycle(3)), p("Q^3 - 3*Q^2 + 2*Q"));
        // (Q-1)^4 + (Q-1)
        assert_eq!(chrom(&cycle(4)), p("Q^4 - 4*Q^3 + 6*Q^2 - 3*Q"));
    }

    #[test]
    fn self_loop_and_multi_edge() {
        let lp = PlanarMultigraph::with_default_rotation(1, vec![(0, 0)]).unwrap();
        assert!(lp.is_planar());
        assert_eq!(dichromatic_dc(&lp).unwrap(), p("Q + Q*v"));
        assert_eq!(dichromatic_via_bracket(&lp).unwrap(), p("Q + Q*v"));
        let double = PlanarMultigraph::with_default_rotation(2, vec![(0, 1), (0, 1)]).unwrap();
        let z = dichromatic_subgraph_sum(&double).unwrap();
        assert_eq!(dichromatic_dc(&double).unwrap(), z);
        assert_eq!(dichromatic_via_bracket(&double).unwrap(), z);
    }

    #[test]
    fn medial_shapes() {
        let edge = PlanarMultigraph::with_default_rotation(2, vec![(0, 1)]).unwrap();
        let d = medial_link(&edge).unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.loop_count(0), 2);
        assert_eq!(d.loop_count(1), 1);
        let tri = medial_link(&cycle(3)).unwrap();
        assert_eq!(tri.crossing_count(), 3);
        assert_eq!(tri.loop_count(0), 3);
        assert_eq!(tri.loop_count(0b111), 2);
        assert_eq!(tri.writhe().abs(), 3);
    }

    #[test]
    fn k5_not_planar() {
        let edges: Vec<(usize, usize)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let k5 = PlanarMultigraph::with_default_rotation(5, edges).unwrap();
        assert!(!k5.is_planar());
        assert!(matches!(medial_link(&k5), Err(Error::NotPlanar(_))));
    }

    #[test]
    fn disconnected() {
        let g = PlanarMultigraph::with_default_rotation(3, vec![(0, 1)]).unwrap();
        assert!(matches!(medial_link(&g), Err(Error::Disconnected)));
        assert_eq!(dichromatic_via_bracket(&g).unwrap(), dichromatic_dc(&g).unwrap());
    }

    #[test]
    fn loop_formula_and_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for i in 0..40 {
            let g = random_planar_graph(&mut rng, 1 + i % 8);
            assert!(g.is_planar() && g.is_connected());
            let d = medial_link(&g).unwrap();
            for bits in 0..1u64 << g.edge_count() {
                let h = SpanningSubgraph { edges: bits };
                assert_eq!(state_loop_count_formula(&g, h), d.loop_count(bits) as i64);
            }
            let dc = dichromatic_dc(&g).unwrap();
            assert_eq!(dc, dichromatic_subgraph_sum(&g).unwrap());
            assert_eq!(dc, dichromatic_via_bracket(&g).unwrap());
        }
    }

    #[test]
    fn json_round_trip() {
        let g = cycle(4);
        let s = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(PlanarMultigraph::from_json_str(&s).unwrap(), g);
        assert!(PlanarMultigraph::from_json_str(r#"{"nodes":2,"edges":[[0,2]]}"#).is_err());
    }
}
