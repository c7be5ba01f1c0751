//! Built-in diagrams and graphs, Reidemeister pairs, braid closures and
//! random generators. The corpus files live in `fixtures/` and are compiled
//! in, so `builtin:<name>` works without the source tree.

use rand::Rng;

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::graphs::{medial_link, random_planar_graph, PlanarMultigraph};

const KNOTS: &[(&str, &str)] = &[
    ("unknot", include_str!("../fixtures/knots/unknot.pd")),
    ("kink", include_str!("../fixtures/knots/kink.pd")),
    ("two_unknots", include_str!("../fixtures/knots/two_unknots.pd")),
    ("hopf", include_str!("../fixtures/knots/hopf.pd")),
    ("hopf_flipped", include_str!("../fixtures/knots/hopf_flipped.pd")),
    ("trefoil", include_str!("../fixtures/knots/trefoil.pd")),
    ("trefoil_right", include_str!("../fixtures/knots/trefoil_right.pd")),
    ("trefoil_kinked", include_str!("../fixtures/knots/trefoil_kinked.pd")),
    ("figure_eight", include_str!("../fixtures/knots/figure_eight.pd")),
    ("braid_121", include_str!("../fixtures/knots/braid_121.pd")),
    ("braid_212", include_str!("../fixtures/knots/braid_212.pd")),
];

const GRAPHS: &[(&str, &str)] = &[
    ("single_node", include_str!("../fixtures/graphs/single_node.json")),
    ("single_edge", include_str!("../fixtures/graphs/single_edge.json")),
    ("path3", include_str!("../fixtures/graphs/path3.json")),
    ("triangle", include_str!("../fixtures/graphs/triangle.json")),
    ("square", include_str!("../fixtures/graphs/square.json")),
    ("theta", include_str!("../fixtures/graphs/theta.json")),
    ("self_loop", include_str!("../fixtures/graphs/self_loop.json")),
    ("double_edge", include_str!("../fixtures/graphs/double_edge.json")),
];

pub fn knot_names() -> impl Iterator<Item = &'static str> {
    KNOTS.iter().map(|k| k.0)
}

pub fn graph_names() -> impl Iterator<Item = &'static str> {
    GRAPHS.iter().map(|g| g.0)
}

pub fn knot(name: &str) -> Result<LinkDiagram> {
    let (_, src) = KNOTS
        .iter()
        .find(|k| k.0 == name)
        .ok_or_else(|| Error::Domain(format!("no built-in diagram `{name}`")))?;
    src.parse()
}

pub fn graph(name: &str) -> Result<PlanarMultigraph> {
    let (_, src) = GRAPHS
        .iter()
        .find(|g| g.0 == name)
        .ok_or_else(|| Error::Domain(format!("no built-in graph `{name}`")))?;
    PlanarMultigraph::from_json_str(src)
}

/// Every built-in diagram with its name.
pub fn knots() -> Vec<(&'static str, LinkDiagram)> {
    knot_names()
        .map(|n| (n, knot(n).expect("built-in diagram parses")))
        .collect()
}

/// Every built-in graph with its name.
pub fn graphs() -> Vec<(&'static str, PlanarMultigraph)> {
    graph_names()
        .map(|n| (n, graph(n).expect("built-in graph parses")))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    R1,
    R2,
    R3,
}

/// Two diagrams of the same link related by one Reidemeister move.
#[derive(Clone, Debug)]
pub struct ReidemeisterPair {
    pub name: &'static str,
    pub kind: Move,
    pub before: LinkDiagram,
    pub after: LinkDiagram,
}

pub fn reidemeister_pairs() -> Vec<ReidemeisterPair> {
    let pair = |name, kind, a: &str, b: &str| ReidemeisterPair {
        name,
        kind,
        before: knot(a).expect("built-in"),
        after: knot(b).expect("built-in"),
    };
    vec![
        pair("unknot-curl", Move::R1, "unknot", "kink"),
        pair("trefoil-curl", Move::R1, "trefoil", "trefoil_kinked"),
        pair("unlink-poke", Move::R2, "two_unknots", "hopf_flipped"),
        pair("braid-triangle", Move::R3, "braid_121", "braid_212"),
    ]
}

/// Closure of a braid word on `strands` strands. Letter `i > 0` is the
/// generator `σ_i` (strand `i` over strand `i + 1` going up) and `−i` its
/// inverse. Strands untouched by the word become free loops.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<LinkDiagram> {
    if let Some(&g) = word.iter().find(|g| **g == 0 || g.unsigned_abs() as usize >= strands) {
        return Err(Error::Domain(format!("generator {g} invalid on {strands} strands")));
    }
    let mut current: Vec<u64> = (1..=strands as u64).collect();
    let mut next = strands as u64 + 1;
    let mut raw = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (a, b) = (current[i], current[i + 1]);
        let (c, d) = (next, next + 1);
        next += 2;
        // a, b enter at the bottom left/right; c, d leave at the top left/right
        raw.push(if g > 0 { [b, d, c, a] } else { [a, b, d, c] });
        current[i] = c;
        current[i + 1] = d;
    }
    // glue the top of each position to its bottom label
    let mut free = 0;
    let mut rename = std::collections::HashMap::new();
    for (p, &top) in current.iter().enumerate() {
        if top == p as u64 + 1 {
            free += 1;
        } else {
            rename.insert(top, p as u64 + 1);
        }
    }
    let crossings: Vec<[u64; 4]> = raw
        .iter()
        .map(|t| t.map(|l| rename.get(&l).copied().unwrap_or(l)))
        .collect();
    LinkDiagram::from_pd(&crossings, free)
}

/// Medial diagram of a random plane graph with `1..=max_crossings` edges,
/// each crossing flipped with probability 1/2.
pub fn random_diagram(rng: &mut impl Rng, max_crossings: usize) -> LinkDiagram {
    let e = rng.gen_range(1..=max_crossings.max(1));
    let g = random_planar_graph(rng, e);
    let mut d = medial_link(&g).expect("random plane graphs are connected and planar");
    for x in 0..d.crossing_count() {
        if rng.gen_bool(0.5) {
            d = d.flip_crossing(x);
        }
    }
    d
}

/// Random multigraph on `nodes` nodes with `edges` edges drawn uniformly,
/// self-loops and repeated edges allowed. Rotations are the default ones.
pub fn random_multigraph(rng: &mut impl Rng, nodes: usize, edges: usize) -> PlanarMultigraph {
    let list = (0..edges)
        .map(|_| (rng.gen_range(0..nodes), rng.gen_range(0..nodes)))
        .collect();
    PlanarMultigraph::with_default_rotation(nodes, list).expect("endpoints in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::jones;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn corpus_loads() {
        assert_eq!(knots().len(), KNOTS.len());
        for (name, g) in graphs() {
            assert!(g.is_planar(), "{name}");
            assert!(g.is_connected(), "{name}");
        }
        assert_eq!(knot("trefoil").unwrap().writhe(), -3);
        assert_eq!(knot("trefoil_right").unwrap().writhe(), 3);
        assert!(knot("nope").is_err());
    }

    #[test]
    fn braid_files_match_generator() {
        assert_eq!(knot("braid_121").unwrap(), braid_closure(3, &[1, 2, 1]).unwrap());
        assert_eq!(knot("braid_212").unwrap(), braid_closure(3, &[2, 1, 2]).unwrap());
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(braid_closure(3, &[1]).unwrap().free_loops(), 1);
        assert!(braid_closure(2, &[2]).is_err());
    }

    #[test]
    fn pairs_share_jones() {
        for p in reidemeister_pairs() {
            assert_eq!(jones(&p.before).unwrap(), jones(&p.after).unwrap(), "{}", p.name);
        }
    }

    #[test]
    fn random_diagrams_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let d = random_diagram(&mut rng, 5);
            assert!(d.is_planar());
            assert!((1..=5).contains(&d.crossing_count()));
        }
    }
}
