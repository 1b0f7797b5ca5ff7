#![allow(dead_code)]

use mapforge::corpus::{self, CorpusMap, CorpusSpec};
use mapforge_core::{construct, dual, medial, ColorSet, FlagSystem};
use petgraph::{algo::is_bipartite_undirected, graph::UnGraph, unionfind::UnionFind};
use rand::{seq::SliceRandom, Rng};
use rand_chacha::ChaCha8Rng;

pub fn default_corpus() -> Vec<CorpusMap> {
    corpus::build(&CorpusSpec::default()).expect("default corpus builds")
}

/// `I`-colorability of the flags not in `removed`, decided without the
/// library's propagation: merge flags joined by connections outside `I`,
/// then ask petgraph whether what is left is bipartite.
pub fn oracle_colorable(m: &FlagSystem, set: &ColorSet, removed: &[bool]) -> bool {
    let n = m.flag_count();
    let keep = |f: usize| removed.get(f) != Some(&true);
    let mut classes = UnionFind::<usize>::new(n);
    for j in (0..=m.rank()).filter(|&j| !set.contains(j)) {
        for f in (0..n).filter(|&f| keep(f)) {
            let g = m.r(j, f);
            if keep(g) {
                classes.union(f, g);
            }
        }
    }
    let labels = classes.into_labeling();
    let mut graph = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    for j in (0..=m.rank()).filter(|&j| set.contains(j)) {
        for f in (0..n).filter(|&f| keep(f)) {
            let g = m.r(j, f);
            if !keep(g) || g < f {
                continue;
            }
            if labels[f] == labels[g] {
                return false;
            }
            graph.add_edge(nodes[labels[f]], nodes[labels[g]], ());
        }
    }
    (0..n)
        .filter(|&f| keep(f) && labels[f] == f)
        .all(|root| is_bipartite_undirected(&graph, nodes[root]))
}

/// Bitmasks of the colorable sets, in bitmask order.
pub fn oracle_group(m: &FlagSystem, removed: &[bool]) -> Vec<u32> {
    ColorSet::all(m.rank())
        .filter(|s| oracle_colorable(m, s, removed))
        .map(|s| s.bits())
        .collect()
}

pub fn bits_of(g: &mapforge_core::ColoringGroup) -> Vec<u32> {
    let mut b: Vec<u32> = g.members().iter().map(|s| s.bits()).collect();
    b.sort();
    b
}

pub fn face_mask(m: &FlagSystem, f: usize) -> Vec<bool> {
    let face = m.cell_containing(2, f).unwrap();
    (0..m.flag_count()).map(|g| face.contains(g)).collect()
}

const SIZE_LIMIT: usize = 320;

fn random_edge(m: &FlagSystem, rng: &mut ChaCha8Rng) -> mapforge_core::Cell {
    let f = rng.gen_range(0..m.flag_count());
    m.cell_containing(1, f).unwrap()
}

/// A surface-preserving random step: edge surgeries, duality, medial, or a
/// connected sum with a small sphere.
pub fn surface_step(m: &FlagSystem, rng: &mut ChaCha8Rng) -> FlagSystem {
    for _ in 0..20 {
        let next = match rng.gen_range(0..6) {
            0 => construct::subdivide_edge(m, &random_edge(m, rng)).ok(),
            1 => construct::double_edge(m, &random_edge(m, rng)).ok(),
            2 => construct::triple_edge(m, &random_edge(m, rng)).ok(),
            3 => Some(dual(m)),
            4 if 2 * m.flag_count() <= SIZE_LIMIT => medial(m).ok(),
            5 => {
                let other = construct::platonic(["tetrahedron", "cube", "octahedron"].choose(rng).unwrap()).unwrap();
                let f = rng.gen_range(0..m.flag_count());
                let g = rng.gen_range(0..other.flag_count());
                construct::connected_sum(m, &other, f, g).ok()
            }
            _ => None,
        };
        if let Some(next) = next {
            if next.flag_count() <= SIZE_LIMIT {
                return next;
            }
        }
    }
    m.clone()
}

pub fn random_surface_map(seeds: &[FlagSystem], rng: &mut ChaCha8Rng) -> FlagSystem {
    let mut m = seeds.choose(rng).unwrap().clone();
    for _ in 0..rng.gen_range(1..=6) {
        m = surface_step(&m, rng);
    }
    m
}

pub fn sphere_seeds() -> Vec<FlagSystem> {
    let mut seeds: Vec<FlagSystem> = construct::PLATONIC_NAMES
        .iter()
        .map(|n| construct::platonic(n).unwrap())
        .collect();
    seeds.push(construct::polygon_gluing("aA").unwrap());
    seeds.push(construct::polygon_gluing("abBA").unwrap());
    seeds
}

pub fn projective_seeds() -> Vec<FlagSystem> {
    ["aa", "abab", "abcabc", "abcdabcd"]
        .iter()
        .map(|w| construct::polygon_gluing(w).unwrap())
        .collect()
}
