//! Seeded corpora of maps: named bases plus random surgery sequences.

use mapforge_core::{
    construct::{double_edge, subdivide_edge},
    dual, medial, opposite, petrie, FlagSystem, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{generate::generate_spec, properties};

pub const DEFAULT_SEED: u64 = 0x6d61_7066;

pub const DEFAULT_GENERATORS: &[&str] = &[
    "tetrahedron",
    "cube",
    "octahedron",
    "dodecahedron",
    "icosahedron",
    "tri-torus:2,2",
    "tri-torus:2,3",
    "tri-torus:3,3",
    "grid:3,3,0",
    "grid:3,3,1",
    "grid:2,4,2",
    "strip:2,even",
    "strip:4,odd",
    "strip:4,odd,0",
    "gluing:abAB",
    "gluing:aa",
    "gluing:aabb",
    "gluing:abcabc",
    "gluing:abABcdCD",
    "crosscaps:3",
];

/// Random steps stop growing a map past this many flags.
const MAX_FLAGS: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusSpec {
    pub seed: u64,
    pub generators: Vec<String>,
    /// Random operations applied to each variant.
    pub surgery_depth: usize,
    /// Random variants per generator, besides the base itself.
    pub variants: usize,
    /// Property checks to run; empty means all.
    pub operations: Vec<String>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            generators: DEFAULT_GENERATORS.iter().map(|s| s.to_string()).collect(),
            surgery_depth: 3,
            variants: 2,
            operations: Vec::new(),
        }
    }
}

impl CorpusSpec {
    /// Every operation must name a registered check.
    pub fn validate(&self) -> std::result::Result<(), String> {
        match self.operations.iter().find(|op| properties::find(op).is_none()) {
            Some(op) => Err(format!("unknown property {op:?}")),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusMap {
    /// Generator plus the surgeries applied, e.g. `cube|sub|dual`.
    pub name: String,
    pub map: FlagSystem,
}

fn random_step(m: &FlagSystem, rng: &mut ChaCha8Rng) -> (&'static str, FlagSystem) {
    loop {
        let choice = rng.gen_range(0..6);
        let flag = rng.gen_range(0..m.flag_count());
        let edge = m.cell_containing(1, flag);
        let out = match choice {
            0 => ("sub", edge.and_then(|e| subdivide_edge(m, &e))),
            1 => ("dbl", edge.and_then(|e| double_edge(m, &e))),
            2 => ("dual", Ok(dual(m))),
            3 => ("petrie", petrie(m)),
            4 => ("opp", opposite(m)),
            _ if 2 * m.flag_count() <= MAX_FLAGS => ("medial", medial(m)),
            _ => continue,
        };
        if let (name, Ok(next)) = out {
            return (name, next);
        }
    }
}

/// A random sequence of `depth` operations starting at `m`.
pub fn random_variant(m: &FlagSystem, depth: usize, rng: &mut ChaCha8Rng) -> (String, FlagSystem) {
    let mut current = m.clone();
    let mut trail = String::new();
    for _ in 0..depth {
        let (name, next) = random_step(&current, rng);
        trail.push('|');
        trail.push_str(name);
        current = next;
    }
    (trail, current)
}

pub fn build(spec: &CorpusSpec) -> Result<Vec<CorpusMap>> {
    let mut maps = Vec::new();
    for (k, generator) in spec.generators.iter().enumerate() {
        let base = generate_spec(generator)?;
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.wrapping_add(k as u64));
        for _ in 0..spec.variants {
            let (trail, map) = random_variant(&base, spec.surgery_depth, &mut rng);
            maps.push(CorpusMap {
                name: format!("{generator}{trail}"),
                map,
            });
        }
        maps.insert(
            maps.len() - spec.variants,
            CorpusMap {
                name: generator.clone(),
                map: base,
            },
        );
    }
    Ok(maps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_is_deterministic() {
        let spec = CorpusSpec::default();
        let a = build(&spec).unwrap();
        let b = build(&spec).unwrap();
        assert!(a.len() >= 50);
        assert!(a.iter().zip(&b).all(|(x, y)| x.name == y.name && x.map == y.map));
        assert!(a.iter().all(|m| m.map.flag_count() <= 2 * MAX_FLAGS));
    }

    #[test]
    fn unknown_operations_are_rejected() {
        let spec = CorpusSpec {
            operations: vec!["nonsense".into()],
            ..CorpusSpec::default()
        };
        assert!(spec.validate().is_err());
    }
}
