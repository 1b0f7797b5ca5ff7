//! Property checks replayed over a corpus by `mapforge verify`.

use mapforge_core::{
    coloring_group, cycle_consistent, direct_pso, dual, find_coloring, find_inconsistent_cycle,
    i_double, is_pseudo_orientable, medial, opposite, petrie, recognize_i_double, ColorSet,
    ColoringGroup, FlagSystem, PsoKind,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{corpus::CorpusMap, sampler::closed_word};

type CheckResult = Result<(), String>;

pub struct Check {
    pub name: &'static str,
    pub description: &'static str,
    run: fn(&FlagSystem, &mut ChaCha8Rng) -> CheckResult,
}

impl Check {
    pub fn run(&self, m: &FlagSystem, seed: u64) -> CheckResult {
        (self.run)(m, &mut ChaCha8Rng::seed_from_u64(seed))
    }
}

pub const CHECKS: &[Check] = &[
    Check {
        name: "closure",
        description: "T(M) is closed under symmetric difference; every missing I has an inconsistent cycle",
        run: closure,
    },
    Check {
        name: "cycles",
        description: "random closed words are I-consistent for I in T(M); I- and J-consistent implies IΔJ-consistent",
        run: cycles,
    },
    Check {
        name: "dubgp",
        description: "T(I≻M) = <T(M), I> for every I",
        run: dubgp,
    },
    Check {
        name: "saturation",
        description: "{0}≻({1}≻({2}≻M)) has every coloring",
        run: saturation,
    },
    Check {
        name: "dual-table",
        description: "I ∈ T(M) iff {2-i : i ∈ I} ∈ T(D(M))",
        run: dual_table,
    },
    Check {
        name: "opp-table",
        description: "I ∈ T(M) iff I (0 ∉ I) or IΔ{2} (0 ∈ I) is in T(opp(M))",
        run: opp_table,
    },
    Check {
        name: "petrie-table",
        description: "I ∈ T(M) iff I (2 ∉ I) or IΔ{0} (2 ∈ I) is in T(P(M))",
        run: petrie_table,
    },
    Check {
        name: "medial-table",
        description: "medial is {2}-colorable; {1}↔{0}, {0,2}↔{1}, R↔R",
        run: medial_table,
    },
    Check {
        name: "pso",
        description: "direct arrow assignments exist iff the matching coloring does",
        run: pso,
    },
    Check {
        name: "recognize",
        description: "the I-double of M is recognized and its base is isomorphic to M",
        run: recognize,
    },
];

pub fn find(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

fn all_sets(m: &FlagSystem) -> impl Iterator<Item = ColorSet> {
    ColorSet::all(m.rank())
}

fn group(m: &FlagSystem) -> Result<ColoringGroup, String> {
    coloring_group(m).map_err(|e| e.to_string())
}

fn rank_two(m: &FlagSystem) -> CheckResult {
    if m.rank() == 2 {
        Ok(())
    } else {
        Err(format!("needs a map, got rank {}", m.rank()))
    }
}

fn closure(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    let t = group(m)?;
    for set in all_sets(m) {
        match (t.contains(&set), find_inconsistent_cycle(m, &set)) {
            (true, None) => {}
            (false, Some((f, word))) => {
                if cycle_consistent(m, f, &word, &set).map_err(|e| e.to_string())? {
                    return Err(format!("certificate for {set} is consistent"));
                }
            }
            (true, Some(_)) => return Err(format!("{set} colorable but has an inconsistent cycle")),
            (false, None) => return Err(format!("{set} not colorable but no certificate")),
        }
    }
    Ok(())
}

fn cycles(m: &FlagSystem, rng: &mut ChaCha8Rng) -> CheckResult {
    let t = group(m)?;
    for steps in [3, 8, 20] {
        let (f, word) = closed_word(m, rng, steps);
        let consistent = |s: &ColorSet| cycle_consistent(m, f, &word, s).map_err(|e| e.to_string());
        for a in all_sets(m) {
            if t.contains(&a) && !consistent(&a)? {
                return Err(format!("{word:?} at {f} is inconsistent for colorable {a}"));
            }
            for b in all_sets(m) {
                if consistent(&a)? && consistent(&b)? && !consistent(&a.sym_diff(&b))? {
                    return Err(format!("{a} and {b} consistent but not their sum"));
                }
            }
        }
    }
    Ok(())
}

fn dubgp(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    let t = group(m)?;
    for set in all_sets(m) {
        let d = i_double(m, &set).map_err(|e| e.to_string())?;
        let expected = t.extended_by(&set);
        if group(&d.system)? != expected {
            return Err(format!("T({set}≻M) != {expected}"));
        }
        let degree = d.system.projection_degree(m, &d.projection).map_err(|e| e.to_string())?;
        if degree != Some(if d.split { 1 } else { 2 }) {
            return Err(format!("{set}-double projection has degree {degree:?}"));
        }
    }
    Ok(())
}

fn saturation(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    let mut d = m.clone();
    for i in (0..=m.rank()).rev() {
        d = i_double(&d, &ColorSet::singleton(i, m.rank()))
            .map_err(|e| e.to_string())?
            .system;
    }
    if group(&d)? != ColoringGroup::full(m.rank()) {
        return Err("iterated doubles are not saturated".into());
    }
    Ok(())
}

fn table(m: &FlagSystem, image: &FlagSystem, rule: impl Fn(ColorSet) -> ColorSet) -> CheckResult {
    let (t, u) = (group(m)?, group(image)?);
    for set in all_sets(m) {
        if t.contains(&set) != u.contains(&rule(set)) {
            return Err(format!("{set} maps to {} but membership differs", rule(set)));
        }
    }
    Ok(())
}

fn dual_table(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    table(m, &dual(m), |s| s.reversed())
}

fn opp_table(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    let r = m.rank();
    let image = opposite(m).map_err(|e| e.to_string())?;
    table(m, &image, |s| if s.contains(0) { s.sym_diff(&ColorSet::singleton(2, r)) } else { s })
}

fn petrie_table(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    rank_two(m)?;
    let image = petrie(m).map_err(|e| e.to_string())?;
    table(m, &image, |s| if s.contains(2) { s.sym_diff(&ColorSet::singleton(0, 2)) } else { s })
}

fn medial_table(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    let med = medial(m).map_err(|e| e.to_string())?;
    let set = |s: &str| ColorSet::parse(s, 2).unwrap();
    if find_coloring(&med, &set("2")).is_none() {
        return Err("medial is not face-bipartite".into());
    }
    for (i, j) in [("1", "0"), ("02", "1"), ("012", "012")] {
        let (a, b) = (find_coloring(m, &set(i)).is_some(), find_coloring(&med, &set(j)).is_some());
        if a != b {
            return Err(format!("{i} colorable: {a}, medial {j} colorable: {b}"));
        }
    }
    if med.surface_signature() != m.surface_signature() {
        return Err("medial changed the surface".into());
    }
    Ok(())
}

fn pso(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    rank_two(m)?;
    for kind in PsoKind::ALL {
        let arrows = direct_pso(m, kind).map_err(|e| e.to_string())?;
        let colorable = find_coloring(m, &kind.color_set()).is_some();
        if arrows.is_some() != colorable {
            return Err(format!("{} arrows: {}, coloring: {colorable}", kind.name(), arrows.is_some()));
        }
        if let Some(a) = arrows {
            if !a.is_valid_for(m) {
                return Err(format!("{} arrows do not check", kind.name()));
            }
        }
        if is_pseudo_orientable(m, &kind.color_set().complement()) != colorable {
            return Err(format!("{} pseudo-orientability disagrees", kind.name()));
        }
    }
    Ok(())
}

fn recognize(m: &FlagSystem, _: &mut ChaCha8Rng) -> CheckResult {
    let t = group(m)?;
    for set in all_sets(m).filter(|s| !t.contains(s)) {
        let d = i_double(m, &set).map_err(|e| e.to_string())?;
        let rec = recognize_i_double(&d.system, &set).ok_or_else(|| format!("{set}-double not recognized"))?;
        if !rec.base.is_isomorphic(m).map_err(|e| e.to_string())? {
            return Err(format!("{set}-double recognized with a different base"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub map: usize,
    pub property: &'static str,
    pub error: Option<String>,
}

/// Runs every check on every map in parallel; outcomes are ordered by map,
/// then by check, whatever the completion order.
pub fn run(maps: &[CorpusMap], checks: &[&'static Check], seed: u64) -> Vec<Outcome> {
    let cells: Vec<(usize, &'static Check)> = (0..maps.len())
        .flat_map(|i| checks.iter().map(move |&c| (i, c)))
        .collect();
    cells
        .into_par_iter()
        .map(|(i, check)| Outcome {
            map: i,
            property: check.name,
            error: check.run(&maps[i].map, seed.wrapping_add(i as u64)).err(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use mapforge_core::construct::{platonic, polygon_gluing};

    #[test]
    fn every_check_passes_on_small_maps() {
        for m in [platonic("tetrahedron").unwrap(), polygon_gluing("aa").unwrap()] {
            for c in CHECKS {
                assert_eq!(c.run(&m, 1), Ok(()), "{}", c.name);
            }
        }
    }
}
