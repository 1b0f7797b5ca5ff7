//! Maps with a prescribed coloring group on a prescribed surface.

use alloc::{format, vec::Vec};

use super::{
    generators::{crosscaps, grid_g, strip_map, StripParity},
    surgery::{connected_sum, make_property, triple_edge, Property},
};
use crate::{
    coloring::{coloring_group, coloring_group_excluding_cell},
    colorset::{ColorSet, ColoringGroup},
    doubles::i_double,
    flagsys::{FlagSystem, SurfaceSignature},
    operators::{dual, medial},
    Error, Result,
};

/// Every subgroup of the power set of `{0, .., rank}`.
pub fn subgroups_of_p(rank: usize) -> Vec<ColoringGroup> {
    ColoringGroup::all_subgroups(rank)
}

/// Total number of insertions allowed across all attempts.
const SURGERY_BUDGET: usize = 64;

fn group(bits: &[u32]) -> ColoringGroup {
    let members = bits.iter().map(|&b| ColorSet::from_bits(b, 2).unwrap()).collect();
    ColoringGroup::new(2, members).unwrap()
}

/// The three (group, surface) pairs no map realizes.
pub fn is_exceptional(h: &ColoringGroup, s: SurfaceSignature) -> bool {
    let pp = SurfaceSignature::projective_plane();
    (s == SurfaceSignature::sphere() && *h == group(&[0, 0b010, 0b101, 0b111]))
        || (s == pp && (*h == group(&[0, 0b010]) || *h == group(&[0, 0b101])))
}

/// Build a map on `s` whose coloring group is exactly `h`. The result is
/// checked before it is returned.
pub fn build_map_with_group(h: &ColoringGroup, s: SurfaceSignature) -> Result<FlagSystem> {
    if h.rank() != 2 {
        return Err(Error::RankNotTwo(h.rank()));
    }
    if h.is_orientable() != s.orientable {
        return Err(Error::OrientabilityMismatch);
    }
    if is_exceptional(h, s) {
        return Err(Error::ExceptionalPair);
    }
    let mut budget = SURGERY_BUDGET;
    let m = if s.orientable {
        // the orientable double cover of N_{g+1} is the orientable surface of genus g
        let half: Vec<ColorSet> = h.members().iter().copied().filter(|x| !x.contains(1)).collect();
        let half = ColoringGroup::new(2, half)?;
        let base = non_orientable(&half, s.genus + 1, &mut budget)?;
        i_double(&base, &ColorSet::full(2))?.system
    } else {
        non_orientable(h, s.genus, &mut budget)?
    };
    if m.surface_signature()? != s || coloring_group(&m)? != *h {
        return Err(Error::ConstructionFailed(format!("result for {h} on {s} failed verification")));
    }
    Ok(m)
}

fn verified(m: &FlagSystem, h: &ColoringGroup, k: u32) -> Result<bool> {
    Ok(m.surface_signature()? == SurfaceSignature::non_orientable(k) && coloring_group(m)? == *h)
}

/// Base maps on `N_k` tried in turn: the cross-cap polygon and its medials.
fn bases(k: u32) -> impl Iterator<Item = FlagSystem> {
    core::iter::successors(crosscaps(k as usize).ok(), |m| medial(m).ok()).take(3)
}

fn spend(budget: &mut usize, count: usize) -> Result<()> {
    *budget = budget
        .checked_sub(count)
        .ok_or_else(|| Error::ConstructionFailed("surgery budget exhausted".into()))?;
    Ok(())
}

/// Insertions forcing the group, for the groups that insertions reach.
fn recipe(h: &ColoringGroup) -> Option<(bool, &'static [Property])> {
    use Property::*;
    let table: [(&[u32], bool, &[Property]); 9] = [
        (&[0], false, &[OddFace, OddVertex]),
        (&[0, 0b011], false, &[FacePso, OddFace]),
        (&[0, 0b110], true, &[FacePso, OddFace]),
        (&[0, 0b100], false, &[FaceBipartite, OddFace]),
        (&[0, 0b001], true, &[FaceBipartite, OddFace]),
        (&[0, 0b011, 0b101, 0b110], false, &[FacePso, VertexPso]),
        (&[0, 0b001, 0b010, 0b011], false, &[FacePso, VertexBipartite]),
        (&[0, 0b010, 0b100, 0b110], true, &[FacePso, VertexBipartite]),
        (&[0, 0b001, 0b100, 0b101], false, &[FaceBipartite, VertexBipartite]),
    ];
    table
        .into_iter()
        .find(|(bits, _, _)| group(bits) == *h)
        .map(|(_, dualize, steps)| (dualize, steps))
}

/// The bases on which the insertion recipe for `h` verifies; only the first
/// unless `all`.
fn by_insertion(h: &ColoringGroup, k: u32, all: bool, budget: &mut usize) -> Result<Vec<FlagSystem>> {
    let Some((dualize, steps)) = recipe(h) else {
        return Ok(Vec::new());
    };
    let mut found = Vec::new();
    for base in bases(k) {
        let mut m = base;
        for &p in steps {
            let (next, count) = make_property(&m, p)?;
            spend(budget, count)?;
            m = next;
        }
        if dualize {
            m = dual(&m);
        }
        if verified(&m, h, k)? {
            found.push(m);
            if !all {
                break;
            }
        }
    }
    Ok(found)
}

fn non_orientable(h: &ColoringGroup, k: u32, budget: &mut usize) -> Result<FlagSystem> {
    if recipe(h).is_some() {
        return by_insertion(h, k, false, budget)?
            .into_iter()
            .next()
            .ok_or_else(|| Error::ConstructionFailed(format!("no base on n{k} gave {h}")));
    }
    let explicit = if *h == group(&[0, 0b010]) {
        // G(m, n, k - 2) with n odd and m > 2
        let n = (k as usize).max(3) | 1;
        grid_g(3, n, k as usize - 2)?
    } else if *h == group(&[0, 0b101]) {
        if k.is_multiple_of(2) {
            let w = (k as usize - 2) / 2;
            let swaps: Vec<usize> = (0..w).map(|i| 2 * i + 1).collect();
            strip_map(2 * w + 2, &swaps, StripParity::Even)?
        } else {
            let w = (k as usize - 1) / 2;
            let swaps: Vec<usize> = (0..w).map(|i| 2 * i).collect();
            strip_map(4 * w + 2, &swaps, StripParity::Odd)?
        }
    } else {
        return Err(Error::ConstructionFailed(format!("no recipe for {h}")));
    };
    if verified(&explicit, h, k)? {
        return Ok(explicit);
    }
    summed(h, k, budget)
}

/// `{∅,{1}}` or `{∅,{0,2}}` on `N_k` as the sum of a map on `N_{k-1}` and one
/// on the projective plane, each with a bigon whose removal keeps the group.
fn summed(h: &ColoringGroup, k: u32, budget: &mut usize) -> Result<FlagSystem> {
    let (h1, h2) = if *h == group(&[0, 0b010]) {
        (group(&[0, 0b010, 0b100, 0b110]), group(&[0, 0b001, 0b010, 0b011]))
    } else {
        (group(&[0, 0b011, 0b101, 0b110]), group(&[0, 0b001, 0b100, 0b101]))
    };
    let (m1, f1) = with_bigon(&h1, k - 1, budget)?;
    let (m2, f2) = with_bigon(&h2, 1, budget)?;
    let sum = connected_sum(&m1, &m2, f1, f2)?;
    if verified(&sum, h, k)? {
        Ok(sum)
    } else {
        Err(Error::ConstructionFailed(format!("sum for {h} on n{k} failed verification")))
    }
}

/// A map with group `h` (of order 4) and a bigon `F` on two vertices with
/// `T(M \ F) = h`, plus a flag of `F`.
fn with_bigon(h: &ColoringGroup, k: u32, budget: &mut usize) -> Result<(FlagSystem, usize)> {
    for m in by_insertion(h, k, true, budget)? {
        for edge in m.cells(1) {
            let Ok(tripled) = triple_edge(&m, &edge) else {
                continue;
            };
            let f = tripled.flag_count() - 1;
            let bigon = tripled.cell_containing(2, f)?;
            if coloring_group(&tripled)? == *h
                && coloring_group_excluding_cell(&tripled, &bigon)? == *h
            {
                spend(budget, 2)?;
                return Ok((tripled, f));
            }
        }
    }
    Err(Error::ConstructionFailed(format!("no bigon keeps {h} on n{k}")))
}
