//! `I`-colorings, the coloring group `T(M)`, cycle consistency and the
//! arrow-based pseudo-orientation checks.
//!
//! An `I`-coloring is a bit per flag that flips across `r_j` exactly when
//! `j ∈ I`. It is found by breadth-first parity propagation from flag 0; a
//! conflict yields a closed word with an odd number of letters in `I`, which
//! certifies that no coloring exists.

use alloc::{collections::VecDeque, vec, vec::Vec};
use core::fmt;

use crate::{
    colorset::{ColorSet, ColoringGroup},
    flagsys::{Cell, FlagSystem, FlagWord},
    parity::ParityUnionFind,
    Error, Result,
};

/// A flag 2-coloring realizing some color set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub color_set: ColorSet,
    pub assignment: Vec<u8>,
}

impl Coloring {
    pub fn color(&self, f: usize) -> u8 {
        self.assignment[f]
    }

    /// `1 - a`, the only other coloring for the same set.
    pub fn complement(&self) -> Coloring {
        Coloring {
            color_set: self.color_set,
            assignment: self.assignment.iter().map(|&c| c ^ 1).collect(),
        }
    }

    /// Pointwise sum; an `I`- and a `J`-coloring give an `IΔJ`-coloring.
    pub fn sum(&self, other: &Coloring) -> Coloring {
        Coloring {
            color_set: self.color_set.sym_diff(&other.color_set),
            assignment: self
                .assignment
                .iter()
                .zip(&other.assignment)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// Whether this really is a `color_set`-coloring of `m`.
    pub fn is_valid_for(&self, m: &FlagSystem) -> bool {
        self.assignment.len() == m.flag_count()
            && (0..=m.rank()).all(|j| {
                let flip = self.color_set.contains(j) as u8;
                (0..m.flag_count()).all(|f| self.assignment[m.r(j, f)] == self.assignment[f] ^ flip)
            })
    }
}

/// One line of `0`/`1` characters.
impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.assignment {
            f.write_str(if c == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

const UNSET: u8 = 2;

enum Propagation {
    Colored(Vec<u8>),
    // flag f, letter j, with f r_j already colored against the rule
    Conflict { f: usize, j: usize, parent: Vec<(usize, usize)> },
}

/// Parity propagation over the flags with `alive[f]`; every component gets
/// its own start (smallest flag, color 0).
fn propagate(m: &FlagSystem, set: &ColorSet, alive: Option<&[bool]>) -> Propagation {
    let n = m.flag_count();
    let is_alive = |f: usize| alive.is_none_or(|a| a[f]);
    let mut color = vec![UNSET; n];
    let mut parent = vec![(usize::MAX, usize::MAX); n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start] != UNSET || !is_alive(start) {
            continue;
        }
        color[start] = 0;
        queue.push_back(start);
        while let Some(f) = queue.pop_front() {
            for j in 0..=m.rank() {
                let g = m.r(j, f);
                if !is_alive(g) {
                    continue;
                }
                let want = color[f] ^ set.contains(j) as u8;
                if color[g] == UNSET {
                    color[g] = want;
                    parent[g] = (f, j);
                    queue.push_back(g);
                } else if color[g] != want {
                    return Propagation::Conflict { f, j, parent };
                }
            }
        }
    }
    for c in color.iter_mut() {
        if *c == UNSET {
            *c = 0;
        }
    }
    Propagation::Colored(color)
}

/// The `I`-coloring with flag 0 colored 0, if `m` is `I`-colorable.
pub fn find_coloring(m: &FlagSystem, set: &ColorSet) -> Option<Coloring> {
    match propagate(m, set, None) {
        Propagation::Colored(assignment) => Some(Coloring {
            color_set: *set,
            assignment,
        }),
        Propagation::Conflict { .. } => None,
    }
}

fn path_from_root(parent: &[(usize, usize)], mut f: usize) -> Vec<usize> {
    let mut letters = Vec::new();
    while parent[f].0 != usize::MAX {
        letters.push(parent[f].1);
        f = parent[f].0;
    }
    letters.reverse();
    letters
}

/// A closed word at flag 0 with an odd number of letters in `I`, if `m` is
/// not `I`-colorable.
pub fn find_inconsistent_cycle(m: &FlagSystem, set: &ColorSet) -> Option<(usize, FlagWord)> {
    match propagate(m, set, None) {
        Propagation::Colored(_) => None,
        Propagation::Conflict { f, j, parent } => {
            let g = m.r(j, f);
            let mut letters = path_from_root(&parent, f);
            letters.push(j);
            letters.extend(path_from_root(&parent, g).into_iter().rev());
            Some((0, FlagWord::new(letters)))
        }
    }
}

/// `T(M)`: every `I` for which `m` has an `I`-coloring.
///
/// Tries all `2^(rank+1)` sets and then checks the result really is a
/// subgroup.
pub fn coloring_group(m: &FlagSystem) -> Result<ColoringGroup> {
    let members = ColorSet::all(m.rank())
        .filter(|s| find_coloring(m, s).is_some())
        .collect();
    ColoringGroup::new(m.rank(), members).map_err(|_| Error::ClosureViolation)
}

/// The sets `I` for which the flags outside face `face` can be `I`-colored,
/// each remaining component independently.
pub fn coloring_group_excluding_cell(m: &FlagSystem, face: &Cell) -> Result<ColoringGroup> {
    m.require_rank_two()?;
    if face.dimension != 2 || face.flags.is_empty() || face.flags.iter().any(|&f| f >= m.flag_count()) {
        return Err(Error::NotAFace);
    }
    let (labels, _) = m.cell_labels(2);
    let id = labels[face.flags[0]];
    let actual: Vec<usize> = (0..m.flag_count()).filter(|&f| labels[f] == id).collect();
    if actual != face.flags {
        return Err(Error::NotAFace);
    }
    let mut alive = vec![true; m.flag_count()];
    for &f in &face.flags {
        alive[f] = false;
    }
    let members = ColorSet::all(m.rank())
        .filter(|s| matches!(propagate(m, s, Some(&alive)), Propagation::Colored(_)))
        .collect();
    ColoringGroup::new(m.rank(), members).map_err(|_| Error::ClosureViolation)
}

/// Whether the closed word `word` at `f` uses an even number of letters in `I`.
pub fn cycle_consistent(m: &FlagSystem, f: usize, word: &FlagWord, set: &ColorSet) -> Result<bool> {
    if m.apply_word(f, word)? != f {
        return Err(Error::NotAClosedCycle(f));
    }
    let hits = word.letters().iter().filter(|&&j| set.contains(j)).count();
    Ok(hits % 2 == 0)
}

/// `I`-pseudo-orientable: `(R \ I)`-colorable. Valid in any rank.
pub fn is_pseudo_orientable(m: &FlagSystem, set: &ColorSet) -> bool {
    find_coloring(m, &set.complement()).is_some()
}

/// The four arrow pictures on a rank-2 map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsoKind {
    /// Circular arrows on faces, running the same way along every edge.
    Face,
    /// Circular arrows at vertices, crossing every edge the same way.
    Vertex,
    /// A circulation around every edge, agreeing on each face-center to
    /// vertex segment.
    Edge,
    /// Circular arrows on faces, opposite along every edge: an orientation.
    Full,
}

impl PsoKind {
    pub const ALL: [PsoKind; 4] = [PsoKind::Full, PsoKind::Face, PsoKind::Vertex, PsoKind::Edge];

    // (cell dimension, connection crossing between cells, arrows must oppose)
    fn layout(self) -> (usize, usize, bool) {
        match self {
            PsoKind::Full => (2, 2, true),
            PsoKind::Face => (2, 2, false),
            PsoKind::Vertex => (0, 0, false),
            PsoKind::Edge => (1, 1, false),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PsoKind::Face => "face",
            PsoKind::Vertex => "vertex",
            PsoKind::Edge => "edge",
            PsoKind::Full => "full",
        }
    }

    /// The color set whose colorability this arrow picture is equivalent to.
    pub fn color_set(self) -> ColorSet {
        let idx: &[usize] = match self {
            PsoKind::Full => &[0, 1, 2],
            PsoKind::Face => &[0, 1],
            PsoKind::Vertex => &[1, 2],
            PsoKind::Edge => &[0, 2],
        };
        ColorSet::from_indices(idx, 2).expect("indices within rank 2")
    }
}

impl core::str::FromStr for PsoKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PsoKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::BadParameters(alloc::format!("pso kind {s:?}")))
    }
}

/// An arrow on every cell of one dimension.
///
/// Each cell is a cycle of flags alternating between two connections; a
/// circular arrow on it singles out every other flag. `points_forward(f)`
/// says whether flag `f` is one of those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowAssignment {
    pub kind: PsoKind,
    /// One bit per cell, cells numbered by smallest flag.
    pub arrows: Vec<u8>,
    cell_of_flag: Vec<usize>,
    // alternation parity of each flag within its cell, relative to the
    // cell's smallest flag
    flag_parity: Vec<u8>,
}

impl ArrowAssignment {
    pub fn points_forward(&self, f: usize) -> bool {
        self.flag_parity[f] ^ self.arrows[self.cell_of_flag[f]] == 0
    }

    /// Re-checks the matching rule at every flag of `m`.
    pub fn is_valid_for(&self, m: &FlagSystem) -> bool {
        let (dim, cross, oppose) = self.kind.layout();
        if m.rank() != 2 || self.cell_of_flag.len() != m.flag_count() {
            return false;
        }
        (0..m.flag_count()).all(|f| {
            let inside = (0..=2)
                .filter(|&j| j != dim)
                .all(|j| self.points_forward(m.r(j, f)) != self.points_forward(f));
            let across = (self.points_forward(m.r(cross, f)) != self.points_forward(f)) == oppose;
            inside && across
        })
    }
}

/// Find arrows of the given kind by solving the matching constraints between
/// cells. Works on cells only and never builds a flag coloring.
pub fn direct_pso(m: &FlagSystem, kind: PsoKind) -> Result<Option<ArrowAssignment>> {
    m.require_rank_two()?;
    let (dim, cross, oppose) = kind.layout();
    let (cell_of_flag, cell_count) = m.cell_labels(dim);
    let inner: Vec<usize> = (0..=2).filter(|&j| j != dim).collect();

    // alternation parity inside each cell
    let n = m.flag_count();
    let mut flag_parity = vec![UNSET; n];
    for start in 0..n {
        if flag_parity[start] != UNSET {
            continue;
        }
        flag_parity[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &j in &inner {
                let g = m.r(j, f);
                if flag_parity[g] == UNSET {
                    flag_parity[g] = flag_parity[f] ^ 1;
                    queue.push_back(g);
                } else {
                    debug_assert_eq!(flag_parity[g], flag_parity[f] ^ 1, "cell of odd length");
                }
            }
        }
    }

    // arrows[c] ^ arrows[c'] = parity(f) ^ parity(f r_cross) ^ oppose
    let mut uf = ParityUnionFind::new(cell_count);
    for f in 0..n {
        let g = m.r(cross, f);
        let need = flag_parity[f] ^ flag_parity[g] ^ oppose as u8;
        if !uf.relate(cell_of_flag[f], cell_of_flag[g], need) {
            return Ok(None);
        }
    }
    Ok(Some(ArrowAssignment {
        kind,
        arrows: uf.normalized(),
        cell_of_flag,
        flag_parity,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    // single square face glued into a torus: word "abAB"
    fn torus_square() -> FlagSystem {
        crate::construct::polygon_gluing("abAB").unwrap()
    }

    #[test]
    fn empty_set_always_colorable() {
        let m = torus_square();
        let c = find_coloring(&m, &ColorSet::empty(2)).unwrap();
        assert!(c.assignment.iter().all(|&x| x == 0));
    }

    #[test]
    fn complement_is_the_other_coloring() {
        let m = torus_square();
        for s in ColorSet::all(2) {
            if let Some(c) = find_coloring(&m, &s) {
                assert_eq!(c.color(0), 0);
                assert!(c.complement().is_valid_for(&m));
            }
        }
    }

    #[test]
    fn inconsistent_cycle_certifies() {
        let pp = crate::construct::polygon_gluing("aa").unwrap();
        let r = ColorSet::full(2);
        assert!(find_coloring(&pp, &r).is_none());
        let (f, w) = find_inconsistent_cycle(&pp, &r).unwrap();
        assert!(!cycle_consistent(&pp, f, &w, &r).unwrap());
    }

    #[test]
    fn cycle_must_close() {
        let m = torus_square();
        let w = FlagWord::new(vec![0]);
        assert_eq!(
            cycle_consistent(&m, 0, &w, &ColorSet::empty(2)),
            Err(Error::NotAClosedCycle(0))
        );
        let w = FlagWord::new(vec![0, 2, 0, 2]);
        assert!(cycle_consistent(&m, 3, &w, &ColorSet::singleton(0, 2)).unwrap());
    }

    #[test]
    fn pso_kind_names() {
        for k in PsoKind::ALL {
            assert_eq!(k.name().parse::<PsoKind>().unwrap(), k);
        }
        assert!("bogus".parse::<PsoKind>().is_err());
    }

    #[test]
    fn excluding_cell_rejects_non_faces() {
        let m = torus_square();
        let edge = m.cells(1).remove(0);
        assert_eq!(coloring_group_excluding_cell(&m, &edge), Err(Error::NotAFace));
        let face = m.cells(2).remove(0);
        let g = coloring_group_excluding_cell(&m, &face).unwrap();
        // nothing left once the only face is gone
        assert_eq!(g.len(), 8);
    }
}
