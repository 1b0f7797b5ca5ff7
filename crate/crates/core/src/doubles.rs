//! `I`-doubles, Sherk covers, and recognizing a double cover from a deck
//! involution.
//!
//! The `I`-double of `M` lives on flags `(f, i)`, numbered `2f + i`. Crossing
//! `r_j` keeps the sheet when `j ∉ I` and switches it when `j ∈ I`. It falls
//! apart into two copies of `M` exactly when `M` is `I`-colorable.

use alloc::{vec, vec::Vec};

use crate::{
    coloring::find_coloring,
    colorset::ColorSet,
    flagsys::FlagSystem,
    Error, Result,
};

/// Outcome of [`i_double`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleResult {
    /// The base was already `I`-colorable, so the double is two copies and
    /// one was kept.
    pub split: bool,
    pub system: FlagSystem,
    /// Projection from `system` to the base.
    pub projection: Vec<usize>,
}

pub fn i_double(m: &FlagSystem, set: &ColorSet) -> Result<DoubleResult> {
    if set.rank() != m.rank() {
        return Err(Error::RankMismatch(m.rank(), set.rank()));
    }
    if find_coloring(m, set).is_some() {
        // the component of (0, 0) is {(f, a(f))}; ordered by 2f + a(f) it is
        // the base itself
        return Ok(DoubleResult {
            split: true,
            system: m.clone(),
            projection: (0..m.flag_count()).collect(),
        });
    }
    let n = m.flag_count();
    let conns = (0..=m.rank())
        .map(|j| {
            let flip = set.contains(j) as usize;
            (0..2 * n)
                .map(|x| {
                    let (f, i) = (x / 2, x % 2);
                    2 * m.r(j, f) + (i ^ flip)
                })
                .collect()
        })
        .collect();
    Ok(DoubleResult {
        split: false,
        system: FlagSystem::new(m.rank(), conns)?,
        projection: (0..2 * n).map(|x| x / 2).collect(),
    })
}

/// The `{0}`-double of a map that is not vertex-bipartite.
pub fn sherk_double(m: &FlagSystem) -> Result<FlagSystem> {
    m.require_rank_two()?;
    let double = i_double(m, &ColorSet::singleton(0, 2))?;
    if double.split {
        return Err(Error::VertexBipartite);
    }
    Ok(double.system)
}

/// A double cover `N = I ≻ M` recovered from `N` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    /// The deck involution identifying the two sheets.
    pub deck: Vec<usize>,
    pub base: FlagSystem,
    pub projection: Vec<usize>,
}

/// Decide whether `n` is the `I`-double of some map that is not
/// `I`-colorable, and if so find that map.
///
/// `n` must be `I`-colorable; then a deck transformation that is a
/// fixed-point-free involution, swaps the two color classes and never agrees
/// with a connection is exactly what identifies the two sheets. Candidates
/// are tried in the order of [`FlagSystem::deck_transformations`].
pub fn recognize_i_double(n: &FlagSystem, set: &ColorSet) -> Option<Recognition> {
    let coloring = find_coloring(n, set)?;
    n.deck_transformations().into_iter().find_map(|u| {
        let swaps = (0..n.flag_count()).all(|f| coloring.color(u[f]) != coloring.color(f));
        if !swaps {
            return None;
        }
        let (base, projection) = quotient(n, &u).ok()?;
        Some(Recognition {
            deck: u,
            base,
            projection,
        })
    })
}

/// Identify every flag `f` with `u(f)`.
///
/// Quotient flags are the pairs `{f, u(f)}` numbered by smallest member, and
/// `s_j [f] = [f r_j]`.
pub fn quotient(n: &FlagSystem, u: &[usize]) -> Result<(FlagSystem, Vec<usize>)> {
    let count = n.flag_count();
    if u.len() != count || u.iter().any(|&g| g >= count) {
        return Err(Error::BadFlagMap);
    }
    for j in 0..=n.rank() {
        for f in 0..count {
            if u[n.r(j, f)] != n.r(j, u[f]) {
                return Err(Error::NotDeck);
            }
        }
    }
    if let Some(f) = (0..count).find(|&f| u[u[f]] != f) {
        return Err(Error::DeckNotInvolution(f));
    }
    if let Some(f) = (0..count).find(|&f| u[f] == f) {
        return Err(Error::HasFixedPoint(f));
    }
    for j in 0..=n.rank() {
        if let Some(f) = (0..count).find(|&f| u[f] == n.r(j, f)) {
            return Err(Error::ConnectionCollision(j, f));
        }
    }
    let mut class = vec![usize::MAX; count];
    let mut next = 0;
    for f in 0..count {
        if class[f] == usize::MAX {
            class[f] = next;
            class[u[f]] = next;
            next += 1;
        }
    }
    let mut conns = vec![vec![0; next]; n.rank() + 1];
    for (j, conn) in conns.iter_mut().enumerate() {
        for f in 0..count {
            conn[class[f]] = class[n.r(j, f)];
        }
    }
    Ok((FlagSystem::new(n.rank(), conns)?, class))
}
