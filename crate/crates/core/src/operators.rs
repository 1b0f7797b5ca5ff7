//! Dual, Petrie, opposite and medial.

use alloc::{vec, vec::Vec};

use crate::{flagsys::FlagSystem, Error, Result};

fn compose(m: &FlagSystem, first: usize, second: usize) -> Vec<usize> {
    (0..m.flag_count()).map(|f| m.r(second, m.r(first, f))).collect()
}

/// Same flags, connections in reverse order.
pub fn dual(m: &FlagSystem) -> FlagSystem {
    let conns = (0..=m.rank()).rev().map(|i| m.connection(i).to_vec()).collect();
    FlagSystem::new(m.rank(), conns).expect("reversing connections keeps every invariant")
}

/// Replace `r2` by `r0 r2`.
pub fn opposite(m: &FlagSystem) -> Result<FlagSystem> {
    if m.rank() < 2 {
        return Err(Error::RankTooSmall {
            rank: m.rank(),
            needed: 2,
        });
    }
    let mut conns = m.connections();
    conns[2] = compose(m, 0, 2);
    FlagSystem::new(m.rank(), conns)
}

/// On a map, `r0` becomes `r0 r2`. In higher rank this is the dual of the
/// opposite of the dual, which replaces `r_{n-2}` by `r_{n-2} r_n`.
pub fn petrie(m: &FlagSystem) -> Result<FlagSystem> {
    if m.rank() == 2 {
        let mut conns = m.connections();
        conns[0] = compose(m, 0, 2);
        return FlagSystem::new(2, conns);
    }
    Ok(dual(&opposite(&dual(m))?))
}

/// The medial map on flags `2f + i`, `i ∈ {0, 1}`:
/// `s0(f,i) = (f r1, i)`, `s1(f,0) = (f r0, 0)`, `s1(f,1) = (f r2, 1)`,
/// `s2(f,i) = (f, 1-i)`.
pub fn medial(m: &FlagSystem) -> Result<FlagSystem> {
    m.require_rank_two()?;
    let n = m.flag_count();
    let mut s0 = vec![0; 2 * n];
    let mut s1 = vec![0; 2 * n];
    let mut s2 = vec![0; 2 * n];
    for f in 0..n {
        for i in 0..2 {
            let x = 2 * f + i;
            s0[x] = 2 * m.r(1, f) + i;
            s1[x] = 2 * m.r(if i == 0 { 0 } else { 2 }, f) + i;
            s2[x] = 2 * f + (1 - i);
        }
    }
    FlagSystem::new(2, vec![s0, s1, s2])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{platonic, polygon_gluing};

    #[test]
    fn dual_is_an_involution() {
        let m = platonic("cube").unwrap();
        assert_eq!(dual(&dual(&m)), m);
    }

    #[test]
    fn opposite_and_petrie_are_involutions() {
        let m = platonic("tetrahedron").unwrap();
        assert_eq!(opposite(&opposite(&m).unwrap()).unwrap(), m);
        assert_eq!(petrie(&petrie(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn opposite_is_pdp_and_dpd() {
        let m = polygon_gluing("abAcBC").unwrap();
        let opp = opposite(&m).unwrap();
        let pdp = petrie(&dual(&petrie(&m).unwrap())).unwrap();
        let dpd = dual(&petrie(&dual(&m)).unwrap());
        assert_eq!(opp, pdp);
        assert_eq!(opp, dpd);
    }

    #[test]
    fn medial_needs_rank_two() {
        let m = crate::construct::cube_maniplex(4).unwrap();
        assert_eq!(medial(&m), Err(Error::RankNotTwo(3)));
        assert!(opposite(&m).is_ok());
    }
}
