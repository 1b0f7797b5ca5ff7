//! Named families of maps and maniplexes.

use alloc::{collections::BTreeMap, format, vec, vec::Vec};

use super::gluing::{from_polygons, from_rotation_system, RotationSystem, Side};
use crate::{flagsys::FlagSystem, Error, Result};

// Neighbor lists in counterclockwise order seen from outside, computed from
// the usual coordinates.
const TETRAHEDRON: &[&[usize]] = &[
    &[1, 2, 3],
    &[0, 3, 2],
    &[0, 1, 3],
    &[1, 0, 2],
];

const CUBE: &[&[usize]] = &[
    &[4, 1, 2],
    &[5, 3, 0],
    &[6, 0, 3],
    &[7, 2, 1],
    &[6, 5, 0],
    &[4, 7, 1],
    &[7, 4, 2],
    &[5, 6, 3],
];

const OCTAHEDRON: &[&[usize]] = &[
    &[2, 4, 3, 5],
    &[2, 5, 3, 4],
    &[0, 5, 1, 4],
    &[0, 4, 1, 5],
    &[0, 2, 1, 3],
    &[0, 3, 1, 2],
];

const DODECAHEDRON: &[&[usize]] = &[
    &[8, 9, 10],
    &[9, 11, 16],
    &[12, 14, 10],
    &[17, 12, 16],
    &[13, 15, 8],
    &[19, 11, 15],
    &[13, 14, 18],
    &[19, 18, 17],
    &[4, 0, 14],
    &[15, 1, 0],
    &[2, 0, 16],
    &[5, 17, 1],
    &[18, 2, 3],
    &[6, 19, 4],
    &[6, 8, 2],
    &[4, 5, 9],
    &[3, 10, 1],
    &[7, 3, 11],
    &[7, 6, 12],
    &[7, 5, 13],
];

const ICOSAHEDRON: &[&[usize]] = &[
    &[5, 7, 1, 2, 6],
    &[0, 7, 3, 8, 2],
    &[6, 0, 1, 8, 4],
    &[7, 11, 9, 8, 1],
    &[9, 10, 6, 2, 8],
    &[10, 11, 7, 0, 6],
    &[10, 5, 0, 2, 4],
    &[5, 11, 3, 1, 0],
    &[3, 9, 4, 2, 1],
    &[11, 10, 4, 8, 3],
    &[11, 5, 6, 4, 9],
    &[7, 5, 10, 9, 3],
];

pub const PLATONIC_NAMES: [&str; 5] = ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"];

/// One of the five Platonic solids as a map on the sphere.
pub fn platonic(name: &str) -> Result<FlagSystem> {
    let table = match name {
        "tetrahedron" => TETRAHEDRON,
        "cube" => CUBE,
        "octahedron" => OCTAHEDRON,
        "dodecahedron" => DODECAHEDRON,
        "icosahedron" => ICOSAHEDRON,
        _ => return Err(Error::UnknownName(name.into())),
    };
    from_rotation_system(&RotationSystem::from_neighbor_lists(table)?)
}

/// The `m x n` triangulated torus: a grid of squares with opposite sides
/// identified, each square cut along a diagonal.
pub fn tri_torus(m: usize, n: usize) -> Result<FlagSystem> {
    if m == 0 || n == 0 {
        return Err(Error::BadParameters(format!("tri_torus({m}, {n})")));
    }
    // horizontal, vertical and diagonal edges at (i, j)
    let h = |i: usize, j: usize| 3 * ((i % m) * n + j % n);
    let v = |i: usize, j: usize| h(i, j) + 1;
    let d = |i: usize, j: usize| h(i, j) + 2;
    let mut faces = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            faces.push(vec![
                Side::new(h(i, j), false),
                Side::new(v(i + 1, j), false),
                Side::new(d(i, j), true),
            ]);
            faces.push(vec![
                Side::new(d(i, j), false),
                Side::new(h(i, j + 1), true),
                Side::new(v(i, j), true),
            ]);
        }
    }
    from_polygons(&faces)
}

/// An `m x n` grid of squares on a cylinder (top glued to bottom). The
/// boundary edge on the left of square `(0, j)` is glued to the right side of
/// square `(m-1, n-1-j)`: the first `k` of these pairs keep orientation and
/// the others reverse it. The surface is non-orientable of genus `k + 2`
/// (the Klein bottle when `k = 0`); `k < n` is required.
pub fn grid_g(m: usize, n: usize, k: usize) -> Result<FlagSystem> {
    if m == 0 || n == 0 || k >= n {
        return Err(Error::BadParameters(format!("grid_g({m}, {n}, {k}) needs m, n > 0 and k < n")));
    }
    // labels: horizontal H(i, j) at the bottom of (i, j), vertical V(i, j)
    // on the left of (i, j) for i > 0, boundary B(j) on the left of (0, j)
    let hor = |i: usize, j: usize| i * n + j % n;
    let ver = |i: usize, j: usize| m * n + (i - 1) * n + j;
    let bnd = |j: usize| 2 * m * n - n + j;
    let mut faces = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            let right = if i + 1 < m {
                Side::new(ver(i + 1, j), false)
            } else {
                let b = n - 1 - j;
                Side::new(bnd(b), b >= k)
            };
            let left = if i > 0 { ver(i, j) } else { bnd(j) };
            faces.push(vec![
                Side::new(hor(i, j), false),
                right,
                Side::new(hor(i, j + 1), true),
                Side::new(left, true),
            ]);
        }
    }
    from_polygons(&faces)
}

/// Which base identification a strip map starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StripParity {
    /// Right side glued to the left by translation; Klein bottle.
    Even,
    /// Right side glued to the left upside down; projective plane.
    Odd,
}

/// A strip one unit wide and `h` units tall. Its left and right sides are
/// cut into `h` unit segments and glued pairwise, and its top is glued to its
/// bottom with a flip. Rungs cut the strip into unit squares except for one
/// face of height 2: at the bottom for [`StripParity::Even`], covering
/// segments `h/2 - 1` and `h/2` for [`StripParity::Odd`] (which needs `h`
/// even). Every face is glued to itself.
///
/// Each entry `t` of `swaps` exchanges the labels of right segments `t` and
/// `t + 1`; swaps must be disjoint and may not exchange the two segments of
/// the tall face. Each swap adds 2 to the genus: the result has genus
/// `2 + 2s` (even) or `1 + 2s` (odd) for `s` swaps, and group `{∅, {0,2}}`
/// except for the odd base itself.
pub fn strip_map(h: usize, swaps: &[usize], parity: StripParity) -> Result<FlagSystem> {
    let odd = parity == StripParity::Odd;
    let bad = || Error::BadParameters(format!("strip_map({h}, {swaps:?}, {parity:?})"));
    if h < 2 || (odd && h % 2 == 1) {
        return Err(bad());
    }
    let tall = if odd { h / 2 - 1 } else { 0 };
    let mut sigma: Vec<usize> = (0..h).map(|t| if odd { h - 1 - t } else { t }).collect();
    let mut used = vec![false; h];
    for &t in swaps {
        if t == tall || t + 1 >= h || used[t] || used[t + 1] {
            return Err(bad());
        }
        used[t] = true;
        used[t + 1] = true;
        sigma.swap(t, t + 1);
    }
    // rung k sits at the bottom of face k; rung 0 is also the top
    let cuts: Vec<usize> = (0..h).filter(|&t| t != tall + 1).collect();
    let segment = |t: usize| cuts.len() + t;
    let faces: Vec<Vec<Side>> = (0..cuts.len())
        .map(|k| {
            let lo = cuts[k];
            let hi = cuts.get(k + 1).copied().unwrap_or(h);
            let mut face = vec![Side::new(k, false)];
            face.extend((lo..hi).map(|t| Side::new(segment(sigma[t]), odd)));
            face.push(if k + 1 < cuts.len() {
                Side::new(k + 1, true)
            } else {
                Side::new(0, false)
            });
            face.extend((lo..hi).rev().map(|t| Side::new(segment(t), true)));
            face
        })
        .collect();
    from_polygons(&faces)
}

/// A polygon with `k` cross-caps, `a a b b c c ...`: one face, one vertex,
/// on the non-orientable surface of genus `k`.
pub fn crosscaps(k: usize) -> Result<FlagSystem> {
    if k == 0 {
        return Err(Error::BadParameters("crosscaps(0)".into()));
    }
    let face = (0..k).flat_map(|e| [Side::new(e, false), Side::new(e, false)]).collect();
    from_polygons(&[face])
}

/// The `d`-cube as an abstract polytope of rank `d`. Flags are pairs of a
/// vertex `x ∈ {0,1}^d` and a permutation `π` of the coordinates; `r0` flips
/// coordinate `π(0)` and `r_i` swaps `π(i-1)` and `π(i)`.
pub fn cube_maniplex(d: usize) -> Result<FlagSystem> {
    if !(2..=7).contains(&d) {
        return Err(Error::BadParameters(format!("cube_maniplex({d}) needs 2 <= d <= 7")));
    }
    let perms = permutations(d);
    let index: BTreeMap<&[u8], usize> = perms.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect();
    let count = perms.len() << d;
    let flag = |x: usize, p: &[u8]| (index[p] << d) | x;
    let mut conns = vec![vec![0; count]; d];
    for (k, p) in perms.iter().enumerate() {
        for x in 0..1usize << d {
            let f = (k << d) | x;
            conns[0][f] = flag(x ^ (1 << p[0]), p);
            let mut q = p.clone();
            for i in 1..d {
                q.swap(i - 1, i);
                conns[i][f] = flag(x, &q);
                q.swap(i - 1, i);
            }
        }
    }
    FlagSystem::new(d - 1, conns)
}

fn permutations(d: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        let mut longer = Vec::with_capacity(out.len() * d);
        for p in &out {
            for c in (0..d as u8).filter(|c| !p.contains(c)) {
                let mut q: Vec<u8> = p.clone();
                q.push(c);
                longer.push(q);
            }
        }
        out = longer;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagsys::SurfaceSignature;
    use alloc::format;

    #[test]
    fn platonic_counts() {
        let expected = [(4, 6, 4), (8, 12, 6), (6, 12, 8), (20, 30, 12), (12, 30, 20)];
        for (name, (v, e, f)) in PLATONIC_NAMES.iter().zip(expected) {
            let m = platonic(name).unwrap();
            assert_eq!(m.flag_count(), 4 * e, "{name}");
            assert_eq!((m.cell_count(0), m.cell_count(1), m.cell_count(2)), (v, e, f), "{name}");
            assert_eq!(m.surface_signature().unwrap(), SurfaceSignature::sphere());
        }
        assert!(matches!(platonic("cuboctahedron"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn platonic_faces_are_regular() {
        let sizes = [3, 4, 3, 5, 3];
        for (name, size) in PLATONIC_NAMES.iter().zip(sizes) {
            let m = platonic(name).unwrap();
            assert!(m.cells(2).iter().all(|c| c.degree() == size), "{name}");
        }
    }

    #[test]
    fn tri_torus_is_a_torus() {
        let m = tri_torus(3, 4).unwrap();
        assert_eq!(m.surface_signature().unwrap(), SurfaceSignature::orientable(1));
        assert_eq!(m.cell_count(0), 12);
        assert!(m.cells(0).iter().all(|c| c.degree() == 6));
    }

    #[test]
    fn grid_genus() {
        for k in 0..3 {
            let m = grid_g(3, 3, k).unwrap();
            assert_eq!(
                m.surface_signature().unwrap(),
                SurfaceSignature::non_orientable(k as u32 + 2)
            );
            assert_eq!(m.cell_count(0), 9 - k);
        }
        assert!(grid_g(3, 3, 3).is_err());
    }

    #[test]
    fn strip_genus_and_group() {
        use crate::coloring::coloring_group;
        let cases: [(usize, &[usize], StripParity, u32); 6] = [
            (2, &[], StripParity::Even, 2),
            (4, &[1], StripParity::Even, 4),
            (6, &[1, 3], StripParity::Even, 6),
            (4, &[0], StripParity::Odd, 3),
            (4, &[0, 2], StripParity::Odd, 5),
            (6, &[0, 3], StripParity::Odd, 5),
        ];
        for (h, swaps, parity, genus) in cases {
            let m = strip_map(h, swaps, parity).unwrap();
            assert_eq!(m.surface_signature().unwrap(), SurfaceSignature::non_orientable(genus));
            assert_eq!(format!("{}", coloring_group(&m).unwrap()), "e,02", "{h} {swaps:?}");
        }
        let base = strip_map(4, &[], StripParity::Odd).unwrap();
        assert_eq!(base.surface_signature().unwrap(), SurfaceSignature::projective_plane());
        assert!(strip_map(4, &[1], StripParity::Odd).is_err());
        assert!(strip_map(4, &[0, 1], StripParity::Even).is_err());
        assert!(strip_map(5, &[], StripParity::Odd).is_err());
    }

    #[test]
    fn crosscap_genus() {
        for k in 1..5 {
            assert_eq!(
                crosscaps(k).unwrap().surface_signature().unwrap(),
                SurfaceSignature::non_orientable(k as u32)
            );
        }
    }

    #[test]
    fn cube_maniplex_sizes() {
        let c3 = cube_maniplex(3).unwrap();
        assert_eq!(c3.flag_count(), 48);
        assert_eq!(c3.is_isomorphic(&platonic("cube").unwrap()), Ok(true));
        let c4 = cube_maniplex(4).unwrap();
        assert_eq!(c4.rank(), 3);
        assert_eq!(c4.flag_count(), 384);
        assert_eq!((c4.cell_count(0), c4.cell_count(3)), (16, 8));
    }
}
