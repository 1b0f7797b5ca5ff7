//! Maps from rotation systems and from polygons with glued sides.

use alloc::{format, string::String, vec, vec::Vec};

use crate::{flagsys::FlagSystem, Error, Result};

/// Whether walking along an edge keeps the local rotation or mirrors it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeSign {
    Positive,
    Negative,
}

/// A graph embedded by a cyclic order of darts at every vertex plus a sign on
/// every edge. Darts are `0..2E`; edge `k` is `(a, b, sign)` with `a` and `b`
/// the darts at its two ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rotations: Vec<Vec<usize>>,
    edges: Vec<(usize, usize, EdgeSign)>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<usize>>, edges: Vec<(usize, usize, EdgeSign)>) -> Result<Self> {
        let darts = 2 * edges.len();
        let bad = |msg: String| Err(Error::InvalidRotationSystem(msg));
        if darts == 0 {
            return bad("no edges".into());
        }
        let mut seen = vec![0u8; darts];
        for (v, rot) in rotations.iter().enumerate() {
            if rot.is_empty() {
                return bad(format!("vertex {v} has no darts"));
            }
            for &d in rot {
                if d >= darts {
                    return bad(format!("dart {d} at vertex {v} has no edge"));
                }
                seen[d] += 1;
            }
        }
        for &(a, b, _) in &edges {
            if a >= darts || b >= darts || a == b {
                return bad(format!("edge ({a}, {b}) is malformed"));
            }
            seen[a] += 2;
            seen[b] += 2;
        }
        if let Some(d) = seen.iter().position(|&s| s != 3) {
            return bad(format!("dart {d} must sit at one vertex and one edge end"));
        }
        Ok(Self { rotations, edges })
    }

    /// A simple graph with all edges positive. `neighbors[v]` lists the
    /// neighbors of `v` in rotation order.
    pub fn from_neighbor_lists(neighbors: &[&[usize]]) -> Result<Self> {
        let mut dart_of = alloc::collections::BTreeMap::new();
        let mut rotations = Vec::with_capacity(neighbors.len());
        let mut next = 0;
        for (v, nb) in neighbors.iter().enumerate() {
            let mut rot = Vec::with_capacity(nb.len());
            for &w in nb.iter() {
                if dart_of.insert((v, w), next).is_some() {
                    return Err(Error::InvalidRotationSystem(format!(
                        "{v} lists {w} twice"
                    )));
                }
                rot.push(next);
                next += 1;
            }
            rotations.push(rot);
        }
        let mut edges = Vec::new();
        for (&(v, w), &d) in &dart_of {
            if v < w {
                let e = dart_of.get(&(w, v)).ok_or_else(|| {
                    Error::InvalidRotationSystem(format!("{v} lists {w} but not conversely"))
                })?;
                edges.push((d, *e, EdgeSign::Positive));
            } else if !dart_of.contains_key(&(w, v)) {
                return Err(Error::InvalidRotationSystem(format!(
                    "{v} lists {w} but not conversely"
                )));
            }
        }
        Self::new(rotations, edges)
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn edges(&self) -> &[(usize, usize, EdgeSign)] {
        &self.edges
    }
}

/// Flags are `(dart, side)` numbered `2d + s`; side `1` faces the next dart in
/// the rotation. `r2` swaps sides, `r1` steps to the next dart, and `r0`
/// crosses to the far end, swapping sides on positive edges.
pub fn from_rotation_system(rs: &RotationSystem) -> Result<FlagSystem> {
    let darts = 2 * rs.edges.len();
    let mut r0 = vec![0; 2 * darts];
    let mut r1 = vec![0; 2 * darts];
    let r2: Vec<usize> = (0..2 * darts).map(|x| x ^ 1).collect();
    for rot in &rs.rotations {
        for (k, &d) in rot.iter().enumerate() {
            let next = rot[(k + 1) % rot.len()];
            r1[2 * d + 1] = 2 * next;
            r1[2 * next] = 2 * d + 1;
        }
    }
    for &(a, b, sign) in &rs.edges {
        for s in 0..2 {
            let t = match sign {
                EdgeSign::Positive => 1 - s,
                EdgeSign::Negative => s,
            };
            r0[2 * a + s] = 2 * b + t;
            r0[2 * b + t] = 2 * a + s;
        }
    }
    FlagSystem::new(2, vec![r0, r1, r2])
}

/// One side of a polygon: which edge it is glued along and whether it is
/// traversed against that edge's direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Side {
    pub label: usize,
    pub reversed: bool,
}

impl Side {
    pub fn new(label: usize, reversed: bool) -> Self {
        Self { label, reversed }
    }
}

/// Glue polygons along their sides. Every label must occur exactly twice.
///
/// Side `t` of polygon `p` has flags `(p, t, 0)` at its start corner and
/// `(p, t, 1)` at its end. `r0` swaps the two, `r1` turns the corner to side
/// `t + 1`, and `r2` crosses to the other occurrence of the label at the same
/// endpoint of the edge.
pub fn from_polygons(faces: &[Vec<Side>]) -> Result<FlagSystem> {
    let bad = |msg: String| Err(Error::InvalidGluing(msg));
    if faces.is_empty() {
        return bad("no faces".into());
    }
    let mut base = Vec::with_capacity(faces.len());
    let mut total = 0;
    for (p, face) in faces.iter().enumerate() {
        if face.is_empty() {
            return bad(format!("face {p} has no sides"));
        }
        base.push(total);
        total += 2 * face.len();
    }
    let labels = faces.iter().flatten().map(|s| s.label).max().unwrap_or(0) + 1;
    let mut occurrences: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); labels];
    for (p, face) in faces.iter().enumerate() {
        for (t, side) in face.iter().enumerate() {
            occurrences[side.label].push((p, t, side.reversed));
        }
    }
    let mut r0 = vec![0; total];
    let mut r1 = vec![0; total];
    let mut r2 = vec![0; total];
    for (p, face) in faces.iter().enumerate() {
        let d = face.len();
        for t in 0..d {
            let x = base[p] + 2 * t;
            r0[x] = x + 1;
            r0[x + 1] = x;
            let y = base[p] + 2 * ((t + 1) % d);
            r1[x + 1] = y;
            r1[y] = x + 1;
        }
    }
    for (label, occ) in occurrences.iter().enumerate() {
        match occ.as_slice() {
            [] => continue,
            &[(p, t, rev), (q, u, rev2)] => {
                for e in 0..2 {
                    // same endpoint: (e == 0) != rev must agree on both sides
                    let e2 = e ^ (rev as usize) ^ (rev2 as usize);
                    let x = base[p] + 2 * t + e;
                    let y = base[q] + 2 * u + e2;
                    r2[x] = y;
                    r2[y] = x;
                }
            }
            _ => return bad(format!("label {label} occurs {} times", occ.len())),
        }
    }
    FlagSystem::new(2, vec![r0, r1, r2])
}

/// Parses faces written as letter words separated by commas; a lowercase
/// letter is a side along its edge and the uppercase one a side against it.
pub fn parse_polygons(text: &str) -> Result<Vec<Vec<Side>>> {
    text.split(',')
        .map(|word| {
            word.trim()
                .chars()
                .map(|c| {
                    if c.is_ascii_lowercase() {
                        Ok(Side::new((c as u8 - b'a') as usize, false))
                    } else if c.is_ascii_uppercase() {
                        Ok(Side::new((c as u8 - b'A') as usize, true))
                    } else {
                        Err(Error::InvalidGluing(format!("unexpected character {c:?}")))
                    }
                })
                .collect()
        })
        .collect()
}

/// A single polygon with glued sides, e.g. `abAB` for the torus or `aa` for
/// the projective plane. Several faces may be separated by commas.
pub fn polygon_gluing(word: &str) -> Result<FlagSystem> {
    from_polygons(&parse_polygons(word)?)
}
