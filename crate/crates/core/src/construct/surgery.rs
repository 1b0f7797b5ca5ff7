//! Local surgeries on maps: inserting vertices and edges, forcing colorings,
//! and connected sums along faces.

use alloc::{collections::VecDeque, vec, vec::Vec};
use core::str::FromStr;

use crate::{
    colorset::ColorSet,
    flagsys::{Cell, FlagSystem},
    operators::dual,
    Error, Result,
};

fn check_edge(m: &FlagSystem, edge: &Cell) -> Result<usize> {
    m.require_rank_two()?;
    let f = *edge.flags.first().ok_or(Error::NotAnEdge)?;
    if edge.dimension != 1 || f >= m.flag_count() || m.cell_containing(1, f)? != *edge {
        return Err(Error::NotAnEdge);
    }
    Ok(f)
}

/// Insert a vertex in the middle of `edge`. Old flags keep their numbers and
/// four new ones are appended.
pub fn subdivide_edge(m: &FlagSystem, edge: &Cell) -> Result<FlagSystem> {
    let f = check_edge(m, edge)?;
    Ok(subdivide_at(m, f))
}

fn subdivide_at(m: &FlagSystem, f: usize) -> FlagSystem {
    let n = m.flag_count();
    let a = m.r(0, f);
    let b = m.r(2, f);
    let c = m.r(0, b);
    let [f2, a2, b2, c2] = [n, n + 1, n + 2, n + 3];
    let mut conns = m.connections();
    for conn in conns.iter_mut() {
        conn.extend_from_slice(&[0; 4]);
    }
    let mut pair = |j: usize, x: usize, y: usize| {
        conns[j][x] = y;
        conns[j][y] = x;
    };
    for (old, new) in [(f, f2), (a, a2), (b, b2), (c, c2)] {
        pair(0, old, new);
    }
    pair(1, f2, a2);
    pair(1, b2, c2);
    pair(2, f2, b2);
    pair(2, a2, c2);
    FlagSystem::new(2, conns).expect("subdivision keeps every invariant")
}

/// Add a parallel copy of `edge`, creating a bigon face between the two.
pub fn double_edge(m: &FlagSystem, edge: &Cell) -> Result<FlagSystem> {
    let f = check_edge(m, edge)?;
    Ok(dual(&subdivide_at(&dual(m), f)))
}

/// Replace `edge` by three parallel edges bounding two bigons. The newest
/// bigon contains the last four flags.
pub fn triple_edge(m: &FlagSystem, edge: &Cell) -> Result<FlagSystem> {
    let f = check_edge(m, edge)?;
    let (vertex, _) = m.cell_labels(0);
    if vertex[f] == vertex[m.r(0, f)] {
        return Err(Error::LoopEdge);
    }
    let once = dual(&subdivide_at(&dual(m), f));
    Ok(dual(&subdivide_at(&dual(&once), f)))
}

/// Target properties for [`make_property`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// `{0}`-colorable.
    VertexBipartite,
    /// `{2}`-colorable.
    FaceBipartite,
    /// `{1, 2}`-colorable.
    VertexPso,
    /// `{0, 1}`-colorable.
    FacePso,
    OddFace,
    OddVertex,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::VertexBipartite,
        Property::FaceBipartite,
        Property::VertexPso,
        Property::FacePso,
        Property::OddFace,
        Property::OddVertex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::VertexBipartite => "vertex-bipartite",
            Property::FaceBipartite => "face-bipartite",
            Property::VertexPso => "vpso",
            Property::FacePso => "fpso",
            Property::OddFace => "odd-face",
            Property::OddVertex => "odd-vertex",
        }
    }

    fn dual(self) -> Property {
        match self {
            Property::VertexBipartite => Property::FaceBipartite,
            Property::FaceBipartite => Property::VertexBipartite,
            Property::VertexPso => Property::FacePso,
            Property::FacePso => Property::VertexPso,
            Property::OddFace => Property::OddVertex,
            Property::OddVertex => Property::OddFace,
        }
    }

    /// Whether `m` already has the property.
    pub fn holds(self, m: &FlagSystem) -> Result<bool> {
        m.require_rank_two()?;
        let colorable = |bits| crate::coloring::find_coloring(m, &ColorSet::from_bits(bits, 2).unwrap()).is_some();
        Ok(match self {
            Property::VertexBipartite => colorable(0b001),
            Property::FaceBipartite => colorable(0b100),
            Property::VertexPso => colorable(0b110),
            Property::FacePso => colorable(0b011),
            Property::OddFace => m.cells(2).iter().any(|c| c.degree() % 2 == 1),
            Property::OddVertex => m.cells(0).iter().any(|c| c.degree() % 2 == 1),
        })
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownName(s.into()))
    }
}

/// Force `property` by inserting vertices on edges (vertex-side properties
/// and odd faces) or parallel edges (face-side properties and odd vertices).
/// Returns the new map and the number of insertions. The surface is
/// unchanged and colorings the map already had survive.
pub fn make_property(m: &FlagSystem, property: Property) -> Result<(FlagSystem, usize)> {
    m.require_rank_two()?;
    match property {
        Property::VertexBipartite => Ok(fix_vertex_coloring(m, false, true)),
        Property::VertexPso => Ok(fix_vertex_coloring(m, true, false)),
        Property::OddFace => Ok(make_odd_face(m)),
        _ => {
            let (d, count) = make_property(&dual(m), property.dual())?;
            Ok((dual(&d), count))
        }
    }
}

/// Colors each vertex star (`r1`, `r2` flip when `alternate`), picks star
/// offsets along a BFS tree, then subdivides every edge where `r0` breaks
/// the rule. Stars of old vertices are untouched by subdivision, so one pass
/// suffices.
fn fix_vertex_coloring(m: &FlagSystem, alternate: bool, r0_flips: bool) -> (FlagSystem, usize) {
    let n = m.flag_count();
    let flip = r0_flips as u8;
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    let color_star = |start: usize, c: u8, color: &mut Vec<u8>, queue: &mut VecDeque<usize>| {
        let mut stack = vec![(start, c)];
        color[start] = c;
        while let Some((f, c)) = stack.pop() {
            queue.push_back(f);
            for j in [1, 2] {
                let g = m.r(j, f);
                if color[g] == u8::MAX {
                    let cg = c ^ alternate as u8;
                    color[g] = cg;
                    stack.push((g, cg));
                }
            }
        }
    };
    color_star(0, 0, &mut color, &mut queue);
    while let Some(f) = queue.pop_front() {
        let g = m.r(0, f);
        if color[g] == u8::MAX {
            color_star(g, color[f] ^ flip, &mut color, &mut queue);
        }
    }
    let bad: Vec<usize> = m
        .cells(1)
        .iter()
        .map(Cell::representative)
        .filter(|&f| color[m.r(0, f)] != color[f] ^ flip)
        .collect();
    let count = bad.len();
    let mut out = m.clone();
    for f in bad {
        out = subdivide_at(&out, f);
    }
    (out, count)
}

fn make_odd_face(m: &FlagSystem) -> (FlagSystem, usize) {
    if m.cells(2).iter().any(|c| c.degree() % 2 == 1) {
        return (m.clone(), 0);
    }
    let (face, _) = m.cell_labels(2);
    if let Some(f) = (0..m.flag_count()).find(|&f| face[f] != face[m.r(2, f)]) {
        return (subdivide_at(m, f), 1);
    }
    // every edge has the same face on both sides: a parallel edge makes a
    // bigon next to the old face
    let doubled = dual(&subdivide_at(&dual(m), 0));
    (subdivide_at(&doubled, 0), 2)
}

/// Remove the face of `f_m` from `m` and the face of `f_n` from `n` and glue
/// the two boundaries, matching `f_m` with `f_n`. Flags outside the two faces
/// are renumbered in order, first those of `m`.
pub fn connected_sum(m: &FlagSystem, n: &FlagSystem, f_m: usize, f_n: usize) -> Result<FlagSystem> {
    m.require_rank_two()?;
    n.require_rank_two()?;
    let face_m = m.cell_containing(2, f_m)?;
    let face_n = n.cell_containing(2, f_n)?;
    if face_m.degree() != face_n.degree() {
        return Err(Error::FaceSizeMismatch(face_m.degree(), face_n.degree()));
    }
    for (sys, face, f) in [(m, &face_m, f_m), (n, &face_n, f_n)] {
        if face.flags.iter().any(|&g| face.contains(sys.r(2, g))) {
            return Err(Error::FaceSelfAdjacent(f));
        }
    }
    let mut index_m = vec![usize::MAX; m.flag_count()];
    let mut index_n = vec![usize::MAX; n.flag_count()];
    let mut next = 0;
    for (index, face) in [(&mut index_m, &face_m), (&mut index_n, &face_n)] {
        for (g, slot) in index.iter_mut().enumerate() {
            if !face.contains(g) {
                *slot = next;
                next += 1;
            }
        }
    }
    let mut conns = vec![vec![usize::MAX; next]; 3];
    for (sys, index) in [(m, &index_m), (n, &index_n)] {
        for g in 0..sys.flag_count() {
            if index[g] == usize::MAX {
                continue;
            }
            for j in 0..3 {
                let h = sys.r(j, g);
                if index[h] != usize::MAX {
                    conns[j][index[g]] = index[h];
                }
            }
        }
    }
    // walk both boundaries in step, crossing each side with r2
    let walk = |sys: &FlagSystem, start: usize| {
        let mut seq = Vec::with_capacity(face_m.flags.len());
        let mut x = start;
        for _ in 0..face_m.degree() {
            seq.push(x);
            seq.push(sys.r(1, x));
            x = sys.r(1, sys.r(0, x));
        }
        seq
    };
    for (x, y) in walk(m, f_m).into_iter().zip(walk(n, f_n)) {
        let a = index_m[m.r(2, x)];
        let b = index_n[n.r(2, y)];
        conns[2][a] = b;
        conns[2][b] = a;
    }
    FlagSystem::new(2, conns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{
        construct::{platonic, polygon_gluing},
        flagsys::SurfaceSignature,
    };

    fn first_edge(m: &FlagSystem) -> Cell {
        m.cell_containing(1, 0).unwrap()
    }

    #[test]
    fn subdivision_counts() {
        let cube = platonic("cube").unwrap();
        let s = subdivide_edge(&cube, &first_edge(&cube)).unwrap();
        assert_eq!((s.cell_count(0), s.cell_count(1), s.cell_count(2)), (9, 13, 6));
        for f in 0..cube.flag_count() {
            assert_eq!(s.r(1, f), cube.r(1, f));
            assert_eq!(s.r(2, f), cube.r(2, f));
        }
        let d = double_edge(&cube, &first_edge(&cube)).unwrap();
        assert_eq!((d.cell_count(0), d.cell_count(1), d.cell_count(2)), (8, 13, 7));
    }

    #[test]
    fn triple_edge_adds_two_bigons() {
        let t = platonic("tetrahedron").unwrap();
        let m = triple_edge(&t, &first_edge(&t)).unwrap();
        assert_eq!(m.flag_count(), t.flag_count() + 8);
        let bigon = m.cell_containing(2, m.flag_count() - 1).unwrap();
        assert_eq!(bigon.degree(), 2);
        assert!(bigon.flags.iter().all(|&g| g >= t.flag_count() - 4 || bigon.contains(g)));
        let (vertex, _) = m.cell_labels(0);
        let mut ends: Vec<usize> = bigon.flags.iter().map(|&g| vertex[g]).collect();
        ends.sort();
        ends.dedup();
        assert_eq!(ends.len(), 2);
        let loop_map = polygon_gluing("aA").unwrap();
        let edge = first_edge(&dual(&loop_map));
        assert_eq!(triple_edge(&dual(&loop_map), &edge), Err(Error::LoopEdge));
    }

    #[test]
    fn wrong_cells_are_rejected() {
        let t = platonic("tetrahedron").unwrap();
        let face = t.cell_containing(2, 0).unwrap();
        assert_eq!(subdivide_edge(&t, &face), Err(Error::NotAnEdge));
    }

    #[test]
    fn properties_are_reached() {
        let m = polygon_gluing("abcabc").unwrap();
        for p in Property::ALL {
            let (out, _) = make_property(&m, p).unwrap();
            assert!(p.holds(&out).unwrap(), "{}", p.name());
            assert_eq!(out.surface_signature(), m.surface_signature());
        }
    }

    #[test]
    fn odd_face_needs_one_insertion() {
        let cube = platonic("cube").unwrap();
        let (out, count) = make_property(&cube, Property::OddFace).unwrap();
        assert_eq!(count, 1);
        assert!(Property::OddFace.holds(&out).unwrap());
    }

    #[test]
    fn sum_of_two_tori() {
        let t = polygon_gluing("abAB").unwrap();
        let t = subdivide_edge(&t, &first_edge(&t)).unwrap();
        let t = double_edge(&t, &first_edge(&t)).unwrap();
        let f = t.flag_count() - 1;
        assert_eq!(t.cell_containing(2, f).unwrap().degree(), 2);
        let s = connected_sum(&t, &t, f, f).unwrap();
        assert_eq!(s.surface_signature().unwrap(), SurfaceSignature::orientable(2));
    }

    #[test]
    fn sum_errors() {
        let t = platonic("tetrahedron").unwrap();
        let c = platonic("cube").unwrap();
        assert_eq!(connected_sum(&t, &c, 0, 0), Err(Error::FaceSizeMismatch(3, 4)));
        let one_face = polygon_gluing("abAB").unwrap();
        assert_eq!(
            connected_sum(&one_face, &one_face, 0, 0),
            Err(Error::FaceSelfAdjacent(0))
        );
    }
}
