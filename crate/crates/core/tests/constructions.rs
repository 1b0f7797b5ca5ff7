use mapforge_core::{
    coloring_group,
    construct::{
        connected_sum, cube_maniplex, from_rotation_system, grid_g, make_property, platonic,
        polygon_gluing, triple_edge, EdgeSign, Property, RotationSystem,
    },
    find_coloring, ColorSet, ColoringGroup, FlagSystem, SurfaceSignature,
};

fn counts(m: &FlagSystem) -> (usize, usize, usize) {
    (m.cell_count(0), m.cell_count(1), m.cell_count(2))
}

#[test]
fn m4_octagon() {
    let m = polygon_gluing("abABcdCD").unwrap();
    assert_eq!(m.flag_count(), 16);
    assert_eq!(counts(&m), (1, 4, 1));
    assert_eq!(m.surface_signature().unwrap(), SurfaceSignature::orientable(2));
}

#[test]
fn grid_573() {
    let g = grid_g(5, 7, 3).unwrap();
    assert_eq!(g.surface_signature().unwrap(), SurfaceSignature::non_orientable(5));
    assert_eq!(coloring_group(&g).unwrap().to_string(), "e,1");
    let edge = g.cell_containing(1, 0).unwrap();
    let t = triple_edge(&g, &edge).unwrap();
    assert_eq!(coloring_group(&t).unwrap().to_string(), "e,1");
    assert_eq!(t.cell_containing(2, t.flag_count() - 1).unwrap().degree(), 2);
}

#[test]
fn grids_are_edge_bipartite() {
    let one = ColorSet::singleton(1, 2);
    for m in 1..5 {
        for n in 1..5 {
            for k in 0..n {
                let g = grid_g(m, n, k).unwrap();
                assert!(find_coloring(&g, &one).is_some(), "G({m},{n},{k})");
            }
        }
    }
}

#[test]
fn cube_from_two_generators() {
    let c = cube_maniplex(3).unwrap();
    assert!(c.is_isomorphic(&platonic("cube").unwrap()).unwrap());
    let c4 = cube_maniplex(4).unwrap();
    assert!(find_coloring(&c4, &ColorSet::singleton(0, 3)).is_some());
    assert!(find_coloring(&c4, &ColorSet::full(3)).is_some());
}

#[test]
fn cube_group() {
    let t = coloring_group(&platonic("cube").unwrap()).unwrap();
    assert_eq!(t, ColoringGroup::parse("e,0,12,012", 2).unwrap());
}

#[test]
fn sign_flips_keep_characteristic_recomputed() {
    let cube = [
        &[4usize, 1, 2][..],
        &[5, 3, 0],
        &[6, 0, 3],
        &[7, 2, 1],
        &[6, 5, 0],
        &[4, 7, 1],
        &[7, 4, 2],
        &[5, 6, 3],
    ];
    let rs = RotationSystem::from_neighbor_lists(&cube).unwrap();
    let m = from_rotation_system(&rs).unwrap();
    assert!(m.is_isomorphic(&platonic("cube").unwrap()).unwrap());
    let flipped = RotationSystem::new(
        rs.rotations().to_vec(),
        rs.edges().iter().map(|&(a, b, _)| (a, b, EdgeSign::Negative)).collect(),
    )
    .unwrap();
    let f = from_rotation_system(&flipped).unwrap();
    let (v, e, faces) = counts(&f);
    assert_eq!((v, e), (8, 12));
    let chi = v as i64 - e as i64 + faces as i64;
    assert_eq!(f.surface_signature().unwrap().euler_characteristic, chi);
}

#[test]
fn tetrahedron_made_vertex_bipartite() {
    let t = platonic("tetrahedron").unwrap();
    let (m, count) = make_property(&t, Property::VertexBipartite).unwrap();
    assert!(count > 0);
    assert!(find_coloring(&m, &ColorSet::singleton(0, 2)).is_some());
    assert_eq!(m.surface_signature().unwrap(), SurfaceSignature::sphere());
}

#[test]
fn spheres_summed_along_squares() {
    let c = platonic("cube").unwrap();
    let s = connected_sum(&c, &c, 0, 5).unwrap();
    assert_eq!(s.euler_characteristic().unwrap(), 2);
    assert_eq!(s.cell_count(2), 10);
}
