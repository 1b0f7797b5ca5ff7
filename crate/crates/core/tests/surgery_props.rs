use mapforge_core::{construct, coloring_group, FlagSystem};
use proptest::prelude::*;

fn seed(which: usize) -> FlagSystem {
    match which {
        0 => construct::platonic("cube").unwrap(),
        1 => construct::tri_torus(2, 3).unwrap(),
        2 => construct::grid_g(3, 5, 2).unwrap(),
        _ => construct::polygon_gluing("abcabc").unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn surgeries_keep_the_surface(which in 0..4usize, steps in proptest::collection::vec((0..3usize, any::<u16>()), 1..6)) {
        let mut m = seed(which);
        let surface = m.surface_signature().unwrap();
        for (op, pick) in steps {
            let edge = m.cell_containing(1, pick as usize % m.flag_count()).unwrap();
            let next = match op {
                0 => construct::subdivide_edge(&m, &edge),
                1 => construct::double_edge(&m, &edge),
                _ => construct::triple_edge(&m, &edge),
            };
            if let Ok(next) = next {
                prop_assert_eq!(next.cell_count(1), m.cell_count(1) + [1, 1, 2][op]);
                m = next;
            }
        }
        prop_assert_eq!(m.surface_signature().unwrap(), surface);
    }

    #[test]
    fn sum_adds_characteristics(a in 0..4usize, b in 0..4usize, fa in any::<u16>(), fb in any::<u16>()) {
        let (m, n) = (seed(a), seed(b));
        let (fa, fb) = (fa as usize % m.flag_count(), fb as usize % n.flag_count());
        if let Ok(sum) = construct::connected_sum(&m, &n, fa, fb) {
            let chi = |x: &FlagSystem| x.euler_characteristic().unwrap();
            prop_assert_eq!(chi(&sum), chi(&m) + chi(&n) - 2);
            let common = coloring_group(&m).unwrap().intersection(&coloring_group(&n).unwrap());
            prop_assert!(common.is_subgroup_of(&coloring_group(&sum).unwrap()));
        }
    }
}
