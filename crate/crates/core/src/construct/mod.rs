//! Building maps: rotation systems, glued polygons, named families, local
//! surgeries, and maps with a prescribed coloring group.

mod generators;
mod gluing;
mod realize;
mod surgery;

pub use self::{
    generators::{
        crosscaps, cube_maniplex, grid_g, platonic, strip_map, tri_torus, StripParity,
        PLATONIC_NAMES,
    },
    gluing::{
        from_polygons, from_rotation_system, parse_polygons, polygon_gluing, EdgeSign,
        RotationSystem, Side,
    },
    realize::{build_map_with_group, is_exceptional, subgroups_of_p},
    surgery::{
        connected_sum, double_edge, make_property, subdivide_edge, triple_edge, Property,
    },
};
