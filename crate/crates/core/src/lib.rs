//! Combinatorial maps and maniplexes as flag systems.
//!
//! A map is a set of flags together with three fixed-point-free involutions
//! `r0, r1, r2`; a rank-`n` maniplex has `n + 1` of them. Everything in this
//! crate is computed from the connection arrays alone: cells are orbits,
//! colorings are parity assignments, covers are flag maps commuting with the
//! connections.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and the corpus runner live in the `mapforge` crate.

#![no_std]
#![warn(clippy::std_instead_of_alloc)]
#![warn(clippy::std_instead_of_core)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
mod parity;

pub mod coloring;
pub mod colorset;
pub mod construct;
pub mod doubles;
pub mod flagsys;
pub mod operators;

pub use self::{
    coloring::{
        coloring_group, coloring_group_excluding_cell, cycle_consistent, direct_pso,
        find_coloring, find_inconsistent_cycle, is_pseudo_orientable, ArrowAssignment, Coloring,
        PsoKind,
    },
    colorset::{ColorSet, ColoringGroup},
    doubles::{
        i_double, quotient, recognize_i_double, sherk_double, DoubleResult, Recognition,
    },
    error::*,
    flagsys::{Cell, FlagSystem, FlagWord, SurfaceSignature},
    operators::{dual, medial, opposite, petrie},
};
