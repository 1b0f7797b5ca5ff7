//! Flag files, named generators, seeded corpora and the property checks run
//! by the `mapforge` command.

pub mod corpus;
pub mod flagfile;
pub mod generate;
pub mod properties;
pub mod sampler;
