//! Serialization, seeded generators, canonical fixtures, and the law corpus
//! runner that the command line binds together.

pub mod document;
pub mod fixtures;
pub mod generate;
pub mod laws;
