pub mod cli;
pub mod derivations;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod partition;
pub mod rootposet;
pub mod rootset;
pub mod rootsys;
pub mod localheight;
pub mod matengine;
