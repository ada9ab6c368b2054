//! Heegaard Floer correction terms of ±1 surgery from finite models of
//! CFK∞, and lower bounds for the non-orientable genus of knots in
//! punctured nCP².

pub mod bounds;
pub mod cli;
pub mod engine;
pub mod f2linalg;
pub mod lattice;
pub mod model;
