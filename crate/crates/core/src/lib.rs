//! Finite biracks and the birack polynomial of braid closures.

pub mod algebra;
pub mod braid;
pub mod catalog;
pub mod golden;
pub mod invariant;
