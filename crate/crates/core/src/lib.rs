//! Exact arithmetic for parametric families of linear recurrence sequences.

pub mod abctools;
pub mod algnum;
pub mod exactalg;
pub mod gcdlab;
pub mod lrs;
pub mod powers;
pub mod skolem;
pub mod torsion;
pub mod wire;
