//! Exact polynomial systems for equiangular lines: generation, Gröbner bases,
//! numeric solving and verification.

pub mod exact;
pub mod groebner;
pub mod numeric;
pub mod par;
pub mod polyring;
pub mod sicgen;
pub mod solver;
pub mod verify;
