//! Exact computation in Birman-Murakami-Wenzl, Hecke and Brauer algebras.

pub mod bmw;
pub mod brauer;
pub mod coeff;
pub mod hecke;
pub mod idem;
pub mod tangle;
pub mod verify;
pub mod young;
