#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod flags;
pub mod hecke;
pub mod linalg;
pub mod markov;
pub mod qpoly;
pub mod seminormal;
pub mod spectra;
pub mod symmetric;
pub mod tableaux;
