#![no_std]

extern crate alloc;

pub mod brackets;
pub mod center;
pub mod error;
pub mod freealg;
pub mod groebner;
pub mod invariants;
pub mod iso;
pub mod linalg;
pub mod presentation;
pub mod scalars;

pub use error::{Error, Result};
