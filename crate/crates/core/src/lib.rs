//! Vector weighted acyclic digraphs over GF(2), their equivalence classes,
//! and exact counting of the related combinatorial families.

pub mod cli;
pub mod closedforms;
pub mod cyclecount;
pub mod equiv;
pub mod error;
pub mod gf2;
pub mod io;
pub mod perm;
pub mod vwdigraph;

pub use error::{Error, Result};
