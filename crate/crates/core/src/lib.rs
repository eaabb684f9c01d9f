//! Exact Donaldson-Thomas and Gromov-Witten partition functions of
//! super-rigid rational curves in Calabi-Yau threefolds, with brute-force
//! cross-checks against 3D-partition enumeration.

mod bivar;
pub mod checks;
pub mod cli;
pub mod dtgw;
pub mod error;
pub mod exec;
pub mod partitions;
pub mod ratfun;
pub mod schur;
pub mod series;
pub mod vertex;

pub use error::{Error, Result};
pub use exec::Exec;
pub use partitions::{enumerate_partitions, Cell, Partition};
pub use series::{mcmahon, Coeff, LaurentSeries, TruncSeries, Var};
pub use ratfun::{Poly, RatFun};
