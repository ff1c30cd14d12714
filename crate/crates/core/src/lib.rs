//! Exact arithmetic for the braids-and-ties algebra E_n(q): normal form on
//! the basis E_A g_w, the cellular bases m_st / n_st, the tensor space
//! representation and its annihilator.

pub mod annihilator;
pub mod bt_algebra;
pub mod cellular;
pub mod coeff;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod set_partitions;
pub mod symmetric_group;
pub mod tableaux;
pub mod tensor;
pub mod verify;

pub use coeff::{EvalPoint, Field, FieldScalar, FieldTask, LaurentPoly, LaurentRing, PrimeField, RationalField, Ring};
pub use error::{BtError, Result};
pub use set_partitions::SetPartition;
pub use symmetric_group::Permutation;
