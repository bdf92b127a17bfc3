//! Decomposability of finite modules given by commuting action matrices.

pub mod algebra;
pub mod engine;
pub mod field;
pub mod oracle;

pub use algebra::StructAlgebra;
pub use engine::{
    algebra_radical, commutant, connected_components, count_field_factors, decide, fitting_split, is_decomposable,
    DecideOptions, DecompositionReport, EndAlgebra, FittingSplit, Method, Verdict, Witness,
};
pub use field::{Echelon, PrimeFieldMatrix, SparseEchelon};
pub use oracle::brute_force_idempotent_oracle;
