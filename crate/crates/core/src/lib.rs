//! Exact sedenion arithmetic, the ternary non-associative bracket, identity
//! verification suites and Heisenberg dynamics for quaternionic and
//! biquaternionic qubit models.

pub mod basis;
pub mod brackets;
pub mod cli;
pub mod dynamics;
pub mod element;
pub mod expr;
pub mod matrix_rep;
pub mod subalgebra;
pub mod table;
pub mod verification;

pub use basis::{basis_product, BasisUnit, SignedUnit, UnitKind};
pub use brackets::{
    associator, commutator, hamiltonian_factor, hamiltonian_factor_with, l_operator, na_bracket,
    spin_operator, FirstFactor, ModelId, PhysicalConstants,
};
pub use element::{linear_combine, multiply, Element, ExactElement, Gaussian, Scalar};
pub use subalgebra::{closure_check, subalgebra_units, SubalgebraId};
pub use table::{export_table, TableFormat};
pub use verification::{
    alternativity_report, run_all, run_suite, SuiteId, VerificationReport,
};
