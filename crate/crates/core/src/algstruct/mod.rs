//! Finite-dimensional algebraic structures over an exact field, presented by
//! structure constants with full law validation, plus the constructions the
//! separability criteria consume: balanced tensors, bimodule map spaces,
//! invariants, duals, centers and trace ideals.

pub mod algebra;
pub mod bimodule;
pub mod coring;

pub use algebra::{AlgebraMorphism, Bialgebra, CoalgebraMorphism, FDAlgebra, FDCoalgebra};
pub use bimodule::{
    balanced_tensor, bimodule_map_space, center_and_idempotent, dual_module, invariants,
    trace_ideal_and_fgp, BalancedTensor, Bimodule, CenterReport, DualModule, TraceFgpReport,
};
pub use coring::Coring;
