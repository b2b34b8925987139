//! Decision procedures for the algebraic instances: ring extensions, coalgebra
//! morphisms, corings and bimodules, each as an exact affine-linear solve with
//! a re-checkable witness or an infeasibility certificate.

pub mod bimodule_check;
pub mod coalg_map;
pub mod coring_check;
pub mod ring_ext;

pub use bimodule_check::{
    bimodule_analyze, comatrix_coring, endo_ring_analyze, evaluation_data, sweedler_coring,
    BimoduleReport, ComatrixResult, EndoRingResult, EvaluationData, RestrictionCert,
    SweedlerResult,
};
pub use coalg_map::{coalg_map_analyze, CoalgMapReport};
pub use coring_check::{coring_analyze, coring_factorize, CoringFactorization, CoringReport};
pub use ring_ext::{
    ring_ext_analyze, semiseparable_by_basis_route, subalgebra, ModExtensCert, PhiStarCert,
    RingExtReport, Subalgebra,
};
