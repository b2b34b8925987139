//! The pinned ring-extension cases over Q, with witnesses re-verified by
//! direct substitution, plus coalgebra-morphism analyses.

use ssep_core::algstruct::{AlgebraMorphism, CoalgebraMorphism};
use ssep_core::instances::*;
use ssep_core::report::Status;
use ssep_core::scalar::Field;
use ssep_core::sepcheck::{ring_ext_analyze, semiseparable_by_basis_route};
use ssep_core::verify::{verify_coalg_witness, verify_ring_ext_witness};

const Q: Field = Field::Q;

fn assert_verified(phi: &AlgebraMorphism, report: &ssep_core::sepcheck::RingExtReport) {
    for (mode, verdict) in [
        ("semiseparable", &report.semiseparable),
        ("separable", &report.separable),
        ("naturally_full", &report.naturally_full),
    ] {
        if let Some(w) = &verdict.witness {
            let violations = verify_ring_ext_witness(phi, w, mode);
            assert!(violations.is_empty(), "{mode}: {violations:?}");
        }
    }
}

#[test]
fn inclusion_into_dual_numbers_is_separable() {
    let phi = inclusion_k_to_dual(Q);
    let report = ring_ext_analyze(&phi).unwrap();
    assert!(report.separable.status.holds());
    assert!(report.semiseparable.status.holds());
    // E(a + bx) = a is forced on the unit: E∘φ = Id means E(1) = 1
    let e = report.separable.witness.as_ref().unwrap();
    assert!(e.apply(&phi.target.unit).unwrap()[0].is_one());
    assert_verified(&phi, &report);
    let cert = report.modextens.as_ref().unwrap();
    assert!(cert.z_central_idempotent && cert.phi_z_is_unit && cert.z_unique);
    assert!(cert.tau_split_mono && cert.pi_bilinear_over_rz);
    // z = 1 for a separable extension
    assert_eq!(report.z.as_ref().unwrap(), &phi.source.unit);
}

#[test]
fn evaluation_from_dual_numbers_is_not_semiseparable() {
    let phi = eval_dual_to_k(Q);
    let report = ring_ext_analyze(&phi).unwrap();
    assert_eq!(report.semiseparable.status, Status::Fails);
    assert_eq!(report.separable.status, Status::Fails);
    assert_eq!(report.naturally_full.status, Status::Fails);
    // the infeasibility certificate carries the rank gap
    let cert = report.semiseparable.infeasibility.as_ref().unwrap();
    assert!(cert.rank_augmented > cert.rank_a);
}

#[test]
fn projection_is_naturally_full_with_z() {
    let phi = projection_kxk_to_k(Q);
    let report = ring_ext_analyze(&phi).unwrap();
    assert!(report.naturally_full.status.holds());
    assert!(report.semiseparable.status.holds());
    assert_eq!(report.separable.status, Status::Fails);
    // z = (1, 0)
    let z = report.z.as_ref().unwrap();
    assert!(z[0].is_one() && z[1].is_zero());
    // D(q) = (q, 0): the naturally-full witness sends 1 to (1, 0)
    let d = report.naturally_full.witness.as_ref().unwrap();
    let img = d.apply(&phi.target.unit).unwrap();
    assert!(img[0].is_one() && img[1].is_zero());
    assert_verified(&phi, &report);
    let cert = report.modextens.as_ref().unwrap();
    assert!(cert.z_central_idempotent && cert.phi_z_is_unit && cert.z_unique);
}

#[test]
fn composite_is_semiseparable_but_neither() {
    let phi = composite_kxk_to_dual(Q);
    let report = ring_ext_analyze(&phi).unwrap();
    assert!(report.semiseparable.status.holds());
    assert_eq!(report.separable.status, Status::Fails);
    assert_eq!(report.naturally_full.status, Status::Fails);
    let z = report.z.as_ref().unwrap();
    assert!(z[0].is_one() && z[1].is_zero());
    assert_verified(&phi, &report);
    let cert = report.modextens.as_ref().unwrap();
    assert!(cert.z_central_idempotent && cert.phi_z_is_unit && cert.z_unique);
    assert!(cert.tau_split_mono && cert.pi_bilinear_over_rz);
    let fact = report.phi_star.as_ref().unwrap();
    assert!(fact.iota_separable);
    assert!(fact.image_part_naturally_full);
    assert!(fact.lambda_bijective);
}

#[test]
fn identity_extension_is_everything() {
    let phi = identity_morphism(product_algebra(Q));
    let report = ring_ext_analyze(&phi).unwrap();
    assert!(report.semiseparable.status.holds());
    assert!(report.separable.status.holds());
    assert!(report.naturally_full.status.holds());
    assert_verified(&phi, &report);
}

#[test]
fn diagonal_into_product_is_separable() {
    // k -> k x k is a separable extension in characteristic zero
    let phi = diagonal_k_to_kxk(Q);
    let report = ring_ext_analyze(&phi).unwrap();
    assert!(report.separable.status.holds());
    assert!(!report.naturally_full.status.holds());
    assert_verified(&phi, &report);
}

#[test]
fn basis_route_agrees_on_all_pinned_extensions() {
    for phi in [
        inclusion_k_to_dual(Q),
        eval_dual_to_k(Q),
        projection_kxk_to_k(Q),
        composite_kxk_to_dual(Q),
        diagonal_k_to_kxk(Q),
        diagonal_k_to_kxkxk(Q),
        identity_morphism(dual_numbers(Q)),
    ] {
        let joint = ring_ext_analyze(&phi).unwrap().semiseparable.status.holds();
        let basis = semiseparable_by_basis_route(&phi).unwrap();
        assert_eq!(joint, basis, "{}", phi.name);
    }
}

#[test]
fn ring_ext_over_f5_behaves_identically() {
    let f5 = Field::Fp(5);
    let phi = projection_kxk_to_k(f5);
    let report = ring_ext_analyze(&phi).unwrap();
    assert!(report.naturally_full.status.holds());
    assert!(!report.separable.status.holds());
    let phi = eval_dual_to_k(f5);
    let report = ring_ext_analyze(&phi).unwrap();
    assert!(!report.semiseparable.status.holds());
}

// --- coalgebra morphisms ---

#[test]
fn identity_coalgebra_map_is_everything() {
    let c = grouplike_coalgebra(Q, &["a", "b"]);
    let id = ssep_core::linalg::Matrix::identity(2, Q);
    let psi = CoalgebraMorphism::new("id", c.clone(), c, id)
        .unwrap()
        .validated()
        .unwrap();
    let report = ssep_core::sepcheck::coalg_map_analyze(&psi).unwrap();
    assert!(report.semiseparable.status.holds());
    assert!(report.separable.status.holds());
    assert!(report.naturally_full.status.holds());
}

#[test]
fn grouplike_collapse_is_semiseparable_not_naturally_full() {
    // k{a,b} -> k{x} from the surjection {a,b} -> {x}: a section χ exists
    // (χ(x) = a), so semiseparable and separable (split epi), but not
    // naturally full since the map is not injective
    let c = grouplike_coalgebra(Q, &["a", "b"]);
    let d = grouplike_coalgebra(Q, &["x"]);
    let m = ssep_core::linalg::Matrix::from_rows(
        Q,
        &[vec![Q.one(), Q.one()]],
    )
    .unwrap();
    let psi = CoalgebraMorphism::new("collapse_ab_x", c, d, m)
        .unwrap()
        .validated()
        .unwrap();
    let report = ssep_core::sepcheck::coalg_map_analyze(&psi).unwrap();
    assert!(report.semiseparable.status.holds());
    assert!(report.separable.status.holds());
    assert_eq!(report.naturally_full.status, Status::Fails);
    // the canonical witness picks a section of the underlying function
    let chi = report.semiseparable.witness.as_ref().unwrap();
    assert!(verify_coalg_witness(&psi, chi, "semiseparable").is_empty());
}

#[test]
fn grouplike_non_surjective_inclusion() {
    // k{a} -> k{x,y}, a -> x: semiseparable with χ(x) = a, χ(y) = 0; not
    // separable (not surjective); naturally full (split mono)
    let c = grouplike_coalgebra(Q, &["a"]);
    let d = grouplike_coalgebra(Q, &["x", "y"]);
    let m = ssep_core::linalg::Matrix::from_rows(Q, &[vec![Q.one()], vec![Q.zero()]]).unwrap();
    let psi = CoalgebraMorphism::new("incl_a_x", c, d, m)
        .unwrap()
        .validated()
        .unwrap();
    let report = ssep_core::sepcheck::coalg_map_analyze(&psi).unwrap();
    assert!(report.semiseparable.status.holds());
    assert_eq!(report.separable.status, Status::Fails);
    assert!(report.naturally_full.status.holds());
    let chi = report.semiseparable.witness.as_ref().unwrap();
    // χ(x) = a, χ(y) = 0
    assert!(chi.at(0, 0).is_one());
    assert!(chi.at(0, 1).is_zero());
    assert!(verify_coalg_witness(&psi, chi, "semiseparable").is_empty());
}
