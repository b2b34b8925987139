//! Deciders on the finite-category corpus: validation, morphism classes,
//! functor properties, and the retraction searches on every pinned example.

use ssep_core::fincat::{
    associated_idempotent, blind_decide_retraction, constant_generated, decide_retraction,
    functor_property, morphism_class, nat_endo_monoid, relative_separable, retract_transfer,
    FinFunctor, FunctorProperty, IdempotentNat, MorphismClass, NatTrans, RetractionMode,
    TransferOutcome, DEFAULT_SEARCH_BOUND,
};
use ssep_core::instances::*;

const BOUND: usize = DEFAULT_SEARCH_BOUND;

fn decide(f: &FinFunctor, mode: RetractionMode) -> bool {
    decide_retraction(f, mode, BOUND).unwrap().holds
}

#[test]
fn validation_of_standard_categories() {
    for cat in [
        terminal_category(),
        parallel_pair_category(),
        interval_category(),
        idempotent_monoid_category(),
        karoubi_category(),
        cyclic2_category(),
        chain_category(4),
        discrete_category(3),
        empty_category(),
    ] {
        assert!(cat.validate().is_empty(), "category {}", cat.name);
    }
}

#[test]
fn validation_flags_missing_composite() {
    use ssep_core::fincat::{FinCategory, MorData};
    use std::collections::BTreeMap;
    // one object, morphisms id and f with f∘f missing from the table
    let mut comp = BTreeMap::new();
    comp.insert((0usize, 0usize), 0usize);
    comp.insert((0, 1), 1);
    comp.insert((1, 0), 1);
    let cat = FinCategory::from_parts(
        "broken",
        vec!["*".into()],
        vec![
            MorData {
                id: "id".into(),
                src: 0,
                tgt: 0,
            },
            MorData {
                id: "f".into(),
                src: 0,
                tgt: 0,
            },
        ],
        vec![0],
        comp,
    )
    .unwrap();
    let violations = cat.validate();
    assert!(violations.iter().any(|v| v.law == "missing composite"));
}

#[test]
fn morphism_classes_on_examples() {
    let pp = parallel_pair_category();
    let ida = pp.identity(0);
    assert!(morphism_class(&pp, ida, MorphismClass::Iso).unwrap().holds);
    let f = pp.lookup_morphism("f").unwrap();
    // no candidate retraction: Hom(B, A) is empty
    assert!(!morphism_class(&pp, f, MorphismClass::SplitMono).unwrap().holds);

    let m = idempotent_monoid_category();
    let e = m.lookup_morphism("e").unwrap();
    assert!(morphism_class(&m, e, MorphismClass::Idempotent).unwrap().holds);
    assert!(!morphism_class(&m, e, MorphismClass::SplitMono).unwrap().holds);
    assert!(!morphism_class(&m, e, MorphismClass::SplitEpi).unwrap().holds);

    // in the Karoubi category r is split epi with section s, s split mono
    let k = karoubi_category();
    let r = k.lookup_morphism("r").unwrap();
    let s = k.lookup_morphism("s").unwrap();
    let rv = morphism_class(&k, r, MorphismClass::SplitEpi).unwrap();
    assert!(rv.holds);
    assert_eq!(rv.witness, Some(s));
    assert!(morphism_class(&k, s, MorphismClass::SplitMono).unwrap().holds);
    assert!(!morphism_class(&k, r, MorphismClass::Iso).unwrap().holds);

    // constants: any morphism out of the terminal-like object of the interval
    let int = interval_category();
    let u = int.lookup_morphism("u").unwrap();
    assert!(morphism_class(&int, u, MorphismClass::Constant).unwrap().holds);
}

#[test]
fn functor_properties_on_examples() {
    let id_pp = FinFunctor::identity(parallel_pair_category());
    for prop in [
        FunctorProperty::Faithful,
        FunctorProperty::Full,
        FunctorProperty::FullyFaithful,
        FunctorProperty::Conservative,
        FunctorProperty::Maschke,
        FunctorProperty::DualMaschke,
    ] {
        assert!(functor_property(&id_pp, prop).unwrap().holds, "{prop:?}");
    }
    let collapse = collapse_parallel_pair();
    let faithful = functor_property(&collapse, FunctorProperty::Faithful).unwrap();
    assert!(!faithful.holds);
    let cx = faithful.counterexample.unwrap();
    assert!(cx.contains('f') && cx.contains('g'), "counterexample names the pair: {cx}");

    let unique = to_terminal("m1e_to_1", idempotent_monoid_category());
    assert!(functor_property(&unique, FunctorProperty::Full).unwrap().holds);
    assert!(!functor_property(&unique, FunctorProperty::Faithful).unwrap().holds);
}

#[test]
fn decide_retraction_identity_functor() {
    let idf = FinFunctor::identity(parallel_pair_category());
    for mode in [
        RetractionMode::Semiseparable,
        RetractionMode::Separable,
        RetractionMode::NaturallyFull,
    ] {
        let v = decide_retraction(&idf, mode, BOUND).unwrap();
        assert!(v.holds);
        // the witness is the identity family
        let w = v.witness.unwrap();
        let c = &idf.source;
        for x in c.object_indices() {
            for y in c.object_indices() {
                for &k in c.hom(x, y) {
                    assert_eq!(w.apply(x, y, k), k);
                }
            }
        }
    }
}

#[test]
fn decide_retraction_collapse_is_not_semiseparable() {
    let collapse = collapse_parallel_pair();
    let v = decide_retraction(&collapse, RetractionMode::Semiseparable, BOUND).unwrap();
    assert!(!v.holds);
    let note = v.note.unwrap();
    assert!(note.contains("(f, g)"), "note carries the merged pair: {note}");
    assert!(!decide(&collapse, RetractionMode::Separable));
    assert!(!decide(&collapse, RetractionMode::NaturallyFull));
}

#[test]
fn decide_retraction_idempotent_monoid_collapse() {
    let f = to_terminal("m1e_to_1", idempotent_monoid_category());
    assert!(decide(&f, RetractionMode::Semiseparable));
    assert!(decide(&f, RetractionMode::NaturallyFull));
    assert!(!decide(&f, RetractionMode::Separable));
}

#[test]
fn decide_retraction_karoubi_collapse_and_points() {
    let f = to_terminal("karoubi_to_1", karoubi_category());
    assert!(decide(&f, RetractionMode::Semiseparable));
    assert!(decide(&f, RetractionMode::NaturallyFull));
    assert!(!decide(&f, RetractionMode::Separable));

    // point at A: separable (faithful) but not full, hence not naturally full
    let a = point_to_karoubi_a();
    assert!(decide(&a, RetractionMode::Separable));
    assert!(!decide(&a, RetractionMode::NaturallyFull));

    // point at B: fully faithful, hence all three
    let b = point_to_karoubi_b();
    assert!(decide(&b, RetractionMode::Separable));
    assert!(decide(&b, RetractionMode::NaturallyFull));
}

#[test]
fn decide_retraction_discrete_to_terminal_fails_on_empty_hom() {
    let f = to_terminal("d2_to_1", discrete_category(2));
    assert!(!decide(&f, RetractionMode::Semiseparable));
}

#[test]
fn semiseparable_neither_separable_nor_naturally_full() {
    let f = monoid_to_karoubi();
    assert!(decide(&f, RetractionMode::Semiseparable));
    assert!(!decide(&f, RetractionMode::Separable));
    assert!(!decide(&f, RetractionMode::NaturallyFull));
}

#[test]
fn empty_category_is_vacuously_everything() {
    let f = to_terminal("empty_to_1", empty_category());
    assert!(decide(&f, RetractionMode::Semiseparable));
    assert!(decide(&f, RetractionMode::Separable));
    assert!(decide(&f, RetractionMode::NaturallyFull));
}

#[test]
fn search_bound_is_an_error_not_a_verdict() {
    let f = to_terminal("karoubi_to_1", karoubi_category());
    let err = decide_retraction(&f, RetractionMode::Semiseparable, 3).unwrap_err();
    assert!(matches!(err, ssep_core::Error::SearchBound(_)));
}

#[test]
fn associated_idempotent_examples() {
    // for the idempotent-monoid collapse, the associated idempotent is e
    let f = to_terminal("m1e_to_1", idempotent_monoid_category());
    let v = decide_retraction(&f, RetractionMode::Semiseparable, BOUND).unwrap();
    let e = associated_idempotent(&f, &v.witness.unwrap()).unwrap();
    let expected = f.source.lookup_morphism("e").unwrap();
    assert_eq!(e.components, vec![expected]);

    // separable functors have identity associated idempotent
    let b = point_to_karoubi_b();
    let v = decide_retraction(&b, RetractionMode::Semiseparable, BOUND).unwrap();
    let e = associated_idempotent(&b, &v.witness.unwrap()).unwrap();
    assert!(e.is_identity());

    let idf = FinFunctor::identity(karoubi_category());
    let v = decide_retraction(&idf, RetractionMode::Semiseparable, BOUND).unwrap();
    let e = associated_idempotent(&idf, &v.witness.unwrap()).unwrap();
    assert!(e.is_identity());
}

#[test]
fn nat_endo_monoid_examples() {
    assert_eq!(nat_endo_monoid(&terminal_category()).len(), 1);
    let m = idempotent_monoid_category();
    let endos = nat_endo_monoid(&m);
    assert_eq!(endos.len(), 2);
    assert_eq!(nat_endo_monoid(&interval_category()).len(), 1);
}

#[test]
fn constant_generated_examples() {
    assert!(constant_generated(&terminal_category()).unwrap().holds);
    assert!(constant_generated(&discrete_category(2)).unwrap().holds);
    let v = constant_generated(&idempotent_monoid_category()).unwrap();
    assert!(!v.holds);
    assert!(v.counterexample.is_some());
}

#[test]
fn constant_generated_forces_trivial_nat_endos_and_sep_equals_semisep() {
    // on every constant-generated corpus source, Nat(Id, Id) = {Id} and
    // semiseparable coincides with separable for every corpus functor out of it
    for f in functor_corpus() {
        let cg = constant_generated(&f.source).unwrap();
        if !cg.holds {
            continue;
        }
        let endos = nat_endo_monoid(&f.source);
        assert_eq!(endos.len(), 1, "source {}", f.source.name);
        let ss = decide(&f, RetractionMode::Semiseparable);
        let sep = decide(&f, RetractionMode::Separable);
        assert_eq!(ss, sep, "functor {}", f.name);
    }
}

#[test]
fn relative_separable_examples() {
    // H = Id reduces to plain separability
    let f = point_to_karoubi_a();
    let idc = FinFunctor::identity(f.source.clone());
    assert!(relative_separable(&f, &idc, BOUND).unwrap().is_some());

    let collapse = collapse_parallel_pair();
    let idp = FinFunctor::identity(collapse.source.clone());
    assert!(relative_separable(&collapse, &idp, BOUND).unwrap().is_none());

    // F is F-separable whenever a binatural projection exists; identity case
    let idf = FinFunctor::identity(terminal_category());
    assert!(relative_separable(&idf, &idf, BOUND).unwrap().is_some());

    // cross-check: for faithful corpus functors, Id-relative separability
    // coincides with separability
    for f in functor_corpus() {
        if !functor_property(&f, FunctorProperty::Faithful).unwrap().holds {
            continue;
        }
        let idc = FinFunctor::identity(f.source.clone());
        let rel = relative_separable(&f, &idc, BOUND).unwrap().is_some();
        assert_eq!(rel, decide(&f, RetractionMode::Separable), "functor {}", f.name);
    }
}

#[test]
fn retract_transfer_examples() {
    // φ = ψ = identity transfers trivially
    let h = to_terminal("m1e_to_1", idempotent_monoid_category());
    let phi = NatTrans::identity(&h);
    let psi = NatTrans::identity(&h);
    match retract_transfer(&h, &h, &phi, &psi, BOUND).unwrap() {
        TransferOutcome::Transferred(w) => {
            assert!(w.satisfies_mode(RetractionMode::Semiseparable));
        }
        TransferOutcome::NotApplicable(m) => panic!("expected transfer, got: {m}"),
    }

    // a functor with Fe ≠ Id_F: the identity functor of the monoid is a
    // retract target... use H = collapse (semiseparable, e nontrivial) and
    // F = Id (Fe = e ≠ Id): not applicable
    let f_id = FinFunctor::identity(idempotent_monoid_category());
    // φ: Id -> H and ψ: H -> Id need parallel functors, so instead transfer
    // along the genuine retract: F = H with twisted φ, ψ both identity is the
    // only small case; check the hypothesis-failure path with F = Id_C, H = F.
    // Here F and H must be parallel: build H' = Id and F' = Id composed with
    // nothing; instead exercise the failure by transferring H into itself
    // after replacing its functor with one where Fe ≠ Id: the identity functor
    // on the source.
    let c = f_id.source.clone();
    let e = c.lookup_morphism("e").unwrap();
    let _ = e;
    // φ, ψ between Id and Id with φ∘ψ = Id: both identity; H := Id is NOT
    // semiseparable-with-nontrivial-e, so pick H := Id and F := Id; transfer
    // succeeds trivially. The Fe ≠ Id path needs H semiseparable with e ≠ Id
    // and F = Id parallel to H, which forces H: C -> C; take H = constant-ish
    // endofunctor sending everything to the identity.
    let k = c.clone();
    let const_endo = ssep_core::fincat::FinFunctor::new(
        "collapse_endo",
        k.clone(),
        k.clone(),
        vec![0],
        vec![k.identity(0), k.identity(0)],
    )
    .unwrap()
    .validated()
    .unwrap();
    // φ: Id -> const_endo with component e? need naturality: e∘m = E(m)∘e for
    // all m; component must be c -> c with const(m) = id: e∘m = e works for
    // m ∈ {1, e}: φ = e; ψ: const_endo -> Id with ψ∘φ... φ∘ψ = Id_{const}: e∘e = e ≠ id: use φ = ψ = id? id: Id -> const is not natural.
    // The clean hypothesis-failure instance: H = const_endo (semiseparable,
    // associated idempotent e), F = Id_C, φ: F -> H = e, ψ: H -> F = e,
    // φ∘ψ = e∘e = e ≠ id_H... there is no retract pair here; assert instead
    // that the function rejects it.
    let idc = FinFunctor::identity(c.clone());
    let phi = NatTrans::new("φ", idc.clone(), const_endo.clone(), vec![e]).unwrap();
    let psi = NatTrans::new("ψ", const_endo.clone(), idc.clone(), vec![e]).unwrap();
    let out = retract_transfer(&const_endo, &idc, &phi, &psi, BOUND);
    assert!(out.is_err(), "φ∘ψ = e is not the identity, must be rejected");
}

#[test]
fn dualize_is_involutive_and_preserves_verdicts() {
    for f in functor_corpus() {
        let op = f.dualize();
        let op2 = op.dualize();
        assert_eq!(op2.obj_map, f.obj_map);
        assert_eq!(op2.mor_map, f.mor_map);
        assert_eq!(op2.source.as_ref(), f.source.as_ref(), "{}", f.name);
        for mode in [
            RetractionMode::Semiseparable,
            RetractionMode::Separable,
            RetractionMode::NaturallyFull,
        ] {
            // naturally full and separable swap is not expected: all three
            // properties are self-dual
            assert_eq!(
                decide(&f, mode),
                decide(&op, mode),
                "functor {} mode {mode}",
                f.name
            );
        }
    }
}

#[test]
fn blind_oracle_agrees_on_small_functors() {
    for f in functor_corpus() {
        if f.source.morphism_count() + f.target.morphism_count() > 12 {
            continue;
        }
        for mode in [
            RetractionMode::Semiseparable,
            RetractionMode::Separable,
            RetractionMode::NaturallyFull,
        ] {
            let fast = decide_retraction(&f, mode, BOUND).unwrap().holds;
            let blind = blind_decide_retraction(&f, mode).unwrap().holds;
            assert_eq!(fast, blind, "functor {} mode {mode}", f.name);
        }
    }
}

#[test]
fn idempotent_nat_validation() {
    let m = idempotent_monoid_category();
    let e = m.lookup_morphism("e").unwrap();
    assert!(IdempotentNat::new(m.clone(), vec![e]).is_ok());
    // the karoubi e is natural and idempotent; r is not an endomorphism
    let k = karoubi_category();
    let ke = k.lookup_morphism("e").unwrap();
    let idb = k.identity(1);
    assert!(IdempotentNat::new(k.clone(), vec![ke, idb]).is_ok());
    let r = k.lookup_morphism("r").unwrap();
    assert!(IdempotentNat::new(k.clone(), vec![r, idb]).is_err());
}
