//! Adjunction-side battery: Rafael-type regularity against the direct decider,
//! the unit/counit equality profiles, Eilenberg-Moore enumeration with a blind
//! oracle, separable and idempotent monads, adjoint-triple transfer, Frobenius
//! profiles and σ-splittings.

use ssep_core::adjunction::{
    adjoint_triple_transfer, build_em, comparison_functor, ff_monad_report,
    idempotent_adjunction_check, idempotent_corollary, lemma_b_profile, rafael_idempotent,
    rafael_regularity, separable_monad_check, sigma_split, ssep_monad_theorem, AdjointSide,
};
use ssep_core::fincat::{decide_retraction, NatTrans, RetractionMode, DEFAULT_SEARCH_BOUND};
use ssep_core::instances::*;

const BOUND: usize = DEFAULT_SEARCH_BOUND;

#[test]
fn corpus_has_enough_adjunctions() {
    assert!(adjunction_corpus().len() >= 8);
}

#[test]
fn rafael_matches_direct_decider_on_both_sides() {
    for adj in adjunction_corpus() {
        // rafael_regularity errors out if the two routes ever disagree
        let left = rafael_regularity(&adj, AdjointSide::Left, BOUND).unwrap();
        let right = rafael_regularity(&adj, AdjointSide::Right, BOUND).unwrap();
        assert!(left.decide_retraction_agrees, "{}", adj.name);
        assert!(right.decide_retraction_agrees, "{}", adj.name);
    }
}

#[test]
fn rafael_witness_examples() {
    // the embedding side of the Galois connection is fully faithful, so its
    // unit is regular
    let adj = galois_23();
    assert!(rafael_regularity(&adj, AdjointSide::Left, BOUND).unwrap().regular);
    // the collapse of the 2-chain has no regular unit
    let adj = closure_adjunction(2);
    assert!(!rafael_regularity(&adj, AdjointSide::Left, BOUND).unwrap().regular);
    // but its right adjoint (the top point) is semiseparable
    assert!(rafael_regularity(&adj, AdjointSide::Right, BOUND).unwrap().regular);
}

#[test]
fn lemma_b_equalities_agree_for_every_candidate() {
    // witness and non-witness candidates both give all-equal profiles
    let adj = cyclic2_twisted();
    let c = adj.source().clone();
    let gf = adj.right.clone();
    let _ = gf;
    let idf = ssep_core::fincat::FinFunctor::identity(c.clone());
    let one = c.identity(0);
    let g = c.lookup_morphism("g").unwrap();
    for comp in [one, g] {
        let nu = NatTrans::new("ν", idf.clone(), idf.clone(), vec![comp]).unwrap();
        let profile = lemma_b_profile(&adj, &nu, AdjointSide::Left).unwrap();
        assert!(
            profile.iter().all(|&x| x == profile[0]),
            "profile not constant: {profile:?}"
        );
        // the witness is ν = g (η∘ν∘η = g·ν·g = ν must equal η = g)
        assert_eq!(profile[0], comp == g);
    }
    // identity adjunction: the identity candidate is a witness
    let adj = identity_adjunction(terminal_category());
    let idt = ssep_core::fincat::FinFunctor::identity(terminal_category());
    let nu = NatTrans::identity(&idt);
    let profile = lemma_b_profile(&adj, &nu, AdjointSide::Left).unwrap();
    assert_eq!(profile, [true, true, true]);
}

#[test]
fn em_enumeration_with_blind_oracle() {
    for adj in adjunction_corpus() {
        let monad = adj.monad().unwrap().validated().unwrap();
        let em = build_em(&monad, BOUND).unwrap();
        // blind oracle: count algebras by direct quantification
        let c = monad.category().clone();
        let mut count = 0;
        for x in c.object_indices() {
            let tx = monad.t.on_obj(x);
            for &mu in c.hom(tx, x) {
                let unit_law = c.compose2(mu, monad.unit.at(x)) == c.identity(x);
                let assoc =
                    c.compose2(mu, monad.mult.at(x)) == c.compose2(mu, monad.t.on_mor(mu));
                if unit_law && assoc {
                    count += 1;
                }
            }
        }
        assert_eq!(em.algebras.len(), count, "{}", adj.name);
    }
}

#[test]
fn em_identity_adjunction_is_the_base() {
    let adj = identity_adjunction(karoubi_category());
    let monad = adj.monad().unwrap();
    let em = build_em(&monad, BOUND).unwrap();
    // identity monad: one algebra per object, EM is isomorphic to the base
    assert_eq!(em.algebras.len(), adj.source().object_count());
    assert_eq!(em.category.morphism_count(), adj.source().morphism_count());
    let k = comparison_functor(&adj, &em).unwrap();
    assert!(ssep_core::fincat::functor_property(&k, ssep_core::fincat::FunctorProperty::FullyFaithful)
        .unwrap()
        .holds);
}

#[test]
fn em_closure_operator_has_only_the_top_fixed_point() {
    let adj = closure_adjunction(3);
    let monad = adj.monad().unwrap();
    let em = build_em(&monad, BOUND).unwrap();
    assert_eq!(em.algebras.len(), 1);
    let (obj, _) = em.algebras[0];
    assert_eq!(adj.source().object_id(obj), "2");
}

#[test]
fn separable_monads_on_corpus() {
    // identity monad splits through the identity
    let adj = identity_adjunction(parallel_pair_category());
    let monad = adj.monad().unwrap();
    assert!(separable_monad_check(&monad).unwrap().is_some());

    // idempotent monad with a twisted (non-identity) multiplication: the
    // splitting is the inverse of the multiplication
    let adj = cyclic2_twisted();
    let monad = adj.monad().unwrap();
    let sigma = separable_monad_check(&monad).unwrap().unwrap();
    let g = adj.source().lookup_morphism("g").unwrap();
    assert_eq!(sigma.components, vec![g], "σ = m^{{-1}}");

    // every corpus monad comes from an idempotent adjunction here, hence is
    // separable; the semiseparable-monad lemma (one direction) also holds:
    for adj in adjunction_corpus() {
        let monad = adj.monad().unwrap();
        let g_ssep = decide_retraction(&adj.right, RetractionMode::Semiseparable, BOUND)
            .unwrap()
            .holds;
        let sep = separable_monad_check(&monad).unwrap().is_some();
        if g_ssep {
            assert!(sep, "{}", adj.name);
        }
    }
}

#[test]
fn idempotency_check_agrees_across_all_four_criteria() {
    for adj in adjunction_corpus() {
        let report = idempotent_adjunction_check(&adj).unwrap();
        assert_eq!(report.eps_f, report.idempotent);
        assert_eq!(report.g_eps, report.idempotent);
        assert_eq!(report.f_eta, report.idempotent);
        assert_eq!(report.eta_g, report.idempotent);
    }
}

#[test]
fn idempotent_corollary_on_corpus() {
    for adj in adjunction_corpus() {
        let report = idempotent_corollary(&adj, BOUND).unwrap();
        assert!(report.corollary_holds, "{}", adj.name);
    }
}

#[test]
fn monad_theorem_biconditionals() {
    for adj in adjunction_corpus() {
        let report = ssep_monad_theorem(&adj, BOUND).unwrap();
        assert!(report.monad_side.biconditional_holds, "{} (monad side)", adj.name);
        assert!(
            report.comonad_side.biconditional_holds,
            "{} (comonad side)",
            adj.name
        );
    }
}

#[test]
fn fully_faithful_monad_equivalence() {
    for adj in adjunction_corpus() {
        let report = ff_monad_report(&adj, BOUND).unwrap();
        assert!(report.equivalence_holds, "{}", adj.name);
    }
}

#[test]
fn rafael_idempotent_matches_associated() {
    for adj in adjunction_corpus() {
        for side in [AdjointSide::Left, AdjointSide::Right] {
            if let Some((_, matches)) = rafael_idempotent(&adj, side, BOUND).unwrap() {
                assert!(matches, "{} {:?}", adj.name, side);
            }
        }
    }
}

#[test]
fn triple_transfer_on_corpus() {
    for triple in triple_corpus() {
        let report = adjoint_triple_transfer(&triple, BOUND).unwrap();
        assert!(report.transfers_agree, "{}", triple.name);
        if report.gamma_constructed {
            assert!(report.gamma_is_witness, "{}", triple.name);
            assert!(report.gamma_equation_holds, "{}", triple.name);
        }
        // classical consequence: fully faithful transfers across the triple
        let f_ff = ssep_core::fincat::functor_property(
            triple.f(),
            ssep_core::fincat::FunctorProperty::FullyFaithful,
        )
        .unwrap()
        .holds;
        let h_ff = ssep_core::fincat::functor_property(
            triple.h(),
            ssep_core::fincat::FunctorProperty::FullyFaithful,
        )
        .unwrap()
        .holds;
        assert_eq!(f_ff, h_ff, "{}", triple.name);
    }
}

#[test]
fn triple_negative_instance() {
    let triple = chain_triple_32();
    let report = adjoint_triple_transfer(&triple, BOUND).unwrap();
    assert!(!report.semiseparable_f);
    assert!(!report.semiseparable_h);
    assert!(!report.gamma_constructed);
}

#[test]
fn frobenius_profiles_on_triples() {
    use ssep_core::adjunction::frobenius_bireflection;
    // the Karoubi triple: the collapse is a bireflection
    let t = karoubi_triple();
    let report = frobenius_bireflection(&t.left, &t.right, BOUND).unwrap();
    assert!(report.frobenius_strict);
    assert!(report.coreflection);
    assert!(report.reflection);
    assert_eq!(report.coherence, Some(true));
    assert!(report.bireflection);
    assert!(report.g_semiseparable);
    assert!(report.g_naturally_full);
    let profile = report.frob_profile.unwrap();
    assert!(profile.per_candidate_equivalences_hold);
    assert!(profile.families_agree_with_semiseparability);
    assert!(report.theorem_consistent);

    // the 2-chain collapse: a (co)reflection that is not semiseparable, hence
    // not Frobenius and not a bireflection, with all equivalences consistent
    let t = collapse_triple_2chain();
    let report = frobenius_bireflection(&t.left, &t.right, BOUND).unwrap();
    assert!(!report.frobenius_strict);
    assert!(!report.frobenius_up_to_iso);
    assert!(report.coreflection);
    assert!(report.reflection);
    assert!(!report.bireflection);
    assert!(!report.g_semiseparable);
    assert!(report.theorem_consistent);

    // identity adjunctions: trivially a bireflection
    let adj = identity_adjunction(terminal_category());
    let report = frobenius_bireflection(&adj, &adj, BOUND).unwrap();
    assert!(report.bireflection);
    assert!(report.theorem_consistent);
}

#[test]
fn sigma_split_instances() {
    // fully faithful middle, both outer functors the Karoubi collapse:
    // σ invertible and H semiseparable
    let t = karoubi_sigma_triple();
    let (_, report) = sigma_split(&t, BOUND).unwrap();
    assert!(report.equivalence_holds);
    assert!(report.invertible);
    assert!(report.h_semiseparable);

    // fully faithful middle with non-semiseparable H: σ is not split-mono
    let t = chain_triple_32();
    let (_, report) = sigma_split(&t, BOUND).unwrap();
    assert!(report.equivalence_holds);
    assert!(!report.split_mono);
    assert!(!report.invertible);
    assert!(!report.h_semiseparable);

    // middle functor not fully faithful: not applicable
    let t = karoubi_triple();
    assert!(sigma_split(&t, BOUND).is_err());
}
