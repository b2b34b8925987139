//! The cross-property equivalence battery on the full functor corpus:
//! separable = semiseparable + faithful, naturally full = semiseparable +
//! full, the Maschke/dual-Maschke/conservative characterizations, the
//! composition lemmas, and the factorization theorems.

use ssep_core::coident::{
    bireflection_from_split, build_coidentifier, factorize_semiseparable, induce_through,
    split_idempotent,
};
use ssep_core::fincat::{
    associated_idempotent, compose_retractions, decide_retraction, functor_property, FinFunctor,
    FunctorProperty, IdempotentNat, RetractionMode, DEFAULT_SEARCH_BOUND,
};
use ssep_core::instances::*;

const BOUND: usize = DEFAULT_SEARCH_BOUND;

fn decide(f: &FinFunctor, mode: RetractionMode) -> bool {
    decide_retraction(f, mode, BOUND).unwrap().holds
}

fn prop(f: &FinFunctor, p: FunctorProperty) -> bool {
    functor_property(f, p).unwrap().holds
}

#[test]
fn corpus_is_large_enough() {
    assert!(functor_corpus().len() >= 15);
}

#[test]
fn separable_iff_semiseparable_and_faithful() {
    for f in functor_corpus() {
        let sep = decide(&f, RetractionMode::Separable);
        let ss = decide(&f, RetractionMode::Semiseparable);
        let faithful = prop(&f, FunctorProperty::Faithful);
        assert_eq!(sep, ss && faithful, "functor {}", f.name);
    }
}

#[test]
fn naturally_full_iff_semiseparable_and_full() {
    for f in functor_corpus() {
        let nf = decide(&f, RetractionMode::NaturallyFull);
        let ss = decide(&f, RetractionMode::Semiseparable);
        let full = prop(&f, FunctorProperty::Full);
        assert_eq!(nf, ss && full, "functor {}", f.name);
    }
}

#[test]
fn separable_iff_semiseparable_and_reflecting() {
    // all four variants: Maschke, dual Maschke, conservative — and fully
    // faithful is separable + naturally full
    for f in functor_corpus() {
        let sep = decide(&f, RetractionMode::Separable);
        let ss = decide(&f, RetractionMode::Semiseparable);
        for variant in [
            FunctorProperty::Maschke,
            FunctorProperty::DualMaschke,
            FunctorProperty::Conservative,
        ] {
            assert_eq!(sep, ss && prop(&f, variant), "functor {} {variant:?}", f.name);
        }
        let ff = prop(&f, FunctorProperty::FullyFaithful);
        let nf = decide(&f, RetractionMode::NaturallyFull);
        assert_eq!(ff, sep && nf, "functor {}", f.name);
    }
}

#[test]
fn associated_idempotent_detects_separability() {
    // a semiseparable functor is separable iff its associated idempotent is
    // the identity
    for f in functor_corpus() {
        let v = decide_retraction(&f, RetractionMode::Semiseparable, BOUND).unwrap();
        let Some(w) = v.witness else { continue };
        let e = associated_idempotent(&f, &w).unwrap();
        let sep = decide(&f, RetractionMode::Separable);
        assert_eq!(sep, e.is_identity(), "functor {}", f.name);
    }
}

fn composable_pairs() -> Vec<(FinFunctor, FinFunctor)> {
    let corpus = functor_corpus();
    let mut pairs = Vec::new();
    for f in &corpus {
        for g in &corpus {
            if f.target.as_ref() == g.source.as_ref() {
                pairs.push((f.clone(), g.clone()));
            }
        }
    }
    pairs
}

#[test]
fn composition_lemma_and_its_partial_converse() {
    let pairs = composable_pairs();
    assert!(!pairs.is_empty());
    for (f, g) in pairs {
        let gf = FinFunctor::compose(&g, &f).unwrap();
        let f_ss = decide(&f, RetractionMode::Semiseparable);
        let f_nf = decide(&f, RetractionMode::NaturallyFull);
        let g_ss = decide(&g, RetractionMode::Semiseparable);
        let g_sep = decide(&g, RetractionMode::Separable);
        let gf_ss = decide(&gf, RetractionMode::Semiseparable);
        // semiseparable then separable composes to semiseparable
        if f_ss && g_sep {
            assert!(gf_ss, "{} after {}", g.name, f.name);
            // the composed witness certifies it directly
            let pf = decide_retraction(&f, RetractionMode::Semiseparable, BOUND)
                .unwrap()
                .witness
                .unwrap();
            let pg = decide_retraction(&g, RetractionMode::Separable, BOUND)
                .unwrap()
                .witness
                .unwrap();
            let composed = compose_retractions(&pf, &pg, &gf).unwrap();
            assert!(composed.satisfies_mode(RetractionMode::Semiseparable));
        }
        // naturally full then semiseparable composes to semiseparable
        if f_nf && g_ss {
            assert!(gf_ss, "{} after {}", g.name, f.name);
        }
        // if the composite is semiseparable and g is faithful, f is semiseparable
        if gf_ss && prop(&g, FunctorProperty::Faithful) {
            assert!(f_ss, "{} after {}", g.name, f.name);
        }
    }
}

#[test]
fn factorization_characterizes_semiseparability() {
    // forward: every semiseparable functor factors through its coidentifier
    // as naturally full followed by separable; backward: any such composite is
    // semiseparable (composition lemma applied to the certified witnesses)
    for f in functor_corpus() {
        let ss = decide(&f, RetractionMode::Semiseparable);
        if ss {
            let fact = factorize_semiseparable(&f, BOUND).unwrap();
            assert!(fact
                .quotient_naturally_full
                .satisfies_mode(RetractionMode::NaturallyFull));
            assert!(fact
                .induced_separable
                .satisfies_mode(RetractionMode::Separable));
            // recompose and re-certify through the composition lemma
            let gf = FinFunctor::compose(&fact.induced, &fact.coident.quotient_functor).unwrap();
            assert!(gf.same_tables(&f), "functor {}", f.name);
            let composed = compose_retractions(
                &fact.quotient_naturally_full,
                &fact.induced_separable,
                &gf,
            )
            .unwrap();
            assert!(composed.satisfies_mode(RetractionMode::Semiseparable));
        } else {
            assert!(factorize_semiseparable(&f, BOUND).is_err(), "functor {}", f.name);
        }
    }
}

#[test]
fn coidentifier_uniqueness_clause() {
    // for a factorization F = S∘N with S separable and N naturally full, the
    // lift N_e through the coidentifier of F is fully faithful and the
    // idempotent associated to N equals the one associated to F
    let n = to_terminal("m1e_to_1", idempotent_monoid_category());
    let s = point_to_karoubi_a();
    let f = FinFunctor::compose(&s, &n).unwrap();
    assert!(decide(&f, RetractionMode::Semiseparable));
    let fact = factorize_semiseparable(&f, BOUND).unwrap();
    let n_e = induce_through(&fact.coident, &n, Some((&s, &fact.induced))).unwrap();
    assert!(prop(&n_e, FunctorProperty::FullyFaithful));
    let n_wit = decide_retraction(&n, RetractionMode::Semiseparable, BOUND)
        .unwrap()
        .witness
        .unwrap();
    let e_n = associated_idempotent(&n, &n_wit).unwrap();
    assert_eq!(e_n.components, fact.e.components);
}

#[test]
fn coidentifier_of_idempotent_monoid() {
    let c = idempotent_monoid_category();
    let e = c.lookup_morphism("e").unwrap();
    let en = IdempotentNat::new(c.clone(), vec![e]).unwrap();
    let coident = build_coidentifier(c.clone(), &en).unwrap();
    // 1 ~ e, so the quotient is the one-morphism monoid
    assert_eq!(coident.quotient.morphism_count(), 1);
    assert_eq!(coident.quotient.object_count(), 1);
    // the quotient functor is naturally full with idempotent e (checked in
    // the constructor); inducing the collapse through it is the identity-like
    let f = to_terminal("m1e_to_1", c.clone());
    let fe = induce_through(&coident, &f, None).unwrap();
    assert_eq!(fe.source.morphism_count(), 1);
    assert!(decide(&fe, RetractionMode::Separable));
}

#[test]
fn coidentifier_with_identity_idempotent_changes_nothing() {
    let c = parallel_pair_category();
    let en = IdempotentNat::identity(c.clone());
    let coident = build_coidentifier(c.clone(), &en).unwrap();
    assert_eq!(coident.quotient.morphism_count(), c.morphism_count());
    for x in c.object_indices() {
        for y in c.object_indices() {
            assert_eq!(c.hom(x, y).len(), coident.quotient.hom(x, y).len());
        }
    }
}

#[test]
fn induce_through_rejects_unliftable_functors() {
    let c = idempotent_monoid_category();
    let e = c.lookup_morphism("e").unwrap();
    let en = IdempotentNat::new(c.clone(), vec![e]).unwrap();
    let coident = build_coidentifier(c.clone(), &en).unwrap();
    let idf = FinFunctor::identity(c);
    let err = induce_through(&coident, &idf, None).unwrap_err();
    assert!(err.to_string().contains("not liftable"));
}

#[test]
fn split_idempotent_examples() {
    // e does not split inside the one-object monoid
    let c = idempotent_monoid_category();
    let e = c.lookup_morphism("e").unwrap();
    let en = IdempotentNat::new(c.clone(), vec![e]).unwrap();
    assert!(split_idempotent(c, &en).unwrap().is_none());

    // the identity always splits through each object
    let pp = parallel_pair_category();
    let en = IdempotentNat::identity(pp.clone());
    let (w, p) = split_idempotent(pp.clone(), &en).unwrap().unwrap();
    assert_eq!(w.through, vec![0, 1]);
    assert!(p.same_tables(&FinFunctor::identity(pp)));

    // in the Karoubi category, e splits through B
    let k = karoubi_category();
    let ke = k.lookup_morphism("e").unwrap();
    let idb = k.identity(1);
    let en = IdempotentNat::new(k.clone(), vec![ke, idb]).unwrap();
    let (w, _) = split_idempotent(k.clone(), &en).unwrap().unwrap();
    assert_eq!(w.through, vec![1, 1]);
    assert_eq!(w.pi[0], k.lookup_morphism("r").unwrap());
    assert_eq!(w.iota[0], k.lookup_morphism("s").unwrap());
}

#[test]
fn bireflection_from_split_certifies() {
    let k = karoubi_category();
    let ke = k.lookup_morphism("e").unwrap();
    let idb = k.identity(1);
    let en = IdempotentNat::new(k.clone(), vec![ke, idb]).unwrap();
    let (w, _) = split_idempotent(k.clone(), &en).unwrap().unwrap();
    let bundle = bireflection_from_split(k.clone(), &en, &w, BOUND).unwrap();
    assert!(bundle.report.bireflection);
    assert!(bundle.report.frobenius_strict);
    assert!(bundle.report.coherence == Some(true));
    assert!(bundle.report.theorem_consistent);
    // with the identity idempotent, the lifted functor is an isomorphism
    let en_id = IdempotentNat::identity(k.clone());
    let (w_id, _) = split_idempotent(k.clone(), &en_id).unwrap().unwrap();
    let bundle = bireflection_from_split(k, &en_id, &w_id, BOUND).unwrap();
    assert!(functor_property(&bundle.lifted, FunctorProperty::FullyFaithful)
        .unwrap()
        .holds);
}

#[test]
fn bireflection_factorization_iff_split() {
    // a corpus functor factors as a bireflection followed by a separable
    // functor iff it is semiseparable and its associated idempotent splits
    for f in functor_corpus() {
        let v = decide_retraction(&f, RetractionMode::Semiseparable, BOUND).unwrap();
        let Some(wit) = v.witness else { continue };
        let e = associated_idempotent(&f, &wit).unwrap();
        let split = split_idempotent(f.source.clone(), &e).unwrap();
        if let Some((w, _)) = split {
            let bundle = bireflection_from_split(f.source.clone(), &e, &w, BOUND).unwrap();
            assert!(bundle.report.bireflection, "functor {}", f.name);
            // the separable part is the induced functor of the factorization
            let fact = factorize_semiseparable(&f, BOUND).unwrap();
            assert!(decide(&fact.induced, RetractionMode::Separable));
        }
    }
}
