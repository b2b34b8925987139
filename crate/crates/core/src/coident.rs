//! The coidentifier quotient of a category by an idempotent natural
//! transformation e: morphisms f, g: A -> B are identified when e_B∘f = e_B∘g.
//! The quotient functor H is naturally full with P^H(f̄) = e_B∘f, and every
//! semiseparable functor factors through H as a separable functor. When e
//! splits, H is a bireflection and the factorization upgrades accordingly.

use crate::adjunction::{frobenius_bireflection, Adjunction, FrobeniusReport};
use crate::error::{Error, Result, Violation};
use crate::fincat::{
    associated_idempotent, decide_retraction, functor_property, CategoryBuilder, FinCategory,
    FinFunctor, FunctorProperty, HomRetraction, IdempotentNat, RetractionMode,
};
use std::sync::Arc;

/// The coidentifier category C_e with its quotient functor and the canonical
/// natural-fullness witness.
#[derive(Debug, Clone)]
pub struct CoidentifierCategory {
    pub base: Arc<FinCategory>,
    pub e: IdempotentNat,
    pub quotient: Arc<FinCategory>,
    /// canonical representative (least declaration index) per base morphism
    pub class_rep: Vec<usize>,
    /// quotient morphism index per base morphism
    pub mor_to_class: Vec<usize>,
    pub quotient_functor: FinFunctor,
    /// P^H(f̄) = e_B ∘ f, the natural-fullness witness of H
    pub witness: HomRetraction,
}

impl CoidentifierCategory {
    pub fn class_of(&self, mor: usize) -> usize {
        self.mor_to_class[mor]
    }

    pub fn representative(&self, quotient_mor: usize) -> usize {
        // mor_to_class maps representatives onto quotient indices in order
        self.class_rep
            .iter()
            .copied()
            .enumerate()
            .find(|&(m, rep)| m == rep && self.mor_to_class[m] == quotient_mor)
            .map(|(m, _)| m)
            .expect("every quotient morphism has a representative")
    }
}

/// Build C_e together with the quotient functor H and its certified witness.
/// The congruence property (composition well-defined on classes) and the fact
/// that the idempotent associated to H is exactly e are both verified.
pub fn build_coidentifier(
    base: Arc<FinCategory>,
    e: &IdempotentNat,
) -> Result<CoidentifierCategory> {
    let base_violations = base.validate();
    if !base_violations.is_empty() {
        return Err(Error::invalid(base_violations));
    }
    let ev = e.validate();
    if !ev.is_empty() {
        return Err(Error::invalid(ev));
    }
    if e.category.as_ref() != base.as_ref() {
        return Err(Error::not_applicable(
            "idempotent lives on a different category",
        ));
    }
    let key = |f: usize| base.compose2(e.at(base.tgt(f)), f);
    // canonical representative: least declaration index with the same key in
    // the same hom-set
    let mut class_rep = vec![usize::MAX; base.morphism_count()];
    for f in base.morphism_indices() {
        if class_rep[f] != usize::MAX {
            continue;
        }
        for g in f..base.morphism_count() {
            if base.src(g) == base.src(f) && base.tgt(g) == base.tgt(f) && key(g) == key(f) {
                class_rep[g] = f;
            }
        }
    }
    // congruence: f ~ f', g ~ g' composable implies g∘f ~ g'∘f'
    for f in base.morphism_indices() {
        for g in base.morphism_indices() {
            if base.tgt(f) != base.src(g) {
                continue;
            }
            let f2 = class_rep[f];
            let g2 = class_rep[g];
            if class_rep[base.compose2(g, f)] != class_rep[base.compose2(g2, f2)] {
                return Err(Error::invalid(vec![Violation::new(
                    "coidentifier congruence",
                    &[base.mor_id(g), base.mor_id(f)],
                )]));
            }
        }
    }
    // quotient category on the representatives
    let reps: Vec<usize> = base
        .morphism_indices()
        .filter(|&m| class_rep[m] == m)
        .collect();
    let mut mor_to_class = vec![usize::MAX; base.morphism_count()];
    let mut builder = CategoryBuilder::new(format!("{}_e", base.name));
    for x in base.object_indices() {
        builder.object(base.object_id(x).to_string());
    }
    // identities first: the class of id_X
    let mut q_index_of_rep = std::collections::BTreeMap::new();
    for x in base.object_indices() {
        let rep = class_rep[base.identity(x)];
        if q_index_of_rep.contains_key(&rep) {
            return Err(Error::invalid(vec![Violation::new(
                "identity classes must be distinct per object",
                &[base.object_id(x)],
            )]));
        }
        let q = builder.identity(x, format!("[{}]", base.mor_id(rep)));
        q_index_of_rep.insert(rep, q);
    }
    for &rep in &reps {
        if q_index_of_rep.contains_key(&rep) {
            continue;
        }
        let q = builder.morphism(format!("[{}]", base.mor_id(rep)), base.src(rep), base.tgt(rep));
        q_index_of_rep.insert(rep, q);
    }
    for m in base.morphism_indices() {
        mor_to_class[m] = q_index_of_rep[&class_rep[m]];
    }
    let rep_of_q: std::collections::BTreeMap<usize, usize> =
        q_index_of_rep.iter().map(|(&rep, &q)| (q, rep)).collect();
    let quotient = builder.build(|g, f| {
        let comp = base.compose2(rep_of_q[&g], rep_of_q[&f]);
        q_index_of_rep[&class_rep[comp]]
    })?;
    let quotient = Arc::new(quotient);
    let qv = quotient.validate();
    if !qv.is_empty() {
        return Err(Error::invalid(qv));
    }
    let quotient_functor = FinFunctor::new(
        format!("H({})", base.name),
        base.clone(),
        quotient.clone(),
        base.object_indices().collect(),
        mor_to_class.clone(),
    )?
    .validated()?;
    // canonical witness P^H(f̄) = e_B ∘ f on representatives
    let mut table = vec![vec![Vec::new(); base.object_count()]; base.object_count()];
    for x in base.object_indices() {
        for y in base.object_indices() {
            for &q in quotient.hom(x, y) {
                let rep = rep_of_q[&q];
                table[x][y].push(base.compose2(e.at(y), rep));
            }
        }
    }
    let witness = HomRetraction {
        f: quotient_functor.clone(),
        h: FinFunctor::identity(base.clone()),
        table,
    };
    let wv = witness.validate();
    if !wv.is_empty() || !witness.satisfies_mode(RetractionMode::NaturallyFull) {
        return Err(Error::invalid(wv));
    }
    // the idempotent associated to H is exactly e
    let assoc = associated_idempotent(&quotient_functor, &witness)?;
    if assoc.components != e.components {
        return Err(Error::invalid(vec![Violation::new(
            "associated idempotent of the quotient functor must equal e",
            &[],
        )]));
    }
    Ok(CoidentifierCategory {
        base,
        e: e.clone(),
        quotient,
        class_rep,
        mor_to_class,
        quotient_functor,
        witness,
    })
}

/// Factor F through the quotient: the unique F_e with F_e∘H = F, defined on
/// classes by F_e(f̄) = F(f). Requires Fe = Id_F; with the optional
/// orthogonality data (S faithful, G with S∘F = G∘H) it also checks S∘F_e = G.
pub fn induce_through(
    coident: &CoidentifierCategory,
    f: &FinFunctor,
    orthogonal: Option<(&FinFunctor, &FinFunctor)>,
) -> Result<FinFunctor> {
    if f.source.as_ref() != coident.base.as_ref() {
        return Err(Error::not_applicable(
            "functor does not start at the coidentified category",
        ));
    }
    let fv = f.validate();
    if !fv.is_empty() {
        return Err(Error::invalid(fv));
    }
    let base = &coident.base;
    if let Some((s, g)) = orthogonal {
        if !functor_property(s, FunctorProperty::Faithful)?.holds {
            return Err(Error::not_applicable(
                "orthogonality requires a faithful functor",
            ));
        }
        let sf = FinFunctor::compose(s, f)?;
        let gh = FinFunctor::compose(g, &coident.quotient_functor)?;
        if !sf.same_tables(&gh) {
            return Err(Error::not_applicable("S∘F = G∘H fails"));
        }
    }
    for x in base.object_indices() {
        if f.on_mor(coident.e.at(x)) != f.target.identity(f.on_obj(x)) {
            return Err(Error::not_applicable(format!(
                "not liftable: Fe is not the identity at {}",
                base.object_id(x)
            )));
        }
    }
    let q = &coident.quotient;
    let mor_map: Vec<usize> = q
        .morphism_indices()
        .map(|qm| f.on_mor(coident.representative(qm)))
        .collect();
    let fe = FinFunctor::new(
        format!("{}_e", f.name),
        q.clone(),
        f.target.clone(),
        f.obj_map.clone(),
        mor_map,
    )?
    .validated()?;
    // uniqueness by table identity: F_e∘H must reproduce F, and H is identity
    // on objects and surjective on hom-sets, pinning every table entry.
    let feh = FinFunctor::compose(&fe, &coident.quotient_functor)?;
    if !feh.same_tables(f) {
        return Err(Error::invalid(vec![Violation::new("F_e∘H = F", &[])]));
    }
    if let Some((s, g)) = orthogonal {
        let sfe = FinFunctor::compose(s, &fe)?;
        if !sfe.same_tables(g) {
            return Err(Error::invalid(vec![Violation::new("S∘F_e = G", &[])]));
        }
    }
    Ok(fe)
}

/// The canonical factorization of a semiseparable functor with machine-checked
/// certificates.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub e: IdempotentNat,
    pub coident: CoidentifierCategory,
    pub induced: FinFunctor,
    pub quotient_naturally_full: HomRetraction,
    pub induced_separable: HomRetraction,
}

pub fn factorize_semiseparable(f: &FinFunctor, bound: usize) -> Result<Factorization> {
    let verdict = decide_retraction(f, RetractionMode::Semiseparable, bound)?;
    let Some(p) = verdict.witness else {
        return Err(Error::not_applicable(format!(
            "{} is not semiseparable; no coidentifier factorization exists",
            f.name
        )));
    };
    let e = associated_idempotent(f, &p)?;
    let coident = build_coidentifier(f.source.clone(), &e)?;
    let induced = induce_through(&coident, f, None)?;
    let h_nf = decide_retraction(
        &coident.quotient_functor,
        RetractionMode::NaturallyFull,
        bound,
    )?;
    let fe_sep = decide_retraction(&induced, RetractionMode::Separable, bound)?;
    let (Some(h_wit), Some(fe_wit)) = (h_nf.witness, fe_sep.witness) else {
        return Err(Error::invalid(vec![Violation::new(
            "coidentifier factorization certificates",
            &[&f.name],
        )]));
    };
    Ok(Factorization {
        e,
        coident,
        induced,
        quotient_naturally_full: h_wit,
        induced_separable: fe_wit,
    })
}

/// Per-object splitting data for an idempotent natural transformation:
/// ι_X∘π_X = e_X and π_X∘ι_X = id, with π and ι natural against the induced
/// endofunctor.
#[derive(Debug, Clone)]
pub struct SplitWitness {
    pub through: Vec<usize>,
    pub pi: Vec<usize>,
    pub iota: Vec<usize>,
}

/// Exhaustive per-object search for a splitting of e: through-objects in
/// declaration order, then π and ι in declaration order; first valid assembly
/// wins. Returns None only after all choices are exhausted. The assembled π, ι
/// are validated to be natural against the induced endofunctor.
pub fn split_idempotent(
    base: Arc<FinCategory>,
    e: &IdempotentNat,
) -> Result<Option<(SplitWitness, FinFunctor)>> {
    let ev = e.validate();
    if !ev.is_empty() {
        return Err(Error::invalid(ev));
    }
    let mut through = Vec::new();
    let mut pi = Vec::new();
    let mut iota = Vec::new();
    for x in base.object_indices() {
        let mut found = None;
        'search: for p in base.object_indices() {
            for &cand_pi in base.hom(x, p) {
                for &cand_iota in base.hom(p, x) {
                    if base.compose2(cand_iota, cand_pi) == e.at(x)
                        && base.compose2(cand_pi, cand_iota) == base.identity(p)
                    {
                        found = Some((p, cand_pi, cand_iota));
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some((p, cp, ci)) => {
                through.push(p);
                pi.push(cp);
                iota.push(ci);
            }
            None => return Ok(None),
        }
    }
    // induced endofunctor P: X -> P(X), f -> π∘f∘ι
    let obj_map = through.clone();
    let mor_map: Vec<usize> = base
        .morphism_indices()
        .map(|f| {
            let x = base.src(f);
            let y = base.tgt(f);
            base.compose2(pi[y], base.compose2(f, iota[x]))
        })
        .collect();
    let p_fun = FinFunctor::new(
        format!("P({})", base.name),
        base.clone(),
        base.clone(),
        obj_map,
        mor_map,
    )?
    .validated()?;
    // π: Id -> P and ι: P -> Id natural
    for f in base.morphism_indices() {
        let x = base.src(f);
        let y = base.tgt(f);
        if base.compose2(p_fun.on_mor(f), pi[x]) != base.compose2(pi[y], f) {
            return Err(Error::invalid(vec![Violation::new(
                "π naturality",
                &[base.mor_id(f)],
            )]));
        }
        if base.compose2(f, iota[x]) != base.compose2(iota[y], p_fun.on_mor(f)) {
            return Err(Error::invalid(vec![Violation::new(
                "ι naturality",
                &[base.mor_id(f)],
            )]));
        }
    }
    Ok(Some((SplitWitness { through, pi, iota }, p_fun)))
}

/// Bireflection data built from a split idempotent: the lifted P_e with
/// P_e∘H = P, the adjunction P_e ⊣ H with counit ι and invertible unit given
/// by the classes of π, the reverse adjunction H ⊣ P_e, and the full
/// Frobenius/bireflection certification of H.
#[derive(Debug, Clone)]
pub struct BireflectionBundle {
    pub coident: CoidentifierCategory,
    pub lifted: FinFunctor,
    pub left_adjunction: Adjunction,
    pub right_adjunction: Adjunction,
    pub report: FrobeniusReport,
}

pub fn bireflection_from_split(
    base: Arc<FinCategory>,
    e: &IdempotentNat,
    w: &SplitWitness,
    bound: usize,
) -> Result<BireflectionBundle> {
    // re-validate the witness
    for x in base.object_indices() {
        let p = w.through[x];
        if base.compose2(w.iota[x], w.pi[x]) != e.at(x)
            || base.compose2(w.pi[x], w.iota[x]) != base.identity(p)
        {
            return Err(Error::invalid(vec![Violation::new(
                "split witness equations",
                &[base.object_id(x)],
            )]));
        }
    }
    let coident = build_coidentifier(base.clone(), e)?;
    let mor_map: Vec<usize> = base
        .morphism_indices()
        .map(|f| {
            let x = base.src(f);
            let y = base.tgt(f);
            base.compose2(w.pi[y], base.compose2(f, w.iota[x]))
        })
        .collect();
    let p_fun = FinFunctor::new(
        format!("P({})", base.name),
        base.clone(),
        base.clone(),
        w.through.clone(),
        mor_map,
    )?
    .validated()?;
    let lifted = induce_through(&coident, &p_fun, None)?;
    let h = &coident.quotient_functor;
    // P_e ⊣ H: unit η_X = [π_X], counit = ι
    let unit_components: Vec<usize> = base
        .object_indices()
        .map(|x| coident.class_of(w.pi[x]))
        .collect();
    let left_adjunction = Adjunction::from_components(
        format!("P_e⊣H({})", base.name),
        lifted.clone(),
        h.clone(),
        unit_components,
        w.iota.clone(),
    )?
    .validated()?;
    // H ⊣ P_e: unit = π, counit [ι_X]
    let counit_components: Vec<usize> = base
        .object_indices()
        .map(|x| coident.class_of(w.iota[x]))
        .collect();
    let right_adjunction = Adjunction::from_components(
        format!("H⊣P_e({})", base.name),
        h.clone(),
        lifted.clone(),
        w.pi.clone(),
        counit_components,
    )?
    .validated()?;
    let report = frobenius_bireflection(&left_adjunction, &right_adjunction, bound)?;
    if !report.bireflection || !functor_property(&lifted, FunctorProperty::FullyFaithful)?.holds {
        return Err(Error::invalid(vec![Violation::new(
            "split idempotent must induce a bireflection",
            &[],
        )]));
    }
    Ok(BireflectionBundle {
        coident,
        lifted,
        left_adjunction,
        right_adjunction,
        report,
    })
}
