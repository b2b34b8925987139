//! Adjunctions between finite categories: Rafael-type regularity of units and
//! counits, Eilenberg-Moore categories with comparison functors, separable and
//! idempotent monads, adjoint triples, Frobenius profiles and bireflections.

use crate::error::{Error, Result, Violation};
use crate::fincat::{
    associated_idempotent, decide_retraction, CategoryBuilder, FinCategory, FinFunctor,
    FunctorProperty, IdempotentNat, NatTrans, RetractionMode,
};
use std::sync::Arc;

/// An adjunction F ⊣ G with explicit unit and counit. Never inferred.
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub name: String,
    /// Left adjoint F: C -> D.
    pub left: FinFunctor,
    /// Right adjoint G: D -> C.
    pub right: FinFunctor,
    /// η: Id_C -> G∘F.
    pub unit: NatTrans,
    /// ε: F∘G -> Id_D.
    pub counit: NatTrans,
}

impl Adjunction {
    pub fn new(
        name: impl Into<String>,
        left: FinFunctor,
        right: FinFunctor,
        unit: NatTrans,
        counit: NatTrans,
    ) -> Adjunction {
        Adjunction {
            name: name.into(),
            left,
            right,
            unit,
            counit,
        }
    }

    /// Build the unit/counit transformations from raw component tables.
    pub fn from_components(
        name: impl Into<String>,
        left: FinFunctor,
        right: FinFunctor,
        unit_components: Vec<usize>,
        counit_components: Vec<usize>,
    ) -> Result<Adjunction> {
        let gf = FinFunctor::compose(&right, &left)?;
        let fg = FinFunctor::compose(&left, &right)?;
        let idc = FinFunctor::identity(left.source.clone());
        let idd = FinFunctor::identity(left.target.clone());
        let unit = NatTrans::new("η", idc, gf, unit_components)?;
        let counit = NatTrans::new("ε", fg, idd, counit_components)?;
        Ok(Adjunction::new(name, left, right, unit, counit))
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.left.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.left.target
    }

    /// Validate categories, functors, unit/counit naturality and the triangle
    /// identities εF ∘ Fη = Id_F and Gε ∘ ηG = Id_G.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.left.source.validate());
        out.extend(self.left.target.validate());
        out.extend(self.left.validate());
        out.extend(self.right.validate());
        if self.right.source.as_ref() != self.left.target.as_ref()
            || self.right.target.as_ref() != self.left.source.as_ref()
        {
            out.push(Violation::new("adjoint functors must be opposed", &[]));
            return out;
        }
        out.extend(self.unit.validate());
        out.extend(self.counit.validate());
        if !out.is_empty() {
            return out;
        }
        let c = &self.left.source;
        let d = &self.left.target;
        for x in c.object_indices() {
            let lhs = d.compose2(
                self.counit.at(self.left.on_obj(x)),
                self.left.on_mor(self.unit.at(x)),
            );
            if lhs != d.identity(self.left.on_obj(x)) {
                out.push(Violation::new("triangle identity εF∘Fη", &[c.object_id(x)]));
            }
        }
        for y in d.object_indices() {
            let lhs = c.compose2(
                self.right.on_mor(self.counit.at(y)),
                self.unit.at(self.right.on_obj(y)),
            );
            if lhs != c.identity(self.right.on_obj(y)) {
                out.push(Violation::new("triangle identity Gε∘ηG", &[d.object_id(y)]));
            }
        }
        out
    }

    pub fn validated(self) -> Result<Adjunction> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }

    /// The opposite adjunction G^op ⊣ F^op; the unit is ε^op and the counit is
    /// η^op, with identical component tables. Used to run every comonad-side
    /// statement through the monad-side code path.
    pub fn dualize(&self) -> Result<Adjunction> {
        let c_op = Arc::new(self.left.source.dualize());
        let d_op = Arc::new(self.left.target.dualize());
        let f_op = FinFunctor::new(
            format!("{}^op", self.left.name),
            c_op.clone(),
            d_op.clone(),
            self.left.obj_map.clone(),
            self.left.mor_map.clone(),
        )?;
        let g_op = FinFunctor::new(
            format!("{}^op", self.right.name),
            d_op.clone(),
            c_op.clone(),
            self.right.obj_map.clone(),
            self.right.mor_map.clone(),
        )?;
        let unit = NatTrans::new(
            "ε^op",
            FinFunctor::identity(d_op.clone()),
            FinFunctor::compose(&f_op, &g_op)?,
            self.counit.components.clone(),
        )?;
        let counit = NatTrans::new(
            "η^op",
            FinFunctor::compose(&g_op, &f_op)?,
            FinFunctor::identity(c_op.clone()),
            self.unit.components.clone(),
        )?;
        Ok(Adjunction::new(
            format!("{}^op", self.name),
            g_op,
            f_op,
            unit,
            counit,
        ))
    }

    /// The associated monad (GF, GεF, η) on the source category.
    pub fn monad(&self) -> Result<Monad> {
        let t = FinFunctor::compose(&self.right, &self.left)?;
        let tt = FinFunctor::compose(&t, &t)?;
        let c = &self.left.source;
        let mult_components: Vec<usize> = c
            .object_indices()
            .map(|x| self.right.on_mor(self.counit.at(self.left.on_obj(x))))
            .collect();
        let mult = NatTrans::new("GεF", tt, t.clone(), mult_components)?;
        let unit = self.unit.clone();
        Ok(Monad {
            name: format!("monad({})", self.name),
            t,
            mult,
            unit,
        })
    }
}

/// A monad on a finite category, with explicit multiplication and unit.
#[derive(Debug, Clone)]
pub struct Monad {
    pub name: String,
    pub t: FinFunctor,
    /// m: TT -> T.
    pub mult: NatTrans,
    /// u: Id -> T.
    pub unit: NatTrans,
}

impl Monad {
    pub fn category(&self) -> &Arc<FinCategory> {
        &self.t.source
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.t.source.validate());
        out.extend(self.t.validate());
        out.extend(self.mult.validate());
        out.extend(self.unit.validate());
        if !out.is_empty() {
            return out;
        }
        let c = self.category().clone();
        for x in c.object_indices() {
            // associativity m∘Tm = m∘mT at x
            let left = c.compose2(self.mult.at(x), self.t.on_mor(self.mult.at(x)));
            let right = c.compose2(self.mult.at(x), self.mult.at(self.t.on_obj(x)));
            if left != right {
                out.push(Violation::new("monad associativity", &[c.object_id(x)]));
            }
            // unit laws m∘Tu = m∘uT = Id_T at x
            let lu = c.compose2(self.mult.at(x), self.t.on_mor(self.unit.at(x)));
            let ru = c.compose2(self.mult.at(x), self.unit.at(self.t.on_obj(x)));
            let idt = c.identity(self.t.on_obj(x));
            if lu != idt {
                out.push(Violation::new("monad unit law m∘Tu", &[c.object_id(x)]));
            }
            if ru != idt {
                out.push(Violation::new("monad unit law m∘uT", &[c.object_id(x)]));
            }
        }
        out
    }

    pub fn validated(self) -> Result<Monad> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }

    /// Multiplication invertible componentwise.
    pub fn is_idempotent(&self) -> bool {
        self.mult.is_iso()
    }
}

/// Backtracking enumeration of natural-transformation component tables subject
/// to a partial-assignment predicate. `candidates(x)` lists the allowed
/// components at object x in deterministic order; `partial_ok` prunes.
pub fn search_components(
    n_objects: usize,
    candidates: &dyn Fn(usize) -> Vec<usize>,
    partial_ok: &dyn Fn(&[Option<usize>]) -> bool,
) -> Option<Vec<usize>> {
    fn rec(
        x: usize,
        n: usize,
        candidates: &dyn Fn(usize) -> Vec<usize>,
        partial_ok: &dyn Fn(&[Option<usize>]) -> bool,
        acc: &mut Vec<Option<usize>>,
    ) -> bool {
        if x == n {
            return true;
        }
        for cand in candidates(x) {
            acc[x] = Some(cand);
            if partial_ok(acc) && rec(x + 1, n, candidates, partial_ok, acc) {
                return true;
            }
            acc[x] = None;
        }
        false
    }
    let mut acc = vec![None; n_objects];
    if rec(0, n_objects, candidates, partial_ok, &mut acc) {
        Some(acc.into_iter().map(Option::unwrap).collect())
    } else {
        None
    }
}

/// All natural transformations F -> G, by exhaustive search.
pub fn all_nat_trans(f: &FinFunctor, g: &FinFunctor) -> Vec<NatTrans> {
    let c = &f.source;
    let d = &f.target;
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
    for x in c.object_indices() {
        let mut next = Vec::new();
        for partial in &stack {
            for &cand in d.hom(f.on_obj(x), g.on_obj(x)) {
                let mut p = partial.clone();
                p.push(cand);
                // naturality against morphisms among assigned objects
                let ok = c.morphism_indices().all(|m| {
                    let (s, t) = (c.src(m), c.tgt(m));
                    if s > x || t > x {
                        return true;
                    }
                    d.compose2(p[t], f.on_mor(m)) == d.compose2(g.on_mor(m), p[s])
                });
                if ok {
                    next.push(p);
                }
            }
        }
        stack = next;
    }
    if c.object_count() == 0 {
        stack = vec![Vec::new()];
    }
    for components in stack {
        if let Ok(nt) = NatTrans::new("α", f.clone(), g.clone(), components) {
            if nt.validate().is_empty() {
                out.push(nt);
            }
        }
    }
    out
}

/// Search a natural transformation F -> G whose component at x passes `local`,
/// deterministically (declaration order).
pub fn find_nat_trans(
    f: &FinFunctor,
    g: &FinFunctor,
    local: &dyn Fn(usize, usize) -> bool,
) -> Option<NatTrans> {
    let c = f.source.clone();
    let d = f.target.clone();
    let fc = f.clone();
    let gc = g.clone();
    let comps = search_components(
        c.object_count(),
        &|x| {
            d.hom(fc.on_obj(x), gc.on_obj(x))
                .iter()
                .copied()
                .filter(|&m| local(x, m))
                .collect()
        },
        &|partial| {
            c.morphism_indices().all(|m| {
                let (s, t) = (c.src(m), c.tgt(m));
                match (partial[s], partial[t]) {
                    (Some(a), Some(b)) => {
                        d.compose2(b, fc.on_mor(m)) == d.compose2(gc.on_mor(m), a)
                    }
                    _ => true,
                }
            })
        },
    )?;
    NatTrans::new("found", f.clone(), g.clone(), comps).ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdjointSide {
    Left,
    Right,
}

/// Rafael-type regularity report. The regularity verdict is cross-checked
/// against the direct retraction decider: a disagreement is a soundness bug
/// and surfaces as an error.
#[derive(Debug, Clone)]
pub struct RafaelReport {
    pub side: AdjointSide,
    pub regular: bool,
    pub witness: Option<NatTrans>,
    pub decide_retraction_agrees: bool,
}

pub fn rafael_regularity(adj: &Adjunction, side: AdjointSide, bound: usize) -> Result<RafaelReport> {
    let v = adj.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let c = adj.source().clone();
    let d = adj.target().clone();
    let witness = match side {
        AdjointSide::Left => {
            // ν: GF -> Id_C with η∘ν∘η = η.
            let gf = FinFunctor::compose(&adj.right, &adj.left)?;
            let idc = FinFunctor::identity(c.clone());
            let eta = adj.unit.clone();
            find_nat_trans(&gf, &idc, &|x, nu_x| {
                let e = c.compose2(eta.at(x), c.compose2(nu_x, eta.at(x)));
                e == eta.at(x)
            })
        }
        AdjointSide::Right => {
            // γ: Id_D -> FG with ε∘γ∘ε = ε.
            let fg = FinFunctor::compose(&adj.left, &adj.right)?;
            let idd = FinFunctor::identity(d.clone());
            let eps = adj.counit.clone();
            find_nat_trans(&idd, &fg, &|y, gamma_y| {
                let e = d.compose2(eps.at(y), d.compose2(gamma_y, eps.at(y)));
                e == eps.at(y)
            })
        }
    };
    let functor = match side {
        AdjointSide::Left => &adj.left,
        AdjointSide::Right => &adj.right,
    };
    let direct = decide_retraction(functor, RetractionMode::Semiseparable, bound)?;
    let regular = witness.is_some();
    if regular != direct.holds {
        return Err(Error::invalid(vec![Violation::new(
            "Rafael regularity disagrees with the direct decider",
            &[&adj.name],
        )]));
    }
    Ok(RafaelReport {
        side,
        regular,
        witness,
        decide_retraction_agrees: true,
    })
}

/// The three equivalent equalities for a regularity candidate (unit side:
/// η∘ν∘η = η, Fν∘Fη = Id_F, νG∘ηG = Id_G; counit side dually). All three are
/// evaluated; they must agree for any natural candidate.
pub fn lemma_b_profile(adj: &Adjunction, w: &NatTrans, side: AdjointSide) -> Result<[bool; 3]> {
    let c = adj.source().clone();
    let d = adj.target().clone();
    Ok(match side {
        AdjointSide::Left => {
            let eta = &adj.unit;
            let one = c.object_indices().all(|x| {
                c.compose2(eta.at(x), c.compose2(w.at(x), eta.at(x))) == eta.at(x)
            });
            let two = c.object_indices().all(|x| {
                d.compose2(adj.left.on_mor(w.at(x)), adj.left.on_mor(eta.at(x)))
                    == d.identity(adj.left.on_obj(x))
            });
            let three = d.object_indices().all(|y| {
                let gy = adj.right.on_obj(y);
                c.compose2(w.at(gy), eta.at(gy)) == c.identity(gy)
            });
            [one, two, three]
        }
        AdjointSide::Right => {
            let eps = &adj.counit;
            let one = d.object_indices().all(|y| {
                d.compose2(eps.at(y), d.compose2(w.at(y), eps.at(y))) == eps.at(y)
            });
            let two = d.object_indices().all(|y| {
                c.compose2(adj.right.on_mor(eps.at(y)), adj.right.on_mor(w.at(y)))
                    == c.identity(adj.right.on_obj(y))
            });
            let three = c.object_indices().all(|x| {
                let fx = adj.left.on_obj(x);
                d.compose2(eps.at(fx), w.at(fx)) == d.identity(fx)
            });
            [one, two, three]
        }
    })
}

/// Componentwise-iso test of the four whiskered transformations; they must
/// agree, and their common value is idempotency of the adjunction.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdempotencyReport {
    pub eps_f: bool,
    pub g_eps: bool,
    pub f_eta: bool,
    pub eta_g: bool,
    pub idempotent: bool,
}

pub fn idempotent_adjunction_check(adj: &Adjunction) -> Result<IdempotencyReport> {
    let v = adj.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let c = adj.source().clone();
    let d = adj.target().clone();
    let is_iso_in = |cat: &FinCategory, m: usize| {
        let x = cat.src(m);
        let y = cat.tgt(m);
        cat.hom(y, x)
            .iter()
            .any(|&g| cat.compose2(g, m) == cat.identity(x) && cat.compose2(m, g) == cat.identity(y))
    };
    let eps_f = c
        .object_indices()
        .all(|x| is_iso_in(&d, adj.counit.at(adj.left.on_obj(x))));
    let g_eps = d
        .object_indices()
        .all(|y| is_iso_in(&c, adj.right.on_mor(adj.counit.at(y))));
    let f_eta = c
        .object_indices()
        .all(|x| is_iso_in(&d, adj.left.on_mor(adj.unit.at(x))));
    let eta_g = d
        .object_indices()
        .all(|y| is_iso_in(&c, adj.unit.at(adj.right.on_obj(y))));
    if !(eps_f == g_eps && g_eps == f_eta && f_eta == eta_g) {
        return Err(Error::invalid(vec![Violation::new(
            "idempotency criteria disagree",
            &[&adj.name],
        )]));
    }
    Ok(IdempotencyReport {
        eps_f,
        g_eps,
        f_eta,
        eta_g,
        idempotent: eps_f,
    })
}

/// Exhaustive search for a separability splitting σ: T -> TT with m∘σ = Id_T
/// and Tm∘σT = σ∘m = mT∘Tσ.
pub fn separable_monad_check(monad: &Monad) -> Result<Option<NatTrans>> {
    let v = monad.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let c = monad.category().clone();
    let t = monad.t.clone();
    let tt = FinFunctor::compose(&t, &t)?;
    let mult = monad.mult.clone();
    let tc = t.clone();
    let cc = c.clone();
    let mc = mult.clone();
    let comps = search_components(
        c.object_count(),
        &|x| {
            cc.hom(tc.on_obj(x), tc.on_obj(tc.on_obj(x)))
                .iter()
                .copied()
                .filter(|&s| cc.compose2(mc.at(x), s) == cc.identity(tc.on_obj(x)))
                .collect()
        },
        &|partial| {
            // naturality σ_y ∘ Tf = TTf ∘ σ_x
            let natural = cc.morphism_indices().all(|m| {
                let (s, tgt) = (cc.src(m), cc.tgt(m));
                match (partial[s], partial[tgt]) {
                    (Some(a), Some(b)) => {
                        cc.compose2(b, tc.on_mor(m)) == cc.compose2(tc.on_mor(tc.on_mor(m)), a)
                    }
                    _ => true,
                }
            });
            if !natural {
                return false;
            }
            // centrality Tm_X∘σ_TX = σ_X∘m_X = m_TX∘Tσ_X where both sides known
            cc.object_indices().all(|x| {
                let tx = tc.on_obj(x);
                let (Some(sx), Some(stx)) = (partial[x], partial[tx]) else {
                    return true;
                };
                let lhs = cc.compose2(tc.on_mor(mc.at(x)), stx);
                let mid = cc.compose2(sx, mc.at(x));
                let rhs = cc.compose2(mc.at(tx), tc.on_mor(sx));
                lhs == mid && mid == rhs
            })
        },
    );
    match comps {
        Some(components) => {
            let sigma = NatTrans::new("σ", t, tt, components)?.validated()?;
            Ok(Some(sigma))
        }
        None => Ok(None),
    }
}

/// The Eilenberg-Moore category of a monad, enumerated exhaustively, together
/// with the forgetful and free functors and the free-forgetful adjunction.
#[derive(Debug, Clone)]
pub struct EMCategory {
    pub category: Arc<FinCategory>,
    /// (underlying object, structure morphism μ: TX -> X) per EM object.
    pub algebras: Vec<(usize, usize)>,
    /// (algebra index, algebra index, underlying morphism) per EM morphism.
    pub morphisms: Vec<(usize, usize, usize)>,
    pub forgetful: FinFunctor,
    pub free: FinFunctor,
    pub adjunction: Adjunction,
}

impl EMCategory {
    pub fn algebra_index(&self, x: usize, mu: usize) -> Option<usize> {
        self.algebras.iter().position(|&(o, m)| o == x && m == mu)
    }

    pub fn morphism_index(&self, from: usize, to: usize, underlying: usize) -> Option<usize> {
        self.morphisms
            .iter()
            .position(|&(a, b, m)| a == from && b == to && m == underlying)
    }
}

/// Enumerate the Eilenberg-Moore category of a monad. Errors when the algebra
/// count exceeds the bound.
pub fn build_em(monad: &Monad, bound: usize) -> Result<EMCategory> {
    let v = monad.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let c = monad.category().clone();
    let t = &monad.t;
    let mut algebras = Vec::new();
    for x in c.object_indices() {
        let tx = t.on_obj(x);
        for &mu in c.hom(tx, x) {
            let unit_law = c.compose2(mu, monad.unit.at(x)) == c.identity(x);
            let assoc_law = c.compose2(mu, monad.mult.at(x)) == c.compose2(mu, t.on_mor(mu));
            if unit_law && assoc_law {
                algebras.push((x, mu));
            }
        }
    }
    if algebras.len() > bound {
        return Err(Error::SearchBound(format!(
            "Eilenberg-Moore enumeration found {} algebras, bound is {bound}",
            algebras.len()
        )));
    }
    let mut builder = CategoryBuilder::new(format!("EM({})", monad.name));
    for (i, &(x, mu)) in algebras.iter().enumerate() {
        builder.object(format!("({}|{})#{i}", c.object_id(x), c.mor_id(mu)));
    }
    // identities must be added first per object for CategoryBuilder bookkeeping
    let mut morphisms: Vec<(usize, usize, usize)> = Vec::new();
    for (i, &(x, _)) in algebras.iter().enumerate() {
        builder.identity(i, format!("id#{i}"));
        morphisms.push((i, i, c.identity(x)));
    }
    for (i, &(x, mu)) in algebras.iter().enumerate() {
        for (j, &(y, nu)) in algebras.iter().enumerate() {
            for &f in c.hom(x, y) {
                if i == j && f == c.identity(x) {
                    continue; // already added as the identity
                }
                if c.compose2(f, mu) == c.compose2(nu, t.on_mor(f)) {
                    builder.morphism(format!("{}@{i}>{j}", c.mor_id(f)), i, j);
                    morphisms.push((i, j, f));
                }
            }
        }
    }
    let morphisms_clone = morphisms.clone();
    let cc = c.clone();
    let em_cat = builder.build(|g, f| {
        let (_, _, gu) = morphisms_clone[g];
        let (i, _, fu) = morphisms_clone[f];
        let comp = cc.compose2(gu, fu);
        let (_, j2, _) = morphisms_clone[g];
        morphisms_clone
            .iter()
            .position(|&(a, b, m)| a == i && b == j2 && m == comp)
            .expect("EM category closed under composition")
    })?;
    let em_cat = Arc::new(em_cat);
    let forgetful = FinFunctor::new(
        format!("U({})", monad.name),
        em_cat.clone(),
        c.clone(),
        algebras.iter().map(|&(x, _)| x).collect(),
        morphisms.iter().map(|&(_, _, m)| m).collect(),
    )?
    .validated()?;
    // free functor X -> (TX, m_X), f -> Tf
    let free_obj: Vec<usize> = c
        .object_indices()
        .map(|x| {
            algebras
                .iter()
                .position(|&(o, m)| o == t.on_obj(x) && m == monad.mult.at(x))
                .expect("free algebra (TX, m_X) exists")
        })
        .collect();
    let free_mor: Vec<usize> = c
        .morphism_indices()
        .map(|f| {
            let i = free_obj[c.src(f)];
            let j = free_obj[c.tgt(f)];
            morphisms
                .iter()
                .position(|&(a, b, m)| a == i && b == j && m == t.on_mor(f))
                .expect("free functor image exists")
        })
        .collect();
    let free = FinFunctor::new(
        format!("V({})", monad.name),
        c.clone(),
        em_cat.clone(),
        free_obj.clone(),
        free_mor,
    )?
    .validated()?;
    // U∘V = T on the nose
    let uv = FinFunctor::compose(&forgetful, &free)?;
    if !uv.same_tables(t) {
        return Err(Error::invalid(vec![Violation::new("U∘V = T", &[])]));
    }
    // free-forgetful adjunction: unit = monad unit, counit β with Uβ_(X,μ) = μ
    let counit_components: Vec<usize> = algebras
        .iter()
        .enumerate()
        .map(|(i, &(_, mu))| {
            let from = free_obj[forgetful.on_obj(i)];
            morphisms
                .iter()
                .position(|&(a, b, m)| a == from && b == i && m == mu)
                .expect("counit is an algebra morphism")
        })
        .collect();
    let adjunction = Adjunction::from_components(
        format!("V⊣U({})", monad.name),
        free.clone(),
        forgetful.clone(),
        monad.unit.components.clone(),
        counit_components,
    )?
    .validated()?;
    Ok(EMCategory {
        category: em_cat,
        algebras,
        morphisms,
        forgetful,
        free,
        adjunction,
    })
}

/// The comparison functor K: D -> EM(GF), D -> (GD, Gε_D), f -> Gf.
pub fn comparison_functor(adj: &Adjunction, em: &EMCategory) -> Result<FinFunctor> {
    let d = adj.target().clone();
    let obj_map: Vec<usize> = d
        .object_indices()
        .map(|y| {
            em.algebra_index(adj.right.on_obj(y), adj.right.on_mor(adj.counit.at(y)))
                .ok_or_else(|| {
                    Error::invalid(vec![Violation::new(
                        "comparison image algebra missing",
                        &[d.object_id(y)],
                    )])
                })
        })
        .collect::<Result<_>>()?;
    let mor_map: Vec<usize> = d
        .morphism_indices()
        .map(|f| {
            em.morphism_index(
                obj_map[d.src(f)],
                obj_map[d.tgt(f)],
                adj.right.on_mor(f),
            )
            .ok_or_else(|| {
                Error::invalid(vec![Violation::new(
                    "comparison image morphism missing",
                    &[d.mor_id(f)],
                )])
            })
        })
        .collect::<Result<_>>()?;
    let k = FinFunctor::new(
        format!("K({})", adj.name),
        d,
        em.category.clone(),
        obj_map,
        mor_map,
    )?
    .validated()?;
    // U∘K = G
    let uk = FinFunctor::compose(&em.forgetful, &k)?;
    if !uk.same_tables(&adj.right) {
        return Err(Error::invalid(vec![Violation::new("U∘K = G", &[])]));
    }
    Ok(k)
}

/// One side of the semiseparable-monad theorem: the right adjoint is
/// semiseparable iff the forgetful functor is separable (equivalently the
/// monad is separable) and the comparison functor is naturally full.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MonadSideReport {
    pub right_adjoint_semiseparable: bool,
    pub monad_separable: bool,
    pub forgetful_separable: bool,
    pub comparison_naturally_full: bool,
    pub biconditional_holds: bool,
}

pub fn ssep_monad_side(adj: &Adjunction, bound: usize) -> Result<MonadSideReport> {
    let v = adj.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let monad = adj.monad()?.validated()?;
    let em = build_em(&monad, bound)?;
    let k = comparison_functor(adj, &em)?;
    let g_ssep = decide_retraction(&adj.right, RetractionMode::Semiseparable, bound)?.holds;
    let monad_separable = separable_monad_check(&monad)?.is_some();
    let u_separable = decide_retraction(&em.forgetful, RetractionMode::Separable, bound)?.holds;
    let k_natfull = decide_retraction(&k, RetractionMode::NaturallyFull, bound)?.holds;
    if monad_separable != u_separable {
        return Err(Error::invalid(vec![Violation::new(
            "monad separability must match forgetful-functor separability",
            &[&adj.name],
        )]));
    }
    let biconditional = g_ssep == (u_separable && k_natfull);
    Ok(MonadSideReport {
        right_adjoint_semiseparable: g_ssep,
        monad_separable,
        forgetful_separable: u_separable,
        comparison_naturally_full: k_natfull,
        biconditional_holds: biconditional,
    })
}

/// Both directions of the theorem: the monad side for G and, through the
/// opposite adjunction, the comonad side for F.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MonadTheoremReport {
    pub monad_side: MonadSideReport,
    pub comonad_side: MonadSideReport,
}

pub fn ssep_monad_theorem(adj: &Adjunction, bound: usize) -> Result<MonadTheoremReport> {
    let monad_side = ssep_monad_side(adj, bound)?;
    let op = adj.dualize()?.validated()?;
    let comonad_side = ssep_monad_side(&op, bound)?;
    Ok(MonadTheoremReport {
        monad_side,
        comonad_side,
    })
}

/// An adjoint triple F ⊣ G ⊣ H with the shared middle functor.
#[derive(Debug, Clone)]
pub struct AdjointTriple {
    pub name: String,
    pub left: Adjunction,
    pub right: Adjunction,
}

impl AdjointTriple {
    pub fn new(name: impl Into<String>, left: Adjunction, right: Adjunction) -> AdjointTriple {
        AdjointTriple {
            name: name.into(),
            left,
            right,
        }
    }

    pub fn f(&self) -> &FinFunctor {
        &self.left.left
    }

    pub fn g(&self) -> &FinFunctor {
        &self.left.right
    }

    pub fn h(&self) -> &FinFunctor {
        &self.right.right
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.left.validate();
        out.extend(self.right.validate());
        if !out.is_empty() {
            return out;
        }
        if !self.left.right.same_tables(&self.right.left) {
            out.push(Violation::new(
                "triple must share its middle functor",
                &[&self.left.right.name, &self.right.left.name],
            ));
        }
        out
    }

    pub fn validated(self) -> Result<AdjointTriple> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}

/// Transfer report for an adjoint triple: for each of the three properties the
/// outer functors must agree; when a regularity witness ν^l exists for F, the
/// displayed γ^r = GHν^l ∘ Gη^r F ∘ η^l is constructed and verified to witness
/// regularity of ε^r.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TripleTransferReport {
    pub semiseparable_f: bool,
    pub semiseparable_h: bool,
    pub separable_f: bool,
    pub separable_h: bool,
    pub naturally_full_f: bool,
    pub naturally_full_h: bool,
    pub transfers_agree: bool,
    pub gamma_constructed: bool,
    pub gamma_is_witness: bool,
    pub gamma_equation_holds: bool,
}

pub fn adjoint_triple_transfer(triple: &AdjointTriple, bound: usize) -> Result<TripleTransferReport> {
    let v = triple.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let f = triple.f();
    let h = triple.h();
    let decide = |fun: &FinFunctor, mode| -> Result<bool> {
        Ok(decide_retraction(fun, mode, bound)?.holds)
    };
    let ss_f = decide(f, RetractionMode::Semiseparable)?;
    let ss_h = decide(h, RetractionMode::Semiseparable)?;
    let sep_f = decide(f, RetractionMode::Separable)?;
    let sep_h = decide(h, RetractionMode::Separable)?;
    let nf_f = decide(f, RetractionMode::NaturallyFull)?;
    let nf_h = decide(h, RetractionMode::NaturallyFull)?;
    let transfers_agree = ss_f == ss_h && sep_f == sep_h && nf_f == nf_h;

    // witness transfer: ν^l regular for η^l induces γ^r regular for ε^r
    let c = triple.left.source().clone();
    let g = triple.g();
    let rafael_left = rafael_regularity(&triple.left, AdjointSide::Left, bound)?;
    let (mut gamma_constructed, mut gamma_is_witness, mut gamma_equation_holds) =
        (false, false, false);
    if let Some(nu) = &rafael_left.witness {
        gamma_constructed = true;
        let eta_l = &triple.left.unit;
        let eta_r = &triple.right.unit;
        let eps_r = &triple.right.counit;
        // γ^r_X = G(H(ν_X)) ∘ G(η^r_{FX}) ∘ η^l_X : X -> GHX
        let comps: Vec<usize> = c
            .object_indices()
            .map(|x| {
                let step1 = eta_l.at(x);
                let step2 = g.on_mor(eta_r.at(f.on_obj(x)));
                let step3 = g.on_mor(h.on_mor(nu.at(x)));
                c.compose2(step3, c.compose2(step2, step1))
            })
            .collect();
        let gh = FinFunctor::compose(g, h)?;
        let gamma = NatTrans::new(
            "γ^r",
            FinFunctor::identity(c.clone()),
            gh,
            comps,
        )?;
        if gamma.validate().is_empty() {
            gamma_is_witness = c.object_indices().all(|x| {
                c.compose2(eps_r.at(x), c.compose2(gamma.at(x), eps_r.at(x))) == eps_r.at(x)
            });
            gamma_equation_holds = c.object_indices().all(|x| {
                c.compose2(eps_r.at(x), gamma.at(x))
                    == c.compose2(nu.at(x), eta_l.at(x))
            });
        }
    }
    Ok(TripleTransferReport {
        semiseparable_f: ss_f,
        semiseparable_h: ss_h,
        separable_f: sep_f,
        separable_h: sep_h,
        naturally_full_f: nf_f,
        naturally_full_h: nf_h,
        transfers_agree,
        gamma_constructed,
        gamma_is_witness,
        gamma_equation_holds,
    })
}

/// Witness profile for a Frobenius functor: for every natural α: G -> G
/// (respectively β: F -> F) the three displayed equalities of each family are
/// equivalent, and each family is nonempty exactly when F is semiseparable.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FrobProfile {
    pub family_alpha_unit: bool,
    pub family_beta_unit: bool,
    pub family_alpha_counit: bool,
    pub family_beta_counit: bool,
    pub per_candidate_equivalences_hold: bool,
    pub frobenius_functor_semiseparable: bool,
    pub families_agree_with_semiseparability: bool,
}

/// A Frobenius package: f with two-sided adjoint g, as the two adjunctions
/// (f ⊣ g) and (g ⊣ f).
pub struct FrobeniusPackage<'a> {
    pub f: &'a FinFunctor,
    pub g: &'a FinFunctor,
    pub adj_fg: &'a Adjunction,
    pub adj_gf: &'a Adjunction,
}

pub fn frob_ssep_profile(pkg: &FrobeniusPackage<'_>, bound: usize) -> Result<FrobProfile> {
    let c = pkg.f.source.clone();
    let d = pkg.f.target.clone();
    let eta_l = &pkg.adj_fg.unit; // Id_C -> GF
    let eps_r = &pkg.adj_gf.counit; // GF -> Id_C
    let f = pkg.f;
    let g = pkg.g;

    // display evaluators for a candidate α: G -> G
    let alpha_d1 = |a: &NatTrans| {
        c.object_indices().all(|x| {
            let inner = c.compose2(
                eps_r.at(x),
                c.compose2(a.at(f.on_obj(x)), eta_l.at(x)),
            );
            c.compose2(eta_l.at(x), inner) == eta_l.at(x)
        })
    };
    let alpha_d2 = |a: &NatTrans| {
        c.object_indices().all(|x| {
            let m = d.compose2(
                f.on_mor(eps_r.at(x)),
                d.compose2(f.on_mor(a.at(f.on_obj(x))), f.on_mor(eta_l.at(x))),
            );
            m == d.identity(f.on_obj(x))
        })
    };
    let alpha_d3 = |a: &NatTrans| {
        d.object_indices().all(|y| {
            let gy = g.on_obj(y);
            let m = c.compose2(
                eps_r.at(gy),
                c.compose2(a.at(f.on_obj(gy)), eta_l.at(gy)),
            );
            m == c.identity(gy)
        })
    };
    let alpha_c1 = |a: &NatTrans| {
        c.object_indices().all(|x| {
            let m = c.compose2(
                eps_r.at(x),
                c.compose2(
                    a.at(f.on_obj(x)),
                    c.compose2(eta_l.at(x), eps_r.at(x)),
                ),
            );
            m == eps_r.at(x)
        })
    };
    let beta_d1 = |b: &NatTrans| {
        c.object_indices().all(|x| {
            let inner = c.compose2(eps_r.at(x), c.compose2(g.on_mor(b.at(x)), eta_l.at(x)));
            c.compose2(eta_l.at(x), inner) == eta_l.at(x)
        })
    };
    let beta_d2 = |b: &NatTrans| {
        c.object_indices().all(|x| {
            let m = d.compose2(
                f.on_mor(eps_r.at(x)),
                d.compose2(f.on_mor(g.on_mor(b.at(x))), f.on_mor(eta_l.at(x))),
            );
            m == d.identity(f.on_obj(x))
        })
    };
    let beta_d3 = |b: &NatTrans| {
        d.object_indices().all(|y| {
            let gy = g.on_obj(y);
            let m = c.compose2(
                eps_r.at(gy),
                c.compose2(g.on_mor(b.at(gy)), eta_l.at(gy)),
            );
            m == c.identity(gy)
        })
    };
    let beta_c1 = |b: &NatTrans| {
        c.object_indices().all(|x| {
            let m = c.compose2(
                eps_r.at(x),
                c.compose2(
                    g.on_mor(b.at(x)),
                    c.compose2(eta_l.at(x), eps_r.at(x)),
                ),
            );
            m == eps_r.at(x)
        })
    };

    let alphas = all_nat_trans(g, g);
    let betas = all_nat_trans(f, f);
    let mut per_candidate = true;
    for a in &alphas {
        let (d1, d2, d3) = (alpha_d1(a), alpha_d2(a), alpha_d3(a));
        if !(d1 == d2 && d2 == d3) {
            per_candidate = false;
        }
    }
    for b in &betas {
        let (d1, d2, d3) = (beta_d1(b), beta_d2(b), beta_d3(b));
        if !(d1 == d2 && d2 == d3) {
            per_candidate = false;
        }
    }
    let fam_alpha_unit = alphas.iter().any(|a| alpha_d1(a));
    let fam_beta_unit = betas.iter().any(|b| beta_d1(b));
    let fam_alpha_counit = alphas.iter().any(|a| alpha_c1(a));
    let fam_beta_counit = betas.iter().any(|b| beta_c1(b));
    let f_ssep = decide_retraction(f, RetractionMode::Semiseparable, bound)?.holds;
    let agree = [fam_alpha_unit, fam_beta_unit, fam_alpha_counit, fam_beta_counit]
        .iter()
        .all(|&x| x == f_ssep);
    Ok(FrobProfile {
        family_alpha_unit: fam_alpha_unit,
        family_beta_unit: fam_beta_unit,
        family_alpha_counit: fam_alpha_counit,
        family_beta_counit: fam_beta_counit,
        per_candidate_equivalences_hold: per_candidate,
        frobenius_functor_semiseparable: f_ssep,
        families_agree_with_semiseparability: agree,
    })
}

/// Classification of a functor g with a left adjoint (adj_l: f ⊣ g) and a
/// right adjoint (adj_r: g ⊣ f'): Frobenius, (co)reflection, coherence,
/// bireflection, the Frobenius semiseparability profile, and consistency with
/// the classification theorem for semiseparable (co)reflections.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FrobeniusReport {
    pub frobenius_strict: bool,
    pub frobenius_up_to_iso: bool,
    pub coreflection: bool,
    pub reflection: bool,
    pub coherence: Option<bool>,
    pub bireflection: bool,
    pub g_semiseparable: bool,
    pub g_naturally_full: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frob_profile: Option<FrobProfile>,
    pub theorem_consistent: bool,
}

pub fn frobenius_bireflection(
    adj_l: &Adjunction,
    adj_r: &Adjunction,
    bound: usize,
) -> Result<FrobeniusReport> {
    for (name, adj) in [("left", adj_l), ("right", adj_r)] {
        let v = adj.validate();
        if !v.is_empty() {
            return Err(Error::invalid(
                v.into_iter()
                    .map(|mut x| {
                        x.law = format!("{name} adjunction: {}", x.law);
                        x
                    })
                    .collect(),
            ));
        }
    }
    let g = &adj_l.right;
    if !g.same_tables(&adj_r.left) {
        return Err(Error::not_applicable(
            "the two adjunctions must share the middle functor g",
        ));
    }
    let f = &adj_l.left;
    let f_prime = &adj_r.right;
    let frobenius_strict = f.same_tables(f_prime);
    let frobenius_up_to_iso =
        frobenius_strict || all_nat_trans(f, f_prime).iter().any(|nt| nt.is_iso());
    let coreflection = adj_l.unit.is_iso();
    let reflection = adj_r.counit.is_iso();
    let d = g.source.clone();
    let coherence = if frobenius_strict {
        // γ∘ε = Id_{FG} with ε the counit of f ⊣ g and γ the unit of g ⊣ f.
        Some(d.object_indices().all(|y| {
            d.compose2(adj_r.unit.at(y), adj_l.counit.at(y)) == d.identity(f.on_obj(g.on_obj(y)))
        }))
    } else {
        None
    };
    let f_ff = functor_property(f, FunctorProperty::FullyFaithful)?.holds;
    let bireflection = frobenius_strict && f_ff && coherence == Some(true);
    let g_semiseparable = decide_retraction(g, RetractionMode::Semiseparable, bound)?.holds;
    let g_naturally_full = decide_retraction(g, RetractionMode::NaturallyFull, bound)?.holds;
    let frob_profile = if frobenius_strict {
        Some(frob_ssep_profile(
            &FrobeniusPackage {
                f: g,
                g: f,
                adj_fg: adj_r,
                adj_gf: adj_l,
            },
            bound,
        )?)
    } else {
        None
    };
    // classification of semiseparable (co)reflections: on a (co)reflection,
    // semiseparable <=> naturally full <=> bireflection <=> Frobenius.
    let theorem_consistent = if coreflection || reflection {
        let all = [
            g_semiseparable,
            g_naturally_full,
            bireflection,
            frobenius_up_to_iso,
        ];
        all.iter().all(|&x| x == all[0])
    } else {
        true
    };
    Ok(FrobeniusReport {
        frobenius_strict,
        frobenius_up_to_iso,
        coreflection,
        reflection,
        coherence,
        bireflection,
        g_semiseparable,
        g_naturally_full,
        frob_profile,
        theorem_consistent,
    })
}

/// σ-splitting for a triple with fully faithful middle functor: the canonical
/// σ = Fε^r ∘ (ε^l H)^{-1}: H -> F is split-mono iff invertible iff H is
/// semiseparable; all three are computed and must agree.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SigmaReport {
    pub split_mono: bool,
    pub invertible: bool,
    pub h_semiseparable: bool,
    pub equivalence_holds: bool,
}

pub fn sigma_split(triple: &AdjointTriple, bound: usize) -> Result<(NatTrans, SigmaReport)> {
    let v = triple.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let g = triple.g();
    if !functor_property(g, FunctorProperty::FullyFaithful)?.holds {
        return Err(Error::not_applicable(
            "σ-splitting requires the middle functor to be fully faithful",
        ));
    }
    let f = triple.f();
    let h = triple.h();
    let c = f.source.clone();
    let d = f.target.clone();
    let eps_l = &triple.left.counit; // FG -> Id_D
    let eps_r = &triple.right.counit; // GH -> Id_C
    // invert ε^l at each HX
    let comps: Vec<usize> = c
        .object_indices()
        .map(|x| {
            let hx = h.on_obj(x);
            let e = eps_l.at(hx); // FG(HX) -> HX
            let inv = d
                .hom(d.tgt(e), d.src(e))
                .iter()
                .copied()
                .find(|&m| {
                    d.compose2(m, e) == d.identity(d.src(e))
                        && d.compose2(e, m) == d.identity(d.tgt(e))
                })
                .ok_or_else(|| {
                    Error::not_applicable(format!(
                        "ε^l is not invertible at {}",
                        c.object_id(x)
                    ))
                })?;
            Ok(d.compose2(f.on_mor(eps_r.at(x)), inv))
        })
        .collect::<Result<_>>()?;
    let sigma = NatTrans::new("σ", h.clone(), f.clone(), comps)?.validated()?;
    // split-mono: natural τ: F -> H with τ∘σ = Id_H
    let dd = d.clone();
    let sc = sigma.clone();
    let hh = h.clone();
    let tau = find_nat_trans(f, h, &|x, t| {
        dd.compose2(t, sc.at(x)) == dd.identity(hh.on_obj(x))
    });
    let split_mono = tau.is_some();
    let invertible = sigma.is_iso();
    let h_ssep = decide_retraction(h, RetractionMode::Semiseparable, bound)?.holds;
    let equivalence = split_mono == invertible && invertible == h_ssep;
    Ok((
        sigma,
        SigmaReport {
            split_mono,
            invertible,
            h_semiseparable: h_ssep,
            equivalence_holds: equivalence,
        },
    ))
}

/// Idempotent-adjunction corollary instance: on an idempotent adjunction each
/// adjoint is semiseparable iff naturally full.
#[derive(Debug, Clone, serde::Serialize)]
pub struct IdempotentCorollaryReport {
    pub idempotent: bool,
    pub left_semiseparable: bool,
    pub left_naturally_full: bool,
    pub right_semiseparable: bool,
    pub right_naturally_full: bool,
    pub corollary_holds: bool,
}

pub fn idempotent_corollary(adj: &Adjunction, bound: usize) -> Result<IdempotentCorollaryReport> {
    let idem = idempotent_adjunction_check(adj)?.idempotent;
    let l_ss = decide_retraction(&adj.left, RetractionMode::Semiseparable, bound)?.holds;
    let l_nf = decide_retraction(&adj.left, RetractionMode::NaturallyFull, bound)?.holds;
    let r_ss = decide_retraction(&adj.right, RetractionMode::Semiseparable, bound)?.holds;
    let r_nf = decide_retraction(&adj.right, RetractionMode::NaturallyFull, bound)?.holds;
    let corollary = !idem || (l_ss == l_nf && r_ss == r_nf);
    Ok(IdempotentCorollaryReport {
        idempotent: idem,
        left_semiseparable: l_ss,
        left_naturally_full: l_nf,
        right_semiseparable: r_ss,
        right_naturally_full: r_nf,
        corollary_holds: corollary,
    })
}

/// Associated idempotent via the Rafael witness: e = ν∘η (unit side) or
/// e = ε∘γ (counit side); must match the idempotent from the retraction family.
pub fn rafael_idempotent(adj: &Adjunction, side: AdjointSide, bound: usize) -> Result<Option<(IdempotentNat, bool)>> {
    let report = rafael_regularity(adj, side, bound)?;
    let Some(w) = report.witness else {
        return Ok(None);
    };
    let (cat, functor, comps): (Arc<FinCategory>, &FinFunctor, Vec<usize>) = match side {
        AdjointSide::Left => {
            let c = adj.source().clone();
            let comps = c
                .object_indices()
                .map(|x| c.compose2(w.at(x), adj.unit.at(x)))
                .collect();
            (c, &adj.left, comps)
        }
        AdjointSide::Right => {
            let d = adj.target().clone();
            let comps = d
                .object_indices()
                .map(|y| d.compose2(adj.counit.at(y), w.at(y)))
                .collect();
            (d, &adj.right, comps)
        }
    };
    let e_from_rafael = IdempotentNat::new(cat, comps)?;
    let direct = decide_retraction(functor, RetractionMode::Semiseparable, bound)?;
    let p = direct.witness.ok_or_else(|| {
        Error::invalid(vec![Violation::new(
            "Rafael witness exists but the direct decider found none",
            &[],
        )])
    })?;
    let e_direct = associated_idempotent(functor, &p)?;
    Ok(Some((
        e_from_rafael.clone(),
        e_from_rafael == e_direct,
    )))
}

use crate::fincat::functor_property;

/// Fully-faithfulness of an adjoint in terms of comparison data: G is fully
/// faithful iff U is fully faithful and K is fully faithful.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FullyFaithfulMonadReport {
    pub right_adjoint_fully_faithful: bool,
    pub forgetful_fully_faithful: bool,
    pub comparison_fully_faithful: bool,
    pub equivalence_holds: bool,
}

pub fn ff_monad_report(adj: &Adjunction, bound: usize) -> Result<FullyFaithfulMonadReport> {
    let monad = adj.monad()?.validated()?;
    let em = build_em(&monad, bound)?;
    let k = comparison_functor(adj, &em)?;
    let g_ff = functor_property(&adj.right, FunctorProperty::FullyFaithful)?.holds;
    let u_ff = functor_property(&em.forgetful, FunctorProperty::FullyFaithful)?.holds;
    let k_ff = functor_property(&k, FunctorProperty::FullyFaithful)?.holds;
    Ok(FullyFaithfulMonadReport {
        right_adjoint_fully_faithful: g_ff,
        forgetful_fully_faithful: u_ff,
        comparison_fully_faithful: k_ff,
        equivalence_holds: g_ff == (u_ff && k_ff),
    })
}
