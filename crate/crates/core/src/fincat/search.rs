//! Search for binatural hom-retraction families. This is the decider behind
//! semiseparability, separability, natural fullness and relative separability
//! of functors between finite categories.
//!
//! A family P assigns to every pair (X, Y) of source objects a map
//! P_{X,Y}: Hom_D(FX, FY) -> Hom_E(HX, HY), binatural in both slots:
//! P(Fl ∘ k ∘ Fh) = Hl ∘ P(k) ∘ Hh. For plain retractions H is the identity
//! functor. The search backtracks over table cells in lexicographic order with
//! naturality propagation; choosing P on one cell constrains all composites.

use super::functor::{FinFunctor, IdempotentNat, NatTrans};
use super::props::nat_endo_monoid;
use crate::error::{Error, Result, Violation};

/// Default cap on morphisms per category in any exhaustive search.
pub const DEFAULT_SEARCH_BOUND: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RetractionMode {
    Semiseparable,
    Separable,
    NaturallyFull,
}

impl std::fmt::Display for RetractionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RetractionMode::Semiseparable => "semiseparable",
            RetractionMode::Separable => "separable",
            RetractionMode::NaturallyFull => "naturally_full",
        };
        write!(f, "{s}")
    }
}

/// A binatural family P: Hom_D(F-, F-) -> Hom_E(H-, H-), tabulated per source
/// object pair. `h` is the identity functor for ordinary hom-retractions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomRetraction {
    pub f: FinFunctor,
    pub h: FinFunctor,
    /// table[x][y][pos]: image in E of the pos-th morphism of Hom_D(Fx, Fy).
    pub table: Vec<Vec<Vec<usize>>>,
}

impl HomRetraction {
    /// Image of k: FX -> FY under P_{X,Y}; k must lie in Hom_D(FX, FY).
    pub fn apply(&self, x: usize, y: usize, k: usize) -> usize {
        let d = &self.f.target;
        debug_assert_eq!(d.src(k), self.f.on_obj(x));
        debug_assert_eq!(d.tgt(k), self.f.on_obj(y));
        self.table[x][y][d.hom_position(k)]
    }

    /// The identity family P(k) = k for F = H = Id.
    pub fn identity_family(f: &FinFunctor) -> HomRetraction {
        let c = &f.source;
        let table = c
            .object_indices()
            .map(|x| {
                c.object_indices()
                    .map(|y| {
                        f.target
                            .hom(f.on_obj(x), f.on_obj(y))
                            .iter()
                            .copied()
                            .collect()
                    })
                    .collect()
            })
            .collect();
        HomRetraction {
            f: f.clone(),
            h: f.clone(),
            table,
        }
    }

    /// Exhaustive binaturality check: P(Fl ∘ k ∘ Fh) = Hl ∘ P(k) ∘ Hh for all
    /// h: X' -> X, l: Y -> Y', k: FX -> FY. Vacuously true over empty hom-sets.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let c = &self.f.source;
        let d = &self.f.target;
        let e = &self.h.target;
        for x in c.object_indices() {
            for y in c.object_indices() {
                let homd = d.hom(self.f.on_obj(x), self.f.on_obj(y));
                if self.table[x][y].len() != homd.len() {
                    out.push(Violation::new(
                        "retraction table shape",
                        &[c.object_id(x), c.object_id(y)],
                    ));
                    continue;
                }
                for (pos, &k) in homd.iter().enumerate() {
                    let v = self.table[x][y][pos];
                    if e.src(v) != self.h.on_obj(x) || e.tgt(v) != self.h.on_obj(y) {
                        out.push(Violation::new(
                            "retraction value endpoints",
                            &[c.object_id(x), c.object_id(y), d.mor_id(k)],
                        ));
                        continue;
                    }
                    for hm in c.morphism_indices().filter(|&m| c.tgt(m) == x) {
                        for lm in c.morphism_indices().filter(|&m| c.src(m) == y) {
                            let k2 = d.compose2(
                                self.f.on_mor(lm),
                                d.compose2(k, self.f.on_mor(hm)),
                            );
                            let lhs = self.apply(c.src(hm), c.tgt(lm), k2);
                            let rhs = e.compose2(
                                self.h.on_mor(lm),
                                e.compose2(v, self.h.on_mor(hm)),
                            );
                            if lhs != rhs {
                                out.push(Violation::new(
                                    "binaturality",
                                    &[d.mor_id(k), c.mor_id(hm), c.mor_id(lm)],
                                ));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Mode postcondition for a plain retraction (H = Id).
    pub fn satisfies_mode(&self, mode: RetractionMode) -> bool {
        let c = &self.f.source;
        let d = &self.f.target;
        match mode {
            RetractionMode::Semiseparable => c.morphism_indices().all(|m| {
                let p = self.apply(c.src(m), c.tgt(m), self.f.on_mor(m));
                self.f.on_mor(p) == self.f.on_mor(m)
            }),
            RetractionMode::Separable => c
                .morphism_indices()
                .all(|m| self.apply(c.src(m), c.tgt(m), self.f.on_mor(m)) == m),
            RetractionMode::NaturallyFull => c.object_indices().all(|x| {
                c.object_indices().all(|y| {
                    d.hom(self.f.on_obj(x), self.f.on_obj(y))
                        .iter()
                        .all(|&k| self.f.on_mor(self.apply(x, y, k)) == k)
                })
            }),
        }
    }

    /// Relative-separability postcondition: P(Ff) = Hf for every f.
    pub fn satisfies_relative(&self) -> bool {
        let c = &self.f.source;
        c.morphism_indices()
            .all(|m| self.apply(c.src(m), c.tgt(m), self.f.on_mor(m)) == self.h.on_mor(m))
    }
}

/// What constrains each table cell during the search.
enum CellConstraint {
    /// Plain retraction with the given mode.
    Mode(RetractionMode),
    /// Relative separability: P(Ff) = Hf forced on image cells.
    Relative,
}

struct Engine<'a> {
    f: &'a FinFunctor,
    h: &'a FinFunctor,
    /// (x, y, pos) per cell, lexicographic.
    cells: Vec<(usize, usize, usize)>,
    /// cell lookup: offsets[x][y] + pos.
    offsets: Vec<Vec<usize>>,
    /// ordered candidate list per cell (id-first, then declaration order).
    candidates: Vec<Vec<usize>>,
    assignment: Vec<Option<usize>>,
}

impl<'a> Engine<'a> {
    fn new(f: &'a FinFunctor, h: &'a FinFunctor, constraint: &CellConstraint) -> Result<Option<Engine<'a>>> {
        let c = &f.source;
        let d = &f.target;
        let e = &h.target;
        let mut cells = Vec::new();
        let mut offsets = vec![vec![usize::MAX; c.object_count()]; c.object_count()];
        for x in c.object_indices() {
            for y in c.object_indices() {
                offsets[x][y] = cells.len();
                let homd = d.hom(f.on_obj(x), f.on_obj(y));
                for pos in 0..homd.len() {
                    cells.push((x, y, pos));
                }
            }
        }
        let mut candidates = Vec::with_capacity(cells.len());
        for &(x, y, pos) in &cells {
            let k = d.hom(f.on_obj(x), f.on_obj(y))[pos];
            let domain: Vec<usize> = e.hom(h.on_obj(x), h.on_obj(y)).to_vec();
            // Preimages of k under F restricted to Hom_C(x, y).
            let preimages: Vec<usize> = c
                .hom(x, y)
                .iter()
                .copied()
                .filter(|&m| f.on_mor(m) == k)
                .collect();
            let mut cands: Vec<usize> = match constraint {
                CellConstraint::Mode(RetractionMode::Semiseparable) => {
                    if preimages.is_empty() {
                        domain
                    } else {
                        // P(Ff) must be sent back onto Ff by F.
                        domain.into_iter().filter(|&m| f.on_mor(m) == k).collect()
                    }
                }
                CellConstraint::Mode(RetractionMode::Separable) => {
                    if preimages.is_empty() {
                        domain
                    } else if preimages.len() > 1 {
                        // P would have to equal two distinct morphisms.
                        return Ok(None);
                    } else {
                        vec![preimages[0]]
                    }
                }
                CellConstraint::Mode(RetractionMode::NaturallyFull) => {
                    domain.into_iter().filter(|&m| f.on_mor(m) == k).collect()
                }
                CellConstraint::Relative => {
                    if preimages.is_empty() {
                        domain
                    } else {
                        let targets: Vec<usize> =
                            preimages.iter().map(|&m| h.on_mor(m)).collect();
                        if targets.windows(2).any(|w| w[0] != w[1]) {
                            return Ok(None);
                        }
                        vec![targets[0]]
                    }
                }
            };
            if cands.is_empty() {
                return Ok(None);
            }
            // id-first candidate order, then declaration order.
            let id_e = if h.on_obj(x) == h.on_obj(y) {
                Some(e.identity(h.on_obj(x)))
            } else {
                None
            };
            cands.sort_by_key(|&m| (Some(m) != id_e, m));
            candidates.push(cands);
        }
        let n = cells.len();
        Ok(Some(Engine {
            f,
            h,
            cells,
            offsets,
            candidates,
            assignment: vec![None; n],
        }))
    }

    fn cell_of(&self, x: usize, y: usize, k: usize) -> usize {
        let d = &self.f.target;
        self.offsets[x][y] + d.hom_position(k)
    }

    /// Assign and propagate binaturality closure; returns the trail of cells
    /// assigned in this step, or None on conflict (nothing left assigned).
    fn propagate(&mut self, cell: usize, value: usize) -> Option<Vec<usize>> {
        let mut trail = Vec::new();
        if !self.try_assign(cell, value, &mut trail) {
            self.undo(&trail);
            return None;
        }
        let mut queue = vec![cell];
        while let Some(cur) = queue.pop() {
            let (x, y, pos) = self.cells[cur];
            let c = &self.f.source;
            let d = &self.f.target;
            let e = &self.h.target;
            let k = d.hom(self.f.on_obj(x), self.f.on_obj(y))[pos];
            let v = self.assignment[cur].unwrap();
            for hm in c.morphism_indices().filter(|&m| c.tgt(m) == x) {
                for lm in c.morphism_indices().filter(|&m| c.src(m) == y) {
                    let k2 = d.compose2(self.f.on_mor(lm), d.compose2(k, self.f.on_mor(hm)));
                    let v2 = e.compose2(self.h.on_mor(lm), e.compose2(v, self.h.on_mor(hm)));
                    let cell2 = self.cell_of(c.src(hm), c.tgt(lm), k2);
                    match self.assignment[cell2] {
                        Some(w) => {
                            if w != v2 {
                                self.undo(&trail);
                                return None;
                            }
                        }
                        None => {
                            if !self.try_assign(cell2, v2, &mut trail) {
                                self.undo(&trail);
                                return None;
                            }
                            queue.push(cell2);
                        }
                    }
                }
            }
        }
        Some(trail)
    }

    fn try_assign(&mut self, cell: usize, value: usize, trail: &mut Vec<usize>) -> bool {
        if !self.candidates[cell].contains(&value) {
            return false;
        }
        self.assignment[cell] = Some(value);
        trail.push(cell);
        true
    }

    fn undo(&mut self, trail: &[usize]) {
        for &c in trail {
            self.assignment[c] = None;
        }
    }

    fn search(&mut self) -> bool {
        let Some(cell) = (0..self.cells.len()).find(|&i| self.assignment[i].is_none()) else {
            return true;
        };
        let cands = self.candidates[cell].clone();
        for value in cands {
            if let Some(trail) = self.propagate(cell, value) {
                if self.search() {
                    return true;
                }
                self.undo(&trail);
            }
        }
        false
    }

    fn into_family(self) -> HomRetraction {
        let c = &self.f.source;
        let d = &self.f.target;
        let mut table = vec![vec![Vec::new(); c.object_count()]; c.object_count()];
        for (i, &(x, y, _)) in self.cells.iter().enumerate() {
            table[x][y].push(self.assignment[i].expect("search complete"));
        }
        let _ = d;
        HomRetraction {
            f: self.f.clone(),
            h: self.h.clone(),
            table,
        }
    }
}

fn check_bound(f: &FinFunctor, h: &FinFunctor, bound: usize) -> Result<()> {
    for (role, cat) in [
        ("source", &f.source),
        ("target", &f.target),
        ("relative target", &h.target),
    ] {
        if cat.morphism_count() > bound {
            return Err(Error::SearchBound(format!(
                "{role} category {} has {} morphisms, bound is {bound}",
                cat.name,
                cat.morphism_count()
            )));
        }
    }
    Ok(())
}

fn validate_functor(f: &FinFunctor) -> Result<()> {
    let mut v = f.source.validate();
    v.extend(f.target.validate());
    v.extend(f.validate());
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::invalid(v))
    }
}

#[derive(Debug, Clone)]
pub struct RetractionVerdict {
    pub mode: RetractionMode,
    pub holds: bool,
    pub witness: Option<HomRetraction>,
    pub note: Option<String>,
}

/// Decide semiseparability / separability / natural fullness of a functor by
/// backtracking over all binatural families. The returned witness is
/// deterministic (cells in lexicographic order, candidate images tried
/// identity-first) and is re-validated before being returned.
pub fn decide_retraction(
    f: &FinFunctor,
    mode: RetractionMode,
    bound: usize,
) -> Result<RetractionVerdict> {
    validate_functor(f)?;
    let h = FinFunctor::identity(f.source.clone());
    check_bound(f, &h, bound)?;
    let engine = Engine::new(f, &h, &CellConstraint::Mode(mode))?;
    let witness = match engine {
        None => None,
        Some(mut eng) => {
            if eng.search() {
                Some(eng.into_family())
            } else {
                None
            }
        }
    };
    match witness {
        Some(w) => {
            let violations = w.validate();
            if !violations.is_empty() || !w.satisfies_mode(mode) {
                return Err(Error::invalid(violations));
            }
            Ok(RetractionVerdict {
                mode,
                holds: true,
                witness: Some(w),
                note: None,
            })
        }
        None => Ok(RetractionVerdict {
            mode,
            holds: false,
            witness: None,
            note: merged_pair_note(f),
        }),
    }
}

/// Context for negative verdicts: the first parallel pair merged by F, if any.
fn merged_pair_note(f: &FinFunctor) -> Option<String> {
    let c = &f.source;
    for x in c.object_indices() {
        for y in c.object_indices() {
            let hom = c.hom(x, y);
            for (i, &a) in hom.iter().enumerate() {
                for &b in &hom[i + 1..] {
                    if f.on_mor(a) == f.on_mor(b) {
                        return Some(format!(
                            "counterexample pair ({}, {}): both map to {}",
                            c.mor_id(a),
                            c.mor_id(b),
                            f.target.mor_id(f.on_mor(a))
                        ));
                    }
                }
            }
        }
    }
    None
}

/// Reference oracle: enumerate every family P over the full candidate space,
/// filter by binaturality and the mode postcondition. Exponential; only for
/// categories with few morphisms (the acceptance suite runs it on pairs with
/// at most 12 morphisms in total).
pub fn blind_decide_retraction(
    f: &FinFunctor,
    mode: RetractionMode,
) -> Result<RetractionVerdict> {
    validate_functor(f)?;
    let c = &f.source;
    let d = &f.target;
    let h = FinFunctor::identity(f.source.clone());
    let mut cells = Vec::new();
    for x in c.object_indices() {
        for y in c.object_indices() {
            let homd = d.hom(f.on_obj(x), f.on_obj(y));
            for pos in 0..homd.len() {
                cells.push((x, y, pos, c.hom(x, y).to_vec()));
            }
        }
    }
    if cells.iter().any(|(_, _, _, dom)| dom.is_empty()) {
        return Ok(RetractionVerdict {
            mode,
            holds: false,
            witness: None,
            note: Some("a required table cell has empty codomain".into()),
        });
    }
    let mut choice = vec![0usize; cells.len()];
    loop {
        // materialize and test this assignment
        let mut table = vec![vec![Vec::new(); c.object_count()]; c.object_count()];
        for (i, (x, y, _pos, dom)) in cells.iter().enumerate() {
            table[*x][*y].push(dom[choice[i]]);
        }
        let fam = HomRetraction {
            f: f.clone(),
            h: h.clone(),
            table,
        };
        if fam.validate().is_empty() && fam.satisfies_mode(mode) {
            return Ok(RetractionVerdict {
                mode,
                holds: true,
                witness: Some(fam),
                note: None,
            });
        }
        // advance odometer
        let mut i = 0;
        loop {
            if i == cells.len() {
                return Ok(RetractionVerdict {
                    mode,
                    holds: false,
                    witness: None,
                    note: None,
                });
            }
            choice[i] += 1;
            if choice[i] < cells[i].3.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// H-separability: find binatural P with P(Ff) = Hf for all f.
pub fn relative_separable(
    f: &FinFunctor,
    h: &FinFunctor,
    bound: usize,
) -> Result<Option<HomRetraction>> {
    validate_functor(f)?;
    validate_functor(h)?;
    if f.source.as_ref() != h.source.as_ref() {
        return Err(Error::not_applicable(
            "relative separability requires functors sharing their source",
        ));
    }
    check_bound(f, h, bound)?;
    let engine = Engine::new(f, h, &CellConstraint::Relative)?;
    let witness = match engine {
        None => None,
        Some(mut eng) => {
            if eng.search() {
                Some(eng.into_family())
            } else {
                None
            }
        }
    };
    if let Some(w) = &witness {
        let violations = w.validate();
        if !violations.is_empty() || !w.satisfies_relative() {
            return Err(Error::invalid(violations));
        }
    }
    Ok(witness)
}

/// The unique idempotent natural transformation attached to a semiseparability
/// witness: e_X = P_{X,X}(Id_FX). Verifies idempotence, naturality, Fe = Id_F,
/// the universal property (Ff = Fg iff e∘f = e∘g), and instance uniqueness
/// against the full enumeration of natural endomorphisms of the identity.
pub fn associated_idempotent(f: &FinFunctor, p: &HomRetraction) -> Result<IdempotentNat> {
    let violations = p.validate();
    if !violations.is_empty() || !p.satisfies_mode(RetractionMode::Semiseparable) {
        return Err(Error::not_applicable(
            "the given family is not a semiseparability witness",
        ));
    }
    let c = &f.source;
    let d = &f.target;
    let components: Vec<usize> = c
        .object_indices()
        .map(|x| p.apply(x, x, d.identity(f.on_obj(x))))
        .collect();
    let e = IdempotentNat::new(f.source.clone(), components)?;
    // Fe = Id_F
    for x in c.object_indices() {
        if f.on_mor(e.at(x)) != d.identity(f.on_obj(x)) {
            return Err(Error::invalid(vec![Violation::new(
                "Fe = Id_F",
                &[c.object_id(x)],
            )]));
        }
    }
    // universal property, exhaustively
    for x in c.object_indices() {
        for y in c.object_indices() {
            let hom = c.hom(x, y);
            for &a in hom {
                for &b in hom {
                    let merged = f.on_mor(a) == f.on_mor(b);
                    let glued = c.compose2(e.at(y), a) == c.compose2(e.at(y), b);
                    if merged != glued {
                        return Err(Error::invalid(vec![Violation::new(
                            "universal property of the associated idempotent",
                            &[c.mor_id(a), c.mor_id(b)],
                        )]));
                    }
                }
            }
        }
    }
    // instance uniqueness: any qualifying idempotent natural endomorphism equals e
    for cand in nat_endo_monoid(c) {
        let idem = cand
            .iter()
            .enumerate()
            .all(|(x, &m)| c.compose2(m, m) == m && c.src(m) == x && c.tgt(m) == x);
        if !idem {
            continue;
        }
        let fe_id = cand
            .iter()
            .enumerate()
            .all(|(x, &m)| f.on_mor(m) == d.identity(f.on_obj(x)));
        if !fe_id {
            continue;
        }
        let universal = c.object_indices().all(|x| {
            c.object_indices().all(|y| {
                let hom = c.hom(x, y);
                hom.iter().all(|&a| {
                    hom.iter().all(|&b| {
                        (f.on_mor(a) == f.on_mor(b))
                            == (c.compose2(cand[y], a) == c.compose2(cand[y], b))
                    })
                })
            })
        });
        if universal && cand != e.components {
            return Err(Error::invalid(vec![Violation::new(
                "associated idempotent uniqueness",
                &[],
            )]));
        }
    }
    Ok(e)
}

/// Outcome of transferring semiseparability along a retract of functors.
#[derive(Debug, Clone)]
pub enum TransferOutcome {
    /// F certified semiseparable, with the constructed witness.
    Transferred(HomRetraction),
    /// The hypothesis Fe = Id_F fails; nothing can be concluded.
    NotApplicable(String),
}

/// Transfer of semiseparability to a retract: given natural transformations
/// φ: F -> H and ψ: H -> F with φ∘ψ = Id_H and H semiseparable with associated
/// idempotent e, if Fe = Id_F then F is semiseparable with witness
/// P^F(k) = P^H(φ ∘ k ∘ ψ).
pub fn retract_transfer(
    h_fun: &FinFunctor,
    f_fun: &FinFunctor,
    phi: &NatTrans,
    psi: &NatTrans,
    bound: usize,
) -> Result<TransferOutcome> {
    validate_functor(f_fun)?;
    validate_functor(h_fun)?;
    for (name, nt) in [("phi", phi), ("psi", psi)] {
        let v = nt.validate();
        if !v.is_empty() {
            return Err(Error::invalid(
                v.into_iter()
                    .map(|mut x| {
                        x.law = format!("{name} {}", x.law);
                        x
                    })
                    .collect(),
            ));
        }
    }
    if !phi.from.same_tables(f_fun)
        || !phi.to.same_tables(h_fun)
        || !psi.from.same_tables(h_fun)
        || !psi.to.same_tables(f_fun)
    {
        return Err(Error::not_applicable(
            "retract data must go φ: F -> H, ψ: H -> F",
        ));
    }
    let d = &f_fun.target;
    let c = &f_fun.source;
    // φ∘ψ = Id_H
    for x in c.object_indices() {
        if d.compose2(phi.at(x), psi.at(x)) != d.identity(h_fun.on_obj(x)) {
            return Err(Error::not_applicable(format!(
                "φ∘ψ is not the identity at {}",
                c.object_id(x)
            )));
        }
    }
    let hv = decide_retraction(h_fun, RetractionMode::Semiseparable, bound)?;
    let Some(ph) = hv.witness else {
        return Err(Error::not_applicable(
            "H is not semiseparable; the transfer hypothesis fails",
        ));
    };
    let e = associated_idempotent(h_fun, &ph)?;
    for x in c.object_indices() {
        if f_fun.on_mor(e.at(x)) != d.identity(f_fun.on_obj(x)) {
            return Ok(TransferOutcome::NotApplicable(format!(
                "Fe is not the identity at {}",
                c.object_id(x)
            )));
        }
    }
    // P^F(k: FX -> FY) = P^H(φ_Y ∘ k ∘ ψ_X)
    let mut table = vec![vec![Vec::new(); c.object_count()]; c.object_count()];
    for x in c.object_indices() {
        for y in c.object_indices() {
            for &k in d.hom(f_fun.on_obj(x), f_fun.on_obj(y)) {
                let conj = d.compose2(phi.at(y), d.compose2(k, psi.at(x)));
                table[x][y].push(ph.apply(x, y, conj));
            }
        }
    }
    let pf = HomRetraction {
        f: f_fun.clone(),
        h: FinFunctor::identity(c.clone()),
        table,
    };
    let violations = pf.validate();
    if !violations.is_empty() || !pf.satisfies_mode(RetractionMode::Semiseparable) {
        return Err(Error::invalid(violations));
    }
    Ok(TransferOutcome::Transferred(pf))
}

/// Witness composition from the composition lemma: if P_F certifies F
/// (naturally full or semiseparable) and P_G certifies G, then
/// P(k) = P_F(P_G(k)) is a binatural family for G∘F. The caller decides which
/// mode to validate on the composite.
pub fn compose_retractions(
    pf: &HomRetraction,
    pg: &HomRetraction,
    gf: &FinFunctor,
) -> Result<HomRetraction> {
    let c = &pf.f.source;
    let e = &pg.f.target;
    // P_G is indexed by D-objects; evaluate it at (Fx, Fy).
    let mut table = vec![vec![Vec::new(); c.object_count()]; c.object_count()];
    for x in c.object_indices() {
        for y in c.object_indices() {
            let fx = pf.f.on_obj(x);
            let fy = pf.f.on_obj(y);
            for &k in e.hom(gf.on_obj(x), gf.on_obj(y)) {
                let mid = pg.apply(fx, fy, k);
                table[x][y].push(pf.apply(x, y, mid));
            }
        }
    }
    let fam = HomRetraction {
        f: gf.clone(),
        h: FinFunctor::identity(c.clone()),
        table,
    };
    let violations = fam.validate();
    if !violations.is_empty() {
        return Err(Error::invalid(violations));
    }
    Ok(fam)
}
