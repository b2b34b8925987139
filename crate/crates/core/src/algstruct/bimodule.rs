//! Bimodules with exact action matrices, balanced tensor products, bimodule
//! map spaces, invariants, duals and the trace-ideal / dual-basis machinery.

use super::algebra::FDAlgebra;
use crate::error::{Error, Result, Violation};
use crate::linalg::{
    canonical_span, coordinates_in_basis, kernel_basis, Matrix, Quotient, SystemBuilder, Vector,
};
use crate::scalar::{Field, Scalar};

/// An (R, S)-bimodule: left action matrices per R-basis element, right action
/// matrices per S-basis element, with all laws validated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub name: String,
    pub left_algebra: FDAlgebra,
    pub right_algebra: FDAlgebra,
    pub dim: usize,
    /// left_action[i]: m -> b_i^R · m
    pub left_action: Vec<Matrix>,
    /// right_action[j]: m -> m · b_j^S
    pub right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        name: impl Into<String>,
        left_algebra: FDAlgebra,
        right_algebra: FDAlgebra,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Bimodule> {
        if left_action.len() != left_algebra.dim || right_action.len() != right_algebra.dim {
            return Err(Error::dimension("one action matrix per algebra basis element".to_string()));
        }
        for m in left_action.iter().chain(right_action.iter()) {
            if m.rows != dim || m.cols != dim {
                return Err(Error::dimension("action matrix shape".to_string()));
            }
        }
        Ok(Bimodule {
            name: name.into(),
            left_algebra,
            right_algebra,
            dim,
            left_action,
            right_action,
        })
    }

    pub fn field(&self) -> Field {
        self.left_algebra.field
    }

    /// Matrix of the left action of an element r in R.
    pub fn act_left(&self, r: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.field());
        for (i, c) in r.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.left_action[i].scale(c)).unwrap();
        }
        m
    }

    /// Matrix of the right action of an element s in S.
    pub fn act_right(&self, s: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.field());
        for (j, c) in s.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.right_action[j].scale(c)).unwrap();
        }
        m
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.left_algebra.validate());
        out.extend(self.right_algebra.validate());
        if self.left_algebra.field != self.right_algebra.field {
            out.push(Violation::new("field agreement", &[]));
        }
        if !out.is_empty() {
            return out;
        }
        let r = &self.left_algebra;
        let s = &self.right_algebra;
        if !self.act_left(&r.unit).is_identity() {
            out.push(Violation::new("left unit action", &[]));
        }
        if !self.act_right(&s.unit).is_identity() {
            out.push(Violation::new("right unit action", &[]));
        }
        for i in 0..r.dim {
            for j in 0..r.dim {
                // (b_i b_j)·m = b_i·(b_j·m)
                let lhs = self.act_left(r.basis_product(i, j));
                let rhs = self.left_action[i].compose(&self.left_action[j]).unwrap();
                if lhs != rhs {
                    out.push(Violation::new(
                        "left associativity",
                        &[&r.basis[i], &r.basis[j]],
                    ));
                }
            }
        }
        for i in 0..s.dim {
            for j in 0..s.dim {
                // m·(b_i b_j) = (m·b_i)·b_j
                let lhs = self.act_right(s.basis_product(i, j));
                let rhs = self.right_action[j].compose(&self.right_action[i]).unwrap();
                if lhs != rhs {
                    out.push(Violation::new(
                        "right associativity",
                        &[&s.basis[i], &s.basis[j]],
                    ));
                }
            }
        }
        for i in 0..r.dim {
            for j in 0..s.dim {
                let lhs = self.right_action[j].compose(&self.left_action[i]).unwrap();
                let rhs = self.left_action[i].compose(&self.right_action[j]).unwrap();
                if lhs != rhs {
                    out.push(Violation::new(
                        "actions commute",
                        &[&r.basis[i], &s.basis[j]],
                    ));
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<Bimodule> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}

/// A balanced tensor product M ⊗_R N with its defining quotient of the flat
/// field tensor; the projection and section expose the coordinates.
#[derive(Debug, Clone)]
pub struct BalancedTensor {
    pub bimodule: Bimodule,
    pub quotient: Quotient,
    pub left_dim: usize,
    pub right_dim: usize,
}

impl BalancedTensor {
    /// Flat index of e_i ⊗ e_j.
    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        i * self.right_dim + j
    }

    /// Project a flat tensor vector into quotient coordinates.
    pub fn project(&self, flat: &[Scalar]) -> Vector {
        self.quotient.project(flat).expect("shapes")
    }

    /// Lift quotient coordinates to the canonical flat representative.
    pub fn lift(&self, v: &[Scalar]) -> Vector {
        self.quotient.represent(v).expect("shapes")
    }
}

/// M ⊗_R N for M over (A, R) and N over (R, B): quotient of the field tensor
/// by the span of m r ⊗ n − m ⊗ r n, carrying the induced (A, B)-actions.
/// The result re-validates as a bimodule.
pub fn balanced_tensor(m: &Bimodule, n: &Bimodule) -> Result<BalancedTensor> {
    if m.right_algebra != n.left_algebra {
        return Err(Error::not_applicable(
            "balanced tensor requires matching middle algebras",
        ));
    }
    let field = m.field();
    let (dm, dn) = (m.dim, n.dim);
    let flat = dm * dn;
    let mut relations: Vec<Vector> = Vec::new();
    for rb in 0..m.right_algebra.dim {
        let d = m.right_action[rb]
            .kronecker(&Matrix::identity(dn, field))
            .sub(&Matrix::identity(dm, field).kronecker(&n.left_action[rb]))
            .unwrap();
        for col in 0..flat {
            relations.push(d.col(col));
        }
    }
    let quotient = Quotient::new(field, flat, &relations)?;
    let qdim = quotient.dim;
    let left_action = (0..m.left_algebra.dim)
        .map(|i| {
            quotient
                .projection
                .compose(&m.left_action[i].kronecker(&Matrix::identity(dn, field)))
                .unwrap()
                .compose(&quotient.section)
                .unwrap()
        })
        .collect();
    let right_action = (0..n.right_algebra.dim)
        .map(|j| {
            quotient
                .projection
                .compose(&Matrix::identity(dm, field).kronecker(&n.right_action[j]))
                .unwrap()
                .compose(&quotient.section)
                .unwrap()
        })
        .collect();
    let bimodule = Bimodule::new(
        format!("{}⊗{}", m.name, n.name),
        m.left_algebra.clone(),
        n.right_algebra.clone(),
        qdim,
        left_action,
        right_action,
    )?
    .validated()?;
    Ok(BalancedTensor {
        bimodule,
        quotient,
        left_dim: dm,
        right_dim: dn,
    })
}

/// Homogeneous constraint rows cutting out the (R, S)-bimodule maps M -> N
/// inside all matrices, with unknown Φ[a][j] at index a*m.dim + j.
pub fn bimodule_map_rows(m: &Bimodule, n: &Bimodule) -> Result<(usize, Vec<Vector>)> {
    if m.left_algebra != n.left_algebra || m.right_algebra != n.right_algebra {
        return Err(Error::not_applicable(
            "bimodule map space requires matching algebra pairs",
        ));
    }
    let field = m.field();
    let unknowns = n.dim * m.dim;
    let mut rows: Vec<Vector> = Vec::new();
    let mut push_commute = |action_m: &Matrix, action_n: &Matrix| {
        // Φ∘A = B∘Φ: for each (a, b): Σ_j A[j][b] Φ[a][j] − Σ_i B[a][i] Φ[i][b] = 0
        for a in 0..n.dim {
            for b in 0..m.dim {
                let mut row = vec![field.zero(); unknowns];
                for j in 0..m.dim {
                    row[a * m.dim + j] = row[a * m.dim + j].add(action_m.at(j, b));
                }
                for i in 0..n.dim {
                    row[i * m.dim + b] = row[i * m.dim + b].sub(action_n.at(a, i));
                }
                rows.push(row);
            }
        }
    };
    for i in 0..m.left_algebra.dim {
        push_commute(&m.left_action[i], &n.left_action[i]);
    }
    for j in 0..m.right_algebra.dim {
        push_commute(&m.right_action[j], &n.right_action[j]);
    }
    Ok((unknowns, rows))
}

/// Canonical basis of the space of (R, S)-bimodule maps M -> N, as matrices.
pub fn bimodule_map_space(m: &Bimodule, n: &Bimodule) -> Result<Vec<Matrix>> {
    let field = m.field();
    let (unknowns, rows) = bimodule_map_rows(m, n)?;
    let basis = if rows.is_empty() {
        Matrix::identity(unknowns, field).rows_vec()
    } else {
        let a = Matrix::from_rows(field, &rows)?;
        kernel_basis(&a)
    };
    Ok(basis
        .into_iter()
        .map(|v| Matrix::from_flat(n.dim, m.dim, field, v).unwrap())
        .collect())
}

/// The target of an algebra morphism as a (source, target)-bimodule:
/// r·m·s = φ(r) m s.
pub fn restriction_bimodule(phi: &super::algebra::AlgebraMorphism) -> Result<Bimodule> {
    let tgt = &phi.target;
    let left = (0..phi.source.dim)
        .map(|i| tgt.left_mult(&phi.apply(&phi.source.basis_vec(i))))
        .collect();
    let right = (0..tgt.dim).map(|j| tgt.right_mult_basis(j)).collect();
    Bimodule::new(
        format!("{}_as_(R,S)", phi.name),
        phi.source.clone(),
        tgt.clone(),
        tgt.dim,
        left,
        right,
    )?
    .validated()
}

/// The target of an algebra morphism as an (R, R)-bimodule with both actions
/// through the morphism.
pub fn through_both(phi: &super::algebra::AlgebraMorphism) -> Result<Bimodule> {
    let tgt = &phi.target;
    let left = (0..phi.source.dim)
        .map(|i| tgt.left_mult(&phi.apply(&phi.source.basis_vec(i))))
        .collect();
    let right = (0..phi.source.dim)
        .map(|i| tgt.right_mult(&phi.apply(&phi.source.basis_vec(i))))
        .collect();
    Bimodule::new(
        format!("{}_as_(R,R)", phi.name),
        phi.source.clone(),
        phi.source.clone(),
        tgt.dim,
        left,
        right,
    )?
    .validated()
}

/// The regular bimodule of an algebra over itself.
pub fn regular_bimodule(alg: &FDAlgebra) -> Result<Bimodule> {
    let left = (0..alg.dim).map(|i| alg.left_mult_basis(i)).collect();
    let right = (0..alg.dim).map(|i| alg.right_mult_basis(i)).collect();
    Bimodule::new(
        format!("reg_{}", alg.name),
        alg.clone(),
        alg.clone(),
        alg.dim,
        left,
        right,
    )?
    .validated()
}

/// Invariants of a square bimodule: m with r·m = m·r for every r. Computed as
/// the stacked kernel and cross-checked against the per-generator intersection.
pub fn invariants(m: &Bimodule) -> Result<Vec<Vector>> {
    if m.left_algebra != m.right_algebra {
        return Err(Error::not_applicable("invariants need a square bimodule"));
    }
    let field = m.field();
    let mut stacked: Option<Matrix> = None;
    let mut per_generator: Option<Vec<Vector>> = None;
    for i in 0..m.left_algebra.dim {
        let d = m.left_action[i].sub(&m.right_action[i]).unwrap();
        stacked = Some(match stacked {
            None => d.clone(),
            Some(s) => s.vstack(&d)?,
        });
        let k = canonical_span(field, &kernel_basis(&d))?;
        per_generator = Some(match per_generator {
            None => k,
            Some(prev) => crate::linalg::subspace_ops(
                field,
                &prev,
                &k,
                crate::linalg::SubspaceOp::Intersection,
            )?,
        });
    }
    let stacked_kernel = match stacked {
        None => Matrix::identity(m.dim, field).rows_vec(),
        Some(s) => kernel_basis(&s),
    };
    let canon_stacked = canonical_span(field, &stacked_kernel)?;
    let canon_inter = per_generator.unwrap_or_else(|| Matrix::identity(m.dim, field).rows_vec());
    if canon_stacked != canonical_span(field, &canon_inter)? {
        return Err(Error::invalid(vec![Violation::new(
            "invariants cross-check (stacked kernel vs intersection)",
            &[&m.name],
        )]));
    }
    Ok(stacked_kernel)
}

/// The right dual M* = Hom_S(M, S) of an (R, S)-bimodule, as an (S, R)-bimodule
/// with (s·f·r)(m) = s·f(r·m), together with the concrete maps M -> S.
#[derive(Debug, Clone)]
pub struct DualModule {
    pub bimodule: Bimodule,
    /// Basis of right-S-linear maps M -> S, as matrices (S.dim x M.dim).
    pub maps: Vec<Matrix>,
}

pub fn dual_module(m: &Bimodule) -> Result<DualModule> {
    let field = m.field();
    let s_alg = &m.right_algebra;
    let unknowns = s_alg.dim * m.dim;
    let mut rows: Vec<Vector> = Vec::new();
    // F∘ρ_s = R^S_s∘F for every S-basis element
    for sb in 0..s_alg.dim {
        let rho = &m.right_action[sb];
        let rmul = s_alg.right_mult_basis(sb);
        for a in 0..s_alg.dim {
            for b in 0..m.dim {
                let mut row = vec![field.zero(); unknowns];
                for j in 0..m.dim {
                    row[a * m.dim + j] = row[a * m.dim + j].add(rho.at(j, b));
                }
                for i in 0..s_alg.dim {
                    row[i * m.dim + b] = row[i * m.dim + b].sub(rmul.at(a, i));
                }
                rows.push(row);
            }
        }
    }
    let maps: Vec<Matrix> = if rows.is_empty() {
        Matrix::identity(unknowns, field)
            .rows_vec()
            .into_iter()
            .map(|v| Matrix::from_flat(s_alg.dim, m.dim, field, v).unwrap())
            .collect()
    } else {
        let a = Matrix::from_rows(field, &rows)?;
        kernel_basis(&a)
            .into_iter()
            .map(|v| Matrix::from_flat(s_alg.dim, m.dim, field, v).unwrap())
            .collect()
    };
    let ddim = maps.len();
    let flat_maps: Vec<Vector> = maps.iter().map(|f| f.flatten()).collect();
    // left S-action: (s·f)(m) = s f(m): L^S_s ∘ F; right R-action: (f·r)(m) = f(rm): F ∘ L^M_r
    let left_action = (0..s_alg.dim)
        .map(|sb| {
            let lmul = s_alg.left_mult_basis(sb);
            Matrix::from_fn(ddim, ddim, field, |row, col| {
                let image = lmul.compose(&maps[col]).unwrap().flatten();
                coordinates_in_basis(field, &flat_maps, &image)
                    .unwrap()
                    .expect("S-action preserves the dual space")[row]
                    .clone()
            })
        })
        .collect();
    let right_action = (0..m.left_algebra.dim)
        .map(|rb| {
            Matrix::from_fn(ddim, ddim, field, |row, col| {
                let image = maps[col].compose(&m.left_action[rb]).unwrap().flatten();
                coordinates_in_basis(field, &flat_maps, &image)
                    .unwrap()
                    .expect("R-action preserves the dual space")[row]
                    .clone()
            })
        })
        .collect();
    let bimodule = Bimodule::new(
        format!("{}^*", m.name),
        s_alg.clone(),
        m.left_algebra.clone(),
        ddim,
        left_action,
        right_action,
    )?
    .validated()?;
    Ok(DualModule { bimodule, maps })
}

/// Center of an algebra (canonical basis) plus verification of a candidate
/// central idempotent, including the regular-module correspondence: right
/// multiplication by z is a central idempotent endomorphism of the left
/// regular module, and z is recovered as its value at 1.
#[derive(Debug, Clone)]
pub struct CenterReport {
    pub center_basis: Vec<Vector>,
    pub candidate_is_central_idempotent: Option<bool>,
    pub regular_module_correspondence: Option<bool>,
}

pub fn center_and_idempotent(a: &FDAlgebra, z: Option<&[Scalar]>) -> Result<CenterReport> {
    let av = a.validate();
    if !av.is_empty() {
        return Err(Error::invalid(av));
    }
    let mut stacked: Option<Matrix> = None;
    for i in 0..a.dim {
        let d = a.left_mult_basis(i).sub(&a.right_mult_basis(i)).unwrap();
        stacked = Some(match stacked {
            None => d,
            Some(s) => s.vstack(&d)?,
        });
    }
    let center_basis = match stacked {
        None => Vec::new(),
        Some(s) => kernel_basis(&s),
    };
    let (mut cand, mut corr) = (None, None);
    if let Some(z) = z {
        let zz = a.mul_vec(z, z);
        let idempotent = zz == z.to_vec();
        let central = (0..a.dim).all(|i| {
            a.mul_vec(z, &a.basis_vec(i)) == a.mul_vec(&a.basis_vec(i), z)
        });
        cand = Some(idempotent && central);
        // g = right multiplication by z on the regular left module
        let g = a.right_mult(z);
        let left_linear = (0..a.dim).all(|i| {
            let l = a.left_mult_basis(i);
            g.compose(&l).unwrap() == l.compose(&g).unwrap()
        });
        let g_idem = g.compose(&g).unwrap() == g;
        let central_endo = (0..a.dim).all(|i| {
            let r = a.right_mult_basis(i);
            g.compose(&r).unwrap() == r.compose(&g).unwrap()
        });
        let recovers = g.apply(&a.unit).unwrap() == z.to_vec();
        corr = Some(left_linear && g_idem && central_endo && recovers && cand == Some(true));
    }
    Ok(CenterReport {
        center_basis,
        candidate_is_central_idempotent: cand,
        regular_module_correspondence: corr,
    })
}

/// Trace ideal, generator verdict, and the finitely-generated-projective
/// (dual basis) verdict with the dual basis when feasible.
#[derive(Debug, Clone)]
pub struct TraceFgpReport {
    pub dual: DualModule,
    pub trace_ideal_basis: Vec<Vector>,
    pub generator: bool,
    pub fgp: bool,
    /// Dual basis pairs (m_i, f_i) with Σ m_i f_i(m) = m, when fgp.
    pub dual_basis: Option<Vec<(Vector, Matrix)>>,
}

pub fn trace_ideal_and_fgp(m: &Bimodule) -> Result<TraceFgpReport> {
    let mv = m.validate();
    if !mv.is_empty() {
        return Err(Error::invalid(mv));
    }
    let field = m.field();
    let dual = dual_module(m)?;
    let s_alg = &m.right_algebra;
    // trace ideal: span of f_alpha(e_i)
    let mut gens: Vec<Vector> = Vec::new();
    for f in &dual.maps {
        for i in 0..m.dim {
            let mut e = vec![field.zero(); m.dim];
            e[i] = field.one();
            gens.push(f.apply(&e).unwrap());
        }
    }
    let trace_ideal_basis = canonical_span(field, &gens)?;
    let generator = trace_ideal_basis.len() == s_alg.dim;
    // dual basis system: u ∈ M⊗M*, Σ_a e_a · g_a(m) = m for all basis m,
    // with unknowns u[a][α] and g_a = Σ_α u[a][α] f_α.
    let n_maps = dual.maps.len();
    let unknowns = m.dim * n_maps;
    let mut sys = SystemBuilder::new(field, unknowns);
    for j in 0..m.dim {
        let ej = {
            let mut v = vec![field.zero(); m.dim];
            v[j] = field.one();
            v
        };
        // target e_j, coordinates in M
        for coord in 0..m.dim {
            let mut row = vec![field.zero(); unknowns];
            for a in 0..m.dim {
                for (alpha, f) in dual.maps.iter().enumerate() {
                    // e_a · f(e_j): right action of f(e_j) on e_a
                    let s_val = f.apply(&ej).unwrap();
                    let mut ea = vec![field.zero(); m.dim];
                    ea[a] = field.one();
                    let moved = m.act_right(&s_val).apply(&ea).unwrap();
                    row[a * n_maps + alpha] = row[a * n_maps + alpha].add(&moved[coord]);
                }
            }
            sys.equation(row, ej[coord].clone());
        }
    }
    let sol = sys.solve()?;
    let (fgp, dual_basis) = match &sol.particular {
        None => (false, None),
        Some(u) => {
            let mut pairs = Vec::new();
            for a in 0..m.dim {
                let mut g = Matrix::zero(s_alg.dim, m.dim, field);
                for (alpha, f) in dual.maps.iter().enumerate() {
                    let c = &u[a * n_maps + alpha];
                    if c.is_zero() {
                        continue;
                    }
                    g = g.add(&f.scale(c)).unwrap();
                }
                if !g.is_zero() {
                    let mut e = vec![field.zero(); m.dim];
                    e[a] = field.one();
                    pairs.push((e, g));
                }
            }
            (true, Some(pairs))
        }
    };
    Ok(TraceFgpReport {
        dual,
        trace_ideal_basis,
        generator,
        fgp,
        dual_basis,
    })
}
