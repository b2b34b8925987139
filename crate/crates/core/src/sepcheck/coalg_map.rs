//! Separability analysis of a coalgebra morphism ψ: C -> D through
//! D-bicomodule maps χ: D -> C: the coinduction functor is semiseparable iff
//! ε_C∘χ∘ψ = ε_C for some such χ, separable iff ψ∘χ = Id_D, naturally full
//! iff χ∘ψ = Id_C.

use crate::algstruct::CoalgebraMorphism;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SystemBuilder, Vector};
use crate::report::Verdict;

#[derive(Debug, Clone)]
pub struct CoalgMapReport {
    pub semiseparable: Verdict<Matrix>,
    pub separable: Verdict<Matrix>,
    pub naturally_full: Verdict<Matrix>,
}

/// Constraint rows cutting out the D-bicomodule maps χ: D -> C, where C is a
/// D-bicomodule through ψ. Unknown χ[i][d] at i*dim_D + d.
fn bicomodule_rows(psi: &CoalgebraMorphism) -> (usize, Vec<Vector>) {
    let c = &psi.source;
    let d = &psi.target;
    let field = c.field;
    let (nc, nd) = (c.dim, d.dim);
    let unknowns = nc * nd;
    let mut rows = Vec::new();
    // right D-colinearity: (I_C ⊗ ψ)∘Δ_C∘χ = (χ ⊗ I_D)∘Δ_D
    let a1 = Matrix::identity(nc, field)
        .kronecker(&psi.matrix)
        .compose(&c.delta_matrix())
        .unwrap();
    for dcol in 0..nd {
        for i in 0..nc {
            for k in 0..nd {
                let mut row = vec![field.zero(); unknowns];
                for a in 0..nc {
                    row[a * nd + dcol] = row[a * nd + dcol].add(a1.at(i * nd + k, a));
                }
                for j in 0..nd {
                    row[i * nd + j] = row[i * nd + j].sub(&d.delta[dcol][j * nd + k]);
                }
                rows.push(row);
            }
        }
    }
    // left D-colinearity: (ψ ⊗ I_C)∘Δ_C∘χ = (I_D ⊗ χ)∘Δ_D
    let a2 = psi
        .matrix
        .kronecker(&Matrix::identity(nc, field))
        .compose(&c.delta_matrix())
        .unwrap();
    for dcol in 0..nd {
        for j in 0..nd {
            for i in 0..nc {
                let mut row = vec![field.zero(); unknowns];
                for a in 0..nc {
                    row[a * nd + dcol] = row[a * nd + dcol].add(a2.at(j * nc + i, a));
                }
                for k in 0..nd {
                    row[i * nd + k] = row[i * nd + k].sub(&d.delta[dcol][j * nd + k]);
                }
                rows.push(row);
            }
        }
    }
    (unknowns, rows)
}

pub fn coalg_map_analyze(psi: &CoalgebraMorphism) -> Result<CoalgMapReport> {
    let v = psi.validate();
    if !v.is_empty() {
        return Err(Error::invalid(v));
    }
    let c = &psi.source;
    let d = &psi.target;
    let field = c.field;
    let (nc, nd) = (c.dim, d.dim);
    let (unknowns, rows) = bicomodule_rows(psi);
    let solve = |extra: &dyn Fn(&mut SystemBuilder)| -> Result<Verdict<Matrix>> {
        let mut sys = SystemBuilder::new(field, unknowns);
        for row in &rows {
            sys.equation(row.clone(), field.zero());
        }
        extra(&mut sys);
        let sol = sys.solve()?;
        Ok(match &sol.particular {
            Some(p) => Verdict::holds(Matrix::from_flat(nc, nd, field, p.clone()).unwrap()),
            None => Verdict::fails_with(sol.infeasibility().unwrap()),
        })
    };
    // semiseparable: ε_C∘χ∘ψ = ε_C
    let semiseparable = solve(&|sys| {
        for ccol in 0..nc {
            let mut row = vec![field.zero(); unknowns];
            for i in 0..nc {
                for j in 0..nd {
                    let coeff = c.counit[i].mul(psi.matrix.at(j, ccol));
                    row[i * nd + j] = row[i * nd + j].add(&coeff);
                }
            }
            sys.equation(row, c.counit[ccol].clone());
        }
    })?;
    // separable: ψ∘χ = Id_D
    let separable = solve(&|sys| {
        for t in 0..nd {
            for dcol in 0..nd {
                let mut row = vec![field.zero(); unknowns];
                for i in 0..nc {
                    row[i * nd + dcol] = row[i * nd + dcol].add(psi.matrix.at(t, i));
                }
                let rhs = if t == dcol { field.one() } else { field.zero() };
                sys.equation(row, rhs);
            }
        }
    })?;
    // naturally full: χ∘ψ = Id_C
    let naturally_full = solve(&|sys| {
        for t in 0..nc {
            for ccol in 0..nc {
                let mut row = vec![field.zero(); unknowns];
                for j in 0..nd {
                    let idx = t * nd + j;
                    row[idx] = row[idx].add(psi.matrix.at(j, ccol));
                }
                let rhs = if t == ccol { field.one() } else { field.zero() };
                sys.equation(row, rhs);
            }
        }
    })?;
    Ok(CoalgMapReport {
        semiseparable,
        separable,
        naturally_full,
    })
}
