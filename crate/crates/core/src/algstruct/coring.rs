//! Corings over a base algebra: an R-bimodule C with comultiplication into the
//! balanced tensor C ⊗_R C and counit into R. The comultiplication is supplied
//! as a lift into the flat field tensor; well-definedness on the balanced
//! quotient is part of validation.

use super::algebra::FDAlgebra;
use super::bimodule::{balanced_tensor, BalancedTensor, Bimodule};
use crate::error::{Error, Result, Violation};
use crate::linalg::{Matrix, Quotient, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct Coring {
    pub name: String,
    pub base: FDAlgebra,
    pub bimodule: Bimodule,
    /// Δ lifted to the flat tensor: a (dim^2 x dim) matrix.
    pub delta_flat: Matrix,
    /// ε: C -> R as a (dim_R x dim) matrix.
    pub counit: Matrix,
}

impl Coring {
    pub fn new(
        name: impl Into<String>,
        base: FDAlgebra,
        bimodule: Bimodule,
        delta_flat: Matrix,
        counit: Matrix,
    ) -> Result<Coring> {
        let dim = bimodule.dim;
        if delta_flat.rows != dim * dim || delta_flat.cols != dim {
            return Err(Error::dimension(format!(
                "Δ lift must be {}x{}",
                dim * dim,
                dim
            )));
        }
        if counit.rows != base.dim || counit.cols != dim {
            return Err(Error::dimension(format!(
                "counit must be {}x{}",
                base.dim, dim
            )));
        }
        Ok(Coring {
            name: name.into(),
            base,
            bimodule,
            delta_flat,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim
    }

    pub fn eps_of(&self, v: &[Scalar]) -> Vector {
        self.counit.apply(v).expect("shapes")
    }

    /// The balanced tensor C ⊗_R C.
    pub fn tensor_square(&self) -> Result<BalancedTensor> {
        balanced_tensor(&self.bimodule, &self.bimodule)
    }

    /// The triple balanced quotient C ⊗_R C ⊗_R C of the flat cube.
    pub fn triple_quotient(&self) -> Result<Quotient> {
        let field = self.bimodule.field();
        let n = self.dim();
        let id = Matrix::identity(n, field);
        let mut relations: Vec<Vector> = Vec::new();
        for rb in 0..self.base.dim {
            let rho = &self.bimodule.right_action[rb];
            let lam = &self.bimodule.left_action[rb];
            let d12 = rho
                .kronecker(&id)
                .kronecker(&id)
                .sub(&id.kronecker(&lam.kronecker(&id)))
                .unwrap();
            let d23 = id
                .kronecker(&rho.kronecker(&id))
                .sub(&id.kronecker(&id.kronecker(lam)))
                .unwrap();
            for col in 0..n * n * n {
                relations.push(d12.col(col));
                relations.push(d23.col(col));
            }
        }
        Quotient::new(field, n * n * n, &relations)
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.base.validate());
        out.extend(self.bimodule.validate());
        if self.bimodule.left_algebra != self.base || self.bimodule.right_algebra != self.base {
            out.push(Violation::new("coring bimodule must live over the base", &[]));
        }
        if !out.is_empty() {
            return out;
        }
        let n = self.dim();
        let field = self.bimodule.field();
        // ε is an R-bimodule map
        for i in 0..self.base.dim {
            let lhs = self.counit.compose(&self.bimodule.left_action[i]).unwrap();
            let rhs = self.base.left_mult_basis(i).compose(&self.counit).unwrap();
            if lhs != rhs {
                out.push(Violation::new("counit left R-linearity", &[&self.base.basis[i]]));
            }
            let lhs = self.counit.compose(&self.bimodule.right_action[i]).unwrap();
            let rhs = self.base.right_mult_basis(i).compose(&self.counit).unwrap();
            if lhs != rhs {
                out.push(Violation::new("counit right R-linearity", &[&self.base.basis[i]]));
            }
        }
        // Δ (projected) is an R-bimodule map into C ⊗_R C
        let Ok(t2) = self.tensor_square() else {
            out.push(Violation::new("tensor square construction", &[]));
            return out;
        };
        let delta_bal = t2.quotient.projection.compose(&self.delta_flat).unwrap();
        for i in 0..self.base.dim {
            let lhs = delta_bal.compose(&self.bimodule.left_action[i]).unwrap();
            let rhs = t2.bimodule.left_action[i].compose(&delta_bal).unwrap();
            if lhs != rhs {
                out.push(Violation::new("Δ left R-linearity", &[&self.base.basis[i]]));
            }
            let lhs = delta_bal.compose(&self.bimodule.right_action[i]).unwrap();
            let rhs = t2.bimodule.right_action[i].compose(&delta_bal).unwrap();
            if lhs != rhs {
                out.push(Violation::new("Δ right R-linearity", &[&self.base.basis[i]]));
            }
        }
        // counit laws, evaluated on the flat lift (the contraction maps kill
        // the balancing relations, so any lift gives the same value)
        for i in 0..n {
            let mut e = vec![field.zero(); n];
            e[i] = field.one();
            let w = self.delta_flat.apply(&e).unwrap();
            let mut left = vec![field.zero(); n];
            let mut right = vec![field.zero(); n];
            for j in 0..n {
                for k in 0..n {
                    let c = &w[j * n + k];
                    if c.is_zero() {
                        continue;
                    }
                    // ε(c_j)·c_k and c_j·ε(c_k)
                    let mut ej = vec![field.zero(); n];
                    ej[j] = field.one();
                    let mut ek = vec![field.zero(); n];
                    ek[k] = field.one();
                    let l = self
                        .bimodule
                        .act_left(&self.eps_of(&ej))
                        .apply(&ek)
                        .unwrap();
                    let r = self
                        .bimodule
                        .act_right(&self.eps_of(&ek))
                        .apply(&ej)
                        .unwrap();
                    for t in 0..n {
                        left[t] = left[t].add(&c.mul(&l[t]));
                        right[t] = right[t].add(&c.mul(&r[t]));
                    }
                }
            }
            if left != e {
                out.push(Violation::new("left counit law", &[&self.bimodule.name, &format!("basis {i}")]));
            }
            if right != e {
                out.push(Violation::new("right counit law", &[&format!("basis {i}")]));
            }
        }
        // coassociativity in the triple balanced quotient
        match self.triple_quotient() {
            Err(_) => out.push(Violation::new("triple quotient construction", &[])),
            Ok(q3) => {
                let id = Matrix::identity(n, field);
                let left = q3
                    .projection
                    .compose(&self.delta_flat.kronecker(&id))
                    .unwrap()
                    .compose(&self.delta_flat)
                    .unwrap();
                let right = q3
                    .projection
                    .compose(&id.kronecker(&self.delta_flat))
                    .unwrap()
                    .compose(&self.delta_flat)
                    .unwrap();
                if left != right {
                    out.push(Violation::new("coassociativity", &[&self.name]));
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<Coring> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}
