//! Finite-dimensional algebras, coalgebras and bialgebras over an exact field,
//! presented by structure constants, with exhaustive law validation.

use crate::error::{Error, Result, Violation};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// An associative unital algebra with basis b_0..b_{n-1} and multiplication
/// constants: mult[i][j] = coordinates of b_i * b_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FDAlgebra {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
}

impl FDAlgebra {
    pub fn new(
        name: impl Into<String>,
        field: Field,
        basis: Vec<String>,
        mult: Vec<Vec<Vector>>,
        unit: Vector,
    ) -> Result<FDAlgebra> {
        let dim = basis.len();
        if mult.len() != dim
            || mult.iter().any(|row| row.len() != dim)
            || mult
                .iter()
                .any(|row| row.iter().any(|v| v.len() != dim))
            || unit.len() != dim
        {
            return Err(Error::dimension("structure constant shapes".to_string()));
        }
        Ok(FDAlgebra {
            name: name.into(),
            field,
            dim,
            basis,
            mult,
            unit,
        })
    }

    /// b_i * b_j as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.mult[i][j]
    }

    /// Product of two coordinate vectors.
    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim];
        for i in 0..self.dim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if b[j].is_zero() {
                    continue;
                }
                let c = a[i].mul(&b[j]);
                for k in 0..self.dim {
                    out[k] = out[k].add(&c.mul(&self.mult[i][j][k]));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by basis element i.
    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, self.field, |k, j| {
            self.mult[i][j][k].clone()
        })
    }

    /// Matrix of right multiplication by basis element i.
    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, self.field, |k, j| {
            self.mult[j][i][k].clone()
        })
    }

    /// Matrix of left multiplication by an element.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.field);
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.left_mult_basis(i).scale(c)).unwrap();
        }
        m
    }

    /// Matrix of right multiplication by an element.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim, self.field);
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            m = m.add(&self.right_mult_basis(i).scale(c)).unwrap();
        }
        m
    }

    pub fn zero_vec(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        let mut v = self.zero_vec();
        v[i] = self.field.one();
        v
    }

    /// Exhaustive law check: associativity on all basis triples; the unit is a
    /// two-sided identity.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for l in 0..self.dim {
                    let left = self.mul_vec(&self.mul_vec(&self.basis_vec(i), &self.basis_vec(j)), &self.basis_vec(l));
                    let right = self.mul_vec(&self.basis_vec(i), &self.mul_vec(&self.basis_vec(j), &self.basis_vec(l)));
                    if left != right {
                        out.push(Violation::new(
                            "associativity",
                            &[&self.basis[i], &self.basis[j], &self.basis[l]],
                        ));
                    }
                }
            }
        }
        for j in 0..self.dim {
            if self.mul_vec(&self.unit, &self.basis_vec(j)) != self.basis_vec(j) {
                out.push(Violation::new("left unit", &[&self.basis[j]]));
            }
            if self.mul_vec(&self.basis_vec(j), &self.unit) != self.basis_vec(j) {
                out.push(Violation::new("right unit", &[&self.basis[j]]));
            }
        }
        out
    }

    pub fn validated(self) -> Result<FDAlgebra> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}

/// A unital algebra morphism given by its matrix.
#[derive(Debug, Clone)]
pub struct AlgebraMorphism {
    pub name: String,
    pub source: FDAlgebra,
    pub target: FDAlgebra,
    pub matrix: Matrix,
}

impl AlgebraMorphism {
    pub fn new(
        name: impl Into<String>,
        source: FDAlgebra,
        target: FDAlgebra,
        matrix: Matrix,
    ) -> Result<AlgebraMorphism> {
        if matrix.rows != target.dim || matrix.cols != source.dim {
            return Err(Error::dimension(format!(
                "morphism matrix must be {}x{}",
                target.dim, source.dim
            )));
        }
        if matrix.field != source.field || source.field != target.field {
            return Err(Error::FieldMismatch("morphism field".to_string()));
        }
        Ok(AlgebraMorphism {
            name: name.into(),
            source,
            target,
            matrix,
        })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v).expect("validated shapes")
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.source.validate());
        out.extend(self.target.validate());
        if !out.is_empty() {
            return out;
        }
        if self.apply(&self.source.unit) != self.target.unit {
            out.push(Violation::new("unital", &[]));
        }
        for i in 0..self.source.dim {
            for j in 0..self.source.dim {
                let lhs = self.apply(self.source.basis_product(i, j));
                let rhs = self
                    .target
                    .mul_vec(&self.apply(&self.source.basis_vec(i)), &self.apply(&self.source.basis_vec(j)));
                if lhs != rhs {
                    out.push(Violation::new(
                        "multiplicativity",
                        &[&self.source.basis[i], &self.source.basis[j]],
                    ));
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<AlgebraMorphism> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}

/// A coassociative counital coalgebra: delta[i] is Δ(b_i) in the flat tensor
/// basis (j, k) -> j*dim + k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FDCoalgebra {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub delta: Vec<Vector>,
    pub counit: Vector,
}

impl FDCoalgebra {
    pub fn new(
        name: impl Into<String>,
        field: Field,
        basis: Vec<String>,
        delta: Vec<Vector>,
        counit: Vector,
    ) -> Result<FDCoalgebra> {
        let dim = basis.len();
        if delta.len() != dim || delta.iter().any(|v| v.len() != dim * dim) || counit.len() != dim
        {
            return Err(Error::dimension("coalgebra constant shapes".to_string()));
        }
        Ok(FDCoalgebra {
            name: name.into(),
            field,
            dim,
            basis,
            delta,
            counit,
        })
    }

    /// Δ as a matrix k^dim -> k^{dim^2}.
    pub fn delta_matrix(&self) -> Matrix {
        Matrix::from_fn(self.dim * self.dim, self.dim, self.field, |r, c| {
            self.delta[c][r].clone()
        })
    }

    /// ε as a 1 x dim matrix.
    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_fn(1, self.dim, self.field, |_, c| self.counit[c].clone())
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let n = self.dim;
        for i in 0..n {
            // coassociativity in k^{n^3}
            let mut lhs = vec![self.field.zero(); n * n * n];
            let mut rhs = vec![self.field.zero(); n * n * n];
            for j in 0..n {
                for k in 0..n {
                    let c = &self.delta[i][j * n + k];
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..n {
                        for b in 0..n {
                            let l = c.mul(&self.delta[j][a * n + b]);
                            let idx = (a * n + b) * n + k;
                            lhs[idx] = lhs[idx].add(&l);
                            let r = c.mul(&self.delta[k][a * n + b]);
                            let idx = (j * n + a) * n + b;
                            rhs[idx] = rhs[idx].add(&r);
                        }
                    }
                }
            }
            if lhs != rhs {
                out.push(Violation::new("coassociativity", &[&self.basis[i]]));
            }
            // counit laws
            let mut left = vec![self.field.zero(); n];
            let mut right = vec![self.field.zero(); n];
            for j in 0..n {
                for k in 0..n {
                    let c = &self.delta[i][j * n + k];
                    if c.is_zero() {
                        continue;
                    }
                    left[k] = left[k].add(&c.mul(&self.counit[j]));
                    right[j] = right[j].add(&c.mul(&self.counit[k]));
                }
            }
            let mut ei = vec![self.field.zero(); n];
            ei[i] = self.field.one();
            if left != ei {
                out.push(Violation::new("left counit", &[&self.basis[i]]));
            }
            if right != ei {
                out.push(Violation::new("right counit", &[&self.basis[i]]));
            }
        }
        out
    }

    pub fn validated(self) -> Result<FDCoalgebra> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}

/// A coalgebra morphism given by its matrix.
#[derive(Debug, Clone)]
pub struct CoalgebraMorphism {
    pub name: String,
    pub source: FDCoalgebra,
    pub target: FDCoalgebra,
    pub matrix: Matrix,
}

impl CoalgebraMorphism {
    pub fn new(
        name: impl Into<String>,
        source: FDCoalgebra,
        target: FDCoalgebra,
        matrix: Matrix,
    ) -> Result<CoalgebraMorphism> {
        if matrix.rows != target.dim || matrix.cols != source.dim {
            return Err(Error::dimension(format!(
                "coalgebra morphism matrix must be {}x{}",
                target.dim, source.dim
            )));
        }
        Ok(CoalgebraMorphism {
            name: name.into(),
            source,
            target,
            matrix,
        })
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.source.validate());
        out.extend(self.target.validate());
        if !out.is_empty() {
            return out;
        }
        // Δ_D ∘ ψ = (ψ⊗ψ) ∘ Δ_C and ε_D ∘ ψ = ε_C
        let psi2 = self.matrix.kronecker(&self.matrix);
        let lhs = self
            .target
            .delta_matrix()
            .compose(&self.matrix)
            .expect("shapes");
        let rhs = psi2.compose(&self.source.delta_matrix()).expect("shapes");
        if lhs != rhs {
            out.push(Violation::new("comultiplicativity", &[]));
        }
        let lhs = self
            .target
            .counit_matrix()
            .compose(&self.matrix)
            .expect("shapes");
        if lhs != self.source.counit_matrix() {
            out.push(Violation::new("counit preservation", &[]));
        }
        out
    }

    pub fn validated(self) -> Result<CoalgebraMorphism> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}

/// A bialgebra: compatible algebra and coalgebra structures on one space.
#[derive(Debug, Clone)]
pub struct Bialgebra {
    pub name: String,
    pub algebra: FDAlgebra,
    pub coalgebra: FDCoalgebra,
}

impl Bialgebra {
    pub fn new(name: impl Into<String>, algebra: FDAlgebra, coalgebra: FDCoalgebra) -> Result<Bialgebra> {
        if algebra.dim != coalgebra.dim || algebra.field != coalgebra.field {
            return Err(Error::dimension(
                "bialgebra parts must share dimension and field".to_string(),
            ));
        }
        Ok(Bialgebra {
            name: name.into(),
            algebra,
            coalgebra,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    /// Product on the flat tensor square: (a⊗b)(c⊗d) = ac⊗bd.
    pub fn tensor_square_product(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let cu = &u[i * n + j];
                if cu.is_zero() {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        let cv = &v[k * n + l];
                        if cv.is_zero() {
                            continue;
                        }
                        let c = cu.mul(cv);
                        let pq = self.algebra.basis_product(i, k).clone();
                        let rs = self.algebra.basis_product(j, l).clone();
                        for p in 0..n {
                            if pq[p].is_zero() {
                                continue;
                            }
                            for q in 0..n {
                                if rs[q].is_zero() {
                                    continue;
                                }
                                let idx = p * n + q;
                                out[idx] = out[idx].add(&c.mul(&pq[p]).mul(&rs[q]));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        out.extend(self.algebra.validate());
        out.extend(self.coalgebra.validate());
        if !out.is_empty() {
            return out;
        }
        let n = self.dim();
        let delta = self.coalgebra.delta_matrix();
        // Δ(1) = 1⊗1
        let delta_unit = delta.apply(&self.algebra.unit).unwrap();
        let mut unit_tensor = vec![self.field().zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                unit_tensor[i * n + j] = self.algebra.unit[i].mul(&self.algebra.unit[j]);
            }
        }
        if delta_unit != unit_tensor {
            out.push(Violation::new("Δ(1) = 1⊗1", &[]));
        }
        // Δ multiplicative on basis pairs
        for i in 0..n {
            for j in 0..n {
                let lhs = delta.apply(self.algebra.basis_product(i, j)).unwrap();
                let rhs = self.tensor_square_product(
                    &self.coalgebra.delta[i],
                    &self.coalgebra.delta[j],
                );
                if lhs != rhs {
                    out.push(Violation::new(
                        "Δ multiplicative",
                        &[&self.algebra.basis[i], &self.algebra.basis[j]],
                    ));
                }
            }
        }
        // ε algebra map
        let eps = &self.coalgebra.counit;
        let eps_of = |v: &[Scalar]| {
            let mut acc = self.field().zero();
            for (i, c) in v.iter().enumerate() {
                acc = acc.add(&c.mul(&eps[i]));
            }
            acc
        };
        if !eps_of(&self.algebra.unit).is_one() {
            out.push(Violation::new("ε(1) = 1", &[]));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = eps_of(self.algebra.basis_product(i, j));
                let rhs = eps[i].mul(&eps[j]);
                if lhs != rhs {
                    out.push(Violation::new(
                        "ε multiplicative",
                        &[&self.algebra.basis[i], &self.algebra.basis[j]],
                    ));
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<Bialgebra> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }
}
