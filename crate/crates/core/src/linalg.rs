//! Exact linear algebra over Q and F_p: reduced row echelon form with
//! lexicographic pivot choice, affine solving with canonical solution sets,
//! kernels, images and subspace arithmetic. Everything downstream (the §3-style
//! criteria, witness extraction, quotient constructions) sits on this module.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use serde::{Deserialize, Serialize};

/// Dense matrix with a fixed coefficient field. Entries are stored row-major;
/// the entry count always equals rows * cols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub field: Field,
    entries: Vec<Scalar>,
}

pub type Vector = Vec<Scalar>;

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: Field, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.field() != field) {
            return Err(Error::FieldMismatch(
                "matrix entry disagrees with declared field".to_string(),
            ));
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize, field: Field) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: Field) -> Matrix {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vector]) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map(|v| v.len()).unwrap_or(0);
        if rows.iter().any(|v| v.len() != c) {
            return Err(Error::dimension("ragged rows"));
        }
        Matrix::new(r, c, field, rows.concat())
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        field: Field,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vector {
        self.entries[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |i, j| {
            self.at(j, i).clone()
        })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::dimension(format!(
                "applying {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = self.field.zero();
            for j in 0..self.cols {
                acc = acc.add(&self.at(i, j).mul(&v[j]));
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn compose(&self, rhs: &Matrix) -> Result<Matrix> {
        // self * rhs, i.e. apply rhs first.
        if self.cols != rhs.rows {
            return Err(Error::dimension(format!(
                "composing {}x{} with {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, rhs.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = self.at(i, k).mul(rhs.at(k, j));
                    let cur = out.at(i, j).add(&add);
                    *out.at_mut(i, j) = cur;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::dimension("matrix addition shape mismatch"));
        }
        Ok(Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.at(i, j).add(rhs.at(i, j))
        }))
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, self.field, |i, j| {
            self.at(i, j).mul(s)
        })
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.add(&rhs.scale(&self.field.one().neg()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    /// Kronecker product; block (i,j) of the result is self[i][j] * rhs.
    /// Index convention: (i,k) x (j,l) lands at (i*rhs.rows + j, k*rhs.cols + l),
    /// matching the global flat-tensor convention (i,j) -> i*dim(W)+j.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(
            self.rows * rhs.rows,
            self.cols * rhs.cols,
            self.field,
            |i, j| {
                let (a, b) = (i / rhs.rows, i % rhs.rows);
                let (c, d) = (j / rhs.cols, j % rhs.cols);
                self.at(a, c).mul(rhs.at(b, d))
            },
        )
    }

    /// Entries flattened row-major.
    pub fn flatten(&self) -> Vector {
        self.entries.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, field: Field, flat: Vector) -> Result<Matrix> {
        Matrix::new(rows, cols, field, flat)
    }

    /// Horizontal stack [self | rhs].
    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(Error::dimension("hstack row mismatch"));
        }
        Ok(Matrix::from_fn(
            self.rows,
            self.cols + rhs.cols,
            self.field,
            |i, j| {
                if j < self.cols {
                    self.at(i, j).clone()
                } else {
                    rhs.at(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical stack.
    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.cols {
            return Err(Error::dimension("vstack col mismatch"));
        }
        let mut entries = self.entries.clone();
        entries.extend(rhs.entries.iter().cloned());
        Matrix::new(self.rows + rhs.rows, self.cols, self.field, entries)
    }

    /// Invert a square matrix; None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let aug = self.hstack(&Matrix::identity(self.rows, self.field)).ok()?;
        let red = rref(&aug);
        if red.rank != self.rows {
            return None;
        }
        Some(Matrix::from_fn(
            self.rows,
            self.rows,
            self.field,
            |i, j| red.matrix.at(i, self.cols + j).clone(),
        ))
    }
}

/// RREF result: reduced matrix, pivot columns in increasing order, rank.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Reduced row echelon form. Pivot choice is lexicographic: columns scanned
/// left to right, within a column the first row with a nonzero entry wins.
/// Deterministic, so every canonical basis derived from it is too.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..a.cols {
        let Some(pivot_row) = (rank..a.rows).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, pivot_row);
        let inv = a.at(rank, col).inv();
        for j in 0..a.cols {
            let v = a.at(rank, j).mul(&inv);
            *a.at_mut(rank, j) = v;
        }
        for r in 0..a.rows {
            if r == rank || a.at(r, col).is_zero() {
                continue;
            }
            let factor = a.at(r, col).clone();
            for j in 0..a.cols {
                let v = a.at(r, j).sub(&a.at(rank, j).mul(&factor));
                *a.at_mut(r, j) = v;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == a.rows {
            break;
        }
    }
    Rref {
        matrix: a,
        pivots,
        rank,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Kernel basis of A from its RREF: one vector per free column fc, with a 1 at
/// fc and -entry at each pivot column. Canonical: vectors ordered by free
/// column; each has unit coefficient at its free coordinate and zeros at the
/// other free coordinates.
pub fn kernel_basis(m: &Matrix) -> Vec<Vector> {
    let red = rref(m);
    kernel_from_rref(&red, m.cols, m.field)
}

fn kernel_from_rref(red: &Rref, cols: usize, field: Field) -> Vec<Vector> {
    let pivot_set: std::collections::HashSet<usize> = red.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for fc in 0..cols {
        if pivot_set.contains(&fc) {
            continue;
        }
        let mut v = vec![field.zero(); cols];
        v[fc] = field.one();
        for (row, &pc) in red.pivots.iter().enumerate() {
            v[pc] = red.matrix.at(row, fc).neg();
        }
        basis.push(v);
    }
    basis
}

/// Full solution set of A x = b: canonical particular solution (free variables
/// zero) plus the canonical kernel basis. Infeasibility is certified by the two
/// ranks.
#[derive(Debug, Clone)]
pub struct AffineSolutionSet {
    pub particular: Option<Vector>,
    pub kernel_basis: Vec<Vector>,
    pub rank_a: usize,
    pub rank_augmented: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfeasibilityCert {
    pub rank_a: usize,
    pub rank_augmented: usize,
}

impl AffineSolutionSet {
    pub fn is_feasible(&self) -> bool {
        self.particular.is_some()
    }

    pub fn infeasibility(&self) -> Option<InfeasibilityCert> {
        if self.is_feasible() {
            None
        } else {
            Some(InfeasibilityCert {
                rank_a: self.rank_a,
                rank_augmented: self.rank_augmented,
            })
        }
    }

    /// Dimension of the solution space when feasible.
    pub fn dim(&self) -> usize {
        self.kernel_basis.len()
    }

    /// Enumerate every solution over F_p (panics over Q); used by the
    /// quadratic-gap exhaustive scans. Returns None if the set is infeasible.
    pub fn enumerate_fp(&self, field: Field) -> Option<Vec<Vector>> {
        let particular = self.particular.clone()?;
        let elements = field.elements().expect("enumerate_fp needs a finite field");
        let mut out = vec![particular.clone()];
        for k in &self.kernel_basis {
            let mut next = Vec::new();
            for sol in &out {
                for c in &elements {
                    if c.is_zero() {
                        next.push(sol.clone());
                    } else {
                        next.push(
                            sol.iter()
                                .zip(k.iter())
                                .map(|(s, kv)| s.add(&kv.mul(c)))
                                .collect(),
                        );
                    }
                }
            }
            out = next;
        }
        Some(out)
    }
}

pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<AffineSolutionSet> {
    if b.len() != a.rows {
        return Err(Error::dimension(format!(
            "solve_affine: {} rows vs rhs length {}",
            a.rows,
            b.len()
        )));
    }
    if b.iter().any(|x| x.field() != a.field) {
        return Err(Error::FieldMismatch("rhs field mismatch".into()));
    }
    let bcol = Matrix::new(a.rows, 1, a.field, b.to_vec())?;
    let aug = a.hstack(&bcol)?;
    let red = rref(&aug);
    let rank_augmented = red.rank;
    let infeasible = red.pivots.contains(&a.cols);
    let rank_a = if infeasible {
        rank_augmented - 1
    } else {
        rank_augmented
    };
    if infeasible {
        return Ok(AffineSolutionSet {
            particular: None,
            kernel_basis: Vec::new(),
            rank_a,
            rank_augmented,
        });
    }
    let mut particular = vec![a.field.zero(); a.cols];
    for (row, &pc) in red.pivots.iter().enumerate() {
        particular[pc] = red.matrix.at(row, a.cols).clone();
    }
    // Kernel of A read off the same reduction, restricted to the first cols columns.
    let kernel = {
        let restricted = Rref {
            matrix: Matrix::from_fn(red.matrix.rows, a.cols, a.field, |i, j| {
                red.matrix.at(i, j).clone()
            }),
            pivots: red.pivots.clone(),
            rank: red.rank,
        };
        kernel_from_rref(&restricted, a.cols, a.field)
    };
    Ok(AffineSolutionSet {
        particular: Some(particular),
        kernel_basis: kernel,
        rank_a,
        rank_augmented,
    })
}

/// Kernel basis, image basis (canonical basis of the column space, as RREF of
/// the transposed row space), and rank.
pub fn kernel_and_image(a: &Matrix) -> (Vec<Vector>, Vec<Vector>, usize) {
    let kernel = kernel_basis(a);
    let t = a.transpose();
    let red = rref(&t);
    let image: Vec<Vector> = (0..red.rank).map(|i| red.matrix.row(i)).collect();
    (kernel, image, red.rank)
}

/// Canonical basis of the row span: RREF nonzero rows.
pub fn canonical_span(field: Field, vectors: &[Vector]) -> Result<Vec<Vector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let m = Matrix::from_rows(field, vectors)?;
    let red = rref(&m);
    Ok((0..red.rank).map(|i| red.matrix.row(i)).collect())
}

/// Membership of v in the row span of basis (assumed any spanning list).
pub fn in_span(field: Field, basis: &[Vector], v: &[Scalar]) -> Result<bool> {
    if basis.is_empty() {
        return Ok(v.iter().all(|x| x.is_zero()));
    }
    let m = Matrix::from_rows(field, basis)?.transpose();
    Ok(solve_affine(&m, v)?.is_feasible())
}

/// Coordinates of v in the given independent basis (rows); None if not in span.
pub fn coordinates_in_basis(field: Field, basis: &[Vector], v: &[Scalar]) -> Result<Option<Vector>> {
    if basis.is_empty() {
        if v.iter().all(|x| x.is_zero()) {
            return Ok(Some(Vec::new()));
        }
        return Ok(None);
    }
    let m = Matrix::from_rows(field, basis)?.transpose();
    let sol = solve_affine(&m, v)?;
    Ok(sol.particular)
}

/// Incremental builder for affine systems A x = b over a fixed unknown vector.
/// Row-by-row accumulation keeps criterion assembly readable and deterministic.
pub struct SystemBuilder {
    pub field: Field,
    pub unknowns: usize,
    rows: Vec<Vector>,
    rhs: Vector,
}

impl SystemBuilder {
    pub fn new(field: Field, unknowns: usize) -> SystemBuilder {
        SystemBuilder {
            field,
            unknowns,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Add one equation: coeffs · x = rhs. `coeffs` must have full length.
    pub fn equation(&mut self, coeffs: Vector, rhs: Scalar) {
        debug_assert_eq!(coeffs.len(), self.unknowns);
        self.rows.push(coeffs);
        self.rhs.push(rhs);
    }

    /// Add a sparse equation from (index, coefficient) pairs.
    pub fn sparse_equation(&mut self, terms: &[(usize, Scalar)], rhs: Scalar) {
        let mut row = vec![self.field.zero(); self.unknowns];
        for (i, c) in terms {
            row[*i] = row[*i].add(c);
        }
        self.equation(row, rhs);
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn solve(self) -> Result<AffineSolutionSet> {
        if self.rows.is_empty() {
            // no constraints: everything is a solution
            return Ok(AffineSolutionSet {
                particular: Some(vec![self.field.zero(); self.unknowns]),
                kernel_basis: Matrix::identity(self.unknowns, self.field).rows_vec(),
                rank_a: 0,
                rank_augmented: 0,
            });
        }
        let a = Matrix::from_rows(self.field, &self.rows)?;
        solve_affine(&a, &self.rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceOp {
    Intersection,
    Sum,
}

/// Intersection or sum of two subspaces given by spanning row vectors, as a
/// canonical (RREF) basis.
pub fn subspace_ops(field: Field, u: &[Vector], w: &[Vector], kind: SubspaceOp) -> Result<Vec<Vector>> {
    let dim_of = |vs: &[Vector]| vs.first().map(|v| v.len());
    match (dim_of(u), dim_of(w)) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::dimension(
                "subspace operands live in different ambient dimensions",
            ))
        }
        _ => {}
    }
    match kind {
        SubspaceOp::Sum => {
            let mut all = u.to_vec();
            all.extend(w.iter().cloned());
            canonical_span(field, &all)
        }
        SubspaceOp::Intersection => {
            if u.is_empty() || w.is_empty() {
                return Ok(Vec::new());
            }
            let n = u[0].len();
            // x = U^T a = W^T b: kernel of [U^T | -W^T].
            let ut = Matrix::from_rows(field, u)?.transpose();
            let wt = Matrix::from_rows(field, w)?.transpose().scale(&field.one().neg());
            let sys = ut.hstack(&wt)?;
            let ker = kernel_basis(&sys);
            let mut vecs = Vec::new();
            for k in &ker {
                let a = &k[..u.len()];
                let mut x = vec![field.zero(); n];
                for (ci, coeff) in a.iter().enumerate() {
                    for j in 0..n {
                        x[j] = x[j].add(&coeff.mul(&u[ci][j]));
                    }
                }
                vecs.push(x);
            }
            canonical_span(field, &vecs)
        }
    }
}

/// Quotient of the ambient space k^n by the row span of `u`. Representatives
/// are the canonical normal forms (pivot coordinates of the RREF of u zeroed);
/// `projection` maps ambient coordinates to quotient coordinates, `section`
/// embeds back with projection . section = identity.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub field: Field,
    pub ambient_dim: usize,
    pub dim: usize,
    /// RREF basis of the subspace quotiented out.
    pub sub_basis: Vec<Vector>,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    pub projection: Matrix,
    pub section: Matrix,
}

impl Quotient {
    pub fn new(field: Field, ambient_dim: usize, sub: &[Vector]) -> Result<Quotient> {
        for v in sub {
            if v.len() != ambient_dim {
                return Err(Error::dimension("subspace vector has wrong length"));
            }
        }
        let sub_basis = canonical_span(field, sub)?;
        let pivots: Vec<usize> = sub_basis
            .iter()
            .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        let free: Vec<usize> = (0..ambient_dim).filter(|j| !pivots.contains(j)).collect();
        let dim = free.len();
        // normal_form(v) = v - sum_i v[pivot_i] * row_i; projection reads the
        // free coordinates of the normal form.
        let mut projection = Matrix::zero(dim, ambient_dim, field);
        for (qi, &fj) in free.iter().enumerate() {
            *projection.at_mut(qi, fj) = field.one();
            for (ri, &pj) in pivots.iter().enumerate() {
                // normal form subtracts v[pj] * row_ri, whose fj entry is row_ri[fj]
                let c = sub_basis[ri][fj].neg();
                *projection.at_mut(qi, pj) = c;
            }
        }
        let mut section = Matrix::zero(ambient_dim, dim, field);
        for (qi, &fj) in free.iter().enumerate() {
            *section.at_mut(fj, qi) = field.one();
        }
        Ok(Quotient {
            field,
            ambient_dim,
            dim,
            sub_basis,
            pivots,
            free,
            projection,
            section,
        })
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Result<Vector> {
        self.projection.apply(v)
    }

    /// Canonical ambient representative of a quotient vector.
    pub fn represent(&self, q: &[Scalar]) -> Result<Vector> {
        self.section.apply(q)
    }

    /// Canonical representative of the coset of an ambient vector.
    pub fn normal_form(&self, v: &[Scalar]) -> Result<Vector> {
        self.represent(&self.project(v)?)
    }

    /// Push a linear map on the ambient space down to the quotient. The map
    /// must preserve the subspace; returns an error naming the offending basis
    /// vector otherwise.
    pub fn induce_endomap(&self, ambient_map: &Matrix) -> Result<Matrix> {
        for (i, row) in self.sub_basis.iter().enumerate() {
            let img = ambient_map.apply(row)?;
            if !in_span(self.field, &self.sub_basis, &img)? {
                return Err(Error::not_applicable(format!(
                    "map does not preserve the subspace (basis vector {i})"
                )));
            }
        }
        self.projection
            .compose(ambient_map)?
            .compose(&self.section)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Field::Q.scalar_from_str(s).unwrap()
    }

    fn qmat(rows: usize, cols: usize, entries: &[&str]) -> Matrix {
        Matrix::new(
            rows,
            cols,
            Field::Q,
            entries.iter().map(|s| q(s)).collect(),
        )
        .unwrap()
    }

    // Independent oracle: plain substitution, no shared code with the solver.
    fn substitute(a: &Matrix, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = Vec::new();
        for i in 0..a.rows {
            let mut acc = a.field.zero();
            for j in 0..a.cols {
                acc = acc.add(&a.at(i, j).mul(&x[j]));
            }
            out.push(acc);
        }
        out
    }

    #[test]
    fn solve_identity_case() {
        let a = qmat(1, 1, &["1"]);
        let sol = solve_affine(&a, &[q("0")]).unwrap();
        assert_eq!(sol.particular.unwrap(), vec![q("0")]);
        assert!(sol.kernel_basis.is_empty());
    }

    #[test]
    fn solve_underdetermined_matches_hand_elimination() {
        let a = qmat(1, 2, &["1", "1"]);
        let sol = solve_affine(&a, &[q("1")]).unwrap();
        let p = sol.particular.clone().unwrap();
        assert_eq!(p, vec![q("1"), q("0")]);
        assert_eq!(sol.kernel_basis, vec![vec![q("-1"), q("1")]]);
        assert_eq!(substitute(&a, &p), vec![q("1")]);
        for k in &sol.kernel_basis {
            assert!(substitute(&a, k).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_infeasible_zero_equals_one() {
        let a = qmat(1, 1, &["0"]);
        let sol = solve_affine(&a, &[q("1")]).unwrap();
        assert!(!sol.is_feasible());
        let cert = sol.infeasibility().unwrap();
        assert_eq!(cert.rank_a, 0);
        assert_eq!(cert.rank_augmented, 1);
    }

    #[test]
    fn kernel_and_image_examples() {
        let id2 = Matrix::identity(2, Field::Q);
        let (k, _, r) = kernel_and_image(&id2);
        assert!(k.is_empty());
        assert_eq!(r, 2);

        let z2 = Matrix::zero(2, 2, Field::Q);
        let (k, _, r) = kernel_and_image(&z2);
        assert_eq!(r, 0);
        assert_eq!(k, vec![vec![q("1"), q("0")], vec![q("0"), q("1")]]);

        let a = qmat(2, 2, &["1", "2", "2", "4"]);
        let (k, _, r) = kernel_and_image(&a);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![q("-2"), q("1")]]);
    }

    #[test]
    fn subspace_examples() {
        let e1 = vec![q("1"), q("0")];
        let e2 = vec![q("0"), q("1")];
        let inter = subspace_ops(
            Field::Q,
            &[e1.clone()],
            &[e1.clone()],
            SubspaceOp::Intersection,
        )
        .unwrap();
        assert_eq!(inter, vec![e1.clone()]);

        let sum = subspace_ops(
            Field::Q,
            &[vec![q("1"), q("1")]],
            &[vec![q("1"), q("-1")]],
            SubspaceOp::Sum,
        )
        .unwrap();
        assert_eq!(sum.len(), 2);

        let quot = Quotient::new(Field::Q, 2, &[e1]).unwrap();
        assert_eq!(quot.dim, 1);
        assert_eq!(quot.represent(&[q("1")]).unwrap(), e2);
        let round = quot.projection.compose(&quot.section).unwrap();
        assert!(round.is_identity());
    }

    #[test]
    fn quotient_of_diagonal_line() {
        // k^2 / span{e1+e2}: representative of e1's coset is -e2 + ... compute:
        // normal form of e1 = e1 - 1*(e1+e2) = -e2.
        let quot = Quotient::new(Field::Q, 2, &[vec![q("1"), q("1")]]).unwrap();
        assert_eq!(quot.dim, 1);
        let nf = quot.normal_form(&[q("1"), q("0")]).unwrap();
        assert_eq!(nf, vec![q("0"), q("-1")]);
        // e1 ~ -e2 indeed: difference is e1+e2.
    }

    #[test]
    fn rank_mod_p_cross_check() {
        // Sanity: rank over Q equals rank over F_p for good primes.
        let a = qmat(3, 3, &["1", "1/2", "0", "2", "1", "3", "0", "0", "7"]);
        let rq = rank(&a);
        for p in [5u64, 11, 13, 97] {
            let mut bad = false;
            let mut entries = Vec::new();
            for e in a.flatten() {
                match e.reduce_mod(p) {
                    Some(x) => entries.push(x),
                    None => {
                        bad = true;
                        break;
                    }
                }
            }
            if bad {
                continue;
            }
            let ap = Matrix::new(3, 3, Field::Fp(p), entries).unwrap();
            // p = 7 would be a bad prime for the pivot 7 entry; ranks can drop there.
            assert_eq!(rank(&ap), rq, "prime {p}");
        }
    }

    #[test]
    fn enumerate_fp_covers_affine_set() {
        let f = Field::Fp(3);
        let a = Matrix::new(1, 2, f, vec![f.one(), f.one()]).unwrap();
        let sol = solve_affine(&a, &[f.one()]).unwrap();
        let all = sol.enumerate_fp(f).unwrap();
        assert_eq!(all.len(), 3);
        for x in &all {
            assert!(x[0].add(&x[1]).is_one());
        }
    }
}
