//! Finite-dimensional associative algebras given by structure constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::lattice::invariant_closure;
use crate::exactla::{vector, Field, Matrix, Scalar, Subspace, Vector};

/// Which multiplications an ideal must absorb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// Associative algebra on a basis `e_0 … e_{n−1}` with
/// `e_i e_j = Σ_k c[i][j][k] e_k`.
///
/// The unit is optional only for the full smash product `A#H`, which is
/// unital exactly when the action is global.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    mult: Vec<Scalar>,
    terms: Vec<Vec<(usize, Scalar)>>,
    unit: Option<Vector>,
    labels: Vec<String>,
}

impl Algebra {
    /// `mult` is the flattened tensor, index `(i·n + j)·n + k`.
    pub fn new(field: Field, dim: usize, mult: Vec<Scalar>, unit: Vector, labels: Vec<String>) -> Result<Algebra> {
        Self::build(field, dim, mult, Some(unit), labels)
    }

    pub(crate) fn new_nonunital(field: Field, dim: usize, mult: Vec<Scalar>, labels: Vec<String>) -> Result<Algebra> {
        Self::build(field, dim, mult, None, labels)
    }

    fn build(
        field: Field,
        dim: usize,
        mult: Vec<Scalar>,
        unit: Option<Vector>,
        labels: Vec<String>,
    ) -> Result<Algebra> {
        if mult.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: mult.len(),
            });
        }
        if let Some(bad) = mult.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch {
                left: field,
                right: bad.field(),
            });
        }
        if let Some(u) = &unit {
            crate::exactla::Subspace::full(field, dim).contains(u)?;
        }
        let labels = if labels.len() == dim {
            labels
        } else {
            (0..dim).map(|i| format!("e{i}")).collect()
        };
        let terms = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &mult[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Algebra {
            field,
            dim,
            mult,
            terms,
            unit,
            labels,
        })
    }

    /// Builds the structure tensor from a basis-product rule.
    pub fn from_products<F>(field: Field, dim: usize, unit: Vector, labels: Vec<String>, mut product: F) -> Result<Algebra>
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                if p.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: p.len(),
                    });
                }
                mult.extend(p);
            }
        }
        Algebra::new(field, dim, mult, unit, labels)
    }

    /// `field^n` with componentwise multiplication.
    pub fn product_of_fields(field: Field, n: usize) -> Algebra {
        let unit = vec![field.one(); n];
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        Algebra::from_products(field, n, unit, labels, |i, j| {
            if i == j {
                vector::unit(field, n, i)
            } else {
                vector::zeros(field, n)
            }
        })
        .expect("well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    /// The unit, or `NotUnital`.
    pub fn require_unit(&self) -> Result<&Vector> {
        self.unit.as_ref().ok_or(Error::NotUnital)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_tensor(&self) -> &[Scalar] {
        &self.mult
    }

    /// Nonzero terms of `e_i e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.terms[i * self.dim + j]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut v = vector::zeros(self.field, self.dim);
        for (k, c) in self.product_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        vector::unit(self.field, self.dim, i)
    }

    fn check_len(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        if let Some(bad) = x.iter().find(|s| s.field() != self.field) {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: bad.field(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure tensor.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, c) in self.product_terms(i, j) {
                    out[*k] = &out[*k] + &(&s * c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul_unchecked(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_len(x)?;
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul_unchecked(&self.basis_vector(j), x))
            .collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.basis_product(i, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("shape")
    }

    pub fn right_mult_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.basis_product(j, i)).collect();
        Matrix::from_columns(self.field, self.dim, &cols).expect("shape")
    }

    /// Operators whose invariant subspaces are the ideals of the given side.
    pub fn ideal_operators(&self, side: Side) -> Vec<Matrix> {
        let mut ops = Vec::new();
        if matches!(side, Side::Left | Side::TwoSided) {
            ops.extend((0..self.dim).map(|i| self.left_mult_basis(i)));
        }
        if matches!(side, Side::Right | Side::TwoSided) {
            ops.extend((0..self.dim).map(|i| self.right_mult_basis(i)));
        }
        ops
    }

    /// Associativity on all basis triples and the unit laws.
    pub fn check_algebra(&self) -> AlgebraReport {
        let mut report = AlgebraReport::default();
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let lhs = self.mul_unchecked(&ij, &self.basis_vector(k));
                    let jk = self.basis_product(j, k);
                    let rhs = self.mul_unchecked(&self.basis_vector(i), &jk);
                    if lhs != rhs {
                        report.associativity.push((i, j, k));
                    }
                }
            }
        }
        if let Some(u) = &self.unit {
            for i in 0..n {
                let e = self.basis_vector(i);
                if self.mul_unchecked(u, &e) != e {
                    report.left_unit.push(i);
                }
                if self.mul_unchecked(&e, u) != e {
                    report.right_unit.push(i);
                }
            }
        }
        report
    }

    /// Smallest `side`-ideal containing `gens`.
    pub fn ideal_closure<V: AsRef<[Scalar]>>(&self, gens: &[V], side: Side) -> Result<Subspace> {
        for g in gens {
            self.check_len(g.as_ref())?;
        }
        let start = Subspace::span(self.field, self.dim, gens)?;
        Ok(invariant_closure(&self.ideal_operators(side), &start))
    }

    pub fn is_ideal(&self, s: &Subspace, side: Side) -> bool {
        s.ambient() == self.dim
            && s.field() == self.field
            && crate::exactla::lattice::is_invariant(&self.ideal_operators(side), s)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let basis: Vec<&[Scalar]> = s.basis_vectors().collect();
        basis.iter().all(|x| {
            basis
                .iter()
                .all(|y| s.contains(&self.mul_unchecked(x, y)).expect("shape"))
        })
    }

    /// `span{x y : x ∈ U, y ∈ V}`.
    pub fn product_space(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        let full = Subspace::full(self.field, self.dim);
        full.sum(u)?;
        full.sum(v)?;
        let mut prods = Vec::with_capacity(u.dim() * v.dim());
        for x in u.basis_vectors() {
            for y in v.basis_vectors() {
                prods.push(self.mul_unchecked(x, y));
            }
        }
        Subspace::span(self.field, self.dim, &prods)
    }

    /// `A/I` on the cosets of the unit vectors not used as pivots of `I`,
    /// in increasing index order, together with the projection.
    pub fn quotient_algebra(&self, ideal: &Subspace) -> Result<(Algebra, AlgebraMap)> {
        if !self.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::NotAnIdeal);
        }
        let comp = ideal.complement_indices();
        let m = comp.len();
        let mut mult = Vec::with_capacity(m * m * m);
        for &a in &comp {
            for &b in &comp {
                mult.extend(ideal.quotient_coordinates(&self.basis_product(a, b))?);
            }
        }
        let labels = comp.iter().map(|&i| format!("[{}]", self.labels[i])).collect();
        let q = match &self.unit {
            Some(u) => Algebra::new(self.field, m, mult, ideal.quotient_coordinates(u)?, labels)?,
            None => Algebra::new_nonunital(self.field, m, mult, labels)?,
        };
        let proj = ideal.quotient_map();
        let map = AlgebraMap {
            source: self.clone(),
            target: q.clone(),
            matrix: proj,
        };
        Ok((q, map))
    }

    /// Smallest `m` with `I^m = 0`, if `I` is nilpotent.
    pub fn nilpotency_index(&self, ideal: &Subspace) -> Option<usize> {
        if ideal.is_zero() {
            return Some(0);
        }
        let mut power = ideal.clone();
        for m in 1..=self.dim + 1 {
            if power.is_zero() {
                return Some(m);
            }
            let next = self.product_space(&power, ideal).ok()?;
            if next == power {
                return None;
            }
            power = next;
        }
        power.is_zero().then_some(self.dim + 1)
    }

    /// `I^m = 0` for some `m ≤ dim + 1`.
    pub fn is_nilpotent_subspace(&self, ideal: &Subspace) -> bool {
        self.nilpotency_index(ideal).is_some()
    }

    /// Smallest unital multiplicatively closed subspace containing `gens`.
    pub fn subalgebra_closure<V: AsRef<[Scalar]>>(&self, gens: &[V]) -> Result<Subspace> {
        let unit = self.require_unit()?.clone();
        let mut vecs: Vec<Vector> = vec![unit];
        for g in gens {
            self.check_len(g.as_ref())?;
            vecs.push(g.as_ref().to_vec());
        }
        let mut s = Subspace::span(self.field, self.dim, &vecs)?;
        loop {
            let basis: Vec<Vector> = s.basis_vectors().map(|r| r.to_vec()).collect();
            let mut grown = s.clone();
            for x in &basis {
                for y in &basis {
                    let p = self.mul_unchecked(x, y);
                    if !grown.contains(&p)? {
                        grown = grown.sum(&Subspace::span(self.field, self.dim, &[p])?)?;
                    }
                }
            }
            if grown.dim() == s.dim() {
                return Ok(s);
            }
            s = grown;
        }
    }

    /// The algebra structure carried by a multiplicatively closed subspace,
    /// on its RREF basis, with the given element as unit.
    pub fn restrict(&self, s: &Subspace, unit: &[Scalar]) -> Result<Algebra> {
        let basis: Vec<Vector> = s.basis_vectors().map(|r| r.to_vec()).collect();
        let d = basis.len();
        let mut mult = Vec::with_capacity(d * d * d);
        for x in &basis {
            for y in &basis {
                let p = self.mul_unchecked(x, y);
                mult.extend(s.coordinates(&p)?.ok_or(Error::NotAnIdeal)?);
            }
        }
        let u = s.coordinates(unit)?.ok_or(Error::NotUnital)?;
        Algebra::new(self.field, d, mult, u, Vec::new())
    }

    fn same_field(&self, other: &Algebra) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    /// `A × B`: block-diagonal structure constants, componentwise unit.
    pub fn direct_product(&self, other: &Algebra) -> Result<Algebra> {
        self.same_field(other)?;
        let (n, m) = (self.dim, other.dim);
        let d = n + m;
        let field = self.field;
        let unit = match (&self.unit, &other.unit) {
            (Some(a), Some(b)) => a.iter().chain(b).cloned().collect(),
            _ => return Err(Error::NotUnital),
        };
        let mut labels: Vec<String> = self.labels.iter().map(|l| format!("({l},0)")).collect();
        labels.extend(other.labels.iter().map(|l| format!("(0,{l})")));
        Algebra::from_products(field, d, unit, labels, |i, j| {
            let mut v = vector::zeros(field, d);
            if i < n && j < n {
                for (k, c) in self.product_terms(i, j) {
                    v[*k] = c.clone();
                }
            } else if i >= n && j >= n {
                for (k, c) in other.product_terms(i - n, j - n) {
                    v[n + *k] = c.clone();
                }
            }
            v
        })
    }

    /// `A ⊗ B` with basis `a_i ⊗ b_j` at index `i·dim B + j`.
    pub fn tensor_product(&self, other: &Algebra) -> Result<Algebra> {
        self.same_field(other)?;
        let (n, m) = (self.dim, other.dim);
        let field = self.field;
        let unit = tensor_vectors(self.require_unit()?, other.require_unit()?);
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Algebra::from_products(field, n * m, unit, labels, |x, y| {
            let (i, j) = (x / m, x % m);
            let (k, l) = (y / m, y % m);
            let mut v = vector::zeros(field, n * m);
            for (p, c) in self.product_terms(i, k) {
                for (q, d) in other.product_terms(j, l) {
                    v[p * m + q] = &v[p * m + q] + &(c * d);
                }
            }
            v
        })
    }

    /// Multiplicative inverse of `x`, if it exists.
    pub fn inverse(&self, x: &[Scalar]) -> Result<Option<Vector>> {
        let unit = self.require_unit()?.clone();
        let l = self.left_mult(x)?;
        // solve x y = 1 via the kernel of [L_x | −1]
        let mut cols: Vec<Vector> = (0..self.dim).map(|j| l.column(j)).collect();
        cols.push(unit.iter().map(|u| -u).collect());
        let aug = Matrix::from_columns(self.field, self.dim, &cols)?;
        let k = crate::exactla::kernel(&aug);
        for v in k.basis_vectors() {
            if !v[self.dim].is_zero() {
                let s = v[self.dim].inv().expect("nonzero");
                let y = vector::scale(&v[..self.dim], &s);
                if self.mul_unchecked(&y, x) == unit {
                    return Ok(Some(y));
                }
            }
        }
        Ok(None)
    }
}

/// `x ⊗ y` in coordinates `i·len(y) + j`.
pub fn tensor_vectors(x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut v = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            v.push(a * b);
        }
    }
    v
}

/// Failures found by [`Algebra::check_algebra`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgebraReport {
    /// Basis triples `(i, j, k)` with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub associativity: Vec<(usize, usize, usize)>,
    pub left_unit: Vec<usize>,
    pub right_unit: Vec<usize>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associativity.is_empty() && self.left_unit.is_empty() && self.right_unit.is_empty()
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "algebra axioms: pass");
        }
        writeln!(f, "algebra axioms: FAIL")?;
        if let Some(t) = self.associativity.first() {
            writeln!(f, "  associativity fails on {} triples, first {:?}", self.associativity.len(), t)?;
        }
        if !self.left_unit.is_empty() {
            writeln!(f, "  left unit law fails on basis {:?}", self.left_unit)?;
        }
        if !self.right_unit.is_empty() {
            writeln!(f, "  right unit law fails on basis {:?}", self.right_unit)?;
        }
        Ok(())
    }
}

/// Linear map between algebras, columns = images of the source basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub source: Algebra,
    pub target: Algebra,
    pub matrix: Matrix,
}

impl AlgebraMap {
    pub fn apply(&self, x: &[Scalar]) -> Result<Vector> {
        self.matrix.apply(x)
    }

    /// Multiplicative on basis pairs and unital when both units exist.
    pub fn is_algebra_map(&self) -> bool {
        let n = self.source.dim;
        for i in 0..n {
            let fi = self.matrix.column(i);
            for j in 0..n {
                let fj = self.matrix.column(j);
                let lhs = self.apply(&self.source.basis_product(i, j)).expect("shape");
                if lhs != self.target.mul_unchecked(&fi, &fj) {
                    return false;
                }
            }
        }
        match (&self.source.unit, &self.target.unit) {
            (Some(u), Some(v)) => &self.apply(u).expect("shape") == v,
            _ => true,
        }
    }

    pub fn kernel(&self) -> Subspace {
        crate::exactla::kernel(&self.matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2c2() -> Algebra {
        // basis 1, g with g² = 1
        let f2 = Field::prime(2).unwrap();
        Algebra::from_products(f2, 2, vector::from_i64(f2, &[1, 0]), vec!["1".into(), "g".into()], |i, j| {
            vector::unit(f2, 2, (i + j) % 2)
        })
        .unwrap()
    }

    #[test]
    fn componentwise_products() {
        let q = Field::Rational;
        let a = Algebra::product_of_fields(q, 3);
        let e1 = a.basis_vector(0);
        let e2 = a.basis_vector(1);
        assert!(vector::is_zero(&a.multiply(&e1, &e2).unwrap()));
        let x = vector::from_i64(q, &[2, -1, 5]);
        assert_eq!(a.multiply(a.unit().unwrap(), &x).unwrap(), x);
        assert!(a.check_algebra().passed());
        assert_eq!(
            a.multiply(&e1, &[q.one()]),
            Err(Error::DimensionMismatch { expected: 3, found: 1 })
        );
    }

    #[test]
    fn one_plus_g_squares_to_zero_in_char_two() {
        let a = f2c2();
        let x = vector::from_i64(a.field(), &[1, 1]);
        assert!(vector::is_zero(&a.multiply(&x, &x).unwrap()));
    }

    #[test]
    fn corrupted_tensor_reports_witness() {
        let q = Field::Rational;
        let c2 = Algebra::from_products(q, 2, vector::unit(q, 2, 0), vec![], |i, j| vector::unit(q, 2, (i + j) % 2)).unwrap();
        assert!(c2.check_algebra().passed());
        let mut t = c2.structure_tensor().to_vec();
        t[0] = q.from_i64(2);
        let bad = Algebra::new(q, 2, t, c2.unit().unwrap().clone(), vec![]).unwrap();
        let report = bad.check_algebra();
        assert!(!report.passed());
        // only e₀e₀ changed, so (e₀e₀)e₀ = e₀(e₀e₀) still holds; the unit
        // law breaks at e₀ and associativity at (0,0,1)
        assert_eq!(report.left_unit, vec![0]);
        assert_eq!(report.associativity.first(), Some(&(0, 0, 1)));
        assert!(!report.associativity.contains(&(0, 0, 0)));
    }

    #[test]
    fn ideal_closure_examples() {
        let q = Field::Rational;
        let a = Algebra::product_of_fields(q, 3);
        let full = a.ideal_closure(&[a.unit().unwrap().clone()], Side::TwoSided).unwrap();
        assert!(full.is_full());
        let e1 = a.ideal_closure(&[a.basis_vector(0)], Side::TwoSided).unwrap();
        assert_eq!(e1, Subspace::span(q, 3, &[a.basis_vector(0)]).unwrap());

        let b = f2c2();
        let x = vector::from_i64(b.field(), &[1, 1]);
        let i = b.ideal_closure(&[x.clone()], Side::TwoSided).unwrap();
        assert_eq!(i, Subspace::span(b.field(), 2, &[x]).unwrap());
    }

    #[test]
    fn quotient_examples() {
        let b = f2c2();
        let f = b.field();
        let (q0, p0) = b.quotient_algebra(&Subspace::zero(f, 2)).unwrap();
        assert_eq!(q0.structure_tensor(), b.structure_tensor());
        assert!(p0.is_algebra_map());
        let (qa, _) = b.quotient_algebra(&Subspace::full(f, 2)).unwrap();
        assert_eq!(qa.dim(), 0);
        let i = Subspace::span(f, 2, &[vector::from_i64(f, &[1, 1])]).unwrap();
        let (q1, p1) = b.quotient_algebra(&i).unwrap();
        assert_eq!(q1.dim(), 1);
        assert_eq!(q1.unit(), Some(&vec![f.one()]));
        assert!(p1.is_algebra_map());
        assert_eq!(p1.kernel(), i);

        let a = Algebra::product_of_fields(Field::Rational, 2);
        let not_ideal = Subspace::span(Field::Rational, 2, &[vector::from_i64(Field::Rational, &[1, 1])]).unwrap();
        assert_eq!(a.quotient_algebra(&not_ideal).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn nilpotency_examples() {
        let b = f2c2();
        let f = b.field();
        assert!(b.is_nilpotent_subspace(&Subspace::zero(f, 2)));
        assert!(!b.is_nilpotent_subspace(&Subspace::span(f, 2, &[b.unit().unwrap().clone()]).unwrap()));
        let i = Subspace::span(f, 2, &[vector::from_i64(f, &[1, 1])]).unwrap();
        assert_eq!(b.nilpotency_index(&i), Some(2));
    }

    #[test]
    fn direct_product_and_subalgebra_closure() {
        let q = Field::Rational;
        let k = Algebra::product_of_fields(q, 1);
        let kkk = k.direct_product(&k).unwrap().direct_product(&k).unwrap();
        assert_eq!(kkk.structure_tensor(), Algebra::product_of_fields(q, 3).structure_tensor());
        assert_eq!(kkk.unit(), Algebra::product_of_fields(q, 3).unit());

        let zero = Algebra::product_of_fields(q, 0);
        let same = kkk.direct_product(&zero).unwrap();
        assert_eq!(same.structure_tensor(), kkk.structure_tensor());

        // ℚC₄ with basis 1, g, g², g³
        let c4 = Algebra::from_products(q, 4, vector::unit(q, 4, 0), vec![], |i, j| vector::unit(q, 4, (i + j) % 4)).unwrap();
        let s = c4.subalgebra_closure(&[c4.basis_vector(2)]).unwrap();
        assert_eq!(s, Subspace::span(q, 4, &[c4.basis_vector(0), c4.basis_vector(2)]).unwrap());
    }

    #[test]
    fn inverse_in_group_algebra() {
        let q = Field::Rational;
        let c2 = Algebra::from_products(q, 2, vector::unit(q, 2, 0), vec![], |i, j| vector::unit(q, 2, (i + j) % 2)).unwrap();
        // (2 + g)^{-1} = (2 − g)/3
        let x = vector::from_i64(q, &[2, 1]);
        let inv = c2.inverse(&x).unwrap().unwrap();
        assert_eq!(inv, vec![q.from_ratio(2, 3).unwrap(), q.from_ratio(-1, 3).unwrap()]);
        assert_eq!(c2.inverse(&vector::from_i64(q, &[1, 1])).unwrap(), None);
    }
}
