//! Finite-dimensional Hopf algebras: group algebras and their duals,
//! Sweedler's four-dimensional algebra, integrals and semisimplicity.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{kernel, vector, Field, Matrix, Scalar, Subspace, Vector};

/// Multiplication table of a finite group on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    cayley: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(cayley: Vec<Vec<usize>>, labels: Vec<String>) -> Result<GroupTable> {
        let n = cayley.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        if cayley.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidGroupTable("table is not an n×n table on 0..n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| cayley[e][x] == x && cayley[x][e] == x))
            .ok_or_else(|| Error::InvalidGroupTable("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| cayley[x][y] == identity && cayley[y][x] == identity)
                .ok_or_else(|| Error::InvalidGroupTable(format!("element {x} has no inverse")))?;
            inverse.push(y);
        }
        let labels = if labels.len() == n {
            labels
        } else {
            (0..n).map(|i| format!("g{i}")).collect()
        };
        Ok(GroupTable {
            cayley,
            identity,
            inverse,
            labels,
        })
    }

    /// `C_n = ⟨g⟩` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Result<GroupTable> {
        let cayley = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        GroupTable::new(cayley, labels)
    }

    /// `G × K` with `(g, k)` at index `g·|K| + k`.
    pub fn product(&self, other: &GroupTable) -> GroupTable {
        let (n, m) = (self.order(), other.order());
        let cayley = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let labels = (0..n * m)
            .map(|x| format!("({},{})", self.labels[x / m], other.labels[x % m]))
            .collect();
        GroupTable::new(cayley, labels).expect("product of groups")
    }

    /// The symmetric group on three letters, generated by a 3-cycle `r`
    /// and a transposition `s` with `s r = r² s`; element `r^i s^j` is at `i + 3j`.
    pub fn symmetric3() -> GroupTable {
        let idx = |i: usize, j: usize| i % 3 + 3 * (j % 2);
        let cayley = (0..6)
            .map(|x| {
                (0..6)
                    .map(|y| {
                        let (i, j) = (x % 3, x / 3);
                        let (k, l) = (y % 3, y / 3);
                        // r^i s^j r^k s^l = r^{i + (−1)^j k} s^{j+l}
                        let rk = if j == 0 { k } else { (3 - k) % 3 };
                        idx(i + rk, j + l)
                    })
                    .collect()
            })
            .collect();
        let labels = ["1", "r", "r^2", "s", "rs", "r^2s"].iter().map(|s| s.to_string()).collect();
        GroupTable::new(cayley, labels).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.cayley.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.cayley
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        !elems.is_empty()
            && elems.iter().all(|&x| x < self.order())
            && elems
                .iter()
                .all(|&a| elems.iter().all(|&b| elems.contains(&self.mul(a, self.inverse(b)))))
    }

    pub fn is_normal_subgroup(&self, elems: &[usize]) -> bool {
        self.is_subgroup(elems)
            && (0..self.order()).all(|g| {
                elems
                    .iter()
                    .all(|&n| elems.contains(&self.mul(self.mul(g, n), self.inverse(g))))
            })
    }
}

/// Hopf algebra on the basis of its underlying algebra, with
/// `Δ(e_i) = Σ d[i][j][k] e_j ⊗ e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    alg: Algebra,
    comul: Vec<Scalar>,
    comul_terms: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vector,
    antipode: Matrix,
}

impl HopfAlgebra {
    /// Shapes and fields are validated; the axioms are left to [`check_hopf`](Self::check_hopf).
    pub fn new(alg: Algebra, comul: Vec<Scalar>, counit: Vector, antipode: Matrix) -> Result<HopfAlgebra> {
        let m = alg.dim();
        let field = alg.field();
        alg.require_unit()?;
        if comul.len() != m * m * m {
            return Err(Error::DimensionMismatch {
                expected: m * m * m,
                found: comul.len(),
            });
        }
        if counit.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: counit.len(),
            });
        }
        if antipode.rows() != m || antipode.cols() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: antipode.rows().max(antipode.cols()),
            });
        }
        for s in comul.iter().chain(&counit) {
            if s.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: s.field(),
                });
            }
        }
        if antipode.field() != field {
            return Err(Error::FieldMismatch {
                left: field,
                right: antipode.field(),
            });
        }
        let comul_terms = (0..m)
            .map(|i| {
                let mut t = Vec::new();
                for j in 0..m {
                    for k in 0..m {
                        let c = &comul[(i * m + j) * m + k];
                        if !c.is_zero() {
                            t.push((j, k, c.clone()));
                        }
                    }
                }
                t
            })
            .collect();
        Ok(HopfAlgebra {
            alg,
            comul,
            comul_terms,
            counit,
            antipode,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn unit(&self) -> &Vector {
        self.alg.unit().expect("Hopf algebras are unital")
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn comul_tensor(&self) -> &[Scalar] {
        &self.comul
    }

    /// Nonzero terms `(j, k, d)` of `Δ(e_i)`.
    pub fn coproduct_terms(&self, i: usize) -> &[(usize, usize, Scalar)] {
        &self.comul_terms[i]
    }

    /// `Δ(h)` in `H⊗H` coordinates `j·dim + k`.
    pub fn coproduct(&self, h: &[Scalar]) -> Vector {
        let m = self.dim();
        let mut out = vector::zeros(self.field(), m * m);
        for (i, hi) in h.iter().enumerate() {
            if hi.is_zero() {
                continue;
            }
            for (j, k, d) in self.coproduct_terms(i) {
                out[j * m + k] = &out[j * m + k] + &(hi * d);
            }
        }
        out
    }

    pub fn epsilon(&self, h: &[Scalar]) -> Scalar {
        vector::dot(self.field(), &self.counit, h)
    }

    /// Index of the basis element equal to the unit, if any.
    pub fn unit_index(&self) -> Option<usize> {
        let u = self.unit();
        (0..self.dim()).find(|&i| *u == vector::unit(self.field(), self.dim(), i))
    }

    fn tensor2_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        // multiplication in H⊗H
        let m = self.dim();
        let mut out = vector::zeros(self.field(), m * m);
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            for (q, yq) in y.iter().enumerate() {
                if yq.is_zero() {
                    continue;
                }
                let s = xp * yq;
                for (a, c1) in self.alg.product_terms(p / m, q / m) {
                    for (b, c2) in self.alg.product_terms(p % m, q % m) {
                        out[a * m + b] = &out[a * m + b] + &(&s * &(c1 * c2));
                    }
                }
            }
        }
        out
    }

    /// Coassociativity, counit laws, multiplicativity of Δ and ε, and the
    /// antipode identities, all on basis elements.
    pub fn check_hopf(&self) -> HopfReport {
        let m = self.dim();
        let f = self.field();
        let mut r = HopfReport::default();
        for i in 0..m {
            let mut left = vector::zeros(f, m * m * m);
            let mut right = vector::zeros(f, m * m * m);
            for (j, k, d) in self.coproduct_terms(i) {
                for (a, b, e) in self.coproduct_terms(*j) {
                    let idx = (a * m + b) * m + k;
                    left[idx] = &left[idx] + &(d * e);
                }
                for (a, b, e) in self.coproduct_terms(*k) {
                    let idx = (j * m + a) * m + b;
                    right[idx] = &right[idx] + &(d * e);
                }
            }
            if left != right {
                r.coassociativity.push(i);
            }

            let e_i = vector::unit(f, m, i);
            let mut via_left = vector::zeros(f, m);
            let mut via_right = vector::zeros(f, m);
            for (j, k, d) in self.coproduct_terms(i) {
                via_left[*k] = &via_left[*k] + &(d * &self.counit[*j]);
                via_right[*j] = &via_right[*j] + &(d * &self.counit[*k]);
            }
            if via_left != e_i || via_right != e_i {
                r.counit.push(i);
            }

            let one = self.unit();
            let eps_one = |x: &Scalar| -> Vector { vector::scale(one, x) };
            let mut s_left = vector::zeros(f, m);
            let mut s_right = vector::zeros(f, m);
            for (j, k, d) in self.coproduct_terms(i) {
                let sj = self.antipode.column(*j);
                let sk = self.antipode.column(*k);
                let p = self.alg.mul_unchecked(&sj, &vector::unit(f, m, *k));
                vector::axpy(&mut s_left, d, &p);
                let q = self.alg.mul_unchecked(&vector::unit(f, m, *j), &sk);
                vector::axpy(&mut s_right, d, &q);
            }
            let target = eps_one(&self.counit[i]);
            if s_left != target || s_right != target {
                r.antipode.push(i);
            }
        }
        for i in 0..m {
            for j in 0..m {
                let prod = self.alg.basis_product(i, j);
                let lhs = self.coproduct(&prod);
                let rhs = self.tensor2_mul(&self.coproduct(&vector::unit(f, m, i)), &self.coproduct(&vector::unit(f, m, j)));
                if lhs != rhs {
                    r.comul_multiplicative.push((i, j));
                }
                if self.epsilon(&prod) != &self.counit[i] * &self.counit[j] {
                    r.counit_multiplicative.push((i, j));
                }
            }
        }
        let one = self.unit().clone();
        let one2 = crate::algebra::tensor_vectors(&one, &one);
        r.comul_unit = self.coproduct(&one) == one2;
        r.counit_unit = self.epsilon(&one).is_one();
        r
    }

    /// `Λ` with `hΛ = ε(h)Λ` for every `h`.
    pub fn left_integrals(&self) -> Subspace {
        let m = self.dim();
        let f = self.field();
        let mut rows = Vec::with_capacity(m * m);
        for i in 0..m {
            let l = self.alg.left_mult_basis(i);
            for r in 0..m {
                let mut row = l.row(r).to_vec();
                row[r] = &row[r] - &self.counit[i];
                rows.push(row);
            }
        }
        if m == 0 {
            return Subspace::zero(f, 0);
        }
        kernel(&Matrix::from_rows(f, m, rows).expect("shape"))
    }

    /// Maschke: `ε(Λ) ≠ 0` for a nonzero left integral.
    pub fn is_semisimple(&self) -> bool {
        self.left_integrals()
            .basis_vectors()
            .next()
            .is_some_and(|l| !self.epsilon(l).is_zero())
    }
}

/// Failures found by [`HopfAlgebra::check_hopf`]; indices are basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub coassociativity: Vec<usize>,
    pub counit: Vec<usize>,
    pub comul_multiplicative: Vec<(usize, usize)>,
    pub comul_unit: bool,
    pub counit_multiplicative: Vec<(usize, usize)>,
    pub counit_unit: bool,
    pub antipode: Vec<usize>,
}

impl Default for HopfReport {
    fn default() -> Self {
        HopfReport {
            coassociativity: Vec::new(),
            counit: Vec::new(),
            comul_multiplicative: Vec::new(),
            comul_unit: true,
            counit_multiplicative: Vec::new(),
            counit_unit: true,
            antipode: Vec::new(),
        }
    }
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.coassociativity.is_empty()
            && self.counit.is_empty()
            && self.comul_multiplicative.is_empty()
            && self.comul_unit
            && self.counit_multiplicative.is_empty()
            && self.counit_unit
            && self.antipode.is_empty()
    }
}

impl fmt::Display for HopfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "hopf axioms: pass");
        }
        writeln!(f, "hopf axioms: FAIL")?;
        if !self.coassociativity.is_empty() {
            writeln!(f, "  coassociativity fails at {:?}", self.coassociativity)?;
        }
        if !self.counit.is_empty() {
            writeln!(f, "  counit law fails at {:?}", self.counit)?;
        }
        if !self.comul_multiplicative.is_empty() || !self.comul_unit {
            writeln!(f, "  Δ not an algebra map: pairs {:?}, unit ok = {}", self.comul_multiplicative, self.comul_unit)?;
        }
        if !self.counit_multiplicative.is_empty() || !self.counit_unit {
            writeln!(f, "  ε not an algebra map: pairs {:?}, unit ok = {}", self.counit_multiplicative, self.counit_unit)?;
        }
        if !self.antipode.is_empty() {
            writeln!(f, "  antipode identity fails at {:?}", self.antipode)?;
        }
        Ok(())
    }
}

/// `𝕜G`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, g: &GroupTable) -> HopfAlgebra {
    let n = g.order();
    let alg = Algebra::from_products(field, n, vector::unit(field, n, g.identity()), g.labels().to_vec(), |a, b| {
        vector::unit(field, n, g.mul(a, b))
    })
    .expect("group algebra");
    let mut comul = vec![field.zero(); n * n * n];
    for a in 0..n {
        comul[(a * n + a) * n + a] = field.one();
    }
    let counit = vec![field.one(); n];
    let cols: Vec<Vector> = (0..n).map(|a| vector::unit(field, n, g.inverse(a))).collect();
    let antipode = Matrix::from_columns(field, n, &cols).expect("shape");
    HopfAlgebra::new(alg, comul, counit, antipode).expect("group algebra")
}

/// `(𝕜G)*` on the dual basis `p_g`.
pub fn dual_group_algebra(field: Field, g: &GroupTable) -> HopfAlgebra {
    let n = g.order();
    let labels = g.labels().iter().map(|l| format!("p_{l}")).collect();
    let alg = Algebra::from_products(field, n, vec![field.one(); n], labels, |a, b| {
        if a == b {
            vector::unit(field, n, a)
        } else {
            vector::zeros(field, n)
        }
    })
    .expect("dual group algebra");
    let mut comul = vec![field.zero(); n * n * n];
    for u in 0..n {
        for v in 0..n {
            comul[(g.mul(u, v) * n + u) * n + v] = field.one();
        }
    }
    let counit = vector::unit(field, n, g.identity());
    let cols: Vec<Vector> = (0..n).map(|a| vector::unit(field, n, g.inverse(a))).collect();
    let antipode = Matrix::from_columns(field, n, &cols).expect("shape");
    HopfAlgebra::new(alg, comul, counit, antipode).expect("dual group algebra")
}

/// `H*` on the dual basis: multiplication and comultiplication swap roles
/// (transposed), unit ↔ counit, `S ↦ Sᵀ`.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let m = h.dim();
    let f = h.field();
    let mut mult = vec![f.zero(); m * m * m];
    let mut comul = vec![f.zero(); m * m * m];
    for k in 0..m {
        for (a, b, d) in h.coproduct_terms(k) {
            // (p_a p_b)(e_k) = d[k][a][b]
            mult[(a * m + b) * m + k] = d.clone();
        }
    }
    for a in 0..m {
        for b in 0..m {
            for (k, c) in h.alg.product_terms(a, b) {
                // Δ(p_k)(e_a ⊗ e_b) = p_k(e_a e_b)
                comul[(k * m + a) * m + b] = c.clone();
            }
        }
    }
    let labels = h.labels().iter().map(|l| format!("{l}*")).collect();
    let alg = Algebra::new(f, m, mult, h.counit.clone(), labels).expect("dual algebra");
    HopfAlgebra::new(alg, comul, h.unit().clone(), h.antipode.transpose()).expect("dual Hopf algebra")
}

/// Sweedler's algebra on `1, g, x, gx` with `g² = 1`, `x² = 0`, `xg = −gx`,
/// `Δ(x) = x⊗1 + g⊗x`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(2));
    }
    // g^a x^b sits at index a + 2b
    let alg = Algebra::from_products(
        field,
        4,
        vector::unit(field, 4, 0),
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        |p, q| {
            let (a, b) = (p % 2, p / 2);
            let (c, d) = (q % 2, q / 2);
            let mut v = vector::zeros(field, 4);
            if b + d < 2 {
                let sign = if b * c == 1 { -1 } else { 1 };
                v[(a + c) % 2 + 2 * (b + d)] = field.from_i64(sign);
            }
            v
        },
    )?;
    let mut comul = vec![field.zero(); 64];
    let mut put = |i: usize, j: usize, k: usize| comul[(i * 4 + j) * 4 + k] = field.one();
    put(0, 0, 0);
    put(1, 1, 1);
    put(2, 2, 0);
    put(2, 1, 2);
    put(3, 3, 1);
    put(3, 0, 3);
    let counit = vector::from_i64(field, &[1, 1, 0, 0]);
    // S(1) = 1, S(g) = g, S(x) = −gx, S(gx) = x
    let antipode = Matrix::from_i64(field, 4, 4, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0])?;
    HopfAlgebra::new(alg, comul, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn group_tables_are_validated() {
        assert!(GroupTable::new(vec![vec![0, 1], vec![1, 1]], vec![]).is_err());
        assert!(GroupTable::new(vec![], vec![]).is_err());
        let c4 = GroupTable::cyclic(4).unwrap();
        assert_eq!(c4.inverse(1), 3);
        assert!(c4.is_normal_subgroup(&[0, 2]));
        assert!(!c4.is_subgroup(&[0, 1]));
        let s3 = GroupTable::symmetric3();
        assert!(s3.is_subgroup(&[0, 3]));
        assert!(!s3.is_normal_subgroup(&[0, 3]));
        assert!(s3.is_normal_subgroup(&[0, 1, 2]));
        let k4 = GroupTable::cyclic(2).unwrap().product(&GroupTable::cyclic(2).unwrap());
        assert!((0..4).all(|x| k4.inverse(x) == x));
    }

    #[test]
    fn standard_hopf_algebras_pass() {
        let c4 = GroupTable::cyclic(4).unwrap();
        assert!(group_algebra(q(), &c4).check_hopf().passed());
        let c2 = GroupTable::cyclic(2).unwrap();
        assert!(dual_group_algebra(q(), &c2).check_hopf().passed());
        assert!(dual_group_algebra(q(), &GroupTable::symmetric3()).check_hopf().passed());
        assert!(group_algebra(Field::prime(3).unwrap(), &GroupTable::symmetric3()).check_hopf().passed());
        let c1 = group_algebra(q(), &GroupTable::cyclic(1).unwrap());
        assert_eq!(c1.dim(), 1);
        assert!(c1.check_hopf().passed());
    }

    #[test]
    fn corrupted_antipode_is_caught_at_g() {
        let h = group_algebra(q(), &GroupTable::cyclic(4).unwrap());
        let mut s = h.antipode().clone();
        // S(g) := g
        s.set(3, 1, q().zero());
        s.set(1, 1, q().one());
        let bad = HopfAlgebra::new(h.algebra().clone(), h.comul_tensor().to_vec(), h.counit().clone(), s).unwrap();
        let r = bad.check_hopf();
        assert!(!r.passed());
        assert_eq!(r.antipode, vec![1]);
    }

    #[test]
    fn duals() {
        let c2 = GroupTable::cyclic(2).unwrap();
        let d = dual_hopf(&group_algebra(q(), &c2));
        let e = dual_group_algebra(q(), &c2);
        assert_eq!(d.algebra().structure_tensor(), e.algebra().structure_tensor());
        assert_eq!(d.comul_tensor(), e.comul_tensor());
        assert_eq!(d.counit(), e.counit());
        assert_eq!(d.unit(), e.unit());
        assert_eq!(d.antipode(), e.antipode());

        let h = group_algebra(q(), &GroupTable::cyclic(4).unwrap());
        let dd = dual_hopf(&dual_hopf(&h));
        assert_eq!(dd.algebra().structure_tensor(), h.algebra().structure_tensor());
        assert_eq!(dd.comul_tensor(), h.comul_tensor());
        assert_eq!(dd.counit(), h.counit());
        assert_eq!(dd.antipode(), h.antipode());

        let s = sweedler_h4(q()).unwrap();
        assert!(dual_hopf(&s).check_hopf().passed());
    }

    #[test]
    fn integrals_and_semisimplicity() {
        let c3 = group_algebra(q(), &GroupTable::cyclic(3).unwrap());
        let li = c3.left_integrals();
        assert_eq!(li, Subspace::span(q(), 3, &[vector::from_i64(q(), &[1, 1, 1])]).unwrap());
        assert!(c3.is_semisimple());

        let c2 = GroupTable::cyclic(2).unwrap();
        let d = dual_group_algebra(q(), &c2);
        assert_eq!(d.left_integrals(), Subspace::span(q(), 2, &[vector::from_i64(q(), &[1, 0])]).unwrap());
        assert!(d.is_semisimple());

        let f2 = Field::prime(2).unwrap();
        let h = group_algebra(f2, &c2);
        assert_eq!(h.left_integrals(), Subspace::span(f2, 2, &[vector::from_i64(f2, &[1, 1])]).unwrap());
        assert!(!h.is_semisimple());
    }

    #[test]
    fn sweedler() {
        assert_eq!(sweedler_h4(Field::prime(2).unwrap()), Err(Error::BadCharacteristic(2)));
        for f in [q(), Field::prime(3).unwrap(), Field::prime(7).unwrap()] {
            let h = sweedler_h4(f).unwrap();
            assert!(h.check_hopf().passed(), "{}", h.check_hopf());
            assert!(!h.is_semisimple());
            assert_eq!(h.left_integrals().dim(), 1);
            let s2 = h.antipode().mul(h.antipode()).unwrap();
            assert_ne!(s2, Matrix::identity(f, 4));
            assert_eq!(s2.mul(&s2).unwrap(), Matrix::identity(f, 4));
            // S²(x) = −x
            assert_eq!(s2.column(2), vector::from_i64(f, &[0, 0, -1, 0]));
        }
    }
}
