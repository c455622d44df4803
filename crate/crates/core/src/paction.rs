//! Partial actions of a Hopf algebra on an algebra, and the dual partial
//! coactions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{tensor_vectors, Algebra, Side};
use crate::error::{Error, Result};
use crate::exactla::lattice::is_invariant;
use crate::exactla::{kernel, vector, Field, Matrix, Scalar, Subspace, Vector};
use crate::hopf::{dual_group_algebra, dual_hopf, group_algebra, GroupTable, HopfAlgebra};

/// `h_i · a_j = Σ_k t[i][j][k] a_k`, stored as one `n×n` matrix per basis
/// element of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAction {
    hopf: HopfAlgebra,
    alg: Algebra,
    ops: Vec<Matrix>,
    h_one: Vec<Vector>,
}

impl PartialAction {
    /// `act` is flattened with index `(i·n + j)·n + k`.
    pub fn new(hopf: HopfAlgebra, alg: Algebra, act: Vec<Scalar>) -> Result<PartialAction> {
        let (m, n) = (hopf.dim(), alg.dim());
        if act.len() != m * n * n {
            return Err(Error::DimensionMismatch {
                expected: m * n * n,
                found: act.len(),
            });
        }
        let field = alg.field();
        let ops = (0..m)
            .map(|i| {
                let cols: Vec<Vector> = (0..n)
                    .map(|j| act[(i * n + j) * n..(i * n + j + 1) * n].to_vec())
                    .collect();
                Matrix::from_columns(field, n, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        PartialAction::from_operators(hopf, alg, ops)
    }

    /// One operator `a ↦ h_i·a` per basis element of `H`.
    pub fn from_operators(hopf: HopfAlgebra, alg: Algebra, ops: Vec<Matrix>) -> Result<PartialAction> {
        if hopf.field() != alg.field() {
            return Err(Error::FieldMismatch {
                left: hopf.field(),
                right: alg.field(),
            });
        }
        let unit = alg.require_unit()?.clone();
        if ops.len() != hopf.dim() {
            return Err(Error::DimensionMismatch {
                expected: hopf.dim(),
                found: ops.len(),
            });
        }
        for op in &ops {
            if op.field() != alg.field() {
                return Err(Error::FieldMismatch {
                    left: alg.field(),
                    right: op.field(),
                });
            }
            if op.rows() != alg.dim() || op.cols() != alg.dim() {
                return Err(Error::DimensionMismatch {
                    expected: alg.dim(),
                    found: op.rows().max(op.cols()),
                });
            }
        }
        let h_one = ops.iter().map(|op| op.apply(&unit).expect("shape")).collect();
        Ok(PartialAction {
            hopf,
            alg,
            ops,
            h_one,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    /// Matrix of `a ↦ h_i·a`.
    pub fn operator(&self, i: usize) -> &Matrix {
        &self.ops[i]
    }

    pub fn operators(&self) -> &[Matrix] {
        &self.ops
    }

    /// `h_i · 1_A`.
    pub fn h_one(&self, i: usize) -> &Vector {
        &self.h_one[i]
    }

    /// `h · a` for arbitrary coordinates.
    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Result<Vector> {
        if h.len() != self.hopf.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.hopf.dim(),
                found: h.len(),
            });
        }
        let mut out = vector::zeros(self.field(), self.alg.dim());
        for (i, hi) in h.iter().enumerate() {
            if !hi.is_zero() {
                vector::axpy(&mut out, hi, &self.ops[i].apply(a)?);
            }
        }
        Ok(out)
    }

    /// Flattened action tensor, index `(i·n + j)·n + k`.
    pub fn tensor(&self) -> Vec<Scalar> {
        let n = self.alg.dim();
        let mut t = Vec::with_capacity(self.ops.len() * n * n);
        for op in &self.ops {
            for j in 0..n {
                t.extend(op.column(j));
            }
        }
        t
    }

    /// Operator of `(h_q h_l)·` expanded in the basis.
    fn product_operator_apply(&self, q: usize, l: usize, x: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.field(), self.alg.dim());
        for (r, c) in self.hopf.algebra().product_terms(q, l) {
            vector::axpy(&mut out, c, &self.ops[*r].apply(x).expect("shape"));
        }
        out
    }

    /// PA1, PA3 and PA4 on every basis tuple, PA2 on a fixed pseudo-random
    /// sample of basis triples.
    pub fn check_partial_action(&self) -> ActionReport {
        let (m, n) = (self.hopf.dim(), self.alg.dim());
        let f = self.field();
        let mut r = ActionReport::default();
        let unit_idx = self.hopf.unit_index();
        let one_h = self.hopf.unit().clone();
        for j in 0..n {
            let e = vector::unit(f, n, j);
            let lhs = match unit_idx {
                Some(u) => self.ops[u].apply(&e).expect("shape"),
                None => self.act(&one_h, &e).expect("shape"),
            };
            if lhs != e {
                r.pa1.push(j);
            }
        }
        // columns[p][j] = h_p · e_j
        let columns: Vec<Vec<Vector>> = self.ops.iter().map(|op| (0..n).map(|j| op.column(j)).collect()).collect();
        for i in 0..m {
            for j in 0..n {
                for k in 0..n {
                    let lhs = columns[i]
                        .iter()
                        .zip(self.alg.basis_product(j, k))
                        .fold(vector::zeros(f, n), |mut acc, (col, c)| {
                            vector::axpy(&mut acc, &c, col);
                            acc
                        });
                    let mut rhs = vector::zeros(f, n);
                    for (p, q, d) in self.hopf.coproduct_terms(i) {
                        let prod = self.alg.mul_unchecked(&columns[*p][j], &columns[*q][k]);
                        vector::axpy(&mut rhs, d, &prod);
                    }
                    if lhs != rhs {
                        r.pa3.push((i, j, k));
                    }
                }
            }
        }
        for i in 0..m {
            for l in 0..m {
                for k in 0..n {
                    let lhs = self.ops[i].apply(&columns[l][k]).expect("shape");
                    let mut rhs = vector::zeros(f, n);
                    for (p, q, d) in self.hopf.coproduct_terms(i) {
                        let gb = self.product_operator_apply(*q, l, &vector::unit(f, n, k));
                        let prod = self.alg.mul_unchecked(&self.h_one[*p], &gb);
                        vector::axpy(&mut rhs, d, &prod);
                    }
                    if lhs != rhs {
                        r.pa4.push((i, l, k));
                    }
                }
            }
        }
        // PA2: h·(a(g·b)) = Σ (h₁·a)((h₂g)·b)
        if m > 0 && n > 0 {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..PA2_SAMPLES {
                let (i, l) = (rng.gen_range(0..m), rng.gen_range(0..m));
                let (j, k) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let inner = self.alg.mul_unchecked(&vector::unit(f, n, j), &columns[l][k]);
                let lhs = self.ops[i].apply(&inner).expect("shape");
                let mut rhs = vector::zeros(f, n);
                for (p, q, d) in self.hopf.coproduct_terms(i) {
                    let gb = self.product_operator_apply(*q, l, &vector::unit(f, n, k));
                    vector::axpy(&mut rhs, d, &self.alg.mul_unchecked(&columns[*p][j], &gb));
                }
                if lhs != rhs {
                    r.pa2.push((i, j, l, k));
                }
            }
        }
        r
    }

    /// `h · 1_A = ε(h) 1_A` for every basis `h`.
    pub fn is_global(&self) -> bool {
        let unit = self.alg.unit().expect("unital");
        (0..self.hopf.dim()).all(|i| self.h_one[i] == vector::scale(unit, &self.hopf.counit()[i]))
    }

    /// `{a : h·a = a(h·1_A) for all h}`.
    pub fn invariant_subalgebra(&self) -> Subspace {
        let n = self.alg.dim();
        let f = self.field();
        let mut rows = Vec::new();
        for i in 0..self.hopf.dim() {
            let rm = self.alg.right_mult(&self.h_one[i]).expect("shape");
            let diff = self.ops[i].add(&rm.scale(&f.from_i64(-1))).expect("shape");
            rows.extend(diff.row_vectors().map(|r| r.to_vec()));
        }
        if rows.is_empty() {
            return Subspace::full(f, n);
        }
        kernel(&Matrix::from_rows(f, n, rows).expect("shape"))
    }

    /// `{x ∈ X : h·x ∈ X for all h}` for an arbitrary subspace `X`.
    pub fn colon(&self, x: &Subspace) -> Result<Subspace> {
        let mut out = x.clone();
        for op in &self.ops {
            out = out.intersect(&x.preimage(op)?)?;
        }
        Ok(out)
    }

    /// `(I:H)`, the largest H-stable ideal inside the ideal `I`.
    pub fn colon_ideal(&self, ideal: &Subspace) -> Result<Subspace> {
        if !self.alg.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::NotAnIdeal);
        }
        let c = self.colon(ideal)?;
        debug_assert!(self.alg.is_ideal(&c, Side::TwoSided) && self.is_h_stable(&c));
        Ok(c)
    }

    /// `H · I ⊆ I`.
    pub fn is_h_stable(&self, s: &Subspace) -> bool {
        s.field() == self.field() && s.ambient() == self.alg.dim() && is_invariant(&self.ops, s)
    }

    /// The induced action on `A/I` together with the projection.
    pub fn quotient_action(&self, ideal: &Subspace) -> Result<(PartialAction, Matrix)> {
        if !self.alg.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::NotAnIdeal);
        }
        if !self.is_h_stable(ideal) {
            return Err(Error::NotHStable);
        }
        let (q, proj) = self.alg.quotient_algebra(ideal)?;
        let comp = ideal.complement_indices();
        let ops = self
            .ops
            .iter()
            .map(|op| {
                let cols: Vec<Vector> = comp
                    .iter()
                    .map(|&c| proj.matrix.apply(&op.column(c)).expect("shape"))
                    .collect();
                Matrix::from_columns(self.field(), comp.len(), &cols).expect("shape")
            })
            .collect();
        let pa = PartialAction::from_operators(self.hopf.clone(), q, ops)?;
        Ok((pa, proj.matrix))
    }

    /// `ρ(a) = Σ_i (h_i·a) ⊗ p_i` with values in `A ⊗ H*`.
    pub fn to_coaction(&self) -> PartialCoaction {
        let (m, n) = (self.hopf.dim(), self.alg.dim());
        let f = self.field();
        let cols: Vec<Vector> = (0..n)
            .map(|j| {
                let mut v = vector::zeros(f, n * m);
                for i in 0..m {
                    for (k, c) in self.ops[i].column(j).into_iter().enumerate() {
                        v[k * m + i] = c;
                    }
                }
                v
            })
            .collect();
        PartialCoaction {
            alg: self.alg.clone(),
            hopf: dual_hopf(&self.hopf),
            rho: Matrix::from_columns(f, n * m, &cols).expect("shape"),
        }
    }

    /// Direct product of two partial actions of the same `H`.
    pub fn direct_product(&self, other: &PartialAction) -> Result<PartialAction> {
        if self.hopf != other.hopf {
            return Err(Error::AxiomViolation("direct product needs a common Hopf algebra".into()));
        }
        let alg = self.alg.direct_product(&other.alg)?;
        let (n1, n2) = (self.alg.dim(), other.alg.dim());
        let f = self.field();
        let ops = self
            .ops
            .iter()
            .zip(&other.ops)
            .map(|(a, b)| {
                let mut m = Matrix::zero(f, n1 + n2, n1 + n2);
                for r in 0..n1 {
                    for c in 0..n1 {
                        m.set(r, c, a.get(r, c).clone());
                    }
                }
                for r in 0..n2 {
                    for c in 0..n2 {
                        m.set(n1 + r, n1 + c, b.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        PartialAction::from_operators(self.hopf.clone(), alg, ops)
    }
}

const PA2_SAMPLES: usize = 64;

/// Failures found by [`PartialAction::check_partial_action`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActionReport {
    /// Basis `a_j` with `1_H·a_j ≠ a_j`.
    pub pa1: Vec<usize>,
    /// `(h_i, a_j, a_k)` violating `h·(ab) = Σ(h₁·a)(h₂·b)`.
    pub pa3: Vec<(usize, usize, usize)>,
    /// `(h_i, h_l, a_k)` violating `h·(g·b) = Σ(h₁·1)((h₂g)·b)`.
    pub pa4: Vec<(usize, usize, usize)>,
    /// Sampled `(h_i, a_j, h_l, a_k)` violating `h·(a(g·b)) = Σ(h₁·a)((h₂g)·b)`.
    pub pa2: Vec<(usize, usize, usize, usize)>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.pa1.is_empty() && self.pa2.is_empty() && self.pa3.is_empty() && self.pa4.is_empty()
    }
}

impl fmt::Display for ActionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "partial action axioms: pass");
        }
        writeln!(f, "partial action axioms: FAIL")?;
        if !self.pa1.is_empty() {
            writeln!(f, "  PA1 fails at a = {:?}", self.pa1)?;
        }
        if let Some(w) = self.pa2.first() {
            writeln!(f, "  PA2 fails on {} samples, first (h, a, g, b) = {:?}", self.pa2.len(), w)?;
        }
        if let Some(w) = self.pa3.first() {
            writeln!(f, "  PA3 fails on {} triples, first (h, a, b) = {:?}", self.pa3.len(), w)?;
        }
        if let Some(w) = self.pa4.first() {
            writeln!(f, "  PA4 fails on {} triples, first (h, g, b) = {:?}", self.pa4.len(), w)?;
        }
        Ok(())
    }
}

/// `h·a = ε(h)a`.
pub fn trivial_action(hopf: &HopfAlgebra, alg: &Algebra) -> Result<PartialAction> {
    let n = alg.dim();
    let ops = hopf
        .counit()
        .iter()
        .map(|e| Matrix::identity(alg.field(), n).scale(e))
        .collect();
    PartialAction::from_operators(hopf.clone(), alg.clone(), ops)
}

/// `C₄` acting partially on `𝕜³`: `g·e₁ = 0, g·e₂ = e₁, g·e₃ = e₂`,
/// `g²·e₁ = e₃, g²·e₂ = 0, g²·e₃ = e₁`, `g³·e₁ = e₂, g³·e₂ = e₃, g³·e₃ = 0`.
pub fn c4_triple(field: Field) -> PartialAction {
    let h = group_algebra(field, &GroupTable::cyclic(4).expect("C4"));
    let a = Algebra::product_of_fields(field, 3);
    // columns are images of e₁, e₂, e₃
    let ops = [
        [0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 1, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 1, 0],
    ];
    let mut mats: Vec<Matrix> = ops
        .iter()
        .map(|e| Matrix::from_i64(field, 3, 3, e).expect("shape"))
        .collect();
    mats[0] = Matrix::identity(field, 3);
    PartialAction::from_operators(h, a, mats).expect("C4 triple")
}

/// `h·a := e(h ⊳ a)` on the algebra `eB`, for a global action on `B` and an
/// idempotent `e` that is the identity of `eB`.
pub fn induce_from_ideal(global: &PartialAction, e: &[Scalar]) -> Result<PartialAction> {
    let b = global.algebra();
    let f = b.field();
    if b.multiply(e, e)? != e {
        return Err(Error::NotIdempotent);
    }
    let eb = Subspace::image(&b.left_mult(e)?);
    for x in eb.basis_vectors() {
        if b.mul_unchecked(e, x) != x || b.mul_unchecked(x, e) != x {
            return Err(Error::NotRightIdealUnit);
        }
    }
    let alg = b.restrict(&eb, e)?;
    let d = eb.dim();
    let basis: Vec<Vector> = eb.basis_vectors().map(|r| r.to_vec()).collect();
    let ops = global
        .operators()
        .iter()
        .map(|op| {
            let cols = basis
                .iter()
                .map(|x| {
                    let y = b.mul_unchecked(e, &op.apply(x)?);
                    eb.coordinates(&y)?.ok_or(Error::NotRightIdealUnit)
                })
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_columns(f, d, &cols)
        })
        .collect::<Result<Vec<_>>>()?;
    PartialAction::from_operators(global.hopf().clone(), alg, ops)
}

/// The global action `p_g ⇀ h = δ_{g,h} h` of `(𝕜G)*` on `𝕜G`.
pub fn dual_group_regular_action(field: Field, g: &GroupTable) -> PartialAction {
    let h = dual_group_algebra(field, g);
    let b = group_algebra(field, g).algebra().clone();
    let n = g.order();
    let ops = (0..n)
        .map(|x| {
            let mut m = Matrix::zero(field, n, n);
            m.set(x, x, field.one());
            m
        })
        .collect();
    PartialAction::from_operators(h, b, ops).expect("regular dual action")
}

/// `(𝕜G)*` acting partially on `e_N 𝕜G`, `e_N = |N|⁻¹ Σ_{n∈N} n`.
pub fn dual_group_idempotent(field: Field, g: &GroupTable, subgroup: &[usize]) -> Result<PartialAction> {
    if !g.is_normal_subgroup(subgroup) {
        return Err(Error::BadSubgroup(format!("{subgroup:?} is not a normal subgroup")));
    }
    let mut elems = subgroup.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let order = elems.len();
    let p = field.characteristic();
    if p != 0 && order as u64 % p == 0 {
        return Err(Error::CharDividesOrder {
            characteristic: p,
            order,
        });
    }
    let inv = field.from_ratio(1, order as i64)?;
    let mut e = vector::zeros(field, g.order());
    for &x in &elems {
        e[x] = inv.clone();
    }
    induce_from_ideal(&dual_group_regular_action(field, g), &e)
}

/// Right partial coaction `ρ: A → A ⊗ C`, coordinates `a·dim C + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialCoaction {
    alg: Algebra,
    hopf: HopfAlgebra,
    rho: Matrix,
}

impl PartialCoaction {
    pub fn new(alg: Algebra, hopf: HopfAlgebra, rho: Matrix) -> Result<PartialCoaction> {
        let (n, m) = (alg.dim(), hopf.dim());
        if rho.rows() != n * m || rho.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n * m,
                found: rho.rows(),
            });
        }
        alg.require_unit()?;
        Ok(PartialCoaction { alg, hopf, rho })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// The coacting Hopf algebra.
    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vector> {
        self.rho.apply(x)
    }

    /// Product in `A ⊗ C`.
    fn tensor_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let (n, m) = (self.alg.dim(), self.hopf.dim());
        let c = self.hopf.algebra();
        let mut out = vector::zeros(self.alg.field(), n * m);
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
                    for (b, c2) in c.product_terms(p % m, q % m) {
                        out[a * m + b] = &out[a * m + b] + &(&s * &(c1 * c2));
                    }
                }
            }
        }
        out
    }

    /// PC1 and PC3 on basis elements, PC2 on basis pairs.
    pub fn check(&self) -> CoactionReport {
        let (n, m) = (self.alg.dim(), self.hopf.dim());
        let f = self.alg.field();
        let mut r = CoactionReport::default();
        let rho_cols: Vec<Vector> = (0..n).map(|j| self.rho.column(j)).collect();
        let eps = self.hopf.counit();
        for (j, col) in rho_cols.iter().enumerate() {
            let mut back = vector::zeros(f, n);
            for a in 0..n {
                for c in 0..m {
                    back[a] = &back[a] + &(&col[a * m + c] * &eps[c]);
                }
            }
            if back != vector::unit(f, n, j) {
                r.pc1.push(j);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.rho.apply(&self.alg.basis_product(i, j)).expect("shape");
                if lhs != self.tensor_mul(&rho_cols[i], &rho_cols[j]) {
                    r.pc2.push((i, j));
                }
            }
        }
        // PC3 in A ⊗ C ⊗ C, index (a·m + c)·m + d
        let one = self.rho.apply(self.alg.unit().expect("unital")).expect("shape");
        let one_h = self.hopf.unit();
        let rho_one_1 = tensor_vectors(&one, one_h);
        for (j, col) in rho_cols.iter().enumerate() {
            let mut lhs = vector::zeros(f, n * m * m);
            let mut delta = vector::zeros(f, n * m * m);
            for a in 0..n {
                for c in 0..m {
                    let s = &col[a * m + c];
                    if s.is_zero() {
                        continue;
                    }
                    for (idx, t) in rho_cols[a].iter().enumerate() {
                        if !t.is_zero() {
                            let k = idx * m + c;
                            lhs[k] = &lhs[k] + &(s * t);
                        }
                    }
                    for (p, q, d) in self.hopf.coproduct_terms(c) {
                        let k = (a * m + p) * m + q;
                        delta[k] = &delta[k] + &(s * d);
                    }
                }
            }
            let rhs = self.triple_mul(&rho_one_1, &delta);
            if lhs != rhs {
                r.pc3.push(j);
            }
        }
        r
    }

    fn triple_mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let (n, m) = (self.alg.dim(), self.hopf.dim());
        let c = self.hopf.algebra();
        let mut out = vector::zeros(self.alg.field(), n * m * m);
        let split = |p: usize| (p / (m * m), (p / m) % m, p % m);
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            let (a1, c1, d1) = split(p);
            for (q, yq) in y.iter().enumerate() {
                if yq.is_zero() {
                    continue;
                }
                let (a2, c2, d2) = split(q);
                let s = xp * yq;
                for (a, ka) in self.alg.product_terms(a1, a2) {
                    for (cc, kc) in c.product_terms(c1, c2) {
                        for (dd, kd) in c.product_terms(d1, d2) {
                            let k = (a * m + cc) * m + dd;
                            out[k] = &out[k] + &(&s * &(ka * &(kc * kd)));
                        }
                    }
                }
            }
        }
        out
    }

    /// `{x : ρ(x) = (x ⊗ 1)ρ(1)}`.
    pub fn coinvariant_subalgebra(&self) -> Subspace {
        let (n, m) = (self.alg.dim(), self.hopf.dim());
        let f = self.alg.field();
        let one = self.rho.apply(self.alg.unit().expect("unital")).expect("shape");
        let cols: Vec<Vector> = (0..n)
            .map(|j| {
                let x1 = tensor_vectors(&vector::unit(f, n, j), self.hopf.unit());
                let rhs = self.tensor_mul(&x1, &one);
                vector::sub(&self.rho.column(j), &rhs)
            })
            .collect();
        kernel(&Matrix::from_columns(f, n * m, &cols).expect("shape"))
    }

    /// Recovers `h·a = Σ a₀ a₁(h)` when the coacting algebra is `H*`.
    pub fn to_action(&self, hopf: &HopfAlgebra) -> Result<PartialAction> {
        if dual_hopf(hopf) != self.hopf {
            return Err(Error::AxiomViolation("coacting algebra is not the dual of the given Hopf algebra".into()));
        }
        let (n, m) = (self.alg.dim(), hopf.dim());
        let f = self.alg.field();
        let ops = (0..m)
            .map(|i| {
                let cols: Vec<Vector> = (0..n)
                    .map(|j| (0..n).map(|k| self.rho.get(k * m + i, j).clone()).collect())
                    .collect();
                Matrix::from_columns(f, n, &cols).expect("shape")
            })
            .collect();
        PartialAction::from_operators(hopf.clone(), self.alg.clone(), ops)
    }
}

/// Failures found by [`PartialCoaction::check`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoactionReport {
    pub pc1: Vec<usize>,
    pub pc2: Vec<(usize, usize)>,
    pub pc3: Vec<usize>,
}

impl CoactionReport {
    pub fn passed(&self) -> bool {
        self.pc1.is_empty() && self.pc2.is_empty() && self.pc3.is_empty()
    }
}

impl fmt::Display for CoactionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "partial coaction axioms: pass");
        }
        write!(f, "partial coaction axioms: FAIL (PC1 {:?}, PC2 {:?}, PC3 {:?})", self.pc1, self.pc2, self.pc3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn c4_triple_matches_table() {
        let pa = c4_triple(q());
        assert!(pa.check_partial_action().passed());
        assert!(!pa.is_global());
        assert_eq!(pa.h_one(1), &vector::from_i64(q(), &[1, 1, 0]));
        let e = |i| vector::unit(q(), 3, i);
        let z = vector::zeros(q(), 3);
        let table = [
            (1, 0, &z),
            (1, 1, &e(0)),
            (1, 2, &e(1)),
            (2, 0, &e(2)),
            (2, 1, &z),
            (2, 2, &e(0)),
            (3, 0, &e(1)),
            (3, 1, &e(2)),
            (3, 2, &z),
        ];
        for (h, a, want) in table {
            assert_eq!(&pa.operator(h).column(a), want);
        }
    }

    #[test]
    fn corrupted_c4_triple_fails_pa4() {
        let pa = c4_triple(q());
        let mut ops = pa.operators().to_vec();
        // g·e₁ := e₁
        ops[1].set(0, 0, q().one());
        let bad = PartialAction::from_operators(pa.hopf().clone(), pa.algebra().clone(), ops).unwrap();
        let r = bad.check_partial_action();
        assert!(!r.pa4.is_empty());
        assert!(r.pa4.iter().any(|&(h, g, _)| h == 1 || g == 1));
    }

    #[test]
    fn dual_group_example() {
        let c2 = GroupTable::cyclic(2).unwrap();
        let pa = dual_group_idempotent(q(), &c2, &[0, 1]).unwrap();
        assert_eq!(pa.algebra().dim(), 1);
        let half = q().from_ratio(1, 2).unwrap();
        assert_eq!(pa.operator(0).get(0, 0), &half);
        assert_eq!(pa.operator(1).get(0, 0), &half);
        assert!(pa.check_partial_action().passed());
        assert!(!pa.is_global());
        assert!(pa.invariant_subalgebra().is_full());

        assert!(matches!(dual_group_idempotent(Field::prime(2).unwrap(), &c2, &[0, 1]), Err(Error::CharDividesOrder { .. })));
        assert!(matches!(dual_group_idempotent(q(), &GroupTable::symmetric3(), &[0, 3]), Err(Error::BadSubgroup(_))));
        let s3 = dual_group_idempotent(q(), &GroupTable::symmetric3(), &[0, 1, 2]).unwrap();
        assert!(s3.check_partial_action().passed());
    }

    #[test]
    fn induce_with_unit_is_the_global_action() {
        let g = dual_group_regular_action(q(), &GroupTable::cyclic(3).unwrap());
        assert!(g.is_global());
        let same = induce_from_ideal(&g, g.algebra().unit().unwrap()).unwrap();
        assert_eq!(same.operators(), g.operators());
        let not_idem = vector::from_i64(q(), &[1, 1, 0]);
        assert_eq!(induce_from_ideal(&g, &not_idem).unwrap_err(), Error::NotIdempotent);
    }

    #[test]
    fn colon_and_stability() {
        let pa = c4_triple(q());
        let a = pa.algebra();
        assert!(pa.colon_ideal(&Subspace::full(q(), 3)).unwrap().is_full());
        let i = a.ideal_closure(&[vector::unit(q(), 3, 0)], Side::TwoSided).unwrap();
        assert!(!pa.is_h_stable(&i));
        assert!(pa.colon_ideal(&i).unwrap().is_zero());
        assert_eq!(pa.quotient_action(&i).unwrap_err(), Error::NotHStable);

        let (q0, _) = pa.quotient_action(&Subspace::zero(q(), 3)).unwrap();
        assert_eq!(q0.operators(), pa.operators());

        let h = group_algebra(q(), &GroupTable::cyclic(2).unwrap());
        let t = trivial_action(&h, &Algebra::product_of_fields(q(), 3)).unwrap();
        assert!(t.is_global());
        assert_eq!(t.colon_ideal(&i).unwrap(), i);
        let (tq, _) = t.quotient_action(&i).unwrap();
        assert!(tq.is_global() && tq.check_partial_action().passed());
        assert!(t.invariant_subalgebra().is_full());
    }

    #[test]
    fn invariant_subalgebra_of_c4_triple() {
        let pa = c4_triple(q());
        let inv = pa.invariant_subalgebra();
        assert!(inv.contains(pa.algebra().unit().unwrap()).unwrap());
        assert!(pa.algebra().is_subalgebra(&inv));
        // regression: h·a = a(h·1) forces a ∈ span{1}
        assert_eq!(inv, Subspace::span(q(), 3, &[vector::from_i64(q(), &[1, 1, 1])]).unwrap());
    }

    #[test]
    fn coaction_round_trip() {
        for pa in [
            c4_triple(q()),
            dual_group_idempotent(q(), &GroupTable::cyclic(2).unwrap(), &[0, 1]).unwrap(),
            trivial_action(&group_algebra(q(), &GroupTable::cyclic(2).unwrap()), &Algebra::product_of_fields(q(), 2)).unwrap(),
        ] {
            let pc = pa.to_coaction();
            assert!(pc.check().passed(), "{}", pc.check());
            let back = pc.to_action(pa.hopf()).unwrap();
            assert_eq!(back.tensor(), pa.tensor());
        }
        let h = group_algebra(q(), &GroupTable::cyclic(2).unwrap());
        let t = trivial_action(&h, &Algebra::product_of_fields(q(), 2)).unwrap();
        let pc = t.to_coaction();
        // ρ(1) = 1 ⊗ 1_{H*}
        let one = pc.apply(t.algebra().unit().unwrap()).unwrap();
        assert_eq!(one, tensor_vectors(t.algebra().unit().unwrap(), pc.hopf().unit()));
        assert!(pc.coinvariant_subalgebra().is_full());
    }
}
