//! Smash products `A#H` and the partial smash product `(A#H)(1_A#1_H)`.
//!
//! Elements of `A⊗H` use coordinates `a·dim H + h`.

use crate::algebra::{tensor_vectors, Algebra, AlgebraMap, Side};
use crate::error::{Error, Result};
use crate::exactla::{vector, Field, Matrix, Scalar, Subspace, Vector};
use crate::hopf::dual_hopf;
use crate::paction::PartialAction;

/// `(a⊗h)(b⊗g) = Σ a(h₁·b) ⊗ h₂g` on `A⊗H`. Unital only for global actions.
pub fn build_full_smash(pa: &PartialAction) -> Algebra {
    let h = pa.hopf();
    let a = pa.algebra();
    let (n, m) = (a.dim(), h.dim());
    let f = pa.field();
    let d = n * m;
    let mut mult = vec![f.zero(); d * d * d];
    let cols: Vec<Vec<Vector>> = pa.operators().iter().map(|op| (0..n).map(|j| op.column(j)).collect()).collect();
    for i in 0..n {
        for p in 0..m {
            for j in 0..n {
                for q in 0..m {
                    let base = ((i * m + p) * d + (j * m + q)) * d;
                    for (r, s, c) in h.coproduct_terms(p) {
                        // e_i (h_r·e_j) ⊗ h_s h_q
                        let left = a.mul_unchecked(&vector::unit(f, n, i), &cols[*r][j]);
                        for (k, lk) in left.iter().enumerate() {
                            if lk.is_zero() {
                                continue;
                            }
                            let lc = c * lk;
                            for (t, ht) in h.algebra().product_terms(*s, q) {
                                let idx = base + k * m + t;
                                mult[idx] = &mult[idx] + &(&lc * ht);
                            }
                        }
                    }
                }
            }
        }
    }
    let labels = tensor_labels(a, h.labels());
    if pa.is_global() {
        let unit = tensor_vectors(a.unit().expect("unital"), h.unit());
        Algebra::new(f, d, mult, unit, labels).expect("full smash")
    } else {
        Algebra::new_nonunital(f, d, mult, labels).expect("full smash")
    }
}

fn tensor_labels(a: &Algebra, h: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(a.dim() * h.len());
    for x in a.labels() {
        for y in h {
            out.push(format!("{x}#{y}"));
        }
    }
    out
}

fn describe(field: Field, v: &[Scalar], labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(l.clone());
        } else if *c == field.from_i64(-1) {
            parts.push(format!("-{l}"));
        } else {
            parts.push(format!("{c}·{l}"));
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// The unital algebra `A#_par H` with its embedding of `A` and the global
/// action of `H*`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pa: PartialAction,
    full: Algebra,
    space: Subspace,
    carrier: Algebra,
    include_a: AlgebraMap,
    unit_element: Vector,
    dual_action: PartialAction,
}

/// Right multiplication by `1_A#1_H` followed by restriction to its image.
pub fn build_partial_smash(pa: &PartialAction) -> SmashProduct {
    let full = build_full_smash(pa);
    let a = pa.algebra();
    let h = pa.hopf();
    let f = pa.field();
    let (n, m) = (a.dim(), h.dim());
    let d = n * m;
    let one = tensor_vectors(a.unit().expect("unital"), h.unit());
    let proj = full.right_mult(&one).expect("shape");
    let space = Subspace::image(&proj);
    let basis: Vec<Vector> = space.basis_vectors().map(|r| r.to_vec()).collect();
    let k = basis.len();
    let mut mult = Vec::with_capacity(k * k * k);
    for x in &basis {
        for y in &basis {
            let p = full.mul_unchecked(x, y);
            mult.extend(space.coordinates(&p).expect("shape").expect("carrier is closed"));
        }
    }
    let unit = space.coordinates(&one).expect("shape").expect("1#1 lies in the carrier");
    let full_labels = tensor_labels(a, h.labels());
    let labels = basis.iter().map(|b| describe(f, b, &full_labels)).collect();
    let carrier = Algebra::new(f, k, mult, unit, labels).expect("carrier");

    let incl_cols: Vec<Vector> = (0..n)
        .map(|i| {
            let x = tensor_vectors(&vector::unit(f, n, i), h.unit());
            space.coordinates(&x).expect("shape").expect("a#1 lies in the carrier")
        })
        .collect();
    let include_a = AlgebraMap {
        source: a.clone(),
        target: carrier.clone(),
        matrix: Matrix::from_columns(f, k, &incl_cols).expect("shape"),
    };

    // p_t ⊳ (a#h) = Σ a#h₁ p_t(h₂)
    let dual = dual_hopf(h);
    let ops = (0..m)
        .map(|t| {
            let mut op = Matrix::zero(f, d, d);
            for i in 0..n {
                for q in 0..m {
                    for (r, s, c) in h.coproduct_terms(q) {
                        if *s == t {
                            let (row, col) = (i * m + r, i * m + q);
                            let v = op.get(row, col) + c;
                            op.set(row, col, v);
                        }
                    }
                }
            }
            let cols: Vec<Vector> = basis
                .iter()
                .map(|b| {
                    space
                        .coordinates(&op.apply(b).expect("shape"))
                        .expect("shape")
                        .expect("carrier is H*-stable")
                })
                .collect();
            Matrix::from_columns(f, k, &cols).expect("shape")
        })
        .collect();
    let dual_action = PartialAction::from_operators(dual, carrier.clone(), ops).expect("dual action");
    SmashProduct {
        pa: pa.clone(),
        full,
        space,
        carrier,
        include_a,
        unit_element: one,
        dual_action,
    }
}

impl SmashProduct {
    pub fn action(&self) -> &PartialAction {
        &self.pa
    }

    /// The (possibly non-unital) `A#H` on `A⊗H`.
    pub fn full(&self) -> &Algebra {
        &self.full
    }

    pub fn carrier(&self) -> &Algebra {
        &self.carrier
    }

    /// The carrier as a subspace of `A⊗H`.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Rows express carrier basis elements in `A⊗H` coordinates.
    pub fn coords(&self) -> &Matrix {
        self.space.basis()
    }

    /// `a ↦ a#1_H`.
    pub fn include_a(&self) -> &AlgebraMap {
        &self.include_a
    }

    /// `1_A#1_H` in `A⊗H` coordinates.
    pub fn unit_element(&self) -> &Vector {
        &self.unit_element
    }

    /// Global action of `H*`: `φ ⊳ (a#h) = Σ a#h₁φ(h₂)`.
    pub fn dual_action(&self) -> &PartialAction {
        &self.dual_action
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Carrier coordinates of `x(1#1)` for `x ∈ A⊗H`.
    pub fn project(&self, x: &[Scalar]) -> Result<Vector> {
        let y = self.full.multiply(x, &self.unit_element)?;
        Ok(self.space.coordinates(&y)?.expect("image of the projection"))
    }

    /// `A⊗H` coordinates of a carrier element.
    pub fn to_tensor(&self, c: &[Scalar]) -> Vector {
        self.space.combine(c)
    }

    /// `include_A(A)` as a subspace of the carrier.
    pub fn image_of_a(&self) -> Subspace {
        Subspace::image(&self.include_a.matrix)
    }

    /// `Φ(I) = span{(x#h)(1#1) : x ∈ I}` in carrier coordinates.
    pub fn phi_ideal(&self, ideal: &Subspace) -> Result<Subspace> {
        let a = self.pa.algebra();
        if !a.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::NotAnIdeal);
        }
        if !self.pa.is_h_stable(ideal) {
            return Err(Error::NotHStable);
        }
        let f = a.field();
        let m = self.pa.hopf().dim();
        let mut gens = Vec::with_capacity(ideal.dim() * m);
        for x in ideal.basis_vectors() {
            for j in 0..m {
                gens.push(self.project(&tensor_vectors(x, &vector::unit(f, m, j)))?);
            }
        }
        Subspace::span(f, self.dim(), &gens)
    }

    /// `Ψ(𝓘) = 𝓘 ∩ A`, pulled back to `A`.
    pub fn psi_ideal(&self, ideal: &Subspace) -> Result<Subspace> {
        if !self.carrier.is_ideal(ideal, Side::TwoSided) {
            return Err(Error::NotAnIdeal);
        }
        ideal.preimage(&self.include_a.matrix)
    }

    /// `H*`-stability of a carrier subspace.
    pub fn is_dual_stable(&self, s: &Subspace) -> bool {
        self.dual_action.is_h_stable(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_algebra, GroupTable};
    use crate::paction::{c4_triple, dual_group_idempotent, trivial_action};

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn trivial_action_gives_tensor_product() {
        let h = group_algebra(q(), &GroupTable::cyclic(2).unwrap());
        let a = Algebra::product_of_fields(q(), 3);
        let pa = trivial_action(&h, &a).unwrap();
        let full = build_full_smash(&pa);
        let t = a.tensor_product(h.algebra()).unwrap();
        assert_eq!(full.structure_tensor(), t.structure_tensor());
        assert_eq!(full.unit(), t.unit());
        let sp = build_partial_smash(&pa);
        assert_eq!(sp.dim(), 6);
        assert!(sp.carrier().check_algebra().passed());
        assert!(sp.include_a().is_algebra_map());

        // p_g ⊳ (a#g) = a#g, p_1 ⊳ (a#g) = 0
        let x = sp.space().coordinates(&tensor_vectors(&vector::unit(q(), 3, 0), &vector::unit(q(), 2, 1))).unwrap().unwrap();
        assert_eq!(sp.dual_action().operator(1).apply(&x).unwrap(), x);
        assert!(vector::is_zero(&sp.dual_action().operator(0).apply(&x).unwrap()));

        let i = Subspace::span(q(), 3, &[vector::unit(q(), 3, 0)]).unwrap();
        let phi = sp.phi_ideal(&i).unwrap();
        assert_eq!(phi.dim(), 2);
        assert_eq!(sp.psi_ideal(&phi).unwrap(), i);
    }

    #[test]
    fn dual_group_fixture() {
        let pa = dual_group_idempotent(q(), &GroupTable::cyclic(2).unwrap(), &[0, 1]).unwrap();
        let full = build_full_smash(&pa);
        assert_eq!(full.dim(), 2);
        assert!(full.check_algebra().associativity.is_empty());
        // the RREF basis of e_N·ℚC₂ is b = 1 + g = 2e_N, so b² = 2b and p·b = ½b;
        // (b#p₁)(b#p₁) = Σ_{uv=1} b(p_u·b) # p_v p₁ = b#p₁
        let half = q().from_ratio(1, 2).unwrap();
        assert_eq!(pa.algebra().unit(), Some(&vec![half.clone()]));
        assert_eq!(full.basis_product(0, 0), vec![q().one(), q().zero()]);
        assert_eq!(full.basis_product(0, 1), vec![q().zero(), q().one()]);
        let sp = build_partial_smash(&pa);
        assert_eq!(sp.dim(), 1);
        // both basis elements project to ½ e_N#(p₁ + p_g)
        let span = Subspace::span(q(), 2, &[vec![half.clone(), half.clone()]]).unwrap();
        assert_eq!(sp.carrier().unit(), Some(&vec![half.clone()]));
        assert_eq!(sp.space(), &span);
        assert!(sp.dual_action().is_global());
    }

    #[test]
    fn c4_triple_carrier() {
        let pa = c4_triple(q());
        let full = build_full_smash(&pa);
        assert!(full.check_algebra().associativity.is_empty());
        let sp = build_partial_smash(&pa);
        assert_eq!(sp.dim(), 9);
        let e = |a: usize, h: usize| tensor_vectors(&vector::unit(q(), 3, a), &vector::unit(q(), 4, h));
        let expected = [
            e(0, 0),
            e(1, 0),
            e(2, 0),
            e(0, 1),
            e(1, 1),
            e(0, 2),
            e(2, 2),
            e(1, 3),
            e(2, 3),
        ];
        assert_eq!(sp.space(), &Subspace::span(q(), 12, &expected).unwrap());
        assert!(sp.carrier().check_algebra().passed());
        let dual = sp.dual_action();
        assert!(dual.check_partial_action().passed());
        assert!(dual.is_global());
        assert_eq!(dual.invariant_subalgebra(), sp.image_of_a());
        assert!(sp.phi_ideal(&Subspace::full(q(), 3)).unwrap().is_full());
        assert!(sp.phi_ideal(&Subspace::zero(q(), 3)).unwrap().is_zero());
        assert!(sp.psi_ideal(&Subspace::zero(q(), 9)).unwrap().is_zero());
    }
}
