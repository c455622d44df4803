//! Jacobson and prime radicals, their H-equivariant versions, and the
//! H-(semi)primality predicates.
//!
//! For a finite-dimensional algebra the Jacobson radical is the largest
//! nilpotent ideal and coincides with the prime radical.

use std::fmt;

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::exactla::lattice::{closure_of_vectors, projective_points};
use crate::exactla::{enumerate_invariant_subspaces, kernel, EnumCaps, Matrix, Subspace};
use crate::paction::PartialAction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RadicalMethod {
    /// Kernel of `(x, y) ↦ tr(L_{xy})`; needs characteristic 0 or above the dimension.
    TraceForm,
    /// Sum of all nilpotent principal ideals, by exhaustion over a small finite field.
    BruteNilpotent,
}

impl fmt::Display for RadicalMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RadicalMethod::TraceForm => "trace-form",
            RadicalMethod::BruteNilpotent => "brute-nilpotent",
        })
    }
}

/// Method selection and the limits of exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadicalOptions {
    /// `None` picks the trace form when it is valid, else brute force.
    pub method: Option<RadicalMethod>,
    pub dim_cap: usize,
    /// Largest field order brute force will enumerate.
    pub field_cap: u64,
    /// Limits for ideal and submodule lattices.
    pub enumeration: EnumCaps,
}

impl Default for RadicalOptions {
    fn default() -> Self {
        RadicalOptions {
            method: None,
            dim_cap: 6,
            field_cap: 5,
            enumeration: EnumCaps::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub radical: Subspace,
    pub method: RadicalMethod,
    /// Smallest `m` with `J^m = 0`.
    pub nilpotency_index: usize,
}

fn trace_form_valid(a: &Algebra) -> bool {
    let p = a.field().characteristic();
    p == 0 || p > a.dim() as u64
}

fn choose(a: &Algebra, opts: &RadicalOptions) -> Result<RadicalMethod> {
    let field = a.field();
    let brute_ok = field.is_finite() && a.dim() <= opts.dim_cap && field.order().is_some_and(|q| q <= opts.field_cap);
    let unsupported = || Error::UnsupportedCharacteristic {
        field,
        dim: a.dim(),
        dim_cap: opts.dim_cap,
        field_cap: opts.field_cap,
    };
    match opts.method {
        Some(RadicalMethod::TraceForm) if trace_form_valid(a) => Ok(RadicalMethod::TraceForm),
        Some(RadicalMethod::BruteNilpotent) if brute_ok => Ok(RadicalMethod::BruteNilpotent),
        Some(_) => Err(unsupported()),
        None if trace_form_valid(a) => Ok(RadicalMethod::TraceForm),
        None if brute_ok => Ok(RadicalMethod::BruteNilpotent),
        None => Err(unsupported()),
    }
}

fn trace_radical(a: &Algebra) -> Subspace {
    let n = a.dim();
    let f = a.field();
    let traces: Vec<_> = (0..n).map(|k| a.left_mult_basis(k).trace()).collect();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let row = (0..n)
            .map(|j| {
                a.product_terms(i, j)
                    .iter()
                    .fold(f.zero(), |acc, (k, c)| &acc + &(c * &traces[*k]))
            })
            .collect();
        rows.push(row);
    }
    if n == 0 {
        return Subspace::zero(f, 0);
    }
    kernel(&Matrix::from_rows(f, n, rows).expect("shape"))
}

fn brute_radical(a: &Algebra) -> Result<Subspace> {
    let f = a.field();
    let n = a.dim();
    let ops = a.ideal_operators(Side::TwoSided);
    let mut j = Subspace::zero(f, n);
    for v in projective_points(f, n)? {
        if j.contains(&v)? {
            continue;
        }
        let ideal = closure_of_vectors(f, n, &ops, &[v])?;
        if a.is_nilpotent_subspace(&ideal) {
            j = j.sum(&ideal)?;
        }
    }
    Ok(j)
}

fn radical_unverified(a: &Algebra, opts: &RadicalOptions) -> Result<(Subspace, RadicalMethod)> {
    a.require_unit()?;
    let method = choose(a, opts)?;
    let r = match method {
        RadicalMethod::TraceForm => trace_radical(a),
        RadicalMethod::BruteNilpotent => brute_radical(a)?,
    };
    Ok((r, method))
}

/// `J(A)`, with its postconditions re-verified: a nilpotent two-sided ideal
/// whose quotient has zero radical.
pub fn jacobson_radical(a: &Algebra, opts: &RadicalOptions) -> Result<RadicalReport> {
    let (radical, method) = radical_unverified(a, opts)?;
    if !a.is_ideal(&radical, Side::TwoSided) {
        return Err(Error::AxiomViolation("computed radical is not an ideal".into()));
    }
    let nilpotency_index = a
        .nilpotency_index(&radical)
        .ok_or_else(|| Error::AxiomViolation("computed radical is not nilpotent".into()))?;
    let (quotient, _) = a.quotient_algebra(&radical)?;
    // the quotient has no larger dimension, so the same method choice applies
    let (rq, _) = radical_unverified(&quotient, opts)?;
    if !rq.is_zero() {
        return Err(Error::AxiomViolation("quotient by the radical is not semiprimitive".into()));
    }
    Ok(RadicalReport {
        radical,
        method,
        nilpotency_index,
    })
}

/// `P(A) = J(A)` in finite dimension.
pub fn prime_radical(a: &Algebra, opts: &RadicalOptions) -> Result<Subspace> {
    Ok(jacobson_radical(a, opts)?.radical)
}

/// `J_H(A) = (J(A):H)`.
pub fn h_jacobson_radical(pa: &PartialAction, opts: &RadicalOptions) -> Result<Subspace> {
    pa.colon_ideal(&jacobson_radical(pa.algebra(), opts)?.radical)
}

/// `P_H(A) = (P(A):H)`.
pub fn h_prime_radical(pa: &PartialAction, opts: &RadicalOptions) -> Result<Subspace> {
    pa.colon_ideal(&prime_radical(pa.algebra(), opts)?)
}

/// `Hrz(I)`: the preimage of `P_H(A/I)`, the smallest H-semiprime ideal
/// containing `I`.
pub fn h_radical_of_ideal(pa: &PartialAction, ideal: &Subspace, opts: &RadicalOptions) -> Result<Subspace> {
    let (q, proj) = pa.quotient_action(ideal)?;
    let ph = h_prime_radical(&q, opts)?;
    ph.preimage(&proj)
}

pub fn is_semiprime(a: &Algebra, opts: &RadicalOptions) -> Result<bool> {
    Ok(prime_radical(a, opts)?.is_zero())
}

pub fn is_semiprimitive(a: &Algebra, opts: &RadicalOptions) -> Result<bool> {
    Ok(jacobson_radical(a, opts)?.radical.is_zero())
}

pub fn is_h_semiprime(pa: &PartialAction, opts: &RadicalOptions) -> Result<bool> {
    Ok(h_prime_radical(pa, opts)?.is_zero())
}

pub fn is_h_semiprimitive(pa: &PartialAction, opts: &RadicalOptions) -> Result<bool> {
    Ok(h_jacobson_radical(pa, opts)?.is_zero())
}

/// Every two-sided ideal of `A` (finite fields only).
pub fn enumerate_ideals(a: &Algebra, caps: EnumCaps) -> Result<Vec<Subspace>> {
    enumerate_invariant_subspaces(a.field(), a.dim(), &a.ideal_operators(Side::TwoSided), caps)
}

/// Every H-stable two-sided ideal (finite fields only).
pub fn enumerate_h_stable_ideals(pa: &PartialAction, caps: EnumCaps) -> Result<Vec<Subspace>> {
    let a = pa.algebra();
    let mut ops = a.ideal_operators(Side::TwoSided);
    ops.extend(pa.operators().iter().cloned());
    enumerate_invariant_subspaces(a.field(), a.dim(), &ops, caps)
}

/// Maximal proper two-sided ideals (finite fields only).
pub fn maximal_ideals(a: &Algebra, caps: EnumCaps) -> Result<Vec<Subspace>> {
    let all = enumerate_ideals(a, caps)?;
    maximal_proper(&all)
}

fn maximal_proper(all: &[Subspace]) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for i in all.iter().filter(|s| !s.is_full()) {
        let mut maximal = true;
        for j in all.iter().filter(|s| !s.is_full() && s.dim() > i.dim()) {
            if i.is_subspace_of(j)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.push(i.clone());
        }
    }
    Ok(out)
}

/// `𝔭` proper H-stable, and `IJ ⊆ 𝔭` forces `I ⊆ 𝔭` or `J ⊆ 𝔭` for
/// H-stable ideals `I, J` (finite fields only).
pub fn is_h_prime(pa: &PartialAction, p: &Subspace, caps: EnumCaps) -> Result<bool> {
    let a = pa.algebra();
    if !a.is_ideal(p, Side::TwoSided) {
        return Err(Error::NotAnIdeal);
    }
    if !pa.is_h_stable(p) {
        return Err(Error::NotHStable);
    }
    if p.is_full() {
        return Ok(false);
    }
    let all = enumerate_h_stable_ideals(pa, caps)?;
    let outside: Vec<&Subspace> = all
        .iter()
        .filter(|i| !i.is_subspace_of(p).expect("same ambient"))
        .collect();
    for i in &outside {
        for j in &outside {
            if a.product_space(i, j)?.is_subspace_of(p)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{vector, Field};
    use crate::hopf::{group_algebra, sweedler_h4, GroupTable};
    use crate::paction::{c4_triple, trivial_action};

    fn opts() -> RadicalOptions {
        RadicalOptions::default()
    }

    #[test]
    fn classical_examples() {
        let q = Field::Rational;
        let r = jacobson_radical(&Algebra::product_of_fields(q, 3), &opts()).unwrap();
        assert!(r.radical.is_zero());
        assert_eq!(r.method, RadicalMethod::TraceForm);

        let f2 = Field::prime(2).unwrap();
        let b = group_algebra(f2, &GroupTable::cyclic(2).unwrap());
        let r = jacobson_radical(b.algebra(), &opts()).unwrap();
        assert_eq!(r.method, RadicalMethod::BruteNilpotent);
        assert_eq!(r.radical, Subspace::span(f2, 2, &[vector::from_i64(f2, &[1, 1])]).unwrap());
        assert_eq!(r.nilpotency_index, 2);

        let h4 = sweedler_h4(q).unwrap();
        let r = jacobson_radical(h4.algebra(), &opts()).unwrap();
        let x_gx = Subspace::span(q, 4, &[vector::unit(q, 4, 2), vector::unit(q, 4, 3)]).unwrap();
        assert_eq!(r.radical, x_gx);
        assert_eq!(r.nilpotency_index, 2);
    }

    #[test]
    fn methods_agree_where_both_apply() {
        // 𝔽₅C₄ is semisimple; 𝔽₅C₅ has a 4-dimensional radical
        let f5 = Field::prime(5).unwrap();
        for n in [2, 3, 4, 5] {
            let a = group_algebra(f5, &GroupTable::cyclic(n).unwrap()).algebra().clone();
            let brute = jacobson_radical(
                &a,
                &RadicalOptions {
                    method: Some(RadicalMethod::BruteNilpotent),
                    ..opts()
                },
            )
            .unwrap();
            if n < 5 {
                let trace = jacobson_radical(
                    &a,
                    &RadicalOptions {
                        method: Some(RadicalMethod::TraceForm),
                        ..opts()
                    },
                )
                .unwrap();
                assert_eq!(trace.radical, brute.radical);
            } else {
                assert_eq!(brute.radical.dim(), 4);
            }
        }
    }

    #[test]
    fn unsupported_characteristic() {
        let f7 = Field::prime(7).unwrap();
        let a = group_algebra(f7, &GroupTable::cyclic(7).unwrap()).algebra().clone();
        assert!(matches!(jacobson_radical(&a, &opts()), Err(Error::UnsupportedCharacteristic { .. })));
        let f2 = Field::prime(2).unwrap();
        let a = Algebra::product_of_fields(f2, 7);
        assert!(matches!(jacobson_radical(&a, &opts()), Err(Error::UnsupportedCharacteristic { .. })));
        let a = Algebra::product_of_fields(f2, 1);
        assert!(jacobson_radical(&a, &opts()).unwrap().radical.is_zero());
    }

    #[test]
    fn h_radicals() {
        let pa = c4_triple(Field::Rational);
        assert!(h_jacobson_radical(&pa, &opts()).unwrap().is_zero());
        assert!(is_h_semiprime(&pa, &opts()).unwrap());
        assert!(is_h_semiprimitive(&pa, &opts()).unwrap());
        assert!(is_semiprime(pa.algebra(), &opts()).unwrap());
        assert!(is_semiprimitive(pa.algebra(), &opts()).unwrap());

        let f2 = Field::prime(2).unwrap();
        let h = group_algebra(f2, &GroupTable::cyclic(2).unwrap());
        let t = trivial_action(&h, h.algebra()).unwrap();
        let j = jacobson_radical(t.algebra(), &opts()).unwrap().radical;
        assert_eq!(h_jacobson_radical(&t, &opts()).unwrap(), j);
        assert!(!is_semiprime(t.algebra(), &opts()).unwrap());

        let q = Field::Rational;
        let ct = trivial_action(&group_algebra(q, &GroupTable::cyclic(2).unwrap()), &Algebra::product_of_fields(q, 3)).unwrap();
        let i = Subspace::span(q, 3, &[vector::unit(q, 3, 0), vector::unit(q, 3, 1)]).unwrap();
        assert_eq!(h_radical_of_ideal(&ct, &i, &opts()).unwrap(), i);
        let zero = Subspace::zero(q, 3);
        assert_eq!(h_radical_of_ideal(&ct, &zero, &opts()).unwrap(), h_prime_radical(&ct, &opts()).unwrap());
    }

    #[test]
    fn h_prime_examples() {
        let f2 = Field::prime(2).unwrap();
        let h = group_algebra(f2, &GroupTable::cyclic(2).unwrap());
        let t = trivial_action(&h, &Algebra::product_of_fields(f2, 2)).unwrap();
        let ideals = enumerate_h_stable_ideals(&t, EnumCaps::default()).unwrap();
        assert_eq!(ideals.len(), 4);
        let e1 = Subspace::span(f2, 2, &[vector::unit(f2, 2, 0)]).unwrap();
        assert!(is_h_prime(&t, &e1, EnumCaps::default()).unwrap());
        let zero = Subspace::zero(f2, 2);
        assert!(!is_h_prime(&t, &zero, EnumCaps::default()).unwrap());
        assert!(is_h_semiprime(&t, &opts()).unwrap());
        assert_eq!(maximal_ideals(t.algebra(), EnumCaps::default()).unwrap().len(), 2);
    }
}
