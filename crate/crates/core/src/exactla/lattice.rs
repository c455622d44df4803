//! Invariant subspaces of a finite family of operators: closures, and the
//! exhaustive lattice over finite fields.

use std::collections::{HashSet, VecDeque};

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use super::subspace::{Echelon, Subspace};
use super::vector::Vector;
use crate::error::{Error, Result};

/// Smallest subspace containing `start` and mapped into itself by every op.
pub fn invariant_closure(ops: &[Matrix], start: &Subspace) -> Subspace {
    let mut e = Echelon::from_subspace(start);
    let mut queue: VecDeque<Vector> = start.basis_vectors().map(|r| r.to_vec()).collect();
    while let Some(v) = queue.pop_front() {
        for op in ops {
            let w = op.apply(&v).expect("operator shape matches ambient");
            if e.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    e.into_subspace()
}

/// Smallest invariant subspace containing the given vectors.
pub fn closure_of_vectors<V: AsRef<[Scalar]>>(
    field: Field,
    ambient: usize,
    ops: &[Matrix],
    vectors: &[V],
) -> Result<Subspace> {
    Ok(invariant_closure(ops, &Subspace::span(field, ambient, vectors)?))
}

/// Whether every op maps `s` into itself.
pub fn is_invariant(ops: &[Matrix], s: &Subspace) -> bool {
    ops.iter().all(|op| {
        s.basis_vectors()
            .all(|v| s.contains(&op.apply(v).expect("shape")).expect("shape"))
    })
}

/// Limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    pub dim_cap: usize,
    /// Hard stop on the size of the returned lattice.
    pub max_subspaces: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            dim_cap: 6,
            max_subspaces: 200_000,
        }
    }
}

/// Representatives of the projective points of `field^n`: nonzero vectors
/// whose first nonzero coordinate is one.
pub fn projective_points(field: Field, n: usize) -> Result<Vec<Vector>> {
    let elems = field.elements().ok_or(Error::FieldNotFinite(field))?;
    let q = elems.len();
    let mut out = Vec::new();
    for lead in 0..n {
        let tail = n - lead - 1;
        let mut digits = vec![0usize; tail];
        loop {
            let mut v = vec![field.zero(); n];
            v[lead] = field.one();
            for (k, &d) in digits.iter().enumerate() {
                v[lead + 1 + k] = elems[d].clone();
            }
            out.push(v);
            // odometer increment
            let mut k = 0;
            while k < tail {
                digits[k] += 1;
                if digits[k] < q {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == tail {
                break;
            }
        }
    }
    Ok(out)
}

/// Every subspace of `field^n` invariant under `ops`, sorted canonically.
///
/// Each invariant subspace is a sum of cyclic ones, so the cyclic closures of
/// all projective points generate the whole lattice under `+`.
pub fn enumerate_invariant_subspaces(
    field: Field,
    n: usize,
    ops: &[Matrix],
    caps: EnumCaps,
) -> Result<Vec<Subspace>> {
    if !field.is_finite() {
        return Err(Error::FieldNotFinite(field));
    }
    if n > caps.dim_cap {
        return Err(Error::DimensionTooLarge {
            dim: n,
            cap: caps.dim_cap,
        });
    }
    let mut cyclic: HashSet<Subspace> = HashSet::new();
    for v in projective_points(field, n)? {
        cyclic.insert(closure_of_vectors(field, n, ops, &[v])?);
    }
    let mut cyclic: Vec<Subspace> = cyclic.into_iter().collect();
    cyclic.sort_by(|a, b| a.canonical_cmp(b));

    let zero = Subspace::zero(field, n);
    let mut seen: HashSet<Subspace> = HashSet::new();
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(u) = queue.pop_front() {
        for c in &cyclic {
            if c.is_subspace_of(&u)? {
                continue;
            }
            let s = u.sum(c)?;
            if seen.insert(s.clone()) {
                if seen.len() > caps.max_subspaces {
                    return Err(Error::EnumerationLimit(caps.max_subspaces));
                }
                queue.push_back(s);
            }
        }
    }
    let mut all: Vec<Subspace> = seen.into_iter().collect();
    all.sort_by(|a, b| a.canonical_cmp(b));
    Ok(all)
}
