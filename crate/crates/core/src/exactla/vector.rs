//! Coordinate vectors are plain `Vec<Scalar>`; these are the few helpers
//! the rest of the crate needs.

use super::scalar::{Field, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zeros(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn from_i64(field: Field, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc: Option<Scalar> = None;
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        let p = x * y;
        acc = Some(match acc {
            Some(s) => &s + &p,
            None => p,
        });
    }
    acc.unwrap_or_else(|| field.zero())
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `y += a·x`.
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    axpy_from(y, a, x, 0)
}

/// `y[k] += a·x[k]` for `k >= start`.
pub(crate) fn axpy_from(y: &mut [Scalar], a: &Scalar, x: &[Scalar], start: usize) {
    if a.is_zero() {
        return;
    }
    for (yk, xk) in y[start..].iter_mut().zip(&x[start..]) {
        if !xk.is_zero() {
            *yk = &*yk + &(a * xk);
        }
    }
}

/// Scales `v` so that its first nonzero entry is one.
pub fn normalize(v: &mut [Scalar]) {
    if let Some(p) = v.iter().position(|x| !x.is_zero()) {
        let inv = v[p].inv().expect("nonzero");
        for x in v[p..].iter_mut() {
            *x = &*x * &inv;
        }
    }
}
