//! Named fixtures and seeded random instances.
//!
//! Random partial actions are only ever produced by constructors that are
//! sound by design (trivial actions, restrictions of global actions to
//! ideals generated by central idempotents, quotients by H-stable ideals,
//! direct products), never by sampling raw tensors.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Side};
use crate::exactla::{vector, Field, Matrix, Scalar, Vector};
use crate::hopf::{dual_group_algebra, group_algebra, sweedler_h4, GroupTable, HopfAlgebra};
use crate::paction::{c4_triple, dual_group_idempotent, induce_from_ideal, trivial_action, PartialAction};
use crate::Result;

/// A partial action with a human-readable provenance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub action: PartialAction,
}

impl Instance {
    fn new(label: impl Into<String>, action: PartialAction) -> Instance {
        Instance {
            label: label.into(),
            action,
        }
    }
}

/// `(ℚC₂)*` acting on `e_N ℚC₂` for `N = C₂`.
pub fn fix_a() -> PartialAction {
    dual_group_idempotent(Field::Rational, &GroupTable::cyclic(2).expect("C2"), &[0, 1]).expect("FIX-A")
}

pub fn fix_b() -> PartialAction {
    c4_triple(Field::Rational)
}

/// Trivial action of `ℚC₂` on `ℚⁿ`.
pub fn fix_c(n: usize) -> PartialAction {
    let h = group_algebra(Field::Rational, &GroupTable::cyclic(2).expect("C2"));
    trivial_action(&h, &Algebra::product_of_fields(Field::Rational, n)).expect("trivial")
}

/// `𝔽₂C₂` acting trivially on `𝔽₂`.
pub fn fix_d() -> PartialAction {
    let f2 = Field::prime(2).expect("prime");
    let h = group_algebra(f2, &GroupTable::cyclic(2).expect("C2"));
    trivial_action(&h, &Algebra::product_of_fields(f2, 1)).expect("trivial")
}

/// The four named fixtures over their native fields.
pub fn fixtures() -> Vec<Instance> {
    vec![
        Instance::new("FIX-A", fix_a()),
        Instance::new("FIX-B", fix_b()),
        Instance::new("FIX-C", fix_c(3)),
        Instance::new("FIX-D", fix_d()),
    ]
}

/// Fixtures over small finite fields, suitable for exhaustive enumeration.
pub fn finite_fixtures() -> Vec<Instance> {
    let f3 = Field::prime(3).expect("prime");
    let f5 = Field::prime(5).expect("prime");
    let c2 = GroupTable::cyclic(2).expect("C2");
    vec![
        Instance::new("FIX-A/F3", dual_group_idempotent(f3, &c2, &[0, 1]).expect("FIX-A")),
        Instance::new("FIX-B/F5", c4_triple(f5)),
        Instance::new(
            "FIX-C/F3",
            trivial_action(&group_algebra(f3, &c2), &Algebra::product_of_fields(f3, 3)).expect("trivial"),
        ),
        Instance::new("FIX-D", fix_d()),
    ]
}

/// `𝕜[x]/(xᵐ)`.
pub fn truncated_polynomial(field: Field, m: usize) -> Algebra {
    let labels = (0..m)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    Algebra::from_products(field, m, vector::unit(field, m, 0), labels, |i, j| {
        let mut v = vector::zeros(field, m);
        if i + j < m {
            v[i + j] = field.one();
        }
        v
    })
    .expect("truncated polynomial ring")
}

/// `Mₙ(𝕜)` with matrix units `E_ij` at index `i·n + j`.
pub fn matrix_algebra(field: Field, n: usize) -> Algebra {
    let d = n * n;
    let mut unit = vector::zeros(field, d);
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    let labels = (0..d).map(|x| format!("E{}{}", x / n + 1, x % n + 1)).collect();
    Algebra::from_products(field, d, unit, labels, |x, y| {
        let mut v = vector::zeros(field, d);
        if x % n == y / n {
            v[(x / n) * n + y % n] = field.one();
        }
        v
    })
    .expect("matrix algebra")
}

/// Upper triangular `n×n` matrices.
pub fn upper_triangular(field: Field, n: usize) -> Algebra {
    let full = matrix_algebra(field, n);
    let gens: Vec<Vector> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| vector::unit(field, n * n, i * n + j))
        .collect();
    let s = crate::exactla::Subspace::span(field, n * n, &gens).expect("span");
    full.restrict(&s, full.unit().expect("unital")).expect("subalgebra")
}

/// All subgroups of a (small) group, closing every pair of elements.
pub fn subgroups(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in a..n {
            let mut set = vec![false; n];
            set[g.identity()] = true;
            let mut frontier = vec![a, b];
            while let Some(x) = frontier.pop() {
                if set[x] {
                    continue;
                }
                set[x] = true;
                for y in 0..n {
                    if set[y] {
                        frontier.push(g.mul(x, y));
                        frontier.push(g.mul(y, x));
                    }
                }
            }
            let elems: Vec<usize> = (0..n).filter(|&x| set[x]).collect();
            if !out.contains(&elems) {
                out.push(elems);
            }
        }
    }
    out.sort();
    out
}

/// Left multiplication of `G` on the left cosets of `K`, as permutations.
fn coset_action(g: &GroupTable, k: &[usize]) -> Vec<Vec<usize>> {
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in 0..g.order() {
        let mut c: Vec<usize> = k.iter().map(|&y| g.mul(x, y)).collect();
        c.sort_unstable();
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    (0..g.order())
        .map(|x| {
            cosets
                .iter()
                .map(|c| {
                    let img = g.mul(x, c[0]);
                    cosets.iter().position(|d| d.contains(&img)).expect("coset")
                })
                .collect()
        })
        .collect()
}

/// The global action of `𝕜G` on `𝕜^X ⊗ C` permuting `X`.
pub fn permutation_action(field: Field, g: &GroupTable, perms: &[Vec<usize>], c: &Algebra) -> Result<PartialAction> {
    let x = perms[0].len();
    let kx = Algebra::product_of_fields(field, x);
    let alg = kx.tensor_product(c)?;
    let m = c.dim();
    let ops = perms
        .iter()
        .map(|p| {
            let mut op = Matrix::zero(field, x * m, x * m);
            for (src, &dst) in p.iter().enumerate() {
                for j in 0..m {
                    op.set(dst * m + j, src * m + j, field.one());
                }
            }
            op
        })
        .collect();
    PartialAction::from_operators(group_algebra(field, g), alg, ops)
}

/// Size limits for random instances.
#[derive(Clone, Debug)]
pub struct Profile {
    pub primes: Vec<u64>,
    /// Upper bound on `dim A · dim H` (hence on the smash carrier).
    pub max_full_dim: usize,
}

impl Profile {
    /// Fields and sizes small enough for exhaustive lattice searches.
    pub fn small() -> Profile {
        Profile {
            primes: vec![2, 3, 5],
            max_full_dim: 6,
        }
    }

    /// Characteristic above every carrier dimension, so the trace form applies.
    pub fn medium() -> Profile {
        Profile {
            primes: vec![7, 11, 13],
            max_full_dim: 12,
        }
    }

    fn budget(&self, p: u64) -> usize {
        // keep the brute-force radical and lattice enumerations cheap over 𝔽₅
        let cap = if p == 5 && self.max_full_dim <= 6 { 4 } else { self.max_full_dim };
        if p > 5 {
            cap.min(p as usize - 1)
        } else {
            cap
        }
    }
}

/// Seeded source of random algebras and partial actions.
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Generator {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn field(&mut self, primes: &[u64]) -> Field {
        Field::prime(*primes.choose(&mut self.rng).expect("nonempty")).expect("prime")
    }

    pub fn scalar(&mut self, field: Field) -> Scalar {
        match field.order() {
            Some(q) => field.from_i64(self.rng.gen_range(0..q as i64)),
            None => field.from_i64(self.rng.gen_range(-3..=3)),
        }
    }

    pub fn vector(&mut self, field: Field, n: usize) -> Vector {
        (0..n).map(|_| self.scalar(field)).collect()
    }

    /// A random unital algebra of dimension at most `max_dim` (≥ 1).
    pub fn algebra(&mut self, field: Field, max_dim: usize) -> Algebra {
        let max_dim = max_dim.max(1);
        loop {
            let a = match self.rng.gen_range(0..8) {
                0 => Algebra::product_of_fields(field, self.rng.gen_range(1..=max_dim.min(4))),
                1 | 7 => truncated_polynomial(field, self.rng.gen_range(1..=max_dim.min(4))),
                2 => {
                    let n = self.rng.gen_range(1..=max_dim.min(4));
                    group_algebra(field, &GroupTable::cyclic(n).expect("cyclic")).algebra().clone()
                }
                3 => upper_triangular(field, 2),
                4 => matrix_algebra(field, 2),
                5 => {
                    let a = self.algebra(field, max_dim / 2);
                    let b = self.algebra(field, max_dim / 2);
                    a.direct_product(&b).expect("same field")
                }
                _ => {
                    let a = self.algebra(field, max_dim + 2);
                    let x = self.vector(field, a.dim());
                    let i = a.ideal_closure(&[x], Side::TwoSided).expect("ideal");
                    if i.is_full() {
                        continue;
                    }
                    a.quotient_algebra(&i).expect("ideal").0
                }
            };
            if a.dim() <= max_dim {
                return a;
            }
        }
    }

    fn group(&mut self, max_order: usize) -> GroupTable {
        let mut choices: Vec<GroupTable> = (2..=4.min(max_order)).map(|n| GroupTable::cyclic(n).expect("cyclic")).collect();
        if max_order >= 4 {
            let c2 = GroupTable::cyclic(2).expect("C2");
            choices.push(c2.product(&c2));
        }
        if max_order >= 6 {
            choices.push(GroupTable::symmetric3());
        }
        choices.choose(&mut self.rng).expect("nonempty").clone()
    }

    fn hopf(&mut self, field: Field, max_dim: usize) -> HopfAlgebra {
        let k = self.rng.gen_range(0..3);
        if k == 2 && max_dim >= 4 && field.characteristic() != 2 {
            return sweedler_h4(field).expect("odd characteristic");
        }
        let g = self.group(max_dim);
        if k == 1 {
            dual_group_algebra(field, &g)
        } else {
            group_algebra(field, &g)
        }
    }

    fn trivial(&mut self, field: Field, budget: usize) -> Instance {
        // leave room for an algebra of dimension ≥ 2 most of the time
        let a_min = self.rng.gen_range(1..=3).min(budget / 2).max(1);
        let h = self.hopf(field, budget / a_min);
        let a = self.algebra(field, (budget / h.dim()).max(1));
        let label = format!("trivial {} on {}-dim algebra", hopf_name(&h), a.dim());
        Instance::new(label, trivial_action(&h, &a).expect("trivial"))
    }

    /// Restriction of a permutation action to a random union of points.
    fn induced(&mut self, field: Field, budget: usize) -> Option<Instance> {
        let g = self.group(budget.min(6));
        let subs = subgroups(&g);
        let k = subs.choose(&mut self.rng).expect("nonempty").clone();
        let mut perms = coset_action(&g, &k);
        if self.rng.gen_bool(0.3) {
            // add a fixed point
            let x = perms[0].len();
            for p in perms.iter_mut() {
                p.push(x);
            }
        }
        let x = perms[0].len();
        let c = if self.rng.gen_bool(0.6) {
            self.algebra(field, 3)
        } else {
            Algebra::product_of_fields(field, 1)
        };
        let pa = permutation_action(field, &g, &perms, &c).ok()?;
        let mut e = vector::zeros(field, x * c.dim());
        let mut chosen = 0;
        for y in 0..x {
            if self.rng.gen_bool(0.5) {
                chosen += 1;
                for j in 0..c.dim() {
                    e[y * c.dim() + j] = c.unit().expect("unital")[j].clone();
                }
            }
        }
        if chosen == 0 || chosen * c.dim() * g.order() > budget {
            return None;
        }
        let act = induce_from_ideal(&pa, &e).ok()?;
        Some(Instance::new(
            format!("C{}-cosets of order-{} subgroup, {} of {} points, coefficients dim {}", g.order(), k.len(), chosen, x, c.dim()),
            act,
        ))
    }

    fn dual_idempotent(&mut self, field: Field, budget: usize) -> Option<Instance> {
        let g = self.group(budget.min(6));
        let n: Vec<Vec<usize>> = subgroups(&g).into_iter().filter(|s| g.is_normal_subgroup(s)).collect();
        let n = n.choose(&mut self.rng).expect("trivial subgroup").clone();
        let act = dual_group_idempotent(field, &g, &n).ok()?;
        if act.algebra().dim() * g.order() > budget {
            return None;
        }
        Some(Instance::new(format!("dual group of order {} on e_N, |N| = {}", g.order(), n.len()), act))
    }

    fn base_instance(&mut self, field: Field, budget: usize) -> Instance {
        loop {
            let inst = match self.rng.gen_range(0..3) {
                0 => Some(self.trivial(field, budget)),
                1 => self.induced(field, budget),
                _ => self.dual_idempotent(field, budget),
            };
            if let Some(i) = inst {
                if i.action.algebra().dim() * i.action.hopf().dim() <= budget {
                    return i;
                }
            }
        }
    }

    /// A random partial action within `profile`.
    pub fn instance(&mut self, profile: &Profile) -> Instance {
        let field = self.field(&profile.primes);
        let budget = profile.budget(field.characteristic());
        let inst = self.base_instance(field, budget);
        match self.rng.gen_range(0..4) {
            0 => {
                // quotient by the H-stable ideal (I:H) of a random principal ideal
                let pa = &inst.action;
                let x = self.vector(field, pa.algebra().dim());
                let i = pa.algebra().ideal_closure(&[x], Side::TwoSided).expect("ideal");
                let q = pa.colon_ideal(&i).expect("ideal");
                if q.is_zero() || q.is_full() {
                    return inst;
                }
                let (qa, _) = pa.quotient_action(&q).expect("H-stable");
                Instance::new(format!("{} modulo a {}-dim colon ideal", inst.label, q.dim()), qa)
            }
            1 => {
                let h = inst.action.hopf().clone();
                let room = budget / h.dim() - inst.action.algebra().dim().min(budget / h.dim());
                if room == 0 {
                    return inst;
                }
                let b = self.algebra(field, room);
                let other = trivial_action(&h, &b).expect("trivial");
                match inst.action.direct_product(&other) {
                    Ok(p) => Instance::new(format!("{} × trivial on {}-dim algebra", inst.label, b.dim()), p),
                    Err(_) => inst,
                }
            }
            _ => inst,
        }
    }
}

fn hopf_name(h: &HopfAlgebra) -> String {
    let f = h.field();
    match h.labels().first().map(String::as_str) {
        Some(l) if l.starts_with("p_") => format!("(F{}G)* dim {}", f.characteristic(), h.dim()),
        Some("1") if h.labels().get(2).map(String::as_str) == Some("x") => format!("H4 over F{}", f.characteristic()),
        _ => format!("F{}G dim {}", f.characteristic(), h.dim()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_partial_actions() {
        for inst in fixtures().into_iter().chain(finite_fixtures()) {
            let r = inst.action.check_partial_action();
            assert!(r.passed(), "{}: {r}", inst.label);
        }
        assert_eq!(fix_a().algebra().dim(), 1);
        assert!(!fix_a().is_global() && !fix_b().is_global());
        assert!(fix_c(2).is_global() && fix_d().is_global());
    }

    #[test]
    fn small_algebras() {
        let q = Field::Rational;
        for a in [truncated_polynomial(q, 3), matrix_algebra(q, 2), upper_triangular(q, 2), upper_triangular(q, 3)] {
            assert!(a.check_algebra().passed());
        }
        assert_eq!(upper_triangular(q, 3).dim(), 6);
        let s3 = GroupTable::symmetric3();
        assert_eq!(subgroups(&s3).len(), 6);
        assert_eq!(subgroups(&GroupTable::cyclic(4).unwrap()).len(), 3);
    }

    #[test]
    fn random_instances_are_sound_and_deterministic() {
        for profile in [Profile::small(), Profile::medium()] {
            let mut g1 = Generator::new(7);
            let mut g2 = Generator::new(7);
            for _ in 0..40 {
                let a = g1.instance(&profile);
                let b = g2.instance(&profile);
                assert_eq!(a.label, b.label);
                assert_eq!(a.action, b.action);
                let r = a.action.check_partial_action();
                assert!(r.passed(), "{}: {r}", a.label);
                assert!(a.action.algebra().dim() * a.action.hopf().dim() <= profile.max_full_dim);
                assert!(a.action.field().is_finite());
            }
        }
    }

    #[test]
    fn random_algebras_are_associative() {
        let mut g = Generator::new(1);
        for _ in 0..30 {
            let f = g.field(&[2, 3, 5, 7]);
            let a = g.algebra(f, 5);
            assert!(a.dim() <= 5);
            assert!(a.check_algebra().passed());
        }
    }
}
