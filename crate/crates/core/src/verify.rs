//! Executable checks of the structure theorems: each suite runs one identity
//! or implication over fixtures and seeded random instances, with both sides
//! computed by independent routes.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, Side};
use crate::error::{Error, Result};
use crate::exactla::{enumerate_invariant_subspaces, Field, Subspace};
use crate::gen::{finite_fixtures, fixtures, Generator, Instance, Profile};
use crate::hopf::{group_algebra, sweedler_h4, GroupTable, HopfAlgebra};
use crate::paction::{trivial_action, PartialAction};
use crate::pmod::{irreducible_extension, AlgebraModule, Irreducibility, ModuleSide};
use crate::radicals::{
    enumerate_h_stable_ideals, h_jacobson_radical, h_prime_radical, is_h_prime, jacobson_radical, maximal_ideals, prime_radical,
    RadicalOptions,
};
use crate::smash::{build_partial_smash, SmashProduct};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Φ and Ψ are mutually inverse and preserve the ideal lattice operations.
    T3_6,
    /// H*-stable ideals of the smash product are exactly the images Φ(I).
    C3_7,
    /// ⋂ ann(M_α) over irreducible extensions equals J(A#H) ∩ A.
    P4_20,
    /// J_H(A) = (J(A):H).
    P4_22,
    /// P_H(A) = (P(A):H).
    C4_13,
    /// P_{H*}(A#H) = Φ(P_H(A)).
    T4_14,
    /// J_{H*}(A#H) = Φ(J_H(A)).
    T4_26,
    /// H semisimple, A H-semiprimitive ⇒ A#H semiprimitive.
    T5_1,
    /// Same conclusion via the H*-stability of J(A#H).
    T5_6,
    /// H semisimple ⇒ J(A#H) = Φ(J_H(A)).
    C5_7,
    /// H semisimple, A H-semiprime ⇒ A#H semiprime.
    T5_8,
    /// H semisimple ⇒ P(A#H) = Φ(P_H(A)).
    C5_9,
    /// Without semisimplicity of H the smash product can have a radical.
    NegSs,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::T3_6,
        TheoremId::C3_7,
        TheoremId::P4_20,
        TheoremId::P4_22,
        TheoremId::C4_13,
        TheoremId::T4_14,
        TheoremId::T4_26,
        TheoremId::T5_1,
        TheoremId::T5_6,
        TheoremId::C5_7,
        TheoremId::T5_8,
        TheoremId::C5_9,
        TheoremId::NegSs,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T3_6 => "T3.6",
            TheoremId::C3_7 => "C3.7",
            TheoremId::P4_20 => "P4.20",
            TheoremId::P4_22 => "P4.22",
            TheoremId::C4_13 => "C4.13",
            TheoremId::T4_14 => "T4.14",
            TheoremId::T4_26 => "T4.26",
            TheoremId::T5_1 => "T5.1",
            TheoremId::T5_6 => "T5.6",
            TheoremId::C5_7 => "C5.7",
            TheoremId::T5_8 => "T5.8",
            TheoremId::C5_9 => "C5.9",
            TheoremId::NegSs => "NEG-SS",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T3_6 => "Psi(Phi(I)) = I on H-stable ideals; Phi preserves inclusion, +, products and intersections",
            TheoremId::C3_7 => "every H*-stable ideal of A#H is Phi(Psi(I)); the two lattices have equal size",
            TheoremId::P4_20 => "intersection of ann(M) over irreducible extensions of simple A-modules = J(A#H) cap A",
            TheoremId::P4_22 => "J_H(A) = (J(A):H)",
            TheoremId::C4_13 => "P_H(A) = (P(A):H)",
            TheoremId::T4_14 => "P_{H*}(A#H) = Phi(P_H(A))",
            TheoremId::T4_26 => "J_{H*}(A#H) = Phi(J_H(A))",
            TheoremId::T5_1 => "H semisimple and A H-semiprimitive imply A#H semiprimitive",
            TheoremId::T5_6 => "H semisimple and A H-semiprimitive: J(A#H) is H*-stable, hence zero",
            TheoremId::C5_7 => "H semisimple implies J(A#H) = Phi(J_H(A))",
            TheoremId::T5_8 => "H semisimple and A H-semiprime imply A#H semiprime",
            TheoremId::C5_9 => "H semisimple implies P(A#H) = Phi(P_H(A))",
            TheoremId::NegSs => "H not semisimple: A#H = A (x) H has a nonzero radical although J_H(A) = 0",
        }
    }

    /// Whether the suite needs lattice enumeration (small finite fields).
    fn enumerative(self) -> bool {
        matches!(self, TheoremId::T3_6 | TheoremId::C3_7 | TheoremId::P4_20 | TheoremId::P4_22 | TheoremId::C4_13)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownTheorem(pub String);

impl fmt::Display for UnknownTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
        write!(f, "unknown theorem id {:?} (known: {})", self.0, ids.join(", "))
    }
}

impl std::error::Error for UnknownTheorem {}

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> std::result::Result<TheoremId, UnknownTheorem> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Number of random instances added to the fixtures.
    pub trials: usize,
    pub radicals: RadicalOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            trials: 20,
            radicals: RadicalOptions::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Hypotheses not met, or outside the exhaustive-search caps.
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub instance: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub cases: Vec<Case>,
}

impl VerifyReport {
    pub fn count(&self, s: Status) -> usize {
        self.cases.iter().filter(|c| c.status == s).count()
    }

    /// No failures and at least one case where the hypotheses applied.
    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0 && self.count(Status::Pass) > 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.theorem, self.theorem.statement())?;
        for c in &self.cases {
            writeln!(f, "  [{}] {}: {}", c.status, c.instance, c.detail)?;
        }
        write!(
            f,
            "{} {}: {} pass, {} fail, {} skip",
            self.theorem,
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        )
    }
}

/// Outcome of one check before error classification.
enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn ensure(ok: bool, pass: impl Into<String>, fail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass(pass.into())
    } else {
        Verdict::Fail(fail())
    }
}

fn is_cap_error(e: &Error) -> bool {
    matches!(
        e,
        Error::UnsupportedCharacteristic { .. } | Error::DimensionTooLarge { .. } | Error::EnumerationLimit(_) | Error::FieldNotFinite(_)
    )
}

/// Fixtures plus `trials` random instances suited to `id`.
pub fn default_instances(id: TheoremId, opts: &VerifyOptions) -> Vec<Instance> {
    let mut out = Vec::new();
    let mut gen = Generator::new(opts.seed);
    if id == TheoremId::NegSs {
        out.extend(non_semisimple_fixtures());
        for _ in 0..opts.trials {
            out.push(random_non_semisimple(&mut gen));
        }
        return out;
    }
    out.extend(fixtures());
    out.extend(finite_fixtures().into_iter().filter(|i| i.label != "FIX-D"));
    let profile = if id.enumerative() { Profile::small() } else { Profile::medium() };
    for k in 0..opts.trials {
        let mut inst = gen.instance(&profile);
        inst.label = format!("random #{k} over {}: {}", inst.action.field(), inst.label);
        out.push(inst);
    }
    out
}

fn non_semisimple_fixtures() -> Vec<Instance> {
    let q = Field::Rational;
    vec![
        Instance {
            label: "FIX-D".into(),
            action: crate::gen::fix_d(),
        },
        Instance {
            label: "Sweedler H4 trivially on Q".into(),
            action: trivial_action(&sweedler_h4(q).expect("char 0"), &Algebra::product_of_fields(q, 1)).expect("trivial"),
        },
    ]
}

fn random_non_semisimple(gen: &mut Generator) -> Instance {
    use rand::Rng;
    loop {
        let (h, label): (HopfAlgebra, String) = match gen.rng().gen_range(0..5) {
            0 => (group_algebra(Field::prime(2).unwrap(), &GroupTable::cyclic(2).unwrap()), "F2C2".into()),
            1 => (group_algebra(Field::prime(2).unwrap(), &GroupTable::cyclic(4).unwrap()), "F2C4".into()),
            2 => (group_algebra(Field::prime(3).unwrap(), &GroupTable::cyclic(3).unwrap()), "F3C3".into()),
            3 => (group_algebra(Field::prime(2).unwrap(), &GroupTable::symmetric3()), "F2S3".into()),
            _ => {
                let f = gen.field(&[3, 5, 7]);
                (sweedler_h4(f).expect("odd"), format!("H4 over {}", f))
            }
        };
        let f = h.field();
        let room = 6 / h.dim();
        let n = gen.rng().gen_range(1..=room.max(1));
        // semiprimitive A: a product of fields, or a full matrix algebra
        let a = if gen.rng().gen_bool(0.2) && h.dim() == 2 && f.order() == Some(2) {
            crate::gen::matrix_algebra(f, 2).direct_product(&Algebra::product_of_fields(f, 1)).ok()
        } else {
            Some(Algebra::product_of_fields(f, n))
        };
        if let Some(a) = a {
            if a.dim() * h.dim() <= 6 || f.characteristic() > (a.dim() * h.dim()) as u64 {
                let label = format!("trivial {label} on {}-dim semisimple algebra", a.dim());
                return Instance {
                    label,
                    action: trivial_action(&h, &a).expect("trivial"),
                };
            }
        }
    }
}

/// Run suite `id` over `instances`.
pub fn verify_instances(id: TheoremId, instances: &[Instance], opts: &VerifyOptions) -> VerifyReport {
    let cases = instances
        .iter()
        .map(|inst| {
            let (status, detail) = match check(id, &inst.action, opts) {
                Ok(Verdict::Pass(d)) => (Status::Pass, d),
                Ok(Verdict::Fail(d)) => (Status::Fail, d),
                Ok(Verdict::Skip(d)) => (Status::Skip, d),
                Err(e) if is_cap_error(&e) => (Status::Skip, e.to_string()),
                Err(e) => (Status::Fail, format!("error: {e}")),
            };
            Case {
                instance: inst.label.clone(),
                status,
                detail,
            }
        })
        .collect();
    VerifyReport { theorem: id, cases }
}

/// Run suite `id` over its default instances.
pub fn verify(id: TheoremId, opts: &VerifyOptions) -> VerifyReport {
    verify_instances(id, &default_instances(id, opts), opts)
}

fn check(id: TheoremId, pa: &PartialAction, opts: &VerifyOptions) -> Result<Verdict> {
    let r = &opts.radicals;
    match id {
        TheoremId::T3_6 => correspondence(pa, r),
        TheoremId::C3_7 => dual_stable_lattice(pa, r),
        TheoremId::P4_20 => primitive_intersection(pa, r),
        TheoremId::P4_22 => h_radical_is_colon(pa, r, false),
        TheoremId::C4_13 => h_radical_is_colon(pa, r, true),
        TheoremId::T4_14 => dual_radical(pa, r, true),
        TheoremId::T4_26 => dual_radical(pa, r, false),
        TheoremId::T5_1 => semiprimitive_smash(pa, r, false),
        TheoremId::T5_6 => semiprimitive_smash(pa, r, true),
        TheoremId::C5_7 => radical_formula(pa, r, false),
        TheoremId::T5_8 => semiprime_smash(pa, r),
        TheoremId::C5_9 => radical_formula(pa, r, true),
        TheoremId::NegSs => non_semisimple(pa, r),
    }
}

/// `{0, A, J_H(A)}` plus colon ideals of principal ideals of basis vectors.
fn sample_h_stable_ideals(pa: &PartialAction, r: &RadicalOptions) -> Result<Vec<Subspace>> {
    let a = pa.algebra();
    let f = a.field();
    let n = a.dim();
    let mut out = vec![Subspace::zero(f, n), Subspace::full(f, n)];
    if let Ok(j) = h_jacobson_radical(pa, r) {
        out.push(j);
    }
    for i in 0..n {
        let x = crate::exactla::vector::unit(f, n, i);
        let ideal = a.ideal_closure(&[x], Side::TwoSided)?;
        out.push(pa.colon_ideal(&ideal)?);
    }
    out.sort_by(|x, y| x.canonical_cmp(y));
    out.dedup();
    Ok(out)
}

fn h_stable_ideals(pa: &PartialAction, r: &RadicalOptions) -> Result<(Vec<Subspace>, &'static str)> {
    if pa.field().is_finite() {
        match enumerate_h_stable_ideals(pa, r.enumeration) {
            Ok(v) => return Ok((v, "all")),
            Err(e) if is_cap_error(&e) => {}
            Err(e) => return Err(e),
        }
    }
    Ok((sample_h_stable_ideals(pa, r)?, "sampled"))
}

const MAX_PAIRS: usize = 2500;

fn correspondence(pa: &PartialAction, r: &RadicalOptions) -> Result<Verdict> {
    let sp = build_partial_smash(pa);
    let carrier = sp.carrier();
    let (ideals, how) = h_stable_ideals(pa, r)?;
    let mut images = Vec::with_capacity(ideals.len());
    for i in &ideals {
        let phi = sp.phi_ideal(i)?;
        if !carrier.is_ideal(&phi, Side::TwoSided) || !sp.is_dual_stable(&phi) {
            return Ok(Verdict::Fail(format!("Phi of a {}-dim ideal is not an H*-stable ideal", i.dim())));
        }
        if sp.psi_ideal(&phi)? != *i {
            return Ok(Verdict::Fail(format!("Psi(Phi(I)) != I for a {}-dim ideal", i.dim())));
        }
        images.push(phi);
    }
    let a = pa.algebra();
    let mut pairs = 0;
    'outer: for (x, px) in ideals.iter().zip(&images) {
        for (y, py) in ideals.iter().zip(&images) {
            if pairs >= MAX_PAIRS {
                break 'outer;
            }
            pairs += 1;
            if x.is_subspace_of(y)? != px.is_subspace_of(py)? {
                return Ok(Verdict::Fail("Phi does not preserve inclusion".into()));
            }
            if sp.phi_ideal(&x.sum(y)?)? != px.sum(py)? {
                return Ok(Verdict::Fail("Phi(I+J) != Phi(I)+Phi(J)".into()));
            }
            if sp.phi_ideal(&x.intersect(y)?)? != px.intersect(py)? {
                return Ok(Verdict::Fail("Phi(I cap J) != Phi(I) cap Phi(J)".into()));
            }
            if sp.phi_ideal(&a.product_space(x, y)?)? != carrier.product_space(px, py)? {
                return Ok(Verdict::Fail("Phi(IJ) != Phi(I)Phi(J)".into()));
            }
        }
    }
    Ok(Verdict::Pass(format!(
        "{} H-stable ideals ({how}), {pairs} pairs, carrier dim {}",
        ideals.len(),
        sp.dim()
    )))
}

fn dual_stable_lattice(pa: &PartialAction, r: &RadicalOptions) -> Result<Verdict> {
    if !pa.field().is_finite() {
        return Ok(Verdict::Skip("exhaustive lattice needs a finite field".into()));
    }
    let sp = build_partial_smash(pa);
    let lower = enumerate_h_stable_ideals(pa, r.enumeration)?;
    let upper = enumerate_h_stable_ideals(sp.dual_action(), r.enumeration)?;
    for big in &upper {
        let psi = sp.psi_ideal(big)?;
        if !pa.is_h_stable(&psi) {
            return Ok(Verdict::Fail(format!("Psi of a {}-dim H*-stable ideal is not H-stable", big.dim())));
        }
        if sp.phi_ideal(&psi)? != *big {
            return Ok(Verdict::Fail(format!("Phi(Psi(I)) != I for a {}-dim H*-stable ideal", big.dim())));
        }
    }
    Ok(ensure(
        lower.len() == upper.len(),
        format!("{} H-stable ideals <-> {} H*-stable ideals", lower.len(), upper.len()),
        || format!("{} H-stable ideals but {} H*-stable ideals", lower.len(), upper.len()),
    ))
}

fn j_carrier_cap_a(sp: &SmashProduct, r: &RadicalOptions) -> Result<Subspace> {
    let j = jacobson_radical(sp.carrier(), r)?.radical;
    sp.psi_ideal(&j)
}

fn primitive_intersection(pa: &PartialAction, r: &RadicalOptions) -> Result<Verdict> {
    let sp = build_partial_smash(pa);
    let rhs = j_carrier_cap_a(&sp, r)?;
    let colon = h_jacobson_radical(pa, r)?;
    if colon != rhs {
        return Ok(Verdict::Fail(format!(
            "(J(A):H) has dim {} but J(A#H) cap A has dim {}",
            colon.dim(),
            rhs.dim()
        )));
    }
    if !pa.field().is_finite() {
        return Ok(Verdict::Pass(format!("(J(A):H) = J(A#H) cap A, dim {}", rhs.dim())));
    }
    let a = pa.algebra();
    let f = a.field();
    let caps = r.enumeration;
    let right_ideals = enumerate_invariant_subspaces(f, a.dim(), &a.ideal_operators(Side::Right), caps)?;
    let mut meet = Subspace::full(f, a.dim());
    let mut simple = 0;
    for m in right_ideals.iter().filter(|s| !s.is_full()) {
        let maximal = right_ideals
            .iter()
            .all(|t| t.is_full() || t.dim() <= m.dim() || !m.is_subspace_of(t).expect("same ambient"));
        if !maximal {
            continue;
        }
        simple += 1;
        let v = AlgebraModule::regular(a, ModuleSide::Right).quotient(m)?;
        let ext = irreducible_extension(pa, &v, caps)?;
        let module = &ext.module;
        if module.dim() > pa.hopf().dim() * v.dim {
            return Ok(Verdict::Fail(format!("extension of dim {} exceeds dim H * dim V", module.dim())));
        }
        if module.is_irreducible(caps)? != Irreducibility::Irreducible {
            return Ok(Verdict::Fail("extension is not irreducible".into()));
        }
        if ext.image_of_v().dim() != v.dim {
            return Ok(Verdict::Fail("V does not embed".into()));
        }
        let ann = module.annihilator();
        if ann != pa.colon_ideal(&v.annihilator())? {
            return Ok(Verdict::Fail("ann(M) != (ann(V):H)".into()));
        }
        meet = meet.intersect(&ann)?;
    }
    Ok(ensure(
        meet == rhs,
        format!("{simple} simple modules, intersection of annihilators = J(A#H) cap A, dim {}", rhs.dim()),
        || format!("intersection of annihilators has dim {}, J(A#H) cap A has dim {}", meet.dim(), rhs.dim()),
    ))
}

/// `J_H(A) = (J(A):H)` (or the prime analogue), against an independent
/// description: intersections of H-primitive / H-prime ideals over finite
/// fields, otherwise maximality plus H-semiprimitivity of the quotient.
fn h_radical_is_colon(pa: &PartialAction, r: &RadicalOptions, prime: bool) -> Result<Verdict> {
    let a = pa.algebra();
    let f = a.field();
    let (rad, colon) = if prime {
        (prime_radical(a, r)?, h_prime_radical(pa, r)?)
    } else {
        (jacobson_radical(a, r)?.radical, h_jacobson_radical(pa, r)?)
    };
    if !pa.is_h_stable(&colon) || !colon.is_subspace_of(&rad)? {
        return Ok(Verdict::Fail("colon ideal is not an H-stable ideal inside the radical".into()));
    }
    if f.is_finite() {
        let caps = r.enumeration;
        let independent = if prime {
            // intersection of all H-prime ideals
            let mut meet = Subspace::full(f, a.dim());
            for p in enumerate_h_stable_ideals(pa, caps)? {
                if is_h_prime(pa, &p, caps)? {
                    meet = meet.intersect(&p)?;
                }
            }
            meet
        } else {
            // intersection of the H-primitive ideals (M:H), M maximal
            let mut meet = Subspace::full(f, a.dim());
            for m in maximal_ideals(a, caps)? {
                meet = meet.intersect(&pa.colon_ideal(&m)?)?;
            }
            meet
        };
        return Ok(ensure(
            independent == colon,
            format!("dim {} by both routes", colon.dim()),
            || format!("independent route gives dim {}, colon gives dim {}", independent.dim(), colon.dim()),
        ));
    }
    // over Q: the quotient by the colon ideal has no nonzero H-stable radical
    if colon.is_full() {
        return Ok(Verdict::Pass("colon ideal is all of A".into()));
    }
    let (q, _) = pa.quotient_action(&colon)?;
    let again = if prime { h_prime_radical(&q, r)? } else { h_jacobson_radical(&q, r)? };
    Ok(ensure(
        again.is_zero(),
        format!("dim {}, quotient has zero H-radical", colon.dim()),
        || format!("quotient by the colon ideal still has an H-radical of dim {}", again.dim()),
    ))
}

fn dual_radical(pa: &PartialAction, r: &RadicalOptions, prime: bool) -> Result<Verdict> {
    let sp = build_partial_smash(pa);
    let carrier = sp.carrier();
    let rad = if prime {
        prime_radical(carrier, r)?
    } else {
        jacobson_radical(carrier, r)?.radical
    };
    let lhs = sp.dual_action().colon_ideal(&rad)?;
    let base = if prime { h_prime_radical(pa, r)? } else { h_jacobson_radical(pa, r)? };
    let rhs = sp.phi_ideal(&base)?;
    Ok(ensure(
        lhs == rhs,
        format!("both sides dim {} in carrier of dim {}", lhs.dim(), sp.dim()),
        || format!("left side dim {}, right side dim {}", lhs.dim(), rhs.dim()),
    ))
}

fn semisimple_or_skip(pa: &PartialAction) -> Option<Verdict> {
    if pa.hopf().is_semisimple() {
        None
    } else {
        Some(Verdict::Skip("H is not semisimple".into()))
    }
}

/// Passes to `A/J_H(A)` so that the hypothesis always holds.
fn semiprimitive_smash(pa: &PartialAction, r: &RadicalOptions, via_stability: bool) -> Result<Verdict> {
    if let Some(v) = semisimple_or_skip(pa) {
        return Ok(v);
    }
    let jh = h_jacobson_radical(pa, r)?;
    if jh.is_full() {
        return Ok(Verdict::Skip("J_H(A) = A".into()));
    }
    let q = if jh.is_zero() { pa.clone() } else { pa.quotient_action(&jh)?.0 };
    if !h_jacobson_radical(&q, r)?.is_zero() {
        return Ok(Verdict::Fail("A/J_H(A) is not H-semiprimitive".into()));
    }
    let sp = build_partial_smash(&q);
    let j = jacobson_radical(sp.carrier(), r)?.radical;
    if via_stability && !sp.is_dual_stable(&j) {
        return Ok(Verdict::Fail("J(A#H) is not H*-stable".into()));
    }
    Ok(ensure(
        j.is_zero(),
        format!("A/J_H(A) of dim {}: J(A#H) = 0 in carrier of dim {}", q.algebra().dim(), sp.dim()),
        || format!("J(A#H) has dim {}", j.dim()),
    ))
}

fn semiprime_smash(pa: &PartialAction, r: &RadicalOptions) -> Result<Verdict> {
    if let Some(v) = semisimple_or_skip(pa) {
        return Ok(v);
    }
    let ph = h_prime_radical(pa, r)?;
    if ph.is_full() {
        return Ok(Verdict::Skip("P_H(A) = A".into()));
    }
    let q = if ph.is_zero() { pa.clone() } else { pa.quotient_action(&ph)?.0 };
    let sp = build_partial_smash(&q);
    let p = prime_radical(sp.carrier(), r)?;
    Ok(ensure(
        p.is_zero(),
        format!("A/P_H(A) of dim {}: P(A#H) = 0 in carrier of dim {}", q.algebra().dim(), sp.dim()),
        || format!("P(A#H) has dim {}", p.dim()),
    ))
}

fn radical_formula(pa: &PartialAction, r: &RadicalOptions, prime: bool) -> Result<Verdict> {
    if let Some(v) = semisimple_or_skip(pa) {
        return Ok(v);
    }
    let sp = build_partial_smash(pa);
    let (lhs, base) = if prime {
        (prime_radical(sp.carrier(), r)?, h_prime_radical(pa, r)?)
    } else {
        (jacobson_radical(sp.carrier(), r)?.radical, h_jacobson_radical(pa, r)?)
    };
    let rhs = sp.phi_ideal(&base)?;
    Ok(ensure(
        lhs == rhs,
        format!("radical of A#H = Phi(H-radical), dim {}", lhs.dim()),
        || format!("radical of A#H has dim {}, Phi(H-radical) has dim {}", lhs.dim(), rhs.dim()),
    ))
}

fn non_semisimple(pa: &PartialAction, r: &RadicalOptions) -> Result<Verdict> {
    if pa.hopf().is_semisimple() {
        return Ok(Verdict::Skip("H is semisimple".into()));
    }
    if !pa.is_global() {
        return Ok(Verdict::Skip("only the trivial-action setting is covered".into()));
    }
    if !jacobson_radical(pa.algebra(), r)?.radical.is_zero() {
        return Ok(Verdict::Skip("A is not semiprimitive".into()));
    }
    let jh = h_jacobson_radical(pa, r)?;
    let sp = build_partial_smash(pa);
    let j = jacobson_radical(sp.carrier(), r)?.radical;
    Ok(ensure(
        jh.is_zero() && !j.is_zero(),
        format!("J_H(A) = 0 but J(A#H) has dim {} (carrier dim {})", j.dim(), sp.dim()),
        || format!("J_H(A) dim {}, J(A#H) dim {}", jh.dim(), j.dim()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!("neg-ss".parse::<TheoremId>().unwrap(), TheoremId::NegSs);
        assert!("T9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn every_suite_passes_on_defaults() {
        let opts = VerifyOptions {
            trials: 6,
            ..VerifyOptions::default()
        };
        for t in TheoremId::ALL {
            let rep = verify(t, &opts);
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn t4_26_on_fixtures() {
        let rep = verify_instances(TheoremId::T4_26, &fixtures(), &VerifyOptions::default());
        assert_eq!(rep.count(Status::Pass), 4, "{rep}");
    }

    #[test]
    fn neg_ss_on_fix_d() {
        let rep = verify_instances(TheoremId::NegSs, &non_semisimple_fixtures(), &VerifyOptions::default());
        assert_eq!(rep.count(Status::Pass), 2, "{rep}");
    }

    #[test]
    fn t5_1_on_fix_b() {
        let inst = &fixtures()[1];
        let rep = verify_instances(TheoremId::T5_1, std::slice::from_ref(inst), &VerifyOptions::default());
        assert_eq!(rep.cases[0].status, Status::Pass, "{rep}");
        assert!(rep.cases[0].detail.contains("J(A#H) = 0"));
    }
}
