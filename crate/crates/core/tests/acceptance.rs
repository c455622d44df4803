//! Acceptance criteria AC-1 … AC-9. Runs as a plain binary (`harness =
//! false`) so every criterion prints exactly one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use psl_core::algebra::{tensor_vectors, Algebra, Side};
use psl_core::exactla::{enumerate_invariant_subspaces, vector, EnumCaps, Field, Scalar, Subspace, Vector};
use psl_core::gen::{self, Generator, Instance, Profile};
use psl_core::hopf::sweedler_h4;
use psl_core::paction::{c4_triple, trivial_action, PartialAction};
use psl_core::pmod::{irreducible_extension, AlgebraModule, Irreducibility, ModuleSide, PartialModule};
use psl_core::radicals::{
    enumerate_h_stable_ideals, h_jacobson_radical, h_prime_radical, jacobson_radical, prime_radical, RadicalMethod,
    RadicalOptions,
};
use psl_core::smash::{build_partial_smash, SmashProduct};
use psl_core::Error;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q() -> Field {
    Field::Rational
}

fn fp(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn is_cap(e: &Error) -> bool {
    matches!(
        e,
        Error::UnsupportedCharacteristic { .. } | Error::DimensionTooLarge { .. } | Error::EnumerationLimit(_)
    )
}

/// `(a#h)(b#k) = Σ a(h₁·b) # h₂k`, straight from the structure tensors.
fn smash_mul(pa: &PartialAction, x: &[Scalar], y: &[Scalar]) -> Vector {
    let a = pa.algebra();
    let h = pa.hopf();
    let (n, m) = (a.dim(), h.dim());
    let f = pa.field();
    let mut out = vector::zeros(f, n * m);
    for (xi, xc) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (ai, hi) = (xi / m, xi % m);
        for (yi, yc) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (aj, hk) = (yi / m, yi % m);
            let coeff = xc * yc;
            for (h1, h2, c) in h.coproduct_terms(hi) {
                let acted = pa.operator(*h1).column(aj);
                let left = a.multiply(&a.basis_vector(ai), &acted).unwrap();
                let right = h.algebra().basis_product(*h2, hk);
                let t = tensor_vectors(&left, &right);
                vector::axpy(&mut out, &(&coeff * c), &t);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------

fn ac1() -> Outcome {
    // (kC₂)* on e_N kC₂ with N = C₂: p_g · e_N = ½ e_N for both g ∈ N
    let a_pa = gen::fix_a();
    let one = a_pa.algebra().unit().unwrap().clone();
    let half = q().from_ratio(1, 2).unwrap();
    for g in 0..2 {
        let got = a_pa.act(&a_pa.hopf().algebra().basis_vector(g), &one).unwrap();
        ensure!(got == vector::scale(&one, &half), "FIX-A: p_{g}·e_N = {got:?}");
    }
    // C₄ on e₁, e₂, e₃: the nine table entries, g^k indexed by k
    let b_pa = gen::fix_b();
    let e = |i: usize| vector::unit(q(), 3, i);
    let z = vector::zeros(q(), 3);
    let table = [
        (1, 0, z.clone()),
        (1, 1, e(0)),
        (1, 2, e(1)),
        (2, 0, e(2)),
        (2, 1, z.clone()),
        (2, 2, e(0)),
        (3, 0, e(1)),
        (3, 1, e(2)),
        (3, 2, z),
    ];
    for (k, j, want) in &table {
        ensure!(&b_pa.operator(*k).column(*j) == want, "FIX-B: g^{k}·e{} wrong", j + 1);
    }
    for (name, pa) in [("FIX-A", &a_pa), ("FIX-B", &b_pa)] {
        let r = pa.check_partial_action();
        ensure!(r.passed(), "{name}: {r}");
        ensure!(!pa.is_global(), "{name} reported global");
    }
    Ok("FIX-A p_g·e_N = ½e_N; FIX-B 9/9 table entries; both partial, not global".into())
}

fn ac2() -> Outcome {
    let mut dims = Vec::new();
    for (name, pa, want) in [("FIX-A", gen::fix_a(), 1), ("FIX-B", gen::fix_b(), 9)] {
        let sp = build_partial_smash(&pa);
        ensure!(sp.dim() == want, "{name}: carrier dim {} != {want}", sp.dim());
        // oracle: span of all (a#h)(1#1)
        let (n, m) = (pa.algebra().dim(), pa.hopf().dim());
        let one = tensor_vectors(pa.algebra().unit().unwrap(), pa.hopf().unit());
        let products: Vec<Vector> = (0..n * m)
            .map(|i| smash_mul(&pa, &vector::unit(pa.field(), n * m, i), &one))
            .collect();
        let oracle = Subspace::span(pa.field(), n * m, &products).unwrap();
        ensure!(oracle == *sp.space(), "{name}: carrier differs from the expansion oracle");
        ensure!(sp.unit_element() == &one, "{name}: unit is not 1#1");
        let basis: Vec<Vector> = (0..sp.dim()).map(|i| sp.to_tensor(&vector::unit(pa.field(), sp.dim(), i))).collect();
        let carrier = sp.carrier();
        for (i, x) in basis.iter().enumerate() {
            ensure!(smash_mul(&pa, &one, x) == *x && smash_mul(&pa, x, &one) == *x, "{name}: unit law fails on b{i}");
            for (j, y) in basis.iter().enumerate() {
                let xy = smash_mul(&pa, x, y);
                ensure!(xy == sp.to_tensor(&carrier.basis_product(i, j)), "{name}: product b{i}b{j} disagrees with the oracle");
                for z in &basis {
                    ensure!(
                        smash_mul(&pa, &xy, z) == smash_mul(&pa, x, &smash_mul(&pa, y, z)),
                        "{name}: associativity fails"
                    );
                }
            }
        }
        ensure!(carrier.check_algebra().passed(), "{name}: {}", carrier.check_algebra());
        dims.push(format!("{name} {}", sp.dim()));
    }
    Ok(format!("carrier dims {} match the expansion oracle; unit and associativity on all basis triples", dims.join(", ")))
}

fn ac3() -> Outcome {
    let sp = build_partial_smash(&gen::fix_b());
    ensure!(sp.dim() == 9, "carrier dim {}", sp.dim());
    let r = jacobson_radical(sp.carrier(), &RadicalOptions::default()).map_err(|e| e.to_string())?;
    ensure!(r.radical.is_zero(), "J has dim {}", r.radical.dim());
    ensure!(r.method == RadicalMethod::TraceForm, "unexpected method {}", r.method);
    Ok("J of the 9-dim FIX-B carrier over Q is 0".into())
}

/// Returns `None` when the instance is beyond the brute-force caps.
fn dual_radicals_agree(pa: &PartialAction, r: &RadicalOptions) -> Result<Option<()>, String> {
    let run = || -> psl_core::Result<Result<(), String>> {
        let sp = build_partial_smash(pa);
        let j = jacobson_radical(sp.carrier(), r)?.radical;
        let p = prime_radical(sp.carrier(), r)?;
        let lhs_j = sp.dual_action().colon_ideal(&j)?;
        let lhs_p = sp.dual_action().colon_ideal(&p)?;
        let rhs_j = sp.phi_ideal(&h_jacobson_radical(pa, r)?)?;
        let rhs_p = sp.phi_ideal(&h_prime_radical(pa, r)?)?;
        if lhs_j != rhs_j {
            return Ok(Err(format!("J side: {} vs {}", lhs_j.dim(), rhs_j.dim())));
        }
        if lhs_p != rhs_p {
            return Ok(Err(format!("P side: {} vs {}", lhs_p.dim(), rhs_p.dim())));
        }
        Ok(Ok(()))
    };
    match run() {
        Ok(v) => v.map(Some),
        Err(e) if is_cap(&e) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

fn ac4() -> Outcome {
    let r = RadicalOptions::default();
    for inst in gen::fixtures() {
        dual_radicals_agree(&inst.action, &r)
            .map_err(|e| format!("{}: {e}", inst.label))?
            .ok_or_else(|| format!("{}: out of reach", inst.label))?;
    }
    let mut g = Generator::new(0xac4);
    let (mut done, mut nonzero, mut attempts) = (0, 0, 0);
    while done < 120 && attempts < 400 {
        attempts += 1;
        let profile = if attempts % 3 == 0 { Profile::small() } else { Profile::medium() };
        let inst = g.instance(&profile);
        if dual_radicals_agree(&inst.action, &r).map_err(|e| format!("{}: {e}", inst.label))?.is_some() {
            done += 1;
            if !h_jacobson_radical(&inst.action, &r).unwrap().is_zero() {
                nonzero += 1;
            }
        }
    }
    ensure!(done >= 100, "only {done} random instances evaluated");
    Ok(format!("4 fixtures + {done} random finite-field instances ({nonzero} with J_H != 0), J and P sides equal"))
}

fn ac5() -> Outcome {
    let r = RadicalOptions::default();
    let pa = gen::fix_d();
    let sp = build_partial_smash(&pa);
    ensure!(jacobson_radical(pa.algebra(), &r).unwrap().radical.is_zero(), "J(F2) != 0");
    ensure!(h_jacobson_radical(&pa, &r).unwrap().is_zero(), "J_H != 0");
    let j = jacobson_radical(sp.carrier(), &r).map_err(|e| e.to_string())?.radical;
    ensure!(j.dim() == 1, "FIX-D: J(A#H) has dim {}", j.dim());
    let f2 = fp(2);
    let want = Subspace::span(f2, 2, &[vector::from_i64(f2, &[1, 1])]).unwrap();
    let image = Subspace::span(f2, 2, &j.basis_vectors().map(|b| sp.to_tensor(b)).collect::<Vec<_>>()).unwrap();
    ensure!(image == want, "FIX-D: radical is not 1#(1+g)");

    let h4 = sweedler_h4(q()).unwrap();
    let t = trivial_action(&h4, &Algebra::product_of_fields(q(), 1)).unwrap();
    let sp4 = build_partial_smash(&t);
    ensure!(sp4.dim() == 4, "Sweedler: carrier dim {}", sp4.dim());
    let j4 = jacobson_radical(sp4.carrier(), &r).map_err(|e| e.to_string())?.radical;
    ensure!(j4.dim() == 2, "Sweedler: J has dim {}", j4.dim());
    let jh4 = jacobson_radical(h4.algebra(), &r).unwrap().radical;
    let image4 = Subspace::span(q(), 4, &j4.basis_vectors().map(|b| sp4.to_tensor(b)).collect::<Vec<_>>()).unwrap();
    ensure!(image4 == jh4, "Sweedler: radical of Q⊗H4 is not 1⊗J(H4)");
    Ok("FIX-D J(A#H) = span{1#(1+g)}, dim 1; Sweedler H4 trivial on Q gives dim 2".into())
}

fn lattice_round_trips(inst: &Instance, caps: EnumCaps) -> Result<(usize, usize), String> {
    let pa = &inst.action;
    let e = |e: Error| format!("{}: {e}", inst.label);
    let sp: SmashProduct = build_partial_smash(pa);
    let lower = enumerate_h_stable_ideals(pa, caps).map_err(e)?;
    let upper = enumerate_h_stable_ideals(sp.dual_action(), caps).map_err(e)?;
    ensure!(lower.len() == upper.len(), "{}: {} vs {} ideals", inst.label, lower.len(), upper.len());
    let mut images = Vec::new();
    for i in &lower {
        let phi = sp.phi_ideal(i).map_err(e)?;
        ensure!(sp.psi_ideal(&phi).map_err(e)? == *i, "{}: Psi∘Phi != id", inst.label);
        ensure!(upper.contains(&phi), "{}: Phi(I) is not an enumerated H*-stable ideal", inst.label);
        images.push(phi);
    }
    for big in &upper {
        let psi = sp.psi_ideal(big).map_err(e)?;
        ensure!(sp.phi_ideal(&psi).map_err(e)? == *big, "{}: Phi∘Psi != id", inst.label);
    }
    let a = pa.algebra();
    let c = sp.carrier();
    for (x, px) in lower.iter().zip(&images) {
        for (y, py) in lower.iter().zip(&images) {
            let ok = sp.phi_ideal(&x.sum(y).unwrap()).unwrap() == px.sum(py).unwrap()
                && sp.phi_ideal(&x.intersect(y).unwrap()).unwrap() == px.intersect(py).unwrap()
                && sp.phi_ideal(&a.product_space(x, y).unwrap()).unwrap() == c.product_space(px, py).unwrap();
            ensure!(ok, "{}: Phi does not preserve +, ∩, · on a pair", inst.label);
        }
    }
    Ok((lower.len(), lower.len() * lower.len()))
}

fn ac6() -> Outcome {
    let caps = EnumCaps::default();
    let mut cases: Vec<Instance> = gen::finite_fixtures()
        .into_iter()
        .filter(|i| build_partial_smash(&i.action).dim() <= caps.dim_cap)
        .collect();
    // FIX-B over 𝔽₂ keeps the 9-dim carrier enumerable
    cases.push(Instance {
        label: "FIX-B/F2".into(),
        action: c4_triple(fp(2)),
    });
    let mut g = Generator::new(0xac6);
    let mut random = 0;
    while random < 10 {
        let inst = g.instance(&Profile::small());
        if build_partial_smash(&inst.action).dim() <= caps.dim_cap {
            cases.push(inst);
            random += 1;
        }
    }
    let (mut ideals, mut pairs) = (0, 0);
    for inst in &cases {
        let caps = if inst.label == "FIX-B/F2" { EnumCaps { dim_cap: 9, ..caps } } else { caps };
        let (i, p) = lattice_round_trips(inst, caps)?;
        ideals += i;
        pairs += p;
    }
    Ok(format!("{} instances, {ideals} H-stable ideals, {pairs} pairs: round trips and +, ∩, · preserved", cases.len()))
}

fn ac7() -> Outcome {
    let r = RadicalOptions::default();
    let mut cases = gen::fixtures();
    cases.extend(gen::finite_fixtures());
    let mut g = Generator::new(0xac7);
    for _ in 0..60 {
        cases.push(g.instance(&Profile::medium()));
    }
    for _ in 0..20 {
        cases.push(g.instance(&Profile::small()));
    }
    let (mut done, mut skipped) = (0, 0);
    for inst in &cases {
        let pa = &inst.action;
        let res = (|| -> psl_core::Result<Result<(), String>> {
            let sp = build_partial_smash(pa);
            let j = sp.psi_ideal(&jacobson_radical(sp.carrier(), &r)?.radical)?;
            let p = sp.psi_ideal(&prime_radical(sp.carrier(), &r)?)?;
            let jh = pa.colon_ideal(&jacobson_radical(pa.algebra(), &r)?.radical)?;
            let ph = pa.colon_ideal(&prime_radical(pa.algebra(), &r)?)?;
            if jh != j {
                return Ok(Err(format!("(J:H) dim {} vs J(A#H)∩A dim {}", jh.dim(), j.dim())));
            }
            if ph != p {
                return Ok(Err(format!("(P:H) dim {} vs P(A#H)∩A dim {}", ph.dim(), p.dim())));
            }
            Ok(Ok(()))
        })();
        match res {
            Ok(Ok(())) => done += 1,
            Ok(Err(msg)) => return Err(format!("{}: {msg}", inst.label)),
            Err(e) if is_cap(&e) => skipped += 1,
            Err(e) => return Err(format!("{}: {e}", inst.label)),
        }
    }
    ensure!(done >= 80, "only {done} instances evaluated");
    Ok(format!("{done} instances agree for J and P ({skipped} beyond brute-force caps)"))
}

fn random_smash_module(g: &mut Generator, sp: &SmashProduct) -> AlgebraModule {
    use rand::Rng;
    let side = if g.rng().gen_bool(0.5) { ModuleSide::Right } else { ModuleSide::Left };
    let reg = AlgebraModule::regular(sp.carrier(), side);
    let x = g.vector(sp.carrier().field(), sp.dim());
    let u = reg.submodule(&[x]).unwrap();
    match g.rng().gen_range(0..3) {
        0 => reg,
        1 if !u.is_zero() => reg.restrict(&u).unwrap(),
        _ if !u.is_full() => reg.quotient(&u).unwrap(),
        _ => reg,
    }
}

fn simple_right_modules(a: &Algebra, caps: EnumCaps) -> psl_core::Result<Vec<AlgebraModule>> {
    let ideals = enumerate_invariant_subspaces(a.field(), a.dim(), &a.ideal_operators(Side::Right), caps)?;
    let proper: Vec<&Subspace> = ideals.iter().filter(|s| !s.is_full()).collect();
    let maximal = proper
        .iter()
        .filter(|m| !proper.iter().any(|t| t.dim() > m.dim() && m.is_subspace_of(t).unwrap()));
    maximal
        .map(|m| AlgebraModule::regular(a, ModuleSide::Right).quotient(m))
        .collect()
}

fn ac8() -> Outcome {
    let mut g = Generator::new(0xac8);
    let mut trips = 0;
    while trips < 100 {
        let inst = g.instance(&Profile::medium());
        let pa = &inst.action;
        let sp = build_partial_smash(pa);
        let m = random_smash_module(&mut g, &sp);
        if m.dim == 0 {
            continue;
        }
        let pm = PartialModule::from_smash_module(&sp, &m).map_err(|e| format!("{}: {e}", inst.label))?;
        let report = pm.check();
        ensure!(report.passed(), "{}: converted module fails: {report}", inst.label);
        ensure!(pm.to_smash_module(&sp) == m, "{}: smash → partial → smash differs", inst.label);
        let back = PartialModule::from_smash_module(&sp, &pm.to_smash_module(&sp)).unwrap();
        ensure!(back == pm, "{}: partial → smash → partial differs", inst.label);
        let ann = pm.annihilator();
        ensure!(pa.is_h_stable(&ann), "{}: annihilator is not H-stable", inst.label);
        ensure!(pa.algebra().is_ideal(&ann, Side::TwoSided), "{}: annihilator is not an ideal", inst.label);
        trips += 1;
    }

    let caps = EnumCaps::default();
    let profile = Profile {
        primes: vec![5],
        max_full_dim: 6,
    };
    let mut g = Generator::new(0x4_17);
    let (mut ext, mut attempts) = (0, 0);
    while ext < 30 && attempts < 200 {
        attempts += 1;
        let inst = g.instance(&profile);
        let pa = &inst.action;
        let simples = simple_right_modules(pa.algebra(), caps).map_err(|e| e.to_string())?;
        for v in simples {
            ensure!(
                v.is_irreducible(caps).unwrap() == Irreducibility::Irreducible,
                "{}: V is not simple",
                inst.label
            );
            let x = match irreducible_extension(pa, &v, caps) {
                Ok(x) => x,
                Err(e) if is_cap(&e) => continue,
                Err(e) => return Err(format!("{}: {e}", inst.label)),
            };
            let m = &x.module;
            ensure!(m.check().passed(), "{}: extension fails the axioms: {}", inst.label, m.check());
            ensure!(
                m.is_irreducible(caps).unwrap() == Irreducibility::Irreducible,
                "{}: extension is not irreducible",
                inst.label
            );
            ensure!(
                m.dim() <= pa.hopf().dim() * v.dim,
                "{}: dim {} > dim H · dim V = {}",
                inst.label,
                m.dim(),
                pa.hopf().dim() * v.dim
            );
            ensure!(x.image_of_v().dim() == v.dim, "{}: V does not embed", inst.label);
            // the embedded copy is an A-submodule isomorphic to V
            let a_mod = m.a_module();
            let img = x.image_of_v();
            ensure!(a_mod.submodule(&img.basis_vectors().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap() == img, "{}: V is not A-stable", inst.label);
            ext += 1;
        }
    }
    ensure!(ext >= 25, "only {ext} extensions over F5");
    Ok(format!("{trips} module round trips with H-stable annihilators; {ext} irreducible extensions over F5"))
}

fn ac9() -> Outcome {
    let mut g = Generator::new(0xac9);
    let trace = RadicalOptions {
        method: Some(RadicalMethod::TraceForm),
        ..RadicalOptions::default()
    };
    let brute = RadicalOptions {
        method: Some(RadicalMethod::BruteNilpotent),
        field_cap: 7,
        ..RadicalOptions::default()
    };
    let auto = RadicalOptions {
        field_cap: 7,
        ..RadicalOptions::default()
    };
    let mut compared = 0;
    let mut nonzero = 0;
    let mut quotients = 0;
    for round in 0..120 {
        let (field, max_dim) = match round % 4 {
            0 => (fp(5), 4),
            1 => (fp(7), 4),
            2 => (fp(2), 4),
            _ => (q(), 6),
        };
        let a = g.algebra(field, max_dim);
        let p = field.characteristic();
        let auto_j = jacobson_radical(&a, &auto).map_err(|e| e.to_string())?;
        if field.is_finite() && p > a.dim() as u64 {
            let t = jacobson_radical(&a, &trace).map_err(|e| e.to_string())?;
            let b = jacobson_radical(&a, &brute).map_err(|e| e.to_string())?;
            ensure!(t.radical == b.radical, "dim {} over F{p}: trace form {} vs brute {}", a.dim(), t.radical.dim(), b.radical.dim());
            compared += 1;
            if !t.radical.is_zero() {
                nonzero += 1;
            }
        }
        let j = &auto_j.radical;
        ensure!(a.is_ideal(j, Side::TwoSided) && a.is_nilpotent_subspace(j), "J is not a nilpotent ideal");
        if !j.is_full() {
            let (quot, _) = a.quotient_algebra(j).unwrap();
            let jj = jacobson_radical(&quot, &auto).map_err(|e| e.to_string())?;
            ensure!(jj.radical.is_zero(), "J(A/J) has dim {}", jj.radical.dim());
            quotients += 1;
        }
    }
    ensure!(compared >= 50, "only {compared} algebras with char > dim");
    Ok(format!(
        "trace form = brute force on {compared} algebras ({nonzero} with J != 0); J(A/J) = 0 on {quotients}"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("AC-1", ac1),
        ("AC-2", ac2),
        ("AC-3", ac3),
        ("AC-4", ac4),
        ("AC-5", ac5),
        ("AC-6", ac6),
        ("AC-7", ac7),
        ("AC-8", ac8),
        ("AC-9", ac9),
    ];
    let mut failed = 0;
    for (id, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(s) => println!("{id} PASS: {s}"),
            Err(s) => {
                failed += 1;
                println!("{id} FAIL: {s}");
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
