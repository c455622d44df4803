//! `psl`: load workspace definitions, check axioms, build partial smash
//! products, compute radicals and run the theorem suites.
//!
//! Exit codes: 0 pass, 1 mathematical failure (with witness), 2 usage,
//! parse or resolution errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use psl_core::algebra::{Algebra, Side};
use psl_core::exactla::{EnumCaps, Scalar, Subspace};
use psl_core::gen::Instance;
use psl_core::paction::PartialAction;
use psl_core::radicals::{
    enumerate_h_stable_ideals, enumerate_ideals, h_jacobson_radical, h_prime_radical, is_h_prime, jacobson_radical, prime_radical,
    RadicalOptions,
};
use psl_core::smash::build_partial_smash;
use psl_core::verify::{default_instances, verify_instances, Status, TheoremId, VerifyOptions};
use serde_json::{json, Value};

pub mod workspace;

use workspace::{builtin_action, builtin_names, Kind, Workspace};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unresolved reference: {0}")]
    Unresolved(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] psl_core::Error),
}

impl CliError {
    /// Extra advice printed after the message.
    pub fn guidance(&self) -> Option<&'static str> {
        match self {
            CliError::Core(psl_core::Error::UnsupportedCharacteristic { .. }) => Some(
                "hint: the trace form needs characteristic 0 or above the dimension; \
                 otherwise raise --dim-cap / --field-cap to allow brute force",
            ),
            CliError::Core(psl_core::Error::DimensionTooLarge { .. }) => Some("hint: raise --dim-cap"),
            CliError::Core(psl_core::Error::FieldNotFinite(_)) => {
                Some("hint: exhaustive enumeration runs over a finite field; use a workspace with \"field\": \"F<p>\" or a built-in like FIX-A/F3")
            }
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "psl", version, about = "Partial Hopf actions, partial smash products and their radicals")]
pub struct Cli {
    /// Workspace file (JSON, version "psl-workspace/1").
    #[arg(long, global = true)]
    pub workspace: Option<PathBuf>,
    /// Seed for randomized instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of random instances per theorem.
    #[arg(long, global = true, default_value_t = 20)]
    pub trials: usize,
    /// Largest dimension for exhaustive searches.
    #[arg(long, global = true, default_value_t = 6)]
    pub dim_cap: usize,
    /// Largest field order for brute-force radicals.
    #[arg(long, global = true, default_value_t = 5)]
    pub field_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom checker for a named object.
    Check { name: String },
    /// Build the partial smash product of a named action.
    Smash { action: String },
    /// J, P of A, their H-versions, and J, P of the smash product.
    Radicals { action: String },
    /// Run a theorem suite (T3.6, C3.7, P4.20, P4.22, C4.13, T4.14, T4.26,
    /// T5.1, T5.6, C5.7, T5.8, C5.9, NEG-SS).
    Verify {
        theorem: String,
        /// Restrict to these workspace actions (default: all of them).
        #[arg(long = "action")]
        actions: Vec<String>,
    },
    /// List the ideals of an algebra, or the H-stable ideals of an action.
    EnumerateIdeals { name: String },
}

/// A finished command: pass/fail plus both renderings.
#[derive(Debug)]
pub struct Outcome {
    pub passed: bool,
    pub text: String,
    pub json: Value,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

struct Ctx {
    ws: Option<Workspace>,
    radicals: RadicalOptions,
    seed: u64,
    trials: usize,
}

impl Ctx {
    fn action(&self, name: &str) -> Result<PartialAction, CliError> {
        if let Some(ws) = &self.ws {
            if ws.kind_of(name) == Some(Kind::Action) {
                return ws.action(name);
            }
        }
        builtin_action(name).ok_or_else(|| {
            CliError::Unresolved(format!(
                "no partial action named {name:?} (built-ins: {})",
                builtin_names().join(", ")
            ))
        })
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let ws = cli.workspace.as_deref().map(Workspace::load).transpose()?;
    let enumeration = EnumCaps {
        dim_cap: cli.dim_cap,
        ..EnumCaps::default()
    };
    let ctx = Ctx {
        ws,
        radicals: RadicalOptions {
            method: None,
            dim_cap: cli.dim_cap,
            field_cap: cli.field_cap,
            enumeration,
        },
        seed: cli.seed,
        trials: cli.trials,
    };
    match &cli.command {
        Command::Check { name } => cmd_check(&ctx, name),
        Command::Smash { action } => cmd_smash(&ctx, action),
        Command::Radicals { action } => cmd_radicals(&ctx, action),
        Command::Verify { theorem, actions } => cmd_verify(&ctx, theorem, actions),
        Command::EnumerateIdeals { name } => cmd_enumerate(&ctx, name),
    }
}

/// Parse arguments, run, print, and return the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.output {
                OutputFormat::Text => emit(&out.text),
                OutputFormat::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&out.json).expect("json"))),
            }
            out.exit_code()
        }
        Err(e) => {
            match cli.output {
                OutputFormat::Text => {
                    eprintln!("error: {e}");
                    if let Some(g) = e.guidance() {
                        eprintln!("{g}");
                    }
                }
                OutputFormat::Json => {
                    emit(&format!("{}\n", json!({"error": e.to_string(), "hint": e.guidance()})));
                }
            }
            2
        }
    }
}

/// Writes to stdout, tolerating a closed pipe (`psl … | head`).
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn scalars(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn basis_json(s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().map(|r| json!(scalars(r))).collect())
}

fn fmt_vec(v: &[Scalar]) -> String {
    format!("[{}]", scalars(v).join(", "))
}

fn basis_text(s: &Subspace, indent: &str) -> String {
    let mut out = String::new();
    for r in s.basis_vectors() {
        let _ = writeln!(out, "{indent}{}", fmt_vec(r));
    }
    out
}

fn check_json(name: &str, passed: bool, report: &dyn std::fmt::Display, witnesses: Value) -> Value {
    json!({"check": name, "passed": passed, "report": report.to_string(), "witnesses": witnesses})
}

fn algebra_check(a: &Algebra) -> (bool, String, Value) {
    let r = a.check_algebra();
    let j = check_json(
        "algebra",
        r.passed(),
        &r,
        json!({"associativity": r.associativity, "left_unit": r.left_unit, "right_unit": r.right_unit}),
    );
    (r.passed(), r.to_string(), j)
}

fn hopf_check(h: &psl_core::hopf::HopfAlgebra) -> (bool, String, Value) {
    let r = h.check_hopf();
    let j = check_json(
        "hopf",
        r.passed(),
        &r,
        json!({
            "coassociativity": r.coassociativity, "counit": r.counit,
            "comul_multiplicative": r.comul_multiplicative, "comul_unit": r.comul_unit,
            "counit_multiplicative": r.counit_multiplicative, "counit_unit": r.counit_unit,
            "antipode": r.antipode,
        }),
    );
    (r.passed(), r.to_string(), j)
}

fn action_checks(pa: &PartialAction) -> Vec<(bool, String, Value)> {
    let r = pa.check_partial_action();
    let j = check_json(
        "partial action",
        r.passed(),
        &r,
        json!({"pa1": r.pa1, "pa2": r.pa2, "pa3": r.pa3, "pa4": r.pa4}),
    );
    vec![
        algebra_check(pa.algebra()),
        hopf_check(pa.hopf()),
        (r.passed(), r.to_string(), j),
    ]
}

fn finish(header: String, checks: Vec<(bool, String, Value)>, mut extra: Value) -> Outcome {
    let passed = checks.iter().all(|c| c.0);
    let mut text = header;
    for (_, t, _) in &checks {
        for line in t.lines() {
            let _ = writeln!(text, "  {line}");
        }
    }
    let _ = writeln!(text, "{}", if passed { "PASS" } else { "FAIL" });
    extra["passed"] = json!(passed);
    extra["checks"] = Value::Array(checks.into_iter().map(|c| c.2).collect());
    Outcome {
        passed,
        text,
        json: extra,
    }
}

fn cmd_check(ctx: &Ctx, name: &str) -> Result<Outcome, CliError> {
    let kind = match &ctx.ws {
        Some(ws) => ws.kind_of(name),
        None => None,
    };
    let kind = match kind {
        Some(k) => k,
        None if builtin_action(name).is_some() => Kind::Action,
        None => return Err(CliError::Unresolved(format!("nothing named {name:?}"))),
    };
    let header = format!("check {} {name}\n", kind.as_str());
    let base = json!({"command": "check", "name": name, "kind": kind.as_str()});
    let ws = ctx.ws.as_ref();
    let checks = match kind {
        Kind::Group => {
            let g = ws.expect("workspace").group(name)?;
            vec![(true, format!("group of order {}: valid Cayley table", g.order()), json!({"check": "group", "passed": true}))]
        }
        Kind::Hopf => {
            let h = ws.expect("workspace").hopf(name)?;
            vec![algebra_check(h.algebra()), hopf_check(&h)]
        }
        Kind::Algebra => vec![algebra_check(&ws.expect("workspace").algebra(name)?)],
        Kind::Action => {
            let pa = ctx.action(name)?;
            let mut c = action_checks(&pa);
            let global = pa.is_global();
            c.push((true, format!("global: {global}"), json!({"check": "global", "passed": true, "global": global})));
            c
        }
        Kind::Coaction => {
            let co = ws.expect("workspace").coaction(name)?;
            let r = co.check();
            let j = check_json("partial coaction", r.passed(), &r, json!({"pc1": r.pc1, "pc2": r.pc2, "pc3": r.pc3}));
            vec![(r.passed(), r.to_string(), j)]
        }
        Kind::Ideal => {
            let ws = ws.expect("workspace");
            let (a, i) = ws.ideal(name)?;
            let ok = a.is_ideal(&i, Side::TwoSided);
            let mut c = vec![(
                ok,
                format!("two-sided ideal of dim {}: {}", i.dim(), if ok { "pass" } else { "FAIL" }),
                json!({"check": "ideal", "passed": ok, "dim": i.dim(), "basis": basis_json(&i)}),
            )];
            if let Some(pa) = ws.ideal_action(name) {
                let stable = pa.is_h_stable(&i);
                c.push((
                    true,
                    format!("H-stable: {stable}"),
                    json!({"check": "h_stable", "passed": true, "h_stable": stable}),
                ));
            }
            c
        }
        Kind::Module => {
            let m = ws.expect("workspace").module(name)?;
            let r = m.check();
            let j = check_json(
                "partial module",
                r.passed(),
                &r,
                json!({"a_module": r.a_module, "a_unit": r.a_unit, "pm1": r.pm1, "pm3": r.pm3, "pm4": r.pm4}),
            );
            let mut c = vec![(r.passed(), r.to_string(), j)];
            if r.passed() {
                let ann = m.annihilator();
                let stable = m.action().is_h_stable(&ann);
                c.push((
                    stable,
                    format!("annihilator dim {}, H-stable: {stable}", ann.dim()),
                    json!({"check": "annihilator", "passed": stable, "dim": ann.dim(), "basis": basis_json(&ann)}),
                ));
            }
            c
        }
    };
    Ok(finish(header, checks, base))
}

/// Fails with the axiom witnesses before any construction on a bad action.
fn require_valid(pa: &PartialAction, name: &str, command: &str) -> Option<Outcome> {
    let checks = action_checks(pa);
    if checks.iter().all(|c| c.0) {
        return None;
    }
    let mut out = finish(
        format!("{command} {name}: input is not a partial action\n"),
        checks,
        json!({"command": command, "name": name}),
    );
    out.passed = false;
    Some(out)
}

fn cmd_smash(ctx: &Ctx, name: &str) -> Result<Outcome, CliError> {
    let pa = ctx.action(name)?;
    if let Some(out) = require_valid(&pa, name, "smash") {
        return Ok(out);
    }
    let sp = build_partial_smash(&pa);
    let full = sp.full().dim();
    let carrier = sp.carrier();
    let assoc = carrier.check_algebra();
    let dual = sp.dual_action().check_partial_action();
    let unit = carrier.unit().expect("carrier is unital").clone();
    let mut text = format!("smash {name}\n");
    let _ = writeln!(text, "full {full}, partial {}", sp.dim());
    let _ = writeln!(text, "carrier basis:");
    for l in carrier.labels() {
        let _ = writeln!(text, "  {l}");
    }
    let _ = writeln!(text, "unit: {}", fmt_vec(&unit));
    let _ = writeln!(text, "unit in A#H: {}", fmt_vec(sp.unit_element()));
    let _ = writeln!(text, "carrier {}", assoc);
    let _ = writeln!(
        text,
        "dual action on carrier: {} (global: {})",
        if dual.passed() { "pass" } else { "FAIL" },
        sp.dual_action().is_global()
    );
    let passed = assoc.passed() && dual.passed();
    let _ = writeln!(text, "{}", if passed { "PASS" } else { "FAIL" });
    Ok(Outcome {
        passed,
        text,
        json: json!({
            "command": "smash",
            "name": name,
            "passed": passed,
            "full_dim": full,
            "partial_dim": sp.dim(),
            "basis": carrier.labels(),
            "basis_in_tensor": sp.coords().row_vectors().map(scalars).collect::<Vec<_>>(),
            "unit": scalars(&unit),
            "unit_in_tensor": scalars(sp.unit_element()),
            "carrier_algebra": {"passed": assoc.passed(), "associativity": assoc.associativity},
            "dual_action": {"passed": dual.passed(), "global": sp.dual_action().is_global()},
        }),
    })
}

fn cmd_radicals(ctx: &Ctx, name: &str) -> Result<Outcome, CliError> {
    let pa = ctx.action(name)?;
    if let Some(out) = require_valid(&pa, name, "radicals") {
        return Ok(out);
    }
    let r = &ctx.radicals;
    let sp = build_partial_smash(&pa);
    let a = pa.algebra();
    let ja = jacobson_radical(a, r)?;
    let pa_rad = prime_radical(a, r)?;
    let jh = h_jacobson_radical(&pa, r)?;
    let ph = h_prime_radical(&pa, r)?;
    let js = jacobson_radical(sp.carrier(), r)?;
    let ps = prime_radical(sp.carrier(), r)?;
    let rows: [(&str, &Subspace, usize); 6] = [
        ("J(A)", &ja.radical, a.dim()),
        ("P(A)", &pa_rad, a.dim()),
        ("J_H(A)", &jh, a.dim()),
        ("P_H(A)", &ph, a.dim()),
        ("J(A#H)", &js.radical, sp.dim()),
        ("P(A#H)", &ps, sp.dim()),
    ];
    let mut text = format!("radicals {name} (A dim {}, A#H dim {})\n", a.dim(), sp.dim());
    let mut entries = serde_json::Map::new();
    for (label, s, ambient) in rows {
        let _ = writeln!(text, "{label}: dim {} of {ambient}", s.dim());
        text.push_str(&basis_text(s, "    "));
        entries.insert(label.to_string(), json!({"dim": s.dim(), "ambient": ambient, "basis": basis_json(s)}));
    }
    let _ = writeln!(text, "methods: A {}, A#H {}", ja.method, js.method);
    Ok(Outcome {
        passed: true,
        text,
        json: json!({
            "command": "radicals",
            "name": name,
            "passed": true,
            "radicals": entries,
            "methods": {"A": ja.method.to_string(), "smash": js.method.to_string()},
        }),
    })
}

fn cmd_verify(ctx: &Ctx, theorem: &str, only: &[String]) -> Result<Outcome, CliError> {
    let id: TheoremId = theorem.parse().map_err(|e: psl_core::verify::UnknownTheorem| CliError::Usage(e.to_string()))?;
    let opts = VerifyOptions {
        seed: ctx.seed,
        trials: ctx.trials,
        radicals: ctx.radicals,
    };
    let instances = match &ctx.ws {
        Some(ws) => {
            let mut v = Vec::new();
            for (n, pa) in ws.actions()? {
                if only.is_empty() || only.contains(&n) {
                    v.push(Instance { label: n, action: pa });
                }
            }
            for o in only {
                if !v.iter().any(|i| &i.label == o) {
                    v.push(Instance {
                        label: o.clone(),
                        action: ctx.action(o)?,
                    });
                }
            }
            // the workspace instances plus seeded random ones
            let random = VerifyOptions { trials: ctx.trials, ..opts.clone() };
            v.extend(
                default_instances(id, &random)
                    .into_iter()
                    .filter(|i| i.label.starts_with("random")),
            );
            v
        }
        None if !only.is_empty() => only
            .iter()
            .map(|o| Ok(Instance { label: o.clone(), action: ctx.action(o)? }))
            .collect::<Result<Vec<_>, CliError>>()?,
        None => default_instances(id, &opts),
    };
    for inst in &instances {
        if let Some(out) = require_valid(&inst.action, &inst.label, "verify") {
            return Ok(out);
        }
    }
    let rep = verify_instances(id, &instances, &opts);
    let text = format!("{rep}\n");
    let cases: Vec<Value> = rep
        .cases
        .iter()
        .map(|c| json!({"instance": c.instance, "status": c.status.to_string(), "detail": c.detail}))
        .collect();
    Ok(Outcome {
        passed: rep.passed(),
        text,
        json: json!({
            "command": "verify",
            "theorem": id.as_str(),
            "statement": id.statement(),
            "seed": ctx.seed,
            "passed": rep.passed(),
            "counts": {"pass": rep.count(Status::Pass), "fail": rep.count(Status::Fail), "skip": rep.count(Status::Skip)},
            "cases": cases,
        }),
    })
}

fn cmd_enumerate(ctx: &Ctx, name: &str) -> Result<Outcome, CliError> {
    let caps = ctx.radicals.enumeration;
    let kind = ctx.ws.as_ref().and_then(|w| w.kind_of(name));
    let (ideals, pa, what) = match kind {
        Some(Kind::Algebra) => {
            let a = ctx.ws.as_ref().expect("workspace").algebra(name)?;
            (enumerate_ideals(&a, caps)?, None, "two-sided ideals")
        }
        Some(Kind::Action) | None => {
            let pa = ctx.action(name)?;
            if let Some(out) = require_valid(&pa, name, "enumerate-ideals") {
                return Ok(out);
            }
            (enumerate_h_stable_ideals(&pa, caps)?, Some(pa), "H-stable ideals")
        }
        Some(k) => {
            return Err(CliError::Usage(format!(
                "{name:?} is a {}; enumerate-ideals needs an algebra or a partial action",
                k.as_str()
            )))
        }
    };
    let mut text = format!("{} {what} of {name}\n", ideals.len());
    let mut list = Vec::with_capacity(ideals.len());
    for (k, i) in ideals.iter().enumerate() {
        let prime = match &pa {
            Some(pa) => Some(is_h_prime(pa, i, caps)?),
            None => None,
        };
        let tag = match prime {
            Some(true) => ", H-prime",
            _ => "",
        };
        let _ = writeln!(text, "#{k}: dim {}{tag}", i.dim());
        text.push_str(&basis_text(i, "    "));
        list.push(json!({"dim": i.dim(), "basis": basis_json(i), "h_prime": prime}));
    }
    Ok(Outcome {
        passed: true,
        text,
        json: json!({"command": "enumerate-ideals", "name": name, "passed": true, "kind": what, "count": ideals.len(), "ideals": list}),
    })
}
