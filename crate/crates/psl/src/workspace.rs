//! The `psl-workspace/1` JSON format and name resolution.
//!
//! Loading validates shapes and references only; the algebraic axioms of
//! explicit tensors are left to `psl check`, which reports witnesses.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use psl_core::algebra::{Algebra, Side};
use psl_core::exactla::{Field, Matrix, Scalar, Subspace, Vector};
use psl_core::gen;
use psl_core::hopf::{dual_group_algebra, dual_hopf, group_algebra, sweedler_h4, GroupTable, HopfAlgebra};
use psl_core::paction::{
    c4_triple, dual_group_idempotent, dual_group_regular_action, induce_from_ideal, trivial_action, PartialAction, PartialCoaction,
};
use psl_core::pmod::{AlgebraModule, ModuleSide, PartialModule};
use psl_core::smash::build_partial_smash;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

pub const VERSION: &str = "psl-workspace/1";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub version: String,
    /// `"Q"` or `"F<p>"`.
    pub field: String,
    #[serde(default)]
    pub groups: BTreeMap<String, GroupSpec>,
    #[serde(default)]
    pub hopf: BTreeMap<String, HopfSpec>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub actions: BTreeMap<String, ActionSpec>,
    #[serde(default)]
    pub coactions: BTreeMap<String, CoactionSpec>,
    #[serde(default)]
    pub ideals: BTreeMap<String, IdealSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric3,
    Product([String; 2]),
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum HopfSpec {
    GroupAlgebra(String),
    DualGroupAlgebra(String),
    Sweedler,
    Dual(String),
    /// `comul[i][j][k]` is the coefficient of `h_j ⊗ h_k` in `Δ(h_i)`;
    /// `antipode` is a list of rows.
    Explicit {
        algebra: String,
        comul: Vec<Vec<Vec<Value>>>,
        counit: Vec<Value>,
        antipode: Vec<Vec<Value>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    ProductOfFields(usize),
    TruncatedPolynomial(usize),
    Matrix(usize),
    UpperTriangular(usize),
    GroupAlgebra(String),
    /// Underlying algebra of a named Hopf algebra.
    Hopf(String),
    DirectProduct([String; 2]),
    TensorProduct([String; 2]),
    Quotient {
        algebra: String,
        ideal: String,
    },
    /// `mult[i][j]` holds the coordinates of `e_i e_j`.
    Explicit {
        mult: Vec<Vec<Vec<Value>>>,
        unit: Vec<Value>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ActionSpec {
    /// `C₄` acting partially on `k³`.
    C4Triple,
    Trivial {
        hopf: String,
        algebra: String,
    },
    DualGroupRegular(String),
    DualGroupIdempotent {
        group: String,
        subgroup: Vec<usize>,
    },
    Induce {
        action: String,
        idempotent: Vec<Value>,
    },
    Quotient {
        action: String,
        ideal: String,
    },
    DirectProduct([String; 2]),
    /// `act[i][j]` holds the coordinates of `h_i · e_j`.
    Explicit {
        hopf: String,
        algebra: String,
        act: Vec<Vec<Vec<Value>>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum CoactionSpec {
    /// `ρ(a) = Σ (h_i·a) ⊗ p_i` over the dual Hopf algebra.
    FromAction(String),
    /// `rho` has `dim A · dim C` rows and `dim A` columns.
    Explicit {
        algebra: String,
        hopf: String,
        rho: Vec<Vec<Value>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    /// The algebra, or an action whose algebra is meant.
    #[serde(rename = "in")]
    pub within: String,
    pub vectors: Vec<Vec<Value>>,
    /// Take the two-sided ideal generated by `vectors` instead of their span.
    #[serde(default)]
    pub generate: bool,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum SideSpec {
    Left,
    Right,
}

impl From<SideSpec> for ModuleSide {
    fn from(s: SideSpec) -> ModuleSide {
        match s {
            SideSpec::Left => ModuleSide::Left,
            SideSpec::Right => ModuleSide::Right,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// The smash product acting on itself, converted to a partial module.
    RegularSmash { action: String, side: SideSpec },
    /// `a_act[j]` and `h_act[i]` are operator matrices given as rows.
    Explicit {
        action: String,
        side: SideSpec,
        a_act: Vec<Vec<Vec<Value>>>,
        h_act: Vec<Vec<Vec<Value>>>,
    },
}

/// What a name refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Group,
    Hopf,
    Algebra,
    Action,
    Coaction,
    Ideal,
    Module,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::Hopf => "hopf algebra",
            Kind::Algebra => "algebra",
            Kind::Action => "partial action",
            Kind::Coaction => "partial coaction",
            Kind::Ideal => "ideal",
            Kind::Module => "partial module",
        }
    }
}

/// A loaded workspace; resolution is recursive with a depth guard.
pub struct Workspace {
    pub file: WorkspaceFile,
    pub field: Field,
}

const MAX_DEPTH: usize = 32;

/// Built-in action names available without a workspace.
pub fn builtin_action(name: &str) -> Option<PartialAction> {
    match name {
        "FIX-A" => Some(gen::fix_a()),
        "FIX-B" => Some(gen::fix_b()),
        "FIX-C" => Some(gen::fix_c(1)),
        "FIX-D" => Some(gen::fix_d()),
        _ => gen::finite_fixtures().into_iter().find(|i| i.label == name).map(|i| i.action),
    }
}

pub fn builtin_names() -> Vec<String> {
    let mut v: Vec<String> = ["FIX-A", "FIX-B", "FIX-C", "FIX-D"].iter().map(|s| s.to_string()).collect();
    v.extend(gen::finite_fixtures().into_iter().map(|i| i.label).filter(|l| l.contains('/')));
    v
}

pub fn parse_field(s: &str) -> Result<Field, CliError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("Q") {
        return Ok(Field::Rational);
    }
    let digits = t.strip_prefix("Fp").or_else(|| t.strip_prefix('F')).or_else(|| t.strip_prefix('f'));
    let p: u64 = digits
        .and_then(|d| d.trim_start_matches(':').parse().ok())
        .ok_or_else(|| CliError::Parse(format!("field must be \"Q\" or \"F<p>\", got {s:?}")))?;
    Field::prime(p).map_err(|e| CliError::Parse(e.to_string()))
}

fn scalar(field: Field, v: &Value) -> Result<Scalar, CliError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| field.from_i64(i))
            .ok_or_else(|| CliError::Parse(format!("{n} is not an integer; write fractions as \"num/den\" strings"))),
        Value::String(s) => field
            .parse(s)
            .ok_or_else(|| CliError::Parse(format!("cannot read {s:?} as an element of {field}"))),
        other => Err(CliError::Parse(format!("expected a scalar, got {other}"))),
    }
}

fn vector(field: Field, vs: &[Value]) -> Result<Vector, CliError> {
    vs.iter().map(|v| scalar(field, v)).collect()
}

fn matrix(field: Field, rows: &[Vec<Value>], shape: (usize, usize), what: &str) -> Result<Matrix, CliError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(CliError::Parse(format!("{what} must be a {}×{} matrix", shape.0, shape.1)));
    }
    let rows = rows.iter().map(|r| vector(field, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(field, shape.1, rows)?)
}

/// Flattens `t[i][j][k]` after checking it is `n×n×n`-shaped (first index `m`).
fn tensor(field: Field, t: &[Vec<Vec<Value>>], m: usize, n: usize, what: &str) -> Result<Vec<Scalar>, CliError> {
    let shaped = t.len() == m && t.iter().all(|a| a.len() == n && a.iter().all(|b| b.len() == n));
    if !shaped {
        return Err(CliError::Parse(format!("{what} must have shape {m}×{n}×{n}")));
    }
    let mut out = Vec::with_capacity(m * n * n);
    for a in t {
        for b in a {
            out.extend(vector(field, b)?);
        }
    }
    Ok(out)
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Workspace, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Workspace::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Workspace, CliError> {
        let file: WorkspaceFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if file.version != VERSION {
            return Err(CliError::Parse(format!("unsupported version {:?}, expected {VERSION:?}", file.version)));
        }
        let field = parse_field(&file.field)?;
        let ws = Workspace { file, field };
        let mut seen = BTreeSet::new();
        for name in ws.names() {
            if !seen.insert(name.0.clone()) {
                return Err(CliError::Parse(format!("name {:?} is defined twice", name.0)));
            }
        }
        // resolve everything once so broken references surface at load
        for (name, kind) in ws.names() {
            ws.resolve_any(&name, kind)?;
        }
        Ok(ws)
    }

    pub fn names(&self) -> Vec<(String, Kind)> {
        let f = &self.file;
        let mut out = Vec::new();
        out.extend(f.groups.keys().map(|k| (k.clone(), Kind::Group)));
        out.extend(f.hopf.keys().map(|k| (k.clone(), Kind::Hopf)));
        out.extend(f.algebras.keys().map(|k| (k.clone(), Kind::Algebra)));
        out.extend(f.actions.keys().map(|k| (k.clone(), Kind::Action)));
        out.extend(f.coactions.keys().map(|k| (k.clone(), Kind::Coaction)));
        out.extend(f.ideals.keys().map(|k| (k.clone(), Kind::Ideal)));
        out.extend(f.modules.keys().map(|k| (k.clone(), Kind::Module)));
        out
    }

    pub fn kind_of(&self, name: &str) -> Option<Kind> {
        self.names().into_iter().find(|(n, _)| n == name).map(|(_, k)| k)
    }

    fn resolve_any(&self, name: &str, kind: Kind) -> Result<(), CliError> {
        match kind {
            Kind::Group => self.group(name).map(drop),
            Kind::Hopf => self.hopf(name).map(drop),
            Kind::Algebra => self.algebra(name).map(drop),
            Kind::Action => self.action(name).map(drop),
            Kind::Coaction => self.coaction(name).map(drop),
            Kind::Ideal => self.ideal(name).map(drop),
            Kind::Module => self.module(name).map(drop),
        }
    }

    fn unresolved(name: &str, kind: Kind) -> CliError {
        CliError::Unresolved(format!("no {} named {name:?}", kind.as_str()))
    }

    fn guard(depth: usize) -> Result<usize, CliError> {
        if depth > MAX_DEPTH {
            return Err(CliError::Parse("definitions are cyclic or nested too deeply".into()));
        }
        Ok(depth + 1)
    }

    pub fn group(&self, name: &str) -> Result<GroupTable, CliError> {
        self.group_at(name, 0)
    }

    fn group_at(&self, name: &str, depth: usize) -> Result<GroupTable, CliError> {
        let d = Self::guard(depth)?;
        let spec = self.file.groups.get(name).ok_or_else(|| Self::unresolved(name, Kind::Group))?;
        Ok(match spec {
            GroupSpec::Cyclic(n) => GroupTable::cyclic(*n)?,
            GroupSpec::Symmetric3 => GroupTable::symmetric3(),
            GroupSpec::Product([a, b]) => self.group_at(a, d)?.product(&self.group_at(b, d)?),
            GroupSpec::Table { table, labels } => {
                let labels = labels.clone().unwrap_or_else(|| (0..table.len()).map(|i| format!("g{i}")).collect());
                GroupTable::new(table.clone(), labels)?
            }
        })
    }

    pub fn hopf(&self, name: &str) -> Result<HopfAlgebra, CliError> {
        self.hopf_at(name, 0)
    }

    fn hopf_at(&self, name: &str, depth: usize) -> Result<HopfAlgebra, CliError> {
        let d = Self::guard(depth)?;
        let spec = self.file.hopf.get(name).ok_or_else(|| Self::unresolved(name, Kind::Hopf))?;
        let f = self.field;
        Ok(match spec {
            HopfSpec::GroupAlgebra(g) => group_algebra(f, &self.group_at(g, d)?),
            HopfSpec::DualGroupAlgebra(g) => dual_group_algebra(f, &self.group_at(g, d)?),
            HopfSpec::Sweedler => sweedler_h4(f)?,
            HopfSpec::Dual(h) => dual_hopf(&self.hopf_at(h, d)?),
            HopfSpec::Explicit {
                algebra,
                comul,
                counit,
                antipode,
            } => {
                let alg = self.algebra_at(algebra, d)?;
                let m = alg.dim();
                let comul = tensor(f, comul, m, m, "comul")?;
                let counit = vector(f, counit)?;
                let antipode = matrix(f, antipode, (m, m), "antipode")?;
                HopfAlgebra::new(alg, comul, counit, antipode)?
            }
        })
    }

    pub fn algebra(&self, name: &str) -> Result<Algebra, CliError> {
        self.algebra_at(name, 0)
    }

    fn algebra_at(&self, name: &str, depth: usize) -> Result<Algebra, CliError> {
        let d = Self::guard(depth)?;
        let spec = self.file.algebras.get(name).ok_or_else(|| Self::unresolved(name, Kind::Algebra))?;
        let f = self.field;
        Ok(match spec {
            AlgebraSpec::ProductOfFields(n) => Algebra::product_of_fields(f, *n),
            AlgebraSpec::TruncatedPolynomial(n) => gen::truncated_polynomial(f, *n),
            AlgebraSpec::Matrix(n) => gen::matrix_algebra(f, *n),
            AlgebraSpec::UpperTriangular(n) => gen::upper_triangular(f, *n),
            AlgebraSpec::GroupAlgebra(g) => group_algebra(f, &self.group_at(g, d)?).algebra().clone(),
            AlgebraSpec::Hopf(h) => self.hopf_at(h, d)?.algebra().clone(),
            AlgebraSpec::DirectProduct([a, b]) => self.algebra_at(a, d)?.direct_product(&self.algebra_at(b, d)?)?,
            AlgebraSpec::TensorProduct([a, b]) => self.algebra_at(a, d)?.tensor_product(&self.algebra_at(b, d)?)?,
            AlgebraSpec::Quotient { algebra, ideal } => {
                let a = self.algebra_at(algebra, d)?;
                let (owner, i) = self.ideal_at(ideal, d)?;
                if owner != a {
                    return Err(CliError::Parse(format!("ideal {ideal:?} does not live in algebra {algebra:?}")));
                }
                a.quotient_algebra(&i)?.0
            }
            AlgebraSpec::Explicit { mult, unit, labels } => {
                let n = unit.len();
                let mult = tensor(f, mult, n, n, "mult")?;
                let labels = labels.clone().unwrap_or_else(|| (0..n).map(|i| format!("e{}", i + 1)).collect());
                if labels.len() != n {
                    return Err(CliError::Parse(format!("algebra {name:?} needs {n} labels")));
                }
                Algebra::new(f, n, mult, vector(f, unit)?, labels)?
            }
        })
    }

    pub fn action(&self, name: &str) -> Result<PartialAction, CliError> {
        self.action_at(name, 0)
    }

    fn action_at(&self, name: &str, depth: usize) -> Result<PartialAction, CliError> {
        let d = Self::guard(depth)?;
        let spec = self.file.actions.get(name).ok_or_else(|| Self::unresolved(name, Kind::Action))?;
        let f = self.field;
        Ok(match spec {
            ActionSpec::C4Triple => c4_triple(f),
            ActionSpec::Trivial { hopf, algebra } => trivial_action(&self.hopf_at(hopf, d)?, &self.algebra_at(algebra, d)?)?,
            ActionSpec::DualGroupRegular(g) => dual_group_regular_action(f, &self.group_at(g, d)?),
            ActionSpec::DualGroupIdempotent { group, subgroup } => dual_group_idempotent(f, &self.group_at(group, d)?, subgroup)?,
            ActionSpec::Induce { action, idempotent } => induce_from_ideal(&self.action_at(action, d)?, &vector(f, idempotent)?)?,
            ActionSpec::Quotient { action, ideal } => {
                let pa = self.action_at(action, d)?;
                let (owner, i) = self.ideal_at(ideal, d)?;
                if owner != *pa.algebra() {
                    return Err(CliError::Parse(format!("ideal {ideal:?} does not live in the algebra of {action:?}")));
                }
                pa.quotient_action(&i)?.0
            }
            ActionSpec::DirectProduct([a, b]) => self.action_at(a, d)?.direct_product(&self.action_at(b, d)?)?,
            ActionSpec::Explicit { hopf, algebra, act } => {
                let h = self.hopf_at(hopf, d)?;
                let a = self.algebra_at(algebra, d)?;
                let t = tensor(f, act, h.dim(), a.dim(), "act")?;
                PartialAction::new(h, a, t)?
            }
        })
    }

    pub fn coaction(&self, name: &str) -> Result<PartialCoaction, CliError> {
        let spec = self.file.coactions.get(name).ok_or_else(|| Self::unresolved(name, Kind::Coaction))?;
        Ok(match spec {
            CoactionSpec::FromAction(a) => self.action_at(a, 1)?.to_coaction(),
            CoactionSpec::Explicit { algebra, hopf, rho } => {
                let a = self.algebra_at(algebra, 1)?;
                let h = self.hopf_at(hopf, 1)?;
                let rho = matrix(self.field, rho, (a.dim() * h.dim(), a.dim()), "rho")?;
                PartialCoaction::new(a, h, rho)?
            }
        })
    }

    /// The algebra an ideal lives in, and the ideal.
    pub fn ideal(&self, name: &str) -> Result<(Algebra, Subspace), CliError> {
        self.ideal_at(name, 0)
    }

    /// The action named by an ideal's `in` field, if it is one.
    pub fn ideal_action(&self, name: &str) -> Option<PartialAction> {
        let spec = self.file.ideals.get(name)?;
        self.action_at(&spec.within, 1).ok()
    }

    fn ideal_at(&self, name: &str, depth: usize) -> Result<(Algebra, Subspace), CliError> {
        let d = Self::guard(depth)?;
        let spec = self.file.ideals.get(name).ok_or_else(|| Self::unresolved(name, Kind::Ideal))?;
        let a = if self.file.actions.contains_key(&spec.within) {
            self.action_at(&spec.within, d)?.algebra().clone()
        } else if self.file.algebras.contains_key(&spec.within) {
            self.algebra_at(&spec.within, d)?
        } else {
            return Err(CliError::Unresolved(format!(
                "ideal {name:?} refers to {:?}, which is neither an algebra nor an action",
                spec.within
            )));
        };
        let vs = spec.vectors.iter().map(|v| vector(self.field, v)).collect::<Result<Vec<_>, _>>()?;
        if vs.iter().any(|v| v.len() != a.dim()) {
            return Err(CliError::Parse(format!("ideal {name:?}: vectors must have length {}", a.dim())));
        }
        let s = if spec.generate {
            a.ideal_closure(&vs, Side::TwoSided)?
        } else {
            Subspace::span(self.field, a.dim(), &vs)?
        };
        Ok((a, s))
    }

    pub fn module(&self, name: &str) -> Result<PartialModule, CliError> {
        let spec = self.file.modules.get(name).ok_or_else(|| Self::unresolved(name, Kind::Module))?;
        Ok(match spec {
            ModuleSpec::RegularSmash { action, side } => {
                let pa = self.action_at(action, 1)?;
                let sp = build_partial_smash(&pa);
                let reg = AlgebraModule::regular(sp.carrier(), (*side).into());
                PartialModule::from_smash_module(&sp, &reg)?
            }
            ModuleSpec::Explicit { action, side, a_act, h_act } => {
                let pa = self.action_at(action, 1)?;
                let dim = a_act.first().or(h_act.first()).map_or(0, |m| m.len());
                let a_ops = a_act
                    .iter()
                    .map(|m| matrix(self.field, m, (dim, dim), "a_act entry"))
                    .collect::<Result<Vec<_>, _>>()?;
                let h_ops = h_act
                    .iter()
                    .map(|m| matrix(self.field, m, (dim, dim), "h_act entry"))
                    .collect::<Result<Vec<_>, _>>()?;
                PartialModule::new((*side).into(), pa, dim, a_ops, h_ops)?
            }
        })
    }

    /// Every action, in name order.
    pub fn actions(&self) -> Result<Vec<(String, PartialAction)>, CliError> {
        self.file
            .actions
            .keys()
            .map(|k| Ok((k.clone(), self.action(k)?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields() {
        assert_eq!(parse_field("Q").unwrap(), Field::Rational);
        assert_eq!(parse_field("F5").unwrap(), Field::prime(5).unwrap());
        assert_eq!(parse_field("Fp7").unwrap(), Field::prime(7).unwrap());
        assert!(parse_field("F6").is_err());
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn loads_and_resolves() {
        let ws = Workspace::from_json(
            r#"{
              "version": "psl-workspace/1",
              "field": "Q",
              "groups": {"C2": {"cyclic": 2}},
              "hopf": {"H": {"group_algebra": "C2"}},
              "algebras": {"A": {"product_of_fields": 2}},
              "actions": {"T": {"trivial": {"hopf": "H", "algebra": "A"}}},
              "ideals": {"I": {"in": "T", "vectors": [["1", "0"]]}}
            }"#,
        )
        .unwrap();
        assert_eq!(ws.action("T").unwrap().algebra().dim(), 2);
        assert_eq!(ws.ideal("I").unwrap().1.dim(), 1);
        assert_eq!(ws.kind_of("H"), Some(Kind::Hopf));
    }

    #[test]
    fn bad_references_and_versions() {
        let bad_ref = r#"{"version": "psl-workspace/1", "field": "Q",
            "actions": {"T": {"trivial": {"hopf": "nope", "algebra": "A"}}}}"#;
        assert!(matches!(Workspace::from_json(bad_ref), Err(CliError::Unresolved(_))));
        let bad_version = r#"{"version": "psl-workspace/2", "field": "Q"}"#;
        assert!(matches!(Workspace::from_json(bad_version), Err(CliError::Parse(_))));
        let cyclic = r#"{"version": "psl-workspace/1", "field": "Q",
            "algebras": {"A": {"direct_product": ["A", "A"]}}}"#;
        assert!(matches!(Workspace::from_json(cyclic), Err(CliError::Parse(_))));
        let dup = r#"{"version": "psl-workspace/1", "field": "Q",
            "groups": {"X": {"cyclic": 2}}, "algebras": {"X": {"matrix": 2}}}"#;
        assert!(matches!(Workspace::from_json(dup), Err(CliError::Parse(_))));
    }
}
