//! Partial (A,H)-modules, their equivalence with modules over the partial
//! smash product, and the extension constructions `V ↦ W`.
//!
//! Every action is stored as one matrix per basis element, acting on column
//! vectors of the carrier. For right modules the matrix of `a` is `m ↦ ma`,
//! so `R_{ab} = R_b R_a`.

use std::fmt;

use crate::algebra::{tensor_vectors, Algebra};
use crate::error::{Error, Result};
use crate::exactla::lattice::{closure_of_vectors, is_invariant, projective_points};
use crate::exactla::{enumerate_invariant_subspaces, kernel, vector, EnumCaps, Field, Matrix, Scalar, Subspace, Vector};
use crate::hopf::dual_hopf;
use crate::paction::PartialAction;
use crate::smash::SmashProduct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleSide {
    Left,
    Right,
}

/// Module over a plain algebra: one operator per basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraModule {
    pub side: ModuleSide,
    pub field: Field,
    pub dim: usize,
    pub ops: Vec<Matrix>,
}

fn combine_ops(field: Field, dim: usize, ops: &[Matrix], x: &[Scalar]) -> Matrix {
    let mut out = Matrix::zero(field, dim, dim);
    for (op, c) in ops.iter().zip(x) {
        if !c.is_zero() {
            out = out.add(&op.scale(c)).expect("shape");
        }
    }
    out
}

impl AlgebraModule {
    pub fn new(side: ModuleSide, field: Field, dim: usize, ops: Vec<Matrix>) -> Result<AlgebraModule> {
        for op in &ops {
            if op.field() != field {
                return Err(Error::FieldMismatch {
                    left: field,
                    right: op.field(),
                });
            }
            if op.rows() != dim || op.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: op.rows().max(op.cols()),
                });
            }
        }
        Ok(AlgebraModule { side, field, dim, ops })
    }

    /// `A` acting on itself.
    pub fn regular(alg: &Algebra, side: ModuleSide) -> AlgebraModule {
        let n = alg.dim();
        let ops = (0..n)
            .map(|i| match side {
                ModuleSide::Left => alg.left_mult_basis(i),
                ModuleSide::Right => alg.right_mult_basis(i),
            })
            .collect();
        AlgebraModule {
            side,
            field: alg.field(),
            dim: n,
            ops,
        }
    }

    /// Operator of an arbitrary algebra element.
    pub fn operator_of(&self, x: &[Scalar]) -> Matrix {
        combine_ops(self.field, self.dim, &self.ops, x)
    }

    /// Unital and compatible with the multiplication of `alg`; returns
    /// the basis pairs where `(ma)b ≠ m(ab)`.
    pub fn check(&self, alg: &Algebra) -> Result<Vec<(usize, usize)>> {
        let n = alg.dim();
        if self.ops.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.ops.len(),
            });
        }
        let unit = alg.require_unit()?;
        if self.operator_of(unit) != Matrix::identity(self.field, self.dim) {
            return Err(Error::NotAModule("unit does not act as the identity".into()));
        }
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.operator_of(&alg.basis_product(i, j));
                let rhs = match self.side {
                    ModuleSide::Left => self.ops[i].mul(&self.ops[j])?,
                    ModuleSide::Right => self.ops[j].mul(&self.ops[i])?,
                };
                if lhs != rhs {
                    bad.push((i, j));
                }
            }
        }
        Ok(bad)
    }

    /// Like [`check`](Self::check) but failing with `NotAModule`.
    pub fn require_module(&self, alg: &Algebra) -> Result<()> {
        let bad = self.check(alg)?;
        if let Some(p) = bad.first() {
            return Err(Error::NotAModule(format!("action is not associative at basis pair {p:?}")));
        }
        Ok(())
    }

    pub fn annihilator(&self) -> Subspace {
        annihilator_of(self.field, self.dim, &self.ops)
    }

    pub fn submodule(&self, gens: &[Vector]) -> Result<Subspace> {
        closure_of_vectors(self.field, self.dim, &self.ops, gens)
    }

    pub fn restrict(&self, u: &Subspace) -> Result<AlgebraModule> {
        AlgebraModule::new(self.side, self.field, u.dim(), restrict_ops(&self.ops, u)?)
    }

    pub fn quotient(&self, u: &Subspace) -> Result<AlgebraModule> {
        let ops = quotient_ops(&self.ops, u)?;
        AlgebraModule::new(self.side, self.field, self.dim - u.dim(), ops)
    }

    pub fn is_irreducible(&self, caps: EnumCaps) -> Result<Irreducibility> {
        irreducibility(self.field, self.dim, &self.ops, caps)
    }
}

fn annihilator_of(field: Field, dim: usize, ops: &[Matrix]) -> Subspace {
    let n = ops.len();
    if dim == 0 {
        return Subspace::full(field, n);
    }
    let cols: Vec<Vector> = ops.iter().map(|op| op.entries().to_vec()).collect();
    if n == 0 {
        return Subspace::zero(field, 0);
    }
    kernel(&Matrix::from_columns(field, dim * dim, &cols).expect("shape"))
}

/// Operators restricted to an invariant subspace, in its RREF basis.
pub fn restrict_ops(ops: &[Matrix], u: &Subspace) -> Result<Vec<Matrix>> {
    if !is_invariant(ops, u) {
        return Err(Error::NotAModule("subspace is not invariant".into()));
    }
    let basis: Vec<Vector> = u.basis_vectors().map(|r| r.to_vec()).collect();
    ops.iter()
        .map(|op| {
            let cols = basis
                .iter()
                .map(|b| Ok(u.coordinates(&op.apply(b)?)?.expect("invariant")))
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_columns(u.field(), u.dim(), &cols)
        })
        .collect()
}

/// Operators induced on `V/U`, on the cosets of the non-pivot unit vectors.
pub fn quotient_ops(ops: &[Matrix], u: &Subspace) -> Result<Vec<Matrix>> {
    if !is_invariant(ops, u) {
        return Err(Error::NotAModule("subspace is not invariant".into()));
    }
    let comp = u.complement_indices();
    let proj = u.quotient_map();
    ops.iter()
        .map(|op| {
            let cols = comp
                .iter()
                .map(|&c| proj.apply(&op.column(c)))
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_columns(u.field(), comp.len(), &cols)
        })
        .collect()
}

/// Outcome of an irreducibility test; over ℚ only sufficient conditions
/// are available, so the answer may be `Unknown`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

impl fmt::Display for Irreducibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Irreducibility::Irreducible => "irreducible",
            Irreducibility::Reducible => "reducible",
            Irreducibility::Unknown => "unknown",
        })
    }
}

/// Dimension of the unital algebra of matrices generated by `ops`.
fn enveloping_dim(field: Field, dim: usize, ops: &[Matrix]) -> usize {
    let flat = |m: &Matrix| m.entries().to_vec();
    let mut ech = crate::exactla::Echelon::new(field, dim * dim);
    let id = Matrix::identity(field, dim);
    ech.insert(&flat(&id));
    let mut queue = vec![id];
    while let Some(m) = queue.pop() {
        for op in ops {
            let p = op.mul(&m).expect("shape");
            if ech.insert(&flat(&p)) {
                queue.push(p);
            }
        }
    }
    ech.dim()
}

fn irreducibility(field: Field, dim: usize, ops: &[Matrix], caps: EnumCaps) -> Result<Irreducibility> {
    if dim == 0 {
        return Err(Error::ZeroModule);
    }
    if dim == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    if field.is_finite() {
        if dim > caps.dim_cap {
            return Err(Error::DimensionTooLarge {
                dim,
                cap: caps.dim_cap,
            });
        }
        for v in projective_points(field, dim)? {
            if !closure_of_vectors(field, dim, ops, &[v])?.is_full() {
                return Ok(Irreducibility::Reducible);
            }
        }
        return Ok(Irreducibility::Irreducible);
    }
    // Burnside: the operators span all of End(M) only if M is absolutely irreducible.
    if enveloping_dim(field, dim, ops) == dim * dim {
        return Ok(Irreducibility::Irreducible);
    }
    let mut candidates: Vec<Vector> = (0..dim).map(|i| vector::unit(field, dim, i)).collect();
    for op in ops {
        candidates.extend(kernel(op).basis_vectors().map(|r| r.to_vec()));
    }
    for v in candidates {
        if !vector::is_zero(&v) && !closure_of_vectors(field, dim, ops, &[v])?.is_full() {
            return Ok(Irreducibility::Reducible);
        }
    }
    Ok(Irreducibility::Unknown)
}

/// A module with compatible actions of `A` (`a_ops`, per basis of `A`) and
/// `H` (`h_ops`, per basis of `H`; `⊲` on the right, `⊳` on the left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialModule {
    pub side: ModuleSide,
    pa: PartialAction,
    dim: usize,
    a_ops: Vec<Matrix>,
    h_ops: Vec<Matrix>,
}

impl PartialModule {
    pub fn new(side: ModuleSide, pa: PartialAction, dim: usize, a_ops: Vec<Matrix>, h_ops: Vec<Matrix>) -> Result<PartialModule> {
        let f = pa.field();
        if a_ops.len() != pa.algebra().dim() {
            return Err(Error::DimensionMismatch {
                expected: pa.algebra().dim(),
                found: a_ops.len(),
            });
        }
        if h_ops.len() != pa.hopf().dim() {
            return Err(Error::DimensionMismatch {
                expected: pa.hopf().dim(),
                found: h_ops.len(),
            });
        }
        for op in a_ops.iter().chain(&h_ops) {
            if op.field() != f {
                return Err(Error::FieldMismatch {
                    left: f,
                    right: op.field(),
                });
            }
            if op.rows() != dim || op.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: op.rows().max(op.cols()),
                });
            }
        }
        Ok(PartialModule {
            side,
            pa,
            dim,
            a_ops,
            h_ops,
        })
    }

    /// `A` as a left partial module over itself, `h ⊳ a = h·a`.
    pub fn regular_left(pa: &PartialAction) -> PartialModule {
        let a = pa.algebra();
        let a_ops = (0..a.dim()).map(|i| a.left_mult_basis(i)).collect();
        PartialModule::new(ModuleSide::Left, pa.clone(), a.dim(), a_ops, pa.operators().to_vec()).expect("shape")
    }

    pub fn action(&self) -> &PartialAction {
        &self.pa
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.pa.field()
    }

    pub fn a_ops(&self) -> &[Matrix] {
        &self.a_ops
    }

    pub fn h_ops(&self) -> &[Matrix] {
        &self.h_ops
    }

    pub fn a_operator(&self, x: &[Scalar]) -> Matrix {
        combine_ops(self.field(), self.dim, &self.a_ops, x)
    }

    pub fn h_operator(&self, h: &[Scalar]) -> Matrix {
        combine_ops(self.field(), self.dim, &self.h_ops, h)
    }

    /// The underlying `A`-module.
    pub fn a_module(&self) -> AlgebraModule {
        AlgebraModule {
            side: self.side,
            field: self.field(),
            dim: self.dim,
            ops: self.a_ops.clone(),
        }
    }

    fn all_ops(&self) -> Vec<Matrix> {
        self.a_ops.iter().chain(&self.h_ops).cloned().collect()
    }

    /// A-module axioms, PM1, PM3 and PM4 on all basis tuples.
    pub fn check(&self) -> ModuleReport {
        let a = self.pa.algebra();
        let h = self.pa.hopf();
        let f = self.field();
        let id = Matrix::identity(f, self.dim);
        let mut r = ModuleReport::default();
        match self.a_module().check(a) {
            Ok(bad) => r.a_module = bad,
            Err(_) => r.a_unit = false,
        }
        r.pm1 = self.h_operator(h.unit()) == id;
        let (n, m) = (a.dim(), h.dim());
        for i in 0..m {
            for j in 0..n {
                let mut rhs = Matrix::zero(f, self.dim, self.dim);
                for (p, q, d) in h.coproduct_terms(i) {
                    let ha = self.pa.operator(*p).column(j);
                    let term = match self.side {
                        ModuleSide::Right => self.h_ops[*q].mul(&self.a_operator(&ha)),
                        ModuleSide::Left => self.a_operator(&ha).mul(&self.h_ops[*q]),
                    }
                    .expect("shape");
                    rhs = rhs.add(&term.scale(d)).expect("shape");
                }
                let lhs = match self.side {
                    ModuleSide::Right => self.a_ops[j].mul(&self.h_ops[i]),
                    ModuleSide::Left => self.h_ops[i].mul(&self.a_ops[j]),
                }
                .expect("shape");
                if lhs != rhs {
                    r.pm3.push((i, j));
                }
            }
        }
        for i in 0..m {
            for l in 0..m {
                let mut rhs = Matrix::zero(f, self.dim, self.dim);
                for (p, q, d) in h.coproduct_terms(i) {
                    let h2g = self.h_operator(&h.algebra().basis_product(*q, l));
                    let one = self.a_operator(self.pa.h_one(*p));
                    let term = match self.side {
                        ModuleSide::Right => h2g.mul(&one),
                        ModuleSide::Left => one.mul(&h2g),
                    }
                    .expect("shape");
                    rhs = rhs.add(&term.scale(d)).expect("shape");
                }
                // right: (m⊲h)⊲g ; left: h⊳(g⊳m)
                let lhs = match self.side {
                    ModuleSide::Right => self.h_ops[l].mul(&self.h_ops[i]),
                    ModuleSide::Left => self.h_ops[i].mul(&self.h_ops[l]),
                }
                .expect("shape");
                if lhs != rhs {
                    r.pm4.push((i, l));
                }
            }
        }
        r
    }

    /// `m(a#h) = (ma)⊲h` (right) or `(a#h)m = a(h⊳m)` (left), per carrier basis element.
    pub fn to_smash_module(&self, sp: &SmashProduct) -> AlgebraModule {
        let m = self.pa.hopf().dim();
        let f = self.field();
        let ops = sp
            .coords()
            .row_vectors()
            .map(|row| {
                let mut op = Matrix::zero(f, self.dim, self.dim);
                for (idx, c) in row.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (a, hh) = (idx / m, idx % m);
                    let term = match self.side {
                        ModuleSide::Right => self.h_ops[hh].mul(&self.a_ops[a]),
                        ModuleSide::Left => self.a_ops[a].mul(&self.h_ops[hh]),
                    }
                    .expect("shape");
                    op = op.add(&term.scale(c)).expect("shape");
                }
                op
            })
            .collect();
        AlgebraModule {
            side: self.side,
            field: f,
            dim: self.dim,
            ops,
        }
    }

    /// `ma = m(a#1)` and `m⊲h = m(1#h)` from a carrier module.
    pub fn from_smash_module(sp: &SmashProduct, module: &AlgebraModule) -> Result<PartialModule> {
        module.require_module(sp.carrier())?;
        let pa = sp.action();
        let (n, m) = (pa.algebra().dim(), pa.hopf().dim());
        let f = pa.field();
        let a_ops = (0..n)
            .map(|j| module.operator_of(&sp.include_a().matrix.column(j)))
            .collect();
        let one = pa.algebra().unit().expect("unital");
        let h_ops = (0..m)
            .map(|i| {
                let x = sp.project(&tensor_vectors(one, &vector::unit(f, m, i)))?;
                Ok(module.operator_of(&x))
            })
            .collect::<Result<Vec<_>>>()?;
        PartialModule::new(module.side, pa.clone(), module.dim, a_ops, h_ops)
    }

    /// `ann_A(M)`.
    pub fn annihilator(&self) -> Subspace {
        annihilator_of(self.field(), self.dim, &self.a_ops)
    }

    /// Smallest partial submodule containing `gens`.
    pub fn submodule(&self, gens: &[Vector]) -> Result<Subspace> {
        closure_of_vectors(self.field(), self.dim, &self.all_ops(), gens)
    }

    /// All partial submodules (finite fields only).
    pub fn submodules(&self, caps: EnumCaps) -> Result<Vec<Subspace>> {
        enumerate_invariant_subspaces(self.field(), self.dim, &self.all_ops(), caps)
    }

    pub fn restrict(&self, u: &Subspace) -> Result<PartialModule> {
        PartialModule::new(
            self.side,
            self.pa.clone(),
            u.dim(),
            restrict_ops(&self.a_ops, u)?,
            restrict_ops(&self.h_ops, u)?,
        )
    }

    pub fn quotient(&self, u: &Subspace) -> Result<PartialModule> {
        let a_ops = quotient_ops(&self.a_ops, u)?;
        let h_ops = quotient_ops(&self.h_ops, u)?;
        PartialModule::new(self.side, self.pa.clone(), self.dim - u.dim(), a_ops, h_ops)
    }

    /// No partial submodules besides `0` and `M`.
    pub fn is_irreducible(&self, caps: EnumCaps) -> Result<Irreducibility> {
        irreducibility(self.field(), self.dim, &self.all_ops(), caps)
    }
}

/// Failures found by [`PartialModule::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleReport {
    /// Basis pairs where the A-action is not associative.
    pub a_module: Vec<(usize, usize)>,
    pub a_unit: bool,
    pub pm1: bool,
    /// `(h_i, a_j)` violating PM3.
    pub pm3: Vec<(usize, usize)>,
    /// `(h_i, h_l)` violating PM4.
    pub pm4: Vec<(usize, usize)>,
}

impl Default for ModuleReport {
    fn default() -> Self {
        ModuleReport {
            a_module: Vec::new(),
            a_unit: true,
            pm1: true,
            pm3: Vec::new(),
            pm4: Vec::new(),
        }
    }
}

impl ModuleReport {
    pub fn passed(&self) -> bool {
        self.a_module.is_empty() && self.a_unit && self.pm1 && self.pm3.is_empty() && self.pm4.is_empty()
    }
}

impl fmt::Display for ModuleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "partial module axioms: pass");
        }
        writeln!(f, "partial module axioms: FAIL")?;
        if !self.a_unit || !self.a_module.is_empty() {
            writeln!(f, "  not an A-module (unit ok = {}, bad pairs {:?})", self.a_unit, self.a_module)?;
        }
        if !self.pm1 {
            writeln!(f, "  PM1 fails: 1_H does not act as the identity")?;
        }
        if let Some(w) = self.pm3.first() {
            writeln!(f, "  PM3 fails on {} pairs, first (h, a) = {:?}", self.pm3.len(), w)?;
        }
        if let Some(w) = self.pm4.first() {
            writeln!(f, "  PM4 fails on {} pairs, first (h, g) = {:?}", self.pm4.len(), w)?;
        }
        Ok(())
    }
}

/// A partial module built around an `A`-module `V`, with `V`'s image.
#[derive(Clone, Debug)]
pub struct Extension {
    pub module: PartialModule,
    /// Columns: images of the basis of `V` in module coordinates.
    pub embedding: Matrix,
    /// The carrier as a subspace of `V⊗H` (resp. `V⊗H*`), before any quotient.
    pub space: Subspace,
}

impl Extension {
    pub fn image_of_v(&self) -> Subspace {
        Subspace::image(&self.embedding)
    }
}

fn restrict_to(space: &Subspace, op: &Matrix) -> Result<Matrix> {
    let basis: Vec<Vector> = space.basis_vectors().map(|r| r.to_vec()).collect();
    let cols = basis
        .iter()
        .map(|b| {
            space
                .coordinates(&op.apply(b)?)?
                .ok_or_else(|| Error::AxiomViolation("extension space is not invariant".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(space.field(), space.dim(), &cols)
}

/// `W = span{Σ v(k₁·x) ⊗ k₂} ⊆ V⊗H` with `(u⊗k)a = Σ u(k₁·a) ⊗ k₂` and
/// `(u⊗k)⊲h = Σ u((kh)₁·1) ⊗ (kh)₂`; `V` embeds as `V⊗1_H`.
pub fn extend_right_module(pa: &PartialAction, v: &AlgebraModule) -> Result<Extension> {
    if v.side != ModuleSide::Right {
        return Err(Error::NotAModule("expected a right A-module".into()));
    }
    v.require_module(pa.algebra())?;
    let a = pa.algebra();
    let h = pa.hopf();
    let f = pa.field();
    let (n, m, d) = (a.dim(), h.dim(), v.dim);
    let big = d * m;

    // u⊗k ↦ Σ_{k₁⊗k₂} (u R_{k₁·x}) ⊗ k₂
    let right_by = |x: &[Scalar]| -> Matrix {
        let mut op = Matrix::zero(f, big, big);
        for k in 0..m {
            for (p, q, c) in h.coproduct_terms(k) {
                let r = v.operator_of(&pa.act(&vector::unit(f, m, *p), x).expect("shape"));
                for u in 0..d {
                    for w in 0..d {
                        let val = r.get(w, u);
                        if !val.is_zero() {
                            let (row, col) = (w * m + q, u * m + k);
                            let cur = op.get(row, col) + &(val * c);
                            op.set(row, col, cur);
                        }
                    }
                }
            }
        }
        op
    };
    let a_big: Vec<Matrix> = (0..n).map(|j| right_by(&vector::unit(f, n, j))).collect();
    let one_big = right_by(a.unit().expect("unital"));
    // (u⊗k)⊲h_l = ((u⊗kh_l)·1)
    let h_big: Vec<Matrix> = (0..m)
        .map(|l| {
            let mut shift = Matrix::zero(f, big, big);
            for k in 0..m {
                for (t, c) in h.algebra().product_terms(k, l) {
                    for u in 0..d {
                        let (row, col) = (u * m + t, u * m + k);
                        let cur = shift.get(row, col) + c;
                        shift.set(row, col, cur);
                    }
                }
            }
            one_big.mul(&shift).expect("shape")
        })
        .collect();

    let mut gens = Vec::with_capacity(d * n * m);
    for u in 0..d {
        for k in 0..m {
            let base = tensor_vectors(&vector::unit(f, d, u), &vector::unit(f, m, k));
            for op in &a_big {
                gens.push(op.apply(&base)?);
            }
        }
    }
    let space = Subspace::span(f, big, &gens)?;
    let a_ops = a_big.iter().map(|op| restrict_to(&space, op)).collect::<Result<Vec<_>>>()?;
    let h_ops = h_big.iter().map(|op| restrict_to(&space, op)).collect::<Result<Vec<_>>>()?;
    let emb_cols = (0..d)
        .map(|u| {
            let x = tensor_vectors(&vector::unit(f, d, u), h.unit());
            space
                .coordinates(&x)?
                .ok_or_else(|| Error::AxiomViolation("V⊗1 is not inside W".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = PartialModule::new(ModuleSide::Right, pa.clone(), space.dim(), a_ops, h_ops)?;
    Ok(Extension {
        module,
        embedding: Matrix::from_columns(f, space.dim(), &emb_cols)?,
        space,
    })
}

/// `W/U` for a largest partial submodule `U` of the right extension `W` with
/// `U ∩ V = 0`; irreducible when `V` is (finite fields only).
pub fn irreducible_extension(pa: &PartialAction, v: &AlgebraModule, caps: EnumCaps) -> Result<Extension> {
    if !pa.field().is_finite() {
        return Err(Error::FieldNotFinite(pa.field()));
    }
    let ext = extend_right_module(pa, v)?;
    let w = &ext.module;
    let image = ext.image_of_v();
    let subs = w.submodules(caps)?;
    let mut best: Option<&Subspace> = None;
    for u in &subs {
        if u.intersect(&image)?.is_zero() && best.is_none_or(|b| u.dim() > b.dim()) {
            best = Some(u);
        }
    }
    let u = best.expect("the zero submodule always qualifies");
    let module = w.quotient(u)?;
    let proj = u.quotient_map();
    let embedding = proj.mul(&ext.embedding)?;
    Ok(Extension {
        module,
        embedding,
        space: ext.space,
    })
}

/// `W = ρ(A)(V⊗H*)` with `a•w = ρ(a)w` and `h⊳w = ρ(1)(id⊗(h⇀))w`;
/// `V` embeds as `V⊗λ` for a left integral `λ` of `H*`.
pub fn extend_left_module(pa: &PartialAction, v: &AlgebraModule) -> Result<Extension> {
    if v.side != ModuleSide::Left {
        return Err(Error::NotAModule("expected a left A-module".into()));
    }
    v.require_module(pa.algebra())?;
    let a = pa.algebra();
    let h = pa.hopf();
    let hd = dual_hopf(h);
    let f = pa.field();
    let (n, m, d) = (a.dim(), h.dim(), v.dim);
    let big = d * m;

    // ρ(x)(u⊗φ) = Σ_i (h_i·x)u ⊗ p_i φ
    let rho = |x: &[Scalar]| -> Matrix {
        let mut op = Matrix::zero(f, big, big);
        for i in 0..m {
            let l = v.operator_of(&pa.operator(i).apply(x).expect("shape"));
            for phi in 0..m {
                for (t, c) in hd.algebra().product_terms(i, phi) {
                    for u in 0..d {
                        for w in 0..d {
                            let val = l.get(w, u);
                            if !val.is_zero() {
                                let (row, col) = (w * m + t, u * m + phi);
                                let cur = op.get(row, col) + &(val * c);
                                op.set(row, col, cur);
                            }
                        }
                    }
                }
            }
        }
        op
    };
    let a_big: Vec<Matrix> = (0..n).map(|j| rho(&vector::unit(f, n, j))).collect();
    let rho_one = rho(a.unit().expect("unital"));
    // h_a ⇀ p_b = Σ_k c[k][a][b] p_k
    let h_big: Vec<Matrix> = (0..m)
        .map(|ha| {
            let mut hit = Matrix::zero(f, big, big);
            for k in 0..m {
                for (b, c) in h.algebra().product_terms(k, ha) {
                    for u in 0..d {
                        // (h_a ⇀ p_b)(h_k) = p_b(h_k h_a)
                        let (row, col) = (u * m + k, u * m + *b);
                        let cur = hit.get(row, col) + c;
                        hit.set(row, col, cur);
                    }
                }
            }
            rho_one.mul(&hit).expect("shape")
        })
        .collect();

    let mut gens = Vec::with_capacity(d * n * m);
    for u in 0..d {
        for phi in 0..m {
            let base = tensor_vectors(&vector::unit(f, d, u), &vector::unit(f, m, phi));
            for op in &a_big {
                gens.push(op.apply(&base)?);
            }
        }
    }
    let space = Subspace::span(f, big, &gens)?;
    let a_ops = a_big.iter().map(|op| restrict_to(&space, op)).collect::<Result<Vec<_>>>()?;
    let h_ops = h_big.iter().map(|op| restrict_to(&space, op)).collect::<Result<Vec<_>>>()?;

    let integrals = hd.left_integrals();
    if integrals.dim() != 1 {
        return Err(Error::AxiomViolation(format!(
            "space of left integrals of H* has dimension {}",
            integrals.dim()
        )));
    }
    let lambda = integrals.basis_vectors().next().expect("dim 1").to_vec();
    let emb_cols = (0..d)
        .map(|u| {
            let x = tensor_vectors(&vector::unit(f, d, u), &lambda);
            space
                .coordinates(&x)?
                .ok_or_else(|| Error::AxiomViolation("V⊗λ is not inside W".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let module = PartialModule::new(ModuleSide::Left, pa.clone(), space.dim(), a_ops, h_ops)?;
    Ok(Extension {
        module,
        embedding: Matrix::from_columns(f, space.dim(), &emb_cols)?,
        space,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Side;
    use crate::hopf::{group_algebra, GroupTable};
    use crate::paction::{c4_triple, dual_group_idempotent, trivial_action};
    use crate::smash::build_partial_smash;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn regular_smash_module_round_trip() {
        let pa = c4_triple(q());
        let sp = build_partial_smash(&pa);
        let reg = AlgebraModule::regular(sp.carrier(), ModuleSide::Right);
        let pm = PartialModule::from_smash_module(&sp, &reg).unwrap();
        assert!(pm.check().passed(), "{}", pm.check());
        assert_eq!(pm.to_smash_module(&sp), reg);
        // ann_A(M) = ann_carrier(M) ∩ A, both zero for the faithful regular module
        assert!(pm.annihilator().is_zero());
        assert!(reg.annihilator().is_zero());

        let left = AlgebraModule::regular(sp.carrier(), ModuleSide::Left);
        let pl = PartialModule::from_smash_module(&sp, &left).unwrap();
        assert!(pl.check().passed(), "{}", pl.check());
        assert_eq!(pl.to_smash_module(&sp), left);
    }

    #[test]
    fn corrupted_h_action_breaks_pm4() {
        let pa = c4_triple(q());
        let sp = build_partial_smash(&pa);
        let pm = PartialModule::from_smash_module(&sp, &AlgebraModule::regular(sp.carrier(), ModuleSide::Right)).unwrap();
        let mut h_ops = pm.h_ops().to_vec();
        h_ops[1] = Matrix::identity(q(), pm.dim());
        let bad = PartialModule::new(ModuleSide::Right, pa, pm.dim(), pm.a_ops().to_vec(), h_ops).unwrap();
        assert!(!bad.check().pm4.is_empty());
    }

    #[test]
    fn regular_left_module_and_annihilators() {
        let h = group_algebra(q(), &GroupTable::cyclic(2).unwrap());
        let a = Algebra::product_of_fields(q(), 3);
        let t = trivial_action(&h, &a).unwrap();
        let reg = PartialModule::regular_left(&t);
        assert!(reg.check().passed());
        assert!(reg.annihilator().is_zero());
        let i = a.ideal_closure(&[vector::unit(q(), 3, 0)], Side::TwoSided).unwrap();
        let quot = reg.quotient(&i).unwrap();
        assert!(quot.check().passed());
        assert_eq!(quot.annihilator(), i);
        assert!(t.is_h_stable(&quot.annihilator()));

        let c4 = c4_triple(q());
        assert!(PartialModule::regular_left(&c4).check().passed());
    }

    #[test]
    fn fix_a_simple_module() {
        let pa = dual_group_idempotent(q(), &GroupTable::cyclic(2).unwrap(), &[0, 1]).unwrap();
        let sp = build_partial_smash(&pa);
        let reg = AlgebraModule::regular(sp.carrier(), ModuleSide::Right);
        let pm = PartialModule::from_smash_module(&sp, &reg).unwrap();
        assert_eq!(pm.dim(), 1);
        // the unit of A acts as the identity
        assert_eq!(pm.a_operator(pa.algebra().unit().unwrap()), Matrix::identity(q(), 1));
        assert!(pm.check().passed());
        assert_eq!(pm.is_irreducible(EnumCaps::default()).unwrap(), Irreducibility::Irreducible);
    }

    #[test]
    fn irreducibility_modes() {
        let f2 = Field::prime(2).unwrap();
        let a = Algebra::product_of_fields(f2, 2);
        let reg = AlgebraModule::regular(&a, ModuleSide::Right);
        assert_eq!(reg.is_irreducible(EnumCaps::default()).unwrap(), Irreducibility::Reducible);
        let m2 = AlgebraModule::new(ModuleSide::Right, f2, 0, vec![]).unwrap();
        assert_eq!(m2.is_irreducible(EnumCaps::default()), Err(Error::ZeroModule));

        // 2×2 matrices acting on column vectors over ℚ: Burnside applies
        let e = |r: usize, c: usize| {
            let mut m = Matrix::zero(q(), 2, 2);
            m.set(r, c, q().one());
            m
        };
        let full = AlgebraModule::new(ModuleSide::Left, q(), 2, vec![e(0, 0), e(0, 1), e(1, 0), e(1, 1)]).unwrap();
        assert_eq!(full.is_irreducible(EnumCaps::default()).unwrap(), Irreducibility::Irreducible);
        let diag = AlgebraModule::regular(&Algebra::product_of_fields(q(), 2), ModuleSide::Left);
        assert_eq!(diag.is_irreducible(EnumCaps::default()).unwrap(), Irreducibility::Reducible);
        // rotation by 90°: irreducible over ℚ but not absolutely, so undecided
        let rot = Matrix::from_i64(q(), 2, 2, &[0, -1, 1, 0]).unwrap();
        let cyc = AlgebraModule::new(ModuleSide::Left, q(), 2, vec![Matrix::identity(q(), 2), rot]).unwrap();
        assert_eq!(cyc.is_irreducible(EnumCaps::default()).unwrap(), Irreducibility::Unknown);
    }

    #[test]
    fn right_extension_of_trivial_action() {
        let h = group_algebra(q(), &GroupTable::cyclic(2).unwrap());
        let a = Algebra::product_of_fields(q(), 2);
        let t = trivial_action(&h, &a).unwrap();
        let v = AlgebraModule::regular(&a, ModuleSide::Right);
        let ext = extend_right_module(&t, &v).unwrap();
        assert_eq!(ext.module.dim(), 4);
        assert!(ext.module.check().passed(), "{}", ext.module.check());
        let gens: Vec<Vector> = (0..2).map(|j| ext.embedding.column(j)).collect();
        assert!(ext.module.submodule(&gens).unwrap().is_full());
    }

    #[test]
    fn right_extension_of_c4_triple() {
        let pa = c4_triple(q());
        let v = AlgebraModule::regular(pa.algebra(), ModuleSide::Right);
        let ext = extend_right_module(&pa, &v).unwrap();
        assert!(ext.module.check().passed(), "{}", ext.module.check());
        assert!(ext.module.dim() <= 12);
        let gens: Vec<Vector> = (0..3).map(|j| ext.embedding.column(j)).collect();
        assert!(ext.module.submodule(&gens).unwrap().is_full());
        // (v⊗1)a = va⊗1
        for j in 0..3 {
            for k in 0..3 {
                let lhs = ext.module.a_ops()[k].apply(&ext.embedding.column(j)).unwrap();
                let va = v.ops[k].column(j);
                assert_eq!(lhs, ext.embedding.apply(&va).unwrap());
            }
        }
    }

    #[test]
    fn left_extension() {
        for pa in [
            c4_triple(q()),
            dual_group_idempotent(q(), &GroupTable::cyclic(2).unwrap(), &[0, 1]).unwrap(),
            trivial_action(&group_algebra(q(), &GroupTable::cyclic(3).unwrap()), &Algebra::product_of_fields(q(), 2)).unwrap(),
        ] {
            let v = AlgebraModule::regular(pa.algebra(), ModuleSide::Left);
            let ext = extend_left_module(&pa, &v).unwrap();
            assert!(ext.module.check().passed(), "{}", ext.module.check());
            // a•(v⊗λ) = av⊗λ
            let n = pa.algebra().dim();
            for j in 0..n {
                for k in 0..n {
                    let lhs = ext.module.a_ops()[k].apply(&ext.embedding.column(j)).unwrap();
                    assert_eq!(lhs, ext.embedding.apply(&v.ops[k].column(j)).unwrap());
                }
            }
            let gens: Vec<Vector> = (0..n).map(|j| ext.embedding.column(j)).collect();
            assert!(ext.module.submodule(&gens).unwrap().is_full());
        }
    }

    #[test]
    fn irreducible_extension_over_f5() {
        let f5 = Field::prime(5).unwrap();
        let pa = c4_triple(f5);
        // V = A/(e₂, e₃), the simple module on which e₁ acts as 1
        let a = pa.algebra();
        let i = Subspace::span(f5, 3, &[vector::unit(f5, 3, 1), vector::unit(f5, 3, 2)]).unwrap();
        let v = AlgebraModule::regular(a, ModuleSide::Right).quotient(&i).unwrap();
        assert_eq!(v.dim, 1);
        let ext = irreducible_extension(&pa, &v, EnumCaps::default()).unwrap();
        let m = &ext.module;
        assert!(m.check().passed());
        assert!(m.dim() <= 4);
        assert_eq!(m.is_irreducible(EnumCaps::default()).unwrap(), Irreducibility::Irreducible);
        assert_eq!(ext.image_of_v().dim(), 1);
        let ann_v_colon = pa.colon_ideal(&v.annihilator()).unwrap();
        assert_eq!(m.annihilator(), ann_v_colon);
    }
}
