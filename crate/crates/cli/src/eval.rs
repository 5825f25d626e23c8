//! Evaluator for the expression language.
//!
//! Unbound identifiers that start with a lowercase letter are polynomial
//! variables whose weight is given by their trailing digits (`k2` has
//! weight 2, `ell` and `psi` weight 1). Inside `ring[..](..)` the declared
//! weights win; inside the class argument of `genus`/`h0` the names `E`,
//! `S`, `F`, `K` are divisor classes; inside `integrate(G(k,n), ..)` the
//! form `sigma(parts..)` is a Schubert class. `F[n]` always denotes the
//! Hirzebruch surface `F_n`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use tautring::chern::{self, DEFAULT_TRUNCATION};
use tautring::geometry::{
    canonical_quadrics, forms_dim, genus_of_class, h0_hirzebruch, intersect, plucker_degree,
    stratum_dimensions,
};
use tautring::grr::{self, kappa_table, push_psi};
use tautring::schur::{decompose_sym2_wedge2, dim_schur, lr_product, syt_count};
use tautring::{
    ExactMatrix, FormalBundle, GradedPoly, GrassmannData, HirzebruchClass, LineClass, Partition,
    PsiSeries, Rational, RingPresentation, VariableTable,
};

use crate::ast::{BinOp, Expr, Stmt};
use crate::error::{CliError, CliResult};
use crate::parser::parse_program;
use crate::value::Value;

/// Names defined in every fresh environment.
pub const PREDEFINED: &[&str] = &["E", "F", "M6", "V", "W"];

/// Names of the built-in functions.
pub const FUNCTIONS: &[&str] = &[
    "G", "c", "ch", "chern", "det", "dim", "dual", "fve", "forms", "genus", "grr", "h0",
    "hilbert", "hodge", "hyperelliptic", "integrate", "line", "lr", "nf", "omega", "pairing",
    "plethysm", "plucker", "poincare", "push", "quadricbundle", "quadrics", "rank", "schurdim",
    "sigma", "sltwist", "strata", "sym", "syt", "tautological", "td", "tensor", "total",
    "trigonal", "trivial", "twist", "wedge",
];

#[derive(Clone, Default)]
struct Scope {
    weights: Option<Arc<BTreeMap<String, u32>>>,
    surface: Option<u32>,
    grass: Option<Arc<GrassmannData>>,
}

/// Variable bindings plus the truncation order used for new bundles.
#[derive(Clone, Debug)]
pub struct Env {
    trunc: u32,
    vars: BTreeMap<String, Value>,
}

impl Default for Env {
    fn default() -> Self {
        Self::new(DEFAULT_TRUNCATION)
    }
}

fn ty(msg: impl Into<String>) -> CliError {
    CliError::Type(msg.into())
}

/// Weight encoded in the trailing digits of a variable name, 1 if none.
pub fn weight_of_name(name: &str) -> u32 {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    name[split..].parse().unwrap_or(1)
}

fn natural_key(name: &str) -> (String, u64) {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let n = name[split..].parse().unwrap_or(0);
    (name[..split].to_string(), n)
}

/// Smallest table holding both; a superset is reused as is, otherwise the
/// union is sorted by name.
fn common_table(a: &Arc<VariableTable>, b: &Arc<VariableTable>) -> CliResult<Arc<VariableTable>> {
    if b.is_subtable_of(a) {
        return Ok(Arc::clone(a));
    }
    if a.is_subtable_of(b) {
        return Ok(Arc::clone(b));
    }
    let u = a.union(b)?;
    let mut vars: Vec<(String, u32)> = u.names().iter().cloned().zip(u.weights().iter().copied()).collect();
    vars.sort_by_key(|(n, _)| natural_key(n));
    Ok(VariableTable::new(vars)?)
}

fn align(a: &GradedPoly, b: &GradedPoly) -> CliResult<(GradedPoly, GradedPoly)> {
    let t = common_table(a.table(), b.table())?;
    Ok((a.embed(&t)?, b.embed(&t)?))
}

fn as_poly(v: &Value) -> CliResult<GradedPoly> {
    match v {
        Value::Num(x) => Ok(GradedPoly::constant(&VariableTable::empty(), x.clone())),
        Value::Poly(p) => Ok(p.clone()),
        other => Err(ty(format!("expected a polynomial, found a {}", other.kind()))),
    }
}

fn as_num(v: &Value) -> CliResult<Rational> {
    match v {
        Value::Num(x) => Ok(x.clone()),
        Value::Poly(p) => p
            .as_constant()
            .ok_or_else(|| ty(format!("expected a number, found `{p}`"))),
        other => Err(ty(format!("expected a number, found a {}", other.kind()))),
    }
}

fn as_int(v: &Value) -> CliResult<i64> {
    let x = as_num(v)?;
    if !x.is_integer() {
        return Err(ty(format!("expected an integer, found {x}")));
    }
    x.to_integer()
        .to_i64()
        .ok_or_else(|| ty(format!("integer {x} out of range")))
}

fn as_u32(v: &Value) -> CliResult<u32> {
    let n = as_int(v)?;
    u32::try_from(n).map_err(|_| ty(format!("expected a nonnegative integer, found {n}")))
}

fn as_bundle(v: &Value) -> CliResult<&FormalBundle> {
    match v {
        Value::Bundle(b) => Ok(b),
        other => Err(ty(format!("expected a bundle, found a {}", other.kind()))),
    }
}

fn as_ring(v: &Value) -> CliResult<&RingPresentation> {
    match v {
        Value::Ring(r) => Ok(r),
        Value::Grass(g) => Ok(g.ring()),
        other => Err(ty(format!("expected a ring, found a {}", other.kind()))),
    }
}

fn as_partition(v: &Value) -> CliResult<Partition> {
    match v {
        Value::List(items) => {
            let parts = items.iter().map(as_u32).collect::<CliResult<Vec<_>>>()?;
            Ok(Partition::new(parts)?)
        }
        other => Err(ty(format!("expected a partition like [2, 1], found a {}", other.kind()))),
    }
}

fn as_class(v: &Value) -> CliResult<HirzebruchClass> {
    match v {
        Value::Class(c) => Ok(*c),
        other => Err(ty(format!("expected a divisor class, found a {}", other.kind()))),
    }
}

fn num(x: impl Into<BigInt>) -> Value {
    Value::Num(Rational::from_integer(x.into()))
}

fn poly_list(ps: &[GradedPoly]) -> Value {
    Value::List(ps.iter().cloned().map(Value::Poly).collect())
}

fn arity(name: &str, args: &[Value], n: usize) -> CliResult<()> {
    if args.len() != n {
        return Err(ty(format!("{name} takes {n} argument(s), got {}", args.len())));
    }
    Ok(())
}

fn line_class(v: &Value, table: &Arc<VariableTable>) -> CliResult<LineClass> {
    let p = as_poly(v)?;
    if p.is_zero() {
        return Ok(LineClass::zero(table));
    }
    Ok(LineClass::new(p)?)
}

fn matrix_value(m: &ExactMatrix) -> Value {
    Value::List(
        m.row_vectors()
            .into_iter()
            .map(|r| Value::List(r.into_iter().map(Value::Num).collect()))
            .collect(),
    )
}

fn as_matrix(v: &Value) -> CliResult<ExactMatrix> {
    let Value::List(rows) = v else {
        return Err(ty("expected a matrix"));
    };
    let rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| match r {
            Value::List(xs) => xs.iter().map(as_num).collect(),
            _ => Err(ty("expected a list of rows")),
        })
        .collect::<CliResult<_>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) || rows.len() != cols {
        return Err(ty("determinant needs a square matrix"));
    }
    Ok(ExactMatrix::from_rows(rows, cols))
}

fn arith(op: BinOp, a: Value, b: Value) -> CliResult<Value> {
    use Value::*;
    Ok(match (op, a, b) {
        (BinOp::Add, Num(x), Num(y)) => Num(x + y),
        (BinOp::Sub, Num(x), Num(y)) => Num(x - y),
        (BinOp::Mul, Num(x), Num(y)) => Num(x * y),
        (BinOp::Div, Num(x), Num(y)) => {
            if y.is_zero() {
                return Err(ty("division by zero"));
            }
            Num(x / y)
        }
        (BinOp::Pow, Num(x), e) => {
            let n = as_int(&e)?;
            if n < 0 && x.is_zero() {
                return Err(ty("division by zero"));
            }
            let p = x.pow(n.unsigned_abs() as i32);
            Num(if n < 0 { Rational::one() / p } else { p })
        }
        (BinOp::Pow, Poly(p), e) => {
            let n = as_u32(&e)?;
            Poly(p.pow(n))
        }
        (BinOp::Div, a @ (Num(_) | Poly(_)), b @ (Num(_) | Poly(_))) => {
            let d = as_num(&b).map_err(|_| ty("polynomials can only be divided by constants"))?;
            if d.is_zero() {
                return Err(ty("division by zero"));
            }
            Poly(as_poly(&a)?.scale(&(Rational::one() / d)))
        }
        (op @ (BinOp::Add | BinOp::Sub | BinOp::Mul), a @ (Num(_) | Poly(_)), b @ (Num(_) | Poly(_))) => {
            let (x, y) = align(&as_poly(&a)?, &as_poly(&b)?)?;
            Poly(match op {
                BinOp::Add => &x + &y,
                BinOp::Sub => &x - &y,
                _ => &x * &y,
            })
        }
        (BinOp::Add, Class(x), Class(y)) => Class(x.plus(&y)?),
        (BinOp::Sub, Class(x), Class(y)) => Class(x.plus(&y.times(-1))?),
        (BinOp::Mul, Class(x), Class(y)) => num(intersect(&x, &y)?),
        (BinOp::Mul, k @ (Num(_) | Poly(_)), Class(c)) | (BinOp::Mul, Class(c), k @ (Num(_) | Poly(_))) => {
            Class(c.times(as_int(&k)?))
        }
        (BinOp::Add, Bundle(a), Bundle(b)) => Bundle(chern::direct_sum(&a, &b)?),
        (BinOp::Mul, Bundle(a), Bundle(b)) => Bundle(chern::tensor(&a, &b)?),
        (BinOp::Div, Bundle(a), Bundle(b)) => Bundle(chern::sequence_quotient(&a, &b)?),
        (op, a, b) => {
            return Err(ty(format!(
                "cannot apply `{}` to a {} and a {}",
                op.symbol(),
                a.kind(),
                b.kind()
            )))
        }
    })
}

impl Env {
    pub fn new(trunc: u32) -> Self {
        let mut vars = BTreeMap::new();
        vars.insert("M6".into(), Value::Ring(Arc::new(RingPresentation::m6())));
        for (name, prefix, rank) in [("V", "v", 5), ("E", "l", 6), ("W", "w", 2), ("F", "f", 4)] {
            vars.insert(name.into(), Value::Bundle(FormalBundle::generic(prefix, rank, trunc)));
        }
        Env { trunc, vars }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.vars.get(name)
    }

    pub fn set(&mut self, name: &str, v: Value) {
        self.vars.insert(name.to_string(), v);
    }

    /// Executes one statement; assignments yield `None`.
    pub fn exec(&mut self, stmt: &Stmt) -> CliResult<Option<Value>> {
        match stmt {
            Stmt::Assign(name, e) => {
                let v = self.eval(e)?;
                self.vars.insert(name.clone(), v);
                Ok(None)
            }
            Stmt::Expr(e) => self.eval(e).map(Some),
        }
    }

    /// Runs a whole program and returns the value of its last expression.
    pub fn run(&mut self, src: &str) -> CliResult<Option<Value>> {
        let mut last = None;
        for stmt in parse_program(src)? {
            if let Some(v) = self.exec(&stmt)? {
                last = Some(v);
            }
        }
        Ok(last)
    }

    pub fn eval(&self, e: &Expr) -> CliResult<Value> {
        self.ev(e, &Scope::default())
    }

    fn ev(&self, e: &Expr, sc: &Scope) -> CliResult<Value> {
        match e {
            Expr::Int(n) => Ok(Value::Num(Rational::from_integer(n.clone()))),
            Expr::Var(name) => self.lookup(name, sc),
            Expr::Neg(x) => match self.ev(x, sc)? {
                Value::Num(x) => Ok(Value::Num(-x)),
                Value::Poly(p) => Ok(Value::Poly(-&p)),
                Value::Class(c) => Ok(Value::Class(c.times(-1))),
                other => Err(ty(format!("cannot negate a {}", other.kind()))),
            },
            Expr::Bin(op, l, r) => arith(*op, self.ev(l, sc)?, self.ev(r, sc)?),
            Expr::Call(name, args) => self.call(name, args, sc),
            Expr::Bundle(rank, classes) => {
                let rank = as_u32(&self.ev(rank, sc)?)?;
                let mut polys = Vec::with_capacity(classes.len());
                let mut table = VariableTable::empty();
                for c in classes {
                    let p = as_poly(&self.ev(c, sc)?)?;
                    table = common_table(&table, p.table())?;
                    polys.push(p);
                }
                Ok(Value::Bundle(FormalBundle::new(rank, polys, &table, self.trunc)?))
            }
            Expr::Ring {
                vars,
                weights,
                relations,
            } => {
                let table = VariableTable::new(vars.iter().cloned().zip(weights.iter().copied()))?;
                let inner = Scope {
                    weights: Some(Arc::new(vars.iter().cloned().zip(weights.iter().copied()).collect())),
                    ..sc.clone()
                };
                let rels = relations
                    .iter()
                    .map(|r| as_poly(&self.ev(r, &inner)?))
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(Value::Ring(Arc::new(RingPresentation::new("", table, rels)?)))
            }
            Expr::Index(base, i) => {
                let i = as_u32(&self.ev(i, sc)?)?;
                if matches!(base.as_ref(), Expr::Var(v) if v == "F") {
                    return Ok(Value::Surface(i));
                }
                match self.ev(base, sc)? {
                    Value::List(items) => items
                        .get(i as usize)
                        .cloned()
                        .ok_or_else(|| ty(format!("index {i} out of range for a list of {}", items.len()))),
                    Value::Bundle(b) => Ok(Value::Poly(b.c(i))),
                    other => Err(ty(format!("cannot index a {}", other.kind()))),
                }
            }
            Expr::List(items) => Ok(Value::List(
                items.iter().map(|x| self.ev(x, sc)).collect::<CliResult<_>>()?,
            )),
        }
    }

    fn lookup(&self, name: &str, sc: &Scope) -> CliResult<Value> {
        if let Some(n) = sc.surface {
            let c = match name {
                "E" => Some(HirzebruchClass::e(n)),
                "S" => Some(HirzebruchClass::s(n)),
                "F" => Some(HirzebruchClass::f(n)),
                "K" => Some(HirzebruchClass::canonical(n)),
                _ => None,
            };
            if let Some(c) = c {
                return Ok(Value::Class(c));
            }
        }
        if let Some(w) = sc.weights.as_ref().and_then(|m| m.get(name)) {
            let t = VariableTable::new([(name.to_string(), *w)])?;
            return Ok(Value::Poly(GradedPoly::var_at(&t, 0)));
        }
        if let Some(v) = self.vars.get(name) {
            return Ok(v.clone());
        }
        if name.starts_with(|c: char| c.is_ascii_lowercase()) {
            let t = VariableTable::new([(name.to_string(), weight_of_name(name))])?;
            return Ok(Value::Poly(GradedPoly::var_at(&t, 0)));
        }
        Err(CliError::UnknownIdentifier(name.to_string()))
    }

    fn call(&self, name: &str, raw: &[Expr], sc: &Scope) -> CliResult<Value> {
        match name {
            "genus" | "h0" => {
                if raw.len() != 2 {
                    return Err(ty(format!("{name} takes a surface F[n] and a class")));
                }
                let Value::Surface(n) = self.ev(&raw[0], sc)? else {
                    return Err(ty(format!("first argument of {name} must be a surface F[n]")));
                };
                let inner = Scope {
                    surface: Some(n),
                    ..sc.clone()
                };
                let c = as_class(&self.ev(&raw[1], &inner)?)?;
                return Ok(if name == "genus" {
                    Value::Num(genus_of_class(&c))
                } else {
                    num(h0_hirzebruch(&c)?)
                });
            }
            "integrate" => {
                if raw.len() != 2 {
                    return Err(ty("integrate takes a Grassmannian and a class"));
                }
                let Value::Grass(g) = self.ev(&raw[0], sc)? else {
                    return Err(ty("first argument of integrate must be G(k, n)"));
                };
                let inner = Scope {
                    grass: Some(Arc::clone(&g)),
                    ..sc.clone()
                };
                let x = as_poly(&self.ev(&raw[1], &inner)?)?;
                return Ok(Value::Num(g.integrate(&x)?));
            }
            _ => {}
        }
        let args = raw.iter().map(|a| self.ev(a, sc)).collect::<CliResult<Vec<_>>>()?;
        let a = args.as_slice();
        let d = self.trunc;
        Ok(match name {
            "dual" => {
                arity(name, a, 1)?;
                Value::Bundle(chern::dual(as_bundle(&a[0])?))
            }
            "twist" => {
                arity(name, a, 2)?;
                let b = as_bundle(&a[0])?;
                Value::Bundle(chern::twist(b, &line_class(&a[1], b.table())?)?)
            }
            "sym" | "wedge" => {
                arity(name, a, 2)?;
                let k = as_u32(&a[0])?;
                let b = as_bundle(&a[1])?;
                Value::Bundle(if name == "sym" {
                    chern::sym_power(b, k)?
                } else {
                    chern::wedge_power(b, k)?
                })
            }
            "tensor" => {
                arity(name, a, 2)?;
                Value::Bundle(chern::tensor(as_bundle(&a[0])?, as_bundle(&a[1])?)?)
            }
            "det" => {
                arity(name, a, 1)?;
                match &a[0] {
                    Value::Bundle(b) => Value::Bundle(chern::determinant(b)),
                    m => Value::Num(as_matrix(m)?.determinant()),
                }
            }
            "trivial" => {
                arity(name, a, 1)?;
                Value::Bundle(FormalBundle::trivial(as_u32(&a[0])?, &VariableTable::empty(), d))
            }
            "line" => {
                arity(name, a, 1)?;
                Value::Bundle(FormalBundle::line(&line_class(&a[0], &VariableTable::empty())?, d))
            }
            "rank" => {
                arity(name, a, 1)?;
                num(as_bundle(&a[0])?.rank())
            }
            "c" => {
                arity(name, a, 2)?;
                Value::Poly(as_bundle(&a[0])?.c(as_u32(&a[1])?))
            }
            "chern" => {
                arity(name, a, 1)?;
                let b = as_bundle(&a[0])?;
                Value::List((0..=b.trunc()).map(|i| Value::Poly(b.c(i))).collect())
            }
            "total" => {
                arity(name, a, 1)?;
                Value::Poly(as_bundle(&a[0])?.total_class())
            }
            "ch" => {
                arity(name, a, 1)?;
                poly_list(&chern::chern_character(as_bundle(&a[0])?))
            }
            "td" => {
                arity(name, a, 1)?;
                poly_list(&chern::todd_class(as_bundle(&a[0])?))
            }
            "hilbert" => {
                arity(name, a, 2)?;
                let r = as_ring(&a[0])?;
                Value::List(r.hilbert_function(as_u32(&a[1])?).into_iter().map(num).collect())
            }
            "nf" => {
                arity(name, a, 2)?;
                let r = as_ring(&a[1])?;
                Value::Poly(r.normal_form(&as_poly(&a[0])?)?)
            }
            "pairing" => {
                arity(name, a, 3)?;
                let r = as_ring(&a[0])?;
                matrix_value(&r.pairing_matrix(as_u32(&a[1])?, as_u32(&a[2])?)?)
            }
            "poincare" => {
                arity(name, a, 2)?;
                Value::Bool(as_ring(&a[0])?.is_poincare_duality(as_u32(&a[1])?))
            }
            "dim" => match a {
                [Value::Grass(g)] => num(g.dim()),
                [r, deg] => num(as_ring(r)?.piece(as_u32(deg)?).dim()),
                _ => return Err(ty("dim takes G(k, n), or a ring and a degree")),
            },
            "G" => {
                arity(name, a, 2)?;
                Value::Grass(Arc::new(GrassmannData::new(as_u32(&a[0])?, as_u32(&a[1])?)?))
            }
            "sigma" => {
                let g = sc
                    .grass
                    .as_ref()
                    .ok_or_else(|| ty("sigma(..) is only meaningful inside integrate(G(k, n), ..)"))?;
                let lambda = match a {
                    [l @ Value::List(_)] => as_partition(l)?,
                    _ => Partition::new(a.iter().map(as_u32).collect::<CliResult<Vec<_>>>()?)?,
                };
                Value::Poly(g.schubert_class(&lambda))
            }
            "plucker" => {
                arity(name, a, 2)?;
                num(plucker_degree(as_u32(&a[0])?, as_u32(&a[1])?)?)
            }
            "forms" => {
                arity(name, a, 2)?;
                num(forms_dim(as_u32(&a[0])?, as_u32(&a[1])?))
            }
            "quadrics" => {
                arity(name, a, 1)?;
                num(canonical_quadrics(as_u32(&a[0])?)?)
            }
            "schurdim" => {
                arity(name, a, 2)?;
                num(dim_schur(&as_partition(&a[0])?, as_u32(&a[1])?))
            }
            "syt" => {
                arity(name, a, 1)?;
                num(syt_count(&as_partition(&a[0])?))
            }
            "lr" => {
                arity(name, a, 2)?;
                Value::Schur(lr_product(&as_partition(&a[0])?, &as_partition(&a[1])?)?)
            }
            "plethysm" => {
                arity(name, a, 1)?;
                Value::Schur(decompose_sym2_wedge2(as_u32(&a[0])?)?)
            }
            "strata" => {
                arity(name, a, 1)?;
                Value::List(
                    stratum_dimensions(as_u32(&a[0])?)?
                        .into_iter()
                        .map(|s| num(s.dim))
                        .collect(),
                )
            }
            "tautological" => {
                arity(name, a, 1)?;
                let g = as_u32(&a[0])?;
                Value::Ring(Arc::new(if g == 6 {
                    RingPresentation::m6()
                } else if g <= 5 {
                    RingPresentation::kappa_one_truncated(g)?
                } else {
                    return Err(ty(format!("no presentation available for genus {g}")));
                }))
            }
            "hodge" => {
                arity(name, a, 1)?;
                Value::Bundle(grr::hodge_bundle(as_u32(&a[0])?, d)?.bundle)
            }
            "omega" => {
                arity(name, a, 2)?;
                Value::Bundle(grr::pushforward_omega_power(as_u32(&a[0])?, as_u32(&a[1])?, d)?.bundle)
            }
            "grr" => {
                arity(name, a, 2)?;
                poly_list(&grr::ch_pushforward_omega_power(as_u32(&a[0])?, as_u32(&a[1])?, d)?)
            }
            "quadricbundle" => {
                arity(name, a, 1)?;
                Value::Bundle(grr::canonical_quadric_bundle(as_u32(&a[0])?, d)?.bundle)
            }
            "push" => {
                arity(name, a, 2)?;
                Value::Poly(self.push_series(as_u32(&a[0])?, &as_poly(&a[1])?)?)
            }
            "fve" => {
                arity(name, a, 0)?;
                poly_list(&grr::fi_in_terms_of_vi(d)?.f)
            }
            "hyperelliptic" => {
                arity(name, a, 1)?;
                let h = chern::solve_hyperelliptic_twist(as_u32(&a[0])?)?;
                Value::List(vec![Value::Poly(h.w1), Value::Poly(h.w2)])
            }
            "trigonal" => {
                if a.len() != 2 && a.len() != 3 {
                    return Err(ty("trigonal takes (g, n) or (g, n, t)"));
                }
                let t = a.get(2).map(as_num).transpose()?.unwrap_or_else(Rational::zero);
                let s = chern::solve_trigonal_twist(as_u32(&a[0])?, as_u32(&a[1])?, &t)?;
                Value::List(vec![Value::Num(s.q), Value::Num(s.r), Value::Num(s.s)])
            }
            "sltwist" => {
                arity(name, a, 1)?;
                let s = chern::solve_sl_twist(as_u32(&a[0])?)?;
                Value::List(vec![Value::Poly(s.line), Value::Poly(s.v2)])
            }
            _ => return Err(CliError::UnknownFunction(name.to_string())),
        })
    }

    /// `π_*` of a polynomial in `psi` and `k1..kD`.
    fn push_series(&self, g: u32, p: &GradedPoly) -> CliResult<GradedPoly> {
        let kt = kappa_table(self.trunc);
        let src = p.table();
        let psi = src.index_of("psi");
        let mut coeffs: BTreeMap<u32, GradedPoly> = BTreeMap::new();
        for (e, c) in p.terms() {
            let mut exps = vec![0; kt.len()];
            let mut j = 0;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if Some(i) == psi {
                    j = x;
                    continue;
                }
                let k = kt.index_of(src.name(i)).ok_or_else(|| {
                    ty(format!(
                        "push expects a series in psi and k1..k{}, found `{}`",
                        self.trunc,
                        src.name(i)
                    ))
                })?;
                exps[k] = x;
            }
            coeffs
                .entry(j)
                .or_insert_with(|| GradedPoly::zero(&kt))
                .add_term(exps, c.clone());
        }
        let mut s = PsiSeries::zero(g, self.trunc);
        for (j, c) in coeffs {
            s.set_coeff(j, c)?;
        }
        Ok(push_psi(&s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(src: &str) -> String {
        Env::default().run(src).unwrap().unwrap().to_string()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(ev("dim(G(4,10)) + 16"), "40");
        assert_eq!(ev("nf(k1^4, M6)"), "36864/113 * k2^2");
        assert_eq!(ev("genus(F[2], 3*S + 1*F)"), "6");
    }

    #[test]
    fn rationals_and_polys() {
        assert_eq!(ev("1/2 + 1/3"), "5/6");
        assert_eq!(ev("2^-2"), "1/4");
        assert_eq!(ev("(k1 + k2)^2 - k2^2"), "2 * k1*k2 + k1^2");
        assert_eq!(ev("(x + 1) / 2"), "1/2 * x + 1/2");
        assert!(Env::default().run("x / y").is_err());
    }

    #[test]
    fn bundles() {
        assert_eq!(ev("sym(2, W)"), "bundle(3; 3 * w1, 2 * w1^2 + 4 * w2, 4 * w1*w2)");
        assert_eq!(ev("dual(bundle(2; a1, a2))"), "bundle(2; -a1, a2)");
        assert_eq!(ev("rank(sym(2, V) / F)"), "11");
        let err = Env::default().run("wedge(6, V)").unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
        assert_eq!(ev("c(twist(W, t), 2)"), "w1*t + w2 + t^2");
        assert_eq!(ev("ch(line(x))"), "[1, x, 1/2 * x^2, 1/6 * x^3, 1/24 * x^4]");
    }

    #[test]
    fn ring_queries() {
        let src = "R = ring[k1,k2; 1,2](127*k1^3 - 2304*k1*k2, 113*k1^4 - 36864*k2^2); hilbert(R, 6)";
        assert_eq!(ev(src), "[1, 1, 2, 1, 1, 0, 0]");
        assert_eq!(ev("poincare(M6, 4)"), "true");
        assert_eq!(ev("det(pairing(M6, 2, 4))"), "36608/12769");
        assert_eq!(ev("ring[a, b; 2, 3](a^3 - b^2)"), "ring[a, b; 2, 3](a^3 - b^2)");
        assert_eq!(ev("dim(tautological(4), 2)"), "1");
    }

    #[test]
    fn geometry_queries() {
        assert_eq!(ev("integrate(G(2,4), sigma(1)^4)"), "2");
        assert_eq!(ev("plucker(2, 5)"), "5");
        assert_eq!(ev("h0(F[0], 3*S + 4*F)"), "20");
        assert_eq!(ev("genus(F[0], 3*S + 4*F)"), "6");
        assert_eq!(ev("strata(6)"), "[15, 13, 12, 11, 10]");
        assert_eq!(ev("forms(5, 2) - 5"), "16");
        assert_eq!(ev("quadrics(6)"), "6");
        assert_eq!(ev("plethysm(5)"), "S(2,2) + S(1,1,1,1)");
        assert_eq!(ev("schurdim([2, 2], 5) + schurdim([1,1,1,1], 5)"), "55");
        assert_eq!(ev("syt([3, 3])"), "5");
    }

    #[test]
    fn grr_queries() {
        assert_eq!(ev("c(hodge(6), 1)"), "1/12 * k1");
        assert_eq!(ev("push(6, 3*k1*psi^2 - psi^3/2)"), "3 * k1^2 - 1/2 * k2");
        assert_eq!(ev("push(6, psi)"), "10");
        assert_eq!(ev("hyperelliptic(6)[0]"), "1/15 * l1");
        assert_eq!(ev("sltwist(5)[0]"), "1/5 * l1");
        assert_eq!(ev("trigonal(6, 0)"), "[1/3, -1/24, 1/8]");
    }

    #[test]
    fn identifier_rules() {
        assert!(matches!(Env::default().run("Foo + 1"), Err(CliError::UnknownIdentifier(_))));
        assert!(matches!(Env::default().run("foo(1)"), Err(CliError::UnknownFunction(_))));
        assert_eq!(weight_of_name("k12"), 12);
        assert_eq!(weight_of_name("ell"), 1);
        assert!(Env::default().run("v0").is_err());
        let mut env = Env::default();
        env.run("X = bundle(1; x)").unwrap();
        assert_eq!(env.run("X * X").unwrap().unwrap().to_string(), "bundle(1; 2 * x)");
    }
}
