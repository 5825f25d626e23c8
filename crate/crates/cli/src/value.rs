use std::fmt;
use std::sync::Arc;

use tautring::{FormalBundle, GradedPoly, GrassmannData, HirzebruchClass, Rational, RingPresentation, SchurDecomposition};

/// Result of evaluating an expression. Printed values reparse to an
/// equal value wherever the language has a literal form for them.
#[derive(Clone, Debug)]
pub enum Value {
    Num(Rational),
    Poly(GradedPoly),
    Bool(bool),
    Bundle(FormalBundle),
    Ring(Arc<RingPresentation>),
    Grass(Arc<GrassmannData>),
    Surface(u32),
    Class(HirzebruchClass),
    Schur(SchurDecomposition),
    List(Vec<Value>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Num(_) => "number",
            Value::Poly(_) => "polynomial",
            Value::Bool(_) => "boolean",
            Value::Bundle(_) => "bundle",
            Value::Ring(_) => "ring",
            Value::Grass(_) => "Grassmannian",
            Value::Surface(_) => "Hirzebruch surface",
            Value::Class(_) => "divisor class",
            Value::Schur(_) => "Schur decomposition",
            Value::List(_) => "list",
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}

fn write_class(f: &mut fmt::Formatter<'_>, c: &HirzebruchClass) -> fmt::Result {
    match (c.a, c.b) {
        (0, 0) => write!(f, "0 * E"),
        (a, 0) => write!(f, "{a} * E"),
        (0, b) => write!(f, "{b} * F"),
        (a, b) if b < 0 => write!(f, "{a} * E - {} * F", -b),
        (a, b) => write!(f, "{a} * E + {b} * F"),
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(x) => write!(f, "{x}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Bundle(b) => {
                write!(f, "bundle({}; ", b.rank())?;
                let top = b.rank().min(b.trunc());
                for i in 1..=top {
                    if i > 1 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", b.c(i))?;
                }
                write!(f, ")")
            }
            Value::Ring(r) => {
                let t = r.table();
                let w: Vec<String> = t.weights().iter().map(|w| w.to_string()).collect();
                write!(f, "ring[{}; {}](", t.names().join(", "), w.join(", "))?;
                for (i, rel) in r.relations().iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{rel}")?;
                }
                write!(f, ")")
            }
            Value::Grass(g) => write!(f, "G({}, {})", g.k(), g.n()),
            Value::Surface(n) => write!(f, "F[{n}]"),
            Value::Class(c) => write_class(f, c),
            Value::Schur(s) => write!(f, "{s}"),
            Value::List(items) => {
                write!(f, "[")?;
                for (i, v) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, "]")
            }
        }
    }
}
