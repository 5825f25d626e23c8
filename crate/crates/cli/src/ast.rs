//! Syntax tree of the expression language and its printer.
//!
//! The printer emits the fewest parentheses that reparse to the same tree:
//! `+ -` bind loosest, then `* /`, then unary minus, then right-associative
//! `^`, then postfix indexing.

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Pow => "^",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            BinOp::Mul | BinOp::Div => 2,
            BinOp::Pow => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(String, Vec<Expr>),
    /// `bundle(rank; c1, c2, ...)`.
    Bundle(Box<Expr>, Vec<Expr>),
    /// `ring[vars; weights](relations)`.
    Ring {
        vars: Vec<String>,
        weights: Vec<u32>,
        relations: Vec<Expr>,
    },
    Index(Box<Expr>, Box<Expr>),
    List(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Stmt {
    Assign(String, Expr),
    Expr(Expr),
}

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Int(BigInt::from(n))
    }

    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    pub fn bin(op: BinOp, l: Expr, r: Expr) -> Self {
        Expr::Bin(op, Box::new(l), Box::new(r))
    }

    pub fn call(name: &str, args: Vec<Expr>) -> Self {
        Expr::Call(name.to_string(), args)
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => op.prec(),
            Expr::Neg(_) => 3,
            _ => 5,
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[Expr]) -> fmt::Result {
    for (i, e) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(x) => {
                write!(f, "-")?;
                write_at(f, x, x.prec() < 3)
            }
            Expr::Bin(BinOp::Pow, l, r) => {
                write_at(f, l, l.prec() < 5)?;
                write!(f, "^")?;
                write_at(f, r, r.prec() < 3)
            }
            Expr::Bin(op, l, r) => {
                let p = op.prec();
                write_at(f, l, l.prec() < p)?;
                write!(f, " {} ", op.symbol())?;
                write_at(f, r, r.prec() <= p)
            }
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                write_list(f, args)?;
                write!(f, ")")
            }
            Expr::Bundle(rank, classes) => {
                write!(f, "bundle({rank}; ")?;
                write_list(f, classes)?;
                write!(f, ")")
            }
            Expr::Ring {
                vars,
                weights,
                relations,
            } => {
                let w: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "ring[{}; {}](", vars.join(", "), w.join(", "))?;
                write_list(f, relations)?;
                write!(f, ")")
            }
            Expr::Index(base, i) => {
                write_at(f, base, base.prec() < 5)?;
                write!(f, "[{i}]")
            }
            Expr::List(items) => {
                write!(f, "[")?;
                write_list(f, items)?;
                write!(f, "]")
            }
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Assign(name, e) => write!(f, "{name} = {e}"),
            Stmt::Expr(e) => write!(f, "{e}"),
        }
    }
}
