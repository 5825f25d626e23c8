//! Expression language, evaluator and verification suite behind the
//! `tautring` binary.

pub mod ast;
pub mod config;
pub mod error;
pub mod eval;
pub mod parser;
pub mod suite;
pub mod value;

pub use ast::{BinOp, Expr, Stmt};
pub use error::{CliError, CliResult};
pub use eval::Env;
pub use parser::{parse, parse_program};
pub use suite::{run_suite, ReportEntry, Status, SuiteConfig};
pub use value::Value;
