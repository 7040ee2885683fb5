//! Expression language and verification commands for the `usv` binary.

pub mod ast;
pub mod commands;
pub mod error;
pub mod eval;
pub mod parse;

pub use error::{EvalError, ParseError};
pub use eval::{eval_str, evaluate, Value};
pub use parse::parse;
