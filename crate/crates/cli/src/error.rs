use thiserror::Error;
use usv_core::AlgebraError;

use crate::ast::Pos;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: Pos, message: String },
    #[error("unknown name `{name}` at {pos}")]
    UnknownName { pos: Pos, name: String },
    #[error("malformed literal `{text}` at {pos}")]
    MalformedLiteral { pos: Pos, text: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("type error at {pos}: {message}")]
    Type { pos: Pos, message: String },
    #[error("at {pos}: {source}")]
    Algebra { pos: Pos, source: AlgebraError },
}

impl ParseError {
    pub fn pos(&self) -> Pos {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::UnknownName { pos, .. }
            | ParseError::MalformedLiteral { pos, .. } => *pos,
        }
    }
}

impl EvalError {
    pub fn pos(&self) -> Pos {
        match self {
            EvalError::Parse(e) => e.pos(),
            EvalError::Type { pos, .. } | EvalError::Algebra { pos, .. } => *pos,
        }
    }

    /// The message followed by a caret under the offending byte of `src`.
    pub fn render(&self, src: &str) -> String {
        let col = src
            .get(..self.pos())
            .map_or(self.pos(), |s| s.chars().count());
        format!("error: {self}\n  {src}\n  {}^", " ".repeat(col))
    }
}
