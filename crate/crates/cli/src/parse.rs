//! Lexer and recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' uint)?
//! atom   := number | 'sqrt3' | unit | call | literal | '(' expr ')'
//! call   := func '(' expr ')'
//! literal:= 'p{' expr ',' expr '}'
//!         | 't{' expr ',' expr ',' expr '}'
//!         | 'm{' row ';' row ';' row '}'     row := '[' expr ',' expr ',' expr ']'
//! ```

use usv_core::UnitName;

use crate::ast::{BinOp, Expr, Func, Pos};
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Comma,
    Semi,
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::End => "end of input".to_string(),
            other => {
                let c = match other {
                    Tok::Plus => '+',
                    Tok::Minus => '-',
                    Tok::Star => '*',
                    Tok::Slash => '/',
                    Tok::Caret => '^',
                    Tok::Comma => ',',
                    Tok::Semi => ';',
                    Tok::LParen => '(',
                    Tok::RParen => ')',
                    Tok::LBrace => '{',
                    Tok::RBrace => '}',
                    Tok::LBracket => '[',
                    _ => ']',
                };
                format!("`{c}`")
            }
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if b.is_ascii_digit() || b == b'.' {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                i += 1;
            }
            let text = &src[start..i];
            if text.matches('.').count() > 1 || text == "." {
                return Err(ParseError::MalformedLiteral {
                    pos: start,
                    text: text.to_string(),
                });
            }
            out.push((Tok::Number(text.to_string()), start));
            continue;
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
            continue;
        }
        let tok = match b {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b',' => Tok::Comma,
            b';' => Tok::Semi,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'{' => Tok::LBrace,
            b'}' => Tok::RBrace,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    pos: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, ParseError> {
        if *self.peek() == want {
            Ok(self.bump().1)
        } else {
            Err(ParseError::Syntax {
                pos: self.pos(),
                message: format!(
                    "expected {}, found {}",
                    want.describe(),
                    self.peek().describe()
                ),
            })
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let pos = self.bump().1;
            let rhs = self.term()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            let pos = self.bump().1;
            let rhs = self.factor()?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            let pos = self.bump().1;
            let inner = self.factor()?;
            return Ok(Expr::Neg {
                inner: Box::new(inner),
                pos,
            });
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.bump().1;
        match self.bump() {
            (Tok::Number(n), npos) => {
                let exp = n.parse::<u32>().map_err(|_| ParseError::Syntax {
                    pos: npos,
                    message: format!("exponent must be a nonnegative integer, found `{n}`"),
                })?;
                Ok(Expr::Pow {
                    base: Box::new(base),
                    exp,
                    pos,
                })
            }
            (t, npos) => Err(ParseError::Syntax {
                pos: npos,
                message: format!("expected exponent, found {}", t.describe()),
            }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Number(text) => Ok(Expr::Number { text, pos }),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(name, pos),
            t => Err(ParseError::Syntax {
                pos,
                message: format!("expected a value, found {}", t.describe()),
            }),
        }
    }

    fn named(&mut self, name: String, pos: Pos) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::LBrace {
            match name.as_str() {
                "p" | "t" | "m" => {}
                _ => return Err(ParseError::UnknownName { pos, name }),
            }
            self.bump();
            let e = match name.as_str() {
                "p" => {
                    let parts = self.list::<2>()?;
                    Expr::Pair {
                        parts: Box::new(parts),
                        pos,
                    }
                }
                "t" => {
                    let parts = self.list::<3>()?;
                    Expr::Triple {
                        parts: Box::new(parts),
                        pos,
                    }
                }
                _ => {
                    let mut rows = Vec::with_capacity(3);
                    for i in 0..3 {
                        if i > 0 {
                            self.expect(Tok::Semi)?;
                        }
                        self.expect(Tok::LBracket)?;
                        rows.push(self.list::<3>()?);
                        self.expect(Tok::RBracket)?;
                    }
                    let rows: [[Expr; 3]; 3] = rows.try_into().expect("three rows");
                    Expr::Matrix {
                        rows: Box::new(rows),
                        pos,
                    }
                }
            };
            self.expect(Tok::RBrace)?;
            return Ok(e);
        }
        if name == "sqrt3" {
            return Ok(Expr::Sqrt3 { pos });
        }
        if let Some(func) = Func::from_name(&name) {
            self.expect(Tok::LParen)?;
            let arg = self.expr()?;
            self.expect(Tok::RParen)?;
            return Ok(Expr::Call {
                func,
                arg: Box::new(arg),
                pos,
            });
        }
        if let Some(unit) = UnitName::from_ident(&name) {
            return Ok(Expr::Unit { unit, pos });
        }
        Err(ParseError::UnknownName { pos, name })
    }

    fn list<const N: usize>(&mut self) -> Result<[Expr; N], ParseError> {
        let mut items = Vec::with_capacity(N);
        for i in 0..N {
            if i > 0 {
                self.expect(Tok::Comma)?;
            }
            items.push(self.expr()?);
        }
        Ok(items.try_into().unwrap_or_else(|_| unreachable!()))
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(ParseError::Syntax {
            pos: p.pos(),
            message: format!("unexpected {}", p.peek().describe()),
        });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_product() {
        let e = parse("p{3,1} * p{4,6}").unwrap();
        assert!(matches!(e, Expr::Binary { op: BinOp::Mul, .. }));
    }

    #[test]
    fn nested_call() {
        let e = parse("reduce(t{2,1,0} * t{0,2,1})").unwrap();
        let Expr::Call { func, arg, .. } = e else {
            panic!("not a call")
        };
        assert_eq!(func, Func::Reduce);
        assert!(matches!(*arg, Expr::Binary { op: BinOp::Mul, .. }));
    }

    #[test]
    fn unclosed_matrix_is_a_syntax_error() {
        let err = parse("m{[0,3,2];[2,2,0];[1,0,3]").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { pos: 25, .. }), "{err:?}");
    }

    #[test]
    fn precedence() {
        let e = parse("1/3+2/3*sqrt3").unwrap();
        let Expr::Binary {
            op: BinOp::Add,
            rhs,
            ..
        } = e
        else {
            panic!()
        };
        assert!(matches!(*rhs, Expr::Binary { op: BinOp::Mul, .. }));
        let e = parse("-I^2").unwrap();
        let Expr::Neg { inner, .. } = e else { panic!() };
        assert!(matches!(*inner, Expr::Pow { exp: 2, .. }));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("J + QQ").unwrap_err(),
            ParseError::UnknownName {
                pos: 4,
                name: "QQ".into()
            }
        );
        assert!(matches!(
            parse("1.2.3"),
            Err(ParseError::MalformedLiteral { pos: 0, .. })
        ));
        assert!(matches!(
            parse("t{1,2}"),
            Err(ParseError::Syntax { pos: 5, .. })
        ));
        assert!(matches!(
            parse("J^-1"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse("J^1.5"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse("2 $ 3"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(parse("x{1}"), Err(ParseError::UnknownName { .. })));
        assert!(matches!(parse("(1"), Err(ParseError::Syntax { .. })));
        assert!(matches!(
            parse("1 2"),
            Err(ParseError::Syntax { pos: 2, .. })
        ));
    }
}
