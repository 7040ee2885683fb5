//! Type checking and exact evaluation of parsed expressions.

use std::fmt;

use usv_core::scalar::parse_rational;
use usv_core::triple::{format_complex, format_real};
use usv_core::{unit_value, AlgebraError, ComplexValue, ExactScalar, Mat33, Triple, UPair};

use crate::ast::{BinOp, Expr, Func, Pos};
use crate::error::EvalError;
use crate::parse::parse;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Scalar,
    Pair,
    Triple,
    Matrix,
    Real,
    Complex,
    Characters,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Scalar => "scalar",
            Kind::Pair => "pair",
            Kind::Triple => "triple",
            Kind::Matrix => "matrix",
            Kind::Real => "real",
            Kind::Complex => "complex",
            Kind::Characters => "characters",
        }
    }

    fn is_system(self) -> bool {
        matches!(self, Kind::Pair | Kind::Triple | Kind::Matrix)
    }

    fn is_exact(self) -> bool {
        self == Kind::Scalar || self.is_system()
    }
}

/// Short-lived evaluation result, so the large matrix variant stays unboxed.
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(ExactScalar),
    Pair(UPair),
    Triple(Triple),
    Matrix(Mat33),
    Real(f64),
    Complex(ComplexValue),
    Characters([ComplexValue; 3]),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Scalar(_) => Kind::Scalar,
            Value::Pair(_) => Kind::Pair,
            Value::Triple(_) => Kind::Triple,
            Value::Matrix(_) => Kind::Matrix,
            Value::Real(_) => Kind::Real,
            Value::Complex(_) => Kind::Complex,
            Value::Characters(_) => Kind::Characters,
        }
    }

    /// Raw component equality (no reduction).
    pub fn same_form(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => a == b,
            (Value::Pair(a), Value::Pair(b)) => a.same_form(b),
            (Value::Triple(a), Value::Triple(b)) => a.same_form(b),
            (Value::Matrix(a), Value::Matrix(b)) => a.same_form(b),
            _ => self == other,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Pair(p) => write!(f, "{p}"),
            Value::Triple(t) => write!(f, "{t}"),
            Value::Matrix(m) => write!(f, "{m}"),
            Value::Real(x) => f.write_str(&format_real(*x)),
            Value::Complex(z) => f.write_str(&format_complex(*z)),
            Value::Characters(cs) => {
                let parts: Vec<String> = cs.iter().map(|z| format_complex(*z)).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

fn type_err(pos: Pos, message: impl Into<String>) -> EvalError {
    EvalError::Type {
        pos,
        message: message.into(),
    }
}

/// Static kind of `e`; rejects ill-typed expressions before evaluation.
pub fn check(e: &Expr) -> Result<Kind, EvalError> {
    let want_scalar = |part: &Expr| -> Result<(), EvalError> {
        match check(part)? {
            Kind::Scalar => Ok(()),
            k => Err(type_err(
                part.pos(),
                format!("component must be a scalar, found {}", k.name()),
            )),
        }
    };
    match e {
        Expr::Number { .. } | Expr::Sqrt3 { .. } => Ok(Kind::Scalar),
        Expr::Unit { .. } => Ok(Kind::Matrix),
        Expr::Pair { parts, .. } => {
            parts.iter().try_for_each(want_scalar)?;
            Ok(Kind::Pair)
        }
        Expr::Triple { parts, .. } => {
            parts.iter().try_for_each(want_scalar)?;
            Ok(Kind::Triple)
        }
        Expr::Matrix { rows, .. } => {
            rows.iter().flatten().try_for_each(want_scalar)?;
            Ok(Kind::Matrix)
        }
        Expr::Neg { inner, pos } => match check(inner)? {
            Kind::Scalar => Ok(Kind::Scalar),
            k => Err(type_err(
                *pos,
                format!("cannot negate a {}; use reduce/swap forms", k.name()),
            )),
        },
        Expr::Pow { base, pos, .. } => match check(base)? {
            k if k.is_exact() => Ok(k),
            k => Err(type_err(
                *pos,
                format!("cannot raise a {} to a power", k.name()),
            )),
        },
        Expr::Binary { op, lhs, rhs, pos } => {
            let (l, r) = (check(lhs)?, check(rhs)?);
            let mismatch = || {
                let sym = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                    BinOp::Div => "/",
                };
                type_err(
                    *pos,
                    format!("cannot apply `{sym}` to {} and {}", l.name(), r.name()),
                )
            };
            match op {
                BinOp::Sub | BinOp::Div if l == Kind::Scalar && r == Kind::Scalar => {
                    Ok(Kind::Scalar)
                }
                BinOp::Sub | BinOp::Div => Err(mismatch()),
                BinOp::Add | BinOp::Mul => match (l, r) {
                    (a, b) if a == b && a.is_exact() => Ok(a),
                    (Kind::Scalar, b) if b.is_system() => Ok(b),
                    (a, Kind::Scalar) if a.is_system() => Ok(a),
                    _ => Err(mismatch()),
                },
            }
        }
        Expr::Call { func, arg, pos } => {
            let k = check(arg)?;
            let out = match (func, k) {
                (Func::Reduce, k) if k.is_system() => Some(k),
                (Func::Norm, Kind::Pair | Kind::Triple | Kind::Matrix) => Some(Kind::Real),
                (Func::NormSq, Kind::Pair | Kind::Triple | Kind::Matrix) => Some(Kind::Scalar),
                (Func::Conj, Kind::Triple) => Some(Kind::Triple),
                (Func::ToComplex, Kind::Triple) => Some(Kind::Complex),
                (Func::RowSums, Kind::Matrix) => Some(Kind::Triple),
                (Func::Chars, Kind::Matrix) => Some(Kind::Characters),
                _ => None,
            };
            out.ok_or_else(|| {
                type_err(
                    *pos,
                    format!("{}() does not accept a {}", func.name(), k.name()),
                )
            })
        }
    }
}

fn alg(pos: Pos) -> impl Fn(AlgebraError) -> EvalError {
    move |source| EvalError::Algebra { pos, source }
}

/// Embeds a signed scalar into a number system for `+`.
fn embed(s: &ExactScalar, kind: Kind) -> Value {
    match kind {
        Kind::Pair => Value::Pair(UPair::from_signed(s)),
        Kind::Triple => {
            let p = UPair::from_signed(s);
            let t = Triple::new(p.plus().clone(), p.minus().clone(), p.minus().clone());
            Value::Triple(t.expect("nonnegative"))
        }
        Kind::Matrix => {
            let p = UPair::from_signed(s);
            let one = unit_value(usv_core::UnitName::One)
                .scale(p.plus())
                .expect("nonnegative");
            let neg = unit_value(usv_core::UnitName::NegOne)
                .scale(p.minus())
                .expect("nonnegative");
            Value::Matrix(&one + &neg)
        }
        _ => Value::Scalar(s.clone()),
    }
}

fn scalar_of(v: Value) -> ExactScalar {
    match v {
        Value::Scalar(s) => s,
        other => unreachable!("type checker admitted {:?} as scalar", other.kind()),
    }
}

fn add(pos: Pos, l: Value, r: Value) -> Result<Value, EvalError> {
    Ok(match (l, r) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b),
        (Value::Scalar(s), v) => return add(pos, embed(&s, v.kind()), v),
        (v, Value::Scalar(s)) => {
            let k = v.kind();
            return add(pos, v, embed(&s, k));
        }
        (Value::Pair(a), Value::Pair(b)) => Value::Pair(&a + &b),
        (Value::Triple(a), Value::Triple(b)) => Value::Triple(&a + &b),
        (Value::Matrix(a), Value::Matrix(b)) => Value::Matrix(&a + &b),
        (a, b) => {
            return Err(type_err(
                pos,
                format!("cannot add {:?} and {:?}", a.kind(), b.kind()),
            ))
        }
    })
}

fn scale(pos: Pos, s: &ExactScalar, v: Value) -> Result<Value, EvalError> {
    let err = alg(pos);
    Ok(match v {
        Value::Scalar(x) => Value::Scalar(s * &x),
        Value::Pair(p) => Value::Pair(p.scale(s).map_err(err)?),
        Value::Triple(t) => Value::Triple(t.scale(s).map_err(err)?),
        Value::Matrix(m) => Value::Matrix(m.scale(s).map_err(err)?),
        other => {
            return Err(type_err(
                pos,
                format!("cannot scale a {}", other.kind().name()),
            ))
        }
    })
}

fn mul(pos: Pos, l: Value, r: Value) -> Result<Value, EvalError> {
    Ok(match (l, r) {
        (Value::Scalar(s), v) | (v, Value::Scalar(s)) => return scale(pos, &s, v),
        (Value::Pair(a), Value::Pair(b)) => Value::Pair(&a * &b),
        (Value::Triple(a), Value::Triple(b)) => Value::Triple(&a * &b),
        (Value::Matrix(a), Value::Matrix(b)) => Value::Matrix(&a * &b),
        (a, b) => {
            return Err(type_err(
                pos,
                format!("cannot multiply {:?} and {:?}", a.kind(), b.kind()),
            ))
        }
    })
}

fn pow(pos: Pos, v: Value, n: u32) -> Result<Value, EvalError> {
    Ok(match v {
        Value::Scalar(s) => Value::Scalar(s.pow(n)),
        Value::Pair(p) => Value::Pair(p.pow(n)),
        Value::Triple(t) => Value::Triple(t.pow(n)),
        Value::Matrix(m) => Value::Matrix(m.pow(n)),
        other => {
            return Err(type_err(
                pos,
                format!("cannot raise a {} to a power", other.kind().name()),
            ))
        }
    })
}

fn call(pos: Pos, func: Func, v: Value) -> Result<Value, EvalError> {
    Ok(match (func, v) {
        (Func::Reduce, Value::Pair(p)) => Value::Pair(p.reduce()),
        (Func::Reduce, Value::Triple(t)) => Value::Triple(t.reduce()),
        (Func::Reduce, Value::Matrix(m)) => Value::Matrix(m.reduce()),
        (Func::Norm, Value::Pair(p)) => Value::Real(p.to_signed().abs().to_f64()),
        (Func::Norm, Value::Triple(t)) => Value::Real(t.norm()),
        (Func::Norm, Value::Matrix(m)) => Value::Real(m.norm()),
        (Func::NormSq, Value::Pair(p)) => {
            let s = p.to_signed();
            Value::Scalar(&s * &s)
        }
        (Func::NormSq, Value::Triple(t)) => Value::Scalar(t.norm_sq()),
        (Func::NormSq, Value::Matrix(m)) => Value::Scalar(m.norm_sq()),
        (Func::Conj, Value::Triple(t)) => Value::Triple(t.conj()),
        (Func::ToComplex, Value::Triple(t)) => Value::Complex(t.to_complex()),
        (Func::RowSums, Value::Matrix(m)) => Value::Triple(m.row_sums()),
        (Func::Chars, Value::Matrix(m)) => Value::Characters(m.characters()),
        (f, v) => {
            return Err(type_err(
                pos,
                format!("{}() does not accept a {}", f.name(), v.kind().name()),
            ))
        }
    })
}

fn eval_components<const N: usize>(parts: &[Expr; N]) -> Result<[ExactScalar; N], EvalError> {
    let mut out = Vec::with_capacity(N);
    for p in parts {
        let s = scalar_of(eval_checked(p)?);
        if s.is_negative() {
            return Err(alg(p.pos())(AlgebraError::NegativeScalar(s.to_string())));
        }
        out.push(s);
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

fn eval_checked(e: &Expr) -> Result<Value, EvalError> {
    match e {
        Expr::Number { text, pos } => {
            let r = parse_rational(text).map_err(alg(*pos))?;
            Ok(Value::Scalar(ExactScalar::from_rational(r)))
        }
        Expr::Sqrt3 { .. } => Ok(Value::Scalar(ExactScalar::sqrt3())),
        Expr::Unit { unit, .. } => Ok(Value::Matrix(unit_value(*unit))),
        Expr::Pair { parts, pos } => {
            let [a, b] = eval_components(parts)?;
            Ok(Value::Pair(UPair::new(a, b).map_err(alg(*pos))?))
        }
        Expr::Triple { parts, pos } => {
            let [a, b, c] = eval_components(parts)?;
            Ok(Value::Triple(Triple::new(a, b, c).map_err(alg(*pos))?))
        }
        Expr::Matrix { rows, pos } => {
            let [r0, r1, r2] = &**rows;
            let rows = [
                eval_components(r0)?,
                eval_components(r1)?,
                eval_components(r2)?,
            ];
            Ok(Value::Matrix(Mat33::from_rows(rows).map_err(alg(*pos))?))
        }
        Expr::Neg { inner, .. } => Ok(Value::Scalar(-scalar_of(eval_checked(inner)?))),
        Expr::Pow { base, exp, pos } => pow(*pos, eval_checked(base)?, *exp),
        Expr::Binary { op, lhs, rhs, pos } => {
            let (l, r) = (eval_checked(lhs)?, eval_checked(rhs)?);
            match op {
                BinOp::Add => add(*pos, l, r),
                BinOp::Sub => Ok(Value::Scalar(scalar_of(l) - scalar_of(r))),
                BinOp::Mul => mul(*pos, l, r),
                BinOp::Div => {
                    let q = scalar_of(l).checked_div(&scalar_of(r)).map_err(alg(*pos))?;
                    Ok(Value::Scalar(q))
                }
            }
        }
        Expr::Call { func, arg, pos } => call(*pos, *func, eval_checked(arg)?),
    }
}

/// Type-checks, then evaluates.
pub fn evaluate(e: &Expr) -> Result<Value, EvalError> {
    check(e)?;
    eval_checked(e)
}

/// Parses and evaluates one line of input.
pub fn eval_str(src: &str) -> Result<Value, EvalError> {
    evaluate(&parse(src)?)
}
