use usv_core::UnitName;

/// Byte offset into the source text.
pub type Pos = usize;

#[derive(Clone, Debug, PartialEq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Reduce,
    Norm,
    NormSq,
    Conj,
    ToComplex,
    RowSums,
    Chars,
}

impl Func {
    pub const ALL: [Func; 7] = [
        Func::Reduce,
        Func::Norm,
        Func::NormSq,
        Func::Conj,
        Func::ToComplex,
        Func::RowSums,
        Func::Chars,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Reduce => "reduce",
            Func::Norm => "norm",
            Func::NormSq => "normsq",
            Func::Conj => "conj",
            Func::ToComplex => "tocomplex",
            Func::RowSums => "rowsums",
            Func::Chars => "chars",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Decimal or integer literal, kept as written.
    Number {
        text: String,
        pos: Pos,
    },
    Sqrt3 {
        pos: Pos,
    },
    Unit {
        unit: UnitName,
        pos: Pos,
    },
    Pair {
        parts: Box<[Expr; 2]>,
        pos: Pos,
    },
    Triple {
        parts: Box<[Expr; 3]>,
        pos: Pos,
    },
    Matrix {
        rows: Box<[[Expr; 3]; 3]>,
        pos: Pos,
    },
    Neg {
        inner: Box<Expr>,
        pos: Pos,
    },
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
        pos: Pos,
    },
    Pow {
        base: Box<Expr>,
        exp: u32,
        pos: Pos,
    },
    Call {
        func: Func,
        arg: Box<Expr>,
        pos: Pos,
    },
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Number { pos, .. }
            | Expr::Sqrt3 { pos }
            | Expr::Unit { pos, .. }
            | Expr::Pair { pos, .. }
            | Expr::Triple { pos, .. }
            | Expr::Matrix { pos, .. }
            | Expr::Neg { pos, .. }
            | Expr::Binary { pos, .. }
            | Expr::Pow { pos, .. }
            | Expr::Call { pos, .. } => *pos,
        }
    }
}
