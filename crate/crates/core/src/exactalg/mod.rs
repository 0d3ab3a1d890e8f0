//! Exact arithmetic in `Q[q]` and `Q(q)`, dense matrices over `Q(q)` and
//! their block LDU factorization.

mod ldu;
mod matrix;
mod poly;
mod ratfun;
pub mod text;

use num_rational::BigRational;
use thiserror::Error;

pub use ldu::{block_ldu, validate_blocks, BlockLdu};
pub use matrix::RatMatrix;
pub use poly::QPoly;
pub use ratfun::QRatFun;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactAlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading principal block {0} is singular")]
    SingularBlock(usize),
    #[error("blocks do not partition the index set in order")]
    InvalidBlocks,
    #[error("matrix shape mismatch")]
    ShapeMismatch,
    #[error("cannot parse `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn poly_arith(a: &QPoly, b: &QPoly, op: PolyOp) -> QPoly {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

pub fn ratfun_arith(a: &QRatFun, b: &QRatFun, op: RatOp) -> Result<QRatFun, ExactAlgError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => a.checked_div(b)?,
    })
}

pub fn substitute(p: &QPoly, value: &BigRational) -> BigRational {
    p.eval(value)
}
