use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::{ExactAlgError, QPoly};

/// Reduced rational function `num / den` in `q`.
///
/// Canonical form: `gcd(num, den) = 1` and `den` is monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRatFun {
    num: QPoly,
    den: QPoly,
}

impl QRatFun {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = den.coeffs()[0].recip();
            return QRatFun { num: num.scale(&inv), den: QPoly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = den.leading().unwrap().clone();
        if lead.is_one() {
            QRatFun { num, den }
        } else {
            let inv = lead.recip();
            QRatFun { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn zero() -> Self {
        QRatFun { num: QPoly::zero(), den: QPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        QRatFun { num: p, den: QPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QPoly::from_int(c))
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// The numerator when the denominator is one.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self, ExactAlgError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &QRatFun) -> Result<Self, ExactAlgError> {
        if rhs.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    /// Exact value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

fn add_impl(a: &QRatFun, b: &QRatFun, negate: bool) -> QRatFun {
    let bn = if negate { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return QRatFun { num: bn, den: b.den.clone() };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den.is_one() && b.den.is_one() {
        return QRatFun::from_poly(&a.num + &bn);
    }
    if a.den == b.den {
        return QRatFun::reduce(&a.num + &bn, a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let (ad, bd) = if g.is_one() {
        (a.den.clone(), b.den.clone())
    } else {
        (a.den.div_exact(&g).unwrap(), b.den.div_exact(&g).unwrap())
    };
    let num = &a.num * &bd + &bn * &ad;
    let den = &a.den * &bd;
    QRatFun::reduce(num, den)
}

fn mul_impl(a: &QRatFun, b: &QRatFun) -> QRatFun {
    if a.is_zero() || b.is_zero() {
        return QRatFun::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return QRatFun::from_poly(&a.num * &b.num);
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let an = a.num.div_exact(&g1).unwrap();
    let bd = b.den.div_exact(&g1).unwrap();
    let bn = b.num.div_exact(&g2).unwrap();
    let ad = a.den.div_exact(&g2).unwrap();
    // quotients of monic polynomials by monic gcds stay monic
    QRatFun { num: &an * &bn, den: &ad * &bd }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&QRatFun> for &QRatFun {
            type Output = QRatFun;
            fn $method(self, rhs: &QRatFun) -> QRatFun {
                $body(self, rhs)
            }
        }
        impl $tr<QRatFun> for QRatFun {
            type Output = QRatFun;
            fn $method(self, rhs: QRatFun) -> QRatFun {
                $body(&self, &rhs)
            }
        }
        impl $tr<&QRatFun> for QRatFun {
            type Output = QRatFun;
            fn $method(self, rhs: &QRatFun) -> QRatFun {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);

impl Neg for &QRatFun {
    type Output = QRatFun;
    fn neg(self) -> QRatFun {
        QRatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRatFun {
    type Output = QRatFun;
    fn neg(self) -> QRatFun {
        QRatFun { num: -self.num, den: self.den }
    }
}

impl From<QPoly> for QRatFun {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for QRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render_ratfun(self))
    }
}

impl fmt::Debug for QRatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRatFun({self})")
    }
}
