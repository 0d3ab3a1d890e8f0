//! Text form of polynomials: `c0 + c1*q + c2*q^2`, zero terms omitted,
//! rationals written `a/b`, unit coefficients dropped in front of a power.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ExactAlgError, QPoly, QRatFun};

pub(crate) fn render(coeffs: &[BigRational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{mag}*{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn parse_rational(s: &str) -> Result<BigRational, ExactAlgError> {
    let bad = || ExactAlgError::Parse(s.to_string());
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(ExactAlgError::DivisionByZero);
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// Parse a polynomial in `var`. Exponents are multiplied by `scale` on the
/// way in, so `parse_poly(s, "t", 2)` reads a polynomial in `t = q^2`.
pub fn parse_poly_in(s: &str, var: &str, scale: usize) -> Result<QPoly, ExactAlgError> {
    let src = s.trim();
    if src.is_empty() {
        return Err(ExactAlgError::Parse(s.to_string()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in src.chars() {
        match ch {
            '+' | '-' if !cur.trim().is_empty() && !cur.trim_end().ends_with(['^', '*', '/']) => {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            }
            '-' if cur.trim().is_empty() => neg = !neg,
            '+' if cur.trim().is_empty() => {}
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    terms.push((neg, cur));

    let mut coeffs: Vec<BigRational> = Vec::new();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(ExactAlgError::Parse(s.to_string()));
        }
        let (coef_str, pow_str) = match term.find(var) {
            Some(pos) => (&term[..pos], Some(&term[pos + var.len()..])),
            None => (term.as_str(), None),
        };
        let coef = match coef_str.strip_suffix('*') {
            Some(c) => parse_rational(c)?,
            None if coef_str.is_empty() => BigRational::one(),
            None if pow_str.is_none() => parse_rational(coef_str)?,
            None => return Err(ExactAlgError::Parse(s.to_string())),
        };
        let exp = match pow_str {
            None => 0,
            Some("") => 1,
            Some(p) => p
                .strip_prefix('^')
                .and_then(|e| e.parse::<usize>().ok())
                .ok_or_else(|| ExactAlgError::Parse(s.to_string()))?,
        };
        let idx = exp * scale;
        if coeffs.len() <= idx {
            coeffs.resize(idx + 1, BigRational::zero());
        }
        if neg {
            coeffs[idx] -= coef;
        } else {
            coeffs[idx] += coef;
        }
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// Parse the `q`-form produced by `QPoly`'s `Display`.
pub fn parse_poly(s: &str) -> Result<QPoly, ExactAlgError> {
    parse_poly_in(s, "q", 1)
}

/// Rational functions print as the numerator when the denominator is one,
/// and as `(num)/(den)` otherwise.
pub fn render_ratfun(r: &QRatFun) -> String {
    if r.den().is_one() {
        r.num().to_string()
    } else {
        format!("({})/({})", r.num(), r.den())
    }
}

pub fn parse_ratfun(s: &str) -> Result<QRatFun, ExactAlgError> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('(') {
        let close = rest
            .find(')')
            .ok_or_else(|| ExactAlgError::Parse(s.to_string()))?;
        let num = parse_poly(&rest[..close])?;
        let tail = rest[close + 1..].trim();
        let den_src = tail
            .strip_prefix("/(")
            .and_then(|d| d.strip_suffix(')'))
            .ok_or_else(|| ExactAlgError::Parse(s.to_string()))?;
        let den = parse_poly(den_src)?;
        QRatFun::new(num, den)
    } else {
        Ok(QRatFun::from_poly(parse_poly(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn renders_documented_form() {
        let p = QPoly::from_coeffs(vec![
            BigRational::from_integer(1.into()),
            BigRational::new((-1).into(), 2.into()),
            BigRational::from_integer(3.into()),
        ]);
        assert_eq!(p.to_string(), "1 - 1/2*q + 3*q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_t_coeffs(&[0, 1, 1]).to_t_string().unwrap(), "t + t^2");
    }

    #[test]
    fn parses_loose_forms() {
        let p = parse_poly("2 + -3*q^2 + q").unwrap();
        assert_eq!(p, QPoly::from_int_coeffs(&[2, 1, -3]));
        let p = parse_poly_in("1 + t^2", "t", 2).unwrap();
        assert_eq!(p, QPoly::from_t_coeffs(&[1, 0, 1]));
        assert!(parse_poly("q^").is_err());
        assert!(parse_poly("").is_err());
    }

    #[test]
    fn ratfun_text() {
        let r = QRatFun::new(QPoly::from_int_coeffs(&[2]), QPoly::from_int_coeffs(&[1, 0, -1])).unwrap();
        let s = render_ratfun(&r);
        assert_eq!(parse_ratfun(&s).unwrap(), r);
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(coeffs in prop::collection::vec((-20i64..20, 1i64..6), 0..8)) {
            let p = QPoly::from_coeffs(
                coeffs.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect(),
            );
            prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }
}
