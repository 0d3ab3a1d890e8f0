use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::classes::CycleType;
use super::table::{char_table, IrrLabel};
use super::{GroupSpec, WeylError};
use crate::exactalg::{QPoly, QRatFun, RatMatrix};

fn invariant_product(g: GroupSpec) -> QPoly {
    g.degrees().iter().fold(QPoly::one(), |acc, &d| acc * (QPoly::one() - QPoly::t_pow(d)))
}

/// `ω_c = Π (1 − t^{d_i}) / det(1 − t·w)`, the graded trace of `w` on the
/// coinvariant algebra.
pub fn omega_class(g: GroupSpec, c: &CycleType) -> Result<QPoly, WeylError> {
    invariant_product(g).div_exact(&c.char_poly()).ok_or(WeylError::NonPolynomialResult)
}

/// Graded multiplicity of `L_χ` in the coinvariant algebra (the fake
/// degree), through the Molien series of `ℂ[𝔥*]`.
pub fn coinvariant_multiplicity<L: IrrLabel>(chi: &L) -> Result<QPoly, WeylError> {
    let n = chi.rank();
    let table = char_table::<L>(n)?;
    let row = table.row(chi)?;
    let dets: Vec<QPoly> = table.classes.iter().map(CycleType::char_poly).collect();
    let common = dets.iter().fold(QPoly::one(), |acc, d| {
        let g = acc.gcd(d);
        &acc * &d.div_exact(&g).expect("gcd divides")
    });
    let mut num = QPoly::zero();
    for ((d, z), &v) in dets.iter().zip(&table.centralizers).zip(row) {
        if v != 0 {
            let cofactor = common.div_exact(d).ok_or(WeylError::NonPolynomialResult)?;
            num = num + cofactor.scale(&BigRational::new(v.into(), z.clone()));
        }
    }
    let molien = QRatFun::new(num, common).map_err(|_| WeylError::NonPolynomialResult)?;
    let g = GroupSpec::new(L::FAMILY, n);
    let f = molien * QRatFun::from_poly(invariant_product(g));
    match f.as_poly() {
        Some(p) if p.is_natural() => Ok(p.clone()),
        _ => Err(WeylError::NonPolynomialResult),
    }
}

/// `Ω_{χ,η} = Σ_c χ(c) η(c) ω_c / z_c` over the given labels.
pub fn omega_matrix<L: IrrLabel>(n: usize, labels: &[L]) -> Result<RatMatrix, WeylError> {
    let table = char_table::<L>(n)?;
    let g = GroupSpec::new(L::FAMILY, n);
    let order = table.order();
    // |C_c|·ω_c as integer t-coefficients
    let weighted: Vec<Vec<BigInt>> = table
        .classes
        .iter()
        .zip(&table.centralizers)
        .map(|(c, z)| {
            let w = omega_class(g, c)?;
            let size = &order / z;
            w.coeffs()
                .iter()
                .step_by(2)
                .map(|x| if x.is_integer() { Ok(x.to_integer() * &size) } else { Err(WeylError::NonPolynomialResult) })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let width = weighted.iter().map(Vec::len).max().unwrap_or(0);
    let rows: Vec<&[i64]> = labels.iter().map(|l| table.row(l)).collect::<Result<_, _>>()?;
    let k = labels.len();
    let mut m = RatMatrix::zeros(k, k);
    let mut acc = vec![BigInt::zero(); width];
    for i in 0..k {
        for j in i..k {
            acc.iter_mut().for_each(|x| x.set_zero());
            for (c, w) in weighted.iter().enumerate() {
                let v = rows[i][c] * rows[j][c];
                if v != 0 {
                    let v = BigInt::from(v);
                    for (a, x) in acc.iter_mut().zip(w) {
                        *a += &v * x;
                    }
                }
            }
            let coeffs = acc
                .iter()
                .map(|x| {
                    let r = BigRational::new(x.clone(), order.clone());
                    if r.is_integer() && !r.is_negative() {
                        Ok(r)
                    } else {
                        Err(WeylError::NonPolynomialResult)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mut q = Vec::with_capacity(2 * coeffs.len());
            for c in coeffs {
                q.push(c);
                q.push(BigRational::zero());
            }
            let e = QRatFun::from_poly(QPoly::from_coeffs(q));
            m.set(j, i, e.clone());
            m.set(i, j, e);
        }
    }
    Ok(m)
}
