use std::ops::Range;

use super::{ExactAlgError, QRatFun, RatMatrix};

/// Result of [`block_ldu`]: `l * d * u == omega`.
#[derive(Clone, Debug)]
pub struct BlockLdu {
    pub l: RatMatrix,
    pub d: RatMatrix,
    pub u: RatMatrix,
}

/// Checks that `blocks` are contiguous, nonempty and cover `0..n` in order.
pub fn validate_blocks(n: usize, blocks: &[Range<usize>]) -> Result<(), ExactAlgError> {
    let mut next = 0;
    for b in blocks {
        if b.start != next || b.end <= b.start {
            return Err(ExactAlgError::InvalidBlocks);
        }
        next = b.end;
    }
    if next != n {
        return Err(ExactAlgError::InvalidBlocks);
    }
    Ok(())
}

/// Block LDU factorization over `Q(q)`.
///
/// `L` is block lower triangular and `U` block upper triangular, both with
/// identity diagonal blocks; `D` is block diagonal. The factorization is
/// unique when every leading principal block submatrix is invertible;
/// otherwise `SingularBlock(k)` names the first block whose Schur
/// complement is singular.
pub fn block_ldu(omega: &RatMatrix, blocks: &[Range<usize>]) -> Result<BlockLdu, ExactAlgError> {
    if !omega.is_square() {
        return Err(ExactAlgError::ShapeMismatch);
    }
    let n = omega.rows();
    validate_blocks(n, blocks)?;

    let mut s = omega.clone();
    let mut l = RatMatrix::identity(n);
    let mut d = RatMatrix::zeros(n, n);
    let mut u = RatMatrix::identity(n);

    for (k, b) in blocks.iter().enumerate() {
        let pivot = s.submatrix(b.clone(), b.clone());
        let inv = pivot.inverse().ok_or(ExactAlgError::SingularBlock(k))?;
        for (i, j, v) in pivot.entries() {
            d.set(b.start + i, b.start + j, v.clone());
        }
        let rest = b.end..n;
        if rest.is_empty() {
            continue;
        }
        // L[rest, b] = S[rest, b] * inv ; U[b, rest] = inv * S[b, rest]
        for i in rest.clone() {
            for j in b.clone() {
                let v = (b.clone())
                    .map(|h| s.get(i, h) * inv.get(h - b.start, j - b.start))
                    .fold(QRatFun::zero(), |a, x| &a + &x);
                l.set(i, j, v);
            }
        }
        for i in b.clone() {
            for j in rest.clone() {
                let v = (b.clone())
                    .map(|h| inv.get(i - b.start, h - b.start) * s.get(h, j))
                    .fold(QRatFun::zero(), |a, x| &a + &x);
                u.set(i, j, v);
            }
        }
        // Schur complement on the trailing block
        for i in rest.clone() {
            for j in rest.clone() {
                let corr = (b.clone())
                    .map(|h| l.get(i, h) * s.get(h, j))
                    .fold(QRatFun::zero(), |a, x| &a + &x);
                if !corr.is_zero() {
                    let v = s.get(i, j) - &corr;
                    s.set(i, j, v);
                }
            }
        }
    }
    Ok(BlockLdu { l, d, u })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::QPoly;

    fn rp(c: &[i64]) -> QRatFun {
        QRatFun::from_poly(QPoly::from_int_coeffs(c))
    }

    fn singletons(n: usize) -> Vec<Range<usize>> {
        (0..n).map(|i| i..i + 1).collect()
    }

    #[test]
    fn diagonal_input_is_already_factored() {
        let omega = RatMatrix::from_rows(vec![
            vec![rp(&[1, 1]), rp(&[])],
            vec![rp(&[]), rp(&[0, 3])],
        ])
        .unwrap();
        let f = block_ldu(&omega, &singletons(2)).unwrap();
        assert_eq!(f.l, RatMatrix::identity(2));
        assert_eq!(f.u, RatMatrix::identity(2));
        assert_eq!(f.d, omega);
    }

    #[test]
    fn two_by_two_hand_elimination() {
        let omega = RatMatrix::from_rows(vec![
            vec![rp(&[1]), rp(&[0, 1])],
            vec![rp(&[0, 1]), rp(&[1])],
        ])
        .unwrap();
        let f = block_ldu(&omega, &singletons(2)).unwrap();
        let l = RatMatrix::from_rows(vec![vec![rp(&[1]), rp(&[])], vec![rp(&[0, 1]), rp(&[1])]]).unwrap();
        let d = RatMatrix::from_rows(vec![vec![rp(&[1]), rp(&[])], vec![rp(&[]), rp(&[1, 0, -1])]]).unwrap();
        let u = RatMatrix::from_rows(vec![vec![rp(&[1]), rp(&[0, 1])], vec![rp(&[]), rp(&[1])]]).unwrap();
        assert_eq!(f.l, l);
        assert_eq!(f.d, d);
        assert_eq!(f.u, u);
    }

    #[test]
    fn zero_leading_block_is_singular() {
        let omega = RatMatrix::from_rows(vec![
            vec![rp(&[]), rp(&[1])],
            vec![rp(&[1]), rp(&[1])],
        ])
        .unwrap();
        assert!(matches!(block_ldu(&omega, &singletons(2)), Err(ExactAlgError::SingularBlock(0))));
        // merging both indices into one block makes it invertible
        let f = block_ldu(&omega, &[0..2]).unwrap();
        assert_eq!(f.d, omega);
    }

    #[test]
    fn rejects_bad_blocks() {
        let omega = RatMatrix::identity(3);
        assert!(matches!(block_ldu(&omega, &[0..1, 2..3]), Err(ExactAlgError::InvalidBlocks)));
        assert!(matches!(block_ldu(&omega, &[0..2]), Err(ExactAlgError::InvalidBlocks)));
    }
}
