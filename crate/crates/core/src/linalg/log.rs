//! Logarithm of a unipotent matrix by the terminating Mercator series.

use num_bigint::BigInt;

use super::matrix::Matrix;
use super::rational::Rational;
use super::LinalgError;

/// `log(m) = sum_{k>=1} (-1)^{k+1} (m - I)^k / k`, finite because `m - I` is
/// nilpotent.
pub fn log_unipotent(m: &Matrix) -> Result<Matrix, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let shifted = m - &Matrix::identity(n);
    let index = shifted
        .nilpotency_index()
        .ok_or(LinalgError::NotUnipotent)?;
    let mut acc = Matrix::zero(n, n);
    let mut power = Matrix::identity(n);
    for k in 1..index {
        power = &power * &shifted;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = &acc + &power.scale(&Rational::new(BigInt::from(sign), BigInt::from(k)));
    }
    Ok(acc)
}

/// Exponential of a nilpotent matrix by its finite series.
pub fn exp_nilpotent(m: &Matrix) -> Option<Matrix> {
    m.exp_nilpotent()
}
