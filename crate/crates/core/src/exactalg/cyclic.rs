use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

/// Product in `Z[x]/(x^n - 1)` of two coefficient vectors of length `n`.
pub fn cyclic_convolution(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len();
    assert_eq!(n, b.len(), "cyclic convolution needs equal lengths");
    if let Some(out) = small_convolution(a, b) {
        return out;
    }
    let nnz = |v: &[BigInt]| v.iter().filter(|x| !x.is_zero()).count();
    // sparse operand in the outer loop
    let (a, b) = if nnz(a) <= nnz(b) { (a, b) } else { (b, a) };
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[(i + j) % n] += x * y;
        }
    }
    out
}

// i128 accumulation when every partial sum provably fits.
fn small_convolution(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let a: Vec<i64> = a.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
    let b: Vec<i64> = b.iter().map(ToPrimitive::to_i64).collect::<Option<_>>()?;
    let max_a = a.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as u128;
    let max_b = b.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) as u128;
    let bound = max_a.checked_mul(max_b)?.checked_mul(a.len() as u128)?;
    if bound >= i128::MAX as u128 {
        return None;
    }
    let n = a.len();
    let mut acc = vec![0i128; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[(i + j) % n] += x as i128 * y as i128;
        }
    }
    Some(acc.into_iter().map(BigInt::from).collect())
}
