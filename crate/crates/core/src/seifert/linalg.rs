//! Exact dense linear algebra on small integer matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::LaurentPoly1;

pub(crate) type IntMatrix = Vec<Vec<i64>>;

/// Determinant by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub(crate) fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub(crate) fn symmetrize(m: &IntMatrix) -> IntMatrix {
    let n = m.len();
    (0..n)
        .map(|i| (0..n).map(|j| m[i][j] + m[j][i]).collect())
        .collect()
}

pub(crate) fn transpose(m: &IntMatrix) -> IntMatrix {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, by congruence
/// diagonalization over the rationals.
///
/// A zero pivot with a nonzero partner `a_kj` is handled as the hyperbolic
/// block `[[0, a], [a, 0]]`, which contributes one positive and one negative
/// direction.
pub(crate) fn inertia(m: &IntMatrix) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut k = 0;
    while k < n {
        // bring a nonzero diagonal entry to position k if there is one
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, k, j);
            }
        }
        if !a[k][k].is_zero() {
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
                for j in k..n {
                    let t = &f * &a[j][k];
                    a[j][i] -= t;
                }
            }
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            k += 1;
            continue;
        }
        let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) else {
            zero += 1;
            k += 1;
            continue;
        };
        // hyperbolic block at (k, k+1)
        swap_sym(&mut a, k + 1, j);
        let off = a[k][k + 1].clone();
        for i in k + 2..n {
            // row_i -= x row_k + y row_{k+1} with [x y] B = [a_ik a_i,k+1]
            let x = &a[i][k + 1] / &off;
            let y = &a[i][k] / &off;
            if x.is_zero() && y.is_zero() {
                continue;
            }
            for c in k..n {
                let t = &x * &a[k][c] + &y * &a[k + 1][c];
                a[i][c] -= t;
            }
            for r in k..n {
                let t = &x * &a[r][k] + &y * &a[r][k + 1];
                a[r][i] -= t;
            }
        }
        pos += 1;
        neg += 1;
        k += 2;
    }
    (pos, neg, zero)
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// `det(V - t V^T)` as an exact polynomial in `t`, recovered by evaluating at
/// `t = 0, 1, .., m` and interpolating.
pub(crate) fn alexander_determinant(v: &IntMatrix) -> LaurentPoly1 {
    let m = v.len();
    let vb = to_big(v);
    let samples: Vec<BigInt> = (0..=m as i64)
        .map(|t| {
            let t = BigInt::from(t);
            let mat: Vec<Vec<BigInt>> = (0..m)
                .map(|i| (0..m).map(|j| &vb[i][j] - &t * &vb[j][i]).collect())
                .collect();
            determinant(&mat)
        })
        .collect();
    interpolate(&samples)
}

/// Coefficients of the unique polynomial of degree `< len` through
/// `(k, samples[k])`, Newton form.
fn interpolate(samples: &[BigInt]) -> LaurentPoly1 {
    let n = samples.len();
    // divided differences on nodes 0..n
    let mut dd: Vec<BigRational> = samples.iter().map(|s| BigRational::from_integer(s.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // expand sum dd[k] * prod_{j<k} (t - j)
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n];
    let mut basis: Vec<BigRational> = vec![BigRational::one()];
    for (k, d) in dd.iter().enumerate() {
        for (c, b) in coeffs.iter_mut().zip(&basis) {
            *c += d * b;
        }
        // basis *= (t - k)
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * BigRational::from_integer(BigInt::from(k));
        }
        basis = next;
    }
    LaurentPoly1::from_coeffs(coeffs.into_iter().map(|c| {
        debug_assert!(c.is_integer());
        c.to_integer()
    }))
}
