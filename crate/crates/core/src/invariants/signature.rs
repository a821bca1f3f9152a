use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Signature of the symmetric matrix `V + Vᵀ`, by congruence diagonalization
/// over the rationals.
pub fn signature(v: &[Vec<i64>]) -> i64 {
    let n = v.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| BigRational::from_integer(BigInt::from(v[r][c] + v[c][r])))
                .collect()
        })
        .collect();
    let mut sig = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // row_k += row_j, col_k += col_j makes the pivot 2·a[k][j]
                for c in 0..n {
                    let add = a[j][c].clone();
                    a[k][c] += add;
                }
                for r in 0..n {
                    let add = a[r][j].clone();
                    a[r][k] += add;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for c in k..n {
                let sub = &factor * &a[k][c];
                a[i][c] -= sub;
            }
            for r in k..n {
                let sub = &factor * &a[r][k];
                a[r][i] -= sub;
            }
        }
        sig += if pivot.is_positive() { 1 } else { -1 };
    }
    sig
}
