use crate::laurent::LaurentPoly;

/// Determinant by fraction-free (Bareiss) elimination; every division is exact.
pub fn determinant(matrix: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = matrix.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut m: Vec<Vec<LaurentPoly>> = matrix.to_vec();
    let mut negate = false;
    let mut previous = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = numerator
                    .exact_div(&previous)
                    .expect("Bareiss quotients are exact");
            }
            m[i][k] = LaurentPoly::zero();
        }
        previous = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// `V − t·Vᵀ` as a polynomial matrix.
pub fn seifert_pencil(v: &[Vec<i64>]) -> Vec<Vec<LaurentPoly>> {
    let n = v.len();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| &LaurentPoly::constant(v[a][b]) - &LaurentPoly::monomial(v[b][a], 1))
                .collect()
        })
        .collect()
}
