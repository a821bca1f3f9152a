use crate::band_words::{ArtinWord, Sign};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

use super::determinant::determinant;

pub type PolyMatrix = Vec<Vec<LaurentPoly>>;

pub fn identity(n: usize) -> PolyMatrix {
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    if r == c {
                        LaurentPoly::one()
                    } else {
                        LaurentPoly::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// The reduced Burau image of `σ_m^±1` differs from the identity only in
/// column `m-1`; these are its entries in rows `m-2, m-1, m` (0-based),
/// clipped at the matrix border.
fn generator_column(sign: Sign) -> [LaurentPoly; 3] {
    match sign {
        Sign::Positive => {
            let t = LaurentPoly::t();
            [t.clone(), -&t, LaurentPoly::one()]
        }
        Sign::Negative => {
            let inv = LaurentPoly::monomial(1, -1);
            [LaurentPoly::one(), -&inv, inv]
        }
    }
}

/// Product of the reduced Burau matrices of the letters, `(n−1)×(n−1)`.
pub fn burau_reduced(word: &ArtinWord) -> PolyMatrix {
    let d = word.strands().saturating_sub(1);
    let mut m = identity(d);
    for letter in word.letters() {
        let col = letter.generator - 1;
        let g = generator_column(letter.sign);
        let mut new_col = vec![LaurentPoly::zero(); d];
        for (offset, coeff) in g.iter().enumerate() {
            let Some(src) = (col + offset).checked_sub(1).filter(|&c| c < d) else {
                continue;
            };
            for (r, slot) in new_col.iter_mut().enumerate() {
                if !m[r][src].is_zero() {
                    *slot += &(&m[r][src] * coeff);
                }
            }
        }
        for (r, v) in new_col.into_iter().enumerate() {
            m[r][col] = v;
        }
    }
    m
}

/// `det(I − B)·(1 − t)/(1 − tⁿ)` for the closure of `word`, normalized.
/// Zero when the closure has vanishing Alexander polynomial.
pub fn alexander_from_burau(word: &ArtinWord) -> Result<LaurentPoly> {
    let n = word.strands();
    let b = burau_reduced(word);
    let mut i_minus_b = identity(n - 1);
    for (r, row) in i_minus_b.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = &*slot - &b[r][c];
        }
    }
    let det = determinant(&i_minus_b);
    let one_minus_t = LaurentPoly::from_coeffs(0, &[1, -1]);
    let denominator = &LaurentPoly::one() - &LaurentPoly::monomial(1, n as i64);
    let quotient = (&det * &one_minus_t)
        .exact_div(&denominator)
        .ok_or(Error::NotCoprimePermutation)?;
    Ok(quotient.normalized_or_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band_words::ArtinLetter;

    fn artin(strands: usize, letters: &[(usize, i8)]) -> ArtinWord {
        ArtinWord::new(
            strands,
            letters
                .iter()
                .map(|&(g, s)| {
                    ArtinLetter::new(
                        g,
                        if s > 0 {
                            Sign::Positive
                        } else {
                            Sign::Negative
                        },
                    )
                })
                .collect(),
        )
        .unwrap()
    }

    fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
        let n = a.len();
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut acc = LaurentPoly::zero();
                        for k in 0..n {
                            acc += &(&a[r][k] * &b[k][c]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn two_strand_images() {
        assert_eq!(burau_reduced(&artin(2, &[])), identity(1));
        assert_eq!(
            burau_reduced(&artin(2, &[(1, 1)])),
            vec![vec![LaurentPoly::monomial(-1, 1)]]
        );
        assert_eq!(
            burau_reduced(&artin(2, &[(1, 1), (1, 1), (1, 1)])),
            vec![vec![LaurentPoly::monomial(-1, 3)]]
        );
    }

    #[test]
    fn inverses_cancel() {
        for n in 2..6 {
            for g in 1..n {
                let m = burau_reduced(&artin(n, &[(g, 1), (g, -1)]));
                assert_eq!(m, identity(n - 1), "s{g} in B{n}");
                let m = burau_reduced(&artin(n, &[(g, -1), (g, 1)]));
                assert_eq!(m, identity(n - 1));
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        let lhs = burau_reduced(&artin(4, &[(1, 1), (2, 1), (1, 1)]));
        let rhs = burau_reduced(&artin(4, &[(2, 1), (1, 1), (2, 1)]));
        assert_eq!(lhs, rhs);
        let lhs = burau_reduced(&artin(5, &[(2, 1), (3, 1), (2, 1)]));
        let rhs = burau_reduced(&artin(5, &[(3, 1), (2, 1), (3, 1)]));
        assert_eq!(lhs, rhs);
        let lhs = burau_reduced(&artin(5, &[(1, 1), (4, -1)]));
        let rhs = burau_reduced(&artin(5, &[(4, -1), (1, 1)]));
        assert_eq!(lhs, rhs);
        // column-update product agrees with explicit multiplication
        let a = burau_reduced(&artin(4, &[(1, 1), (3, -1)]));
        let b = burau_reduced(&artin(4, &[(2, 1), (2, 1)]));
        let ab = burau_reduced(&artin(4, &[(1, 1), (3, -1), (2, 1), (2, 1)]));
        assert_eq!(mat_mul(&a, &b), ab);
    }

    #[test]
    fn alexander_examples() {
        let trefoil = artin(2, &[(1, 1), (1, 1), (1, 1)]);
        assert_eq!(
            alexander_from_burau(&trefoil).unwrap(),
            LaurentPoly::from_coeffs(0, &[1, -1, 1])
        );
        assert_eq!(
            alexander_from_burau(&artin(1, &[])).unwrap(),
            LaurentPoly::one()
        );
        let fig8 = artin(3, &[(1, 1), (2, -1), (1, 1), (2, -1)]);
        assert_eq!(
            alexander_from_burau(&fig8).unwrap(),
            LaurentPoly::from_coeffs(0, &[1, -3, 1])
        );
        // Hopf link and the (2,4) torus link
        let hopf = artin(2, &[(1, 1), (1, 1)]);
        assert_eq!(
            alexander_from_burau(&hopf).unwrap(),
            LaurentPoly::from_coeffs(0, &[1, -1])
        );
        let t24 = artin(2, &[(1, 1); 4]);
        assert_eq!(
            alexander_from_burau(&t24).unwrap(),
            LaurentPoly::from_coeffs(0, &[1, -1, 1, -1])
        );
        // split unlink
        assert!(alexander_from_burau(&artin(2, &[])).unwrap().is_zero());
    }
}
