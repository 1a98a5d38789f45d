//! Exact determinants of polynomial matrices.
//!
//! Small matrices (n <= 5) go through cofactor expansion; larger ones use
//! fraction-free Bareiss elimination with exact polynomial division, so no
//! rational-function intermediates ever appear.

use crate::poly::MultiPoly;

/// Exact determinant. The empty 0x0 matrix has determinant 1, which makes
/// the Delta_{-1} = 1 convention of the Hankel formulas hold.
pub fn det_exact(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return MultiPoly::one();
    }
    if n <= 5 {
        det_cofactor(matrix)
    } else {
        det_bareiss(matrix)
    }
}

/// Cofactor expansion along the first row.
pub fn det_cofactor(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = matrix.len();
    if n == 0 {
        return MultiPoly::one();
    }
    if n == 1 {
        return matrix[0][0].clone();
    }
    let mut acc = MultiPoly::zero();
    for j in 0..n {
        if matrix[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][j] * &det_cofactor(&minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

fn det_bareiss(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = matrix.len();
    let mut m: Vec<Vec<MultiPoly>> = matrix.to_vec();
    let mut prev_pivot = MultiPoly::one();
    let mut sign_flip = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                // Sylvester's identity guarantees exact divisibility; if a
                // degenerate pivot pattern breaks it, fall back to cofactors.
                match num.div_exact(&prev_pivot) {
                    Ok(q) => m[i][j] = q,
                    Err(_) => {
                        let d = det_cofactor(matrix);
                        return d;
                    }
                }
            }
            m[i][k] = MultiPoly::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -&d
    } else {
        d
    }
}
