//! The two resultant determinants used by the discriminant systems.
//!
//! Both are evaluated literally as the printed matrices (degenerate leading
//! coefficients included), via fraction-free Bareiss elimination with row
//! pivoting. On integer input every intermediate value stays an integer.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::{rat, Rat};

/// Exact determinant of a square matrix (row-major), destroying `m`.
fn det(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign_flip = false;
    let mut prev = Rat::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = Rat::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

fn quartic_coeffs(f: &Poly) -> [Rat; 5] {
    debug_assert!(f.degree().unwrap_or(0) <= 4);
    [f.coeff(4), f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0)]
}

/// Resultant of a quadratic `g = alpha t^2 + beta t + gamma` and a quartic
/// `F = A t^4 + ... + E`, as the 6x6 determinant
///
/// ```text
/// | A  B  C  D  E  0 |
/// | 0  A  B  C  D  E |
/// | a  b  g  0  0  0 |
/// | 0  a  b  g  0  0 |
/// | 0  0  a  b  g  0 |
/// | 0  0  0  a  b  g |
/// ```
///
/// The matrix is evaluated as printed even when leading coefficients vanish.
pub fn resultant_quartic_quadratic(f: &Poly, g: &Poly) -> Rat {
    debug_assert!(g.degree().unwrap_or(0) <= 2);
    let [fa, fb, fc, fd, fe] = quartic_coeffs(f);
    let (ga, gb, gc) = (g.coeff(2), g.coeff(1), g.coeff(0));
    let z = Rat::zero;
    let rows = vec![
        vec![
            fa.clone(),
            fb.clone(),
            fc.clone(),
            fd.clone(),
            fe.clone(),
            z(),
        ],
        vec![z(), fa, fb, fc, fd, fe],
        vec![ga.clone(), gb.clone(), gc.clone(), z(), z(), z()],
        vec![z(), ga.clone(), gb.clone(), gc.clone(), z(), z()],
        vec![z(), z(), ga.clone(), gb.clone(), gc.clone(), z()],
        vec![z(), z(), z(), ga, gb, gc],
    ];
    det(rows)
}

/// `K = resultant(F, F') / A` for a quartic `F`, as the printed 7x7
/// determinant with first column `(1, 0, 0, 4, 0, 0, 0)`. Meaningful (and
/// used) even when `A = 0`.
pub fn det_k(f: &Poly) -> Rat {
    let [fa, fb, fc, fd, fe] = quartic_coeffs(f);
    let z = Rat::zero;
    let four = || rat(4);
    let three_b = rat(3) * &fb;
    let two_c = rat(2) * &fc;
    let four_a = rat(4) * &fa;
    let rows = vec![
        vec![
            Rat::one(),
            fb.clone(),
            fc.clone(),
            fd.clone(),
            fe.clone(),
            z(),
            z(),
        ],
        vec![
            z(),
            fa.clone(),
            fb.clone(),
            fc.clone(),
            fd.clone(),
            fe.clone(),
            z(),
        ],
        vec![z(), z(), fa, fb, fc, fd.clone(), fe],
        vec![
            four(),
            three_b.clone(),
            two_c.clone(),
            fd.clone(),
            z(),
            z(),
            z(),
        ],
        vec![
            z(),
            four_a.clone(),
            three_b.clone(),
            two_c.clone(),
            fd.clone(),
            z(),
            z(),
        ],
        vec![
            z(),
            z(),
            four_a.clone(),
            three_b.clone(),
            two_c.clone(),
            fd.clone(),
            z(),
        ],
        vec![z(), z(), z(), four_a, three_b, two_c, fd],
    ];
    det(rows)
}
