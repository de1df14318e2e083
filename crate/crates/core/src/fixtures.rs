//! Generator sets built from Weyl group representatives of simple Lie
//! algebras of types G2, A3 and B2.

use crate::field::{Rationals, QQ};
use crate::linalg::Matrix;

pub const NAMES: [&str; 3] = ["g2", "a3", "b2"];

fn mat(rows: &[&[i64]]) -> Matrix<Rationals> {
    Matrix::from_ints(QQ, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Two 7x7 matrices; the closure is connected of type G2.
pub fn g2() -> Vec<Matrix<Rationals>> {
    vec![
        mat(&[
            &[0, 0, 0, 0, -1, 0, -3],
            &[0, 0, 0, 0, 0, 0, -1],
            &[0, -1, 0, 6, -18, -9, 27],
            &[0, 0, 0, 1, -3, -3, 9],
            &[0, 0, 0, 0, 0, -1, 3],
            &[1, -3, 3, -18, 27, 0, 0],
            &[0, 0, 1, -6, 9, 0, 0],
        ]),
        mat(&[
            &[0, 0, 0, 0, 0, 0, -1],
            &[0, 0, 0, 0, -3, 10, 0],
            &[0, 0, 0, 0, 1, -3, 0],
            &[0, 0, 0, -1, 0, 0, 0],
            &[0, 3, 10, 0, 0, 0, 0],
            &[0, 1, 3, 0, 0, 0, 0],
            &[-1, 0, 0, 0, 0, 0, 0],
        ]),
    ]
}

/// Three 6x6 matrices; the closure is connected of type A3.
pub fn a3() -> Vec<Matrix<Rationals>> {
    vec![
        mat(&[
            &[0, 0, 0, 0, 0, -1],
            &[0, 0, -1, 0, 3, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, -1, 3, 3, -9, 0],
            &[0, 0, 0, 1, -3, 0],
            &[-1, 0, 0, 0, 0, 0],
        ]),
        mat(&[
            &[0, -3, 1, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0],
            &[1, -3, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 3, -1, 3],
            &[0, 0, 0, 1, 0, 0],
        ]),
        mat(&[
            &[0, 0, 0, -1, 0, 0],
            &[-1, -3, 0, -9, 0, 0],
            &[0, 0, 0, 0, -1, -3],
            &[0, 1, 0, 3, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, -1, 0, -3, 0],
        ]),
    ]
}

/// Two 8x8 matrices acting on two copies of the 4-dimensional B2 module,
/// the second composed with the swap of the copies; two components.
pub fn b2() -> Vec<Matrix<Rationals>> {
    vec![
        mat(&[
            &[0, 0, -1, 0, 0, 0, 0, 0],
            &[-1, 0, 0, -3, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 0],
            &[0, -1, -3, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, -1, 0],
            &[0, 0, 0, 0, -1, 0, 0, -3],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, -1, -3, 0],
        ]),
        mat(&[
            &[0, 0, 0, 0, -3, 9, -1, 3],
            &[0, 0, 0, 0, -1, 3, 0, 0],
            &[0, 0, 0, 0, 0, -3, 0, 1],
            &[0, 0, 0, 0, 0, -1, 0, 0],
            &[-3, 9, -1, 3, 0, 0, 0, 0],
            &[-1, 3, 0, 0, 0, 0, 0, 0],
            &[0, -3, 0, 1, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0, 0, 0],
        ]),
    ]
}

pub fn by_name(name: &str) -> Option<Vec<Matrix<Rationals>>> {
    match name.to_ascii_lowercase().as_str() {
        "g2" => Some(g2()),
        "a3" => Some(a3()),
        "b2" => Some(b2()),
        _ => None,
    }
}
