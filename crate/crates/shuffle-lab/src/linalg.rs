//! Small exact dense linear algebra over any field-like scalar.
//!
//! Sizes here are the number of partitions of the working degree, so plain
//! Gaussian elimination is entirely adequate.

use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Solve `A x = b` by Gaussian elimination. Returns `None` for a singular
/// matrix. `a` is row-major and consumed.
pub fn solve<T: Scalar>(mut a: Vec<Vec<T>>, mut b: Vec<T>) -> Option<Vec<T>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = T::one() / a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * inv.clone();
            for c in col..n {
                let d = f.clone() * a[col][c].clone();
                a[r][c] = a[r][c].clone() - d;
            }
            let d = f * b[col].clone();
            b[r] = b[r].clone() - d;
        }
    }
    Some(
        (0..n)
            .map(|i| b[i].clone() / a[i][i].clone())
            .collect(),
    )
}

/// Invert a square matrix; `None` if singular.
pub fn invert<T: Scalar>(a: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = a.len();
    let mut work: Vec<Vec<T>> = a.to_vec();
    let mut inv: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let piv_inv = T::one() / work[col][col].clone();
        for c in 0..n {
            work[col][c] = work[col][c].clone() * piv_inv.clone();
            inv[col][c] = inv[col][c].clone() * piv_inv.clone();
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for c in 0..n {
                let dw = f.clone() * work[col][c].clone();
                work[r][c] = work[r][c].clone() - dw;
                let di = f.clone() * inv[col][c].clone();
                inv[r][c] = inv[r][c].clone() - di;
            }
        }
    }
    Some(inv)
}

/// `A v` for row-major `A`.
pub fn mat_vec<T: Scalar>(a: &[Vec<T>], v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(m, x)| !m.is_zero() && !x.is_zero())
                .fold(T::zero(), |acc, (m, x)| acc + m.clone() * x.clone())
        })
        .collect()
}
