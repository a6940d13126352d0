use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::AlgebraError;

/// A commutative ring with exact, possibly fallible, arithmetic.
///
/// Fixed-width integer rings report overflow as [`AlgebraError::Overflow`]
/// instead of wrapping; cyclotomic elements additionally report a modulus
/// mismatch.
pub trait Ring: Clone + PartialEq + Debug {
    /// Data needed to create constants (the cyclotomic modulus, or `()`).
    type Ctx: Clone;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError>;
    fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError>;
    fn try_neg(&self) -> Result<Self, AlgebraError>;
    fn is_zero(&self) -> bool;
}

macro_rules! fixed_width_ring {
    ($t:ty) => {
        impl Ring for $t {
            type Ctx = ();
            fn zero(_: &()) -> Self {
                0
            }
            fn one(_: &()) -> Self {
                1
            }
            fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
                self.checked_add(*rhs).ok_or(AlgebraError::Overflow)
            }
            fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
                self.checked_mul(*rhs).ok_or(AlgebraError::Overflow)
            }
            fn try_neg(&self) -> Result<Self, AlgebraError> {
                self.checked_neg().ok_or(AlgebraError::Overflow)
            }
            fn is_zero(&self) -> bool {
                *self == 0
            }
        }
    };
}

fixed_width_ring!(i64);
fixed_width_ring!(i128);

impl Ring for BigInt {
    type Ctx = ();
    fn zero(_: &()) -> Self {
        Zero::zero()
    }
    fn one(_: &()) -> Self {
        One::one()
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self + rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self * rhs)
    }
    fn try_neg(&self) -> Result<Self, AlgebraError> {
        Ok(-self)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// `det(tI - M)` by the Samuelson–Berkowitz recurrence, using only ring
/// additions and multiplications.
///
/// Coefficients are returned highest degree first, so the result always
/// starts with `1` and has `n + 1` entries. Works over rings with zero
/// divisors.
pub fn berkowitz_charpoly<R: Ring>(m: &[Vec<R>], ctx: &R::Ctx) -> Result<Vec<R>, AlgebraError> {
    let n = m.len();
    for (row, r) in m.iter().enumerate() {
        if r.len() != n {
            return Err(AlgebraError::NonSquare { row, len: r.len(), expected: n });
        }
    }

    // Characteristic polynomial of the leading k x k block, highest first.
    let mut poly = vec![R::one(ctx)];
    for k in 0..n {
        // Block layout: [[M_k, c], [r, a]] with M_k the leading k x k part.
        let a = &m[k][k];
        let row: Vec<&R> = (0..k).map(|j| &m[k][j]).collect();

        // Toeplitz column: 1, -a, -r c, -r M_k c, ..., -r M_k^{k-1} c
        let mut column = Vec::with_capacity(k + 2);
        column.push(R::one(ctx));
        column.push(a.try_neg()?);
        let mut v: Vec<R> = (0..k).map(|i| m[i][k].clone()).collect();
        for step in 0..k {
            column.push(dot(&row, &v, ctx)?.try_neg()?);
            if step + 1 < k {
                v = mat_vec(m, k, &v, ctx)?;
            }
        }

        // poly_{k+1} = T * poly_k, T lower-triangular Toeplitz of size (k+2) x (k+1)
        let mut next = Vec::with_capacity(k + 2);
        for i in 0..(k + 2) {
            let mut acc = R::zero(ctx);
            for (j, p) in poly.iter().enumerate().take(i + 1) {
                let term = column[i - j].try_mul(p)?;
                acc = acc.try_add(&term)?;
            }
            next.push(acc);
        }
        poly = next;
    }
    Ok(poly)
}

fn dot<R: Ring>(row: &[&R], v: &[R], ctx: &R::Ctx) -> Result<R, AlgebraError> {
    let mut acc = R::zero(ctx);
    for (x, y) in row.iter().zip(v) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = acc.try_add(&x.try_mul(y)?)?;
    }
    Ok(acc)
}

/// Leading `k x k` block of `m` times `v`.
fn mat_vec<R: Ring>(m: &[Vec<R>], k: usize, v: &[R], ctx: &R::Ctx) -> Result<Vec<R>, AlgebraError> {
    (0..k)
        .map(|i| {
            let mut acc = R::zero(ctx);
            for (x, y) in m[i][..k].iter().zip(v) {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                acc = acc.try_add(&x.try_mul(y)?)?;
            }
            Ok(acc)
        })
        .collect()
}
