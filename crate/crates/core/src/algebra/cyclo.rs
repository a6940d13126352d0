//! Arithmetic in `Z[x]/(Φ_K(x))`.
//!
//! The class `ω` of `x` is a primitive `K`-th root of unity, so every
//! character value of an abelian group whose exponent divides `K` is a
//! power of `ω`. Elements are kept in the unique reduced form of degree
//! below `φ(K)`, which makes equality a coefficient comparison.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use super::{AlgebraError, IntPoly, Ring};

/// The `k`-th cyclotomic polynomial, obtained by dividing `x^k - 1` by
/// `Φ_d` for every proper divisor `d` of `k`.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn cyclotomic_poly(k: u32) -> IntPoly {
    assert!(k >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, IntPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&k) {
        return p.clone();
    }
    let mut p = IntPoly::x_pow_minus_one(k as usize);
    for d in (1..k).filter(|d| k.is_multiple_of(*d)) {
        let (q, r) = p.div_rem_monic(&cyclotomic_poly(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    cache.lock().unwrap().insert(k, p.clone());
    p
}

/// The ring `Z[x]/(Φ_K)` together with precomputed reductions of `x^m`.
pub struct CycloRing {
    modulus: u32,
    degree: usize,
    phi: IntPoly,
    // x^m reduced mod Φ_K, for m < max(2K, 2·degree)
    powers: Vec<Vec<i128>>,
}

impl CycloRing {
    /// Shared ring for modulus `k`; repeated calls return the same handle.
    ///
    /// # Panics
    ///
    /// Panics if `k == 0`.
    pub fn new(k: u32) -> Arc<CycloRing> {
        static RINGS: OnceLock<Mutex<HashMap<u32, Arc<CycloRing>>>> = OnceLock::new();
        let rings = RINGS.get_or_init(Default::default);
        if let Some(r) = rings.lock().unwrap().get(&k) {
            return Arc::clone(r);
        }
        let ring = Arc::new(CycloRing::build(k));
        rings.lock().unwrap().entry(k).or_insert(ring).clone()
    }

    fn build(k: u32) -> CycloRing {
        let phi = cyclotomic_poly(k);
        let degree = phi.degree().unwrap();
        let low: Vec<i128> = phi.coeffs()[..degree]
            .iter()
            .map(|c| c.to_i128().expect("cyclotomic coefficient fits in i128"))
            .collect();
        let count = (2 * k as usize).max(2 * degree).max(1);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![0i128; degree];
        if degree > 0 {
            cur[0] = 1;
        }
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x and reduce using x^degree = -(low part of Φ)
            let top = cur.last().copied().unwrap_or(0);
            let mut next = vec![0i128; degree];
            for i in (1..degree).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..degree {
                next[i] -= top * low[i];
            }
            cur = next;
        }
        CycloRing { modulus: k, degree, phi, powers }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `φ(K)`, the length of every reduced coefficient vector.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }
}

impl fmt::Debug for CycloRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloRing(K={})", self.modulus)
    }
}

/// Element of `Z[x]/(Φ_K)`.
#[derive(Clone)]
pub struct CycloElem {
    ring: Arc<CycloRing>,
    coeffs: Vec<i128>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.ring.modulus == other.ring.modulus && self.coeffs == other.coeffs
    }
}

impl Eq for CycloElem {}

impl std::hash::Hash for CycloElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.modulus.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycloElem {
    pub fn zero(ring: &Arc<CycloRing>) -> Self {
        CycloElem { ring: Arc::clone(ring), coeffs: vec![0; ring.degree] }
    }

    pub fn integer(ring: &Arc<CycloRing>, m: i128) -> Self {
        // Φ_1 = x - 1 has degree 1, so every ring has a constant slot.
        let mut e = CycloElem::zero(ring);
        e.coeffs[0] = m;
        e
    }

    pub fn one(ring: &Arc<CycloRing>) -> Self {
        CycloElem::integer(ring, 1)
    }

    /// `ω^t`, with `t` taken mod `K`.
    pub fn root_power(ring: &Arc<CycloRing>, t: i64) -> Self {
        let k = ring.modulus as i64;
        let t = t.rem_euclid(k) as usize;
        CycloElem { ring: Arc::clone(ring), coeffs: ring.powers[t].clone() }
    }

    /// Inverse of `ω^t`, namely `ω^(K - t)`.
    pub fn inverse_of_root_power(ring: &Arc<CycloRing>, t: i64) -> Self {
        CycloElem::root_power(ring, ring.modulus as i64 - t.rem_euclid(ring.modulus as i64))
    }

    /// Reduces an integer polynomial in `ω` into the ring.
    pub fn from_poly(ring: &Arc<CycloRing>, p: &IntPoly) -> Result<Self, AlgebraError> {
        let (_, r) = p.div_rem_monic(&ring.phi);
        let mut e = CycloElem::zero(ring);
        for (i, c) in r.coeffs().iter().enumerate() {
            e.coeffs[i] = c.to_i128().ok_or(AlgebraError::Overflow)?;
        }
        Ok(e)
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.ring.modulus
    }

    /// Reduced coefficients, constant term first.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    fn check(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.ring.modulus != rhs.ring.modulus {
            return Err(AlgebraError::ModulusMismatch(self.ring.modulus, rhs.ring.modulus));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(AlgebraError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(CycloElem { ring: Arc::clone(&self.ring), coeffs })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.add(&rhs.neg()?)
    }

    pub fn neg(&self) -> Result<Self, AlgebraError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_neg().ok_or(AlgebraError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(CycloElem { ring: Arc::clone(&self.ring), coeffs })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check(rhs)?;
        let d = self.ring.degree;
        let mut out = vec![0i128; d];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let prod = a.checked_mul(b).ok_or(AlgebraError::Overflow)?;
                let m = i + j;
                if m < d {
                    out[m] = out[m].checked_add(prod).ok_or(AlgebraError::Overflow)?;
                } else {
                    for (slot, &r) in out.iter_mut().zip(&self.ring.powers[m]) {
                        if r != 0 {
                            let term = prod.checked_mul(r).ok_or(AlgebraError::Overflow)?;
                            *slot = slot.checked_add(term).ok_or(AlgebraError::Overflow)?;
                        }
                    }
                }
            }
        }
        Ok(CycloElem { ring: Arc::clone(&self.ring), coeffs: out })
    }

    pub fn pow(&self, mut e: u64) -> Result<Self, AlgebraError> {
        let mut base = self.clone();
        let mut acc = CycloElem::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The integer this element equals, if its reduced form is constant.
    pub fn as_integer(&self) -> Option<i128> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    pub fn equals_integer(&self, m: i128) -> bool {
        self.as_integer() == Some(m)
    }
}

impl fmt::Display for CycloElem {
    /// Polynomial in `w`, e.g. `-1 - w` for `ω²` when `K = 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            match (i, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "w")?,
                (1, _) => write!(f, "{mag}w")?,
                (_, 1) => write!(f, "w^{i}")?,
                _ => write!(f, "{mag}w^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElem[K={}]({self})", self.ring.modulus)
    }
}

impl Ring for CycloElem {
    type Ctx = Arc<CycloRing>;

    fn zero(ctx: &Self::Ctx) -> Self {
        CycloElem::zero(ctx)
    }
    fn one(ctx: &Self::Ctx) -> Self {
        CycloElem::one(ctx)
    }
    fn try_add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.add(rhs)
    }
    fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.mul(rhs)
    }
    fn try_neg(&self) -> Result<Self, AlgebraError> {
        self.neg()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}
