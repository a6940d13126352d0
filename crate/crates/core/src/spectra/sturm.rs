//! Real root approximation by square-free decomposition, Sturm sequences
//! and bisection, all in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::IntPoly;

type QPoly = Vec<BigRational>; // lowest degree first, no trailing zeros

fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn deg(p: &QPoly) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &QPoly) -> QPoly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(k.into())).collect())
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let len = a.len().max(b.len());
    let zero = BigRational::zero();
    trim((0..len).map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero)).collect())
}

fn div_rem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = deg(b);
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let q = &rem[k + db] / &lead;
        if q.is_zero() {
            continue;
        }
        for (i, c) in b.iter().enumerate() {
            rem[k + i] -= &q * c;
        }
        quot[k] = q;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

fn monic(p: QPoly) -> QPoly {
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

fn eval(p: &QPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Yun's square-free factorisation: `(factor, multiplicity)` pairs with
/// square-free, pairwise coprime, non-constant factors.
fn square_free(p: &QPoly) -> Vec<(QPoly, usize)> {
    let mut out = Vec::new();
    let dp = derivative(p);
    let a0 = gcd(p, &dp);
    let mut b = div_rem(p, &a0).0;
    let c = div_rem(&dp, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1;
    while deg(&b) > 0 {
        let a = gcd(&b, &d);
        if deg(&a) > 0 {
            out.push((a.clone(), i));
        }
        let nb = div_rem(&b, &a).0;
        let nc = div_rem(&d, &a).0;
        d = sub(&nc, &derivative(&nb));
        b = nb;
        i += 1;
    }
    out
}

struct Sturm {
    chain: Vec<QPoly>,
}

impl Sturm {
    fn new(p: &QPoly) -> Self {
        let mut chain = vec![p.clone(), derivative(p)];
        while !chain.last().unwrap().is_empty() && deg(chain.last().unwrap()) > 0 {
            let n = chain.len();
            let (_, r) = div_rem(&chain[n - 2], &chain[n - 1]);
            chain.push(r.into_iter().map(|c| -c).collect());
        }
        chain.retain(|q| !q.is_empty());
        Sturm { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs = self.chain.iter().map(|q| eval(q, x)).filter(|v| !v.is_zero()).map(|v| v.is_positive());
        count_changes(signs)
    }

    /// Distinct roots in `(a, b]`, for `a`, `b` not roots.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

fn count_changes(signs: impl Iterator<Item = bool>) -> usize {
    let mut prev: Option<bool> = None;
    let mut changes = 0;
    for s in signs {
        if prev.is_some_and(|p| p != s) {
            changes += 1;
        }
        prev = Some(s);
    }
    changes
}

fn half(x: &BigRational) -> BigRational {
    x / BigRational::from_integer(BigInt::from(2))
}

/// Isolates and refines the real roots of a square-free polynomial.
fn real_roots(p: &QPoly, tol: &BigRational) -> Vec<BigRational> {
    let sturm = Sturm::new(p);
    let lead = p.last().unwrap().abs();
    let bound = BigRational::one() + p.iter().map(|c| c.abs() / &lead).max().unwrap();
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 && &b - &a < *tol {
            roots.push(half(&(&a + &b)));
            continue;
        }
        let mid = half(&(&a + &b));
        if eval(p, &mid).is_zero() {
            // exact rational root: split around it with an isolating gap
            let mut eps = half(&(&b - &a));
            loop {
                eps = half(&eps);
                let lo = &mid - &eps;
                let hi = &mid + &eps;
                if !eval(p, &lo).is_zero() && !eval(p, &hi).is_zero() && sturm.count(&lo, &hi) == 1 {
                    roots.push(mid.clone());
                    stack.push((a.clone(), lo));
                    stack.push((hi, b.clone()));
                    break;
                }
            }
            continue;
        }
        if n == 1 {
            // sign-change bisection is enough once the root is isolated
            let left = eval(p, &a).is_positive() != eval(p, &mid).is_positive();
            if left {
                stack.push((a, mid));
            } else {
                stack.push((mid, b));
            }
            continue;
        }
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    roots
}

/// Approximations of all real roots of `p`, with multiplicity, sorted
/// ascending. Each value is within `tol` of a true root. Exact arithmetic
/// is used up to the final conversion to `f64`.
///
/// # Panics
///
/// Panics if `tol` is not a positive finite number.
pub fn numeric_spectrum(p: &IntPoly, tol: f64) -> Vec<f64> {
    assert!(tol.is_finite() && tol > 0.0, "tolerance must be positive");
    let tol = BigRational::from_float(tol).expect("finite tolerance");
    let q: QPoly = p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
    if deg(&q) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (factor, mult) in square_free(&q) {
        for r in real_roots(&factor, &tol) {
            let v = r.to_f64().unwrap_or(f64::NAN);
            out.extend(std::iter::repeat_n(v, mult));
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}
