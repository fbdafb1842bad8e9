//! Dense univariate polynomials over ℚ (coefficients low degree first).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};

use super::rational::{int, Rational};

pub type Poly = Vec<Rational>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &Poly) -> Option<usize> {
    let mut q = p.clone();
    trim(&mut q);
    q.len().checked_sub(1)
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(k).cloned().unwrap_or_else(Rational::zero);
            x + y
        })
        .collect();
    trim(&mut out);
    out
}

pub fn neg(a: &Poly) -> Poly {
    a.iter().map(|c| -c.clone()).collect()
}

pub fn sub(a: &Poly, b: &Poly) -> Poly {
    add(a, &neg(b))
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Euclidean division `a = q·b + r`; panics if `b` is zero.
pub fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut b = b.clone();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Returns `(g, s)` with `g = gcd(a, m)` (monic) and `s·a ≡ g (mod m)`.
pub fn gcd_ext(a: &Poly, m: &Poly) -> (Poly, Poly) {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![Rational::one()]);
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if let Some(lead) = r0.last().cloned() {
        let inv = lead.recip();
        r0 = r0.iter().map(|c| c * &inv).collect();
        s0 = s0.iter().map(|c| c * &inv).collect();
    }
    (r0, s0)
}

fn cache() -> &'static Mutex<HashMap<u64, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, computed as `(xⁿ − 1) / Π_{d | n, d < n} Φ_d`.
pub fn cyclotomic_poly(n: u64) -> Poly {
    assert!(n >= 1);
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p: Poly = vec![Rational::zero(); n as usize + 1];
    p[0] = int(-1);
    p[n as usize] = int(1);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = divrem(&p, &cyclotomic_poly(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    cache().lock().unwrap().insert(n, p.clone());
    p
}

pub fn euler_phi(n: u64) -> u64 {
    let (mut m, mut out, mut p) = (n, n, 2);
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &Poly) -> Vec<i64> {
        p.iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(ints(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_poly(4)), vec![1, 0, 1]);
        assert_eq!(ints(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
        for n in 1..60 {
            assert_eq!(cyclotomic_poly(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn inverse_mod_phi5() {
        let m = cyclotomic_poly(5);
        let a = vec![int(1), int(1)];
        let (g, s) = gcd_ext(&a, &m);
        assert_eq!(g, vec![int(1)]);
        let (_, r) = divrem(&mul(&s, &a), &m);
        assert_eq!(r, vec![int(1)]);
    }
}
