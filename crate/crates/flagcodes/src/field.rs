//! Exact arithmetic in the finite field F_q for prime powers q.
//!
//! Elements are encoded as integers in `[0, q)`. For a prime field the
//! encoding is the residue itself; for q = p^m with m > 1 it is the base-p
//! evaluation of the coefficient tuple in the polynomial basis, least
//! significant coefficient first. The reduction modulus is chosen
//! deterministically (the irreducible monic polynomial of degree m whose
//! coefficient tuple, read as a base-p integer, is smallest), so encodings
//! are portable across runs and implementations.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug)]
struct Inner {
    q: u32,
    p: u32,
    m: u32,
    /// Coefficients of the monic modulus, low degree first, including the
    /// leading 1. Empty for prime fields.
    modulus: Vec<u32>,
}

/// Arithmetic context for F_q, immutable and cheap to clone.
#[derive(Debug, Clone)]
pub struct FieldContext(Arc<Inner>);

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        // The modulus is a deterministic function of q.
        self.0.q == other.0.q
    }
}

impl Eq for FieldContext {}

impl fmt::Display for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "F_{}", self.0.q)
        } else {
            write!(
                f,
                "F_{} = F_{}[x]/({})",
                self.0.q,
                self.0.p,
                poly_to_string(&self.0.modulus)
            )
        }
    }
}

impl FieldContext {
    /// Builds the field with `q` elements.
    ///
    /// Fails with [`Error::NotAPrimePower`] when q is not a prime power and
    /// with [`Error::FieldTooLarge`] beyond 2^16.
    pub fn new(q: u64) -> Result<FieldContext> {
        if q < 2 {
            return Err(Error::NotAPrimePower(q));
        }
        if q > MAX_FIELD_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let p = smallest_prime_factor(q);
        let mut m = 0u32;
        let mut power = 1u64;
        while power < q {
            power *= p;
            m += 1;
        }
        if power != q {
            return Err(Error::NotAPrimePower(q));
        }
        let modulus = if m == 1 {
            Vec::new()
        } else {
            find_irreducible(p as u32, m)
        };
        Ok(FieldContext(Arc::new(Inner {
            q: q as u32,
            p: p as u32,
            m,
            modulus,
        })))
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.m
    }

    /// Modulus coefficients, low degree first, leading 1 included.
    /// Empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.0.q
    }

    /// Iterates over all element encodings, 0 first.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }

    fn check(&self, a: u32) -> Result<()> {
        if a < self.0.q {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                value: a,
                q: self.0.q,
            })
        }
    }

    pub fn add(&self, a: u32, b: u32) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn sub(&self, a: u32, b: u32) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_raw(a, self.neg_raw(b)))
    }

    pub fn mul(&self, a: u32, b: u32) -> Result<u32> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    pub fn neg(&self, a: u32) -> Result<u32> {
        self.check(a)?;
        Ok(self.neg_raw(a))
    }

    /// Multiplicative inverse; fails on 0.
    pub fn inv(&self, a: u32) -> Result<u32> {
        self.check(a)?;
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_raw(a, (self.0.q - 2) as u64))
    }

    pub fn pow(&self, a: u32, e: u64) -> Result<u32> {
        self.check(a)?;
        Ok(self.pow_raw(a, e))
    }

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.0.q && b < self.0.q);
        let inner = &*self.0;
        if inner.m == 1 {
            ((a as u64 + b as u64) % inner.p as u64) as u32
        } else if inner.p == 2 {
            a ^ b
        } else {
            let p = inner.p;
            let mut out = 0u32;
            let mut scale = 1u32;
            let (mut x, mut y) = (a, b);
            for _ in 0..inner.m {
                let digit = (x % p + y % p) % p;
                out += digit * scale;
                scale *= p;
                x /= p;
                y /= p;
            }
            out
        }
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        debug_assert!(a < self.0.q);
        let inner = &*self.0;
        if inner.m == 1 {
            (inner.p - a) % inner.p
        } else if inner.p == 2 {
            a
        } else {
            let p = inner.p;
            let mut out = 0u32;
            let mut scale = 1u32;
            let mut x = a;
            for _ in 0..inner.m {
                let digit = (p - x % p) % p;
                out += digit * scale;
                scale *= p;
                x /= p;
            }
            out
        }
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.0.q && b < self.0.q);
        let inner = &*self.0;
        if inner.m == 1 {
            ((a as u64 * b as u64) % inner.p as u64) as u32
        } else {
            let p = inner.p as u64;
            let m = inner.m as usize;
            let va = digits(a, inner.p, m);
            let vb = digits(b, inner.p, m);
            // Schoolbook convolution followed by reduction modulo the
            // monic modulus polynomial.
            let mut prod = vec![0u64; 2 * m - 1];
            for (i, &ca) in va.iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for (j, &cb) in vb.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ca as u64 * cb as u64) % p;
                }
            }
            for i in (m..2 * m - 1).rev() {
                let c = prod[i];
                if c == 0 {
                    continue;
                }
                prod[i] = 0;
                for (j, &mj) in inner.modulus.iter().take(m).enumerate() {
                    let idx = i - m + j;
                    prod[idx] = (prod[idx] + c * (p - mj as u64)) % p;
                }
            }
            let mut out = 0u32;
            for i in (0..m).rev() {
                out = out * inner.p + prod[i] as u32;
            }
            out
        }
    }

    pub(crate) fn inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.pow_raw(a, (self.0.q - 2) as u64)
    }

    fn pow_raw(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }
}

fn digits(mut a: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0u32; m];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Remainder of `a` divided by the monic polynomial `b` over F_p.
/// Coefficients low degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut rem: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1);
    while rem.len() > db {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - db;
        if lead != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let idx = shift + j;
                let sub = (lead as u64 * bj as u64) % p as u64;
                rem[idx] = ((rem[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        rem.pop();
    }
    rem
}

fn is_zero_poly(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn is_irreducible(candidate: &[u32], p: u32) -> bool {
    let deg = candidate.len() - 1;
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for tail in 0..count {
            let mut divisor = vec![0u32; d + 1];
            let mut t = tail;
            for coeff in divisor.iter_mut().take(d) {
                *coeff = (t % p as u64) as u32;
                t /= p as u64;
            }
            divisor[d] = 1;
            if is_zero_poly(&poly_rem(candidate, &divisor, p)) {
                return false;
            }
        }
    }
    true
}

/// Finds the monic irreducible polynomial of degree m over F_p whose
/// coefficient tuple, read as a base-p integer, is smallest.
fn find_irreducible(p: u32, m: u32) -> Vec<u32> {
    let count = (p as u64).pow(m);
    for tail in 0..count {
        let mut candidate = vec![0u32; m as usize + 1];
        let mut t = tail;
        for coeff in candidate.iter_mut().take(m as usize) {
            *coeff = (t % p as u64) as u32;
            t /= p as u64;
        }
        candidate[m as usize] = 1;
        if is_irreducible(&candidate, p) {
            return candidate;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} exists over F_{p}")
}

fn poly_to_string(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (i, c) {
            (0, _) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{i}"),
            (_, _) => format!("{c}x^{i}"),
        };
        terms.push(term);
    }
    terms.join(" + ")
}
