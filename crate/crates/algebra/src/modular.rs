//! Arithmetic in a fixed prime field F_p with p ≡ 1 (mod 4).
//!
//! The prime is chosen so that −1 has a square root, which lets Gaussian
//! rationals map homomorphically into F_p (i ↦ `SQRT_NEG_ONE`). The gcd
//! layer uses these images only to *prove* that a gcd has degree zero in a
//! variable; an image can overestimate a gcd degree but never underestimate
//! it, so no answer ever depends on a lucky choice.

pub const PRIME: u64 = 4_611_686_018_427_387_817;
pub const SQRT_NEG_ONE: u64 = 120_863_620_846_201_794;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse by Fermat; `a` must be nonzero mod `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Dense univariate polynomial over F_p, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<u64>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant(c: u64) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![1] }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn eval(&self, x: u64, p: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
    }

    pub fn monic(&self, p: u64) -> UniPoly {
        if self.is_zero() || self.lc() == 1 {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), p);
        UniPoly { coeffs: self.coeffs.iter().map(|&c| mul_mod(c, inv, p)).collect() }
    }

    pub fn mul(&self, other: &UniPoly, p: u64) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder; `other` must be nonzero.
    pub fn div_rem(&self, other: &UniPoly, p: u64) -> (UniPoly, UniPoly) {
        let db = other.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return (UniPoly::new(Vec::new()), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - db];
        let inv_lc = inv_mod(other.lc(), p);
        while r.len() > db {
            let top = *r.last().unwrap();
            let shift = r.len() - 1 - db;
            if top != 0 {
                let f = mul_mod(top, inv_lc, p);
                q[shift] = f;
                for (i, &c) in other.coeffs.iter().enumerate() {
                    r[shift + i] = sub_mod(r[shift + i], mul_mod(f, c, p), p);
                }
            }
            r.pop();
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    fn rem(&self, other: &UniPoly, p: u64) -> UniPoly {
        self.div_rem(other, p).1
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly, p: u64) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes p ≡ 1 (mod 4) below 2^62, largest first (so `PRIME` comes first),
/// each with a square root of −1.
pub fn gaussian_primes(count: usize) -> Vec<(u64, u64)> {
    let mut out = Vec::with_capacity(count);
    let mut n = (1u64 << 62) - 3;
    while out.len() < count {
        if is_prime(n) {
            let mut c = 2;
            // c^((p-1)/2) = -1 for a non-residue c
            while pow_mod(c, (n - 1) / 2, n) != n - 1 {
                c += 1;
            }
            let mut s = pow_mod(c, (n - 1) / 4, n);
            if s > n - s {
                s = n - s;
            }
            out.push((n, s));
        }
        n -= 4;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_neg_one_is_correct() {
        assert_eq!(PRIME % 4, 1);
        assert_eq!(add_mod(mul_mod(SQRT_NEG_ONE, SQRT_NEG_ONE, PRIME), 1, PRIME), 0);
        // Fermat witness check, a cheap sanity test on primality
        for a in [2u64, 3, 5, 7, 11] {
            assert_eq!(pow_mod(a, PRIME - 1, PRIME), 1);
        }
    }

    #[test]
    fn univariate_gcd() {
        let p = 101;
        // (x-1)(x-2) and (x-1)(x+3)
        let a = UniPoly::new(vec![2, p - 3, 1]);
        let b = UniPoly::new(vec![p - 3, 2, 1]);
        assert_eq!(a.gcd(&b, p).degree(), Some(1));
        let c = UniPoly::new(vec![5, 1]);
        assert_eq!(a.gcd(&c, p).degree(), Some(0));
        let (q, r) = a.div_rem(&UniPoly::new(vec![p - 1, 1]), p);
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::new(vec![p - 2, 1]));
    }

    #[test]
    fn prime_table_starts_at_the_default_prime() {
        let ps = gaussian_primes(3);
        assert_eq!(ps[0].0, PRIME);
        for (p, s) in ps {
            assert_eq!(p % 4, 1);
            assert_eq!(add_mod(mul_mod(s, s, p), 1, p), 0);
        }
    }
}
