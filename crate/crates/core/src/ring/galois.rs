//! Arithmetic in `GF(p^k) = (Z/p)[x] / (f)`.
//!
//! Elements are coefficient tuples `(c_0, .., c_{k-1})` encoded in base `p`,
//! so the canonical index of `c_0 + c_1 x + ..` is `c_0 + c_1 p + ..`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct GaloisArith {
    pub p: usize,
    pub degree: usize,
    /// Monic modulus, lowest coefficient first; length `degree + 1`.
    pub modulus: Vec<usize>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^k` into `(p, k)`.
pub(crate) fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `m` over `Z/p`.
fn poly_rem(a: &[usize], m: &[usize], p: usize) -> Vec<usize> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let slot = &mut r[shift + i];
            *slot = (*slot + p - (lead * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Exhaustive factor search: no monic polynomial of degree `1..=deg/2` divides `f`.
pub(crate) fn is_irreducible(p: usize, f: &[usize]) -> bool {
    let deg = f.len() - 1;
    if deg == 0 || f[deg] != 1 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = code;
            for _ in 0..d {
                g.push(rest % p);
                rest /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible polynomial of degree `k`
/// over `Z/p`, comparing coefficients from the highest degree down.
pub(crate) fn smallest_irreducible(p: usize, k: usize) -> Vec<usize> {
    let count = p.pow(k as u32);
    for code in 0..count {
        // most significant digit of `code` is c_{k-1}
        let mut f = vec![0; k + 1];
        let mut rest = code;
        for i in 0..k {
            f[i] = rest % p;
            rest /= p;
        }
        f[k] = 1;
        if is_irreducible(p, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl GaloisArith {
    pub fn new(p: u64, modulus: Vec<usize>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let p = p as usize;
        if modulus.len() < 2 || modulus.iter().any(|&c| c >= p) || !is_irreducible(p, &modulus) {
            return Err(Error::ReduciblePolynomial(modulus));
        }
        Ok(GaloisArith { p, degree: modulus.len() - 1, modulus })
    }

    pub fn card(&self) -> usize {
        self.p.pow(self.degree as u32)
    }

    pub fn digits(&self, mut a: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree);
        for _ in 0..self.degree {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let d: Vec<usize> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0; 2 * self.degree];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.degree, 0);
        self.from_digits(&r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_irreducibles() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(2, 3), vec![1, 1, 0, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(smallest_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn reducible_rejected() {
        // x^2 + 1 = (x + 1)^2 over Z/2
        assert!(!is_irreducible(2, &[1, 0, 1]));
        assert!(GaloisArith::new(2, vec![1, 0, 1]).is_err());
        assert!(matches!(GaloisArith::new(4, vec![1, 1, 1]), Err(Error::NotPrime(4))));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn gf4_multiplication() {
        let gf = GaloisArith::new(2, vec![1, 1, 1]).unwrap();
        // x * x = x + 1
        assert_eq!(gf.mul(2, 2), 3);
        assert_eq!(gf.mul(3, 2), 1);
    }
}
