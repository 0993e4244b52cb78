//! Small integer helpers shared by the modular computations.

use crate::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Least nonnegative residue of `a` modulo `p`.
pub fn modp(a: i128, p: u64) -> u64 {
    a.rem_euclid(p as i128) as u64
}

/// Inverse of `a` modulo `p`, in `[0, p)`.
pub fn inv_mod(a: i128, p: u64) -> Result<u64> {
    let p_i = p as i128;
    let (mut r0, mut r1) = (a.rem_euclid(p_i), p_i);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return Err(Error::NotCoprime(a as i64, p as i64));
    }
    Ok(modp(s0, p))
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Exact integer square root, or `None` when `n` is not a perfect square.
pub fn exact_sqrt(n: u128) -> Option<u128> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(2, 7).unwrap(), 4);
        assert_eq!(inv_mod(3, 19).unwrap(), 13);
        assert_eq!(inv_mod(-3, 19).unwrap(), 6);
        assert!(inv_mod(6, 9).is_err());
    }

    #[test]
    fn sqrt_and_divisors() {
        assert_eq!(exact_sqrt(144), Some(12));
        assert_eq!(exact_sqrt(145), None);
        assert_eq!(isqrt(u64::MAX as u128), 4294967295);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }
}
