//! Arithmetic modulo a prime: base-p digit expansions and binomial
//! coefficients computed by the digit-product rule, which is zero as soon
//! as any digit of the lower index exceeds the matching digit of the
//! upper one.
//!
//! Inputs are capped at 128 bits by the argument types; nothing here ever
//! rounds.

use alloc::vec::Vec;

use crate::arith::{mul_mod_u64, pow_mod_u64};
use crate::error::{Error, Result};

/// Base-p digit expansion, least-significant digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PDigits {
    pub p: u64,
    pub digits: Vec<u64>,
}

impl PDigits {
    /// Recombines the digits into the expanded integer.
    pub fn value(&self) -> u128 {
        let mut acc: u128 = 0;
        for &d in self.digits.iter().rev() {
            acc = acc * self.p as u128 + d as u128;
        }
        acc
    }
}

/// Expands `n` in base `p`. With `width` the result has exactly that many
/// digits (zero-padded) and `n` must fit; without it the expansion is
/// minimal, with a single zero digit for `n = 0`.
pub fn p_digits(n: u128, p: u64, width: Option<usize>) -> Result<PDigits> {
    assert!(p >= 2, "digit base must be at least 2");
    let mut digits = Vec::new();
    let mut rest = n;
    while rest > 0 {
        digits.push((rest % p as u128) as u64);
        rest /= p as u128;
    }
    if digits.is_empty() {
        digits.push(0);
    }
    if let Some(w) = width {
        if digits.len() > w {
            return Err(Error::DigitOverflow);
        }
        digits.resize(w, 0);
    }
    Ok(PDigits { p, digits })
}

/// `C(a, b) mod p` for a single digit `0 <= a < p`; zero when `b < 0` or
/// `b > a`. Multiplicative form, so every factor is a unit mod p.
pub fn small_binom(a: u64, b: i128, p: u64) -> u64 {
    debug_assert!(a < p);
    if b < 0 || b as u128 > a as u128 {
        return 0;
    }
    let b = (b as u64).min(a - b as u64);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 1..=b {
        num = mul_mod_u64(num, (a - b + i) % p, p);
        den = mul_mod_u64(den, i % p, p);
    }
    mul_mod_u64(num, pow_mod_u64(den, p - 2, p), p)
}

/// `C(n, k) mod p` as the product of digit-wise binomials in base p.
pub fn lucas_binom(n: u128, k: u128, p: u64) -> u64 {
    debug_assert!(crate::arith::is_prime_u64(p));
    if k > n {
        return 0;
    }
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let nd = (n % p as u128) as u64;
        let kd = (k % p as u128) as u64;
        if kd > nd {
            return 0;
        }
        acc = mul_mod_u64(acc, small_binom(nd, kd as i128, p), p);
        n /= p as u128;
        k /= p as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    /// Independent oracle: the exact integer C(n, k), reduced mod p only
    /// at the very end.
    fn binom_oracle_mod(n: u64, k: u64, p: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = BigUint::from(1u32);
        for i in 0..k {
            acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
        }
        (acc % BigUint::from(p)).try_into().unwrap()
    }

    #[test]
    fn digit_expansions() {
        assert_eq!(p_digits(10, 3, None).unwrap().digits, alloc::vec![1, 0, 1]);
        assert_eq!(p_digits(0, 5, None).unwrap().digits, alloc::vec![0]);
        assert_eq!(p_digits(7, 2, Some(4)).unwrap().digits, alloc::vec![1, 1, 1, 0]);
        assert_eq!(p_digits(8, 2, Some(3)), Err(Error::DigitOverflow));
        let d = p_digits(123_456_789, 7, None).unwrap();
        assert_eq!(d.value(), 123_456_789);
        assert!(d.digits.iter().all(|&x| x < 7));
        assert_ne!(*d.digits.last().unwrap(), 0);
    }

    #[test]
    fn small_binomials() {
        assert_eq!(small_binom(2, 2, 3), 1);
        assert_eq!(small_binom(1, 2, 5), 0);
        assert_eq!(small_binom(4, 2, 5), 1); // C(4,2) = 6
        assert_eq!(small_binom(4, -1, 5), 0);
        assert_eq!(small_binom(1, 1, 2), 1);
        for a in 0..13 {
            for b in 0..=a {
                assert_eq!(small_binom(a, b as i128, 13), binom_oracle_mod(a, b, 13));
            }
        }
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_binom(3, 2, 3), 0); // digit 0 < digit 2
        assert_eq!(lucas_binom(5, 2, 3), 1); // C(5,2) = 10
        assert_eq!(lucas_binom(7, 5, 2), 1); // all digits of q-1 are p-1
        assert_eq!(lucas_binom(9, 12, 5), 0); // k > n
        assert_eq!(lucas_binom(0, 0, 7), 1);
    }

    #[test]
    fn lucas_matches_integer_oracle() {
        for p in [2u64, 3, 5, 7] {
            for n in 0..60u64 {
                for k in 0..60u64 {
                    assert_eq!(
                        lucas_binom(n as u128, k as u128, p),
                        binom_oracle_mod(n, k, p),
                        "p={p} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn lucas_edge_rows() {
        // C(n,0) = C(n,n) = 1, and every C(q-1, k) is a unit when q is a
        // power of p (all base-p digits of q-1 equal p-1).
        for p in [2u64, 3, 5, 7, 13] {
            for n in [0u128, 1, 17, 1 << 40, (1 << 97) + 12345] {
                assert_eq!(lucas_binom(n, 0, p), 1);
                assert_eq!(lucas_binom(n, n, p), 1);
            }
            for m in 1..=3u32 {
                let q = p.pow(m) as u128;
                for k in 0..q {
                    assert_ne!(lucas_binom(q - 1, k, p), 0, "p={p} q={q} k={k}");
                }
            }
        }
    }
}
