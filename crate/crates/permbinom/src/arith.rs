//! Exact integer helpers: trial-division primality and factorization,
//! gcds, modular inverses, checked powers and certified square roots.
//!
//! All callers keep their inputs below 2^40 (field orders) or within
//! 128 bits (bound arithmetic), so trial division is always affordable.
//! There is no floating point anywhere in this crate.

use alloc::vec::Vec;

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: `(g, x, y)` with `a*x + b*y = g`.
pub fn egcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    (r0, x0, y0)
}

/// Inverse of `a` modulo `m` when `gcd(a, m) = 1`. Moduli here stay below
/// 2^63 so the extended gcd runs in `i128` without overflow.
pub fn mod_inverse_u128(a: u128, m: u128) -> Option<u128> {
    debug_assert!(m > 0 && m < 1 << 63);
    let (g, x, _) = egcd_i128((a % m) as i128, m as i128);
    if g != 1 && g != -1 {
        return None;
    }
    let x = if g < 0 { -x } else { x };
    Some(x.rem_euclid(m as i128) as u128)
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

pub fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality by trial division; fine for n ≤ 2^40.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization, smallest factor first.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut k = 0u32;
        while *n % p == 0 {
            *n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
    };
    push(2, &mut n);
    let mut d = 3u64;
    while d * d <= n {
        push(d, &mut n);
        d += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Writes `q = p^m` with `p` prime, when possible.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize_u64(q);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn checked_pow_u128(base: u128, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    let mut base = base;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.checked_mul(base)?;
        }
        exp >>= 1;
        if exp > 0 {
            base = base.checked_mul(base)?;
        }
    }
    Some(acc)
}

/// Smallest integer `s` with `s*s >= n`, certified by squaring.
pub fn ceil_sqrt_u128(n: u128) -> u128 {
    let s = n.isqrt();
    if s * s == n {
        s
    } else {
        s + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_egcd() {
        assert_eq!(gcd_u64(12, 18), 6);
        assert_eq!(gcd_u64(7, 0), 7);
        let (g, x, y) = egcd_i128(240, 46);
        assert_eq!(g, 2);
        assert_eq!(240 * x + 46 * y, 2);
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(mod_inverse_u128(3, 7), Some(5));
        assert_eq!(mod_inverse_u128(4, 8), None);
        for a in 1..97u128 {
            let inv = mod_inverse_u128(a, 97).unwrap();
            assert_eq!(a * inv % 97, 1);
        }
    }

    #[test]
    fn primality_and_factorization() {
        assert!(is_prime_u64(2) && is_prime_u64(13) && is_prime_u64(1_000_003));
        assert!(!is_prime_u64(1) && !is_prime_u64(91));
        assert_eq!(factorize_u64(511), alloc::vec![(7, 1), (73, 1)]);
        assert_eq!(factorize_u64(728), alloc::vec![(2, 3), (7, 1), (13, 1)]);
        assert_eq!(prime_power(729), Some((3, 6)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn powers_and_roots() {
        assert_eq!(checked_pow_u128(7, 8), Some(5_764_801));
        assert_eq!(checked_pow_u128(2, 127), Some(1 << 127));
        assert_eq!(checked_pow_u128(2, 128), None);
        assert_eq!(ceil_sqrt_u128(49), 7);
        assert_eq!(ceil_sqrt_u128(50), 8);
        assert_eq!(ceil_sqrt_u128(0), 0);
        assert_eq!(pow_mod_u64(3, 100, 101), 1);
    }
}
