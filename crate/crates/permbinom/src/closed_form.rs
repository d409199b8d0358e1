//! Closed-form power sums for the binomial `f(x) = x^r (x^{q-1} + a)`.
//!
//! `sum_x f(x)^N` over the field is computed three independent ways:
//!
//! * [`power_sum_direct`] — the literal sum, the slow oracle;
//! * [`power_sum_triple`] — for cubic extensions, by expanding the three
//!   conjugate factors of `(x^{q-1} + a)^N` and collecting the surviving
//!   monomials through a congruence mod `q^2 + q + 1`;
//! * [`power_sum_single`] — for any extension degree, by expanding
//!   `f(x)^N = x^{rN} (x^{q-1} + a)^N` in a single binomial index. The
//!   surviving indices form an arithmetic progression of step
//!   `(q^e - 1)/(q - 1)`, found with one modular inversion instead of a
//!   scan.
//!
//! A nonzero value for any exponent `1 <= N <= q^e - 2` certifies that f
//! is not a permutation. A zero value certifies nothing; the search in
//! [`witness_exponent`] therefore reports "no witness found" rather than
//! ever claiming a permutation.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{gcd_u128, mod_inverse_u128, mul_mod_u64};
use crate::error::{Error, Result};
use crate::ext_field::FieldElem;
use crate::perm_criteria::{Binomial, MAX_BRUTE_ORDER};
use crate::prime_field::lucas_binom;

/// The base-q digits of an exponent N in [1, q^3 - 2].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentDecomp {
    pub n: u64,
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

/// Writes `N = alpha + beta q + gamma q^2` with digits in [0, q-1].
pub fn decompose_exponent(n: u64, q: u64) -> Result<ExponentDecomp> {
    let q3 = q as u128 * q as u128 * q as u128;
    if n == 0 || n as u128 > q3 - 2 {
        return Err(Error::BadParameter("exponent must lie in [1, q^3 - 2]"));
    }
    Ok(ExponentDecomp {
        n,
        alpha: n % q,
        beta: n / q % q,
        gamma: n / (q * q),
    })
}

/// One lattice point of the congruence behind the triple expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub i: u64,
    pub j: u64,
    pub k: u64,
}

/// All `(i, j, k)` in the box `[0,alpha] x [0,beta] x [0,gamma]` whose
/// monomial survives the sum over the field, i.e. the solutions of
///
/// ```text
/// r N + (q-1) i + (q^2-q) j + (1-q^2) k == 0   (mod q^3 - 1)
/// ```
///
/// reduced to `R + q i - (q+1) j + k == 0 (mod q^2+q+1)`. Empty whenever
/// `(q-1)` does not divide `r (alpha+beta+gamma)`. Solutions are listed
/// in `(i, j, k)` order.
///
/// Note that several lattice points may satisfy the congruence even when
/// the value range `M - m` is shorter than the modulus, because distinct
/// points can share one value of the linear form; the sum over all of
/// them is what matters.
pub fn solve_congruence_triple(
    q: u64,
    r: u64,
    alpha: u64,
    beta: u64,
    gamma: u64,
) -> Vec<CongruenceSolution> {
    debug_assert!(alpha < q && beta < q && gamma < q);
    let s = alpha + beta + gamma;
    let qm1 = (q - 1) as u128;
    let rs = r as u128 * s as u128;
    if s == 0 || rs % qm1 != 0 {
        return Vec::new();
    }
    let u = rs / qm1;
    let dd = q as u128 * q as u128 + q as u128 + 1;
    // the congruence multiplied through by q, using q^3 == 1 and
    // q^2 + q == -1 mod q^2+q+1
    let inner = (u + r as u128 * (beta as u128 + gamma as u128 * (q as u128 + 1))) % dd;
    let rr = q as u128 * inner % dd;
    let vmax = q as u128 * alpha as u128 + gamma as u128;
    let mut out = Vec::new();
    for j in 0..=beta {
        let t = ((q as u128 + 1) * j as u128 % dd + dd - rr) % dd;
        let mut v = t;
        // q i + k == t (mod q^2+q+1) with the box bounding q i + k
        while v <= vmax {
            let imin = if v > gamma as u128 {
                (v - gamma as u128).div_ceil(q as u128)
            } else {
                0
            };
            let imax = core::cmp::min(alpha as u128, v / q as u128);
            let mut i = imin;
            while i <= imax {
                out.push(CongruenceSolution {
                    i: i as u64,
                    j,
                    k: (v - q as u128 * i) as u64,
                });
                i += 1;
            }
            v += dd;
        }
    }
    out.sort_unstable_by_key(|s| (s.i, s.j, s.k));
    out
}

/// The literal sum over every field element; the independent oracle for
/// the closed forms.
pub fn power_sum_direct(b: &Binomial, n: u64) -> Result<FieldElem> {
    if b.field_order() > MAX_BRUTE_ORDER {
        return Err(Error::SizeCap("direct power sums cover at most 2^26 elements"));
    }
    if n == 0 {
        return Err(Error::BadParameter("power-sum exponents must be positive"));
    }
    let ctx = b.ctx();
    let mut acc = ctx.zero();
    // f(0)^n = 0 for r >= 1, so zero contributes nothing
    for x in ctx.elements().skip(1) {
        acc = ctx.add(&acc, &ctx.pow_u(&b.eval(&x), n as u128));
    }
    Ok(acc)
}

/// Closed form over a cubic extension, as
/// `-a^N * sum C(alpha,i) C(beta,j) C(gamma,k) a^{-i - qj - q^2 k}` over
/// the congruence solutions; binomials are taken mod p digit-wise.
pub fn power_sum_triple(b: &Binomial, n: u64) -> Result<FieldElem> {
    if b.e() != 3 {
        return Err(Error::BadParameter("the triple expansion needs a cubic extension"));
    }
    let dec = decompose_exponent(n, b.q())?;
    let sols = solve_congruence_triple(b.q(), b.r(), dec.alpha, dec.beta, dec.gamma);
    let ctx = b.ctx();
    if sols.is_empty() {
        return Ok(ctx.zero());
    }
    let p = ctx.p();
    let q = b.q() as u128;
    let mut acc = ctx.zero();
    for s in &sols {
        let c = [
            lucas_binom(dec.alpha as u128, s.i as u128, p),
            lucas_binom(dec.beta as u128, s.j as u128, p),
            lucas_binom(dec.gamma as u128, s.k as u128, p),
        ]
        .into_iter()
        .fold(1, |x, y| mul_mod_u64(x, y, p));
        if c == 0 {
            continue;
        }
        let ex = s.i as u128 + q * s.j as u128 + q * q * s.k as u128;
        let a_pow = b
            .ctx()
            .pow(b.a(), -(ex as i128))
            .expect("a is nonzero by construction");
        acc = ctx.add(&acc, &ctx.mul(&ctx.scalar(c), &a_pow));
    }
    let lead = ctx.pow_u(b.a(), n as u128);
    Ok(ctx.neg(&ctx.mul(&lead, &acc)))
}

/// The binomial indices `n1` of `(x^{q-1} + a)^N` whose monomial survives
/// the sum over the field: the solutions of
/// `r N + (q-1) n1 == 0 (mod q^e - 1)` inside `[0, N]`, an arithmetic
/// progression of step `(q^e - 1)/(q - 1)`.
pub fn single_solution_exponents(b: &Binomial, n: u64) -> Vec<u64> {
    let m = (b.field_order() - 1) as u128;
    let qm1 = (b.q() - 1) as u128;
    let rn = b.r() as u128 * n as u128;
    let g = gcd_u128(qm1, m);
    if rn % g != 0 {
        return Vec::new();
    }
    let step = m / g;
    let inv = mod_inverse_u128(qm1 / g % step, step).expect("reduced multiplier is a unit");
    let first = (step - rn / g % step) % step * inv % step;
    let mut n1 = first;
    let mut out = Vec::new();
    while n1 <= n as u128 {
        out.push(n1 as u64);
        n1 += step;
    }
    out
}

/// Closed form valid for every extension degree:
/// `-sum C(N, n1) a^{N - n1}` over the surviving indices.
pub fn power_sum_single(b: &Binomial, n: u64) -> FieldElem {
    let ctx = b.ctx();
    let p = ctx.p();
    let mut acc = ctx.zero();
    for n1 in single_solution_exponents(b, n) {
        let c = lucas_binom(n as u128, n1 as u128, p);
        if c != 0 {
            let term = ctx.mul(&ctx.scalar(c), &ctx.pow_u(b.a(), (n - n1) as u128));
            acc = ctx.add(&acc, &term);
        }
    }
    ctx.neg(&acc)
}

/// A power sum computed by every applicable route, with the solution sets
/// that produced it. `consistent` records that all computed routes agree;
/// a nonzero consistent value is a checkable non-permutation certificate.
#[derive(Debug, Clone)]
pub struct PowerSumCert {
    pub n: u64,
    pub decomp: Option<ExponentDecomp>,
    pub triple_solutions: Vec<CongruenceSolution>,
    pub single_solutions: Vec<u64>,
    pub value_single: FieldElem,
    pub value_triple: Option<FieldElem>,
    pub value_direct: Option<FieldElem>,
    pub consistent: bool,
}

impl PowerSumCert {
    /// The certified value (the single-index route, always computed).
    pub fn value(&self) -> &FieldElem {
        &self.value_single
    }

    pub fn is_nonzero(&self) -> bool {
        !self.value_single.is_zero()
    }
}

/// Computes the sum along every route the parameters admit: the
/// single-index form always, the triple form when e = 3, and the direct
/// sum when asked for (and the field is small enough).
pub fn certify_power_sum(b: &Binomial, n: u64, include_direct: bool) -> Result<PowerSumCert> {
    let value_single = power_sum_single(b, n);
    let single_solutions = single_solution_exponents(b, n);
    let (decomp, triple_solutions, value_triple) = if b.e() == 3 {
        let dec = decompose_exponent(n, b.q())?;
        (
            Some(dec),
            solve_congruence_triple(b.q(), b.r(), dec.alpha, dec.beta, dec.gamma),
            Some(power_sum_triple(b, n)?),
        )
    } else {
        (None, Vec::new(), None)
    };
    let value_direct = if include_direct {
        Some(power_sum_direct(b, n)?)
    } else {
        None
    };
    let consistent = value_triple.iter().all(|v| *v == value_single)
        && value_direct.iter().all(|v| *v == value_single);
    Ok(PowerSumCert {
        n,
        decomp,
        triple_solutions,
        single_solutions,
        value_single,
        value_triple,
        value_direct,
        consistent,
    })
}

/// The candidate witness exponents for a cubic extension, in the order
/// they are tried:
///
/// 1. `N = (q-1) + (q-1) q^2` — settles every r not congruent to 1 mod q
///    and `r = q^2 + q + 1`;
/// 2. `N = (q-1)/2 + (q-1)/2 q + (q-1) q^2` (odd q) — the digit-condition
///    witness for even `r_0` with `r = r_0 q + 1`;
/// 3. `N = k (q-1)` for `k` in `{q^2+q-1, q^2-q+1, q^2-1}` — the
///    single-index witnesses for the remaining `r = r_0 q + 1` cases.
pub fn witness_candidates(q: u64) -> Vec<u64> {
    let mut out = vec![(q - 1) + (q - 1) * q * q];
    if q % 2 == 1 {
        out.push((q - 1) / 2 + (q - 1) / 2 * q + (q - 1) * q * q);
    }
    for k in [q * q + q - 1, q * q - q + 1, q * q - 1] {
        out.push(k * (q - 1));
    }
    out.retain(|&n| n >= 1);
    // tiny q can repeat candidates
    let mut seen = Vec::new();
    out.retain(|&n| {
        if seen.contains(&n) {
            false
        } else {
            seen.push(n);
            true
        }
    });
    out
}

/// Tries the candidate exponents in order and returns the first with a
/// nonzero certified sum, which proves f is not a permutation. `None`
/// means "no conclusion": the candidates certified nothing either way.
pub fn witness_exponent(b: &Binomial) -> Result<Option<(u64, PowerSumCert)>> {
    if b.e() != 3 {
        return Err(Error::BadParameter("witness exponents are defined for cubic extensions"));
    }
    for n in witness_candidates(b.q()) {
        let cert = certify_power_sum(b, n, false)?;
        debug_assert!(cert.consistent);
        if cert.consistent && cert.is_nonzero() {
            return Ok(Some((n, cert)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext_field::FieldCtx;
    use crate::perm_criteria::{brute_force_is_pp, root_count};
    use crate::sampling;

    fn binom(ctx: &FieldCtx, m: u32, r: u64, a_exp: u64) -> Binomial<'_> {
        Binomial::new(ctx, m, r, ctx.omega_pow(a_exp)).unwrap()
    }

    #[test]
    fn decomposition() {
        let q = 9;
        let d = decompose_exponent(q - 1 + (q - 1) * q * q, q).unwrap();
        assert_eq!((d.alpha, d.beta, d.gamma), (8, 0, 8));
        let d1 = decompose_exponent(1, q).unwrap();
        assert_eq!((d1.alpha, d1.beta, d1.gamma), (1, 0, 0));
        let d20 = decompose_exponent(20, 9).unwrap();
        assert_eq!((d20.alpha, d20.beta, d20.gamma), (2, 2, 0));
        assert!(decompose_exponent(0, 9).is_err());
        assert!(decompose_exponent(9 * 9 * 9 - 1, 9).is_err());
    }

    #[test]
    fn congruence_solver_pinned_cases() {
        // q = 3, r = q^2+q+1: only the origin solves it
        assert_eq!(
            solve_congruence_triple(3, 13, 2, 0, 2),
            alloc::vec![CongruenceSolution { i: 0, j: 0, k: 0 }]
        );
        // alpha = gamma = q-1, beta = 0 admits at most one solution
        for q in [3u64, 5, 7, 9, 13] {
            for r in 1..=q * q + q + 1 {
                let sols = solve_congruence_triple(q, r, q - 1, 0, q - 1);
                assert!(sols.len() <= 1, "q={q} r={r}: {sols:?}");
            }
        }
        // the even-r0 witness box: the designated point solves it...
        let q = 9u64;
        let r0 = 4u64;
        let sols = solve_congruence_triple(q, r0 * q + 1, 4, 4, 8);
        let designated = CongruenceSolution { i: 4, j: 1, k: 1 };
        assert!(sols.contains(&designated), "{sols:?}");
        // ...but it is NOT unique: distinct lattice points can share the
        // value of the linear form even inside a short window.
        assert_eq!(
            sols,
            alloc::vec![
                CongruenceSolution { i: 3, j: 0, k: 0 },
                CongruenceSolution { i: 4, j: 1, k: 1 },
            ]
        );
        // r0 = 2 keeps the designated point unique
        let sols2 = solve_congruence_triple(q, 2 * q + 1, 4, 4, 8);
        assert_eq!(sols2, alloc::vec![CongruenceSolution { i: 4, j: 0, k: 0 }]);
    }

    #[test]
    fn congruence_solutions_satisfy_the_raw_congruence() {
        for (q, r) in [(3u64, 5u64), (5, 7), (9, 37), (9, 10), (13, 53)] {
            for alpha in 0..q {
                for beta in 0..q {
                    for gamma in 0..q {
                        let n = alpha + beta * q + gamma * q * q;
                        if n == 0 || n > q * q * q - 2 {
                            continue;
                        }
                        let sols = solve_congruence_triple(q, r, alpha, beta, gamma);
                        let m = (q * q * q - 1) as u128;
                        for s in &sols {
                            let e = (r as u128 * n as u128
                                + (q as u128 - 1) * s.i as u128
                                + (q as u128 * q as u128 - q as u128) * s.j as u128
                                + m
                                - (q as u128 * q as u128 - 1) * s.k as u128 % m)
                                % m;
                            assert_eq!(e % m, 0, "q={q} r={r} n={n} {s:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn direct_sum_basics() {
        let ctx = FieldCtx::new(7, 3).unwrap();
        // a permutation re-indexes the sum, so every exponent vanishes
        let pp = binom(&ctx, 1, 1, 1);
        for n in [1u64, 2, 17, 100, 341] {
            assert!(power_sum_direct(&pp, n).unwrap().is_zero());
        }
        // N = Q-1 counts the nonzero values: Q - 1 of them for a single
        // root, which is -1 mod p
        assert_eq!(power_sum_direct(&pp, 342).unwrap(), ctx.minus_one());
        let non_pp = binom(&ctx, 1, 2, 1);
        assert_eq!(power_sum_direct(&non_pp, 342).unwrap(), ctx.minus_one());
    }

    #[test]
    fn triple_form_pinned_value() {
        // q = 3, r = q^2+q+1, N = 20 = (q-1) + (q-1) q^2 gives -a^{q-q^2}
        let ctx = FieldCtx::new(3, 3).unwrap();
        for a_exp in sampling::all_valid_a_exponents(&ctx, 3) {
            let b = binom(&ctx, 1, 13, a_exp);
            let expect = ctx.neg(&ctx.pow(b.a(), 3 - 9).unwrap());
            assert_eq!(power_sum_triple(&b, 20).unwrap(), expect);
            assert_eq!(power_sum_direct(&b, 20).unwrap(), expect);
            assert_eq!(power_sum_single(&b, 20), expect);
        }
    }

    #[test]
    fn sum_vanishes_when_q_minus_1_does_not_divide() {
        let ctx = FieldCtx::new(3, 6).unwrap();
        let b = binom(&ctx, 2, 5, 3);
        // r s not divisible by q-1 forces an outright zero
        let mut hit = false;
        for n in 1..200u64 {
            let dec = decompose_exponent(n, 9).unwrap();
            if 5 * (dec.alpha + dec.beta + dec.gamma) % 8 != 0 {
                hit = true;
                assert!(power_sum_triple(&b, n).unwrap().is_zero());
                assert!(power_sum_single(&b, n).is_zero());
            }
        }
        assert!(hit);
    }

    #[test]
    fn three_routes_agree_on_random_inputs() {
        // moderate sample here; the acceptance suite runs the full one
        let f729 = FieldCtx::new(3, 6).unwrap();
        let f343 = FieldCtx::new(7, 3).unwrap();
        for (ctx, m) in [(&f729, 2u32), (&f343, 1u32)] {
            let q = ctx.p().pow(m);
            let qe = ctx.order();
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                state >> 16
            };
            for _ in 0..60 {
                let r = next() % (q * q + q + 1) + 1;
                let a_exp = next() % (qe - 1);
                let n = next() % (qe - 2) + 1;
                let b = binom(ctx, m, r, a_exp);
                let direct = power_sum_direct(&b, n).unwrap();
                assert_eq!(direct, power_sum_triple(&b, n).unwrap(), "r={r} a={a_exp} n={n}");
                assert_eq!(direct, power_sum_single(&b, n), "r={r} a={a_exp} n={n}");
            }
        }
    }

    #[test]
    fn single_form_lemma_style_indices() {
        // r = r0 q + 1 with even r0 and p not dividing r0, witness
        // k = q^2+q-1: the surviving index is (2 r0 - 1) q + (q-1) q^2
        let q = 9u64;
        let ctx = FieldCtx::new(3, 6).unwrap();
        for r0 in [2u64, 4] {
            let b = binom(&ctx, 2, r0 * q + 1, 1);
            let n = (q * q + q - 1) * (q - 1);
            let survivors: Vec<u64> = single_solution_exponents(&b, n)
                .into_iter()
                .filter(|&n1| lucas_binom(n as u128, n1 as u128, 3) != 0)
                .collect();
            assert_eq!(survivors, alloc::vec![(2 * r0 - 1) * q + (q - 1) * q * q]);
            assert!(!power_sum_single(&b, n).is_zero());
        }
        // p | r0 (here r0 = 6): witness k = q^2 - 1, surviving index
        // 1 + (2 r0 - q) q + r0 q^2 for r0 >= (q+1)/2
        let b6 = binom(&ctx, 2, 6 * q + 1, 1);
        let n6 = (q * q - 1) * (q - 1);
        let survivors6: Vec<u64> = single_solution_exponents(&b6, n6)
            .into_iter()
            .filter(|&n1| lucas_binom(n6 as u128, n1 as u128, 3) != 0)
            .collect();
        assert_eq!(survivors6, alloc::vec![1 + (2 * 6 - q) * q + 6 * q * q]);
        assert!(!power_sum_single(&b6, n6).is_zero());
        // r0 < (q+1)/2 with p | r0 needs a larger q; take q = 25, r0 = 10:
        // the surviving index is (2 r0 - 1) q + (r0 - 2) q^2
        let q25 = 25u64;
        let f25 = FieldCtx::new(5, 6).unwrap();
        let b10 = binom(&f25, 2, 10 * q25 + 1, 1);
        let n25 = (q25 * q25 - 1) * (q25 - 1);
        let survivors25: Vec<u64> = single_solution_exponents(&b10, n25)
            .into_iter()
            .filter(|&n1| lucas_binom(n25 as u128, n1 as u128, 5) != 0)
            .collect();
        assert_eq!(survivors25, alloc::vec![(2 * 10 - 1) * q25 + (10 - 2) * q25 * q25]);
        assert!(!power_sum_single(&b10, n25).is_zero());
    }

    #[test]
    fn witness_search_examples() {
        let f343 = FieldCtx::new(7, 3).unwrap();
        let valid = sampling::all_valid_a_exponents(&f343, 7);
        // r = 2: the first candidate N = 6 + 6*49 fires
        let b = binom(&f343, 1, 2, valid[0]);
        let (n, cert) = witness_exponent(&b).unwrap().unwrap();
        assert_eq!(n, 6 + 6 * 49);
        assert!(cert.is_nonzero() && cert.consistent);
        assert_eq!(power_sum_direct(&b, n).unwrap(), *cert.value());
        assert!(!brute_force_is_pp(&b).unwrap().is_pp);
        // r = 1 on a valid a is a permutation: nothing may fire
        let pp = binom(&f343, 1, 1, valid[0]);
        assert!(witness_exponent(&pp).unwrap().is_none());
        // q = 9, r = 19: the digit-condition witness fires
        let f729 = FieldCtx::new(3, 6).unwrap();
        let valid9 = sampling::all_valid_a_exponents(&f729, 9);
        let b19 = binom(&f729, 2, 19, valid9[0]);
        let (n19, cert19) = witness_exponent(&b19).unwrap().unwrap();
        assert_eq!(n19, 4 + 4 * 9 + 8 * 81);
        assert!(cert19.is_nonzero());
    }

    #[test]
    fn witness_fires_even_when_the_digit_witness_cancels() {
        // q = 9, r = 37: the digit-condition certificate is a two-term
        // sum that cancels exactly when a^{q^2+q+1} = 1; the later
        // single-index candidates still certify those a.
        let ctx = FieldCtx::new(3, 6).unwrap();
        let n_digit = 4 + 4 * 9 + 8 * 81;
        let mut cancelled = 0;
        for a_exp in sampling::all_valid_a_exponents(&ctx, 9) {
            let b = binom(&ctx, 2, 37, a_exp);
            let digit_cert = power_sum_triple(&b, n_digit).unwrap();
            if digit_cert.is_zero() {
                cancelled += 1;
                assert_eq!(ctx.pow_u(b.a(), 91), ctx.one(), "a_exp={a_exp}");
            }
            let fired = witness_exponent(&b).unwrap();
            assert!(fired.is_some(), "a_exp={a_exp}");
            assert_ne!(root_count(&b), 9);
        }
        assert!(cancelled > 0);
    }

    #[test]
    fn nonzero_witness_implies_not_a_permutation() {
        let ctx = FieldCtx::new(3, 3).unwrap();
        for r in 1..=13u64 {
            for a_exp in 0..26u64 {
                let b = binom(&ctx, 1, r, a_exp);
                if let Some((n, cert)) = witness_exponent(&b).unwrap() {
                    assert!(!brute_force_is_pp(&b).unwrap().is_pp, "r={r} a_exp={a_exp}");
                    assert_eq!(power_sum_direct(&b, n).unwrap(), *cert.value());
                }
            }
        }
    }

    #[test]
    fn certificates_report_all_routes() {
        let ctx = FieldCtx::new(3, 6).unwrap();
        let b = binom(&ctx, 2, 13, 5);
        let cert = certify_power_sum(&b, 300, true).unwrap();
        assert!(cert.consistent);
        assert_eq!(cert.value_triple.as_ref(), Some(&cert.value_single));
        assert_eq!(cert.value_direct.as_ref(), Some(&cert.value_single));
        assert!(cert.decomp.is_some());
        // a quadratic extension gets no triple route
        let f49 = FieldCtx::new(7, 2).unwrap();
        let b2 = Binomial::new(&f49, 1, 3, f49.omega_pow(5)).unwrap();
        let cert2 = certify_power_sum(&b2, 17, true).unwrap();
        assert!(cert2.value_triple.is_none());
        assert!(cert2.consistent);
        assert_eq!(cert2.value_direct, Some(power_sum_single(&b2, 17)));
    }
}
