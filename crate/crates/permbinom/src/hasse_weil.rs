//! The exact-integer non-permutation predictor for large extensions, and
//! desk-scale point counts of the collision curve
//! `F(X,Y) = (f(X) - f(Y)) / (X - Y)`.
//!
//! The point-count lower bound
//! `q^e - (d-1)(d-2) q^{e/2} - d(d-1)^2/2 - d - 2` with `d = r + q - 2`
//! exceeds `q` only if `F` has a zero off the diagonal, i.e. a collision
//! of f. All comparisons involving `q^{e/2}` and `q^{e/4}` are certified
//! by integer squaring and fourth powers; there is no floating point, and
//! anything leaving 128 bits is an explicit range error.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::ext_field::{FieldCtx, FieldElem};
use crate::perm_criteria::{self, Binomial};
use crate::sampling;

/// Pairwise point counting is quadratic; the image-multiset count is
/// linear but still walks the whole plane's worth of buckets.
pub const MAX_CURVE_ORDER: u64 = 1 << 12;

/// The bound report for one `(q, e, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HwReport {
    pub q: u64,
    pub e: u32,
    pub r: u64,
    /// Degree of the collision curve, `r + q - 2`.
    pub d: u64,
    /// gcd(r, q-1); anything above 1 already rules out a permutation.
    pub gcd_qm1: u64,
    /// `q >= 6` and `1 < r < q^{e/4} - q + 3`, certified by fourth powers.
    pub applicable: bool,
    /// Certified floor of the point-count lower bound (exact when e is
    /// even; rounded against the bound when e is odd).
    pub bound_lower: i128,
    /// Exact comparison `bound > q`, certified by squaring. Together with
    /// `applicable` (and gcd 1) this concludes not-a-permutation.
    pub predicts_nonpp: bool,
    /// `d^3 - 3d^2 + 3d - 6 >= 2q`, the radicand inequality behind the
    /// root bound; checked per instance rather than assumed.
    pub radicand_ok: bool,
    /// The larger root of the bound quadratic stays below `q^{e/2}`:
    /// `radicand_ok` and `(d-1)^4 < q^e`.
    pub lambda_check: bool,
}

impl HwReport {
    /// Whether the report concludes not-a-permutation: either the gcd
    /// short-circuit or the certified bound inside the applicable range.
    pub fn concludes_nonpp(&self) -> bool {
        self.gcd_qm1 > 1 || (self.applicable && self.predicts_nonpp)
    }
}

/// Evaluates the bound report with checked 128-bit arithmetic.
pub fn hw_threshold(q: u64, e: u32, r: u64) -> Result<HwReport> {
    if arith::prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if e == 0 || r == 0 {
        return Err(Error::BadParameter("e and r must be positive"));
    }
    let qe = arith::checked_pow_u128(q as u128, e).ok_or(Error::Overflow("q^e"))?;
    let d = r
        .checked_add(q - 2)
        .ok_or(Error::Overflow("curve degree r + q - 2"))?;
    let d128 = d as u128;
    let gcd_qm1 = arith::gcd_u64(r, q - 1);
    // r in range iff (r + q - 3)^4 < q^e; an overflowing fourth power is
    // certainly out of range
    let applicable = q >= 6
        && r >= 2
        && match arith::checked_pow_u128(d128 - 1, 4) {
            Some(fourth) => fourth < qe,
            None => false,
        };
    // d = 1 zeroes the (d-1) factors, so saturating keeps the algebra
    let half = d128
        .checked_mul(d128 - 1)
        .and_then(|v| v.checked_mul(d128 - 1))
        .ok_or(Error::Overflow("d (d-1)^2"))?
        / 2;
    let b = (d128 - 1)
        .checked_mul(d128.saturating_sub(2))
        .ok_or(Error::Overflow("(d-1)(d-2)"))?;
    let sqrt_ceil = arith::ceil_sqrt_u128(qe);
    let bound_lower = i128::try_from(qe)
        .ok()
        .and_then(|qe_i| {
            let sub = i128::try_from(b.checked_mul(sqrt_ceil)?).ok()?;
            qe_i.checked_sub(sub)?
                .checked_sub(i128::try_from(half).ok()?)?
                .checked_sub(d as i128 + 2)
        })
        .ok_or(Error::Overflow("bound terms"))?;
    // bound > q  iff  A > B sqrt(q^e)  for A = q^e - d(d-1)^2/2 - d - 2 - q,
    // certified via A > isqrt(B^2 q^e)
    let a_term = i128::try_from(qe)
        .ok()
        .zip(i128::try_from(half).ok())
        .and_then(|(qe_i, half_i)| {
            qe_i.checked_sub(half_i)?
                .checked_sub(d as i128 + 2)?
                .checked_sub(q as i128)
        })
        .ok_or(Error::Overflow("bound terms"))?;
    let predicts_nonpp = if a_term <= 0 {
        false
    } else {
        let b2qe = b
            .checked_mul(b)
            .and_then(|v| v.checked_mul(qe))
            .ok_or(Error::Overflow("(d-1)^2 (d-2)^2 q^e"))?;
        a_term as u128 > b2qe.isqrt()
    };
    let radicand_ok = {
        let d_i = d as i128;
        // d^3 - 3 d^2 + 3 d - 6 >= 2 q, kept in i128 by the earlier caps
        d_i.checked_mul(d_i)
            .and_then(|d2| d2.checked_mul(d_i))
            .map(|d3| d3 - 3 * (d_i * d_i) + 3 * d_i - 6 >= 2 * q as i128)
            .ok_or(Error::Overflow("radicand polynomial"))?
    };
    let lambda_check = radicand_ok
        && match arith::checked_pow_u128(d128 - 1, 4) {
            Some(fourth) => fourth < qe,
            None => false,
        };
    Ok(HwReport {
        q,
        e,
        r,
        d,
        gcd_qm1,
        applicable,
        bound_lower,
        predicts_nonpp,
        radicand_ok,
        lambda_check,
    })
}

/// `(f(x) - f(y)) / (x - y)` as a polynomial value: the two telescoped
/// quotient sums off the diagonal, the derivative-style form on it.
pub fn eval_collision_curve(b: &Binomial, x: &FieldElem, y: &FieldElem) -> FieldElem {
    let ctx = b.ctx();
    let q = b.q();
    let r = b.r();
    if x == y {
        // (r+q-1) x^{r+q-2} + a r x^{r-1} with the coefficients mod p
        let p = ctx.p() as u128;
        let c1 = ctx.scalar(((r as u128 + q as u128 - 1) % p) as u64);
        let c2 = ctx.scalar((r % ctx.p()) as u64);
        let t1 = ctx.mul(&c1, &ctx.pow_u(x, (r + q - 2) as u128));
        let t2 = ctx.mul(b.a(), &ctx.mul(&c2, &ctx.pow_u(x, (r - 1) as u128)));
        return ctx.add(&t1, &t2);
    }
    let s1 = quotient_sum(ctx, x, y, r + q - 1);
    let s2 = quotient_sum(ctx, x, y, r);
    ctx.add(&s1, &ctx.mul(b.a(), &s2))
}

/// `sum_{i<n} x^i y^{n-1-i}`, the value of `(x^n - y^n)/(x - y)`.
fn quotient_sum(ctx: &FieldCtx, x: &FieldElem, y: &FieldElem, n: u64) -> FieldElem {
    let n = n as usize;
    let mut y_pow = Vec::with_capacity(n);
    let mut cur = ctx.one();
    for _ in 0..n {
        y_pow.push(cur.clone());
        cur = ctx.mul(&cur, y);
    }
    let mut acc = ctx.zero();
    let mut x_pow = ctx.one();
    for i in 0..n {
        acc = ctx.add(&acc, &ctx.mul(&x_pow, &y_pow[n - 1 - i]));
        if i + 1 < n {
            x_pow = ctx.mul(&x_pow, x);
        }
    }
    acc
}

/// Zeros of the collision curve over the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveCount {
    pub zero_count: u64,
    pub diagonal_count: u64,
    pub offdiag_count: u64,
}

/// Counts the zeros exactly: off the diagonal they are the ordered
/// collision pairs of f, counted from the image multiset in one linear
/// pass; on the diagonal the derivative-style form is scanned directly.
pub fn count_curve_points(b: &Binomial) -> Result<CurveCount> {
    let order = b.field_order();
    if order > MAX_CURVE_ORDER {
        return Err(Error::SizeCap("curve counts cover at most 2^12 elements"));
    }
    let ctx = b.ctx();
    let mut buckets = vec![0u32; order as usize];
    for x in ctx.elements() {
        buckets[ctx.elem_index(&b.eval(&x)) as usize] += 1;
    }
    let offdiag_count: u64 = buckets
        .iter()
        .map(|&c| {
            let c = c as u64;
            c * c.saturating_sub(1)
        })
        .sum();
    let diagonal_count = ctx
        .elements()
        .filter(|x| eval_collision_curve(b, x, x).is_zero())
        .count() as u64;
    // the diagonal polynomial x^{r-1} ((r-1) x^{q-1} + a r) never has
    // more than q roots
    assert!(diagonal_count <= b.q());
    Ok(CurveCount {
        zero_count: offdiag_count + diagonal_count,
        diagonal_count,
        offdiag_count,
    })
}

/// One row of a bound-vs-oracle scan.
#[derive(Debug, Clone)]
pub struct Theorem2Row {
    pub report: HwReport,
    /// `(a_exp, is_pp)` from the subgroup-criterion oracle, one entry per
    /// sampled a; empty when confirmation was not requested or possible.
    pub confirmations: Vec<(u64, bool)>,
}

/// Evaluates the bound for each r and, when `a_count > 0`, confirms the
/// verdict with the subgroup criterion on `a_count` sampled coefficients
/// over the actual field `F_{q^e}`.
pub fn theorem2_scan(
    q: u64,
    e: u32,
    rs: &[u64],
    a_count: usize,
    seed: u64,
) -> Result<Vec<Theorem2Row>> {
    let (p, m) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let ctx = if a_count > 0 {
        Some(FieldCtx::new(p, m as usize * e as usize)?)
    } else {
        None
    };
    let a_exps = match &ctx {
        Some(ctx) => sampling::sample_any_a_exponents(ctx, a_count, seed),
        None => Vec::new(),
    };
    let mut rows = Vec::with_capacity(rs.len());
    for &r in rs {
        let report = hw_threshold(q, e, r)?;
        let mut confirmations = Vec::new();
        if let Some(ctx) = &ctx {
            for &a_exp in &a_exps {
                let b = Binomial::new(ctx, m, r, ctx.omega_pow(a_exp))?;
                confirmations.push((a_exp, perm_criteria::mu_d_is_pp(&b)?.is_pp));
            }
        }
        rows.push(Theorem2Row { report, confirmations });
    }
    Ok(rows)
}
