//! Extension fields `F_{p^n}` in the polynomial basis.
//!
//! A [`FieldCtx`] owns a monic irreducible modulus of degree `n` over
//! `F_p` (the canonical one unless a modulus is supplied), the smallest
//! primitive element, the factored group order, and optionally a dense
//! discrete-log table. Elements are coefficient vectors over `F_p`,
//! constant term first. Contexts are immutable after construction, so
//! they can be shared freely across threads; every element operation is
//! pure.
//!
//! Canonical orderings used throughout:
//! * elements are indexed by `Σ c_i p^i`, i.e. coefficient vectors read
//!   as base-p numerals with the leading coefficient most significant;
//! * the canonical enumeration of the whole field is `0, ω^0, ω^1, ...`
//!   for the canonical primitive element ω.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::arith;
use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 40;
/// Largest order for which a dense log table may be built.
pub const MAX_LOG_TABLE_ORDER: u64 = 1 << 24;

/// An element of `F_{p^n}`: exactly `n` residues mod p, constant first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Text form `c0,c1,...,c{n-1}`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{c}");
        }
        s
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The subgroup μ_d of d-th roots of unity, as its order and a generator.
#[derive(Debug, Clone)]
pub struct RootsOfUnity {
    d: u64,
    generator: FieldElem,
}

impl RootsOfUnity {
    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn generator(&self) -> &FieldElem {
        &self.generator
    }

    /// Iterates the d distinct roots `1, g, g^2, ...`.
    pub fn elements<'a>(&'a self, ctx: &'a FieldCtx) -> RootsIter<'a> {
        RootsIter {
            ctx,
            generator: &self.generator,
            cur: ctx.one(),
            remaining: self.d,
        }
    }
}

pub struct RootsIter<'a> {
    ctx: &'a FieldCtx,
    generator: &'a FieldElem,
    cur: FieldElem,
    remaining: u64,
}

impl Iterator for RootsIter<'_> {
    type Item = FieldElem;

    fn next(&mut self) -> Option<FieldElem> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = self.cur.clone();
        if self.remaining > 0 {
            self.cur = self.ctx.mul(&self.cur, self.generator);
        }
        Some(out)
    }
}

/// Canonical enumeration of the full field: zero, then successive powers
/// of the canonical primitive element.
pub struct Elements<'a> {
    ctx: &'a FieldCtx,
    cur: Option<FieldElem>,
    emitted: u64,
}

impl Iterator for Elements<'_> {
    type Item = FieldElem;

    fn next(&mut self) -> Option<FieldElem> {
        if self.emitted == self.ctx.order {
            return None;
        }
        self.emitted += 1;
        match self.cur.take() {
            None => {
                self.cur = Some(self.ctx.one());
                Some(self.ctx.zero())
            }
            Some(x) => {
                if self.emitted < self.ctx.order {
                    self.cur = Some(self.ctx.mul(&x, &self.ctx.primitive));
                }
                Some(x)
            }
        }
    }
}

/// An extension field `F_{p^n}`, immutable once built.
pub struct FieldCtx {
    p: u64,
    n: usize,
    order: u64,
    modulus: Vec<u64>,
    primitive: FieldElem,
    group_factors: Vec<(u64, u32)>,
    log_table: Option<Vec<u32>>,
}

impl FieldCtx {
    /// Builds `F_{p^n}` on the canonical modulus.
    pub fn new(p: u64, n: usize) -> Result<FieldCtx> {
        FieldCtx::build(p, n, None, false)
    }

    /// Same, plus a dense discrete-log table (orders up to 2^24 only).
    pub fn with_logs(p: u64, n: usize) -> Result<FieldCtx> {
        FieldCtx::build(p, n, None, true)
    }

    /// Builds on a supplied monic modulus, which is verified irreducible.
    pub fn with_modulus(p: u64, n: usize, modulus: Vec<u64>, build_logs: bool) -> Result<FieldCtx> {
        FieldCtx::build(p, n, Some(modulus), build_logs)
    }

    fn build(p: u64, n: usize, modulus: Option<Vec<u64>>, build_logs: bool) -> Result<FieldCtx> {
        if !arith::is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::BadParameter("extension degree must be at least 1"));
        }
        let order = match arith::checked_pow_u128(p as u128, n as u32) {
            Some(o) if o <= MAX_FIELD_ORDER as u128 => o as u64,
            _ => return Err(Error::SizeCap("field order exceeds 2^40")),
        };
        let modulus = match modulus {
            Some(m) => {
                if m.len() != n + 1 || m[n] != 1 {
                    return Err(Error::BadParameter("modulus must be monic of degree n"));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::BadParameter("modulus coefficients must lie in [0, p)"));
                }
                if !poly_is_irreducible(p, &m) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => find_irreducible(p, n)?,
        };
        if build_logs && order > MAX_LOG_TABLE_ORDER {
            return Err(Error::SizeCap("log tables are limited to orders up to 2^24"));
        }
        let group_factors = arith::factorize_u64(order - 1);
        let mut ctx = FieldCtx {
            p,
            n,
            order,
            modulus,
            primitive: FieldElem { coeffs: vec![0; n] },
            group_factors,
            log_table: None,
        };
        ctx.primitive = ctx.search_primitive();
        if build_logs {
            ctx.log_table = Some(ctx.build_log_table());
        }
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn group_order(&self) -> u64 {
        self.order - 1
    }

    /// Factorization of the multiplicative group order.
    pub fn group_factors(&self) -> &[(u64, u32)] {
        &self.group_factors
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The canonical primitive element: the first element in index order
    /// whose multiplicative order is the full group order.
    pub fn primitive(&self) -> &FieldElem {
        &self.primitive
    }

    pub fn has_log_table(&self) -> bool {
        self.log_table.is_some()
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { coeffs: vec![0; self.n] }
    }

    pub fn one(&self) -> FieldElem {
        self.scalar(1)
    }

    /// The constant `c mod p` embedded in the field.
    pub fn scalar(&self, c: u64) -> FieldElem {
        let mut coeffs = vec![0; self.n];
        coeffs[0] = c % self.p;
        FieldElem { coeffs }
    }

    /// The field element p-1, equal to 1 in characteristic 2.
    pub fn minus_one(&self) -> FieldElem {
        self.scalar(self.p - 1)
    }

    /// Validates a coefficient vector as an element.
    pub fn elem(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() != self.n {
            return Err(Error::BadParameter("element needs exactly n coefficients"));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadParameter("element coefficients must lie in [0, p)"));
        }
        Ok(FieldElem { coeffs: coeffs.to_vec() })
    }

    /// Parses the text form `c0,c1,...,c{n-1}`.
    pub fn elem_from_text(&self, s: &str) -> Result<FieldElem> {
        let mut coeffs = Vec::with_capacity(self.n);
        for tok in s.split(',') {
            let c: u64 = tok
                .trim()
                .parse()
                .map_err(|_| Error::ParseError("element coefficients must be integers"))?;
            coeffs.push(c);
        }
        self.elem(&coeffs)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= self.p {
                    s - self.p
                } else {
                    s
                }
            })
            .collect();
        FieldElem { coeffs }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let coeffs = a
            .coeffs
            .iter()
            .map(|&x| if x == 0 { 0 } else { self.p - x })
            .collect();
        FieldElem { coeffs }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let n = self.n;
        let p = self.p as u128;
        // Accumulate the schoolbook product in u128: terms are < p^2 and
        // there are at most n <= 40 of them, which stays well below 2^128.
        let mut t = vec![0u128; 2 * n - 1];
        for i in 0..n {
            let ai = a.coeffs[i] as u128;
            if ai == 0 {
                continue;
            }
            for j in 0..n {
                t[i + j] += ai * b.coeffs[j] as u128;
            }
        }
        for v in t.iter_mut() {
            *v %= p;
        }
        // x^n = -(lower part of the modulus)
        for i in (n..2 * n - 1).rev() {
            let c = t[i];
            if c == 0 {
                continue;
            }
            t[i] = 0;
            for j in 0..n {
                let m = self.modulus[j];
                if m != 0 {
                    let idx = i - n + j;
                    t[idx] = (t[idx] + p - c * m as u128 % p) % p;
                }
            }
        }
        FieldElem {
            coeffs: t[..n].iter().map(|&v| v as u64).collect(),
        }
    }

    /// `a^e` for a nonnegative exponent of up to 128 bits; exponents of
    /// nonzero bases are reduced mod the group order first.
    pub fn pow_u(&self, a: &FieldElem, e: u128) -> FieldElem {
        if a.is_zero() {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let mut e = (e % (self.order - 1) as u128) as u64;
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^e` for a signed exponent; negative exponents require a nonzero
    /// base and reduce mod the group order.
    pub fn pow(&self, a: &FieldElem, e: i128) -> Result<FieldElem> {
        if e >= 0 {
            return Ok(self.pow_u(a, e as u128));
        }
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = (self.order - 1) as i128;
        Ok(self.pow_u(a, e.rem_euclid(m) as u128))
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_u(a, (self.order - 2) as u128))
    }

    /// The map x -> x^q for q = p^m with m dividing the degree.
    pub fn frobenius(&self, a: &FieldElem, q: u64) -> Result<FieldElem> {
        match arith::prime_power(q) {
            Some((p, m)) if p == self.p && self.n % m as usize == 0 => Ok(self.pow_u(a, q as u128)),
            _ => Err(Error::NotSubpower(q)),
        }
    }

    /// Canonical dense index: coefficients read as a base-p numeral.
    pub fn elem_index(&self, a: &FieldElem) -> u64 {
        let mut acc: u64 = 0;
        for &c in a.coeffs.iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    pub fn elem_from_index(&self, mut idx: u64) -> Result<FieldElem> {
        if idx >= self.order {
            return Err(Error::BadParameter("element index out of range"));
        }
        let mut coeffs = vec![0u64; self.n];
        for c in coeffs.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        Ok(FieldElem { coeffs })
    }

    /// ω^k for the canonical primitive element ω.
    pub fn omega_pow(&self, k: u64) -> FieldElem {
        self.pow_u(&self.primitive, k as u128)
    }

    /// Discrete log base ω: the k in [0, order-2] with ω^k = a. Uses the
    /// dense table when built, baby-step giant-step otherwise.
    pub fn elem_log(&self, a: &FieldElem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.log_table {
            return Ok(t[self.elem_index(a) as usize] as u64);
        }
        let m = self.order - 1;
        let s = arith::ceil_sqrt_u128(m as u128) as u64;
        let mut baby: BTreeMap<u64, u64> = BTreeMap::new();
        let mut cur = self.one();
        for j in 0..s {
            baby.entry(self.elem_index(&cur)).or_insert(j);
            cur = self.mul(&cur, &self.primitive);
        }
        let giant = self.pow_u(&self.primitive, (m - s % m) as u128);
        let mut g = a.clone();
        for i in 0..=s {
            if let Some(&j) = baby.get(&self.elem_index(&g)) {
                return Ok((i * s + j) % m);
            }
            g = self.mul(&g, &giant);
        }
        unreachable!("the primitive element generates every nonzero element")
    }

    /// Canonical enumeration: zero first, then ω^0, ω^1, ...
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            ctx: self,
            cur: None,
            emitted: 0,
        }
    }

    /// The subgroup of d-th roots of unity; `d` must divide the group
    /// order.
    pub fn roots_of_unity(&self, d: u64) -> Result<RootsOfUnity> {
        if d == 0 || (self.order - 1) % d != 0 {
            return Err(Error::NotSubgroupOrder(d));
        }
        let generator = self.pow_u(&self.primitive, ((self.order - 1) / d) as u128);
        Ok(RootsOfUnity { d, generator })
    }

    /// Text form `p=<p> n=<n> mod=c0,c1,...,cn`.
    pub fn descriptor(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "p={} n={} mod=", self.p, self.n);
        for (i, c) in self.modulus.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{c}");
        }
        s
    }

    /// Parses [`FieldCtx::descriptor`] output, re-validating the modulus.
    pub fn from_descriptor(s: &str, build_logs: bool) -> Result<FieldCtx> {
        let mut p = None;
        let mut n = None;
        let mut modulus = None;
        for tok in s.split_whitespace() {
            let (key, value) = tok
                .split_once('=')
                .ok_or(Error::ParseError("expected key=value tokens"))?;
            match key {
                "p" => p = Some(value.parse::<u64>().map_err(|_| Error::ParseError("bad p"))?),
                "n" => n = Some(value.parse::<usize>().map_err(|_| Error::ParseError("bad n"))?),
                "mod" => {
                    let coeffs: core::result::Result<Vec<u64>, _> =
                        value.split(',').map(|t| t.trim().parse::<u64>()).collect();
                    modulus = Some(coeffs.map_err(|_| Error::ParseError("bad modulus list"))?);
                }
                _ => return Err(Error::ParseError("unknown key in field descriptor")),
            }
        }
        match (p, n, modulus) {
            (Some(p), Some(n), Some(m)) => FieldCtx::with_modulus(p, n, m, build_logs),
            _ => Err(Error::ParseError("field descriptor needs p, n and mod")),
        }
    }

    fn search_primitive(&self) -> FieldElem {
        let m = self.order - 1;
        'outer: for idx in 1..self.order {
            let cand = self
                .elem_from_index(idx)
                .expect("index below the field order");
            for &(f, _) in &self.group_factors {
                if self.pow_u(&cand, (m / f) as u128) == self.one() {
                    continue 'outer;
                }
            }
            return cand;
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    fn build_log_table(&self) -> Vec<u32> {
        let mut t = vec![u32::MAX; self.order as usize];
        let mut cur = self.one();
        for k in 0..self.order - 1 {
            t[self.elem_index(&cur) as usize] = k as u32;
            cur = self.mul(&cur, &self.primitive);
        }
        t
    }
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("order", &self.order)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive)
            .field("log_table", &self.log_table.as_ref().map(|t| t.len()))
            .finish()
    }
}

/// The canonical modulus: the first monic irreducible of degree `n` over
/// `F_p`, scanning the lower coefficient vector `(c_{n-1},...,c_0)` in
/// base-p numeral order. Deterministic across runs.
pub fn find_irreducible(p: u64, n: usize) -> Result<Vec<u64>> {
    if !arith::is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::BadParameter("degree must be at least 1"));
    }
    match arith::checked_pow_u128(p as u128, n as u32) {
        Some(o) if o <= MAX_FIELD_ORDER as u128 => {}
        _ => return Err(Error::SizeCap("field order exceeds 2^40")),
    }
    let mut poly = vec![0u64; n + 1];
    poly[n] = 1;
    loop {
        if poly_is_irreducible(p, &poly) {
            return Ok(poly);
        }
        if !increment_digits(&mut poly[..n], p) {
            unreachable!("an irreducible polynomial of every degree exists")
        }
    }
}

/// Advances a little-endian base-p digit vector; false on wrap-around.
fn increment_digits(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

fn poly_deg(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

/// Whether monic `g` divides `f`, both over F_p.
fn poly_divides(g: &[u64], f: &[u64], p: u64) -> bool {
    let dg = poly_deg(g).expect("divisor is nonzero");
    debug_assert_eq!(g[dg], 1);
    let mut rem: Vec<u64> = f.to_vec();
    loop {
        let dr = match poly_deg(&rem) {
            None => return true,
            Some(d) => d,
        };
        if dr < dg {
            return false;
        }
        let c = rem[dr];
        for j in 0..=dg {
            let sub = arith::mul_mod_u64(c, g[j], p);
            let idx = dr - dg + j;
            rem[idx] = (rem[idx] + p - sub) % p;
        }
        debug_assert_eq!(rem[dr], 0);
    }
}

/// Trial factorization: divides by every monic polynomial of degree up to
/// n/2. Exhaustive, so only suitable at the supported field sizes.
fn poly_is_irreducible(p: u64, f: &[u64]) -> bool {
    let n = match poly_deg(f) {
        Some(n) => n,
        None => return false,
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    for d in 1..=n / 2 {
        let mut g = vec![0u64; d + 1];
        g[d] = 1;
        loop {
            if poly_divides(&g, f, p) {
                return false;
            }
            if !increment_digits(&mut g[..d], p) {
                break;
            }
        }
    }
    true
}
