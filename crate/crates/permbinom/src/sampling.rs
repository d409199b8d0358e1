//! Deterministic, seeded sampling of the coefficient `a`, expressed as an
//! exponent of the canonical primitive element. Identical seeds give
//! identical samples on every run and at every parallelism degree.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::ext_field::FieldCtx;

/// Unbiased draw below `bound` by masked rejection.
fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let mask = u64::MAX >> bound.leading_zeros().min(63);
    loop {
        let v = rng.next_u64() & mask;
        if v < bound {
            return v;
        }
    }
}

/// Whether `a = ω^exp` leaves f with a single root, i.e.
/// `(-a)^{(q^e-1)/(q-1)} != 1`.
pub fn a_exponent_is_valid(ctx: &FieldCtx, q: u64, exp: u64) -> bool {
    let d = ctx.group_order() / (q - 1);
    let neg_a = ctx.neg(&ctx.omega_pow(exp));
    ctx.pow_u(&neg_a, d as u128) != ctx.one()
}

/// Every exponent with a single-root `a`, ascending.
pub fn all_valid_a_exponents(ctx: &FieldCtx, q: u64) -> Vec<u64> {
    (0..ctx.group_order())
        .filter(|&e| a_exponent_is_valid(ctx, q, e))
        .collect()
}

/// Up to `count` distinct exponents drawn with the seeded generator,
/// keeping only single-root `a` and returning them sorted. Falls back to
/// the ascending enumeration when the valid set is small.
pub fn sample_valid_a_exponents(ctx: &FieldCtx, q: u64, count: usize, seed: u64) -> Vec<u64> {
    sample_filtered(ctx, count, seed, |e| a_exponent_is_valid(ctx, q, e))
}

/// Up to `count` distinct exponents of arbitrary nonzero `a`, sorted.
pub fn sample_any_a_exponents(ctx: &FieldCtx, count: usize, seed: u64) -> Vec<u64> {
    sample_filtered(ctx, count, seed, |_| true)
}

fn sample_filtered(
    ctx: &FieldCtx,
    count: usize,
    seed: u64,
    keep: impl Fn(u64) -> bool,
) -> Vec<u64> {
    let group = ctx.group_order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: BTreeSet<u64> = BTreeSet::new();
    let budget = 64 * (count as u64 + 4);
    let mut attempts = 0;
    while picked.len() < count && attempts < budget {
        attempts += 1;
        let e = uniform_below(&mut rng, group);
        if !picked.contains(&e) && keep(e) {
            picked.insert(e);
        }
    }
    if picked.len() < count {
        // small groups: take what exists, in ascending order
        for e in 0..group {
            if picked.len() == count {
                break;
            }
            if keep(e) {
                picked.insert(e);
            }
        }
    }
    picked.into_iter().collect()
}
