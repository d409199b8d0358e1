//! Structural properties of the field layer: the ring axioms on random
//! triples, Fermat over the whole field, subgroup membership by
//! exhaustion, and bit-identical reconstruction.

use permbinom::ext_field::FieldCtx;
use proptest::prelude::*;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

fn random_elem(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> permbinom::FieldElem {
    let coeffs: Vec<u64> = (0..ctx.degree()).map(|_| rng.next_u64() % ctx.p()).collect();
    ctx.elem(&coeffs).unwrap()
}

#[test]
fn ring_axioms_on_ten_thousand_triples() {
    for (p, n) in [(2u64, 9usize), (3, 6), (13, 3), (7, 4)] {
        let ctx = FieldCtx::new(p, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xfeed ^ (p << 8) ^ n as u64);
        for _ in 0..10_000 {
            let a = random_elem(&ctx, &mut rng);
            let b = random_elem(&ctx, &mut rng);
            let c = random_elem(&ctx, &mut rng);
            assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
            assert_eq!(ctx.mul(&ctx.mul(&a, &b), &c), ctx.mul(&a, &ctx.mul(&b, &c)));
            assert_eq!(
                ctx.mul(&a, &ctx.add(&b, &c)),
                ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
            );
        }
    }
}

#[test]
fn fermat_for_extensions_is_exhaustive() {
    for (p, n) in [(2u64, 6usize), (3, 4), (5, 3), (7, 2), (61, 1), (2, 12)] {
        let ctx = FieldCtx::new(p, n).unwrap();
        let order = ctx.order();
        for x in ctx.elements() {
            assert_eq!(ctx.pow_u(&x, order as u128), x);
        }
    }
}

#[test]
fn subgroups_equal_the_power_kernels() {
    for (p, n) in [(2u64, 6usize), (3, 4), (5, 3), (7, 3), (3, 7)] {
        let ctx = FieldCtx::new(p, n).unwrap();
        let group = ctx.order() - 1;
        let mut divisors: Vec<u64> = (1..=group).filter(|d| group % d == 0).collect();
        if divisors.len() > 12 {
            divisors = divisors.into_iter().step_by(3).collect();
        }
        for d in divisors {
            let mu = ctx.roots_of_unity(d).unwrap();
            let listed: std::collections::BTreeSet<u64> =
                mu.elements(&ctx).map(|z| ctx.elem_index(&z)).collect();
            let kernel: std::collections::BTreeSet<u64> = ctx
                .elements()
                .skip(1)
                .filter(|x| ctx.pow_u(x, d as u128) == ctx.one())
                .map(|x| ctx.elem_index(&x))
                .collect();
            assert_eq!(listed, kernel, "p={p} n={n} d={d}");
            assert_eq!(listed.len() as u64, d);
        }
    }
}

#[test]
fn reconstruction_is_bit_identical() {
    for (p, n) in [(2u64, 9usize), (3, 6), (13, 3), (5, 5)] {
        let a = FieldCtx::new(p, n).unwrap();
        let b = FieldCtx::new(p, n).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.primitive(), b.primitive());
        assert_eq!(a.descriptor(), b.descriptor());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn inverse_cancels(coeffs in proptest::collection::vec(0u64..3, 6)) {
        let ctx = FieldCtx::new(3, 6).unwrap();
        let x = ctx.elem(&coeffs).unwrap();
        if !x.is_zero() {
            let inv = ctx.inv(&x).unwrap();
            prop_assert_eq!(ctx.mul(&x, &inv), ctx.one());
            prop_assert_eq!(ctx.inv(&inv).unwrap(), x);
        }
    }

    #[test]
    fn log_exp_round_trip(k in 0u64..342) {
        let ctx = FieldCtx::new(7, 3).unwrap();
        prop_assert_eq!(ctx.elem_log(&ctx.omega_pow(k)).unwrap(), k);
    }

    #[test]
    fn pow_is_a_homomorphism(i in 0u64..511, j in 0u64..511, e in 0u128..10_000) {
        let ctx = FieldCtx::new(2, 9).unwrap();
        let x = ctx.omega_pow(i);
        let y = ctx.omega_pow(j);
        prop_assert_eq!(
            ctx.pow_u(&ctx.mul(&x, &y), e),
            ctx.mul(&ctx.pow_u(&x, e), &ctx.pow_u(&y, e))
        );
    }
}
