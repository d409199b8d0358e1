//! Cross-agreement of the three decisive tests on whole (r, a) grids,
//! with the exhaustive scan as ground truth. The a samples deliberately
//! include coefficients with extra roots; the tests classify those too.

use permbinom::ext_field::FieldCtx;
use permbinom::perm_criteria::{brute_force_is_pp, hermite_is_pp, mu_d_is_pp, root_count};
use permbinom::sampling;
use permbinom::{Binomial, Witness};

fn configs() -> Vec<(u64, usize, u32, usize, bool)> {
    // (p, n, m, a samples, run the quadratic power-sum test too):
    // fields up to 4096 elements with several extension shapes
    vec![
        (2, 3, 1, 7, true),
        (3, 3, 1, 25, true),
        (2, 6, 2, 25, true),
        (2, 6, 3, 25, true),
        (2, 6, 1, 25, true),
        (5, 2, 1, 24, true),
        (7, 2, 1, 25, true),
        (3, 4, 1, 25, true),
        (3, 4, 2, 25, true),
        (5, 3, 1, 25, true),
        (3, 6, 2, 12, true),
        (2, 12, 4, 8, false),
    ]
}

#[test]
fn verdicts_coincide_on_sampled_grids() {
    for (p, n, m, a_count, with_hermite) in configs() {
        let ctx = FieldCtx::new(p, n).unwrap();
        let q = p.pow(m);
        let r_max = q * q + q + 1;
        let a_exps = sampling::sample_any_a_exponents(&ctx, a_count, 0xA9EE ^ (p << 16) ^ n as u64);
        for r in 1..=r_max {
            for &a_exp in &a_exps {
                let b = Binomial::new(&ctx, m, r, ctx.omega_pow(a_exp)).unwrap();
                let brute = brute_force_is_pp(&b).unwrap();
                let mu = mu_d_is_pp(&b).unwrap();
                assert_eq!(brute.is_pp, mu.is_pp, "p={p} n={n} m={m} r={r} a={a_exp}");
                if with_hermite {
                    let hermite = hermite_is_pp(&b).unwrap();
                    assert_eq!(brute.is_pp, hermite.is_pp, "p={p} n={n} m={m} r={r} a={a_exp}");
                }
                // the subgroup criterion is necessary: a bad gcd must
                // show up as a genuine collision
                if permbinom::arith::gcd_u64(r, q - 1) > 1 {
                    assert!(!brute.is_pp, "p={p} n={n} m={m} r={r} a={a_exp}");
                }
            }
        }
    }
}

#[test]
fn witnesses_re_validate() {
    let ctx = FieldCtx::new(2, 6).unwrap();
    let m = 2;
    let q = 4u64;
    for r in 1..=q * q + q + 1 {
        for a_exp in 0..ctx.group_order() {
            let b = Binomial::new(&ctx, m, r, ctx.omega_pow(a_exp)).unwrap();
            for v in [
                brute_force_is_pp(&b).unwrap(),
                mu_d_is_pp(&b).unwrap(),
                hermite_is_pp(&b).unwrap(),
            ] {
                assert_eq!(v.is_pp, v.witness.is_none());
                match v.witness {
                    Some(Witness::Collision { x1, x2 }) => {
                        assert_ne!(x1, x2);
                        assert_eq!(b.eval(&x1), b.eval(&x2));
                    }
                    Some(Witness::PowerSum { n, sum }) => {
                        assert!(!sum.is_zero());
                        assert_eq!(permbinom::closed_form::power_sum_direct(&b, n).unwrap(), sum);
                    }
                    Some(Witness::GcdViolation { gcd }) => {
                        assert!(gcd > 1 && (q - 1) % gcd == 0 && r % gcd == 0);
                    }
                    Some(Witness::MuCollision { z1, z2 }) => {
                        assert_ne!(z1, z2);
                        let g = |z: &permbinom::FieldElem| {
                            ctx.mul(
                                &ctx.pow_u(z, r as u128),
                                &ctx.pow_u(&ctx.add(z, b.a()), (q - 1) as u128),
                            )
                        };
                        assert_eq!(g(&z1), g(&z2));
                    }
                    Some(Witness::RootCount { .. }) => panic!("binomial tests count roots as collisions"),
                    None => {}
                }
            }
        }
    }
}

#[test]
fn permutations_cover_the_field() {
    let ctx = FieldCtx::new(7, 3).unwrap();
    for a_exp in sampling::sample_valid_a_exponents(&ctx, 7, 5, 3) {
        let b = Binomial::new(&ctx, 1, 1, ctx.omega_pow(a_exp)).unwrap();
        assert!(brute_force_is_pp(&b).unwrap().is_pp);
        let image: std::collections::BTreeSet<u64> = ctx
            .elements()
            .map(|x| ctx.elem_index(&b.eval(&x)))
            .collect();
        assert_eq!(image.len() as u64, ctx.order());
        assert_eq!(root_count(&b), 1);
    }
}
