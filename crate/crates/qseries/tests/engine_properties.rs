//! Property-based invariants of the series engine: index splitting and
//! shifting of q-shifted factorials, base inversion, sum-form consistency of
//! the very-well-poised series, continuation overlap, and the index-shift
//! identity for the regularized ₂φ₁.

mod common;

use common::{rel_err, Draw};
use num_complex::Complex64;
use proptest::prelude::*;
use qseries::{
    phi21, phi21_continued, phi21_regularized, phi_rs, qpochhammer, w_87, QBase, SeriesSpec,
};

fn re(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn complex_strategy(radius: f64) -> impl Strategy<Value = Complex64> {
    (-radius..radius, -radius..radius).prop_map(|(re, im)| Complex64::new(re, im))
}

proptest! {
    #[test]
    fn splitting_identity_for_nonnegative_indices(
        q in 0.15_f64..0.9,
        a in complex_strategy(2.0),
        m in 0_i64..25,
        n in 0_i64..25,
    ) {
        let base = QBase::new(q).unwrap();
        let lhs = qpochhammer(a, base, m + n).unwrap();
        let shifted = a * q.powi(m as i32);
        let rhs = qpochhammer(a, base, m).unwrap() * qpochhammer(shifted, base, n).unwrap();
        prop_assert!(rel_err(lhs, rhs) < 1e-12);
    }

    #[test]
    fn splitting_identity_for_mixed_indices(
        q in 0.2_f64..0.8,
        a in complex_strategy(2.0),
        m in 0_i64..15,
        n in -10_i64..10,
    ) {
        let base = QBase::new(q).unwrap();
        let lhs = qpochhammer(a, base, m + n);
        let shifted = a * q.powi(m as i32);
        let rhs_parts = (
            qpochhammer(a, base, m),
            qpochhammer(shifted, base, n),
        );
        // Negative indices can land on genuine poles; the identity is only
        // asserted where both sides exist.
        if let (Ok(lhs), (Ok(r1), Ok(r2))) = (lhs, rhs_parts) {
            prop_assert!(rel_err(lhs, r1 * r2) < 1e-11);
        }
    }

    #[test]
    fn index_shift_identity(
        q in 0.15_f64..0.85,
        a in complex_strategy(2.0),
        n in 0_i64..15,
    ) {
        prop_assume!(a.norm() > 0.05);
        let base = QBase::new(q).unwrap();
        // (a q^{-n}; q)_n = (q/a; q)_n (−a/q)^n q^{-n(n−1)/2}
        let lhs = qpochhammer(a * q.powi(-(n as i32)), base, n).unwrap();
        let rhs = qpochhammer(re(q) / a, base, n).unwrap()
            * (-a / q).powu(n as u32)
            * q.powi((-n * (n - 1) / 2) as i32);
        prop_assert!(rel_err(lhs, rhs) < 1e-12);
    }

    #[test]
    fn base_inversion_rewrite(
        q in 0.2_f64..0.85,
        a in complex_strategy(2.0),
        n in 0_i64..12,
    ) {
        prop_assume!(a.norm() > 0.05);
        let base = QBase::new(q).unwrap();
        // (α; q^{-1})_n computed directly in the inverse base …
        let qinv = 1.0 / q;
        let mut direct = Complex64::new(1.0, 0.0);
        for j in 0..n {
            direct *= 1.0 - a * qinv.powi(j as i32);
        }
        // … equals (α^{-1}; q)_n (−α)^n q^{-n(n−1)/2}.
        let rewritten = qpochhammer(a.inv(), base, n).unwrap()
            * (-a).powu(n as u32)
            * q.powi((-n * (n - 1) / 2) as i32);
        prop_assert!(rel_err(direct, rewritten) < 1e-11);
    }

    #[test]
    fn terminating_series_invariant_under_truncation_config(
        q in 0.2_f64..0.8,
        b in complex_strategy(0.9),
        c in complex_strategy(0.6),
        n in 0_i64..10,
        z in complex_strategy(3.0),
    ) {
        let base = QBase::new(q).unwrap();
        let spec = SeriesSpec::new(&[re(base.powi(-(n as i32))), b], &[c], base, z);
        let coarse = phi_rs(&spec, 1e-4, 64);
        let fine = phi_rs(&spec, 1e-15, 4096);
        if let (Ok(coarse), Ok(fine)) = (coarse, fine) {
            prop_assert_eq!(coarse, fine);
        }
    }

    #[test]
    fn well_poised_sum_form_matches_expanded_series(
        q in 0.25_f64..0.7,
        a1 in 0.05_f64..0.85,
        a4 in complex_strategy(0.8),
        a5 in complex_strategy(0.8),
        a6 in complex_strategy(0.8),
        a7 in complex_strategy(0.8),
        a8 in complex_strategy(0.8),
        z in complex_strategy(0.7),
    ) {
        let base = QBase::new(q).unwrap();
        let a1c = re(a1);
        let sum_form = w_87(a1c, a4, a5, a6, a7, a8, base, z, 1e-15, 2000);
        let sa = re(a1.sqrt());
        let expanded = phi_rs(
            &SeriesSpec::new(
                &[a1c, sa * q, -sa * q, a4, a5, a6, a7, a8],
                &[sa, -sa, a1c * q / a4, a1c * q / a5, a1c * q / a6, a1c * q / a7, a1c * q / a8],
                base,
                z,
            ),
            1e-15,
            2000,
        );
        if let (Ok(sum_form), Ok(expanded)) = (sum_form, expanded) {
            prop_assert!(rel_err(sum_form, expanded) < 1e-10);
        }
    }

    #[test]
    fn continuation_agrees_with_direct_sum_on_overlap(
        q in 0.2_f64..0.8,
        a in complex_strategy(1.5),
        b in complex_strategy(1.5),
        c in complex_strategy(0.8),
        z in complex_strategy(0.88)
            .prop_filter("direct sum must converge comfortably", |z| z.norm() < 0.88),
    ) {
        let base = QBase::new(q).unwrap();
        let cont = phi21_continued(a, b, c, base, z, 1e-15, 2000);
        let direct = phi21(a, b, c, base, z, 1e-15, 2000);
        if let (Ok(cont), Ok(direct)) = (cont, direct) {
            prop_assert!(rel_err(cont, direct) < 1e-11);
        }
    }
}

#[test]
fn seeded_splitting_and_shift_sweep_thousand_cases() {
    let mut rng = Draw::new(0x3_14_15);
    for case in 0..1000 {
        let q = rng.range(0.15, 0.85);
        let base = QBase::new(q).unwrap();
        let a = rng.complex_in_disk(2.0);
        if case % 2 == 0 {
            let m = rng.int(0, 20);
            let n = rng.int(0, 20);
            let lhs = qpochhammer(a, base, m + n).unwrap();
            let rhs = qpochhammer(a, base, m).unwrap()
                * qpochhammer(a * q.powi(m as i32), base, n).unwrap();
            assert!(rel_err(lhs, rhs) < 1e-12, "case {case}: splitting failed");
        } else {
            if a.norm() < 0.05 {
                continue;
            }
            let n = rng.int(0, 14);
            let lhs = qpochhammer(a * q.powi(-(n as i32)), base, n).unwrap();
            let rhs = qpochhammer(re(q) / a, base, n).unwrap()
                * (-a / q).powu(n as u32)
                * q.powi((-n * (n - 1) / 2) as i32);
            assert!(rel_err(lhs, rhs) < 1e-12, "case {case}: shift failed");
        }
    }
}

#[test]
fn index_shift_of_regularized_phi21_both_directions() {
    // (q^{1+n};q)_∞ ₂φ₁(a q^n, b; q^{1+n}; q, t)
    //   = (−1)^n q^{n(n−1)/2} (q/(bt))^n / ((a;q)_n (q/b;q)_n)
    //     · (q^{1−n};q)_∞ ₂φ₁(a, b q^{-n}; q^{1−n}; q, t)
    let mut rng = Draw::new(0x42_42);
    for _ in 0..40 {
        let q = rng.range(0.25, 0.7);
        let base = QBase::new(q).unwrap();
        let a = rng.complex_in_disk(0.8);
        let b = rng.complex_in_disk(0.8) + re(1.0) * 0.1;
        if b.norm() < 0.05 {
            continue;
        }
        let t = rng.complex_in_disk(0.6);
        if t.norm() < 0.05 {
            continue;
        }
        for n in -3_i64..=3 {
            let lhs = phi21_regularized(
                a * q.powi(n as i32),
                b,
                re(q.powi(1 + n as i32)),
                base,
                t,
                1e-15,
                4000,
            )
            .unwrap();

            let poch = qpochhammer(a, base, n).unwrap()
                * qpochhammer(re(q) / b, base, n).unwrap();
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            let pref = sign * q.powi((n * (n - 1) / 2) as i32)
                * (re(q) / (b * t)).powi(n as i32)
                / poch;
            let rhs = pref
                * phi21_regularized(
                    a,
                    b * q.powi(-(n as i32)),
                    re(q.powi(1 - n as i32)),
                    base,
                    t,
                    1e-15,
                    4000,
                )
                .unwrap();
            assert!(
                rel_err(lhs, rhs) < 1e-10,
                "index shift failed at n={n}, q={q}, a={a}, b={b}, t={t}: lhs={lhs}, rhs={rhs}"
            );
        }
    }
}
