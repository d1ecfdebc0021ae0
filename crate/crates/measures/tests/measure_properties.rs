//! Property-based invariants of the measure constructors: total mass one
//! across randomly drawn parameter regimes, lattice structure of the
//! discrete families, and positivity enforced by construction.

use measures::{
    asc_inverse_measure, aw_measure, integrate, lqjf_measure, QuadratureRule,
};
use num_complex::Complex64;
use orthopoly::{ASCParams, AWParams, LQJFParams};
use proptest::prelude::*;
use qseries::QBase;

fn re(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

proptest! {
    #[test]
    fn smooth_regimes_carry_unit_total_mass(
        q in 0.2_f64..0.7,
        a in -0.85_f64..0.85,
        b in -0.85_f64..0.85,
        c in -0.85_f64..0.85,
        d in -0.85_f64..0.85,
    ) {
        let base = QBase::new(q).unwrap();
        let measure = aw_measure(&AWParams::new(re(a), re(b), re(c), re(d), base)).unwrap();
        prop_assert!(measure.atoms.is_empty());
        let rule = QuadratureRule::trigonometric(128);
        let total = integrate(|_| Ok(re(1.0)), &measure, &rule).unwrap();
        prop_assert!((total.re - 1.0).abs() < 1e-9, "total = {}", total.re);
        prop_assert!(total.im.abs() < 1e-12);
    }

    #[test]
    fn inverse_lattice_total_mass_is_one_for_random_regimes(
        q in 0.15_f64..0.6,
        product in 1.05_f64..20.0,
        ratio in 0.05_f64..0.9,
        flip in proptest::bool::ANY,
    ) {
        // Solve a*b = product and b/a = ratio*q, which keeps every draw
        // inside the regime where the lattice masses sum to one.
        let a = (product / (ratio * q)).sqrt();
        let b = product / a;
        let sign = if flip { -1.0 } else { 1.0 };
        let base = QBase::new(q).unwrap();
        let params = ASCParams::inverse_base(sign * a, sign * b, base).unwrap();
        let measure = asc_inverse_measure(&params, 80).unwrap();
        let total: f64 = measure.atoms.iter().map(|atom| atom.mass).sum();
        prop_assert!((total - 1.0).abs() < 1e-11, "total = {total}");
        prop_assert!(measure.atoms.iter().all(|atom| atom.mass > 0.0));
        prop_assert!(measure.atoms.iter().all(|atom| sign * atom.location > 1.0));
    }

    #[test]
    fn bilateral_lattice_is_monotone_with_geometric_tail(
        s_mag in 1.5_f64..6.0,
        s_neg in proptest::bool::ANY,
        eps in 0.05_f64..0.45,
        beta in -3.0_f64..3.0,
    ) {
        let s = if s_neg { -s_mag } else { s_mag };
        let base = QBase::new(0.25).unwrap();
        let params = LQJFParams::conjugate_family(s, eps, beta, base);
        let measure = lqjf_measure(&params, 25).unwrap();
        prop_assert!(!measure.atoms.is_empty());
        prop_assert!(measure.tail_bound.is_infinite());
        let mut previous = 0.0;
        for atom in &measure.atoms {
            let reach = atom.location.abs();
            prop_assert!(reach > 1.0);
            prop_assert!(reach > previous);
            prop_assert!(atom.mass > 0.0);
            previous = reach;
        }
        // Far out on the lattice consecutive masses approach the fixed
        // ratio 1/c, the growth rate that makes any finite list a
        // truncation.
        let len = measure.atoms.len();
        let last_ratio = measure.atoms[len - 1].mass / measure.atoms[len - 2].mass;
        let limit = 1.0 / params.c.re;
        prop_assert!(
            (last_ratio / limit - 1.0).abs() < 0.01,
            "ratio {last_ratio} vs {limit}"
        );
    }
}
