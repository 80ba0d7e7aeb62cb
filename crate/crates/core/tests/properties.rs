//! Property tests for the algebraic identities the series machinery leans on.

use proptest::prelude::*;

use heunince::equations::{EquationParams, InceGsweParams};
use heunince::specialfn::{bessel_k, gauss_f, FnEvalOptions};
use heunince::transforms::{apply_rule, Rule};
use heunince::util::{c64, cr};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // F(a,b;c;y) = (1-y)^(c-a-b) F(c-a,c-b;c;y) inside the unit disk.
    #[test]
    fn euler_transformation_identity(
        are in -1.5f64..1.5, aim in -1.0f64..1.0,
        bre in -1.5f64..1.5, bim in -1.0f64..1.0,
        cre in 1.0f64..3.0, cim in -0.8f64..0.8,
        ymag in 0.05f64..0.85, yarg in -3.0f64..3.0,
    ) {
        let o = FnEvalOptions::default();
        let (a, b, c) = (c64(are, aim), c64(bre, bim), c64(cre, cim));
        let y = cr(ymag) * c64(yarg.cos(), yarg.sin());
        let lhs = gauss_f(a, b, c, y, &o).unwrap();
        let rhs = (cr(1.0) - y).powc(c - a - b) * gauss_f(c - a, c - b, c, y, &o).unwrap();
        prop_assert!(
            (lhs - rhs).norm() <= 1e-10 * (1.0 + lhs.norm()),
            "lhs {lhs} rhs {rhs}"
        );
    }

    // K is even in its order.
    #[test]
    fn bessel_k_order_reflection(
        lre in -2.5f64..2.5, lim in -2.0f64..2.0,
        xre in -2.0f64..2.0, xim in 0.5f64..8.0,
    ) {
        let o = FnEvalOptions::default();
        let lam = c64(lre, lim);
        let xi = c64(xre, xim);
        let kp = bessel_k(lam, xi, &o).unwrap();
        let kn = bessel_k(-lam, xi, &o).unwrap();
        prop_assert!((kp - kn).norm() <= 1e-11 * kp.norm().max(1e-300));
    }

    // T1, T2, T3 are involutions on the parameter records.
    #[test]
    fn transformation_rules_involute(
        b1re in -1.0f64..1.0, b1im in -0.5f64..0.5,
        b2re in 0.3f64..2.5, b2im in -0.5f64..0.5,
        b3re in -1.0f64..1.0, qre in 0.2f64..2.0,
    ) {
        let p = InceGsweParams::new(
            c64(b1re, b1im),
            c64(b2re, b2im),
            cr(b3re),
            cr(1.0),
            cr(qre),
        )
        .unwrap();
        let params = EquationParams::InceGswe(p);
        for rule in [Rule::T1, Rule::T2, Rule::T3] {
            let twice = apply_rule(rule, &apply_rule(rule, &params).unwrap().new_params).unwrap();
            let back = match twice.new_params {
                EquationParams::InceGswe(b) => b,
                _ => unreachable!(),
            };
            let dev = (p.b1 - back.b1)
                .norm()
                .max((p.b2 - back.b2).norm())
                .max((p.b3 - back.b3).norm())
                .max((p.q - back.q).norm());
            prop_assert!(dev < 1e-12, "{rule:?} drifts by {dev}");
        }
    }
}
