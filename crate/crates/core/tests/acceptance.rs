//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every tolerance is pinned here, not computed.

use num_complex::Complex64;

use heunince::equations::{DcheParams, EquationParams, InceDcheParams, InceGsweParams};
use heunince::mathieu::{char_value_a, poole_solution, MathieuFamily, Sigma};
use heunince::recurrence::{
    solve_characteristic, CharacteristicProblem, FamilyId, FamilyParams, RecurrenceFamily,
    SolveOptions, Unknown,
};
use heunince::scattering::{
    boundary_report, map_inverse4, map_inverse6, radial_solve, B1Branch, PotentialParams,
};
use heunince::solutions::{
    asymptotic_check, build_pair, leaver_limit_consistency, NuSpec, SolutionFamily, SqrtSign,
};
use heunince::specialfn::{bessel_k, limit_identity_check, FnEvalOptions};
use heunince::transforms::{
    apply_rule, degenerate_reduce_dche, degenerate_reduce_ince_dche, DegenerateReduction, Rule,
};
use heunince::util::{c64, cdiv, cr, SplitMix64};
use heunince::verify::{eigen_oracle, ode_residual_analytic, sector_grid, tridiagonal_determinant};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Substitute a freshly solved B3 so the characteristic equation holds at nu.
fn with_solved_b3(
    rec_id: FamilyId,
    params: &EquationParams,
    nu: Complex64,
    seed: Complex64,
) -> EquationParams {
    let fp = match params {
        EquationParams::InceGswe(p) => FamilyParams::InceGswe(*p),
        EquationParams::InceDche(p) => FamilyParams::InceDche(*p),
        EquationParams::Dche(p) => FamilyParams::Dche(*p),
        _ => unreachable!(),
    };
    let rec = RecurrenceFamily::new(rec_id, fp).unwrap();
    let prob = CharacteristicProblem::new(rec, Unknown::B3 { fixed_nu: nu }).unwrap();
    let root = solve_characteristic(&prob, &[seed], &SolveOptions::default()).unwrap();
    match params {
        EquationParams::InceGswe(p) => {
            let mut p = *p;
            p.b3 = root.value;
            EquationParams::InceGswe(p)
        }
        EquationParams::InceDche(p) => {
            let mut p = *p;
            p.b3 = root.value;
            EquationParams::InceDche(p)
        }
        EquationParams::Dche(p) => {
            let mut p = *p;
            p.b3 = root.value;
            EquationParams::Dche(p)
        }
        _ => unreachable!(),
    }
}

struct FamilyCase {
    family: SolutionFamily,
    rec_id: FamilyId,
    two_sided: bool,
}

fn all_families() -> Vec<FamilyCase> {
    use FamilyId as R;
    use SolutionFamily as S;
    vec![
        FamilyCase { family: S::IgNu1, rec_id: R::IgNu1, two_sided: true },
        FamilyCase { family: S::IgNu2, rec_id: R::IgNu2, two_sided: true },
        FamilyCase { family: S::IgT1, rec_id: R::IgT1, two_sided: false },
        FamilyCase { family: S::IgT2, rec_id: R::IgT2, two_sided: false },
        FamilyCase { family: S::IgT3, rec_id: R::IgT3, two_sided: false },
        FamilyCase { family: S::IgT4, rec_id: R::IgT4, two_sided: false },
        FamilyCase { family: S::IdNu1, rec_id: R::IdNu1, two_sided: true },
        FamilyCase { family: S::IdNu2, rec_id: R::IdNu2, two_sided: true },
        FamilyCase { family: S::IdT1, rec_id: R::IdT1, two_sided: false },
        FamilyCase { family: S::IdT2, rec_id: R::IdT2, two_sided: false },
        FamilyCase { family: S::DcheNu1, rec_id: R::DcheB2Eq2, two_sided: true },
        FamilyCase { family: S::DcheNu2, rec_id: R::DcheB2Eq2, two_sided: true },
    ]
}

fn draw_params(rng: &mut SplitMix64, family: SolutionFamily) -> EquationParams {
    match family {
        SolutionFamily::IgNu1
        | SolutionFamily::IgNu2
        | SolutionFamily::IgT1
        | SolutionFamily::IgT2
        | SolutionFamily::IgT3
        | SolutionFamily::IgT4 => {
            let b1 = c64(rng.uniform(0.25, 0.7), rng.uniform(-0.12, 0.12));
            let b2 = c64(rng.uniform(1.15, 1.8), rng.uniform(-0.12, 0.12));
            let z0 = c64(rng.uniform(0.9, 1.1), rng.uniform(-0.05, 0.05));
            let q = c64(rng.uniform(0.5, 0.95), rng.uniform(-0.06, 0.06));
            EquationParams::InceGswe(InceGsweParams::new(b1, b2, cr(0.0), z0, q).unwrap())
        }
        SolutionFamily::IdNu1
        | SolutionFamily::IdNu2
        | SolutionFamily::IdT1
        | SolutionFamily::IdT2 => {
            let b1 = c64(rng.uniform(0.4, 0.9), rng.uniform(-0.2, 0.2));
            let b2 = c64(rng.uniform(1.15, 1.8), rng.uniform(-0.1, 0.1));
            let q = c64(rng.uniform(0.4, 0.8), rng.uniform(-0.06, 0.06));
            EquationParams::InceDche(InceDcheParams::new(b1, b2, cr(0.0), q).unwrap())
        }
        SolutionFamily::DcheNu1 | SolutionFamily::DcheNu2 => {
            let b1 = c64(rng.uniform(0.35, 0.7), rng.uniform(-0.15, 0.15));
            let eta = c64(rng.uniform(-0.3, 0.3), rng.uniform(-0.1, 0.1));
            let omega = c64(rng.uniform(0.7, 1.1), rng.uniform(-0.05, 0.05));
            EquationParams::Dche(DcheParams::new(b1, cr(2.0), cr(0.0), eta, omega).unwrap())
        }
    }
}

fn draw_nu(rng: &mut SplitMix64) -> Complex64 {
    // generic strip value away from the forbidden lattice
    loop {
        let nu = c64(rng.uniform(-0.38, 0.38), rng.uniform(0.05, 0.3));
        if (nu.re.abs() - 0.0).abs() > 0.03 && (nu.re.abs() - 0.5).abs() > 0.06 {
            return nu;
        }
    }
}

fn grids_for(
    family: SolutionFamily,
    params: &EquationParams,
) -> (Vec<Complex64>, Vec<Complex64>) {
    let scale = match params {
        EquationParams::InceGswe(p) => p.z0.norm(),
        _ => 1.0,
    };
    match family {
        SolutionFamily::IgNu1
        | SolutionFamily::IgNu2
        | SolutionFamily::IgT1
        | SolutionFamily::IgT2
        | SolutionFamily::IgT3
        | SolutionFamily::IgT4 => (
            sector_grid(params, 0.35 * scale, 2.6 * scale, -2.4, 2.4, 64, 1.5e-2 * scale),
            sector_grid(params, 1.5 * scale, 3.2 * scale, -2.4, 2.4, 64, 1.5e-2 * scale),
        ),
        _ => {
            let g = sector_grid(params, 0.6, 3.0, -2.4, 2.4, 64, 1.5e-2);
            (g.clone(), g)
        }
    }
}

// Criterion 1: for >= 12 randomized parameter sets per family, every built
// solution has max relative ODE residual < 1e-8 on a 64-point grid inside
// its convergence domain.
#[test]
fn criterion_01_ode_residual_suite() {
    let started = std::time::Instant::now();
    let mut rng = SplitMix64::new(0xacce9701);
    let mut worst: f64 = 0.0;
    for case in all_families() {
        for set in 0..12 {
            let base = draw_params(&mut rng, case.family);
            let nu = if case.two_sided { draw_nu(&mut rng) } else { cr(0.0) };
            let params = with_solved_b3(case.rec_id, &base, nu, cr(0.1));
            let (zero, inf) =
                build_pair(case.family, &params, &NuSpec::Value(nu), SqrtSign::Plus)
                    .unwrap_or_else(|e| {
                        panic!("build {} set {set}: {e}", case.family.name())
                    });
            let (gz, gi) = grids_for(case.family, &params);
            let rz = ode_residual_analytic(&params, &zero, &gz).unwrap();
            let ri = ode_residual_analytic(&params, &inf, &gi).unwrap();
            let m = rz.max_residual.max(ri.max_residual);
            worst = worst.max(m);
            assert!(
                m < 1e-8,
                "criterion 1 FAIL: {} set {set}: residual {m:.3e}",
                case.family.name()
            );
        }
    }
    let dt = started.elapsed().as_secs_f64();
    assert!(dt < 60.0, "criterion 1 FAIL: runtime {dt:.1}s exceeds 60s");
    println!(
        "criterion 01 PASS: 12 families x 12 sets, worst residual {worst:.2e}, {dt:.1}s"
    );
}

// Criterion 2: zero- and infinity-side members share one window bitwise;
// recurrence residual < 1e-12 at every interior index.
#[test]
fn criterion_02_pair_coefficient_sharing() {
    let mut rng = SplitMix64::new(0xacce9702);
    let mut worst: f64 = 0.0;
    for case in all_families() {
        let base = draw_params(&mut rng, case.family);
        let nu = if case.two_sided { draw_nu(&mut rng) } else { cr(0.0) };
        let params = with_solved_b3(case.rec_id, &base, nu, cr(0.1));
        let (zero, inf) =
            build_pair(case.family, &params, &NuSpec::Value(nu), SqrtSign::Plus).unwrap();
        assert_eq!(
            zero.window, inf.window,
            "criterion 2 FAIL: {} windows differ",
            case.family.name()
        );
        let fp = match &params {
            EquationParams::InceGswe(p) => FamilyParams::InceGswe(*p),
            EquationParams::InceDche(p) => FamilyParams::InceDche(*p),
            EquationParams::Dche(p) => FamilyParams::Dche(*p),
            _ => unreachable!(),
        };
        let rec = RecurrenceFamily::new(case.rec_id, fp).unwrap();
        let nu_used = zero.nu;
        let resid = zero.window.recurrence_residual(&rec, nu_used).unwrap();
        worst = worst.max(resid);
        assert!(
            resid < 1e-12,
            "criterion 2 FAIL: {} recurrence residual {resid:.3e}",
            case.family.name()
        );
    }
    println!("criterion 02 PASS: shared windows, worst recurrence residual {worst:.2e}");
}

// Criterion 3: continued-fraction roots match truncated-tridiagonal oracle
// roots within 1e-8, oracle stable under doubling of the truncation size.
#[test]
fn criterion_03_characteristic_oracle_equivalence() {
    let mut worst: f64 = 0.0;
    // Mathieu W1-W4 at q in {0.5, 1, 2}
    for fam in [
        MathieuFamily::W1,
        MathieuFamily::W2,
        MathieuFamily::W3,
        MathieuFamily::W4,
    ] {
        for q in [0.5, 1.0, 2.0] {
            let p = char_value_a(fam, cr(q), cr(0.0), &[], Sigma::One).unwrap();
            let rec_id = match fam {
                MathieuFamily::W1 => FamilyId::MathieuW1,
                MathieuFamily::W2 => FamilyId::MathieuW2,
                MathieuFamily::W3 => FamilyId::MathieuW3,
                MathieuFamily::W4 => FamilyId::MathieuW4,
                _ => unreachable!(),
            };
            let det_res = |m: i64| {
                move |a: Complex64| {
                    let fam = RecurrenceFamily::new(
                        rec_id,
                        FamilyParams::Mathieu { q: cr(q), a },
                    )?;
                    tridiagonal_determinant(&fam, cr(0.0), 0, m)
                }
            };
            let r40 = eigen_oracle(&det_res(40), &[p.a], 1e-12);
            let r80 = eigen_oracle(&det_res(80), &[p.a], 1e-12);
            assert!(
                !r40.is_empty() && !r80.is_empty(),
                "criterion 3 FAIL: oracle found no root for {fam:?} q={q}"
            );
            let stab = (r40[0] - r80[0]).norm();
            let dev = (r80[0] - p.a).norm();
            worst = worst.max(dev.max(stab));
            assert!(stab < 1e-8, "criterion 3 FAIL: oracle unstable {stab:.3e}");
            assert!(
                dev < 1e-8,
                "criterion 3 FAIL: {fam:?} q={q}: CF root {} vs oracle {} ({dev:.3e})",
                p.a,
                r80[0]
            );
        }
    }
    // nu-problems on 5 random Ince-DCHE parameter sets. B3 is drawn by
    // inverting the q -> 0 quadratic at a random strip target so the root
    // stays clear of the forbidden lattice (parameter sets where the root
    // collapses onto an integer/half-integer have no two-sided series).
    let mut rng = SplitMix64::new(0xacce9703);
    for _ in 0..5 {
        let b1 = c64(rng.uniform(0.3, 0.6), rng.uniform(-0.15, 0.15));
        let b2 = c64(rng.uniform(1.15, 1.7), rng.uniform(-0.1, 0.1));
        let q = c64(rng.uniform(0.3, 0.6), rng.uniform(-0.05, 0.05));
        let target = c64(rng.uniform(0.18, 0.32), rng.uniform(0.04, 0.15));
        let s_half = b2 / 2.0;
        let b3 = cr(0.25) - (target + cr(0.5)) * (target + cr(0.5)) - s_half + s_half * s_half;
        let p = InceDcheParams::new(b1, b2, b3, q).unwrap();
        let rec = RecurrenceFamily::new(FamilyId::IdNu1, FamilyParams::InceDche(p)).unwrap();
        let prob = CharacteristicProblem::new(rec, Unknown::Nu).unwrap();
        let cf_root =
            solve_characteristic(&prob, &[target, -target], &SolveOptions::default()).unwrap();
        let det_res = |m: i64| {
            move |x: Complex64| {
                let fam =
                    RecurrenceFamily::new(FamilyId::IdNu1, FamilyParams::InceDche(p))?;
                tridiagonal_determinant(&fam, x, -m, m)
            }
        };
        let r24 = eigen_oracle(&det_res(24), &[cf_root.value], 1e-12);
        let r48 = eigen_oracle(&det_res(48), &[cf_root.value], 1e-12);
        assert!(
            !r24.is_empty() && !r48.is_empty(),
            "criterion 3 FAIL: nu det-oracle found no root"
        );
        let stab = (r24[0] - r48[0]).norm();
        let dev = (r48[0] - cf_root.value).norm();
        worst = worst.max(dev.max(stab));
        assert!(
            stab < 1e-8 && dev < 1e-8,
            "criterion 3 FAIL: nu root {} vs oracle {} (dev {dev:.3e}, stab {stab:.3e})",
            cf_root.value,
            r48[0]
        );
    }
    println!("criterion 03 PASS: CF and determinant-oracle roots agree, worst {worst:.2e}");
}

// Criterion 4: Mathieu periods, parity, Poole period, odd-family map.
#[test]
fn criterion_04_mathieu_structure() {
    use std::f64::consts::PI;
    let q = cr(1.0);
    let u = c64(0.437, 0.0);
    // periods and parity
    for (fam, period, even) in [
        (MathieuFamily::W1, PI, true),
        (MathieuFamily::W2, 2.0 * PI, true),
        (MathieuFamily::W3, PI, false),
        (MathieuFamily::W4, 2.0 * PI, false),
    ] {
        let p = char_value_a(fam, q, cr(0.0), &[], Sigma::One).unwrap();
        let w0 = p.eval_trig(u).unwrap();
        let wp = p.eval_trig(u + cr(period)).unwrap();
        assert!(
            (w0 - wp).norm() < 1e-10,
            "criterion 4 FAIL: {fam:?} period deviation {:.3e}",
            (w0 - wp).norm()
        );
        let wm = p.eval_trig(-u).unwrap();
        let parity = if even { (w0 - wm).norm() } else { (w0 + wm).norm() };
        assert!(
            parity < 1e-12,
            "criterion 4 FAIL: {fam:?} parity deviation {parity:.3e}"
        );
    }
    // Poole l = 1, m = 3: period 6 pi
    let poole = poole_solution(1, 3, cr(0.8), &[]).unwrap();
    let w0 = poole.exponential.eval_trig(u).unwrap();
    let wp = poole.exponential.eval_trig(u + cr(6.0 * PI)).unwrap();
    let drift = (w0 - wp).norm();
    assert!(drift < 1e-8, "criterion 4 FAIL: Poole period deviation {drift:.3e}");
    // odd-family coefficient map b^(2)_n = (2n+2nu+1) c_n satisfies the
    // pair-2 recurrence when c_n satisfies the even one.
    let nu = cr(0.25);
    let even = char_value_a(MathieuFamily::NuEven, cr(0.8), nu, &[], Sigma::One).unwrap();
    let b3 = (2.0 * even.q - even.a) / 4.0;
    let ig = InceGsweParams::new(cr(-0.5), cr(1.0), b3, cr(1.0), cr(0.8)).unwrap();
    let pair2 = RecurrenceFamily::new(FamilyId::IgNu2, FamilyParams::InceGswe(ig)).unwrap();
    let w = &even.window;
    let b2_of = |n: i64| (cr(2.0 * n as f64) + 2.0 * nu + cr(1.0)) * w.b(n);
    let mut worst: f64 = 0.0;
    for n in (w.n_min() + 1)..w.n_max() {
        let (al, be, ga) = pair2.triple(n, nu).unwrap();
        let r = (al * b2_of(n + 1) + be * b2_of(n) + ga * b2_of(n - 1)).norm();
        let scale = (al * b2_of(n + 1)).norm()
            + (be * b2_of(n)).norm()
            + (ga * b2_of(n - 1)).norm();
        if scale > 1e-200 {
            worst = worst.max(r / scale);
        }
    }
    assert!(
        worst < 1e-12,
        "criterion 4 FAIL: odd-family map residual {worst:.3e}"
    );
    println!("criterion 04 PASS: periods, parity, Poole 6pi, odd map residual {worst:.2e}");
}

// Criterion 5: special-function identities.
#[test]
fn criterion_05_special_function_identities() {
    let o = FnEvalOptions::default();
    // order reflection over 100 random (lambda, xi)
    let mut rng = SplitMix64::new(0xacce9705);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let lam = rng.complex_in(-3.0, 3.0);
        let xi = c64(rng.uniform(-2.0, 2.0), rng.uniform(0.5, 9.0));
        let kp = bessel_k(lam, xi, &o).unwrap();
        let kn = bessel_k(-lam, xi, &o).unwrap();
        let dev = (kp - kn).norm() / kp.norm().max(1e-300);
        worst = worst.max(dev);
    }
    assert!(worst < 1e-11, "criterion 5 FAIL: K reflection {worst:.3e}");
    // K_{1/2} closed form
    let mut worst_half: f64 = 0.0;
    for xi in [c64(0.8, 0.3), c64(0.0, 4.0), c64(3.0, -2.0), c64(17.0, 5.0)] {
        let k = bessel_k(cr(0.5), xi, &o).unwrap();
        let exact = (cr(std::f64::consts::PI) / (2.0 * xi)).sqrt() * (-xi).exp();
        worst_half = worst_half.max((k - exact).norm() / exact.norm());
    }
    assert!(
        worst_half < 1e-12,
        "criterion 5 FAIL: K_1/2 closed form {worst_half:.3e}"
    );
    // difference-differential relations with central-difference derivatives
    let lam = c64(1.3, 0.4);
    let mut worst_rel: f64 = 0.0;
    for xi in [c64(0.0, 3.0), c64(1.0, 2.5), c64(0.5, -4.0)] {
        let k = |order: Complex64, x: Complex64| bessel_k(order, x, &o).unwrap();
        let h = 1e-4 * xi.norm();
        let dir = xi / xi.norm();
        let d2 = (k(lam, xi + dir * cr(h)) - 2.0 * k(lam, xi) + k(lam, xi - dir * cr(h)))
            / (dir * dir * cr(h * h));
        let lhs = 4.0 * d2;
        let rhs = k(lam + cr(2.0), xi) + 2.0 * k(lam, xi) + k(lam - cr(2.0), xi);
        worst_rel = worst_rel.max((lhs - rhs).norm() / rhs.norm());
        let d1 = (k(lam, xi + dir * cr(h)) - k(lam, xi - dir * cr(h))) / (dir * cr(2.0 * h));
        let lhs2 = 4.0 / xi * d1;
        let rhs2 = -4.0 * lam / (xi * xi) * k(lam, xi)
            + 2.0 / (lam - cr(1.0)) * (k(lam - cr(2.0), xi) - k(lam, xi));
        worst_rel = worst_rel.max((lhs2 - rhs2).norm() / rhs2.norm());
    }
    assert!(
        worst_rel < 1e-6,
        "criterion 5 FAIL: difference-differential relations {worst_rel:.3e}"
    );
    // confluence deviation O(1/a) with halving rate between a = 1e3 and 2e3
    let d1 = limit_identity_check(1e3, cr(2.0), cr(1.0)).unwrap();
    let d2 = limit_identity_check(2e3, cr(2.0), cr(1.0)).unwrap();
    let rate = d1 / d2;
    assert!(
        (rate - 2.0).abs() < 0.5,
        "criterion 5 FAIL: confluence halving rate {rate:.3} not within 25% of 2"
    );
    println!(
        "criterion 05 PASS: reflection {worst:.2e}, K1/2 {worst_half:.2e}, \
         App-B relations {worst_rel:.2e}, halving rate {rate:.3}"
    );
}

// Criterion 6: T1, T2, tau applied to built solutions satisfy the original
// equations; parameter involutions exact.
#[test]
fn criterion_06_transformation_rules() {
    let ig = EquationParams::InceGswe(
        InceGsweParams::new(c64(0.4, 0.05), c64(1.35, 0.1), cr(0.0), cr(1.0), c64(0.8, 0.05))
            .unwrap(),
    );
    let id = EquationParams::InceDche(
        InceDcheParams::new(c64(0.6, 0.1), c64(1.4, 0.1), cr(0.0), c64(0.7, 0.05)).unwrap(),
    );
    let mut worst: f64 = 0.0;
    // (rule, base params, family built on the transformed parameters)
    let cases: Vec<(Rule, EquationParams, SolutionFamily, FamilyId)> = vec![
        (Rule::T1, ig, SolutionFamily::IgT1, FamilyId::IgT1),
        (Rule::T2, ig, SolutionFamily::IgT1, FamilyId::IgT1),
        (Rule::Tau, id, SolutionFamily::IdT1, FamilyId::IdT1),
    ];
    for (rule, base, family, rec_id) in cases {
        let tr = apply_rule(rule, &base).unwrap();
        // solve the free parameter of the TRANSFORMED equation, then pull the
        // B3 map back to the base equation so both sides stay consistent:
        // instead solve B3 on the transformed side and invert the printed map.
        let solved_target = with_solved_b3(rec_id, &tr.new_params, cr(0.0), cr(0.1));
        // reconstruct base-side B3 from the rule's printed C3/D3/tau map
        let base_params = invert_b3_map(rule, &base, &solved_target);
        let tr2 = apply_rule(rule, &base_params).unwrap();
        let (zero, _) =
            build_pair(family, &tr2.new_params, &NuSpec::Value(cr(0.0)), SqrtSign::Plus)
                .unwrap();
        // f(z) = prefactor(z) * U_target(argmap(z)) must satisfy the base
        // equation; assemble its derivatives analytically from the rule's
        // power-law prefactor and the series derivatives.
        let grid = sector_grid(&base_params, 0.45, 2.2, -2.2, 2.2, 40, 2e-2);
        let z0 = match &tr2.new_params {
            EquationParams::InceGswe(p) => p.z0,
            _ => cr(0.0),
        };
        let coeffs = heunince::equations::ode_coefficients(&base_params);
        let mut max_r: f64 = 0.0;
        for &z in &grid {
            let w = tr2.map_arg(z);
            let e = match zero.eval_full(w, Some(w)) {
                Ok(e) => e,
                Err(_) => continue,
            };
            let wp = match tr2.arg_map {
                heunince::transforms::ArgMap::Identity => cr(1.0),
                heunince::transforms::ArgMap::ReflectAtZ0 => cr(-1.0),
            };
            let pref = tr2.prefactor(z);
            let l1 = tr2.pow_z / z
                + if tr2.pow_z_minus_z0.norm() > 0.0 {
                    tr2.pow_z_minus_z0 / (z - z0)
                } else {
                    cr(0.0)
                }
                - tr2.exp_inv_z / (z * z);
            let dl1 = -tr2.pow_z / (z * z)
                - if tr2.pow_z_minus_z0.norm() > 0.0 {
                    tr2.pow_z_minus_z0 / ((z - z0) * (z - z0))
                } else {
                    cr(0.0)
                }
                + 2.0 * tr2.exp_inv_z / (z * z * z);
            let l2 = l1 * l1 + dl1;
            let u = pref * e.value;
            let du = pref * (l1 * e.value + e.d1 * wp);
            let ddu = pref * (l2 * e.value + 2.0 * l1 * e.d1 * wp + e.d2 * wp * wp);
            let pc = coeffs.p_at(z).unwrap();
            let qc = coeffs.q_at(z).unwrap();
            let resid = (ddu + pc * du + qc * u).norm();
            let scale = ddu.norm().max((pc * du).norm()).max((qc * u).norm());
            max_r = max_r.max(resid / scale.max(f64::MIN_POSITIVE));
        }
        worst = worst.max(max_r);
        assert!(
            max_r < 1e-8,
            "criterion 6 FAIL: {rule:?} transformed residual {max_r:.3e}"
        );
    }
    // involutions exact
    for rule in [Rule::T1, Rule::T2, Rule::T3] {
        let twice = apply_rule(rule, &apply_rule(rule, &ig).unwrap().new_params).unwrap();
        let (a, b) = match (&ig, &twice.new_params) {
            (EquationParams::InceGswe(a), EquationParams::InceGswe(b)) => (*a, *b),
            _ => unreachable!(),
        };
        let dev = (a.b1 - b.b1)
            .norm()
            .max((a.b2 - b.b2).norm())
            .max((a.b3 - b.b3).norm())
            .max((a.q - b.q).norm());
        assert!(dev < 1e-13, "criterion 6 FAIL: {rule:?} involution {dev:.3e}");
    }
    let twice = apply_rule(Rule::Tau, &apply_rule(Rule::Tau, &id).unwrap().new_params).unwrap();
    let (a, b) = match (&id, &twice.new_params) {
        (EquationParams::InceDche(a), EquationParams::InceDche(b)) => (*a, *b),
        _ => unreachable!(),
    };
    assert!(
        (a.b1 - b.b1).norm() + (a.b2 - b.b2).norm() + (a.b3 - b.b3).norm() < 1e-13,
        "criterion 6 FAIL: tau involution"
    );
    println!("criterion 06 PASS: rule-transformed residual worst {worst:.2e}, involutions exact");
}

/// Given the rule and the transformed-side parameters with solved B3, rebuild
/// the base-side parameters whose printed map lands on them.
fn invert_b3_map(
    rule: Rule,
    base: &EquationParams,
    solved_target: &EquationParams,
) -> EquationParams {
    match (rule, base, solved_target) {
        (Rule::T1, EquationParams::InceGswe(b), EquationParams::InceGswe(t)) => {
            // C3 = B3 + (1 + h)(B2 + h) => B3 = C3 - (1+h)(B2+h)
            let h = b.h();
            let b3 = t.b3 - (cr(1.0) + h) * (b.b2 + h);
            EquationParams::InceGswe(
                InceGsweParams::new(b.b1, b.b2, b3, b.z0, b.q).unwrap(),
            )
        }
        (Rule::T2, EquationParams::InceGswe(b), EquationParams::InceGswe(t)) => {
            // D3 = B3 + h(h + B2 - 1)
            let h = b.h();
            let b3 = t.b3 - h * (h + b.b2 - cr(1.0));
            EquationParams::InceGswe(
                InceGsweParams::new(b.b1, b.b2, b3, b.z0, b.q).unwrap(),
            )
        }
        (Rule::Tau, EquationParams::InceDche(b), EquationParams::InceDche(t)) => {
            // tau: B3' = B3 + 2 - B2
            let b3 = t.b3 - cr(2.0) + b.b2;
            EquationParams::InceDche(InceDcheParams::new(b.b1, b.b2, b3, b.q).unwrap())
        }
        _ => unreachable!(),
    }
}

// Criterion 7: Leaver-limit consistency over z0 in {1e-2, 1e-3, 1e-4}.
#[test]
fn criterion_07_leaver_limit() {
    let b1 = c64(0.55, 0.08);
    let b2 = c64(1.35, 0.05);
    // B3 from the q -> 0 quadratic at nu ~ 0.22 + 0.10i keeps the phase
    // parameter clear of the forbidden lattice for the whole z0 schedule.
    let target = c64(0.22, 0.10);
    let s_half = b2 / 2.0;
    let b3 = cr(0.25) - (target + cr(0.5)) * (target + cr(0.5)) - s_half + s_half * s_half;
    let q = c64(0.75, 0.03);
    let z0s = [cr(1e-2), cr(1e-3), cr(1e-4)];
    let devs = leaver_limit_consistency(
        b1,
        b2,
        b3,
        q,
        &z0s,
        c64(1.6, 0.4),
        c64(2.3, 0.2),
        &[target],
    )
    .unwrap();
    assert!(
        devs[0] > devs[1] && devs[1] > devs[2],
        "criterion 7 FAIL: deviations not decreasing: {devs:?}"
    );
    assert!(
        devs[2] < 1e-3,
        "criterion 7 FAIL: final deviation {:.3e}",
        devs[2]
    );
    // infinity-side: same K basis, coefficients converge window-to-window
    let idp = InceDcheParams::new(b1, b2, b3, q).unwrap();
    let id_rec = RecurrenceFamily::new(FamilyId::IdNu1, FamilyParams::InceDche(idp)).unwrap();
    let id_prob = CharacteristicProblem::new(id_rec, Unknown::Nu).unwrap();
    let id_root =
        solve_characteristic(&id_prob, &[target], &SolveOptions::default()).unwrap();
    let (id_zero, _) = build_pair(
        SolutionFamily::IdNu1,
        &EquationParams::InceDche(idp),
        &NuSpec::Value(id_root.value),
        SqrtSign::Plus,
    )
    .unwrap();
    let mut prev = f64::INFINITY;
    for &z0 in &z0s {
        let igp = InceGsweParams::new(b1, b2, b3, z0, q).unwrap();
        let ig_rec = RecurrenceFamily::new(FamilyId::IgNu1, FamilyParams::InceGswe(igp)).unwrap();
        let ig_prob = CharacteristicProblem::new(ig_rec, Unknown::Nu).unwrap();
        let ig_root =
            solve_characteristic(&ig_prob, &[id_root.value], &SolveOptions::default()).unwrap();
        let (ig_zero, _) = build_pair(
            SolutionFamily::IgNu1,
            &EquationParams::InceGswe(igp),
            &NuSpec::Value(ig_root.value),
            SqrtSign::Plus,
        )
        .unwrap();
        let mut dev: f64 = (ig_root.value - id_root.value).norm();
        for n in -6..=6 {
            dev = dev.max((ig_zero.window.b(n) - id_zero.window.b(n)).norm());
        }
        assert!(dev < prev, "criterion 7 FAIL: window deviation not shrinking");
        prev = dev;
    }
    assert!(prev < 1e-3, "criterion 7 FAIL: final window deviation {prev:.3e}");
    println!(
        "criterion 07 PASS: value deviations {:?}, final window deviation {prev:.2e}",
        devs.iter().map(|d| format!("{d:.2e}")).collect::<Vec<_>>()
    );
}

// Criterion 8: subnormal Thome asymptotics, ratio drift < 1e-3 between radii
// 1e3 |z0| and 1e4 |z0|. The leading 1/sqrt(z) correction of the subnormal
// expansion carries the coefficient rho^2 + (B2-1) rho + B3 (rho = 1/4-B2/2);
// B3 is placed at its zero and the phase parameter solved, leaving only the
// O(1/z) term in the drift.
#[test]
fn criterion_08_subnormal_thome_asymptotics() {
    let b2 = c64(1.3, 0.04);
    let rho = cr(0.25) - b2 / 2.0;
    let b3 = -rho * (rho + b2 - cr(1.0));
    let igp = InceGsweParams::new(c64(0.4, 0.02), b2, b3, cr(1.0), cr(49.0)).unwrap();
    let rec = RecurrenceFamily::new(FamilyId::IgNu1, FamilyParams::InceGswe(igp)).unwrap();
    let prob = CharacteristicProblem::new(rec, Unknown::Nu).unwrap();
    let root = solve_characteristic(
        &prob,
        &[c64(0.2, 0.1), c64(0.3, -0.1), c64(0.1, 0.3)],
        &SolveOptions::default(),
    )
    .unwrap();
    let (_, inf) = build_pair(
        SolutionFamily::IgNu1,
        &EquationParams::InceGswe(igp),
        &NuSpec::Value(root.value),
        SqrtSign::Plus,
    )
    .unwrap();
    let ratios = asymptotic_check(&inf, &[1e3, 1e4]).unwrap();
    let drift = (cdiv(ratios[1].1, ratios[0].1) - cr(1.0)).norm();
    assert!(
        drift < 1e-3,
        "criterion 8 FAIL: Ince-GSWE ratio drift {drift:.3e}"
    );
    // Ince-DCHE pair on |z| > 0
    let b2d = c64(1.4, 0.05);
    let rhod = cr(0.25) - b2d / 2.0;
    let b3d = -rhod * (rhod + b2d - cr(1.0));
    let idp = InceDcheParams::new(c64(0.6, 0.05), b2d, b3d, cr(9.0)).unwrap();
    let recd = RecurrenceFamily::new(FamilyId::IdNu1, FamilyParams::InceDche(idp)).unwrap();
    let probd = CharacteristicProblem::new(recd, Unknown::Nu).unwrap();
    let rootd = solve_characteristic(
        &probd,
        &[c64(0.2, 0.1), c64(0.3, -0.1)],
        &SolveOptions::default(),
    )
    .unwrap();
    let (_, id_inf) = build_pair(
        SolutionFamily::IdNu1,
        &EquationParams::InceDche(idp),
        &NuSpec::Value(rootd.value),
        SqrtSign::Plus,
    )
    .unwrap();
    let ratios2 = asymptotic_check(&id_inf, &[1e3, 1e4]).unwrap();
    let drift2 = (cdiv(ratios2[1].1, ratios2[0].1) - cr(1.0)).norm();
    assert!(
        drift2 < 1e-3,
        "criterion 8 FAIL: Ince-DCHE ratio drift {drift2:.3e}"
    );
    println!("criterion 08 PASS: ratio drifts {drift:.2e} (IG), {drift2:.2e} (ID)");
}

// Criterion 9: engineered gamma_N = 0 cases yield finite series with
// residual < 1e-11. The engineering forces B2 + B1/z0 = 1 - N, so the finite
// series lives on the Bessel side (the zero-side hypergeometric basis is the
// excluded case the sibling pairs cover).
#[test]
fn criterion_09_quasi_polynomial_termination() {
    let mut worst: f64 = 0.0;
    for (n_target, b2) in [(4.0, 1.62), (5.0, 1.7), (7.0, 1.44)] {
        let b1 = cr(1.0 - n_target - b2);
        let base = EquationParams::InceGswe(
            InceGsweParams::new(b1, cr(b2), cr(0.3), cr(1.0), cr(0.9)).unwrap(),
        );
        let params = with_solved_b3(FamilyId::IgT1, &base, cr(0.0), cr(0.3));
        let inf = heunince::solutions::build_solution(
            SolutionFamily::IgT1,
            heunince::solutions::Variant::InfinitySide,
            &params,
            &NuSpec::Value(cr(0.0)),
            SqrtSign::Plus,
        )
        .unwrap();
        assert!(
            inf.window.is_terminated() && inf.window.n_max() == n_target as i64 - 1,
            "criterion 9 FAIL: window not finite at N = {n_target}"
        );
        let (_, gi) = grids_for(SolutionFamily::IgT1, &params);
        let ri = ode_residual_analytic(&params, &inf, &gi).unwrap();
        worst = worst.max(ri.max_residual);
        assert!(
            ri.max_residual < 1e-11,
            "criterion 9 FAIL: finite series residual {:.3e} at N = {n_target}",
            ri.max_residual
        );
    }
    println!("criterion 09 PASS: quasi-polynomial (Bessel-side) residual worst {worst:.2e}");
}

// Criterion 10: scattering mappings, nu root, boundary behaviors.
#[test]
fn criterion_10_scattering() {
    let started = std::time::Instant::now();
    // r^-6 neutral target, imaginary-B1 case: alpha2' - 6 a0 beta1' = +0.5
    let pot = PotentialParams {
        alpha1p: 1.0,
        alpha2p: 0.5,
        beta1p: 0.0,
        z_charge: 1,
        zprime: 1,
        energy: 0.5,
        l: 0,
    };
    let m6 = map_inverse6(&pot, B1Branch::Plus).unwrap();
    let params6 = EquationParams::InceDche(m6.params);
    let (zero6, inf6, nu6) = radial_solve(&params6, 1, m6.k, &[]).unwrap();
    // |f(nu)| < 1e-10
    let rec = RecurrenceFamily::new(FamilyId::IdNu1, FamilyParams::InceDche(m6.params)).unwrap();
    let prob = CharacteristicProblem::new(rec, Unknown::Nu).unwrap();
    let fres = prob.residual(nu6).unwrap().norm();
    assert!(fres < 1e-10, "criterion 10 FAIL: |f(nu)| = {fres:.3e}");
    // origin: |R| ~ sqrt(r); infinity: |r R| bounded
    let rep6 = boundary_report(
        &zero6,
        &inf6,
        &[0.1, 0.05, 0.025, 0.0125],
        &[40.0, 80.0, 160.0],
    )
    .unwrap();
    let orat: Vec<f64> = rep6.origin_ratios.iter().map(|&(_, v)| v).collect();
    let o_drift = (orat[3] / orat[2] - 1.0).abs();
    assert!(
        o_drift < 5e-3,
        "criterion 10 FAIL: origin sqrt(r) ratio drift {o_drift:.3e}"
    );
    let inorm: Vec<f64> = rep6.infinity_ratios.iter().map(|&(_, v)| v.norm()).collect();
    let i_drift = (inorm[2] / inorm[1] - 1.0).abs();
    assert!(
        i_drift < 1e-3,
        "criterion 10 FAIL: |r R| not stationary at infinity ({i_drift:.3e})"
    );
    // also the real-B1 branch must produce a root (alpha2'-6beta1' = -0.5)
    let pot_real = PotentialParams { alpha2p: -0.5, ..pot };
    let m6r = map_inverse6(&pot_real, B1Branch::Plus).unwrap();
    let (_, _, nu6r) = radial_solve(&EquationParams::InceDche(m6r.params), 1, m6r.k, &[]).unwrap();
    let rec_r =
        RecurrenceFamily::new(FamilyId::IdNu1, FamilyParams::InceDche(m6r.params)).unwrap();
    let prob_r = CharacteristicProblem::new(rec_r, Unknown::Nu).unwrap();
    assert!(prob_r.residual(nu6r).unwrap().norm() < 1e-10);

    // r^-4 case with a Coulomb term: |R(0+)| ~ 1 and Coulomb-modified
    // asymptotics r^(-+ i eta) e^(+- i k r)/r stripped ratio stationary.
    let pot4 = PotentialParams {
        alpha1p: 1.0,
        alpha2p: 0.0,
        beta1p: 0.0,
        z_charge: 2,
        zprime: 1,
        energy: 0.5,
        l: 0,
    };
    let m4 = map_inverse4(&pot4).unwrap();
    let params4 = EquationParams::Dche(m4.params);
    let (zero4, inf4, nu4) = radial_solve(&params4, 1, m4.k, &[]).unwrap();
    let rec4 = RecurrenceFamily::new(FamilyId::DcheB2Eq2, FamilyParams::Dche(m4.params)).unwrap();
    let prob4 = CharacteristicProblem::new(rec4, Unknown::Nu).unwrap();
    assert!(
        prob4.residual(nu4).unwrap().norm() < 1e-10,
        "criterion 10 FAIL: r^-4 |f(nu)|"
    );
    let rep4 =
        boundary_report(&zero4, &inf4, &[0.2, 0.1, 0.05], &[200.0, 400.0, 800.0]).unwrap();
    let or4: Vec<f64> = rep4.origin_ratios.iter().map(|&(_, v)| v).collect();
    let o4_drift = (or4[2] / or4[1] - 1.0).abs();
    assert!(
        o4_drift < 1e-3,
        "criterion 10 FAIL: |R(0+)| not stationary ({o4_drift:.3e})"
    );
    let in4: Vec<f64> = rep4.infinity_ratios.iter().map(|&(_, v)| v.norm()).collect();
    let i4_drift = (in4[2] / in4[1] - 1.0).abs();
    assert!(
        i4_drift < 1e-3,
        "criterion 10 FAIL: Coulomb-modified ratio drift {i4_drift:.3e}"
    );
    let dt = started.elapsed().as_secs_f64();
    assert!(dt < 30.0, "criterion 10 FAIL: runtime {dt:.1}s exceeds 30s");
    println!(
        "criterion 10 PASS: |f(nu)| {fres:.2e}, origin drift {o_drift:.2e}, \
         r^-4 Coulomb drift {i4_drift:.2e}, {dt:.1}s"
    );
}

// Criterion 11: degenerate reductions satisfy their equations; the Bessel
// order relation is exact.
#[test]
fn criterion_11_degenerate_reductions() {
    let o = FnEvalOptions::default();
    let grid: Vec<Complex64> = (0..14)
        .map(|k| Complex64::from_polar(0.7 + 0.17 * k as f64, 0.4 + 0.11 * k as f64))
        .collect();
    // Ince-DCHE with B1 = 0: modified Bessel reduction
    let (b2, b3, q) = (c64(0.7, 0.1), c64(0.3, -0.2), cr(1.0));
    let red = degenerate_reduce_ince_dche(cr(0.0), b2, b3, q).unwrap();
    match red {
        DegenerateReduction::ModifiedBessel { order_squared, .. } => {
            let expect = (cr(1.0) - b2) * (cr(1.0) - b2) - 4.0 * b3;
            assert!(
                (order_squared - expect).norm() == 0.0,
                "criterion 11 FAIL: order relation not exact"
            );
        }
        _ => panic!("criterion 11 FAIL: wrong reduction kind"),
    }
    let mut worst: f64 = 0.0;
    for &z in &grid {
        let (u, du, ddu) = red.solution_d2(z, &o).unwrap();
        let r = (z * z * ddu + b2 * z * du + (b3 + q * z) * u).norm();
        let scale = (z * z * ddu).norm().max(((b3 + q * z) * u).norm());
        worst = worst.max(r / scale);
    }
    assert!(worst < 1e-9, "criterion 11 FAIL: Bessel reduction residual {worst:.3e}");
    // DCHE with B1 = 0: confluent reduction
    let (b2, b3, eta, omega) = (c64(0.9, 0.05), c64(0.2, 0.1), cr(0.3), cr(1.1));
    let red2 = degenerate_reduce_dche(cr(0.0), b2, b3, eta, omega).unwrap();
    let mut worst2: f64 = 0.0;
    for &z in &grid {
        let (u, du, ddu) = red2.solution_d2(z, &o).unwrap();
        let r = (z * z * ddu
            + b2 * z * du
            + (b3 - 2.0 * eta * omega * z + omega * omega * z * z) * u)
            .norm();
        let scale = (z * z * ddu)
            .norm()
            .max(((b3 - 2.0 * eta * omega * z + omega * omega * z * z) * u).norm());
        worst2 = worst2.max(r / scale);
    }
    assert!(
        worst2 < 1e-9,
        "criterion 11 FAIL: confluent reduction residual {worst2:.3e}"
    );
    // Euler case q = B1 = 0
    let red3 = degenerate_reduce_ince_dche(cr(0.0), b2, b3, cr(0.0)).unwrap();
    let mut worst3: f64 = 0.0;
    for &z in &grid {
        let (u, du, ddu) = red3.solution_d2(z, &o).unwrap();
        let r = (z * z * ddu + b2 * z * du + b3 * u).norm();
        let scale = (z * z * ddu).norm().max((b3 * u).norm());
        worst3 = worst3.max(r / scale);
    }
    assert!(worst3 < 1e-9, "criterion 11 FAIL: Euler residual {worst3:.3e}");
    println!(
        "criterion 11 PASS: residuals {worst:.2e} (Bessel), {worst2:.2e} (confluent), \
         {worst3:.2e} (Euler); order relation exact"
    );
}

// The I constant is used by closures above.
#[allow(dead_code)]
fn _use_i() -> Complex64 {
    I
}
