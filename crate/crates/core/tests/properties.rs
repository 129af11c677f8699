use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use proptest::prelude::*;

use radtrig::antiderivative::{ClosedForm, Form};
use radtrig::{
    definite_integral, eval_integrand, globalize, integrate_adaptive, Cardioid, Family,
    IntegrandSpec, Method, Sign,
};

const FOUR_ROOT_TWO: f64 = 4.0 * SQRT_2;

fn spec() -> impl Strategy<Value = IntegrandSpec> {
    prop::sample::select(IntegrandSpec::ALL.to_vec())
}

fn local_form() -> impl Strategy<Value = Form> {
    prop::sample::select(Form::LOCAL.to_vec())
}

fn angle() -> impl Strategy<Value = f64> {
    -40.0..40.0f64
}

fn closed_methods() -> impl Strategy<Value = Method> {
    prop::sample::select(vec![
        Method::GlobalForm,
        Method::SplitLocal,
        Method::FloorForm,
    ])
}

proptest! {
    #[test]
    fn integrand_is_periodic_and_symmetric(s in spec(), x in angle()) {
        let f = |t| eval_integrand(s, t).unwrap();
        prop_assert!((f(x + 2.0 * PI) - f(x)).abs() < 1e-7);
        let mirror = match s.family {
            Family::Sine => PI - x,
            Family::Cosine => -x,
        };
        prop_assert!((f(mirror) - f(x)).abs() < 1e-7);
    }

    #[test]
    fn integrals_are_additive(s in spec(), m in closed_methods(), a in angle(), b in angle(), c in angle()) {
        let i = |p, q| definite_integral(s, p, q, m).unwrap();
        prop_assert!((i(a, b) + i(b, c) - i(a, c)).abs() < 1e-10);
        prop_assert!((i(a, b) + i(b, a)).abs() < 1e-10);
    }

    #[test]
    fn one_period_adds_four_root_two(s in spec(), m in closed_methods(), a in angle()) {
        let v = definite_integral(s, a, a + 2.0 * PI, m).unwrap();
        prop_assert!((v - FOUR_ROOT_TWO).abs() < 1e-11, "{}", v);
    }

    #[test]
    fn integral_grows_with_upper_limit(s in spec(), m in closed_methods(), a in angle(), d in 0.0..10.0f64, e in 0.0..1.0f64) {
        let lo = definite_integral(s, a, a + d, m).unwrap();
        let hi = definite_integral(s, a, a + d + e, m).unwrap();
        prop_assert!(lo >= -1e-12);
        prop_assert!(hi >= lo - 1e-12);
    }

    #[test]
    fn closed_form_methods_agree(s in spec(), a in angle(), b in angle()) {
        let g = definite_integral(s, a, b, Method::GlobalForm).unwrap();
        let sp = definite_integral(s, a, b, Method::SplitLocal).unwrap();
        let f = definite_integral(s, a, b, Method::FloorForm).unwrap();
        prop_assert!((g - sp).abs() < 1e-10 && (g - f).abs() < 1e-10, "{} {} {}", g, sp, f);
    }

    #[test]
    fn sine_is_shifted_cosine(sign in prop::sample::select(vec![Sign::Plus, Sign::Minus]), a in angle(), b in angle()) {
        // sin(y − π/2) = −cos y, so the sign flips
        let sine = definite_integral(IntegrandSpec::new(Family::Sine, sign), a, b, Method::FloorForm).unwrap();
        let cosine = definite_integral(
            IntegrandSpec::new(Family::Cosine, sign.flip()),
            a + FRAC_PI_2,
            b + FRAC_PI_2,
            Method::FloorForm,
        ).unwrap();
        prop_assert!((sine - cosine).abs() < 1e-10);
    }

    #[test]
    fn local_forms_differ_by_constants_between_zeros(s in spec(), f1 in local_form(), f2 in local_form(), x in angle(), d in 1e-3..0.5f64) {
        let (p, q) = (ClosedForm::new(s, f1), ClosedForm::new(s, f2));
        let clear = |cf: ClosedForm| cf.carrier().breakpoints(x - 1e-6, x + d + 1e-6).unwrap().is_empty();
        prop_assume!(clear(p) && clear(q));
        let diff = |t| p.eval(t).unwrap() - q.eval(t).unwrap();
        prop_assert!((diff(x) - diff(x + d)).abs() < 1e-12);
    }

    #[test]
    fn globalized_forms_step_by_four_root_two(s in spec(), f in local_form(), x in angle()) {
        let cf = ClosedForm::new(s, f);
        let lat = cf.carrier().lattice();
        let g = globalize(cf, 0.5 * (lat.zero(0) + lat.zero(1))).unwrap();
        let step = g.eval(x + 2.0 * PI).unwrap() - g.eval(x).unwrap();
        prop_assert!((step - FOUR_ROOT_TWO).abs() < 1e-10, "{}", step);
    }

    #[test]
    fn cardioid_length_is_linear_in_scale(a in 1e-3..1e3f64, s in spec(), m in closed_methods()) {
        let c = Cardioid::new(a, s.family, s.sign).unwrap();
        prop_assert!((c.length(m).unwrap() - 8.0 * a).abs() < 1e-12 * a.max(1.0) * 8.0);
    }

    #[test]
    fn arc_length_integrand_reduces_to_the_radical(a in 1e-2..1e2f64, s in spec(), t in angle()) {
        let c = Cardioid::new(a, s.family, s.sign).unwrap();
        let direct = c.arc_length_integrand(t).unwrap();
        let reduced = a * SQRT_2 * eval_integrand(s, t).unwrap();
        prop_assert!((direct - reduced).abs() < 1e-7 * a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_is_linear(p in -3.0..3.0f64, q in -3.0..3.0f64, w in 0.1..4.0f64, a in -5.0..5.0f64, b in -5.0..5.0f64) {
        const TOL: f64 = 1e-10;
        let f = |x: f64| (w * x).sin() + x * x;
        let g = |x: f64| (-x * x).exp();
        let both = integrate_adaptive(|x| p * f(x) + q * g(x), a, b, TOL).unwrap().value;
        let split = p * integrate_adaptive(f, a, b, TOL).unwrap().value
            + q * integrate_adaptive(g, a, b, TOL).unwrap().value;
        prop_assert!((both - split).abs() < 10.0 * TOL * (1.0 + p.abs() + q.abs()));
    }

    #[test]
    fn oracle_is_additive(s in spec(), a in -15.0..15.0f64, b in -15.0..15.0f64, c in -15.0..15.0f64) {
        const TOL: f64 = 1e-10;
        let f = |x| eval_integrand(s, x).unwrap();
        let i = |p, q| integrate_adaptive(f, p, q, TOL).unwrap().value;
        prop_assert!((i(a, b) + i(b, c) - i(a, c)).abs() < 10.0 * TOL);
    }

    #[test]
    fn oracle_matches_closed_forms(s in spec(), a in angle(), b in angle()) {
        let exact = definite_integral(s, a, b, Method::FloorForm).unwrap();
        let oracle = definite_integral(s, a, b, Method::Oracle).unwrap();
        prop_assert!((exact - oracle).abs() < 1e-8, "{} vs {}", exact, oracle);
    }
}

#[test]
fn oracle_error_shrinks_with_tolerance() {
    // exact values: ∫₀^{2π} √(1 + sin x) = 4√2, ∫₀^{2π}|sin x| = 4, ∫₀^1 eˣ = e − 1
    type Case<'a> = (&'a dyn Fn(f64) -> f64, f64, f64, f64);
    let cases: [Case; 3] = [
        (
            &|x: f64| (1.0 + x.sin()).sqrt(),
            0.0,
            2.0 * PI,
            FOUR_ROOT_TWO,
        ),
        (&|x: f64| x.sin().abs(), 0.0, 2.0 * PI, 4.0),
        (&f64::exp, 0.0, 1.0, std::f64::consts::E - 1.0),
    ];
    for (f, a, b, exact) in cases {
        for k in 2..=12 {
            let tol = 10f64.powi(-k);
            let r = integrate_adaptive(f, a, b, tol).unwrap();
            assert!(r.error_estimate <= tol);
            assert!(
                (r.value - exact).abs() <= tol.max(1e-14),
                "tol {tol:e}: {}",
                r.value - exact
            );
        }
    }
}
