mod common;

use approx::assert_abs_diff_eq;
use common::{close, diff_floor};
use e0_extremal::gfun::*;
use e0_extremal::numerics::{central_diff, linspace};
use proptest::prelude::*;

proptest! {
    #[test]
    fn kernel_monotone_and_concave_for_nonnegative_rho(rho in 0.0f64..10.0, z in 0.001f64..0.999) {
        prop_assert!(g_dz(rho, z).unwrap() <= 1e-12);
        let h = 1e-3f64.min(z).min(1.0 - z);
        let d2 = g(rho, z - h).unwrap() - 2.0 * g(rho, z).unwrap() + g(rho, z + h).unwrap();
        prop_assert!(d2 <= 1e-9);
    }

    #[test]
    fn kernel_monotone_and_convex_for_negative_rho(rho in -0.999f64..0.0, z in 0.001f64..0.999) {
        prop_assert!(g_dz(rho, z).unwrap() >= -1e-12);
        let h = 1e-3f64.min(z).min(1.0 - z);
        let d2 = g(rho, z - h).unwrap() - 2.0 * g(rho, z).unwrap() + g(rho, z + h).unwrap();
        prop_assert!(d2 >= -1e-9);
    }

    #[test]
    fn inverse_round_trip(rho in prop::sample::select(vec![-0.5, 0.5, 1.0, 2.0, 5.0]), u in 0.0f64..=1.0) {
        let (lo, hi) = t_range(rho);
        let t = lo + u * (hi - lo);
        let z = g_inv(rho, t).unwrap();
        prop_assert!((0.0..=1.0).contains(&z));
        // near z = 1 with large rho one ulp of z moves g by far more than
        // 1e-10, so ask only that t sits between g at the neighbouring doubles
        let at = |z: f64| g(rho, z.clamp(0.0, 1.0)).unwrap();
        let (a, b) = (at(z.next_down()), at(z.next_up()));
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assert!(t >= lo - 1e-10 && t <= hi + 1e-10, "t = {t}, g in [{lo}, {hi}]");
    }

    #[test]
    fn normalized_kernel_in_unit_interval(rho in -0.99f64..50.0, z in 0.0f64..=1.0) {
        prop_assume!(rho.abs() > 1e-6);
        let h = h_norm(rho, z).unwrap();
        prop_assert!((-1e-12..=1.0 + 1e-12).contains(&h));
    }
}

#[test]
fn rho_derivative_matches_finite_differences() {
    for rho in linspace(-0.9, 10.0, 20) {
        for z in linspace(0.0, 1.0, 20) {
            let fd = central_diff(|r| g(r, z).unwrap(), rho, 1e-6).unwrap();
            let an = g_drho(rho, z).unwrap();
            assert!(close(an, fd, 1e-6, diff_floor(1e-6)), "rho = {rho}, z = {z}: {an} vs {fd}");
        }
    }
}

#[test]
fn rho_max_at_least_three_across_tilts() {
    for z in linspace(0.01, 0.99, 50) {
        let r = rho_max(z).unwrap();
        assert!(r >= 3.0 - 1e-6, "z = {z}: {r}");
    }
}

#[test]
fn normalized_kernel_tends_to_its_unit_value() {
    // h(rho, z) -> h(1, z) as rho grows
    for z in [0.2, 0.5, 0.7796, 0.95] {
        let h1 = h_norm(1.0, z).unwrap();
        assert_abs_diff_eq!(h_norm(RHO_CAP, z).unwrap(), h1, epsilon = 1e-2);
        assert!((h_norm(RHO_CAP, z).unwrap() - h1).abs() < (h_norm(40.0, z).unwrap() - h1).abs());
    }
}

#[test]
fn sign_function_matches_curvature_of_composed_derivative() {
    // f~_rho'' has the sign of m(k, rho) for rho >= 0 and the opposite sign on (-1, 0)
    for rho in [0.5, 2.0, 20.0] {
        let all_positive = linspace(0.01, 0.99, 50).iter().all(|&k| m_fun(k, rho).unwrap() > 0.0);
        let all_negative = linspace(0.01, 0.99, 50).iter().all(|&k| m_fun(k, rho).unwrap() < 0.0);
        let (lo, hi) = t_range(rho);
        let n = 60;
        let h = (hi - lo) / (n + 1) as f64;
        let d2: Vec<f64> = (1..=n)
            .map(|i| {
                let t = lo + h * i as f64;
                f_tilde(rho, rho, t - h).unwrap() - 2.0 * f_tilde(rho, rho, t).unwrap()
                    + f_tilde(rho, rho, t + h).unwrap()
            })
            .collect();
        if all_negative {
            assert!(d2.iter().all(|&v| v <= 1e-9), "rho = {rho}");
        }
        if all_positive {
            assert!(d2.iter().all(|&v| v >= -1e-9), "rho = {rho}");
        }
        assert!(all_positive || all_negative, "rho = {rho} straddles rho_star");
    }
    for rho in [-0.5, -0.1] {
        assert!(linspace(0.01, 0.99, 50).iter().all(|&k| m_fun(k, rho).unwrap() < 0.0));
    }
}

#[test]
fn rho_star_values() {
    // high-precision reference roots
    for (k, r) in [(0.05, 3.1116161), (0.25, 3.0240009), (0.5, 3.0060044), (0.95, 3.0000329)] {
        assert_abs_diff_eq!(rho_star(k).unwrap(), r, epsilon = 1e-6);
    }
}
