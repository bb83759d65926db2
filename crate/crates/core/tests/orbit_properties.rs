use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crosscycle::cli::registry::{example, registry};
use crosscycle::crossing::{build_crossing_polys, solve_crossing};
use crosscycle::families::{random_center, PiecewiseSystem, SaddleFamily, SaddleParams, AffineMap};
use crosscycle::orbits::{
    emit_polyline, entering_orientation, DRIFT_FACTOR, integrate_to_axis, verify_cycle, ArcOptions, Axis, BBox, CycleVerification,
    Region, StepperOptions,
};
use crosscycle::poly::qi;

/// Integrator tolerance used by the default options.
const TOL: f64 = 1e-12;

fn registry_verifications() -> Vec<(&'static str, PiecewiseSystem, CycleVerification)> {
    registry()
        .iter()
        .flat_map(|e| {
            let sols = solve_crossing(&build_crossing_polys(&e.system).unwrap(), 1e-9).unwrap();
            sols.into_iter().map(move |s| (e.id, e.system.clone(), verify_cycle(&e.system, &s)))
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn center_arcs_conserve_the_integral_and_stay_in_region(seed in any::<u64>(), x0 in 0.05f64..3.0) {
        let center = random_center(&mut ChaCha8Rng::seed_from_u64(seed));
        let sys = PiecewiseSystem::from_params(
            center,
            SaddleFamily::N1,
            SaddleParams::new(qi(1), qi(-1), qi(0), qi(0)),
            AffineMap::identity(),
        )
        .unwrap();
        let side = &sys.center;
        let opts = ArcOptions::for_diameter(10.0 * x0);
        let Ok(orientation) = entering_orientation(&side.field, [x0, 0.0], Region::SigmaMinus, &opts) else {
            return Err(TestCaseError::reject("tangential start"));
        };
        let Ok(arc) = integrate_to_axis(&side.field, &side.integral, [x0, 0.0], Region::SigmaMinus, orientation, &opts) else {
            return Err(TestCaseError::reject("no return"));
        };
        prop_assert!(arc.h_drift <= DRIFT_FACTOR * TOL, "drift {:e}", arc.h_drift);
        prop_assert!(arc.region_violation <= 1e-7);
        prop_assert!(arc.end[0].min(arc.end[1]).abs() <= 1e-9, "end {:?} off the axes", arc.end);
    }
}

#[test]
fn n1_saddle_arc_reaches_the_published_partner() {
    let sys = &example("N1").unwrap().system;
    let opts = ArcOptions::for_diameter(3.0);
    let start = [0.387552, 0.0];
    let orientation = entering_orientation(&sys.saddle.field, start, Region::SigmaPlus, &opts).unwrap();
    let arc = integrate_to_axis(&sys.saddle.field, &sys.saddle.integral, start, Region::SigmaPlus, orientation, &opts).unwrap();
    assert_eq!(arc.end_axis, Axis::PositiveY);
    assert!((arc.end[1] - 2.38307).abs() <= 1e-4, "ended at {:?}", arc.end);
}

#[test]
fn n1_center_arcs_conserve_the_printed_integral() {
    for (id, _, v) in registry_verifications() {
        if id == "N1" {
            assert!(v.center.as_ref().unwrap().h_drift <= 1e-9);
        }
    }
}

#[test]
fn n1_outer_cycle_spans_its_crossing_points() {
    let sys = &example("N1").unwrap().system;
    let sols = solve_crossing(&build_crossing_polys(sys).unwrap(), 1e-9).unwrap();
    let v = verify_cycle(sys, &sols[3]);
    let b = BBox::of(&emit_polyline(&v).unwrap()).unwrap();
    assert!(b.min[0] < 0.0 && b.min[1] < 0.0, "cycle stays in one quadrant: {b:?}");
    assert!(b.max[0] >= 14.4234 - 1e-4 && b.max[1] >= 20.9765 - 1e-4, "{b:?}");
}

#[test]
fn registry_arcs_satisfy_the_orbit_invariants() {
    let mut failures = Vec::new();
    for (id, sys, v) in registry_verifications() {
        assert!(v.verified, "{id} ({}, {}) not verified: {:?}", v.x, v.y, v.diagnostic);
        let opts = ArcOptions::for_diameter(v.diameter);
        let partners = [[0.0, v.y], [v.x, 0.0]];
        for ((arc, side, region), partner) in [
            (v.saddle.as_ref().unwrap(), &sys.saddle, Region::SigmaPlus),
            (v.center.as_ref().unwrap(), &sys.center, Region::SigmaMinus),
        ]
        .into_iter()
        .zip(partners)
        {
            let label = format!("{id} ({:.4}, {:.4}) {region:?}", v.x, v.y);
            for p in [arc.start, arc.end] {
                assert!(p[0].min(p[1]).abs() <= 1e-9, "{label}: {p:?} off the axes");
            }
            assert!(arc.region_violation <= 1e-7, "{label}: penetration {:e}", arc.region_violation);
            let gap = (arc.end[0] - partner[0]).hypot(arc.end[1] - partner[1]) / v.diameter;
            assert!(gap <= 1e-5, "{label}: partner gap {gap:e}");

            if arc.h_drift > DRIFT_FACTOR * TOL {
                failures.push(format!("{label}: drift {:e}", arc.h_drift));
            }

            // Reversibility. Closure residuals of these cycles sit at the
            // rounding floor, so the bound also admits the integrator floor.
            let back = integrate_to_axis(&side.field, &side.integral, arc.end, region, arc.orientation.reversed(), &opts)
                .unwrap_or_else(|e| panic!("{label}: backward arc failed: {e}"));
            let miss = (back.end[0] - arc.start[0]).hypot(back.end[1] - arc.start[1]) / v.diameter;
            if miss > (2.0 * v.closure_residual).max(DRIFT_FACTOR * TOL) {
                failures.push(format!("{label}: backward miss {miss:e}, closure {:e}", v.closure_residual));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn tighter_tolerance_does_not_change_the_verdict() {
    let sys = &example("N32").unwrap().system;
    let sols = solve_crossing(&build_crossing_polys(sys).unwrap(), 1e-9).unwrap();
    let mut opts = crosscycle::orbits::VerifyOptions::default();
    let mut arc = ArcOptions::for_diameter(60.0);
    arc.stepper = StepperOptions { atol: 1e-13, rtol: 1e-13, ..arc.stepper };
    opts.arc = Some(arc);
    for s in &sols {
        let a = verify_cycle(sys, s);
        let b = crosscycle::orbits::verify_cycle_with(sys, s, &opts);
        assert!(a.verified && b.verified);
        // the diameter comes from sampled points, so agreement is approximate
        assert!((a.diameter - b.diameter).abs() <= 1e-5 * a.diameter, "{} vs {}", a.diameter, b.diameter);
    }
}
