use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crosscycle::crossing::{build_crossing_polys, count_report, grid_scan, solve_crossing, CrossingPolys};
use crosscycle::families::{random_system, SaddleFamily};
use crosscycle::poly::qi;

fn family() -> impl Strategy<Value = SaddleFamily> {
    prop::sample::select(SaddleFamily::ALL.to_vec())
}

fn random_polys(family: SaddleFamily, seed: u64) -> CrossingPolys {
    build_crossing_polys(&random_system(family, &mut ChaCha8Rng::seed_from_u64(seed))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn crossing_polynomials_are_separable_and_vanish_at_the_origin(family in family(), seed in any::<u64>()) {
        let cp = random_polys(family, seed);
        for p in [&cp.pl, &cp.pi] {
            prop_assert!(p.is_separable());
            prop_assert!(p.eval_exact(&qi(0), &qi(0)) == qi(0));
            prop_assert!(p.degx() <= 4 && p.degy() <= 4);
        }
        prop_assert!(cp.pl.degx() <= 2);
    }

    #[test]
    fn solutions_respect_the_bounds(family in family(), seed in any::<u64>()) {
        let cp = random_polys(family, seed);
        let report = count_report(&cp).unwrap();
        prop_assert!(report.admissible_count <= 7);
        prop_assert!(report.resultant_degree <= 8);
        for s in solve_crossing(&cp, 1e-9).unwrap() {
            prop_assert!(s.x > 0.0 && s.y > 0.0);
            for p in [&cp.pl, &cp.pi] {
                prop_assert!(p.eval(s.x, s.y).abs() <= 1e-9 * (1.0 + p.max_monomial(s.x, s.y)));
            }
        }
    }
}

/// Solver and grid oracle agree on 50 random systems per family.
///
/// The scan covers `(0, 50]²` at a coarser step than the acceptance run to
/// keep 500 systems affordable; roots within one step of the outer edge are
/// left out of the comparison on both sides.
#[test]
fn solver_matches_grid_scan_on_random_systems() {
    const EXTENT: f64 = 50.0;
    const STEP: f64 = 0.05;
    let cases: Vec<(SaddleFamily, u64)> =
        SaddleFamily::ALL.iter().flat_map(|&f| (0..50).map(move |i| (f, 0xc0ffee + i))).collect();
    let mismatches: Vec<String> = cases
        .par_iter()
        .filter_map(|&(family, seed)| {
            let cp = random_polys(family, seed);
            let inside = |x: f64, y: f64| x.max(y) < EXTENT - STEP;
            let solved: Vec<(f64, f64)> =
                solve_crossing(&cp, 1e-9).unwrap().iter().map(|s| (s.x, s.y)).filter(|&(x, y)| inside(x, y)).collect();
            let scanned: Vec<(f64, f64)> =
                grid_scan(&cp, EXTENT, STEP, 1e-6).into_iter().filter(|&(x, y)| inside(x, y)).collect();
            let agree = solved.len() == scanned.len()
                && solved.iter().zip(&scanned).all(|(a, b)| (a.0 - b.0).abs() <= 1e-6 && (a.1 - b.1).abs() <= 1e-6);
            (!agree).then(|| format!("{family} seed {seed}: solver {solved:?} grid {scanned:?}"))
        })
        .collect();
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}
