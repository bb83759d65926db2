use std::time::{Duration, Instant};

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::config::RunConfig;
use super::registry::registry;
use super::CliError;
use crate::crossing::{appendix_p, build_crossing_polys, printed_n1_crossing, solve_crossing_with, CrossingSolution, SolveOptions};
use crate::families::{random_saddle, saddle_integral, sample_points, AffineMap, SaddleFamily};
use crate::orbits::{emit_polyline, pairwise_disjoint, verify_cycle_with, CycleVerification, VerifyOptions};

/// Published pairs are printed truncated to six significant figures.
pub const PUBLISHED_TOL: f64 = 1e-4;

#[derive(Debug, Clone, Serialize)]
pub struct SolveOutput {
    pub label: String,
    pub solutions: Vec<CrossingSolution>,
    /// Common zeros on the positive half-axes away from the origin.
    pub boundary: Vec<(f64, f64)>,
    pub resultant_degree: usize,
    pub y_max: f64,
}

pub fn cmd_solve(cfg: &RunConfig) -> Result<SolveOutput, CliError> {
    let cp = build_crossing_polys(&cfg.system)?;
    let report = solve_crossing_with(&cp, &cfg.solve)?;
    Ok(SolveOutput {
        label: cfg.label.clone(),
        resultant_degree: report.resultant_degree(),
        y_max: report.y_max,
        solutions: report.solutions,
        boundary: report.boundary,
    })
}

#[derive(Debug, Clone)]
pub struct VerifyOutput {
    pub solve: SolveOutput,
    pub verifications: Vec<CycleVerification>,
}

impl VerifyOutput {
    pub fn all_verified(&self) -> bool {
        self.verifications.iter().all(|v| v.verified)
    }

    /// Closed polylines of the verified cycles, in solution order.
    pub fn polylines(&self) -> Vec<Vec<[f64; 2]>> {
        self.verifications.iter().filter_map(|v| emit_polyline(v).ok()).collect()
    }
}

fn verify_options(cfg: &RunConfig, sol: &CrossingSolution) -> VerifyOptions {
    VerifyOptions { arc: Some(cfg.arc_options(sol.x.hypot(sol.y))), ..cfg.verify }
}

/// Solves and integrates every solution; verifications run concurrently.
pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifyOutput, CliError> {
    let solve = cmd_solve(cfg)?;
    let verifications =
        solve.solutions.par_iter().map(|s| verify_cycle_with(&cfg.system, s, &verify_options(cfg, s))).collect();
    Ok(VerifyOutput { solve, verifications })
}

/// SVG of the verified cycles, or `None` when there is nothing to draw.
pub fn cmd_render(cfg: &RunConfig, zoom: bool) -> Result<(VerifyOutput, Option<String>), CliError> {
    let out = cmd_verify(cfg)?;
    let svg = super::svg::render_svg(&cfg.label, &out.polylines(), zoom);
    Ok((out, svg))
}

#[derive(Debug, Clone, Serialize)]
pub struct AppendixReport {
    pub family: SaddleFamily,
    pub draws: usize,
    pub points: usize,
    pub seed: u64,
    pub max_relative_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub note: Option<String>,
}

/// Compares the generated saddle crossing polynomial with the closed form on
/// random valid parameter draws.
pub fn cmd_check_appendix(family: SaddleFamily, seed: u64, draws: usize) -> AppendixReport {
    const POINTS: usize = 25;
    const TOL: f64 = 1e-9;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for draw in 0..draws {
        let (params, mut affine) = random_saddle(family, &mut rng);
        if family == SaddleFamily::N1 {
            affine = AffineMap::identity();
        }
        // the N1 closed form follows the printed normal-form integral, which
        // differs from the generated one by (a² − a)/(2b)·x²
        let generated = if family == SaddleFamily::N1 {
            Ok(printed_n1_crossing(&params))
        } else {
            saddle_integral(family, &params, &affine).map(|h| crate::crossing::axis_difference(&h))
        };
        let closed = appendix_p(family, &params, &affine);
        let (Ok(g), Ok(c)) = (generated, closed) else {
            worst = f64::INFINITY;
            continue;
        };
        for (x, y) in sample_points(seed.wrapping_add(draw as u64 + 1), POINTS, 2.0) {
            let (gv, cv) = (g.eval(x, y), c.eval(x, y));
            let scale = gv.abs().max(cv.abs());
            let dev = if scale == 0.0 { 0.0 } else { (gv - cv).abs() / scale };
            worst = worst.max(if dev.is_nan() { f64::INFINITY } else { dev });
        }
    }
    AppendixReport {
        family,
        draws,
        points: POINTS,
        seed,
        max_relative_deviation: worst,
        tolerance: TOL,
        pass: worst <= TOL,
        note: (family == SaddleFamily::N1)
            .then(|| "closed form has no affine parameters; compared with the printed normal-form integral under the identity map".to_string()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExampleSummary {
    pub id: String,
    pub family: Option<SaddleFamily>,
    pub admissible_count: usize,
    pub resultant_degree: usize,
    /// At most seven admissible solutions and resultant degree at most eight.
    pub bound_ok: bool,
    /// Largest coordinate error against the published pairs, when the
    /// counts agree.
    pub max_deviation: Option<f64>,
    pub matched: bool,
    pub verified: usize,
    pub nested: bool,
    pub expected_pairs: usize,
    pub solutions: Vec<(f64, f64)>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl ExampleSummary {
    pub fn pass(&self) -> bool {
        self.matched && self.bound_ok && self.verified == self.admissible_count && self.nested
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproduceReport {
    pub examples: Vec<ExampleSummary>,
    pub matched: usize,
    pub verified: usize,
    pub total_pairs: usize,
    #[serde(skip)]
    pub runtime: Duration,
}

impl ReproduceReport {
    /// Exit status: mismatches dominate verification failures.
    pub fn status(&self) -> Result<(), CliError> {
        let bad: Vec<_> = self.examples.iter().filter(|e| !(e.matched && e.bound_ok)).map(|e| e.id.as_str()).collect();
        if !bad.is_empty() {
            return Err(CliError::Mismatch(format!("examples {} differ from the published pairs", bad.join(", "))));
        }
        let unverified: Vec<_> = self.examples.iter().filter(|e| !e.pass()).map(|e| e.id.as_str()).collect();
        if !unverified.is_empty() {
            return Err(CliError::Verification(format!("examples {} have unverified or crossing cycles", unverified.join(", "))));
        }
        Ok(())
    }
}

fn reproduce_one(cfg: &RunConfig) -> Result<ExampleSummary, CliError> {
    let t = Instant::now();
    let expected = cfg.expected.unwrap_or_default();
    let out = cmd_verify(cfg)?;
    let sols = &out.solve.solutions;
    let count = sols.len();
    let max_deviation = (count == expected.len()).then(|| {
        sols.iter().zip(expected.iter()).map(|(s, e)| (s.x - e.0).abs().max((s.y - e.1).abs())).fold(0.0, f64::max)
    });
    Ok(ExampleSummary {
        id: cfg.label.clone(),
        family: cfg.family,
        admissible_count: count,
        resultant_degree: out.solve.resultant_degree,
        bound_ok: count <= 7 && out.solve.resultant_degree <= crate::crossing::solve::BEZOUT_BOUND,
        matched: max_deviation.is_some_and(|d| d <= PUBLISHED_TOL),
        max_deviation,
        verified: out.verifications.iter().filter(|v| v.verified).count(),
        nested: pairwise_disjoint(&out.polylines()),
        expected_pairs: expected.len(),
        solutions: sols.iter().map(|s| (s.x, s.y)).collect(),
        runtime: t.elapsed(),
    })
}

/// Runs the registry examples `ids` (all when empty) in parallel.
pub fn cmd_reproduce(ids: &[String], solve: &SolveOptions) -> Result<ReproduceReport, CliError> {
    let t = Instant::now();
    let configs: Vec<RunConfig> = if ids.is_empty() {
        registry().iter().map(|e| RunConfig::for_example(e.id)).collect::<Result<_, _>>()?
    } else {
        ids.iter().map(|id| RunConfig::for_example(id)).collect::<Result<_, _>>()?
    };
    let examples: Vec<ExampleSummary> = configs
        .into_par_iter()
        .map(|mut cfg| {
            cfg.solve = *solve;
            reproduce_one(&cfg)
        })
        .collect::<Result<_, _>>()?;
    Ok(ReproduceReport {
        matched: examples.iter().filter(|e| e.matched).map(|e| e.admissible_count).sum(),
        verified: examples.iter().map(|e| e.verified).sum(),
        total_pairs: examples.iter().map(|e| e.expected_pairs).sum(),
        examples,
        runtime: t.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn appendix_check_on_a_few_draws() {
        let r = cmd_check_appendix(SaddleFamily::N2, 3, 5);
        assert!(r.pass && r.note.is_none(), "{r:?}");
        let r = cmd_check_appendix(SaddleFamily::N1, 3, 5);
        assert!(r.pass && r.note.is_some());
    }

    #[test]
    fn solve_registry_example() {
        let cfg = RunConfig::for_example("N62").unwrap();
        let out = cmd_solve(&cfg).unwrap();
        assert_eq!(out.solutions.len(), 4);
        assert!((out.solutions[0].y - 0.0111834).abs() < 1e-4);
    }
}
