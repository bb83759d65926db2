//! Dormand–Prince 5(4) stepper with Hairer's continuous extension.
//! Fields are autonomous, so the stage nodes never appear.

use crate::families::VectorField;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

type P = [f64; 2];

fn axpy(y: P, terms: &[(f64, P)], h: f64) -> P {
    let mut out = y;
    for &(c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

/// Accepted step with its dense-output coefficients.
#[derive(Debug, Clone, Copy)]
pub struct DenseStep {
    pub h: f64,
    pub start: P,
    pub end: P,
    r: [P; 5],
}

impl DenseStep {
    /// State at fraction `theta ∈ [0, 1]` of the step.
    pub fn at(&self, theta: f64) -> P {
        let t1 = 1.0 - theta;
        let mut out = [0.0; 2];
        for (i, o) in out.iter_mut().enumerate() {
            let r = |k: usize| self.r[k][i];
            *o = r(0) + theta * (r(1) + t1 * (r(2) + theta * (r(3) + t1 * r(4))));
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct StepperOptions {
    pub atol: f64,
    pub rtol: f64,
    pub h_min: f64,
    pub h_max: f64,
}

impl Default for StepperOptions {
    fn default() -> Self {
        StepperOptions { atol: 1e-12, rtol: 1e-12, h_min: 1e-14, h_max: f64::INFINITY }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StepFailure {
    /// Step size fell below the minimum.
    StepTooSmall,
    NonFinite,
}

/// Integrates `direction · F` from a state, one accepted step at a time.
pub struct Stepper<'a> {
    field: &'a dyn VectorField,
    direction: f64,
    opts: StepperOptions,
    y: P,
    k1: P,
    h: f64,
    pub rejected: usize,
}

impl<'a> Stepper<'a> {
    pub fn new(field: &'a dyn VectorField, direction: f64, y0: P, opts: StepperOptions) -> Self {
        let mut s = Stepper { field, direction, opts, y: y0, k1: [0.0; 2], h: 0.0, rejected: 0 };
        s.k1 = s.eval(y0);
        s.h = s.initial_step();
        s
    }

    fn eval(&self, y: P) -> P {
        let (u, v) = self.field.velocity(y[0], y[1]);
        [self.direction * u, self.direction * v]
    }

    fn scale(&self, a: P, b: P, i: usize) -> f64 {
        self.opts.atol + self.opts.rtol * a[i].abs().max(b[i].abs())
    }

    /// Starting step size following Hairer's heuristic.
    fn initial_step(&self) -> f64 {
        let norm = |v: P, y: P| -> f64 {
            ((v[0] / self.scale(y, y, 0)).powi(2) + (v[1] / self.scale(y, y, 1)).powi(2)).sqrt() / 2f64.sqrt()
        };
        let d0 = norm(self.y, self.y);
        let d1 = norm(self.k1, self.y);
        let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
        let y1 = axpy(self.y, &[(1.0, self.k1)], h0);
        let k2 = self.eval(y1);
        let d2 = norm([k2[0] - self.k1[0], k2[1] - self.k1[1]], self.y) / h0;
        let h1 = if d1.max(d2) <= 1e-15 { (h0 * 1e-3).max(1e-6) } else { (0.01 / d1.max(d2)).powf(0.2) };
        (100.0 * h0).min(h1).min(self.opts.h_max)
    }

    /// Takes one accepted step, adapting the step size.
    pub fn step(&mut self) -> Result<DenseStep, StepFailure> {
        loop {
            let h = self.h;
            if !(h >= self.opts.h_min) {
                return Err(StepFailure::StepTooSmall);
            }
            let y = self.y;
            let k1 = self.k1;
            let k2 = self.eval(axpy(y, &[(A21, k1)], h));
            let k3 = self.eval(axpy(y, &[(A31, k1), (A32, k2)], h));
            let k4 = self.eval(axpy(y, &[(A41, k1), (A42, k2), (A43, k3)], h));
            let k5 = self.eval(axpy(y, &[(A51, k1), (A52, k2), (A53, k3), (A54, k4)], h));
            let k6 = self.eval(axpy(y, &[(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)], h));
            let y1 = axpy(y, &[(A71, k1), (A73, k3), (A74, k4), (A75, k5), (A76, k6)], h);
            let k7 = self.eval(y1);
            let err_vec = axpy([0.0; 2], &[(E1, k1), (E3, k3), (E4, k4), (E5, k5), (E6, k6), (E7, k7)], h);
            let err = ((err_vec[0] / self.scale(y, y1, 0)).powi(2) + (err_vec[1] / self.scale(y, y1, 1)).powi(2)).sqrt()
                / 2f64.sqrt();
            if !err.is_finite() || !y1[0].is_finite() || !y1[1].is_finite() {
                self.h *= 0.1;
                self.rejected += 1;
                if !(self.h >= self.opts.h_min) {
                    return Err(StepFailure::NonFinite);
                }
                continue;
            }
            let fac = (0.9 * err.powf(-0.2)).clamp(0.2, 10.0);
            if err <= 1.0 {
                let ydiff = [y1[0] - y[0], y1[1] - y[1]];
                let bspl = [h * k1[0] - ydiff[0], h * k1[1] - ydiff[1]];
                let r4 = [ydiff[0] - h * k7[0] - bspl[0], ydiff[1] - h * k7[1] - bspl[1]];
                let r5 = axpy([0.0; 2], &[(D1, k1), (D3, k3), (D4, k4), (D5, k5), (D6, k6), (D7, k7)], h);
                let step = DenseStep { h, start: y, end: y1, r: [y, ydiff, bspl, r4, r5] };
                self.y = y1;
                self.k1 = k7;
                self.h = (h * fac).min(self.opts.h_max);
                return Ok(step);
            }
            self.h = h * fac.min(1.0);
            self.rejected += 1;
        }
    }
}
