//! Globally adaptive Gauss–Kronrod (7, 15) integration over a fixed set of
//! initial panels.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for the odd-indexed Kronrod nodes, centre last.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_6,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
pub(crate) struct Estimate {
    pub value: f64,
    pub error: f64,
    pub subdivisions: usize,
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// QUADPACK-style error rescaling of `|K15 - G7|`.
fn rescale_error(raw: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = raw.abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);

    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut res_abs = kronrod.abs();
    let mut fv = [(0.0, 0.0); 7];

    for (j, slot) in fv.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        *slot = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for (j, &(f1, f2)) in fv.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let scale = half.abs();
    Panel {
        lo,
        hi,
        value: kronrod * half,
        error: rescale_error((kronrod - gauss) * half, res_abs * scale, res_asc * scale),
    }
}

/// Integrates `f` over `[breaks[0], breaks[last]]`, starting from the panels
/// delimited by `breaks` and bisecting the worst panel until the summed
/// error estimate is at most `abs_tol`. The initial panels count against
/// `max_subdivisions`.
pub(crate) fn integrate<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    abs_tol: f64,
    max_subdivisions: usize,
) -> Result<Estimate> {
    debug_assert!(breaks.len() >= 2);
    let initial = breaks.len() - 1;
    if initial > max_subdivisions {
        return Err(Error::ToleranceNotReached {
            estimate: f64::INFINITY,
            requested: abs_tol,
            subdivisions: initial,
        });
    }

    let mut heap: BinaryHeap<Panel> = breaks
        .windows(2)
        .map(|w| kronrod15(&f, w[0], w[1]))
        .collect();
    let mut count = initial;
    let mut error: f64 = heap.iter().map(|p| p.error).sum();

    loop {
        if error <= abs_tol {
            // Re-sum to shed drift from the running total.
            error = heap.iter().map(|p| p.error).sum();
            if error <= abs_tol {
                let value = heap.iter().map(|p| p.value).sum();
                return Ok(Estimate {
                    value,
                    error,
                    subdivisions: count,
                });
            }
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.lo + worst.hi);
        if count >= max_subdivisions || !(mid > worst.lo && mid < worst.hi) {
            return Err(Error::ToleranceNotReached {
                estimate: error,
                requested: abs_tol,
                subdivisions: count,
            });
        }
        let left = kronrod15(&f, worst.lo, mid);
        let right = kronrod15(&f, mid, worst.hi);
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        count += 1;
    }
}
