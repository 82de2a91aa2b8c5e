//! Small numeric helpers: special functions, quadrature weights and sample
//! statistics used by the checkers and the Monte Carlo verdicts.
//!
//! Special functions are evaluated internally in `f64` (the coefficients are
//! double-precision fits) and converted back to the caller's scalar type.

use crate::scalar::Scalar;

/// Lanczos approximation (g = 7, 9 terms), accurate to ~1e-13 for x > 0.
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn ln_gamma_f64(x: f64) -> f64 {
    if x < 0.5 {
        // reflection formula
        std::f64::consts::PI.ln() - (std::f64::consts::PI * x).sin().ln() - ln_gamma_f64(1.0 - x)
    } else {
        let z = x - 1.0;
        let mut acc = LANCZOS[0];
        for (i, c) in LANCZOS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + 7.5;
        0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
    }
}

/// Natural log of the gamma function, `x > 0` (or non-integer negative).
pub fn ln_gamma<T: Scalar>(x: T) -> T {
    T::of(ln_gamma_f64(x.as_f64()))
}

/// Inverse standard normal CDF (Acklam's rational approximation, relative
/// error below 1.2e-9). `p` must lie strictly in (0, 1).
pub fn normal_quantile<T: Scalar>(p: T) -> T {
    T::of(normal_quantile_f64(p.as_f64()))
}

fn normal_quantile_f64(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile needs p in (0,1), got {p}");
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_690e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.02425;

    if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        -normal_quantile_f64(1.0 - p)
    }
}

/// Trapezoidal quadrature weights for a (not necessarily uniform) grid.
pub fn trapezoid_weights<T: Scalar>(grid: &[T]) -> Vec<T> {
    let n = grid.len();
    assert!(n >= 2, "trapezoid weights need at least two nodes");
    let half = T::of(0.5);
    let mut w = vec![T::zero(); n];
    for i in 0..n - 1 {
        let dx = (grid[i + 1] - grid[i]) * half;
        w[i] = w[i] + dx;
        w[i + 1] = w[i + 1] + dx;
    }
    w
}

/// Mean and standard error of a sample.
#[derive(Debug, Clone, Copy)]
pub struct SampleStats<T> {
    pub n: usize,
    pub mean: T,
    pub variance: T,
    pub se: T,
}

pub fn sample_stats<T: Scalar>(xs: &[T]) -> SampleStats<T> {
    let n = xs.len();
    assert!(n >= 2, "sample statistics need n >= 2");
    let nf = T::from_index(n);
    let mean = xs.iter().copied().sum::<T>() / nf;
    let ss = xs
        .iter()
        .map(|&x| {
            let d = x - mean;
            d * d
        })
        .sum::<T>();
    let variance = ss / (nf - T::one());
    SampleStats {
        n,
        mean,
        variance,
        se: (variance / nf).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_gamma_matches_known_values() {
        // gamma(0.5) = sqrt(pi), gamma(1) = 1, gamma(5) = 24
        assert!((ln_gamma(0.5f64) - std::f64::consts::PI.sqrt().ln()).abs() < 1e-12);
        assert!(ln_gamma(1.0f64).abs() < 1e-13);
        assert!((ln_gamma(5.0f64) - 24.0f64.ln()).abs() < 1e-12);
        // recurrence gamma(x+1) = x gamma(x)
        let x = 3.7f64;
        assert!((ln_gamma(x + 1.0) - (ln_gamma(x) + x.ln())).abs() < 1e-12);
    }

    #[test]
    fn normal_quantile_symmetry_and_anchors() {
        assert!(normal_quantile(0.5f64).abs() < 1e-12);
        assert!((normal_quantile(0.975f64) - 1.959_963_984_540_054).abs() < 1e-7);
        assert!((normal_quantile(0.995f64) - 2.575_829_303_548_901).abs() < 1e-7);
        let p = 0.123f64;
        assert!((normal_quantile(p) + normal_quantile(1.0 - p)).abs() < 1e-9);
    }

    #[test]
    fn trapezoid_weights_integrate_linear_exactly() {
        let grid = [0.0f64, 0.5, 1.5, 2.0];
        let w = trapezoid_weights(&grid);
        assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-15);
        // integral of x over [0,2] = 2
        let integral: f64 = grid.iter().zip(&w).map(|(x, w)| x * w).sum();
        assert!((integral - 2.0).abs() < 1e-15);
    }

    #[test]
    fn sample_stats_basics() {
        let s = sample_stats(&[1.0f64, 2.0, 3.0, 4.0]);
        assert_eq!(s.mean, 2.5);
        assert!((s.variance - 5.0 / 3.0).abs() < 1e-15);
    }
}
