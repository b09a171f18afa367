//! Small statistical helpers shared by the estimation modules.

/// Kahan compensated accumulator. Keeps the rounding error of long series
/// sums near one ulp of the total instead of growing with the term count.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let y = x - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Sample mean and standard error of the mean.
///
/// Returns `(mean, stderr)`; `stderr` is 0 for fewer than two samples.
pub fn mean_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let mut acc = KahanSum::new();
    for &x in xs {
        acc.add(x);
    }
    let mean = acc.value() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let mut sq = KahanSum::new();
    for &x in xs {
        let d = x - mean;
        sq.add(d * d);
    }
    let var = sq.value() / (n as f64 - 1.0);
    (mean, (var / n as f64).sqrt())
}

/// Sample standard deviation (n-1 denominator).
pub fn sample_std(xs: &[f64]) -> f64 {
    let (mean, _) = mean_stderr(xs);
    if xs.len() < 2 {
        return 0.0;
    }
    let mut sq = KahanSum::new();
    for &x in xs {
        let d = x - mean;
        sq.add(d * d);
    }
    (sq.value() / (xs.len() as f64 - 1.0)).sqrt()
}

/// Two-sided Wilson score interval for a binomial proportion.
///
/// `z` is the standard-normal quantile for the desired coverage
/// (1.959964 for 95%). Returns `(lo, hi)` with `lo <= hits/trials <= hi`.
pub fn wilson_interval(hits: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0, "wilson_interval needs trials > 0");
    let n = trials as f64;
    let p = hits as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = p + z2 / (2.0 * n);
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = ((center - half) / denom).max(0.0);
    let hi = ((center + half) / denom).min(1.0);
    (lo, hi)
}

/// One-sided Wilson lower confidence limit at quantile `z`.
pub fn wilson_lower(hits: u64, trials: u64, z: f64) -> f64 {
    if hits == 0 {
        return 0.0;
    }
    wilson_interval(hits, trials, z).0
}

/// z for a two-sided 95% interval.
pub const Z_95_TWO_SIDED: f64 = 1.959963984540054;
/// z for a one-sided 99% limit.
pub const Z_99_ONE_SIDED: f64 = 2.3263478740408408;
/// z for a one-sided 99.9% limit.
pub const Z_999_ONE_SIDED: f64 = 3.090232306167813;

/// Standard normal quantile function (Acklam's rational approximation,
/// absolute error below 1.2e-9 — plenty for sampling-noise envelopes).
pub fn normal_quantile(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "normal_quantile needs p in (0,1)");
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
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
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    }
}

/// Ordinary least squares line `y = intercept + slope * x`.
///
/// Returns `(slope, intercept, r_squared)`. Requires at least two points.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2, "linear_fit needs at least two points");
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    (slope, intercept, r2)
}

/// Round to 9 significant decimal digits. Used by every text emitter so
/// identical runs print identical bytes.
pub fn sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.8e}", x).parse().unwrap()
}
