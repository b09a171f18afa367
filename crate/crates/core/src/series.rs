//! Certified truncated-series arithmetic.
//!
//! Moment computations bound their truncation error with monotone integral
//! comparisons: for a positive, decreasing, convex integrand `f`,
//!
//! ```text
//! int_M^inf f + f(M)/2  <=  sum_{k>=M} f(k)  <=  int_{M-1/2}^inf f
//! ```
//!
//! (trapezoid overestimates integrals of convex functions; the midpoint
//! rule underestimates them). The midpoint of that sandwich is the tail
//! estimate and half its width is the certified error.

/// A value together with a rigorous absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certified {
    pub value: f64,
    pub error: f64,
}

impl Certified {
    pub fn exact(value: f64) -> Self {
        Certified { value, error: 0.0 }
    }

    pub fn new(value: f64, error: f64) -> Self {
        Certified { value, error: error.abs() }
    }

    pub fn add(self, other: Certified) -> Certified {
        Certified::new(self.value + other.value, self.error + other.error)
    }

    pub fn sub(self, other: Certified) -> Certified {
        Certified::new(self.value - other.value, self.error + other.error)
    }

    pub fn scale(self, c: f64) -> Certified {
        Certified::new(self.value * c, self.error * c.abs())
    }

    /// Quotient with first-order error propagation, inflated to stay
    /// conservative for the small relative errors we deal in.
    pub fn div(self, den: Certified) -> Certified {
        assert!(den.value.abs() > den.error, "division by interval containing zero");
        let v = self.value / den.value;
        let e = (self.error + v.abs() * den.error) / (den.value.abs() - den.error);
        Certified::new(v, e * 1.0000000001 + 1e-300)
    }
}

/// Relative floating-point slack added to every tail estimate. The actual
/// rounding error of a few dozen f64 operations is orders of magnitude
/// smaller.
const FP_SLACK: f64 = 1e-13;

/// Certified tail `sum_{k>=m} k^{-a}` for `a > 1`, `m >= 2`.
pub fn power_tail(a: f64, m: u64) -> Certified {
    assert!(a > 1.0, "power_tail needs a > 1");
    assert!(m >= 2, "power_tail needs m >= 2");
    let m = m as f64;
    let integral = |y: f64| y.powf(1.0 - a) / (a - 1.0);
    let f_m = m.powf(-a);
    let lo = integral(m) + 0.5 * f_m;
    let hi = integral(m - 0.5);
    let mid = 0.5 * (lo + hi);
    Certified::new(mid, 0.5 * (hi - lo) + FP_SLACK * mid)
}

/// Certified tail `sum_{k>=m} ln(k) * k^{-a}` for `a >= 1/2`.
///
/// `ln(x) * x^{-a}` is decreasing and convex once `ln x > (2a+1)/(a(a+1))`;
/// the start index must clear that threshold.
pub fn log_power_tail(a: f64, m: u64) -> Certified {
    assert!(a > 1.0, "log_power_tail needs a > 1");
    let mf = m as f64;
    assert!(
        (mf - 0.5).ln() * a * (a + 1.0) > 2.0 * a + 1.0,
        "log_power_tail start index too small for convexity"
    );
    let integral = |y: f64| {
        let c = a - 1.0;
        y.powf(-c) * (y.ln() / c + 1.0 / (c * c))
    };
    let f_m = mf.ln() * mf.powf(-a);
    let lo = integral(mf) + 0.5 * f_m;
    let hi = integral(mf - 0.5);
    let mid = 0.5 * (lo + hi);
    Certified::new(mid, 0.5 * (hi - lo) + FP_SLACK * mid)
}

/// Certified Riemann zeta value, `s > 1`.
pub fn zeta(s: f64) -> Certified {
    assert!(s > 1.0, "zeta needs s > 1");
    let m: u64 = 4096;
    let mut head = crate::stats::KahanSum::new();
    for k in 1..m {
        head.add((k as f64).powf(-s));
    }
    Certified::new(head.value(), FP_SLACK * head.value()).add(power_tail(s, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force partial sum plus a crude remainder cap, used as the
    /// independent oracle for the certified tails.
    fn brute_tail(f: impl Fn(f64) -> f64, m: u64, terms: u64) -> (f64, f64) {
        let mut acc = crate::stats::KahanSum::new();
        for k in m..m + terms {
            acc.add(f(k as f64));
        }
        // remainder after `terms` more values, crude decreasing-sum cap
        let rem_cap = f((m + terms) as f64) * (m + terms) as f64;
        (acc.value(), rem_cap)
    }

    #[test]
    fn power_tail_brackets_truth() {
        for &(a, m) in &[(2.5f64, 10u64), (2.0, 100), (1.5, 1000), (4.0, 7), (1.1, 5000)] {
            let cert = power_tail(a, m);
            let (partial, rem_cap) = brute_tail(|x| x.powf(-a), m, 20_000_000);
            assert!(
                (cert.value - partial).abs() <= cert.error + rem_cap,
                "power_tail({a},{m}) = {} ± {} vs brute {} (+{})",
                cert.value,
                cert.error,
                partial,
                rem_cap
            );
            // the estimate must sit above the partial sum (tail is positive)
            assert!(cert.value + cert.error >= partial);
        }
    }

    #[test]
    fn log_power_tail_brackets_truth() {
        for &(a, m) in &[(2.0f64, 50u64), (3.0, 20), (1.2, 1000), (2.0, 100_000)] {
            let cert = log_power_tail(a, m);
            let (partial, rem_cap) = brute_tail(|x| x.ln() * x.powf(-a), m, 20_000_000);
            assert!(
                (cert.value - partial).abs() <= cert.error + rem_cap,
                "log_power_tail({a},{m}) = {} ± {} vs brute {} (+{})",
                cert.value,
                cert.error,
                partial,
                rem_cap
            );
        }
    }

    #[test]
    fn zeta_matches_reference_values() {
        // reference digits from standard tables
        let z2 = zeta(2.0);
        assert!((z2.value - std::f64::consts::PI.powi(2) / 6.0).abs() <= z2.error + 1e-12);
        let z3 = zeta(3.0);
        assert!((z3.value - 1.2020569031595943).abs() <= z3.error + 1e-12);
        let z25 = zeta(2.5);
        assert!((z25.value - 1.3414872572509171).abs() <= z25.error + 1e-10);
        assert!(z2.error < 1e-9);
    }

    #[test]
    fn certified_arithmetic_propagates_errors() {
        let a = Certified::new(10.0, 1e-3);
        let b = Certified::new(2.0, 1e-4);
        let q = a.div(b);
        assert!((q.value - 5.0).abs() < 1e-12);
        assert!(q.error >= 1e-3 / 2.0 && q.error < 1e-2);
        let s = a.add(b).sub(b);
        assert!((s.value - 10.0).abs() < 1e-12);
        assert!(s.error >= 1e-3);
    }
}
