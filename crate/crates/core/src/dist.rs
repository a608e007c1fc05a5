//! Candidate outcome distributions.
//!
//! Four two-parameter families (normal, log-normal, gamma, Weibull) plus a
//! finite mixture of normals used by the simulation lab to generate skewed
//! outcomes. Each distribution evaluates its pdf, cdf, quantile function,
//! and median, and can draw samples from a caller-owned random stream.
//!
//! Parameterizations:
//! * gamma uses shape `alpha` and rate `beta`, so the mean is `alpha / beta`;
//! * Weibull uses scale `lambda` and shape `k`, cdf `1 - exp(-(x/lambda)^k)`;
//! * log-normal takes the mean and standard deviation of `ln X`.

use rand::Rng;
use rand_distr::Distribution;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::special;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DistError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("quantile probability {0} outside (0, 1)")]
    DomainError(f64),
}

/// Tag for the supported distribution families.
///
/// `NormalMixture` only occurs in simulation and best-case contexts; it is
/// never a candidate family for quantile-matching fits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Normal,
    LogNormal,
    Gamma,
    Weibull,
    NormalMixture,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::Normal => "normal",
            Family::LogNormal => "log-normal",
            Family::Gamma => "gamma",
            Family::Weibull => "weibull",
            Family::NormalMixture => "normal-mixture",
        };
        f.write_str(s)
    }
}

/// One component of a [`Dist::Mixture`]: weight, mean, standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixComponent {
    pub weight: f64,
    pub mean: f64,
    pub sd: f64,
}

/// A fully parameterized distribution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Dist {
    Normal { mu: f64, sigma: f64 },
    LogNormal { mu: f64, sigma: f64 },
    Gamma { shape: f64, rate: f64 },
    Weibull { scale: f64, shape: f64 },
    Mixture(Vec<MixComponent>),
}

impl Dist {
    pub fn normal(mu: f64, sigma: f64) -> Result<Self, DistError> {
        if !mu.is_finite() || !sigma.is_finite() || sigma <= 0.0 {
            return Err(DistError::InvalidParams(format!(
                "normal requires finite mu and sigma > 0, got mu={mu}, sigma={sigma}"
            )));
        }
        Ok(Dist::Normal { mu, sigma })
    }

    pub fn log_normal(mu: f64, sigma: f64) -> Result<Self, DistError> {
        if !mu.is_finite() || !sigma.is_finite() || sigma <= 0.0 {
            return Err(DistError::InvalidParams(format!(
                "log-normal requires finite mu and sigma > 0, got mu={mu}, sigma={sigma}"
            )));
        }
        Ok(Dist::LogNormal { mu, sigma })
    }

    pub fn gamma(shape: f64, rate: f64) -> Result<Self, DistError> {
        if !shape.is_finite() || !rate.is_finite() || shape <= 0.0 || rate <= 0.0 {
            return Err(DistError::InvalidParams(format!(
                "gamma requires shape > 0 and rate > 0, got shape={shape}, rate={rate}"
            )));
        }
        Ok(Dist::Gamma { shape, rate })
    }

    pub fn weibull(scale: f64, shape: f64) -> Result<Self, DistError> {
        if !scale.is_finite() || !shape.is_finite() || scale <= 0.0 || shape <= 0.0 {
            return Err(DistError::InvalidParams(format!(
                "weibull requires scale > 0 and shape > 0, got scale={scale}, shape={shape}"
            )));
        }
        Ok(Dist::Weibull { scale, shape })
    }

    /// Mixture of normals. Weights must be positive; they are normalized to
    /// sum to one.
    pub fn mixture(components: Vec<MixComponent>) -> Result<Self, DistError> {
        if components.is_empty() {
            return Err(DistError::InvalidParams("mixture needs components".into()));
        }
        let total: f64 = components.iter().map(|c| c.weight).sum();
        if !total.is_finite() || total <= 0.0 {
            return Err(DistError::InvalidParams("mixture weights must be positive".into()));
        }
        for c in &components {
            if !c.weight.is_finite() || c.weight <= 0.0 || !c.mean.is_finite() || c.sd <= 0.0 {
                return Err(DistError::InvalidParams(format!(
                    "bad mixture component: w={}, mean={}, sd={}",
                    c.weight, c.mean, c.sd
                )));
            }
        }
        let normalized = components
            .into_iter()
            .map(|c| MixComponent { weight: c.weight / total, ..c })
            .collect();
        Ok(Dist::Mixture(normalized))
    }

    pub fn family(&self) -> Family {
        match self {
            Dist::Normal { .. } => Family::Normal,
            Dist::LogNormal { .. } => Family::LogNormal,
            Dist::Gamma { .. } => Family::Gamma,
            Dist::Weibull { .. } => Family::Weibull,
            Dist::Mixture(_) => Family::NormalMixture,
        }
    }

    /// The two free parameters in the family's conventional order.
    /// Panics for mixtures, which are not two-parameter.
    pub fn params(&self) -> (f64, f64) {
        match *self {
            Dist::Normal { mu, sigma } | Dist::LogNormal { mu, sigma } => (mu, sigma),
            Dist::Gamma { shape, rate } => (shape, rate),
            Dist::Weibull { scale, shape } => (scale, shape),
            Dist::Mixture(_) => panic!("mixture has no two-parameter form"),
        }
    }

    /// Density at `x`; zero outside the support.
    pub fn pdf(&self, x: f64) -> f64 {
        match *self {
            Dist::Normal { mu, sigma } => special::norm_pdf((x - mu) / sigma) / sigma,
            Dist::LogNormal { mu, sigma } => {
                if x <= 0.0 {
                    0.0
                } else {
                    special::norm_pdf((x.ln() - mu) / sigma) / (x * sigma)
                }
            }
            Dist::Gamma { shape, rate } => {
                if x < 0.0 {
                    return 0.0;
                }
                if x == 0.0 {
                    return match shape {
                        s if s < 1.0 => f64::INFINITY,
                        s if s == 1.0 => rate,
                        _ => 0.0,
                    };
                }
                ((shape - 1.0) * x.ln() - rate * x + shape * rate.ln()
                    - special::ln_gamma(shape))
                .exp()
            }
            Dist::Weibull { scale, shape } => {
                if x < 0.0 {
                    return 0.0;
                }
                if x == 0.0 {
                    return match shape {
                        k if k < 1.0 => f64::INFINITY,
                        k if k == 1.0 => 1.0 / scale,
                        _ => 0.0,
                    };
                }
                let z = x / scale;
                shape / scale * z.powf(shape - 1.0) * (-z.powf(shape)).exp()
            }
            Dist::Mixture(ref cs) => cs
                .iter()
                .map(|c| c.weight * special::norm_pdf((x - c.mean) / c.sd) / c.sd)
                .sum(),
        }
    }

    /// Cumulative distribution function.
    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            Dist::Normal { mu, sigma } => special::norm_cdf((x - mu) / sigma),
            Dist::LogNormal { mu, sigma } => {
                if x <= 0.0 {
                    0.0
                } else {
                    special::norm_cdf((x.ln() - mu) / sigma)
                }
            }
            Dist::Gamma { shape, rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    special::gamma_p(shape, rate * x)
                }
            }
            Dist::Weibull { scale, shape } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-((x / scale).powf(shape))).exp_m1()
                }
            }
            Dist::Mixture(ref cs) => cs
                .iter()
                .map(|c| c.weight * special::norm_cdf((x - c.mean) / c.sd))
                .sum(),
        }
    }

    /// Quantile function F^-1(p) for p in (0, 1).
    ///
    /// Closed forms where they exist; gamma and mixture quantiles are found
    /// by bracketed root finding on the cdf (Newton steps safeguarded by
    /// bisection), accurate to better than 1e-10 in probability.
    pub fn quantile(&self, p: f64) -> Result<f64, DistError> {
        if !(p > 0.0 && p < 1.0) {
            return Err(DistError::DomainError(p));
        }
        Ok(match *self {
            Dist::Normal { mu, sigma } => mu + sigma * special::norm_inv(p),
            Dist::LogNormal { mu, sigma } => (mu + sigma * special::norm_inv(p)).exp(),
            Dist::Weibull { scale, shape } => scale * (-(-p).ln_1p()).powf(1.0 / shape),
            Dist::Gamma { shape, rate } => {
                // Wilson-Hilferty starting point.
                let z = special::norm_inv(p);
                let cube = 1.0 - 1.0 / (9.0 * shape) + z / (3.0 * shape.sqrt());
                let mut x0 = shape / rate * cube.powi(3);
                if !x0.is_finite() || x0 <= 0.0 {
                    x0 = shape / rate * 1e-8;
                }
                invert_cdf(|x| self.cdf(x), |x| self.pdf(x), p, x0)
            }
            Dist::Mixture(ref cs) => {
                // Bracket from the widest component spread.
                let lo = cs
                    .iter()
                    .map(|c| c.mean - 10.0 * c.sd)
                    .fold(f64::INFINITY, f64::min);
                let hi = cs
                    .iter()
                    .map(|c| c.mean + 10.0 * c.sd)
                    .fold(f64::NEG_INFINITY, f64::max);
                invert_cdf(|x| self.cdf(x), |x| self.pdf(x), p, 0.5 * (lo + hi))
            }
        })
    }

    /// Median, i.e. `quantile(0.5)`.
    pub fn median(&self) -> f64 {
        self.quantile(0.5).expect("0.5 is a valid probability")
    }

    /// Draw `n` observations using the provided random stream.
    pub fn sample<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<f64> {
        let mut out = Vec::with_capacity(n);
        self.sample_into(n, rng, &mut out);
        out
    }

    /// As [`Dist::sample`] but reusing a caller-provided buffer.
    pub fn sample_into<R: Rng + ?Sized>(&self, n: usize, rng: &mut R, out: &mut Vec<f64>) {
        out.clear();
        match *self {
            Dist::Normal { mu, sigma } => {
                let d = rand_distr::Normal::new(mu, sigma).expect("validated");
                out.extend((0..n).map(|_| d.sample(rng)));
            }
            // exp of a normal draw, so the log-normal stream is exactly the
            // image of the normal stream under exp
            Dist::LogNormal { mu, sigma } => {
                let d = rand_distr::Normal::new(mu, sigma).expect("validated");
                out.extend((0..n).map(|_| d.sample(rng).exp()));
            }
            Dist::Gamma { shape, rate } => {
                let d = rand_distr::Gamma::new(shape, 1.0 / rate).expect("validated");
                out.extend((0..n).map(|_| d.sample(rng)));
            }
            Dist::Weibull { scale, shape } => {
                let d = rand_distr::Weibull::new(scale, shape).expect("validated");
                out.extend((0..n).map(|_| d.sample(rng)));
            }
            Dist::Mixture(ref cs) => {
                for _ in 0..n {
                    let mut u: f64 = rng.gen();
                    let mut chosen = &cs[cs.len() - 1];
                    for c in cs {
                        if u < c.weight {
                            chosen = c;
                            break;
                        }
                        u -= c.weight;
                    }
                    let d = rand_distr::Normal::new(chosen.mean, chosen.sd).expect("validated");
                    out.push(d.sample(rng));
                }
            }
        }
    }
}

/// Safeguarded Newton inversion of a cdf inside a bracket.
///
/// Expands a bracket around `x0` until it straddles `p`, then iterates
/// Newton steps that fall back to bisection whenever they leave the bracket
/// or fail to shrink the residual. Terminates once |F(x) - p| <= 1e-12 or
/// the bracket collapses below 1e-13 relative width.
fn invert_cdf(cdf: impl Fn(f64) -> f64, pdf: impl Fn(f64) -> f64, p: f64, x0: f64) -> f64 {
    let scale = x0.abs().max(1.0);
    let (mut lo, mut hi) = (x0 - scale, x0 + scale);
    // Grow the bracket geometrically until F(lo) <= p <= F(hi).
    for _ in 0..200 {
        if cdf(lo) <= p {
            break;
        }
        lo -= 2.0 * (hi - lo);
    }
    for _ in 0..200 {
        if cdf(hi) >= p {
            break;
        }
        hi += 2.0 * (hi - lo);
    }

    let mut x = x0.clamp(lo, hi);
    for _ in 0..200 {
        let f = cdf(x) - p;
        if f.abs() <= 1e-12 {
            return x;
        }
        if f > 0.0 {
            hi = x;
        } else {
            lo = x;
        }
        if hi - lo < 1e-13 * x.abs().max(1.0) {
            return 0.5 * (lo + hi);
        }
        let d = pdf(x);
        let newton = if d > 0.0 { x - f / d } else { f64::NAN };
        x = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    x
}

/// A fitted candidate density: which family won, the fitted distribution,
/// the attained least-squares objective, and the density evaluated at the
/// fitted distribution's own median.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedDensity {
    pub dist: Dist,
    /// Attained value of the quantile-matching objective.
    pub objective: f64,
    /// Density of the fitted distribution at its own median.
    pub density_at_median: f64,
    /// Median of the fitted distribution.
    pub median: f64,
    pub converged: bool,
}

impl FittedDensity {
    pub fn family(&self) -> Family {
        self.dist.family()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    fn figure_mixture() -> Dist {
        Dist::mixture(vec![
            MixComponent { weight: 2.0 / 5.0, mean: 36.5, sd: 2.8 },
            MixComponent { weight: 1.0 / 6.0, mean: 40.5, sd: 3.6 },
            MixComponent { weight: 1.0 / 6.0, mean: 44.5, sd: 6.0 },
            MixComponent { weight: 1.0 / 6.0, mean: 49.5, sd: 11.0 },
        ])
        .unwrap()
    }

    #[test]
    fn pdf_reference_values() {
        let n = Dist::normal(35.0, 7.0).unwrap();
        close(n.pdf(35.0), 0.056991754343061811, 1e-15);
        let w = Dist::weibull(1.0, 1.0).unwrap();
        close(w.pdf(0.5), 0.60653065971263342, 1e-15);
        let g = Dist::gamma(2.0, 1.0).unwrap();
        assert_eq!(g.pdf(0.0), 0.0);
        assert_eq!(g.pdf(-1.0), 0.0);
    }

    #[test]
    fn cdf_reference_values() {
        close(Dist::normal(0.0, 1.0).unwrap().cdf(0.0), 0.5, 1e-15);
        close(Dist::log_normal(0.0, 1.0).unwrap().cdf(1.0), 0.5, 1e-15);
        close(Dist::gamma(2.0, 1.0).unwrap().cdf(1.0), 0.26424111765711536, 1e-14);
        assert_eq!(Dist::log_normal(0.0, 1.0).unwrap().cdf(0.0), 0.0);
    }

    #[test]
    fn quantile_reference_values() {
        close(Dist::normal(35.0, 7.0).unwrap().quantile(0.5).unwrap(), 35.0, 1e-12);
        close(
            Dist::normal(0.0, 1.0).unwrap().quantile(0.75).unwrap(),
            0.67448975019608174,
            1e-12,
        );
        close(
            Dist::weibull(2.0, 1.0).unwrap().quantile(0.5).unwrap(),
            1.3862943611198906,
            1e-12,
        );
        assert!(matches!(
            Dist::normal(0.0, 1.0).unwrap().quantile(0.0),
            Err(DistError::DomainError(_))
        ));
        assert!(matches!(
            Dist::normal(0.0, 1.0).unwrap().quantile(1.5),
            Err(DistError::DomainError(_))
        ));
    }

    #[test]
    fn median_reference_values() {
        // Gamma(1, 2) is Exp(2); median ln(2)/2.
        close(Dist::gamma(1.0, 2.0).unwrap().median(), 0.34657359027997265, 1e-10);
        close(Dist::normal(35.0, 7.0).unwrap().median(), 35.0, 1e-12);
        let m = figure_mixture().median();
        assert!((m - 39.0).abs() < 0.2, "mixture median {m}");
        close(m, 39.14801007762489, 1e-8);
    }

    #[test]
    fn quantile_cdf_round_trip() {
        let dists = [
            Dist::normal(-3.0, 2.5).unwrap(),
            Dist::normal(35.0, 7.0).unwrap(),
            Dist::log_normal(0.3, 1.2).unwrap(),
            Dist::gamma(0.7, 2.0).unwrap(),
            Dist::gamma(9.0, 0.25).unwrap(),
            Dist::weibull(3.0, 0.8).unwrap(),
            Dist::weibull(1.5, 4.0).unwrap(),
            figure_mixture(),
        ];
        for d in &dists {
            for &p in &[0.001, 0.01, 0.25, 0.5, 0.75, 0.99, 0.999] {
                let x = d.quantile(p).unwrap();
                let back = d.cdf(x);
                assert!(
                    (back - p).abs() < 1e-9,
                    "{:?}: p={p} -> x={x} -> {back}",
                    d.family()
                );
            }
        }
    }

    #[test]
    fn pdf_matches_cdf_derivative() {
        let dists = [
            Dist::normal(1.0, 2.0).unwrap(),
            Dist::log_normal(0.0, 0.6).unwrap(),
            Dist::gamma(3.0, 1.5).unwrap(),
            Dist::weibull(2.0, 2.5).unwrap(),
            figure_mixture(),
        ];
        for d in &dists {
            for &p in &[0.1, 0.3, 0.5, 0.7, 0.9] {
                let x = d.quantile(p).unwrap();
                let h = 1e-5 * x.abs().max(1.0);
                let fd = (d.cdf(x + h) - d.cdf(x - h)) / (2.0 * h);
                let pdf = d.pdf(x);
                assert!(
                    (fd - pdf).abs() <= 1e-6 * pdf.max(1e-12),
                    "{:?} at x={x}: fd={fd} pdf={pdf}",
                    d.family()
                );
            }
        }
    }

    #[test]
    fn pdf_integrates_to_one() {
        // Simpson quadrature between far quantiles.
        for d in [
            Dist::normal(4.0, 3.0).unwrap(),
            Dist::log_normal(0.5, 0.8).unwrap(),
            Dist::gamma(2.5, 0.7).unwrap(),
            Dist::weibull(2.0, 1.7).unwrap(),
        ] {
            let a = d.quantile(1e-9).unwrap();
            let b = d.quantile(1.0 - 1e-9).unwrap();
            let n = 20_000;
            let h = (b - a) / n as f64;
            let mut s = d.pdf(a) + d.pdf(b);
            for i in 1..n {
                let x = a + i as f64 * h;
                s += d.pdf(x) * if i % 2 == 1 { 4.0 } else { 2.0 };
            }
            let integral = s * h / 3.0;
            assert!((integral - 1.0).abs() < 1e-6, "{:?}: {integral}", d.family());
        }
    }

    #[test]
    fn mixture_moments_by_monte_carlo() {
        let mix = figure_mixture();
        let mut rng = ChaCha12Rng::seed_from_u64(20_240_001);
        let xs = mix.sample(1_000_000, &mut rng);
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>()
            / (xs.len() - 1) as f64;
        assert!((mean - 41.13).abs() < 0.1, "mixture sample mean {mean}");
        assert!((var - 59.6).abs() < 1.5, "mixture sample variance {var}");
    }

    #[test]
    fn normal_sample_recovers_sd() {
        let d = Dist::normal(35.0, 7.0).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let xs = d.sample(1_000_000, &mut rng);
        let mean = xs.iter().sum::<f64>() / xs.len() as f64;
        let sd = (xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>()
            / (xs.len() - 1) as f64)
            .sqrt();
        assert!((sd - 7.0).abs() < 0.02, "sample sd {sd}");
    }

    #[test]
    fn lognormal_sampling_is_exp_of_normal() {
        // Same seed, same stream: log-normal draws must be exactly exp(normal).
        let mu = 0.4;
        let sigma = 0.9;
        let mut r1 = ChaCha12Rng::seed_from_u64(99);
        let mut r2 = ChaCha12Rng::seed_from_u64(99);
        let a = Dist::log_normal(mu, sigma).unwrap().sample(1000, &mut r1);
        let b = Dist::normal(mu, sigma).unwrap().sample(1000, &mut r2);
        for (x, z) in a.iter().zip(&b) {
            assert_eq!(*x, z.exp());
        }
    }

    #[test]
    fn sample_empirical_cdf_matches_cdf() {
        // Kolmogorov-Smirnov at n=1e5: D_n should be well under the 1%
        // critical value 1.63/sqrt(n).
        for d in [
            Dist::normal(2.0, 3.0).unwrap(),
            Dist::log_normal(0.0, 1.0).unwrap(),
            Dist::gamma(2.0, 0.5).unwrap(),
            Dist::weibull(2.0, 1.5).unwrap(),
            figure_mixture(),
        ] {
            let mut rng = ChaCha12Rng::seed_from_u64(1_234);
            let mut xs = d.sample(100_000, &mut rng);
            xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let n = xs.len() as f64;
            let mut dmax = 0.0_f64;
            for (i, x) in xs.iter().enumerate() {
                let f = d.cdf(*x);
                let e_hi = (i + 1) as f64 / n;
                let e_lo = i as f64 / n;
                dmax = dmax.max((f - e_lo).abs()).max((f - e_hi).abs());
            }
            let crit = 1.63 / n.sqrt();
            assert!(dmax < crit, "{:?}: KS statistic {dmax} >= {crit}", d.family());
        }
    }

    #[test]
    fn invalid_params_rejected() {
        assert!(Dist::normal(0.0, 0.0).is_err());
        assert!(Dist::normal(f64::NAN, 1.0).is_err());
        assert!(Dist::gamma(-1.0, 1.0).is_err());
        assert!(Dist::gamma(1.0, 0.0).is_err());
        assert!(Dist::weibull(0.0, 1.0).is_err());
        assert!(Dist::log_normal(0.0, -2.0).is_err());
        assert!(Dist::mixture(vec![]).is_err());
        assert!(Dist::mixture(vec![MixComponent { weight: -1.0, mean: 0.0, sd: 1.0 }]).is_err());
    }

    #[test]
    fn mixture_weights_normalized() {
        let m = Dist::mixture(vec![
            MixComponent { weight: 2.0, mean: 0.0, sd: 1.0 },
            MixComponent { weight: 6.0, mean: 5.0, sd: 2.0 },
        ])
        .unwrap();
        if let Dist::Mixture(cs) = &m {
            close(cs[0].weight, 0.25, 1e-15);
            close(cs[1].weight, 0.75, 1e-15);
        } else {
            unreachable!()
        }
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arbitrary_dist() -> impl Strategy<Value = Dist> {
        prop_oneof![
            (-50.0..50.0f64, 0.05..20.0f64).prop_map(|(m, s)| Dist::normal(m, s).unwrap()),
            (-2.0..2.0f64, 0.05..2.5f64).prop_map(|(m, s)| Dist::log_normal(m, s).unwrap()),
            (0.2..25.0f64, 0.05..10.0f64).prop_map(|(a, b)| Dist::gamma(a, b).unwrap()),
            (0.1..30.0f64, 0.3..10.0f64).prop_map(|(l, k)| Dist::weibull(l, k).unwrap()),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn quantile_round_trip(d in arbitrary_dist(), p in 0.001f64..0.999) {
            let x = d.quantile(p).unwrap();
            prop_assert!((d.cdf(x) - p).abs() < 1e-9);
        }

        #[test]
        fn cdf_monotone(d in arbitrary_dist(), a in -100.0f64..100.0, b in -100.0f64..100.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(d.cdf(lo) <= d.cdf(hi) + 1e-15);
            prop_assert!((0.0..=1.0).contains(&d.cdf(lo)));
        }
    }
}
