use crate::error::{Error, Result};
use crate::rng::SeededRng;

/// Continuous power law p(x) ∝ x^(−exponent) on [low, high).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLaw {
    pub exponent: f64,
    pub low: f64,
    pub high: f64,
}

impl PowerLaw {
    pub fn new(exponent: f64, low: f64, high: f64) -> Self {
        Self { exponent, low, high }
    }

    fn antiderivative(&self, x: f64) -> f64 {
        if (self.exponent - 1.0).abs() < 1e-12 {
            x.ln()
        } else {
            x.powf(1.0 - self.exponent) / (1.0 - self.exponent)
        }
    }

    pub fn cdf(&self, x: f64) -> f64 {
        let x = x.clamp(self.low, self.high);
        let a = self.antiderivative(self.low);
        (self.antiderivative(x) - a) / (self.antiderivative(self.high) - a)
    }

    /// Inverse-CDF sample.
    pub fn sample(&self, rng: &mut SeededRng) -> f64 {
        let u = rng.uniform();
        if (self.exponent - 1.0).abs() < 1e-12 {
            self.low * (self.high / self.low).powf(u)
        } else {
            let e = 1.0 - self.exponent;
            let (a, b) = (self.low.powf(e), self.high.powf(e));
            (a + u * (b - a)).powf(1.0 / e)
        }
    }

    /// Sample rounded down, i.e. an integer in [⌊low⌋, ⌈high⌉ − 1].
    pub fn sample_floor(&self, rng: &mut SeededRng) -> usize {
        (self.sample(rng).floor() as usize).min(self.high.ceil() as usize - 1)
    }

    /// Mean of the rounded-down variable.
    pub fn floor_mean(&self) -> f64 {
        let mut mean = 0.0;
        let mut k = self.low.floor();
        while k < self.high {
            let p = self.cdf(k + 1.0) - self.cdf(k);
            mean += k * p;
            k += 1.0;
        }
        mean
    }
}

/// Integer degrees in [kmin, max_degree] with mean close to `avg`; the real
/// lower cutoff is found by bisection.
pub fn degree_sequence(n: usize, avg: f64, max_degree: f64, exponent: f64, rng: &mut SeededRng) -> Result<Vec<usize>> {
    let high = max_degree.floor() + 1.0;
    let law = |low: f64| PowerLaw::new(exponent, low, high);
    let (mut lo, mut hi) = (1.0, max_degree.floor());
    if law(lo).floor_mean() > avg || law(hi).floor_mean() < avg {
        return Err(Error::InfeasibleSpec(format!(
            "mean degree {avg} unreachable with max degree {max_degree} and exponent {exponent}"
        )));
    }
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if law(mid).floor_mean() < avg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let dist = law(0.5 * (lo + hi));
    Ok((0..n).map(|_| dist.sample_floor(rng)).collect())
}

/// Community sizes in [cmin, cmax] drawn from the power law and adjusted to
/// sum to exactly `n`.
pub fn community_sizes(n: usize, cmin: usize, cmax: usize, exponent: f64, rng: &mut SeededRng) -> Result<Vec<usize>> {
    if n < cmin {
        return Err(Error::InfeasibleSpec(format!("{n} nodes cannot fill a community of {cmin}")));
    }
    let dist = PowerLaw::new(exponent, cmin as f64, cmax as f64 + 1.0);
    let mut sizes = Vec::new();
    let mut total = 0;
    while total < n {
        let s = dist.sample_floor(rng).clamp(cmin, cmax);
        sizes.push(s);
        total += s;
    }
    while total > n {
        let shrinkable: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] > cmin).collect();
        if shrinkable.is_empty() {
            total -= sizes.pop().unwrap_or(0);
            continue;
        }
        let i = shrinkable[rng.below(shrinkable.len())];
        sizes[i] -= 1;
        total -= 1;
    }
    while total < n {
        let growable: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] < cmax).collect();
        if growable.is_empty() {
            return Err(Error::InfeasibleSpec("community sizes cannot cover all nodes".into()));
        }
        let i = growable[rng.below(growable.len())];
        sizes[i] += 1;
        total += 1;
    }
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cdf_endpoints() {
        let p = PowerLaw::new(2.0, 3.0, 10.0);
        assert_eq!(p.cdf(3.0), 0.0);
        assert!((p.cdf(10.0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn samples_stay_in_support() {
        let mut rng = SeededRng::new(5);
        for e in [1.0, 2.0, 2.5] {
            let p = PowerLaw::new(e, 10.0, 51.0);
            for _ in 0..1000 {
                let k = p.sample_floor(&mut rng);
                assert!((10..=50).contains(&k));
            }
        }
    }

    #[test]
    fn sizes_sum_to_n() {
        let mut rng = SeededRng::new(9);
        for n in [100, 333, 1000] {
            let s = community_sizes(n, 10, 50, 1.0, &mut rng).unwrap();
            assert_eq!(s.iter().sum::<usize>(), n);
            assert!(s.iter().all(|&c| (10..=50).contains(&c)));
        }
    }

    #[test]
    fn degree_mean_is_close() {
        let mut rng = SeededRng::new(2);
        let d = degree_sequence(20000, 20.0, 50.0, 2.0, &mut rng).unwrap();
        let mean = d.iter().sum::<usize>() as f64 / d.len() as f64;
        assert!((mean - 20.0).abs() < 0.5, "{mean}");
        assert!(d.iter().all(|&k| k <= 50));
    }
}
