//! Chernoff-type tail bounds and Monte Carlo estimators to check them.

use rand::Rng;

use crate::genmodel::random_string;
use crate::matchkit::within;

/// `e^(-n eps^2 / 3)`, the bound on `Pr(X > pn + eps n)` for a sum of `n`
/// independent 0/1 variables with mean at most `p`.
pub fn chernoff_upper(n: usize, epsilon: f64) -> f64 {
    (-(n as f64) * epsilon * epsilon / 3.0).exp()
}

/// Empirical `Pr(X > pn + eps n)` for `X ~ Binomial(n, p)` over `samples` draws.
pub fn binomial_upper_tail<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    p: f64,
    epsilon: f64,
    samples: usize,
) -> f64 {
    let cut = p * n as f64 + epsilon * n as f64;
    let hits = (0..samples)
        .filter(|_| {
            let x = (0..n).filter(|_| rng.gen_bool(p)).count();
            x as f64 > cut
        })
        .count();
    hits as f64 / samples as f64
}

/// Empirical fraction of independent uniform window pairs of length `w`
/// over `t` symbols whose relative distance is at most `beta`.
pub fn window_false_positive_rate<R: Rng + ?Sized>(
    rng: &mut R,
    w: usize,
    t: usize,
    beta: f64,
    samples: usize,
) -> f64 {
    let hits = (0..samples)
        .filter(|_| {
            let x = random_string(rng, w, t);
            let y = random_string(rng, w, t);
            let d = x.as_slice().iter().zip(y.as_slice()).filter(|(a, b)| a != b).count();
            within(d, w, beta)
        })
        .count();
    hits as f64 / samples as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bound_decreases_with_n() {
        assert!(chernoff_upper(1000, 0.1) < chernoff_upper(100, 0.1));
        assert!((chernoff_upper(300, 0.1) - (-1.0f64).exp()).abs() < 1e-12);
    }

    #[test]
    fn degenerate_tails() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(binomial_upper_tail(&mut rng, 50, 0.0, 0.01, 200), 0.0);
        assert_eq!(window_false_positive_rate(&mut rng, 8, 4, 1.0, 100), 1.0);
    }
}
