//! Randomized zero testing.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expr::RationalExpr;

const HEIGHT: i64 = 10_000;
const MAX_REDRAWS: usize = 1000;

/// A random rational `p/q` with `1 <= p, q <= 10^4`.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(1..=HEIGHT)), BigInt::from(rng.gen_range(1..=HEIGHT)))
}

/// Whether `e` vanishes at `trials` random points avoiding its poles.
///
/// Exact zero returns `true` without sampling; the answer is deterministic
/// for a given seed.
pub fn probably_zero(e: &RationalExpr, trials: usize, seed: u64) -> bool {
    assert!(trials >= 1, "at least one trial is required");
    if e.is_zero() {
        return true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut redraws = 0;
    while done < trials {
        let point: [BigRational; 8] = std::array::from_fn(|_| random_rational(&mut rng));
        match e.eval(&point) {
            Some(v) => {
                if v != BigRational::from_integer(0.into()) {
                    return false;
                }
                done += 1;
            }
            None => {
                redraws += 1;
                assert!(redraws < MAX_REDRAWS, "denominator vanishes at every sampled point");
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RationalExpr {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        assert!(probably_zero(&RationalExpr::zero(), 1, 0));
        assert!(probably_zero(&p("(1-t^2) - (1-t)*(1+t)"), 5, 1));
        assert!(!probably_zero(&p("t - q"), 20, 2));
    }
}
