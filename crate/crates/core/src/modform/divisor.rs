use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::U;

/// `σ_k(n) = Σ_{d | n} d^k`, exactly.
pub fn divisor_sum(k: u32, n: u64) -> BigInt {
    assert!(n >= 1, "divisor_sum needs n >= 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    if total.is_zero() {
        BigInt::one()
    } else {
        total
    }
}

/// `σ_k(n)` for `n = 0..=n_max` as doubles, each paired with a bound on its
/// relative rounding error. Entry 0 is unused.
pub(crate) fn sigma_table(k: u32, n_max: usize) -> Vec<(f64, f64)> {
    let mut sums = vec![0.0f64; n_max + 1];
    let mut count = vec![0u32; n_max + 1];
    for d in 1..=n_max {
        let p = (d as f64).powi(k as i32);
        let mut m = d;
        while m <= n_max {
            sums[m] += p;
            count[m] += 1;
            m += d;
        }
    }
    sums.into_iter().zip(count).map(|(s, c)| (s, (k as f64 + c as f64 + 2.0) * U)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(divisor_sum(1, 1), BigInt::from(1));
        assert_eq!(divisor_sum(1, 6), BigInt::from(12));
        assert_eq!(divisor_sum(5, 2), BigInt::from(33));
        assert_eq!(divisor_sum(3, 9), BigInt::from(1 + 27 + 729));
    }

    #[test]
    fn table_matches_exact() {
        let t = sigma_table(5, 300);
        for n in 1..=300u64 {
            let exact: f64 = divisor_sum(5, n).to_string().parse().unwrap();
            let (v, rel) = t[n as usize];
            assert!((v - exact).abs() <= rel * exact, "n={n}");
        }
    }
}
