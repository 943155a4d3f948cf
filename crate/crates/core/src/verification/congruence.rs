//! `D_r(n)`: Dyck paths of semilength `n` with exactly `r` peaks at every
//! height from 1 up to the path's maximum altitude.

use num_traits::Zero;

use super::report::{Failure, VerificationReport};
use crate::enumerate::enumerate_paths;
use crate::path::{Path, PathClass};
use crate::Count;

fn has_r_peaks_per_level(path: &Path, r: usize) -> bool {
    let top = path.altitudes().into_iter().max().unwrap_or(0) as usize;
    let mut per_level = vec![0usize; top + 1];
    for pk in path.peaks() {
        per_level[pk.height as usize] += 1;
    }
    per_level[1..].iter().all(|&k| k == r)
}

/// Brute force over all Dyck paths of length `2n`.
pub fn d_r_count(r: usize, n: usize) -> Count {
    let hits = enumerate_paths(PathClass::DyckPath, 2 * n)
        .iter()
        .filter(|p| has_r_peaks_per_level(p, r))
        .count();
    Count::from(hits)
}

/// Checks that `r + 1` divides `D_r(n)` for every `r < n <= n_max`.
pub fn verify_congruence(r: usize, n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new(format!("congruence(r={r})"), r + 1, n_max);
    let modulus = Count::from(r + 1);
    for n in r + 1..=n_max {
        let d = d_r_count(r, n);
        report.check((&d % &modulus).is_zero(), || Failure {
            input: format!("D_{r}({n})"),
            expected: format!("multiple of {modulus}"),
            actual: d.to_string(),
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_values() {
        assert_eq!(d_r_count(1, 2), Count::from(0u8));
        assert_eq!(d_r_count(1, 3), Count::from(2u8));
        assert_eq!(d_r_count(2, 2), Count::from(1u8));
    }

    #[test]
    fn hand_value_witnesses() {
        let hits: Vec<String> = enumerate_paths(PathClass::DyckPath, 6)
            .into_iter()
            .filter(|p| has_r_peaks_per_level(p, 1))
            .map(|p| p.to_string())
            .collect();
        assert_eq!(hits, ["UUDDUD", "UDUUDD"]);
    }

    #[test]
    fn zero_below_r() {
        for r in 2..=5 {
            for n in 1..r {
                assert!(d_r_count(r, n).is_zero(), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn congruence_examples() {
        let a = verify_congruence(1, 6);
        assert!(a.passed());
        assert_eq!(a.checked, Count::from(5u8));
        assert!(verify_congruence(2, 8).passed());
        let c = verify_congruence(3, 4);
        assert!(c.passed());
        assert_eq!(c.checked, Count::from(1u8));
    }
}
