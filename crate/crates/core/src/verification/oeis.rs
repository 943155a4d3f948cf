//! Comparison against embedded prefixes of two integer sequences.

use super::peaks::dyck_peak_totals;
use super::report::{Failure, VerificationReport};
use crate::counting::binomial;
use crate::enumerate::count_paths;
use crate::error::{Error, Result};
use crate::path::PathClass;
use crate::Count;

/// Powers of 4.
const A000302: [u64; 20] = [
    1,
    4,
    16,
    64,
    256,
    1024,
    4096,
    16384,
    65536,
    262144,
    1048576,
    4194304,
    16777216,
    67108864,
    268435456,
    1073741824,
    4294967296,
    17179869184,
    68719476736,
    274877906944,
];

/// Central binomials `C(2n+1, n+1)`, from `n = 0`.
const A001700: [u64; 20] = [
    1,
    3,
    10,
    35,
    126,
    462,
    1716,
    6435,
    24310,
    92378,
    352716,
    1352078,
    5200300,
    20058300,
    77558760,
    300540195,
    1166803110,
    4537567650,
    17672631900,
    68923264410,
];

fn table(id: &str) -> Result<&'static [u64; 20]> {
    match id {
        "A000302" => Ok(&A000302),
        "A001700" => Ok(&A001700),
        _ => Err(Error::UnknownSequence(id.to_string())),
    }
}

fn require_terms(id: &str, requested: usize) -> Result<()> {
    if requested > 20 {
        return Err(Error::TableTooShort {
            id: id.to_string(),
            available: 20,
            requested,
        });
    }
    Ok(())
}

/// `A000302` is compared for `k = 0..=n_max` against the walk count at
/// length `2k`, the two-colored bridge count at length `2k` and the sum of
/// peak heights at semilength `k + 1`. `A001700` is compared for
/// `n = 1..=n_max` against the number of peaks over Dyck paths of length
/// `2n`.
pub fn oeis_compare(id: &str, n_max: usize) -> Result<VerificationReport> {
    let terms = table(id)?;
    match id {
        "A000302" => {
            require_terms(id, n_max + 1)?;
            let mut report = VerificationReport::new(id, 0, n_max);
            for (k, &want) in terms.iter().enumerate().take(n_max + 1) {
                let walks: Count = count_paths(PathClass::Walk, 2 * k);
                let two_colored: Count = (0..=k)
                    .map(|j| binomial::<Count>(2 * j, j) * binomial::<Count>(2 * k - 2 * j, k - j))
                    .sum();
                let labeled = dyck_peak_totals::<Count>(k + 1).height_sum;
                let want = Count::from(want);
                let ok = [&walks, &two_colored, &labeled].iter().all(|c| **c == want);
                report.check(ok, || Failure {
                    input: format!("{id}[{k}]"),
                    expected: want.to_string(),
                    actual: format!(
                        "walk {walks}, two_colored {two_colored}, height_labeled {labeled}"
                    ),
                });
            }
            Ok(report)
        }
        _ => {
            require_terms(id, n_max)?;
            let mut report = VerificationReport::new(id, 1, n_max);
            for n in 1..=n_max {
                let want = Count::from(terms[n - 1]);
                let got = dyck_peak_totals::<Count>(n).peaks;
                report.check(got == want, || Failure {
                    input: format!("{id}[{}]", n - 1),
                    expected: want.to_string(),
                    actual: format!("marked_peak {got}"),
                });
            }
            Ok(report)
        }
    }
}
