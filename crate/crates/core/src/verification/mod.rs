//! Closed-form counts, exhaustive verification suites, the peak-count
//! congruence checker and comparisons with embedded integer sequences.

mod congruence;
mod oeis;
mod peaks;
mod report;
mod suites;

pub use congruence::{d_r_count, verify_congruence};
pub use oeis::oeis_compare;
pub use peaks::{dyck_peak_totals, PeakTotals};
pub use report::{Failure, VerificationReport};
pub use suites::{verify_suite, Suite};

use crate::classes::NamedClass;
use crate::error::Result;
use crate::Count;

/// Closed-form size of the named class at size `n`; see [`NamedClass`] for
/// how `n` indexes each class.
pub fn closed_form_count(class: &str, n: usize) -> Result<Count> {
    class.parse::<NamedClass>()?.closed_form_count(n)
}
