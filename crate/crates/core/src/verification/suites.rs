//! Exhaustive verification suites over every size `1..=n_max`.

use std::cell::RefCell;
use std::collections::HashSet;
use std::fmt::{self, Debug};
use std::hash::Hash;
use std::str::FromStr;
use std::thread;

use super::congruence::verify_congruence;
use super::report::{Failure, VerificationReport};
use crate::bijections::*;
use crate::composition::{enumerate_3compositions, enumerate_compositions, CompositionPair};
use crate::counting::{binomial, pow};
use crate::enumerate::enumerate_paths;
use crate::error::{Error, Result};
use crate::path::{Path, PathClass, Step};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Cardinality,
    Roundtrip,
    Injectivity,
    Statistics,
    Chain,
    Congruence,
    All,
}

impl Suite {
    /// Every suite other than `All`, in reporting order.
    pub const PARTS: [Suite; 6] = [
        Suite::Cardinality,
        Suite::Roundtrip,
        Suite::Injectivity,
        Suite::Statistics,
        Suite::Chain,
        Suite::Congruence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cardinality => "cardinality",
            Suite::Roundtrip => "roundtrip",
            Suite::Injectivity => "injectivity",
            Suite::Statistics => "statistics",
            Suite::Chain => "chain",
            Suite::Congruence => "congruence",
            Suite::All => "all",
        }
    }

    pub fn run(self, n_max: usize) -> VerificationReport {
        let mut report = VerificationReport::new(self.name(), 1, n_max);
        match self {
            Suite::All => {
                // suites run concurrently; merged in PARTS order
                let parts: Vec<VerificationReport> = thread::scope(|s| {
                    let handles: Vec<_> = Suite::PARTS
                        .iter()
                        .map(|&p| s.spawn(move || p.run(n_max)))
                        .collect();
                    handles
                        .into_iter()
                        .map(|h| h.join().expect("suite thread panicked"))
                        .collect()
                });
                for p in parts {
                    report.absorb(p);
                }
            }
            Suite::Congruence => {
                for r in 1..=3 {
                    report.absorb(verify_congruence(r, n_max));
                }
            }
            _ => {
                for n in 1..=n_max {
                    match self {
                        Suite::Cardinality => cardinality(&mut report, n),
                        Suite::Roundtrip => bijections(&mut report, n, Mode::RoundTrip),
                        Suite::Injectivity => bijections(&mut report, n, Mode::Injective),
                        Suite::Statistics => statistics(&mut report, n),
                        Suite::Chain => chain_suite(&mut report, n),
                        _ => unreachable!(),
                    }
                }
            }
        }
        report
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

pub fn verify_suite(name: &str, n_max: usize) -> Result<VerificationReport> {
    Ok(name.parse::<Suite>()?.run(n_max))
}

fn cardinality(report: &mut VerificationReport, n: usize) {
    let want: Count = pow(4, n - 1);
    for class in ChainClass::ALL {
        let got = Count::from(class.enumerate(n).len());
        report.check_eq(|| format!("|{class}| at n={n}"), want.clone(), got);
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    RoundTrip,
    Injective,
}

fn render<T: Debug>(r: &Result<T>) -> String {
    match r {
        Ok(x) => format!("{x:?}"),
        Err(e) => format!("error: {e}"),
    }
}

/// Checks one bijection `domain -> codomain` at size `n`.
///
/// Round trip: `inv . fwd` and `fwd . inv` fix every object. Injective: both
/// directions land in the other side without collisions and hit all of it.
#[allow(clippy::too_many_arguments)]
fn check_bijection<A, B>(
    report: &mut VerificationReport,
    mode: Mode,
    name: &str,
    n: usize,
    domain: &[A],
    codomain: &[B],
    fwd: impl Fn(&A) -> Result<B>,
    inv: impl Fn(&B) -> Result<A>,
) where
    A: Debug + Clone + Eq + Hash,
    B: Debug + Clone + Eq + Hash,
{
    match mode {
        Mode::RoundTrip => {
            for a in domain {
                let back = fwd(a).and_then(|b| inv(&b));
                report.check(back.as_ref() == Ok(a), || Failure {
                    input: format!("{name} fwd+inv n={n} {a:?}"),
                    expected: format!("{a:?}"),
                    actual: render(&back),
                });
            }
            for b in codomain {
                let back = inv(b).and_then(|a| fwd(&a));
                report.check(back.as_ref() == Ok(b), || Failure {
                    input: format!("{name} inv+fwd n={n} {b:?}"),
                    expected: format!("{b:?}"),
                    actual: render(&back),
                });
            }
        }
        Mode::Injective => {
            injective(report, &format!("{name} fwd n={n}"), domain, codomain, &fwd);
            injective(report, &format!("{name} inv n={n}"), codomain, domain, &inv);
        }
    }
}

fn injective<A: Debug, B: Debug + Eq + Hash + Clone>(
    report: &mut VerificationReport,
    label: &str,
    domain: &[A],
    codomain: &[B],
    f: &impl Fn(&A) -> Result<B>,
) {
    let target: HashSet<&B> = codomain.iter().collect();
    let mut image: HashSet<B> = HashSet::new();
    for a in domain {
        let b = f(a);
        let ok = match &b {
            Ok(b) => target.contains(b) && image.insert(b.clone()),
            Err(_) => false,
        };
        report.check(ok, || Failure {
            input: format!("{label} {a:?}"),
            expected: "fresh member of the codomain".into(),
            actual: render(&b),
        });
    }
    report.check_eq(
        || format!("{label} image size"),
        codomain.len(),
        image.len(),
    );
}

fn pairs(n: usize) -> Vec<CompositionPair> {
    let comps = enumerate_compositions(n);
    comps
        .iter()
        .flat_map(|a| {
            comps
                .iter()
                .map(move |b| CompositionPair::new(a.clone(), b.clone()).expect("same size"))
        })
        .collect()
}

fn bijections(report: &mut VerificationReport, n: usize, mode: Mode) {
    let walks = enumerate_paths(PathClass::Walk, 2 * n - 2);
    let pairs = pairs(n);
    let colored = enumerate_3compositions(n);
    let two_colored = TwoColoredBridge::all(2 * n - 2);
    let bridges = enumerate_paths(PathClass::Bridge, 2 * n);
    let meanders = enumerate_paths(PathClass::Meander, 2 * n);
    let down_bridges: Vec<Path> = bridges
        .iter()
        .filter(|b| b.first_step() == Some(Step::Down))
        .cloned()
        .collect();
    let marked_peaks = MarkedPeakPath::all(n);
    let labeled = HeightLabeledPath::all(n);
    let marked_bridges = MarkedBridge::all(n);

    check_bijection(
        report,
        mode,
        "pair_walk",
        n,
        &pairs,
        &walks,
        |p| Ok(pair_to_walk(p)),
        walk_to_pair,
    );
    check_bijection(
        report,
        mode,
        "colored_pair",
        n,
        &colored,
        &pairs,
        colored_to_pair,
        |p| Ok(pair_to_colored(p)),
    );
    check_bijection(
        report,
        mode,
        "twocol_walk",
        n,
        &two_colored,
        &walks,
        |t| Ok(two_colored_to_walk(t)),
        walk_to_two_colored,
    );
    check_bijection(
        report,
        mode,
        "bridge_meander",
        n,
        &bridges,
        &meanders,
        bridge_to_meander,
        meander_to_bridge,
    );
    check_bijection(
        report,
        mode,
        "peak_bridge",
        n,
        &marked_peaks,
        &down_bridges,
        |m| Ok(marked_peak_to_bridge(m)),
        bridge_to_marked_peak,
    );
    check_bijection(
        report,
        mode,
        "label_maxima",
        n,
        &labeled,
        &marked_bridges,
        |x| Ok(height_labeled_to_marked_bridge(x)),
        |y| Ok(marked_bridge_to_height_labeled(y)),
    );
    match StatisticTransfer::new(n) {
        Ok(t) => check_bijection(
            report,
            mode,
            "maxima_twocol",
            n,
            &marked_bridges,
            &two_colored,
            |y| t.forward(y),
            |x| t.inverse(x),
        ),
        Err(e) => report.check(false, || Failure {
            input: format!("maxima_twocol tables n={n}"),
            expected: "equinumerous height classes".into(),
            actual: e.to_string(),
        }),
    }
}

fn statistics(report: &mut VerificationReport, n: usize) {
    // peak to bridge: Down start, h - 1 crossings
    let marked_peaks = MarkedPeakPath::all(n);
    let mut by_height = vec![0usize; n + 1];
    for m in &marked_peaks {
        let b = marked_peak_to_bridge(m);
        by_height[m.height()] += 1;
        let want = (true, true, m.height() - 1);
        let got = (
            b.is_in_class(PathClass::Bridge) && b.len() == 2 * n,
            b.first_step() == Some(Step::Down),
            b.crossings().len(),
        );
        report.check_eq(
            || format!("peak_bridge {:?} (bridge, starts down, crossings)", m),
            want,
            got,
        );
    }
    report.check_eq(
        || format!("marked peaks at n={n}"),
        binomial::<Count>(2 * n - 1, n),
        Count::from(marked_peaks.len()),
    );
    let mut crossings_dist = vec![0usize; n + 1];
    for b in enumerate_paths(PathClass::Bridge, 2 * n) {
        if b.first_step() == Some(Step::Down) {
            crossings_dist[b.crossings().len() + 1] += 1;
        }
    }
    report.check_eq(
        || format!("down bridges by crossings+1 vs marked peaks by height, n={n}"),
        by_height,
        crossings_dist,
    );

    // height-labeled peaks: height sum and label transfer
    let labeled = HeightLabeledPath::all(n);
    report.check_eq(
        || format!("height-labeled peaks at n={n}"),
        pow::<Count>(4, n - 1),
        Count::from(labeled.len()),
    );
    for x in &labeled {
        let y = height_labeled_to_marked_bridge(x);
        let want = (x.label() as usize, x.height() - x.label() as usize);
        report.check_eq(
            || format!("label_maxima {x:?} (marked height, crossings after peak)"),
            want,
            (y.height(), y.crossings_after()),
        );
    }

    // marked maxima and two-colored bridges: statistic classes
    match StatisticTransfer::new(n) {
        Ok(t) => {
            for y in MarkedBridge::all(n) {
                let got = t.forward(&y).map(|c| c.color_one_statistic());
                report.check(got.as_ref() == Ok(&(y.height() - 1)), || Failure {
                    input: format!("maxima_twocol {y:?} color-1 statistic"),
                    expected: (y.height() - 1).to_string(),
                    actual: render(&got),
                });
            }
        }
        Err(e) => report.check(false, || Failure {
            input: format!("maxima_twocol class sizes n={n}"),
            expected: "equal".into(),
            actual: e.to_string(),
        }),
    }

    // B(z)^2 = 1/(1-4z^2) at m = n - 1
    let m = n - 1;
    let convolution: Count = (0..=m)
        .map(|j| binomial::<Count>(2 * j, j) * binomial::<Count>(2 * m - 2 * j, m - j))
        .sum();
    let want = pow::<Count>(4, m);
    report.check_eq(
        || format!("two-colored bridges of length {}", 2 * m),
        (want.clone(), want),
        (convolution, Count::from(TwoColoredBridge::all(2 * m).len())),
    );
}

fn chain_suite(report: &mut VerificationReport, n: usize) {
    let runner = RefCell::new(Chain::new());
    let apply = |x: &ChainObject, from, to| runner.borrow_mut().apply(x.clone(), from, to);
    let members: Vec<Vec<ChainObject>> = ChainClass::ALL.iter().map(|c| c.enumerate(n)).collect();
    for (from, objs) in ChainClass::ALL.into_iter().zip(&members) {
        for (to, targets) in ChainClass::ALL.into_iter().zip(&members) {
            check_bijection(
                report,
                Mode::RoundTrip,
                &format!("chain {from}->{to}"),
                n,
                objs,
                &[],
                |x| apply(x, from, to),
                |y| apply(y, to, from),
            );
            injective(
                report,
                &format!("chain {from}->{to} n={n}"),
                objs,
                targets,
                &|x| apply(x, from, to),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        for s in Suite::PARTS.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!(matches!(
            verify_suite("speed", 3),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn cardinality_counts_six_classes_per_size() {
        let r = verify_suite("cardinality", 5).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checked, Count::from(30u8));
    }

    #[test]
    fn roundtrip_at_one() {
        let r = verify_suite("roundtrip", 1).unwrap();
        assert!(r.passed(), "{r}");
        // 7 bijections, one object on each side (two bridges and meanders)
        assert_eq!(r.checked, Count::from(16u8));
    }

    #[test]
    fn each_suite_passes_small() {
        for s in Suite::PARTS {
            let r = s.run(4);
            assert!(r.passed(), "{r}");
            assert!(r.checked > Count::from(0u8), "{s}");
        }
    }

    #[test]
    fn all_is_deterministic_and_merges_parts() {
        let a = verify_suite("all", 3).unwrap();
        assert_eq!(a, verify_suite("all", 3).unwrap());
        let sum: Count = Suite::PARTS.iter().map(|s| s.run(3).checked).sum();
        assert_eq!(a.checked, sum);
    }

    #[test]
    fn failures_are_reported_not_panicked() {
        let mut r = VerificationReport::new("t", 1, 1);
        check_bijection(
            &mut r,
            Mode::Injective,
            "const",
            1,
            &[1u8, 2],
            &[7u8, 8],
            |_| Ok(7u8),
            |_| Err(Error::ZeroPart),
        );
        assert!(!r.passed());
        assert_eq!(r.failures.len(), 5);
    }
}
