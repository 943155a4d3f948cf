//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p fourpow --test acceptance`.

use std::collections::{BTreeMap, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fourpow::bijections::*;
use fourpow::composition::{Color, ColoredComposition, ColoredPart, Composition, CompositionPair};
use fourpow::sample::sample;
use fourpow::verification::{d_r_count, verify_congruence, verify_suite};
use fourpow::{Count, NamedClass, Object, Path};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// Oracles built from raw step strings, independent of the library's path
// statistics.

fn words(len: usize) -> Vec<String> {
    (0u32..1 << len)
        .map(|bits| {
            (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        'U'
                    } else {
                        'D'
                    }
                })
                .collect()
        })
        .collect()
}

fn alts(w: &str) -> Vec<i64> {
    let mut a = vec![0];
    for c in w.chars() {
        a.push(a.last().unwrap() + if c == 'U' { 1 } else { -1 });
    }
    a
}

fn is_bridge(w: &str) -> bool {
    *alts(w).last().unwrap() == 0
}

fn is_dyck(w: &str) -> bool {
    is_bridge(w) && alts(w).iter().all(|&a| a >= 0)
}

fn crossings(w: &str) -> Vec<usize> {
    let a = alts(w);
    (1..w.len())
        .filter(|&i| a[i] == 0 && a[i - 1] * a[i + 1] == -1)
        .collect()
}

/// `(up index, height)` of every peak.
fn peaks(w: &str) -> Vec<(usize, i64)> {
    let b = w.as_bytes();
    let a = alts(w);
    (0..w.len().saturating_sub(1))
        .filter(|&i| b[i] == b'U' && b[i + 1] == b'D')
        .map(|i| (i, a[i + 1]))
        .collect()
}

fn strict_maxima(w: &str) -> Vec<(usize, i64)> {
    let mut best = i64::MIN;
    let mut out = vec![];
    for (i, h) in peaks(w) {
        if h >= 1 && h > best {
            out.push((i, h));
        }
        best = best.max(h);
    }
    out
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn p(s: &str) -> Path {
    s.parse().unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 1..=6 {
        let want = 4usize.pow(n as u32 - 1);
        for class in ChainClass::ALL {
            let got = class.enumerate(n).len();
            ensure(got == want, || format!("{class} n={n}: {got} != {want}"))?;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!(
        "six classes at n=1..6 have 4^(n-1) members ({t:.2?})"
    ))
}

fn criterion_2() -> Outcome {
    let mut checked = Count::from(0u8);
    for suite in ["roundtrip", "injectivity", "chain"] {
        let r = verify_suite(suite, 5).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{suite}: {:?}", r.failures.first()))?;
        checked += r.checked;
    }
    Ok(format!(
        "round trips, injectivity and chain for n<=5 ({checked} checks)"
    ))
}

fn criterion_3() -> Outcome {
    let mut totals = vec![];
    for n in 1..=6 {
        let mut total = 0u64;
        for w in words(2 * n).into_iter().filter(|w| is_dyck(w)) {
            for (i, h) in peaks(&w) {
                total += 1;
                let m = MarkedPeakPath::new(p(&w), i).map_err(|e| e.to_string())?;
                let b = marked_peak_to_bridge(&m).to_string();
                ensure(is_bridge(&b) && b.len() == w.len(), || {
                    format!("{w}@{i}: {b}")
                })?;
                ensure(b.starts_with('D'), || format!("{w}@{i}: {b} starts with U"))?;
                let c = crossings(&b).len() as i64;
                ensure(c == h - 1, || format!("{w}@{i}: {c} crossings, h={h}"))?;
            }
        }
        totals.push(total);
    }
    let want: Vec<u64> = (1..=6).map(|n| binom(2 * n - 1, n)).collect();
    ensure(totals == want && want == [1, 3, 10, 35, 126, 462], || {
        format!("totals {totals:?}")
    })?;
    Ok(format!(
        "peak->bridge statistics for lengths<=12, totals {totals:?}"
    ))
}

fn criterion_4() -> Outcome {
    for n in 1..=6 {
        for w in words(2 * n).into_iter().filter(|w| is_dyck(w)) {
            for (i, h) in peaks(&w) {
                for mu in 1..=h {
                    let x =
                        HeightLabeledPath::new(p(&w), i, mu as u32).map_err(|e| e.to_string())?;
                    let y = height_labeled_to_marked_bridge(&x);
                    let b = y.path().to_string();
                    let j = y.peak().up_index;
                    ensure(strict_maxima(&b).contains(&(j, mu)), || {
                        format!("{w}@{i}/{mu}: {b}@{j} is not a height-{mu} maximum")
                    })?;
                    let after = crossings(&b).into_iter().filter(|&c| c > j).count() as i64;
                    ensure(after == h - mu, || format!("{w}@{i}/{mu}: {after} after"))?;
                }
            }
        }
    }
    let cases = [
        (("UUDD", 1, 2), ("UUDD", 1)),
        (("UUDD", 1, 1), ("UDDU", 0)),
        (("UDUD", 0, 1), ("UDUD", 0)),
        (("UDUD", 2, 1), ("DUUD", 2)),
    ];
    for ((w, i, mu), (b, j)) in cases {
        let x = HeightLabeledPath::new(p(w), i, mu).map_err(|e| e.to_string())?;
        let y = height_labeled_to_marked_bridge(&x);
        let got = (y.path().to_string(), y.peak().up_index);
        ensure(got == (b.to_string(), j), || {
            format!("({w},{i},{mu}) -> {got:?}")
        })?;
    }
    Ok("label->maxima statistics for lengths<=12 and the four n=2 images".into())
}

fn criterion_5() -> Outcome {
    for n in 1..=6 {
        let mut marked: BTreeMap<usize, usize> = BTreeMap::new();
        let bridges: Vec<String> = words(2 * n).into_iter().filter(|w| is_bridge(w)).collect();
        for w in &bridges {
            for (_, h) in strict_maxima(w) {
                *marked.entry(h as usize).or_default() += 1;
            }
        }
        let mut colored: BTreeMap<usize, usize> = BTreeMap::new();
        for j in (0..=2 * n - 2).step_by(2) {
            let seconds = words(2 * n - 2 - j)
                .into_iter()
                .filter(|w| is_bridge(w))
                .count();
            for first in words(j).into_iter().filter(|w| is_bridge(w)) {
                let stat = crossings(&first).len() + usize::from(first.starts_with('U'));
                *colored.entry(stat + 1).or_default() += seconds;
            }
        }
        ensure(marked == colored, || {
            format!("n={n}: {marked:?} vs {colored:?}")
        })?;
        let t = StatisticTransfer::new(n).map_err(|e| format!("n={n}: {e}"))?;
        let sizes: BTreeMap<usize, usize> = t.class_sizes().into_iter().collect();
        ensure(sizes == marked, || {
            format!("n={n}: library sizes {sizes:?}")
        })?;
        if n == 3 {
            let v: Vec<usize> = sizes.values().copied().collect();
            ensure(v == [10, 5, 1], || format!("n=3 sizes {v:?}"))?;
        }
    }
    Ok("height classes equinumerous for n<=6, n=3 sizes {10, 5, 1}".into())
}

fn criterion_6() -> Outcome {
    let part = |value, c| ColoredPart {
        value,
        color: Color::from_index(c).unwrap(),
    };
    let colored =
        ColoredComposition::new(vec![part(6, 1), part(1, 2), part(4, 3), part(2, 1)]).unwrap();
    let pair = CompositionPair::new(
        Composition::new(vec![6, 5, 2]).unwrap(),
        Composition::new(vec![6, 1, 6]).unwrap(),
    )
    .unwrap();
    let fwd = colored_to_pair(&colored).map_err(|e| e.to_string())?;
    ensure(fwd == pair, || format!("forward gave {fwd:?}"))?;
    let inv = pair_to_colored(&pair);
    ensure(inv == colored, || format!("inverse gave {inv}"))?;
    ensure(inv.to_string() == "6_1+1_2+4_3+2_1", || inv.to_string())?;
    Ok("6_1+1_2+4_3+2_1 <-> ((6,5,2),(6,1,6))".into())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    ensure(d_r_count(1, 3) == Count::from(2u8), || "D_1(3) != 2".into())?;
    let mut values = vec![];
    for r in 1..=3 {
        let rep = verify_congruence(r, 10);
        ensure(rep.passed(), || format!("r={r}: {:?}", rep.failures))?;
        values.push(format!("r={r}: {} sizes", rep.checked));
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!(
        "(r+1) | D_r(n) for r<n<=10 ({}; {t:.2?})",
        values.join(", ")
    ))
}

fn criterion_8() -> Outcome {
    for m in 0..=6u64 {
        let conv: u64 = (0..=m)
            .map(|j| binom(2 * j, j) * binom(2 * m - 2 * j, m - j))
            .sum();
        let counted = TwoColoredBridge::all(2 * m as usize).len() as u64;
        let want = 4u64.pow(m as u32);
        ensure(conv == want && counted == want, || {
            format!("m={m}: convolution {conv}, enumerated {counted}")
        })?;
    }
    Ok("two-colored bridges of length 2m number 4^m for m<=6".into())
}

fn criterion_9() -> Outcome {
    let seed = 20_241_018;
    let draws = sample(NamedClass::Bridge, 3, 60_000, seed).map_err(|e| e.to_string())?;
    let replay = sample(NamedClass::Bridge, 3, 60_000, seed).map_err(|e| e.to_string())?;
    ensure(draws == replay, || "replay differs".into())?;
    let mut freq: HashMap<String, usize> = HashMap::new();
    for d in draws {
        match d {
            Object::Path(path) => *freq.entry(path.to_string()).or_default() += 1,
            other => return Err(format!("unexpected object {other:?}")),
        }
    }
    let bridges: Vec<String> = words(6).into_iter().filter(|w| is_bridge(w)).collect();
    ensure(bridges.len() == 20, || "oracle".into())?;
    let (lo, hi) = (
        bridges
            .iter()
            .map(|b| freq.get(b).copied().unwrap_or(0))
            .min()
            .unwrap(),
        bridges
            .iter()
            .map(|b| freq.get(b).copied().unwrap_or(0))
            .max()
            .unwrap(),
    );
    ensure(freq.len() == 20 && lo >= 2700 && hi <= 3300, || {
        format!("{} distinct, counts {lo}..{hi}", freq.len())
    })?;
    Ok(format!(
        "60000 bridge draws, counts within {lo}..{hi}, replay identical"
    ))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 9] = [
        ("cardinality", criterion_1),
        ("round trips", criterion_2),
        ("peak to bridge", criterion_3),
        ("label to maxima", criterion_4),
        ("maxima equinumerosity", criterion_5),
        ("worked example", criterion_6),
        ("congruence", criterion_7),
        ("two-colored count", criterion_8),
        ("sampling uniformity", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} [{name}]: PASS - {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL - {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
