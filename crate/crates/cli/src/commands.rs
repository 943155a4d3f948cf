use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use fourpow::bijections::*;
use fourpow::sample::sample;
use fourpow::verification::{oeis_compare, verify_suite, VerificationReport};
use fourpow::{NamedClass, Object};

use crate::record::{path_view, Record};
use crate::render::svg;
use crate::{Bijection, Command, Direction};

type Result<T> = std::result::Result<T, String>;

fn domain(e: fourpow::Error) -> String {
    e.to_string()
}

pub fn run(cmd: Command) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match cmd {
        Command::Enumerate { class, n } => {
            let class: NamedClass = class.parse().map_err(domain)?;
            let all = class.enumerate(n).map_err(domain)?;
            write_objects(&mut out, &all)?;
            ExitCode::SUCCESS
        }
        Command::Count { class, n } => {
            let class: NamedClass = class.parse().map_err(domain)?;
            let c = class.closed_form_count(n).map_err(domain)?;
            writeln!(out, "{c}").map_err(io_err)?;
            ExitCode::SUCCESS
        }
        Command::Map {
            bijection,
            direction,
        } => {
            let mut mapper = Mapper::new(bijection, direction);
            for_each_record(|o| {
                let image = mapper.apply(o)?;
                writeln!(out, "{}", Record::from(&image).to_line()).map_err(io_err)
            })?;
            ExitCode::SUCCESS
        }
        Command::Chain { from, to } => {
            let from: ChainClass = from.parse().map_err(domain)?;
            let to: ChainClass = to.parse().map_err(domain)?;
            let mut runner = Chain::new();
            for_each_record(|o| {
                let x = chain_object(o, from)?;
                let y = runner.apply(x, from, to).map_err(domain)?;
                writeln!(out, "{}", Record::from(&Object::from(y)).to_line()).map_err(io_err)
            })?;
            ExitCode::SUCCESS
        }
        Command::Verify { suite, max_n, json } => {
            let report = verify_suite(&suite, max_n).map_err(domain)?;
            print_report(&mut out, &report, json)?;
            ExitCode::from(report_status(&report))
        }
        Command::Oeis {
            sequence,
            max_n,
            json,
        } => {
            let report = oeis_compare(&sequence, max_n).map_err(domain)?;
            print_report(&mut out, &report, json)?;
            ExitCode::from(report_status(&report))
        }
        Command::Sample {
            class,
            n,
            count,
            seed,
        } => {
            let class: NamedClass = class.parse().map_err(domain)?;
            let draws = sample(class, n, count, seed).map_err(domain)?;
            write_objects(&mut out, &draws)?;
            ExitCode::SUCCESS
        }
        Command::Render { output } => {
            let mut docs = Vec::new();
            for_each_record(|o| {
                let (path, peak) = path_view(&o).ok_or_else(|| {
                    format!(
                        "{} records cannot be rendered",
                        Record::from(&o).type_name()
                    )
                })?;
                docs.push(svg(path, peak));
                Ok(())
            })?;
            match output {
                None => {
                    for d in &docs {
                        out.write_all(d.as_bytes()).map_err(io_err)?;
                    }
                }
                Some(file) if docs.len() == 1 => write_file(&file, &docs[0])?,
                Some(file) => {
                    for (i, d) in docs.iter().enumerate() {
                        write_file(&numbered(&file, i + 1), d)?;
                    }
                }
            }
            ExitCode::SUCCESS
        }
    };
    out.flush().map_err(io_err)?;
    Ok(code)
}

fn io_err(e: io::Error) -> String {
    format!("i/o error: {e}")
}

fn write_file(file: &FsPath, contents: &str) -> Result<()> {
    fs::write(file, contents).map_err(|e| format!("cannot write {}: {e}", file.display()))
}

/// `dir/name.svg` becomes `dir/name-i.svg`.
fn numbered(file: &FsPath, i: usize) -> PathBuf {
    let stem = file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let name = match file.extension() {
        Some(ext) => format!("{stem}-{i}.{}", ext.to_string_lossy()),
        None => format!("{stem}-{i}"),
    };
    file.with_file_name(name)
}

fn write_objects(out: &mut impl Write, objects: &[Object]) -> Result<()> {
    for o in objects {
        writeln!(out, "{}", Record::from(o).to_line()).map_err(io_err)?;
    }
    Ok(())
}

/// Reads JSON Lines from standard input, skipping blank lines, and stops at
/// the first invalid record.
fn for_each_record(mut f: impl FnMut(Object) -> Result<()>) -> Result<()> {
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line.map_err(io_err)?;
        if line.trim().is_empty() {
            continue;
        }
        let record = Record::parse_line(&line).map_err(|e| format!("line {}: {e}", i + 1))?;
        let object = Object::try_from(&record).map_err(|e| format!("line {}: {e}", i + 1))?;
        f(object).map_err(|e| format!("line {}: {e}", i + 1))?;
    }
    Ok(())
}

fn print_report(out: &mut impl Write, report: &VerificationReport, json: bool) -> Result<()> {
    let text = if json {
        serde_json::to_string(report).map_err(|e| e.to_string())?
    } else {
        report.to_string()
    };
    writeln!(out, "{text}").map_err(io_err)
}

fn report_status(report: &VerificationReport) -> u8 {
    if report.passed() {
        0
    } else {
        1
    }
}

fn chain_object(o: Object, class: ChainClass) -> Result<ChainObject> {
    let x = match (o, class) {
        (Object::ColoredComposition(c), ChainClass::ThreeCompositions) => {
            ChainObject::ThreeComposition(c)
        }
        (Object::Pair(p), ChainClass::Pairs) => ChainObject::Pair(p),
        (Object::Path(w), ChainClass::Walks) => ChainObject::Walk(w),
        (Object::TwoColored(t), ChainClass::TwoColored) => ChainObject::TwoColored(t),
        (Object::MarkedBridge(y), ChainClass::MarkedBridges) => ChainObject::MarkedBridge(y),
        (Object::HeightLabeled(x), ChainClass::HeightLabeled) => ChainObject::HeightLabeled(x),
        (o, _) => {
            return Err(format!(
                "class {class} does not contain {} records",
                Record::from(&o).type_name()
            ))
        }
    };
    Ok(x)
}

struct Mapper {
    bijection: Bijection,
    direction: Direction,
    transfers: HashMap<usize, StatisticTransfer>,
}

impl Mapper {
    fn new(bijection: Bijection, direction: Direction) -> Mapper {
        Mapper {
            bijection,
            direction,
            transfers: HashMap::new(),
        }
    }

    fn transfer(&mut self, semilength: usize) -> Result<&StatisticTransfer> {
        Ok(match self.transfers.entry(semilength) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(StatisticTransfer::new(semilength).map_err(domain)?),
        })
    }

    fn apply(&mut self, o: Object) -> Result<Object> {
        use Bijection as B;
        use Direction::{Fwd, Inv};
        let image = match (self.bijection, self.direction, o) {
            (B::PairWalk, Fwd, Object::Pair(p)) => Object::Path(pair_to_walk(&p)),
            (B::PairWalk, Inv, Object::Path(w)) => Object::Pair(walk_to_pair(&w).map_err(domain)?),
            (B::ColoredPair, Fwd, Object::ColoredComposition(c)) => {
                Object::Pair(colored_to_pair(&c).map_err(domain)?)
            }
            (B::ColoredPair, Inv, Object::Pair(p)) => {
                Object::ColoredComposition(pair_to_colored(&p))
            }
            (B::TwocolWalk, Fwd, Object::TwoColored(t)) => Object::Path(two_colored_to_walk(&t)),
            (B::TwocolWalk, Inv, Object::Path(w)) => {
                Object::TwoColored(walk_to_two_colored(&w).map_err(domain)?)
            }
            (B::BridgeMeander, Fwd, Object::Path(b)) => {
                Object::Path(bridge_to_meander(&b).map_err(domain)?)
            }
            (B::BridgeMeander, Inv, Object::Path(m)) => {
                Object::Path(meander_to_bridge(&m).map_err(domain)?)
            }
            (B::PeakBridge, Fwd, Object::MarkedPeak(m)) => Object::Path(marked_peak_to_bridge(&m)),
            (B::PeakBridge, Inv, Object::Path(b)) => {
                Object::MarkedPeak(bridge_to_marked_peak(&b).map_err(domain)?)
            }
            (B::LabelMaxima, Fwd, Object::HeightLabeled(x)) => {
                Object::MarkedBridge(height_labeled_to_marked_bridge(&x))
            }
            (B::LabelMaxima, Inv, Object::MarkedBridge(y)) => {
                Object::HeightLabeled(marked_bridge_to_height_labeled(&y))
            }
            (B::MaximaTwocol, Fwd, Object::MarkedBridge(y)) => {
                let t = self.transfer(y.path().len() / 2)?;
                Object::TwoColored(t.forward(&y).map_err(domain)?)
            }
            (B::MaximaTwocol, Inv, Object::TwoColored(t)) => {
                if t.len() % 2 == 1 {
                    return Err(domain(fourpow::Error::OddLength(t.len())));
                }
                let tr = self.transfer(t.len() / 2 + 1)?;
                Object::MarkedBridge(tr.inverse(&t).map_err(domain)?)
            }
            (b, d, o) => {
                return Err(format!(
                    "{} {} does not accept {} records",
                    bijection_name(b),
                    if d == Fwd { "fwd" } else { "inv" },
                    Record::from(&o).type_name()
                ))
            }
        };
        Ok(image)
    }
}

fn bijection_name(b: Bijection) -> String {
    use clap::ValueEnum;
    b.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}
