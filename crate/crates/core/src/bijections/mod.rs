//! The bijections between the six classes counted by `4^(n-1)`, each with an
//! explicit inverse, plus the peak-to-bridge map and the bridge/meander helper.
//!
//! Class sizes in terms of `n`:
//!
//! | class                                     | object size |
//! |-------------------------------------------|-------------|
//! | 3-compositions, pairs of compositions     | `n`         |
//! | walks, two-colored bridges                | `2n - 2`    |
//! | marked strict maxima, height-labeled peaks| `2n`        |

mod bridge_meander;
mod chain;
mod colored_pair;
mod label_maxima;
mod maxima_twocol;
mod pair_walk;
mod peak_bridge;
mod two_colored;

pub use bridge_meander::{bridge_to_meander, meander_to_bridge};
pub use chain::{chain, Chain, ChainClass, ChainObject};
pub use colored_pair::{colored_to_pair, pair_to_colored};
pub use label_maxima::{height_labeled_to_marked_bridge, marked_bridge_to_height_labeled};
pub use maxima_twocol::{
    marked_bridge_to_two_colored, two_colored_to_marked_bridge, StatisticTransfer,
};
pub use pair_walk::{pair_to_walk, walk_to_pair};
pub use peak_bridge::{bridge_to_marked_peak, marked_peak_to_bridge};
pub use two_colored::{two_colored_to_walk, walk_to_two_colored};

use crate::enumerate::enumerate_paths;
use crate::error::{Error, Result};
use crate::path::{Path, PathClass, Peak};

/// Dyck path with one distinguished peak.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedPeakPath {
    path: Path,
    peak: Peak,
}

impl MarkedPeakPath {
    pub fn new(path: Path, up_index: usize) -> Result<MarkedPeakPath> {
        if !path.is_in_class(PathClass::DyckPath) {
            return Err(Error::NotADyckPath(path.to_string()));
        }
        let peak = path.peak_at(up_index).ok_or_else(|| Error::NotAPeak {
            path: path.to_string(),
            index: up_index,
        })?;
        Ok(MarkedPeakPath { path, peak })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn peak(&self) -> Peak {
        self.peak
    }

    pub fn height(&self) -> usize {
        self.peak.height as usize
    }

    /// Every marked peak over Dyck paths of length `2 * semilength`.
    pub fn all(semilength: usize) -> Vec<MarkedPeakPath> {
        enumerate_paths(PathClass::DyckPath, 2 * semilength)
            .into_iter()
            .flat_map(|path| {
                path.peaks().into_iter().map(move |peak| MarkedPeakPath {
                    path: path.clone(),
                    peak,
                })
            })
            .collect()
    }
}

/// Dyck path with one distinguished peak carrying a label in `1..=height`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeightLabeledPath {
    marked: MarkedPeakPath,
    label: u32,
}

impl HeightLabeledPath {
    pub fn new(path: Path, up_index: usize, label: u32) -> Result<HeightLabeledPath> {
        let marked = MarkedPeakPath::new(path, up_index)?;
        if label == 0 || i64::from(label) > marked.peak.height {
            return Err(Error::LabelOutOfRange {
                label,
                height: marked.peak.height,
            });
        }
        Ok(HeightLabeledPath { marked, label })
    }

    pub fn path(&self) -> &Path {
        &self.marked.path
    }

    pub fn peak(&self) -> Peak {
        self.marked.peak
    }

    pub fn height(&self) -> usize {
        self.marked.height()
    }

    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn all(semilength: usize) -> Vec<HeightLabeledPath> {
        MarkedPeakPath::all(semilength)
            .into_iter()
            .flat_map(|marked| {
                (1..=marked.height() as u32).map(move |label| HeightLabeledPath {
                    marked: marked.clone(),
                    label,
                })
            })
            .collect()
    }
}

/// Bridge with a marked strict left-to-right maximum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedBridge {
    path: Path,
    peak: Peak,
}

impl MarkedBridge {
    pub fn new(path: Path, up_index: usize) -> Result<MarkedBridge> {
        if !path.is_in_class(PathClass::Bridge) {
            return Err(Error::NotABridge(path.to_string()));
        }
        let peak = path
            .strict_ltr_maxima()
            .into_iter()
            .find(|pk| pk.up_index == up_index)
            .ok_or_else(|| Error::NotAStrictMaximum {
                path: path.to_string(),
                index: up_index,
            })?;
        Ok(MarkedBridge { path, peak })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn peak(&self) -> Peak {
        self.peak
    }

    pub fn height(&self) -> usize {
        self.peak.height as usize
    }

    /// Crossings at positions after the marked peak's up step.
    pub fn crossings_after(&self) -> usize {
        self.path
            .crossings()
            .into_iter()
            .filter(|&c| c > self.peak.up_index)
            .count()
    }

    /// Canonical order: path lexicographic, then peak position.
    pub fn all(semilength: usize) -> Vec<MarkedBridge> {
        enumerate_paths(PathClass::Bridge, 2 * semilength)
            .into_iter()
            .flat_map(|path| {
                path.strict_ltr_maxima()
                    .into_iter()
                    .map(move |peak| MarkedBridge {
                        path: path.clone(),
                        peak,
                    })
            })
            .collect()
    }
}

/// Two bridges, either possibly empty; color 1 then color 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoColoredBridge {
    first: Path,
    second: Path,
}

impl TwoColoredBridge {
    pub fn new(first: Path, second: Path) -> Result<TwoColoredBridge> {
        for b in [&first, &second] {
            if !b.is_in_class(PathClass::Bridge) {
                return Err(Error::NotABridge(b.to_string()));
            }
        }
        Ok(TwoColoredBridge { first, second })
    }

    pub fn first(&self) -> &Path {
        &self.first
    }

    pub fn second(&self) -> &Path {
        &self.second
    }

    pub fn len(&self) -> usize {
        self.first.len() + self.second.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Statistic on the color-1 part matched against marked heights minus one.
    pub fn color_one_statistic(&self) -> usize {
        self.first.signed_crossing_count()
    }

    /// Canonical order: length of the first bridge, then the first bridge
    /// lexicographically, then the second.
    pub fn all(total_length: usize) -> Vec<TwoColoredBridge> {
        if total_length % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for j in (0..=total_length).step_by(2) {
            let seconds = enumerate_paths(PathClass::Bridge, total_length - j);
            for first in enumerate_paths(PathClass::Bridge, j) {
                for second in &seconds {
                    out.push(TwoColoredBridge {
                        first: first.clone(),
                        second: second.clone(),
                    });
                }
            }
        }
        out
    }
}
