//! Marked strict maxima in bridges of length `2n` at height `h`, and
//! two-colored bridges of length `2n - 2` whose color-1 part has signed
//! crossing count `h - 1`.
//!
//! The map is a rank transfer: both sides are enumerated in canonical order
//! within each `(n, h)` class and matched by position. The classes must be
//! equinumerous; [`StatisticTransfer::new`] checks that for every `h` and
//! reports [`Error::ClassSizeMismatch`] otherwise.

use std::collections::{BTreeMap, HashMap};

use super::{MarkedBridge, TwoColoredBridge};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
struct HeightClass {
    marked: Vec<MarkedBridge>,
    colored: Vec<TwoColoredBridge>,
}

/// Precomputed rank-transfer tables for one semilength.
#[derive(Debug, Clone)]
pub struct StatisticTransfer {
    semilength: usize,
    classes: BTreeMap<usize, HeightClass>,
    marked_pos: HashMap<MarkedBridge, usize>,
    colored_pos: HashMap<TwoColoredBridge, usize>,
}

impl StatisticTransfer {
    pub fn new(semilength: usize) -> Result<StatisticTransfer> {
        if semilength == 0 {
            return Err(Error::InvalidSize("marked_bridge".into(), 0));
        }
        let mut classes: BTreeMap<usize, HeightClass> = BTreeMap::new();
        let mut marked_pos = HashMap::new();
        let mut colored_pos = HashMap::new();
        for y in MarkedBridge::all(semilength) {
            let class = classes.entry(y.height()).or_default();
            marked_pos.insert(y.clone(), class.marked.len());
            class.marked.push(y);
        }
        for t in TwoColoredBridge::all(2 * semilength - 2) {
            let class = classes.entry(t.color_one_statistic() + 1).or_default();
            colored_pos.insert(t.clone(), class.colored.len());
            class.colored.push(t);
        }
        for (&height, class) in &classes {
            if class.marked.len() != class.colored.len() {
                return Err(Error::ClassSizeMismatch {
                    length: 2 * semilength,
                    height,
                    marked: class.marked.len(),
                    colored: class.colored.len(),
                });
            }
        }
        Ok(StatisticTransfer {
            semilength,
            classes,
            marked_pos,
            colored_pos,
        })
    }

    pub fn semilength(&self) -> usize {
        self.semilength
    }

    /// `(h, class size)` for every height that occurs.
    pub fn class_sizes(&self) -> Vec<(usize, usize)> {
        self.classes
            .iter()
            .map(|(&h, c)| (h, c.marked.len()))
            .collect()
    }

    pub fn forward(&self, y: &MarkedBridge) -> Result<TwoColoredBridge> {
        let pos = self
            .marked_pos
            .get(y)
            .ok_or_else(|| Error::InvalidSize("marked_bridge".into(), y.path().len() / 2))?;
        Ok(self.classes[&y.height()].colored[*pos].clone())
    }

    pub fn inverse(&self, t: &TwoColoredBridge) -> Result<MarkedBridge> {
        let pos = self
            .colored_pos
            .get(t)
            .ok_or_else(|| Error::InvalidSize("two_colored".into(), t.len() / 2 + 1))?;
        Ok(self.classes[&(t.color_one_statistic() + 1)].marked[*pos].clone())
    }
}

pub fn marked_bridge_to_two_colored(y: &MarkedBridge) -> Result<TwoColoredBridge> {
    StatisticTransfer::new(y.path().len() / 2)?.forward(y)
}

pub fn two_colored_to_marked_bridge(t: &TwoColoredBridge) -> Result<MarkedBridge> {
    if t.len() % 2 == 1 {
        return Err(Error::OddLength(t.len()));
    }
    StatisticTransfer::new(t.len() / 2 + 1)?.inverse(t)
}
