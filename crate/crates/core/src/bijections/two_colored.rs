//! Two-colored bridges and unconstrained walks of the same even length.
//!
//! The color change becomes the walk's last crossing of the x-axis:
//!
//! * both parts nonempty: the second bridge is turned into a meander and
//!   attached on the side opposite to the first bridge's final excursion;
//! * only the first part: its meander;
//! * only the second part: its reflected meander;
//! * both empty: the empty walk.

use super::bridge_meander::{bridge_to_meander, meander_to_bridge};
use super::TwoColoredBridge;
use crate::error::{Error, Result};
use crate::path::{Path, Step};

pub fn two_colored_to_walk(t: &TwoColoredBridge) -> Path {
    let meander = |b: &Path| bridge_to_meander(b).expect("component is a bridge");
    match (t.first().is_empty(), t.second().is_empty()) {
        (true, true) => Path::empty(),
        (false, true) => meander(t.first()),
        (true, false) => meander(t.second()).reflect(),
        (false, false) => {
            let m = meander(t.second());
            // a final down step means the last excursion was above the axis
            let tail = if t.first().steps().last() == Some(&Step::Down) {
                m.reflect()
            } else {
                m
            };
            Path::concat([t.first(), &tail])
        }
    }
}

pub fn walk_to_two_colored(walk: &Path) -> Result<TwoColoredBridge> {
    if walk.len() % 2 == 1 {
        return Err(Error::OddLength(walk.len()));
    }
    let unsign = |p: &Path| {
        let m = if p.first_step() == Some(Step::Down) {
            p.reflect()
        } else {
            p.clone()
        };
        meander_to_bridge(&m)
    };
    match walk.crossings().last() {
        Some(&j) => {
            let first = walk.slice(0..j);
            let second = unsign(&walk.slice(j..walk.len()))?;
            TwoColoredBridge::new(first, second)
        }
        None if walk.is_empty() => TwoColoredBridge::new(Path::empty(), Path::empty()),
        None if walk.first_step() == Some(Step::Up) => {
            TwoColoredBridge::new(meander_to_bridge(walk)?, Path::empty())
        }
        None => TwoColoredBridge::new(Path::empty(), unsign(walk)?),
    }
}
