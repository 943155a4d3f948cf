//! Dyck paths with a marked peak of height `h` and bridges that start with a
//! down step and cross the x-axis `h - 1` times.
//!
//! With the peak decomposition `L_1 u ... L_h u | d R_h ... d R_1`, the blocks
//! `D_k = u L_k d R_k` are concatenated in order, reflecting those with odd
//! index. Consecutive blocks sit on opposite sides of the axis, so each
//! junction is a crossing.

use super::MarkedPeakPath;
use crate::decompose::{assemble, decompose_at_peak, split_block};
use crate::error::{Error, Result};
use crate::path::{Path, PathClass, Step};

pub fn marked_peak_to_bridge(m: &MarkedPeakPath) -> Path {
    let d = decompose_at_peak(m.path(), m.peak().up_index).expect("validated marked peak");
    let mut out = Path::empty();
    for k in 1..=d.height() {
        let block = d.block(k);
        if k % 2 == 1 {
            out.extend(&block.reflect());
        } else {
            out.extend(&block);
        }
    }
    out
}

pub fn bridge_to_marked_peak(bridge: &Path) -> Result<MarkedPeakPath> {
    if !bridge.is_in_class(PathClass::Bridge) {
        return Err(Error::NotABridge(bridge.to_string()));
    }
    if bridge.first_step() != Some(Step::Down) {
        return Err(Error::NotStartingDown(bridge.to_string()));
    }
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for comp in bridge.split_at_vertices(&bridge.crossings()) {
        let block = if comp.first_step() == Some(Step::Down) {
            comp.reflect()
        } else {
            comp
        };
        let (l, r) = split_block(&block);
        lefts.push(l);
        rights.push(r);
    }
    let (path, peak) = assemble(lefts.iter(), rights.iter().rev());
    MarkedPeakPath::new(path, peak)
}
