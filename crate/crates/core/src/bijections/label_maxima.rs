//! Dyck paths with a height-labeled peak (label `mu`, height `h`) and bridges
//! with a marked strict left-to-right maximum at height `mu` followed by
//! `h - mu` crossings.
//!
//! From the peak decomposition, the image is
//!
//! ```text
//! ~L_1 u ~L_2 u ... u ~L_mu [u d] R_mu d ... d R_1  ~D_{mu+1} D_{mu+2} ~D_{mu+3} ...
//! ```
//!
//! where `~` is reflection and `D_k = u L_k d R_k`. The reflected `L_k` keep
//! the new peak a strict record; the trailing blocks alternate sides, one
//! crossing per block.

use super::{HeightLabeledPath, MarkedBridge};
use crate::decompose::{
    assemble, decompose_at_peak, first_passage_ascent, first_passage_descent, split_block,
};
use crate::path::Path;

pub fn height_labeled_to_marked_bridge(x: &HeightLabeledPath) -> MarkedBridge {
    let d = decompose_at_peak(x.path(), x.peak().up_index).expect("validated labeled peak");
    let mu = x.label() as usize;
    let reflected: Vec<Path> = (1..=mu).map(|k| d.left(k).reflect()).collect();
    let rights: Vec<&Path> = (1..=mu).rev().map(|k| d.right(k)).collect();
    let (mut out, peak) = assemble(reflected.iter(), rights.into_iter());
    for (j, k) in (mu + 1..=d.height()).enumerate() {
        let block = d.block(k);
        if j % 2 == 0 {
            out.extend(&block.reflect());
        } else {
            out.extend(&block);
        }
    }
    MarkedBridge::new(out, peak).expect("image peak is a strict maximum")
}

pub fn marked_bridge_to_height_labeled(y: &MarkedBridge) -> HeightLabeledPath {
    let path = y.path();
    let peak = y.peak().up_index;
    let mu = y.height();
    let after: Vec<usize> = path.crossings().into_iter().filter(|&c| c > peak).collect();
    let cut = after.first().copied().unwrap_or(path.len());

    // the marked peak is the first arrival at its height
    let mut lefts: Vec<Path> = first_passage_ascent(&path.slice(0..peak + 1), mu)
        .iter()
        .map(Path::reflect)
        .collect();
    let descent = first_passage_descent(&path.slice(peak + 1..cut), mu);
    // R_mu..R_1 in path order; store as R_1..R_mu
    let mut rights: Vec<Path> = descent.into_iter().rev().collect();

    let tail = path.slice(cut..path.len());
    let inner: Vec<usize> = after.iter().map(|c| c - cut).skip(1).collect();
    for (j, block) in tail.split_at_vertices(&inner).into_iter().enumerate() {
        if block.is_empty() {
            continue;
        }
        let block = if j % 2 == 0 { block.reflect() } else { block };
        let (l, r) = split_block(&block);
        lefts.push(l);
        rights.push(r);
    }
    let (dyck, up) = assemble(lefts.iter(), rights.iter().rev());
    HeightLabeledPath::new(dyck, up, mu as u32).expect("preimage is a labeled Dyck path")
}
