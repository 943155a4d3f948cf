//! Passage decompositions of a Dyck path around a peak.
//!
//! Splitting a Dyck path at a peak of height `h` gives `L R` with `L` ending
//! in the peak's up step. The last-passage decomposition writes
//! `L = L_1 u L_2 u ... L_h u` (cutting at the up step that leaves each
//! altitude for the last time), and the first-passage decomposition writes
//! `R = d R_h d ... d R_1` (cutting at the down step that first reaches each
//! lower altitude). Every `L_k`, `R_k` is a Dyck path.

use crate::error::{Error, Result};
use crate::path::{Path, PathClass, Step};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakDecomposition {
    /// `L_1, ..., L_h`.
    pub pre: Vec<Path>,
    /// `R_h, ..., R_1`, in path order.
    pub post: Vec<Path>,
}

impl PeakDecomposition {
    pub fn height(&self) -> usize {
        self.pre.len()
    }

    /// `L_k`, 1-based.
    pub fn left(&self, k: usize) -> &Path {
        &self.pre[k - 1]
    }

    /// `R_k`, 1-based.
    pub fn right(&self, k: usize) -> &Path {
        &self.post[self.post.len() - k]
    }

    /// The nonempty Dyck path `D_k = u L_k d R_k`.
    pub fn block(&self, k: usize) -> Path {
        let mut d = Path::empty();
        d.push(Step::Up);
        d.extend(self.left(k));
        d.push(Step::Down);
        d.extend(self.right(k));
        d
    }

    /// Rebuild `L_1 u ... L_h u d R_h ... d R_1` and the peak's up index.
    pub fn reassemble(&self) -> (Path, usize) {
        assemble(self.pre.iter(), self.post.iter())
    }
}

/// Glues `L_1 u L_2 u ... L_h u` and `d R_h d ... d R_1`, returning the path
/// and the index of the final up step of the left half.
pub(crate) fn assemble<'a>(
    pre: impl Iterator<Item = &'a Path>,
    post: impl Iterator<Item = &'a Path>,
) -> (Path, usize) {
    let mut out = Path::empty();
    for l in pre {
        out.extend(l);
        out.push(Step::Up);
    }
    let peak = out.len() - 1;
    for r in post {
        out.push(Step::Down);
        out.extend(r);
    }
    (out, peak)
}

pub fn decompose_at_peak(path: &Path, up_index: usize) -> Result<PeakDecomposition> {
    if !path.is_in_class(PathClass::DyckPath) {
        return Err(Error::NotADyckPath(path.to_string()));
    }
    let peak = path.peak_at(up_index).ok_or_else(|| Error::NotAPeak {
        path: path.to_string(),
        index: up_index,
    })?;
    // a Dyck path has no peak below height 1
    let h = peak.height as usize;
    let pre = last_passage_ascent(&path.slice(0..up_index + 1), h);
    let post = first_passage_descent(&path.slice(up_index + 1..path.len()), h);
    Ok(PeakDecomposition { pre, post })
}

/// Splits `S_1 u S_2 u ... S_h u` (from altitude 0 up to `h`, weakly above 0)
/// at the up step leaving each altitude for the last time. Returns `S_1..S_h`.
pub(crate) fn last_passage_ascent(seg: &Path, h: usize) -> Vec<Path> {
    let alts = seg.altitudes();
    let mut last_up = vec![0usize; h];
    for (i, s) in seg.steps().iter().enumerate() {
        if *s == Step::Up && alts[i] >= 0 && (alts[i] as usize) < h {
            last_up[alts[i] as usize] = i;
        }
    }
    cut_around(seg, &last_up)
}

/// Splits `S_1 u S_2 u ... S_h u` (from altitude 0 up to `h`) at the up step
/// first reaching each new altitude. Returns `S_1..S_h`; each `S_k` stays
/// weakly below altitude `k - 1`.
pub(crate) fn first_passage_ascent(seg: &Path, h: usize) -> Vec<Path> {
    let alts = seg.altitudes();
    let mut cuts = Vec::with_capacity(h);
    for (i, s) in seg.steps().iter().enumerate() {
        if *s == Step::Up && alts[i + 1] == cuts.len() as i64 + 1 {
            cuts.push(i);
            if cuts.len() == h {
                break;
            }
        }
    }
    cut_around(seg, &cuts)
}

/// Splits `d S_h d S_{h-1} ... d S_1` (from altitude `h` down to 0) at the
/// down step first reaching each lower altitude. Returns `S_h..S_1` in path
/// order.
pub(crate) fn first_passage_descent(seg: &Path, h: usize) -> Vec<Path> {
    let alts = seg.altitudes();
    let mut cuts = Vec::with_capacity(h);
    let mut target = h as i64 - 1;
    for (i, s) in seg.steps().iter().enumerate() {
        if target < 0 {
            break;
        }
        // altitudes here are relative to the starting height
        if *s == Step::Down && alts[i + 1] == target - h as i64 {
            cuts.push(i);
            target -= 1;
        }
    }
    let mut out = Vec::with_capacity(h);
    for (j, &d) in cuts.iter().enumerate() {
        let end = cuts.get(j + 1).copied().unwrap_or(seg.len());
        out.push(seg.slice(d + 1..end));
    }
    out
}

/// Splits a nonempty positive excursion block `u L d R` into `(L, R)`, cutting
/// at the first return of the leading arch.
pub(crate) fn split_block(block: &Path) -> (Path, Path) {
    let j = block
        .first_return_after(0)
        .expect("block is a nonempty Dyck path");
    (block.slice(1..j - 1), block.slice(j..block.len()))
}

// Pieces strictly between consecutive cut steps, the first starting at 0.
fn cut_around(seg: &Path, cuts: &[usize]) -> Vec<Path> {
    let mut out = Vec::with_capacity(cuts.len());
    let mut start = 0;
    for &c in cuts {
        out.push(seg.slice(start..c));
        start = c + 1;
    }
    out
}
