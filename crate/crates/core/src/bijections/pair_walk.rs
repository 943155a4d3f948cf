//! Pairs of compositions of `n` and walks of length `2n - 2`.
//!
//! Both compositions are bit-encoded, their (always present) trailing ones
//! dropped, and the two strings concatenated; zeros become up steps and ones
//! down steps.

use crate::composition::{Composition, CompositionPair};
use crate::error::{Error, Result};
use crate::path::{Path, Step};

pub fn pair_to_walk(pair: &CompositionPair) -> Path {
    let mut steps = Vec::with_capacity(2 * pair.size() - 2);
    for c in [pair.first(), pair.second()] {
        let bits = c.to_bits();
        steps.extend(
            bits[..bits.len() - 1]
                .iter()
                .map(|&b| if b { Step::Down } else { Step::Up }),
        );
    }
    Path::new(steps)
}

pub fn walk_to_pair(walk: &Path) -> Result<CompositionPair> {
    if walk.len() % 2 == 1 {
        return Err(Error::OddLength(walk.len()));
    }
    let half = walk.len() / 2;
    let decode = |steps: &[Step]| {
        let mut bits: Vec<bool> = steps.iter().map(|&s| s == Step::Down).collect();
        bits.push(true);
        Composition::from_bits(&bits)
    };
    let first = decode(&walk.steps()[..half])?;
    let second = decode(&walk.steps()[half..])?;
    CompositionPair::new(first, second)
}
