//! Composition of the bijections along the line of classes
//!
//! ```text
//! 3-compositions <-> pairs <-> walks <-> two-colored <-> marked maxima <-> height-labeled
//! ```
//!
//! Moving right applies each map in its "toward height-labeled" direction,
//! moving left applies the inverses.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::*;
use crate::composition::{
    enumerate_3compositions, enumerate_compositions, ColoredComposition, CompositionPair,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainClass {
    ThreeCompositions,
    Pairs,
    Walks,
    TwoColored,
    MarkedBridges,
    HeightLabeled,
}

impl ChainClass {
    /// In chain order.
    pub const ALL: [ChainClass; 6] = [
        ChainClass::ThreeCompositions,
        ChainClass::Pairs,
        ChainClass::Walks,
        ChainClass::TwoColored,
        ChainClass::MarkedBridges,
        ChainClass::HeightLabeled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChainClass::ThreeCompositions => "3comp",
            ChainClass::Pairs => "pairs",
            ChainClass::Walks => "walk",
            ChainClass::TwoColored => "two_colored",
            ChainClass::MarkedBridges => "marked_bridge",
            ChainClass::HeightLabeled => "height_labeled",
        }
    }

    fn position(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).unwrap()
    }

    /// Every member of size `n` (object lengths `n`, `2n - 2` or `2n` by
    /// class), in the class's canonical order.
    pub fn enumerate(self, n: usize) -> Vec<ChainObject> {
        if n == 0 {
            return Vec::new();
        }
        match self {
            ChainClass::ThreeCompositions => enumerate_3compositions(n)
                .into_iter()
                .map(ChainObject::ThreeComposition)
                .collect(),
            ChainClass::Pairs => {
                let comps = enumerate_compositions(n);
                let mut out = Vec::with_capacity(comps.len() * comps.len());
                for a in &comps {
                    for b in &comps {
                        let pair =
                            CompositionPair::new(a.clone(), b.clone()).expect("same size, n >= 1");
                        out.push(ChainObject::Pair(pair));
                    }
                }
                out
            }
            ChainClass::Walks => {
                crate::enumerate::enumerate_paths(crate::path::PathClass::Walk, 2 * n - 2)
                    .into_iter()
                    .map(ChainObject::Walk)
                    .collect()
            }
            ChainClass::TwoColored => TwoColoredBridge::all(2 * n - 2)
                .into_iter()
                .map(ChainObject::TwoColored)
                .collect(),
            ChainClass::MarkedBridges => MarkedBridge::all(n)
                .into_iter()
                .map(ChainObject::MarkedBridge)
                .collect(),
            ChainClass::HeightLabeled => HeightLabeledPath::all(n)
                .into_iter()
                .map(ChainObject::HeightLabeled)
                .collect(),
        }
    }
}

impl fmt::Display for ChainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<ChainClass> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ChainObject {
    ThreeComposition(ColoredComposition),
    Pair(CompositionPair),
    Walk(Path),
    TwoColored(TwoColoredBridge),
    MarkedBridge(MarkedBridge),
    HeightLabeled(HeightLabeledPath),
}

impl ChainObject {
    pub fn class(&self) -> ChainClass {
        match self {
            ChainObject::ThreeComposition(_) => ChainClass::ThreeCompositions,
            ChainObject::Pair(_) => ChainClass::Pairs,
            ChainObject::Walk(_) => ChainClass::Walks,
            ChainObject::TwoColored(_) => ChainClass::TwoColored,
            ChainObject::MarkedBridge(_) => ChainClass::MarkedBridges,
            ChainObject::HeightLabeled(_) => ChainClass::HeightLabeled,
        }
    }

    fn toward_labeled(self, cache: &mut TransferCache) -> Result<ChainObject> {
        Ok(match self {
            ChainObject::ThreeComposition(c) => ChainObject::Pair(colored_to_pair(&c)?),
            ChainObject::Pair(p) => ChainObject::Walk(pair_to_walk(&p)),
            ChainObject::Walk(w) => ChainObject::TwoColored(walk_to_two_colored(&w)?),
            ChainObject::TwoColored(t) => {
                if t.len() % 2 == 1 {
                    return Err(Error::OddLength(t.len()));
                }
                ChainObject::MarkedBridge(cache.get(t.len() / 2 + 1)?.inverse(&t)?)
            }
            ChainObject::MarkedBridge(y) => {
                ChainObject::HeightLabeled(marked_bridge_to_height_labeled(&y))
            }
            ChainObject::HeightLabeled(_) => unreachable!("end of chain"),
        })
    }

    fn toward_compositions(self, cache: &mut TransferCache) -> Result<ChainObject> {
        Ok(match self {
            ChainObject::HeightLabeled(x) => {
                ChainObject::MarkedBridge(height_labeled_to_marked_bridge(&x))
            }
            ChainObject::MarkedBridge(y) => {
                ChainObject::TwoColored(cache.get(y.path().len() / 2)?.forward(&y)?)
            }
            ChainObject::TwoColored(t) => ChainObject::Walk(two_colored_to_walk(&t)),
            ChainObject::Walk(w) => ChainObject::Pair(walk_to_pair(&w)?),
            ChainObject::Pair(p) => ChainObject::ThreeComposition(pair_to_colored(&p)),
            ChainObject::ThreeComposition(_) => unreachable!("start of chain"),
        })
    }
}

#[derive(Debug, Default)]
struct TransferCache(HashMap<usize, StatisticTransfer>);

impl TransferCache {
    fn get(&mut self, semilength: usize) -> Result<&StatisticTransfer> {
        Ok(match self.0.entry(semilength) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(StatisticTransfer::new(semilength)?),
        })
    }
}

/// Runs many chain conversions, reusing the rank-transfer tables between
/// calls.
#[derive(Debug, Default)]
pub struct Chain {
    cache: TransferCache,
}

impl Chain {
    pub fn new() -> Chain {
        Chain::default()
    }

    /// Carries `object` (a member of `from`) to the corresponding member of
    /// `to`. The identity when `from == to`.
    pub fn apply(
        &mut self,
        object: ChainObject,
        from: ChainClass,
        to: ChainClass,
    ) -> Result<ChainObject> {
        if object.class() != from {
            return Err(Error::WrongObjectClass(from.to_string()));
        }
        let (start, end) = (from.position(), to.position());
        let mut cur = object;
        if start < end {
            for _ in start..end {
                cur = cur.toward_labeled(&mut self.cache)?;
            }
        } else {
            for _ in end..start {
                cur = cur.toward_compositions(&mut self.cache)?;
            }
        }
        Ok(cur)
    }
}

pub fn chain(object: ChainObject, from: ChainClass, to: ChainClass) -> Result<ChainObject> {
    Chain::new().apply(object, from, to)
}
