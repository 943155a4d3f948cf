//! Named object classes with their closed-form counts and exhaustive
//! enumerations.
//!
//! | name             | members of size `n`                                  |
//! |------------------|------------------------------------------------------|
//! | `3comp`          | 3-compositions of `n`                                |
//! | `pairs`          | pairs of compositions of `n`                         |
//! | `walk`           | walks of length `2n - 2`                             |
//! | `two_colored`    | two-colored bridges of total length `2n`             |
//! | `marked_bridge`  | marked strict maxima in bridges of length `2n`       |
//! | `height_labeled` | height-labeled peaks in Dyck paths of length `2n`    |
//! | `bridge`         | bridges of length `2n`                               |
//! | `meander`        | meanders of length `2n`                              |
//! | `dyck`           | Dyck paths of length `2n`                            |
//! | `marked_peak`    | marked peaks in Dyck paths of length `2n`            |
//! | `composition`    | compositions of `n`                                  |
//!
//! `two_colored` is indexed by half its length, so it has `4^n` members;
//! through the bijections it corresponds to the size-`(n + 1)` members of
//! the other `4^(n-1)` classes.

use std::fmt;
use std::str::FromStr;

use crate::bijections::{
    ChainObject, HeightLabeledPath, MarkedBridge, MarkedPeakPath, TwoColoredBridge,
};
use crate::composition::{
    enumerate_compositions, ColoredComposition, Composition, CompositionPair,
};
use crate::counting::{binomial, catalan, pow};
use crate::enumerate::enumerate_paths;
use crate::error::{Error, Result};
use crate::path::{Path, PathClass};
use crate::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NamedClass {
    ThreeCompositions,
    Pairs,
    Walk,
    TwoColored,
    MarkedBridge,
    HeightLabeled,
    Bridge,
    Meander,
    Dyck,
    MarkedPeak,
    Composition,
}

impl NamedClass {
    pub const ALL: [NamedClass; 11] = [
        NamedClass::ThreeCompositions,
        NamedClass::Pairs,
        NamedClass::Walk,
        NamedClass::TwoColored,
        NamedClass::MarkedBridge,
        NamedClass::HeightLabeled,
        NamedClass::Bridge,
        NamedClass::Meander,
        NamedClass::Dyck,
        NamedClass::MarkedPeak,
        NamedClass::Composition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedClass::ThreeCompositions => "3comp",
            NamedClass::Pairs => "pairs",
            NamedClass::Walk => "walk",
            NamedClass::TwoColored => "two_colored",
            NamedClass::MarkedBridge => "marked_bridge",
            NamedClass::HeightLabeled => "height_labeled",
            NamedClass::Bridge => "bridge",
            NamedClass::Meander => "meander",
            NamedClass::Dyck => "dyck",
            NamedClass::MarkedPeak => "marked_peak",
            NamedClass::Composition => "composition",
        }
    }

    /// Path class and length of the size-`n` members, for the classes that
    /// are plain path families.
    pub fn path_family(self, n: usize) -> Option<(PathClass, usize)> {
        match self {
            NamedClass::Walk if n >= 1 => Some((PathClass::Walk, 2 * n - 2)),
            NamedClass::Bridge => Some((PathClass::Bridge, 2 * n)),
            NamedClass::Meander => Some((PathClass::Meander, 2 * n)),
            NamedClass::Dyck => Some((PathClass::DyckPath, 2 * n)),
            _ => None,
        }
    }

    fn require_positive(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::InvalidSize(self.name().into(), n));
        }
        Ok(())
    }

    /// Exact count of the size-`n` members from a closed formula.
    pub fn closed_form_count(self, n: usize) -> Result<Count> {
        Ok(match self {
            NamedClass::ThreeCompositions
            | NamedClass::Pairs
            | NamedClass::Walk
            | NamedClass::MarkedBridge
            | NamedClass::HeightLabeled => {
                self.require_positive(n)?;
                pow(4, n - 1)
            }
            NamedClass::TwoColored => pow(4, n),
            NamedClass::Bridge | NamedClass::Meander => binomial(2 * n, n),
            NamedClass::Dyck => catalan(n),
            NamedClass::MarkedPeak if n == 0 => Count::from(0u8),
            NamedClass::MarkedPeak => binomial(2 * n - 1, n),
            NamedClass::Composition if n == 0 => Count::from(1u8),
            NamedClass::Composition => pow(2, n - 1),
        })
    }

    /// Every size-`n` member in the class's canonical order.
    pub fn enumerate(self, n: usize) -> Result<Vec<Object>> {
        if let Some((class, length)) = self.path_family(n) {
            return Ok(enumerate_paths(class, length)
                .into_iter()
                .map(Object::Path)
                .collect());
        }
        let chained = |c: crate::bijections::ChainClass| -> Result<Vec<Object>> {
            self.require_positive(n)?;
            Ok(c.enumerate(n).into_iter().map(Object::from).collect())
        };
        use crate::bijections::ChainClass as C;
        match self {
            NamedClass::ThreeCompositions => chained(C::ThreeCompositions),
            NamedClass::Pairs => chained(C::Pairs),
            NamedClass::MarkedBridge => chained(C::MarkedBridges),
            NamedClass::HeightLabeled => chained(C::HeightLabeled),
            NamedClass::TwoColored => Ok(TwoColoredBridge::all(2 * n)
                .into_iter()
                .map(Object::TwoColored)
                .collect()),
            NamedClass::MarkedPeak => Ok(MarkedPeakPath::all(n)
                .into_iter()
                .map(Object::MarkedPeak)
                .collect()),
            NamedClass::Composition => Ok(enumerate_compositions(n)
                .into_iter()
                .map(Object::Composition)
                .collect()),
            // walk at n = 0 is the only path family left here
            _ => Err(Error::InvalidSize(self.name().into(), n)),
        }
    }
}

impl fmt::Display for NamedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<NamedClass> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// A member of any named class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Object {
    Path(Path),
    MarkedPeak(MarkedPeakPath),
    HeightLabeled(HeightLabeledPath),
    MarkedBridge(MarkedBridge),
    TwoColored(TwoColoredBridge),
    Composition(Composition),
    ColoredComposition(ColoredComposition),
    Pair(CompositionPair),
}

impl From<ChainObject> for Object {
    fn from(x: ChainObject) -> Object {
        match x {
            ChainObject::ThreeComposition(c) => Object::ColoredComposition(c),
            ChainObject::Pair(p) => Object::Pair(p),
            ChainObject::Walk(w) => Object::Path(w),
            ChainObject::TwoColored(t) => Object::TwoColored(t),
            ChainObject::MarkedBridge(y) => Object::MarkedBridge(y),
            ChainObject::HeightLabeled(x) => Object::HeightLabeled(x),
        }
    }
}
