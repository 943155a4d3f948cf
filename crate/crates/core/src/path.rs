//! Lattice paths over unit up/down steps and their statistics.
//!
//! A [`Path`] always starts at the origin. Its altitude profile `a_0..a_L`
//! is derived from the steps, with `a_0 = 0`. Ordering on paths of equal
//! length is lexicographic with `Up < Down`; that order is the canonical
//! enumeration order used throughout the crate.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    pub fn flip(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Down => 'D',
        }
    }
}

impl TryFrom<char> for Step {
    type Error = Error;

    fn try_from(c: char) -> Result<Step> {
        match c {
            'U' => Ok(Step::Up),
            'D' => Ok(Step::Down),
            other => Err(Error::InvalidStep(other)),
        }
    }
}

/// Constraint families for paths starting at the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    /// No constraint.
    Walk,
    /// Ends at altitude 0.
    Bridge,
    /// Never below the x-axis.
    Meander,
    /// Never above the x-axis.
    NegativeMeander,
    /// Bridge and meander.
    DyckPath,
    /// Bridge and negative meander.
    NegativeDyckPath,
}

impl PathClass {
    pub const ALL: [PathClass; 6] = [
        PathClass::Walk,
        PathClass::Bridge,
        PathClass::Meander,
        PathClass::NegativeMeander,
        PathClass::DyckPath,
        PathClass::NegativeDyckPath,
    ];

    pub(crate) fn ends_on_axis(self) -> bool {
        matches!(
            self,
            PathClass::Bridge | PathClass::DyckPath | PathClass::NegativeDyckPath
        )
    }

    pub(crate) fn altitude_allowed(self, a: i64) -> bool {
        match self {
            PathClass::Meander | PathClass::DyckPath => a >= 0,
            PathClass::NegativeMeander | PathClass::NegativeDyckPath => a <= 0,
            PathClass::Walk | PathClass::Bridge => true,
        }
    }

    /// The class obtained by reflecting every member.
    pub fn reflected(self) -> PathClass {
        match self {
            PathClass::Meander => PathClass::NegativeMeander,
            PathClass::NegativeMeander => PathClass::Meander,
            PathClass::DyckPath => PathClass::NegativeDyckPath,
            PathClass::NegativeDyckPath => PathClass::DyckPath,
            c => c,
        }
    }
}

impl fmt::Display for PathClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathClass::Walk => "walk",
            PathClass::Bridge => "bridge",
            PathClass::Meander => "meander",
            PathClass::NegativeMeander => "negative meander",
            PathClass::DyckPath => "Dyck path",
            PathClass::NegativeDyckPath => "negative Dyck path",
        };
        f.write_str(s)
    }
}

/// An occurrence of the pattern `Up Down`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Peak {
    /// Index of the peak's up step.
    pub up_index: usize,
    /// Altitude at the apex, `a_{up_index + 1}`.
    pub height: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<Step>);

impl Path {
    pub fn new(steps: Vec<Step>) -> Path {
        Path(steps)
    }

    pub fn empty() -> Path {
        Path(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first_step(&self) -> Option<Step> {
        self.0.first().copied()
    }

    pub fn slice(&self, range: Range<usize>) -> Path {
        Path(self.0[range].to_vec())
    }

    /// Concatenation of `parts`, in order.
    pub fn concat<'a, I: IntoIterator<Item = &'a Path>>(parts: I) -> Path {
        let mut steps = Vec::new();
        for p in parts {
            steps.extend_from_slice(&p.0);
        }
        Path(steps)
    }

    pub(crate) fn push(&mut self, step: Step) {
        self.0.push(step);
    }

    pub(crate) fn extend(&mut self, other: &Path) {
        self.0.extend_from_slice(&other.0);
    }

    /// `a_0..a_L`.
    pub fn altitudes(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut a = 0;
        out.push(a);
        for s in &self.0 {
            a += s.delta();
            out.push(a);
        }
        out
    }

    pub fn final_altitude(&self) -> i64 {
        self.0.iter().map(|s| s.delta()).sum()
    }

    pub fn is_in_class(&self, class: PathClass) -> bool {
        let alts = self.altitudes();
        if class.ends_on_axis() && alts[alts.len() - 1] != 0 {
            return false;
        }
        alts.iter().all(|&a| class.altitude_allowed(a))
    }

    pub fn require_class(&self, class: PathClass) -> Result<()> {
        if self.is_in_class(class) {
            Ok(())
        } else {
            Err(Error::NotInClass {
                path: self.to_string(),
                class,
            })
        }
    }

    pub fn peaks(&self) -> Vec<Peak> {
        let alts = self.altitudes();
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
            .map(|(i, _)| Peak {
                up_index: i,
                height: alts[i + 1],
            })
            .collect()
    }

    /// The peak whose up step sits at `index`, if there is one.
    pub fn peak_at(&self, index: usize) -> Option<Peak> {
        match (self.0.get(index), self.0.get(index + 1)) {
            (Some(Step::Up), Some(Step::Down)) => Some(Peak {
                up_index: index,
                height: self.altitudes()[index + 1],
            }),
            _ => None,
        }
    }

    /// Interior positions where the path passes through 0 with a sign change.
    /// Touching the axis is not a crossing, and neither endpoint ever is.
    pub fn crossings(&self) -> Vec<usize> {
        let alts = self.altitudes();
        (1..self.0.len())
            .filter(|&i| alts[i] == 0 && alts[i - 1] * alts[i + 1] == -1)
            .collect()
    }

    /// Crossings, plus one when the path opens with an up step.
    pub fn signed_crossing_count(&self) -> usize {
        let lead = usize::from(self.first_step() == Some(Step::Up));
        self.crossings().len() + lead
    }

    /// Peaks of positive height strictly higher than every earlier peak.
    pub fn strict_ltr_maxima(&self) -> Vec<Peak> {
        let mut best: Option<i64> = None;
        let mut out = Vec::new();
        for pk in self.peaks() {
            let record = best.is_none_or(|b| pk.height > b);
            if record && pk.height >= 1 {
                out.push(pk);
            }
            best = Some(best.map_or(pk.height, |b| b.max(pk.height)));
        }
        out
    }

    /// Smallest `j > i` with `a_j = 0`.
    pub fn first_return_after(&self, i: usize) -> Result<usize> {
        let alts = self.altitudes();
        (i + 1..alts.len())
            .find(|&j| alts[j] == 0)
            .ok_or(Error::NoReturn(i))
    }

    /// Pieces between consecutive vertex positions in `cuts` (which must be
    /// increasing), starting at 0 and ending at the path's end.
    pub fn split_at_vertices(&self, cuts: &[usize]) -> Vec<Path> {
        let mut out = Vec::with_capacity(cuts.len() + 1);
        let mut start = 0;
        for &c in cuts {
            out.push(self.slice(start..c));
            start = c;
        }
        out.push(self.slice(start..self.len()));
        out
    }

    /// Step-wise reflection across the x-axis.
    pub fn reflect(&self) -> Path {
        Path(self.0.iter().map(|s| s.flip()).collect())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        s.chars()
            .map(Step::try_from)
            .collect::<Result<_>>()
            .map(Path)
    }
}

impl FromIterator<Step> for Path {
    fn from_iter<I: IntoIterator<Item = Step>>(iter: I) -> Path {
        Path(iter.into_iter().collect())
    }
}
