//! JSON Lines object records.

use serde::{Deserialize, Serialize};

use fourpow::bijections::{HeightLabeledPath, MarkedBridge, MarkedPeakPath, TwoColoredBridge};
use fourpow::composition::{Color, ColoredComposition, ColoredPart, Composition, CompositionPair};
use fourpow::{Error, Object, Path};

/// One object per line, tagged by `"type"`. Peak indices are 0-based
/// positions of the peak's up step; labels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Record {
    Path {
        steps: String,
    },
    MarkedPeak {
        steps: String,
        peak: usize,
    },
    HeightLabeled {
        steps: String,
        peak: usize,
        label: u32,
    },
    MarkedBridge {
        steps: String,
        peak: usize,
    },
    TwoColoredBridge {
        first: String,
        second: String,
    },
    Composition {
        parts: Vec<usize>,
    },
    ColoredComposition {
        parts: Vec<(usize, u8)>,
    },
    Pair {
        first: Vec<usize>,
        second: Vec<usize>,
    },
}

impl Record {
    pub fn type_name(&self) -> &'static str {
        match self {
            Record::Path { .. } => "path",
            Record::MarkedPeak { .. } => "marked_peak",
            Record::HeightLabeled { .. } => "height_labeled",
            Record::MarkedBridge { .. } => "marked_bridge",
            Record::TwoColoredBridge { .. } => "two_colored_bridge",
            Record::Composition { .. } => "composition",
            Record::ColoredComposition { .. } => "colored_composition",
            Record::Pair { .. } => "pair",
        }
    }

    pub fn parse_line(line: &str) -> Result<Record, String> {
        serde_json::from_str(line).map_err(|e| format!("invalid record {line:?}: {e}"))
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

impl From<&Object> for Record {
    fn from(o: &Object) -> Record {
        match o {
            Object::Path(p) => Record::Path {
                steps: p.to_string(),
            },
            Object::MarkedPeak(m) => Record::MarkedPeak {
                steps: m.path().to_string(),
                peak: m.peak().up_index,
            },
            Object::HeightLabeled(x) => Record::HeightLabeled {
                steps: x.path().to_string(),
                peak: x.peak().up_index,
                label: x.label(),
            },
            Object::MarkedBridge(y) => Record::MarkedBridge {
                steps: y.path().to_string(),
                peak: y.peak().up_index,
            },
            Object::TwoColored(t) => Record::TwoColoredBridge {
                first: t.first().to_string(),
                second: t.second().to_string(),
            },
            Object::Composition(c) => Record::Composition {
                parts: c.parts().to_vec(),
            },
            Object::ColoredComposition(c) => Record::ColoredComposition {
                parts: c
                    .parts()
                    .iter()
                    .map(|p| (p.value, p.color.index()))
                    .collect(),
            },
            Object::Pair(p) => Record::Pair {
                first: p.first().parts().to_vec(),
                second: p.second().parts().to_vec(),
            },
        }
    }
}

impl TryFrom<&Record> for Object {
    type Error = Error;

    /// Validates the payload against its type's invariants.
    fn try_from(r: &Record) -> Result<Object, Error> {
        Ok(match r {
            Record::Path { steps } => Object::Path(steps.parse()?),
            Record::MarkedPeak { steps, peak } => {
                Object::MarkedPeak(MarkedPeakPath::new(steps.parse()?, *peak)?)
            }
            Record::HeightLabeled { steps, peak, label } => {
                Object::HeightLabeled(HeightLabeledPath::new(steps.parse()?, *peak, *label)?)
            }
            Record::MarkedBridge { steps, peak } => {
                Object::MarkedBridge(MarkedBridge::new(steps.parse()?, *peak)?)
            }
            Record::TwoColoredBridge { first, second } => {
                Object::TwoColored(TwoColoredBridge::new(first.parse()?, second.parse()?)?)
            }
            Record::Composition { parts } => Object::Composition(Composition::new(parts.clone())?),
            Record::ColoredComposition { parts } => {
                let parts = parts
                    .iter()
                    .map(|&(value, c)| {
                        let color = Color::from_index(c).ok_or_else(|| {
                            Error::InvalidColoredComposition(format!("color {c} not in 1..=3"))
                        })?;
                        Ok(ColoredPart { value, color })
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                Object::ColoredComposition(ColoredComposition::new(parts)?)
            }
            Record::Pair { first, second } => Object::Pair(CompositionPair::new(
                Composition::new(first.clone())?,
                Composition::new(second.clone())?,
            )?),
        })
    }
}

/// The underlying path and marked peak index of a path-like record.
pub fn path_view(o: &Object) -> Option<(&Path, Option<usize>)> {
    match o {
        Object::Path(p) => Some((p, None)),
        Object::MarkedPeak(m) => Some((m.path(), Some(m.peak().up_index))),
        Object::HeightLabeled(x) => Some((x.path(), Some(x.peak().up_index))),
        Object::MarkedBridge(y) => Some((y.path(), Some(y.peak().up_index))),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format() {
        let r = Record::parse_line(r#"{"type":"pair","first":[1],"second":[1]}"#).unwrap();
        assert_eq!(
            r,
            Record::Pair {
                first: vec![1],
                second: vec![1]
            }
        );
        let c = Record::ColoredComposition {
            parts: vec![(6, 1), (1, 2)],
        };
        assert_eq!(
            c.to_line(),
            r#"{"type":"colored_composition","parts":[[6,1],[1,2]]}"#
        );
        let h = Record::HeightLabeled {
            steps: "UUDD".into(),
            peak: 1,
            label: 2,
        };
        assert_eq!(
            h.to_line(),
            r#"{"type":"height_labeled","steps":"UUDD","peak":1,"label":2}"#
        );
        assert!(Record::parse_line(r#"{"type":"tree"}"#).is_err());
        assert!(Record::parse_line("not json").is_err());
    }

    #[test]
    fn validation() {
        let bad = [
            Record::MarkedPeak {
                steps: "UDDU".into(),
                peak: 0,
            },
            Record::Path {
                steps: "UXD".into(),
            },
            Record::ColoredComposition {
                parts: vec![(1, 2)],
            },
            Record::ColoredComposition {
                parts: vec![(1, 4)],
            },
            Record::Pair {
                first: vec![2],
                second: vec![1],
            },
        ];
        for r in &bad {
            assert!(Object::try_from(r).is_err(), "{r:?}");
        }
    }

    #[test]
    fn objects_round_trip() {
        for class in fourpow::NamedClass::ALL {
            for o in class.enumerate(3).unwrap() {
                let r = Record::from(&o);
                let back = Record::parse_line(&r.to_line()).unwrap();
                assert_eq!(Object::try_from(&back).unwrap(), o);
            }
        }
    }
}
