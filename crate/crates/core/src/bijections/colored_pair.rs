//! 3-compositions of `n` and pairs of compositions of `n`.
//!
//! Forward: copy the colored composition twice. The first copy folds every
//! color-2 part into the following part, the second copy folds every color-3
//! part. Inverse: peel matching heads off both compositions, emitting a
//! color-1 part on equality, and otherwise the smaller head with color 2
//! (first head larger) or color 3 (second head larger).

use crate::composition::{Color, ColoredComposition, ColoredPart, Composition, CompositionPair};
use crate::error::{Error, Result};

pub fn colored_to_pair(c: &ColoredComposition) -> Result<CompositionPair> {
    if c.is_empty() {
        return Err(Error::InvalidColoredComposition("empty".into()));
    }
    let first = fold(c, Color::Two)?;
    let second = fold(c, Color::Three)?;
    CompositionPair::new(first, second)
}

// Adds each run of `carried`-colored parts onto the part that follows it.
fn fold(c: &ColoredComposition, carried: Color) -> Result<Composition> {
    let mut parts = Vec::new();
    let mut acc = 0;
    for p in c.parts() {
        acc += p.value;
        if p.color != carried {
            parts.push(acc);
            acc = 0;
        }
    }
    debug_assert_eq!(acc, 0, "last part has color 1");
    Composition::new(parts)
}

pub fn pair_to_colored(pair: &CompositionPair) -> ColoredComposition {
    let mut a = pair.first().parts().iter().copied();
    let mut b = pair.second().parts().iter().copied();
    let mut out = Vec::new();
    let (mut x, mut y) = (a.next(), b.next());
    while let (Some(ha), Some(hb)) = (x, y) {
        match ha.cmp(&hb) {
            std::cmp::Ordering::Equal => {
                out.push(ColoredPart {
                    value: ha,
                    color: Color::One,
                });
                x = a.next();
                y = b.next();
            }
            std::cmp::Ordering::Greater => {
                out.push(ColoredPart {
                    value: hb,
                    color: Color::Two,
                });
                x = Some(ha - hb);
                y = b.next();
            }
            std::cmp::Ordering::Less => {
                out.push(ColoredPart {
                    value: ha,
                    color: Color::Three,
                });
                x = a.next();
                y = Some(hb - ha);
            }
        }
    }
    debug_assert!(x.is_none() && y.is_none(), "equal sizes exhaust together");
    ColoredComposition::new(out).expect("recursion ends on an equal-heads step")
}
