//! Bridges and meanders of the same even length, matched by rank in the
//! canonical lexicographic order. Both classes have `C(2m, m)` members.

use crate::enumerate::CompletionTable;
use crate::error::{Error, Result};
use crate::path::{Path, PathClass};
use crate::Count;

fn transfer(p: &Path, from: PathClass, to: PathClass) -> Result<Path> {
    if p.len() % 2 == 1 {
        return Err(Error::OddLength(p.len()));
    }
    let r = CompletionTable::<Count>::new(from, p.len()).rank(p)?;
    CompletionTable::<Count>::new(to, p.len()).unrank(&r)
}

pub fn bridge_to_meander(bridge: &Path) -> Result<Path> {
    transfer(bridge, PathClass::Bridge, PathClass::Meander)
}

pub fn meander_to_bridge(meander: &Path) -> Result<Path> {
    transfer(meander, PathClass::Meander, PathClass::Bridge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_paths;

    fn p(s: &str) -> Path {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        // bridges of length 2 are UD, DU; meanders are UU, UD
        assert_eq!(bridge_to_meander(&p("UD")), Ok(p("UU")));
        assert_eq!(bridge_to_meander(&p("DU")), Ok(p("UD")));
        assert_eq!(bridge_to_meander(&p("")), Ok(p("")));
        assert_eq!(meander_to_bridge(&p("UD")), Ok(p("DU")));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            bridge_to_meander(&p("UU")),
            Err(Error::NotInClass { .. })
        ));
        assert_eq!(meander_to_bridge(&p("U")), Err(Error::OddLength(1)));
    }

    #[test]
    fn exhaustive_round_trip() {
        for len in (0..=12).step_by(2) {
            let bridges = enumerate_paths(PathClass::Bridge, len);
            let meanders = enumerate_paths(PathClass::Meander, len);
            assert_eq!(bridges.len(), meanders.len());
            for (b, m) in bridges.iter().zip(&meanders) {
                assert_eq!(&bridge_to_meander(b).unwrap(), m);
                assert_eq!(&meander_to_bridge(m).unwrap(), b);
            }
        }
    }
}
