//! Uniform random generation by unranking.
//!
//! A draw picks a rank uniformly below the class size and unranks it, so each
//! member is equally likely. The generator is ChaCha8 seeded through
//! [`rand::SeedableRng::seed_from_u64`]; a given seed replays the same
//! sequence within one build.

use num_bigint::RandBigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classes::{NamedClass, Object};
use crate::composition::unrank_composition;
use crate::error::{Error, Result};
use crate::CountTable;

/// `count` independent uniform members of `class` at size `n`.
///
/// Supported classes: `walk`, `bridge`, `meander`, `dyck` and `composition`.
pub fn sample(class: NamedClass, n: usize, count: usize, seed: u64) -> Result<Vec<Object>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if let Some((path_class, length)) = class.path_family(n) {
        let table = CountTable::new(path_class, length);
        let total = table.total();
        return (0..count)
            .map(|_| {
                let r = rng.gen_biguint_below(&total);
                table.unrank(&r).map(Object::Path)
            })
            .collect();
    }
    match class {
        NamedClass::Walk => Err(Error::InvalidSize(class.name().into(), n)),
        NamedClass::Composition => {
            let total = class.closed_form_count(n)?;
            Ok((0..count)
                .map(|_| {
                    let r = rng.gen_biguint_below(&total);
                    Object::Composition(unrank_composition(n, &r).expect("rank below count"))
                })
                .collect())
        }
        _ => Err(Error::UnsupportedClass(class.name().into())),
    }
}

/// [`sample`] with the class given by name.
pub fn sample_named(class: &str, n: usize, count: usize, seed: u64) -> Result<Vec<Object>> {
    sample(class.parse()?, n, count, seed)
}
