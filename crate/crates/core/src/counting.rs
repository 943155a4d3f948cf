//! Exact counting arithmetic, generic over the integer type.
//!
//! Everything that counts paths or compositions is written against
//! [`Counter`], so the same code runs on machine integers (fast, may overflow
//! for large sizes) and on [`num_bigint::BigUint`] (the crate-wide
//! [`Count`](crate::Count) alias).

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, ToPrimitive};

/// Nonnegative exact integer usable as a count or a rank.
pub trait Counter: Num + Clone + Ord + Debug + Display + FromPrimitive + ToPrimitive {
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("counter type cannot represent value")
    }
}

impl<T> Counter for T where T: Num + Clone + Ord + Debug + Display + FromPrimitive + ToPrimitive {}

pub fn pow<T: Counter>(base: usize, exp: usize) -> T {
    let b = T::from_usize_exact(base);
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * b.clone();
    }
    acc
}

/// Binomial coefficient by the multiplicative formula; every intermediate
/// quotient is exact.
pub fn binomial<T: Counter>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_usize_exact(n - i) / T::from_usize_exact(i + 1);
    }
    acc
}

pub fn catalan<T: Counter>(m: usize) -> T {
    binomial::<T>(2 * m, m) / T::from_usize_exact(m + 1)
}

/// `4^(n-1)`, the common cardinality of the six composition-indexed classes.
/// `None` for `n = 0`.
pub fn four_pow_pred<T: Counter>(n: usize) -> Option<T> {
    n.checked_sub(1).map(|e| pow(4, e))
}
