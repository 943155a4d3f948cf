//! Peak statistics over all Dyck paths of a semilength, by dynamic
//! programming over `(altitude, previous step)` states.

use crate::counting::Counter;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeakTotals<T> {
    /// Number of Dyck paths.
    pub paths: T,
    /// Peaks summed over all paths.
    pub peaks: T,
    /// Peak heights summed over all paths.
    pub height_sum: T,
}

#[derive(Clone)]
struct Cell<T> {
    paths: T,
    peaks: T,
    height_sum: T,
}

impl<T: Counter> Cell<T> {
    fn zero() -> Self {
        Cell {
            paths: T::zero(),
            peaks: T::zero(),
            height_sum: T::zero(),
        }
    }

    fn add(&mut self, other: &Cell<T>) {
        self.paths = self.paths.clone() + other.paths.clone();
        self.peaks = self.peaks.clone() + other.peaks.clone();
        self.height_sum = self.height_sum.clone() + other.height_sum.clone();
    }
}

pub fn dyck_peak_totals<T: Counter>(semilength: usize) -> PeakTotals<T> {
    let length = 2 * semilength;
    // state[a][u]: altitude a, u = 1 when the last step was Up
    let mut state = vec![[Cell::<T>::zero(), Cell::zero()]; semilength + 2];
    state[0][0].paths = T::one();
    for pos in 0..length {
        let mut next = vec![[Cell::<T>::zero(), Cell::zero()]; semilength + 2];
        let remaining = length - pos - 1;
        for a in 0..=semilength {
            for (u, cell) in state[a].iter().enumerate() {
                if cell.paths.is_zero() {
                    continue;
                }
                if a < remaining {
                    next[a + 1][1].add(cell);
                }
                if a >= 1 {
                    let mut down = cell.clone();
                    if u == 1 {
                        down.peaks = down.peaks + cell.paths.clone();
                        down.height_sum =
                            down.height_sum + cell.paths.clone() * T::from_usize_exact(a);
                    }
                    next[a - 1][0].add(&down);
                }
            }
        }
        state = next;
    }
    let [end, _] = state.swap_remove(0);
    PeakTotals {
        paths: end.paths,
        peaks: end.peaks,
        height_sum: end.height_sum,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_paths;
    use crate::path::PathClass;

    #[test]
    fn matches_brute_force() {
        for n in 0..=8 {
            let all = enumerate_paths(PathClass::DyckPath, 2 * n);
            let peaks: usize = all.iter().map(|p| p.peaks().len()).sum();
            let heights: i64 = all.iter().flat_map(|p| p.peaks()).map(|pk| pk.height).sum();
            let got = dyck_peak_totals::<u64>(n);
            assert_eq!(got.paths, all.len() as u64, "n={n}");
            assert_eq!(got.peaks, peaks as u64, "n={n}");
            assert_eq!(got.height_sum, heights as u64, "n={n}");
        }
    }

    #[test]
    fn small_values() {
        let t = dyck_peak_totals::<u64>(2);
        assert_eq!((t.paths, t.peaks, t.height_sum), (2, 3, 4));
    }
}
