//! Lexicographic enumeration, ranking and unranking of constrained paths.
//!
//! [`CompletionTable`] stores, for every `(position, altitude)`, the number of
//! ways to finish a path of the given class and length from that state.
//! Ranking sums the completions skipped by every `Down` step (the `Up`
//! alternative sorts first); unranking walks the same table forwards. Both
//! run in `O(length)` table lookups after an `O(length^2)` build.

use crate::counting::Counter;
use crate::error::{Error, Result};
use crate::path::{Path, PathClass, Step};

#[derive(Debug, Clone)]
pub struct CompletionTable<T> {
    class: PathClass,
    length: usize,
    // rows[pos][alt + length]
    rows: Vec<Vec<T>>,
}

impl<T: Counter> CompletionTable<T> {
    pub fn new(class: PathClass, length: usize) -> Self {
        let width = 2 * length + 1;
        let offset = length as i64;
        let mut rows = vec![vec![T::zero(); width]; length + 1];
        for (col, cell) in rows[length].iter_mut().enumerate() {
            let a = col as i64 - offset;
            let end_ok = !class.ends_on_axis() || a == 0;
            if end_ok && class.altitude_allowed(a) {
                *cell = T::one();
            }
        }
        for pos in (0..length).rev() {
            for col in 0..width {
                let a = col as i64 - offset;
                if !class.altitude_allowed(a) {
                    continue;
                }
                let mut c = T::zero();
                if col + 1 < width {
                    c = c + rows[pos + 1][col + 1].clone();
                }
                if col > 0 {
                    c = c + rows[pos + 1][col - 1].clone();
                }
                rows[pos][col] = c;
            }
        }
        CompletionTable {
            class,
            length,
            rows,
        }
    }

    pub fn class(&self) -> PathClass {
        self.class
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Completions from `pos` at altitude `alt`; zero outside the table.
    pub fn completions(&self, pos: usize, alt: i64) -> T {
        let col = alt + self.length as i64;
        if pos > self.length || col < 0 || col as usize >= self.rows[pos].len() {
            return T::zero();
        }
        self.rows[pos][col as usize].clone()
    }

    /// Number of class members of this length.
    pub fn total(&self) -> T {
        self.completions(0, 0)
    }

    pub fn rank(&self, path: &Path) -> Result<T> {
        if path.len() != self.length || !path.is_in_class(self.class) {
            return Err(Error::NotInClass {
                path: path.to_string(),
                class: self.class,
            });
        }
        let mut r = T::zero();
        let mut a = 0i64;
        for (i, s) in path.steps().iter().enumerate() {
            if *s == Step::Down {
                r = r + self.completions(i + 1, a + 1);
            }
            a += s.delta();
        }
        Ok(r)
    }

    pub fn unrank(&self, rank: &T) -> Result<Path> {
        let total = self.total();
        if *rank >= total {
            return Err(Error::RankOutOfRange {
                class: self.class,
                length: self.length,
                rank: rank.to_string(),
                count: total.to_string(),
            });
        }
        let mut r = rank.clone();
        let mut a = 0i64;
        let mut steps = Vec::with_capacity(self.length);
        for i in 0..self.length {
            let up = self.completions(i + 1, a + 1);
            if r < up {
                steps.push(Step::Up);
                a += 1;
            } else {
                r = r - up;
                steps.push(Step::Down);
                a -= 1;
            }
        }
        Ok(Path::new(steps))
    }

    /// All members in lexicographic order (`Up < Down`).
    pub fn enumerate(&self) -> Vec<Path> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.length);
        self.walk_tree(&mut cur, 0, &mut out);
        out
    }

    fn walk_tree(&self, cur: &mut Vec<Step>, a: i64, out: &mut Vec<Path>) {
        let pos = cur.len();
        if self.completions(pos, a).is_zero() {
            return;
        }
        if pos == self.length {
            out.push(Path::new(cur.clone()));
            return;
        }
        for s in [Step::Up, Step::Down] {
            cur.push(s);
            self.walk_tree(cur, a + s.delta(), out);
            cur.pop();
        }
    }
}

pub fn enumerate_paths(class: PathClass, length: usize) -> Vec<Path> {
    CompletionTable::<crate::Count>::new(class, length).enumerate()
}

pub fn count_paths<T: Counter>(class: PathClass, length: usize) -> T {
    CompletionTable::<T>::new(class, length).total()
}

pub fn rank<T: Counter>(class: PathClass, path: &Path) -> Result<T> {
    CompletionTable::<T>::new(class, path.len()).rank(path)
}

pub fn unrank<T: Counter>(class: PathClass, length: usize, rank: &T) -> Result<Path> {
    CompletionTable::<T>::new(class, length).unrank(rank)
}
