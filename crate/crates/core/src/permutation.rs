//! Permutations of {1, ..., n}, stored as 1-based image lists.

use crate::Error;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidShuffle("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &im in &images {
            if im < 1 || im > n || seen[im] {
                return Err(Error::InvalidShuffle(format!(
                    "images {:?} are not a bijection on 1..={}",
                    images, n
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = 0;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
            }
        }
        cycles
    }

    /// Cycles in increasing order of their smallest element, each rotated
    /// to start at that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            out.push(cycle);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![2, 3]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn inverse_and_cycles() {
        let p = Permutation::new(vec![3, 4, 1, 2]).unwrap();
        assert_eq!(p.inverse().images(), &[3, 4, 1, 2]);
        assert_eq!(p.cycle_count(), 2);
        assert_eq!(p.cycles(), vec![vec![1, 3], vec![2, 4]]);

        let q = Permutation::new(vec![2, 3, 1]).unwrap();
        assert_eq!(q.inverse().images(), &[3, 1, 2]);
        assert_eq!(q.cycle_count(), 1);
        assert_eq!(Permutation::identity(4).cycle_count(), 4);
    }
}
