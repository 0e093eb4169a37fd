use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{CliqueFactor, Vertex};

/// Number of partitions of `n` labelled vertices into blocks of size `r`:
/// `n! / ((r!)^(n/r) (n/r)!)`.
pub fn count_factors(n: usize, r: usize) -> BigInt {
    let fact = |m: usize| (1..=m).fold(BigInt::from(1), |acc, i| acc * i);
    let k = n / r;
    fact(n) / (num_traits::pow(fact(r), k) * fact(k))
}

struct Level {
    anchor: Vertex,
    pool: Vec<Vertex>,
    comb: Vec<usize>,
}

impl Level {
    fn block(&self) -> Vec<Vertex> {
        std::iter::once(self.anchor)
            .chain(self.comb.iter().map(|&i| self.pool[i]))
            .collect()
    }

    /// Next `(r-1)`-combination of `pool` in lexicographic order.
    fn advance(&mut self) -> bool {
        let k = self.comb.len();
        let m = self.pool.len();
        for i in (0..k).rev() {
            if self.comb[i] < m - k + i {
                self.comb[i] += 1;
                for j in i + 1..k {
                    self.comb[j] = self.comb[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

/// Streams every partition of `0..n` into blocks of size `r`, each exactly
/// once. The smallest unused vertex anchors each new block; completions come
/// in lexicographic order.
pub struct FactorEnumerator {
    n: usize,
    r: usize,
    levels: Vec<Level>,
    started: bool,
    done: bool,
}

/// Brute-force oracle over all `K_r`-factors of `K_n`; `n <= cap`.
pub fn enumerate_all_factors(n: usize, r: usize, cap: usize) -> Result<FactorEnumerator> {
    if r == 0 || n == 0 || !n.is_multiple_of(r) {
        return Err(Error::Divisibility { n, r });
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "factor enumeration",
            value: n,
            cap,
        });
    }
    Ok(FactorEnumerator {
        n,
        r,
        levels: Vec::with_capacity(n / r),
        started: false,
        done: false,
    })
}

impl FactorEnumerator {
    /// Pushes first-choice levels until every vertex is covered.
    fn fill(&mut self) {
        let mut covered = vec![false; self.n];
        for level in &self.levels {
            for v in level.block() {
                covered[v] = true;
            }
        }
        while self.levels.len() < self.n / self.r {
            let mut free = (0..self.n).filter(|&v| !covered[v]);
            let anchor = free.next().expect("an uncovered vertex remains");
            let pool: Vec<Vertex> = free.collect();
            let level = Level {
                anchor,
                pool,
                comb: (0..self.r - 1).collect(),
            };
            for v in level.block() {
                covered[v] = true;
            }
            self.levels.push(level);
        }
    }

    fn current(&self) -> CliqueFactor {
        let blocks = self.levels.iter().map(Level::block).collect();
        CliqueFactor::new(self.n, self.r, blocks).expect("enumerated blocks form a partition")
    }
}

impl Iterator for FactorEnumerator {
    type Item = CliqueFactor;

    fn next(&mut self) -> Option<CliqueFactor> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.fill();
            return Some(self.current());
        }
        loop {
            match self.levels.last_mut() {
                None => {
                    self.done = true;
                    return None;
                }
                Some(level) => {
                    if level.advance() {
                        break;
                    }
                    self.levels.pop();
                }
            }
        }
        self.fill();
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts_match_closed_form() {
        for (n, r, expected) in [
            (4, 2, 3u64),
            (6, 3, 10),
            (9, 3, 280),
            (8, 2, 105),
            (8, 4, 35),
            (6, 2, 15),
            (3, 3, 1),
        ] {
            let all: Vec<_> = enumerate_all_factors(n, r, 12).unwrap().collect();
            assert_eq!(all.len() as u64, expected, "n={n} r={r}");
            assert_eq!(count_factors(n, r), BigInt::from(expected));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn larger_count() {
        assert_eq!(enumerate_all_factors(12, 3, 12).unwrap().count(), 15400);
        assert_eq!(count_factors(12, 3), BigInt::from(15400));
    }

    #[test]
    fn first_factor_is_canonical() {
        let first = enumerate_all_factors(6, 3, 12).unwrap().next().unwrap();
        assert_eq!(first.blocks(), &[vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            enumerate_all_factors(7, 3, 12),
            Err(Error::Divisibility { .. })
        ));
        assert!(matches!(
            enumerate_all_factors(15, 3, 12),
            Err(Error::CapExceeded { .. })
        ));
    }
}
