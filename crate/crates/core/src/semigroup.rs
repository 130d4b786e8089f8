//! Numerical semigroups of degrees.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::Serialize;

/// A numerical semigroup given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSemigroup {
    generators: Vec<usize>,
    gaps: Vec<usize>,
    conductor: usize,
    table_bound: usize,
    /// `representation[d]` for members `d <= table_bound`.
    #[serde(skip)]
    representation: Vec<Option<Vec<usize>>>,
}

impl DegreeSemigroup {
    /// Semigroup generated by `degs`; zero entries are ignored.
    pub fn from_degrees(degs: &[usize]) -> Result<Self> {
        let mut d: Vec<usize> = degs.iter().copied().filter(|&x| x > 0).collect();
        d.sort_unstable();
        d.dedup();
        if d.is_empty() {
            return Err(Error::InfiniteCodimension(0));
        }
        let g = d.iter().fold(0usize, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::InfiniteCodimension(g as u64));
        }
        let m = d[0];
        // Membership sieve until m consecutive members appear.
        let mut member = vec![true];
        let mut run = 0;
        let mut n = 0;
        while run < m {
            n += 1;
            let is = d.iter().any(|&g| g <= n && member[n - g]);
            member.push(is);
            run = if is { run + 1 } else { 0 };
        }
        let gaps: Vec<usize> = (1..n + 1 - m).filter(|&k| !member[k]).collect();
        let conductor = gaps.last().map_or(0, |&g| g + 1);
        let in_s = |k: usize| k >= conductor || member[k];
        let generators: Vec<usize> = d
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|a| in_s(a) && in_s(g - a)))
            .collect();
        let mut s = DegreeSemigroup { generators, gaps, conductor, table_bound: 0, representation: vec![] };
        s.table_bound = s.conductor + 2 * s.genus() + 4;
        s.representation = (0..=s.table_bound).map(|k| s.greedy(k)).collect();
        Ok(s)
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Largest gap, or -1 for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn table_bound(&self) -> usize {
        self.table_bound
    }

    pub fn contains(&self, d: usize) -> bool {
        d >= self.conductor || d == 0 || self.gaps.binary_search(&d).is_err()
    }

    fn greedy(&self, d: usize) -> Option<Vec<usize>> {
        if !self.contains(d) {
            return None;
        }
        let mut out = Vec::new();
        let mut rest = d;
        while rest > 0 {
            let g = *self.generators.iter().rev().find(|&&g| g <= rest && self.contains(rest - g))?;
            out.push(g);
            rest -= g;
        }
        Some(out)
    }

    /// Deterministic representation of `d` as a sum of generators: at each
    /// step the largest generator leaving a member is taken.
    pub fn represent_degree(&self, d: usize) -> Option<Vec<usize>> {
        if d <= self.table_bound {
            self.representation[d].clone()
        } else {
            self.greedy(d)
        }
    }

    /// Every factorization of `d` as exponent vectors over the generators.
    pub fn factorizations(&self, d: usize) -> Vec<Vec<usize>> {
        fn rec(gens: &[usize], i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == gens.len() {
                if rest == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let mut k = 0;
            while k * gens[i] <= rest {
                cur.push(k);
                rec(gens, i + 1, rest - k * gens[i], cur, out);
                cur.pop();
                k += 1;
            }
        }
        let mut out = Vec::new();
        rec(&self.generators, 0, d, &mut vec![], &mut out);
        out
    }

    /// Members of the semigroup up to `bound`, increasing.
    pub fn members_up_to(&self, bound: usize) -> Vec<usize> {
        (0..=bound).filter(|&d| self.contains(d)).collect()
    }
}

/// Minimal generator tuples of every numerical semigroup of genus `g`,
/// sorted lexicographically.
pub fn semigroups_of_genus(g: usize) -> Vec<Vec<usize>> {
    if g == 0 {
        return vec![vec![1]];
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    let mut gapset = vec![false; 2 * g + 1];
    fn rec(k: usize, top: usize, left: usize, gapset: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            let member = |n: usize| n == 0 || n > top || !gapset[n];
            let closed = (1..=top).all(|a| !member(a) || (a..=top).all(|b| !member(b) || a + b > top || member(a + b)));
            if closed {
                let degs: Vec<usize> = (1..=2 * top + 1).filter(|&n| member(n)).collect();
                if let Ok(s) = DegreeSemigroup::from_degrees(&degs) {
                    out.push(s.generators().to_vec());
                }
            }
            return;
        }
        if k > top {
            return;
        }
        gapset[k] = true;
        rec(k + 1, top, left - 1, gapset, out);
        gapset[k] = false;
        rec(k + 1, top, left, gapset, out);
    }
    rec(1, top, g, &mut gapset, &mut out);
    out.sort();
    out.dedup();
    out
}

/// The semigroup types of genus one, two and three.
pub fn genus3_type_enumeration() -> Vec<(usize, Vec<Vec<usize>>)> {
    (1..=3).map(|g| (g, semigroups_of_genus(g))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_four() {
        let s = DegreeSemigroup::from_degrees(&[3, 4]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 5]);
        assert_eq!(s.genus(), 3);
        assert_eq!(s.conductor(), 6);
        assert_eq!(s.represent_degree(5), None);
    }

    #[test]
    fn two_five() {
        let s = DegreeSemigroup::from_degrees(&[2, 5]).unwrap();
        assert_eq!(s.gaps(), &[1, 3]);
        assert_eq!(s.represent_degree(7), Some(vec![5, 2]));
    }

    #[test]
    fn greedy_largest_first() {
        let s = DegreeSemigroup::from_degrees(&[4, 5, 6, 7]).unwrap();
        assert_eq!(s.represent_degree(13), Some(vec![7, 6]));
    }

    #[test]
    fn minimal_generators_and_gcd() {
        let s = DegreeSemigroup::from_degrees(&[3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(s.generators(), &[3, 4, 5]);
        assert_eq!(DegreeSemigroup::from_degrees(&[4, 6]), Err(Error::InfiniteCodimension(2)));
    }

    #[test]
    fn types_by_genus() {
        let t = genus3_type_enumeration();
        assert_eq!(t[0].1, vec![vec![2, 3]]);
        assert_eq!(t[1].1, vec![vec![2, 5], vec![3, 4, 5]]);
        assert_eq!(t[2].1, vec![vec![2, 7], vec![3, 4], vec![3, 5, 7], vec![4, 5, 6, 7]]);
    }

    #[test]
    fn factorization_count() {
        let s = DegreeSemigroup::from_degrees(&[2, 3]).unwrap();
        assert_eq!(s.factorizations(6).len(), 2);
    }
}
