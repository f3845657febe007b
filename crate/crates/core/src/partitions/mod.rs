//! Partitions, their residues and statistics, and the combinatorics built on
//! top of them.

mod enumerate;
mod multi;
mod nodes;
mod tableaux;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::LaurentPoly;
use crate::error::{Error, Result};
use crate::params::GlobalParams;

pub use enumerate::{
    compositions, horizontal_strips, multipartitions, p_strict_partitions, partitions,
    strict_multipartitions, strict_partitions, vertical_strips,
};
pub use multi::{ColoredComposition, Multipartition};
pub use nodes::{addable_removable, node_coeff_addable, node_coeff_removable, NodeCoefficient, NodeSets};
/// Parses a comma-separated list; `what` names the input in the error.
pub fn parse_list<T: FromStr>(s: &str, what: &'static str) -> Result<Vec<T>> {
    multi::parse_list(s).ok_or_else(|| Error::Parse {
        what,
        input: s.to_string(),
    })
}

pub use tableaux::{colored_tableaux, k_coeff, ColoredTableau};

/// A partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

/// A node of a Young diagram; rows and columns start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Statistics read off the exponent form of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stats {
    /// Number of nonzero parts.
    pub h: u32,
    /// Number of nonzero parts divisible by `p`.
    pub h_p: u32,
    /// 1 if the number of positive even parts is odd.
    pub parity: u32,
    /// `Π_{p | l_r} Π_{s=1}^{m_r} (1 - (-q^2)^s)`
    pub norm_q: LaurentPoly,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part in row `r` (1-based), zero beyond the length.
    pub fn part(&self, r: usize) -> u32 {
        if r == 0 {
            return u32::MAX;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// Length of column `c` (1-based).
    pub fn column_len(&self, c: u32) -> u32 {
        self.0.iter().take_while(|&&x| x >= c).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|c| self.column_len(c)).collect())
    }

    /// The exponent form `(l_1^{m_1}, ..., l_k^{m_k})` with `l_1 > ... > l_k`.
    pub fn exponent_form(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &x in &self.0 {
            match out.last_mut() {
                Some((l, m)) if *l == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        out
    }

    pub fn contains_node(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && self.part(node.row as usize) >= node.col
    }

    /// True if the diagram of `other` lies inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Every repeated part is divisible by `p`.
    pub fn is_p_strict(&self, p: u32) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1] || w[0] % p == 0)
    }

    pub fn check_p_strict(&self, p: u32) -> Result<()> {
        if self.is_p_strict(p) {
            Ok(())
        } else {
            Err(Error::NotPStrict {
                partition: self.to_string(),
                p,
            })
        }
    }

    /// Adds the node `node`, if the result is again a partition.
    pub fn add_node(&self, node: Node) -> Option<Partition> {
        let r = node.row as usize;
        if r == 0 || r > self.len() + 1 || self.part(r) + 1 != node.col {
            return None;
        }
        if node.col > self.part(r - 1) {
            return None;
        }
        let mut parts = self.0.clone();
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// Removes the node `node`, if the result is again a partition.
    pub fn remove_node(&self, node: Node) -> Option<Partition> {
        let r = node.row as usize;
        if r == 0 || r > self.len() || self.part(r) != node.col || self.part(r + 1) >= node.col {
            return None;
        }
        let mut parts = self.0.clone();
        parts[r - 1] -= 1;
        if parts[r - 1] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (1..=l).map(move |c| Node::new(r as u32 + 1, c)))
    }

    /// Residue counts `(c_0, ..., c_ell)`.
    pub fn content(&self, params: &GlobalParams) -> Vec<u32> {
        let mut c = vec![0u32; params.ell + 1];
        for n in self.nodes() {
            c[residue(n.col, params)] += 1;
        }
        c
    }

    /// Number of nodes of nonzero residue.
    pub fn content_nonzero(&self, params: &GlobalParams) -> u32 {
        self.size() - self.content(params)[0]
    }

    pub fn h(&self) -> u32 {
        self.len() as u32
    }

    pub fn h_p(&self, p: u32) -> u32 {
        self.0.iter().filter(|&&x| x % p == 0).count() as u32
    }

    /// 1 if the number of positive even parts is odd; only defined for strict
    /// partitions.
    pub fn parity(&self) -> Result<u32> {
        if !self.is_strict() {
            return Err(Error::NotStrict(self.to_string()));
        }
        Ok(self.0.iter().filter(|&&x| x % 2 == 0).count() as u32 % 2)
    }

    /// `Π_{p | l_r} Π_{s=1}^{m_r} (1 - (-q^2)^s)`
    pub fn norm_q(&self, p: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one();
        for (l, m) in self.exponent_form() {
            if l % p == 0 {
                for s in 1..=m {
                    out = &out * &one_minus_neg_q2(s);
                }
            }
        }
        out
    }

    pub fn stats(&self, params: &GlobalParams) -> Stats {
        let even = self.0.iter().filter(|&&x| x % 2 == 0).count() as u32;
        Stats {
            h: self.h(),
            h_p: self.h_p(params.p),
            parity: even % 2,
            norm_q: self.norm_q(params.p),
        }
    }
}

/// `1 - (-q^2)^m`
pub(crate) fn one_minus_neg_q2(m: u32) -> LaurentPoly {
    let sign = if m.is_multiple_of(2) { -1 } else { 1 };
    LaurentPoly::from_terms([(0, 1), (2 * m as i64, sign)])
}

/// Residue of column `col`: the pattern `0, 1, ..., ell, ..., 1, 0` repeated
/// with period `p`.
pub fn residue(col: u32, params: &GlobalParams) -> usize {
    let t = ((col - 1) % params.p) as usize;
    if t <= params.ell {
        t
    } else {
        params.p as usize - 1 - t
    }
}

pub fn is_p_strict(lambda: &Partition, params: &GlobalParams) -> bool {
    lambda.is_p_strict(params.p)
}

/// Number of columns `r` such that `λ / α` has a node in column `r` but not
/// in column `r + 1`.
pub fn q_skew(lambda: &Partition, alpha: &Partition) -> Result<u32> {
    if !lambda.contains(alpha) {
        return Err(Error::NotContained {
            inner: alpha.to_string(),
            outer: lambda.to_string(),
        });
    }
    let width = lambda.part(1);
    let occupied = |c: u32| lambda.column_len(c) > alpha.column_len(c);
    Ok((1..=width)
        .filter(|&c| occupied(c) && !occupied(c + 1))
        .count() as u32)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string (or `∅`) is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse {
                what: "partition",
                input: s.to_string(),
            })?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

#[cfg(test)]
pub(crate) fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(ell: usize) -> GlobalParams {
        GlobalParams::new(ell).unwrap()
    }

    #[test]
    fn p_strictness() {
        assert!(part(&[16, 11, 10, 10, 9, 4, 1]).is_p_strict(5));
        assert!(part(&[5, 5, 2]).is_p_strict(5));
        assert!(!part(&[1, 1]).is_p_strict(5));
        assert!(part(&[3, 2, 1]).is_strict());
        assert!(!part(&[5, 5]).is_strict());
    }

    #[test]
    fn residues_follow_the_palindrome() {
        let p = params(2);
        let got: Vec<usize> = (1..=16).map(|c| residue(c, &p)).collect();
        assert_eq!(got, [0, 1, 2, 1, 0, 0, 1, 2, 1, 0, 0, 1, 2, 1, 0, 0]);
        for ell in 1..5 {
            let p = params(ell);
            assert_eq!(residue(1, &p), 0);
            assert_eq!(residue(p.p, &p), 0);
        }
    }

    #[test]
    fn contents() {
        let p = params(2);
        assert_eq!(Partition::empty().content(&p), [0, 0, 0]);
        assert_eq!(part(&[5, 5, 2]).content(&p), [5, 5, 2]);
        assert_eq!(part(&[1]).content(&p), [1, 0, 0]);
        assert_eq!(part(&[5, 5, 2]).content_nonzero(&p), 7);
    }

    #[test]
    fn statistics() {
        let s = part(&[5, 5, 2]).stats(&params(2));
        assert_eq!((s.h, s.h_p), (3, 2));
        let expect = &one_minus_neg_q2(1) * &one_minus_neg_q2(2);
        assert_eq!(s.norm_q, expect);
        assert_eq!(s.norm_q.to_string(), "1 + q^2 - q^4 - q^6");

        let s = part(&[3]).stats(&params(1));
        assert_eq!((s.h, s.h_p, s.parity), (1, 1, 0));
        assert_eq!(s.norm_q.to_string(), "1 + q^2");

        let s = Partition::empty().stats(&params(1));
        assert_eq!((s.h, s.h_p, s.parity), (0, 0, 0));
        assert_eq!(s.norm_q, LaurentPoly::one());

        assert_eq!(part(&[4, 2, 1]).parity().unwrap(), 0);
        assert_eq!(part(&[4, 3, 1]).parity().unwrap(), 1);
        assert!(part(&[2, 2]).parity().is_err());
    }

    #[test]
    fn skew_column_statistic() {
        // (2,1)/(1) has nodes (1,2) and (2,1): column 1 is followed by an
        // occupied column 2, column 2 is followed by nothing.
        assert_eq!(q_skew(&part(&[2, 1]), &part(&[1])).unwrap(), 1);
        assert_eq!(q_skew(&part(&[4, 2]), &part(&[4, 2])).unwrap(), 0);
        for k in 1..6 {
            assert_eq!(q_skew(&part(&[k]), &Partition::empty()).unwrap(), 1);
        }
        assert_eq!(q_skew(&part(&[3, 1]), &part(&[1])).unwrap(), 1);
        assert_eq!(q_skew(&part(&[4, 1]), &part(&[2, 1])).unwrap(), 1);
        assert_eq!(q_skew(&part(&[3, 2]), &part(&[2])).unwrap(), 1);
        assert_eq!(q_skew(&part(&[4, 1]), &part(&[2])).unwrap(), 2);
        assert!(q_skew(&part(&[1]), &part(&[2])).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "16,11,10,10,9,4,1".parse().unwrap();
        assert_eq!(p.to_string(), "16,11,10,10,9,4,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn node_surgery() {
        let l = part(&[3, 1]);
        assert_eq!(l.add_node(Node::new(2, 2)), Some(part(&[3, 2])));
        assert_eq!(l.add_node(Node::new(3, 1)), Some(part(&[3, 1, 1])));
        assert_eq!(l.add_node(Node::new(2, 3)), None);
        assert_eq!(l.remove_node(Node::new(2, 1)), Some(part(&[3])));
        assert_eq!(l.remove_node(Node::new(1, 3)), Some(part(&[2, 1])));
        assert_eq!(part(&[2, 2]).remove_node(Node::new(1, 2)), None);
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }
}
