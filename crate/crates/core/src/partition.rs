//! Partitions, nodes, residues and multipartitions.
//!
//! Rows and columns are 0-based. The node in row `r` and column `c` of a
//! partition placed at charge `m` has content `m - r + c`, so the content of
//! the cell just right of row `k` is `λ_k + m - k`, the `k`-th beta number.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{CrystalError, Result};

/// The number of residues `e`; always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(e: u32) -> Result<Self> {
        if e < 2 {
            return Err(CrystalError::InvalidModulus(e));
        }
        Ok(Modulus(e))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces an arbitrary integer to a residue.
    pub fn residue(self, x: i64) -> Residue {
        Residue {
            value: x.rem_euclid(self.0 as i64) as u32,
            modulus: self,
        }
    }

    pub fn residues(self) -> impl Iterator<Item = Residue> {
        (0..self.0).map(move |v| Residue {
            value: v,
            modulus: self,
        })
    }
}

impl<'de> Deserialize<'de> for Modulus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let e = u32::deserialize(d)?;
        Modulus::new(e).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of `Z/eZ`, stored by its representative in `[0, e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u32,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: i64, e: Modulus) -> Self {
        e.residue(value)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    pub fn succ(self) -> Self {
        self + 1
    }

    pub fn pred(self) -> Self {
        self - 1
    }

    /// True when `x ≡ self (mod e)`.
    pub fn matches(self, x: i64) -> bool {
        x.rem_euclid(self.modulus.0 as i64) == self.value as i64
    }

    pub(crate) fn check_same(self, other: Residue) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(CrystalError::ModulusMismatch(
                self.modulus.0,
                other.modulus.0,
            ));
        }
        Ok(())
    }
}

impl PartialOrd for Residue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Residue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.modulus, self.value).cmp(&(other.modulus, other.value))
    }
}

impl Add<i64> for Residue {
    type Output = Residue;
    fn add(self, rhs: i64) -> Residue {
        self.modulus.residue(self.value as i64 + rhs)
    }
}

impl Sub<i64> for Residue {
    type Output = Residue;
    fn sub(self, rhs: i64) -> Residue {
        self.modulus.residue(self.value as i64 - rhs)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self + rhs.value as i64
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self - rhs.value as i64
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        self.modulus.residue(-(self.value as i64))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Serialize for Residue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u32(self.value)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(CrystalError::InvalidParts(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Internal constructor for parts already known to be valid.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `k`-th part, zero beyond the length.
    pub fn part(&self, k: usize) -> usize {
        self.parts.get(k).copied().unwrap_or(0)
    }

    /// First part `a(λ)`.
    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Number of parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_restricted(&self, e: Modulus) -> bool {
        let e = e.get() as usize;
        (0..self.len()).all(|k| self.part(k) - self.part(k + 1) < e)
    }

    pub(crate) fn require_restricted(&self, e: Modulus) -> Result<()> {
        if self.is_restricted(e) {
            Ok(())
        } else {
            Err(CrystalError::NotRestricted {
                partition: self.clone(),
                e: e.get(),
            })
        }
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Adds a box at the end of `row`; the caller guarantees addability.
    pub(crate) fn with_box_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition::from_parts_unchecked(parts)
    }

    /// Removes the last box of `row`; the caller guarantees removability.
    pub(crate) fn with_box_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition::from_parts_unchecked(parts)
    }

    /// All nodes, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(row, &p)| (0..p).map(move |col| Node { row, col }))
    }

    /// Number of nodes of each residue at charge `m`, indexed by residue value.
    pub fn residue_counts(&self, m: Residue) -> Vec<u64> {
        let mut counts = vec![0u64; m.modulus().get() as usize];
        for node in self.nodes() {
            counts[node.residue(m).value() as usize] += 1;
        }
        counts
    }

    /// Addable and removable `i`-nodes at charge `m`, from the top row down.
    pub fn boundary_nodes(&self, m: Residue, i: Residue) -> Vec<(Node, NodeKind)> {
        let mut out = Vec::new();
        for row in 0..=self.len() {
            let p = self.part(row);
            if row == 0 || self.part(row - 1) > p {
                let node = Node { row, col: p };
                if node.residue(m) == i {
                    out.push((node, NodeKind::Addable));
                }
            }
            if p > 0 && p > self.part(row + 1) {
                let node = Node { row, col: p - 1 };
                if node.residue(m) == i {
                    out.push((node, NodeKind::Removable));
                }
            }
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CrystalError;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graded lexicographic: by size, then by parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// A cell of a Young diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn content(self, m: Residue) -> i64 {
        m.value() as i64 - self.row as i64 + self.col as i64
    }

    pub fn residue(self, m: Residue) -> Residue {
        m.modulus().residue(self.content(m))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// `λ^(1) ⊗ … ⊗ λ^(r)` in `B(Λ_{m_1}) ⊗ … ⊗ B(Λ_{m_r})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "MultipartitionRepr", into = "MultipartitionRepr")]
pub struct Multipartition {
    components: Vec<Partition>,
    charges: Vec<Residue>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>, charges: Vec<Residue>) -> Result<Self> {
        if components.len() != charges.len() || charges.is_empty() {
            return Err(CrystalError::ChargeCountMismatch {
                components: components.len(),
                charges: charges.len(),
            });
        }
        let e = charges[0].modulus();
        for &c in &charges {
            charges[0].check_same(c)?;
        }
        for comp in &components {
            comp.require_restricted(e)?;
        }
        Ok(Multipartition {
            components,
            charges,
        })
    }

    /// The highest-weight element `∅ ⊗ … ⊗ ∅`.
    pub fn empty(charges: Vec<Residue>) -> Result<Self> {
        let comps = vec![Partition::empty(); charges.len()];
        Multipartition::new(comps, charges)
    }

    pub(crate) fn from_parts_unchecked(components: Vec<Partition>, charges: Vec<Residue>) -> Self {
        Multipartition {
            components,
            charges,
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn charges(&self) -> &[Residue] {
        &self.charges
    }

    pub fn modulus(&self) -> Modulus {
        self.charges[0].modulus()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multipartition serialization cannot fail")
    }
}

impl Ord for Multipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.components.cmp(&other.components))
            .then_with(|| {
                let a: Vec<u32> = self.charges.iter().map(|c| c.value()).collect();
                let b: Vec<u32> = other.charges.iter().map(|c| c.value()).collect();
                a.cmp(&b)
            })
    }
}

impl PartialOrd for Multipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize, Deserialize)]
struct MultipartitionRepr {
    e: u32,
    charges: Vec<u32>,
    components: Vec<Partition>,
}

impl TryFrom<MultipartitionRepr> for Multipartition {
    type Error = CrystalError;
    fn try_from(r: MultipartitionRepr) -> Result<Self> {
        let e = Modulus::new(r.e)?;
        if let Some(&bad) = r.charges.iter().find(|&&c| c >= r.e) {
            return Err(CrystalError::WrongModulus {
                expected: r.e,
                actual: bad,
            });
        }
        let charges = r.charges.iter().map(|&c| e.residue(c as i64)).collect();
        Multipartition::new(r.components, charges)
    }
}

impl From<Multipartition> for MultipartitionRepr {
    fn from(mp: Multipartition) -> Self {
        MultipartitionRepr {
            e: mp.modulus().get(),
            charges: mp.charges.iter().map(|c| c.value()).collect(),
            components: mp.components,
        }
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `e`-restricted partitions of `n`.
pub fn restricted_partitions_of(n: usize, e: Modulus) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.is_restricted(e))
        .collect()
}

/// All `e`-restricted partitions of size at most `n`, grouped by size.
pub fn restricted_partitions_up_to(n: usize, e: Modulus) -> Vec<Vec<Partition>> {
    (0..=n).map(|k| restricted_partitions_of(k, e)).collect()
}

/// Every `r`-tuple of `e`-restricted partitions with total size at most `n`.
pub fn restricted_tuples_up_to(n: usize, e: Modulus, r: usize) -> Vec<Vec<Partition>> {
    let by_size = restricted_partitions_up_to(n, e);
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        let mut next = Vec::new();
        for prefix in &out {
            let used: usize = prefix.iter().map(Partition::size).sum();
            for level in &by_size[..=n - used] {
                for lam in level {
                    let mut t = prefix.clone();
                    t.push(lam.clone());
                    next.push(t);
                }
            }
        }
        out = next;
    }
    out
}
