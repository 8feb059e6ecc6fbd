//! Beta numbers, the `e`-runner abacus, and the up/down bead moves.
//!
//! A set of beta numbers is a cofinite-below subset `J ⊂ Z`. It is stored as
//! `Z_{≤s} ∪ X` with `s + 1 ∉ J`, so equality is structural.

use std::fmt::Write as _;

use crate::error::{CrystalError, Result};
use crate::partition::{Modulus, Partition, Residue};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    e: Modulus,
    threshold: i64,
    /// Elements above `threshold + 1`, strictly decreasing.
    exceptional: Vec<i64>,
}

impl BetaSet {
    /// Beta numbers `j_k = λ_k + charge - k`.
    pub fn from_partition(lambda: &Partition, charge: i64, e: Modulus) -> Self {
        let len = lambda.len() as i64;
        let exceptional = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(k, &p)| p as i64 + charge - k as i64)
            .collect();
        BetaSet {
            e,
            threshold: charge - len,
            exceptional,
        }
    }

    /// The set `Z_{≤s}`, i.e. the empty partition at charge `s`.
    pub fn lower_set(s: i64, e: Modulus) -> Self {
        BetaSet {
            e,
            threshold: s,
            exceptional: Vec::new(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.e
    }

    /// Largest `s` with `Z_{≤s} ⊆ J`.
    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    /// Elements above the threshold, largest first.
    pub fn exceptional(&self) -> &[i64] {
        &self.exceptional
    }

    pub fn charge(&self) -> i64 {
        self.threshold + self.exceptional.len() as i64
    }

    pub fn max(&self) -> i64 {
        self.exceptional.first().copied().unwrap_or(self.threshold)
    }

    pub fn contains(&self, x: i64) -> bool {
        x <= self.threshold || self.exceptional.binary_search_by(|y| x.cmp(y)).is_ok()
    }

    /// Elements `≥ low`, largest first.
    pub fn elements_from(&self, low: i64) -> impl Iterator<Item = i64> + '_ {
        let tail = (low..=self.threshold).rev();
        self.exceptional
            .iter()
            .copied()
            .filter(move |&x| x >= low)
            .chain(tail)
    }

    pub fn to_partition(&self) -> Partition {
        let charge = self.charge();
        let parts = self
            .exceptional
            .iter()
            .enumerate()
            .map(|(k, &j)| (j - charge + k as i64) as usize)
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    pub fn insert(&mut self, x: i64) {
        if self.contains(x) {
            return;
        }
        let pos = self.exceptional.partition_point(|&y| y > x);
        self.exceptional.insert(pos, x);
        self.normalize();
    }

    pub fn remove(&mut self, x: i64) {
        if x <= self.threshold {
            let extra = (x + 1..=self.threshold).rev();
            self.exceptional.extend(extra);
            self.threshold = x - 1;
        } else if let Ok(pos) = self.exceptional.binary_search_by(|y| x.cmp(y)) {
            self.exceptional.remove(pos);
        }
    }

    fn normalize(&mut self) {
        while self.exceptional.last() == Some(&(self.threshold + 1)) {
            self.exceptional.pop();
            self.threshold += 1;
        }
    }

    fn moved(&self, from: i64, to: i64) -> BetaSet {
        let mut next = self.clone();
        next.remove(from);
        next.insert(to);
        next
    }

    fn step(&self) -> i64 {
        self.e.get() as i64
    }

    /// `U(J)`: beads that can slide up their runner, largest first.
    pub fn movable_beads(&self) -> Vec<i64> {
        let e = self.step();
        self.exceptional
            .iter()
            .copied()
            .filter(|&x| !self.contains(x - e))
            .collect()
    }

    pub fn is_core(&self) -> bool {
        self.movable_beads().is_empty()
    }

    /// No movable bead lies on runner `i` or `i + 1`.
    pub fn is_s_i_core(&self, i: Residue) -> bool {
        self.movable_beads()
            .into_iter()
            .all(|x| !i.matches(x) && !i.succ().matches(x))
    }

    /// Moves `p = max U(J)` to `q = min V(J)`; identity on cores.
    pub fn up_step(&self) -> BetaSet {
        let e = self.step();
        let Some(&p) = self.movable_beads().first() else {
            return self.clone();
        };
        let q = (p + 1..=self.max() + e)
            .find(|&x| (x - p).rem_euclid(e) != 0 && self.contains(x - e) && !self.contains(x))
            .expect("V(J) is nonempty for e-restricted J");
        self.moved(p, q)
    }

    /// Moves `q' = min W(J)` to `p' - e` where `p' = min U(J)`; identity on cores.
    pub fn down_step(&self) -> BetaSet {
        let e = self.step();
        let Some(&p) = self.movable_beads().last() else {
            return self.clone();
        };
        let q = (p - e + 1..p)
            .find(|&x| self.contains(x) && !self.contains(x + e))
            .unwrap_or(p);
        self.moved(q, p - e)
    }

    /// `up^max(J)` together with the number of moves made.
    pub fn roof_with_steps(&self) -> (BetaSet, usize) {
        iterate_to_fixpoint(self.clone(), BetaSet::up_step)
    }

    /// `down^max(J)` together with the number of moves made.
    pub fn base_with_steps(&self) -> (BetaSet, usize) {
        iterate_to_fixpoint(self.clone(), BetaSet::down_step)
    }

    pub fn roof(&self) -> BetaSet {
        self.roof_with_steps().0
    }

    pub fn base(&self) -> BetaSet {
        self.base_with_steps().0
    }

    /// The subset `J_{≤x}`.
    pub fn truncated_at(&self, x: i64) -> BetaSet {
        if x <= self.threshold {
            return BetaSet::lower_set(x, self.e);
        }
        let exceptional = self
            .exceptional
            .iter()
            .copied()
            .filter(|&y| y <= x)
            .collect();
        BetaSet {
            e: self.e,
            threshold: self.threshold,
            exceptional,
        }
    }

    fn is_restricted(&self) -> bool {
        self.to_partition().is_restricted(self.e)
    }

    /// Computes `base(J)` by re-adding the top beads one at a time:
    /// `J_k = base(J_{k+1}) ∪ {j_k}` starting from the part of `J` below the
    /// lowest exceptional bead.
    pub fn base_incremental(&self) -> Result<BetaSet> {
        if !self.is_restricted() {
            return Err(CrystalError::NotRestricted {
                partition: self.to_partition(),
                e: self.e.get(),
            });
        }
        let mut current = BetaSet::lower_set(self.threshold, self.e);
        for &bead in self.exceptional.iter().rev() {
            let mut next = current.base();
            next.insert(bead);
            if next.max() != bead || !next.is_restricted() {
                return Err(CrystalError::InvariantViolation(format!(
                    "incremental base produced {} after adding bead {bead}",
                    next.to_partition()
                )));
            }
            current = next;
        }
        Ok(current.base())
    }

    /// `M_i = max{x ∈ J : x ≡ i}` for every residue.
    pub fn runner_maxima(&self) -> RunnerStats {
        let e = self.step();
        let top = self.max();
        let maxima = (0..e)
            .map(|i| {
                let mut x = top - (top - i).rem_euclid(e);
                while !self.contains(x) {
                    x -= e;
                }
                x
            })
            .collect();
        RunnerStats { maxima }
    }

    /// Text picture with one runner per column, smallest numbers on top.
    ///
    /// Starts from the last full row of beads and stops at the row holding
    /// the largest bead; empty positions are shown as `.`.
    pub fn render(&self) -> String {
        let e = self.step();
        let first_row = (self.threshold - e + 1).div_euclid(e);
        let last_row = self.max().div_euclid(e);
        let width = (first_row * e)
            .to_string()
            .len()
            .max((last_row * e + e - 1).to_string().len());
        let mut out = String::new();
        for row in first_row..=last_row {
            let cells: Vec<String> = (0..e)
                .map(|c| {
                    let x = row * e + c;
                    if self.contains(x) {
                        format!("{x:>width$}")
                    } else {
                        format!("{:>width$}", ".")
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join("  "));
        }
        out
    }
}

fn iterate_to_fixpoint(
    mut current: BetaSet,
    step: impl Fn(&BetaSet) -> BetaSet,
) -> (BetaSet, usize) {
    let mut steps = 0;
    loop {
        let next = step(&current);
        if next == current {
            return (current, steps);
        }
        current = next;
        steps += 1;
    }
}

/// Per-runner maxima `M_i`, indexed by residue value in `[0, e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunnerStats {
    maxima: Vec<i64>,
}

impl RunnerStats {
    pub fn get(&self, i: Residue) -> i64 {
        self.maxima[i.value() as usize]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.maxima
    }
}

pub fn to_beta(lambda: &Partition, m: Residue) -> BetaSet {
    BetaSet::from_partition(lambda, m.value() as i64, m.modulus())
}

pub fn from_beta(beta: &BetaSet) -> Partition {
    beta.to_partition()
}

pub fn roof(lambda: &Partition, m: Residue) -> Result<Partition> {
    lambda.require_restricted(m.modulus())?;
    Ok(to_beta(lambda, m).roof().to_partition())
}

pub fn base(lambda: &Partition, m: Residue) -> Result<Partition> {
    lambda.require_restricted(m.modulus())?;
    Ok(to_beta(lambda, m).base().to_partition())
}

pub fn base_incremental(lambda: &Partition, m: Residue) -> Result<Partition> {
    Ok(to_beta(lambda, m).base_incremental()?.to_partition())
}

pub fn is_e_core(lambda: &Partition, e: Modulus) -> bool {
    BetaSet::from_partition(lambda, 0, e).is_core()
}

/// All `e`-cores of size `n`.
pub fn cores_of(n: usize, e: Modulus) -> Vec<Partition> {
    crate::partition::partitions_of(n)
        .into_iter()
        .filter(|l| is_e_core(l, e))
        .collect()
}

pub fn is_s_i_core(lambda: &Partition, m: Residue, i: Residue) -> bool {
    to_beta(lambda, m).is_s_i_core(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::restricted_partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn e(v: u32) -> Modulus {
        Modulus::new(v).unwrap()
    }

    fn elements(j: &BetaSet, low: i64) -> Vec<i64> {
        j.elements_from(low).collect()
    }

    #[test]
    fn beta_of_421() {
        let j = to_beta(&p(&[4, 2, 1]), e(3).residue(0));
        assert_eq!(j.threshold(), -3);
        assert_eq!(j.exceptional(), &[4, 1, -1]);
        assert_eq!(elements(&j, -5), vec![4, 1, -1, -3, -4, -5]);
        assert_eq!(j.to_partition(), p(&[4, 2, 1]));
    }

    #[test]
    fn beta_of_empty_and_42() {
        let j = to_beta(&Partition::empty(), e(2).residue(0));
        assert_eq!((j.threshold(), j.exceptional().len()), (0, 0));
        assert_eq!(j.to_partition(), Partition::empty());
        let j = to_beta(&p(&[4, 2]), e(6).residue(0));
        assert_eq!(j.exceptional(), &[4, 1]);
        assert_eq!(j.threshold(), -2);
    }

    #[test]
    fn from_beta_examples() {
        let mut j = BetaSet::lower_set(-3, e(3));
        j.insert(-1);
        j.insert(2);
        j.insert(5);
        assert_eq!(j.charge(), 0);
        assert_eq!(j.to_partition(), p(&[5, 3, 1]));
        assert_eq!(
            BetaSet::lower_set(4, e(5)).to_partition(),
            Partition::empty()
        );
    }

    #[test]
    fn insert_remove_renormalize() {
        let mut j = BetaSet::lower_set(0, e(3));
        j.remove(-2);
        assert_eq!(j.threshold(), -3);
        assert_eq!(j.exceptional(), &[0, -1]);
        j.insert(-2);
        assert_eq!(j, BetaSet::lower_set(0, e(3)));
    }

    #[test]
    fn up_step_worked_example() {
        let j = to_beta(&p(&[3, 2, 1]), e(3).residue(2));
        assert_eq!(j.movable_beads(), vec![5, 3]);
        let up = j.up_step();
        assert!(up.contains(6) && !up.contains(5));
        assert_eq!(up.to_partition(), p(&[4, 2, 1]));
    }

    #[test]
    fn up_step_421() {
        let j = to_beta(&p(&[4, 2, 1]), e(3).residue(0));
        assert_eq!(j.movable_beads()[0], 1);
        let up = j.up_step();
        assert!(up.contains(2) && !up.contains(1));
        assert_eq!(up.to_partition(), p(&[4, 3, 1]));
    }

    #[test]
    fn steps_fix_cores() {
        let j = to_beta(&p(&[5, 3, 1]), e(3).residue(0));
        assert!(j.is_core());
        assert_eq!(j.up_step(), j);
        assert_eq!(j.down_step(), j);
    }

    #[test]
    fn roof_and_base_examples() {
        let z = e(3).residue(0);
        assert_eq!(roof(&p(&[2, 2, 1]), z).unwrap(), p(&[5, 3, 1]));
        assert_eq!(base(&p(&[2, 2, 1]), z).unwrap(), p(&[2]));
        assert_eq!(roof(&p(&[1, 1]), z).unwrap(), p(&[1, 1]));
        let b = base(&p(&[3, 1, 1, 1]), z).unwrap();
        assert!(is_e_core(&b, e(3)));
        assert_eq!(b.first_part(), 3);
        assert_eq!(b, p(&[3, 1, 1]));
        let b = base(&p(&[2, 1]), e(2).residue(0)).unwrap();
        assert_eq!(b, p(&[2, 1]));
        assert!(roof(&p(&[3]), z).is_err());
    }

    #[test]
    fn down_step_reaches_core_221() {
        let mut j = to_beta(&p(&[2, 2, 1]), e(3).residue(0));
        while !j.is_core() {
            j = j.down_step();
        }
        assert_eq!(j.to_partition(), p(&[2]));
    }

    #[test]
    fn incremental_base_examples() {
        let z = e(3).residue(0);
        assert_eq!(base_incremental(&p(&[2, 2, 1]), z).unwrap(), p(&[2]));
        assert_eq!(base_incremental(&p(&[5, 3, 1]), z).unwrap(), p(&[5, 3, 1]));
        assert!(base_incremental(&p(&[4]), z).is_err());
    }

    #[test]
    fn runner_maxima_examples() {
        let j = to_beta(&p(&[4, 2]), e(6).residue(0));
        assert_eq!(j.runner_maxima().as_slice(), &[-6, 1, -4, -3, 4, -7]);
        let j = to_beta(&p(&[1]), e(2).residue(0));
        assert_eq!(j.runner_maxima().as_slice(), &[-2, 1]);
        let j = to_beta(&Partition::empty(), e(4).residue(2));
        assert_eq!(j.runner_maxima().as_slice(), &[0, 1, 2, -1]);
    }

    #[test]
    fn core_predicates() {
        assert!(is_e_core(&p(&[5, 3, 1]), e(3)));
        assert!(!is_e_core(&p(&[3]), e(3)));
        for ev in 2..=5 {
            let e = e(ev);
            for i in e.residues() {
                assert!(is_s_i_core(&Partition::empty(), e.residue(0), i));
            }
        }
    }

    #[test]
    fn e_core_iff_s_i_core_for_all_i() {
        for ev in 2..=4 {
            let e = e(ev);
            for n in 0..=10 {
                for lam in crate::partition::partitions_of(n) {
                    for m in e.residues() {
                        let all = e.residues().all(|i| is_s_i_core(&lam, m, i));
                        assert_eq!(all, is_e_core(&lam, e));
                    }
                }
            }
        }
    }

    #[test]
    fn render_shows_beads() {
        let j = to_beta(&p(&[4, 2, 1]), e(3).residue(0));
        let text = j.render();
        assert_eq!(text, "-6  -5  -4\n-3   .  -1\n .   1   .\n .   4   .\n");
    }

    #[test]
    fn up_down_properties_small() {
        for ev in 2..=3 {
            let e = e(ev);
            for n in 0..=8 {
                for lam in restricted_partitions_of(n, e) {
                    for m in e.residues() {
                        let j = to_beta(&lam, m);
                        let up = j.up_step().to_partition();
                        let down = j.down_step().to_partition();
                        assert!(up.contains(&lam) && up.is_restricted(e) && up.len() == lam.len());
                        assert!(lam.contains(&down) && down.is_restricted(e));
                        assert_eq!(down.first_part(), lam.first_part());
                    }
                }
            }
        }
    }
}
