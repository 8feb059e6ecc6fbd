//! The Misra–Miwa crystal on `e`-restricted partitions and its tensor products.
//!
//! Signatures are read factor by factor starting from the last tensor factor,
//! each factor from the top row down; a single RA-deletion is then applied to
//! the whole word. `f̃_i` adds the node of the rightmost surviving `A`, and
//! `ẽ_i` removes the node of the leftmost surviving `R`.

mod closure;
mod weyl;

use serde::Serialize;

pub use closure::{crystal_closure, CrystalEdge, CrystalGraph};
pub use weyl::{core_to_coset, coset_to_core, WeylWord};

use crate::partition::{Modulus, Multipartition, NodeKind, Partition, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    A,
    R,
}

/// Locates the node a letter refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub component: usize,
    pub row: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignatureWord {
    letters: Vec<(Slot, Letter)>,
}

impl SignatureWord {
    pub fn new(letters: Vec<(Slot, Letter)>) -> Self {
        SignatureWord { letters }
    }

    /// A word without slot information, e.g. `"RARA"`; other characters are ignored.
    pub fn from_letters(s: &str) -> Self {
        let letters = s
            .chars()
            .filter_map(|c| match c {
                'A' => Some(Letter::A),
                'R' => Some(Letter::R),
                _ => None,
            })
            .enumerate()
            .map(|(k, l)| {
                (
                    Slot {
                        component: 0,
                        row: k,
                    },
                    l,
                )
            })
            .collect();
        SignatureWord { letters }
    }

    pub fn letters(&self) -> &[(Slot, Letter)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.letters.iter().filter(|(_, l)| *l == letter).count()
    }

    pub fn to_letter_string(&self) -> String {
        self.letters
            .iter()
            .map(|(_, l)| match l {
                Letter::A => 'A',
                Letter::R => 'R',
            })
            .collect()
    }
}

/// Cancels every `R … A` pair until the word reads `A…A R…R`.
pub fn reduce_signature(word: &SignatureWord) -> SignatureWord {
    let mut survivors: Vec<Option<(Slot, Letter)>> = Vec::with_capacity(word.len());
    let mut pending_r: Vec<usize> = Vec::new();
    for &(slot, letter) in &word.letters {
        match letter {
            Letter::R => {
                pending_r.push(survivors.len());
                survivors.push(Some((slot, letter)));
            }
            Letter::A => match pending_r.pop() {
                Some(k) => survivors[k] = None,
                None => survivors.push(Some((slot, letter))),
            },
        }
    }
    SignatureWord {
        letters: survivors.into_iter().flatten().collect(),
    }
}

/// `wt = Σ_k Λ_{m_k} − Σ_i N_i α_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub charges: Vec<Residue>,
    /// `N_i`, indexed by residue value.
    pub counts: Vec<u64>,
}

/// `wt(h_i)` from the weight, using the Cartan pairing of `A^{(1)}_{e-1}`.
pub fn level_pairing(wt: &WeightVector, i: Residue) -> i64 {
    let e = i.modulus();
    let dominant = wt.charges.iter().filter(|&&c| c == i).count() as i64;
    let roots: i64 = e
        .residues()
        .map(|j| wt.counts[j.value() as usize] as i64 * cartan_entry(j, i))
        .sum();
    dominant - roots
}

/// `⟨α_j, h_i⟩`; for `e = 2` both off-diagonal terms land on the same root.
fn cartan_entry(j: Residue, i: Residue) -> i64 {
    let mut a = 0;
    if j == i {
        a += 2;
    }
    if j == i.succ() {
        a -= 1;
    }
    if j == i.pred() {
        a -= 1;
    }
    a
}

/// An element of a (tensor product of) level-one crystal(s).
pub trait CrystalElement: Clone + Eq + std::hash::Hash {
    fn modulus(&self) -> Modulus;

    /// Addable/removable `i`-nodes in reading order, before RA-deletion.
    fn raw_signature(&self, i: Residue) -> SignatureWord;

    /// Adds (`A`) or removes (`R`) the node at `slot`.
    fn act(&self, slot: Slot, letter: Letter) -> Self;

    fn weight(&self) -> WeightVector;

    fn f(&self, i: Residue) -> Option<Self> {
        let word = reduce_signature(&self.raw_signature(i));
        word.letters
            .iter()
            .rev()
            .find(|(_, l)| *l == Letter::A)
            .map(|&(slot, _)| self.act(slot, Letter::A))
    }

    fn e(&self, i: Residue) -> Option<Self> {
        let word = reduce_signature(&self.raw_signature(i));
        word.letters
            .iter()
            .find(|(_, l)| *l == Letter::R)
            .map(|&(slot, _)| self.act(slot, Letter::R))
    }

    fn phi(&self, i: Residue) -> usize {
        reduce_signature(&self.raw_signature(i)).count(Letter::A)
    }

    fn eps(&self, i: Residue) -> usize {
        reduce_signature(&self.raw_signature(i)).count(Letter::R)
    }

    /// `|A_i| − |R_i|`, summed over tensor factors.
    fn pairing(&self, i: Residue) -> i64 {
        let raw = self.raw_signature(i);
        raw.count(Letter::A) as i64 - raw.count(Letter::R) as i64
    }

    fn f_pow(&self, i: Residue, k: usize) -> Option<Self> {
        (0..k).try_fold(self.clone(), |x, _| x.f(i))
    }

    fn e_pow(&self, i: Residue, k: usize) -> Option<Self> {
        (0..k).try_fold(self.clone(), |x, _| x.e(i))
    }

    fn f_max(&self, i: Residue) -> Self {
        self.f_pow(i, self.phi(i)).expect("phi counts applicable f")
    }

    fn e_max(&self, i: Residue) -> Self {
        self.e_pow(i, self.eps(i)).expect("eps counts applicable e")
    }

    /// The simple reflection `s_i` acting on a normal crystal.
    fn weyl_s(&self, i: Residue) -> Self {
        let p = self.pairing(i);
        let out = if p >= 0 {
            self.f_pow(i, p as usize)
        } else {
            self.e_pow(i, (-p) as usize)
        };
        out.expect("the crystal is normal")
    }
}

/// A partition viewed as an element of `B(Λ_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedPartition {
    pub shape: Partition,
    pub charge: Residue,
}

impl ChargedPartition {
    pub fn new(shape: Partition, charge: Residue) -> Self {
        ChargedPartition { shape, charge }
    }

    pub fn empty(charge: Residue) -> Self {
        ChargedPartition {
            shape: Partition::empty(),
            charge,
        }
    }
}

fn push_letters(
    out: &mut Vec<(Slot, Letter)>,
    component: usize,
    shape: &Partition,
    charge: Residue,
    i: Residue,
) {
    for (node, kind) in shape.boundary_nodes(charge, i) {
        let letter = match kind {
            NodeKind::Addable => Letter::A,
            NodeKind::Removable => Letter::R,
        };
        out.push((
            Slot {
                component,
                row: node.row,
            },
            letter,
        ));
    }
}

fn act_on(shape: &Partition, row: usize, letter: Letter) -> Partition {
    match letter {
        Letter::A => shape.with_box_added(row),
        Letter::R => shape.with_box_removed(row),
    }
}

impl CrystalElement for ChargedPartition {
    fn modulus(&self) -> Modulus {
        self.charge.modulus()
    }

    fn raw_signature(&self, i: Residue) -> SignatureWord {
        let mut letters = Vec::new();
        push_letters(&mut letters, 0, &self.shape, self.charge, i);
        SignatureWord { letters }
    }

    fn act(&self, slot: Slot, letter: Letter) -> Self {
        ChargedPartition {
            shape: act_on(&self.shape, slot.row, letter),
            charge: self.charge,
        }
    }

    fn weight(&self) -> WeightVector {
        WeightVector {
            charges: vec![self.charge],
            counts: self.shape.residue_counts(self.charge),
        }
    }
}

impl CrystalElement for Multipartition {
    fn modulus(&self) -> Modulus {
        Multipartition::modulus(self)
    }

    fn raw_signature(&self, i: Residue) -> SignatureWord {
        let mut letters = Vec::new();
        for (k, (shape, &charge)) in self
            .components()
            .iter()
            .zip(self.charges())
            .enumerate()
            .rev()
        {
            push_letters(&mut letters, k, shape, charge, i);
        }
        SignatureWord { letters }
    }

    fn act(&self, slot: Slot, letter: Letter) -> Self {
        let mut comps = self.components().to_vec();
        comps[slot.component] = act_on(&comps[slot.component], slot.row, letter);
        Multipartition::from_parts_unchecked(comps, self.charges().to_vec())
    }

    fn weight(&self) -> WeightVector {
        let e = self.modulus().get() as usize;
        let mut counts = vec![0u64; e];
        for (shape, &charge) in self.components().iter().zip(self.charges()) {
            for (acc, c) in counts.iter_mut().zip(shape.residue_counts(charge)) {
                *acc += c;
            }
        }
        WeightVector {
            charges: self.charges().to_vec(),
            counts,
        }
    }
}

/// An `f̃`-word reaching `x` from the highest-weight element, in the order
/// the operators are applied. Peels `x` with `ẽ`, letting `choose` pick among
/// the residues with `ε > 0`.
pub fn lowering_word<C: CrystalElement>(
    x: &C,
    mut choose: impl FnMut(&[Residue]) -> Residue,
) -> Vec<Residue> {
    let e = x.modulus();
    let mut word = Vec::new();
    let mut current = x.clone();
    loop {
        let candidates: Vec<Residue> = e.residues().filter(|&i| current.eps(i) > 0).collect();
        if candidates.is_empty() {
            break;
        }
        let i = choose(&candidates);
        current = current.e(i).expect("chosen residue has eps > 0");
        word.push(i);
    }
    word.reverse();
    word
}

/// `lowering_word` with the smallest available residue at each step.
pub fn default_lowering_word<C: CrystalElement>(x: &C) -> Vec<Residue> {
    lowering_word(x, |c| c[0])
}
