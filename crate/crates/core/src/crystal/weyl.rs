//! e-cores as the Weyl group orbit of the empty partition.

use std::fmt;

use serde::Serialize;

use super::{ChargedPartition, CrystalElement};
use crate::abacus::is_e_core;
use crate::error::{CrystalError, Result};
use crate::partition::{Modulus, Node, Partition, Residue};

/// `s_{i_1} s_{i_2} ⋯ s_{i_k}`; the rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    letters: Vec<Residue>,
}

impl WeylWord {
    pub fn new(letters: Vec<Residue>) -> Self {
        WeylWord { letters }
    }

    pub fn identity() -> Self {
        WeylWord::default()
    }

    pub fn from_values(values: &[u32], e: Modulus) -> Self {
        WeylWord {
            letters: values.iter().map(|&v| e.residue(v as i64)).collect(),
        }
    }

    pub fn letters(&self) -> &[Residue] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with its leftmost letter dropped.
    pub fn tail(&self) -> WeylWord {
        WeylWord {
            letters: self.letters.iter().skip(1).copied().collect(),
        }
    }

    /// Applies the word to `x`, rightmost letter first.
    pub fn act<C: CrystalElement>(&self, x: &C) -> C {
        self.letters
            .iter()
            .rev()
            .fold(x.clone(), |acc, &i| acc.weyl_s(i))
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", names.join(" "))
    }
}

impl Serialize for WeylWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let values: Vec<u32> = self.letters.iter().map(|r| r.value()).collect();
        values.serialize(s)
    }
}

/// A word `w` with `w ∅_m = λ`, found by repeatedly stripping all removable
/// nodes of the residue of the last row's end.
pub fn core_to_coset(lambda: &Partition, m: Residue) -> Result<WeylWord> {
    let e = m.modulus();
    if !is_e_core(lambda, e) {
        return Err(CrystalError::NotCore {
            partition: lambda.clone(),
            e: e.get(),
        });
    }
    let mut current = ChargedPartition::new(lambda.clone(), m);
    let mut letters = Vec::new();
    while !current.shape.is_empty() {
        let row = current.shape.len() - 1;
        let node = Node {
            row,
            col: current.shape.part(row) - 1,
        };
        let i = node.residue(m);
        let next = current.weyl_s(i);
        if next.shape.size() >= current.shape.size() {
            return Err(CrystalError::InvariantViolation(format!(
                "s_{i} did not shrink the core {}",
                current.shape
            )));
        }
        letters.push(i);
        current = next;
    }
    Ok(WeylWord { letters })
}

/// `w ∅_m`.
pub fn coset_to_core(word: &WeylWord, m: Residue) -> Partition {
    word.act(&ChargedPartition::empty(m)).shape
}
