//! Stretched crystal elements `S_h(λ)^{1/h}` in the limit of divisible `h`.
//!
//! An element is a left-to-right list of e-cores with positive rational
//! masses summing to 1. Copies of a core are never materialized: an `f̃_i`
//! step is carried out on mass blocks with exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::abacus::is_e_core;
use crate::crystal::{default_lowering_word, ChargedPartition, CrystalElement};
use crate::error::{CrystalError, Result};
use crate::partition::{Partition, Residue};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub core: Partition,
    pub mass: BigRational,
}

impl Serialize for Segment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Segment", 2)?;
        st.serialize_field("core", &self.core)?;
        st.serialize_field("mass", &fraction_string(&self.mass))?;
        st.end()
    }
}

/// `p/q` in lowest terms, with `q` always written.
pub fn fraction_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchedElement {
    segments: Vec<Segment>,
    charge: Residue,
}

impl Serialize for StretchedElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("StretchedElement", 1)?;
        st.serialize_field("segments", &self.segments)?;
        st.end()
    }
}

impl StretchedElement {
    /// A single core of mass 1.
    pub fn from_core(core: Partition, charge: Residue) -> Result<Self> {
        if !is_e_core(&core, charge.modulus()) {
            return Err(CrystalError::NotCore {
                partition: core,
                e: charge.modulus().get(),
            });
        }
        Ok(StretchedElement {
            segments: vec![Segment {
                core,
                mass: BigRational::one(),
            }],
            charge,
        })
    }

    pub fn highest_weight(charge: Residue) -> Self {
        StretchedElement {
            segments: vec![Segment {
                core: Partition::empty(),
                mass: BigRational::one(),
            }],
            charge,
        }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn charge(&self) -> Residue {
        self.charge
    }

    /// First segment core: the initial direction.
    pub fn ceil(&self) -> &Partition {
        &self.segments[0].core
    }

    /// Last segment core: the final direction.
    pub fn floor(&self) -> &Partition {
        &self.segments.last().expect("segments are nonempty").core
    }

    /// Breakpoints `0 = a_0 < a_1 < … < a_s = 1`.
    pub fn breakpoints(&self) -> Vec<BigRational> {
        let mut acc = BigRational::zero();
        let mut out = vec![acc.clone()];
        for seg in &self.segments {
            acc += &seg.mass;
            out.push(acc.clone());
        }
        out
    }

    /// Mass-weighted residue counts `Σ_j q_j N_i(ν_j)`.
    pub fn weighted_residue_counts(&self) -> Vec<BigRational> {
        let e = self.charge.modulus().get() as usize;
        let mut out = vec![BigRational::zero(); e];
        for seg in &self.segments {
            for (acc, n) in out.iter_mut().zip(seg.core.residue_counts(self.charge)) {
                *acc += &seg.mass * BigRational::from_integer(BigInt::from(n));
            }
        }
        out
    }

    /// Masses positive and summing to 1, cores are e-cores, strictly
    /// decreasing under containment.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(CrystalError::InvariantViolation(msg));
        let total: BigRational = self.segments.iter().map(|s| s.mass.clone()).sum();
        if !total.is_one() {
            return fail(format!("masses sum to {}", fraction_string(&total)));
        }
        for seg in &self.segments {
            if !seg.mass.is_positive() {
                return fail(format!("nonpositive mass on {}", seg.core));
            }
            if !is_e_core(&seg.core, self.charge.modulus()) {
                return fail(format!("{} is not a core", seg.core));
            }
        }
        for w in self.segments.windows(2) {
            if w[0].core == w[1].core || !w[0].core.contains(&w[1].core) {
                return fail(format!(
                    "{} does not strictly contain {}",
                    w[0].core, w[1].core
                ));
            }
        }
        Ok(())
    }

    /// Per segment, `(ε_i, φ_i)` of its core; one of them is zero.
    fn strings(&self, i: Residue) -> Vec<(usize, usize)> {
        self.segments
            .iter()
            .map(|seg| {
                let x = ChargedPartition::new(seg.core.clone(), self.charge);
                let (eps, phi) = (x.eps(i), x.phi(i));
                debug_assert!(eps == 0 || phi == 0, "cores are s_i-cores");
                (eps, phi)
            })
            .collect()
    }

    /// Surviving `A`-mass per segment after block cancellation, and the
    /// total surviving `R`-mass.
    fn reduced_blocks(&self, i: Residue) -> (Vec<BigRational>, BigRational) {
        let strings = self.strings(i);
        let mut surviving_a = vec![BigRational::zero(); self.segments.len()];
        let mut pending_r = BigRational::zero();
        for j in (0..self.segments.len()).rev() {
            let (eps, phi) = strings[j];
            let mass = &self.segments[j].mass;
            if eps > 0 {
                pending_r += mass * BigRational::from_integer(BigInt::from(eps));
            }
            if phi > 0 {
                let a = mass * BigRational::from_integer(BigInt::from(phi));
                let cancelled = if a < pending_r {
                    a.clone()
                } else {
                    pending_r.clone()
                };
                pending_r -= &cancelled;
                surviving_a[j] = a - cancelled;
            }
        }
        (surviving_a, pending_r)
    }

    pub fn phi(&self, i: Residue) -> BigRational {
        self.reduced_blocks(i).0.into_iter().sum()
    }

    pub fn eps(&self, i: Residue) -> BigRational {
        self.reduced_blocks(i).1
    }

    /// The image of `f̃_i`; `None` when no `A`-mass survives.
    pub fn f(&self, i: Residue) -> Option<StretchedElement> {
        let strings = self.strings(i);
        let (surviving_a, _) = self.reduced_blocks(i);
        let available: BigRational = surviving_a.iter().cloned().sum();
        if available < BigRational::one() {
            return None;
        }
        let mut remaining = BigRational::one();
        let mut out: Vec<Segment> = Vec::with_capacity(self.segments.len() + 1);
        for (j, seg) in self.segments.iter().enumerate() {
            let take = if surviving_a[j] < remaining {
                surviving_a[j].clone()
            } else {
                remaining.clone()
            };
            if take.is_zero() {
                push_merged(&mut out, seg.clone());
                continue;
            }
            remaining -= &take;
            let phi = BigRational::from_integer(BigInt::from(strings[j].1));
            let moved = take / phi;
            let raised = ChargedPartition::new(seg.core.clone(), self.charge)
                .weyl_s(i)
                .shape;
            push_merged(
                &mut out,
                Segment {
                    core: raised,
                    mass: moved.clone(),
                },
            );
            push_merged(
                &mut out,
                Segment {
                    core: seg.core.clone(),
                    mass: &seg.mass - moved,
                },
            );
        }
        debug_assert!(remaining.is_zero());
        Some(StretchedElement {
            segments: out,
            charge: self.charge,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }
}

fn push_merged(out: &mut Vec<Segment>, seg: Segment) {
    if seg.mass.is_zero() {
        return;
    }
    match out.last_mut() {
        Some(last) if last.core == seg.core => last.mass += seg.mass,
        _ => out.push(seg),
    }
}

pub fn stretched_f(p: &StretchedElement, i: Residue) -> Option<StretchedElement> {
    p.f(i)
}

/// Replays an `f̃`-word (in application order) from `∅_m`.
pub fn ls_path_along(word: &[Residue], m: Residue) -> Option<StretchedElement> {
    word.iter()
        .try_fold(StretchedElement::highest_weight(m), |acc, &i| acc.f(i))
}

/// `S_h(λ)^{1/h}` for divisible `h`, computed along the default lowering word.
pub fn ls_path(lambda: &Partition, m: Residue) -> Result<StretchedElement> {
    lambda.require_restricted(m.modulus())?;
    let word = default_lowering_word(&ChargedPartition::new(lambda.clone(), m));
    ls_path_along(&word, m).ok_or_else(|| {
        CrystalError::InvariantViolation(format!("stretched path of {lambda} hit zero"))
    })
}

pub fn ceil(lambda: &Partition, m: Residue) -> Result<Partition> {
    Ok(ls_path(lambda, m)?.ceil().clone())
}

pub fn floor(lambda: &Partition, m: Residue) -> Result<Partition> {
    Ok(ls_path(lambda, m)?.floor().clone())
}

/// Negates every residue of a lowering word around the charge: `r ↦ 2m − r`.
pub fn mullineux(lambda: &Partition, m: Residue) -> Result<Partition> {
    lambda.require_restricted(m.modulus())?;
    let word = default_lowering_word(&ChargedPartition::new(lambda.clone(), m));
    let twisted = word
        .iter()
        .try_fold(ChargedPartition::empty(m), |acc, &r| acc.f(m + m - r))
        .ok_or_else(|| {
            CrystalError::InvariantViolation(format!("twisted word of {lambda} hit zero"))
        })?;
    Ok(twisted.shape)
}
