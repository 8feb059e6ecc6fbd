//! Non-recursive Kleshchev criteria in terms of roofs, bases and the
//! translation `τ_m`.
//!
//! The public API speaks of crystal elements `λ ⊗ μ` with `λ` at charge 0
//! and `μ` at charge `m`. In Hecke-algebra language this is the bipartition
//! label `(μ, λ)`: components are listed in the opposite order there.

use serde::Serialize;

use crate::abacus::{self, is_e_core, to_beta};
use crate::crystal::{coset_to_core, WeylWord};
use crate::error::{CrystalError, Result};
use crate::partition::{Modulus, Multipartition, Partition, Residue};
use crate::path_model::mullineux;

/// `τ_m` on an e-core at charge 0: add `e` to the `m` largest runner maxima
/// and read the result at charge `m`.
pub fn tau(lambda: &Partition, m: Residue) -> Result<Partition> {
    let e = m.modulus();
    if !is_e_core(lambda, e) {
        return Err(CrystalError::NotCore {
            partition: lambda.clone(),
            e: e.get(),
        });
    }
    let nu = tau_on_abacus(lambda, m);
    debug_assert_eq!(
        nu,
        tau_on_diagram(lambda, m.value() as usize, e),
        "τ_{m} of {lambda}"
    );
    Ok(nu)
}

fn tau_on_abacus(lambda: &Partition, m: Residue) -> Partition {
    let e = m.modulus();
    let mut beta = to_beta(lambda, e.residue(0));
    let mut maxima = beta.runner_maxima().as_slice().to_vec();
    maxima.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert!(
        maxima.windows(2).all(|w| w[0] > w[1]),
        "maxima lie on distinct runners"
    );
    for &x in &maxima[..m.value() as usize] {
        beta.insert(x + e.get() as i64);
    }
    beta.to_partition()
}

/// `ν_i = λ_i + e − m` for `i < m`, `ν_i = min(λ_i + e − m, λ_{i−m})` after.
pub(crate) fn tau_on_diagram(lambda: &Partition, m: usize, e: Modulus) -> Partition {
    if m == 0 {
        return lambda.clone();
    }
    let shift = e.get() as usize - m;
    let parts = (0..lambda.len() + m)
        .map(|i| {
            let own = lambda.part(i) + shift;
            if i < m {
                own
            } else {
                own.min(lambda.part(i - m))
            }
        })
        .collect();
    Partition::new(parts).expect("translation of a partition is a partition")
}

/// One containment `lower ⊇ upper` between consecutive components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryCheck {
    /// Components `k` and `k + 1`, zero-based.
    pub boundary: usize,
    /// `base(λ^(k))`, after `τ_m` when `translated`.
    pub lower: Partition,
    /// `roof(λ^(k+1))`.
    pub upper: Partition,
    pub translated: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleshchevVerdict {
    pub accepted: bool,
    pub checks: Vec<BoundaryCheck>,
}

impl KleshchevVerdict {
    pub fn first_failure(&self) -> Option<&BoundaryCheck> {
        self.checks.iter().find(|c| !c.holds)
    }
}

/// Whether `λ ⊗ μ ∈ B(Λ_0) ⊗ B(Λ_m)` lies in the component of `∅ ⊗ ∅`.
pub fn is_kleshchev_bipartition(
    lambda: &Partition,
    mu: &Partition,
    m: Residue,
) -> Result<KleshchevVerdict> {
    let x = Multipartition::new(
        vec![lambda.clone(), mu.clone()],
        vec![m.modulus().residue(0), m],
    )?;
    is_kleshchev_multi(&x)
}

/// Splits charges `(0^d, m^{r−d})` into `(d, m)`.
fn charge_pattern(charges: &[Residue]) -> Result<(usize, Residue)> {
    let d = charges.iter().take_while(|c| c.value() == 0).count();
    let m = charges.get(d).copied().unwrap_or(charges[0]);
    if charges[d..].iter().any(|&c| c != m) {
        return Err(CrystalError::UnsupportedChargePattern(
            charges.iter().map(|c| c.value()).collect(),
        ));
    }
    Ok((d, m))
}

/// The level-`r` criterion for charges `(0^d, m^{r−d})`.
pub fn is_kleshchev_multi(x: &Multipartition) -> Result<KleshchevVerdict> {
    let (d, m) = charge_pattern(x.charges())?;
    let comps = x.components();
    let charges = x.charges();
    let mut checks = Vec::with_capacity(comps.len().saturating_sub(1));
    for k in 0..comps.len().saturating_sub(1) {
        let base = abacus::base(&comps[k], charges[k])?;
        let translated = k + 1 == d && m.value() != 0;
        let lower = if translated { tau(&base, m)? } else { base };
        let upper = abacus::roof(&comps[k + 1], charges[k + 1])?;
        let holds = lower.contains(&upper);
        checks.push(BoundaryCheck {
            boundary: k,
            lower,
            upper,
            translated,
            holds,
        });
    }
    Ok(KleshchevVerdict {
        accepted: checks.iter().all(|c| c.holds),
        checks,
    })
}

/// Membership in the Demazure crystal `B_y(Λ_m)`: `roof(λ) ⊆ y∅_m`.
///
/// Any word for the coset may be passed: letters fixing `∅_m` do not change
/// the coset, so only `y∅_m` matters.
pub fn in_demazure_lower(lambda: &Partition, y: &WeylWord, m: Residue) -> Result<bool> {
    Ok(coset_to_core(y, m).contains(&abacus::roof(lambda, m)?))
}

/// Membership in the opposite Demazure crystal `B^w(Λ_m)`: `base(λ) ⊇ w∅_m`.
pub fn in_demazure_upper(lambda: &Partition, w: &WeylWord, m: Residue) -> Result<bool> {
    Ok(abacus::base(lambda, m)?.contains(&coset_to_core(w, m)))
}

fn first_part(x: &Partition) -> i64 {
    x.first_part() as i64
}

fn length(x: &Partition) -> i64 {
    x.len() as i64
}

/// The closed criterion at `e = 2`: `a(λ^(i)) − ℓ(λ^(i+1)) ≥ δ_{m_i m_{i+1}} − 1`.
pub fn mathas_e2_check(x: &Multipartition) -> Result<bool> {
    let e = x.modulus();
    if e.get() != 2 {
        return Err(CrystalError::WrongModulus {
            expected: 2,
            actual: e.get(),
        });
    }
    let comps = x.components();
    let charges = x.charges();
    Ok((0..comps.len().saturating_sub(1)).all(|i| {
        let delta = i64::from(charges[i] == charges[i + 1]);
        first_part(&comps[i]) - length(&comps[i + 1]) >= delta - 1
    }))
}

/// The closed criterion at `e = 3`, via the Mullineux map.
pub fn fayers_e3_check(lambda: &Partition, mu: &Partition, m: Residue) -> Result<bool> {
    let e = m.modulus();
    if e.get() != 3 {
        return Err(CrystalError::WrongModulus {
            expected: 3,
            actual: e.get(),
        });
    }
    let (o1, o2) = match m.value() {
        0 => (0, 0),
        1 => (-2, -1),
        _ => (-1, -2),
    };
    let m_mu = mullineux(mu, m)?;
    let m_lambda = mullineux(lambda, e.residue(0))?;
    Ok(first_part(lambda) >= length(&m_mu) + o1 && first_part(&m_lambda) >= length(mu) + o2)
}
