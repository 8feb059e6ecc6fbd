//! Exhaustive cross-checks between the closed criteria and brute-force
//! oracles. Every suite is a pure function of `(suite, e, max_n, seed)`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::abacus::{cores_of, BetaSet};
use crate::crystal::{core_to_coset, crystal_closure, ChargedPartition, CrystalElement, WeylWord};
use crate::error::Result;
use crate::kleshchev::{
    in_demazure_lower, in_demazure_upper, is_kleshchev_bipartition, tau, tau_on_diagram,
};
use crate::partition::{
    restricted_partitions_up_to, restricted_tuples_up_to, Modulus, Multipartition, Partition,
    Residue,
};
use crate::path_model::{ls_path, mullineux};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Main,
    Tau,
    Demazure,
    Mullineux,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Main, Suite::Tau, Suite::Demazure, Suite::Mullineux];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Tau => "tau",
            Suite::Demazure => "demazure",
            Suite::Mullineux => "mullineux",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                format!("unknown suite `{s}` (expected main, tau, demazure or mullineux)")
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub e: u32,
    pub max_n: usize,
    pub seed: u64,
    pub cases: usize,
    pub counterexample: Option<Value>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn run_suite(suite: Suite, e: Modulus, max_n: usize, seed: u64) -> Result<VerifyReport> {
    let (cases, counterexample) = match suite {
        Suite::Main => main_suite(e, max_n)?,
        Suite::Tau => tau_suite(e, max_n)?,
        Suite::Demazure => demazure_suite(e, max_n, seed)?,
        Suite::Mullineux => mullineux_suite(e, max_n)?,
    };
    Ok(VerifyReport {
        suite,
        e: e.get(),
        max_n,
        seed,
        cases,
        counterexample,
    })
}

type Outcome = (usize, Option<Value>);

/// First failing case in enumeration order, independent of scheduling.
fn first_failure<T: Sync>(
    cases: &[T],
    check: impl Fn(&T) -> Result<Option<Value>> + Sync,
) -> Result<Option<Value>> {
    let found = cases
        .par_iter()
        .map(&check)
        .find_first(|r| !matches!(r, Ok(None)));
    found.unwrap_or(Ok(None))
}

fn main_suite(e: Modulus, max_n: usize) -> Result<Outcome> {
    let pairs = restricted_tuples_up_to(max_n, e, 2);
    let mut total = 0;
    for m in e.residues() {
        let charges = vec![e.residue(0), m];
        let graph = crystal_closure(&charges, max_n)?;
        total += pairs.len();
        let bad = first_failure(&pairs, |t| {
            let verdict = is_kleshchev_bipartition(&t[0], &t[1], m)?;
            let x = Multipartition::new(t.clone(), charges.clone())?;
            let reached = graph.contains(&x);
            Ok((verdict.accepted != reached).then(|| {
                json!({"lambda": t[0], "mu": t[1], "m": m, "criterion": verdict, "closure": reached})
            }))
        })?;
        if bad.is_some() {
            return Ok((total, bad));
        }
    }
    Ok((total, None))
}

fn tau_suite(e: Modulus, max_n: usize) -> Result<Outcome> {
    let cases: Vec<(Partition, Residue)> = (0..=max_n)
        .flat_map(|n| cores_of(n, e))
        .flat_map(|core| e.residues().map(move |m| (core.clone(), m)))
        .collect();
    let bad = first_failure(&cases, |(core, m)| {
        let nu = tau(core, *m)?;
        let diagram = tau_on_diagram(core, m.value() as usize, e);
        let shape_ok = m.value() == 0
            || (nu.first_part() == core.first_part() + (e.get() - m.value()) as usize
                && nu.len() == core.len() + m.value() as usize);
        let ok = nu == diagram && shape_ok && crate::abacus::is_e_core(&nu, e);
        Ok((!ok).then(|| json!({"core": core, "m": m, "abacus": nu, "diagram": diagram})))
    })?;
    Ok((cases.len(), bad))
}

fn mullineux_suite(e: Modulus, max_n: usize) -> Result<Outcome> {
    let cases: Vec<(Partition, Residue)> = restricted_partitions_up_to(max_n, e)
        .into_iter()
        .flatten()
        .flat_map(|lam| e.residues().map(move |m| (lam.clone(), m)))
        .collect();
    let bad = first_failure(&cases, |(lam, m)| check_mullineux(lam, *m))?;
    Ok((cases.len(), bad))
}

/// Involution, `ε/φ` symmetry under `i ↦ 2m − i`, and conjugation of the
/// path endpoints.
pub fn check_mullineux(lam: &Partition, m: Residue) -> Result<Option<Value>> {
    let image = mullineux(lam, m)?;
    let fail = |what: &str| {
        Ok(Some(
            json!({"lambda": lam, "m": m, "image": image, "failed": what}),
        ))
    };
    if mullineux(&image, m)? != *lam {
        return fail("involution");
    }
    let x = ChargedPartition::new(lam.clone(), m);
    let y = ChargedPartition::new(image.clone(), m);
    for i in m.modulus().residues() {
        let j = m + m - i;
        if y.eps(j) != x.eps(i) || y.phi(j) != x.phi(i) {
            return fail("string symmetry");
        }
    }
    let (p, q) = (ls_path(lam, m)?, ls_path(&image, m)?);
    if q.ceil() != &p.ceil().conjugate() {
        return fail("ceil conjugation");
    }
    if q.floor() != &p.floor().conjugate() {
        return fail("floor conjugation");
    }
    Ok(None)
}

/// An affine permutation of `ℤ` with `w(x + e) = w(x) + e`, stored by its
/// window `[w(1), …, w(e)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(e: Modulus) -> Self {
        AffinePermutation {
            window: (1..=e.get() as i64).collect(),
        }
    }

    /// `s_i` exchanges the classes `i` and `i + 1` by `±1`.
    pub fn reflection(i: Residue) -> Self {
        let e = i.modulus();
        let window = (1..=e.get() as i64)
            .map(|k| {
                if i.matches(k) {
                    k + 1
                } else if i.succ().matches(k) {
                    k - 1
                } else {
                    k
                }
            })
            .collect();
        AffinePermutation { window }
    }

    fn e(&self) -> i64 {
        self.window.len() as i64
    }

    pub fn apply(&self, x: i64) -> i64 {
        let e = self.e();
        self.window[(x - 1).rem_euclid(e) as usize] + (x - 1).div_euclid(e) * e
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffinePermutation) -> AffinePermutation {
        let window = (1..=self.e()).map(|k| self.apply(other.apply(k))).collect();
        AffinePermutation { window }
    }

    pub fn from_word(word: &WeylWord, e: Modulus) -> Self {
        word.letters()
            .iter()
            .fold(AffinePermutation::identity(e), |acc, &i| {
                acc.compose(&AffinePermutation::reflection(i))
            })
    }

    /// Coxeter length `Σ_{i<j} |⌊(w(j) − w(i)) / e⌋|`.
    pub fn length(&self) -> usize {
        let e = self.e();
        let mut total = 0;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += (self.window[j] - self.window[i])
                    .div_euclid(e)
                    .unsigned_abs() as usize;
            }
        }
        total
    }

    /// The image of `ℤ_{≤m}` as a partition at charge `m`.
    pub fn act_on_vacuum(&self, m: Residue) -> Partition {
        let m0 = m.value() as i64;
        let drift = (1..=self.e())
            .map(|k| (self.apply(k) - k).abs())
            .max()
            .unwrap_or(0);
        let mut beads = BetaSet::lower_set(m0 - drift, m.modulus());
        for x in (m0 - 2 * drift)..=m0 {
            beads.insert(self.apply(x));
        }
        beads.to_partition()
    }
}

/// Cores `u∅_m` over all products `u` of subwords of `y`. For a reduced
/// word these are exactly the elements below `y` in the Bruhat order.
pub fn bruhat_cores_below(y: &WeylWord, m: Residue) -> HashSet<Partition> {
    let e = m.modulus();
    let mut elements: BTreeSet<AffinePermutation> =
        BTreeSet::from([AffinePermutation::identity(e)]);
    for &i in y.letters() {
        let s = AffinePermutation::reflection(i);
        let extended: Vec<AffinePermutation> = elements.iter().map(|u| u.compose(&s)).collect();
        elements.extend(extended);
    }
    elements.iter().map(|u| u.act_on_vacuum(m)).collect()
}

/// `{f̃_{i_1}^{a_1} ⋯ f̃_{i_ℓ}^{a_ℓ} ∅_m}` truncated at size `max_n`.
pub fn demazure_monomial_closure(y: &WeylWord, m: Residue, max_n: usize) -> HashSet<Partition> {
    let mut current: HashSet<ChargedPartition> = HashSet::from([ChargedPartition::empty(m)]);
    for &i in y.letters().iter().rev() {
        let mut next = HashSet::new();
        for x in current {
            let mut cur = Some(x);
            while let Some(c) = cur.filter(|c| c.shape.size() <= max_n) {
                cur = c.f(i);
                next.insert(c);
            }
        }
        current = next;
    }
    current.into_iter().map(|x| x.shape).collect()
}

pub fn is_reduced(y: &WeylWord, e: Modulus) -> bool {
    AffinePermutation::from_word(y, e).length() == y.len()
}

/// All reduced words of length at most `len`.
pub fn reduced_words_up_to(len: usize, e: Modulus) -> Vec<WeylWord> {
    let mut out = vec![WeylWord::identity()];
    let mut frontier = out.clone();
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in e.residues() {
                let mut letters = w.letters().to_vec();
                letters.push(i);
                let w = WeylWord::new(letters);
                if is_reduced(&w, e) {
                    next.push(w);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Bruhat order against both Demazure membership tests on core pairs.
pub fn check_core_pair(
    y_core: &Partition,
    w_core: &Partition,
    m: Residue,
    below_y: &HashSet<Partition>,
) -> Result<Option<Value>> {
    let y = core_to_coset(y_core, m)?;
    let w = core_to_coset(w_core, m)?;
    let bruhat = below_y.contains(w_core);
    let lower = in_demazure_lower(w_core, &y, m)?;
    let upper = in_demazure_upper(y_core, &w, m)?;
    Ok((bruhat != lower || bruhat != upper).then(|| {
        json!({"y": y_core, "w": w_core, "m": m, "bruhat": bruhat, "lower": lower, "upper": upper})
    }))
}

pub fn check_monomial_closure(
    y: &WeylWord,
    m: Residue,
    levels: &[Vec<Partition>],
) -> Result<Option<Value>> {
    let max_n = levels.len() - 1;
    let closure = demazure_monomial_closure(y, m, max_n);
    for lam in levels.iter().flatten() {
        let criterion = in_demazure_lower(lam, y, m)?;
        if criterion != closure.contains(lam) {
            return Ok(Some(
                json!({"lambda": lam, "y": y, "m": m, "criterion": criterion}),
            ));
        }
    }
    Ok(None)
}

fn demazure_suite(e: Modulus, max_n: usize, seed: u64) -> Result<Outcome> {
    let mut cases = 0;
    for m in e.residues() {
        let cores: Vec<Partition> = (0..=max_n).flat_map(|n| cores_of(n, e)).collect();
        let bad = first_failure(&cores, |y_core| {
            let y = core_to_coset(y_core, m)?;
            if !is_reduced(&y, e) {
                return Ok(Some(
                    json!({"core": y_core, "m": m, "word": y, "failed": "reduced"}),
                ));
            }
            let below = bruhat_cores_below(&y, m);
            for w_core in &cores {
                if let Some(v) = check_core_pair(y_core, w_core, m, &below)? {
                    return Ok(Some(v));
                }
            }
            Ok(None)
        })?;
        cases += cores.len() * cores.len();
        if bad.is_some() {
            return Ok((cases, bad));
        }

        let levels = restricted_partitions_up_to(max_n.min(8), e);
        let mut words = reduced_words_up_to(4, e);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ u64::from(m.value()));
        while words.len() < 8 + reduced_words_up_to(4, e).len() {
            let len = rng.gen_range(5..=6);
            let w = WeylWord::new(
                (0..len)
                    .map(|_| e.residue(rng.gen_range(0..e.get()) as i64))
                    .collect(),
            );
            if is_reduced(&w, e) {
                words.push(w);
            }
        }
        cases += words.len();
        let bad = first_failure(&words, |y| check_monomial_closure(y, m, &levels))?;
        if bad.is_some() {
            return Ok((cases, bad));
        }
    }
    Ok((cases, None))
}
