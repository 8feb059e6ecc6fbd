use std::fmt;

use clap::ValueEnum;
use crystal_core::{CrystalError, Modulus, Partition, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

/// Validated run parameters shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Config {
    pub e: Modulus,
    pub charges: Vec<Residue>,
    pub n: usize,
    pub format: Format,
    pub seed: u64,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<CrystalError> for UsageError {
    fn from(err: CrystalError) -> Self {
        UsageError(err.to_string())
    }
}

impl Config {
    pub fn new(
        e: u32,
        charges: &[u32],
        n: usize,
        format: Format,
        seed: u64,
    ) -> Result<Self, UsageError> {
        let e = Modulus::new(e)?;
        if let Some(bad) = charges.iter().find(|&&c| c >= e.get()) {
            return Err(UsageError(format!("charge {bad} is not in [0, {e})")));
        }
        let charges = charges.iter().map(|&c| e.residue(i64::from(c))).collect();
        Ok(Config {
            e,
            charges,
            n,
            format,
            seed,
        })
    }

    /// The single charge of a level-one command.
    pub fn m(&self) -> Residue {
        self.charges[0]
    }
}

pub fn parse_partition(s: &str) -> Result<Partition, String> {
    serde_json::from_str(s)
        .map_err(|e| format!("expected a JSON array of parts such as [2,2,1]: {e}"))
}

/// A JSON array of integers given as one argument, e.g. `[0,1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct U32List(pub Vec<u32>);

/// A JSON array of partitions given as one argument, e.g. `[[2],[1,1]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionList(pub Vec<Partition>);

pub fn parse_u32_list(s: &str) -> Result<U32List, String> {
    serde_json::from_str(s)
        .map(U32List)
        .map_err(|e| format!("expected a JSON array of integers such as [0,1]: {e}"))
}

pub fn parse_partition_list(s: &str) -> Result<PartitionList, String> {
    serde_json::from_str(s)
        .map(PartitionList)
        .map_err(|e| format!("expected a JSON array of partitions such as [[2],[1,1]]: {e}"))
}

/// Letters of a Weyl word; each must be a residue.
pub fn check_word(word: &[u32], e: Modulus) -> Result<(), UsageError> {
    match word.iter().find(|&&i| i >= e.get()) {
        Some(bad) => Err(UsageError(format!("letter {bad} is not in [0, {e})"))),
        None => Ok(()),
    }
}
