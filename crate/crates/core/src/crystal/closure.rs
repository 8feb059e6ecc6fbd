use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::CrystalElement;
use crate::error::Result;
use crate::partition::{Multipartition, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CrystalEdge {
    pub from: usize,
    pub to: usize,
    pub residue: u32,
}

/// The connected component of `∅ ⊗ … ⊗ ∅` under the `f̃_i`, truncated by size.
///
/// Nodes are numbered level by level; within a level they are sorted, so the
/// numbering does not depend on how the frontier was expanded.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    nodes: Vec<Multipartition>,
    levels: Vec<std::ops::Range<usize>>,
    edges: Vec<CrystalEdge>,
    index: HashMap<Multipartition, usize>,
}

impl CrystalGraph {
    pub fn nodes(&self) -> &[Multipartition] {
        &self.nodes
    }

    pub fn edges(&self) -> &[CrystalEdge] {
        &self.edges
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    /// Elements of total size `n`.
    pub fn level(&self, n: usize) -> &[Multipartition] {
        self.levels.get(n).map_or(&[], |r| &self.nodes[r.clone()])
    }

    pub fn contains(&self, x: &Multipartition) -> bool {
        self.index.contains_key(x)
    }

    pub fn index_of(&self, x: &Multipartition) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Graphviz rendering; node labels are the JSON encodings.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, node) in self.nodes.iter().enumerate() {
            let label = node.to_json().replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  n{k} [label=\"{label}\"];");
        }
        for edge in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                edge.from, edge.to, edge.residue
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn crystal_closure(charges: &[Residue], depth: usize) -> Result<CrystalGraph> {
    let root = Multipartition::empty(charges.to_vec())?;
    let e = root.modulus();
    let mut nodes = vec![root.clone()];
    let mut levels = Vec::new();
    levels.push(0..1);
    let mut index = HashMap::from([(root, 0)]);
    let mut edges = Vec::new();

    for _ in 0..depth {
        let frontier = levels.last().unwrap().clone();
        let raw: Vec<(usize, u32, Multipartition)> = frontier
            .into_par_iter()
            .flat_map_iter(|k| {
                let x = &nodes[k];
                e.residues()
                    .filter_map(move |i| x.f(i).map(|y| (k, i.value(), y)))
            })
            .collect();
        let mut next: Vec<Multipartition> = raw.iter().map(|(_, _, y)| y.clone()).collect();
        next.par_sort_unstable();
        next.dedup();
        let start = nodes.len();
        for (offset, y) in next.iter().enumerate() {
            index.insert(y.clone(), start + offset);
        }
        nodes.extend(next);
        levels.push(start..nodes.len());
        edges.extend(raw.into_iter().map(|(from, residue, y)| CrystalEdge {
            from,
            to: index[&y],
            residue,
        }));
        if start == nodes.len() {
            break;
        }
    }
    edges.sort_unstable();
    Ok(CrystalGraph {
        nodes,
        levels,
        edges,
        index,
    })
}
