//! The multigraph of a monomial: edges from two-index variables, loops from
//! `u_i`.

use std::collections::BTreeMap;

use super::poly::{Monomial, Var};
use crate::combinatorics::{DoublePartition, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: BTreeMap<(usize, usize), u32>,
    loops: BTreeMap<usize, u32>,
}

/// Cyclomatic number and loop count of one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClBlock {
    pub vertices: Vec<usize>,
    pub cyclomatic: i64,
    pub loops: u32,
}

pub fn monomial_multigraph(q: &Monomial, n: usize) -> Multigraph {
    let mut g = Multigraph {
        n,
        edges: BTreeMap::new(),
        loops: BTreeMap::new(),
    };
    for &(v, e) in q.factors() {
        match v {
            Var::U(i) => *g.loops.entry(i as usize).or_insert(0) += e,
            _ => {
                let (i, j) = v.pair().expect("two indices");
                *g.edges.entry((i, j)).or_insert(0) += e;
            }
        }
    }
    g
}

impl Multigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeMap<(usize, usize), u32> {
        &self.edges
    }

    pub fn loops(&self) -> &BTreeMap<usize, u32> {
        &self.loops
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for &(i, j) in self.edges.keys() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 1..=self.n {
            let r = find(&mut parent, v);
            blocks.entry(r).or_default().push(v);
        }
        blocks.into_values().collect()
    }

    pub fn cl_data(&self) -> Vec<ClBlock> {
        self.components()
            .into_iter()
            .map(|block| {
                let inside = |v: &usize| block.binary_search(v).is_ok();
                let edges: u32 = self
                    .edges
                    .iter()
                    .filter(|((i, _), _)| inside(i))
                    .map(|(_, m)| m)
                    .sum();
                let loops: u32 = self.loops.iter().filter(|(v, _)| inside(v)).map(|(_, m)| m).sum();
                ClBlock {
                    cyclomatic: (edges + loops) as i64 - block.len() as i64 + 1,
                    loops,
                    vertices: block,
                }
            })
            .collect()
    }

    /// Component sizes split into loopless (`plus`) and looped (`minus`).
    pub fn double_partition(&self) -> DoublePartition {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for b in self.cl_data() {
            if b.loops == 0 {
                plus.push(b.vertices.len());
            } else {
                minus.push(b.vertices.len());
            }
        }
        DoublePartition::new(
            Partition::new(plus).expect("positive sizes"),
            Partition::new(minus).expect("positive sizes"),
        )
    }

    /// Every component is a tree, or a unicyclic graph whose cycle is a
    /// single loop.
    pub fn is_lightly_looped_forest(&self) -> bool {
        self.cl_data()
            .iter()
            .all(|b| b.cyclomatic == 0 || (b.cyclomatic == 1 && b.loops == 1))
    }

    /// The type A flat: the set partition into components.
    pub fn flat_a(&self) -> Vec<Vec<usize>> {
        self.components()
    }

    /// Orbit of the type A flat: the partition of component sizes.
    pub fn flat_orbit_a(&self) -> Partition {
        Partition::new(self.components().iter().map(Vec::len).collect()).expect("positive sizes")
    }

    /// Orbit of the type B flat: looped components join the zero block, so
    /// the orbit is the loopless part of the double partition.
    pub fn flat_orbit_b(&self) -> Partition {
        self.double_partition().plus
    }
}
