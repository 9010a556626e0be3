//! Instance generators: permutation-group orbitals, conjugacy-class and
//! regular schemes of finite groups, coherent closure of colored digraphs,
//! and canned families.

mod groups;
mod wl;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cc::{canonicalize_colors, check_permutation, BuildOptions, CoherentConfiguration, ColorMatrix};
use crate::error::{Error, Result};

pub use groups::{GroupTable, MAX_GROUP_ORDER};
pub use wl::{wl_closure, wl_closure_of_graph};

/// Cap on `n²` for pair-orbit flood fill.
pub const MAX_ORBIT_PAIRS: usize = 1 << 24;

/// Generators of a permutation group on `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroupGens {
    degree: usize,
    generators: Vec<Vec<usize>>,
}

impl PermutationGroupGens {
    pub fn new(degree: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree);
        }
        for (i, g) in generators.iter().enumerate() {
            check_permutation(g, degree)
                .map_err(|_| Error::InvalidGenerator(format!("generator {i} is not a permutation of 0..{degree}")))?;
        }
        Ok(PermutationGroupGens { degree, generators })
    }

    /// `Sym(n)` in its natural action.
    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(
                (0..n)
                    .map(|x| match x {
                        0 => 1,
                        1 => 0,
                        _ => x,
                    })
                    .collect(),
            );
            gens.push((0..n).map(|x| (x + 1) % n).collect());
        }
        Self::new(n, gens)
    }

    /// `C_n` acting regularly on itself.
    pub fn cyclic_regular(n: usize) -> Result<Self> {
        Self::new(n, vec![(0..n).map(|x| (x + 1) % n).collect()])
    }

    /// A group acting regularly on its elements by left multiplication.
    pub fn regular(group: &GroupTable) -> Result<Self> {
        let g = group.order();
        let gens = (0..g).map(|a| (0..g).map(|x| group.mul(a, x)).collect()).collect();
        Self::new(g, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }
}

fn finish(degree: usize, cells: Vec<u32>) -> Result<CoherentConfiguration> {
    let cells = canonicalize_colors(degree, &cells);
    CoherentConfiguration::from_matrix(ColorMatrix::new(degree, cells)?)
}

/// The configuration whose basis relations are the orbits of the group on
/// ordered pairs.
pub fn orbital_configuration(gens: &PermutationGroupGens) -> Result<CoherentConfiguration> {
    let n = gens.degree;
    if n * n > MAX_ORBIT_PAIRS {
        return Err(Error::DegreeOverflow { degree: n, max: 1 << 12 });
    }
    let max = BuildOptions::default().max_degree;
    if n > max {
        return Err(Error::DegreeOverflow { degree: n, max });
    }
    const UNSEEN: u32 = u32::MAX;
    let mut color = vec![UNSEEN; n * n];
    let mut next = 0u32;
    let mut stack = Vec::new();
    for start in 0..n * n {
        if color[start] != UNSEEN {
            continue;
        }
        color[start] = next;
        stack.push(start);
        while let Some(p) = stack.pop() {
            let (a, b) = (p / n, p % n);
            for g in &gens.generators {
                let q = g[a] * n + g[b];
                if color[q] == UNSEEN {
                    color[q] = next;
                    stack.push(q);
                }
            }
        }
        next += 1;
    }
    finish(n, color)
}

/// The scheme on the group elements with `(a, b)` colored by the conjugacy
/// class of `b · a⁻¹`.
pub fn conjugacy_class_scheme(group: &GroupTable) -> Result<CoherentConfiguration> {
    let g = group.order();
    let class = group.class_of();
    let mut cells = Vec::with_capacity(g * g);
    for a in 0..g {
        let inv = group.inverse(a);
        for b in 0..g {
            cells.push(class[group.mul(b, inv)] as u32);
        }
    }
    finish(g, cells)
}

/// The thin scheme of the regular action: `(a, b)` colored by `a⁻¹ · b`.
pub fn regular_scheme(group: &GroupTable) -> Result<CoherentConfiguration> {
    let g = group.order();
    let mut cells = Vec::with_capacity(g * g);
    for a in 0..g {
        let inv = group.inverse(a);
        for b in 0..g {
            cells.push(group.mul(inv, b) as u32);
        }
    }
    finish(g, cells)
}

/// Rank 2 for `n ≥ 2`, rank 1 for `n = 1`.
pub fn trivial_scheme(n: usize) -> Result<CoherentConfiguration> {
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    let cells = (0..n * n).map(|i| u32::from(i / n != i % n)).collect();
    CoherentConfiguration::from_matrix(ColorMatrix::new(n, cells)?)
}

/// Every pair its own basis relation (rank `n²`).
pub fn discrete_configuration(n: usize) -> Result<CoherentConfiguration> {
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    finish(n, (0..(n * n) as u32).collect())
}

/// Relabels points by a permutation drawn from a seeded generator. Returns
/// the relabeled configuration and the permutation used.
pub fn random_relabel(cc: &CoherentConfiguration, seed: u64) -> Result<(CoherentConfiguration, Vec<usize>)> {
    let mut perm: Vec<usize> = (0..cc.degree()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let relabeled = cc.relabel(&perm)?;
    Ok((relabeled, perm))
}
