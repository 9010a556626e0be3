use std::collections::HashMap;

use super::{canonicalize_colors, BuildOptions, CoherentConfiguration, ColorMatrix};
use crate::error::{Error, Result};
use crate::relation::Parabolic;

impl CoherentConfiguration {
    /// Tensor product with default build options.
    pub fn tensor(factors: &[&CoherentConfiguration]) -> Result<Self> {
        Self::tensor_with(factors, BuildOptions::default())
    }

    /// Tensor product. Points are ordered lexicographically in the factor
    /// points (first factor most significant); colors are the tuples of
    /// factor colors, renumbered canonically.
    pub fn tensor_with(factors: &[&CoherentConfiguration], options: BuildOptions) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDegree);
        }
        let mut degree = 1usize;
        for f in factors {
            degree = degree
                .checked_mul(f.degree())
                .filter(|&d| d <= options.max_degree)
                .ok_or(Error::DegreeOverflow { degree: degree.saturating_mul(f.degree()), max: options.max_degree })?;
        }
        // coords[p] lists the factor points of product point p.
        let mut coords: Vec<Vec<usize>> = vec![Vec::with_capacity(factors.len()); degree];
        let mut stride = degree;
        for f in factors {
            stride /= f.degree();
            for (p, c) in coords.iter_mut().enumerate() {
                c.push(p / stride % f.degree());
            }
        }
        let mut cells = Vec::with_capacity(degree * degree);
        for a in &coords {
            for b in &coords {
                let mut color = 0u64;
                for (i, f) in factors.iter().enumerate() {
                    color = color * f.rank() as u64 + f.cell(a[i], b[i]).0 as u64;
                }
                cells.push(color as u32);
            }
        }
        let cells = canonicalize_colors(degree, &cells);
        Self::from_matrix_with(ColorMatrix::new(degree, cells)?, options)
    }

    /// Quotient modulo a parabolic `e`. Returns the configuration on the
    /// classes of `e` (ordered by minimal member) and the projection
    /// sending each point to its class.
    pub fn quotient(&self, e: &Parabolic) -> Result<(Self, Vec<usize>)> {
        self.check_home(e.relation())?;
        let n = self.degree();
        let colors = e.colors();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = 0;
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            for b in 0..n {
                if colors.contains(self.cell(a, b)) {
                    class_of[b] = classes;
                }
            }
            classes += 1;
        }
        let k = classes;
        let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); k * k];
        for a in 0..n {
            for b in 0..n {
                blocks[class_of[a] * k + class_of[b]].push(self.cell(a, b).0);
            }
        }
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut cells = Vec::with_capacity(k * k);
        for mut block in blocks {
            block.sort_unstable();
            block.dedup();
            let next = ids.len() as u32;
            cells.push(*ids.entry(block).or_insert(next));
        }
        let cells = canonicalize_colors(k, &cells);
        let q = Self::from_matrix_with(ColorMatrix::new(k, cells)?, self.options)?;
        Ok((q, class_of))
    }

    /// Conjugates the matrix by a point permutation:
    /// `cell'(perm[a], perm[b]) = cell(a, b)`. Color numbering is kept.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.degree();
        check_permutation(perm, n)?;
        let mut cells = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                cells[perm[a] * n + perm[b]] = self.cell(a, b).0;
            }
        }
        Self::from_matrix_with(ColorMatrix::new(n, cells)?, self.options)
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::NotABijection { degree: n });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::NotABijection { degree: n });
        }
    }
    Ok(())
}
