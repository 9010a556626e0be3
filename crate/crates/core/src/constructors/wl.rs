use std::collections::HashMap;

use crate::cc::{canonicalize_colors, BuildOptions, CoherentConfiguration, ColorMatrix};
use crate::error::{Error, Result};

/// Coherent closure of an arbitrary pair coloring by two-dimensional
/// Weisfeiler-Leman refinement.
///
/// Pairs start colored by (diagonal?, label of `(a, b)`, label of `(b, a)`)
/// and are refined by the exact multiset `{(c(a, g), c(g, b)) : g}` until
/// the number of colors stops growing.
pub fn wl_closure(n: usize, labels: &[u32]) -> Result<CoherentConfiguration> {
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    if labels.len() != n * n {
        return Err(Error::NotSquare { row: 0, len: labels.len(), degree: n * n });
    }
    let max = BuildOptions::default().max_degree;
    if n > max {
        return Err(Error::DegreeOverflow { degree: n, max });
    }

    let mut init: HashMap<(bool, u32, u32), u32> = HashMap::new();
    let mut color: Vec<u32> = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let key = (a == b, labels[a * n + b], labels[b * n + a]);
            let next = init.len() as u32;
            color.push(*init.entry(key).or_insert(next));
        }
    }
    let mut classes = init.len();

    let mut signature: Vec<u64> = Vec::with_capacity(n + 1);
    loop {
        let mut interned: HashMap<Vec<u64>, u32> = HashMap::new();
        let mut refined = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                signature.clear();
                signature.extend((0..n).map(|g| (color[a * n + g] as u64) << 32 | color[g * n + b] as u64));
                signature.sort_unstable();
                signature.push(color[a * n + b] as u64);
                let next = interned.len() as u32;
                refined.push(match interned.get(&signature) {
                    Some(&id) => id,
                    None => {
                        interned.insert(signature.clone(), next);
                        next
                    }
                });
            }
        }
        let count = interned.len();
        color = refined;
        if count == classes {
            break;
        }
        classes = count;
    }
    let cells = canonicalize_colors(n, &color);
    CoherentConfiguration::from_matrix(ColorMatrix::new(n, cells)?)
}

/// Coherent closure of a graph given by its edge list.
pub fn wl_closure_of_graph(n: usize, edges: &[(usize, usize)], directed: bool) -> Result<CoherentConfiguration> {
    if n == 0 {
        return Err(Error::InvalidDegree);
    }
    let mut labels = vec![0u32; n * n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::Parse { line: 0, message: format!("edge ({u}, {v}) out of range") });
        }
        labels[u * n + v] = 1;
        if !directed {
            labels[v * n + u] = 1;
        }
    }
    wl_closure(n, &labels)
}
