use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{BuildOptions, CheckMode, CoherentConfiguration, Color, ColorMatrix, NEXT_ID};
use crate::error::{Error, Result};

const UNSET: u32 = u32::MAX;

pub(super) fn validate(matrix: ColorMatrix, options: BuildOptions) -> Result<CoherentConfiguration> {
    let n = matrix.degree();
    if n > options.max_degree {
        return Err(Error::DegreeOverflow { degree: n, max: options.max_degree });
    }
    let cells = matrix.cells();
    let rank = cells.iter().copied().max().map_or(0, |m| m as usize + 1);

    let mut witness = vec![(usize::MAX, usize::MAX); rank];
    for (i, &c) in cells.iter().enumerate() {
        let w = &mut witness[c as usize];
        if w.0 == usize::MAX {
            *w = (i / n, i % n);
        }
    }
    if let Some(missing) = witness.iter().position(|w| w.0 == usize::MAX) {
        return Err(Error::NonContiguousColors { missing, rank });
    }

    // C1
    let mut reflexive = vec![false; rank];
    for a in 0..n {
        reflexive[matrix.cell(a, a) as usize] = true;
    }
    for a in 0..n {
        for b in 0..n {
            let c = matrix.cell(a, b);
            if a != b && reflexive[c as usize] {
                return Err(Error::InvalidDiagonal(format!(
                    "reflexive color {c} occurs off the diagonal at ({a}, {b})"
                )));
            }
        }
    }

    // C2
    let mut transpose = vec![UNSET; rank];
    for a in 0..n {
        for b in 0..n {
            let c = matrix.cell(a, b) as usize;
            let d = matrix.cell(b, a);
            if transpose[c] == UNSET {
                transpose[c] = d;
            } else if transpose[c] != d {
                return Err(Error::InvalidTranspose(format!(
                    "color {c} has transposed cells of colors {} and {d}",
                    transpose[c]
                )));
            }
        }
    }
    let transpose: Vec<Color> = transpose.into_iter().map(Color).collect();

    // Fibers, numbered by minimal point.
    let mut fiber_of_color: HashMap<u32, usize> = HashMap::new();
    let mut fibers: Vec<Vec<usize>> = Vec::new();
    let mut fiber_of_point = vec![0; n];
    for a in 0..n {
        let d = matrix.cell(a, a);
        let f = *fiber_of_color.entry(d).or_insert_with(|| {
            fibers.push(Vec::new());
            fibers.len() - 1
        });
        fibers[f].push(a);
        fiber_of_point[a] = f;
    }

    // Supports and valencies; both are consequences of C3.
    let mut support = vec![(usize::MAX, usize::MAX); rank];
    let mut valency = vec![0usize; rank];
    let mut rows_with = vec![0usize; rank];
    let mut count = vec![0usize; rank];
    let mut touched = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let c = matrix.cell(a, b) as usize;
            let sup = (fiber_of_point[a], fiber_of_point[b]);
            if support[c].0 == usize::MAX {
                support[c] = sup;
            } else if support[c] != sup {
                return Err(Error::InvalidIntersectionNumbers(format!("color {c} meets more than one pair of fibers")));
            }
            if count[c] == 0 {
                touched.push(c);
            }
            count[c] += 1;
        }
        for &c in &touched {
            if rows_with[c] == 0 {
                valency[c] = count[c];
            } else if valency[c] != count[c] {
                return Err(Error::InvalidIntersectionNumbers(format!(
                    "color {c} has valency {} at some point but {} at point {a}",
                    valency[c], count[c]
                )));
            }
            rows_with[c] += 1;
            count[c] = 0;
        }
        touched.clear();
    }
    for c in 0..rank {
        if rows_with[c] != fibers[support[c].0].len() {
            return Err(Error::InvalidIntersectionNumbers(format!(
                "color {c} is missing from some rows of its left fiber"
            )));
        }
    }

    check_c3(&matrix, &transpose, &witness, options.check)?;

    Ok(CoherentConfiguration {
        id: NEXT_ID.fetch_add(1, std::sync::atomic::Ordering::Relaxed),
        rank,
        transpose,
        reflexive,
        fiber_of_point,
        fibers,
        valency,
        support,
        witness,
        options,
        structure: OnceLock::new(),
        closures: (0..rank).map(|_| OnceLock::new()).collect(),
        parabolic_cache: Mutex::new(HashMap::new()),
        matrix,
    })
}

/// Sorted multiset of `(cell(a, g), cell(g, b))` over all `g`.
fn pair_signature(matrix: &ColorMatrix, transpose: &[Color], a: usize, b: usize, out: &mut Vec<u64>) {
    let n = matrix.degree();
    let row_a = &matrix.cells()[a * n..(a + 1) * n];
    let row_b = &matrix.cells()[b * n..(b + 1) * n];
    out.clear();
    // cell(g, b) is the transpose of cell(b, g).
    out.extend(row_a.iter().zip(row_b).map(|(&x, &y)| (x as u64) << 32 | transpose[y as usize].0 as u64));
    out.sort_unstable();
}

fn check_c3(matrix: &ColorMatrix, transpose: &[Color], witness: &[(usize, usize)], mode: CheckMode) -> Result<()> {
    let n = matrix.degree();
    let rank = witness.len();
    let mut reference: Vec<Vec<u64>> = vec![Vec::new(); rank];
    let mut scratch = Vec::with_capacity(n);
    for (c, &(a, b)) in witness.iter().enumerate() {
        pair_signature(matrix, transpose, a, b, &mut scratch);
        reference[c] = scratch.clone();
    }
    let mismatch = |c: usize, a: usize, b: usize| {
        let (wa, wb) = witness[c];
        Error::InvalidIntersectionNumbers(format!(
            "pairs ({wa}, {wb}) and ({a}, {b}) of color {c} have different intersection numbers"
        ))
    };
    match mode {
        CheckMode::Full => {
            for a in 0..n {
                for b in 0..n {
                    let c = matrix.cell(a, b) as usize;
                    if witness[c] == (a, b) {
                        continue;
                    }
                    pair_signature(matrix, transpose, a, b, &mut scratch);
                    if scratch != reference[c] {
                        return Err(mismatch(c, a, b));
                    }
                }
            }
        }
        CheckMode::Fast => {
            let mut last = vec![(0, 0); rank];
            for (i, &c) in matrix.cells().iter().enumerate() {
                last[c as usize] = (i / n, i % n);
            }
            for (c, &(a, b)) in last.iter().enumerate() {
                pair_signature(matrix, transpose, a, b, &mut scratch);
                if scratch != reference[c] {
                    return Err(mismatch(c, a, b));
                }
            }
        }
    }
    Ok(())
}

/// Renumbers arbitrary color labels into the canonical contiguous order:
/// reflexive colors first, then by (left fiber, right fiber, valency, first
/// occurrence). Fibers are ordered by their minimal point.
pub fn canonicalize_colors(degree: usize, cells: &[u32]) -> Vec<u32> {
    let n = degree;
    let mut dense: HashMap<u32, usize> = HashMap::new();
    let mut first: Vec<usize> = Vec::new();
    for (i, &c) in cells.iter().enumerate() {
        dense.entry(c).or_insert_with(|| {
            first.push(i);
            first.len() - 1
        });
    }
    let compact: Vec<usize> = cells.iter().map(|c| dense[c]).collect();
    let k = first.len();

    let mut fiber_id: HashMap<usize, usize> = HashMap::new();
    let mut fiber_of_point = vec![0; n];
    let mut diag = vec![false; k];
    for a in 0..n {
        let d = compact[a * n + a];
        diag[d] = true;
        let next = fiber_id.len();
        fiber_of_point[a] = *fiber_id.entry(d).or_insert(next);
    }

    let mut keys: Vec<(bool, usize, usize, usize, usize, usize)> = (0..k)
        .map(|c| {
            let i = first[c];
            let (a, b) = (i / n, i % n);
            let val = compact[a * n..(a + 1) * n].iter().filter(|&&x| x == c).count();
            (!diag[c], fiber_of_point[a], fiber_of_point[b], val, i, c)
        })
        .collect();
    keys.sort_unstable();
    let mut renumber = vec![0u32; k];
    for (new, key) in keys.iter().enumerate() {
        renumber[key.5] = new as u32;
    }
    compact.iter().map(|&c| renumber[c]).collect()
}
