use std::collections::HashMap;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cartesian::{product_of, AtomicCartesianDecomposition, Validity};
use super::irredundant::irredundant_colors;
use crate::bitset::ColorSet;
use crate::cc::CoherentConfiguration;
use crate::error::{Error, Result};
use crate::relation::Parabolic;

/// Which violating pair the merge loop of [`algorithm_a`] picks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MergeOrder {
    /// The first violating pair with members sorted by size, then colors.
    #[default]
    Canonical,
    /// A violating pair drawn by a generator seeded with the given value.
    Random(u64),
}

/// `P*`: closures of the irredundant colors, merged until they pairwise
/// strongly commute and are `⊥`, with the discrete parabolic removed.
pub fn algorithm_a(cc: &CoherentConfiguration) -> Result<Vec<Parabolic>> {
    algorithm_a_with(cc, MergeOrder::Canonical)
}

pub fn algorithm_a_with(cc: &CoherentConfiguration, order: MergeOrder) -> Result<Vec<Parabolic>> {
    let mut q: Vec<Parabolic> = Vec::new();
    for s in irredundant_colors(cc)? {
        q.push(cc.color_closure(s)?);
    }
    q.sort();
    q.dedup();

    let mut rng = match order {
        MergeOrder::Canonical => None,
        MergeOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut compatible: HashMap<(ColorSet, ColorSet), bool> = HashMap::new();
    let mut test = |e: &Parabolic, f: &Parabolic| -> bool {
        let key = if e.colors() <= f.colors() {
            (e.colors().clone(), f.colors().clone())
        } else {
            (f.colors().clone(), e.colors().clone())
        };
        *compatible
            .entry(key)
            .or_insert_with(|| cc.strongly_commute_sets(e.colors(), f.colors()) && cc.perp_sets(e.colors(), f.colors()))
    };
    loop {
        let mut pairs: Vec<(usize, usize)> = (0..q.len()).tuple_combinations().collect();
        if let Some(rng) = rng.as_mut() {
            pairs.shuffle(rng);
        }
        let Some((i, j)) = pairs.into_iter().find(|&(i, j)| !test(&q[i], &q[j])) else {
            break;
        };
        let joined = cc.join(&q[i], &q[j])?;
        q.remove(j);
        q.remove(i);
        q.push(joined);
        q.sort();
        q.dedup();
    }
    q.retain(|e| !cc.is_discrete(e));
    Ok(q)
}

/// A decomposability certificate: `{Ω × Ω}` if indecomposable, otherwise
/// a two-member decomposition of the configuration.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub decomposition: AtomicCartesianDecomposition,
    pub pstar: Vec<Parabolic>,
    pub pstar_validity: Validity,
    /// Number of subsets `I` examined before stopping.
    pub subsets_tested: usize,
}

impl Certificate {
    pub fn is_decomposable(&self) -> bool {
        self.decomposition.len() == 2
    }
}

pub fn algorithm_b(cc: &CoherentConfiguration) -> Result<Certificate> {
    algorithm_b_with(cc, MergeOrder::Canonical)
}

/// Tries `{P*_I, P*_{M*∖I}}` for proper nonempty `I` in ascending size,
/// then lexicographic order, each unordered split once.
pub fn algorithm_b_with(cc: &CoherentConfiguration, order: MergeOrder) -> Result<Certificate> {
    if !cc.is_thick() {
        return Err(Error::NotThick);
    }
    let pstar = algorithm_a_with(cc, order)?;
    assert!(cc.degree() == 1 || !pstar.is_empty(), "thick configuration without irredundant colors");
    let pstar_validity = if pstar.is_empty() {
        Validity::Invalid
    } else {
        super::check_decomposition(cc, &pstar.iter().map(|e| e.relation().clone()).collect::<Vec<_>>())?
    };
    let m = pstar.len();
    let mut subsets_tested = 0;
    for size in 1..=m / 2 {
        for subset in (0..m).combinations(size) {
            if 2 * size == m && subset[0] != 0 {
                continue;
            }
            subsets_tested += 1;
            let rest: Vec<usize> = (0..m).filter(|i| !subset.contains(i)).collect();
            let (Ok(left), Ok(right)) = (product_of(cc, &pstar, &subset), product_of(cc, &pstar, &rest)) else {
                continue;
            };
            if let Ok(p) = AtomicCartesianDecomposition::new(cc, vec![left, right]) {
                if p.validity() == Validity::OfX {
                    return Ok(Certificate { decomposition: p, pstar, pstar_validity, subsets_tested });
                }
            }
        }
    }
    let decomposition = if cc.degree() == 1 {
        // The full parabolic is discrete here, so no decomposition exists.
        AtomicCartesianDecomposition::degenerate(cc)
    } else {
        AtomicCartesianDecomposition::trivial(cc)?
    };
    Ok(Certificate { decomposition, pstar, pstar_validity, subsets_tested })
}
