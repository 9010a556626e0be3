use serde::{Deserialize, Serialize};

use super::CoherentConfiguration;

/// Isomorphism invariants of a configuration. Equal fingerprints are
/// necessary, not sufficient, for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub degree: usize,
    pub rank: usize,
    pub valencies: Vec<usize>,
    pub intersection_numbers: Vec<usize>,
    pub fiber_sizes: Vec<usize>,
}

impl CoherentConfiguration {
    pub fn fingerprint(&self) -> Fingerprint {
        let mut valencies: Vec<usize> = self.colors().map(|c| self.valency(c)).collect();
        valencies.sort_unstable();
        let mut intersection_numbers: Vec<usize> = self.intersection_numbers().map(|(_, _, _, c)| c).collect();
        intersection_numbers.sort_unstable();
        let mut fiber_sizes: Vec<usize> = self.fibers().iter().map(Vec::len).collect();
        fiber_sizes.sort_unstable();
        Fingerprint { degree: self.degree(), rank: self.rank(), valencies, intersection_numbers, fiber_sizes }
    }
}
