use crate::cc::{check_permutation, CoherentConfiguration};
use crate::error::{Error, Result};

/// Largest degree accepted by [`find_isomorphism`].
pub const BRUTE_FORCE_MAX_DEGREE: usize = 8;

/// Whether `map` (point `a` of `source` to point `map[a]` of `target`)
/// sends every basis relation of `source` onto a basis relation of
/// `target`, bijectively on colors.
pub fn verify_isomorphism(
    source: &CoherentConfiguration,
    target: &CoherentConfiguration,
    map: &[usize],
) -> Result<bool> {
    let n = source.degree();
    if n != target.degree() {
        return Err(Error::DegreeMismatch { left: n, right: target.degree() });
    }
    check_permutation(map, n)?;
    if source.rank() != target.rank() {
        return Ok(false);
    }
    const UNSET: u32 = u32::MAX;
    let mut forward = vec![UNSET; source.rank()];
    let mut backward = vec![UNSET; target.rank()];
    for a in 0..n {
        for b in 0..n {
            let s = source.cell(a, b).0;
            let t = target.cell(map[a], map[b]).0;
            let f = &mut forward[s as usize];
            let g = &mut backward[t as usize];
            if *f == UNSET && *g == UNSET {
                *f = t;
                *g = s;
            } else if *f != t || *g != s {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exhaustive search for an isomorphism between two small configurations.
pub fn find_isomorphism(a: &CoherentConfiguration, b: &CoherentConfiguration) -> Result<Option<Vec<usize>>> {
    let n = a.degree();
    if n != b.degree() {
        return Err(Error::DegreeMismatch { left: n, right: b.degree() });
    }
    if n > BRUTE_FORCE_MAX_DEGREE {
        return Err(Error::DegreeOverflow { degree: n, max: BRUTE_FORCE_MAX_DEGREE });
    }
    if a.rank() != b.rank() {
        return Ok(None);
    }
    let mut search = Search {
        a,
        b,
        map: Vec::with_capacity(n),
        used: vec![false; n],
        forward: vec![None; a.rank()],
        backward: vec![None; b.rank()],
    };
    Ok(search.extend().then_some(search.map))
}

struct Search<'a> {
    a: &'a CoherentConfiguration,
    b: &'a CoherentConfiguration,
    map: Vec<usize>,
    used: Vec<bool>,
    forward: Vec<Option<(u32, usize)>>,
    backward: Vec<Option<(u32, usize)>>,
}

impl Search<'_> {
    fn extend(&mut self) -> bool {
        let p = self.map.len();
        if p == self.a.degree() {
            return true;
        }
        for q in 0..self.b.degree() {
            if self.used[q] {
                continue;
            }
            self.map.push(q);
            self.used[q] = true;
            let mark = self.map.len();
            if self.bind_pairs(p, mark) && self.extend() {
                return true;
            }
            self.unbind(mark);
            self.used[q] = false;
            self.map.pop();
        }
        false
    }

    /// Binds the colors of all pairs involving the new point `p`. Entries are
    /// tagged with the depth that introduced them so they can be undone.
    fn bind_pairs(&mut self, p: usize, depth: usize) -> bool {
        for r in 0..=p {
            for (x, y) in [(p, r), (r, p)] {
                let s = self.a.cell(x, y).0;
                let t = self.b.cell(self.map[x], self.map[y]).0;
                match (self.forward[s as usize], self.backward[t as usize]) {
                    (None, None) => {
                        self.forward[s as usize] = Some((t, depth));
                        self.backward[t as usize] = Some((s, depth));
                    }
                    (Some((ft, _)), Some((bs, _))) if ft == t && bs == s => {}
                    _ => return false,
                }
            }
        }
        true
    }

    fn unbind(&mut self, depth: usize) {
        for slot in self.forward.iter_mut().chain(self.backward.iter_mut()) {
            if matches!(slot, Some((_, d)) if *d == depth) {
                *slot = None;
            }
        }
    }
}
