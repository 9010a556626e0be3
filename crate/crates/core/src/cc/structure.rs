use std::collections::HashMap;

use super::{CoherentConfiguration, Color};

/// Nonzero structure constants, indexed by the left color.
///
/// For a representative point `a` of each fiber, counting the triples
/// `(cell(a, g), cell(g, b), cell(a, b))` over all `g, b` yields
/// `n_t * c_{xy}^t` for every `x` leaving that fiber.
pub(crate) struct StructureConstants {
    // by_left[x] is sorted by (y, t).
    by_left: Vec<Vec<(Color, Color, u32)>>,
}

impl Clone for StructureConstants {
    fn clone(&self) -> Self {
        StructureConstants { by_left: self.by_left.clone() }
    }
}

impl StructureConstants {
    pub(crate) fn compute(cc: &CoherentConfiguration) -> Self {
        let n = cc.degree();
        let mut by_left: Vec<Vec<(Color, Color, u32)>> = vec![Vec::new(); cc.rank()];
        for fiber in cc.fibers() {
            let a = fiber[0];
            let mut counts: HashMap<(u32, u32, u32), u64> = HashMap::new();
            for g in 0..n {
                let x = cc.cell(a, g).0;
                for b in 0..n {
                    *counts.entry((x, cc.cell(g, b).0, cc.cell(a, b).0)).or_insert(0) += 1;
                }
            }
            for ((x, y, t), k) in counts {
                let nt = cc.valency(Color(t)) as u64;
                debug_assert_eq!(k % nt, 0);
                by_left[x as usize].push((Color(y), Color(t), (k / nt) as u32));
            }
        }
        for row in &mut by_left {
            row.sort_unstable();
        }
        StructureConstants { by_left }
    }

    pub(crate) fn get(&self, r: Color, s: Color, t: Color) -> usize {
        let row = &self.by_left[r.index()];
        match row.binary_search_by(|&(y, u, _)| (y, u).cmp(&(s, t))) {
            Ok(i) => row[i].2 as usize,
            Err(_) => 0,
        }
    }

    /// Colors `t` with `c_{xy}^t > 0`, i.e. the basis relations in `x . y`.
    pub(crate) fn products(&self, x: Color, y: Color) -> impl Iterator<Item = Color> + '_ {
        let row = &self.by_left[x.index()];
        let start = row.partition_point(|&(yy, _, _)| yy < y);
        row[start..].iter().take_while(move |&&(yy, _, _)| yy == y).map(|&(_, t, _)| t)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = (Color, Color, Color, usize)> + '_ {
        self.by_left
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |&(y, t, c)| (Color(x as u32), y, t, c as usize)))
    }
}
