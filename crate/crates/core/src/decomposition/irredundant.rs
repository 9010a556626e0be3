use crate::cc::{CoherentConfiguration, Color};
use crate::error::Result;

/// A factorization `s = x · y` of a basis relation into irreflexive `x`, `y`
/// whose closures meet in the discrete parabolic.
pub fn redundancy_witness(cc: &CoherentConfiguration, s: Color) -> Result<Option<(Color, Color)>> {
    cc.check_color(s)?;
    let sc = cc.structure();
    for x in cc.irreflexive_colors() {
        for y in cc.irreflexive_colors() {
            if cc.support(x).1 != cc.support(y).0 {
                continue;
            }
            let mut products = sc.products(x, y);
            if products.next() != Some(s) || products.next().is_some() {
                continue;
            }
            if meets_discretely(cc, x, y)? {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

pub fn is_irredundant(cc: &CoherentConfiguration, s: Color) -> Result<bool> {
    Ok(redundancy_witness(cc, s)?.is_none())
}

/// All irredundant colors in ascending order, from one pass over pairs.
pub fn irredundant_colors(cc: &CoherentConfiguration) -> Result<Vec<Color>> {
    let sc = cc.structure();
    let mut redundant = vec![false; cc.rank()];
    for x in cc.irreflexive_colors() {
        for y in cc.irreflexive_colors() {
            if cc.support(x).1 != cc.support(y).0 {
                continue;
            }
            let mut products = sc.products(x, y);
            let Some(s) = products.next() else { continue };
            if products.next().is_some() || redundant[s.index()] {
                continue;
            }
            if meets_discretely(cc, x, y)? {
                redundant[s.index()] = true;
            }
        }
    }
    Ok(cc.colors().filter(|c| !redundant[c.index()]).collect())
}

fn meets_discretely(cc: &CoherentConfiguration, x: Color, y: Color) -> Result<bool> {
    let ex = cc.color_closure(x)?;
    let ey = cc.color_closure(y)?;
    Ok(ex.colors().intersection(ey.colors()).iter().all(|c| cc.is_reflexive(c)))
}
