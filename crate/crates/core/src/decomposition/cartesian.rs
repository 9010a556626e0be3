use serde::{Deserialize, Serialize};

use crate::bitset::ColorSet;
use crate::cc::CoherentConfiguration;
use crate::error::{Error, Result};
use crate::relation::{Parabolic, Relation};

/// Largest index set for which the Boolean-lattice property is rechecked.
pub const LATTICE_CHECK_MAX: usize = 10;

/// How strongly a family of parabolics decomposes the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Validity {
    Invalid,
    /// An atomic Cartesian decomposition of the point set.
    OfOmega,
    /// Additionally every member strongly commutes with and is `⊥` to its complement.
    OfX,
}

/// Pairwise commuting nondiscrete parabolics `e_1..e_m` together with their
/// complements `e_i′`, the product of all other members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicCartesianDecomposition {
    members: Vec<Parabolic>,
    complements: Vec<Parabolic>,
    validity: Validity,
}

impl AtomicCartesianDecomposition {
    /// Checks `members` and keeps them in the given order. Fails with
    /// `NotCartesian` below the `OfOmega` level.
    pub fn new(cc: &CoherentConfiguration, members: Vec<Parabolic>) -> Result<Self> {
        let relations: Vec<Relation> = members.iter().map(|e| e.relation().clone()).collect();
        let validity = check_decomposition(cc, &relations)?;
        if validity == Validity::Invalid {
            return Err(Error::NotCartesian("members do not form an atomic Cartesian decomposition".into()));
        }
        let complements = (0..members.len())
            .map(|i| {
                let others: Vec<usize> = (0..members.len()).filter(|&j| j != i).collect();
                product_of(cc, &members, &others)
            })
            .collect::<Result<_>>()?;
        Ok(AtomicCartesianDecomposition { members, complements, validity })
    }

    /// `{Ω × Ω}`, valid whenever the degree exceeds 1.
    pub fn trivial(cc: &CoherentConfiguration) -> Result<Self> {
        Self::new(cc, vec![cc.full_parabolic()])
    }

    /// `{Ω × Ω}` on a single point. Its only member is discrete, so it is
    /// marked `Invalid`.
    pub(crate) fn degenerate(cc: &CoherentConfiguration) -> Self {
        AtomicCartesianDecomposition {
            members: vec![cc.full_parabolic()],
            complements: vec![cc.discrete_parabolic()],
            validity: Validity::Invalid,
        }
    }

    pub fn members(&self) -> &[Parabolic] {
        &self.members
    }

    pub fn complements(&self) -> &[Parabolic] {
        &self.complements
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn validity(&self) -> Validity {
        self.validity
    }

    /// `P_I`, the dot product of the members indexed by `subset`.
    pub fn subset_product(&self, cc: &CoherentConfiguration, subset: &[usize]) -> Result<Parabolic> {
        if let Some(&i) = subset.iter().find(|&&i| i >= self.members.len()) {
            return Err(Error::NotCartesian(format!("index {i} outside the decomposition")));
        }
        product_of(cc, &self.members, subset)
    }

    /// `π_P`, enumerating tuples of complement classes.
    pub fn pi_p(&self, cc: &CoherentConfiguration) -> Result<CartesianBijection> {
        CartesianBijection::new(cc, &self.complements)
    }
}

/// Dot product of the indexed parabolics; the discrete parabolic when empty.
pub(crate) fn product_of(cc: &CoherentConfiguration, members: &[Parabolic], subset: &[usize]) -> Result<Parabolic> {
    let r = product_set(cc, members.iter().map(|e| e.relation()), subset)?;
    cc.parabolic(r)
}

fn product_set<'a>(
    cc: &CoherentConfiguration,
    members: impl Iterator<Item = &'a Relation>,
    subset: &[usize],
) -> Result<Relation> {
    let mut acc = cc.discrete_parabolic().into_relation();
    for (i, e) in members.enumerate() {
        if subset.contains(&i) {
            acc = cc.dot(&acc, e)?;
        }
    }
    Ok(acc)
}

/// Level at which `members` decompose `cc`.
pub fn check_decomposition(cc: &CoherentConfiguration, members: &[Relation]) -> Result<Validity> {
    let mut parabolics = Vec::with_capacity(members.len());
    for r in members {
        parabolics.push(cc.parabolic(r.clone())?);
    }
    if parabolics.is_empty() || parabolics.iter().any(|e| cc.is_discrete(e)) {
        return Ok(Validity::Invalid);
    }
    let m = parabolics.len();
    for i in 0..m {
        for j in i + 1..m {
            if !cc.commute(&parabolics[i], &parabolics[j])? {
                return Ok(Validity::Invalid);
            }
        }
    }
    let mut complements = Vec::with_capacity(m);
    for i in 0..m {
        let others: Vec<usize> = (0..m).filter(|&j| j != i).collect();
        let r = product_set(cc, members.iter(), &others)?;
        match cc.parabolic(r) {
            Ok(p) => complements.push(p),
            Err(_) => return Ok(Validity::Invalid),
        }
    }
    for (e, f) in parabolics.iter().zip(&complements) {
        if !cc.is_discrete(&cc.meet(e, f)?) || !cc.is_full(&cc.join(e, f)?) {
            return Ok(Validity::Invalid);
        }
    }
    let classes: usize = complements.iter().map(|f| cc.classes(f).0.len()).product();
    if classes != cc.degree() || (m <= LATTICE_CHECK_MAX && !boolean_lattice(cc, &parabolics)?) {
        return Ok(Validity::Invalid);
    }
    let of_x = parabolics
        .iter()
        .zip(&complements)
        .all(|(e, f)| cc.strongly_commute_sets(e.colors(), f.colors()) && cc.perp_sets(e.colors(), f.colors()));
    Ok(if of_x { Validity::OfX } else { Validity::OfOmega })
}

/// `P_I ∧ P_J = P_{I∩J}` for all subsets `I`, `J`.
fn boolean_lattice(cc: &CoherentConfiguration, members: &[Parabolic]) -> Result<bool> {
    let m = members.len();
    let mut products: Vec<ColorSet> = Vec::with_capacity(1 << m);
    for mask in 0..1usize << m {
        let subset: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        products.push(product_set(cc, members.iter().map(|e| e.relation()), &subset)?.colors().clone());
    }
    for i in 0..products.len() {
        for j in i + 1..products.len() {
            if products[i].intersection(&products[j]) != products[i & j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The bijection `π_P` between points and tuples of complement classes.
///
/// Coordinate `i` of a point is the index of its `e_i′`-class, classes
/// numbered by ascending minimal member. Tuples are ordered
/// lexicographically, first coordinate most significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartesianBijection {
    radices: Vec<usize>,
    tuples: Vec<Vec<usize>>,
    points: Vec<usize>,
}

impl CartesianBijection {
    pub fn new(cc: &CoherentConfiguration, complements: &[Parabolic]) -> Result<Self> {
        let n = cc.degree();
        let mut radices = Vec::with_capacity(complements.len());
        let mut class_maps = Vec::with_capacity(complements.len());
        for f in complements {
            let (classes, class_of) = cc.classes(f);
            radices.push(classes.len());
            class_maps.push(class_of);
        }
        let total = radices.iter().try_fold(1usize, |acc, &r| acc.checked_mul(r));
        if total != Some(n) {
            return Err(Error::NotCartesian(format!(
                "complement classes give {} tuples for {n} points",
                radices.iter().map(usize::to_string).collect::<Vec<_>>().join("x")
            )));
        }
        let tuples: Vec<Vec<usize>> = (0..n).map(|a| class_maps.iter().map(|m| m[a]).collect()).collect();
        let mut points = vec![usize::MAX; n];
        for (a, t) in tuples.iter().enumerate() {
            let idx = mixed_radix(&radices, t);
            if points[idx] != usize::MAX {
                return Err(Error::NotCartesian(format!(
                    "points {} and {a} share every complement class",
                    points[idx]
                )));
            }
            points[idx] = a;
        }
        Ok(CartesianBijection { radices, tuples, points })
    }

    /// `|Ω/e_i′|` per coordinate.
    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    pub fn tuple_of(&self, point: usize) -> &[usize] {
        &self.tuples[point]
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// The unique point in the intersection of the given classes.
    pub fn point_of(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.radices.len() || tuple.iter().zip(&self.radices).any(|(t, r)| t >= r) {
            return Err(Error::NotCartesian(format!("tuple {tuple:?} out of range")));
        }
        Ok(self.points[mixed_radix(&self.radices, tuple)])
    }

    /// Point `a` to its lexicographic index among tuples.
    pub fn to_product_index(&self) -> Vec<usize> {
        self.tuples.iter().map(|t| mixed_radix(&self.radices, t)).collect()
    }
}

pub(crate) fn mixed_radix(radices: &[usize], tuple: &[usize]) -> usize {
    tuple.iter().zip(radices).fold(0, |acc, (&t, &r)| acc * r + t)
}

/// Members `e_i` induced by a coordinate map: pairs agreeing on every
/// coordinate other than `i`.
pub fn members_from_coordinates(cc: &CoherentConfiguration, tuples: &[Vec<usize>]) -> Result<Vec<Parabolic>> {
    let n = cc.degree();
    if tuples.len() != n {
        return Err(Error::DegreeMismatch { left: n, right: tuples.len() });
    }
    let m = tuples.first().map_or(0, Vec::len);
    let mut members = Vec::with_capacity(m);
    for i in 0..m {
        // 0 = unseen, 1 = inside, 2 = outside.
        let mut state = vec![0u8; cc.rank()];
        for a in 0..n {
            for b in 0..n {
                let inside = (0..m).all(|j| j == i || tuples[a][j] == tuples[b][j]);
                let s = if inside { 1 } else { 2 };
                let c = cc.cell(a, b).index();
                if state[c] == 0 {
                    state[c] = s;
                } else if state[c] != s {
                    return Err(Error::NotAParabolic);
                }
            }
        }
        let colors = cc.colors().filter(|c| state[c.index()] == 1);
        members.push(cc.parabolic(cc.relation(colors)?)?);
    }
    Ok(members)
}

/// The standard decomposition of a configuration built as a tensor product
/// of factors with the given degrees, points in lexicographic order.
pub fn standard_members(cc: &CoherentConfiguration, degrees: &[usize]) -> Result<Vec<Parabolic>> {
    let n: usize = degrees.iter().product();
    if n != cc.degree() {
        return Err(Error::DegreeMismatch { left: cc.degree(), right: n });
    }
    let tuples: Vec<Vec<usize>> = (0..n)
        .map(|p| {
            let mut t = vec![0; degrees.len()];
            let mut rest = p;
            for (slot, &d) in t.iter_mut().zip(degrees).rev() {
                *slot = rest % d;
                rest /= d;
            }
            t
        })
        .collect();
    members_from_coordinates(cc, &tuples)
}
