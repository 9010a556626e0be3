//! Relations of a configuration as sets of basis colors, and the algebra on
//! them: dot product, transpose, equivalence closure, the parabolic lattice,
//! commutation and the `⊥` predicate.
//!
//! Dot products are computed from structure constants: the basis relations
//! in `x · y` are exactly the `t` with `c_{xy}^t > 0`.

use std::ops::Deref;

use crate::bitset::ColorSet;
use crate::cc::{CoherentConfiguration, Color};
use crate::error::{Error, Result};

/// A union of basis relations of one configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    home: u64,
    colors: ColorSet,
}

impl Relation {
    pub fn colors(&self) -> &ColorSet {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn contains(&self, c: Color) -> bool {
        self.colors.contains(c)
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.colors.is_subset(&other.colors)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.colors.to_vec()
    }
}

/// A relation that is an equivalence on the point set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parabolic(Relation);

impl Parabolic {
    pub fn relation(&self) -> &Relation {
        &self.0
    }

    pub fn into_relation(self) -> Relation {
        self.0
    }
}

impl Deref for Parabolic {
    type Target = Relation;
    fn deref(&self) -> &Relation {
        &self.0
    }
}

impl PartialOrd for Relation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Relation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.colors.cmp(&other.colors).then(self.home.cmp(&other.home))
    }
}

/// Disjoint-set forest over points.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}

impl CoherentConfiguration {
    pub fn relation(&self, colors: impl IntoIterator<Item = Color>) -> Result<Relation> {
        let mut set = ColorSet::empty(self.rank());
        for c in colors {
            self.check_color(c)?;
            set.insert(c);
        }
        Ok(self.wrap(set))
    }

    pub fn relation_from_indices(&self, colors: &[usize]) -> Result<Relation> {
        self.relation(colors.iter().map(|&c| Color(c as u32)))
    }

    pub(crate) fn wrap(&self, colors: ColorSet) -> Relation {
        debug_assert_eq!(colors.capacity(), self.rank());
        Relation { home: self.home_id(), colors }
    }

    pub fn basis_relation(&self, c: Color) -> Relation {
        self.wrap(ColorSet::from_colors(self.rank(), [c]))
    }

    pub fn empty_relation(&self) -> Relation {
        self.wrap(ColorSet::empty(self.rank()))
    }

    /// `1_Ω` as a parabolic: the reflexive colors.
    pub fn discrete_parabolic(&self) -> Parabolic {
        Parabolic(self.wrap(ColorSet::from_colors(self.rank(), self.reflexive_colors())))
    }

    /// `Ω × Ω` as a parabolic: every color.
    pub fn full_parabolic(&self) -> Parabolic {
        Parabolic(self.wrap(ColorSet::full(self.rank())))
    }

    pub fn is_discrete(&self, e: &Parabolic) -> bool {
        e.colors().iter().all(|c| self.is_reflexive(c))
    }

    pub fn is_full(&self, e: &Parabolic) -> bool {
        e.len() == self.rank()
    }

    pub(crate) fn check_home(&self, r: &Relation) -> Result<()> {
        if r.home == self.home_id() {
            Ok(())
        } else {
            Err(Error::HomeMismatch)
        }
    }

    pub(crate) fn dot_sets(&self, r: &ColorSet, s: &ColorSet) -> ColorSet {
        let sc = self.structure();
        let mut out = ColorSet::empty(self.rank());
        for x in r.iter() {
            let right = self.support(x).1;
            for y in s.iter() {
                if self.support(y).0 == right {
                    for t in sc.products(x, y) {
                        out.insert(t);
                    }
                }
            }
        }
        out
    }

    /// `r · s`: the pairs `(a, b)` with `a r ∩ b s*` nonempty.
    pub fn dot(&self, r: &Relation, s: &Relation) -> Result<Relation> {
        self.check_home(r)?;
        self.check_home(s)?;
        Ok(self.wrap(self.dot_sets(&r.colors, &s.colors)))
    }

    pub fn transpose(&self, r: &Relation) -> Result<Relation> {
        self.check_home(r)?;
        Ok(self.wrap(self.transpose_set(&r.colors)))
    }

    pub(crate) fn transpose_set(&self, r: &ColorSet) -> ColorSet {
        ColorSet::from_colors(self.rank(), r.iter().map(|c| self.transpose_color(c)))
    }

    /// The smallest equivalence relation containing `r`, which for a
    /// coherent configuration is always a parabolic.
    pub fn equivalence_closure(&self, r: &Relation) -> Result<Parabolic> {
        self.check_home(r)?;
        let n = self.degree();
        let mut uf = UnionFind::new(n);
        for a in 0..n {
            for b in 0..n {
                if r.colors.contains(self.cell(a, b)) {
                    uf.union(a, b);
                }
            }
        }
        let root: Vec<usize> = (0..n).map(|a| uf.find(a)).collect();
        // 0 = unseen, 1 = inside components, 2 = crossing components.
        let mut state = vec![0u8; self.rank()];
        for a in 0..n {
            for b in 0..n {
                let c = self.cell(a, b).index();
                let s = if root[a] == root[b] { 1 } else { 2 };
                if state[c] == 0 {
                    state[c] = s;
                } else if state[c] != s {
                    return Err(Error::ClosureNotARelation);
                }
            }
        }
        let set =
            ColorSet::from_colors(self.rank(), (0..self.rank()).filter(|&c| state[c] == 1).map(|c| Color(c as u32)));
        Ok(Parabolic(self.wrap(set)))
    }

    /// `⟨s⟩` for a basis color, cached.
    pub fn color_closure(&self, c: Color) -> Result<Parabolic> {
        self.check_color(c)?;
        if let Some(p) = self.closure_slot(c).get() {
            return Ok(p.clone());
        }
        let p = self.equivalence_closure(&self.basis_relation(c))?;
        Ok(self.closure_slot(c).get_or_init(|| p).clone())
    }

    pub fn meet(&self, e: &Parabolic, f: &Parabolic) -> Result<Parabolic> {
        self.check_home(e)?;
        self.check_home(f)?;
        Ok(Parabolic(self.wrap(e.colors.intersection(&f.colors))))
    }

    pub fn join(&self, e: &Parabolic, f: &Parabolic) -> Result<Parabolic> {
        self.check_home(e)?;
        self.check_home(f)?;
        self.equivalence_closure(&self.wrap(e.colors.union(&f.colors)))
    }

    pub fn commute(&self, r: &Relation, s: &Relation) -> Result<bool> {
        Ok(self.dot(r, s)? == self.dot(s, r)?)
    }

    /// `x·f = f·x` for every basis `x ⊆ e` and `e·y = y·e` for every basis `y ⊆ f`.
    pub fn strongly_commute(&self, e: &Parabolic, f: &Parabolic) -> Result<bool> {
        self.check_home(e)?;
        self.check_home(f)?;
        Ok(self.strongly_commute_sets(&e.colors, &f.colors))
    }

    pub(crate) fn strongly_commute_sets(&self, e: &ColorSet, f: &ColorSet) -> bool {
        let one_side = |e: &ColorSet, f: &ColorSet| {
            e.iter().all(|x| {
                let xs = ColorSet::from_colors(self.rank(), [x]);
                self.dot_sets(&xs, f) == self.dot_sets(f, &xs)
            })
        };
        one_side(e, f) && one_side(f, e)
    }

    /// Every nonempty product `x·y` of basis `x ⊆ e`, `y ⊆ f` is a single basis relation.
    pub fn perp(&self, e: &Parabolic, f: &Parabolic) -> Result<bool> {
        self.check_home(e)?;
        self.check_home(f)?;
        Ok(self.perp_sets(&e.colors, &f.colors))
    }

    pub(crate) fn perp_sets(&self, e: &ColorSet, f: &ColorSet) -> bool {
        let sc = self.structure();
        e.iter().all(|x| f.iter().all(|y| self.support(x).1 != self.support(y).0 || sc.products(x, y).nth(1).is_none()))
    }

    /// Reflexive on all points, closed under transpose and under the dot product.
    pub fn is_parabolic(&self, r: &Relation) -> bool {
        if self.check_home(r).is_err() {
            return false;
        }
        if let Some(&known) = self.parabolic_cache().lock().unwrap().get(&r.colors) {
            return known;
        }
        let verdict = self.reflexive_colors().all(|c| r.colors.contains(c))
            && self.transpose_set(&r.colors) == r.colors
            && self.dot_sets(&r.colors, &r.colors) == r.colors;
        self.parabolic_cache().lock().unwrap().insert(r.colors.clone(), verdict);
        verdict
    }

    pub fn parabolic(&self, r: Relation) -> Result<Parabolic> {
        self.check_home(&r)?;
        if self.is_parabolic(&r) {
            Ok(Parabolic(r))
        } else {
            Err(Error::NotAParabolic)
        }
    }

    pub fn parabolic_from_indices(&self, colors: &[usize]) -> Result<Parabolic> {
        self.parabolic(self.relation_from_indices(colors)?)
    }

    /// Pair-level expansion of a relation.
    pub fn pairs<'a>(&'a self, r: &'a Relation) -> impl Iterator<Item = (usize, usize)> + 'a {
        let n = self.degree();
        (0..n * n).map(move |i| (i / n, i % n)).filter(move |&(a, b)| r.colors.contains(self.cell(a, b)))
    }

    /// Parabolics reachable as joins of color closures, up to `limit` of
    /// them. The flag is true when the enumeration is complete.
    pub fn parabolics(&self, limit: usize) -> Result<(Vec<Parabolic>, bool)> {
        let mut found: Vec<Parabolic> = vec![self.discrete_parabolic()];
        for c in self.colors() {
            let e = self.color_closure(c)?;
            if !found.contains(&e) {
                found.push(e);
            }
        }
        if found.len() > limit {
            found.truncate(limit);
            return Ok((found, false));
        }
        let atoms = found.clone();
        let mut head = 0;
        while head < found.len() {
            for a in &atoms {
                let j = self.join(&found[head], a)?;
                if !found.contains(&j) {
                    if found.len() == limit {
                        return Ok((found, false));
                    }
                    found.push(j);
                }
            }
            head += 1;
        }
        found.sort();
        Ok((found, true))
    }

    /// Classes of a parabolic in ascending order of minimal member, and the
    /// class index of each point.
    pub fn classes(&self, e: &Parabolic) -> (Vec<Vec<usize>>, Vec<usize>) {
        let n = self.degree();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&b| e.colors.contains(self.cell(a, b))).collect();
            for &b in &members {
                class_of[b] = classes.len();
            }
            classes.push(members);
        }
        (classes, class_of)
    }
}
