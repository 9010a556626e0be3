use serde::{Deserialize, Serialize};

use super::cartesian::{members_from_coordinates, mixed_radix};
use super::isomorphism::verify_isomorphism;
use super::search::{algorithm_b_with, MergeOrder};
use crate::cc::{BuildOptions, CoherentConfiguration, Fingerprint};
use crate::error::{Error, Result};
use crate::relation::Parabolic;

/// One call of the recursive decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceNode {
    pub degree: usize,
    /// `|P*|`; zero when Algorithm A was skipped (degree 1).
    pub pstar_size: usize,
    pub subsets_tested: usize,
    /// Recursive calls made below this node.
    pub recursion_calls: usize,
    /// Indices of the two child nodes when the node split.
    pub children: Option<(usize, usize)>,
}

/// Record of a run of [`algorithm_c`], root at index 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionTrace {
    pub nodes: Vec<TraceNode>,
}

impl DecompositionTrace {
    pub fn root(&self) -> &TraceNode {
        &self.nodes[0]
    }

    pub fn pstar_size(&self) -> usize {
        self.root().pstar_size
    }

    pub fn subsets_tested(&self) -> usize {
        self.root().subsets_tested
    }

    pub fn recursion_calls(&self) -> usize {
        self.root().recursion_calls
    }

    /// `|M*| ≤ log₂ n` at every node.
    pub fn pstar_bound_holds(&self) -> bool {
        self.nodes
            .iter()
            .all(|t| t.degree <= 1 || 1usize.checked_shl(t.pstar_size as u32).is_some_and(|p| p <= t.degree))
    }

    /// `c = 0` at leaves and `c = 2 + c₁ + c₂` at splits, with `n = n₁ n₂`.
    pub fn recursion_identity_holds(&self) -> bool {
        self.nodes.iter().all(|t| match t.children {
            None => t.recursion_calls == 0,
            Some((i, j)) => {
                let (a, b) = (&self.nodes[i], &self.nodes[j]);
                t.recursion_calls == 2 + a.recursion_calls + b.recursion_calls && t.degree == a.degree * b.degree
            }
        })
    }
}

/// Indecomposable factors and an isomorphism onto their tensor product.
#[derive(Clone, Debug)]
pub struct TensorDecomposition {
    factors: Vec<CoherentConfiguration>,
    point_map: Vec<Vec<usize>>,
    trace: DecompositionTrace,
}

impl TensorDecomposition {
    pub fn factors(&self) -> &[CoherentConfiguration] {
        &self.factors
    }

    /// Factor coordinates of each source point.
    pub fn point_map(&self) -> &[Vec<usize>] {
        &self.point_map
    }

    pub fn trace(&self) -> &DecompositionTrace {
        &self.trace
    }

    pub fn fingerprints(&self) -> Vec<Fingerprint> {
        self.factors.iter().map(CoherentConfiguration::fingerprint).collect()
    }

    /// Source point to its point in the tensor of the factors.
    pub fn product_map(&self) -> Vec<usize> {
        let radices: Vec<usize> = self.factors.iter().map(CoherentConfiguration::degree).collect();
        self.point_map.iter().map(|t| mixed_radix(&radices, t)).collect()
    }

    pub fn product(&self) -> Result<CoherentConfiguration> {
        tensor_of(&self.factors)
    }

    /// The maximal decomposition induced on the source, one member per factor.
    pub fn cartesian_members(&self, source: &CoherentConfiguration) -> Result<Vec<Parabolic>> {
        members_from_coordinates(source, &self.point_map)
    }
}

fn tensor_of(factors: &[CoherentConfiguration]) -> Result<CoherentConfiguration> {
    let refs: Vec<&CoherentConfiguration> = factors.iter().collect();
    // Tensor products of coherent configurations are coherent.
    CoherentConfiguration::tensor_with(&refs, BuildOptions::default().fast())
}

pub fn algorithm_c(cc: &CoherentConfiguration) -> Result<TensorDecomposition> {
    algorithm_c_with(cc, MergeOrder::Canonical)
}

/// Splits by decomposability certificates until every factor is
/// indecomposable. Factors are sorted by degree, rank and fingerprint.
pub fn algorithm_c_with(cc: &CoherentConfiguration, order: MergeOrder) -> Result<TensorDecomposition> {
    if !cc.is_thick() {
        return Err(Error::NotThick);
    }
    let mut nodes = Vec::new();
    let (factors, tuples) = split(cc, order, &mut nodes)?;

    let mut keyed: Vec<(usize, CoherentConfiguration)> = factors.into_iter().enumerate().collect();
    keyed.sort_by_cached_key(|(_, f)| (f.degree(), f.rank(), f.fingerprint()));
    let point_map: Vec<Vec<usize>> = tuples.iter().map(|t| keyed.iter().map(|&(i, _)| t[i]).collect()).collect();
    let factors: Vec<CoherentConfiguration> = keyed.into_iter().map(|(_, f)| f).collect();

    let result = TensorDecomposition { factors, point_map, trace: DecompositionTrace { nodes } };
    if !verify_isomorphism(cc, &result.product()?, &result.product_map())? {
        return Err(Error::VerificationFailed("point map is not an isomorphism onto the factor product".into()));
    }
    Ok(result)
}

type Split = (Vec<CoherentConfiguration>, Vec<Vec<usize>>);

fn split(cc: &CoherentConfiguration, order: MergeOrder, nodes: &mut Vec<TraceNode>) -> Result<Split> {
    let at = nodes.len();
    nodes.push(TraceNode { degree: cc.degree(), pstar_size: 0, subsets_tested: 0, recursion_calls: 0, children: None });
    let leaf =
        |cc: &CoherentConfiguration| -> Split { (vec![cc.clone()], (0..cc.degree()).map(|a| vec![a]).collect()) };
    if cc.degree() == 1 {
        return Ok(leaf(cc));
    }
    let node_order = match order {
        MergeOrder::Canonical => MergeOrder::Canonical,
        MergeOrder::Random(seed) => MergeOrder::Random(seed.wrapping_add(at as u64)),
    };
    let cert = algorithm_b_with(cc, node_order)?;
    nodes[at].pstar_size = cert.pstar.len();
    nodes[at].subsets_tested = cert.subsets_tested;
    if !cert.is_decomposable() {
        return Ok(leaf(cc));
    }

    // Coordinate i is the class of e_i′; for two members e_1′ = e_2.
    let p = &cert.decomposition;
    let (x1, class1) = cc.quotient(&p.complements()[0])?;
    let (x2, class2) = cc.quotient(&p.complements()[1])?;
    let pair_map: Vec<usize> = (0..cc.degree()).map(|a| class1[a] * x2.degree() + class2[a]).collect();
    if !verify_isomorphism(cc, &tensor_of(&[x1.clone(), x2.clone()])?, &pair_map)? {
        return Err(Error::VerificationFailed("certificate bijection is not an isomorphism".into()));
    }

    let left = nodes.len();
    let (f1, t1) = split(&x1, order, nodes)?;
    let right = nodes.len();
    let (f2, t2) = split(&x2, order, nodes)?;
    nodes[at].children = Some((left, right));
    nodes[at].recursion_calls = 2 + nodes[left].recursion_calls + nodes[right].recursion_calls;

    let tuples = (0..cc.degree()).map(|a| t1[class1[a]].iter().chain(&t2[class2[a]]).copied().collect()).collect();
    Ok((f1.into_iter().chain(f2).collect(), tuples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{conjugacy_class_scheme, random_relabel, trivial_scheme, GroupTable};

    #[test]
    fn indecomposable_input_is_returned_whole() {
        let x = trivial_scheme(5).unwrap();
        let d = algorithm_c(&x).unwrap();
        assert_eq!(d.factors(), &[x]);
        assert_eq!(d.product_map(), (0..5).collect::<Vec<_>>());
        assert_eq!(d.trace().recursion_calls(), 0);
    }

    #[test]
    fn relabeled_triple_product_splits_into_three() {
        let a = trivial_scheme(3).unwrap();
        let b = trivial_scheme(4).unwrap();
        let x = CoherentConfiguration::tensor(&[&a, &b, &a]).unwrap();
        let (y, _) = random_relabel(&x, 11).unwrap();
        let d = algorithm_c(&y).unwrap();
        let degrees: Vec<usize> = d.factors().iter().map(|f| f.degree()).collect();
        assert_eq!(degrees, vec![3, 3, 4]);
        assert_eq!(d.fingerprints(), vec![a.fingerprint(), a.fingerprint(), b.fingerprint()]);
        assert!(d.trace().pstar_bound_holds());
        assert!(d.trace().recursion_identity_holds());
        assert_eq!(d.trace().recursion_calls(), 4);
        assert_eq!(d.cartesian_members(&y).unwrap().len(), 3);
    }

    #[test]
    fn product_of_s3_schemes_factors_into_two() {
        let s3 = GroupTable::symmetric(3).unwrap();
        let x = conjugacy_class_scheme(&s3.direct_product(&s3).unwrap()).unwrap();
        let d = algorithm_c(&x).unwrap();
        let target = conjugacy_class_scheme(&s3).unwrap().fingerprint();
        assert_eq!(d.fingerprints(), vec![target.clone(), target]);
    }

    #[test]
    fn degree_one_is_a_single_factor() {
        let x = trivial_scheme(1).unwrap();
        let d = algorithm_c(&x).unwrap();
        assert_eq!(d.factors().len(), 1);
        assert_eq!(d.trace().pstar_size(), 0);
    }
}
