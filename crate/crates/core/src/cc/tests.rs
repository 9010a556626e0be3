use proptest::prelude::*;

use super::*;
use crate::constructors::{conjugacy_class_scheme, random_relabel, trivial_scheme, GroupTable};

fn trivial3() -> CoherentConfiguration {
    CoherentConfiguration::from_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap()
}

/// `|α r ∩ β s*|` counted directly at the first pair of color `t`.
fn count_at_witness(cc: &CoherentConfiguration, r: Color, s: Color, t: Color) -> usize {
    let (a, b) = cc.witness(t);
    (0..cc.degree()).filter(|&g| cc.cell(a, g) == r && cc.cell(g, b) == s).count()
}

#[test]
fn smallest_trivial_scheme() {
    let x = trivial3();
    assert_eq!(x.rank(), 2);
    assert_eq!((x.valency(Color(0)), x.valency(Color(1))), (1, 2));
    assert!(x.is_thick());
    assert_eq!(x.d_value(Color(1)), 4);
    assert_eq!(x.d_value(Color(0)), 1);
    assert_eq!(x.intersection_number(Color(1), Color(1), Color(0)).unwrap(), 2);
    assert_eq!(x.intersection_number(Color(1), Color(1), Color(1)).unwrap(), 1);
}

#[test]
fn two_point_scheme_is_not_thick() {
    let x = CoherentConfiguration::from_rows(&[[0, 1], [1, 0]]).unwrap();
    assert!(x.is_thin(Color(1)));
    assert!(!x.is_thick());
}

#[test]
fn corrupted_transpose_is_rejected() {
    let err = CoherentConfiguration::from_rows(&[[0, 1, 1], [1, 0, 1], [2, 1, 0]]).unwrap_err();
    assert_eq!(err.axiom(), Some("C2"));
}

#[test]
fn off_diagonal_reflexive_color_is_rejected() {
    let err = CoherentConfiguration::from_rows(&[[0, 0], [1, 0]]).unwrap_err();
    assert_eq!(err.axiom(), Some("C1"));
}

#[test]
fn inconsistent_intersection_numbers_are_rejected() {
    // A 4-cycle whose diagonals share the edge color.
    let rows = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 2], [1, 1, 2, 0]];
    let err = CoherentConfiguration::from_rows(&rows).unwrap_err();
    assert!(err.axiom() == Some("C3"), "{err}");
}

#[test]
fn gaps_in_colors_and_bad_shapes_are_rejected() {
    let err = CoherentConfiguration::from_rows(&[[0, 2], [2, 0]]).unwrap_err();
    assert!(matches!(err, Error::NonContiguousColors { missing: 1, .. }));
    assert!(matches!(ColorMatrix::from_rows(&[vec![0, 1], vec![1]]), Err(Error::NotSquare { row: 1, .. })));
    assert_eq!(ColorMatrix::from_rows::<Vec<u32>>(&[]), Err(Error::InvalidDegree));
}

#[test]
fn degree_cap_is_enforced() {
    let options = BuildOptions { max_degree: 2, check: CheckMode::Full };
    let err = CoherentConfiguration::from_matrix_with(trivial3().matrix().clone(), options).unwrap_err();
    assert_eq!(err, Error::DegreeOverflow { degree: 3, max: 2 });
    let t = trivial3();
    assert!(matches!(CoherentConfiguration::tensor_with(&[&t, &t], options), Err(Error::DegreeOverflow { .. })));
}

#[test]
fn fast_mode_accepts_valid_input() {
    let x =
        CoherentConfiguration::from_matrix_with(trivial3().matrix().clone(), BuildOptions::default().fast()).unwrap();
    assert_eq!(x.rank(), 2);
}

#[test]
fn degree_one_is_trivial_and_thick() {
    let x = CoherentConfiguration::from_rows(&[[0]]).unwrap();
    assert!(x.is_trivial());
    assert!(x.is_thick());
    assert_eq!(x.rank(), 1);
}

#[test]
fn non_homogeneous_fibers_and_supports() {
    // Two fibers {0} and {1, 2}.
    let rows = [[0, 1, 1], [2, 3, 4], [2, 4, 3]];
    let x = CoherentConfiguration::from_rows(&rows).unwrap();
    assert_eq!(x.fibers(), &[vec![0], vec![1, 2]]);
    assert_eq!(x.support(Color(1)), (0, 1));
    assert_eq!(x.transpose_color(Color(1)), Color(2));
    assert_eq!((x.valency(Color(1)), x.valency(Color(2))), (2, 1));
    assert!(!x.is_homogeneous());
}

#[test]
fn tensor_multiplies_degrees_ranks_and_valencies() {
    let a = trivial3();
    let b = trivial_scheme(4).unwrap();
    let x = CoherentConfiguration::tensor(&[&a, &b]).unwrap();
    assert_eq!((x.degree(), x.rank()), (12, 4));
    for p in 0..12 {
        for q in 0..12 {
            let (s1, s2) = (a.cell(p / 4, q / 4), b.cell(p % 4, q % 4));
            assert_eq!(x.valency(x.cell(p, q)), a.valency(s1) * b.valency(s2));
        }
    }
    let sq = CoherentConfiguration::tensor(&[&a, &a]).unwrap();
    assert_eq!(sq.d_value(sq.cell(0, 4)), 16);
    assert_eq!(CoherentConfiguration::tensor(&[&a]).unwrap(), a);
}

#[test]
fn quotients_by_extreme_parabolics() {
    let x = conjugacy_class_scheme(&GroupTable::symmetric(3).unwrap()).unwrap();
    let (q, proj) = x.quotient(&x.discrete_parabolic()).unwrap();
    assert_eq!(q, x);
    assert_eq!(proj, (0..6).collect::<Vec<_>>());
    let (q, proj) = x.quotient(&x.full_parabolic()).unwrap();
    assert_eq!((q.degree(), q.rank()), (1, 1));
    assert!(proj.iter().all(|&c| c == 0));
}

#[test]
fn quotient_by_a_coordinate_recovers_the_factor() {
    let a = trivial3();
    let b = trivial_scheme(4).unwrap();
    let x = CoherentConfiguration::tensor(&[&a, &b]).unwrap();
    // Pairs with equal first coordinate.
    let e = x.equivalence_closure(&x.basis_relation(x.cell(0, 1))).unwrap();
    let (q, proj) = x.quotient(&e).unwrap();
    assert_eq!(q.fingerprint(), a.fingerprint());
    assert_eq!(proj, (0..12).map(|p| p / 4).collect::<Vec<_>>());
}

#[test]
fn relabel_checks_its_argument() {
    let x = trivial3();
    assert_eq!(x.relabel(&[0, 1, 2]).unwrap(), x);
    assert_eq!(x.relabel(&[2, 0, 1]).unwrap(), x);
    assert_eq!(x.relabel(&[0, 0, 1]).unwrap_err(), Error::NotABijection { degree: 3 });
    assert_eq!(x.relabel(&[0, 1]).unwrap_err(), Error::NotABijection { degree: 3 });
}

#[test]
fn fingerprints_distinguish_degrees() {
    let f = trivial3().fingerprint();
    assert_eq!((f.degree, f.rank, f.valencies.clone()), (3, 2, vec![1, 2]));
    assert_ne!(f, trivial_scheme(4).unwrap().fingerprint());
}

#[test]
fn canonical_numbering_puts_reflexive_colors_first() {
    let cells = canonicalize_colors(3, &[7, 5, 5, 5, 7, 5, 5, 5, 7]);
    assert_eq!(cells, vec![0, 1, 1, 1, 0, 1, 1, 1, 0]);
}

#[test]
fn structure_constants_match_direct_counts() {
    let s4 = conjugacy_class_scheme(&GroupTable::symmetric(4).unwrap()).unwrap();
    for x in [trivial3(), s4] {
        for r in x.colors() {
            for s in x.colors() {
                for t in x.colors() {
                    assert_eq!(x.intersection_number(r, s, t).unwrap(), count_at_witness(&x, r, s, t));
                }
            }
        }
    }
}

#[test]
fn color_out_of_range_is_reported() {
    let x = trivial3();
    assert_eq!(x.intersection_number(Color(0), Color(2), Color(0)), Err(Error::ColorOutOfRange { color: 2, rank: 2 }));
}

proptest! {
    #[test]
    fn relabeling_preserves_the_fingerprint(seed in any::<u64>()) {
        let x = conjugacy_class_scheme(&GroupTable::symmetric(3).unwrap()).unwrap();
        let (y, _) = random_relabel(&x, seed).unwrap();
        prop_assert_eq!(x.fingerprint(), y.fingerprint());
    }

    #[test]
    fn transpose_is_an_involution_and_fibers_follow_the_diagonal(n in 2usize..6, m in 2usize..5) {
        let x = CoherentConfiguration::tensor(&[&trivial_scheme(n).unwrap(), &trivial_scheme(m).unwrap()]).unwrap();
        for c in x.colors() {
            prop_assert_eq!(x.transpose_color(x.transpose_color(c)), c);
        }
        for a in 0..x.degree() {
            for b in 0..x.degree() {
                prop_assert_eq!(x.cell(b, a), x.transpose_color(x.cell(a, b)));
                prop_assert_eq!(x.cell(a, a) == x.cell(b, b), x.fiber_of(a) == x.fiber_of(b));
            }
        }
    }

    #[test]
    fn valency_sum_identity(n in 3usize..6, m in 3usize..5) {
        let x = CoherentConfiguration::tensor(&[&trivial_scheme(n).unwrap(), &trivial_scheme(m).unwrap()]).unwrap();
        for r in x.colors() {
            for s in x.colors() {
                if x.support(r).1 != x.support(s).0 {
                    continue;
                }
                let sum: usize = x.colors().map(|t| x.valency(t) * x.intersection_number(r, s, t).unwrap()).sum();
                prop_assert_eq!(sum, x.valency(r) * x.valency(s));
            }
        }
    }
}
