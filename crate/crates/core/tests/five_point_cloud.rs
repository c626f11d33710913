//! Five planar points, through geometry, nerves and barcodes.

use std::collections::BTreeSet;

use cechpers::complex::{build_filtration, nerve_at, Filtration};
use cechpers::geometry::parse_point_cloud;
use cechpers::persistence::{barcode, standard_reduction_oracle, Bar, GridSpec};
use cechpers::{ComplexKind, Field, SqRadius};

const CLOUD: &str = include_str!("../../../data/five_point_cloud.csv");
const SMALL: &str = include_str!("../../../data/five_point_small.json");
const LARGE: &str = include_str!("../../../data/five_point_large.json");

fn five_points(kind: ComplexKind, max_dim: usize) -> Filtration {
    build_filtration(&parse_point_cloud(CLOUD).unwrap(), kind, max_dim, None).unwrap()
}

fn sq(n: i64, d: i64) -> SqRadius {
    SqRadius::from_ratio(n, d)
}

fn simplices_at(f: &Filtration, at: &SqRadius) -> BTreeSet<Vec<usize>> {
    let n = nerve_at(f, at).unwrap();
    (0..=n.max_dim())
        .flat_map(|p| n.basis(p).iter().map(|s| s.vertices().to_vec()).collect::<Vec<_>>())
        .collect()
}

#[test]
fn entrance_radii() {
    let f = five_points(ComplexKind::Cech, 2);
    let expect = [
        (vec![0, 1], sq(1, 2)),
        (vec![0, 2], sq(1, 2)),
        (vec![1, 2], sq(1, 1)),
        (vec![1, 3], sq(389, 400)),
        (vec![2, 3], sq(389, 400)),
        (vec![1, 4], sq(257, 200)),
        (vec![3, 4], sq(25, 16)),
        (vec![0, 3], sq(729, 400)),
        (vec![0, 4], sq(677, 200)),
        (vec![2, 4], sq(757, 200)),
        (vec![0, 1, 2], sq(1, 1)),
        (vec![1, 2, 3], sq(151321, 115600)),
        (vec![1, 3, 4], sq(99973, 57800)),
    ];
    for (v, r) in expect {
        assert_eq!(f.sq_radius_of(&v), Some(&r), "simplex {v:?}");
    }
    assert_eq!(f.len(), 5 + 10 + 10);
}

#[test]
fn nerves_match_the_hand_built_complexes() {
    let f = five_points(ComplexKind::Cech, 3);
    let small = Filtration::from_fixture_json(SMALL).unwrap();
    let large = Filtration::from_fixture_json(LARGE).unwrap();
    assert_eq!(simplices_at(&f, &sq(1, 1)), simplices_at(&small, &sq(49, 25)));
    assert_eq!(simplices_at(&f, &sq(169, 100)), simplices_at(&large, &sq(9, 4)));
}

#[test]
fn cech_barcode() {
    let f = five_points(ComplexKind::Cech, 2);
    let b = barcode(&f, &GridSpec::AllCritical, 1, Field::Rational).unwrap();
    let zero = SqRadius::zero();
    let expected = vec![
        Bar::finite(0, zero.clone(), sq(1, 2)),
        Bar::finite(0, zero.clone(), sq(1, 2)),
        Bar::finite(0, zero.clone(), sq(389, 400)),
        Bar::finite(0, zero.clone(), sq(257, 200)),
        Bar::infinite(0, zero),
        Bar::finite(1, sq(389, 400), sq(151321, 115600)),
        Bar::finite(1, sq(25, 16), sq(99973, 57800)),
    ];
    assert_eq!(b.bars, expected);
    assert_eq!(standard_reduction_oracle(&f, 1, Field::Rational), expected);
    assert_eq!(b.zero_length, [0, 4]);
}

#[test]
fn rips_barcode_matches_oracle() {
    let f = five_points(ComplexKind::Rips, 3);
    for field in [Field::Rational, Field::prime(2).unwrap(), Field::prime(1_000_000_007).unwrap()] {
        let b = barcode(&f, &GridSpec::AllCritical, 2, field).unwrap();
        assert_eq!(b.bars, standard_reduction_oracle(&f, 2, field));
    }
}

#[test]
fn coarse_grid_barcode() {
    let f = five_points(ComplexKind::Cech, 2);
    let grid = GridSpec::Explicit(vec![sq(1, 1), sq(169, 100), sq(4, 1)]);
    let b = barcode(&f, &grid, 1, Field::Rational).unwrap();
    let h1: Vec<&Bar> = b.bars.iter().filter(|b| b.p == 1).collect();
    assert_eq!(
        h1,
        [&Bar::finite(1, sq(1, 1), sq(169, 100)), &Bar::finite(1, sq(169, 100), sq(4, 1))]
    );
}
