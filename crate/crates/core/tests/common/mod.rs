#![allow(dead_code)]

use cechpers::geometry::Point;
use cechpers::PointCloud;
use num_rational::BigRational;
use proptest::prelude::*;

/// Coordinates on a quarter-integer lattice, so ties and degenerate
/// configurations show up often.
pub fn coord() -> impl Strategy<Value = BigRational> {
    (-8i64..=8).prop_map(|k| BigRational::new(k.into(), 4.into()))
}

pub fn points(n: std::ops::RangeInclusive<usize>, dim: usize) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(coord(), dim), n)
}

/// `1..=max_n` points in the plane or in space.
pub fn cloud(max_n: usize) -> impl Strategy<Value = PointCloud> {
    (2usize..=3).prop_flat_map(move |dim| points(1..=max_n, dim).prop_map(move |p| PointCloud::new(dim, p).unwrap()))
}
