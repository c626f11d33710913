//! Point clouds, exact squared distances and minimum enclosing balls.
//!
//! Radii are handled as squared radii throughout so that every comparison
//! stays in the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, Scalar};
use crate::matrix::{numbered_labels, FieldMatrix};
use crate::reduction::{rank, solve_in_span};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("input contains no data rows")]
    EmptyInput,
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRows { line: usize, expected: usize, found: usize },
    #[error("line {line}, field {field}: {text:?} is not a decimal number")]
    NonNumericField { line: usize, field: usize, text: String },
    #[error("point index {index} out of range for a cloud of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("point of dimension {found} in a set of dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed CSV: {0}")]
    Malformed(String),
    #[error("minimum enclosing ball of an empty point set")]
    EmptyPointSet,
}

/// A squared radius, `ε²`, in squared data units.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SqRadius(BigRational);

impl SqRadius {
    /// Panics when `value` is negative.
    pub fn new(value: BigRational) -> Self {
        assert!(value >= BigRational::zero(), "negative squared radius");
        SqRadius(value)
    }

    pub fn zero() -> Self {
        SqRadius(BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(num.into(), den.into()))
    }

    /// Squared radius of a ball of the given (nonnegative) radius.
    pub fn from_radius(radius: &BigRational) -> Self {
        Self::new(radius * radius)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    /// The radius as a float, for display only.
    pub fn radius_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::INFINITY).sqrt()
    }

    /// `num/den`, always with an explicit denominator.
    pub fn exact_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Display for SqRadius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for SqRadius {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let q = parse_rational(s).ok_or_else(|| format!("{s:?} is not a rational number"))?;
        if q < BigRational::zero() {
            return Err(format!("squared radius {s:?} is negative"));
        }
        Ok(SqRadius(q))
    }
}

impl TryFrom<String> for SqRadius {
    type Error = String;
    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<SqRadius> for String {
    fn from(r: SqRadius) -> String {
        r.exact_string()
    }
}

/// Parses a decimal literal (`-3.75`, `1e-2`, `.5`) exactly.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let s = text.trim();
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], Some(&s[pos + 1..])),
        None => (s, None),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = all_digits.parse().ok()?;
    if negative {
        num = -num;
    }
    let mut exp: i64 = -(frac_part.len() as i64);
    if let Some(e) = exponent {
        let e = e.strip_prefix('+').unwrap_or(e);
        if e.is_empty() || e.len() > 6 {
            return None;
        }
        exp += e.parse::<i64>().ok()?;
    }
    if exp.unsigned_abs() > 4096 {
        return None;
    }
    let ten = BigInt::from(10);
    let scale = num_traits::pow(ten, exp.unsigned_abs() as usize);
    Some(if exp >= 0 {
        BigRational::from_integer(num * scale)
    } else {
        BigRational::new(num, scale)
    })
}

/// Parses `p/q` or a decimal literal exactly.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    match text.trim().split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => parse_decimal(text),
    }
}

/// A nonnegative decimal radius, returned squared.
pub fn parse_radius(text: &str) -> Option<SqRadius> {
    let r = parse_decimal(text)?;
    (r >= BigRational::zero()).then(|| SqRadius::from_radius(&r))
}

pub type Point = Vec<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCloud {
    dim: usize,
    points: Vec<Point>,
}

impl PointCloud {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self, GeometryError> {
        for p in &points {
            if p.len() != dim {
                return Err(GeometryError::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
        }
        Ok(PointCloud { dim, points })
    }

    pub fn from_f64_rows(rows: &[Vec<f64>]) -> Result<Self, GeometryError> {
        let dim = rows.first().map_or(0, Vec::len);
        let points = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_float(x).expect("finite coordinate")).collect())
            .collect();
        Self::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Result<&Point, GeometryError> {
        self.points.get(i).ok_or(GeometryError::IndexOutOfRange {
            index: i,
            len: self.points.len(),
        })
    }
}

/// Parses comma-separated decimal rows. Blank lines are skipped, and the
/// first row is treated as a header when any of its fields is not numeric.
pub fn parse_point_cloud(text: &str) -> Result<PointCloud, GeometryError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<(usize, csv::StringRecord)> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| GeometryError::Malformed(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        rows.push((line, record));
    }
    if let Some((_, first)) = rows.first() {
        if first.iter().any(|f| parse_decimal(f).is_none()) {
            rows.remove(0);
        }
    }
    let Some((_, first)) = rows.first() else {
        return Err(GeometryError::EmptyInput);
    };
    let dim = first.len();
    let mut points = Vec::with_capacity(rows.len());
    for (line, fields) in rows {
        if fields.len() != dim {
            return Err(GeometryError::RaggedRows {
                line,
                expected: dim,
                found: fields.len(),
            });
        }
        let point = fields
            .iter()
            .enumerate()
            .map(|(k, f)| {
                parse_decimal(f).ok_or_else(|| GeometryError::NonNumericField {
                    line,
                    field: k + 1,
                    text: f.to_string(),
                })
            })
            .collect::<Result<Point, _>>()?;
        points.push(point);
    }
    PointCloud::new(dim, points)
}

pub fn sq_distance(a: &Point, b: &Point) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| {
        let d = x - y;
        acc + &d * &d
    })
}

/// Squared radius at which the closed balls around `p_i` and `p_j` first meet: `|p_i - p_j|² / 4`.
pub fn edge_sq_radius(cloud: &PointCloud, i: usize, j: usize) -> Result<SqRadius, GeometryError> {
    let d = sq_distance(cloud.point(i)?, cloud.point(j)?);
    Ok(SqRadius::new(d / BigRational::from_integer(4.into())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub center: Point,
    pub sq_radius: SqRadius,
}

impl Ball {
    pub fn contains(&self, p: &Point) -> bool {
        sq_distance(&self.center, p) <= *self.sq_radius.value()
    }
}

/// Smallest closed ball containing `points`, by move-to-front Welzl recursion.
pub fn min_enclosing_ball(points: &[Point]) -> Result<Ball, GeometryError> {
    let first = points.first().ok_or(GeometryError::EmptyPointSet)?;
    let dim = first.len();
    for p in points {
        if p.len() != dim {
            return Err(GeometryError::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
    }
    let mut order: Vec<&Point> = points.iter().collect();
    let mut support = Vec::with_capacity(dim + 1);
    let ball = mtf_ball(&mut order, points.len(), &mut support, dim);
    Ok(ball.expect("a nonempty point set has an enclosing ball"))
}

pub fn min_enclosing_ball_sq_radius(points: &[Point]) -> Result<SqRadius, GeometryError> {
    Ok(min_enclosing_ball(points)?.sq_radius)
}

fn mtf_ball<'a>(order: &mut Vec<&'a Point>, end: usize, support: &mut Vec<&'a Point>, dim: usize) -> Option<Ball> {
    let mut ball = ball_through(support);
    if support.len() == dim + 1 {
        return ball;
    }
    let mut i = 0;
    while i < end {
        let p = order[i];
        if !ball.as_ref().is_some_and(|b| b.contains(p)) {
            support.push(p);
            ball = mtf_ball(order, i, support, dim);
            support.pop();
            let moved = order.remove(i);
            order.insert(0, moved);
        }
        i += 1;
    }
    ball
}

/// Smallest ball with every point of `support` on its boundary; its centre
/// lies in the affine hull of `support`.
fn ball_through(support: &[&Point]) -> Option<Ball> {
    let (&origin, rest) = support.split_first()?;
    // Greedy affinely independent subset.
    let mut dirs: Vec<Point> = Vec::new();
    for &p in rest {
        let d: Point = p.iter().zip(origin).map(|(a, b)| a - b).collect();
        let mut trial = dirs.clone();
        trial.push(d.clone());
        if rank(&rational_matrix(&trial)) == trial.len() {
            dirs = trial;
        }
    }
    if dirs.is_empty() {
        return Some(Ball {
            center: origin.clone(),
            sq_radius: SqRadius::zero(),
        });
    }
    // Gram system G λ = b with G_ij = d_i·d_j and b_i = |d_i|² / 2.
    let k = dirs.len();
    let field = Field::Rational;
    let half = BigRational::new(1.into(), 2.into());
    let mut gram = FieldMatrix::zeros_unchecked(field, numbered_labels("d", k), numbered_labels("l", k));
    let mut rhs = Vec::with_capacity(k);
    for i in 0..k {
        for j in 0..k {
            gram.set(i, j, Scalar::Rational(dot(&dirs[i], &dirs[j])));
        }
        rhs.push(Scalar::Rational(dot(&dirs[i], &dirs[i]) * &half));
    }
    let lambda = solve_in_span(&gram, &rhs)
        .expect("square system")
        .expect("Gram matrix of independent directions is invertible");
    let mut center = origin.clone();
    for (l, d) in lambda.iter().zip(&dirs) {
        let l = l.to_rational();
        for (c, x) in center.iter_mut().zip(d) {
            *c += &l * x;
        }
    }
    let sq = sq_distance(&center, origin);
    Some(Ball {
        center,
        sq_radius: SqRadius::new(sq),
    })
}

fn dot(a: &Point, b: &Point) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

fn rational_matrix(rows: &[Point]) -> FieldMatrix {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m = FieldMatrix::zeros_unchecked(Field::Rational, numbered_labels("r", rows.len()), numbered_labels("c", cols));
    for (i, r) in rows.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            m.set(i, j, Scalar::Rational(x.clone()));
        }
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Cech,
    Rips,
}

impl FromStr for ComplexKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cech" => Ok(ComplexKind::Cech),
            "rips" => Ok(ComplexKind::Rips),
            other => Err(format!("unknown complex kind {other:?} (expected cech or rips)")),
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Cech => "cech",
            ComplexKind::Rips => "rips",
        })
    }
}

/// Entrance squared radius of the simplex on `vertices`.
pub fn simplex_sq_radius(cloud: &PointCloud, vertices: &[usize], kind: ComplexKind) -> Result<SqRadius, GeometryError> {
    let pts = vertices.iter().map(|&v| cloud.point(v).cloned()).collect::<Result<Vec<_>, _>>()?;
    if pts.len() <= 1 {
        return Ok(SqRadius::zero());
    }
    match kind {
        ComplexKind::Cech => min_enclosing_ball_sq_radius(&pts),
        ComplexKind::Rips => {
            let mut best = SqRadius::zero();
            for a in 0..vertices.len() {
                for b in a + 1..vertices.len() {
                    best = best.max(edge_sq_radius(cloud, vertices[a], vertices[b])?);
                }
            }
            Ok(best)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pt(xs: &[(i64, i64)]) -> Point {
        xs.iter().map(|&(n, d)| q(n, d)).collect()
    }

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!(parse_decimal("3.7"), Some(q(37, 10)));
        assert_eq!(parse_decimal("-0.25"), Some(q(-1, 4)));
        assert_eq!(parse_decimal(".5"), Some(q(1, 2)));
        assert_eq!(parse_decimal("2."), Some(q(2, 1)));
        assert_eq!(parse_decimal("1e-2"), Some(q(1, 100)));
        assert_eq!(parse_decimal("1.5E+1"), Some(q(15, 1)));
        for bad in ["", ".", "-", "x", "1.2.3", "1e", "e5", "--1", "1e99999999"] {
            assert_eq!(parse_decimal(bad), None, "{bad:?}");
        }
        assert_eq!(parse_rational("151321/115600"), Some(q(151321, 115600)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn header_is_detected() {
        let c = parse_point_cloud("x,y\n1,2\n").unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.points()[0], pt(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn single_origin_row() {
        let c = parse_point_cloud("0,0").unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.points()[0], pt(&[(0, 1), (0, 1)]));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_point_cloud(""), Err(GeometryError::EmptyInput));
        assert_eq!(parse_point_cloud("x,y\n\n"), Err(GeometryError::EmptyInput));
        assert_eq!(
            parse_point_cloud("1,2\n3\n"),
            Err(GeometryError::RaggedRows {
                line: 2,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_point_cloud("1,2\n3,abc\n"),
            Err(GeometryError::NonNumericField {
                line: 2,
                field: 2,
                text: "abc".into()
            })
        );
    }

    #[test]
    fn ball_of_one_and_two_points() {
        let a = pt(&[(1, 1), (2, 1)]);
        let b = pt(&[(3, 1), (2, 1)]);
        assert_eq!(min_enclosing_ball_sq_radius(&[a.clone()]).unwrap(), SqRadius::zero());
        let ball = min_enclosing_ball(&[a, b]).unwrap();
        assert_eq!(ball.sq_radius, SqRadius::from_ratio(1, 1));
        assert_eq!(ball.center, pt(&[(2, 1), (2, 1)]));
    }

    #[test]
    fn obtuse_triangle_uses_longest_edge() {
        let pts = [pt(&[(0, 1), (0, 1)]), pt(&[(4, 1), (0, 1)]), pt(&[(2, 1), (1, 2)])];
        assert_eq!(min_enclosing_ball_sq_radius(&pts).unwrap(), SqRadius::from_ratio(4, 1));
    }

    #[test]
    fn collinear_and_duplicate_points() {
        let pts = [pt(&[(0, 1)]), pt(&[(3, 1)]), pt(&[(1, 1)]), pt(&[(3, 1)])];
        assert_eq!(min_enclosing_ball_sq_radius(&pts).unwrap(), SqRadius::from_ratio(9, 4));
        let dup = [pt(&[(1, 1), (1, 1)]), pt(&[(1, 1), (1, 1)])];
        assert_eq!(min_enclosing_ball_sq_radius(&dup).unwrap(), SqRadius::zero());
    }

    #[test]
    fn cocircular_square_in_three_dimensions() {
        let pts = [
            pt(&[(1, 1), (0, 1), (0, 1)]),
            pt(&[(0, 1), (1, 1), (0, 1)]),
            pt(&[(-1, 1), (0, 1), (0, 1)]),
            pt(&[(0, 1), (-1, 1), (0, 1)]),
        ];
        assert_eq!(min_enclosing_ball_sq_radius(&pts).unwrap(), SqRadius::from_ratio(1, 1));
    }

    #[test]
    fn mismatched_dimensions() {
        let pts = [pt(&[(1, 1)]), pt(&[(1, 1), (2, 1)])];
        assert!(matches!(
            min_enclosing_ball(&pts),
            Err(GeometryError::DimensionMismatch { expected: 1, found: 2 })
        ));
        assert_eq!(min_enclosing_ball(&[]), Err(GeometryError::EmptyPointSet));
    }

    #[test]
    fn index_out_of_range() {
        let c = parse_point_cloud("0,0\n1,1").unwrap();
        assert_eq!(
            edge_sq_radius(&c, 0, 5),
            Err(GeometryError::IndexOutOfRange { index: 5, len: 2 })
        );
    }
}
