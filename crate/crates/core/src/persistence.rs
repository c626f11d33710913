//! Persistence across a grid of resolutions.
//!
//! Bases are reduced once at the largest grid value. Every smaller value is
//! read off the same transformations: coordinates of simplices missing at
//! that value are zeroed, the resulting spanning set is rank-filtered, and
//! the restricted row reduction picks the image subset again.
//!
//! Restriction maps run from larger to smaller radii. Bars are reported in
//! increasing radius as half-open intervals `[birth, death)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::cohomology::{class_membership, CohomologyBasis};
use crate::complex::{coboundary_matrix, nerve_at, ComplexError, Filtration, Nerve, Simplex};
use crate::field::{Field, Scalar};
use crate::geometry::SqRadius;
use crate::matrix::{numbered_labels, FieldMatrix};
use crate::reduction::{compatible_bases, compatible_from_spanning, nullspace, rank, LabeledVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PersistenceError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("the resolution grid is empty")]
    EmptyGrid,
    #[error("grid values must be strictly increasing ({previous} is followed by {next})")]
    GridNotIncreasing { previous: SqRadius, next: SqRadius },
    #[error("squared radius {0} is not on the grid")]
    NotOnGrid(SqRadius),
    #[error("induced maps go from a larger to a smaller radius (got {from} to {to})")]
    BadOrder { from: SqRadius, to: SqRadius },
    #[error("dimension {max_p} exceeds the filtration dimension {max_dim}")]
    DimensionTooHigh { max_p: usize, max_dim: usize },
}

/// Which resolutions to sample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridSpec {
    /// Every distinct entrance radius of the filtration.
    AllCritical,
    Explicit(Vec<SqRadius>),
}

impl GridSpec {
    pub fn resolve(&self, filtration: &Filtration) -> Result<Vec<SqRadius>, PersistenceError> {
        let grid = match self {
            GridSpec::AllCritical => {
                let mut g = filtration.critical_values();
                if g.is_empty() {
                    g.push(SqRadius::zero());
                }
                g
            }
            GridSpec::Explicit(values) => values.clone(),
        };
        check_grid(&grid)?;
        Ok(grid)
    }
}

fn check_grid(grid: &[SqRadius]) -> Result<(), PersistenceError> {
    if grid.is_empty() {
        return Err(PersistenceError::EmptyGrid);
    }
    for w in grid.windows(2) {
        if w[0] >= w[1] {
            return Err(PersistenceError::GridNotIncreasing {
                previous: w[0].clone(),
                next: w[1].clone(),
            });
        }
    }
    Ok(())
}

/// Nerves and replayed cohomology bases on an increasing grid.
#[derive(Debug, Clone)]
pub struct ResolutionChain {
    field: Field,
    max_p: usize,
    grid: Vec<SqRadius>,
    nerves: Vec<Nerve>,
    /// `Q·P^{-1}` at the largest grid value, per dimension.
    transforms: Vec<FieldMatrix>,
    /// Indexed by grid position, then dimension.
    bases: Vec<Vec<CohomologyBasis>>,
}

impl ResolutionChain {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn max_p(&self) -> usize {
        self.max_p
    }

    pub fn grid(&self) -> &[SqRadius] {
        &self.grid
    }

    pub fn nerves(&self) -> &[Nerve] {
        &self.nerves
    }

    pub fn nerve(&self, index: usize) -> &Nerve {
        &self.nerves[index]
    }

    pub fn transform(&self, p: usize) -> &FieldMatrix {
        &self.transforms[p]
    }

    pub fn basis(&self, index: usize, p: usize) -> &CohomologyBasis {
        &self.bases[index][p]
    }

    pub fn bases(&self) -> &[Vec<CohomologyBasis>] {
        &self.bases
    }

    pub fn index_of(&self, sq_radius: &SqRadius) -> Result<usize, PersistenceError> {
        self.grid
            .binary_search(sq_radius)
            .map_err(|_| PersistenceError::NotOnGrid(sq_radius.clone()))
    }

    /// Betti numbers `β^0 … β^max_p` at a grid position.
    pub fn betti(&self, index: usize) -> Vec<usize> {
        self.bases[index].iter().map(CohomologyBasis::betti).collect()
    }
}

/// Rows of `m` belonging to simplices absent from `nerve` are set to zero.
fn zero_absent_rows(m: &FieldMatrix, top_basis: &[Simplex], nerve: &Nerve) -> FieldMatrix {
    let mut out = m.clone();
    let zero = m.field().zero();
    for (i, s) in top_basis.iter().enumerate() {
        if !nerve.contains(s) {
            for j in 0..m.cols() {
                out.set(i, j, zero.clone());
            }
        }
    }
    out
}

/// Reduces at the largest grid value and replays the transformations at every
/// other grid value, for dimensions `0..=max_p`.
pub fn replay_chain(
    filtration: &Filtration,
    grid: &[SqRadius],
    field: Field,
    max_p: usize,
) -> Result<ResolutionChain, PersistenceError> {
    check_grid(grid)?;
    if max_p > filtration.max_dim() {
        return Err(PersistenceError::DimensionTooHigh {
            max_p,
            max_dim: filtration.max_dim(),
        });
    }
    let nerves = grid.iter().map(|g| nerve_at(filtration, g)).collect::<Result<Vec<_>, _>>()?;
    let top = nerves.last().expect("grid is nonempty");
    let deltas: Vec<FieldMatrix> = (0..=max_p).map(|p| coboundary_matrix(top, p, field)).collect();
    let incoming = |p: usize| -> FieldMatrix {
        if p == 0 {
            FieldMatrix::zeros(field, top.labels(0), Vec::new()).expect("distinct labels")
        } else {
            deltas[p - 1].clone()
        }
    };
    let mut transforms = Vec::new();
    let mut inverses = Vec::new();
    for p in 0..=max_p {
        let pair = compatible_bases(&deltas[p], &incoming(p)).expect("coboundaries compose to zero");
        inverses.push(pair.transform_inverse());
        transforms.push(pair.transform().clone());
    }
    let mut bases = Vec::with_capacity(grid.len());
    for nerve in &nerves {
        let mut per_p = Vec::with_capacity(max_p + 1);
        for p in 0..=max_p {
            let w = &transforms[p];
            let x = zero_absent_rows(w, top.basis(p), nerve);
            let z = zero_absent_rows(&deltas[p], top.basis(p + 1), nerve);
            let y = z.mul(w).expect("δ^p and W_p are compatible");
            let z_in = zero_absent_rows(&incoming(p), top.basis(p), nerve);
            let n = inverses[p].mul(&z_in).expect("W_p^{-1} and δ^{p-1} are compatible");
            let pair = compatible_from_spanning(&x, &y, &n);
            let present: Vec<usize> = top
                .basis(p)
                .iter()
                .enumerate()
                .filter(|(_, s)| nerve.contains(s))
                .map(|(i, _)| i)
                .collect();
            let kernel_basis = pair
                .kernel_basis()
                .iter()
                .map(|v| LabeledVector {
                    label: v.label.clone(),
                    coords: present.iter().map(|&i| v.coords[i].clone()).collect(),
                })
                .collect();
            per_p.push(CohomologyBasis::from_parts(
                p,
                nerve.sq_radius().clone(),
                coboundary_matrix(nerve, p, field),
                kernel_basis,
                pair.image_subset().to_vec(),
                pair.quotient().to_vec(),
            ));
        }
        bases.push(per_p);
    }
    Ok(ResolutionChain {
        field,
        max_p,
        grid: grid.to_vec(),
        nerves,
        transforms,
        bases,
    })
}

/// The map `Ȟ^p(source) → Ȟ^p(target)` induced by restriction, in quotient bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMap {
    pub p: usize,
    pub source_sq: SqRadius,
    pub target_sq: SqRadius,
    pub matrix: FieldMatrix,
}

/// Restricts a cochain on `source` to the simplices of `target`.
pub fn restrict_cochain(coords: &[Scalar], source: &Nerve, target: &Nerve, p: usize) -> Vec<Scalar> {
    target
        .basis(p)
        .iter()
        .map(|s| coords[source.position(s).expect("target nerve is a subcomplex")].clone())
        .collect()
}

fn induced_between(chain: &ResolutionChain, p: usize, s: usize, t: usize) -> FieldMatrix {
    let src = chain.basis(s, p);
    let tgt = chain.basis(t, p);
    let row_labels = tgt.quotient_reps().iter().map(|v| v.label.clone()).collect();
    let col_labels = src.quotient_reps().iter().map(|v| v.label.clone()).collect();
    let columns: Vec<Vec<Scalar>> = src
        .quotient_reps()
        .iter()
        .map(|v| {
            let r = restrict_cochain(&v.coords, chain.nerve(s), chain.nerve(t), p);
            class_membership(&r, tgt)
                .expect("restricted cochain has the target dimension")
                .expect("restriction of a cocycle is a cocycle")
        })
        .collect();
    FieldMatrix::from_columns(chain.field, row_labels, col_labels, &columns).expect("quotient dimensions agree")
}

pub fn induced_map(
    chain: &ResolutionChain,
    p: usize,
    source_sq: &SqRadius,
    target_sq: &SqRadius,
) -> Result<InducedMap, PersistenceError> {
    if target_sq >= source_sq {
        return Err(PersistenceError::BadOrder {
            from: source_sq.clone(),
            to: target_sq.clone(),
        });
    }
    if p > chain.max_p {
        return Err(PersistenceError::DimensionTooHigh {
            max_p: p,
            max_dim: chain.max_p,
        });
    }
    let s = chain.index_of(source_sq)?;
    let t = chain.index_of(target_sq)?;
    Ok(InducedMap {
        p,
        source_sq: source_sq.clone(),
        target_sq: target_sq.clone(),
        matrix: induced_between(chain, p, s, t),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EventKind {
    Persist,
    Birth,
    Death,
    Merge,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Persist => "persist",
            EventKind::Birth => "birth",
            EventKind::Death => "death",
            EventKind::Merge => "merge",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PersistenceEvent {
    pub kind: EventKind,
    pub p: usize,
    pub sq_radius: SqRadius,
    /// Nonzero terms of the representative cochain, by simplex label.
    pub rep: Vec<(String, Scalar)>,
}

fn terms(coords: &[Scalar], labels: &[String]) -> Vec<(String, Scalar)> {
    coords
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| (l.clone(), c.clone()))
        .collect()
}

fn combine(reps: &[&LabeledVector], coeffs: &[Scalar], len: usize, field: Field) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (v, c) in reps.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(&v.coords) {
            *o = &*o + &(c * x);
        }
    }
    out
}

/// Vertex sets of the connected components, read off the `H^0` basis: two
/// vertices lie in one component exactly when every locally constant
/// function agrees on them.
pub fn components(basis: &CohomologyBasis) -> Vec<Vec<usize>> {
    assert_eq!(basis.p, 0, "components come from degree zero");
    let mut groups: Vec<(Vec<Scalar>, Vec<usize>)> = Vec::new();
    let mut lookup: HashMap<Vec<Scalar>, usize> = HashMap::new();
    let n = basis.cochain_labels.len();
    for v in 0..n {
        let sig: Vec<Scalar> = basis.kernel_basis.iter().map(|k| k.coords[v].clone()).collect();
        match lookup.get(&sig) {
            Some(&g) => groups[g].1.push(v),
            None => {
                lookup.insert(sig.clone(), groups.len());
                groups.push((sig, vec![v]));
            }
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

/// Events on every adjacent pair of grid values, stamped at the larger one.
///
/// Classes killed by restriction are born there. Target classes outside the
/// image die there; in degree zero these are merges, and of the components
/// that merge the one holding the smallest vertex survives.
pub fn classify(chain: &ResolutionChain, p: usize) -> Vec<PersistenceEvent> {
    let field = chain.field;
    let mut events = Vec::new();
    for t in 0..chain.grid.len().saturating_sub(1) {
        let s = t + 1;
        let (src, tgt) = (chain.basis(s, p), chain.basis(t, p));
        let stamp = chain.grid[s].clone();
        let m = induced_between(chain, p, s, t);
        let src_reps = src.quotient_reps();
        let tgt_reps = tgt.quotient_reps();

        for k in nullspace(&m) {
            let v = combine(&src_reps, &k, src.cochain_labels.len(), field);
            events.push(PersistenceEvent {
                kind: EventKind::Birth,
                p,
                sq_radius: stamp.clone(),
                rep: terms(&v, &src.cochain_labels),
            });
        }

        let mut span = FieldMatrix::zeros(field, numbered_labels("r", m.rows()), Vec::new()).expect("labels");
        for j in 0..m.cols() {
            let trial = hcat(&span, &m.column(j), field);
            if rank(&trial) > span.cols() {
                span = trial;
                events.push(PersistenceEvent {
                    kind: EventKind::Persist,
                    p,
                    sq_radius: stamp.clone(),
                    rep: terms(&src_reps[j].coords, &src.cochain_labels),
                });
            }
        }

        if p == 0 {
            let small = components(tgt);
            let large = components(src);
            for comp in &large {
                let mut inside: Vec<&Vec<usize>> = small.iter().filter(|c| comp.contains(&c[0])).collect();
                inside.sort_by_key(|c| c[0]);
                for dying in inside.iter().skip(1) {
                    let mut coords = vec![field.zero(); tgt.cochain_labels.len()];
                    for &v in dying.iter() {
                        coords[v] = field.one();
                    }
                    events.push(PersistenceEvent {
                        kind: EventKind::Merge,
                        p,
                        sq_radius: stamp.clone(),
                        rep: terms(&coords, &tgt.cochain_labels),
                    });
                }
            }
        } else {
            for (k, rep) in tgt_reps.iter().enumerate() {
                let mut e = vec![field.zero(); m.rows()];
                e[k] = field.one();
                let trial = hcat(&span, &e, field);
                if rank(&trial) > span.cols() {
                    span = trial;
                    events.push(PersistenceEvent {
                        kind: EventKind::Death,
                        p,
                        sq_radius: stamp.clone(),
                        rep: terms(&rep.coords, &tgt.cochain_labels),
                    });
                }
            }
        }
    }
    events
}

fn hcat(m: &FieldMatrix, col: &[Scalar], field: Field) -> FieldMatrix {
    let mut cols: Vec<Vec<Scalar>> = (0..m.cols()).map(|j| m.column(j)).collect();
    cols.push(col.to_vec());
    FieldMatrix::from_columns(
        field,
        m.row_labels().to_vec(),
        numbered_labels("c", cols.len()),
        &cols,
    )
    .expect("column length matches")
}

/// A half-open interval `[birth, death)`; `death = None` never dies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bar {
    pub p: usize,
    pub birth: SqRadius,
    pub death: Option<SqRadius>,
}

impl Bar {
    pub fn finite(p: usize, birth: SqRadius, death: SqRadius) -> Self {
        Bar {
            p,
            birth,
            death: Some(death),
        }
    }

    pub fn infinite(p: usize, birth: SqRadius) -> Self {
        Bar { p, birth, death: None }
    }

    pub fn is_infinite(&self) -> bool {
        self.death.is_none()
    }
}

impl Ord for Bar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then_with(|| self.birth.cmp(&other.birth))
            .then_with(|| match (&self.death, &other.death) {
                (Some(a), Some(b)) => a.cmp(b),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => Ordering::Equal,
            })
    }
}

impl PartialOrd for Bar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Barcode {
    pub grid: Vec<SqRadius>,
    /// Sorted by dimension, birth, then death.
    pub bars: Vec<Bar>,
    /// Per dimension, intervals that open and close at the same grid value.
    pub zero_length: Vec<usize>,
}

/// `rank(Ȟ^p(g_j) → Ȟ^p(g_i))` for all `i ≤ j`, composing adjacent maps.
fn rank_function(chain: &ResolutionChain, p: usize) -> Vec<Vec<usize>> {
    let m = chain.grid.len();
    let adjacent: Vec<FieldMatrix> = (0..m.saturating_sub(1)).map(|t| induced_between(chain, p, t + 1, t)).collect();
    let mut r = vec![vec![0; m]; m];
    for i in 0..m {
        r[i][i] = chain.basis(i, p).betti();
        let mut composite: Option<FieldMatrix> = None;
        for j in i + 1..m {
            let next = match composite {
                None => adjacent[i].clone(),
                Some(c) => c.mul(&adjacent[j - 1]).expect("adjacent maps compose"),
            };
            r[i][j] = rank(&next);
            composite = Some(next);
        }
    }
    r
}

/// Bars read off the ranks of composed induced maps on the chain's grid.
pub fn barcode_from_chain(chain: &ResolutionChain) -> Barcode {
    let m = chain.grid.len();
    let mut bars = Vec::new();
    let mut births = vec![vec![0usize; m]; chain.max_p + 1];
    let mut deaths = vec![vec![0usize; m]; chain.max_p + 1];
    for p in 0..=chain.max_p {
        let r = rank_function(chain, p);
        let at = |i: isize, j: usize| -> isize { if i < 0 { 0 } else { r[i as usize][j] as isize } };
        for i in 0..m {
            let ii = i as isize;
            for j in i + 1..m {
                let count = at(ii, j - 1) - at(ii, j) - at(ii - 1, j - 1) + at(ii - 1, j);
                debug_assert!(count >= 0);
                for _ in 0..count {
                    bars.push(Bar::finite(p, chain.grid[i].clone(), chain.grid[j].clone()));
                }
                births[p][i] += count as usize;
                deaths[p][j] += count as usize;
            }
            let count = at(ii, m - 1) - at(ii - 1, m - 1);
            debug_assert!(count >= 0);
            for _ in 0..count {
                bars.push(Bar::infinite(p, chain.grid[i].clone()));
            }
            births[p][i] += count as usize;
        }
    }
    bars.sort();

    // Every simplex entering at a grid value opens a class or closes one, so
    // counts left over are intervals of length zero.
    let mut zero_length = vec![0usize; chain.max_p + 1];
    for i in 0..m {
        let mut previous = 0isize;
        for p in 0..=chain.max_p {
            let entering = chain.nerve(i).basis(p).len() - if i == 0 { 0 } else { chain.nerve(i - 1).basis(p).len() };
            let closing = if p == 0 { 0 } else { deaths[p - 1][i] as isize };
            let z = entering as isize - births[p][i] as isize - closing - previous;
            debug_assert!(z >= 0);
            zero_length[p] += z.max(0) as usize;
            previous = z;
        }
    }
    Barcode {
        grid: chain.grid.clone(),
        bars,
        zero_length,
    }
}

pub fn barcode(filtration: &Filtration, grid: &GridSpec, max_p: usize, field: Field) -> Result<Barcode, PersistenceError> {
    let grid = grid.resolve(filtration)?;
    let chain = replay_chain(filtration, &grid, field, max_p)?;
    Ok(barcode_from_chain(&chain))
}

/// Textbook persistence: the boundary matrix in filtration order, reduced
/// left to right until lowest nonzero entries are distinct.
pub fn standard_reduction_oracle(filtration: &Filtration, max_p: usize, field: Field) -> Vec<Bar> {
    let entries = filtration.entries();
    let index: HashMap<&[usize], usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.simplex.vertices(), i))
        .collect();
    let mut columns: Vec<BTreeMap<usize, Scalar>> = entries
        .iter()
        .map(|e| {
            e.simplex
                .facets()
                .map(|(k, f)| (index[f.vertices()], field.from_i64(if k % 2 == 0 { 1 } else { -1 })))
                .collect()
        })
        .collect();
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut paired = vec![false; entries.len()];
    let mut bars = Vec::new();
    for j in 0..columns.len() {
        while let Some((&low, value)) = columns[j].iter().next_back() {
            let Some(&k) = owner.get(&low) else { break };
            let factor = value.div(&columns[k][&low]);
            let source = columns[k].clone();
            let col = &mut columns[j];
            for (row, x) in source {
                let updated = &col.get(&row).cloned().unwrap_or_else(|| field.zero()) - &(&factor * &x);
                if updated.is_zero() {
                    col.remove(&row);
                } else {
                    col.insert(row, updated);
                }
            }
        }
        if let Some((&low, _)) = columns[j].iter().next_back() {
            owner.insert(low, j);
            paired[low] = true;
            paired[j] = true;
            let p = entries[low].simplex.dim();
            if p <= max_p && entries[low].sq_radius != entries[j].sq_radius {
                bars.push(Bar::finite(p, entries[low].sq_radius.clone(), entries[j].sq_radius.clone()));
            }
        }
    }
    for (i, e) in entries.iter().enumerate() {
        if !paired[i] && e.simplex.dim() <= max_p {
            bars.push(Bar::infinite(e.simplex.dim(), e.sq_radius.clone()));
        }
    }
    bars.sort();
    bars
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_filtration;
    use crate::geometry::{parse_point_cloud, ComplexKind};

    #[test]
    fn single_point() {
        let cloud = parse_point_cloud("0,0").unwrap();
        let f = build_filtration(&cloud, ComplexKind::Cech, 2, None).unwrap();
        let b = barcode(&f, &GridSpec::AllCritical, 1, Field::Rational).unwrap();
        assert_eq!(b.bars, vec![Bar::infinite(0, SqRadius::zero())]);
        assert_eq!(standard_reduction_oracle(&f, 1, Field::Rational), b.bars);
    }

    #[test]
    fn two_points_merge_at_half_distance() {
        let cloud = parse_point_cloud("0,0\n3,4").unwrap();
        let f = build_filtration(&cloud, ComplexKind::Rips, 1, None).unwrap();
        let b = barcode(&f, &GridSpec::AllCritical, 0, Field::Rational).unwrap();
        assert_eq!(
            b.bars,
            vec![
                Bar::finite(0, SqRadius::zero(), SqRadius::from_ratio(25, 4)),
                Bar::infinite(0, SqRadius::zero())
            ]
        );
        let chain = replay_chain(&f, &b.grid, Field::Rational, 0).unwrap();
        let events = classify(&chain, 0);
        let merges: Vec<_> = events.iter().filter(|e| e.kind == EventKind::Merge).collect();
        assert_eq!(merges.len(), 1);
        assert_eq!(merges[0].rep, vec![("u_{1}".to_string(), Field::Rational.one())]);
    }

    #[test]
    fn empty_filtration() {
        let cloud = crate::geometry::PointCloud::new(2, vec![]).unwrap();
        let f = build_filtration(&cloud, ComplexKind::Cech, 1, None).unwrap();
        assert!(standard_reduction_oracle(&f, 1, Field::Rational).is_empty());
        let b = barcode(&f, &GridSpec::AllCritical, 1, Field::Rational).unwrap();
        assert!(b.bars.is_empty());
    }

    #[test]
    fn grid_validation() {
        let cloud = parse_point_cloud("0,0").unwrap();
        let f = build_filtration(&cloud, ComplexKind::Cech, 1, None).unwrap();
        let bad = GridSpec::Explicit(vec![SqRadius::from_ratio(1, 1), SqRadius::from_ratio(1, 1)]);
        assert!(matches!(bad.resolve(&f), Err(PersistenceError::GridNotIncreasing { .. })));
        assert_eq!(GridSpec::Explicit(vec![]).resolve(&f), Err(PersistenceError::EmptyGrid));
        assert!(matches!(
            replay_chain(&f, &[SqRadius::zero()], Field::Rational, 5),
            Err(PersistenceError::DimensionTooHigh { .. })
        ));
    }

    #[test]
    fn filled_triangle_counts_zero_length_bars() {
        // The three edges and the triangle all enter together.
        let cloud = parse_point_cloud("0,0\n2,0\n1,1").unwrap();
        let f = build_filtration(&cloud, ComplexKind::Cech, 2, None).unwrap();
        let b = barcode(&f, &GridSpec::AllCritical, 1, Field::Rational).unwrap();
        assert_eq!(b.bars, standard_reduction_oracle(&f, 1, Field::Rational));
        assert_eq!(b.bars.iter().filter(|x| x.p == 1).count(), 0);
        assert!(b.zero_length[1] >= 1);
    }
}
