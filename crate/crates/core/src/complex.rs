//! Simplices, filtrations, nerves, coboundary matrices and restriction maps.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

use crate::field::Field;
use crate::geometry::{simplex_sq_radius, ComplexKind, GeometryError, PointCloud, SqRadius};
use crate::matrix::FieldMatrix;

/// Upper bound on the vertex count accepted from a fixture file.
pub const MAX_FIXTURE_VERTICES: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("malformed fixture: {0}")]
    Fixture(String),
    #[error("fixture declares {0} vertices, more than the supported {MAX_FIXTURE_VERTICES}")]
    TooManyVertices(usize),
    #[error("simplex {simplex:?} names vertex {vertex}, but only {count} vertices are declared")]
    UnknownVertex { simplex: Vec<usize>, vertex: usize, count: usize },
    #[error("simplex {0:?} has no vertices or repeats a vertex")]
    BadSimplex(Vec<usize>),
    #[error("simplex {0:?} appears twice")]
    DuplicateSimplex(Vec<usize>),
    #[error("simplex {simplex:?} is missing its face {face:?}")]
    MissingFace { simplex: Vec<usize>, face: Vec<usize> },
    #[error("simplex {simplex:?} enters before its face {face:?}")]
    FaceAfterCoface { simplex: Vec<usize>, face: Vec<usize> },
    #[error("invalid squared radius for simplex {simplex:?}: {message}")]
    BadRadius { simplex: Vec<usize>, message: String },
    #[error("squared radius {requested} exceeds the filtration cap {cap}")]
    CapExceeded { requested: SqRadius, cap: SqRadius },
    #[error("restriction must go from a larger to a smaller radius (got {from} to {to})")]
    BadOrder { from: SqRadius, to: SqRadius },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// An oriented simplex with strictly increasing vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<usize>,
}

impl Simplex {
    /// Panics unless `vertices` is nonempty and strictly increasing.
    pub fn new(vertices: Vec<usize>) -> Self {
        Self::try_new(vertices).expect("vertices must be nonempty and strictly increasing")
    }

    pub fn try_new(vertices: Vec<usize>) -> Option<Self> {
        let increasing = vertices.windows(2).all(|w| w[0] < w[1]);
        (!vertices.is_empty() && increasing).then_some(Simplex { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// `u_{012}`, or `u_{3,12}` once a vertex index has more than one digit.
    pub fn label(&self) -> String {
        let body = if self.vertices.iter().all(|&v| v < 10) {
            self.vertices.iter().map(usize::to_string).collect::<String>()
        } else {
            self.vertices.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        };
        format!("u_{{{body}}}")
    }

    /// The facet with the `k`-th vertex removed. Panics on a vertex.
    pub fn facet(&self, k: usize) -> Simplex {
        assert!(self.dim() > 0, "a vertex has no facets");
        let mut v = self.vertices.clone();
        v.remove(k);
        Simplex { vertices: v }
    }

    pub fn facets(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let n = if self.dim() == 0 { 0 } else { self.vertices.len() };
        (0..n).map(move |k| (k, self.facet(k)))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationEntry {
    pub simplex: Simplex,
    pub sq_radius: SqRadius,
}

/// Simplices with entrance radii, sorted by (radius, dimension, vertices).
#[derive(Debug, Clone)]
pub struct Filtration {
    cloud: Option<PointCloud>,
    kind: Option<ComplexKind>,
    vertex_count: usize,
    max_dim: usize,
    cap: Option<SqRadius>,
    entries: Vec<FiltrationEntry>,
    index: HashMap<Vec<usize>, usize>,
}

impl Filtration {
    fn from_entries(
        cloud: Option<PointCloud>,
        kind: Option<ComplexKind>,
        vertex_count: usize,
        max_dim: usize,
        cap: Option<SqRadius>,
        mut entries: Vec<FiltrationEntry>,
    ) -> Self {
        entries.sort_by(|a, b| {
            (&a.sq_radius, a.simplex.dim(), &a.simplex).cmp(&(&b.sq_radius, b.simplex.dim(), &b.simplex))
        });
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.simplex.vertices.clone(), i))
            .collect();
        Filtration {
            cloud,
            kind,
            vertex_count,
            max_dim,
            cap,
            entries,
            index,
        }
    }

    pub fn cloud(&self) -> Option<&PointCloud> {
        self.cloud.as_ref()
    }

    pub fn kind(&self) -> Option<ComplexKind> {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn cap(&self) -> Option<&SqRadius> {
        self.cap.as_ref()
    }

    pub fn entries(&self) -> &[FiltrationEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, vertices: &[usize]) -> Option<usize> {
        self.index.get(vertices).copied()
    }

    pub fn sq_radius_of(&self, vertices: &[usize]) -> Option<&SqRadius> {
        self.position(vertices).map(|i| &self.entries[i].sq_radius)
    }

    /// Distinct entrance radii in increasing order.
    pub fn critical_values(&self) -> Vec<SqRadius> {
        let set: BTreeSet<&SqRadius> = self.entries.iter().map(|e| &e.sq_radius).collect();
        set.into_iter().cloned().collect()
    }

    /// Largest entrance radius, or zero for an empty filtration.
    pub fn max_sq_radius(&self) -> SqRadius {
        self.entries.iter().map(|e| &e.sq_radius).max().cloned().unwrap_or_else(SqRadius::zero)
    }

    /// Parses an explicit complex: `{"vertices": N, "simplices": [{"v": [..], "sq_radius": "p/q"}]}`.
    ///
    /// Vertices not listed enter at radius 0. Listed simplices may give their
    /// vertices in any order; every facet must be present and enter no later.
    pub fn from_fixture_json(text: &str) -> Result<Self, ComplexError> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct FixtureSimplex {
            v: Vec<usize>,
            sq_radius: String,
        }
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Fixture {
            vertices: usize,
            #[serde(default)]
            simplices: Vec<FixtureSimplex>,
        }
        let fixture: Fixture = serde_json::from_str(text).map_err(|e| ComplexError::Fixture(e.to_string()))?;
        let n = fixture.vertices;
        if n > MAX_FIXTURE_VERTICES {
            return Err(ComplexError::TooManyVertices(n));
        }
        let mut radii: HashMap<Vec<usize>, SqRadius> = HashMap::new();
        let mut listed: Vec<Simplex> = Vec::new();
        for s in fixture.simplices {
            let mut v = s.v.clone();
            v.sort_unstable();
            let simplex = Simplex::try_new(v.clone()).ok_or_else(|| ComplexError::BadSimplex(s.v.clone()))?;
            if let Some(&bad) = v.iter().find(|&&x| x >= n) {
                return Err(ComplexError::UnknownVertex {
                    simplex: s.v,
                    vertex: bad,
                    count: n,
                });
            }
            let r: SqRadius = s.sq_radius.parse().map_err(|message| ComplexError::BadRadius {
                simplex: s.v.clone(),
                message,
            })?;
            if radii.insert(v, r).is_some() {
                return Err(ComplexError::DuplicateSimplex(s.v));
            }
            listed.push(simplex);
        }
        for v in 0..n {
            radii.entry(vec![v]).or_insert_with(SqRadius::zero);
        }
        for simplex in &listed {
            for (_, face) in simplex.facets() {
                match radii.get(face.vertices()) {
                    None => {
                        return Err(ComplexError::MissingFace {
                            simplex: simplex.vertices.clone(),
                            face: face.vertices,
                        })
                    }
                    Some(fr) if fr > &radii[simplex.vertices()] => {
                        return Err(ComplexError::FaceAfterCoface {
                            simplex: simplex.vertices.clone(),
                            face: face.vertices,
                        })
                    }
                    Some(_) => {}
                }
            }
        }
        let max_dim = radii.keys().map(|v| v.len() - 1).max().unwrap_or(0);
        let entries = radii
            .into_iter()
            .map(|(v, sq_radius)| FiltrationEntry {
                simplex: Simplex { vertices: v },
                sq_radius,
            })
            .collect();
        Ok(Self::from_entries(None, None, n, max_dim, None, entries))
    }

    /// Drops simplices above `max_dim`.
    pub fn truncated(&self, max_dim: usize) -> Filtration {
        let entries = self
            .entries
            .iter()
            .filter(|e| e.simplex.dim() <= max_dim)
            .cloned()
            .collect();
        Self::from_entries(
            self.cloud.clone(),
            self.kind,
            self.vertex_count,
            max_dim.min(self.max_dim),
            self.cap.clone(),
            entries,
        )
    }
}

/// Every simplex of dimension at most `max_dim` entering at or below `cap`
/// (all of them when `cap` is `None`). A candidate is only examined once all
/// of its facets are present.
pub fn build_filtration(
    cloud: &PointCloud,
    kind: ComplexKind,
    max_dim: usize,
    cap: Option<&SqRadius>,
) -> Result<Filtration, ComplexError> {
    let n = cloud.len();
    let mut entries: Vec<FiltrationEntry> = (0..n)
        .map(|v| FiltrationEntry {
            simplex: Simplex { vertices: vec![v] },
            sq_radius: SqRadius::zero(),
        })
        .collect();
    let mut present: std::collections::HashSet<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut layer: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for _ in 1..=max_dim {
        let mut next = Vec::new();
        for base in &layer {
            let last = *base.last().expect("nonempty simplex");
            for v in last + 1..n {
                let mut cand = base.clone();
                cand.push(v);
                let facets_ok = (0..cand.len() - 1).all(|k| {
                    let mut f = cand.clone();
                    f.remove(k);
                    present.contains(&f)
                });
                if !facets_ok {
                    continue;
                }
                let r = simplex_sq_radius(cloud, &cand, kind)?;
                if cap.is_some_and(|c| &r > c) {
                    continue;
                }
                entries.push(FiltrationEntry {
                    simplex: Simplex { vertices: cand.clone() },
                    sq_radius: r,
                });
                next.push(cand);
            }
        }
        present.extend(next.iter().cloned());
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    Ok(Filtration::from_entries(
        Some(cloud.clone()),
        Some(kind),
        n,
        max_dim,
        cap.cloned(),
        entries,
    ))
}

/// The slice of a filtration at one squared radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nerve {
    sq_radius: SqRadius,
    bases: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl Nerve {
    fn new(sq_radius: SqRadius, mut bases: Vec<Vec<Simplex>>) -> Self {
        for b in &mut bases {
            b.sort();
        }
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        Nerve { sq_radius, bases, index }
    }

    pub fn sq_radius(&self) -> &SqRadius {
        &self.sq_radius
    }

    pub fn max_dim(&self) -> usize {
        self.bases.len().saturating_sub(1)
    }

    /// The `p`-simplices in lexicographic order; empty above the top dimension.
    pub fn basis(&self, p: usize) -> &[Simplex] {
        self.bases.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn labels(&self, p: usize) -> Vec<String> {
        self.basis(p).iter().map(Simplex::label).collect()
    }

    pub fn position(&self, simplex: &Simplex) -> Option<usize> {
        self.index.get(simplex.dim())?.get(simplex).copied()
    }

    pub fn contains(&self, simplex: &Simplex) -> bool {
        self.position(simplex).is_some()
    }

    pub fn simplex_count(&self) -> usize {
        self.bases.iter().map(Vec::len).sum()
    }
}

pub fn nerve_at(filtration: &Filtration, sq_radius: &SqRadius) -> Result<Nerve, ComplexError> {
    if let Some(cap) = filtration.cap() {
        if sq_radius > cap {
            return Err(ComplexError::CapExceeded {
                requested: sq_radius.clone(),
                cap: cap.clone(),
            });
        }
    }
    let mut bases = vec![Vec::new(); filtration.max_dim() + 1];
    for e in filtration.entries() {
        if &e.sq_radius > sq_radius {
            break;
        }
        bases[e.simplex.dim()].push(e.simplex.clone());
    }
    Ok(Nerve::new(sq_radius.clone(), bases))
}

/// `δ^p`: rows are the `(p+1)`-simplices, columns the `p`-simplices, and the
/// entry at `(σ, σ minus its k-th vertex)` is `(-1)^k`.
pub fn coboundary_matrix(nerve: &Nerve, p: usize, field: Field) -> FieldMatrix {
    let mut m = FieldMatrix::zeros_unchecked(field, nerve.labels(p + 1), nerve.labels(p));
    for (i, sigma) in nerve.basis(p + 1).iter().enumerate() {
        for (k, face) in sigma.facets() {
            let j = nerve.position(&face).expect("nerve is closed under faces");
            m.set(i, j, field.from_i64(if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

/// `f^p` from the cochains of `source` to those of `target`: a source simplex
/// goes to itself when present in the target and to zero otherwise.
pub fn restriction_matrix(source: &Nerve, target: &Nerve, p: usize, field: Field) -> FieldMatrix {
    let mut m = FieldMatrix::zeros_unchecked(field, target.labels(p), source.labels(p));
    for (j, s) in source.basis(p).iter().enumerate() {
        if let Some(i) = target.position(s) {
            m.set(i, j, field.one());
        }
    }
    m
}

#[derive(Debug, Clone)]
pub struct ChainMap {
    pub source_sq_radius: SqRadius,
    pub target_sq_radius: SqRadius,
    pub maps: Vec<FieldMatrix>,
}

impl ChainMap {
    pub fn map(&self, p: usize) -> Option<&FieldMatrix> {
        self.maps.get(p)
    }
}

pub fn chain_map(
    filtration: &Filtration,
    source_sq: &SqRadius,
    target_sq: &SqRadius,
    field: Field,
) -> Result<ChainMap, ComplexError> {
    if target_sq >= source_sq {
        return Err(ComplexError::BadOrder {
            from: source_sq.clone(),
            to: target_sq.clone(),
        });
    }
    let source = nerve_at(filtration, source_sq)?;
    let target = nerve_at(filtration, target_sq)?;
    let maps = (0..=filtration.max_dim())
        .map(|p| restriction_matrix(&source, &target, p, field))
        .collect();
    Ok(ChainMap {
        source_sq_radius: source_sq.clone(),
        target_sq_radius: target_sq.clone(),
        maps,
    })
}
