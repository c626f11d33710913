//! Betti numbers and explicit quotient bases `ker δ^p / im δ^{p-1}` of a single nerve.

use crate::complex::{coboundary_matrix, Nerve};
use crate::field::{Field, Scalar};
use crate::geometry::SqRadius;
use crate::matrix::{FieldMatrix, LinalgError};
use crate::reduction::{compatible_bases, format_combination, rank, solve_in_span, CompatiblePair, LabeledVector};

/// `β^0 … β^max_p` from ranks alone.
pub fn betti_numbers(nerve: &Nerve, max_p: usize, field: Field) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=max_p).map(|p| rank(&coboundary_matrix(nerve, p, field))).collect();
    (0..=max_p)
        .map(|p| {
            let incoming = if p == 0 { 0 } else { ranks[p - 1] };
            nerve.basis(p).len() - ranks[p] - incoming
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    pub p: usize,
    pub sq_radius: SqRadius,
    /// Simplex labels of the cochain coordinates.
    pub cochain_labels: Vec<String>,
    pub kernel_basis: Vec<LabeledVector>,
    /// Indices into `kernel_basis` of vectors spanning `im δ^{p-1}`.
    pub image_subset: Vec<usize>,
    /// Indices into `kernel_basis` of the class representatives.
    pub quotient: Vec<usize>,
    coboundary: FieldMatrix,
}

impl CohomologyBasis {
    pub(crate) fn from_pair(p: usize, sq_radius: SqRadius, coboundary: FieldMatrix, pair: &CompatiblePair) -> Self {
        CohomologyBasis {
            p,
            sq_radius,
            cochain_labels: coboundary.col_labels().to_vec(),
            kernel_basis: pair.kernel_basis().to_vec(),
            image_subset: pair.image_subset().to_vec(),
            quotient: pair.quotient().to_vec(),
            coboundary,
        }
    }

    pub(crate) fn from_parts(
        p: usize,
        sq_radius: SqRadius,
        coboundary: FieldMatrix,
        kernel_basis: Vec<LabeledVector>,
        image_subset: Vec<usize>,
        quotient: Vec<usize>,
    ) -> Self {
        CohomologyBasis {
            p,
            sq_radius,
            cochain_labels: coboundary.col_labels().to_vec(),
            kernel_basis,
            image_subset,
            quotient,
            coboundary,
        }
    }

    pub fn betti(&self) -> usize {
        self.quotient.len()
    }

    pub fn field(&self) -> Field {
        self.coboundary.field()
    }

    /// `δ^p` of the nerve this basis belongs to.
    pub fn coboundary(&self) -> &FieldMatrix {
        &self.coboundary
    }

    pub fn quotient_reps(&self) -> Vec<&LabeledVector> {
        self.quotient.iter().map(|&i| &self.kernel_basis[i]).collect()
    }

    pub fn image_vectors(&self) -> Vec<&LabeledVector> {
        self.image_subset.iter().map(|&i| &self.kernel_basis[i]).collect()
    }

    /// A representative written over the simplex labels, e.g. `-u_{01} + u_{12}`.
    pub fn describe(&self, coords: &[Scalar]) -> String {
        format_combination(coords, &self.cochain_labels)
    }

    pub(crate) fn kernel_matrix(&self) -> FieldMatrix {
        let labels = self.kernel_basis.iter().map(|v| v.label.clone()).collect();
        FieldMatrix::from_columns(
            self.field(),
            self.cochain_labels.clone(),
            labels,
            &self.kernel_basis.iter().map(|v| v.coords.clone()).collect::<Vec<_>>(),
        )
        .expect("kernel vectors match the cochain dimension")
    }
}

/// Compatible bases of `ker δ^p ⊇ im δ^{p-1}` for one nerve, reduced from scratch.
pub fn cohomology_basis(nerve: &Nerve, p: usize, field: Field) -> CohomologyBasis {
    let a = coboundary_matrix(nerve, p, field);
    let b = if p == 0 {
        FieldMatrix::zeros(field, nerve.labels(0), Vec::new()).expect("distinct labels")
    } else {
        coboundary_matrix(nerve, p - 1, field)
    };
    let pair = compatible_bases(&a, &b).expect("coboundaries compose to zero");
    CohomologyBasis::from_pair(p, nerve.sq_radius().clone(), a, &pair)
}

/// Coordinates of `[rep]` in the quotient basis, or `None` when `rep` is not
/// a cocycle. All-zero coordinates mean `rep` is a coboundary.
pub fn class_membership(rep: &[Scalar], basis: &CohomologyBasis) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if rep.len() != basis.cochain_labels.len() {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.cochain_labels.len(),
            found: rep.len(),
        });
    }
    let image = basis.coboundary.mul_vec(rep)?;
    if image.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    let coords = solve_in_span(&basis.kernel_matrix(), rep)?.expect("a cocycle lies in the span of a kernel basis");
    Ok(Some(basis.quotient.iter().map(|&i| coords[i].clone()).collect()))
}
