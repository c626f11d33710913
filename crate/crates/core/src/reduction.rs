//! Tracked column and row reductions, and compatible kernel/image bases.
//!
//! The column reduction processes columns left to right. A column is
//! eliminated against the earlier column owning its top nonzero row until
//! its top nonzero row is unowned (it becomes the pivot) or the column
//! vanishes. Every operation is `col_j += c * col_k` with `k < j` and is
//! recorded, so `Q` and `Q^{-1}` can both be rebuilt from the log.
//!
//! The row reduction used for image bases only ever adds an earlier row to a
//! later one (`row_j += c * row_k`, `k < j`). [`ElementaryOp::restricted_row`]
//! refuses to build any other row operation.

use crate::field::{Field, Scalar};
use crate::matrix::{numbered_labels, FieldMatrix, LinalgError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Row,
    Column,
}

/// `target += multiplier * source` along `axis`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryOp {
    axis: Axis,
    target: usize,
    source: usize,
    multiplier: Scalar,
}

impl ElementaryOp {
    pub fn column(target: usize, source: usize, multiplier: Scalar) -> Self {
        assert_ne!(target, source, "column operation onto itself");
        ElementaryOp {
            axis: Axis::Column,
            target,
            source,
            multiplier,
        }
    }

    /// A row operation `row_target += multiplier * row_source`, only when `source < target`.
    pub fn restricted_row(target: usize, source: usize, multiplier: Scalar) -> Option<Self> {
        (source < target).then_some(ElementaryOp {
            axis: Axis::Row,
            target,
            source,
            multiplier,
        })
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn multiplier(&self) -> &Scalar {
        &self.multiplier
    }

    fn apply(&self, m: &mut FieldMatrix) {
        match self.axis {
            Axis::Column => m.add_column_multiple(self.target, self.source, &self.multiplier),
            Axis::Row => m.add_row_multiple(self.target, self.source, &self.multiplier),
        }
    }
}

/// A vector together with the name it carries in a derived basis (`v_3`, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledVector {
    pub label: String,
    pub coords: Vec<Scalar>,
}

impl LabeledVector {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Renders the vector as a combination of `basis`, e.g. `-u_{01} + u_{12}`.
    pub fn combination(&self, basis: &[String]) -> String {
        format_combination(&self.coords, basis)
    }
}

/// Renders `coeffs` against `basis` labels; the zero vector renders as `0`.
pub fn format_combination(coeffs: &[Scalar], basis: &[String]) -> String {
    let mut out = String::new();
    for (c, label) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        let q = c.to_rational();
        let negative = q < num_rational::BigRational::from_integer(0.into());
        let magnitude = if negative { -q } else { q };
        let mag = if magnitude == num_rational::BigRational::from_integer(1.into()) {
            String::new()
        } else if magnitude.is_integer() {
            format!("{}·", magnitude.numer())
        } else {
            format!("({}/{})·", magnitude.numer(), magnitude.denom())
        };
        match (out.is_empty(), negative) {
            (true, false) => {}
            (true, true) => out.push('-'),
            (false, false) => out.push_str(" + "),
            (false, true) => out.push_str(" - "),
        }
        out.push_str(&mag);
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone)]
pub struct TrackedReduction {
    reduced: FieldMatrix,
    q: FieldMatrix,
    q_inv: FieldMatrix,
    op_log: Vec<ElementaryOp>,
    pivot_rows: Vec<Option<usize>>,
}

impl TrackedReduction {
    /// `A·Q`.
    pub fn reduced(&self) -> &FieldMatrix {
        &self.reduced
    }

    pub fn q(&self) -> &FieldMatrix {
        &self.q
    }

    pub fn q_inv(&self) -> &FieldMatrix {
        &self.q_inv
    }

    pub fn op_log(&self) -> &[ElementaryOp] {
        &self.op_log
    }

    /// Pivot row of each reduced column, `None` for zero columns.
    pub fn pivot_rows(&self) -> &[Option<usize>] {
        &self.pivot_rows
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.iter().flatten().count()
    }

    pub fn zero_columns(&self) -> Vec<usize> {
        (0..self.pivot_rows.len()).filter(|&j| self.pivot_rows[j].is_none()).collect()
    }
}

/// Column-reduces `a`, recording every operation.
pub fn column_reduce_tracked(a: &FieldMatrix) -> TrackedReduction {
    let field = a.field();
    let mut reduced = a.clone();
    let mut q = FieldMatrix::zeros_unchecked(field, a.col_labels().to_vec(), a.col_labels().to_vec());
    for i in 0..a.cols() {
        q.set(i, i, field.one());
    }
    let mut owner: Vec<Option<usize>> = vec![None; a.rows()];
    let mut pivot_rows = vec![None; a.cols()];
    let mut op_log = Vec::new();
    for j in 0..a.cols() {
        while let Some(r) = reduced.top_nonzero_row(j) {
            match owner[r] {
                Some(k) => {
                    let c = -&reduced.get(r, j).div(reduced.get(r, k));
                    let op = ElementaryOp::column(j, k, c);
                    op.apply(&mut reduced);
                    op.apply(&mut q);
                    op_log.push(op);
                }
                None => {
                    owner[r] = Some(j);
                    pivot_rows[j] = Some(r);
                    break;
                }
            }
        }
    }
    let q_inv = inverse_of_column_log(field, a.col_labels().to_vec(), &op_log);
    TrackedReduction {
        reduced,
        q,
        q_inv,
        op_log,
        pivot_rows,
    }
}

/// `Q^{-1}` for `Q = E_1 ⋯ E_n`, replaying the inverse operations as row operations.
fn inverse_of_column_log(field: Field, labels: Vec<String>, log: &[ElementaryOp]) -> FieldMatrix {
    let n = labels.len();
    let mut inv = FieldMatrix::zeros_unchecked(field, labels.clone(), labels);
    for i in 0..n {
        inv.set(i, i, field.one());
    }
    for op in log {
        inv.add_row_multiple(op.source, op.target, &-&op.multiplier);
    }
    inv
}

/// `P^{-1}` for `P = E_n ⋯ E_1`, replaying the inverse operations as column operations.
fn inverse_of_row_log(field: Field, labels: Vec<String>, log: &[ElementaryOp]) -> FieldMatrix {
    let n = labels.len();
    let mut inv = FieldMatrix::zeros_unchecked(field, labels.clone(), labels);
    for i in 0..n {
        inv.set(i, i, field.one());
    }
    for op in log {
        inv.add_column_multiple(op.source, op.target, &-&op.multiplier);
    }
    inv
}

/// Columns of `Q` beneath the zero columns of `A·Q`; they form a basis of `ker A`.
pub fn kernel_basis_from_reduction(t: &TrackedReduction) -> Vec<LabeledVector> {
    kernel_columns(t.reduced(), t.q())
}

/// Columns of `basis` beneath the zero columns of `reduced` (for instance
/// `δ·Q·P^{-1}` over `Q·P^{-1}`).
pub fn kernel_columns(reduced: &FieldMatrix, basis: &FieldMatrix) -> Vec<LabeledVector> {
    (0..reduced.cols())
        .filter(|&j| reduced.column_is_zero(j))
        .map(|j| LabeledVector {
            label: basis.col_labels()[j].clone(),
            coords: basis.column(j),
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct RowReduction {
    reduced: FieldMatrix,
    p: FieldMatrix,
    p_inv: FieldMatrix,
    op_log: Vec<ElementaryOp>,
    pivot_cols: Vec<Option<usize>>,
}

impl RowReduction {
    /// `P·M`.
    pub fn reduced(&self) -> &FieldMatrix {
        &self.reduced
    }

    pub fn p(&self) -> &FieldMatrix {
        &self.p
    }

    pub fn p_inv(&self) -> &FieldMatrix {
        &self.p_inv
    }

    pub fn op_log(&self) -> &[ElementaryOp] {
        &self.op_log
    }

    /// Pivot column of each reduced row, `None` for zero rows.
    pub fn pivot_cols(&self) -> &[Option<usize>] {
        &self.pivot_cols
    }

    pub fn nonzero_rows(&self) -> Vec<usize> {
        (0..self.pivot_cols.len()).filter(|&i| self.pivot_cols[i].is_some()).collect()
    }
}

/// Row-reduces `m` top to bottom using only `row_j += c * row_k` with `k < j`.
/// Afterwards the nonzero rows have distinct leading columns and are therefore
/// independent.
pub fn row_reduce_restricted(m: &FieldMatrix) -> RowReduction {
    let field = m.field();
    let mut reduced = m.clone();
    let labels = m.row_labels().to_vec();
    let mut p = FieldMatrix::zeros_unchecked(field, labels.clone(), labels.clone());
    for i in 0..m.rows() {
        p.set(i, i, field.one());
    }
    let mut owner: Vec<Option<usize>> = vec![None; m.cols()];
    let mut pivot_cols = vec![None; m.rows()];
    let mut op_log = Vec::new();
    for j in 0..m.rows() {
        while let Some(c) = reduced.leading_column(j) {
            match owner[c] {
                Some(k) => {
                    let mult = -&reduced.get(j, c).div(reduced.get(k, c));
                    let op = ElementaryOp::restricted_row(j, k, mult).expect("pivot rows precede the current row");
                    op.apply(&mut reduced);
                    op.apply(&mut p);
                    op_log.push(op);
                }
                None => {
                    owner[c] = Some(j);
                    pivot_cols[j] = Some(c);
                    break;
                }
            }
        }
    }
    let p_inv = inverse_of_row_log(field, labels, &op_log);
    RowReduction {
        reduced,
        p,
        p_inv,
        op_log,
        pivot_cols,
    }
}

/// Kernel basis of `A` containing a basis of `im B` (given `A·B = 0`).
///
/// `kernel_basis[i]` is the `transform` column labeled `v_{k+1}` for some
/// column index `k`; `image_subset` and `quotient` are positions into
/// `kernel_basis`.
#[derive(Debug, Clone)]
pub struct CompatiblePair {
    columns: TrackedReduction,
    rows: RowReduction,
    transform: FieldMatrix,
    kernel_indices: Vec<usize>,
    kernel_basis: Vec<LabeledVector>,
    image_subset: Vec<usize>,
    quotient: Vec<usize>,
}

impl CompatiblePair {
    /// Column reduction of `A·X` (`A·Q` when computed by [`compatible_bases`]).
    pub fn column_reduction(&self) -> &TrackedReduction {
        &self.columns
    }

    /// Restricted row reduction that produced `P`.
    pub fn row_reduction(&self) -> &RowReduction {
        &self.rows
    }

    /// `X·Q·P^{-1}`, columns labeled `v_1, v_2, ...` (`Q·P^{-1}` for [`compatible_bases`]).
    pub fn transform(&self) -> &FieldMatrix {
        &self.transform
    }

    /// `P·Q^{-1}`; the inverse of [`Self::transform`] when computed by [`compatible_bases`].
    pub fn transform_inverse(&self) -> FieldMatrix {
        self.rows
            .p()
            .mul(self.columns.q_inv())
            .expect("P and Q^{-1} act on the same space")
    }

    /// Column index (into `transform`) of each kernel basis vector.
    pub fn kernel_indices(&self) -> &[usize] {
        &self.kernel_indices
    }

    pub fn kernel_basis(&self) -> &[LabeledVector] {
        &self.kernel_basis
    }

    pub fn image_subset(&self) -> &[usize] {
        &self.image_subset
    }

    pub fn quotient(&self) -> &[usize] {
        &self.quotient
    }

    pub fn quotient_reps(&self) -> impl Iterator<Item = &LabeledVector> {
        self.quotient.iter().map(|&i| &self.kernel_basis[i])
    }

    pub fn image_vectors(&self) -> impl Iterator<Item = &LabeledVector> {
        self.image_subset.iter().map(|&i| &self.kernel_basis[i])
    }
}

/// Compatible bases for a complex `· --B--> V --A--> ·`.
///
/// Column-reduce `A` to `A·Q`, carry the inverse operations over to `Q^{-1}·B`,
/// restricted-row-reduce that to `P·Q^{-1}·B`, and carry back to
/// `A·Q·P^{-1}`. The columns of `Q·P^{-1}` under zero columns of `A·Q·P^{-1}`
/// span `ker A`; those whose row in `P·Q^{-1}·B` is nonzero span `im B`.
pub fn compatible_bases(a: &FieldMatrix, b: &FieldMatrix) -> Result<CompatiblePair, LinalgError> {
    if a.cols() != b.rows() {
        return Err(LinalgError::ShapeMismatch {
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    if !a.mul(b)?.is_zero() {
        return Err(LinalgError::NotAComplex);
    }
    let field = a.field();
    let n = a.cols();
    let mut x = FieldMatrix::zeros_unchecked(field, a.col_labels().to_vec(), numbered_labels("v", n));
    for i in 0..n {
        x.set(i, i, field.one());
    }
    Ok(compatible_from_spanning(&x, a, b))
}

/// Compatible bases for `ker A' ⊇ im B'` described through a spanning matrix.
///
/// `x` has columns spanning the domain of `A'`, `y = A'·x`, and `n` satisfies
/// `x·n = B'`. The columns of `x` may be dependent (some may even vanish): the
/// kernel spanning set is rank-filtered, and the coefficient rows of dropped
/// vectors are folded into the rows of the vectors that express them, before
/// the restricted row reduction picks the image subset.
pub(crate) fn compatible_from_spanning(x: &FieldMatrix, y: &FieldMatrix, n: &FieldMatrix) -> CompatiblePair {
    let field = x.field();
    let k = x.cols();
    let columns = column_reduce_tracked(y);
    let xr = x.mul(columns.q()).expect("x and Q share the spanning index");
    let mut coeffs = columns.q_inv().mul(n).expect("Q^{-1} and n share the spanning index");
    let candidates = columns.zero_columns();

    // Rank filter: reduce the candidate vectors themselves; a candidate that
    // reduces to zero is a combination of earlier kept candidates.
    let block = xr.select_columns(&candidates);
    let filter = column_reduce_tracked(&block);
    let mut kept = Vec::new();
    for (pos, &j) in candidates.iter().enumerate() {
        if filter.pivot_rows()[pos].is_some() {
            kept.push(j);
            continue;
        }
        for (other, &i) in candidates.iter().enumerate() {
            if other == pos {
                continue;
            }
            let c = filter.q().get(other, pos);
            if !c.is_zero() {
                coeffs.add_row_multiple(i, j, &-c);
            }
        }
    }
    for i in 0..k {
        if !kept.contains(&i) {
            for c in 0..coeffs.cols() {
                coeffs.set(i, c, field.zero());
            }
        }
    }

    let rows = row_reduce_restricted(&coeffs);
    let transform = xr
        .mul(rows.p_inv())
        .expect("square row transform")
        .with_labels(x.row_labels().to_vec(), x.col_labels().to_vec())
        .expect("labels of x fit the transform");
    let kernel_basis: Vec<LabeledVector> = kept
        .iter()
        .map(|&j| LabeledVector {
            label: transform.col_labels()[j].clone(),
            coords: transform.column(j),
        })
        .collect();
    let mut image_subset = Vec::new();
    let mut quotient = Vec::new();
    for (pos, &j) in kept.iter().enumerate() {
        if rows.pivot_cols()[j].is_some() {
            image_subset.push(pos);
        } else {
            quotient.push(pos);
        }
    }
    debug_assert!(rows.nonzero_rows().iter().all(|r| kept.contains(r)));
    CompatiblePair {
        columns,
        rows,
        transform,
        kernel_indices: kept,
        kernel_basis,
        image_subset,
        quotient,
    }
}

/// Exact rank by row echelon elimination.
pub fn rank(a: &FieldMatrix) -> usize {
    let mut m = a.clone();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let Some(piv) = (r..m.rows()).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, piv);
        let inv = m.get(r, c).inverse();
        m.scale_row(r, &inv);
        for i in r + 1..m.rows() {
            let f = m.get(i, c).clone();
            if !f.is_zero() {
                m.add_row_multiple(i, r, &-&f);
            }
        }
        r += 1;
    }
    r
}

/// Exact inverse by Gauss–Jordan elimination.
pub fn invert(a: &FieldMatrix) -> Result<FieldMatrix, LinalgError> {
    if a.rows() != a.cols() {
        return Err(LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let field = a.field();
    let mut m = a.clone();
    let mut inv = FieldMatrix::zeros_unchecked(field, a.col_labels().to_vec(), a.row_labels().to_vec());
    for i in 0..n {
        inv.set(i, i, field.one());
    }
    for c in 0..n {
        let piv = (c..n).find(|&i| !m.get(i, c).is_zero()).ok_or(LinalgError::Singular)?;
        m.swap_rows(c, piv);
        inv.swap_rows(c, piv);
        let s = m.get(c, c).inverse();
        m.scale_row(c, &s);
        inv.scale_row(c, &s);
        for i in 0..n {
            if i == c {
                continue;
            }
            let f = m.get(i, c).clone();
            if !f.is_zero() {
                m.add_row_multiple(i, c, &-&f);
                inv.add_row_multiple(i, c, &-&f);
            }
        }
    }
    Ok(inv)
}

/// Inverse of the `Q` of a tracked reduction, rebuilt from its operation log.
pub fn invert_tracked(t: &TrackedReduction) -> FieldMatrix {
    inverse_of_column_log(t.q.field(), t.q.col_labels().to_vec(), &t.op_log)
}

/// Coordinates `c` with `basis·c = b`, when `b` lies in the column span.
/// `basis` must have independent columns.
pub fn solve_in_span(basis: &FieldMatrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if b.len() != basis.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: basis.rows(),
            found: b.len(),
        });
    }
    let field = basis.field();
    let (rows, k) = (basis.rows(), basis.cols());
    let mut aug = FieldMatrix::zeros_unchecked(field, basis.row_labels().to_vec(), numbered_labels("a", k + 1));
    for i in 0..rows {
        for j in 0..k {
            aug.set(i, j, basis.get(i, j).clone());
        }
        aug.set(i, k, b[i].clone());
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(piv) = (r..rows).find(|&i| !aug.get(i, c).is_zero()) else {
            continue;
        };
        aug.swap_rows(r, piv);
        let s = aug.get(r, c).inverse();
        aug.scale_row(r, &s);
        for i in 0..rows {
            if i != r {
                let f = aug.get(i, c).clone();
                if !f.is_zero() {
                    aug.add_row_multiple(i, r, &-&f);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !aug.get(i, k).is_zero()) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(row, k).clone();
    }
    Ok(Some(x))
}

/// Basis of the null space of `a`.
pub fn nullspace(a: &FieldMatrix) -> Vec<Vec<Scalar>> {
    kernel_basis_from_reduction(&column_reduce_tracked(a))
        .into_iter()
        .map(|v| v.coords)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> FieldMatrix {
        FieldMatrix::from_ints(Field::Rational, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn zero_matrix_reduces_to_identity_transform() {
        let t = column_reduce_tracked(&ints(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]]));
        assert!(t.q().is_identity());
        assert!(t.reduced().is_zero());
        assert!(t.op_log().is_empty());
        assert_eq!(kernel_basis_from_reduction(&t).len(), 3);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let id = FieldMatrix::identity(Field::Rational, numbered_labels("u", 4)).unwrap();
        assert!(kernel_basis_from_reduction(&column_reduce_tracked(&id)).is_empty());
        assert_eq!(rank(&id), 4);
    }

    #[test]
    fn degenerate_shapes() {
        let f = Field::Rational;
        let tall = FieldMatrix::zeros(f, numbered_labels("r", 3), vec![]).unwrap();
        let t = column_reduce_tracked(&tall);
        assert_eq!(t.q().rows(), 0);
        assert!(kernel_basis_from_reduction(&t).is_empty());
        let wide = FieldMatrix::zeros(f, vec![], numbered_labels("c", 2)).unwrap();
        let t = column_reduce_tracked(&wide);
        assert_eq!(kernel_basis_from_reduction(&t).len(), 2);
        assert_eq!(rank(&wide), 0);
        let pair = compatible_bases(&wide, &FieldMatrix::zeros(f, numbered_labels("c", 2), vec![]).unwrap()).unwrap();
        assert_eq!(pair.kernel_basis().len(), 2);
        assert!(pair.image_subset().is_empty());
    }

    #[test]
    fn invert_two_by_two() {
        let inv = invert(&ints(&[&[1, 1], &[0, 1]])).unwrap();
        let expected = ints(&[&[1, -1], &[0, 1]])
            .with_labels(numbered_labels("c", 2), numbered_labels("r", 2))
            .unwrap();
        assert_eq!(inv, expected);
        assert_eq!(invert(&ints(&[&[1, 2], &[2, 4]])), Err(LinalgError::Singular));
        assert!(matches!(invert(&ints(&[&[1, 2]])), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn pivots_are_distinct() {
        // Swapped identity: the pivots come out in decreasing row order.
        let t = column_reduce_tracked(&ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(t.pivot_rows(), &[Some(1), Some(0)]);
        assert!(t.op_log().is_empty());
    }

    #[test]
    fn restricted_row_ops_reject_upward_sources() {
        let f = Field::Rational;
        assert!(ElementaryOp::restricted_row(2, 1, f.one()).is_some());
        assert!(ElementaryOp::restricted_row(1, 1, f.one()).is_none());
        assert!(ElementaryOp::restricted_row(1, 2, f.one()).is_none());
    }

    #[test]
    fn not_a_complex() {
        let a = ints(&[&[1, 0]]);
        let b = ints(&[&[1], &[0]]);
        assert_eq!(compatible_bases(&a, &b).unwrap_err(), LinalgError::NotAComplex);
    }

    #[test]
    fn zero_maps_give_standard_kernel() {
        let a = ints(&[&[0, 0, 0]]);
        let b = ints(&[&[0], &[0], &[0]]);
        let pair = compatible_bases(&a, &b).unwrap();
        assert_eq!(pair.kernel_basis().len(), 3);
        assert!(pair.image_subset().is_empty());
        assert_eq!(pair.quotient(), &[0, 1, 2]);
        for (i, v) in pair.kernel_basis().iter().enumerate() {
            assert_eq!(v.label, format!("v_{}", i + 1));
            assert!(v.coords.iter().enumerate().all(|(k, c)| c.is_one() == (k == i)));
        }
    }

    #[test]
    fn solve_in_span_detects_membership() {
        let basis = ints(&[&[1, 0], &[1, 1], &[0, 1]]);
        let f = Field::Rational;
        let b: Vec<Scalar> = [2, 5, 3].iter().map(|&v| f.from_i64(v)).collect();
        let x = solve_in_span(&basis, &b).unwrap().unwrap();
        assert_eq!(x, vec![f.from_i64(2), f.from_i64(3)]);
        let c: Vec<Scalar> = [1, 0, 0].iter().map(|&v| f.from_i64(v)).collect();
        assert_eq!(solve_in_span(&basis, &c).unwrap(), None);
    }

    #[test]
    fn combination_formatting() {
        let f = Field::Rational;
        let labels: Vec<String> = ["u_{01}", "u_{02}", "u_{12}"].iter().map(|s| s.to_string()).collect();
        let v = [f.from_i64(-1), f.zero(), f.from_i64(2)];
        assert_eq!(format_combination(&v, &labels), "-u_{01} + 2·u_{12}");
        assert_eq!(format_combination(&[f.zero(), f.zero(), f.zero()], &labels), "0");
    }
}
