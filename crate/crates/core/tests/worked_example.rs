//! The five-point example: two hand-built complexes at ε² = 49/25 and ε′² = 9/4.

use cechpers::cohomology::{betti_numbers, class_membership, cohomology_basis};
use cechpers::complex::{coboundary_matrix, nerve_at, Filtration, Nerve};
use cechpers::persistence::{induced_map, replay_chain};
use cechpers::reduction::{column_reduce_tracked, compatible_bases, rank};
use cechpers::{Field, FieldMatrix, Scalar, SqRadius};

const SMALL: &str = include_str!("../../../data/five_point_small.json");
const LARGE: &str = include_str!("../../../data/five_point_large.json");
const TWO_SCALES: &str = include_str!("../../../data/five_point_two_scales.json");

fn eps() -> SqRadius {
    SqRadius::from_ratio(49, 25)
}

fn eps_prime() -> SqRadius {
    SqRadius::from_ratio(9, 4)
}

fn nerve(json: &str, sq: &SqRadius) -> Nerve {
    nerve_at(&Filtration::from_fixture_json(json).unwrap(), sq).unwrap()
}

fn ints(field: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_i64(x)).collect()
}

fn assert_matrix(m: &FieldMatrix, expected: &[Vec<i64>]) {
    assert_eq!(m.rows(), expected.len());
    for (i, row) in expected.iter().enumerate() {
        assert_eq!(m.row(i), ints(m.field(), row), "row {}", m.row_labels()[i]);
    }
}

/// Cochain on the ε′ edges `01 02 12 13 14 23 34`.
fn edge_cochain(field: Field, v: [i64; 7]) -> Vec<Scalar> {
    ints(field, &v)
}

#[test]
fn small_complex_ranks_and_betti() {
    let n = nerve(SMALL, &eps());
    let f = Field::Rational;
    assert_eq!(n.labels(1), ["u_{01}", "u_{02}", "u_{12}", "u_{13}", "u_{23}"]);
    let d0 = coboundary_matrix(&n, 0, f);
    let d1 = coboundary_matrix(&n, 1, f);
    assert_matrix(
        &d0,
        &[
            vec![-1, 1, 0, 0, 0],
            vec![-1, 0, 1, 0, 0],
            vec![0, -1, 1, 0, 0],
            vec![0, -1, 0, 1, 0],
            vec![0, 0, -1, 1, 0],
        ],
    );
    assert_matrix(&d1, &[vec![1, -1, 1, 0, 0]]);
    assert_eq!(rank(&d0), 3);
    assert_eq!(rank(&d1), 1);
    let nullities: Vec<usize> = (0..3).map(|p| n.basis(p).len() - rank(&coboundary_matrix(&n, p, f))).collect();
    assert_eq!(nullities, [2, 4, 1]);
    assert_eq!(betti_numbers(&n, 2, f), [2, 1, 0]);
}

#[test]
fn large_complex_coboundaries() {
    let n = nerve(LARGE, &eps_prime());
    let f = Field::Rational;
    assert_matrix(
        &coboundary_matrix(&n, 1, f),
        &[vec![1, -1, 1, 0, 0, 0, 0], vec![0, 0, 1, -1, 0, 1, 0]],
    );
    assert_matrix(
        &coboundary_matrix(&n, 0, f),
        &[
            vec![-1, 1, 0, 0, 0],
            vec![-1, 0, 1, 0, 0],
            vec![0, -1, 1, 0, 0],
            vec![0, -1, 0, 1, 0],
            vec![0, -1, 0, 0, 1],
            vec![0, 0, -1, 1, 0],
            vec![0, 0, 0, -1, 1],
        ],
    );
    assert_eq!(betti_numbers(&n, 2, f), [1, 1, 0]);
}

#[test]
fn degree_zero_kernel_is_the_constants() {
    let n = nerve(LARGE, &eps_prime());
    let b = cohomology_basis(&n, 0, Field::Rational);
    assert_eq!(b.kernel_basis.len(), 1);
    assert_eq!(b.kernel_basis[0].coords, ints(Field::Rational, &[1, 1, 1, 1, 1]));
    assert_eq!(b.describe(&b.kernel_basis[0].coords), "u_{0} + u_{1} + u_{2} + u_{3} + u_{4}");
    assert!(b.image_subset.is_empty());
}

#[test]
fn column_reduction_of_degree_one() {
    let n = nerve(LARGE, &eps_prime());
    let f = Field::Rational;
    let t = column_reduce_tracked(&coboundary_matrix(&n, 1, f));
    assert_matrix(t.reduced(), &[vec![1, 0, 0, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0, 0]]);
    assert_matrix(
        t.q(),
        &[
            vec![1, 1, -1, -1, 0, 1, 0],
            vec![0, 1, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 1, 0, -1, 0],
            vec![0, 0, 0, 1, 0, 0, 0],
            vec![0, 0, 0, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0, 1, 0],
            vec![0, 0, 0, 0, 0, 0, 1],
        ],
    );
    let partial = t.q_inv().mul(&coboundary_matrix(&n, 0, f)).unwrap();
    assert_matrix(
        &partial,
        &[
            vec![0, 0, 0, 0, 0],
            vec![-1, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0],
            vec![0, -1, 0, 1, 0],
            vec![0, -1, 0, 0, 1],
            vec![0, 0, -1, 1, 0],
            vec![0, 0, 0, -1, 1],
        ],
    );
}

#[test]
fn compatible_bases_in_degree_one() {
    let n = nerve(LARGE, &eps_prime());
    let f = Field::Rational;
    let pair = compatible_bases(&coboundary_matrix(&n, 1, f), &coboundary_matrix(&n, 0, f)).unwrap();

    // Rows five and seven of `Q^{-1}·δ^0` repeat the pivot of row four.
    let mut p = vec![vec![0i64; 7]; 7];
    for (i, row) in p.iter_mut().enumerate() {
        row[i] = 1;
    }
    p[4][3] = -1;
    p[6] = vec![0, 0, 0, 1, -1, 0, 1];
    assert_matrix(pair.row_reduction().p(), &p);
    assert_matrix(
        pair.row_reduction().reduced(),
        &[
            vec![0, 0, 0, 0, 0],
            vec![-1, 0, 1, 0, 0],
            vec![0, 0, 0, 0, 0],
            vec![0, -1, 0, 1, 0],
            vec![0, 0, 0, -1, 1],
            vec![0, 0, -1, 1, 0],
            vec![0, 0, 0, 0, 0],
        ],
    );

    let labels: Vec<&str> = pair.kernel_basis().iter().map(|v| v.label.as_str()).collect();
    assert_eq!(labels, ["v_2", "v_4", "v_5", "v_6", "v_7"]);
    let coords: Vec<&Vec<Scalar>> = pair.kernel_basis().iter().map(|v| &v.coords).collect();
    assert_eq!(*coords[0], edge_cochain(f, [1, 1, 0, 0, 0, 0, 0]));
    assert_eq!(*coords[1], edge_cochain(f, [-1, 0, 1, 1, 1, 0, 0]));
    assert_eq!(*coords[2], edge_cochain(f, [0, 0, 0, 0, 1, 0, 1]));
    assert_eq!(*coords[3], edge_cochain(f, [1, 0, -1, 0, 0, 1, 0]));
    assert_eq!(*coords[4], edge_cochain(f, [0, 0, 0, 0, 0, 0, 1]));
    assert_eq!(pair.image_subset(), [0, 1, 2, 3]);
    assert_eq!(pair.quotient(), [4]);
    assert!(pair.transform().mul(&pair.transform_inverse()).unwrap().is_identity());
}

#[test]
fn degree_one_class_is_u14() {
    let n = nerve(LARGE, &eps_prime());
    let f = Field::Rational;
    let b = cohomology_basis(&n, 1, f);
    assert_eq!(b.betti(), 1);
    let u14 = edge_cochain(f, [0, 0, 0, 0, 1, 0, 0]);
    let u34 = edge_cochain(f, [0, 0, 0, 0, 0, 0, 1]);
    // δ^0 u_4 = u_14 + u_34, so the two classes are negatives of each other.
    assert_eq!(class_membership(&u34, &b).unwrap(), Some(ints(f, &[1])));
    assert_eq!(class_membership(&u14, &b).unwrap(), Some(ints(f, &[-1])));
}

#[test]
fn replayed_small_bases() {
    let fil = Filtration::from_fixture_json(TWO_SCALES).unwrap();
    let f = Field::Rational;
    let chain = replay_chain(&fil, &[eps(), eps_prime()], f, 2).unwrap();
    assert_eq!(chain.betti(0), [2, 1, 0]);
    assert_eq!(chain.betti(1), [1, 1, 0]);

    let b1 = chain.basis(0, 1);
    assert_eq!(b1.cochain_labels, ["u_{01}", "u_{02}", "u_{12}", "u_{13}", "u_{23}"]);
    let labels: Vec<&str> = b1.kernel_basis.iter().map(|v| v.label.as_str()).collect();
    assert_eq!(labels, ["v_2", "v_3", "v_4", "v_6"]);
    let coords: Vec<Vec<Scalar>> = b1.kernel_basis.iter().map(|v| v.coords.clone()).collect();
    assert_eq!(coords[0], ints(f, &[1, 1, 0, 0, 0]));
    assert_eq!(coords[1], ints(f, &[-1, 0, 1, 0, 0]));
    assert_eq!(coords[2], ints(f, &[-1, 0, 1, 1, 0]));
    assert_eq!(coords[3], ints(f, &[1, 0, -1, 0, 1]));
    assert_eq!(b1.image_subset, [0, 2, 3]);
    assert_eq!(b1.quotient, [1]);
    assert_eq!(b1.describe(&coords[1]), "-u_{01} + u_{12}");

    let b0 = chain.basis(0, 0);
    let reps: Vec<Vec<Scalar>> = b0.quotient_reps().iter().map(|v| v.coords.clone()).collect();
    assert_eq!(reps, [ints(f, &[1, 1, 1, 1, 0]), ints(f, &[1, 1, 1, 1, 1])]);
}

#[test]
fn replay_agrees_with_fresh_reduction() {
    let fil = Filtration::from_fixture_json(TWO_SCALES).unwrap();
    let f = Field::Rational;
    let chain = replay_chain(&fil, &[eps(), eps_prime()], f, 2).unwrap();
    let fresh = cohomology_basis(&nerve(SMALL, &eps()), 1, f);
    assert_eq!(chain.basis(0, 1).betti(), fresh.betti());
    let top = cohomology_basis(&nerve(LARGE, &eps_prime()), 1, f);
    assert_eq!(chain.basis(1, 1).kernel_basis, top.kernel_basis);
}

#[test]
fn induced_maps_between_the_scales() {
    let fil = Filtration::from_fixture_json(TWO_SCALES).unwrap();
    let f = Field::Rational;
    let chain = replay_chain(&fil, &[eps(), eps_prime()], f, 2).unwrap();

    let h1 = induced_map(&chain, 1, &eps_prime(), &eps()).unwrap();
    let u14 = edge_cochain(f, [0, 0, 0, 0, 1, 0, 0]);
    let class = class_membership(&u14, chain.basis(1, 1)).unwrap().unwrap();
    let image = h1.matrix.mul_vec(&class).unwrap();
    assert!(image.iter().all(Scalar::is_zero));
    assert_eq!(rank(&h1.matrix), 0);

    // [−u01 + u12] is a nonzero class at ε, and the H^1 map has zero image.
    let loop_class = class_membership(&ints(f, &[-1, 0, 1, 0, 0]), chain.basis(0, 1)).unwrap().unwrap();
    assert!(loop_class.iter().any(|c| !c.is_zero()));

    let h0 = induced_map(&chain, 0, &eps_prime(), &eps()).unwrap();
    assert_eq!(rank(&h0.matrix), 1);
    let ones = chain.basis(1, 0).quotient_reps()[0].coords.clone();
    assert_eq!(ones, ints(f, &[1, 1, 1, 1, 1]));
    let target = chain.basis(0, 0);
    let expected = class_membership(&ones, target).unwrap().unwrap();
    assert_eq!(h0.matrix.mul_vec(&ints(f, &[1])).unwrap(), expected);
    assert_eq!(expected, ints(f, &[0, 1]));
}

#[test]
fn prime_field_gives_the_same_bases() {
    let n = nerve(LARGE, &eps_prime());
    let q = cohomology_basis(&n, 1, Field::Rational);
    let p = cohomology_basis(&n, 1, Field::prime(1_000_000_007).unwrap());
    let render = |b: &cechpers::cohomology::CohomologyBasis| -> Vec<String> {
        b.kernel_basis.iter().map(|v| b.describe(&v.coords)).collect()
    };
    assert_eq!(render(&q), render(&p));
    assert_eq!(q.quotient, p.quotient);
}
