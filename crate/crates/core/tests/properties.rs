use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use hlk::diagram::{linking_number, parse_diagram};
use hlk::exactla::{
    apply_slide, elementary_divisors, minor_gcd_profile, parse_matrix, random_unimodular,
    smith_normal_form, Axis, IntMatrix,
};
use hlk::invariant::{handlebody_linking, quotient_group, reconstruct_lk, Side};

fn matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::from_vec(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
        })
    })
}

/// Matrices with low rank and shared factors, built as k * A * B.
fn structured_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=5, 1usize..=5, 0usize..=3, 1i64..=4).prop_flat_map(|(r, c, inner, k)| {
        (
            prop::collection::vec(-3i64..=3, r * inner),
            prop::collection::vec(-3i64..=3, inner * c),
        )
            .prop_map(move |(a, b)| {
                let a = IntMatrix::from_vec(r, inner, a.into_iter().map(BigInt::from).collect()).unwrap();
                let b = IntMatrix::from_vec(inner, c, b.into_iter().map(|x| BigInt::from(x * k)).collect()).unwrap();
                a.mul(&b).unwrap()
            })
    })
}

fn check_against_oracle(m: &IntMatrix) -> Result<(), TestCaseError> {
    let snf = smith_normal_form(m);
    prop_assert!(snf.verify(m).is_ok(), "{:?}", snf.verify(m));
    let profile = minor_gcd_profile(m).unwrap();
    let mut prefix = BigInt::one();
    for (k, dk) in profile.iter().enumerate() {
        match snf.divisors.get(k) {
            Some(d) => {
                prefix *= d;
                prop_assert_eq!(dk, &prefix);
            }
            None => prop_assert!(dk.is_zero()),
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_matches_minor_gcds(m in matrix(5, 9)) {
        check_against_oracle(&m)?;
    }

    #[test]
    fn snf_matches_minor_gcds_structured(m in structured_matrix()) {
        check_against_oracle(&m)?;
    }

    #[test]
    fn divisors_survive_basis_change(m in matrix(6, 9), su in any::<u64>(), sv in any::<u64>(), ops in 0usize..=20) {
        prop_assume!(m.rows() > 0 && m.cols() > 0);
        let u = random_unimodular(m.rows(), su, ops);
        let v = random_unimodular(m.cols(), sv, ops);
        let moved = u.mul(&m).unwrap().mul(&v).unwrap();
        prop_assert_eq!(elementary_divisors(&moved), elementary_divisors(&m));
        prop_assert_eq!(handlebody_linking(&moved), handlebody_linking(&m));
    }

    #[test]
    fn random_unimodular_has_unit_determinant(size in 1usize..=6, seed in any::<u64>(), ops in 0usize..=40) {
        let det = random_unimodular(size, seed, ops).determinant().unwrap();
        prop_assert!(det == BigInt::one() || det == -BigInt::one());
    }

    #[test]
    fn transpose_and_slides(m in matrix(6, 9), src in 0usize..6, step in 1usize..6, neg in any::<bool>(), row in any::<bool>()) {
        prop_assert_eq!(m.transpose().transpose(), m.clone());
        prop_assert_eq!(elementary_divisors(&m.transpose()), elementary_divisors(&m));
        let (axis, len) = if row { (Axis::Row, m.rows()) } else { (Axis::Col, m.cols()) };
        prop_assume!(len >= 2);
        let (src, dst) = (src % len, (src + step) % len);
        prop_assume!(src != dst);
        let coeff = if neg { -1 } else { 1 };
        let slid = apply_slide(&m, axis, src, dst, coeff).unwrap();
        prop_assert_eq!(elementary_divisors(&slid), elementary_divisors(&m));
        prop_assert_eq!(apply_slide(&slid, axis, src, dst, -coeff).unwrap(), m);
    }

    #[test]
    fn quotient_groups_agree(m in matrix(6, 9)) {
        let a1 = quotient_group(&m, Side::First);
        let a2 = quotient_group(&m, Side::Second);
        let l = elementary_divisors(&m).len();
        prop_assert_eq!(a1.torsion(), a2.torsion());
        prop_assert_eq!(a1.free_rank() as i64 - a2.free_rank() as i64, m.rows() as i64 - m.cols() as i64);
        let lk = handlebody_linking(&m);
        prop_assert_eq!(reconstruct_lk(&a1, l).unwrap(), lk.clone());
        prop_assert_eq!(lk.is_zero(), l == 0);
    }

    #[test]
    fn matrix_text_round_trip(m in matrix(5, 1_000_000)) {
        prop_assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn linking_is_bilinear(
        s1 in prop::collection::vec(any::<bool>(), 0..6),
        s2 in prop::collection::vec(any::<bool>(), 0..6),
        noise in prop::collection::vec(any::<bool>(), 0..4),
    ) {
        // each entry is a same-sign crossing pair, so every pair sum is even
        let mut text = String::from("component h1\nloop a1\nloop a2\ncomponent h2\nloop b\n");
        for (id, signs) in [("a1", &s1), ("a2", &s2)] {
            for &pos in signs.iter() {
                let s = if pos { '+' } else { '-' };
                text.push_str(&format!("crossing {id} b {s}\ncrossing b {id} {s}\n"));
            }
        }
        for &pos in &noise {
            text.push_str(&format!("crossing a1 a2 {}\n", if pos { '+' } else { '-' }));
        }
        let d = parse_diagram(&text).unwrap();
        let merged = d.merge_loops("a1", "a2", "a12").unwrap();
        let lhs = linking_number(&merged, "a12", "b").unwrap();
        let rhs = linking_number(&d, "a1", "b").unwrap() + linking_number(&d, "a2", "b").unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(linking_number(&d, "b", "a1").unwrap(), linking_number(&d, "a1", "b").unwrap());
    }
}
