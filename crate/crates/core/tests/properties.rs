use num_traits::{One, Zero};
use paraquat::curvature::{curv_from_bilinear, ricci_of_phi};
use paraquat::forms::{fundamental_four_form, hermitian_projector, project, rational_boost, rational_rotation, rotate_structure};
use paraquat::linalg::sp_membership;
use paraquat::{HermitianStructure, Matrix, PQMatrix, PQVector, Rational, Scalar, SplitQuaternion};
use proptest::prelude::*;

type Q = SplitQuaternion<Rational>;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| Rational::from_ratio(p, q))
}

fn quaternion() -> impl Strategy<Value = Q> {
    [rational(), rational(), rational(), rational()].prop_map(|[a, b, c, d]| Q::new(a, b, c, d))
}

fn pq_matrix(n: usize) -> impl Strategy<Value = PQMatrix<Rational>> {
    prop::collection::vec(quaternion(), n * n).prop_map(move |v| PQMatrix::from_fn(n, |r, c| v[r * n + c].clone()))
}

fn pq_vector(n: usize) -> impl Strategy<Value = PQVector<Rational>> {
    prop::collection::vec(quaternion(), n).prop_map(PQVector::new)
}

fn real_matrix(d: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), d * d).prop_map(move |v| Matrix::from_vec(d, d, v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(p in quaternion(), q in quaternion()) {
        prop_assert_eq!((&p * &q).square_norm(), p.square_norm() * q.square_norm());
    }

    #[test]
    fn conjugation_reverses_products(p in quaternion(), q in quaternion()) {
        prop_assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
        prop_assert_eq!(p.conj().conj(), p.clone());
        prop_assert!((&p * &p.conj()).is_real());
    }

    #[test]
    fn product_is_associative(p in quaternion(), q in quaternion(), r in quaternion()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn inverse_when_not_null(q in quaternion()) {
        match q.inverse(0.0) {
            Ok(inv) => {
                prop_assert!(!q.square_norm().is_zero());
                prop_assert_eq!(&q * &inv, Q::one());
            }
            Err(_) => prop_assert!(q.square_norm().is_zero()),
        }
    }

    #[test]
    fn complex_rep_round_trip(q in quaternion()) {
        let (z1, z2) = q.complex_rep();
        prop_assert_eq!(Q::from_complex(&z1, &z2), q);
    }

    #[test]
    fn text_round_trip(q in quaternion()) {
        prop_assert_eq!(q.to_string().parse::<Q>().unwrap(), q);
    }

    #[test]
    fn real_rep_preserves_brackets(a in pq_matrix(2), b in pq_matrix(2)) {
        let lhs = a.bracket(&b).real_rep();
        let rhs = a.real_rep().commutator(&b.real_rep());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sp_bracket_closed(a in pq_matrix(2), b in pq_matrix(2)) {
        // skew-hermitian parts lie in sp, and so does their bracket
        let sa = a.sub(&a.dagger());
        let sb = b.sub(&b.dagger());
        prop_assert!(sp_membership(&sa, 0.0).0);
        prop_assert!(sp_membership(&sb, 0.0).0);
        prop_assert!(sp_membership(&sa.bracket(&sb), 0.0).0);
    }

    #[test]
    fn scalar_product_is_right_linear(u in pq_vector(2), v in pq_vector(2), q in quaternion()) {
        // Σ ū (v q) = (Σ ū v) q
        prop_assert_eq!(u.hermitian(&v.right_mul(&q)), &u.hermitian(&v) * &q);
        prop_assert_eq!(u.hermitian(&v).conj(), v.hermitian(&u));
    }

    #[test]
    fn projector_is_idempotent(b in real_matrix(4)) {
        let h = HermitianStructure::<Rational>::standard(1);
        let once = project(&b, &h);
        prop_assert_eq!(project(&once, &h), once.clone());
        let parts = hermitian_projector(&b, &h);
        prop_assert_eq!(&parts.herm + &parts.mix, b.clone());
        let [s1, a1, s2, a2] = &parts.fourway;
        prop_assert_eq!(&(&(s1 + a1) + s2) + a2, b);
    }

    #[test]
    fn four_form_rotation_invariant(u in -4i64..=4, v in rational(), w in -4i64..=4) {
        let (u, w) = (Rational::from_ratio(u, 5), Rational::from_ratio(w, 5));
        let h = HermitianStructure::<Rational>::standard(1);
        let r = &(&rational_boost((0, 1), u) * &rational_rotation((1, 2), v)) * &rational_boost((0, 2), w);
        let rotated = rotate_structure(&h, &r, 0.0).unwrap();
        let a = fundamental_four_form(&h, 0.0).unwrap();
        let b = fundamental_four_form(&rotated, 0.0).unwrap();
        prop_assert_eq!(a.coefficients, b.coefficients);
    }

    #[test]
    fn curvature_of_bilinear_satisfies_bianchi(b in real_matrix(4)) {
        let h = HermitianStructure::<Rational>::standard(1);
        let r = curv_from_bilinear(&b, &h);
        prop_assert_eq!(r.bianchi_residual(), 0.0);
        prop_assert_eq!(r.antisymmetry_residual(), 0.0);
        prop_assert_eq!(r.ricci(), ricci_of_phi(&b, &h));
    }
}

#[test]
fn identity_generates_unit_norm() {
    assert!(Q::one().square_norm().is_one());
}
