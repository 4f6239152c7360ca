use paraquat::curvature::{einstein_check, hpn_curvature, hpn_pair, jacobi_osserman, ricci_split, sym_space_curvature};
use paraquat::io::{read_curvature, write_curvature};
use paraquat::projspace::{transitive_element, unitary_residual, SpherePoint};
use paraquat::reduction::{
    ambient_einstein_constant, flat_level_point, flat_reduced_structure, lemma_moment, pq_levelset, pq_levelset_axis,
    pq_sample_levelset, BasePointData,
};
use paraquat::{sampling, HermitianStructure, PQVector, Rational, Scalar, SplitQuaternion};

#[test]
fn hpn_curvature_survives_serialization_and_splits() {
    let h = HermitianStructure::<Rational>::standard(2);
    let r = hpn_curvature(&h);
    let back = read_curvature::<Rational>(&write_curvature(&r)).unwrap();
    assert_eq!(back.data(), r.data());
    let (c, resid) = einstein_check(&back, 0.0);
    assert_eq!(c, Rational::from_i64(16));
    assert_eq!(resid, 0.0);
    let (w, b) = ricci_split(&back, &h, 0.0).unwrap();
    assert!(w.ricci().is_zero());
    assert_eq!(b, h.g);
}

#[test]
fn symmetric_pair_matches_model_up_to_sign() {
    let pair = hpn_pair::<Rational>(1).unwrap();
    let r = sym_space_curvature(&pair, 0.0).unwrap();
    let model = hpn_curvature(&HermitianStructure::<Rational>::standard(1));
    assert!(r.add(&model).is_zero());
}

#[test]
fn osserman_spectrum_of_model() {
    let r = hpn_curvature(&HermitianStructure::<f64>::standard(2));
    let mut rng = sampling::rng(5);
    let g = &r.g;
    let dirs: Vec<Vec<f64>> = (0..10)
        .map(|_| {
            let x = sampling::normal_vec(&mut rng, 8);
            let n = g.bilinear(&x, &x).abs().sqrt();
            x.iter().map(|v| v / n).collect()
        })
        .collect();
    let report = jacobi_osserman(&r, &dirs, 1e-9).unwrap();
    assert!(report.agrees(1e-9));
}

#[test]
fn flat_quotient_is_balanced() {
    let mut rng = sampling::rng(11);
    for n in 2..=3 {
        let h = flat_level_point(&mut rng, n);
        let red = flat_reduced_structure(&h, [-1.0, 0.0, 0.0], 1e-9).unwrap();
        assert!(red.structure.comrel_residual() < 1e-9);
        assert!(red.structure.skew_residual() < 1e-9);
        let (p, m, z) = red.structure.signature(1e-9);
        assert_eq!((p, m, z), (2 * n - 2, 2 * n - 2, 0));
    }
}

#[test]
fn pq_pipeline_agrees_with_level_set() {
    let k = ambient_einstein_constant();
    for (_, u) in pq_sample_levelset(1, 2, 21, 3).unwrap() {
        assert!(pq_levelset(1, 2, &u, 1e-9).0.max_abs() < 1e-9);
        assert!(lemma_moment(1, 2, &u, k).unwrap().max_abs() < 1e-8);
        let data = BasePointData::new(1, 2, &u).unwrap();
        let point = SpherePoint::new(u.clone(), 1e-8).unwrap();
        assert!(unitary_residual(&transitive_element(&point, 1e-9).unwrap()) < 1e-8);
        assert!(data.v.max_abs() > 0.0);
    }
    // off the level set both sides are nonzero
    let o = PQVector::new(vec![SplitQuaternion::one(), SplitQuaternion::zero(), SplitQuaternion::zero()]);
    assert!(lemma_moment(1, 2, &o, k).unwrap().max_abs() > 1e-3);
    let (v, _) = pq_levelset_axis(1, 2, &o, &SplitQuaternion::i(), 0.0);
    assert_eq!(v, SplitQuaternion::i().scale(&2.0));
}
