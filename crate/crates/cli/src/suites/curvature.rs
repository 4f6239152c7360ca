use super::{indicator, max_of, stream};
use crate::{Check, CheckReport, Config};
use paraquat::curvature::{
    autg_residual, commutes_with_structure, curv_from_bilinear, einstein_check, g_trace_residual, hpn_curvature, hpn_pair,
    jacobi_operator, jacobi_osserman, ricci_of_phi, ricci_split, sl_example, solvable_example, sp_h_curvature,
    sym_space_curvature, CurvatureTensor,
};
use paraquat::linalg::grassman_split;
use paraquat::sampling::SampleRng;
use paraquat::{sampling, HermitianStructure, Rational, Scalar};

/// Unit directions of the requested causal sign (`+1` spacelike, `-1` timelike).
fn unit_directions(r: &mut SampleRng, g: &paraquat::Matrix<f64>, sign: f64, count: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let x = sampling::normal_vec(r, g.rows());
        let n = g.bilinear(&x, &x);
        if n * sign > 1e-2 {
            let s = n.abs().sqrt();
            out.push(x.iter().map(|v| v / s).collect());
        }
    }
    out
}

fn random_b_checks<S: Scalar>(c: &Config, count: usize) -> paraquat::Result<f64> {
    let mut r = stream(c, "curvature.bilinear_family");
    let h = HermitianStructure::<S>::standard(c.n);
    let mut worst: f64 = 0.0;
    for _ in 0..count {
        let b = sampling::matrix::<S>(&mut r, h.dim(), h.dim());
        let rb = curv_from_bilinear(&b, &h);
        worst = worst.max(rb.bianchi_residual()).max(rb.antisymmetry_residual());
        worst = worst.max((&rb.ricci() - &ricci_of_phi(&b, &h)).max_abs());
    }
    Ok(worst)
}

fn split_check<S: Scalar>(c: &Config, tol: f64) -> paraquat::Result<f64> {
    let mut r = stream(c, "curvature.ricci_split");
    let h = HermitianStructure::<S>::standard(c.n);
    let model = hpn_curvature(&h);
    let split = grassman_split(&h, tol)?;
    let terms: Vec<(Vec<S>, S)> = (0..3).map(|_| (sampling::vector(&mut r, 2 * c.n), sampling::scalar(&mut r))).collect();
    let weyl = sp_h_curvature(&split, &h.g, &terms, tol)?;
    let mixed = model.add(&weyl);
    let (w, b) = ricci_split(&mixed, &h, tol)?;
    let mut worst = w.ricci().max_abs();
    worst = worst.max(w.sub(&weyl).max_abs()).max((&b - &h.g).max_abs());
    let rebuilt = w.add(&curv_from_bilinear(&b, &h));
    Ok(worst.max(rebuilt.sub(&mixed).max_abs()))
}

fn nilpotent_jacobi(r: &CurvatureTensor<Rational>) -> f64 {
    let d = r.dim();
    let mut worst: f64 = 0.0;
    let mut nonzero = false;
    for x in 0..d {
        for y in x..d {
            let v: Vec<Rational> = (0..d).map(|k| Rational::from_i64((k == x) as i64 + (k == y) as i64)).collect();
            let k = jacobi_operator(r, &v);
            nonzero |= k.max_abs() > 0.0;
            worst = worst.max((&k * &k).max_abs());
        }
    }
    worst.max(indicator(nonzero))
}

pub(crate) fn run(c: &Config) -> Vec<CheckReport> {
    let s = c.samples;
    let n = c.n;
    let heavy = s.min(20);
    let tol_f = 1e-9;
    let mut out = vec![
        Check::fixed("curvature.model_bianchi", "model-curvature", 0.0).run(c, || {
            let r = hpn_curvature(&HermitianStructure::<Rational>::standard(n));
            Ok(r.bianchi_residual().max(r.antisymmetry_residual()))
        }),
        Check::fixed("curvature.model_autg", "autg-membership", 0.0).run(c, || {
            let h = HermitianStructure::<Rational>::standard(n);
            let r = hpn_curvature(&h);
            Ok(autg_residual(&r, &h))
        }),
        Check::fixed("curvature.model_einstein", "einstein", 0.0).run(c, || {
            let r = hpn_curvature(&HermitianStructure::<Rational>::standard(n));
            let (k, resid) = einstein_check(&r, 0.0);
            Ok(resid.max(indicator(k == Rational::from_i64(4 * n as i64 + 8))))
        }),
        Check::new("curvature.model_jacobi_spectrum", "jacobi-spectrum", tol_f, s).run(c, || {
            let mut rng = stream(c, "curvature.model_jacobi_spectrum");
            let r = hpn_curvature(&HermitianStructure::<f64>::standard(n));
            let dirs = unit_directions(&mut rng, &r.g, 1.0, s);
            let report = jacobi_osserman(&r, &dirs, 1e-12)?;
            let mut expect = vec![-4.0; 3];
            expect.extend(vec![-1.0; 4 * n - 4]);
            Ok(max_of(report.directions.iter().flat_map(|d| {
                d.eigenvalues.iter().zip(&expect).map(|(e, x)| (e.0 - x).abs().max(e.1.abs())).collect::<Vec<_>>()
            })))
        }),
        Check::new("curvature.model_osserman", "osserman", tol_f, s).run(c, || {
            let mut rng = stream(c, "curvature.model_osserman");
            let r = hpn_curvature(&HermitianStructure::<f64>::standard(n));
            let mut dirs = unit_directions(&mut rng, &r.g, 1.0, s.div_ceil(2));
            dirs.extend(unit_directions(&mut rng, &r.g, -1.0, s / 2));
            let report = jacobi_osserman(&r, &dirs, 1e-12)?;
            let degrees = indicator(report.agrees(f64::INFINITY));
            Ok(report.spacelike_spread.max(report.timelike_spread).max(degrees))
        }),
        Check::new("curvature.jacobi_trace", "ricci-trace", 0.0, s).run(c, || {
            let mut rng = stream(c, "curvature.jacobi_trace");
            let h = HermitianStructure::<Rational>::standard(n);
            let r = hpn_curvature(&h);
            let ric = r.ricci();
            Ok(max_of((0..s).map(|_| {
                let x = sampling::vector::<Rational>(&mut rng, h.dim());
                (jacobi_operator(&r, &x).trace() + ric.bilinear(&x, &x)).abs().to_f64()
            })))
        }),
        Check::fixed("curvature.symmetric_pair_model", "symmetric-pair", 0.0).run(c, || {
            let pair = hpn_pair::<Rational>(n.min(2))?;
            let r = sym_space_curvature(&pair, 0.0)?;
            let model = hpn_curvature(&pair.structure);
            Ok(pair.jacobi_residual().max(r.add(&model).max_abs()))
        }),
        Check::fixed("curvature.solvable_example", "solvable-example", 0.0).run(c, || {
            let mut worst: f64 = 0.0;
            for sign in [1, -1] {
                let d = solvable_example::<Rational>(sign);
                let r = sym_space_curvature(&d, 0.0)?;
                worst = worst.max(d.jacobi_residual()).max(indicator(!r.is_zero()));
                worst = worst.max(r.bianchi_residual()).max(r.ricci().max_abs());
                worst = worst.max(autg_residual(&r, &d.structure)).max(g_trace_residual(&r, &d.structure));
                worst = worst.max(nilpotent_jacobi(&r));
            }
            Ok(worst)
        }),
        Check::fixed("curvature.sl4_example", "sl-example", 0.0).run(c, || {
            let d = sl_example::<Rational>(2)?;
            let r = sym_space_curvature(&d, 0.0)?;
            let (k, resid) = einstein_check(&r, 0.0);
            let h = &d.structure;
            let worst = max_of([
                d.jacobi_residual(),
                r.bianchi_residual(),
                resid,
                indicator(!k.negligible(0.0)),
                h.comrel_residual(),
                h.skew_residual(),
                autg_residual(&r, h),
                indicator(h.signature(0.0) == (4, 4, 0)),
            ]);
            Ok(worst)
        }),
        Check::new("curvature.sp_h_samples", "sp-h-curvature", 0.0, heavy).run(c, || {
            let mut rng = stream(c, "curvature.sp_h_samples");
            let h = HermitianStructure::<Rational>::standard(n);
            let split = grassman_split(&h, 0.0)?;
            let mut worst: f64 = 0.0;
            for _ in 0..heavy {
                let terms: Vec<(Vec<Rational>, Rational)> =
                    (0..2).map(|_| (sampling::vector(&mut rng, 2 * n), sampling::scalar(&mut rng))).collect();
                let r = sp_h_curvature(&split, &h.g, &terms, 0.0)?;
                worst = max_of([worst, r.bianchi_residual(), r.ricci().max_abs(), commutes_with_structure(&r, &h), g_trace_residual(&r, &h)]);
            }
            Ok(worst)
        }),
    ];
    out.push(Check::new("curvature.ricci_split", "ricci-decomposition", 0.0, 1).run(c, || split_check::<Rational>(c, 0.0)));
    if c.exact {
        out.push(Check::new("curvature.bilinear_family", "curvature-of-bilinear", 0.0, heavy).run(c, || random_b_checks::<Rational>(c, heavy)));
    } else {
        out.push(Check::new("curvature.bilinear_family", "curvature-of-bilinear", 1e-9, heavy).run(c, || random_b_checks::<f64>(c, heavy)));
    }
    out
}
