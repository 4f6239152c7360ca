use super::{indicator, max_of, stream};
use crate::{Check, CheckReport, Config};
use paraquat::reduction::{
    flat_equivariance_residual, flat_gradient_residual, flat_jalpha_residual, flat_level_point, flat_moment_definitional,
    flat_reduced_structure, flat_s1_moment, m_xi_residual,
};
use paraquat::sampling::SampleRng;
use paraquat::{sampling, FlowAxis, PQVector, SplitQuaternion};

/// Point of the level set `f = ξ` for `ξ = (-ρ, 0, 0)`.
fn level_point(r: &mut SampleRng, c: &Config) -> PQVector<f64> {
    flat_level_point(r, c.n).scale(&(-c.xi[0]).sqrt())
}

fn level_residual(h: &PQVector<f64>, xi: [f64; 3]) -> f64 {
    max_of(flat_s1_moment(h).iter().zip(&xi).map(|(a, b)| (a - b).abs()))
}

pub(crate) fn run(c: &Config) -> Vec<CheckReport> {
    let s = c.samples;
    let n = c.n;
    vec![
        Check::fixed("reduce-s1.moment_examples", "flat-moment", 0.0).run(c, || {
            let zero = flat_s1_moment(&PQVector::zeros(n));
            let e = flat_s1_moment(&PQVector::basis(n, 0, SplitQuaternion::one()));
            Ok(max_of(zero.iter().map(|v| v.abs())).max(max_of(e.iter().zip(&[-1.0, 0.0, 0.0]).map(|(a, b)| (a - b).abs()))))
        }),
        Check::new("reduce-s1.moment_definition", "flat-moment", 1e-12, s).run(c, || {
            let mut r = stream(c, "reduce-s1.moment_definition");
            Ok(max_of((0..s).map(|_| {
                let h = sampling::pq_vector::<f64>(&mut r, n);
                let a = flat_s1_moment(&h);
                let b = flat_moment_definitional(&h);
                max_of(a.iter().zip(&b).map(|(x, y)| (x - y).abs() / x.abs().max(1.0)))
            })))
        }),
        Check::new("reduce-s1.moment_gradient", "moment-gradient", 5e-4, s).run(c, || {
            let mut r = stream(c, "reduce-s1.moment_gradient");
            let mut worst = flat_gradient_residual(&sampling::pq_vector::<f64>(&mut r, n), &vec![0.0; 4 * n], 1e-5)?;
            for _ in 0..s {
                let h = sampling::pq_vector::<f64>(&mut r, n);
                let d = sampling::normal_vec(&mut r, 4 * n);
                worst = worst.max(flat_gradient_residual(&h, &d, 1e-5)?);
            }
            Ok(worst)
        }),
        Check::new("reduce-s1.level_set_invariance", "flat-level-set", 1e-12, s).run(c, || {
            let mut r = stream(c, "reduce-s1.level_set_invariance");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let h = level_point(&mut r, c);
                let t = sampling::scalar::<f64>(&mut r);
                let moved = h.left_mul(&paraquat::algebra::unit_flow(FlowAxis::I, t));
                worst = max_of([worst, level_residual(&h, c.xi), level_residual(&moved, c.xi), flat_equivariance_residual(&h, t)]);
            }
            Ok(worst)
        }),
        Check::new("reduce-s1.reduced_structure", "flat-reduction", 1e-9, s).run(c, || {
            let mut r = stream(c, "reduce-s1.reduced_structure");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let h = level_point(&mut r, c);
                let red = flat_reduced_structure(&h, c.xi, 1e-9)?;
                worst = max_of([worst, red.structure.comrel_residual(), red.structure.skew_residual()]);
            }
            Ok(worst)
        }),
        Check::new("reduce-s1.reduced_signature", "flat-reduction", 0.0, s).run(c, || {
            let mut r = stream(c, "reduce-s1.reduced_signature");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let h = level_point(&mut r, c);
                let red = flat_reduced_structure(&h, c.xi, 1e-9)?;
                worst = worst.max(indicator(red.structure.signature(1e-9) == (2 * n - 2, 2 * n - 2, 0)));
            }
            Ok(worst)
        }),
        Check::new("reduce-s1.quotient_equations", "flat-quotient", 1e-9, s).run(c, || {
            let mut r = stream(c, "reduce-s1.quotient_equations");
            Ok(max_of((0..s).map(|_| m_xi_residual(&level_point(&mut r, c)))))
        }),
        Check::new("reduce-s1.jalpha_orthogonality", "jalpha-orthogonality", 1e-9, s).run(c, || {
            let mut r = stream(c, "reduce-s1.jalpha_orthogonality");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                worst = worst.max(flat_jalpha_residual(&level_point(&mut r, c))?);
            }
            Ok(worst)
        }),
    ]
}
