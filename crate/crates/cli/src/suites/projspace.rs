use super::{indicator, max_of, sphere_point, stream};
use crate::{Check, CheckReport, Config};
use paraquat::linalg::sp_group_residual;
use paraquat::projspace::{
    horizontal_invariance_residual, induced_geometry, lift_span_defect, tangent_split, transitive_element, unitary_residual,
    SpherePoint,
};
use paraquat::{sampling, Rational};

pub(crate) fn run(c: &Config) -> Vec<CheckReport> {
    let s = c.samples;
    let n = c.n;
    let tol = 1e-9;
    vec![
        Check::fixed("projspace.base_point", "projective-model", 0.0).run(c, || {
            let o = SpherePoint::<Rational>::base(n);
            let split = tangent_split(&o, 0.0)?;
            let h = induced_geometry(&split, 0.0)?;
            Ok(max_of([
                h.comrel_residual(),
                h.skew_residual(),
                horizontal_invariance_residual(&split),
                indicator(h.signature(0.0) == (2 * n, 2 * n, 0)),
            ]))
        }),
        Check::new("projspace.induced_structure", "projective-model", tol, s).run(c, || {
            let mut r = stream(c, "projspace.induced_structure");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let x = SpherePoint::new(sphere_point(&mut r, n + 1), 1e-9)?;
                let split = tangent_split(&x, 1e-10)?;
                let h = induced_geometry(&split, 1e-10)?;
                worst = max_of([worst, h.comrel_residual(), h.skew_residual(), horizontal_invariance_residual(&split)]);
                worst = worst.max(indicator(h.signature(1e-9) == (2 * n, 2 * n, 0)));
            }
            Ok(worst)
        }),
        Check::new("projspace.lift_independence", "projective-model", 0.0, s).run(c, || {
            let mut r = stream(c, "projspace.lift_independence");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let x = SpherePoint::new(sphere_point(&mut r, n + 1), 1e-9)?;
                // unit lifts stay on the pseudosphere
                let q = sampling::quaternion::<f64>(&mut r);
                let nq = q.square_norm();
                if nq < 1e-2 {
                    continue;
                }
                let q = q.scale(&(1.0 / nq.sqrt()));
                worst = worst.max(lift_span_defect(&x, &q, 1e-9)? as f64);
            }
            Ok(worst)
        }),
        Check::new("projspace.transitive_element", "transitivity", tol, s).run(c, || {
            let mut r = stream(c, "projspace.transitive_element");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let u = sphere_point(&mut r, n + 1);
                let m = transitive_element(&SpherePoint::new(u.clone(), 1e-9)?, 1e-9)?;
                let first = m.column(0).sub(&u).max_abs();
                worst = max_of([worst, unitary_residual(&m), sp_group_residual(&m), first]);
            }
            Ok(worst)
        }),
    ]
}
