use super::{indicator, max_of, sphere_point, stream};
use crate::{Check, CheckReport, Config};
use paraquat::reduction::{
    ambient_einstein_constant, lemma_moment, pq_horizontal_direction, pq_jalpha_residual, pq_killing, pq_levelset,
    pq_levelset_axis, pq_sample_levelset, reduced_jacobi, BasePointData,
};
use paraquat::{sampling, FlowAxis, PQVector, Rational, Scalar, SplitQuaternion};

/// Both sides are called zero below this magnitude.
const ZERO: f64 = 1e-6;

/// `(√(p/(p+q)), √(q/(p+q)) i, 0)` lies on the zero set for every `(p, q)`.
fn closed_form_zero(p: u64, q: u64) -> PQVector<f64> {
    let t = (p + q) as f64;
    PQVector::new(vec![
        SplitQuaternion::real((p as f64 / t).sqrt()),
        SplitQuaternion::i().scale(&(q as f64 / t).sqrt()),
        SplitQuaternion::zero(),
    ])
}

pub(crate) fn run(c: &Config) -> Vec<CheckReport> {
    let s = c.samples;
    let (p, q) = (c.p, c.q);
    let points = s.min(20);
    let directions = 20;
    vec![
        Check::fixed("reduce-pq.killing_examples", "pq-killing", 0.0).run(c, || {
            type Q = SplitQuaternion<Rational>;
            let o = PQVector::new(vec![Q::one(), Q::zero(), Q::zero()]);
            let v = pq_killing(p, q, &o);
            let expect = Q::j().scale(&Rational::from_i64(q as i64));
            let (value, regular) = pq_levelset(p, q, &o, 0.0);
            let mut worst = max_of([(v.entries[0].clone() - expect.clone()).max_abs(), (value - expect).max_abs(), indicator(regular)]);
            if (p, q) == (1, 2) {
                let u = PQVector::new(vec![Q::one(), Q::i(), Q::j()]);
                let (value, regular) = pq_levelset(p, q, &u, 0.0);
                worst = max_of([worst, value.max_abs(), indicator(regular)]);
            }
            Ok(worst)
        }),
        Check::new("reduce-pq.killing_tangent", "pq-killing", 1e-12, s).run(c, || {
            let mut r = stream(c, "reduce-pq.killing_tangent");
            Ok(max_of((0..s).map(|_| {
                let u = sphere_point(&mut r, 3);
                let v = pq_killing(p, q, &u);
                v.module_scalar_product(&u).expect("same rank").abs() / v.max_abs().max(1.0)
            })))
        }),
        Check::new("reduce-pq.equivariance", "pq-level-set", 1e-9, s).run(c, || {
            let mut r = stream(c, "reduce-pq.equivariance");
            Ok(max_of((0..s).map(|_| {
                let u = sphere_point(&mut r, 3);
                let t = sampling::scalar::<f64>(&mut r) / 2.0;
                let flow = |w: u64| paraquat::algebra::unit_flow(FlowAxis::J, w as f64 * t);
                let moved = PQVector::new(vec![&flow(q) * &u.entries[0], &flow(p) * &u.entries[1], &flow(p) * &u.entries[2]]);
                let (a, _) = pq_levelset(p, q, &u, 0.0);
                let (b, _) = pq_levelset(p, q, &moved, 0.0);
                let norm = (moved.module_scalar_product(&moved).expect("same rank") - 1.0).abs();
                ((a.clone() - b).max_abs() / a.max_abs().max(1.0)).max(norm)
            })))
        }),
        Check::new("reduce-pq.level_set_sampling", "pq-level-set", 1e-10, s).run(c, || {
            let pts = pq_sample_levelset(p, q, c.seed, s)?;
            let mut worst = pq_levelset(p, q, &closed_form_zero(p, q), 0.0).0.max_abs();
            for (_, u) in &pts {
                let (value, regular) = pq_levelset(p, q, u, 1e-9);
                let sphere = (u.module_scalar_product(u)? - 1.0).abs();
                worst = max_of([worst, value.max_abs(), sphere, indicator(regular)]);
            }
            Ok(worst)
        }),
        Check::new("reduce-pq.lemma_zero_agreement", "moment-lemma", 0.0, 2 * s).run(c, || {
            let k = ambient_einstein_constant();
            let mut r = stream(c, "reduce-pq.lemma_zero_agreement");
            let mut candidates: Vec<PQVector<f64>> = pq_sample_levelset(p, q, c.seed, s)?.into_iter().map(|(_, u)| u).collect();
            candidates.extend((0..s).map(|_| sphere_point(&mut r, 3)));
            let mut disagreements = 0usize;
            for u in &candidates {
                let level = pq_levelset(p, q, u, 0.0).0.max_abs() <= ZERO;
                let lemma = lemma_moment(p, q, u, k)?.max_abs() <= ZERO;
                disagreements += (level != lemma) as usize;
            }
            Ok(disagreements as f64)
        }),
        Check::new("reduce-pq.trace_identity", "jacobi-eigenvalues", 1e-12, points * directions).run(c, || {
            let k = ambient_einstein_constant();
            let mut worst: f64 = 0.0;
            for (seed, u) in pq_sample_levelset(p, q, c.seed, points)? {
                let data = BasePointData::new(p, q, &u)?;
                let mut r = sampling::substream(c.seed ^ 0x0074_7261_6365, seed);
                for _ in 0..directions {
                    let x = pq_horizontal_direction(&data, &mut r)?;
                    let l = reduced_jacobi(p, q, &u, &data, &x, k, 1e-9)?;
                    worst = worst.max((2.0 * l.lambda1 + l.lambda3 - 3.0 * k).abs()).max((l.lambda1 - l.lambda2).abs());
                }
            }
            Ok(worst)
        }),
        Check::new("reduce-pq.ratio_direction_independence", "pointwise-osserman", 1e-6, points * directions).run(c, || {
            let k = ambient_einstein_constant();
            let mut worst: f64 = 0.0;
            for (seed, u) in pq_sample_levelset(p, q, c.seed, points)? {
                let data = BasePointData::new(p, q, &u)?;
                let mut r = sampling::substream(c.seed ^ 0x0072_6174_696f, seed);
                let ratios = (0..directions)
                    .map(|_| Ok(reduced_jacobi(p, q, &u, &data, &pq_horizontal_direction(&data, &mut r)?, k, 1e-9)?.ratio))
                    .collect::<paraquat::Result<Vec<f64>>>()?;
                let (lo, hi) = ratios.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
                worst = worst.max((hi - lo) / hi.abs().max(lo.abs()).max(1e-300));
            }
            Ok(worst)
        }),
        Check::new("reduce-pq.ratio_point_dependence", "not-globally-osserman", 0.0, points).run(c, || {
            // residual is the shortfall of the spread across points below 1e-3
            let k = ambient_einstein_constant();
            let mut ratios = Vec::new();
            for (seed, u) in pq_sample_levelset(p, q, c.seed, points)? {
                let data = BasePointData::new(p, q, &u)?;
                let mut r = sampling::substream(c.seed ^ 0x0072_6174_696f, seed);
                ratios.push(reduced_jacobi(p, q, &u, &data, &pq_horizontal_direction(&data, &mut r)?, k, 1e-9)?.ratio);
            }
            let (lo, hi) = ratios.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
            Ok((1e-3 - (hi - lo)).max(0.0))
        }),
        Check::new("reduce-pq.jalpha_orthogonality", "jalpha-orthogonality", 1e-6, points).run(c, || {
            let mut worst: f64 = 0.0;
            for (_, u) in pq_sample_levelset(p, q, c.seed, points)? {
                worst = worst.max(pq_jalpha_residual(p, q, &u)?);
            }
            Ok(worst)
        }),
        Check::new("reduce-pq.i_axis_empty", "empty-preimage", 0.0, 100 * s).run(c, || {
            // residual counts sphere samples that come within ZERO of the i-axis zero set
            let mut r = stream(c, "reduce-pq.i_axis_empty");
            let hits = (0..100 * s)
                .filter(|_| pq_levelset_axis(p, q, &sphere_point(&mut r, 3), &SplitQuaternion::i(), 0.0).0.max_abs() <= ZERO)
                .count();
            Ok(hits as f64)
        }),
    ]
}
