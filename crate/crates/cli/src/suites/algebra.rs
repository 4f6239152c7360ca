use super::{indicator, max_of, stream};
use crate::{Check, CheckReport, Config};
use paraquat::algebra::unit_flow;
use paraquat::{sampling, FlowAxis, Rational, Scalar, SmallRational, SplitQuaternion};

/// Exact field for the high-volume identity checks.
type E = SmallRational;
type Q = SplitQuaternion<E>;

pub(crate) fn run(c: &Config) -> Vec<CheckReport> {
    let n = c.samples;
    vec![
        Check::new("algebra.norm_multiplicativity", "norm-multiplicative", 0.0, n).run(c, || {
            let mut r = stream(c, "algebra.norm_multiplicativity");
            Ok(max_of((0..n).map(|_| {
                let (p, q) = (sampling::quaternion::<E>(&mut r), sampling::quaternion::<E>(&mut r));
                ((&p * &q).square_norm() - p.square_norm() * q.square_norm()).abs().to_f64()
            })))
        }),
        Check::new("algebra.conjugation_antiautomorphism", "conjugation", 0.0, n).run(c, || {
            let mut r = stream(c, "algebra.conjugation_antiautomorphism");
            Ok(max_of((0..n).map(|_| {
                let (p, q) = (sampling::quaternion::<E>(&mut r), sampling::quaternion::<E>(&mut r));
                let anti = ((&p * &q).conj() - &q.conj() * &p.conj()).max_abs();
                let inv = (p.conj().conj() - p.clone()).max_abs();
                let add = ((p.clone() + q.clone()).conj() - (p.conj() + q.conj())).max_abs();
                anti.max(inv).max(add)
            })))
        }),
        Check::fixed("algebra.product_table", "unit-products", 0.0).run(c, || {
            let [i, j, k] = Q::units();
            let one = Q::one();
            let table = [
                (&i * &i, -one.clone()),
                (&j * &j, one.clone()),
                (&k * &k, one.clone()),
                (&i * &j, k.clone()),
                (&j * &i, -k.clone()),
                (&j * &k, -i.clone()),
                (&k * &j, i.clone()),
                (&k * &i, j.clone()),
                (&i * &k, -j.clone()),
            ];
            Ok(max_of(table.into_iter().map(|(a, b)| (a - b).max_abs())))
        }),
        Check::new("algebra.associativity", "associativity", 0.0, n).run(c, || {
            let mut r = stream(c, "algebra.associativity");
            Ok(max_of((0..n).map(|_| {
                let [p, q, s] = std::array::from_fn(|_| sampling::quaternion::<E>(&mut r));
                (&(&p * &q) * &s - &p * &(&q * &s)).max_abs()
            })))
        }),
        Check::new("algebra.inverse", "inverse", 0.0, n).run(c, || {
            let mut r = stream(c, "algebra.inverse");
            let mut worst: f64 = 0.0;
            for _ in 0..n {
                let q = sampling::quaternion::<E>(&mut r);
                match q.inverse(0.0) {
                    Ok(inv) => worst = worst.max((&q * &inv - Q::one()).max_abs()).max((&inv * &q - Q::one()).max_abs()),
                    Err(_) => worst = worst.max(indicator(q.square_norm().negligible(0.0))),
                }
            }
            let j = Q::j();
            worst = worst.max(indicator(j.inverse(0.0).ok() == Some(j.clone())));
            worst = worst.max(indicator(Q::from_i64(1, 0, 1, 0).inverse(0.0).is_err()));
            Ok(worst)
        }),
        Check::new("algebra.complex_representation", "complex-rep", 0.0, n).run(c, || {
            let mut r = stream(c, "algebra.complex_representation");
            Ok(max_of((0..n).map(|_| {
                let q = sampling::quaternion::<E>(&mut r);
                let (z1, z2) = q.complex_rep();
                // |q|² = |z₁|² - |z₂|²
                let norm = (z1.norm_sqr() - z2.norm_sqr() - q.square_norm()).abs().to_f64();
                norm.max((Q::from_complex(&z1, &z2) - q).max_abs())
            })))
        }),
        Check::new("algebra.rational_flows", "unit-flow", 0.0, n).run(c, || {
            let mut r = stream(c, "algebra.rational_flows");
            Ok(max_of((0..n).map(|_| {
                let u: E = sampling::scalar(&mut r);
                let a = SplitQuaternion::flow_rational(FlowAxis::I, u);
                let worst = (a.square_norm() - E::from_i64(1)).abs().to_f64();
                if u.abs().to_f64() < 1.0 {
                    let b = SplitQuaternion::flow_rational(FlowAxis::J, u);
                    worst.max((b.square_norm() - E::from_i64(1)).abs().to_f64())
                } else {
                    worst
                }
            })))
        }),
        Check::new("algebra.flow_addition", "unit-flow", 1e-12, n).run(c, || {
            let mut r = stream(c, "algebra.flow_addition");
            Ok(max_of((0..n).map(|_| {
                let (t, s) = (sampling::scalar::<f64>(&mut r), sampling::scalar::<f64>(&mut r));
                [FlowAxis::I, FlowAxis::J]
                    .iter()
                    .map(|&ax| {
                        let prod = &unit_flow(ax, t) * &unit_flow(ax, s);
                        let sum = unit_flow(ax, t + s);
                        (prod - sum.clone()).max_abs() / sum.max_abs().max(1.0)
                    })
                    .fold(0.0, f64::max)
            })))
        }),
        Check::new("algebra.text_round_trip", "text-format", 0.0, n).run(c, || {
            let mut r = stream(c, "algebra.text_round_trip");
            let mut worst: f64 = 0.0;
            for _ in 0..n {
                let q = sampling::quaternion::<Rational>(&mut r);
                let back: SplitQuaternion<Rational> = q.to_string().parse()?;
                worst = worst.max((back - q).max_abs());
            }
            Ok(worst)
        }),
    ]
}
