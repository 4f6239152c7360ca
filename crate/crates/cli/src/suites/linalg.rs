use super::{indicator, max_of, stream};
use crate::{Check, CheckReport, Config};
use paraquat::linalg::{adopted_basis, adopted_system, grassman_split, mu, neutral_metric, sp_membership};
use paraquat::{sampling, HermitianStructure, Matrix, Rational, Scalar, SmallRational};

pub(crate) fn run(c: &Config) -> Vec<CheckReport> {
    let s = c.samples;
    let mut out = Vec::new();
    for (n, name) in [(1, "linalg.real_rep_brackets.n1"), (2, "linalg.real_rep_brackets.n2"), (3, "linalg.real_rep_brackets.n3")] {
        out.push(Check::new(name, "mu-bracket", 0.0, s).run(c, || {
            let mut r = stream(c, name);
            Ok(max_of((0..s).map(|_| {
                let a = sampling::pq_matrix::<SmallRational>(&mut r, n);
                let b = sampling::pq_matrix::<SmallRational>(&mut r, n);
                let (ra, rb) = (a.real_rep(), b.real_rep());
                let bracket = (&a.bracket(&b).real_rep() - &ra.commutator(&rb)).max_abs();
                let product = (&a.mul(&b).real_rep() - &(&ra * &rb)).max_abs();
                // the image of μ∘z is real
                let (_, im) = mu(&a.complex_rep());
                bracket.max(product).max(im.max_abs())
            })))
        }));
    }
    out.push(Check::new("linalg.sp_bracket_closed", "sp-membership", 0.0, s).run(c, || {
        let mut r = stream(c, "linalg.sp_bracket_closed");
        let n = c.n;
        Ok(max_of((0..s).map(|_| {
            let a = sampling::skew_hermitian::<SmallRational>(&mut r, n);
            let b = sampling::skew_hermitian::<SmallRational>(&mut r, n);
            let res = [sp_membership(&a, 0.0).1, sp_membership(&b, 0.0).1, sp_membership(&a.bracket(&b), 0.0).1];
            max_of(res)
        })))
    }));
    out.push(Check::new("linalg.real_action_commutes", "right-module", 0.0, s).run(c, || {
        // left matrix action commutes with the structure, which acts by right multiplication
        let mut r = stream(c, "linalg.real_action_commutes");
        let h = HermitianStructure::<SmallRational>::standard(c.n);
        Ok(max_of((0..s).map(|_| {
            let a = sampling::pq_matrix::<SmallRational>(&mut r, c.n).real_action();
            max_of(h.j.iter().map(|j| a.commutator(j).max_abs()))
        })))
    }));
    out.push(Check::new("linalg.scalar_product", "neutral-scalar-product", 0.0, s).run(c, || {
        let mut r = stream(c, "linalg.scalar_product");
        let g = neutral_metric::<Rational>(c.n);
        let mut worst: f64 = 0.0;
        for _ in 0..s {
            let u = sampling::pq_vector::<Rational>(&mut r, c.n);
            let v = sampling::pq_vector::<Rational>(&mut r, c.n);
            let q = sampling::quaternion::<Rational>(&mut r);
            let uv = u.module_scalar_product(&v)?;
            let real = g.bilinear(&u.to_real(), &v.to_real());
            let complex = u.complex_scalar_product(&v)?;
            let scaled = u.right_mul(&q).module_scalar_product(&v.right_mul(&q))?;
            let dev = [
                (uv.clone() - real).abs().to_f64(),
                (uv.clone() - complex).abs().to_f64(),
                (scaled - q.square_norm() * uv).abs().to_f64(),
            ];
            worst = worst.max(max_of(dev));
        }
        Ok(worst)
    }));
    out.push(Check::fixed("linalg.structure_relations", "structure-products", 0.0).run(c, || {
        let worst = [HermitianStructure::<Rational>::standard(c.n), HermitianStructure::left(c.n)]
            .iter()
            .map(|h| h.comrel_residual().max(h.skew_residual()))
            .fold(0.0, f64::max);
        Ok(worst)
    }));
    out.push(Check::fixed("linalg.neutral_signature", "neutral-signature", 0.0).run(c, || {
        let h = HermitianStructure::<Rational>::standard(c.n);
        Ok(indicator(h.signature(0.0) == (2 * c.n, 2 * c.n, 0)))
    }));
    out.push(Check::fixed("linalg.adopted_basis", "adopted-basis", 0.0).run(c, || {
        let h = HermitianStructure::<Rational>::standard(c.n);
        let sys = adopted_system(&h, &adopted_basis(&h, 0.0)?);
        Ok(indicator(!sys.det().negligible(0.0)))
    }));
    out.push(Check::fixed("linalg.grassman_split", "grassman", 0.0).run(c, || {
        let h = HermitianStructure::<Rational>::standard(c.n);
        let gs = grassman_split(&h, 0.0)?;
        let p = &gs.change;
        let pinv = p.inverse(0.0).ok_or(paraquat::PqError::SingularSystem)?;
        let mut worst: f64 = 0.0;
        for a in 0..3 {
            let expect = Matrix::block_diag(&vec![gs.j_blocks[a].clone(); 2 * c.n]);
            worst = worst.max((&(&(&pinv * &h.j[a]) * p) - &expect).max_abs());
        }
        worst = worst.max((&(&(&p.transpose() * &h.g) * p) - &gs.metric_in_split()).max_abs());
        Ok(worst)
    }));
    out
}
