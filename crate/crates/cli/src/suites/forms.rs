use super::{indicator, max_of, stream};
use crate::{Check, CheckReport, Config};
use paraquat::forms::{
    four_form_derivative, fundamental_four_form, plane_rotation, project, random_so21, random_tuple, rotate_structure, two_form,
};
use paraquat::{sampling, HermitianStructure, Rational, Scalar};

pub(crate) fn run(c: &Config) -> Vec<CheckReport> {
    let s = c.samples;
    // stored coefficients exist up to real dimension 8
    let n = c.n.min(2);
    vec![
        Check::new("forms.four_form_rotation_invariance", "four-form", 0.0, s).run(c, || {
            let mut r = stream(c, "forms.four_form_rotation_invariance");
            let h = HermitianStructure::<Rational>::standard(n);
            let base = fundamental_four_form(&h, 0.0)?.coefficients.expect("dim <= 8");
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let rot = random_so21::<Rational>(&mut r);
                let h2 = rotate_structure(&h, &rot, 0.0)?;
                worst = worst.max(h2.comrel_residual()).max(h2.skew_residual());
                let coeffs = fundamental_four_form(&h2, 0.0)?.coefficients.expect("dim <= 8");
                worst = worst.max(max_of(coeffs.iter().zip(&base).map(|(a, b)| (a.clone() - b.clone()).abs().to_f64())));
            }
            Ok(worst)
        }),
        Check::fixed("forms.so21_rejects_hyperbolic_j2j3", "so21", 0.0).run(c, || {
            let h = HermitianStructure::<Rational>::standard(1);
            let hyperbolic = plane_rotation(1, 2, Rational::from_ratio(5, 4), Rational::from_ratio(3, 4), true);
            let boost = plane_rotation(0, 1, Rational::from_ratio(5, 4), Rational::from_ratio(3, 4), true);
            Ok(indicator(rotate_structure(&h, &hyperbolic, 0.0).is_err() && rotate_structure(&h, &boost, 0.0).is_ok()))
        }),
        Check::new("forms.four_form_annihilated", "four-form-invariance", 0.0, s).run(c, || {
            // sp(n)⊕sp(1) acts trivially: left actions of skew-hermitian matrices and the J_α themselves
            let mut r = stream(c, "forms.four_form_annihilated");
            let h = HermitianStructure::<Rational>::standard(n);
            let omega = fundamental_four_form(&h, 0.0)?;
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let x = random_tuple::<Rational>(&mut r, h.dim());
                let args = [x[0].as_slice(), &x[1], &x[2], &x[3]];
                let a = sampling::skew_hermitian::<Rational>(&mut r, n).real_action();
                worst = worst.max(four_form_derivative(&omega, &a, args).abs().to_f64());
                for j in &h.j {
                    worst = worst.max(four_form_derivative(&omega, j, args).abs().to_f64());
                }
            }
            Ok(worst)
        }),
        Check::fixed("forms.two_forms_skew", "fundamental-two-forms", 0.0).run(c, || {
            let h = HermitianStructure::<Rational>::standard(c.n);
            let mut worst: f64 = 0.0;
            for j in &h.j {
                let w = two_form(j, &h.g, 0.0)?;
                worst = worst.max((&w + &w.transpose()).max_abs()).max(indicator(!w.det().negligible(0.0)));
            }
            Ok(worst)
        }),
        Check::new("forms.projector_idempotent", "hermitian-projector", 0.0, s).run(c, || {
            let mut r = stream(c, "forms.projector_idempotent");
            let h = HermitianStructure::<Rational>::standard(c.n);
            let mut worst = (&project(&h.g, &h) - &h.g).max_abs();
            for _ in 0..s {
                let b = sampling::matrix::<Rational>(&mut r, h.dim(), h.dim());
                let once = project(&b, &h);
                worst = worst.max((&project(&once, &h) - &once).max_abs());
            }
            Ok(worst)
        }),
        Check::new("forms.projector_basis_independent", "hermitian-projector", 0.0, s).run(c, || {
            let mut r = stream(c, "forms.projector_basis_independent");
            let h = HermitianStructure::<Rational>::standard(c.n);
            let mut worst: f64 = 0.0;
            for _ in 0..s {
                let rot = random_so21::<Rational>(&mut r);
                let h2 = rotate_structure(&h, &rot, 0.0)?;
                let b = sampling::matrix::<Rational>(&mut r, h.dim(), h.dim());
                worst = worst.max((&project(&b, &h) - &project(&b, &h2)).max_abs());
            }
            Ok(worst)
        }),
    ]
}
