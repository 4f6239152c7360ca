mod algebra;
mod curvature;
mod forms;
mod linalg;
mod projspace;
mod reduce_pq;
mod reduce_s1;

use crate::{CheckReport, Config, Suite};
use paraquat::sampling::{self, SampleRng};

pub(crate) fn run(suite: Suite, config: &Config) -> Vec<CheckReport> {
    match suite {
        Suite::Algebra => algebra::run(config),
        Suite::Linalg => linalg::run(config),
        Suite::Forms => forms::run(config),
        Suite::Curvature => curvature::run(config),
        Suite::Projspace => projspace::run(config),
        Suite::ReduceS1 => reduce_s1::run(config),
        Suite::ReducePq => reduce_pq::run(config),
        Suite::All => unreachable!("expanded by run_suite"),
    }
}

/// Independent stream for the check named `name`, so checks do not depend on each other's draws.
pub(crate) fn stream(config: &Config, name: &str) -> SampleRng {
    // FNV-1a of the name selects the substream
    let tag = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    sampling::substream(config.seed, tag)
}

pub(crate) fn max_of(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

/// 0 when the predicate holds, 1 otherwise.
pub(crate) fn indicator(ok: bool) -> f64 {
    if ok { 0.0 } else { 1.0 }
}

/// Random point of the unit pseudosphere `⟨u, u⟩ = 1` in H̃^rank.
pub(crate) fn sphere_point(r: &mut SampleRng, rank: usize) -> paraquat::PQVector<f64> {
    loop {
        let u = paraquat::PQVector::from_real(&sampling::normal_vec(r, 4 * rank));
        let n = u.module_scalar_product(&u).expect("same rank");
        if n > 1e-2 {
            return u.scale(&(1.0 / n.sqrt()));
        }
    }
}
