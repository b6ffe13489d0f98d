//! Randomized soundness harnesses: sample instances, keep those whose
//! hypothesis holds, and confirm the conclusion on every one of them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::conditions::{bdn_inequality, thm22_i_on_polys, thm22_ii_on_polys};
use super::ConditionVerdict;
use crate::engine::independence_polynomial;
use crate::error::Result;
use crate::family::FamilySpec;
use crate::formats::emit_graph6;
use crate::graph::Graph;
use crate::products::rooted_product;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessReport {
    pub name: String,
    pub requested: usize,
    /// Instances whose hypothesis held and whose conclusion was checked.
    pub instances: usize,
    pub attempts: usize,
    /// graph6 strings of the offending instances.
    pub counterexamples: Vec<String>,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.instances >= self.requested && self.counterexamples.is_empty()
    }
}

const ATTEMPTS_PER_SAMPLE: usize = 200;

fn random_graph(rng: &mut ChaCha8Rng, max_n: usize, p_lo: f64) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(p_lo..=1.0);
    Graph::random_gnp(n, p, rng).expect("small graph")
}

fn composition_harness(
    name: &str,
    samples: usize,
    seed: u64,
    check: impl Fn(&Graph, &Graph) -> Result<ConditionVerdict>,
) -> Result<HarnessReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = HarnessReport {
        name: name.to_string(),
        requested: samples,
        instances: 0,
        attempts: 0,
        counterexamples: Vec::new(),
    };
    while report.instances < samples && report.attempts < samples * ATTEMPTS_PER_SAMPLE {
        report.attempts += 1;
        let g1 = random_graph(&mut rng, 9, 0.1);
        let g2 = random_graph(&mut rng, 9, 0.4);
        let verdict = check(&g1, &g2)?;
        if !verdict.holds {
            continue;
        }
        report.instances += 1;
        if !verdict.is_sound() {
            report
                .counterexamples
                .push(format!("{} {}", emit_graph6(&g1), emit_graph6(&g2)));
        }
    }
    Ok(report)
}

/// Condition (i) with both polynomials log-concave must give a log-concave
/// composition.
pub fn thm22_i_harness(samples: usize, seed: u64) -> Result<HarnessReport> {
    composition_harness("thm22_i", samples, seed, |g1, g2| {
        thm22_i_on_polys(&independence_polynomial(g1), &independence_polynomial(g2))
    })
}

/// Condition (ii) with `I(G2)` log-concave must give a unimodal composition.
pub fn thm22_ii_harness(samples: usize, seed: u64) -> Result<HarnessReport> {
    composition_harness("thm22_ii", samples, seed, |g1, g2| {
        thm22_ii_on_polys(&independence_polynomial(g1), &independence_polynomial(g2))
    })
}

/// `G ∘ P2` for random `G`: well-covered, `alpha = |V(G)|`, and
/// `i_{k-1} <= k i_k` for every `k`.
pub fn rooted_p2_harness(samples: usize, seed: u64) -> Result<HarnessReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p2 = FamilySpec::Path(2).build()?;
    let mut report = HarnessReport {
        name: "rooted_p2_well_covered".into(),
        requested: samples,
        instances: 0,
        attempts: 0,
        counterexamples: Vec::new(),
    };
    for _ in 0..samples {
        report.attempts += 1;
        let g = random_graph(&mut rng, 12, 0.0);
        let product = rooted_product(&g, &p2, rng.gen_range(0..2))?;
        report.instances += 1;
        let ok = product.is_well_covered()
            && product.alpha() == g.n()
            && bdn_inequality(&product)?.holds;
        if !ok {
            report.counterexamples.push(emit_graph6(&g));
        }
    }
    Ok(report)
}
