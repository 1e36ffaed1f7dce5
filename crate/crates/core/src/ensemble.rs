//! Batch verification over seeded random instances.
//!
//! Instance `i` of a run with seed `s` is drawn from its own stream seeded by
//! [`derive_seed`]`(s, i)`, so results do not depend on how instances are
//! scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{verify, BoundsReport, Status, VerifyOptions};
use crate::error::{Error, Result};
use crate::generate::{binomial, derive_seed, generate, Model};
use crate::hypergraph::Hypergraph;

/// Redraw budget per instance when only connected instances are wanted.
const CONNECTED_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSpec {
    pub count: usize,
    /// Inclusive vertex-count range.
    pub n_range: (usize, usize),
    /// Inclusive edge-size range; sizes above `n` are dropped per instance.
    pub size_range: (usize, usize),
    /// Inclusive edge-count range, capped by the number of available edges.
    pub edge_range: (usize, usize),
    pub connected_only: bool,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = self.n_range.0 >= 2
            && self.n_range.0 <= self.n_range.1
            && self.size_range.0 >= 2
            && self.size_range.0 <= self.size_range.1
            && self.size_range.0 <= self.n_range.0
            && self.edge_range.0 >= 1
            && self.edge_range.0 <= self.edge_range.1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidConfig(format!(
                "inconsistent ensemble ranges {self:?}"
            )))
        }
    }
}

/// Draws instance `index` of the ensemble.
pub fn sample_instance(spec: &EnsembleSpec, index: u64) -> Result<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(spec.seed, index));
    let mut attempts = 0;
    loop {
        attempts += 1;
        let n = rng.gen_range(spec.n_range.0..=spec.n_range.1);
        let sizes: Vec<(usize, f64)> = (spec.size_range.0..=spec.size_range.1.min(n))
            .map(|s| (s, 1.0))
            .collect();
        let capacity: u128 = sizes.iter().map(|&(s, _)| binomial(n, s)).sum();
        let hi = (spec.edge_range.1 as u128).min(capacity) as usize;
        let lo = spec.edge_range.0.min(hi);
        let edges = rng.gen_range(lo..=hi);
        let model = Model::NonuniformRandom {
            n,
            size_weights: sizes,
            edges,
        };
        let h = generate(&model, rng.gen())?;
        if !spec.connected_only || h.is_connected() {
            return Ok(h);
        }
        if attempts >= CONNECTED_ATTEMPTS {
            return Err(Error::InfeasibleModel(format!(
                "no connected instance after {CONNECTED_ATTEMPTS} draws"
            )));
        }
    }
}

/// One line of the per-instance report stream.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceRecord {
    pub index: u64,
    /// Edges as 1-based vertex lists.
    pub edges: Vec<Vec<usize>>,
    #[serde(flatten)]
    pub report: BoundsReport,
}

#[derive(Debug)]
pub enum InstanceOutcome {
    Verified(Box<InstanceRecord>),
    Skipped { index: u64, reason: Error },
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct EnsembleSummary {
    pub instances: usize,
    pub skipped: usize,
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub worst_slack: Option<f64>,
}

impl EnsembleSummary {
    pub fn from_outcomes(outcomes: &[InstanceOutcome]) -> Self {
        let mut s = Self::default();
        for o in outcomes {
            match o {
                InstanceOutcome::Skipped { .. } => s.skipped += 1,
                InstanceOutcome::Verified(rec) => {
                    s.instances += 1;
                    for c in &rec.report.checks {
                        match c.status {
                            Status::Holds => s.holds += 1,
                            Status::Violated => s.violated += 1,
                            Status::NotApplicable => s.not_applicable += 1,
                        }
                    }
                    if let Some(w) = rec.report.worst_slack() {
                        s.worst_slack = Some(s.worst_slack.map_or(w, |v: f64| v.min(w)));
                    }
                }
            }
        }
        s
    }
}

/// Samples and verifies every instance; outcomes come back in index order.
/// Per-instance failures (guards, infeasible draws) become `Skipped`.
pub fn verify_ensemble(
    spec: &EnsembleSpec,
    options: &VerifyOptions,
) -> Result<Vec<InstanceOutcome>> {
    spec.validate()?;
    options.solver.validate()?;
    Ok((0..spec.count as u64)
        .into_par_iter()
        .map(|index| {
            let run = || -> Result<InstanceRecord> {
                let h = sample_instance(spec, index)?;
                let mut opts = options.clone();
                opts.solver.seed = derive_seed(options.solver.seed, index);
                let report = verify(&h, &opts)?;
                let edges = h
                    .edges()
                    .iter()
                    .map(|e| e.iter().map(|v| v + 1).collect())
                    .collect();
                Ok(InstanceRecord {
                    index,
                    edges,
                    report,
                })
            };
            match run() {
                Ok(rec) => InstanceOutcome::Verified(Box::new(rec)),
                Err(reason) => InstanceOutcome::Skipped { index, reason },
            }
        })
        .collect())
}
