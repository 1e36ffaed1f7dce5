//! Analytic connectivity: for each vertex `j`, the minimum of `L x^m` over
//! non-negative `x` with `Σ x_i^m = 1` and `x_j = 0`; `α` is the smallest of
//! these minima.
//!
//! The problem is non-convex. [`analytic_connectivity`] runs a multistart
//! projected-gradient method on the scale-invariant quotient
//! `R(x) = L x^m / Σ x_i^m` and reports the best feasible value it reaches,
//! which is always an upper estimate of `α`. [`grid_oracle`] is an independent
//! lattice search with pattern refinement for small instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generate::{binomial, derive_seed};
use crate::hypergraph::Hypergraph;
use crate::tensor::{EvalPoint, LaplacianForm};

/// Below this objective value the stopping test is absolute, so runs that
/// creep towards zero (as on disconnected instances) still terminate.
const OBJECTIVE_FLOOR: f64 = 1e-2;
/// Armijo constant for projected steps.
const SUFFICIENT_DECREASE: f64 = 0.1;
pub const GRID_ORACLE_MAX_N: usize = 7;
const GRID_POINT_LIMIT: u128 = 5_000_000;
const MAX_HALVINGS: usize = 40;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolverConfig {
    /// Starts per fixed vertex. Structured starts always run; random starts
    /// fill up the remainder.
    pub restarts: usize,
    pub max_iterations: usize,
    /// A run stops once an accepted step lowers the objective by less than
    /// this fraction of its current value.
    pub objective_tolerance: f64,
    pub initial_step: f64,
    pub shrink: f64,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            restarts: 16,
            max_iterations: 10_000,
            objective_tolerance: 1e-10,
            initial_step: 1.0,
            shrink: 0.5,
            seed: 0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidConfig("restarts must be at least 1".into()));
        }
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.objective_tolerance) || !positive(self.initial_step) {
            return Err(Error::InvalidConfig(
                "tolerance and initial step must be positive".into(),
            ));
        }
        if !(self.shrink > 0.0 && self.shrink < 1.0) {
            return Err(Error::InvalidConfig(
                "shrink factor must lie in (0, 1)".into(),
            ));
        }
        Ok(())
    }
}

/// Outcome of one projected-gradient run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunOutcome {
    pub value: f64,
    pub iterations: usize,
    /// False when the run hit `max_iterations`.
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixedVertexResult {
    pub value: f64,
    pub witness: EvalPoint,
    pub runs: Vec<RunOutcome>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaResult {
    pub alpha: f64,
    /// Best value found for each fixed vertex.
    pub per_vertex: Vec<f64>,
    pub witness: EvalPoint,
    /// 0-based vertex held at zero in the witness.
    pub fixed_vertex: usize,
    /// Convergence flag of every run, grouped by fixed vertex.
    pub converged: Vec<Vec<bool>>,
}

fn check_instance(h: &Hypergraph) -> Result<()> {
    if h.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if h.n() < 2 {
        return Err(Error::InvalidConfig(
            "analytic connectivity needs n >= 2".into(),
        ));
    }
    Ok(())
}

/// Rescales `x` in place so that `Σ x_i^m = 1`. Returns false for the zero vector.
fn normalize(x: &mut [f64], m: usize) -> bool {
    let norm: f64 = x.iter().map(|v| v.powi(m as i32)).sum();
    if !norm.is_finite() || norm <= 0.0 {
        return false;
    }
    let scale = norm.powf(-1.0 / m as f64);
    x.iter_mut().for_each(|v| *v *= scale);
    true
}

fn indicator(n: usize, support: impl IntoIterator<Item = usize>) -> Vec<f64> {
    let mut x = vec![0.0; n];
    for v in support {
        x[v] = 1.0;
    }
    x
}

/// Starting points for fixed vertex `j`: uniform on `V∖{j}`, on every
/// component avoiding `j`, on every edge avoiding `j`, then random points.
fn starts(h: &Hypergraph, j: usize, config: &SolverConfig) -> Vec<Vec<f64>> {
    let n = h.n();
    let mut out: Vec<Vec<f64>> = vec![indicator(n, (0..n).filter(|&v| v != j))];
    for comp in h.components() {
        if !comp.contains(&j) {
            out.push(indicator(n, comp));
        }
    }
    for e in h.edges() {
        if !e.contains(&j) {
            out.push(indicator(n, e.iter().copied()));
        }
    }
    let mut unique: Vec<Vec<f64>> = Vec::with_capacity(out.len());
    for x in out {
        if !unique.contains(&x) {
            unique.push(x);
        }
    }
    let random = config.restarts.saturating_sub(unique.len());
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(config.seed, j as u64));
    for _ in 0..random {
        let x = (0..n)
            .map(|v| {
                if v == j {
                    0.0
                } else {
                    -(1.0 - rng.gen::<f64>()).ln()
                }
            })
            .collect();
        unique.push(x);
    }
    let m = h.order();
    unique.retain_mut(|x| normalize(x, m));
    unique
}

/// Projected gradient descent on the quotient with backtracking.
fn descend(
    form: &LaplacianForm<'_>,
    j: usize,
    mut x: Vec<f64>,
    config: &SolverConfig,
) -> (f64, Vec<f64>, RunOutcome) {
    let n = x.len();
    let m = form.order();
    let mut f = form.value(&x);
    let mut grad = vec![0.0; n];
    let mut trial = vec![0.0; n];
    let mut step = config.initial_step;
    let mut converged = false;
    let mut iterations = 0;
    while iterations < config.max_iterations {
        iterations += 1;
        form.gradient(&x, &mut grad);
        // Gradient of L/Σx^m on the unit sphere Σx^m = 1.
        for (g, &xi) in grad.iter_mut().zip(&x) {
            *g -= f * m as f64 * xi.powi(m as i32 - 1);
        }
        grad[j] = 0.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            for ((t, &xi), &g) in trial.iter_mut().zip(&x).zip(&grad) {
                *t = (xi - step * g).max(0.0);
            }
            trial[j] = 0.0;
            if normalize(&mut trial, m) {
                let ft = form.value(&trial);
                let moved: f64 = trial.iter().zip(&x).map(|(t, xi)| (t - xi).powi(2)).sum();
                if ft < f - SUFFICIENT_DECREASE * moved / step {
                    accepted = Some(ft);
                    break;
                }
            }
            step *= config.shrink;
        }
        let Some(ft) = accepted else {
            converged = true;
            break;
        };
        let decrease = f - ft;
        std::mem::swap(&mut x, &mut trial);
        f = ft;
        step /= config.shrink;
        if decrease <= config.objective_tolerance * f.abs().max(OBJECTIVE_FLOOR) {
            converged = true;
            break;
        }
    }
    let value = form.value(&x);
    (
        value,
        x,
        RunOutcome {
            value,
            iterations,
            converged,
        },
    )
}

/// Minimizes `L x^m` over the feasible slice with `x_j = 0` (`j` 0-based).
pub fn minimize_fixed_zero(
    h: &Hypergraph,
    j: usize,
    config: &SolverConfig,
) -> Result<FixedVertexResult> {
    config.validate()?;
    if j >= h.n() {
        return Err(Error::InvalidVertex {
            vertex: j + 1,
            n: h.n(),
        });
    }
    check_instance(h)?;
    let form = LaplacianForm::new(h)?;
    Ok(minimize_with(&form, j, config))
}

fn minimize_with(form: &LaplacianForm<'_>, j: usize, config: &SolverConfig) -> FixedVertexResult {
    let runs: Vec<(f64, Vec<f64>, RunOutcome)> = starts(form.hypergraph(), j, config)
        .into_par_iter()
        .map(|x0| descend(form, j, x0, config))
        .collect();
    let best = runs
        .iter()
        .enumerate()
        .fold(0, |b, (i, r)| if r.0 < runs[b].0 { i } else { b });
    let (value, witness) = (runs[best].0, runs[best].1.clone());
    FixedVertexResult {
        value,
        witness: EvalPoint::new(witness).expect("iterates stay non-negative"),
        runs: runs.into_iter().map(|r| r.2).collect(),
    }
}

/// Estimates `α(H)`; the result is the best feasible value found and hence
/// never below the true minimum.
pub fn analytic_connectivity(h: &Hypergraph, config: &SolverConfig) -> Result<AlphaResult> {
    config.validate()?;
    check_instance(h)?;
    let form = LaplacianForm::new(h)?;
    let per: Vec<FixedVertexResult> = (0..h.n())
        .into_par_iter()
        .map(|j| minimize_with(&form, j, config))
        .collect();
    let fixed_vertex = per
        .iter()
        .enumerate()
        .fold(0, |b, (i, r)| if r.value < per[b].value { i } else { b });
    Ok(AlphaResult {
        alpha: per[fixed_vertex].value,
        per_vertex: per.iter().map(|r| r.value).collect(),
        witness: per[fixed_vertex].witness.clone(),
        fixed_vertex,
        converged: per
            .iter()
            .map(|r| r.runs.iter().map(|o| o.converged).collect())
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridResult {
    pub value: f64,
    pub witness: EvalPoint,
    pub fixed_vertex: usize,
}

/// Lattice search over `y` on the simplex `{y ≥ 0, Σy = 1, y_j = 0}` with
/// denominator `steps`, mapped to the feasible set by `x_i = y_i^{1/m}`, then
/// pairwise-transfer pattern search around each vertex's best lattice point
/// with the transfer size halved `refine_rounds` times.
pub fn grid_oracle(h: &Hypergraph, steps: usize, refine_rounds: usize) -> Result<GridResult> {
    check_instance(h)?;
    let n = h.n();
    if n > GRID_ORACLE_MAX_N {
        return Err(Error::InstanceTooLarge {
            what: "grid oracle",
            detail: format!("n = {n} > {GRID_ORACLE_MAX_N}"),
        });
    }
    if steps == 0 {
        return Err(Error::InvalidConfig("grid needs at least one step".into()));
    }
    let points = binomial(steps + n - 2, n - 2);
    if points > GRID_POINT_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "grid oracle",
            detail: format!("{points} lattice points per fixed vertex"),
        });
    }
    let form = LaplacianForm::new(h)?;
    let per: Vec<(f64, Vec<f64>)> = (0..n)
        .into_par_iter()
        .map(|j| grid_for_vertex(&form, j, steps, refine_rounds))
        .collect();
    let best = per
        .iter()
        .enumerate()
        .fold(0, |b, (i, r)| if r.0 < per[b].0 { i } else { b });
    let m = form.order() as f64;
    let witness = per[best].1.iter().map(|y| y.powf(1.0 / m)).collect();
    Ok(GridResult {
        value: per[best].0,
        witness: EvalPoint::new(witness).expect("lattice points are non-negative"),
        fixed_vertex: best,
    })
}

fn simplex_objective(form: &LaplacianForm<'_>, y: &[f64], buf: &mut Vec<f64>) -> f64 {
    let inv = 1.0 / form.order() as f64;
    buf.clear();
    buf.extend(y.iter().map(|v| v.max(0.0).powf(inv)));
    form.value(buf)
}

fn grid_for_vertex(
    form: &LaplacianForm<'_>,
    j: usize,
    steps: usize,
    rounds: usize,
) -> (f64, Vec<f64>) {
    let n = form.hypergraph().n();
    let free: Vec<usize> = (0..n).filter(|&v| v != j).collect();
    let mut buf = Vec::with_capacity(n);
    let mut counts = vec![0usize; free.len()];
    let mut y = vec![0.0; n];
    let mut best = (f64::INFINITY, y.clone());
    // Enumerate compositions of `steps` into free.len() non-negative parts.
    counts[0] = steps;
    loop {
        for (&v, &c) in free.iter().zip(&counts) {
            y[v] = c as f64 / steps as f64;
        }
        let f = simplex_objective(form, &y, &mut buf);
        if f < best.0 {
            best = (f, y.clone());
        }
        if !next_composition(&mut counts) {
            break;
        }
    }

    let (mut f, mut y) = best;
    let mut delta = 1.0 / steps as f64;
    for _ in 0..rounds {
        delta *= 0.5;
        for _pass in 0..10_000 {
            let mut improved = false;
            for &a in &free {
                for &b in &free {
                    if a == b || y[b] <= 0.0 {
                        continue;
                    }
                    let moved = delta.min(y[b]);
                    y[a] += moved;
                    y[b] -= moved;
                    let ft = simplex_objective(form, &y, &mut buf);
                    if ft < f {
                        f = ft;
                        improved = true;
                    } else {
                        y[a] -= moved;
                        y[b] += moved;
                    }
                }
            }
            if !improved {
                break;
            }
        }
    }
    (f, y)
}

/// Advances to the next composition in reverse-lexicographic order.
fn next_composition(c: &mut [usize]) -> bool {
    let k = c.len();
    if k < 2 {
        return false;
    }
    // find the rightmost non-zero entry excluding the last
    let Some(i) = (0..k - 1).rev().find(|&i| c[i] > 0) else {
        return false;
    };
    c[i] -= 1;
    let tail = c[k - 1];
    c[k - 1] = 0;
    c[i + 1] = tail + 1;
    true
}
