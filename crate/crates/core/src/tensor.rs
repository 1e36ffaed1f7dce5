//! Evaluation of the Laplacian tensor form of a hypergraph.
//!
//! For an order-`m` tensor and an edge `e` of size `s ≤ m`, the adjacency
//! entries at every index tuple that covers `e` (each vertex of `e` appearing
//! at least once) equal `s / Ω(m, s)`, where `Ω` counts those tuples. The
//! contraction against `x` therefore splits into one non-negative term per edge:
//!
//! ```text
//! L(e) x^m = Σ_{i∈e} x_i^m − (s/Ω) · P_e(x),
//! P_e(x)   = m! · [t^m] Π_{i∈e} (e^{x_i t} − 1)
//! ```
//!
//! `P_e` is the sum of all degree-`m` monomials over covering tuples. The
//! product of truncated series costs `O(s·m²)` and, for `x ≥ 0`, adds only
//! non-negative terms, so `L(e) x^m` stays accurate near constant vectors
//! where an alternating subset expansion would cancel.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Guard on `n^m` for the dense contraction oracle.
pub const DENSE_ORACLE_LIMIT: u128 = 10_000_000;

/// A non-negative point at which tensor forms are evaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalPoint(Vec<f64>);

impl EvalPoint {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if let Some((index, &value)) = x
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::NegativeEntry { index, value });
        }
        Ok(Self(x))
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl AsRef<[f64]> for EvalPoint {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Number of surjections from an `m`-set onto an `s`-set.
///
/// Uses `Ω(m, s) = s · (Ω(m−1, s) + Ω(m−1, s−1))` with checked 128-bit
/// arithmetic; see [`omega_big`] for sizes that overflow.
pub fn omega(m: usize, s: usize) -> Result<u128> {
    if s == 0 || s > m {
        return Err(Error::InvalidOrder { m, s });
    }
    // row[j] = Ω(r, j) for the current r.
    let mut row = vec![0u128; s + 1];
    row[0] = 1;
    for r in 1..=m {
        for j in (1..=s.min(r)).rev() {
            let sum = row[j]
                .checked_add(row[j - 1])
                .ok_or(Error::OmegaOverflow { m, s })?;
            row[j] = sum
                .checked_mul(j as u128)
                .ok_or(Error::OmegaOverflow { m, s })?;
        }
        row[0] = 0;
    }
    Ok(row[s])
}

/// Arbitrary-precision variant of [`omega`].
pub fn omega_big(m: usize, s: usize) -> Result<BigUint> {
    if s == 0 || s > m {
        return Err(Error::InvalidOrder { m, s });
    }
    let mut row = vec![BigUint::from(0u8); s + 1];
    row[0] = BigUint::from(1u8);
    for r in 1..=m {
        for j in (1..=s.min(r)).rev() {
            let sum = &row[j] + &row[j - 1];
            row[j] = sum * BigUint::from(j);
        }
        row[0] = BigUint::from(0u8);
    }
    Ok(row[s].clone())
}

/// Per-size constants of one edge: its size, the tensor order and `Ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeForm {
    pub s: usize,
    pub m: usize,
    pub omega: u128,
    /// Adjacency weight `s / Ω`.
    pub weight: f64,
    m_factorial: f64,
    /// `1/r!` for `r = 0..=m`.
    inv_factorial: Vec<f64>,
}

/// Scratch buffers for the series products; reused across edges.
#[derive(Debug, Default)]
struct Workspace {
    terms: Vec<f64>,
    acc: Vec<f64>,
    prefix: Vec<f64>,
    others: Vec<f64>,
}

impl EdgeForm {
    pub fn new(s: usize, m: usize) -> Result<Self> {
        let omega = omega(m, s).map_err(|e| match e {
            Error::InvalidOrder { .. } => Error::EdgeLargerThanOrder { size: s, order: m },
            other => other,
        })?;
        let mut inv_factorial = vec![1.0; m + 1];
        let mut m_factorial = 1.0;
        for r in 1..=m {
            inv_factorial[r] = inv_factorial[r - 1] / r as f64;
            m_factorial *= r as f64;
        }
        Ok(Self {
            s,
            m,
            omega,
            weight: s as f64 / omega as f64,
            m_factorial,
            inv_factorial,
        })
    }

    /// `terms[r] = v^r / r!` for `r = 0..=m`.
    fn exp_terms(&self, v: f64, terms: &mut Vec<f64>) {
        terms.clear();
        let mut power = 1.0;
        for c in &self.inv_factorial {
            terms.push(power * c);
            power *= v;
        }
    }

    /// Multiplies `acc` in place by `e^{v t} − 1`, truncated at degree `m`.
    /// Degrees are updated from the top so every read sees the old value.
    fn times_exp_minus_one(acc: &mut [f64], terms: &[f64]) {
        for d in (0..acc.len()).rev() {
            acc[d] = (1..=d).map(|r| acc[d - r] * terms[r]).sum();
        }
    }

    /// `P_e` at the edge-local coordinates `vals`.
    fn power_sum(&self, vals: &[f64], ws: &mut Workspace) -> f64 {
        ws.acc.clear();
        ws.acc.resize(self.m + 1, 0.0);
        ws.acc[0] = 1.0;
        for &v in vals {
            self.exp_terms(v, &mut ws.terms);
            Self::times_exp_minus_one(&mut ws.acc, &ws.terms);
        }
        self.m_factorial * ws.acc[self.m]
    }

    fn value(&self, vals: &[f64], ws: &mut Workspace) -> f64 {
        let m = self.m as i32;
        let diag: f64 = vals.iter().map(|v| v.powi(m)).sum();
        diag - self.weight * self.power_sum(vals, ws)
    }

    /// Writes this edge's gradient, indexed by edge position, into `grad`.
    ///
    /// `∂P/∂x_k = m! [t^m] t e^{x_k t} Π_{i≠k} (e^{x_i t} − 1)`, assembled from
    /// prefix products (stored) and a running suffix product.
    fn gradient(&self, vals: &[f64], grad: &mut [f64], ws: &mut Workspace) {
        let (s, m) = (vals.len(), self.m);
        let width = m + 1;
        ws.prefix.clear();
        ws.prefix.resize(width * (s + 1), 0.0);
        ws.prefix[0] = 1.0;
        for (k, &v) in vals.iter().enumerate() {
            self.exp_terms(v, &mut ws.terms);
            let (done, rest) = ws.prefix.split_at_mut(width * (k + 1));
            rest[..width].copy_from_slice(&done[width * k..]);
            Self::times_exp_minus_one(&mut rest[..width], &ws.terms);
        }
        ws.acc.clear();
        ws.acc.resize(width, 0.0);
        ws.acc[0] = 1.0;
        let pm1 = m as i32 - 1;
        for k in (0..s).rev() {
            let before = &ws.prefix[width * k..width * (k + 1)];
            ws.others.clear();
            ws.others
                .extend((0..m).map(|d| (0..=d).map(|a| before[a] * ws.acc[d - a]).sum::<f64>()));
            self.exp_terms(vals[k], &mut ws.terms);
            let coefficient: f64 = (0..m).map(|a| ws.terms[a] * ws.others[m - 1 - a]).sum();
            grad[k] = m as f64 * vals[k].powi(pm1) - self.weight * self.m_factorial * coefficient;
            Self::times_exp_minus_one(&mut ws.acc, &ws.terms);
        }
    }
}

/// The covering power sum `P_e(x)` for a 0-based edge at tensor order `m`.
pub fn edge_power_sum(edge: &[usize], x: &EvalPoint, m: usize) -> Result<f64> {
    let form = EdgeForm::new(edge.len(), m)?;
    let vals = gather(edge, x.as_slice())?;
    Ok(form.power_sum(&vals, &mut Workspace::default()))
}

/// The per-edge Laplacian term `L(e) x^m` for a 0-based edge.
pub fn edge_laplacian_form(edge: &[usize], x: &EvalPoint, m: usize) -> Result<f64> {
    let form = EdgeForm::new(edge.len(), m)?;
    let vals = gather(edge, x.as_slice())?;
    Ok(form.value(&vals, &mut Workspace::default()))
}

fn gather(edge: &[usize], x: &[f64]) -> Result<Vec<f64>> {
    edge.iter()
        .map(|&v| {
            x.get(v).copied().ok_or(Error::DimensionMismatch {
                expected: v + 1,
                found: x.len(),
            })
        })
        .collect()
}

/// The Laplacian form of a hypergraph with per-size constants precomputed.
///
/// `value` and `gradient` take raw slices and skip validation; they are the
/// inner loop of the solver. Edge terms are summed in edge order.
#[derive(Debug, Clone)]
pub struct LaplacianForm<'a> {
    h: &'a Hypergraph,
    m: usize,
    /// Indexed by edge size.
    forms: Vec<Option<EdgeForm>>,
}

impl<'a> LaplacianForm<'a> {
    pub fn new(h: &'a Hypergraph) -> Result<Self> {
        let m = h.order();
        let mut forms = vec![None; m + 1];
        for e in h.edges() {
            if forms[e.len()].is_none() {
                forms[e.len()] = Some(EdgeForm::new(e.len(), m)?);
            }
        }
        Ok(Self { h, m, forms })
    }

    pub fn hypergraph(&self) -> &'a Hypergraph {
        self.h
    }

    pub fn order(&self) -> usize {
        self.m
    }

    fn form(&self, s: usize) -> &EdgeForm {
        self.forms[s].as_ref().expect("edge sizes precomputed")
    }

    pub fn edge_value(&self, edge_index: usize, x: &[f64]) -> f64 {
        let e = &self.h.edges()[edge_index];
        let vals: Vec<f64> = e.iter().map(|&v| x[v]).collect();
        self.form(e.len()).value(&vals, &mut Workspace::default())
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        let mut ws = Workspace::default();
        let mut vals = Vec::with_capacity(self.m);
        let mut total = 0.0;
        for e in self.h.edges() {
            vals.clear();
            vals.extend(e.iter().map(|&v| x[v]));
            total += self.form(e.len()).value(&vals, &mut ws);
        }
        total
    }

    /// Writes the gradient of the form into `grad` (length `n`).
    pub fn gradient(&self, x: &[f64], grad: &mut [f64]) {
        grad.iter_mut().for_each(|g| *g = 0.0);
        let mut ws = Workspace::default();
        let mut vals = Vec::with_capacity(self.m);
        let mut local = vec![0.0; self.m];
        for e in self.h.edges() {
            vals.clear();
            vals.extend(e.iter().map(|&v| x[v]));
            let local = &mut local[..e.len()];
            self.form(e.len()).gradient(&vals, local, &mut ws);
            for (&v, g) in e.iter().zip(local.iter()) {
                grad[v] += g;
            }
        }
    }

    /// `Σ x_i^m`, the normalization of the feasible set.
    pub fn power_norm(&self, x: &[f64]) -> f64 {
        let m = self.m as i32;
        x.iter().map(|v| v.powi(m)).sum()
    }
}

fn check_point(h: &Hypergraph, x: &EvalPoint) -> Result<()> {
    if x.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: x.len(),
        });
    }
    Ok(())
}

/// `L x^m` with `m` the largest edge size of `h`.
pub fn laplacian_form(h: &Hypergraph, x: &EvalPoint) -> Result<f64> {
    check_point(h, x)?;
    Ok(LaplacianForm::new(h)?.value(x.as_slice()))
}

pub fn laplacian_gradient(h: &Hypergraph, x: &EvalPoint) -> Result<Vec<f64>> {
    check_point(h, x)?;
    let mut grad = vec![0.0; h.n()];
    LaplacianForm::new(h)?.gradient(x.as_slice(), &mut grad);
    Ok(grad)
}

/// Full contraction `Σ_{i_1..i_m} l_{i_1..i_m} x_{i_1}···x_{i_m}` over all
/// `n^m` index tuples of `D − A`.
///
/// Adjacency weights come from counting, during the sweep itself, how many
/// tuples cover each edge; nothing is shared with [`LaplacianForm`].
pub fn dense_contraction_oracle(h: &Hypergraph, x: &EvalPoint) -> Result<f64> {
    check_point(h, x)?;
    let n = h.n();
    let m = h.order();
    let tuples = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if tuples > DENSE_ORACLE_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "dense contraction oracle",
            detail: format!("n^m = {n}^{m} exceeds {DENSE_ORACLE_LIMIT}"),
        });
    }
    if m == 0 {
        return Ok(0.0);
    }
    let x = x.as_slice();
    // support set -> (number of covering tuples, sum of their monomials)
    let mut cover: HashMap<Vec<usize>, (u64, f64)> =
        h.edges().iter().map(|e| (e.clone(), (0, 0.0))).collect();
    let mut diagonal = 0.0;
    let degrees = h.degrees();
    let mut idx = vec![0usize; m];
    let mut support = Vec::with_capacity(m);
    loop {
        let monomial: f64 = idx.iter().map(|&i| x[i]).product();
        if idx.iter().all(|&i| i == idx[0]) {
            diagonal += degrees[idx[0]] as f64 * monomial;
        }
        support.clear();
        support.extend_from_slice(&idx);
        support.sort_unstable();
        support.dedup();
        if let Some(entry) = cover.get_mut(&support) {
            entry.0 += 1;
            entry.1 += monomial;
        }
        // odometer
        let mut pos = m;
        loop {
            if pos == 0 {
                let adjacency: f64 = h
                    .edges()
                    .iter()
                    .map(|e| {
                        let (count, sum) = cover[e];
                        e.len() as f64 / count as f64 * sum
                    })
                    .sum();
                return Ok(diagonal - adjacency);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: &[f64]) -> EvalPoint {
        EvalPoint::new(x.to_vec()).unwrap()
    }

    /// Brute force over all `|e|^m` tuples drawn from the edge.
    fn covering_sum_brute(edge: &[usize], x: &[f64], m: usize) -> f64 {
        let s = edge.len();
        let mut total = 0.0;
        let mut idx = vec![0usize; m];
        'outer: loop {
            let mut seen = vec![false; s];
            idx.iter().for_each(|&i| seen[i] = true);
            if seen.iter().all(|&b| b) {
                total += idx.iter().map(|&i| x[edge[i]]).product::<f64>();
            }
            for p in (0..m).rev() {
                idx[p] += 1;
                if idx[p] < s {
                    continue 'outer;
                }
                idx[p] = 0;
            }
            return total;
        }
    }

    #[test]
    fn omega_values() {
        assert_eq!(omega(2, 2).unwrap(), 2);
        assert_eq!(omega(3, 2).unwrap(), 6);
        assert_eq!(omega(1, 1).unwrap(), 1);
        assert_eq!(omega(4, 3).unwrap(), 36);
        assert!(matches!(omega(2, 3), Err(Error::InvalidOrder { .. })));
        assert!(matches!(omega(2, 0), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn omega_width() {
        // 19! * C(20, 2) exceeds u64 but fits u128.
        let big = omega(20, 19).unwrap();
        assert!(big > u64::MAX as u128);
        for s in 1..=20 {
            assert_eq!(
                BigUint::from(omega(20, s).unwrap()),
                omega_big(20, s).unwrap()
            );
        }
        assert!(matches!(omega(40, 30), Err(Error::OmegaOverflow { .. })));
        assert!(omega_big(40, 30).unwrap() > BigUint::from(u128::MAX));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(edge_power_sum(&[0, 1], &pt(&[1.0, 1.0]), 2).unwrap(), 2.0);
        assert_eq!(
            edge_power_sum(&[0, 1, 2], &pt(&[1.0, 1.0, 1.0]), 3).unwrap(),
            6.0
        );
        assert_eq!(edge_power_sum(&[0, 1], &pt(&[0.7, 0.0]), 3).unwrap(), 0.0);
        assert!(matches!(
            edge_power_sum(&[0, 1, 2], &pt(&[1.0, 1.0, 1.0]), 2),
            Err(Error::EdgeLargerThanOrder { .. })
        ));
    }

    #[test]
    fn power_sum_matches_brute_force() {
        let x = [0.3, 1.7, 0.9, 2.2, 0.05];
        for m in 2..=6 {
            for s in 1..=m.min(5) {
                let edge: Vec<usize> = (0..s).collect();
                let fast = edge_power_sum(&edge, &pt(&x), m).unwrap();
                let brute = covering_sum_brute(&edge, &x, m);
                assert!(
                    (fast - brute).abs() <= 1e-12 * brute.abs().max(1.0),
                    "m={m} s={s}"
                );
            }
        }
    }

    #[test]
    fn edge_form_examples() {
        for t in [0.0, 0.4, 1.0, 3.5] {
            let v = edge_laplacian_form(&[0, 1, 2], &pt(&[t, t, t, 9.0]), 3).unwrap();
            assert!(v.abs() <= 1e-12 * t.powi(3).max(1.0));
        }
        assert_eq!(
            edge_laplacian_form(&[0, 1], &pt(&[1.0, 0.0]), 2).unwrap(),
            1.0
        );
        assert_eq!(
            edge_laplacian_form(&[0, 1, 2], &pt(&[1.0, 1.0, 0.0]), 3).unwrap(),
            2.0
        );
    }

    #[test]
    fn whole_form_examples() {
        let h = Hypergraph::build(5, [vec![1, 2, 3], vec![3, 4, 5]]).unwrap();
        assert!(laplacian_form(&h, &pt(&[0.8; 5])).unwrap().abs() < 1e-12);
        let c = (1.0f64 / 3.0).cbrt();
        let x = pt(&[c, c, c, 0.0, 0.0]);
        let v = laplacian_form(&h, &x).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-12);
        assert!((dense_contraction_oracle(&h, &x).unwrap() - 1.0 / 3.0).abs() < 1e-12);

        let k2 = Hypergraph::build(2, [vec![1, 2]]).unwrap();
        assert_eq!(laplacian_form(&k2, &pt(&[1.0, 0.0])).unwrap(), 1.0);
        assert!(matches!(
            laplacian_form(&k2, &pt(&[1.0])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn gradient_examples() {
        let k2 = Hypergraph::build(2, [vec![1, 2]]).unwrap();
        assert_eq!(
            laplacian_gradient(&k2, &pt(&[1.0, 0.0])).unwrap(),
            vec![2.0, -2.0]
        );
        let h = Hypergraph::build(5, [vec![1, 2, 3], vec![3, 4, 5], vec![1, 5]]).unwrap();
        let g = laplacian_gradient(&h, &pt(&[0.6; 5])).unwrap();
        assert!(g.iter().all(|v| v.abs() < 1e-12), "{g:?}");
    }

    #[test]
    fn dense_oracle_examples() {
        let h = Hypergraph::build(3, [vec![1, 2, 3]]).unwrap();
        let x = pt(&[1.0, 2.0, 3.0]);
        let fast = laplacian_form(&h, &x).unwrap();
        let dense = dense_contraction_oracle(&h, &x).unwrap();
        assert!((fast - dense).abs() <= 1e-10 * fast.abs());

        let g = Hypergraph::build(4, [vec![1, 2], vec![2, 3], vec![1, 4]]).unwrap();
        let x = pt(&[0.2, 1.1, 0.4, 2.0]);
        let quad: f64 = g
            .edges()
            .iter()
            .map(|e| (x.as_slice()[e[0]] - x.as_slice()[e[1]]).powi(2))
            .sum();
        assert!((dense_contraction_oracle(&g, &x).unwrap() - quad).abs() < 1e-12);
        assert!(dense_contraction_oracle(&g, &pt(&[1.0; 4])).unwrap().abs() < 1e-12);
    }

    #[test]
    fn dense_oracle_guard() {
        let h = Hypergraph::build(50, [(1..=5).collect::<Vec<_>>()]).unwrap();
        assert!(matches!(
            dense_contraction_oracle(&h, &pt(&[1.0; 50])),
            Err(Error::InstanceTooLarge { .. })
        ));
    }

    #[test]
    fn negative_points_rejected() {
        assert!(matches!(
            EvalPoint::new(vec![1.0, -0.5]),
            Err(Error::NegativeEntry { index: 1, .. })
        ));
        assert!(EvalPoint::new(vec![f64::NAN]).is_err());
    }
}
