//! Finite-alphabet probability types and exact information measures.
//!
//! All quantities are in nats. Distributions are validated on construction
//! (entries nonnegative, total mass 1 within `PROB_TOL`) and immutable
//! afterwards; inputs outside tolerance are rejected rather than
//! renormalized. Alphabets are identified by size, symbols by index.

use crate::{Error, Result};

/// Validity tolerance for probability mass.
pub const PROB_TOL: f64 = 1e-12;

fn check_mass(values: &[f64], what: &str) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidDistribution(format!("{what}: empty alphabet")));
    }
    let mut sum = 0.0;
    for (i, &p) in values.iter().enumerate() {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::InvalidDistribution(format!(
                "{what}: entry {i} is {p}"
            )));
        }
        sum += p;
    }
    if (sum - 1.0).abs() > PROB_TOL {
        return Err(Error::InvalidDistribution(format!(
            "{what}: mass {sum} differs from 1 by more than {PROB_TOL}"
        )));
    }
    Ok(())
}

/// Probability vector over a finite alphabet `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteDistribution {
    probs: Vec<f64>,
}

impl FiniteDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        check_mass(&probs, "distribution")?;
        Ok(Self { probs })
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            probs: vec![1.0 / n as f64; n],
        }
    }

    pub fn point_mass(n: usize, at: usize) -> Self {
        let mut probs = vec![0.0; n];
        probs[at] = 1.0;
        Self { probs }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn get(&self, i: usize) -> f64 {
        self.probs[i]
    }
}

/// Row-stochastic matrix from one finite alphabet to another.
///
/// Row `x` is the conditional distribution of the output given input `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalDistribution {
    matrix: Vec<f64>, // row-major, n_inputs x n_outputs
    n_inputs: usize,
    n_outputs: usize,
}

impl ConditionalDistribution {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidDistribution(
                "conditional: no input rows".into(),
            ));
        }
        let n_outputs = rows[0].len();
        let mut matrix = Vec::with_capacity(rows.len() * n_outputs);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n_outputs {
                return Err(Error::AlphabetMismatch {
                    context: "conditional row length",
                    expected: n_outputs,
                    got: row.len(),
                });
            }
            check_mass(row, &format!("conditional row {i}"))?;
            matrix.extend_from_slice(row);
        }
        Ok(Self {
            matrix,
            n_inputs: rows.len(),
            n_outputs,
        })
    }

    /// Builds from a flat row-major matrix without re-allocating.
    pub fn from_flat(matrix: Vec<f64>, n_inputs: usize, n_outputs: usize) -> Result<Self> {
        if matrix.len() != n_inputs * n_outputs || n_inputs == 0 {
            return Err(Error::AlphabetMismatch {
                context: "conditional flat size",
                expected: n_inputs * n_outputs,
                got: matrix.len(),
            });
        }
        for i in 0..n_inputs {
            check_mass(
                &matrix[i * n_outputs..(i + 1) * n_outputs],
                &format!("conditional row {i}"),
            )?;
        }
        Ok(Self {
            matrix,
            n_inputs,
            n_outputs,
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut matrix = vec![0.0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1.0;
        }
        Self {
            matrix,
            n_inputs: n,
            n_outputs: n,
        }
    }

    /// Binary symmetric channel with the given crossover probability.
    pub fn bsc(crossover: f64) -> Result<Self> {
        Self::from_rows(vec![
            vec![1.0 - crossover, crossover],
            vec![crossover, 1.0 - crossover],
        ])
    }

    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    pub fn n_outputs(&self) -> usize {
        self.n_outputs
    }

    pub fn row(&self, x: usize) -> &[f64] {
        &self.matrix[x * self.n_outputs..(x + 1) * self.n_outputs]
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.matrix[x * self.n_outputs + y]
    }

    pub fn flat(&self) -> &[f64] {
        &self.matrix
    }

    /// Output marginal induced by an input distribution.
    pub fn push_forward(&self, input: &FiniteDistribution) -> Result<FiniteDistribution> {
        if input.len() != self.n_inputs {
            return Err(Error::AlphabetMismatch {
                context: "push_forward input",
                expected: self.n_inputs,
                got: input.len(),
            });
        }
        let mut out = vec![0.0; self.n_outputs];
        for x in 0..self.n_inputs {
            let px = input.get(x);
            for (y, o) in out.iter_mut().enumerate() {
                *o += px * self.get(x, y);
            }
        }
        Ok(FiniteDistribution { probs: out })
    }

    /// Composition: first this channel, then `other`.
    pub fn compose(&self, other: &ConditionalDistribution) -> Result<ConditionalDistribution> {
        if self.n_outputs != other.n_inputs {
            return Err(Error::AlphabetMismatch {
                context: "compose",
                expected: self.n_outputs,
                got: other.n_inputs,
            });
        }
        let mut matrix = vec![0.0; self.n_inputs * other.n_outputs];
        for x in 0..self.n_inputs {
            for m in 0..self.n_outputs {
                let w = self.get(x, m);
                if w == 0.0 {
                    continue;
                }
                for y in 0..other.n_outputs {
                    matrix[x * other.n_outputs + y] += w * other.get(m, y);
                }
            }
        }
        Ok(ConditionalDistribution {
            matrix,
            n_inputs: self.n_inputs,
            n_outputs: other.n_outputs,
        })
    }
}

/// Nonnegative tensor over a product of finite alphabets, total mass 1.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    table: Vec<f64>, // row-major over `shape`
    shape: Vec<usize>,
}

impl JointDistribution {
    pub fn new(table: Vec<f64>, shape: Vec<usize>) -> Result<Self> {
        let total: usize = shape.iter().product();
        if shape.is_empty() || total != table.len() {
            return Err(Error::AlphabetMismatch {
                context: "joint shape",
                expected: total,
                got: table.len(),
            });
        }
        check_mass(&table, "joint")?;
        Ok(Self { table, shape })
    }

    /// 2-axis joint from an input distribution and a channel.
    pub fn from_input_and_channel(
        input: &FiniteDistribution,
        channel: &ConditionalDistribution,
    ) -> Result<Self> {
        if input.len() != channel.n_inputs() {
            return Err(Error::AlphabetMismatch {
                context: "joint input",
                expected: channel.n_inputs(),
                got: input.len(),
            });
        }
        let (nx, ny) = (channel.n_inputs(), channel.n_outputs());
        let mut table = vec![0.0; nx * ny];
        for x in 0..nx {
            for y in 0..ny {
                table[x * ny + y] = input.get(x) * channel.get(x, y);
            }
        }
        Ok(Self {
            table,
            shape: vec![nx, ny],
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn table(&self) -> &[f64] {
        &self.table
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.shape.len()];
        for i in (0..self.shape.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.shape[i + 1];
        }
        strides
    }

    /// Sums out one axis.
    pub fn marginalize_out(&self, axis: usize) -> Result<JointDistribution> {
        if axis >= self.shape.len() || self.shape.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "marginalize_out: axis {axis} of rank {}",
                self.shape.len()
            )));
        }
        let strides = self.strides();
        let new_shape: Vec<usize> = self
            .shape
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != axis)
            .map(|(_, &s)| s)
            .collect();
        let new_len: usize = new_shape.iter().product();
        let mut table = vec![0.0; new_len];
        let axis_len = self.shape[axis];
        let axis_stride = strides[axis];
        // Walk the reduced index space and sum along the removed axis.
        let mut idx = vec![0usize; new_shape.len()];
        for slot in table.iter_mut() {
            let mut base = 0usize;
            let mut j = 0usize;
            for (i, &stride) in strides.iter().enumerate() {
                if i == axis {
                    continue;
                }
                base += idx[j] * stride;
                j += 1;
            }
            let mut s = 0.0;
            for a in 0..axis_len {
                s += self.table[base + a * axis_stride];
            }
            *slot = s;
            // increment multi-index
            for j in (0..idx.len()).rev() {
                idx[j] += 1;
                if idx[j] < new_shape[j] {
                    break;
                }
                idx[j] = 0;
            }
        }
        Ok(JointDistribution {
            table,
            shape: new_shape,
        })
    }

    /// Marginalizes onto the given axes (ascending order required).
    pub fn marginalize_onto(&self, keep: &[usize]) -> Result<JointDistribution> {
        if keep.is_empty() || keep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "marginalize_onto: axes must be nonempty and strictly ascending".into(),
            ));
        }
        let mut out = self.clone();
        for axis in (0..self.shape.len()).rev() {
            if !keep.contains(&axis) {
                out = out.marginalize_out(axis)?;
            }
        }
        Ok(out)
    }

    /// Single-axis marginal as a distribution.
    pub fn marginal(&self, axis: usize) -> Result<FiniteDistribution> {
        let m = self.marginalize_onto(&[axis])?;
        Ok(FiniteDistribution { probs: m.table })
    }

    /// Conditions on one axis: returns the marginal of that axis and the
    /// row-stochastic map from it to the remaining axes (flattened in
    /// ascending axis order). Rows with zero mass are filled uniformly.
    pub fn condition_on(&self, axis: usize) -> Result<(FiniteDistribution, ConditionalDistribution)> {
        if axis >= self.shape.len() || self.shape.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "condition_on: axis {axis} of rank {}",
                self.shape.len()
            )));
        }
        let marg = self.marginal(axis)?;
        let n_axis = self.shape[axis];
        let rest: usize = self.table.len() / n_axis;
        let mut matrix = vec![0.0; n_axis * rest];
        // enumerate the full table, mapping each cell to (axis value, rest index)
        let mut idx = vec![0usize; self.shape.len()];
        for &v in &self.table {
            let a = idx[axis];
            let mut rest_idx = 0usize;
            for (i, &x) in idx.iter().enumerate() {
                if i == axis {
                    continue;
                }
                rest_idx = rest_idx * self.shape[i] + x;
            }
            matrix[a * rest + rest_idx] += v;
            for j in (0..idx.len()).rev() {
                idx[j] += 1;
                if idx[j] < self.shape[j] {
                    break;
                }
                idx[j] = 0;
            }
        }
        for a in 0..n_axis {
            let pa = marg.get(a);
            let row = &mut matrix[a * rest..(a + 1) * rest];
            if pa > 0.0 {
                for r in row.iter_mut() {
                    *r /= pa;
                }
            } else {
                let u = 1.0 / rest as f64;
                for r in row.iter_mut() {
                    *r = u;
                }
            }
        }
        Ok((
            marg,
            ConditionalDistribution {
                matrix,
                n_inputs: n_axis,
                n_outputs: rest,
            },
        ))
    }

    /// Mutual information between the two axes of a 2-axis joint.
    pub fn mutual_information_2d(&self) -> Result<f64> {
        if self.shape.len() != 2 {
            return Err(Error::InvalidParameter(format!(
                "mutual_information_2d: rank {}",
                self.shape.len()
            )));
        }
        let (na, nb) = (self.shape[0], self.shape[1]);
        let mut pa = vec![0.0; na];
        let mut pb = vec![0.0; nb];
        for a in 0..na {
            for b in 0..nb {
                let m = self.table[a * nb + b];
                pa[a] += m;
                pb[b] += m;
            }
        }
        let mut mi = 0.0;
        for a in 0..na {
            for b in 0..nb {
                let m = self.table[a * nb + b];
                if m > 0.0 {
                    mi += m * (m / (pa[a] * pb[b])).ln();
                }
            }
        }
        Ok(mi.max(0.0))
    }
}

/// Full problem description for the tradeoff solvers.
#[derive(Debug, Clone)]
pub struct PutInstance {
    pub p_uv: JointDistribution,
    pub channel: ConditionalDistribution,
    pub tau: f64,
    pub leak: f64,
}

impl PutInstance {
    pub fn new(
        p_uv: JointDistribution,
        channel: ConditionalDistribution,
        tau: f64,
        leak: f64,
    ) -> Result<Self> {
        if p_uv.rank() != 2 {
            return Err(Error::InvalidParameter(format!(
                "source joint must have two axes, got {}",
                p_uv.rank()
            )));
        }
        if !(tau.is_finite() && tau >= 0.0) {
            return Err(Error::InvalidParameter(format!("tau = {tau} must be >= 0")));
        }
        if !(leak.is_finite() && leak >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "leak = {leak} must be >= 0"
            )));
        }
        Ok(Self {
            p_uv,
            channel,
            tau,
            leak,
        })
    }

    pub fn n_u(&self) -> usize {
        self.p_uv.shape()[0]
    }

    pub fn n_v(&self) -> usize {
        self.p_uv.shape()[1]
    }
}

/// Shannon entropy in nats, with the `0 ln 0 = 0` convention.
pub fn entropy(p: &FiniteDistribution) -> f64 {
    p.probs()
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.ln())
        .sum()
}

/// KL divergence `D(p || q)` in nats.
///
/// Returns `+inf` when the support of `p` is not contained in the support
/// of `q`; this is an explicit sentinel, not an error.
pub fn kl_divergence(p: &FiniteDistribution, q: &FiniteDistribution) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::AlphabetMismatch {
            context: "kl_divergence",
            expected: p.len(),
            got: q.len(),
        });
    }
    let mut d = 0.0;
    for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
        if pi > 0.0 {
            if qi == 0.0 {
                return Ok(f64::INFINITY);
            }
            d += pi * (pi / qi).ln();
        }
    }
    Ok(d.max(0.0))
}

/// Total variation distance `(1/2) sum |p - q|`.
pub fn total_variation(p: &FiniteDistribution, q: &FiniteDistribution) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::AlphabetMismatch {
            context: "total_variation",
            expected: p.len(),
            got: q.len(),
        });
    }
    Ok(p.probs()
        .iter()
        .zip(q.probs())
        .map(|(&a, &b)| (a - b).abs())
        .sum::<f64>()
        / 2.0)
}

/// Mutual information `I(p_x, w)` in nats.
pub fn mutual_information(
    p_x: &FiniteDistribution,
    w: &ConditionalDistribution,
) -> Result<f64> {
    if p_x.len() != w.n_inputs() {
        return Err(Error::AlphabetMismatch {
            context: "mutual_information",
            expected: w.n_inputs(),
            got: p_x.len(),
        });
    }
    let marginal = w.push_forward(p_x)?;
    let mut mi = 0.0;
    for x in 0..w.n_inputs() {
        let px = p_x.get(x);
        if px == 0.0 {
            continue;
        }
        for y in 0..w.n_outputs() {
            let wy = w.get(x, y);
            if wy > 0.0 {
                mi += px * wy * (wy / marginal.get(y)).ln();
            }
        }
    }
    Ok(mi.max(0.0))
}

/// One cell of the information density table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityEntry {
    pub u: usize,
    pub z: usize,
    /// `log(P_Z|U(z|u) / P_Z(z))`.
    pub density: f64,
    /// Joint weight `P_U(u) P_Z|U(z|u)`.
    pub weight: f64,
}

/// Information density table of a mechanism under an input distribution.
///
/// Cells with zero joint weight are excluded, so every stored density is
/// finite. The expectation of the table equals the mutual information.
#[derive(Debug, Clone)]
pub struct DensityTable {
    pub entries: Vec<DensityEntry>,
}

/// Mean, variance and third absolute central moment of the density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMoments {
    pub mean: f64,
    pub variance: f64,
    pub third_abs: f64,
}

/// Tabulates the mutual information density of `(p_u, p_z_given_u)`.
pub fn information_density_table(
    p_u: &FiniteDistribution,
    p_z_given_u: &ConditionalDistribution,
) -> Result<DensityTable> {
    if p_u.len() != p_z_given_u.n_inputs() {
        return Err(Error::AlphabetMismatch {
            context: "information_density_table",
            expected: p_z_given_u.n_inputs(),
            got: p_u.len(),
        });
    }
    let p_z = p_z_given_u.push_forward(p_u)?;
    let mut entries = Vec::new();
    for u in 0..p_u.len() {
        let pu = p_u.get(u);
        if pu == 0.0 {
            continue;
        }
        for z in 0..p_z_given_u.n_outputs() {
            let pzu = p_z_given_u.get(u, z);
            if pzu == 0.0 {
                continue;
            }
            entries.push(DensityEntry {
                u,
                z,
                density: (pzu / p_z.get(z)).ln(),
                weight: pu * pzu,
            });
        }
    }
    Ok(DensityTable { entries })
}

/// Mean, variance and third absolute moment of the information density.
pub fn density_moments(
    p_u: &FiniteDistribution,
    p_z_given_u: &ConditionalDistribution,
) -> Result<DensityMoments> {
    let table = information_density_table(p_u, p_z_given_u)?;
    let mean: f64 = table
        .entries
        .iter()
        .map(|e| e.weight * e.density)
        .sum();
    let mut variance = 0.0;
    let mut third_abs = 0.0;
    for e in &table.entries {
        let d = e.density - mean;
        variance += e.weight * d * d;
        third_abs += e.weight * d.abs().powi(3);
    }
    Ok(DensityMoments {
        mean,
        variance: variance.max(0.0),
        third_abs: third_abs.max(0.0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN_2: f64 = std::f64::consts::LN_2;

    fn fd(p: &[f64]) -> FiniteDistribution {
        FiniteDistribution::new(p.to_vec()).unwrap()
    }

    #[test]
    fn entropy_uniform_binary_is_ln2() {
        assert!((entropy(&FiniteDistribution::uniform(2)) - LN_2).abs() < 1e-15);
    }

    #[test]
    fn entropy_point_mass_is_zero() {
        assert_eq!(entropy(&FiniteDistribution::point_mass(4, 1)), 0.0);
    }

    #[test]
    fn entropy_skewed_binary() {
        // direct summation: -0.8 ln 0.8 - 0.2 ln 0.2
        let expect = -(0.8f64 * 0.8f64.ln() + 0.2 * 0.2f64.ln());
        assert!((expect - 0.5004024235381879).abs() < 1e-15);
        assert!((entropy(&fd(&[0.8, 0.2])) - expect).abs() < 1e-15);
    }

    #[test]
    fn kl_identical_is_zero() {
        let p = fd(&[0.3, 0.3, 0.4]);
        assert_eq!(kl_divergence(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn kl_point_vs_uniform_is_ln2() {
        let p = fd(&[1.0, 0.0]);
        let q = FiniteDistribution::uniform(2);
        assert!((kl_divergence(&p, &q).unwrap() - LN_2).abs() < 1e-15);
    }

    #[test]
    fn kl_skewed_vs_uniform() {
        // direct summation: 0.8 ln 1.6 + 0.2 ln 0.4
        let expect = 0.8f64 * 1.6f64.ln() + 0.2 * 0.4f64.ln();
        assert!((expect - 0.19274475702175742).abs() < 1e-15);
        let got = kl_divergence(&fd(&[0.8, 0.2]), &FiniteDistribution::uniform(2)).unwrap();
        assert!((got - expect).abs() < 1e-15);
    }

    #[test]
    fn kl_support_violation_is_infinite() {
        let p = fd(&[0.5, 0.5]);
        let q = fd(&[1.0, 0.0]);
        assert_eq!(kl_divergence(&p, &q).unwrap(), f64::INFINITY);
    }

    #[test]
    fn kl_alphabet_mismatch_is_error() {
        let p = fd(&[0.5, 0.5]);
        let q = FiniteDistribution::uniform(3);
        assert!(matches!(
            kl_divergence(&p, &q),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn mi_identical_rows_is_zero() {
        let w = ConditionalDistribution::from_rows(vec![
            vec![0.3, 0.7],
            vec![0.3, 0.7],
        ])
        .unwrap();
        let mi = mutual_information(&FiniteDistribution::uniform(2), &w).unwrap();
        assert!(mi.abs() < 1e-15);
    }

    #[test]
    fn mi_identity_channel_uniform_is_ln2() {
        let w = ConditionalDistribution::identity(2);
        let mi = mutual_information(&FiniteDistribution::uniform(2), &w).unwrap();
        assert!((mi - LN_2).abs() < 1e-15);
    }

    #[test]
    fn mi_bsc_closed_form() {
        // ln 2 - h_b(0.2) with h_b in nats
        let hb = -(0.2f64 * 0.2f64.ln() + 0.8 * 0.8f64.ln());
        let expect = LN_2 - hb;
        let w = ConditionalDistribution::bsc(0.2).unwrap();
        let mi = mutual_information(&FiniteDistribution::uniform(2), &w).unwrap();
        assert!((mi - expect).abs() < 1e-15);
        assert!((mi - 0.19274475702175742).abs() < 1e-12);
    }

    #[test]
    fn density_identical_rows_all_zero() {
        let w = ConditionalDistribution::from_rows(vec![
            vec![0.3, 0.7],
            vec![0.3, 0.7],
        ])
        .unwrap();
        let t = information_density_table(&FiniteDistribution::uniform(2), &w).unwrap();
        assert!(t.entries.iter().all(|e| e.density.abs() < 1e-15));
    }

    #[test]
    fn density_identity_mechanism_is_ln2() {
        let w = ConditionalDistribution::identity(2);
        let t = information_density_table(&FiniteDistribution::uniform(2), &w).unwrap();
        assert_eq!(t.entries.len(), 2); // zero-probability cells excluded
        assert!(t
            .entries
            .iter()
            .all(|e| (e.density - LN_2).abs() < 1e-15));
    }

    #[test]
    fn density_bsc_01_enumeration() {
        // enumeration oracle over the four (u, z) outcomes
        let p_u = FiniteDistribution::uniform(2);
        let mech = ConditionalDistribution::bsc(0.1).unwrap();
        let t = information_density_table(&p_u, &mech).unwrap();
        assert_eq!(t.entries.len(), 4);
        let ln18 = 1.8f64.ln();
        let ln02 = 0.2f64.ln();
        let mut w18 = 0.0;
        let mut w02 = 0.0;
        for e in &t.entries {
            if (e.density - ln18).abs() < 1e-14 {
                w18 += e.weight;
            } else if (e.density - ln02).abs() < 1e-14 {
                w02 += e.weight;
            } else {
                panic!("unexpected density {}", e.density);
            }
        }
        assert!((w18 - 0.9).abs() < 1e-14);
        assert!((w02 - 0.1).abs() < 1e-14);
    }

    #[test]
    fn moments_identical_rows_are_zero() {
        let w = ConditionalDistribution::from_rows(vec![
            vec![0.4, 0.6],
            vec![0.4, 0.6],
        ])
        .unwrap();
        let m = density_moments(&FiniteDistribution::uniform(2), &w).unwrap();
        assert_eq!((m.mean, m.variance, m.third_abs), (0.0, 0.0, 0.0));
    }

    #[test]
    fn moments_identity_mechanism_constant_density() {
        let w = ConditionalDistribution::identity(2);
        let m = density_moments(&FiniteDistribution::uniform(2), &w).unwrap();
        assert!((m.mean - LN_2).abs() < 1e-15);
        assert!(m.variance < 1e-30);
        assert!(m.third_abs < 1e-45);
    }

    #[test]
    fn moments_bsc_01_match_enumeration_oracle() {
        // four-outcome enumeration oracle, computed from scratch
        let outcomes = [
            (0.45, 1.8f64.ln()),
            (0.05, 0.2f64.ln()),
            (0.05, 0.2f64.ln()),
            (0.45, 1.8f64.ln()),
        ];
        let mean: f64 = outcomes.iter().map(|(w, d)| w * d).sum();
        let var: f64 = outcomes.iter().map(|(w, d)| w * (d - mean).powi(2)).sum();
        let third: f64 = outcomes
            .iter()
            .map(|(w, d)| w * (d - mean).abs().powi(3))
            .sum();
        let m = density_moments(
            &FiniteDistribution::uniform(2),
            &ConditionalDistribution::bsc(0.1).unwrap(),
        )
        .unwrap();
        assert!((m.mean - mean).abs() < 1e-15);
        assert!((m.variance - var).abs() < 1e-15);
        assert!((m.third_abs - third).abs() < 1e-15);
        // frozen values from the oracle
        assert!((m.mean - 0.36806420716849734).abs() < 1e-13);
        assert!((m.variance - 0.43450174882394).abs() < 1e-11);
        assert!((m.third_abs - 0.78285236577874).abs() < 1e-11);
    }

    #[test]
    fn invalid_distributions_rejected_not_renormalized() {
        assert!(FiniteDistribution::new(vec![0.5, 0.6]).is_err());
        assert!(FiniteDistribution::new(vec![1.1, -0.1]).is_err());
        assert!(FiniteDistribution::new(vec![]).is_err());
        // within tolerance is accepted
        assert!(FiniteDistribution::new(vec![0.5, 0.5 + 1e-13]).is_ok());
    }

    #[test]
    fn joint_marginalization_any_axis_order() {
        let table = vec![
            0.1, 0.05, 0.2, 0.05, //
            0.1, 0.1, 0.15, 0.25,
        ];
        let j = JointDistribution::new(table, vec![2, 2, 2]).unwrap();
        let a = j.marginalize_out(0).unwrap().marginalize_out(1).unwrap();
        let b = j.marginalize_out(2).unwrap().marginalize_out(0).unwrap();
        for (x, y) in a.table().iter().zip(b.table()) {
            assert!((x - y).abs() < 1e-15);
        }
        let onto = j.marginalize_onto(&[1]).unwrap();
        for (x, y) in a.table().iter().zip(onto.table()) {
            assert!((x - y).abs() < 1e-15);
        }
    }

    #[test]
    fn joint_conditioning_recovers_channel() {
        let p = fd(&[0.25, 0.75]);
        let w = ConditionalDistribution::bsc(0.3).unwrap();
        let j = JointDistribution::from_input_and_channel(&p, &w).unwrap();
        let (marg, cond) = j.condition_on(0).unwrap();
        for i in 0..2 {
            assert!((marg.get(i) - p.get(i)).abs() < 1e-15);
            for k in 0..2 {
                assert!((cond.get(i, k) - w.get(i, k)).abs() < 1e-14);
            }
        }
        assert!((j.mutual_information_2d().unwrap()
            - mutual_information(&p, &w).unwrap())
        .abs()
            < 1e-15);
    }

    #[test]
    fn put_instance_validation() {
        let p_uv = JointDistribution::new(vec![0.4, 0.1, 0.1, 0.4], vec![2, 2]).unwrap();
        let ch = ConditionalDistribution::bsc(0.2).unwrap();
        assert!(PutInstance::new(p_uv.clone(), ch.clone(), 2.0, 0.3).is_ok());
        assert!(PutInstance::new(p_uv.clone(), ch.clone(), -1.0, 0.3).is_err());
        assert!(PutInstance::new(p_uv, ch, 1.0, -0.1).is_err());
    }
}
