//! Searching for generic eigenvalue data. Multiplicative data is handled in
//! exponents of a generator of 𝔽_q^×, so both cases become a search in a
//! cyclic group Z/m for values summing to zero with every proper
//! equal-size sub-multiset sum nonzero.

use std::collections::BTreeSet;

use crate::combinat::MultiPartition;

use super::field::Fq;
use super::FfError;

/// One value per part of every component; the value attached to part μ^i_j
/// occurs with multiplicity μ^i_j.
pub type EigenData = Vec<Vec<u64>>;

/// Residues Σ_j m_j a_j for sub-multiplicities m_j ≤ μ_j with Σ m_j = s.
fn partial_sums(parts: &[usize], values: &[u64], s: usize, m: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    fn rec(parts: &[usize], values: &[u64], i: usize, left: usize, acc: u64, m: u64, out: &mut BTreeSet<u64>) {
        if i == parts.len() {
            if left == 0 {
                out.insert(acc);
            }
            return;
        }
        for t in 0..=parts[i].min(left) {
            rec(parts, values, i + 1, left - t, (acc + t as u64 * values[i]) % m, m, out);
        }
    }
    rec(parts, values, 0, s, 0, m, &mut out);
    out
}

/// Genericity of eigenvalue data in Z/m.
pub fn is_generic_cyclic(mu: &MultiPartition, data: &EigenData, m: u64) -> bool {
    let Some(n) = mu.common_size() else { return false };
    if data.len() != mu.k() {
        return false;
    }
    for (p, v) in mu.components().iter().zip(data) {
        if v.len() != p.len() || v.iter().collect::<BTreeSet<_>>().len() != v.len() || v.iter().any(|&x| x >= m) {
            return false;
        }
    }
    for s in 1..=n {
        let mut sums = BTreeSet::from([0u64]);
        for (p, v) in mu.components().iter().zip(data) {
            let part = partial_sums(p.parts(), v, s, m);
            sums = sums.iter().flat_map(|a| part.iter().map(move |b| (a + b) % m)).collect();
        }
        if sums.contains(&0) != (s == n) {
            return false;
        }
    }
    true
}

/// The first generic data in Z/m in a fixed search order.
pub fn find_generic_cyclic(mu: &MultiPartition, m: u64) -> Option<EigenData> {
    mu.common_size()?;
    let comps = mu.components();
    let mut data: EigenData = comps.iter().map(|p| vec![0; p.len()]).collect();
    fn rec(mu: &MultiPartition, m: u64, i: usize, j: usize, data: &mut EigenData) -> bool {
        let comps = mu.components();
        if i == comps.len() {
            return is_generic_cyclic(mu, data, m);
        }
        if j == comps[i].len() {
            return rec(mu, m, i + 1, 0, data);
        }
        // equal parts carry interchangeable values: keep them increasing
        let start = if j > 0 && comps[i].part(j) == comps[i].part(j - 1) { data[i][j - 1] + 1 } else { 0 };
        for v in start..m {
            if data[i][..j].contains(&v) {
                continue;
            }
            data[i][j] = v;
            if rec(mu, m, i, j + 1, data) {
                return true;
            }
        }
        false
    }
    rec(mu, m, 0, 0, &mut data).then_some(data)
}

/// Generic multiplicative eigenvalues in 𝔽_q^×.
pub fn find_generic_mult(mu: &MultiPartition, f: &Fq) -> Result<EigenData, FfError> {
    let e = find_generic_cyclic(mu, f.q() - 1).ok_or(FfError::NotFound)?;
    Ok(e.into_iter().map(|v| v.into_iter().map(|x| f.exp(x as usize)).collect()).collect())
}

/// Checks the multiplicative genericity conditions directly on eigenvalues.
pub fn is_generic_mult(mu: &MultiPartition, data: &EigenData, f: &Fq) -> bool {
    if data.iter().flatten().any(|&x| x % f.p() == 0) {
        return false;
    }
    let logs: EigenData = data.iter().map(|v| v.iter().map(|&x| f.log(x) as u64).collect()).collect();
    is_generic_cyclic(mu, &logs, f.q() - 1)
}

/// Generic additive eigenvalues in 𝔽_q.
pub fn find_generic_add(mu: &MultiPartition, f: &Fq) -> Result<EigenData, FfError> {
    if !mu.is_indivisible() {
        return Err(FfError::DivisibleMu(mu.to_string()));
    }
    find_generic_cyclic(mu, f.p()).ok_or(FfError::NotFound)
}

pub fn is_generic_add(mu: &MultiPartition, data: &EigenData, f: &Fq) -> bool {
    is_generic_cyclic(mu, data, f.p())
}
