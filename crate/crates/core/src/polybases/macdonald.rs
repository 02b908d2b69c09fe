//! Modified Macdonald functions H̃_λ(x;q,t) in the Schur basis.
//!
//! H̃_μ is determined by the triangularity conditions
//! H̃_μ[X(1−q)] ∈ span{s_λ : λ ⊵ μ}, H̃_μ[X(1−t)] ∈ span{s_λ : λ ⊵ μ′}
//! and ⟨H̃_μ, s_(n)⟩ = 1, which give an overdetermined linear system for the
//! Schur coefficients over Q(q,t).

use std::collections::{BTreeMap, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::{hall_littlewood_schur, PolyBasesError};
use crate::combinat::{partitions_of, sym_char, Partition};
use crate::exact::{LaurentPoly2, RatFun, QT};
use crate::symfun::{Basis, SymFun};

/// Bumped whenever the on-disk layout or the construction changes.
pub const CACHE_VERSION: u32 = 1;

/// Schur expansions of H̃_λ(x;q,t) and H̃_λ(x;q) for all λ ⊢ n.
#[derive(Clone, Debug, PartialEq)]
pub struct MacdonaldTable {
    pub n: usize,
    pub macdonald: BTreeMap<Partition, Vec<(Partition, LaurentPoly2)>>,
    pub kostka: BTreeMap<Partition, Vec<(Partition, LaurentPoly2)>>,
}

static TABLES: OnceLock<Mutex<HashMap<usize, Arc<MacdonaldTable>>>> = OnceLock::new();
static CACHE_DIR: OnceLock<Mutex<Option<PathBuf>>> = OnceLock::new();

/// Enables (or disables with `None`) the on-disk table cache.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *CACHE_DIR.get_or_init(|| Mutex::new(None)).lock().expect("cache dir lock") = dir;
}

fn cache_dir() -> Option<PathBuf> {
    CACHE_DIR.get_or_init(|| Mutex::new(None)).lock().expect("cache dir lock").clone()
}

/// The table for degree `n`, from memory, disk, or a fresh build.
pub fn table(n: usize) -> Arc<MacdonaldTable> {
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().expect("table lock").get(&n) {
        return t.clone();
    }
    let dir = cache_dir();
    let loaded = dir.as_deref().and_then(|d| match load_table(d, n) {
        Ok(t) => Some(t),
        Err(e) => {
            log::info!("macdonald cache miss for n={n}: {e}");
            None
        }
    });
    let t = match loaded {
        Some(t) => t,
        None => {
            let t = build_table(n);
            if let Some(d) = dir.as_deref() {
                if let Err(e) = store_table(d, &t) {
                    log::warn!("could not write macdonald cache for n={n}: {e}");
                }
            }
            t
        }
    };
    let t = Arc::new(t);
    tables.lock().expect("table lock").entry(n).or_insert_with(|| t.clone()).clone()
}

/// Builds the table without touching any cache.
pub fn build_table(n: usize) -> MacdonaldTable {
    let parts = partitions_of(n);
    let macdonald: BTreeMap<Partition, Vec<(Partition, LaurentPoly2)>> =
        parts.par_iter().map(|mu| (mu.clone(), solve(mu))).collect();
    let kostka = parts.iter().map(|mu| (mu.clone(), hall_littlewood_schur(mu))).collect();
    MacdonaldTable { n, macdonald, kostka }
}

/// M_{λν}(x) = Σ_ρ χ^ν_ρ χ^λ_ρ Π(1 − x^{ρ_i}) / z_ρ with x in `slot`.
fn plethysm_matrix(n: usize, slot: usize) -> Vec<Vec<RatFun>> {
    let parts = partitions_of(n);
    let weights: Vec<RatFun> = parts
        .iter()
        .map(|rho| {
            let w: RatFun = rho
                .parts()
                .iter()
                .map(|&r| {
                    let (a, b) = if slot == 0 { (r as i32, 0) } else { (0, r as i32) };
                    RatFun::one() - RatFun::monomial(1, a, b)
                })
                .product();
            w.scale(&BigRational::new(BigInt::from(1), rho.z()))
        })
        .collect();
    let chi: Vec<Vec<i64>> =
        parts.iter().map(|l| parts.iter().map(|r| sym_char(l, r).expect("equal sizes")).collect()).collect();
    parts
        .iter()
        .enumerate()
        .map(|(li, _)| {
            parts
                .iter()
                .enumerate()
                .map(|(ni, _)| {
                    (0..parts.len())
                        .filter(|&ri| chi[ni][ri] * chi[li][ri] != 0)
                        .map(|ri| weights[ri].scale_int(&BigInt::from(chi[ni][ri] * chi[li][ri])))
                        .sum()
                })
                .collect()
        })
        .collect()
}

fn solve(mu: &Partition) -> Vec<(Partition, LaurentPoly2)> {
    let n = mu.size();
    let parts = partitions_of(n);
    let conj = mu.conjugate();
    let mq = plethysm_matrix(n, 0);
    let mt = plethysm_matrix(n, 1);
    let mut rows: Vec<Vec<RatFun>> = Vec::new();
    for (li, lambda) in parts.iter().enumerate() {
        if !lambda.dominates(mu) {
            rows.push(mq[li].clone());
        }
        if !lambda.dominates(&conj) {
            rows.push(mt[li].clone());
        }
    }
    // normalization: coefficient of s_(n) (index 0) is one
    let mut norm = vec![RatFun::zero(); parts.len()];
    norm[0] = RatFun::one();
    let mut aug: Vec<Vec<RatFun>> = rows
        .into_iter()
        .map(|mut r| {
            r.push(RatFun::zero());
            r
        })
        .collect();
    norm.push(RatFun::one());
    aug.push(norm);
    let sol = solve_linear(aug, parts.len()).expect("the triangularity system has a unique solution");
    parts
        .into_iter()
        .zip(sol)
        .filter(|(_, c)| !c.is_zero())
        .map(|(nu, c)| (nu, c.as_polynomial().expect("Macdonald coefficients are polynomials")))
        .collect()
}

/// Solves an augmented system with `m` unknowns; `None` unless the solution
/// exists and is unique.
pub(crate) fn solve_linear(mut a: Vec<Vec<RatFun>>, m: usize) -> Option<Vec<RatFun>> {
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..m {
        let p = (row..a.len()).find(|&r| !a[r][col].is_zero())?;
        a.swap(row, p);
        let inv = a[row][col].inv().ok()?;
        let pivot_row: Vec<RatFun> = a[row].iter().map(|x| x * &inv).collect();
        a[row] = pivot_row;
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let updated: Vec<RatFun> = a[r].iter().zip(&a[row]).map(|(x, y)| x - &(&f * y)).collect();
                a[r] = updated;
            }
        }
        pivots.push(row);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[m].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][m].clone()).collect())
}

/// Schur expansion of H̃_λ(x;q,t), q and t in the two slots.
pub fn macdonald_schur(lambda: &Partition) -> Vec<(Partition, LaurentPoly2)> {
    table(lambda.size()).macdonald[lambda].clone()
}

/// H̃_λ(x;q,t) in one alphabet.
pub fn macdonald(lambda: &Partition, cap: usize) -> Result<SymFun, PolyBasesError> {
    let mut f = SymFun::zero(1, cap);
    for (nu, c) in macdonald_schur(lambda) {
        f = &f + &SymFun::basis_element(Basis::S, &[nu], cap)?.scale(&RatFun::from_poly(&c));
    }
    Ok(f)
}

fn file_name(n: usize) -> String {
    format!("macdonald-n{n}.txt")
}

/// Text form: a header with the version and degree, then one line per
/// coefficient `H|K <λ> <ν> <coefficient in q,t>`.
pub fn table_to_text(t: &MacdonaldTable) -> String {
    let mut s = format!("cometcount-macdonald {CACHE_VERSION}\ndegree {}\n", t.n);
    for (tag, m) in [("H", &t.macdonald), ("K", &t.kostka)] {
        for (lambda, row) in m {
            for (nu, c) in row {
                s.push_str(&format!("{tag} {lambda} {nu} {}\n", c.to_text(QT)));
            }
        }
    }
    s
}

pub fn table_from_text(text: &str, n: usize) -> Result<MacdonaldTable, PolyBasesError> {
    let bad = |m: &str| PolyBasesError::Cache(m.to_string());
    let mut lines = text.lines();
    if lines.next() != Some(&format!("cometcount-macdonald {CACHE_VERSION}")) {
        return Err(bad("version mismatch"));
    }
    if lines.next() != Some(&format!("degree {n}")) {
        return Err(bad("degree mismatch"));
    }
    let mut t = MacdonaldTable { n, macdonald: BTreeMap::new(), kostka: BTreeMap::new() };
    for p in partitions_of(n) {
        t.macdonald.insert(p.clone(), Vec::new());
        t.kostka.insert(p, Vec::new());
    }
    for line in lines {
        let mut it = line.splitn(4, ' ');
        let (Some(tag), Some(l), Some(nu), Some(c)) = (it.next(), it.next(), it.next(), it.next()) else {
            return Err(bad("short record"));
        };
        let l: Partition = l.parse().map_err(|_| bad("bad partition"))?;
        let nu: Partition = nu.parse().map_err(|_| bad("bad partition"))?;
        if l.size() != n || nu.size() != n {
            return Err(bad("record of the wrong degree"));
        }
        let c = LaurentPoly2::parse(c, QT).map_err(|e| bad(&e.to_string()))?;
        let m = match tag {
            "H" => &mut t.macdonald,
            "K" => &mut t.kostka,
            _ => return Err(bad("unknown tag")),
        };
        m.get_mut(&l).expect("partition of n").push((nu, c));
    }
    if t.macdonald.values().chain(t.kostka.values()).any(|r| r.is_empty()) {
        return Err(bad("incomplete table"));
    }
    Ok(t)
}

pub fn load_table(dir: &Path, n: usize) -> Result<MacdonaldTable, PolyBasesError> {
    let text = std::fs::read_to_string(dir.join(file_name(n))).map_err(|e| PolyBasesError::Cache(e.to_string()))?;
    table_from_text(&text, n)
}

pub fn store_table(dir: &Path, t: &MacdonaldTable) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let tmp = dir.join(format!("{}.{}.tmp", file_name(t.n), std::process::id()));
    std::fs::write(&tmp, table_to_text(t))?;
    std::fs::rename(tmp, dir.join(file_name(t.n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn qt(s: &str) -> LaurentPoly2 {
        LaurentPoly2::parse(s, QT).unwrap()
    }

    #[test]
    fn degree_two() {
        assert_eq!(macdonald_schur(&p("1")), vec![(p("1"), qt("1"))]);
        assert_eq!(macdonald_schur(&p("2")), vec![(p("2"), qt("1")), (p("1,1"), qt("q"))]);
        assert_eq!(macdonald_schur(&p("1,1")), vec![(p("2"), qt("1")), (p("1,1"), qt("t"))]);
    }

    #[test]
    fn degree_three() {
        let h21 = macdonald_schur(&p("2,1"));
        assert_eq!(h21, vec![(p("3"), qt("1")), (p("2,1"), qt("q + t")), (p("1,1,1"), qt("q*t"))]);
    }

    #[test]
    fn text_round_trip() {
        let t = build_table(3);
        assert_eq!(table_from_text(&table_to_text(&t), 3).unwrap(), t);
        assert!(table_from_text(&table_to_text(&t), 4).is_err());
        assert!(table_from_text("cometcount-macdonald 0\ndegree 3\n", 3).is_err());
    }
}
