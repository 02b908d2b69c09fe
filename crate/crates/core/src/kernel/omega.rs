//! The genus-g Cauchy kernel Ω and its plethystic logarithm.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::combinat::{partitions_of, Partition};
use crate::exact::RatFun;
use crate::polybases::{hall_littlewood, hook_genus, hook_polynomial, hook_specials, macdonald, PolyBasesError};
use crate::symfun::{log_term_via_types, Basis, GradedSeries, SymFun};

/// Which specialization of the kernel to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// Ω(z,w) with the full Macdonald functions.
    Full,
    /// Ω(0,√q) with transformed Hall–Littlewood functions, in q.
    Pure,
    /// Ω(√q,1/√q) with every alphabet principally specialized, in q.
    Epoly,
}

impl FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(Self::Full),
            "pure" => Ok(Self::Pure),
            "epoly" => Ok(Self::Epoly),
            _ => Err(format!("unknown mode {s:?}")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Full => "full",
            Self::Pure => "pure",
            Self::Epoly => "epoly",
        })
    }
}

/// f(x_1) ⋯ f(x_k) for a one-alphabet function f.
pub fn tensor_power(f: &SymFun, k: usize) -> SymFun {
    assert_eq!(f.k(), 1, "tensor_power takes a one-alphabet function");
    let mut acc: Vec<(Vec<Partition>, RatFun)> = vec![(Vec::new(), RatFun::one())];
    for _ in 0..k {
        acc = acc
            .iter()
            .flat_map(|(idx, c)| {
                f.terms().iter().map(move |(i, v)| {
                    let mut j = idx.clone();
                    j.push(i[0].clone());
                    (j, c * v)
                })
            })
            .collect();
    }
    let mut out = SymFun::zero(k, f.cap());
    for (idx, c) in acc {
        out.add_term(idx, c);
    }
    out
}

/// The summand A_λ of Ω for one nonzero partition.
pub fn omega_summand(lambda: &Partition, g: u32, k: usize, cap: usize, mode: Mode) -> Result<SymFun, PolyBasesError> {
    Ok(match mode {
        Mode::Full => {
            let h = macdonald(lambda, cap)?.map_coeffs(|c| c.dilate(2));
            tensor_power(&h, k).scale(&hook_genus(lambda, g))
        }
        Mode::Pure => tensor_power(&hall_littlewood(lambda, cap)?, k).scale(&hook_specials(lambda, g).pure),
        Mode::Epoly => {
            // q^{(1-g)|λ|} (q^{-n(λ)} H_λ(q))^{2g+k-2} Π_i s_λ(x_i y)
            let n = lambda.size() as i32;
            let e = 2 * g as i32 + k as i32 - 2;
            let hook = &RatFun::monomial(1, -(lambda.nstat() as i32), 0) * &RatFun::from_poly(&hook_polynomial(lambda));
            let c = &RatFun::monomial(1, (1 - g as i32) * n, 0) * &hook.pow(e);
            let s = SymFun::basis_element(Basis::S, std::slice::from_ref(lambda), cap)?;
            let mut f = tensor_power(&s, k);
            for i in 0..k {
                f = f.principal_specialize(i);
            }
            f.scale(&c)
        }
    })
}

/// A_λ for every nonzero λ of size at most `cap`.
pub fn omega_family(g: u32, k: usize, cap: usize, mode: Mode) -> Result<BTreeMap<Partition, SymFun>, PolyBasesError> {
    let lambdas: Vec<Partition> = (1..=cap).flat_map(partitions_of).collect();
    let items: Vec<(Partition, SymFun)> = lambdas
        .into_par_iter()
        .map(|l| omega_summand(&l, g, k, cap, mode).map(|a| (l, a)))
        .collect::<Result<_, _>>()?;
    Ok(items.into_iter().collect())
}

/// Ω truncated at degree `cap`.
pub fn omega_series(g: u32, k: usize, cap: usize, mode: Mode) -> Result<GradedSeries, PolyBasesError> {
    let family = omega_family(g, k, cap, mode)?;
    let mut out = GradedSeries::one(k, cap);
    for n in 1..=cap {
        let t = family
            .iter()
            .filter(|(l, _)| l.size() == n)
            .fold(SymFun::zero(k, cap), |acc, (_, a)| &acc + a);
        out.set(n, t);
    }
    Ok(out)
}

type LogKey = (u32, usize, usize, Mode);

fn log_cache() -> &'static Mutex<HashMap<LogKey, Arc<SymFun>>> {
    static CACHE: OnceLock<Mutex<HashMap<LogKey, Arc<SymFun>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The degree-n term of Log Ω, truncated at degree n. Memoized per
/// (g, k, n, mode).
pub fn log_omega_term(g: u32, k: usize, n: usize, mode: Mode) -> Result<Arc<SymFun>, PolyBasesError> {
    let key = (g, k, n, mode);
    if let Some(v) = log_cache().lock().expect("log cache").get(&key) {
        return Ok(v.clone());
    }
    let family = omega_family(g, k, n, mode)?;
    let term = Arc::new(log_term_via_types(&family, k, n, n));
    log_cache().lock().expect("log cache").insert(key, term.clone());
    Ok(term)
}
