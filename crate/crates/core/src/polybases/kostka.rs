//! Kostka–Foulkes polynomials via the charge statistic, and the transformed
//! Hall–Littlewood functions built from them.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::PolyBasesError;
use crate::combinat::{partitions_of, Partition};
use crate::exact::{LaurentPoly2, RatFun};
use crate::symfun::{Basis, SymFun};

thread_local! {
    static KTILDE: RefCell<HashMap<(Partition, Partition), LaurentPoly2>> = RefCell::new(HashMap::new());
}

/// All semistandard tableaux of shape `shape` and content `content`, each
/// given as its rows.
pub fn ssyt(shape: &Partition, content: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if shape.size() != content.iter().sum::<usize>() {
        return out;
    }
    let rows = shape.len();
    // chain of shapes: entries ≤ i occupy `cur`
    fn rec(
        letter: usize,
        content: &[usize],
        shape: &Partition,
        cur: &mut Vec<usize>,
        fill: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if letter == content.len() {
            if cur.iter().zip(shape.parts()).all(|(a, b)| a == b) {
                out.push(fill.clone());
            }
            return;
        }
        // distribute content[letter] cells as a horizontal strip
        fn strip(
            row: usize,
            left: usize,
            letter: usize,
            content: &[usize],
            shape: &Partition,
            cur: &mut Vec<usize>,
            fill: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if row == cur.len() {
                if left == 0 {
                    rec(letter + 1, content, shape, cur, fill, out);
                }
                return;
            }
            let limit_shape = shape.part(row);
            // horizontal strip: new row length ≤ previous old row length
            let limit_strip = if row == 0 { usize::MAX } else { prev_old(fill, row, letter) };
            let max_add = limit_shape.min(limit_strip).saturating_sub(cur[row]).min(left);
            for add in (0..=max_add).rev() {
                cur[row] += add;
                fill[row].extend(std::iter::repeat_n(letter + 1, add));
                strip(row + 1, left - add, letter, content, shape, cur, fill, out);
                let len = fill[row].len();
                fill[row].truncate(len - add);
                cur[row] -= add;
            }
        }
        strip(0, content[letter], letter, content, shape, cur, fill, out);
    }
    // old length of row-1 before this letter was added
    fn prev_old(fill: &[Vec<usize>], row: usize, letter: usize) -> usize {
        fill[row - 1].iter().filter(|&&x| x <= letter).count()
    }
    let mut cur = vec![0; rows];
    let mut fill = vec![Vec::new(); rows];
    rec(0, content, shape, &mut cur, &mut fill, &mut out);
    out
}

/// Charge of a word whose content is a partition (letters start at 1).
pub fn charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    loop {
        let remaining: Vec<usize> = letters.iter().flatten().copied().collect();
        if remaining.is_empty() {
            return total;
        }
        let top = *remaining.iter().max().expect("nonempty");
        let len = letters.len();
        // rightmost 1, then cyclically leftwards for 2, 3, ...
        let mut pos = (0..len).rev().find(|&i| letters[i] == Some(1)).expect("content is a partition");
        letters[pos] = None;
        let mut index = 0;
        for r in 2..=top {
            let mut wrapped = false;
            let mut i = pos;
            loop {
                if i == 0 {
                    i = len - 1;
                    wrapped = true;
                } else {
                    i -= 1;
                }
                if letters[i] == Some(r) {
                    break;
                }
            }
            if wrapped {
                index += 1;
            }
            total += index;
            letters[i] = None;
            pos = i;
        }
    }
}

/// Reading word: rows from bottom to top, each left to right.
fn reading_word(t: &[Vec<usize>]) -> Vec<usize> {
    t.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// K_{νλ}(t) = Σ_T t^{charge(T)} over SSYT of shape ν and content λ.
pub fn kostka_charge(nu: &Partition, lambda: &Partition) -> Result<LaurentPoly2, PolyBasesError> {
    if nu.size() != lambda.size() {
        return Err(PolyBasesError::SizeMismatch(nu.size(), lambda.size()));
    }
    let mut out = LaurentPoly2::zero();
    for t in ssyt(nu, lambda.parts()) {
        out.add_term((charge(&reading_word(&t)) as i32, 0), BigRational::one());
    }
    Ok(out)
}

/// K̃_{νλ}(q) = q^{n(λ)} K_{νλ}(1/q).
pub fn kostka_foulkes(nu: &Partition, lambda: &Partition) -> Result<LaurentPoly2, PolyBasesError> {
    let key = (nu.clone(), lambda.clone());
    if let Some(k) = KTILDE.with(|m| m.borrow().get(&key).cloned()) {
        return Ok(k);
    }
    let k = kostka_charge(nu, lambda)?;
    let n = lambda.nstat() as i32;
    let out = LaurentPoly2::from_terms(k.terms().map(|((a, _), c)| ((n - a, 0), c.clone())));
    KTILDE.with(|m| m.borrow_mut().insert(key, out.clone()));
    Ok(out)
}

/// Schur expansion of H̃_λ(x;q) = Σ_ν K̃_{νλ}(q) s_ν.
pub fn hall_littlewood_schur(lambda: &Partition) -> Vec<(Partition, LaurentPoly2)> {
    partitions_of(lambda.size())
        .into_iter()
        .filter_map(|nu| {
            let k = kostka_foulkes(&nu, lambda).expect("equal sizes");
            (!k.is_zero()).then_some((nu, k))
        })
        .collect()
}

/// H̃_λ(x;q) in one alphabet, parameter q in the first slot.
pub fn hall_littlewood(lambda: &Partition, cap: usize) -> Result<SymFun, PolyBasesError> {
    let mut f = SymFun::zero(1, cap);
    for (nu, k) in hall_littlewood_schur(lambda) {
        f = &f + &SymFun::basis_element(Basis::S, &[nu], cap)?.scale(&RatFun::from_poly(&k));
    }
    Ok(f)
}

/// Independent construction of H̃_λ(x;q) through the Hall–Littlewood P
/// functions: Gram–Schmidt of the monomial basis for the t-inner product
/// ⟨p_λ,p_μ⟩_t = δ z_λ Π 1/(1−t^{λ_i}), followed by
/// H̃_λ(x;q) = q^{n(λ)} b_λ(q^{-1}) P_λ[X/(1−q^{-1}); q^{-1}].
pub fn hall_littlewood_via_p(lambda: &Partition, cap: usize) -> Result<SymFun, PolyBasesError> {
    let n = lambda.size();
    let t_inner = |f: &SymFun, g: &SymFun| -> RatFun {
        f.terms()
            .iter()
            .filter_map(|(i, a)| {
                g.terms().get(i).map(|b| {
                    let w: RatFun = i[0]
                        .parts()
                        .iter()
                        .map(|&r| (RatFun::one() - RatFun::monomial(1, r as i32, 0)).inv().expect("nonzero"))
                        .product();
                    (a * b).scale_int(&i[0].z()) * w
                })
            })
            .sum()
    };
    // (1^n) first: every dominance-smaller partition precedes
    let order: Vec<Partition> = partitions_of(n).into_iter().rev().collect();
    let mut done: Vec<(SymFun, RatFun)> = Vec::new();
    let mut target = None;
    for mu in &order {
        let m = SymFun::basis_element(Basis::M, std::slice::from_ref(mu), cap)?;
        let mut pmu = m.clone();
        for (pnu, norm) in &done {
            let c = &t_inner(&m, pnu) / norm;
            pmu = &pmu - &pnu.scale(&c);
        }
        if mu == lambda {
            target = Some(pmu);
            break;
        }
        let norm = t_inner(&pmu, &pmu);
        done.push((pmu, norm));
    }
    let p = target.expect("λ is a partition of n");
    // plethysm p_r -> p_r/(1-t^r), times b_λ(t)
    let b: RatFun = lambda
        .multiplicities()
        .iter()
        .flat_map(|&(_, m)| (1..=m).map(|j| RatFun::one() - RatFun::monomial(1, j as i32, 0)))
        .product();
    let q_of = p.principal_specialize(0).scale(&b);
    // t -> 1/q, times q^{n(λ)}
    let shift = RatFun::monomial(1, lambda.nstat() as i32, 0);
    Ok(q_of.try_map_coeffs(|c| c.substitute_monomial([(1, (-1, 0)), (1, (0, 1))]).map(|v| &v * &shift))?)
}

/// Q^τ_ν(q) = Σ_λ χ^λ_ν K̃_{λτ}(q).
pub fn green(nu: &Partition, tau: &Partition) -> Result<LaurentPoly2, PolyBasesError> {
    if nu.size() != tau.size() {
        return Err(PolyBasesError::SizeMismatch(nu.size(), tau.size()));
    }
    let mut out = LaurentPoly2::zero();
    for lambda in partitions_of(nu.size()) {
        let chi = crate::combinat::sym_char(&lambda, nu)?;
        if chi != 0 {
            let k = kostka_foulkes(&lambda, tau)?;
            out += &k.scale(&BigRational::from_integer(BigInt::from(chi)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(s: &str) -> LaurentPoly2 {
        LaurentPoly2::parse(s, ["q", "t"]).unwrap()
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(ssyt(&p("2,1"), &[1, 1, 1]).len(), 2);
        assert_eq!(ssyt(&p("2,1"), &[2, 1]).len(), 1);
        assert_eq!(ssyt(&p("3,2"), &[2, 2, 1]).len(), 2);
        assert_eq!(ssyt(&p("2,2"), &[3, 1]).len(), 0);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[1, 1, 2]), 1);
        assert_eq!(kostka_charge(&p("3"), &p("1,1,1")).unwrap(), q("q^3"));
    }

    #[test]
    fn small_kostka_foulkes() {
        assert_eq!(kostka_foulkes(&p("2"), &p("1,1")).unwrap(), q("1"));
        assert_eq!(kostka_foulkes(&p("1,1"), &p("1,1")).unwrap(), q("q"));
        assert_eq!(kostka_foulkes(&p("2,1"), &p("1,1,1")).unwrap(), q("q^2 + q"));
        assert!(kostka_foulkes(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn green_example() {
        assert_eq!(green(&p("2"), &p("1,1")).unwrap(), q("1 - q"));
        assert_eq!(green(&p("1"), &p("1")).unwrap(), q("1"));
    }
}
