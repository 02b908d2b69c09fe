//! Dense integer polynomials in one and two variables.
//!
//! `UPoly` is a coefficient vector indexed by degree; `BPoly` is a
//! polynomial in the first variable whose coefficients are `UPoly`s in the
//! second. Both are kept trimmed (no trailing zeros), so the zero polynomial
//! is the empty vector. These are the workhorses behind `RatFun`; nothing
//! here is exported from the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type BPoly = Vec<UPoly>;

const HEU_GCD_TRIES: usize = 6;

// ---------------------------------------------------------------------------
// univariate

pub(crate) fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn u_add(a: &UPoly, b: &UPoly) -> UPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.clone();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    u_trim(&mut out);
    out
}

pub(crate) fn u_neg(a: &UPoly) -> UPoly {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i);
        out.push(match y {
            Some(y) => x - y,
            None => x,
        });
    }
    u_trim(&mut out);
    out
}

pub(crate) fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    u_trim(&mut out);
    out
}

pub(crate) fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Non-negative gcd of the coefficients.
pub(crate) fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn u_div_scalar(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

pub(crate) fn u_eval(a: &UPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub(crate) fn u_lc(a: &UPoly) -> &BigInt {
    a.last().expect("leading coefficient of zero polynomial")
}

/// Exact division over Z; `None` when `b` does not divide `a`.
pub(crate) fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = u_lc(b).clone();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while !rem.is_empty() {
        if rem.len() < b.len() {
            return None;
        }
        let (q, r) = u_lc(&rem).div_rem(&lb);
        if !r.is_zero() {
            return None;
        }
        let shift = rem.len() - 1 - db;
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                rem[shift + j] -= &q * y;
            }
        }
        quot[shift] = q;
        u_trim(&mut rem);
    }
    u_trim(&mut quot);
    Some(quot)
}

fn u_pseudo_rem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = u_lc(b).clone();
    while rem.len() >= b.len() {
        let lr = u_lc(&rem).clone();
        let shift = rem.len() - 1 - db;
        for c in rem.iter_mut() {
            *c *= &lb;
        }
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &lr * y;
        }
        u_trim(&mut rem);
    }
    rem
}

fn u_primitive(a: &UPoly) -> UPoly {
    let c = u_content(a);
    let mut p = if c.is_one() || c.is_zero() { a.clone() } else { u_div_scalar(a, &c) };
    if p.last().is_some_and(|l| l.is_negative()) {
        p = u_neg(&p);
    }
    p
}

/// Symmetric xi-adic digits of an integer, lowest first.
fn xi_digits(mut c: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2;
    let mut out = Vec::new();
    while !c.is_zero() {
        let mut d = c.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        c = (c - &d) / xi;
        out.push(d);
    }
    out
}

fn u_norm(a: &UPoly) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn next_xi(xi: &BigInt) -> BigInt {
    let r = xi.sqrt().sqrt();
    xi * BigInt::from(73794) * r / BigInt::from(27011) + 1
}

fn u_gcd_heuristic(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let mut xi = BigInt::from(2) * u_norm(a).min(u_norm(b)) + 2;
    for _ in 0..HEU_GCD_TRIES {
        let ha = u_eval(a, &xi);
        let hb = u_eval(b, &xi);
        let h = ha.gcd(&hb);
        if !h.is_zero() {
            let mut g = xi_digits(h.clone(), &xi);
            u_trim(&mut g);
            let g = u_primitive(&g);
            if !g.is_empty() && u_div_exact(a, &g).is_some() && u_div_exact(b, &g).is_some() {
                return Some(g);
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn u_gcd_prs(a: &UPoly, b: &UPoly) -> UPoly {
    let (mut x, mut y) = if a.len() >= b.len() {
        (u_primitive(a), u_primitive(b))
    } else {
        (u_primitive(b), u_primitive(a))
    };
    while !y.is_empty() {
        let r = u_pseudo_rem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_primitive(&x)
}

/// Gcd over Z with positive leading coefficient, content included.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize_sign(b.clone());
    }
    if b.is_empty() {
        return u_normalize_sign(a.clone());
    }
    let ca = u_content(a);
    let cb = u_content(b);
    let c = ca.gcd(&cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let pa = u_div_scalar(a, &ca);
    let pb = u_div_scalar(b, &cb);
    let g = u_gcd_heuristic(&pa, &pb).unwrap_or_else(|| u_gcd_prs(&pa, &pb));
    u_scale(&g, &c)
}

fn u_normalize_sign(p: UPoly) -> UPoly {
    if p.last().is_some_and(|l| l.is_negative()) {
        u_neg(&p)
    } else {
        p
    }
}

// ---------------------------------------------------------------------------
// bivariate: outer index is the degree in the first variable

pub(crate) fn b_trim(p: &mut BPoly) {
    for row in p.iter_mut() {
        u_trim(row);
    }
    while p.last().is_some_and(|r| r.is_empty()) {
        p.pop();
    }
}

pub(crate) fn b_add(a: &BPoly, b: &BPoly) -> BPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => u_add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    b_trim(&mut out);
    out
}

pub(crate) fn b_neg(a: &BPoly) -> BPoly {
    a.iter().map(u_neg).collect()
}

pub(crate) fn b_mul(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: BPoly = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_empty() {
                let prod = u_mul(x, y);
                out[i + j] = u_add(&out[i + j], &prod);
            }
        }
    }
    b_trim(&mut out);
    out
}

fn b_scale_u(a: &BPoly, c: &UPoly) -> BPoly {
    let mut out: BPoly = a.iter().map(|r| u_mul(r, c)).collect();
    b_trim(&mut out);
    out
}

pub(crate) fn b_int_content(a: &BPoly) -> BigInt {
    let mut g = BigInt::zero();
    for row in a {
        for c in row {
            g = g.gcd(c);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

pub(crate) fn b_div_int(a: &BPoly, c: &BigInt) -> BPoly {
    a.iter().map(|r| u_div_scalar(r, c)).collect()
}

/// Gcd of all coefficient polynomials (content in Z[w]).
fn b_content_w(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for row in a {
        if row.is_empty() {
            continue;
        }
        g = u_gcd(&g, row);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_u_exact(a: &BPoly, c: &UPoly) -> BPoly {
    a.iter()
        .map(|r| u_div_exact(r, c).expect("content divides every coefficient"))
        .collect()
}

pub(crate) fn b_lc(a: &BPoly) -> &BigInt {
    u_lc(a.last().expect("leading coefficient of zero polynomial"))
}

pub(crate) fn b_is_constant(a: &BPoly) -> bool {
    a.len() == 1 && a[0].len() == 1
}

/// Exact division over Z[w][z].
pub(crate) fn b_div_exact(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    // quick degree check in the second variable
    let wdeg = |p: &BPoly| p.iter().map(|r| r.len()).max().unwrap_or(0);
    if wdeg(a) < wdeg(b) {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut rem = a.clone();
    let mut quot: BPoly = vec![Vec::new(); a.len() - db];
    while !rem.is_empty() {
        if rem.len() < b.len() {
            return None;
        }
        let q = u_div_exact(rem.last().unwrap(), lb)?;
        let shift = rem.len() - 1 - db;
        for (j, y) in b.iter().enumerate() {
            if !y.is_empty() {
                let t = u_mul(&q, y);
                rem[shift + j] = u_sub(&rem[shift + j], &t);
            }
        }
        quot[shift] = q;
        b_trim(&mut rem);
    }
    b_trim(&mut quot);
    Some(quot)
}

fn b_eval_second(a: &BPoly, x: &BigInt) -> UPoly {
    let mut out: UPoly = a.iter().map(|r| u_eval(r, x)).collect();
    u_trim(&mut out);
    out
}

fn b_norm(a: &BPoly) -> BigInt {
    a.iter().map(u_norm).max().unwrap_or_default()
}

fn b_primitive(a: &BPoly) -> BPoly {
    let c = b_content_w(a);
    let mut p = if c.len() == 1 && c[0].is_one() { a.clone() } else { b_div_u_exact(a, &c) };
    if b_lc(&p).is_negative() {
        p = b_neg(&p);
    }
    p
}

fn b_gcd_heuristic(a: &BPoly, b: &BPoly) -> Option<BPoly> {
    let mut xi = BigInt::from(2) * b_norm(a).min(b_norm(b)) + 2;
    for _ in 0..HEU_GCD_TRIES {
        let ea = b_eval_second(a, &xi);
        let eb = b_eval_second(b, &xi);
        if ea.len() == a.len() && eb.len() == b.len() {
            let h = u_gcd(&ea, &eb);
            let mut g: BPoly = h.iter().map(|c| xi_digits(c.clone(), &xi)).collect();
            b_trim(&mut g);
            if !g.is_empty() {
                let g = b_primitive(&g);
                if b_div_exact(a, &g).is_some() && b_div_exact(b, &g).is_some() {
                    return Some(g);
                }
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn b_pseudo_rem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while rem.len() >= b.len() {
        let lr = rem.last().unwrap().clone();
        let shift = rem.len() - 1 - db;
        rem = b_scale_u(&rem, &lb);
        for (j, y) in b.iter().enumerate() {
            let t = u_mul(&lr, y);
            rem[shift + j] = u_sub(&rem[shift + j], &t);
        }
        b_trim(&mut rem);
    }
    rem
}

fn b_gcd_prs(a: &BPoly, b: &BPoly) -> BPoly {
    let (mut x, mut y) = if a.len() >= b.len() {
        (b_primitive(a), b_primitive(b))
    } else {
        (b_primitive(b), b_primitive(a))
    };
    while !y.is_empty() {
        let r = b_pseudo_rem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_primitive(&r) };
    }
    b_primitive(&x)
}

/// Gcd in Z[z,w], positive leading coefficient, integer content included.
pub(crate) fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() {
        return b_sign(b.clone());
    }
    if b.is_empty() {
        return b_sign(a.clone());
    }
    if b_is_constant(a) || b_is_constant(b) {
        return vec![vec![b_int_content(a).gcd(&b_int_content(b))]];
    }
    let ca = b_content_w(a);
    let cb = b_content_w(b);
    let c = u_gcd(&ca, &cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let pa = b_div_u_exact(a, &ca);
    let pb = b_div_u_exact(b, &cb);
    let g = b_gcd_heuristic(&pa, &pb).unwrap_or_else(|| b_gcd_prs(&pa, &pb));
    b_scale_u(&g, &c)
}

fn b_sign(p: BPoly) -> BPoly {
    if !p.is_empty() && b_lc(&p).is_negative() {
        b_neg(&p)
    } else {
        p
    }
}

pub(crate) fn b_one() -> BPoly {
    vec![vec![BigInt::one()]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[i64]) -> UPoly {
        let mut p: UPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        u_trim(&mut p);
        p
    }

    #[test]
    fn univariate_gcd_of_cyclotomic_products() {
        // (x^2-1)(x+2) and (x-1)(x+3)
        let a = u_mul(&u(&[-1, 0, 1]), &u(&[2, 1]));
        let b = u_mul(&u(&[-1, 1]), &u(&[3, 1]));
        assert_eq!(u_gcd(&a, &b), u(&[-1, 1]));
        assert_eq!(u_gcd(&u_scale(&a, &BigInt::from(6)), &u_scale(&b, &BigInt::from(4))), u(&[-2, 2]));
    }

    #[test]
    fn prs_and_heuristic_agree() {
        let a = u_mul(&u(&[1, -3, 0, 7]), &u(&[5, 0, 2]));
        let b = u_mul(&u(&[1, -3, 0, 7]), &u(&[-1, 4]));
        let h = u_gcd_heuristic(&a, &b).unwrap();
        assert_eq!(h, u_gcd_prs(&a, &b));
    }

    #[test]
    fn bivariate_gcd_recovers_common_factor() {
        // rows indexed by z-degree; (z - w) and (z^2 - w^2)
        let zw: BPoly = vec![u(&[0, -1]), u(&[1])];
        let z2w2: BPoly = vec![u(&[0, 0, -1]), vec![], u(&[1])];
        let extra: BPoly = vec![u(&[3, 0, 1]), u(&[0, 2])];
        let a = b_mul(&zw, &extra);
        let g = b_gcd(&a, &z2w2);
        assert_eq!(g, zw);
        assert_eq!(b_gcd_prs(&a, &z2w2), zw);
        assert_eq!(b_div_exact(&z2w2, &zw).unwrap(), vec![u(&[0, 1]), u(&[1])]);
        assert!(b_div_exact(&extra, &zw).is_none());
    }
}
