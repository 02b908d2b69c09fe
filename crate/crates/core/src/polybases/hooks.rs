//! Genus-g hook functions and their specializations.

use crate::combinat::Partition;
use crate::exact::{LaurentPoly2, RatFun};

fn zw(a: i32, b: i32) -> LaurentPoly2 {
    LaurentPoly2::unit_monomial(a, b)
}

/// ℋ^g_λ(z,w) = Π_s (z^{2a+1} − w^{2l+1})^{2g} / ((z^{2a+2} − w^{2l})(z^{2a} − w^{2l+2})).
pub fn hook_genus(lambda: &Partition, g: u32) -> RatFun {
    let mut num = LaurentPoly2::one();
    let mut den = LaurentPoly2::one();
    for (_, _, a, l) in lambda.cells() {
        let (a, l) = (a as i32, l as i32);
        num = &num * &(&zw(2 * a + 1, 0) - &zw(0, 2 * l + 1)).pow(2 * g);
        den = &den * &(&zw(2 * a + 2, 0) - &zw(0, 2 * l));
        den = &den * &(&zw(2 * a, 0) - &zw(0, 2 * l + 2));
    }
    RatFun::from_parts(&num, &den).expect("hook denominators are nonzero")
}

/// Specializations of the genus-g hook function, all in the variable q.
#[derive(Clone, Debug, PartialEq)]
pub struct HookSpecials {
    /// ℋ^g_λ(0,√q) = q^{g⟨λ,λ⟩}/a_λ(q).
    pub pure: RatFun,
    /// ℋ^g_λ(√q,1/√q) = (q^{−⟨λ,λ⟩/2} H_λ(q))^{2g−2}.
    pub epoly: RatFun,
    /// H_λ(q) = Π_s (1 − q^{h(s)}).
    pub hookpoly: LaurentPoly2,
    /// a_λ(q) = q^{⟨λ,λ⟩} Π_i Π_{j=1}^{m_i} (1 − q^{−j}), the centralizer order.
    pub a_lambda: LaurentPoly2,
}

fn one_minus_q(e: i32) -> LaurentPoly2 {
    &LaurentPoly2::one() - &zw(e, 0)
}

pub fn hook_polynomial(lambda: &Partition) -> LaurentPoly2 {
    lambda.hooks().into_iter().fold(LaurentPoly2::one(), |acc, h| &acc * &one_minus_q(h as i32))
}

pub fn centralizer_order(lambda: &Partition) -> LaurentPoly2 {
    let mut a = zw(lambda.pairing() as i32, 0);
    for (_, m) in lambda.multiplicities() {
        for j in 1..=m as i32 {
            a = &a * &(&LaurentPoly2::one() - &zw(-j, 0));
        }
    }
    a
}

pub fn hook_specials(lambda: &Partition, g: u32) -> HookSpecials {
    let pairing = lambda.pairing() as i32;
    let g = g as i32;
    let hookpoly = hook_polynomial(lambda);
    let a_lambda = centralizer_order(lambda);
    let pure = &RatFun::monomial(1, g * pairing, 0) / &RatFun::from_poly(&a_lambda);
    let epoly = (&RatFun::monomial(1, -(g - 1) * pairing, 0)) * &RatFun::from_poly(&hookpoly).pow(2 * g - 2);
    HookSpecials { pure, epoly, hookpoly, a_lambda }
}

/// ℋ^g evaluated at (0,√q), read off the hook function itself.
pub fn pure_from_hook(h: &RatFun) -> RatFun {
    h.set_zero(0).and_then(|f| f.halve_exponents(1)).map(|f| f.swap()).expect("hook functions are regular at z = 0 with even w-degrees")
}

/// ℋ^g evaluated at (√q, 1/√q), read off the hook function itself.
pub fn epoly_from_hook(h: &RatFun) -> RatFun {
    h.substitute_monomial([(1, (1, 0)), (1, (-1, 0))])
        .and_then(|f| f.halve_exponents(0))
        .expect("hook functions have even total parity")
}
