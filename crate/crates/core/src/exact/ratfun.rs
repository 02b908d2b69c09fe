use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense::*;
use super::{ExactError, LaurentPoly2, Monomial};

/// Integer Laurent polynomial stored densely: `p[i][j]` is the coefficient
/// of `x^(i+sx) y^(j+sy)`. Normalized so that the lowest row is nonzero and
/// some row has a nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct IPoly {
    sx: i32,
    sy: i32,
    p: BPoly,
}

impl IPoly {
    fn zero() -> Self {
        Self { sx: 0, sy: 0, p: Vec::new() }
    }

    fn one() -> Self {
        Self { sx: 0, sy: 0, p: b_one() }
    }

    fn from_int(c: BigInt) -> Self {
        Self::new(0, 0, vec![vec![c]])
    }

    fn new(sx: i32, sy: i32, mut p: BPoly) -> Self {
        b_trim(&mut p);
        if p.is_empty() {
            return Self::zero();
        }
        let lead_rows = p.iter().take_while(|r| r.is_empty()).count();
        p.drain(..lead_rows);
        let lead_cols = p
            .iter()
            .filter(|r| !r.is_empty())
            .map(|r| r.iter().take_while(|c| c.is_zero()).count())
            .min()
            .unwrap_or(0);
        if lead_cols > 0 {
            for r in p.iter_mut() {
                if !r.is_empty() {
                    r.drain(..lead_cols);
                }
            }
        }
        Self { sx: sx + lead_rows as i32, sy: sy + lead_cols as i32, p }
    }

    fn is_zero(&self) -> bool {
        self.p.is_empty()
    }

    fn is_one(&self) -> bool {
        self.sx == 0 && self.sy == 0 && self.p.len() == 1 && self.p[0].len() == 1 && self.p[0][0].is_one()
    }

    fn constant(&self) -> Option<&BigInt> {
        (self.sx == 0 && self.sy == 0 && b_is_constant(&self.p)).then(|| &self.p[0][0])
    }

    fn padded(&self, sx: i32, sy: i32) -> BPoly {
        let rows = (self.sx - sx) as usize;
        let cols = (self.sy - sy) as usize;
        let mut out: BPoly = vec![Vec::new(); rows];
        for r in &self.p {
            if r.is_empty() {
                out.push(Vec::new());
            } else {
                let mut row = vec![BigInt::zero(); cols];
                row.extend(r.iter().cloned());
                out.push(row);
            }
        }
        out
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let sx = self.sx.min(o.sx);
        let sy = self.sy.min(o.sy);
        Self::new(sx, sy, b_add(&self.padded(sx, sy), &o.padded(sx, sy)))
    }

    fn neg(&self) -> Self {
        Self { sx: self.sx, sy: self.sy, p: b_neg(&self.p) }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.sx + o.sx, self.sy + o.sy, b_mul(&self.p, &o.p))
    }

    fn div_int(&self, c: &BigInt) -> Self {
        Self { sx: self.sx, sy: self.sy, p: b_div_int(&self.p, c) }
    }

    /// Exact division by a polynomial with no monomial factor.
    fn div_exact(&self, d: &BPoly) -> Self {
        let q = b_div_exact(&self.p, d).expect("exact division");
        Self::new(self.sx, self.sy, q)
    }

    fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.p.iter().enumerate().flat_map(move |(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| ((i as i32 + self.sx, j as i32 + self.sy), c))
        })
    }

    fn from_terms(terms: impl Iterator<Item = (Monomial, BigInt)>) -> Self {
        let items: Vec<(Monomial, BigInt)> = terms.filter(|(_, c)| !c.is_zero()).collect();
        if items.is_empty() {
            return Self::zero();
        }
        let sx = items.iter().map(|t| t.0 .0).min().unwrap();
        let sy = items.iter().map(|t| t.0 .1).min().unwrap();
        let mx = items.iter().map(|t| t.0 .0).max().unwrap();
        let my = items.iter().map(|t| t.0 .1).max().unwrap();
        let mut p: BPoly = vec![vec![BigInt::zero(); (my - sy + 1) as usize]; (mx - sx + 1) as usize];
        for ((a, b), c) in items {
            p[(a - sx) as usize][(b - sy) as usize] += c;
        }
        Self::new(sx, sy, p)
    }

    fn to_laurent(&self, scale: &BigInt) -> LaurentPoly2 {
        LaurentPoly2::from_terms(
            self.terms().map(|(m, c)| (m, BigRational::new(c.clone(), scale.clone()))),
        )
    }
}

/// Exact element of the fraction field Q(x, y).
///
/// Stored as a quotient of integer Laurent polynomials. The canonical form
/// has a denominator that is a genuine polynomial not divisible by either
/// variable, with positive leading coefficient, coprime to the numerator
/// (integer content included). Equality of values is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IPoly,
    den: IPoly,
}

impl Default for RatFun {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFun {
    pub fn zero() -> Self {
        Self { num: IPoly::zero(), den: IPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: IPoly::one(), den: IPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self { num: IPoly::from_int(c), den: IPoly::one() }
    }

    pub fn from_rational(c: &BigRational) -> Self {
        Self { num: IPoly::from_int(c.numer().clone()), den: IPoly::from_int(c.denom().clone()) }
    }

    /// The first variable (slot 0) or the second (slot 1).
    pub fn var(slot: usize) -> Self {
        let (a, b) = if slot == 0 { (1, 0) } else { (0, 1) };
        Self::monomial(1, a, b)
    }

    /// `c * x^a * y^b`.
    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        let num = if c == 0 { IPoly::zero() } else { IPoly::new(a, b, vec![vec![BigInt::from(c)]]) };
        Self { num, den: IPoly::one() }
    }

    pub fn from_poly(p: &LaurentPoly2) -> Self {
        let l = common_denominator(p);
        let num = IPoly::from_terms(p.terms().map(|(m, c)| (*m, (c * BigRational::from_integer(l.clone())).to_integer())));
        Self::from_ipolys(num, IPoly::from_int(l)).expect("nonzero denominator")
    }

    /// Builds and normalizes `num / den`.
    pub fn from_parts(num: &LaurentPoly2, den: &LaurentPoly2) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        let n = Self::from_poly(num);
        let d = Self::from_poly(den);
        Ok(&n / &d)
    }

    fn from_ipolys(num: IPoly, den: IPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let mut num = IPoly { sx: num.sx - den.sx, sy: num.sy - den.sy, p: num.p };
        let mut den = IPoly { sx: 0, sy: 0, p: den.p };
        if let Some(c) = den.constant().cloned() {
            let g = b_int_content(&num.p).gcd(&c);
            let g = if c.is_negative() { -g } else { g };
            num = num.div_int(&g);
            den = IPoly::from_int(c / g);
        } else {
            let g = b_gcd(&num.p, &den.p);
            if !(b_is_constant(&g) && g[0][0].is_one()) {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
            if b_lc(&den.p).is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        Ok(Self { num, den })
    }

    /// Canonical form of an arbitrary quotient; fails on a zero denominator.
    pub fn normalize(num: &LaurentPoly2, den: &LaurentPoly2) -> Result<Self, ExactError> {
        Self::from_parts(num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn numerator(&self) -> LaurentPoly2 {
        self.num.to_laurent(&BigInt::one())
    }

    pub fn denominator(&self) -> LaurentPoly2 {
        self.den.to_laurent(&BigInt::one())
    }

    /// True when the denominator is a constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.constant().is_some()
    }

    /// The value as a Laurent polynomial, if the reduced denominator is a
    /// constant.
    pub fn as_polynomial(&self) -> Result<LaurentPoly2, ExactError> {
        match self.den.constant() {
            Some(c) => Ok(self.num.to_laurent(c)),
            None => Err(ExactError::NotPolynomial(self.denominator().to_string())),
        }
    }

    /// The constant value, if the function is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        let c = self.den.constant()?;
        if self.num.is_zero() {
            return Some(BigRational::zero());
        }
        let n = self.num.constant()?;
        Some(BigRational::new(n.clone(), c.clone()))
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Self::from_ipolys(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self * &Self::from_bigint(c.clone())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self * &Self::from_rational(c)
    }

    /// Adams-type substitution `x -> x^d`, `y -> y^d`, which preserves
    /// coprimality and sign normalization.
    pub fn dilate(&self, d: u32) -> Self {
        if d == 1 {
            return self.clone();
        }
        Self { num: dilate(&self.num, d), den: dilate(&self.den, d) }
    }

    /// Substitutes `x -> s1 * x^a y^b`, `y -> s2 * x^c y^d`.
    pub fn substitute_monomial(&self, images: [(i32, Monomial); 2]) -> Result<Self, ExactError> {
        let sub = |p: &IPoly| {
            let [(s1, (a, b)), (s2, (c, d))] = images;
            IPoly::from_terms(p.terms().map(|((i, j), coef)| {
                let neg = (s1 < 0 && i.rem_euclid(2) == 1) ^ (s2 < 0 && j.rem_euclid(2) == 1);
                let coef = if neg { -coef.clone() } else { coef.clone() };
                ((a * i + c * j, b * i + d * j), coef)
            }))
        };
        let den = sub(&self.den);
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        Self::from_ipolys(sub(&self.num), den)
    }

    /// Exchanges the two variables.
    pub fn swap(&self) -> Self {
        self.substitute_monomial([(1, (0, 1)), (1, (1, 0))]).expect("automorphism")
    }

    /// `(x, y) -> (-x, -y)`.
    pub fn negate_vars(&self) -> Self {
        self.substitute_monomial([(-1, (1, 0)), (-1, (0, 1))]).expect("automorphism")
    }

    /// Divides every exponent of the given variable by two; fails if an odd
    /// exponent occurs.
    pub fn halve_exponents(&self, slot: usize) -> Result<Self, ExactError> {
        let halve = |p: &IPoly| -> Result<IPoly, ExactError> {
            let mut items = Vec::new();
            for ((a, b), c) in p.terms() {
                let e = if slot == 0 { a } else { b };
                if e % 2 != 0 {
                    return Err(ExactError::OddParity);
                }
                items.push((if slot == 0 { (a / 2, b) } else { (a, b / 2) }, c.clone()));
            }
            Ok(IPoly::from_terms(items.into_iter()))
        };
        Ok(Self { num: halve(&self.num)?, den: halve(&self.den)? })
    }

    /// Sets the given variable to zero.
    pub fn set_zero(&self, slot: usize) -> Result<Self, ExactError> {
        let f = if slot == 0 { self.clone() } else { self.swap() };
        if f.num.is_zero() {
            return Ok(Self::zero());
        }
        if f.num.sx < 0 {
            return Err(ExactError::Pole);
        }
        let num = if f.num.sx > 0 {
            IPoly::zero()
        } else {
            IPoly::new(0, f.num.sy, vec![f.num.p[0].clone()])
        };
        // the denominator has a nonzero row 0 because it is not divisible by x
        let den = IPoly::new(0, 0, vec![f.den.p[0].clone()]);
        let r = Self::from_ipolys(num, den)?;
        Ok(if slot == 0 { r } else { r.swap() })
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Result<BigRational, ExactError> {
        let n = self.numerator().eval(x, y).ok_or(ExactError::Pole)?;
        let d = self.denominator().eval(x, y).ok_or(ExactError::Pole)?;
        if d.is_zero() {
            return Err(ExactError::Pole);
        }
        Ok(n / d)
    }

    /// Maps `x -> s1 u^a`, `y -> s2 u^b` and rewrites the result in `q = u^2`.
    pub fn substitute_halfpowers(&self, images: [(i32, i32); 2]) -> Result<LaurentPoly2, ExactError> {
        let [(s1, a), (s2, b)] = images;
        let f = self.substitute_monomial([(s1, (a, 0)), (s2, (b, 0))])?;
        f.halve_exponents(0)?.as_polynomial()
    }

    pub fn to_text(&self, names: [&str; 2]) -> String {
        match self.den.constant() {
            Some(c) if c.is_one() => self.num.to_laurent(c).to_text(names),
            _ => format!(
                "({})/({})",
                self.numerator().to_text(names),
                self.denominator().to_text(names)
            ),
        }
    }

    pub fn to_latex(&self, names: [&str; 2]) -> String {
        match self.den.constant() {
            Some(c) if c.is_one() => self.num.to_laurent(c).to_latex(names),
            _ => format!(
                "\\frac{{{}}}{{{}}}",
                self.numerator().to_latex(names),
                self.denominator().to_latex(names)
            ),
        }
    }

    /// Parses either a polynomial or `(num)/(den)` as produced by
    /// [`RatFun::to_text`].
    pub fn parse(s: &str, names: [&str; 2]) -> Result<Self, ExactError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let close = rest.find(')').ok_or_else(|| ExactError::Parse("unbalanced parenthesis".into()))?;
            let num = LaurentPoly2::parse(&rest[..close], names)?;
            let tail = rest[close + 1..].trim_start();
            let tail = tail
                .strip_prefix('/')
                .map(str::trim_start)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| ExactError::Parse("expected /(denominator)".into()))?;
            let den = LaurentPoly2::parse(tail, names)?;
            Self::from_parts(&num, &den)
        } else {
            Ok(Self::from_poly(&LaurentPoly2::parse(s, names)?))
        }
    }
}

fn common_denominator(p: &LaurentPoly2) -> BigInt {
    p.terms().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()))
}

fn dilate(p: &IPoly, d: u32) -> IPoly {
    let du = d as usize;
    let di = d as i32;
    let rows = p.p.len();
    let mut out: BPoly = vec![Vec::new(); (rows - 1) * du + 1];
    for (i, r) in p.p.iter().enumerate() {
        if r.is_empty() {
            continue;
        }
        let mut row = vec![BigInt::zero(); (r.len() - 1) * du + 1];
        for (j, c) in r.iter().enumerate() {
            row[j * du] = c.clone();
        }
        out[i * du] = row;
    }
    IPoly { sx: p.sx * di, sy: p.sy * di, p: out }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(["z", "w"]))
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, o: &RatFun) -> RatFun {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun { num: self.num.add(&o.num), den: IPoly::one() };
        }
        if self.den == o.den {
            return RatFun::from_ipolys(self.num.add(&o.num), self.den.clone()).expect("nonzero denominator");
        }
        // Knuth's reduced addition: only gcd(t, g) can cancel
        let g = b_gcd(&self.den.p, &o.den.p);
        let b1 = self.den.div_exact(&g);
        let d1 = o.den.div_exact(&g);
        let t = self.num.mul(&d1).add(&o.num.mul(&b1));
        if t.is_zero() {
            return RatFun::zero();
        }
        let den = b1.mul(&o.den);
        if b_is_constant(&g) && g[0][0].is_one() {
            return fix_sign(t, den);
        }
        let g2 = b_gcd(&t.p, &g);
        if b_is_constant(&g2) && g2[0][0].is_one() {
            fix_sign(t, den)
        } else {
            fix_sign(t.div_exact(&g2), den.div_exact(&g2))
        }
    }
}

fn fix_sign(num: IPoly, den: IPoly) -> RatFun {
    if b_lc(&den.p).is_negative() {
        RatFun { num: num.neg(), den: den.neg() }
    } else {
        RatFun { num, den }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, o: &RatFun) -> RatFun {
        self + &(-o)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, o: &RatFun) -> RatFun {
        if self.is_zero() || o.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFun { num: self.num.mul(&o.num), den: IPoly::one() };
        }
        // cross-cancel a/b * c/d
        let (a, d) = cancel(&self.num, &o.den);
        let (c, b) = cancel(&o.num, &self.den);
        let num = a.mul(&c);
        let den = b.mul(&d);
        fix_sign(num, den)
    }
}

/// Removes gcd(n, d) from both; `d` has no monomial factor.
fn cancel(n: &IPoly, d: &IPoly) -> (IPoly, IPoly) {
    if d.is_one() {
        return (n.clone(), d.clone());
    }
    if let Some(c) = d.constant() {
        let g = b_int_content(&n.p).gcd(c);
        if g.is_one() {
            return (n.clone(), d.clone());
        }
        return (n.div_int(&g), IPoly::from_int(c / g));
    }
    let g = b_gcd(&n.p, &d.p);
    if b_is_constant(&g) && g[0][0].is_one() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g), d.div_exact(&g))
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, o: &RatFun) -> RatFun {
        self * &o.inv().expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> RatFun {
        iter.fold(RatFun::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for RatFun {
    fn product<I: Iterator<Item = RatFun>>(iter: I) -> RatFun {
        iter.fold(RatFun::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zw(s: &str) -> RatFun {
        RatFun::parse(s, ["z", "w"]).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factors() {
        assert_eq!(zw("(z^2 - 1)/(z - 1)"), zw("z + 1"));
        assert_eq!(zw("(0)/(w^3)"), RatFun::zero());
        let a = zw("z - w").pow(2);
        let f = &(&a * &zw("z^2 - 1")) / &zw("z^2 - 1");
        assert_eq!(f, a);
        assert_eq!(zw("(2*z)/(4*z*w - 2)"), zw("(z)/(2*z*w - 1)"));
        assert_eq!(zw("(1)/(-w + 1)"), zw("(-1)/(w - 1)"));
    }

    #[test]
    fn as_polynomial_cases() {
        assert_eq!(zw("(z^4 - w^4)/(z^2 + w^2)").as_polynomial().unwrap().to_string(), "z^2 - w^2");
        assert!(matches!(zw("(1)/(z - 1)").as_polynomial(), Err(ExactError::NotPolynomial(_))));
        assert_eq!(zw("(z - w)/(z^3)").as_polynomial().unwrap().to_string(), "z^-2 - z^-3*w");
        assert_eq!(zw("(z)/(2)").as_polynomial().unwrap().to_string(), "1/2*z");
    }

    #[test]
    fn halfpower_substitution() {
        let f = zw("z - w").pow(2);
        let e = f.substitute_halfpowers([(1, -1), (1, 1)]).unwrap();
        assert_eq!(e.to_text(["q", "t"]), "q - 2 + q^-1");
        assert_eq!(RatFun::one().substitute_halfpowers([(1, -1), (1, 1)]).unwrap().to_text(["q", "t"]), "1");
        assert_eq!(zw("z*w").substitute_halfpowers([(1, -1), (1, 1)]).unwrap().to_text(["q", "t"]), "1");
        assert!(matches!(zw("z").substitute_halfpowers([(1, 1), (1, 1)]), Err(ExactError::OddParity)));
    }

    #[test]
    fn set_zero_and_dilate() {
        let h = &zw("z - w") / &(&zw("z^2 - 1") * &zw("1 - w^2"));
        assert_eq!(h.set_zero(0).unwrap(), zw("(-w)/(w^2 - 1)"));
        assert_eq!(h.dilate(2), &zw("z^2 - w^2") / &(&zw("z^4 - 1") * &zw("1 - w^4")));
        assert!(matches!(zw("z^-1").set_zero(0), Err(ExactError::Pole)));
    }

    #[test]
    fn text_round_trip() {
        let h = &zw("3*z - w") / &(&zw("z^2 - 1") * &zw("2 - w^2"));
        assert_eq!(RatFun::parse(&h.to_text(["z", "w"]), ["z", "w"]).unwrap(), h);
    }
}
