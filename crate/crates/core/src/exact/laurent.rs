use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// Exponent pair `(a, b)` of the monomial `x^a y^b`.
pub type Monomial = (i32, i32);

/// Laurent polynomial in two variables with rational coefficients.
///
/// The variables are anonymous; names are supplied when printing or
/// parsing. Single-variable results (polynomials in `q`) use exponent
/// pairs `(a, 0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, a: i32, b: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    /// `x^a y^b` with coefficient 1.
    pub fn unit_monomial(a: i32, b: i32) -> Self {
        Self::monomial(BigRational::one(), a, b)
    }

    /// Builds a polynomial in the first variable from integer coefficients,
    /// lowest degree first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term((i as i32, 0), BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigRational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The constant if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True when every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    /// Smallest exponent of each variable, `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let a = self.terms.keys().map(|m| m.0).min()?;
        let b = self.terms.keys().map(|m| m.1).min()?;
        Some((a, b))
    }

    pub fn max_exponents(&self) -> Option<Monomial> {
        let a = self.terms.keys().map(|m| m.0).max()?;
        let b = self.terms.keys().map(|m| m.1).max()?;
        Some((a, b))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn shift(&self, da: i32, db: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), c)| ((a + da, b + db), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
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

    /// Substitutes `x -> s1 * x^a y^b`, `y -> s2 * x^c y^d` where the images
    /// are given as `(sign, exponents)`.
    pub fn substitute_monomial(&self, images: [(i32, Monomial); 2]) -> Self {
        let [(s1, (a, b)), (s2, (c, d))] = images;
        let mut out = Self::zero();
        for (&(i, j), coef) in &self.terms {
            let neg = (s1 < 0 && i.rem_euclid(2) == 1) ^ (s2 < 0 && j.rem_euclid(2) == 1);
            let coef = if neg { -coef.clone() } else { coef.clone() };
            out.add_term((a * i + c * j, b * i + d * j), coef);
        }
        out
    }

    /// Exchanges the two variables.
    pub fn swap(&self) -> Self {
        self.substitute_monomial([(1, (0, 1)), (1, (1, 0))])
    }

    /// Exact evaluation; `None` when a negative power of zero is required.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * rpow(x, a)? * rpow(y, b)?;
        }
        Some(acc)
    }

    /// Value at x = `q` (nonzero), y = 1.
    pub fn eval_int(&self, q: i64) -> BigRational {
        let one = BigRational::from_integer(BigInt::from(1));
        self.eval(&BigRational::from_integer(BigInt::from(q)), &one).expect("nonzero point")
    }

    /// Divides every exponent of the given variable (0 or 1) by two.
    pub fn halve_exponents(&self, slot: usize) -> Result<Self, ExactError> {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            let e = if slot == 0 { a } else { b };
            if e % 2 != 0 {
                return Err(ExactError::OddParity);
            }
            let m = if slot == 0 { (a / 2, b) } else { (a, b / 2) };
            out.insert(m, c.clone());
        }
        Ok(Self { terms: out })
    }

    /// Coefficients of a polynomial in the first variable, lowest degree
    /// first; `None` if the second variable occurs or an exponent is
    /// negative.
    pub fn univariate_coeffs(&self) -> Option<Vec<BigRational>> {
        if self.terms.keys().any(|&(a, b)| a < 0 || b != 0) {
            return None;
        }
        let deg = self.terms.keys().map(|m| m.0).max().unwrap_or(-1);
        let mut out = vec![BigRational::zero(); (deg + 1) as usize];
        for (&(a, _), c) in &self.terms {
            out[a as usize] = c.clone();
        }
        Some(out)
    }

    /// Plain-text rendering with the given variable names.
    pub fn to_text(&self, names: [&str; 2]) -> String {
        render(self, names, false)
    }

    /// LaTeX rendering with the given variable names.
    pub fn to_latex(&self, names: [&str; 2]) -> String {
        render(self, names, true)
    }

    /// Parses the plain-text format produced by [`LaurentPoly2::to_text`].
    pub fn parse(s: &str, names: [&str; 2]) -> Result<Self, ExactError> {
        Parser { s: s.as_bytes(), pos: 0, names }.parse_poly()
    }
}

fn rpow(x: &BigRational, e: i32) -> Option<BigRational> {
    if e >= 0 {
        Some(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        None
    } else {
        Some(num_traits::pow(x.recip(), (-e) as usize))
    }
}

fn render(p: &LaurentPoly2, names: [&str; 2], latex: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (&(a, b), c)) in p.terms.iter().rev().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        for (e, name) in [(a, names[0]), (b, names[1])] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ if latex => factors.push(format!("{name}^{{{e}}}")),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        let coef = if abs.is_one() && !factors.is_empty() {
            None
        } else if abs.is_integer() {
            Some(abs.numer().to_string())
        } else if latex {
            Some(format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()))
        } else {
            Some(format!("{}/{}", abs.numer(), abs.denom()))
        };
        let sep = if latex { " " } else { "*" };
        let mut pieces = Vec::new();
        if let Some(c) = coef {
            pieces.push(c);
        }
        pieces.extend(factors);
        out.push_str(&pieces.join(sep));
    }
    out
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(["z", "w"]))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    names: [&'a str; 2],
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ExactError {
        ExactError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt, ExactError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<BigInt>().map_err(|_| self.err("expected integer"))
    }

    fn parse_poly(&mut self) -> Result<LaurentPoly2, ExactError> {
        let mut p = LaurentPoly2::zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                None if !first => break,
                None => return Err(self.err("empty input")),
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'+') if !first => {
                    self.pos += 1;
                    false
                }
                Some(_) if first => false,
                Some(_) => return Err(self.err("expected + or -")),
            };
            first = false;
            let (m, c) = self.parse_term()?;
            p.add_term(m, if neg { -c } else { c });
        }
        Ok(p)
    }

    fn parse_term(&mut self) -> Result<(Monomial, BigRational), ExactError> {
        let mut coef = BigRational::one();
        let mut exps = [0i32; 2];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    let d = if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        BigInt::one()
                    };
                    if d.is_zero() {
                        return Err(ExactError::ZeroDenominator);
                    }
                    coef *= BigRational::new(n, d);
                }
                Some(_) => {
                    let rest = &self.s[self.pos..];
                    let slot = (0..2)
                        .find(|&i| rest.starts_with(self.names[i].as_bytes()))
                        .ok_or_else(|| self.err("unknown symbol"))?;
                    self.pos += self.names[slot].len();
                    let e = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let e = self.integer()?;
                        i32::try_from(e).map_err(|_| self.err("exponent out of range"))?
                    } else {
                        1
                    };
                    exps[slot] += e;
                }
                None => return Err(self.err("expected term")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(((exps[0], exps[1]), coef))
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly2> for LaurentPoly2 {
    fn add_assign(&mut self, rhs: &LaurentPoly2) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly2 {
            type Output = LaurentPoly2;
            fn $m(self, rhs: LaurentPoly2) -> LaurentPoly2 {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> LaurentPoly2 {
        LaurentPoly2::parse(s, ["q", "t"]).unwrap()
    }

    #[test]
    fn text_round_trip() {
        let cases = ["q^2 - 2*q + 1", "3/2*t^2 - q^-1", "q*t^-3 - 7", "0", "1/3"];
        for c in cases {
            assert_eq!(q(c).to_text(["q", "t"]), c);
        }
        assert_eq!(q("2*q*q*3"), q("6*q^2"));
    }

    #[test]
    fn latex_rendering() {
        assert_eq!(q("q^2 - 1/2*q*t").to_latex(["q", "t"]), "q^{2} - \\frac{1}{2} q t");
    }

    #[test]
    fn substitution_and_halving() {
        // (z - w)^2 with z -> u^-1, w -> u, then u^2 -> q
        let f = q("q - t").pow(2);
        let g = f.substitute_monomial([(1, (-1, 0)), (1, (1, 0))]);
        assert_eq!(g, q("q^-2 - 2 + q^2"));
        assert_eq!(g.halve_exponents(0).unwrap(), q("q^-1 - 2 + q"));
        assert!(q("q + 1").halve_exponents(0).is_err());
    }

    #[test]
    fn evaluation() {
        let f = q("q^2 - 3*q^-1");
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(f.eval(&two, &two).unwrap(), BigRational::new(5.into(), 2.into()));
        assert!(f.eval(&BigRational::zero(), &two).is_none());
    }
}
