//! Exact arithmetic in the ring `A = Z[v, v^-1]` of integer Laurent
//! polynomials, together with the split `A = A_{<0} ⊕ A_{>=0}` used for
//! reduction modulo negative-degree parts.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An integer Laurent polynomial in the indeterminate `v`.
///
/// Terms are kept sorted by ascending exponent and never store a zero
/// coefficient, so structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: vec![(0, BigInt::from(c))],
        }
    }

    /// The monomial `v^k`.
    pub fn v_pow(k: i64) -> Self {
        LaurentPoly {
            terms: vec![(k, BigInt::one())],
        }
    }

    /// The monomial `c * v^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: vec![(k, BigInt::from(c))],
        }
    }

    /// `v^L - v^-L`, the coefficient appearing in the quadratic relation
    /// `T_s^2 = T_e + (v^L - v^-L) T_s`. Zero when `L = 0`.
    pub fn xi(weight: i64) -> Self {
        if weight == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: vec![(-weight, -BigInt::one()), (weight, BigInt::one())],
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Highest exponent with nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (k, c.clone())),
        }
    }

    /// `self += scale * other`, single merge pass.
    pub fn add_scaled(&mut self, scale: &LaurentPoly, other: &LaurentPoly) {
        if scale.is_one() {
            *self = merge(&self.terms, &other.terms, false);
            return;
        }
        let prod = scale * other;
        *self = merge(&self.terms, &prod.terms, false);
    }

    /// Substitutes `v -> v^-1`, negating every exponent.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<(i64, BigInt)> =
            self.terms.iter().map(|(k, c)| (-k, c.clone())).collect();
        terms.reverse();
        LaurentPoly { terms }
    }

    /// Splits into `(neg, nonneg)`: the parts supported on exponents `< 0`
    /// and `>= 0`. The two parts sum back to the input.
    pub fn split(&self) -> (LaurentPoly, LaurentPoly) {
        let cut = self.terms.partition_point(|t| t.0 < 0);
        (
            LaurentPoly {
                terms: self.terms[..cut].to_vec(),
            },
            LaurentPoly {
                terms: self.terms[cut..].to_vec(),
            },
        )
    }

    /// True when every exponent is negative, i.e. the value lies in
    /// `A_{<0} = v^-1 Z[v^-1]`.
    pub fn is_strictly_negative(&self) -> bool {
        self.terms.last().map_or(true, |t| t.0 < 0)
    }

    /// The unique bar-invariant `m` with `self - m` supported on negative
    /// exponents: mirrors every nonnegative-exponent term.
    pub fn bar_invariant_completion(&self) -> LaurentPoly {
        let (_, nonneg) = self.split();
        let mut m = nonneg.clone();
        for (k, c) in nonneg.iter() {
            if k > 0 {
                m.add_term(-k, c);
            }
        }
        m
    }

    /// Canonical textual form: terms by decreasing exponent, e.g. `v^2 - v^-2`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.magnitude();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_one = mag.is_one();
            match (*k, coeff_one) {
                (0, _) => out.push_str(&mag.to_string()),
                (1, true) => out.push('v'),
                (1, false) => {
                    out.push_str(&mag.to_string());
                    out.push_str("*v");
                }
                (_, true) => out.push_str(&format!("v^{}", k)),
                (_, false) => out.push_str(&format!("{}*v^{}", mag, k)),
            }
        }
        out
    }

    /// Parses the grammar emitted by [`to_text`]: `coeff*v^exp` terms joined
    /// by `+`/`-`, exponent omitted when 0 or 1.
    pub fn parse(input: &str) -> Result<Self, String> {
        let s = input.trim();
        if s.is_empty() {
            return Err("empty polynomial".into());
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut p = LaurentPoly::zero();
        let mut rest = s;
        let mut sign = 1i64;
        // leading sign
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            let (term, tail) = split_term(rest);
            let (k, c) = parse_term(term.trim())?;
            p.add_term(k, &(BigInt::from(sign) * c));
            match tail {
                None => break,
                Some((next_sign, t)) => {
                    sign = next_sign;
                    rest = t.trim_start();
                }
            }
        }
        Ok(p)
    }
}

fn split_term(s: &str) -> (&str, Option<(i64, &str)>) {
    // find the next top-level + or - (a '-' directly after '^' belongs to an exponent)
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b == b'+' || b == b'-' {
            let prev = s[..i].trim_end().chars().last();
            if !matches!(prev, Some('^') | None) {
                let sign = if b == b'+' { 1 } else { -1 };
                return (&s[..i], Some((sign, &s[i + 1..])));
            }
        }
        i += 1;
    }
    (s, None)
}

fn parse_term(t: &str) -> Result<(i64, BigInt), String> {
    if t.is_empty() {
        return Err("empty term".into());
    }
    let (coeff_str, v_part) = match t.find('v') {
        None => (t, None),
        Some(i) => (&t[..i], Some(&t[i + 1..])),
    };
    let coeff_str = coeff_str.trim().trim_end_matches('*').trim();
    let coeff: BigInt = if coeff_str.is_empty() {
        BigInt::one()
    } else {
        coeff_str
            .parse()
            .map_err(|_| format!("bad coefficient {coeff_str:?}"))?
    };
    let exp = match v_part {
        None => 0,
        Some(rest) => {
            let rest = rest.trim();
            if rest.is_empty() {
                1
            } else {
                let e = rest
                    .strip_prefix('^')
                    .ok_or_else(|| format!("expected ^ in term {t:?}"))?;
                let e = e.trim().trim_start_matches('(').trim_end_matches(')');
                e.parse::<i64>().map_err(|_| format!("bad exponent {e:?}"))?
            }
        }
    };
    Ok((exp, coeff))
}

fn merge(a: &[(i64, BigInt)], b: &[(i64, BigInt)], subtract: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let (k, c) = &b[j];
                out.push((*k, if subtract { -c } else { c.clone() }));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if subtract {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (k, c) in &b[j..] {
        out.push((*k, if subtract { -c } else { c.clone() }));
    }
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = merge(&self.terms, &rhs.terms, false);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // convolution into a dense window, exact
        let lo = self.valuation().unwrap() + rhs.valuation().unwrap();
        let hi = self.degree().unwrap() + rhs.degree().unwrap();
        let width = usize::try_from(hi - lo + 1).expect("exponent overflow in product");
        let mut dense = vec![BigInt::zero(); width];
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let k = ka.checked_add(*kb).expect("exponent overflow in product");
                dense[(k - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn add_cancels() {
        // (v + 1) + (-1 + v^-1) = v + v^-1
        assert_eq!(&p("v + 1") + &p("-1 + v^-1"), p("v + v^-1"));
        // additive identity
        assert_eq!(&p("3*v^2 - v") + &LaurentPoly::zero(), p("3*v^2 - v"));
        // inverses
        assert!((&p("v^2 - v^-2") + &p("v^-2 - v^2")).is_zero());
    }

    #[test]
    fn mul_basics() {
        assert_eq!(&p("v + v^-1") * &p("v - v^-1"), p("v^2 - v^-2"));
        assert_eq!(&p("v^3 - 2*v^-1") * &LaurentPoly::one(), p("v^3 - 2*v^-1"));
        assert_eq!(&p("v^-1") * &p("v^-1"), p("v^-2"));
    }

    #[test]
    fn bar_involution() {
        assert_eq!(p("v^3 - 2*v^-1").bar(), p("v^-3 - 2*v"));
        assert_eq!(p("5").bar(), p("5"));
        let q = p("7*v^4 - v + 2 - v^-5");
        assert_eq!(q.bar().bar(), q);
    }

    #[test]
    fn split_parts() {
        let (neg, nonneg) = p("v^2 + 3 + v^-1").split();
        assert_eq!(neg, p("v^-1"));
        assert_eq!(nonneg, p("v^2 + 3"));
        let (neg, nonneg) = p("v^-4").split();
        assert_eq!(neg, p("v^-4"));
        assert!(nonneg.is_zero());
        let (neg, nonneg) = LaurentPoly::zero().split();
        assert!(neg.is_zero() && nonneg.is_zero());
    }

    #[test]
    fn completion_is_bar_invariant() {
        let q = p("2*v^3 + v - 4 + v^-2");
        let m = q.bar_invariant_completion();
        assert_eq!(m, m.bar());
        assert!((&q - &m).is_strictly_negative());
    }

    #[test]
    fn text_roundtrip() {
        for s in ["v^2 - v^-2", "1", "-v", "5 + 2*v^-3", "v + v^-1", "0"] {
            assert_eq!(p(s).to_text(), s);
        }
    }

    #[test]
    fn xi_zero_weight_degenerates() {
        assert!(LaurentPoly::xi(0).is_zero());
        assert_eq!(LaurentPoly::xi(2), p("v^2 - v^-2"));
    }
}
