//! Polynomials in `p` and `q` with exact rational coefficients.
//!
//! `p` counts handles and `q` counts bubbles. Text form is
//! `c`, `c*p^a`, `c*q^b` or `c*p^a*q^b` per term, terms joined by ` + ` in
//! decreasing `(a, b)` order; unit factors and exponents are left out, so
//! `½q + ½` prints as `1/2*q + 1/2` and `pq` as `p*q`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::cmp::Reverse;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Coefficient {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    /// `p^a q^b`.
    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(Rational::one(), a, b)
    }

    /// `c p^a q^b`.
    pub fn term(c: Rational, a: u32, b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// Nonzero terms `((a, b), c)` in increasing `(a, b)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Rational)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn coefficient(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&(a, b)).copied().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, r: Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&k, &c)| (k, c * r)).collect() }
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }
}

pub fn coeff_add(x: &Coefficient, y: &Coefficient) -> Coefficient {
    x + y
}

pub fn coeff_mul(x: &Coefficient, y: &Coefficient) -> Coefficient {
    x * y
}

pub fn coeff_scale(x: &Coefficient, r: Rational) -> Coefficient {
    x.scale(r)
}

pub fn monomial(a: u32, b: u32) -> Coefficient {
    Coefficient::monomial(a, b)
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        for (&k, &c) in &rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;

    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;

    fn neg(self) -> Coefficient {
        self.scale(-Rational::one())
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;

    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &-rhs
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;

    fn mul(self, rhs: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero();
        for (&(a1, b1), &c1) in &self.terms {
            for (&(a2, b2), &c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{e}"),
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms: alloc::vec::Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(k, _)| Reverse(**k));
        for (i, (&(a, b), c)) in terms.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let unit = (a, b) == (0, 0);
            if unit || !c.abs().is_one() {
                write!(f, "{c}")?;
                if !unit {
                    f.write_str("*")?;
                }
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            write_power(f, 'p', a)?;
            if a > 0 && b > 0 {
                f.write_str("*")?;
            }
            write_power(f, 'q', b)?;
        }
        Ok(())
    }
}

impl FromStr for Coefficient {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::CoefficientParse(alloc::format!("{why} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty coefficient"));
        }
        let mut out = Coefficient::zero();
        for term in compact.split('+') {
            let (negative, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term),
            };
            let mut c = Rational::one();
            let (mut a, mut b) = (0u32, 0u32);
            for (i, factor) in body.split('*').enumerate() {
                let (var, exp) = match factor.split_once('^') {
                    Some((v, e)) => (v, Some(e.parse::<u32>().map_err(|_| bad("bad exponent"))?)),
                    None => (factor, None),
                };
                match var {
                    "p" => a += exp.unwrap_or(1),
                    "q" => b += exp.unwrap_or(1),
                    _ if i == 0 && exp.is_none() => c = parse_rational(var).ok_or_else(|| bad("bad number"))?,
                    _ => return Err(bad("bad factor")),
                }
            }
            if negative {
                c = -c;
            }
            out.add_term((a, b), c);
        }
        Ok(out)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    match s.split_once('/') {
        Some((n, d)) if digits(n) && digits(d) => {
            let (n, d): (i64, i64) = (n.parse().ok()?, d.parse().ok()?);
            (d != 0).then(|| Rational::new(n, d))
        }
        None if digits(s) => Some(Rational::from_integer(s.parse().ok()?)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn arithmetic_examples() {
        let p = monomial(1, 0);
        let q = monomial(0, 1);
        assert_eq!(coeff_add(&p, &p), Coefficient::term(r(2, 1), 1, 0));
        assert_eq!(&(&p + &q) * &q, &monomial(1, 1) + &monomial(0, 2));
        assert_eq!(coeff_scale(&q, r(1, 2)), Coefficient::term(r(1, 2), 0, 1));
        assert!((&p - &p).is_zero());
        assert!(coeff_mul(&p, &Coefficient::zero()).is_zero());
        assert!(Coefficient::one().is_one());
    }

    #[test]
    fn text_form() {
        let half = r(1, 2);
        let c = &Coefficient::term(half, 0, 1) + &Coefficient::constant(half);
        assert_eq!(c.to_string(), "1/2*q + 1/2");
        assert_eq!(monomial(1, 0).to_string(), "p");
        assert_eq!(monomial(1, 1).to_string(), "p*q");
        assert_eq!(monomial(0, 2).to_string(), "q^2");
        assert_eq!(monomial(3, 2).to_string(), "p^3*q^2");
        assert_eq!(Coefficient::one().to_string(), "1");
        assert_eq!(Coefficient::zero().to_string(), "0");
        assert_eq!(Coefficient::term(r(-1, 1), 1, 0).to_string(), "-p");
        assert_eq!(Coefficient::term(r(-3, 4), 0, 0).to_string(), "-3/4");
        assert_eq!(Coefficient::term(r(2, 1), 2, 0).to_string(), "2*p^2");
    }

    #[test]
    fn parse_accepts_long_forms() {
        let c: Coefficient = "1*p^1*q^0 + 1/2".parse().unwrap();
        assert_eq!(c.to_string(), "p + 1/2");
        let c: Coefficient = "q*p".parse().unwrap();
        assert_eq!(c, monomial(1, 1));
        assert!("0".parse::<Coefficient>().unwrap().is_zero());
        for bad in ["", "x", "1/0", "p^", "2*3", "1/2/3", "p^-1", "+"] {
            assert!(bad.parse::<Coefficient>().is_err(), "{bad}");
        }
    }

    fn coefficient() -> impl Strategy<Value = Coefficient> {
        prop::collection::vec((0u32..3, 0u32..3, -6i64..7, 1i64..5), 0..4).prop_map(|terms| {
            let mut c = Coefficient::zero();
            for (a, b, n, d) in terms {
                c += &Coefficient::term(r(n, d), a, b);
            }
            c
        })
    }

    proptest! {
        #[test]
        fn ring_laws(x in coefficient(), y in coefficient(), z in coefficient()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &Coefficient::one(), x.clone());
            prop_assert!(x.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn text_round_trip(x in coefficient()) {
            prop_assert_eq!(x.to_string().parse::<Coefficient>().unwrap(), x);
        }
    }
}
