//! The ring `A = Z[u, u^-1]` of integer Laurent polynomials in one variable,
//! with the bar involution `u -> u^-1` and the balanced quantum integers
//! `[k] = u^{k-1} + u^{k-3} + ... + u^{1-k}`.
//!
//! Elements are stored sparsely as exponent -> coefficient maps with no zero
//! coefficients, so structural equality is semantic equality.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("quantum integer [{0}] requires a positive index")]
    NonPositiveQuantumInteger(i64),
    #[error("cannot parse {0:?} as a Laurent polynomial in u")]
    Parse(String),
}

/// An element of `Z[u, u^-1]`, kept in normal form (no zero coefficients).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Laurent {
    terms: BTreeMap<i32, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Laurent::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Laurent::term(c.into(), 0)
    }

    /// The monomial `c * u^k`.
    pub fn term(c: BigInt, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Laurent { terms }
    }

    /// The monomial `u^k`.
    pub fn u_pow(k: i32) -> Self {
        Laurent::term(BigInt::one(), k)
    }

    /// The balanced quantum integer `[k] = (u^k - u^-k)/(u - u^-1)` for `k >= 1`.
    pub fn u_integer(k: i64) -> Result<Self, LaurentError> {
        if k <= 0 {
            return Err(LaurentError::NonPositiveQuantumInteger(k));
        }
        let mut terms = BTreeMap::new();
        let mut e = (k - 1) as i32;
        for _ in 0..k {
            terms.insert(e, BigInt::one());
            e -= 2;
        }
        Ok(Laurent { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// The coefficient of `u^k`.
    pub fn coeff(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Iterate over `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// The bar involution `u -> u^-1`.
    pub fn bar(&self) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// Whether every exponent is `<= 0` (`strict`: `< 0`), i.e. membership in
    /// `Z[u^-1]` respectively `u^-1 Z[u^-1]`.
    pub fn in_lower_lattice(&self, strict: bool) -> bool {
        match self.max_exp() {
            None => true,
            Some(m) => {
                if strict {
                    m < 0
                } else {
                    m <= 0
                }
            }
        }
    }

    /// The part of the polynomial with strictly negative exponents.
    pub fn lower_part(&self) -> Self {
        Laurent {
            terms: self
                .terms
                .range(..0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Whether `bar(f) = -f`; such `f` have zero constant term.
    pub fn is_bar_antisymmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| self.coeff(-k) == -c.clone())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    fn add_assign_term(&mut self, k: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add_assign(&mut self, other: &Laurent) {
        for (k, c) in &other.terms {
            self.add_assign_term(*k, c);
        }
    }

    pub fn sub_assign(&mut self, other: &Laurent) {
        for (k, c) in &other.terms {
            self.add_assign_term(*k, &(-c));
        }
    }

    /// `self += f * g`, avoiding an intermediate allocation per term pair.
    pub fn add_mul_assign(&mut self, f: &Laurent, g: &Laurent) {
        for (kf, cf) in &f.terms {
            for (kg, cg) in &g.terms {
                self.add_assign_term(kf + kg, &(cf * cg));
            }
        }
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::constant(c)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        out.add_mul_assign(self, rhs);
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let neg = c < &BigInt::zero();
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = *k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Laurent {
    type Err = LaurentError;

    /// Parse the rendering produced by `Display`, e.g. `"u^2 + 1 - 3u^-1"`.
    /// Whitespace around `+`/`-` is optional and `*` may separate a
    /// coefficient from `u`.
    fn from_str(s: &str) -> Result<Self, LaurentError> {
        let err = || LaurentError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Laurent::zero();
        let bytes = compact.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            }
            let digit_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff: BigInt = if digit_start == i {
                BigInt::one()
            } else {
                compact[digit_start..i].parse().map_err(|_| err())?
            };
            if sign < 0 {
                coeff = -coeff;
            }
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp = 0i32;
            if i < bytes.len() && bytes[i] == b'u' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let exp_start = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if exp_start == i {
                        return Err(err());
                    }
                    exp = compact[exp_start..i].parse().map_err(|_| err())?;
                }
            } else if digit_start == i {
                return Err(err());
            }
            out.add_assign_term(exp, &coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn normal_form_drops_zeros() {
        let f = &l("u + 1") - &l("u");
        assert_eq!(f, Laurent::one());
        assert!((&f - &f).is_zero());
        assert_eq!(Laurent::term(BigInt::zero(), 5), Laurent::zero());
    }

    #[test]
    fn quantum_integer_values() {
        assert_eq!(Laurent::u_integer(1).unwrap(), Laurent::one());
        assert_eq!(Laurent::u_integer(2).unwrap(), l("u + u^-1"));
        assert_eq!(Laurent::u_integer(4).unwrap(), l("u^3 + u + u^-1 + u^-3"));
        assert!(Laurent::u_integer(0).is_err());
        assert!(Laurent::u_integer(-3).is_err());
    }

    #[test]
    fn quantum_integers_satisfy_clebsch_recursion() {
        let two = Laurent::u_integer(2).unwrap();
        for k in 2..20 {
            let prod = &two * &Laurent::u_integer(k).unwrap();
            let sum = &Laurent::u_integer(k + 1).unwrap() + &Laurent::u_integer(k - 1).unwrap();
            assert_eq!(prod, sum, "[2][{k}] != [{}] + [{}]", k + 1, k - 1);
        }
    }

    #[test]
    fn quantum_integers_are_bar_invariant() {
        for k in 1..=20 {
            let f = Laurent::u_integer(k).unwrap();
            assert_eq!(f.bar(), f);
            assert_eq!(f.eval_at_one(), BigInt::from(k));
        }
    }

    #[test]
    fn bar_is_a_ring_involution() {
        let f = l("2u^3 - u + 5 - 7u^-2");
        let g = l("u^2 + 3u^-1");
        assert_eq!(f.bar().bar(), f);
        assert_eq!((&f * &g).bar(), &f.bar() * &g.bar());
        assert_eq!((&f + &g).bar(), &f.bar() + &g.bar());
    }

    #[test]
    fn lower_lattice_membership() {
        assert!(l("1 + u^-3").in_lower_lattice(false));
        assert!(!l("1 + u^-3").in_lower_lattice(true));
        assert!(l("u^-1 + 4u^-2").in_lower_lattice(true));
        assert!(!l("u + u^-1").in_lower_lattice(false));
        assert!(Laurent::zero().in_lower_lattice(true));
        assert_eq!(l("u^2 + 3 - 2u^-1 + u^-4").lower_part(), l("-2u^-1 + u^-4"));
    }

    #[test]
    fn antisymmetric_detection() {
        assert!(l("u^-2 - u^2 + 3u^-1 - 3u").is_bar_antisymmetric());
        assert!(Laurent::zero().is_bar_antisymmetric());
        assert!(!l("1 + u^-1 - u").is_bar_antisymmetric());
        assert!(!l("u^-1").is_bar_antisymmetric());
    }

    #[test]
    fn display_round_trip() {
        for s in ["u^2 + 1 - 3u^-1", "-u + 2", "0", "5", "u", "-4u^-7", "u^3 - u^-3"] {
            let f = l(s);
            assert_eq!(format!("{f}"), s);
            assert_eq!(l(&format!("{f}")), f);
        }
        assert_eq!(l("3*u^-1+2"), l("2 + 3u^-1"));
        assert!("".parse::<Laurent>().is_err());
        assert!("u^".parse::<Laurent>().is_err());
        assert!("+".parse::<Laurent>().is_err());
    }

    #[test]
    fn mul_matches_distributed_sum() {
        let f = l("u - u^-1");
        let g = l("u^4 + u^2 + 1");
        assert_eq!(&f * &g, &l("u^5 + u^3 + u - u^-1") - &l("u^3 + u"));
        let mut acc = Laurent::zero();
        acc.add_mul_assign(&f, &g);
        assert_eq!(acc, &f * &g);
    }
}
