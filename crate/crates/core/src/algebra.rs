//! Sparse polynomials in `q` and `t` with integer coefficients.
//!
//! Coefficients are `i64`; every arithmetic step is checked and reports
//! [`Error::Overflow`] instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which variable of a [`BivariatePolynomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Q,
    T,
}

/// A polynomial `sum c * q^eq * t^et`.
///
/// Terms are kept in a `BTreeMap` keyed by `(eq, et)`, so iteration and
/// serialization are lexicographic. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.terms.insert((0, 0), 1);
        p
    }

    /// Builds a polynomial from `(eq, et, coeff)` triples, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, i64)>>(terms: I) -> Result<Self> {
        let mut p = Self::zero();
        for (eq, et, c) in terms {
            p.add_assign_term(eq, et, c)?;
        }
        Ok(p)
    }

    /// Adds `c * q^eq * t^et`, rejecting negative exponents.
    pub fn add_term(&self, eq: i64, et: i64, c: i64) -> Result<Self> {
        if eq < 0 || et < 0 {
            return Err(Error::InvalidExponent { eq, et });
        }
        let eq = u32::try_from(eq).map_err(|_| Error::InvalidExponent { eq, et })?;
        let et = u32::try_from(et).map_err(|_| Error::InvalidExponent { eq: eq as i64, et })?;
        let mut p = self.clone();
        p.add_assign_term(eq, et, c)?;
        Ok(p)
    }

    pub(crate) fn add_assign_term(&mut self, eq: u32, et: u32, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry((eq, et)).or_insert(0);
        *entry = entry.checked_add(c).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&(eq, et));
        }
        Ok(())
    }

    pub fn coeff(&self, eq: u32, et: u32) -> i64 {
        self.terms.get(&(eq, et)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic `(eq, et)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().map(|(&(eq, et), &c)| (eq, et, c))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut p = self.clone();
        for (eq, et, c) in other.terms() {
            p.add_assign_term(eq, et, c)?;
        }
        Ok(p)
    }

    /// The substitution `q <-> t`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&(eq, et), &c)| ((et, eq), c)).collect(),
        }
    }

    /// Sets `which` to 1; the result only involves the other variable.
    pub fn specialize(&self, which: Var) -> Result<Self> {
        let mut p = Self::zero();
        for (eq, et, c) in self.terms() {
            match which {
                Var::Q => p.add_assign_term(0, et, c)?,
                Var::T => p.add_assign_term(eq, 0, c)?,
            }
        }
        Ok(p)
    }

    /// Value at `q = t = 1`.
    pub fn coefficient_sum(&self) -> Result<i64> {
        self.terms
            .values()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("polynomial json")
    }

    /// Compact JSON text with `vars` before `terms`.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial json")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: PolyJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.vars != ["q", "t"] {
            return Err(Error::Parse(format!("unexpected vars {:?}", raw.vars)));
        }
        let mut p = Self::zero();
        for [eq, et, c] in raw.terms {
            p = p.add_term(eq, et, c)?;
        }
        Ok(p)
    }

    /// Terms in display order: `q`-exponent descending, then `t`-exponent
    /// ascending.
    fn display_order(&self) -> Vec<(u32, u32, i64)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        v
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<[i64; 3]>,
}

impl From<&BivariatePolynomial> for PolyJson {
    fn from(p: &BivariatePolynomial) -> Self {
        PolyJson {
            vars: vec!["q".into(), "t".into()],
            terms: p.terms().map(|(eq, et, c)| [eq as i64, et as i64, c]).collect(),
        }
    }
}

fn monomial(var: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (eq, et, c)) in self.display_order().into_iter().enumerate() {
            let mag = c.unsigned_abs();
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || (eq == 0 && et == 0) {
                factors.push(mag.to_string());
            }
            factors.extend(monomial("q", eq));
            factors.extend(monomial("t", et));
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(u32, u32, i64)]) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(terms.iter().copied()).unwrap()
    }

    #[test]
    fn add_term_examples() {
        let p = BivariatePolynomial::zero().add_term(2, 0, 1).unwrap();
        assert_eq!(p, poly(&[(2, 0, 1)]));
        assert!(p.add_term(2, 0, -1).unwrap().is_zero());
        let q = poly(&[(1, 0, 1)]).add_term(0, 1, 1).unwrap();
        assert_eq!(q, poly(&[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(
            BivariatePolynomial::zero().add_term(-1, 0, 1),
            Err(Error::InvalidExponent { eq: -1, et: 0 })
        );
    }

    #[test]
    fn overflow_is_detected() {
        let p = poly(&[(0, 0, i64::MAX)]);
        assert_eq!(p.add_term(0, 0, 1), Err(Error::Overflow));
    }

    #[test]
    fn swap_examples() {
        assert_eq!(poly(&[(2, 1, 3)]).swap_vars(), poly(&[(1, 2, 3)]));
        let sym = poly(&[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(sym.swap_vars(), sym);
        let c25 = poly(&[(2, 0, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(c25.swap_vars(), c25);
    }

    #[test]
    fn specialize_examples() {
        let p = poly(&[(2, 0, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(p.specialize(Var::T).unwrap(), poly(&[(2, 0, 1), (1, 0, 1), (0, 0, 1)]));
        assert_eq!(p.specialize(Var::Q).unwrap(), poly(&[(0, 2, 1), (0, 1, 1), (0, 0, 1)]));
    }

    #[test]
    fn rendering() {
        let c43 = poly(&[(3, 0, 1), (2, 1, 1), (1, 1, 1), (1, 2, 1), (0, 3, 1)]);
        assert_eq!(c43.to_string(), "q^3 + q^2*t + q*t + q*t^2 + t^3");
        assert_eq!(poly(&[(0, 0, 1)]).to_string(), "1");
        assert_eq!(poly(&[(0, 4, 2), (0, 0, 1)]).to_string(), "1 + 2*t^4");
        assert_eq!(poly(&[(1, 0, -3), (0, 0, 1)]).to_string(), "-3*q + 1");
        assert_eq!(BivariatePolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_schema() {
        let p = poly(&[(0, 1, 1), (1, 0, 2)]);
        assert_eq!(
            p.to_json_string(),
            r#"{"vars":["q","t"],"terms":[[0,1,1],[1,0,2]]}"#
        );
        let bad = serde_json::json!({"vars": ["x", "y"], "terms": []});
        assert!(BivariatePolynomial::from_json(&bad).is_err());
    }
}
