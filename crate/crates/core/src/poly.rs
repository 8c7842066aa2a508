//! Exact Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::InvariantError;

/// The exponent unit of a polynomial's variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grid {
    /// Kauffman bracket variable `A`; exponent `e` means `A^e`.
    A,
    /// Integer powers of `t`.
    T,
    /// Half-integer powers of `t`; exponent `e` means `t^(e/2)`.
    HalfT,
}

/// `Σ c_e x^e` with only nonzero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    grid: Grid,
    terms: BTreeMap<i32, i64>,
}

impl LaurentPolynomial {
    pub fn zero(grid: Grid) -> Self {
        LaurentPolynomial {
            grid,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(grid: Grid) -> Self {
        Self::monomial(grid, 0, 1)
    }

    pub fn monomial(grid: Grid, exponent: i32, coefficient: i64) -> Self {
        Self::from_terms(grid, [(exponent, coefficient)])
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(grid: Grid, terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut out = Self::zero(grid);
        for (e, c) in terms {
            out.add_term(e, c).expect("coefficient overflow");
        }
        out
    }

    fn add_term(&mut self, exponent: i32, coefficient: i64) -> Result<(), InvariantError> {
        if coefficient == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(exponent).or_insert(0);
        *slot = slot
            .checked_add(coefficient)
            .ok_or(InvariantError::Overflow)?;
        if *slot == 0 {
            self.terms.remove(&exponent);
        }
        Ok(())
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i32) -> i64 {
        self.terms.get(&exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, InvariantError> {
        assert_eq!(self.grid, rhs.grid, "adding polynomials on different grids");
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, InvariantError> {
        assert_eq!(
            self.grid, rhs.grid,
            "multiplying polynomials on different grids"
        );
        let mut out = Self::zero(self.grid);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let c = c1.checked_mul(c2).ok_or(InvariantError::Overflow)?;
                out.add_term(e1 + e2, c)?;
            }
        }
        Ok(out)
    }

    /// Multiplies by `x^k`.
    pub fn shifted(&self, k: i32) -> Self {
        LaurentPolynomial {
            grid: self.grid,
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Rewrites every exponent `e` as `f(e)` on a new grid.
    pub fn map_exponents(&self, grid: Grid, f: impl Fn(i32) -> i32) -> Self {
        Self::from_terms(grid, self.terms().map(|(e, c)| (f(e), c)))
    }

    /// `p(x^-1)`.
    pub fn inverted(&self) -> Self {
        self.map_exponents(self.grid, |e| -e)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.inverted()
    }

    /// Exact division. `None` when `divisor` does not divide `self` over
    /// the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.grid, divisor.grid);
        let (dlo, dhi) = (divisor.min_exponent()?, divisor.max_exponent()?);
        let lead = divisor.coefficient(dhi);
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.grid);
        while let Some(hi) = rem.max_exponent() {
            let lo = rem.min_exponent().expect("nonempty");
            if hi - lo < dhi - dlo {
                return None;
            }
            let c = rem.coefficient(hi);
            if c % lead != 0 {
                return None;
            }
            let q = Self::monomial(self.grid, hi - dhi, c / lead);
            rem = rem.checked_add(&-(q.checked_mul(divisor).ok()?)).ok()?;
            quotient = quotient.checked_add(&q).ok()?;
        }
        Some(quotient)
    }

    /// `p(-1)` for integer-exponent grids.
    pub fn eval_at_minus_one(&self) -> i64 {
        assert_ne!(
            self.grid,
            Grid::HalfT,
            "t^(1/2) at t = -1 is not an integer"
        );
        self.terms()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    /// Terms as `[numerator, denominator, coefficient]`, exponents in lowest
    /// terms relative to the variable (`t^(1/2)` is `[1, 2, c]`).
    pub fn to_json_terms(&self) -> Vec<[i64; 3]> {
        self.terms()
            .map(|(e, c)| match self.grid {
                Grid::HalfT if e % 2 != 0 => [e as i64, 2, c],
                Grid::HalfT => [(e / 2) as i64, 1, c],
                _ => [e as i64, 1, c],
            })
            .collect()
    }

    pub fn from_json_terms(grid: Grid, terms: &[[i64; 3]]) -> Option<Self> {
        let mut out = Self::zero(grid);
        for &[num, den, c] in terms {
            if den <= 0 {
                return None;
            }
            let scale = if grid == Grid::HalfT { 2 } else { 1 };
            if (num * scale) % den != 0 {
                return None;
            }
            let e = i32::try_from(num * scale / den).ok()?;
            out.add_term(e, c).ok()?;
        }
        Some(out)
    }

    fn exponent_text(&self, e: i32) -> String {
        match self.grid {
            Grid::HalfT if e % 2 != 0 => format!("{e}/2"),
            Grid::HalfT => format!("{}", e / 2),
            _ => format!("{e}"),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Ascending exponents, e.g. `-t^-4 + t^-3 + t^-1` or `-t^-1/2 - t^1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let var = match self.grid {
            Grid::A => "A",
            Grid::T | Grid::HalfT => "t",
        };
        for (n, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            match (n, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.unsigned_abs();
            let exp = self.exponent_text(e);
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            if exp == "1" {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{exp}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.checked_add(rhs).expect("coefficient overflow")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.checked_add(&-rhs.clone())
            .expect("coefficient overflow")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: Self) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("coefficient overflow")
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -*c;
        }
        self
    }
}
