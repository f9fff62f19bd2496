//! Local degree orderings and the block ordering on `s`- and `x`-monomials.
//!
//! Both blocks carry strictly negative rational weights, so 1 is the largest
//! monomial of each block and division behaves like power-series division.
//! The block ordering compares the s-part first; within a block the weighted
//! degree decides and a configurable tie-break refines it to a total order.

use std::cmp::Ordering;

use num::{BigInt, BigRational, FromPrimitive, Integer, One, Signed, ToPrimitive};

use crate::{Error, Result};

use super::Monomial;

/// Tie-break rule inside one block, applied between monomials of equal
/// weighted degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Earlier variable with larger exponent wins (so `x > y`).
    #[default]
    Lex,
    /// Later variable with larger exponent loses (reverse lexicographic).
    RevLex,
}

/// Variable layout, weights and tie-break rule defining the block ordering
/// `< = (<_s, <_x)` and the weighted degree `deg = deg_s + deg_x`.
#[derive(Debug, Clone)]
pub struct OrderingSpec {
    x_vars: Vec<String>,
    s_vars: Vec<String>,
    x_weights: Vec<BigRational>,
    s_weights: Vec<BigRational>,
    tie_break: TieBreak,
    /// Common positive denominator clearing all weights to integers.
    scale: BigInt,
    x_wscaled: Vec<i128>,
    s_wscaled: Vec<i128>,
}

/// Precomputed sort key realising the block ordering; the derived
/// lexicographic `Ord` on the fields agrees with `OrderingSpec::cmp`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BlockKey {
    pub sdeg: i128,
    pub skey: Vec<i64>,
    pub xdeg: i128,
    pub xkey: Vec<i64>,
}

fn validate_var(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok_first = chars.next().is_some_and(|c| c.is_ascii_lowercase());
    let ok_rest = chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_');
    if ok_first && ok_rest {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("invalid variable name {name:?}")))
    }
}

fn scale_weights(weights: &[BigRational], scale: &BigInt) -> Result<Vec<i128>> {
    weights
        .iter()
        .map(|w| {
            let scaled = w * BigRational::from_integer(scale.clone());
            debug_assert!(scaled.denom().is_one());
            scaled.numer().to_i128().ok_or_else(|| {
                Error::InvalidWeights("weight magnitude too large to scale".into())
            })
        })
        .collect()
}

impl OrderingSpec {
    pub fn new(
        x_vars: Vec<String>,
        x_weights: Vec<BigRational>,
        s_vars: Vec<String>,
        s_weights: Vec<BigRational>,
        tie_break: TieBreak,
    ) -> Result<Self> {
        if x_vars.is_empty() {
            return Err(Error::InvalidInput("no x-variables".into()));
        }
        if x_vars.len() != x_weights.len() || s_vars.len() != s_weights.len() {
            return Err(Error::DimensionMismatch(
                "variable and weight lists differ in length".into(),
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        for name in x_vars.iter().chain(&s_vars) {
            validate_var(name)?;
            if !seen.insert(name.clone()) {
                return Err(Error::InvalidInput(format!("duplicate variable {name:?}")));
            }
        }
        for w in x_weights.iter().chain(&s_weights) {
            if !w.is_negative() {
                return Err(Error::InvalidWeights(format!(
                    "weight {} is not strictly negative",
                    super::rational::render(w)
                )));
            }
        }
        let mut scale = BigInt::one();
        for w in x_weights.iter().chain(&s_weights) {
            scale = scale.lcm(w.denom());
        }
        let x_wscaled = scale_weights(&x_weights, &scale)?;
        let s_wscaled = scale_weights(&s_weights, &scale)?;
        Ok(Self {
            x_vars,
            s_vars,
            x_weights,
            s_weights,
            tie_break,
            scale,
            x_wscaled,
            s_wscaled,
        })
    }

    /// An ordering on x-variables only (empty s-block).
    pub fn x_only(
        x_vars: Vec<String>,
        x_weights: Vec<BigRational>,
        tie_break: TieBreak,
    ) -> Result<Self> {
        Self::new(x_vars, x_weights, Vec::new(), Vec::new(), tie_break)
    }

    /// Weight −1 on every variable, lexicographic tie-break.
    pub fn standard(x_vars: &[&str]) -> Result<Self> {
        let minus_one = -BigRational::one();
        Self::x_only(
            x_vars.iter().map(|v| v.to_string()).collect(),
            vec![minus_one; x_vars.len()],
            TieBreak::Lex,
        )
    }

    /// Extends an x-only ordering with an s-block.
    pub fn with_s_block(&self, s_vars: Vec<String>, s_weights: Vec<BigRational>) -> Result<Self> {
        Self::new(
            self.x_vars.clone(),
            self.x_weights.clone(),
            s_vars,
            s_weights,
            self.tie_break,
        )
    }

    pub fn n_x(&self) -> usize {
        self.x_vars.len()
    }

    pub fn n_s(&self) -> usize {
        self.s_vars.len()
    }

    pub fn x_vars(&self) -> &[String] {
        &self.x_vars
    }

    pub fn s_vars(&self) -> &[String] {
        &self.s_vars
    }

    pub fn x_weights(&self) -> &[BigRational] {
        &self.x_weights
    }

    pub fn s_weights(&self) -> &[BigRational] {
        &self.s_weights
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    pub fn check_dims(&self, m: &Monomial) -> Result<()> {
        if m.n_s() != self.n_s() || m.n_x() != self.n_x() {
            return Err(Error::DimensionMismatch(format!(
                "monomial has layout ({}, {}), ordering expects ({}, {})",
                m.n_s(),
                m.n_x(),
                self.n_s(),
                self.n_x()
            )));
        }
        Ok(())
    }

    fn tie_key(&self, exps: &[u32]) -> Vec<i64> {
        match self.tie_break {
            TieBreak::Lex => exps.iter().map(|&e| e as i64).collect(),
            TieBreak::RevLex => exps.iter().rev().map(|&e| -(e as i64)).collect(),
        }
    }

    pub fn deg_x_scaled(&self, x_exps: &[u32]) -> i128 {
        x_exps
            .iter()
            .zip(&self.x_wscaled)
            .map(|(&e, &w)| e as i128 * w)
            .sum()
    }

    pub fn deg_s_scaled(&self, s_exps: &[u32]) -> i128 {
        s_exps
            .iter()
            .zip(&self.s_wscaled)
            .map(|(&e, &w)| e as i128 * w)
            .sum()
    }

    pub fn deg_scaled(&self, m: &Monomial) -> i128 {
        self.deg_s_scaled(m.s_exps()) + self.deg_x_scaled(m.x_exps())
    }

    /// Converts an internal scaled degree back to the exact rational degree.
    pub fn unscale(&self, scaled: i128) -> BigRational {
        BigRational::new(BigInt::from_i128(scaled).unwrap(), self.scale.clone())
    }

    /// Scales an exact rational degree to the internal integer scale,
    /// rounding is never needed because `scale` clears all denominators of
    /// values built from the weights; other values are compared exactly.
    pub fn scale_degree(&self, deg: &BigRational) -> Option<i128> {
        let scaled = deg * BigRational::from_integer(self.scale.clone());
        if scaled.denom().is_one() {
            scaled.numer().to_i128()
        } else {
            None
        }
    }

    /// Weighted degree `deg = deg_s + deg_x` of a monomial.
    pub fn deg(&self, m: &Monomial) -> BigRational {
        self.unscale(self.deg_scaled(m))
    }

    pub fn deg_x(&self, m: &Monomial) -> BigRational {
        self.unscale(self.deg_x_scaled(m.x_exps()))
    }

    pub fn deg_s(&self, m: &Monomial) -> BigRational {
        self.unscale(self.deg_s_scaled(m.s_exps()))
    }

    /// Sort key realising the block ordering.
    pub fn block_key(&self, m: &Monomial) -> BlockKey {
        BlockKey {
            sdeg: self.deg_s_scaled(m.s_exps()),
            skey: self.tie_key(m.s_exps()),
            xdeg: self.deg_x_scaled(m.x_exps()),
            xkey: self.tie_key(m.x_exps()),
        }
    }

    /// Block-order comparison without dimension checks.
    pub fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_s_block(a.s_exps(), b.s_exps())
            .then_with(|| self.cmp_x_block(a.x_exps(), b.x_exps()))
    }

    /// Comparison within the s-block only (`<_s` on projected exponents).
    pub fn cmp_s_block(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.deg_s_scaled(a)
            .cmp(&self.deg_s_scaled(b))
            .then_with(|| self.tie_key(a).cmp(&self.tie_key(b)))
    }

    /// Comparison within the x-block only (`<_x`).
    pub fn cmp_x_block(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.deg_x_scaled(a)
            .cmp(&self.deg_x_scaled(b))
            .then_with(|| self.tie_key(a).cmp(&self.tie_key(b)))
    }
}

/// Total block-order comparison of two monomials: the s-block is compared
/// first; within each block the weighted degree decides (more negative is
/// smaller) and the tie-break refines.
pub fn monomial_cmp(a: &Monomial, b: &Monomial, ord: &OrderingSpec) -> Result<Ordering> {
    ord.check_dims(a)?;
    ord.check_dims(b)?;
    Ok(ord.cmp_unchecked(a, b))
}
