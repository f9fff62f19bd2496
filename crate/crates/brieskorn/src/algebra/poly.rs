//! Sparse polynomials with exact rational coefficients, the working
//! representatives of s-adically truncated power series.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use crate::{Error, Result};

use super::{rational, Monomial, OrderingSpec};

/// Finitely supported association `Monomial -> coefficient`; zero
/// coefficients are never stored, so equality of polynomials is equality of
/// term maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    n_s: usize,
    n_x: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

/// Leading exponent, leading coefficient and weighted degree of a nonzero
/// polynomial under the block ordering.
#[derive(Debug, Clone)]
pub struct LeadingData {
    pub lexp: Monomial,
    pub coef: BigRational,
    pub deg: BigRational,
}

/// The `<_s`-maximal s-exponent of a polynomial together with the full slice
/// of the polynomial at that s-exponent.
#[derive(Debug, Clone)]
pub struct LeadingSData {
    pub lexp_s: Vec<u32>,
    /// The slice including its s-monomial factor.
    pub lead_s: SparsePoly,
    pub deg_s: BigRational,
}

impl SparsePoly {
    pub fn zero(n_s: usize, n_x: usize) -> Self {
        Self {
            n_s,
            n_x,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_s: usize, n_x: usize, value: BigRational) -> Self {
        let mut p = Self::zero(n_s, n_x);
        p.add_term(Monomial::one(n_s, n_x), value);
        p
    }

    pub fn one(n_s: usize, n_x: usize) -> Self {
        Self::constant(n_s, n_x, BigRational::one())
    }

    pub fn from_terms<I>(n_s: usize, n_x: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero(n_s, n_x);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// A single-term polynomial.
    pub fn term(mono: Monomial, coef: BigRational) -> Self {
        let (n_s, n_x) = (mono.n_s(), mono.n_x());
        Self::from_terms(n_s, n_x, [(mono, coef)])
    }

    pub fn n_s(&self) -> usize {
        self.n_s
    }

    pub fn n_x(&self) -> usize {
        self.n_x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `coef · mono` in place, removing the term if it cancels.
    pub fn add_term(&mut self, mono: Monomial, coef: BigRational) {
        debug_assert_eq!(mono.n_s(), self.n_s);
        debug_assert_eq!(mono.n_x(), self.n_x);
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coef;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    /// Adds `coef · mono · other` in place.
    pub fn add_term_mul(&mut self, mono: &Monomial, coef: &BigRational, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(mono.mul(m), coef * c);
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n_s, self.n_x);
        }
        Self {
            n_s: self.n_s,
            n_x: self.n_x,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, coef: &BigRational) -> Self {
        if coef.is_zero() {
            return Self::zero(self.n_s, self.n_x);
        }
        Self {
            n_s: self.n_s,
            n_x: self.n_x,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (mono.mul(m), coef * c))
                .collect(),
        }
    }

    /// Exact partial derivative by `x_i`.
    pub fn partial_x(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n_s, self.n_x);
        for (m, c) in &self.terms {
            let e = m.x_exps()[i];
            if e == 0 {
                continue;
            }
            let mut x = m.x_exps().to_vec();
            x[i] = e - 1;
            out.add_term(
                Monomial::new(m.s_exps().to_vec(), x),
                c * BigRational::from_integer(e.into()),
            );
        }
        out
    }

    /// Iterated partial derivative `∂^β` over the x-block.
    pub fn partial_x_multi(&self, beta: &[u32]) -> Self {
        let mut out = self.clone();
        for (i, &e) in beta.iter().enumerate() {
            for _ in 0..e {
                if out.is_zero() {
                    return out;
                }
                out = out.partial_x(i);
            }
        }
        out
    }

    /// Drops every term whose total s-exponent is ≥ `s_order`.
    pub fn truncate_s(&self, s_order: u32) -> Self {
        Self {
            n_s: self.n_s,
            n_x: self.n_x,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.s_order() < s_order as u64)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether every term has total s-order ≥ `k`.
    pub fn in_s_power(&self, k: u64) -> bool {
        self.terms.keys().all(|m| m.s_order() >= k)
    }

    /// Splits off the terms with a given s-exponent vector (when the s-block
    /// is a single variable this is the coefficient of `s^k`, as an x-only
    /// slice still carrying its layout).
    pub fn s_slice(&self, s_exps: &[u32]) -> Self {
        Self {
            n_s: self.n_s,
            n_x: self.n_x,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.s_exps() == s_exps)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-embeds an x-only polynomial into a layout with `n_s` s-variables.
    pub fn lift_s(&self, n_s: usize) -> Self {
        debug_assert!(self.n_s == 0 || self.n_s == n_s);
        Self {
            n_s,
            n_x: self.n_x,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.lift_s(n_s), c.clone()))
                .collect(),
        }
    }

    /// Leading exponent, term and weighted degree under the block ordering.
    ///
    /// The zero polynomial has no leading data; callers must branch on zero
    /// first.
    pub fn leading_data(&self, ord: &OrderingSpec) -> Result<LeadingData> {
        let mut best: Option<&Monomial> = None;
        for m in self.terms.keys() {
            ord.check_dims(m)?;
            best = Some(match best {
                None => m,
                Some(b) => {
                    if ord.cmp_unchecked(m, b) == std::cmp::Ordering::Greater {
                        m
                    } else {
                        b
                    }
                }
            });
        }
        let lexp = best.ok_or(Error::ZeroPolynomial)?;
        Ok(LeadingData {
            lexp: lexp.clone(),
            coef: self.terms[lexp].clone(),
            deg: ord.deg(lexp),
        })
    }

    /// `<_s`-maximal s-exponent, the full polynomial slice at that exponent
    /// (with its s-monomial factor) and its s-degree.
    pub fn leading_s_data(&self, ord: &OrderingSpec) -> Result<LeadingSData> {
        let mut best: Option<&[u32]> = None;
        for m in self.terms.keys() {
            ord.check_dims(m)?;
            let s = m.s_exps();
            best = Some(match best {
                None => s,
                Some(b) => {
                    if ord.cmp_s_block(s, b) == std::cmp::Ordering::Greater {
                        s
                    } else {
                        b
                    }
                }
            });
        }
        let lexp_s = best.ok_or(Error::ZeroPolynomial)?.to_vec();
        Ok(LeadingSData {
            lead_s: self.s_slice(&lexp_s),
            deg_s: ord.unscale(ord.deg_s_scaled(&lexp_s)),
            lexp_s,
        })
    }

    /// Renders the polynomial with terms in decreasing block order.
    pub fn render(&self, ord: &OrderingSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| ord.cmp_unchecked(b, a));
        let mut out = String::new();
        for (idx, m) in monos.iter().enumerate() {
            let coef = &self.terms[*m];
            let mag = coef.abs();
            if idx == 0 {
                if coef.is_negative() {
                    out.push('-');
                }
            } else if coef.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(rational::render(&mag));
            }
            for (j, &e) in m.s_exps().iter().enumerate() {
                if e == 1 {
                    factors.push(ord.s_vars()[j].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", ord.s_vars()[j], e));
                }
            }
            for (i, &e) in m.x_exps().iter().enumerate() {
                if e == 1 {
                    factors.push(ord.x_vars()[i].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", ord.x_vars()[i], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        debug_assert_eq!(self.n_s, rhs.n_s);
        debug_assert_eq!(self.n_x, rhs.n_x);
        let mut out = SparsePoly::zero(self.n_s, self.n_x);
        // iterate over the smaller operand
        let (small, large) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (m, c) in &small.terms {
            out.add_term_mul(m, c, large);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn ord() -> OrderingSpec {
        let base = OrderingSpec::standard(&["x", "y"]).unwrap();
        base.with_s_block(
            vec!["s".into()],
            vec![BigRational::from_integer((-7).into())],
        )
        .unwrap()
    }

    fn p(src: &str) -> SparsePoly {
        parse_poly(src, &ord()).unwrap()
    }

    #[test]
    fn leading_data_examples() {
        let o = ord();
        // 2xy^2 + 5x^4 -> lead 2xy^2, deg -3
        let lead = p("2*x*y^2+5*x^4").leading_data(&o).unwrap();
        assert_eq!(lead.coef, BigRational::from_integer(2.into()));
        assert_eq!(lead.lexp, Monomial::new(vec![0], vec![1, 2]));
        assert_eq!(lead.deg, BigRational::from_integer((-3).into()));

        // 5x^5 - 5y^5 -> lead 5x^5 by the x > y tie-break
        let lead = p("5*x^5-5*y^5").leading_data(&o).unwrap();
        assert_eq!(lead.lexp, Monomial::new(vec![0], vec![5, 0]));
        assert_eq!(lead.coef, BigRational::from_integer(5.into()));

        // single term 7s^2x: deg = 2(-7) + (-1) = -15
        let lead = p("7*s^2*x").leading_data(&o).unwrap();
        assert_eq!(lead.deg, BigRational::from_integer((-15).into()));

        assert!(SparsePoly::zero(1, 2).leading_data(&o).is_err());
    }

    #[test]
    fn leading_s_data_examples() {
        let o = ord();
        // x^2 + s*y: the s^0 slice leads
        let d = p("x^2+s*y").leading_s_data(&o).unwrap();
        assert_eq!(d.lexp_s, vec![0]);
        assert_eq!(d.lead_s, p("x^2"));
        assert_eq!(d.deg_s, BigRational::zero());

        // s^3*x: single slice, kept with its s-factor
        let d = p("s^3*x").leading_s_data(&o).unwrap();
        assert_eq!(d.lexp_s, vec![3]);
        assert_eq!(d.lead_s, p("s^3*x"));

        // s(x+y) + s^2: s^1 > s^2 locally
        let d = p("s*x+s*y+s^2").leading_s_data(&o).unwrap();
        assert_eq!(d.lexp_s, vec![1]);
        assert_eq!(d.lead_s, p("s*x+s*y"));
    }

    #[test]
    fn truncate_s_examples() {
        assert_eq!(p("x+s*x+s^2*y").truncate_s(2), p("x+s*x"));
        assert_eq!(p("x+s*x+s^2*y").truncate_s(0), SparsePoly::zero(1, 2));
        assert_eq!(p("x^2+y^3").truncate_s(1), p("x^2+y^3"));
    }

    #[test]
    fn arithmetic_is_exact_and_cancels() {
        let a = p("1/3*x+2/5*y^2");
        let b = p("x^2-7/11*x");
        let sum = &a + &b;
        assert_eq!(&sum - &b, a);
        let prod = &a * &b;
        assert_eq!(
            prod,
            p("1/3*x^3+2/5*x^2*y^2-7/33*x^2-14/55*x*y^2")
        );
    }

    #[test]
    fn partial_derivatives() {
        assert_eq!(p("x^5").partial_x(0), p("5*x^4"));
        assert_eq!(p("x^2*y^2").partial_x(1), p("2*x^2*y"));
        assert_eq!(p("s*y").partial_x(0), SparsePoly::zero(1, 2));
        assert_eq!(p("x^3*y").partial_x_multi(&[2, 1]), p("6*x"));
    }

    #[test]
    fn render_round_trips() {
        let o = ord();
        for src in ["2*x^2*y+5*y^4", "5*x^5-5*y^5", "x^2+s*y", "0", "-1/2*y^5"] {
            let q = p(src);
            assert_eq!(parse_poly(&q.render(&o), &o).unwrap(), q);
        }
        assert_eq!(p("5*x^5-5*y^5").render(&o), "5*x^5-5*y^5");
    }
}
