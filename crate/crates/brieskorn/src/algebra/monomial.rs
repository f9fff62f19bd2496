//! Monomials `s^α x^β` in the joined variable set.

/// A monomial `s₁^{α₁}…s_m^{α_m} · x₁^{β₁}…x_n^{β_n}`.
///
/// The zero monomial (all exponents 0) denotes 1.  The derived `Ord` is a
/// plain lexicographic order on the exponent tuples and is used only as a
/// canonical storage order; all mathematical comparisons go through
/// [`crate::algebra::OrderingSpec`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    s: Vec<u32>,
    x: Vec<u32>,
}

impl Monomial {
    pub fn new(s: Vec<u32>, x: Vec<u32>) -> Self {
        Self { s, x }
    }

    /// The monomial 1 in an (m, n) variable layout.
    pub fn one(n_s: usize, n_x: usize) -> Self {
        Self {
            s: vec![0; n_s],
            x: vec![0; n_x],
        }
    }

    /// `x_i` as a monomial.
    pub fn x_var(n_s: usize, n_x: usize, i: usize) -> Self {
        let mut m = Self::one(n_s, n_x);
        m.x[i] = 1;
        m
    }

    /// `s_j` as a monomial.
    pub fn s_var(n_s: usize, n_x: usize, j: usize) -> Self {
        let mut m = Self::one(n_s, n_x);
        m.s[j] = 1;
        m
    }

    pub fn s_exps(&self) -> &[u32] {
        &self.s
    }

    pub fn x_exps(&self) -> &[u32] {
        &self.x
    }

    pub fn n_s(&self) -> usize {
        self.s.len()
    }

    pub fn n_x(&self) -> usize {
        self.x.len()
    }

    /// Total s-order `|α|`.
    pub fn s_order(&self) -> u64 {
        self.s.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.s.iter().all(|&e| e == 0) && self.x.iter().all(|&e| e == 0)
    }

    pub fn is_x_only(&self) -> bool {
        self.s.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.s.len(), other.s.len());
        debug_assert_eq!(self.x.len(), other.x.len());
        Self {
            s: self.s.iter().zip(&other.s).map(|(a, b)| a + b).collect(),
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
        }
    }

    /// Whether the x-part of `other` divides the x-part of `self`
    /// (s-exponents of `other` must be zero for a meaningful test).
    pub fn x_divisible_by(&self, x_exps: &[u32]) -> bool {
        debug_assert_eq!(self.x.len(), x_exps.len());
        self.x.iter().zip(x_exps).all(|(a, b)| a >= b)
    }

    /// Divides the x-part by `x_exps`, keeping the s-part.
    pub fn div_x(&self, x_exps: &[u32]) -> Self {
        debug_assert!(self.x_divisible_by(x_exps));
        Self {
            s: self.s.clone(),
            x: self.x.iter().zip(x_exps).map(|(a, b)| a - b).collect(),
        }
    }

    /// Componentwise divisibility over both blocks.
    pub fn divisible_by(&self, other: &Self) -> bool {
        self.s.iter().zip(&other.s).all(|(a, b)| a >= b)
            && self.x.iter().zip(&other.x).all(|(a, b)| a >= b)
    }

    /// The x-part as a monomial with an empty s-block.
    pub fn x_part(&self) -> Self {
        Self {
            s: Vec::new(),
            x: self.x.clone(),
        }
    }

    /// Re-embeds an x-only monomial into a layout with `n_s` s-variables.
    pub fn lift_s(&self, n_s: usize) -> Self {
        debug_assert!(self.is_x_only() || self.s.len() == n_s);
        Self {
            s: vec![0; n_s],
            x: self.x.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotients() {
        let a = Monomial::new(vec![1], vec![2, 3]);
        assert!(a.x_divisible_by(&[2, 1]));
        assert!(!a.x_divisible_by(&[3, 0]));
        let q = a.div_x(&[2, 1]);
        assert_eq!(q, Monomial::new(vec![1], vec![0, 2]));
        assert_eq!(a.s_order(), 1);
    }

    #[test]
    fn one_is_one() {
        assert!(Monomial::one(1, 2).is_one());
        assert!(!Monomial::x_var(1, 2, 0).is_one());
    }
}
