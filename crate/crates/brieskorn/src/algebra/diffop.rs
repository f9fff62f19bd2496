//! Differential operators with polynomial coefficients, polynomial in the
//! partial-derivative symbols, with the commutator convention
//! `[∂_i, x_j] = δ_ij`.

use num::BigRational;

use crate::{Error, Result};

use super::{Monomial, OrderingSpec, SparsePoly};

/// One summand `c(s,x) · ∂^β` of an operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOpTerm {
    pub coef: SparsePoly,
    /// Multi-index of partial derivatives in the x-block.
    pub dx: Vec<u32>,
}

/// A finite sum of `c(s,x) · ∂^β` terms acting on polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    pub terms: Vec<DiffOpTerm>,
}

impl DiffOp {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single partial derivative `∂_i`.
    pub fn partial(n_s: usize, n_x: usize, i: usize) -> Self {
        let mut dx = vec![0; n_x];
        dx[i] = 1;
        Self {
            terms: vec![DiffOpTerm {
                coef: SparsePoly::one(n_s, n_x),
                dx,
            }],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.coef.is_zero())
    }

    /// Applies the operator: `Σ c · ∂^β(p)`, derivatives computed exactly.
    pub fn apply(&self, p: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero(p.n_s(), p.n_x());
        for term in &self.terms {
            if term.coef.is_zero() {
                continue;
            }
            let derived = p.partial_x_multi(&term.dx);
            if !derived.is_zero() {
                out.add_assign(&(&term.coef * &derived));
            }
        }
        out
    }

    /// Applies the operator to `coef · mono`, a common special case.
    pub fn apply_term(&self, mono: &Monomial, coef: &BigRational) -> SparsePoly {
        self.apply(&SparsePoly::term(mono.clone(), coef.clone()))
    }

    /// Weighted degree: max over summands of `deg(c) + Σ β_i·deg(∂_i)` with
    /// `deg(∂_i) = -deg(x_i)`.  `None` for the zero operator.
    pub fn max_deg_scaled(&self, ord: &OrderingSpec) -> Option<i128> {
        let mut best: Option<i128> = None;
        for term in &self.terms {
            if term.coef.is_zero() {
                continue;
            }
            let shift: i128 = -ord.deg_x_scaled(&term.dx);
            for (m, _) in term.coef.iter() {
                let d = ord.deg_scaled(m) + shift;
                best = Some(best.map_or(d, |b| b.max(d)));
            }
        }
        best
    }
}

/// Matrix of differential operators; row `j` is the row `d^j` of the family
/// shape `F = f - sD`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOpMatrix {
    pub rows: Vec<Vec<DiffOp>>,
}

impl DiffOpMatrix {
    pub fn new(rows: Vec<Vec<DiffOp>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput);
        }
        let width = rows[0].len();
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::DimensionMismatch(
                "operator matrix rows differ in length".into(),
            ));
        }
        Ok(Self { rows })
    }

    /// The single row `(∂_1, …, ∂_n)` of the Brieskorn instantiation.
    pub fn brieskorn(n_x: usize) -> Self {
        Self {
            rows: vec![(0..n_x).map(|i| DiffOp::partial(1, n_x, i)).collect()],
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows[0].len()
    }

    /// Max weighted degree over the entries of row `j`; `None` if the row is
    /// the zero row.
    pub fn row_max_deg_scaled(&self, j: usize, ord: &OrderingSpec) -> Option<i128> {
        self.rows[j]
            .iter()
            .filter_map(|op| op.max_deg_scaled(ord))
            .max()
    }

    /// Max weighted degree over all entries.
    pub fn max_deg_scaled(&self, ord: &OrderingSpec) -> Option<i128> {
        (0..self.n_rows())
            .filter_map(|j| self.row_max_deg_scaled(j, ord))
            .max()
    }

    /// Whether any coefficient involves an s-variable.
    pub fn depends_on_s(&self) -> bool {
        self.rows.iter().flatten().any(|op| {
            op.terms
                .iter()
                .any(|t| t.coef.iter().any(|(m, _)| !m.is_x_only()))
        })
    }
}

/// Applies one operator row to a column of polynomials: `Σ_i d_i(v_i)`.
pub fn diff_apply(row: &[DiffOp], column: &[SparsePoly]) -> Result<SparsePoly> {
    if row.len() != column.len() {
        return Err(Error::DimensionMismatch(format!(
            "operator row has {} entries, column has {}",
            row.len(),
            column.len()
        )));
    }
    let probe = column
        .first()
        .ok_or(Error::EmptyInput)?;
    let mut out = SparsePoly::zero(probe.n_s(), probe.n_x());
    for (op, v) in row.iter().zip(column) {
        if !v.is_zero() {
            out.add_assign(&op.apply(v));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, OrderingSpec};
    use num::Zero;

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
    fn brieskorn_row_cancels_euler_like_column() {
        let d = DiffOpMatrix::brieskorn(2);
        // (∂_x, ∂_y) applied to (x/5, -y/5) is 1/5 - 1/5 = 0
        let v = vec![p("1/5*x"), p("-1/5*y")];
        let out = diff_apply(&d.rows[0], &v).unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn brieskorn_row_half_y() {
        let d = DiffOpMatrix::brieskorn(2);
        let v = vec![SparsePoly::zero(1, 2), p("1/2*y")];
        let out = diff_apply(&d.rows[0], &v).unwrap();
        assert_eq!(out, p("1/2"));
    }

    #[test]
    fn zero_column_maps_to_zero() {
        let d = DiffOpMatrix::brieskorn(2);
        let v = vec![SparsePoly::zero(1, 2), SparsePoly::zero(1, 2)];
        assert!(diff_apply(&d.rows[0], &v).unwrap().is_zero());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let d = DiffOpMatrix::brieskorn(2);
        assert!(diff_apply(&d.rows[0], &[p("x")]).is_err());
    }

    #[test]
    fn operator_degree_uses_derivative_shift() {
        let o = ord();
        let d = DiffOpMatrix::brieskorn(2);
        // deg ∂_i = -deg x_i = 1
        assert_eq!(d.max_deg_scaled(&o), Some(o.scale_degree(&BigRational::from_integer(1.into())).unwrap()));
        // x·∂_x has degree 0
        let op = DiffOp {
            terms: vec![DiffOpTerm {
                coef: p("x"),
                dx: vec![1, 0],
            }],
        };
        assert_eq!(op.max_deg_scaled(&o), Some(0));
        assert_eq!(DiffOp::zero().max_deg_scaled(&o), None);
        assert_eq!(op.apply(&p("x^3")), p("3*x^3"));
    }

    #[test]
    fn leibniz_on_a_sample() {
        let (a, b) = (p("x^2+s*y"), p("x*y-3"));
        let dx = DiffOp::partial(1, 2, 0);
        let lhs = dx.apply(&(&a * &b));
        let rhs = &(&dx.apply(&a) * &b) + &(&a * &dx.apply(&b));
        assert_eq!(lhs, rhs);
        assert!(BigRational::zero().is_zero());
    }
}
