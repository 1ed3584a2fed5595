//! Sparse multivariate polynomials over an exact field.
//!
//! Just enough machinery for symbolic determinants of matrices whose entries
//! are linear forms: the nondegeneracy search for bilinear forms needs an
//! exact "is this determinant identically zero" answer before hunting for a
//! concrete witness point.

use crate::field::{Field, Scalar};
use std::collections::BTreeMap;

/// Exponent vector -> coefficient, zero coefficients never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    pub nvars: usize,
    pub field: Field,
    pub terms: BTreeMap<Vec<u16>, Scalar>,
}

impl MPoly {
    pub fn zero(field: Field, nvars: usize) -> MPoly {
        MPoly { nvars, field, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> MPoly {
        let mut p = MPoly::zero(field, nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn variable(field: Field, nvars: usize, i: usize) -> MPoly {
        let mut exp = vec![0u16; nvars];
        exp[i] = 1;
        let mut p = MPoly::zero(field, nvars);
        p.terms.insert(exp, field.one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let v = match out.terms.get(e) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            if v.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.field, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1.mul(c2);
                let v = match out.terms.get(&e) {
                    Some(prev) => prev.add(&c),
                    None => c,
                };
                if v.is_zero() {
                    out.terms.remove(&e);
                } else {
                    out.terms.insert(e, v);
                }
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// Determinant of a square matrix of polynomials by first-column Laplace
/// expansion with memoization over row subsets. Exponential in the dimension,
/// fine at desk scale.
pub fn determinant(entries: &[Vec<MPoly>]) -> MPoly {
    let n = entries.len();
    if n == 0 {
        let field = Field::Rationals;
        return MPoly::constant(field, 0, field.one());
    }
    let field = entries[0][0].field;
    let nvars = entries[0][0].nvars;
    for row in entries {
        assert_eq!(row.len(), n, "determinant needs a square matrix");
    }
    let mut memo: BTreeMap<u64, MPoly> = BTreeMap::new();
    // subset = bitmask of available rows; expand along column (n - popcount)
    fn go(entries: &[Vec<MPoly>], rows: u64, n: usize, memo: &mut BTreeMap<u64, MPoly>, field: Field, nvars: usize) -> MPoly {
        if rows == 0 {
            return MPoly::constant(field, nvars, field.one());
        }
        if let Some(p) = memo.get(&rows) {
            return p.clone();
        }
        let k = rows.count_ones() as usize;
        let col = n - k;
        let mut acc = MPoly::zero(field, nvars);
        let mut sign = false;
        for r in 0..n {
            if rows & (1 << r) == 0 {
                continue;
            }
            let minor = go(entries, rows & !(1 << r), n, memo, field, nvars);
            let term = entries[r][col].mul(&minor);
            acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            sign = !sign;
        }
        memo.insert(rows, acc.clone());
        acc
    }
    go(entries, (1u64 << n) - 1, n, &mut memo, field, nvars)
}
