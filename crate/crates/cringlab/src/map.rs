//! Linear maps between labeled spaces.
//!
//! A `LinMap` is a matrix together with its domain and codomain. Composition
//! and tensoring check dimensions (not names); the label bookkeeping rides
//! along so failure witnesses stay readable.

use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::space::Space;

#[derive(Clone, PartialEq, Debug)]
pub struct LinMap {
    pub domain: Space,
    pub codomain: Space,
    pub matrix: Matrix,
}

impl LinMap {
    pub fn new(domain: Space, codomain: Space, matrix: Matrix) -> LinMap {
        assert_eq!(matrix.rows(), codomain.dim(), "codomain dimension mismatch");
        assert_eq!(matrix.cols(), domain.dim(), "domain dimension mismatch");
        LinMap { domain, codomain, matrix }
    }

    pub fn identity(field: Field, space: &Space) -> LinMap {
        LinMap::new(space.clone(), space.clone(), Matrix::identity(field, space.dim()))
    }

    pub fn zero(field: Field, domain: &Space, codomain: &Space) -> LinMap {
        LinMap::new(domain.clone(), codomain.clone(), Matrix::zeros(field, codomain.dim(), domain.dim()))
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &LinMap) -> LinMap {
        assert_eq!(
            self.domain.dim(),
            first.codomain.dim(),
            "compose shape mismatch: {} after {}",
            self.describe(),
            first.describe()
        );
        LinMap::new(first.domain.clone(), self.codomain.clone(), self.matrix.mul(&first.matrix))
    }

    pub fn tensor(&self, other: &LinMap) -> LinMap {
        LinMap::new(
            self.domain.tensor(&other.domain),
            self.codomain.tensor(&other.codomain),
            self.matrix.kron(&other.matrix),
        )
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        LinMap::new(self.domain.clone(), self.codomain.clone(), self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        LinMap::new(self.domain.clone(), self.codomain.clone(), self.matrix.sub(&other.matrix))
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.domain.dim());
        let col = Matrix::from_columns(self.field(), v.len(), &[v.to_vec()]);
        self.matrix.mul(&col).column(0)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain.dim() == self.codomain.dim() && self.rank() == self.domain.dim()
    }

    pub fn inverse(&self) -> Option<LinMap> {
        let m = self.matrix.inverse()?;
        Some(LinMap::new(self.codomain.clone(), self.domain.clone(), m))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// Equality of the underlying matrices; shapes must agree.
    pub fn same_matrix(&self, other: &LinMap) -> bool {
        self.matrix == other.matrix
    }

    /// First domain basis vector on which the two maps differ, if any.
    pub fn first_difference(&self, other: &LinMap) -> Option<String> {
        assert_eq!(self.domain.dim(), other.domain.dim());
        assert_eq!(self.codomain.dim(), other.codomain.dim());
        for j in 0..self.domain.dim() {
            for i in 0..self.codomain.dim() {
                if self.matrix.get(i, j) != other.matrix.get(i, j) {
                    return Some(self.domain.label(j).to_string());
                }
            }
        }
        None
    }

    pub fn describe(&self) -> String {
        format!("{} -> {}", self.domain.name, self.codomain.name)
    }

    /// Canonical isomorphism `k⊗X -> X` (the matrix is an identity; only the
    /// labels change).
    pub fn unit_left(field: Field, x: &Space) -> LinMap {
        LinMap::new(Space::unit().tensor(x), x.clone(), Matrix::identity(field, x.dim()))
    }

    /// Canonical isomorphism `X⊗k -> X`.
    pub fn unit_right(field: Field, x: &Space) -> LinMap {
        LinMap::new(x.tensor(&Space::unit()), x.clone(), Matrix::identity(field, x.dim()))
    }

    /// Canonical isomorphism `X -> k⊗X`.
    pub fn unit_left_inv(field: Field, x: &Space) -> LinMap {
        LinMap::new(x.clone(), Space::unit().tensor(x), Matrix::identity(field, x.dim()))
    }

    /// Canonical isomorphism `X -> X⊗k`.
    pub fn unit_right_inv(field: Field, x: &Space) -> LinMap {
        LinMap::new(x.clone(), x.tensor(&Space::unit()), Matrix::identity(field, x.dim()))
    }

    /// Canonical isomorphism `X⊗k⊗Y -> X⊗Y`, used after contracting a middle
    /// tensor factor to the ground field.
    pub fn unit_middle(field: Field, x: &Space, y: &Space) -> LinMap {
        let dom = x.tensor(&Space::unit()).tensor(y);
        let cod = x.tensor(y);
        LinMap::new(dom, cod.clone(), Matrix::identity(field, cod.dim()))
    }
}

/// `I⊗f⊗I` with optional identity factors on either side.
pub fn sandwich(field: Field, left: Option<&Space>, f: &LinMap, right: Option<&Space>) -> LinMap {
    let mut out = f.clone();
    if let Some(l) = left {
        out = LinMap::identity(field, l).tensor(&out);
    }
    if let Some(r) = right {
        out = out.tensor(&LinMap::identity(field, r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn tensor_of_identities() {
        let x = Space::numbered("X", "x", 2);
        let y = Space::numbered("Y", "y", 3);
        let t = LinMap::identity(q(), &x).tensor(&LinMap::identity(q(), &y));
        assert_eq!(t.matrix, Matrix::identity(q(), 6));
    }

    #[test]
    fn sandwich_builds_the_expected_shape() {
        let x = Space::numbered("X", "x", 2);
        let y = Space::numbered("Y", "y", 2);
        let f = LinMap::zero(q(), &y, &y);
        let s = sandwich(q(), Some(&x), &f, None);
        assert_eq!(s.domain.dim(), 4);
        assert_eq!(s.codomain.dim(), 4);
    }

    #[test]
    fn unit_isos_are_identities_on_data() {
        let x = Space::numbered("X", "x", 3);
        let l = LinMap::unit_left(q(), &x);
        let r = LinMap::unit_right_inv(q(), &x);
        assert_eq!(l.matrix, Matrix::identity(q(), 3));
        assert_eq!(r.matrix, Matrix::identity(q(), 3));
    }
}
