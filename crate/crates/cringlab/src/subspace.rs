//! Subspaces with chosen inclusions and retractions, and quotients with
//! chosen sections.
//!
//! Maps "defined on a subspace" (a cotensor product, the image of a
//! projection) are always stored in subspace coordinates next to an explicit
//! inclusion, so that well-definedness of the formulas built on top of them
//! reduces to exact matrix identities. The retraction and section choices are
//! pinned by the deterministic echelon form.

use crate::field::{Field, Scalar};
use crate::map::LinMap;
use crate::matrix::Matrix;
use crate::space::Space;

/// A subspace `S ⊆ X` together with the inclusion `S -> X` and a retraction
/// `X -> S` with `retract ∘ include = id`.
#[derive(Clone, PartialEq, Debug)]
pub struct Embedding {
    pub sub: Space,
    pub ambient: Space,
    pub include: LinMap,
    pub retract: LinMap,
}

impl Embedding {
    pub fn dim(&self) -> usize {
        self.sub.dim()
    }

    pub fn field(&self) -> Field {
        self.include.field()
    }

    /// Subspace spanned by independent columns; panics if they are dependent
    /// (callers validate with `from_spanning` when unsure).
    pub fn from_basis(ambient: &Space, basis: Matrix) -> Embedding {
        let e = Embedding::from_spanning(ambient, basis.clone());
        assert_eq!(e.dim(), basis.cols(), "basis vectors are dependent");
        e
    }

    /// Subspace spanned by arbitrary columns; a deterministic independent
    /// subset is selected as the basis.
    pub fn from_spanning(ambient: &Space, span: Matrix) -> Embedding {
        assert_eq!(span.rows(), ambient.dim(), "ambient dimension mismatch");
        let field = span.field();
        let (_, pivots, _) = span.rref();
        let basis = span.select_columns(&pivots);
        Embedding::build(ambient, basis, field)
    }

    /// Kernel of a map, as a subspace of its domain.
    pub fn kernel_of(f: &LinMap) -> Embedding {
        let basis = f.matrix.kernel_basis();
        Embedding::build(&f.domain, basis, f.field())
    }

    /// Image of a map, as a subspace of its codomain.
    pub fn image_of(f: &LinMap) -> Embedding {
        Embedding::from_spanning(&f.codomain, f.matrix.clone())
    }

    fn build(ambient: &Space, basis: Matrix, field: Field) -> Embedding {
        let k = basis.cols();
        // Retraction: T * basis = [I_k; 0] for the tracked rref transform T,
        // so the first k rows of T form a left inverse of the basis.
        let (r, pivots, t) = basis.rref();
        assert_eq!(pivots.len(), k, "embedding basis must be independent");
        debug_assert!(r.select_columns(&(0..k).collect::<Vec<_>>()).rows() >= k || k == 0);
        let mut retract = Matrix::zeros(field, k, ambient.dim());
        for i in 0..k {
            for j in 0..ambient.dim() {
                retract.set(i, j, t.get(i, j).clone());
            }
        }
        // Labels: name each basis vector by its leading ambient coordinate.
        let mut labels = Vec::with_capacity(k);
        for c in 0..k {
            let lead = (0..ambient.dim()).find(|&i| !basis.get(i, c).is_zero()).expect("nonzero basis vector");
            labels.push(format!("⟨{}⟩{}", ambient.label(lead), disambiguator(c)));
        }
        dedup_labels(&mut labels);
        let sub = Space { name: format!("{}_sub", ambient.name), labels };
        let include = LinMap::new(sub.clone(), ambient.clone(), basis);
        let retract = LinMap::new(ambient.clone(), sub.clone(), retract);
        debug_assert!(retract.compose(&include).matrix == Matrix::identity(field, k));
        Embedding { sub, ambient: ambient.clone(), include, retract }
    }

    /// Whole ambient space as a subspace of itself.
    pub fn full(field: Field, ambient: &Space) -> Embedding {
        Embedding {
            sub: ambient.clone(),
            ambient: ambient.clone(),
            include: LinMap::identity(field, ambient),
            retract: LinMap::identity(field, ambient),
        }
    }

    /// Is the column `v` in the subspace?
    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        let m = Matrix::from_columns(self.field(), self.ambient.dim(), &[v.to_vec()]);
        self.include.matrix.columns_contain(&m)
    }

    /// Is `other` (same ambient) contained in `self`?
    pub fn contains(&self, other: &Embedding) -> bool {
        assert_eq!(self.ambient.dim(), other.ambient.dim());
        self.include.matrix.columns_contain(&other.include.matrix)
    }

    pub fn same_subspace(&self, other: &Embedding) -> bool {
        self.contains(other) && other.contains(self)
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Embedding) -> Embedding {
        assert_eq!(self.ambient.dim(), other.ambient.dim());
        Embedding::from_spanning(&self.ambient, self.include.matrix.hstack(&other.include.matrix))
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Embedding) -> Embedding {
        assert_eq!(self.ambient.dim(), other.ambient.dim());
        let a = &self.include.matrix;
        let b = &other.include.matrix;
        // null space of [A | -B]; the A-part of each solution spans A ∩ B
        let stacked = a.hstack(&b.neg());
        let null = stacked.kernel_basis();
        let mut cols = Vec::new();
        for j in 0..null.cols() {
            let mut coeffs = Vec::with_capacity(a.cols());
            for i in 0..a.cols() {
                coeffs.push(null.get(i, j).clone());
            }
            let v = a.mul(&Matrix::from_columns(a.field(), a.cols(), &[coeffs]));
            cols.push(v.column(0));
        }
        let span = Matrix::from_columns(a.field(), self.ambient.dim(), &cols);
        Embedding::from_spanning(&self.ambient, span)
    }

    /// Corestrict `f : Y -> ambient` to the subspace. Fails with the first
    /// offending basis label of `Y` when the image does not lie inside.
    pub fn corestrict(&self, f: &LinMap) -> Result<LinMap, String> {
        let candidate = self.retract.compose(f);
        let back = self.include.compose(&candidate);
        if let Some(w) = back.first_difference(f) {
            return Err(w);
        }
        Ok(candidate)
    }

    /// Restrict `f : ambient -> Y` to the subspace.
    pub fn restrict(&self, f: &LinMap) -> LinMap {
        f.compose(&self.include)
    }

    /// Extend `f : sub -> Y` to the ambient space along the retraction.
    /// Canonical only on the subspace itself.
    pub fn extend(&self, f: &LinMap) -> LinMap {
        f.compose(&self.retract)
    }

    /// Checks that the middle legs of `src : S -> X1⊗ambient⊗X2` (with
    /// identity factors of dimensions `left`/`right`) lie in the subspace,
    /// then applies `f_sub : sub -> Y` there, yielding `S -> X1⊗Y⊗X2`.
    pub fn apply_on_legs(
        &self,
        src: &LinMap,
        left: Option<&Space>,
        right: Option<&Space>,
        f_sub: &LinMap,
        what: &str,
    ) -> Result<LinMap, String> {
        let field = self.field();
        let projector = self.include.compose(&self.retract);
        let proj_full = crate::map::sandwich(field, left, &projector, right);
        let projected = proj_full.compose(src);
        if let Some(w) = projected.first_difference(src) {
            return Err(format!("{what}: legs leave the subspace at {w}"));
        }
        let f_amb = f_sub.compose(&self.retract);
        Ok(crate::map::sandwich(field, left, &f_amb, right).compose(src))
    }
}

fn disambiguator(_c: usize) -> String {
    String::new()
}

fn dedup_labels(labels: &mut [String]) {
    use std::collections::BTreeMap;
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for l in labels.iter() {
        *counts.entry(l.clone()).or_default() += 1;
    }
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for l in labels.iter_mut() {
        if counts[l.as_str()] > 1 {
            let n = seen.entry(l.clone()).or_default();
            let new = format!("{l}#{n}");
            *n += 1;
            *l = new;
        }
    }
}

/// A quotient `ambient / kernel` with a chosen section.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub ambient: Space,
    pub kernel: Embedding,
    pub space: Space,
    pub projection: LinMap,
    pub section: LinMap,
}

/// Quotient by a subspace. The section is picked by pivot bookkeeping on the
/// fixed echelon form: the ambient basis vectors in non-pivot positions of
/// the kernel basis survive as class representatives.
pub fn quotient(ambient: &Space, sub: &Embedding) -> QuotientData {
    assert_eq!(sub.ambient.dim(), ambient.dim());
    let field = sub.field();
    let k = sub.dim();
    let n = ambient.dim();
    // Echelonize the kernel basis transposed so pivots index ambient coords.
    let (rr, pivots, _) = sub.include.matrix.transpose().rref();
    assert_eq!(pivots.len(), k);
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let q = free.len();
    let labels: Vec<String> = free.iter().map(|&j| format!("[{}]", ambient.label(j))).collect();
    let space = Space { name: format!("{}/", ambient.name), labels };
    // projection: e_j maps to its class; kernel rows rewrite pivot coords
    // in terms of free coords.
    let mut proj = Matrix::zeros(field, q, n);
    for (qi, &fj) in free.iter().enumerate() {
        proj.set(qi, fj, field.one());
    }
    for (row, &pj) in pivots.iter().enumerate() {
        // pivot coordinate pj equals -(sum of rr[row][free] * free coords)
        for (qi, &fj) in free.iter().enumerate() {
            let v = proj.get(qi, pj).sub(&rr.get(row, fj).clone());
            proj.set(qi, pj, v);
        }
    }
    let mut sect = Matrix::zeros(field, n, q);
    for (qi, &fj) in free.iter().enumerate() {
        sect.set(fj, qi, field.one());
    }
    let projection = LinMap::new(ambient.clone(), space.clone(), proj);
    let section = LinMap::new(space.clone(), ambient.clone(), sect);
    debug_assert!(projection.compose(&section).matrix == Matrix::identity(field, q));
    QuotientData { ambient: ambient.clone(), kernel: sub.clone(), space, projection, section }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn kernel_embedding_round_trip() {
        let x = Space::numbered("X", "e", 3);
        let f = LinMap::new(
            x.clone(),
            Space::numbered("Y", "f", 2),
            Matrix::from_i64(q(), &[&[1, 0, 1], &[0, 1, 1]]),
        );
        let ker = Embedding::kernel_of(&f);
        assert_eq!(ker.dim(), 1);
        assert!(ker.retract.compose(&ker.include).matrix == Matrix::identity(q(), 1));
        assert!(f.compose(&ker.include).is_zero());
    }

    #[test]
    fn quotient_of_plane_by_line() {
        // quotient(k^2, span{(1,0)}): 1-dimensional, projection sends (0,1) to 1
        let x = Space::numbered("X", "e", 2);
        let line = Embedding::from_basis(&x, Matrix::from_i64(q(), &[&[1], &[0]]));
        let quo = quotient(&x, &line);
        assert_eq!(quo.space.dim(), 1);
        assert_eq!(quo.projection.matrix, Matrix::from_i64(q(), &[&[0, 1]]));
        assert!(quo.projection.compose(&line.include).is_zero());
        assert_eq!(
            quo.projection.compose(&quo.section).matrix,
            Matrix::identity(q(), 1)
        );
    }

    #[test]
    fn sum_and_intersection() {
        let x = Space::numbered("X", "e", 3);
        let a = Embedding::from_basis(&x, Matrix::from_i64(q(), &[&[1], &[0], &[0]]));
        let b = Embedding::from_basis(&x, Matrix::from_i64(q(), &[&[1, 0], &[1, 1], &[0, 0]]));
        let s = a.sum(&b);
        assert_eq!(s.dim(), 2);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(b.contains(&i));
        assert!(a.contains(&i));
    }

    #[test]
    fn corestriction_detects_leaks() {
        let x = Space::numbered("X", "e", 2);
        let line = Embedding::from_basis(&x, Matrix::from_i64(q(), &[&[1], &[0]]));
        let good = LinMap::new(x.clone(), x.clone(), Matrix::from_i64(q(), &[&[1, 1], &[0, 0]]));
        assert!(line.corestrict(&good).is_ok());
        let bad = LinMap::identity(q(), &x);
        assert!(line.corestrict(&bad).is_err());
    }
}
