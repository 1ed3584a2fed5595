//! Algebras by structure constants, duality with coalgebras, and the two
//! self-injectivity certificates: separability elements and nondegenerate
//! associative bilinear forms.

use crate::affine::MapSolver;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::map::LinMap;
use crate::matrix::Matrix;
use crate::poly::{determinant, MPoly};
use crate::report::Report;
use crate::space::Space;
use rand::{Rng, SeedableRng};

#[derive(Clone, PartialEq, Debug)]
pub struct Algebra {
    pub space: Space,
    pub mult: LinMap,
    pub unit: LinMap,
}

impl Algebra {
    pub fn new(space: Space, mult: LinMap, unit: LinMap) -> Result<Algebra> {
        let d = space.dim();
        if mult.domain.dim() != d * d || mult.codomain.dim() != d {
            return Err(Error::ShapeMismatch(format!(
                "multiplication of {} must be a {}x{} matrix",
                space.name,
                d,
                d * d
            )));
        }
        if unit.domain.dim() != 1 || unit.codomain.dim() != d {
            return Err(Error::ShapeMismatch(format!("unit of {} must be a {d}x1 matrix", space.name)));
        }
        Ok(Algebra { space, mult, unit })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn identity_map(&self) -> LinMap {
        LinMap::identity(self.field(), &self.space)
    }

    pub fn check(&self) -> Report {
        let mut rep = Report::new(format!("algebra {}", self.space.name));
        let f = self.field();
        let id = self.identity_map();
        let assoc_l = self.mult.compose(&self.mult.tensor(&id));
        let assoc_r = self.mult.compose(&id.tensor(&self.mult));
        rep.check_eq("Associativity", &assoc_l, &assoc_r);
        let left = self.mult.compose(&self.unit.tensor(&id)).compose(&LinMap::unit_left_inv(f, &self.space));
        rep.check_eq("UnitLaw (left)", &left, &id);
        let right = self.mult.compose(&id.tensor(&self.unit)).compose(&LinMap::unit_right_inv(f, &self.space));
        rep.check_eq("UnitLaw (right)", &right, &id);
        rep
    }

    /// Insertion of a basis element as a map `k -> A`.
    pub fn basis_element(&self, i: usize) -> LinMap {
        let mut m = Matrix::zeros(self.field(), self.dim(), 1);
        m.set(i, 0, self.field().one());
        LinMap::new(Space::unit(), self.space.clone(), m)
    }

    /// Left multiplication by the i-th basis element, as a map `A -> A`.
    pub fn left_mult(&self, i: usize) -> LinMap {
        let f = self.field();
        self.mult
            .compose(&self.basis_element(i).tensor(&self.identity_map()))
            .compose(&LinMap::unit_left_inv(f, &self.space))
    }

    /// Right multiplication by the i-th basis element.
    pub fn right_mult(&self, i: usize) -> LinMap {
        let f = self.field();
        self.mult
            .compose(&self.identity_map().tensor(&self.basis_element(i)))
            .compose(&LinMap::unit_right_inv(f, &self.space))
    }
}

/// Dual coalgebra of a finite-dimensional algebra: structure constants
/// transposed, same basis labels so that double duals are identical.
pub fn dual_coalgebra(a: &Algebra) -> Coalgebra {
    let space = Space { name: format!("{}^", a.space.name), labels: a.space.labels.clone() };
    let comult = LinMap::new(space.clone(), space.tensor(&space), a.mult.matrix.transpose());
    let counit = LinMap::new(space.clone(), Space::unit(), a.unit.matrix.transpose());
    Coalgebra::new(space, comult, Some(counit)).expect("transposed shapes are valid")
}

/// Dual algebra of a finite-dimensional counital coalgebra.
pub fn dual_algebra(c: &Coalgebra) -> Result<Algebra> {
    if !c.is_counital() {
        return Err(Error::ShapeMismatch("dual algebra needs a counit".into()));
    }
    let space = Space { name: format!("{}^", c.space.name), labels: c.space.labels.clone() };
    let mult = LinMap::new(space.tensor(&space), space.clone(), c.comult.matrix.transpose());
    let unit = LinMap::new(Space::unit(), space.clone(), c.counit().matrix.transpose());
    Algebra::new(space, mult, unit)
}

/// Searches for `e ∈ A⊗A` with `μ(e) = 1` and `a·e = e·a` for every basis
/// element, by exact affine solving. `None` means the system is infeasible
/// over the ground field.
pub fn separability_element(a: &Algebra) -> Option<LinMap> {
    let f = a.field();
    let aa = a.space.tensor(&a.space);
    let mut solver = MapSolver::new(f, &Space::unit(), &aa);
    let mult = a.mult.clone();
    solver.constrain("μ(e) = 1", a.unit.clone(), move |e| mult.compose(e));
    let id = a.identity_map();
    for i in 0..a.dim() {
        let l = a.left_mult(i).tensor(&id);
        let r = id.tensor(&a.right_mult(i));
        let zero = LinMap::zero(f, &Space::unit(), &aa);
        solver.constrain(format!("a·e = e·a at {}", a.space.label(i)), zero, move |e| {
            l.compose(e).sub(&r.compose(e))
        });
    }
    solver.solve().solution()
}

/// Verifies that a candidate separability element actually satisfies its
/// defining identities.
pub fn check_separability_element(a: &Algebra, e: &LinMap) -> Report {
    let mut rep = Report::new(format!("separability element of {}", a.space.name));
    let one = a.unit.clone();
    rep.check_eq("μ(e) = 1", &a.mult.compose(e), &one);
    let id = a.identity_map();
    for i in 0..a.dim() {
        let l = a.left_mult(i).tensor(&id).compose(e);
        let r = id.tensor(&a.right_mult(i)).compose(e);
        rep.check_eq(format!("centrality at {}", a.space.label(i)), &l, &r);
    }
    rep
}

/// Search for a functional `λ: A -> k` whose associated bilinear form
/// `(x, y) -> λ(xy)` is nondegenerate.
///
/// The generic form is handled symbolically: the determinant of the Gram
/// matrix in `dim A` indeterminates is expanded exactly, and `None` is
/// returned only when that polynomial vanishes identically or (over a small
/// finite field) no field point attains a nonzero value. With a seed, random
/// sample points are tried first as a fast path before the deterministic
/// search; results stay exact either way.
pub fn frobenius_form(a: &Algebra, seed: Option<u64>) -> Result<Option<LinMap>> {
    let n = a.dim();
    let f = a.field();
    if n > 10 {
        return Err(Error::DimensionCap { what: format!("nondegeneracy search on {}", a.space.name), dim: n, cap: 10 });
    }
    if n == 0 {
        return Ok(None);
    }
    // gram[i][j] = sum_k t_k * coefficient of basis k in (e_i e_j)
    let mut gram: Vec<Vec<MPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut entry = MPoly::zero(f, n);
            for k in 0..n {
                let c = a.mult.matrix.get(k, i * n + j);
                if !c.is_zero() {
                    let term = MPoly::constant(f, n, c.clone()).mul(&MPoly::variable(f, n, k));
                    entry = entry.add(&term);
                }
            }
            row.push(entry);
        }
        gram.push(row);
    }
    let det = determinant(&gram);
    if det.is_zero() {
        return Ok(None);
    }
    let lambda_from = |point: &[Scalar]| {
        let mut m = Matrix::zeros(f, 1, n);
        for (j, v) in point.iter().enumerate() {
            m.set(0, j, v.clone());
        }
        LinMap::new(a.space.clone(), Space::unit(), m)
    };
    // seeded sampling fast path
    if let Some(s) = seed {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(s);
        for _ in 0..64 {
            let point: Vec<Scalar> = (0..n)
                .map(|_| match f {
                    Field::Rationals => f.from_i64(rng.gen_range(-8..=8)),
                    Field::Prime(p) => f.from_i64(rng.gen_range(0..p) as i64),
                })
                .collect();
            if !det.eval(&point).is_zero() {
                return Ok(Some(lambda_from(&point)));
            }
        }
    }
    // dual basis vectors first: the common answers live there
    for k in 0..n {
        let mut point = vec![f.zero(); n];
        point[k] = f.one();
        if !det.eval(&point).is_zero() {
            return Ok(Some(lambda_from(&point)));
        }
    }
    match f {
        Field::Prime(p) => {
            // exhaustive over GF(p)^n when small; a nonzero polynomial can
            // still vanish as a function, so enumeration is the real test
            let total = (p as u128).checked_pow(n as u32);
            match total {
                Some(t) if t <= 1 << 20 => {
                    let mut point = vec![f.zero(); n];
                    loop {
                        if !det.eval(&point).is_zero() {
                            return Ok(Some(lambda_from(&point)));
                        }
                        // increment base-p counter
                        let mut i = 0;
                        loop {
                            if i == n {
                                return Ok(None);
                            }
                            let Scalar::Fp { value, .. } = point[i] else { unreachable!() };
                            if value + 1 < p {
                                point[i] = f.from_i64(value as i64 + 1);
                                break;
                            }
                            point[i] = f.zero();
                            i += 1;
                        }
                    }
                }
                _ => Err(Error::EnumerationRefused(format!(
                    "functional search space {p}^{n} is too large"
                ))),
            }
        }
        Field::Rationals => {
            // grid {0..n}^n contains a nonvanishing point for any nonzero
            // polynomial of per-variable degree <= n
            let base = n as u64 + 1;
            let mut counter = vec![0u64; n];
            loop {
                let point: Vec<Scalar> = counter.iter().map(|&v| f.from_i64(v as i64)).collect();
                if !det.eval(&point).is_zero() {
                    return Ok(Some(lambda_from(&point)));
                }
                let mut i = 0;
                loop {
                    if i == n {
                        // exhausted: the grid argument makes this unreachable
                        // for a nonzero determinant
                        return Ok(None);
                    }
                    if counter[i] + 1 < base {
                        counter[i] += 1;
                        break;
                    }
                    counter[i] = 0;
                    i += 1;
                }
            }
        }
    }
}

/// Gram matrix of the form `(x, y) -> λ(xy)`.
pub fn gram_matrix(a: &Algebra, lambda: &LinMap) -> Matrix {
    let n = a.dim();
    let f = a.field();
    let mut g = Matrix::zeros(f, n, n);
    let vals = lambda.compose(&a.mult); // A⊗A -> k
    for i in 0..n {
        for j in 0..n {
            g.set(i, j, vals.matrix.get(0, i * n + j).clone());
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn group_algebra_z2_passes() {
        let a = fixtures::group_algebra_z2(q());
        assert!(a.check().all_passed());
    }

    #[test]
    fn broken_unit_fails_unit_law() {
        let mut a = fixtures::group_algebra_z2(q());
        a.unit = LinMap::zero(q(), &Space::unit(), &a.space.clone());
        let rep = a.check();
        let fail = rep.first_failure().unwrap();
        assert!(fail.name.starts_with("UnitLaw"));
    }

    #[test]
    fn sweedler_four_dimensional_algebra_passes() {
        let a = fixtures::sweedler_algebra(q());
        assert!(a.check().all_passed());
    }

    #[test]
    fn duals_transpose_and_round_trip() {
        // dual of the group algebra kZ2 is a valid coalgebra, and the double
        // dual has identical structure constants
        let a = fixtures::group_algebra_z2(q());
        let c = dual_coalgebra(&a);
        assert!(c.check().all_passed());
        let back = dual_algebra(&c).unwrap();
        assert_eq!(back.mult.matrix, a.mult.matrix);
        assert_eq!(back.unit.matrix, a.unit.matrix);
    }

    #[test]
    fn dual_of_matrix_algebra_is_matrix_coalgebra() {
        let m2 = fixtures::matrix_algebra(q(), 2);
        assert!(m2.check().all_passed());
        let c = dual_coalgebra(&m2);
        let mc2 = fixtures::matrix_coalgebra(q(), 2);
        assert_eq!(c.comult.matrix, mc2.comult.matrix);
        assert_eq!(c.counit().matrix, mc2.counit().matrix);
    }

    #[test]
    fn separability_of_kz2_over_q() {
        // e = (1⊗1 + g⊗g)/2
        let a = fixtures::group_algebra_z2(q());
        let e = separability_element(&a).unwrap();
        assert!(check_separability_element(&a, &e).all_passed());
        let half = q().parse("1/2").unwrap();
        assert_eq!(e.matrix.get(0, 0), &half); // 1⊗1
        assert_eq!(e.matrix.get(3, 0), &half); // g⊗g
        assert!(e.matrix.get(1, 0).is_zero());
        assert!(e.matrix.get(2, 0).is_zero());
    }

    #[test]
    fn separability_of_kz2_infeasible_in_characteristic_two() {
        let f = Field::prime(2).unwrap();
        let a = fixtures::group_algebra_z2(f);
        assert!(separability_element(&a).is_none());
    }

    #[test]
    fn one_dimensional_algebra_is_separable() {
        let a = fixtures::ground_field_algebra(q());
        let e = separability_element(&a).unwrap();
        assert_eq!(e.matrix.get(0, 0), &q().one());
    }

    #[test]
    fn frobenius_form_for_kz2() {
        let a = fixtures::group_algebra_z2(q());
        let l = frobenius_form(&a, None).unwrap().unwrap();
        assert!(gram_matrix(&a, &l).inverse().is_some());
        // the dual-basis stage finds the functional dual to 1
        assert_eq!(l.matrix, Matrix::from_i64(q(), &[&[1, 0]]));
    }

    #[test]
    fn frobenius_form_for_sweedler_algebra() {
        let a = fixtures::sweedler_algebra(q());
        let l = frobenius_form(&a, None).unwrap().unwrap();
        assert!(gram_matrix(&a, &l).inverse().is_some());
    }

    #[test]
    fn frobenius_form_for_dual_numbers() {
        // k[t]/(t^2) with λ = coefficient of t
        let a = fixtures::dual_numbers(q());
        let l = frobenius_form(&a, None).unwrap().unwrap();
        assert!(gram_matrix(&a, &l).inverse().is_some());
        assert_eq!(l.matrix, Matrix::from_i64(q(), &[&[0, 1]]));
    }

    #[test]
    fn frobenius_form_exists_for_kz2_in_characteristic_two() {
        // group algebras have a nondegenerate form over any field even when
        // no separability element exists
        let f = Field::prime(2).unwrap();
        let a = fixtures::group_algebra_z2(f);
        let l = frobenius_form(&a, None).unwrap().unwrap();
        assert!(gram_matrix(&a, &l).inverse().is_some());
    }

    #[test]
    fn seeded_fast_path_agrees_on_nondegeneracy() {
        let a = fixtures::sweedler_algebra(q());
        let l = frobenius_form(&a, Some(7)).unwrap().unwrap();
        assert!(gram_matrix(&a, &l).inverse().is_some());
    }

    #[test]
    fn upper_triangular_algebra_is_frobenius_free() {
        // T2 (upper triangular 2x2) admits no nondegenerate associative
        // form: the generic determinant vanishes identically.
        let a = fixtures::upper_triangular_2(q());
        assert!(a.check().all_passed());
        assert!(frobenius_form(&a, None).unwrap().is_none());
    }
}
