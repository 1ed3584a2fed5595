//! Desk-scale fixtures: the small (co)algebras, comodules, contexts,
//! entwinings and modules that the examples, tests and the `fixtures` CLI
//! command all share. Everything is built from explicit structure-constant
//! tables.

use crate::algebra::Algebra;
use crate::coalgebra::Coalgebra;
use crate::field::Field;
use crate::map::LinMap;
use crate::matrix::Matrix;
use crate::space::Space;

/// Multiplication map from a table: `table(i, j)` lists the nonzero
/// coefficients of the product of basis elements i and j.
pub fn mult_from_table(field: Field, space: &Space, table: impl Fn(usize, usize) -> Vec<(usize, i64)>) -> LinMap {
    let n = space.dim();
    let mut m = Matrix::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in table(i, j) {
                let v = m.get(k, i * n + j).add(&field.from_i64(c));
                m.set(k, i * n + j, v);
            }
        }
    }
    LinMap::new(space.tensor(space), space.clone(), m)
}

/// Comultiplication map from a table: `table(i)` lists coefficients on
/// `e_j⊗e_k` as `(j, k, c)`.
pub fn comult_from_table(field: Field, space: &Space, table: impl Fn(usize) -> Vec<(usize, usize, i64)>) -> LinMap {
    let n = space.dim();
    let mut m = Matrix::zeros(field, n * n, n);
    for i in 0..n {
        for (j, k, c) in table(i) {
            let v = m.get(j * n + k, i).add(&field.from_i64(c));
            m.set(j * n + k, i, v);
        }
    }
    LinMap::new(space.clone(), space.tensor(space), m)
}

pub fn functional(field: Field, space: &Space, values: &[i64]) -> LinMap {
    assert_eq!(values.len(), space.dim());
    let mut m = Matrix::zeros(field, 1, space.dim());
    for (j, v) in values.iter().enumerate() {
        m.set(0, j, field.from_i64(*v));
    }
    LinMap::new(space.clone(), Space::unit(), m)
}

pub fn vector(field: Field, space: &Space, values: &[i64]) -> LinMap {
    assert_eq!(values.len(), space.dim());
    let mut m = Matrix::zeros(field, space.dim(), 1);
    for (i, v) in values.iter().enumerate() {
        m.set(i, 0, field.from_i64(*v));
    }
    LinMap::new(Space::unit(), space.clone(), m)
}

/// Grouplike coalgebra on `n` points: Δg_i = g_i⊗g_i, ε g_i = 1.
pub fn grouplike(field: Field, n: usize) -> Coalgebra {
    let space = Space::numbered(format!("C{n}"), "g", n);
    let comult = comult_from_table(field, &space, |i| vec![(i, i, 1)]);
    let counit = functional(field, &space, &vec![1; n]);
    Coalgebra::new(space, comult, Some(counit)).unwrap()
}

/// Matrix coalgebra: Δe_ij = Σ_k e_ik⊗e_kj, ε e_ij = δ_ij.
pub fn matrix_coalgebra(field: Field, n: usize) -> Coalgebra {
    let labels: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
        .collect();
    let space = Space::new(format!("Mc{n}"), labels).unwrap();
    let idx = |i: usize, j: usize| i * n + j;
    let comult = comult_from_table(field, &space, |b| {
        let (i, j) = (b / n, b % n);
        (0..n).map(|k| (idx(i, k), idx(k, j), 1)).collect()
    });
    let eps: Vec<i64> = (0..n * n).map(|b| if b / n == b % n { 1 } else { 0 }).collect();
    let counit = functional(field, &space, &eps);
    Coalgebra::new(space, comult, Some(counit)).unwrap()
}

/// Two-dimensional coalgebra with a grouplike b0 and a primitive-style b1:
/// Δb1 = b0⊗b1 + b1⊗b0.
pub fn divided_power(field: Field) -> Coalgebra {
    let space = Space::numbered("P2", "b", 2);
    let comult = comult_from_table(field, &space, |i| match i {
        0 => vec![(0, 0, 1)],
        _ => vec![(0, 1, 1), (1, 0, 1)],
    });
    let counit = functional(field, &space, &[1, 0]);
    Coalgebra::new(space, comult, Some(counit)).unwrap()
}

/// The ground field as a one-dimensional coalgebra.
pub fn ground_field_coalgebra(field: Field) -> Coalgebra {
    let space = Space::new("K", vec!["1".into()]).unwrap();
    let comult = comult_from_table(field, &space, |_| vec![(0, 0, 1)]);
    let counit = functional(field, &space, &[1]);
    Coalgebra::new(space, comult, Some(counit)).unwrap()
}

/// One-dimensional non-counital coalgebra with Δd = d⊗d; the smallest firm
/// coalgebra.
pub fn firm_point(field: Field) -> Coalgebra {
    let space = Space::numbered("D1", "d", 1);
    let comult = comult_from_table(field, &space, |_| vec![(0, 0, 1)]);
    Coalgebra::new(space, comult, None).unwrap()
}

/// The ground field as a one-dimensional algebra.
pub fn ground_field_algebra(field: Field) -> Algebra {
    let space = Space::new("K", vec!["1".into()]).unwrap();
    let mult = mult_from_table(field, &space, |_, _| vec![(0, 1)]);
    let unit = vector(field, &space, &[1]);
    Algebra::new(space, mult, unit).unwrap()
}

/// Group algebra of Z/2: basis {1, g}, g² = 1.
pub fn group_algebra_z2(field: Field) -> Algebra {
    let space = Space::new("kZ2", vec!["1".into(), "g".into()]).unwrap();
    let mult = mult_from_table(field, &space, |i, j| vec![((i + j) % 2, 1)]);
    let unit = vector(field, &space, &[1, 0]);
    Algebra::new(space, mult, unit).unwrap()
}

/// Dual numbers k[t]/(t²).
pub fn dual_numbers(field: Field) -> Algebra {
    let space = Space::new("k[t]", vec!["1".into(), "t".into()]).unwrap();
    let mult = mult_from_table(field, &space, |i, j| if i + j < 2 { vec![(i + j, 1)] } else { vec![] });
    let unit = vector(field, &space, &[1, 0]);
    Algebra::new(space, mult, unit).unwrap()
}

/// Full matrix algebra M_n(k).
pub fn matrix_algebra(field: Field, n: usize) -> Algebra {
    let labels: Vec<String> = (0..n)
        .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
        .collect();
    let space = Space::new(format!("M{n}"), labels).unwrap();
    let mult = mult_from_table(field, &space, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, 1)]
        } else {
            vec![]
        }
    });
    let one: Vec<i64> = (0..n * n).map(|b| if b / n == b % n { 1 } else { 0 }).collect();
    let unit = vector(field, &space, &one);
    Algebra::new(space, mult, unit).unwrap()
}

/// Upper triangular 2x2 matrices, basis {e11, e12, e22}. Hereditary, not
/// self-injective; the standard source of non-principal behaviour.
pub fn upper_triangular_2(field: Field) -> Algebra {
    let space = Space::new("T2", vec!["e11".into(), "e12".into(), "e22".into()]).unwrap();
    let coords = [(0usize, 0usize), (0, 1), (1, 1)];
    let index = |r: usize, c: usize| coords.iter().position(|&p| p == (r, c));
    let mult = mult_from_table(field, &space, |a, b| {
        let (i, j) = coords[a];
        let (k, l) = coords[b];
        if j == k {
            index(i, l).map(|t| (t, 1)).into_iter().collect()
        } else {
            vec![]
        }
    });
    let unit = vector(field, &space, &[1, 0, 1]);
    Algebra::new(space, mult, unit).unwrap()
}

/// Sweedler's four-dimensional algebra: basis {1, g, x, gx} with g² = 1,
/// x² = 0, xg = -gx.
pub fn sweedler_algebra(field: Field) -> Algebra {
    let space = Space::new("H4", vec!["1".into(), "g".into(), "x".into(), "gx".into()]).unwrap();
    let mult = mult_from_table(field, &space, |i, j| match (i, j) {
        (0, j) => vec![(j, 1)],
        (i, 0) => vec![(i, 1)],
        (1, 1) => vec![(0, 1)],
        (1, 2) => vec![(3, 1)],
        (1, 3) => vec![(2, 1)],
        (2, 1) => vec![(3, -1)],
        (3, 1) => vec![(2, -1)],
        _ => vec![], // products of two odd elements vanish
    });
    let unit = vector(field, &space, &[1, 0, 0, 0]);
    Algebra::new(space, mult, unit).unwrap()
}

/// Sweedler's four-dimensional coalgebra: Δg = g⊗g, Δx = x⊗1 + g⊗x,
/// Δ(gx) = gx⊗g + 1⊗gx.
pub fn sweedler_coalgebra(field: Field) -> Coalgebra {
    let space = Space::new("H4", vec!["1".into(), "g".into(), "x".into(), "gx".into()]).unwrap();
    let comult = comult_from_table(field, &space, |i| match i {
        0 => vec![(0, 0, 1)],
        1 => vec![(1, 1, 1)],
        2 => vec![(2, 0, 1), (1, 2, 1)],
        _ => vec![(3, 1, 1), (0, 3, 1)],
    });
    let counit = functional(field, &space, &[1, 1, 0, 0]);
    Coalgebra::new(space, comult, Some(counit)).unwrap()
}

/// Antipode of the Sweedler Hopf algebra: S(g) = g, S(x) = -gx, S(gx) = x.
pub fn sweedler_antipode(field: Field) -> LinMap {
    let space = sweedler_algebra(field).space;
    let m = Matrix::from_i64(
        field,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
    );
    LinMap::new(space.clone(), space, m)
}

/// Inverse antipode: S⁻¹(x) = gx, S⁻¹(gx) = -x.
pub fn sweedler_antipode_inv(field: Field) -> LinMap {
    let space = sweedler_algebra(field).space;
    let m = Matrix::from_i64(
        field,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]],
    );
    LinMap::new(space.clone(), space, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_compatibility_of_sweedler_tables() {
        // Δ and ε are compatible with the product, and the antipode
        // satisfies μ∘(S⊗id)∘Δ = η∘ε = μ∘(id⊗S)∘Δ.
        let f = Field::Rationals;
        let a = sweedler_algebra(f);
        let c = sweedler_coalgebra(f);
        assert!(a.check().all_passed());
        assert!(c.check().all_passed());
        let s = sweedler_antipode(f);
        let id = a.identity_map();
        let lhs = a.mult.compose(&s.tensor(&id)).compose(&c.comult);
        let rhs = a.unit.compose(c.counit());
        assert!(lhs.same_matrix(&rhs));
        let lhs2 = a.mult.compose(&id.tensor(&s)).compose(&c.comult);
        assert!(lhs2.same_matrix(&rhs));
        let sinv = sweedler_antipode_inv(f);
        assert!(s.compose(&sinv).matrix == Matrix::identity(f, 4));
        assert!(sinv.compose(&s).matrix == Matrix::identity(f, 4));
    }

    #[test]
    fn comultiplication_of_sweedler_is_multiplicative() {
        let f = Field::Rationals;
        let a = sweedler_algebra(f);
        let c = sweedler_coalgebra(f);
        let n = 4;
        // swap the middle factors of H⊗H⊗H⊗H
        let dim = n * n * n * n;
        let mut sw = Matrix::zeros(f, dim, dim);
        for a1 in 0..n {
            for b1 in 0..n {
                for a2 in 0..n {
                    for b2 in 0..n {
                        let src = ((a1 * n + b1) * n + a2) * n + b2;
                        let dst = ((a1 * n + a2) * n + b1) * n + b2;
                        sw.set(dst, src, f.one());
                    }
                }
            }
        }
        let hh = a.space.tensor(&a.space);
        let big = hh.tensor(&hh);
        let swap = LinMap::new(big.clone(), big, sw);
        let lhs = c.comult.compose(&a.mult);
        let rhs = a.mult.tensor(&a.mult).compose(&swap).compose(&c.comult.tensor(&c.comult));
        assert!(lhs.first_difference(&rhs).is_none());
    }
}
