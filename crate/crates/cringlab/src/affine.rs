//! Exact affine feasibility solving for unknown linear maps.
//!
//! Constraints are supplied as closures that are affine in the unknown map
//! (compositions, tensorings and sums of fixed maps with the unknown). The
//! solver linearizes by evaluating each constraint at the zero map and at
//! every matrix unit, stacks one big exact system, and either returns a
//! solution or a row-combination certificate of inconsistency.

use crate::field::{Field, Scalar};
use crate::map::LinMap;
use crate::matrix::{Matrix, SolveOutcome};
use crate::space::Space;

pub struct Constraint<'a> {
    pub label: String,
    pub expr: Box<dyn Fn(&LinMap) -> LinMap + 'a>,
    pub target: LinMap,
}

pub struct MapSolver<'a> {
    field: Field,
    domain: Space,
    codomain: Space,
    constraints: Vec<Constraint<'a>>,
}

/// Result of a feasibility run: either a map satisfying every constraint
/// exactly, or a certificate naming the inconsistent combination.
pub enum Feasibility {
    Solution(LinMap),
    Infeasible { certificate: Vec<Scalar> },
}

impl Feasibility {
    pub fn solution(self) -> Option<LinMap> {
        match self {
            Feasibility::Solution(m) => Some(m),
            Feasibility::Infeasible { .. } => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Solution(_))
    }
}

impl<'a> MapSolver<'a> {
    pub fn new(field: Field, domain: &Space, codomain: &Space) -> MapSolver<'a> {
        MapSolver { field, domain: domain.clone(), codomain: codomain.clone(), constraints: Vec::new() }
    }

    /// Adds the constraint `expr(U) == target`, where `expr` must be affine
    /// in `U`.
    pub fn constrain(
        &mut self,
        label: impl Into<String>,
        target: LinMap,
        expr: impl Fn(&LinMap) -> LinMap + 'a,
    ) {
        self.constraints.push(Constraint { label: label.into(), expr: Box::new(expr), target });
    }

    /// Solves the stacked system. Every returned map satisfies all
    /// constraints exactly (verified before returning).
    pub fn solve(&self) -> Feasibility {
        let du = self.domain.dim();
        let cu = self.codomain.dim();
        let nunk = du * cu;
        let zero = LinMap::zero(self.field, &self.domain, &self.codomain);

        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        for c in &self.constraints {
            let offset = (c.expr)(&zero);
            let t_rows = offset.codomain.dim();
            let t_cols = offset.domain.dim();
            assert_eq!(t_rows, c.target.codomain.dim(), "constraint {} target shape", c.label);
            assert_eq!(t_cols, c.target.domain.dim(), "constraint {} target shape", c.label);
            // column of the linearized system per unknown entry
            let mut columns: Vec<Matrix> = Vec::with_capacity(nunk);
            for i in 0..cu {
                for j in 0..du {
                    let mut unit = LinMap::zero(self.field, &self.domain, &self.codomain);
                    unit.matrix.set(i, j, self.field.one());
                    let image = (c.expr)(&unit).matrix.sub(&offset.matrix);
                    columns.push(image);
                }
            }
            let resid = c.target.matrix.sub(&offset.matrix);
            for r in 0..t_rows {
                for s in 0..t_cols {
                    let mut row = Vec::with_capacity(nunk);
                    for col in &columns {
                        row.push(col.get(r, s).clone());
                    }
                    rows.push(row);
                    rhs.push(resid.get(r, s).clone());
                }
            }
        }

        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * nunk);
        for row in rows {
            data.extend(row);
        }
        let system = Matrix::new(self.field, nrows, nunk, data);
        match system.solve(&rhs) {
            SolveOutcome::Infeasible(cert) => Feasibility::Infeasible { certificate: cert },
            SolveOutcome::Solution(x) => {
                let mut m = Matrix::zeros(self.field, cu, du);
                for i in 0..cu {
                    for j in 0..du {
                        m.set(i, j, x[i * du + j].clone());
                    }
                }
                let solution = LinMap::new(self.domain.clone(), self.codomain.clone(), m);
                for c in &self.constraints {
                    let got = (c.expr)(&solution);
                    assert!(
                        got.same_matrix(&c.target),
                        "solver postcondition violated for constraint {}",
                        c.label
                    );
                }
                Feasibility::Solution(solution)
            }
        }
    }

    /// Dimension of the solution set of the associated homogeneous system;
    /// `None` when the inhomogeneous system is infeasible. A feasible system
    /// with freedom 0 has a unique solution.
    pub fn solution_freedom(&self) -> Option<usize> {
        if !self.solve().is_feasible() {
            return None;
        }
        let du = self.domain.dim();
        let cu = self.codomain.dim();
        let nunk = du * cu;
        let zero = LinMap::zero(self.field, &self.domain, &self.codomain);
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for c in &self.constraints {
            let offset = (c.expr)(&zero);
            let mut columns: Vec<Matrix> = Vec::with_capacity(nunk);
            for i in 0..cu {
                for j in 0..du {
                    let mut unit = LinMap::zero(self.field, &self.domain, &self.codomain);
                    unit.matrix.set(i, j, self.field.one());
                    columns.push((c.expr)(&unit).matrix.sub(&offset.matrix));
                }
            }
            for r in 0..offset.codomain.dim() {
                for s in 0..offset.domain.dim() {
                    rows.push(columns.iter().map(|col| col.get(r, s).clone()).collect());
                }
            }
        }
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * nunk);
        for row in rows {
            data.extend(row);
        }
        let system = Matrix::new(self.field, nrows, nunk, data);
        Some(nunk - system.rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn solves_a_two_sided_equation() {
        // find U with A∘U = B for invertible A
        let x = Space::numbered("X", "x", 2);
        let a = LinMap::new(x.clone(), x.clone(), Matrix::from_i64(q(), &[&[2, 1], &[1, 1]]));
        let b = LinMap::new(x.clone(), x.clone(), Matrix::from_i64(q(), &[&[1, 0], &[0, 1]]));
        let mut solver = MapSolver::new(q(), &x, &x);
        let a2 = a.clone();
        solver.constrain("A∘U = I", b, move |u| a2.compose(u));
        let u = solver.solve().solution().unwrap();
        assert!(a.compose(&u).matrix == Matrix::identity(q(), 2));
    }

    #[test]
    fn detects_infeasibility() {
        // U = 0 and U = I simultaneously
        let x = Space::numbered("X", "x", 1);
        let mut solver = MapSolver::new(q(), &x, &x);
        solver.constrain("U = 0", LinMap::zero(q(), &x, &x), |u| u.clone());
        solver.constrain("U = I", LinMap::identity(q(), &x), |u| u.clone());
        assert!(!solver.solve().is_feasible());
    }

    #[test]
    fn freedom_counts_free_parameters() {
        let x = Space::numbered("X", "x", 2);
        let mut solver = MapSolver::new(q(), &x, &x);
        // only the trace is pinned: 4 unknowns, 1 equation
        let k = Space::unit();
        let trace_target = LinMap::new(k.clone(), k.clone(), Matrix::from_i64(q(), &[&[5]]));
        solver.constrain("tr U = 5", trace_target, move |u| {
            let t = u.matrix.get(0, 0).add(u.matrix.get(1, 1));
            LinMap::new(Space::unit(), Space::unit(), Matrix::new(q(), 1, 1, vec![t]))
        });
        assert_eq!(solver.solution_freedom(), Some(3));
    }
}
