//! Coalgebras by structure constants: axiom checks, coalgebra maps,
//! coideals and quotients, and firmness for the non-counital case.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::map::LinMap;
use crate::report::Report;
use crate::space::Space;
use crate::subspace::{quotient, Embedding, QuotientData};

/// A coalgebra `(C, Δ, ε)`. The counit is optional: non-counital coalgebras
/// appear as the base of firm (infinite) contexts.
#[derive(Clone, PartialEq, Debug)]
pub struct Coalgebra {
    pub space: Space,
    pub comult: LinMap,
    pub counit: Option<LinMap>,
}

impl Coalgebra {
    pub fn new(space: Space, comult: LinMap, counit: Option<LinMap>) -> Result<Coalgebra> {
        let d = space.dim();
        if comult.domain.dim() != d || comult.codomain.dim() != d * d {
            return Err(Error::ShapeMismatch(format!(
                "comultiplication of {} must be a {}x{} matrix",
                space.name,
                d * d,
                d
            )));
        }
        if let Some(e) = &counit {
            if e.domain.dim() != d || e.codomain.dim() != 1 {
                return Err(Error::ShapeMismatch(format!("counit of {} must be a 1x{d} matrix", space.name)));
            }
        }
        Ok(Coalgebra { space, comult, counit })
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_counital(&self) -> bool {
        self.counit.is_some()
    }

    /// The counit; panics when absent. Callers on the non-counital path
    /// branch on `is_counital` first.
    pub fn counit(&self) -> &LinMap {
        self.counit.as_ref().expect("coalgebra has no counit")
    }

    pub fn identity_map(&self) -> LinMap {
        LinMap::identity(self.field(), &self.space)
    }

    /// Coassociativity and (when present) the counit laws.
    pub fn check(&self) -> Report {
        let mut rep = Report::new(format!("coalgebra {}", self.space.name));
        let f = self.field();
        let id = self.identity_map();
        let lhs = self.comult.tensor(&id).compose(&self.comult);
        let rhs = id.tensor(&self.comult).compose(&self.comult);
        rep.check_eq("Coassociativity", &lhs, &rhs);
        match &self.counit {
            Some(eps) => {
                let left = LinMap::unit_left(f, &self.space).compose(&eps.tensor(&id)).compose(&self.comult);
                rep.check_eq("CounitLaw (left)", &left, &id);
                let right = LinMap::unit_right(f, &self.space).compose(&id.tensor(eps)).compose(&self.comult);
                rep.check_eq("CounitLaw (right)", &right, &id);
            }
            None => rep.push(crate::report::Check::skipped("CounitLaw", "non-counital")),
        }
        rep
    }
}

/// A linear map between coalgebras, checked to respect comultiplication and
/// counits.
#[derive(Clone, Debug)]
pub struct CoalgebraMap {
    pub source: Coalgebra,
    pub target: Coalgebra,
    pub map: LinMap,
}

impl CoalgebraMap {
    /// Builds and verifies; rejects maps that fail the compatibility checks.
    pub fn new(source: Coalgebra, target: Coalgebra, map: LinMap) -> Result<CoalgebraMap> {
        let cm = CoalgebraMap { source, target, map };
        let rep = cm.check();
        if !rep.all_passed() {
            let c = rep.first_failure().expect("failure exists");
            return Err(Error::NotACoalgebraMap(format!(
                "{} (witness {})",
                c.name,
                c.witness.clone().unwrap_or_default()
            )));
        }
        Ok(cm)
    }

    pub fn check(&self) -> Report {
        let mut rep = Report::new(format!(
            "coalgebra map {} -> {}",
            self.source.space.name, self.target.space.name
        ));
        let lhs = self.map.tensor(&self.map).compose(&self.source.comult);
        let rhs = self.target.comult.compose(&self.map);
        rep.check_eq("RespectsComultiplication", &lhs, &rhs);
        match (&self.source.counit, &self.target.counit) {
            (Some(es), Some(et)) => {
                rep.check_eq("RespectsCounit", &et.compose(&self.map), es);
            }
            _ => rep.push(crate::report::Check::skipped("RespectsCounit", "non-counital side")),
        }
        rep
    }

    pub fn is_surjective(&self) -> bool {
        self.map.rank() == self.target.space.dim()
    }
}

/// Coideal decision: `Δ(I) ⊆ I⊗C + C⊗I` and `ε(I) = 0`, as exact
/// column-space containments. Returns the witness basis label on failure.
pub fn is_coideal(c: &Coalgebra, i: &Embedding) -> std::result::Result<(), String> {
    assert_eq!(i.ambient.dim(), c.dim(), "coideal ambient mismatch");
    let id = c.identity_map();
    if let Some(eps) = &c.counit {
        let on_i = eps.compose(&i.include);
        if !on_i.is_zero() {
            let w = (0..i.dim())
                .find(|&j| !on_i.matrix.get(0, j).is_zero())
                .map(|j| i.sub.label(j).to_string())
                .unwrap_or_default();
            return Err(format!("counit does not vanish at {w}"));
        }
    }
    // I⊗C + C⊗I inside C⊗C
    let ic = Embedding::image_of(&i.include.tensor(&id));
    let ci = Embedding::image_of(&id.tensor(&i.include));
    let both = ic.sum(&ci);
    let delta_on_i = c.comult.compose(&i.include);
    for j in 0..i.dim() {
        let col = delta_on_i.matrix.column(j);
        if !both.contains_vector(&col) {
            return Err(format!("comultiplication leaves I⊗C + C⊗I at {}", i.sub.label(j)));
        }
    }
    Ok(())
}

/// A quotient coalgebra together with the projection map and the chosen
/// section data.
#[derive(Clone, Debug)]
pub struct QuotientCoalgebra {
    pub coalgebra: Coalgebra,
    pub projection: CoalgebraMap,
    pub data: QuotientData,
}

/// Quotient of a coalgebra by a coideal. Fails with `NotACoideal` otherwise;
/// the induced structure is verified to descend.
pub fn quotient_coalgebra(c: &Coalgebra, i: &Embedding) -> Result<QuotientCoalgebra> {
    is_coideal(c, i).map_err(Error::NotACoideal)?;
    if c.is_counital() && i.dim() == c.dim() {
        return Err(Error::NotACoideal("counit cannot vanish on all of C".into()));
    }
    let data = quotient(&c.space, i);
    let pp = data.projection.tensor(&data.projection);
    let comult_q = pp.compose(&c.comult).compose(&data.section);
    // descent: the induced map does not depend on the chosen section
    let descended = comult_q.compose(&data.projection);
    let direct = pp.compose(&c.comult);
    if let Some(w) = descended.first_difference(&direct) {
        return Err(Error::NotACoideal(format!("comultiplication does not descend at {w}")));
    }
    let counit_q = match &c.counit {
        Some(eps) => {
            let eq = eps.compose(&data.section);
            let desc = eq.compose(&data.projection);
            if let Some(w) = desc.first_difference(eps) {
                return Err(Error::NotACoideal(format!("counit does not descend at {w}")));
            }
            Some(eq)
        }
        None => None,
    };
    let coalgebra = Coalgebra::new(data.space.clone(), comult_q, counit_q)?;
    let projection = CoalgebraMap::new(c.clone(), coalgebra.clone(), data.projection.clone())?;
    Ok(QuotientCoalgebra { coalgebra, projection, data })
}

/// Firmness data: the self-cotensor subspace and the inverse of the
/// corestricted comultiplication.
#[derive(Clone, Debug)]
pub struct FirmData {
    /// `D□_D D` inside `D⊗D`.
    pub cot: Embedding,
    /// Comultiplication corestricted to the cotensor.
    pub comult_cor: LinMap,
    /// Its inverse `D□_D D -> D`.
    pub nabla: LinMap,
}

/// Decides whether the comultiplication is an isomorphism onto the
/// self-cotensor product `D□_D D`, and returns the inverse when it is.
pub fn firmness(d: &Coalgebra) -> Option<FirmData> {
    let id = d.identity_map();
    let diff = d.comult.tensor(&id).sub(&id.tensor(&d.comult));
    let cot = Embedding::kernel_of(&diff);
    let comult_cor = cot.corestrict(&d.comult).ok()?;
    let nabla = comult_cor.inverse()?;
    Some(FirmData { cot, comult_cor, nabla })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn q() -> Field {
        Field::Rationals
    }

    /// Grouplike coalgebra on n points: Δg_i = g_i⊗g_i, εg_i = 1.
    pub fn grouplike(field: Field, n: usize) -> Coalgebra {
        let space = Space::numbered(format!("C{n}"), "g", n);
        let mut d = Matrix::zeros(field, n * n, n);
        for i in 0..n {
            d.set(i * n + i, i, field.one());
        }
        let mut e = Matrix::zeros(field, 1, n);
        for i in 0..n {
            e.set(0, i, field.one());
        }
        let comult = LinMap::new(space.clone(), space.tensor(&space), d);
        let counit = LinMap::new(space.clone(), Space::unit(), e);
        Coalgebra::new(space, comult, Some(counit)).unwrap()
    }

    /// Matrix coalgebra on n^2 basis vectors e_ij: Δe_ij = Σ_k e_ik⊗e_kj,
    /// ε e_ij = δ_ij.
    pub fn matrix_coalgebra(field: Field, n: usize) -> Coalgebra {
        let labels: Vec<String> = (0..n)
            .flat_map(|i| (0..n).map(move |j| format!("e{}{}", i + 1, j + 1)))
            .collect();
        let space = Space::new(format!("Mc{n}"), labels).unwrap();
        let dim = n * n;
        let mut d = Matrix::zeros(field, dim * dim, dim);
        let idx = |i: usize, j: usize| i * n + j;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    d.set(idx(i, k) * dim + idx(k, j), idx(i, j), field.one());
                }
            }
        }
        let mut e = Matrix::zeros(field, 1, dim);
        for i in 0..n {
            e.set(0, idx(i, i), field.one());
        }
        let comult = LinMap::new(space.clone(), space.tensor(&space), d);
        let counit = LinMap::new(space.clone(), Space::unit(), e);
        Coalgebra::new(space, comult, Some(counit)).unwrap()
    }

    #[test]
    fn grouplike_passes() {
        assert!(grouplike(q(), 2).check().all_passed());
    }

    #[test]
    fn matrix_coalgebra_passes() {
        assert!(matrix_coalgebra(q(), 2).check().all_passed());
    }

    #[test]
    fn zero_counit_fails_at_first_grouplike() {
        let mut c = grouplike(q(), 2);
        c.counit = Some(LinMap::zero(q(), &c.space.clone(), &Space::unit()));
        let rep = c.check();
        assert!(!rep.all_passed());
        let fail = rep.first_failure().unwrap();
        assert!(fail.name.starts_with("CounitLaw"));
        assert_eq!(fail.witness.as_deref(), Some("g0"));
    }

    #[test]
    fn zero_is_a_coideal_and_gives_back_c() {
        let c = grouplike(q(), 2);
        let zero = Embedding::from_basis(&c.space, Matrix::zeros(q(), 2, 0));
        let quo = quotient_coalgebra(&c, &zero).unwrap();
        assert_eq!(quo.coalgebra.dim(), 2);
        assert!(quo.coalgebra.check().all_passed());
    }

    #[test]
    fn full_space_is_rejected_for_counital() {
        let c = grouplike(q(), 2);
        let all = Embedding::full(q(), &c.space);
        assert!(quotient_coalgebra(&c, &all).is_err());
    }

    #[test]
    fn matrix_coalgebra_trace_quotient_is_grouplike() {
        // I = span{e12, e21, e11 - e22} is a coideal of Mc(2); the quotient
        // is one-dimensional grouplike.
        let c = matrix_coalgebra(q(), 2);
        let basis = Matrix::from_i64(
            q(),
            &[
                // columns: e12, e21, e11 - e22 in basis order e11,e12,e21,e22
                &[0, 0, 1],
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, -1],
            ],
        );
        let i = Embedding::from_basis(&c.space, basis);
        assert!(is_coideal(&c, &i).is_ok());
        let quo = quotient_coalgebra(&c, &i).unwrap();
        assert_eq!(quo.coalgebra.dim(), 1);
        assert!(quo.coalgebra.check().all_passed());
        // the class is grouplike: Δ[x] = [x]⊗[x], ε[x] = 1
        let b = &quo.coalgebra;
        assert_eq!(b.comult.matrix, Matrix::from_i64(q(), &[&[1]]));
        assert_eq!(b.counit().matrix, Matrix::from_i64(q(), &[&[1]]));
    }

    #[test]
    fn non_coideal_is_rejected() {
        // span{g0} in the grouplike coalgebra has ε(g0) = 1
        let c = grouplike(q(), 2);
        let i = Embedding::from_basis(&c.space, Matrix::from_i64(q(), &[&[1], &[0]]));
        assert!(is_coideal(&c, &i).is_err());
    }

    #[test]
    fn counital_coalgebras_are_firm() {
        let c = grouplike(q(), 2);
        let firm = firmness(&c).unwrap();
        assert_eq!(firm.cot.dim(), 2);
        // ∇ inverts the corestricted comultiplication
        let round = firm.nabla.compose(&firm.comult_cor);
        assert!(round.matrix == Matrix::identity(q(), 2));
    }

    #[test]
    fn one_dim_noncounital_grouplike_is_firm() {
        // D = span{d}, Δd = d⊗d, no counit
        let space = Space::numbered("D", "d", 1);
        let comult = LinMap::new(space.clone(), space.tensor(&space), Matrix::from_i64(q(), &[&[1]]));
        let d = Coalgebra::new(space, comult, None).unwrap();
        assert!(d.check().all_passed());
        assert!(firmness(&d).is_some());
    }

    #[test]
    fn zero_comult_is_not_firm() {
        let space = Space::numbered("D", "d", 1);
        let comult = LinMap::new(space.clone(), space.tensor(&space), Matrix::zeros(q(), 1, 1));
        let d = Coalgebra::new(space, comult, None).unwrap();
        assert!(firmness(&d).is_none());
    }
}
