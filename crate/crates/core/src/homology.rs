//! Minimal projective resolutions, Ext and Tor, extension realization and
//! homological dimensions.

use std::fmt;

use crate::comma::Bimodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::module::{
    combine, coordinates, cokernel, extend, factor_through_epi, factor_through_mono, hom_space_unchecked, kernel,
    lift, projective_cover, Module, Morphism, Projective,
};

/// `0 -> syzygy -> cover -> module -> 0` with `cover` a projective cover.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub module: Module,
    pub cover: Projective,
    pub epi: Morphism,
    pub syzygy: Module,
    pub inclusion: Morphism,
}

pub fn presentation(m: &Module) -> Presentation {
    let pc = projective_cover(m);
    let (syzygy, inclusion) = kernel(&pc.epi);
    Presentation { module: m.clone(), cover: pc.projective, epi: pc.epi, syzygy, inclusion }
}

impl Presentation {
    /// Direct sum of presentations, summand by summand.
    pub fn direct_sum(parts: &[Presentation]) -> Presentation {
        let alg = parts[0].module.algebra().clone();
        let module = Module::direct_sum_all(&alg, &parts.iter().map(|p| p.module.clone()).collect::<Vec<_>>());
        let gens: Vec<usize> = parts.iter().flat_map(|p| p.cover.gens.iter().copied()).collect();
        let cover = Projective::new(&alg, gens);
        let syzygy = Module::direct_sum_all(&alg, &parts.iter().map(|p| p.syzygy.clone()).collect::<Vec<_>>());
        let epi = Morphism::direct_sum(&parts.iter().map(|p| p.epi.clone()).collect::<Vec<_>>())
            .with_source(cover.module.clone())
            .with_target(module.clone());
        let inclusion = Morphism::direct_sum(&parts.iter().map(|p| p.inclusion.clone()).collect::<Vec<_>>())
            .with_source(syzygy.clone())
            .with_target(cover.module.clone());
        Presentation { module, cover, epi, syzygy, inclusion }
    }
}

/// A minimal projective resolution, truncated.
///
/// `terms[i]` presents `Ω^i`, so `P_i = terms[i].cover` and
/// `Ω^{i+1} = terms[i].syzygy`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Module,
    pub terms: Vec<Presentation>,
}

impl Resolution {
    /// Whether the resolution terminated (last syzygy is zero).
    pub fn is_finite(&self) -> bool {
        self.terms.last().is_some_and(|t| t.syzygy.is_zero())
    }

    pub fn projective(&self, i: usize) -> &Projective {
        &self.terms[i].cover
    }

    /// `d_i : P_i -> P_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Morphism {
        self.terms[i].epi.then(&self.terms[i - 1].inclusion)
    }

    /// `Ω^i`, zero past the end of a finite resolution.
    pub fn syzygy(&self, i: usize) -> Option<Module> {
        if i == 0 {
            return Some(self.module.clone());
        }
        match self.terms.get(i - 1) {
            Some(t) => Some(t.syzygy.clone()),
            None if self.is_finite() => Some(Module::zero(self.module.algebra())),
            None => None,
        }
    }

    /// Exactness at every spot, checked by ranks.
    pub fn verify(&self) -> bool {
        self.terms.iter().all(|t| {
            let ranks_ok = t.epi.is_epi() && t.inclusion.is_mono() && t.inclusion.then(&t.epi).is_zero();
            let dims_ok = t
                .cover
                .module
                .dims()
                .iter()
                .zip(t.syzygy.dims())
                .zip(t.module.dims())
                .all(|((p, k), m)| *p == k + m);
            ranks_ok && dims_ok
        })
    }
}

/// Resolution with `length + 1` presentations (or fewer if it terminates).
pub fn projective_resolution(m: &Module, length: usize) -> Resolution {
    let mut terms: Vec<Presentation> = Vec::new();
    let mut current = m.clone();
    for _ in 0..=length {
        let p = presentation(&current);
        let done = p.syzygy.is_zero();
        current = p.syzygy.clone();
        terms.push(p);
        if done {
            break;
        }
    }
    Resolution { module: m.clone(), terms }
}

/// `Ω^i(m)`.
pub fn syzygy(m: &Module, i: usize) -> Module {
    if i == 0 {
        return m.clone();
    }
    projective_resolution(m, i - 1).syzygy(i).expect("resolution computed far enough")
}

/// `Ext^i(m, n)` with cocycles represented on `Ω^i(m)`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub degree: usize,
    pub syzygy: Module,
    pub target: Module,
    /// Basis representatives of the quotient.
    pub cocycles: Vec<Morphism>,
    hom_basis: Vec<Morphism>,
    /// Coboundaries in hom-basis coordinates, followed by the chosen
    /// complement directions.
    solve_basis: Matrix,
    n_coboundary: usize,
}

impl ExtGroup {
    pub fn dim(&self) -> usize {
        self.cocycles.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cocycles.is_empty()
    }

    /// Coordinates of the class of a cocycle `Ω^i -> n` in the cocycle basis.
    pub fn class_coordinates(&self, c: &Morphism) -> Vec<Scalar> {
        if self.cocycles.is_empty() {
            return Vec::new();
        }
        let x = coordinates(&self.hom_basis, c).expect("not a morphism from the syzygy");
        let f = c.source().field();
        let rhs = Matrix::from_columns(f, x.len(), &[x]);
        let sol = self.solve_basis.solve(&rhs).expect("hom basis spans");
        sol.column(0)[self.n_coboundary..].to_vec()
    }

    pub fn is_coboundary(&self, c: &Morphism) -> bool {
        self.class_coordinates(c).iter().all(Scalar::is_zero)
    }

    /// The cocycle with given coordinates.
    pub fn element(&self, coeffs: &[Scalar]) -> Morphism {
        combine(&self.cocycles, coeffs, &self.syzygy, &self.target)
    }
}

fn ext_group(degree: usize, syz: &Module, restrict: Option<(&Module, &Morphism)>, n: &Module) -> ExtGroup {
    let f = n.field();
    let hom_basis = hom_space_unchecked(syz, n);
    let d = hom_basis.len();
    let mut cob_cols: Vec<Vec<Scalar>> = Vec::new();
    if let Some((p, incl)) = restrict {
        for g in hom_space_unchecked(p, n) {
            cob_cols.push(coordinates(&hom_basis, &incl.then(&g)).expect("restriction lands in Hom"));
        }
    }
    let cob = Matrix::from_columns(f, d, &cob_cols).column_space();
    let comp = cob.complement_indices();
    let id = Matrix::identity(f, d);
    let solve_basis = cob.hstack(&id.select_columns(&comp));
    let cocycles = comp.iter().map(|&j| hom_basis[j].clone()).collect();
    ExtGroup { degree, syzygy: syz.clone(), target: n.clone(), cocycles, hom_basis, solve_basis, n_coboundary: cob.cols() }
}

/// `Ext^i` read off a precomputed resolution (which must reach `Ω^i`).
pub fn ext_from_resolution(res: &Resolution, n: &Module, i: usize) -> ExtGroup {
    if i == 0 {
        return ext_group(0, &res.module, None, n);
    }
    match res.terms.get(i - 1) {
        Some(t) => ext_group(i, &t.syzygy, Some((&t.cover.module, &t.inclusion)), n),
        None => {
            assert!(res.is_finite(), "resolution too short for degree {i}");
            ext_group(i, &Module::zero(n.algebra()), None, n)
        }
    }
}

pub fn ext(m: &Module, n: &Module, i: usize) -> Result<ExtGroup> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let res = projective_resolution(m, i.saturating_sub(1));
    Ok(ext_from_resolution(&res, n, i))
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> Result<usize> {
    Ok(ext(m, n, i)?.dim())
}

/// `0 -> left --iota--> middle --pi--> right -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub iota: Morphism,
    pub pi: Morphism,
}

impl ShortExact {
    pub fn is_exact(&self) -> bool {
        self.iota.commutes()
            && self.pi.commutes()
            && self.iota.is_mono()
            && self.pi.is_epi()
            && self.iota.then(&self.pi).is_zero()
            && self
                .middle
                .dims()
                .iter()
                .zip(self.left.dims())
                .zip(self.right.dims())
                .all(|((m, l), r)| *m == l + r)
    }

    /// Split iff `iota` has a retraction.
    pub fn is_split(&self) -> bool {
        extend(&self.iota, &Morphism::identity(&self.left)).is_some()
    }
}

impl fmt::Display for ShortExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0 -> {} -> {} -> {} -> 0", self.left, self.middle, self.right)
    }
}

/// The pushout of `Ω ↪ P_0` along the cocycle `c: Ω -> A`.
pub fn realize_extension(p: &Presentation, c: &Morphism) -> ShortExact {
    let a = c.target().clone();
    let alg = a.algebra().clone();
    let parts = [p.cover.module.clone(), a.clone()];
    let sum = Module::direct_sum_all(&alg, &parts);
    let neg = c.scale(&alg.field().from_i64(-1));
    let rel = Morphism::vcat(&[p.inclusion.clone(), neg], &sum);
    let (e, proj) = cokernel(&rel);
    let iota = Morphism::injection(&sum, &parts, 1).then(&proj);
    let to_c = Morphism::hcat(&[p.epi.clone(), Morphism::zero(&a, &p.module)], &sum);
    let pi = factor_through_epi(&proj, &to_c);
    ShortExact { left: a, middle: e, right: p.module.clone(), iota, pi }
}

/// A cocycle `Ω -> A` representing the class of the sequence.
pub fn class_of(p: &Presentation, ses: &ShortExact) -> Morphism {
    let g = lift(&ses.pi, &p.epi).expect("projective cover lifts");
    let restricted = p.inclusion.then(&g);
    factor_through_mono(&ses.iota, &restricted).expect("restriction lands in the kernel")
}

#[derive(Clone, Debug)]
pub struct UniversalExtension {
    pub ses: ShortExact,
    /// `multiplicities[i] = dim Ext^1(targets[i], k)`.
    pub multiplicities: Vec<usize>,
    pub targets: Vec<Module>,
}

/// `0 -> k -> W -> ⊕ t_i^{d_i} -> 0` realizing all of `Ext^1(t_i, k)` at once.
pub fn universal_extension(targets: &[Module], k: &Module) -> Result<UniversalExtension> {
    let alg = k.algebra().clone();
    let mut pres = Vec::new();
    let mut cocycles = Vec::new();
    let mut multiplicities = Vec::new();
    let mut groups = Vec::new();
    for t in targets {
        if !t.same_algebra(k) {
            return Err(Error::AlgebraMismatch);
        }
        let p = presentation(t);
        let e = ext_group(1, &p.syzygy, Some((&p.cover.module, &p.inclusion)), k);
        multiplicities.push(e.dim());
        for c in &e.cocycles {
            pres.push(p.clone());
            cocycles.push(c.clone());
        }
        groups.push((p, e));
    }
    if pres.is_empty() {
        let ses = ShortExact {
            left: k.clone(),
            middle: k.clone(),
            right: Module::zero(&alg),
            iota: Morphism::identity(k),
            pi: Morphism::zero(k, &Module::zero(&alg)),
        };
        return Ok(UniversalExtension { ses, multiplicities, targets: targets.to_vec() });
    }
    let sum_pres = Presentation::direct_sum(&pres);
    let c = Morphism::hcat(&cocycles, &sum_pres.syzygy);
    let ses = realize_extension(&sum_pres, &c);
    // every class of Ext^1(t_i, k) dies in Ext^1(t_i, W)
    for (p, e) in &groups {
        let ew = ext_group(1, &p.syzygy, Some((&p.cover.module, &p.inclusion)), &ses.middle);
        for c in &e.cocycles {
            assert!(ew.is_coboundary(&c.then(&ses.iota)), "universal extension failed to kill a class");
        }
    }
    Ok(UniversalExtension { ses, multiplicities, targets: targets.to_vec() })
}

/// `Tor_i(m, n)` for a right module `m` given as a bimodule over the
/// trivial algebra on the left.
pub fn tor(m: &Bimodule, n: &Module, i: usize) -> Result<usize> {
    if !Algebra::same(m.right(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let res = projective_resolution(n, i + 1);
    let term = |j: usize| -> Option<Module> { res.terms.get(j).map(|t| t.cover.module.clone()) };
    let dim_t = |p: &Module| m.tensor(p).total_dim();
    let rank_d = |j: usize| -> usize {
        if j == 0 || res.terms.get(j).is_none() {
            return 0;
        }
        m.tensor_morphism(&res.differential(j)).maps().iter().map(Matrix::rank).sum()
    };
    if i == 0 {
        return Ok(m.tensor(n).total_dim());
    }
    match term(i) {
        None => Ok(0),
        Some(p) => Ok(dim_t(&p) - rank_d(i) - rank_d(i + 1)),
    }
}

use crate::algebra::Algebra;

/// A homological dimension: exact, or known only to exceed the cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomDim {
    Finite(usize),
    Exceeds(usize),
}

impl HomDim {
    pub fn at_most(&self, bound: usize) -> bool {
        matches!(self, HomDim::Finite(d) if *d <= bound)
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(d) => write!(f, "{d}"),
            HomDim::Exceeds(c) => write!(f, ">{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimKind {
    Projective,
    Injective,
}

pub fn projective_dimension(m: &Module, cap: usize) -> HomDim {
    if m.is_zero() {
        return HomDim::Finite(0);
    }
    let res = projective_resolution(m, cap);
    if res.is_finite() {
        HomDim::Finite(res.terms.len() - 1)
    } else {
        HomDim::Exceeds(cap)
    }
}

/// Injective dimension: projective dimension of the dual over the opposite
/// algebra when the presentation is monomial; otherwise the largest `i` with
/// `Ext^i(simple, m) != 0`.
pub fn injective_dimension(m: &Module, cap: usize) -> Result<HomDim> {
    if m.algebra().as_monomial().is_some() {
        return Ok(projective_dimension(&m.dual()?, cap));
    }
    injective_dimension_by_simples(m, cap)
}

pub fn injective_dimension_by_simples(m: &Module, cap: usize) -> Result<HomDim> {
    let alg = m.algebra();
    let resolutions: Vec<Resolution> =
        (0..alg.n_vertices()).map(|v| projective_resolution(&Module::simple(alg, v), cap + 1)).collect();
    let mut last = 0;
    for i in 1..=cap + 1 {
        if resolutions.iter().any(|r| !ext_from_resolution(r, m, i).is_zero()) {
            if i == cap + 1 {
                return Ok(HomDim::Exceeds(cap));
            }
            last = i;
        }
    }
    Ok(HomDim::Finite(last))
}

pub fn homological_dimension(m: &Module, kind: DimKind, cap: usize) -> Result<HomDim> {
    match kind {
        DimKind::Projective => Ok(projective_dimension(m, cap)),
        DimKind::Injective => injective_dimension(m, cap),
    }
}

/// Flat (= projective) dimension of a right module: the largest `i` with
/// `Tor_i(m, simple) != 0`.
pub fn flat_dimension(m: &Bimodule, cap: usize) -> Result<HomDim> {
    let s = m.right().clone();
    let mut last = 0;
    for i in 1..=cap + 1 {
        let mut nonzero = false;
        for v in 0..s.n_vertices() {
            if tor(m, &Module::simple(&s, v), i)? != 0 {
                nonzero = true;
                break;
            }
        }
        if nonzero {
            if i == cap + 1 {
                return Ok(HomDim::Exceeds(cap));
            }
            last = i;
        }
    }
    Ok(HomDim::Finite(last))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_isomorphic;
    use crate::field::Field;
    use crate::quiver::zoo;

    fn alg(m: crate::quiver::MonomialAlgebra) -> std::sync::Arc<Algebra> {
        Algebra::from_monomial(&m)
    }

    #[test]
    fn resolutions() {
        let f = Field::prime(2);
        let a = alg(zoo::ka2(f));
        let r = projective_resolution(&Module::simple(&a, 1), 4);
        assert!(r.verify());
        assert_eq!(r.terms.len(), 2);
        assert_eq!(projective_dimension(&Module::simple(&a, 1), 4), HomDim::Finite(1));
        let l = alg(zoo::l3(f));
        assert_eq!(projective_dimension(&Module::simple(&l, 2), 5), HomDim::Finite(2));
        let n = alg(zoo::n2(f));
        assert_eq!(projective_dimension(&Module::simple(&n, 0), 7), HomDim::Exceeds(7));
        let rn = projective_resolution(&Module::simple(&n, 0), 3);
        for i in 1..=3 {
            let d = rn.differential(i);
            assert_eq!(d.maps()[0], Matrix::from_rows(f, &[vec![0, 0], vec![1, 0]]));
        }
    }

    #[test]
    fn ext_and_realization() {
        let f = Field::prime(2);
        let a = alg(zoo::ka2(f));
        let s1 = Module::simple(&a, 0);
        let s2 = Module::simple(&a, 1);
        let e = ext(&s2, &s1, 1).unwrap();
        assert_eq!(e.dim(), 1);
        assert_eq!(ext_dim(&s1, &s2, 1).unwrap(), 0);
        assert_eq!(ext_dim(&Module::projective(&a, 1), &s1, 1).unwrap(), 0);
        let p = presentation(&s2);
        let ses = realize_extension(&p, &e.cocycles[0]);
        assert!(ses.is_exact());
        assert!(is_isomorphic(&ses.middle, &Module::projective(&a, 1)).unwrap());
        let back = class_of(&p, &ses);
        assert_eq!(e.class_coordinates(&back), vec![f.one()]);
        let split = realize_extension(&p, &Morphism::zero(&p.syzygy, &s1));
        assert!(split.is_split());
    }

    #[test]
    fn universal_extension_of_simple() {
        let f = Field::prime(2);
        let a = alg(zoo::ka2(f));
        let s1 = Module::simple(&a, 0);
        let s2 = Module::simple(&a, 1);
        let u = universal_extension(&[s2], &s1).unwrap();
        assert!(is_isomorphic(&u.ses.middle, &Module::projective(&a, 1)).unwrap());
        let none = universal_extension(&[], &s1).unwrap();
        assert_eq!(none.ses.middle, s1);
    }

    #[test]
    fn injective_dimension_two_ways() {
        let f = Field::prime(2);
        let l = alg(zoo::l3(f));
        for v in 0..3 {
            let s = Module::simple(&l, v);
            assert_eq!(injective_dimension(&s, 5).unwrap(), injective_dimension_by_simples(&s, 5).unwrap());
        }
    }
}
