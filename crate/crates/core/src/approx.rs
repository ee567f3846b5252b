//! Object classes, Ext-orthogonals, cotorsion pairs and special
//! approximations, including their transfer to comma categories.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::comma::{CommaCategory, Triple};
use crate::decompose::{decompose, enumerate_indecomposables, is_indecomposable, is_isomorphic};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::homology::{ext_from_resolution, presentation, projective_resolution, universal_extension, ShortExact};
use crate::matrix::Matrix;
use crate::module::{cokernel, coordinates, hom_space_unchecked, kernel, Module, Morphism};

/// Rounds of universal extensions before a construction gives up.
pub const DEFAULT_ITERATION_CAP: usize = 16;

/// A class of modules, represented by finitely many members; membership
/// means every indecomposable summand is isomorphic to a member (or, for
/// decomposable members, being a finite sum of members).
#[derive(Clone, Debug)]
pub struct ObjectClass {
    algebra: Arc<Algebra>,
    label: String,
    members: Vec<Module>,
    indecomposable: bool,
    /// Asserted by the caller; checked only on request.
    pub extension_closed: bool,
    pub smd_closed: bool,
}

impl ObjectClass {
    /// Zero members are dropped and isomorphic duplicates removed.
    pub fn new(algebra: &Arc<Algebra>, label: &str, members: Vec<Module>) -> Result<ObjectClass> {
        let mut kept: Vec<Module> = Vec::new();
        for m in members {
            if !Algebra::same(m.algebra(), algebra) {
                return Err(Error::AlgebraMismatch);
            }
            if m.is_zero() {
                continue;
            }
            let mut dup = false;
            for k in &kept {
                if is_isomorphic(k, &m)? {
                    dup = true;
                    break;
                }
            }
            if !dup {
                kept.push(m);
            }
        }
        let mut indecomposable = true;
        for m in &kept {
            if !is_indecomposable(m)? {
                indecomposable = false;
                break;
            }
        }
        Ok(ObjectClass {
            algebra: algebra.clone(),
            label: label.to_string(),
            members: kept,
            indecomposable,
            extension_closed: false,
            smd_closed: indecomposable,
        })
    }

    /// All indecomposables up to the given total dimension.
    pub fn all(algebra: &Arc<Algebra>, cap: usize) -> Result<ObjectClass> {
        let mut c = ObjectClass::new(algebra, &format!("all (dim <= {cap})"), enumerate_indecomposables(algebra, cap)?)?;
        c.extension_closed = true;
        Ok(c)
    }

    pub fn projectives(algebra: &Arc<Algebra>) -> ObjectClass {
        let members = (0..algebra.n_vertices()).map(|v| Module::projective(algebra, v)).collect();
        ObjectClass {
            algebra: algebra.clone(),
            label: "projectives".into(),
            members,
            indecomposable: true,
            extension_closed: true,
            smd_closed: true,
        }
    }

    /// Indecomposable injectives; uses duality when available, otherwise
    /// selects the Ext-injective members of `ambient`.
    pub fn injectives(algebra: &Arc<Algebra>, ambient: &[Module]) -> Result<ObjectClass> {
        let members = if algebra.as_monomial().is_some() {
            (0..algebra.n_vertices()).map(|v| Module::injective(algebra, v)).collect::<Result<Vec<_>>>()?
        } else {
            let simples: Vec<Module> = (0..algebra.n_vertices()).map(|v| Module::simple(algebra, v)).collect();
            let table = ext_table(&simples, ambient, 1)?;
            ambient.iter().enumerate().filter(|(j, _)| table.iter().all(|row| row[*j] == 0)).map(|(_, m)| m.clone()).collect()
        };
        let mut c = ObjectClass::new(algebra, "injectives", members)?;
        c.extension_closed = true;
        Ok(c)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: &str) -> ObjectClass {
        self.label = label.to_string();
        self
    }

    pub fn members(&self) -> &[Module] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Index of the member isomorphic to `m`.
    pub fn position(&self, m: &Module) -> Result<Option<usize>> {
        for (i, x) in self.members.iter().enumerate() {
            if is_isomorphic(x, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn contains(&self, m: &Module) -> Result<bool> {
        if !Algebra::same(m.algebra(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if m.is_zero() {
            return Ok(true);
        }
        let parts = decompose(m)?.summands;
        if self.indecomposable {
            for (s, _) in &parts {
                if self.position(s)?.is_none() {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        // decomposable members: solve for multiplicities
        let mut classes: Vec<Module> = parts.iter().map(|(s, _)| s.clone()).collect();
        let mut member_vecs: Vec<Vec<usize>> = Vec::new();
        for x in &self.members {
            let mut v = vec![0; classes.len()];
            for (s, k) in decompose(x)?.summands {
                let mut idx = None;
                for (i, c) in classes.iter().enumerate() {
                    if is_isomorphic(c, &s)? {
                        idx = Some(i);
                        break;
                    }
                }
                match idx {
                    Some(i) => v[i] += k,
                    None => {
                        classes.push(s);
                        v.push(k);
                    }
                }
            }
            member_vecs.push(v);
        }
        let n = classes.len();
        let mut goal: Vec<usize> = parts.iter().map(|(_, k)| *k).collect();
        goal.resize(n, 0);
        for v in &mut member_vecs {
            v.resize(n, 0);
        }
        Ok(sum_search(&member_vecs, 0, &mut goal))
    }

    /// Set equality up to isomorphism.
    pub fn same_members(&self, other: &ObjectClass) -> Result<bool> {
        if self.len() != other.len() {
            return Ok(false);
        }
        for m in &self.members {
            if other.position(m)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn sum_search(vecs: &[Vec<usize>], start: usize, goal: &mut Vec<usize>) -> bool {
    if goal.iter().all(|&g| g == 0) {
        return true;
    }
    for i in start..vecs.len() {
        let v = &vecs[i];
        if v.iter().all(|&x| x == 0) || v.iter().zip(goal.iter()).any(|(a, b)| a > b) {
            continue;
        }
        for (g, a) in goal.iter_mut().zip(v) {
            *g -= a;
        }
        let found = sum_search(vecs, i, goal);
        for (g, a) in goal.iter_mut().zip(v) {
            *g += a;
        }
        if found {
            return true;
        }
    }
    false
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(|m| m.to_string()).collect();
        write!(f, "{} {{{}}}", self.label, items.join(", "))
    }
}

/// `dim Ext^degree(rows[i], cols[j])`, one resolution per row.
pub fn ext_table(rows: &[Module], cols: &[Module], degree: usize) -> Result<Vec<Vec<usize>>> {
    for m in rows.iter().chain(cols) {
        if let Some(first) = rows.first().or(cols.first()) {
            if !m.same_algebra(first) {
                return Err(Error::AlgebraMismatch);
            }
        }
    }
    Ok(rows
        .par_iter()
        .map(|x| {
            let res = projective_resolution(x, degree.saturating_sub(1));
            cols.iter().map(|n| ext_from_resolution(&res, n, degree).dim()).collect()
        })
        .collect())
}

/// Whether `Ext^1(x, m) = 0` for every `x` in the list.
pub fn right_orthogonal_to(m: &Module, xs: &[Module]) -> Result<bool> {
    Ok(ext_table(xs, std::slice::from_ref(m), 1)?.iter().all(|r| r[0] == 0))
}

/// Whether `Ext^1(m, y) = 0` for every `y` in the list.
pub fn left_orthogonal_to(m: &Module, ys: &[Module]) -> Result<bool> {
    Ok(ext_table(std::slice::from_ref(m), ys, 1)?[0].iter().all(|&d| d == 0))
}

/// `c^⊥` among the ambient indecomposables.
pub fn perp_right(c: &ObjectClass, ambient: &[Module]) -> Result<ObjectClass> {
    let table = ext_table(c.members(), ambient, 1)?;
    let members = ambient
        .iter()
        .enumerate()
        .filter(|(j, _)| table.iter().all(|row| row[*j] == 0))
        .map(|(_, m)| m.clone())
        .collect();
    let mut out = ObjectClass::new(&c.algebra, &format!("{}^perp", c.label), members)?;
    out.extension_closed = true;
    Ok(out)
}

/// `^⊥c` among the ambient indecomposables.
pub fn perp_left(c: &ObjectClass, ambient: &[Module]) -> Result<ObjectClass> {
    let table = ext_table(ambient, c.members(), 1)?;
    let members = ambient
        .iter()
        .zip(&table)
        .filter(|(_, row)| row.iter().all(|&d| d == 0))
        .map(|(m, _)| m.clone())
        .collect();
    let mut out = ObjectClass::new(&c.algebra, &format!("perp^{}", c.label), members)?;
    out.extension_closed = true;
    Ok(out)
}

/// Indecomposable summands of the members.
pub fn smd_closure(c: &ObjectClass) -> Result<ObjectClass> {
    let mut parts = Vec::new();
    for m in c.members() {
        for (s, _) in decompose(m)?.summands {
            parts.push(s);
        }
    }
    let mut out = ObjectClass::new(&c.algebra, &format!("Smd({})", c.label), parts)?;
    out.extension_closed = c.extension_closed;
    out.smd_closed = true;
    Ok(out)
}

/// Multisets of members with total dimension at most `cap`.
fn bounded_sums(members: &[Module], cap: usize) -> Vec<Vec<usize>> {
    fn rec(members: &[Module], start: usize, room: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..members.len() {
            let d = members[i].total_dim();
            if d <= room && d > 0 {
                cur.push(i);
                out.push(cur.clone());
                rec(members, i, room - d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(members, 0, cap, &mut Vec::new(), &mut out);
    out
}

/// Closure under extensions and summands, restricted to middle terms of
/// total dimension at most `dim_cap`.
///
/// Each round realizes every class of `Ext^1(C, A)` for `A` a member and
/// `C` a sum of members, and adds the indecomposable summands of the middle
/// terms. A class `E` in the closure sits in some `0 -> A -> E' -> C -> 0`
/// of this shape with `E` a summand of `E'`, so the rounds reach it as long
/// as the intermediate `E'` respect the cap.
pub fn extension_closure(c: &ObjectClass, dim_cap: usize, max_rounds: usize) -> Result<ObjectClass> {
    let f = c.algebra.field();
    let q = f.order().ok_or(Error::FieldNotFinite)?;
    let mut current = smd_closure(c)?;
    for _ in 0..max_rounds {
        let members = current.members.clone();
        let mut new = Vec::new();
        for sum in bounded_sums(&members, dim_cap) {
            let parts: Vec<Module> = sum.iter().map(|&i| members[i].clone()).collect();
            let cc = Module::direct_sum_all(&c.algebra, &parts);
            let p = presentation(&cc);
            let res = crate::homology::Resolution { module: cc.clone(), terms: vec![p.clone()] };
            for a in &members {
                if a.total_dim() + cc.total_dim() > dim_cap {
                    continue;
                }
                let e = ext_from_resolution(&res, a, 1);
                let count = (q as u128).checked_pow(e.dim() as u32).filter(|&n| n <= 1 << 16);
                let count = count.ok_or(Error::ClosureBudgetExceeded(max_rounds))? as u64;
                for k in 1..count {
                    let coeffs = base_q(f, q, e.dim(), k);
                    let mid = crate::homology::realize_extension(&p, &e.element(&coeffs)).middle;
                    for (s, _) in decompose(&mid)?.summands {
                        new.push(s);
                    }
                }
            }
        }
        let mut grown = false;
        let mut all = current.members.clone();
        for s in new {
            let mut known = false;
            for m in &all {
                if is_isomorphic(m, &s)? {
                    known = true;
                    break;
                }
            }
            if !known {
                all.push(s);
                grown = true;
            }
        }
        if !grown {
            current.label = format!("ext({})", c.label);
            current.extension_closed = true;
            return Ok(current);
        }
        current = ObjectClass::new(&c.algebra, &c.label, all)?;
    }
    Err(Error::ClosureBudgetExceeded(max_rounds))
}

fn base_q(f: crate::field::Field, q: u64, d: usize, mut k: u64) -> Vec<Scalar> {
    (0..d)
        .map(|_| {
            let r = k % q;
            k /= q;
            f.from_i64(r as i64)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct CotorsionPair {
    pub left: ObjectClass,
    pub right: ObjectClass,
    pub hereditary_verified: bool,
    pub complete_verified: bool,
}

#[derive(Clone, Debug)]
pub struct CotorsionReport {
    /// `right = left^⊥` over the ambient.
    pub right_is_perp: bool,
    /// `left = ^⊥right` over the ambient.
    pub left_is_perp: bool,
    /// Ambient members of `left^⊥` missing from `right`, and members of
    /// `right` outside `left^⊥`.
    pub right_missing: Vec<Module>,
    pub right_extra: Vec<Module>,
    pub left_missing: Vec<Module>,
    pub left_extra: Vec<Module>,
    /// `Ext^i(left, right) = 0` for `1 <= i <= bound`.
    pub hereditary: bool,
    pub bound: usize,
    pub left_has_projectives: bool,
    pub right_has_injectives: bool,
    /// Every ambient member has a special left precover and a special right
    /// preenvelope (only when requested).
    pub complete: Option<bool>,
}

impl CotorsionReport {
    pub fn is_cotorsion_pair(&self) -> bool {
        self.right_is_perp && self.left_is_perp
    }
}

fn difference(a: &ObjectClass, b: &ObjectClass) -> Result<Vec<Module>> {
    let mut out = Vec::new();
    for m in a.members() {
        if b.position(m)?.is_none() {
            out.push(m.clone());
        }
    }
    Ok(out)
}

pub fn check_cotorsion_pair(
    left: &ObjectClass,
    right: &ObjectClass,
    ambient: &[Module],
    bound: usize,
    check_complete: bool,
) -> Result<CotorsionReport> {
    let alg = left.algebra.clone();
    let perp_r = perp_right(left, ambient)?;
    let perp_l = perp_left(right, ambient)?;
    let right_missing = difference(&perp_r, right)?;
    let right_extra = difference(right, &perp_r)?;
    let left_missing = difference(&perp_l, left)?;
    let left_extra = difference(left, &perp_l)?;
    let mut hereditary = true;
    for i in 1..=bound.max(1) {
        if ext_table(left.members(), right.members(), i)?.iter().flatten().any(|&d| d > 0) {
            hereditary = false;
            break;
        }
    }
    let mut left_has_projectives = true;
    for v in 0..alg.n_vertices() {
        if !left.contains(&Module::projective(&alg, v))? {
            left_has_projectives = false;
        }
    }
    let injectives = ObjectClass::injectives(&alg, ambient)?;
    let mut right_has_injectives = true;
    for i in injectives.members() {
        if !right.contains(i)? {
            right_has_injectives = false;
        }
    }
    let complete = if check_complete {
        let mut ok = true;
        for m in ambient {
            let pre = special_precover(m, left, &ApproxOptions::default());
            let env = special_preenvelope(m, right, ambient, &ApproxOptions::default());
            match (pre, env) {
                (Ok(_), Ok(_)) => {}
                (Err(Error::NoSpecialPrecover(_)), _)
                | (_, Err(Error::NoSpecialPreenvelope(_)))
                | (Err(Error::Precondition(_)), _) => {
                    ok = false;
                    break;
                }
                (Err(e), _) | (_, Err(e)) => return Err(e),
            }
        }
        Some(ok)
    } else {
        None
    };
    Ok(CotorsionReport {
        right_is_perp: right_missing.is_empty() && right_extra.is_empty(),
        left_is_perp: left_missing.is_empty() && left_extra.is_empty(),
        right_missing,
        right_extra,
        left_missing,
        left_extra,
        hereditary,
        bound,
        left_has_projectives,
        right_has_injectives,
        complete,
    })
}

impl CotorsionPair {
    /// `(c, c^⊥)` over the ambient, with flags set by checking.
    pub fn generated_by(c: &ObjectClass, ambient: &[Module], bound: usize, check_complete: bool) -> Result<CotorsionPair> {
        let right = perp_right(c, ambient)?;
        let report = check_cotorsion_pair(c, &right, ambient, bound, check_complete)?;
        if !report.is_cotorsion_pair() {
            return Err(Error::Precondition(format!("({}, {}) is not a cotorsion pair on the enumerated ambient", c.label, right.label)));
        }
        Ok(CotorsionPair {
            left: c.clone(),
            right,
            hereditary_verified: report.hereditary,
            complete_verified: report.complete == Some(true),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxKind {
    Precover,
    Preenvelope,
}

/// How an approximation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxRoute {
    Identity,
    /// Universal extensions followed by a pushout.
    Salce,
    /// The minimal add-approximation, which is special whenever a special
    /// approximation exists.
    MinimalApproximation,
    /// Two pushouts through the comma category.
    Transfer,
}

#[derive(Clone, Debug)]
pub struct ExtCheck {
    pub against: String,
    pub dim: usize,
}

/// `0 -> K -> G -> target -> 0` (precover) or `0 -> target -> W -> X -> 0`
/// (preenvelope) with its certificates, all of which passed.
#[derive(Clone, Debug)]
pub struct ApproxResult {
    pub kind: ApproxKind,
    pub route: ApproxRoute,
    pub ses: ShortExact,
    pub class_label: String,
    /// Middle term in the class.
    pub middle_in_class: bool,
    /// Kernel (precover) or cokernel (preenvelope) orthogonal to the class.
    pub orthogonal: bool,
    pub ext_checks: Vec<ExtCheck>,
}

impl ApproxResult {
    fn certified(
        kind: ApproxKind,
        route: ApproxRoute,
        ses: ShortExact,
        class_label: &str,
        middle_in_class: bool,
        ext_checks: Vec<ExtCheck>,
    ) -> Result<ApproxResult> {
        let orthogonal = ext_checks.iter().all(|c| c.dim == 0);
        if !ses.is_exact() || !middle_in_class || !orthogonal {
            return Err(Error::Precondition(format!(
                "approximation certificate failed (exact {}, middle in class {}, orthogonal {})",
                ses.is_exact(),
                middle_in_class,
                orthogonal
            )));
        }
        Ok(ApproxResult { kind, route, ses, class_label: class_label.to_string(), middle_in_class, orthogonal, ext_checks })
    }

    /// The approximating map (`G -> target` or `target -> W`).
    pub fn map(&self) -> &Morphism {
        match self.kind {
            ApproxKind::Precover => &self.ses.pi,
            ApproxKind::Preenvelope => &self.ses.iota,
        }
    }
}

impl fmt::Display for ApproxResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ApproxKind::Precover => "special precover",
            ApproxKind::Preenvelope => "special preenvelope",
        };
        write!(f, "{kind} for {} via {:?}: {}", self.class_label, self.route, self.ses)
    }
}

#[derive(Clone, Debug)]
pub enum NoApproxReason {
    /// The minimal approximation is not surjective (resp. injective).
    NotEpi { rank_defect: usize },
    NotMono { kernel_dim: usize },
    /// `Ext^1(member, kernel) != 0` (resp. `Ext^1(cokernel, member)`).
    NotOrthogonal { member: Module, ext_dim: usize },
}

/// Certificate that no special approximation exists: every special
/// approximation is an add-approximation, hence the minimal one plus a
/// summand mapping to zero, and the minimal one already fails.
#[derive(Clone, Debug)]
pub struct NoApproxWitness {
    pub kind: ApproxKind,
    pub target: Module,
    pub class_label: String,
    pub minimal_approximation: Morphism,
    pub reason: NoApproxReason,
}

impl fmt::Display for NoApproxWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (dir, other) = match self.kind {
            ApproxKind::Precover => ("right", self.minimal_approximation.source()),
            ApproxKind::Preenvelope => ("left", self.minimal_approximation.target()),
        };
        write!(f, "the minimal {dir} add({})-approximation of {} goes through {}", self.class_label, self.target, other)?;
        match &self.reason {
            NoApproxReason::NotEpi { rank_defect } => write!(f, " and misses {rank_defect} dimensions of the target"),
            NoApproxReason::NotMono { kernel_dim } => write!(f, " and has a {kernel_dim}-dimensional kernel"),
            NoApproxReason::NotOrthogonal { member, ext_dim } => match self.kind {
                ApproxKind::Precover => write!(f, "; its kernel K has dim Ext^1({member}, K) = {ext_dim}"),
                ApproxKind::Preenvelope => write!(f, "; its cokernel C has dim Ext^1(C, {member}) = {ext_dim}"),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct ApproxOptions {
    pub iteration_cap: usize,
}

impl Default for ApproxOptions {
    fn default() -> Self {
        ApproxOptions { iteration_cap: DEFAULT_ITERATION_CAP }
    }
}

fn span_dim(maps: &[Morphism]) -> usize {
    if maps.is_empty() {
        return 0;
    }
    let f = maps[0].source().field();
    let cols: Vec<Vec<Scalar>> = maps.iter().map(Morphism::flatten).collect();
    Matrix::from_columns(f, cols[0].len(), &cols).rank()
}

fn is_right_approximation(g: &Morphism, members: &[Module]) -> bool {
    members.iter().all(|y| {
        let through: Vec<Morphism> = hom_space_unchecked(y, g.source()).iter().map(|h| h.then(g)).collect();
        span_dim(&through) == hom_space_unchecked(y, g.target()).len()
    })
}

fn is_left_approximation(g: &Morphism, members: &[Module]) -> bool {
    members.iter().all(|y| {
        let through: Vec<Morphism> = hom_space_unchecked(g.target(), y).iter().map(|h| g.then(h)).collect();
        span_dim(&through) == hom_space_unchecked(g.source(), y).len()
    })
}

/// Minimal right `add(members)`-approximation `G -> m`, by discarding
/// redundant basis homomorphisms.
pub fn minimal_right_approximation(m: &Module, members: &[Module]) -> Morphism {
    let mut items: Vec<Morphism> = members.iter().flat_map(|x| hom_space_unchecked(x, m)).collect();
    let assemble = |items: &[Morphism]| -> Morphism {
        let parts: Vec<Module> = items.iter().map(|h| h.source().clone()).collect();
        let g = Module::direct_sum_all(m.algebra(), &parts);
        if items.is_empty() {
            return Morphism::zero(&g, m);
        }
        Morphism::hcat(items, &g)
    };
    let mut i = items.len();
    while i > 0 {
        i -= 1;
        let mut trial = items.clone();
        trial.remove(i);
        if is_right_approximation(&assemble(&trial), members) {
            items = trial;
        }
    }
    assemble(&items)
}

/// Minimal left `add(members)`-approximation `m -> G`.
pub fn minimal_left_approximation(m: &Module, members: &[Module]) -> Morphism {
    let mut items: Vec<Morphism> = members.iter().flat_map(|x| hom_space_unchecked(m, x)).collect();
    let assemble = |items: &[Morphism]| -> Morphism {
        let parts: Vec<Module> = items.iter().map(|h| h.target().clone()).collect();
        let g = Module::direct_sum_all(m.algebra(), &parts);
        if items.is_empty() {
            return Morphism::zero(m, &g);
        }
        Morphism::vcat(items, &g)
    };
    let mut i = items.len();
    while i > 0 {
        i -= 1;
        let mut trial = items.clone();
        trial.remove(i);
        if is_left_approximation(&assemble(&trial), members) {
            items = trial;
        }
    }
    assemble(&items)
}

fn identity_ses(m: &Module, kind: ApproxKind) -> ShortExact {
    let z = Module::zero(m.algebra());
    match kind {
        ApproxKind::Precover => ShortExact {
            left: z.clone(),
            middle: m.clone(),
            right: m.clone(),
            iota: Morphism::zero(&z, m),
            pi: Morphism::identity(m),
        },
        ApproxKind::Preenvelope => ShortExact {
            left: m.clone(),
            middle: m.clone(),
            right: z.clone(),
            iota: Morphism::identity(m),
            pi: Morphism::zero(m, &z),
        },
    }
}

fn ext_checks_right(k: &Module, xs: &[Module]) -> Result<Vec<ExtCheck>> {
    let t = ext_table(xs, std::slice::from_ref(k), 1)?;
    Ok(xs.iter().zip(t).map(|(x, row)| ExtCheck { against: x.to_string(), dim: row[0] }).collect())
}

fn ext_checks_left(c: &Module, ys: &[Module]) -> Result<Vec<ExtCheck>> {
    let t = ext_table(std::slice::from_ref(c), ys, 1)?;
    Ok(ys.iter().zip(&t[0]).map(|(y, &d)| ExtCheck { against: y.to_string(), dim: d }).collect())
}

/// Iterated universal extensions `k -> W` until `Ext^1(g, W) = 0` for all
/// generators; the cokernel is filtered by sums of generators.
pub fn perp_preenvelope_by_extensions(k: &Module, generators: &[Module], cap: usize) -> Result<Morphism> {
    let mut iota = Morphism::identity(k);
    for _ in 0..=cap {
        let u = universal_extension(generators, iota.target())?;
        if u.multiplicities.iter().all(|&d| d == 0) {
            return Ok(iota);
        }
        iota = iota.then(&u.ses.iota);
    }
    Err(Error::IterationCapExceeded(cap))
}

/// Special `c`-precover of `target`: the Salce construction when it lands
/// in the class, otherwise the minimal right approximation, which decides
/// existence.
pub fn special_precover(target: &Module, c: &ObjectClass, opts: &ApproxOptions) -> Result<ApproxResult> {
    if !Algebra::same(target.algebra(), &c.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let kind = ApproxKind::Precover;
    if c.contains(target)? {
        return ApproxResult::certified(kind, ApproxRoute::Identity, identity_ses(target, kind), &c.label, true, Vec::new());
    }
    let alg = c.algebra.clone();
    for v in 0..alg.n_vertices() {
        if !c.contains(&Module::projective(&alg, v))? {
            return Err(Error::Precondition(format!("class {} does not contain P({})", c.label, alg.quiver().vertices()[v])));
        }
    }
    if let Some(r) = salce_precover(target, c, opts)? {
        return Ok(r);
    }
    decide_precover(target, c)
}

fn salce_precover(target: &Module, c: &ObjectClass, opts: &ApproxOptions) -> Result<Option<ApproxResult>> {
    let p = presentation(target);
    let iota = match perp_preenvelope_by_extensions(&p.syzygy, c.members(), opts.iteration_cap) {
        Ok(i) => i,
        Err(Error::IterationCapExceeded(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let ses = pushout_sequence(&p.inclusion, &iota, &p.epi);
    if !c.contains(&ses.middle)? {
        return Ok(None);
    }
    let checks = ext_checks_right(&ses.left, c.members())?;
    ApproxResult::certified(ApproxKind::Precover, ApproxRoute::Salce, ses, &c.label, true, checks).map(Some)
}

/// Given `incl: K -> P`, `iota: K -> W` and `epi: P -> M` with kernel `incl`,
/// the sequence `0 -> W -> E -> M -> 0` where `E` is the pushout.
fn pushout_sequence(incl: &Morphism, iota: &Morphism, epi: &Morphism) -> ShortExact {
    let alg = incl.source().algebra().clone();
    let parts = [incl.target().clone(), iota.target().clone()];
    let sum = Module::direct_sum_all(&alg, &parts);
    let rel = Morphism::vcat(&[incl.clone(), iota.scale(&alg.field().from_i64(-1))], &sum);
    let (e, proj) = cokernel(&rel);
    let w_to_e = Morphism::injection(&sum, &parts, 1).then(&proj);
    let to_m = Morphism::hcat(&[epi.clone(), Morphism::zero(iota.target(), epi.target())], &sum);
    let pi = crate::module::factor_through_epi(&proj, &to_m);
    ShortExact { left: iota.target().clone(), middle: e, right: epi.target().clone(), iota: w_to_e, pi }
}

fn decide_precover(target: &Module, c: &ObjectClass) -> Result<ApproxResult> {
    let g = minimal_right_approximation(target, c.members());
    let witness = |reason| {
        Error::NoSpecialPrecover(Box::new(NoApproxWitness {
            kind: ApproxKind::Precover,
            target: target.clone(),
            class_label: c.label.clone(),
            minimal_approximation: g.clone(),
            reason,
        }))
    };
    if !g.is_epi() {
        let rank: usize = g.maps().iter().map(Matrix::rank).sum();
        return Err(witness(NoApproxReason::NotEpi { rank_defect: target.total_dim() - rank }));
    }
    let (k, incl) = kernel(&g);
    let checks = ext_checks_right(&k, c.members())?;
    if let Some((i, chk)) = checks.iter().enumerate().find(|(_, chk)| chk.dim > 0) {
        return Err(witness(NoApproxReason::NotOrthogonal { member: c.members()[i].clone(), ext_dim: chk.dim }));
    }
    let ses = ShortExact { left: k, middle: g.source().clone(), right: target.clone(), iota: incl, pi: g };
    ApproxResult::certified(ApproxKind::Precover, ApproxRoute::MinimalApproximation, ses, &c.label, true, checks)
}

/// Special `c`-preenvelope of `target`, built from universal extensions by
/// the ambient members of `^⊥c`; falls back to the minimal left
/// approximation, which decides existence.
pub fn special_preenvelope(target: &Module, c: &ObjectClass, ambient: &[Module], opts: &ApproxOptions) -> Result<ApproxResult> {
    if !Algebra::same(target.algebra(), &c.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let kind = ApproxKind::Preenvelope;
    if c.contains(target)? {
        return ApproxResult::certified(kind, ApproxRoute::Identity, identity_ses(target, kind), &c.label, true, Vec::new());
    }
    let left = perp_left(c, ambient)?;
    match perp_preenvelope_by_extensions(target, left.members(), opts.iteration_cap) {
        Ok(iota) => {
            let (x, pi) = cokernel(&iota);
            let ses = ShortExact { left: target.clone(), middle: iota.target().clone(), right: x, iota, pi };
            if c.contains(&ses.middle)? {
                let checks = ext_checks_left(&ses.right, c.members())?;
                if checks.iter().all(|chk| chk.dim == 0) {
                    return ApproxResult::certified(kind, ApproxRoute::Salce, ses, &c.label, true, checks);
                }
            }
        }
        Err(Error::IterationCapExceeded(_)) => {}
        Err(e) => return Err(e),
    }
    decide_preenvelope(target, c)
}

fn decide_preenvelope(target: &Module, c: &ObjectClass) -> Result<ApproxResult> {
    let g = minimal_left_approximation(target, c.members());
    let witness = |reason| {
        Error::NoSpecialPreenvelope(Box::new(NoApproxWitness {
            kind: ApproxKind::Preenvelope,
            target: target.clone(),
            class_label: c.label.clone(),
            minimal_approximation: g.clone(),
            reason,
        }))
    };
    if !g.is_mono() {
        let rank: usize = g.maps().iter().map(Matrix::rank).sum();
        return Err(witness(NoApproxReason::NotMono { kernel_dim: target.total_dim() - rank }));
    }
    let (x, pi) = cokernel(&g);
    let checks = ext_checks_left(&x, c.members())?;
    if let Some((i, chk)) = checks.iter().enumerate().find(|(_, chk)| chk.dim > 0) {
        return Err(witness(NoApproxReason::NotOrthogonal { member: c.members()[i].clone(), ext_dim: chk.dim }));
    }
    let ses = ShortExact { left: target.clone(), middle: g.target().clone(), right: x, iota: g, pi };
    ApproxResult::certified(ApproxKind::Preenvelope, ApproxRoute::MinimalApproximation, ses, &c.label, true, checks)
}

/// Which hypothesis of the transfer converse held on the enumerated data:
/// `T(Y ∩ Y^⊥) ⊆ X^⊥` or `T(Y ∩ Y^⊥) ⊆ X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConverseHypotheses {
    pub into_x_perp: bool,
    pub into_x: bool,
}

/// A transferred approximation in the comma category, with its triple form.
#[derive(Clone, Debug)]
pub struct TransferResult {
    pub approx: ApproxResult,
    pub left: Triple,
    pub middle: Triple,
    pub right: Triple,
    pub converse: ConverseHypotheses,
}

/// The data of `X`, `Y`, their orthogonals and the ambients, shared by the
/// transfer constructions.
#[derive(Clone, Debug)]
pub struct TransferData {
    pub x: ObjectClass,
    pub y: ObjectClass,
    pub x_perp: ObjectClass,
    pub y_perp: ObjectClass,
    pub ambient_r: Vec<Module>,
    pub ambient_s: Vec<Module>,
}

impl TransferData {
    /// Orthogonals computed over the ambients; classes closed under summands first.
    pub fn new(x: &ObjectClass, y: &ObjectClass, ambient_r: &[Module], ambient_s: &[Module]) -> Result<TransferData> {
        let x = smd_closure(x)?.with_label(x.label());
        let y = smd_closure(y)?.with_label(y.label());
        Ok(TransferData {
            x_perp: perp_right(&x, ambient_r)?,
            y_perp: perp_right(&y, ambient_s)?,
            x,
            y,
            ambient_r: ambient_r.to_vec(),
            ambient_s: ambient_s.to_vec(),
        })
    }

    pub fn from_pairs(x: &CotorsionPair, y: &CotorsionPair, ambient_r: &[Module], ambient_s: &[Module]) -> Result<TransferData> {
        if !x.complete_verified || !y.complete_verified {
            return Err(Error::Precondition("both cotorsion pairs must be verified complete".into()));
        }
        Ok(TransferData {
            x: x.left.clone(),
            y: y.left.clone(),
            x_perp: x.right.clone(),
            y_perp: y.right.clone(),
            ambient_r: ambient_r.to_vec(),
            ambient_s: ambient_s.to_vec(),
        })
    }

    fn converse(&self, comma: &CommaCategory) -> Result<ConverseHypotheses> {
        let mut into_x_perp = true;
        let mut into_x = true;
        for y in self.y.members() {
            if self.y_perp.position(y)?.is_some() {
                let ty = comma.tensor(y);
                into_x_perp &= right_orthogonal_to(&ty, self.x.members())?;
                into_x &= self.x.contains(&ty)?;
            }
        }
        Ok(ConverseHypotheses { into_x_perp, into_x })
    }

    /// Componentwise membership in `(X^⊥, Y^⊥)`, with the Ext checks.
    fn perp_checks(&self, t: &Triple) -> Result<Vec<ExtCheck>> {
        let mut checks = ext_checks_right(&t.a, self.x.members())?;
        checks.extend(ext_checks_right(&t.b, self.y.members())?);
        Ok(checks)
    }
}

/// Special `(X^⊥, Y^⊥)`-preenvelope of a triple by two pushouts:
/// `0 -> B -> V -> Y' -> 0` in `mod S`, push `T(B) -> T(V)` out along `φ` to
/// get `0 -> A -> C -> T(Y') -> 0`, take `0 -> C -> U -> X' -> 0` in `mod R`,
/// and assemble `0 -> (A, B) -> (U, V) -> (D, Y') -> 0`.
pub fn transfer_preenvelope_comma(
    comma: &CommaCategory,
    t: &Triple,
    data: &TransferData,
    opts: &ApproxOptions,
) -> Result<TransferResult> {
    comma.require_y_exact(&data.y)?;
    let converse = data.converse(comma)?;
    let alg = comma.algebra().clone();
    let env_b = special_preenvelope(&t.b, &data.y_perp, &data.ambient_s, opts)?;
    let beta = env_b.ses.iota.clone();
    let t_beta = comma.functor().apply_morphism(&beta);
    // pushout of T(B) -> T(V) along φ
    let parts = [t_beta.target().clone(), t.a.clone()];
    let sum = Module::direct_sum_all(comma.r(), &parts);
    let rel = Morphism::vcat(&[t_beta.clone(), t.phi.scale(&comma.r().field().from_i64(-1))], &sum);
    let (c, proj) = cokernel(&rel);
    let psi = Morphism::injection(&sum, &parts, 0).then(&proj);
    let a_to_c = Morphism::injection(&sum, &parts, 1).then(&proj);
    let env_c = special_preenvelope(&c, &data.x_perp, &data.ambient_r, opts)?;
    let gamma = env_c.ses.iota.clone();
    let middle = Triple { a: gamma.target().clone(), b: beta.target().clone(), phi: psi.then(&gamma) };
    let mor = comma.triple_morphism(t, &middle, a_to_c.then(&gamma), beta)?;
    let fz = comma.factorize(&mor);
    let iota = comma.morphism_to_module(&mor);
    let pi = comma.morphism_to_module(&fz.cokernel_projection);
    let ses = ShortExact {
        left: iota.source().clone(),
        middle: iota.target().clone(),
        right: pi.target().clone(),
        iota,
        pi,
    };
    debug_assert!(Algebra::same(ses.middle.algebra(), &alg));
    let right = fz.cokernel.clone();
    let verdict = comma.membership_bxy(&right, &data.x, &data.y)?;
    let mut checks = data.perp_checks(&middle)?;
    if !verdict.is_member() {
        checks.push(ExtCheck { against: "cokernel outside B^X_Y".into(), dim: 1 });
    }
    let label = format!("({}^perp, {}^perp)", data.x.label(), data.y.label());
    let approx = ApproxResult::certified(ApproxKind::Preenvelope, ApproxRoute::Transfer, ses, &label, true, checks)?;
    Ok(TransferResult { approx, left: t.clone(), middle, right, converse })
}

/// Special `<p(X, Y)>`-precover of a triple: projective cover, transferred
/// preenvelope of the kernel, pushout.
pub fn transfer_precover_comma(
    comma: &CommaCategory,
    t: &Triple,
    data: &TransferData,
    opts: &ApproxOptions,
) -> Result<TransferResult> {
    comma.require_y_exact(&data.y)?;
    let converse = data.converse(comma)?;
    let label = format!("<p({}, {})>", data.x.label(), data.y.label());
    let m = comma.to_module(t);
    if comma.membership_bxy(t, &data.x, &data.y)?.is_member() {
        let ses = identity_ses(&m, ApproxKind::Precover);
        let approx = ApproxResult::certified(ApproxKind::Precover, ApproxRoute::Identity, ses, &label, true, Vec::new())?;
        return Ok(TransferResult { approx, left: comma.zero_triple(), middle: t.clone(), right: t.clone(), converse });
    }
    for (cls, alg) in [(&data.x, comma.r()), (&data.y, comma.s())] {
        for v in 0..alg.n_vertices() {
            if !cls.contains(&Module::projective(alg, v))? {
                return Err(Error::Precondition(format!(
                    "class {} misses a projective; a special precovering class closed under summands contains them",
                    cls.label()
                )));
            }
        }
    }
    let p = presentation(&m);
    let k = comma.to_triple(&p.syzygy);
    let env = transfer_preenvelope_comma(comma, &k, data, opts)?;
    let iota = env.approx.ses.iota.clone();
    // the kernel presentation is the syzygy itself; rebase the inclusion
    let k_incl = Morphism::new_unchecked(iota.source().clone(), p.cover.module.clone(), p.inclusion.maps().to_vec());
    let ses = pushout_sequence(&k_incl, &iota, &p.epi);
    let middle = comma.to_triple(&ses.middle);
    let left = comma.to_triple(&ses.left);
    let verdict = comma.membership_bxy(&middle, &data.x, &data.y)?;
    let checks = data.perp_checks(&left)?;
    let approx = ApproxResult::certified(ApproxKind::Precover, ApproxRoute::Transfer, ses, &label, verdict.is_member(), checks)?;
    Ok(TransferResult { approx, left, middle, right: t.clone(), converse })
}

/// Indices of ambient triples lying in `B^X_Y`.
pub fn bxy_members(comma: &CommaCategory, x: &ObjectClass, y: &ObjectClass, ambient: &[Module]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, m) in ambient.iter().enumerate() {
        if comma.membership_bxy(&comma.to_triple(m), x, y)?.is_member() {
            out.push(i);
        }
    }
    Ok(out)
}

fn indices_in(class: &ObjectClass, ambient: &[Module]) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, m) in ambient.iter().enumerate() {
        if class.position(m)?.is_some() {
            out.push(i);
        }
    }
    Ok(out)
}

/// Two independently computed index sets into an ambient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetComparison {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl SetComparison {
    pub fn agree(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Extension closure of the `p`-images against the `B^X_Y` filter.
pub fn check_extension_closure_equals_bxy(
    comma: &CommaCategory,
    x: &ObjectClass,
    y: &ObjectClass,
    ambient: &[Module],
    dim_cap: usize,
) -> Result<SetComparison> {
    let zero_r = Module::zero(comma.r());
    let zero_s = Module::zero(comma.s());
    let mut images = Vec::new();
    for a in x.members() {
        images.push(comma.to_module(&comma.apply_p(a, &zero_s)));
    }
    for b in y.members() {
        images.push(comma.to_module(&comma.apply_p(&zero_r, b)));
    }
    let gens = ObjectClass::new(comma.algebra(), "p(X,Y)", images)?;
    let closure = extension_closure(&gens, dim_cap, DEFAULT_ITERATION_CAP)?;
    Ok(SetComparison { lhs: indices_in(&closure, ambient)?, rhs: bxy_members(comma, x, y, ambient)? })
}

/// `<p(X, Y)>^⊥` against `{(A, B): A ∈ X^⊥, B ∈ Y^⊥}`.
pub fn check_perp_formula(comma: &CommaCategory, x: &ObjectClass, y: &ObjectClass, ambient: &[Module]) -> Result<SetComparison> {
    let members: Vec<Module> = bxy_members(comma, x, y, ambient)?.into_iter().map(|i| ambient[i].clone()).collect();
    let b = ObjectClass::new(comma.algebra(), "B^X_Y", members)?;
    let lhs = indices_in(&perp_right(&b, ambient)?, ambient)?;
    let mut rhs = Vec::new();
    for (i, m) in ambient.iter().enumerate() {
        let t = comma.to_triple(m);
        if right_orthogonal_to(&t.a, x.members())? && right_orthogonal_to(&t.b, y.members())? {
            rhs.push(i);
        }
    }
    Ok(SetComparison { lhs, rhs })
}

/// Ambient triples with `A ∈ add X` and `B ∈ add Y` (any structure map).
fn componentwise(comma: &CommaCategory, x: &ObjectClass, y: &ObjectClass, ambient: &[Module]) -> Result<Vec<Module>> {
    let mut out = Vec::new();
    for m in ambient {
        let t = comma.to_triple(m);
        if x.contains(&t.a)? && y.contains(&t.b)? {
            out.push(m.clone());
        }
    }
    Ok(out)
}

/// `<p(mod R, mod S)>` (monic structure maps) against `^⊥(I, 0)`.
pub fn check_monic_equals_left_perp_of_injectives(
    comma: &CommaCategory,
    ambient_r: &[Module],
    ambient: &[Module],
) -> Result<SetComparison> {
    let lhs = (0..ambient.len()).filter(|&i| comma.to_triple(&ambient[i]).phi.is_mono()).collect();
    let inj = ObjectClass::injectives(comma.r(), ambient_r)?;
    let zero_s = Module::zero(comma.s());
    let cols: Vec<Module> = inj.members().iter().map(|i| comma.to_module(&comma.apply_p(i, &zero_s))).collect();
    let table = ext_table(ambient, &cols, 1)?;
    let rhs = (0..ambient.len()).filter(|&i| table[i].iter().all(|&d| d == 0)).collect();
    Ok(SetComparison { lhs, rhs })
}

/// `<p(^⊥X, ^⊥Y)>` against `^⊥(X, Y) ∩ ^⊥(I, 0)`.
pub fn check_left_perp_formula(
    comma: &CommaCategory,
    x: &ObjectClass,
    y: &ObjectClass,
    ambient_r: &[Module],
    ambient_s: &[Module],
    ambient: &[Module],
) -> Result<SetComparison> {
    let lx = perp_left(x, ambient_r)?;
    let ly = perp_left(y, ambient_s)?;
    let lhs = bxy_members(comma, &lx, &ly, ambient)?;
    let inj = ObjectClass::injectives(comma.r(), ambient_r)?;
    let zero_s = Module::zero(comma.s());
    let mut cols = componentwise(comma, x, y, ambient)?;
    cols.extend(inj.members().iter().map(|i| comma.to_module(&comma.apply_p(i, &zero_s))));
    let table = ext_table(ambient, &cols, 1)?;
    let rhs = (0..ambient.len()).filter(|&i| table[i].iter().all(|&d| d == 0)).collect();
    Ok(SetComparison { lhs, rhs })
}

#[derive(Clone, Debug)]
pub struct FrobeniusReport {
    /// `T` is exact (Tor_1 against the simples vanishes).
    pub exact: bool,
    /// `<p(mod R, mod S)>` is Frobenius on the enumerated slice.
    pub comma_frobenius: bool,
    pub r_frobenius: bool,
    pub s_frobenius: bool,
    pub preserves_projectives: bool,
}

impl FrobeniusReport {
    pub fn right_side(&self) -> bool {
        self.r_frobenius && self.s_frobenius && self.preserves_projectives
    }

    pub fn agree(&self) -> bool {
        self.comma_frobenius == self.right_side()
    }
}

/// Frobenius test for an extension-closed class of a module category:
/// Ext-projectives equal Ext-injectives, and every member has a deflation
/// from, and an inflation into, that common class with third term in the
/// class.
fn class_is_frobenius(class: &[Module]) -> Result<bool> {
    if class.is_empty() {
        return Ok(true);
    }
    let table = ext_table(class, class, 1)?;
    let n = class.len();
    let proj: Vec<usize> = (0..n).filter(|&i| table[i].iter().all(|&d| d == 0)).collect();
    let inj: Vec<usize> = (0..n).filter(|&j| (0..n).all(|i| table[i][j] == 0)).collect();
    if proj != inj {
        return Ok(false);
    }
    let alg = class[0].algebra().clone();
    let pi: Vec<Module> = proj.iter().map(|&i| class[i].clone()).collect();
    let cls = ObjectClass::new(&alg, "class", class.to_vec())?;
    for m in class {
        let g = minimal_right_approximation(m, &pi);
        if !g.is_epi() || !cls.contains(&kernel(&g).0)? {
            return Ok(false);
        }
        let h = minimal_left_approximation(m, &pi);
        if !h.is_mono() || !cls.contains(&cokernel(&h).0)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both sides of the Frobenius criterion for `<p(mod R, mod S)>`.
pub fn check_frobenius(
    comma: &CommaCategory,
    ambient: &[Module],
    ambient_r: &[Module],
    ambient_s: &[Module],
) -> Result<FrobeniusReport> {
    let mut exact = true;
    for v in 0..comma.s().n_vertices() {
        if crate::homology::tor(comma.bimodule(), &Module::simple(comma.s(), v), 1)? > 0 {
            exact = false;
        }
    }
    if !exact {
        return Err(Error::Precondition("T is not exact".into()));
    }
    let monic: Vec<Module> = ambient.iter().filter(|m| comma.to_triple(m).phi.is_mono()).cloned().collect();
    let comma_frobenius = class_is_frobenius(&monic)?;
    let r_frobenius = class_is_frobenius(ambient_r)?;
    let s_frobenius = class_is_frobenius(ambient_s)?;
    let mut preserves_projectives = true;
    for v in 0..comma.s().n_vertices() {
        if !crate::module::is_projective(&comma.tensor(&Module::projective(comma.s(), v))) {
            preserves_projectives = false;
        }
    }
    Ok(FrobeniusReport { exact, comma_frobenius, r_frobenius, s_frobenius, preserves_projectives })
}

/// Coordinates helper used by reports: the class of a morphism in a Hom basis.
pub fn hom_coordinates(basis: &[Morphism], h: &Morphism) -> Option<Vec<Scalar>> {
    coordinates(basis, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comma::split_triangular;
    use crate::field::Field;
    use crate::quiver::zoo;

    #[test]
    fn perps_over_ka2() {
        let a = Algebra::from_monomial(&zoo::ka2(Field::prime(2)));
        let all = ObjectClass::all(&a, 2).unwrap();
        let proj = ObjectClass::projectives(&a);
        assert_eq!(perp_right(&proj, all.members()).unwrap().len(), 3);
        assert!(perp_left(&all, all.members()).unwrap().same_members(&proj).unwrap());
        let simples = ObjectClass::new(&a, "simples", vec![Module::simple(&a, 0), Module::simple(&a, 1)]).unwrap();
        let cl = extension_closure(&simples, 2, 4).unwrap();
        assert_eq!(cl.len(), 3);
    }

    #[test]
    fn preenvelope_of_simple() {
        let a = Algebra::from_monomial(&zoo::ka2(Field::prime(2)));
        let all = ObjectClass::all(&a, 2).unwrap();
        let inj = ObjectClass::injectives(&a, all.members()).unwrap();
        let r = special_preenvelope(&Module::simple(&a, 0), &inj, all.members(), &ApproxOptions::default()).unwrap();
        assert!(is_isomorphic(&r.ses.middle, &Module::projective(&a, 1)).unwrap());
        assert!(is_isomorphic(&r.ses.right, &Module::simple(&a, 1)).unwrap());
    }

    #[test]
    fn remark_split_perp() {
        let l3 = zoo::l3(Field::prime(2));
        let a = Algebra::from_monomial(&l3);
        let all = ObjectClass::all(&a, 3).unwrap();
        let sp = split_triangular(&l3, &[0]).unwrap();
        assert!(!sp.comma.check_y_exact(&ObjectClass::all(sp.s(), 3).unwrap()).unwrap().is_exact());
        let c = ObjectClass::new(
            &a,
            "pXY",
            vec![Module::projective(&a, 0), Module::projective(&a, 1), Module::projective(&a, 2), Module::simple(&a, 2)],
        )
        .unwrap();
        let perp = perp_right(&c, all.members()).unwrap();
        assert_eq!(perp.len(), 4);
        assert!(perp.position(&Module::simple(&a, 0)).unwrap().is_some());
        let pre = special_precover(&Module::simple(&a, 1), &c, &ApproxOptions::default()).unwrap();
        assert!(is_isomorphic(&pre.ses.middle, &Module::projective(&a, 1)).unwrap());
    }
}
