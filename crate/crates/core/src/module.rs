//! Representations, morphisms and the abelian structure of `mod A`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{word_action, Algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct Module {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct Morphism {
    source: Module,
    target: Module,
    maps: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Module) -> bool {
        Algebra::same(&self.algebra, &other.algebra) && self.dims == other.dims && self.action == other.action
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Morphism) -> bool {
        self.source == other.source && self.target == other.target && self.maps == other.maps
    }
}

pub(crate) fn offsets(dims: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    let mut out = Vec::new();
    for d in dims {
        out.push(acc);
        acc += d;
    }
    out.push(acc);
    out
}

impl Module {
    /// Validates shapes and relations.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Module> {
        let q = algebra.quiver();
        if dims.len() != q.n_vertices() || action.len() != q.n_arrows() {
            return Err(Error::Shape(format!(
                "expected {} dims and {} arrow matrices",
                q.n_vertices(),
                q.n_arrows()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&action) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::Shape(format!("arrow {} has entries over the wrong field", a.name)));
            }
        }
        let m = Module { algebra, dims, action };
        if let Some(i) = m.violated_relation() {
            return Err(Error::Invalid(format!("relation #{i} does not act as zero")));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Module {
        debug_assert_eq!(dims.len(), algebra.n_vertices());
        debug_assert_eq!(action.len(), algebra.n_arrows());
        Module { algebra, dims, action }
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Module {
        let f = algebra.field();
        let action = algebra.quiver().arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module { algebra: algebra.clone(), dims: vec![0; algebra.n_vertices()], action }
    }

    /// One-dimensional at `v`, all arrows zero.
    pub fn simple(algebra: &Arc<Algebra>, v: usize) -> Module {
        let mut dims = vec![0; algebra.n_vertices()];
        dims[v] = 1;
        Module::with_zero_action(algebra, dims)
    }

    pub fn with_zero_action(algebra: &Arc<Algebra>, dims: Vec<usize>) -> Module {
        let f = algebra.field();
        let action =
            algebra.quiver().arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        Module { algebra: algebra.clone(), dims, action }
    }

    /// `A e_v`.
    pub fn projective(algebra: &Arc<Algebra>, v: usize) -> Module {
        let p = algebra.projective_data(v);
        Module { algebra: algebra.clone(), dims: p.dims.clone(), action: p.action.clone() }
    }

    /// The injective envelope of the simple at `v`, as the dual of the
    /// projective of the opposite algebra. Needs a monomial presentation.
    pub fn injective(algebra: &Arc<Algebra>, v: usize) -> Result<Module> {
        let op = algebra.opposite()?;
        Module::projective(&op, v).dual_over(algebra)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, a: usize) -> &Matrix {
        &self.action[a]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Action of a word starting at vertex `start`.
    pub fn word(&self, start: usize, word: &[usize]) -> Matrix {
        word_action(self.field(), &self.dims, &self.action, start, word)
    }

    /// Index of the first relation that fails, if any.
    pub fn violated_relation(&self) -> Option<usize> {
        let f = self.field();
        self.algebra.relations().iter().position(|r| {
            let mut acc = Matrix::zeros(f, self.dims[r.target], self.dims[r.source]);
            for (c, w) in &r.terms {
                acc = acc.add(&self.word(r.source, w).scale(c));
            }
            !acc.is_zero()
        })
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        Algebra::same(&self.algebra, &other.algebra)
    }

    pub fn direct_sum(&self, other: &Module) -> Module {
        Module::direct_sum_all(&self.algebra, &[self.clone(), other.clone()])
    }

    pub fn direct_sum_all(algebra: &Arc<Algebra>, parts: &[Module]) -> Module {
        let f = algebra.field();
        let n = algebra.n_vertices();
        let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let action = (0..algebra.n_arrows())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.action[a]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Module { algebra: algebra.clone(), dims, action }
    }

    /// `m^k`.
    pub fn power(&self, k: usize) -> Module {
        Module::direct_sum_all(&self.algebra, &vec![self.clone(); k])
    }

    /// Vector space dual, a module over the opposite algebra.
    pub fn dual(&self) -> Result<Module> {
        let op = self.algebra.opposite()?;
        self.dual_over(&op)
    }

    /// Dual placed over a given algebra whose quiver is the opposite quiver.
    pub fn dual_over(&self, target: &Arc<Algebra>) -> Result<Module> {
        if target.quiver() != &self.algebra.quiver().opposite() {
            return Err(Error::AlgebraMismatch);
        }
        let action = self.action.iter().map(Matrix::transpose).collect();
        Ok(Module { algebra: target.clone(), dims: self.dims.clone(), action })
    }

    /// The submodule spanned per vertex by the columns of `basis[v]`, which
    /// must be linearly independent and stable under the action.
    pub fn submodule(&self, basis: Vec<Matrix>) -> (Module, Morphism) {
        let q = self.algebra.quiver();
        let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
        let action = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let img = self.action[i].mul(&basis[a.source]);
                basis[a.target].solve(&img).expect("subspace is not a submodule")
            })
            .collect();
        let sub = Module { algebra: self.algebra.clone(), dims, action };
        let incl = Morphism { source: sub.clone(), target: self.clone(), maps: basis };
        (sub, incl)
    }

    /// Ranks of all arrow matrices; an isomorphism invariant.
    pub fn rank_profile(&self) -> Vec<usize> {
        self.action.iter().map(Matrix::rank).collect()
    }

    /// Top: `dim M_v - dim rad(M)_v` per vertex.
    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len()).map(|v| self.dims[v] - self.radical_basis(v).cols()).collect()
    }

    /// Basis of `rad(M)_v`: the span of images of arrows ending at `v`.
    pub fn radical_basis(&self, v: usize) -> Matrix {
        let f = self.field();
        let imgs: Vec<Matrix> = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .map(|(i, _)| self.action[i].clone())
            .collect();
        Matrix::hstack_all(f, self.dims[v], &imgs).column_space()
    }

    pub fn dims_string(&self) -> String {
        self.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.dims_string())
    }
}

impl Morphism {
    pub fn new(source: Module, target: Module, maps: Vec<Matrix>) -> Result<Morphism> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch);
        }
        if maps.len() != source.dims.len() {
            return Err(Error::Shape("one matrix per vertex required".into()));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.rows() != target.dims[v] || m.cols() != source.dims[v] {
                return Err(Error::Shape(format!("map at vertex {v} has the wrong shape")));
            }
        }
        let h = Morphism { source, target, maps };
        if !h.commutes() {
            return Err(Error::Invalid("maps do not commute with the arrows".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: Module, target: Module, maps: Vec<Matrix>) -> Morphism {
        debug_assert!(maps.len() == source.dims.len());
        Morphism { source, target, maps }
    }

    pub fn commutes(&self) -> bool {
        self.source.algebra.quiver().arrows().iter().enumerate().all(|(i, a)| {
            self.maps[a.target].mul(&self.source.action[i]) == self.target.action[i].mul(&self.maps[a.source])
        })
    }

    pub fn identity(m: &Module) -> Morphism {
        let f = m.field();
        let maps = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn zero(m: &Module, n: &Module) -> Morphism {
        let f = m.field();
        let maps = m.dims.iter().zip(&n.dims).map(|(&s, &t)| Matrix::zeros(f, t, s)).collect();
        Morphism { source: m.clone(), target: n.clone(), maps }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map_at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        debug_assert_eq!(self.target.dims, g.source.dims);
        let maps = self.maps.iter().zip(&g.maps).map(|(f, g)| g.mul(f)).collect();
        Morphism { source: self.source.clone(), target: g.target.clone(), maps }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        Morphism { maps, ..self.clone() }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect();
        Morphism { maps, ..self.clone() }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism { maps: self.maps.iter().map(|m| m.scale(s)).collect(), ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), maps })
    }

    /// All entries, vertex by vertex, row-major.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// `(f g) : A ⊕ B -> C`.
    pub fn hcat(parts: &[Morphism], source: &Module) -> Morphism {
        let target = parts[0].target.clone();
        let f = target.field();
        let maps = (0..target.dims.len())
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::hstack_all(f, target.dims[v], &blocks)
            })
            .collect();
        Morphism { source: source.clone(), target, maps }
    }

    /// `(f; g) : A -> B ⊕ C`.
    pub fn vcat(parts: &[Morphism], target: &Module) -> Morphism {
        let source = parts[0].source.clone();
        let f = source.field();
        let maps = (0..source.dims.len())
            .map(|v| {
                let blocks: Vec<Matrix> = parts.iter().map(|p| p.maps[v].clone()).collect();
                Matrix::vstack_all(f, source.dims[v], &blocks)
            })
            .collect();
        Morphism { source, target: target.clone(), maps }
    }

    /// `f ⊕ g`.
    pub fn direct_sum(parts: &[Morphism]) -> Morphism {
        let alg = parts[0].source.algebra.clone();
        let f = alg.field();
        let source = Module::direct_sum_all(&alg, &parts.iter().map(|p| p.source.clone()).collect::<Vec<_>>());
        let target = Module::direct_sum_all(&alg, &parts.iter().map(|p| p.target.clone()).collect::<Vec<_>>());
        let maps = (0..alg.n_vertices())
            .map(|v| Matrix::block_diag(f, &parts.iter().map(|p| &p.maps[v]).collect::<Vec<_>>()))
            .collect();
        Morphism { source, target, maps }
    }

    /// Inclusion of summand `k` of `Module::direct_sum_all(parts)`.
    pub fn injection(sum: &Module, parts: &[Module], k: usize) -> Morphism {
        let f = sum.field();
        let maps = (0..sum.dims.len())
            .map(|v| {
                let off = offsets(parts.iter().map(|p| p.dims[v]));
                let mut m = Matrix::zeros(f, sum.dims[v], parts[k].dims[v]);
                m.set_block(off[k], 0, &Matrix::identity(f, parts[k].dims[v]));
                m
            })
            .collect();
        Morphism { source: parts[k].clone(), target: sum.clone(), maps }
    }

    /// Projection onto summand `k` of `Module::direct_sum_all(parts)`.
    pub fn projection(sum: &Module, parts: &[Module], k: usize) -> Morphism {
        let f = sum.field();
        let maps = (0..sum.dims.len())
            .map(|v| {
                let off = offsets(parts.iter().map(|p| p.dims[v]));
                let mut m = Matrix::zeros(f, parts[k].dims[v], sum.dims[v]);
                m.set_block(0, off[k], &Matrix::identity(f, parts[k].dims[v]));
                m
            })
            .collect();
        Morphism { source: sum.clone(), target: parts[k].clone(), maps }
    }

    pub(crate) fn with_source(mut self, source: Module) -> Morphism {
        self.source = source;
        self
    }

    pub(crate) fn with_target(mut self, target: Module) -> Morphism {
        self.target = target;
        self
    }
}

/// Basis of `Hom(m, n)`: the solution space of `f_t M(a) = N(a) f_s`.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<Morphism>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(hom_space_unchecked(m, n))
}

pub(crate) fn hom_space_unchecked(m: &Module, n: &Module) -> Vec<Morphism> {
    let f = m.field();
    let alg = m.algebra();
    let nv = alg.n_vertices();
    let sizes: Vec<usize> = (0..nv).map(|v| n.dims[v] * m.dims[v]).collect();
    let off = offsets(sizes.iter().copied());
    let unknowns = off[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = &m.action[ai];
        let na = &n.action[ai];
        // entry (i, j) of f_t * M(a) - N(a) * f_s, with i < dim N_t, j < dim M_s
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![f.zero(); unknowns];
                let mut any = false;
                for k in 0..m.dims[t] {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        let idx = off[t] + i * m.dims[t] + k;
                        row[idx] = f.add(&row[idx], c);
                        any = true;
                    }
                }
                for k in 0..n.dims[s] {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        let idx = off[s] + k * m.dims[s] + j;
                        row[idx] = f.sub(&row[idx], c);
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(f, 0, unknowns)
    } else {
        let r = rows.len();
        Matrix::from_scalars(f, r, unknowns, rows.into_iter().flatten().collect())
    };
    let kernel = system.kernel_basis();
    (0..kernel.cols())
        .map(|c| {
            let col = kernel.column(c);
            let maps = (0..nv)
                .map(|v| {
                    Matrix::from_scalars(f, n.dims[v], m.dims[v], col[off[v]..off[v + 1]].to_vec())
                })
                .collect();
            Morphism { source: m.clone(), target: n.clone(), maps }
        })
        .collect()
}

/// Coordinates of `h` in a basis of a space of morphisms.
pub fn coordinates(basis: &[Morphism], h: &Morphism) -> Option<Vec<Scalar>> {
    let f = h.source.field();
    let target = h.flatten();
    if basis.is_empty() {
        return target.iter().all(Scalar::is_zero).then(Vec::new);
    }
    let cols: Vec<Vec<Scalar>> = basis.iter().map(Morphism::flatten).collect();
    let a = Matrix::from_columns(f, target.len(), &cols);
    let b = Matrix::from_columns(f, target.len(), &[target]);
    a.solve(&b).map(|x| x.column(0))
}

/// Linear combination of morphisms (all with the same source and target).
pub fn combine(basis: &[Morphism], coeffs: &[Scalar], source: &Module, target: &Module) -> Morphism {
    let mut acc = Morphism::zero(source, target);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&b.scale(c));
        }
    }
    acc
}

#[derive(Clone, Debug)]
pub struct Factorization {
    pub kernel: Module,
    pub kernel_inclusion: Morphism,
    pub image: Module,
    /// source ↠ image
    pub coimage: Morphism,
    /// image ↪ target
    pub image_inclusion: Morphism,
    pub cokernel: Module,
    pub cokernel_projection: Morphism,
}

pub fn kernel(h: &Morphism) -> (Module, Morphism) {
    let basis = h.maps.iter().map(Matrix::kernel_basis).collect();
    h.source.submodule(basis)
}

pub fn cokernel(h: &Morphism) -> (Module, Morphism) {
    let t = &h.target;
    let f = t.field();
    let q: Vec<Matrix> = h.maps.iter().map(Matrix::left_kernel_basis).collect();
    let sections: Vec<Matrix> = q
        .iter()
        .map(|qv| qv.solve(&Matrix::identity(f, qv.rows())).expect("left kernel basis has full row rank"))
        .collect();
    let dims: Vec<usize> = q.iter().map(Matrix::rows).collect();
    let action = t
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| q[a.target].mul(&t.action[i]).mul(&sections[a.source]))
        .collect();
    let c = Module { algebra: t.algebra.clone(), dims, action };
    let proj = Morphism { source: t.clone(), target: c.clone(), maps: q };
    (c, proj)
}

pub fn image(h: &Morphism) -> (Module, Morphism, Morphism) {
    let basis: Vec<Matrix> = h.maps.iter().map(Matrix::column_space).collect();
    let (img, incl) = h.target.submodule(basis);
    let coimage_maps = h
        .maps
        .iter()
        .zip(&incl.maps)
        .map(|(m, b)| b.solve(m).expect("image contains the columns"))
        .collect();
    let coimage = Morphism { source: h.source.clone(), target: img.clone(), maps: coimage_maps };
    (img, coimage, incl)
}

pub fn factorize(h: &Morphism) -> Factorization {
    let (kernel, kernel_inclusion) = kernel(h);
    let (image, coimage, image_inclusion) = image(h);
    let (cokernel, cokernel_projection) = cokernel(h);
    Factorization { kernel, kernel_inclusion, image, coimage, image_inclusion, cokernel, cokernel_projection }
}

/// Some `g` with `f ∘ g = h` (for `f: Y -> Z`, `h: X -> Z`).
pub fn lift(f: &Morphism, h: &Morphism) -> Option<Morphism> {
    let basis = hom_space_unchecked(&h.source, &f.source);
    let images: Vec<Morphism> = basis.iter().map(|g| g.then(f)).collect();
    let c = coordinates(&images, h)?;
    Some(combine(&basis, &c, &h.source, &f.source))
}

/// Some `g` with `g ∘ f = h` (for `f: X -> Y`, `h: X -> Z`).
pub fn extend(f: &Morphism, h: &Morphism) -> Option<Morphism> {
    let basis = hom_space_unchecked(&f.target, &h.target);
    let images: Vec<Morphism> = basis.iter().map(|g| f.then(g)).collect();
    let c = coordinates(&images, h)?;
    Some(combine(&basis, &c, &f.target, &h.target))
}

/// `g` with `g ∘ epi = h`, assuming `h` kills `ker(epi)`; computed vertexwise.
pub fn factor_through_epi(epi: &Morphism, h: &Morphism) -> Morphism {
    let f = h.source.field();
    let maps = epi
        .maps
        .iter()
        .zip(&h.maps)
        .map(|(e, hv)| {
            let s = e.solve(&Matrix::identity(f, e.rows())).expect("epi has a right inverse");
            hv.mul(&s)
        })
        .collect();
    Morphism { source: epi.target.clone(), target: h.target.clone(), maps }
}

/// `g` with `mono ∘ g = h`, assuming the image of `h` lies in that of `mono`.
pub fn factor_through_mono(mono: &Morphism, h: &Morphism) -> Option<Morphism> {
    let maps = mono.maps.iter().zip(&h.maps).map(|(m, hv)| m.solve(hv)).collect::<Option<Vec<_>>>()?;
    Some(Morphism { source: h.source.clone(), target: mono.source.clone(), maps })
}

/// Pushout of `f: A -> B` and `g: A -> C`: returns `(P, B -> P, C -> P)`.
pub fn pushout(f: &Morphism, g: &Morphism) -> (Module, Morphism, Morphism) {
    let alg = f.source.algebra.clone();
    let parts = [f.target.clone(), g.target.clone()];
    let sum = Module::direct_sum_all(&alg, &parts);
    let map = Morphism::vcat(&[f.clone(), g.scale(&alg.field().from_i64(-1))], &sum);
    let (p, proj) = cokernel(&map);
    let ib = Morphism::injection(&sum, &parts, 0).then(&proj);
    let ic = Morphism::injection(&sum, &parts, 1).then(&proj);
    (p, ib, ic)
}

/// Pullback of `f: B -> D` and `g: C -> D`: returns `(Q, Q -> B, Q -> C)`.
pub fn pullback(f: &Morphism, g: &Morphism) -> (Module, Morphism, Morphism) {
    let alg = f.source.algebra.clone();
    let parts = [f.source.clone(), g.source.clone()];
    let sum = Module::direct_sum_all(&alg, &parts);
    let map = Morphism::hcat(&[f.clone(), g.scale(&alg.field().from_i64(-1))], &sum);
    let (q, incl) = kernel(&map);
    let pb = incl.then(&Morphism::projection(&sum, &parts, 0));
    let pc = incl.then(&Morphism::projection(&sum, &parts, 1));
    (q, pb, pc)
}

/// A direct sum of indecomposable projectives with its generators recorded:
/// summand `k` is `P(gens[k])`.
#[derive(Clone, Debug)]
pub struct Projective {
    pub gens: Vec<usize>,
    pub module: Module,
}

impl Projective {
    pub fn new(algebra: &Arc<Algebra>, gens: Vec<usize>) -> Projective {
        let parts: Vec<Module> = gens.iter().map(|&v| Module::projective(algebra, v)).collect();
        let module = Module::direct_sum_all(algebra, &parts);
        Projective { gens, module }
    }

    pub fn parts(&self) -> Vec<Module> {
        self.gens.iter().map(|&v| Module::projective(self.module.algebra(), v)).collect()
    }

    /// The morphism sending generator `k` to `images[k] ∈ target_{gens[k]}`.
    pub fn map_from_generators(&self, target: &Module, images: &[Vec<Scalar>]) -> Morphism {
        let alg = self.module.algebra();
        let f = alg.field();
        let nv = alg.n_vertices();
        let maps = (0..nv)
            .map(|w| {
                let blocks: Vec<Matrix> = self
                    .gens
                    .iter()
                    .zip(images)
                    .map(|(&v, x)| {
                        let pd = alg.projective_data(v);
                        let x = Matrix::from_columns(f, target.dims[v], &[x.clone()]);
                        let cols: Vec<Vec<Scalar>> =
                            pd.words[w].iter().map(|word| target.word(v, word).mul(&x).column(0)).collect();
                        Matrix::from_columns(f, target.dims[w], &cols)
                    })
                    .collect();
                Matrix::hstack_all(f, target.dims[w], &blocks)
            })
            .collect();
        Morphism { source: self.module.clone(), target: target.clone(), maps }
    }

    /// Images of the generators under `h: P -> X`.
    pub fn generator_images(&self, h: &Morphism) -> Vec<Vec<Scalar>> {
        let alg = self.module.algebra();
        let mut seen = vec![0usize; alg.n_vertices()];
        self.gens
            .iter()
            .map(|&v| {
                let idx = generator_offset(alg, &self.gens, v, seen[v]);
                seen[v] += 1;
                h.maps[v].column(idx)
            })
            .collect()
    }
}

/// Column index at vertex `v` of the idempotent of the `occurrence`-th copy
/// of `P(v)` in `⊕ P(gens)`.
fn generator_offset(alg: &Arc<Algebra>, gens: &[usize], v: usize, occurrence: usize) -> usize {
    let mut off = 0;
    let mut count = 0;
    for &g in gens {
        let pd = alg.projective_data(g);
        if g == v {
            if count == occurrence {
                let e = pd.words[v].iter().position(Vec::is_empty).expect("idempotent word present");
                return off + e;
            }
            count += 1;
        }
        off += pd.dims[v];
    }
    unreachable!("generator occurrence out of range")
}

/// Minimal projective presentation data `P ↠ M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub projective: Projective,
    pub epi: Morphism,
}

/// Projective cover: one copy of `P(v)` per top basis vector at `v`.
pub fn projective_cover(m: &Module) -> ProjectiveCover {
    let alg = m.algebra();
    let f = m.field();
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for v in 0..alg.n_vertices() {
        let rad = m.radical_basis(v);
        for i in rad.complement_indices() {
            gens.push(v);
            images.push(Matrix::identity(f, m.dims[v]).column(i));
        }
    }
    let projective = Projective::new(alg, gens);
    let epi = projective.map_from_generators(m, &images);
    ProjectiveCover { projective, epi }
}

/// Whether `m` is projective: its projective cover is an isomorphism.
pub fn is_projective(m: &Module) -> bool {
    let pc = projective_cover(m);
    pc.projective.module.total_dim() == m.total_dim()
}

impl AlgebraKind {
    pub fn is_monomial(&self) -> bool {
        matches!(self, AlgebraKind::Monomial(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::zoo;

    fn ka2() -> Arc<Algebra> {
        Algebra::from_monomial(&zoo::ka2(Field::prime(2)))
    }

    #[test]
    fn projectives_of_ka2() {
        let a = ka2();
        let p1 = Module::projective(&a, 0);
        let p2 = Module::projective(&a, 1);
        assert_eq!(p1.dims(), &[1, 0]);
        assert_eq!(p2.dims(), &[1, 1]);
        assert!(p2.action(0).is_identity());
    }

    #[test]
    fn hom_dimensions() {
        let a = ka2();
        let p2 = Module::projective(&a, 1);
        let s1 = Module::simple(&a, 0);
        let s2 = Module::simple(&a, 1);
        assert_eq!(hom_space(&p2, &s2).unwrap().len(), 1);
        assert_eq!(hom_space(&p2, &s1).unwrap().len(), 0);
        assert_eq!(hom_space(&p2, &Module::zero(&a)).unwrap().len(), 0);
    }

    #[test]
    fn kernel_of_top_projection() {
        let a = ka2();
        let s2 = Module::simple(&a, 1);
        let pc = projective_cover(&s2);
        assert_eq!(pc.projective.gens, vec![1]);
        let fac = factorize(&pc.epi);
        assert_eq!(fac.kernel.dims(), &[1, 0]);
        assert!(fac.cokernel.is_zero());
        assert!(fac.kernel_inclusion.then(&pc.epi).is_zero());
    }

    #[test]
    fn injectives_of_l3() {
        let a = Algebra::from_monomial(&zoo::l3(Field::prime(2)));
        let i1 = Module::injective(&a, 0).unwrap();
        assert_eq!(i1, Module::projective(&a, 1));
        let i3 = Module::injective(&a, 2).unwrap();
        assert_eq!(i3, Module::simple(&a, 2));
    }

    #[test]
    fn pushout_of_split_data() {
        let a = ka2();
        let s1 = Module::simple(&a, 0);
        let z = Morphism::zero(&Module::zero(&a), &s1);
        let (p, _, _) = pushout(&z, &z);
        assert_eq!(p.dims(), &[2, 0]);
    }
}
