//! Bimodules, the tensor functor `T = M ⊗_S -`, and the comma category
//! `(T ↓ mod R)` whose objects are triples `(A, B, φ: T(B) -> A)`.
//!
//! Triples are computed by passing to representations of the
//! triangular algebra `(R M; 0 S)`, presented by a quiver with one extra
//! arrow per basis vector of `M` and commutativity relations for the two
//! actions.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{word_action, Algebra, AlgebraKind, ProjectiveData, Relation, Word};
use crate::approx::ObjectClass;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::homology::{ext, presentation, realize_extension, tor, ShortExact};
use crate::matrix::Matrix;
use crate::module::{factorize, hom_space_unchecked, is_projective, Module, Morphism};
use crate::quiver::{zoo, Arrow, MonomialAlgebra, Path, Quiver};

/// An `R`-`S`-bimodule `M`, graded by `e_r M e_s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    /// `dims[r][s] = dim e_r M e_s`.
    dims: Vec<Vec<usize>>,
    /// `left_action[a][s]` for `a: r -> r'` maps `e_r M e_s -> e_r' M e_s`.
    left_action: Vec<Vec<Matrix>>,
    /// `right_action[b][r]` for `b: s -> s'` maps `e_r M e_s' -> e_r M e_s`.
    right_action: Vec<Vec<Matrix>>,
}

impl Bimodule {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dims: Vec<Vec<usize>>,
        left_action: Vec<Vec<Matrix>>,
        right_action: Vec<Vec<Matrix>>,
    ) -> Result<Bimodule> {
        if left.field() != right.field() {
            return Err(Error::AlgebraMismatch);
        }
        let (nr, ns) = (left.n_vertices(), right.n_vertices());
        if dims.len() != nr || dims.iter().any(|row| row.len() != ns) {
            return Err(Error::Shape(format!("bimodule grading must be {nr}x{ns}")));
        }
        if left_action.len() != left.n_arrows() || left_action.iter().any(|v| v.len() != ns) {
            return Err(Error::Shape("one left matrix per (left arrow, right vertex)".into()));
        }
        if right_action.len() != right.n_arrows() || right_action.iter().any(|v| v.len() != nr) {
            return Err(Error::Shape("one right matrix per (right arrow, left vertex)".into()));
        }
        for (ai, a) in left.quiver().arrows().iter().enumerate() {
            for s in 0..ns {
                let m = &left_action[ai][s];
                if m.rows() != dims[a.target][s] || m.cols() != dims[a.source][s] {
                    return Err(Error::Shape(format!("left action of {} at {s}", a.name)));
                }
            }
        }
        for (bi, b) in right.quiver().arrows().iter().enumerate() {
            for r in 0..nr {
                let m = &right_action[bi][r];
                if m.rows() != dims[r][b.source] || m.cols() != dims[r][b.target] {
                    return Err(Error::Shape(format!("right action of {} at {r}", b.name)));
                }
            }
        }
        let m = Bimodule { left, right, dims, left_action, right_action };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let lq = self.left.quiver();
        let rq = self.right.quiver();
        for (ai, a) in lq.arrows().iter().enumerate() {
            for (bi, b) in rq.arrows().iter().enumerate() {
                let lhs = self.left_action[ai][b.source].mul(&self.right_action[bi][a.source]);
                let rhs = self.right_action[bi][a.target].mul(&self.left_action[ai][b.target]);
                if lhs != rhs {
                    return Err(Error::Invalid(format!("actions of {} and {} do not commute", a.name, b.name)));
                }
            }
        }
        for (k, rel) in self.left.relations().iter().enumerate() {
            for s in 0..self.right.n_vertices() {
                if !self.eval_left(rel, s).is_zero() {
                    return Err(Error::Invalid(format!("left relation #{k} does not act as zero")));
                }
            }
        }
        for (k, rel) in self.right.relations().iter().enumerate() {
            for r in 0..self.left.n_vertices() {
                if !self.eval_right(rel, r).is_zero() {
                    return Err(Error::Invalid(format!("right relation #{k} does not act as zero")));
                }
            }
        }
        Ok(())
    }

    fn eval_left(&self, rel: &Relation, s: usize) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::zeros(f, self.dims[rel.target][s], self.dims[rel.source][s]);
        for (c, w) in &rel.terms {
            acc = acc.add(&self.left_word(s, rel.source, w).scale(c));
        }
        acc
    }

    fn eval_right(&self, rel: &Relation, r: usize) -> Matrix {
        let f = self.field();
        let mut acc = Matrix::zeros(f, self.dims[r][rel.source], self.dims[r][rel.target]);
        for (c, w) in &rel.terms {
            acc = acc.add(&self.right_word(r, rel.target, w).scale(c));
        }
        acc
    }

    /// Left action of a word of left arrows starting at `start`, inside column `s`.
    pub fn left_word(&self, s: usize, start: usize, word: &[usize]) -> Matrix {
        let dims: Vec<usize> = self.dims.iter().map(|row| row[s]).collect();
        let action: Vec<Matrix> = self.left_action.iter().map(|v| v[s].clone()).collect();
        word_action(self.field(), &dims, &action, start, word)
    }

    /// Right action `m -> m·w` of a word ending at `end`, inside row `r`:
    /// the product `R(b_1) ... R(b_n)`.
    pub fn right_word(&self, r: usize, end: usize, word: &[usize]) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[r][end]);
        for &b in word.iter().rev() {
            m = self.right_action[b][r].mul(&m);
        }
        m
    }

    /// `S` as an `S`-`S`-bimodule; `e_r S e_s` is spanned by paths `s -> r`.
    pub fn regular(s: &Arc<Algebra>) -> Bimodule {
        let f = s.field();
        let n = s.n_vertices();
        let dims: Vec<Vec<usize>> = (0..n).map(|r| (0..n).map(|c| s.projective_data(c).dims[r]).collect()).collect();
        let left_action = (0..s.n_arrows())
            .map(|a| (0..n).map(|c| s.projective_data(c).action[a].clone()).collect())
            .collect();
        let right_action = s
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(bi, b)| {
                let src = s.projective_data(b.source);
                let tgt = s.projective_data(b.target);
                let e = src.words[b.source].iter().position(Vec::is_empty).expect("idempotent word");
                (0..n)
                    .map(|r| {
                        let cols: Vec<Vec<Scalar>> = tgt.words[r]
                            .iter()
                            .map(|w| {
                                let word: Word = [vec![bi], w.clone()].concat();
                                word_action(f, &src.dims, &src.action, b.source, &word).column(e)
                            })
                            .collect();
                        Matrix::from_columns(f, src.dims[r], &cols)
                    })
                    .collect()
            })
            .collect();
        Bimodule { left: s.clone(), right: s.clone(), dims, left_action, right_action }
    }

    /// A right `S`-module, given as a left module over the opposite quiver,
    /// viewed as a `k`-`S`-bimodule.
    pub fn from_right_module(s: &Arc<Algebra>, m_op: &Module) -> Result<Bimodule> {
        if m_op.algebra().quiver() != &s.quiver().opposite() || m_op.field() != s.field() {
            return Err(Error::AlgebraMismatch);
        }
        let k = Algebra::from_monomial(&zoo::k(s.field()));
        let dims = vec![m_op.dims().to_vec()];
        let right_action = m_op.actions().iter().map(|m| vec![m.clone()]).collect();
        Bimodule::new(k, s.clone(), dims, Vec::new(), right_action)
    }

    pub fn left(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().flatten().sum()
    }

    pub fn left_action(&self, a: usize, s: usize) -> &Matrix {
        &self.left_action[a][s]
    }

    pub fn right_action(&self, b: usize, r: usize) -> &Matrix {
        &self.right_action[b][r]
    }

    /// The right module `e_r M` (forgetting the left structure) as a
    /// `k`-`S`-bimodule.
    pub fn row(&self, r: usize) -> Bimodule {
        let k = Algebra::from_monomial(&zoo::k(self.field()));
        Bimodule {
            left: k,
            right: self.right.clone(),
            dims: vec![self.dims[r].clone()],
            left_action: Vec::new(),
            right_action: self.right_action.iter().map(|v| vec![v[r].clone()]).collect(),
        }
    }

    fn tensor_data(&self, b: &Module) -> TensorData {
        let f = self.field();
        let nr = self.left.n_vertices();
        let ns = self.right.n_vertices();
        let mut quotients = Vec::with_capacity(nr);
        let mut sections = Vec::with_capacity(nr);
        let mut offsets = Vec::with_capacity(nr);
        for r in 0..nr {
            let off = crate::module::offsets((0..ns).map(|s| self.dims[r][s] * b.dim_at(s)));
            let v = off[ns];
            let mut rels: Vec<Vec<Scalar>> = Vec::new();
            for (bi, arr) in self.right.quiver().arrows().iter().enumerate() {
                let (s, s2) = (arr.source, arr.target);
                let ra = &self.right_action[bi][r];
                let ba = b.action(bi);
                for i2 in 0..self.dims[r][s2] {
                    for j in 0..b.dim_at(s) {
                        // (m_{i2}·arr) ⊗ e_j - m_{i2} ⊗ (arr e_j)
                        let mut col = vec![f.zero(); v];
                        for i in 0..self.dims[r][s] {
                            let c = ra.get(i, i2);
                            if !c.is_zero() {
                                let idx = off[s] + i * b.dim_at(s) + j;
                                col[idx] = f.add(&col[idx], c);
                            }
                        }
                        for j2 in 0..b.dim_at(s2) {
                            let c = ba.get(j2, j);
                            if !c.is_zero() {
                                let idx = off[s2] + i2 * b.dim_at(s2) + j2;
                                col[idx] = f.sub(&col[idx], c);
                            }
                        }
                        if col.iter().any(|x| !x.is_zero()) {
                            rels.push(col);
                        }
                    }
                }
            }
            let q = Matrix::from_columns(f, v, &rels).left_kernel_basis();
            let sec = q.solve(&Matrix::identity(f, q.rows())).expect("quotient map has full row rank");
            quotients.push(q);
            sections.push(sec);
            offsets.push(off);
        }
        let dims: Vec<usize> = quotients.iter().map(Matrix::rows).collect();
        let action = self
            .left
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let blocks: Vec<Matrix> =
                    (0..ns).map(|s| self.left_action[ai][s].kron(&Matrix::identity(f, b.dim_at(s)))).collect();
                let refs: Vec<&Matrix> = blocks.iter().collect();
                let big = Matrix::block_diag(f, &refs);
                quotients[a.target].mul(&big).mul(&sections[a.source])
            })
            .collect();
        let module = Module::new_unchecked(self.left.clone(), dims, action);
        debug_assert!(module.violated_relation().is_none());
        TensorData { module, quotients, sections, offsets }
    }

    /// `M ⊗_S b`.
    pub fn tensor(&self, b: &Module) -> Module {
        assert!(Algebra::same(b.algebra(), &self.right), "tensor: module over the wrong algebra");
        self.tensor_data(b).module
    }

    /// `M ⊗_S g`.
    pub fn tensor_morphism(&self, g: &Morphism) -> Morphism {
        let f = self.field();
        let src = self.tensor_data(g.source());
        let tgt = self.tensor_data(g.target());
        let ns = self.right.n_vertices();
        let maps = (0..self.left.n_vertices())
            .map(|r| {
                let blocks: Vec<Matrix> =
                    (0..ns).map(|s| Matrix::identity(f, self.dims[r][s]).kron(g.map_at(s))).collect();
                let refs: Vec<&Matrix> = blocks.iter().collect();
                tgt.quotients[r].mul(&Matrix::block_diag(f, &refs)).mul(&src.sections[r])
            })
            .collect();
        Morphism::new_unchecked(src.module, tgt.module, maps)
    }
}

impl fmt::Display for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{} bimodule, graded dims {:?}", self.left.name(), self.right.name(), self.dims)
    }
}

struct TensorData {
    module: Module,
    /// `V_r = ⊕_s M_{r,s} ⊗ B_s -> T(B)_r`
    quotients: Vec<Matrix>,
    sections: Vec<Matrix>,
    offsets: Vec<Vec<usize>>,
}

/// The right exact functor `M ⊗_S -: mod S -> mod R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorFunctor {
    bimodule: Arc<Bimodule>,
}

impl TensorFunctor {
    pub fn new(bimodule: Bimodule) -> TensorFunctor {
        TensorFunctor { bimodule: Arc::new(bimodule) }
    }

    /// The identity functor on `mod S`.
    pub fn identity(s: &Arc<Algebra>) -> TensorFunctor {
        TensorFunctor::new(Bimodule::regular(s))
    }

    pub fn bimodule(&self) -> &Arc<Bimodule> {
        &self.bimodule
    }

    pub fn apply(&self, b: &Module) -> Module {
        self.bimodule.tensor(b)
    }

    pub fn apply_morphism(&self, g: &Morphism) -> Morphism {
        self.bimodule.tensor_morphism(g)
    }
}

/// An object `(A, B, φ: T(B) -> A)` of the comma category.
#[derive(Clone, Debug, PartialEq)]
pub struct Triple {
    pub a: Module,
    pub b: Module,
    pub phi: Morphism,
}

impl Triple {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank: usize = self.phi.maps().iter().map(Matrix::rank).sum();
        write!(f, "[A {} | B {} | phi rank {}]", self.a, self.b, rank)
    }
}

/// `(a_map, b_map)` with `φ' ∘ T(b_map) = a_map ∘ φ`.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleMorphism {
    pub source: Triple,
    pub target: Triple,
    pub a_map: Morphism,
    pub b_map: Morphism,
}

#[derive(Clone, Debug)]
pub struct TripleFactorization {
    pub kernel: Triple,
    pub kernel_inclusion: TripleMorphism,
    pub image: Triple,
    pub cokernel: Triple,
    pub cokernel_projection: TripleMorphism,
}

/// `(T ↓ mod R)` for `T = M ⊗_S -`, together with the triangular algebra
/// whose representations are its objects.
#[derive(Clone, Debug)]
pub struct CommaCategory {
    functor: TensorFunctor,
    algebra: Arc<Algebra>,
    /// Arrow index of the first `M`-arrow for each `(r, s)`.
    m_offsets: Vec<Vec<usize>>,
}

fn disambiguate(left: Vec<String>, right: Vec<String>) -> (Vec<String>, Vec<String>) {
    if left.iter().any(|n| right.contains(n)) {
        (left.into_iter().map(|n| format!("R.{n}")).collect(), right.into_iter().map(|n| format!("S.{n}")).collect())
    } else {
        (left, right)
    }
}

impl CommaCategory {
    pub fn new(functor: TensorFunctor) -> CommaCategory {
        let m = functor.bimodule.clone();
        let (r, s) = (m.left.clone(), m.right.clone());
        let f = r.field();
        let (nr, ns) = (r.n_vertices(), s.n_vertices());
        let (ar, as_) = (r.n_arrows(), s.n_arrows());
        let (rv, sv) = disambiguate(r.quiver().vertices().to_vec(), s.quiver().vertices().to_vec());
        let (ra, sa) = disambiguate(
            r.quiver().arrows().iter().map(|a| a.name.clone()).collect(),
            s.quiver().arrows().iter().map(|a| a.name.clone()).collect(),
        );
        let mut arrows: Vec<Arrow> = Vec::new();
        for (a, name) in r.quiver().arrows().iter().zip(ra) {
            arrows.push(Arrow { name, source: a.source, target: a.target });
        }
        for (b, name) in s.quiver().arrows().iter().zip(sa) {
            arrows.push(Arrow { name, source: b.source + nr, target: b.target + nr });
        }
        let mut m_offsets = vec![vec![0; ns]; nr];
        for rr in 0..nr {
            for ss in 0..ns {
                m_offsets[rr][ss] = arrows.len();
                for i in 0..m.dims[rr][ss] {
                    let name = format!("m_{}_{}_{}", rv[rr], sv[ss], i + 1);
                    arrows.push(Arrow { name, source: ss + nr, target: rr });
                }
            }
        }
        let mu = |rr: usize, ss: usize, i: usize| m_offsets[rr][ss] + i;
        let vertices: Vec<String> = rv.iter().chain(&sv).cloned().collect();
        let quiver = Quiver::from_parts(vertices, arrows);

        let mut relations: Vec<Relation> = r.relations().to_vec();
        for rel in s.relations() {
            relations.push(Relation {
                source: rel.source + nr,
                target: rel.target + nr,
                terms: rel.terms.iter().map(|(c, w)| (c.clone(), w.iter().map(|b| b + ar).collect())).collect(),
            });
        }
        let minus = |c: &Scalar| f.neg(c);
        for (ai, a) in r.quiver().arrows().iter().enumerate() {
            for ss in 0..ns {
                let l = &m.left_action[ai][ss];
                for i in 0..m.dims[a.source][ss] {
                    let mut terms = vec![(f.one(), vec![mu(a.source, ss, i), ai])];
                    for k in 0..m.dims[a.target][ss] {
                        if !l.get(k, i).is_zero() {
                            terms.push((minus(l.get(k, i)), vec![mu(a.target, ss, k)]));
                        }
                    }
                    relations.push(Relation { source: ss + nr, target: a.target, terms });
                }
            }
        }
        for (bi, b) in s.quiver().arrows().iter().enumerate() {
            for rr in 0..nr {
                let rm = &m.right_action[bi][rr];
                for i in 0..m.dims[rr][b.target] {
                    let mut terms = vec![(f.one(), vec![bi + ar, mu(rr, b.target, i)])];
                    for k in 0..m.dims[rr][b.source] {
                        if !rm.get(k, i).is_zero() {
                            terms.push((minus(rm.get(k, i)), vec![mu(rr, b.source, k)]));
                        }
                    }
                    relations.push(Relation { source: b.source + nr, target: rr, terms });
                }
            }
        }

        let n_arrows = quiver.n_arrows();
        let mut projectives = Vec::new();
        for v in 0..nr {
            let pd = r.projective_data(v);
            let dims: Vec<usize> = pd.dims.iter().copied().chain(std::iter::repeat(0).take(ns)).collect();
            let action = (0..n_arrows)
                .map(|x| {
                    let arr = quiver.arrow(x);
                    if x < ar {
                        pd.action[x].clone()
                    } else {
                        Matrix::zeros(f, dims[arr.target], dims[arr.source])
                    }
                })
                .collect();
            let words = pd.words.iter().cloned().chain(std::iter::repeat(Vec::new()).take(ns)).collect();
            projectives.push(ProjectiveData { dims, action, words });
        }
        for j in 0..ns {
            let pd = s.projective_data(j);
            let dims: Vec<usize> = (0..nr).map(|rr| m.dims[rr][j]).chain(pd.dims.iter().copied()).collect();
            let mut action: Vec<Matrix> = Vec::with_capacity(n_arrows);
            for ai in 0..ar {
                action.push(m.left_action[ai][j].clone());
            }
            for bi in 0..as_ {
                action.push(pd.action[bi].clone());
            }
            for rr in 0..nr {
                for ss in 0..ns {
                    for i in 0..m.dims[rr][ss] {
                        let cols: Vec<Vec<Scalar>> =
                            pd.words[ss].iter().map(|w| m.right_word(rr, ss, w).column(i)).collect();
                        action.push(Matrix::from_columns(f, m.dims[rr][j], &cols));
                    }
                }
            }
            let mut words: Vec<Vec<Word>> = (0..nr).map(|rr| (0..m.dims[rr][j]).map(|i| vec![mu(rr, j, i)]).collect()).collect();
            for ws in &pd.words {
                words.push(ws.iter().map(|w| w.iter().map(|b| b + ar).collect()).collect());
            }
            projectives.push(ProjectiveData { dims, action, words });
        }
        let name = format!("({} M; 0 {})", r.name(), s.name());
        let kind = AlgebraKind::Triangular { r: r.clone(), s: s.clone(), bimodule: m.clone() };
        let algebra = Arc::new(Algebra::from_presentation(name, f, quiver, relations, projectives, kind));
        CommaCategory { functor, algebra, m_offsets }
    }

    pub fn functor(&self) -> &TensorFunctor {
        &self.functor
    }

    pub fn bimodule(&self) -> &Arc<Bimodule> {
        &self.functor.bimodule
    }

    pub fn r(&self) -> &Arc<Algebra> {
        &self.functor.bimodule.left
    }

    pub fn s(&self) -> &Arc<Algebra> {
        &self.functor.bimodule.right
    }

    /// The triangular algebra whose modules are the triples.
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Arrow of the triangular algebra standing for basis vector `i` of `e_r M e_s`.
    pub fn m_arrow(&self, r: usize, s: usize, i: usize) -> usize {
        self.m_offsets[r][s] + i
    }

    pub fn tensor(&self, b: &Module) -> Module {
        self.functor.apply(b)
    }

    /// A triple, checking that `φ` is a morphism `T(b) -> a`.
    pub fn triple(&self, a: Module, b: Module, phi: Morphism) -> Result<Triple> {
        if !Algebra::same(a.algebra(), self.r()) || !Algebra::same(b.algebra(), self.s()) {
            return Err(Error::AlgebraMismatch);
        }
        let tb = self.tensor(&b);
        if phi.source().dims() != tb.dims() || phi.target() != &a {
            return Err(Error::Shape("structure map must go from T(B) to A".into()));
        }
        let phi = Morphism::new(tb, a.clone(), phi.maps().to_vec())?;
        Ok(Triple { a, b, phi })
    }

    pub fn zero_triple(&self) -> Triple {
        self.apply_p(&Module::zero(self.r()), &Module::zero(self.s()))
    }

    /// The representation of the triangular algebra corresponding to `t`.
    pub fn to_module(&self, t: &Triple) -> Module {
        let data = self.functor.bimodule.tensor_data(&t.b);
        let m = &self.functor.bimodule;
        let (nr, ns) = (self.r().n_vertices(), self.s().n_vertices());
        let dims: Vec<usize> = t.a.dims().iter().chain(t.b.dims()).copied().collect();
        let mut action: Vec<Matrix> = t.a.actions().to_vec();
        action.extend(t.b.actions().iter().cloned());
        for r in 0..nr {
            let pq = t.phi.map_at(r).mul(&data.quotients[r]);
            for s in 0..ns {
                let db = t.b.dim_at(s);
                for i in 0..m.dims[r][s] {
                    action.push(pq.block(0, pq.rows(), data.offsets[r][s] + i * db, db));
                }
            }
        }
        Module::new_unchecked(self.algebra.clone(), dims, action)
    }

    /// The triple corresponding to a representation of the triangular algebra.
    pub fn to_triple(&self, x: &Module) -> Triple {
        assert!(Algebra::same(x.algebra(), &self.algebra), "to_triple: module over the wrong algebra");
        let f = x.field();
        let m = &self.functor.bimodule;
        let (r_alg, s_alg) = (self.r().clone(), self.s().clone());
        let (nr, ns) = (r_alg.n_vertices(), s_alg.n_vertices());
        let ar = r_alg.n_arrows();
        let a = Module::new_unchecked(r_alg.clone(), x.dims()[..nr].to_vec(), x.actions()[..ar].to_vec());
        let b = Module::new_unchecked(
            s_alg.clone(),
            x.dims()[nr..].to_vec(),
            x.actions()[ar..ar + s_alg.n_arrows()].to_vec(),
        );
        let data = m.tensor_data(&b);
        let maps = (0..nr)
            .map(|r| {
                let blocks: Vec<Matrix> = (0..ns)
                    .flat_map(|s| (0..m.dims[r][s]).map(move |i| (s, i)))
                    .map(|(s, i)| x.action(self.m_arrow(r, s, i)).clone())
                    .collect();
                let big = Matrix::hstack_all(f, a.dim_at(r), &blocks);
                big.mul(&data.sections[r])
            })
            .collect();
        let phi = Morphism::new_unchecked(data.module, a.clone(), maps);
        Triple { a, b, phi }
    }

    pub fn morphism_to_module(&self, g: &TripleMorphism) -> Morphism {
        let maps = g.a_map.maps().iter().chain(g.b_map.maps()).cloned().collect();
        Morphism::new_unchecked(self.to_module(&g.source), self.to_module(&g.target), maps)
    }

    pub fn morphism_to_triple(&self, h: &Morphism) -> TripleMorphism {
        let nr = self.r().n_vertices();
        let source = self.to_triple(h.source());
        let target = self.to_triple(h.target());
        let a_map = Morphism::new_unchecked(source.a.clone(), target.a.clone(), h.maps()[..nr].to_vec());
        let b_map = Morphism::new_unchecked(source.b.clone(), target.b.clone(), h.maps()[nr..].to_vec());
        TripleMorphism { source, target, a_map, b_map }
    }

    /// A morphism of triples, checking the square condition.
    pub fn triple_morphism(&self, source: &Triple, target: &Triple, a_map: Morphism, b_map: Morphism) -> Result<TripleMorphism> {
        let lhs = self.functor.apply_morphism(&b_map).then(&target.phi);
        let rhs = source.phi.then(&a_map);
        if lhs.maps() != rhs.maps() {
            return Err(Error::Invalid("square condition fails".into()));
        }
        Ok(TripleMorphism { source: source.clone(), target: target.clone(), a_map, b_map })
    }

    pub fn hom_space(&self, s: &Triple, t: &Triple) -> Vec<TripleMorphism> {
        let ms = self.to_module(s);
        let mt = self.to_module(t);
        let nr = self.r().n_vertices();
        hom_space_unchecked(&ms, &mt)
            .into_iter()
            .map(|h| TripleMorphism {
                source: s.clone(),
                target: t.clone(),
                a_map: Morphism::new_unchecked(s.a.clone(), t.a.clone(), h.maps()[..nr].to_vec()),
                b_map: Morphism::new_unchecked(s.b.clone(), t.b.clone(), h.maps()[nr..].to_vec()),
            })
            .collect()
    }

    /// `p(A, B) = (A ⊕ T(B), B, (0 1)^T)`.
    pub fn apply_p(&self, a: &Module, b: &Module) -> Triple {
        let tb = self.tensor(b);
        let parts = [a.clone(), tb.clone()];
        let sum = Module::direct_sum_all(self.r(), &parts);
        let phi = Morphism::injection(&sum, &parts, 1);
        Triple { a: sum, b: b.clone(), phi }
    }

    /// `p(α, β) = (α ⊕ T(β), β)`.
    pub fn apply_p_morphism(&self, alpha: &Morphism, beta: &Morphism) -> TripleMorphism {
        let source = self.apply_p(alpha.source(), beta.source());
        let target = self.apply_p(alpha.target(), beta.target());
        let a_map = Morphism::direct_sum(&[alpha.clone(), self.functor.apply_morphism(beta)])
            .with_source(source.a.clone())
            .with_target(target.a.clone());
        TripleMorphism { source, target, a_map, b_map: beta.clone() }
    }

    /// `q(A, B, φ) = (A, B)`.
    pub fn apply_q(&self, t: &Triple) -> (Module, Module) {
        (t.a.clone(), t.b.clone())
    }

    /// Unit `(A, B) -> q p (A, B)`.
    pub fn unit(&self, a: &Module, b: &Module) -> (Morphism, Morphism) {
        let p = self.apply_p(a, b);
        let parts = [a.clone(), self.tensor(b)];
        (Morphism::injection(&p.a, &parts, 0), Morphism::identity(b))
    }

    /// Counit `p q (Z) -> Z`, given by `(1, φ)` on the first component.
    pub fn counit(&self, z: &Triple) -> TripleMorphism {
        let source = self.apply_p(&z.a, &z.b);
        let a_map = Morphism::hcat(&[Morphism::identity(&z.a), z.phi.clone()], &source.a);
        TripleMorphism { source, target: z.clone(), a_map, b_map: Morphism::identity(&z.b) }
    }

    pub fn factorize(&self, g: &TripleMorphism) -> TripleFactorization {
        let fz = factorize(&self.morphism_to_module(g));
        TripleFactorization {
            kernel: self.to_triple(&fz.kernel),
            kernel_inclusion: self.morphism_to_triple(&fz.kernel_inclusion),
            image: self.to_triple(&fz.image),
            cokernel: self.to_triple(&fz.cokernel),
            cokernel_projection: self.morphism_to_triple(&fz.cokernel_projection),
        }
    }

    /// Projectivity by the three conditions: `B` projective, `φ` monic,
    /// `coker φ` projective.
    pub fn is_projective_triple(&self, t: &Triple) -> ProjectiveVerdict {
        let b_projective = is_projective(&t.b);
        let phi_monic = t.phi.is_mono();
        let (coker, _) = crate::module::cokernel(&t.phi);
        let cokernel_projective = is_projective(&coker);
        ProjectiveVerdict { b_projective, phi_monic, cokernel_projective, cokernel: coker }
    }

    /// Membership in `B^X_Y`: `B ∈ Y`, `φ` monic and `coker φ ∈ X`.
    pub fn membership_bxy(&self, t: &Triple, x: &ObjectClass, y: &ObjectClass) -> Result<MembershipVerdict> {
        if !Algebra::same(x.algebra(), self.r()) || !Algebra::same(y.algebra(), self.s()) {
            return Err(Error::AlgebraMismatch);
        }
        let b_in_y = y.contains(&t.b)?;
        let phi_monic = t.phi.is_mono();
        let (coker, _) = crate::module::cokernel(&t.phi);
        let cokernel_in_x = phi_monic && x.contains(&coker)?;
        Ok(MembershipVerdict { b_in_y, phi_monic, cokernel_in_x })
    }

    /// Decides whether `T` is exact on sequences ending in `Y` by vanishing
    /// of `Tor_1(M, Y)` over the listed indecomposables.
    pub fn check_y_exact(&self, y: &ObjectClass) -> Result<YExactReport> {
        if !Algebra::same(y.algebra(), self.s()) {
            return Err(Error::AlgebraMismatch);
        }
        let m = self.bimodule();
        let mut tor1 = Vec::new();
        let mut witness = None;
        for obj in y.members() {
            let d = tor(m, obj, 1)?;
            tor1.push(d);
            if d > 0 && witness.is_none() {
                let p = presentation(obj);
                let ses = ShortExact {
                    left: p.syzygy.clone(),
                    middle: p.cover.module.clone(),
                    right: obj.clone(),
                    iota: p.inclusion.clone(),
                    pi: p.epi.clone(),
                };
                let t_iota = self.functor.apply_morphism(&p.inclusion);
                let defect = t_iota.maps().iter().map(|x| x.cols() - x.rank()).sum();
                witness = Some(YExactWitness { y: obj.clone(), ses, tor1: d, defect });
            }
        }
        Ok(YExactReport { tor1, witness })
    }

    /// Fails with `PreconditionYExact` unless `T` is `Y`-exact.
    pub fn require_y_exact(&self, y: &ObjectClass) -> Result<()> {
        match self.check_y_exact(y)?.witness {
            Some(w) => Err(Error::PreconditionYExact(Box::new(w))),
            None => Ok(()),
        }
    }

    /// Sequence-level oracle: the first `0 -> B -> E -> Y -> 0` with `Y` in
    /// `y`, `B` in `ambient`, realized from a basis cocycle, whose image
    /// under `T` is not left exact.
    pub fn inexact_sequence(&self, y: &[Module], ambient: &[Module]) -> Result<Option<ShortExact>> {
        for obj in y {
            let p = presentation(obj);
            for b in ambient {
                let e = ext(obj, b, 1)?;
                for c in &e.cocycles {
                    let ses = realize_extension(&p, c);
                    if !self.functor.apply_morphism(&ses.iota).is_mono() {
                        return Ok(Some(ses));
                    }
                }
            }
        }
        Ok(None)
    }
}

#[derive(Clone, Debug)]
pub struct ProjectiveVerdict {
    pub b_projective: bool,
    pub phi_monic: bool,
    pub cokernel_projective: bool,
    pub cokernel: Module,
}

impl ProjectiveVerdict {
    pub fn is_projective(&self) -> bool {
        self.b_projective && self.phi_monic && self.cokernel_projective
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub b_in_y: bool,
    pub phi_monic: bool,
    pub cokernel_in_x: bool,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        self.b_in_y && self.phi_monic && self.cokernel_in_x
    }
}

#[derive(Clone, Debug)]
pub struct YExactReport {
    /// `dim Tor_1(M, Y)` for each listed `Y`.
    pub tor1: Vec<usize>,
    pub witness: Option<YExactWitness>,
}

impl YExactReport {
    pub fn is_exact(&self) -> bool {
        self.witness.is_none()
    }
}

/// A sequence `0 -> K -> P -> Y -> 0` whose image under `T` is not left exact.
#[derive(Clone, Debug)]
pub struct YExactWitness {
    pub y: Module,
    pub ses: ShortExact,
    pub tor1: usize,
    /// Dimension of the kernel of `T(K) -> T(P)`.
    pub defect: usize,
}

impl fmt::Display for YExactWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Tor_1(M, {}) has dimension {}; T applied to {} has a {}-dimensional kernel on the left",
            self.y, self.tor1, self.ses, self.defect
        )
    }
}

/// `Λ = (R M; 0 S)` recovered from a vertex partition of a monomial algebra.
#[derive(Clone, Debug)]
pub struct TriangularSplit {
    pub lambda: Arc<Algebra>,
    pub r_vertices: Vec<usize>,
    pub s_vertices: Vec<usize>,
    pub comma: CommaCategory,
    /// Basis paths of `e_r Λ e_s`, indexed by positions in the vertex lists.
    m_paths: Vec<Vec<Vec<Path>>>,
    r_arrows: Vec<usize>,
    s_arrows: Vec<usize>,
}

pub fn split_triangular(lambda: &MonomialAlgebra, r_vertices: &[usize]) -> Result<TriangularSplit> {
    let q = lambda.quiver();
    let n = q.n_vertices();
    let mut rv: Vec<usize> = r_vertices.to_vec();
    rv.sort_unstable();
    rv.dedup();
    if rv.iter().any(|&v| v >= n) {
        return Err(Error::Invalid("vertex out of range".into()));
    }
    let sv: Vec<usize> = (0..n).filter(|v| !rv.contains(v)).collect();
    if rv.is_empty() || sv.is_empty() {
        return Err(Error::Precondition("both sides of the split must be nonempty".into()));
    }
    if let Some(p) = lambda.path_basis().paths().iter().find(|p| rv.contains(&p.source) && sv.contains(&p.target)) {
        return Err(Error::NotTriangular(format!(
            "path {} runs from {} to {}",
            p.label(q),
            q.vertices()[p.source],
            q.vertices()[p.target]
        )));
    }
    let f = lambda.field();
    let label = |vs: &[usize]| vs.iter().map(|&v| q.vertices()[v].as_str()).collect::<Vec<_>>().join(",");
    let r_mono = lambda.induced(&format!("{}[{}]", lambda.name(), label(&rv)), &rv);
    let s_mono = lambda.induced(&format!("{}[{}]", lambda.name(), label(&sv)), &sv);
    let r_alg = Algebra::from_monomial(&r_mono);
    let s_alg = Algebra::from_monomial(&s_mono);
    let inside = |vs: &[usize]| -> Vec<usize> {
        (0..q.n_arrows()).filter(|&a| vs.contains(&q.arrow(a).source) && vs.contains(&q.arrow(a).target)).collect()
    };
    let r_arrows = inside(&rv);
    let s_arrows = inside(&sv);
    let m_paths: Vec<Vec<Vec<Path>>> = rv
        .iter()
        .map(|&r| {
            sv.iter()
                .map(|&s| lambda.path_basis().paths().iter().filter(|p| p.source == s && p.target == r).cloned().collect())
                .collect()
        })
        .collect();
    let dims: Vec<Vec<usize>> = m_paths.iter().map(|row| row.iter().map(Vec::len).collect()).collect();
    let arrow_path = |a: usize| Path { source: q.arrow(a).source, target: q.arrow(a).target, arrows: vec![a] };
    let act = |from: &[Path], to: &[Path], extend: &dyn Fn(&Path) -> Option<Path>| {
        let mut m = Matrix::zeros(f, to.len(), from.len());
        for (j, p) in from.iter().enumerate() {
            if let Some(e) = extend(p) {
                if let Some(i) = to.iter().position(|t| *t == e) {
                    m.set(i, j, f.one());
                }
            }
        }
        m
    };
    let left_action = r_arrows
        .iter()
        .map(|&a| {
            let (ri, ti) = (rv.iter().position(|&v| v == q.arrow(a).source).unwrap(), rv.iter().position(|&v| v == q.arrow(a).target).unwrap());
            (0..sv.len())
                .map(|si| act(&m_paths[ri][si], &m_paths[ti][si], &|p| lambda.concat(p, &arrow_path(a))))
                .collect()
        })
        .collect();
    let right_action = s_arrows
        .iter()
        .map(|&b| {
            let (si, ti) = (sv.iter().position(|&v| v == q.arrow(b).source).unwrap(), sv.iter().position(|&v| v == q.arrow(b).target).unwrap());
            (0..rv.len())
                .map(|ri| act(&m_paths[ri][ti], &m_paths[ri][si], &|p| lambda.concat(&arrow_path(b), p)))
                .collect()
        })
        .collect();
    let bimodule = Bimodule::new(r_alg, s_alg, dims, left_action, right_action)?;
    let comma = CommaCategory::new(TensorFunctor::new(bimodule));
    Ok(TriangularSplit {
        lambda: Algebra::from_monomial(lambda),
        r_vertices: rv,
        s_vertices: sv,
        comma,
        m_paths,
        r_arrows,
        s_arrows,
    })
}

impl TriangularSplit {
    /// Vertex names given, rather than indices.
    pub fn by_names(lambda: &MonomialAlgebra, r_names: &[&str]) -> Result<TriangularSplit> {
        let idx = r_names
            .iter()
            .map(|n| lambda.quiver().vertex_index(n).ok_or_else(|| Error::Unresolved(format!("vertex {n}"))))
            .collect::<Result<Vec<_>>>()?;
        split_triangular(lambda, &idx)
    }

    pub fn r(&self) -> &Arc<Algebra> {
        self.comma.r()
    }

    pub fn s(&self) -> &Arc<Algebra> {
        self.comma.s()
    }

    pub fn bimodule(&self) -> &Arc<Bimodule> {
        self.comma.bimodule()
    }

    /// Representation of the comma algebra matching a `Λ`-module.
    fn lambda_to_comma(&self, m: &Module) -> Module {
        let dims: Vec<usize> = self.r_vertices.iter().chain(&self.s_vertices).map(|&v| m.dim_at(v)).collect();
        let mut action: Vec<Matrix> = self.r_arrows.iter().chain(&self.s_arrows).map(|&a| m.action(a).clone()).collect();
        for (ri, row) in self.m_paths.iter().enumerate() {
            for (si, paths) in row.iter().enumerate() {
                let _ = ri;
                for p in paths {
                    action.push(m.word(self.s_vertices[si], &p.arrows));
                }
            }
        }
        Module::new_unchecked(self.comma.algebra.clone(), dims, action)
    }

    fn comma_to_lambda(&self, x: &Module) -> Module {
        let q = self.lambda.quiver();
        let nr = self.r_vertices.len();
        let pos = |v: usize| -> usize {
            match self.r_vertices.iter().position(|&w| w == v) {
                Some(i) => i,
                None => nr + self.s_vertices.iter().position(|&w| w == v).unwrap(),
            }
        };
        let dims: Vec<usize> = (0..q.n_vertices()).map(|v| x.dim_at(pos(v))).collect();
        let action = (0..q.n_arrows())
            .map(|a| {
                if let Some(i) = self.r_arrows.iter().position(|&b| b == a) {
                    x.action(i).clone()
                } else if let Some(i) = self.s_arrows.iter().position(|&b| b == a) {
                    x.action(self.r_arrows.len() + i).clone()
                } else {
                    let (s, r) = (pos(q.arrow(a).source) - nr, pos(q.arrow(a).target));
                    let i = self.m_paths[r][s].iter().position(|p| p.arrows == [a]).expect("arrow is a basis path");
                    x.action(self.comma.m_arrow(r, s, i)).clone()
                }
            })
            .collect();
        Module::new_unchecked(self.lambda.clone(), dims, action)
    }

    pub fn module_to_triple(&self, m: &Module) -> Result<Triple> {
        if !Algebra::same(m.algebra(), &self.lambda) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.comma.to_triple(&self.lambda_to_comma(m)))
    }

    pub fn triple_to_module(&self, t: &Triple) -> Module {
        self.comma_to_lambda(&self.comma.to_module(t))
    }

    pub fn morphism_to_triple(&self, h: &Morphism) -> TripleMorphism {
        let maps: Vec<Matrix> = self.r_vertices.iter().chain(&self.s_vertices).map(|&v| h.map_at(v).clone()).collect();
        let g = Morphism::new_unchecked(self.lambda_to_comma(h.source()), self.lambda_to_comma(h.target()), maps);
        self.comma.morphism_to_triple(&g)
    }

    pub fn morphism_to_module(&self, g: &TripleMorphism) -> Morphism {
        let h = self.comma.morphism_to_module(g);
        let nr = self.r_vertices.len();
        let maps = (0..self.lambda.n_vertices())
            .map(|v| match self.r_vertices.iter().position(|&w| w == v) {
                Some(i) => h.map_at(i).clone(),
                None => h.map_at(nr + self.s_vertices.iter().position(|&w| w == v).unwrap()).clone(),
            })
            .collect();
        Morphism::new_unchecked(self.comma_to_lambda(h.source()), self.comma_to_lambda(h.target()), maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::is_isomorphic;
    use crate::quiver::zoo;

    fn l3_split() -> TriangularSplit {
        split_triangular(&zoo::l3(Field::prime(2)), &[0]).unwrap()
    }

    #[test]
    fn split_of_l3() {
        let sp = l3_split();
        assert_eq!(sp.r().dim(), 1);
        assert_eq!(sp.s().dim(), 3);
        assert_eq!(sp.bimodule().dims(), &[vec![1, 0]]);
        assert!(sp.bimodule().right_action(0, 0).is_zero());
        assert_eq!(sp.comma.algebra().dim(), 5);
        let two = split_triangular(&zoo::l3(Field::prime(2)), &[0, 1]).unwrap();
        assert_eq!(two.r().dim(), 3);
        assert_eq!(two.bimodule().total_dim(), 1);
        assert!(matches!(split_triangular(&zoo::ka2(Field::prime(2)), &[1]), Err(Error::NotTriangular(_))));
        assert!(split_triangular(&zoo::ka2(Field::prime(2)), &[0]).is_ok());
    }

    #[test]
    fn tensor_values() {
        let sp = l3_split();
        let s = sp.s().clone();
        // S has vertices 2, 3 (indices 0, 1)
        let t = |m: &Module| sp.comma.tensor(m).total_dim();
        assert_eq!(t(&Module::projective(&s, 0)), 1);
        assert_eq!(t(&Module::projective(&s, 1)), 0);
        assert_eq!(t(&Module::simple(&s, 1)), 0);
        assert_eq!(t(&Module::zero(&s)), 0);
        let reg = TensorFunctor::identity(&s);
        for v in 0..2 {
            let p = Module::projective(&s, v);
            assert!(is_isomorphic(&reg.apply(&p), &p).unwrap());
        }
    }

    #[test]
    fn comma_projectives_match_lambda() {
        let sp = l3_split();
        for v in 0..3 {
            let p = Module::projective(&sp.lambda, v);
            let t = sp.module_to_triple(&p).unwrap();
            let back = sp.triple_to_module(&t);
            assert_eq!(back, p);
            assert!(sp.comma.is_projective_triple(&t).is_projective());
        }
        let s2 = Module::simple(&sp.lambda, 1);
        let t = sp.module_to_triple(&s2).unwrap();
        assert_eq!(t.a.total_dim(), 0);
        assert!(!t.phi.is_mono());
        assert!(!sp.comma.is_projective_triple(&t).is_projective());
    }

    #[test]
    fn regular_bimodule_of_n2() {
        let n = Algebra::from_monomial(&zoo::n2(Field::prime(3)));
        let m = Bimodule::regular(&n);
        assert_eq!(m.dims(), &[vec![2]]);
        let c = CommaCategory::new(TensorFunctor::identity(&n));
        assert_eq!(c.algebra().dim(), 6);
    }
}
