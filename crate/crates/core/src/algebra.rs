//! Finite-dimensional algebras presented by a quiver with linear relations,
//! together with explicit indecomposable projectives.
//!
//! Monomial algebras are the user-facing input. Triangular algebras
//! `(R M; 0 S)` built from a bimodule have commutativity relations, so the
//! representation layer works with this more general presentation.

use std::sync::Arc;

use crate::comma::Bimodule;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::quiver::{MonomialAlgebra, Path, Quiver};

/// A word in the arrows, traversal order. Empty means an idempotent.
pub type Word = Vec<usize>;

/// `sum coeff * word = 0`; all words share source and target.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub source: usize,
    pub target: usize,
    pub terms: Vec<(Scalar, Word)>,
}

/// The representation `Lambda e_v` together with, for each basis vector,
/// a word `w` with basis vector = `w * e_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveData {
    pub dims: Vec<usize>,
    pub action: Vec<Matrix>,
    pub words: Vec<Vec<Word>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Monomial(MonomialAlgebra),
    /// Vertices of `r` first, then of `s`; arrows of `r`, of `s`, then one
    /// arrow per basis vector of each graded piece of the bimodule.
    Triangular { r: Arc<Algebra>, s: Arc<Algebra>, bimodule: Arc<Bimodule> },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    name: String,
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
    projectives: Vec<ProjectiveData>,
    kind: AlgebraKind,
}

impl Algebra {
    pub(crate) fn from_presentation(
        name: String,
        field: Field,
        quiver: Quiver,
        relations: Vec<Relation>,
        projectives: Vec<ProjectiveData>,
        kind: AlgebraKind,
    ) -> Algebra {
        Algebra { name, field, quiver, relations, projectives, kind }
    }

    pub fn from_monomial(a: &MonomialAlgebra) -> Arc<Algebra> {
        let q = a.quiver().clone();
        let f = a.field();
        let relations = a
            .relations()
            .iter()
            .map(|r| Relation {
                source: q.arrow(r[0]).source,
                target: q.arrow(*r.last().unwrap()).target,
                terms: vec![(f.one(), r.clone())],
            })
            .collect();
        let n = q.n_vertices();
        let basis = a.path_basis();
        let projectives = (0..n)
            .map(|v| {
                let by_target: Vec<Vec<&Path>> =
                    (0..n).map(|w| basis.paths().iter().filter(|p| p.source == v && p.target == w).collect()).collect();
                let dims: Vec<usize> = by_target.iter().map(Vec::len).collect();
                let action = q
                    .arrows()
                    .iter()
                    .enumerate()
                    .map(|(ai, arr)| {
                        let src = &by_target[arr.source];
                        let tgt = &by_target[arr.target];
                        let mut m = Matrix::zeros(f, tgt.len(), src.len());
                        for (j, p) in src.iter().enumerate() {
                            let ext = Path { source: p.source, target: arr.target, arrows: [p.arrows.clone(), vec![ai]].concat() };
                            if let Some(i) = tgt.iter().position(|t| **t == ext) {
                                m.set(i, j, f.one());
                            }
                        }
                        m
                    })
                    .collect();
                let words = by_target.iter().map(|ps| ps.iter().map(|p| p.arrows.clone()).collect()).collect();
                ProjectiveData { dims, action, words }
            })
            .collect();
        Arc::new(Algebra {
            name: a.name().to_string(),
            field: f,
            quiver: q,
            relations,
            projectives,
            kind: AlgebraKind::Monomial(a.clone()),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn n_arrows(&self) -> usize {
        self.quiver.n_arrows()
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn projective_data(&self, v: usize) -> &ProjectiveData {
        &self.projectives[v]
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn as_monomial(&self) -> Option<&MonomialAlgebra> {
        match &self.kind {
            AlgebraKind::Monomial(m) => Some(m),
            AlgebraKind::Triangular { .. } => None,
        }
    }

    /// Total dimension of the algebra.
    pub fn dim(&self) -> usize {
        self.projectives.iter().map(|p| p.dims.iter().sum::<usize>()).sum()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.quiver.vertex_index(name).ok_or_else(|| Error::Unresolved(format!("vertex {name} of {}", self.name)))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.quiver.arrow_index(name).ok_or_else(|| Error::Unresolved(format!("arrow {name} of {}", self.name)))
    }

    /// The opposite algebra; only available for monomial presentations.
    pub fn opposite(&self) -> Result<Arc<Algebra>> {
        match &self.kind {
            AlgebraKind::Monomial(m) => Ok(Algebra::from_monomial(&m.opposite())),
            AlgebraKind::Triangular { .. } => {
                Err(Error::Unsupported("opposite of a triangular presentation".into()))
            }
        }
    }

    /// Structural equality (same presentation); cheap pointer check first.
    pub fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(a, b) || (a.name == b.name && a.field == b.field && a.quiver == b.quiver && a.relations == b.relations)
    }
}

/// Action matrix of a word given per-arrow matrices (first arrow applied first).
pub fn word_action(field: Field, dims: &[usize], action: &[Matrix], start: usize, word: &[usize]) -> Matrix {
    let mut m = Matrix::identity(field, dims[start]);
    for &a in word {
        m = action[a].mul(&m);
    }
    m
}
