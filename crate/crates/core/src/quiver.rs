//! Quivers, monomial relations and path bases.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, source, target)` by vertex name.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        let arrows = arrows
            .iter()
            .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string()))
            .collect::<Vec<_>>();
        Quiver::from_owned(vertices, arrows)
    }

    pub fn from_owned(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Invalid(format!("duplicate vertex {v}")));
            }
        }
        let idx = |v: &str| {
            vertices
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::Invalid(format!("arrow endpoint {v} is not a vertex")))
        };
        let mut names = std::collections::HashSet::new();
        let mut out = Vec::new();
        for (n, s, t) in arrows {
            if !names.insert(n.clone()) {
                return Err(Error::Invalid(format!("duplicate arrow {n}")));
            }
            out.push(Arrow { source: idx(&s)?, target: idx(&t)?, name: n });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub(crate) fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Quiver {
        Quiver { vertices, arrows }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
            .collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    /// Checks that consecutive arrows compose (traversal order).
    pub fn is_composable(&self, arrows: &[usize]) -> bool {
        arrows.windows(2).all(|w| self.arrows[w[0]].target == self.arrows[w[1]].source)
    }
}

/// A path in traversal order: `arrows[0]` is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }
}

/// The nonzero paths of a monomial algebra in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBasis {
    paths: Vec<Path>,
    index: HashMap<(usize, Vec<usize>), usize>,
}

impl PathBasis {
    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Index of a path; trivial paths are keyed by their vertex.
    pub fn index_of(&self, p: &Path) -> Option<usize> {
        let key = if p.is_trivial() { (p.source, Vec::new()) } else { (usize::MAX, p.arrows.clone()) };
        self.index.get(&key).copied()
    }

    pub fn contains(&self, p: &Path) -> bool {
        self.index_of(p).is_some()
    }

    /// Paths from `s` to `t`.
    pub fn between(&self, s: usize, t: usize) -> Vec<&Path> {
        self.paths.iter().filter(|p| p.source == s && p.target == t).collect()
    }
}

impl std::hash::Hash for PathBasis {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.paths.hash(state);
    }
}

/// `kQ / I` with `I` generated by paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialAlgebra {
    name: String,
    field: Field,
    quiver: Quiver,
    relations: Vec<Vec<usize>>,
    basis: PathBasis,
}

/// Default multiplier for the path length cap (cap = arrows × this).
pub const DEFAULT_LENGTH_FACTOR: usize = 64;

impl MonomialAlgebra {
    /// Relations are arrow-name sequences in traversal order.
    pub fn new(name: &str, field: Field, quiver: Quiver, relations: &[Vec<&str>]) -> Result<MonomialAlgebra> {
        let rels = relations
            .iter()
            .map(|r| {
                r.iter()
                    .map(|n| quiver.arrow_index(n).ok_or_else(|| Error::Invalid(format!("unknown arrow {n} in relation"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialAlgebra::from_indices(name, field, quiver, rels)
    }

    pub fn from_indices(name: &str, field: Field, quiver: Quiver, relations: Vec<Vec<usize>>) -> Result<MonomialAlgebra> {
        let cap = quiver.n_arrows().max(1) * DEFAULT_LENGTH_FACTOR;
        MonomialAlgebra::with_length_cap(name, field, quiver, relations, cap)
    }

    pub fn with_length_cap(
        name: &str,
        field: Field,
        quiver: Quiver,
        relations: Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<MonomialAlgebra> {
        for r in &relations {
            if r.len() < 2 {
                return Err(Error::Invalid("relations must have length at least 2".into()));
            }
            if !quiver.is_composable(r) {
                return Err(Error::Invalid(format!(
                    "relation {} is not a composable path",
                    r.iter().map(|&a| quiver.arrow(a).name.as_str()).collect::<Vec<_>>().join(",")
                )));
            }
        }
        let basis = compute_basis(&quiver, &relations, cap)?;
        Ok(MonomialAlgebra { name: name.to_string(), field, quiver, relations, basis })
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

    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }

    pub fn path_basis(&self) -> &PathBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Concatenation `p` then `q`, or `None` when the product vanishes.
    pub fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if p.target != q.source {
            return None;
        }
        let mut arrows = p.arrows.clone();
        arrows.extend_from_slice(&q.arrows);
        let path = Path { source: p.source, target: q.target, arrows };
        self.basis.contains(&path).then_some(path)
    }

    pub fn opposite(&self) -> MonomialAlgebra {
        let quiver = self.quiver.opposite();
        let relations: Vec<Vec<usize>> =
            self.relations.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        let basis = compute_basis(&quiver, &relations, usize::MAX)
            .expect("opposite of a finite-dimensional algebra is finite dimensional");
        MonomialAlgebra { name, field: self.field, quiver, relations, basis }
    }

    /// The subalgebra `e A e` for `e` the sum of the given vertices; relations
    /// are those lying entirely inside.
    pub fn induced(&self, name: &str, vertices: &[usize]) -> MonomialAlgebra {
        let q = &self.quiver;
        let vnames: Vec<String> = vertices.iter().map(|&v| q.vertices[v].clone()).collect();
        let mut amap = HashMap::new();
        let mut arrows = Vec::new();
        for (i, a) in q.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (
                vertices.iter().position(|&v| v == a.source),
                vertices.iter().position(|&v| v == a.target),
            ) {
                amap.insert(i, arrows.len());
                arrows.push(Arrow { name: a.name.clone(), source: s, target: t });
            }
        }
        let relations = self
            .relations
            .iter()
            .filter(|r| r.iter().all(|a| amap.contains_key(a)))
            .map(|r| r.iter().map(|a| amap[a]).collect())
            .collect::<Vec<Vec<usize>>>();
        let quiver = Quiver::from_parts(vnames, arrows);
        let basis = compute_basis(&quiver, &relations, usize::MAX).expect("subalgebra is finite dimensional");
        MonomialAlgebra { name: name.to_string(), field: self.field, quiver, relations, basis }
    }
}

fn contains_relation(arrows: &[usize], relations: &[Vec<usize>]) -> bool {
    // Only suffixes need checking: prefixes were already checked when the
    // shorter path was admitted.
    relations.iter().any(|r| arrows.len() >= r.len() && arrows.ends_with(r))
}

fn compute_basis(q: &Quiver, relations: &[Vec<usize>], cap: usize) -> Result<PathBasis> {
    let mut paths: Vec<Path> = (0..q.n_vertices()).map(Path::trivial).collect();
    let name_key = |p: &Path| -> Vec<String> { p.arrows.iter().map(|&a| q.arrows[a].name.clone()).collect() };
    let mut layer: Vec<Path> = q
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| Path { source: a.source, target: a.target, arrows: vec![i] })
        .collect();
    let mut len = 1;
    while !layer.is_empty() {
        if len > cap {
            return Err(Error::NotFiniteDimensional(cap));
        }
        layer.sort_by_key(|p| name_key(p));
        paths.extend(layer.iter().cloned());
        let mut next = Vec::new();
        for p in &layer {
            for (i, a) in q.arrows.iter().enumerate() {
                if a.source != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(i);
                if !contains_relation(&arrows, relations) {
                    next.push(Path { source: p.source, target: a.target, arrows });
                }
            }
        }
        layer = next;
        len += 1;
    }
    let index = paths
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let key = if p.is_trivial() { (p.source, Vec::new()) } else { (usize::MAX, p.arrows.clone()) };
            (key, i)
        })
        .collect();
    Ok(PathBasis { paths, index })
}

/// Small algebras used throughout the examples and tests.
pub mod zoo {
    use super::*;

    /// `2 --alpha--> 1`.
    pub fn ka2(field: Field) -> MonomialAlgebra {
        let q = Quiver::new(&["1", "2"], &[("alpha", "2", "1")]).unwrap();
        MonomialAlgebra::new("kA2", field, q, &[]).unwrap()
    }

    /// `3 --alpha--> 2 --beta--> 1` with the composite killed.
    pub fn l3(field: Field) -> MonomialAlgebra {
        let q = Quiver::new(&["1", "2", "3"], &[("alpha", "3", "2"), ("beta", "2", "1")]).unwrap();
        MonomialAlgebra::new("L3", field, q, &[vec!["alpha", "beta"]]).unwrap()
    }

    /// `k[x]/(x^2)`.
    pub fn n2(field: Field) -> MonomialAlgebra {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        MonomialAlgebra::new("N2", field, q, &[vec!["x", "x"]]).unwrap()
    }

    /// `3 --beta--> 2 --alpha--> 1` with a loop `x` at 2 and relations
    /// `x x`, `x alpha`, `beta alpha`, `beta x` (traversal order).
    pub fn loop_example(field: Field) -> MonomialAlgebra {
        let q = Quiver::new(
            &["1", "2", "3"],
            &[("alpha", "2", "1"), ("beta", "3", "2"), ("x", "2", "2")],
        )
        .unwrap();
        MonomialAlgebra::new(
            "Loop3",
            field,
            q,
            &[vec!["x", "x"], vec!["x", "alpha"], vec!["beta", "alpha"], vec!["beta", "x"]],
        )
        .unwrap()
    }

    /// The two-vertex algebra `(k[x]/(x^2) k; 0 k)`: `3 --beta--> 2` with a
    /// loop `x` at 2, `x x = 0` and `beta x = 0`.
    pub fn cm_free(field: Field) -> MonomialAlgebra {
        let q = Quiver::new(&["2", "3"], &[("beta", "3", "2"), ("x", "2", "2")]).unwrap();
        MonomialAlgebra::new("CMfree", field, q, &[vec!["x", "x"], vec!["beta", "x"]]).unwrap()
    }

    /// A single vertex, no arrows.
    pub fn k(field: Field) -> MonomialAlgebra {
        let q = Quiver::new(&["1"], &[]).unwrap();
        MonomialAlgebra::new("k", field, q, &[]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::zoo::*;
    use super::*;

    fn labels(a: &MonomialAlgebra) -> Vec<String> {
        a.path_basis().paths().iter().map(|p| p.label(a.quiver())).collect()
    }

    #[test]
    fn bases_of_small_algebras() {
        let f = Field::prime(2);
        assert_eq!(labels(&ka2(f)), ["e1", "e2", "alpha"]);
        assert_eq!(labels(&l3(f)), ["e1", "e2", "e3", "alpha", "beta"]);
        assert_eq!(labels(&n2(f)), ["e1", "x"]);
        assert_eq!(loop_example(f).dim(), 6);
    }

    #[test]
    fn infinite_algebra_is_rejected() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = MonomialAlgebra::new("kx", Field::prime(2), q, &[]);
        assert!(matches!(r, Err(Error::NotFiniteDimensional(_))));
    }

    #[test]
    fn bad_relations_are_rejected() {
        let f = Field::prime(2);
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        assert!(MonomialAlgebra::new("bad", f, q.clone(), &[vec!["a", "b"]]).is_err());
        assert!(MonomialAlgebra::new("bad", f, q, &[vec!["a"]]).is_err());
    }

    #[test]
    fn opposites() {
        let f = Field::prime(2);
        let op = ka2(f).opposite();
        let a = &op.quiver().arrows()[0];
        assert_eq!((a.source, a.target), (0, 1));
        assert_eq!(n2(f).opposite().dim(), 2);
        let l = l3(f).opposite();
        assert_eq!(l.dim(), 5);
        assert_eq!(l.relations()[0], vec![1, 0]);
        assert_eq!(l.opposite(), l3(f));
    }
}
