//! Named catalog of algebras, bimodules, functors, modules, classes and
//! triples, loaded from JSON documents.
//!
//! References accepted wherever a module is expected: a catalog name, or
//! `ALG/P(v)`, `ALG/S(v)`, `ALG/I(v)`, `ALG/indec(i)` where `v` is a vertex
//! name and `i` indexes the enumerated indecomposables. The `ALG/` prefix
//! may be dropped when the algebra is known from context. Classes accept
//! `ALG/projectives`, `ALG/injectives`, `ALG/all` and `ALG/gp`. Each functor
//! `F` registers its algebras as `F.R`, `F.S` and `F.comma`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::approx::ObjectClass;
use crate::comma::{Bimodule, CommaCategory, TensorFunctor, TriangularSplit, Triple};
use crate::decompose::{enumerate_indecomposables, is_isomorphic};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::gorenstein::gp_class;
use crate::matrix::Matrix;
use crate::module::{Module, Morphism};
use crate::quiver::{zoo, MonomialAlgebra, Quiver};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Algebra(AlgebraDoc),
    Bimodule(BimoduleDoc),
    Split(SplitDoc),
    Functor(FunctorDoc),
    Module(ModuleDoc),
    Class(ClassDoc),
    Triple(TripleDoc),
}

impl Document {
    pub fn name(&self) -> &str {
        match self {
            Document::Algebra(d) => &d.name,
            Document::Bimodule(d) => &d.name,
            Document::Split(d) => &d.name,
            Document::Functor(d) => &d.name,
            Document::Module(d) => &d.name,
            Document::Class(d) => &d.name,
            Document::Triple(d) => &d.name,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Document::Algebra(_) => 0,
            Document::Bimodule(_) => 1,
            Document::Split(_) | Document::Functor(_) => 2,
            Document::Module(_) => 3,
            Document::Class(_) => 4,
            Document::Triple(_) => 5,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub name: String,
    pub field: u64,
    pub vertices: Vec<String>,
    /// `[name, source, target]`.
    pub arrows: Vec<[String; 3]>,
    /// Arrow names in traversal order.
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

/// Matrices are arrays of rows; entries are integers or `"a/b"` strings.
pub type MatrixDoc = Vec<Vec<Value>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleDoc {
    pub name: String,
    pub left: String,
    pub right: String,
    /// `"r,s" -> dim e_r M e_s`; missing pairs are zero.
    pub dims: BTreeMap<String, usize>,
    /// Left arrow name -> right vertex -> matrix.
    #[serde(default)]
    pub left_action: BTreeMap<String, BTreeMap<String, MatrixDoc>>,
    /// Right arrow name -> left vertex -> matrix.
    #[serde(default)]
    pub right_action: BTreeMap<String, BTreeMap<String, MatrixDoc>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitDoc {
    pub name: String,
    pub algebra: String,
    /// Vertices forming the `R` side.
    pub left: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FunctorDoc {
    pub name: String,
    /// A bimodule name, or `regular:ALG` for the identity functor.
    pub bimodule: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModuleDoc {
    #[serde(default)]
    pub name: String,
    pub algebra: String,
    /// Vertex name -> dimension; missing vertices are zero.
    pub dims: BTreeMap<String, usize>,
    /// Arrow name -> matrix (target rows, source columns); missing arrows are zero.
    #[serde(default)]
    pub arrows: BTreeMap<String, MatrixDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassDoc {
    pub name: String,
    pub algebra: String,
    pub members: Vec<String>,
    #[serde(default)]
    pub extension_closed: bool,
    #[serde(default)]
    pub smd_closed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleDoc {
    pub name: String,
    pub functor: String,
    pub a: String,
    pub b: String,
    /// `R`-vertex name -> matrix of `φ: T(B) -> A` at that vertex.
    #[serde(default)]
    pub phi: BTreeMap<String, MatrixDoc>,
}

/// Parses a file holding one document or an array of documents.
pub fn parse_documents(text: &str) -> Result<Vec<Document>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    // reports carry the modules they mention under "documents"
    let items = match v {
        Value::Array(items) => items,
        Value::Object(mut o) if o.contains_key("documents") => match o.remove("documents") {
            Some(Value::Array(items)) => items,
            _ => return Err(Error::Invalid("\"documents\" must be an array".into())),
        },
        other => vec![other],
    };
    items
        .into_iter()
        .map(|item| serde_json::from_value(item).map_err(|e| Error::Invalid(e.to_string())))
        .collect()
}

fn scalar_of(f: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => f.parse(&n.to_string()),
        Value::String(s) => f.parse(s),
        other => Err(Error::Parse(format!("not a field element: {other}"))),
    }
}

fn matrix_of(f: Field, rows: usize, cols: usize, doc: &MatrixDoc) -> Result<Matrix> {
    if rows == 0 || cols == 0 {
        if doc.iter().any(|r| !r.is_empty()) && !(rows == 0 && doc.is_empty()) {
            return Err(Error::Shape(format!("expected an empty {rows}x{cols} matrix")));
        }
        return Ok(Matrix::zeros(f, rows, cols));
    }
    if doc.len() != rows || doc.iter().any(|r| r.len() != cols) {
        return Err(Error::Shape(format!("expected a {rows}x{cols} matrix")));
    }
    let data = doc.iter().flatten().map(|v| scalar_of(f, v)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_scalars(f, rows, cols, data))
}

/// Entries as JSON: integers over prime fields, `"a/b"` strings over `Q`.
pub fn matrix_doc(m: &Matrix) -> MatrixDoc {
    (0..m.rows()).map(|i| m.row(i).iter().map(Scalar::to_json).collect()).collect()
}

pub fn module_doc(name: &str, algebra: &str, m: &Module) -> ModuleDoc {
    let q = m.algebra().quiver();
    ModuleDoc {
        name: name.to_string(),
        algebra: algebra.to_string(),
        dims: q.vertices().iter().cloned().zip(m.dims().iter().copied()).filter(|(_, d)| *d > 0).collect(),
        arrows: q
            .arrows()
            .iter()
            .enumerate()
            .filter(|(i, _)| !m.action(*i).is_zero())
            .map(|(i, a)| (a.name.clone(), matrix_doc(m.action(i))))
            .collect(),
    }
}

/// One loaded functor with its comma category and, when it came from a
/// split, the triangular data.
#[derive(Clone, Debug)]
pub struct FunctorEntry {
    pub comma: Arc<CommaCategory>,
    pub split: Option<Arc<TriangularSplit>>,
}

#[derive(Clone, Debug, Default)]
pub struct Workspace {
    algebras: BTreeMap<String, Arc<Algebra>>,
    monomials: BTreeMap<String, MonomialAlgebra>,
    bimodules: BTreeMap<String, Arc<Bimodule>>,
    functors: BTreeMap<String, FunctorEntry>,
    modules: BTreeMap<String, Module>,
    classes: BTreeMap<String, ObjectClass>,
    triples: BTreeMap<String, (String, Triple)>,
    /// Dimension cap for `indec(i)`, `all` and `gp` references.
    pub cap: usize,
    /// Bound used by `gp` class references.
    pub bound: usize,
}

impl Workspace {
    pub fn empty(cap: usize, bound: usize) -> Workspace {
        Workspace { cap, bound, ..Default::default() }
    }

    /// The built-in algebras over `F_2` (`kA2`, `L3`, `N2`, `Loop3`,
    /// `CMfree`, `k`) and functors (`kk` = `(k k; 0 k)`, `N2reg` =
    /// `(N2 N2; 0 N2)`, `L3split` with `R` at vertex 1, `Loop3split` with `R`
    /// at vertex 1).
    pub fn with_builtins(cap: usize, bound: usize) -> Workspace {
        let mut w = Workspace::empty(cap, bound);
        let f = Field::prime(2);
        for m in [zoo::ka2(f), zoo::l3(f), zoo::n2(f), zoo::loop_example(f), zoo::cm_free(f), zoo::k(f)] {
            w.insert_monomial(m).expect("builtin names are distinct");
        }
        let builtin_splits = [("kk", "kA2"), ("L3split", "L3"), ("Loop3split", "Loop3")];
        for (name, alg) in builtin_splits {
            w.add(Document::Split(SplitDoc { name: name.into(), algebra: alg.into(), left: vec!["1".into()] }))
                .expect("builtin split");
        }
        w.add(Document::Functor(FunctorDoc { name: "N2reg".into(), bimodule: "regular:N2".into() })).expect("builtin functor");
        w
    }

    fn fresh(&self, name: &str) -> Result<()> {
        let taken = self.algebras.contains_key(name)
            || self.bimodules.contains_key(name)
            || self.functors.contains_key(name)
            || self.modules.contains_key(name)
            || self.classes.contains_key(name)
            || self.triples.contains_key(name);
        if taken {
            return Err(Error::Invalid(format!("name {name} is already defined")));
        }
        if name.is_empty() || name.contains('/') {
            return Err(Error::Invalid(format!("bad name {name:?}")));
        }
        Ok(())
    }

    fn insert_monomial(&mut self, m: MonomialAlgebra) -> Result<()> {
        self.fresh(m.name())?;
        self.algebras.insert(m.name().to_string(), Algebra::from_monomial(&m));
        self.monomials.insert(m.name().to_string(), m);
        Ok(())
    }

    /// Loads every `*.json` file of a directory, in dependency order.
    pub fn load_dir(&mut self, dir: &Path) -> Result<Vec<String>> {
        let io = |e: std::io::Error| Error::Io { path: dir.display().to_string(), source: e };
        let mut files: Vec<_> = fs::read_dir(dir).map_err(io)?.filter_map(|e| e.ok()).map(|e| e.path()).collect();
        files.retain(|p| p.extension().map(|e| e == "json").unwrap_or(false));
        files.sort();
        let mut docs = Vec::new();
        for p in files {
            let text = fs::read_to_string(&p).map_err(|e| Error::Io { path: p.display().to_string(), source: e })?;
            docs.extend(parse_documents(&text)?);
        }
        self.add_all(docs)
    }

    pub fn add_all(&mut self, mut docs: Vec<Document>) -> Result<Vec<String>> {
        docs.sort_by_key(Document::rank);
        docs.into_iter().map(|d| self.add(d)).collect()
    }

    /// Validates and registers one document.
    pub fn add(&mut self, doc: Document) -> Result<String> {
        let name = doc.name().to_string();
        self.fresh(&name)?;
        match doc {
            Document::Algebra(d) => {
                let field = Field::new(d.field)?;
                let v: Vec<&str> = d.vertices.iter().map(String::as_str).collect();
                let a: Vec<(&str, &str, &str)> = d.arrows.iter().map(|[n, s, t]| (n.as_str(), s.as_str(), t.as_str())).collect();
                let q = Quiver::new(&v, &a)?;
                let rels: Vec<Vec<&str>> = d.relations.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
                self.insert_monomial(MonomialAlgebra::new(&d.name, field, q, &rels)?)?;
            }
            Document::Bimodule(d) => {
                let b = self.bimodule_of(&d)?;
                self.bimodules.insert(name.clone(), Arc::new(b));
            }
            Document::Split(d) => {
                let m = self.monomials.get(&d.algebra).ok_or_else(|| Error::Unresolved(format!("monomial algebra {}", d.algebra)))?;
                let left: Vec<&str> = d.left.iter().map(String::as_str).collect();
                let sp = TriangularSplit::by_names(m, &left)?;
                let comma = Arc::new(sp.comma.clone());
                self.register_functor(&name, FunctorEntry { comma, split: Some(Arc::new(sp)) })?;
            }
            Document::Functor(d) => {
                let b = if let Some(alg) = d.bimodule.strip_prefix("regular:") {
                    Bimodule::regular(self.algebra(alg)?)
                } else {
                    self.bimodules.get(&d.bimodule).ok_or_else(|| Error::Unresolved(format!("bimodule {}", d.bimodule)))?.as_ref().clone()
                };
                let comma = Arc::new(CommaCategory::new(TensorFunctor::new(b)));
                self.register_functor(&name, FunctorEntry { comma, split: None })?;
            }
            Document::Module(d) => {
                let m = self.module_of(&d)?;
                self.modules.insert(name.clone(), m);
            }
            Document::Class(d) => {
                let alg = self.algebra(&d.algebra)?.clone();
                let members = d.members.iter().map(|r| self.module(r, Some(&d.algebra))).collect::<Result<Vec<_>>>()?;
                let mut c = ObjectClass::new(&alg, &d.name, members)?;
                c.extension_closed = d.extension_closed;
                c.smd_closed |= d.smd_closed;
                self.classes.insert(name.clone(), c);
            }
            Document::Triple(d) => {
                let entry = self.functor(&d.functor)?.clone();
                let comma = &entry.comma;
                let a = self.module(&d.a, Some(&format!("{}.R", d.functor)))?;
                let b = self.module(&d.b, Some(&format!("{}.S", d.functor)))?;
                let tb = comma.tensor(&b);
                let f = comma.r().field();
                let q = comma.r().quiver();
                let mut maps = Vec::new();
                for (v, vname) in q.vertices().iter().enumerate() {
                    let (rows, cols) = (a.dim_at(v), tb.dim_at(v));
                    maps.push(match d.phi.get(vname) {
                        Some(doc) => matrix_of(f, rows, cols, doc)?,
                        None => Matrix::zeros(f, rows, cols),
                    });
                }
                if let Some(k) = d.phi.keys().find(|k| q.vertex_index(k).is_none()) {
                    return Err(Error::Unresolved(format!("vertex {k}")));
                }
                let phi = Morphism::new(tb, a.clone(), maps)?;
                let t = comma.triple(a, b, phi)?;
                self.triples.insert(name.clone(), (d.functor.clone(), t));
            }
        }
        Ok(name)
    }

    fn register_functor(&mut self, name: &str, entry: FunctorEntry) -> Result<()> {
        for suffix in ["R", "S", "comma"] {
            self.fresh(&format!("{name}.{suffix}"))?;
        }
        self.algebras.insert(format!("{name}.R"), entry.comma.r().clone());
        self.algebras.insert(format!("{name}.S"), entry.comma.s().clone());
        self.algebras.insert(format!("{name}.comma"), entry.comma.algebra().clone());
        self.functors.insert(name.to_string(), entry);
        Ok(())
    }

    fn bimodule_of(&self, d: &BimoduleDoc) -> Result<Bimodule> {
        let r = self.algebra(&d.left)?.clone();
        let s = self.algebra(&d.right)?.clone();
        let f = r.field();
        let (qr, qs) = (r.quiver(), s.quiver());
        let vidx = |q: &Quiver, n: &str| q.vertex_index(n).ok_or_else(|| Error::Unresolved(format!("vertex {n}")));
        let mut dims = vec![vec![0; qs.n_vertices()]; qr.n_vertices()];
        for (key, &n) in &d.dims {
            let (rv, sv) = key.split_once(',').ok_or_else(|| Error::Parse(format!("dims key {key:?} is not \"r,s\"")))?;
            dims[vidx(qr, rv.trim())?][vidx(qs, sv.trim())?] = n;
        }
        let left_action = qr
            .arrows()
            .iter()
            .map(|a| {
                (0..qs.n_vertices())
                    .map(|s| {
                        let (rows, cols) = (dims[a.target][s], dims[a.source][s]);
                        match d.left_action.get(&a.name).and_then(|m| m.get(&qs.vertices()[s])) {
                            Some(doc) => matrix_of(f, rows, cols, doc),
                            None => Ok(Matrix::zeros(f, rows, cols)),
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let right_action = qs
            .arrows()
            .iter()
            .map(|b| {
                (0..qr.n_vertices())
                    .map(|rv| {
                        let (rows, cols) = (dims[rv][b.source], dims[rv][b.target]);
                        match d.right_action.get(&b.name).and_then(|m| m.get(&qr.vertices()[rv])) {
                            Some(doc) => matrix_of(f, rows, cols, doc),
                            None => Ok(Matrix::zeros(f, rows, cols)),
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        for name in d.left_action.keys() {
            qr.arrow_index(name).ok_or_else(|| Error::Unresolved(format!("arrow {name}")))?;
        }
        for name in d.right_action.keys() {
            qs.arrow_index(name).ok_or_else(|| Error::Unresolved(format!("arrow {name}")))?;
        }
        Bimodule::new(r, s, dims, left_action, right_action)
    }

    /// Builds the module of a document without registering it.
    pub fn module_of(&self, d: &ModuleDoc) -> Result<Module> {
        let alg = self.algebra(&d.algebra)?.clone();
        let q = alg.quiver();
        let mut dims = vec![0; q.n_vertices()];
        for (v, &n) in &d.dims {
            dims[q.vertex_index(v).ok_or_else(|| Error::Unresolved(format!("vertex {v}")))?] = n;
        }
        for name in d.arrows.keys() {
            q.arrow_index(name).ok_or_else(|| Error::Unresolved(format!("arrow {name}")))?;
        }
        let f = alg.field();
        let action = q
            .arrows()
            .iter()
            .map(|a| {
                let (rows, cols) = (dims[a.target], dims[a.source]);
                match d.arrows.get(&a.name) {
                    Some(doc) => matrix_of(f, rows, cols, doc),
                    None => Ok(Matrix::zeros(f, rows, cols)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg, dims, action)
    }

    pub fn algebra(&self, name: &str) -> Result<&Arc<Algebra>> {
        self.algebras.get(name).ok_or_else(|| Error::Unresolved(format!("algebra {name}")))
    }

    pub fn algebra_names(&self) -> Vec<String> {
        self.algebras.keys().cloned().collect()
    }

    pub fn monomial(&self, name: &str) -> Result<&MonomialAlgebra> {
        self.monomials.get(name).ok_or_else(|| Error::Unresolved(format!("monomial algebra {name}")))
    }

    pub fn functor(&self, name: &str) -> Result<&FunctorEntry> {
        self.functors.get(name).ok_or_else(|| Error::Unresolved(format!("functor {name}")))
    }

    /// Document for a module over a registered algebra.
    pub fn doc_of(&self, name: &str, m: &Module) -> ModuleDoc {
        module_doc(name, &self.algebra_name(m.algebra()), m)
    }

    /// Name under which an algebra is registered.
    pub fn algebra_name(&self, alg: &Arc<Algebra>) -> String {
        self.algebras
            .iter()
            .find(|(_, a)| Algebra::same(a, alg))
            .map(|(n, _)| n.clone())
            .unwrap_or_else(|| alg.name().to_string())
    }

    fn split_ref<'a>(&self, r: &'a str, ctx: Option<&'a str>) -> Result<(&'a str, &'a str)> {
        match r.rsplit_once('/') {
            Some((alg, rest)) => Ok((alg, rest)),
            None => ctx.map(|c| (c, r)).ok_or_else(|| Error::Unresolved(format!("{r} (no algebra given)"))),
        }
    }

    fn indecomposables(&self, alg: &Arc<Algebra>) -> Result<Vec<Module>> {
        enumerate_indecomposables(alg, self.cap)
    }

    /// Resolves a module reference; see the module documentation.
    pub fn module(&self, r: &str, ctx: Option<&str>) -> Result<Module> {
        if let Some(m) = self.modules.get(r) {
            return Ok(m.clone());
        }
        if let Some((f, t)) = self.triples.get(r) {
            return Ok(self.functor(f)?.comma.to_module(t));
        }
        let (alg_name, rest) = self.split_ref(r, ctx)?;
        let alg = self.algebra(alg_name)?.clone();
        // `S2` is shorthand for `S(2)` when `2` names a vertex
        let short = |prefix: &str| rest.strip_prefix(prefix).filter(|v| alg.quiver().vertex_index(v).is_some());
        let arg = |prefix: &str| {
            rest.strip_prefix(prefix)
                .and_then(|s| s.strip_prefix('('))
                .and_then(|s| s.strip_suffix(')'))
                .or_else(|| short(prefix))
        };
        let vertex = |v: &str| alg.vertex_index(v);
        if let Some(v) = arg("P") {
            return Ok(Module::projective(&alg, vertex(v)?));
        }
        if let Some(v) = arg("S") {
            return Ok(Module::simple(&alg, vertex(v)?));
        }
        if let Some(v) = arg("I") {
            return Module::injective(&alg, vertex(v)?);
        }
        if let Some(i) = arg("indec") {
            let i: usize = i.parse().map_err(|_| Error::Parse(format!("bad index in {r}")))?;
            let all = self.indecomposables(&alg)?;
            return all.get(i).cloned().ok_or_else(|| Error::Unresolved(format!("{r}: only {} indecomposables", all.len())));
        }
        if let Some(m) = self.modules.get(rest) {
            if Algebra::same(m.algebra(), &alg) {
                return Ok(m.clone());
            }
        }
        Err(Error::Unresolved(format!("module {r}")))
    }

    pub fn class(&self, r: &str, ctx: Option<&str>) -> Result<ObjectClass> {
        if let Some(c) = self.classes.get(r) {
            return Ok(c.clone());
        }
        let (alg_name, rest) = self.split_ref(r, ctx)?;
        let alg = self.algebra(alg_name)?.clone();
        match rest {
            "projectives" => Ok(ObjectClass::projectives(&alg)),
            "injectives" => ObjectClass::injectives(&alg, &self.indecomposables(&alg)?),
            "all" => ObjectClass::all(&alg, self.cap),
            "gp" => Ok(gp_class(&alg, self.cap, self.bound)?.class),
            _ => Err(Error::Unresolved(format!("class {r}"))),
        }
    }

    /// A triple by name, or any module reference over a functor's comma
    /// algebra; returns the functor name with it.
    pub fn triple(&self, r: &str, functor: Option<&str>) -> Result<(String, Triple)> {
        if let Some((f, t)) = self.triples.get(r) {
            return Ok((f.clone(), t.clone()));
        }
        let ctx = functor.map(|f| format!("{f}.comma"));
        let m = self.module(r, ctx.as_deref())?;
        for (name, entry) in &self.functors {
            if Algebra::same(m.algebra(), entry.comma.algebra()) {
                return Ok((name.clone(), entry.comma.to_triple(&m)));
            }
            if let Some(sp) = &entry.split {
                if Algebra::same(m.algebra(), &sp.lambda) {
                    return Ok((name.clone(), sp.module_to_triple(&m)?));
                }
            }
        }
        Err(Error::Unresolved(format!("{r} is not an object of a comma category")))
    }

    pub fn module_names(&self) -> Vec<String> {
        self.modules.keys().cloned().collect()
    }

    /// A short label: a catalog name, `P(v)`, `S(v)` or `I(v)` when the
    /// module is isomorphic to one, otherwise its dimension vector.
    pub fn describe(&self, m: &Module) -> String {
        for (name, n) in &self.modules {
            if n.same_algebra(m) && is_isomorphic(n, m).unwrap_or(false) {
                return name.clone();
            }
        }
        standard_label(m).unwrap_or_else(|| m.to_string())
    }
}

/// `P(v)`, `S(v)` or `I(v)` if the module is isomorphic to one.
pub fn standard_label(m: &Module) -> Option<String> {
    let alg = m.algebra();
    if m.is_zero() {
        return Some("0".into());
    }
    let name = |v: usize| &alg.quiver().vertices()[v];
    for v in 0..alg.n_vertices() {
        if is_isomorphic(&Module::projective(alg, v), m).unwrap_or(false) {
            return Some(format!("P({})", name(v)));
        }
    }
    for v in 0..alg.n_vertices() {
        if is_isomorphic(&Module::simple(alg, v), m).unwrap_or(false) {
            return Some(format!("S({})", name(v)));
        }
    }
    for v in 0..alg.n_vertices() {
        if let Ok(i) = Module::injective(alg, v) {
            if is_isomorphic(&i, m).unwrap_or(false) {
                return Some(format!("I({})", name(v)));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_resolve() {
        let w = Workspace::with_builtins(4, 4);
        assert_eq!(w.module("L3/P(3)", None).unwrap().total_dim(), 2);
        assert_eq!(w.module("S(2)", Some("kA2")).unwrap().total_dim(), 1);
        assert_eq!(w.module("S2", Some("kA2")).unwrap(), w.module("kA2/S(2)", None).unwrap());
        assert_eq!(w.class("N2/all", None).unwrap().len(), 2);
        let (f, t) = w.triple("kk.comma/P(1)", None).unwrap();
        assert_eq!(f, "kk");
        assert!(t.phi.is_zero());
        let (_, t) = w.triple("L3/P(3)", None).unwrap();
        assert_eq!(t.a.total_dim(), 0);
    }

    #[test]
    fn module_document_round_trip() {
        let w = Workspace::with_builtins(4, 4);
        let m = w.module("L3/I(2)", None).unwrap();
        let doc = w.doc_of("I2", &m);
        let back = w.module_of(&doc).unwrap();
        assert_eq!(back, m);
        let text = serde_json::to_string(&Document::Module(doc)).unwrap();
        let parsed = parse_documents(&text).unwrap();
        assert_eq!(parsed[0].name(), "I2");
    }

    #[test]
    fn rejects_bad_documents() {
        let mut w = Workspace::with_builtins(4, 4);
        let bad = r#"{"kind":"module","name":"X","algebra":"kA2","dims":{"1":1,"2":1},"arrows":{"alpha":[[1,0]]}}"#;
        assert!(matches!(w.add(parse_documents(bad).unwrap().remove(0)), Err(Error::Shape(_))));
        let dup = r#"{"kind":"module","name":"L3","algebra":"kA2","dims":{}}"#;
        assert!(matches!(w.add(parse_documents(dup).unwrap().remove(0)), Err(Error::Invalid(_))));
    }
}
