use std::path::Path;

use commalg::decompose::is_isomorphic;
use commalg::homology::ext_dim;
use commalg::workspace::{parse_documents, Workspace};
use commalg::Error;

const USER_DOCS: &str = r#"{"documents": [
  {"kind": "triple", "name": "t", "functor": "F", "a": "K/S(o)", "b": "A/P(a)", "phi": {"o": [[2]]}},
  {"kind": "algebra", "name": "A", "field": 3, "vertices": ["a", "b"], "arrows": [["f", "b", "a"]]},
  {"kind": "algebra", "name": "K", "field": 3, "vertices": ["o"], "arrows": []},
  {"kind": "bimodule", "name": "M", "left": "K", "right": "A", "dims": {"o,a": 1}},
  {"kind": "functor", "name": "F", "bimodule": "M"},
  {"kind": "module", "name": "X", "algebra": "A", "dims": {"a": 1, "b": 1}, "arrows": {"f": [[2]]}},
  {"kind": "class", "name": "C", "algebra": "A", "members": ["X", "A/S(a)"]}
]}"#;

#[test]
fn user_documents_load_in_dependency_order() {
    let mut w = Workspace::with_builtins(4, 4);
    let names = w.add_all(parse_documents(USER_DOCS).unwrap()).unwrap();
    assert_eq!(names.len(), 7);
    let x = w.module("X", None).unwrap();
    assert!(is_isomorphic(&x, &w.module("A/P(b)", None).unwrap()).unwrap());
    assert_eq!(w.describe(&x), "X");
    assert_eq!(w.describe(&w.module("A/S(a)", None).unwrap()), "P(a)");
    assert_eq!(ext_dim(&w.module("S(b)", Some("A")).unwrap(), &w.module("S(a)", Some("A")).unwrap(), 1).unwrap(), 1);
    assert_eq!(w.class("C", None).unwrap().len(), 2);
    let (functor, t) = w.triple("t", None).unwrap();
    assert_eq!(functor, "F");
    assert!(t.phi.is_mono());
    let entry = w.functor("F").unwrap();
    let m = entry.comma.to_module(&t);
    assert_eq!(m.total_dim(), 2);
}

#[test]
fn remark_workspace_loads() {
    let mut w = Workspace::with_builtins(3, 4);
    let dir = Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../workspaces/remark35"));
    w.load_dir(dir).unwrap();
    let c = w.class("pXY-class", None).unwrap();
    assert_eq!(c.len(), 4);
    let labels: Vec<String> = c.members().iter().map(|m| w.describe(m)).collect();
    assert_eq!(labels, vec!["P(1)", "P(2)", "P(3)", "S(3)"]);
}

#[test]
fn bad_references_are_reported() {
    let w = Workspace::with_builtins(4, 4);
    assert!(matches!(w.module("L3/P(9)", None), Err(Error::Unresolved(_))));
    assert!(matches!(w.module("nothing", None), Err(Error::Unresolved(_))));
    assert!(matches!(w.class("L3/everything", None), Err(Error::Unresolved(_))));
    assert!(parse_documents("{not json").is_err());
    let mut w = Workspace::with_builtins(4, 4);
    let bad_field = r#"{"kind": "algebra", "name": "B", "field": 4, "vertices": ["v"], "arrows": []}"#;
    assert!(matches!(w.add_all(parse_documents(bad_field).unwrap()), Err(Error::InvalidField(4))));
    let infinite = r#"{"kind": "algebra", "name": "B", "field": 2, "vertices": ["v"], "arrows": [["x", "v", "v"]]}"#;
    assert!(matches!(w.add_all(parse_documents(infinite).unwrap()), Err(Error::NotFiniteDimensional(_))));
}
