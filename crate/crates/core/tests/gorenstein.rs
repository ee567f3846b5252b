use std::sync::OnceLock;

use commalg::algebra::Algebra;
use commalg::approx::{bxy_members, ApproxOptions, ObjectClass};
use commalg::comma::{split_triangular, Bimodule, CommaCategory, TensorFunctor};
use commalg::decompose::{decompose, enumerate_indecomposables, is_isomorphic};
use commalg::gorenstein::*;
use commalg::homology::ext_dim;
use commalg::module::{is_projective, Module};
use commalg::quiver::zoo;
use commalg::{Error, Field};
use proptest::prelude::*;

fn f2() -> Field {
    Field::prime(2)
}

const BOUND: usize = 8;

fn labels(g: &GpClass) -> Vec<Vec<usize>> {
    g.class.members().iter().map(|m| m.dims().to_vec()).collect()
}

#[test]
fn gorenstein_projectives_of_small_algebras() {
    let n2 = Algebra::from_monomial(&zoo::n2(f2()));
    let g = gp_class(&n2, 5, BOUND).unwrap();
    assert_eq!(g.class.len(), 2);
    assert!(g.undecided.is_empty());
    let s = g.table.iter().find(|(m, _)| m.total_dim() == 1).unwrap();
    assert_eq!(s.1.period(), Some(1));

    for (m, n) in [(zoo::ka2(f2()), 2), (zoo::l3(f2()), 3), (zoo::cm_free(f2()), 2)] {
        let a = Algebra::from_monomial(&m);
        let g = gp_class(&a, 5, BOUND).unwrap();
        assert_eq!(g.class.len(), n, "{}", a.name());
        assert!(g.undecided.is_empty());
        // every Gorenstein projective here is projective
        assert!(g.class.members().iter().all(is_projective), "{}", a.name());
    }
}

#[test]
fn certificates_are_independent_of_the_search() {
    for m in [zoo::n2(f2()), zoo::cm_free(f2()), zoo::loop_example(f2())] {
        let a = Algebra::from_monomial(&m);
        let g = gp_class(&a, 4, BOUND).unwrap();
        for (m, v) in &g.table {
            match &v.status {
                GpStatus::Certified => {
                    for i in 1..=BOUND {
                        for p in 0..a.n_vertices() {
                            assert_eq!(ext_dim(m, &Module::projective(&a, p), i).unwrap(), 0);
                        }
                    }
                    if let GpCertificate::Chain(c) = &v.certificate {
                        assert!(c.verify().unwrap());
                        for s in &c.steps {
                            assert!(s.is_exact());
                            assert!(is_projective(&s.middle));
                        }
                    }
                }
                GpStatus::Refuted(Refutation::ExtNonzero { degree, vertex, dim, .. }) => {
                    assert_eq!(ext_dim(m, &Module::projective(&a, *vertex), *degree).unwrap(), *dim);
                }
                other => panic!("{m}: {other:?}"),
            }
        }
    }
}

#[test]
fn loop_example_compatibility() {
    let sp = split_triangular(&zoo::loop_example(f2()), &[0]).unwrap();
    let rep = check_compatibility(&sp.comma, 4, BOUND).unwrap();
    assert!(rep.weak_compatible());
    assert!(!rep.compatible());
    let w = rep.c1.witness.as_ref().unwrap();
    assert_eq!(w.render(), "⋯ → k →0 k → ⋯");
    assert!(w.homology_dim > 0);
    // the complex itself is exact before tensoring
    for (d, next) in w.differentials.iter().zip(w.differentials.iter().cycle().skip(1)) {
        assert!(d.then(next).is_zero());
    }
    let t = sp.comma.tensor(&Module::projective(sp.s(), 0));
    assert_eq!(t.total_dim(), 1);
    let err = is_gp_triple(&sp.comma, &sp.comma.zero_triple(), &gp_of(sp.r()), &gp_of(sp.s()), &rep, None);
    assert!(matches!(err, Err(Error::NotCompatible(_))));
}

fn gp_of(a: &std::sync::Arc<Algebra>) -> GpClass {
    gp_class(a, 4, BOUND).unwrap()
}

// Weak compatibility alone already puts <p(GP, GP)> inside GP.
#[test]
fn weakly_compatible_images_are_gorenstein_projective() {
    let sp = split_triangular(&zoo::loop_example(f2()), &[0]).unwrap();
    let amb = enumerate_indecomposables(sp.comma.algebra(), 4).unwrap();
    let (gr, gs) = (gp_of(sp.r()), gp_of(sp.s()));
    let inside = bxy_members(&sp.comma, &gr.class, &gs.class, &amb).unwrap();
    let direct: Vec<usize> = (0..amb.len()).filter(|&i| is_gorenstein_projective(&amb[i], BOUND).unwrap().is_certified()).collect();
    for i in &inside {
        assert!(direct.contains(i));
    }
    assert_eq!(inside, direct);
}

struct N2 {
    comma: CommaCategory,
    ambient: Vec<commalg::module::Module>,
    ambient_r: Vec<commalg::module::Module>,
    ambient_s: Vec<commalg::module::Module>,
    gp_r: GpClass,
    gp_s: GpClass,
    compat: CompatReport,
}

fn n2reg() -> &'static N2 {
    static S: OnceLock<N2> = OnceLock::new();
    S.get_or_init(|| {
        let a = Algebra::from_monomial(&zoo::n2(f2()));
        let comma = CommaCategory::new(TensorFunctor::new(Bimodule::regular(&a)));
        let ambient = enumerate_indecomposables(comma.algebra(), 4).unwrap();
        let ambient_r = enumerate_indecomposables(comma.r(), 4).unwrap();
        let ambient_s = enumerate_indecomposables(comma.s(), 4).unwrap();
        let gp_r = gp_class_of(comma.r(), &ambient_r, BOUND).unwrap();
        let gp_s = gp_class_of(comma.s(), &ambient_s, BOUND).unwrap();
        let compat = check_compatibility(&comma, 4, BOUND).unwrap();
        N2 { comma, ambient, ambient_r, ambient_s, gp_r, gp_s, compat }
    })
}

#[test]
fn gp_triples_of_a_compatible_functor() {
    let s = n2reg();
    assert!(s.compat.compatible());
    assert_eq!(labels(&s.gp_r).len(), 2);
    let c = check_gp_characterization(&s.comma, &s.gp_r, &s.gp_s, &s.compat, &s.ambient, BOUND).unwrap();
    assert_eq!(c.lhs, vec![1, 3, 4, 6, 8]);
    assert!(c.agree());
    for m in &s.ambient {
        let v = is_gp_triple(&s.comma, &s.comma.to_triple(m), &s.gp_r, &s.gp_s, &s.compat, Some(BOUND)).unwrap();
        assert_eq!(v.agrees(), Some(true));
    }
}

#[test]
fn gp_precovers_of_every_triple() {
    let s = n2reg();
    let gp = ObjectClass::new(
        s.comma.algebra(),
        "GP",
        s.ambient.iter().filter(|m| is_gorenstein_projective(m, BOUND).unwrap().is_certified()).cloned().collect(),
    )
    .unwrap();
    for m in &s.ambient {
        let t = s.comma.to_triple(m);
        let r = gp_precover_comma(&s.comma, &t, &s.gp_r, &s.gp_s, &s.compat, &s.ambient_r, &s.ambient_s, &ApproxOptions::default()).unwrap();
        let ses = &r.approx.ses;
        assert!(ses.is_exact());
        assert!(is_isomorphic(&ses.right, m).unwrap());
        for (part, _) in decompose(&ses.middle).unwrap().summands {
            assert!(is_gorenstein_projective(&part, BOUND).unwrap().is_certified());
        }
        for g in gp.members() {
            assert_eq!(ext_dim(g, &ses.left, 1).unwrap(), 0);
        }
    }
    assert!(is_special_precovering(&gp, &s.ambient, &ApproxOptions::default()).unwrap());
}

#[test]
fn periodic_resolutions_close_up() {
    let a = Algebra::from_monomial(&zoo::n2(f2()));
    let ds = periodic_resolution(&Module::simple(&a, 0), BOUND).unwrap().unwrap();
    assert_eq!(ds.len(), 1);
    assert!(ds[0].then(&ds[0]).is_zero());
    assert!(periodic_resolution(&Module::projective(&a, 0), BOUND).unwrap().is_none());
    let k = Algebra::from_monomial(&zoo::ka2(f2()));
    assert!(periodic_resolution(&Module::simple(&k, 1), BOUND).unwrap().is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    // GP is closed under sums and summands.
    #[test]
    fn verdicts_respect_direct_sums(ai in 0usize..3, picks in prop::collection::vec(0usize..16, 1..4)) {
        let m = [zoo::n2(f2()), zoo::cm_free(f2()), zoo::loop_example(f2())][ai].clone();
        let a = Algebra::from_monomial(&m);
        let g = gp_class(&a, 4, BOUND).unwrap();
        let parts: Vec<_> = picks.iter().map(|&i| g.table[i % g.table.len()].clone()).collect();
        let sum = Module::direct_sum_all(&a, &parts.iter().map(|(m, _)| m.clone()).collect::<Vec<_>>());
        let expected = parts.iter().all(|(_, v)| v.is_certified());
        let v = is_gorenstein_projective(&sum, BOUND).unwrap();
        prop_assert_eq!(v.is_certified(), expected);
        prop_assert_eq!(v.is_refuted(), !expected);
    }
}
