use std::sync::{Arc, OnceLock};

use commalg::algebra::Algebra;
use commalg::decompose::{decompose, enumerate_by_matrices, enumerate_indecomposables, is_indecomposable, is_isomorphic};
use commalg::module::{cokernel, combine, hom_space, image, kernel, Module};
use commalg::quiver::{zoo, MonomialAlgebra};
use commalg::Field;
use proptest::prelude::*;

fn zoo_f2() -> Vec<MonomialAlgebra> {
    let f = Field::prime(2);
    vec![zoo::ka2(f), zoo::l3(f), zoo::n2(f), zoo::cm_free(f), zoo::loop_example(f)]
}

struct Catalog {
    algebra: Arc<Algebra>,
    indec: Vec<Module>,
}

fn catalogs() -> &'static Vec<Catalog> {
    static C: OnceLock<Vec<Catalog>> = OnceLock::new();
    C.get_or_init(|| {
        zoo_f2()
            .iter()
            .map(|m| {
                let algebra = Algebra::from_monomial(m);
                let indec = enumerate_indecomposables(&algebra, 4).unwrap();
                Catalog { algebra, indec }
            })
            .collect()
    })
}

fn sum_of(c: &Catalog, picks: &[usize]) -> Module {
    let parts: Vec<Module> = picks.iter().map(|&i| c.indec[i % c.indec.len()].clone()).collect();
    Module::direct_sum_all(&c.algebra, &parts)
}

fn pick() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0usize..5, prop::collection::vec(0usize..16, 0..3))
}

#[test]
fn path_algebra_dimensions() {
    let dims: Vec<usize> = zoo_f2().iter().map(|m| m.dim()).collect();
    assert_eq!(dims, vec![3, 5, 2, 4, 6]);
}

#[test]
fn indecomposable_counts() {
    let counts: Vec<usize> = catalogs().iter().map(|c| c.indec.len()).collect();
    // kA2, L3 and N2 are complete at this cap; CMfree and the loop algebra
    // have all their indecomposables below dimension 4 as well.
    assert_eq!(counts, vec![3, 5, 2, 5, 9]);
    for c in catalogs() {
        for m in &c.indec {
            assert!(is_indecomposable(m).unwrap());
        }
    }
}

#[test]
fn extension_enumeration_agrees_with_brute_force_on_the_loop_algebra() {
    let a = Algebra::from_monomial(&zoo::loop_example(Field::prime(2)));
    let x = enumerate_indecomposables(&a, 3).unwrap();
    let y = enumerate_by_matrices(&a, 3).unwrap();
    assert_eq!(x.len(), y.len());
    for (m, n) in x.iter().zip(&y) {
        assert!(is_isomorphic(m, n).unwrap());
    }
}

#[test]
fn rationals_and_other_primes() {
    let q = Field::rationals();
    let a = Algebra::from_monomial(&zoo::l3(q));
    let p3 = Module::projective(&a, 2);
    assert_eq!(hom_space(&p3, &Module::injective(&a, 1).unwrap()).unwrap().len(), 1);
    let a3 = Algebra::from_monomial(&zoo::cm_free(Field::prime(3)));
    assert_eq!(enumerate_indecomposables(&a3, 4).unwrap().len(), 5);
}

#[test]
fn relations_are_enforced() {
    let f = Field::prime(2);
    let a = Algebra::from_monomial(&zoo::n2(f));
    let bad = Module::new(a, vec![2], vec![commalg::Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]])]);
    assert!(bad.is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Yoneda: Hom(P(v), M) = M e_v, dually Hom(M, I(v)) = D(e_v M).
    #[test]
    fn hom_from_projectives_and_into_injectives((ai, picks) in pick()) {
        let c = &catalogs()[ai];
        let m = sum_of(c, &picks);
        for v in 0..c.algebra.n_vertices() {
            prop_assert_eq!(hom_space(&Module::projective(&c.algebra, v), &m).unwrap().len(), m.dim_at(v));
            prop_assert_eq!(hom_space(&m, &Module::injective(&c.algebra, v).unwrap()).unwrap().len(), m.dim_at(v));
        }
    }

    #[test]
    fn hom_is_additive((ai, picks) in pick(), x in 0usize..16) {
        let c = &catalogs()[ai];
        let target = &c.indec[x % c.indec.len()];
        let total = hom_space(&sum_of(c, &picks), target).unwrap().len();
        let parts: usize = picks.iter().map(|&i| hom_space(&c.indec[i % c.indec.len()], target).unwrap().len()).sum();
        prop_assert_eq!(total, parts);
    }

    #[test]
    fn morphisms_have_consistent_kernels_and_images(
        (ai, a, b) in (0usize..5, prop::collection::vec(0usize..16, 1..3), prop::collection::vec(0usize..16, 1..3)),
        coeffs in prop::collection::vec(0i64..2, 16),
    ) {
        let c = &catalogs()[ai];
        let (m, n) = (sum_of(c, &a), sum_of(c, &b));
        let basis = hom_space(&m, &n).unwrap();
        let f = c.algebra.field();
        let cs: Vec<_> = (0..basis.len()).map(|i| f.from_i64(coeffs[i % coeffs.len()])).collect();
        let h = combine(&basis, &cs, &m, &n);
        prop_assert!(h.commutes());
        let (k, incl) = kernel(&h);
        let (im, _, _) = image(&h);
        let (co, proj) = cokernel(&h);
        prop_assert_eq!(k.total_dim() + im.total_dim(), m.total_dim());
        prop_assert_eq!(co.total_dim() + im.total_dim(), n.total_dim());
        prop_assert!(incl.then(&h).is_zero());
        prop_assert!(h.then(&proj).is_zero());
        prop_assert!(incl.is_mono() && proj.is_epi());
    }

    #[test]
    fn decomposition_recovers_summands((ai, picks) in pick()) {
        let c = &catalogs()[ai];
        let m = sum_of(c, &picks);
        let d = decompose(&m).unwrap();
        prop_assert!(d.witness.is_iso());
        let got = d.expanded();
        prop_assert_eq!(got.len(), picks.len());
        for &i in &picks {
            let want = &c.indec[i % c.indec.len()];
            let expected = picks.iter().filter(|&&j| j % c.indec.len() == i % c.indec.len()).count();
            let found = got.iter().filter(|g| is_isomorphic(g, want).unwrap()).count();
            prop_assert_eq!(found, expected);
        }
    }

    #[test]
    fn duality_is_an_involution((ai, picks) in pick()) {
        let c = &catalogs()[ai];
        let m = sum_of(c, &picks);
        let dd = m.dual().unwrap().dual().unwrap();
        prop_assert!(is_isomorphic(&m, &dd).unwrap());
    }
}
