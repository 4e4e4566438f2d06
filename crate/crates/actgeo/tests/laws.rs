//! Cross-module laws: algebra axioms on random data, annihilator invariance
//! under module isomorphism, closure properties of closed sets, and
//! preservation of quasi-identities under products and subrepresentations.

use actgeo::fpmat::{row_times_matrix, FpMatrix};
use actgeo::geometry::{self, Conclusion, EquationSet, QuasiIdentity};
use actgeo::module::FreeModuleElement;
use actgeo::operators;
use actgeo::rep::{self, FiniteRepresentation};
use actgeo::ring::GroupRingElement;
use actgeo::scalar::Field;
use actgeo::word::{Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: u128 = 1_000_000;

fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(1..=gens), rng.gen_bool(0.5))))
}

fn random_ring(rng: &mut ChaCha8Rng, field: Field, gens: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero(field);
    for _ in 0..rng.gen_range(0..=3) {
        let c = field.from_int(rng.gen_range(-4i64..=4));
        out = out
            .add(&GroupRingElement::monomial(c, random_word(rng, gens, 6)))
            .unwrap();
    }
    out
}

fn random_module(rng: &mut ChaCha8Rng, field: Field, nx: usize, ny: usize) -> FreeModuleElement {
    let mut out = FreeModuleElement::zero(field);
    for _ in 0..rng.gen_range(1..=2) {
        let k = rng.gen_range(1..=nx);
        let mut u = random_ring(rng, field, ny);
        u = u
            .add(&GroupRingElement::word(field, random_word(rng, ny, 2)))
            .unwrap();
        out = out.add(&FreeModuleElement::action_term(k, u)).unwrap();
    }
    out
}

#[test]
fn ring_axioms_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for field in [Field::Fp(5), Field::Q] {
        for _ in 0..100 {
            let a = random_ring(&mut rng, field, 3);
            let b = random_ring(&mut rng, field, 3);
            let c = random_ring(&mut rng, field, 3);
            let one = GroupRingElement::one(field);
            // associativity and distributivity
            assert_eq!(
                a.multiply(&b).unwrap().multiply(&c).unwrap(),
                a.multiply(&b.multiply(&c).unwrap()).unwrap()
            );
            assert_eq!(
                a.multiply(&b.add(&c).unwrap()).unwrap(),
                a.multiply(&b).unwrap().add(&a.multiply(&c).unwrap()).unwrap()
            );
            assert_eq!(a.multiply(&one).unwrap(), a);
            assert_eq!(one.multiply(&a).unwrap(), a);
            assert_eq!(a.add(&a.neg()).unwrap(), GroupRingElement::zero(field));
        }
    }
}

#[test]
fn module_axioms_on_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for field in [Field::Fp(3), Field::Q] {
        for _ in 0..100 {
            let w = random_module(&mut rng, field, 2, 2);
            let v = random_module(&mut rng, field, 2, 2);
            let u = random_ring(&mut rng, field, 2);
            let t = random_ring(&mut rng, field, 2);
            // (w + v).u = w.u + v.u and w.(u t) = (w.u).t
            assert_eq!(
                w.add(&v).unwrap().action(&u).unwrap(),
                w.action(&u).unwrap().add(&v.action(&u).unwrap()).unwrap()
            );
            assert_eq!(
                w.action(&u.multiply(&t).unwrap()).unwrap(),
                w.action(&u).unwrap().action(&t).unwrap()
            );
        }
    }
}

#[test]
fn annihilator_invariant_under_module_isomorphism() {
    // conjugating the action matrices by an invertible S and mapping the
    // vectors through S must not change which group-ring elements annihilate
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let p = 3u64;
        let r = rep::cyclic_rep(p, 4, 2);
        let d = r.action_dim();
        let s = loop {
            let data: Vec<u64> = (0..d * d).map(|_| rng.gen_range(0..p)).collect();
            let m = FpMatrix::new(p, d, d, data);
            if m.inverse().is_ok() {
                break m;
            }
        };
        let s_inv = s.inverse().unwrap();
        let gens_g: Vec<FpMatrix> = r
            .generators()
            .iter()
            .map(|&i| r.group_matrix(i).clone())
            .collect();
        let gens_a: Vec<FpMatrix> = r
            .generators()
            .iter()
            .map(|&i| s_inv.multiply(r.action_matrix(i)).multiply(&s))
            .collect();
        let r2 = FiniteRepresentation::generate(p, &gens_g, &gens_a, 64).unwrap();
        assert_eq!(r.size(), r2.size());

        let vecs: Vec<Vec<u64>> =
            (0..2).map(|_| (0..d).map(|_| rng.gen_range(0..p)).collect()).collect();
        // image of the vectors under v -> v S^{-1} (so that v.A = (vS^{-1}).A' . S)
        let vecs2: Vec<Vec<u64>> =
            vecs.iter().map(|v| row_times_matrix(p, v, &s_inv)).collect();
        let ann1 = rep::annihilator(&r, &vecs).unwrap();
        let ann2 = rep::annihilator(&r2, &vecs2).unwrap();
        assert_eq!(ann1.space.rank(), ann2.space.rank());
        // ranks agree and the element indexings agree because both closures
        // start from the same group generators in the same order
        assert_eq!(ann1.space, ann2.space);
    }
}

#[test]
fn closed_sets_form_submodules() {
    // elements passing the closure test are stable under +, scalar action,
    // and the module action by any group-ring element
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let r = rep::cyclic_rep(3, 4, 2);
    let field = r.field();
    let t: Vec<FreeModuleElement> = (0..2).map(|_| random_module(&mut rng, field, 1, 1)).collect();
    let eqs = EquationSet::action_only(t);
    let pool = geometry::candidate_pool(&r, 1, 1, 2);
    let closed: Vec<FreeModuleElement> = pool
        .into_iter()
        .filter(|w| geometry::closure_member(&r, &eqs, w, 1, 1, BUDGET).unwrap())
        .collect();
    assert!(!closed.is_empty());
    for a in closed.iter().take(4) {
        for b in closed.iter().take(4) {
            let sum = a.add(b).unwrap();
            assert!(geometry::closure_member(&r, &eqs, &sum, 1, 1, BUDGET).unwrap());
        }
        let u = random_ring(&mut rng, field, 1);
        let au = a.action(&u).unwrap();
        assert!(geometry::closure_member(&r, &eqs, &au, 1, 1, BUDGET).unwrap());
    }
}

#[test]
fn quasi_identities_preserved_by_products_and_subreps() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let p = 3u64;
    let a = rep::cyclic_rep(p, 2, 2);
    let b = rep::cyclic_rep(p, 4, 1);
    let prod = operators::cartesian_product(p, &[&a, &b]).unwrap();
    let sub = operators::generated_subrepresentation(&prod, &[vec![1, 0]], &[1]);
    let sub_rep = operators::subrep_as_representation(&prod, &sub).unwrap();

    let mut checked = 0;
    while checked < 60 {
        let premises: Vec<FreeModuleElement> =
            (0..rng.gen_range(0..=2)).map(|_| random_module(&mut rng, Field::Fp(p), 1, 1)).collect();
        let w0 = random_module(&mut rng, Field::Fp(p), 1, 1);
        let q = QuasiIdentity {
            premises,
            group_premises: vec![],
            conclusion: Conclusion::Module(w0),
        };
        let holds_a = geometry::check_quasi_identity(&a, &q, 1, 1, BUDGET).unwrap();
        let holds_b = geometry::check_quasi_identity(&b, &q, 1, 1, BUDGET).unwrap();
        if !(holds_a && holds_b) {
            continue;
        }
        checked += 1;
        assert!(
            geometry::check_quasi_identity(&prod, &q, 1, 1, BUDGET).unwrap(),
            "quasi-identity lost in the product"
        );
        assert!(
            geometry::check_quasi_identity(&sub_rep, &q, 1, 1, BUDGET).unwrap(),
            "quasi-identity lost in the subrepresentation"
        );
    }
}
