mod common;

use chardeg::conditions::{disconnected_shape, odd_cycle_free_complement, palfy_inequality, signature, ComponentPair};
use chardeg::constructions::{
    coprimality_check, cyclotomic_value, dugan_cd_general, dugan_cd_q3, galois_cd, is_probable_prime, join_closure,
    mersenne, shipped_recipes, verify_product, ConstructionError, FactoredInteger, PrimeLabel, Recipe, RecipeKind,
    VerifyError, MR_ROUNDS,
};
use chardeg::diameter3::{diameter3_test, rho_partition, Diameter3Mode, Diameter3Verdict};
use chardeg::graph::{canonical_key, vertex_set, Diameter};
use chardeg::kb::kb_seed_builtin;
use chardeg::Status;
use num_bigint::BigUint;

fn recipe(name: &str) -> Recipe {
    shipped_recipes().into_iter().find(|r| r.name == name).unwrap()
}

#[test]
fn mersenne_factorizations_verify() {
    for (name, m) in [("galois-491", 491), ("galois-143", 143)] {
        let r = recipe(name);
        assert_eq!(r.kind, RecipeKind::Galois { m });
        verify_product(&mersenne(m), &r.factors, true).unwrap();
        for f in &r.factors {
            assert!(is_probable_prime(&f.value, MR_ROUNDS), "{}", f.value);
        }
    }
    assert_eq!(recipe("galois-491").factors.len(), 7);
    assert_eq!(recipe("galois-143").factors.len(), 6);
}

#[test]
fn repeated_89_list_fails() {
    let printed: Vec<PrimeLabel> =
        [23u64, 89, 89, 8191, 724153, 158822951431, 5782172113400990737].into_iter().map(PrimeLabel::literal).collect();
    assert!(matches!(verify_product(&mersenne(143), &printed, false), Err(VerifyError::ProductMismatch { .. })));
}

#[test]
fn galois_graphs_are_two_cliques() {
    for (name, small, large) in [("galois-491", 1, 7), ("galois-143", 2, 6)] {
        let g = recipe(name).render(true).unwrap().graph;
        let pair = disconnected_shape(&g).unwrap();
        assert_eq!(pair, ComponentPair { n_small: small, n_large: large });
        assert!(palfy_inequality(pair));
    }
    let tiny = galois_cd(2, &[PrimeLabel::literal(3)], true).unwrap();
    assert_eq!(tiny.len(), 3);
    assert!(matches!(galois_cd(143, &recipe("galois-491").factors, false), Err(ConstructionError::Verify(_))));
}

#[test]
fn coprimality_of_used_triples() {
    for (p, q, r) in [(2, 3, 17), (23, 3, 13), (103, 11, 13), (103, 11, 19)] {
        assert!(coprimality_check(p, q, r), "{p} {q} {r}");
    }
    // 7 = Phi_3(2) divides Phi_21(2) = 2359.
    assert!(!coprimality_check(2, 3, 7));
}

#[test]
fn g7_factors_belong_to_r19() {
    let r = recipe("dugan-103-11-19");
    assert_eq!(r.kind, RecipeKind::DuganQ { p: 103, q: 11, r: 19 });
    assert!(matches!(dugan_cd_general(103, 11, 13, &r.factors, false), Err(ConstructionError::Verify(_))));
    let cd = dugan_cd_general(103, 11, 19, &r.factors, true).unwrap();
    // v and w are the cyclotomic values of 103 at 19 and 209.
    let base = BigUint::from(103u8);
    assert_eq!(&cyclotomic_value(19, &base), cd.value("v").unwrap());
    assert_eq!(&cyclotomic_value(209, &base), cd.value("w").unwrap());
    assert!(cd.contains(&FactoredInteger::prime("11").times("19", 1)));
}

#[test]
fn general_formula_at_q3_adds_one_degree() {
    for name in ["dugan-2-3-17", "dugan-23-3-13"] {
        let rec = recipe(name);
        let RecipeKind::Dugan3 { p, r } = rec.kind else { panic!() };
        let q3 = dugan_cd_q3(p, r, &rec.factors, false).unwrap();
        let general = dugan_cd_general(p, 3, r, &rec.factors, false).unwrap();
        assert_eq!(q3.len(), 11);
        let extra: Vec<&FactoredInteger> = general.degrees().filter(|d| !q3.contains(d)).collect();
        assert!(q3.degrees().all(|d| general.contains(d)));
        let expected = FactoredInteger::product(rec.factors.iter().map(|f| f.name.as_str())).times(&p.to_string(), 3 * r - 4);
        assert_eq!(extra, vec![&expected]);
        assert_eq!(q3.degree_graph().unwrap(), general.degree_graph().unwrap());
    }
}

#[test]
fn dugan_graphs_match_diameter3_shapes() {
    let mut keys = Vec::new();
    for (name, label) in [("dugan-103-11-19", "B7"), ("dugan-23-3-13", "B13"), ("dugan-2-3-17", "B36")] {
        let g = recipe(name).render(true).unwrap().graph;
        assert_eq!(g.order(), 8);
        assert!(odd_cycle_free_complement(&g));
        assert_eq!(signature(&g).unwrap().to_string(), "(6,2)");
        assert_eq!(g.diameter(), Diameter::Finite(3));
        assert_eq!(diameter3_test(&g, Diameter3Mode::AnyLabeling).unwrap(), Diameter3Verdict::Pass);
        assert_eq!(diameter3_test(&g, Diameter3Mode::Strict).unwrap(), Diameter3Verdict::Pass);
        assert_eq!(canonical_key(&g), common::key(label));
        keys.push(canonical_key(&g));
    }
    keys.sort();
    keys.dedup();
    assert_eq!(keys.len(), 3);
}

#[test]
fn g36_rho_partition() {
    let rendered = recipe("dugan-2-3-17").render(true).unwrap();
    let at = |name: &str| rendered.labels.iter().position(|l| l == name).unwrap();
    let set = |names: &[&str]| vertex_set(names.iter().map(|n| at(n)));
    let part = rho_partition(&rendered.graph, at("17"), at("s")).unwrap();
    assert_eq!(part.rho1, set(&["17"]));
    assert_eq!(part.rho2, set(&["3"]));
    assert_eq!(part.rho3, set(&["2", "t", "u", "v", "w"]));
    assert_eq!(part.rho4, set(&["s"]));
    assert!(part.rho3_ok() && part.growth_ok());
}

#[test]
fn join_closure_members_are_filter_valid() {
    let mut kb = kb_seed_builtin();
    kb.merge(&chardeg::kb::shipped_external()).unwrap();
    let certs = join_closure(&kb, 8);
    assert!(certs.iter().all(|c| c.verify()));
    for c in &certs {
        assert!(odd_cycle_free_complement(c.key.graph()));
        for side in [&c.left, &c.right] {
            assert_eq!(kb.get(side).map(|r| r.status), Some(Status::Occurs));
        }
    }
    let connected = certs.iter().filter(|c| c.key.graph().is_connected()).count();
    assert!(connected >= 34);
}
