use ehrlace::exactcore::rational::binomial;
use ehrlace::exactcore::{int, Polynomial, Rational};
use ehrlace::families::{build_g, family_hypergeometric, family_polynomial, FamilyId};
use ehrlace::recurrence::{
    default_probe_orders, discover_recurrence, favard_window, rech3n_coefficients, RelationAnsatz,
    ThreeTermRule,
};
use ehrlace::series::{delta_to_polynomial, EhrhartData};

fn poly(id: FamilyId) -> Polynomial {
    family_polynomial(&id).unwrap_or_else(|e| panic!("{id}: {e}"))
}

#[test]
fn cross_from_binomial_numerator() {
    for d in 1..=30usize {
        let delta: Vec<Rational> = (0..=d)
            .map(|i| Rational::from_integer(binomial(d as i64, i as i64)))
            .collect();
        let expected = delta_to_polynomial(&EhrhartData::new(delta, d));
        assert_eq!(poly(FamilyId::Cross { d }), expected, "d={d}");
    }
}

#[test]
fn star_graphs_are_cross_polytopes() {
    for n in 1..=30usize {
        assert_eq!(poly(FamilyId::K1n { n }), poly(FamilyId::Cross { d: n }), "n={n}");
    }
}

#[test]
fn g_degree_drops_only_at_minus_two() {
    for d in 3..=20usize {
        for c in [-2, -1, 0, 2] {
            let g = build_g(d, &int(c)).unwrap();
            let full = g.degree() == Some(d - 1);
            assert_eq!(full, c != -2, "d={d} c={c}");
        }
    }
}

#[test]
fn hypergeometric_forms_match_values() {
    for d in 1..=10usize {
        let mut ids = vec![
            FamilyId::Cross { d },
            FamilyId::Stasheff { d },
            FamilyId::RootA { d },
            FamilyId::RootC { d },
        ];
        ids.extend((0..d).map(|j| FamilyId::Hdj { d, j }));
        for id in ids {
            let p = poly(id.clone());
            for m in 0..=10usize {
                let hyp = family_hypergeometric(&id, m).unwrap();
                assert_eq!(hyp, p.eval(&int(m as i64)), "{id} at {m}");
            }
        }
    }
}

#[test]
fn discovered_relations_survive_more_probes() {
    for name in RelationAnsatz::names() {
        let ansatz = RelationAnsatz::by_name(name).unwrap();
        let probes = default_probe_orders(&ansatz);
        let base = discover_recurrence(&ansatz, probes).unwrap();
        let wide = discover_recurrence(&ansatz, 2 * probes).unwrap();
        assert_eq!(base.coefficients, wide.coefficients, "{name}");
        assert!(base.verified_orders >= base.probe_orders, "{name}");
    }
}

#[test]
fn discovered_rech3n_matches_known_coefficients() {
    let found = discover_recurrence(&RelationAnsatz::rech3n(), 12).unwrap();
    for (name, known) in rech3n_coefficients() {
        let (_, got) = found
            .coefficients
            .iter()
            .find(|(n, _)| n == name)
            .unwrap_or_else(|| panic!("no coefficient {name}"));
        assert_eq!(got, &known, "{name}");
    }
}

#[test]
fn favard_coefficients_positive() {
    let rules = [
        ThreeTermRule::cross(),
        ThreeTermRule::stasheff(),
        ThreeTermRule::root_a(),
        ThreeTermRule::root_c(),
    ];
    for rule in &rules {
        let rep = favard_window(rule, 30).unwrap();
        assert!(rep.all_in_unit_interval, "{}", rule.name);
        assert!(rep.m2_admissible, "{}", rule.name);
        assert!(rep.favard_positive, "{}", rule.name);
        for (j, lambda) in &rep.lambdas {
            // M_2 = 1 for the type C rule
            if rule.name == "rootc" && *j == 2 {
                assert_eq!(*lambda, int(0));
                continue;
            }
            assert!(*lambda > int(0), "{} j={j}", rule.name);
        }
    }
}
