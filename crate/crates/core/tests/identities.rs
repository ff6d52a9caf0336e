use num::One;

use supercatalan::families::{ClassicalFamily, QFamily};
use supercatalan::identities::{check, check_all, lookup, registry, IdentityError, Ranges, PAIRS};
use supercatalan::scalar::{int, ratio, sample_points, QPoly, QRat, Rational};

const REQUIRED: &[&str] = &[
    "eq-1.16", "eq-1.17", "eq-1.18", "eq-1.19", "eq-1.20", "eq-1.21", "eq-1.22", "eq-1.23", "eq-1.24",
    "eq-1.25", "eq-1.26", "eq-1.27", "eq-1.28", "eq-2.3", "eq-2.5", "eq-2.6", "eq-2.7", "eq-2.8", "eq-2.10",
    "eq-2.11", "eq-2.12", "eq-2.13", "eq-2.14", "eq-3.2", "eq-3.3", "eq-3.4", "eq-3.6", "eq-3.7", "eq-3.8",
    "eq-3.9", "eq-3.10", "eq-3.11", "eq-3.12", "eq-3.13", "eq-4.3", "eq-4.7", "eq-4.5", "eq-4.6", "eq-4.11",
    "eq-4.12", "eq-4.13", "eq-4.14", "eq-4.16", "eq-4.18", "eq-4.19", "eq-4.23", "eq-4.24", "eq-4.25",
    "eq-4.27", "eq-4.28", "eq-4.3-example", "eq-4.14-example",
];

fn small() -> Ranges {
    Ranges { max_n: 4, max_l: 4, max_m: 3, max_j: 2, order: 10 }
}

#[test]
fn registry_covers_required_ids() {
    for id in REQUIRED {
        assert!(lookup(id).is_some(), "missing {id}");
    }
    let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
    let total = ids.len();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), total, "duplicate ids");
}

#[test]
fn aliases_resolve_to_the_same_check() {
    assert_eq!(lookup("eq-4.7").unwrap().id, "eq-4.3");
    assert_eq!(lookup("eq-4.6").unwrap().id, "eq-4.5");
}

#[test]
fn eq_1_27_passes_with_spot_value() {
    let r = check("eq-1.27", &Ranges { max_n: 6, max_m: 5, ..Ranges::default() }).unwrap();
    assert!(r.ok(), "{:?}", r.first_failure());
    assert!(r.points.iter().any(|p| p.params.get("n") == Some(1) && p.params.get("m") == Some(1)));
    // n=1, m=1: 1/2 + 1/2 on the left, 2/2 on the right
    assert_eq!(ratio(1, 2) + ratio(1, 2), ratio(2, 2));
}

#[test]
fn eq_4_25_even_n_passes() {
    let r = check("eq-4.25", &small()).unwrap();
    assert!(r.ok(), "{:?}", r.first_failure());
    assert!(r.points.iter().any(|p| p.params.get("n").is_some_and(|n| n % 2 == 0)));
}

#[test]
fn eq_2_12_matches_signed_pentagonal_powers() {
    let r = check("eq-2.12", &small()).unwrap();
    assert!(r.ok(), "{:?}", r.first_failure());
    for n in 0..=4usize {
        let p = QFamily::L { m: 1, s: QRat::from_int(-1) }.closed_form(3 * n + 1);
        let value = p.evaluate(&QRat::one());
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(value, QRat::from_poly(QPoly::monomial(sign, n * (3 * n + 1) / 2)), "n={n}");
    }
}

fn v_at_one(m: usize, s: &Rational, n: usize) -> Rational {
    ClassicalFamily::V { m, s: s.clone() }.closed_form(n).evaluate(&int(1))
}

#[test]
fn tangent_expansion_examples() {
    for id in ["eq-4.3-example", "eq-4.14-example"] {
        let r = check(id, &small()).unwrap();
        assert!(r.ok(), "{id}: {:?}", r.first_failure());
    }
    for s in sample_points(6) {
        let v = |m, n| v_at_one(m, &s, n);
        assert_eq!(v(0, 5), ratio(5, 2) * v(0, 4) - ratio(5, 2) * v(0, 2) + int(1), "s={s}");
        assert_eq!(v(1, 5), int(3) * v(1, 4) - int(5) * v(1, 2) + int(3), "s={s}");
    }
}

#[test]
fn zero_range_suite_passes() {
    let r = Ranges { max_n: 0, ..small() };
    let suite = check_all(&r, None, 2).unwrap();
    assert_eq!(suite.reports.len(), registry().len());
    assert!(suite.reports.iter().all(|x| x.ok()), "{:?}", suite.failed_ids());
}

#[test]
fn single_id_filter() {
    let suite = check_all(&small(), Some(&["eq-1.19"]), 1).unwrap();
    assert_eq!(suite.reports.len(), 1);
    assert_eq!(suite.reports[0].id, "eq-1.19");
    assert!(suite.pairs.is_empty() && suite.groups.is_empty());
}

#[test]
fn suite_is_reproducible_across_job_counts() {
    let ids = ["eq-1.18", "eq-3.6", "eq-1.7", "eq-4.11", "eq-4.12", "eq-4.13", "eq-2.13"];
    let a = check_all(&small(), Some(&ids), 1).unwrap().without_timing();
    let b = check_all(&small(), Some(&ids), 4).unwrap().without_timing();
    let c = check_all(&small(), Some(&ids), 4).unwrap().without_timing();
    assert_eq!(a, b);
    assert_eq!(b, c);
    assert_eq!(a.reports.iter().map(|r| r.id.as_str()).collect::<Vec<_>>(), ids);
}

#[test]
fn pairs_and_groups_hold() {
    let ids: Vec<&str> = PAIRS.iter().flat_map(|(c, q)| [*c, *q]).chain(["eq-4.11", "eq-4.12"]).collect();
    let suite = check_all(&small(), Some(&ids), 4).unwrap();
    assert_eq!(suite.pairs.len(), PAIRS.len());
    for p in &suite.pairs {
        assert!(p.ok && p.compared > 0, "{p:?}");
    }
    assert_eq!(suite.groups.len(), 1);
    assert!(suite.groups[0].ok);
    assert!(suite.ok());
}

#[test]
fn known_typos_surface_as_flags_not_failures() {
    for id in ["eq-1.7", "eq-1.14", "eq-2.13", "eq-4.10"] {
        let r = check(id, &Ranges::default()).unwrap();
        assert!(r.ok(), "{id}: {:?}", r.first_failure());
        assert!(!r.flags.is_empty(), "{id} raised no flag");
        let f = &r.flags[0];
        assert_ne!(f.printed, f.computed);
    }
}

#[test]
fn unknown_id_is_an_error() {
    assert!(matches!(check("eq-9.99", &small()), Err(IdentityError::UnknownId(id)) if id == "eq-9.99"));
    assert!(matches!(check_all(&small(), Some(&["eq-1.19", "nope"]), 1), Err(IdentityError::UnknownId(_))));
}

#[test]
fn ranges_above_cap_are_rejected() {
    let r = Ranges { max_n: Ranges::CAP.max_n + 1, ..small() };
    assert!(matches!(check("eq-1.19", &r), Err(IdentityError::RangeTooLarge { name: "n", .. })));
    let r = Ranges { order: 1000, ..small() };
    assert!(matches!(check_all(&r, None, 1), Err(IdentityError::RangeTooLarge { name: "order", .. })));
}

#[test]
fn reports_state_their_ranges() {
    let r = check("eq-1.19", &small()).unwrap();
    assert_eq!(r.ranges, small().describe());
    assert!(r.points.len() > 1);
    assert!(r.points.iter().all(|p| p.params.get("n").is_some_and(|n| n <= 4)));
}

#[test]
fn report_json_has_outcomes() {
    let r = check("eq-1.25", &small()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["id"], "eq-1.25");
    assert!(v["points"].as_array().unwrap().iter().all(|p| p["status"] == "pass"));
}

#[test]
fn degenerate_ranges_never_fail() {
    let corners = [
        Ranges { max_n: 0, max_l: 0, max_m: 0, max_j: 0, order: 0 },
        Ranges { max_n: 1, max_l: 0, max_m: 1, max_j: 0, order: 1 },
        Ranges { max_n: 0, max_l: 1, max_m: 0, max_j: 1, order: 2 },
    ];
    for r in &corners {
        let suite = check_all(r, None, 4).unwrap();
        assert!(suite.reports.iter().all(|x| x.ok()), "{r:?}: {:?}", suite.failed_ids());
    }
}
