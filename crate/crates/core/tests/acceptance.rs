//! Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero when
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use supercatalan::algebra::{genocchi_numbers, q_tangent_numbers, tangent_numbers, Poly};
use supercatalan::families::{sigma, ClassicalFamily, Functional, QFamily};
use supercatalan::identities::{self, Ranges, VerificationReport};
use supercatalan::lattice::{brute_force_weight, lucas_weights, PathTable, Weights};
use supercatalan::scalar::{int, ratio, QRat, Rational};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn report(id: &str, ranges: &Ranges) -> Result<VerificationReport, String> {
    identities::check(id, ranges).map_err(|e| e.to_string())
}

fn report_ok(r: &VerificationReport) -> Result<(), String> {
    match r.first_failure() {
        None => Ok(()),
        Some(p) => Err(format!("{} fails at {}: {:?}", r.id, p.params, p.outcome)),
    }
}

fn moments_reproduce() -> Outcome {
    for m in 0..=5 {
        let f = ClassicalFamily::L { m, s: int(-1) };
        let basis: Vec<Poly<Rational>> = (0..=16).map(|n| f.closed_form(n)).collect();
        let func = Functional::from_basis(&basis).map_err(|e| e.to_string())?;
        for n in 0..=8 {
            let got = &func.moments()[2 * n];
            ensure(*got == sigma(m, n) && f.moment(2 * n) == sigma(m, n), || {
                format!("m={m} n={n}: {got} vs sigma {}", sigma(m, n))
            })?;
        }
    }
    let printed = [int(1), ratio(2, 3), int(1), int(2), ratio(14, 3), int(12), int(33), ratio(286, 3)];
    for (n, p) in printed.iter().enumerate() {
        ensure(sigma(2, n) == *p, || format!("sigma(2,{n}) = {} vs printed {p}", sigma(2, n)))?;
    }
    Ok("m<=5, n<=8; sigma(2,0..7) printed list".into())
}

fn oracle_equivalence() -> Outcome {
    let len = 16;
    let families: [(&str, Weights<Rational>); 3] = [
        ("ones", Weights::ones(len)),
        ("lucas", lucas_weights(len)),
        ("lambda(m=2,s=-1)", Weights::lambda(2, &int(-1), len)),
    ];
    for (name, w) in &families {
        let table = PathTable::build(w, 14).map_err(|e| e.to_string())?;
        for n in 0..=14 {
            for k in 0..=n {
                let brute = brute_force_weight(w, n, k).map_err(|e| e.to_string())?;
                let t = table.get(n, k).map_err(|e| e.to_string())?;
                ensure(brute == t, || format!("{name} b({n},{k}): table {t} vs enumeration {brute}"))?;
            }
        }
    }
    for m in 0..=3 {
        let w = Weights::lambda(m, &int(-1), len);
        let table = PathTable::build(&w, 14).map_err(|e| e.to_string())?;
        let f = ClassicalFamily::L { m, s: int(-1) };
        let basis: Vec<Poly<Rational>> = (0..=14).map(|n| f.closed_form(n)).collect();
        let func = Functional::from_basis(&basis).map_err(|e| e.to_string())?;
        let wq = Weights::mu_q(m, &QRat::from_int(1), len);
        let tq = PathTable::build(&wq, 14).map_err(|e| e.to_string())?;
        let fq = QFamily::V { m, s: QRat::from_int(1) };
        let bq: Vec<Poly<QRat>> = (0..=14).map(|n| fq.closed_form(n)).collect();
        let funcq = Functional::from_basis(&bq).map_err(|e| e.to_string())?;
        for n in 0..=7 {
            let b = table.get(2 * n, 0).map_err(|e| e.to_string())?;
            ensure(b == func.moments()[2 * n], || format!("classical m={m} n={n}"))?;
            let b = tq.get(2 * n, 0).map_err(|e| e.to_string())?;
            ensure(b == funcq.moments()[2 * n], || format!("q m={m} n={n}"))?;
        }
    }
    Ok("3 weight families n<=14; b(2n,0) = moments n<=7, m<=3".into())
}

fn dual_construction() -> Outcome {
    let mut classical = vec![ClassicalFamily::Lucas, ClassicalFamily::Fibonacci, ClassicalFamily::ChebT, ClassicalFamily::ChebU];
    let mut q = vec![QFamily::LittleR];
    for s in [-1, 1, 2] {
        q.push(QFamily::LittleH { s: QRat::from_int(s) });
        q.push(QFamily::BigH { s: QRat::from_int(s) });
    }
    for m in 0..=4 {
        for s in [int(-1), int(1), ratio(-1, 4), ratio(2, 3)] {
            classical.push(ClassicalFamily::L { m, s: s.clone() });
            classical.push(ClassicalFamily::V { m, s });
        }
        for s in [QRat::from_int(-1), QRat::from_int(1), -QRat::q_pow(m as i64)] {
            q.push(QFamily::L { m, s: s.clone() });
            q.push(QFamily::V { m, s });
        }
        q.push(QFamily::R { m });
    }
    for f in &classical {
        let rec = f.by_recurrence(10);
        for (n, p) in rec.iter().enumerate() {
            ensure(*p == f.closed_form(n), || format!("{f} n={n}"))?;
        }
    }
    for f in &q {
        let rec = f.by_recurrence(10);
        for (n, p) in rec.iter().enumerate() {
            ensure(*p == f.closed_form(n), || format!("{f} n={n}"))?;
        }
    }
    let ranges = Ranges { max_n: 8, max_m: 4, ..Ranges::acceptance() };
    for id in ["eq-1.3", "eq-2.1", "eq-2.3", "eq-2.10", "eq-3.2", "eq-3.5"] {
        report_ok(&report(id, &ranges)?)?;
    }
    Ok(format!("{} classical + {} q instances, n<=10; operator recurrence via d_q", classical.len(), q.len()))
}

fn identity_suite() -> Outcome {
    let suite = identities::check_all(&Ranges::acceptance(), None, 1).map_err(|e| e.to_string())?;
    ensure(suite.reports.len() >= 30, || format!("only {} identities", suite.reports.len()))?;
    for r in &suite.reports {
        report_ok(r)?;
    }
    for c in suite.pairs.iter().chain(&suite.groups) {
        ensure(c.ok && c.compared > 0, || format!("{:?}: {:?}", c.ids, c.detail))?;
    }
    let points: usize = suite.reports.iter().map(|r| r.points.len()).sum();
    Ok(format!(
        "{} identities, {points} points, {} q/classical pairs, {} flags",
        suite.reports.len(),
        suite.pairs.len(),
        suite.flags().len()
    ))
}

fn sequences() -> Outcome {
    let t = tangent_numbers(5).map_err(|e| e.to_string())?;
    ensure(t.iter().map(|x| x.to_string()).eq(["1", "2", "16", "272", "7936"]), || format!("tangent {t:?}"))?;
    let g = genocchi_numbers(7).map_err(|e| e.to_string())?;
    ensure(g.iter().map(|x| x.to_string()).eq(["0", "1", "1", "3", "17", "155", "2073"]), || format!("genocchi {g:?}"))?;
    let tq = q_tangent_numbers(3).map_err(|e| e.to_string())?;
    let f = |s: &str| s.parse::<QRat>().expect("literal parses");
    let sq = |x: QRat| x.clone() * x;
    let printed = [f("1"), f("q") * f("1 + q"), f("q^2") * sq(f("1 + q")) * sq(f("1 + q^2"))];
    for (i, (a, b)) in tq.iter().zip(&printed).enumerate() {
        ensure(QRat::from_poly(a.clone()) == *b, || format!("q-tangent {i}: {a}"))?;
    }
    let ranges = Ranges { max_n: 11, ..Ranges::acceptance() };
    for id in ["eq-1.5", "eq-1.6", "eq-2.11", "eq-4.4", "eq-4.15", "eq-4.20"] {
        report_ok(&report(id, &ranges)?)?;
    }
    let r = report("eq-2.11", &ranges)?;
    ensure(r.points.iter().any(|p| p.params.get("n") == Some(11)), || "eq-2.11 stops before n = 11".into())?;
    let r = report("eq-2.14", &Ranges { max_n: 6, ..Ranges::acceptance() })?;
    report_ok(&r)?;
    ensure(r.flags.is_empty(), || format!("eq-2.14 flags {:?}", r.flags))?;
    let r = report("eq-1.7", &Ranges::acceptance())?;
    report_ok(&r)?;
    ensure(r.flags.iter().any(|f| f.params.get("n") == Some(11)), || "eq-1.7 final entry not flagged".into())?;
    Ok("tangent, Genocchi, q-tangent, eq-1.5 to eq-1.7, eq-2.11 to n=11, eq-2.14; eq-1.7 flagged".into())
}

fn series_equations() -> Outcome {
    let ranges = Ranges { max_m: 4, order: 16, ..Ranges::acceptance() };
    for id in ["eq-4.11", "eq-4.23", "eq-4.16", "eq-4.27"] {
        let r = report(id, &ranges)?;
        report_ok(&r)?;
        let max_m = r.points.iter().filter_map(|p| p.params.get("m")).max();
        ensure(max_m == Some(4), || format!("{id} covers m up to {max_m:?}"))?;
        let max_order = r.points.iter().filter_map(|p| p.params.get("n")).max();
        ensure(max_order == Some(16), || format!("{id} stops at order {max_order:?}"))?;
        if matches!(id, "eq-4.11" | "eq-4.23") {
            for s in [0, 1, -1] {
                ensure(r.points.iter().any(|p| p.params.get("s") == Some(s)), || format!("{id} misses s={s}"))?;
            }
        }
    }
    Ok("eq-4.11, eq-4.23 at s in {0,1,-1}; eq-4.16, eq-4.27; m<=4, order 16".into())
}

fn orthogonality() -> Outcome {
    for m in 0..=3 {
        for s in [int(-1), ratio(1, 3)] {
            for f in [ClassicalFamily::L { m, s: s.clone() }, ClassicalFamily::V { m, s }] {
                let basis: Vec<Poly<Rational>> = (0..=12).map(|n| f.closed_form(n)).collect();
                let func = Functional::from_basis(&basis).map_err(|e| e.to_string())?;
                for i in 0..=6 {
                    for j in 0..=6 {
                        let v = func.apply(&(&basis[i] * &basis[j])).map_err(|e| e.to_string())?;
                        ensure(i == j || v == int(0), || format!("{f} i={i} j={j}: {v}"))?;
                    }
                }
            }
        }
        let fq = QFamily::V { m, s: QRat::from_int(1) };
        let basis: Vec<Poly<QRat>> = (0..=12).map(|n| fq.closed_form(n)).collect();
        let func = Functional::from_basis(&basis).map_err(|e| e.to_string())?;
        for i in 0..=6 {
            for j in 0..i {
                let v = func.apply(&(&basis[i] * &basis[j])).map_err(|e| e.to_string())?;
                ensure(v == QRat::from_int(0), || format!("{fq} i={i} j={j}: {v}"))?;
            }
        }
    }
    Ok("l_i l_j and v_i v_j (classical and q), i != j <= 6, m <= 3".into())
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "moment reproduction", budget: Duration::from_secs(1), run: moments_reproduce },
        Criterion { name: "oracle equivalence", budget: Duration::from_secs(30), run: oracle_equivalence },
        Criterion { name: "dual construction", budget: Duration::from_secs(30), run: dual_construction },
        Criterion { name: "identity suite", budget: Duration::from_secs(300), run: identity_suite },
        Criterion { name: "sequence reproduction", budget: Duration::from_secs(60), run: sequences },
        Criterion { name: "series functional equations", budget: Duration::from_secs(60), run: series_equations },
        Criterion { name: "orthogonality", budget: Duration::from_secs(60), run: orthogonality },
    ];
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {:?}", c.budget)),
            Err(e) => (false, e),
        };
        failures += usize::from(!ok);
        println!(
            "{} [{}] {} ({:.2}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
