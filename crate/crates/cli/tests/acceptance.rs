//! Acceptance suite: one line per criterion, exact comparisons throughout.
//!
//! `cargo test -p dirac-cli --test acceptance` runs criteria 1-8.
//! Append `-- --include-e7` for the extended oracle run on E7
//! (orbit of 2 903 040 elements; a few minutes in release mode).

use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use dirac_cli::verify::oracle_pairs;
use dirac_core::dirac::{
    compare_marked_nodes, eigenvalue, eigenvalue_closed, lambda_set, verify_lambda_lemma,
    DiracRecord, Method, Options,
};
use dirac_core::rational::{format_rational, int, parse_rational, rat};
use dirac_core::rootsys::{build_root_system, killing_normalize, Family, WeightVec};
use dirac_core::symspace::{
    catalog, complex_grassmannian2, find_entry, pair_from_marked_node, quaternionic_projective,
    real_grassmannian4, SymmetricPair,
};
use dirac_core::weyl::{inversion_set, OrbitTable};
use dirac_core::Rational;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn FnOnce() -> Outcome>);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn eq(label: &str, got: &Rational, want: &Rational) -> Result<(), String> {
    ensure(got == want, || {
        format!("{label}: got {}, want {}", format_rational(got), format_rational(want))
    })
}

fn fixed(key: &str) -> SymmetricPair {
    find_entry(key).unwrap().build(None, false).unwrap()
}

fn closed(p: &SymmetricPair) -> Rational {
    eigenvalue_closed(p, &Options::default()).unwrap().lambda_sq
}

fn i(m: usize) -> i64 {
    m as i64
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for m in 1..=12 {
        let p = quaternionic_projective(m).unwrap();
        eq(p.name(), &closed(&p), &rat((i(m) + 3) * i(m), 2 * (i(m) + 2)))?;
        count += 1;
    }
    for m in (2..=12).step_by(2) {
        let p = complex_grassmannian2(m).unwrap();
        eq(p.name(), &closed(&p), &rat((i(m) + 4) * i(m), 2 * (i(m) + 2)))?;
        count += 1;
    }
    for m in (4..=12).step_by(2) {
        let p = real_grassmannian4(m).unwrap();
        eq(p.name(), &closed(&p), &rat(i(m) * i(m) + 6 * i(m) - 4, 2 * (i(m) + 2)))?;
        count += 1;
    }
    for (key, want) in [("G2", rat(3, 2)), ("E6", rat(41, 6)), ("E7", rat(95, 9)), ("E8", rat(269, 15))] {
        eq(key, &closed(&fixed(key)), &want)?;
        count += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}, limit 1 s"))?;
    Ok(format!("{count} values exact in {} ms", elapsed.as_millis()))
}

struct Fixture {
    pair: SymmetricPair,
    distance: Rational,
    size: usize,
    sum: Rational,
}

fn intermediate_fixtures() -> Outcome {
    let mut fx = Vec::new();
    for m in 1..=6 {
        fx.push(Fixture {
            pair: quaternionic_projective(m).unwrap(),
            distance: rat(i(m), 4 * (i(m) + 2)),
            size: 0,
            sum: int(0),
        });
    }
    for m in [2, 4, 6, 8] {
        fx.push(Fixture {
            pair: complex_grassmannian2(m).unwrap(),
            distance: rat(i(m), 4),
            size: m - 1,
            sum: rat(-i(m) * i(m), 8 * (i(m) + 2)),
        });
    }
    for m in [4, 6, 8] {
        fx.push(Fixture {
            pair: real_grassmannian4(m).unwrap(),
            distance: rat(i(m), i(m) + 2),
            size: 1,
            sum: rat(-1, 2 * (i(m) + 2)),
        });
    }
    for (key, distance, size, sum) in [
        ("G2", rat(1, 4), 0, int(0)),
        ("E6", rat(25, 12), 7, rat(-7, 12)),
        ("E7", rat(32, 9), 13, rat(-41, 36)),
        ("E8", rat(98, 15), 25, rat(-137, 60)),
    ] {
        fx.push(Fixture {
            pair: fixed(key),
            distance,
            size,
            sum,
        });
    }
    for f in &fx {
        let p = &f.pair;
        eq(&format!("{} |d_G-d_K|^2", p.name()), &p.g().norm_sq(&p.delta_n()).unwrap(), &f.distance)?;
        let l = lambda_set(p);
        ensure(l.len() == f.size, || format!("{} |Lambda| = {}, want {}", p.name(), l.len(), f.size))?;
        eq(&format!("{} Lambda sum", p.name()), &l.sum(), &f.sum)?;
    }
    Ok(format!("{} spaces: distance, |Lambda|, Lambda sum exact", fx.len()))
}

fn oracle_equivalence(pairs: &[SymmetricPair], cap: usize, limit: Duration) -> Outcome {
    let start = Instant::now();
    let opts = Options {
        cap,
        ..Options::default()
    };
    for p in pairs {
        let want = eigenvalue_closed(p, &opts).map_err(|e| e.to_string())?.lambda_sq;
        for m in [Method::WeylMin, Method::RestrictedW, Method::SpinWeights] {
            let got = eigenvalue(p, m, &opts).map_err(|e| format!("{} {m}: {e}", p.name()))?;
            eq(&format!("{} {m}", p.name()), &got.lambda_sq, &want)?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= limit, || format!("took {elapsed:?}, limit {limit:?}"))?;
    let names: Vec<&str> = pairs.iter().map(|p| p.name()).collect();
    Ok(format!("4 routes agree on {} in {} ms", names.join(", "), elapsed.as_millis()))
}

fn inversion_lemma() -> Outcome {
    let mut total = 0;
    for f in [Family::G2, Family::C(2), Family::C(3), Family::A(3)] {
        let rs = build_root_system(f).unwrap();
        let table = OrbitTable::enumerate(&rs, rs.weyl_vector(), 10_000).unwrap();
        for k in 0..table.len() {
            let word = table.word(k);
            let inv = inversion_set(&rs, &word).map_err(|e| format!("{f}: {e}"))?;
            let idx: HashSet<usize> = inv
                .iter()
                .map(|r| rs.positive_root_index(r).ok_or_else(|| format!("{f}: {r} not positive")))
                .collect::<Result<_, _>>()?;
            ensure(idx.len() == inv.len(), || format!("{f} {:?}: repeated root", word.0))?;
            let sum = WeightVec::sum(rs.basis(), &inv);
            ensure(sum == rs.weyl_vector() - &table.point(k), || {
                format!("{f} {:?}: sum is not d - w.d", word.0)
            })?;
        }
        total += table.len();
    }
    Ok(format!("{total} orbit elements of G2, C2, C3, A3"))
}

fn strange_formula() -> Outcome {
    let mut systems = Vec::new();
    for e in catalog() {
        let ms: Vec<Option<usize>> = match e.m_range() {
            Some((lo, step)) => (0..6).map(|k| Some(lo + k * step)).collect(),
            None => vec![None],
        };
        for m in ms {
            systems.push(e.build(m, true).unwrap().g().clone());
        }
    }
    let mut families: Vec<Family> = Vec::new();
    for r in 1..=8 {
        families.push(Family::A(r));
    }
    for r in 2..=8 {
        families.extend([Family::B(r), Family::C(r)]);
    }
    for r in 3..=8 {
        families.push(Family::D(r));
    }
    families.extend([Family::G2, Family::F4, Family::E6, Family::E7, Family::E8]);
    for f in families {
        systems.push(killing_normalize(&build_root_system(f).unwrap()));
    }
    for rs in &systems {
        let d = rs.weyl_vector();
        eq(
            &format!("{} <d,d>", rs.family()),
            &rs.norm_sq(d).unwrap(),
            &(int(rs.dim_g() as i64) / int(24)),
        )?;
    }
    for (f, c) in [(Family::G2, rat(1, 8)), (Family::E6, rat(1, 24)), (Family::E7, rat(1, 36)), (Family::E8, rat(1, 60))] {
        let rs = killing_normalize(&build_root_system(f).unwrap());
        eq(&format!("{f} scale"), rs.killing_scale().unwrap(), &c)?;
    }
    // the coordinate models must be normalized as written
    for m in 1..=4 {
        ensure(quaternionic_projective(m).unwrap().g().killing_scale() == Some(&int(1)), || {
            format!("HP^{m} was rescaled")
        })?;
    }
    Ok(format!("{} systems; scales 1/8, 1/24, 1/36, 1/60", systems.len()))
}

fn lambda_lemma(pairs: &[SymmetricPair]) -> Outcome {
    for p in pairs {
        let rep = verify_lambda_lemma(p, &Options::default()).map_err(|e| e.to_string())?;
        eq(&format!("{} max <w.d_G, d_K>", p.name()), &rep.orbit_max, &rep.closed)?;
    }
    Ok(format!("identity exact on {} spaces", pairs.len()))
}

fn cross_construction() -> Outcome {
    let cases: Vec<(SymmetricPair, i64)> = vec![
        (quaternionic_projective(1).unwrap(), 2),
        (quaternionic_projective(2).unwrap(), 2),
        (quaternionic_projective(3).unwrap(), 2),
        (complex_grassmannian2(2).unwrap(), 1),
        (complex_grassmannian2(4).unwrap(), 1),
        (real_grassmannian4(4).unwrap(), 2),
    ];
    let mut notes = Vec::new();
    for (p, mark) in cases {
        let nodes = compare_marked_nodes(&p, mark).map_err(|e| e.to_string())?;
        let full: Vec<String> =
            nodes.iter().filter(|c| c.full_match()).map(|c| (c.node + 1).to_string()).collect();
        ensure(!full.is_empty(), || format!("{}: no marked node matches: {nodes:?}", p.name()))?;
        notes.push(format!("{}~{}[{}]", p.name(), p.g().family(), full.join(",")));
        // the matching marked-node pair, rebuilt directly, agrees on n and lambda^2
        let node = nodes.iter().find(|c| c.full_match()).unwrap().node;
        let rs = build_root_system(p.g().family()).unwrap();
        if mark == 2 {
            let q = pair_from_marked_node(&rs, node).unwrap();
            ensure(q.n() == p.n(), || format!("{}: n differs", p.name()))?;
            eq(p.name(), &closed(&q), &closed(&p))?;
        }
    }
    Ok(notes.join(" "))
}

fn dirac_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dirac"))
}

fn cli_contract() -> Outcome {
    let f4 = dirac_bin().args(["compute", "--space", "F4"]).output().map_err(|e| e.to_string())?;
    ensure(f4.status.code() == Some(3), || format!("F4 exit {:?}", f4.status.code()))?;
    let stderr = String::from_utf8_lossy(&f4.stderr);
    ensure(stderr.contains("spin structure"), || format!("F4 message: {stderr}"))?;

    let verify = dirac_bin().arg("verify").output().map_err(|e| e.to_string())?;
    ensure(verify.status.success(), || {
        format!("verify exit {:?}: {}", verify.status.code(), String::from_utf8_lossy(&verify.stdout))
    })?;

    let mut checked = 0;
    for key in ["G2", "E6", "E7", "E8", "HP --m 1", "Gr2 --m 4", "Gr4 --m 6"] {
        let mut args = vec!["compute", "--format", "json", "--space"];
        args.extend(key.split(' '));
        let run = || dirac_bin().args(&args).output().map_err(|e| e.to_string());
        let first = run()?;
        ensure(first.status.success(), || format!("{key}: exit {:?}", first.status.code()))?;
        let again = run()?;
        ensure(first.stdout == again.stdout, || format!("{key}: output not deterministic"))?;
        let text = String::from_utf8(first.stdout).map_err(|e| e.to_string())?;
        let rec: DiracRecord = serde_json::from_str(&text).map_err(|e| format!("{key}: {e}"))?;
        let reprinted = serde_json::to_string_pretty(&rec).map_err(|e| e.to_string())? + "\n";
        ensure(reprinted == text, || format!("{key}: JSON does not round-trip"))?;
        let parsed = parse_rational(&rec.lambda_sq).map_err(|e| e.to_string())?;
        let entry = find_entry(key.split(' ').next().unwrap()).unwrap();
        let m = key.split(' ').nth(2).map(|s| s.parse().unwrap());
        let want = closed(&entry.build(m, false).unwrap());
        eq(&format!("{key} JSON lambda_sq"), &parsed, &want)?;
        for t in [&rec.terms.distance, &rec.terms.dim] {
            parse_rational(t).map_err(|e| format!("{key}: {e}"))?;
        }
        checked += 1;
    }
    Ok(format!("F4 exit 3, verify exit 0, {checked} JSON outputs round-trip exactly"))
}

fn main() {
    let extended = std::env::args().any(|a| a == "--include-e7");
    let pairs = oracle_pairs().expect("oracle pairs build");

    let mut criteria: Vec<Criterion> = vec![
        ("1 table reproduction (closed form)", Box::new(table_reproduction)),
        ("2 intermediate fixtures", Box::new(intermediate_fixtures)),
        ("3 oracle equivalence", {
            let pairs = pairs.clone();
            Box::new(move || oracle_equivalence(&pairs, 100_000, Duration::from_secs(30)))
        }),
        ("4 inversion-set lemma", Box::new(inversion_lemma)),
        ("5 strange formula", Box::new(strange_formula)),
        ("6 Lambda lemma", {
            let pairs = pairs.clone();
            Box::new(move || lambda_lemma(&pairs))
        }),
        ("7 cross-construction consistency", Box::new(cross_construction)),
        ("8 CLI contract", Box::new(cli_contract)),
    ];
    if extended {
        criteria.push((
            "3+ oracle equivalence, E7",
            Box::new(|| oracle_equivalence(&[fixed("E7")], 3_000_000, Duration::from_secs(600))),
        ));
    }

    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if !extended {
        println!("SKIP  criterion 3+ oracle equivalence, E7 (pass --include-e7)");
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
