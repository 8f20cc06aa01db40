//! Verification suite run by `dirac verify`.

use std::collections::HashSet;
use std::io::Write;

use dirac_core::dirac::{
    compare_marked_nodes, eigenvalue, eigenvalue_closed, lambda_set, verify_lambda_lemma, Method,
    Options,
};
use dirac_core::rational::{format_rational, int};
use dirac_core::rootsys::{build_root_system, Family, WeightVec};
use dirac_core::symspace::{
    catalog, complex_grassmannian2, find_entry, quaternionic_projective, real_grassmannian4,
    SymmetricPair,
};
use dirac_core::weyl::{inversion_set, OrbitTable};
use dirac_core::{Rational, Result};
use serde::Serialize;

use crate::{CliError, Format, VerifyArgs};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub left: String,
    pub right: String,
    pub pass: bool,
}

impl Check {
    fn equal(suite: &'static str, name: impl Into<String>, left: &Rational, right: &Rational) -> Self {
        Check {
            suite,
            name: name.into(),
            left: format_rational(left),
            right: format_rational(right),
            pass: left == right,
        }
    }
}

/// Spaces whose Weyl orbit fits the default cap.
pub fn oracle_pairs() -> Result<Vec<SymmetricPair>> {
    let mut out = Vec::new();
    for m in 1..=3 {
        out.push(quaternionic_projective(m)?);
    }
    for m in [2, 4] {
        out.push(complex_grassmannian2(m)?);
    }
    for m in [4, 6] {
        out.push(real_grassmannian4(m)?);
    }
    for key in ["G2", "E6"] {
        out.push(find_entry(key).expect("catalog key").build(None, false)?);
    }
    Ok(out)
}

fn table_checks(out: &mut Vec<Check>) -> Result<()> {
    for entry in catalog() {
        let ms: Vec<Option<usize>> = match entry.m_range() {
            Some((lo, step)) => (lo..=12).step_by(step).map(Some).collect(),
            None => vec![None],
        };
        for m in ms {
            let Some(want) = entry.expected_lambda_sq(m) else {
                continue;
            };
            let p = entry.build(m, false)?;
            let r = eigenvalue_closed(&p, &Options::default())?;
            out.push(Check::equal("table", p.name(), &r.lambda_sq, &want));
            if let Some(size) = entry.expected_lambda_set_size(m) {
                out.push(Check::equal(
                    "lambda-set",
                    format!("{} |Lambda|", p.name()),
                    &int(r.lambda_set.len() as i64),
                    &int(size as i64),
                ));
            }
        }
    }
    Ok(())
}

fn route_checks(pairs: &[SymmetricPair], cap: usize, out: &mut Vec<Check>) -> Result<()> {
    let opts = Options {
        cap,
        ..Options::default()
    };
    for p in pairs {
        let closed = eigenvalue_closed(p, &opts)?.lambda_sq;
        for m in [Method::WeylMin, Method::RestrictedW, Method::SpinWeights] {
            let got = eigenvalue(p, m, &opts)?.lambda_sq;
            out.push(Check::equal("routes", format!("{} {m}", p.name()), &got, &closed));
        }
        let lemma = verify_lambda_lemma(p, &opts)?;
        out.push(Check::equal("lemma", p.name(), &lemma.orbit_max, &lemma.closed));
    }
    Ok(())
}

fn strange_checks(out: &mut Vec<Check>) -> Result<()> {
    let mut pairs = Vec::new();
    for entry in catalog() {
        let ms: Vec<Option<usize>> = match entry.m_range() {
            Some((lo, step)) => (0..3).map(|k| Some(lo + k * step)).collect(),
            None => vec![None],
        };
        for m in ms {
            pairs.push(entry.build(m, true)?);
        }
    }
    for p in &pairs {
        let g = p.g();
        let left = g.norm_sq(g.weyl_vector())?;
        let right = int(g.dim_g() as i64) / int(24);
        out.push(Check::equal("strange", format!("{} ({})", p.name(), g.family()), &left, &right));
    }
    Ok(())
}

fn inversion_checks(out: &mut Vec<Check>) -> Result<()> {
    for f in [Family::G2, Family::C(2), Family::C(3), Family::A(3)] {
        let rs = build_root_system(f)?;
        let table = OrbitTable::enumerate(&rs, rs.weyl_vector(), 10_000)?;
        let mut good = 0i64;
        for i in 0..table.len() {
            let inv = inversion_set(&rs, &table.word(i))?;
            let distinct: HashSet<Option<usize>> =
                inv.iter().map(|r| rs.positive_root_index(r)).collect();
            let sum = WeightVec::sum(rs.basis(), &inv);
            if distinct.len() == inv.len()
                && !distinct.contains(&None)
                && sum == rs.weyl_vector() - &table.point(i)
            {
                good += 1;
            }
        }
        out.push(Check::equal(
            "inversion",
            format!("{f} orbit elements with 0/1 decomposition"),
            &int(good),
            &int(table.len() as i64),
        ));
    }
    Ok(())
}

fn cross_checks(out: &mut Vec<Check>) -> Result<()> {
    let mut cases: Vec<(SymmetricPair, i64)> = Vec::new();
    for m in 1..=3 {
        cases.push((quaternionic_projective(m)?, 2));
    }
    for m in [2, 4] {
        cases.push((complex_grassmannian2(m)?, 1));
    }
    cases.push((real_grassmannian4(4)?, 2));
    for (p, mark) in cases {
        let nodes = compare_marked_nodes(&p, mark)?;
        let full: Vec<String> = nodes
            .iter()
            .filter(|c| c.full_match())
            .map(|c| (c.node + 1).to_string())
            .collect();
        let partial: Vec<String> = nodes
            .iter()
            .filter(|c| c.n && c.lambda_sq && !c.full_match())
            .map(|c| (c.node + 1).to_string())
            .collect();
        out.push(Check {
            suite: "cross",
            name: format!("{} vs marked nodes of {}", p.name(), p.g().family()),
            left: format!("full match at node(s) [{}]", full.join(",")),
            right: format!("same (n, lambda^2) only at [{}]", partial.join(",")),
            pass: !full.is_empty(),
        });
    }
    Ok(())
}

fn lambda_invariant_checks(out: &mut Vec<Check>) -> Result<()> {
    for entry in catalog() {
        let m = entry.m_range().map(|(lo, _)| lo);
        let p = entry.build(m, true)?;
        let outside = lambda_set(&p).iter().filter(|e| p.is_k_root(e.root_index)).count();
        out.push(Check::equal(
            "lambda-set",
            format!("{} Lambda roots inside K", p.name()),
            &int(outside as i64),
            &int(0),
        ));
    }
    Ok(())
}

/// Runs every suite; `include` adds large-orbit spaces to the route checks.
pub fn checks(include: &[String], cap: usize) -> std::result::Result<Vec<Check>, CliError> {
    let mut extra = Vec::new();
    for key in include {
        let entry = find_entry(key).ok_or_else(|| CliError::UnknownSpace(key.clone()))?;
        if entry.is_parameterized() {
            return Err(CliError::Usage(format!("--include takes fixed spaces, not {}", entry.key)));
        }
        extra.push(entry.build(None, false)?);
    }
    let mut out = Vec::new();
    table_checks(&mut out)?;
    lambda_invariant_checks(&mut out)?;
    let mut pairs = oracle_pairs()?;
    pairs.extend(extra);
    route_checks(&pairs, cap, &mut out)?;
    strange_checks(&mut out)?;
    inversion_checks(&mut out)?;
    cross_checks(&mut out)?;
    Ok(out)
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> std::result::Result<(), CliError> {
    let checks = checks(&args.include, args.cap.cap)?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    match args.output.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &checks)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for c in &checks {
                w.serialize(c)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for c in &checks {
                let tag = if c.pass { "PASS" } else { "FAIL" };
                let rel = if c.pass { "=" } else { "!=" };
                if c.suite == "cross" {
                    writeln!(out, "{tag}  {:<10} {}: {}; {}", c.suite, c.name, c.left, c.right)?;
                } else {
                    writeln!(out, "{tag}  {:<10} {}: {} {rel} {}", c.suite, c.name, c.left, c.right)?;
                }
            }
            writeln!(out, "{} checks, {} failed", checks.len(), failed)?;
        }
    }
    if failed > 0 {
        return Err(CliError::VerifyFailed { failed });
    }
    Ok(())
}
