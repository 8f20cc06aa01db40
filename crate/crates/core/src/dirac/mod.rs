//! Square of the first Dirac eigenvalue on a spin inner symmetric space.
//!
//! The closed form is
//! `2 |d_G - d_K|^2 + 4 sum_{t in L} <t, d_K> + n/8`
//! where `L` is the set of positive roots of `G` pairing negatively with
//! `d_K`. Three orbit-backed routes recompute the same value by brute force.

mod record;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::rational::{int, rat, Rational};
use crate::rootsys::WeightVec;
use crate::symspace::SymmetricPair;
use crate::weyl::{inversion_set, OrbitTable, ReducedWord, DEFAULT_ORBIT_CAP};

pub use record::{DiracRecord, TermsRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    #[serde(rename = "closed-form")]
    ClosedForm,
    #[serde(rename = "weyl-min")]
    WeylMin,
    #[serde(rename = "restricted-W")]
    RestrictedW,
    #[serde(rename = "spin-weights")]
    SpinWeights,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::ClosedForm,
        Method::WeylMin,
        Method::RestrictedW,
        Method::SpinWeights,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed-form",
            Method::WeylMin => "weyl-min",
            Method::RestrictedW => "restricted-W",
            Method::SpinWeights => "spin-weights",
        }
    }

    pub fn uses_orbit(self) -> bool {
        self != Method::ClosedForm
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub cap: usize,
    pub exec: Execution,
    /// compute even when the space has no spin structure
    pub force: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cap: DEFAULT_ORBIT_CAP,
            exec: Execution::default(),
            force: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaElement {
    /// index into `g().positive_roots()`
    pub root_index: usize,
    pub root: WeightVec,
    /// `<root, d_K>`, strictly negative
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaSet {
    elements: Vec<LambdaElement>,
}

impl LambdaSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LambdaElement> + '_ {
        self.elements.iter()
    }

    pub fn sum(&self) -> Rational {
        self.elements.iter().map(|e| &e.value).sum()
    }

    /// Pairing values in ascending order.
    pub fn sorted_values(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.elements.iter().map(|e| e.value.clone()).collect();
        v.sort();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracResult {
    pub space: String,
    pub n: usize,
    pub lambda_sq: Rational,
    /// `2 |d_G - d_K|^2` for the closed form, `2 min |w.d_G - d_K|^2` for
    /// the orbit routes
    pub term_distance: Rational,
    /// `4 sum_L <t, d_K>`; only the closed form splits it out
    pub term_lambda: Option<Rational>,
    /// `n / 8`
    pub term_dim: Rational,
    pub lambda_set: LambdaSet,
    pub method: Method,
    /// set when computed for a space without a spin structure
    pub formal: bool,
    /// Weyl word of a minimizer, for the orbit routes
    pub witness: Option<ReducedWord>,
}

fn spin_guard(p: &SymmetricPair, opts: &Options) -> Result<()> {
    if p.spin() || opts.force {
        Ok(())
    } else {
        Err(Error::NoSpinStructure {
            space: p.name().to_string(),
        })
    }
}

pub fn lambda_set(p: &SymmetricPair) -> LambdaSet {
    let g = p.g();
    let elements = g
        .positive_roots()
        .iter()
        .enumerate()
        .filter_map(|(i, root)| {
            let value = g.inner(root, p.delta_k()).expect("same basis");
            value.is_negative().then(|| LambdaElement {
                root_index: i,
                root: root.clone(),
                value,
            })
        })
        .collect();
    LambdaSet { elements }
}

fn dim_term(p: &SymmetricPair) -> Rational {
    rat(p.n() as i64, 8)
}

pub fn eigenvalue_closed(p: &SymmetricPair, opts: &Options) -> Result<DiracResult> {
    spin_guard(p, opts)?;
    let lambda_set = lambda_set(p);
    let term_distance = int(2) * p.g().norm_sq(&p.delta_n())?;
    let term_lambda = int(4) * lambda_set.sum();
    let term_dim = dim_term(p);
    Ok(DiracResult {
        space: p.name().to_string(),
        n: p.n(),
        lambda_sq: &term_distance + &term_lambda + &term_dim,
        term_distance,
        term_lambda: Some(term_lambda),
        term_dim,
        lambda_set,
        method: Method::ClosedForm,
        formal: !p.spin(),
        witness: None,
    })
}

fn delta_orbit(p: &SymmetricPair, opts: &Options) -> Result<OrbitTable> {
    OrbitTable::enumerate_with(p.g(), p.delta_g(), opts.cap, opts.exec)
}

fn from_minimizer(
    p: &SymmetricPair,
    table: &OrbitTable,
    best: usize,
    method: Method,
) -> Result<DiracResult> {
    let point = table.point(best);
    let term_distance = int(2) * p.g().norm_sq(&(&point - p.delta_k()))?;
    let term_dim = dim_term(p);
    Ok(DiracResult {
        space: p.name().to_string(),
        n: p.n(),
        lambda_sq: &term_distance + &term_dim,
        term_distance,
        term_lambda: None,
        term_dim,
        lambda_set: lambda_set(p),
        method,
        formal: !p.spin(),
        witness: Some(table.word(best)),
    })
}

/// `2 min_{w in W_G} |w.d_G - d_K|^2 + n/8` over the full Weyl orbit.
pub fn eigenvalue_weyl_min(p: &SymmetricPair, opts: &Options) -> Result<DiracResult> {
    spin_guard(p, opts)?;
    let table = delta_orbit(p, opts)?;
    let score = table.distance_score(p.delta_k())?;
    let best = table.argmin(&score, opts.exec);
    from_minimizer(p, &table, best, Method::WeylMin)
}

/// Indices of orbit elements `w.d_G` with `w.Phi_G+ ⊇ Phi_K+`, tested as
/// `<w.d_G, a> > 0` for the simple roots `a` of `K`.
fn restricted_indices(p: &SymmetricPair, table: &OrbitTable, exec: Execution) -> Result<Vec<usize>> {
    let scores = p
        .k_simple_roots()
        .into_iter()
        .map(|a| table.pairing_score(a))
        .collect::<Result<Vec<_>>>()?;
    Ok(table.filter(exec, |i| scores.iter().all(|s| table.score(s, i) > 0)))
}

/// Same minimum restricted to `W = { w : w.Phi_G+ ⊇ Phi_K+ }`.
pub fn eigenvalue_restricted_w(p: &SymmetricPair, opts: &Options) -> Result<DiracResult> {
    spin_guard(p, opts)?;
    let table = delta_orbit(p, opts)?;
    let keep = restricted_indices(p, &table, opts.exec)?;
    let score = table.distance_score(p.delta_k())?;
    let best = keep
        .iter()
        .copied()
        .min_by_key(|&i| table.score(&score, i))
        .expect("identity is always in W");
    from_minimizer(p, &table, best, Method::RestrictedW)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinWeight {
    /// `w.d_G - d_K`
    pub weight: WeightVec,
    pub word: ReducedWord,
}

/// The weights `w.d_G - d_K` for `w` in `W`, each checked to satisfy
/// `d_G - w.d_G = sum of distinct noncompact positive roots`.
pub fn spin_highest_weights(p: &SymmetricPair, opts: &Options) -> Result<Vec<SpinWeight>> {
    let g = p.g();
    let table = delta_orbit(p, opts)?;
    let keep = restricted_indices(p, &table, opts.exec)?;
    keep.into_iter()
        .map(|i| {
            let point = table.point(i);
            let word = table.word(i);
            let inversions = inversion_set(g, &word)?;
            for root in &inversions {
                let idx = g.positive_root_index(root).expect("inversions are positive");
                if p.is_k_root(idx) {
                    return Err(Error::CharacterizationViolated(format!(
                        "{}: inversion root {root} of {:?} lies in K",
                        p.name(),
                        word.0
                    )));
                }
            }
            if WeightVec::sum(g.basis(), &inversions) != g.weyl_vector() - &point {
                return Err(Error::CharacterizationViolated(format!(
                    "{}: inversion set of {:?} does not sum to d_G - w.d_G",
                    p.name(),
                    word.0
                )));
            }
            Ok(SpinWeight {
                weight: &point - p.delta_k(),
                word,
            })
        })
        .collect()
}

/// `2 min |b|^2 + n/8` over the spin highest weights `b`.
pub fn eigenvalue_spin_weights(p: &SymmetricPair, opts: &Options) -> Result<DiracResult> {
    spin_guard(p, opts)?;
    let weights = spin_highest_weights(p, opts)?;
    let g = p.g();
    let mut best: Option<(Rational, &SpinWeight)> = None;
    for w in &weights {
        let v = g.norm_sq(&w.weight)?;
        if best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, w));
        }
    }
    let (min, witness) = best.expect("identity is always in W");
    let term_distance = int(2) * min;
    let term_dim = dim_term(p);
    Ok(DiracResult {
        space: p.name().to_string(),
        n: p.n(),
        lambda_sq: &term_distance + &term_dim,
        term_distance,
        term_lambda: None,
        term_dim,
        lambda_set: lambda_set(p),
        method: Method::SpinWeights,
        formal: !p.spin(),
        witness: Some(witness.word.clone()),
    })
}

pub fn eigenvalue(p: &SymmetricPair, method: Method, opts: &Options) -> Result<DiracResult> {
    match method {
        Method::ClosedForm => eigenvalue_closed(p, opts),
        Method::WeylMin => eigenvalue_weyl_min(p, opts),
        Method::RestrictedW => eigenvalue_restricted_w(p, opts),
        Method::SpinWeights => eigenvalue_spin_weights(p, opts),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    /// `max_{w in W_G} <w.d_G, d_K>`
    pub orbit_max: Rational,
    /// `<d_G, d_K> - sum_L <t, d_K>`
    pub closed: Rational,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.orbit_max == self.closed
    }
}

pub fn verify_lambda_lemma(p: &SymmetricPair, opts: &Options) -> Result<LemmaReport> {
    let g = p.g();
    let table = delta_orbit(p, opts)?;
    let score = table.pairing_score(p.delta_k())?;
    let best = table.argmax(&score, opts.exec);
    let orbit_max = g.inner(&table.point(best), p.delta_k())?;
    let closed = g.inner(p.delta_g(), p.delta_k())? - lambda_set(p).sum();
    Ok(LemmaReport { orbit_max, closed })
}

/// How a marked-node pair compares with a reference pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeComparison {
    /// 0-based
    pub node: usize,
    pub n: bool,
    pub lambda_sq: bool,
    pub lambda_values: bool,
    pub distance: bool,
}

impl NodeComparison {
    pub fn full_match(&self) -> bool {
        self.n && self.lambda_sq && self.lambda_values && self.distance
    }
}

/// Builds the pair for every node of `reference.g()` whose highest-root mark
/// is `mark`, and compares dimension, closed-form eigenvalue, `L`-values and
/// `|d_G - d_K|^2` against `reference`.
///
/// Several nodes may reproduce the same `(n, lambda^2)` with a different
/// `L`-set; all are reported.
pub fn compare_marked_nodes(reference: &SymmetricPair, mark: i64) -> Result<Vec<NodeComparison>> {
    let rs = crate::rootsys::build_root_system(reference.g().family())?;
    let forced = Options {
        force: true,
        ..Options::default()
    };
    let want = eigenvalue_closed(reference, &forced)?;
    let want_dist = reference.g().norm_sq(&reference.delta_n())?;
    crate::symspace::nodes_with_mark(&rs, mark)
        .into_iter()
        .map(|node| {
            let q = match mark {
                2 => crate::symspace::pair_from_marked_node(&rs, node)?,
                _ => crate::symspace::pair_from_hermitian_node(&rs, node)?,
            };
            let got = eigenvalue_closed(&q, &forced)?;
            Ok(NodeComparison {
                node,
                n: q.n() == reference.n(),
                lambda_sq: got.lambda_sq == want.lambda_sq,
                lambda_values: got.lambda_set.sorted_values() == want.lambda_set.sorted_values(),
                distance: q.g().norm_sq(&q.delta_n())? == want_dist,
            })
        })
        .collect()
}

/// Checks `lambda_sq = sum of terms` and `term_lambda <= 0`.
pub fn decomposition_consistent(r: &DiracResult) -> bool {
    let lam = r.term_lambda.clone().unwrap_or_else(Rational::zero);
    r.lambda_sq == &r.term_distance + &lam + &r.term_dim && !lam.is_positive() && r.lambda_sq.is_positive()
}
