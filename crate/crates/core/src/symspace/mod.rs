//! Inner symmetric pairs `(G, K)` sharing a maximal torus.
//!
//! A pair is a Killing-normalized root system of `G` together with the
//! subset of its positive roots that are roots of `K`. Three classical
//! families come with explicit coordinate models; any other pair, and the
//! exceptional ones, come from marking a node of the Dynkin diagram.

mod catalog;
mod models;

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{rat, Rational};
use crate::rootsys::{killing_normalize, Family, RootSystem, WeightVec};

pub use catalog::{catalog, find_entry, CatalogEntry, Expectation, Recipe, SpinRule};
pub use models::{
    complex_grassmannian2, complex_grassmannian2_formal, quaternionic_projective,
    real_grassmannian4, real_grassmannian4_formal,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Explicit coordinate model with its own Killing-induced form.
    Coordinate,
    /// `K` from the roots whose coefficient at `node` (0-based) is not 1.
    MarkedNode { node: usize },
}

#[derive(Debug, Clone)]
pub struct SymmetricPair {
    name: String,
    g: RootSystem,
    k_positive: Vec<usize>,
    noncompact_positive: Vec<usize>,
    delta_k: WeightVec,
    n: usize,
    spin: bool,
    spin_unique: bool,
    construction: Construction,
    parameter: Option<usize>,
}

impl SymmetricPair {
    /// Builds a pair from `G` and the indices of the `K`-positive roots
    /// among `g.positive_roots()`.
    ///
    /// `g` must already carry its Killing-induced form.
    pub fn new(
        name: impl Into<String>,
        g: RootSystem,
        k_positive: Vec<usize>,
        construction: Construction,
    ) -> Result<Self> {
        let name = name.into();
        if g.killing_scale().is_none() {
            return Err(Error::InvalidPair(format!(
                "{name}: the form of G is not Killing-normalized"
            )));
        }
        let total = g.positive_roots().len();
        let mut k_positive = k_positive;
        k_positive.sort_unstable();
        k_positive.dedup();
        if k_positive.last().is_some_and(|&i| i >= total) {
            return Err(Error::InvalidPair(format!("{name}: root index out of range")));
        }
        let noncompact_positive: Vec<usize> =
            (0..total).filter(|i| k_positive.binary_search(i).is_err()).collect();
        if noncompact_positive.is_empty() {
            return Err(Error::InvalidPair(format!("{name}: K = G, no noncompact roots")));
        }
        let basis = g.basis();
        let delta_k = WeightVec::sum(basis, k_positive.iter().map(|&i| &g.positive_roots()[i]))
            .scale(&rat(1, 2));
        let n = 2 * noncompact_positive.len();
        Ok(SymmetricPair {
            name,
            g,
            k_positive,
            noncompact_positive,
            delta_k,
            n,
            spin: false,
            spin_unique: false,
            construction,
            parameter: None,
        })
    }

    pub(crate) fn with_spin(mut self, spin: bool, unique: bool) -> Self {
        self.spin = spin;
        self.spin_unique = spin && unique;
        self
    }

    pub(crate) fn with_parameter(mut self, m: usize) -> Self {
        self.parameter = Some(m);
        self
    }

    pub(crate) fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn g(&self) -> &RootSystem {
        &self.g
    }

    /// Indices into `g().positive_roots()`.
    pub fn k_positive(&self) -> &[usize] {
        &self.k_positive
    }

    pub fn noncompact_positive(&self) -> &[usize] {
        &self.noncompact_positive
    }

    pub fn is_k_root(&self, index: usize) -> bool {
        self.k_positive.binary_search(&index).is_ok()
    }

    pub fn k_positive_roots(&self) -> impl Iterator<Item = &WeightVec> + '_ {
        self.k_positive.iter().map(|&i| &self.g.positive_roots()[i])
    }

    pub fn noncompact_roots(&self) -> impl Iterator<Item = &WeightVec> + '_ {
        self.noncompact_positive.iter().map(|&i| &self.g.positive_roots()[i])
    }

    /// Indecomposable elements of the `K`-positive roots.
    pub fn k_simple_roots(&self) -> Vec<&WeightVec> {
        let coeffs: Vec<&[i64]> = self.k_positive.iter().map(|&i| self.g.coefficients(i)).collect();
        let decomposable = |c: &[i64]| {
            coeffs.iter().any(|a| {
                let diff: Vec<i64> = c.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                diff.iter().any(|&d| d != 0) && coeffs.contains(&diff.as_slice())
            })
        };
        self.k_positive
            .iter()
            .zip(&coeffs)
            .filter(|(_, c)| !decomposable(c))
            .map(|(&i, _)| &self.g.positive_roots()[i])
            .collect()
    }

    pub fn delta_g(&self) -> &WeightVec {
        self.g.weyl_vector()
    }

    pub fn delta_k(&self) -> &WeightVec {
        &self.delta_k
    }

    /// `d_G - d_K`
    pub fn delta_n(&self) -> WeightVec {
        self.g.weyl_vector() - &self.delta_k
    }

    /// Real dimension of `G/K`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spin(&self) -> bool {
        self.spin
    }

    pub fn spin_unique(&self) -> bool {
        self.spin_unique
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// The family parameter `m` for the classical models.
    pub fn parameter(&self) -> Option<usize> {
        self.parameter
    }
}

impl fmt::Display for SymmetricPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Scalar curvature of the Killing metric on `G/K`, which is `n / 2`.
pub fn scalar_curvature(p: &SymmetricPair) -> Rational {
    rat(p.n() as i64, 2)
}

/// Pair with `K`-positive roots `{ sum n_i a_i : n_j != 1 }` where the
/// highest root has coefficient 2 at node `j` (0-based).
pub fn pair_from_marked_node(rs: &RootSystem, node: usize) -> Result<SymmetricPair> {
    pair_from_node(rs, node, 2)
}

/// Hermitian variant: the highest root has coefficient 1 at `node`, and `K`
/// is the Levi factor `{ n_j = 0 }`.
pub fn pair_from_hermitian_node(rs: &RootSystem, node: usize) -> Result<SymmetricPair> {
    pair_from_node(rs, node, 1)
}

fn pair_from_node(rs: &RootSystem, node: usize, expected: i64) -> Result<SymmetricPair> {
    let marks = rs.highest_root_marks();
    let coefficient = *marks.get(node).ok_or(Error::IndexOutOfRange {
        index: node,
        rank: rs.rank(),
    })?;
    if coefficient != expected {
        return Err(Error::NodeNotOrderTwo {
            node,
            coefficient,
            expected,
        });
    }
    let g = if rs.killing_scale().is_some() {
        rs.clone()
    } else {
        killing_normalize(rs)
    };
    let k: Vec<usize> = (0..g.positive_roots().len())
        .filter(|&i| g.coefficients(i)[node] != 1)
        .collect();
    let family = g.family();
    let generic = format!("{family}[node {}]", node + 1);
    let pair = SymmetricPair::new(generic, g, k, Construction::MarkedNode { node })?;
    Ok(match identify(family, node + 1) {
        Some(id) => {
            let pair = pair.with_name(id.name).with_spin(id.spin, true);
            match id.m {
                Some(m) => pair.with_parameter(m),
                None => pair,
            }
        }
        None => pair,
    })
}

struct Identified {
    name: String,
    m: Option<usize>,
    spin: bool,
}

/// Recognizes the quaternion-Kaehler pairs among marked-node constructions
/// (`node` is 1-based here).
fn identify(family: Family, node: usize) -> Option<Identified> {
    let fixed = |name: &str, spin| Identified {
        name: name.to_string(),
        m: None,
        spin,
    };
    match (family, node) {
        (Family::G2, 1) => Some(fixed("G2/SO4", true)),
        (Family::F4, 1) => Some(fixed("F4/(Sp3 SU2)", false)),
        (Family::E6, 6) => Some(fixed("E6/(SU6 SU2)", true)),
        (Family::E7, 1) => Some(fixed("E7/(Spin12 SU2)", true)),
        (Family::E8, 1) => Some(fixed("E8/(E7 SU2)", true)),
        (Family::C(r), j) if j == 1 || j == r - 1 => {
            let m = r - 1;
            Some(Identified {
                name: models::hp_name(m),
                m: Some(m),
                spin: true,
            })
        }
        (Family::A(r), j) if r >= 2 && (j == 2 || j == r - 1) => {
            let m = r - 1;
            Some(Identified {
                name: models::gr2_name(m),
                m: Some(m),
                spin: m % 2 == 0,
            })
        }
        (Family::D(r), j) if r >= 4 && (j == 2 || j == r - 2) => {
            let m = 2 * r - 4;
            Some(Identified {
                name: models::gr4_name(m),
                m: Some(m),
                spin: true,
            })
        }
        (Family::B(r), 2) if r >= 3 => {
            let m = 2 * r - 3;
            Some(Identified {
                name: models::gr4_name(m),
                m: Some(m),
                spin: false,
            })
        }
        _ => None,
    }
}

/// 0-based nodes where the highest root has coefficient `mark`.
pub fn nodes_with_mark(rs: &RootSystem, mark: i64) -> Vec<usize> {
    rs.highest_root_marks()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c == mark)
        .map(|(i, _)| i)
        .collect()
}
