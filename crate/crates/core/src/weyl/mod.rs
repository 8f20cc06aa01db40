//! Weyl group machinery: simple reflections, orbits with witness words,
//! inversion sets, and orbit extremization.

mod table;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::par::Execution;
use crate::rational::{int, Rational};
use crate::rootsys::{RootSystem, WeightVec};

pub use table::{IntScore, OrbitTable};

/// Orbits larger than this need an explicit cap (E6 fits, E7 does not).
pub const DEFAULT_ORBIT_CAP: usize = 2_000_000;

/// Simple-reflection indices `[i1, .., ik]` standing for `s_i1 ... s_ik`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `s_i1 ... s_ik . v`
    pub fn apply(&self, rs: &RootSystem, v: &WeightVec) -> Result<WeightVec> {
        self.0
            .iter()
            .rev()
            .try_fold(v.clone(), |acc, &i| reflect(rs, i, &acc))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitElement {
    pub point: WeightVec,
    pub word: ReducedWord,
}

/// `v - (2 <v, a_i> / <a_i, a_i>) a_i`
pub fn reflect(rs: &RootSystem, i: usize, v: &WeightVec) -> Result<WeightVec> {
    let alpha = rs.simple_roots().get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        rank: rs.rank(),
    })?;
    let num = rs.inner(v, alpha)?;
    let den = rs.inner(alpha, alpha)?;
    Ok(v.add_scaled(&(-(int(2) * num / den)), alpha))
}

/// Full orbit of `seed` with one BFS-shortest witness word per element.
pub fn orbit(rs: &RootSystem, seed: &WeightVec, cap: usize) -> Result<Vec<OrbitElement>> {
    let table = OrbitTable::enumerate(rs, seed, cap)?;
    Ok((0..table.len()).map(|i| table.element(i)).collect())
}

/// The roots `s_i1 ... s_i(j-1) (a_ij)` for `j = 1..k`.
///
/// For a reduced word these are distinct positive roots summing to
/// `d - w.d` (with `d` the Weyl vector); otherwise some entry is negative
/// and [`Error::NonReducedWord`] is returned.
pub fn inversion_set(rs: &RootSystem, word: &ReducedWord) -> Result<Vec<WeightVec>> {
    let mut out = Vec::with_capacity(word.len());
    let mut seen = HashSet::new();
    for j in 0..word.len() {
        let letter = word.0[j];
        let alpha = rs.simple_roots().get(letter).ok_or(Error::IndexOutOfRange {
            index: letter,
            rank: rs.rank(),
        })?;
        let prefix = ReducedWord(word.0[..j].to_vec());
        let root = prefix.apply(rs, alpha)?;
        let idx = rs
            .positive_root_index(&root)
            .ok_or_else(|| Error::NonReducedWord { word: word.0.clone() })?;
        if !seen.insert(idx) {
            return Err(Error::NonReducedWord { word: word.0.clone() });
        }
        out.push(root);
    }
    Ok(out)
}

/// `min_w |w.seed - target|^2` over the orbit, with one minimizer.
pub fn min_dist_over_orbit(
    rs: &RootSystem,
    seed: &WeightVec,
    target: &WeightVec,
    cap: usize,
) -> Result<(Rational, OrbitElement)> {
    let table = OrbitTable::enumerate(rs, seed, cap)?;
    min_dist_in_table(rs, &table, target, Execution::default())
}

pub fn min_dist_in_table(
    rs: &RootSystem,
    table: &OrbitTable,
    target: &WeightVec,
    exec: Execution,
) -> Result<(Rational, OrbitElement)> {
    let score = table.distance_score(target)?;
    let best = table.argmin(&score, exec);
    let element = table.element(best);
    let value = rs.norm_sq(&(&element.point - target))?;
    Ok((value, element))
}

/// `max_w <w.seed, target>` over the orbit, with one maximizer.
pub fn max_inner_over_orbit(
    rs: &RootSystem,
    seed: &WeightVec,
    target: &WeightVec,
    cap: usize,
) -> Result<(Rational, OrbitElement)> {
    let table = OrbitTable::enumerate(rs, seed, cap)?;
    max_inner_in_table(rs, &table, target, Execution::default())
}

pub fn max_inner_in_table(
    rs: &RootSystem,
    table: &OrbitTable,
    target: &WeightVec,
    exec: Execution,
) -> Result<(Rational, OrbitElement)> {
    let score = table.pairing_score(target)?;
    let best = table.argmax(&score, exec);
    let element = table.element(best);
    let value = rs.inner(&element.point, target)?;
    Ok((value, element))
}
