//! Root systems of compact simple groups in exact rational coordinates.
//!
//! A [`RootSystem`] is built either in the simple-root basis from its Dynkin
//! type ([`build_root_system`]), with the form normalized so that long roots
//! have squared length 2, or from an explicit coordinate model whose form is
//! already the one induced by the negative Killing form
//! ([`RootSystem::from_coordinates`]). [`killing_normalize`] rescales the
//! former using `<d, d> = dim G / 24` for the Weyl vector `d`.

mod dynkin;
mod weight;

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::linalg::{inverse, solve_columns, Matrix};
use crate::rational::{int, rat, Rational};

pub use weight::{inner, BasisKind, BasisTag, Chart, InnerForm, WeightVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn rank(self) -> usize {
        match self {
            Family::A(n) | Family::B(n) | Family::C(n) | Family::D(n) => n,
            Family::G2 => 2,
            Family::F4 => 4,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
        }
    }

    /// Checks the supported rank ranges (A: >= 1, B/C: >= 2, D: >= 3).
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            Family::A(n) => n >= 1,
            Family::B(n) | Family::C(n) => n >= 2,
            Family::D(n) => n >= 3,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnsupportedFamily {
                family: self.letter().to_string(),
                rank: self.rank(),
            })
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Family::A(_) => "A",
            Family::B(_) => "B",
            Family::C(_) => "C",
            Family::D(_) => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }

    /// Parses `A3`, `C4`, `G2`, `E8`, ... (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_uppercase();
        let bad = || Error::InvalidParameter(format!("unknown root system {s:?}"));
        let fam = match s.as_str() {
            "G2" => Family::G2,
            "F4" => Family::F4,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            _ => {
                let (head, tail) = s.split_at(1.min(s.len()));
                let n: usize = tail.parse().map_err(|_| bad())?;
                match head {
                    "A" => Family::A(n),
                    "B" => Family::B(n),
                    "C" => Family::C(n),
                    "D" => Family::D(n),
                    _ => return Err(bad()),
                }
            }
        };
        fam.validate()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) | Family::B(n) | Family::C(n) | Family::D(n) => {
                write!(f, "{}{}", self.letter(), n)
            }
            _ => f.write_str(self.letter()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    basis: BasisTag,
    form: InnerForm,
    simple_roots: Vec<WeightVec>,
    positive_roots: Vec<WeightVec>,
    /// simple-root coefficients of each positive root
    coefficients: Vec<Vec<i64>>,
    highest: usize,
    weyl_vector: WeightVec,
    dim_g: usize,
    /// `cartan[i][j] = 2 <a_i, a_j> / <a_j, a_j>`
    cartan: Vec<Vec<i64>>,
    killing_scale: Option<Rational>,
}

impl RootSystem {
    /// Assembles a root system from explicit coordinates.
    ///
    /// `simple_roots` fixes the node order; `positive_roots` may be given in
    /// any order and is re-sorted by height, then by coefficients. When
    /// `killing` is set the form is taken to be the Killing-induced one.
    pub fn from_coordinates(
        family: Family,
        form: InnerForm,
        simple_roots: Vec<WeightVec>,
        positive_roots: Vec<WeightVec>,
        killing: bool,
    ) -> Result<Self> {
        let basis = form.basis();
        for v in simple_roots.iter().chain(&positive_roots) {
            basis.check(&v.basis())?;
        }
        if simple_roots.len() != family.rank() {
            return Err(Error::InvalidParameter(format!(
                "{} simple roots given for {family}",
                simple_roots.len()
            )));
        }
        let columns: Vec<Vec<Rational>> =
            simple_roots.iter().map(|a| a.coords().to_vec()).collect();
        let mut coefficients = Vec::with_capacity(positive_roots.len());
        for root in &positive_roots {
            let c = solve_columns(&columns, root.coords()).ok_or_else(|| {
                Error::InvalidParameter(format!("{root} is not in the span of the simple roots"))
            })?;
            let ints: Option<Vec<i64>> = c
                .iter()
                .map(|x| if x.is_integer() && !x.is_negative() { x.to_integer().to_i64() } else { None })
                .collect();
            let ints = ints.ok_or_else(|| {
                Error::InvalidParameter(format!("{root} is not a nonnegative integral combination"))
            })?;
            coefficients.push(ints);
        }
        Self::assemble(
            family,
            form,
            simple_roots,
            positive_roots,
            coefficients,
            killing.then(Rational::one),
        )
    }

    fn assemble(
        family: Family,
        form: InnerForm,
        simple_roots: Vec<WeightVec>,
        positive_roots: Vec<WeightVec>,
        coefficients: Vec<Vec<i64>>,
        killing_scale: Option<Rational>,
    ) -> Result<Self> {
        let basis = form.basis();
        let rank = simple_roots.len();

        let mut order: Vec<usize> = (0..positive_roots.len()).collect();
        order.sort_by(|&a, &b| {
            let ha: i64 = coefficients[a].iter().sum();
            let hb: i64 = coefficients[b].iter().sum();
            ha.cmp(&hb).then_with(|| coefficients[a].cmp(&coefficients[b]))
        });
        let positive_roots: Vec<WeightVec> =
            order.iter().map(|&i| positive_roots[i].clone()).collect();
        let coefficients: Vec<Vec<i64>> = order.iter().map(|&i| coefficients[i].clone()).collect();

        let distinct: HashSet<&Vec<i64>> = coefficients.iter().collect();
        if distinct.len() != coefficients.len() {
            return Err(Error::InvalidParameter("repeated positive root".into()));
        }
        for i in 0..rank {
            let unit: Vec<i64> = (0..rank).map(|j| i64::from(i == j)).collect();
            if !distinct.contains(&unit) {
                return Err(Error::InvalidParameter(format!(
                    "simple root {} missing from the positive roots",
                    simple_roots[i]
                )));
            }
        }

        let highest = positive_roots.len() - 1;
        let top: i64 = coefficients[highest].iter().sum();
        if coefficients[..highest].iter().any(|c| c.iter().sum::<i64>() == top) {
            return Err(Error::InvalidParameter("highest root is not unique".into()));
        }

        let half = rat(1, 2);
        let weyl_vector = WeightVec::sum(basis, &positive_roots).scale(&half);

        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let num = form.eval_unchecked(&simple_roots[i], &simple_roots[j]);
                let den = form.eval_unchecked(&simple_roots[j], &simple_roots[j]);
                let c = int(2) * num / den;
                cartan[i][j] = c
                    .is_integer()
                    .then(|| c.to_integer().to_i64())
                    .flatten()
                    .ok_or_else(|| Error::InvalidParameter("non-integral Cartan entry".into()))?;
            }
        }

        let dim_g = 2 * positive_roots.len() + rank;
        Ok(RootSystem {
            family,
            basis,
            form,
            simple_roots,
            positive_roots,
            coefficients,
            highest,
            weyl_vector,
            dim_g,
            cartan,
            killing_scale,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn form(&self) -> &InnerForm {
        &self.form
    }

    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.simple_roots
    }

    /// Positive roots ordered by height, then lexicographically by
    /// simple-root coefficients.
    pub fn positive_roots(&self) -> &[WeightVec] {
        &self.positive_roots
    }

    pub fn coefficients(&self, root: usize) -> &[i64] {
        &self.coefficients[root]
    }

    pub fn highest_root(&self) -> &WeightVec {
        &self.positive_roots[self.highest]
    }

    /// Simple-root coefficients of the highest root.
    pub fn highest_root_marks(&self) -> &[i64] {
        &self.coefficients[self.highest]
    }

    pub fn weyl_vector(&self) -> &WeightVec {
        &self.weyl_vector
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Factor applied to the long-roots-two form to reach the Killing-induced
    /// one; `Some(1)` for coordinate models, `None` before normalization.
    pub fn killing_scale(&self) -> Option<&Rational> {
        self.killing_scale.as_ref()
    }

    pub fn inner(&self, a: &WeightVec, b: &WeightVec) -> Result<Rational> {
        self.form.eval(a, b)
    }

    pub fn norm_sq(&self, a: &WeightVec) -> Result<Rational> {
        self.form.eval(a, a)
    }

    /// `<v, a_i^vee> = 2 <v, a_i> / <a_i, a_i>` for every simple root.
    pub fn dynkin_labels(&self, v: &WeightVec) -> Result<Vec<Rational>> {
        self.basis.check(&v.basis())?;
        Ok(self
            .simple_roots
            .iter()
            .map(|a| {
                int(2) * self.form.eval_unchecked(v, a) / self.form.eval_unchecked(a, a)
            })
            .collect())
    }

    /// The weight `sum_i c_i a_i`.
    pub fn from_root_coefficients(&self, c: &[Rational]) -> WeightVec {
        c.iter()
            .zip(&self.simple_roots)
            .fold(WeightVec::zero(self.basis), |acc, (ci, a)| acc.add_scaled(ci, a))
    }

    /// Simple-root coordinates of a vector in the span of the roots.
    pub fn root_coordinates(&self, v: &WeightVec) -> Result<Vec<Rational>> {
        self.basis.check(&v.basis())?;
        let columns: Vec<Vec<Rational>> =
            self.simple_roots.iter().map(|a| a.coords().to_vec()).collect();
        solve_columns(&columns, v.coords())
            .ok_or_else(|| Error::InvalidParameter(format!("{v} is not in the root span")))
    }

    /// Index of `v` among the positive roots.
    pub fn positive_root_index(&self, v: &WeightVec) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == v)
    }
}

/// Builds the root system of the given type in the simple-root basis.
pub fn build_root_system(family: Family) -> Result<RootSystem> {
    let family = family.validate()?;
    let rank = family.rank();
    let basis = BasisTag::simple_root(family);
    let gram = dynkin::simple_gram(family);
    let form = InnerForm::new(basis, gram.clone())?;

    // cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)
    let cartan: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    let c = int(2) * &gram[i][j] / &gram[j][j];
                    c.to_integer().to_i64().expect("integral Cartan entry")
                })
                .collect()
        })
        .collect();

    let coefficients = enumerate_positive_coefficients(&cartan);
    let positive_roots = coefficients
        .iter()
        .map(|c| WeightVec::from_ints(basis, c))
        .collect::<Result<Vec<_>>>()?;
    let simple_roots = (0..rank).map(|i| WeightVec::unit(basis, i)).collect();
    RootSystem::assemble(family, form, simple_roots, positive_roots, coefficients, None)
}

/// Positive roots as simple-root coefficient vectors, via root strings:
/// for a positive root `b` with `b - p a_i, ..., b + q a_i` the `a_i`-string,
/// `p - q = <b, a_i^vee>`, so `b + a_i` is a root iff `q > 0`.
fn enumerate_positive_coefficients(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        all.extend(layer.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for root in &layer {
            for i in 0..rank {
                let mut p = 0;
                let mut probe = root.clone();
                loop {
                    probe[i] -= 1;
                    if probe[i] < 0 || !known.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..rank).map(|j| root[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = root.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    all
}

/// Rescales the form so that `<d, d> = dim G / 24` for the Weyl vector `d`.
pub fn killing_normalize(rs: &RootSystem) -> RootSystem {
    let current = rs.form.eval_unchecked(&rs.weyl_vector, &rs.weyl_vector);
    let c = Rational::from_integer(rs.dim_g.into()) / int(24) / current;
    let mut out = rs.clone();
    out.form = rs.form.scaled(&c);
    out.killing_scale = Some(match &rs.killing_scale {
        Some(prev) => prev * &c,
        None => c,
    });
    out
}

/// Fundamental weights `w_i` in the span of the roots, dual to the coroots:
/// `2 <w_i, a_j> / <a_j, a_j> = delta_ij`.
pub fn fundamental_weights(rs: &RootSystem) -> Vec<WeightVec> {
    let rank = rs.rank();
    let c: Matrix = (0..rank)
        .map(|k| (0..rank).map(|j| int(rs.cartan[k][j])).collect())
        .collect();
    let m = inverse(&c).expect("Cartan matrix is invertible");
    (0..rank).map(|i| rs.from_root_coefficients(&m[i])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn known_dim(f: Family) -> usize {
        match f {
            Family::A(n) => n * (n + 2),
            Family::B(n) | Family::C(n) => n * (2 * n + 1),
            Family::D(n) => n * (2 * n - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }

    fn dual_coxeter(f: Family) -> i64 {
        match f {
            Family::A(n) => n as i64 + 1,
            Family::B(n) => 2 * n as i64 - 1,
            Family::C(n) => n as i64 + 1,
            Family::D(n) => 2 * n as i64 - 2,
            Family::G2 => 4,
            Family::F4 => 9,
            Family::E6 => 12,
            Family::E7 => 18,
            Family::E8 => 30,
        }
    }

    fn families() -> Vec<Family> {
        let mut v = vec![Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];
        for n in 1..=6 {
            v.push(Family::A(n));
        }
        for n in 2..=6 {
            v.push(Family::B(n));
            v.push(Family::C(n));
        }
        for n in 3..=6 {
            v.push(Family::D(n));
        }
        v
    }

    #[test]
    fn dimensions_match_known_table() {
        for f in families() {
            let rs = build_root_system(f).unwrap();
            assert_eq!(rs.dim_g(), known_dim(f), "{f}");
            assert_eq!(rs.dim_g(), 2 * rs.positive_roots().len() + rs.rank());
        }
    }

    #[test]
    fn weyl_vector_pairs_to_one_with_every_coroot() {
        for f in families() {
            let rs = build_root_system(f).unwrap();
            for l in rs.dynkin_labels(rs.weyl_vector()).unwrap() {
                assert_eq!(l, int(1), "{f}");
            }
            for r in rs.positive_roots() {
                assert!(rs.inner(r, rs.weyl_vector()).unwrap() > Rational::zero());
            }
        }
    }

    #[test]
    fn highest_root_dominates_every_positive_root() {
        for f in families() {
            let rs = build_root_system(f).unwrap();
            let top = rs.highest_root_marks().to_vec();
            for i in 0..rs.positive_roots().len() {
                assert!(rs.coefficients(i).iter().zip(&top).all(|(c, t)| c <= t), "{f}");
            }
        }
    }

    #[test]
    fn long_roots_have_length_two() {
        for f in families() {
            let rs = build_root_system(f).unwrap();
            let max = rs
                .positive_roots()
                .iter()
                .map(|r| rs.norm_sq(r).unwrap())
                .max()
                .unwrap();
            assert_eq!(max, int(2), "{f}");
        }
    }

    #[test]
    fn killing_scale_is_inverse_twice_dual_coxeter() {
        for f in families() {
            let rs = killing_normalize(&build_root_system(f).unwrap());
            assert_eq!(rs.killing_scale().unwrap(), &rat(1, 2 * dual_coxeter(f)), "{f}");
            let d = rs.norm_sq(rs.weyl_vector()).unwrap();
            assert_eq!(d, rat(rs.dim_g() as i64, 24), "{f}");
        }
    }

    #[test]
    fn g2_fixture() {
        let rs = build_root_system(Family::G2).unwrap();
        assert_eq!(rs.positive_roots().len(), 6);
        assert_eq!(rs.dim_g(), 14);
        assert_eq!(rs.weyl_vector(), &WeightVec::from_ints(rs.basis(), &[3, 5]).unwrap());
        assert_eq!(rs.norm_sq(rs.weyl_vector()).unwrap(), rat(14, 3));
        assert_eq!(rs.highest_root_marks(), &[2, 3]);
        assert_eq!(killing_normalize(&rs).killing_scale().unwrap(), &rat(1, 8));
    }

    #[test]
    fn exceptional_weyl_vectors_in_root_basis() {
        let cases: [(Family, &[i64], i64); 3] = [
            (Family::E6, &[8, 15, 21, 15, 8, 11], 1),
            (Family::E7, &[34, 66, 96, 75, 52, 27, 49], 2),
            (Family::E8, &[29, 57, 84, 110, 135, 91, 46, 68], 1),
        ];
        for (f, coeffs, den) in cases {
            let rs = build_root_system(f).unwrap();
            let expect: Vec<Rational> = coeffs.iter().map(|&c| rat(c, den)).collect();
            assert_eq!(rs.weyl_vector().coords(), expect.as_slice(), "{f}");
        }
    }

    #[test]
    fn exceptional_weyl_norms_before_normalization() {
        let cases = [
            (Family::E6, int(78), rat(1, 24)),
            (Family::E7, rat(399, 2), rat(1, 36)),
            (Family::E8, int(620), rat(1, 60)),
        ];
        for (f, norm, scale) in cases {
            let rs = build_root_system(f).unwrap();
            assert_eq!(rs.norm_sq(rs.weyl_vector()).unwrap(), norm);
            assert_eq!(killing_normalize(&rs).killing_scale().unwrap(), &scale);
        }
        assert_eq!(build_root_system(Family::E8).unwrap().positive_roots().len(), 120);
    }

    #[test]
    fn a1_scale_from_half_weyl_vector() {
        let rs = build_root_system(Family::A(1)).unwrap();
        let d = rs.norm_sq(rs.weyl_vector()).unwrap();
        assert_eq!(d, rat(1, 2));
        let c = rat(3, 24) / d;
        assert_eq!(killing_normalize(&rs).killing_scale().unwrap(), &c);
        assert_eq!(c, rat(1, 4));
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for f in families() {
            let rs = build_root_system(f).unwrap();
            let w = fundamental_weights(&rs);
            for (i, wi) in w.iter().enumerate() {
                let labels = rs.dynkin_labels(wi).unwrap();
                for (j, l) in labels.iter().enumerate() {
                    assert_eq!(*l, int(i64::from(i == j)), "{f}");
                }
            }
        }
    }

    #[test]
    fn weyl_vector_is_sum_of_fundamental_weights() {
        for f in [Family::E6, Family::E7, Family::E8, Family::G2, Family::C(3)] {
            let rs = build_root_system(f).unwrap();
            let w = fundamental_weights(&rs);
            assert_eq!(&WeightVec::sum(rs.basis(), &w), rs.weyl_vector(), "{f}");
        }
        let a1 = build_root_system(Family::A(1)).unwrap();
        assert_eq!(fundamental_weights(&a1)[0], a1.simple_roots()[0].scale(&rat(1, 2)));
    }

    #[test]
    fn rejects_unsupported_ranks() {
        assert!(build_root_system(Family::A(0)).is_err());
        assert!(build_root_system(Family::B(1)).is_err());
        assert!(build_root_system(Family::C(1)).is_err());
        assert!(build_root_system(Family::D(2)).is_err());
        assert!(Family::parse("Q3").is_err());
        assert_eq!(Family::parse("d4").unwrap(), Family::D(4));
    }

    #[test]
    fn inner_rejects_basis_mismatch() {
        let g2 = build_root_system(Family::G2).unwrap();
        let a2 = build_root_system(Family::A(2)).unwrap();
        let err = inner(g2.form(), g2.weyl_vector(), a2.weyl_vector()).unwrap_err();
        assert!(matches!(err, Error::BasisMismatch { .. }));
        let zero = WeightVec::zero(g2.basis());
        assert_eq!(g2.inner(g2.weyl_vector(), &zero).unwrap(), Rational::zero());
    }
}
