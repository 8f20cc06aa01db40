//! Explicit coordinate models of the three classical quaternion-Kaehler
//! families, each with its Killing-induced form written out directly.

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};
use crate::rootsys::{BasisTag, Chart, Family, InnerForm, RootSystem, WeightVec};
use crate::symspace::{Construction, SymmetricPair};

pub(crate) fn hp_name(m: usize) -> String {
    format!("HP^{m}")
}

pub(crate) fn gr2_name(m: usize) -> String {
    format!("Gr2(C^{})", m + 2)
}

pub(crate) fn gr4_name(m: usize) -> String {
    format!("Gr4~(R^{})", m + 4)
}

/// Integer vector helper; `terms` lists `(index, coefficient)`.
fn vec_of(basis: BasisTag, terms: &[(usize, i64)]) -> WeightVec {
    let mut c = vec![0i64; basis.ambient_dim];
    for &(i, v) in terms {
        c[i] += v;
    }
    WeightVec::from_ints(basis, &c).expect("length matches basis")
}

fn plus_minus_pairs(basis: BasisTag, upto: usize) -> Vec<WeightVec> {
    let mut out = Vec::new();
    for i in 0..upto {
        for j in i + 1..upto {
            out.push(vec_of(basis, &[(i, 1), (j, -1)]));
            out.push(vec_of(basis, &[(i, 1), (j, 1)]));
        }
    }
    out
}

fn index_set(rs: &RootSystem, roots: &[WeightVec]) -> Vec<usize> {
    roots
        .iter()
        .map(|r| rs.positive_root_index(r).expect("K root is a positive root of G"))
        .collect()
}

/// Quaternionic projective space `Sp(m+1)/(Sp(m) Sp(1))`, `m >= 1`.
pub fn quaternionic_projective(m: usize) -> Result<SymmetricPair> {
    if m == 0 {
        return Err(Error::InvalidParameter("HP^m needs m >= 1".into()));
    }
    let d = m + 1;
    let basis = BasisTag::coordinate(Chart::Symplectic, d);
    let form = InnerForm::diagonal(basis, rat(1, 4 * (m as i64 + 2)));
    let mut simple: Vec<WeightVec> = (0..m).map(|i| vec_of(basis, &[(i, 1), (i + 1, -1)])).collect();
    simple.push(vec_of(basis, &[(m, 2)]));
    let long: Vec<WeightVec> = (0..d).map(|i| vec_of(basis, &[(i, 2)])).collect();
    let mut positive = plus_minus_pairs(basis, d);
    positive.extend(long.iter().cloned());
    let g = RootSystem::from_coordinates(Family::C(d), form, simple, positive, true)?;

    let mut k = plus_minus_pairs(basis, m);
    k.extend(long);
    let k = index_set(&g, &k);
    Ok(SymmetricPair::new(hp_name(m), g, k, Construction::Coordinate)?
        .with_spin(true, true)
        .with_parameter(m))
}

/// Grassmannian of complex 2-planes `SU(m+2)/S(U(m) U(2))`; spin iff `m` is
/// even.
pub fn complex_grassmannian2(m: usize) -> Result<SymmetricPair> {
    if m % 2 == 1 {
        return Err(Error::NoSpinStructure { space: gr2_name(m) });
    }
    complex_grassmannian2_formal(m)
}

/// Same pair without the spin check, `m >= 1`.
pub fn complex_grassmannian2_formal(m: usize) -> Result<SymmetricPair> {
    if m == 0 {
        return Err(Error::InvalidParameter("Gr2(C^(m+2)) needs m >= 1".into()));
    }
    let d = m + 1;
    let basis = BasisTag::coordinate(Chart::Unitary, d);
    // x_{m+2} = -(x_1 + .. + x_{m+1}) eliminated
    let n = m as i64 + 2;
    let gram: Vec<Vec<Rational>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let diag = if i == j { rat(1, 2 * n) } else { int(0) };
                    diag - rat(1, 2 * n * n)
                })
                .collect()
        })
        .collect();
    let form = InnerForm::new(basis, gram)?;
    // x_i - x_{m+2} = x_i + sum_k x_k
    let to_last = |i: usize| {
        let mut c = vec![1i64; d];
        c[i] += 1;
        WeightVec::from_ints(basis, &c).expect("length matches basis")
    };
    let mut simple: Vec<WeightVec> = (0..m).map(|i| vec_of(basis, &[(i, 1), (i + 1, -1)])).collect();
    simple.push(to_last(m));
    let mut positive = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            positive.push(vec_of(basis, &[(i, 1), (j, -1)]));
        }
        positive.push(to_last(i));
    }
    let g = RootSystem::from_coordinates(Family::A(d), form, simple, positive, true)?;

    let mut k = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            k.push(vec_of(basis, &[(i, 1), (j, -1)]));
        }
    }
    k.push(to_last(m));
    let k = index_set(&g, &k);
    Ok(SymmetricPair::new(gr2_name(m), g, k, Construction::Coordinate)?
        .with_spin(m.is_multiple_of(2), true)
        .with_parameter(m))
}

/// Oriented Grassmannian of real 4-planes `SO(m+4)/(SO(m) SO(4))`; spin iff
/// `m` is even. The coordinate model covers even `m >= 4`.
pub fn real_grassmannian4(m: usize) -> Result<SymmetricPair> {
    if m < 3 {
        return Err(Error::InvalidParameter("Gr4~(R^(m+4)) needs m >= 3".into()));
    }
    if m % 2 == 1 {
        return Err(Error::NoSpinStructure { space: gr4_name(m) });
    }
    spin_chart(m)
}

/// Same pair without the spin check, `m >= 3`. Odd `m` is built from the
/// marked node 2 of `B_{(m+3)/2}`.
pub fn real_grassmannian4_formal(m: usize) -> Result<SymmetricPair> {
    if m < 3 {
        return Err(Error::InvalidParameter("Gr4~(R^(m+4)) needs m >= 3".into()));
    }
    if m.is_multiple_of(2) {
        return spin_chart(m);
    }
    let rs = crate::rootsys::build_root_system(Family::B((m + 3) / 2))?;
    crate::symspace::pair_from_marked_node(&rs, 1)
}

fn spin_chart(m: usize) -> Result<SymmetricPair> {
    let h = m / 2;
    let r = h + 2;
    let basis = BasisTag::coordinate(Chart::Spin, r);
    let form = InnerForm::diagonal(basis, rat(1, 2 * (m as i64 + 2)));
    let mut simple: Vec<WeightVec> =
        (0..r - 1).map(|i| vec_of(basis, &[(i, 1), (i + 1, -1)])).collect();
    simple.push(vec_of(basis, &[(r - 2, 1), (r - 1, 1)]));
    let positive = plus_minus_pairs(basis, r);
    let g = RootSystem::from_coordinates(Family::D(r), form, simple, positive, true)?;

    let mut k = plus_minus_pairs(basis, h);
    k.push(vec_of(basis, &[(h, 1), (h + 1, -1)]));
    k.push(vec_of(basis, &[(h, 1), (h + 1, 1)]));
    let k = index_set(&g, &k);
    Ok(SymmetricPair::new(gr4_name(m), g, k, Construction::Coordinate)?
        .with_spin(true, true)
        .with_parameter(m))
}
