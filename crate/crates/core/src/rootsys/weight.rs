use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};
use crate::rootsys::Family;

/// Coordinate chart of a torus model written out in explicit coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    /// `Sp(m+1)`: orthogonal coordinates, roots `±x_i±x_j`, `±2x_i`.
    Symplectic,
    /// `SU(m+2)` written in the first `m+1` diagonal entries; not orthogonal.
    Unitary,
    /// `Spin(2r)`: orthogonal coordinates, roots `±x_i±x_j`.
    Spin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    OrthogonalCoordinate(Chart),
    SimpleRoot(Family),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisTag {
    pub kind: BasisKind,
    pub ambient_dim: usize,
}

impl BasisTag {
    pub fn coordinate(chart: Chart, ambient_dim: usize) -> Self {
        BasisTag {
            kind: BasisKind::OrthogonalCoordinate(chart),
            ambient_dim,
        }
    }

    pub fn simple_root(family: Family) -> Self {
        BasisTag {
            kind: BasisKind::SimpleRoot(family),
            ambient_dim: family.rank(),
        }
    }

    pub(crate) fn check(&self, other: &BasisTag) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BasisKind::OrthogonalCoordinate(chart) => {
                write!(f, "{chart:?} coordinates (dim {})", self.ambient_dim)
            }
            BasisKind::SimpleRoot(family) => write!(f, "simple roots of {family}"),
        }
    }
}

/// A weight written in the coordinates of a [`BasisTag`].
///
/// Arithmetic operators panic when the two operands carry different tags;
/// fallible entry points go through [`InnerForm::eval`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec {
    coords: Vec<Rational>,
    basis: BasisTag,
}

impl WeightVec {
    pub fn new(basis: BasisTag, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != basis.ambient_dim {
            return Err(Error::InvalidParameter(format!(
                "{} coordinates given for {basis}",
                coords.len()
            )));
        }
        Ok(WeightVec { coords, basis })
    }

    pub fn from_ints(basis: BasisTag, coords: &[i64]) -> Result<Self> {
        Self::new(basis, coords.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn zero(basis: BasisTag) -> Self {
        WeightVec {
            coords: vec![Rational::zero(); basis.ambient_dim],
            basis,
        }
    }

    pub fn unit(basis: BasisTag, i: usize) -> Self {
        let mut v = Self::zero(basis);
        v.coords[i] = crate::rational::int(1);
        v
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> WeightVec {
        WeightVec {
            coords: self.coords.iter().map(|x| x * c).collect(),
            basis: self.basis,
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &WeightVec) -> WeightVec {
        assert_eq!(self.basis, other.basis, "mixing bases");
        WeightVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + c * b)
                .collect(),
            basis: self.basis,
        }
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a WeightVec>>(basis: BasisTag, items: I) -> WeightVec {
        items.into_iter().fold(WeightVec::zero(basis), |acc, v| &acc + v)
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(c))?;
        }
        f.write_str(")")
    }
}

impl<'a> Add<&'a WeightVec> for &'a WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &'a WeightVec) -> WeightVec {
        assert_eq!(self.basis, rhs.basis, "mixing bases");
        WeightVec {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
            basis: self.basis,
        }
    }
}

impl<'a> Sub<&'a WeightVec> for &'a WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &'a WeightVec) -> WeightVec {
        assert_eq!(self.basis, rhs.basis, "mixing bases");
        WeightVec {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
            basis: self.basis,
        }
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec {
            coords: self.coords.iter().map(|a| -a).collect(),
            basis: self.basis,
        }
    }
}

/// Symmetric bilinear form given by its Gram matrix in the ambient basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerForm {
    gram: Vec<Vec<Rational>>,
    basis: BasisTag,
}

impl InnerForm {
    pub fn new(basis: BasisTag, gram: Vec<Vec<Rational>>) -> Result<Self> {
        let n = basis.ambient_dim;
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidParameter(format!("Gram matrix is not {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidParameter("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(InnerForm { gram, basis })
    }

    /// `c * sum_k x_k y_k`.
    pub fn diagonal(basis: BasisTag, c: Rational) -> Self {
        let n = basis.ambient_dim;
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { c.clone() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        InnerForm { gram, basis }
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn scaled(&self, c: &Rational) -> InnerForm {
        InnerForm {
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(|x| x * c).collect())
                .collect(),
            basis: self.basis,
        }
    }

    pub fn eval(&self, a: &WeightVec, b: &WeightVec) -> Result<Rational> {
        self.basis.check(&a.basis)?;
        self.basis.check(&b.basis)?;
        Ok(self.eval_unchecked(a, b))
    }

    pub(crate) fn eval_unchecked(&self, a: &WeightVec, b: &WeightVec) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.coords.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let row = &self.gram[i];
            let mut s = Rational::zero();
            for (g, bj) in row.iter().zip(&b.coords) {
                if !g.is_zero() && !bj.is_zero() {
                    s += g * bj;
                }
            }
            acc += ai * s;
        }
        acc
    }

    pub fn norm_sq(&self, a: &WeightVec) -> Result<Rational> {
        self.eval(a, a)
    }
}

/// Bilinear evaluation `<a, b>` under `form`.
pub fn inner(form: &InnerForm, a: &WeightVec, b: &WeightVec) -> Result<Rational> {
    form.eval(a, b)
}
