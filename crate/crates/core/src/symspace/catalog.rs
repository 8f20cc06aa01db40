//! The compact irreducible quaternion-Kaehler symmetric spaces with a
//! reference value of the squared first Dirac eigenvalue.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{format_rational, rat, Rational};
use crate::rootsys::{build_root_system, Family};
use crate::symspace::{
    complex_grassmannian2, complex_grassmannian2_formal, pair_from_marked_node,
    quaternionic_projective, real_grassmannian4, real_grassmannian4_formal, SymmetricPair,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinRule {
    Always,
    EvenM,
    Never,
}

impl SpinRule {
    pub fn holds(self, m: Option<usize>) -> bool {
        match self {
            SpinRule::Always => true,
            SpinRule::Never => false,
            SpinRule::EvenM => m.is_some_and(|m| m % 2 == 0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    QuaternionicProjective,
    ComplexGrassmannian2,
    RealGrassmannian4,
    /// 0-based node of the Dynkin diagram of `family`.
    MarkedNode { family: Family, node: usize },
}

impl Recipe {
    fn describe(self) -> String {
        match self {
            Recipe::QuaternionicProjective => "coordinates: Sp(m+1)".into(),
            Recipe::ComplexGrassmannian2 => "coordinates: SU(m+2)".into(),
            Recipe::RealGrassmannian4 => "coordinates: Spin(m+4)".into(),
            Recipe::MarkedNode { family, node } => format!("marked node {} of {family}", node + 1),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Expectation {
    Constant(Rational),
    /// closed form in `m`, with a printable description
    Formula(fn(usize) -> Rational, &'static str),
    Unavailable,
}

impl Expectation {
    pub fn at(&self, m: Option<usize>) -> Option<Rational> {
        match (self, m) {
            (Expectation::Constant(q), _) => Some(q.clone()),
            (Expectation::Formula(f, _), Some(m)) => Some(f(m)),
            _ => None,
        }
    }

    pub fn describe(&self) -> Option<String> {
        match self {
            Expectation::Constant(q) => Some(format_rational(q)),
            Expectation::Formula(_, s) => Some((*s).to_string()),
            Expectation::Unavailable => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub name: &'static str,
    pub g: &'static str,
    pub k: &'static str,
    /// real dimension, possibly in terms of `m`
    pub dim: &'static str,
    pub spin: SpinRule,
    pub recipe: Recipe,
    pub lambda_sq: Expectation,
}

/// JSON view of a [`CatalogEntry`].
#[derive(Debug, Clone, Serialize)]
pub struct CatalogRecord {
    pub key: String,
    pub name: String,
    pub group: String,
    pub dim: String,
    pub spin: SpinRule,
    pub spin_unique: bool,
    pub recipe: String,
    pub expected_lambda_sq: Option<String>,
}

impl CatalogEntry {
    pub fn is_parameterized(&self) -> bool {
        !matches!(self.recipe, Recipe::MarkedNode { .. })
    }

    /// Smallest spin value of `m` and the step between spin values.
    pub fn m_range(&self) -> Option<(usize, usize)> {
        match self.recipe {
            Recipe::QuaternionicProjective => Some((1, 1)),
            Recipe::ComplexGrassmannian2 => Some((2, 2)),
            Recipe::RealGrassmannian4 => Some((4, 2)),
            Recipe::MarkedNode { .. } => None,
        }
    }

    pub fn spin_unique(&self) -> bool {
        self.spin != SpinRule::Never
    }

    pub fn expected_lambda_sq(&self, m: Option<usize>) -> Option<Rational> {
        self.lambda_sq.at(m)
    }

    /// Number of positive roots `t` of `G` with `<t, d_K> < 0`.
    pub fn expected_lambda_set_size(&self, m: Option<usize>) -> Option<usize> {
        match (self.recipe, m) {
            (Recipe::QuaternionicProjective, Some(_)) => Some(0),
            (Recipe::ComplexGrassmannian2, Some(m)) => Some(m.saturating_sub(1)),
            (Recipe::RealGrassmannian4, Some(_)) => Some(1),
            (Recipe::MarkedNode { family, .. }, _) => match family {
                Family::G2 => Some(0),
                Family::E6 => Some(7),
                Family::E7 => Some(13),
                Family::E8 => Some(25),
                _ => None,
            },
            _ => None,
        }
    }

    /// Builds the pair. Without `formal`, spaces without a spin structure
    /// are rejected.
    pub fn build(&self, m: Option<usize>, formal: bool) -> Result<SymmetricPair> {
        let need_m = || {
            m.ok_or_else(|| Error::InvalidParameter(format!("{} needs a value of m", self.key)))
        };
        match self.recipe {
            Recipe::QuaternionicProjective => quaternionic_projective(need_m()?),
            Recipe::ComplexGrassmannian2 if formal => complex_grassmannian2_formal(need_m()?),
            Recipe::ComplexGrassmannian2 => complex_grassmannian2(need_m()?),
            Recipe::RealGrassmannian4 if formal => real_grassmannian4_formal(need_m()?),
            Recipe::RealGrassmannian4 => real_grassmannian4(need_m()?),
            Recipe::MarkedNode { family, node } => {
                if self.spin == SpinRule::Never && !formal {
                    return Err(Error::NoSpinStructure { space: self.name.to_string() });
                }
                pair_from_marked_node(&build_root_system(family)?, node)
            }
        }
    }

    pub fn record(&self) -> CatalogRecord {
        CatalogRecord {
            key: self.key.to_string(),
            name: self.name.to_string(),
            group: format!("{}/{}", self.g, self.k),
            dim: self.dim.to_string(),
            spin: self.spin,
            spin_unique: self.spin_unique(),
            recipe: self.recipe.describe(),
            expected_lambda_sq: self.lambda_sq.describe(),
        }
    }
}

fn hp(m: usize) -> Rational {
    let m = m as i64;
    rat((m + 3) * m, 2 * (m + 2))
}

fn gr2(m: usize) -> Rational {
    let m = m as i64;
    rat((m + 4) * m, 2 * (m + 2))
}

fn gr4(m: usize) -> Rational {
    let m = m as i64;
    rat(m * m + 6 * m - 4, 2 * (m + 2))
}

pub fn catalog() -> Vec<CatalogEntry> {
    let marked = |family, node| Recipe::MarkedNode { family, node };
    vec![
        CatalogEntry {
            key: "HP",
            name: "HP^m",
            g: "Sp(m+1)",
            k: "Sp(m) Sp(1)",
            dim: "4m",
            spin: SpinRule::Always,
            recipe: Recipe::QuaternionicProjective,
            lambda_sq: Expectation::Formula(hp, "(m+3)/(m+2) * m/2"),
        },
        CatalogEntry {
            key: "Gr2",
            name: "Gr2(C^(m+2))",
            g: "SU(m+2)",
            k: "S(U(m) U(2))",
            dim: "4m",
            spin: SpinRule::EvenM,
            recipe: Recipe::ComplexGrassmannian2,
            lambda_sq: Expectation::Formula(gr2, "(m+4)/(m+2) * m/2"),
        },
        CatalogEntry {
            key: "Gr4",
            name: "Gr4~(R^(m+4))",
            g: "SO(m+4)",
            k: "SO(m) SO(4)",
            dim: "4m",
            spin: SpinRule::EvenM,
            recipe: Recipe::RealGrassmannian4,
            lambda_sq: Expectation::Formula(gr4, "(m^2+6m-4)/(2(m+2))"),
        },
        CatalogEntry {
            key: "G2",
            name: "G2/SO4",
            g: "G2",
            k: "SO(4)",
            dim: "8",
            spin: SpinRule::Always,
            recipe: marked(Family::G2, 0),
            lambda_sq: Expectation::Constant(rat(3, 2)),
        },
        CatalogEntry {
            key: "F4",
            name: "F4/(Sp3 SU2)",
            g: "F4",
            k: "Sp(3) Sp(1)",
            dim: "28",
            spin: SpinRule::Never,
            recipe: marked(Family::F4, 0),
            lambda_sq: Expectation::Unavailable,
        },
        CatalogEntry {
            key: "E6",
            name: "E6/(SU6 SU2)",
            g: "E6",
            k: "SU(6) Sp(1)",
            dim: "40",
            spin: SpinRule::Always,
            recipe: marked(Family::E6, 5),
            lambda_sq: Expectation::Constant(rat(41, 6)),
        },
        CatalogEntry {
            key: "E7",
            name: "E7/(Spin12 SU2)",
            g: "E7",
            k: "Spin(12) Sp(1)",
            dim: "64",
            spin: SpinRule::Always,
            recipe: marked(Family::E7, 0),
            lambda_sq: Expectation::Constant(rat(95, 9)),
        },
        CatalogEntry {
            key: "E8",
            name: "E8/(E7 SU2)",
            g: "E8",
            k: "E7 Sp(1)",
            dim: "112",
            spin: SpinRule::Always,
            recipe: marked(Family::E8, 0),
            lambda_sq: Expectation::Constant(rat(269, 15)),
        },
    ]
}

/// Looks an entry up by key (`"hp"`, `"e7"`, ...) or full name,
/// ignoring case.
pub fn find_entry(name: &str) -> Option<CatalogEntry> {
    let wanted = name.trim().to_ascii_lowercase();
    catalog()
        .into_iter()
        .find(|e| e.key.to_ascii_lowercase() == wanted || e.name.to_ascii_lowercase() == wanted)
}
