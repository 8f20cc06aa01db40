use serde::{Deserialize, Serialize};

use crate::dirac::DiracResult;
use crate::rational::{format_rational, sqrt_decimal};

/// JSON view of a [`DiracResult`]. Exact values are `p/q` strings;
/// `lambda_approx` is a rounded decimal of `sqrt(lambda_sq)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiracRecord {
    pub space: String,
    pub n: usize,
    pub lambda_sq: String,
    pub lambda_approx: String,
    pub terms: TermsRecord,
    pub lambda_set_size: usize,
    pub method: String,
    pub formal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermsRecord {
    pub distance: String,
    pub lambda_sum: Option<String>,
    pub dim: String,
}

impl DiracResult {
    pub fn record(&self, digits: usize) -> DiracRecord {
        DiracRecord {
            space: self.space.clone(),
            n: self.n,
            lambda_sq: format_rational(&self.lambda_sq),
            lambda_approx: sqrt_decimal(&self.lambda_sq, digits).expect("lambda_sq is positive"),
            terms: TermsRecord {
                distance: format_rational(&self.term_distance),
                lambda_sum: self.term_lambda.as_ref().map(format_rational),
                dim: format_rational(&self.term_dim),
            },
            lambda_set_size: self.lambda_set.len(),
            method: self.method.as_str().to_string(),
            formal: self.formal,
        }
    }
}
