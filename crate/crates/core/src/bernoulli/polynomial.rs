use rug::Integer;

use super::bernoulli_number;
use crate::numerics::{BigReal, PrecisionContext, Rational};

/// `B_n(x) = Σ_{j=0}^{n} C(n,j)·B_j·x^{n−j}`, coefficients stored from the
/// leading power down: `coefficients[j]` multiplies `x^(n−j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliPolynomial {
    degree: u32,
    coefficients: Vec<Rational>,
}

impl BernoulliPolynomial {
    pub fn new(n: u32) -> Self {
        let mut binom = Integer::from(1);
        let mut coefficients = Vec::with_capacity(n as usize + 1);
        for j in 0..=n {
            coefficients.push(Rational::from(binom.clone()) * bernoulli_number(j));
            binom *= n - j;
            binom /= j + 1;
        }
        BernoulliPolynomial { degree: n, coefficients }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Exact Horner evaluation.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluation at the context of `x`.
    pub fn eval_real(&self, x: &BigReal) -> BigReal {
        self.to_real(x.ctx()).eval(x)
    }

    /// Coefficients of `d/dx B_n(x)`, same descending layout, degree `n − 1`.
    pub fn derivative(&self) -> Vec<Rational> {
        let n = self.degree as i64;
        self.coefficients
            .iter()
            .take(self.degree as usize)
            .enumerate()
            .map(|(j, c)| c * &Rational::from(n - j as i64))
            .collect()
    }

    /// Rounds the coefficients once for repeated real evaluation.
    pub fn to_real(&self, ctx: PrecisionContext) -> RealPolynomial {
        RealPolynomial {
            coefficients: self
                .coefficients
                .iter()
                .map(|c| BigReal::from_rational(c, ctx))
                .collect(),
        }
    }
}

/// Polynomial with rounded coefficients, leading power first.
#[derive(Clone, Debug)]
pub struct RealPolynomial {
    coefficients: Vec<BigReal>,
}

impl RealPolynomial {
    pub fn eval(&self, x: &BigReal) -> BigReal {
        let mut iter = self.coefficients.iter();
        let first = iter.next().expect("polynomial has at least one coefficient").clone();
        iter.fold(first, |acc, c| acc * x + c)
    }
}
