use rug::Integer;

use crate::error::{Error, Result};
use crate::numerics::{BigReal, PrecisionContext};
use crate::zeta::{as_integer, check_domain, Method, ZetaValue};

const MAX_NEWTON_STEPS: usize = 200;
const MAX_GRID_REFINEMENTS: u32 = 8;

/// N-point Gauss–Hermite rule for `∫ f(x) e^(−x²) dx` over the real line.
#[derive(Clone, Debug)]
pub struct HermiteRule {
    pub order: u32,
    /// Ascending zeros of `H_N`.
    pub nodes: Vec<BigReal>,
    pub weights: Vec<BigReal>,
}

impl HermiteRule {
    pub fn ctx(&self) -> PrecisionContext {
        self.nodes[0].ctx()
    }

    pub fn integrate<F: Fn(&BigReal) -> BigReal>(&self, f: F) -> BigReal {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(x))
            .sum()
    }
}

/// `(H_{N−1}(x), H_N(x))` by the three-term recurrence.
pub(crate) fn hermite_pair(order: u32, x: &BigReal) -> (BigReal, BigReal) {
    let ctx = x.ctx();
    let mut prev = BigReal::one(ctx);
    if order == 0 {
        return (BigReal::zero(ctx), prev);
    }
    let mut cur = x * 2;
    for k in 1..order {
        let next = x * &cur * 2 - &prev * (2 * i64::from(k));
        prev = std::mem::replace(&mut cur, next);
    }
    (prev, cur)
}

fn hermite(order: u32, x: &BigReal) -> BigReal {
    hermite_pair(order, x).1
}

/// Zeros and weights of the physicists' Hermite polynomial `H_N`.
///
/// Positive roots are bracketed by sign changes on a uniform grid over
/// `(0, √(2N+1)]`, narrowed by bisection and polished with Newton steps;
/// negative roots follow by symmetry. Weights use
/// `2^(N−1) N! √π / (N² H_{N−1}(x)²)`.
pub fn hermite_rule(order: u32, ctx: PrecisionContext) -> Result<HermiteRule> {
    if order == 0 {
        return Err(Error::InvalidInput("Hermite rule order must be at least 1".into()));
    }
    let positive = isolate_positive_roots(order, ctx)?;
    let mut polished = Vec::with_capacity(positive.len());
    for (index, (a, b)) in positive.into_iter().enumerate() {
        polished.push(polish(order, a, b, ctx).ok_or(Error::RootPolish { order, index })?);
    }

    let mut nodes: Vec<BigReal> = polished.iter().rev().map(|x| -x.clone()).collect();
    if order % 2 == 1 {
        nodes.push(BigReal::zero(ctx));
    }
    nodes.extend(polished);

    let n = BigReal::from_u64(u64::from(order), ctx);
    let scale = BigReal::from_integer(&Integer::from(Integer::factorial(order)), ctx)
        * BigReal::from_i64(2, ctx).powi(order as i32 - 1)
        * BigReal::pi(ctx).sqrt()
        / n.square();
    let weights = nodes
        .iter()
        .map(|x| &scale / hermite_pair(order, x).0.square())
        .collect();
    Ok(HermiteRule { order, nodes, weights })
}

fn isolate_positive_roots(order: u32, ctx: PrecisionContext) -> Result<Vec<(BigReal, BigReal)>> {
    let expected = (order / 2) as usize;
    let upper = BigReal::from_u64(2 * u64::from(order) + 1, ctx).sqrt();
    // low precision is enough to see signs
    let coarse = PrecisionContext::with_guard(20, 0);
    let upper_coarse = upper.with_context(coarse);
    let mut intervals = 8 * order.max(4);
    let mut found = 0;
    for _ in 0..MAX_GRID_REFINEMENTS {
        let h = &upper_coarse / i64::from(intervals);
        let mut brackets = Vec::with_capacity(expected);
        let mut left = h.clone();
        let mut left_val = hermite(order, &left);
        for i in 2..=intervals {
            let right = &h * i64::from(i);
            let right_val = hermite(order, &right);
            if right_val.is_zero() || left_val.is_sign_negative() != right_val.is_sign_negative() {
                brackets.push((left.with_context(ctx), right.with_context(ctx)));
            }
            left = right;
            left_val = right_val;
        }
        found = brackets.len();
        if found == expected {
            return Ok(brackets);
        }
        intervals *= 2;
    }
    Err(Error::RootIsolation { found, expected })
}

fn polish(order: u32, mut a: BigReal, mut b: BigReal, ctx: PrecisionContext) -> Option<BigReal> {
    let fa_negative = hermite(order, &a).is_sign_negative();
    for _ in 0..40 {
        let mid = (&a + &b) / 2;
        let fm = hermite(order, &mid);
        if fm.is_zero() {
            return Some(mid);
        }
        if fm.is_sign_negative() == fa_negative {
            a = mid;
        } else {
            b = mid;
        }
    }
    let mut x = (&a + &b) / 2;
    let tol = BigReal::from_i64(10, ctx).powi(-(ctx.working_digits() as i32));
    let two_n = 2 * i64::from(order);
    for _ in 0..MAX_NEWTON_STEPS {
        let (lower, value) = hermite_pair(order, &x);
        let step = value / (lower * two_n);
        x = &x - &step;
        if !x.is_finite() {
            return None;
        }
        if step.abs() <= &x.abs() * &tol {
            return Some(x);
        }
    }
    None
}

/// ζ(s) as the ratio
/// `∫ |x|^(2s−1) e^(−x²)/(1 − e^(−x²)) dx / ∫ |x|^(2s−1) e^(−x²) dx`,
/// both integrals taken with the same N-point Hermite rule.
pub fn zeta_integral_method(s: f64, nodes: u32, ctx: PrecisionContext) -> Result<ZetaValue> {
    check_domain(s)?;
    let rule = hermite_rule(nodes, ctx)?;
    zeta_integral_with_rule(s, &rule)
}

/// [`zeta_integral_method`] with a prebuilt rule.
pub fn zeta_integral_with_rule(s: f64, rule: &HermiteRule) -> Result<ZetaValue> {
    check_domain(s)?;
    let ctx = rule.ctx();
    let power = |x: &BigReal| match as_integer(s) {
        Some(k) => x.abs().powi((2 * k - 1) as i32),
        None => x.abs().pow(&BigReal::from_f64(2.0 * s - 1.0, ctx)),
    };
    let mut numerator = BigReal::zero(ctx);
    let mut denominator = BigReal::zero(ctx);
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        // x = 0 contributes its limit value 0 to both sums
        if x.is_zero() {
            continue;
        }
        let term = w * power(x);
        let damping = BigReal::one(ctx) - (-x.square()).exp();
        numerator = numerator + &term / damping;
        denominator = denominator + term;
    }
    Ok(ZetaValue::new(s, numerator / denominator, Method::Integral))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Float;

    fn tol(exp: i32, ctx: PrecisionContext) -> BigReal {
        BigReal::from_i64(10, ctx).powi(exp)
    }

    fn sqrt_pi(ctx: PrecisionContext) -> BigReal {
        BigReal::pi(ctx).sqrt()
    }

    #[test]
    fn order_one() {
        let ctx = PrecisionContext::new(40);
        let rule = hermite_rule(1, ctx).unwrap();
        assert_eq!(rule.nodes.len(), 1);
        assert!(rule.nodes[0].is_zero());
        assert!((&rule.weights[0] - sqrt_pi(ctx)).abs() < tol(-45, ctx));
    }

    #[test]
    fn order_two() {
        let ctx = PrecisionContext::new(40);
        let rule = hermite_rule(2, ctx).unwrap();
        let r = BigReal::from_f64(0.5, ctx).sqrt();
        assert!((&rule.nodes[0] + &r).abs() < tol(-45, ctx));
        assert!((&rule.nodes[1] - &r).abs() < tol(-45, ctx));
        for w in &rule.weights {
            assert!((w - sqrt_pi(ctx) / 2).abs() < tol(-45, ctx));
        }
    }

    #[test]
    fn basic_invariants() {
        for (order, digits) in [(5u32, 40u32), (15, 40), (25, 60), (64, 60)] {
            let ctx = PrecisionContext::new(digits);
            let rule = hermite_rule(order, ctx).unwrap();
            assert_eq!(rule.nodes.len(), order as usize);
            assert!(rule.weights.iter().all(|w| *w > 0));
            assert!(rule.nodes.windows(2).all(|p| p[0] < p[1]));
            let n = rule.nodes.len();
            for i in 0..n {
                assert!((&rule.nodes[i] + &rule.nodes[n - 1 - i]).abs() < tol(-(digits as i32), ctx));
            }
            let total: BigReal = rule.weights.iter().cloned().sum();
            assert!((total - sqrt_pi(ctx)).abs() < tol(3 - digits as i32, ctx), "N = {order}");
        }
    }

    #[test]
    fn even_monomials_exact() {
        let ctx = PrecisionContext::new(40);
        for order in [5u32, 15, 25] {
            let rule = hermite_rule(order, ctx).unwrap();
            // ∫ x^(2j) e^(−x²) dx = Γ(j + 1/2)
            for j in 0..order {
                let exact = BigReal::from_float(
                    Float::with_val(ctx.bits(), f64::from(j) + 0.5).gamma(),
                    ctx,
                );
                let got = rule.integrate(|x| x.powi(2 * j as i32));
                let rel = ((got - &exact) / &exact).abs();
                assert!(rel < tol(-35, ctx), "N = {order}, degree {}", 2 * j);
            }
        }
    }

    #[test]
    fn stable_weights_match_textbook_form() {
        let ctx = PrecisionContext::new(40);
        let order = 5u32;
        let rule = hermite_rule(order, ctx).unwrap();
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            // −2^(N+1) N! √π / (H_N'(x) H_{N+1}(x)), H_N' = 2N H_{N−1}
            let (lower, _) = hermite_pair(order, x);
            let derivative = lower * (2 * i64::from(order));
            let next = hermite(order + 1, x);
            let literal = -(BigReal::from_i64(2, ctx).powi(order as i32 + 1)
                * BigReal::from_i64(120, ctx)
                * sqrt_pi(ctx))
                / (derivative * next);
            assert!(((w - &literal) / w).abs() < tol(-38, ctx));
        }
    }

    #[test]
    fn zero_order_rejected() {
        assert!(hermite_rule(0, PrecisionContext::new(20)).is_err());
    }

    #[test]
    fn denominator_is_gamma() {
        let ctx = PrecisionContext::new(40);
        let rule = hermite_rule(25, ctx).unwrap();
        let denominator = rule.integrate(|x| x.abs().powi(5));
        // |x|^5 is not a polynomial, so only quadrature accuracy is expected
        assert!((denominator - 2).abs() < tol(-3, ctx));
    }

    #[test]
    fn integral_errors() {
        let ctx = PrecisionContext::new(40);
        let exact = BigReal::from_float(Float::with_val(ctx.bits(), Float::zeta_u(7)), ctx);
        let e25 = (zeta_integral_method(7.0, 25, ctx).unwrap().value - &exact).abs();
        let e35 = (zeta_integral_method(7.0, 35, ctx).unwrap().value - &exact).abs();
        assert!(e35 < e25);
        assert!(e25 > tol(-9, ctx) && e25 < tol(-6, ctx));

        let z = zeta_integral_method(2.5, 25, ctx).unwrap();
        let exact = Float::with_val(ctx.bits(), 2.5).zeta().to_f64();
        assert!((z.value.to_f64() - exact).abs() < 1e-3);
        assert_eq!(z.method, Method::Integral);
    }
}
