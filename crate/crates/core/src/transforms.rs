//! Polynomial transforms between the coefficient families, with
//! instrumented arithmetic-operation counting.
//!
//! Two numeric payloads sit behind one generic interface: exact
//! rationals for identities and operation counting, and measured floats
//! carrying gradients for first-order error propagation through the
//! same formulas. Operation counts are structural, so both payloads
//! report identical tallies.

use crate::error::{Error, Result};
use crate::partitions::{partition_count, partition_vectors, PartitionVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Mayer coefficients of the activity expansion of the pressure.
    B,
    /// Coefficients of the activity-to-density ratio expansion.
    A,
    /// Intermediate family e of the activity pipeline.
    E,
    /// Intermediate family tau of the activity pipeline.
    Tau,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::B => "b",
            Family::A => "a",
            Family::E => "e",
            Family::Tau => "tau",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "b" => Ok(Family::B),
            "a" => Ok(Family::A),
            "e" => Ok(Family::E),
            "tau" => Ok(Family::Tau),
            other => Err(Error::Parse(format!("unknown coefficient family `{other}`"))),
        }
    }
}

/// Arithmetic tallies of one computation. Factorial lookups are listed
/// separately; `total()` prices a lookup at one operation, while
/// `total_strict()` prices `k!` at the `k - 1` multiplications a table
/// rebuild would cost.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub additions: u64,
    pub multiplications: u64,
    pub divisions: u64,
    pub factorial_lookups: u64,
    strict_factorial_cost: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        OpCounter::default()
    }

    fn add(&mut self, k: u64) {
        self.additions += k;
    }

    fn mul(&mut self, k: u64) {
        self.multiplications += k;
    }

    fn div(&mut self, k: u64) {
        self.divisions += k;
    }

    fn factorial(&mut self, k: u32) {
        self.factorial_lookups += 1;
        self.strict_factorial_cost += u64::from(k.saturating_sub(1));
    }

    /// Generous reading: every factorial lookup is one operation.
    pub fn total(&self) -> u64 {
        self.additions + self.multiplications + self.divisions + self.factorial_lookups
    }

    /// Strict reading: a lookup of `k!` costs its multiplications.
    pub fn total_strict(&self) -> u64 {
        self.additions + self.multiplications + self.divisions + self.strict_factorial_cost
    }
}

/// Numeric payload of the transforms.
pub trait Scalar: Clone + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_factorial(k: u32) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as One>::one()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_factorial(k: u32) -> Self {
        let mut acc = BigInt::one();
        for i in 2..=k {
            acc *= BigInt::from(i);
        }
        BigRational::from_integer(acc)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn neg(&self) -> Self {
        -self
    }
}

/// Float value with the gradient of the computation with respect to a
/// fixed set of input coefficients. Constants carry an empty gradient.
#[derive(Debug, Clone)]
pub struct Measured {
    pub value: f64,
    grad: Vec<f64>,
}

impl Measured {
    /// Input slot `slot` of `slots` total inputs: unit gradient there.
    pub fn input(value: f64, slot: usize, slots: usize) -> Self {
        let mut grad = vec![0.0; slots];
        grad[slot] = 1.0;
        Measured { value, grad }
    }

    pub fn constant(value: f64) -> Self {
        Measured {
            value,
            grad: Vec::new(),
        }
    }

    pub fn gradient(&self) -> &[f64] {
        &self.grad
    }

    /// First-order standard error given the input standard errors,
    /// inputs treated as independent.
    pub fn std_error(&self, input_errors: &[f64]) -> f64 {
        self.grad
            .iter()
            .zip(input_errors)
            .map(|(g, s)| (g * s) * (g * s))
            .sum::<f64>()
            .sqrt()
    }

    fn zip(a: &[f64], b: &[f64], f: impl Fn(f64, f64) -> f64) -> Vec<f64> {
        let len = a.len().max(b.len());
        (0..len)
            .map(|i| {
                f(
                    a.get(i).copied().unwrap_or(0.0),
                    b.get(i).copied().unwrap_or(0.0),
                )
            })
            .collect()
    }
}

impl Scalar for Measured {
    fn zero() -> Self {
        Measured::constant(0.0)
    }

    fn one() -> Self {
        Measured::constant(1.0)
    }

    fn from_i64(v: i64) -> Self {
        Measured::constant(v as f64)
    }

    fn from_factorial(k: u32) -> Self {
        Measured::constant((2..=k).fold(1.0, |acc, i| acc * i as f64))
    }

    fn add(&self, rhs: &Self) -> Self {
        Measured {
            value: self.value + rhs.value,
            grad: Measured::zip(&self.grad, &rhs.grad, |a, b| a + b),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Measured {
            value: self.value - rhs.value,
            grad: Measured::zip(&self.grad, &rhs.grad, |a, b| a - b),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Measured {
            value: self.value * rhs.value,
            grad: Measured::zip(&self.grad, &rhs.grad, |a, b| {
                a * rhs.value + b * self.value
            }),
        }
    }

    fn div(&self, rhs: &Self) -> Self {
        let v = rhs.value;
        Measured {
            value: self.value / v,
            grad: Measured::zip(&self.grad, &rhs.grad, |a, b| (a * v - b * self.value) / (v * v)),
        }
    }

    fn neg(&self) -> Self {
        Measured {
            value: -self.value,
            grad: self.grad.iter().map(|g| -g).collect(),
        }
    }
}

/// Indexed coefficient list of one family.
#[derive(Debug, Clone)]
pub struct CoefficientVector<S> {
    family: Family,
    first_index: usize,
    values: Vec<S>,
}

impl<S: Scalar> CoefficientVector<S> {
    pub fn new(family: Family, first_index: usize, values: Vec<S>) -> Self {
        CoefficientVector {
            family,
            first_index,
            values,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn first_index(&self) -> usize {
        self.first_index
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn last_index(&self) -> usize {
        self.first_index + self.values.len() - 1
    }

    pub fn get(&self, index: usize) -> Result<&S> {
        if index < self.first_index {
            return Err(Error::MissingCoefficient {
                family: self.family.as_str(),
                index,
            });
        }
        self.values
            .get(index - self.first_index)
            .ok_or(Error::MissingCoefficient {
                family: self.family.as_str(),
                index,
            })
    }

    fn expect_family(&self, family: Family) -> Result<()> {
        if self.family != family {
            return Err(Error::FamilyMismatch {
                expected: family.as_str(),
                got: self.family.as_str(),
            });
        }
        Ok(())
    }
}

impl CoefficientVector<BigRational> {
    /// Mayer vector starting at `b_1 = 1`.
    pub fn mayer_from_rationals(values: Vec<BigRational>) -> Self {
        CoefficientVector::new(Family::B, 1, values)
    }
}

/// How the `y` vector of the product kernel is supplied.
pub enum YSpec<'a, S> {
    /// All components equal one; the multiplication is skipped.
    Ones,
    /// `y_j = j + 1`, formed on the fly at one operation each.
    Linear,
    /// `y_j = -(j + 1)`, formed on the fly at one operation each.
    NegLinear,
    /// Preformed values, consumed as given.
    Given(&'a [S]),
}

/// Product kernel `Q(x; y; m) = prod_j (1/m_j!) (y_j x_j)^{m_j}`.
///
/// Factors with `m_j = 0` are skipped, powers cost `m_j - 1`
/// multiplications, and unit factorials are not divided out, which
/// keeps the tally within `5*||m||` operations for on-the-fly `y`
/// and within `3*||m||` when every `y_j` is one.
pub fn q_eval<S: Scalar>(
    x: &[S],
    y: &YSpec<'_, S>,
    m: &PartitionVector,
    counter: &mut OpCounter,
) -> Result<S> {
    if m.len() != x.len() {
        return Err(Error::LengthMismatch);
    }
    if let YSpec::Given(ys) = y {
        if ys.len() != x.len() {
            return Err(Error::LengthMismatch);
        }
    }
    m.validate_nonempty()?;
    let mut acc: Option<S> = None;
    for (idx, &mj) in m.components().iter().enumerate() {
        if mj == 0 {
            continue;
        }
        let base = match y {
            YSpec::Ones => x[idx].clone(),
            YSpec::Linear => {
                counter.add(1);
                counter.mul(1);
                S::from_i64(idx as i64 + 2).mul(&x[idx])
            }
            YSpec::NegLinear => {
                counter.add(1);
                counter.mul(1);
                S::from_i64(-(idx as i64 + 2)).mul(&x[idx])
            }
            YSpec::Given(ys) => {
                counter.mul(1);
                ys[idx].mul(&x[idx])
            }
        };
        let mut factor = base.clone();
        for _ in 1..mj {
            counter.mul(1);
            factor = factor.mul(&base);
        }
        if mj >= 2 {
            counter.factorial(mj);
            counter.div(1);
            factor = factor.div(&S::from_factorial(mj));
        }
        acc = Some(match acc {
            None => factor,
            Some(prev) => {
                counter.mul(1);
                prev.mul(&factor)
            }
        });
    }
    Ok(acc.expect("nonzero weighted total guarantees a factor"))
}

/// Virial coefficient from the mayer coefficients `b_2..b_n`:
/// `B_n = (n-1)/n! * sum over M(n) of (n + ||m|| - 2)! Q(x; y; m)`
/// with `x_i = -b_{i+1}` and `y_i = i + 1`.
pub fn virial_from_b<S: Scalar>(
    b: &CoefficientVector<S>,
    n: u32,
    counter: &mut OpCounter,
) -> Result<S> {
    b.expect_family(Family::B)?;
    if n < 2 {
        return Err(Error::OrderOutOfRange {
            what: "mayer formula",
            order: n,
            min: 2,
            max: u32::MAX,
        });
    }
    let x: Vec<S> = (1..n)
        .map(|i| {
            counter.add(1);
            Ok(b.get(i as usize + 1)?.neg())
        })
        .collect::<Result<_>>()?;
    let mut sum: Option<S> = None;
    for m in partition_vectors(n) {
        let q = q_eval(&x, &YSpec::Linear, &m, counter)?;
        let k = n + m.norm() - 2;
        let term = if k >= 2 {
            counter.factorial(k);
            counter.mul(1);
            S::from_factorial(k).mul(&q)
        } else {
            q
        };
        sum = Some(match sum {
            None => term,
            Some(prev) => {
                counter.add(1);
                prev.add(&term)
            }
        });
    }
    let sum = sum.expect("M(n) is never empty");
    counter.mul(1);
    counter.factorial(n);
    counter.div(1);
    Ok(S::from_i64(n as i64 - 1)
        .mul(&sum)
        .div(&S::from_factorial(n)))
}

/// Solves the coefficient relation
/// `n b_n = sum_{q=1}^{n-1} (q+1) a_{q+1} (n-q) b_{n-q}`
/// forward for `a_2..a_{up_to}` given `b_1..b_{up_to}` with `b_1 = 1`.
pub fn a_from_b<S: Scalar>(
    b: &CoefficientVector<S>,
    up_to: u32,
    counter: &mut OpCounter,
) -> Result<CoefficientVector<S>> {
    b.expect_family(Family::B)?;
    let mut a: Vec<S> = Vec::with_capacity(up_to as usize - 1);
    for n in 2..=up_to as usize {
        // All terms with q < n-1 involve already-known a's.
        let mut rhs: Option<S> = None;
        for q in 1..n - 1 {
            counter.mul(3);
            let term = S::from_i64(q as i64 + 1)
                .mul(&a[q - 1])
                .mul(&S::from_i64((n - q) as i64))
                .mul(b.get(n - q)?);
            rhs = Some(match rhs {
                None => term,
                Some(prev) => {
                    counter.add(1);
                    prev.add(&term)
                }
            });
        }
        counter.mul(1);
        let mut lead = S::from_i64(n as i64).mul(b.get(n)?);
        if let Some(rhs) = rhs {
            counter.add(1);
            lead = lead.sub(&rhs);
        }
        // a_n enters as n * a_n * b_1.
        counter.div(2);
        a.push(lead.div(&S::from_i64(n as i64)).div(b.get(1)?));
    }
    Ok(CoefficientVector::new(Family::A, 2, a))
}

/// Inverse direction of the same relation: rebuilds `b_2..b_{up_to}`
/// from `a_2..a_{up_to}` with `b_1 = 1`.
pub fn b_from_a<S: Scalar>(
    a: &CoefficientVector<S>,
    up_to: u32,
    counter: &mut OpCounter,
) -> Result<CoefficientVector<S>> {
    a.expect_family(Family::A)?;
    let mut b: Vec<S> = vec![S::one()];
    for n in 2..=up_to as usize {
        let mut rhs: Option<S> = None;
        for q in 1..n {
            counter.mul(3);
            let term = S::from_i64(q as i64 + 1)
                .mul(a.get(q + 1)?)
                .mul(&S::from_i64((n - q) as i64))
                .mul(&b[n - q - 1]);
            rhs = Some(match rhs {
                None => term,
                Some(prev) => {
                    counter.add(1);
                    prev.add(&term)
                }
            });
        }
        counter.div(1);
        b.push(rhs.expect("q range nonempty").div(&S::from_i64(n as i64)));
    }
    Ok(CoefficientVector::new(Family::B, 1, b))
}

/// Family `e`: `e_1 = 1`,
/// `e_mu = (1/mu) sum over M(mu) of ||m||! Q(x; y; m)` with
/// `x_j = a_{j+1}`, `y_j = j + 1`.
pub fn e_coeffs<S: Scalar>(
    a: &CoefficientVector<S>,
    up_to: u32,
    counter: &mut OpCounter,
) -> Result<CoefficientVector<S>> {
    a.expect_family(Family::A)?;
    let mut values = vec![S::one()];
    for mu in 2..=up_to {
        let x: Vec<S> = (1..mu)
            .map(|j| Ok(a.get(j as usize + 1)?.clone()))
            .collect::<Result<_>>()?;
        let mut sum: Option<S> = None;
        for m in partition_vectors(mu) {
            let q = q_eval(&x, &YSpec::Linear, &m, counter)?;
            let k = m.norm();
            let term = if k >= 2 {
                counter.factorial(k);
                counter.mul(1);
                S::from_factorial(k).mul(&q)
            } else {
                q
            };
            sum = Some(match sum {
                None => term,
                Some(prev) => {
                    counter.add(1);
                    prev.add(&term)
                }
            });
        }
        counter.div(1);
        values.push(sum.expect("M(mu) nonempty").div(&S::from_i64(mu as i64)));
    }
    Ok(CoefficientVector::new(Family::E, 1, values))
}

/// Family `tau`: `tau_1 = 1`,
/// `tau_mu = (mu-1)! sum over M(mu) of Q(x; -y; m) / (mu - ||m||)!`
/// with `x_j = a_{j+1}`, `y_j = j + 1`.
pub fn tau_coeffs<S: Scalar>(
    a: &CoefficientVector<S>,
    up_to: u32,
    counter: &mut OpCounter,
) -> Result<CoefficientVector<S>> {
    a.expect_family(Family::A)?;
    let mut values = vec![S::one()];
    for mu in 2..=up_to {
        let x: Vec<S> = (1..mu)
            .map(|j| Ok(a.get(j as usize + 1)?.clone()))
            .collect::<Result<_>>()?;
        let mut sum: Option<S> = None;
        for m in partition_vectors(mu) {
            let mut q = q_eval(&x, &YSpec::NegLinear, &m, counter)?;
            let d = mu - m.norm();
            if d >= 2 {
                counter.factorial(d);
                counter.div(1);
                q = q.div(&S::from_factorial(d));
            }
            sum = Some(match sum {
                None => q,
                Some(prev) => {
                    counter.add(1);
                    prev.add(&q)
                }
            });
        }
        let mut tau = sum.expect("M(mu) nonempty");
        if mu - 1 >= 2 {
            counter.factorial(mu - 1);
            counter.mul(1);
            tau = S::from_factorial(mu - 1).mul(&tau);
        }
        values.push(tau);
    }
    Ok(CoefficientVector::new(Family::Tau, 1, values))
}

/// Virial coefficient from the intermediate families:
/// `B_n = sum over M(n+1) of ||m||! e_{||m||} Q(x; 1; m)` with
/// `x_j = tau_j`.
pub fn virial_from_e_tau<S: Scalar>(
    e: &CoefficientVector<S>,
    tau: &CoefficientVector<S>,
    n: u32,
    counter: &mut OpCounter,
) -> Result<S> {
    e.expect_family(Family::E)?;
    tau.expect_family(Family::Tau)?;
    let x: Vec<S> = (1..=n)
        .map(|j| Ok(tau.get(j as usize)?.clone()))
        .collect::<Result<_>>()?;
    let mut sum: Option<S> = None;
    for m in partition_vectors(n + 1) {
        let mut term = q_eval(&x, &YSpec::Ones, &m, counter)?;
        let k = m.norm();
        counter.mul(1);
        term = e.get(k as usize)?.mul(&term);
        if k >= 2 {
            counter.factorial(k);
            counter.mul(1);
            term = S::from_factorial(k).mul(&term);
        }
        sum = Some(match sum {
            None => term,
            Some(prev) => {
                counter.add(1);
                prev.add(&term)
            }
        });
    }
    Ok(sum.expect("M(n+1) nonempty"))
}

/// Full activity pipeline: `a -> e, tau -> B_n`.
pub fn virial_from_a<S: Scalar>(
    a: &CoefficientVector<S>,
    n: u32,
    counter: &mut OpCounter,
) -> Result<S> {
    let e = e_coeffs(a, n, counter)?;
    let tau = tau_coeffs(a, n, counter)?;
    virial_from_e_tau(&e, &tau, n, counter)
}

/// Published operation-count ceilings the instrumented tallies are
/// checked against.
pub mod bounds {
    use super::partition_count;

    /// Kernel evaluation with on-the-fly `y`.
    pub fn q_eval_linear(norm: u32) -> u64 {
        5 * u64::from(norm)
    }

    /// Kernel evaluation with unit `y`.
    pub fn q_eval_ones(norm: u32) -> u64 {
        3 * u64::from(norm)
    }

    /// Single member of the `e` (or `tau`) family.
    pub fn family_single(mu: u32) -> u64 {
        7 * partition_count(mu - 1) * u64::from(mu - 1)
    }

    /// Whole `e` (or `tau`) family up to `n`.
    pub fn family_total(n: u32) -> u64 {
        7 * partition_count(n - 1) * u64::from(n) * u64::from(n - 1) / 2
    }

    /// Final assembly of the virial coefficient from `e` and `tau`.
    pub fn virial_assembly(n: u32) -> u64 {
        5 * u64::from(n) * partition_count(n)
    }

    /// Full activity pipeline.
    pub fn activity_pipeline(n: u32) -> u64 {
        7 * partition_count(n - 1) * u64::from(n) * u64::from(n - 1) + virial_assembly(n)
    }

    /// Ceiling for one mayer-formula evaluation at orders up to ten.
    pub const MAYER_FORMULA_CEILING: u64 = 2440;

    /// Ceiling for the whole activity pipeline at orders up to ten.
    pub const ACTIVITY_PIPELINE_CEILING: u64 = 21000;
}
