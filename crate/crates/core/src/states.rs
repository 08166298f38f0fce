//! States valued in exact polynomials of the coupling `lambda`.
//!
//! Two independent routes are provided for the Yang-Mills state on the
//! sphere: the terminating series `mu_0 exp(lambda L)` and Gaussian moments
//! by perfect pairings. The Gaussian convention is the heat-kernel one:
//! plaquette `i` carries weight `exp(-x_i^2 / (4 lambda a_i))`, so that
//! each holonomy has variance `2 lambda a_i` before conditioning on
//! `x_1 + ... + x_n = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::Cell;
use crate::operators::{CubicalFamily, DiffOperator, SphereOp};
use crate::polyalg::{LinearIdeal, Monomial, Polynomial, Var};
use crate::rational::{self, Rational};

/// Polynomial in `lambda` with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaPoly {
    coeffs: BTreeMap<u32, Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(degree: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add(degree, c);
        p
    }

    pub fn add(&mut self, degree: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: u32) -> Rational {
        self.coeffs.get(&degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Floating-point evaluation, for export only.
    pub fn eval_f64(&self, lambda: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * lambda.powi(*k as i32))
            .sum()
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match k {
                0 => write!(f, "{abs}")?,
                _ if abs.is_one() => write!(f, "l")?,
                _ => write!(f, "{abs}*l")?,
            }
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for LambdaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(
            self.coeffs
                .iter()
                .map(|(k, c)| (k.to_string(), rational::format_rational(c))),
        )
    }
}

/// The flat state: reduce modulo the ideal, then evaluate at zero.
pub fn mu0(f: &Polynomial, ideal: &LinearIdeal) -> Rational {
    ideal.reduce(f).eval_zero()
}

/// `mu_0 exp(lambda L) f = sum_k lambda^k / k! mu_0(L^k f)`. The series stops
/// once `L^k f` vanishes, which happens after `floor(deg f / 2)` steps.
pub fn exp_state(op: &DiffOperator, f: &Polynomial, ideal: &LinearIdeal) -> Result<LambdaPoly> {
    let mut out = LambdaPoly::zero();
    let mut current = f.clone();
    let mut k = 0u32;
    while !current.is_zero() {
        let coeff = mu0(&current, ideal) / Rational::from_integer(rational::factorial(k));
        out.add(k, coeff);
        current = op.apply(&current)?;
        k += 1;
    }
    Ok(out)
}

/// Symmetric matrix indexed by variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CovarianceMatrix {
    pub vars: Vec<Var>,
    pub entries: Vec<Vec<Rational>>,
}

impl CovarianceMatrix {
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    fn index_of(&self, v: &Var) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }
}

fn validated_areas(areas: &[Rational]) -> Result<SphereOp> {
    SphereOp::new(areas.to_vec())
}

/// Covariance (coefficient of `lambda`) of `x_1..x_{n-1}` under the sphere
/// measure, obtained by inverting the precision form `sum x_i^2 / (4 a_i)`
/// with `x_n` eliminated.
pub fn ym_covariance(areas: &[Rational]) -> Result<CovarianceMatrix> {
    validated_areas(areas)?;
    let m = areas.len() - 1;
    let two = rational::int(2);
    let last = (&two * &areas[m]).recip();
    let precision: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut v = last.clone();
                    if i == j {
                        v += (&two * &areas[i]).recip();
                    }
                    v
                })
                .collect()
        })
        .collect();
    let entries = invert(&precision).ok_or_else(|| Error::InvalidAreas("singular precision".into()))?;
    Ok(CovarianceMatrix {
        vars: (1..=m as u32).map(Var::Index).collect(),
        entries,
    })
}

/// `2 (a_i delta_ij - a_i a_j)` for `i, j < n`.
pub fn ym_covariance_closed_form(areas: &[Rational]) -> Result<CovarianceMatrix> {
    validated_areas(areas)?;
    let m = areas.len() - 1;
    let entries = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut v = -(&areas[i] * &areas[j]);
                    if i == j {
                        v += &areas[i];
                    }
                    v * rational::int(2)
                })
                .collect()
        })
        .collect();
    Ok(CovarianceMatrix {
        vars: (1..=m as u32).map(Var::Index).collect(),
        entries,
    })
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Gaussian moment `E[m]` for covariance `C`, as the sum over perfect
/// pairings of the product of covariances. Zero for odd degree. Variables of
/// `m` missing from `C` are treated as identically zero.
pub fn isserlis_moment(cov: &CovarianceMatrix, m: &Monomial) -> Rational {
    if m.degree() % 2 == 1 {
        return Rational::zero();
    }
    let mut slots = Vec::with_capacity(m.degree() as usize);
    for (v, e) in m.powers() {
        match cov.index_of(v) {
            Some(i) => slots.extend(std::iter::repeat(i).take(*e as usize)),
            None => return Rational::zero(),
        }
    }
    pairings(cov, &slots)
}

fn pairings(cov: &CovarianceMatrix, slots: &[usize]) -> Rational {
    let Some((&first, rest)) = slots.split_first() else {
        return Rational::one();
    };
    let mut total = Rational::zero();
    for k in 0..rest.len() {
        let c = cov.get(first, rest[k]);
        if c.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, &s)| s)
            .collect();
        total += c * pairings(cov, &remaining);
    }
    total
}

/// Yang-Mills expectation of `f` (euclidean coordinates `x1..x_{n-1}`) as a
/// polynomial in `lambda`: a degree-`2k` monomial contributes at `lambda^k`.
pub fn ym_moment(areas: &[Rational], f: &Polynomial) -> Result<LambdaPoly> {
    let cov = ym_covariance(areas)?;
    let mut out = LambdaPoly::zero();
    for (m, c) in f.terms() {
        if m.degree() % 2 == 0 {
            out.add(m.degree() / 2, c * isserlis_moment(&cov, m));
        }
    }
    Ok(out)
}

/// All monomials in `x1..x_nvars` of total degree at most `max_degree`.
pub fn monomials_up_to(nvars: u32, max_degree: u32) -> Vec<Monomial> {
    fn rec(var: u32, nvars: u32, left: u32, acc: &mut Vec<(Var, u32)>, out: &mut Vec<Monomial>) {
        if var > nvars {
            out.push(Monomial::from_powers(acc.iter().cloned()));
            return;
        }
        for e in 0..=left {
            acc.push((Var::Index(var), e));
            rec(var + 1, nvars, left - e, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, nvars, max_degree, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct MomentCheck {
    pub monomial: Monomial,
    pub series: LambdaPoly,
    pub gaussian: LambdaPoly,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SphereReport {
    #[serde(serialize_with = "serialize_rationals")]
    pub areas: Vec<Rational>,
    pub max_degree: u32,
    pub checks: Vec<MomentCheck>,
}

impl SphereReport {
    pub fn all_equal(&self) -> bool {
        self.checks.iter().all(|c| c.equal)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &MomentCheck> {
        self.checks.iter().filter(|c| !c.equal)
    }
}

fn serialize_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational::format_rational))
}

/// Compares `mu_0 exp(lambda L)` (euclidean form of the sphere operator)
/// with the Gaussian moments, monomial by monomial.
pub fn verify_sphere(areas: &[Rational], max_degree: u32) -> Result<SphereReport> {
    let sphere = validated_areas(areas)?;
    let op = DiffOperator::Explicit(sphere.to_euclidean());
    let trivial = LinearIdeal::trivial();
    let cov = ym_covariance(areas)?;
    let nvars = (areas.len() - 1) as u32;
    let checks = monomials_up_to(nvars, max_degree)
        .into_iter()
        .map(|m| {
            let f = Polynomial::term(m.clone(), Rational::one());
            let series = exp_state(&op, &f, &trivial)?;
            let mut gaussian = LambdaPoly::zero();
            if m.degree() % 2 == 0 {
                gaussian.add(m.degree() / 2, isserlis_moment(&cov, &m));
            }
            Ok(MomentCheck {
                equal: series == gaussian,
                monomial: m,
                series,
                gaussian,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SphereReport {
        areas: areas.to_vec(),
        max_degree,
        checks,
    })
}

/// `M_pq = 2 a_p delta_pq - (b_pq + b_qp)`, the coefficient of `lambda` in
/// `mu_0 exp(lambda L)(x_p x_q)`, over the given plaquettes.
pub fn covariance_window(family: &CubicalFamily, plaquettes: &[Cell]) -> Result<CovarianceMatrix> {
    let n = plaquettes.len();
    let mut entries = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let (p, q) = (&plaquettes[i], &plaquettes[j]);
            let mut v = -(family.coeff_b(p, q)? + family.coeff_b(q, p)?);
            if i == j {
                v += family.coeff_a(&plaquettes[i])? * rational::int(2);
            }
            entries[j][i] = v.clone();
            entries[i][j] = v;
        }
    }
    Ok(CovarianceMatrix {
        vars: plaquettes.iter().cloned().map(Var::Cell).collect(),
        entries,
    })
}

/// Leading principal minors of a symmetric matrix, computed exactly.
#[derive(Clone, Debug, Serialize)]
pub struct PsdReport {
    pub order: usize,
    #[serde(serialize_with = "serialize_rationals")]
    pub minors: Vec<Rational>,
    pub signs: Vec<i8>,
    pub positive_definite: bool,
    pub first_non_positive: Option<usize>,
}

pub fn psd_probe(cov: &CovarianceMatrix) -> PsdReport {
    let minors = leading_principal_minors(&cov.entries);
    let signs: Vec<i8> = minors.iter().map(rational::sign_of).collect();
    let first_non_positive = signs.iter().position(|s| *s <= 0).map(|k| k + 1);
    PsdReport {
        order: cov.dim(),
        positive_definite: first_non_positive.is_none(),
        first_non_positive,
        minors,
        signs,
    }
}

/// Fraction-free (Bareiss) elimination on the integer-scaled matrix. Without
/// pivoting the `k`-th pivot is the `k`-th leading principal minor; after a
/// zero pivot the remaining minors are computed one by one with pivoting.
pub fn leading_principal_minors(m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m.len();
    if n == 0 {
        return Vec::new();
    }
    let lcm = m
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let scaled: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|r| (r * Rational::from_integer(lcm.clone())).to_integer()).collect())
        .collect();
    let unscale = |k: usize, det: BigInt| {
        Rational::new(det, num_traits::pow(lcm.clone(), k))
    };
    let mut out = Vec::with_capacity(n);
    let mut a = scaled.clone();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            for order in k + 1..=n {
                let sub: Vec<Vec<BigInt>> = scaled[..order].iter().map(|r| r[..order].to_vec()).collect();
                out.push(unscale(order, bareiss_det(sub)));
            }
            return out;
        }
        out.push(unscale(k + 1, a[k][k].clone()));
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    out
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
