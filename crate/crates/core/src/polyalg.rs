//! Sparse multivariate polynomials over exact rationals, formal derivatives
//! and reduction modulo linear ideals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{boundary, Cell};
use crate::rational::{self, Rational};

/// A polynomial variable: a plaquette holonomy, or an abstract index `1..n`
/// for the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Index(u32),
    Cell(Cell),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Index(i) => write!(f, "x{i}"),
            Var::Cell(c) => write!(f, "x{c}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    /// Accepts `x3`, `3`, `x[1,1,0]@0` or a bare cell literal.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let body = s.strip_prefix('x').unwrap_or(s);
        if body.starts_with('[') {
            Ok(Var::Cell(body.parse()?))
        } else {
            body.parse::<u32>()
                .map(Var::Index)
                .map_err(|_| Error::Parse(format!("not a variable: {s:?}")))
        }
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Var::Index(i) => s.collect_str(&format_args!("x{i}")),
            Var::Cell(c) => s.collect_str(c),
        }
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: &Var) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// The monomial with the exponent of `v` lowered by one, together with
    /// the old exponent. `None` if `v` does not occur.
    fn lower(&self, v: &Var) -> Option<(Monomial, u32)> {
        let idx = self.0.binary_search_by(|(w, _)| w.cmp(v)).ok()?;
        let e = self.0[idx].1;
        let mut powers = self.0.clone();
        if e == 1 {
            powers.remove(idx);
        } else {
            powers[idx].1 -= 1;
        }
        Some((Monomial(powers), e))
    }
}

// Graded order: lower total degree first, then lexicographic on powers.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Variables occurring in the polynomial, sorted.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derive(&self, v: &Var) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some((lowered, e)) = m.lower(v) {
                out.add_term(lowered, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Value at the origin, i.e. the constant term.
    pub fn eval_zero(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Polynomial::one(), |acc, _| &acc * self)
    }

    /// Homogeneous part of degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PolyParser::new(s).parse()
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    monomial: &'a Monomial,
    coeff: String,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(m, c)| TermRecord {
            monomial: m,
            coeff: rational::format_rational(c),
        }))
    }
}

struct PolyParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(src: &'a str) -> Self {
        PolyParser { src, pos: 0 }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.src))
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.err("empty polynomial"));
        }
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, c * rational::int(sign));
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::one();
        let mut powers = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let var = self.var()?;
                    let e = if self.eat(b'^') {
                        self.skip_ws();
                        self.digits()
                            .ok_or_else(|| self.err("expected exponent"))?
                            .parse::<u32>()
                            .map_err(|_| self.err("bad exponent"))?
                    } else {
                        1
                    };
                    powers.push((var, e));
                }
                Some(b) if b.is_ascii_digit() => {
                    let num = self.digits().unwrap();
                    let mut r: Rational = rational::parse_rational(num)?;
                    if self.eat(b'/') {
                        self.skip_ws();
                        let den = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                        r = rational::parse_rational(&format!("{num}/{den}"))?;
                    }
                    coeff *= r;
                }
                _ => return Err(self.err("expected a factor")),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial::from_powers(powers), coeff))
    }

    fn var(&mut self) -> Result<Var> {
        match self.peek() {
            Some(b'[') => {
                let start = self.pos;
                let close = self.src[start..]
                    .find(']')
                    .ok_or_else(|| self.err("unterminated cell literal"))?;
                self.pos = start + close + 1;
                if self.peek() == Some(b'@') {
                    self.pos += 1;
                    if self.peek() == Some(b'-') {
                        self.pos += 1;
                    }
                    self.digits().ok_or_else(|| self.err("expected scale"))?;
                }
                Ok(Var::Cell(self.src[start..self.pos].parse()?))
            }
            _ => {
                let d = self.digits().ok_or_else(|| self.err("expected variable index"))?;
                Ok(Var::Index(d.parse().map_err(|_| self.err("bad index"))?))
            }
        }
    }
}

/// Pseudo-random polynomial in `vars`: up to `max_terms` terms of degree at
/// most `max_degree`, integer coefficients in `[-coeff_bound, coeff_bound]`.
pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    vars: &[Var],
    max_terms: usize,
    max_degree: u32,
    coeff_bound: i64,
) -> Polynomial {
    let mut out = Polynomial::zero();
    let n_terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..n_terms {
        let deg = rng.gen_range(0..=max_degree);
        let powers: Vec<(Var, u32)> = (0..deg)
            .filter_map(|_| vars.choose(rng).map(|v| (v.clone(), 1)))
            .collect();
        let c = rng.gen_range(-coeff_bound..=coeff_bound);
        out.add_term(Monomial::from_powers(powers), rational::int(c));
    }
    out
}

/// An ideal generated by homogeneous linear forms, kept in fully reduced
/// echelon form: each pivot variable maps to a linear form in non-pivot
/// variables. The pivot of each row is its largest variable.
#[derive(Clone, Debug, Default)]
pub struct LinearIdeal {
    generators: Vec<Polynomial>,
    pivots: BTreeMap<Var, BTreeMap<Var, Rational>>,
}

impl LinearIdeal {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Self> {
        let mut ideal = LinearIdeal::trivial();
        for g in generators {
            ideal.push(g)?;
        }
        Ok(ideal)
    }

    fn push(&mut self, g: Polynomial) -> Result<()> {
        let mut row: BTreeMap<Var, Rational> = BTreeMap::new();
        for (m, c) in g.terms() {
            match m.powers() {
                [(v, 1)] => {
                    row.insert(v.clone(), c.clone());
                }
                _ => return Err(Error::NotLinear(g.to_string())),
            }
        }
        let row = self.substitute_row(&row);
        self.generators.push(g);
        let Some((lead, lead_coeff)) = row.iter().next_back().map(|(v, c)| (v.clone(), c.clone()))
        else {
            return Ok(());
        };
        let image: BTreeMap<Var, Rational> = row
            .into_iter()
            .filter(|(v, _)| *v != lead)
            .map(|(v, c)| (v, -c / &lead_coeff))
            .collect();
        for form in self.pivots.values_mut() {
            if let Some(k) = form.remove(&lead) {
                for (v, c) in &image {
                    let entry = form.entry(v.clone()).or_insert_with(Rational::zero);
                    *entry += &k * c;
                    if entry.is_zero() {
                        form.remove(v);
                    }
                }
            }
        }
        self.pivots.insert(lead, image);
        Ok(())
    }

    fn substitute_row(&self, row: &BTreeMap<Var, Rational>) -> BTreeMap<Var, Rational> {
        let mut out: BTreeMap<Var, Rational> = BTreeMap::new();
        let mut add = |v: &Var, c: Rational| {
            let entry = out.entry(v.clone()).or_insert_with(Rational::zero);
            *entry += c;
        };
        for (v, c) in row {
            match self.pivots.get(v) {
                Some(form) => {
                    for (w, k) in form {
                        add(w, c * k);
                    }
                }
                None => add(v, c.clone()),
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Generators in insertion order, as given.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_vars(&self) -> impl Iterator<Item = &Var> {
        self.pivots.keys()
    }

    fn image(&self, v: &Var) -> Polynomial {
        match self.pivots.get(v) {
            Some(form) => {
                let mut p = Polynomial::zero();
                for (w, c) in form {
                    p.add_term(Monomial::var(w.clone()), c.clone());
                }
                p
            }
            None => Polynomial::var(v.clone()),
        }
    }

    /// Normal form: every pivot variable substituted by its linear form.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        if self.pivots.is_empty() {
            return f.clone();
        }
        let mut out = Polynomial::zero();
        for (m, c) in f.terms() {
            if m.powers().iter().all(|(v, _)| !self.pivots.contains_key(v)) {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let mut prod = Polynomial::constant(c.clone());
            for (v, e) in m.powers() {
                prod = &prod * &self.image(v).pow(*e);
            }
            out = &out + &prod;
        }
        out
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }
}

/// The Bianchi generator `f_c = sum <dc, p> x_p` of a 3-cell.
pub fn bianchi_generator(cube: &Cell) -> Result<Polynomial> {
    cube.expect_dimension(3)?;
    let mut f = Polynomial::zero();
    for (face, k) in boundary(cube)?.iter() {
        f.add_term(Monomial::var(Var::Cell(face.clone())), rational::int(k));
    }
    Ok(f)
}

pub fn ideal_from_cubes(cubes: &[Cell]) -> Result<LinearIdeal> {
    let gens = cubes.iter().map(bianchi_generator).collect::<Result<Vec<_>>>()?;
    LinearIdeal::from_generators(gens)
}

/// The sphere ideal `(x_1 + ... + x_n)`.
pub fn sphere_ideal(n: u32) -> LinearIdeal {
    let mut f = Polynomial::zero();
    for i in 1..=n {
        f.add_term(Monomial::var(Var::Index(i)), Rational::one());
    }
    LinearIdeal::from_generators(vec![f]).expect("linear generator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn x(i: u32) -> Var {
        Var::Index(i)
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p("x1 + x2") * p("x1 - x2"), p("x1^2 - x2^2"));
        assert_eq!(&p("3*x1*x2 + 1/2") * &Polynomial::one(), p("3*x1*x2 + 1/2"));
        assert_eq!(
            p("x1 + x2 + x3").pow(2),
            p("x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3")
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x1^2").derive(&x(1)), p("2*x1"));
        assert!(p("x1*x2").derive(&x(3)).is_zero());
        assert_eq!(p("x1^2*x2").derive(&x(1)).derive(&x(2)), p("2*x1"));
    }

    #[test]
    fn eval_zero_examples() {
        assert_eq!(p("x1^2 + 3").eval_zero(), rational::int(3));
        assert!(p("x1*x2").eval_zero().is_zero());
        assert!(Polynomial::zero().eval_zero().is_zero());
    }

    #[test]
    fn display_and_parse_cell_variables() {
        let f = p("3/2*x[1,1,0]@0^2*x[0,1,1]@0 - x[1,1,-2]@-1");
        assert_eq!(f.len(), 2);
        assert_eq!(f.degree(), Some(3));
        assert_eq!(f.to_string().parse::<Polynomial>().unwrap(), f);
        let v: Var = "[1,1,-2]@-1".parse().unwrap();
        assert!(f.vars().contains(&v));
        assert!("x1 +".parse::<Polynomial>().is_err());
        assert!("".parse::<Polynomial>().is_err());
        assert!("x1 ^ ".parse::<Polynomial>().is_err());
    }

    #[test]
    fn reduce_by_substitution() {
        let ideal = LinearIdeal::from_generators(vec![p("x1 + x2 + x3")]).unwrap();
        assert_eq!(ideal.reduce(&p("x3 + x1*x2")), p("x1*x2 - x1 - x2"));
        assert!(ideal.reduce(&p("x1 + x2 + x3")).is_zero());
        let g = p("x1 + x2 + x3");
        assert!(ideal.contains(&(&g * &g)));
        assert!(!ideal.contains(&p("x1")));
    }

    #[test]
    fn trivial_ideal_is_identity() {
        let ideal = ideal_from_cubes(&[]).unwrap();
        let f = p("x1^2 - 7/3*x2");
        assert_eq!(ideal.reduce(&f), f);
        assert_eq!(ideal.rank(), 0);
    }

    #[test]
    fn nonlinear_generators_rejected() {
        assert!(LinearIdeal::from_generators(vec![p("x1^2")]).is_err());
        assert!(LinearIdeal::from_generators(vec![p("x1 + 1")]).is_err());
    }

    #[test]
    fn unit_cube_generator() {
        let cube: Cell = "[1,1,1]@0".parse().unwrap();
        let f = bianchi_generator(&cube).unwrap();
        let expected = p("-x[0,1,1]@0 + x[2,1,1]@0 + x[1,0,1]@0 - x[1,2,1]@0 - x[1,1,0]@0 + x[1,1,2]@0");
        assert_eq!(f, expected);
        let ideal = ideal_from_cubes(&[cube]).unwrap();
        assert_eq!(ideal.rank(), 1);
        // the largest plaquette in the order is eliminated
        assert_eq!(ideal.pivot_vars().next().unwrap().to_string(), "x[2,1,1]@0");
        assert!(bianchi_generator(&"[1,1,0]@0".parse().unwrap()).is_err());
    }

    #[test]
    fn adjacent_cubes_have_rank_two() {
        // independent elimination oracle: rank of the coefficient matrix
        let cubes: Vec<Cell> = ["[1,1,1]@0", "[3,1,1]@0"].iter().map(|s| s.parse().unwrap()).collect();
        let gens: Vec<Polynomial> = cubes.iter().map(|c| bianchi_generator(c).unwrap()).collect();
        let vars: Vec<Var> = {
            let mut vs: Vec<Var> = gens.iter().flat_map(|g| g.vars()).collect();
            vs.sort();
            vs.dedup();
            vs
        };
        let mut rows: Vec<Vec<Rational>> = gens
            .iter()
            .map(|g| vars.iter().map(|v| g.coeff(&Monomial::var(v.clone()))).collect())
            .collect();
        let mut rank = 0;
        for col in 0..vars.len() {
            if let Some(r) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                rows.swap(rank, r);
                for r2 in 0..rows.len() {
                    if r2 != rank && !rows[r2][col].is_zero() {
                        let f = &rows[r2][col] / &rows[rank][col];
                        let pivot = rows[rank].clone();
                        for (a, b) in rows[r2].iter_mut().zip(&pivot) {
                            *a -= &f * b;
                        }
                    }
                }
                rank += 1;
            }
        }
        assert_eq!(rank, 2);
        assert_eq!(ideal_from_cubes(&cubes).unwrap().rank(), 2);
    }

    #[test]
    fn dependent_generators_are_dropped() {
        let ideal =
            LinearIdeal::from_generators(vec![p("x1 + x2"), p("x2 + x3"), p("x1 - x3")]).unwrap();
        assert_eq!(ideal.rank(), 2);
        assert_eq!(ideal.generators().len(), 3);
        assert!(ideal.contains(&p("x1 - x3")));
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        any::<u64>().prop_map(|seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let vars: Vec<Var> = (1..=4).map(Var::Index).collect();
            random_polynomial(&mut rng, &vars, 4, 3, 5)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn leibniz_and_mixed_partials(f in small_poly(), g in small_poly(), i in 1u32..=4, j in 1u32..=4) {
            let v = x(i);
            let w = x(j);
            let lhs = (&f * &g).derive(&v);
            let rhs = &(&f.derive(&v) * &g) + &(&f * &g.derive(&v));
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(f.derive(&v).derive(&w), f.derive(&w).derive(&v));
        }

        #[test]
        fn reduce_is_an_algebra_morphism(f in small_poly(), g in small_poly(), a in small_poly(), b in small_poly()) {
            let ideal = LinearIdeal::from_generators(vec![p("x1 + x2 - x4"), p("2*x3 - x1")]).unwrap();
            let rf = ideal.reduce(&f);
            prop_assert_eq!(ideal.reduce(&rf), rf.clone());
            prop_assert_eq!(ideal.reduce(&(&f * &g)), ideal.reduce(&(&rf * &ideal.reduce(&g))));
            let member = &(&p("x1 + x2 - x4") * &a) + &(&p("2*x3 - x1") * &b);
            prop_assert!(ideal.contains(&member));
        }

        #[test]
        fn display_parse_round_trip(f in small_poly()) {
            prop_assert_eq!(f.to_string().parse::<Polynomial>().unwrap(), f);
        }
    }
}
