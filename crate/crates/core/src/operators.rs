//! Second-order operators `L = sum a_p d_p^2 - sum b_pq d_p d_q`.
//!
//! The `b`-sum runs over all ordered pairs, diagonal included, with `b`
//! symmetric. Three kinds of coefficient source are supported:
//!
//! - [`SphereOp`]: `a_i` the plaquette areas of a decomposition of the
//!   sphere (summing to one) and `b_ij = a_i a_j`.
//! - [`CubicalFamily`]: translation, rotation and reflection invariant
//!   coefficients on the dyadic cubical decompositions of `R^d`, scaled by
//!   `4^(-n)` at scale `n`. The values are read from a [`BaseTable`] after
//!   moving the pair `(p, q)` to a canonical position with a signed lattice
//!   symmetry.
//! - [`ExplicitOp`]: finite tables.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{base_plaquette, cells_near, Cell, SignedSymmetry};
use crate::polyalg::{Polynomial, Var};
use crate::rational::{self, Rational};

/// Canonical index of a base-table entry, relative to `[1,1,0,...,0]`.
///
/// `Alpha(i, j, m)` is the coefficient against `[1+2i, 1+2j, 2m, 0...]` with
/// `0 <= i <= j`, `m >= 0`; `Beta(i, j, m)` against `[2i, 1+2j, 1+2m, 0...]`
/// with `i >= 1`, `j, m >= 0`. Every plaquette not parallel to a plane
/// through an axis of the base plaquette has coefficient zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "entry", content = "index", rename_all = "lowercase")]
pub enum TableEntry {
    Alpha(i64, i64, i64),
    Beta(i64, i64, i64),
    Gamma,
    A0,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseTable {
    /// `a0 = 12` with the alpha/beta choices making the family gauge
    /// invariant and compatible across scales.
    Main,
    /// `a0 = 1`, `alpha(0,0,m) = -1` for `m != 0`, everything else zero.
    Alternative,
    /// `base` with one canonical entry shifted by `delta`.
    Perturbed {
        base: Box<BaseTable>,
        entry: TableEntry,
        delta: Rational,
    },
}

impl BaseTable {
    pub fn a0(&self) -> Rational {
        match self {
            BaseTable::Main => rational::int(12),
            BaseTable::Alternative => rational::int(1),
            BaseTable::Perturbed { base, entry, delta } => {
                let v = base.a0();
                if *entry == TableEntry::A0 {
                    v + delta
                } else {
                    v
                }
            }
        }
    }

    /// Value of a canonical entry.
    pub fn value(&self, entry: TableEntry) -> Rational {
        match self {
            BaseTable::Main => rational::int(match entry {
                TableEntry::Alpha(0, 0, 0) => 2,
                TableEntry::Alpha(0, 0, m) if m >= 1 => -2,
                TableEntry::Alpha(i, j, m) if m >= 1 && i == m && j == m => -2,
                TableEntry::Beta(1, 0, 0) => -2,
                TableEntry::Beta(1, 1, 0) => -1,
                TableEntry::Beta(i, j, m) if m >= 1 && i == m + 1 && (j == m || j == m + 1) => -1,
                _ => 0,
            }),
            BaseTable::Alternative => rational::int(match entry {
                TableEntry::Alpha(0, 0, m) if m != 0 => -1,
                _ => 0,
            }),
            BaseTable::Perturbed {
                base,
                entry: target,
                delta,
            } => {
                let v = base.value(entry);
                if entry == *target && entry != TableEntry::Gamma {
                    v + delta
                } else {
                    v
                }
            }
        }
    }

    pub fn perturbed(self, entry: TableEntry, delta: Rational) -> BaseTable {
        BaseTable::Perturbed {
            base: Box::new(self),
            entry,
            delta,
        }
    }
}

/// A compatible family of invariant operators on the scale-`n` cubical
/// decompositions of `R^d`, one for every integer scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicalFamily {
    d: usize,
    table: BaseTable,
}

impl CubicalFamily {
    pub fn new(d: usize, table: BaseTable) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidSpec(format!("cubical families need d >= 3, got {d}")));
        }
        Ok(CubicalFamily { d, table })
    }

    pub fn main(d: usize) -> Result<Self> {
        Self::new(d, BaseTable::Main)
    }

    pub fn alternative(d: usize) -> Result<Self> {
        Self::new(d, BaseTable::Alternative)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn table(&self) -> &BaseTable {
        &self.table
    }

    pub fn with_table(&self, table: BaseTable) -> Self {
        CubicalFamily { d: self.d, table }
    }

    fn check_plaquette(&self, p: &Cell) -> Result<()> {
        if p.dim_ambient() != self.d {
            return Err(Error::AmbientMismatch(p.dim_ambient(), self.d));
        }
        if !p.is_plaquette() {
            return Err(Error::OutsideUniverse(p.to_string()));
        }
        Ok(())
    }

    pub fn coeff_a(&self, p: &Cell) -> Result<Rational> {
        self.check_plaquette(p)?;
        Ok(self.table.a0() * rational::quarter_pow(p.scale()))
    }

    pub fn coeff_b(&self, p: &Cell, q: &Cell) -> Result<Rational> {
        self.check_plaquette(p)?;
        self.check_plaquette(q)?;
        if p.scale() != q.scale() {
            return Err(Error::ScaleMismatch(p.scale(), q.scale()));
        }
        let g = to_base(p);
        let (moved_p, sp) = g.act(p)?;
        debug_assert_eq!(moved_p, base_plaquette(self.d, p.scale()));
        let (moved_q, sq) = g.act(q)?;
        let (entry, s) = canonical_entry(&moved_q)?;
        let v = self.table.value(entry);
        if v.is_zero() {
            return Ok(v);
        }
        Ok(v * rational::int(i64::from(sp * sq * s)) * rational::quarter_pow(p.scale()))
    }

    /// Same lookup as [`coeff_b`](Self::coeff_b), but first moving `p` with an
    /// arbitrary symmetry `pre`. Used to check that the result does not
    /// depend on the canonicalizing element.
    pub fn coeff_b_via(&self, pre: &SignedSymmetry, p: &Cell, q: &Cell) -> Result<Rational> {
        let (p2, sp) = pre.act(p)?;
        let (q2, sq) = pre.act(q)?;
        Ok(self.coeff_b(&p2, &q2)? * rational::int(i64::from(sp * sq)))
    }

    /// `b_0([1,1,0..], [1+2i, 1+2j, 2k_1, ..., 2k_{d-2}])`.
    pub fn alpha(&self, i: i64, j: i64, ks: &[i64]) -> Result<Rational> {
        let mut u = vec![1 + 2 * i, 1 + 2 * j];
        u.extend(ks.iter().map(|k| 2 * k));
        self.lookup_against_base(u)
    }

    /// `b_0([1,1,0..], [2i, 1+2j, 1+2k, 2l_1, ...])`.
    pub fn beta(&self, i: i64, j: i64, k: i64, ls: &[i64]) -> Result<Rational> {
        let mut u = vec![2 * i, 1 + 2 * j, 1 + 2 * k];
        u.extend(ls.iter().map(|l| 2 * l));
        self.lookup_against_base(u)
    }

    fn lookup_against_base(&self, u: Vec<i64>) -> Result<Rational> {
        if u.len() != self.d {
            return Err(Error::AmbientMismatch(u.len(), self.d));
        }
        let p = base_plaquette(self.d, 0);
        self.coeff_b(&p, &p.with_coords(u))
    }

    /// Every `q` with `|q - p| <= radius` and nonzero `b_pq`.
    pub fn support(&self, p: &Cell, radius: i64) -> Result<Vec<(Cell, Rational)>> {
        let mut out = Vec::new();
        for q in cells_near(p, radius, 2) {
            let b = self.coeff_b(p, &q)?;
            if !b.is_zero() {
                out.push((q, b));
            }
        }
        Ok(out)
    }
}

/// Translation composed with an axis permutation that sends the plaquette
/// `p` with plane `(a, b)` onto `[1,1,0,...,0]`, preserving its orientation.
pub fn to_base(p: &Cell) -> SignedSymmetry {
    let d = p.dim_ambient();
    let (a, b) = p.plane().expect("plaquette");
    let mut perm = vec![0; d];
    perm[a] = 0;
    perm[b] = 1;
    let mut next = 2;
    for (axis, slot) in perm.iter_mut().enumerate() {
        if axis != a && axis != b {
            *slot = next;
            next += 1;
        }
    }
    let permute = SignedSymmetry::new(perm, vec![1; d], vec![0; d]).expect("valid permutation");
    let v = permute.apply_point(p.coords());
    let mut t: Vec<i64> = v.iter().map(|x| -x).collect();
    t[0] += 1;
    t[1] += 1;
    SignedSymmetry::translation(t).compose(&permute)
}

/// Moves `q` into the canonical domain of the base table using symmetries
/// that fix `[1,1,0,...,0]`, and returns the entry together with the product
/// of the orientation signs picked up by the base plaquette and by `q`.
pub fn canonical_entry(q: &Cell) -> Result<(TableEntry, i8)> {
    let d = q.dim_ambient();
    let (a, b) = q.plane().ok_or_else(|| Error::OutsideUniverse(q.to_string()))?;
    if a >= 2 {
        return Ok((TableEntry::Gamma, 1));
    }
    let mut h = SignedSymmetry::identity(d);
    let mut cur = q.coords().to_vec();
    let step = |g: SignedSymmetry, h: &mut SignedSymmetry, cur: &mut Vec<i64>| {
        *cur = g.apply_point(cur);
        *h = g.compose(h);
    };
    let entry = if (a, b) == (0, 1) {
        for axis in 0..2 {
            if cur[axis] < 0 {
                step(SignedSymmetry::reflection(d, axis, 2), &mut h, &mut cur);
            }
        }
        for axis in 2..d {
            if cur[axis] < 0 {
                step(SignedSymmetry::reflection(d, axis, 0), &mut h, &mut cur);
            }
        }
        if cur[0] > cur[1] {
            step(SignedSymmetry::swap(d, 0, 1), &mut h, &mut cur);
        }
        let m: i64 = cur[2..].iter().map(|u| u / 2).sum();
        TableEntry::Alpha((cur[0] - 1) / 2, (cur[1] - 1) / 2, m)
    } else {
        if a == 0 {
            step(SignedSymmetry::swap(d, 0, 1), &mut h, &mut cur);
        }
        let m_axis = b;
        if cur[0] <= 0 {
            step(SignedSymmetry::reflection(d, 0, 2), &mut h, &mut cur);
        }
        if cur[1] < 0 {
            step(SignedSymmetry::reflection(d, 1, 2), &mut h, &mut cur);
        }
        for axis in 2..d {
            if cur[axis] < 0 {
                step(SignedSymmetry::reflection(d, axis, 0), &mut h, &mut cur);
            }
        }
        if m_axis != 2 {
            step(SignedSymmetry::swap(d, m_axis, 2), &mut h, &mut cur);
        }
        let rest: i64 = cur[3..].iter().map(|u| u / 2).sum();
        TableEntry::Beta(cur[0] / 2, (cur[1] - 1) / 2, (cur[2] - 1) / 2 + rest)
    };
    let base = base_plaquette(d, q.scale());
    let (fixed, sp) = h.act(&base)?;
    debug_assert_eq!(fixed, base);
    let (moved, sq) = h.act(q)?;
    debug_assert_eq!(moved.coords(), &cur[..]);
    Ok((entry, sp * sq))
}

/// Sphere operator: `a_i` = areas, `b_ij = a_i a_j`, variables `x1..xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereOp {
    areas: Vec<Rational>,
}

impl SphereOp {
    pub fn new(areas: Vec<Rational>) -> Result<Self> {
        if areas.len() < 2 {
            return Err(Error::InvalidAreas("need at least two plaquettes".into()));
        }
        if areas.iter().any(|a| a <= &Rational::zero()) {
            return Err(Error::InvalidAreas("areas must be positive".into()));
        }
        let total: Rational = areas.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidAreas(format!("areas sum to {total}, not 1")));
        }
        Ok(SphereOp { areas })
    }

    pub fn areas(&self) -> &[Rational] {
        &self.areas
    }

    pub fn n(&self) -> usize {
        self.areas.len()
    }

    pub fn vars(&self) -> Vec<Var> {
        (1..=self.n() as u32).map(Var::Index).collect()
    }

    fn index(&self, v: &Var) -> Result<usize> {
        match v {
            Var::Index(i) if *i >= 1 && (*i as usize) <= self.n() => Ok(*i as usize - 1),
            _ => Err(Error::OutsideUniverse(v.to_string())),
        }
    }

    /// The same operator in the euclidean coordinates `x1..x_{n-1}` obtained
    /// by eliminating `x_n = -(x1 + ... + x_{n-1})`. A polynomial free of
    /// `x_n` is its own lift, so the euclidean coefficients are the
    /// algebraic ones restricted to the first `n-1` variables.
    pub fn to_euclidean(&self) -> ExplicitOp {
        let m = self.n() - 1;
        let mut op = ExplicitOp::default();
        for i in 0..m {
            op.set_a(Var::Index(i as u32 + 1), self.areas[i].clone());
            for j in i..m {
                op.set_b(
                    Var::Index(i as u32 + 1),
                    Var::Index(j as u32 + 1),
                    &self.areas[i] * &self.areas[j],
                );
            }
        }
        op
    }
}

/// Symbol of an operator on `n-1` euclidean variables after substituting
/// `d_i -> d_i - d_n`: the `n x n` matrix `S` with `L = sum_kl S_kl d_k d_l`.
pub fn algebraic_symbol(euclidean: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let m = euclidean.len();
    let n = m + 1;
    let last = m;
    let mut s = vec![vec![Rational::zero(); n]; n];
    for i in 0..m {
        for j in 0..m {
            let c = &euclidean[i][j];
            s[i][j] += c;
            s[i][last] -= c;
            s[last][j] -= c;
            s[last][last] += c;
        }
    }
    s
}

/// Finite coefficient tables. The universe is the set of variables with an
/// `a` entry; missing `b` entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExplicitOp {
    a: BTreeMap<Var, Rational>,
    b: BTreeMap<(Var, Var), Rational>,
}

fn ordered(p: Var, q: Var) -> (Var, Var) {
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

impl ExplicitOp {
    pub fn set_a(&mut self, p: Var, value: Rational) {
        self.a.insert(p, value);
    }

    /// Sets `b_pq = b_qp`.
    pub fn set_b(&mut self, p: Var, q: Var, value: Rational) {
        let key = ordered(p, q);
        if value.is_zero() {
            self.b.remove(&key);
        } else {
            self.b.insert(key, value);
        }
    }

    pub fn universe(&self) -> impl Iterator<Item = &Var> {
        self.a.keys()
    }

    pub fn a_entries(&self) -> impl Iterator<Item = (&Var, &Rational)> {
        self.a.iter()
    }

    pub fn b_entries(&self) -> impl Iterator<Item = (&(Var, Var), &Rational)> {
        self.b.iter()
    }

    pub fn coeff_a(&self, p: &Var) -> Result<Rational> {
        self.a
            .get(p)
            .cloned()
            .ok_or_else(|| Error::OutsideUniverse(p.to_string()))
    }

    pub fn coeff_b(&self, p: &Var, q: &Var) -> Result<Rational> {
        for v in [p, q] {
            if !self.a.contains_key(v) {
                return Err(Error::OutsideUniverse(v.to_string()));
            }
        }
        Ok(self
            .b
            .get(&ordered(p.clone(), q.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// Dumps a cubical family restricted to `plaquettes`. An asymmetric
    /// table is stored as its symmetric part, which defines the same operator.
    pub fn from_family(family: &CubicalFamily, plaquettes: &[Cell]) -> Result<Self> {
        let mut op = ExplicitOp::default();
        for (idx, p) in plaquettes.iter().enumerate() {
            op.set_a(Var::Cell(p.clone()), family.coeff_a(p)?);
            for q in &plaquettes[idx..] {
                let b = (family.coeff_b(p, q)? + family.coeff_b(q, p)?) * rational::frac(1, 2);
                op.set_b(Var::Cell(p.clone()), Var::Cell(q.clone()), b);
            }
        }
        Ok(op)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffOperator {
    Sphere(SphereOp),
    Cubical(CubicalFamily),
    Explicit(ExplicitOp),
}

fn as_cell(v: &Var) -> Result<&Cell> {
    match v {
        Var::Cell(c) => Ok(c),
        Var::Index(_) => Err(Error::OutsideUniverse(v.to_string())),
    }
}

impl DiffOperator {
    pub fn coeff_a(&self, p: &Var) -> Result<Rational> {
        match self {
            DiffOperator::Sphere(s) => Ok(s.areas[s.index(p)?].clone()),
            DiffOperator::Cubical(f) => f.coeff_a(as_cell(p)?),
            DiffOperator::Explicit(e) => e.coeff_a(p),
        }
    }

    pub fn coeff_b(&self, p: &Var, q: &Var) -> Result<Rational> {
        match self {
            DiffOperator::Sphere(s) => Ok(&s.areas[s.index(p)?] * &s.areas[s.index(q)?]),
            DiffOperator::Cubical(f) => f.coeff_b(as_cell(p)?, as_cell(q)?),
            DiffOperator::Explicit(e) => e.coeff_b(p, q),
        }
    }

    /// Symmetric `S` with `L = sum_kl S_kl d_k d_l` over `vars`:
    /// `S_kk = a_k - b_kk`, `S_kl = -(b_kl + b_lk)/2`.
    pub fn symbol_matrix(&self, vars: &[Var]) -> Result<Vec<Vec<Rational>>> {
        let n = vars.len();
        let half = rational::frac(1, 2);
        let mut s = vec![vec![Rational::zero(); n]; n];
        for k in 0..n {
            s[k][k] = self.coeff_a(&vars[k])? - self.coeff_b(&vars[k], &vars[k])?;
            for l in k + 1..n {
                let b = self.pair_sum(&vars[k], &vars[l])?;
                s[k][l] = -(&b * &half);
                s[l][k] = s[k][l].clone();
            }
        }
        Ok(s)
    }

    /// `b_pq + b_qp`, the weight of `d_p d_q` in the sum over ordered pairs.
    fn pair_sum(&self, p: &Var, q: &Var) -> Result<Rational> {
        let b = self.coeff_b(p, q)?;
        match self {
            // only the cubical tables can be asymmetric
            DiffOperator::Cubical(_) => Ok(b + self.coeff_b(q, p)?),
            _ => Ok(&b + &b),
        }
    }

    /// `L f`, summing over the variables of `f` only.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let vars = f.vars();
        let firsts: Vec<Polynomial> = vars.iter().map(|v| f.derive(v)).collect();
        let mut out = Polynomial::zero();
        for (k, p) in vars.iter().enumerate() {
            let diag = self.coeff_a(p)? - self.coeff_b(p, p)?;
            out = &out + &firsts[k].derive(p).scale(&diag);
            for q in &vars[k + 1..] {
                let b = self.pair_sum(p, q)?;
                if b.is_zero() {
                    continue;
                }
                let mixed = firsts[k].derive(q);
                out = &out - &mixed.scale(&b);
            }
        }
        Ok(out)
    }

    /// The bilinear part of `L(fg) - L(f)g - fL(g)`:
    /// `2 sum a_p d_p f d_p g - sum (b_pq + b_qp) d_p f d_q g`.
    pub fn carre_du_champ(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let mut vars = f.vars();
        vars.extend(g.vars());
        vars.sort();
        vars.dedup();
        let mut out = Polynomial::zero();
        for p in &vars {
            let fp = f.derive(p);
            if fp.is_zero() {
                continue;
            }
            out = &out + &(&fp * &g.derive(p)).scale(&(self.coeff_a(p)? * rational::int(2)));
            for q in &vars {
                let b = if p == q {
                    self.coeff_b(p, p)? * rational::int(2)
                } else {
                    self.pair_sum(p, q)?
                };
                if !b.is_zero() {
                    out = &out - &(&fp * &g.derive(q)).scale(&b);
                }
            }
        }
        Ok(out)
    }
}

/// JSON operator description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum OperatorSpec {
    Cubical {
        #[serde(default = "default_d")]
        d: usize,
        #[serde(default)]
        scale: i32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        perturb: Option<Perturbation>,
    },
    #[serde(rename = "alt3")]
    Alt {
        #[serde(default = "default_d")]
        d: usize,
        #[serde(default)]
        scale: i32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        perturb: Option<Perturbation>,
    },
    Sphere {
        areas: Vec<String>,
    },
    Explicit {
        a: Vec<ARow>,
        #[serde(default)]
        b: Vec<BRow>,
    },
}

fn default_d() -> usize {
    3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Perturbation {
    #[serde(flatten)]
    pub entry: TableEntry,
    pub delta: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ARow {
    pub p: Var,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BRow {
    pub p: Var,
    pub q: Var,
    pub value: String,
}

impl OperatorSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    /// Scale recorded in the operator description (0 unless given).
    pub fn scale(&self) -> i32 {
        match self {
            OperatorSpec::Cubical { scale, .. } | OperatorSpec::Alt { scale, .. } => *scale,
            _ => 0,
        }
    }

    pub fn build(&self) -> Result<DiffOperator> {
        let table = |base: BaseTable, perturb: &Option<Perturbation>| -> Result<BaseTable> {
            match perturb {
                None => Ok(base),
                Some(p) => Ok(base.perturbed(p.entry, rational::parse_rational(&p.delta)?)),
            }
        };
        Ok(match self {
            OperatorSpec::Cubical { d, perturb, .. } => {
                DiffOperator::Cubical(CubicalFamily::new(*d, table(BaseTable::Main, perturb)?)?)
            }
            OperatorSpec::Alt { d, perturb, .. } => DiffOperator::Cubical(CubicalFamily::new(
                *d,
                table(BaseTable::Alternative, perturb)?,
            )?),
            OperatorSpec::Sphere { areas } => {
                let areas = areas
                    .iter()
                    .map(|a| rational::parse_rational(a))
                    .collect::<Result<Vec<_>>>()?;
                DiffOperator::Sphere(SphereOp::new(areas)?)
            }
            OperatorSpec::Explicit { a, b } => {
                let mut op = ExplicitOp::default();
                for row in a {
                    op.set_a(row.p.clone(), rational::parse_rational(&row.value)?);
                }
                for row in b {
                    op.set_b(row.p.clone(), row.q.clone(), rational::parse_rational(&row.value)?);
                }
                DiffOperator::Explicit(op)
            }
        })
    }

    pub fn explicit(op: &ExplicitOp) -> Self {
        OperatorSpec::Explicit {
            a: op
                .a_entries()
                .map(|(p, v)| ARow {
                    p: p.clone(),
                    value: rational::format_rational(v),
                })
                .collect(),
            b: op
                .b_entries()
                .map(|((p, q), v)| BRow {
                    p: p.clone(),
                    q: q.clone(),
                    value: rational::format_rational(v),
                })
                .collect(),
        }
    }
}
