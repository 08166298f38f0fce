//! Exact residuals for gauge invariance, multiscale compatibility and
//! well-definedness on the quotient algebra.
//!
//! Coefficient families have unbounded support, so every sweep runs over a
//! finite window. The windows are taken modulo translations: one
//! representative plaquette per translation class (coordinates in `{0,1}`)
//! and every partner cell within max-norm distance `radius` of it.

use std::fmt;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{base_plaquette, boundary, cells_near, children, unit_cell_plaquettes, Cell};
use crate::operators::{CubicalFamily, DiffOperator, ExplicitOp, TableEntry};
use crate::polyalg::{random_polynomial, LinearIdeal, Var};
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Gauge,
    CompatA,
    CompatB,
    Sphere,
    WellDefined,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Gauge => "gauge",
            Condition::CompatA => "compat_a",
            Condition::CompatB => "compat_b",
            Condition::Sphere => "sphere",
            Condition::WellDefined => "well_defined",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Site {
    CubePlaquette { cube: Cell, plaquette: Cell },
    Pair { p: Cell, q: Cell },
    Plaquette { plaquette: Cell },
    Variable { var: Var },
    Trial { generator: usize, trial: usize },
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::CubePlaquette { cube, plaquette } => write!(f, "cube {cube} plaquette {plaquette}"),
            Site::Pair { p, q } => write!(f, "p {p} q {q}"),
            Site::Plaquette { plaquette } => write!(f, "plaquette {plaquette}"),
            Site::Variable { var } => write!(f, "var {var}"),
            Site::Trial { generator, trial } => write!(f, "generator {generator} trial {trial}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ResidualReport {
    pub condition: Condition,
    pub site: Site,
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    pub pass: bool,
}

fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl ResidualReport {
    pub fn new(condition: Condition, site: Site, value: Rational) -> Self {
        ResidualReport {
            pass: value.is_zero(),
            condition,
            site,
            value,
        }
    }
}

/// Outcome of a sweep: how many sites were checked and the failing ones,
/// sorted.
#[derive(Clone, Debug, Serialize)]
pub struct Sweep {
    pub condition: Condition,
    pub scale: i32,
    pub checked: usize,
    pub violations: Vec<ResidualReport>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn collect_sweep<T, F>(condition: Condition, scale: i32, sites: Vec<T>, f: F) -> Result<Sweep>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<ResidualReport> + Send + Sync,
{
    let checked = sites.len();
    let mut violations = sites
        .par_iter()
        .map(&f)
        .filter(|r| !matches!(r, Ok(rep) if rep.pass))
        .collect::<Result<Vec<_>>>()?;
    violations.sort();
    Ok(Sweep {
        condition,
        scale,
        checked,
        violations,
    })
}

/// `<dc, p> a_p - sum_q <dc, q> b_pq` over the faces `q` of the 3-cell `c`.
pub fn gauge_residual(op: &DiffOperator, cube: &Cell, p: &Cell) -> Result<Rational> {
    cube.expect_dimension(3)?;
    p.expect_dimension(2)?;
    if cube.scale() != p.scale() {
        return Err(Error::ScaleMismatch(cube.scale(), p.scale()));
    }
    let faces = boundary(cube)?;
    let pv = Var::Cell(p.clone());
    let mut r = Rational::zero();
    let own = faces.coeff(p);
    if own != 0 {
        r += op.coeff_a(&pv)? * rational::int(own);
    }
    for (q, k) in faces.iter() {
        r -= op.coeff_b(&pv, &Var::Cell(q.clone()))? * rational::int(k);
    }
    Ok(r)
}

/// Solves the gauge condition at `(cube, p)` for the unknown `a`
/// coefficient, returned at scale 0 (`a_0 = 4^n a_n`). `None` when `p` is
/// not a face of the cube.
pub fn solve_a0(family: &CubicalFamily, cube: &Cell, p: &Cell) -> Result<Option<Rational>> {
    cube.expect_dimension(3)?;
    let faces = boundary(cube)?;
    let own = faces.coeff(p);
    if own == 0 {
        return Ok(None);
    }
    let mut s = Rational::zero();
    for (q, k) in faces.iter() {
        s += family.coeff_b(p, q)? * rational::int(k);
    }
    Ok(Some(s / rational::int(own) / rational::quarter_pow(p.scale())))
}

/// The gauge condition for the cube `[1+2i, 1+2j, 1+2k, 2l_1, ...]@0` and
/// `p = [1,1,0,...]@0`, written through alpha/beta lookups:
/// `beta(i,j,k) - beta(i+1,j,k) + beta(j,i,k) - beta(j+1,i,k)
///  + alpha(i,j,k) - alpha(i,j,k+1) - [i=j=k=l=0] a_0`.
pub fn invariance_specialized(family: &CubicalFamily, i: i64, j: i64, k: i64, ls: &[i64]) -> Result<Rational> {
    let alpha_ks = |kk: i64| {
        let mut v = vec![kk];
        v.extend_from_slice(ls);
        v
    };
    let mut r = family.beta(i, j, k, ls)? - family.beta(i + 1, j, k, ls)? + family.beta(j, i, k, ls)?
        - family.beta(j + 1, i, k, ls)?
        + family.alpha(i, j, &alpha_ks(k))?
        - family.alpha(i, j, &alpha_ks(k + 1))?;
    if i == 0 && j == 0 && k == 0 && ls.iter().all(|l| *l == 0) {
        r -= family.table().a0();
    }
    Ok(r)
}

/// `a_n(p) - sum_{p' in children(p)} a_{n+1}(p')`.
pub fn compat_residual_a(family: &CubicalFamily, p: &Cell) -> Result<Rational> {
    let mut r = family.coeff_a(p)?;
    for child in children(p)? {
        r -= family.coeff_a(&child)?;
    }
    Ok(r)
}

/// `sum_{p' in children(p), q' in children(q)} b_{n+1}(p', q')`.
pub fn children_sum_b(family: &CubicalFamily, p: &Cell, q: &Cell) -> Result<Rational> {
    let qs = children(q)?;
    let mut s = Rational::zero();
    for pc in children(p)? {
        for qc in &qs {
            s += family.coeff_b(&pc, qc)?;
        }
    }
    Ok(s)
}

pub fn compat_residual_b(family: &CubicalFamily, p: &Cell, q: &Cell) -> Result<Rational> {
    Ok(family.coeff_b(p, q)? - children_sum_b(family, p, q)?)
}

/// Coarse-scale coefficients computed from the finer scale: the value of
/// `b_n([1,1,0..]@n, q)` implied by refinement, rescaled to scale 0 units.
pub fn coarse_beta(family: &CubicalFamily, scale: i32, i: i64, j: i64, k: i64) -> Result<Rational> {
    let p = base_plaquette(family.dim(), scale);
    let mut u = vec![0; family.dim()];
    u[0] = 2 * i;
    u[1] = 1 + 2 * j;
    u[2] = 1 + 2 * k;
    Ok(children_sum_b(family, &p, &p.with_coords(u))? / rational::quarter_pow(scale))
}

pub fn coarse_alpha(family: &CubicalFamily, scale: i32, i: i64, j: i64, k: i64) -> Result<Rational> {
    let p = base_plaquette(family.dim(), scale);
    let mut u = vec![0; family.dim()];
    u[0] = 1 + 2 * i;
    u[1] = 1 + 2 * j;
    u[2] = 2 * k;
    Ok(children_sum_b(family, &p, &p.with_coords(u))? / rational::quarter_pow(scale))
}

/// Sites `(cube, p)` for a cubical family: `p` runs over the translation
/// representatives, cubes over everything within `radius` of `p`.
pub fn family_gauge_sites(d: usize, scale: i32, radius: i64) -> Vec<(Cell, Cell)> {
    unit_cell_plaquettes(d, scale)
        .into_iter()
        .flat_map(|p| cells_near(&p, radius, 3).into_iter().map(move |c| (c, p.clone())))
        .collect()
}

/// Every 3-cell whose six faces are all in the universe of a finite table.
pub fn complete_cubes(op: &ExplicitOp) -> Vec<Cell> {
    let known: std::collections::BTreeSet<&Cell> = op
        .universe()
        .filter_map(|v| match v {
            Var::Cell(c) if c.is_plaquette() => Some(c),
            _ => None,
        })
        .collect();
    let mut cubes = std::collections::BTreeSet::new();
    for p in &known {
        for axis in 0..p.dim_ambient() {
            if p.coords()[axis].rem_euclid(2) == 1 {
                continue;
            }
            for delta in [-1, 1] {
                let mut u = p.coords().to_vec();
                u[axis] += delta;
                let c = p.with_coords(u);
                let complete = boundary(&c)
                    .map(|faces| faces.iter().all(|(f, _)| known.contains(f)))
                    .unwrap_or(false);
                if complete {
                    cubes.insert(c);
                }
            }
        }
    }
    cubes.into_iter().collect()
}

/// Sites for a finite table: every complete 3-cell paired with every
/// plaquette of the universe within `radius`.
pub fn explicit_gauge_sites(op: &ExplicitOp, radius: i64) -> Vec<(Cell, Cell)> {
    let plaquettes: Vec<Cell> = op
        .universe()
        .filter_map(|v| match v {
            Var::Cell(c) if c.is_plaquette() => Some(c.clone()),
            _ => None,
        })
        .collect();
    let cubes = complete_cubes(op);
    let mut sites = Vec::new();
    for c in &cubes {
        for p in &plaquettes {
            if p.scale() == c.scale() && c.distance(p) <= radius {
                sites.push((c.clone(), p.clone()));
            }
        }
    }
    sites
}

pub fn gauge_sweep(op: &DiffOperator, sites: Vec<(Cell, Cell)>, scale: i32) -> Result<Sweep> {
    collect_sweep(Condition::Gauge, scale, sites, |(c, p)| {
        Ok(ResidualReport::new(
            Condition::Gauge,
            Site::CubePlaquette {
                cube: c.clone(),
                plaquette: p.clone(),
            },
            gauge_residual(op, c, p)?,
        ))
    })
}

/// Gauge sweep over the standard window of a cubical family.
pub fn family_gauge_sweep(family: &CubicalFamily, scale: i32, radius: i64) -> Result<Sweep> {
    let op = DiffOperator::Cubical(family.clone());
    gauge_sweep(&op, family_gauge_sites(family.dim(), scale, radius), scale)
}

/// Compatibility between scales `scale` and `scale + 1`.
pub fn compat_sweep(family: &CubicalFamily, scale: i32, radius: i64) -> Result<(Sweep, Sweep)> {
    let reps = unit_cell_plaquettes(family.dim(), scale);
    let a = collect_sweep(Condition::CompatA, scale, reps.clone(), |p| {
        Ok(ResidualReport::new(
            Condition::CompatA,
            Site::Plaquette { plaquette: p.clone() },
            compat_residual_a(family, p)?,
        ))
    })?;
    let pairs: Vec<(Cell, Cell)> = reps
        .into_iter()
        .flat_map(|p| cells_near(&p, radius, 2).into_iter().map(move |q| (p.clone(), q)))
        .collect();
    let b = collect_sweep(Condition::CompatB, scale, pairs, |(p, q)| {
        Ok(ResidualReport::new(
            Condition::CompatB,
            Site::Pair {
                p: p.clone(),
                q: q.clone(),
            },
            compat_residual_b(family, p, q)?,
        ))
    })?;
    Ok((a, b))
}

/// `a_p - sum_q b_pq` over `vars`; identically zero exactly when the only
/// exact 2-chain (the whole sphere) passes the gauge condition.
pub fn sphere_condition(op: &DiffOperator, vars: &[Var]) -> Result<Vec<ResidualReport>> {
    vars.iter()
        .map(|p| {
            let mut r = op.coeff_a(p)?;
            for q in vars {
                r -= op.coeff_b(p, q)?;
            }
            Ok(ResidualReport::new(Condition::Sphere, Site::Variable { var: p.clone() }, r))
        })
        .collect()
}

/// For every generator `f_c` of the ideal and `trials` seeded random
/// polynomials `g` in `vars`, the normal form of `L(f_c g)`. It must vanish
/// for an operator that descends to the quotient.
pub fn welldefined_property(
    op: &DiffOperator,
    ideal: &LinearIdeal,
    vars: &[Var],
    trials: usize,
    seed: u64,
) -> Result<Vec<ResidualReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gs: Vec<_> = (0..trials)
        .map(|_| random_polynomial(&mut rng, vars, 4, 3, 9))
        .collect();
    let jobs: Vec<(usize, usize)> = (0..ideal.generators().len())
        .flat_map(|gi| (0..trials).map(move |t| (gi, t)))
        .collect();
    let mut out = jobs
        .par_iter()
        .map(|&(gi, t)| {
            let product = &ideal.generators()[gi] * &gs[t];
            let nf = ideal.reduce(&op.apply(&product)?);
            // Any nonzero normal form counts; report its largest coefficient
            // in absolute value so the magnitude is visible.
            let value = nf
                .terms()
                .map(|(_, c)| num_traits::Signed::abs(c))
                .max()
                .unwrap_or_else(Rational::zero);
            Ok(ResidualReport::new(
                Condition::WellDefined,
                Site::Trial {
                    generator: gi,
                    trial: t,
                },
                value,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Random canonical table entries close enough to the base plaquette to be
/// seen by a sweep of radius at least 6.
pub fn random_entries(count: usize, seed: u64) -> Vec<(TableEntry, Rational)> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let entry = match rng.gen_range(0..9) {
                0 => TableEntry::A0,
                1..=4 => {
                    let i = rng.gen_range(0..=2);
                    let j = rng.gen_range(i..=2);
                    TableEntry::Alpha(i, j, rng.gen_range(0..=2))
                }
                _ => TableEntry::Beta(rng.gen_range(1..=2), rng.gen_range(0..=2), rng.gen_range(0..=2)),
            };
            let mut delta = rng.gen_range(-3..=3);
            if delta == 0 {
                delta = 1;
            }
            (entry, rational::frac(delta, rng.gen_range(1..=3)))
        })
        .collect()
}
