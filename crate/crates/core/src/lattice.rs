//! Dyadic cubical cell complexes on `R^d`.
//!
//! A cell of the scale-`n` decomposition is stored as an integer vector `u`:
//! the cell `[u]@n` is the unique cell containing the point `u * 2^(-n)`.
//! Vertices sit at even coordinates, and each odd coordinate spans one
//! direction of the cell, so the cell dimension is the number of odd entries.
//! The orientation of a cell is the canonical one: its spanning axes in
//! increasing order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    scale: i32,
    coords: Vec<i64>,
}

impl Cell {
    pub fn new(scale: i32, coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "cells live in R^d with d >= 1");
        Cell { scale, coords }
    }

    pub fn dim_ambient(&self) -> usize {
        self.coords.len()
    }

    pub fn scale(&self) -> i32 {
        self.scale
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Number of odd coordinates.
    pub fn dimension(&self) -> usize {
        self.coords.iter().filter(|u| u.rem_euclid(2) == 1).count()
    }

    /// Axes (0-based, ascending) along which the cell extends.
    pub fn odd_axes(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, u)| u.rem_euclid(2) == 1)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_plaquette(&self) -> bool {
        self.dimension() == 2
    }

    /// The oriented plane `(a, b)`, `a < b`, of a plaquette.
    pub fn plane(&self) -> Option<(usize, usize)> {
        match self.odd_axes()[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    pub fn expect_dimension(&self, k: usize) -> Result<()> {
        let got = self.dimension();
        if got == k {
            Ok(())
        } else {
            Err(Error::WrongDimension {
                expected: k,
                got,
                cell: self.to_string(),
            })
        }
    }

    pub fn with_coords(&self, coords: Vec<i64>) -> Cell {
        Cell::new(self.scale, coords)
    }

    fn shifted(&self, axis: usize, delta: i64) -> Cell {
        let mut coords = self.coords.clone();
        coords[axis] += delta;
        Cell::new(self.scale, coords)
    }

    /// Max-norm distance between the coordinate vectors of two cells at the
    /// same scale.
    pub fn distance(&self, other: &Cell) -> i64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, u) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}")?;
        }
        write!(f, "]@{}", self.scale)
    }
}

impl FromStr for Cell {
    type Err = Error;

    /// Parses `"[u1,...,ud]@n"`. A missing `@n` means scale 0.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse(format!("not a cell literal: {s:?}"));
        let rest = s.strip_prefix('[').ok_or_else(err)?;
        let (inner, tail) = rest.split_once(']').ok_or_else(err)?;
        let coords = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        let tail = tail.trim();
        let scale = if tail.is_empty() {
            0
        } else {
            tail.strip_prefix('@')
                .ok_or_else(err)?
                .trim()
                .parse::<i32>()
                .map_err(|_| err())?
        };
        if coords.is_empty() {
            return Err(err());
        }
        Ok(Cell::new(scale, coords))
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cell {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A formal integer combination of cells. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignedChain {
    terms: BTreeMap<Cell, i64>,
}

impl SignedChain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, cell: Cell, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(cell.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&cell);
        }
    }

    pub fn coeff(&self, cell: &Cell) -> i64 {
        self.terms.get(cell).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Cell, i64)> {
        self.terms.iter().map(|(c, &k)| (c, k))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Boundary of the chain, extended linearly.
    pub fn boundary(&self) -> Result<SignedChain> {
        let mut out = SignedChain::new();
        for (cell, k) in self.iter() {
            for (face, s) in boundary(cell)?.iter() {
                out.add(face.clone(), k * s);
            }
        }
        Ok(out)
    }
}

impl FromIterator<(Cell, i64)> for SignedChain {
    fn from_iter<T: IntoIterator<Item = (Cell, i64)>>(iter: T) -> Self {
        let mut chain = SignedChain::new();
        for (c, k) in iter {
            chain.add(c, k);
        }
        chain
    }
}

#[derive(Serialize)]
struct ChainTerm<'a> {
    cell: &'a Cell,
    coeff: i64,
}

impl Serialize for SignedChain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|(cell, coeff)| ChainTerm { cell, coeff }))
    }
}

/// Homological boundary. For odd axes `i_1 < ... < i_k` the `j`-th axis
/// contributes `(-1)^(j+1) [u + e_ij] + (-1)^j [u - e_ij]` (1-based `j`).
pub fn boundary(cell: &Cell) -> Result<SignedChain> {
    let axes = cell.odd_axes();
    if axes.is_empty() {
        return Err(Error::VertexBoundary);
    }
    let mut chain = SignedChain::new();
    for (j, &axis) in axes.iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        chain.add(cell.shifted(axis, 1), sign);
        chain.add(cell.shifted(axis, -1), -sign);
    }
    Ok(chain)
}

/// The four scale-`n+1` plaquettes subdividing a scale-`n` plaquette, with
/// compatible orientations.
pub fn children(p: &Cell) -> Result<[Cell; 4]> {
    p.expect_dimension(2)?;
    let (a, b) = p.plane().expect("plaquette has a plane");
    let base: Vec<i64> = p.coords.iter().map(|u| 2 * u).collect();
    let child = |ea: i64, eb: i64| {
        let mut c = base.clone();
        c[a] += ea;
        c[b] += eb;
        Cell::new(p.scale + 1, c)
    };
    Ok([child(-1, -1), child(-1, 1), child(1, -1), child(1, 1)])
}

/// Every cell of dimension `k` at `scale` whose coordinates lie in the box
/// `lo[i] <= u[i] <= hi[i]`, in lexicographic order.
pub fn cells_in_box(scale: i32, lo: &[i64], hi: &[i64], k: usize) -> Vec<Cell> {
    assert_eq!(lo.len(), hi.len());
    let d = lo.len();
    let mut out = Vec::new();
    let mut cur = lo.to_vec();
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return out;
    }
    loop {
        if cur.iter().filter(|u| u.rem_euclid(2) == 1).count() == k {
            out.push(Cell::new(scale, cur.clone()));
        }
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = lo[i];
        }
    }
}

/// Cells of dimension `k` within max-norm distance `radius` of `center`.
pub fn cells_near(center: &Cell, radius: i64, k: usize) -> Vec<Cell> {
    let lo: Vec<i64> = center.coords.iter().map(|u| u - radius).collect();
    let hi: Vec<i64> = center.coords.iter().map(|u| u + radius).collect();
    cells_in_box(center.scale, &lo, &hi, k)
}

/// One representative plaquette per translation class: coordinates in `{0,1}`.
pub fn unit_cell_plaquettes(d: usize, scale: i32) -> Vec<Cell> {
    let mut out = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            let mut u = vec![0; d];
            u[a] = 1;
            u[b] = 1;
            out.push(Cell::new(scale, u));
        }
    }
    out
}

/// The reference plaquette `[1,1,0,...,0]@n`.
pub fn base_plaquette(d: usize, scale: i32) -> Cell {
    let mut u = vec![0; d];
    u[0] = 1;
    u[1] = 1;
    Cell::new(scale, u)
}

/// A lattice symmetry `u -> S u + t` where `S` is a signed permutation matrix:
/// coordinate `i` is sent to axis `perm[i]` with sign `signs[i]`.
///
/// Acting on integer cell coordinates, the symmetry preserves the cell
/// structure iff every translation entry is even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSymmetry {
    perm: Vec<usize>,
    signs: Vec<i8>,
    translation: Vec<i64>,
}

impl SignedSymmetry {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>, translation: Vec<i64>) -> Result<Self> {
        let d = perm.len();
        if signs.len() != d || translation.len() != d {
            return Err(Error::InvalidSymmetry("length mismatch".into()));
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || seen[p] {
                return Err(Error::InvalidSymmetry(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidSymmetry(format!("signs {signs:?} must be +-1")));
        }
        Ok(SignedSymmetry {
            perm,
            signs,
            translation,
        })
    }

    pub fn identity(d: usize) -> Self {
        SignedSymmetry {
            perm: (0..d).collect(),
            signs: vec![1; d],
            translation: vec![0; d],
        }
    }

    pub fn translation(t: Vec<i64>) -> Self {
        let d = t.len();
        SignedSymmetry {
            translation: t,
            ..Self::identity(d)
        }
    }

    /// Interchange of two axes.
    pub fn swap(d: usize, a: usize, b: usize) -> Self {
        let mut g = Self::identity(d);
        g.perm.swap(a, b);
        g
    }

    /// Reflection `u_axis -> center - u_axis`.
    pub fn reflection(d: usize, axis: usize, center: i64) -> Self {
        let mut g = Self::identity(d);
        g.signs[axis] = -1;
        g.translation[axis] = center;
        g
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn translation_vector(&self) -> &[i64] {
        &self.translation
    }

    pub fn is_lattice_preserving(&self) -> bool {
        self.translation.iter().all(|t| t.rem_euclid(2) == 0)
    }

    pub fn apply_point(&self, u: &[i64]) -> Vec<i64> {
        let mut v = vec![0; u.len()];
        for (i, &ui) in u.iter().enumerate() {
            let j = self.perm[i];
            v[j] = i64::from(self.signs[i]) * ui + self.translation[j];
        }
        v
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &SignedSymmetry) -> SignedSymmetry {
        let d = self.dim();
        let mut perm = vec![0; d];
        let mut signs = vec![1; d];
        let mut translation = vec![0; d];
        for i in 0..d {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = self.signs[j] * other.signs[i];
        }
        for j in 0..d {
            let k = self.perm[j];
            translation[k] = i64::from(self.signs[j]) * other.translation[j] + self.translation[k];
        }
        SignedSymmetry {
            perm,
            signs,
            translation,
        }
    }

    pub fn inverse(&self) -> SignedSymmetry {
        let d = self.dim();
        let mut perm = vec![0; d];
        let mut signs = vec![1; d];
        let mut translation = vec![0; d];
        for i in 0..d {
            let j = self.perm[i];
            perm[j] = i;
            signs[j] = self.signs[i];
            translation[i] = -i64::from(self.signs[i]) * self.translation[j];
        }
        SignedSymmetry {
            perm,
            signs,
            translation,
        }
    }

    /// Image of a cell and the orientation sign of the induced map: the
    /// product of the axis signs over the cell's spanning axes times the
    /// parity of the permutation that re-sorts their images. For plaquettes
    /// this is `-1` exactly when the map reverses the canonical orientation
    /// of the plane. Vertices get `+1`.
    pub fn act(&self, cell: &Cell) -> Result<(Cell, i8)> {
        if cell.dim_ambient() != self.dim() {
            return Err(Error::AmbientMismatch(cell.dim_ambient(), self.dim()));
        }
        if !self.is_lattice_preserving() {
            return Err(Error::NotLatticePreserving(format!(
                "translation {:?} has odd entries",
                self.translation
            )));
        }
        let image = Cell::new(cell.scale, self.apply_point(&cell.coords));
        let axes = cell.odd_axes();
        let mut sign: i8 = 1;
        for &a in &axes {
            sign *= self.signs[a];
        }
        for x in 0..axes.len() {
            for y in x + 1..axes.len() {
                if self.perm[axes[x]] > self.perm[axes[y]] {
                    sign = -sign;
                }
            }
        }
        Ok((image, sign))
    }
}

impl fmt::Display for SignedSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "perm={:?} signs={:?} t={:?}",
            self.perm, self.signs, self.translation
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Cell {
        s.parse().unwrap()
    }

    #[test]
    fn dimension_counts_odd_coordinates() {
        assert_eq!(c("[2,0,4]@0").dimension(), 0);
        assert_eq!(c("[1,1,0]@0").dimension(), 2);
        assert_eq!(c("[1,1,1,1]@0").dimension(), 4);
        assert_eq!(c("[-1,0,-3]@2").dimension(), 2);
    }

    #[test]
    fn literal_round_trip() {
        let cell = c("[1, -2, 3]@-1");
        assert_eq!(cell.to_string(), "[1,-2,3]@-1");
        assert_eq!(c("[1,1,0]").scale(), 0);
        assert!("1,1,0".parse::<Cell>().is_err());
        assert!("[]@0".parse::<Cell>().is_err());
        assert!("[1,a]@0".parse::<Cell>().is_err());
    }

    #[test]
    fn boundary_of_unit_cube() {
        let expected: SignedChain = [
            ("[0,1,1]@0", -1),
            ("[2,1,1]@0", 1),
            ("[1,0,1]@0", 1),
            ("[1,2,1]@0", -1),
            ("[1,1,0]@0", -1),
            ("[1,1,2]@0", 1),
        ]
        .into_iter()
        .map(|(s, k)| (c(s), k))
        .collect();
        assert_eq!(boundary(&c("[1,1,1]@0")).unwrap(), expected);
    }

    #[test]
    fn boundary_of_edge_and_vertex() {
        let expected: SignedChain = [(c("[0,0,0]@0"), -1), (c("[2,0,0]@0"), 1)].into_iter().collect();
        assert_eq!(boundary(&c("[1,0,0]@0")).unwrap(), expected);
        assert_eq!(boundary(&c("[0,0,0]@0")), Err(Error::VertexBoundary));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let b = boundary(&c("[1,1,1]@0")).unwrap();
        assert!(b.boundary().unwrap().is_empty());
    }

    #[test]
    fn boundary_of_four_dimensional_cube_without_first_axis() {
        // [2i, 1+2j, 1+2k, 1+2l] with i = j = k = l = 1
        let cube = c("[2,3,3,3]@0");
        let expected: SignedChain = [
            ("[2,2,3,3]@0", -1),
            ("[2,4,3,3]@0", 1),
            ("[2,3,2,3]@0", 1),
            ("[2,3,4,3]@0", -1),
            ("[2,3,3,2]@0", -1),
            ("[2,3,3,4]@0", 1),
        ]
        .into_iter()
        .map(|(s, k)| (c(s), k))
        .collect();
        assert_eq!(boundary(&cube).unwrap(), expected);
    }

    #[test]
    fn children_of_unit_plaquette() {
        let kids = children(&c("[1,1,0]@0")).unwrap();
        let mut got: Vec<String> = kids.iter().map(|k| k.to_string()).collect();
        got.sort();
        assert_eq!(got, ["[1,1,0]@1", "[1,3,0]@1", "[3,1,0]@1", "[3,3,0]@1"]);
        assert!(children(&c("[1,1,1]@0")).is_err());
    }

    #[test]
    fn swap_reverses_plane_containing_both_axes() {
        let g = SignedSymmetry::swap(3, 0, 1);
        assert_eq!(g.act(&c("[1,1,0]@0")).unwrap(), (c("[1,1,0]@0"), -1));
        assert_eq!(g.act(&c("[0,1,1]@0")).unwrap(), (c("[1,0,1]@0"), 1));
        let id = SignedSymmetry::identity(3);
        assert_eq!(id.act(&c("[3,5,2]@1")).unwrap(), (c("[3,5,2]@1"), 1));
    }

    #[test]
    fn odd_translation_is_rejected() {
        let g = SignedSymmetry::translation(vec![1, 0, 0]);
        assert!(matches!(
            g.act(&c("[1,1,0]@0")),
            Err(Error::NotLatticePreserving(_))
        ));
        assert!(SignedSymmetry::new(vec![0, 0], vec![1, 1], vec![0, 0]).is_err());
    }

    #[test]
    fn reflections_flip_plaquettes_in_their_plane() {
        let r = SignedSymmetry::reflection(3, 0, 2);
        assert_eq!(r.act(&c("[1,1,0]@0")).unwrap(), (c("[1,1,0]@0"), -1));
        assert_eq!(r.act(&c("[0,1,1]@0")).unwrap(), (c("[2,1,1]@0"), 1));
    }

    #[test]
    fn box_enumeration() {
        let cubes = cells_in_box(0, &[-1, -1, -1], &[1, 1, 1], 3);
        assert_eq!(cubes.len(), 8);
        let plaqs = cells_near(&c("[1,1,0]@0"), 0, 2);
        assert_eq!(plaqs, vec![c("[1,1,0]@0")]);
        assert_eq!(unit_cell_plaquettes(4, 0).len(), 6);
    }
}
