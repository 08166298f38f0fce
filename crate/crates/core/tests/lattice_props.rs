use std::collections::BTreeSet;

use holoflow_core::lattice::{boundary, children, Cell, SignedChain, SignedSymmetry};
use proptest::prelude::*;

fn cell(d: usize) -> impl Strategy<Value = Cell> {
    (-2i32..=2, prop::collection::vec(-9i64..=9, d)).prop_map(|(n, u)| Cell::new(n, u))
}

fn plaquette(d: usize) -> impl Strategy<Value = Cell> {
    (cell(d), prop::sample::subsequence((0..d).collect::<Vec<_>>(), 2)).prop_map(|(c, plane)| {
        let u = c
            .coords()
            .iter()
            .enumerate()
            .map(|(i, &x)| {
                let odd = plane.contains(&i);
                if (x.rem_euclid(2) == 1) == odd {
                    x
                } else {
                    x + 1
                }
            })
            .collect();
        c.with_coords(u)
    })
}

fn symmetry(d: usize) -> impl Strategy<Value = SignedSymmetry> {
    (
        Just((0..d).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(prop::bool::ANY, d),
        prop::collection::vec(-5i64..=5, d),
    )
        .prop_map(|(perm, signs, t)| {
            let signs = signs.into_iter().map(|s| if s { 1 } else { -1 }).collect();
            let t = t.into_iter().map(|x| 2 * x).collect();
            SignedSymmetry::new(perm, signs, t).unwrap()
        })
}

fn with_dim<S, F>(f: F) -> impl Strategy<Value = S::Value>
where
    S: Strategy,
    F: Fn(usize) -> S + Clone + 'static,
{
    (3usize..=5).prop_flat_map(f)
}

/// Image of a chain, signs included.
fn act_chain(g: &SignedSymmetry, chain: &SignedChain) -> SignedChain {
    let mut out = SignedChain::new();
    for (c, k) in chain.iter() {
        let (img, s) = g.act(c).unwrap();
        out.add(img, k * i64::from(s));
    }
    out
}

/// Closed cell as an integer box, `(lo, hi)` per axis, in coordinate units
/// of scale `unit_scale` (which must be at least as fine as the cell).
fn extent(c: &Cell, unit_scale: i32) -> Vec<(i64, i64)> {
    let factor = 1i64 << (unit_scale - c.scale());
    c.coords()
        .iter()
        .map(|&u| {
            if u.rem_euclid(2) == 1 {
                (u - 1, u + 1)
            } else {
                (u, u)
            }
        })
        .map(|(lo, hi)| (lo * factor, hi * factor))
        .collect()
}

proptest! {
    #[test]
    fn boundary_of_boundary_vanishes(c in with_dim(cell)) {
        prop_assume!(c.dimension() >= 2);
        let mut chain = SignedChain::new();
        chain.add(c, 1);
        prop_assert!(chain.boundary().unwrap().boundary().unwrap().is_empty());
    }

    #[test]
    fn boundary_has_twice_dimension_faces(c in with_dim(cell)) {
        prop_assume!(c.dimension() >= 1);
        let db = boundary(&c).unwrap();
        prop_assert_eq!(db.len(), 2 * c.dimension());
        for (f, k) in db.iter() {
            prop_assert_eq!(f.dimension() + 1, c.dimension());
            prop_assert_eq!(k.abs(), 1);
            prop_assert_eq!(f.distance(&c), 1);
        }
    }

    #[test]
    fn act_is_a_group_action(
        (g, h, c) in with_dim(|d| (symmetry(d), symmetry(d), cell(d)))
    ) {
        let (hc, sh) = h.act(&c).unwrap();
        let (ghc, sg) = g.act(&hc).unwrap();
        let (direct, s) = g.compose(&h).act(&c).unwrap();
        prop_assert_eq!(&direct, &ghc);
        prop_assert_eq!(s, sg * sh);
    }

    #[test]
    fn inverse_undoes_sign(
        (g, c) in with_dim(|d| (symmetry(d), cell(d)))
    ) {
        let (gc, s) = g.act(&c).unwrap();
        let (back, t) = g.inverse().act(&gc).unwrap();
        prop_assert_eq!(back, c);
        prop_assert_eq!(s * t, 1);
    }

    #[test]
    fn boundary_commutes_with_symmetries(
        (g, c) in with_dim(|d| (symmetry(d), cell(d)))
    ) {
        prop_assume!(c.dimension() >= 1);
        let mut chain = SignedChain::new();
        chain.add(c, 1);
        let lhs = act_chain(&g, &chain.boundary().unwrap());
        let rhs = act_chain(&g, &chain).boundary().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn act_preserves_dimension_scale_and_distance(
        (g, c, e) in with_dim(|d| (symmetry(d), cell(d), cell(d)))
    ) {
        let e = Cell::new(c.scale(), e.coords().to_vec());
        let (gc, _) = g.act(&c).unwrap();
        let (ge, _) = g.act(&e).unwrap();
        prop_assert_eq!(gc.dimension(), c.dimension());
        prop_assert_eq!(gc.scale(), c.scale());
        prop_assert_eq!(gc.distance(&ge), c.distance(&e));
    }

    #[test]
    fn children_are_the_contained_fine_plaquettes(p in with_dim(plaquette)) {
        // Brute force: every plaquette one scale finer whose closed box lies
        // inside the closed box of `p`.
        let d = p.dim_ambient();
        let outer = extent(&p, p.scale() + 1);
        let center: Vec<i64> = p.coords().iter().map(|u| 2 * u).collect();
        let fine = Cell::new(p.scale() + 1, center);
        let mut found = BTreeSet::new();
        for q in holoflow_core::lattice::cells_near(&fine, 3, 2) {
            let inner = extent(&q, p.scale() + 1);
            if (0..d).all(|i| outer[i].0 <= inner[i].0 && inner[i].1 <= outer[i].1) {
                found.insert(q);
            }
        }
        let kids: BTreeSet<Cell> = children(&p).unwrap().into_iter().collect();
        prop_assert_eq!(kids.len(), 4);
        prop_assert_eq!(found, kids);
    }

    #[test]
    fn children_commute_with_lattice_symmetries(
        (g, p) in with_dim(|d| (symmetry(d), plaquette(d)))
    ) {
        // A scale-n symmetry acts at scale n+1 with doubled translation.
        let fine = SignedSymmetry::new(
            g.perm().to_vec(),
            g.signs().to_vec(),
            g.translation_vector().iter().map(|t| 2 * t).collect(),
        ).unwrap();
        let (gp, s) = g.act(&p).unwrap();
        let lhs: BTreeSet<(Cell, i8)> = children(&gp).unwrap().into_iter().map(|c| (c, s)).collect();
        let rhs: BTreeSet<(Cell, i8)> = children(&p)
            .unwrap()
            .iter()
            .map(|c| fine.act(c).unwrap())
            .collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cell_literal_round_trips(c in with_dim(cell)) {
        let s = c.to_string();
        prop_assert_eq!(s.parse::<Cell>().unwrap(), c);
    }
}

#[test]
fn vertices_have_no_boundary() {
    let v = Cell::new(0, vec![0, 2, -4]);
    assert!(boundary(&v).is_err());
}

#[test]
fn odd_translations_are_rejected() {
    let g = SignedSymmetry::translation(vec![1, 0, 0]);
    assert!(!g.is_lattice_preserving());
    assert!(g.act(&Cell::new(0, vec![1, 1, 0])).is_err());
}
