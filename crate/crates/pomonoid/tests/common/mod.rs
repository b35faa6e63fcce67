//! Shared fixtures for the integration suites: the monoid rosters and the
//! exhaustive antichain oracle.
#![allow(dead_code)] // each suite uses its own slice of the fixtures

use pomonoid::monoid::{
    boolean_algebra, capped_exponent, chain, grid, product_monoid, FiniteMonoid,
};
use pomonoid::subset::ElementSubset;
use pomonoid::DEFAULT_SIZE_GUARD;

/// Test monoids with at most eight elements.
pub fn roster_le8() -> Vec<FiniteMonoid> {
    vec![
        chain(2).unwrap(),
        chain(3).unwrap(),
        chain(5).unwrap(),
        boolean_algebra(2).unwrap(),
        boolean_algebra(3).unwrap(),
        capped_exponent(1, 2).unwrap(),
        capped_exponent(2, 1).unwrap(),
        grid(2, 1).unwrap(),
        product_monoid(&chain(2).unwrap(), 3, DEFAULT_SIZE_GUARD).unwrap(),
    ]
}

/// Test monoids with at most six elements.
pub fn roster_le6() -> Vec<FiniteMonoid> {
    vec![
        chain(2).unwrap(),
        chain(3).unwrap(),
        chain(4).unwrap(),
        boolean_algebra(2).unwrap(),
        capped_exponent(1, 2).unwrap(),
        capped_exponent(2, 1).unwrap(),
        grid(2, 1).unwrap(),
        product_monoid(&chain(2).unwrap(), 2, DEFAULT_SIZE_GUARD).unwrap(),
    ]
}

/// Exhaustive subset-scan oracle for the antichain invariant, limited to
/// twenty vertices. Vertices and pair products are packed into bitmasks so
/// the full 2^v scan stays cheap.
pub fn kappa_oracle(m: &FiniteMonoid, t: &ElementSubset, i: &ElementSubset) -> usize {
    let vertices: Vec<usize> = t.iter().filter(|&f| !i.contains(f)).collect();
    let v = vertices.len();
    assert!(v <= 20, "oracle limited to 20 vertices, got {v}");
    let adj: Vec<u32> = (0..v)
        .map(|a| {
            let mut mask = 0u32;
            for b in 0..v {
                if a != b && i.contains(m.op(vertices[a], vertices[b])) {
                    mask |= 1 << b;
                }
            }
            mask
        })
        .collect();
    let mut best = 0usize;
    for mask in 0u32..(1u32 << v) {
        let mut ok = true;
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if mask & !(1 << a) & !adj[a] != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best + 1
}

/// All subsets of an `n`-element monoid as masks; callers keep `n <= 20`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSubset> {
    (0u32..(1u32 << n))
        .map(move |mask| ElementSubset::from_mask((0..n).map(|b| mask >> b & 1 == 1).collect()))
}
