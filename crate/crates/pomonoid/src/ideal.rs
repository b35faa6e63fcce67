//! Ideal classification, generated order ideals, radicals, quotients, and
//! ideal enumeration.
//!
//! An order ideal is a downward-closed subset; a monoid ideal is an
//! absorbing subset. In a positively ordered monoid every order ideal is a
//! monoid ideal (because `fg <= f` always), but not conversely. The empty
//! set counts as both by convention.

use std::collections::HashSet;

use crate::monoid::{structural_predicates, FiniteMonoid};
use crate::projection::EndoMap;
use crate::subset::ElementSubset;
use crate::{Error, Result};

/// Classification flags for a subset of a monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealFlags {
    pub monoid_ideal: bool,
    pub order_ideal: bool,
    pub radical: bool,
    pub prime: bool,
    pub dedekind: bool,
}

/// A subset together with its classification and, when the subset is a
/// Dedekind ideal, the order projection onto it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSubset {
    pub set: ElementSubset,
    pub flags: IdealFlags,
    pub dedekind_projection: Option<EndoMap>,
}

pub fn is_monoid_ideal(m: &FiniteMonoid, s: &ElementSubset) -> bool {
    s.iter()
        .all(|f| (0..m.len()).all(|g| s.contains(m.op(f, g))))
}

pub fn is_order_ideal(m: &FiniteMonoid, s: &ElementSubset) -> bool {
    s.iter()
        .all(|f| (0..m.len()).all(|g| !m.leq(g, f) || s.contains(g)))
}

/// Whether `f^n` lies in `s` for some `n >= 1`, decided by iterating powers
/// until they cycle.
pub fn some_power_in(m: &FiniteMonoid, s: &ElementSubset, f: usize) -> bool {
    let mut seen = vec![false; m.len()];
    let mut acc = f;
    while !seen[acc] {
        if s.contains(acc) {
            return true;
        }
        seen[acc] = true;
        acc = m.op(acc, f);
    }
    false
}

pub fn is_radical(m: &FiniteMonoid, s: &ElementSubset) -> bool {
    (0..m.len()).all(|f| s.contains(f) || !some_power_in(m, s, f))
}

/// The algebraic prime condition `fg in I  =>  f in I or g in I`, including
/// the diagonal case `f == g` (so prime implies radical).
pub fn is_prime(m: &FiniteMonoid, s: &ElementSubset) -> bool {
    for f in 0..m.len() {
        for g in 0..m.len() {
            if s.contains(m.op(f, g)) && !s.contains(f) && !s.contains(g) {
                return false;
            }
        }
    }
    true
}

/// If `s` is a Dedekind ideal, the map sending `f` to the greatest element
/// of `s` below `f`; otherwise the first `f` whose trace has no greatest
/// element.
pub fn dedekind_map(m: &FiniteMonoid, s: &ElementSubset) -> std::result::Result<EndoMap, usize> {
    let mut image = Vec::with_capacity(m.len());
    for f in 0..m.len() {
        let trace: Vec<usize> = s.iter().filter(|&g| m.leq(g, f)).collect();
        let greatest = trace
            .iter()
            .copied()
            .find(|&g| trace.iter().all(|&h| m.leq(h, g)));
        match greatest {
            Some(g) => image.push(g),
            None => return Err(f),
        }
    }
    Ok(EndoMap::new(image))
}

/// Computes all five classification flags for a subset by direct checks.
pub fn classify(m: &FiniteMonoid, s: &ElementSubset) -> IdealSubset {
    let dedekind = dedekind_map(m, s);
    IdealSubset {
        flags: IdealFlags {
            monoid_ideal: is_monoid_ideal(m, s),
            order_ideal: is_order_ideal(m, s),
            radical: is_radical(m, s),
            prime: is_prime(m, s),
            dedekind: dedekind.is_ok(),
        },
        dedekind_projection: dedekind.ok(),
        set: s.clone(),
    }
}

/// The order ideal generated by `a`: the union of the principal down-sets
/// of its members. A closure: idempotent and monotone in `a`.
pub fn order_ideal_generated(m: &FiniteMonoid, a: &ElementSubset) -> IdealSubset {
    let mut out = ElementSubset::empty(m.len());
    for f in a.iter() {
        for g in 0..m.len() {
            if m.leq(g, f) {
                out.insert(g);
            }
        }
    }
    classify(m, &out)
}

/// The radical of an ideal: everything some power of which lies in the
/// ideal. Requires the input to be a monoid ideal or an order ideal.
pub fn radical_of(m: &FiniteMonoid, i: &ElementSubset) -> Result<IdealSubset> {
    if !is_monoid_ideal(m, i) && !is_order_ideal(m, i) {
        return Err(Error::hypothesis("radical requires an ideal"));
    }
    let mut out = ElementSubset::empty(m.len());
    for f in 0..m.len() {
        if some_power_in(m, i, f) {
            out.insert(f);
        }
    }
    Ok(classify(m, &out))
}

/// The relation matrix of the quotient preorder: `geq[f][g]` holds when
/// `fh in I` implies `gh in I` for every `h`. Computed by the literal
/// quantifier, O(n^3).
pub fn quotient_geq(m: &FiniteMonoid, i: &ElementSubset) -> Vec<Vec<bool>> {
    let n = m.len();
    let mut geq = vec![vec![false; n]; n];
    for f in 0..n {
        for g in 0..n {
            geq[f][g] = (0..n).all(|h| !i.contains(m.op(f, h)) || i.contains(m.op(g, h)));
        }
    }
    geq
}

/// Verification results recorded while building a quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientChecks {
    /// The quotient satisfies the top-unit axiom.
    pub po_monoid: bool,
    /// The canonical map is a monoid homomorphism.
    pub homomorphism: bool,
    /// The canonical map preserves the order of the base monoid.
    pub order_preserving: bool,
    /// The input is an order ideal (must match `order_preserving`).
    pub order_ideal: bool,
    /// The quotient has no nonzero nilpotents.
    pub not_nilpotent: bool,
    /// The input is radical (must match `not_nilpotent`).
    pub radical: bool,
}

/// A monoid quotient by the ideal-induced preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMonoid {
    /// Classes as sorted element lists, ordered by least representative.
    pub classes: Vec<Vec<usize>>,
    /// Element index -> class index.
    pub class_of: Vec<usize>,
    /// The quotient itself, with classes labelled by their representative.
    pub monoid: FiniteMonoid,
    pub checks: QuotientChecks,
}

/// Builds `M/I` for a monoid ideal `I`, verifying well-definedness of the
/// induced operation and order, the homomorphism property, and the two
/// equivalences (order preservation vs. order ideal, nilpotence-freeness
/// vs. radicality). Any verification failure is a certificate error.
pub fn quotient(m: &FiniteMonoid, i: &ElementSubset) -> Result<QuotientMonoid> {
    if !is_monoid_ideal(m, i) {
        return Err(Error::hypothesis(
            "quotient requires a monoid ideal (the quotient would lose the top-unit axiom)",
        ));
    }
    let n = m.len();
    let geq = quotient_geq(m, i);

    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for f in 0..n {
        if class_of[f] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (f..n).filter(|&g| geq[f][g] && geq[g][f]).collect();
        let idx = classes.len();
        for &g in &members {
            class_of[g] = idx;
        }
        classes.push(members);
    }

    let k = classes.len();
    let mut op = vec![vec![0; k]; k];
    let mut leq = vec![vec![false; k]; k];
    let mut homomorphism = true;
    for a in 0..k {
        for b in 0..k {
            op[a][b] = class_of[m.op(classes[a][0], classes[b][0])];
            // class order: [f] <= [g] iff g >=_I f
            leq[a][b] = geq[classes[b][0]][classes[a][0]];
        }
    }
    // Well-definedness: the operation and order must not depend on
    // representatives.
    for a in 0..k {
        for b in 0..k {
            for &f in &classes[a] {
                for &g in &classes[b] {
                    if class_of[m.op(f, g)] != op[a][b] {
                        homomorphism = false;
                    }
                    if (geq[g][f]) != leq[a][b] {
                        homomorphism = false;
                    }
                }
            }
        }
    }

    let unit = class_of[m.unit()];
    let zero = class_of[m.zero()];
    let po_monoid = (0..k).all(|a| leq[a][unit]) && (0..k).all(|a| leq[zero][a]);
    let elements: Vec<String> = classes.iter().map(|c| m.name(c[0]).to_string()).collect();
    let qm = FiniteMonoid::new(elements, op, leq, unit, zero)?;

    let order_preserving =
        (0..n).all(|f| (0..n).all(|g| !m.leq(f, g) || qm.leq(class_of[f], class_of[g])));
    let order_ideal = is_order_ideal(m, i);
    let not_nilpotent = structural_predicates(&qm).not_nilpotent;
    let radical = is_radical(m, i);

    let checks = QuotientChecks {
        po_monoid,
        homomorphism,
        order_preserving,
        order_ideal,
        not_nilpotent,
        radical,
    };
    if !po_monoid {
        return Err(Error::paper_check(
            "quotient by a monoid ideal lost the top-unit axiom",
        ));
    }
    if !homomorphism {
        return Err(Error::paper_check(
            "quotient operation or order not well defined on classes",
        ));
    }
    if order_preserving != order_ideal {
        return Err(Error::paper_check(
            "order preservation of the canonical map disagrees with the order-ideal flag",
        ));
    }
    if not_nilpotent != radical {
        return Err(Error::paper_check(
            "nilpotence-freeness of the quotient disagrees with radicality",
        ));
    }
    Ok(QuotientMonoid {
        classes,
        class_of,
        monoid: qm,
        checks,
    })
}

/// Intersection or union of a family of order ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyMode {
    Intersect,
    Union,
}

/// Antichain-size bookkeeping attached to a family operation: the kappa of
/// the result, the kappas of the inputs, and (for intersections) the sum
/// bound `1 + sum (kappa_i - 1)` on the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyKappaReport {
    pub kappa_result: usize,
    pub kappa_inputs: Vec<usize>,
    pub intersect_bound: Option<usize>,
    pub bound_holds: bool,
}

/// Intersects or unions order ideals and reports the kappa bookkeeping.
/// For intersections the result kappa is checked against the sum bound.
pub fn family_ops(
    m: &FiniteMonoid,
    ideals: &[ElementSubset],
    mode: FamilyMode,
) -> Result<(IdealSubset, FamilyKappaReport)> {
    if ideals.is_empty() {
        return Err(Error::hypothesis(
            "family operation needs at least one ideal",
        ));
    }
    for (pos, i) in ideals.iter().enumerate() {
        if !is_order_ideal(m, i) {
            return Err(Error::hypothesis(format!(
                "family member {pos} is not an order ideal"
            )));
        }
    }
    let mut acc = ideals[0].clone();
    for i in &ideals[1..] {
        acc = match mode {
            FamilyMode::Intersect => acc.intersect(i),
            FamilyMode::Union => acc.union(i),
        };
    }
    let full = ElementSubset::full(m.len());
    let kappa_result = crate::kappa::kappa(m, &full, &acc).k;
    let kappa_inputs: Vec<usize> = ideals
        .iter()
        .map(|i| crate::kappa::kappa(m, &full, i).k)
        .collect();
    let (intersect_bound, bound_holds) = match mode {
        FamilyMode::Intersect => {
            let bound = 1 + kappa_inputs.iter().map(|k| k - 1).sum::<usize>();
            (Some(bound), kappa_result <= bound)
        }
        FamilyMode::Union => (None, true),
    };
    if !bound_holds {
        return Err(Error::paper_check(
            "intersection kappa exceeded the antichain sum bound",
        ));
    }
    Ok((
        classify(m, &acc),
        FamilyKappaReport {
            kappa_result,
            kappa_inputs,
            intersect_bound,
            bound_holds,
        },
    ))
}

/// Which class of ideals to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    /// All downward-closed subsets.
    Order,
    /// All absorbing subsets (down-sets of the divisibility preorder).
    Monoid,
    /// Order ideals satisfying the prime condition.
    Prime,
    /// Order ideals satisfying the radical condition.
    Radical,
    /// Order ideals that are Dedekind.
    Dedekind,
}

/// Enumerates all ideals of the requested kind in shortlex order
/// (cardinality, then member list). Bails out when more than `limit`
/// down-sets would be produced.
pub fn enumerate_ideals(
    m: &FiniteMonoid,
    kind: IdealKind,
    limit: usize,
) -> Result<Vec<IdealSubset>> {
    let sets = match kind {
        IdealKind::Monoid => {
            // Monoid ideals are exactly the down-sets of the divisibility
            // preorder g <=div f iff f divides g.
            let n = m.len();
            let mut div = vec![vec![false; n]; n];
            for f in 0..n {
                for h in 0..n {
                    div[m.op(f, h)][f] = true;
                }
            }
            enumerate_down_sets(&div, limit)?
        }
        _ => {
            let n = m.len();
            let mut below = vec![vec![false; n]; n];
            for a in 0..n {
                for b in 0..n {
                    below[a][b] = m.leq(a, b);
                }
            }
            enumerate_down_sets(&below, limit)?
        }
    };
    let mut out: Vec<IdealSubset> = sets
        .into_iter()
        .map(|s| classify(m, &s))
        .filter(|i| match kind {
            IdealKind::Order => true,
            IdealKind::Monoid => true,
            IdealKind::Prime => i.flags.prime,
            IdealKind::Radical => i.flags.radical,
            IdealKind::Dedekind => i.flags.dedekind,
        })
        .collect();
    out.sort_by_key(|i| i.set.shortlex_key());
    Ok(out)
}

/// All subsets closed downward under the given reflexive relation
/// (`below[a][b]` meaning `b` in the set forces `a` in). Works for
/// preorders: mutually related elements enter together.
fn enumerate_down_sets(below: &[Vec<bool>], limit: usize) -> Result<Vec<ElementSubset>> {
    let n = below.len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out: Vec<ElementSubset> = Vec::new();
    let mut work = vec![ElementSubset::empty(n)];
    seen.insert(vec![]);
    while let Some(d) = work.pop() {
        out.push(d.clone());
        if out.len() > limit {
            return Err(Error::guard(
                "ideal enumeration",
                out.len() as u64,
                limit as u64,
            ));
        }
        for x in 0..n {
            if d.contains(x) {
                continue;
            }
            // Add x together with everything mutually related to it.
            let mut next = d.clone();
            for y in 0..n {
                if below[y][x] && below[x][y] {
                    next.insert(y);
                }
            }
            // Only keep the step if it lands on a down-closed set; larger
            // down-sets are reached through intermediate ones.
            let closed = next
                .iter()
                .all(|f| (0..n).all(|g| !below[g][f] || next.contains(g)));
            if !closed {
                continue;
            }
            let key = next.members();
            if seen.insert(key) {
                work.push(next);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{boolean_algebra, capped_exponent, chain};

    fn b3_subset(indices: &[usize]) -> ElementSubset {
        ElementSubset::from_indices(8, indices).unwrap()
    }

    #[test]
    fn classify_bottom_of_boolean() {
        let b3 = boolean_algebra(3).unwrap();
        let s = b3_subset(&[0]);
        let c = classify(&b3, &s);
        assert!(c.flags.monoid_ideal);
        assert!(c.flags.order_ideal);
        assert!(c.flags.radical);
        assert!(!c.flags.prime, "atoms {{a}},{{b}} meet to the bottom");
        assert!(c.flags.dedekind);
        let p = c.dedekind_projection.unwrap();
        assert!(p.image().iter().all(|&v| v == 0));
    }

    #[test]
    fn classify_improper_ideal_all_true() {
        let b3 = boolean_algebra(3).unwrap();
        let c = classify(&b3, &ElementSubset::full(8));
        assert!(c.flags.monoid_ideal && c.flags.order_ideal);
        assert!(c.flags.radical && c.flags.prime && c.flags.dedekind);
    }

    #[test]
    fn generated_ideal_of_capped_q_is_radical() {
        let e32 = capped_exponent(3, 2).unwrap();
        // q = (1,1,1) has row-major index 13 in base 3.
        let q = 13;
        let iq = order_ideal_generated(&e32, &ElementSubset::singleton(27, q));
        assert!(iq.flags.order_ideal);
        assert!(iq.flags.radical);
        // I(q) = exponent vectors with every coordinate >= 1.
        assert_eq!(iq.set.card(), 8);
        for f in iq.set.iter() {
            let coords = crate::monoid::capped_coords(3, 2, f);
            assert!(coords.iter().all(|&c| c >= 1));
        }
    }

    #[test]
    fn generated_ideal_closure_laws() {
        let b3 = boolean_algebra(3).unwrap();
        assert!(order_ideal_generated(&b3, &ElementSubset::empty(8))
            .set
            .is_empty());
        let a = b3_subset(&[3]); // {a,b}
        let ia = order_ideal_generated(&b3, &a);
        assert_eq!(ia.set.members(), vec![0, 1, 2, 3]);
        // idempotent
        let iia = order_ideal_generated(&b3, &ia.set);
        assert_eq!(iia.set, ia.set);
        // A = M gives M
        assert_eq!(
            order_ideal_generated(&b3, &ElementSubset::full(8))
                .set
                .card(),
            8
        );
    }

    #[test]
    fn radical_of_zero_in_capped() {
        let e22 = capped_exponent(2, 2).unwrap();
        let zero_only = ElementSubset::singleton(9, e22.zero());
        let r = radical_of(&e22, &zero_only).unwrap();
        // Everything with all coordinates >= 1 is nilpotent.
        for f in 0..9 {
            let coords = crate::monoid::capped_coords(2, 2, f);
            assert_eq!(r.set.contains(f), coords.iter().all(|&c| c >= 1));
        }
        assert!(r.flags.radical);
    }

    #[test]
    fn radical_fixes_ideals_of_idempotent_monoids() {
        let b3 = boolean_algebra(3).unwrap();
        for i in enumerate_ideals(&b3, IdealKind::Order, 1 << 12).unwrap() {
            let r = radical_of(&b3, &i.set).unwrap();
            assert_eq!(r.set, i.set);
        }
    }

    #[test]
    fn radical_is_a_closure() {
        let e22 = capped_exponent(2, 2).unwrap();
        for i in enumerate_ideals(&e22, IdealKind::Order, 1 << 12).unwrap() {
            let r = radical_of(&e22, &i.set).unwrap();
            assert!(i.set.is_subset_of(&r.set));
            let rr = radical_of(&e22, &r.set).unwrap();
            assert_eq!(rr.set, r.set);
            assert_eq!(i.flags.radical, r.set == i.set);
        }
    }

    #[test]
    fn radical_rejects_non_ideal() {
        let b3 = boolean_algebra(3).unwrap();
        // {full} is not down-closed and not absorbing.
        let s = b3_subset(&[7]);
        assert!(matches!(radical_of(&b3, &s), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn quotient_by_bottom_of_boolean_is_isomorphic() {
        let b3 = boolean_algebra(3).unwrap();
        let q = quotient(&b3, &b3_subset(&[0])).unwrap();
        assert_eq!(q.classes.len(), 8);
        assert!(q.checks.order_preserving);
        assert!(q.checks.not_nilpotent);
    }

    #[test]
    fn quotient_by_everything_is_trivial() {
        let b3 = boolean_algebra(3).unwrap();
        let q = quotient(&b3, &ElementSubset::full(8)).unwrap();
        assert_eq!(q.classes.len(), 1);
    }

    #[test]
    fn quotient_by_radical_ideal_not_nilpotent() {
        let e32 = capped_exponent(3, 2).unwrap();
        let iq = order_ideal_generated(&e32, &ElementSubset::singleton(27, 13));
        let q = quotient(&e32, &iq.set).unwrap();
        assert!(q.checks.not_nilpotent);
        assert!(q.checks.radical);
    }

    #[test]
    fn quotient_rejects_non_monoid_ideal() {
        let b3 = boolean_algebra(3).unwrap();
        let s = b3_subset(&[7]);
        assert!(matches!(quotient(&b3, &s), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn quotient_canonical_map_preserves_natural_order() {
        // Our generated monoids carry the natural order, so every monoid
        // ideal is an order ideal there and the canonical map preserves
        // order for each of them.
        let e22 = capped_exponent(2, 2).unwrap();
        for i in enumerate_ideals(&e22, IdealKind::Monoid, 1 << 12).unwrap() {
            let q = quotient(&e22, &i.set).unwrap();
            assert!(q.checks.order_preserving);
        }
    }

    #[test]
    fn family_ops_examples() {
        let b3 = boolean_algebra(3).unwrap();
        let ia = order_ideal_generated(&b3, &b3_subset(&[1])).set; // {∅,{a}}
        let ib = order_ideal_generated(&b3, &b3_subset(&[2])).set; // {∅,{b}}
        let (u, _) = family_ops(&b3, &[ia.clone(), ib.clone()], FamilyMode::Union).unwrap();
        assert_eq!(u.set.members(), vec![0, 1, 2]);
        assert!(u.flags.order_ideal);
        let (i, rep) = family_ops(&b3, &[ia.clone(), ib], FamilyMode::Intersect).unwrap();
        assert_eq!(i.set.members(), vec![0]);
        assert!(rep.bound_holds);
        // Same ideal twice intersects to itself with the same kappa.
        let (same, rep2) = family_ops(&b3, &[ia.clone(), ia], FamilyMode::Intersect).unwrap();
        assert_eq!(same.set.members(), vec![0, 1]);
        assert_eq!(rep2.kappa_result, rep2.kappa_inputs[0]);
    }

    #[test]
    fn family_ops_rejects_non_order_ideal() {
        let b3 = boolean_algebra(3).unwrap();
        let bad = b3_subset(&[7]);
        assert!(family_ops(&b3, &[bad], FamilyMode::Union).is_err());
    }

    #[test]
    fn enumerate_order_ideals_of_chain() {
        let c3 = chain(3).unwrap();
        let ideals = enumerate_ideals(&c3, IdealKind::Order, 1 << 12).unwrap();
        let sets: Vec<Vec<usize>> = ideals.iter().map(|i| i.set.members()).collect();
        assert_eq!(sets, vec![vec![], vec![0], vec![0, 1], vec![0, 1, 2]]);
    }

    #[test]
    fn enumerate_order_ideals_of_diamond() {
        let b2 = boolean_algebra(2).unwrap();
        let ideals = enumerate_ideals(&b2, IdealKind::Order, 1 << 12).unwrap();
        assert_eq!(ideals.len(), 6);
    }

    #[test]
    fn order_ideal_enumeration_matches_brute_force() {
        for m in [
            chain(4).unwrap(),
            boolean_algebra(2).unwrap(),
            capped_exponent(1, 2).unwrap(),
            capped_exponent(2, 1).unwrap(),
        ] {
            let n = m.len();
            let mut expected = Vec::new();
            for mask in 0u32..(1 << n) {
                let s = ElementSubset::from_mask((0..n).map(|i| mask >> i & 1 == 1).collect());
                if is_order_ideal(&m, &s) {
                    expected.push(s);
                }
            }
            expected.sort_by_key(|s| s.shortlex_key());
            let got: Vec<ElementSubset> = enumerate_ideals(&m, IdealKind::Order, 1 << 16)
                .unwrap()
                .into_iter()
                .map(|i| i.set)
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn monoid_ideal_enumeration_matches_brute_force() {
        for m in [
            chain(3).unwrap(),
            boolean_algebra(2).unwrap(),
            capped_exponent(2, 1).unwrap(),
            capped_exponent(1, 2).unwrap(),
        ] {
            let n = m.len();
            let mut expected = Vec::new();
            for mask in 0u32..(1 << n) {
                let s = ElementSubset::from_mask((0..n).map(|i| mask >> i & 1 == 1).collect());
                if is_monoid_ideal(&m, &s) {
                    expected.push(s);
                }
            }
            expected.sort_by_key(|s| s.shortlex_key());
            let got: Vec<ElementSubset> = enumerate_ideals(&m, IdealKind::Monoid, 1 << 16)
                .unwrap()
                .into_iter()
                .map(|i| i.set)
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn monoid_and_order_ideals_coincide_on_idempotent_natural_order() {
        for m in [chain(4).unwrap(), boolean_algebra(3).unwrap()] {
            let order: Vec<_> = enumerate_ideals(&m, IdealKind::Order, 1 << 12)
                .unwrap()
                .into_iter()
                .map(|i| i.set)
                .collect();
            let monoid: Vec<_> = enumerate_ideals(&m, IdealKind::Monoid, 1 << 12)
                .unwrap()
                .into_iter()
                .map(|i| i.set)
                .collect();
            assert_eq!(order, monoid);
        }
    }

    #[test]
    fn prime_ideals_of_diamond() {
        let b2 = boolean_algebra(2).unwrap();
        let primes = enumerate_ideals(&b2, IdealKind::Prime, 1 << 12).unwrap();
        let sets: Vec<Vec<usize>> = primes.iter().map(|i| i.set.members()).collect();
        // ∅, the two atom down-sets, everything-but-top, and M.
        assert_eq!(
            sets,
            vec![
                vec![],
                vec![0, 1],
                vec![0, 2],
                vec![0, 1, 2],
                vec![0, 1, 2, 3]
            ]
        );
    }

    #[test]
    fn empty_set_is_ideal_by_convention() {
        let b2 = boolean_algebra(2).unwrap();
        let c = classify(&b2, &ElementSubset::empty(4));
        assert!(c.flags.monoid_ideal);
        assert!(c.flags.order_ideal);
        assert!(c.flags.radical);
        assert!(c.flags.prime);
        assert!(!c.flags.dedekind, "the empty set is not a projection range");
    }

    #[test]
    fn order_ideals_are_monoid_ideals() {
        for m in [
            chain(4).unwrap(),
            boolean_algebra(3).unwrap(),
            capped_exponent(2, 2).unwrap(),
        ] {
            for i in enumerate_ideals(&m, IdealKind::Order, 1 << 12).unwrap() {
                assert!(i.flags.monoid_ideal);
            }
        }
    }
}
