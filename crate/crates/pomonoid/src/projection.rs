//! Self-maps of a monoid: order projections, monoid projections,
//! translates, the star map and the ideal star.
//!
//! An order projection is an order-preserving contractive map whose range
//! elements are fixed from below (`P(f) >= g` forces `g = P(g)`). A monoid
//! projection relaxes the range condition to `f Q(g) <= Q(fg)`. Translates
//! `T_g(f) = gf` are the base example of monoid projections; order and
//! monoid projections coincide exactly on idempotent monoids.

use crate::monoid::FiniteMonoid;
use crate::subset::ElementSubset;
use crate::{Error, Result};

/// A self-map of a monoid, stored as an image table over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoMap {
    image: Vec<usize>,
}

impl EndoMap {
    pub fn new(image: Vec<usize>) -> Self {
        EndoMap { image }
    }

    pub fn identity(n: usize) -> Self {
        EndoMap {
            image: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        EndoMap {
            image: vec![value; n],
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, f: usize) -> usize {
        self.image[f]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `self` after `other`: `f -> self(other(f))`.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        EndoMap {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    /// The range as a subset.
    pub fn range(&self, n: usize) -> ElementSubset {
        let mut s = ElementSubset::empty(n);
        for &v in &self.image {
            s.insert(v);
        }
        s
    }

    fn check_len(&self, m: &FiniteMonoid) -> Result<()> {
        if self.image.len() != m.len() {
            return Err(Error::structure(format!(
                "endomap has {} entries for a {}-element monoid",
                self.image.len(),
                m.len()
            )));
        }
        if let Some(&bad) = self.image.iter().find(|&&v| v >= m.len()) {
            return Err(Error::structure(format!(
                "endomap value {bad} out of range"
            )));
        }
        Ok(())
    }
}

/// First violated projection law, with the offending elements in canonical
/// scan order. Conditions are scanned in the order: order preservation,
/// contractivity, then the kind-specific law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionViolation {
    /// `f <= g` but `P(f) !<= P(g)`.
    NotOrderPreserving { f: usize, g: usize },
    /// `P(f) !<= f`.
    NotContractive { f: usize },
    /// `P(f) >= g` but `g != P(g)`.
    RangeNotFixed { f: usize, g: usize },
    /// `f Q(g) !<= Q(fg)`.
    NotSubProjective { f: usize, g: usize },
}

fn order_preservation_violation(m: &FiniteMonoid, p: &EndoMap) -> Option<ProjectionViolation> {
    for f in 0..m.len() {
        for g in 0..m.len() {
            if m.leq(f, g) && !m.leq(p.apply(f), p.apply(g)) {
                return Some(ProjectionViolation::NotOrderPreserving { f, g });
            }
        }
    }
    None
}

fn contractive_violation(m: &FiniteMonoid, p: &EndoMap) -> Option<ProjectionViolation> {
    (0..m.len())
        .find(|&f| !m.leq(p.apply(f), f))
        .map(|f| ProjectionViolation::NotContractive { f })
}

/// Checks the order-projection laws, returning the first violation.
pub fn order_projection_violation(
    m: &FiniteMonoid,
    p: &EndoMap,
) -> Result<Option<ProjectionViolation>> {
    p.check_len(m)?;
    if let Some(v) = order_preservation_violation(m, p) {
        return Ok(Some(v));
    }
    if let Some(v) = contractive_violation(m, p) {
        return Ok(Some(v));
    }
    for f in 0..m.len() {
        for g in 0..m.len() {
            if m.leq(g, p.apply(f)) && p.apply(g) != g {
                return Ok(Some(ProjectionViolation::RangeNotFixed { f, g }));
            }
        }
    }
    Ok(None)
}

/// Checks the monoid-projection laws, returning the first violation.
pub fn monoid_projection_violation(
    m: &FiniteMonoid,
    q: &EndoMap,
) -> Result<Option<ProjectionViolation>> {
    q.check_len(m)?;
    if let Some(v) = order_preservation_violation(m, q) {
        return Ok(Some(v));
    }
    if let Some(v) = contractive_violation(m, q) {
        return Ok(Some(v));
    }
    for f in 0..m.len() {
        for g in 0..m.len() {
            if !m.leq(m.op(f, q.apply(g)), q.apply(m.op(f, g))) {
                return Ok(Some(ProjectionViolation::NotSubProjective { f, g }));
            }
        }
    }
    Ok(None)
}

pub fn is_order_projection(m: &FiniteMonoid, p: &EndoMap) -> bool {
    matches!(order_projection_violation(m, p), Ok(None))
}

pub fn is_monoid_projection(m: &FiniteMonoid, q: &EndoMap) -> bool {
    matches!(monoid_projection_violation(m, q), Ok(None))
}

/// The translate `T_g : f -> gf`.
pub fn translate(m: &FiniteMonoid, g: usize) -> EndoMap {
    EndoMap::new((0..m.len()).map(|f| m.op(g, f)).collect())
}

/// All translates in element order, the base family of monoid projections.
pub fn all_translates(m: &FiniteMonoid) -> Vec<EndoMap> {
    (0..m.len()).map(|g| translate(m, g)).collect()
}

/// Which projection family to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjKind {
    Order,
    Monoid,
}

/// Enumerates all projections of the requested kind by backtracking over
/// image choices, candidates restricted to the principal down-set of each
/// argument and partial assignments pruned against order preservation and
/// the kind law. Results are in lexicographic image order. The guard bounds
/// the number of visited assignments.
pub fn enumerate_projections(m: &FiniteMonoid, kind: ProjKind, guard: u64) -> Result<Vec<EndoMap>> {
    let n = m.len();
    let mut image = vec![0usize; n];
    let mut out = Vec::new();
    let mut visited: u64 = 0;
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|f| (0..n).filter(|&v| m.leq(v, f)).collect())
        .collect();

    fn consistent(m: &FiniteMonoid, kind: ProjKind, image: &[usize], cur: usize) -> bool {
        let v = image[cur];
        for g in 0..=cur {
            if m.leq(g, cur) && !m.leq(image[g], v) {
                return false;
            }
            if m.leq(cur, g) && !m.leq(v, image[g]) {
                return false;
            }
        }
        match kind {
            ProjKind::Order => {
                // P(f) >= g forces g fixed, over assigned pairs.
                for g in 0..=cur {
                    if m.leq(g, v) && image[g] != g {
                        return false;
                    }
                    if m.leq(cur, image[g]) && v != cur {
                        return false;
                    }
                }
            }
            ProjKind::Monoid => {
                // f Q(g) <= Q(fg) whenever g and fg are assigned.
                for f in 0..m.len() {
                    let fg = m.op(f, cur);
                    if fg <= cur && !m.leq(m.op(f, v), image[fg]) {
                        return false;
                    }
                    for g in 0..cur {
                        if m.op(f, g) == cur && !m.leq(m.op(f, image[g]), v) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn recurse(
        m: &FiniteMonoid,
        kind: ProjKind,
        candidates: &[Vec<usize>],
        image: &mut Vec<usize>,
        cur: usize,
        visited: &mut u64,
        guard: u64,
        out: &mut Vec<EndoMap>,
    ) -> Result<()> {
        if cur == m.len() {
            let map = EndoMap::new(image.clone());
            let ok = match kind {
                ProjKind::Order => order_projection_violation(m, &map)?.is_none(),
                ProjKind::Monoid => monoid_projection_violation(m, &map)?.is_none(),
            };
            if ok {
                out.push(map);
            }
            return Ok(());
        }
        for &v in &candidates[cur] {
            *visited += 1;
            if *visited > guard {
                return Err(Error::guard("projection enumeration", *visited, guard));
            }
            image[cur] = v;
            if consistent(m, kind, image, cur) {
                recurse(m, kind, candidates, image, cur + 1, visited, guard, out)?;
            }
        }
        Ok(())
    }

    recurse(
        m,
        kind,
        &candidates,
        &mut image,
        0,
        &mut visited,
        guard,
        &mut out,
    )?;
    out.sort();
    Ok(out)
}

/// The monoid of order projections under composition, with pointwise order.
#[derive(Debug, Clone)]
pub struct ProjMonoid {
    /// The order projections, in the canonical enumeration order; index `i`
    /// here is element `i` of `monoid`.
    pub maps: Vec<EndoMap>,
    pub monoid: FiniteMonoid,
}

/// Builds the projection monoid, verifying closure under composition,
/// commutativity, idempotency, and that the identity is the unit and the
/// constant-zero map the least element. A closure failure is a certificate
/// error, never silently repaired.
pub fn proj_monoid(m: &FiniteMonoid, guard: u64) -> Result<ProjMonoid> {
    let maps = enumerate_projections(m, ProjKind::Order, guard)?;
    let k = maps.len();
    let find = |map: &EndoMap| -> Result<usize> {
        maps.binary_search(map)
            .map_err(|_| Error::paper_check("order projections not closed under composition"))
    };
    let mut op = vec![vec![0; k]; k];
    let mut leq = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            let comp = maps[a].compose(&maps[b]);
            op[a][b] = find(&comp)?;
            leq[a][b] = (0..m.len()).all(|f| m.leq(maps[a].apply(f), maps[b].apply(f)));
        }
    }
    for a in 0..k {
        for b in 0..k {
            if op[a][b] != op[b][a] {
                return Err(Error::paper_check(
                    "projection composition is not commutative",
                ));
            }
        }
        if op[a][a] != a {
            return Err(Error::paper_check("an order projection is not idempotent"));
        }
    }
    let unit = find(&EndoMap::identity(m.len()))?;
    let zero = find(&EndoMap::constant(m.len(), m.zero()))?;
    if !(0..k).all(|a| leq[zero][a]) {
        return Err(Error::paper_check("constant-zero projection is not least"));
    }
    let elements: Vec<String> = maps
        .iter()
        .map(|p| {
            format!(
                "P[{}]",
                p.image()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    let monoid = FiniteMonoid::new(elements, op, leq, unit, zero)?;
    let report = crate::monoid::verify_axioms(&monoid);
    if !report.all_ok() {
        return Err(Error::paper_check(
            "projection monoid violates a p.o. monoid axiom",
        ));
    }
    Ok(ProjMonoid { maps, monoid })
}

/// The star map of `x` applied to an order projection: `f -> P(fx)`.
pub fn star_map(m: &FiniteMonoid, x: usize, p: &EndoMap) -> Result<EndoMap> {
    if let Some(v) = order_projection_violation(m, p)? {
        return Err(Error::hypothesis(format!(
            "star map needs an order projection, got violation {v:?}"
        )));
    }
    Ok(EndoMap::new(
        (0..m.len()).map(|f| p.apply(m.op(f, x))).collect(),
    ))
}

/// The ideal star of an order ideal: the order projections whose range lies
/// inside it. Verified to be a monoid ideal in the projection monoid.
pub fn ideal_star(m: &FiniteMonoid, i: &ElementSubset, guard: u64) -> Result<Vec<EndoMap>> {
    if !crate::ideal::is_order_ideal(m, i) {
        return Err(Error::hypothesis("ideal star requires an order ideal"));
    }
    let pm = proj_monoid(m, guard)?;
    let star: Vec<usize> = (0..pm.maps.len())
        .filter(|&idx| pm.maps[idx].range(m.len()).is_subset_of(i))
        .collect();
    // Monoid-ideal property inside the projection monoid.
    for &s in &star {
        for q in 0..pm.maps.len() {
            if !star.contains(&pm.monoid.op(s, q)) {
                return Err(Error::paper_check(
                    "ideal star is not an ideal in the projection monoid",
                ));
            }
        }
    }
    Ok(star.into_iter().map(|idx| pm.maps[idx].clone()).collect())
}

/// Outcome of projecting onto an order ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DedekindOutcome {
    /// The ideal is Dedekind; the greatest-element map is an order
    /// projection with the ideal as its range.
    Projection(EndoMap),
    /// The trace on the principal down-set of `witness` has no greatest
    /// element.
    NoGreatest { witness: usize },
}

/// Recovers the order projection associated with a Dedekind order ideal, or
/// reports the first element whose trace has no greatest element.
pub fn dedekind_projection(m: &FiniteMonoid, i: &ElementSubset) -> Result<DedekindOutcome> {
    if !crate::ideal::is_order_ideal(m, i) {
        return Err(Error::hypothesis(
            "dedekind projection requires an order ideal",
        ));
    }
    match crate::ideal::dedekind_map(m, i) {
        Err(witness) => Ok(DedekindOutcome::NoGreatest { witness }),
        Ok(p) => {
            if let Some(v) = order_projection_violation(m, &p)? {
                return Err(Error::paper_check(format!(
                    "greatest-element map of a Dedekind ideal is not an order projection: {v:?}"
                )));
            }
            if p.range(m.len()) != *i {
                return Err(Error::paper_check(
                    "range of the Dedekind projection differs from the ideal",
                ));
            }
            Ok(DedekindOutcome::Projection(p))
        }
    }
}
