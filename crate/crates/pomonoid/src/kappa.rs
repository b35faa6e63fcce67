//! Disjointness antichains and the kappa invariant, reduction of the
//! projection problem to small subsets, local sets, partitions, directions
//! and bounds, essential greatest elements, and the fixed-point corollaries.
//!
//! For a subset `T` and an ideal `I`, a mutually `I`-disjoint set is a
//! subset of `T` avoiding `I` whose pairwise products land in `I`. These
//! are exactly the cliques of the disjointness graph, and `kappa(T, I)` is
//! one more than the maximum clique size.

use std::collections::BTreeSet;

use crate::ideal::{is_order_ideal, is_radical, order_ideal_generated, quotient, quotient_geq};
use crate::monoid::FiniteMonoid;
use crate::projection::{monoid_projection_violation, EndoMap};
use crate::subset::ElementSubset;
use crate::{Error, Result};

/// The graph whose vertices are the elements of `T \ I` and whose edges
/// join distinct `I`-disjoint pairs. Cliques correspond to mutually
/// `I`-disjoint subsets of `T`.
#[derive(Debug, Clone)]
pub struct DisjointnessGraph {
    /// Element indices in ascending order; none lies in the ideal.
    pub vertices: Vec<usize>,
    /// Adjacency over vertex positions.
    pub adj: Vec<Vec<bool>>,
}

/// Builds the disjointness graph of `(T, I)`.
pub fn disjointness_graph(
    m: &FiniteMonoid,
    t: &ElementSubset,
    i: &ElementSubset,
) -> DisjointnessGraph {
    let vertices: Vec<usize> = t.iter().filter(|&f| !i.contains(f)).collect();
    let k = vertices.len();
    let mut adj = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            if a != b && i.contains(m.op(vertices[a], vertices[b])) {
                adj[a][b] = true;
            }
        }
    }
    DisjointnessGraph { vertices, adj }
}

/// The least number strictly exceeding every mutually `I`-disjoint subset
/// of `T`, together with one maximum antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaValue {
    /// `k = 1 + maximum antichain size`; at least 1.
    pub k: usize,
    /// The lexicographically least maximum antichain, ascending element
    /// indices. Empty when `T` is contained in `I`.
    pub witness: Vec<usize>,
}

/// Computes `kappa(T, I)` exactly: branch-and-bound with a greedy colouring
/// bound for the maximum size, then a lexicographic search for the least
/// maximum witness.
pub fn kappa(m: &FiniteMonoid, t: &ElementSubset, i: &ElementSubset) -> KappaValue {
    let g = disjointness_graph(m, t, i);
    let (size, local) = max_clique(&g.adj);
    KappaValue {
        k: size + 1,
        witness: local.into_iter().map(|p| g.vertices[p]).collect(),
    }
}

/// Whether no `I`-disjoint pair exists outside `I`; the antichain condition
/// for primality, silent on elements whose square lies in the ideal.
pub fn is_two_ideal(m: &FiniteMonoid, i: &ElementSubset) -> bool {
    kappa(m, &ElementSubset::full(m.len()), i).k <= 2
}

/// Exact maximum clique: size plus the lexicographically least witness of
/// that size.
pub fn max_clique(adj: &[Vec<bool>]) -> (usize, Vec<usize>) {
    let n = adj.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let all: Vec<usize> = (0..n).collect();
    let mut best = 0;
    bb_expand(adj, &all, 0, &mut best);
    // Lexicographic reconstruction: repeatedly pick the least vertex that
    // still allows a clique of the target size.
    let mut prefix: Vec<usize> = Vec::new();
    let mut cand = all;
    while prefix.len() < best {
        let need = best - prefix.len();
        let mut advanced = false;
        for pos in 0..cand.len() {
            let v = cand[pos];
            let next: Vec<usize> = cand[pos + 1..]
                .iter()
                .copied()
                .filter(|&u| adj[v][u])
                .collect();
            if clique_of_size_exists(adj, &next, need - 1) {
                prefix.push(v);
                cand = next;
                advanced = true;
                break;
            }
        }
        assert!(
            advanced,
            "maximum clique size certified but not reconstructible"
        );
    }
    (best, prefix)
}

/// Greedy colouring bound: candidates reordered by colour class, colour
/// numbers ascending with position.
fn colour_order(adj: &[Vec<bool>], cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&u| !adj[u][v]))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut colours = Vec::with_capacity(cand.len());
    for (c, class) in classes.iter().enumerate() {
        for &v in class {
            order.push(v);
            colours.push(c + 1);
        }
    }
    (order, colours)
}

fn bb_expand(adj: &[Vec<bool>], cand: &[usize], size: usize, best: &mut usize) {
    if cand.is_empty() {
        if size > *best {
            *best = size;
        }
        return;
    }
    let (order, colours) = colour_order(adj, cand);
    for pos in (0..order.len()).rev() {
        if size + colours[pos] <= *best {
            return;
        }
        let v = order[pos];
        let next: Vec<usize> = order[..pos]
            .iter()
            .copied()
            .filter(|&u| adj[v][u])
            .collect();
        bb_expand(adj, &next, size + 1, best);
    }
}

fn clique_of_size_exists(adj: &[Vec<bool>], cand: &[usize], need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if cand.len() < need {
        return false;
    }
    let (order, colours) = colour_order(adj, cand);
    if *colours.last().unwrap() < need {
        return false;
    }
    for pos in (0..order.len()).rev() {
        if colours[pos] < need {
            return false;
        }
        let v = order[pos];
        let next: Vec<usize> = order[..pos]
            .iter()
            .copied()
            .filter(|&u| adj[v][u])
            .collect();
        if clique_of_size_exists(adj, &next, need - 1) {
            return true;
        }
    }
    false
}

fn require_radical_order_ideal(m: &FiniteMonoid, i: &ElementSubset, what: &str) -> Result<()> {
    if !is_order_ideal(m, i) {
        return Err(Error::hypothesis(format!("{what} requires an order ideal")));
    }
    if !is_radical(m, i) {
        return Err(Error::hypothesis(format!(
            "{what} requires a radical ideal"
        )));
    }
    Ok(())
}

/// The two antichain counts compared by the quotient equality
/// `kappa(T, I) = kappa(T/I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErdosTarskiReport {
    pub kappa_ti: KappaValue,
    pub kappa_quotient: KappaValue,
    pub equal: bool,
}

/// Verifies `kappa(T, I) = kappa(T/I)` for a nonempty radical order ideal,
/// computing the two sides by independent clique searches: one on the
/// disjointness graph in `M`, one on plain disjointness in the quotient.
/// The empty ideal is rejected: the quotient by it collapses to a point and
/// the equality fails there.
pub fn erdos_tarski_check(
    m: &FiniteMonoid,
    t: &ElementSubset,
    i: &ElementSubset,
) -> Result<ErdosTarskiReport> {
    require_radical_order_ideal(m, i, "quotient antichain comparison")?;
    if i.is_empty() {
        return Err(Error::hypothesis(
            "quotient antichain comparison requires a nonempty ideal (the quotient by the empty ideal is a single class)",
        ));
    }
    let kappa_ti = kappa(m, t, i);
    let q = quotient(m, i)?;
    let qn = q.monoid.len();
    let mut tq = ElementSubset::empty(qn);
    for f in t.iter() {
        tq.insert(q.class_of[f]);
    }
    let zero_class = ElementSubset::singleton(qn, q.monoid.zero());
    let kappa_quotient = kappa(&q.monoid, &tq, &zero_class);
    if kappa_ti.k != kappa_quotient.k {
        return Err(Error::paper_check(format!(
            "kappa(T,I) = {} but kappa(T/I) = {}",
            kappa_ti.k, kappa_quotient.k
        )));
    }
    Ok(ErdosTarskiReport {
        equal: kappa_ti.k == kappa_quotient.k,
        kappa_ti,
        kappa_quotient,
    })
}

/// Result of the greedy reduction: the reduced set `T0`, the chosen
/// antichain as `(projection, element)` pairs, and the antichain bound that
/// certifies `|T0| < kappa(Q[T], I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReduceOutcome {
    /// Ascending element indices; projecting these into the ideal is
    /// equivalent to projecting all of `T`.
    pub t0: Vec<usize>,
    /// The maximal mutually disjoint family, in greedy scan order.
    pub chosen: Vec<(usize, usize)>,
    /// `kappa(Q[T], I)`.
    pub kappa_qt: KappaValue,
}

/// Greedily builds a maximal mutually `I`-disjoint subset of `Q[T]`,
/// scanning `(projection, element)` pairs in ascending order, and returns
/// the set `T0` of elements used. Verifies the certificate exhaustively:
/// `|T0| < kappa(Q[T], I)`, the projection biconditional
/// `Q[T] ⊆ I iff Q[T0] ⊆ I` for every `Q`, and that a member of `Q[T]` is
/// `I`-disjoint from all of `Q[T0]` exactly when it lies in `I`.
pub fn reduce_set(
    m: &FiniteMonoid,
    t: &ElementSubset,
    qfam: &[EndoMap],
    i: &ElementSubset,
) -> Result<ReduceOutcome> {
    require_radical_order_ideal(m, i, "set reduction")?;
    for (pos, q) in qfam.iter().enumerate() {
        if let Some(v) = monoid_projection_violation(m, q)? {
            return Err(Error::hypothesis(format!(
                "family member {pos} is not a monoid projection: {v:?}"
            )));
        }
    }

    let mut chosen: Vec<(usize, usize)> = Vec::new();
    let mut chosen_values: Vec<usize> = Vec::new();
    for (qi, q) in qfam.iter().enumerate() {
        for f in t.iter() {
            let h = q.apply(f);
            if i.contains(h) {
                continue;
            }
            if chosen_values.iter().all(|&c| i.contains(m.op(c, h))) {
                chosen.push((qi, f));
                chosen_values.push(h);
            }
        }
    }
    let t0: Vec<usize> = chosen
        .iter()
        .map(|&(_, f)| f)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    // kappa of the image set.
    let mut qt = ElementSubset::empty(m.len());
    for q in qfam {
        for f in t.iter() {
            qt.insert(q.apply(f));
        }
    }
    let kappa_qt = kappa(m, &qt, i);
    if t0.len() >= kappa_qt.k {
        return Err(Error::paper_check(format!(
            "reduced set has {} elements, not below kappa(Q[T],I) = {}",
            t0.len(),
            kappa_qt.k
        )));
    }

    // Biconditional for every member of the family.
    for q in qfam {
        let all_in = t.iter().all(|f| i.contains(q.apply(f)));
        let t0_in = t0.iter().all(|&f| i.contains(q.apply(f)));
        if all_in != t0_in {
            return Err(Error::paper_check(
                "projection biconditional failed between T and the reduced set",
            ));
        }
    }

    // Disjointness claim over the whole image.
    let t0_values: Vec<usize> = qfam
        .iter()
        .flat_map(|q| t0.iter().map(|&f| q.apply(f)))
        .collect();
    for h in qt.iter() {
        let disjoint = t0_values.iter().all(|&v| i.contains(m.op(h, v)));
        if disjoint != i.contains(h) {
            return Err(Error::paper_check(
                "image element disjoint from the reduced image without lying in the ideal",
            ));
        }
    }

    Ok(ReduceOutcome {
        t0,
        chosen,
        kappa_qt,
    })
}

/// Finds the first projection in the family mapping `T` into `I`, using the
/// reduced set to cut membership tests; the result agrees with a direct
/// scan by the reduction certificate.
pub fn solve_projection_problem(
    m: &FiniteMonoid,
    t: &ElementSubset,
    qfam: &[EndoMap],
    i: &ElementSubset,
) -> Result<Option<usize>> {
    let reduce = reduce_set(m, t, qfam, i)?;
    for (qi, q) in qfam.iter().enumerate() {
        if reduce.t0.iter().all(|&f| i.contains(q.apply(f))) {
            return Ok(Some(qi));
        }
    }
    Ok(None)
}

/// For each element of `T`, the projections that fail to send it into the
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSets {
    /// `(f, projections with Q(f) outside the ideal)` for `f` in `T`,
    /// ascending.
    pub sets: Vec<(usize, Vec<usize>)>,
    pub outcome: LocalOutcome,
}

/// Either the local sets cover the family and a small subcover indexed by
/// the reduced set exists, or some projection solves the projection
/// problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalOutcome {
    Subcover { t0: Vec<usize> },
    Projector { q: usize },
}

/// Computes every local set; when they cover the family, extracts the
/// subcover indexed by the reduced set and certifies its size below
/// `kappa(Q[T], I)`. When they do not cover, the first uncovered projection
/// is a solution of the projection problem.
pub fn local_sets(
    m: &FiniteMonoid,
    t: &ElementSubset,
    qfam: &[EndoMap],
    i: &ElementSubset,
) -> Result<LocalSets> {
    require_radical_order_ideal(m, i, "local sets")?;
    let sets: Vec<(usize, Vec<usize>)> = t
        .iter()
        .map(|f| {
            let qs: Vec<usize> = qfam
                .iter()
                .enumerate()
                .filter_map(|(qi, q)| (!i.contains(q.apply(f))).then_some(qi))
                .collect();
            (f, qs)
        })
        .collect();
    let uncovered = (0..qfam.len()).find(|qi| !sets.iter().any(|(_, qs)| qs.contains(qi)));
    if let Some(q) = uncovered {
        return Ok(LocalSets {
            sets,
            outcome: LocalOutcome::Projector { q },
        });
    }
    let reduce = reduce_set(m, t, qfam, i)?;
    for qi in 0..qfam.len() {
        let in_subcover = sets
            .iter()
            .any(|(f, qs)| reduce.t0.contains(f) && qs.contains(&qi));
        if !in_subcover {
            return Err(Error::paper_check(
                "local sets of the reduced elements do not cover the family",
            ));
        }
    }
    if reduce.t0.len() >= reduce.kappa_qt.k {
        return Err(Error::paper_check(
            "subcover not smaller than kappa(Q[T],I)",
        ));
    }
    Ok(LocalSets {
        sets,
        outcome: LocalOutcome::Subcover { t0: reduce.t0 },
    })
}

/// Counting skeleton of the pigeonhole bound on local sets: the family
/// splits into the solutions of the projection problem and the union of
/// the local sets over the reduced elements, with the sum of local-set
/// sizes bounding the non-solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularCount {
    /// Projections sending all of `T` into the ideal.
    pub solutions: usize,
    /// Size of the union of the local sets over the reduced elements.
    pub covered: usize,
    /// Sum of the local-set sizes over the reduced elements, an upper
    /// bound for `covered`.
    pub sum_bound: usize,
}

/// Splits the family count as `|Q| = solutions + covered` and reports the
/// local-set sum bound. The identity follows from the reduction
/// biconditional: a projection misses the solution set exactly when some
/// reduced element's local set contains it.
pub fn regular_counting(
    m: &FiniteMonoid,
    t: &ElementSubset,
    qfam: &[EndoMap],
    i: &ElementSubset,
) -> Result<RegularCount> {
    let reduce = reduce_set(m, t, qfam, i)?;
    let solutions = qfam
        .iter()
        .filter(|q| t.iter().all(|f| i.contains(q.apply(f))))
        .count();
    let mut in_union = vec![false; qfam.len()];
    let mut sum_bound = 0usize;
    for &f in &reduce.t0 {
        for (qi, q) in qfam.iter().enumerate() {
            if !i.contains(q.apply(f)) {
                sum_bound += 1;
                in_union[qi] = true;
            }
        }
    }
    let covered = in_union.iter().filter(|&&b| b).count();
    if solutions + covered != qfam.len() {
        return Err(Error::paper_check(
            "solution count plus covered count misses the family size",
        ));
    }
    if covered > sum_bound {
        return Err(Error::paper_check(
            "local-set union exceeds the sum of local-set sizes",
        ));
    }
    Ok(RegularCount {
        solutions,
        covered,
        sum_bound,
    })
}

/// One piece of a family decomposition: the projections sending a reduced
/// element into a fixed block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub block: usize,
    pub f: usize,
    pub members: Vec<usize>,
}

/// A decomposition of the projection family into the solutions of the
/// projection problem plus blockwise pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub q0: Vec<usize>,
    pub pieces: Vec<Piece>,
}

/// Splits the family according to a decomposition of the monoid into the
/// ideal and blocks disjoint from it: `Q0` holds the projections mapping
/// `T` into the ideal, and each piece holds the projections sending one
/// reduced element into one block. The pieces and `Q0` cover the family
/// and there are at most `blocks * |T0|` pieces.
pub fn partition_decompose(
    m: &FiniteMonoid,
    t: &ElementSubset,
    qfam: &[EndoMap],
    i: &ElementSubset,
    blocks: &[ElementSubset],
) -> Result<Decomposition> {
    require_radical_order_ideal(m, i, "partition decomposition")?;
    let mut covered = i.clone();
    for (pos, b) in blocks.iter().enumerate() {
        if !b.intersect(i).is_empty() {
            return Err(Error::hypothesis(format!("block {pos} meets the ideal")));
        }
        covered = covered.union(b);
    }
    if covered.card() != m.len() {
        return Err(Error::hypothesis(
            "blocks and ideal do not cover the monoid",
        ));
    }

    let q0: Vec<usize> = qfam
        .iter()
        .enumerate()
        .filter_map(|(qi, q)| t.iter().all(|f| i.contains(q.apply(f))).then_some(qi))
        .collect();
    let reduce = reduce_set(m, t, qfam, i)?;
    let mut pieces = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for &f in &reduce.t0 {
            let members: Vec<usize> = qfam
                .iter()
                .enumerate()
                .filter_map(|(qi, q)| b.contains(q.apply(f)).then_some(qi))
                .collect();
            if !members.is_empty() {
                pieces.push(Piece {
                    block: bi,
                    f,
                    members,
                });
            }
        }
    }
    for qi in 0..qfam.len() {
        let covered = q0.contains(&qi) || pieces.iter().any(|p| p.members.contains(&qi));
        if !covered {
            return Err(Error::paper_check(
                "decomposition pieces do not cover the family",
            ));
        }
    }
    if pieces.len() > blocks.len() * reduce.t0.len() {
        return Err(Error::paper_check("piece count exceeds blocks * |T0|"));
    }
    Ok(Decomposition { q0, pieces })
}

/// A direction: an assignment of a projection (by family index) to every
/// element of the monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Direction {
    pub assign: Vec<usize>,
}

impl Direction {
    fn check(&self, m: &FiniteMonoid, qfam: &[EndoMap]) -> Result<()> {
        if self.assign.len() != m.len() {
            return Err(Error::structure("direction table has the wrong length"));
        }
        if self.assign.iter().any(|&v| v >= qfam.len()) {
            return Err(Error::structure("direction refers outside the family"));
        }
        Ok(())
    }
}

/// The order ideal generated by the direction diagonal over `T`:
/// `I({pi_f(f) : f in T})`.
fn diagonal_ideal(
    m: &FiniteMonoid,
    t: &ElementSubset,
    qfam: &[EndoMap],
    direction: &Direction,
) -> ElementSubset {
    let mut diag = ElementSubset::empty(m.len());
    for f in t.iter() {
        diag.insert(qfam[direction.assign[f]].apply(f));
    }
    order_ideal_generated(m, &diag).set
}

/// Whether `h` bounds `T0` inside `T` along the given direction: the
/// section at `h` sends `T0` into the order ideal generated by the
/// diagonal over `T`.
pub fn is_bound(
    m: &FiniteMonoid,
    h: usize,
    t0: &ElementSubset,
    t: &ElementSubset,
    direction: &Direction,
    qfam: &[EndoMap],
) -> Result<bool> {
    direction.check(m, qfam)?;
    if !t.contains(h) {
        return Err(Error::hypothesis("bound candidate must lie in T"));
    }
    let ideal = diagonal_ideal(m, t, qfam, direction);
    let section = &qfam[direction.assign[h]];
    Ok(t0.iter().all(|g| ideal.contains(section.apply(g))))
}

/// The directedness index of `T` relative to the family: the least size of
/// a subset of `T` that some direction leaves unbounded, or `|T| + 1` when
/// every subset is bounded. `T` is `k`-directed exactly when `k <= delta`.
/// Directions are enumerated exhaustively; the guard bounds their number.
pub fn delta(m: &FiniteMonoid, t: &ElementSubset, qfam: &[EndoMap], guard: u64) -> Result<usize> {
    let members = t.members();
    if qfam.is_empty() {
        return Ok(members.len() + 1);
    }
    let n = m.len();
    let qn = qfam.len() as u64;
    let mut count: u64 = 1;
    for _ in 0..n {
        count = count
            .checked_mul(qn)
            .ok_or_else(|| Error::guard("direction enumeration", u64::MAX, guard))?;
        if count > guard {
            return Err(Error::guard("direction enumeration", count, guard));
        }
    }

    // All directions, as mixed-radix counters; the diagonal ideal over T is
    // reused across candidate bounds and subsets.
    let mut directions: Vec<(Direction, ElementSubset)> = Vec::new();
    let mut assign = vec![0usize; n];
    loop {
        let d = Direction {
            assign: assign.clone(),
        };
        let ideal = diagonal_ideal(m, t, qfam, &d);
        directions.push((d, ideal));
        let mut pos = n;
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            assign[pos] += 1;
            if assign[pos] < qfam.len() {
                break;
            }
            assign[pos] = 0;
        }
        if assign.iter().all(|&v| v == 0) {
            break;
        }
    }

    for size in 0..=members.len() {
        let mut subset_ids = first_combination(size);
        loop {
            let t0: Vec<usize> = subset_ids.iter().map(|&p| members[p]).collect();
            let unbounded = directions.iter().any(|(d, ideal)| {
                !members.iter().any(|&h| {
                    let section = &qfam[d.assign[h]];
                    t0.iter().all(|&g| ideal.contains(section.apply(g)))
                })
            });
            if unbounded {
                return Ok(size);
            }
            if !next_combination(&mut subset_ids, members.len()) {
                break;
            }
        }
    }
    Ok(members.len() + 1)
}

fn first_combination(size: usize) -> Vec<usize> {
    (0..size).collect()
}

fn next_combination(ids: &mut [usize], n: usize) -> bool {
    let k = ids.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        // Position i may rise to n - k + i at most.
        if ids[i] < n - k + i {
            ids[i] += 1;
            for j in i + 1..k {
                ids[j] = ids[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Finds an element of `T` greatest in the ideal-induced preorder, if one
/// exists. When the directedness hypothesis `kappa(T_g[T], I) <= delta(T)`
/// is checkable under the direction guard (family = all translates), its
/// satisfaction together with the absence of a greatest element is a
/// certificate failure.
pub fn essential_greatest(
    m: &FiniteMonoid,
    t: &ElementSubset,
    i: &ElementSubset,
    guard: u64,
) -> Result<Option<usize>> {
    require_radical_order_ideal(m, i, "essential greatest element")?;
    let geq = quotient_geq(m, i);
    let found = t.iter().find(|&f0| t.iter().all(|f| geq[f0][f]));
    if found.is_some() {
        return Ok(found);
    }
    if t.is_empty() {
        return Ok(None);
    }
    // Hypothesis check, only when the direction space fits the guard.
    let qfam = crate::projection::all_translates(m);
    match delta(m, t, &qfam, guard) {
        Err(Error::Guard { .. }) => Ok(None),
        Err(e) => Err(e),
        Ok(d) => {
            let mut qt = ElementSubset::empty(m.len());
            for q in &qfam {
                for f in t.iter() {
                    qt.insert(q.apply(f));
                }
            }
            let k = kappa(m, &qt, i).k;
            if k <= d {
                Err(Error::paper_check(format!(
                    "directedness hypothesis holds (kappa {k} <= delta {d}) yet no greatest element exists"
                )))
            } else {
                Ok(None)
            }
        }
    }
}

/// Finds `h` with `F(h)` equivalent to `h` under the ideal preorder, for an
/// increasing map `F`: the greatest element of `{f : F(f) >= f}` works.
pub fn tarski_fixed_point(
    m: &FiniteMonoid,
    fmap: &EndoMap,
    i: &ElementSubset,
    guard: u64,
) -> Result<Option<usize>> {
    require_radical_order_ideal(m, i, "fixed point")?;
    if fmap.len() != m.len() {
        return Err(Error::structure("map table has the wrong length"));
    }
    let geq = quotient_geq(m, i);
    for f in 0..m.len() {
        for g in 0..m.len() {
            if geq[f][g] && !geq[fmap.apply(f)][fmap.apply(g)] {
                return Err(Error::hypothesis(format!(
                    "map is not increasing for the ideal preorder at ({f},{g})"
                )));
            }
        }
    }
    let mut t = ElementSubset::empty(m.len());
    for f in 0..m.len() {
        if geq[fmap.apply(f)][f] {
            t.insert(f);
        }
    }
    if t.is_empty() {
        return Err(Error::hypothesis(
            "no element lies below its image; the expansive set is empty",
        ));
    }
    match essential_greatest(m, &t, i, guard)? {
        None => Ok(None),
        Some(h) => {
            let fh = fmap.apply(h);
            if !(geq[fh][h] && geq[h][fh]) {
                return Err(Error::paper_check(
                    "greatest expansive element is not equivalent to its image",
                ));
            }
            Ok(Some(h))
        }
    }
}

/// Iterates an inflationary class map on the quotient until it fixes a
/// class. On a finite quotient the ascending iteration must stabilise, so
/// the directedness hypothesis is discharged by finiteness.
pub fn zermelo_fixed_point(
    m: &FiniteMonoid,
    i: &ElementSubset,
    class_map: &[usize],
) -> Result<usize> {
    require_radical_order_ideal(m, i, "quotient fixed point")?;
    let q = quotient(m, i)?;
    let k = q.monoid.len();
    if class_map.len() != k {
        return Err(Error::structure(format!(
            "class map has {} entries for {k} classes",
            class_map.len()
        )));
    }
    if let Some(&bad) = class_map.iter().find(|&&c| c >= k) {
        return Err(Error::structure(format!("class index {bad} out of range")));
    }
    for c in 0..k {
        if !q.monoid.leq(c, class_map[c]) {
            return Err(Error::hypothesis(format!(
                "class map is not inflationary at class {c}"
            )));
        }
    }
    let mut c = 0usize;
    for _ in 0..=k {
        let next = class_map[c];
        if next == c {
            return Ok(c);
        }
        c = next;
    }
    Err(Error::paper_check(
        "inflationary iteration failed to stabilise on a finite quotient",
    ))
}
