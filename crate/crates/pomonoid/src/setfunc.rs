//! Monotone vector-valued functions on a monoid: submeasures, capacities,
//! equivalent-capacity extraction, and the measure-extraction machinery
//! over exact scalars.
//!
//! Values live in `R^d` with coordinatewise order. A set function vanishes
//! at the least element and increases with the monoid order, so all values
//! are nonnegative. Families compose by pointwise coordinatewise minimum.

use crate::ideal::{classify, enumerate_ideals, IdealFlags, IdealKind, IdealSubset};
use crate::kappa::max_clique;
use crate::lp::{maximize, satisfies, Constraint, LpOutcome, Rel};
use crate::monoid::FiniteMonoid;
use crate::projection::{enumerate_projections, EndoMap, ProjKind};
use crate::subset::ElementSubset;
use crate::{Error, Result, Scalar};

/// Vector norm used for the extraction weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Norm {
    #[default]
    L1,
    LInf,
}

impl Norm {
    pub fn of<R: Scalar>(&self, v: &[R]) -> R {
        match self {
            Norm::L1 => v.iter().fold(R::zero(), |acc, x| acc + x.abs()),
            Norm::LInf => v.iter().map(|x| x.abs()).max().unwrap_or_else(R::zero),
        }
    }
}

/// A monotone function from a monoid into `R^d`, vanishing at the least
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunction<R: Scalar> {
    dim: usize,
    values: Vec<Vec<R>>,
}

impl<R: Scalar> SetFunction<R> {
    /// Validates shape, the zero condition and monotonicity.
    pub fn new(m: &FiniteMonoid, dim: usize, values: Vec<Vec<R>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::structure("set function needs a positive dimension"));
        }
        if values.len() != m.len() {
            return Err(Error::structure(format!(
                "set function has {} values for {} elements",
                values.len(),
                m.len()
            )));
        }
        if let Some(pos) = values.iter().position(|v| v.len() != dim) {
            return Err(Error::structure(format!(
                "value at element {pos} has the wrong dimension"
            )));
        }
        if !values[m.zero()].iter().all(|x| x.is_zero()) {
            return Err(Error::structure(
                "set function must vanish at the least element",
            ));
        }
        for f in 0..m.len() {
            for g in 0..m.len() {
                if m.leq(f, g) && !leq_vec(&values[f], &values[g]) {
                    return Err(Error::structure(format!(
                        "set function not monotone between {f} and {g}"
                    )));
                }
            }
        }
        Ok(SetFunction { dim, values })
    }

    /// A scalar-valued function from a plain value list.
    pub fn scalar(m: &FiniteMonoid, values: Vec<R>) -> Result<Self> {
        Self::new(m, 1, values.into_iter().map(|v| vec![v]).collect())
    }

    pub fn zero_function(m: &FiniteMonoid, dim: usize) -> Self {
        SetFunction {
            dim,
            values: vec![vec![R::zero(); dim]; m.len()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value(&self, f: usize) -> &[R] {
        &self.values[f]
    }

    pub fn is_zero_at(&self, f: usize) -> bool {
        self.values[f].iter().all(|x| x.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        (0..self.values.len()).all(|f| self.is_zero_at(f))
    }

    /// Precomposition with a self-map: `f -> F(p(f))`. The result is
    /// validated, so `p` must respect monotonicity and fix the bottom.
    pub fn compose_map(&self, m: &FiniteMonoid, p: &EndoMap) -> Result<Self> {
        let values = (0..m.len())
            .map(|f| self.values[p.apply(f)].clone())
            .collect();
        SetFunction::new(m, self.dim, values)
    }

    /// Pointwise coordinatewise minimum, the family composition.
    pub fn min_with(&self, other: &SetFunction<R>) -> SetFunction<R> {
        SetFunction {
            dim: self.dim,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| {
                    a.iter()
                        .zip(b)
                        .map(|(x, y)| if x <= y { x.clone() } else { y.clone() })
                        .collect()
                })
                .collect(),
        }
    }

    fn add_scaled(&mut self, weight: &R, other: &SetFunction<R>) {
        for (mine, theirs) in self.values.iter_mut().zip(&other.values) {
            for (x, y) in mine.iter_mut().zip(theirs) {
                *x = x.clone() + weight.clone() * y.clone();
            }
        }
    }
}

fn leq_vec<R: Scalar>(a: &[R], b: &[R]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `F^{-1}(0)`, classified. Always an order ideal by monotonicity.
pub fn zero_set<R: Scalar>(m: &FiniteMonoid, f: &SetFunction<R>) -> IdealSubset {
    let mut s = ElementSubset::empty(m.len());
    for x in 0..m.len() {
        if f.is_zero_at(x) {
            s.insert(x);
        }
    }
    classify(m, &s)
}

/// Whether the zero set is additionally a radical monoid ideal — the finite
/// content of membership in the sigma subfamily (the countability clause is
/// vacuous on a finite monoid).
pub fn in_mon_sigma<R: Scalar>(m: &FiniteMonoid, f: &SetFunction<R>) -> bool {
    let z = zero_set(m, f);
    z.flags.radical && z.flags.monoid_ideal
}

/// Status of the composition laws recorded when a family is built. The
/// translation-compatibility inequality
/// `min(F(fh), G(h)) <= min(F(fh), G(fh))` fails for pointwise-minimum
/// composition whenever some member grows strictly off another member's
/// support, so it is recorded with a witness rather than enforced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLaws {
    /// Pointwise minima of members are again monotone and vanish at the
    /// bottom, and the composition is compatible with the product order.
    pub semigroup_ok: bool,
    /// First `(F, G, f, h)` violating the translation-compatibility
    /// inequality, if any.
    pub translation_witness: Option<(usize, usize, usize, usize)>,
}

/// A finite family of set functions over a common monoid and dimension,
/// composed by pointwise minimum.
#[derive(Debug, Clone)]
pub struct FunctionFamily<R: Scalar> {
    dim: usize,
    members: Vec<SetFunction<R>>,
    laws: FamilyLaws,
}

impl<R: Scalar> FunctionFamily<R> {
    pub fn new(m: &FiniteMonoid, members: Vec<SetFunction<R>>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::hypothesis("function family must be nonempty"));
        }
        let dim = members[0].dim();
        if members.iter().any(|f| f.dim() != dim) {
            return Err(Error::structure("family members disagree on dimension"));
        }
        if members.iter().any(|f| f.values.len() != m.len()) {
            return Err(Error::structure("family member has the wrong length"));
        }
        let laws = check_laws(m, &members);
        Ok(FunctionFamily { dim, members, laws })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn members(&self) -> &[SetFunction<R>] {
        &self.members
    }

    pub fn laws(&self) -> &FamilyLaws {
        &self.laws
    }

    /// The common zero set of the family.
    pub fn common_zero_set(&self, m: &FiniteMonoid) -> ElementSubset {
        let mut s = ElementSubset::full(m.len());
        for f in &self.members {
            s = s.intersect(&zero_set(m, f).set);
        }
        s
    }
}

fn check_laws<R: Scalar>(m: &FiniteMonoid, members: &[SetFunction<R>]) -> FamilyLaws {
    // Minima of monotone zero-at-bottom functions stay in the semigroup,
    // and the composition respects the product order on both sides.
    let mut semigroup_ok = true;
    for a in members {
        for b in members {
            let min = a.min_with(b);
            if SetFunction::new(m, min.dim, min.values.clone()).is_err() {
                semigroup_ok = false;
            }
            for f in 0..m.len() {
                if !leq_vec(min.value(f), a.value(f)) {
                    semigroup_ok = false;
                }
            }
        }
    }
    let mut translation_witness = None;
    'outer: for (ai, a) in members.iter().enumerate() {
        for (bi, b) in members.iter().enumerate() {
            for f in 0..m.len() {
                for h in 0..m.len() {
                    let fh = m.op(f, h);
                    // min(a(fh), b(h)) <= min(a(fh), b(fh))
                    let lhs: Vec<R> = a
                        .value(fh)
                        .iter()
                        .zip(b.value(h))
                        .map(|(x, y)| if x <= y { x.clone() } else { y.clone() })
                        .collect();
                    let rhs: Vec<R> = a
                        .value(fh)
                        .iter()
                        .zip(b.value(fh))
                        .map(|(x, y)| if x <= y { x.clone() } else { y.clone() })
                        .collect();
                    if !leq_vec(&lhs, &rhs) {
                        translation_witness = Some((ai, bi, f, h));
                        break 'outer;
                    }
                }
            }
        }
    }
    FamilyLaws {
        semigroup_ok,
        translation_witness,
    }
}

/// Recognizes the canonical Boolean-algebra encoding (index == bitmask,
/// intersection as operation), returning the number of atoms.
pub fn boolean_structure(m: &FiniteMonoid) -> Option<usize> {
    let n = m.len();
    if !n.is_power_of_two() {
        return None;
    }
    let k = n.trailing_zeros() as usize;
    let good = m.unit() == n - 1
        && m.zero() == 0
        && (0..n).all(|x| (0..n).all(|y| m.op(x, y) == x & y && m.leq(x, y) == (x & y == x)));
    good.then_some(k)
}

/// Why a set function fails to be a submeasure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubmeasureViolation {
    EmptyNotZero,
    FullNotOne,
    NotSubadditive { a: usize, b: usize },
}

/// Checks the normalized subadditivity laws on a Boolean-algebra monoid:
/// zero at the empty set, one at the full set, and
/// `mu(A or B) <= mu(A) + mu(B)` for all pairs. Monotonicity is already
/// guaranteed by the set-function constructor.
pub fn is_submeasure<R: Scalar>(
    m: &FiniteMonoid,
    mu: &SetFunction<R>,
) -> Result<std::result::Result<(), SubmeasureViolation>> {
    if boolean_structure(m).is_none() {
        return Err(Error::hypothesis(
            "submeasures live on a Boolean algebra monoid",
        ));
    }
    if mu.dim() != 1 {
        return Err(Error::hypothesis("submeasures are scalar-valued"));
    }
    if !mu.is_zero_at(0) {
        return Ok(Err(SubmeasureViolation::EmptyNotZero));
    }
    if mu.value(m.len() - 1)[0] != R::one() {
        return Ok(Err(SubmeasureViolation::FullNotOne));
    }
    for a in 0..m.len() {
        for b in 0..m.len() {
            let lhs = &mu.value(a | b)[0];
            let rhs = mu.value(a)[0].clone() + mu.value(b)[0].clone();
            if *lhs > rhs {
                return Ok(Err(SubmeasureViolation::NotSubadditive { a, b }));
            }
        }
    }
    Ok(Ok(()))
}

/// Result of removing earlier members from each set of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disjointified {
    /// `A_n` minus the union of the earlier sets, as element indices.
    pub sets: Vec<usize>,
    /// Whether the pairwise intersections were null for `mu`.
    pub pairwise_null: bool,
    /// Under pairwise nullity, whether `mu` agrees on each original set and
    /// its disjointified version.
    pub values_preserved: bool,
}

/// Disjointifies a sequence of Boolean-algebra elements and verifies that a
/// submeasure vanishing on all pairwise intersections does not distinguish
/// the originals from the disjointified sets.
pub fn disjointify<R: Scalar>(
    m: &FiniteMonoid,
    mu: &SetFunction<R>,
    seq: &[usize],
) -> Result<Disjointified> {
    if is_submeasure(m, mu)?.is_err() {
        return Err(Error::hypothesis("disjointification needs a submeasure"));
    }
    if let Some(&bad) = seq.iter().find(|&&a| a >= m.len()) {
        return Err(Error::structure(format!(
            "sequence element {bad} out of range"
        )));
    }
    let mut union = 0usize;
    let mut sets = Vec::with_capacity(seq.len());
    for &a in seq {
        sets.push(a & !union);
        union |= a;
    }
    let mut pairwise_null = true;
    for (i, &a) in seq.iter().enumerate() {
        for &b in &seq[i + 1..] {
            if !mu.is_zero_at(m.op(a, b)) {
                pairwise_null = false;
            }
        }
    }
    let values_preserved = if pairwise_null {
        seq.iter()
            .zip(&sets)
            .all(|(&a, &abar)| mu.value(a) == mu.value(abar))
    } else {
        true
    };
    if pairwise_null && !values_preserved {
        return Err(Error::paper_check(
            "submeasure distinguishes a set from its disjointified version despite null overlaps",
        ));
    }
    Ok(Disjointified {
        sets,
        pairwise_null,
        values_preserved,
    })
}

/// Outcome of the supermodularity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityCheck {
    pub supermodular: bool,
    /// `(f, offending subset)` for the first failed inclusion-exclusion
    /// bound.
    pub witness: Option<(usize, Vec<usize>)>,
    /// The capacity of the unit dominates the capacity sum over a maximum
    /// disjointness antichain of the zero set.
    pub antichain_bound: bool,
}

/// Checks the inclusion-exclusion lower bounds `Gamma(f) >= sum over
/// nonempty sub-multisets` for all `f` and all subsets of the principal
/// down-set of `f` with at most `b_max` elements, each coordinate
/// separately; then checks the antichain sum bound against the kappa
/// witness of the zero set.
pub fn is_supermodular_capacity<R: Scalar>(
    m: &FiniteMonoid,
    gamma: &SetFunction<R>,
    b_max: usize,
) -> Result<CapacityCheck> {
    if !crate::monoid::structural_predicates(m).idempotent {
        return Err(Error::hypothesis(
            "supermodular capacities live on idempotent monoids",
        ));
    }
    let n = m.len();
    for f in 0..n {
        let below: Vec<usize> = (0..n).filter(|&h| m.leq(h, f)).collect();
        let mut subset: Vec<usize> = Vec::new();
        if let Some(witness) = capacity_violation(m, gamma, f, &below, &mut subset, 0, b_max) {
            return Ok(CapacityCheck {
                supermodular: false,
                witness: Some((f, witness)),
                antichain_bound: true,
            });
        }
    }
    // Consequence: the unit dominates the sum over any mutually
    // zero-set-disjoint family; check the maximum antichain.
    let z = zero_set(m, gamma);
    let k = crate::kappa::kappa(m, &ElementSubset::full(n), &z.set);
    let mut sums = vec![R::zero(); gamma.dim()];
    for &f in &k.witness {
        for (acc, v) in sums.iter_mut().zip(gamma.value(f)) {
            *acc = acc.clone() + v.clone();
        }
    }
    let antichain_bound = leq_vec(&sums, gamma.value(m.unit()));
    Ok(CapacityCheck {
        supermodular: true,
        witness: None,
        antichain_bound,
    })
}

fn capacity_violation<R: Scalar>(
    m: &FiniteMonoid,
    gamma: &SetFunction<R>,
    f: usize,
    below: &[usize],
    subset: &mut Vec<usize>,
    from: usize,
    remaining: usize,
) -> Option<Vec<usize>> {
    if !subset.is_empty() {
        // Inclusion-exclusion sum over nonempty subsets of `subset`.
        let mut bound = vec![R::zero(); gamma.dim()];
        for mask in 1usize..(1 << subset.len()) {
            let mut prod = m.unit();
            for (pos, &h) in subset.iter().enumerate() {
                if mask >> pos & 1 == 1 {
                    prod = m.op(prod, h);
                }
            }
            let sign_positive = mask.count_ones() % 2 == 1;
            for (acc, v) in bound.iter_mut().zip(gamma.value(prod)) {
                *acc = if sign_positive {
                    acc.clone() + v.clone()
                } else {
                    acc.clone() - v.clone()
                };
            }
        }
        if !leq_vec(&bound, gamma.value(f)) {
            return Some(subset.clone());
        }
    }
    if remaining == 0 {
        return None;
    }
    for pos in from..below.len() {
        subset.push(below[pos]);
        if let Some(w) = capacity_violation(m, gamma, f, below, subset, pos + 1, remaining - 1) {
            return Some(w);
        }
        subset.pop();
    }
    None
}

/// Extracts a finite subfamily of translates that detects nonvanishing
/// products: the returned elements `h_1..h_k` of `T` satisfy, for every
/// `f`, that some `Gamma(f h)` with `h` in `T` is nonzero exactly when some
/// `Gamma(f h_n)` is. Delegates to the greedy set reduction with the family
/// of all translates and the zero set as ideal.
pub fn halmos_savage_extract<R: Scalar>(
    m: &FiniteMonoid,
    gamma: &SetFunction<R>,
    t: &ElementSubset,
) -> Result<Vec<usize>> {
    if !in_mon_sigma(m, gamma) {
        return Err(Error::hypothesis(
            "extraction needs a function whose zero set is a radical ideal",
        ));
    }
    let z = zero_set(m, gamma).set;
    let qfam = crate::projection::all_translates(m);
    let reduce = crate::kappa::reduce_set(m, t, &qfam, &z)?;
    // Keep the greedy selection order, first occurrence per element.
    let mut hs: Vec<usize> = Vec::new();
    for &(_, f) in &reduce.chosen {
        if !hs.contains(&f) {
            hs.push(f);
        }
    }
    // Certificate in the product form.
    for f in 0..m.len() {
        let over_t = t.iter().any(|h| !gamma.is_zero_at(m.op(f, h)));
        let over_hs = hs.iter().any(|&h| !gamma.is_zero_at(m.op(f, h)));
        if over_t != over_hs {
            return Err(Error::paper_check(
                "extracted sequence misses a nonvanishing product",
            ));
        }
    }
    let bound = crate::kappa::kappa(m, &ElementSubset::full(m.len()), &z);
    if hs.len() >= bound.k {
        return Err(Error::paper_check(
            "extracted sequence not smaller than kappa of the zero set",
        ));
    }
    Ok(hs)
}

/// The dyadic-weight equivalent capacity `psi0(f) = sum 2^-n Gamma(f h_n)`.
/// Returns the function and a degeneracy flag which is set when the list is
/// empty (then `psi0 = 0`).
pub fn equivalent_capacity<R: Scalar>(
    m: &FiniteMonoid,
    gamma: &SetFunction<R>,
    hs: &[usize],
) -> Result<(SetFunction<R>, bool)> {
    if hs.is_empty() {
        return Ok((SetFunction::zero_function(m, gamma.dim()), true));
    }
    let mut psi = SetFunction::zero_function(m, gamma.dim());
    let mut weight = R::one();
    let two = R::one() + R::one();
    for &h in hs {
        weight = weight / two.clone();
        let shifted = gamma.compose_map(m, &crate::projection::translate(m, h))?;
        psi.add_scaled(&weight, &shifted);
    }
    let psi = SetFunction::new(m, psi.dim, psi.values)?;
    // Exact equivalence: psi0 vanishes exactly where every product does.
    for f in 0..m.len() {
        let every = hs.iter().all(|&h| gamma.is_zero_at(m.op(f, h)));
        if psi.is_zero_at(f) != every {
            return Err(Error::paper_check(
                "equivalent capacity does not share the vanishing pattern",
            ));
        }
    }
    Ok((psi, false))
}

/// The extraction result: the selected member indices in selection order
/// and the weighted combination whose zero set equals the family's.
#[derive(Debug, Clone)]
pub struct KelleyExtract<R: Scalar> {
    pub selected: Vec<usize>,
    pub f0: SetFunction<R>,
}

/// Greedy scan over the elements outside the common zero set: whenever the
/// current combination still vanishes somewhere it must not, the least
/// member detecting that element is appended. The combination uses weights
/// `2^-j / (1 + |F_j(1)|)` over the selected subfamily and its zero set
/// equals the common zero set exactly.
pub fn kelley_extract<R: Scalar>(
    m: &FiniteMonoid,
    family: &FunctionFamily<R>,
    norm: Norm,
) -> Result<KelleyExtract<R>> {
    let common = family.common_zero_set(m);
    let mut selected: Vec<usize> = Vec::new();
    for f in 0..m.len() {
        if common.contains(f) {
            continue;
        }
        let covered = selected.iter().any(|&j| !family.members()[j].is_zero_at(f));
        if covered {
            continue;
        }
        let j = family
            .members()
            .iter()
            .position(|g| !g.is_zero_at(f))
            .expect("element outside the common zero set has a detector");
        selected.push(j);
    }
    let mut f0 = SetFunction::zero_function(m, family.dim());
    let two = R::one() + R::one();
    let mut dyadic = R::one();
    for &j in &selected {
        dyadic = dyadic / two.clone();
        let member = &family.members()[j];
        let scale = R::one() + norm.of(member.value(m.unit()));
        let weight = dyadic.clone() / scale;
        f0.add_scaled(&weight, member);
    }
    let f0 = SetFunction::new(m, f0.dim, f0.values)?;
    for f in 0..m.len() {
        if f0.is_zero_at(f) != common.contains(f) {
            return Err(Error::paper_check(
                "extracted combination has the wrong zero set",
            ));
        }
    }
    Ok(KelleyExtract { selected, f0 })
}

/// An exact separation certificate for one block: the optimum of the
/// separation program and the convex weights achieving it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCertificate<R> {
    pub tstar: R,
    pub lambda: Vec<R>,
}

/// For each block, maximizes `t` subject to
/// `sum_j lambda_j gamma_j(h) >= t` for every `h` in the block, over convex
/// weights `lambda` on the coordinate scalarizations of the family. Solved
/// by the exact simplex; solutions are verified against the constraints.
pub fn kelley_separation_lp<R: Scalar>(
    m: &FiniteMonoid,
    family: &FunctionFamily<R>,
    blocks: &[ElementSubset],
) -> Result<Vec<BlockCertificate<R>>> {
    let common = family.common_zero_set(m);
    for (pos, b) in blocks.iter().enumerate() {
        if !b.intersect(&common).is_empty() {
            return Err(Error::hypothesis(format!(
                "block {pos} meets the common zero set"
            )));
        }
    }
    // Scalarizations: member-major, coordinate-minor.
    let k = family.members().len() * family.dim();
    let gamma = |j: usize, h: usize| -> R {
        let member = j / family.dim();
        let coord = j % family.dim();
        family.members()[member].value(h)[coord].clone()
    };
    let mut out = Vec::with_capacity(blocks.len());
    for b in blocks {
        let mut constraints = Vec::new();
        for h in b.iter() {
            let mut coeffs: Vec<R> = (0..k).map(|j| gamma(j, h)).collect();
            coeffs.push(-R::one());
            constraints.push(Constraint {
                coeffs,
                rel: Rel::Ge,
                rhs: R::zero(),
            });
        }
        let mut coeffs = vec![R::one(); k];
        coeffs.push(R::zero());
        constraints.push(Constraint {
            coeffs,
            rel: Rel::Eq,
            rhs: R::one(),
        });
        let mut objective = vec![R::zero(); k];
        objective.push(R::one());
        match maximize(&objective, &constraints)? {
            LpOutcome::Optimal { value, solution } => {
                if !satisfies(&constraints, &solution) {
                    return Err(Error::paper_check(
                        "separation program returned an infeasible optimum",
                    ));
                }
                out.push(BlockCertificate {
                    tstar: value,
                    lambda: solution[..k].to_vec(),
                });
            }
            other => {
                return Err(Error::paper_check(format!(
                    "separation program is feasible and bounded by construction, got {other:?}"
                )));
            }
        }
    }
    Ok(out)
}

/// The canonical level-set blocks of a combination: for each coordinate and
/// each distinct positive value, the elements where the coordinate reaches
/// that value. Deduplicated, ordered coordinate-major with thresholds
/// descending.
pub fn canonical_blocks<R: Scalar>(m: &FiniteMonoid, f0: &SetFunction<R>) -> Vec<ElementSubset> {
    let mut blocks: Vec<ElementSubset> = Vec::new();
    for coord in 0..f0.dim() {
        let mut levels: Vec<R> = (0..m.len())
            .map(|f| f0.value(f)[coord].clone())
            .filter(|v| *v > R::zero())
            .collect();
        levels.sort();
        levels.dedup();
        levels.reverse();
        for v in levels {
            let mut b = ElementSubset::empty(m.len());
            for f in 0..m.len() {
                if f0.value(f)[coord] >= v {
                    b.insert(f);
                }
            }
            if !blocks.contains(&b) {
                blocks.push(b);
            }
        }
    }
    blocks
}

/// The four extraction conditions evaluated on a family, with the finitely
/// contentful implication checks.
#[derive(Debug, Clone)]
pub struct KelleyReport<R: Scalar> {
    /// Condition (i) analog: kappa of the order ideal generated by the
    /// family inside the min-composed function semigroup.
    pub family_ideal_kappa: usize,
    /// Condition (ii): the separation certificates over the canonical
    /// blocks, all optima positive.
    pub separation: Vec<BlockCertificate<R>>,
    pub separation_positive: bool,
    /// Condition (iii): the extraction with equal zero sets.
    pub extract: KelleyExtract<R>,
    /// Condition (iv), both sides: members' zero sets all radical monoid
    /// ideals, and the classification of the common zero set.
    pub all_members_sigma: bool,
    pub common_zero_flags: IdealFlags,
    /// The family's common zero set is the whole monoid.
    pub trivial: bool,
    /// Implication checks: extraction implies positive separation, and
    /// extraction implies the common zero set is a radical order ideal.
    pub extract_implies_separation: bool,
    pub extract_implies_radical_order: bool,
}

/// Evaluates the four conditions. The countable-antichain content of
/// condition (i) is finitely vacuous; its kappa is computed exactly on the
/// enumerated ideal. Implications are recorded, not enforced: they hold on
/// idempotent base monoids but the zero set of a combination need not be
/// radical in general.
pub fn kelley_report<R: Scalar>(
    m: &FiniteMonoid,
    family: &FunctionFamily<R>,
    norm: Norm,
    ideal_limit: usize,
) -> Result<KelleyReport<R>> {
    let extract = kelley_extract(m, family, norm)?;
    let common = family.common_zero_set(m);
    let trivial = common.card() == m.len();
    let blocks = canonical_blocks(m, &extract.f0);
    let separation = kelley_separation_lp(m, family, &blocks)?;
    let separation_positive = separation.iter().all(|c| c.tstar > R::zero());
    let family_ideal_kappa = family_ideal_kappa(m, family, ideal_limit)?;
    let all_members_sigma = family.members().iter().all(|f| in_mon_sigma(m, f));
    let common_zero_flags = classify(m, &common).flags;
    let extract_implies_separation = trivial || separation_positive;
    let extract_implies_radical_order =
        trivial || (common_zero_flags.radical && common_zero_flags.order_ideal);
    Ok(KelleyReport {
        family_ideal_kappa,
        separation,
        separation_positive,
        extract,
        all_members_sigma,
        common_zero_flags,
        trivial,
        extract_implies_separation,
        extract_implies_radical_order,
    })
}

/// Kappa of the order ideal generated by the family inside the function
/// semigroup. Min-disjointness of monotone minorants depends only on their
/// supports, which are the nonempty up-sets contained in a member's
/// support, so the computation enumerates those and runs the clique solver
/// on set disjointness.
pub fn family_ideal_kappa<R: Scalar>(
    m: &FiniteMonoid,
    family: &FunctionFamily<R>,
    ideal_limit: usize,
) -> Result<usize> {
    let n = m.len();
    let supports: Vec<ElementSubset> = family
        .members()
        .iter()
        .map(|f| {
            let mut s = ElementSubset::empty(n);
            for x in 0..n {
                if !f.is_zero_at(x) {
                    s.insert(x);
                }
            }
            s
        })
        .collect();
    let mut carriers: Vec<ElementSubset> = Vec::new();
    for ideal in enumerate_ideals(m, IdealKind::Order, ideal_limit)? {
        let up = ideal.set.complement();
        if up.is_empty() {
            continue;
        }
        for sup in &supports {
            let candidate = up.intersect(sup);
            if candidate == up && !carriers.contains(&up) {
                carriers.push(up.clone());
                break;
            }
        }
    }
    let v = carriers.len();
    let mut adj = vec![vec![false; v]; v];
    for a in 0..v {
        for b in 0..v {
            if a != b && carriers[a].intersect(&carriers[b]).is_empty() {
                adj[a][b] = true;
            }
        }
    }
    Ok(max_clique(&adj).0 + 1)
}

/// The factorization check and the antichain comparison it licenses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RnReport {
    /// Zero-set inclusion is equivalent to factorization through an order
    /// projection, for every pair.
    pub holds: bool,
    /// First `(psi index, monfam index)` violating the equivalence.
    pub witness: Option<(usize, usize)>,
    /// kappa of the family ideal and of the base monoid modulo the
    /// combination's zero set; the first never exceeds the second when the
    /// equivalence holds.
    pub kappa_family: usize,
    pub kappa_zero: usize,
}

/// Checks, for every `G` in the family and `F` in the reference family,
/// that `F^{-1}(0) ⊆ G^{-1}(0)` holds exactly when `G = F∘P` for some
/// enumerated order projection `P`; when it holds, asserts the antichain
/// comparison `kappa(I(Psi)) <= kappa(M, F0^{-1}(0))`.
pub fn rn_check<R: Scalar>(
    m: &FiniteMonoid,
    psi: &FunctionFamily<R>,
    monfam: &FunctionFamily<R>,
    norm: Norm,
    map_guard: u64,
    ideal_limit: usize,
) -> Result<RnReport> {
    for f in monfam.members() {
        if f.min_with(f) != *f {
            return Err(Error::hypothesis(
                "reference family is not idempotent under its composition",
            ));
        }
    }
    let proj = enumerate_projections(m, ProjKind::Order, map_guard)?;
    let mut holds = true;
    let mut witness = None;
    'pairs: for (gi, g) in psi.members().iter().enumerate() {
        for (fi, f) in monfam.members().iter().enumerate() {
            let zf = zero_set(m, f).set;
            let zg = zero_set(m, g).set;
            let inclusion = zf.is_subset_of(&zg);
            let factors = proj
                .iter()
                .any(|p| matches!(f.compose_map(m, p), Ok(c) if c == *g));
            if inclusion != factors {
                holds = false;
                witness = Some((gi, fi));
                break 'pairs;
            }
        }
    }
    let extract = kelley_extract(m, psi, norm)?;
    let kappa_family = family_ideal_kappa(m, psi, ideal_limit)?;
    let z0 = zero_set(m, &extract.f0).set;
    let kappa_zero = crate::kappa::kappa(m, &ElementSubset::full(m.len()), &z0).k;
    if holds && kappa_family > kappa_zero {
        return Err(Error::paper_check(format!(
            "family antichain bound {kappa_family} exceeds base bound {kappa_zero}"
        )));
    }
    Ok(RnReport {
        holds,
        witness,
        kappa_family,
        kappa_zero,
    })
}
