//! Finite positively ordered monoids: representation, axiom verification,
//! and the canonical example families.
//!
//! An element is identified by its index into the element list. The order
//! matrix uses the convention `leq[a][b] == (a <= b)`; the unit is the top
//! element and `zero` is the least element.

use crate::subset::ElementSubset;
use crate::{Error, Result, DEFAULT_SIZE_GUARD};

/// A finite commutative monoid with a compatible partial order, a top unit
/// and a least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    elements: Vec<String>,
    op: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
    unit: usize,
    zero: usize,
}

impl FiniteMonoid {
    /// Builds a monoid from raw tables, validating shapes and index ranges
    /// only. Axioms are checked separately by [`verify_axioms`]; this split
    /// lets the verifier run on structurally sound but lawless tables.
    pub fn new(
        elements: Vec<String>,
        op: Vec<Vec<usize>>,
        leq: Vec<Vec<bool>>,
        unit: usize,
        zero: usize,
    ) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::structure("monoid must have at least one element"));
        }
        if op.len() != n || op.iter().any(|row| row.len() != n) {
            return Err(Error::structure(format!("op table is not {n}x{n}")));
        }
        if let Some(&bad) = op.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::structure(format!(
                "op table entry {bad} out of range for {n} elements"
            )));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::structure(format!("leq matrix is not {n}x{n}")));
        }
        if unit >= n || zero >= n {
            return Err(Error::structure(format!(
                "unit {unit} or zero {zero} out of range for {n} elements"
            )));
        }
        Ok(FiniteMonoid {
            elements,
            op,
            leq,
            unit,
            zero,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a][b]
    }

    pub fn op_table(&self) -> &Vec<Vec<usize>> {
        &self.op
    }

    pub fn leq_table(&self) -> &Vec<Vec<bool>> {
        &self.leq
    }

    /// `a <= b` in the monoid order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// `f^n` for `n >= 1`.
    pub fn power(&self, f: usize, n: usize) -> usize {
        let mut acc = f;
        for _ in 1..n {
            acc = self.op[acc][f];
        }
        acc
    }

    /// The principal down-set `{g : g <= f}` in ascending index order.
    pub fn down_set(&self, f: usize) -> ElementSubset {
        let mut s = ElementSubset::empty(self.len());
        for g in 0..self.len() {
            if self.leq[g][f] {
                s.insert(g);
            }
        }
        s
    }

    /// The up-set `{g : g >= f}`.
    pub fn up_set(&self, f: usize) -> ElementSubset {
        let mut s = ElementSubset::empty(self.len());
        for g in 0..self.len() {
            if self.leq[f][g] {
                s.insert(g);
            }
        }
        s
    }
}

/// Outcome of a single axiom check: `ok`, or the first counterexample tuple
/// in canonical scan order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub ok: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck {
            ok: true,
            witness: None,
        }
    }

    fn fail(witness: Vec<usize>) -> Self {
        AxiomCheck {
            ok: false,
            witness: Some(witness),
        }
    }
}

/// Per-axiom verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// `(fg)h == f(gh)` for all triples.
    pub associative: AxiomCheck,
    /// `fg == gf` for all pairs.
    pub commutative: AxiomCheck,
    /// the designated unit is a two-sided identity.
    pub unit_ok: AxiomCheck,
    /// `leq` is reflexive, antisymmetric and transitive.
    pub order_ok: AxiomCheck,
    /// `f >= g` implies `fh >= gh`.
    pub compat_ok: AxiomCheck,
    /// the unit is the top element.
    pub top_ok: AxiomCheck,
    /// the designated zero is the least element.
    pub least_ok: AxiomCheck,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.associative.ok
            && self.commutative.ok
            && self.unit_ok.ok
            && self.order_ok.ok
            && self.compat_ok.ok
            && self.top_ok.ok
            && self.least_ok.ok
    }

    /// `(name, check)` pairs in report order.
    pub fn checks(&self) -> Vec<(&'static str, &AxiomCheck)> {
        vec![
            ("associative", &self.associative),
            ("commutative", &self.commutative),
            ("unit", &self.unit_ok),
            ("order", &self.order_ok),
            ("compat", &self.compat_ok),
            ("top", &self.top_ok),
            ("least", &self.least_ok),
        ]
    }
}

/// Checks every monoid and order axiom exhaustively, reporting the first
/// counterexample tuple per failed law. Malformed tables are a structural
/// error raised at [`FiniteMonoid::new`], not an axiom failure.
pub fn verify_axioms(m: &FiniteMonoid) -> AxiomReport {
    let n = m.len();

    let mut associative = AxiomCheck::pass();
    'assoc: for f in 0..n {
        for g in 0..n {
            for h in 0..n {
                if m.op(m.op(f, g), h) != m.op(f, m.op(g, h)) {
                    associative = AxiomCheck::fail(vec![f, g, h]);
                    break 'assoc;
                }
            }
        }
    }

    let mut commutative = AxiomCheck::pass();
    'comm: for f in 0..n {
        for g in 0..n {
            if m.op(f, g) != m.op(g, f) {
                commutative = AxiomCheck::fail(vec![f, g]);
                break 'comm;
            }
        }
    }

    let mut unit_ok = AxiomCheck::pass();
    for f in 0..n {
        if m.op(m.unit(), f) != f || m.op(f, m.unit()) != f {
            unit_ok = AxiomCheck::fail(vec![f]);
            break;
        }
    }

    let order_ok = check_partial_order(&m.leq);

    let mut compat_ok = AxiomCheck::pass();
    'compat: for g in 0..n {
        for f in 0..n {
            if !m.leq(g, f) {
                continue;
            }
            for h in 0..n {
                if !m.leq(m.op(g, h), m.op(f, h)) {
                    compat_ok = AxiomCheck::fail(vec![g, f, h]);
                    break 'compat;
                }
            }
        }
    }

    let mut top_ok = AxiomCheck::pass();
    for f in 0..n {
        if !m.leq(f, m.unit()) {
            top_ok = AxiomCheck::fail(vec![f]);
            break;
        }
    }

    let mut least_ok = AxiomCheck::pass();
    for f in 0..n {
        if !m.leq(m.zero(), f) {
            least_ok = AxiomCheck::fail(vec![f]);
            break;
        }
    }

    AxiomReport {
        associative,
        commutative,
        unit_ok,
        order_ok,
        compat_ok,
        top_ok,
        least_ok,
    }
}

fn check_partial_order(leq: &[Vec<bool>]) -> AxiomCheck {
    let n = leq.len();
    for f in 0..n {
        if !leq[f][f] {
            return AxiomCheck::fail(vec![f]);
        }
    }
    for f in 0..n {
        for g in 0..n {
            if f != g && leq[f][g] && leq[g][f] {
                return AxiomCheck::fail(vec![f, g]);
            }
        }
    }
    for f in 0..n {
        for g in 0..n {
            if !leq[f][g] {
                continue;
            }
            for h in 0..n {
                if leq[g][h] && !leq[f][h] {
                    return AxiomCheck::fail(vec![f, g, h]);
                }
            }
        }
    }
    AxiomCheck::pass()
}

/// Whether every element is idempotent, and whether the least element is the
/// only nilpotent one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralPredicates {
    pub idempotent: bool,
    pub not_nilpotent: bool,
}

/// Decides idempotency and nilpotence-freeness. Powers of each element are
/// iterated until they cycle, so `f^n==0 for some n` is decided exactly.
pub fn structural_predicates(m: &FiniteMonoid) -> StructuralPredicates {
    let n = m.len();
    let idempotent = (0..n).all(|f| m.op(f, f) == f);
    let mut not_nilpotent = true;
    for f in 0..n {
        if f == m.zero() {
            continue;
        }
        let mut seen = vec![false; n];
        let mut acc = f;
        while !seen[acc] {
            seen[acc] = true;
            acc = m.op(acc, f);
        }
        if seen[m.zero()] {
            not_nilpotent = false;
            break;
        }
    }
    StructuralPredicates {
        idempotent,
        not_nilpotent,
    }
}

/// Equips a bare commutative operation table with its natural order
/// (`f >= g` iff `f` divides `g`). Fails if the table is not an
/// associative commutative monoid, if divisibility is not antisymmetric,
/// or if no least element exists.
pub fn natural_order(elements: Vec<String>, op: Vec<Vec<usize>>) -> Result<FiniteMonoid> {
    let n = elements.len();
    if n == 0 || op.len() != n || op.iter().any(|r| r.len() != n) {
        return Err(Error::structure(format!("op table is not {n}x{n}")));
    }
    if let Some(&bad) = op.iter().flatten().find(|&&v| v >= n) {
        return Err(Error::structure(format!("op entry {bad} out of range")));
    }
    for f in 0..n {
        for g in 0..n {
            if op[f][g] != op[g][f] {
                return Err(Error::hypothesis(format!(
                    "operation not commutative at ({f},{g})"
                )));
            }
            for h in 0..n {
                if op[op[f][g]][h] != op[f][op[g][h]] {
                    return Err(Error::hypothesis(format!(
                        "operation not associative at ({f},{g},{h})"
                    )));
                }
            }
        }
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|f| op[e][f] == f))
        .ok_or_else(|| Error::hypothesis("operation has no identity element"))?;

    // leq[g][f] (g <= f) iff f divides g.
    let mut leq = vec![vec![false; n]; n];
    for f in 0..n {
        for h in 0..n {
            leq[op[f][h]][f] = true;
        }
    }
    for f in 0..n {
        for g in 0..n {
            if f != g && leq[f][g] && leq[g][f] {
                return Err(Error::hypothesis(format!(
                    "natural order antisymmetry fails: elements {f} and {g} divide each other"
                )));
            }
        }
    }
    let zero = (0..n)
        .find(|&z| (0..n).all(|f| leq[z][f]))
        .ok_or_else(|| Error::hypothesis("natural order has no least element"))?;
    FiniteMonoid::new(elements, op, leq, unit, zero)
}

/// `{f : hf = 0 for all h in T}`. Always contains the zero element; `T`
/// empty gives all of `M`.
pub fn perp(m: &FiniteMonoid, t: &ElementSubset) -> ElementSubset {
    let mut out = ElementSubset::empty(m.len());
    for f in 0..m.len() {
        if t.iter().all(|h| m.op(h, f) == m.zero()) {
            out.insert(f);
        }
    }
    out
}

fn checked_pow(base: usize, exp: usize, guard: usize, what: &str) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base)
            .filter(|&v| v <= guard)
            .ok_or_else(|| Error::guard(what, u64::MAX, guard as u64))?;
    }
    Ok(acc)
}

/// Decodes a row-major tuple index into coordinates, first coordinate most
/// significant.
pub fn tuple_coords(base: usize, arity: usize, index: usize) -> Vec<usize> {
    let mut coords = vec![0; arity];
    let mut rest = index;
    for slot in coords.iter_mut().rev() {
        *slot = rest % base;
        rest /= base;
    }
    coords
}

fn tuple_index(base: usize, coords: &[usize]) -> usize {
    coords.iter().fold(0, |acc, &c| acc * base + c)
}

/// The k-fold product monoid with pointwise operation and order. Elements
/// are tuples indexed row-major, first coordinate most significant.
pub fn product_monoid(m: &FiniteMonoid, k: usize, guard: usize) -> Result<FiniteMonoid> {
    if k == 0 {
        return Err(Error::structure("product arity must be positive"));
    }
    let n = m.len();
    let size = checked_pow(n, k, guard, "product monoid size")?;
    let mut elements = Vec::with_capacity(size);
    for idx in 0..size {
        let coords = tuple_coords(n, k, idx);
        let names: Vec<&str> = coords.iter().map(|&c| m.name(c)).collect();
        elements.push(format!("({})", names.join(",")));
    }
    let mut op = vec![vec![0; size]; size];
    let mut leq = vec![vec![false; size]; size];
    for a in 0..size {
        let ca = tuple_coords(n, k, a);
        for b in 0..size {
            let cb = tuple_coords(n, k, b);
            let prod: Vec<usize> = ca.iter().zip(&cb).map(|(&x, &y)| m.op(x, y)).collect();
            op[a][b] = tuple_index(n, &prod);
            leq[a][b] = ca.iter().zip(&cb).all(|(&x, &y)| m.leq(x, y));
        }
    }
    let unit = tuple_index(n, &vec![m.unit(); k]);
    let zero = tuple_index(n, &vec![m.zero(); k]);
    FiniteMonoid::new(elements, op, leq, unit, zero)
}

/// Point embedding: the monoid generated by the coordinate evaluation maps
/// on the k-fold product, under pointwise operation and order.
///
/// Returns the generated monoid `W` and the map sending coordinate `i` to
/// the index of its evaluation map in `W`. The least element of `W` is the
/// product of all of its elements. If the base monoid is idempotent or not
/// nilpotent then so is `W`; both transfers are verified.
pub fn embed_points(
    m: &FiniteMonoid,
    k: usize,
    guard: usize,
) -> Result<(FiniteMonoid, Vec<usize>)> {
    let product = product_monoid(m, k, guard)?;
    let psize = product.len();
    let n = m.len();

    // Each element of W is a function product -> m, stored as a value vector.
    // Track, per element, the first exponent profile that produced it for
    // naming.
    let unit_vec = vec![m.unit(); psize];
    let mut values: Vec<Vec<usize>> = vec![unit_vec];
    let mut exponents: Vec<Vec<usize>> = vec![vec![0; k]];
    let mut gen_index = vec![0usize; k];
    for i in 0..k {
        let eval: Vec<usize> = (0..psize).map(|f| tuple_coords(n, k, f)[i]).collect();
        let mut e = vec![0; k];
        e[i] = 1;
        match values.iter().position(|v| *v == eval) {
            Some(pos) => gen_index[i] = pos,
            None => {
                values.push(eval);
                exponents.push(e);
                gen_index[i] = values.len() - 1;
            }
        }
    }

    // Closure under pointwise product, breadth-first.
    let mut frontier: Vec<usize> = (0..values.len()).collect();
    while let Some(w) = frontier.pop() {
        for i in 0..k {
            let g = gen_index[i];
            let prod: Vec<usize> = values[w]
                .iter()
                .zip(&values[g])
                .map(|(&a, &b)| m.op(a, b))
                .collect();
            if !values.contains(&prod) {
                let mut e = exponents[w].clone();
                e[i] += 1;
                values.push(prod);
                exponents.push(e);
                frontier.push(values.len() - 1);
                if values.len() > guard {
                    return Err(Error::guard(
                        "point embedding closure",
                        values.len() as u64,
                        guard as u64,
                    ));
                }
            }
        }
    }

    // Canonical element order: lexicographic by value vector.
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]));
    let rank = {
        let mut r = vec![0; values.len()];
        for (new, &old) in order.iter().enumerate() {
            r[old] = new;
        }
        r
    };
    let sorted_values: Vec<Vec<usize>> = order.iter().map(|&i| values[i].clone()).collect();
    let elements: Vec<String> = order
        .iter()
        .map(|&i| exponent_name(&exponents[i]))
        .collect();
    let size = sorted_values.len();

    let find = |v: &Vec<usize>| -> Result<usize> {
        sorted_values
            .iter()
            .position(|w| w == v)
            .ok_or_else(|| Error::paper_check("point embedding closure not closed"))
    };

    let mut op = vec![vec![0; size]; size];
    let mut leq = vec![vec![false; size]; size];
    for a in 0..size {
        for b in 0..size {
            let prod: Vec<usize> = sorted_values[a]
                .iter()
                .zip(&sorted_values[b])
                .map(|(&x, &y)| m.op(x, y))
                .collect();
            op[a][b] = find(&prod)?;
            leq[a][b] = sorted_values[a]
                .iter()
                .zip(&sorted_values[b])
                .all(|(&x, &y)| m.leq(x, y));
        }
    }
    let unit = find(&vec![m.unit(); psize])?;
    // The product of all elements is below each of them and lies in the
    // closure, so it is the least element.
    let mut bottom = vec![m.unit(); psize];
    for v in &sorted_values {
        for (slot, &x) in bottom.iter_mut().zip(v) {
            *slot = m.op(*slot, x);
        }
    }
    let zero = find(&bottom)?;
    let w = FiniteMonoid::new(elements, op, leq, unit, zero)?;

    let base = structural_predicates(m);
    let emb = structural_predicates(&w);
    if base.idempotent && !emb.idempotent {
        return Err(Error::paper_check(
            "point embedding of an idempotent monoid is not idempotent",
        ));
    }
    if base.not_nilpotent && !emb.not_nilpotent {
        return Err(Error::paper_check(
            "point embedding of a nilpotent-free monoid has a nilpotent element",
        ));
    }

    let point_map: Vec<usize> = gen_index.iter().map(|&g| rank[g]).collect();
    Ok((w, point_map))
}

fn exponent_name(e: &[usize]) -> String {
    let mut parts = Vec::new();
    for (i, &exp) in e.iter().enumerate() {
        match exp {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{exp}")),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Embeds a p.o. semigroup into a p.o. monoid by adjoining a top identity.
///
/// The input tables must describe a commutative associative semigroup whose
/// order is compatible (`f >= g` implies `fh >= gh`), satisfies `f >= fg`,
/// and has a least element. The new identity is appended as the last
/// element.
pub fn adjoin_unit(
    elements: Vec<String>,
    op: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
) -> Result<FiniteMonoid> {
    let n = elements.len();
    if n == 0 || op.len() != n || op.iter().any(|r| r.len() != n) || leq.len() != n {
        return Err(Error::structure("semigroup tables malformed"));
    }
    if let Some(&bad) = op.iter().flatten().find(|&&v| v >= n) {
        return Err(Error::structure(format!("op entry {bad} out of range")));
    }
    for f in 0..n {
        for g in 0..n {
            if op[f][g] != op[g][f] {
                return Err(Error::hypothesis(format!(
                    "semigroup not commutative at ({f},{g})"
                )));
            }
            for h in 0..n {
                if op[op[f][g]][h] != op[f][op[g][h]] {
                    return Err(Error::hypothesis(format!(
                        "semigroup not associative at ({f},{g},{h})"
                    )));
                }
            }
        }
    }
    let order = check_partial_order(&leq);
    if !order.ok {
        return Err(Error::hypothesis(format!(
            "semigroup order is not a partial order (witness {:?})",
            order.witness
        )));
    }
    for g in 0..n {
        for f in 0..n {
            if !leq[g][f] {
                continue;
            }
            for h in 0..n {
                if !leq[op[g][h]][op[f][h]] {
                    return Err(Error::hypothesis(format!(
                        "semigroup order incompatible with operation at ({g},{f},{h})"
                    )));
                }
            }
        }
    }
    for f in 0..n {
        for g in 0..n {
            if !leq[op[f][g]][f] {
                return Err(Error::hypothesis(format!(
                    "semigroup violates f >= fg at ({f},{g})"
                )));
            }
        }
    }
    let zero = (0..n)
        .find(|&z| (0..n).all(|f| leq[z][f]))
        .ok_or_else(|| Error::hypothesis("semigroup has no least element"))?;

    let unit = n;
    let mut new_elements = elements;
    new_elements.push("1".to_string());
    let mut new_op = vec![vec![0; n + 1]; n + 1];
    let mut new_leq = vec![vec![false; n + 1]; n + 1];
    for f in 0..n {
        for g in 0..n {
            new_op[f][g] = op[f][g];
            new_leq[f][g] = leq[f][g];
        }
        new_op[f][unit] = f;
        new_op[unit][f] = f;
        new_leq[f][unit] = true;
    }
    new_op[unit][unit] = unit;
    new_leq[unit][unit] = true;
    FiniteMonoid::new(new_elements, new_op, new_leq, unit, zero)
}

/// The canonical example families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Linear order `0 < 1 < ... < n-1` under `min`; the top is the unit.
    Chain(usize),
    /// Subsets of `k` atoms under intersection; the full set is the unit,
    /// the empty set the least element. Element index == bitmask.
    BooleanAlgebra(usize),
    /// Exponent vectors in `{0..cap}^n` under coordinatewise capped
    /// addition with the natural order; unit `(0,..,0)`, least
    /// `(cap,..,cap)`.
    CappedExponent(usize, usize),
    /// Vectors in `{0..l}^d` under coordinatewise `min`; the top corner is
    /// the unit.
    Grid(usize, usize),
}

/// Builds a family member under an explicit size guard.
pub fn build_family(family: Family, guard: usize) -> Result<FiniteMonoid> {
    match family {
        Family::Chain(n) => {
            if n == 0 {
                return Err(Error::structure("chain size must be positive"));
            }
            if n > guard {
                return Err(Error::guard("chain", n as u64, guard as u64));
            }
            let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let op: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
            let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
            FiniteMonoid::new(elements, op, leq, n - 1, 0)
        }
        Family::BooleanAlgebra(k) => {
            if k == 0 {
                return Err(Error::structure("boolean algebra needs at least one atom"));
            }
            if k > 26 {
                return Err(Error::structure("boolean algebra atoms limited to 26"));
            }
            let size = checked_pow(2, k, guard, "boolean algebra")?;
            let elements: Vec<String> = (0..size).map(|mask| subset_name(mask, k)).collect();
            let op: Vec<Vec<usize>> = (0..size)
                .map(|a| (0..size).map(|b| a & b).collect())
                .collect();
            let leq: Vec<Vec<bool>> = (0..size)
                .map(|a| (0..size).map(|b| a & b == a).collect())
                .collect();
            FiniteMonoid::new(elements, op, leq, size - 1, 0)
        }
        Family::CappedExponent(n, cap) => {
            if n == 0 || cap == 0 {
                return Err(Error::structure(
                    "capped exponent needs positive dimension and cap",
                ));
            }
            let base = cap + 1;
            let size = checked_pow(base, n, guard, "capped exponent monoid")?;
            let mut elements = Vec::with_capacity(size);
            let mut op = vec![vec![0; size]; size];
            let mut leq = vec![vec![false; size]; size];
            for a in 0..size {
                let ca = tuple_coords(base, n, a);
                elements.push(format!(
                    "({})",
                    ca.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ));
                for b in 0..size {
                    let cb = tuple_coords(base, n, b);
                    let sum: Vec<usize> = ca
                        .iter()
                        .zip(&cb)
                        .map(|(&x, &y)| (x + y).min(cap))
                        .collect();
                    op[a][b] = tuple_index(base, &sum);
                    // a <= b iff b divides a iff a dominates b coordinatewise.
                    leq[a][b] = ca.iter().zip(&cb).all(|(&x, &y)| x >= y);
                }
            }
            let unit = 0;
            let zero = size - 1;
            FiniteMonoid::new(elements, op, leq, unit, zero)
        }
        Family::Grid(d, l) => {
            if d == 0 || l == 0 {
                return Err(Error::structure("grid needs positive dimension and side"));
            }
            let base = l + 1;
            let size = checked_pow(base, d, guard, "grid monoid")?;
            let mut elements = Vec::with_capacity(size);
            let mut op = vec![vec![0; size]; size];
            let mut leq = vec![vec![false; size]; size];
            for a in 0..size {
                let ca = tuple_coords(base, d, a);
                elements.push(format!(
                    "({})",
                    ca.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                ));
                for b in 0..size {
                    let cb = tuple_coords(base, d, b);
                    let meet: Vec<usize> = ca.iter().zip(&cb).map(|(&x, &y)| x.min(y)).collect();
                    op[a][b] = tuple_index(base, &meet);
                    leq[a][b] = ca.iter().zip(&cb).all(|(&x, &y)| x <= y);
                }
            }
            FiniteMonoid::new(elements, op, leq, size - 1, 0)
        }
    }
}

fn subset_name(mask: usize, k: usize) -> String {
    let names: Vec<String> = (0..k)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    format!("{{{}}}", names.join(","))
}

/// `Chain(n)` under the default size guard.
pub fn chain(n: usize) -> Result<FiniteMonoid> {
    build_family(Family::Chain(n), DEFAULT_SIZE_GUARD)
}

/// `BooleanAlgebra(k)` under the default size guard.
pub fn boolean_algebra(k: usize) -> Result<FiniteMonoid> {
    build_family(Family::BooleanAlgebra(k), DEFAULT_SIZE_GUARD)
}

/// `CappedExponent(n, cap)` under the default size guard.
pub fn capped_exponent(n: usize, cap: usize) -> Result<FiniteMonoid> {
    build_family(Family::CappedExponent(n, cap), DEFAULT_SIZE_GUARD)
}

/// `Grid(d, l)` under the default size guard.
pub fn grid(d: usize, l: usize) -> Result<FiniteMonoid> {
    build_family(Family::Grid(d, l), DEFAULT_SIZE_GUARD)
}

/// Recovers grid coordinates from an element index of `grid(d, l)`.
pub fn grid_coords(d: usize, l: usize, index: usize) -> Vec<usize> {
    tuple_coords(l + 1, d, index)
}

/// Recovers the exponent vector from an element index of
/// `capped_exponent(n, cap)`.
pub fn capped_coords(n: usize, cap: usize, index: usize) -> Vec<usize> {
    tuple_coords(cap + 1, n, index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_axioms_hold() {
        let c3 = chain(3).unwrap();
        let report = verify_axioms(&c3);
        assert!(report.all_ok(), "{report:?}");
        assert_eq!(c3.unit(), 2);
        assert_eq!(c3.zero(), 0);
    }

    #[test]
    fn broken_associativity_reports_witness() {
        // Altering {a} ∩ {b} to the full set breaks associativity:
        // ({a}{a}){b} = full while {a}({a}{b}) = {a}.
        let b2 = boolean_algebra(2).unwrap();
        let mut op = b2.op_table().clone();
        op[1][2] = 3;
        let broken = FiniteMonoid::new(
            b2.elements().to_vec(),
            op,
            b2.leq_table().clone(),
            b2.unit(),
            b2.zero(),
        )
        .unwrap();
        let report = verify_axioms(&broken);
        assert!(!report.associative.ok);
        assert_eq!(report.associative.witness, Some(vec![1, 1, 2]));
        assert!(!report.commutative.ok);
    }

    #[test]
    fn capped_exponent_axioms_exhaustive() {
        let e32 = capped_exponent(3, 2).unwrap();
        assert_eq!(e32.len(), 27);
        assert!(verify_axioms(&e32).all_ok());
        let preds = structural_predicates(&e32);
        assert!(!preds.idempotent);
        assert!(!preds.not_nilpotent);
    }

    #[test]
    fn structural_predicates_examples() {
        let b3 = boolean_algebra(3).unwrap();
        assert_eq!(
            structural_predicates(&b3),
            StructuralPredicates {
                idempotent: true,
                not_nilpotent: true
            }
        );
        let e22 = capped_exponent(2, 2).unwrap();
        assert_eq!(
            structural_predicates(&e22),
            StructuralPredicates {
                idempotent: false,
                not_nilpotent: false
            }
        );
        let c4 = chain(4).unwrap();
        assert_eq!(
            structural_predicates(&c4),
            StructuralPredicates {
                idempotent: true,
                not_nilpotent: true
            }
        );
    }

    #[test]
    fn natural_order_of_boolean_is_inclusion() {
        let b3 = boolean_algebra(3).unwrap();
        let nat = natural_order(b3.elements().to_vec(), b3.op_table().clone()).unwrap();
        assert_eq!(nat.leq_table(), b3.leq_table());
        assert_eq!(nat.unit(), b3.unit());
        assert_eq!(nat.zero(), b3.zero());
    }

    #[test]
    fn natural_order_of_chain_is_chain_order() {
        let c3 = chain(3).unwrap();
        let nat = natural_order(c3.elements().to_vec(), c3.op_table().clone()).unwrap();
        assert_eq!(nat.leq_table(), c3.leq_table());
    }

    #[test]
    fn generated_monoids_carry_their_natural_order() {
        for m in [
            chain(5).unwrap(),
            boolean_algebra(3).unwrap(),
            grid(2, 2).unwrap(),
            capped_exponent(2, 2).unwrap(),
        ] {
            let nat = natural_order(m.elements().to_vec(), m.op_table().clone()).unwrap();
            assert_eq!(nat.leq_table(), m.leq_table());
            assert_eq!(nat.unit(), m.unit());
            assert_eq!(nat.zero(), m.zero());
        }
    }

    #[test]
    fn natural_order_rejects_group() {
        // Two-element group: 1*1=0 with unit 0, so 0 and 1 divide each other.
        let op = vec![vec![0, 1], vec![1, 0]];
        let err = natural_order(vec!["1".into(), "a".into()], op).unwrap_err();
        match err {
            Error::Hypothesis(msg) => assert!(msg.contains("antisymmetry")),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn capped_exponent_order_is_natural() {
        let e22 = capped_exponent(2, 2).unwrap();
        let nat = natural_order(e22.elements().to_vec(), e22.op_table().clone()).unwrap();
        assert_eq!(nat.leq_table(), e22.leq_table());
        assert_eq!(nat.unit(), e22.unit());
        assert_eq!(nat.zero(), e22.zero());
    }

    #[test]
    fn perp_examples() {
        let b3 = boolean_algebra(3).unwrap();
        // T = {{a}} (bitmask 1): perp = all subsets of {b,c}.
        let t = ElementSubset::singleton(8, 1);
        let p = perp(&b3, &t);
        assert_eq!(p.members(), vec![0, 2, 4, 6]);
        // T empty: everything.
        assert_eq!(perp(&b3, &ElementSubset::empty(8)).card(), 8);
        // T = {1}: only zero.
        let unit_only = ElementSubset::singleton(8, b3.unit());
        assert_eq!(perp(&b3, &unit_only).members(), vec![0]);
    }

    #[test]
    fn product_of_chains_is_boolean_like() {
        let c2 = chain(2).unwrap();
        let p = product_monoid(&c2, 2, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(p.len(), 4);
        assert!(verify_axioms(&p).all_ok());
        // (0,0) is least, (1,1) is unit; op is coordinatewise min, i.e. the
        // four-element Boolean algebra up to renaming.
        let b2 = boolean_algebra(2).unwrap();
        // map bitmask ab -> tuple index: bit0 (atom a) -> second coordinate.
        let iso = |mask: usize| -> usize { ((mask >> 1) & 1) * 2 + (mask & 1) };
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(iso(b2.op(x, y)), p.op(iso(x), iso(y)));
                assert_eq!(b2.leq(x, y), p.leq(iso(x), iso(y)));
            }
        }
        assert_eq!(iso(b2.unit()), p.unit());
        assert_eq!(iso(b2.zero()), p.zero());
    }

    #[test]
    fn product_arity_one_is_isomorphic_copy() {
        let b2 = boolean_algebra(2).unwrap();
        let p = product_monoid(&b2, 1, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(p.op_table(), b2.op_table());
        assert_eq!(p.leq_table(), b2.leq_table());
        assert_eq!(p.unit(), b2.unit());
        assert_eq!(p.zero(), b2.zero());
    }

    #[test]
    fn product_grid_axioms() {
        let c3 = chain(3).unwrap();
        let p = product_monoid(&c3, 2, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(p.len(), 9);
        assert!(verify_axioms(&p).all_ok());
    }

    #[test]
    fn grid_matches_boolean_algebra_when_binary() {
        let g = grid(2, 1).unwrap();
        let b2 = boolean_algebra(2).unwrap();
        assert_eq!(g.len(), 4);
        // index (x,y) row-major with base 2: (x,y) -> 2x+y; bitmask a=bit0.
        let iso = |mask: usize| -> usize { ((mask >> 1) & 1) * 2 + (mask & 1) };
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(iso(b2.op(x, y)), g.op(iso(x), iso(y)));
                assert_eq!(b2.leq(x, y), g.leq(iso(x), iso(y)));
            }
        }
    }

    #[test]
    fn embed_points_chain_two_generators() {
        let c2 = chain(2).unwrap();
        let (w, points) = embed_points(&c2, 2, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(w.len(), 4);
        assert!(verify_axioms(&w).all_ok());
        assert_eq!(points.len(), 2);
        assert_ne!(points[0], points[1]);
        let preds = structural_predicates(&w);
        assert!(preds.idempotent && preds.not_nilpotent);
    }

    #[test]
    fn embed_points_single_generator() {
        let c2 = chain(2).unwrap();
        let (w, points) = embed_points(&c2, 1, DEFAULT_SIZE_GUARD).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(points.len(), 1);
        assert_ne!(points[0], w.unit());
    }

    #[test]
    fn embed_points_boolean_predicates_transfer() {
        let b2 = boolean_algebra(2).unwrap();
        let (w, _) = embed_points(&b2, 2, DEFAULT_SIZE_GUARD).unwrap();
        let preds = structural_predicates(&w);
        assert!(preds.idempotent);
        assert!(preds.not_nilpotent);
    }

    #[test]
    fn adjoin_unit_trivial_semigroup() {
        let m = adjoin_unit(vec!["0".into()], vec![vec![0]], vec![vec![true]]).unwrap();
        assert_eq!(m.len(), 2);
        assert!(verify_axioms(&m).all_ok());
        let c2 = chain(2).unwrap();
        assert_eq!(m.op_table(), c2.op_table());
        assert_eq!(m.leq_table(), c2.leq_table());
    }

    #[test]
    fn adjoin_unit_rebuilds_chain() {
        // C(3) without its top: {0,1} under min.
        let op = vec![vec![0, 0], vec![0, 1]];
        let leq = vec![vec![true, true], vec![false, true]];
        let m = adjoin_unit(vec!["0".into(), "1".into()], op, leq).unwrap();
        let c3 = chain(3).unwrap();
        assert_eq!(m.op_table(), c3.op_table());
        assert_eq!(m.leq_table(), c3.leq_table());
        assert_eq!(m.unit(), c3.unit());
        assert_eq!(m.zero(), c3.zero());
    }

    #[test]
    fn adjoin_unit_rebuilds_capped_exponent() {
        let e22 = capped_exponent(2, 2).unwrap();
        let n = e22.len();
        // Strip the unit (index 0); relabel the rest as 0..n-2.
        let elements: Vec<String> = (1..n).map(|i| e22.name(i).to_string()).collect();
        let op: Vec<Vec<usize>> = (1..n)
            .map(|a| (1..n).map(|b| e22.op(a, b) - 1).collect())
            .collect();
        let leq: Vec<Vec<bool>> = (1..n)
            .map(|a| (1..n).map(|b| e22.leq(a, b)).collect())
            .collect();
        let m = adjoin_unit(elements, op, leq).unwrap();
        assert_eq!(m.len(), n);
        // Isomorphism: adjoined index i < n-1 maps to e22 index i+1, and the
        // new unit (last index) maps to e22 index 0.
        let iso = |i: usize| -> usize {
            if i == n - 1 {
                0
            } else {
                i + 1
            }
        };
        for a in 0..n {
            for b in 0..n {
                assert_eq!(iso(m.op(a, b)), e22.op(iso(a), iso(b)));
                assert_eq!(m.leq(a, b), e22.leq(iso(a), iso(b)));
            }
        }
    }

    #[test]
    fn adjoin_unit_rejects_bad_semigroups() {
        // max on {0,1} violates f >= fg.
        let op = vec![vec![0, 1], vec![1, 1]];
        let leq = vec![vec![true, true], vec![false, true]];
        let err = adjoin_unit(vec!["0".into(), "1".into()], op, leq).unwrap_err();
        match err {
            Error::Hypothesis(msg) => assert!(msg.contains("f >= fg")),
            other => panic!("unexpected error {other:?}"),
        }
        // Order incompatible with the operation.
        let op = vec![vec![0, 0], vec![0, 1]];
        let bad_leq = vec![vec![true, false], vec![true, true]];
        assert!(matches!(
            adjoin_unit(vec!["0".into(), "1".into()], op, bad_leq),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn structural_errors_are_rejected() {
        assert!(matches!(
            FiniteMonoid::new(vec![], vec![], vec![], 0, 0),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            FiniteMonoid::new(vec!["x".into()], vec![vec![1]], vec![vec![true]], 0, 0),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            FiniteMonoid::new(vec!["x".into()], vec![vec![0]], vec![vec![true]], 1, 0),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn broken_order_reports_witness() {
        let c2 = chain(2).unwrap();
        // Make the order fail antisymmetry.
        let leq = vec![vec![true, true], vec![true, true]];
        let broken = FiniteMonoid::new(
            c2.elements().to_vec(),
            c2.op_table().clone(),
            leq,
            c2.unit(),
            c2.zero(),
        )
        .unwrap();
        let report = verify_axioms(&broken);
        assert!(!report.order_ok.ok);
        assert_eq!(report.order_ok.witness, Some(vec![0, 1]));
    }

    #[test]
    fn embed_points_on_nilpotent_base() {
        // No predicate transfer obligations; the closure must still be a
        // verified monoid.
        let e12 = capped_exponent(1, 2).unwrap();
        let (w, points) = embed_points(&e12, 2, DEFAULT_SIZE_GUARD).unwrap();
        assert!(verify_axioms(&w).all_ok());
        assert_eq!(points.len(), 2);
    }

    #[test]
    fn zero_is_absorbing_in_generated_monoids() {
        for m in [
            chain(4).unwrap(),
            boolean_algebra(3).unwrap(),
            capped_exponent(2, 2).unwrap(),
            grid(2, 2).unwrap(),
        ] {
            for f in 0..m.len() {
                assert_eq!(m.op(f, m.zero()), m.zero());
            }
        }
    }

    #[test]
    fn guards_are_enforced() {
        assert!(matches!(
            build_family(Family::BooleanAlgebra(13), DEFAULT_SIZE_GUARD),
            Err(Error::Guard { .. })
        ));
        let b3 = boolean_algebra(3).unwrap();
        assert!(matches!(
            product_monoid(&b3, 5, DEFAULT_SIZE_GUARD),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn boolean_algebra_element_names() {
        let b2 = boolean_algebra(2).unwrap();
        assert_eq!(b2.elements(), &["{}", "{a}", "{b}", "{a,b}"]);
    }
}
