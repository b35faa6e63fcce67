//! The order topology and the prime topology of a finite monoid, with
//! continuity checks and a DOT rendering of the specialization order.

use std::collections::BTreeSet;

use crate::ideal::{enumerate_ideals, is_prime, IdealKind};
use crate::monoid::{perp, FiniteMonoid};
use crate::projection::EndoMap;
use crate::subset::ElementSubset;
use crate::{Error, Result};

/// A topology on the elements of a monoid, stored as the explicit family of
/// open sets in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTopology {
    opens: Vec<ElementSubset>,
}

impl FiniteTopology {
    pub fn opens(&self) -> &[ElementSubset] {
        &self.opens
    }

    pub fn is_open(&self, s: &ElementSubset) -> bool {
        self.opens.contains(s)
    }

    pub fn is_closed(&self, s: &ElementSubset) -> bool {
        self.is_open(&s.complement())
    }

    fn from_set(n: usize, opens: BTreeSet<Vec<bool>>) -> Self {
        let mut opens: Vec<ElementSubset> = opens
            .into_iter()
            .map(|mask| {
                debug_assert_eq!(mask.len(), n);
                ElementSubset::from_mask(mask)
            })
            .collect();
        opens.sort_by_key(|s| s.shortlex_key());
        FiniteTopology { opens }
    }

    /// ∅ and the ground set present; closure under union and intersection.
    fn verify_topology(&self, n: usize) -> Result<()> {
        if !self.opens.iter().any(|s| s.is_empty()) || !self.opens.iter().any(|s| s.card() == n) {
            return Err(Error::paper_check("topology misses the empty or full set"));
        }
        for a in &self.opens {
            for b in &self.opens {
                if !self.is_open(&a.union(b)) || !self.is_open(&a.intersect(b)) {
                    return Err(Error::paper_check(
                        "topology not closed under union or intersection",
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Whether the map pulls opens back to opens; on failure reports the first
/// offending open set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityCheck {
    pub continuous: bool,
    pub witness: Option<ElementSubset>,
}

pub fn is_continuous(f: &EndoMap, tau: &FiniteTopology) -> ContinuityCheck {
    for open in &tau.opens {
        let mut pre = ElementSubset::empty(f.len());
        for x in 0..f.len() {
            if open.contains(f.apply(x)) {
                pre.insert(x);
            }
        }
        if !tau.is_open(&pre) {
            return ContinuityCheck {
                continuous: false,
                witness: Some(open.clone()),
            };
        }
    }
    ContinuityCheck {
        continuous: true,
        witness: None,
    }
}

/// Continuity of the two-argument composition map for the product topology.
/// On finite spaces both topologies here are unions of up-sets, so the
/// product topology is generated by open boxes and continuity amounts to:
/// the preimage of every open is a union of boxes contained in it.
fn composition_continuous(m: &FiniteMonoid, tau: &FiniteTopology) -> bool {
    let n = m.len();
    for open in &tau.opens {
        for f in 0..n {
            for g in 0..n {
                if !open.contains(m.op(f, g)) {
                    continue;
                }
                // Find an open box around (f, g) inside the preimage.
                let has_box = tau.opens.iter().any(|u| {
                    u.contains(f)
                        && tau.opens.iter().any(|v| {
                            v.contains(g)
                                && u.iter()
                                    .all(|x| v.iter().all(|y| open.contains(m.op(x, y))))
                        })
                });
                if !has_box {
                    return false;
                }
            }
        }
    }
    true
}

/// The order topology: closed sets are exactly the order ideals. Verifies
/// that the opens form a topology, that distinct points are separated by an
/// open set, that composition is continuous for the product topology, and
/// that annihilator sets are closed.
pub fn order_topology(m: &FiniteMonoid, limit: usize) -> Result<FiniteTopology> {
    let n = m.len();
    let mut opens = BTreeSet::new();
    for ideal in enumerate_ideals(m, IdealKind::Order, limit)? {
        opens.insert(mask_of(&ideal.set.complement()));
    }
    let tau = FiniteTopology::from_set(n, opens);
    tau.verify_topology(n)?;

    // T0 separation.
    for f in 0..n {
        for g in 0..n {
            if f == g {
                continue;
            }
            let separated = tau.opens.iter().any(|o| o.contains(f) != o.contains(g));
            if !separated {
                return Err(Error::paper_check(format!(
                    "order topology cannot separate {f} and {g}"
                )));
            }
        }
    }

    if !composition_continuous(m, &tau) {
        return Err(Error::paper_check(
            "composition is not continuous for the order topology",
        ));
    }

    // Annihilators are closed; intersections of closed sets are closed by
    // the topology check, so singletons suffice.
    for h in 0..n {
        let t = ElementSubset::singleton(n, h);
        if !tau.is_closed(&perp(m, &t)) {
            return Err(Error::paper_check(format!(
                "annihilator of {{{h}}} is not closed in the order topology"
            )));
        }
    }
    Ok(tau)
}

/// The prime topology: the smallest topology containing the complement of
/// every order prime ideal. Verifies that composition is continuous and
/// that every enumerated monoid projection is continuous with prime
/// preimages of prime order ideals.
pub fn prime_topology(m: &FiniteMonoid, limit: usize, map_guard: u64) -> Result<FiniteTopology> {
    let n = m.len();
    let primes = enumerate_ideals(m, IdealKind::Prime, limit)?;
    let mut opens: BTreeSet<Vec<bool>> = BTreeSet::new();
    opens.insert(mask_of(&ElementSubset::empty(n)));
    opens.insert(mask_of(&ElementSubset::full(n)));
    for p in &primes {
        opens.insert(mask_of(&p.set.complement()));
    }
    // Close under unions and intersections.
    loop {
        let current: Vec<ElementSubset> = opens
            .iter()
            .cloned()
            .map(ElementSubset::from_mask)
            .collect();
        let mut grew = false;
        for a in &current {
            for b in &current {
                for s in [a.union(b), a.intersect(b)] {
                    if opens.insert(mask_of(&s)) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
        if opens.len() > limit {
            return Err(Error::guard(
                "prime topology generation",
                opens.len() as u64,
                limit as u64,
            ));
        }
    }
    let tau = FiniteTopology::from_set(n, opens);
    tau.verify_topology(n)?;

    if !composition_continuous(m, &tau) {
        return Err(Error::paper_check(
            "composition is not continuous for the prime topology",
        ));
    }

    // Preimages of subbasic opens under composition are boxes.
    for p in &primes {
        let open = p.set.complement();
        for f in 0..n {
            for g in 0..n {
                let in_pre = open.contains(m.op(f, g));
                let in_box = open.contains(f) && open.contains(g);
                if in_pre != in_box {
                    return Err(Error::paper_check(
                        "composition preimage of a prime complement is not the expected box",
                    ));
                }
            }
        }
    }

    // Every monoid projection is continuous, and pulls prime order ideals
    // back to prime order ideals.
    for q in
        crate::projection::enumerate_projections(m, crate::projection::ProjKind::Monoid, map_guard)?
    {
        let check = is_continuous(&q, &tau);
        if !check.continuous {
            return Err(Error::paper_check(
                "a monoid projection is discontinuous for the prime topology",
            ));
        }
        for p in &primes {
            let mut pre = ElementSubset::empty(n);
            for x in 0..n {
                if p.set.contains(q.apply(x)) {
                    pre.insert(x);
                }
            }
            let c = crate::ideal::classify(m, &pre);
            if !(c.flags.order_ideal && c.flags.prime) {
                return Err(Error::paper_check(
                    "projection preimage of a prime order ideal is not a prime order ideal",
                ));
            }
        }
    }
    Ok(tau)
}

fn mask_of(s: &ElementSubset) -> Vec<bool> {
    (0..s.ground_size()).map(|i| s.contains(i)).collect()
}

/// Renders the covering relation of the specialization order of a topology
/// in DOT format: one edge per covering pair, lower element first, nodes
/// labelled by element names.
pub fn specialization_dot(m: &FiniteMonoid, tau: &FiniteTopology) -> String {
    let n = m.len();
    // x specializes to y when every open containing x contains y; for the
    // order topology this recovers x <= y.
    let spec =
        |x: usize, y: usize| -> bool { tau.opens.iter().all(|o| !o.contains(x) || o.contains(y)) };
    let strict = |x: usize, y: usize| -> bool { x != y && spec(x, y) && !spec(y, x) };
    let mut out = String::from("digraph specialization {\n");
    for x in 0..n {
        for y in 0..n {
            if !strict(x, y) {
                continue;
            }
            let covered = (0..n).any(|z| strict(x, z) && strict(z, y));
            if !covered {
                out.push_str(&format!("  \"{}\" -> \"{}\";\n", m.name(x), m.name(y)));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Whether `{0}` is a prime ideal, the two-domain condition.
pub fn is_integral_domain(m: &FiniteMonoid) -> bool {
    is_prime(m, &ElementSubset::singleton(m.len(), m.zero()))
}
