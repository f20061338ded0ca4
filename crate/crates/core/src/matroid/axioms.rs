//! Exhaustive validation of the independence and circuit axioms.

use std::collections::HashSet;

use crate::error::{AxiomViolation, CircuitViolation};
use crate::set::ElementSet;

/// Checks that `family` satisfies the three independence-system axioms:
/// the empty set is present, the family is downward closed, and the
/// exchange property holds. Returns the first violation found, with a
/// witness, scanning in graded lexicographic order so the witness is
/// deterministic.
///
/// Exchange is only tested for pairs whose sizes differ by one; together
/// with downward closure this implies the general property.
pub fn check_matroid_axioms(
    _ground: usize,
    family: &[ElementSet],
) -> Result<(), AxiomViolation> {
    let lookup: HashSet<u64> = family.iter().map(|s| s.bits()).collect();
    if !lookup.contains(&0) {
        return Err(AxiomViolation::EmptyMissing);
    }

    let mut sorted: Vec<ElementSet> = lookup.iter().map(|&b| ElementSet::from_bits(b)).collect();
    sorted.sort_by(|a, b| a.cmp_graded(*b));

    for &s in &sorted {
        // Removing the largest element first scans the one-smaller
        // subsets in lexicographic order, so the witness is the first
        // missing one in that order.
        let mut elements = s.to_vec();
        elements.reverse();
        for e in elements {
            let sub = s.without(e);
            if !lookup.contains(&sub.bits()) {
                return Err(AxiomViolation::NotDownwardClosed {
                    superset: s,
                    missing: sub,
                });
            }
        }
    }

    let max_size = sorted.last().map_or(0, |s| s.len());
    let mut by_size: Vec<Vec<ElementSet>> = vec![Vec::new(); max_size + 1];
    for &s in &sorted {
        by_size[s.len()].push(s);
    }
    for size in 0..max_size {
        for &smaller in &by_size[size] {
            for &larger in &by_size[size + 1] {
                let extends = larger
                    .minus(smaller)
                    .iter()
                    .any(|x| lookup.contains(&smaller.with(x).bits()));
                if !extends {
                    return Err(AxiomViolation::ExchangeFails { smaller, larger });
                }
            }
        }
    }
    Ok(())
}

/// Checks that `circuits` is a legal matroid circuit family: no empty
/// circuit, an antichain, and the circuit elimination axiom — for any two
/// distinct circuits sharing an element x there is a circuit inside their
/// union avoiding x.
pub fn check_circuit_axioms(circuits: &[ElementSet]) -> Result<(), CircuitViolation> {
    let mut sorted = circuits.to_vec();
    sorted.sort_by(|a, b| a.cmp_graded(*b));
    sorted.dedup();

    for &c in &sorted {
        if c.is_empty() {
            return Err(CircuitViolation::EmptyCircuit);
        }
    }
    for (i, &a) in sorted.iter().enumerate() {
        for &b in &sorted[i + 1..] {
            if a.is_subset_of(b) {
                return Err(CircuitViolation::NotAntichain { inner: a, outer: b });
            }
            if b.is_subset_of(a) {
                return Err(CircuitViolation::NotAntichain { inner: b, outer: a });
            }
        }
    }
    for (i, &c1) in sorted.iter().enumerate() {
        for &c2 in &sorted[i + 1..] {
            for x in c1.intersect(c2).iter() {
                let union_less_x = c1.union(c2).without(x);
                let eliminated = sorted.iter().any(|c3| c3.is_subset_of(union_less_x));
                if !eliminated {
                    return Err(CircuitViolation::EliminationFails { c1, c2, x });
                }
            }
        }
    }
    Ok(())
}
