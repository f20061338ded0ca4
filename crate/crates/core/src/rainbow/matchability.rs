//! The matchability criterion: if η(C|S) ≥ ρ(M.S) for every S that is
//! the complement of a flat of M, then some basis of M is a face of C.

use crate::complex::SimplicialComplex;
use crate::error::ComplexError;
use crate::homology::{eta, EtaValue};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Outcome of [`matchability_check`]. When `hypothesis_ok` is true a
/// basis must have been found; observing otherwise means a bug, not a
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchabilityReport {
    pub hypothesis_ok: bool,
    /// First flat (in graded lexicographic order) whose complement fails
    /// the η bound.
    pub failing_flat: Option<ElementSet>,
    /// A basis of M that is a face of C, found by direct search
    /// independent of the hypothesis check.
    pub basis_found: Option<ElementSet>,
}

/// Enumerates the flats of `m`, checks η(C|S) ≥ ρ(M.S) for each
/// complement S, and separately searches the faces of `c` for a basis of
/// `m`. Requires the two structures to share a ground set and `c` to be
/// nonvoid (the criterion is about complexes that contain at least the
/// empty face; the void complex satisfies every η bound vacuously under
/// the η(void) = 0 convention yet has no faces at all).
pub fn matchability_check(
    m: &Matroid,
    c: &SimplicialComplex,
) -> Result<MatchabilityReport, ComplexError> {
    assert_eq!(
        m.ground_size(),
        c.ground_size(),
        "matroid and complex must share a ground set"
    );
    assert!(!c.is_void(), "matchability concerns nonvoid complexes");
    let mut hypothesis_ok = true;
    let mut failing_flat = None;
    for (flat, _) in m.flats() {
        let s = m.ground_set().minus(flat);
        if !bound_holds(m, c, s)? {
            hypothesis_ok = false;
            failing_flat = Some(flat);
            break;
        }
    }
    let basis_found = basis_in_complex(m, c)?;
    debug_assert!(
        !hypothesis_ok || basis_found.is_some(),
        "matchability hypothesis holds but no basis was found"
    );
    Ok(MatchabilityReport {
        hypothesis_ok,
        failing_flat,
        basis_found,
    })
}

/// The strict variant: checks η(C|S) ≥ ρ(M.S) for every S ⊆ V, not just
/// flat complements. Exponential; for cross-validation on tiny grounds.
/// Returns whether all checks pass and the first failing S.
pub fn matchability_hypothesis_strict(
    m: &Matroid,
    c: &SimplicialComplex,
) -> Result<(bool, Option<ElementSet>), ComplexError> {
    for s in m.ground_set().subsets() {
        if !bound_holds(m, c, s)? {
            return Ok((false, Some(s)));
        }
    }
    Ok((true, None))
}

fn bound_holds(m: &Matroid, c: &SimplicialComplex, s: ElementSet) -> Result<bool, ComplexError> {
    let required = m
        .quotient_to(s)
        .expect("complement of a flat is inside the ground set")
        .rank_full();
    let connectivity = eta(&c.restrict(s))?;
    Ok(connectivity >= EtaValue::Finite(required))
}

/// First face of `c` (smallest, then lexicographic) that is a basis of
/// `m`, if any.
fn basis_in_complex(
    m: &Matroid,
    c: &SimplicialComplex,
) -> Result<Option<ElementSet>, ComplexError> {
    let rank = m.rank_full();
    if c.is_void() {
        return Ok(None);
    }
    if rank == 0 {
        return Ok(Some(ElementSet::EMPTY));
    }
    let levels = c.faces_by_dimension()?;
    let Some(level) = levels.get(rank - 1) else {
        return Ok(None);
    };
    let mut candidates: Vec<ElementSet> = level.clone();
    candidates.sort_by(|a, b| a.cmp_lex(*b));
    Ok(candidates.into_iter().find(|&f| m.is_independent(f)))
}
