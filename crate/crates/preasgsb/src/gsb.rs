//! Checking a system for closure under composition, and completing one that
//! is not.
//!
//! A system is closed at a degree bound when every composition with ambient
//! degree inside the bound reduces to zero.  Completion repeats rounds of a
//! fixed-point loop: compute all compositions against the round-start
//! system, reduce them, and adopt the nonzero residues as new relations,
//! ascending by leading word; a residue whose leading word collides with an
//! existing relation is replaced by the difference and re-inserted, so
//! leading words stay distinct.  After each round every relation's tail is
//! re-reduced against the full round-end system in one simultaneous batch.
//! Relations are never discarded: a relation whose leading word later
//! becomes reducible still stands for all the contexts it already covers,
//! and keeping it makes the completed leading-word set reproducible.
//!
//! The loop converges when a round finds no nonzero residue; checking that
//! costs one extra composition pass after the last round that added
//! relations, and a complete input converges after zero rounds.  With a
//! round budget of zero the input is echoed back unexamined.

use num_rational::BigRational;
use num_traits::One;

use crate::compositions::{all_compositions, Composition};
use crate::polynomials::Poly;
use crate::rewrite::{Relation, RewriteSystem};
use crate::words::Alphabet;

/// A composition that failed to reduce to zero, with its remainder.
#[derive(Debug, Clone)]
pub struct CheckFailure {
    pub composition: Composition,
    pub remainder: Poly,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    /// Compositions examined.
    pub total: usize,
    pub failures: Vec<CheckFailure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduce every composition within the bound and report the ones that do
/// not vanish.
pub fn check_system(sys: &RewriteSystem, alphabet: &Alphabet, max_deg: usize) -> CheckReport {
    let comps = all_compositions(sys, alphabet, max_deg);
    let total = comps.len();
    let failures = comps
        .into_iter()
        .filter_map(|composition| {
            let remainder = sys.normal_form(&composition.value);
            if remainder.is_zero() {
                None
            } else {
                Some(CheckFailure {
                    composition,
                    remainder,
                })
            }
        })
        .collect();
    CheckReport { total, failures }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundStats {
    /// Compositions computed against the round-start system.
    pub compositions: usize,
    /// Compositions with a nonzero residue.
    pub nonzero: usize,
    /// Relations added after collision handling.
    pub added: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionReport {
    /// Rounds that added relations.
    pub rounds: usize,
    /// A final composition pass found no nonzero residue.
    pub converged: bool,
    pub detail: Vec<RoundStats>,
}

/// Insert a nonzero polynomial as a monic relation, keeping `rels` sorted
/// ascending by leading word with distinct leadings: on a collision the
/// difference with the incumbent is re-inserted (its leading word is
/// strictly smaller, so this terminates).
fn insert_residue(rels: &mut Vec<Relation>, p: Poly) -> bool {
    let r = Relation::new(p).expect("nonzero residue");
    match rels.binary_search_by(|x| x.leading().cmp(r.leading())) {
        Err(pos) => {
            rels.insert(pos, r);
            true
        }
        Ok(pos) => {
            let mut d = r.poly().clone();
            d -= rels[pos].poly();
            if d.is_zero() {
                false
            } else {
                insert_residue(rels, d)
            }
        }
    }
}

/// Complete `sys` at the bound, spending at most `max_rounds` rounds.
pub fn complete(
    sys: &RewriteSystem,
    alphabet: &Alphabet,
    max_deg: usize,
    max_rounds: usize,
) -> (RewriteSystem, CompletionReport) {
    let mut current = sys.clone();
    let mut report = CompletionReport {
        rounds: 0,
        converged: false,
        detail: Vec::new(),
    };
    if max_rounds == 0 {
        return (current, report);
    }
    loop {
        let comps = all_compositions(&current, alphabet, max_deg);
        let residues: Vec<Poly> = comps
            .iter()
            .map(|c| current.normal_form(&c.value))
            .filter(|r| !r.is_zero())
            .collect();
        if residues.is_empty() {
            report.converged = true;
            return (current, report);
        }
        if report.rounds == max_rounds {
            return (current, report);
        }
        report.rounds += 1;

        let mut sorted = residues.clone();
        sorted.sort_by(|a, b| {
            a.leading_word()
                .expect("nonzero")
                .cmp(b.leading_word().expect("nonzero"))
        });
        let mut rels = current.relations().to_vec();
        let mut added = 0;
        for r in sorted {
            if insert_residue(&mut rels, r) {
                added += 1;
            }
        }

        // Batch tail normalisation: every tail reduced against the same
        // round-end system.  Reduction only produces words below the leading
        // one, so the leading terms survive unchanged.
        let round_end = RewriteSystem::new(rels.clone());
        let rebuilt: Vec<Relation> = rels
            .iter()
            .map(|rel| {
                let mut p = round_end.normal_form(&rel.tail());
                p.add_term(BigRational::one(), rel.leading().clone());
                let new_rel = Relation::new(p).expect("leading term survives");
                debug_assert_eq!(new_rel.leading(), rel.leading());
                new_rel
            })
            .collect();
        current = RewriteSystem::new(rebuilt);
        report.detail.push(RoundStats {
            compositions: comps.len(),
            nonzero: residues.len(),
            added,
        });
    }
}
