//! Compositions: the critical-pair polynomials a rewrite system must reduce
//! to zero to be confluent.
//!
//! Five families cover the ways leading words interact, each tagged with the
//! ambient word that bounds it:
//!
//! * **star inclusion** — the leading factor sequence of one relation sits
//!   as a contiguous run inside another's; the composition subtracts the
//!   embedded copy.  Ambient: the including leading word.
//! * **star overlap** — a proper prefix of one leading word equals a proper
//!   suffix of another's; both relations are padded to the common word and
//!   subtracted.  Ambient: the common word.
//! * **tree inclusion** — a tree-headed relation's leading tree occurs as a
//!   proper subtree of a factor of another leading word.  Ambient: the
//!   including leading word.
//! * **right multiplication** — a star-composite relation times a single
//!   tree on the right; the product collapses into the span of trees, where
//!   the tree-headed relations must account for it.
//! * **left multiplication** — a star word times a star-composite relation
//!   on the left.
//!
//! [`all_compositions`] enumerates every instance whose ambient word has
//! degree at most the bound, in a fixed order: the families above in turn,
//! each scanned by ascending relation index and then by position or
//! multiplier.  The pairwise functions expose the same constructions for a
//! single pair of relations.

use std::collections::HashMap;
use std::fmt;

use crate::polynomials::{star_mul, tree_mul, Poly};
use crate::rewrite::{embed, RewriteSystem};
use crate::words::{enumerate_star_words, na_words_up_to, Alphabet, MatchSite, NaWord, StarWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    StarInclusion,
    StarOverlap,
    TreeInclusion,
    RightMultiplication,
    LeftMultiplication,
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompositionKind::StarInclusion => "star-inclusion",
            CompositionKind::StarOverlap => "star-overlap",
            CompositionKind::TreeInclusion => "tree-inclusion",
            CompositionKind::RightMultiplication => "right-multiplication",
            CompositionKind::LeftMultiplication => "left-multiplication",
        })
    }
}

/// Where a composition comes from, beyond the relations involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompositionSite {
    /// Inclusion of the second relation's leading word at this site.
    Inclusion { site: MatchSite },
    /// Overlap of this many shared factors.
    Overlap { overlap: usize },
    /// Right multiplication by this tree.
    RightFactor { multiplier: NaWord },
    /// Left multiplication by this star word.
    LeftFactor { multiplier: StarWord },
}

/// One composition: the polynomial `value` must reduce to zero for the
/// system to be closed at this ambient word.
#[derive(Debug, Clone)]
pub struct Composition {
    pub kind: CompositionKind,
    /// Index of the first relation.
    pub f: usize,
    /// Index of the second relation, for the pair families.
    pub g: Option<usize>,
    pub site: CompositionSite,
    /// Word bounding the composition; every term of `value` is dominated by
    /// it.
    pub ambient: StarWord,
    pub value: Poly,
}

/// Star inclusions of relation `g`'s leading run inside relation `f`'s
/// leading word.  The full self-match of a relation in itself is skipped.
pub fn star_inclusions(sys: &RewriteSystem, f: usize, g: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if f == g {
        return out;
    }
    let fbar = sys.relations()[f].leading();
    let gbar = sys.relations()[g].leading();
    let len = gbar.star_length();
    if len > fbar.star_length() {
        return out;
    }
    for start in 0..=fbar.star_length() - len {
        if fbar.factors()[start..start + len] == *gbar.factors() {
            let site = MatchSite::Run { start, len };
            let mut value = sys.relations()[f].poly().clone();
            value -= &embed(&sys.relations()[g], fbar, &site);
            out.push(Composition {
                kind: CompositionKind::StarInclusion,
                f,
                g: Some(g),
                site: CompositionSite::Inclusion { site },
                ambient: fbar.clone(),
                value,
            });
        }
    }
    out
}

/// Star overlaps: a proper prefix of `f`'s leading word equal to a proper
/// suffix of `g`'s.  Self-overlaps (`f == g`) are meaningful and included.
pub fn star_overlaps(sys: &RewriteSystem, f: usize, g: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let fbar = sys.relations()[f].leading();
    let gbar = sys.relations()[g].leading();
    let (fl, gl) = (fbar.star_length(), gbar.star_length());
    for l in 1..fl.min(gl) {
        if gbar.factors()[gl - l..] != fbar.factors()[..l] {
            continue;
        }
        let w1 = StarWord::new(fbar.factors()[l..].to_vec());
        let w2 = StarWord::new(gbar.factors()[..gl - l].to_vec());
        let ambient = w2.concat(fbar);
        let mut value = star_mul(&Poly::monomial(w2), sys.relations()[f].poly());
        value -= &star_mul(sys.relations()[g].poly(), &Poly::monomial(w1));
        out.push(Composition {
            kind: CompositionKind::StarOverlap,
            f,
            g: Some(g),
            site: CompositionSite::Overlap { overlap: l },
            ambient,
            value,
        });
    }
    out
}

/// Tree inclusions of tree-headed relation `g` at proper subtrees of the
/// factors of `f`'s leading word.
pub fn tree_inclusions(sys: &RewriteSystem, f: usize, g: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let Some(gtree) = sys.relations()[g].leading().single() else {
        return out;
    };
    let fbar = sys.relations()[f].leading();
    for (fi, factor) in fbar.factors().iter().enumerate() {
        for (path, sub) in factor.subtrees() {
            if path.is_empty() || sub != gtree {
                continue;
            }
            let site = MatchSite::Subtree { factor: fi, path };
            let mut value = sys.relations()[f].poly().clone();
            value -= &embed(&sys.relations()[g], fbar, &site);
            out.push(Composition {
                kind: CompositionKind::TreeInclusion,
                f,
                g: Some(g),
                site: CompositionSite::Inclusion { site },
                ambient: fbar.clone(),
                value,
            });
        }
    }
    out
}

/// Right multiplication of a star-composite relation by a tree.  `None` when
/// the relation is tree-headed.
pub fn right_multiplication(sys: &RewriteSystem, f: usize, v: &NaWord) -> Option<Composition> {
    let rel = &sys.relations()[f];
    if rel.is_tree_headed() {
        return None;
    }
    let vmono = Poly::monomial(StarWord::from_word(v.clone()));
    let ambient_poly = tree_mul(&Poly::monomial(rel.leading().clone()), &vmono);
    // A star word times a tree is a single right comb.
    debug_assert_eq!(ambient_poly.num_terms(), 1);
    let ambient = ambient_poly.leading_word().expect("monomial").clone();
    Some(Composition {
        kind: CompositionKind::RightMultiplication,
        f,
        g: None,
        site: CompositionSite::RightFactor {
            multiplier: v.clone(),
        },
        ambient,
        value: tree_mul(rel.poly(), &vmono),
    })
}

/// Left multiplication of a star-composite relation by a star word.  `None`
/// when the relation is tree-headed.
pub fn left_multiplication(sys: &RewriteSystem, f: usize, u: &StarWord) -> Option<Composition> {
    let rel = &sys.relations()[f];
    if rel.is_tree_headed() {
        return None;
    }
    let umono = Poly::monomial(u.clone());
    let ambient = tree_mul(&umono, &Poly::monomial(rel.leading().clone()))
        .leading_word()
        .expect("product of monomials is nonzero")
        .clone();
    Some(Composition {
        kind: CompositionKind::LeftMultiplication,
        f,
        g: None,
        site: CompositionSite::LeftFactor {
            multiplier: u.clone(),
        },
        ambient,
        value: tree_mul(&umono, rel.poly()),
    })
}

/// Every composition of the system whose ambient word has degree at most
/// `max_deg`, in the fixed order described in the module documentation.
pub fn all_compositions(
    sys: &RewriteSystem,
    alphabet: &Alphabet,
    max_deg: usize,
) -> Vec<Composition> {
    let mut out = Vec::new();
    let rels = sys.relations();

    // Star inclusions, found by looking runs of each leading word up in the
    // leading-word indexes.
    for f in 0..rels.len() {
        let fbar = rels[f].leading();
        if fbar.degree() > max_deg {
            continue;
        }
        let k = fbar.star_length();
        for start in 0..k {
            for len in 1..=k - start {
                let slice = &fbar.factors()[start..start + len];
                let gs: &[usize] = if len == 1 {
                    sys.by_tree().get(&slice[0]).map_or(&[], Vec::as_slice)
                } else {
                    sys.by_run().get(slice).map_or(&[], Vec::as_slice)
                };
                for &g in gs {
                    if g == f {
                        continue;
                    }
                    let site = MatchSite::Run { start, len };
                    let mut value = rels[f].poly().clone();
                    value -= &embed(&rels[g], fbar, &site);
                    out.push(Composition {
                        kind: CompositionKind::StarInclusion,
                        f,
                        g: Some(g),
                        site: CompositionSite::Inclusion { site },
                        ambient: fbar.clone(),
                        value,
                    });
                }
            }
        }
    }

    // Star overlaps, via a map from proper suffixes of leading words to
    // their relations.
    let mut by_suffix: HashMap<Vec<NaWord>, Vec<usize>> = HashMap::new();
    for (g, rel) in rels.iter().enumerate() {
        let gbar = rel.leading();
        let gl = gbar.star_length();
        for l in 1..gl {
            by_suffix
                .entry(gbar.factors()[gl - l..].to_vec())
                .or_default()
                .push(g);
        }
    }
    for f in 0..rels.len() {
        let fbar = rels[f].leading();
        for l in 1..fbar.star_length() {
            let Some(gs) = by_suffix.get(&fbar.factors()[..l]) else {
                continue;
            };
            for &g in gs {
                let gbar = rels[g].leading();
                let w2 = StarWord::new(gbar.factors()[..gbar.star_length() - l].to_vec());
                let ambient = w2.concat(fbar);
                if ambient.degree() > max_deg {
                    continue;
                }
                let w1 = StarWord::new(fbar.factors()[l..].to_vec());
                let mut value = star_mul(&Poly::monomial(w2), rels[f].poly());
                value -= &star_mul(rels[g].poly(), &Poly::monomial(w1));
                out.push(Composition {
                    kind: CompositionKind::StarOverlap,
                    f,
                    g: Some(g),
                    site: CompositionSite::Overlap { overlap: l },
                    ambient,
                    value,
                });
            }
        }
    }

    // Tree inclusions at proper subtrees.
    for f in 0..rels.len() {
        let fbar = rels[f].leading();
        if fbar.degree() > max_deg {
            continue;
        }
        for (fi, factor) in fbar.factors().iter().enumerate() {
            for (path, sub) in factor.subtrees() {
                if path.is_empty() {
                    continue;
                }
                let Some(gs) = sys.by_tree().get(sub) else {
                    continue;
                };
                for &g in gs {
                    let site = MatchSite::Subtree {
                        factor: fi,
                        path: path.clone(),
                    };
                    let mut value = rels[f].poly().clone();
                    value -= &embed(&rels[g], fbar, &site);
                    out.push(Composition {
                        kind: CompositionKind::TreeInclusion,
                        f,
                        g: Some(g),
                        site: CompositionSite::Inclusion { site },
                        ambient: fbar.clone(),
                        value,
                    });
                }
            }
        }
    }

    // Multiplications of star-composite relations, bounded by the ambient
    // degree (which equals relation degree plus multiplier degree).
    let trees = na_words_up_to(alphabet, max_deg);
    for (f, rel) in rels.iter().enumerate() {
        if rel.is_tree_headed() {
            continue;
        }
        let fdeg = rel.leading().degree();
        for d in 1..=max_deg.saturating_sub(fdeg) {
            for v in &trees[d - 1] {
                out.push(right_multiplication(sys, f, v).expect("star-composite"));
            }
        }
    }
    for (f, rel) in rels.iter().enumerate() {
        if rel.is_tree_headed() {
            continue;
        }
        let fdeg = rel.leading().degree();
        for d in 1..=max_deg.saturating_sub(fdeg) {
            for u in enumerate_star_words(alphabet, d) {
                out.push(left_multiplication(sys, f, &u).expect("star-composite"));
            }
        }
    }

    out
}
