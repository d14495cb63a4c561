//! Relations, rewrite systems, and normal forms.
//!
//! A relation is a nonzero monic polynomial read as the rewrite rule
//! "leading word ↦ minus the tail".  A relation whose leading word is a
//! single tree rewrites that tree wherever it occurs as a subtree of any
//! factor — the one stored pattern stands for its whole closure under tree
//! contexts.  A relation whose leading word has star length at least two
//! rewrites any contiguous run of factors equal to its leading factor
//! sequence.  Neither closure is ever materialised.
//!
//! Reduction is deterministic: the leading term of the work polynomial is
//! rewritten at the least applicable (relation, site) pair, where relations
//! are kept sorted ascending by leading word and sites are ordered
//! outermost-first inside a factor (pre-order, left before right) and by
//! start position across factors.  Every step replaces a word by strictly
//! smaller ones, so reduction terminates by well-foundedness of the word
//! order.

use std::collections::HashMap;

use crate::polynomials::Poly;
use crate::words::{MatchSite, NaWord, StarWord};
use crate::{Error, Result};

/// A monic nonzero polynomial used as a rewrite rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    poly: Poly,
    leading: StarWord,
}

impl Relation {
    /// Normalise `poly` to be monic.  Fails on the zero polynomial.
    pub fn new(poly: Poly) -> Result<Relation> {
        let monic = poly.monic().ok_or(Error::ZeroPolynomial)?;
        let leading = monic.leading_word().expect("nonzero").clone();
        Ok(Relation {
            poly: monic,
            leading,
        })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn leading(&self) -> &StarWord {
        &self.leading
    }

    /// Leading word is a single tree, so the rule acts on subtrees.  The
    /// order grades by star length first, so every term of such a relation
    /// is a tree.
    pub fn is_tree_headed(&self) -> bool {
        self.leading.star_length() == 1
    }

    /// The polynomial minus its leading term.
    pub fn tail(&self) -> Poly {
        let mut t = self.poly.clone();
        t.pop_leading();
        t
    }
}

/// The sum of tail substitutions of `relation` into `ambient` at `site`,
/// including the leading term: the result has `ambient` itself as its
/// leading term with coefficient one.
pub fn embed(relation: &Relation, ambient: &StarWord, site: &MatchSite) -> Poly {
    debug_assert_eq!(
        ambient.substitute(site, relation.leading()),
        *ambient,
        "site does not carry the relation's leading word"
    );
    let mut out = Poly::zero();
    for (w, c) in relation.poly().terms() {
        out.add_term(c.clone(), ambient.substitute(site, w));
    }
    out
}

/// An indexed set of relations with deterministic reduction.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    relations: Vec<Relation>,
    /// Tree-headed relations by leading tree.
    by_tree: HashMap<NaWord, Vec<usize>>,
    /// Star-composite relations by leading factor sequence.
    by_run: HashMap<Vec<NaWord>, Vec<usize>>,
}

impl RewriteSystem {
    /// Build a system, sorting the relations ascending by leading word.
    /// Relations with equal leading words keep their given order.
    pub fn new(mut relations: Vec<Relation>) -> Self {
        relations.sort_by(|a, b| a.leading().cmp(b.leading()));
        let mut by_tree: HashMap<NaWord, Vec<usize>> = HashMap::new();
        let mut by_run: HashMap<Vec<NaWord>, Vec<usize>> = HashMap::new();
        for (i, r) in relations.iter().enumerate() {
            if let Some(tree) = r.leading().single() {
                by_tree.entry(tree.clone()).or_default().push(i);
            } else {
                by_run
                    .entry(r.leading().factors().to_vec())
                    .or_default()
                    .push(i);
            }
        }
        RewriteSystem {
            relations,
            by_tree,
            by_run,
        }
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub(crate) fn by_tree(&self) -> &HashMap<NaWord, Vec<usize>> {
        &self.by_tree
    }

    pub(crate) fn by_run(&self) -> &HashMap<Vec<NaWord>, Vec<usize>> {
        &self.by_run
    }

    /// Least (relation, site) pair whose leading word matches inside `word`,
    /// or `None` when `word` is in normal form.
    pub fn find_site(&self, word: &StarWord) -> Option<(usize, MatchSite)> {
        let mut best: Option<(usize, MatchSite)> = None;
        let mut consider = |cand: (usize, MatchSite)| match &best {
            Some(b) if *b <= cand => {}
            _ => best = Some(cand),
        };
        for (fi, factor) in word.factors().iter().enumerate() {
            for (path, sub) in factor.subtrees() {
                if let Some(rels) = self.by_tree.get(sub) {
                    consider((rels[0], MatchSite::Subtree { factor: fi, path }));
                }
            }
        }
        let k = word.star_length();
        for start in 0..k {
            for len in 2..=k - start {
                if let Some(rels) = self.by_run.get(&word.factors()[start..start + len]) {
                    consider((rels[0], MatchSite::Run { start, len }));
                }
            }
        }
        best
    }

    /// No relation applies anywhere in `word`.
    pub fn is_normal(&self, word: &StarWord) -> bool {
        self.find_site(word).is_none()
    }

    /// Number of reduced (normal-form) words of each degree `1..=max_deg`.
    /// These are the dimensions of the quotient when the system is closed
    /// under composition up to the relevant degree.
    pub fn reduced_counts(&self, alphabet: &crate::words::Alphabet, max_deg: usize) -> Vec<usize> {
        (1..=max_deg)
            .map(|d| {
                crate::words::enumerate_star_words(alphabet, d)
                    .iter()
                    .filter(|w| self.is_normal(w))
                    .count()
            })
            .collect()
    }

    /// Fully reduce `p`.  The result has the same image in the quotient and
    /// no term admits any further rewrite.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        let mut work = p.clone();
        let mut result = Poly::zero();
        while let Some((lw, lc)) = work.leading() {
            let lw = lw.clone();
            let lc = lc.clone();
            match self.find_site(&lw) {
                None => {
                    work.pop_leading();
                    result.add_term(lc, lw);
                }
                Some((i, site)) => {
                    let e = embed(&self.relations[i], &lw, &site);
                    work -= &e.scaled(&lc);
                }
            }
        }
        result
    }
}
