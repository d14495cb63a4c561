//! Independent verification of quotient data by exact linear algebra.
//!
//! The operated ideal generated by a relation set, truncated at a degree
//! bound, is materialised as the row space of an exact rational echelon
//! form.  Vectors are indexed by all star words up to the bound.  The ideal
//! is closed by applying the four one-sided products by a single tree word —
//! `m * p`, `p * m`, `m · p`, `p · m` — along every chain that stays inside
//! the bound; both products grow degree monotonically, so the chains are
//! finite and enumerate every bounded context of a relation.
//!
//! Relations whose terms exceed their leading word in degree are rejected:
//! truncating such a system at a degree is not meaningful.  Relations whose
//! leading degree exceeds the bound are skipped.
//!
//! For degree-homogeneous relation sets the closure equals the truncated
//! ideal exactly, so quotient dimensions read off from the rank are exact.
//! For inhomogeneous (degree-decreasing) sets the closure can miss ideal
//! elements only expressible with cancellation above the bound; it still
//! contains every difference `p − nf(p)` produced by the rewrite engine,
//! which is what membership checks consume.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::polynomials::{star_mul, tree_mul, Poly};
use crate::rewrite::Relation;
use crate::words::{enumerate_star_words, na_words_up_to, Alphabet, StarWord};
use crate::{Error, Result};

type SparseVec = Vec<(usize, BigRational)>;

/// Row echelon form over the rationals with sorted sparse rows.  Rows keep
/// their lowest column as pivot, normalised to one; no back-substitution.
#[derive(Debug, Clone, Default)]
struct Echelon {
    rows: Vec<SparseVec>,
}

impl Echelon {
    fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.rows
            .binary_search_by_key(&col, |r| r[0].0)
            .ok()
            .map(|i| &self.rows[i])
    }

    /// `v − c · row`, both sorted; the result is sorted.
    fn sub_scaled(v: &SparseVec, row: &SparseVec, c: &BigRational) -> SparseVec {
        let mut out = Vec::with_capacity(v.len() + row.len());
        let (mut i, mut j) = (0, 0);
        while i < v.len() || j < row.len() {
            match (v.get(i), row.get(j)) {
                (Some((vc, va)), Some((rc, ra))) if vc == rc => {
                    let a = va - c * ra;
                    if !a.is_zero() {
                        out.push((*vc, a));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((vc, va)), Some((rc, _))) if vc < rc => {
                    out.push((*vc, va.clone()));
                    i += 1;
                }
                (Some(_), Some((rc, ra))) => {
                    out.push((*rc, -(c * ra)));
                    j += 1;
                }
                (Some((vc, va)), None) => {
                    out.push((*vc, va.clone()));
                    i += 1;
                }
                (None, Some((rc, ra))) => {
                    out.push((*rc, -(c * ra)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        out
    }

    /// Eliminate every pivot column from `v`; empty result means membership.
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        let mut out = Vec::new();
        while let Some((col, coeff)) = v.first().cloned() {
            match self.pivot_row(col) {
                Some(row) => v = Self::sub_scaled(&v, row, &coeff),
                None => {
                    out.push((col, coeff));
                    v.remove(0);
                }
            }
        }
        out
    }

    /// Reduce and, if independent, adopt as a new row.  Returns whether the
    /// rank grew.
    fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let lead = r[0].1.clone();
        if !lead.is_one() {
            for (_, c) in &mut r {
                *c /= &lead;
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&r[0].0, |row| row[0].0)
            .expect_err("fresh pivot");
        self.rows.insert(pos, r);
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// The truncated operated ideal of a relation set, ready for rank and
/// membership queries.
#[derive(Debug, Clone)]
pub struct Oracle {
    bound: usize,
    columns: BTreeMap<StarWord, usize>,
    echelon: Echelon,
}

fn validate(relations: &[Relation]) -> Result<()> {
    for (index, r) in relations.iter().enumerate() {
        let ldeg = r.leading().degree();
        if r.poly().degree().unwrap_or(0) > ldeg {
            return Err(Error::DegreeIncreasing { index });
        }
    }
    Ok(())
}

/// Every product of a seed by a chain of single-tree multipliers staying
/// inside the bound, seeds included, in a fixed depth-first order.
fn chain_products(alphabet: &Alphabet, seeds: &[Poly], bound: usize) -> Vec<Poly> {
    let trees = na_words_up_to(alphabet, bound);
    let mut out = Vec::new();
    let mut stack: Vec<Poly> = seeds.iter().rev().cloned().collect();
    while let Some(p) = stack.pop() {
        let deg = p.degree().expect("nonzero product");
        for e in (1..=bound.saturating_sub(deg)).rev() {
            for m in trees[e - 1].iter().rev() {
                let mono = Poly::monomial(StarWord::from_word(m.clone()));
                for prod in [
                    star_mul(&mono, &p),
                    star_mul(&p, &mono),
                    tree_mul(&mono, &p),
                    tree_mul(&p, &mono),
                ]
                .into_iter()
                .rev()
                {
                    if !prod.is_zero() {
                        stack.push(prod);
                    }
                }
            }
        }
        out.push(p);
    }
    out
}

/// Close the relations under bounded multiplication and echelonise.
///
/// A nonzero `seed` shuffles the insertion order of the generated products
/// — the resulting rank and row space do not depend on it, which makes the
/// shuffle a cheap self-check; zero keeps the canonical order.
pub fn ideal_closure(
    alphabet: &Alphabet,
    relations: &[Relation],
    bound: usize,
    seed: u64,
) -> Result<Oracle> {
    validate(relations)?;
    // Number the columns in word order, not degree order: rows are built by
    // iterating polynomial terms ascending, and the echelon's sparse merge
    // needs that iteration to be column-sorted.
    let mut columns = BTreeMap::new();
    for d in 1..=bound {
        for w in enumerate_star_words(alphabet, d) {
            columns.insert(w, 0);
        }
    }
    for (i, index) in columns.values_mut().enumerate() {
        *index = i;
    }
    let seeds: Vec<Poly> = relations
        .iter()
        .filter(|r| r.leading().degree() <= bound)
        .map(|r| r.poly().clone())
        .collect();
    let mut products = chain_products(alphabet, &seeds, bound);
    if seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        products.shuffle(&mut rng);
    }
    let mut echelon = Echelon::default();
    for p in &products {
        let v: SparseVec = p.terms().map(|(w, c)| (columns[w], c.clone())).collect();
        echelon.insert(v);
    }
    Ok(Oracle {
        bound,
        columns,
        echelon,
    })
}

impl Oracle {
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Rank of the truncated ideal.
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Does `p` lie in the closed span?  Errors when a term of `p` exceeds
    /// the bound.
    pub fn contains(&self, p: &Poly) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        let cap = self.bound;
        let degree = p.degree().expect("nonzero");
        if degree > cap {
            return Err(Error::DegreeAboveCap { degree, cap });
        }
        let v: SparseVec = p
            .terms()
            .map(|(w, c)| (self.columns[w], c.clone()))
            .collect();
        Ok(self.echelon.reduce(v).is_empty())
    }
}

/// Quotient dimensions per degree `1..=bound`: the number of star words of
/// each degree minus the ideal's share, obtained by closing at every bound
/// `d ≤ bound` and differencing the cumulative coranks.
pub fn quotient_dims(
    alphabet: &Alphabet,
    relations: &[Relation],
    bound: usize,
    seed: u64,
) -> Result<Vec<usize>> {
    let mut dims = Vec::new();
    let mut words_cum = 0;
    let mut prev_corank = 0;
    for d in 1..=bound {
        words_cum += enumerate_star_words(alphabet, d).len();
        let oracle = ideal_closure(alphabet, relations, d, seed)?;
        let corank = words_cum - oracle.rank();
        let dim = corank.checked_sub(prev_corank).ok_or_else(|| {
            Error::Invalid(format!(
                "truncated ideal rank jumped between degrees {} and {}",
                d - 1,
                d
            ))
        })?;
        dims.push(dim);
        prev_corank = corank;
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::zinbiel;
    use crate::parse::parse_poly;
    use crate::rewrite::RewriteSystem;

    #[test]
    fn no_relations_leave_everything() {
        let a = Alphabet::new(["x"]).unwrap();
        assert_eq!(quotient_dims(&a, &[], 4, 0).unwrap(), vec![1, 2, 5, 14]);
        let o = ideal_closure(&a, &[], 3, 0).unwrap();
        assert_eq!(o.rank(), 0);
        let p = parse_poly("x*x", &a).unwrap();
        assert!(!o.contains(&p).unwrap());
    }

    #[test]
    fn zinbiel_dims_one_generator() {
        let (a, rels) = zinbiel(1, 4).unwrap();
        assert_eq!(quotient_dims(&a, &rels, 4, 0).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn zinbiel_dims_two_generators_low_degree() {
        let (a, rels) = zinbiel(2, 3).unwrap();
        assert_eq!(quotient_dims(&a, &rels, 3, 0).unwrap(), vec![2, 4, 8]);
    }

    #[test]
    fn membership_of_reduction_differences() {
        let (a, rels) = zinbiel(1, 3).unwrap();
        let sys = RewriteSystem::new(rels.clone());
        let o = ideal_closure(&a, &rels, 3, 0).unwrap();
        for src in ["x*x", "x*x*x", "x (x x)", "x*(x x) - 2 (x (x x))"] {
            let p = parse_poly(src, &a).unwrap();
            let mut diff = p.clone();
            diff -= &sys.normal_form(&p);
            assert!(o.contains(&diff).unwrap(), "difference for {}", src);
        }
        // A surviving basis word is not in the ideal.
        let basis = parse_poly("(x x)", &a).unwrap();
        assert!(!o.contains(&basis).unwrap());
        // The relation itself is.
        assert!(o.contains(rels[0].poly()).unwrap());
    }

    #[test]
    fn degree_cap_is_enforced() {
        let a = Alphabet::new(["x"]).unwrap();
        let o = ideal_closure(&a, &[], 2, 0).unwrap();
        let p = parse_poly("x (x x)", &a).unwrap();
        assert_eq!(
            o.contains(&p),
            Err(Error::DegreeAboveCap { degree: 3, cap: 2 })
        );
    }

    #[test]
    fn degree_increasing_relations_are_rejected() {
        let a = Alphabet::new(["x"]).unwrap();
        let r = Relation::new(parse_poly("x*x + (x x) x", &a).unwrap()).unwrap();
        assert_eq!(r.leading().display(&a).to_string(), "x*x");
        assert_eq!(
            ideal_closure(&a, &[r], 4, 0).err(),
            Some(Error::DegreeIncreasing { index: 0 })
        );
    }

    #[test]
    fn relations_above_the_bound_are_skipped() {
        let (a, rels) = zinbiel(1, 4).unwrap();
        // At bound 2 only the degree-2 square relation contributes.
        assert_eq!(quotient_dims(&a, &rels, 2, 0).unwrap(), vec![1, 1]);
    }

    #[test]
    fn shuffled_insertion_preserves_rank() {
        let (a, rels) = zinbiel(2, 3).unwrap();
        let base = ideal_closure(&a, &rels, 3, 0).unwrap().rank();
        for seed in [1, 2, 42, 0xdead_beef] {
            assert_eq!(
                ideal_closure(&a, &rels, 3, seed).unwrap().rank(),
                base,
                "seed {}",
                seed
            );
        }
    }
}
