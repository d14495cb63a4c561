//! Polynomials over star words with exact rational coefficients, and the
//! three bilinear products of the free algebra.
//!
//! The associative product `*` concatenates star words.  The planar product
//! `·` (written by juxtaposition) grafts trees and is extended to star words
//! by the recursion implemented in [`tree_mul_words`]; it is not associative
//! on its own, but `x*y = x≻y + x≺y` splits it against `*`: the successor
//! product `≻` equals `·`, and the predecessor product `≺` is `* − ·`.
//! Together they satisfy the three half-product axioms
//!
//! ```text
//! (x ≺ y) ≺ z = x ≺ (y * z)
//! (x ≻ y) ≺ z = x ≻ (y ≺ z)
//! x ≻ (y ≻ z) = (x * y) ≻ z
//! ```
//!
//! which the test suite verifies exhaustively in low degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::words::{Alphabet, NaWord, StarWord};

/// A finite rational combination of star words.  Terms are kept in ascending
/// word order with nonzero coefficients; the leading term is the largest.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<StarWord, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(word: StarWord) -> Self {
        Poly::term(BigRational::one(), word)
    }

    pub fn term(coeff: BigRational, word: StarWord) -> Self {
        let mut p = Poly::zero();
        p.add_term(coeff, word);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, StarWord)>,
    {
        let mut p = Poly::zero();
        for (c, w) in terms {
            p.add_term(c, w);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl Iterator<Item = (&StarWord, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in descending word order, leading first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&StarWord, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, word: &StarWord) -> Option<&BigRational> {
        self.terms.get(word)
    }

    /// Largest term in the star-word order, or `None` for zero.
    pub fn leading(&self) -> Option<(&StarWord, &BigRational)> {
        self.terms.last_key_value()
    }

    pub fn leading_word(&self) -> Option<&StarWord> {
        self.leading().map(|(w, _)| w)
    }

    /// Largest degree among the terms, or `None` for zero.  This can exceed
    /// the leading term's degree: the order grades by star length first.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(StarWord::degree).max()
    }

    /// Accumulate `coeff · word`, dropping the term if it cancels to zero.
    pub fn add_term(&mut self, coeff: BigRational, word: StarWord) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Remove and return the leading term.
    pub fn pop_leading(&mut self) -> Option<(StarWord, BigRational)> {
        self.terms.pop_last()
    }

    pub fn scaled(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Divide by the leading coefficient; `None` for zero.
    pub fn monic(&self) -> Option<Poly> {
        let (_, c) = self.leading()?;
        if c.is_one() {
            return Some(self.clone());
        }
        Some(self.scaled(&c.recip()))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            alphabet,
        }
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (w, c) in &rhs.terms {
            self.add_term(c.clone(), w.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (w, c) in &rhs.terms {
            self.add_term(-c.clone(), w.clone());
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

/// Associative product: bilinear extension of star-word concatenation.
pub fn star_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            out.add_term(a * b, u.concat(v));
        }
    }
    out
}

/// Planar product `·`: bilinear extension of [`tree_mul_words`].
pub fn tree_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            let prod = tree_mul_words(u, v);
            out += &prod.scaled(&(a * b));
        }
    }
    out
}

/// Successor half-product `≻`; coincides with the planar product.
pub fn succ_mul(p: &Poly, q: &Poly) -> Poly {
    tree_mul(p, q)
}

/// Predecessor half-product `≺ = * − ≻`.
pub fn prec_mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = star_mul(p, q);
    out -= &tree_mul(p, q);
    out
}

/// Planar product of two star words.
///
/// Tree against tree grafts: `u · v = (u v)`.  A star-composite left factor
/// peels by `(u₁ * A) · q = u₁ · (A · q)`, and a tree against a composite
/// right factor expands by
///
/// ```text
/// t · (v₁ * B)  =  (t v₁) * B  −  (t v₁) · B  +  t · (v₁ · B)
/// ```
///
/// Both rules shrink the pair of star lengths lexicographically, so the
/// recursion terminates.  When the right argument is a tree the result is the
/// single right comb over the left factors and it, so multiplying by a tree
/// on the right never leaves the span of trees.
pub fn tree_mul_words(u: &StarWord, v: &StarWord) -> Poly {
    match u.factors() {
        [t] => tree_mul_tree_star(t, v),
        [t, rest @ ..] => {
            let inner = tree_mul_words(&StarWord::new(rest.to_vec()), v);
            tree_mul_tree_poly(t, &inner)
        }
        [] => unreachable!("star words are nonempty"),
    }
}

fn tree_mul_tree_star(t: &NaWord, v: &StarWord) -> Poly {
    match v.factors() {
        [w] => Poly::monomial(StarWord::from_word(NaWord::node(t.clone(), w.clone()))),
        [v1, b @ ..] => {
            let b = StarWord::new(b.to_vec());
            let tv1 = NaWord::node(t.clone(), v1.clone());
            let mut factors = vec![tv1.clone()];
            factors.extend(b.factors().iter().cloned());
            let mut out = Poly::monomial(StarWord::new(factors));
            out -= &tree_mul_tree_star(&tv1, &b);
            let inner = tree_mul_tree_star(v1, &b);
            out += &tree_mul_tree_poly(t, &inner);
            out
        }
        [] => unreachable!("star words are nonempty"),
    }
}

fn tree_mul_tree_poly(t: &NaWord, p: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in p.terms() {
        out += &tree_mul_tree_star(t, w).scaled(c);
    }
    out
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    alphabet: &'a Alphabet,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("ZERO");
        }
        for (i, (w, c)) in self.poly.terms_desc().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{} ", mag)?;
            }
            write!(f, "{}", w.display(self.alphabet))?;
        }
        Ok(())
    }
}
