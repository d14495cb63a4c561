//! Ready-made relation families: Zinbiel quotients and universal envelopes
//! of associative algebras given by multiplication tables.
//!
//! Both families are degree-truncated instance sets: for a bound `D` they
//! list every schema instance whose leading word has degree at most `D`.
//! Their key structural property, exercised heavily by the tests, is that
//! the right-multiplication composition of a star-composite instance by a
//! tree is again an instance, so the truncated systems are closed under
//! composition inside the bound.

use num_rational::BigRational;
use num_traits::One;

use crate::parse::{is_valid_name, parse_poly, rebase};
use crate::polynomials::{tree_mul, Poly};
use crate::rewrite::Relation;
use crate::words::{na_words_up_to, Alphabet, NaWord, StarWord};
use crate::{Error, Result};

/// Default generator names: `x, y, z` for up to three, `x1..xk` beyond.
pub fn generator_names(k: usize) -> Vec<String> {
    if k <= 3 {
        ["x", "y", "z"][..k].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=k).map(|i| format!("x{}", i)).collect()
    }
}

/// The Zinbiel-quotient system over `gens` generators, truncated at degree
/// `max_deg`.
///
/// For tree words `u, v, w` it contains the square relations
/// `u*v − uv − vu` and the tree relations `u(vw) − (uv)w − (vu)w`; the
/// latter equal the former multiplied by `w` on the right.  Its reduced tree
/// words are exactly the left combs, so the quotient has dimension `kⁿ` in
/// each degree `n`.
pub fn zinbiel(gens: usize, max_deg: usize) -> Result<(Alphabet, Vec<Relation>)> {
    let alphabet = Alphabet::new(generator_names(gens))?;
    if max_deg < 2 {
        return Err(Error::BoundTooSmall {
            bound: max_deg,
            required: 2,
        });
    }
    let trees = na_words_up_to(&alphabet, max_deg - 1);
    let mut relations = Vec::new();
    for du in 1..max_deg {
        for dv in 1..=max_deg - du {
            for u in &trees[du - 1] {
                for v in &trees[dv - 1] {
                    relations.push(Relation::new(zinbiel_square(u, v))?);
                }
            }
        }
    }
    for du in 1..max_deg {
        for dv in 1..=max_deg - du {
            for dw in 1..=max_deg.saturating_sub(du + dv) {
                for u in &trees[du - 1] {
                    for v in &trees[dv - 1] {
                        for w in &trees[dw - 1] {
                            relations.push(Relation::new(zinbiel_tree(u, v, w))?);
                        }
                    }
                }
            }
        }
    }
    Ok((alphabet, relations))
}

/// `u*v − uv − vu`; for `u = v` the tail collapses to `−2(uu)`.
pub fn zinbiel_square(u: &NaWord, v: &NaWord) -> Poly {
    let one = BigRational::one;
    let mut p = Poly::zero();
    p.add_term(one(), StarWord::new(vec![u.clone(), v.clone()]));
    p.add_term(
        -one(),
        StarWord::from_word(NaWord::node(u.clone(), v.clone())),
    );
    p.add_term(
        -one(),
        StarWord::from_word(NaWord::node(v.clone(), u.clone())),
    );
    p
}

/// `u(vw) − (uv)w − (vu)w`, the right multiple of [`zinbiel_square`] by `w`.
pub fn zinbiel_tree(u: &NaWord, v: &NaWord, w: &NaWord) -> Poly {
    let one = BigRational::one;
    let n = NaWord::node;
    let mut p = Poly::zero();
    p.add_term(
        one(),
        StarWord::from_word(n(u.clone(), n(v.clone(), w.clone()))),
    );
    p.add_term(
        -one(),
        StarWord::from_word(n(n(u.clone(), v.clone()), w.clone())),
    );
    p.add_term(
        -one(),
        StarWord::from_word(n(n(v.clone(), u.clone()), w.clone())),
    );
    p
}

/// A finite-dimensional associative algebra given by structure constants
/// over a named basis.  Products not listed are zero; the table is the
/// nonunital multiplication `basis × basis → span(basis)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MulTable {
    basis: Vec<String>,
    /// `products[i][j]`: sparse coefficients of `e_i · e_j`, sorted by basis
    /// index.
    products: Vec<Vec<Vec<(usize, BigRational)>>>,
}

impl MulTable {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, BigRational)] {
        &self.products[i][j]
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        Alphabet::new(self.basis.clone())
    }

    fn empty(basis: Vec<String>) -> MulTable {
        let dim = basis.len();
        MulTable {
            basis,
            products: vec![vec![Vec::new(); dim]; dim],
        }
    }

    /// The zero multiplication; basis `e` for dimension one, `e1..en`
    /// otherwise.
    pub fn zero(dim: usize) -> MulTable {
        let basis = if dim == 1 {
            vec!["e".to_string()]
        } else {
            (1..=dim).map(|i| format!("e{}", i)).collect()
        };
        MulTable::empty(basis)
    }

    /// Two orthogonal idempotents: `e1·e1 = e1`, `e2·e2 = e2`.
    pub fn split_idempotents() -> MulTable {
        let mut t = MulTable::empty(vec!["e1".into(), "e2".into()]);
        t.products[0][0] = vec![(0, BigRational::one())];
        t.products[1][1] = vec![(1, BigRational::one())];
        t
    }

    /// `t·t = s`, all other products zero, so every triple product vanishes.
    pub fn nilpotent_cubed() -> MulTable {
        let mut t = MulTable::empty(vec!["t".into(), "s".into()]);
        t.products[0][0] = vec![(1, BigRational::one())];
        t
    }

    /// Parse the table text format:
    ///
    /// ```text
    /// # comment
    /// basis: t, s
    /// t*t = s
    /// t*s = 0
    /// ```
    ///
    /// The `basis:` line comes first; product lines are `a*b = <combo>` with
    /// a rational linear combination of basis names (or `0`) on the right,
    /// and unlisted pairs are zero.
    pub fn parse(text: &str) -> Result<MulTable> {
        let mut table: Option<(MulTable, Alphabet)> = None;
        let mut seen: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("basis:") {
                if table.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        col: 1,
                        msg: "duplicate basis line".into(),
                    });
                }
                let names: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
                for n in &names {
                    if !is_valid_name(n) {
                        return Err(Error::Parse {
                            line: lineno,
                            col: 1,
                            msg: format!("invalid basis name {:?}", n),
                        });
                    }
                }
                let t = MulTable::empty(names);
                let a = t.alphabet()?;
                table = Some((t, a));
                continue;
            }
            let Some((mut t, a)) = table.take() else {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: "expected a basis line before products".into(),
                });
            };
            let Some((lhs, rhs)) = line.split_once('=') else {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: "expected 'a*b = ...'".into(),
                });
            };
            let Some((an, bn)) = lhs.split_once('*') else {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: "left side must be a product a*b".into(),
                });
            };
            let lookup = |name: &str| {
                a.index_of(name.trim())
                    .ok_or_else(|| Error::UnknownGenerator {
                        name: name.trim().to_string(),
                        line: lineno,
                        col: 1,
                    })
            };
            let (i, j) = (lookup(an)?, lookup(bn)?);
            if seen.contains(&(i, j)) {
                return Err(Error::Parse {
                    line: lineno,
                    col: 1,
                    msg: format!("duplicate product for {}*{}", an.trim(), bn.trim()),
                });
            }
            seen.push((i, j));
            let rhs_offset = raw.chars().count() - raw.trim_start().chars().count()
                + line
                    .split_once('=')
                    .map(|(l, _)| l.chars().count() + 1)
                    .unwrap();
            let combo = if rhs.trim() == "0" {
                Vec::new()
            } else {
                let poly = parse_poly(rhs, &a).map_err(|e| rebase(e, lineno, rhs_offset))?;
                let mut combo = Vec::new();
                for (w, c) in poly.terms() {
                    match w.single() {
                        Some(NaWord::Leaf(k)) => combo.push((*k, c.clone())),
                        _ => {
                            return Err(Error::Parse {
                                line: lineno,
                                col: rhs_offset + 1,
                                msg: "table entries must be linear in the basis".into(),
                            })
                        }
                    }
                }
                combo
            };
            t.products[i][j] = combo;
            table = Some((t, a));
        }
        match table {
            Some((t, _)) => Ok(t),
            None => Err(Error::Parse {
                line: 1,
                col: 1,
                msg: "missing basis line".into(),
            }),
        }
    }

    /// Linear extension of the product to sparse combinations.
    fn mul_combo(
        &self,
        u: &[(usize, BigRational)],
        v: &[(usize, BigRational)],
    ) -> Vec<(usize, BigRational)> {
        let mut acc = vec![BigRational::from_integer(0.into()); self.dim()];
        for (i, a) in u {
            for (j, b) in v {
                for (k, c) in self.product(*i, *j) {
                    acc[*k] += a * b * c;
                }
            }
        }
        acc.into_iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .collect()
    }

    /// Verify `(ab)c = a(bc)` for all basis triples; names the first failing
    /// triple.
    pub fn check_associative(&self) -> Result<()> {
        let unit = |i: usize| vec![(i, BigRational::one())];
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for k in 0..self.dim() {
                    let left = self.mul_combo(self.product(i, j), &unit(k));
                    let right = self.mul_combo(&unit(i), self.product(j, k));
                    if left != right {
                        return Err(Error::NonAssociativeTable {
                            a: self.basis[i].clone(),
                            b: self.basis[j].clone(),
                            c: self.basis[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Replace the rightmost leaf of `tree` by `repl`.
fn replace_rightmost(tree: &NaWord, repl: &NaWord) -> NaWord {
    match tree {
        NaWord::Leaf(_) => repl.clone(),
        NaWord::Node { left, right, .. } => {
            NaWord::node((**left).clone(), replace_rightmost(right, repl))
        }
    }
}

/// Rightmost leaf letter of `tree`.
fn rightmost_letter(tree: &NaWord) -> usize {
    match tree {
        NaWord::Leaf(i) => *i,
        NaWord::Node { right, .. } => rightmost_letter(right),
    }
}

/// The square relation of the envelope of `table` attached to the tree `t`
/// and basis letter `b`:
///
/// ```text
/// t*b  −  (t b)  +  t[a → (a b)]  −  Σ_m c_m · t[a → m]
/// ```
///
/// where `a` is the rightmost leaf of `t`, `t[a → _]` replaces that leaf,
/// and `a·b = Σ_m c_m m` in the table.  For `t` a bare letter the two middle
/// terms cancel and the relation says `a*b` rewrites to the table product.
pub fn envelope_square(table: &MulTable, t: &NaWord, b: usize) -> Poly {
    let one = BigRational::one;
    let a = rightmost_letter(t);
    let bleaf = NaWord::leaf(b);
    let mut p = Poly::zero();
    p.add_term(one(), StarWord::new(vec![t.clone(), bleaf.clone()]));
    p.add_term(
        -one(),
        StarWord::from_word(NaWord::node(t.clone(), bleaf.clone())),
    );
    p.add_term(
        one(),
        StarWord::from_word(replace_rightmost(t, &NaWord::node(NaWord::leaf(a), bleaf))),
    );
    for (m, c) in table.product(a, b) {
        p.add_term(
            -c.clone(),
            StarWord::from_word(replace_rightmost(t, &NaWord::leaf(*m))),
        );
    }
    p
}

/// The tree relation of the envelope: the right multiple of
/// [`envelope_square`] by the tree `u`.  Its leading word is always
/// `(t (b u))`.
pub fn envelope_tree(table: &MulTable, t: &NaWord, b: usize, u: &NaWord) -> Poly {
    let square = envelope_square(table, t, b);
    let w = tree_mul(&square, &Poly::monomial(StarWord::from_word(u.clone())));
    let expect = NaWord::node(t.clone(), NaWord::node(NaWord::leaf(b), u.clone()));
    assert_eq!(
        w.leading_word().map(|l| l.single()),
        Some(Some(&expect)),
        "tree relation leading word"
    );
    assert!(w.leading().map(|(_, c)| c.is_one()).unwrap_or(false));
    w
}

/// The universal-envelope system of `table`, truncated at degree `max_deg`:
/// all square relations with `deg t + 1 ≤ max_deg` and all tree relations
/// with `deg t + 1 + deg u ≤ max_deg`.  The table is checked for
/// associativity first.
pub fn envelope(table: &MulTable, max_deg: usize) -> Result<(Alphabet, Vec<Relation>)> {
    table.check_associative()?;
    let alphabet = table.alphabet()?;
    if max_deg < 2 {
        return Err(Error::BoundTooSmall {
            bound: max_deg,
            required: 2,
        });
    }
    let trees = na_words_up_to(&alphabet, max_deg - 1);
    let mut relations = Vec::new();
    for dt in 1..max_deg {
        for t in &trees[dt - 1] {
            for b in 0..alphabet.len() {
                relations.push(Relation::new(envelope_square(table, t, b))?);
            }
        }
    }
    for dt in 1..max_deg {
        for du in 1..=max_deg.saturating_sub(dt + 1) {
            for t in &trees[dt - 1] {
                for b in 0..alphabet.len() {
                    for u in &trees[du - 1] {
                        relations.push(Relation::new(envelope_tree(table, t, b, u))?);
                    }
                }
            }
        }
    }
    Ok((alphabet, relations))
}

/// Table-independent normal-form predicate for envelope systems: a star word
/// is reduced iff every factor after the first has degree at least two and
/// no factor contains a subtree `(s (b u))` with `b` a letter.
pub fn pbw_reduced(word: &StarWord) -> bool {
    word.factors().iter().skip(1).all(|f| f.degree() > 1)
        && word.factors().iter().all(|f| !contains_letter_wedge(f))
}

fn contains_letter_wedge(tree: &NaWord) -> bool {
    match tree {
        NaWord::Leaf(_) => false,
        NaWord::Node { left, right, .. } => {
            matches!(
                &**right,
                NaWord::Node { left: rl, .. } if matches!(&**rl, NaWord::Leaf(_))
            ) || contains_letter_wedge(left)
                || contains_letter_wedge(right)
        }
    }
}
