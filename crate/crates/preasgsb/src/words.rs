//! Alphabets, nonassociative (tree) words, star words, and their monomial
//! orders.
//!
//! A `NaWord` is a planar binary tree whose leaves carry letters; it denotes
//! an iterated `·`-product.  A `StarWord` is a nonempty sequence of trees
//! `u₁ * … * u_k` and is a basis monomial of the free algebra.  The empty
//! associative word is never a `StarWord`; interfaces that need it take an
//! `Option<StarWord>`.
//!
//! Tree words are compared by *weight*: letters by declaration order, and a
//! composite `u = u₁u₂` by `(degree, right subtree, left subtree)`
//! lexicographically.  Star words are compared by star length first, then
//! factorwise left to right.  Both orders are total, degree-compatible well
//! orders and are monomial for the respective products.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Ordered list of distinct generator names.  Declaration order is the letter
/// order used by every word comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, letter: usize) -> &str {
        &self.names[letter]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A nonassociative word: either a letter or the `·`-product of two words.
///
/// Composite nodes cache their degree (leaf count) so that comparisons can
/// short-circuit on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NaWord {
    Leaf(usize),
    Node {
        degree: usize,
        left: Box<NaWord>,
        right: Box<NaWord>,
    },
}

/// One branch choice on a path from a tree's root to a subtree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Left,
    Right,
}

impl NaWord {
    pub fn leaf(letter: usize) -> Self {
        NaWord::Leaf(letter)
    }

    pub fn node(left: NaWord, right: NaWord) -> Self {
        let degree = left.degree() + right.degree();
        NaWord::Node {
            degree,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            NaWord::Leaf(_) => 1,
            NaWord::Node { degree, .. } => *degree,
        }
    }

    pub fn as_node(&self) -> Option<(&NaWord, &NaWord)> {
        match self {
            NaWord::Leaf(_) => None,
            NaWord::Node { left, right, .. } => Some((left, right)),
        }
    }

    /// Subtree at `path`, or `None` if the path runs past a leaf.
    pub fn subtree_at(&self, path: &[Step]) -> Option<&NaWord> {
        let mut cur = self;
        for step in path {
            let (l, r) = cur.as_node()?;
            cur = match step {
                Step::Left => l,
                Step::Right => r,
            };
        }
        Some(cur)
    }

    /// Copy of `self` with the subtree at `path` replaced by `repl`.
    ///
    /// Panics if the path does not address a subtree.
    pub fn replace_at(&self, path: &[Step], repl: &NaWord) -> NaWord {
        match path.split_first() {
            None => repl.clone(),
            Some((step, rest)) => {
                let (l, r) = self.as_node().expect("replace_at: path runs past a leaf");
                match step {
                    Step::Left => NaWord::node(l.replace_at(rest, repl), r.clone()),
                    Step::Right => NaWord::node(l.clone(), r.replace_at(rest, repl)),
                }
            }
        }
    }

    /// All subtrees in pre-order (a node before its children, left child
    /// before right), paired with their paths.  The first entry is the whole
    /// tree with the empty path.
    pub fn subtrees(&self) -> Vec<(Vec<Step>, &NaWord)> {
        let mut out = Vec::new();
        let mut stack = vec![(Vec::new(), self)];
        while let Some((path, node)) = stack.pop() {
            if let Some((l, r)) = node.as_node() {
                let mut right_path = path.clone();
                right_path.push(Step::Right);
                stack.push((right_path, r));
                let mut left_path = path.clone();
                left_path.push(Step::Left);
                stack.push((left_path, l));
            }
            out.push((path, node));
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> NaWordDisplay<'a> {
        NaWordDisplay {
            word: self,
            alphabet,
        }
    }
}

/// Weight comparison of tree words: degree first; for letters the alphabet
/// order; for composites the right subtree, then the left.
pub fn compare_na(u: &NaWord, v: &NaWord) -> Ordering {
    u.cmp(v)
}

impl Ord for NaWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            match (self, other) {
                (NaWord::Leaf(a), NaWord::Leaf(b)) => a.cmp(b),
                (
                    NaWord::Node {
                        left: ul,
                        right: ur,
                        ..
                    },
                    NaWord::Node {
                        left: vl,
                        right: vr,
                        ..
                    },
                ) => ur.cmp(vr).then_with(|| ul.cmp(vl)),
                // Equal degree 1 forces two leaves; equal degree >= 2 two nodes.
                _ => unreachable!("equal-degree words of mixed shape"),
            }
        })
    }
}

impl PartialOrd for NaWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A star word `u₁ * … * u_k`, `k ≥ 1`: the associative product of tree
/// words.  These are the basis monomials of the free algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StarWord {
    factors: Vec<NaWord>,
}

impl StarWord {
    /// Panics when `factors` is empty: the empty word is not a monomial.
    pub fn new(factors: Vec<NaWord>) -> Self {
        assert!(!factors.is_empty(), "star word needs at least one factor");
        StarWord { factors }
    }

    pub fn from_word(word: NaWord) -> Self {
        StarWord {
            factors: vec![word],
        }
    }

    pub fn letter(letter: usize) -> Self {
        StarWord::from_word(NaWord::leaf(letter))
    }

    pub fn factors(&self) -> &[NaWord] {
        &self.factors
    }

    pub fn star_length(&self) -> usize {
        self.factors.len()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(NaWord::degree).sum()
    }

    /// `self * other` as a monomial.
    pub fn concat(&self, other: &StarWord) -> StarWord {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        StarWord { factors }
    }

    /// The single tree of a star-length-1 word.
    pub fn single(&self) -> Option<&NaWord> {
        match self.factors.as_slice() {
            [w] => Some(w),
            _ => None,
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> StarWordDisplay<'a> {
        StarWordDisplay {
            word: self,
            alphabet,
        }
    }

    /// Copy of `self` with the subtree of factor `factor` at `path` replaced
    /// by the tree `repl`.
    pub fn substitute_subtree(&self, factor: usize, path: &[Step], repl: &NaWord) -> StarWord {
        let mut factors = self.factors.clone();
        factors[factor] = factors[factor].replace_at(path, repl);
        StarWord { factors }
    }

    /// Copy of `self` with the factor run `[start, start + len)` spliced out
    /// and `repl`'s factors put in its place.
    pub fn substitute_run(&self, start: usize, len: usize, repl: &StarWord) -> StarWord {
        let mut factors = Vec::with_capacity(self.factors.len() - len + repl.factors.len());
        factors.extend(self.factors[..start].iter().cloned());
        factors.extend(repl.factors.iter().cloned());
        factors.extend(self.factors[start + len..].iter().cloned());
        StarWord { factors }
    }

    /// Replace the match at `site` by `repl`.  A subtree site needs `repl` to
    /// be star-free and panics otherwise: a star word cannot sit inside a
    /// tree.
    pub fn substitute(&self, site: &MatchSite, repl: &StarWord) -> StarWord {
        match site {
            MatchSite::Subtree { factor, path } => {
                let tree = repl
                    .single()
                    .expect("substituting a star-composite word inside a tree");
                self.substitute_subtree(*factor, path, tree)
            }
            MatchSite::Run { start, len } => self.substitute_run(*start, *len, repl),
        }
    }
}

/// Star-length-graded comparison: shorter star words first, equal lengths
/// factorwise left to right by the tree order.
pub fn compare_star(u: &StarWord, v: &StarWord) -> Ordering {
    u.cmp(v)
}

impl Ord for StarWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors.len().cmp(&other.factors.len()).then_with(|| {
            for (a, b) in self.factors.iter().zip(&other.factors) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for StarWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A located match of a pattern inside a star word.
///
/// `Subtree` sites place a star-free pattern at a path inside one factor; the
/// empty path means the pattern is that entire factor.  `Run` sites match the
/// pattern's factor sequence against `len` consecutive factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum MatchSite {
    Subtree { factor: usize, path: Vec<Step> },
    Run { start: usize, len: usize },
}

/// All occurrences of `pattern` inside `word`.
///
/// For a star-free pattern these are subtree sites over every factor, listed
/// factor by factor and outermost first (pre-order) inside each factor.  For
/// a longer pattern they are runs of consecutive factors, listed left to
/// right.
pub fn find_occurrences(word: &StarWord, pattern: &StarWord) -> Vec<MatchSite> {
    let mut out = Vec::new();
    if let Some(tree) = pattern.single() {
        for (i, factor) in word.factors().iter().enumerate() {
            if factor.degree() < tree.degree() {
                continue;
            }
            for (path, sub) in factor.subtrees() {
                if sub == tree {
                    out.push(MatchSite::Subtree { factor: i, path });
                }
            }
        }
    } else {
        let len = pattern.star_length();
        if len <= word.star_length() {
            for start in 0..=word.star_length() - len {
                if word.factors()[start..start + len] == *pattern.factors() {
                    out.push(MatchSite::Run { start, len });
                }
            }
        }
    }
    out
}

/// All tree words of degree exactly `degree`, sorted ascending by the weight
/// order.
pub fn enumerate_na_words(alphabet: &Alphabet, degree: usize) -> Vec<NaWord> {
    let by_degree = na_words_up_to(alphabet, degree);
    by_degree.into_iter().last().unwrap_or_default()
}

/// Tree words of every degree `1..=degree`, indexed by `degree - 1`; each
/// level sorted ascending.
pub fn na_words_up_to(alphabet: &Alphabet, degree: usize) -> Vec<Vec<NaWord>> {
    let mut levels: Vec<Vec<NaWord>> = Vec::new();
    for d in 1..=degree {
        let mut level = Vec::new();
        if d == 1 {
            level.extend((0..alphabet.len()).map(NaWord::leaf));
        } else {
            for i in 1..d {
                for l in &levels[i - 1] {
                    for r in &levels[d - i - 1] {
                        level.push(NaWord::node(l.clone(), r.clone()));
                    }
                }
            }
        }
        level.sort();
        levels.push(level);
    }
    levels
}

/// All star words of degree exactly `degree`, sorted ascending by the
/// star-length-graded order.
pub fn enumerate_star_words(alphabet: &Alphabet, degree: usize) -> Vec<StarWord> {
    let trees = na_words_up_to(alphabet, degree);
    // words[d - 1] = star words of degree d
    let mut words: Vec<Vec<StarWord>> = Vec::new();
    for d in 1..=degree {
        let mut level: Vec<StarWord> = trees[d - 1]
            .iter()
            .cloned()
            .map(StarWord::from_word)
            .collect();
        for first in 1..d {
            for t in &trees[first - 1] {
                for rest in &words[d - first - 1] {
                    let mut factors = vec![t.clone()];
                    factors.extend(rest.factors().iter().cloned());
                    level.push(StarWord::new(factors));
                }
            }
        }
        level.sort();
        words.push(level);
    }
    words.into_iter().last().unwrap_or_default()
}

/// Left comb `(…((w₁w₂)w₃)…)w_n` of a nonempty word sequence.
pub fn left_comb(words: &[NaWord]) -> NaWord {
    let (first, rest) = words.split_first().expect("left_comb of an empty slice");
    rest.iter()
        .fold(first.clone(), |acc, w| NaWord::node(acc, w.clone()))
}

/// Right comb `w₁(w₂(…(w_{n−1}w_n)…))` of a nonempty word sequence.
pub fn right_comb(words: &[NaWord]) -> NaWord {
    let (last, rest) = words.split_last().expect("right_comb of an empty slice");
    rest.iter()
        .rev()
        .fold(last.clone(), |acc, w| NaWord::node(w.clone(), acc))
}

pub struct NaWordDisplay<'a> {
    word: &'a NaWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for NaWordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.word {
            NaWord::Leaf(i) => f.write_str(self.alphabet.name(*i)),
            NaWord::Node { left, right, .. } => {
                write!(
                    f,
                    "({} {})",
                    left.display(self.alphabet),
                    right.display(self.alphabet)
                )
            }
        }
    }
}

pub struct StarWordDisplay<'a> {
    word: &'a StarWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for StarWordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.word.factors().iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{}", factor.display(self.alphabet))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab2() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn ab1() -> Alphabet {
        Alphabet::new(["x"]).unwrap()
    }

    fn n(l: NaWord, r: NaWord) -> NaWord {
        NaWord::node(l, r)
    }

    fn x() -> NaWord {
        NaWord::leaf(0)
    }

    fn y() -> NaWord {
        NaWord::leaf(1)
    }

    #[test]
    fn alphabet_rejects_bad_input() {
        assert_eq!(
            Alphabet::new(Vec::<String>::new()),
            Err(Error::EmptyAlphabet)
        );
        assert_eq!(
            Alphabet::new(["x", "x"]),
            Err(Error::DuplicateGenerator("x".into()))
        );
    }

    #[test]
    fn letter_order_follows_declaration() {
        assert!(x() < y());
        let reversed = Alphabet::new(["y", "x"]).unwrap();
        assert_eq!(reversed.index_of("y"), Some(0));
    }

    #[test]
    fn weight_order_prefers_right_subtree() {
        // (xy) vs (yx): weights (2,y,x) vs (2,x,y), decided by the right part.
        assert!(n(x(), y()) > n(y(), x()));
        // x(yx) vs (xy)x: right subtrees have degrees 2 vs 1.
        let a = n(x(), n(y(), x()));
        let b = n(n(x(), y()), x());
        assert!(a > b);
        // A leaf and a composite compare by degree.
        assert!(y() < n(x(), x()));
    }

    #[test]
    fn star_order_is_length_graded() {
        let xx = n(x(), x());
        // x*x (length 2) beats a degree-3 single tree.
        let u = StarWord::new(vec![x(), x()]);
        let v = StarWord::from_word(n(xx.clone(), x()));
        assert!(u > v);
        // Equal lengths: factorwise.
        let a = StarWord::new(vec![x(), y()]);
        let b = StarWord::new(vec![x(), x()]);
        assert!(a > b);
        let c = StarWord::new(vec![xx.clone(), y()]);
        let d = StarWord::new(vec![n(x(), y()), x()]);
        assert!(c < d);
    }

    #[test]
    fn enumeration_counts_match_catalan_times_letters() {
        let a = ab2();
        for (deg, catalan) in [(1usize, 1usize), (2, 1), (3, 2), (4, 5), (5, 14)] {
            let words = enumerate_na_words(&a, deg);
            assert_eq!(words.len(), catalan * 2usize.pow(deg as u32));
            assert!(words.windows(2).all(|w| w[0] < w[1]), "sorted, no dups");
        }
    }

    #[test]
    fn degree_three_trees_over_one_letter() {
        let a = ab1();
        let words = enumerate_na_words(&a, 3);
        let xx = n(x(), x());
        assert_eq!(words, vec![n(xx.clone(), x()), n(x(), xx)]);
    }

    #[test]
    fn degree_two_trees_over_two_letters() {
        let words = enumerate_na_words(&ab2(), 2);
        assert_eq!(
            words,
            vec![n(x(), x()), n(y(), x()), n(x(), y()), n(y(), y())]
        );
    }

    #[test]
    fn star_word_counts_over_one_letter_are_catalan() {
        let a = ab1();
        let expect = [1usize, 2, 5, 14, 42, 132];
        for (i, count) in expect.iter().enumerate() {
            let words = enumerate_star_words(&a, i + 1);
            assert_eq!(words.len(), *count, "degree {}", i + 1);
            assert!(words.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn occurrences_of_a_subtree() {
        // ((xy)x) * (xy): the pattern (xy) occurs inside both factors.
        let xy = n(x(), y());
        let w = StarWord::new(vec![n(xy.clone(), x()), xy.clone()]);
        let sites = find_occurrences(&w, &StarWord::from_word(xy));
        assert_eq!(
            sites,
            vec![
                MatchSite::Subtree {
                    factor: 0,
                    path: vec![Step::Left]
                },
                MatchSite::Subtree {
                    factor: 1,
                    path: vec![]
                },
            ]
        );
    }

    #[test]
    fn occurrences_of_a_run() {
        let w = StarWord::new(vec![x(), x(), x()]);
        let p = StarWord::new(vec![x(), x()]);
        assert_eq!(
            find_occurrences(&w, &p),
            vec![
                MatchSite::Run { start: 0, len: 2 },
                MatchSite::Run { start: 1, len: 2 }
            ]
        );
        let q = StarWord::new(vec![x(), y()]);
        assert!(find_occurrences(&w, &q).is_empty());
    }

    #[test]
    fn occurrences_agree_with_brute_force() {
        // Independent check: compare against a direct recursive search over
        // all word/pattern pairs in low degree.
        fn brute(word: &StarWord, pattern: &StarWord) -> Vec<MatchSite> {
            let mut out = Vec::new();
            if let Some(tree) = pattern.single() {
                for (i, f) in word.factors().iter().enumerate() {
                    fn walk(
                        node: &NaWord,
                        target: &NaWord,
                        path: &mut Vec<Step>,
                        factor: usize,
                        out: &mut Vec<MatchSite>,
                    ) {
                        if node == target {
                            out.push(MatchSite::Subtree {
                                factor,
                                path: path.clone(),
                            });
                        }
                        if let Some((l, r)) = node.as_node() {
                            path.push(Step::Left);
                            walk(l, target, path, factor, out);
                            path.pop();
                            path.push(Step::Right);
                            walk(r, target, path, factor, out);
                            path.pop();
                        }
                    }
                    walk(f, tree, &mut Vec::new(), i, &mut out);
                }
            } else {
                let k = pattern.star_length();
                for start in 0..word.star_length() {
                    if start + k <= word.star_length()
                        && word.factors()[start..start + k] == *pattern.factors()
                    {
                        out.push(MatchSite::Run { start, len: k });
                    }
                }
            }
            out
        }

        let a = ab2();
        let mut words = Vec::new();
        for d in 1..=4 {
            words.extend(enumerate_star_words(&a, d));
        }
        for w in &words {
            for p in &words {
                assert_eq!(find_occurrences(w, p), brute(w, p), "w, p mismatch");
            }
        }
    }

    #[test]
    fn combs() {
        let ws = [x(), y(), x()];
        assert_eq!(left_comb(&ws), n(n(x(), y()), x()));
        assert_eq!(right_comb(&ws), n(x(), n(y(), x())));
        assert_eq!(left_comb(&[y()]), y());
    }

    #[test]
    fn replace_and_lookup_roundtrip() {
        let w = n(n(x(), y()), x());
        let path = [Step::Left, Step::Right];
        assert_eq!(w.subtree_at(&path), Some(&y()));
        let w2 = w.replace_at(&path, &n(x(), x()));
        assert_eq!(w2, n(n(x(), n(x(), x())), x()));
        assert_eq!(w.subtree_at(&[Step::Right, Step::Left]), None);
    }

    #[test]
    fn substitution_at_sites() {
        let w = StarWord::new(vec![n(x(), y()), x(), y()]);
        // Replace the subtree y inside factor 0 by (xx).
        let s = w.substitute(
            &MatchSite::Subtree {
                factor: 0,
                path: vec![Step::Right],
            },
            &StarWord::from_word(n(x(), x())),
        );
        assert_eq!(s, StarWord::new(vec![n(x(), n(x(), x())), x(), y()]));
        // Replace the run x*y by a single tree.
        let r = w.substitute(
            &MatchSite::Run { start: 1, len: 2 },
            &StarWord::from_word(n(y(), y())),
        );
        assert_eq!(r, StarWord::new(vec![n(x(), y()), n(y(), y())]));
        // A run can also grow the word.
        let g = w.substitute(
            &MatchSite::Run { start: 1, len: 1 },
            &StarWord::new(vec![y(), y(), y()]),
        );
        assert_eq!(g.star_length(), 5);
    }

    #[test]
    fn display_forms() {
        let a = ab2();
        let w = StarWord::new(vec![x(), n(n(x(), y()), x())]);
        assert_eq!(w.display(&a).to_string(), "x*((x y) x)");
    }

    #[test]
    fn monomial_property_spot_checks() {
        // u < v stays ordered under one-sided tree products and star concat.
        let a = ab2();
        let words: Vec<NaWord> = (1..=3).flat_map(|d| enumerate_na_words(&a, d)).collect();
        for u in &words {
            for v in &words {
                if u >= v {
                    continue;
                }
                for w in &words {
                    assert!(n(w.clone(), u.clone()) < n(w.clone(), v.clone()));
                    assert!(n(u.clone(), w.clone()) < n(v.clone(), w.clone()));
                }
            }
        }
        let stars: Vec<StarWord> = (1..=3).flat_map(|d| enumerate_star_words(&a, d)).collect();
        for u in &stars {
            for v in &stars {
                if u >= v {
                    continue;
                }
                for w in &stars {
                    assert!(w.concat(u) < w.concat(v));
                    assert!(u.concat(w) < v.concat(w));
                }
            }
        }
    }

    fn arb_tree() -> impl proptest::strategy::Strategy<Value = NaWord> {
        use proptest::prelude::*;
        (0usize..2)
            .prop_map(NaWord::leaf)
            .prop_recursive(4, 12, 2, |inner| {
                (inner.clone(), inner).prop_map(|(l, r)| NaWord::node(l, r))
            })
    }

    fn arb_star() -> impl proptest::strategy::Strategy<Value = StarWord> {
        use proptest::prelude::*;
        proptest::collection::vec(arb_tree(), 1..=3).prop_map(StarWord::new)
    }

    proptest::proptest! {
        #[test]
        fn display_parses_back_to_the_same_word(w in arb_star()) {
            let a = ab2();
            let text = w.display(&a).to_string();
            let parsed = crate::parse::parse_poly(&text, &a).unwrap();
            let expected = crate::polynomials::Poly::monomial(w);
            proptest::prop_assert_eq!(parsed, expected);
        }

        #[test]
        fn star_order_is_transitive(u in arb_star(), v in arb_star(), w in arb_star()) {
            let mut sorted = [u, v, w];
            sorted.sort();
            proptest::prop_assert!(sorted[0] <= sorted[1] && sorted[1] <= sorted[2]);
            proptest::prop_assert!(sorted[0] <= sorted[2]);
        }

        #[test]
        fn concatenation_preserves_strict_order(u in arb_star(), v in arb_star(), w in arb_star()) {
            if u < v {
                proptest::prop_assert!(w.concat(&u) < w.concat(&v));
                proptest::prop_assert!(u.concat(&w) < v.concat(&w));
            }
        }
    }
}
