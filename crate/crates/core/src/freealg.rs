//! Words and polynomials in the free algebra `k<x_1, ..., x_n>` with positive
//! generator weights.
//!
//! [`Word`] orders itself degree-lexicographically: first by weighted degree,
//! then left to right on generator indices. Because of that, the largest key
//! of an [`NcPoly`]'s term map is its leading word.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Ordered generator names with positive degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, degrees: impl IntoIterator<Item = u32>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let degrees: Vec<u32> = degrees.into_iter().collect();
        if names.len() != degrees.len() {
            return Err(Error::InvalidGenerators("name and degree counts differ".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::InvalidGenerators("generator degrees must be positive".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::InvalidGenerators("empty generator name".into()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidGenerators(alloc::format!("duplicate generator `{n}`")));
            }
        }
        Ok(GeneratorSet { names, degrees })
    }

    /// `x1, ..., xn`, all of degree 1.
    pub fn standard(n: usize) -> Self {
        Self::with_prefix("x", &alloc::vec![1; n])
    }

    /// `{prefix}1, ..., {prefix}n` with the given degrees.
    pub fn with_prefix(prefix: &str, degrees: &[u32]) -> Self {
        let names = (1..=degrees.len()).map(|i| alloc::format!("{prefix}{i}"));
        Self::new(names, degrees.iter().copied()).expect("generated names are distinct")
    }

    pub fn empty() -> Self {
        GeneratorSet { names: Vec::new(), degrees: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn all_degree_one(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    pub fn word(&self, letters: &[usize]) -> Result<Word> {
        if letters.iter().any(|&l| l >= self.len()) {
            return Err(Error::GeneratorSetMismatch);
        }
        Ok(Word::from_letters(letters.to_vec(), |l| self.degrees[l]))
    }

    pub fn generator(&self, i: usize) -> Word {
        self.word(&[i]).expect("generator index in range")
    }

    /// The polynomial `1 * x_i`.
    pub fn var(&self, i: usize, one: &Scalar) -> NcPoly {
        NcPoly::monomial(self.generator(i), one.clone())
    }

    /// Checks that every word of `f` uses in-range letters with matching degrees.
    pub fn check(&self, f: &NcPoly) -> Result<()> {
        for w in f.terms.keys() {
            if w.letters.iter().any(|&l| l >= self.len()) {
                return Err(Error::GeneratorSetMismatch);
            }
            let deg: u32 = w.letters.iter().map(|&l| self.degrees[l]).sum();
            if deg != w.degree {
                return Err(Error::GeneratorSetMismatch);
            }
        }
        Ok(())
    }

    pub fn try_add(&self, f: &NcPoly, g: &NcPoly) -> Result<NcPoly> {
        self.check(f)?;
        self.check(g)?;
        f.try_add(g)
    }

    pub fn try_mul(&self, f: &NcPoly, g: &NcPoly) -> Result<NcPoly> {
        self.check(f)?;
        self.check(g)?;
        f.try_mul(g)
    }

    pub fn try_commutator(&self, f: &NcPoly, g: &NcPoly) -> Result<NcPoly> {
        self.check(f)?;
        self.check(g)?;
        f.try_mul(g)?.try_sub(&g.try_mul(f)?)
    }
}

/// A monomial of the free algebra; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    // Field order matters: the derived ordering is degree-lexicographic.
    degree: u32,
    letters: Vec<usize>,
}

impl Word {
    pub fn unit() -> Self {
        Word { degree: 0, letters: Vec::new() }
    }

    pub(crate) fn from_letters(letters: Vec<usize>, weight: impl Fn(usize) -> u32) -> Self {
        let degree = letters.iter().map(|&l| weight(l)).sum();
        Word { degree, letters }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True for the empty word, the unit of the free algebra.
    pub fn is_unit(&self) -> bool {
        self.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { degree: self.degree + other.degree, letters }
    }

    /// Subword `letters[start..end]`; the degree is recomputed from `weight`.
    pub(crate) fn slice(&self, start: usize, end: usize, weight: impl Fn(usize) -> u32) -> Word {
        Word::from_letters(self.letters[start..end].to_vec(), weight)
    }

    pub fn to_text(&self, gens: &GeneratorSet) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let parts: Vec<&str> = self.letters.iter().map(|&l| gens.name(l)).collect();
        parts.join("*")
    }
}

/// Degree-lexicographic comparison.
pub fn deglex_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// Homogeneity of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

/// A finite linear combination of words with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn monomial(word: Word, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        NcPoly { terms }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Scalar)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c * w` in place.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing deglex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    pub fn leading_term(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(Word::degree);
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Word::degree)
    }

    pub fn homogeneous_component(&self, d: u32) -> NcPoly {
        NcPoly { terms: self.terms.iter().filter(|(w, _)| w.degree == d).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    /// Nonzero homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<u32, NcPoly> {
        let mut out: BTreeMap<u32, NcPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree).or_default().terms.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect() }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> NcPoly {
        match self.leading_term() {
            None => NcPoly::zero(),
            Some((_, c)) => self.scale(&c.inv().expect("stored coefficients are nonzero")),
        }
    }

    pub fn try_add(&self, other: &NcPoly) -> Result<NcPoly> {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            if let Some(a) = out.terms.values().next() {
                if a.field() != c.field() {
                    return Err(Error::FieldMismatch);
                }
            }
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &NcPoly) -> Result<NcPoly> {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.try_mul(b)?);
            }
        }
        Ok(out)
    }

    /// `[f, g] = fg - gf`.
    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        &(self * other) - &(other * self)
    }

    /// Replaces each letter `l` by `images[l]` and expands.
    pub fn substitute(&self, images: &[NcPoly]) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let mut prod = NcPoly::constant(c.clone());
            for &l in &w.letters {
                prod = &prod * &images[l];
                if prod.is_zero() {
                    break;
                }
            }
            out = &out + &prod;
        }
        out
    }

    pub fn to_text(&self, gens: &GeneratorSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg_rational = c.is_negative();
            let mag = if neg_rational { -c } else { c.clone() };
            if k == 0 {
                if neg_rational {
                    s.push('-');
                }
            } else if neg_rational {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            if w.is_unit() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&w.to_text(gens));
            } else {
                s.push_str(&mag.to_string());
                s.push('*');
                s.push_str(&w.to_text(gens));
            }
        }
        s
    }
}

impl Add<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.try_mul(rhs).expect("polynomials over different fields")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::FieldSpec;

    fn setup() -> (GeneratorSet, Scalar) {
        (GeneratorSet::standard(2), FieldSpec::Rationals.one())
    }

    #[test]
    fn product_and_commutator() {
        let (g, one) = setup();
        let x1 = g.var(0, &one);
        let x2 = g.var(1, &one);
        let p = &x1 * &x2;
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.leading_term().unwrap().0.letters(), &[0, 1]);
        let c = x2.commutator(&x1);
        assert_eq!(c.to_text(&g), "x2*x1 - x1*x2");
        assert!(x1.commutator(&x1).is_zero());
    }

    #[test]
    fn deglex() {
        let g = GeneratorSet::standard(2);
        let x1 = g.word(&[0]).unwrap();
        let x1x2 = g.word(&[0, 1]).unwrap();
        let x2x1 = g.word(&[1, 0]).unwrap();
        assert_eq!(deglex_compare(&x1, &x1x2), Ordering::Less);
        assert_eq!(deglex_compare(&x1x2, &x2x1), Ordering::Less);
        assert_eq!(deglex_compare(&x1x2, &x1x2), Ordering::Equal);
        // weights take precedence over length
        let w = GeneratorSet::new(["a", "b"], [3, 1]).unwrap();
        let a = w.word(&[0]).unwrap();
        let bb = w.word(&[1, 1]).unwrap();
        assert_eq!(deglex_compare(&bb, &a), Ordering::Less);
    }

    #[test]
    fn components() {
        let (g, one) = setup();
        let x1 = g.var(0, &one);
        let f = &x1 + &(&x1 * &g.var(1, &one));
        assert_eq!(f.homogeneous_component(1), x1);
        assert_eq!(f.homogeneous_component(2).to_text(&g), "x1*x2");
        assert!(NcPoly::zero().homogeneous_component(3).is_zero());
        assert_eq!(f.homogeneity(), Homogeneity::Inhomogeneous);
    }

    #[test]
    fn generator_set_validation() {
        assert!(GeneratorSet::new(["x", "x"], [1, 1]).is_err());
        assert!(GeneratorSet::new(["x"], [0]).is_err());
        let (g, one) = setup();
        let big = GeneratorSet::standard(3);
        let x3 = big.var(2, &one);
        assert_eq!(g.try_mul(&x3, &x3), Err(Error::GeneratorSetMismatch));
    }
}
