//! Iterated commutators with a distinguished generator and the rewriting of
//! homogeneous polynomials into the form `Σ_s x_d^s r_s`, where each `r_s`
//! is a polynomial in the brackets `x_i^[j] = [x_d, x_i^[j-1]]`,
//! `x_i^[1] = x_i`.
//!
//! Rewriting works over the alphabet `{x_d} ∪ {x_i^[j]}` with the single
//! rule `x_i^[j] x_d → x_d x_i^[j] - x_i^[j+1]`, applied to the leftmost
//! occurrence first. Every step moves an `x_d` one place to the left or
//! removes it, so the process terminates.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{GeneratorSet, Homogeneity, NcPoly};
use crate::scalars::{FieldSpec, Scalar};

/// The bracket `x_index^[order]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketLetter {
    pub index: usize,
    pub order: u32,
}

impl BracketLetter {
    pub fn to_text(&self, gens: &GeneratorSet) -> String {
        format!("{}^[{}]", gens.name(self.index), self.order)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Symbol {
    Distinguished,
    Bracket(BracketLetter),
}

/// A polynomial in bracket letters. The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BracketPoly {
    terms: BTreeMap<Vec<BracketLetter>, Scalar>,
}

impl BracketPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[BracketLetter], &Scalar)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    fn add_term(&mut self, w: Vec<BracketLetter>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                let s = &*e + &c;
                if s.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *e = s;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Degree after expansion, if all terms agree.
    pub fn expanded_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().map(|w| w.iter().map(|b| b.order).sum())
    }

    /// Text in the polynomial syntax, with `name^[j]` for brackets.
    pub fn to_text(&self, gens: &GeneratorSet) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if k > 0 {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let word: Vec<String> = w.iter().map(|b| b.to_text(gens)).collect();
            match (mag.is_one(), word.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&word.join("*")),
                (false, true) => out.push_str(&mag.to_plain_string()),
                (false, false) => {
                    out.push_str(&mag.to_plain_string());
                    out.push('*');
                    out.push_str(&word.join("*"));
                }
            }
        }
        out
    }
}

/// `r = Σ_s x_d^s r_s` with each `r_s` a polynomial in brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketDecomposition {
    distinguished: usize,
    degree: u32,
    parts: BTreeMap<u32, BracketPoly>,
}

impl BracketDecomposition {
    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    /// Degree of the decomposed polynomial.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Nonzero parts `s -> r_s`.
    pub fn parts(&self) -> &BTreeMap<u32, BracketPoly> {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest `s` with `r_s != 0`.
    pub fn leading_part_index(&self) -> Result<u32> {
        self.parts.keys().next_back().copied().ok_or(Error::ZeroDecomposition)
    }

    /// True when every nonzero `r_s` has expanded degree `degree - s`.
    pub fn degrees_consistent(&self) -> bool {
        self.parts.iter().all(|(s, r)| r.expanded_degrees().all(|e| e + s == self.degree))
    }

    /// `Σ_s x_d^s r_s` expanded back into the free algebra.
    pub fn expand(&self, gens: &GeneratorSet, field: FieldSpec) -> Result<NcPoly> {
        let one = field.one();
        let xd = gens.var(self.distinguished, &one);
        let mut cache: BTreeMap<BracketLetter, NcPoly> = BTreeMap::new();
        let mut total = NcPoly::zero();
        for (&s, r) in &self.parts {
            let mut power = NcPoly::constant(one.clone());
            for _ in 0..s {
                power = &power * &xd;
            }
            for (w, c) in r.terms() {
                let mut term = power.scale(c);
                for b in w {
                    if !cache.contains_key(b) {
                        cache.insert(*b, bracket_expand(gens, *b, self.distinguished, field)?);
                    }
                    term = &term * &cache[b];
                }
                total = &total + &term;
            }
        }
        Ok(total)
    }

    pub fn to_text(&self, gens: &GeneratorSet) -> String {
        if self.parts.is_empty() {
            return String::from("0");
        }
        let name = gens.name(self.distinguished);
        let pieces: Vec<String> = self
            .parts
            .iter()
            .rev()
            .map(|(&s, r)| match s {
                0 => format!("({})", r.to_text(gens)),
                1 => format!("{name}*({})", r.to_text(gens)),
                _ => format!("{name}^{s}*({})", r.to_text(gens)),
            })
            .collect();
        pieces.join(" + ")
    }
}

fn check_unit_weights(gens: &GeneratorSet) -> Result<()> {
    if gens.all_degree_one() {
        Ok(())
    } else {
        Err(Error::NonUnitWeight)
    }
}

/// `x_i^[j]` expanded in the free algebra: `j - 1` nested commutators with
/// `x_d` on the left.
pub fn bracket_expand(gens: &GeneratorSet, letter: BracketLetter, d: usize, field: FieldSpec) -> Result<NcPoly> {
    check_unit_weights(gens)?;
    if letter.index == d {
        return Err(Error::DistinguishedIndexClash);
    }
    if letter.index >= gens.len() || d >= gens.len() || letter.order == 0 {
        return Err(Error::GeneratorSetMismatch);
    }
    let one = field.one();
    let xd = gens.var(d, &one);
    let mut cur = gens.var(letter.index, &one);
    for _ in 1..letter.order {
        cur = xd.commutator(&cur);
    }
    Ok(cur)
}

struct Rewriter {
    memo: BTreeMap<Vec<Symbol>, BTreeMap<Vec<Symbol>, Scalar>>,
}

impl Rewriter {
    /// Normal form of a symbol word: every `x_d` in front of every bracket.
    fn normal_form(&mut self, w: &[Symbol], one: &Scalar) -> BTreeMap<Vec<Symbol>, Scalar> {
        if let Some(r) = self.memo.get(w) {
            return r.clone();
        }
        let hit = w.windows(2).position(|p| matches!(p, [Symbol::Bracket(_), Symbol::Distinguished]));
        let result = match hit {
            None => {
                let mut m = BTreeMap::new();
                m.insert(w.to_vec(), one.clone());
                m
            }
            Some(k) => {
                let Symbol::Bracket(b) = w[k] else { unreachable!() };
                let mut swapped = w.to_vec();
                swapped.swap(k, k + 1);
                let mut raised = w[..k].to_vec();
                raised.push(Symbol::Bracket(BracketLetter { index: b.index, order: b.order + 1 }));
                raised.extend_from_slice(&w[k + 2..]);
                let mut acc = self.normal_form(&swapped, one);
                for (u, c) in self.normal_form(&raised, one) {
                    let e = acc.entry(u.clone()).or_insert_with(|| one.field().zero());
                    *e = &*e - &c;
                    if e.is_zero() {
                        acc.remove(&u);
                    }
                }
                acc
            }
        };
        self.memo.insert(w.to_vec(), result.clone());
        result
    }
}

/// Rewrites a homogeneous polynomial `r` into `Σ_s x_d^s r_s`.
pub fn bracket_decompose(gens: &GeneratorSet, r: &NcPoly, d: usize) -> Result<BracketDecomposition> {
    check_unit_weights(gens)?;
    gens.check(r)?;
    if d >= gens.len() {
        return Err(Error::GeneratorSetMismatch);
    }
    let degree = match r.homogeneity() {
        Homogeneity::Zero => 0,
        Homogeneity::Homogeneous(m) => m,
        Homogeneity::Inhomogeneous => return Err(Error::InhomogeneousInput),
    };
    let mut rewriter = Rewriter { memo: BTreeMap::new() };
    let mut parts: BTreeMap<u32, BracketPoly> = BTreeMap::new();
    for (w, c) in r.terms() {
        let symbols: Vec<Symbol> = w
            .letters()
            .iter()
            .map(|&l| if l == d { Symbol::Distinguished } else { Symbol::Bracket(BracketLetter { index: l, order: 1 }) })
            .collect();
        let one = c.field().one();
        for (u, a) in rewriter.normal_form(&symbols, &one) {
            let s = u.iter().take_while(|x| **x == Symbol::Distinguished).count();
            let brackets = u[s..]
                .iter()
                .map(|x| match x {
                    Symbol::Bracket(b) => *b,
                    Symbol::Distinguished => unreachable!("normal words keep x_d in front"),
                })
                .collect();
            parts.entry(s as u32).or_default().add_term(brackets, c * &a);
        }
    }
    parts.retain(|_, p| !p.is_zero());
    Ok(BracketDecomposition { distinguished: d, degree, parts })
}

/// Decomposes `r` and checks that expansion reproduces it exactly.
pub fn decompose_verified(gens: &GeneratorSet, r: &NcPoly, d: usize, field: FieldSpec) -> Result<BracketDecomposition> {
    let dec = bracket_decompose(gens, r, d)?;
    let back = dec.expand(gens, field)?;
    assert_eq!(&back, r, "bracket decomposition failed to round-trip");
    Ok(dec)
}
