//! The group ring Z\[Lambda\] and the Demazure calculus.
//!
//! A weight polynomial is a finitely supported integer function on the
//! weight lattice, stored sparsely with terms in (height, lex) order.  The
//! Demazure operator is applied monomial by monomial through its closed
//! form, so every computation stays in exact integer arithmetic; the
//! divided-difference quotient definition is kept to the test suite as an
//! independent oracle.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::rootdata::{RootDatum, Weight};
use crate::weyl::{longest_element, WeylElement};

/// An element of Z\[Lambda\]: a finite map from weights to nonzero integers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightPolynomial {
    terms: BTreeMap<Weight, i64>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        WeightPolynomial {
            terms: BTreeMap::new(),
        }
    }

    /// The monomial `c * e^w`.
    pub fn monomial(w: Weight, c: i64) -> Self {
        let mut p = WeightPolynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// The term with the (height, lex)-largest weight.
    pub fn leading_term(&self) -> Option<(&Weight, i64)> {
        self.terms.last_key_value().map(|(w, &c)| (w, c))
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let nv = *o.get() + c;
                if nv == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = nv;
                }
            }
        }
    }

    pub fn add(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> WeightPolynomial {
        if k == 0 {
            return WeightPolynomial::zero();
        }
        WeightPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Product in the group ring: `e^a * e^b = e^{a+b}`.
    pub fn mul(&self, other: &WeightPolynomial) -> WeightPolynomial {
        let mut out = WeightPolynomial::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.add(b), ca * cb);
            }
        }
        out
    }

    /// Push every weight through a lattice map, summing collisions.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> WeightPolynomial {
        let mut out = WeightPolynomial::zero();
        for (w, c) in self.terms() {
            out.add_term(f(w), c);
        }
        out
    }

    pub fn apply_matrix(&self, m: &IntMatrix) -> WeightPolynomial {
        self.map_weights(|w| Weight::new(m.apply(&w.coords)))
    }

    /// Sum of all coefficients (the dimension, for a character).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().map(|&c| BigInt::from(c)).sum()
    }
}

impl Serialize for WeightPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            weight: &'a Weight,
            coeff: i64,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in self.terms() {
            seq.serialize_element(&Term {
                weight: w,
                coeff: c,
            })?;
        }
        seq.end()
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if c < 0 {
                write!(f, "- ")?;
            } else if k > 0 {
                write!(f, "+ ")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "e{w}")?;
        }
        Ok(())
    }
}

/// The Demazure operator for a simple reflection, term by term:
/// with `m = <w, alpha_i^vee>`,
///
/// ```text
///   m >= 0:  e^w + e^{w - a_i} + ... + e^{s_i w}
///   m = -1:  0
///   m <= -2: -(e^{w + a_i} + ... + e^{s_i w - a_i})
/// ```
pub fn demazure_simple(datum: &RootDatum, f: &WeightPolynomial, i: usize) -> WeightPolynomial {
    assert!(i < datum.rank(), "simple index out of range");
    let mut out = WeightPolynomial::zero();
    for (w, c) in f.terms() {
        let m = datum.pairing(w, i);
        if m >= 0 {
            for k in 0..=m {
                let mut coords = w.coords.clone();
                coords[i] -= k;
                out.add_term(Weight::new(coords), c);
            }
        } else {
            for k in 1..=(-m - 1) {
                let mut coords = w.coords.clone();
                coords[i] += k;
                out.add_term(Weight::new(coords), -c);
            }
        }
    }
    out
}

/// Composition of Demazure operators along a word (0-based indices): the
/// last letter acts first, so for a reduced word of `w` the result is the
/// operator of `w` and contains the extremal weight `w(lambda)` when applied
/// to `e^lambda`.
pub fn demazure_word(datum: &RootDatum, f: &WeightPolynomial, word: &[usize]) -> WeightPolynomial {
    let mut cur = f.clone();
    for &i in word.iter().rev() {
        cur = demazure_simple(datum, &cur, i);
    }
    cur
}

fn demazure_element(datum: &RootDatum, f: &WeightPolynomial, w: &WeylElement) -> WeightPolynomial {
    let word: Vec<usize> = w.word().iter().map(|&i| i as usize).collect();
    demazure_word(datum, f, &word)
}

/// The Weyl character of the irreducible with highest weight `lambda`, via
/// the Demazure operator of the longest element.
pub fn weyl_character(datum: &RootDatum, lambda: &Weight) -> Result<WeightPolynomial> {
    datum.check_dominant(lambda)?;
    let w0 = longest_element(datum);
    Ok(demazure_element(
        datum,
        &WeightPolynomial::monomial(lambda.clone(), 1),
        &w0,
    ))
}

/// The Demazure character `D_w e^lambda` (the character of the dual Joseph
/// module of `w` at a dominant weight).
pub fn joseph_character(
    datum: &RootDatum,
    w: &WeylElement,
    lambda: &Weight,
) -> Result<WeightPolynomial> {
    w.check_datum(datum)?;
    datum.check_dominant(lambda)?;
    Ok(demazure_element(
        datum,
        &WeightPolynomial::monomial(lambda.clone(), 1),
        w,
    ))
}
