//! Weyl groups as groups of lattice automorphisms.
//!
//! Elements are integer matrices acting on the weight lattice in simple-root
//! coordinates.  Each element caches its length and one canonical reduced
//! word, obtained by greedy descent: repeatedly strip the smallest simple
//! index `i` with `w(alpha_i)` negative.  The same canonical word drives the
//! subword criterion for the Bruhat order and every serialization, so all
//! outputs are deterministic.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::folding::InvolutionDatum;
use crate::matrix::IntMatrix;
use crate::rootdata::{RootDatum, Weight};

/// Default cap on the order of an enumerated Weyl group.
pub const DEFAULT_MAX_GROUP: usize = 1_000_000;

/// Replace `m` by `m * s_i` (right multiplication by a simple reflection):
/// column `j` becomes `col_j - a[i][j] * col_i`.
fn right_mul_simple(m: &mut IntMatrix, cartan: &IntMatrix, i: usize) {
    let n = m.rows();
    let col_i: Vec<i64> = (0..n).map(|r| m.get(r, i)).collect();
    for j in 0..n {
        let a = cartan.get(i, j);
        if a == 0 {
            continue;
        }
        for r in 0..n {
            m.set(r, j, m.get(r, j) - a * col_i[r]);
        }
    }
}

/// Is `m(alpha_i)` a negative root?  Root vectors have uniform coordinate
/// sign, so the first nonzero entry of column `i` decides.
fn column_is_negative(m: &IntMatrix, i: usize) -> bool {
    for r in 0..m.rows() {
        let v = m.get(r, i);
        if v != 0 {
            return v < 0;
        }
    }
    false
}

/// Canonical reduced word of the automorphism `m` by greedy descent.
fn greedy_word(cartan: &IntMatrix, m: &IntMatrix) -> Vec<u8> {
    let n = m.rows();
    let mut cur = m.clone();
    let mut rev = Vec::new();
    loop {
        let Some(i) = (0..n).find(|&i| column_is_negative(&cur, i)) else {
            break;
        };
        rev.push(i as u8);
        right_mul_simple(&mut cur, cartan, i);
    }
    debug_assert!(
        cur.is_identity(),
        "matrix does not define a Weyl group element"
    );
    rev.reverse();
    rev
}

/// One element of a Weyl group: a lattice automorphism together with its
/// cached length and canonical reduced word (0-based simple indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: IntMatrix,
    length: usize,
    word: Vec<u8>,
    datum_id: u64,
}

impl WeylElement {
    pub fn identity(datum: &RootDatum) -> Self {
        WeylElement {
            matrix: IntMatrix::identity(datum.rank()),
            length: 0,
            word: Vec::new(),
            datum_id: datum.id(),
        }
    }

    /// Element with the given word (0-based indices); the cached word is
    /// re-canonicalised, so the input need not be reduced.
    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Self {
        let mut m = IntMatrix::identity(datum.rank());
        for &i in word {
            assert!(i < datum.rank(), "simple index out of range");
            right_mul_simple(&mut m, datum.cartan(), i);
        }
        Self::from_matrix(datum, m)
    }

    pub(crate) fn from_matrix(datum: &RootDatum, matrix: IntMatrix) -> Self {
        let word = greedy_word(datum.cartan(), &matrix);
        WeylElement {
            length: word.len(),
            word,
            matrix,
            datum_id: datum.id(),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Canonical reduced word, 0-based.
    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Canonical reduced word with 1-based indices, the external format.
    pub fn word_1based(&self) -> Vec<usize> {
        self.word.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::new(self.matrix.apply(&w.coords))
    }

    pub fn multiply(&self, datum: &RootDatum, other: &WeylElement) -> Result<WeylElement> {
        self.check_datum(datum)?;
        other.check_datum(datum)?;
        Ok(WeylElement::from_matrix(
            datum,
            self.matrix.mul(&other.matrix),
        ))
    }

    pub fn inverse(&self, datum: &RootDatum) -> Result<WeylElement> {
        self.check_datum(datum)?;
        let mut m = IntMatrix::identity(datum.rank());
        for &i in self.word.iter().rev() {
            right_mul_simple(&mut m, datum.cartan(), i as usize);
        }
        Ok(WeylElement::from_matrix(datum, m))
    }

    pub(crate) fn check_datum(&self, datum: &RootDatum) -> Result<()> {
        if self.datum_id != datum.id() {
            return Err(Error::DatumMismatch);
        }
        Ok(())
    }
}

/// A fully enumerated Weyl group with multiplication tables.
///
/// Elements are indexed in a canonical order: by length, then
/// lexicographically by canonical reduced word.  Index 0 is the identity and
/// the last index is the longest element.
pub struct WeylGroup {
    datum_id: u64,
    matrices: Vec<IntMatrix>,
    words: Vec<Vec<u8>>,
    right: Vec<u32>, // right[e * rank + i] = index of elements[e] * s_i
    inverse: Vec<u32>,
    index: HashMap<IntMatrix, u32>,
    rank: usize,
}

/// Enumerate the full Weyl group of a datum by breadth-first closure under
/// right multiplication by simple reflections.
pub fn enumerate(datum: &RootDatum, max: usize) -> Result<WeylGroup> {
    let n = datum.rank();
    let cartan = datum.cartan().clone();
    let mut index: HashMap<IntMatrix, u32> = HashMap::new();
    let mut mats: Vec<IntMatrix> = vec![IntMatrix::identity(n)];
    index.insert(mats[0].clone(), 0);
    let mut head = 0;
    while head < mats.len() {
        let cur = mats[head].clone();
        head += 1;
        for i in 0..n {
            let mut m2 = cur.clone();
            right_mul_simple(&mut m2, &cartan, i);
            if !index.contains_key(&m2) {
                if mats.len() >= max {
                    return Err(Error::GroupTooLarge(max));
                }
                index.insert(m2.clone(), mats.len() as u32);
                mats.push(m2);
            }
        }
    }

    // canonical order: (length, word)
    let words: Vec<Vec<u8>> = mats.iter().map(|m| greedy_word(&cartan, m)).collect();
    let mut order: Vec<usize> = (0..mats.len()).collect();
    order.sort_by(|&a, &b| (words[a].len(), &words[a]).cmp(&(words[b].len(), &words[b])));
    let matrices: Vec<IntMatrix> = order.iter().map(|&k| mats[k].clone()).collect();
    let words: Vec<Vec<u8>> = order.iter().map(|&k| words[k].clone()).collect();
    let mut index: HashMap<IntMatrix, u32> = HashMap::new();
    for (k, m) in matrices.iter().enumerate() {
        index.insert(m.clone(), k as u32);
    }

    let mut right = vec![0u32; matrices.len() * n];
    for (e, m) in matrices.iter().enumerate() {
        for i in 0..n {
            let mut m2 = m.clone();
            right_mul_simple(&mut m2, &cartan, i);
            right[e * n + i] = index[&m2];
        }
    }
    let mut inverse = vec![0u32; matrices.len()];
    for (e, w) in words.iter().enumerate() {
        let mut cur = 0u32;
        for &i in w.iter().rev() {
            cur = right[cur as usize * n + i as usize];
        }
        inverse[e] = cur;
    }

    Ok(WeylGroup {
        datum_id: datum.id(),
        matrices,
        words,
        right,
        inverse,
        index,
        rank: n,
    })
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains the identity
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn datum_id(&self) -> u64 {
        self.datum_id
    }

    pub fn identity_index(&self) -> u32 {
        0
    }

    pub fn longest_index(&self) -> u32 {
        (self.len() - 1) as u32
    }

    pub fn matrix(&self, e: u32) -> &IntMatrix {
        &self.matrices[e as usize]
    }

    pub fn word(&self, e: u32) -> &[u8] {
        &self.words[e as usize]
    }

    pub fn length(&self, e: u32) -> usize {
        self.words[e as usize].len()
    }

    pub fn right_mult(&self, e: u32, i: usize) -> u32 {
        self.right[e as usize * self.rank + i]
    }

    pub fn inverse_index(&self, e: u32) -> u32 {
        self.inverse[e as usize]
    }

    pub fn index_of_matrix(&self, m: &IntMatrix) -> Option<u32> {
        self.index.get(m).copied()
    }

    /// Index of the element spelled by a (not necessarily reduced) word.
    pub fn index_of_word(&self, word: &[u8]) -> u32 {
        let mut cur = 0u32;
        for &i in word {
            cur = self.right_mult(cur, i as usize);
        }
        cur
    }

    /// Product of two elements by walking the second word.
    pub fn compose(&self, a: u32, b: u32) -> u32 {
        let mut cur = a;
        for &i in &self.words[b as usize] {
            cur = self.right_mult(cur, i as usize);
        }
        cur
    }

    pub fn element(&self, e: u32) -> WeylElement {
        WeylElement {
            matrix: self.matrices[e as usize].clone(),
            length: self.words[e as usize].len(),
            word: self.words[e as usize].clone(),
            datum_id: self.datum_id,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.len() as u32).map(move |e| self.element(e))
    }

    /// Bruhat order via the subword criterion, evaluated by the standard
    /// right-to-left greedy scan along the canonical word of `w`.
    pub fn bruhat_leq_idx(&self, u: u32, w: u32) -> bool {
        let mut v = u;
        for &i in self.words[w as usize].iter().rev() {
            let vi = self.right_mult(v, i as usize);
            if self.length(vi) < self.length(v) {
                v = vi;
            }
        }
        v == 0
    }
}

/// The longest element, by greedy ascent from the identity.
pub fn longest_element(datum: &RootDatum) -> WeylElement {
    let n = datum.rank();
    let mut m = IntMatrix::identity(n);
    loop {
        let Some(i) = (0..n).find(|&i| !column_is_negative(&m, i)) else {
            break;
        };
        right_mul_simple(&mut m, datum.cartan(), i);
    }
    WeylElement::from_matrix(datum, m)
}

/// Bruhat order on elements (subword criterion along the canonical cached
/// word of `w`).
pub fn bruhat_leq(datum: &RootDatum, u: &WeylElement, w: &WeylElement) -> Result<bool> {
    u.check_datum(datum)?;
    w.check_datum(datum)?;
    let mut v = u.matrix().clone();
    let mut vlen = u.length();
    for &i in w.word().iter().rev() {
        if column_is_negative(&v, i as usize) {
            right_mul_simple(&mut v, datum.cartan(), i as usize);
            vlen -= 1;
        }
    }
    Ok(vlen == 0)
}

/// The subgroup generated by the reflections in the given roots (the set
/// must be closed under negation; each reflection is used for both signs).
pub fn reflection_subgroup(
    datum: &RootDatum,
    roots: &[Weight],
    max: usize,
) -> Result<Vec<WeylElement>> {
    let mut gens: Vec<IntMatrix> = Vec::new();
    for r in roots {
        let m = datum
            .reflection(r)
            .unwrap_or_else(|| panic!("{r} is not a root of {}", datum.type_label()));
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    let mut seen: HashMap<IntMatrix, ()> = HashMap::new();
    let mut queue = vec![IntMatrix::identity(datum.rank())];
    seen.insert(queue[0].clone(), ());
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for g in &gens {
            let m2 = cur.mul(g);
            if !seen.contains_key(&m2) {
                if queue.len() >= max {
                    return Err(Error::GroupTooLarge(max));
                }
                seen.insert(m2.clone(), ());
                queue.push(m2);
            }
        }
    }
    let mut out: Vec<WeylElement> = queue
        .into_iter()
        .map(|m| WeylElement::from_matrix(datum, m))
        .collect();
    out.sort_by(|a, b| (a.length(), a.word()).cmp(&(b.length(), b.word())));
    Ok(out)
}

/// The fixed subgroup `{ w : theta w theta = w }` of a diagram involution,
/// by filtering the full enumeration.
pub fn fixed_subgroup(
    datum: &RootDatum,
    theta: &InvolutionDatum,
    max: usize,
) -> Result<Vec<WeylElement>> {
    let group = enumerate(datum, max)?;
    Ok(fixed_subgroup_indices(&group, theta)
        .into_iter()
        .map(|e| group.element(e))
        .collect())
}

/// Indices of the theta-fixed elements inside an enumerated group.
pub fn fixed_subgroup_indices(group: &WeylGroup, theta: &InvolutionDatum) -> Vec<u32> {
    let t = theta.theta();
    (0..group.len() as u32)
        .filter(|&e| {
            let m = group.matrix(e);
            t.mul(m).mul(t) == *m
        })
        .collect()
}

/// Conjugate of an element by theta, i.e. the matrix `theta w theta`.
pub fn theta_twist(group: &WeylGroup, theta: &InvolutionDatum, e: u32) -> u32 {
    let t = theta.theta();
    let m = t.mul(group.matrix(e)).mul(t);
    group
        .index_of_matrix(&m)
        .expect("theta twist stays in the group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_datum;

    fn group(label: &str) -> (RootDatum, WeylGroup) {
        let d = build_datum(label).unwrap();
        let g = enumerate(&d, DEFAULT_MAX_GROUP).unwrap();
        (d, g)
    }

    // classical Weyl group orders
    #[test]
    fn enumeration_orders() {
        for (label, order) in [
            ("A1", 2),
            ("A2", 6),
            ("A3", 24),
            ("B2", 8),
            ("B3", 48),
            ("C3", 48),
            ("D4", 192),
            ("G2", 12),
            ("F4", 1152),
            ("A1xA1", 4),
            ("A1xA2", 12),
        ] {
            assert_eq!(group(label).1.len(), order, "{label}");
        }
    }

    #[test]
    fn enumeration_respects_bound() {
        let d = build_datum("A3").unwrap();
        assert!(matches!(enumerate(&d, 10), Err(Error::GroupTooLarge(10))));
    }

    #[test]
    fn canonical_order_starts_at_identity() {
        let (_, g) = group("B2");
        assert_eq!(g.length(0), 0);
        assert_eq!(g.length(g.longest_index()), 4);
        for e in 1..g.len() as u32 {
            let a = (g.length(e - 1), g.word(e - 1).to_vec());
            let b = (g.length(e), g.word(e).to_vec());
            assert!(a < b);
        }
    }

    #[test]
    fn longest_element_properties() {
        for (label, len) in [("A1", 1), ("A2", 3), ("B2", 4), ("D4", 12), ("G2", 6)] {
            let d = build_datum(label).unwrap();
            let w0 = longest_element(&d);
            assert_eq!(w0.length(), len, "{label}");
            assert_eq!(w0.length(), d.num_positive_roots());
            let sq = w0.multiply(&d, &w0).unwrap();
            assert!(sq.is_identity());
            for r in d.positive_roots() {
                assert!(w0.apply(r).height() < 0);
            }
        }
    }

    #[test]
    fn words_are_reduced_and_multiply_back() {
        let (d, g) = group("B3");
        for e in 0..g.len() as u32 {
            let el = g.element(e);
            let rebuilt = WeylElement::from_word(
                &d,
                &el.word().iter().map(|&i| i as usize).collect::<Vec<_>>(),
            );
            assert_eq!(rebuilt.matrix(), el.matrix());
            assert_eq!(rebuilt.length(), el.length());
            // length equals the number of positive roots sent negative
            let inv = d
                .positive_roots()
                .iter()
                .filter(|r| el.apply(r).height() < 0)
                .count();
            assert_eq!(inv, el.length());
        }
    }

    #[test]
    fn length_changes_by_one_under_simple_mult() {
        let (_, g) = group("A3");
        for e in 0..g.len() as u32 {
            for i in 0..3 {
                let f = g.right_mult(e, i);
                let diff = g.length(f) as i64 - g.length(e) as i64;
                assert!(diff == 1 || diff == -1);
                // ascent iff the image of alpha_i is positive
                let positive = !column_is_negative(g.matrix(e), i);
                assert_eq!(diff == 1, positive);
            }
        }
    }

    /// Independent Bruhat oracle: enumerate all subwords of a reduced word.
    fn bruhat_oracle(d: &RootDatum, u: &WeylElement, word: &[u8]) -> bool {
        let k = word.len();
        for mask in 0..(1u64 << k) {
            let sub: Vec<usize> = (0..k)
                .filter(|&j| mask >> j & 1 == 1)
                .map(|j| word[j] as usize)
                .collect();
            if WeylElement::from_word(d, &sub).matrix() == u.matrix() {
                return true;
            }
        }
        false
    }

    /// A second reduced word for w: the greedy descent word with the
    /// *largest* valid index chosen at each step.
    fn alternate_word(d: &RootDatum, w: &WeylElement) -> Vec<u8> {
        let mut cur = w.matrix().clone();
        let mut rev = Vec::new();
        loop {
            let Some(i) = (0..d.rank()).rev().find(|&i| column_is_negative(&cur, i)) else {
                break;
            };
            rev.push(i as u8);
            right_mul_simple(&mut cur, d.cartan(), i);
        }
        rev.reverse();
        rev
    }

    #[test]
    fn bruhat_examples() {
        let (d, g) = group("A2");
        let e = WeylElement::identity(&d);
        let s1 = WeylElement::from_word(&d, &[0]);
        let s2 = WeylElement::from_word(&d, &[1]);
        let s1s2 = WeylElement::from_word(&d, &[0, 1]);
        for el in g.elements() {
            assert!(bruhat_leq(&d, &e, &el).unwrap());
        }
        assert!(bruhat_leq(&d, &s1, &s1s2).unwrap());
        assert!(!bruhat_leq(&d, &s1, &s2).unwrap());
    }

    #[test]
    fn bruhat_matches_subword_oracle_on_all_pairs() {
        for label in ["A3", "B2"] {
            let (d, g) = group(label);
            for u in g.elements() {
                for w in g.elements() {
                    let got = bruhat_leq(&d, &u, &w).unwrap();
                    assert_eq!(
                        got,
                        bruhat_oracle(&d, &u, w.word()),
                        "{label}: {u:?} vs {w:?}"
                    );
                    // independent of the cached reduced word
                    assert_eq!(got, bruhat_oracle(&d, &u, &alternate_word(&d, &w)));
                }
            }
        }
    }

    #[test]
    fn bruhat_is_a_partial_order_with_length_monotonicity() {
        let (_, g) = group("A3");
        let n = g.len() as u32;
        for u in 0..n {
            assert!(g.bruhat_leq_idx(u, u));
            for w in 0..n {
                if g.bruhat_leq_idx(u, w) {
                    assert!(g.length(u) <= g.length(w));
                    if g.bruhat_leq_idx(w, u) {
                        assert_eq!(u, w);
                    }
                }
            }
        }
    }

    #[test]
    fn datum_mismatch_detected() {
        let d1 = build_datum("A2").unwrap();
        let d2 = build_datum("B2").unwrap();
        let u = WeylElement::identity(&d1);
        let w = WeylElement::identity(&d2);
        assert!(matches!(bruhat_leq(&d1, &u, &w), Err(Error::DatumMismatch)));
    }

    #[test]
    fn empty_reflection_subgroup_is_trivial() {
        let d = build_datum("A3").unwrap();
        let sub = reflection_subgroup(&d, &[], DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(sub.len(), 1);
        assert!(sub[0].is_identity());
    }

    #[test]
    fn reflection_subgroup_of_theta_fixed_e6_roots() {
        // the theta-fixed subsystem of the E6 flip is a D4, so the subgroup
        // generated by its reflections has order 192 (no full enumeration
        // of W(E6) is needed for this)
        let s = crate::folding::build_space("fold:E6").unwrap();
        let fixed = crate::folding::theta_fixed_roots(s.datum(), s.theta());
        assert_eq!(fixed.len(), 24);
        let sub = reflection_subgroup(s.datum(), &fixed, DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(sub.len(), 192);
    }

    #[test]
    fn reflection_subgroup_of_theta_fixed_a3_roots() {
        // the theta-fixed roots of the A3 flip: +-alpha_2 and the highest root
        let d = build_datum("A3").unwrap();
        let fixed = vec![
            Weight::new(vec![0, 1, 0]),
            Weight::new(vec![0, -1, 0]),
            Weight::new(vec![1, 1, 1]),
            Weight::new(vec![-1, -1, -1]),
        ];
        let sub = reflection_subgroup(&d, &fixed, DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(sub.len(), 4);
    }

    #[test]
    fn inverse_and_compose_tables() {
        let (d, g) = group("B2");
        for e in 0..g.len() as u32 {
            let el = g.element(e);
            let inv = g.element(g.inverse_index(e));
            assert!(el.multiply(&d, &inv).unwrap().is_identity());
            assert_eq!(g.compose(e, g.inverse_index(e)), 0);
        }
    }
}
