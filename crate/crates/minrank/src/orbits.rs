//! B-orbits of the symmetric space, combinatorially.
//!
//! The orbits are the cosets of the theta-fixed subgroup in the Weyl group.
//! Each coset carries a twisted involution `x = w theta(w)^{-1}`, which in
//! the minimal-rank regime peels as `x = s_1 ... s_h theta(s_h) ... theta(s_1)`
//! with `l(x) = 2h`; the peeled prefix `s_1 ... s_h` is the canonical coset
//! representative.  The closure order is Bruhat-interval membership of coset
//! representatives.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::folding::InvolutionDatum;
use crate::matrix::IntMatrix;
use crate::report::Report;
use crate::rootdata::RootDatum;
use crate::weyl::{self, WeylElement, WeylGroup};

/// Default cap on the group order for the cubic generic-position search
/// (covers every simple type of rank at most 4).
pub const DEFAULT_MAX_BRUTE_FORCE: usize = 1152;

/// One B-orbit: a coset of the fixed subgroup with its twisted involution
/// and peeled canonical word.
#[derive(Debug, Clone)]
pub struct OrbitRecord {
    pub coset_id: usize,
    /// Canonical reduced words of all coset members, sorted by (length, word).
    pub members: Vec<Vec<u8>>,
    /// The twisted involution of the coset.
    pub x: WeylElement,
    /// Half the length of `x`.
    pub h: usize,
    /// The peeled word `s_1 ... s_h` (0-based indices).
    pub canonical_word: Vec<u8>,
}

impl OrbitRecord {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn canonical_word_1based(&self) -> Vec<usize> {
        self.canonical_word
            .iter()
            .map(|&i| i as usize + 1)
            .collect()
    }

    /// The canonical coset representative, the product of the peeled word.
    pub fn representative(&self, datum: &RootDatum) -> WeylElement {
        let word: Vec<usize> = self.canonical_word.iter().map(|&i| i as usize).collect();
        WeylElement::from_word(datum, &word)
    }

    pub fn contains_word(&self, word: &[u8]) -> bool {
        self.members
            .binary_search_by(|m| (m.len(), m.as_slice()).cmp(&(word.len(), word)))
            .is_ok()
    }
}

impl Serialize for OrbitRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("OrbitRecord", 5)?;
        s.serialize_field("coset_id", &self.coset_id)?;
        s.serialize_field("h", &self.h)?;
        s.serialize_field("canonical_word", &self.canonical_word_1based())?;
        s.serialize_field("x_word", &self.x.word_1based())?;
        s.serialize_field("size", &self.size())?;
        s.end()
    }
}

/// The twisted involution `x = w theta(w)^{-1}`.
pub fn twisted_involution(
    datum: &RootDatum,
    w: &WeylElement,
    theta: &InvolutionDatum,
) -> Result<WeylElement> {
    w.check_datum(datum)?;
    let t = theta.theta();
    let w_inv = w.inverse(datum)?;
    let x = w.matrix().mul(t).mul(w_inv.matrix()).mul(t);
    let x = WeylElement::from_matrix(datum, x);
    debug_assert_eq!(
        t.mul(x.matrix()).mul(t),
        *x.inverse(datum)?.matrix(),
        "theta(x) must be x^{{-1}}"
    );
    Ok(x)
}

fn matrix_length(datum: &RootDatum, m: &IntMatrix) -> usize {
    datum
        .positive_roots()
        .iter()
        .filter(|r| {
            let img = m.apply(&r.coords);
            img.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
        })
        .count()
}

/// Peel a twisted involution: repeatedly strip a simple reflection `s` with
/// `l(s x theta(s)) = l(x) - 2`, smallest index first.  Returns the word
/// `[s_1, ..., s_h]` (0-based) with
/// `x = s_1 ... s_h theta(s_h) ... theta(s_1)`.
pub fn peel(datum: &RootDatum, x: &WeylElement, theta: &InvolutionDatum) -> Result<Vec<u8>> {
    x.check_datum(datum)?;
    let n = datum.rank();
    let simples: Vec<IntMatrix> = (0..n).map(|i| datum.simple_reflection(i)).collect();
    let mut cur = x.matrix().clone();
    let mut len = matrix_length(datum, &cur);
    let mut word = Vec::new();
    while !cur.is_identity() {
        let mut found = None;
        for i in 0..n {
            let cand = simples[i].mul(&cur).mul(&simples[theta.sigma()[i]]);
            if cand != cur && matrix_length(datum, &cand) + 2 == len {
                found = Some((i, cand));
                break;
            }
        }
        let Some((i, cand)) = found else {
            return Err(Error::RealOrNoncompactStep { length: len });
        };
        word.push(i as u8);
        cur = cand;
        len -= 2;
    }
    debug_assert_eq!(2 * word.len(), x.length());
    Ok(word)
}

/// Enumerate the B-orbits of the space `(datum, theta)`.
pub fn enumerate_orbits(
    datum: &RootDatum,
    theta: &InvolutionDatum,
    max: usize,
) -> Result<Vec<OrbitRecord>> {
    let group = weyl::enumerate(datum, max)?;
    enumerate_orbits_with(datum, &group, theta)
}

/// Enumeration against a pre-built group table.
pub fn enumerate_orbits_with(
    datum: &RootDatum,
    group: &WeylGroup,
    theta: &InvolutionDatum,
) -> Result<Vec<OrbitRecord>> {
    let fixed = weyl::fixed_subgroup_indices(group, theta);
    let n = group.len();
    const UNSET: u32 = u32::MAX;
    let mut coset_of = vec![UNSET; n];
    let mut reps: Vec<u32> = Vec::new();
    for e in 0..n as u32 {
        if coset_of[e as usize] != UNSET {
            continue;
        }
        let cid = reps.len() as u32;
        reps.push(e);
        for &v in &fixed {
            let member = group.compose(e, v);
            debug_assert_eq!(coset_of[member as usize], UNSET, "cosets must not overlap");
            coset_of[member as usize] = cid;
        }
    }
    assert!(
        coset_of.iter().all(|&c| c != UNSET),
        "cosets must cover the group"
    );
    assert_eq!(
        reps.len() * fixed.len(),
        n,
        "all cosets have the order of the fixed subgroup"
    );

    let mut records = Vec::with_capacity(reps.len());
    for (cid, &rep) in reps.iter().enumerate() {
        let x = twisted_involution(datum, &group.element(rep), theta)?;
        let canonical_word = peel(datum, &x, theta)?;
        let h = canonical_word.len();
        let mut members: Vec<Vec<u8>> = (0..n as u32)
            .filter(|&e| coset_of[e as usize] == cid as u32)
            .map(|e| group.word(e).to_vec())
            .collect();
        members.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        records.push(OrbitRecord {
            coset_id: 0,
            members,
            x,
            h,
            canonical_word,
        });
    }
    records.sort_by(|a, b| {
        (a.h, &a.canonical_word, &a.members[0]).cmp(&(b.h, &b.canonical_word, &b.members[0]))
    });
    for (k, rec) in records.iter_mut().enumerate() {
        rec.coset_id = k;
    }
    debug_assert_eq!(records.iter().filter(|r| r.h == 0).count(), 1);
    Ok(records)
}

/// Closure order: `o_prime <= o` iff the Bruhat interval below the canonical
/// representative of `o` meets the coset of `o_prime`.
pub fn closure_leq(datum: &RootDatum, o_prime: &OrbitRecord, o: &OrbitRecord) -> bool {
    let w_o = o.representative(datum);
    o_prime.members.iter().any(|word| {
        let u =
            WeylElement::from_word(datum, &word.iter().map(|&i| i as usize).collect::<Vec<_>>());
        weyl::bruhat_leq(datum, &u, &w_o).unwrap()
    })
}

/// Full closure relation as a matrix, computed in one interval sweep per
/// orbit against the group table: `out[a][b]` iff orbit `a` <= orbit `b`.
pub fn closure_matrix(group: &WeylGroup, records: &[OrbitRecord]) -> Vec<Vec<bool>> {
    let mut coset_of = vec![usize::MAX; group.len()];
    for rec in records {
        for word in &rec.members {
            coset_of[group.index_of_word(word) as usize] = rec.coset_id;
        }
    }
    let mut out = vec![vec![false; records.len()]; records.len()];
    for rec in records {
        let w_o = group.index_of_word(&rec.canonical_word);
        for u in 0..group.len() as u32 {
            if group.bruhat_leq_idx(u, w_o) {
                out[coset_of[u as usize]][rec.coset_id] = true;
            }
        }
    }
    out
}

/// Check that no root is real for any orbit: `x(theta(alpha)) != -alpha` for
/// every twisted involution `x` and every root `alpha`.
pub fn no_real_roots_check(
    datum: &RootDatum,
    theta: &InvolutionDatum,
    max: usize,
) -> Result<Report> {
    let records = enumerate_orbits(datum, theta, max)?;
    Ok(no_real_roots_check_with(datum, theta, &records))
}

/// The same check against pre-enumerated orbits.
pub fn no_real_roots_check_with(
    datum: &RootDatum,
    theta: &InvolutionDatum,
    records: &[OrbitRecord],
) -> Report {
    let roots = datum.all_roots();
    let mut failures = Vec::new();
    for rec in records {
        for alpha in &roots {
            if rec.x.apply(&theta.apply(alpha)) == alpha.neg() {
                failures.push(format!("orbit {}, root {}", rec.coset_id, alpha));
            }
        }
    }
    let mut report = Report::new();
    let pass = failures.is_empty();
    let detail = if pass {
        format!(
            "{} orbits x {} roots, no real root",
            records.len(),
            roots.len()
        )
    } else {
        format!("real roots found: {}", failures.join("; "))
    };
    report.push("no_real_roots", pass, detail);
    report
}

/// Result of the brute-force generic-position computation in the Schubert
/// case: the set `M = { w : exists y' <= y with w y' <= z }`, its
/// deterministic maximal element, and whether `M` is the full lower Bruhat
/// interval below it.
#[derive(Debug, Clone)]
pub struct GenericPosition {
    pub w_max: WeylElement,
    pub is_lower_interval: bool,
    pub meet_set_size: usize,
}

impl Serialize for GenericPosition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("GenericPosition", 3)?;
        s.serialize_field("w_max", &self.w_max.word_1based())?;
        s.serialize_field("is_lower_interval", &self.is_lower_interval)?;
        s.serialize_field("meet_set_size", &self.meet_set_size)?;
        s.end()
    }
}

/// For Schubert varieties indexed by `y` and `z`, compute by brute force the
/// set of `w` whose translate of the one meets the other, its maximal
/// element, and the lower-interval property.
pub fn generic_position_schubert(
    datum: &RootDatum,
    y: &WeylElement,
    z: &WeylElement,
    max: usize,
) -> Result<GenericPosition> {
    y.check_datum(datum)?;
    z.check_datum(datum)?;
    let group = weyl::enumerate(datum, weyl::DEFAULT_MAX_GROUP)?;
    if group.len() > max {
        return Err(Error::BruteForceTooLarge {
            order: group.len(),
            max,
        });
    }
    let y_idx = group
        .index_of_matrix(y.matrix())
        .expect("element of the datum's group");
    let z_idx = group
        .index_of_matrix(z.matrix())
        .expect("element of the datum's group");
    let below_y: Vec<u32> = (0..group.len() as u32)
        .filter(|&u| group.bruhat_leq_idx(u, y_idx))
        .collect();
    let in_m: Vec<bool> = (0..group.len() as u32)
        .map(|w| {
            below_y
                .iter()
                .any(|&yp| group.bruhat_leq_idx(group.compose(w, yp), z_idx))
        })
        .collect();
    let members: Vec<u32> = (0..group.len() as u32)
        .filter(|&w| in_m[w as usize])
        .collect();
    // maximal elements of M, then the deterministic (length, word)-largest
    let maximal: Vec<u32> = members
        .iter()
        .copied()
        .filter(|&w| {
            !members
                .iter()
                .any(|&v| v != w && group.bruhat_leq_idx(w, v))
        })
        .collect();
    let &w_max = maximal
        .iter()
        .max_by_key(|&&w| (group.length(w), group.word(w).to_vec()))
        .expect("meet set contains the identity");
    let is_lower_interval = maximal.len() == 1
        && (0..group.len() as u32).all(|v| in_m[v as usize] == group.bruhat_leq_idx(v, w_max));
    Ok(GenericPosition {
        w_max: group.element(w_max),
        is_lower_interval,
        meet_set_size: members.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::folding::build_space;
    use crate::rootdata::build_datum;
    use crate::weyl::DEFAULT_MAX_GROUP;

    fn orbits(spec: &str) -> (crate::folding::Space, Vec<OrbitRecord>) {
        let s = build_space(spec).unwrap();
        let recs = enumerate_orbits(s.datum(), s.theta(), DEFAULT_MAX_GROUP).unwrap();
        (s, recs)
    }

    #[test]
    fn group_a1_has_two_orbits() {
        let (_, recs) = orbits("group:A1");
        assert_eq!(recs.len(), 2);
        let hs: Vec<usize> = recs.iter().map(|r| r.h).collect();
        assert_eq!(hs, vec![0, 1]);
        // the closed orbit is the coset of the identity
        assert_eq!(recs[0].members[0], Vec::<u8>::new());
        // the open orbit peels to the left-factor reflection
        assert_eq!(recs[1].canonical_word, vec![0]);
        assert_eq!(recs[1].x.length(), 2);
    }

    #[test]
    fn fold_a3_has_three_orbits_totally_ordered() {
        let (s, recs) = orbits("fold:A3");
        assert_eq!(recs.len(), 3);
        assert_eq!(recs.iter().map(|r| r.h).collect::<Vec<_>>(), vec![0, 1, 2]);
        for rec in &recs {
            assert_eq!(rec.size(), 8);
        }
        for a in &recs {
            for b in &recs {
                assert_eq!(closure_leq(s.datum(), a, b), a.h <= b.h);
            }
        }
    }

    #[test]
    fn twisted_involution_examples() {
        let s = build_space("group:A1").unwrap();
        let e = WeylElement::identity(s.datum());
        assert!(twisted_involution(s.datum(), &e, s.theta())
            .unwrap()
            .is_identity());
        // w = (s, e): x = (s, s) of length 2
        let w = WeylElement::from_word(s.datum(), &[0]);
        let x = twisted_involution(s.datum(), &w, s.theta()).unwrap();
        assert_eq!(x.length(), 2);
        assert_eq!(
            x.matrix(),
            WeylElement::from_word(s.datum(), &[0, 1]).matrix()
        );

        let a3 = build_space("fold:A3").unwrap();
        let w = WeylElement::from_word(a3.datum(), &[1, 0]); // s2 s1
        let x = twisted_involution(a3.datum(), &w, a3.theta()).unwrap();
        assert_eq!(x.length(), 4);
        assert_eq!(
            x.matrix(),
            WeylElement::from_word(a3.datum(), &[1, 0, 2, 1]).matrix()
        );
        // theta(x) = x^{-1}
        let t = a3.theta().theta();
        assert_eq!(
            t.mul(x.matrix()).mul(t),
            *x.inverse(a3.datum()).unwrap().matrix()
        );
    }

    #[test]
    fn peeling_is_sound() {
        // peel(e) = [] and full reconstruction everywhere on small spaces
        for spec in [
            "group:A1",
            "group:A2",
            "fold:A3",
            "group:B2",
            "group:A1*fold:A3",
        ] {
            let (s, recs) = orbits(spec);
            for rec in &recs {
                assert_eq!(2 * rec.h, rec.x.length(), "{spec}");
                // x = s_1 .. s_h theta(s_h) .. theta(s_1)
                let mut word: Vec<usize> = rec.canonical_word.iter().map(|&i| i as usize).collect();
                let tail: Vec<usize> = rec
                    .canonical_word
                    .iter()
                    .rev()
                    .map(|&i| s.theta().sigma()[i as usize])
                    .collect();
                word.extend(tail);
                let product = WeylElement::from_word(s.datum(), &word);
                assert_eq!(product.matrix(), rec.x.matrix(), "{spec}");
                // the representative lies in the coset and has length h
                let rep = rec.representative(s.datum());
                assert_eq!(rep.length(), rec.h, "{spec}");
                assert!(rec.contains_word(rep.word()), "{spec}");
            }
        }
    }

    #[test]
    fn fold_a3_peel_example() {
        let a3 = build_space("fold:A3").unwrap();
        let x = WeylElement::from_word(a3.datum(), &[1, 0, 2, 1]); // s2 s1 s3 s2
        let word = peel(a3.datum(), &x, a3.theta()).unwrap();
        assert_eq!(word, vec![1, 0]); // peel s2 first, then s1
    }

    #[test]
    fn distinct_cosets_have_distinct_twisted_involutions() {
        for spec in ["group:A2", "fold:A3", "fold:D4", "group:B2"] {
            let (s, recs) = orbits(spec);
            let mut xs: Vec<&IntMatrix> = recs.iter().map(|r| r.x.matrix()).collect();
            xs.sort();
            xs.dedup();
            assert_eq!(xs.len(), recs.len(), "{spec}");
            // and x is constant on each coset
            for rec in &recs {
                for word in &rec.members {
                    let w = WeylElement::from_word(
                        s.datum(),
                        &word.iter().map(|&i| i as usize).collect::<Vec<_>>(),
                    );
                    let x = twisted_involution(s.datum(), &w, s.theta()).unwrap();
                    assert_eq!(x.matrix(), rec.x.matrix(), "{spec}");
                }
            }
        }
    }

    #[test]
    fn group_case_closure_is_bruhat_order() {
        // for group:X the orbit poset is Bruhat order on W(X)
        let s = build_space("group:A2").unwrap();
        let d_k = build_datum("A2").unwrap();
        let g_k = weyl::enumerate(&d_k, DEFAULT_MAX_GROUP).unwrap();
        let recs = enumerate_orbits(s.datum(), s.theta(), DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(recs.len(), g_k.len());
        // match each orbit to the left-factor element of its representative
        let left_of = |rec: &OrbitRecord| {
            let word: Vec<usize> = rec
                .canonical_word
                .iter()
                .map(|&i| i as usize)
                .filter(|&i| i < 2)
                .collect();
            assert_eq!(
                word.len(),
                rec.canonical_word.len(),
                "representative is left-sided"
            );
            g_k.index_of_matrix(WeylElement::from_word(&d_k, &word).matrix())
                .unwrap()
        };
        for a in &recs {
            for b in &recs {
                assert_eq!(
                    closure_leq(s.datum(), a, b),
                    g_k.bruhat_leq_idx(left_of(a), left_of(b))
                );
            }
        }
    }

    #[test]
    fn closure_matrix_agrees_with_direct_closure() {
        let s = build_space("fold:D4").unwrap();
        let g = weyl::enumerate(s.datum(), DEFAULT_MAX_GROUP).unwrap();
        let recs = enumerate_orbits_with(s.datum(), &g, s.theta()).unwrap();
        let mat = closure_matrix(&g, &recs);
        for a in &recs {
            for b in &recs {
                assert_eq!(mat[a.coset_id][b.coset_id], closure_leq(s.datum(), a, b));
            }
        }
        // partial order with the closed orbit as unique minimum and h
        // strictly monotone
        let k = recs.len();
        for i in 0..k {
            assert!(mat[i][i]);
            assert!(mat[0][i]);
            for j in 0..k {
                if mat[i][j] && i != j {
                    assert!(recs[i].h < recs[j].h);
                    assert!(!mat[j][i]);
                    for l in 0..k {
                        if mat[j][l] {
                            assert!(mat[i][l]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn uncatalogued_involution_still_enumerates() {
        // The A2 flip folds onto an adjacent orbit (not minimal rank), yet
        // the orbit machinery itself runs: 3 cosets of {e, w0}, even-length
        // twisted involutions, and even the real-root check passes — which
        // is why passing these shadows is necessary but not sufficient.
        let d = build_datum("A2").unwrap();
        let theta = crate::folding::InvolutionDatum::new(&d, vec![1, 0]).unwrap();
        let recs = enumerate_orbits(&d, &theta, DEFAULT_MAX_GROUP).unwrap();
        assert_eq!(recs.len(), 3);
        assert_eq!(recs.iter().map(|r| r.h).collect::<Vec<_>>(), vec![0, 1, 1]);
        assert!(no_real_roots_check_with(&d, &theta, &recs).all_pass());
        // the two h = 1 orbits are incomparable under closure
        assert!(!closure_leq(&d, &recs[1], &recs[2]));
        assert!(!closure_leq(&d, &recs[2], &recs[1]));
    }

    #[test]
    fn group_case_open_orbit_carries_the_longest_element() {
        // for K x K / diag(K) the open orbit is the coset of (w0, e), whose
        // twisted involution is the longest element of the product group
        let s = build_space("group:A2").unwrap();
        let recs = enumerate_orbits(s.datum(), s.theta(), DEFAULT_MAX_GROUP).unwrap();
        let open = recs.iter().max_by_key(|r| r.h).unwrap();
        let w0 = crate::weyl::longest_element(s.datum());
        assert_eq!(open.x.matrix(), w0.matrix());
        assert_eq!(2 * open.h, w0.length());
    }

    #[test]
    fn no_real_roots_on_small_catalog() {
        for spec in ["group:A1", "fold:A3", "fold:D4", "group:G2"] {
            let s = build_space(spec).unwrap();
            let report = no_real_roots_check(s.datum(), s.theta(), DEFAULT_MAX_GROUP).unwrap();
            assert!(report.all_pass(), "{spec}");
        }
    }

    #[test]
    fn generic_position_trivial_cases() {
        let d = build_datum("A2").unwrap();
        let e = WeylElement::identity(&d);
        let w0 = weyl::longest_element(&d);
        let gp = generic_position_schubert(&d, &e, &e, DEFAULT_MAX_BRUTE_FORCE).unwrap();
        assert!(gp.w_max.is_identity());
        assert_eq!(gp.meet_set_size, 1);
        assert!(gp.is_lower_interval);
        let gp = generic_position_schubert(&d, &e, &w0, DEFAULT_MAX_BRUTE_FORCE).unwrap();
        assert_eq!(gp.w_max.matrix(), w0.matrix());
        assert_eq!(gp.meet_set_size, 6);
        assert!(gp.is_lower_interval);
    }

    #[test]
    fn generic_position_matches_triple_loop() {
        // independent cubic oracle on A2 for y = s1, z = s1 s2
        let d = build_datum("A2").unwrap();
        let g = weyl::enumerate(&d, DEFAULT_MAX_GROUP).unwrap();
        let y = WeylElement::from_word(&d, &[0]);
        let z = WeylElement::from_word(&d, &[0, 1]);
        let y_idx = g.index_of_matrix(y.matrix()).unwrap();
        let z_idx = g.index_of_matrix(z.matrix()).unwrap();
        let mut m_oracle = Vec::new();
        for w in 0..6u32 {
            let mut hit = false;
            for yp in 0..6u32 {
                if g.bruhat_leq_idx(yp, y_idx) && g.bruhat_leq_idx(g.compose(w, yp), z_idx) {
                    hit = true;
                }
            }
            if hit {
                m_oracle.push(w);
            }
        }
        let gp = generic_position_schubert(&d, &y, &z, DEFAULT_MAX_BRUTE_FORCE).unwrap();
        assert_eq!(gp.meet_set_size, m_oracle.len());
        assert!(gp.is_lower_interval);
        let w_max_idx = g.index_of_matrix(gp.w_max.matrix()).unwrap();
        assert!(m_oracle.iter().all(|&w| g.bruhat_leq_idx(w, w_max_idx)));
        assert!(m_oracle.contains(&w_max_idx));
    }

    #[test]
    fn brute_force_bound_respected() {
        let d = build_datum("A3").unwrap();
        let e = WeylElement::identity(&d);
        assert!(matches!(
            generic_position_schubert(&d, &e, &e, 10),
            Err(Error::BruteForceTooLarge { order: 24, max: 10 })
        ));
    }

    #[test]
    fn orbit_json_shape() {
        let (_, recs) = orbits("fold:A3");
        let v = serde_json::to_value(&recs).unwrap();
        assert_eq!(v[0]["coset_id"], 0);
        assert_eq!(v[0]["h"], 0);
        assert_eq!(v[1]["size"], 8);
        assert_eq!(v[2]["canonical_word"].as_array().unwrap().len(), 2);
    }
}
