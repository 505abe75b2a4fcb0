//! Diagram involutions and folding.
//!
//! An involution is stored in its standard-pair normal form: a permutation of
//! the simple roots inducing a lattice involution that preserves the Cartan
//! pairing (inner twists are not representable).  Folding identifies each
//! orbit of simple roots to one simple root of the fixed subgroup K; the
//! folded coroot of a two-element orbit is the sum of the two coroots.  The
//! restricted lattice is the quotient by the image of `theta - 1`, which is
//! free here, with the orbit classes as basis.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::report::Report;
use crate::rootdata::{build_datum, recognize_type, RootDatum, Weight};
use crate::weyl;

/// A lattice involution of a root datum given by a diagram symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionDatum {
    sigma: Vec<usize>,
    theta: IntMatrix,
}

impl InvolutionDatum {
    /// Build from a permutation of the simple roots (0-based).  Checks that
    /// the permutation is an involution and preserves the Cartan matrix.
    pub fn new(datum: &RootDatum, sigma: Vec<usize>) -> Result<Self> {
        let n = datum.rank();
        let bad = |detail: String| Error::UnsupportedSpace {
            spec: format!("involution {sigma:?}"),
            detail,
        };
        if sigma.len() != n || {
            let mut seen = vec![false; n];
            sigma
                .iter()
                .any(|&i| i >= n || std::mem::replace(&mut seen[i], true))
        } {
            return Err(bad("not a permutation of the simple roots".into()));
        }
        for i in 0..n {
            if sigma[sigma[i]] != i {
                return Err(bad("permutation is not an involution".into()));
            }
            for j in 0..n {
                if datum.cartan().get(sigma[i], sigma[j]) != datum.cartan().get(i, j) {
                    return Err(bad(format!(
                        "permutation does not preserve the Cartan pairing at ({i},{j})"
                    )));
                }
            }
        }
        let theta = IntMatrix::permutation(&sigma);
        Ok(InvolutionDatum { sigma, theta })
    }

    pub fn identity(datum: &RootDatum) -> Self {
        InvolutionDatum {
            sigma: (0..datum.rank()).collect(),
            theta: IntMatrix::identity(datum.rank()),
        }
    }

    pub fn rank(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn theta(&self) -> &IntMatrix {
        &self.theta
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::new(self.theta.apply(&w.coords))
    }

    /// Orbits of the permutation on simple indices, ordered by smallest
    /// member; two-element orbits are listed (min, max).
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for i in 0..self.sigma.len() {
            let j = self.sigma[i];
            if j == i {
                out.push(vec![i]);
            } else if i < j {
                out.push(vec![i, j]);
            }
        }
        out
    }
}

impl Serialize for InvolutionDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("InvolutionDatum", 1)?;
        let one_based: Vec<usize> = self.sigma.iter().map(|&i| i + 1).collect();
        s.serialize_field("sigma", &one_based)?;
        s.end()
    }
}

/// The folded root datum of the fixed subgroup, together with the
/// restriction map from the big lattice onto the quotient lattice.
#[derive(Debug, Clone)]
pub struct FoldedDatum {
    res_matrix: IntMatrix,
    datum_k: RootDatum,
    orbit_map: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl FoldedDatum {
    pub fn datum_k(&self) -> &RootDatum {
        &self.datum_k
    }

    pub fn rank_k(&self) -> usize {
        self.datum_k.rank()
    }

    pub fn res_matrix(&self) -> &IntMatrix {
        &self.res_matrix
    }

    /// Restriction of a weight to the folded lattice.
    pub fn res(&self, w: &Weight) -> Weight {
        Weight::new(self.res_matrix.apply(&w.coords))
    }

    /// For each simple index of G, the simple index of K it restricts to.
    pub fn orbit_map(&self) -> &[usize] {
        &self.orbit_map
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }
}

impl Serialize for FoldedDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("FoldedDatum", 3)?;
        s.serialize_field("datum_k", &self.datum_k)?;
        s.serialize_field("res_matrix", &self.res_matrix.row_vecs())?;
        let one_based: Vec<usize> = self.orbit_map.iter().map(|&i| i + 1).collect();
        s.serialize_field("orbit_map", &one_based)?;
        s.end()
    }
}

/// Fold a datum along an involution: one simple root of K per orbit of
/// simple roots of G, coroots added over each orbit.
pub fn fold(datum: &RootDatum, theta: &InvolutionDatum) -> Result<FoldedDatum> {
    let n = datum.rank();
    let orbits = theta.orbits();
    let m = orbits.len();
    for orbit in &orbits {
        if orbit.len() == 2 && datum.cartan().get(orbit[0], orbit[1]) != 0 {
            return Err(Error::AdjacentOrbit(orbit[0] + 1, orbit[1] + 1));
        }
    }
    let mut orbit_map = vec![0usize; n];
    for (o, orbit) in orbits.iter().enumerate() {
        for &i in orbit {
            orbit_map[i] = o;
        }
    }
    let mut res = IntMatrix::zero(m, n);
    for (i, &o) in orbit_map.iter().enumerate() {
        res.set(o, i, 1);
    }
    // folded Cartan matrix: row = summed coroot of an orbit, column = the
    // restriction of any representative of the other orbit
    let mut cartan_k = IntMatrix::zero(m, m);
    for (o, orbit) in orbits.iter().enumerate() {
        for (p, orbit2) in orbits.iter().enumerate() {
            let rep = orbit2[0];
            let v: i64 = orbit.iter().map(|&i| datum.cartan().get(i, rep)).sum();
            cartan_k.set(o, p, v);
        }
    }
    let label = recognize_type(&cartan_k);
    let datum_k = RootDatum::from_cartan(cartan_k, label.as_deref().unwrap_or("unrecognized"))?;

    let folded = FoldedDatum {
        res_matrix: res,
        datum_k,
        orbit_map,
        orbits,
    };

    // The restrictions of the roots of G must be exactly the roots of K;
    // this holds for every diagram involution without adjacent orbits.
    let mut restricted: Vec<Weight> = datum.all_roots().iter().map(|r| folded.res(r)).collect();
    restricted.sort();
    restricted.dedup();
    let mut roots_k = folded.datum_k.all_roots();
    roots_k.sort();
    assert_eq!(
        restricted, roots_k,
        "restrictions of roots do not match the folded root system"
    );

    Ok(folded)
}

/// The boundary-divisor count r (dimension of the (-1)-eigenspace of theta)
/// and the rank s of the fixed subgroup; `r + s` is the rank of G.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankPair {
    pub r: usize,
    pub s: usize,
}

pub fn rank_bookkeeping(datum: &RootDatum, theta: &InvolutionDatum) -> RankPair {
    let n = datum.rank();
    let plus = theta.theta().add(&IntMatrix::identity(n));
    let r = n - plus.rank();
    let s = theta.orbits().len();
    assert_eq!(
        r + s,
        n,
        "eigenspace dimensions of an involution must fill the rank"
    );
    RankPair { r, s }
}

/// A symmetric space: the ambient datum, the involution, and the folded
/// datum of the fixed subgroup.
#[derive(Debug, Clone)]
pub struct Space {
    spec: String,
    datum: RootDatum,
    theta: InvolutionDatum,
    folded: FoldedDatum,
}

impl Space {
    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn theta(&self) -> &InvolutionDatum {
        &self.theta
    }

    pub fn folded(&self) -> &FoldedDatum {
        &self.folded
    }
}

/// Build a symmetric space from a spec string: `group:<TYPE>` for
/// `K x K / diag(K)`, `fold:<TYPE>` for the nontrivial diagram involution of
/// `A<odd n >= 3>`, `D<n >= 4>` or `E6`, and `*`-separated products.
pub fn build_space(spec: &str) -> Result<Space> {
    let parts: Vec<&str> = spec.split('*').collect();
    let mut labels: Vec<String> = Vec::new();
    let mut sigma: Vec<usize> = Vec::new();
    for part in &parts {
        let (kind, label) = part
            .split_once(':')
            .ok_or_else(|| Error::UnsupportedSpace {
                spec: spec.to_string(),
                detail: format!("`{part}` is not of the form group:<TYPE> or fold:<TYPE>"),
            })?;
        let inner = build_datum(label).map_err(|e| Error::UnsupportedSpace {
            spec: spec.to_string(),
            detail: e.to_string(),
        })?;
        let k = inner.rank();
        let off = sigma.len();
        match kind {
            "group" => {
                labels.push(label.to_string());
                labels.push(label.to_string());
                // block swap on Lambda_K + Lambda_K
                sigma.extend((0..k).map(|i| off + k + i));
                sigma.extend((0..k).map(|i| off + i));
            }
            "fold" => {
                let local = fold_sigma(label, spec)?;
                labels.push(label.to_string());
                sigma.extend(local.into_iter().map(|i| off + i));
            }
            _ => {
                return Err(Error::UnsupportedSpace {
                    spec: spec.to_string(),
                    detail: format!("unknown kind `{kind}` (expected group or fold)"),
                })
            }
        }
    }
    let datum = build_datum(&labels.join("x"))?;
    let theta = InvolutionDatum::new(&datum, sigma)?;
    let folded = fold(&datum, &theta)?;
    Ok(Space {
        spec: spec.to_string(),
        datum,
        theta,
        folded,
    })
}

/// The nontrivial diagram involution of a foldable simple type, as a
/// 0-based permutation.
fn fold_sigma(label: &str, spec: &str) -> Result<Vec<usize>> {
    let unsupported = |detail: String| Error::UnsupportedSpace {
        spec: spec.to_string(),
        detail,
    };
    let mut chars = label.chars();
    let letter = chars.next().unwrap_or('?');
    let n: usize = chars.as_str().parse().unwrap_or(0);
    match (letter, n) {
        ('A', n) if n >= 3 && n % 2 == 1 => Ok((0..n).map(|i| n - 1 - i).collect()),
        ('A', _) => Err(unsupported(format!(
            "fold:{label}: only A<n> with odd n >= 3 folds (the middle orbit is adjacent otherwise)"
        ))),
        ('D', 3) => Err(unsupported(
            "fold:D3: D3 is an alias of A3; use fold:A3".to_string(),
        )),
        ('D', n) if n >= 4 => {
            let mut s: Vec<usize> = (0..n).collect();
            s.swap(n - 2, n - 1);
            Ok(s)
        }
        ('E', 6) => Ok(vec![5, 1, 4, 3, 2, 0]),
        _ => Err(unsupported(format!(
            "fold:{label}: no nontrivial diagram involution in the minimal-rank list"
        ))),
    }
}

/// All roots fixed by theta.
pub fn theta_fixed_roots(datum: &RootDatum, theta: &InvolutionDatum) -> Vec<Weight> {
    datum
        .all_roots()
        .into_iter()
        .filter(|r| theta.apply(r) == *r)
        .collect()
}

/// Recognize the type of a closed subsystem given all its roots; returns
/// the label and the rank, or None for the empty subsystem.
pub fn subsystem_type(datum: &RootDatum, roots: &[Weight]) -> Option<(String, usize)> {
    let positives: Vec<&Weight> = roots.iter().filter(|r| r.height() > 0).collect();
    if positives.is_empty() {
        return None;
    }
    let simples: Vec<&Weight> = positives
        .iter()
        .filter(|r| {
            !positives
                .iter()
                .any(|a| positives.iter().any(|b| a.add(b) == ***r))
        })
        .copied()
        .collect();
    let k = simples.len();
    let mut cartan = IntMatrix::zero(k, k);
    for (i, si) in simples.iter().enumerate() {
        for (j, sj) in simples.iter().enumerate() {
            cartan.set(i, j, datum.pairing_with_root(sj, si)?);
        }
    }
    recognize_type(&cartan).map(|label| (label, k))
}

/// Check the structure of a symmetric space at the lattice level.  Every
/// claim lands in the report; nothing aborts on falsification.
pub fn verify_structure(
    datum: &RootDatum,
    theta: &InvolutionDatum,
    max_group: usize,
) -> Result<Report> {
    let mut report = Report::new();
    let all_roots = datum.all_roots();
    let fixed = theta_fixed_roots(datum, theta);

    // (a) the fixed roots form a subsystem closed under addition within R
    let mut closed = true;
    for a in &fixed {
        for b in &fixed {
            let sum = a.add(b);
            if datum.is_root(&sum) && theta.apply(&sum) != sum {
                closed = false;
            }
        }
    }
    let fixed_type = subsystem_type(datum, &fixed)
        .map(|(label, _)| label)
        .unwrap_or_else(|| "empty".to_string());
    report.push(
        "r_theta_closed",
        closed,
        format!(
            "{} theta-fixed roots, subsystem type {}",
            fixed.len(),
            fixed_type
        ),
    );

    // (d) theta w0 theta = w0
    let w0 = weyl::longest_element(datum);
    let t = theta.theta();
    let w0_fixed = t.mul(w0.matrix()).mul(t) == *w0.matrix();
    report.push(
        "w0_fixed",
        w0_fixed,
        format!("longest element has length {}", w0.length()),
    );

    // (e) the restricted lattice is torsion-free: theta - 1 has unit
    // elementary divisors
    let diff = theta.theta().sub(&IntMatrix::identity(datum.rank()));
    let invariants = diff.smith_invariants();
    let torsion_free = invariants.iter().all(|&d| d == 1);
    report.push(
        "lattice_torsion_free",
        torsion_free,
        format!("invariant factors of theta - 1: {invariants:?}"),
    );

    // (b), (c) need the folded datum
    match fold(datum, theta) {
        Ok(folded) => {
            let n_fixed = fixed.len() as i64;
            let n_all = all_roots.len() as i64;
            let lhs = folded.rank_k() as i64 + n_fixed + (n_all - n_fixed) / 2;
            let rhs = folded.rank_k() as i64 + folded.datum_k().all_roots().len() as i64;
            report.push(
                "dim_bookkeeping",
                lhs == rhs,
                format!("dim k = {lhs} from the decomposition, {rhs} from the folded datum"),
            );

            let w_theta = weyl::fixed_subgroup(datum, theta, max_group)?;
            let w_k = weyl::enumerate(folded.datum_k(), max_group)?;
            report.push(
                "w_theta_order",
                w_theta.len() == w_k.len(),
                format!(
                    "|W^theta| = {}, |W({})| = {}",
                    w_theta.len(),
                    folded.datum_k().type_label(),
                    w_k.len()
                ),
            );
        }
        Err(e) => {
            report.push("dim_bookkeeping", false, format!("folding failed: {e}"));
            report.push("w_theta_order", false, format!("folding failed: {e}"));
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_MAX_GROUP;

    #[test]
    fn group_case_swap() {
        let s = build_space("group:A1").unwrap();
        assert_eq!(s.datum().type_label(), "A1xA1");
        assert_eq!(s.theta().sigma(), &[1, 0]);
        assert_eq!(s.folded().datum_k().type_label(), "A1");
        // res is the coordinate sum
        assert_eq!(s.folded().res(&Weight::new(vec![1, 0])).coords, vec![1]);
        assert_eq!(s.folded().res(&Weight::new(vec![1, 1])).coords, vec![2]);
    }

    #[test]
    fn fold_a3_is_c2() {
        let s = build_space("fold:A3").unwrap();
        assert_eq!(s.theta().sigma(), &[2, 1, 0]);
        assert_eq!(s.folded().datum_k().type_label(), "C2");
        // orbit {1,3} maps to the first simple root of K, {2} to the second
        assert_eq!(s.folded().orbit_map(), &[0, 1, 0]);
        // the folded Cartan matrix is the C2 matrix on the nose here
        assert_eq!(s.folded().datum_k().cartan().row(0), &[2, -2]);
        assert_eq!(s.folded().datum_k().cartan().row(1), &[-1, 2]);
    }

    #[test]
    fn fold_d4_is_b3_and_e6_is_f4() {
        assert_eq!(
            build_space("fold:D4")
                .unwrap()
                .folded()
                .datum_k()
                .type_label(),
            "B3"
        );
        let e6 = build_space("fold:E6").unwrap();
        assert_eq!(e6.theta().sigma(), &[5, 1, 4, 3, 2, 0]);
        assert_eq!(e6.folded().datum_k().type_label(), "F4");
        assert_eq!(e6.folded().rank_k(), 4);
    }

    #[test]
    fn group_fold_restores_the_factor() {
        for label in ["A2", "B2", "G2", "D4"] {
            let s = build_space(&format!("group:{label}")).unwrap();
            let k = s.folded().datum_k();
            assert_eq!(k.cartan(), build_datum(label).unwrap().cartan(), "{label}");
        }
    }

    #[test]
    fn products_concatenate() {
        let s = build_space("group:A1*fold:A3").unwrap();
        assert_eq!(s.datum().rank(), 5);
        assert_eq!(s.theta().sigma(), &[1, 0, 4, 3, 2]);
        assert_eq!(s.folded().datum_k().type_label(), "A1xC2");
        let rk = rank_bookkeeping(s.datum(), s.theta());
        assert_eq!((rk.r, rk.s), (2, 3));
    }

    #[test]
    fn unsupported_specs() {
        for bad in [
            "fold:A2", "fold:A4", "fold:D3", "fold:B3", "fold:E7", "fold:G2", "group:Q1",
            "fold:A1", "stuff:A1", "A1", "group:", "",
        ] {
            assert!(
                matches!(build_space(bad), Err(Error::UnsupportedSpace { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn adjacent_orbit_guard() {
        // the A2 flip folds onto an adjacent orbit
        let d = build_datum("A2").unwrap();
        let theta = InvolutionDatum::new(&d, vec![1, 0]).unwrap();
        assert!(matches!(fold(&d, &theta), Err(Error::AdjacentOrbit(1, 2))));
    }

    #[test]
    fn involution_validation() {
        let d = build_datum("A3").unwrap();
        assert!(InvolutionDatum::new(&d, vec![1, 2, 0]).is_err()); // not an involution
        assert!(InvolutionDatum::new(&d, vec![0, 0, 1]).is_err()); // not a permutation
        let b = build_datum("B3").unwrap();
        // reversing B3 does not preserve the Cartan pairing
        assert!(InvolutionDatum::new(&b, vec![2, 1, 0]).is_err());
    }

    #[test]
    fn theta_fixed_roots_of_flips() {
        let a3 = build_space("fold:A3").unwrap();
        let fixed = theta_fixed_roots(a3.datum(), a3.theta());
        assert_eq!(fixed.len(), 4);
        assert_eq!(
            subsystem_type(a3.datum(), &fixed),
            Some(("A1xA1".to_string(), 2))
        );
        let g = build_space("group:A2").unwrap();
        assert!(theta_fixed_roots(g.datum(), g.theta()).is_empty());
    }

    #[test]
    fn rank_bookkeeping_examples() {
        for (spec, r, s) in [
            ("group:A1", 1, 1),
            ("fold:A3", 1, 2),
            ("fold:D4", 1, 3),
            ("fold:E6", 2, 4),
        ] {
            let sp = build_space(spec).unwrap();
            let rk = rank_bookkeeping(sp.datum(), sp.theta());
            assert_eq!((rk.r, rk.s), (r, s), "{spec}");
            assert_eq!(rk.r + rk.s, sp.datum().rank());
        }
    }

    #[test]
    fn verify_structure_passes_on_small_catalog() {
        for spec in ["group:A1", "group:A2", "fold:A3", "fold:D4", "group:B2"] {
            let s = build_space(spec).unwrap();
            let report = verify_structure(s.datum(), s.theta(), DEFAULT_MAX_GROUP).unwrap();
            assert!(report.all_pass(), "{spec}: {:?}", report.falsified());
        }
    }

    #[test]
    fn restriction_multiset_of_positive_roots() {
        // restrictions of R+ cover R_K+ with multiplicity 1 on fixed roots
        // and 2 on swapped pairs
        for spec in ["fold:A3", "fold:D4", "group:B2", "group:A1*group:A2"] {
            let s = build_space(spec).unwrap();
            let mut counts: std::collections::BTreeMap<Weight, usize> = Default::default();
            for r in s.datum().positive_roots() {
                *counts.entry(s.folded().res(r)).or_default() += 1;
            }
            let k_positives = s.folded().datum_k().positive_roots();
            assert_eq!(counts.len(), k_positives.len(), "{spec}");
            for r in s.datum().positive_roots() {
                let expected = if s.theta().apply(r) == *r { 1 } else { 2 };
                assert_eq!(counts[&s.folded().res(r)], expected, "{spec}: {r}");
            }
        }
    }

    #[test]
    fn folded_coroots_are_orbit_sums() {
        // pairing against a folded simple coroot equals the pairing against
        // the sum of the coroots in its orbit, for every basis weight
        for spec in [
            "fold:A3",
            "fold:D4",
            "fold:E6",
            "group:B2",
            "group:A1*fold:A3",
        ] {
            let s = build_space(spec).unwrap();
            let cartan = s.datum().cartan();
            for (o, orbit) in s.folded().orbits().iter().enumerate() {
                for j in 0..s.datum().rank() {
                    let e_j = Weight::simple_root(s.datum().rank(), j);
                    let lhs = s.folded().datum_k().pairing(&s.folded().res(&e_j), o);
                    let rhs: i64 = orbit.iter().map(|&i| cartan.get(i, j)).sum();
                    assert_eq!(lhs, rhs, "{spec}: orbit {o}, basis {j}");
                }
            }
        }
    }

    #[test]
    fn res_kernel_is_spanned_by_theta_differences() {
        for spec in ["fold:A3", "fold:E6", "group:A2"] {
            let s = build_space(spec).unwrap();
            let res = s.folded().res_matrix();
            assert_eq!(
                res.rank(),
                s.folded().rank_k(),
                "{spec}: res must be surjective"
            );
            // res . theta = res
            assert_eq!(res.mul(s.theta().theta()), *res, "{spec}");
            let diff = s
                .theta()
                .theta()
                .sub(&IntMatrix::identity(s.datum().rank()));
            assert_eq!(
                diff.rank() + s.folded().rank_k(),
                s.datum().rank(),
                "{spec}: kernel of res is the image of theta - 1"
            );
        }
    }
}
