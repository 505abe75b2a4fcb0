//! The full invariant suite for a symmetric space, aggregated into one
//! claim report: structure of the involution, orbit and index cross-checks,
//! peeling soundness, the closure poset, branching positivity and the
//! extension round trip.  Used by the CLI `verify` subcommand and the
//! Python bindings.

use num::BigInt;

use crate::branching::{branch, extend_weight};
use crate::characters::weyl_character;
use crate::error::Result;
use crate::folding::{rank_bookkeeping, verify_structure, Space};
use crate::ktheory::indices_with;
use crate::orbits::{closure_matrix, no_real_roots_check_with, OrbitRecord};
use crate::report::Report;
use crate::rootdata::{weyl_dim, Weight};
use crate::weyl::{WeylElement, WeylGroup};

/// Run every invariant check for the space against pre-built tables.
/// `deep` widens the dominant-weight sweeps and adds character identities.
pub fn space_report(
    space: &Space,
    group: &WeylGroup,
    orbits: &[OrbitRecord],
    max_group: usize,
    deep: bool,
) -> Result<Report> {
    let datum = space.datum();
    let theta = space.theta();
    let folded = space.folded();
    let mut report = verify_structure(datum, theta, max_group)?;

    let ranks = rank_bookkeeping(datum, theta);
    report.push(
        "rank_split",
        ranks.r + ranks.s == datum.rank(),
        format!("r = {}, s = {}, rank = {}", ranks.r, ranks.s, datum.rank()),
    );

    let idx = indices_with(datum, group, theta)?;
    report.push(
        "orbit_count_is_index",
        idx.orbit_count == orbits.len(),
        format!("{} orbits, index {}", orbits.len(), idx.orbit_count),
    );
    report.push(
        "index_multiplicativity",
        idx.k_dim == idx.orbit_count * idx.free_rank,
        format!("{} = {} * {}", idx.k_dim, idx.orbit_count, idx.free_rank),
    );
    report.push(
        "proper_subspace",
        idx.proper,
        format!("orbit_count {} < k_dim {}", idx.orbit_count, idx.k_dim),
    );

    report.push(
        "unique_closed_orbit",
        orbits.iter().filter(|r| r.h == 0).count() == 1,
        "exactly one orbit with h = 0".to_string(),
    );
    let mut xs: Vec<_> = orbits.iter().map(|r| r.x.matrix().clone()).collect();
    xs.sort();
    xs.dedup();
    report.push(
        "orbit_bijectivity",
        xs.len() == orbits.len(),
        format!(
            "{} distinct twisted involutions for {} cosets",
            xs.len(),
            orbits.len()
        ),
    );

    let mut peel_ok = true;
    for rec in orbits {
        let mut word: Vec<usize> = rec.canonical_word.iter().map(|&i| i as usize).collect();
        word.extend(
            rec.canonical_word
                .iter()
                .rev()
                .map(|&i| theta.sigma()[i as usize]),
        );
        let product = WeylElement::from_word(datum, &word);
        if product.matrix() != rec.x.matrix() || 2 * rec.h != rec.x.length() {
            peel_ok = false;
        }
    }
    report.push(
        "peeling_soundness",
        peel_ok,
        format!("{} cosets peeled and reconstructed", orbits.len()),
    );

    report.merge(no_real_roots_check_with(datum, theta, orbits));

    // closure order: check antisymmetry, transitivity, strict monotonicity
    // of h, the closed orbit as unique minimum and the open orbit on top
    let closure = closure_matrix(group, orbits);
    let n = orbits.len();
    let mut poset_ok = true;
    let detail;
    for a in 0..n {
        poset_ok &= closure[0][a] && closure[a][a];
        for b in 0..n {
            if a != b && closure[a][b] {
                poset_ok &= orbits[a].h < orbits[b].h && !closure[b][a];
                for c in 0..n {
                    if closure[b][c] && !closure[a][c] {
                        poset_ok = false;
                    }
                }
            }
        }
    }
    let maxima: Vec<usize> = (0..n)
        .filter(|&a| (0..n).all(|b| b == a || !closure[a][b]))
        .collect();
    if maxima.len() != 1 {
        poset_ok = false;
        detail = format!("{} maximal orbits", maxima.len());
    } else {
        let top = maxima[0];
        let h_max = orbits.iter().map(|r| r.h).max().unwrap_or(0);
        poset_ok &= orbits[top].h == h_max;
        detail = format!("open orbit #{top} with h = {}", orbits[top].h);
    }
    report.push("closure_poset", poset_ok, detail);

    // bounded branching sweep
    let bound = if deep { 4 } else { 2 };
    let mut branch_ok = true;
    let mut count = 0;
    let mut branch_detail = String::new();
    for lam in datum.dominant_weights_up_to(bound) {
        count += 1;
        match branch(datum, &lam, folded) {
            Err(e) => {
                branch_ok = false;
                branch_detail = format!("{lam}: {e}");
                break;
            }
            Ok(b) => {
                if b.head_multiplicity() != 1 || !b.dimension_conserved(datum) {
                    branch_ok = false;
                    branch_detail = format!("{lam}: head or dimension check failed");
                    break;
                }
            }
        }
    }
    if branch_ok {
        branch_detail = format!("{count} dominant weights, coordinate sum <= {bound}");
    }
    report.push("branch_positivity", branch_ok, branch_detail);

    // extension round trip over restrictions of dominant weights (not every
    // dominant weight of K is such a restriction on the folded types)
    let mut mus: Vec<Weight> = datum
        .dominant_weights_up_to(bound)
        .iter()
        .map(|lam| folded.res(lam))
        .collect();
    mus.sort();
    mus.dedup();
    let mut extend_ok = true;
    let mut extend_detail = format!("{} restricted weights", mus.len());
    for mu in &mus {
        match extend_weight(mu, folded, datum) {
            Err(e) => {
                extend_ok = false;
                extend_detail = format!("{mu}: {e}");
                break;
            }
            Ok(lam) => {
                if folded.res(&lam) != *mu || !datum.is_dominant(&lam) {
                    extend_ok = false;
                    extend_detail = format!("{mu}: round trip failed");
                    break;
                }
            }
        }
    }
    report.push("extend_round_trip", extend_ok, extend_detail);

    if deep {
        let k = folded.datum_k();
        let mut characters_ok = true;
        for lam in k.dominant_weights_up_to(3) {
            let ch = weyl_character(k, &lam)?;
            for i in 0..k.rank() {
                if ch.apply_matrix(&k.simple_reflection(i)) != ch {
                    characters_ok = false;
                }
            }
            if ch.coefficient_sum() != BigInt::from(weyl_dim(k, &lam)?) {
                characters_ok = false;
            }
        }
        report.push(
            "character_invariance",
            characters_ok,
            format!(
                "Weyl characters of {} invariant with matching dimensions",
                k.type_label()
            ),
        );
    }

    Ok(report)
}
