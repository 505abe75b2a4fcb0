//! Index bookkeeping for the rational Grothendieck group of the wonderful
//! compactification: the orbit count `[W : W^theta]`, the total dimension
//! `[W : W(R^theta)]`, and the free rank `[W^theta : W(R^theta)]` over the
//! subring generated by the boundary divisors and the extended fundamental
//! classes.  Only the indices are modelled, not the ring itself.

use serde::Serialize;

use crate::error::Result;
use crate::folding::{rank_bookkeeping, theta_fixed_roots, InvolutionDatum};
use crate::rootdata::RootDatum;
use crate::weyl::{self, WeylGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub orbit_count: usize,
    pub k_dim: usize,
    pub free_rank: usize,
    pub r: usize,
    pub s: usize,
    pub proper: bool,
}

pub fn indices(datum: &RootDatum, theta: &InvolutionDatum, max: usize) -> Result<IndexReport> {
    let group = weyl::enumerate(datum, max)?;
    indices_with(datum, &group, theta)
}

pub fn indices_with(
    datum: &RootDatum,
    group: &WeylGroup,
    theta: &InvolutionDatum,
) -> Result<IndexReport> {
    let order = group.len();
    let w_theta = weyl::fixed_subgroup_indices(group, theta).len();
    let fixed_roots = theta_fixed_roots(datum, theta);
    let w_refl = weyl::reflection_subgroup(datum, &fixed_roots, order)?.len();
    assert_eq!(order % w_theta, 0);
    assert_eq!(order % w_refl, 0);
    assert_eq!(w_theta % w_refl, 0, "W(R^theta) is a subgroup of W^theta");
    let orbit_count = order / w_theta;
    let k_dim = order / w_refl;
    let free_rank = w_theta / w_refl;
    debug_assert_eq!(k_dim, orbit_count * free_rank);
    let ranks = rank_bookkeeping(datum, theta);
    Ok(IndexReport {
        orbit_count,
        k_dim,
        free_rank,
        r: ranks.r,
        s: ranks.s,
        proper: orbit_count < k_dim,
    })
}
