use serde::Serialize;

use super::{BuildingDescription, FacadePair, Room};
use crate::error::{Error, Result};

/// Opening areas and porosities of one cross-ventilation axis.
///
/// `so*` are net external opening areas of main rooms on each facade, `sp*` the
/// gross main-room facade areas and `si*` the internal opening areas of the main
/// rooms on each side of the axis. A main room that touches both facades counts
/// on both sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairPorosity {
    pub pair_id: String,
    pub so1: f64,
    pub so2: f64,
    pub sp1: f64,
    pub sp2: f64,
    pub sp: f64,
    pub p1: f64,
    pub p2: f64,
    pub si1: f64,
    pub si2: f64,
}

/// Main rooms taking part in a facade pair (level filter applied).
pub(crate) fn pair_rooms<'a>(
    building: &'a BuildingDescription,
    pair: &'a FacadePair,
) -> impl Iterator<Item = &'a Room> + 'a {
    building.rooms.iter().filter(move |r| {
        r.is_main()
            && pair.floor_level.map_or(true, |lvl| r.floor_level == lvl)
            && r.facade_memberships
                .iter()
                .any(|m| m.facade == pair.facade_1 || m.facade == pair.facade_2)
    })
}

pub fn pair_porosity(building: &BuildingDescription, pair: &FacadePair) -> Result<PairPorosity> {
    let (mut so1, mut so2, mut sp1, mut sp2, mut si1, mut si2) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for room in pair_rooms(building, pair) {
        let g1 = room.gross_area_on(&pair.facade_1);
        let g2 = room.gross_area_on(&pair.facade_2);
        sp1 += g1;
        sp2 += g2;
        so1 += room.opening_area_on(&pair.facade_1);
        so2 += room.opening_area_on(&pair.facade_2);
        let internal = room.internal_opening_area();
        if g1 > 0.0 {
            si1 += internal;
        }
        if g2 > 0.0 {
            si2 += internal;
        }
    }
    let sp = (sp1 + sp2) / 2.0;
    if !(sp > 0.0) {
        return Err(Error::invalid(format!(
            "facade pair {}: mean main-room facade area Sp is zero",
            pair.id
        )));
    }
    Ok(PairPorosity {
        pair_id: pair.id.clone(),
        so1,
        so2,
        sp1,
        sp2,
        sp,
        p1: so1 / sp,
        p2: so2 / sp,
        si1,
        si2,
    })
}

/// Porosities of every declared facade pair, in declaration order.
pub fn facade_porosities(building: &BuildingDescription) -> Result<Vec<PairPorosity>> {
    if building.facade_pairs.is_empty() {
        return Err(Error::invalid("no facade pair declared"));
    }
    building
        .facade_pairs
        .iter()
        .map(|p| pair_porosity(building, p))
        .collect()
}
