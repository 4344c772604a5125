use super::monotone::MonotoneMap;
use super::poset::FinPoset;
use super::semilattice::{FiniteFrame, MeetSemilattice};
use crate::Result;
use serde::Serialize;

fn downset_name(s: &MeetSemilattice, set: &[usize]) -> String {
    let mut parts: Vec<&str> = set.iter().map(|&i| s.name(i)).collect();
    parts.sort();
    format!("{{{}}}", parts.join(","))
}

/// Free join completion of a meet-semilattice: the frame of all
/// downward-closed subsets ordered by inclusion, together with the embedding
/// by principal downsets. The embedding preserves top and binary meets.
pub fn downset_completion(s: &MeetSemilattice) -> Result<(FiniteFrame, MonotoneMap)> {
    let downsets = s.poset().downsets();
    let m = downsets.len();
    let names: Vec<String> = downsets.iter().map(|d| downset_name(s, d)).collect();
    let mut leq = vec![false; m * m];
    for (i, a) in downsets.iter().enumerate() {
        for (j, b) in downsets.iter().enumerate() {
            leq[i * m + j] = a.iter().all(|x| b.contains(x));
        }
    }
    let poset = FinPoset::new(names, leq)?;
    let frame = FiniteFrame::from_poset(poset)?;

    let mut table = Vec::with_capacity(s.len());
    for x in 0..s.len() {
        let principal: Vec<usize> = (0..s.len()).filter(|&y| s.le(y, x)).collect();
        let idx = downsets
            .iter()
            .position(|d| *d == principal)
            .expect("principal downsets are downsets");
        table.push(idx);
    }
    let embed = MonotoneMap::new(s.poset().clone(), frame.poset().clone(), table)?;
    Ok((frame, embed))
}

#[derive(Clone, Debug, Serialize)]
pub struct SupercompactReport {
    /// Indices of the supercompact elements, in canonical order.
    pub carrier: Vec<usize>,
    pub carrier_names: Vec<String>,
    /// Carrier together with top is closed under binary meets.
    pub closed_under_meets: bool,
    /// Every element is the join of the carrier elements below it.
    pub join_generating: bool,
}

/// The supercompact elements of a finite frame: `x` such that `x <= \/S`
/// forces `x <= s` for a single `s` in `S`. Equivalent finite test:
/// `x` is not below the join of everything not above it; bottom is excluded
/// automatically by the empty-join clause.
pub fn supercompact_elements(l: &FiniteFrame) -> SupercompactReport {
    let n = l.len();
    let mut carrier = Vec::new();
    for x in 0..n {
        let others: Vec<usize> = (0..n).filter(|&y| !l.le(x, y)).collect();
        if !l.le(x, l.subset_join(&others)) {
            carrier.push(x);
        }
    }
    let mut with_top = carrier.clone();
    if !with_top.contains(&l.top()) {
        with_top.push(l.top());
    }
    let closed_under_meets = with_top
        .iter()
        .all(|&a| with_top.iter().all(|&b| with_top.contains(&l.meet(a, b))));
    let join_generating = (0..n).all(|x| {
        let below: Vec<usize> = carrier.iter().copied().filter(|&c| l.le(c, x)).collect();
        l.subset_join(&below) == x
    });
    SupercompactReport {
        carrier_names: carrier.iter().map(|&i| l.name(i).to_string()).collect(),
        carrier,
        closed_under_meets,
        join_generating,
    }
}
