use super::poset::FinPoset;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A monotone map between finite posets, as a per-element table of codomain
/// indices. Monotonicity is checked on construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneMap {
    pub dom: FinPoset,
    pub cod: FinPoset,
    table: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(dom: FinPoset, cod: FinPoset, table: Vec<usize>) -> Result<MonotoneMap> {
        if table.len() != dom.len() {
            return Err(Error::Invalid("monotone map table length mismatch".into()));
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= cod.len()) {
            return Err(Error::Invalid(format!("table entry {bad} out of codomain range")));
        }
        for i in 0..dom.len() {
            for j in 0..dom.len() {
                if dom.le(i, j) && !cod.le(table[i], table[j]) {
                    return Err(Error::Invalid(format!(
                        "not monotone at ({}, {})",
                        dom.name(i),
                        dom.name(j)
                    )));
                }
            }
        }
        Ok(MonotoneMap { dom, cod, table })
    }

    pub fn identity(p: &FinPoset) -> MonotoneMap {
        MonotoneMap {
            dom: p.clone(),
            cod: p.clone(),
            table: (0..p.len()).collect(),
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn compose(&self, other: &MonotoneMap) -> Result<MonotoneMap> {
        if other.cod != self.dom {
            return Err(Error::Invalid("composition domain mismatch".into()));
        }
        let table = other.table.iter().map(|&i| self.table[i]).collect();
        MonotoneMap::new(other.dom.clone(), self.cod.clone(), table)
    }
}

/// Left and right Galois adjoints of a monotone map, when they exist.
///
/// `left(a)` is the least `b` with `a <= f(b)`; `right(a)` the greatest `b`
/// with `f(b) <= a`. Both are searched exhaustively and certified by the
/// adjunction inequalities on all pairs before being returned; absence is a
/// value, not an error.
pub fn monotone_adjoints(f: &MonotoneMap) -> (Option<MonotoneMap>, Option<MonotoneMap>) {
    let left = adjoint_table(f, true).and_then(|t| {
        MonotoneMap::new(f.cod.clone(), f.dom.clone(), t).ok().filter(|l| {
            // a <= f(l(a)) and l(f(b)) <= b
            (0..f.cod.len()).all(|a| f.cod.le(a, f.apply(l.apply(a))))
                && (0..f.dom.len()).all(|b| f.dom.le(l.apply(f.apply(b)), b))
        })
    });
    let right = adjoint_table(f, false).and_then(|t| {
        MonotoneMap::new(f.cod.clone(), f.dom.clone(), t).ok().filter(|r| {
            // f(r(a)) <= a and b <= r(f(b))
            (0..f.cod.len()).all(|a| f.cod.le(f.apply(r.apply(a)), a))
                && (0..f.dom.len()).all(|b| f.dom.le(b, r.apply(f.apply(b))))
        })
    });
    (left, right)
}

fn adjoint_table(f: &MonotoneMap, left: bool) -> Option<Vec<usize>> {
    let mut table = Vec::with_capacity(f.cod.len());
    for a in 0..f.cod.len() {
        let cands: Vec<usize> = (0..f.dom.len())
            .filter(|&b| if left { f.cod.le(a, f.apply(b)) } else { f.cod.le(f.apply(b), a) })
            .collect();
        let best = if left {
            cands.iter().copied().find(|&b| cands.iter().all(|&x| f.dom.le(b, x)))
        } else {
            cands.iter().copied().find(|&b| cands.iter().all(|&x| f.dom.le(x, b)))
        };
        table.push(best?);
    }
    Some(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::semilattice::HeytingAlgebra;

    #[test]
    fn identity_adjoints_are_identity() {
        let p = FinPoset::chain(&["0", "1", "2"]);
        let f = MonotoneMap::identity(&p);
        let (l, r) = monotone_adjoints(&f);
        assert_eq!(l.unwrap().table(), &[0, 1, 2]);
        assert_eq!(r.unwrap().table(), &[0, 1, 2]);
    }

    #[test]
    fn constant_top_map_adjoints() {
        let p = FinPoset::chain(&["bot", "top"]);
        let f = MonotoneMap::new(p.clone(), p.clone(), vec![1, 1]).unwrap();
        let (l, r) = monotone_adjoints(&f);
        // least b with a <= top is bot for every a
        assert_eq!(l.unwrap().table(), &[0, 0]);
        // greatest b with top <= a exists only for a = top; for a = bot the
        // candidate set is empty, so no right adjoint... except the table
        // search: f(b) = top <= bot never holds, so right is absent.
        assert!(r.is_none());
    }

    #[test]
    fn meet_with_a_has_implication_right_adjoint() {
        // 4-element Boolean algebra; meet-with-a as a monotone endo-map.
        let p = FinPoset::from_pairs(
            vec!["bot".into(), "a".into(), "b".into(), "top".into()],
            &[
                ("bot".into(), "a".into()),
                ("bot".into(), "b".into()),
                ("a".into(), "top".into()),
                ("b".into(), "top".into()),
            ],
        )
        .unwrap();
        let h = HeytingAlgebra::from_poset(p.clone()).unwrap();
        let a = p.index_of("a").unwrap();
        let table: Vec<usize> = (0..p.len()).map(|x| h.meet(a, x)).collect();
        let f = MonotoneMap::new(p.clone(), p.clone(), table).unwrap();
        let (_, r) = monotone_adjoints(&f);
        let r = r.expect("meet has a right adjoint in a Heyting algebra");
        for x in 0..p.len() {
            assert_eq!(r.apply(x), h.implication(a, x), "a -> {}", p.name(x));
        }
    }

    #[test]
    fn galois_inequalities_hold_when_left_exists() {
        // down-rounding map from a 3-chain to a 2-chain
        let dom = FinPoset::chain(&["0", "1"]);
        let cod = FinPoset::chain(&["x", "y", "z"]);
        let f = MonotoneMap::new(dom.clone(), cod.clone(), vec![0, 2]).unwrap();
        let (l, r) = monotone_adjoints(&f);
        let l = l.unwrap();
        for a in 0..cod.len() {
            assert!(cod.le(a, f.apply(l.apply(a))));
        }
        let r = r.unwrap();
        for a in 0..cod.len() {
            assert!(cod.le(f.apply(r.apply(a)), a));
        }
    }
}
