use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// A finite partial order: distinct element identifiers plus an `n x n`
/// boolean relation table. The three partial-order laws are checked on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinPoset {
    elems: Vec<String>,
    leq: Vec<bool>,
}

impl FinPoset {
    pub fn new(elems: Vec<String>, leq: Vec<bool>) -> Result<FinPoset> {
        let n = elems.len();
        if leq.len() != n * n {
            return Err(Error::Invalid(format!("leq table must have {} entries", n * n)));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if elems[i] == elems[j] {
                    return Err(Error::Invalid(format!("duplicate element {}", elems[i])));
                }
            }
        }
        let p = FinPoset { elems, leq };
        for i in 0..n {
            if !p.le(i, i) {
                return Err(Error::Invalid(format!("leq not reflexive at {}", p.elems[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && p.le(i, j) && p.le(j, i) {
                    return Err(Error::Invalid(format!(
                        "leq not antisymmetric at ({}, {})",
                        p.elems[i], p.elems[j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if p.le(i, j) && p.le(j, k) && !p.le(i, k) {
                        return Err(Error::Invalid(format!(
                            "leq not transitive at ({}, {}, {})",
                            p.elems[i], p.elems[j], p.elems[k]
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Build from the strict pairs `lo < hi` (by identifier), taking the
    /// reflexive-transitive closure.
    pub fn from_pairs(elems: Vec<String>, pairs: &[(String, String)]) -> Result<FinPoset> {
        let n = elems.len();
        let idx = |s: &str| -> Result<usize> {
            elems
                .iter()
                .position(|e| e == s)
                .ok_or_else(|| Error::Unresolved(format!("poset element {s}")))
        };
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in pairs {
            leq[idx(a)? * n + idx(b)?] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i * n + k] && leq[k * n + j] {
                        leq[i * n + j] = true;
                    }
                }
            }
        }
        FinPoset::new(elems, leq)
    }

    /// Chain `0 < 1 < ... < n-1` with the given element names.
    pub fn chain(names: &[&str]) -> FinPoset {
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                leq[i * n + j] = true;
            }
        }
        FinPoset::new(names.iter().map(|s| s.to_string()).collect(), leq).expect("chain is a poset")
    }

    /// Discrete poset (antichain).
    pub fn discrete(names: &[&str]) -> FinPoset {
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        FinPoset::new(names.iter().map(|s| s.to_string()).collect(), leq).expect("antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[String] {
        &self.elems
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elems[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elems.iter().position(|e| e == name)
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elems.len() + j]
    }

    /// Greatest lower bound of `{i, j}` by exhaustive scan.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.subset_meet(&[i, j])
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        self.subset_join(&[i, j])
    }

    /// Greatest element below every member of `set`, if one exists.
    pub fn subset_meet(&self, set: &[usize]) -> Option<usize> {
        let lbs: Vec<usize> =
            (0..self.len()).filter(|&k| set.iter().all(|&i| self.le(k, i))).collect();
        lbs.iter().copied().find(|&k| lbs.iter().all(|&l| self.le(l, k)))
    }

    /// Least element above every member of `set`, if one exists. The empty
    /// set yields the bottom element when present.
    pub fn subset_join(&self, set: &[usize]) -> Option<usize> {
        let ubs: Vec<usize> =
            (0..self.len()).filter(|&k| set.iter().all(|&i| self.le(i, k))).collect();
        ubs.iter().copied().find(|&k| ubs.iter().all(|&u| self.le(k, u)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|i| self.le(i, t)))
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&b| (0..self.len()).all(|i| self.le(b, i)))
    }

    /// All downward-closed subsets, as sorted index vectors, enumerated in a
    /// canonical order (by size, then lexicographically).
    pub fn downsets(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let closed = set
                .iter()
                .all(|&i| (0..n).all(|j| !self.le(j, i) || set.contains(&j)));
            if closed {
                out.push(set);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }
}

/// A reflexive transitive relation where antisymmetry is not required; the
/// raw material for poset reflection.
#[derive(Clone, Debug)]
pub struct PreorderPresentation {
    pub elems: Vec<String>,
    le: Vec<bool>,
}

impl PreorderPresentation {
    pub fn new(elems: Vec<String>, le: Vec<bool>) -> Result<PreorderPresentation> {
        let n = elems.len();
        if le.len() != n * n {
            return Err(Error::Invalid(format!("le table must have {} entries", n * n)));
        }
        for i in 0..n {
            if !le[i * n + i] {
                return Err(Error::Invalid(format!("preorder not reflexive at {}", elems[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if le[i * n + j] && le[j * n + k] && !le[i * n + k] {
                        return Err(Error::Invalid(format!(
                            "preorder not transitive at ({}, {}, {})",
                            elems[i], elems[j], elems[k]
                        )));
                    }
                }
            }
        }
        Ok(PreorderPresentation { elems, le })
    }

    /// Build from a comparison oracle, closing nothing: the oracle must
    /// already be reflexive and transitive.
    pub fn from_fn(elems: Vec<String>, le: impl Fn(usize, usize) -> bool) -> Result<PreorderPresentation> {
        let n = elems.len();
        let mut table = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = le(i, j);
            }
        }
        PreorderPresentation::new(elems, table)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.elems.len() + j]
    }
}

/// Quotient a preorder by mutual comparability. Returns the quotient poset
/// and the class assignment (element index -> class index). Class
/// representatives are the first members in input order, and classes are
/// named after them.
pub fn poset_reflection(p: &PreorderPresentation) -> (FinPoset, Vec<usize>) {
    let n = p.len();
    let mut class = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..n {
        let found = reps.iter().position(|&r| p.le(i, r) && p.le(r, i));
        match found {
            Some(c) => class[i] = c,
            None => {
                class[i] = reps.len();
                reps.push(i);
            }
        }
    }
    let m = reps.len();
    let mut leq = vec![false; m * m];
    for a in 0..m {
        for b in 0..m {
            leq[a * m + b] = p.le(reps[a], reps[b]);
        }
    }
    let elems = reps.iter().map(|&r| p.elems[r].clone()).collect();
    let poset = FinPoset::new(elems, leq).expect("reflection of a preorder is a poset");
    (poset, class)
}

/// What a finite poset turned out to be. Each field carries a witness or the
/// first counterexample found in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub top: Option<String>,
    pub bottom: Option<String>,
    /// `Err((x, y))` when the pair has no greatest lower bound.
    pub binary_meets: std::result::Result<(), (String, String)>,
    pub binary_joins: std::result::Result<(), (String, String)>,
    /// `Err((x, y, z))` with `x /\ (y \/ z) != (x /\ y) \/ (x /\ z)`.
    pub distributive: std::result::Result<(), (String, String, String)>,
    /// `Err((b, c))` when `max { a : a /\ b <= c }` does not exist.
    pub heyting: std::result::Result<(), (String, String)>,
    /// Bounded distributive lattice; in the finite case this is the frame law.
    pub frame: bool,
}

pub fn detect_structure(p: &FinPoset) -> StructureReport {
    let n = p.len();
    let top = p.top().map(|t| p.name(t).to_string());
    let bottom = p.bottom().map(|b| p.name(b).to_string());

    let mut binary_meets = Ok(());
    let mut binary_joins = Ok(());
    'meets: for i in 0..n {
        for j in 0..n {
            if p.meet(i, j).is_none() {
                binary_meets = Err((p.name(i).to_string(), p.name(j).to_string()));
                break 'meets;
            }
        }
    }
    'joins: for i in 0..n {
        for j in 0..n {
            if p.join(i, j).is_none() {
                binary_joins = Err((p.name(i).to_string(), p.name(j).to_string()));
                break 'joins;
            }
        }
    }

    let mut distributive = Ok(());
    if binary_meets.is_ok() && binary_joins.is_ok() {
        'dist: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = p.meet(x, p.join(y, z).unwrap()).unwrap();
                    let rhs = p.join(p.meet(x, y).unwrap(), p.meet(x, z).unwrap()).unwrap();
                    if lhs != rhs {
                        distributive = Err((
                            p.name(x).to_string(),
                            p.name(y).to_string(),
                            p.name(z).to_string(),
                        ));
                        break 'dist;
                    }
                }
            }
        }
    } else {
        distributive = Err(("<no lattice>".into(), String::new(), String::new()));
    }

    let mut heyting = Ok(());
    if binary_meets.is_ok() {
        'hey: for b in 0..n {
            for c in 0..n {
                let cands: Vec<usize> =
                    (0..n).filter(|&a| p.le(p.meet(a, b).unwrap(), c)).collect();
                let best = cands.iter().copied().find(|&a| cands.iter().all(|&x| p.le(x, a)));
                if best.is_none() {
                    heyting = Err((p.name(b).to_string(), p.name(c).to_string()));
                    break 'hey;
                }
            }
        }
    } else {
        heyting = Err(("<no meets>".into(), String::new()));
    }

    let frame = top.is_some()
        && bottom.is_some()
        && binary_meets.is_ok()
        && binary_joins.is_ok()
        && distributive.is_ok();

    StructureReport { top, bottom, binary_meets, binary_joins, distributive, heyting, frame }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond_boolean() -> FinPoset {
        // bot < a, b < top with a /\ b = bot, a \/ b = top
        FinPoset::from_pairs(
            vec!["bot".into(), "a".into(), "b".into(), "top".into()],
            &[
                ("bot".into(), "a".into()),
                ("bot".into(), "b".into()),
                ("a".into(), "top".into()),
                ("b".into(), "top".into()),
            ],
        )
        .unwrap()
    }

    fn m3() -> FinPoset {
        FinPoset::from_pairs(
            vec!["bot".into(), "a".into(), "b".into(), "c".into(), "top".into()],
            &[
                ("bot".into(), "a".into()),
                ("bot".into(), "b".into()),
                ("bot".into(), "c".into()),
                ("a".into(), "top".into()),
                ("b".into(), "top".into()),
                ("c".into(), "top".into()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn partial_order_laws_rejected_when_broken() {
        // not antisymmetric
        let r = FinPoset::new(vec!["x".into(), "y".into()], vec![true, true, true, true]);
        assert!(r.is_err());
        // not transitive
        let r = FinPoset::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![true, true, false, false, true, true, false, false, true],
        );
        assert!(r.is_err());
    }

    #[test]
    fn two_chain_is_heyting() {
        let p = FinPoset::chain(&["0", "1"]);
        let rep = detect_structure(&p);
        assert_eq!(rep.top.as_deref(), Some("1"));
        assert_eq!(rep.bottom.as_deref(), Some("0"));
        assert!(rep.binary_meets.is_ok());
        assert!(rep.binary_joins.is_ok());
        assert!(rep.distributive.is_ok());
        assert!(rep.heyting.is_ok());
        assert!(rep.frame);
    }

    #[test]
    fn boolean_diamond_is_distributive_heyting() {
        let rep = detect_structure(&diamond_boolean());
        assert!(rep.distributive.is_ok());
        assert!(rep.heyting.is_ok());
        assert!(rep.frame);
    }

    #[test]
    fn m3_reports_distributivity_counterexample() {
        let rep = detect_structure(&m3());
        assert!(rep.binary_meets.is_ok());
        assert!(rep.binary_joins.is_ok());
        let (x, y, z) = rep.distributive.unwrap_err();
        // verify the reported triple really violates distributivity
        let p = m3();
        let (xi, yi, zi) = (
            p.index_of(&x).unwrap(),
            p.index_of(&y).unwrap(),
            p.index_of(&z).unwrap(),
        );
        let lhs = p.meet(xi, p.join(yi, zi).unwrap()).unwrap();
        let rhs = p.join(p.meet(xi, yi).unwrap(), p.meet(xi, zi).unwrap()).unwrap();
        assert_ne!(lhs, rhs);
        assert!(!rep.frame);
    }

    #[test]
    fn reflection_collapses_symmetric_pair() {
        let pre = PreorderPresentation::new(
            vec!["a".into(), "b".into()],
            vec![true, true, true, true],
        )
        .unwrap();
        let (poset, class) = poset_reflection(&pre);
        assert_eq!(poset.len(), 1);
        assert_eq!(class, vec![0, 0]);
    }

    #[test]
    fn reflection_of_discrete_preorder_is_identity() {
        let pre = PreorderPresentation::from_fn(
            vec!["x".into(), "y".into(), "z".into()],
            |i, j| i == j,
        )
        .unwrap();
        let (poset, class) = poset_reflection(&pre);
        assert_eq!(poset.len(), 3);
        assert_eq!(class, vec![0, 1, 2]);
        // antichain: no nontrivial comparabilities
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(poset.le(i, j), i == j);
            }
        }
    }

    #[test]
    fn reflection_matches_bruteforce_partition_oracle() {
        // A mixed preorder: c ~ d (mutually comparable), a < everything, e incomparable.
        let elems: Vec<String> = ["a", "c", "d", "e"].iter().map(|s| s.to_string()).collect();
        let n = elems.len();
        let mut le = vec![false; n * n];
        let set = |le: &mut Vec<bool>, i: usize, j: usize| le[i * n + j] = true;
        for i in 0..n {
            set(&mut le, i, i);
        }
        set(&mut le, 1, 2);
        set(&mut le, 2, 1);
        set(&mut le, 0, 1);
        set(&mut le, 0, 2);
        let pre = PreorderPresentation::new(elems, le).unwrap();
        let (poset, class) = poset_reflection(&pre);

        // oracle: exhaustive pairwise mutual-<= partition
        let mut oracle_class = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            let mut found = None;
            for j in 0..i {
                if pre.le(i, j) && pre.le(j, i) {
                    found = Some(oracle_class[j]);
                    break;
                }
            }
            oracle_class[i] = match found {
                Some(c) => c,
                None => {
                    next += 1;
                    next - 1
                }
            };
        }
        assert_eq!(class, oracle_class);
        assert_eq!(poset.len(), 3);
        // quotient map is monotone and order is the induced one
        for i in 0..n {
            for j in 0..n {
                if pre.le(i, j) {
                    assert!(poset.le(class[i], class[j]));
                }
                assert_eq!(poset.le(class[i], class[j]), pre.le(i, j));
            }
        }
    }

    #[test]
    fn reflection_of_a_poset_is_identity_up_to_renaming() {
        let p = diamond_boolean();
        let pre = PreorderPresentation::from_fn(
            p.elems().to_vec(),
            |i, j| p.le(i, j),
        )
        .unwrap();
        let (q, class) = poset_reflection(&pre);
        assert_eq!(q.len(), p.len());
        for (i, c) in class.iter().enumerate() {
            assert_eq!(*c, i);
        }
    }

    #[test]
    fn downsets_of_chain() {
        let p = FinPoset::chain(&["0", "1", "2"]);
        assert_eq!(p.downsets().len(), 4);
    }
}
