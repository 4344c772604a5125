use super::poset::FinPoset;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Meet-semilattice with top: a poset whose every pair has a greatest lower
/// bound, with the meet table materialized.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeetSemilattice {
    poset: FinPoset,
    top: usize,
    meet: Vec<usize>,
}

impl MeetSemilattice {
    pub fn from_poset(poset: FinPoset) -> Result<MeetSemilattice> {
        let n = poset.len();
        let top = poset
            .top()
            .ok_or_else(|| Error::Invalid("meet-semilattice needs a top element".into()))?;
        let mut meet = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = poset.meet(i, j).ok_or_else(|| {
                    Error::Invalid(format!(
                        "no meet for ({}, {})",
                        poset.name(i),
                        poset.name(j)
                    ))
                })?;
            }
        }
        Ok(MeetSemilattice { poset, top, meet })
    }

    pub fn chain(names: &[&str]) -> MeetSemilattice {
        MeetSemilattice::from_poset(FinPoset::chain(names)).expect("chains have meets")
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.poset.le(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.poset.len() + j]
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.poset.index_of(name)
    }
}

/// Heyting algebra: bounded lattice plus the implication table, validated by
/// the adjunction `a /\ b <= c  iff  a <= impl(b, c)` on all triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeytingAlgebra {
    lattice: MeetSemilattice,
    bottom: usize,
    join: Vec<usize>,
    implication: Vec<usize>,
}

impl HeytingAlgebra {
    pub fn from_poset(poset: FinPoset) -> Result<HeytingAlgebra> {
        let n = poset.len();
        let bottom = poset
            .bottom()
            .ok_or_else(|| Error::Invalid("Heyting algebra needs a bottom element".into()))?;
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                join[i * n + j] = poset.join(i, j).ok_or_else(|| {
                    Error::Invalid(format!("no join for ({}, {})", poset.name(i), poset.name(j)))
                })?;
            }
        }
        let lattice = MeetSemilattice::from_poset(poset)?;
        let p = lattice.poset();
        let mut implication = vec![0usize; n * n];
        for b in 0..n {
            for c in 0..n {
                let cands: Vec<usize> = (0..n).filter(|&a| p.le(lattice.meet(a, b), c)).collect();
                let best = cands
                    .iter()
                    .copied()
                    .find(|&a| cands.iter().all(|&x| p.le(x, a)))
                    .ok_or_else(|| {
                        Error::Invalid(format!(
                            "no implication for ({}, {})",
                            p.name(b),
                            p.name(c)
                        ))
                    })?;
                implication[b * n + c] = best;
            }
        }
        let h = HeytingAlgebra { lattice, bottom, join, implication };
        // adjunction law on all triples
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = h.lattice.le(h.lattice.meet(a, b), c);
                    let rhs = h.lattice.le(a, h.implication(b, c));
                    if lhs != rhs {
                        return Err(Error::Invalid(format!(
                            "implication adjunction fails at ({}, {}, {})",
                            h.name(a),
                            h.name(b),
                            h.name(c)
                        )));
                    }
                }
            }
        }
        Ok(h)
    }

    pub fn lattice(&self) -> &MeetSemilattice {
        &self.lattice
    }

    pub fn poset(&self) -> &FinPoset {
        self.lattice.poset()
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.lattice.le(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.lattice.meet(i, j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j]
    }

    pub fn implication(&self, i: usize, j: usize) -> usize {
        self.implication[i * self.len() + j]
    }

    /// Bi-implication `(a -> b) /\ (b -> a)`.
    pub fn iff(&self, i: usize, j: usize) -> usize {
        self.meet(self.implication(i, j), self.implication(j, i))
    }

    pub fn name(&self, i: usize) -> &str {
        self.lattice.name(i)
    }
}

/// Finite frame: a Heyting algebra validated for binary distributivity,
/// which in the finite bounded case is the frame law. Subset joins are total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteFrame {
    heyting: HeytingAlgebra,
}

impl FiniteFrame {
    pub fn from_poset(poset: FinPoset) -> Result<FiniteFrame> {
        let h = HeytingAlgebra::from_poset(poset)?;
        let n = h.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = h.meet(x, h.join(y, z));
                    let rhs = h.join(h.meet(x, y), h.meet(x, z));
                    if lhs != rhs {
                        return Err(Error::Invalid(format!(
                            "distributivity fails at ({}, {}, {})",
                            h.name(x),
                            h.name(y),
                            h.name(z)
                        )));
                    }
                }
            }
        }
        Ok(FiniteFrame { heyting: h })
    }

    pub fn heyting(&self) -> &HeytingAlgebra {
        &self.heyting
    }

    pub fn poset(&self) -> &FinPoset {
        self.heyting.poset()
    }

    pub fn len(&self) -> usize {
        self.heyting.len()
    }

    pub fn top(&self) -> usize {
        self.heyting.top()
    }

    pub fn bottom(&self) -> usize {
        self.heyting.bottom()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.heyting.le(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.heyting.meet(i, j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.heyting.join(i, j)
    }

    /// Join of a subset by exhaustive scan; total in a finite frame (the
    /// empty join is bottom).
    pub fn subset_join(&self, set: &[usize]) -> usize {
        self.poset().subset_join(set).expect("finite frames have all joins")
    }

    pub fn name(&self, i: usize) -> &str {
        self.heyting.name(i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::poset::detect_structure;

    #[test]
    fn semilattice_needs_top() {
        let p = FinPoset::discrete(&["x", "y"]);
        assert!(MeetSemilattice::from_poset(p).is_err());
    }

    #[test]
    fn heyting_of_boolean_diamond() {
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
        let h = HeytingAlgebra::from_poset(p).unwrap();
        let (a, b, bot, top) = (
            h.poset().index_of("a").unwrap(),
            h.poset().index_of("b").unwrap(),
            h.bottom(),
            h.top(),
        );
        // a -> b = b in a Boolean algebra with a /\ b = bot
        assert_eq!(h.implication(a, b), b);
        assert_eq!(h.implication(a, bot), b);
        assert_eq!(h.implication(top, a), a);
        // implication table agrees with detect_structure's criterion
        let rep = detect_structure(h.poset());
        assert!(rep.heyting.is_ok());
    }

    #[test]
    fn m3_is_not_a_frame() {
        let p = FinPoset::from_pairs(
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
        .unwrap();
        assert!(FiniteFrame::from_poset(p).is_err());
    }

    #[test]
    fn chain_subset_join() {
        let f = FiniteFrame::from_poset(FinPoset::chain(&["0", "1", "2"])).unwrap();
        assert_eq!(f.subset_join(&[]), f.bottom());
        assert_eq!(f.subset_join(&[0, 2]), 2);
    }
}
