use super::core::{Arr, Category};
use crate::budget::Budget;
use crate::cert::{Certificate, Verdict};
use crate::{Error, Result};
use serde_json::json;

/// A weak dependent product diagram for `f: X -> J` along `g: J -> I`:
/// an apex arrow `h: Z -> I`, the pullback `E` of `h` along `g` with its
/// projections `to_j: E -> J` and `to_z: E -> Z`, and a map `e: E -> X`
/// with `e . f = to_j`.
#[derive(Clone, Debug)]
pub struct WdpDiagram {
    pub f: Arr,
    pub g: Arr,
    pub h: Arr,
    pub e: Arr,
    pub to_j: Arr,
    pub to_z: Arr,
}

/// Enumerate every competitor diagram at budget and check weak terminality:
/// for each competitor `(h', e')` there must be `w` with `h' = h . w` and
/// `k` with `e' = e . k`. Only those two equations are required.
pub fn wdp_is_weakly_terminal(
    c: &Category,
    diag: &WdpDiagram,
    budget: &Budget,
) -> Result<(bool, u64, Option<serde_json::Value>)> {
    let mut checks = 0u64;
    let mut tested = 0usize;
    let competitors = competitor_diagrams(c, &diag.f, &diag.g, budget)?;
    for comp in &competitors {
        if tested >= budget.max_competitors {
            return Err(Error::Budget("wdp competitor sweep capped".into()));
        }
        tested += 1;
        checks += 1;
        let w_ok = c
            .hom(&comp.h.dom, &diag.h.dom)?
            .iter()
            .any(|w| c.compose(w, &diag.h).map(|x| x == comp.h).unwrap_or(false));
        let k_ok = w_ok
            && c.hom(&comp.e.dom, &diag.e.dom)?
                .iter()
                .any(|k| c.compose(k, &diag.e).map(|x| x == comp.e).unwrap_or(false));
        if !(w_ok && k_ok) {
            return Ok((
                false,
                checks,
                Some(json!({
                    "competitor_apex": comp.h.dom.to_string(),
                    "competitor_h": comp.h.data.to_string(),
                    "competitor_e": comp.e.data.to_string(),
                    "missing": if w_ok { "k" } else { "w" },
                })),
            ));
        }
    }
    Ok((true, checks, None))
}

/// All candidate diagrams over the cospan at budget, in canonical order.
pub fn competitor_diagrams(
    c: &Category,
    f: &Arr,
    g: &Arr,
    budget: &Budget,
) -> Result<Vec<WdpDiagram>> {
    let objs = c.objects(budget)?;
    let mut out = Vec::new();
    for z in &objs.items {
        for h in c.hom(z, &g.cod)?.iter() {
            let pb = match c.pullback(g, h)? {
                Some(p) => p,
                None => continue,
            };
            // pb.p1: E -> J, pb.p2: E -> Z
            for e in c.hom(&pb.obj, &f.dom)?.iter() {
                if c.compose(e, f)? == pb.p1 {
                    out.push(WdpDiagram {
                        f: f.clone(),
                        g: g.clone(),
                        h: h.clone(),
                        e: e.clone(),
                        to_j: pb.p1.clone(),
                        to_z: pb.p2.clone(),
                    });
                    if out.len() > budget.max_competitors {
                        return Err(Error::Budget("wdp competitor enumeration capped".into()));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Search a weak dependent product of `f` along `g` among the budget's
/// candidate diagrams. Absence is a certificate verdict, explicitly not a
/// proof of nonexistence.
pub fn weak_dependent_product(
    c: &Category,
    f: &Arr,
    g: &Arr,
    budget: &Budget,
) -> Result<(Option<WdpDiagram>, Certificate)> {
    if f.cod != g.dom {
        return Err(Error::Invalid("weak dependent product needs cod(f) = dom(g)".into()));
    }
    let inst = format!("{} wdp({} along {})", c.name(), f.data, g.data);
    let candidates = competitor_diagrams(c, f, g, budget)?;
    let total = candidates.len();
    let mut checks = 0u64;
    for diag in &candidates {
        let (ok, n, _) = wdp_is_weakly_terminal(c, diag, budget)?;
        checks += n;
        if ok {
            let mut cert = Certificate::new("weak-dependent-product", &inst, budget, Verdict::Pass);
            cert.checks = checks;
            cert.witnesses = json!({
                "apex": diag.h.dom.to_string(),
                "h": diag.h.data.to_string(),
                "e": diag.e.data.to_string(),
                "competitors_tested": total,
            });
            return Ok((Some(diag.clone()), cert));
        }
    }
    let mut cert =
        Certificate::new("weak-dependent-product", &inst, budget, Verdict::AbsentAtBudget);
    cert.checks = checks;
    cert.witnesses = json!({ "candidates_tried": total });
    Ok((None, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{poset_category, FinSet};
    use crate::order::{FinPoset, HeytingAlgebra};
    use crate::val::Val;

    #[test]
    fn identity_cospan_has_identity_wdp() {
        let c = FinSet::category(&["0"]);
        let x = FinSet::object_from_atoms(&["0"]);
        let id = c.identity(&x).unwrap();
        let b = Budget::default();
        let (found, cert) = weak_dependent_product(&c, &id, &id, &b).unwrap();
        assert!(cert.is_pass());
        let d = found.unwrap();
        assert_eq!(d.h.cod, x);
    }

    #[test]
    fn finset_wdp_matches_section_count_oracle() {
        // f: {0,1} -> {0} constant, g: {0} -> {0} identity.
        // Sections of f over the unique fibre: two; the weak dependent
        // product must accept every competitor, which forces an apex with
        // two distinguishable points mapping onto both values.
        let c = FinSet::category(&["0", "1"]);
        let x = FinSet::object_from_atoms(&["0", "1"]);
        let j = FinSet::object_from_atoms(&["0"]);
        let f = FinSet::arrow(
            &x,
            &j,
            vec![(Val::sym("0"), Val::sym("0")), (Val::sym("1"), Val::sym("0"))],
        )
        .unwrap();
        let g = c.identity(&j).unwrap();
        let b = Budget { max_competitors: 5000, ..Budget::default() };
        let (found, cert) = weak_dependent_product(&c, &f, &g, &b).unwrap();
        assert!(cert.is_pass(), "{:?}", cert);
        let d = found.unwrap();
        // oracle: the genuine dependent product has 2 sections; any weakly
        // terminal apex must admit maps from every competitor, in particular
        // e must reach both elements of X, so |E| >= 2 and |Z| >= 2.
        let apex_elems = FinSet::elements_of(&d.h.dom).unwrap();
        assert!(apex_elems.len() >= 2, "apex {:?}", d.h.dom);
        let (ok, _, _) = wdp_is_weakly_terminal(&c, &d, &b).unwrap();
        assert!(ok);
    }

    #[test]
    fn heyting_poset_wdp_is_implication() {
        // in the category of a Heyting poset, the weak dependent product of
        // (x <= j) along (j <= i) has apex i /\ (j -> x)
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
        let c = poset_category("H", &p).unwrap();
        let b = Budget { max_competitors: 5000, ..Budget::default() };
        // f: a <= top (x = a, j = top), g: top <= top (i = top)
        let f = c.hom(&Val::sym("a"), &Val::sym("top")).unwrap()[0].clone();
        let g = c.identity(&Val::sym("top")).unwrap();
        let (found, cert) = weak_dependent_product(&c, &f, &g, &b).unwrap();
        assert!(cert.is_pass());
        let d = found.unwrap();
        // oracle: apex = i /\ (j -> x) = top /\ (top -> a) = a
        let (ji, xi, ii) = (
            p.index_of("top").unwrap(),
            p.index_of("a").unwrap(),
            p.index_of("top").unwrap(),
        );
        let expected = h.meet(ii, h.implication(ji, xi));
        assert_eq!(d.h.dom, Val::sym(p.name(expected)));
    }
}
