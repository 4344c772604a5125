use super::core::{Arr, Category};
use crate::budget::Budget;
use crate::cert::{Certificate, Verdict};
use crate::val::Val;
use crate::Result;
use serde_json::json;

/// A certified generic proof: the arrow `theta` together with, per checked
/// arrow `f: Y -> X`, the naming arrow into `theta`'s codomain and the two
/// factorizations between `Y` and the pullback of `theta`.
#[derive(Clone, Debug)]
pub struct GenericProof {
    pub theta: Arr,
    pub records: Vec<GenericProofRecord>,
}

#[derive(Clone, Debug)]
pub struct GenericProofRecord {
    pub f: Arr,
    pub naming: Arr,
    pub pulled: Arr,
    pub e1: Arr,
    pub e2: Arr,
}

/// Try to factor `f` through a pullback of `theta` both ways: find
/// `naming: cod(f) -> cod(theta)` with mutual factorizations `e1, e2`
/// between `dom(f)` and the pullback object.
pub fn classify_arrow(
    c: &Category,
    theta: &Arr,
    f: &Arr,
) -> Result<Option<GenericProofRecord>> {
    for naming in c.hom(&f.cod, &theta.cod)?.iter() {
        let pb = match c.pullback(naming, theta)? {
            Some(p) => p,
            None => continue,
        };
        // pb.p1: E -> X (along naming), pb.p2: E -> Theta
        let pulled = pb.p1.clone();
        let e1 = c
            .hom(&pb.obj, &f.dom)?
            .iter()
            .find(|e1| c.compose(e1, f).map(|x| x == pulled).unwrap_or(false))
            .cloned();
        let e2 = c
            .hom(&f.dom, &pb.obj)?
            .iter()
            .find(|e2| c.compose(e2, &pulled).map(|x| x == *f).unwrap_or(false))
            .cloned();
        if let (Some(e1), Some(e2)) = (e1, e2) {
            return Ok(Some(GenericProofRecord {
                f: f.clone(),
                naming: naming.clone(),
                pulled,
                e1,
                e2,
            }));
        }
    }
    Ok(None)
}

/// Verify that a given arrow is a generic proof on the budgeted fragment.
pub fn certify_generic_proof(
    c: &Category,
    theta: &Arr,
    budget: &Budget,
) -> Result<(Option<GenericProof>, Certificate)> {
    let inst = format!("{} theta={}", c.name(), theta.data);
    let arrows = c.arrows(budget)?;
    let mut records = Vec::new();
    let mut checks = 0u64;
    for f in &arrows.items {
        checks += 1;
        match classify_arrow(c, theta, f)? {
            Some(r) => records.push(r),
            None => {
                let mut cert =
                    Certificate::new("generic-proof", &inst, budget, Verdict::AbsentAtBudget);
                cert.checks = checks;
                cert.witnesses = json!({ "unclassified_arrow": format!("{:?}", f) });
                return Ok((None, cert));
            }
        }
    }
    let mut cert = Certificate::new("generic-proof", &inst, budget, Verdict::Pass);
    cert.checks = checks;
    cert.witnesses = json!({
        "arrows_classified": records.len(),
        "fragment_exhausted": arrows.exhausted,
    });
    Ok((Some(GenericProof { theta: theta.clone(), records }), cert))
}

/// Search a generic proof among enumerated arrows.
pub fn generic_proof_search(
    c: &Category,
    budget: &Budget,
) -> Result<(Option<GenericProof>, Certificate)> {
    let arrows = c.arrows(budget)?;
    let mut checks = 0u64;
    for theta in &arrows.items {
        let (gp, cert) = certify_generic_proof(c, theta, budget)?;
        checks += cert.checks;
        if let Some(gp) = gp {
            let mut done = Certificate::new("generic-proof-search", &c.name(), budget, Verdict::Pass);
            done.checks = checks;
            done.witnesses = json!({
                "theta": format!("{:?}", gp.theta),
                "arrows_classified": gp.records.len(),
            });
            return Ok((Some(gp), done));
        }
    }
    let mut cert =
        Certificate::new("generic-proof-search", &c.name(), budget, Verdict::AbsentAtBudget);
    cert.checks = checks;
    cert.witnesses = json!({ "candidates_tried": arrows.items.len(), "fragment_exhausted": arrows.exhausted });
    Ok((None, cert))
}

/// The slice category inherits a generic proof: `id_X x theta` over `X`,
/// with both legs the projection to `X`.
pub fn slice_generic_proof(
    c: &Category,
    x: &Val,
    theta: &Arr,
    budget: &Budget,
) -> Result<(Option<GenericProof>, Certificate)> {
    let slice = super::slice::slice_category(c, x);
    let pt = c
        .product(x, &theta.dom)?
        .ok_or_else(|| crate::Error::Missing("product for slice generic proof".into()))?;
    let pl = c
        .product(x, &theta.cod)?
        .ok_or_else(|| crate::Error::Missing("product for slice generic proof".into()))?;
    // id_X x theta: mediating arrow into the codomain product
    let legs = vec![
        (pl.p1.clone(), pt.p1.clone()),
        (pl.p2.clone(), c.compose(&pt.p2, theta)?),
    ];
    let med = super::limits::mediating_arrows(c, &pt.obj, &pl.obj, &legs)?;
    let idx_theta = med
        .first()
        .ok_or_else(|| crate::Error::Missing("mediating arrow for id x theta".into()))?;
    let sl_dom = Val::tag("sl", vec![pt.obj.clone(), pt.p1.data.clone()]);
    let sl_cod = Val::tag("sl", vec![pl.obj.clone(), pl.p1.data.clone()]);
    let sl_theta = Arr::new(sl_dom, sl_cod, idx_theta.data.clone());
    certify_generic_proof(&slice, &sl_theta, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{poset_category, FinSet};
    use crate::order::FinPoset;

    #[test]
    fn one_object_category_identity_is_generic() {
        let c = poset_category("C1", &FinPoset::chain(&["*"])).unwrap();
        let b = Budget::default();
        let (gp, cert) = generic_proof_search(&c, &b).unwrap();
        assert!(cert.is_pass());
        assert!(gp.unwrap().theta.is_endo());
    }

    #[test]
    fn finset_has_generic_proof_at_budget() {
        let c = FinSet::category(&["0", "1"]);
        let b = Budget { max_competitors: 2000, ..Budget::default() };
        let (gp, cert) = generic_proof_search(&c, &b).unwrap();
        assert!(cert.is_pass(), "{:?}", cert);
        let gp = gp.unwrap();
        // the subset-classifying family: a point of a two-element set
        let theta_dom = FinSet::elements_of(&gp.theta.dom).unwrap();
        let theta_cod = FinSet::elements_of(&gp.theta.cod).unwrap();
        assert!(theta_dom.len() < theta_cod.len(), "theta must miss part of its codomain");
    }

    #[test]
    fn two_chain_poset_has_no_generic_proof() {
        let c = poset_category("P2", &FinPoset::chain(&["0", "1"])).unwrap();
        let b = Budget::default();
        let (gp, cert) = generic_proof_search(&c, &b).unwrap();
        assert!(gp.is_none());
        assert_eq!(cert.verdict, Verdict::AbsentAtBudget);
    }

    #[test]
    fn parallel_pair_category_reports_absent() {
        use crate::cat::{ArrRec, FinCategory};
        // two parallel non-isomorphic arrows into an object, no pullback
        // calculator succeeds, so classification fails and the search
        // records absence.
        let c = FinCategory::new(
            "par",
            vec!["U".into(), "V".into()],
            vec![
                ArrRec { id: "idU".into(), dom: "U".into(), cod: "U".into() },
                ArrRec { id: "idV".into(), dom: "V".into(), cod: "V".into() },
                ArrRec { id: "m1".into(), dom: "U".into(), cod: "V".into() },
                ArrRec { id: "m2".into(), dom: "U".into(), cod: "V".into() },
            ],
            &[
                ("idU".into(), "idU".into(), "idU".into()),
                ("idV".into(), "idV".into(), "idV".into()),
                ("idU".into(), "m1".into(), "m1".into()),
                ("m1".into(), "idV".into(), "m1".into()),
                ("idU".into(), "m2".into(), "m2".into()),
                ("m2".into(), "idV".into(), "m2".into()),
            ],
            [("U".to_string(), "idU".to_string()), ("V".to_string(), "idV".to_string())]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let (gp, cert) = generic_proof_search(&c, &Budget::default()).unwrap();
        assert!(gp.is_none());
        assert_eq!(cert.verdict, Verdict::AbsentAtBudget);
    }

    #[test]
    fn slice_inherits_generic_proof() {
        let c = FinSet::category(&["0", "1"]);
        let b = Budget { max_competitors: 2000, ..Budget::default() };
        let (gp, _) = generic_proof_search(&c, &b).unwrap();
        let theta = gp.unwrap().theta;
        let x = FinSet::object_from_atoms(&["0", "1"]);
        let (sgp, cert) = slice_generic_proof(&c, &x, &theta, &b).unwrap();
        assert!(cert.is_pass(), "{:?}", cert);
        assert!(sgp.is_some());
    }
}
