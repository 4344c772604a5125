use super::functor::{validate_functor, Functor};
use crate::budget::Budget;
use crate::cert::{Certificate, Verdict};
use crate::Result;
use serde_json::json;

/// Certify a functor as an equivalence at budget: faithful and full on every
/// enumerated hom-set, and essentially surjective on every enumerated
/// codomain object. Essential surjectivity prefers the functor's constructive
/// witness and falls back to isomorphism search.
pub fn equivalence_check(f: &Functor, budget: &Budget) -> Result<Certificate> {
    let laws = validate_functor(f, budget)?;
    if !laws.is_pass() {
        return Ok(Certificate::combine("equivalence", &f.dom.name(), budget, vec![laws]));
    }

    let dom_objs = f.dom.objects(budget)?;
    let mut checks = laws.checks;
    let mut parts = vec![laws];

    // faithful + full per enumerated hom-set
    let mut hom_pairs = 0usize;
    for a in &dom_objs.items {
        for b in &dom_objs.items {
            let (fa, fb) = (f.on_obj(a)?, f.on_obj(b)?);
            let dom_hom = f.dom.hom(a, b)?;
            let cod_hom = f.cod.hom(&fa, &fb)?;
            hom_pairs += 1;
            let mut images = Vec::new();
            for u in dom_hom.iter() {
                images.push((u.clone(), f.on_arr(u)?));
            }
            checks += (dom_hom.len() * dom_hom.len()) as u64;
            for (i, (u, fu)) in images.iter().enumerate() {
                for (v, fv) in images.iter().skip(i + 1) {
                    if fu == fv && u != v {
                        let mut c = Certificate::fail(
                            "faithful",
                            &f.dom.name(),
                            budget,
                            json!({
                                "hom": [a.to_string(), b.to_string()],
                                "arrows": [u.data.to_string(), v.data.to_string()]
                            }),
                        );
                        c.checks = checks;
                        parts.push(c);
                        return Ok(Certificate::combine("equivalence", &f.dom.name(), budget, parts));
                    }
                }
            }
            for w in cod_hom.iter() {
                checks += 1;
                if !images.iter().any(|(_, fu)| fu == w) {
                    let mut c = Certificate::fail(
                        "full",
                        &f.dom.name(),
                        budget,
                        json!({
                            "hom": [fa.to_string(), fb.to_string()],
                            "unmatched_arrow": w.data.to_string()
                        }),
                    );
                    c.checks = checks;
                    parts.push(c);
                    return Ok(Certificate::combine("equivalence", &f.dom.name(), budget, parts));
                }
            }
        }
    }
    parts.push(
        Certificate::pass("faithful", &f.dom.name(), budget).with_checks(0),
    );
    parts.push(Certificate::pass("full", &f.dom.name(), budget).with_checks(0));

    // essential surjectivity over enumerated codomain objects
    let cod_objs = f.cod.objects(budget)?;
    let mut eso_constructive = 0usize;
    let mut eso_searched = 0usize;
    for y in &cod_objs.items {
        checks += 1;
        if let Some((x, fwd, bwd)) = f.eso_hint(y)? {
            // verify the hinted isomorphism really is one
            let fx = f.on_obj(&x)?;
            let ok = fwd.dom == fx
                && fwd.cod == *y
                && bwd.dom == *y
                && bwd.cod == fx
                && f.cod.compose(&fwd, &bwd)? == f.cod.identity(&fx)?
                && f.cod.compose(&bwd, &fwd)? == f.cod.identity(y)?;
            if ok {
                eso_constructive += 1;
                continue;
            }
            let mut c = Certificate::fail(
                "essentially-surjective",
                &f.dom.name(),
                budget,
                json!({ "object": y.to_string(), "hint_invalid": true }),
            );
            c.checks = checks;
            parts.push(c);
            return Ok(Certificate::combine("equivalence", &f.dom.name(), budget, parts));
        }
        let mut found = false;
        for x in &dom_objs.items {
            let fx = f.on_obj(x)?;
            if f.cod.iso(&fx, y)?.is_some() {
                found = true;
                break;
            }
        }
        eso_searched += 1;
        if !found {
            let mut c = Certificate::new(
                "essentially-surjective",
                &f.dom.name(),
                budget,
                Verdict::AbsentAtBudget,
            );
            c.witnesses = json!({ "unmatched_object": y.to_string() });
            c.checks = checks;
            parts.push(c);
            return Ok(Certificate::combine("equivalence", &f.dom.name(), budget, parts));
        }
    }
    let mut eso = Certificate::pass("essentially-surjective", &f.dom.name(), budget);
    eso.witnesses = json!({
        "constructive": eso_constructive,
        "searched": eso_searched,
        "cod_objects": cod_objs.items.len(),
        "fragment_exhausted": cod_objs.exhausted
    });
    parts.push(eso);

    let mut cert = Certificate::combine("equivalence", &f.dom.name(), budget, parts);
    cert.checks = checks;
    cert.witnesses = json!({ "hom_pairs": hom_pairs, "verdict_scope": "equivalence at budget" });
    Ok(cert)
}
