use super::core::{Arr, Category};
use crate::budget::Budget;
use crate::cert::{Certificate, Verdict};
use crate::val::Val;
use crate::Result;
use serde_json::json;

/// All arrows `u: x -> apex` with `leg . u = given` for every (leg, given)
/// constraint pair, found by scanning `hom(x, apex)`.
pub fn mediating_arrows(
    c: &Category,
    x: &Val,
    apex: &Val,
    constraints: &[(Arr, Arr)],
) -> Result<Vec<Arr>> {
    let mut out = Vec::new();
    for u in c.hom(x, apex)?.iter() {
        let mut ok = true;
        for (leg, given) in constraints {
            if &c.compose(u, leg)? != given {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(u.clone());
        }
    }
    Ok(out)
}

/// Certify the limit calculators of a category on the budgeted fragment:
/// every returned cone is checked for commutation and for existence and
/// uniqueness of mediating arrows against every enumerated competing cone.
pub fn limit_certificate(c: &Category, budget: &Budget) -> Result<Certificate> {
    let objs = c.objects(budget)?;
    let mut checks = 0u64;
    let mut tested = 0usize;
    let fail = |what: &str, detail: serde_json::Value| {
        Certificate::fail("limit-certificates", &c.name(), budget, json!({ "limit": what, "detail": detail }))
    };

    if let Some(t) = c.terminal()? {
        for x in &objs.items {
            checks += 1;
            let n = c.hom(x, &t)?.len();
            if n != 1 {
                return Ok(fail("terminal", json!({ "object": x.to_string(), "arrows": n })));
            }
        }
    }

    for a in &objs.items {
        for b in &objs.items {
            let cone = match c.product(a, b)? {
                Some(p) => p,
                None => continue,
            };
            for x in &objs.items {
                for f in c.hom(x, a)?.iter() {
                    for g in c.hom(x, b)?.iter() {
                        if tested >= budget.max_competitors {
                            let mut cert = Certificate::new(
                                "limit-certificates",
                                &c.name(),
                                budget,
                                Verdict::Pass,
                            );
                            cert.checks = checks;
                            cert.witnesses = json!({ "competitors_capped": true, "tested": tested });
                            return Ok(cert);
                        }
                        tested += 1;
                        checks += 1;
                        let meds = mediating_arrows(
                            c,
                            x,
                            &cone.obj,
                            &[(cone.p1.clone(), f.clone()), (cone.p2.clone(), g.clone())],
                        )?;
                        if meds.len() != 1 {
                            return Ok(fail(
                                "product",
                                json!({
                                    "pair": [a.to_string(), b.to_string()],
                                    "competitor": x.to_string(),
                                    "mediators": meds.len()
                                }),
                            ));
                        }
                    }
                }
            }
        }
    }

    // pullbacks over enumerated cospans
    'pb: for a in &objs.items {
        for b in &objs.items {
            for t in &objs.items {
                for f in c.hom(a, t)?.iter() {
                    for g in c.hom(b, t)?.iter() {
                        if tested >= budget.max_competitors {
                            break 'pb;
                        }
                        let cone = match c.pullback(f, g)? {
                            Some(p) => p,
                            None => continue,
                        };
                        checks += 1;
                        if c.compose(&cone.p1, f)? != c.compose(&cone.p2, g)? {
                            return Ok(fail(
                                "pullback-commutes",
                                json!({ "cospan": [f.data.to_string(), g.data.to_string()] }),
                            ));
                        }
                        for x in &objs.items {
                            for u in c.hom(x, a)?.iter() {
                                for v in c.hom(x, b)?.iter() {
                                    if c.compose(u, f)? != c.compose(v, g)? {
                                        continue;
                                    }
                                    tested += 1;
                                    checks += 1;
                                    let meds = mediating_arrows(
                                        c,
                                        x,
                                        &cone.obj,
                                        &[(cone.p1.clone(), u.clone()), (cone.p2.clone(), v.clone())],
                                    )?;
                                    if meds.len() != 1 {
                                        return Ok(fail(
                                            "pullback",
                                            json!({
                                                "cospan": [f.data.to_string(), g.data.to_string()],
                                                "competitor": x.to_string(),
                                                "mediators": meds.len()
                                            }),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let mut cert = Certificate::new("limit-certificates", &c.name(), budget, Verdict::Pass);
    cert.checks = checks;
    cert.witnesses =
        json!({ "objects": objs.items.len(), "tested_cones": tested, "fragment_exhausted": objs.exhausted });
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinSet;

    #[test]
    fn finset_limits_certify() {
        let c = FinSet::category(&["0", "1"]);
        let b = Budget { max_competitors: 4000, ..Budget::default() };
        let cert = limit_certificate(&c, &b).unwrap();
        assert!(cert.is_pass(), "{:?}", cert);
    }
}
