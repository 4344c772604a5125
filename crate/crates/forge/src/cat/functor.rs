use super::core::{Arr, Category};
use crate::budget::Budget;
use crate::cert::{Certificate, Verdict};
use crate::val::Val;
use crate::Result;
use serde_json::json;
use std::sync::Arc;

pub trait FunctorImpl: Send + Sync {
    fn on_obj(&self, o: &Val) -> Result<Val>;
    fn on_arr(&self, f: &Arr) -> Result<Arr>;
    /// Constructive essential-surjectivity witness: for a codomain object,
    /// a preimage object together with the isomorphism pair, when the
    /// construction knows one. Searched blindly otherwise.
    fn eso_hint(&self, _cod_obj: &Val) -> Result<Option<(Val, Arr, Arr)>> {
        Ok(None)
    }
}

#[derive(Clone)]
pub struct Functor {
    pub dom: Category,
    pub cod: Category,
    imp: Arc<dyn FunctorImpl>,
}

impl Functor {
    pub fn new(dom: Category, cod: Category, imp: Arc<dyn FunctorImpl>) -> Functor {
        Functor { dom, cod, imp }
    }

    pub fn on_obj(&self, o: &Val) -> Result<Val> {
        self.imp.on_obj(o)
    }

    pub fn on_arr(&self, f: &Arr) -> Result<Arr> {
        self.imp.on_arr(f)
    }

    pub fn eso_hint(&self, o: &Val) -> Result<Option<(Val, Arr, Arr)>> {
        self.imp.eso_hint(o)
    }
}

struct IdFunctor;

impl FunctorImpl for IdFunctor {
    fn on_obj(&self, o: &Val) -> Result<Val> {
        Ok(o.clone())
    }

    fn on_arr(&self, f: &Arr) -> Result<Arr> {
        Ok(f.clone())
    }

    fn eso_hint(&self, o: &Val) -> Result<Option<(Val, Arr, Arr)>> {
        Ok(Some((o.clone(), Arr::new(o.clone(), o.clone(), Val::sym("id")), Arr::new(o.clone(), o.clone(), Val::sym("id")))))
    }
}

pub fn identity_functor(c: &Category) -> Functor {
    struct Id(Category);
    impl FunctorImpl for Id {
        fn on_obj(&self, o: &Val) -> Result<Val> {
            Ok(o.clone())
        }
        fn on_arr(&self, f: &Arr) -> Result<Arr> {
            Ok(f.clone())
        }
        fn eso_hint(&self, o: &Val) -> Result<Option<(Val, Arr, Arr)>> {
            let id = self.0.identity(o)?;
            Ok(Some((o.clone(), id.clone(), id)))
        }
    }
    let _ = IdFunctor; // keep the simplest shape around for doc purposes
    Functor::new(c.clone(), c.clone(), Arc::new(Id(c.clone())))
}

/// Check that a functor preserves identities and composition on the budgeted
/// fragment.
pub fn validate_functor(f: &Functor, budget: &Budget) -> Result<Certificate> {
    let objs = f.dom.objects(budget)?;
    let mut checks = 0u64;
    for o in &objs.items {
        let id = f.dom.identity(o)?;
        let fo = f.on_obj(o)?;
        let fid = f.on_arr(&id)?;
        checks += 1;
        if fid != f.cod.identity(&fo)? {
            return Ok(Certificate::fail(
                "functor-laws",
                &f.dom.name(),
                budget,
                json!({ "identity_broken_at": o.to_string() }),
            ));
        }
    }
    let mut tested = 0usize;
    'outer: for a in &objs.items {
        for b in &objs.items {
            for c in &objs.items {
                for u in f.dom.hom(a, b)?.iter() {
                    for v in f.dom.hom(b, c)?.iter() {
                        if tested >= budget.max_competitors {
                            break 'outer;
                        }
                        tested += 1;
                        checks += 1;
                        let lhs = f.on_arr(&f.dom.compose(u, v)?)?;
                        let rhs = f.cod.compose(&f.on_arr(u)?, &f.on_arr(v)?)?;
                        if lhs != rhs {
                            return Ok(Certificate::fail(
                                "functor-laws",
                                &f.dom.name(),
                                budget,
                                json!({
                                    "composition_broken_at": [u.data.to_string(), v.data.to_string()]
                                }),
                            ));
                        }
                    }
                }
            }
        }
    }
    let mut cert = Certificate::new("functor-laws", &f.dom.name(), budget, Verdict::Pass);
    cert.checks = checks;
    cert.witnesses = json!({ "objects": objs.items.len(), "composable_pairs": tested, "fragment_exhausted": objs.exhausted });
    Ok(cert)
}
