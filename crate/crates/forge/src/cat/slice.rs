use super::core::{Arr, CatImpl, Category, Concrete, EqualizerCone, ProductCone, PullbackCone};
use crate::budget::{Budget, Enumeration};
use crate::val::Val;
use crate::{Error, Result};
use std::sync::Arc;

/// Slice category `c / x`: objects are arrows into `x`, morphisms are
/// commuting triangles, limits derived from pullbacks in `c`.
pub fn slice_category(c: &Category, x: &Val) -> Category {
    Category::new(Arc::new(Slice { base: c.clone(), apex: x.clone() }))
}

struct Slice {
    base: Category,
    apex: Val,
}

impl Slice {
    fn pack(&self, f: &Arr) -> Val {
        Val::tag("sl", vec![f.dom.clone(), f.data.clone()])
    }

    fn unpack(&self, o: &Val) -> Result<Arr> {
        let parts = o.untag("sl").ok_or_else(|| Error::Invalid(format!("not a slice object: {o}")))?;
        Ok(Arr::new(parts[0].clone(), self.apex.clone(), parts[1].clone()))
    }
}

impl CatImpl for Slice {
    fn name(&self) -> String {
        format!("{}/{}", self.base.name(), self.apex)
    }

    fn objects(&self, budget: &Budget) -> Result<Enumeration<Val>> {
        let objs = self.base.objects(budget)?;
        let mut out = Vec::new();
        let mut exhausted = objs.exhausted;
        'outer: for a in &objs.items {
            for f in self.base.hom(a, &self.apex)?.iter() {
                if out.len() >= budget.max_objects {
                    exhausted = true;
                    break 'outer;
                }
                out.push(self.pack(f));
            }
        }
        out.sort();
        Ok(Enumeration::capped(out, exhausted))
    }

    fn hom(&self, a: &Val, b: &Val) -> Result<Vec<Arr>> {
        let fa = self.unpack(a)?;
        let fb = self.unpack(b)?;
        let mut out = Vec::new();
        for h in self.base.hom(&fa.dom, &fb.dom)?.iter() {
            if self.base.compose(h, &fb)? == fa {
                out.push(Arr::new(a.clone(), b.clone(), h.data.clone()));
            }
        }
        Ok(out)
    }

    fn identity(&self, a: &Val) -> Result<Arr> {
        let fa = self.unpack(a)?;
        let id = self.base.identity(&fa.dom)?;
        Ok(Arr::new(a.clone(), a.clone(), id.data))
    }

    fn compose(&self, f: &Arr, g: &Arr) -> Result<Arr> {
        let uf = self.base_arrow(f)?;
        let ug = self.base_arrow(g)?;
        let h = self.base.compose(&uf, &ug)?;
        Ok(Arr::new(f.dom.clone(), g.cod.clone(), h.data))
    }

    fn terminal(&self) -> Result<Option<Val>> {
        let id = self.base.identity(&self.apex)?;
        Ok(Some(self.pack(&id)))
    }

    fn product(&self, a: &Val, b: &Val) -> Result<Option<ProductCone>> {
        let fa = self.unpack(a)?;
        let fb = self.unpack(b)?;
        let pb = match self.base.pullback(&fa, &fb)? {
            Some(p) => p,
            None => return Ok(None),
        };
        let to_apex = self.base.compose(&pb.p1, &fa)?;
        let o = self.pack(&to_apex);
        Ok(Some(ProductCone {
            p1: Arr::new(o.clone(), a.clone(), pb.p1.data),
            p2: Arr::new(o.clone(), b.clone(), pb.p2.data),
            obj: o,
        }))
    }

    fn equalizer(&self, f: &Arr, g: &Arr) -> Result<Option<EqualizerCone>> {
        let uf = self.base_arrow(f)?;
        let ug = self.base_arrow(g)?;
        let eq = match self.base.equalizer(&uf, &ug)? {
            Some(e) => e,
            None => return Ok(None),
        };
        let fd = self.unpack(&f.dom)?;
        let to_apex = self.base.compose(&eq.incl, &fd)?;
        let o = self.pack(&to_apex);
        Ok(Some(EqualizerCone { incl: Arr::new(o.clone(), f.dom.clone(), eq.incl.data), obj: o }))
    }

    fn pullback(&self, f: &Arr, g: &Arr) -> Result<Option<PullbackCone>> {
        let uf = self.base_arrow(f)?;
        let ug = self.base_arrow(g)?;
        let pb = match self.base.pullback(&uf, &ug)? {
            Some(p) => p,
            None => return Ok(None),
        };
        let fd = self.unpack(&f.dom)?;
        let to_apex = self.base.compose(&pb.p1, &fd)?;
        let o = self.pack(&to_apex);
        Ok(Some(PullbackCone {
            p1: Arr::new(o.clone(), f.dom.clone(), pb.p1.data),
            p2: Arr::new(o.clone(), g.dom.clone(), pb.p2.data),
            obj: o,
        }))
    }

    fn concrete(&self) -> Option<&dyn Concrete> {
        if self.base.concrete().is_some() {
            Some(self)
        } else {
            None
        }
    }

    fn section_search(
        &self,
        f: &Arr,
        g: &Arr,
        extra: &dyn Fn(&Val, &Val) -> bool,
    ) -> Result<Option<Option<Arr>>> {
        let uf = self.base_arrow(f)?;
        let ug = self.base_arrow(g)?;
        match self.base.section_search(&uf, &ug, extra)? {
            None => Ok(None),
            Some(None) => Ok(Some(None)),
            Some(Some(h)) => {
                // the section lives over the apex automatically: g . h = f
                Ok(Some(Some(Arr::new(f.dom.clone(), g.dom.clone(), h.data))))
            }
        }
    }
}

impl Slice {
    /// The underlying base arrow of a slice morphism.
    fn base_arrow(&self, f: &Arr) -> Result<Arr> {
        let d = self.unpack(&f.dom)?;
        let c = self.unpack(&f.cod)?;
        Ok(Arr::new(d.dom, c.dom, f.data.clone()))
    }
}

impl Concrete for Slice {
    fn elements(&self, o: &Val) -> Result<Vec<Val>> {
        let f = self.unpack(o)?;
        self.base.concrete().expect("checked").elements(&f.dom)
    }

    fn apply(&self, f: &Arr, x: &Val) -> Result<Val> {
        let uf = self.base_arrow(f)?;
        self.base.concrete().expect("checked").apply(&uf, x)
    }

    fn arrow_from_table(&self, dom: &Val, cod: &Val, table: &[(Val, Val)]) -> Result<Option<Arr>> {
        let fd = self.unpack(dom)?;
        let fc = self.unpack(cod)?;
        let conc = self.base.concrete().expect("checked");
        match conc.arrow_from_table(&fd.dom, &fc.dom, table)? {
            None => Ok(None),
            Some(h) => {
                if self.base.compose(&h, &fc)? == fd {
                    Ok(Some(Arr::new(dom.clone(), cod.clone(), h.data)))
                } else {
                    Ok(None)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::FinSet;

    #[test]
    fn slice_over_terminal_mirrors_base() {
        let c = FinSet::category(&["0", "1"]);
        let one = FinSet::object_from_atoms(&["0"]);
        let s = slice_category(&c, &one);
        let b = Budget::default();
        // every base object contributes exactly one arrow into the 1-element set,
        // except the empty set which contributes one too
        let objs = s.objects(&b).unwrap();
        assert_eq!(objs.items.len(), c.objects(&b).unwrap().items.len());
        let t = s.terminal().unwrap().unwrap();
        for o in &objs.items {
            assert_eq!(s.hom(o, &t).unwrap().len(), 1);
        }
    }

    #[test]
    fn slice_product_is_base_pullback() {
        let c = FinSet::category(&["0", "1"]);
        let x = FinSet::object_from_atoms(&["0", "1"]);
        let s = slice_category(&c, &x);
        let b = Budget::default();
        let objs = s.objects(&b).unwrap();
        // pick the identity-on-x slice object; product with itself has apex x
        let idx = s.terminal().unwrap().unwrap();
        assert!(objs.items.contains(&idx));
        let p = s.product(&idx, &idx).unwrap().unwrap();
        let hom = s.hom(&p.obj, &idx).unwrap();
        assert!(!hom.is_empty());
    }
}
