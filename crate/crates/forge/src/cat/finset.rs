use super::core::{
    checked_pow, Arr, CatImpl, Concrete, EqualizerCone, ExponentialCone, ProductCone, PullbackCone,
};
use crate::budget::{Budget, Enumeration};
use crate::val::Val;
use crate::{Error, Result};
use std::sync::Arc;

/// Bounded category of finite sets.
///
/// Enumerated objects are the subsets of a named atom universe up to the
/// budget's set size; limit and exponential calculators build derived objects
/// (pair sets, function-table sets) beyond the enumerated roster, so every
/// enumerated pair has an actual product. Arrows are all functions, stored as
/// element tables in domain order.
pub struct FinSet {
    universe: Vec<String>,
}

pub fn el_pair(a: &Val, b: &Val) -> Val {
    Val::pair(a.clone(), b.clone())
}

pub fn el_fn(table: &[(Val, Val)]) -> Val {
    let mut entries: Vec<Val> = table.iter().map(|(x, y)| Val::pair(x.clone(), y.clone())).collect();
    entries.sort();
    Val::tag("fn", entries)
}

fn obj(elems: Vec<Val>) -> Val {
    let mut e = elems;
    e.sort();
    e.dedup();
    Val::tag("set", e)
}

fn obj_elems(o: &Val) -> Result<&[Val]> {
    o.untag("set").ok_or_else(|| Error::Invalid(format!("not a finset object: {o}")))
}

fn fn_table(data: &Val) -> Result<Vec<(Val, Val)>> {
    let entries = data.untag("fn").ok_or_else(|| Error::Invalid(format!("not a function: {data}")))?;
    entries
        .iter()
        .map(|e| {
            let p = e.untag("pair").ok_or_else(|| Error::Invalid("bad table entry".into()))?;
            Ok((p[0].clone(), p[1].clone()))
        })
        .collect()
}

fn apply_table(data: &Val, x: &Val) -> Result<Val> {
    for e in data.untag("fn").ok_or_else(|| Error::Invalid("not a function".into()))? {
        if let Some(p) = e.untag("pair") {
            if &p[0] == x {
                return Ok(p[1].clone());
            }
        }
    }
    Err(Error::Invalid(format!("element {x} not in function domain")))
}

impl FinSet {
    pub fn category(universe: &[&str]) -> super::core::Category {
        super::core::Category::new(Arc::new(FinSet {
            universe: universe.iter().map(|s| s.to_string()).collect(),
        }))
    }

    pub fn object_from_atoms(atoms: &[&str]) -> Val {
        obj(atoms.iter().map(|a| Val::sym(*a)).collect())
    }

    pub fn object(elems: Vec<Val>) -> Val {
        obj(elems)
    }

    pub fn elements_of(o: &Val) -> Result<Vec<Val>> {
        Ok(obj_elems(o)?.to_vec())
    }

    pub fn arrow(dom: &Val, cod: &Val, table: Vec<(Val, Val)>) -> Result<Arr> {
        let de = obj_elems(dom)?;
        let ce = obj_elems(cod)?;
        if table.len() != de.len() {
            return Err(Error::Invalid("table length mismatch".into()));
        }
        for (x, y) in &table {
            if !de.contains(x) {
                return Err(Error::Invalid(format!("{x} not in domain")));
            }
            if !ce.contains(y) {
                return Err(Error::Invalid(format!("{y} not in codomain")));
            }
        }
        Ok(Arr::new(dom.clone(), cod.clone(), el_fn(&table)))
    }

    pub fn apply(f: &Arr, x: &Val) -> Result<Val> {
        apply_table(&f.data, x)
    }
}

impl CatImpl for FinSet {
    fn name(&self) -> String {
        format!("finset({})", self.universe.join(","))
    }

    fn objects(&self, budget: &Budget) -> Result<Enumeration<Val>> {
        let n = self.universe.len();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let set: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if set.len() <= budget.max_set_size {
                subsets.push(set);
            }
        }
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        let exhausted = subsets.len() > budget.max_objects;
        subsets.truncate(budget.max_objects);
        let items = subsets
            .into_iter()
            .map(|s| obj(s.into_iter().map(|i| Val::sym(self.universe[i].clone())).collect()))
            .collect();
        Ok(Enumeration::capped(items, exhausted))
    }

    fn hom(&self, a: &Val, b: &Val) -> Result<Vec<Arr>> {
        let de = obj_elems(a)?.to_vec();
        let ce = obj_elems(b)?.to_vec();
        if de.is_empty() {
            return Ok(vec![Arr::new(a.clone(), b.clone(), el_fn(&[]))]);
        }
        if ce.is_empty() {
            return Ok(Vec::new());
        }
        let count = checked_pow(ce.len(), de.len(), "finset hom-set")?;
        let mut out = Vec::with_capacity(count);
        let mut idx = vec![0usize; de.len()];
        loop {
            let table: Vec<(Val, Val)> =
                de.iter().enumerate().map(|(i, x)| (x.clone(), ce[idx[i]].clone())).collect();
            out.push(Arr::new(a.clone(), b.clone(), el_fn(&table)));
            let mut k = de.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < ce.len() {
                    break;
                }
                idx[k] = 0;
                if k == 0 {
                    out.sort();
                    return Ok(out);
                }
            }
        }
    }

    fn identity(&self, a: &Val) -> Result<Arr> {
        let table: Vec<(Val, Val)> = obj_elems(a)?.iter().map(|x| (x.clone(), x.clone())).collect();
        Ok(Arr::new(a.clone(), a.clone(), el_fn(&table)))
    }

    fn compose(&self, f: &Arr, g: &Arr) -> Result<Arr> {
        let table: Result<Vec<(Val, Val)>> = fn_table(&f.data)?
            .into_iter()
            .map(|(x, y)| Ok((x, apply_table(&g.data, &y)?)))
            .collect();
        Ok(Arr::new(f.dom.clone(), g.cod.clone(), el_fn(&table?)))
    }

    fn terminal(&self) -> Result<Option<Val>> {
        Ok(Some(obj(vec![Val::star()])))
    }

    fn product(&self, a: &Val, b: &Val) -> Result<Option<ProductCone>> {
        let ae = obj_elems(a)?;
        let be = obj_elems(b)?;
        let mut elems = Vec::new();
        let mut t1 = Vec::new();
        let mut t2 = Vec::new();
        for x in ae {
            for y in be {
                let p = el_pair(x, y);
                t1.push((p.clone(), x.clone()));
                t2.push((p.clone(), y.clone()));
                elems.push(p);
            }
        }
        let o = obj(elems);
        Ok(Some(ProductCone {
            p1: Arr::new(o.clone(), a.clone(), el_fn(&t1)),
            p2: Arr::new(o.clone(), b.clone(), el_fn(&t2)),
            obj: o,
        }))
    }

    fn equalizer(&self, f: &Arr, g: &Arr) -> Result<Option<EqualizerCone>> {
        let de = obj_elems(&f.dom)?;
        let kept: Vec<Val> = de
            .iter()
            .filter(|x| {
                apply_table(&f.data, x).ok() == apply_table(&g.data, x).ok()
            })
            .cloned()
            .collect();
        let table: Vec<(Val, Val)> = kept.iter().map(|x| (x.clone(), x.clone())).collect();
        let o = obj(kept);
        Ok(Some(EqualizerCone { incl: Arr::new(o.clone(), f.dom.clone(), el_fn(&table)), obj: o }))
    }

    fn pullback(&self, f: &Arr, g: &Arr) -> Result<Option<PullbackCone>> {
        let ae = obj_elems(&f.dom)?;
        let be = obj_elems(&g.dom)?;
        let mut elems = Vec::new();
        let mut t1 = Vec::new();
        let mut t2 = Vec::new();
        for x in ae {
            for y in be {
                if apply_table(&f.data, x)? == apply_table(&g.data, y)? {
                    let p = el_pair(x, y);
                    t1.push((p.clone(), x.clone()));
                    t2.push((p.clone(), y.clone()));
                    elems.push(p);
                }
            }
        }
        let o = obj(elems);
        Ok(Some(PullbackCone {
            p1: Arr::new(o.clone(), f.dom.clone(), el_fn(&t1)),
            p2: Arr::new(o.clone(), g.dom.clone(), el_fn(&t2)),
            obj: o,
        }))
    }

    fn exponential(&self, a: &Val, b: &Val) -> Result<Option<ExponentialCone>> {
        let maps = self.hom(a, b)?;
        let elems: Vec<Val> = maps.iter().map(|m| m.data.clone()).collect();
        let e = obj(elems);
        let prod = self.product(a, &e)?.expect("finset products are total");
        let mut ev_table = Vec::new();
        for p in obj_elems(&prod.obj)? {
            let pr = p.untag("pair").expect("product elements are pairs");
            ev_table.push((p.clone(), apply_table(&pr[1], &pr[0])?));
        }
        Ok(Some(ExponentialCone {
            ev: Arr::new(prod.obj.clone(), b.clone(), el_fn(&ev_table)),
            obj: e,
            prod,
        }))
    }

    fn concrete(&self) -> Option<&dyn Concrete> {
        Some(self)
    }

    fn section_search(
        &self,
        f: &Arr,
        g: &Arr,
        extra: &dyn Fn(&Val, &Val) -> bool,
    ) -> Result<Option<Option<Arr>>> {
        if f.cod != g.cod {
            return Err(Error::Invalid("section_search: codomain mismatch".into()));
        }
        let ge = obj_elems(&g.dom)?;
        let mut table = Vec::new();
        for x in obj_elems(&f.dom)? {
            let fx = apply_table(&f.data, x)?;
            let cand = ge
                .iter()
                .find(|c| apply_table(&g.data, c).map(|v| v == fx).unwrap_or(false) && extra(x, c));
            match cand {
                Some(c) => table.push((x.clone(), c.clone())),
                None => return Ok(Some(None)),
            }
        }
        Ok(Some(Some(Arr::new(f.dom.clone(), g.dom.clone(), el_fn(&table)))))
    }
}

impl Concrete for FinSet {
    fn elements(&self, o: &Val) -> Result<Vec<Val>> {
        Ok(obj_elems(o)?.to_vec())
    }

    fn apply(&self, f: &Arr, x: &Val) -> Result<Val> {
        apply_table(&f.data, x)
    }

    fn arrow_from_table(&self, dom: &Val, cod: &Val, table: &[(Val, Val)]) -> Result<Option<Arr>> {
        Ok(FinSet::arrow(dom, cod, table.to_vec()).ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn objects_of_two_atom_universe() {
        let c = FinSet::category(&["0", "1"]);
        let objs = c.objects(&Budget::default()).unwrap();
        assert_eq!(objs.items.len(), 4);
        assert!(!objs.exhausted);
    }

    #[test]
    fn hom_of_two_element_sets_has_four_arrows() {
        let c = FinSet::category(&["0", "1"]);
        let x = FinSet::object_from_atoms(&["0", "1"]);
        assert_eq!(c.hom(&x, &x).unwrap().len(), 4);
    }

    #[test]
    fn product_of_pairs_has_four_elements() {
        let c = FinSet::category(&["0", "1"]);
        let x = FinSet::object_from_atoms(&["0", "1"]);
        let p = c.product(&x, &x).unwrap().unwrap();
        assert_eq!(FinSet::elements_of(&p.obj).unwrap().len(), 4);
        // projections compose with identities correctly
        let id = c.identity(&p.obj).unwrap();
        assert_eq!(c.compose(&id, &p.p1).unwrap(), p.p1);
    }

    #[test]
    fn pullback_of_equal_constants_is_product_of_domains() {
        let c = FinSet::category(&["0", "1"]);
        let x = FinSet::object_from_atoms(&["0", "1"]);
        let y = FinSet::object_from_atoms(&["0"]);
        let konst = |dom: &Val| {
            FinSet::arrow(
                dom,
                &y,
                FinSet::elements_of(dom)
                    .unwrap()
                    .into_iter()
                    .map(|e| (e, Val::sym("0")))
                    .collect(),
            )
            .unwrap()
        };
        let pb = c.pullback(&konst(&x), &konst(&x)).unwrap().unwrap();
        let prod = c.product(&x, &x).unwrap().unwrap();
        // subset-of-product oracle: equal-value constants keep every pair
        assert_eq!(pb.obj, prod.obj);
    }

    #[test]
    fn exponential_evaluates() {
        let c = FinSet::category(&["0", "1"]);
        let x = FinSet::object_from_atoms(&["0", "1"]);
        let e = c.exponential(&x, &x).unwrap().unwrap();
        assert_eq!(FinSet::elements_of(&e.obj).unwrap().len(), 4);
        // ev(x, id-table) = x
        let id_table = el_fn(&[
            (Val::sym("0"), Val::sym("0")),
            (Val::sym("1"), Val::sym("1")),
        ]);
        let at = el_pair(&Val::sym("1"), &id_table);
        assert_eq!(FinSet::apply(&e.ev, &at).unwrap(), Val::sym("1"));
    }

    #[test]
    fn associativity_on_sample() {
        let c = FinSet::category(&["0", "1"]);
        let x = FinSet::object_from_atoms(&["0", "1"]);
        let arrows = c.hom(&x, &x).unwrap();
        for f in arrows.iter() {
            for g in arrows.iter() {
                for h in arrows.iter() {
                    let lhs = c.compose(&c.compose(f, g).unwrap(), h).unwrap();
                    let rhs = c.compose(f, &c.compose(g, h).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
