use super::core::{Arr, CatImpl, Category, EqualizerCone, ProductCone, PullbackCone};

use crate::budget::{Budget, Enumeration};
use crate::order::FinPoset;
use crate::val::Val;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A category presented by explicit tables: objects, arrow records and a
/// composition table. Associativity and the identity laws are checked on
/// construction; limits are found by exhaustive search and cached.
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    arrows: Vec<ArrRec>,
    /// `comp[(f, g)] = g . f` for composable `f: A -> B`, `g: B -> C`.
    comp: BTreeMap<(String, String), String>,
    idents: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrRec {
    pub id: String,
    pub dom: String,
    pub cod: String,
}

impl FinCategory {
    pub fn new(
        name: &str,
        objects: Vec<String>,
        arrows: Vec<ArrRec>,
        comp_triples: &[(String, String, String)],
        idents: BTreeMap<String, String>,
    ) -> Result<Category> {
        let mut comp = BTreeMap::new();
        for (f, g, h) in comp_triples {
            comp.insert((f.clone(), g.clone()), h.clone());
        }
        let cat = FinCategory { name: name.to_string(), objects, arrows, comp, idents };
        cat.validate()?;
        Ok(Category::new(Arc::new(cat)))
    }

    fn rec(&self, id: &str) -> Result<&ArrRec> {
        self.arrows
            .iter()
            .find(|a| a.id == id)
            .ok_or_else(|| Error::Unresolved(format!("arrow {id}")))
    }

    fn validate(&self) -> Result<()> {
        for (i, o) in self.objects.iter().enumerate() {
            if self.objects[..i].contains(o) {
                return Err(Error::Invalid(format!("duplicate object {o}")));
            }
            let id = self
                .idents
                .get(o)
                .ok_or_else(|| Error::Invalid(format!("object {o} has no identity")))?;
            let rec = self.rec(id)?;
            if rec.dom != *o || rec.cod != *o {
                return Err(Error::Invalid(format!("identity of {o} is not an endo-arrow")));
            }
        }
        // composition defined exactly on composable pairs
        for f in &self.arrows {
            for g in &self.arrows {
                let defined = self.comp.contains_key(&(f.id.clone(), g.id.clone()));
                if (f.cod == g.dom) != defined {
                    return Err(Error::Invalid(format!(
                        "composition table wrong on pair ({}, {})",
                        f.id, g.id
                    )));
                }
                if defined {
                    let h = self.rec(&self.comp[&(f.id.clone(), g.id.clone())])?;
                    if h.dom != f.dom || h.cod != g.cod {
                        return Err(Error::Invalid(format!(
                            "composite of ({}, {}) has wrong endpoints",
                            f.id, g.id
                        )));
                    }
                }
            }
        }
        // identity laws
        for f in &self.arrows {
            let idd = &self.idents[&f.dom];
            let idc = &self.idents[&f.cod];
            if self.comp[&(idd.clone(), f.id.clone())] != f.id
                || self.comp[&(f.id.clone(), idc.clone())] != f.id
            {
                return Err(Error::Invalid(format!("identity law fails at {}", f.id)));
            }
        }
        // associativity
        for f in &self.arrows {
            for g in &self.arrows {
                if f.cod != g.dom {
                    continue;
                }
                for h in &self.arrows {
                    if g.cod != h.dom {
                        continue;
                    }
                    let fg = self.comp[&(f.id.clone(), g.id.clone())].clone();
                    let gh = self.comp[&(g.id.clone(), h.id.clone())].clone();
                    if self.comp[&(fg, h.id.clone())] != self.comp[&(f.id.clone(), gh)] {
                        return Err(Error::Invalid(format!(
                            "associativity fails at ({}, {}, {})",
                            f.id, g.id, h.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn arr(&self, rec: &ArrRec) -> Arr {
        Arr::new(Val::sym(rec.dom.clone()), Val::sym(rec.cod.clone()), Val::sym(rec.id.clone()))
    }


    /// Exhaustive universal-property searches; presented categories are tiny.
    fn search_terminal(&self) -> Option<Val> {
        self.objects
            .iter()
            .find(|t| {
                self.objects.iter().all(|x| {
                    self.arrows.iter().filter(|a| a.dom == **x && a.cod == **t).count() == 1
                })
            })
            .map(|t| Val::sym(t.clone()))
    }

    fn hom_ids(&self, a: &str, b: &str) -> Vec<&ArrRec> {
        self.arrows.iter().filter(|r| r.dom == a && r.cod == b).collect()
    }

    fn search_product(&self, a: &str, b: &str) -> Option<ProductCone> {
        for p in &self.objects {
            for p1 in self.hom_ids(p, a) {
                for p2 in self.hom_ids(p, b) {
                    if self.is_product(p, p1, p2) {
                        return Some(ProductCone {
                            obj: Val::sym(p.clone()),
                            p1: self.arr(p1),
                            p2: self.arr(p2),
                        });
                    }
                }
            }
        }
        None
    }

    fn is_product(&self, p: &str, p1: &ArrRec, p2: &ArrRec) -> bool {
        for x in &self.objects {
            for f in self.hom_ids(x, &p1.cod) {
                for g in self.hom_ids(x, &p2.cod) {
                    let mediators = self
                        .hom_ids(x, p)
                        .into_iter()
                        .filter(|u| {
                            self.comp[&(u.id.clone(), p1.id.clone())] == f.id
                                && self.comp[&(u.id.clone(), p2.id.clone())] == g.id
                        })
                        .count();
                    if mediators != 1 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search_equalizer(&self, f: &Arr, g: &Arr) -> Option<EqualizerCone> {
        let (fd, gd) = (f.data.as_sym()?, g.data.as_sym()?);
        let a = f.dom.as_sym()?;
        for e in &self.objects {
            for incl in self.hom_ids(e, a) {
                if self.comp[&(incl.id.clone(), fd.to_string())]
                    != self.comp[&(incl.id.clone(), gd.to_string())]
                {
                    continue;
                }
                let ok = self.objects.iter().all(|x| {
                    self.hom_ids(x, a)
                        .into_iter()
                        .filter(|h| {
                            self.comp[&(h.id.clone(), fd.to_string())]
                                == self.comp[&(h.id.clone(), gd.to_string())]
                        })
                        .all(|h| {
                            self.hom_ids(x, e)
                                .into_iter()
                                .filter(|u| self.comp[&(u.id.clone(), incl.id.clone())] == h.id)
                                .count()
                                == 1
                        })
                });
                if ok {
                    return Some(EqualizerCone { obj: Val::sym(e.clone()), incl: self.arr(incl) });
                }
            }
        }
        None
    }
}

impl CatImpl for FinCategory {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn objects(&self, budget: &Budget) -> Result<Enumeration<Val>> {
        let mut items: Vec<Val> = self.objects.iter().map(|o| Val::sym(o.clone())).collect();
        items.sort();
        let exhausted = items.len() > budget.max_objects;
        items.truncate(budget.max_objects);
        Ok(Enumeration::capped(items, exhausted))
    }

    fn hom(&self, a: &Val, b: &Val) -> Result<Vec<Arr>> {
        let (a, b) = (
            a.as_sym().ok_or_else(|| Error::Invalid("bad object".into()))?,
            b.as_sym().ok_or_else(|| Error::Invalid("bad object".into()))?,
        );
        let mut v: Vec<Arr> = self.hom_ids(a, b).into_iter().map(|r| self.arr(r)).collect();
        v.sort();
        Ok(v)
    }

    fn identity(&self, a: &Val) -> Result<Arr> {
        let a = a.as_sym().ok_or_else(|| Error::Invalid("bad object".into()))?;
        let id = self
            .idents
            .get(a)
            .ok_or_else(|| Error::Unresolved(format!("object {a}")))?;
        Ok(self.arr(self.rec(id)?))
    }

    fn compose(&self, f: &Arr, g: &Arr) -> Result<Arr> {
        let (fi, gi) = (
            f.data.as_sym().ok_or_else(|| Error::Invalid("bad arrow".into()))?,
            g.data.as_sym().ok_or_else(|| Error::Invalid("bad arrow".into()))?,
        );
        let h = self
            .comp
            .get(&(fi.to_string(), gi.to_string()))
            .ok_or_else(|| Error::Invalid(format!("({fi}, {gi}) not composable")))?;
        Ok(self.arr(self.rec(h)?))
    }

    fn terminal(&self) -> Result<Option<Val>> {
        Ok(self.search_terminal())
    }

    fn product(&self, a: &Val, b: &Val) -> Result<Option<ProductCone>> {
        let (a, b) = (
            a.as_sym().ok_or_else(|| Error::Invalid("bad object".into()))?,
            b.as_sym().ok_or_else(|| Error::Invalid("bad object".into()))?,
        );
        Ok(self.search_product(a, b))
    }

    fn equalizer(&self, f: &Arr, g: &Arr) -> Result<Option<EqualizerCone>> {
        Ok(self.search_equalizer(f, g))
    }

    fn pullback(&self, f: &Arr, g: &Arr) -> Result<Option<PullbackCone>> {
        // product of domains then equalizer of the two composites
        let prod = match self.product(&f.dom, &g.dom)? {
            Some(p) => p,
            None => return Ok(None),
        };
        let left = self.compose(&prod.p1, f)?;
        let right = self.compose(&prod.p2, g)?;
        let eq = match self.equalizer(&left, &right)? {
            Some(e) => e,
            None => return Ok(None),
        };
        Ok(Some(PullbackCone {
            p1: self.compose(&eq.incl, &prod.p1)?,
            p2: self.compose(&eq.incl, &prod.p2)?,
            obj: eq.obj,
        }))
    }
}

/// The category of a finite poset: one object per element, one arrow per
/// comparability. Products are meets and the terminal object is the top, so
/// meet-semilattices with top present lex categories.
pub fn poset_category(name: &str, p: &FinPoset) -> Result<Category> {
    let objects: Vec<String> = p.elems().to_vec();
    let mut arrows = Vec::new();
    let mut idents = BTreeMap::new();
    let arrow_id = |i: usize, j: usize| format!("{}<={}", p.name(i), p.name(j));
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.le(i, j) {
                arrows.push(ArrRec { id: arrow_id(i, j), dom: p.name(i).into(), cod: p.name(j).into() });
                if i == j {
                    idents.insert(p.name(i).to_string(), arrow_id(i, j));
                }
            }
        }
    }
    let mut comp = Vec::new();
    for i in 0..p.len() {
        for j in 0..p.len() {
            for k in 0..p.len() {
                if p.le(i, j) && p.le(j, k) {
                    comp.push((arrow_id(i, j), arrow_id(j, k), arrow_id(i, k)));
                }
            }
        }
    }
    FinCategory::new(name, objects, arrows, &comp, idents)
}

/// Present the category of a finite group action on named sets: objects are
/// the given action tables, arrows all equivariant maps, composition computed
/// concretely and then frozen into tables. Used for engineered bases where
/// epis need not split.
pub struct ActionSet {
    pub name: String,
    pub elems: Vec<String>,
    /// Image of each element under the group generator.
    pub gen_action: Vec<usize>,
}

pub fn equivariant_category(name: &str, sets: &[ActionSet]) -> Result<Category> {
    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    let mut idents = BTreeMap::new();
    let mut tables: Vec<(String, String, Vec<usize>, String)> = Vec::new(); // dom, cod, table, id

    for s in sets {
        objects.push(s.name.clone());
    }
    for a in sets {
        for b in sets {
            if b.elems.is_empty() && !a.elems.is_empty() {
                continue; // no maps into the empty set
            }
            // all equivariant maps a -> b by exhaustive scan
            let mut idx = vec![0usize; a.elems.len()];
            let empty_dom = a.elems.is_empty();
            loop {
                let equivariant = (0..a.elems.len())
                    .all(|i| idx[a.gen_action[i]] == b.gen_action[idx[i]]);
                if equivariant && (!b.elems.is_empty() || empty_dom) {
                    let id = format!(
                        "{}->{}[{}]",
                        a.name,
                        b.name,
                        idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
                    );
                    let is_id = a.name == b.name && idx.iter().enumerate().all(|(i, &t)| i == t);
                    if is_id {
                        idents.insert(a.name.clone(), id.clone());
                    }
                    arrows.push(ArrRec { id: id.clone(), dom: a.name.clone(), cod: b.name.clone() });
                    tables.push((a.name.clone(), b.name.clone(), idx.clone(), id));
                }
                if empty_dom || b.elems.is_empty() {
                    break;
                }
                let mut k = a.elems.len();
                let mut done = false;
                loop {
                    if k == 0 {
                        done = true;
                        break;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < b.elems.len() {
                        break;
                    }
                    idx[k] = 0;
                    if k == 0 {
                        done = true;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
        }
    }
    let mut comp = Vec::new();
    for (fd, fc, ft, fi) in &tables {
        for (gd, gc, gt, gi) in &tables {
            if fc != gd {
                continue;
            }
            let ht: Vec<usize> = ft.iter().map(|&i| gt[i]).collect();
            let h = tables
                .iter()
                .find(|(hd, hc, t, _)| hd == fd && hc == gc && *t == ht)
                .map(|(_, _, _, id)| id.clone())
                .ok_or_else(|| Error::Invalid("composite not in table".into()))?;
            comp.push((fi.clone(), gi.clone(), h));
        }
    }
    FinCategory::new(name, objects, arrows, &comp, idents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::FinPoset;

    pub fn one_object_category() -> Category {
        FinCategory::new(
            "C1",
            vec!["*".into()],
            vec![ArrRec { id: "id".into(), dom: "*".into(), cod: "*".into() }],
            &[("id".into(), "id".into(), "id".into())],
            [("*".to_string(), "id".to_string())].into_iter().collect(),
        )
        .unwrap()
    }

    #[test]
    fn one_object_category_has_terminal() {
        let c = one_object_category();
        assert_eq!(c.terminal().unwrap(), Some(Val::sym("*")));
    }

    #[test]
    fn poset_category_products_are_meets() {
        let p = FinPoset::chain(&["0", "1"]);
        let c = poset_category("P2", &p).unwrap();
        let prod = c.product(&Val::sym("0"), &Val::sym("1")).unwrap().unwrap();
        assert_eq!(prod.obj, Val::sym("0"));
        assert_eq!(c.terminal().unwrap(), Some(Val::sym("1")));
        // pullback of 0 <= 1 <- 1 is 0
        let f = c.hom(&Val::sym("0"), &Val::sym("1")).unwrap()[0].clone();
        let g = c.identity(&Val::sym("1")).unwrap();
        let pb = c.pullback(&f, &g).unwrap().unwrap();
        assert_eq!(pb.obj, Val::sym("0"));
    }

    #[test]
    fn broken_identity_law_rejected() {
        let r = FinCategory::new(
            "bad",
            vec!["*".into()],
            vec![
                ArrRec { id: "id".into(), dom: "*".into(), cod: "*".into() },
                ArrRec { id: "e".into(), dom: "*".into(), cod: "*".into() },
            ],
            &[
                ("id".into(), "id".into(), "id".into()),
                ("id".into(), "e".into(), "e".into()),
                ("e".into(), "id".into(), "id".into()), // wrong: should be e
                ("e".into(), "e".into(), "e".into()),
            ],
            [("*".to_string(), "id".to_string())].into_iter().collect(),
        );
        assert!(r.is_err());
    }

    #[test]
    fn z2_orbit_category_builds() {
        // empty, fixed point, free orbit
        let c = equivariant_category(
            "zorb",
            &[
                ActionSet { name: "0".into(), elems: vec![], gen_action: vec![] },
                ActionSet { name: "1".into(), elems: vec!["p".into()], gen_action: vec![0] },
                ActionSet {
                    name: "F".into(),
                    elems: vec!["x".into(), "y".into()],
                    gen_action: vec![1, 0],
                },
                ActionSet {
                    name: "FF".into(),
                    // F x F: (x,x),(x,y),(y,x),(y,y); swap acts diagonally
                    elems: vec!["xx".into(), "xy".into(), "yx".into(), "yy".into()],
                    gen_action: vec![3, 2, 1, 0],
                },
            ],
        )
        .unwrap();
        // no equivariant point of the free orbit
        assert_eq!(c.hom(&Val::sym("1"), &Val::sym("F")).unwrap().len(), 0);
        // two equivariant endo-maps of F: id and swap
        assert_eq!(c.hom(&Val::sym("F"), &Val::sym("F")).unwrap().len(), 2);
        // terminal object is the fixed point
        assert_eq!(c.terminal().unwrap(), Some(Val::sym("1")));
        // product F x F is found by search
        let p = c.product(&Val::sym("F"), &Val::sym("F")).unwrap().unwrap();
        assert_eq!(p.obj, Val::sym("FF"));
    }
}
