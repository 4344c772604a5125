use crate::budget::{Budget, Enumeration};
use crate::val::Val;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// An arrow of a bounded-enumerable category: domain and codomain objects
/// plus implementation-interpreted data.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arr {
    pub dom: Val,
    pub cod: Val,
    pub data: Val,
}

impl Arr {
    pub fn new(dom: Val, cod: Val, data: Val) -> Arr {
        Arr { dom, cod, data }
    }

    pub fn is_endo(&self) -> bool {
        self.dom == self.cod
    }
}

impl fmt::Debug for Arr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.data, self.dom, self.cod)
    }
}

#[derive(Clone, Debug)]
pub struct ProductCone {
    pub obj: Val,
    pub p1: Arr,
    pub p2: Arr,
}

#[derive(Clone, Debug)]
pub struct EqualizerCone {
    pub obj: Val,
    pub incl: Arr,
}

#[derive(Clone, Debug)]
pub struct PullbackCone {
    pub obj: Val,
    /// Projection to the domain of the first cospan leg.
    pub p1: Arr,
    /// Projection to the domain of the second cospan leg.
    pub p2: Arr,
}

#[derive(Clone, Debug)]
pub struct ExponentialCone {
    /// The object of maps `a -> b`.
    pub obj: Val,
    /// Evaluation `a x (b^a) -> b`; its domain is `prod.obj`.
    pub ev: Arr,
    pub prod: ProductCone,
}

/// Capability record for a bounded-enumerable category.
///
/// Composition is written diagrammatically: `compose(f, g)` with `f: A -> B`
/// and `g: B -> C` yields `A -> C`. Limit calculators return `None` when the
/// limit does not exist in the category and `Err(Budget)` when computing it
/// would exceed the implementation's bounds.
pub trait CatImpl: Send + Sync {
    fn name(&self) -> String;
    fn objects(&self, budget: &Budget) -> Result<Enumeration<Val>>;
    fn hom(&self, a: &Val, b: &Val) -> Result<Vec<Arr>>;
    fn identity(&self, a: &Val) -> Result<Arr>;
    fn compose(&self, f: &Arr, g: &Arr) -> Result<Arr>;

    fn terminal(&self) -> Result<Option<Val>> {
        Ok(None)
    }
    fn product(&self, _a: &Val, _b: &Val) -> Result<Option<ProductCone>> {
        Ok(None)
    }
    fn equalizer(&self, _f: &Arr, _g: &Arr) -> Result<Option<EqualizerCone>> {
        Ok(None)
    }
    /// Pullback of the cospan `f: A -> C <- B : g`.
    fn pullback(&self, _f: &Arr, _g: &Arr) -> Result<Option<PullbackCone>> {
        Ok(None)
    }
    fn exponential(&self, _a: &Val, _b: &Val) -> Result<Option<ExponentialCone>> {
        Ok(None)
    }

    /// Element-level view, for categories whose objects carry elements and
    /// whose arrows act as functions on them.
    fn concrete(&self) -> Option<&dyn Concrete> {
        None
    }

    /// Find an arrow `h: dom(f) -> dom(g)` with `g . h = f` and
    /// `extra(x, h(x))` for every element `x`, when the category can decide
    /// this pointwise. `None` means the capability is absent and the caller
    /// must fall back to a hom-set scan.
    fn section_search(
        &self,
        _f: &Arr,
        _g: &Arr,
        _extra: &dyn Fn(&Val, &Val) -> bool,
    ) -> Result<Option<Option<Arr>>> {
        Ok(None)
    }
}

/// Element-level capabilities of a concrete category.
pub trait Concrete: Send + Sync {
    fn elements(&self, o: &Val) -> Result<Vec<Val>>;
    fn apply(&self, f: &Arr, x: &Val) -> Result<Val>;
    /// Build the arrow with the given element table, if it is one.
    fn arrow_from_table(&self, dom: &Val, cod: &Val, table: &[(Val, Val)]) -> Result<Option<Arr>>;
}

/// Shared handle around a category implementation, with hom-set memoization.
#[derive(Clone)]
pub struct Category {
    imp: Arc<dyn CatImpl>,
    hom_cache: Arc<Mutex<BTreeMap<(Val, Val), Arc<Vec<Arr>>>>>,
}

impl Category {
    pub fn new(imp: Arc<dyn CatImpl>) -> Category {
        Category { imp, hom_cache: Arc::new(Mutex::new(BTreeMap::new())) }
    }

    pub fn name(&self) -> String {
        self.imp.name()
    }

    pub fn objects(&self, budget: &Budget) -> Result<Enumeration<Val>> {
        self.imp.objects(budget)
    }

    pub fn hom(&self, a: &Val, b: &Val) -> Result<Arc<Vec<Arr>>> {
        let key = (a.clone(), b.clone());
        if let Some(h) = self.hom_cache.lock().unwrap().get(&key) {
            return Ok(h.clone());
        }
        let h = Arc::new(self.imp.hom(a, b)?);
        self.hom_cache.lock().unwrap().insert(key, h.clone());
        Ok(h)
    }

    pub fn identity(&self, a: &Val) -> Result<Arr> {
        self.imp.identity(a)
    }

    /// Diagrammatic composition: `f: A -> B` then `g: B -> C`.
    pub fn compose(&self, f: &Arr, g: &Arr) -> Result<Arr> {
        if f.cod != g.dom {
            return Err(Error::Invalid(format!(
                "compose mismatch: cod {} vs dom {}",
                f.cod, g.dom
            )));
        }
        self.imp.compose(f, g)
    }

    /// `g . f . e` for a three-arrow chain, diagrammatic order.
    pub fn compose3(&self, e: &Arr, f: &Arr, g: &Arr) -> Result<Arr> {
        self.compose(&self.compose(e, f)?, g)
    }

    pub fn terminal(&self) -> Result<Option<Val>> {
        self.imp.terminal()
    }

    pub fn product(&self, a: &Val, b: &Val) -> Result<Option<ProductCone>> {
        self.imp.product(a, b)
    }

    pub fn equalizer(&self, f: &Arr, g: &Arr) -> Result<Option<EqualizerCone>> {
        self.imp.equalizer(f, g)
    }

    pub fn pullback(&self, f: &Arr, g: &Arr) -> Result<Option<PullbackCone>> {
        self.imp.pullback(f, g)
    }

    pub fn exponential(&self, a: &Val, b: &Val) -> Result<Option<ExponentialCone>> {
        self.imp.exponential(a, b)
    }

    pub fn concrete(&self) -> Option<&dyn Concrete> {
        self.imp.concrete()
    }

    pub fn section_search(
        &self,
        f: &Arr,
        g: &Arr,
        extra: &dyn Fn(&Val, &Val) -> bool,
    ) -> Result<Option<Option<Arr>>> {
        self.imp.section_search(f, g, extra)
    }

    /// All arrows between enumerated objects, in canonical order, capped by
    /// `budget.max_competitors`.
    pub fn arrows(&self, budget: &Budget) -> Result<Enumeration<Arr>> {
        let objs = self.objects(budget)?;
        let mut out = Vec::new();
        let mut exhausted = objs.exhausted;
        'outer: for a in &objs.items {
            for b in &objs.items {
                for f in self.hom(a, b)?.iter() {
                    if out.len() >= budget.max_competitors {
                        exhausted = true;
                        break 'outer;
                    }
                    out.push(f.clone());
                }
            }
        }
        Ok(Enumeration::capped(out, exhausted))
    }

    /// Does `f . g = id` and `g . f = id` for some `g`? Returns the inverse.
    pub fn inverse(&self, f: &Arr) -> Result<Option<Arr>> {
        let id_dom = self.identity(&f.dom)?;
        let id_cod = self.identity(&f.cod)?;
        for g in self.hom(&f.cod, &f.dom)?.iter() {
            if self.compose(f, g)? == id_dom && self.compose(g, f)? == id_cod {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    /// Search an isomorphism between two objects.
    pub fn iso(&self, a: &Val, b: &Val) -> Result<Option<(Arr, Arr)>> {
        for f in self.hom(a, b)?.iter() {
            if let Some(g) = self.inverse(f)? {
                return Ok(Some((f.clone(), g)));
            }
        }
        Ok(None)
    }
}

/// Guard for hom-set materialization in concrete categories.
pub(crate) fn checked_pow(base: usize, exp: usize, what: &str) -> Result<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or_else(|| Error::Budget(format!("{what} overflows")))?;
        if acc > 1_000_000 {
            return Err(Error::Budget(format!("{what} has more than 1e6 entries")));
        }
    }
    Ok(acc)
}
