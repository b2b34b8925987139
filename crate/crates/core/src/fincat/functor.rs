//! Functors and natural transformations between composition-table categories.

use super::category::FinCategory;
use crate::error::{Error, Result, Violation};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub name: String,
    pub source: Arc<FinCategory>,
    pub target: Arc<FinCategory>,
    pub obj_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

impl FinFunctor {
    pub fn new(
        name: impl Into<String>,
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: Vec<usize>,
        mor_map: Vec<usize>,
    ) -> Result<FinFunctor> {
        if obj_map.len() != source.object_count() || mor_map.len() != source.morphism_count() {
            return Err(Error::schema("functor map lengths disagree with source"));
        }
        if obj_map.iter().any(|&o| o >= target.object_count())
            || mor_map.iter().any(|&m| m >= target.morphism_count())
        {
            return Err(Error::schema("functor maps into out-of-range cell"));
        }
        Ok(FinFunctor {
            name: name.into(),
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(cat: Arc<FinCategory>) -> FinFunctor {
        FinFunctor {
            name: format!("Id_{}", cat.name),
            source: cat.clone(),
            target: cat.clone(),
            obj_map: (0..cat.object_count()).collect(),
            mor_map: (0..cat.morphism_count()).collect(),
        }
    }

    pub fn on_obj(&self, x: usize) -> usize {
        self.obj_map[x]
    }

    pub fn on_mor(&self, f: usize) -> usize {
        self.mor_map[f]
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let c = &self.source;
        let d = &self.target;
        for f in c.morphism_indices() {
            let img = self.on_mor(f);
            if d.src(img) != self.on_obj(c.src(f)) || d.tgt(img) != self.on_obj(c.tgt(f)) {
                out.push(Violation::new(
                    "functor endpoint preservation",
                    &[c.mor_id(f), d.mor_id(img)],
                ));
            }
        }
        for x in c.object_indices() {
            if self.on_mor(c.identity(x)) != d.identity(self.on_obj(x)) {
                out.push(Violation::new(
                    "functor identity preservation",
                    &[c.object_id(x)],
                ));
            }
        }
        for f in c.morphism_indices() {
            for g in c.morphism_indices() {
                if c.tgt(f) != c.src(g) {
                    continue;
                }
                let Some(gf) = c.compose(g, f) else { continue };
                let Some(img) = d.compose(self.on_mor(g), self.on_mor(f)) else {
                    out.push(Violation::new(
                        "functor image not composable",
                        &[c.mor_id(g), c.mor_id(f)],
                    ));
                    continue;
                };
                if img != self.on_mor(gf) {
                    out.push(Violation::new(
                        "functor composition preservation",
                        &[c.mor_id(g), c.mor_id(f)],
                    ));
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<FinFunctor> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }

    /// g∘f with f applied first; sources/targets must match by content.
    pub fn compose(g: &FinFunctor, f: &FinFunctor) -> Result<FinFunctor> {
        if f.target.as_ref() != g.source.as_ref() {
            return Err(Error::not_applicable(format!(
                "cannot compose {} after {}: middle categories differ",
                g.name, f.name
            )));
        }
        Ok(FinFunctor {
            name: format!("{}∘{}", g.name, f.name),
            source: f.source.clone(),
            target: g.target.clone(),
            obj_map: f.obj_map.iter().map(|&x| g.on_obj(x)).collect(),
            mor_map: f.mor_map.iter().map(|&m| g.on_mor(m)).collect(),
        })
    }

    /// The opposite functor between the opposite categories (same tables).
    pub fn dualize(&self) -> FinFunctor {
        FinFunctor {
            name: match self.name.strip_suffix("^op") {
                Some(base) => base.to_string(),
                None => format!("{}^op", self.name),
            },
            source: Arc::new(self.source.dualize()),
            target: Arc::new(self.target.dualize()),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
        }
    }

    /// True when the two functors have identical tables between equal categories.
    pub fn same_tables(&self, other: &FinFunctor) -> bool {
        self.source.as_ref() == other.source.as_ref()
            && self.target.as_ref() == other.target.as_ref()
            && self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
    }
}

/// A natural transformation between parallel functors, as a component table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    pub name: String,
    pub from: FinFunctor,
    pub to: FinFunctor,
    /// components[x]: morphism of the target category F(x) -> G(x).
    pub components: Vec<usize>,
}

impl NatTrans {
    pub fn new(
        name: impl Into<String>,
        from: FinFunctor,
        to: FinFunctor,
        components: Vec<usize>,
    ) -> Result<NatTrans> {
        if from.source.as_ref() != to.source.as_ref() || from.target.as_ref() != to.target.as_ref()
        {
            return Err(Error::not_applicable(
                "natural transformation requires parallel functors",
            ));
        }
        if components.len() != from.source.object_count() {
            return Err(Error::schema("one component per source object"));
        }
        Ok(NatTrans {
            name: name.into(),
            from,
            to,
            components,
        })
    }

    pub fn identity(f: &FinFunctor) -> NatTrans {
        let components = f
            .source
            .object_indices()
            .map(|x| f.target.identity(f.on_obj(x)))
            .collect();
        NatTrans {
            name: format!("Id_{}", f.name),
            from: f.clone(),
            to: f.clone(),
            components,
        }
    }

    pub fn at(&self, x: usize) -> usize {
        self.components[x]
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let c = &self.from.source;
        let d = &self.from.target;
        for (x, &comp) in self.components.iter().enumerate() {
            if d.src(comp) != self.from.on_obj(x) || d.tgt(comp) != self.to.on_obj(x) {
                out.push(Violation::new(
                    "component endpoints",
                    &[c.object_id(x), d.mor_id(comp)],
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in c.morphism_indices() {
            let x = c.src(f);
            let y = c.tgt(f);
            let left = d.compose2(self.at(y), self.from.on_mor(f));
            let right = d.compose2(self.to.on_mor(f), self.at(x));
            if left != right {
                out.push(Violation::new("naturality", &[c.mor_id(f)]));
            }
        }
        out
    }

    pub fn validated(self) -> Result<NatTrans> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::invalid(v))
        }
    }

    /// Vertical composition: (other ∘ self) with self applied first.
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if !self.to.same_tables(&other.from) {
            return Err(Error::not_applicable(
                "vertical composition requires matching middle functor",
            ));
        }
        let d = &self.from.target;
        let components = (0..self.components.len())
            .map(|x| d.compose2(other.at(x), self.at(x)))
            .collect();
        NatTrans::new(
            format!("{}∘{}", other.name, self.name),
            self.from.clone(),
            other.to.clone(),
            components,
        )
    }

    /// Whisker on the right with a functor into the source: (self) E -> pre-compose.
    pub fn whisker_right(&self, e: &FinFunctor) -> Result<NatTrans> {
        if e.target.as_ref() != self.from.source.as_ref() {
            return Err(Error::not_applicable("whisker_right target mismatch"));
        }
        let components = e
            .source
            .object_indices()
            .map(|x| self.at(e.on_obj(x)))
            .collect();
        NatTrans::new(
            format!("{}{}", self.name, e.name),
            FinFunctor::compose(&self.from, e)?,
            FinFunctor::compose(&self.to, e)?,
            components,
        )
    }

    /// Whisker on the left with a functor out of the target: E(self).
    pub fn whisker_left(&self, e: &FinFunctor) -> Result<NatTrans> {
        if e.source.as_ref() != self.from.target.as_ref() {
            return Err(Error::not_applicable("whisker_left source mismatch"));
        }
        let components = self.components.iter().map(|&m| e.on_mor(m)).collect();
        NatTrans::new(
            format!("{}{}", e.name, self.name),
            FinFunctor::compose(e, &self.from)?,
            FinFunctor::compose(e, &self.to)?,
            components,
        )
    }

    /// Componentwise iso test (two-sided inverse exists for every component).
    pub fn is_iso(&self) -> bool {
        let d = &self.from.target;
        self.components.iter().all(|&m| {
            let x = d.src(m);
            let y = d.tgt(m);
            d.hom(y, x).iter().any(|&g| {
                d.compose2(g, m) == d.identity(x) && d.compose2(m, g) == d.identity(y)
            })
        })
    }

    pub fn is_identity_transform(&self) -> bool {
        let d = &self.from.target;
        self.components
            .iter()
            .enumerate()
            .all(|(x, &m)| m == d.identity(self.from.on_obj(x)))
    }
}

/// An idempotent natural transformation Id -> Id on a category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentNat {
    pub category: Arc<FinCategory>,
    pub components: Vec<usize>,
}

impl IdempotentNat {
    pub fn new(category: Arc<FinCategory>, components: Vec<usize>) -> Result<IdempotentNat> {
        let this = IdempotentNat {
            category,
            components,
        };
        let v = this.validate();
        if v.is_empty() {
            Ok(this)
        } else {
            Err(Error::invalid(v))
        }
    }

    pub fn identity(category: Arc<FinCategory>) -> IdempotentNat {
        let components = category.identities.clone();
        IdempotentNat {
            category,
            components,
        }
    }

    pub fn at(&self, x: usize) -> usize {
        self.components[x]
    }

    pub fn is_identity(&self) -> bool {
        self.components == self.category.identities
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let c = &self.category;
        if self.components.len() != c.object_count() {
            out.push(Violation::new("component count", &[]));
            return out;
        }
        for (x, &e) in self.components.iter().enumerate() {
            if c.src(e) != x || c.tgt(e) != x {
                out.push(Violation::new("component must be an endomorphism", &[c.object_id(x)]));
                continue;
            }
            if c.compose2(e, e) != e {
                out.push(Violation::new("idempotence", &[c.mor_id(e)]));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in c.morphism_indices() {
            let x = c.src(f);
            let y = c.tgt(f);
            if c.compose2(f, self.at(x)) != c.compose2(self.at(y), f) {
                out.push(Violation::new("naturality", &[c.mor_id(f)]));
            }
        }
        out
    }

    /// As a natural transformation Id -> Id.
    pub fn as_nat(&self) -> NatTrans {
        let idf = FinFunctor::identity(self.category.clone());
        NatTrans {
            name: "e".to_string(),
            from: idf.clone(),
            to: idf,
            components: self.components.clone(),
        }
    }
}
