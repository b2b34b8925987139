//! Finite categories presented by composition tables.

use crate::error::{Error, Result, Violation};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorData {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category: objects, globally-unique morphism ids with source and
/// target, identities, and a composition table defined exactly on composable
/// pairs. Zero objects and empty hom-sets are legal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    pub name: String,
    pub objects: Vec<String>,
    pub morphisms: Vec<MorData>,
    /// hom[src][tgt]: morphism indices in declaration order.
    hom: Vec<Vec<Vec<usize>>>,
    /// identity morphism per object.
    pub identities: Vec<usize>,
    /// (g, f) -> g∘f for tgt(f) = src(g).
    comp: BTreeMap<(usize, usize), usize>,
    /// position of each morphism inside its hom list.
    hom_pos: Vec<usize>,
}

impl FinCategory {
    /// Assemble from raw tables. Structural references are checked here
    /// (indices in range); the categorical laws are checked by [`validate`].
    pub fn from_parts(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<MorData>,
        identities: Vec<usize>,
        comp: BTreeMap<(usize, usize), usize>,
    ) -> Result<FinCategory> {
        let n_obj = objects.len();
        let n_mor = morphisms.len();
        for m in &morphisms {
            if m.src >= n_obj || m.tgt >= n_obj {
                return Err(Error::schema(format!(
                    "morphism {} references out-of-range object",
                    m.id
                )));
            }
        }
        if identities.len() != n_obj {
            return Err(Error::schema("one identity required per object"));
        }
        for &i in &identities {
            if i >= n_mor {
                return Err(Error::schema("identity references unknown morphism"));
            }
        }
        for (&(g, f), &h) in &comp {
            if g >= n_mor || f >= n_mor || h >= n_mor {
                return Err(Error::schema("composition entry references unknown morphism"));
            }
        }
        let mut ids_seen = std::collections::HashSet::new();
        for m in &morphisms {
            if !ids_seen.insert(&m.id) {
                return Err(Error::schema(format!("duplicate morphism id {}", m.id)));
            }
        }
        let mut hom = vec![vec![Vec::new(); n_obj]; n_obj];
        let mut hom_pos = vec![0usize; n_mor];
        for (i, m) in morphisms.iter().enumerate() {
            hom_pos[i] = hom[m.src][m.tgt].len();
            hom[m.src][m.tgt].push(i);
        }
        Ok(FinCategory {
            name: name.into(),
            objects,
            morphisms,
            hom,
            identities,
            comp,
            hom_pos,
        })
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn hom(&self, src: usize, tgt: usize) -> &[usize] {
        &self.hom[src][tgt]
    }

    pub fn hom_position(&self, mor: usize) -> usize {
        self.hom_pos[mor]
    }

    pub fn src(&self, mor: usize) -> usize {
        self.morphisms[mor].src
    }

    pub fn tgt(&self, mor: usize) -> usize {
        self.morphisms[mor].tgt
    }

    pub fn mor_id(&self, mor: usize) -> &str {
        &self.morphisms[mor].id
    }

    pub fn object_id(&self, obj: usize) -> &str {
        &self.objects[obj]
    }

    pub fn identity(&self, obj: usize) -> usize {
        self.identities[obj]
    }

    pub fn is_identity(&self, mor: usize) -> bool {
        self.identities[self.morphisms[mor].src] == mor && self.morphisms[mor].src == self.morphisms[mor].tgt
    }

    /// g∘f when tgt(f) = src(g) and the table has the entry.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(&(g, f)).copied()
    }

    /// g∘f, panicking on malformed tables. Only call on validated categories.
    pub fn compose2(&self, g: usize, f: usize) -> usize {
        match self.compose(g, f) {
            Some(h) => h,
            None => panic!(
                "missing composite {}∘{} in category {}",
                self.mor_id(g),
                self.mor_id(f),
                self.name
            ),
        }
    }

    /// Compose a chain given outermost-last: compose_chain([h, g, f]) = h∘g∘f.
    pub fn compose_chain(&self, chain: &[usize]) -> Option<usize> {
        let mut it = chain.iter().rev();
        let mut acc = *it.next()?;
        for &m in it {
            acc = self.compose(m, acc)?;
        }
        Some(acc)
    }

    pub fn morphism_indices(&self) -> impl Iterator<Item = usize> {
        0..self.morphisms.len()
    }

    pub fn object_indices(&self) -> impl Iterator<Item = usize> {
        0..self.objects.len()
    }

    pub fn lookup_object(&self, id: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == id)
    }

    pub fn lookup_morphism(&self, id: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.id == id)
    }

    /// Exhaustive law check: identities behave as units, composition is closed
    /// and defined exactly on composable pairs, and associativity holds on
    /// every composable triple. Violations name the offending tuple.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (x, &i) in self.identities.iter().enumerate() {
            let m = &self.morphisms[i];
            if m.src != x || m.tgt != x {
                out.push(Violation::new(
                    "identity endomorphism",
                    &[self.object_id(x), self.mor_id(i)],
                ));
            }
        }
        for f in self.morphism_indices() {
            for g in self.morphism_indices() {
                let composable = self.tgt(f) == self.src(g);
                match self.compose(g, f) {
                    None if composable => out.push(Violation::new(
                        "missing composite",
                        &[self.mor_id(g), self.mor_id(f)],
                    )),
                    Some(_) if !composable => out.push(Violation::new(
                        "composite defined on non-composable pair",
                        &[self.mor_id(g), self.mor_id(f)],
                    )),
                    Some(h) if composable => {
                        if self.src(h) != self.src(f) || self.tgt(h) != self.tgt(g) {
                            out.push(Violation::new(
                                "composite endpoints",
                                &[self.mor_id(g), self.mor_id(f), self.mor_id(h)],
                            ));
                        }
                    }
                    _ => {}
                }
            }
        }
        if !out.is_empty() {
            // Unit/associativity checks would cascade spuriously on a broken table.
            return out;
        }
        for f in self.morphism_indices() {
            let id_tgt = self.identity(self.tgt(f));
            let id_src = self.identity(self.src(f));
            if self.compose2(id_tgt, f) != f {
                out.push(Violation::new("left identity", &[self.mor_id(f)]));
            }
            if self.compose2(f, id_src) != f {
                out.push(Violation::new("right identity", &[self.mor_id(f)]));
            }
        }
        for f in self.morphism_indices() {
            for g in self.morphism_indices() {
                if self.tgt(f) != self.src(g) {
                    continue;
                }
                for h in self.morphism_indices() {
                    if self.tgt(g) != self.src(h) {
                        continue;
                    }
                    let left = self.compose2(h, self.compose2(g, f));
                    let right = self.compose2(self.compose2(h, g), f);
                    if left != right {
                        out.push(Violation::new(
                            "associativity",
                            &[self.mor_id(h), self.mor_id(g), self.mor_id(f)],
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn validated(self) -> Result<Arc<FinCategory>> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(Arc::new(self))
        } else {
            Err(Error::invalid(violations))
        }
    }

    /// The opposite category: sources and targets swapped, composition
    /// reversed. Involutive: dualize(dualize(C)) has identical tables.
    pub fn dualize(&self) -> FinCategory {
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| MorData {
                id: m.id.clone(),
                src: m.tgt,
                tgt: m.src,
            })
            .collect();
        let comp = self
            .comp
            .iter()
            .map(|(&(g, f), &h)| ((f, g), h))
            .collect();
        FinCategory::from_parts(
            match self.name.strip_suffix("^op") {
                Some(base) => base.to_string(),
                None => format!("{}^op", self.name),
            },
            self.objects.clone(),
            morphisms,
            self.identities.clone(),
            comp,
        )
        .expect("dual of a structurally sound category is structurally sound")
    }
}

/// Convenience builder: give morphisms and a closure computing composites, and
/// the table is tabulated for all composable pairs.
pub struct CategoryBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<MorData>,
    identities: Vec<usize>,
}

impl CategoryBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CategoryBuilder {
            name: name.into(),
            objects: Vec::new(),
            morphisms: Vec::new(),
            identities: Vec::new(),
        }
    }

    pub fn object(&mut self, id: impl Into<String>) -> usize {
        self.objects.push(id.into());
        self.objects.len() - 1
    }

    pub fn morphism(&mut self, id: impl Into<String>, src: usize, tgt: usize) -> usize {
        self.morphisms.push(MorData {
            id: id.into(),
            src,
            tgt,
        });
        self.morphisms.len() - 1
    }

    pub fn identity(&mut self, obj: usize, id: impl Into<String>) -> usize {
        let m = self.morphism(id, obj, obj);
        if self.identities.len() <= obj {
            self.identities.resize(obj + 1, usize::MAX);
        }
        self.identities[obj] = m;
        m
    }

    pub fn build(
        self,
        mut compose: impl FnMut(usize, usize) -> usize,
    ) -> Result<FinCategory> {
        let mut comp = BTreeMap::new();
        for f in 0..self.morphisms.len() {
            for g in 0..self.morphisms.len() {
                if self.morphisms[f].tgt == self.morphisms[g].src {
                    comp.insert((g, f), compose(g, f));
                }
            }
        }
        FinCategory::from_parts(
            self.name,
            self.objects,
            self.morphisms,
            self.identities,
            comp,
        )
    }
}
