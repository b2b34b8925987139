//! Morphism classes and functor properties decided by exhaustive
//! quantification over the finite hom-sets.

use super::category::FinCategory;
use super::functor::FinFunctor;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismClass {
    SplitMono,
    SplitEpi,
    Iso,
    Constant,
    Idempotent,
}

/// Verdict for a morphism-class query; the witness is the retraction, section
/// or inverse when one exists.
#[derive(Debug, Clone)]
pub struct ClassVerdict {
    pub holds: bool,
    pub witness: Option<usize>,
}

pub fn morphism_class(c: &FinCategory, f: usize, class: MorphismClass) -> Result<ClassVerdict> {
    if f >= c.morphism_count() {
        return Err(Error::schema(format!("unknown morphism index {f}")));
    }
    let x = c.src(f);
    let y = c.tgt(f);
    let verdict = match class {
        MorphismClass::SplitMono => c
            .hom(y, x)
            .iter()
            .find(|&&r| c.compose2(r, f) == c.identity(x))
            .map(|&r| ClassVerdict {
                holds: true,
                witness: Some(r),
            })
            .unwrap_or(ClassVerdict {
                holds: false,
                witness: None,
            }),
        MorphismClass::SplitEpi => c
            .hom(y, x)
            .iter()
            .find(|&&s| c.compose2(f, s) == c.identity(y))
            .map(|&s| ClassVerdict {
                holds: true,
                witness: Some(s),
            })
            .unwrap_or(ClassVerdict {
                holds: false,
                witness: None,
            }),
        MorphismClass::Iso => c
            .hom(y, x)
            .iter()
            .find(|&&g| c.compose2(g, f) == c.identity(x) && c.compose2(f, g) == c.identity(y))
            .map(|&g| ClassVerdict {
                holds: true,
                witness: Some(g),
            })
            .unwrap_or(ClassVerdict {
                holds: false,
                witness: None,
            }),
        MorphismClass::Constant => {
            let mut holds = true;
            'outer: for z in c.object_indices() {
                let incoming = c.hom(z, x);
                for &g in incoming {
                    for &h in incoming {
                        if c.compose2(f, g) != c.compose2(f, h) {
                            holds = false;
                            break 'outer;
                        }
                    }
                }
            }
            ClassVerdict {
                holds,
                witness: None,
            }
        }
        MorphismClass::Idempotent => ClassVerdict {
            holds: x == y && c.compose2(f, f) == f,
            witness: None,
        },
    };
    Ok(verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctorProperty {
    Faithful,
    Full,
    FullyFaithful,
    Conservative,
    Maschke,
    DualMaschke,
}

/// Property verdict with a counterexample description on failure.
#[derive(Debug, Clone)]
pub struct PropertyVerdict {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl PropertyVerdict {
    fn ok() -> Self {
        PropertyVerdict {
            holds: true,
            counterexample: None,
        }
    }

    fn no(cx: String) -> Self {
        PropertyVerdict {
            holds: false,
            counterexample: Some(cx),
        }
    }
}

pub fn functor_property(f: &FinFunctor, prop: FunctorProperty) -> Result<PropertyVerdict> {
    let c = &f.source;
    let d = &f.target;
    let verdict = match prop {
        FunctorProperty::Faithful => {
            let mut v = PropertyVerdict::ok();
            'outer: for x in c.object_indices() {
                for y in c.object_indices() {
                    let hom = c.hom(x, y);
                    for (i, &a) in hom.iter().enumerate() {
                        for &b in &hom[i + 1..] {
                            if f.on_mor(a) == f.on_mor(b) {
                                v = PropertyVerdict::no(format!(
                                    "F merges {} and {}",
                                    c.mor_id(a),
                                    c.mor_id(b)
                                ));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            v
        }
        FunctorProperty::Full => {
            let mut v = PropertyVerdict::ok();
            'outer: for x in c.object_indices() {
                for y in c.object_indices() {
                    let image: Vec<usize> = c.hom(x, y).iter().map(|&m| f.on_mor(m)).collect();
                    for &k in d.hom(f.on_obj(x), f.on_obj(y)) {
                        if !image.contains(&k) {
                            v = PropertyVerdict::no(format!(
                                "{} in Hom({},{}) misses the image of Hom({},{})",
                                d.mor_id(k),
                                d.object_id(f.on_obj(x)),
                                d.object_id(f.on_obj(y)),
                                c.object_id(x),
                                c.object_id(y)
                            ));
                            break 'outer;
                        }
                    }
                }
            }
            v
        }
        FunctorProperty::FullyFaithful => {
            let faithful = functor_property(f, FunctorProperty::Faithful)?;
            if !faithful.holds {
                faithful
            } else {
                functor_property(f, FunctorProperty::Full)?
            }
        }
        FunctorProperty::Conservative => reflection_property(f, MorphismClass::Iso)?,
        FunctorProperty::Maschke => reflection_property(f, MorphismClass::SplitMono)?,
        FunctorProperty::DualMaschke => reflection_property(f, MorphismClass::SplitEpi)?,
    };
    Ok(verdict)
}

fn reflection_property(f: &FinFunctor, class: MorphismClass) -> Result<PropertyVerdict> {
    let c = &f.source;
    let d = &f.target;
    for m in c.morphism_indices() {
        let image_has = morphism_class(d, f.on_mor(m), class)?.holds;
        if image_has && !morphism_class(c, m, class)?.holds {
            return Ok(PropertyVerdict::no(format!(
                "{} is not reflected at {}",
                match class {
                    MorphismClass::Iso => "isomorphism",
                    MorphismClass::SplitMono => "split mono",
                    MorphismClass::SplitEpi => "split epi",
                    _ => "class",
                },
                c.mor_id(m)
            )));
        }
    }
    Ok(PropertyVerdict::ok())
}

/// Exhaustive enumeration of natural transformations Id_C -> Id_C, returned as
/// component tables in a deterministic order.
pub fn nat_endo_monoid(c: &FinCategory) -> Vec<Vec<usize>> {
    let n = c.object_count();
    let mut out = Vec::new();
    let mut components = vec![0usize; n];
    fn rec(
        c: &FinCategory,
        obj: usize,
        components: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = c.object_count();
        if obj == n {
            out.push(components.clone());
            return;
        }
        for &cand in c.hom(obj, obj) {
            components[obj] = cand;
            // check naturality against all morphisms between assigned objects
            let ok = c.morphism_indices().all(|m| {
                let x = c.src(m);
                let y = c.tgt(m);
                if x > obj || y > obj {
                    return true;
                }
                c.compose2(m, components[x]) == c.compose2(components[y], m)
            });
            if ok {
                rec(c, obj + 1, components, out);
            }
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(c, 0, &mut components, &mut out);
    out
}

/// Constant-generated test: every distinct parallel pair must be separated by
/// pre-composition with some constant morphism.
#[derive(Debug, Clone)]
pub struct ConstantGeneratedVerdict {
    pub holds: bool,
    /// The unseparated parallel pair on failure.
    pub counterexample: Option<(String, String)>,
}

pub fn constant_generated(c: &FinCategory) -> Result<ConstantGeneratedVerdict> {
    let constants: Vec<usize> = c
        .morphism_indices()
        .filter(|&k| morphism_class(c, k, MorphismClass::Constant).unwrap().holds)
        .collect();
    for x in c.object_indices() {
        for y in c.object_indices() {
            let hom = c.hom(x, y);
            for (i, &f) in hom.iter().enumerate() {
                for &g in &hom[i + 1..] {
                    let separated = constants.iter().any(|&k| {
                        c.tgt(k) == x && c.compose2(f, k) != c.compose2(g, k)
                    });
                    if !separated {
                        return Ok(ConstantGeneratedVerdict {
                            holds: false,
                            counterexample: Some((
                                c.mor_id(f).to_string(),
                                c.mor_id(g).to_string(),
                            )),
                        });
                    }
                }
            }
        }
    }
    Ok(ConstantGeneratedVerdict {
        holds: true,
        counterexample: None,
    })
}
