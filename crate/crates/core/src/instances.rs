//! A zoo of concrete instances: the categories, functors, adjunctions,
//! triples, algebras, morphisms and bimodules exercised by the test corpus and
//! shipped as CLI fixtures. Everything here is deterministic; the random
//! bimodule family is seeded.

use crate::adjunction::{AdjointTriple, Adjunction};
use crate::algstruct::{AlgebraMorphism, Bimodule, FDAlgebra, FDCoalgebra};
use crate::fincat::{CategoryBuilder, FinCategory, FinFunctor};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

// ---------------------------------------------------------------------------
// categories
// ---------------------------------------------------------------------------

/// The empty category: zero objects, zero morphisms.
pub fn empty_category() -> Arc<FinCategory> {
    CategoryBuilder::new("empty")
        .build(|_, _| unreachable!())
        .unwrap()
        .validated()
        .unwrap()
}

/// One object, one (identity) morphism.
pub fn terminal_category() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new("terminal");
    let x = b.object("*");
    b.identity(x, "id*");
    b.build(|_, _| 0).unwrap().validated().unwrap()
}

/// n objects, identities only.
pub fn discrete_category(n: usize) -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new(format!("discrete{n}"));
    for i in 0..n {
        let x = b.object(format!("X{i}"));
        b.identity(x, format!("id{i}"));
    }
    b.build(|g, _| g).unwrap().validated().unwrap()
}

/// The walking arrow A -> B.
pub fn interval_category() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new("interval");
    let a = b.object("A");
    let bb = b.object("B");
    b.identity(a, "idA");
    b.identity(bb, "idB");
    b.morphism("u", a, bb);
    b.build(|g, f| if g == 2 || f == 2 { 2 } else { g.max(f) })
        .unwrap()
        .validated()
        .unwrap()
}

/// Two parallel arrows f, g: A -> B.
pub fn parallel_pair_category() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new("parallel_pair");
    let a = b.object("A");
    let bb = b.object("B");
    b.identity(a, "idA");
    b.identity(bb, "idB");
    let f = b.morphism("f", a, bb);
    let g = b.morphism("g", a, bb);
    b.build(move |x, y| {
        if x == f || x == g {
            x
        } else if y == f || y == g {
            y
        } else {
            x.max(y)
        }
    })
    .unwrap()
    .validated()
    .unwrap()
}

/// One object with endomorphism monoid {1, e}, e∘e = e.
pub fn idempotent_monoid_category() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new("monoid_1e");
    let x = b.object("*");
    b.identity(x, "1");
    let e = b.morphism("e", x, x);
    b.build(move |g, f| if g == e || f == e { e } else { 0 })
        .unwrap()
        .validated()
        .unwrap()
}

/// One object with the cyclic group of order two {1, g}.
pub fn cyclic2_category() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new("cyclic2");
    let x = b.object("*");
    b.identity(x, "1");
    b.morphism("g", x, x);
    b.build(|g, f| (g + f) % 2).unwrap().validated().unwrap()
}

/// The split-idempotent category: objects A, B with e = s∘r on A, r∘s = id_B.
pub fn karoubi_category() -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new("karoubi");
    let a = b.object("A");
    let bb = b.object("B");
    let ida = b.identity(a, "idA");
    let idb = b.identity(bb, "idB");
    let e = b.morphism("e", a, a);
    let r = b.morphism("r", a, bb);
    let s = b.morphism("s", bb, a);
    b.build(move |g, f| match (g, f) {
        _ if f == ida || f == idb => g,
        _ if g == ida || g == idb => f,
        _ if (g, f) == (e, e) => e,
        _ if (g, f) == (r, e) => r,
        _ if (g, f) == (e, s) => s,
        _ if (g, f) == (r, s) => idb,
        _ if (g, f) == (s, r) => e,
        _ => unreachable!("non-composable pair"),
    })
    .unwrap()
    .validated()
    .unwrap()
}

/// Total order 0 < 1 < ... < n-1; morphism "le_i_j" for i <= j.
pub fn chain_category(n: usize) -> Arc<FinCategory> {
    let mut b = CategoryBuilder::new(format!("chain{n}"));
    for i in 0..n {
        b.object(format!("{i}"));
    }
    let mut endpoints: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        b.identity(i, format!("le_{i}_{i}"));
        endpoints.push((i, i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            b.morphism(format!("le_{i}_{j}"), i, j);
            endpoints.push((i, j));
        }
    }
    let eps = endpoints.clone();
    b.build(move |g, f| {
        let (i, _) = eps[f];
        let (_, j) = eps[g];
        eps.iter()
            .position(|&(a, bb)| a == i && bb == j)
            .expect("chain composite")
    })
    .unwrap()
    .validated()
    .unwrap()
}

/// Functor between chain categories from a monotone map on object indices.
pub fn monotone_functor(
    name: &str,
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    map: &[usize],
) -> FinFunctor {
    let obj_map = map.to_vec();
    let mor_map = source
        .morphism_indices()
        .map(|m| {
            let i = map[source.src(m)];
            let j = map[source.tgt(m)];
            target
                .lookup_morphism(&format!("le_{i}_{j}"))
                .expect("monotone image relation exists")
        })
        .collect();
    FinFunctor::new(name, source, target, obj_map, mor_map)
        .unwrap()
        .validated()
        .unwrap()
}

/// The unique functor into the terminal category.
pub fn to_terminal(name: &str, source: Arc<FinCategory>) -> FinFunctor {
    let t = terminal_category();
    FinFunctor::new(
        name,
        source.clone(),
        t,
        vec![0; source.object_count()],
        vec![0; source.morphism_count()],
    )
    .unwrap()
    .validated()
    .unwrap()
}

/// The functor from the terminal category picking an object.
pub fn from_terminal(name: &str, target: Arc<FinCategory>, object: &str) -> FinFunctor {
    let t = terminal_category();
    let obj = target.lookup_object(object).expect("object exists");
    let id = target.identity(obj);
    FinFunctor::new(name, t, target, vec![obj], vec![id])
        .unwrap()
        .validated()
        .unwrap()
}

/// Collapse of the parallel pair onto the walking arrow (f, g -> u).
pub fn collapse_parallel_pair() -> FinFunctor {
    let pp = parallel_pair_category();
    let int = interval_category();
    let u = int.lookup_morphism("u").unwrap();
    let mor_map = vec![int.identity(0), int.identity(1), u, u];
    FinFunctor::new("collapse", pp, int, vec![0, 1], mor_map)
        .unwrap()
        .validated()
        .unwrap()
}

/// Swap automorphism of the parallel pair (exchanges f and g).
pub fn swap_parallel_pair() -> FinFunctor {
    let pp = parallel_pair_category();
    let f = pp.lookup_morphism("f").unwrap();
    let g = pp.lookup_morphism("g").unwrap();
    let mut mor_map: Vec<usize> = pp.morphism_indices().collect();
    mor_map.swap(f, g);
    FinFunctor::new("swap_pp", pp.clone(), pp, vec![0, 1], mor_map)
        .unwrap()
        .validated()
        .unwrap()
}

/// Swap automorphism of the discrete two-object category.
pub fn swap_discrete2() -> FinFunctor {
    let d = discrete_category(2);
    FinFunctor::new("swap_d2", d.clone(), d, vec![1, 0], vec![1, 0])
        .unwrap()
        .validated()
        .unwrap()
}

/// The semiseparable-but-neither example: the idempotent monoid collapsed onto
/// the endomorphisms of A inside the Karoubi category (everything to idA).
/// Not faithful (1 and e merge), not full (e is missed).
pub fn monoid_to_karoubi() -> FinFunctor {
    let m = idempotent_monoid_category();
    let k = karoubi_category();
    let ida = k.identity(0);
    FinFunctor::new("m1e_to_karoubi", m, k, vec![0], vec![ida, ida])
        .unwrap()
        .validated()
        .unwrap()
}

/// Inclusion of the terminal category at A; separable but not full (misses e).
pub fn point_to_karoubi_a() -> FinFunctor {
    from_terminal("point_A", karoubi_category(), "A")
}

/// Inclusion at B; fully faithful.
pub fn point_to_karoubi_b() -> FinFunctor {
    from_terminal("point_B", karoubi_category(), "B")
}

/// The functor corpus for the equivalence batteries (more than 15 functors
/// with a spread of properties). Names are stable; tests index by name.
pub fn functor_corpus() -> Vec<FinFunctor> {
    vec![
        FinFunctor::identity(terminal_category()),
        FinFunctor::identity(parallel_pair_category()),
        FinFunctor::identity(idempotent_monoid_category()),
        FinFunctor::identity(karoubi_category()),
        FinFunctor::identity(interval_category()),
        collapse_parallel_pair(),
        swap_parallel_pair(),
        swap_discrete2(),
        to_terminal("m1e_to_1", idempotent_monoid_category()),
        to_terminal("pp_to_1", parallel_pair_category()),
        to_terminal("interval_to_1", interval_category()),
        to_terminal("d2_to_1", discrete_category(2)),
        to_terminal("c2_to_1", cyclic2_category()),
        to_terminal("karoubi_to_1", karoubi_category()),
        to_terminal("chain2_to_1", chain_category(2)),
        from_terminal("point_interval_A", interval_category(), "A"),
        from_terminal("point_interval_B", interval_category(), "B"),
        point_to_karoubi_a(),
        point_to_karoubi_b(),
        monoid_to_karoubi(),
        monotone_functor("chain2_embed_02", chain_category(2), chain_category(3), &[0, 2]),
        monotone_functor("chain3_collapse_001", chain_category(3), chain_category(2), &[0, 0, 1]),
        monotone_functor("chain3_collapse_011", chain_category(3), chain_category(2), &[0, 1, 1]),
        FinFunctor::identity(empty_category()),
        to_terminal("empty_to_1", empty_category()),
    ]
}

// ---------------------------------------------------------------------------
// adjunctions and triples
// ---------------------------------------------------------------------------

/// The identity adjunction Id ⊣ Id on a category.
pub fn identity_adjunction(cat: Arc<FinCategory>) -> Adjunction {
    let idf = FinFunctor::identity(cat.clone());
    Adjunction::from_components(
        format!("id_adj({})", cat.name),
        idf.clone(),
        idf,
        cat.identities.clone(),
        cat.identities.clone(),
    )
    .unwrap()
    .validated()
    .unwrap()
}

/// Galois connection between the 2-chain and the 3-chain: f = (0, 2) left
/// adjoint of g = (0, 0, 1); the unit is an isomorphism (f is an embedding).
pub fn galois_23() -> Adjunction {
    let c2 = chain_category(2);
    let c3 = chain_category(3);
    let f = monotone_functor("galois_f", c2.clone(), c3.clone(), &[0, 2]);
    let g = monotone_functor("galois_g", c3.clone(), c2.clone(), &[0, 0, 1]);
    let unit = c2
        .object_indices()
        .map(|x| {
            let gx = g.on_obj(f.on_obj(x));
            c2.lookup_morphism(&format!("le_{x}_{gx}")).unwrap()
        })
        .collect();
    let counit = c3
        .object_indices()
        .map(|y| {
            let fgy = f.on_obj(g.on_obj(y));
            c3.lookup_morphism(&format!("le_{fgy}_{y}")).unwrap()
        })
        .collect();
    Adjunction::from_components("galois_23", f, g, unit, counit)
        .unwrap()
        .validated()
        .unwrap()
}

/// Poset adjunction realizing the closure operator x -> ⊤ on the n-chain: the
/// collapse to the terminal category, right adjoint the top point.
pub fn closure_adjunction(n: usize) -> Adjunction {
    let cn = chain_category(n);
    let f = to_terminal(&format!("chain{n}_to_1"), cn.clone());
    let g = from_terminal(&format!("top_{}", n - 1), cn.clone(), &format!("{}", n - 1));
    let unit = cn
        .object_indices()
        .map(|x| cn.lookup_morphism(&format!("le_{x}_{}", n - 1)).unwrap())
        .collect();
    let counit = vec![terminal_category().identity(0)];
    Adjunction::from_components(format!("closure_{n}chain"), f, g, unit, counit)
        .unwrap()
        .validated()
        .unwrap()
}

/// B: 1 -> K as a left adjoint of the collapse K -> 1.
pub fn karoubi_point_left() -> Adjunction {
    let k = karoubi_category();
    let b = point_to_karoubi_b();
    let bang = to_terminal("karoubi_to_1", k.clone());
    let r = k.lookup_morphism("r").unwrap();
    let idb = k.identity(1);
    // left = B, right = !: unit Id_1 -> !∘B trivial; counit B∘! -> Id_K needs
    // components BX -> X... B∘!(A) = B, with Hom(B, A) = {s}.
    let s = k.lookup_morphism("s").unwrap();
    let counit = vec![s, idb];
    let unit = vec![terminal_category().identity(0)];
    let _ = r;
    Adjunction::from_components("karoubi_B_left", b, bang, unit, counit)
        .unwrap()
        .validated()
        .unwrap()
}

/// The collapse K -> 1 as a left adjoint of B: 1 -> K.
pub fn karoubi_point_right() -> Adjunction {
    let k = karoubi_category();
    let b = point_to_karoubi_b();
    let bang = to_terminal("karoubi_to_1", k.clone());
    let r = k.lookup_morphism("r").unwrap();
    let idb = k.identity(1);
    // left = !, right = B: unit Id_K -> B∘!: components X -> B
    let unit = vec![r, idb];
    let counit = vec![terminal_category().identity(0)];
    Adjunction::from_components("karoubi_B_right", bang, b, unit, counit)
        .unwrap()
        .validated()
        .unwrap()
}

/// Self-adjunction of the identity on BC2 with unit = counit = g.
pub fn cyclic2_twisted() -> Adjunction {
    let c = cyclic2_category();
    let idf = FinFunctor::identity(c.clone());
    let g = c.lookup_morphism("g").unwrap();
    Adjunction::from_components("c2_twisted", idf.clone(), idf, vec![g], vec![g])
        .unwrap()
        .validated()
        .unwrap()
}

/// The adjunction corpus (strictly more than 8, all validated).
pub fn adjunction_corpus() -> Vec<Adjunction> {
    vec![
        identity_adjunction(terminal_category()),
        identity_adjunction(idempotent_monoid_category()),
        identity_adjunction(parallel_pair_category()),
        identity_adjunction(karoubi_category()),
        galois_23(),
        closure_adjunction(3),
        closure_adjunction(2),
        karoubi_point_left(),
        karoubi_point_right(),
        cyclic2_twisted(),
    ]
}

/// Identity triple on the terminal category.
pub fn identity_triple() -> AdjointTriple {
    let adj = identity_adjunction(terminal_category());
    AdjointTriple::new("identity_triple", adj.clone(), adj)
        .validated()
        .unwrap()
}

/// Chain retract triple: f = (0,2) ⊣ g = (0,0,1) ⊣ h = (1,2); both outer
/// functors fully faithful.
pub fn chain_triple_23() -> AdjointTriple {
    let left = galois_23();
    let c2 = chain_category(2);
    let c3 = chain_category(3);
    let g = monotone_functor("galois_g", c3.clone(), c2.clone(), &[0, 0, 1]);
    let h = monotone_functor("galois_h", c2.clone(), c3.clone(), &[1, 2]);
    let unit = c3
        .object_indices()
        .map(|y| {
            let hg = h.on_obj(g.on_obj(y));
            c3.lookup_morphism(&format!("le_{y}_{hg}")).unwrap()
        })
        .collect();
    let counit = c2
        .object_indices()
        .map(|x| {
            let gh = g.on_obj(h.on_obj(x));
            c2.lookup_morphism(&format!("le_{gh}_{x}")).unwrap()
        })
        .collect();
    let right = Adjunction::from_components("galois_g_h", g, h, unit, counit)
        .unwrap()
        .validated()
        .unwrap();
    AdjointTriple::new("chain_triple_23", left, right)
        .validated()
        .unwrap()
}

/// Frobenius triple on the Karoubi category: B ⊣ ! ⊣ B.
pub fn karoubi_triple() -> AdjointTriple {
    AdjointTriple::new("karoubi_triple", karoubi_point_left(), karoubi_point_right())
        .validated()
        .unwrap()
}

/// Triple 0 ⊣ ! ⊣ 1 on the 2-chain.
pub fn collapse_triple_2chain() -> AdjointTriple {
    let c2 = chain_category(2);
    let bang = to_terminal("chain2_to_1", c2.clone());
    let bottom = from_terminal("bottom_0", c2.clone(), "0");
    let top = from_terminal("top_1", c2.clone(), "1");
    let unit_l = vec![terminal_category().identity(0)];
    let counit_l = c2
        .object_indices()
        .map(|x| c2.lookup_morphism(&format!("le_0_{x}")).unwrap())
        .collect();
    let left = Adjunction::from_components("bottom_bang", bottom, bang.clone(), unit_l, counit_l)
        .unwrap()
        .validated()
        .unwrap();
    let unit_r = c2
        .object_indices()
        .map(|x| c2.lookup_morphism(&format!("le_{x}_1")).unwrap())
        .collect();
    let counit_r = vec![terminal_category().identity(0)];
    let right = Adjunction::from_components("bang_top", bang, top, unit_r, counit_r)
        .unwrap()
        .validated()
        .unwrap();
    AdjointTriple::new("collapse_triple_2chain", left, right)
        .validated()
        .unwrap()
}

/// Triple with fully faithful middle functor and non-semiseparable outer
/// functors: F = (0,1,1) ⊣ G = (0,2) ⊣ H = (0,0,1) between the 3-chain and
/// the 2-chain.
pub fn chain_triple_32() -> AdjointTriple {
    let c2 = chain_category(2);
    let c3 = chain_category(3);
    let f = monotone_functor("retr_f", c3.clone(), c2.clone(), &[0, 1, 1]);
    let g = monotone_functor("embed_g", c2.clone(), c3.clone(), &[0, 2]);
    let h = monotone_functor("retr_h", c3.clone(), c2.clone(), &[0, 0, 1]);
    let unit_l = c3
        .object_indices()
        .map(|x| {
            let gf = g.on_obj(f.on_obj(x));
            c3.lookup_morphism(&format!("le_{x}_{gf}")).unwrap()
        })
        .collect();
    let counit_l = c2
        .object_indices()
        .map(|y| {
            let fg = f.on_obj(g.on_obj(y));
            c2.lookup_morphism(&format!("le_{fg}_{y}")).unwrap()
        })
        .collect();
    let left = Adjunction::from_components("f_embed", f, g.clone(), unit_l, counit_l)
        .unwrap()
        .validated()
        .unwrap();
    let unit_r = c2
        .object_indices()
        .map(|y| {
            let hg = h.on_obj(g.on_obj(y));
            c2.lookup_morphism(&format!("le_{y}_{hg}")).unwrap()
        })
        .collect();
    let counit_r = c3
        .object_indices()
        .map(|x| {
            let gh = g.on_obj(h.on_obj(x));
            c3.lookup_morphism(&format!("le_{gh}_{x}")).unwrap()
        })
        .collect();
    let right = Adjunction::from_components("embed_h", g, h, unit_r, counit_r)
        .unwrap()
        .validated()
        .unwrap();
    AdjointTriple::new("chain_triple_32", left, right)
        .validated()
        .unwrap()
}

/// Triple ! ⊣ B ⊣ ! with fully faithful middle functor B: 1 -> K; both outer
/// functors are the collapse, so the canonical σ is invertible.
pub fn karoubi_sigma_triple() -> AdjointTriple {
    AdjointTriple::new(
        "karoubi_sigma_triple",
        karoubi_point_right(),
        karoubi_point_left(),
    )
    .validated()
    .unwrap()
}

pub fn triple_corpus() -> Vec<AdjointTriple> {
    vec![
        identity_triple(),
        chain_triple_23(),
        karoubi_triple(),
        collapse_triple_2chain(),
        chain_triple_32(),
        karoubi_sigma_triple(),
    ]
}

// ---------------------------------------------------------------------------
// algebras, morphisms, bimodules, coalgebras
// ---------------------------------------------------------------------------

fn s(field: Field, n: i64) -> Scalar {
    field.from_i64(n)
}

/// The base field as a one-dimensional algebra.
pub fn field_algebra(field: Field) -> FDAlgebra {
    FDAlgebra::new(
        "k",
        field,
        vec!["1".into()],
        vec![vec![vec![s(field, 1)]]],
        vec![s(field, 1)],
    )
    .unwrap()
}

/// The split algebra k x k with componentwise operations.
pub fn product_algebra(field: Field) -> FDAlgebra {
    let z = || s(field, 0);
    let o = || s(field, 1);
    FDAlgebra::new(
        "kxk",
        field,
        vec!["e1".into(), "e2".into()],
        vec![
            vec![vec![o(), z()], vec![z(), z()]],
            vec![vec![z(), z()], vec![z(), o()]],
        ],
        vec![o(), o()],
    )
    .unwrap()
}

/// Three pairwise orthogonal idempotents: k x k x k.
pub fn product3_algebra(field: Field) -> FDAlgebra {
    let z = || s(field, 0);
    let o = || s(field, 1);
    let mut mult = vec![vec![vec![z(), z(), z()]; 3]; 3];
    for (i, row) in mult.iter_mut().enumerate() {
        row[i][i] = o();
    }
    FDAlgebra::new(
        "kxkxk",
        field,
        vec!["e1".into(), "e2".into(), "e3".into()],
        mult,
        vec![o(), o(), o()],
    )
    .unwrap()
}

/// The dual numbers k[x]/(x^2).
pub fn dual_numbers(field: Field) -> FDAlgebra {
    let z = || s(field, 0);
    let o = || s(field, 1);
    FDAlgebra::new(
        "k[x]/(x2)",
        field,
        vec!["1".into(), "x".into()],
        vec![
            vec![vec![o(), z()], vec![z(), o()]],
            vec![vec![z(), o()], vec![z(), z()]],
        ],
        vec![o(), z()],
    )
    .unwrap()
}

/// The inclusion k -> k[x]/(x^2).
pub fn inclusion_k_to_dual(field: Field) -> AlgebraMorphism {
    let src = field_algebra(field);
    let tgt = dual_numbers(field);
    let matrix = Matrix::from_rows(field, &[vec![s(field, 1)], vec![s(field, 0)]]).unwrap();
    AlgebraMorphism::new("incl_k_dual", src, tgt, matrix)
        .unwrap()
        .validated()
        .unwrap()
}

/// Evaluation at zero: k[x]/(x^2) -> k.
pub fn eval_dual_to_k(field: Field) -> AlgebraMorphism {
    let src = dual_numbers(field);
    let tgt = field_algebra(field);
    let matrix = Matrix::from_rows(field, &[vec![s(field, 1), s(field, 0)]]).unwrap();
    AlgebraMorphism::new("eval_dual_k", src, tgt, matrix)
        .unwrap()
        .validated()
        .unwrap()
}

/// First projection k x k -> k.
pub fn projection_kxk_to_k(field: Field) -> AlgebraMorphism {
    let src = product_algebra(field);
    let tgt = field_algebra(field);
    let matrix = Matrix::from_rows(field, &[vec![s(field, 1), s(field, 0)]]).unwrap();
    AlgebraMorphism::new("proj_kxk_k", src, tgt, matrix)
        .unwrap()
        .validated()
        .unwrap()
}

/// Diagonal k -> k x k.
pub fn diagonal_k_to_kxk(field: Field) -> AlgebraMorphism {
    let src = field_algebra(field);
    let tgt = product_algebra(field);
    let matrix = Matrix::from_rows(field, &[vec![s(field, 1)], vec![s(field, 1)]]).unwrap();
    AlgebraMorphism::new("diag_k_kxk", src, tgt, matrix)
        .unwrap()
        .validated()
        .unwrap()
}

/// Diagonal k -> k x k x k.
pub fn diagonal_k_to_kxkxk(field: Field) -> AlgebraMorphism {
    let src = field_algebra(field);
    let tgt = product3_algebra(field);
    let matrix = Matrix::from_rows(
        field,
        &[vec![s(field, 1)], vec![s(field, 1)], vec![s(field, 1)]],
    )
    .unwrap();
    AlgebraMorphism::new("diag_k_kxkxk", src, tgt, matrix)
        .unwrap()
        .validated()
        .unwrap()
}

/// The composite k x k -> k -> k[x]/(x^2): semiseparable but neither separable
/// nor naturally full.
pub fn composite_kxk_to_dual(field: Field) -> AlgebraMorphism {
    let src = product_algebra(field);
    let tgt = dual_numbers(field);
    let matrix = Matrix::from_rows(
        field,
        &[vec![s(field, 1), s(field, 0)], vec![s(field, 0), s(field, 0)]],
    )
    .unwrap();
    AlgebraMorphism::new("comp_kxk_dual", src, tgt, matrix)
        .unwrap()
        .validated()
        .unwrap()
}

/// Identity morphism on an algebra.
pub fn identity_morphism(alg: FDAlgebra) -> AlgebraMorphism {
    let m = Matrix::identity(alg.dim, alg.field);
    AlgebraMorphism::new(format!("id_{}", alg.name), alg.clone(), alg, m)
        .unwrap()
        .validated()
        .unwrap()
}

/// The regular bimodule: an algebra over itself on both sides.
pub fn regular_bimodule(alg: &FDAlgebra) -> Bimodule {
    crate::algstruct::bimodule::regular_bimodule(alg).unwrap()
}

/// View the target of an algebra morphism as a bimodule over
/// (source, target): r·m·s = φ(r) m s.
pub fn restriction_bimodule(phi: &AlgebraMorphism) -> Bimodule {
    crate::algstruct::bimodule::restriction_bimodule(phi).unwrap()
}

/// k^n over (k, k).
pub fn column_bimodule(field: Field, n: usize) -> Bimodule {
    let k = field_algebra(field);
    let id = Matrix::identity(n, field);
    Bimodule::new(format!("k^{n}"), k.clone(), k, n, vec![id.clone()], vec![id])
        .unwrap()
        .validated()
        .unwrap()
}

/// k as a (k, k x k)-bimodule through the first projection: the pinned
/// M-semiseparable-but-not-separable case with z = (1, 0).
pub fn k_over_k_kxk(field: Field) -> Bimodule {
    let k = field_algebra(field);
    let kxk = product_algebra(field);
    let one = Matrix::identity(1, field);
    let zero = Matrix::zero(1, 1, field);
    Bimodule::new("k_(k,kxk)", k, kxk, 1, vec![one.clone()], vec![one, zero])
        .unwrap()
        .validated()
        .unwrap()
}

/// k as a (k, k[x]/(x^2))-bimodule through evaluation at zero: not projective
/// on the right.
pub fn k_over_k_dual(field: Field) -> Bimodule {
    let k = field_algebra(field);
    let dual = dual_numbers(field);
    let one = Matrix::identity(1, field);
    let zero = Matrix::zero(1, 1, field);
    Bimodule::new("k_(k,dual)", k, dual, 1, vec![one.clone()], vec![one, zero])
        .unwrap()
        .validated()
        .unwrap()
}

/// Seeded random bimodule over split commutative algebras: R = F5^a, S = F5^b
/// with a graded (i, j)-decomposition of dimension at most 3. Valid by
/// construction; verdicts vary with the grading.
pub fn random_graded_bimodule(seed: u64) -> Bimodule {
    let field = Field::Fp(5);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = rng.gen_range(1..=3usize);
    let b = rng.gen_range(1..=3usize);
    let dim = rng.gen_range(1..=3usize);
    let r = match a {
        1 => field_algebra(field),
        2 => product_algebra(field),
        _ => product3_algebra(field),
    };
    let s_alg = match b {
        1 => field_algebra(field),
        2 => product_algebra(field),
        _ => product3_algebra(field),
    };
    let degrees: Vec<(usize, usize)> = (0..dim)
        .map(|_| (rng.gen_range(0..a), rng.gen_range(0..b)))
        .collect();
    let left_action = (0..a)
        .map(|i| {
            Matrix::from_fn(dim, dim, field, |p, q| {
                if p == q && degrees[p].0 == i {
                    field.one()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    let right_action = (0..b)
        .map(|j| {
            Matrix::from_fn(dim, dim, field, |p, q| {
                if p == q && degrees[p].1 == j {
                    field.one()
                } else {
                    field.zero()
                }
            })
        })
        .collect();
    Bimodule::new(
        format!("rand_graded_{seed}"),
        r,
        s_alg,
        dim,
        left_action,
        right_action,
    )
    .unwrap()
    .validated()
    .unwrap()
}

/// The trivial coring C = R with Δ(r) = r⊗1 and ε = id.
pub fn trivial_coring(alg: &FDAlgebra) -> crate::algstruct::Coring {
    let field = alg.field;
    let n = alg.dim;
    let bimodule = regular_bimodule(alg);
    let delta_flat = Matrix::from_fn(n * n, n, field, |row, col| {
        let (a, b) = (row / n, row % n);
        if a == col {
            alg.unit[b].clone()
        } else {
            field.zero()
        }
    });
    let counit = Matrix::identity(n, field);
    crate::algstruct::Coring::new(
        format!("trivial({})", alg.name),
        alg.clone(),
        bimodule,
        delta_flat,
        counit,
    )
    .unwrap()
    .validated()
    .unwrap()
}

/// The idempotent-ideal coring: over R = k x k, the ideal I = k x {0} as a
/// one-dimensional R-coring with ε(s) = (s, 0) and Δ the canonical inverse of
/// the multiplication. Semicosplit with ε(z) = (1, 0), not cosplit.
pub fn ideal_coring_kxk(field: Field) -> crate::algstruct::Coring {
    let r = product_algebra(field);
    let one = Matrix::identity(1, field);
    let zero = Matrix::zero(1, 1, field);
    // both actions through the first projection
    let bimodule = Bimodule::new(
        "I_kx0",
        r.clone(),
        r.clone(),
        1,
        vec![one.clone(), zero.clone()],
        vec![one.clone(), zero],
    )
    .unwrap()
    .validated()
    .unwrap();
    let delta_flat = Matrix::identity(1, field);
    let counit = Matrix::from_rows(field, &[vec![s(field, 1)], vec![s(field, 0)]]).unwrap();
    crate::algstruct::Coring::new("ideal_kx0", r, bimodule, delta_flat, counit)
        .unwrap()
        .validated()
        .unwrap()
}

/// Grouplike coalgebra on a set of labels.
pub fn grouplike_coalgebra(field: Field, labels: &[&str]) -> FDCoalgebra {
    let n = labels.len();
    let delta = (0..n)
        .map(|i| {
            let mut v = vec![s(field, 0); n * n];
            v[i * n + i] = s(field, 1);
            v
        })
        .collect();
    FDCoalgebra::new(
        format!("grouplike[{}]", labels.join(",")),
        field,
        labels.iter().map(|l| l.to_string()).collect(),
        delta,
        vec![s(field, 1); n],
    )
    .unwrap()
    .validated()
    .unwrap()
}
