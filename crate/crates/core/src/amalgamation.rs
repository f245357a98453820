//! Amalgamated free sums (pushouts) and coproducts for graphs and posets.
//!
//! The graph pushout glues carriers along the base and takes the union of the
//! edge sets; the poset pushout takes the transitive closure of the union of
//! the two orders and verifies (rather than assumes) that the closure is still
//! a partial order. [`check_pushout_universal`] is the oracle side: it tests
//! the full pushout universal property against every small candidate target by
//! exhaustive homomorphism enumeration, counting mediating maps.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::oracle::{self, Indexed, MapMode, OracleLimits};
use crate::structures::{
    classify_morphism, ensure_valid, induced_substructure, unordered, ElementId, FiniteGraph,
    FinitePoset, FiniteStructure, Morphism, MorphismKind, StructureClass,
};

/// The quintuple `(A, B, C, f1, f2)` with verified embedding legs.
#[derive(Debug, Clone)]
pub struct Amalgam {
    base: FiniteStructure,
    left: FiniteStructure,
    right: FiniteStructure,
    leg_left: Morphism,
    leg_right: Morphism,
}

impl Amalgam {
    pub fn new(
        base: FiniteStructure,
        left: FiniteStructure,
        right: FiniteStructure,
        leg_left: Morphism,
        leg_right: Morphism,
    ) -> Result<Amalgam> {
        let class = base.class();
        if left.class() != class || right.class() != class {
            return Err(Error::MalformedInput(
                "amalgam structures must share one class".into(),
            ));
        }
        for s in [&base, &left, &right] {
            ensure_valid(s)?;
        }
        for (leg, dom, cod, name) in [
            (&leg_left, &base, &left, "f1"),
            (&leg_right, &base, &right, "f2"),
        ] {
            if leg.domain() != dom || leg.codomain() != cod {
                return Err(Error::MalformedInput(format!(
                    "leg {name} does not connect the amalgam's base to its side"
                )));
            }
            if leg.kind() < MorphismKind::Embedding {
                return Err(Error::Precondition(format!("leg {name} is not an embedding")));
            }
        }
        Ok(Amalgam {
            base,
            left,
            right,
            leg_left,
            leg_right,
        })
    }

    /// Amalgam `(B, A, C, 1_B, 1_B)` of two extensions over an induced common
    /// part, the shape every tower step uses.
    pub fn over_identity(
        shared: &FiniteStructure,
        left: FiniteStructure,
        right: FiniteStructure,
    ) -> Result<Amalgam> {
        let ident = Morphism::identity(shared)?;
        let into_left = classify_morphism(ident.map(), shared, &left)?.into_morphism()?;
        let into_right = classify_morphism(ident.map(), shared, &right)?.into_morphism()?;
        Amalgam::new(shared.clone(), left, right, into_left, into_right)
    }

    pub fn base(&self) -> &FiniteStructure {
        &self.base
    }

    pub fn left(&self) -> &FiniteStructure {
        &self.left
    }

    pub fn right(&self) -> &FiniteStructure {
        &self.right
    }

    pub fn leg_left(&self) -> &Morphism {
        &self.leg_left
    }

    pub fn leg_right(&self) -> &Morphism {
        &self.leg_right
    }

    pub fn class(&self) -> StructureClass {
        self.base.class()
    }
}

/// The pushout object with its two injection embeddings.
#[derive(Debug, Clone)]
pub struct PushoutResult {
    pub object: FiniteStructure,
    pub inj_left: Morphism,
    pub inj_right: Morphism,
}

/// Deterministic carrier policy: shared elements keep the base's ids, side
/// elements keep their own ids, and collisions are freshened with `~k`.
struct Carrier {
    used: BTreeSet<ElementId>,
}

impl Carrier {
    fn new() -> Self {
        Carrier { used: BTreeSet::new() }
    }

    fn mint(&mut self, wanted: &ElementId) -> ElementId {
        if self.used.insert(wanted.clone()) {
            return wanted.clone();
        }
        for k in 1.. {
            let candidate = ElementId::new(format!("{wanted}~{k}"));
            if self.used.insert(candidate.clone()) {
                return candidate;
            }
        }
        unreachable!()
    }
}

/// Computes the carrier maps `i1 : B -> P`, `i2 : C -> P` shared by both
/// pushout constructions.
fn pushout_carrier(
    am: &Amalgam,
) -> (
    Vec<ElementId>,
    BTreeMap<ElementId, ElementId>,
    BTreeMap<ElementId, ElementId>,
) {
    let mut carrier = Carrier::new();
    let mut elems = Vec::new();
    let mut i1: BTreeMap<ElementId, ElementId> = BTreeMap::new();
    let mut i2: BTreeMap<ElementId, ElementId> = BTreeMap::new();

    for a in am.base.elements() {
        let name = carrier.mint(a);
        elems.push(name.clone());
        i1.insert(am.leg_left.apply(a).expect("total leg"), name.clone());
        i2.insert(am.leg_right.apply(a).expect("total leg"), name);
    }
    for b in am.left.elements() {
        if !i1.contains_key(b) {
            let name = carrier.mint(b);
            elems.push(name.clone());
            i1.insert(b.clone(), name);
        }
    }
    for c in am.right.elements() {
        if !i2.contains_key(c) {
            let name = carrier.mint(c);
            elems.push(name.clone());
            i2.insert(c.clone(), name);
        }
    }
    (elems, i1, i2)
}

fn finish_pushout(
    am: &Amalgam,
    object: FiniteStructure,
    i1: BTreeMap<ElementId, ElementId>,
    i2: BTreeMap<ElementId, ElementId>,
) -> Result<PushoutResult> {
    ensure_valid(&object)
        .map_err(|e| Error::InternalConsistency(format!("pushout output invalid: {e}")))?;
    let inj_left = classify_morphism(&i1, &am.left, &object)?.into_morphism()?;
    let inj_right = classify_morphism(&i2, &am.right, &object)?.into_morphism()?;
    // Injectivity of the injections is a postcondition here, not an assumption.
    for (inj, name) in [(&inj_left, "i1"), (&inj_right, "i2")] {
        if inj.kind() < MorphismKind::Embedding {
            return Err(Error::InternalConsistency(format!(
                "pushout injection {name} is not an embedding"
            )));
        }
    }
    // Commutation i1 . f1 = i2 . f2, elementwise.
    for a in am.base.elements() {
        let via_left = inj_left.apply(&am.leg_left.apply(a)?)?;
        let via_right = inj_right.apply(&am.leg_right.apply(a)?)?;
        if via_left != via_right {
            return Err(Error::InternalConsistency(format!(
                "pushout square does not commute at {a}"
            )));
        }
    }
    Ok(PushoutResult {
        object,
        inj_left,
        inj_right,
    })
}

/// Pushout of a graph amalgam: vertices glued along the base, edges exactly
/// the images of the two sides' edge sets.
pub fn pushout_graph(am: &Amalgam) -> Result<PushoutResult> {
    if am.class() != StructureClass::Graph {
        return Err(Error::MalformedInput("pushout_graph needs a graph amalgam".into()));
    }
    let (elems, i1, i2) = pushout_carrier(am);
    let mut edges: BTreeSet<(ElementId, ElementId)> = BTreeSet::new();
    for (u, v) in am.left.as_graph()?.edges() {
        edges.insert(unordered(i1[u].clone(), i1[v].clone()));
    }
    for (u, v) in am.right.as_graph()?.edges() {
        edges.insert(unordered(i2[u].clone(), i2[v].clone()));
    }
    let object = FiniteStructure::Graph(FiniteGraph::new(elems, edges));
    finish_pushout(am, object, i1, i2)
}

/// Pushout of a poset amalgam: the transitive closure of the union of the two
/// image orders, with antisymmetry checked defensively.
pub fn pushout_poset(am: &Amalgam) -> Result<PushoutResult> {
    if am.class() != StructureClass::Poset {
        return Err(Error::MalformedInput("pushout_poset needs a poset amalgam".into()));
    }
    let (elems, i1, i2) = pushout_carrier(am);
    let n = elems.len();
    let pos: BTreeMap<&ElementId, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut le = vec![vec![false; n]; n];
    for (a, b) in am.left.as_poset()?.relation() {
        le[pos[&i1[a]]][pos[&i1[b]]] = true;
    }
    for (a, b) in am.right.as_poset()?.relation() {
        le[pos[&i2[a]]][pos[&i2[b]]] = true;
    }
    // Warshall closure.
    for k in 0..n {
        for i in 0..n {
            if le[i][k] {
                for j in 0..n {
                    if le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                return Err(Error::InternalConsistency(format!(
                    "transitive closure broke antisymmetry at ({}, {})",
                    elems[i], elems[j]
                )));
            }
        }
    }
    let mut rel = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                rel.push((elems[i].clone(), elems[j].clone()));
            }
        }
    }
    let object = FiniteStructure::Poset(FinitePoset::new(elems, rel));
    finish_pushout(am, object, i1, i2)
}

/// Pushout dispatch; metric amalgams are out of scope.
pub fn pushout(am: &Amalgam) -> Result<PushoutResult> {
    match am.class() {
        StructureClass::Graph => pushout_graph(am),
        StructureClass::Poset => pushout_poset(am),
        StructureClass::Metric => Err(Error::UnsupportedClass(
            "metric amalgams have no free sum here".into(),
        )),
    }
}

/// Disjoint union with fresh ids `p{i}.{name}`; graphs get no cross edges,
/// posets no cross comparabilities. Returns the injections.
pub fn coproduct(
    class: StructureClass,
    parts: &[FiniteStructure],
) -> Result<(FiniteStructure, Vec<Morphism>)> {
    if class == StructureClass::Metric {
        return Err(Error::UnsupportedClass(
            "no meaningful coproduct exists for metric spaces".into(),
        ));
    }
    for part in parts {
        if part.class() != class {
            return Err(Error::MalformedInput("coproduct parts must share the class".into()));
        }
        ensure_valid(part)?;
    }
    let rename = |i: usize, e: &ElementId| ElementId::new(format!("p{i}.{e}"));
    let object = match class {
        StructureClass::Graph => {
            let mut vertices = Vec::new();
            let mut edges = Vec::new();
            for (i, part) in parts.iter().enumerate() {
                let g = part.as_graph()?;
                vertices.extend(g.vertices().iter().map(|v| rename(i, v)));
                edges.extend(
                    g.edges()
                        .iter()
                        .map(|(u, v)| (rename(i, u), rename(i, v))),
                );
            }
            FiniteStructure::Graph(FiniteGraph::new(vertices, edges))
        }
        StructureClass::Poset => {
            let mut elements = Vec::new();
            let mut rel = Vec::new();
            for (i, part) in parts.iter().enumerate() {
                let p = part.as_poset()?;
                elements.extend(p.elements().iter().map(|e| rename(i, e)));
                rel.extend(
                    p.relation()
                        .iter()
                        .map(|(a, b)| (rename(i, a), rename(i, b))),
                );
            }
            FiniteStructure::Poset(FinitePoset::new(elements, rel))
        }
        StructureClass::Metric => unreachable!(),
    };
    let mut injections = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let map = part
            .elements()
            .iter()
            .map(|e| (e.clone(), rename(i, e)))
            .collect();
        injections.push(classify_morphism(&map, part, &object)?.into_morphism()?);
    }
    Ok((object, injections))
}

/// One failed universal-property instance.
#[derive(Debug, Clone)]
pub struct UniversalFailure {
    pub target: FiniteStructure,
    pub j1: BTreeMap<ElementId, ElementId>,
    pub j2: BTreeMap<ElementId, ElementId>,
    /// Number of mediating homomorphisms found (must be exactly one).
    pub mediating: usize,
}

#[derive(Debug, Clone, Default)]
pub struct UniversalReport {
    pub targets_checked: usize,
    pub commuting_pairs_checked: u64,
    pub failures: Vec<UniversalFailure>,
}

impl UniversalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn encode(assign: &[usize], radix: u64) -> u64 {
    assign.iter().fold(0u64, |acc, &d| acc * radix + d as u64)
}

/// Oracle check of the pushout universal property: for every structure `Q`
/// with at most `size_bound` elements and every commuting pair of
/// homomorphisms `j1 : B -> Q`, `j2 : C -> Q`, counts the mediating
/// homomorphisms `h : P -> Q` with `j1 = h . i1` and `j2 = h . i2`; each pair
/// must have exactly one.
pub fn check_pushout_universal(
    res: &PushoutResult,
    am: &Amalgam,
    size_bound: usize,
    limits: &OracleLimits,
) -> Result<UniversalReport> {
    if size_bound > limits.enumeration_cap {
        return Err(Error::ResourceBound(format!(
            "universal check capped at target size {}",
            limits.enumeration_cap
        )));
    }
    let class = am.class();
    let bi = Indexed::from_structure(am.left());
    let ci = Indexed::from_structure(am.right());
    let ai = Indexed::from_structure(am.base());
    let pi = Indexed::from_structure(&res.object);

    let to_idx = |idx: &Indexed, e: &ElementId| idx.elems.binary_search(e).expect("element");
    let f1_idx: Vec<usize> = ai
        .elems
        .iter()
        .map(|a| to_idx(&bi, &am.leg_left().apply(a).unwrap()))
        .collect();
    let f2_idx: Vec<usize> = ai
        .elems
        .iter()
        .map(|a| to_idx(&ci, &am.leg_right().apply(a).unwrap()))
        .collect();
    let i1_idx: Vec<usize> = bi
        .elems
        .iter()
        .map(|b| to_idx(&pi, &res.inj_left.apply(b).unwrap()))
        .collect();
    let i2_idx: Vec<usize> = ci
        .elems
        .iter()
        .map(|c| to_idx(&pi, &res.inj_right.apply(c).unwrap()))
        .collect();

    let targets = oracle::enumerate_structures(class, size_bound, limits)?;
    let mut report = UniversalReport {
        targets_checked: targets.len(),
        ..Default::default()
    };

    for q in &targets {
        let qi = Indexed::from_structure(q);
        let radix = qi.n as u64;

        // Mediating-map counts keyed by (h . i1, h . i2).
        let mut mediating: HashMap<(u64, u64), usize> = HashMap::new();
        oracle::enumerate_maps(&pi, &qi, MapMode::Hom, &mut |h| {
            let via_b: Vec<usize> = i1_idx.iter().map(|&p| h[p]).collect();
            let via_c: Vec<usize> = i2_idx.iter().map(|&p| h[p]).collect();
            *mediating
                .entry((encode(&via_b, radix), encode(&via_c, radix)))
                .or_insert(0) += 1;
        });

        // Homomorphisms from the sides, grouped by their restriction to A.
        let mut left_by_restriction: HashMap<u64, Vec<Vec<usize>>> = HashMap::new();
        oracle::enumerate_maps(&bi, &qi, MapMode::Hom, &mut |j1| {
            let on_a: Vec<usize> = f1_idx.iter().map(|&b| j1[b]).collect();
            left_by_restriction
                .entry(encode(&on_a, radix))
                .or_default()
                .push(j1.to_vec());
        });
        let mut right_by_restriction: HashMap<u64, Vec<Vec<usize>>> = HashMap::new();
        oracle::enumerate_maps(&ci, &qi, MapMode::Hom, &mut |j2| {
            let on_a: Vec<usize> = f2_idx.iter().map(|&c| j2[c]).collect();
            right_by_restriction
                .entry(encode(&on_a, radix))
                .or_default()
                .push(j2.to_vec());
        });

        for (g, lefts) in &left_by_restriction {
            let Some(rights) = right_by_restriction.get(g) else {
                continue;
            };
            for j1 in lefts {
                let e1 = encode(j1, radix);
                for j2 in rights {
                    report.commuting_pairs_checked += 1;
                    let count = mediating
                        .get(&(e1, encode(j2, radix)))
                        .copied()
                        .unwrap_or(0);
                    if count != 1 {
                        report.failures.push(UniversalFailure {
                            target: q.clone(),
                            j1: bi
                                .elems
                                .iter()
                                .zip(j1)
                                .map(|(e, &w)| (e.clone(), qi.elems[w].clone()))
                                .collect(),
                            j2: ci
                                .elems
                                .iter()
                                .zip(j2)
                                .map(|(e, &w)| (e.clone(), qi.elems[w].clone()))
                                .collect(),
                            mediating: count,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub amalgams_checked: usize,
    pub targets: usize,
    pub commuting_pairs_checked: u64,
    pub failures: usize,
}

/// Exhaustive pushout-vs-oracle sweep: every amalgam with base size at most
/// `max_base` and sides at most `max_side` (structures from the isomorph-free
/// enumeration, including the empty base; embeddings deduplicated up to
/// automorphisms of both ends), checked against every target with at most
/// `max_target` elements.
pub fn exhaustive_universal_sweep(
    class: StructureClass,
    max_base: usize,
    max_side: usize,
    max_target: usize,
    limits: &OracleLimits,
) -> Result<SweepReport> {
    let mut bases = vec![FiniteStructure::empty(class)];
    bases.extend(oracle::enumerate_structures(class, max_base, limits)?);
    let sides = oracle::enumerate_structures(class, max_side, limits)?;

    let side_autos: Vec<Vec<Vec<usize>>> = sides
        .iter()
        .map(|s| raw_embeddings(s, s))
        .collect();

    let mut report = SweepReport {
        targets: oracle::enumerate_structures(class, max_target, limits)?.len(),
        ..Default::default()
    };

    for base in &bases {
        let base_autos = raw_embeddings(base, base);
        // Orbit representatives of embeddings base -> side under
        // Aut(side) x Aut(base); orbit members give isomorphic amalgams.
        let mut legs: Vec<(usize, Vec<usize>)> = Vec::new();
        for (si, side) in sides.iter().enumerate() {
            if side.len() < base.len() {
                continue;
            }
            let radix = side.len().max(1) as u64;
            let embs = raw_embeddings(base, side);
            for f in &embs {
                let enc_f = encode(f, radix);
                let orbit_min = side_autos[si]
                    .iter()
                    .flat_map(|sb| {
                        base_autos.iter().map(move |sa| {
                            let composed: Vec<usize> =
                                sa.iter().map(|&a| sb[f[a]]).collect();
                            encode(&composed, radix)
                        })
                    })
                    .min()
                    .unwrap_or(enc_f);
                if enc_f == orbit_min {
                    legs.push((si, f.clone()));
                }
            }
        }

        for (li, (si1, f1)) in legs.iter().enumerate() {
            for (si2, f2) in legs.iter().skip(li) {
                let left = &sides[*si1];
                let right = &sides[*si2];
                let am = Amalgam::new(
                    base.clone(),
                    left.clone(),
                    right.clone(),
                    index_morphism(base, left, f1)?,
                    index_morphism(base, right, f2)?,
                )?;
                let res = pushout(&am)?;
                let check = check_pushout_universal(&res, &am, max_target, limits)?;
                report.amalgams_checked += 1;
                report.commuting_pairs_checked += check.commuting_pairs_checked;
                report.failures += check.failures.len();
            }
        }
    }
    Ok(report)
}

fn raw_embeddings(dom: &FiniteStructure, cod: &FiniteStructure) -> Vec<Vec<usize>> {
    let di = Indexed::from_structure(dom);
    let ci = Indexed::from_structure(cod);
    let mut out = Vec::new();
    oracle::enumerate_maps(&di, &ci, MapMode::Embedding, &mut |a| out.push(a.to_vec()));
    out
}

fn index_morphism(
    dom: &FiniteStructure,
    cod: &FiniteStructure,
    assign: &[usize],
) -> Result<Morphism> {
    let de: Vec<&ElementId> = dom.elements().iter().collect();
    let ce: Vec<&ElementId> = cod.elements().iter().collect();
    let map: BTreeMap<ElementId, ElementId> = de
        .iter()
        .zip(assign)
        .map(|(e, &w)| ((*e).clone(), ce[w].clone()))
        .collect();
    classify_morphism(&map, dom, cod)?.into_morphism()
}

/// Builds the amalgam of two one-point style extensions over a shared induced
/// substructure named by `shared` inside both `left` and `right`.
pub fn amalgam_over_shared_elements(
    left: &FiniteStructure,
    right: &FiniteStructure,
    shared: &BTreeSet<ElementId>,
) -> Result<Amalgam> {
    let base_left = induced_substructure(left, shared)?;
    let base_right = induced_substructure(right, shared)?;
    if base_left != base_right {
        return Err(Error::Precondition(
            "shared elements do not induce the same structure on both sides".into(),
        ));
    }
    Amalgam::over_identity(&base_left, left.clone(), right.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> ElementId {
        ElementId::from(s)
    }

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> FiniteStructure {
        FiniteStructure::Graph(FiniteGraph::new(
            vertices.iter().map(|v| id(v)),
            edges.iter().map(|(u, v)| (id(u), id(v))),
        ))
    }

    fn poset(elements: &[&str], strict: &[(&str, &str)]) -> FiniteStructure {
        FiniteStructure::Poset(FinitePoset::with_reflexive(
            elements.iter().map(|e| id(e)),
            strict.iter().map(|(a, b)| (id(a), id(b))),
        ))
    }

    fn ids(names: &[&str]) -> BTreeSet<ElementId> {
        names.iter().map(|n| id(n)).collect()
    }

    #[test]
    fn graph_pushout_over_shared_vertex() {
        let left = graph(&["a", "b"], &[("a", "b")]);
        let right = graph(&["a", "c"], &[("a", "c")]);
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a"])).unwrap();
        let res = pushout(&am).unwrap();
        assert_eq!(res.object, graph(&["a", "b", "c"], &[("a", "b"), ("a", "c")]));
        let g = res.object.as_graph().unwrap();
        assert!(!g.has_edge(&id("b"), &id("c")));
    }

    #[test]
    fn identity_amalgam_pushout_is_the_structure_itself() {
        let b = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let am = Amalgam::over_identity(&b, b.clone(), b.clone()).unwrap();
        let res = pushout(&am).unwrap();
        assert_eq!(res.object, b);
        assert_eq!(res.inj_left, Morphism::identity(&b).unwrap());
        assert_eq!(res.inj_right, Morphism::identity(&b).unwrap());
    }

    #[test]
    fn empty_base_pushout_is_the_disjoint_union() {
        let k2a = graph(&["a", "b"], &[("a", "b")]);
        let k2b = graph(&["c", "d"], &[("c", "d")]);
        let am = amalgam_over_shared_elements(&k2a, &k2b, &BTreeSet::new()).unwrap();
        let res = pushout(&am).unwrap();
        assert_eq!(res.object.len(), 4);
        assert_eq!(res.object.as_graph().unwrap().edges().len(), 2);
    }

    #[test]
    fn poset_pushout_closes_transitively() {
        let left = poset(&["a", "b"], &[("a", "b")]); // a < b
        let right = poset(&["a", "c"], &[("c", "a")]); // c < a
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a"])).unwrap();
        let res = pushout(&am).unwrap();
        let p = res.object.as_poset().unwrap();
        assert!(p.lt(&id("c"), &id("a")));
        assert!(p.lt(&id("a"), &id("b")));
        // Added by the closure:
        assert!(p.lt(&id("c"), &id("b")));
    }

    #[test]
    fn poset_identity_amalgam() {
        let b = poset(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let am = Amalgam::over_identity(&b, b.clone(), b.clone()).unwrap();
        let res = pushout(&am).unwrap();
        assert_eq!(res.object, b);
    }

    #[test]
    fn poset_pushout_of_incomparable_extensions_is_an_antichain_over_base() {
        // Oracle expectation: the closure of the union of the two trivial
        // orders adds nothing, leaving a 3-element antichain.
        let left = poset(&["a", "b"], &[]);
        let right = poset(&["a", "c"], &[]);
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a"])).unwrap();
        let res = pushout(&am).unwrap();
        assert_eq!(res.object, poset(&["a", "b", "c"], &[]));
    }

    #[test]
    fn pushout_size_and_edge_count_invariants() {
        let left = graph(&["a", "b", "x"], &[("a", "b"), ("a", "x")]);
        let right = graph(&["a", "b", "y"], &[("a", "b"), ("b", "y")]);
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a", "b"])).unwrap();
        let res = pushout(&am).unwrap();
        assert_eq!(res.object.len(), 3 + 3 - 2);
        // Shared edges counted once.
        assert_eq!(res.object.as_graph().unwrap().edges().len(), 2 + 2 - 1);
    }

    #[test]
    fn poset_pushout_reflects_side_orders_exactly() {
        let left = poset(&["a", "b", "x"], &[("a", "b"), ("a", "x")]);
        let right = poset(&["a", "b", "y"], &[("a", "b"), ("y", "b")]);
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a", "b"])).unwrap();
        let res = pushout(&am).unwrap();
        for (inj, side) in [(&res.inj_left, &left), (&res.inj_right, &right)] {
            assert!(inj.kind() >= MorphismKind::Embedding);
            let p = res.object.as_poset().unwrap();
            let s = side.as_poset().unwrap();
            for x in s.elements() {
                for y in s.elements() {
                    assert_eq!(
                        s.le(x, y),
                        p.le(&inj.apply(x).unwrap(), &inj.apply(y).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn coproduct_cases() {
        let k2 = graph(&["a", "b"], &[("a", "b")]);
        let (single, injs) = coproduct(StructureClass::Graph, &[k2.clone()]).unwrap();
        assert_eq!(single.len(), 2);
        assert_eq!(injs[0].kind(), MorphismKind::Isomorphism);

        let (two, injs) = coproduct(StructureClass::Graph, &[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(two.len(), 4);
        assert_eq!(two.as_graph().unwrap().edges().len(), 2);
        assert_eq!(injs.len(), 2);

        let c2 = poset(&["a", "b"], &[("a", "b")]);
        let (three, _) =
            coproduct(StructureClass::Poset, &[c2.clone(), c2.clone(), c2.clone()]).unwrap();
        assert_eq!(three.len(), 6);
        // Three incomparable chains: strict pairs only inside each part.
        let p = three.as_poset().unwrap();
        let strict = p
            .relation()
            .iter()
            .filter(|(a, b)| a != b)
            .count();
        assert_eq!(strict, 3);

        assert!(matches!(
            coproduct(StructureClass::Metric, &[]),
            Err(Error::UnsupportedClass(_))
        ));
    }

    #[test]
    fn universal_property_holds_for_the_shared_vertex_pushout() {
        let lim = OracleLimits::default();
        let left = graph(&["a", "b"], &[("a", "b")]);
        let right = graph(&["a", "c"], &[("a", "c")]);
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a"])).unwrap();
        let res = pushout(&am).unwrap();
        let report = check_pushout_universal(&res, &am, 3, &lim).unwrap();
        assert!(report.passed());
        assert!(report.commuting_pairs_checked > 0);
    }

    #[test]
    fn universal_property_holds_for_the_poset_chain_pushout() {
        let lim = OracleLimits::default();
        let left = poset(&["a", "b"], &[("a", "b")]);
        let right = poset(&["a", "c"], &[("c", "a")]);
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a"])).unwrap();
        let res = pushout(&am).unwrap();
        let report = check_pushout_universal(&res, &am, 3, &lim).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn corrupted_pushout_fails_the_universal_check() {
        let lim = OracleLimits::default();
        let left = graph(&["a", "b"], &[("a", "b")]);
        let right = graph(&["a", "c"], &[("a", "c")]);
        let am = amalgam_over_shared_elements(&left, &right, &ids(&["a"])).unwrap();
        let good = pushout(&am).unwrap();
        // Add the spurious edge b-c and reclassify the injections into it.
        let corrupted = graph(&["a", "b", "c"], &[("a", "b"), ("a", "c"), ("b", "c")]);
        let bad = PushoutResult {
            inj_left: classify_morphism(good.inj_left.map(), &left, &corrupted)
                .unwrap()
                .into_morphism()
                .unwrap(),
            inj_right: classify_morphism(good.inj_right.map(), &right, &corrupted)
                .unwrap()
                .into_morphism()
                .unwrap(),
            object: corrupted,
        };
        let report = check_pushout_universal(&bad, &am, 3, &lim).unwrap();
        assert!(!report.passed());
        // The witness pair has no mediating homomorphism at all.
        assert!(report.failures.iter().any(|f| f.mediating == 0));
    }

    #[test]
    fn small_sweep_passes_both_classes() {
        let lim = OracleLimits::default();
        for class in [StructureClass::Graph, StructureClass::Poset] {
            let report = exhaustive_universal_sweep(class, 1, 2, 3, &lim).unwrap();
            assert_eq!(report.failures, 0, "{class} sweep failed");
            assert!(report.amalgams_checked > 0);
        }
    }
}
