//! One-point homomorphism extension (1PHEP) for graphs, posets, and rational
//! metric spaces, plus a bounded decision procedure for whole classes.
//!
//! Given a surjective homomorphism `phi : B -> B'` and a one-point extension
//! `C = B + x`, each extender produces a structure `C'` containing `B'` and a
//! homomorphism `phi' : C -> C'` agreeing with `phi` on `B`:
//!
//! * graphs: a fresh vertex adjacent to the images of `x`'s neighbors;
//! * posets: a fresh element inserted between the down-closure of the image of
//!   `x`'s lower set and the up-closure of the image of its upper set, unless
//!   the two images already meet in a (necessarily unique) element, which is
//!   then forced to be the image of `x`;
//! * metric spaces: the distance recurrence over representatives sorted by
//!   distance to the new point, entirely in exact rational arithmetic.
//!
//! [`check_1phep_class`] is the oracle view: it exhaustively searches small
//! instances of a class for an extension witness and reports the first
//! counterexample in canonical order (the clique-free classes fail exactly on
//! the anti-clique-to-clique bijection).

use std::collections::{BTreeMap, BTreeSet};

use num::Zero;

use crate::error::{Error, Result};
use crate::oracle::{self, Indexed, MapMode, OracleLimits};
use crate::rational::Rational;
use crate::structures::{
    classify_morphism, ensure_valid, fresh_name, unordered, ElementId, FiniteGraph, FinitePoset,
    FiniteStructure, Morphism, RationalMetricSpace, StructureClass,
};

/// Class-specific description of how a new element attaches to a base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attachment {
    Graph {
        neighbors: BTreeSet<ElementId>,
    },
    Poset {
        lower: BTreeSet<ElementId>,
        upper: BTreeSet<ElementId>,
    },
    Metric {
        distances: BTreeMap<ElementId, Rational>,
    },
}

impl Attachment {
    pub fn class(&self) -> StructureClass {
        match self {
            Attachment::Graph { .. } => StructureClass::Graph,
            Attachment::Poset { .. } => StructureClass::Poset,
            Attachment::Metric { .. } => StructureClass::Metric,
        }
    }
}

/// A validated one-point extension `C = B + x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OnePointExtension {
    base: FiniteStructure,
    new_element: ElementId,
    attachment: Attachment,
}

impl OnePointExtension {
    pub fn new(
        base: FiniteStructure,
        new_element: ElementId,
        attachment: Attachment,
    ) -> Result<OnePointExtension> {
        ensure_valid(&base)?;
        if attachment.class() != base.class() {
            return Err(Error::MalformedInput(
                "attachment class does not match the base".into(),
            ));
        }
        if base.contains(&new_element) {
            return Err(Error::MalformedInput(format!(
                "new element {new_element} already belongs to the base"
            )));
        }
        match &attachment {
            Attachment::Graph { neighbors } => {
                for v in neighbors {
                    if !base.contains(v) {
                        return Err(Error::MalformedInput(format!(
                            "attachment neighbor {v} is not a base vertex"
                        )));
                    }
                }
            }
            Attachment::Poset { lower, upper } => {
                let p = base.as_poset()?;
                for e in lower.iter().chain(upper) {
                    if !base.contains(e) {
                        return Err(Error::MalformedInput(format!(
                            "attachment element {e} is not in the base"
                        )));
                    }
                }
                if lower.intersection(upper).next().is_some() {
                    return Err(Error::Precondition(
                        "lower and upper sets must be disjoint".into(),
                    ));
                }
                for l in lower {
                    for b in p.elements() {
                        if p.le(b, l) && !lower.contains(b) {
                            return Err(Error::Precondition(format!(
                                "lower set is not downward closed: misses {b} <= {l}"
                            )));
                        }
                    }
                }
                for u in upper {
                    for b in p.elements() {
                        if p.le(u, b) && !upper.contains(b) {
                            return Err(Error::Precondition(format!(
                                "upper set is not upward closed: misses {u} <= {b}"
                            )));
                        }
                    }
                }
                for l in lower {
                    for u in upper {
                        if !p.le(l, u) {
                            return Err(Error::Precondition(format!(
                                "{l} < {u} must hold for a valid insertion"
                            )));
                        }
                    }
                }
            }
            Attachment::Metric { distances } => {
                let m = base.as_metric()?;
                for x in m.points() {
                    match distances.get(x) {
                        None => {
                            return Err(Error::MalformedInput(format!(
                                "missing distance to base point {x}"
                            )))
                        }
                        Some(d) if *d <= Rational::zero() => {
                            return Err(Error::Precondition(format!(
                                "d({new_element}, {x}) must be positive"
                            )))
                        }
                        Some(_) => {}
                    }
                }
                for key in distances.keys() {
                    if !base.contains(key) {
                        return Err(Error::MalformedInput(format!(
                            "distance given to unknown point {key}"
                        )));
                    }
                }
            }
        }
        let ext = OnePointExtension {
            base,
            new_element,
            attachment,
        };
        // The extended structure must satisfy every axiom (for metric spaces
        // this is where the new point's triangle inequalities are checked).
        ensure_valid(&ext.extended())?;
        Ok(ext)
    }

    pub fn graph(
        base: FiniteStructure,
        new_element: ElementId,
        neighbors: BTreeSet<ElementId>,
    ) -> Result<OnePointExtension> {
        OnePointExtension::new(base, new_element, Attachment::Graph { neighbors })
    }

    pub fn poset(
        base: FiniteStructure,
        new_element: ElementId,
        lower: BTreeSet<ElementId>,
        upper: BTreeSet<ElementId>,
    ) -> Result<OnePointExtension> {
        OnePointExtension::new(base, new_element, Attachment::Poset { lower, upper })
    }

    pub fn metric(
        base: FiniteStructure,
        new_element: ElementId,
        distances: BTreeMap<ElementId, Rational>,
    ) -> Result<OnePointExtension> {
        OnePointExtension::new(base, new_element, Attachment::Metric { distances })
    }

    pub fn base(&self) -> &FiniteStructure {
        &self.base
    }

    pub fn new_element(&self) -> &ElementId {
        &self.new_element
    }

    pub fn attachment(&self) -> &Attachment {
        &self.attachment
    }

    /// Materialises `C = B + x`.
    pub fn extended(&self) -> FiniteStructure {
        let x = self.new_element.clone();
        match (&self.base, &self.attachment) {
            (FiniteStructure::Graph(g), Attachment::Graph { neighbors }) => {
                let mut vertices: Vec<ElementId> = g.vertices().iter().cloned().collect();
                vertices.push(x.clone());
                let mut edges: Vec<(ElementId, ElementId)> = g.edges().iter().cloned().collect();
                edges.extend(neighbors.iter().map(|v| unordered(x.clone(), v.clone())));
                FiniteStructure::Graph(FiniteGraph::new(vertices, edges))
            }
            (FiniteStructure::Poset(p), Attachment::Poset { lower, upper }) => {
                let mut elements: Vec<ElementId> = p.elements().iter().cloned().collect();
                elements.push(x.clone());
                let mut rel: Vec<(ElementId, ElementId)> = p.relation().iter().cloned().collect();
                rel.push((x.clone(), x.clone()));
                rel.extend(lower.iter().map(|l| (l.clone(), x.clone())));
                rel.extend(upper.iter().map(|u| (x.clone(), u.clone())));
                // Down/up closure of the attachment sets makes this already
                // transitively closed.
                FiniteStructure::Poset(FinitePoset::new(elements, rel))
            }
            (FiniteStructure::Metric(m), Attachment::Metric { distances }) => {
                let mut points: Vec<ElementId> = m.points().iter().cloned().collect();
                points.push(x.clone());
                let mut dist: Vec<((ElementId, ElementId), Rational)> = m
                    .distances()
                    .iter()
                    .map(|(k, v)| (k.clone(), v.clone()))
                    .collect();
                dist.extend(
                    distances
                        .iter()
                        .map(|(p, d)| (unordered(x.clone(), p.clone()), d.clone())),
                );
                FiniteStructure::Metric(RationalMetricSpace::new(points, dist))
            }
            _ => unreachable!("attachment class checked at construction"),
        }
    }
}

fn require_surjective(phi: &Morphism, class: StructureClass) -> Result<()> {
    if phi.domain().class() != class {
        return Err(Error::MalformedInput(format!(
            "expected a {class} homomorphism"
        )));
    }
    if !phi.is_surjective() {
        return Err(Error::Precondition(
            "the homomorphism to extend must be surjective".into(),
        ));
    }
    Ok(())
}

fn require_matching_base(phi: &Morphism, ext: &OnePointExtension) -> Result<()> {
    if ext.base() != phi.domain() {
        return Err(Error::Precondition(
            "extension base must equal the homomorphism's domain".into(),
        ));
    }
    Ok(())
}

/// Extends a surjective graph homomorphism over a one-point extension: the
/// fresh vertex is adjacent to `v` exactly when some preimage of `v` is a
/// neighbor of the new source vertex.
pub fn extend_one_point_graph(
    phi: &Morphism,
    ext: &OnePointExtension,
) -> Result<(FiniteStructure, Morphism)> {
    require_surjective(phi, StructureClass::Graph)?;
    require_matching_base(phi, ext)?;
    let Attachment::Graph { neighbors } = ext.attachment() else {
        return Err(Error::MalformedInput("graph attachment expected".into()));
    };
    let cod = phi.codomain().as_graph()?;
    let image_neighbors: BTreeSet<ElementId> = neighbors
        .iter()
        .map(|u| phi.apply(u))
        .collect::<Result<_>>()?;
    let fresh = fresh_name(cod.vertices(), ext.new_element());

    let mut vertices: Vec<ElementId> = cod.vertices().iter().cloned().collect();
    vertices.push(fresh.clone());
    let mut edges: Vec<(ElementId, ElementId)> = cod.edges().iter().cloned().collect();
    edges.extend(
        image_neighbors
            .iter()
            .map(|v| unordered(fresh.clone(), v.clone())),
    );
    let extended_cod = FiniteStructure::Graph(FiniteGraph::new(vertices, edges));

    let mut map = phi.map().clone();
    map.insert(ext.new_element().clone(), fresh);
    let phi_ext = classify_morphism(&map, &ext.extended(), &extended_cod)?.into_morphism()?;
    debug_assert!(phi_ext.is_surjective());
    Ok((extended_cod, phi_ext))
}

/// Extends a surjective poset homomorphism over a one-point extension.
///
/// With `L` and `U` the lower and upper sets of the new element, the image
/// sets can meet in at most one element; if they meet, that element is the
/// forced image, otherwise a fresh element is inserted between the
/// down-closure of the image of `L` and the up-closure of the image of `U`.
pub fn extend_one_point_poset(
    phi: &Morphism,
    ext: &OnePointExtension,
) -> Result<(FiniteStructure, Morphism)> {
    require_surjective(phi, StructureClass::Poset)?;
    require_matching_base(phi, ext)?;
    let Attachment::Poset { lower, upper } = ext.attachment() else {
        return Err(Error::MalformedInput("poset attachment expected".into()));
    };
    let cod = phi.codomain().as_poset()?;
    let image_lower: BTreeSet<ElementId> =
        lower.iter().map(|l| phi.apply(l)).collect::<Result<_>>()?;
    let image_upper: BTreeSet<ElementId> =
        upper.iter().map(|u| phi.apply(u)).collect::<Result<_>>()?;
    let meet: Vec<&ElementId> = image_lower.intersection(&image_upper).collect();

    match meet.len() {
        0 => {
            let fresh = fresh_name(cod.elements(), ext.new_element());
            let below: BTreeSet<ElementId> =
                image_lower.iter().flat_map(|z| cod.down_set(z)).collect();
            let above: BTreeSet<ElementId> =
                image_upper.iter().flat_map(|z| cod.up_set(z)).collect();
            let mut elements: Vec<ElementId> = cod.elements().iter().cloned().collect();
            elements.push(fresh.clone());
            let mut rel: Vec<(ElementId, ElementId)> = cod.relation().iter().cloned().collect();
            rel.push((fresh.clone(), fresh.clone()));
            rel.extend(below.iter().map(|b| (b.clone(), fresh.clone())));
            rel.extend(above.iter().map(|a| (fresh.clone(), a.clone())));
            let extended_cod =
                FiniteStructure::Poset(transitive_closure(FinitePoset::new(elements, rel))?);
            ensure_valid(&extended_cod).map_err(|e| {
                Error::InternalConsistency(format!(
                    "poset insertion produced an invalid order: {e}"
                ))
            })?;
            let mut map = phi.map().clone();
            map.insert(ext.new_element().clone(), fresh);
            let phi_ext =
                classify_morphism(&map, &ext.extended(), &extended_cod)?.into_morphism()?;
            debug_assert!(phi_ext.is_surjective());
            Ok((extended_cod, phi_ext))
        }
        1 => {
            let forced = meet[0].clone();
            let mut map = phi.map().clone();
            map.insert(ext.new_element().clone(), forced);
            let phi_ext =
                classify_morphism(&map, &ext.extended(), phi.codomain())?.into_morphism()?;
            Ok((phi.codomain().clone(), phi_ext))
        }
        _ => Err(Error::InternalConsistency(
            "image lower and upper sets meet in more than one element".into(),
        )),
    }
}

fn transitive_closure(p: FinitePoset) -> Result<FinitePoset> {
    let elems: Vec<ElementId> = p.elements().iter().cloned().collect();
    let n = elems.len();
    let pos: BTreeMap<&ElementId, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut le = vec![vec![false; n]; n];
    for (a, b) in p.relation() {
        le[pos[a]][pos[b]] = true;
    }
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
    let mut rel = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                if i != j && le[j][i] {
                    return Err(Error::InternalConsistency(format!(
                        "closure broke antisymmetry at ({}, {})",
                        elems[i], elems[j]
                    )));
                }
                rel.push((elems[i].clone(), elems[j].clone()));
            }
        }
    }
    Ok(FinitePoset::new(elems, rel))
}

/// Details of one metric extension: the computed distances, the sort order
/// they refer to, and the chosen preimage representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricExtensionResult {
    /// `deltas[i]` is the distance from the fresh point to the image of
    /// `order[i]`.
    pub deltas: Vec<Rational>,
    /// Representative points sorted by distance to the new point (ties broken
    /// by element id).
    pub order: Vec<ElementId>,
    /// For each codomain point `z`, the chosen preimage closest to the new
    /// point.
    pub representatives: BTreeMap<ElementId, ElementId>,
}

/// Extends a surjective non-expanding map over a one-point metric extension.
///
/// Non-injective maps are first reduced to a bijection by picking, for each
/// codomain point, a preimage of minimal distance to the new point; the
/// distance recurrence then runs over the representatives sorted by that
/// distance. All arithmetic is exact.
pub fn extend_one_point_metric(
    phi: &Morphism,
    ext: &OnePointExtension,
) -> Result<(FiniteStructure, Morphism, MetricExtensionResult)> {
    let order = canonical_metric_order(phi, ext)?;
    extend_one_point_metric_with_order(phi, ext, &order)
}

/// Picks representatives and sorts them by distance to the new point, ties by
/// element id.
pub fn canonical_metric_order(phi: &Morphism, ext: &OnePointExtension) -> Result<Vec<ElementId>> {
    require_surjective(phi, StructureClass::Metric)?;
    require_matching_base(phi, ext)?;
    let Attachment::Metric { distances } = ext.attachment() else {
        return Err(Error::MalformedInput("metric attachment expected".into()));
    };
    let mut reps: BTreeMap<ElementId, ElementId> = BTreeMap::new();
    for (x, z) in phi.map() {
        let better = match reps.get(z) {
            None => true,
            Some(cur) => {
                let dx = &distances[x];
                let dc = &distances[cur];
                dx < dc || (dx == dc && x < cur)
            }
        };
        if better {
            reps.insert(z.clone(), x.clone());
        }
    }
    let mut order: Vec<ElementId> = reps.into_values().collect();
    order.sort_by(|a, b| distances[a].cmp(&distances[b]).then_with(|| a.cmp(b)));
    Ok(order)
}

/// Same as [`extend_one_point_metric`] but with an explicit processing order
/// of the representatives, which must be non-decreasing in distance to the
/// new point. Exposed so robustness under tie permutations can be asserted.
pub fn extend_one_point_metric_with_order(
    phi: &Morphism,
    ext: &OnePointExtension,
    order: &[ElementId],
) -> Result<(FiniteStructure, Morphism, MetricExtensionResult)> {
    require_surjective(phi, StructureClass::Metric)?;
    require_matching_base(phi, ext)?;
    let Attachment::Metric { distances } = ext.attachment() else {
        return Err(Error::MalformedInput("metric attachment expected".into()));
    };
    let cod = phi.codomain().as_metric()?;

    // Validate that `order` is a system of representatives sorted by d(y, .).
    let mut reps: BTreeMap<ElementId, ElementId> = BTreeMap::new();
    for x in order {
        if !ext.base().contains(x) {
            return Err(Error::MalformedInput(format!("{x} is not a base point")));
        }
        let z = phi.apply(x)?;
        if reps.insert(z, x.clone()).is_some() {
            return Err(Error::MalformedInput(
                "order contains two preimages of the same point".into(),
            ));
        }
    }
    if reps.len() != cod.points().len() {
        return Err(Error::MalformedInput(
            "order must cover every codomain point exactly once".into(),
        ));
    }
    for (x, z) in phi.map() {
        let rep = &reps[z];
        if distances[x] < distances[rep] {
            return Err(Error::MalformedInput(format!(
                "representative of {z} is not distance-minimal: {x} is closer"
            )));
        }
    }
    for w in order.windows(2) {
        if distances[&w[0]] > distances[&w[1]] {
            return Err(Error::MalformedInput(
                "order is not sorted by distance to the new point".into(),
            ));
        }
    }

    // The recurrence: delta_0 = d(y, x_0),
    // delta_i = min(d(y, x_i), min_{k<i} d(y, x_k) + d(phi(x_k), phi(x_i))).
    let mut deltas: Vec<Rational> = Vec::with_capacity(order.len());
    for (i, xi) in order.iter().enumerate() {
        let mut best = distances[xi].clone();
        for xk in order.iter().take(i) {
            let through = distances[xk].clone()
                + cod
                    .dist(&phi.apply(xk)?, &phi.apply(xi)?)
                    .expect("validated codomain");
            if through < best {
                best = through;
            }
        }
        deltas.push(best);
    }

    let fresh = fresh_name(cod.points(), ext.new_element());
    let mut points: Vec<ElementId> = cod.points().iter().cloned().collect();
    points.push(fresh.clone());
    let mut dist: Vec<((ElementId, ElementId), Rational)> = cod
        .distances()
        .iter()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    for (xi, delta) in order.iter().zip(&deltas) {
        dist.push((unordered(fresh.clone(), phi.apply(xi)?), delta.clone()));
    }
    let extended_cod = FiniteStructure::Metric(RationalMetricSpace::new(points, dist));
    ensure_valid(&extended_cod).map_err(|e| {
        Error::InternalConsistency(format!("metric extension violates an axiom: {e}"))
    })?;

    let mut map = phi.map().clone();
    map.insert(ext.new_element().clone(), fresh);
    let phi_ext = classify_morphism(&map, &ext.extended(), &extended_cod)?.into_morphism()?;
    Ok((
        extended_cod,
        phi_ext,
        MetricExtensionResult {
            deltas,
            order: order.to_vec(),
            representatives: reps,
        },
    ))
}

/// One representative per orbit of attachments under the base's automorphism
/// group: isomorph-free one-point extension types over a fixed base.
pub fn enumerate_one_point_extensions(
    base: &FiniteStructure,
    limits: &OracleLimits,
) -> Result<Vec<OnePointExtension>> {
    ensure_valid(base)?;
    if base.len() > limits.hom_domain_cap {
        return Err(Error::ResourceBound(format!(
            "extension enumeration capped at base size {}",
            limits.hom_domain_cap
        )));
    }
    let idx = Indexed::from_structure(base);
    let n = idx.n;
    let mut autos: Vec<Vec<usize>> = Vec::new();
    oracle::enumerate_maps(&idx, &idx, MapMode::Embedding, &mut |a| {
        autos.push(a.to_vec())
    });
    let apply_mask = |perm: &[usize], mask: u32| -> u32 {
        let mut out = 0u32;
        for i in 0..n {
            if mask >> i & 1 == 1 {
                out |= 1 << perm[i];
            }
        }
        out
    };
    let set_of = |mask: u32| -> BTreeSet<ElementId> {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| idx.elems[i].clone())
            .collect()
    };
    let x = fresh_name(base.elements(), &ElementId::new("x"));

    let mut out = Vec::new();
    match base.class() {
        StructureClass::Graph => {
            for mask in 0u32..(1 << n) {
                let orbit_min = autos.iter().map(|p| apply_mask(p, mask)).min().unwrap();
                if mask != orbit_min {
                    continue;
                }
                out.push(OnePointExtension::graph(
                    base.clone(),
                    x.clone(),
                    set_of(mask),
                )?);
            }
            out.sort_by_key(|e| match e.attachment() {
                Attachment::Graph { neighbors } => (neighbors.len(), neighbors.clone()),
                _ => unreachable!(),
            });
        }
        StructureClass::Poset => {
            // ups[i] = indices above i, downs[i] = indices below i.
            let ups = idx.rel.clone();
            let mut downs = vec![0u32; n];
            for i in 0..n {
                for j in 0..n {
                    if ups[j] >> i & 1 == 1 {
                        downs[i] |= 1 << j;
                    }
                }
            }
            for lower in 0u32..(1 << n) {
                // Downward closed.
                if (0..n).any(|i| lower >> i & 1 == 1 && downs[i] & !lower != 0) {
                    continue;
                }
                for upper in 0u32..(1 << n) {
                    if lower & upper != 0 {
                        continue;
                    }
                    // Upward closed (mask out bits beyond n).
                    if (0..n).any(|i| {
                        upper >> i & 1 == 1 && ups[i] & !upper & ((1 << n) - 1) != 0
                    }) {
                        continue;
                    }
                    // l < u for every pair.
                    if (0..n).any(|i| lower >> i & 1 == 1 && upper & !ups[i] != 0) {
                        continue;
                    }
                    let orbit_min = autos
                        .iter()
                        .map(|p| (apply_mask(p, lower), apply_mask(p, upper)))
                        .min()
                        .unwrap();
                    if (lower, upper) != orbit_min {
                        continue;
                    }
                    out.push(OnePointExtension::poset(
                        base.clone(),
                        x.clone(),
                        set_of(lower),
                        set_of(upper),
                    )?);
                }
            }
            out.sort_by_key(|e| match e.attachment() {
                Attachment::Poset { lower, upper } => {
                    (lower.len() + upper.len(), lower.clone(), upper.clone())
                }
                _ => unreachable!(),
            });
        }
        StructureClass::Metric => {
            return Err(Error::UnsupportedClass(
                "metric one-point extensions form an infinite family".into(),
            ))
        }
    }
    Ok(out)
}

/// A structure class the 1PHEP decision procedure understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassSpec {
    Graphs,
    Posets,
    /// Graphs omitting the clique on `n` vertices (`n = 3` is triangle-free).
    CliqueFree(usize),
    /// Graphs omitting the anti-clique (independent set) on `n` vertices.
    AnticliqueFree(usize),
}

impl ClassSpec {
    pub fn base_class(&self) -> StructureClass {
        match self {
            ClassSpec::Posets => StructureClass::Poset,
            _ => StructureClass::Graph,
        }
    }

    pub fn contains(&self, s: &FiniteStructure) -> Result<bool> {
        Ok(match self {
            ClassSpec::Graphs => s.class() == StructureClass::Graph,
            ClassSpec::Posets => s.class() == StructureClass::Poset,
            ClassSpec::CliqueFree(n) => {
                s.class() == StructureClass::Graph && !has_clique(s.as_graph()?, *n, true)
            }
            ClassSpec::AnticliqueFree(n) => {
                s.class() == StructureClass::Graph && !has_clique(s.as_graph()?, *n, false)
            }
        })
    }
}

impl std::fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassSpec::Graphs => write!(f, "graphs"),
            ClassSpec::Posets => write!(f, "posets"),
            ClassSpec::CliqueFree(n) => write!(f, "K{n}-free graphs"),
            ClassSpec::AnticliqueFree(n) => write!(f, "anti-K{n}-free graphs"),
        }
    }
}

/// `edges_present = true` searches for a clique, `false` for an anti-clique.
fn has_clique(g: &FiniteGraph, size: usize, edges_present: bool) -> bool {
    fn rec(
        g: &FiniteGraph,
        verts: &[&ElementId],
        chosen: &mut Vec<usize>,
        start: usize,
        size: usize,
        edges_present: bool,
    ) -> bool {
        if chosen.len() == size {
            return true;
        }
        for i in start..verts.len() {
            if chosen
                .iter()
                .all(|&j| g.has_edge(verts[j], verts[i]) == edges_present)
            {
                chosen.push(i);
                if rec(g, verts, chosen, i + 1, size, edges_present) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if size == 0 {
        return true;
    }
    let verts: Vec<&ElementId> = g.vertices().iter().collect();
    rec(g, &verts, &mut Vec::new(), 0, size, edges_present)
}

/// A failed 1PHEP instance: the surjection and the one-point extension no
/// class member can absorb.
#[derive(Debug, Clone)]
pub struct PhepCounterexample {
    pub base: FiniteStructure,
    pub image: FiniteStructure,
    pub hom: Morphism,
    pub extension: OnePointExtension,
}

#[derive(Debug, Clone)]
pub enum PhepOutcome {
    Pass { instances_checked: u64 },
    Counterexample(Box<PhepCounterexample>),
}

impl PhepOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, PhepOutcome::Pass { .. })
    }
}

/// Bounded 1PHEP decision: enumerates every surjective homomorphism between
/// class members with domain size at most `max_size` and every one-point
/// extension of the domain inside the class, then searches for a one-point
/// extension of the image (or the image itself) admitting the extension.
/// Returns the first counterexample in canonical enumeration order.
pub fn check_1phep_class(
    spec: ClassSpec,
    max_size: usize,
    limits: &OracleLimits,
) -> Result<PhepOutcome> {
    let class = spec.base_class();
    let all = oracle::enumerate_structures(class, max_size, limits)?;
    let members: Vec<&FiniteStructure> = all
        .iter()
        .filter(|s| spec.contains(s).unwrap_or(false))
        .collect();
    let mut instances: u64 = 0;

    for base in &members {
        let extensions: Vec<OnePointExtension> = enumerate_one_point_extensions(base, limits)?
            .into_iter()
            .filter(|e| spec.contains(&e.extended()).unwrap_or(false))
            .collect();
        for image in &members {
            if image.len() > base.len() {
                continue;
            }
            let homs = oracle::all_homomorphisms(base, image, limits)?;
            for phi in homs.iter().filter(|h| h.is_surjective()) {
                for ext in &extensions {
                    instances += 1;
                    if !extension_witness_exists(&spec, phi, ext)? {
                        return Ok(PhepOutcome::Counterexample(Box::new(PhepCounterexample {
                            base: (*base).clone(),
                            image: (*image).clone(),
                            hom: phi.clone(),
                            extension: ext.clone(),
                        })));
                    }
                }
            }
        }
    }
    Ok(PhepOutcome::Pass {
        instances_checked: instances,
    })
}

/// Searches for a class member `C'` (the image itself, or a one-point
/// extension of it) admitting a homomorphism `C -> C'` extending `phi`.
fn extension_witness_exists(
    spec: &ClassSpec,
    phi: &Morphism,
    ext: &OnePointExtension,
) -> Result<bool> {
    let image = phi.codomain();
    match ext.attachment() {
        Attachment::Graph { neighbors } => {
            let g = image.as_graph()?;
            let image_nbrs: BTreeSet<ElementId> = neighbors
                .iter()
                .map(|u| phi.apply(u))
                .collect::<Result<_>>()?;
            // Map the new vertex onto an existing one.
            for v in g.vertices() {
                if image_nbrs.iter().all(|w| g.has_edge(v, w)) {
                    return Ok(true);
                }
            }
            // Or onto a fresh vertex whose attachment covers the images and
            // keeps the result inside the class.
            let verts: Vec<&ElementId> = g.vertices().iter().collect();
            let n = verts.len();
            let fresh = fresh_name(g.vertices(), ext.new_element());
            for mask in 0u32..(1 << n) {
                let att: BTreeSet<ElementId> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| verts[i].clone())
                    .collect();
                if !image_nbrs.is_subset(&att) {
                    continue;
                }
                let candidate =
                    OnePointExtension::graph(image.clone(), fresh.clone(), att)?.extended();
                if spec.contains(&candidate)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Attachment::Poset { lower, upper } => {
            let p = image.as_poset()?;
            let image_lower: BTreeSet<ElementId> =
                lower.iter().map(|l| phi.apply(l)).collect::<Result<_>>()?;
            let image_upper: BTreeSet<ElementId> =
                upper.iter().map(|u| phi.apply(u)).collect::<Result<_>>()?;
            // Existing element between the image sets.
            for v in p.elements() {
                if image_lower.iter().all(|l| p.le(l, v))
                    && image_upper.iter().all(|u| p.le(v, u))
                {
                    return Ok(true);
                }
            }
            // Fresh element: any valid insertion pair covering the images.
            let elems: Vec<&ElementId> = p.elements().iter().collect();
            let n = elems.len();
            let fresh = fresh_name(p.elements(), ext.new_element());
            for lmask in 0u32..(1 << n) {
                'umask: for umask in 0u32..(1 << n) {
                    if lmask & umask != 0 {
                        continue;
                    }
                    let lset: BTreeSet<ElementId> = (0..n)
                        .filter(|i| lmask >> i & 1 == 1)
                        .map(|i| elems[i].clone())
                        .collect();
                    let uset: BTreeSet<ElementId> = (0..n)
                        .filter(|i| umask >> i & 1 == 1)
                        .map(|i| elems[i].clone())
                        .collect();
                    if !image_lower.is_subset(&lset) || !image_upper.is_subset(&uset) {
                        continue;
                    }
                    for l in &lset {
                        for b in p.elements() {
                            if p.le(b, l) && !lset.contains(b) {
                                continue 'umask;
                            }
                        }
                        for u in &uset {
                            if !p.le(l, u) {
                                continue 'umask;
                            }
                        }
                    }
                    for u in &uset {
                        for b in p.elements() {
                            if p.le(u, b) && !uset.contains(b) {
                                continue 'umask;
                            }
                        }
                    }
                    let candidate =
                        OnePointExtension::poset(image.clone(), fresh.clone(), lset, uset)?
                            .extended();
                    if spec.contains(&candidate)? {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
        Attachment::Metric { .. } => Err(Error::UnsupportedClass(
            "class-level 1PHEP checking is for graph and poset classes".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rational, rational_int};

    fn id(s: &str) -> ElementId {
        ElementId::from(s)
    }

    fn ids(names: &[&str]) -> BTreeSet<ElementId> {
        names.iter().map(|n| id(n)).collect()
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

    fn metric(points: &[&str], dists: &[(&str, &str, Rational)]) -> FiniteStructure {
        FiniteStructure::Metric(RationalMetricSpace::new(
            points.iter().map(|p| id(p)),
            dists
                .iter()
                .map(|(x, y, d)| ((id(x), id(y)), d.clone()))
                .collect::<Vec<_>>(),
        ))
    }

    fn hom(dom: &FiniteStructure, cod: &FiniteStructure, pairs: &[(&str, &str)]) -> Morphism {
        let map: BTreeMap<_, _> = pairs.iter().map(|(a, b)| (id(a), id(b))).collect();
        classify_morphism(&map, dom, cod)
            .unwrap()
            .into_morphism()
            .unwrap()
    }

    #[test]
    fn graph_extension_over_identity_reproduces_the_extension() {
        let g = graph(&["a", "b"], &[("a", "b")]);
        let phi = Morphism::identity(&g).unwrap();
        let ext = OnePointExtension::graph(g.clone(), id("x"), ids(&["a"])).unwrap();
        let (h, phi_ext) = extend_one_point_graph(&phi, &ext).unwrap();
        assert_eq!(h, ext.extended());
        assert_eq!(phi_ext.apply(&id("x")).unwrap(), id("x"));
    }

    #[test]
    fn graph_extension_collapse_case() {
        // G = two isolated vertices, H = one vertex, x adjacent to u1 only.
        let g = graph(&["u1", "u2"], &[]);
        let h = graph(&["v"], &[]);
        let phi = hom(&g, &h, &[("u1", "v"), ("u2", "v")]);
        let ext = OnePointExtension::graph(g.clone(), id("x"), ids(&["u1"])).unwrap();
        let (h2, phi_ext) = extend_one_point_graph(&phi, &ext).unwrap();
        let x_img = phi_ext.apply(&id("x")).unwrap();
        assert!(h2.as_graph().unwrap().has_edge(&x_img, &id("v")));
    }

    #[test]
    fn graph_extension_requires_surjectivity() {
        let g = graph(&["a"], &[]);
        let h = graph(&["p", "q"], &[]);
        let phi = hom(&g, &h, &[("a", "p")]);
        let ext = OnePointExtension::graph(g.clone(), id("x"), BTreeSet::new()).unwrap();
        assert!(matches!(
            extend_one_point_graph(&phi, &ext),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn graph_extension_exhaustive_small_instances_are_homomorphisms() {
        let lim = OracleLimits::default();
        let all = oracle::enumerate_structures(StructureClass::Graph, 3, &lim).unwrap();
        for base in &all {
            let exts = enumerate_one_point_extensions(base, &lim).unwrap();
            for image in &all {
                if image.len() > base.len() {
                    continue;
                }
                for phi in oracle::all_homomorphisms(base, image, &lim).unwrap() {
                    if !phi.is_surjective() {
                        continue;
                    }
                    for ext in &exts {
                        let (_, phi_ext) = extend_one_point_graph(&phi, ext).unwrap();
                        for e in base.elements() {
                            assert_eq!(phi_ext.apply(e).unwrap(), phi.apply(e).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn poset_forced_case_maps_onto_the_meet() {
        // B: a < b collapsed onto a single point p; x sits between a and b.
        let b = poset(&["a", "b"], &[("a", "b")]);
        let bprime = poset(&["p"], &[]);
        let phi = hom(&b, &bprime, &[("a", "p"), ("b", "p")]);
        let ext = OnePointExtension::poset(b.clone(), id("x"), ids(&["a"]), ids(&["b"])).unwrap();
        let (cprime, phi_ext) = extend_one_point_poset(&phi, &ext).unwrap();
        assert_eq!(cprime, bprime);
        assert_eq!(phi_ext.apply(&id("x")).unwrap(), id("p"));
    }

    #[test]
    fn poset_insertion_case() {
        let b = poset(&["a", "b"], &[("a", "b")]);
        let phi = Morphism::identity(&b).unwrap();
        let ext = OnePointExtension::poset(b.clone(), id("x"), ids(&["a"]), ids(&["b"])).unwrap();
        let (cprime, phi_ext) = extend_one_point_poset(&phi, &ext).unwrap();
        let p = cprime.as_poset().unwrap();
        let y = phi_ext.apply(&id("x")).unwrap();
        assert!(p.lt(&id("a"), &y));
        assert!(p.lt(&y, &id("b")));
    }

    #[test]
    fn poset_extension_exhaustive_small_instances() {
        let lim = OracleLimits::default();
        let all = oracle::enumerate_structures(StructureClass::Poset, 3, &lim).unwrap();
        for base in &all {
            let exts = enumerate_one_point_extensions(base, &lim).unwrap();
            for image in &all {
                if image.len() > base.len() {
                    continue;
                }
                for phi in oracle::all_homomorphisms(base, image, &lim).unwrap() {
                    if !phi.is_surjective() {
                        continue;
                    }
                    for ext in &exts {
                        let (cprime, phi_ext) = extend_one_point_poset(&phi, ext).unwrap();
                        assert!(crate::structures::validate(&cprime).is_valid());
                        for e in base.elements() {
                            assert_eq!(phi_ext.apply(e).unwrap(), phi.apply(e).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn metric_single_point_delta_is_the_given_distance() {
        let m = metric(&["x0"], &[]);
        let phi = Morphism::identity(&m).unwrap();
        let q = rational(7, 3);
        let ext = OnePointExtension::metric(
            m.clone(),
            id("y"),
            [(id("x0"), q.clone())].into_iter().collect(),
        )
        .unwrap();
        let (m1, phi_ext, detail) = extend_one_point_metric(&phi, &ext).unwrap();
        assert_eq!(detail.deltas, vec![q.clone()]);
        let y_img = phi_ext.apply(&id("y")).unwrap();
        assert_eq!(m1.as_metric().unwrap().dist(&y_img, &id("x0")).unwrap(), q);
    }

    #[test]
    fn metric_two_point_case_without_truncation() {
        // d(x0,x1)=2, images at distance 1, d(y,x0)=d(y,x1)=1 -> deltas (1, 1).
        let m = metric(&["x0", "x1"], &[("x0", "x1", rational_int(2))]);
        let mprime = metric(&["z0", "z1"], &[("z0", "z1", rational_int(1))]);
        let phi = hom(&m, &mprime, &[("x0", "z0"), ("x1", "z1")]);
        let ext = OnePointExtension::metric(
            m.clone(),
            id("y"),
            [(id("x0"), rational_int(1)), (id("x1"), rational_int(1))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let (_, _, detail) = extend_one_point_metric(&phi, &ext).unwrap();
        assert_eq!(detail.deltas, vec![rational_int(1), rational_int(1)]);
    }

    #[test]
    fn metric_truncation_branch_is_active() {
        // d(x0,x1)=5, images at distance 1, d(y,x0)=1, d(y,x1)=4:
        // delta_1 = min(4, 1 + 1) = 2.
        let m = metric(&["x0", "x1"], &[("x0", "x1", rational_int(5))]);
        let mprime = metric(&["z0", "z1"], &[("z0", "z1", rational_int(1))]);
        let phi = hom(&m, &mprime, &[("x0", "z0"), ("x1", "z1")]);
        let ext = OnePointExtension::metric(
            m.clone(),
            id("y"),
            [(id("x0"), rational_int(1)), (id("x1"), rational_int(4))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        let (m1, phi_ext, detail) = extend_one_point_metric(&phi, &ext).unwrap();
        assert_eq!(detail.deltas, vec![rational_int(1), rational_int(2)]);
        let y_img = phi_ext.apply(&id("y")).unwrap();
        let got = m1.as_metric().unwrap().dist(&y_img, &id("z1")).unwrap();
        assert_eq!(got, rational_int(2));
    }

    #[test]
    fn metric_degenerate_distance_is_rejected() {
        let m = metric(&["x0"], &[]);
        assert!(matches!(
            OnePointExtension::metric(
                m,
                id("y"),
                [(id("x0"), rational_int(0))].into_iter().collect(),
            ),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn enumerate_extension_counts() {
        let lim = OracleLimits::default();
        // Single vertex: x isolated or adjacent.
        let k1 = graph(&["v"], &[]);
        assert_eq!(enumerate_one_point_extensions(&k1, &lim).unwrap().len(), 2);
        // Edge: none, one endpoint (both are swap-equivalent), both.
        let k2 = graph(&["a", "b"], &[("a", "b")]);
        assert_eq!(enumerate_one_point_extensions(&k2, &lim).unwrap().len(), 3);
        // 2-chain: six (L, U) types, trivial automorphism group.
        let c2 = poset(&["a", "b"], &[("a", "b")]);
        assert_eq!(enumerate_one_point_extensions(&c2, &lim).unwrap().len(), 6);
    }

    #[test]
    fn enumerated_extensions_cover_raw_attachments_exactly_once() {
        // Every raw subset attachment is automorphism-equivalent to exactly
        // one representative.
        let lim = OracleLimits::default();
        let base = graph(&["a", "b", "c"], &[("a", "b")]);
        let reps = enumerate_one_point_extensions(&base, &lim).unwrap();
        let autos = oracle::automorphisms(&base, &lim).unwrap();
        let verts: Vec<ElementId> = base.elements().iter().cloned().collect();
        for mask in 0u32..(1 << verts.len()) {
            let subset: BTreeSet<ElementId> = verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| v.clone())
                .collect();
            let matches = reps
                .iter()
                .filter(|r| {
                    let Attachment::Graph { neighbors } = r.attachment() else {
                        unreachable!()
                    };
                    autos.iter().any(|a| {
                        let image: BTreeSet<ElementId> =
                            subset.iter().map(|v| a.apply(v).unwrap()).collect();
                        image == *neighbors
                    })
                })
                .count();
            assert_eq!(matches, 1, "subset {subset:?} covered by {matches} reps");
        }
    }

    #[test]
    fn triangle_free_counterexample_is_the_anticlique_to_clique_bijection() {
        let lim = OracleLimits::default();
        let outcome = check_1phep_class(ClassSpec::CliqueFree(3), 3, &lim).unwrap();
        let PhepOutcome::Counterexample(cex) = outcome else {
            panic!("triangle-free graphs must fail the 1PHEP");
        };
        assert_eq!(cex.base.len(), 2);
        assert_eq!(cex.base.as_graph().unwrap().edges().len(), 0);
        assert_eq!(cex.image.as_graph().unwrap().edges().len(), 1);
        assert!(cex.hom.is_surjective());
        let Attachment::Graph { neighbors } = cex.extension.attachment() else {
            unreachable!()
        };
        assert_eq!(neighbors.len(), 2);
    }

    #[test]
    fn graphs_and_posets_pass_at_size_three() {
        let lim = OracleLimits::default();
        assert!(check_1phep_class(ClassSpec::Graphs, 3, &lim)
            .unwrap()
            .passed());
        assert!(check_1phep_class(ClassSpec::Posets, 3, &lim)
            .unwrap()
            .passed());
        // The complementary class to triangle-free keeps the 1PHEP.
        assert!(check_1phep_class(ClassSpec::AnticliqueFree(3), 3, &lim)
            .unwrap()
            .passed());
    }
}
