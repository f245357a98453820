//! Finite first-order structures (simple graphs, posets, rational metric
//! spaces), their elements, and verified morphisms between them.
//!
//! Structures are immutable once built. Constructors accept arbitrary raw data
//! so that broken inputs can be *diagnosed*: [`validate`] returns the list of
//! violated axioms with witnesses instead of erroring. Operations that require
//! valid inputs call [`ensure_valid`] as a precondition gate.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Opaque stable identifier of an element inside a structure.
///
/// Elements created by tower constructions get deterministically minted names;
/// their provenance (stage index and creating amalgamation step) is recorded in
/// the owning chain's ledger, keyed by this id.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub String);

impl ElementId {
    pub fn new(name: impl Into<String>) -> Self {
        ElementId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ElementId {
    fn from(s: &str) -> Self {
        ElementId(s.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureClass {
    Graph,
    Poset,
    Metric,
}

impl fmt::Display for StructureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureClass::Graph => f.write_str("graph"),
            StructureClass::Poset => f.write_str("poset"),
            StructureClass::Metric => f.write_str("metric"),
        }
    }
}

/// Normalises an unordered pair so `{u, v}` is stored exactly once.
pub(crate) fn unordered(u: ElementId, v: ElementId) -> (ElementId, ElementId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Deterministic fresh-name policy: the wanted name if free, else the first
/// free `name~k`.
pub(crate) fn fresh_name(taken: &BTreeSet<ElementId>, wanted: &ElementId) -> ElementId {
    if !taken.contains(wanted) {
        return wanted.clone();
    }
    (1..)
        .map(|k| ElementId::new(format!("{wanted}~{k}")))
        .find(|c| !taken.contains(c))
        .expect("unbounded name space")
}

/// A finite simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    vertices: BTreeSet<ElementId>,
    edges: BTreeSet<(ElementId, ElementId)>,
}

impl FiniteGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Self
    where
        V: IntoIterator<Item = ElementId>,
        E: IntoIterator<Item = (ElementId, ElementId)>,
    {
        FiniteGraph {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().map(|(u, v)| unordered(u, v)).collect(),
        }
    }

    pub fn empty() -> Self {
        FiniteGraph::new([], [])
    }

    pub fn vertices(&self) -> &BTreeSet<ElementId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(ElementId, ElementId)> {
        &self.edges
    }

    pub fn has_edge(&self, u: &ElementId, v: &ElementId) -> bool {
        u != v && self.edges.contains(&unordered(u.clone(), v.clone()))
    }

    pub fn neighbors(&self, v: &ElementId) -> BTreeSet<ElementId> {
        self.vertices
            .iter()
            .filter(|u| self.has_edge(v, u))
            .cloned()
            .collect()
    }
}

/// A finite poset storing the *full* order relation (reflexive and transitive
/// pairs included), not a Hasse reduction; transitivity checks and closures
/// are the hot operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    elements: BTreeSet<ElementId>,
    le: BTreeSet<(ElementId, ElementId)>,
}

impl FinitePoset {
    pub fn new<V, R>(elements: V, le: R) -> Self
    where
        V: IntoIterator<Item = ElementId>,
        R: IntoIterator<Item = (ElementId, ElementId)>,
    {
        FinitePoset {
            elements: elements.into_iter().collect(),
            le: le.into_iter().collect(),
        }
    }

    /// Builds from the non-reflexive part of the relation; reflexive pairs are
    /// implied (matches the JSON interchange convention).
    pub fn with_reflexive<V, R>(elements: V, strict_or_partial: R) -> Self
    where
        V: IntoIterator<Item = ElementId>,
        R: IntoIterator<Item = (ElementId, ElementId)>,
    {
        let elements: BTreeSet<ElementId> = elements.into_iter().collect();
        let mut le: BTreeSet<(ElementId, ElementId)> = strict_or_partial.into_iter().collect();
        for e in &elements {
            le.insert((e.clone(), e.clone()));
        }
        FinitePoset { elements, le }
    }

    pub fn elements(&self) -> &BTreeSet<ElementId> {
        &self.elements
    }

    pub fn relation(&self) -> &BTreeSet<(ElementId, ElementId)> {
        &self.le
    }

    pub fn le(&self, a: &ElementId, b: &ElementId) -> bool {
        self.le.contains(&(a.clone(), b.clone()))
    }

    pub fn lt(&self, a: &ElementId, b: &ElementId) -> bool {
        a != b && self.le(a, b)
    }

    /// `{b : b <= a}` including `a` itself.
    pub fn down_set(&self, a: &ElementId) -> BTreeSet<ElementId> {
        self.elements.iter().filter(|b| self.le(b, a)).cloned().collect()
    }

    /// `{b : a <= b}` including `a` itself.
    pub fn up_set(&self, a: &ElementId) -> BTreeSet<ElementId> {
        self.elements.iter().filter(|b| self.le(a, b)).cloned().collect()
    }
}

/// A finite metric space with exact nonnegative rational distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMetricSpace {
    points: BTreeSet<ElementId>,
    dist: BTreeMap<(ElementId, ElementId), Rational>,
}

impl RationalMetricSpace {
    pub fn new<P, D>(points: P, dist: D) -> Self
    where
        P: IntoIterator<Item = ElementId>,
        D: IntoIterator<Item = ((ElementId, ElementId), Rational)>,
    {
        RationalMetricSpace {
            points: points.into_iter().collect(),
            dist: dist
                .into_iter()
                .map(|((x, y), d)| (unordered(x, y), d))
                .collect(),
        }
    }

    pub fn points(&self) -> &BTreeSet<ElementId> {
        &self.points
    }

    pub fn distances(&self) -> &BTreeMap<(ElementId, ElementId), Rational> {
        &self.dist
    }

    /// Distance lookup; `d(x, x) = 0` is implied and never stored.
    pub fn dist(&self, x: &ElementId, y: &ElementId) -> Option<Rational> {
        if x == y {
            return Some(Rational::zero());
        }
        self.dist.get(&unordered(x.clone(), y.clone())).cloned()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiniteStructure {
    Graph(FiniteGraph),
    Poset(FinitePoset),
    Metric(RationalMetricSpace),
}

impl FiniteStructure {
    pub fn class(&self) -> StructureClass {
        match self {
            FiniteStructure::Graph(_) => StructureClass::Graph,
            FiniteStructure::Poset(_) => StructureClass::Poset,
            FiniteStructure::Metric(_) => StructureClass::Metric,
        }
    }

    pub fn elements(&self) -> &BTreeSet<ElementId> {
        match self {
            FiniteStructure::Graph(g) => g.vertices(),
            FiniteStructure::Poset(p) => p.elements(),
            FiniteStructure::Metric(m) => m.points(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements().len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements().is_empty()
    }

    pub fn contains(&self, e: &ElementId) -> bool {
        self.elements().contains(e)
    }

    pub fn empty(class: StructureClass) -> Self {
        match class {
            StructureClass::Graph => FiniteStructure::Graph(FiniteGraph::empty()),
            StructureClass::Poset => FiniteStructure::Poset(FinitePoset::new([], [])),
            StructureClass::Metric => FiniteStructure::Metric(RationalMetricSpace::new([], [])),
        }
    }

    pub fn as_graph(&self) -> Result<&FiniteGraph> {
        match self {
            FiniteStructure::Graph(g) => Ok(g),
            other => Err(Error::MalformedInput(format!(
                "expected a graph, got a {}",
                other.class()
            ))),
        }
    }

    pub fn as_poset(&self) -> Result<&FinitePoset> {
        match self {
            FiniteStructure::Poset(p) => Ok(p),
            other => Err(Error::MalformedInput(format!(
                "expected a poset, got a {}",
                other.class()
            ))),
        }
    }

    pub fn as_metric(&self) -> Result<&RationalMetricSpace> {
        match self {
            FiniteStructure::Metric(m) => Ok(m),
            other => Err(Error::MalformedInput(format!(
                "expected a metric space, got a {}",
                other.class()
            ))),
        }
    }
}

/// A single violated axiom together with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Graph edge `{v, v}`.
    Loop { vertex: ElementId },
    /// Relation or edge mentions an element missing from the carrier.
    UnknownElement { element: ElementId, context: String },
    /// Poset misses `a <= a`.
    NotReflexive { element: ElementId },
    /// Both `a <= b` and `b <= a` with `a != b`.
    NotAntisymmetric { a: ElementId, b: ElementId },
    /// `a <= b` and `b <= c` but not `a <= c`.
    NotTransitive { a: ElementId, b: ElementId, c: ElementId },
    /// Missing distance entry for a pair of distinct points.
    DistanceMissing { x: ElementId, y: ElementId },
    /// `d(x, y) <= 0` for distinct points.
    DistanceNotPositive { x: ElementId, y: ElementId },
    /// `d(x, z) > d(x, y) + d(y, z)`; witness order is `(x, z, y)`.
    TriangleInequality { x: ElementId, z: ElementId, via: ElementId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Loop { vertex } => write!(f, "loop at {vertex}"),
            Violation::UnknownElement { element, context } => {
                write!(f, "unknown element {element} in {context}")
            }
            Violation::NotReflexive { element } => write!(f, "missing {element} <= {element}"),
            Violation::NotAntisymmetric { a, b } => {
                write!(f, "antisymmetry fails at ({a}, {b})")
            }
            Violation::NotTransitive { a, b, c } => {
                write!(f, "transitivity fails: {a} <= {b} <= {c} but not {a} <= {c}")
            }
            Violation::DistanceMissing { x, y } => write!(f, "no distance for ({x}, {y})"),
            Violation::DistanceNotPositive { x, y } => {
                write!(f, "d({x}, {y}) must be positive")
            }
            Violation::TriangleInequality { x, z, via } => {
                write!(f, "triangle fails: d({x}, {z}) > d({x}, {via}) + d({via}, {z})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every structural axiom exhaustively and reports all violations.
pub fn validate(structure: &FiniteStructure) -> ValidationReport {
    let mut violations = Vec::new();
    match structure {
        FiniteStructure::Graph(g) => {
            for (u, v) in g.edges() {
                if u == v {
                    violations.push(Violation::Loop { vertex: u.clone() });
                }
                for end in [u, v] {
                    if !g.vertices().contains(end) {
                        violations.push(Violation::UnknownElement {
                            element: end.clone(),
                            context: format!("edge ({u}, {v})"),
                        });
                    }
                }
            }
        }
        FiniteStructure::Poset(p) => {
            for (a, b) in p.relation() {
                for end in [a, b] {
                    if !p.elements().contains(end) {
                        violations.push(Violation::UnknownElement {
                            element: end.clone(),
                            context: format!("relation pair ({a}, {b})"),
                        });
                    }
                }
            }
            for e in p.elements() {
                if !p.le(e, e) {
                    violations.push(Violation::NotReflexive { element: e.clone() });
                }
            }
            for a in p.elements() {
                for b in p.elements() {
                    if a < b && p.le(a, b) && p.le(b, a) {
                        violations.push(Violation::NotAntisymmetric {
                            a: a.clone(),
                            b: b.clone(),
                        });
                    }
                }
            }
            for a in p.elements() {
                for b in p.elements() {
                    if !p.le(a, b) {
                        continue;
                    }
                    for c in p.elements() {
                        if p.le(b, c) && !p.le(a, c) {
                            violations.push(Violation::NotTransitive {
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                            });
                        }
                    }
                }
            }
        }
        FiniteStructure::Metric(m) => {
            for ((x, y), _) in m.distances() {
                for end in [x, y] {
                    if !m.points().contains(end) {
                        violations.push(Violation::UnknownElement {
                            element: end.clone(),
                            context: format!("distance pair ({x}, {y})"),
                        });
                    }
                }
            }
            let pts: Vec<&ElementId> = m.points().iter().collect();
            for (i, x) in pts.iter().enumerate() {
                for y in pts.iter().skip(i + 1) {
                    match m.dist(x, y) {
                        None => violations.push(Violation::DistanceMissing {
                            x: (*x).clone(),
                            y: (*y).clone(),
                        }),
                        Some(d) if d <= Rational::zero() => {
                            violations.push(Violation::DistanceNotPositive {
                                x: (*x).clone(),
                                y: (*y).clone(),
                            })
                        }
                        Some(_) => {}
                    }
                }
            }
            // Triangle inequalities, exact arithmetic, all ordered triples.
            for x in &pts {
                for z in &pts {
                    if x >= z {
                        continue;
                    }
                    for via in &pts {
                        if via == x || via == z {
                            continue;
                        }
                        let (Some(dxz), Some(dxv), Some(dvz)) =
                            (m.dist(x, z), m.dist(x, via), m.dist(via, z))
                        else {
                            continue;
                        };
                        if dxz > dxv + dvz {
                            violations.push(Violation::TriangleInequality {
                                x: (*x).clone(),
                                z: (*z).clone(),
                                via: (*via).clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    ValidationReport { violations }
}

/// Precondition gate: maps a failed validation to [`Error::Precondition`].
pub fn ensure_valid(structure: &FiniteStructure) -> Result<()> {
    let report = validate(structure);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "structure fails validation: {}",
            report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )))
    }
}

/// Morphism kinds ordered by strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MorphismKind {
    Homomorphism,
    Embedding,
    Isomorphism,
}

/// A verified structure-preserving map. Only produced by [`classify_morphism`]
/// and the constructions in this crate, so holding one is proof that the map
/// has at least the stated kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: FiniteStructure,
    codomain: FiniteStructure,
    map: BTreeMap<ElementId, ElementId>,
    kind: MorphismKind,
}

impl Morphism {
    pub fn domain(&self) -> &FiniteStructure {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteStructure {
        &self.codomain
    }

    pub fn map(&self) -> &BTreeMap<ElementId, ElementId> {
        &self.map
    }

    pub fn kind(&self) -> MorphismKind {
        self.kind
    }

    pub fn apply(&self, e: &ElementId) -> Result<ElementId> {
        self.map
            .get(e)
            .cloned()
            .ok_or_else(|| Error::MalformedInput(format!("{e} is not in the morphism's domain")))
    }

    pub fn image(&self) -> BTreeSet<ElementId> {
        self.map.values().cloned().collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == *self.codomain.elements()
    }

    pub fn identity(s: &FiniteStructure) -> Result<Morphism> {
        let map = s
            .elements()
            .iter()
            .map(|e| (e.clone(), e.clone()))
            .collect();
        classify_morphism(&map, s, s)?.into_morphism()
    }

    /// Diagrammatic composition: `self` first, then `next`.
    pub fn then(&self, next: &Morphism) -> Result<Morphism> {
        if self.codomain != *next.domain() {
            return Err(Error::Precondition(
                "composition requires matching codomain and domain".into(),
            ));
        }
        let mut map = BTreeMap::new();
        for (a, b) in &self.map {
            map.insert(a.clone(), next.apply(b)?);
        }
        classify_morphism(&map, &self.domain, next.codomain())?.into_morphism()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Result<Morphism> {
        if self.kind != MorphismKind::Isomorphism {
            return Err(Error::Precondition("only isomorphisms invert".into()));
        }
        let map = self.map.iter().map(|(a, b)| (b.clone(), a.clone())).collect();
        classify_morphism(&map, &self.codomain, &self.domain)?.into_morphism()
    }

    /// Restricts to a subset of the domain, corestricting to the codomain
    /// unchanged.
    pub fn restrict(&self, subset: &BTreeSet<ElementId>) -> Result<Morphism> {
        let dom = induced_substructure(&self.domain, subset)?;
        let map = subset
            .iter()
            .map(|e| Ok((e.clone(), self.apply(e)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        classify_morphism(&map, &dom, &self.codomain)?.into_morphism()
    }

    /// Corestricts to the induced substructure on the image, making the map
    /// surjective.
    pub fn corestrict_to_image(&self) -> Result<Morphism> {
        let image = induced_substructure(&self.codomain, &self.image())?;
        classify_morphism(&self.map, &self.domain, &image)?.into_morphism()
    }

    /// Used by in-crate constructions whose outputs are verified separately.
    pub(crate) fn from_parts_unchecked(
        domain: FiniteStructure,
        codomain: FiniteStructure,
        map: BTreeMap<ElementId, ElementId>,
        kind: MorphismKind,
    ) -> Morphism {
        Morphism {
            domain,
            codomain,
            map,
            kind,
        }
    }
}

/// Why a candidate map is not even a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismRejection {
    pub witness: (ElementId, ElementId),
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Valid(Morphism),
    Rejected(MorphismRejection),
}

impl Classification {
    pub fn into_morphism(self) -> Result<Morphism> {
        match self {
            Classification::Valid(m) => Ok(m),
            Classification::Rejected(r) => Err(Error::Precondition(format!(
                "not a homomorphism: {} (witness ({}, {}))",
                r.reason, r.witness.0, r.witness.1
            ))),
        }
    }

    pub fn kind(&self) -> Option<MorphismKind> {
        match self {
            Classification::Valid(m) => Some(m.kind()),
            Classification::Rejected(_) => None,
        }
    }
}

/// Classifies a candidate map as the strongest valid kind among homomorphism,
/// embedding, isomorphism, or rejects it with a witness pair.
///
/// Graph homomorphisms preserve edges, poset homomorphisms preserve order, and
/// metric homomorphisms are non-expanding. Embeddings are additionally
/// injective and reflect the structure exactly; isomorphisms are surjective
/// embeddings.
pub fn classify_morphism(
    map: &BTreeMap<ElementId, ElementId>,
    dom: &FiniteStructure,
    cod: &FiniteStructure,
) -> Result<Classification> {
    if dom.class() != cod.class() {
        return Err(Error::MalformedInput(format!(
            "domain is a {} but codomain is a {}",
            dom.class(),
            cod.class()
        )));
    }
    ensure_valid(dom)?;
    ensure_valid(cod)?;
    for e in dom.elements() {
        match map.get(e) {
            None => {
                return Err(Error::MalformedInput(format!(
                    "map is not total: {e} has no image"
                )))
            }
            Some(img) if !cod.contains(img) => {
                return Err(Error::MalformedInput(format!(
                    "image {img} of {e} is outside the codomain"
                )))
            }
            Some(_) => {}
        }
    }
    for key in map.keys() {
        if !dom.contains(key) {
            return Err(Error::MalformedInput(format!(
                "map mentions {key}, which is not a domain element"
            )));
        }
    }

    let elems: Vec<&ElementId> = dom.elements().iter().collect();
    let img = |e: &ElementId| map.get(e).expect("checked total").clone();

    // Homomorphism check with witness.
    match (dom, cod) {
        (FiniteStructure::Graph(g), FiniteStructure::Graph(h)) => {
            for (u, v) in g.edges() {
                if !h.has_edge(&img(u), &img(v)) {
                    return Ok(Classification::Rejected(MorphismRejection {
                        witness: (u.clone(), v.clone()),
                        reason: format!("edge ({u}, {v}) is not preserved"),
                    }));
                }
            }
        }
        (FiniteStructure::Poset(p), FiniteStructure::Poset(q)) => {
            for (a, b) in p.relation() {
                if !q.le(&img(a), &img(b)) {
                    return Ok(Classification::Rejected(MorphismRejection {
                        witness: (a.clone(), b.clone()),
                        reason: format!("{a} <= {b} is not preserved"),
                    }));
                }
            }
        }
        (FiniteStructure::Metric(m), FiniteStructure::Metric(n)) => {
            for (i, x) in elems.iter().enumerate() {
                for y in elems.iter().skip(i + 1) {
                    let dxy = m.dist(x, y).expect("validated");
                    let dimg = n.dist(&img(x), &img(y)).expect("validated");
                    if dimg > dxy {
                        return Ok(Classification::Rejected(MorphismRejection {
                            witness: ((*x).clone(), (*y).clone()),
                            reason: format!("map expands the distance between {x} and {y}"),
                        }));
                    }
                }
            }
        }
        _ => unreachable!("class equality checked above"),
    }

    // Embedding: injective and structure-reflecting.
    let injective = {
        let mut seen = BTreeSet::new();
        elems.iter().all(|e| seen.insert(img(e)))
    };
    let reflects = injective
        && match (dom, cod) {
            (FiniteStructure::Graph(g), FiniteStructure::Graph(h)) => {
                elems.iter().enumerate().all(|(i, u)| {
                    elems
                        .iter()
                        .skip(i + 1)
                        .all(|v| g.has_edge(u, v) == h.has_edge(&img(u), &img(v)))
                })
            }
            (FiniteStructure::Poset(p), FiniteStructure::Poset(q)) => elems.iter().all(|a| {
                elems
                    .iter()
                    .all(|b| p.le(a, b) == q.le(&img(a), &img(b)))
            }),
            (FiniteStructure::Metric(m), FiniteStructure::Metric(n)) => {
                elems.iter().enumerate().all(|(i, x)| {
                    elems.iter().skip(i + 1).all(|y| {
                        m.dist(x, y).expect("validated")
                            == n.dist(&img(x), &img(y)).expect("validated")
                    })
                })
            }
            _ => unreachable!(),
        };

    let kind = if reflects {
        let surjective = map.values().cloned().collect::<BTreeSet<_>>() == *cod.elements();
        if surjective {
            MorphismKind::Isomorphism
        } else {
            MorphismKind::Embedding
        }
    } else {
        MorphismKind::Homomorphism
    };

    Ok(Classification::Valid(Morphism {
        domain: dom.clone(),
        codomain: cod.clone(),
        map: map.clone(),
        kind,
    }))
}

/// The induced substructure on `subset`: restriction of edges, order, or
/// distances.
pub fn induced_substructure(
    s: &FiniteStructure,
    subset: &BTreeSet<ElementId>,
) -> Result<FiniteStructure> {
    for e in subset {
        if !s.contains(e) {
            return Err(Error::MalformedInput(format!(
                "subset contains unknown element {e}"
            )));
        }
    }
    Ok(match s {
        FiniteStructure::Graph(g) => FiniteStructure::Graph(FiniteGraph::new(
            subset.iter().cloned(),
            g.edges()
                .iter()
                .filter(|(u, v)| subset.contains(u) && subset.contains(v))
                .cloned(),
        )),
        FiniteStructure::Poset(p) => FiniteStructure::Poset(FinitePoset::new(
            subset.iter().cloned(),
            p.relation()
                .iter()
                .filter(|(a, b)| subset.contains(a) && subset.contains(b))
                .cloned(),
        )),
        FiniteStructure::Metric(m) => FiniteStructure::Metric(RationalMetricSpace::new(
            subset.iter().cloned(),
            m.distances()
                .iter()
                .filter(|((x, y), _)| subset.contains(x) && subset.contains(y))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect::<Vec<_>>(),
        )),
    })
}
