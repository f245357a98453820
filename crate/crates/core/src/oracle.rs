//! Brute-force ground truth: exhaustive homomorphism and embedding
//! enumeration, isomorphism testing with witnesses, isomorph-free structure
//! enumeration, and canonical forms.
//!
//! Everything here favours transparent exhaustive search over cleverness; the
//! sizes are capped so the worst case stays a desk computation. The canonical
//! form is the lexicographically minimal encoding over all permutations, which
//! at these sizes doubles as an independent check on the isomorphism search.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::structures::{
    classify_morphism, ensure_valid, ElementId, FiniteGraph, FinitePoset, FiniteStructure,
    Morphism, StructureClass,
};

/// Size caps guarding the exponential searches.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    /// Maximum domain size for homomorphism/embedding enumeration.
    pub hom_domain_cap: usize,
    /// Maximum element count for isomorph-free structure enumeration.
    pub enumeration_cap: usize,
    /// Maximum size for canonical forms and isomorphism search.
    pub canonical_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            hom_domain_cap: 6,
            enumeration_cap: 5,
            canonical_cap: 8,
        }
    }
}

/// Index-space view of a structure used by the backtracking searches.
/// Element order is the sorted `ElementId` order, so every enumeration below
/// is canonical and relabeling-independent output ordering comes for free.
#[derive(Debug, Clone)]
pub(crate) struct Indexed {
    pub class: StructureClass,
    pub elems: Vec<ElementId>,
    pub n: usize,
    /// Graphs: symmetric adjacency rows. Posets: `rel[i]` bit `j` iff `i <= j`.
    pub rel: Vec<u32>,
    /// Metric only: full distance matrix.
    pub dist: Vec<Vec<Rational>>,
}

impl Indexed {
    pub fn from_structure(s: &FiniteStructure) -> Indexed {
        let elems: Vec<ElementId> = s.elements().iter().cloned().collect();
        let n = elems.len();
        assert!(n <= 32, "indexed oracle form supports at most 32 elements");
        let pos: BTreeMap<&ElementId, usize> =
            elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rel = vec![0u32; n];
        let mut dist = Vec::new();
        match s {
            FiniteStructure::Graph(g) => {
                for (u, v) in g.edges() {
                    let (i, j) = (pos[u], pos[v]);
                    rel[i] |= 1 << j;
                    rel[j] |= 1 << i;
                }
            }
            FiniteStructure::Poset(p) => {
                for (a, b) in p.relation() {
                    rel[pos[a]] |= 1 << pos[b];
                }
            }
            FiniteStructure::Metric(m) => {
                dist = vec![vec![Rational::zero(); n]; n];
                for (i, x) in elems.iter().enumerate() {
                    for (j, y) in elems.iter().enumerate() {
                        if i != j {
                            dist[i][j] = m.dist(x, y).expect("validated metric");
                        }
                    }
                }
            }
        }
        Indexed {
            class: s.class(),
            elems,
            n,
            rel,
            dist,
        }
    }

    fn edge(&self, i: usize, j: usize) -> bool {
        self.rel[i] >> j & 1 == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum MapMode {
    Hom,
    Embedding,
}

/// Backtracking enumeration of all structure maps `dom -> cod` in
/// lexicographic assignment order. Calls `emit` with each complete assignment.
pub(crate) fn enumerate_maps(
    dom: &Indexed,
    cod: &Indexed,
    mode: MapMode,
    emit: &mut dyn FnMut(&[usize]),
) {
    if dom.n == 0 {
        emit(&[]);
        return;
    }
    if cod.n == 0 {
        return;
    }
    let mut assign = vec![usize::MAX; dom.n];
    let mut used = vec![false; cod.n];
    backtrack(dom, cod, mode, 0, &mut assign, &mut used, emit);
}

fn feasible(dom: &Indexed, cod: &Indexed, mode: MapMode, assign: &[usize], i: usize, w: usize) -> bool {
    match dom.class {
        StructureClass::Graph | StructureClass::Poset => {
            for j in 0..i {
                let wj = assign[j];
                let fwd = dom.edge(i, j);
                let bwd = dom.edge(j, i);
                match mode {
                    MapMode::Hom => {
                        if fwd && !cod.edge(w, wj) {
                            return false;
                        }
                        if bwd && !cod.edge(wj, w) {
                            return false;
                        }
                    }
                    MapMode::Embedding => {
                        if fwd != cod.edge(w, wj) || bwd != cod.edge(wj, w) {
                            return false;
                        }
                    }
                }
            }
            true
        }
        StructureClass::Metric => {
            for j in 0..i {
                let wj = assign[j];
                let d = &dom.dist[i][j];
                let dprime = &cod.dist[w][wj];
                match mode {
                    MapMode::Hom => {
                        if dprime > d {
                            return false;
                        }
                    }
                    MapMode::Embedding => {
                        if dprime != d {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    dom: &Indexed,
    cod: &Indexed,
    mode: MapMode,
    i: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if i == dom.n {
        emit(assign);
        return;
    }
    for w in 0..cod.n {
        if mode == MapMode::Embedding && used[w] {
            continue;
        }
        if !feasible(dom, cod, mode, assign, i, w) {
            continue;
        }
        assign[i] = w;
        used[w] = true;
        backtrack(dom, cod, mode, i + 1, assign, used, emit);
        used[w] = false;
        assign[i] = usize::MAX;
    }
}

fn materialize(dom: &FiniteStructure, cod: &FiniteStructure, di: &Indexed, ci: &Indexed, assign: &[usize]) -> Morphism {
    let map: BTreeMap<ElementId, ElementId> = di
        .elems
        .iter()
        .zip(assign)
        .map(|(e, &w)| (e.clone(), ci.elems[w].clone()))
        .collect();
    classify_morphism(&map, dom, cod)
        .and_then(|c| c.into_morphism())
        .expect("enumerated map must classify as a homomorphism")
}

/// The complete list of homomorphisms `dom -> cod`, in canonical order.
pub fn all_homomorphisms(
    dom: &FiniteStructure,
    cod: &FiniteStructure,
    limits: &OracleLimits,
) -> Result<Vec<Morphism>> {
    if dom.class() != cod.class() {
        return Err(Error::MalformedInput("class mismatch".into()));
    }
    ensure_valid(dom)?;
    ensure_valid(cod)?;
    if dom.len() > limits.hom_domain_cap {
        return Err(Error::ResourceBound(format!(
            "domain has {} elements, cap is {}",
            dom.len(),
            limits.hom_domain_cap
        )));
    }
    let di = Indexed::from_structure(dom);
    let ci = Indexed::from_structure(cod);
    let mut out = Vec::new();
    enumerate_maps(&di, &ci, MapMode::Hom, &mut |a| {
        out.push(materialize(dom, cod, &di, &ci, a));
    });
    Ok(out)
}

/// The complete list of embeddings `dom -> cod`, in canonical order.
pub fn all_embeddings(
    dom: &FiniteStructure,
    cod: &FiniteStructure,
    limits: &OracleLimits,
) -> Result<Vec<Morphism>> {
    if dom.class() != cod.class() {
        return Err(Error::MalformedInput("class mismatch".into()));
    }
    ensure_valid(dom)?;
    ensure_valid(cod)?;
    if dom.len() > limits.hom_domain_cap {
        return Err(Error::ResourceBound(format!(
            "domain has {} elements, cap is {}",
            dom.len(),
            limits.hom_domain_cap
        )));
    }
    let di = Indexed::from_structure(dom);
    let ci = Indexed::from_structure(cod);
    let mut out = Vec::new();
    enumerate_maps(&di, &ci, MapMode::Embedding, &mut |a| {
        out.push(materialize(dom, cod, &di, &ci, a));
    });
    Ok(out)
}

/// All automorphisms, i.e. self-embeddings (size forces surjectivity).
pub fn automorphisms(s: &FiniteStructure, limits: &OracleLimits) -> Result<Vec<Morphism>> {
    all_embeddings(s, s, limits)
}

/// Pruned permutation search; returns an isomorphism witness on success.
pub fn are_isomorphic(
    s1: &FiniteStructure,
    s2: &FiniteStructure,
    limits: &OracleLimits,
) -> Result<Option<Morphism>> {
    if s1.class() != s2.class() {
        return Err(Error::MalformedInput("class mismatch".into()));
    }
    ensure_valid(s1)?;
    ensure_valid(s2)?;
    if s1.len().max(s2.len()) > limits.canonical_cap {
        return Err(Error::ResourceBound(format!(
            "isomorphism search capped at {} elements",
            limits.canonical_cap
        )));
    }
    if s1.len() != s2.len() {
        return Ok(None);
    }
    let di = Indexed::from_structure(s1);
    let ci = Indexed::from_structure(s2);
    // Cheap invariant: sorted relation-degree profiles must agree.
    let profile = |x: &Indexed| -> Vec<u32> {
        let mut p: Vec<u32> = (0..x.n)
            .map(|i| {
                (0..x.n)
                    .map(|j| x.edge(i, j) as u32 + ((x.edge(j, i) as u32) << 8))
                    .sum()
            })
            .collect();
        p.sort_unstable();
        p
    };
    if s1.class() != StructureClass::Metric && profile(&di) != profile(&ci) {
        return Ok(None);
    }
    let mut found: Option<Vec<usize>> = None;
    let mut assign = vec![usize::MAX; di.n];
    let mut used = vec![false; ci.n];
    first_embedding(&di, &ci, 0, &mut assign, &mut used, &mut found);
    Ok(found.map(|a| materialize(s1, s2, &di, &ci, &a)))
}

fn first_embedding(
    dom: &Indexed,
    cod: &Indexed,
    i: usize,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    found: &mut Option<Vec<usize>>,
) {
    if found.is_some() {
        return;
    }
    if i == dom.n {
        *found = Some(assign.clone());
        return;
    }
    for w in 0..cod.n {
        if used[w] || !feasible(dom, cod, MapMode::Embedding, assign, i, w) {
            continue;
        }
        assign[i] = w;
        used[w] = true;
        first_embedding(dom, cod, i + 1, assign, used, found);
        used[w] = false;
        assign[i] = usize::MAX;
        if found.is_some() {
            return;
        }
    }
}

/// Canonical certificate: the lexicographically minimal encoding of the
/// relation (or distance matrix) over all relabelings, plus the relabeling
/// that achieves it. Two structures are isomorphic iff certificates agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertData {
    /// Graphs: upper-triangle adjacency bits. Posets: off-diagonal order bits.
    Bits(u64),
    /// Metric: upper-triangle distances row-major.
    Dists(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub class: StructureClass,
    pub size: usize,
    pub cert: CertData,
    /// Original element -> canonical position name `e0`, `e1`, ...
    pub relabeling: BTreeMap<ElementId, ElementId>,
}

impl CanonicalForm {
    pub fn key(&self) -> (StructureClass, usize, CertData) {
        (self.class, self.size, self.cert.clone())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.cert {
            CertData::Bits(b) => write!(f, "{}:{}:{:x}", self.class, self.size, b),
            CertData::Dists(ds) => write!(
                f,
                "{}:{}:[{}]",
                self.class,
                self.size,
                ds.iter().map(|d| d.to_string()).join(",")
            ),
        }
    }
}

fn encode_graph(idx: &Indexed, perm: &[usize]) -> u64 {
    // perm[position] = original index.
    let mut bits = 0u64;
    let mut b = 0;
    for i in 0..idx.n {
        for j in (i + 1)..idx.n {
            if idx.edge(perm[i], perm[j]) {
                bits |= 1 << b;
            }
            b += 1;
        }
    }
    bits
}

fn encode_poset(idx: &Indexed, perm: &[usize]) -> u64 {
    let mut bits = 0u64;
    let mut b = 0;
    for i in 0..idx.n {
        for j in 0..idx.n {
            if i == j {
                continue;
            }
            if idx.edge(perm[i], perm[j]) {
                bits |= 1 << b;
            }
            b += 1;
        }
    }
    bits
}

fn encode_metric(idx: &Indexed, perm: &[usize]) -> Vec<Rational> {
    let mut out = Vec::new();
    for i in 0..idx.n {
        for j in (i + 1)..idx.n {
            out.push(idx.dist[perm[i]][perm[j]].clone());
        }
    }
    out
}

pub fn canonical_form(s: &FiniteStructure, limits: &OracleLimits) -> Result<CanonicalForm> {
    ensure_valid(s)?;
    let n = s.len();
    if n > limits.canonical_cap {
        return Err(Error::ResourceBound(format!(
            "canonical form capped at {} elements",
            limits.canonical_cap
        )));
    }
    let idx = Indexed::from_structure(s);
    let mut best: Option<(CertData, Vec<usize>)> = None;
    for perm in (0..n).permutations(n) {
        let cert = match s.class() {
            StructureClass::Graph => CertData::Bits(encode_graph(&idx, &perm)),
            StructureClass::Poset => CertData::Bits(encode_poset(&idx, &perm)),
            StructureClass::Metric => CertData::Dists(encode_metric(&idx, &perm)),
        };
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            best = Some((cert, perm));
        }
    }
    // n = 0 yields exactly one empty permutation, so `best` is always set.
    let (cert, perm) = best.expect("at least one permutation");
    let relabeling = perm
        .iter()
        .enumerate()
        .map(|(pos, &orig)| (idx.elems[orig].clone(), ElementId::new(format!("e{pos}"))))
        .collect();
    Ok(CanonicalForm {
        class: s.class(),
        size: n,
        cert,
        relabeling,
    })
}

fn decode_graph(n: usize, bits: u64) -> FiniteStructure {
    let names: Vec<ElementId> = (0..n).map(|i| ElementId::new(format!("e{i}"))).collect();
    let mut edges = Vec::new();
    let mut b = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if bits >> b & 1 == 1 {
                edges.push((names[i].clone(), names[j].clone()));
            }
            b += 1;
        }
    }
    FiniteStructure::Graph(FiniteGraph::new(names, edges))
}

fn decode_poset(n: usize, bits: u64) -> FiniteStructure {
    let names: Vec<ElementId> = (0..n).map(|i| ElementId::new(format!("e{i}"))).collect();
    let mut rel = Vec::new();
    let mut b = 0;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if bits >> b & 1 == 1 {
                rel.push((names[i].clone(), names[j].clone()));
            }
            b += 1;
        }
    }
    FiniteStructure::Poset(FinitePoset::with_reflexive(names, rel))
}

/// Isomorph-free list of all nonempty structures with at most `n` elements,
/// ordered by (size, canonical certificate). Carriers are relabeled to the
/// canonical `e0..e{m-1}` names.
pub fn enumerate_structures(
    class: StructureClass,
    n: usize,
    limits: &OracleLimits,
) -> Result<Vec<FiniteStructure>> {
    if n > limits.enumeration_cap {
        return Err(Error::ResourceBound(format!(
            "structure enumeration capped at {} elements",
            limits.enumeration_cap
        )));
    }
    let mut out = Vec::new();
    for m in 1..=n {
        let mut certs: BTreeSet<u64> = BTreeSet::new();
        match class {
            StructureClass::Graph => {
                let pairs = m * (m - 1) / 2;
                for mask in 0u64..(1 << pairs) {
                    let s = decode_graph(m, mask);
                    let cf = canonical_form(&s, limits)?;
                    let CertData::Bits(bits) = cf.cert else { unreachable!() };
                    certs.insert(bits);
                }
            }
            StructureClass::Poset => {
                enumerate_poset_relations(m, &mut |bits| {
                    let s = decode_poset(m, bits);
                    let cf = canonical_form(&s, limits).expect("small poset");
                    let CertData::Bits(b) = cf.cert else { unreachable!() };
                    certs.insert(b);
                });
            }
            StructureClass::Metric => {
                return Err(Error::UnsupportedClass(
                    "metric spaces have no finite extension enumeration".into(),
                ))
            }
        }
        for bits in certs {
            out.push(match class {
                StructureClass::Graph => decode_graph(m, bits),
                StructureClass::Poset => decode_poset(m, bits),
                StructureClass::Metric => unreachable!(),
            });
        }
    }
    Ok(out)
}

/// Emits every partial order on `m` labeled elements as off-diagonal bits.
/// Each unordered pair independently gets one of {incomparable, <, >}, which
/// builds antisymmetry in; transitivity is then checked on the full relation.
fn enumerate_poset_relations(m: usize, emit: &mut dyn FnMut(u64)) {
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| ((i + 1)..m).map(move |j| (i, j)))
        .collect();
    let mut rows = vec![0u32; m];
    for i in 0..m {
        rows[i] |= 1 << i;
    }
    fn bit_index(m: usize, i: usize, j: usize) -> usize {
        // Off-diagonal row-major position of (i, j), matching encode_poset.
        i * (m - 1) + if j > i { j - 1 } else { j }
    }
    fn rec(
        pairs: &[(usize, usize)],
        k: usize,
        m: usize,
        rows: &mut Vec<u32>,
        emit: &mut dyn FnMut(u64),
    ) {
        if k == pairs.len() {
            // Transitivity: a <= b implies ups(b) subset of ups(a).
            for a in 0..m {
                for b in 0..m {
                    if a != b && rows[a] >> b & 1 == 1 && rows[a] & rows[b] != rows[b] {
                        return;
                    }
                }
            }
            let mut bits = 0u64;
            for a in 0..m {
                for b in 0..m {
                    if a != b && rows[a] >> b & 1 == 1 {
                        bits |= 1 << bit_index(m, a, b);
                    }
                }
            }
            emit(bits);
            return;
        }
        let (i, j) = pairs[k];
        // incomparable
        rec(pairs, k + 1, m, rows, emit);
        // i < j
        rows[i] |= 1 << j;
        rec(pairs, k + 1, m, rows, emit);
        rows[i] &= !(1 << j);
        // j < i
        rows[j] |= 1 << i;
        rec(pairs, k + 1, m, rows, emit);
        rows[j] &= !(1 << i);
    }
    rec(&pairs, 0, m, &mut rows, emit);
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

    fn chain(names: &[&str]) -> FiniteStructure {
        let mut rel = Vec::new();
        for (i, a) in names.iter().enumerate() {
            for b in names.iter().skip(i + 1) {
                rel.push((id(a), id(b)));
            }
        }
        FiniteStructure::Poset(FinitePoset::with_reflexive(names.iter().map(|n| id(n)), rel))
    }

    fn antichain(names: &[&str]) -> FiniteStructure {
        FiniteStructure::Poset(FinitePoset::with_reflexive(names.iter().map(|n| id(n)), []))
    }

    #[test]
    fn hom_counts_match_hand_counts() {
        let lim = OracleLimits::default();
        let k2bar = graph(&["u1", "u2"], &[]);
        let k2 = graph(&["v1", "v2"], &[("v1", "v2")]);
        // No edges to preserve: all four maps.
        assert_eq!(all_homomorphisms(&k2bar, &k2, &lim).unwrap().len(), 4);
        // Collapsing the edge would make a loop: only the two bijections.
        assert_eq!(all_homomorphisms(&k2, &k2, &lim).unwrap().len(), 2);
        // Order-preserving self-maps of the 2-chain: id, const-bottom, const-top.
        let c2 = chain(&["a", "b"]);
        assert_eq!(all_homomorphisms(&c2, &c2, &lim).unwrap().len(), 3);
    }

    #[test]
    fn hom_count_is_relabeling_invariant() {
        let lim = OracleLimits::default();
        let dom1 = graph(&["a", "b", "c"], &[("a", "b")]);
        let dom2 = graph(&["z", "q", "m"], &[("z", "q")]);
        let cod = graph(&["x", "y"], &[("x", "y")]);
        assert_eq!(
            all_homomorphisms(&dom1, &cod, &lim).unwrap().len(),
            all_homomorphisms(&dom2, &cod, &lim).unwrap().len(),
        );
    }

    #[test]
    fn iso_examples() {
        let lim = OracleLimits::default();
        let k2 = graph(&["a", "b"], &[("a", "b")]);
        let self_iso = are_isomorphic(&k2, &k2, &lim).unwrap().unwrap();
        assert!(self_iso.is_surjective());

        let k2bar = graph(&["a", "b"], &[]);
        assert!(are_isomorphic(&k2, &k2bar, &lim).unwrap().is_none());

        assert!(are_isomorphic(&chain(&["a", "b", "c"]), &antichain(&["a", "b", "c"]), &lim)
            .unwrap()
            .is_none());
    }

    #[test]
    fn enumeration_counts_match_known_sequences() {
        let lim = OracleLimits::default();
        // Unlabeled simple graphs on exactly m vertices: 1, 2, 4, 11, 34.
        let graphs = enumerate_structures(StructureClass::Graph, 4, &lim).unwrap();
        let by_size = |v: &[FiniteStructure], m: usize| v.iter().filter(|s| s.len() == m).count();
        assert_eq!(by_size(&graphs, 1), 1);
        assert_eq!(by_size(&graphs, 2), 2);
        assert_eq!(by_size(&graphs, 3), 4);
        assert_eq!(by_size(&graphs, 4), 11);

        // Unlabeled posets on exactly m elements: 1, 2, 5, 16.
        let posets = enumerate_structures(StructureClass::Poset, 4, &lim).unwrap();
        assert_eq!(by_size(&posets, 1), 1);
        assert_eq!(by_size(&posets, 2), 2);
        assert_eq!(by_size(&posets, 3), 5);
        assert_eq!(by_size(&posets, 4), 16);
    }

    #[test]
    fn enumeration_counts_at_five() {
        let lim = OracleLimits::default();
        let graphs = enumerate_structures(StructureClass::Graph, 5, &lim).unwrap();
        assert_eq!(graphs.iter().filter(|s| s.len() == 5).count(), 34);
        let posets = enumerate_structures(StructureClass::Poset, 5, &lim).unwrap();
        assert_eq!(posets.iter().filter(|s| s.len() == 5).count(), 63);
    }

    #[test]
    fn certificates_agree_with_isomorphism_search() {
        let lim = OracleLimits::default();
        for class in [StructureClass::Graph, StructureClass::Poset] {
            let all = enumerate_structures(class, 4, &lim).unwrap();
            for (i, s1) in all.iter().enumerate() {
                for s2 in all.iter().skip(i + 1) {
                    if s1.len() != s2.len() {
                        continue;
                    }
                    let c1 = canonical_form(s1, &lim).unwrap();
                    let c2 = canonical_form(s2, &lim).unwrap();
                    assert_ne!(c1.key(), c2.key());
                    assert!(are_isomorphic(s1, s2, &lim).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn certificate_is_relabeling_invariant() {
        let lim = OracleLimits::default();
        let g1 = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let g2 = graph(&["x", "y", "z"], &[("y", "z"), ("x", "z")]);
        assert_eq!(
            canonical_form(&g1, &lim).unwrap().key(),
            canonical_form(&g2, &lim).unwrap().key(),
        );
        assert!(are_isomorphic(&g1, &g2, &lim).unwrap().is_some());
    }

    #[test]
    fn caps_produce_resource_errors() {
        let lim = OracleLimits {
            hom_domain_cap: 2,
            enumeration_cap: 2,
            canonical_cap: 2,
        };
        let tri = graph(&["a", "b", "c"], &[("a", "b")]);
        assert!(matches!(
            all_homomorphisms(&tri, &tri, &lim),
            Err(Error::ResourceBound(_))
        ));
        assert!(matches!(
            enumerate_structures(StructureClass::Graph, 3, &lim),
            Err(Error::ResourceBound(_))
        ));
    }
}
