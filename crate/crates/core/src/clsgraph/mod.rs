//! Rational isogeny classes as labelled graphs.
//!
//! A class is closed under prime-degree isogenies breadth first, vertices are
//! identified up to Q-isomorphism, and the result is matched against the 26
//! graph shapes and the 52 isogeny-torsion types.

mod shape;
pub mod table;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{AtlasError, Result};
use crate::qpoly::Rational;
use crate::torsion::{ShortCurve, TorsionGroup, TorsionStructure};
use crate::weier::{cm_lookup, CmRecord, WeierstrassModel};

pub use shape::GraphShape;
use shape::LabeledGraph;
use table::{CM_TYPES, FORBIDDEN, TABLE_ROWS};

/// Kenku's bound on the size of a rational isogeny class.
pub const MAX_CLASS_SIZE: usize = 8;

/// A curve in the class with its rational torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub model: WeierstrassModel,
    pub torsion: TorsionStructure,
}

/// An isogeny of prime degree `ell` between vertices `u` and `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub ell: u32,
}

/// Torsion groups listed in a shape's vertex numbering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionConfiguration(pub Vec<TorsionGroup>);

impl TorsionConfiguration {
    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(|g| g.to_string()).collect()
    }

    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        labels
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<_>>>()
            .map(TorsionConfiguration)
    }

    fn matches(&self, labels: &[&str]) -> bool {
        self.0.len() == labels.len()
            && self
                .0
                .iter()
                .zip(labels)
                .all(|(g, l)| l.parse::<TorsionGroup>().ok() == Some(*g))
    }
}

impl fmt::Display for TorsionConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.labels().join(","))
    }
}

impl FromStr for TorsionConfiguration {
    type Err = AtlasError;

    /// Parses `([2,2],[4],[4],[2])`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || AtlasError::Parse(format!("bad torsion configuration {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let mut labels = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let end = rest.find(']').ok_or_else(bad)?;
            labels.push(&rest[..=end]);
            rest = rest[end + 1..].trim_start().trim_start_matches(',').trim_start();
        }
        TorsionConfiguration::from_labels(&labels)
    }
}

/// Cyclic subgroup counts of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyCounts {
    /// Rational cyclic subgroups, the trivial one included.
    pub c: u32,
    /// The same count restricted to `p`-power orders, for each edge label `p`.
    pub c_p: BTreeMap<u32, u32>,
    /// Largest degree of a cyclic rational isogeny out of this vertex.
    pub max_cyclic_degree: u32,
}

/// A row of the isogeny-torsion type table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub shape: &'static str,
    pub config: &'static [&'static str],
    pub label: &'static str,
}

impl TableRow {
    pub fn all() -> impl Iterator<Item = TableRow> {
        TABLE_ROWS
            .iter()
            .map(|&(shape, config, label)| TableRow { shape, config, label })
    }

    pub fn id(&self) -> String {
        format!("{}/{}-class", self.shape, self.label)
    }

    pub fn lookup(shape: GraphShape, config: &TorsionConfiguration) -> Option<TableRow> {
        let tag = shape.to_string();
        TableRow::all().find(|r| r.shape == tag && config.matches(r.config))
    }
}

/// Whether `(shape, config)` is one of the configurations no class realises.
pub fn is_forbidden(shape: GraphShape, config: &TorsionConfiguration) -> bool {
    let tag = shape.to_string();
    FORBIDDEN.iter().any(|(s, c)| *s == tag && config.matches(c))
}

/// Whether `(shape, config)` is realised by some class with complex multiplication.
pub fn is_cm_type(shape: GraphShape, config: &TorsionConfiguration) -> bool {
    let tag = shape.to_string();
    CM_TYPES.iter().any(|(s, c)| *s == tag && config.matches(c))
}

/// Shape and canonical torsion configuration of a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub shape: GraphShape,
    pub config: TorsionConfiguration,
    /// `numbering[i]` is the vertex sitting in slot `E_{i+1}` of the shape.
    pub numbering: Vec<usize>,
    pub table_row: TableRow,
}

/// The isogeny class of a curve. Vertex 0 is the input model; the others are
/// integral short models.
#[derive(Clone, Debug)]
pub struct ClassGraph {
    pub vertices: Vec<Vertex>,
    /// Undirected edges with `u < v`, sorted.
    pub edges: Vec<Edge>,
    /// Every isogeny found, directed from the vertex it was computed on.
    pub discoveries: Vec<Edge>,
    pub cm: Option<CmRecord>,
    pub classification: Option<Classification>,
}

/// Closes `{e}` under rational isogenies of prime degree.
pub fn build_class(e: &WeierstrassModel) -> Result<ClassGraph> {
    let mut models = vec![e.clone()];
    let mut torsion = Vec::new();
    let mut discoveries = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut curve = ShortCurve::new(&models[i]);
        for iso in curve.prime_isogenies(None)? {
            let target = iso.codomain.short_model().0;
            let k = match models.iter().position(|m| same_curve(m, &target)) {
                Some(k) => k,
                None => {
                    if models.len() == MAX_CLASS_SIZE {
                        return Err(AtlasError::invariant(format!(
                            "isogeny class of {e} has more than {MAX_CLASS_SIZE} curves"
                        )));
                    }
                    models.push(target);
                    queue.push_back(models.len() - 1);
                    models.len() - 1
                }
            };
            if k == i {
                return Err(AtlasError::invariant(format!(
                    "{e}: a {}-isogeny maps a curve to itself",
                    iso.degree()
                )));
            }
            discoveries.push(Edge {
                u: i,
                v: k,
                ell: iso.degree(),
            });
        }
        torsion.push((i, curve.torsion_structure()?));
    }
    torsion.sort_by_key(|(i, _)| *i);
    let vertices = models
        .into_iter()
        .zip(torsion)
        .map(|(model, (_, torsion))| Vertex { model, torsion })
        .collect::<Vec<_>>();
    let mut edges: Vec<Edge> = discoveries
        .iter()
        .map(|d| Edge {
            u: d.u.min(d.v),
            v: d.u.max(d.v),
            ell: d.ell,
        })
        .collect();
    edges.sort();
    edges.dedup();
    let cm = vertices.iter().find_map(|v| cm_lookup(v.model.j_invariant()));
    Ok(ClassGraph {
        vertices,
        edges,
        discoveries,
        cm,
        classification: None,
    })
}

fn same_curve(a: &WeierstrassModel, b: &WeierstrassModel) -> bool {
    a.j_invariant() == b.j_invariant() && a.is_isomorphic(b)
}

/// The graph shape of a built class.
pub fn classify_shape(g: &ClassGraph) -> Result<GraphShape> {
    Ok(g.labeled()?.classify()?.0)
}

/// The canonical configuration: over every numbering of the vertices that
/// realises the shape, the lexicographically least tuple of torsion groups.
pub fn torsion_configuration(g: &ClassGraph, shape: GraphShape) -> Result<TorsionConfiguration> {
    Ok(g.canonical(shape)?.0)
}

/// `C`, `C_p` and the largest cyclic degree at vertex `v`.
pub fn isogeny_counts(g: &ClassGraph, v: usize) -> IsogenyCounts {
    let mut c_p = BTreeMap::new();
    for ell in g.primes() {
        c_p.insert(ell, g.component_size(v, ell) as u32);
    }
    let c = c_p.values().product();
    let max_cyclic_degree = g.cyclic_degrees(v).into_iter().max().unwrap_or(1);
    IsogenyCounts {
        c,
        c_p,
        max_cyclic_degree,
    }
}

/// Builds, classifies and checks the class of `e`.
pub fn classify(e: &WeierstrassModel) -> Result<ClassGraph> {
    let mut g = build_class(e)?;
    let (shape, numbering) = g.labeled()?.classify()?;
    let (config, numbering) = g.canonical_from(numbering)?;
    let table_row = TableRow::lookup(shape, &config)
        .ok_or_else(|| AtlasError::invariant(format!("{shape} {config} is not one of the 52 isogeny-torsion types")))?;
    g.classification = Some(Classification {
        shape,
        config,
        numbering,
        table_row,
    });
    g.check_invariants()?;
    Ok(g)
}

impl ClassGraph {
    pub fn shape(&self) -> Option<GraphShape> {
        self.classification.as_ref().map(|c| c.shape)
    }

    pub fn config(&self) -> Option<&TorsionConfiguration> {
        self.classification.as_ref().map(|c| &c.config)
    }

    pub fn counts(&self) -> Vec<IsogenyCounts> {
        (0..self.vertices.len()).map(|v| isogeny_counts(self, v)).collect()
    }

    /// Edge labels present in the graph, ascending.
    pub fn primes(&self) -> Vec<u32> {
        let mut ps: Vec<u32> = self.edges.iter().map(|e| e.ell).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Edges whose reverse isogeny was not found from the codomain.
    pub fn dual_violations(&self) -> Vec<Edge> {
        self.discoveries
            .iter()
            .filter(|d| {
                !self
                    .discoveries
                    .iter()
                    .any(|r| r.u == d.v && r.v == d.u && r.ell == d.ell)
            })
            .copied()
            .collect()
    }

    fn labeled(&self) -> Result<LabeledGraph> {
        LabeledGraph::new(self.vertices.len(), self.edges.iter().map(|e| (e.u, e.v, e.ell)))
    }

    fn canonical(&self, shape: GraphShape) -> Result<(TorsionConfiguration, Vec<usize>)> {
        let (found, numbering) = self.labeled()?.classify()?;
        if found != shape {
            return Err(AtlasError::invariant(format!("class has shape {found}, not {shape}")));
        }
        self.canonical_from(numbering)
    }

    fn canonical_from(&self, numberings: Vec<Vec<usize>>) -> Result<(TorsionConfiguration, Vec<usize>)> {
        numberings
            .into_iter()
            .map(|n| {
                (
                    TorsionConfiguration(n.iter().map(|&v| self.vertices[v].torsion.group).collect()),
                    n,
                )
            })
            .min()
            .ok_or_else(|| AtlasError::invariant("shape has no vertex numbering"))
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.u == v {
                Some((e.v, e.ell))
            } else if e.v == v {
                Some((e.u, e.ell))
            } else {
                None
            }
        })
    }

    /// Vertices joined to `v` by a chain of `ell`-edges, `v` included.
    fn component_size(&self, v: usize, ell: u32) -> usize {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![v];
        seen[v] = true;
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for (y, l) in self.neighbours(x) {
                if l == ell && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        size
    }

    /// For every vertex, the least product of edge labels along a path from `v`.
    fn cyclic_degrees(&self, v: usize) -> Vec<u32> {
        let n = self.vertices.len();
        let mut best = vec![u32::MAX; n];
        let mut on_path = vec![false; n];
        self.walk(v, 1, &mut on_path, &mut best);
        best
    }

    fn walk(&self, x: usize, deg: u32, on_path: &mut [bool], best: &mut [u32]) {
        best[x] = best[x].min(deg);
        on_path[x] = true;
        for (y, l) in self.neighbours(x) {
            if !on_path[y] {
                self.walk(y, deg.saturating_mul(l), on_path, best);
            }
        }
        on_path[x] = false;
    }

    /// Structural facts every rational isogeny class satisfies.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(AtlasError::invariant(msg));
        let n = self.vertices.len();
        if n == 0 || n > MAX_CLASS_SIZE {
            return fail(format!("class has {n} curves"));
        }
        if let Some(d) = self.dual_violations().first() {
            return fail(format!(
                "no dual {}-isogeny from vertex {} back to vertex {}",
                d.ell, d.v, d.u
            ));
        }
        let mut sorted = self.discoveries.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return fail("two isogenies of the same degree join the same pair of curves".into());
        }
        let two = self
            .vertices
            .iter()
            .filter(|v| v.torsion.group.has_two_torsion())
            .count();
        if two != 0 && two != n {
            return fail(format!("only {two} of {n} curves have a rational 2-torsion point"));
        }
        let counts = self.counts();
        for (i, c) in counts.iter().enumerate() {
            let c2 = c.c_p.get(&2).copied().unwrap_or(1);
            if c.c > 8 || c.c == 5 || c.c == 7 || ![1, 2, 4, 6, 8].contains(&c2) {
                return fail(format!("vertex {i} has C = {}, C_2 = {c2}", c.c));
            }
            let degrees = self.cyclic_degrees(i);
            let g = self.vertices[i].torsion.group;
            if degrees.iter().any(|&d| d == 21 || d == 27)
                && g != TorsionGroup::Cyclic(1)
                && g != TorsionGroup::Cyclic(3)
            {
                return fail(format!("vertex {i} has a 21- or 27-isogeny and torsion {g}"));
            }
        }
        let Some(cls) = &self.classification else { return Ok(()) };
        let max_degree = counts.iter().map(|c| c.max_cyclic_degree).max().unwrap_or(1);
        if cls.shape.max_cyclic_degree() != Some(max_degree) {
            return fail(format!(
                "{} class has a cyclic isogeny of degree {max_degree}",
                cls.shape
            ));
        }
        if is_forbidden(cls.shape, &cls.config) {
            return fail(format!("{} {} cannot occur over Q", cls.shape, cls.config));
        }
        if self.cm.is_some() && !is_cm_type(cls.shape, &cls.config) {
            return fail(format!("{} {} is not a CM isogeny-torsion type", cls.shape, cls.config));
        }
        if cls.shape == GraphShape::L4 {
            let j_end = Rational::from_integer((-12_288_000).into());
            for slot in [0, 3] {
                if *self.vertices[cls.numbering[slot]].model.j_invariant() != j_end {
                    return fail("an end of an L4 class does not have j = -2^15*3*5^3".into());
                }
            }
        }
        Ok(())
    }
}
