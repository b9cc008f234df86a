use std::fmt;
use std::str::FromStr;

use crate::error::{AtlasError, Result};
use crate::isogeny::ADMISSIBLE_PRIMES;

/// The 26 isogeny graph types of rational isogeny classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphShape {
    L1,
    /// Two vertices joined by a `p`-edge.
    L2(u32),
    /// Path of two `p`-edges; the parameter is `p²`.
    L3(u32),
    L4,
    /// Square with opposite edges of equal prime labels `p`, `q`; the parameter is `pq`.
    R4(u32),
    R6,
    T4,
    T6,
    T8,
    S,
}

const R4_PARAMS: [u32; 5] = [6, 10, 14, 15, 21];

impl GraphShape {
    /// All 26 shapes.
    pub fn all() -> Vec<GraphShape> {
        let mut v = vec![GraphShape::L1];
        v.extend(ADMISSIBLE_PRIMES.map(GraphShape::L2));
        v.extend([GraphShape::L3(9), GraphShape::L3(25), GraphShape::L4]);
        v.extend([GraphShape::T4, GraphShape::T6, GraphShape::T8]);
        v.extend(R4_PARAMS.map(GraphShape::R4));
        v.extend([GraphShape::R6, GraphShape::S]);
        v
    }

    pub fn is_valid(&self) -> bool {
        match self {
            GraphShape::L2(p) => ADMISSIBLE_PRIMES.contains(p),
            GraphShape::L3(n) => *n == 9 || *n == 25,
            GraphShape::R4(n) => R4_PARAMS.contains(n),
            _ => true,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.template().slots
    }

    /// Degree of the largest cyclic isogeny in the class, when the shape fixes it.
    pub fn max_cyclic_degree(&self) -> Option<u32> {
        match self {
            GraphShape::L1 => Some(1),
            GraphShape::L2(n) | GraphShape::L3(n) | GraphShape::R4(n) => Some(*n),
            GraphShape::L4 => Some(27),
            GraphShape::T4 => Some(4),
            GraphShape::T6 => Some(8),
            GraphShape::T8 => Some(16),
            GraphShape::R6 => Some(18),
            GraphShape::S => Some(12),
        }
    }

    pub(crate) fn template(&self) -> &'static Template {
        match self {
            GraphShape::L1 => &PATH1,
            GraphShape::L2(_) => &PATH2,
            GraphShape::L3(_) => &PATH3,
            GraphShape::L4 => &PATH4,
            GraphShape::T4 => &TREE4,
            GraphShape::T6 => &TREE6,
            GraphShape::T8 => &TREE8,
            GraphShape::R4(_) => &RECT4,
            GraphShape::R6 => &RECT6,
            GraphShape::S => &SPECIAL,
        }
    }

    /// Shape named by a template once its label classes are bound to primes.
    fn from_template(t: &Template, labels: &[u32]) -> Option<GraphShape> {
        let shape = match (t.kind, labels) {
            (Kind::Path, []) => GraphShape::L1,
            (Kind::Path, [p]) => match t.slots {
                2 => GraphShape::L2(*p),
                3 => GraphShape::L3(p * p),
                4 if *p == 3 => GraphShape::L4,
                _ => return None,
            },
            (Kind::Tree, [2]) => match t.slots {
                4 => GraphShape::T4,
                6 => GraphShape::T6,
                8 => GraphShape::T8,
                _ => return None,
            },
            (Kind::Rect, [p, q]) if t.slots == 4 => GraphShape::R4(p * q),
            (Kind::Rect, [2, 3]) if t.slots == 6 => GraphShape::R6,
            (Kind::Special, [3, 2]) => GraphShape::S,
            _ => return None,
        };
        shape.is_valid().then_some(shape)
    }
}

impl fmt::Display for GraphShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphShape::L1 => write!(f, "L1"),
            GraphShape::L2(p) => write!(f, "L2({p})"),
            GraphShape::L3(n) => write!(f, "L3({n})"),
            GraphShape::L4 => write!(f, "L4"),
            GraphShape::R4(n) => write!(f, "R4({n})"),
            GraphShape::R6 => write!(f, "R6"),
            GraphShape::T4 => write!(f, "T4"),
            GraphShape::T6 => write!(f, "T6"),
            GraphShape::T8 => write!(f, "T8"),
            GraphShape::S => write!(f, "S"),
        }
    }
}

impl FromStr for GraphShape {
    type Err = AtlasError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || AtlasError::Parse(format!("unknown graph shape {s:?}"));
        let s = s.trim();
        let shape = match s {
            "L1" => GraphShape::L1,
            "L4" => GraphShape::L4,
            "R6" => GraphShape::R6,
            "T4" => GraphShape::T4,
            "T6" => GraphShape::T6,
            "T8" => GraphShape::T8,
            "S" => GraphShape::S,
            _ => {
                let (head, rest) = s.split_once('(').ok_or_else(bad)?;
                let n: u32 = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                match head {
                    "L2" => GraphShape::L2(n),
                    "L3" => GraphShape::L3(n),
                    "R4" => GraphShape::R4(n),
                    _ => return Err(bad()),
                }
            }
        };
        if shape.is_valid() {
            Ok(shape)
        } else {
            Err(bad())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Path,
    Tree,
    Rect,
    Special,
}

/// Vertex numbering of a shape: slot `i` is the table's `E_{i+1}`. Each edge
/// carries a label class; distinct classes must receive distinct primes.
#[derive(Debug)]
pub(crate) struct Template {
    kind: Kind,
    pub(crate) slots: usize,
    classes: usize,
    edges: &'static [(usize, usize, usize)],
}

static PATH1: Template = Template {
    kind: Kind::Path,
    slots: 1,
    classes: 0,
    edges: &[],
};
static PATH2: Template = Template {
    kind: Kind::Path,
    slots: 2,
    classes: 1,
    edges: &[(0, 1, 0)],
};
static PATH3: Template = Template {
    kind: Kind::Path,
    slots: 3,
    classes: 1,
    edges: &[(0, 1, 0), (1, 2, 0)],
};
static PATH4: Template = Template {
    kind: Kind::Path,
    slots: 4,
    classes: 1,
    edges: &[(0, 1, 0), (1, 2, 0), (2, 3, 0)],
};
static TREE4: Template = Template {
    kind: Kind::Tree,
    slots: 4,
    classes: 1,
    edges: &[(0, 1, 0), (0, 2, 0), (0, 3, 0)],
};
static TREE6: Template = Template {
    kind: Kind::Tree,
    slots: 6,
    classes: 1,
    edges: &[(0, 1, 0), (0, 2, 0), (0, 3, 0), (3, 4, 0), (3, 5, 0)],
};
static TREE8: Template = Template {
    kind: Kind::Tree,
    slots: 8,
    classes: 1,
    edges: &[
        (0, 1, 0),
        (0, 2, 0),
        (0, 3, 0),
        (3, 4, 0),
        (3, 5, 0),
        (5, 6, 0),
        (5, 7, 0),
    ],
};
static RECT4: Template = Template {
    kind: Kind::Rect,
    slots: 4,
    classes: 2,
    edges: &[(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1)],
};
static RECT6: Template = Template {
    kind: Kind::Rect,
    slots: 6,
    classes: 2,
    edges: &[
        (0, 1, 0),
        (2, 3, 0),
        (4, 5, 0),
        (0, 2, 1),
        (2, 4, 1),
        (1, 3, 1),
        (3, 5, 1),
    ],
};
static SPECIAL: Template = Template {
    kind: Kind::Special,
    slots: 8,
    classes: 2,
    edges: &[
        (0, 1, 0),
        (2, 3, 0),
        (4, 5, 0),
        (6, 7, 0),
        (0, 2, 1),
        (0, 4, 1),
        (0, 6, 1),
        (1, 3, 1),
        (1, 5, 1),
        (1, 7, 1),
    ],
};

static TEMPLATES: [&Template; 10] = [
    &PATH1, &PATH2, &PATH3, &PATH4, &TREE4, &TREE6, &TREE8, &RECT4, &RECT6, &SPECIAL,
];

/// An undirected simple graph with prime edge labels, as seen by the matcher.
pub(crate) struct LabeledGraph {
    n: usize,
    label: Vec<Vec<Option<u32>>>,
    edge_count: usize,
}

impl LabeledGraph {
    pub(crate) fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, u32)>) -> Result<Self> {
        let mut label = vec![vec![None; n]; n];
        let mut edge_count = 0;
        for (u, v, ell) in edges {
            if u == v || label[u][v].is_some() {
                return Err(AtlasError::invariant(format!(
                    "isogeny graph has a loop or parallel edge at ({u},{v})"
                )));
            }
            label[u][v] = Some(ell);
            label[v][u] = Some(ell);
            edge_count += 1;
        }
        Ok(LabeledGraph { n, label, edge_count })
    }

    /// Every slot-to-vertex bijection realising `t`, with the primes bound to
    /// its label classes.
    fn embeddings(&self, t: &Template) -> Vec<(Vec<usize>, Vec<u32>)> {
        let mut out = Vec::new();
        if t.slots != self.n || t.edges.len() != self.edge_count {
            return out;
        }
        let mut assign = Vec::with_capacity(t.slots);
        let mut used = vec![false; self.n];
        let mut classes = vec![None; t.classes];
        self.extend(t, &mut assign, &mut used, &mut classes, &mut out);
        out
    }

    fn extend(
        &self,
        t: &Template,
        assign: &mut Vec<usize>,
        used: &mut [bool],
        classes: &mut Vec<Option<u32>>,
        out: &mut Vec<(Vec<usize>, Vec<u32>)>,
    ) {
        let slot = assign.len();
        if slot == t.slots {
            out.push((assign.clone(), classes.iter().map(|c| c.unwrap()).collect()));
            return;
        }
        for v in 0..self.n {
            if used[v] {
                continue;
            }
            let saved = classes.clone();
            let ok = t.edges.iter().all(|&(a, b, c)| {
                let other = if a == slot && b < slot {
                    b
                } else if b == slot && a < slot {
                    a
                } else {
                    return true;
                };
                let Some(ell) = self.label[v][assign[other]] else {
                    return false;
                };
                match classes[c] {
                    Some(bound) => bound == ell,
                    None if classes.contains(&Some(ell)) => false,
                    None => {
                        classes[c] = Some(ell);
                        true
                    }
                }
            });
            if ok {
                used[v] = true;
                assign.push(v);
                self.extend(t, assign, used, classes, out);
                assign.pop();
                used[v] = false;
            }
            *classes = saved;
        }
    }

    /// The shape of the graph, with every numbering of its vertices that
    /// realises the shape's template.
    pub(crate) fn classify(&self) -> Result<(GraphShape, Vec<Vec<usize>>)> {
        for t in TEMPLATES.iter() {
            let emb = self.embeddings(t);
            let Some((_, labels)) = emb.first() else { continue };
            let shape = GraphShape::from_template(t, labels).ok_or_else(|| {
                AtlasError::invariant(format!(
                    "{}-vertex graph with labels {labels:?} is not one of the 26 isogeny graph types",
                    self.n
                ))
            })?;
            return Ok((shape, emb.into_iter().map(|(a, _)| a).collect()));
        }
        Err(AtlasError::invariant(format!(
            "{}-vertex graph with {} edges is not one of the 26 isogeny graph types",
            self.n, self.edge_count
        )))
    }
}
