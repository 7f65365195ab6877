//! Marking of a pants decomposition: marked points, canonical arcs,
//! spanning tree, and the generating set X of the fundamental group.
//!
//! Each pants curve carries one marked point: the reference seam foot of its
//! A-side slot. Each pants contributes up to six canonical arcs through its
//! front hexagon: a seam arc per cyclic slot pair `(s, s+1)` when both slots
//! are glued, and a mid arc per glued slot `s` (a lasso around slot `s+1`).
//! The generating set consists of one loop per pants curve and one loop per
//! canonical arc, each conjugated to the base point along the spanning tree.
//! Loops of arcs that lie in the tree are null homotopic; they are kept so
//! the generator numbering stays in construction order.

use crate::error::{Error, Result};
use crate::surface::PantsDecomposition;

/// Which of the six arc types of a pants an arc is. `Seam(s)` joins slot `s`
/// to slot `s+1 mod 3`; `Mid(s)` joins slot `s` to itself around slot
/// `s+1 mod 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    Seam(u8),
    Mid(u8),
}

/// A canonical arc, oriented from the marked point of `from_curve` to the
/// marked point of `to_curve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalArc {
    pub pants: usize,
    pub kind: ArcKind,
    pub from_curve: usize,
    pub to_curve: usize,
}

/// One step of a path through the 1-complex: a full loop around a pants
/// curve at its marked point, or a canonical arc traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Cuff { curve: usize, inverse: bool },
    Arc { arc: usize, inverse: bool },
}

impl Step {
    pub fn inverted(self) -> Step {
        match self {
            Step::Cuff { curve, inverse } => Step::Cuff { curve, inverse: !inverse },
            Step::Arc { arc, inverse } => Step::Arc { arc, inverse: !inverse },
        }
    }
}

/// What a generator loop wraps: a pants curve or a canonical arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    PantsCurve(usize),
    Arc(usize),
}

/// A generator of X as a based loop through the 1-complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: GenKind,
    pub steps: Vec<Step>,
}

/// The full marking data for a pants decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkingData {
    pub arcs: Vec<CanonicalArc>,
    /// Arc indices forming the spanning tree of marked points.
    pub tree: Vec<usize>,
    /// Tree path from the base marked point to each curve's marked point.
    pub tree_paths: Vec<Vec<Step>>,
    pub generators: Vec<Generator>,
    /// The curve whose marked point is the base point (always 0).
    pub base_curve: usize,
}

impl MarkingData {
    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// The generator index of pants curve `i`'s loop (these come first).
    pub fn curve_generator(&self, curve: usize) -> usize {
        curve
    }

    /// The generator index of canonical arc `a`'s loop.
    pub fn arc_generator(&self, num_curves: usize, arc: usize) -> usize {
        num_curves + arc
    }
}

/// Builds the marking deterministically. Never fails on a valid
/// decomposition.
pub fn build_marking(pd: &PantsDecomposition) -> MarkingData {
    let n = pd.num_curves();

    // Canonical arcs in construction order.
    let mut arcs = Vec::new();
    for (pi, _) in pd.pants.iter().enumerate() {
        for s in 0..3u8 {
            let t = (s + 1) % 3;
            if let (Some(cf), Some(ct)) =
                (pd.curve_at(pi, s as usize), pd.curve_at(pi, t as usize))
            {
                arcs.push(CanonicalArc {
                    pants: pi,
                    kind: ArcKind::Seam(s),
                    from_curve: cf,
                    to_curve: ct,
                });
            }
        }
        for s in 0..3u8 {
            if let Some(cf) = pd.curve_at(pi, s as usize) {
                arcs.push(CanonicalArc {
                    pants: pi,
                    kind: ArcKind::Mid(s),
                    from_curve: cf,
                    to_curve: cf,
                });
            }
        }
    }

    // Spanning tree: Kruskal over arcs in index order, seam arcs with
    // distinct endpoint curves only. This yields the lexicographically
    // smallest arc set.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut tree = Vec::new();
    for (ai, arc) in arcs.iter().enumerate() {
        if arc.from_curve == arc.to_curve {
            continue;
        }
        let (ra, rb) = (find(&mut parent, arc.from_curve), find(&mut parent, arc.to_curve));
        if ra != rb {
            parent[ra] = rb;
            tree.push(ai);
        }
    }

    // Tree paths from curve 0 by breadth-first search.
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n]; // (neighbor, arc)
    for &ai in &tree {
        let a = &arcs[ai];
        adj[a.from_curve].push((a.to_curve, ai));
        adj[a.to_curve].push((a.from_curve, ai));
    }
    let mut tree_paths: Vec<Option<Vec<Step>>> = vec![None; n];
    tree_paths[0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let base = tree_paths[c].clone().unwrap();
        for &(nb, ai) in &adj[c] {
            if tree_paths[nb].is_none() {
                let mut path = base.clone();
                let forward = arcs[ai].from_curve == c;
                path.push(Step::Arc { arc: ai, inverse: !forward });
                tree_paths[nb] = Some(path);
                queue.push_back(nb);
            }
        }
    }
    let tree_paths: Vec<Vec<Step>> = tree_paths
        .into_iter()
        .map(|p| p.expect("gluing graph connected implies marked points connected"))
        .collect();

    // Generators: K1..KN then A1..Am.
    let mut generators = Vec::with_capacity(n + arcs.len());
    for (ci, path) in tree_paths.iter().enumerate() {
        let mut steps = path.clone();
        steps.push(Step::Cuff { curve: ci, inverse: false });
        steps.extend(path.iter().rev().map(|s| s.inverted()));
        generators.push(Generator {
            name: format!("K{}", ci + 1),
            kind: GenKind::PantsCurve(ci),
            steps,
        });
    }
    for (ai, arc) in arcs.iter().enumerate() {
        let mut steps = tree_paths[arc.from_curve].clone();
        steps.push(Step::Arc { arc: ai, inverse: false });
        steps.extend(tree_paths[arc.to_curve].iter().rev().map(|s| s.inverted()));
        generators.push(Generator {
            name: format!("A{}", ai + 1),
            kind: GenKind::Arc(ai),
            steps,
        });
    }

    MarkingData { arcs, tree, tree_paths, generators, base_curve: 0 }
}

/// Looks up the arc index of a given pants and kind.
pub fn arc_index(marking: &MarkingData, pants: usize, kind: ArcKind) -> Result<usize> {
    marking
        .arcs
        .iter()
        .position(|a| a.pants == pants && a.kind == kind)
        .ok_or_else(|| Error::InvalidConfig(format!("arc {kind:?} of pants {pants} not present")))
}
