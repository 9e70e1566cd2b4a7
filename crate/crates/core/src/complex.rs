//! Simplicial complexes given by their facets.
//!
//! Vertices are labelled `1..=n`. A complex is stored as its inclusion-maximal
//! facets; faces of a given dimension are produced on demand and always come
//! back in lexicographic order, which fixes the row/column order of every
//! matrix built downstream.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A face: a strictly increasing list of vertex labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    /// Builds a face from arbitrary vertex labels (sorted and deduplicated).
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    /// Wraps a list that is already strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// The squarefree monomial `x_a x_b ...` naming this face; the empty face is `1`.
    pub fn monomial(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|v| format!("x{v}")).collect()
    }

    /// All subfaces with `size` vertices, in lexicographic order.
    pub fn subfaces(&self, size: usize) -> Vec<Face> {
        let mut out = Vec::new();
        for_each_combination(&self.0, size, |c| out.push(Face(c.to_vec())));
        out
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(v: [u32; N]) -> Self {
        Face::new(v.to_vec())
    }
}

/// Calls `f` on every `size`-subset of `items`, in lexicographic order of positions.
pub(crate) fn for_each_combination<T: Copy>(items: &[T], size: usize, mut f: impl FnMut(&[T])) {
    let n = items.len();
    if size > n {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        // advance the rightmost index that still has room
        let mut pos = size;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if idx[pos] < n - size + pos {
                break;
            }
            if pos == 0 {
                return;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
        for j in pos..size {
            buf[j] = items[idx[j]];
        }
    }
}

/// A simplicial complex on vertices `1..=n_vertices`, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n_vertices: u32,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Canonicalizes a facet list: drops duplicates and non-maximal sets and
    /// checks that every vertex in `1..=n` is used.
    pub fn from_facets<I, F>(n: u32, candidate_facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut facets = Vec::new();
        for (index, f) in candidate_facets.into_iter().enumerate() {
            let f: Face = f.into();
            if f.is_empty() {
                return Err(Error::EmptyFacet { index });
            }
            if let Some(&v) = f.0.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange { vertex: v, n_vertices: n });
            }
            facets.push(f);
        }

        // Larger sets first so a candidate only needs checking against kept facets.
        facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|g| g.len() > f.len() && f.is_subset_of(g)) {
                kept.push(f);
            }
        }
        kept.sort();

        let mut covered = vec![false; n as usize + 1];
        for f in &kept {
            for &v in f.vertices() {
                covered[v as usize] = true;
            }
        }
        if let Some(v) = (1..=n).find(|&v| !covered[v as usize]) {
            return Err(Error::UncoveredVertex { vertex: v });
        }

        Ok(SimplicialComplex { n_vertices: n, facets: kept })
    }

    pub fn n_vertices(&self) -> u32 {
        self.n_vertices
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Largest face dimension.
    pub fn dim(&self) -> usize {
        self.facets.iter().map(Face::len).max().unwrap_or(1) - 1
    }

    /// Faces of dimension `i`, sorted lexicographically and duplicate-free.
    pub fn faces_of_dim(&self, i: i64) -> Vec<Face> {
        if i < -1 {
            return Vec::new();
        }
        if i == -1 {
            return vec![Face::empty()];
        }
        let size = (i + 1) as usize;
        let mut set = BTreeSet::new();
        for f in &self.facets {
            for_each_combination(f.vertices(), size, |c| {
                set.insert(Face(c.to_vec()));
            });
        }
        set.into_iter().collect()
    }

    /// All faces grouped by dimension: entry `j` holds the faces of dimension `j - 1`.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let top = self.dim() + 1;
        let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
        for f in &self.facets {
            for (size, bucket) in by_size.iter_mut().enumerate().take(f.len() + 1) {
                for_each_combination(f.vertices(), size, |c| bucket.push(Face(c.to_vec())));
            }
        }
        for bucket in &mut by_size {
            bucket.sort_unstable();
            bucket.dedup();
        }
        by_size
    }

    pub fn f_vector(&self) -> FVector {
        FVector {
            entries: self.faces_by_size().iter().map(|b| b.len() as u64).collect(),
        }
    }

    /// Number of faces of dimension `i` (for `i >= -1`).
    pub fn f(&self, i: i64) -> u64 {
        self.faces_of_dim(i).len() as u64
    }

    /// Vertices lying in every facet.
    pub fn cone_vertices(&self) -> Vec<u32> {
        (1..=self.n_vertices)
            .filter(|&v| self.facets.iter().all(|f| f.contains(v)))
            .collect()
    }

    /// Writes the complex as a join `simplex(C) * link`, `C` the cone
    /// vertices. The link is relabeled onto `1..=n - |C|` keeping vertex
    /// order, and is `None` when the complex is a single simplex.
    pub fn cone_split(&self) -> (Vec<u32>, Option<SimplicialComplex>) {
        let cone = self.cone_vertices();
        if self.facets.len() == 1 {
            return (cone, None);
        }
        let mut relabel = vec![0u32; self.n_vertices as usize + 1];
        let mut next = 0;
        for v in 1..=self.n_vertices {
            if cone.binary_search(&v).is_err() {
                next += 1;
                relabel[v as usize] = next;
            }
        }
        let facets = self.facets.iter().map(|f| {
            Face(
                f.vertices()
                    .iter()
                    .filter(|v| cone.binary_search(v).is_err())
                    .map(|&v| relabel[v as usize])
                    .collect(),
            )
        });
        let link = SimplicialComplex::from_facets(next, facets).expect("link of the cone is a valid complex");
        (cone, Some(link))
    }

    pub fn one_skeleton(&self) -> Graph {
        let edges = self
            .faces_of_dim(1)
            .into_iter()
            .map(|e| (e.0[0], e.0[1]))
            .collect();
        Graph { n_vertices: self.n_vertices, edges }
    }

    /// Checks the pseudo-manifold conditions directly: purity, every ridge
    /// in at most two facets, and ridge-connectivity of the facets.
    pub fn pseudo_manifold_verdict(&self) -> PseudoManifoldVerdict {
        let top = self.facets[0].len();
        if let Some(f) = self.facets.iter().find(|f| f.len() != top) {
            let other = self.facets.iter().find(|g| g.len() == self.dim() + 1).cloned();
            return PseudoManifoldVerdict::violated(Violation::NonPureDimension, other, f.clone());
        }

        // ridge -> facets containing it
        let mut ridges: HashMap<Face, Vec<usize>> = HashMap::new();
        for (idx, f) in self.facets.iter().enumerate() {
            for r in f.subfaces(top - 1) {
                ridges.entry(r).or_default().push(idx);
            }
        }
        let mut sorted: Vec<(&Face, &Vec<usize>)> = ridges.iter().collect();
        sorted.sort_by(|a, b| a.0.cmp(b.0));
        if let Some((ridge, owners)) = sorted.iter().find(|(_, o)| o.len() > 2) {
            return PseudoManifoldVerdict::violated(
                Violation::RidgeInThreeFacets,
                Some((*ridge).clone()),
                self.facets[owners[2]].clone(),
            );
        }

        // union the facets sharing each ridge
        let mut uf = UnionFind::new(self.facets.len());
        for owners in ridges.values() {
            if let [a, b] = owners[..] {
                uf.union(a, b);
            }
        }
        if let Some(j) = (1..self.facets.len()).find(|&j| uf.find(j) != uf.find(0)) {
            return PseudoManifoldVerdict::violated(
                Violation::FacetGraphDisconnected,
                Some(self.facets[0].clone()),
                self.facets[j].clone(),
            );
        }

        PseudoManifoldVerdict {
            is_pseudo_manifold: true,
            has_boundary: ridges.values().any(|o| o.len() == 1),
            violation: None,
        }
    }
}

/// `(f_{-1}, f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub entries: Vec<u64>,
}

impl FVector {
    /// `f_i` for `i >= -1`; zero above the top dimension.
    pub fn get(&self, i: i64) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|j| self.entries.get(j).copied())
            .unwrap_or(0)
    }

    pub fn dim(&self) -> i64 {
        self.entries.len() as i64 - 2
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An undirected simple graph on vertices `1..=n_vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n_vertices: u32,
    pub edges: Vec<(u32, u32)>,
}

/// One connected component of a [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<u32>,
    pub bipartite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAnalysis {
    pub connected: bool,
    /// True when some component is bipartite (isolated vertices count).
    pub bipartite: bool,
    pub components: Vec<Component>,
}

impl GraphAnalysis {
    pub fn has_bipartite_component(&self) -> bool {
        self.components.iter().any(|c| c.bipartite)
    }
}

impl Graph {
    /// Breadth-first 2-coloring of every component.
    pub fn analyze(&self) -> GraphAnalysis {
        let n = self.n_vertices as usize;
        let mut adj = vec![Vec::new(); n + 1];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b as usize);
            adj[b as usize].push(a as usize);
        }
        let mut color: Vec<Option<bool>> = vec![None; n + 1];
        let mut components = Vec::new();
        for start in 1..=n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            let mut verts = Vec::new();
            let mut bipartite = true;
            while let Some(u) = queue.pop_front() {
                verts.push(u as u32);
                let cu = color[u].unwrap();
                for &w in &adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => bipartite = false,
                        Some(_) => {}
                    }
                }
            }
            verts.sort_unstable();
            components.push(Component { vertices: verts, bipartite });
        }
        GraphAnalysis {
            connected: components.len() <= 1,
            bipartite: components.iter().any(|c| c.bipartite),
            components,
        }
    }

    /// `(connected, bipartite)`.
    pub fn is_connected_nonbipartite(&self) -> (bool, bool) {
        let a = self.analyze();
        (a.connected, a.bipartite)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    NonPureDimension,
    RidgeInThreeFacets,
    FacetGraphDisconnected,
}

/// The offending face/facet pair behind a failed pseudo-manifold check.
///
/// * `NonPureDimension`: `face` is a top-dimensional facet, `facet` one of smaller dimension.
/// * `RidgeInThreeFacets`: `face` is the ridge, `facet` the third facet containing it.
/// * `FacetGraphDisconnected`: `face` and `facet` are facets in different ridge-components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationWitness {
    pub kind: Violation,
    pub face: Option<Face>,
    pub facet: Face,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoManifoldVerdict {
    pub is_pseudo_manifold: bool,
    /// Only meaningful when `is_pseudo_manifold`.
    pub has_boundary: bool,
    pub violation: Option<ViolationWitness>,
}

impl PseudoManifoldVerdict {
    fn violated(kind: Violation, face: Option<Face>, facet: Face) -> Self {
        PseudoManifoldVerdict {
            is_pseudo_manifold: false,
            has_boundary: false,
            violation: Some(ViolationWitness { kind, face, facet }),
        }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
