use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use super::neighbors;
use crate::error::Result;
use crate::tableau::{enumerate_row_standard, Partition, RowStandardTableau};

/// An undirected edge between vertex ids `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Entries `i` with `delta_i(a) = b`.
    pub labels_from_a: BTreeSet<usize>,
    /// Entries `j` with `delta_j(b) = a`.
    pub labels_from_b: BTreeSet<usize>,
}

/// All row-standard tableaux of one shape, joined by single moves.
///
/// Vertex ids follow the enumeration order of [`enumerate_row_standard`].
#[derive(Debug, Clone)]
pub struct MoveGraph {
    shape: Partition,
    vertices: Vec<RowStandardTableau>,
    index: HashMap<RowStandardTableau, usize>,
    edges: Vec<Edge>,
    // (neighbor, label) sorted by label, then neighbor
    adjacency: Vec<Vec<(usize, usize)>>,
    component: Vec<usize>,
    num_components: usize,
}

impl MoveGraph {
    pub fn build(shape: &Partition, cap: u64) -> Result<Self> {
        let vertices: Vec<RowStandardTableau> = enumerate_row_standard(shape, cap)?.collect();
        let index: HashMap<RowStandardTableau, usize> = vertices
            .iter()
            .enumerate()
            .map(|(id, t)| (t.clone(), id))
            .collect();

        let mut adjacency = vec![Vec::new(); vertices.len()];
        let mut edge_map: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
        for (id, t) in vertices.iter().enumerate() {
            for (label, next) in neighbors(t) {
                let other = index[&next];
                adjacency[id].push((other, label));
                let key = (id.min(other), id.max(other));
                let edge = edge_map.entry(key).or_insert_with(|| Edge {
                    a: key.0,
                    b: key.1,
                    labels_from_a: BTreeSet::new(),
                    labels_from_b: BTreeSet::new(),
                });
                if id == key.0 {
                    edge.labels_from_a.insert(label);
                } else {
                    edge.labels_from_b.insert(label);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable_by_key(|&(v, label)| (label, v));
        }

        let mut component = vec![usize::MAX; vertices.len()];
        let mut num_components = 0;
        for start in 0..vertices.len() {
            if component[start] != usize::MAX {
                continue;
            }
            component[start] = num_components;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &adjacency[v] {
                    if component[w] == usize::MAX {
                        component[w] = num_components;
                        queue.push_back(w);
                    }
                }
            }
            num_components += 1;
        }

        Ok(Self {
            shape: shape.clone(),
            vertices,
            index,
            edges: edge_map.into_values().collect(),
            adjacency,
            component,
            num_components,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn vertices(&self) -> &[RowStandardTableau] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn id_of(&self, t: &RowStandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// `(neighbor id, label)` pairs of a vertex, ordered by label.
    pub fn neighbors_of(&self, id: usize) -> &[(usize, usize)] {
        &self.adjacency[id]
    }

    pub fn num_components(&self) -> usize {
        self.num_components
    }

    /// Component id of each vertex; ids are numbered by first vertex.
    pub fn component_of(&self, id: usize) -> usize {
        self.component[id]
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_components];
        for &c in &self.component {
            sizes[c] += 1;
        }
        sizes
    }

    /// Breadth-first distances from `source`; `None` for vertices of other components.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &(w, _) in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Graphviz rendering; one cluster per component, labels carry `n_inv`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph \"moves_{}\" {{", self.shape);
        let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
        for c in 0..self.num_components {
            let _ = writeln!(out, "  subgraph cluster_{c} {{");
            let _ = writeln!(out, "    label=\"component {c}\";");
            for (id, t) in self.vertices.iter().enumerate() {
                if self.component[id] == c {
                    let _ = writeln!(out, "    v{id} [label=\"{t}\\nn_inv={}\"];", t.n_inv());
                }
            }
            let _ = writeln!(out, "  }}");
        }
        for e in &self.edges {
            let labels: Vec<String> = e
                .labels_from_a
                .iter()
                .map(|i| format!("d{i}"))
                .chain(e.labels_from_b.iter().map(|j| format!("d{j}")))
                .collect();
            let _ = writeln!(
                out,
                "  v{} -- v{} [label=\"{}\"];",
                e.a,
                e.b,
                labels.join(",")
            );
        }
        out.push_str("}\n");
        out
    }
}
