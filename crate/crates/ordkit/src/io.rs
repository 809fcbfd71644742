//! JSON wire formats and DOT export.
//!
//! Posets travel as `{"elements": [...], "leq": [[a, b], ...]}` with the
//! closure implied; maps as `{"dom": ..., "cod": ..., "map": {...}}`;
//! relations as `{"src": ..., "dst": ..., "pairs": [[a, b], ...]}`.
//! Diagrams, weights, lattices, and signatures mirror their type fields.
//! DOT export renders Hasse diagrams: covering edges only, bottom-up.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::duality::DistLattice;
use crate::error::{Error, Result};
use crate::limits::{FiniteDiagram, Weight};
use crate::logic::Signature;
use crate::poset::{FinPoset, MonotoneMap};
use crate::subobject::Relation;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(String, String)>,
}

impl PosetJson {
    pub fn from_poset(p: &FinPoset) -> PosetJson {
        PosetJson {
            elements: p.elements().to_vec(),
            leq: p
                .covers()
                .into_iter()
                .map(|(i, j)| (p.id(i).to_string(), p.id(j).to_string()))
                .collect(),
        }
    }

    pub fn into_poset(self) -> Result<FinPoset> {
        FinPoset::new(self.elements, self.leq)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub dom: PosetJson,
    pub cod: PosetJson,
    pub map: BTreeMap<String, String>,
}

impl MapJson {
    pub fn from_map(f: &MonotoneMap) -> MapJson {
        MapJson {
            dom: PosetJson::from_poset(f.dom()),
            cod: PosetJson::from_poset(f.cod()),
            map: (0..f.dom().len())
                .map(|i| (f.dom().id(i).to_string(), f.cod().id(f.apply(i)).to_string()))
                .collect(),
        }
    }

    pub fn into_map(self) -> Result<MonotoneMap> {
        let dom = self.dom.into_poset()?;
        let cod = self.cod.into_poset()?;
        let table: Vec<(String, String)> = self.map.into_iter().collect();
        MonotoneMap::from_ids(
            dom,
            cod,
            table.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationJson {
    pub src: PosetJson,
    pub dst: PosetJson,
    pub pairs: Vec<(String, String)>,
}

impl RelationJson {
    pub fn from_relation(r: &Relation) -> RelationJson {
        RelationJson {
            src: PosetJson::from_poset(r.src()),
            dst: PosetJson::from_poset(r.dst()),
            pairs: r.id_pairs(),
        }
    }

    pub fn into_relation(self) -> Result<Relation> {
        let src = self.src.into_poset()?;
        let dst = self.dst.into_poset()?;
        Relation::from_ids(&src, &dst, self.pairs.iter().map(|(a, b)| (a.as_str(), b.as_str())))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramEdgeJson {
    pub src: String,
    pub dst: String,
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramJson {
    pub nodes: BTreeMap<String, PosetJson>,
    #[serde(default)]
    pub edges: Vec<DiagramEdgeJson>,
}

impl DiagramJson {
    pub fn into_diagram(self) -> Result<FiniteDiagram> {
        let nodes: Vec<(String, FinPoset)> = self
            .nodes
            .into_iter()
            .map(|(name, p)| Ok((name, p.into_poset()?)))
            .collect::<Result<_>>()?;
        let mut diagram = FiniteDiagram::new(nodes);
        for edge in self.edges {
            let src = diagram.node_index(&edge.src)?;
            let dst = diagram.node_index(&edge.dst)?;
            let table: Vec<(String, String)> = edge.map.into_iter().collect();
            let map = MonotoneMap::from_ids(
                diagram.node(src).clone(),
                diagram.node(dst).clone(),
                table.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )?;
            diagram.add_edge(src, dst, map)?;
        }
        Ok(diagram)
    }
}

/// Weights mirror diagrams: one poset per node name, one map per edge
/// (in the diagram's edge order).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightJson {
    pub nodes: BTreeMap<String, PosetJson>,
    #[serde(default)]
    pub edges: Vec<BTreeMap<String, String>>,
}

impl WeightJson {
    pub fn into_weight(self, diagram: &FiniteDiagram) -> Result<Weight> {
        let mut node_weights = Vec::with_capacity(diagram.node_count());
        for i in 0..diagram.node_count() {
            let name = diagram.node_name(i);
            let poset = self
                .nodes
                .get(name)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("weight is missing node {name:?}")))?;
            node_weights.push(poset.into_poset()?);
        }
        if self.edges.len() != diagram.edges().len() {
            return Err(Error::Invalid(format!(
                "weight has {} edge maps, diagram has {} edges",
                self.edges.len(),
                diagram.edges().len()
            )));
        }
        let mut edge_weights = Vec::with_capacity(self.edges.len());
        for (k, (src, dst, _)) in diagram.edges().iter().enumerate() {
            let table: Vec<(String, String)> = self.edges[k].clone().into_iter().collect();
            edge_weights.push(MonotoneMap::from_ids(
                node_weights[*src].clone(),
                node_weights[*dst].clone(),
                table.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            )?);
        }
        Weight::new(diagram, node_weights, edge_weights)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    pub carrier: PosetJson,
    /// `meet[i][j]` and `join[i][j]` name elements, indexed like the
    /// carrier's element list.
    pub meet: Vec<Vec<String>>,
    pub join: Vec<Vec<String>>,
    pub bottom: String,
    pub top: String,
}

impl LatticeJson {
    pub fn from_lattice(l: &DistLattice) -> LatticeJson {
        let name = |i: usize| l.carrier().id(i).to_string();
        LatticeJson {
            carrier: PosetJson::from_poset(l.carrier()),
            meet: (0..l.len()).map(|a| (0..l.len()).map(|b| name(l.meet(a, b))).collect()).collect(),
            join: (0..l.len()).map(|a| (0..l.len()).map(|b| name(l.join(a, b))).collect()).collect(),
            bottom: name(l.bottom()),
            top: name(l.top()),
        }
    }

    pub fn into_lattice(self) -> Result<DistLattice> {
        let carrier = self.carrier.into_poset()?;
        let index = |table: &[Vec<String>]| -> Result<Vec<Vec<usize>>> {
            table
                .iter()
                .map(|row| row.iter().map(|id| carrier.index_of(id)).collect())
                .collect()
        };
        let meet = index(&self.meet)?;
        let join = index(&self.join)?;
        let lattice = DistLattice::new(carrier, meet, join)?;
        if lattice.carrier().id(lattice.bottom()) != self.bottom || lattice.carrier().id(lattice.top()) != self.top {
            return Err(Error::NotALattice("declared bounds do not match the order".into()));
        }
        Ok(lattice)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PredicateJson {
    pub args: Vec<String>,
    pub members: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OperationJson {
    pub args: Vec<String>,
    pub result: String,
    /// Keys are comma-separated argument tuples (empty for constants).
    pub map: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignatureJson {
    pub sorts: BTreeMap<String, PosetJson>,
    #[serde(default)]
    pub predicates: BTreeMap<String, PredicateJson>,
    #[serde(default)]
    pub operations: BTreeMap<String, OperationJson>,
    /// Constants are sugar for 0-ary operations.
    #[serde(default)]
    pub constants: BTreeMap<String, ConstantJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstantJson {
    pub sort: String,
    pub value: String,
}

impl SignatureJson {
    pub fn into_signature(self) -> Result<Signature> {
        let mut sig = Signature::new();
        for (name, poset) in self.sorts {
            sig.add_sort(name, poset.into_poset()?)?;
        }
        for (name, pred) in self.predicates {
            let args: Vec<&str> = pred.args.iter().map(String::as_str).collect();
            let tuples: Vec<Vec<&str>> = pred
                .members
                .iter()
                .map(|t| t.iter().map(String::as_str).collect())
                .collect();
            sig.add_predicate(name, &args, tuples.iter().map(|t| t.as_slice()))?;
        }
        for (name, op) in self.operations {
            let args: Vec<&str> = op.args.iter().map(String::as_str).collect();
            let mut rows: Vec<(Vec<&str>, &str)> = Vec::new();
            for (key, value) in &op.map {
                let tuple: Vec<&str> = if key.is_empty() {
                    vec![]
                } else {
                    key.split(',').map(str::trim).collect()
                };
                rows.push((tuple, value));
            }
            sig.add_operation(name, &args, &op.result, rows.iter().map(|(t, v)| (t.as_slice(), *v)))?;
        }
        for (name, c) in self.constants {
            sig.add_constant(name, &c.sort, &c.value)?;
        }
        Ok(sig)
    }
}

/// Renders the Hasse diagram of a poset: covering edges only, drawn
/// bottom-up.
pub fn to_dot(p: &FinPoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for e in p.elements() {
        out.push_str(&format!("  \"{e}\";\n"));
    }
    for (i, j) in p.covers() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", p.id(i), p.id(j)));
    }
    out.push_str("}\n");
    out
}

/// Parses a poset from its JSON text.
pub fn poset_from_json(text: &str) -> Result<FinPoset> {
    let dto: PosetJson = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("poset JSON: {e}")))?;
    dto.into_poset()
}

/// Parses a monotone map from its JSON text.
pub fn map_from_json(text: &str) -> Result<MonotoneMap> {
    let dto: MapJson = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("map JSON: {e}")))?;
    dto.into_map()
}

/// Parses a relation from its JSON text.
pub fn relation_from_json(text: &str) -> Result<Relation> {
    let dto: RelationJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("relation JSON: {e}")))?;
    dto.into_relation()
}

/// Parses a diagram (with optional separate weight) from JSON text.
pub fn diagram_from_json(text: &str) -> Result<FiniteDiagram> {
    let dto: DiagramJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("diagram JSON: {e}")))?;
    dto.into_diagram()
}

pub fn weight_from_json(text: &str, diagram: &FiniteDiagram) -> Result<Weight> {
    let dto: WeightJson = serde_json::from_str(text).map_err(|e| Error::Invalid(format!("weight JSON: {e}")))?;
    dto.into_weight(diagram)
}

pub fn signature_from_json(text: &str) -> Result<Signature> {
    let dto: SignatureJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("signature JSON: {e}")))?;
    dto.into_signature()
}

pub fn lattice_from_json(text: &str) -> Result<DistLattice> {
    let dto: LatticeJson =
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("lattice JSON: {e}")))?;
    dto.into_lattice()
}

/// A lattice as JSON text.
pub fn lattice_to_json(l: &DistLattice) -> String {
    serde_json::to_string_pretty(&LatticeJson::from_lattice(l)).expect("lattice serializes")
}

/// The `Up(P)` lattice of a poset, as JSON (used by the CLI).
pub fn upset_lattice_json(p: &FinPoset, caps: &Caps) -> Result<String> {
    let up = crate::duality::upset_dl(p, caps)?;
    Ok(lattice_to_json(&up.lattice))
}
