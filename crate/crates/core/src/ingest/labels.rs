use std::collections::HashMap;

use crate::graph::NodeId;

/// Bijection between external string labels and dense NodeIds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelTable {
    labels: Vec<String>,
    ids: HashMap<String, NodeId>,
}

impl LabelTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Labels `0..n` by their decimal index.
    pub fn numeric(n: usize) -> Self {
        let mut table = Self::new();
        for i in 0..n {
            table.intern(&i.to_string());
        }
        table
    }

    /// Returns the id for `label`, assigning the next free one if unseen.
    pub fn intern(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.ids.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.ids.insert(label.to_string(), id);
        id
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.ids.get(label).copied()
    }

    pub fn label(&self, id: NodeId) -> Option<&str> {
        self.labels.get(id).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Labels in NodeId order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}
