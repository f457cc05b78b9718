//! Letter trie over entry surfaces, one per category tag.
//!
//! The trie serves two callers: exact lookup of a surface string, and the
//! segmenter's guided walk, which descends one character at a time and asks
//! each node for the entries that end there.

use std::collections::HashMap;

/// Index of a node inside the arena; the root is always 0.
pub type NodeId = u32;

#[derive(Debug, Default, Clone, PartialEq, Eq)]
struct TrieNode {
    children: HashMap<char, NodeId>,
    /// Entry ids whose surface ends at this node, in insertion (file) order.
    entries: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceTrie {
    nodes: Vec<TrieNode>,
}

impl Default for SurfaceTrie {
    fn default() -> Self {
        SurfaceTrie {
            nodes: vec![TrieNode::default()],
        }
    }
}

impl SurfaceTrie {
    pub const ROOT: NodeId = 0;

    pub fn insert(&mut self, surface: &str, entry_id: usize) {
        let mut node = Self::ROOT;
        for c in surface.chars() {
            node = match self.nodes[node as usize].children.get(&c) {
                Some(&next) => next,
                None => {
                    let next = self.nodes.len() as NodeId;
                    self.nodes.push(TrieNode::default());
                    self.nodes[node as usize].children.insert(c, next);
                    next
                }
            };
        }
        self.nodes[node as usize].entries.push(entry_id);
    }

    /// Follows one edge; `None` when no surface continues with `c` here.
    pub fn descend(&self, node: NodeId, c: char) -> Option<NodeId> {
        self.nodes[node as usize].children.get(&c).copied()
    }

    /// Entries whose surface ends exactly at `node`, in file order.
    pub fn entries_at(&self, node: NodeId) -> &[usize] {
        &self.nodes[node as usize].entries
    }

    /// Exact-match lookup of a whole surface string.
    pub fn entries_for(&self, surface: &str) -> &[usize] {
        let mut node = Self::ROOT;
        for c in surface.chars() {
            match self.descend(node, c) {
                Some(next) => node = next,
                None => return &[],
            }
        }
        self.entries_at(node)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_lookup() {
        let mut t = SurfaceTrie::default();
        t.insert("sal", 0);
        t.insert("salg", 1);
        t.insert("sal", 2);
        t.insert("", 3);

        assert_eq!(t.entries_for("sal"), &[0, 2]);
        assert_eq!(t.entries_for("salg"), &[1]);
        assert_eq!(t.entries_for(""), &[3]);
        assert_eq!(t.entries_for("s"), &[] as &[usize]);
        assert_eq!(t.entries_for("salga"), &[] as &[usize]);
    }

    #[test]
    fn multibyte_chars_are_single_edges() {
        let mut t = SurfaceTrie::default();
        t.insert("bambú", 7);
        let mut node = SurfaceTrie::ROOT;
        for c in "bambú".chars() {
            node = t.descend(node, c).expect("edge present");
        }
        assert_eq!(t.entries_at(node), &[7]);
        assert_eq!(t.entries_for("bamb"), &[] as &[usize]);
    }
}
