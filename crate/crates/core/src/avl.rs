//! Self-balancing search tree keyed by oracle string content.
//!
//! Nodes live in an arena and hold a [`StrRef`] key plus a generic payload:
//! an occurrence count makes it a multi-set, `()` a set, anything else a
//! map. All key comparisons go through the supplied [`Comparator`], so the
//! tree works identically with the exact and the probabilistic backends —
//! the structural AVL invariant holds regardless of comparison outcomes,
//! only the ordering of keys can be perturbed by comparison errors.

use alloc::vec::Vec;

use crate::compare::Comparator;
use crate::oracle::{StrRef, StringTable};
use crate::Result;

#[derive(Debug)]
struct Node<V> {
    key: StrRef,
    value: V,
    left: Option<usize>,
    right: Option<usize>,
    height: u32,
}

/// AVL tree over oracle strings. The stored key of a node is the first
/// index inserted for that string value; later equal strings route to the
/// same node.
#[derive(Debug, Default)]
pub struct StringAvlTree<V> {
    nodes: Vec<Node<V>>,
    root: Option<usize>,
    len: usize,
    free: Vec<usize>,
}

impl<V> StringAvlTree<V> {
    pub fn new() -> Self {
        StringAvlTree {
            nodes: Vec::new(),
            root: None,
            len: 0,
            free: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn key(&self, id: usize) -> StrRef {
        self.nodes[id].key
    }

    pub fn value(&self, id: usize) -> &V {
        &self.nodes[id].value
    }

    pub fn value_mut(&mut self, id: usize) -> &mut V {
        &mut self.nodes[id].value
    }

    /// Descends by comparator; `None` if no node is judged equal to the key.
    pub fn find(
        &self,
        table: &StringTable,
        cmp: &mut Comparator,
        key: StrRef,
    ) -> Result<Option<usize>> {
        let mut cursor = self.root;
        while let Some(id) = cursor {
            let node = &self.nodes[id];
            let outcome = cmp.compare(table, key, node.key)?;
            cursor = match outcome.sign {
                0 => return Ok(Some(id)),
                s if s < 0 => node.left,
                _ => node.right,
            };
        }
        Ok(None)
    }

    /// Inserts `key` with payload `default`, rebalancing as needed. If some
    /// node is judged equal on the way down, that node is returned instead
    /// and nothing is inserted. Returns `(node id, created)`.
    pub fn add(
        &mut self,
        table: &StringTable,
        cmp: &mut Comparator,
        key: StrRef,
        default: V,
    ) -> Result<(usize, bool)> {
        let (new_root, id, created) = self.insert_at(self.root, table, cmp, key, default)?;
        self.root = Some(new_root);
        if created {
            self.len += 1;
        }
        Ok((id, created))
    }

    /// Removes the node judged equal to `key`, if any.
    pub fn delete(
        &mut self,
        table: &StringTable,
        cmp: &mut Comparator,
        key: StrRef,
    ) -> Result<bool> {
        let (new_root, removed) = self.delete_at(self.root, table, cmp, key)?;
        self.root = new_root;
        if removed {
            self.len -= 1;
        }
        Ok(removed)
    }

    /// Keys in symmetric order (for referee checks).
    pub fn in_order_keys(&self) -> Vec<StrRef> {
        let mut out = Vec::with_capacity(self.len);
        let mut stack = Vec::new();
        let mut cursor = self.root;
        while cursor.is_some() || !stack.is_empty() {
            while let Some(id) = cursor {
                stack.push(id);
                cursor = self.nodes[id].left;
            }
            let id = stack.pop().unwrap();
            out.push(self.nodes[id].key);
            cursor = self.nodes[id].right;
        }
        out
    }

    /// Height of the whole tree (0 for empty).
    pub fn height(&self) -> u32 {
        self.height_of(self.root)
    }

    /// Verifies stored heights and the AVL balance condition everywhere.
    /// Referee helper; O(size).
    pub fn is_balanced(&self) -> bool {
        fn walk<V>(tree: &StringAvlTree<V>, node: Option<usize>) -> Option<u32> {
            let id = node?;
            let n = &tree.nodes[id];
            let lh = match n.left {
                Some(_) => walk(tree, n.left)?,
                None => 0,
            };
            let rh = match n.right {
                Some(_) => walk(tree, n.right)?,
                None => 0,
            };
            let expected = 1 + lh.max(rh);
            if n.height != expected || lh.abs_diff(rh) > 1 {
                return None;
            }
            Some(expected)
        }
        self.root.is_none() || walk(self, self.root).is_some()
    }

    fn alloc(&mut self, key: StrRef, value: V) -> usize {
        if let Some(id) = self.free.pop() {
            self.nodes[id] = Node {
                key,
                value,
                left: None,
                right: None,
                height: 1,
            };
            id
        } else {
            self.nodes.push(Node {
                key,
                value,
                left: None,
                right: None,
                height: 1,
            });
            self.nodes.len() - 1
        }
    }

    fn height_of(&self, node: Option<usize>) -> u32 {
        node.map_or(0, |id| self.nodes[id].height)
    }

    fn update_height(&mut self, id: usize) {
        let h = 1 + self
            .height_of(self.nodes[id].left)
            .max(self.height_of(self.nodes[id].right));
        self.nodes[id].height = h;
    }

    fn balance_factor(&self, id: usize) -> i32 {
        self.height_of(self.nodes[id].left) as i32 - self.height_of(self.nodes[id].right) as i32
    }

    fn rotate_right(&mut self, id: usize) -> usize {
        let pivot = self.nodes[id]
            .left
            .expect("rotate_right without left child");
        self.nodes[id].left = self.nodes[pivot].right;
        self.nodes[pivot].right = Some(id);
        self.update_height(id);
        self.update_height(pivot);
        pivot
    }

    fn rotate_left(&mut self, id: usize) -> usize {
        let pivot = self.nodes[id]
            .right
            .expect("rotate_left without right child");
        self.nodes[id].right = self.nodes[pivot].left;
        self.nodes[pivot].left = Some(id);
        self.update_height(id);
        self.update_height(pivot);
        pivot
    }

    fn rebalance(&mut self, id: usize) -> usize {
        self.update_height(id);
        let bf = self.balance_factor(id);
        if bf > 1 {
            let left = self.nodes[id].left.unwrap();
            if self.balance_factor(left) < 0 {
                let new_left = self.rotate_left(left);
                self.nodes[id].left = Some(new_left);
            }
            self.rotate_right(id)
        } else if bf < -1 {
            let right = self.nodes[id].right.unwrap();
            if self.balance_factor(right) > 0 {
                let new_right = self.rotate_right(right);
                self.nodes[id].right = Some(new_right);
            }
            self.rotate_left(id)
        } else {
            id
        }
    }

    #[allow(clippy::type_complexity)]
    fn insert_at(
        &mut self,
        node: Option<usize>,
        table: &StringTable,
        cmp: &mut Comparator,
        key: StrRef,
        default: V,
    ) -> Result<(usize, usize, bool)> {
        let Some(id) = node else {
            let fresh = self.alloc(key, default);
            return Ok((fresh, fresh, true));
        };
        let outcome = cmp.compare(table, key, self.nodes[id].key)?;
        match outcome.sign {
            0 => Ok((id, id, false)),
            s if s < 0 => {
                let (new_left, found, created) =
                    self.insert_at(self.nodes[id].left, table, cmp, key, default)?;
                self.nodes[id].left = Some(new_left);
                let new_root = if created { self.rebalance(id) } else { id };
                Ok((new_root, found, created))
            }
            _ => {
                let (new_right, found, created) =
                    self.insert_at(self.nodes[id].right, table, cmp, key, default)?;
                self.nodes[id].right = Some(new_right);
                let new_root = if created { self.rebalance(id) } else { id };
                Ok((new_root, found, created))
            }
        }
    }

    /// Detaches the minimum node of the subtree; returns (new subtree root,
    /// detached id). Structural only — no comparisons.
    fn detach_min(&mut self, id: usize) -> (Option<usize>, usize) {
        match self.nodes[id].left {
            Some(left) => {
                let (new_left, min_id) = self.detach_min(left);
                self.nodes[id].left = new_left;
                (Some(self.rebalance(id)), min_id)
            }
            None => (self.nodes[id].right, id),
        }
    }

    #[allow(clippy::type_complexity)]
    fn delete_at(
        &mut self,
        node: Option<usize>,
        table: &StringTable,
        cmp: &mut Comparator,
        key: StrRef,
    ) -> Result<(Option<usize>, bool)> {
        let Some(id) = node else {
            return Ok((None, false));
        };
        let outcome = cmp.compare(table, key, self.nodes[id].key)?;
        match outcome.sign {
            s if s < 0 => {
                let (new_left, removed) = self.delete_at(self.nodes[id].left, table, cmp, key)?;
                self.nodes[id].left = new_left;
                let root = if removed { self.rebalance(id) } else { id };
                Ok((Some(root), removed))
            }
            s if s > 0 => {
                let (new_right, removed) = self.delete_at(self.nodes[id].right, table, cmp, key)?;
                self.nodes[id].right = new_right;
                let root = if removed { self.rebalance(id) } else { id };
                Ok((Some(root), removed))
            }
            _ => {
                let replacement = match (self.nodes[id].left, self.nodes[id].right) {
                    (None, child) | (child, None) => child,
                    (Some(_), Some(right)) => {
                        // Replace with in-order successor, detached by shape
                        // alone so deletion costs no extra comparisons.
                        let (new_right, succ) = self.detach_min(right);
                        self.nodes[succ].left = self.nodes[id].left;
                        self.nodes[succ].right = new_right;
                        Some(self.rebalance(succ))
                    }
                };
                self.free.push(id);
                Ok((replacement, true))
            }
        }
    }
}
