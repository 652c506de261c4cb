//! Isomorphism-invariant encoding of trees (AHU), rooted at the center.

use crate::tree::{Tree, Vertex};

/// Two trees are isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_form(tree: &Tree) -> CanonicalForm {
    let centers = &tree.center_info().centers;
    let mut out = Vec::with_capacity(2 * tree.n() + 2);
    if let [w, w2] = centers[..] {
        let mut a = encode(tree, w, Some(w2));
        let mut b = encode(tree, w2, Some(w));
        if b < a {
            std::mem::swap(&mut a, &mut b);
        }
        out.push(b'[');
        out.append(&mut a);
        out.append(&mut b);
        out.push(b']');
    } else {
        out = encode(tree, centers[0], None);
    }
    CanonicalForm(out)
}

fn encode(tree: &Tree, root: Vertex, parent: Option<Vertex>) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = tree
        .neighbors(root)
        .iter()
        .filter(|&&c| Some(c) != parent)
        .map(|&c| encode(tree, c, Some(root)))
        .collect();
    children.sort_unstable();
    let mut out = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::validate_tree;

    #[test]
    fn relabeled_trees_match() {
        let a = validate_tree(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = validate_tree(5, &[(4, 3), (3, 0), (3, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn star_and_path_differ() {
        let star = validate_tree(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let path = validate_tree(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_ne!(canonical_form(&star), canonical_form(&path));
        assert_eq!(canonical_form(&path).as_bytes(), b"[(())(())]");
    }
}
