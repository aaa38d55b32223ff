use super::{Link, Node, NodeIdx};
use crate::error::{Error, Result};

/// Checks acyclicity, the unique root, and reachability. Returns the root.
pub(super) fn check_structure(
    nodes: &[Node],
    up: &[Vec<Link>],
    down: &[Vec<Link>],
) -> Result<NodeIdx> {
    if let Some(cycle) = find_cycle(up) {
        return Err(Error::Cycle(
            cycle.into_iter().map(|n| nodes[n].id.clone()).collect(),
        ));
    }

    let roots: Vec<usize> = (0..nodes.len()).filter(|&i| up[i].is_empty()).collect();
    let root = match roots.as_slice() {
        [] => return Err(Error::NoRoot),
        [root] => *root,
        many => {
            return Err(Error::MultipleRoots(
                many.iter().map(|&i| nodes[i].id.clone()).collect(),
            ))
        }
    };

    // Implied by acyclicity plus a unique sink, but checked explicitly.
    let mut reached = vec![false; nodes.len()];
    reached[root] = true;
    let mut stack = vec![root];
    while let Some(n) = stack.pop() {
        for link in &down[n] {
            let c = link.node.index();
            if !reached[c] {
                reached[c] = true;
                stack.push(c);
            }
        }
    }
    if let Some(i) = reached.iter().position(|r| !r) {
        return Err(Error::Unreachable(nodes[i].id.clone()));
    }

    Ok(NodeIdx::from_usize(root))
}

/// Iterative three-color DFS along child->parent links. Returns the node
/// sequence of the first cycle found, closed (first == last).
fn find_cycle(up: &[Vec<Link>]) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color = vec![Color::White; up.len()];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for start in 0..up.len() {
        if color[start] != Color::White {
            continue;
        }
        color[start] = Color::Gray;
        stack.push((start, 0));
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if let Some(link) = up[node].get(*next) {
                *next += 1;
                let p = link.node.index();
                match color[p] {
                    Color::White => {
                        color[p] = Color::Gray;
                        stack.push((p, 0));
                    }
                    Color::Gray => {
                        let from = stack.iter().position(|&(n, _)| n == p).unwrap();
                        let mut cycle: Vec<usize> = stack[from..].iter().map(|&(n, _)| n).collect();
                        cycle.push(p);
                        return Some(cycle);
                    }
                    Color::Black => {}
                }
            } else {
                color[node] = Color::Black;
                stack.pop();
            }
        }
    }
    None
}
