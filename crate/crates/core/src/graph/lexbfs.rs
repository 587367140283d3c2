use super::{Graph, Vertex};

/// Lex-BFS visit order by array-based partition refinement, O(n + m).
///
/// Classes are contiguous slices of `arr`; after visiting `arr[i]` the
/// first class always starts at `i + 1`, so the next vertex is `arr[i + 1]`.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut arr: Vec<Vertex> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    let mut class_of = vec![0usize; n];
    let mut start = vec![0usize];
    let mut moved = vec![0usize];
    let mut end = vec![n];
    let mut touched = Vec::new();
    for i in 0..n {
        let v = arr[i];
        let c = class_of[v];
        start[c] += 1;
        for &w in g.neighbors(v) {
            if pos[w] <= i {
                continue;
            }
            let c = class_of[w];
            if moved[c] == 0 {
                touched.push(c);
            }
            let target = start[c] + moved[c];
            let other = arr[target];
            arr.swap(pos[w], target);
            pos[other] = pos[w];
            pos[w] = target;
            moved[c] += 1;
        }
        for c in touched.drain(..) {
            let k = moved[c];
            moved[c] = 0;
            if start[c] + k == end[c] {
                continue;
            }
            let nc = start.len();
            start.push(start[c]);
            end.push(start[c] + k);
            moved.push(0);
            for p in start[c]..start[c] + k {
                class_of[arr[p]] = nc;
            }
            start[c] += k;
        }
    }
    arr
}

/// Checks that each vertex's later neighbours form a clique, O(n + m).
pub fn is_peo(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    // For every vertex, its later neighbours minus the earliest one (its
    // parent) must be adjacent to the parent.
    let mut need: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &v in order {
        let parent = g
            .neighbors(v)
            .iter()
            .filter(|&&w| pos[w] > pos[v])
            .min_by_key(|&&w| pos[w]);
        if let Some(&p) = parent {
            for &w in g.neighbors(v) {
                if pos[w] > pos[v] && w != p {
                    need[p].push(w);
                }
            }
        }
    }
    let mut mark = vec![usize::MAX; n];
    for p in 0..n {
        if need[p].is_empty() {
            continue;
        }
        for &w in g.neighbors(p) {
            mark[w] = p;
        }
        if need[p].iter().any(|&w| mark[w] != p) {
            return false;
        }
    }
    true
}

/// A perfect elimination ordering if the graph is chordal.
pub fn chordal_peo(g: &Graph) -> Option<Vec<Vertex>> {
    let mut order = lex_bfs(g);
    order.reverse();
    is_peo(g, &order).then_some(order)
}
