//! Random closed walks on the flag graph.

use std::collections::VecDeque;

use mapforge_core::{FlagSystem, FlagWord};
use rand::Rng;

/// A random walk of `steps` letters from a random flag, closed up by a
/// shortest path back to the start. Returns the start flag and the word.
pub fn closed_word<R: Rng + ?Sized>(m: &FlagSystem, rng: &mut R, steps: usize) -> (usize, FlagWord) {
    let start = rng.gen_range(0..m.flag_count());
    let mut letters = Vec::with_capacity(2 * steps);
    let mut f = start;
    for _ in 0..steps {
        let j = rng.gen_range(0..=m.rank());
        letters.push(j);
        f = m.r(j, f);
    }
    letters.extend(shortest_path(m, f, start));
    (start, FlagWord::new(letters))
}

/// Letters leading from `from` to `to` along a BFS tree.
fn shortest_path(m: &FlagSystem, from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![None; m.flag_count()];
    let mut seen = vec![false; m.flag_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        if f == to {
            break;
        }
        for j in 0..=m.rank() {
            let g = m.r(j, f);
            if !seen[g] {
                seen[g] = true;
                parent[g] = Some((f, j));
                queue.push_back(g);
            }
        }
    }
    let mut path = Vec::new();
    let mut f = to;
    while let Some((p, j)) = parent[f] {
        path.push(j);
        f = p;
    }
    path.reverse();
    path
}
