//! Exact minimum vertex cover by branch and bound on bitmask graphs.

/// Adjacency as one `u128` row per vertex (at most 128 vertices).
pub(crate) type Rows = [u128];

fn degree(adj: &Rows, alive: u128, v: usize) -> u32 {
    (adj[v] & alive).count_ones()
}

fn vertices(mut set: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Size of a greedy maximal matching: a lower bound on any cover.
fn matching_bound(adj: &Rows, alive: u128) -> usize {
    let mut free = alive;
    let mut size = 0;
    for v in vertices(alive) {
        if free >> v & 1 == 0 {
            continue;
        }
        let nb = adj[v] & free;
        if nb != 0 {
            let u = nb.trailing_zeros();
            free &= !(1u128 << v) & !(1u128 << u);
            size += 1;
        }
    }
    size
}

/// Repeatedly take a maximum-degree vertex.
fn greedy_cover(adj: &Rows, mut alive: u128) -> u128 {
    let mut cover = 0u128;
    loop {
        let best = vertices(alive).max_by_key(|&v| degree(adj, alive, v));
        match best {
            Some(v) if degree(adj, alive, v) > 0 => {
                cover |= 1 << v;
                alive &= !(1u128 << v);
            }
            _ => return cover,
        }
    }
}

struct Search<'a> {
    adj: &'a Rows,
    best: u128,
    best_size: usize,
}

impl Search<'_> {
    fn run(&mut self, mut alive: u128, mut chosen: u128) {
        // Pendant vertices: taking the neighbour is never worse.
        loop {
            let mut changed = false;
            for v in vertices(alive) {
                if alive >> v & 1 == 0 {
                    continue;
                }
                match degree(self.adj, alive, v) {
                    0 => {
                        alive &= !(1u128 << v);
                        changed = true;
                    }
                    1 => {
                        let u = (self.adj[v] & alive).trailing_zeros() as usize;
                        chosen |= 1 << u;
                        alive &= !(1u128 << u) & !(1u128 << v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        let size = chosen.count_ones() as usize;
        if alive == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if size + matching_bound(self.adj, alive) >= self.best_size {
            return;
        }
        let v = vertices(alive)
            .max_by_key(|&v| degree(self.adj, alive, v))
            .unwrap();
        let nb = self.adj[v] & alive;
        // Either v is in the cover, or all of its neighbours are.
        self.run(alive & !(1u128 << v), chosen | 1 << v);
        self.run(alive & !nb & !(1u128 << v), chosen | nb);
    }
}

/// A minimum vertex cover of the graph on `adj.len()` vertices.
pub(crate) fn min_vertex_cover(adj: &Rows) -> u128 {
    assert!(adj.len() <= 128, "vertex cover limited to 128 vertices");
    let all = if adj.len() == 128 {
        u128::MAX
    } else {
        (1u128 << adj.len()) - 1
    };
    let greedy = greedy_cover(adj, all);
    let mut search = Search {
        adj,
        best: greedy,
        best_size: greedy.count_ones() as usize,
    };
    search.run(all, 0);
    search.best
}
