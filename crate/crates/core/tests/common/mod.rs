//! Slow reference implementations used to check the library.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use knotproj::knots::SignedDiagram;
use knotproj::moves::{all_sites, apply};
use knotproj::{CrossingLabel, DoubleOccurrenceWord};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn w(s: &str) -> DoubleOccurrenceWord {
    s.parse().unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    /// The curve leaves the crossing at this position.
    Out(usize),
    /// The curve enters the crossing at this position.
    In(usize),
}

/// Faces traced over explicit per-crossing rotation lists.
pub struct Traced {
    /// Rotation at each crossing, indexed by label order.
    pub rotation: Vec<[End; 4]>,
    /// Face id of the corner between `rotation[v][k]` and `rotation[v][k+1]`.
    pub corner_face: Vec<[usize; 4]>,
    /// For each face: the ends it leaves through, in order.
    pub faces: Vec<Vec<End>>,
}

pub fn trace(word: &DoubleOccurrenceWord, bits: u64) -> Traced {
    let letters = word.letters();
    let len = letters.len();
    let labels: Vec<CrossingLabel> = word.labels();
    let mut positions: HashMap<CrossingLabel, Vec<usize>> = HashMap::new();
    for (i, l) in letters.iter().enumerate() {
        positions.entry(*l).or_default().push(i);
    }
    let mut rotation = Vec::new();
    let mut at: HashMap<End, (usize, usize)> = HashMap::new();
    for (v, l) in labels.iter().enumerate() {
        let (p, q) = (positions[l][0], positions[l][1]);
        // starting from the outgoing passage at p, counterclockwise
        let r = if bits >> v & 1 == 0 {
            [End::Out(p), End::Out(q), End::In(p), End::In(q)]
        } else {
            [End::Out(p), End::In(q), End::In(p), End::Out(q)]
        };
        for (k, e) in r.iter().enumerate() {
            at.insert(*e, (v, k));
        }
        rotation.push(r);
    }
    // walking out along an edge arrives at the far end
    let across = |e: End| match e {
        End::Out(i) => End::In((i + 1) % len),
        End::In(i) => End::Out((i + len - 1) % len),
    };
    let mut corner_face = vec![[usize::MAX; 4]; labels.len()];
    let mut faces = Vec::new();
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 0..labels.len() {
        for k in 0..4 {
            if used.contains(&(v, k)) {
                continue;
            }
            let id = faces.len();
            let mut face = Vec::new();
            let (mut cv, mut ck) = (v, k);
            while used.insert((cv, ck)) {
                let leave = rotation[cv][ck];
                face.push(leave);
                let arrive = across(leave);
                let (nv, nk) = at[&arrive];
                corner_face[nv][nk] = id;
                cv = nv;
                ck = (nk + 1) % 4;
            }
            faces.push(face);
        }
    }
    Traced {
        rotation,
        corner_face,
        faces,
    }
}

pub fn face_count_slow(word: &DoubleOccurrenceWord, bits: u64) -> usize {
    if word.is_empty() {
        2
    } else {
        trace(word, bits).faces.len()
    }
}

pub fn realizable_slow(word: &DoubleOccurrenceWord) -> bool {
    let n = word.crossing_count();
    (0..1u64 << n).any(|b| face_count_slow(word, b) == n + 2)
}

fn crosses(word: &DoubleOccurrenceWord, a: CrossingLabel, b: CrossingLabel) -> bool {
    let seq: Vec<CrossingLabel> = word
        .letters()
        .iter()
        .copied()
        .filter(|&l| l == a || l == b)
        .collect();
    seq[0] != seq[1] && seq[1] != seq[2]
}

/// Cross chord pairs by a double loop over labels.
pub fn cross_pairs_slow(word: &DoubleOccurrenceWord) -> usize {
    let ls = word.labels();
    let mut x = 0;
    for i in 0..ls.len() {
        for j in i + 1..ls.len() {
            if crosses(word, ls[i], ls[j]) {
                x += 1;
            }
        }
    }
    x
}

/// Smallest chord subset whose deletion leaves no crossing pair.
pub fn tr_slow(word: &DoubleOccurrenceWord) -> usize {
    let ls = word.labels();
    let n = ls.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| crosses(word, ls[i], ls[j]))
        .collect();
    (0u32..1 << n)
        .filter(|s| {
            pairs
                .iter()
                .all(|&(i, j)| s >> i & 1 == 1 || s >> j & 1 == 1)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// H by scanning every ordered triple of labels.
pub fn h_slow(word: &DoubleOccurrenceWord) -> u8 {
    let ls = word.labels();
    for &a in &ls {
        for &b in &ls {
            for &c in &ls {
                if a != b
                    && a != c
                    && b < c
                    && crosses(word, a, b)
                    && crosses(word, a, c)
                    && !crosses(word, b, c)
                {
                    return 1;
                }
            }
        }
    }
    0
}

/// Prime factors as the words restricted to connected components of the
/// crossing graph.
pub fn factors_by_components(word: &DoubleOccurrenceWord) -> Vec<DoubleOccurrenceWord> {
    let ls = word.labels();
    let mut comp: HashMap<CrossingLabel, usize> = HashMap::new();
    for (i, &l) in ls.iter().enumerate() {
        comp.insert(l, i);
    }
    loop {
        let mut changed = false;
        for &a in &ls {
            for &b in &ls {
                if a != b && crosses(word, a, b) && comp[&a] != comp[&b] {
                    let m = comp[&a].min(comp[&b]);
                    comp.insert(a, m);
                    comp.insert(b, m);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let ids: BTreeSet<usize> = comp.values().copied().collect();
    let mut out: Vec<DoubleOccurrenceWord> = ids
        .iter()
        .map(|&id| {
            let keep: Vec<u32> = word
                .letters()
                .iter()
                .filter(|l| comp[l] == id)
                .map(|l| l.0)
                .collect();
            DoubleOccurrenceWord::from_labels(keep)
                .unwrap()
                .canonicalize()
        })
        .collect();
    out.sort();
    out
}

/// Absolute determinant by fraction-free elimination.
pub fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    (sign * m[n - 1][n - 1]).abs()
}

/// Knot determinant from the Goeritz matrix of a checkerboard colouring.
pub fn goeritz_determinant(d: &SignedDiagram) -> u64 {
    let n = d.word.crossing_count();
    if n == 0 {
        return 1;
    }
    let t = trace(&d.word, d.embedding.bits);
    // colour faces so the two sides of every edge differ
    let len = d.word.len();
    let mut side: HashMap<End, usize> = HashMap::new();
    for (f, face) in t.faces.iter().enumerate() {
        for &e in face {
            side.insert(e, f);
        }
    }
    let mut colour = vec![None; t.faces.len()];
    colour[0] = Some(0u8);
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..len {
            // the edge from position i to i + 1 is left through Out(i) by one
            // face and through In(i + 1) by the other
            let a = side[&End::Out(i)];
            let b = side[&End::In((i + 1) % len)];
            match (colour[a], colour[b]) {
                (Some(x), None) => {
                    colour[b] = Some(1 - x);
                    changed = true;
                }
                (None, Some(y)) => {
                    colour[a] = Some(1 - y);
                    changed = true;
                }
                (Some(x), Some(y)) => assert_ne!(x, y, "not two-colourable"),
                _ => {}
            }
        }
    }
    let white: Vec<usize> = (0..t.faces.len())
        .filter(|&f| colour[f] == Some(0))
        .collect();
    let index: HashMap<usize, usize> = white.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut g = vec![vec![0i128; white.len()]; white.len()];
    for v in 0..n {
        // over strand occupies rotation slots {0, 2} if the first passage is over
        let over_slot = if d.over_first[v] { 0 } else { 1 };
        let a_corners = [over_slot, over_slot + 2];
        let a_white = colour[t.corner_face[v][a_corners[0]]] == Some(0);
        let eta: i128 = if a_white { 1 } else { -1 };
        let corners: Vec<usize> = if a_white {
            a_corners.to_vec()
        } else {
            vec![(over_slot + 1) % 4, (over_slot + 3) % 4]
        };
        let f = index[&t.corner_face[v][corners[0]]];
        let h = index[&t.corner_face[v][corners[1]]];
        if f != h {
            g[f][h] -= eta;
            g[h][f] -= eta;
            g[f][f] += eta;
            g[h][h] += eta;
        }
    }
    g.pop();
    for row in &mut g {
        row.pop();
    }
    bareiss(g) as u64
}

/// A realizable word reached from `start` by up to `steps` random moves,
/// never exceeding `cap` crossings.
pub fn random_walk<R: Rng>(
    start: &DoubleOccurrenceWord,
    steps: usize,
    cap: usize,
    rng: &mut R,
) -> DoubleOccurrenceWord {
    let mut cur = start.clone();
    for _ in 0..steps {
        let sites: Vec<_> = all_sites(&cur)
            .into_iter()
            .filter(|s| s.slot.is_none() || cur.crossing_count() < cap)
            .collect();
        if let Some(site) = sites.choose(rng) {
            cur = apply(&cur, site).unwrap();
        }
    }
    cur
}

/// Random symmetry image: rotation, optional reversal, shuffled labels.
pub fn scramble<R: Rng>(word: &DoubleOccurrenceWord, rng: &mut R) -> DoubleOccurrenceWord {
    let mut perm: Vec<u32> = (0..word.crossing_count() as u32 + 5).collect();
    perm.shuffle(rng);
    let labels = word.labels();
    let mut out = word.rotated(rng.gen_range(0..word.len().max(1)));
    if rng.gen_bool(0.5) {
        out = out.reversed();
    }
    out.relabeled(|l| CrossingLabel(perm[labels.binary_search(&l).unwrap()]))
}
