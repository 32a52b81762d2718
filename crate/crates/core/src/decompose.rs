//! Connected sums and prime decomposition of Gauss codes.
//!
//! A cyclic word is a connected sum when it factors as `u·v` with `u` and
//! `v` nonempty and sharing no label.

use crate::word::{CrossingLabel, DoubleOccurrenceWord};

/// Shortest proper cyclic segment containing both occurrences of each of
/// its letters, as `(start, len)`.
fn closed_segment(word: &DoubleOccurrenceWord) -> Option<(usize, usize)> {
    let len = word.len();
    let chords = word.chords();
    let mut best: Option<(usize, usize)> = None;
    for start in 0..len {
        // Grow from `start`, tracking how many chords are still open.
        let mut open = vec![false; chords.len()];
        let mut open_count = 0usize;
        for seg_len in 1..len - 1 {
            if best.is_some_and(|(_, l)| seg_len >= l) {
                break;
            }
            let c = chords.chord_at[(start + seg_len - 1) % len];
            open[c] = !open[c];
            if open[c] {
                open_count += 1;
            } else {
                open_count -= 1;
            }
            if open_count == 0 {
                best = Some((start, seg_len));
                break;
            }
        }
    }
    best
}

/// Prime factors of a word in canonical form, sorted. The empty word has no
/// factors.
pub fn prime_decompose(word: &DoubleOccurrenceWord) -> Vec<DoubleOccurrenceWord> {
    let mut factors = Vec::new();
    let mut rest = word.clone();
    while !rest.is_empty() {
        match closed_segment(&rest) {
            Some((start, seg_len)) => {
                let rotated = rest.rotated(start);
                let (seg, remainder) = rotated.letters().split_at(seg_len);
                factors.push(DoubleOccurrenceWord::from_raw(seg.to_vec()).canonicalize());
                rest = DoubleOccurrenceWord::from_raw(remainder.to_vec());
            }
            None => {
                factors.push(rest.canonicalize());
                break;
            }
        }
    }
    factors.sort();
    factors
}

/// True when the word is nonempty and admits no label-disjoint split.
pub fn is_prime(word: &DoubleOccurrenceWord) -> bool {
    !word.is_empty() && closed_segment(word).is_none()
}

/// Splice `v` into `u`: `v` is cut open before its letter `slot_v` and
/// inserted before letter `slot_u` of `u`. Labels of `v` are renamed to the
/// smallest labels unused by `u`. Slots are taken modulo the word lengths.
pub fn connected_sum(
    u: &DoubleOccurrenceWord,
    v: &DoubleOccurrenceWord,
    slot_u: usize,
    slot_v: usize,
) -> DoubleOccurrenceWord {
    if v.is_empty() {
        return u.clone();
    }
    let used = u.labels();
    let mut fresh = Vec::with_capacity(v.crossing_count());
    let mut candidate = 0u32;
    while fresh.len() < v.crossing_count() {
        if used.binary_search(&CrossingLabel(candidate)).is_err() {
            fresh.push(CrossingLabel(candidate));
        }
        candidate += 1;
    }
    let v_labels = v.labels();
    let v = v.relabeled(|l| fresh[v_labels.binary_search(&l).unwrap()]);
    let v = v.rotated(slot_v);

    let slot = if u.is_empty() { 0 } else { slot_u % u.len() };
    let mut letters = u.letters()[..slot].to_vec();
    letters.extend_from_slice(v.letters());
    letters.extend_from_slice(&u.letters()[slot..]);
    DoubleOccurrenceWord::from_raw(letters)
}
