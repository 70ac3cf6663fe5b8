//! Seifert matrix of the braided surface of a closed braid: one disk per
//! strand and one half-twisted band per letter.
//!
//! `H_1` has one loop per pair of consecutive bands at the same level. Each
//! loop runs up one band and down the next. Linking numbers between a loop
//! and the push-off of another come from four local pictures:
//!
//! * a loop with itself: `-1` if both bands are positive, `+1` if both are
//!   negative, `0` when mixed;
//! * two loops sharing a band at the same level: a single `±1` on one side,
//!   signed by the shared band;
//! * loops at adjacent levels whose spans interleave: a single `±1`;
//! * anything else: `0`.

use crate::braid::BraidWord;

use super::linalg::IntMatrix;

/// A pair of entries `(V[a][b], V[b][a])`.
type Pair = (i64, i64);

#[derive(Debug, Clone, Copy)]
struct Rules {
    /// Loops at one level sharing a positive band, earlier loop first.
    shared_positive: Pair,
    shared_negative: Pair,
    /// Lower loop `x`, upper loop `y` with `x.start < y.start < x.end < y.end`.
    lower_first: Pair,
    /// Lower loop `x`, upper loop `y` with `y.start < x.start < y.end < x.end`.
    upper_first: Pair,
}

const RULES: Rules = Rules {
    shared_positive: (1, 0),
    shared_negative: (0, -1),
    lower_first: (1, 0),
    upper_first: (-1, 0),
};

#[derive(Debug, Clone, Copy)]
struct Loop {
    level: usize,
    start: usize,
    end: usize,
    start_positive: bool,
    end_positive: bool,
}

/// Unused levels leave the surface disconnected; each adds a zero row and
/// column, the tube that joins the pieces.
pub(crate) fn braid_seifert_entries(b: &BraidWord) -> IntMatrix {
    let rules = &RULES;
    let letters = b.letters();
    let mut loops = Vec::new();
    let mut unused = 0;
    for level in 1..b.strands() {
        let bands: Vec<usize> = (0..letters.len())
            .filter(|&p| letters[p].unsigned_abs() as usize == level)
            .collect();
        if bands.is_empty() {
            unused += 1;
        }
        for w in bands.windows(2) {
            loops.push(Loop {
                level,
                start: w[0],
                end: w[1],
                start_positive: letters[w[0]] > 0,
                end_positive: letters[w[1]] > 0,
            });
        }
    }
    let m = loops.len();
    let mut v = vec![vec![0i64; m + unused]; m + unused];
    for a in 0..m {
        let x = loops[a];
        v[a][a] = match (x.start_positive, x.end_positive) {
            (true, true) => -1,
            (false, false) => 1,
            _ => 0,
        };
        for c in 0..m {
            let y = loops[c];
            let pair = if y.level == x.level && y.start == x.end {
                Some(if x.end_positive {
                    rules.shared_positive
                } else {
                    rules.shared_negative
                })
            } else if y.level == x.level + 1 {
                if x.start < y.start && y.start < x.end && x.end < y.end {
                    Some(rules.lower_first)
                } else if y.start < x.start && x.start < y.end && y.end < x.end {
                    Some(rules.upper_first)
                } else {
                    None
                }
            } else {
                None
            };
            if let Some((ab, ba)) = pair {
                v[a][c] = ab;
                v[c][a] = ba;
            }
        }
    }
    v
}
