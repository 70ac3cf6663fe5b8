use std::fmt;
use std::str::FromStr;

use super::perm::{ClosureInfo, Permutation};
use crate::algebra::text::Cursor;
use crate::error::{Error, Result};

/// Sign of a Markov stabilization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn apply(self, i: i32) -> i32 {
        match self {
            Sign::Positive => i,
            Sign::Negative => -i,
        }
    }
}

/// A word in the braid generators on `strands` strands.
///
/// Letter `+i` is `σ_i` and `-i` is `σ_i^-1`, with `1 <= i < strands`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

pub(crate) fn check_letters(strands: usize, letters: &[i32]) -> Result<()> {
    for &g in letters {
        if g == 0 || g.unsigned_abs() as usize >= strands {
            return Err(Error::InvalidBraid(format!(
                "letter {g} is not a generator on {strands} strands"
            )));
        }
    }
    Ok(())
}

pub(crate) fn inverse_letters(letters: &[i32]) -> impl Iterator<Item = i32> + '_ {
    letters.iter().rev().map(|g| -g)
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        check_letters(strands, &letters)?;
        Ok(Self { strands, letters })
    }

    /// The trivial braid on `strands` strands; its closure is the unlink.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(check_letters(strands, &letters).is_ok());
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Algebraic length: positive letters minus negative letters.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|g| g.signum() as i64).sum()
    }

    /// The underlying permutation, composing the transpositions in word order.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &g in &self.letters {
            p.swap_positions(g.unsigned_abs() as usize - 1);
        }
        p
    }

    pub fn closure(&self) -> ClosureInfo {
        ClosureInfo::from_permutation(&self.permutation())
    }

    pub fn components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Every letter negated; the closure is the mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|g| -g).collect(),
        }
    }

    /// Deletes adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&-g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// Free reduction followed by cancelling inverse letters across the ends
    /// of the word. The closure is unchanged.
    pub fn cyclic_reduce(&self) -> Self {
        let reduced = self.free_reduce().letters;
        let (mut lo, mut hi) = (0, reduced.len());
        while hi - lo >= 2 && reduced[lo] == -reduced[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        Self {
            strands: self.strands,
            letters: reduced[lo..hi].to_vec(),
        }
    }

    /// Appends `σ_n^{±1}` on `n + 1` strands.
    pub fn stabilize(&self, sign: Sign) -> Self {
        let mut letters = self.letters.clone();
        letters.push(sign.apply(self.strands as i32));
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Removes the unique occurrence of the top generator `σ_{n-1}^{±1}` and
    /// drops to `n - 1` strands.
    pub fn destabilize(&self) -> Result<Self> {
        let top = self.strands as i32 - 1;
        if top < 1 {
            return Err(Error::NotApplicable("a one-strand braid has no top generator".into()));
        }
        let hits: Vec<usize> = (0..self.letters.len())
            .filter(|&k| self.letters[k].abs() == top)
            .collect();
        if hits.len() != 1 {
            return Err(Error::NotApplicable(format!(
                "generator {top} occurs {} times, expected exactly once",
                hits.len()
            )));
        }
        let mut letters = self.letters.clone();
        letters.remove(hits[0]);
        Ok(Self {
            strands: self.strands - 1,
            letters,
        })
    }

    /// `w · self · w^-1`, without reduction.
    pub fn conjugate(&self, w: &[i32]) -> Result<Self> {
        check_letters(self.strands, w)?;
        let letters = w
            .iter()
            .copied()
            .chain(self.letters.iter().copied())
            .chain(inverse_letters(w))
            .collect();
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Side-by-side juxtaposition; the closure is the split union.
    pub fn split_union(&self, other: &Self) -> Self {
        let shift = self.strands as i32;
        let letters = self
            .letters
            .iter()
            .copied()
            .chain(other.letters.iter().map(|&g| g + g.signum() * shift))
            .collect();
        Self {
            strands: self.strands + other.strands,
            letters,
        }
    }

    /// `(σ_1 ⋯ σ_{p-1})^q` on `p` strands, letters negated for `q < 0`.
    pub fn torus(p: usize, q: i32) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidArgument(format!(
                "torus braid needs at least 2 strands, got {p}"
            )));
        }
        let sign = q.signum();
        let letters = (0..q.unsigned_abs())
            .flat_map(|_| (1..p as i32).map(move |i| sign * i))
            .collect();
        Ok(Self { strands: p, letters })
    }

    /// `(smoothed, switched)` at `position`: the letter deleted, and the
    /// letter with its sign flipped.
    pub fn skein_children(&self, position: usize) -> Result<(Self, Self)> {
        if position >= self.letters.len() {
            return Err(Error::InvalidArgument(format!(
                "position {position} out of range for a word of length {}",
                self.letters.len()
            )));
        }
        let mut smoothed = self.letters.clone();
        smoothed.remove(position);
        let mut switched = self.letters.clone();
        switched[position] = -switched[position];
        Ok((
            Self {
                strands: self.strands,
                letters: smoothed,
            },
            Self {
                strands: self.strands,
                letters: switched,
            },
        ))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for g in &self.letters {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn parse_letters(cur: &mut Cursor<'_>) -> Result<Vec<i32>> {
    let mut letters = Vec::new();
    while cur.starts_int() {
        let pos = cur.position();
        let g = cur.int()?;
        let g = i32::try_from(g).map_err(|_| Error::Parse {
            message: "letter out of range".into(),
            position: pos,
        })?;
        if g == 0 {
            return Err(Error::Parse {
                message: "braid letters must be nonzero".into(),
                position: pos,
            });
        }
        letters.push(g);
    }
    Ok(letters)
}

pub(crate) fn parse_strands(cur: &mut Cursor<'_>) -> Result<usize> {
    let pos = cur.position();
    let n = cur.int()?;
    usize::try_from(n)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or(Error::Parse {
            message: "strand count must be at least 1".into(),
            position: pos,
        })
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Grammar: `B<n>: g1 g2 ... gk`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect('B')?;
        let strands = parse_strands(&mut cur)?;
        cur.expect(':')?;
        let letters = parse_letters(&mut cur)?;
        cur.expect_end()?;
        Self::new(strands, letters)
    }
}
