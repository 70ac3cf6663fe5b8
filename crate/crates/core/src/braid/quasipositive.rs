use std::fmt;
use std::str::FromStr;

use super::word::{check_letters, inverse_letters, parse_letters, parse_strands, BraidWord};
use crate::algebra::text::Cursor;
use crate::error::{Error, Result};

/// One factor `w σ_i w^-1` of a quasipositive factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Band {
    pub conjugator: Vec<i32>,
    pub generator: usize,
}

impl Band {
    pub fn plain(generator: usize) -> Self {
        Self {
            conjugator: Vec::new(),
            generator,
        }
    }

    /// The strongly quasipositive band joining strands `i < j`:
    /// `(σ_i ⋯ σ_{j-2}) σ_{j-1} (σ_i ⋯ σ_{j-2})^-1`.
    pub fn connecting(strands: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j || j > strands {
            return Err(Error::InvalidArgument(format!(
                "band generator needs 1 <= i < j <= n, got i = {i}, j = {j}, n = {strands}"
            )));
        }
        Ok(Self {
            conjugator: (i as i32..j as i32 - 1).collect(),
            generator: j - 1,
        })
    }

    fn letters(&self) -> impl Iterator<Item = i32> + '_ {
        self.conjugator
            .iter()
            .copied()
            .chain(std::iter::once(self.generator as i32))
            .chain(inverse_letters(&self.conjugator))
    }
}

/// A braid given as a product of conjugates of positive generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasipositiveWord {
    strands: usize,
    bands: Vec<Band>,
}

impl QuasipositiveWord {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid("a braid needs at least one strand".into()));
        }
        for band in &bands {
            check_letters(strands, &band.conjugator)?;
            check_letters(strands, &[band.generator as i32])?;
        }
        Ok(Self { strands, bands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn band_count(&self) -> usize {
        self.bands.len()
    }

    /// The product of the bands, freely reduced.
    pub fn expand(&self) -> BraidWord {
        let letters = self.bands.iter().flat_map(Band::letters).collect();
        BraidWord::from_parts_unchecked(self.strands, letters).free_reduce()
    }
}

impl fmt::Display for QuasipositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QP{}:", self.strands)?;
        for band in &self.bands {
            f.write_str(" (")?;
            for g in &band.conjugator {
                write!(f, "{g} ")?;
            }
            if band.conjugator.is_empty() {
                f.write_str(" ")?;
            }
            write!(f, "| {})", band.generator)?;
        }
        Ok(())
    }
}

impl FromStr for QuasipositiveWord {
    type Err = Error;

    /// Grammar: `QP<n>: (w | i) (w | i) ...`.
    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        cur.expect('Q')?;
        cur.expect('P')?;
        let strands = parse_strands(&mut cur)?;
        cur.expect(':')?;
        let mut bands = Vec::new();
        while cur.eat('(') {
            let conjugator = parse_letters(&mut cur)?;
            cur.expect('|')?;
            let pos = cur.position();
            let i = cur.int()?;
            let generator = usize::try_from(i).ok().filter(|&i| i >= 1).ok_or(Error::Parse {
                message: "band generator index must be positive".into(),
                position: pos,
            })?;
            cur.expect(')')?;
            bands.push(Band {
                conjugator,
                generator,
            });
        }
        cur.expect_end()?;
        Self::new(strands, bands)
    }
}
