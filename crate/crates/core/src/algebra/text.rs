//! Small whitespace-insensitive scanner shared by the text grammars.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            message: msg.into(),
            position: self.pos,
        }
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    /// Matches `pat` character by character, allowing whitespace between them.
    pub fn eat_str(&mut self, pat: &str) -> bool {
        let save = self.pos;
        for c in pat.chars() {
            if !self.eat(c) {
                self.pos = save;
                return false;
            }
        }
        true
    }

    pub fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub fn starts_int(&mut self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => true,
            Some('-') | Some('+') => self.src[self.pos + 1..]
                .trim_start()
                .starts_with(|c: char| c.is_ascii_digit()),
            _ => false,
        }
    }

    /// Optionally signed decimal integer.
    pub fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut negative = false;
        if self.eat('-') {
            negative = true;
        } else {
            self.eat('+');
        }
        self.skip_ws();
        let digits_start = self.pos;
        while let Some(c) = self.peek_raw() {
            if !c.is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if self.pos == digits_start {
            self.pos = start;
            return Err(self.error("expected integer"));
        }
        let value: i64 = self.src[digits_start..self.pos].parse().map_err(|_| Error::Parse {
            message: "integer out of range".into(),
            position: digits_start,
        })?;
        Ok(if negative { -value } else { value })
    }
}

pub(crate) fn exponent(value: i64, cur: &Cursor<'_>) -> Result<i32> {
    i32::try_from(value).map_err(|_| cur.error("exponent out of range"))
}
