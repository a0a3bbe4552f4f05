//! Character cursor shared by the signature, term and table readers.

use crate::error::{Error, Result};

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '*' | '?' | '\'' | '.')
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
    column: usize,
    /// Whether `#` starts a comment running to end of line.
    hash_comments: bool,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str, hash_comments: bool) -> Self {
        Cursor {
            src,
            pos: 0,
            line: 1,
            column: 1,
            hash_comments,
        }
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::syntax(self.line, self.column, message)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.rest().chars().next()?;
        self.pos += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '#' && self.hash_comments {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    pub fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.rest().is_empty()
    }

    /// Next non-blank character without consuming it.
    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub fn peek_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        self.rest().starts_with(s)
    }

    pub fn eat(&mut self, s: &str) -> bool {
        if self.peek_str(s) {
            for _ in s.chars() {
                self.bump();
            }
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{s}`")))
        }
    }

    fn unexpected(&mut self, what: &str) -> Error {
        let found = self.found();
        self.error(format!("expected {what}{found}"))
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!(", found `{c}`"),
            None => ", found end of input".to_string(),
        }
    }

    pub fn peek_ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(_, c)| !is_ident_char(c))
            .map_or(rest.len(), |(i, _)| i);
        (len > 0).then(|| &rest[..len])
    }

    pub fn ident(&mut self) -> Result<&'a str> {
        match self.peek_ident() {
            Some(id) => {
                for _ in id.chars() {
                    self.bump();
                }
                Ok(id)
            }
            None => Err(self.unexpected("an identifier")),
        }
    }

    /// Consumes `keyword` only when it is a whole identifier.
    pub fn eat_keyword(&mut self, keyword: &str) -> bool {
        if self.peek_ident() == Some(keyword) {
            self.ident().expect("peeked");
            true
        } else {
            false
        }
    }

    pub fn expect_keyword(&mut self, keyword: &str) -> Result<()> {
        if self.eat_keyword(keyword) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{keyword}`")))
        }
    }

    pub fn nat(&mut self) -> Result<u64> {
        let (line, column) = (self.line, self.column);
        let id = self.ident()?;
        id.parse()
            .map_err(|_| Error::syntax(line, column, format!("expected a natural number, found `{id}`")))
    }

    pub fn line(&self) -> usize {
        self.line
    }
}
