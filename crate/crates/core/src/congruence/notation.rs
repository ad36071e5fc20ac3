//! Parser for the residue-list notation used to write periodic products,
//! e.g. `odd; 2,4,5,6,8 mod 10` or `all, odd; 1,4,6,8,10,13 mod 14`.
//!
//! ```text
//! spec    := [globals ";"] [["r" "≡"] classes] "mod" INT [plus]
//! globals := global ("," global)*
//! global  := "all" | "odd" | "r" | "r" "odd"
//! classes := INT ("," INT)*             repetition = multiplicity
//! plus    := "[" entry ("," entry)* "]"
//! entry   := "(" "+" INT ("," INT)* "mod" INT ")" ["^" ["-"] INT]
//! ```
//!
//! The `mod` clause may be omitted when globals or plus entries are present,
//! in which case the modulus is 1.

use super::{PeriodicProduct, PlusFactor};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Word(String),
    Comma,
    Semi,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Plus,
    Minus,
    Caret,
    Equiv,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let simple = match c {
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '^' => Some(Tok::Caret),
            '≡' => Some(Tok::Equiv),
            _ => None,
        };
        if let Some(tok) = simple {
            chars.next();
            out.push((pos, tok));
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            let value = text[pos..end].parse::<u64>().map_err(|_| err(pos, "integer out of range"))?;
            out.push((pos, Tok::Int(value)));
        } else if c.is_alphabetic() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !d.is_alphabetic() {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            out.push((pos, Tok::Word(text[pos..end].to_ascii_lowercase())));
        } else {
            return Err(err(pos, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.at + offset).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn is_word(&self, offset: usize, word: &str) -> bool {
        matches!(self.peek_at(offset), Some(Tok::Word(w)) if w == word)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        let pos = self.pos();
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(err(pos, format!("expected {what}")))
        }
    }

    fn int(&mut self, what: &str) -> Result<(usize, u64)> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok((pos, v)),
            _ => Err(err(pos, format!("expected {what}"))),
        }
    }

    fn int_list(&mut self) -> Result<Vec<(usize, u64)>> {
        let mut items = vec![self.int("integer")?];
        while self.peek() == Some(&Tok::Comma) && matches!(self.peek_at(1), Some(Tok::Int(_))) {
            self.at += 1;
            items.push(self.int("integer")?);
        }
        Ok(items)
    }

    fn modulus(&mut self) -> Result<u64> {
        let pos = self.pos();
        if !self.is_word(0, "mod") {
            return Err(err(pos, "expected `mod`"));
        }
        self.at += 1;
        let (pos, m) = self.int("modulus")?;
        if m == 0 {
            return Err(err(pos, "modulus must be positive"));
        }
        Ok(m)
    }

    fn has_top_level_semicolon(&self) -> bool {
        let mut depth = 0i32;
        for (_, t) in &self.toks[self.at..] {
            match t {
                Tok::LBracket | Tok::LParen => depth += 1,
                Tok::RBracket | Tok::RParen => depth -= 1,
                Tok::Semi if depth == 0 => return true,
                _ => {}
            }
        }
        false
    }

    /// Returns (number of "all", number of "odd").
    fn globals(&mut self) -> Result<(i64, i64)> {
        let (mut all, mut odd) = (0, 0);
        loop {
            let pos = self.pos();
            if self.is_word(0, "all") {
                self.at += 1;
                all += 1;
            } else if self.is_word(0, "odd") {
                self.at += 1;
                odd += 1;
            } else if self.is_word(0, "r") {
                self.at += 1;
                if self.is_word(0, "odd") {
                    self.at += 1;
                    odd += 1;
                } else {
                    all += 1;
                }
            } else {
                return Err(err(pos, "expected `all`, `odd`, `r` or `r odd`"));
            }
            if !self.eat(&Tok::Comma) {
                break;
            }
        }
        self.expect(Tok::Semi, "`;` after globals")?;
        Ok((all, odd))
    }

    fn plus_entry(&mut self) -> Result<Vec<PlusFactor>> {
        self.expect(Tok::LParen, "`(`")?;
        self.expect(Tok::Plus, "`+`")?;
        let residues = self.int_list()?;
        let modulus = self.modulus()?;
        self.expect(Tok::RParen, "`)`")?;
        let mut exponent = 1i64;
        if self.eat(&Tok::Caret) {
            let negative = self.eat(&Tok::Minus);
            let (pos, e) = self.int("exponent")?;
            let e = i64::try_from(e).map_err(|_| err(pos, "exponent out of range"))?;
            exponent = if negative { -e } else { e };
        }
        residues
            .into_iter()
            .map(|(pos, r)| {
                if r >= modulus {
                    return Err(err(pos, format!("residue {r} is not below modulus {modulus}")));
                }
                PlusFactor::new(r, modulus, exponent)
            })
            .collect()
    }
}

/// Parses the residue notation into a [`PeriodicProduct`]; each listed
/// class and global token contributes exponent −1.
pub fn parse_residue_spec(text: &str) -> Result<PeriodicProduct> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };

    let (all, odd) = if p.has_top_level_semicolon() { p.globals()? } else { (0, 0) };

    if p.is_word(0, "r") && p.peek_at(1) == Some(&Tok::Equiv) {
        p.at += 2;
    }
    let classes = if matches!(p.peek(), Some(Tok::Int(_))) { p.int_list()? } else { Vec::new() };
    let modulus = if p.is_word(0, "mod") {
        p.modulus()?
    } else if classes.is_empty() && (all != 0 || odd != 0 || p.peek() == Some(&Tok::LBracket)) {
        1
    } else {
        return Err(err(p.pos(), "expected `mod`"));
    };

    let mut product = PeriodicProduct::new(modulus)?;
    product.add_global_all(-all);
    product.add_global_odd(-odd);
    for (pos, r) in classes {
        if r >= modulus {
            return Err(err(pos, format!("residue {r} is not below modulus {modulus}")));
        }
        product.add_to_class(r as i64, -1);
    }

    if p.eat(&Tok::LBracket) {
        loop {
            for f in p.plus_entry()? {
                product.push_plus_factor(f);
            }
            if !p.eat(&Tok::Comma) {
                break;
            }
        }
        p.expect(Tok::RBracket, "`]`")?;
    }

    if p.peek().is_some() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(product)
}
