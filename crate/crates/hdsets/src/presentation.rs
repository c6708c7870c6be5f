//! Group presentations and words in generators.
//!
//! The textual syntax is the one used in tables of small-group presentations:
//!
//! ```text
//! <a,b,c: a^3=b^3=c^4=[a,b]=[a,c]=[b,c]=1>
//! ```
//!
//! Generator names are single lowercase letters. A relation `w1 = w2` is
//! stored as the relator `w1·w2⁻¹`; a chain `u = v = ... = 1` containing the
//! identity contributes one relator per equated word. `[u,v]` is the
//! commutator `u⁻¹v⁻¹uv`, `^` takes integer exponents (`a^-1` and `a^{-1}`
//! both work; braces are stripped by the lexer), `*` between factors is
//! optional and whitespace is insignificant. `:` and `|` both separate the
//! generator list from the relations.

use std::fmt;

use thiserror::Error;

/// Largest exponent magnitude the parser accepts. Keeps word normalization
/// safely inside `i64` no matter how factors combine.
const MAX_EXPONENT: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

/// A word in the generators, kept in normalized form: no zero exponents and
/// no two adjacent factors with the same generator. The empty word is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word {
    factors: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(usize, i64)] {
        &self.factors
    }

    /// Appends `gen^exp`, merging with the trailing factor if it uses the
    /// same generator and dropping factors that cancel to exponent zero.
    pub fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.factors.last_mut() {
            if last.0 == gen {
                last.1 += exp;
                if last.1 == 0 {
                    self.factors.pop();
                }
                return;
            }
        }
        self.factors.push((gen, exp));
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in factors {
            w.push(g, e);
        }
        w
    }

    /// Concatenation `self · other` (normalized).
    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.factors {
            w.push(g, e);
        }
        w
    }

    /// The inverse word: factors reversed with exponents negated.
    pub fn inverse(&self) -> Word {
        Word {
            factors: self
                .factors
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    /// Signed letters of the word: `(gen, +1)` or `(gen, -1)`, one per unit
    /// of exponent.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i8)> + '_ {
        self.factors.iter().flat_map(|&(g, e)| {
            let sign: i8 = if e > 0 { 1 } else { -1 };
            std::iter::repeat_n((g, sign), e.unsigned_abs() as usize)
        })
    }

    /// Renders the word against a generator alphabet, e.g. `a^2*c*a^-1`.
    pub fn render(&self, names: &[char]) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|&(g, e)| {
                let name = names[g];
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{}^{}", name, e)
                }
            })
            .collect();
        parts.join("*")
    }
}

/// A finite presentation: an ordered generator alphabet and a list of
/// relator words (each equal to the identity in the presented group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn generator_index(&self, name: char) -> Option<usize> {
        self.generators.iter().position(|&c| c == name)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|c| c.to_string()).collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| w.render(&self.generators))
            .collect();
        write!(f, "<{}: {}>", gens.join(","), rels.join(", "))
    }
}

struct Lexer<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    /// Skips whitespace and exponent braces; `a^{-1}` lexes like `a^-1`.
    fn skip_trivia(&mut self) {
        while self.pos < self.input.len() {
            match self.input[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' | b'{' | b'}' => self.pos += 1,
                _ => break,
            }
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_trivia();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(got) if got == c => {
                self.pos += 1;
                Ok(())
            }
            Some(got) => Err(ParseError::new(
                self.pos,
                format!("expected '{}', found '{}'", c as char, got as char),
            )),
            None => Err(ParseError::new(
                self.pos,
                format!("expected '{}', found end of input", c as char),
            )),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.pos += 1;
        }
        let digits_start = self.pos;
        let mut value: i64 = 0;
        while let Some(c) = self.input.get(self.pos).copied() {
            if c.is_ascii_digit() {
                value = value * 10 + i64::from(c - b'0');
                if value > MAX_EXPONENT {
                    return Err(ParseError::new(start, "exponent too large"));
                }
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == digits_start {
            return Err(ParseError::new(self.pos, "expected an integer"));
        }
        Ok(if neg { -value } else { value })
    }
}

struct WordParser<'a> {
    lexer: Lexer<'a>,
    generators: &'a [char],
}

impl<'a> WordParser<'a> {
    /// word := '1' | factor (('*')? factor)*
    fn word(&mut self) -> Result<Word, ParseError> {
        if self.lexer.peek() == Some(b'1') {
            self.lexer.bump();
            return Ok(Word::identity());
        }
        let mut w = self.factor()?;
        loop {
            match self.lexer.peek() {
                Some(b'*') => {
                    self.lexer.bump();
                    let f = self.factor()?;
                    w = w.concat(&f);
                }
                Some(c) if c.is_ascii_lowercase() || c == b'[' => {
                    let f = self.factor()?;
                    w = w.concat(&f);
                }
                _ => break,
            }
        }
        Ok(w)
    }

    /// factor := name ('^' integer)? | '[' word ',' word ']'
    fn factor(&mut self) -> Result<Word, ParseError> {
        match self.lexer.peek() {
            Some(b'[') => {
                self.lexer.bump();
                let u = self.word()?;
                self.lexer.expect(b',')?;
                let v = self.word()?;
                self.lexer.expect(b']')?;
                // [u,v] = u⁻¹v⁻¹uv
                let mut w = u.inverse();
                w = w.concat(&v.inverse());
                w = w.concat(&u);
                w = w.concat(&v);
                Ok(w)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let pos = self.lexer.pos;
                self.lexer.bump();
                let gen = self
                    .generators
                    .iter()
                    .position(|&g| g == c as char)
                    .ok_or_else(|| {
                        ParseError::new(pos, format!("undeclared generator '{}'", c as char))
                    })?;
                let exp = if self.lexer.peek() == Some(b'^') {
                    self.lexer.bump();
                    self.lexer.integer()?
                } else {
                    1
                };
                Ok(Word::from_factors([(gen, exp)]))
            }
            Some(c) => Err(ParseError::new(
                self.lexer.pos,
                format!("expected a factor, found '{}'", c as char),
            )),
            None => Err(ParseError::new(
                self.lexer.pos,
                "expected a factor, found end of input",
            )),
        }
    }
}

/// Parses a standalone word such as `a^2*c*a^-1*c^-1` against a declared
/// generator alphabet. The whole input must be consumed.
pub fn parse_word(text: &str, generators: &[char]) -> Result<Word, ParseError> {
    let mut p = WordParser {
        lexer: Lexer::new(text),
        generators,
    };
    let w = p.word()?;
    if let Some(c) = p.lexer.peek() {
        return Err(ParseError::new(
            p.lexer.pos,
            format!("unexpected '{}' after word", c as char),
        ));
    }
    Ok(w)
}

/// Parses a presentation `<names : relations>`.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut lexer = Lexer::new(text);
    lexer.expect(b'<')?;

    let mut generators: Vec<char> = Vec::new();
    loop {
        match lexer.peek() {
            Some(c) if c.is_ascii_lowercase() => {
                lexer.bump();
                if generators.contains(&(c as char)) {
                    return Err(ParseError::new(
                        lexer.pos - 1,
                        format!("duplicate generator '{}'", c as char),
                    ));
                }
                generators.push(c as char);
            }
            Some(c) => {
                return Err(ParseError::new(
                    lexer.pos,
                    format!("expected a generator name, found '{}'", c as char),
                ))
            }
            None => {
                return Err(ParseError::new(lexer.pos, "unterminated generator list"));
            }
        }
        match lexer.peek() {
            Some(b',') => {
                lexer.bump();
            }
            Some(b':') | Some(b'|') => {
                lexer.bump();
                break;
            }
            Some(c) => {
                return Err(ParseError::new(
                    lexer.pos,
                    format!("expected ',' or ':' in generator list, found '{}'", c as char),
                ))
            }
            None => {
                return Err(ParseError::new(lexer.pos, "unterminated generator list"));
            }
        }
    }

    let mut relators: Vec<Word> = Vec::new();
    loop {
        let mut parser = WordParser {
            lexer,
            generators: &generators,
        };
        // relation := word ('=' word)*
        let mut chain = vec![parser.word()?];
        while parser.lexer.peek() == Some(b'=') {
            parser.lexer.bump();
            chain.push(parser.word()?);
        }
        lexer = parser.lexer;
        expand_relation_chain(&chain, &mut relators);
        match lexer.peek() {
            Some(b',') => {
                lexer.bump();
            }
            Some(b'>') => {
                lexer.bump();
                break;
            }
            Some(c) => {
                return Err(ParseError::new(
                    lexer.pos,
                    format!("expected ',' or '>' after relation, found '{}'", c as char),
                ))
            }
            None => return Err(ParseError::new(lexer.pos, "unterminated presentation")),
        }
    }
    if let Some(c) = lexer.peek() {
        return Err(ParseError::new(
            lexer.pos,
            format!("unexpected '{}' after presentation", c as char),
        ));
    }
    Ok(Presentation {
        generators,
        relators,
    })
}

/// `w1 = w2` becomes the relator `w1·w2⁻¹`; a chain containing the identity
/// word contributes every non-identity word of the chain as a relator; a
/// bare word is already a relator.
fn expand_relation_chain(chain: &[Word], out: &mut Vec<Word>) {
    if chain.len() == 1 {
        if !chain[0].is_identity() {
            out.push(chain[0].clone());
        }
        return;
    }
    if chain.iter().any(Word::is_identity) {
        for w in chain {
            if !w.is_identity() {
                out.push(w.clone());
            }
        }
        return;
    }
    for pair in chain.windows(2) {
        out.push(pair[0].concat(&pair[1].inverse()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gens3() -> Vec<char> {
        vec!['a', 'b', 'c']
    }

    #[test]
    fn abelian_header_parses_to_six_relators() {
        let p = parse_presentation("<a,b,c: a^3=b^3=c^4=[a,b]=[a,c]=[b,c]=1>").unwrap();
        assert_eq!(p.generators, vec!['a', 'b', 'c']);
        assert_eq!(p.relators.len(), 6);
        assert_eq!(p.relators[0], Word::from_factors([(0, 3)]));
        // [a,b] = a⁻¹b⁻¹ab
        assert_eq!(
            p.relators[3],
            Word::from_factors([(0, -1), (1, -1), (0, 1), (1, 1)])
        );
    }

    #[test]
    fn cyclic_group_of_order_three() {
        let p = parse_presentation("<a: a^3=1>").unwrap();
        assert_eq!(p.generators, vec!['a']);
        assert_eq!(p.relators, vec![Word::from_factors([(0, 3)])]);
    }

    #[test]
    fn four_generator_header_with_pair_relations() {
        let p = parse_presentation(
            "<a,b,c,d: a^3=b^3=c^2=d^2=[a,b]=[c,d]=[b,c]=[b,d]=1, da=ac, cda=ad>",
        )
        .unwrap();
        assert_eq!(p.generators.len(), 4);
        assert_eq!(p.relators.len(), 10);
        // da = ac  →  d·a·c⁻¹·a⁻¹
        let expected = Word::from_factors([(3, 1), (0, 1), (2, -1), (0, -1)]);
        assert!(p.relators.contains(&expected));
    }

    #[test]
    fn word_with_carets_and_stars() {
        let w = parse_word("a^2*c*a^-1*c^-1", &gens3()).unwrap();
        assert_eq!(
            w,
            Word::from_factors([(0, 2), (2, 1), (0, -1), (2, -1)])
        );
        // juxtaposition and braces are equivalent spellings
        assert_eq!(w, parse_word("a^{2}ca^{-1}c^{-1}", &gens3()).unwrap());
    }

    #[test]
    fn commutator_expansion() {
        let w = parse_word("[a,b]", &gens3()).unwrap();
        assert_eq!(
            w,
            Word::from_factors([(0, -1), (1, -1), (0, 1), (1, 1)])
        );
    }

    #[test]
    fn identity_word() {
        assert!(parse_word("1", &gens3()).unwrap().is_identity());
    }

    #[test]
    fn adjacent_factors_merge_and_cancel() {
        let w = parse_word("a*a^2", &gens3()).unwrap();
        assert_eq!(w, Word::from_factors([(0, 3)]));
        let w = parse_word("a*a^-1", &gens3()).unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn undeclared_generator_is_positioned() {
        let err = parse_word("a*z", &gens3()).unwrap_err();
        assert_eq!(err.pos, 2);
        assert!(err.message.contains("undeclared"));
        let err = parse_presentation("<a,b: a^3=d>").unwrap_err();
        assert!(err.message.contains("undeclared generator 'd'"));
    }

    #[test]
    fn empty_generator_list_is_an_error() {
        assert!(parse_presentation("<: a>").is_err());
        assert!(parse_presentation("<>").is_err());
    }

    #[test]
    fn pipe_separator_and_whitespace() {
        let p1 = parse_presentation("<a,b | a^3 = b^3 = [a,b] = 1>").unwrap();
        let p2 = parse_presentation("<a,b:a^3=b^3=[a,b]=1>").unwrap();
        assert_eq!(p1, p2);
    }

    #[test]
    fn relation_and_relator_forms_agree() {
        // bare-word relators vs chained-equations form of the same group
        let p1 = parse_presentation("<a,b: a^3, b^3, [a,b]>").unwrap();
        let p2 = parse_presentation("<a,b: a^3=b^3=[a,b]=1>").unwrap();
        assert_eq!(p1.relators, p2.relators);
    }

    #[test]
    fn chain_without_identity_expands_pairwise() {
        let p = parse_presentation("<a,b: a^3=b^3>").unwrap();
        assert_eq!(p.relators, vec![Word::from_factors([(0, 3), (1, -3)])]);
    }

    #[test]
    fn huge_exponent_is_rejected_not_overflowed() {
        assert!(parse_word("a^99999999999999999999", &gens3()).is_err());
        assert!(parse_word("a^2000000", &gens3()).is_err());
    }

    #[test]
    fn trailing_garbage_is_rejected() {
        assert!(parse_word("a b )", &gens3()).is_err());
        assert!(parse_presentation("<a: a^2> junk").is_err());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        // random factor lists, normalized through from_factors
        prop::collection::vec((0usize..4, -5i64..6), 0..12)
            .prop_map(Word::from_factors)
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(w in arb_word()) {
            let names = ['a', 'b', 'c', 'd'];
            let rendered = w.render(&names);
            let parsed = parse_word(&rendered, &names).unwrap();
            prop_assert_eq!(parsed, w);
        }

        #[test]
        fn inverse_is_involutive(w in arb_word()) {
            prop_assert_eq!(w.inverse().inverse(), w.clone());
            let mut cancel = w.clone();
            cancel = cancel.concat(&w.inverse());
            prop_assert!(cancel.is_identity());
        }

        #[test]
        fn parser_is_total_on_arbitrary_input(s in "\\PC*") {
            // must never panic; errors are fine
            let _ = parse_presentation(&s);
            let _ = parse_word(&s, &['a', 'b', 'c', 'd']);
        }
    }
}
