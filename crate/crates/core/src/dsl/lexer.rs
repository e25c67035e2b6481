use super::DslError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Nat(u64),
    /// Capitalised name: `Z` or a fixture.
    Name(String),
    /// Lowercase word: hom constructors.
    Word(String),
    Times,
    Slash,
    LParen,
    RParen,
    Comma,
    Semi,
    Arrow,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("number {n}"),
            Tok::Name(s) | Tok::Word(s) => format!("`{s}`"),
            Tok::Times => "`x`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// A lowercase `x` not followed by another lowercase letter is the product
/// sign, so `Z/4xZ/9` and `Z/4 x Z/9` lex alike; `×` is accepted too.
pub(crate) fn lex(text: &str) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let push = |out: &mut Vec<Token>, tok| {
            out.push(Token {
                tok,
                line: start_line,
                column: start_col,
            })
        };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let digits: String = chars[i..j].iter().collect();
            let n = digits.parse::<u64>().map_err(|_| DslError::Syntax {
                line,
                column: col,
                message: format!("number {digits} does not fit in 64 bits"),
            })?;
            push(&mut out, Tok::Nat(n));
            col += j - i;
            i = j;
            continue;
        }
        if c == 'x' && !chars.get(i + 1).is_some_and(|d| d.is_ascii_lowercase()) {
            push(&mut out, Tok::Times);
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut j = i;
            while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                j += 1;
            }
            let word: String = chars[i..j].iter().collect();
            if c.is_ascii_uppercase() {
                push(&mut out, Tok::Name(word));
            } else {
                push(&mut out, Tok::Word(word));
            }
            col += j - i;
            i = j;
            continue;
        }
        let tok = match c {
            '×' => Tok::Times,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '-' if chars.get(i + 1) == Some(&'>') => {
                push(&mut out, Tok::Arrow);
                i += 2;
                col += 2;
                continue;
            }
            _ => {
                return Err(DslError::Syntax {
                    line,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        push(&mut out, tok);
        i += 1;
        col += 1;
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}
