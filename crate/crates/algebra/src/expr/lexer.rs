use super::ast::Span;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Real(f64),
    Imag(f64),
    Ident(String),
    Unit,
    Adj,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Eof,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct LexError {
    pub at: usize,
    pub message: String,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>, LexError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = src[i..].chars().next().expect("in bounds");
        let start = i;
        if ch.is_whitespace() {
            i += ch.len_utf8();
            continue;
        }
        let simple = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            i += 1;
            out.push(Token { tok, span: Span::new(start, i) });
            continue;
        }
        if ch.is_ascii_digit() {
            i = scan_real(bytes, i);
            let text = &src[start..i];
            let value: f64 = text.parse().map_err(|_| LexError {
                at: start,
                message: format!("malformed number '{text}'"),
            })?;
            if !value.is_finite() {
                return Err(LexError {
                    at: start,
                    message: format!("number '{text}' is out of range"),
                });
            }
            let tok = if i < bytes.len() && bytes[i] == b'i' && !continues_ident(bytes, i + 1) {
                i += 1;
                Tok::Imag(value)
            } else {
                Tok::Real(value)
            };
            out.push(Token { tok, span: Span::new(start, i) });
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == '_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let tok = match &src[start..i] {
                "I" => Tok::Unit,
                "i" => Tok::Imag(1.0),
                "adj" => Tok::Adj,
                name => Tok::Ident(name.to_string()),
            };
            out.push(Token { tok, span: Span::new(start, i) });
            continue;
        }
        return Err(LexError {
            at: start,
            message: format!("unknown token '{ch}'"),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span::new(src.len(), src.len()),
    });
    Ok(out)
}

fn continues_ident(bytes: &[u8], i: usize) -> bool {
    i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
}

fn scan_digits(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}

fn scan_real(bytes: &[u8], i: usize) -> usize {
    let mut i = scan_digits(bytes, i);
    if i < bytes.len() && bytes[i] == b'.' {
        i = scan_digits(bytes, i + 1);
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        let mut j = i + 1;
        if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
            j += 1;
        }
        if j < bytes.len() && bytes[j].is_ascii_digit() {
            i = scan_digits(bytes, j);
        }
    }
    i
}
