use super::lang::{is_mention, is_url};
use super::{tag_language, LangConfig, Token};

/// Characters that belong to words: letters, digits and combining marks.
/// Everything else counts as punctuation for token splitting.
pub fn is_word_char(c: char) -> bool {
    let cp = c as u32;
    c.is_alphanumeric()
        || matches!(cp, 0x0300..=0x036F)
        // Indic blocks, minus the danda marks which act as full stops
        || (matches!(cp, 0x0900..=0x0DFF) && cp != 0x0964 && cp != 0x0965)
}

fn is_placeholder(word: &str) -> bool {
    word.len() > 2
        && word.starts_with('<')
        && word.ends_with('>')
        && !word[1..word.len() - 1].contains(['<', '>'])
}

/// Split raw text into token surfaces.
///
/// Text is split on whitespace, then leading and trailing runs of
/// punctuation are split into their own tokens. URLs, `@mentions` and
/// `<placeholder>` words such as the mask are kept whole (a mention still
/// sheds trailing punctuation).
pub fn tokenize(raw: &str) -> Vec<String> {
    let mut out = Vec::new();
    for word in raw.split_whitespace() {
        if is_url(word) || is_placeholder(word) {
            out.push(word.to_string());
            continue;
        }
        let chars: Vec<(usize, char)> = word.char_indices().collect();
        let first_word = chars.iter().position(|(_, c)| is_word_char(*c));
        let Some(first) = first_word else {
            out.push(word.to_string());
            continue;
        };
        let last = chars.iter().rposition(|(_, c)| is_word_char(*c)).unwrap_or(first);
        let mut start = chars[first].0;
        let end = chars[last].0 + chars[last].1.len_utf8();

        // keep the '@' of a mention attached
        if start > 0 && word[..start].ends_with('@') && is_mention(&word[start - 1..end]) {
            start -= 1;
        }
        if start > 0 {
            out.push(word[..start].to_string());
        }
        out.push(word[start..end].to_string());
        if end < word.len() {
            out.push(word[end..].to_string());
        }
    }
    out
}

/// Tokenize and tag each surface with [`tag_language`].
pub fn tokenize_tagged(raw: &str, config: &LangConfig) -> Vec<Token> {
    tokenize(raw)
        .into_iter()
        .map(|surface| {
            // surfaces are non-empty by construction
            let lang = tag_language(&surface, config).expect("non-empty surface");
            Token {
                surface,
                lang,
                pos: None,
            }
        })
        .collect()
}
