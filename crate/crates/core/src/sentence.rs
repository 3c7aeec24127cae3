//! Colors, words, sentences and weak sentences.
//!
//! Colors are stored as their rank in the ambient [`Alphabet`], so the derived
//! orders on words agree with the alphabet order. Rendering needs the alphabet.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub type Color = u8;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Letters in the order given define the total order on colors.
    pub fn new(letters: &str) -> Result<Self> {
        let symbols: Vec<char> = letters.chars().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet(letters.into(), "must be non-empty"));
        }
        for (i, c) in symbols.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::InvalidAlphabet(letters.into(), "letters must be lowercase ASCII"));
            }
            if symbols[..i].contains(c) {
                return Err(Error::InvalidAlphabet(letters.into(), "duplicate letter"));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        0..self.symbols.len() as Color
    }

    pub fn symbol(&self, c: Color) -> char {
        self.symbols[c as usize]
    }

    pub fn rank(&self, ch: char) -> Result<Color> {
        self.symbols
            .iter()
            .position(|&s| s == ch)
            .map(|p| p as Color)
            .ok_or_else(|| Error::UnknownLetter { letter: ch, alphabet: self.as_string() })
    }

    pub fn as_string(&self) -> String {
        self.symbols.iter().collect()
    }

    pub fn word(&self, text: &str) -> Result<Word> {
        text.chars().map(|c| self.rank(c)).collect::<Result<Vec<_>>>().map(Word)
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.0.iter().map(|&c| self.symbol(c)).collect()
    }

    pub fn render(&self, s: &Sentence) -> String {
        if s.is_empty() {
            return "()".into();
        }
        let parts: Vec<String> = s.words().iter().map(|w| self.render_word(w)).collect();
        parts.join(",")
    }

    pub fn render_weak(&self, s: &WeakSentence) -> String {
        if s.words.is_empty() {
            return "()".into();
        }
        let parts: Vec<String> = s
            .words
            .iter()
            .map(|w| if w.is_empty() { "-".to_string() } else { self.render_word(w) })
            .collect();
        parts.join(",")
    }

    pub fn sentence(&self, text: &str) -> Result<Sentence> {
        let weak = self.weak_sentence(text)?;
        if weak.words.iter().any(Word::is_empty) {
            return Err(Error::EmptyWord);
        }
        Ok(Sentence { words: weak.words })
    }

    /// Parses "ab,cb", "-,a,-,bc" or "()".
    pub fn weak_sentence(&self, text: &str) -> Result<WeakSentence> {
        let t = text.trim();
        if t == "()" {
            return Ok(WeakSentence::default());
        }
        let t = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        if t.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty sentence text (use \"()\")".into() });
        }
        let mut words = Vec::new();
        let mut offset = 0;
        for part in t.split(',') {
            if part == "-" {
                words.push(Word::default());
            } else if part.is_empty() {
                return Err(Error::Parse { pos: offset, msg: "empty word (use \"-\" in weak sentences)".into() });
            } else {
                for (i, ch) in part.chars().enumerate() {
                    if !ch.is_ascii_lowercase() {
                        return Err(Error::Parse { pos: offset + i, msg: format!("unexpected character {ch:?}") });
                    }
                }
                words.push(self.word(part)?);
            }
            offset += part.len() + 1;
        }
        Ok(WeakSentence { words })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Color>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition(pub Vec<usize>);

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Composition {
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reverse-lexicographic comparison: larger part first at the first difference.
    pub fn revlex_cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }

    /// All compositions of `n` in canonical order.
    pub fn all(n: usize) -> Vec<Composition> {
        let mut out: Vec<Composition> = Sentence::all_of_size(n, 1).iter().map(Sentence::word_lengths).collect();
        out.sort();
        out
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.revlex_cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A sequence of non-empty words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sentence {
    words: Vec<Word>,
}

/// A sequence of possibly empty words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakSentence {
    pub words: Vec<Word>,
}

impl Sentence {
    pub fn new(words: Vec<Word>) -> Result<Self> {
        if words.iter().any(Word::is_empty) {
            return Err(Error::EmptyWord);
        }
        Ok(Sentence { words })
    }

    /// Drops empty words.
    pub fn from_words(words: impl IntoIterator<Item = Word>) -> Self {
        Sentence { words: words.into_iter().filter(|w| !w.is_empty()).collect() }
    }

    pub fn empty() -> Self {
        Sentence::default()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn size(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    pub fn max_word(&self) -> Word {
        Word(self.words.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    pub fn word_lengths(&self) -> Composition {
        Composition(self.words.iter().map(Word::len).collect())
    }

    /// Split positions in {1, ..., |I|-1}: p is a split if a word ends after letter p.
    pub fn split_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for w in &self.words[..self.len().saturating_sub(1)] {
            acc += w.len();
            out.push(acc);
        }
        out
    }

    pub fn from_splits(word: &Word, splits: &[usize]) -> Self {
        let mut words = Vec::with_capacity(splits.len() + 1);
        let mut start = 0;
        for &s in splits {
            words.push(Word(word.0[start..s].to_vec()));
            start = s;
        }
        if start < word.len() || !word.is_empty() {
            words.push(Word(word.0[start..].to_vec()));
        }
        Sentence::from_words(words)
    }

    /// Same maximal word, split at a subset of positions given by a bitmask over 1..n-1.
    fn from_mask(word: &Word, mask: u64) -> Self {
        let n = word.len();
        let splits: Vec<usize> = (1..n).filter(|p| mask >> (p - 1) & 1 == 1).collect();
        Sentence::from_splits(word, &splits)
    }

    fn split_mask(&self) -> u64 {
        self.split_set().iter().fold(0u64, |m, p| m | 1 << (p - 1))
    }

    pub fn to_weak(&self) -> WeakSentence {
        WeakSentence { words: self.words.clone() }
    }

    /// `self ⪯ coarse`: same maximal word and every split of `coarse` is a split of `self`.
    pub fn is_refinement_of(&self, coarse: &Sentence) -> bool {
        if self.max_word() != coarse.max_word() {
            return false;
        }
        let mine = self.split_mask();
        coarse.split_mask() & !mine == 0
    }

    pub fn refinements(&self) -> Vec<Sentence> {
        let w = self.max_word();
        if w.is_empty() {
            return vec![Sentence::empty()];
        }
        let base = self.split_mask();
        let free = !base & ((1u64 << (w.len() - 1)) - 1);
        let mut out: Vec<Sentence> = submasks(free).map(|m| Sentence::from_mask(&w, base | m)).collect();
        out.sort();
        out
    }

    pub fn coarsenings(&self) -> Vec<Sentence> {
        let w = self.max_word();
        if w.is_empty() {
            return vec![Sentence::empty()];
        }
        let mut out: Vec<Sentence> = submasks(self.split_mask()).map(|m| Sentence::from_mask(&w, m)).collect();
        out.sort();
        out
    }

    pub fn complement(&self) -> Sentence {
        let w = self.max_word();
        if w.is_empty() {
            return Sentence::empty();
        }
        let all = (1u64 << (w.len() - 1)) - 1;
        Sentence::from_mask(&w, all & !self.split_mask())
    }

    pub fn reversal(&self) -> Sentence {
        Sentence { words: self.words.iter().rev().cloned().collect() }
    }

    /// Concatenation of word sequences `I·J`.
    pub fn concat(&self, other: &Sentence) -> Sentence {
        let mut words = self.words.clone();
        words.extend(other.words.iter().cloned());
        Sentence { words }
    }

    /// Near-concatenation `I⊙J`: the last word of I is merged with the first word of J.
    pub fn near_concat(&self, other: &Sentence) -> Sentence {
        if self.is_empty() || other.is_empty() {
            return self.concat(other);
        }
        let mut words = self.words.clone();
        let last = words.pop().unwrap();
        words.push(last.concat(&other.words[0]));
        words.extend(other.words[1..].iter().cloned());
        Sentence { words }
    }

    pub fn prepend_word(&self, w: Word) -> Sentence {
        let mut words = Vec::with_capacity(self.len() + 1);
        words.push(w);
        words.extend(self.words.iter().cloned());
        Sentence::from_words(words)
    }

    /// All sentences of size `n` over an alphabet of `k` colors, in canonical order.
    pub fn all_of_size(n: usize, k: usize) -> Vec<Sentence> {
        if n == 0 {
            return vec![Sentence::empty()];
        }
        let mut out = Vec::new();
        let total = k.pow(n as u32);
        for idx in 0..total {
            let mut v = vec![0 as Color; n];
            let mut r = idx;
            for slot in v.iter_mut().rev() {
                *slot = (r % k) as Color;
                r /= k;
            }
            let w = Word(v);
            for m in 0..(1u64 << (n - 1)) {
                out.push(Sentence::from_mask(&w, m));
            }
        }
        out.sort();
        out
    }

    /// All sentences whose maximal word is an arrangement of the given letters.
    pub fn all_with_content(letters: &[Color]) -> Vec<Sentence> {
        let mut sorted = letters.to_vec();
        sorted.sort();
        let mut out = Vec::new();
        if sorted.is_empty() {
            return vec![Sentence::empty()];
        }
        let n = sorted.len();
        loop {
            let w = Word(sorted.clone());
            for m in 0..(1u64 << (n - 1)) {
                out.push(Sentence::from_mask(&w, m));
            }
            if !next_permutation(&mut sorted) {
                break;
            }
        }
        out.sort();
        out
    }

    /// Sorted multiset of colors.
    pub fn content(&self) -> Vec<Color> {
        let mut c = self.max_word().0;
        c.sort();
        c
    }
}

impl Ord for Sentence {
    /// Grade by size, then reverse-lex on word lengths, then lex on maximal words,
    /// then lex on split sets.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.word_lengths().revlex_cmp(&other.word_lengths()))
            .then_with(|| self.max_word().cmp(&other.max_word()))
            .then_with(|| self.split_set().cmp(&other.split_set()))
    }
}

impl PartialOrd for Sentence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order on sentences of equal size.
pub fn canonical_compare(a: &Sentence, b: &Sentence) -> Ordering {
    a.cmp(b)
}

impl From<Sentence> for WeakSentence {
    fn from(s: Sentence) -> Self {
        WeakSentence { words: s.words }
    }
}

impl WeakSentence {
    pub fn new(words: Vec<Word>) -> Self {
        WeakSentence { words }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn size(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    pub fn flatten(&self) -> Sentence {
        Sentence::from_words(self.words.iter().cloned())
    }

    pub fn padded(&self, len: usize) -> Vec<Word> {
        let mut w = self.words.clone();
        w.resize(len.max(w.len()), Word::default());
        w
    }

    pub fn trim_trailing(mut self) -> Self {
        while self.words.last().is_some_and(Word::is_empty) {
            self.words.pop();
        }
        self
    }
}

pub enum Direction {
    Left,
    Right,
}

/// `I/_R J` (w_i = u_i·v_i) or `I/_L J` (w_i = v_i·q_i); `None` when J is not contained.
pub fn containment(j: &WeakSentence, i: &Sentence, side: Direction) -> Option<WeakSentence> {
    if j.len() > i.len() {
        return None;
    }
    let padded = j.padded(i.len());
    let mut out = Vec::with_capacity(i.len());
    for (w, v) in i.words().iter().zip(&padded) {
        let (w, v) = (&w.0, &v.0);
        match side {
            Direction::Right => {
                if !w.ends_with(v) {
                    return None;
                }
                out.push(Word(w[..w.len() - v.len()].to_vec()));
            }
            Direction::Left => {
                if !w.starts_with(v) {
                    return None;
                }
                out.push(Word(w[v.len()..].to_vec()));
            }
        }
    }
    Some(WeakSentence { words: out })
}

pub fn right_quotient(i: &Sentence, j: &WeakSentence) -> Option<WeakSentence> {
    containment(j, i, Direction::Right)
}

pub fn left_quotient(i: &Sentence, j: &WeakSentence) -> Option<WeakSentence> {
    containment(j, i, Direction::Left)
}

/// Möbius function of the refinement order.
pub fn mobius(fine: &Sentence, coarse: &Sentence, alphabet: &Alphabet) -> Result<i64> {
    if !fine.is_refinement_of(coarse) {
        return Err(Error::NotRefinement { fine: alphabet.render(fine), coarse: alphabet.render(coarse) });
    }
    Ok(if (fine.len() - coarse.len()) % 2 == 0 { 1 } else { -1 })
}

/// Quasishuffle multiset of two sentences.
pub fn quasishuffle(a: &Sentence, b: &Sentence) -> Vec<Sentence> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(a.len() + b.len());
    qsh(a.words(), b.words(), &mut acc, &mut out);
    out
}

fn qsh(a: &[Word], b: &[Word], acc: &mut Vec<Word>, out: &mut Vec<Sentence>) {
    if a.is_empty() || b.is_empty() {
        let mut words = acc.clone();
        words.extend(a.iter().cloned());
        words.extend(b.iter().cloned());
        out.push(Sentence { words });
        return;
    }
    acc.push(a[0].clone());
    qsh(&a[1..], b, acc, out);
    acc.pop();
    acc.push(b[0].clone());
    qsh(a, &b[1..], acc, out);
    acc.pop();
    acc.push(a[0].concat(&b[0]));
    qsh(&a[1..], &b[1..], acc, out);
    acc.pop();
}

/// All K with `J ⊂_w K`, one entry per decomposition of `w`.
///
/// `w = q_g ··· q_1` where q_j is appended to row j; row ℓ(J)+1 is a new bottom row.
pub fn pieri_extensions(j: &Sentence, w: &Word) -> Vec<Sentence> {
    let h = j.len();
    let mut out = Vec::new();
    let mut cuts = vec![0usize; h + 2];
    cuts[h + 1] = w.len();
    pieri_rec(j, w, 1, &mut cuts, &mut out);
    out
}

fn pieri_rec(j: &Sentence, w: &Word, k: usize, cuts: &mut Vec<usize>, out: &mut Vec<Sentence>) {
    let h = j.len();
    if k == h + 1 {
        // piece k (1-based) spans cuts[k-1]..cuts[k] and goes to row h + 2 - k
        let mut words: Vec<Word> = j.words().to_vec();
        words.push(Word::default());
        for piece in 1..=h + 1 {
            let seg = &w.0[cuts[piece - 1]..cuts[piece]];
            words[h + 1 - piece].0.extend_from_slice(seg);
        }
        if words[h].is_empty() {
            words.pop();
        }
        out.push(Sentence { words });
        return;
    }
    for c in cuts[k - 1]..=w.len() {
        cuts[k] = c;
        pieri_rec(j, w, k + 1, cuts, out);
    }
}

fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(cur)
    })
}

fn next_permutation(v: &mut [Color]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("abcdef").unwrap()
    }

    fn s(t: &str) -> Sentence {
        ab().sentence(t).unwrap()
    }

    fn render_all(v: &[Sentence]) -> Vec<String> {
        v.iter().map(|x| ab().render(x)).collect()
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("aba").is_err());
        assert!(Alphabet::new("aB").is_err());
        assert!(Alphabet::new("ba").is_ok());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(ab().render(&s("ab,cb")), "ab,cb");
        assert_eq!(ab().render(&s("()")), "()");
        assert!(ab().sentence("a,,b").is_err());
        assert!(ab().sentence("a,-").is_err());
        assert!(ab().sentence("A").is_err());
        assert!(ab().sentence("a1").is_err());
        assert!(ab().sentence("").is_err());
        assert!(ab().sentence("z").is_err());
        let w = ab().weak_sentence("-,a,-,cb,b").unwrap();
        assert_eq!(ab().render_weak(&w), "-,a,-,cb,b");
        assert_eq!(ab().render(&w.flatten()), "a,cb,b");
    }

    #[test]
    fn measures() {
        let i = s("abc,de");
        assert_eq!(i.size(), 5);
        assert_eq!(i.len(), 2);
        assert_eq!(i.word_lengths(), Composition(vec![3, 2]));
        assert_eq!(i.split_set(), vec![3]);
    }

    #[test]
    fn refinement_examples() {
        assert!(s("a,bc").is_refinement_of(&s("abc")));
        assert!(!s("ab,c").is_refinement_of(&s("a,bc")));
        assert!(s("a,b,c").is_refinement_of(&s("a,b,c")));
        assert_eq!(render_all(&s("abc").refinements()), vec!["abc", "ab,c", "a,bc", "a,b,c"]);
        assert_eq!(render_all(&s("a").coarsenings()), vec!["a"]);
        assert_eq!(render_all(&s("a,b,c").coarsenings()), vec!["abc", "ab,c", "a,bc", "a,b,c"]);
        assert_eq!(render_all(&s("ab,c").coarsenings()), vec!["abc", "ab,c"]);
    }

    #[test]
    fn involutions() {
        assert_eq!(ab().render(&s("abc,de").complement()), "a,b,cd,e");
        assert_eq!(ab().render(&s("abc,de").reversal()), "de,abc");
        assert_eq!(ab().render(&s("a").complement()), "a");
        assert_eq!(s("()").complement(), Sentence::empty());
    }

    #[test]
    fn quasishuffle_example() {
        let got = quasishuffle(&s("ab,c"), &s("d,e"));
        let mut got = render_all(&got);
        got.sort();
        let mut want: Vec<String> = [
            "ab,c,d,e", "ab,cd,e", "ab,d,c,e", "abd,c,e", "ab,d,ce", "abd,ce", "d,ab,c,e", "d,ab,ce", "ab,d,e,c",
            "abd,e,c", "d,ab,e,c", "d,abe,c", "d,e,ab,c",
        ]
        .iter()
        .map(|x| x.to_string())
        .collect();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(quasishuffle(&s("ab,c"), &s("()")), vec![s("ab,c")]);
    }

    #[test]
    fn containment_examples() {
        let i = s("ab,cdef");
        let j = ab().weak_sentence("b,ef").unwrap();
        assert_eq!(ab().render_weak(&right_quotient(&i, &j).unwrap()), "a,cd");
        let k = ab().weak_sentence("a,cde").unwrap();
        assert_eq!(ab().render_weak(&left_quotient(&i, &k).unwrap()), "b,f");
        assert_eq!(ab().render_weak(&right_quotient(&i, &i.to_weak()).unwrap()), "-,-");
        assert!(right_quotient(&i, &k).is_none());
    }

    #[test]
    fn mobius_examples() {
        let a = ab();
        assert_eq!(mobius(&s("a,b,c"), &s("abc"), &a).unwrap(), 1);
        assert_eq!(mobius(&s("a,bc"), &s("abc"), &a).unwrap(), -1);
        assert_eq!(mobius(&s("ab,c"), &s("ab,c"), &a).unwrap(), 1);
        assert!(mobius(&s("abc"), &s("a,bc"), &a).is_err());
    }

    #[test]
    fn pieri_examples() {
        let a = ab();
        let got = pieri_extensions(&s("ab,bc"), &a.word("ca").unwrap());
        let mut got = render_all(&got);
        got.sort();
        let mut want = vec!["ab,bc,ca", "ab,bca,c", "aba,bc,c", "ab,bcca", "aba,bcc", "abca,bc"];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(render_all(&pieri_extensions(&s("()"), &a.word("ca").unwrap())), vec!["ca"]);
        assert_eq!(pieri_extensions(&s("ab"), &Word::default()), vec![s("ab")]);
        let one = Alphabet::new("a").unwrap();
        let got = pieri_extensions(&one.sentence("aa,a").unwrap(), &one.word("aa").unwrap());
        let mut comps: Vec<Composition> = got.iter().map(Sentence::word_lengths).collect();
        comps.sort();
        let mut want: Vec<Composition> =
            [vec![2, 1, 2], vec![2, 2, 1], vec![3, 1, 1], vec![2, 3], vec![3, 2], vec![4, 1]].into_iter().map(Composition).collect();
        want.sort();
        assert_eq!(comps, want);
    }

    #[test]
    fn canonical_order_examples() {
        let c = |v: Vec<usize>| Composition(v);
        assert_eq!(c(vec![3, 2, 1]).revlex_cmp(&c(vec![3, 1, 2])), Ordering::Less);
        assert_eq!(canonical_compare(&s("ab,c"), &s("ab,c")), Ordering::Equal);
        assert_eq!(canonical_compare(&s("ab,c"), &s("ba,c")), Ordering::Less);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Sentence::all_of_size(3, 2).len(), 8 * 4);
        assert_eq!(Sentence::all_of_size(0, 2), vec![Sentence::empty()]);
        assert_eq!(Sentence::all_with_content(&[0, 0, 1]).len(), 3 * 4);
        assert_eq!(Composition::all(4).len(), 8);
        assert_eq!(Composition::all(3)[0], Composition(vec![3]));
    }

    #[test]
    fn near_concat() {
        assert_eq!(ab().render(&s("ab,c").near_concat(&s("d,e"))), "ab,cd,e");
        assert_eq!(ab().render(&s("ab,c").concat(&s("d,e"))), "ab,c,d,e");
    }
}
