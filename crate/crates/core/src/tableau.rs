//! Colored immaculate and row-strict immaculate tableaux, straight and skew.

use std::collections::BTreeMap;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::sentence::{left_quotient, Alphabet, Sentence, WeakSentence, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// Rows weakly increase, first column strictly increases.
    Immaculate,
    /// Rows strictly increase, first column weakly increases.
    RowStrict,
}

/// A filling of the diagram of `outer` minus the first |v_i| boxes of each row of `inner`.
/// Inactive boxes hold 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    outer: Sentence,
    inner: Sentence,
    rows: Vec<Vec<u32>>,
    variant: Variant,
}

impl Tableau {
    pub fn new(shape: Sentence, rows: Vec<Vec<u32>>, variant: Variant) -> Result<Self> {
        Tableau::skew(shape, Sentence::empty(), rows, variant)
    }

    pub fn skew(outer: Sentence, inner: Sentence, rows: Vec<Vec<u32>>, variant: Variant) -> Result<Self> {
        let t = Tableau { outer, inner, rows, variant };
        if left_quotient(&t.outer, &t.inner.to_weak()).is_none() {
            return Err(Error::NotContained { inner: format!("{:?}", t.inner), outer: format!("{:?}", t.outer) });
        }
        if !t.is_valid() {
            return Err(Error::Parse { pos: 0, msg: "filling violates the tableau rules".into() });
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Sentence {
        &self.outer
    }

    pub fn inner(&self) -> &Sentence {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    fn inactive(&self, row: usize) -> usize {
        self.inner.words().get(row).map_or(0, Word::len)
    }

    pub fn is_valid(&self) -> bool {
        if self.rows.len() != self.outer.len() {
            return false;
        }
        for (r, (row, word)) in self.rows.iter().zip(self.outer.words()).enumerate() {
            if row.len() != word.len() {
                return false;
            }
            let skip = self.inactive(r);
            if row[..skip].iter().any(|&x| x != 0) || row[skip..].iter().any(|&x| x == 0) {
                return false;
            }
            for pair in row[skip..].windows(2) {
                let ok = match self.variant {
                    Variant::Immaculate => pair[0] <= pair[1],
                    Variant::RowStrict => pair[0] < pair[1],
                };
                if !ok {
                    return false;
                }
            }
        }
        let firsts: Vec<u32> = (self.inner.len()..self.rows.len()).map(|r| self.rows[r][0]).collect();
        firsts.windows(2).all(|p| match self.variant {
            Variant::Immaculate => p[0] < p[1],
            Variant::RowStrict => p[0] <= p[1],
        })
    }

    /// Active boxes as (row, col) sorted by value, then the variant's reading order.
    pub fn reading_order(&self) -> Vec<(usize, usize)> {
        let mut boxes: Vec<(usize, usize)> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    boxes.push((r, c));
                }
            }
        }
        let variant = self.variant;
        boxes.sort_by_key(|&(r, c)| {
            let v = self.rows[r][c];
            match variant {
                Variant::Immaculate => (v, usize::MAX - r, c),
                Variant::RowStrict => (v, r, c),
            }
        });
        boxes
    }

    /// Word u_i lists colors of boxes filled with i in reading order; trailing empties trimmed.
    pub fn tableau_type(&self) -> WeakSentence {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut words = vec![Word::default(); max];
        for (r, c) in self.reading_order() {
            let v = self.rows[r][c] as usize;
            words[v - 1].0.push(self.outer.words()[r].0[c]);
        }
        WeakSentence::new(words).trim_trailing()
    }

    pub fn flat_type(&self) -> Sentence {
        self.tableau_type().flatten()
    }

    pub fn is_standard(&self) -> bool {
        let mut vals: Vec<u32> = self.rows.iter().flatten().copied().filter(|&v| v != 0).collect();
        vals.sort_unstable();
        vals.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn standardize(&self) -> StandardTableau {
        let mut rows: Vec<Vec<u32>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for (k, (r, c)) in self.reading_order().into_iter().enumerate() {
            rows[r][c] = k as u32 + 1;
        }
        StandardTableau(Tableau { rows, ..self.clone() })
    }

    pub fn as_standard(&self) -> Option<StandardTableau> {
        self.is_standard().then(|| StandardTableau(self.clone()))
    }

    /// Rows as "color,entry" cells joined by "|"; inactive boxes show "." as the entry.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let lines: Vec<String> = self
            .rows
            .iter()
            .zip(self.outer.words())
            .map(|(row, word)| {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&word.0)
                    .map(|(&v, &col)| {
                        let e = if v == 0 { ".".to_string() } else { v.to_string() };
                        format!("{},{}", alphabet.symbol(col), e)
                    })
                    .collect();
                cells.join("|")
            })
            .collect();
        lines.join("\n")
    }
}

/// A tableau whose active entries are exactly 1..n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau(Tableau);

impl Deref for StandardTableau {
    type Target = Tableau;
    fn deref(&self) -> &Tableau {
        &self.0
    }
}

impl StandardTableau {
    pub fn into_inner(self) -> Tableau {
        self.0
    }

    fn rows_of_entries(&self) -> Vec<(usize, usize)> {
        let n = self.rows.iter().flatten().filter(|&&v| v != 0).count();
        let mut pos = vec![(0, 0); n];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    pos[v as usize - 1] = (r, c);
                }
            }
        }
        pos
    }

    /// Immaculate: i+1 strictly lower than i. Row-strict: i+1 weakly higher.
    pub fn descents(&self) -> Vec<usize> {
        let pos = self.rows_of_entries();
        (1..pos.len())
            .filter(|&i| {
                let (a, b) = (pos[i - 1].0, pos[i].0);
                match self.variant {
                    Variant::Immaculate => b > a,
                    Variant::RowStrict => b <= a,
                }
            })
            .collect()
    }

    pub fn descent_composition(&self) -> Sentence {
        let pos = self.rows_of_entries();
        let word = Word(pos.iter().map(|&(r, c)| self.outer.words()[r].0[c]).collect());
        Sentence::from_splits(&word, &self.descents())
    }

    pub fn with_variant(&self, variant: Variant) -> StandardTableau {
        StandardTableau(Tableau { variant, ..self.0.clone() })
    }
}

/// One value's worth of new boxes.
struct Strip {
    lens: Vec<usize>,
    started: usize,
    word: Word,
}

/// Backtracking state for fillings of `outer` starting from `inner`.
struct Search<'a> {
    outer: &'a Sentence,
    variant: Variant,
}

impl Search<'_> {
    /// All ways to place boxes with one new value (possibly none).
    fn strips(&self, lens: &[usize], started: usize, max_boxes: usize) -> Vec<Strip> {
        let mut out = Vec::new();
        let mut cur = lens.to_vec();
        self.extend_rows(0, started, &mut cur, max_boxes, &mut out, lens);
        out
    }

    fn extend_rows(
        &self,
        r: usize,
        started: usize,
        cur: &mut Vec<usize>,
        budget: usize,
        out: &mut Vec<Strip>,
        base: &[usize],
    ) {
        let h = self.outer.len();
        if r == started {
            // new rows begin here
            match self.variant {
                Variant::Immaculate => {
                    self.emit(cur, started, base, out);
                    if started < h {
                        let room = self.outer.words()[started].len().min(budget);
                        for k in 1..=room {
                            cur[started] = k;
                            self.emit(cur, started + 1, base, out);
                        }
                        cur[started] = 0;
                    }
                }
                Variant::RowStrict => {
                    let mut t = 0;
                    self.emit(cur, started, base, out);
                    while started + t < h && t < budget {
                        cur[started + t] = 1;
                        t += 1;
                        self.emit(cur, started + t, base, out);
                    }
                    for k in 0..t {
                        cur[started + k] = 0;
                    }
                }
            }
            return;
        }
        let room = self.outer.words()[r].len() - cur[r];
        let limit = match self.variant {
            Variant::Immaculate => room.min(budget),
            Variant::RowStrict => room.min(budget).min(1),
        };
        for k in 0..=limit {
            cur[r] += k;
            self.extend_rows(r + 1, started, cur, budget - k, out, base);
            cur[r] -= k;
        }
    }

    fn emit(&self, cur: &[usize], started: usize, base: &[usize], out: &mut Vec<Strip>) {
        let rows: Vec<usize> = match self.variant {
            Variant::Immaculate => (0..cur.len()).rev().collect(),
            Variant::RowStrict => (0..cur.len()).collect(),
        };
        let mut word = Word::default();
        for r in rows {
            word.0.extend_from_slice(&self.outer.words()[r].0[base[r]..cur[r]]);
        }
        out.push(Strip { lens: cur.to_vec(), started, word });
    }
}

fn initial_rows(outer: &Sentence, inner: &Sentence) -> (Vec<usize>, Vec<Vec<u32>>) {
    let lens: Vec<usize> = (0..outer.len()).map(|r| inner.words().get(r).map_or(0, Word::len)).collect();
    let rows = lens.iter().map(|&l| vec![0; l]).collect();
    (lens, rows)
}

fn apply(rows: &mut [Vec<u32>], old: &[usize], new: &[usize], value: u32) {
    for r in 0..rows.len() {
        for _ in old[r]..new[r] {
            rows[r].push(value);
        }
    }
}

fn unapply(rows: &mut [Vec<u32>], old: &[usize]) {
    for (r, row) in rows.iter_mut().enumerate() {
        row.truncate(old[r]);
    }
}

/// All tableaux of shape `outer/inner` with the given type, in row-major filling order.
pub fn enumerate_skew_tableaux(outer: &Sentence, inner: &Sentence, ty: &WeakSentence, variant: Variant) -> Vec<Tableau> {
    let Some(active) = left_quotient(outer, &inner.to_weak()) else {
        return Vec::new();
    };
    if active.size() != ty.size() {
        return Vec::new();
    }
    let search = Search { outer, variant };
    let (lens, mut rows) = initial_rows(outer, inner);
    let mut out = Vec::new();
    typed_rec(&search, inner, ty, 0, &lens, inner.len(), &mut rows, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn typed_rec(
    s: &Search,
    inner: &Sentence,
    ty: &WeakSentence,
    i: usize,
    lens: &[usize],
    started: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Tableau>,
) {
    if i == ty.len() {
        if lens.iter().zip(s.outer.words()).all(|(&l, w)| l == w.len()) {
            out.push(Tableau { outer: s.outer.clone(), inner: inner.clone(), rows: rows.clone(), variant: s.variant });
        }
        return;
    }
    let target = &ty.words[i];
    for strip in s.strips(lens, started, target.len()) {
        if strip.word != *target {
            continue;
        }
        apply(rows, lens, &strip.lens, i as u32 + 1);
        typed_rec(s, inner, ty, i + 1, &strip.lens, strip.started, rows, out);
        unapply(rows, lens);
    }
}

pub fn enumerate_tableaux(shape: &Sentence, ty: &WeakSentence, variant: Variant) -> Vec<Tableau> {
    enumerate_skew_tableaux(shape, &Sentence::empty(), ty, variant)
}

/// K_{J,B} (or its row-strict analogue): number of tableaux of shape J and type B.
pub fn kostka(shape: &Sentence, ty: &WeakSentence, variant: Variant) -> u64 {
    enumerate_tableaux(shape, ty, variant).len() as u64
}

/// All standard fillings of `outer/inner`, sorted.
pub fn enumerate_skew_standard(outer: &Sentence, inner: &Sentence, variant: Variant) -> Vec<StandardTableau> {
    let Some(active) = left_quotient(outer, &inner.to_weak()) else {
        return Vec::new();
    };
    let n = active.size();
    let search = Search { outer, variant };
    let (lens, mut rows) = initial_rows(outer, inner);
    let mut out = Vec::new();
    standard_rec(&search, inner, n, 0, &lens, inner.len(), &mut rows, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn standard_rec(
    s: &Search,
    inner: &Sentence,
    n: usize,
    i: usize,
    lens: &[usize],
    started: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<StandardTableau>,
) {
    if i == n {
        out.push(StandardTableau(Tableau {
            outer: s.outer.clone(),
            inner: inner.clone(),
            rows: rows.clone(),
            variant: s.variant,
        }));
        return;
    }
    for strip in s.strips(lens, started, 1) {
        if strip.word.len() != 1 {
            continue;
        }
        apply(rows, lens, &strip.lens, i as u32 + 1);
        standard_rec(s, inner, n, i + 1, &strip.lens, strip.started, rows, out);
        unapply(rows, lens);
    }
}

pub fn enumerate_standard(shape: &Sentence, variant: Variant) -> Vec<StandardTableau> {
    enumerate_skew_standard(shape, &Sentence::empty(), variant)
}

/// L_{J,C} (or its row-strict analogue).
pub fn ell_coeff(shape: &Sentence, c: &Sentence, variant: Variant) -> u64 {
    enumerate_standard(shape, variant).iter().filter(|u| u.descent_composition() == *c).count() as u64
}

/// Descent composition -> number of standard tableaux of `shape` having it.
pub fn descent_buckets(shape: &Sentence, variant: Variant) -> BTreeMap<Sentence, u64> {
    let mut out = BTreeMap::new();
    for u in enumerate_standard(shape, variant) {
        *out.entry(u.descent_composition()).or_insert(0) += 1;
    }
    out
}

/// Flat type -> number of tableaux of shape `outer/inner` whose type flattens to it.
///
/// Every tableau with a gap-free set of values is counted once; these are exactly the
/// tableaux of flat types.
pub fn packed_type_counts(outer: &Sentence, inner: &Sentence, variant: Variant) -> Result<BTreeMap<Sentence, u64>> {
    let Some(active) = left_quotient(outer, &inner.to_weak()) else {
        return Err(Error::NotContained { inner: format!("{inner:?}"), outer: format!("{outer:?}") });
    };
    let n = active.size();
    let search = Search { outer, variant };
    let (lens, _) = initial_rows(outer, inner);
    let mut out = BTreeMap::new();
    let mut words = Vec::new();
    packed_rec(&search, n, &lens, inner.len(), &mut words, &mut out);
    Ok(out)
}

fn packed_rec(
    s: &Search,
    remaining: usize,
    lens: &[usize],
    started: usize,
    words: &mut Vec<Word>,
    out: &mut BTreeMap<Sentence, u64>,
) {
    if remaining == 0 {
        *out.entry(Sentence::from_words(words.iter().cloned())).or_insert(0) += 1;
        return;
    }
    for strip in s.strips(lens, started, remaining) {
        if strip.word.is_empty() {
            continue;
        }
        let k = strip.word.len();
        words.push(strip.word);
        packed_rec(s, remaining - k, &strip.lens, strip.started, words, out);
        words.pop();
    }
}

/// Shape -> number of tableaux of that shape with flat type `ty`, over all shapes.
///
/// Immaculate tableaux grow by the right Pieri rule one value at a time; row-strict
/// tableaux grow by at most one box per existing row plus new one-box rows, read top to bottom.
pub fn shapes_by_type(ty: &Sentence, variant: Variant) -> BTreeMap<Sentence, u64> {
    let mut layer: BTreeMap<Sentence, u64> = BTreeMap::from([(Sentence::empty(), 1)]);
    for u in ty.words() {
        let mut next = BTreeMap::new();
        for (shape, count) in &layer {
            let grown = match variant {
                Variant::Immaculate => crate::sentence::pieri_extensions(shape, u),
                Variant::RowStrict => vertical_extensions(shape, u),
            };
            for k in grown {
                *next.entry(k).or_insert(0) += count;
            }
        }
        layer = next;
    }
    layer
}

/// Row-strict growth: letters of `w` go, top to bottom, to distinct rows (existing rows
/// or new bottom rows of one box each).
pub fn vertical_extensions(j: &Sentence, w: &Word) -> Vec<Sentence> {
    let h = j.len();
    let m = w.len();
    let mut out = Vec::new();
    // choose t new rows and an increasing set of m - t existing rows
    for t in 0..=m {
        let k = m - t;
        if k > h {
            continue;
        }
        for rows in combinations(h, k) {
            let mut words: Vec<Word> = j.words().to_vec();
            for (idx, &r) in rows.iter().enumerate() {
                words[r].0.push(w.0[idx]);
            }
            for idx in k..m {
                words.push(Word(vec![w.0[idx]]));
            }
            out.push(Sentence::from_words(words));
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Shape -> number of standard tableaux of that shape with descent composition `c`.
///
/// Grows a standard tableau box by box along w(c): box k+1 goes strictly below box k
/// exactly at descents (immaculate) or weakly above exactly at descents (row-strict).
pub fn shapes_by_descent(c: &Sentence, variant: Variant) -> BTreeMap<Sentence, u64> {
    let word = c.max_word();
    let splits = c.split_set();
    let mut out = BTreeMap::new();
    let mut words: Vec<Word> = Vec::new();
    descent_rec(&word, &splits, variant, 0, usize::MAX, &mut words, &mut out);
    out
}

fn descent_rec(
    word: &Word,
    splits: &[usize],
    variant: Variant,
    k: usize,
    last_row: usize,
    words: &mut Vec<Word>,
    out: &mut BTreeMap<Sentence, u64>,
) {
    if k == word.len() {
        *out.entry(Sentence::from_words(words.iter().cloned())).or_insert(0) += 1;
        return;
    }
    let color = word.0[k];
    let descent = k > 0 && splits.contains(&k);
    for r in 0..=words.len() {
        if k > 0 {
            let lower = r > last_row;
            let wanted = match variant {
                Variant::Immaculate => descent == lower,
                Variant::RowStrict => descent == !lower,
            };
            if !wanted {
                continue;
            }
        }
        if r == words.len() {
            words.push(Word(vec![color]));
            descent_rec(word, splits, variant, k + 1, r, words, out);
            words.pop();
        } else {
            words[r].0.push(color);
            descent_rec(word, splits, variant, k + 1, r, words, out);
            words[r].0.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Alphabet {
        Alphabet::new("abcdef").unwrap()
    }

    fn s(t: &str) -> Sentence {
        a().sentence(t).unwrap()
    }

    fn ws(t: &str) -> WeakSentence {
        a().weak_sentence(t).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&s("ab,cb"), &ws("a,cb,b"), Variant::Immaculate), 2);
        assert_eq!(kostka(&s("ab,cb"), &ws("-,a,-,cb,b"), Variant::Immaculate), 2);
        assert_eq!(kostka(&s("a"), &ws("b"), Variant::Immaculate), 0);
    }

    #[test]
    fn typed_fillings_match_hand_count() {
        let ts = enumerate_tableaux(&s("ab,cb"), &ws("a,cb,b"), Variant::Immaculate);
        let fills: Vec<_> = ts.iter().map(|t| t.rows().to_vec()).collect();
        assert_eq!(fills, vec![vec![vec![1, 2], vec![2, 3]], vec![vec![1, 3], vec![2, 2]]]);
    }

    #[test]
    fn standard_examples() {
        let comps: Vec<String> = enumerate_standard(&s("ab,cb"), Variant::Immaculate)
            .iter()
            .map(|u| a().render(&u.descent_composition()))
            .collect();
        let mut c = comps.clone();
        c.sort();
        assert_eq!(c, vec!["a,cb,b", "a,cbb", "ab,cb"]);
        let got = descent_buckets(&s("ab,cbb"), Variant::Immaculate);
        let keys: Vec<String> = got.keys().map(|k| a().render(k)).collect();
        assert_eq!(got.values().sum::<u64>(), 4);
        for k in ["ab,cbb", "a,cbb,b", "a,cb,bb", "a,cbbb"] {
            assert!(keys.contains(&k.to_string()), "{k}");
        }
        assert_eq!(enumerate_standard(&s("a"), Variant::Immaculate).len(), 1);
    }

    #[test]
    fn ell_example() {
        assert_eq!(ell_coeff(&s("ab,cb,b"), &s("a,cb,bb"), Variant::Immaculate), 2);
    }

    #[test]
    fn standardize_examples() {
        let t = Tableau::new(s("ab,cb"), vec![vec![1, 2], vec![3, 3]], Variant::Immaculate).unwrap();
        assert_eq!(a().render_weak(&t.tableau_type()), "a,b,cb");
        assert_eq!(t.standardize().rows(), &[vec![1, 2], vec![3, 4]]);
        let t = Tableau::new(s("ab,cb"), vec![vec![1, 3], vec![2, 2]], Variant::Immaculate).unwrap();
        assert_eq!(t.standardize().rows(), &[vec![1, 4], vec![2, 3]]);
        let t = Tableau::new(s("ab,bca"), vec![vec![1, 2], vec![1, 3, 4]], Variant::RowStrict).unwrap();
        assert_eq!(a().render_weak(&t.tableau_type()), "ab,b,c,a");
        assert_eq!(t.standardize().rows(), &[vec![1, 3], vec![2, 4, 5]]);
        let u = t.standardize();
        assert_eq!(u.standardize(), u);
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(s("ab,cb"), vec![vec![2, 1], vec![3, 3]], Variant::Immaculate).is_err());
        assert!(Tableau::new(s("ab,cb"), vec![vec![1, 1], vec![1, 2]], Variant::Immaculate).is_err());
        assert!(Tableau::new(s("ab,cb"), vec![vec![1, 1], vec![2, 3]], Variant::RowStrict).is_err());
        assert!(Tableau::new(s("ab,cb"), vec![vec![1, 2], vec![1, 3]], Variant::RowStrict).is_ok());
    }

    #[test]
    fn row_strict_descents_complement() {
        for u in enumerate_standard(&s("ab,cbb"), Variant::Immaculate) {
            let rs = u.with_variant(Variant::RowStrict);
            assert_eq!(rs.descent_composition(), u.descent_composition().complement());
        }
    }

    #[test]
    fn render_cells() {
        let t = Tableau::new(s("ab,c"), vec![vec![1, 2], vec![3]], Variant::Immaculate).unwrap();
        assert_eq!(t.render(&a()), "a,1|b,2\nc,3");
    }

    #[test]
    fn shapes_by_descent_matches_ell() {
        let c = s("a,cb,bb");
        let got = shapes_by_descent(&c, Variant::Immaculate);
        assert_eq!(got.get(&s("ab,cb,b")), Some(&2));
        for (shape, n) in &got {
            assert_eq!(ell_coeff(shape, &c, Variant::Immaculate), *n);
        }
    }

    #[test]
    fn packed_counts_for_one_row() {
        let got = packed_type_counts(&s("ab"), &Sentence::empty(), Variant::Immaculate).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[&s("ab")], 1);
        assert_eq!(got[&s("a,b")], 1);
        let got = packed_type_counts(&s("ab"), &Sentence::empty(), Variant::RowStrict).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[&s("a,b")], 1);
    }
}
