//! The NSym side: H, E, R, IM and RSIM bases, perp and creation operators, Pieri, Hopf structure.

use std::collections::HashMap;

use num::{One, Zero};

use crate::descent::InverseCache;
use crate::error::{Error, Result};
use crate::linear::{int, BasisTag, Expr, LinComb, Scalar, Side, TensorExpr, Terms};
use crate::qsym::QsymConverter;
use crate::sentence::{pieri_extensions, Alphabet, Sentence, Word};
use crate::tableau::{shapes_by_descent, shapes_by_type, Variant};

fn sign(k: usize) -> Scalar {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn require_tag(e: &Expr, tag: BasisTag, op: &'static str) -> Result<()> {
    if e.tag() != tag {
        return Err(Error::Unsupported { op, tag: e.tag().to_string() });
    }
    Ok(())
}

fn require_side(e: &Expr, side: Side) -> Result<()> {
    if e.side() != side {
        return Err(Error::WrongSide { tag: e.tag().to_string(), side: side.to_string() });
    }
    Ok(())
}

fn counts(m: std::collections::BTreeMap<Sentence, u64>) -> Terms {
    m.into_iter().map(|(s, c)| (s, int(c as i64))).collect()
}

/// All weak K ⊆_R J with flatten(K) = S, returned as flatten(J/_R K).
///
/// The words of S land, in order, as suffixes of strictly increasing rows of J.
pub fn mrperp_terms(s: &Sentence, j: &Sentence) -> Vec<Sentence> {
    let mut out = Vec::new();
    let mut rows: Vec<Word> = j.words().to_vec();
    perp_rec(s.words(), 0, &mut rows, &mut out);
    out
}

fn perp_rec(s: &[Word], from_row: usize, rows: &mut Vec<Word>, out: &mut Vec<Sentence>) {
    let Some((first, rest)) = s.split_first() else {
        out.push(Sentence::from_words(rows.iter().cloned()));
        return;
    };
    for r in from_row..rows.len() {
        if rows[r].0.ends_with(&first.0) {
            let saved = rows[r].clone();
            rows[r].0.truncate(saved.len() - first.len());
            perp_rec(rest, r + 1, rows, out);
            rows[r] = saved;
        }
    }
}

/// M^⇀⊥_S on an H-tagged expression.
pub fn mrperp(s: &Sentence, e: &Expr) -> Result<Expr> {
    require_tag(e, BasisTag::H, "mrperp")?;
    let terms = e.terms().flat_map(|j| mrperp_terms(s, j).into_iter().map(|k| (k, int(1))).collect());
    Ok(e.with_terms(BasisTag::H, terms))
}

/// Every vector of per-row suffix lengths for the rows of `j`.
fn suffix_cuts(j: &Sentence) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(j.len())];
    for w in j.words() {
        out = out
            .into_iter()
            .flat_map(|c| {
                (0..=w.len()).map(move |k| {
                    let mut c = c.clone();
                    c.push(k);
                    c
                })
            })
            .collect();
    }
    out
}

/// Splits each row of `j` into (prefix, suffix) with the given suffix lengths.
fn split_rows(j: &Sentence, cuts: &[usize]) -> (Vec<Word>, Vec<Word>) {
    j.words()
        .iter()
        .zip(cuts)
        .map(|(w, &k)| {
            let at = w.len() - k;
            (Word(w.0[..at].to_vec()), Word(w.0[at..].to_vec()))
        })
        .unzip()
}

/// Colored Bernstein operator on H-terms.
pub fn bernstein_terms(v: &Word, h: &Terms) -> Terms {
    let mut out = Terms::new();
    for (j, c) in h.iter() {
        for cuts in suffix_cuts(j) {
            let (kept, removed) = split_rows(j, &cuts);
            let s = Sentence::from_words(removed);
            let quotient = Sentence::from_words(kept);
            for q in s.refinements() {
                let mut first = v.clone();
                for w in q.words().iter().rev() {
                    first = first.concat(w);
                }
                out.add_term(quotient.prepend_word(first), c * sign(q.len()));
            }
        }
    }
    out
}

/// 𝔹_v on an H-tagged expression.
pub fn bernstein(v: &Word, e: &Expr) -> Result<Expr> {
    require_tag(e, BasisTag::H, "bernstein")?;
    if v.is_empty() {
        return Err(Error::EmptyOperatorWord);
    }
    Ok(e.with_terms(BasisTag::H, bernstein_terms(v, e.terms())))
}

/// 𝔖_J in the H basis by iterated creation operators.
pub fn immaculate_in_h(j: &Sentence, alphabet: &Alphabet) -> Expr {
    let mut memo = HashMap::new();
    Expr::from_terms(BasisTag::H, alphabet, im_h(j, &mut memo))
}

fn im_h(j: &Sentence, memo: &mut HashMap<Sentence, Terms>) -> Terms {
    if let Some(t) = memo.get(j) {
        return t.clone();
    }
    let out = if j.words().iter().all(|w| w.len() == 1) {
        single_letter_im_h(j)
    } else {
        let (first, rest) = j.words().split_first().expect("non-empty: single-letter case covers ()");
        let tail = im_h(&Sentence::from_words(rest.iter().cloned()), memo);
        bernstein_terms(first, &tail)
    };
    memo.insert(j.clone(), out.clone());
    out
}

/// Σ_{J ⪯ K} (-1)^{ℓ(J)-ℓ(K)} H_K for sentences of one-letter words.
fn single_letter_im_h(j: &Sentence) -> Terms {
    j.coarsenings().into_iter().map(|k| (k.clone(), sign(j.len() - k.len()))).collect()
}

/// 𝔖_J by unitriangular inversion of H_B = Σ_J K_{J,B} 𝔖_J.
pub fn immaculate_in_h_via_kostka(j: &Sentence, alphabet: &Alphabet) -> Expr {
    let mut memo = HashMap::new();
    let mut col_memo = HashMap::new();
    Expr::from_terms(BasisTag::H, alphabet, kostka_rec(j, &mut memo, &mut col_memo))
}

fn kostka_rec(
    j: &Sentence,
    memo: &mut HashMap<Sentence, Terms>,
    cols: &mut HashMap<Sentence, std::collections::BTreeMap<Sentence, u64>>,
) -> Terms {
    if let Some(t) = memo.get(j) {
        return t.clone();
    }
    let col = cols.entry(j.clone()).or_insert_with(|| shapes_by_type(j, Variant::Immaculate)).clone();
    let mut out = Terms::single(j.clone(), Scalar::one());
    for (shape, k) in col {
        if &shape == j {
            continue;
        }
        let sub = kostka_rec(&shape, memo, cols);
        out.add_scaled(&sub, &-int(k as i64));
    }
    memo.insert(j.clone(), out.clone());
    out
}

/// H-terms to IM-terms by repeatedly removing the canonically last H term with its 𝔖.
pub fn h_to_im_by_creation(h: &Terms) -> Result<Terms> {
    let mut rest = h.clone();
    let mut out = Terms::new();
    let mut memo = HashMap::new();
    while let Some(last) = rest.keys().last().cloned() {
        let c = rest.get(&last);
        let im = im_h(&last, &mut memo);
        rest.add_scaled(&im, &-c.clone());
        if !rest.get(&last).is_zero() {
            return Err(Error::Cycle(format!("leading term {last:?} did not cancel")));
        }
        out.add_term(last, c);
    }
    Ok(out)
}

/// Σ_{J ⊂_w K} IM[K].
pub fn pieri(j: &Sentence, w: &Word, alphabet: &Alphabet) -> Expr {
    let terms = pieri_extensions(j, w).into_iter().map(|k| (k, int(1))).collect();
    Expr::from_terms(BasisTag::IM, alphabet, terms)
}

/// Change of basis on the NSym side with memoized single-sentence expansions.
#[derive(Default)]
pub struct NsymConverter {
    inverse: InverseCache,
    im_memo: HashMap<Sentence, Terms>,
    memo: HashMap<(BasisTag, BasisTag, Sentence), Terms>,
}

impl NsymConverter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn convert(&mut self, e: &Expr, target: BasisTag) -> Result<Expr> {
        require_side(e, Side::NSym)?;
        if target.side() != Side::NSym {
            return Err(Error::WrongSide { tag: target.to_string(), side: Side::NSym.to_string() });
        }
        let integral = e.terms().is_integral();
        let mut out = Terms::new();
        for (s, c) in e.terms().iter() {
            out.add_scaled(&self.expand(e.tag(), s, target)?, c);
        }
        let res = e.with_terms(target, out);
        if integral {
            res.ensure_integral(&format!("{} -> {}", e.tag(), target))
        } else {
            Ok(res)
        }
    }

    /// Image of the basis element `from[s]` in the `to` basis.
    pub fn expand(&mut self, from: BasisTag, s: &Sentence, to: BasisTag) -> Result<Terms> {
        use BasisTag::*;
        if from == to {
            return Ok(Terms::single(s.clone(), Scalar::one()));
        }
        let key = (from, to, s.clone());
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        let out = match (from, to) {
            (R, H) => s.coarsenings().into_iter().map(|j| (j.clone(), sign(s.len() - j.len()))).collect(),
            (H, R) => s.coarsenings().into_iter().map(|j| (j, int(1))).collect(),
            (E, H) | (H, E) => s.refinements().into_iter().map(|j| (j.clone(), sign(s.size() - j.len()))).collect(),
            (IM, H) => im_h(s, &mut self.im_memo),
            (H, IM) => counts(shapes_by_type(s, Variant::Immaculate)),
            (H, RSIM) => counts(shapes_by_type(s, Variant::RowStrict)),
            (E, IM) => counts(shapes_by_type(s, Variant::RowStrict)),
            (E, RSIM) => counts(shapes_by_type(s, Variant::Immaculate)),
            (R, IM) => counts(shapes_by_descent(s, Variant::Immaculate)),
            (R, RSIM) => counts(shapes_by_descent(s, Variant::RowStrict)),
            (IM, R) => self.inverse.column(s)?,
            (RSIM, R) => self.inverse.column(s)?.map_keys(Sentence::complement),
            (RSIM, H) => {
                let r = self.expand(RSIM, s, R)?;
                self.expand_terms(R, &r, H)?
            }
            _ => {
                let h = self.expand(from, s, H)?;
                self.expand_terms(H, &h, to)?
            }
        };
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn expand_terms(&mut self, from: BasisTag, t: &Terms, to: BasisTag) -> Result<Terms> {
        let mut out = Terms::new();
        for (s, c) in t.iter() {
            out.add_scaled(&self.expand(from, s, to)?, c);
        }
        Ok(out)
    }
}

pub fn convert(e: &Expr, target: BasisTag) -> Result<Expr> {
    NsymConverter::new().convert(e, target)
}

/// Product through H (concatenation); the result is written in the basis of `e1`.
pub fn product(e1: &Expr, e2: &Expr) -> Result<Expr> {
    require_side(e1, Side::NSym)?;
    require_side(e2, Side::NSym)?;
    if e1.alphabet() != e2.alphabet() {
        return Err(Error::AlphabetMismatch(e1.alphabet().as_string(), e2.alphabet().as_string()));
    }
    let mut conv = NsymConverter::new();
    let a = conv.convert(e1, BasisTag::H)?;
    let b = conv.convert(e2, BasisTag::H)?;
    let prod = product_h(&a, &b)?;
    conv.convert(&prod, e1.tag())
}

pub fn product_h(a: &Expr, b: &Expr) -> Result<Expr> {
    require_tag(a, BasisTag::H, "product")?;
    require_tag(b, BasisTag::H, "product")?;
    let mut out = Terms::new();
    for (i, ci) in a.terms().iter() {
        for (j, cj) in b.terms().iter() {
            out.add_term(i.concat(j), ci * cj);
        }
    }
    Ok(a.with_terms(BasisTag::H, out))
}

/// Δ(H_I) = Σ_{J ⊆_R I} H_{flatten(I/_R J)} ⊗ H_{flatten(J)}.
pub fn coproduct_h(e: &Expr) -> Result<TensorExpr> {
    require_tag(e, BasisTag::H, "coproduct")?;
    let mut terms = LinComb::new();
    for (i, c) in e.terms().iter() {
        for cuts in suffix_cuts(i) {
            let (kept, removed) = split_rows(i, &cuts);
            let l = Sentence::from_words(kept);
            let r = Sentence::from_words(removed);
            terms.add_term((l, r), c.clone());
        }
    }
    Ok(TensorExpr { tags: (BasisTag::H, BasisTag::H), alphabet: e.alphabet().clone(), terms })
}

/// S(H_I) = Σ_{J ⪯ I^r} (-1)^{ℓ(J)} H_J.
pub fn antipode_h(e: &Expr) -> Result<Expr> {
    require_tag(e, BasisTag::H, "antipode")?;
    let out = e.terms().flat_map(|i| i.reversal().refinements().into_iter().map(|j| (j.clone(), sign(j.len()))).collect());
    Ok(e.with_terms(BasisTag::H, out))
}

/// ψ(R_J) = R_{J^c}; the result is written in the ψ-partner basis.
pub fn psi(e: &Expr) -> Result<Expr> {
    require_side(e, Side::NSym)?;
    let mut conv = NsymConverter::new();
    let r = conv.convert(e, BasisTag::R)?;
    let flipped = r.terms().map_keys(Sentence::complement);
    conv.convert(&r.with_terms(BasisTag::R, flipped), e.tag().psi_partner())
}

/// ⟨n, q⟩ with ⟨H_I, M_J⟩ = δ_{I,J}.
pub fn pair(n: &Expr, q: &Expr) -> Result<Scalar> {
    require_side(n, Side::NSym)?;
    require_side(q, Side::QSym)?;
    let h = NsymConverter::new().convert(n, BasisTag::H)?;
    let m = QsymConverter::new().convert(q, BasisTag::M)?;
    let mut total = Scalar::zero();
    for (s, c) in h.terms().iter() {
        total += c * m.coef(s);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al() -> Alphabet {
        Alphabet::new("abcdef").unwrap()
    }

    fn e(t: &str) -> Expr {
        Expr::parse(t, &al()).unwrap()
    }

    fn s(t: &str) -> Sentence {
        al().sentence(t).unwrap()
    }

    #[test]
    fn mrperp_example() {
        let got = mrperp(&s("c,ab"), &e("H[ac,bc,ab,cab]")).unwrap();
        assert_eq!(got, e("H[a,bc,cab] + H[a,bc,ab,c] + H[ac,b,cab] + H[ac,b,ab,c]"));
        let x = e("H[ab,c]");
        assert_eq!(mrperp(&Sentence::empty(), &x).unwrap(), x);
    }

    #[test]
    fn creation_examples() {
        let one = e("H[()]");
        assert_eq!(bernstein(&al().word("def").unwrap(), &one).unwrap(), e("H[def]"));
        let want = e("H[abc,def] - H[abcf,de] - H[abcef,d] + H[abcfe,d] - H[abcdef] + H[abcefd] + H[abcfde] - H[abcfed]");
        assert_eq!(immaculate_in_h(&s("abc,def"), &al()), want);
        assert_eq!(immaculate_in_h(&s("a,b"), &al()), e("H[a,b] - H[ab]"));
        assert!(bernstein(&Word::default(), &one).is_err());
    }

    #[test]
    fn fast_path_matches_operators() {
        for t in ["a,b,a", "a,a", "b,a,b,a"] {
            let j = s(t);
            let (first, rest) = j.words().split_first().unwrap();
            let tail = single_letter_im_h(&Sentence::from_words(rest.iter().cloned()));
            assert_eq!(bernstein_terms(first, &tail), single_letter_im_h(&j), "{t}");
        }
    }

    #[test]
    fn kostka_route_agrees() {
        for t in ["ab,cb", "abc,def", "a,cb,b", "b,a"] {
            assert_eq!(immaculate_in_h(&s(t), &al()), immaculate_in_h_via_kostka(&s(t), &al()), "{t}");
        }
    }

    #[test]
    fn immaculate_to_ribbon() {
        let got = convert(&e("IM[a,cb,b]"), BasisTag::R).unwrap();
        assert_eq!(got, e("R[a,cb,b] - R[ab,cb] + R[abb,c] - R[ab,c,b]"));
    }

    #[test]
    fn pieri_example() {
        let got = pieri(&s("ab,bc"), &al().word("ca").unwrap(), &al());
        assert_eq!(got.len(), 6);
        assert_eq!(got.coef(&s("ab,bc,ca")), int(1));
        assert_eq!(pieri(&Sentence::empty(), &al().word("ca").unwrap(), &al()), e("IM[ca]"));
        let h = product_h(&immaculate_in_h(&s("ab,bc"), &al()), &e("H[ca]")).unwrap();
        assert_eq!(h_to_im_by_creation(h.terms()).unwrap(), got.terms().clone());
    }

    #[test]
    fn round_trips() {
        for t in ["H[ab,c]", "R[a,b,c]", "E[ab,c]", "IM[ab,cb]", "RSIM[ab,cb]", "IM[a,cb,b]"] {
            let x = e(t);
            for mid in [BasisTag::H, BasisTag::R, BasisTag::E, BasisTag::IM, BasisTag::RSIM] {
                let there = convert(&x, mid).unwrap();
                assert_eq!(convert(&there, x.tag()).unwrap(), x, "{t} via {mid}");
            }
        }
    }

    #[test]
    fn hopf_examples() {
        assert_eq!(product_h(&e("H[ab]"), &e("H[c,d]")).unwrap(), e("H[ab,c,d]"));
        assert_eq!(coproduct_h(&e("H[ab]")).unwrap().render(), "H[()] @ H[ab] + H[a] @ H[b] + H[ab] @ H[()]");
        assert_eq!(antipode_h(&e("H[a]")).unwrap(), e("-H[a]"));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&e("E[ab]")).unwrap(), e("H[ab]"));
        assert_eq!(psi(&e("R[abc,de]")).unwrap(), e("R[a,b,cd,e]"));
        assert_eq!(psi(&e("IM[ab,cb]")).unwrap(), e("RSIM[ab,cb]"));
    }

    #[test]
    fn pairing() {
        assert_eq!(pair(&e("H[ab,c]"), &e("M[ab,c]")).unwrap(), int(1));
        assert_eq!(pair(&e("IM[ab,cb]"), &e("DI[ab,cb]")).unwrap(), int(1));
        assert_eq!(pair(&e("IM[ab,cb]"), &e("DI[a,cb,b]")).unwrap(), int(0));
        assert_eq!(pair(&e("R[ab,c]"), &e("F[ab,c]")).unwrap(), int(1));
        assert_eq!(pair(&e("RSIM[a,cb]"), &e("RSDI[a,cb]")).unwrap(), int(1));
    }
}
