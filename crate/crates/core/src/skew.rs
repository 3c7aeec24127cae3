//! The colored immaculate poset, skew dual immaculate functions and structure constants.

use std::collections::BTreeMap;

use num::Zero;

use crate::error::{Error, Result};
use crate::linear::{int, BasisTag, Expr, LinComb, Scalar, TensorExpr, Terms};
use crate::nsym::NsymConverter;
use crate::sentence::{left_quotient, Alphabet, Color, Sentence, Word};
use crate::tableau::{packed_type_counts, Tableau, Variant};

/// `upper` is `lower` with `color` appended to row `row` (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverEdge {
    pub lower: Sentence,
    pub upper: Sentence,
    pub row: usize,
    pub color: Color,
}

fn append(j: &Sentence, row: usize, color: Color) -> Sentence {
    let mut words = j.words().to_vec();
    if row > words.len() {
        words.push(Word(vec![color]));
    } else {
        words[row - 1].0.push(color);
    }
    Sentence::from_words(words)
}

/// All (ℓ(J)+1)·|A| covers above J.
pub fn covers(j: &Sentence, alphabet: &Alphabet) -> Vec<CoverEdge> {
    let mut out = Vec::new();
    for row in 1..=j.len() + 1 {
        for color in alphabet.colors() {
            out.push(CoverEdge { lower: j.clone(), upper: append(j, row, color), row, color });
        }
    }
    out
}

fn require_contained(j: &Sentence, i: &Sentence) -> Result<()> {
    if left_quotient(i, &j.to_weak()).is_none() {
        return Err(Error::NotContained { inner: format!("{j:?}"), outer: format!("{i:?}") });
    }
    Ok(())
}

/// Every saturated chain from J up to I.
pub fn chains(j: &Sentence, i: &Sentence) -> Result<Vec<Vec<CoverEdge>>> {
    require_contained(j, i)?;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    chain_rec(j, i, &mut cur, &mut out);
    Ok(out)
}

fn chain_rec(k: &Sentence, i: &Sentence, cur: &mut Vec<CoverEdge>, out: &mut Vec<Vec<CoverEdge>>) {
    if k.size() == i.size() {
        out.push(cur.clone());
        return;
    }
    let target = i.words();
    let mut moves = Vec::new();
    for (r, w) in k.words().iter().enumerate() {
        if w.len() < target[r].len() {
            moves.push((r + 1, target[r].0[w.len()]));
        }
    }
    if k.len() < i.len() {
        moves.push((k.len() + 1, target[k.len()].0[0]));
    }
    for (row, color) in moves {
        let upper = append(k, row, color);
        cur.push(CoverEdge { lower: k.clone(), upper: upper.clone(), row, color });
        chain_rec(&upper, i, cur, out);
        cur.pop();
    }
}

/// Numbers the boxes added along a chain 1, 2, ... in order.
pub fn chain_to_tableau(chain: &[CoverEdge]) -> Result<Tableau> {
    let (Some(first), Some(last)) = (chain.first(), chain.last()) else {
        return Err(Error::Parse { pos: 0, msg: "empty chain".into() });
    };
    let inner = first.lower.clone();
    let outer = last.upper.clone();
    let mut rows: Vec<Vec<u32>> = outer.words().iter().map(|w| vec![0; w.len()]).collect();
    let mut lens: Vec<usize> = inner.words().iter().map(Word::len).collect();
    for (step, e) in chain.iter().enumerate() {
        if step > 0 && chain[step - 1].upper != e.lower {
            return Err(Error::Parse { pos: step, msg: "chain is not connected".into() });
        }
        let r = e.row - 1;
        if r == lens.len() {
            lens.push(0);
        }
        if r >= rows.len() || lens[r] >= rows[r].len() {
            return Err(Error::Parse { pos: step, msg: "cover leaves the outer shape".into() });
        }
        rows[r][lens[r]] = step as u32 + 1;
        lens[r] += 1;
    }
    Tableau::skew(outer, inner, rows, Variant::Immaculate)
}

/// Basis into which a skew function is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkewTarget {
    M,
    F,
    DI,
}

fn content_difference(i: &Sentence, j: &Sentence) -> Vec<Color> {
    let mut rest = i.content();
    for c in j.content() {
        if let Some(p) = rest.iter().position(|&x| x == c) {
            rest.remove(p);
        }
    }
    rest
}

/// Skew (row-strict) dual immaculate function of shape I/J in the requested basis.
///
/// M coefficients count skew tableaux; F and DI coefficients are pairings
/// ⟨𝔖_J R_K, 𝔖*_I⟩ and ⟨𝔖_J 𝔖_K, 𝔖*_I⟩ (row-strict counterparts for the other variant).
pub fn skew_expand(i: &Sentence, j: &Sentence, target: SkewTarget, variant: Variant, alphabet: &Alphabet) -> Result<Expr> {
    require_contained(j, i)?;
    let (im_tag, di_tag) = match variant {
        Variant::Immaculate => (BasisTag::IM, BasisTag::DI),
        Variant::RowStrict => (BasisTag::RSIM, BasisTag::RSDI),
    };
    if target == SkewTarget::M {
        let terms = packed_type_counts(i, j, variant)?.into_iter().map(|(s, c)| (s, int(c as i64))).collect();
        return Ok(Expr::from_terms(BasisTag::M, alphabet, terms));
    }
    let (k_tag, out_tag) = match target {
        SkewTarget::F => (BasisTag::R, BasisTag::F),
        _ => (im_tag, di_tag),
    };
    let dual: BTreeMap<Sentence, u64> = packed_type_counts(i, &Sentence::empty(), variant)?;
    let mut conv = NsymConverter::new();
    let left = conv.expand(im_tag, j, BasisTag::H)?;
    let mut terms = Terms::new();
    for k in Sentence::all_with_content(&content_difference(i, j)) {
        let right = conv.expand(k_tag, &k, BasisTag::H)?;
        let mut total = Scalar::zero();
        for (a, ca) in left.iter() {
            for (b, cb) in right.iter() {
                if let Some(&d) = dual.get(&a.concat(b)) {
                    total += ca * cb * int(d as i64);
                }
            }
        }
        terms.add_term(k, total);
    }
    Ok(Expr::from_terms(out_tag, alphabet, terms))
}

/// 𝔖_J·𝔖_K in the IM basis (or ℜ𝔖_J·ℜ𝔖_K in RSIM).
pub fn structure_constants(j: &Sentence, k: &Sentence, variant: Variant, alphabet: &Alphabet) -> Result<Expr> {
    let tag = match variant {
        Variant::Immaculate => BasisTag::IM,
        Variant::RowStrict => BasisTag::RSIM,
    };
    let mut conv = NsymConverter::new();
    let a = conv.expand(tag, j, BasisTag::H)?;
    let b = conv.expand(tag, k, BasisTag::H)?;
    let mut prod = Terms::new();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            prod.add_term(x.concat(y), cx * cy);
        }
    }
    conv.convert(&Expr::from_terms(BasisTag::H, alphabet, prod), tag)
}

/// Σ_{J ⊆_L I} DI[J] ⊗ 𝔖*_{I/J} (RSDI for the row-strict variant).
pub fn coproduct_di(i: &Sentence, alphabet: &Alphabet, variant: Variant) -> Result<TensorExpr> {
    let tag = match variant {
        Variant::Immaculate => BasisTag::DI,
        Variant::RowStrict => BasisTag::RSDI,
    };
    let mut terms = LinComb::new();
    for j in left_contained(i) {
        let skew = skew_expand(i, &j, SkewTarget::DI, variant, alphabet)?;
        for (k, c) in skew.terms().iter() {
            terms.add_term((j.clone(), k.clone()), c.clone());
        }
    }
    Ok(TensorExpr { tags: (tag, tag), alphabet: alphabet.clone(), terms })
}

/// Every sentence J with J ⊆_L I: non-empty prefixes of the first ℓ(J) rows.
pub fn left_contained(i: &Sentence) -> Vec<Sentence> {
    let mut out = vec![Sentence::empty()];
    let mut prefixes: Vec<Vec<Word>> = vec![Vec::new()];
    for w in i.words() {
        let mut next = Vec::new();
        for p in &prefixes {
            for k in 1..=w.len() {
                let mut q = p.clone();
                q.push(Word(w.0[..k].to_vec()));
                out.push(Sentence::from_words(q.iter().cloned()));
                next.push(q);
            }
        }
        prefixes = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym;

    fn al() -> Alphabet {
        Alphabet::new("abcdef").unwrap()
    }

    fn s(t: &str) -> Sentence {
        al().sentence(t).unwrap()
    }

    #[test]
    fn cover_counts() {
        let ab = Alphabet::new("ab").unwrap();
        assert_eq!(covers(&s("a"), &ab).len(), 4);
        assert_eq!(covers(&Sentence::empty(), &ab).len(), 2);
    }

    #[test]
    fn chain_replay() {
        let path = ["()", "a", "a,d", "a,de", "ab,de", "ab,def", "abc,def"];
        let all = chains(&Sentence::empty(), &s("abc,def")).unwrap();
        let hit = all
            .iter()
            .find(|c| c.iter().map(|e| e.upper.clone()).eq(path[1..].iter().map(|t| s(t))))
            .expect("chain present");
        let t = chain_to_tableau(hit).unwrap();
        assert_eq!(t.rows(), &[vec![1, 4, 6], vec![2, 3, 5]]);
        let sub = chains(&s("a,de"), &s("abc,def")).unwrap();
        let hit = sub.iter().find(|c| c[0].upper == s("ab,de") && c[1].upper == s("ab,def")).unwrap();
        assert_eq!(chain_to_tableau(hit).unwrap().rows(), &[vec![0, 1, 3], vec![0, 0, 2]]);
        assert!(chains(&s("b"), &s("abc")).is_err());
    }

    #[test]
    fn skew_trivial_cases() {
        let i = s("ab,cb");
        let same = skew_expand(&i, &i, SkewTarget::DI, Variant::Immaculate, &al()).unwrap();
        assert_eq!(same.render(), "DI[()]");
        let straight = skew_expand(&i, &Sentence::empty(), SkewTarget::M, Variant::Immaculate, &al()).unwrap();
        let di = Expr::basis(BasisTag::DI, &al(), i.clone());
        assert_eq!(straight, qsym::convert(&di, BasisTag::M).unwrap());
    }

    #[test]
    fn skew_routes_agree() {
        for (outer, inner) in [("ab,cdef", "a,cde"), ("abc,def", "a,de"), ("ab,cb", "a")] {
            for v in [Variant::Immaculate, Variant::RowStrict] {
                let m = skew_expand(&s(outer), &s(inner), SkewTarget::M, v, &al()).unwrap();
                let f = skew_expand(&s(outer), &s(inner), SkewTarget::F, v, &al()).unwrap();
                let d = skew_expand(&s(outer), &s(inner), SkewTarget::DI, v, &al()).unwrap();
                assert_eq!(qsym::convert(&f, BasisTag::M).unwrap(), m, "{outer}/{inner}");
                assert_eq!(qsym::convert(&d, BasisTag::M).unwrap(), m, "{outer}/{inner}");
            }
        }
    }

    #[test]
    fn structure_constants_pieri_case() {
        let got = structure_constants(&s("ab"), &s("c"), Variant::Immaculate, &al()).unwrap();
        assert_eq!(got.render(), "IM[abc] + IM[ab,c]");
        let unit = structure_constants(&Sentence::empty(), &s("ab,c"), Variant::Immaculate, &al()).unwrap();
        assert_eq!(unit.render(), "IM[ab,c]");
    }

    #[test]
    fn coproduct_degree_one() {
        let t = coproduct_di(&s("a"), &al(), Variant::Immaculate).unwrap();
        assert_eq!(t.render(), "DI[()] @ DI[a] + DI[a] @ DI[()]");
    }
}
