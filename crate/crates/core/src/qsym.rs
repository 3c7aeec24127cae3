//! The QSym side: M, F, DI and RSDI bases, conversions, Hopf structure and psi.

use std::collections::{BTreeMap, HashMap, HashSet};

use num::One;

use crate::descent::InverseCache;
use crate::error::{Error, Result};
use crate::linear::{int, BasisTag, Expr, LinComb, Scalar, Side, TensorExpr, Terms};
use crate::sentence::{quasishuffle, Sentence, Word};
use crate::tableau::{descent_buckets, packed_type_counts, Variant};

fn require_side(e: &Expr, side: Side) -> Result<()> {
    if e.side() != side {
        return Err(Error::WrongSide { tag: e.tag().to_string(), side: side.to_string() });
    }
    Ok(())
}

fn counts_to_terms(m: BTreeMap<Sentence, u64>) -> Terms {
    m.into_iter().map(|(s, c)| (s, int(c as i64))).collect()
}

/// Change of basis on the QSym side with memoized single-sentence expansions.
#[derive(Default)]
pub struct QsymConverter {
    inverse: InverseCache,
    memo: HashMap<(BasisTag, BasisTag, Sentence), Terms>,
    back_active: HashSet<Sentence>,
}

impl QsymConverter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn convert(&mut self, e: &Expr, target: BasisTag) -> Result<Expr> {
        require_side(e, Side::QSym)?;
        if target.side() != Side::QSym {
            return Err(Error::WrongSide { tag: target.to_string(), side: Side::QSym.to_string() });
        }
        let integral = e.terms().is_integral();
        let mut out = Terms::new();
        for (s, c) in e.terms().iter() {
            let img = self.expand(e.tag(), s, target)?;
            out.add_scaled(&img, c);
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
            (F, M) => s.refinements().into_iter().map(|j| (j, int(1))).collect(),
            (M, F) => s.refinements().into_iter().map(|j| (j.clone(), sign(j.len() - s.len()))).collect(),
            (DI, M) => counts_to_terms(packed_type_counts(s, &Sentence::empty(), Variant::Immaculate)?),
            (RSDI, M) => counts_to_terms(packed_type_counts(s, &Sentence::empty(), Variant::RowStrict)?),
            (DI, F) => counts_to_terms(descent_buckets(s, Variant::Immaculate)),
            (RSDI, F) => counts_to_terms(descent_buckets(s, Variant::RowStrict)),
            (F, DI) => self.inverse.row(s)?,
            (F, RSDI) => self.inverse.row(&s.complement())?,
            (M, DI) => self.m_to_di(s)?,
            (M, RSDI) => {
                let f = self.expand(M, s, F)?;
                self.expand_terms(F, &f, RSDI)?
            }
            _ => {
                let m = self.expand(from, s, M)?;
                self.expand_terms(M, &m, to)?
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

    /// M_J = DI_J - Σ_{B != J} K_{J,B} M_B, recursing down the unitriangular order.
    fn m_to_di(&mut self, j: &Sentence) -> Result<Terms> {
        if !self.back_active.insert(j.clone()) {
            return Err(Error::Cycle(format!("back-substitution revisits {j:?}")));
        }
        let row = self.expand(BasisTag::DI, j, BasisTag::M)?;
        if row.get(j) != int(1) {
            self.back_active.remove(j);
            return Err(Error::NonIntegral { coef: row.get(j).to_string(), context: "dual immaculate diagonal".into() });
        }
        let mut out = Terms::single(j.clone(), Scalar::one());
        for (b, k) in row.iter() {
            if b == j {
                continue;
            }
            let sub = self.expand(BasisTag::M, b, BasisTag::DI)?;
            out.add_scaled(&sub, &-k.clone());
        }
        self.back_active.remove(j);
        Ok(out)
    }
}

fn sign(k: usize) -> Scalar {
    if k % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

pub fn convert(e: &Expr, target: BasisTag) -> Result<Expr> {
    QsymConverter::new().convert(e, target)
}

fn same_alphabet(a: &Expr, b: &Expr) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch(a.alphabet().as_string(), b.alphabet().as_string()));
    }
    Ok(())
}

/// Product through the M basis; the result is written in the basis of `e1`.
pub fn product(e1: &Expr, e2: &Expr) -> Result<Expr> {
    require_side(e1, Side::QSym)?;
    require_side(e2, Side::QSym)?;
    same_alphabet(e1, e2)?;
    let mut conv = QsymConverter::new();
    let a = conv.convert(e1, BasisTag::M)?;
    let b = conv.convert(e2, BasisTag::M)?;
    let mut out = Terms::new();
    for (i, ci) in a.terms().iter() {
        for (j, cj) in b.terms().iter() {
            let c = ci * cj;
            for k in quasishuffle(i, j) {
                out.add_term(k, c.clone());
            }
        }
    }
    conv.convert(&a.with_terms(BasisTag::M, out), e1.tag())
}

/// Deconcatenation on M; DI and RSDI go through skew functions.
pub fn coproduct(e: &Expr) -> Result<TensorExpr> {
    match e.tag() {
        BasisTag::M => {
            let mut terms = LinComb::new();
            for (s, c) in e.terms().iter() {
                let w = s.words();
                for k in 0..=w.len() {
                    let l = Sentence::from_words(w[..k].iter().cloned());
                    let r = Sentence::from_words(w[k..].iter().cloned());
                    terms.add_term((l, r), c.clone());
                }
            }
            Ok(TensorExpr { tags: (BasisTag::M, BasisTag::M), alphabet: e.alphabet().clone(), terms })
        }
        BasisTag::DI | BasisTag::RSDI => {
            let variant = if e.tag() == BasisTag::DI { Variant::Immaculate } else { Variant::RowStrict };
            let mut terms = LinComb::new();
            for (s, c) in e.terms().iter() {
                let t = crate::skew::coproduct_di(s, e.alphabet(), variant)?;
                terms.add_scaled(&t.terms, c);
            }
            Ok(TensorExpr { tags: (e.tag(), e.tag()), alphabet: e.alphabet().clone(), terms })
        }
        other => Err(Error::Unsupported { op: "coproduct", tag: other.to_string() }),
    }
}

/// S*(M_I) = (-1)^{ℓ(I)} Σ_{J : J^r ⪰ I} M_J.
pub fn antipode_m(e: &Expr) -> Result<Expr> {
    if e.tag() != BasisTag::M {
        return Err(Error::Unsupported { op: "antipode", tag: e.tag().to_string() });
    }
    let out = e.terms().flat_map(|i| {
        let sg = sign(i.len());
        i.coarsenings().into_iter().map(|c| (c.reversal(), sg.clone())).collect()
    });
    Ok(e.with_terms(BasisTag::M, out))
}

/// psi(F_J) = F_{J^c}; the result is written in the psi-partner basis.
pub fn psi(e: &Expr) -> Result<Expr> {
    require_side(e, Side::QSym)?;
    let mut conv = QsymConverter::new();
    let f = conv.convert(e, BasisTag::F)?;
    let flipped = f.terms().map_keys(Sentence::complement);
    conv.convert(&f.with_terms(BasisTag::F, flipped), e.tag().psi_partner())
}

/// x_{w1,j1} ··· x_{wm,jm} with strictly increasing positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMonomial(pub Vec<(Word, usize)>);

/// Letters at a shared position concatenate in factor order.
pub fn monomial_multiply(a: &ColoredMonomial, b: &ColoredMonomial) -> ColoredMonomial {
    let mut out: Vec<(Word, usize)> = Vec::with_capacity(a.0.len() + b.0.len());
    let (mut i, mut j) = (0, 0);
    while i < a.0.len() || j < b.0.len() {
        let pa = a.0.get(i).map(|x| x.1);
        let pb = b.0.get(j).map(|x| x.1);
        match (pa, pb) {
            (Some(x), Some(y)) if x == y => {
                out.push((a.0[i].0.concat(&b.0[j].0), x));
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a.0[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a.0[i].clone());
                i += 1;
            }
            _ => {
                out.push(b.0[j].clone());
                j += 1;
            }
        }
    }
    ColoredMonomial(out)
}

/// Truncation of an M-expression to variables at positions 1..=positions.
pub fn realize(e: &Expr, positions: usize) -> Result<LinComb<ColoredMonomial>> {
    if e.tag() != BasisTag::M {
        return Err(Error::Unsupported { op: "realize", tag: e.tag().to_string() });
    }
    let mut out = LinComb::new();
    for (s, c) in e.terms().iter() {
        let k = s.len();
        let mut pos: Vec<usize> = (1..=k).collect();
        if k > positions {
            continue;
        }
        loop {
            let mono = ColoredMonomial(s.words().iter().cloned().zip(pos.iter().copied()).collect());
            out.add_term(mono, c.clone());
            // next increasing tuple
            let mut idx = k;
            loop {
                if idx == 0 {
                    break;
                }
                idx -= 1;
                if pos[idx] < positions - (k - 1 - idx) {
                    pos[idx] += 1;
                    for t in idx + 1..k {
                        pos[t] = pos[t - 1] + 1;
                    }
                    idx = usize::MAX;
                    break;
                }
            }
            if idx != usize::MAX {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sentence::Alphabet;

    fn abc() -> Alphabet {
        Alphabet::new("abcdef").unwrap()
    }

    fn e(t: &str) -> Expr {
        Expr::parse(t, &abc()).unwrap()
    }

    #[test]
    fn dual_immaculate_to_monomial_has_coefficient_two() {
        let m = convert(&e("DI[ab,cb]"), BasisTag::M).unwrap();
        assert_eq!(m.coef(&abc().sentence("a,cb,b").unwrap()), int(2));
        assert_eq!(m.coef(&abc().sentence("ab,cb").unwrap()), int(1));
    }

    #[test]
    fn fundamental_to_dual_immaculate() {
        let got = convert(&e("F[ab,cbb]"), BasisTag::DI).unwrap();
        assert_eq!(got, e("DI[ab,cbb] - DI[a,cbb,b] + DI[a,c,bbb] - DI[a,cbbb]"));
    }

    #[test]
    fn round_trips() {
        for t in ["F[ab,cbb]", "M[a,b,c]", "DI[ab,cb]", "RSDI[ab,cb]", "F[abc]"] {
            let x = e(t);
            for mid in [BasisTag::M, BasisTag::F, BasisTag::DI, BasisTag::RSDI] {
                let there = convert(&x, mid).unwrap();
                assert_eq!(convert(&there, x.tag()).unwrap(), x, "{t} via {mid}");
            }
        }
    }

    #[test]
    fn product_example() {
        let got = product(&e("DI[ab]"), &e("DI[c]")).unwrap();
        assert_eq!(got, e("DI[abc] + DI[c,ab] + DI[ac,b] - DI[a,bc]"));
        let i = e("M[ab,c]");
        assert_eq!(product(&i, &e("M[()]")).unwrap(), i);
    }

    #[test]
    fn coproduct_m() {
        let t = coproduct(&e("M[a,bc]")).unwrap();
        assert_eq!(t.terms.len(), 3);
        assert_eq!(t.render(), "M[()] @ M[a,bc] + M[a] @ M[bc] + M[a,bc] @ M[()]");
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode_m(&e("M[a]")).unwrap(), e("-M[a]"));
        assert_eq!(antipode_m(&e("M[a,b]")).unwrap(), e("M[b,a] + M[ab]"));
        // μ(S ⊗ id)Δ vanishes in positive degree
        let x = e("M[a,b]");
        let mut total = Expr::zero(BasisTag::M, &abc());
        for ((l, r), c) in coproduct(&x).unwrap().terms.iter() {
            let sl = antipode_m(&Expr::basis(BasisTag::M, &abc(), l.clone())).unwrap();
            let p = product(&sl, &Expr::basis(BasisTag::M, &abc(), r.clone())).unwrap();
            total = total.add(&p.scale(c)).unwrap();
        }
        assert!(total.is_zero());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&e("F[abc,de]")).unwrap(), e("F[a,b,cd,e]"));
        assert_eq!(psi(&e("DI[ab,cb]")).unwrap(), e("RSDI[ab,cb]"));
        let x = e("2*M[ab,c] - M[a,b]");
        assert_eq!(psi(&psi(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn realize_examples() {
        let r = realize(&e("M[a,bc]"), 3).unwrap();
        assert_eq!(r.len(), 3);
        let r = realize(&e("M[()]"), 4).unwrap();
        assert_eq!(r.len(), 1);
        let w = |t: &str| abc().word(t).unwrap();
        let m1 = ColoredMonomial(vec![(w("a"), 2), (w("b"), 3)]);
        let m2 = ColoredMonomial(vec![(w("c"), 2)]);
        assert_eq!(monomial_multiply(&m1, &m2), ColoredMonomial(vec![(w("ac"), 2), (w("b"), 3)]));
    }

    #[test]
    fn wrong_side_rejected() {
        assert!(convert(&e("H[a]"), BasisTag::M).is_err());
        assert!(convert(&e("M[a]"), BasisTag::H).is_err());
        assert!(antipode_m(&e("F[a]")).is_err());
    }
}
