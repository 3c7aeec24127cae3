//! Property batteries runnable from the command line.

use std::fmt;

use num::Zero;
use serde::Serialize;

use crate::descent::vertex_count;
use crate::error::{Error, Result};
use crate::linear::{int, BasisTag, Expr, LinComb, Terms};
use crate::nsym::{self, NsymConverter};
use crate::qsym::{self, monomial_multiply, realize, ColoredMonomial, QsymConverter};
use crate::sentence::{Alphabet, Sentence, Word};
use crate::tableau::{packed_type_counts, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Duality,
    Roundtrip,
    Pieri,
    Psi,
    Antipode,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Duality, Suite::Roundtrip, Suite::Pieri, Suite::Psi, Suite::Antipode, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Roundtrip => "roundtrip",
            Suite::Pieri => "pieri",
            Suite::Psi => "psi",
            Suite::Antipode => "antipode",
            Suite::Oracle => "oracle",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub name: String,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    fn new(suite: Suite) -> Self {
        Report { suite: suite.name().into(), checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, name: &str, input: impl FnOnce() -> String, expected: &str, got: &str) {
        self.checks += 1;
        if expected != got {
            self.failures.push(Failure {
                name: name.into(),
                input: input(),
                expected: expected.into(),
                got: got.into(),
            });
        }
    }

    fn check_expr(&mut self, name: &str, input: impl FnOnce() -> String, expected: &Expr, got: &Expr) {
        self.checks += 1;
        if expected != got {
            self.failures.push(Failure {
                name: name.into(),
                input: input(),
                expected: expected.render(),
                got: got.render(),
            });
        }
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("OK: {} {} checks passed", self.checks, self.suite)
        } else {
            format!("FAIL: {} of {} {} checks failed", self.failures.len(), self.checks, self.suite)
        }
    }
}

/// Runs one battery over every sentence of size at most `max_degree`.
pub fn run(suite: Suite, alphabet: &Alphabet, max_degree: usize, cap: u128) -> Result<Report> {
    let count = vertex_count(max_degree, alphabet.len());
    if count > cap {
        return Err(Error::CapExceeded { what: "sentences per degree", count, cap });
    }
    let mut report = Report::new(suite);
    match suite {
        Suite::Duality => duality(alphabet, max_degree, &mut report)?,
        Suite::Roundtrip => roundtrip(alphabet, max_degree, &mut report)?,
        Suite::Pieri => pieri(alphabet, max_degree, &mut report)?,
        Suite::Psi => psi(alphabet, max_degree, &mut report)?,
        Suite::Antipode => antipode(alphabet, max_degree, &mut report)?,
        Suite::Oracle => oracle(alphabet, max_degree, &mut report)?,
    }
    Ok(report)
}

fn sentences(alphabet: &Alphabet, n: usize) -> Vec<Sentence> {
    Sentence::all_of_size(n, alphabet.len())
}

fn basis(tag: BasisTag, alphabet: &Alphabet, s: &Sentence) -> Expr {
    Expr::basis(tag, alphabet, s.clone())
}

fn dot(h: &Terms, m: &Terms) -> crate::linear::Scalar {
    let mut total = crate::linear::Scalar::zero();
    for (s, c) in h.iter() {
        total += c * m.get(s);
    }
    total
}

fn duality(alphabet: &Alphabet, max_degree: usize, report: &mut Report) -> Result<()> {
    let mut conv = NsymConverter::new();
    for (im, variant) in [(BasisTag::IM, Variant::Immaculate), (BasisTag::RSIM, Variant::RowStrict)] {
        let di = if im == BasisTag::IM { BasisTag::DI } else { BasisTag::RSDI };
        for n in 0..=max_degree {
            let all = sentences(alphabet, n);
            let mut duals = Vec::with_capacity(all.len());
            for j in &all {
                let m: Terms =
                    packed_type_counts(j, &Sentence::empty(), variant)?.into_iter().map(|(s, c)| (s, int(c as i64))).collect();
                duals.push(m);
            }
            for i in &all {
                let h = conv.expand(im, i, BasisTag::H)?;
                for (j, m) in all.iter().zip(&duals) {
                    let want = if i == j { int(1) } else { int(0) };
                    let got = dot(&h, m);
                    report.check(
                        "pairing",
                        || format!("{}[{}] ; {}[{}]", im, alphabet.render(i), di, alphabet.render(j)),
                        &want.to_string(),
                        &got.to_string(),
                    );
                }
            }
        }
    }
    Ok(())
}

fn roundtrip(alphabet: &Alphabet, max_degree: usize, report: &mut Report) -> Result<()> {
    let q_tags = [BasisTag::M, BasisTag::F, BasisTag::DI, BasisTag::RSDI];
    let n_tags = [BasisTag::H, BasisTag::E, BasisTag::R, BasisTag::IM, BasisTag::RSIM];
    let mut qc = QsymConverter::new();
    let mut nc = NsymConverter::new();
    for n in 0..=max_degree {
        for s in sentences(alphabet, n) {
            for &a in &q_tags {
                let x = basis(a, alphabet, &s);
                for &b in &q_tags {
                    let there = qc.convert(&x, b)?;
                    let back = qc.convert(&there, a)?;
                    report.check_expr("qsym round trip", || format!("{} via {}", x.render(), b), &x, &back);
                }
            }
            for &a in &n_tags {
                let x = basis(a, alphabet, &s);
                for &b in &n_tags {
                    let there = nc.convert(&x, b)?;
                    let back = nc.convert(&there, a)?;
                    report.check_expr("nsym round trip", || format!("{} via {}", x.render(), b), &x, &back);
                }
            }
        }
    }
    Ok(())
}

/// All non-empty words of length `n`.
pub fn words_of_length(alphabet: &Alphabet, n: usize) -> Vec<Word> {
    let mut out = vec![Word::default()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.colors().map(move |c| {
                    let mut w = w.clone();
                    w.0.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

fn pieri(alphabet: &Alphabet, max_degree: usize, report: &mut Report) -> Result<()> {
    for total in 1..=max_degree {
        for k in 1..=total {
            for w in words_of_length(alphabet, k) {
                for j in sentences(alphabet, total - k) {
                    let rule = nsym::pieri(&j, &w, alphabet);
                    let h = nsym::immaculate_in_h(&j, alphabet);
                    let hw = Expr::basis(BasisTag::H, alphabet, Sentence::from_words([w.clone()]));
                    let prod = nsym::product_h(&h, &hw)?;
                    let got = Expr::from_terms(BasisTag::IM, alphabet, nsym::h_to_im_by_creation(prod.terms())?);
                    report.check_expr(
                        "pieri",
                        || format!("IM[{}] * H[{}]", alphabet.render(&j), alphabet.render_word(&w)),
                        &rule,
                        &got,
                    );
                }
            }
        }
    }
    Ok(())
}

fn psi(alphabet: &Alphabet, max_degree: usize, report: &mut Report) -> Result<()> {
    for n in 0..=max_degree {
        let all = sentences(alphabet, n);
        for s in &all {
            for tag in BasisTag::ALL {
                let x = basis(tag, alphabet, s);
                let f = match tag.side() {
                    crate::linear::Side::QSym => qsym::psi,
                    crate::linear::Side::NSym => nsym::psi,
                };
                let back = f(&f(&x)?)?;
                report.check_expr("involution", || x.render(), &x, &back);
            }
            let pairs = [
                (BasisTag::E, BasisTag::H),
                (BasisTag::H, BasisTag::E),
                (BasisTag::IM, BasisTag::RSIM),
            ];
            for (from, to) in pairs {
                let x = basis(from, alphabet, s);
                report.check_expr("partner", || x.render(), &basis(to, alphabet, s), &nsym::psi(&x)?);
            }
            let x = basis(BasisTag::DI, alphabet, s);
            report.check_expr("partner", || x.render(), &basis(BasisTag::RSDI, alphabet, s), &qsym::psi(&x)?);
        }
    }
    // ψ(R_I R_J) = ψ(R_I) ψ(R_J)
    for total in 0..=max_degree {
        for a in 0..=total {
            for i in sentences(alphabet, a) {
                for j in sentences(alphabet, total - a) {
                    let ri = basis(BasisTag::R, alphabet, &i);
                    let rj = basis(BasisTag::R, alphabet, &j);
                    let lhs = nsym::psi(&nsym::product(&ri, &rj)?)?;
                    let rhs = nsym::product(&nsym::psi(&ri)?, &nsym::psi(&rj)?)?;
                    report.check_expr("morphism", || format!("{} * {}", ri.render(), rj.render()), &rhs, &lhs);
                }
            }
        }
    }
    Ok(())
}

/// μ(S ⊗ id)Δ(H_I) and μ(S* ⊗ id)Δ(M_I).
pub fn antipode_collapse(tag: BasisTag, alphabet: &Alphabet, s: &Sentence) -> Result<Expr> {
    let x = basis(tag, alphabet, s);
    let mut total = Expr::zero(tag, alphabet);
    let delta = match tag {
        BasisTag::H => nsym::coproduct_h(&x)?,
        BasisTag::M => qsym::coproduct(&x)?,
        other => return Err(Error::Unsupported { op: "antipode", tag: other.to_string() }),
    };
    for ((l, r), c) in delta.terms.iter() {
        let lx = basis(tag, alphabet, l);
        let rx = basis(tag, alphabet, r);
        let p = if tag == BasisTag::H {
            nsym::product_h(&nsym::antipode_h(&lx)?, &rx)?
        } else {
            qsym::product(&qsym::antipode_m(&lx)?, &rx)?
        };
        total = total.add(&p.scale(c))?;
    }
    Ok(total)
}

fn antipode(alphabet: &Alphabet, max_degree: usize, report: &mut Report) -> Result<()> {
    for n in 1..=max_degree {
        for s in sentences(alphabet, n) {
            for tag in [BasisTag::H, BasisTag::M] {
                let got = antipode_collapse(tag, alphabet, &s)?;
                report.check_expr(
                    "collapse",
                    || basis(tag, alphabet, &s).render(),
                    &Expr::zero(tag, alphabet),
                    &got,
                );
            }
        }
    }
    Ok(())
}

/// Product of two truncated realizations.
pub fn realized_product(a: &LinComb<ColoredMonomial>, b: &LinComb<ColoredMonomial>) -> LinComb<ColoredMonomial> {
    let mut out = LinComb::new();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_term(monomial_multiply(x, y), cx * cy);
        }
    }
    out
}

fn oracle(alphabet: &Alphabet, max_degree: usize, report: &mut Report) -> Result<()> {
    for total in 0..=max_degree {
        let positions = total + 1;
        for a in 0..=total {
            for i in sentences(alphabet, a) {
                let mi = basis(BasisTag::M, alphabet, &i);
                let ri = realize(&mi, positions)?;
                for j in sentences(alphabet, total - a) {
                    let mj = basis(BasisTag::M, alphabet, &j);
                    let want = realized_product(&ri, &realize(&mj, positions)?);
                    let got = realize(&qsym::product(&mi, &mj)?, positions)?;
                    report.checks += 1;
                    if want != got {
                        report.failures.push(Failure {
                            name: "realization".into(),
                            input: format!("{} * {}", mi.render(), mj.render()),
                            expected: format!("{} monomials", want.len()),
                            got: format!("{} monomials", got.len()),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_degree_two() {
        let ab = Alphabet::new("ab").unwrap();
        for suite in Suite::ALL {
            let r = run(suite, &ab, 2, 1_000_000).unwrap();
            assert!(r.passed(), "{:?}", r.failures.first());
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn cap_is_enforced() {
        let ab = Alphabet::new("ab").unwrap();
        assert!(matches!(run(Suite::Duality, &ab, 5, 10), Err(Error::CapExceeded { .. })));
    }
}
