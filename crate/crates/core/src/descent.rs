//! Descent graphs and their signed path-sum inverses.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::io::Write;

use num::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linear::{int, LinComb, Scalar, Terms};
use crate::sentence::{Alphabet, Composition, Sentence};
use crate::tableau::{descent_buckets, shapes_by_descent, Variant};

pub const DEFAULT_VERTEX_CAP: u128 = 1_000_000;

/// Memoized L^{-1} rows and columns of the immaculate descent graph, built on demand.
#[derive(Default)]
pub struct InverseCache {
    buckets: HashMap<Sentence, BTreeMap<Sentence, u64>>,
    rows: HashMap<Sentence, Terms>,
    columns: HashMap<Sentence, Terms>,
}

impl InverseCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edges I -> J (J != I) with weight L_{I,J}.
    pub fn out_edges(&mut self, i: &Sentence) -> Vec<(Sentence, u64)> {
        let b = self.buckets.entry(i.clone()).or_insert_with(|| descent_buckets(i, Variant::Immaculate));
        b.iter().filter(|(j, _)| *j != i).map(|(j, &w)| (j.clone(), w)).collect()
    }

    /// Σ_K L^{-1}_{I,K} K.
    pub fn row(&mut self, i: &Sentence) -> Result<Terms> {
        let mut active = HashSet::new();
        self.row_rec(i, &mut active)
    }

    fn row_rec(&mut self, i: &Sentence, active: &mut HashSet<Sentence>) -> Result<Terms> {
        if let Some(r) = self.rows.get(i) {
            return Ok(r.clone());
        }
        if !active.insert(i.clone()) {
            return Err(Error::Cycle(format!("{i:?}")));
        }
        let mut out = Terms::single(i.clone(), Scalar::one());
        for (j, w) in self.out_edges(i) {
            let sub = self.row_rec(&j, active)?;
            out.add_scaled(&sub, &-int(w as i64));
        }
        active.remove(i);
        self.rows.insert(i.clone(), out.clone());
        Ok(out)
    }

    /// Σ_I L^{-1}_{I,J} I, over all ancestors I of J.
    pub fn column(&mut self, j: &Sentence) -> Result<Terms> {
        if let Some(c) = self.columns.get(j) {
            return Ok(c.clone());
        }
        let mut ancestors: BTreeSet<Sentence> = BTreeSet::from([j.clone()]);
        let mut frontier = vec![j.clone()];
        while let Some(x) = frontier.pop() {
            for (p, _) in shapes_by_descent(&x, Variant::Immaculate) {
                if ancestors.insert(p.clone()) {
                    frontier.push(p);
                }
            }
        }
        // edges strictly increase word lengths lexicographically going backwards
        let mut order: Vec<Sentence> = ancestors.iter().cloned().collect();
        order.sort_by(|a, b| a.word_lengths().0.cmp(&b.word_lengths().0).then_with(|| a.cmp(b)));
        let mut d: HashMap<Sentence, Scalar> = HashMap::new();
        for x in &order {
            if x == j {
                d.insert(x.clone(), Scalar::one());
                continue;
            }
            let mut v = Scalar::zero();
            for (y, w) in self.out_edges(x) {
                if y.word_lengths().0 >= x.word_lengths().0 {
                    return Err(Error::Cycle(format!("{x:?} -> {y:?}")));
                }
                if let Some(dy) = d.get(&y) {
                    v -= int(w as i64) * dy;
                }
            }
            d.insert(x.clone(), v);
        }
        let out: Terms = d.into_iter().collect();
        self.columns.insert(j.clone(), out.clone());
        Ok(out)
    }
}

/// Weighted digraph on all sentences of one size.
#[derive(Clone, Debug)]
pub struct DescentGraph {
    degree: usize,
    alphabet: Alphabet,
    variant: Variant,
    /// Immaculate descent-composition buckets per shape, diagonal included.
    buckets: BTreeMap<Sentence, BTreeMap<Sentence, u64>>,
    edges: BTreeMap<Sentence, Vec<(Sentence, u64)>>,
}

impl DescentGraph {
    pub fn build(n: usize, alphabet: &Alphabet, variant: Variant) -> Result<Self> {
        Self::build_with_cap(n, alphabet, variant, DEFAULT_VERTEX_CAP)
    }

    pub fn build_with_cap(n: usize, alphabet: &Alphabet, variant: Variant, cap: u128) -> Result<Self> {
        let count = vertex_count(n, alphabet.len());
        if count > cap {
            return Err(Error::CapExceeded { what: "descent graph vertex count", count, cap });
        }
        let vertices = Sentence::all_of_size(n, alphabet.len());
        let built: Vec<_> = vertices
            .par_iter()
            .map(|i| {
                let imm = descent_buckets(i, Variant::Immaculate);
                let own = match variant {
                    Variant::Immaculate => imm.clone(),
                    Variant::RowStrict => descent_buckets(i, Variant::RowStrict),
                };
                let edges: Vec<(Sentence, u64)> = own.into_iter().filter(|(j, _)| j != i).collect();
                (i.clone(), imm, edges)
            })
            .collect();
        let mut buckets = BTreeMap::new();
        let mut edges = BTreeMap::new();
        for (i, b, e) in built {
            buckets.insert(i.clone(), b);
            edges.insert(i, e);
        }
        let g = DescentGraph { degree: n, alphabet: alphabet.clone(), variant, buckets, edges };
        if variant == Variant::Immaculate {
            if let Some(cycle) = g.find_cycle() {
                let names: Vec<String> = cycle.iter().map(|s| alphabet.render(s)).collect();
                return Err(Error::Cycle(names.join(" -> ")));
            }
        }
        Ok(g)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Sentence> {
        self.edges.keys()
    }

    pub fn out_edges(&self, i: &Sentence) -> &[(Sentence, u64)] {
        self.edges.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    /// Weight of I -> J, or 0 when absent.
    pub fn weight(&self, i: &Sentence, j: &Sentence) -> u64 {
        self.out_edges(i).iter().find(|(k, _)| k == j).map_or(0, |&(_, w)| w)
    }

    /// Entry L_{I,J} (row-strict: L^rs_{I,J}) including the diagonal.
    pub fn ell(&self, i: &Sentence, j: &Sentence) -> u64 {
        let target = match self.variant {
            Variant::Immaculate => j.clone(),
            Variant::RowStrict => j.complement(),
        };
        self.buckets.get(i).and_then(|b| b.get(&target)).copied().unwrap_or(0)
    }

    /// Some directed cycle among this graph's edges, if any.
    pub fn find_cycle(&self) -> Option<Vec<Sentence>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Open,
            Done,
        }
        let mut mark: HashMap<&Sentence, Mark> = self.edges.keys().map(|k| (k, Mark::New)).collect();
        for start in self.edges.keys() {
            if mark[start] != Mark::New {
                continue;
            }
            let mut stack: Vec<(&Sentence, usize)> = vec![(start, 0)];
            mark.insert(start, Mark::Open);
            while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
                let outs = self.out_edges(v);
                if *idx < outs.len() {
                    let w = &outs[*idx].0;
                    *idx += 1;
                    match mark.get(w).copied().unwrap_or(Mark::Done) {
                        Mark::New => {
                            mark.insert(w, Mark::Open);
                            stack.push((w, 0));
                        }
                        Mark::Open => {
                            let pos = stack.iter().position(|(x, _)| *x == w).unwrap();
                            let mut cyc: Vec<Sentence> = stack[pos..].iter().map(|(x, _)| (*x).clone()).collect();
                            cyc.push(w.clone());
                            return Some(cyc);
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark.insert(v, Mark::Done);
                    stack.pop();
                }
            }
        }
        None
    }

    /// Σ_K L^{-1}_{I,K} K via the recurrence L^{-1}_{I,K} = -Σ_{I→J} L_{I,J} L^{-1}_{J,K}.
    ///
    /// The row-strict inverse is read off the immaculate recurrence at the complement of I.
    pub fn inverse_row(&self, i: &Sentence) -> Result<Terms> {
        let start = match self.variant {
            Variant::Immaculate => i.clone(),
            Variant::RowStrict => i.complement(),
        };
        let mut memo: HashMap<Sentence, Terms> = HashMap::new();
        self.imm_row(&start, &mut memo, &mut HashSet::new())
    }

    fn imm_row(&self, i: &Sentence, memo: &mut HashMap<Sentence, Terms>, active: &mut HashSet<Sentence>) -> Result<Terms> {
        if let Some(r) = memo.get(i) {
            return Ok(r.clone());
        }
        if !active.insert(i.clone()) {
            return Err(Error::Cycle(self.alphabet.render(i)));
        }
        let mut out = Terms::single(i.clone(), Scalar::one());
        if let Some(b) = self.buckets.get(i) {
            for (j, &w) in b.iter().filter(|(j, _)| *j != i) {
                let sub = self.imm_row(j, memo, active)?;
                out.add_scaled(&sub, &-int(w as i64));
            }
        }
        active.remove(i);
        memo.insert(i.clone(), out.clone());
        Ok(out)
    }

    pub fn inverse_coeff(&self, i: &Sentence, k: &Sentence) -> Result<Scalar> {
        Ok(self.inverse_row(i)?.get(k))
    }

    /// Literal signed path enumeration (debugging aid; exponential).
    pub fn inverse_coeff_by_paths(&self, i: &Sentence, k: &Sentence) -> Scalar {
        let start = match self.variant {
            Variant::Immaculate => i.clone(),
            Variant::RowStrict => i.complement(),
        };
        let mut total = Scalar::zero();
        self.paths(&start, k, int(1), &mut total);
        total
    }

    fn paths(&self, v: &Sentence, target: &Sentence, acc: Scalar, total: &mut Scalar) {
        if v == target {
            *total += &acc;
        }
        if let Some(b) = self.buckets.get(v) {
            for (j, &w) in b.iter().filter(|(j, _)| *j != v) {
                self.paths(j, target, -&acc * int(w as i64), total);
            }
        }
    }

    /// Vertices reachable from `root` along this graph's edges, root included.
    pub fn reachable(&self, root: &Sentence) -> BTreeSet<Sentence> {
        let mut seen = BTreeSet::from([root.clone()]);
        let mut stack = vec![root.clone()];
        while let Some(v) = stack.pop() {
            for (w, _) in self.out_edges(&v) {
                if seen.insert(w.clone()) {
                    stack.push(w.clone());
                }
            }
        }
        seen
    }

    fn scope(&self, root: Option<&Sentence>) -> BTreeSet<Sentence> {
        match root {
            Some(r) => self.reachable(r),
            None => self.edges.keys().cloned().collect(),
        }
    }

    /// (from, to, weight) triples restricted to the subgraph reachable from `root`.
    pub fn edge_list(&self, root: Option<&Sentence>) -> Vec<(Sentence, Sentence, u64)> {
        let scope = self.scope(root);
        let mut out = Vec::new();
        for v in &scope {
            for (w, wt) in self.out_edges(v) {
                out.push((v.clone(), w.clone(), *wt));
            }
        }
        out
    }

    pub fn to_dot(&self, root: Option<&Sentence>) -> String {
        let a = &self.alphabet;
        let mut s = String::from("digraph descent {\n");
        for v in self.scope(root) {
            s.push_str(&format!("  \"{}\";\n", a.render(&v)));
        }
        for (v, w, wt) in self.edge_list(root) {
            s.push_str(&format!("  \"{}\" -> \"{}\" [label=\"{}\"];\n", a.render(&v), a.render(&w), wt));
        }
        s.push_str("}\n");
        s
    }

    pub fn write_csv<W: Write>(&self, root: Option<&Sentence>, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Parse { pos: 0, msg: e.to_string() };
        w.write_record(["from", "to", "weight"]).map_err(io)?;
        for (v, t, wt) in self.edge_list(root) {
            w.write_record([self.alphabet.render(&v), self.alphabet.render(&t), wt.to_string()]).map_err(io)?;
        }
        w.flush().map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
        Ok(())
    }

    /// Nonzero L^{-1}_{I,K} over all vertex pairs.
    pub fn inverse_table(&self) -> Result<BTreeMap<(Sentence, Sentence), Scalar>> {
        let mut out = BTreeMap::new();
        let mut memo = HashMap::new();
        for i in self.edges.keys() {
            let start = match self.variant {
                Variant::Immaculate => i.clone(),
                Variant::RowStrict => i.complement(),
            };
            for (k, c) in self.imm_row(&start, &mut memo, &mut HashSet::new())?.iter() {
                out.insert((i.clone(), k.clone()), c.clone());
            }
        }
        Ok(out)
    }
    /// CSV "from,to,coef" of the nonzero L^{-1} entries; `by_paths` enumerates paths instead.
    pub fn write_inverse_csv<W: Write>(&self, by_paths: bool, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Parse { pos: 0, msg: e.to_string() };
        w.write_record(["from", "to", "coef"]).map_err(io)?;
        let a = &self.alphabet;
        if by_paths {
            for i in self.edges.keys() {
                let start = match self.variant {
                    Variant::Immaculate => i.clone(),
                    Variant::RowStrict => i.complement(),
                };
                for k in self.imm_reachable(&start) {
                    let c = self.inverse_coeff_by_paths(i, &k);
                    if !c.is_zero() {
                        w.write_record([a.render(i), a.render(&k), c.to_string()]).map_err(io)?;
                    }
                }
            }
        } else {
            for ((i, k), c) in self.inverse_table()? {
                w.write_record([a.render(&i), a.render(&k), c.to_string()]).map_err(io)?;
            }
        }
        w.flush().map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
        Ok(())
    }

    fn imm_reachable(&self, root: &Sentence) -> BTreeSet<Sentence> {
        let mut seen = BTreeSet::from([root.clone()]);
        let mut stack = vec![root.clone()];
        while let Some(v) = stack.pop() {
            if let Some(b) = self.buckets.get(&v) {
                for j in b.keys() {
                    if seen.insert(j.clone()) {
                        stack.push(j.clone());
                    }
                }
            }
        }
        seen
    }
}

pub fn vertex_count(n: usize, k: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    (k as u128).pow(n as u32) * (1u128 << (n - 1))
}

/// L^{-1}_{α,β} for compositions of n: the one-letter graph relabeled by word lengths.
pub fn uncolored_coeffs(n: usize, variant: Variant) -> Result<LinComb<(Composition, Composition)>> {
    let one = Alphabet::new("a").expect("valid");
    let g = DescentGraph::build(n, &one, variant)?;
    let table = g.inverse_table()?;
    Ok(table.into_iter().map(|((i, k), c)| ((i.word_lengths(), k.word_lengths()), c)).collect())
}

/// CSV with header "from,to,coef"; compositions render as "(2,1)".
pub fn write_coeff_csv<W: Write>(table: &LinComb<(Composition, Composition)>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Parse { pos: 0, msg: e.to_string() };
    w.write_record(["from", "to", "coef"]).map_err(io)?;
    for ((a, b), c) in table.iter() {
        w.write_record([a.to_string(), b.to_string(), c.to_string()]).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new("abc").unwrap()
    }

    fn s(t: &str) -> Sentence {
        abc().sentence(t).unwrap()
    }

    #[test]
    fn figure_root_edges() {
        let g = DescentGraph::build(5, &abc(), Variant::Immaculate).unwrap();
        let mut outs: Vec<(String, u64)> = g.out_edges(&s("ab,cbb")).iter().map(|(j, w)| (abc().render(j), *w)).collect();
        outs.sort();
        assert_eq!(outs, vec![("a,cb,bb".into(), 1), ("a,cbb,b".into(), 1), ("a,cbbb".into(), 1)]);
        assert_eq!(g.weight(&s("ab,cb,b"), &s("a,cb,bb")), 2);
        let row = g.inverse_row(&s("ab,cbb")).unwrap();
        let mut got: Vec<(String, Scalar)> = row.iter().map(|(k, c)| (abc().render(k), c.clone())).collect();
        got.sort();
        assert_eq!(
            got,
            vec![("a,c,bbb".into(), int(1)), ("a,cbb,b".into(), int(-1)), ("a,cbbb".into(), int(-1)), ("ab,cbb".into(), int(1))]
        );
        let g4 = DescentGraph::build(4, &abc(), Variant::Immaculate).unwrap();
        assert_eq!(g4.inverse_coeff(&s("abb,c"), &s("a,cb,b")).unwrap(), int(1));
        assert_eq!(g4.inverse_coeff_by_paths(&s("abb,c"), &s("a,cb,b")), int(1));
    }

    #[test]
    fn degree_one_is_edgeless() {
        let g = DescentGraph::build(1, &abc(), Variant::Immaculate).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.to_dot(None).matches("->").count(), 0);
    }

    #[test]
    fn row_strict_root_neighbors() {
        let g = DescentGraph::build(5, &abc(), Variant::RowStrict).unwrap();
        let mut outs: Vec<(String, u64)> = g.out_edges(&s("ab,cbb")).iter().map(|(j, w)| (abc().render(j), *w)).collect();
        outs.sort();
        // complements of the immaculate out-neighbors plus the complement of the root
        assert_eq!(outs, vec![("a,bc,b,b".into(), 1), ("ac,b,b,b".into(), 1), ("ac,b,bb".into(), 1), ("ac,bb,b".into(), 1)]);
        assert!(g.find_cycle().is_some());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            DescentGraph::build_with_cap(4, &abc(), Variant::Immaculate, 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn lazy_matches_graph() {
        let g = DescentGraph::build(4, &abc(), Variant::Immaculate).unwrap();
        let mut lazy = InverseCache::new();
        for v in g.vertices() {
            assert_eq!(lazy.row(v).unwrap(), g.inverse_row(v).unwrap());
        }
        let col = lazy.column(&s("a,cb,b")).unwrap();
        for v in g.vertices() {
            assert_eq!(col.get(v), g.inverse_coeff(v, &s("a,cb,b")).unwrap());
        }
    }

    #[test]
    fn uncolored_small_table() {
        let t = uncolored_coeffs(3, Variant::Immaculate).unwrap();
        let c = |v: Vec<usize>| Composition(v);
        assert_eq!(t.get(&(c(vec![3]), c(vec![3]))), int(1));
        assert_eq!(t.get(&(c(vec![2, 1]), c(vec![1, 2]))), int(-1));
        assert_eq!(t.get(&(c(vec![1, 2]), c(vec![1, 1, 1]))), int(0));
        let mut buf = Vec::new();
        write_coeff_csv(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("from,to,coef\n"));
    }
}
