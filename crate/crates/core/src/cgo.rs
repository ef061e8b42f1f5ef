//! The complete graph operad and its extension.
//!
//! An element is a complete graph on `1..=k` with a label `μ_ij` and an
//! orientation on every edge. Strict elements carry a global order `σ`,
//! written as the string `σ(1)…σ(k)`: edge `ij` points from `i` to `j`
//! exactly when `i` comes first in that string.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{tokenize, LatticePath, Permutation, Token};

/// Label and orientation of one edge `i < j`; `neutral` means `i → j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Edge {
    pub label: usize,
    pub neutral: bool,
}

impl Edge {
    /// `(m, σ) ≤ (n, τ)` iff `m < n` or they are equal.
    pub fn leq(self, other: Edge) -> bool {
        self.label < other.label || self == other
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CompleteGraphElement {
    k: usize,
    edges: Vec<Edge>,
    order: Option<Permutation>,
}

fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= k);
    // pairs (1,2),(1,3),…,(1,k),(2,3),…
    let before: usize = (1..i).map(|a| k - a).sum();
    before + (j - i - 1)
}

impl CompleteGraphElement {
    /// A strict element `(μ, σ)`; `labels` lists `μ_ij` for `i < j` in
    /// lexicographic order.
    pub fn strict(labels: Vec<usize>, sigma: Permutation) -> Result<Self> {
        let k = sigma.len();
        if labels.len() != k * k.saturating_sub(1) / 2 {
            return Err(Error::Arity(format!("{} labels for k = {k}", labels.len())));
        }
        let pos = sigma.inverse();
        let mut edges = Vec::with_capacity(labels.len());
        let mut it = labels.into_iter();
        for i in 1..=k {
            for j in i + 1..=k {
                let label = it.next().unwrap();
                edges.push(Edge { label, neutral: pos.apply(i) < pos.apply(j) });
            }
        }
        Ok(CompleteGraphElement { k, edges, order: Some(sigma) })
    }

    /// An element of the extension, given edge by edge.
    pub fn extended(k: usize, edges: Vec<Edge>) -> Result<Self> {
        if edges.len() != k * k.saturating_sub(1) / 2 {
            return Err(Error::Arity(format!("{} edges for k = {k}", edges.len())));
        }
        Ok(CompleteGraphElement { k, edges, order: None })
    }

    pub fn unit() -> Self {
        CompleteGraphElement { k: 1, edges: Vec::new(), order: Some(Permutation::identity(1)) }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge(&self, i: usize, j: usize) -> Edge {
        self.edges[pair_index(self.k, i, j)]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn order(&self) -> Option<&Permutation> {
        self.order.as_ref()
    }

    pub fn is_strict(&self) -> bool {
        self.order.is_some()
    }

    /// Same edges, ignoring whether a global order is recorded.
    pub fn same_graph(&self, other: &Self) -> bool {
        self.k == other.k && self.edges == other.edges
    }

    pub fn max_label(&self) -> Option<usize> {
        self.edges.iter().map(|e| e.label).max()
    }

    /// Membership in the `m`-th filtration stage: every label below `m`.
    pub fn in_filtration(&self, m: usize) -> bool {
        self.edges.iter().all(|e| e.label < m)
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        if self.k != other.k {
            return Err(Error::Arity(format!("comparing k = {} with k = {}", self.k, other.k)));
        }
        Ok(self.edges.iter().zip(&other.edges).all(|(a, b)| a.leq(*b)))
    }

    /// Substitute `b` into vertex `slot` (1-based).
    pub fn compose(&self, slot: usize, b: &Self) -> Result<Self> {
        if slot == 0 || slot > self.k {
            return Err(Error::OutOfRange(format!("slot {slot} for k = {}", self.k)));
        }
        let kb = b.k;
        let k = self.k + kb - 1;
        let block = |p: usize| -> usize {
            if p < slot {
                p
            } else if p < slot + kb {
                slot
            } else {
                p + 1 - kb
            }
        };
        let mut edges = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for p in 1..=k {
            for q in p + 1..=k {
                let (fp, fq) = (block(p), block(q));
                edges.push(if fp != fq {
                    self.edge(fp, fq)
                } else {
                    b.edge(p + 1 - slot, q + 1 - slot)
                });
            }
        }
        let order = match (&self.order, &b.order) {
            (Some(s), Some(t)) => Some(s.substitute(slot, t)),
            _ => None,
        };
        Ok(CompleteGraphElement { k, edges, order })
    }

    /// Left action: vertex `a` is renamed `τ(a)`.
    pub fn sym_action(&self, tau: &Permutation) -> Result<Self> {
        if tau.len() != self.k {
            return Err(Error::Arity("permutation size".into()));
        }
        let mut edges = vec![Edge { label: 0, neutral: true }; self.edges.len()];
        for a in 1..=self.k {
            for b in a + 1..=self.k {
                let e = self.edge(a, b);
                let (ta, tb) = (tau.apply(a), tau.apply(b));
                let (lo, hi, neutral) = if ta < tb { (ta, tb, e.neutral) } else { (tb, ta, !e.neutral) };
                edges[pair_index(self.k, lo, hi)] = Edge { label: e.label, neutral };
            }
        }
        let order = self.order.as_ref().map(|s| tau.then_after(s));
        Ok(CompleteGraphElement { k: self.k, edges, order })
    }

    /// No directed cycle whose edges all carry the same label.
    pub fn is_extended_valid(&self) -> bool {
        let mut labels: Vec<usize> = self.edges.iter().map(|e| e.label).collect();
        labels.sort_unstable();
        labels.dedup();
        labels.into_iter().all(|l| self.acyclic_at(l))
    }

    fn acyclic_at(&self, label: usize) -> bool {
        let k = self.k;
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut indeg = vec![0; k];
        for i in 1..=k {
            for j in i + 1..=k {
                let e = self.edge(i, j);
                if e.label == label {
                    let (s, t) = if e.neutral { (i - 1, j - 1) } else { (j - 1, i - 1) };
                    out[s].push(t);
                    indeg[t] += 1;
                }
            }
        }
        let mut stack: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &t in &out[v] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        removed == k
    }
}

/// `x ↦ (c_ij(x) − 1, σ_x)` with `σ_x` the order of first occurrences.
pub fn ctot(x: &LatticePath) -> CompleteGraphElement {
    let k = x.k();
    let sigma = Permutation::from_one_based(&x.appearance_order()).expect("every colour appears");
    let mut labels = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for i in 1..=k {
        for j in i + 1..=k {
            labels.push(x.complexity_index(i, j) - 1);
        }
    }
    CompleteGraphElement::strict(labels, sigma).expect("label count matches")
}

/// `σ_x` read as the first subsequence of the word, in the lexicographic
/// order of letter positions, that is a permutation string. Slow; kept as
/// an independent description.
pub fn first_permutation_subsequence(x: &LatticePath) -> Permutation {
    let word = x.word();
    let k = x.k();
    let mut best: Option<Vec<usize>> = None;
    let mut positions = Vec::new();
    fn rec(word: &[u32], start: usize, k: usize, positions: &mut Vec<usize>, best: &mut Option<Vec<usize>>) {
        if positions.len() == k {
            if best.as_ref().is_none_or(|b| positions.as_slice() < b.as_slice()) {
                *best = Some(positions.clone());
            }
            return;
        }
        for p in start..word.len() {
            if !positions.iter().any(|&q| word[q] == word[p]) {
                positions.push(p);
                rec(word, p + 1, k, positions, best);
                positions.pop();
            }
        }
    }
    rec(&word, 0, k, &mut positions, &mut best);
    let letters: Vec<usize> = best.expect("a permutation subsequence exists").iter().map(|&p| word[p] as usize).collect();
    Permutation::from_one_based(&letters).unwrap()
}

fn write_vertex(f: &mut fmt::Formatter<'_>, v: usize) -> fmt::Result {
    if v < 10 {
        write!(f, "{v}")
    } else {
        write!(f, "({v})")
    }
}

impl fmt::Display for CompleteGraphElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={};", self.k)?;
        let mut first = true;
        for i in 1..=self.k {
            for j in i + 1..=self.k {
                f.write_str(if first { " " } else { "," })?;
                first = false;
                write_vertex(f, i)?;
                write_vertex(f, j)?;
                let e = self.edge(i, j);
                write!(f, ":{}{}", e.label, if e.neutral { '+' } else { '-' })?;
            }
        }
        Ok(())
    }
}

impl FromStr for CompleteGraphElement {
    type Err = Error;

    /// Parses `k=3; 12:1+,13:0-,23:2+`. The result is an extended element;
    /// all pairs must be listed.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("complete graph: {m}"));
        let (head, body) = text.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let k: usize = head
            .trim()
            .strip_prefix("k=")
            .ok_or_else(|| bad("expected k=<count>"))?
            .trim()
            .parse()
            .map_err(|_| bad("bad vertex count"))?;
        let mut slots: Vec<Option<Edge>> = vec![None; k * k.saturating_sub(1) / 2];
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (pair, rest) = item.split_once(':').ok_or_else(|| bad("expected ij:label±"))?;
            let w: Vec<usize> = tokenize(pair, false)
                .map_err(|_| bad("bad vertex pair"))?
                .into_iter()
                .map(|t| match t {
                    Token::Letter { colour, .. } => Ok(colour as usize),
                    Token::Bar => Err(bad("bad vertex pair")),
                })
                .collect::<Result<_>>()?;
            if w.len() != 2 {
                return Err(bad("a pair names two vertices"));
            }
            let (i, j) = (w[0], w[1]);
            if !(i < j && j <= k) {
                return Err(bad("pairs are written i<j within 1..k"));
            }
            let (num, sign) = rest.split_at(rest.len().saturating_sub(1));
            let neutral = match sign {
                "+" => true,
                "-" => false,
                _ => return Err(bad("orientation must be + or -")),
            };
            let label = num.parse().map_err(|_| bad("bad label"))?;
            slots[pair_index(k, i, j)] = Some(Edge { label, neutral });
        }
        let edges = slots.into_iter().collect::<Option<Vec<_>>>().ok_or_else(|| bad("missing pairs"))?;
        CompleteGraphElement::extended(k, edges)
    }
}

/// All strict elements with `k` vertices and labels below `max_label`.
pub fn all_strict(k: usize, max_label: usize) -> Vec<CompleteGraphElement> {
    let pairs = k * k.saturating_sub(1) / 2;
    let mut out = Vec::new();
    let total = max_label.pow(pairs as u32);
    for sigma in Permutation::all(k) {
        for code in 0..total {
            let mut c = code;
            let labels = (0..pairs)
                .map(|_| {
                    let l = c % max_label;
                    c /= max_label;
                    l
                })
                .collect();
            out.push(CompleteGraphElement::strict(labels, sigma.clone()).unwrap());
        }
    }
    out
}

/// All extended elements (valid or not) with `k` vertices.
pub fn all_edge_graphs(k: usize, max_label: usize) -> Vec<CompleteGraphElement> {
    let pairs = k * k.saturating_sub(1) / 2;
    let per = 2 * max_label;
    let mut out = Vec::new();
    for code in 0..per.pow(pairs as u32) {
        let mut c = code;
        let edges = (0..pairs)
            .map(|_| {
                let e = Edge { label: (c % per) / 2, neutral: c % 2 == 0 };
                c /= per;
                e
            })
            .collect();
        out.push(CompleteGraphElement::extended(k, edges).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn order_examples() {
        let id = Permutation::identity(2);
        let sw = Permutation::transposition(2, 1, 2);
        let a = CompleteGraphElement::strict(vec![0], id.clone()).unwrap();
        let b = CompleteGraphElement::strict(vec![1], sw.clone()).unwrap();
        assert!(a.leq(&a).unwrap());
        assert!(a.leq(&b).unwrap());
        let c = CompleteGraphElement::strict(vec![1], id).unwrap();
        assert!(!c.leq(&b).unwrap() && !b.leq(&c).unwrap());
    }

    #[test]
    fn block_composition() {
        let id = Permutation::identity(2);
        let a = CompleteGraphElement::strict(vec![1], id.clone()).unwrap();
        let b = CompleteGraphElement::strict(vec![0], id).unwrap();
        let ab = a.compose(1, &b).unwrap();
        assert_eq!(ab.to_string(), "k=3; 12:0+,13:1+,23:1+");
        assert!(ab.order().unwrap().is_identity());
        assert_eq!(a.compose(1, &CompleteGraphElement::unit()).unwrap(), a);
    }

    #[test]
    fn monochromatic_cycles() {
        let cyc: CompleteGraphElement = "k=3; 12:0+,13:0-,23:0+".parse().unwrap();
        assert!(!cyc.is_extended_valid());
        let ok: CompleteGraphElement = "k=3; 12:0+,13:1-,23:0+".parse().unwrap();
        assert!(ok.is_extended_valid());
        for e in all_strict(3, 2) {
            assert!(e.is_extended_valid());
        }
    }

    #[test]
    fn ctot_examples() {
        let e = ctot(&p("12|21"));
        assert_eq!(e.edge(1, 2), Edge { label: 1, neutral: true });
        assert!(e.order().unwrap().is_identity());
        let e = ctot(&p("21"));
        assert_eq!(e.edge(1, 2), Edge { label: 0, neutral: false });
        assert_eq!(e.to_string(), "k=2; 12:0-");
    }

    #[test]
    fn text_roundtrip() {
        let s = "k=3; 12:1+,13:0-,23:2+";
        assert_eq!(s.parse::<CompleteGraphElement>().unwrap().to_string(), s);
        assert!("k=3; 12:1+".parse::<CompleteGraphElement>().is_err());
        assert_eq!("k=1;".parse::<CompleteGraphElement>().unwrap().k(), 1);
    }

    #[test]
    fn first_subsequence_agrees() {
        for x in crate::paths::all_paths(4, 1) {
            assert_eq!(first_permutation_subsequence(&x), ctot(&x).order().unwrap().clone(), "{x}");
        }
    }
}
