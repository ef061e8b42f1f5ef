//! Lattice paths as subdivided integer-strings.
//!
//! An element of `L(n_1,…,n_k; n)` is stored as its list of `n + 1`
//! substrings over the colours `1..=k`. Colour `i` occurs `n_i + 1` times;
//! the substring holding its `j`-th occurrence is the value at `j` of the
//! `i`-th component `[n_i] → [n]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A colour label, 1-based.
pub type Colour = u32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    k: usize,
    subs: Vec<Vec<Colour>>,
}

impl LatticePath {
    /// Build a path from its substrings. The colour count is the largest
    /// letter; every colour below it has to occur.
    pub fn new(subs: Vec<Vec<Colour>>) -> Result<Self> {
        if subs.is_empty() {
            return Err(Error::InvalidPath("a path has at least one substring".into()));
        }
        let k = subs.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut seen = vec![false; k];
        for &c in subs.iter().flatten() {
            if c == 0 {
                return Err(Error::InvalidPath("colour 0 is not allowed".into()));
            }
            seen[c as usize - 1] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPath(format!("colour {} does not occur", missing + 1)));
        }
        Ok(LatticePath { k, subs })
    }

    /// `1|1|…|1`, the unit of colour arity `n`.
    pub fn identity(n: usize) -> Self {
        LatticePath { k: 1, subs: vec![vec![1]; n + 1] }
    }

    /// The bar-free string `12…k`.
    pub fn identity_permutation(k: usize) -> Self {
        LatticePath { k, subs: vec![(1..=k as Colour).collect()] }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Output arity: the number of bars.
    pub fn n(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn substrings(&self) -> &[Vec<Colour>] {
        &self.subs
    }

    pub fn multiplicity(&self, colour: usize) -> usize {
        self.letters().filter(|&c| c as usize == colour).count()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.k];
        for c in self.letters() {
            m[c as usize - 1] += 1;
        }
        m
    }

    /// Input arities `n_i = multiplicity(i) − 1`.
    pub fn arities(&self) -> Vec<usize> {
        self.multiplicities().into_iter().map(|m| m - 1).collect()
    }

    pub fn letters(&self) -> impl Iterator<Item = Colour> + '_ {
        self.subs.iter().flatten().copied()
    }

    pub fn len(&self) -> usize {
        self.subs.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The word with bars removed.
    pub fn word(&self) -> Vec<Colour> {
        self.letters().collect()
    }

    /// Bar positions as cut points in the word: cut `t` sits after
    /// `cuts()[t]` letters.
    pub fn cuts(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.n());
        for s in &self.subs[..self.n()] {
            acc += s.len();
            out.push(acc);
        }
        out
    }

    /// Reassemble a path from a word and nondecreasing cut points.
    pub fn from_word_and_cuts(word: &[Colour], cuts: &[usize]) -> Result<Self> {
        let mut subs = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0;
        for &c in cuts {
            if c < prev || c > word.len() {
                return Err(Error::InvalidPath("cuts must be nondecreasing and in range".into()));
            }
            subs.push(word[prev..c].to_vec());
            prev = c;
        }
        subs.push(word[prev..].to_vec());
        LatticePath::new(subs)
    }

    /// Position of every letter as (substring index, position in the word).
    fn occurrence_substrings(&self) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); self.k];
        for (s, sub) in self.subs.iter().enumerate() {
            for &c in sub {
                occ[c as usize - 1].push(s);
            }
        }
        occ
    }

    /// The components `x_i : [n_i] → [n]`.
    pub fn components(&self) -> Vec<SimplicialOperator> {
        let n = self.n();
        self.occurrence_substrings()
            .into_iter()
            .map(|values| SimplicialOperator { target: n, values })
            .collect()
    }

    /// Operadic composition `self ∘_slot y`, slot 1-based.
    pub fn compose(&self, slot: usize, y: &LatticePath) -> Result<LatticePath> {
        if slot == 0 || slot > self.k {
            return Err(Error::OutOfRange(format!("slot {slot} for {} colours", self.k)));
        }
        let r = self.multiplicity(slot);
        if r != y.subs.len() {
            return Err(Error::Arity(format!(
                "colour {slot} occurs {r} times but the inserted path has {} substrings",
                y.subs.len()
            )));
        }
        let ky = y.k as Colour;
        let s = slot as Colour;
        let mut occ = 0;
        let subs = self
            .subs
            .iter()
            .map(|sub| {
                let mut out = Vec::with_capacity(sub.len());
                for &c in sub {
                    match c.cmp(&s) {
                        Ordering::Less => out.push(c),
                        Ordering::Greater => out.push(c + ky - 1),
                        Ordering::Equal => {
                            out.extend(y.subs[occ].iter().map(|&d| d + s - 1));
                            occ += 1;
                        }
                    }
                }
                out
            })
            .collect();
        Ok(LatticePath { k: self.k + y.k - 1, subs })
    }

    /// Relabel every letter `i` as `ρ(i)`.
    pub fn sym_action(&self, rho: &Permutation) -> Result<LatticePath> {
        if rho.len() != self.k {
            return Err(Error::Arity(format!("permutation of {} acting on {} colours", rho.len(), self.k)));
        }
        let subs = self
            .subs
            .iter()
            .map(|s| s.iter().map(|&c| rho.apply(c as usize) as Colour).collect())
            .collect();
        Ok(LatticePath { k: self.k, subs })
    }

    /// Keep colours `i < j` only, drop the bars and rename them `1, 2`.
    pub fn projection(&self, i: usize, j: usize) -> Result<LatticePath> {
        if !(1 <= i && i < j && j <= self.k) {
            return Err(Error::OutOfRange(format!("pair ({i},{j}) for {} colours", self.k)));
        }
        let word = self
            .letters()
            .filter_map(|c| match c as usize {
                c if c == i => Some(1),
                c if c == j => Some(2),
                _ => None,
            })
            .collect();
        Ok(LatticePath { k: 2, subs: vec![word] })
    }

    /// Number of letter switches in the projection onto `i, j`.
    pub fn complexity_index(&self, i: usize, j: usize) -> usize {
        let (a, b) = (i as Colour, j as Colour);
        let mut prev = None;
        let mut switches = 0;
        for c in self.letters().filter(|&c| c == a || c == b) {
            if prev.is_some_and(|p| p != c) {
                switches += 1;
            }
            prev = Some(c);
        }
        switches
    }

    pub fn complexity_table(&self) -> Complexity {
        let mut pairs = Vec::new();
        for i in 1..=self.k {
            for j in i + 1..=self.k {
                pairs.push(((i, j), self.complexity_index(i, j)));
            }
        }
        let max = pairs.iter().map(|p| p.1).max().unwrap_or(0);
        Complexity { pairs, max }
    }

    /// `c(x)`, zero when there are fewer than two colours.
    pub fn complexity(&self) -> usize {
        let mut best = 0;
        for i in 1..=self.k {
            for j in i + 1..=self.k {
                best = best.max(self.complexity_index(i, j));
            }
        }
        best
    }

    fn locate(&self, colour: usize, j: usize) -> Result<(usize, usize)> {
        if colour == 0 || colour > self.k {
            return Err(Error::OutOfRange(format!("colour {colour} of {}", self.k)));
        }
        let mut seen = 0;
        for (s, sub) in self.subs.iter().enumerate() {
            for (p, &c) in sub.iter().enumerate() {
                if c as usize == colour {
                    if seen == j {
                        return Ok((s, p));
                    }
                    seen += 1;
                }
            }
        }
        Err(Error::OutOfRange(format!("occurrence {j} of colour {colour}")))
    }

    /// Delete the `j`-th occurrence of `colour`.
    pub fn input_face(&self, colour: usize, j: usize) -> Result<LatticePath> {
        let (s, p) = self.locate(colour, j)?;
        if self.multiplicity(colour) < 2 {
            return Err(Error::InvalidPath(format!("colour {colour} occurs only once")));
        }
        let mut subs = self.subs.clone();
        subs[s].remove(p);
        Ok(LatticePath { k: self.k, subs })
    }

    /// Repeat the `j`-th occurrence of `colour` in place.
    pub fn input_degeneracy(&self, colour: usize, j: usize) -> Result<LatticePath> {
        let (s, p) = self.locate(colour, j)?;
        let mut subs = self.subs.clone();
        subs[s].insert(p, colour as Colour);
        Ok(LatticePath { k: self.k, subs })
    }

    /// Insert an empty substring at index `j`, `0 ≤ j ≤ n + 1`.
    pub fn output_coface(&self, j: usize) -> Result<LatticePath> {
        if j > self.n() + 1 {
            return Err(Error::OutOfRange(format!("coface {j} on arity {}", self.n())));
        }
        let mut subs = self.subs.clone();
        subs.insert(j, Vec::new());
        Ok(LatticePath { k: self.k, subs })
    }

    /// Merge substrings `j` and `j + 1`, `0 ≤ j < n`.
    pub fn output_codegeneracy(&self, j: usize) -> Result<LatticePath> {
        if j >= self.n() {
            return Err(Error::OutOfRange(format!("codegeneracy {j} on arity {}", self.n())));
        }
        let mut subs = self.subs.clone();
        let tail = subs.remove(j + 1);
        subs[j].extend(tail);
        Ok(LatticePath { k: self.k, subs })
    }

    /// Colours in order of first appearance.
    pub fn appearance_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.k];
        let mut order = Vec::with_capacity(self.k);
        for c in self.letters() {
            let c = c as usize;
            if !seen[c - 1] {
                seen[c - 1] = true;
                order.push(c);
            }
        }
        order
    }

    /// Split a path of complexity at most one into its colour-sorted part
    /// and the permutation `π` with `π · mono = self`.
    pub fn decompose_l1(&self) -> Result<(LatticePath, Permutation)> {
        let c = self.complexity();
        if c > 1 {
            return Err(Error::Complexity { found: c, bound: 1 });
        }
        let pi = Permutation::from_one_based(&self.appearance_order())?;
        let mono = self.sym_action(&pi.inverse())?;
        Ok((mono, pi))
    }

    /// True when every colour appears in one block and the blocks come in
    /// the order `1, 2, …, k`.
    pub fn is_order_preserving(&self) -> bool {
        self.letters().collect::<Vec<_>>().windows(2).all(|w| w[0] <= w[1])
    }

    pub fn join_morphism(&self) -> JoinMorphism {
        JoinMorphism::from_path(self)
    }
}

/// Per-pair complexity indices and their maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complexity {
    pub pairs: Vec<((usize, usize), usize)>,
    pub max: usize,
}

pub(crate) fn write_colour(f: &mut impl fmt::Write, c: Colour) -> fmt::Result {
    if c < 10 {
        write!(f, "{c}")
    } else {
        write!(f, "({c})")
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, sub) in self.subs.iter().enumerate() {
            if s > 0 {
                f.write_str("|")?;
            }
            for &c in sub {
                write_colour(f, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({self})")
    }
}

/// One token of the marked path syntax.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Token {
    Letter { colour: Colour, marked: bool },
    Bar,
}

pub(crate) fn tokenize(text: &str, allow_markers: bool) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.trim().chars().peekable();
    let mut marked = false;
    while let Some(ch) = chars.next() {
        match ch {
            '|' => {
                if marked {
                    return Err(Error::Parse("marker before a bar".into()));
                }
                out.push(Token::Bar);
            }
            '^' if allow_markers => {
                if marked {
                    return Err(Error::Parse("doubled marker".into()));
                }
                marked = true;
            }
            '1'..='9' => {
                out.push(Token::Letter { colour: ch as Colour - '0' as Colour, marked });
                marked = false;
            }
            '(' => {
                let mut digits = String::new();
                loop {
                    match chars.next() {
                        Some(')') => break,
                        Some(d) if d.is_ascii_digit() => digits.push(d),
                        _ => return Err(Error::Parse("unterminated or malformed '(…)' colour".into())),
                    }
                }
                let colour: Colour =
                    digits.parse().map_err(|_| Error::Parse(format!("bad colour '({digits})'")))?;
                if colour == 0 {
                    return Err(Error::Parse("colour 0 is not allowed".into()));
                }
                out.push(Token::Letter { colour, marked });
                marked = false;
            }
            c => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
    }
    if marked {
        return Err(Error::Parse("trailing marker".into()));
    }
    Ok(out)
}

pub(crate) fn split_tokens(tokens: &[Token]) -> Vec<Vec<(Colour, bool)>> {
    let mut subs = vec![Vec::new()];
    for t in tokens {
        match *t {
            Token::Bar => subs.push(Vec::new()),
            Token::Letter { colour, marked } => subs.last_mut().unwrap().push((colour, marked)),
        }
    }
    subs
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let tokens = tokenize(text, false)?;
        let subs = split_tokens(&tokens)
            .into_iter()
            .map(|s| s.into_iter().map(|(c, _)| c).collect())
            .collect();
        LatticePath::new(subs)
    }
}

pub fn parse_path(text: &str) -> Result<LatticePath> {
    text.parse()
}

/// An order-preserving map `[m] → [n]`, stored by its values.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialOperator {
    target: usize,
    values: Vec<usize>,
}

impl SimplicialOperator {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPath("a simplicial operator needs a nonempty source".into()));
        }
        if values.iter().any(|&v| v > target) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPath(format!("{values:?} is not a monotone map into [{target}]")));
        }
        Ok(SimplicialOperator { target, values })
    }

    pub fn identity(n: usize) -> Self {
        SimplicialOperator { target: n, values: (0..=n).collect() }
    }

    /// Coface `δ^j : [n−1] → [n]` skipping `j`.
    pub fn coface(n: usize, j: usize) -> Self {
        assert!(n >= 1 && j <= n);
        SimplicialOperator { target: n, values: (0..=n).filter(|&v| v != j).collect() }
    }

    /// Codegeneracy `σ^j : [n+1] → [n]` hitting `j` twice.
    pub fn codegeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n);
        SimplicialOperator { target: n, values: (0..=n + 1).map(|v| if v > j { v - 1 } else { v }).collect() }
    }

    pub fn source(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, v: usize) -> usize {
        self.values[v]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn after(&self, other: &SimplicialOperator) -> Result<SimplicialOperator> {
        if other.target != self.source() {
            return Err(Error::Arity(format!(
                "cannot compose [{}]→[{}] after [{}]→[{}]",
                self.source(),
                self.target,
                other.source(),
                other.target
            )));
        }
        Ok(SimplicialOperator { target: self.target, values: other.values.iter().map(|&v| self.values[v]).collect() })
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0 && *self.values.last().unwrap() == self.target && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Epi-mono factorization: `self = mono ∘ epi`.
    pub fn factor(&self) -> (SimplicialOperator, SimplicialOperator) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let epi = self
            .values
            .iter()
            .map(|v| image.iter().position(|w| w == v).unwrap())
            .collect();
        (
            SimplicialOperator { target: image.len() - 1, values: epi },
            SimplicialOperator { target: self.target, values: image },
        )
    }
}

/// A bipointed monotone map `[n+1] → [m+1]` fixing both endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BipointedMap {
    target: usize,
    values: Vec<usize>,
}

impl BipointedMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidPath("a bipointed map has source [n+1] with n ≥ 0".into()));
        }
        if values[0] != 0 || *values.last().unwrap() != target {
            return Err(Error::InvalidPath("endpoints must be preserved".into()));
        }
        if target < 1 || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPath("not monotone".into()));
        }
        Ok(BipointedMap { target, values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `φ : [n+1] → [m+1]` gives `ψ : [m] → [n]` with
    /// `ψ(i) + 1 = min { j | φ(j) > i }`.
    pub fn joyal_dual(&self) -> SimplicialOperator {
        let n = self.values.len() - 2;
        let m = self.target - 1;
        let values = (0..=m)
            .map(|i| self.values.iter().position(|&p| p > i).unwrap() - 1)
            .collect();
        SimplicialOperator { target: n, values }
    }

    /// Inverse of [`BipointedMap::joyal_dual`]:
    /// `φ(j) = max { i | ψ(i) < j } + 1` for `0 < j ≤ n`.
    pub fn from_dual(psi: &SimplicialOperator) -> BipointedMap {
        let n = psi.target();
        let m = psi.source();
        let mut values = vec![0];
        for j in 1..=n {
            let below = psi.values().iter().rposition(|&v| v < j).map_or(0, |i| i + 1);
            values.push(below);
        }
        values.push(m + 1);
        BipointedMap { target: m + 1, values }
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &BipointedMap) -> Result<BipointedMap> {
        if other.target + 1 != self.values.len() {
            return Err(Error::Arity("bipointed maps do not compose".into()));
        }
        Ok(BipointedMap { target: self.target, values: other.values.iter().map(|&v| self.values[v]).collect() })
    }
}

/// A map out of the join `[n_1] * ⋯ * [n_k]` into `[n]`, with a total order
/// on the domain that fixes the letter order inside each substring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JoinMorphism {
    target: usize,
    values: Vec<Vec<usize>>,
    order: Vec<(usize, usize)>,
}

impl JoinMorphism {
    /// `values[i][a]` is the image of element `a` of block `i` (0-based);
    /// `order` lists every domain element once.
    pub fn new(values: Vec<Vec<usize>>, target: usize, order: Vec<(usize, usize)>) -> Result<Self> {
        let total: usize = values.iter().map(Vec::len).sum();
        if values.iter().any(Vec::is_empty) {
            return Err(Error::InvalidPath("every block needs at least one element".into()));
        }
        if values.iter().flatten().any(|&v| v > target) {
            return Err(Error::OutOfRange("value outside the target".into()));
        }
        let mut seen: Vec<Vec<bool>> = values.iter().map(|b| vec![false; b.len()]).collect();
        for &(i, a) in &order {
            match seen.get_mut(i).and_then(|b| b.get_mut(a)) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::InvalidPath("the order must list each element exactly once".into())),
            }
        }
        if order.len() != total {
            return Err(Error::InvalidPath("the order must list each element exactly once".into()));
        }
        Ok(JoinMorphism { target, values, order })
    }

    pub fn from_path(x: &LatticePath) -> Self {
        let mut counters = vec![0; x.k()];
        let mut order = Vec::with_capacity(x.len());
        let mut values = vec![Vec::new(); x.k()];
        for (s, sub) in x.substrings().iter().enumerate() {
            for &c in sub {
                let i = c as usize - 1;
                order.push((i, counters[i]));
                values[i].push(s);
                counters[i] += 1;
            }
        }
        JoinMorphism { target: x.n(), values, order }
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arities(&self) -> Vec<usize> {
        self.values.iter().map(|b| b.len() - 1).collect()
    }

    pub fn values(&self) -> &[Vec<usize>] {
        &self.values
    }

    /// Domain elements grouped by target value, each group in the total order.
    pub fn fibers(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.target + 1];
        for &(i, a) in &self.order {
            out[self.values[i][a]].push((i, a));
        }
        out
    }

    /// Post-compose with any set map `[n] → [m]`, given by values.
    pub fn post_compose(&self, g: &[usize], new_target: usize) -> Result<JoinMorphism> {
        if g.len() != self.target + 1 || g.iter().any(|&v| v > new_target) {
            return Err(Error::Arity("post-composition map has the wrong shape".into()));
        }
        Ok(JoinMorphism {
            target: new_target,
            values: self.values.iter().map(|b| b.iter().map(|&v| g[v]).collect()).collect(),
            order: self.order.clone(),
        })
    }

    /// The lattice path, when every block is read in its natural order.
    pub fn to_path(&self) -> Option<LatticePath> {
        let mut next = vec![0; self.values.len()];
        let mut subs = Vec::with_capacity(self.target + 1);
        for fiber in self.fibers() {
            let mut sub = Vec::with_capacity(fiber.len());
            for (i, a) in fiber {
                if a != next[i] {
                    return None;
                }
                next[i] += 1;
                sub.push(i as Colour + 1);
            }
            subs.push(sub);
        }
        Some(LatticePath { k: self.values.len(), subs })
    }
}

/// A permutation of `{1..k}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(Error::InvalidPath(format!("{images:?} is not a permutation")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation(images.iter().map(|v| v - 1).collect()))
    }

    /// Transposition of `a` and `b` (1-based) in `Σ_k`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(k);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `ρ(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    /// `(self · other)(i) = self(other(i))`.
    pub fn then_after(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Number of inversions mod 2.
    pub fn is_odd(&self) -> bool {
        let mut inv = 0;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                if self.0[a] > self.0[b] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }

    /// All of `Σ_k` in lexicographic order of image lists.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation(cur.clone()));
            if !next_permutation(&mut cur) {
                return out;
            }
        }
    }

    /// The string `ρ(1)ρ(2)…ρ(k)`, the element of `L(0,…,0; 0)`.
    pub fn as_path(&self) -> LatticePath {
        LatticePath { k: self.len(), subs: vec![self.0.iter().map(|&v| v as Colour + 1).collect()] }
    }

    /// The string of `self` with the letter `i` replaced by the string of
    /// `tau`, shifted into place.
    pub fn substitute(&self, i: usize, tau: &Permutation) -> Permutation {
        let s = self.as_path().compose(i, &tau.as_path()).expect("permutation strings compose");
        Permutation(s.letters().map(|c| c as usize - 1).collect())
    }

    /// Composition in the permutation operad, read off from string
    /// substitution: `(ρ ∘_i τ)` is the permutation whose string is
    /// `ρ-string ∘_{ρ(i)} τ-string`.
    pub fn operad_compose(&self, i: usize, tau: &Permutation) -> Permutation {
        let s = self.as_path().compose(self.apply(i), &tau.as_path()).expect("permutation strings compose");
        Permutation(s.letters().map(|c| c as usize - 1).collect())
    }
}

/// Advance to the next permutation of a slice in lexicographic order.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[i] < v[j]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Nondecreasing sequences `0 ≤ p_1 ≤ … ≤ p_n ≤ max`, lexicographically.
pub fn cut_sequences(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, lo: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for p in lo..=max {
            cur.push(p);
            rec(n, p, max, cur, out);
            cur.pop();
        }
    }
    rec(n, 0, max, &mut cur, &mut out);
    out
}

/// Every path in `L(n_1,…,n_k; n)`, lexicographic by word, then by cuts.
pub fn enumerate(arities: &[usize], n: usize) -> Vec<LatticePath> {
    let mut word: Vec<Colour> = Vec::new();
    for (i, &a) in arities.iter().enumerate() {
        word.extend(std::iter::repeat_n(i as Colour + 1, a + 1));
    }
    let cuts = cut_sequences(n, word.len());
    let mut out = Vec::new();
    loop {
        for c in &cuts {
            out.push(LatticePath::from_word_and_cuts(&word, c).expect("valid enumeration"));
        }
        if !next_permutation(&mut word) {
            break;
        }
    }
    out
}

/// Ordered sequences of positive integers summing to `total`.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All paths with `1..=max_letters` letters, at least one colour, and at
/// most `max_bars` bars.
pub fn all_paths(max_letters: usize, max_bars: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    for letters in 1..=max_letters {
        for mults in compositions(letters) {
            let arities: Vec<usize> = mults.iter().map(|m| m - 1).collect();
            for n in 0..=max_bars {
                out.extend(enumerate(&arities, n));
            }
        }
    }
    out
}

/// All paths with `letters + bars ≤ budget`.
pub fn all_paths_with_budget(budget: usize) -> Vec<LatticePath> {
    all_paths(budget, budget).into_iter().filter(|p| p.len() + p.n() <= budget).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        for s in ["1|12|21", "1", "1||12|3|2", "|11", "11|", "(10)23456789(11)1"] {
            assert_eq!(p(s).to_string(), s);
        }
        let x = p("1|12|21");
        assert_eq!(x.arities(), vec![2, 1]);
        assert_eq!(x.n(), 2);
        assert_eq!(p("1||12|3|2").arities(), vec![1, 1, 0]);
        assert_eq!(p("1||12|3|2").n(), 4);
    }

    #[test]
    fn parse_rejects() {
        assert!("13".parse::<LatticePath>().is_err());
        assert!("1a".parse::<LatticePath>().is_err());
        assert!("(1".parse::<LatticePath>().is_err());
        assert!("(0)".parse::<LatticePath>().is_err());
        assert!("^1".parse::<LatticePath>().is_err());
    }

    #[test]
    fn composition_examples() {
        assert_eq!(p("1||12|3|2").compose(2, &p("3|12")).unwrap().to_string(), "1||14|5|23");
        assert_eq!(p("12").compose(1, &p("12")).unwrap().to_string(), "123");
        assert!(p("12").compose(3, &p("1")).is_err());
        assert!(p("121").compose(1, &p("1")).is_err());
    }

    #[test]
    fn components_by_hand() {
        let c = p("1|12|21").components();
        assert_eq!(c[0].values(), &[0, 1, 2]);
        assert_eq!(c[1].values(), &[1, 2]);
        let c = p("12|21").components();
        assert_eq!(c[0].values(), &[0, 1]);
        assert_eq!(c[1].values(), &[0, 1]);
        assert_eq!(LatticePath::identity(3).components()[0], SimplicialOperator::identity(3));
    }

    #[test]
    fn joyal_examples() {
        let phi = BipointedMap::new(vec![0, 2, 3], 3).unwrap();
        assert_eq!(phi.joyal_dual().values(), &[0, 0, 1]);
        assert_eq!(BipointedMap::from_dual(&phi.joyal_dual()), phi);
        let id = BipointedMap::new(vec![0, 1, 2, 3], 3).unwrap();
        assert_eq!(id.joyal_dual(), SimplicialOperator::identity(2));
        let terminal = BipointedMap::new(vec![0, 4], 4).unwrap();
        assert_eq!(terminal.joyal_dual().values(), &[0, 0, 0, 0]);
        assert!(BipointedMap::new(vec![1, 3], 3).is_err());
    }

    #[test]
    fn projections_and_complexity() {
        assert_eq!(p("1|12|21").projection(1, 2).unwrap().to_string(), "11221");
        assert_eq!(p("1||12|3|2").projection(1, 3).unwrap().to_string(), "112");
        assert!(p("1|1").projection(1, 2).is_err());
        assert_eq!(p("1|12|21").complexity(), 2);
        assert_eq!(LatticePath::identity(4).complexity(), 0);
        assert_eq!(p("312").complexity(), 1);
        let t = p("1|12|21").complexity_table();
        assert_eq!(t.pairs, vec![((1, 2), 2)]);
    }

    #[test]
    fn faces() {
        assert_eq!(p("11|2").input_face(1, 0).unwrap().to_string(), "1|2");
        assert!(p("1|2").input_face(2, 0).is_err());
        assert_eq!(p("12").output_coface(0).unwrap().to_string(), "|12");
        assert_eq!(p("1|2").output_codegeneracy(0).unwrap().to_string(), "12");
        assert_eq!(p("12|1").input_degeneracy(1, 1).unwrap().to_string(), "12|11");
    }

    #[test]
    fn decompose_examples() {
        let (mono, pi) = p("21").decompose_l1().unwrap();
        assert_eq!(mono.to_string(), "12");
        assert_eq!(pi, Permutation::transposition(2, 1, 2));
        let (mono, pi) = p("1|1").decompose_l1().unwrap();
        assert_eq!(mono.to_string(), "1|1");
        assert!(pi.is_identity());
        assert!(p("121").decompose_l1().is_err());
    }

    #[test]
    fn enumeration_examples() {
        let e: Vec<String> = enumerate(&[0, 0], 0).iter().map(|x| x.to_string()).collect();
        assert_eq!(e, ["12", "21"]);
        let e: Vec<String> = enumerate(&[1], 1).iter().map(|x| x.to_string()).collect();
        assert_eq!(e, ["|11", "1|1", "11|"]);
        let e: Vec<String> = enumerate(&[1, 0], 0).iter().map(|x| x.to_string()).collect();
        assert_eq!(e, ["112", "121", "211"]);
    }

    #[test]
    fn join_morphism_roundtrip() {
        for s in ["1|12|21", "1||12|3|2", "|", "21|"] {
            let x = p(s);
            assert_eq!(x.join_morphism().to_path().unwrap(), x);
        }
    }

    #[test]
    fn permutation_operad() {
        let id2 = Permutation::identity(2);
        let sw = Permutation::transposition(2, 1, 2);
        assert_eq!(id2.operad_compose(1, &sw).images(), vec![2, 1, 3]);
        assert_eq!(sw.operad_compose(1, &id2).images(), vec![2, 3, 1]);
    }
}
