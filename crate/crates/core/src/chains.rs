//! Chain-level condensation: the surjection operad and its overlapping-cut
//! expansion, plus graded chain complexes and their homology.
//!
//! Generators are subdivided strings without two equal adjacent letters
//! inside one substring. A generator is oriented as the tensor product of
//! one simplex per colour, colours ordered `1 < … < k`, so its degree is
//! `Σ n_i` = letters − colours.
//!
//! Signs. For a bar-free generator `u` of length `L` and a cut
//! `0 = b_0 ≤ b_1 ≤ … ≤ b_L = n`, letter `t` occupies substrings
//! `b_t..=b_{t+1}`. Write `len_t = b_{t+1} − b_t` and `inn_t = 1` when `t`
//! is not the last occurrence of its colour. The cut carries the sign
//! `(−1)^e` with
//!
//! ```text
//! e = Σ_{t<t', u_t > u_t'} (len_t len_t' + len_t inn_t' + inn_t len_t')
//!   + Σ_t len_t · #{ q < t : inn_q = 1 }
//! ```
//!
//! which is the Koszul sign of moving the cut coordinates past the colour
//! simplices. The embedding into cochain operations multiplies by
//! `(−1)^{deg u}`, so that `121` acts on arity-one cochains as `f ∘ g`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{smith_invariants, Matrix};
use crate::paths::{cut_sequences, Colour, LatticePath};
use crate::scalar::{parse_scalar, Fp, Scalar};
use crate::Q;

/// No substring holds two equal adjacent letters.
pub fn is_nondegenerate(x: &LatticePath) -> bool {
    x.substrings().iter().all(|s| s.windows(2).all(|w| w[0] != w[1]))
}

/// Letters minus colours.
pub fn generator_degree(x: &LatticePath) -> usize {
    x.len() - x.k()
}

/// A finite linear combination of nondegenerate generators.
#[derive(Clone, PartialEq, Eq)]
pub struct ChainElement<S> {
    terms: BTreeMap<LatticePath, S>,
}

impl<S: Scalar> Default for ChainElement<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> ChainElement<S> {
    pub fn zero() -> Self {
        ChainElement { terms: BTreeMap::new() }
    }

    /// A single generator; degenerate strings give zero.
    pub fn generator(x: LatticePath) -> Self {
        Self::term(S::one(), x)
    }

    pub fn term(c: S, x: LatticePath) -> Self {
        let mut e = Self::zero();
        e.add_term(c, x);
        e
    }

    pub fn add_term(&mut self, c: S, x: LatticePath) {
        if c.is_zero() || !is_nondegenerate(&x) {
            return;
        }
        match self.terms.get_mut(&x) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&x);
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &S, other: &Self) {
        for (x, v) in &other.terms {
            self.add_term(c.clone() * v.clone(), x.clone());
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&S::one(), other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-S::one(), other);
        out
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticePath, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x: &LatticePath) -> S {
        self.terms.get(x).cloned().unwrap_or_else(S::zero)
    }

    /// The common degree of all terms, if there is one.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(generator_degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Highest complexity among the supporting generators.
    pub fn filtration(&self) -> usize {
        self.terms.keys().map(LatticePath::complexity).max().unwrap_or(0)
    }

    /// Apply a linear map defined on generators.
    pub fn map_linear(&self, mut f: impl FnMut(&LatticePath) -> Result<Self>) -> Result<Self> {
        let mut out = Self::zero();
        for (x, c) in &self.terms {
            out.add_scaled(c, &f(x)?);
        }
        Ok(out)
    }

    pub fn boundary(&self) -> Self {
        self.map_linear(|x| Ok(boundary_generator(x))).expect("boundary is total")
    }

    /// `cofaceExpansion` on every term.
    pub fn expansion(&self, n: usize) -> Result<Self> {
        self.map_linear(|x| expansion(x, n))
    }

    /// Bilinear extension of [`surj_compose`].
    pub fn compose(&self, slot: usize, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_scaled(&(a.clone() * b.clone()), &surj_compose(u, slot, v)?);
            }
        }
        Ok(out)
    }
}

fn sign<S: Scalar>(odd: bool) -> S {
    S::sign(odd)
}

/// `d` on one generator: per colour the alternating sum of occurrence
/// deletions, shifted by the Koszul sign `(−1)^{n_1 + … + n_{i−1}}`.
pub fn boundary_generator<S: Scalar>(x: &LatticePath) -> ChainElement<S> {
    let mut out = ChainElement::zero();
    let mut before = 0;
    for (i, m) in x.multiplicities().into_iter().enumerate() {
        if m >= 2 {
            for j in 0..m {
                let face = x.input_face(i + 1, j).expect("face of a repeated colour");
                out.add_term(sign((before + j) % 2 == 1), face);
            }
        }
        before += m - 1;
    }
    out
}

/// Letter spans of a cut: letter `t` occupies substrings `b[t]..=b[t+1]`.
fn cut_to_path(word: &[Colour], b: &[usize]) -> LatticePath {
    let n = *b.last().unwrap();
    let mut subs = vec![Vec::new(); n + 1];
    for (t, &c) in word.iter().enumerate() {
        for sub in subs.iter_mut().take(b[t + 1] + 1).skip(b[t]) {
            sub.push(c);
        }
    }
    LatticePath::new(subs).expect("cuts keep every colour")
}

/// The Koszul exponent of a cut, before the orientation factor.
pub fn cut_sign_exponent(word: &[Colour], b: &[usize]) -> usize {
    let l = word.len();
    let mut last = BTreeMap::new();
    for (t, &c) in word.iter().enumerate() {
        last.insert(c, t);
    }
    let len: Vec<usize> = (0..l).map(|t| b[t + 1] - b[t]).collect();
    let inn: Vec<usize> = (0..l).map(|t| usize::from(last[&word[t]] != t)).collect();
    let mut e = 0;
    let mut inner_before = 0;
    for t in 0..l {
        for s in t + 1..l {
            if word[t] > word[s] {
                e += len[t] * len[s] + len[t] * inn[s] + inn[t] * len[s];
            }
        }
        e += len[t] * inner_before;
        inner_before += inn[t];
    }
    e
}

/// All cuts `0 = b_0 ≤ … ≤ b_L = n` of a word of length `L`.
fn cuts(l: usize, n: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return Vec::new();
    }
    cut_sequences(l - 1, n)
        .into_iter()
        .map(|mid| {
            let mut b = Vec::with_capacity(l + 1);
            b.push(0);
            b.extend(mid);
            b.push(n);
            b
        })
        .collect()
}

/// Each term of the expansion of a bar-free generator with `n` bars: the
/// subdivided string and its sign exponent, orientation factor excluded.
pub fn expansion_terms(u: &LatticePath, n: usize) -> Result<Vec<(LatticePath, usize)>> {
    if u.n() != 0 {
        return Err(Error::InvalidPath(format!("{u} is already subdivided")));
    }
    let word = u.word();
    Ok(cuts(word.len(), n)
        .into_iter()
        .map(|b| (cut_to_path(&word, &b), cut_sign_exponent(&word, &b)))
        .collect())
}

/// The overlapping-cut expansion of a bar-free generator into `n + 1`
/// substrings, including the orientation factor `(−1)^{deg u}`.
pub fn expansion<S: Scalar>(u: &LatticePath, n: usize) -> Result<ChainElement<S>> {
    let omega = generator_degree(u);
    let mut out = ChainElement::zero();
    for (x, e) in expansion_terms(u, n)? {
        out.add_term(sign((e + omega) % 2 == 1), x);
    }
    Ok(out)
}

/// Expansion terms whose colour multiplicities are `mults`; the number of
/// bars is then forced.
pub fn expansion_terms_with_multiplicities(u: &LatticePath, mults: &[usize]) -> Result<Vec<(LatticePath, usize)>> {
    if mults.len() != u.k() {
        return Err(Error::Arity(format!("{} multiplicities for {} colours", mults.len(), u.k())));
    }
    let total: usize = mults.iter().sum();
    let Some(n) = total.checked_sub(u.len()) else {
        return Ok(Vec::new());
    };
    Ok(expansion_terms(u, n)?.into_iter().filter(|(x, _)| x.multiplicities() == mults).collect())
}

/// Composition in the surjection operad: cut `v` into as many overlapping
/// pieces as colour `slot` has occurrences in `u`, substitute, and drop
/// degenerate results. The sign is the cut sign of `v` times
/// `(−1)^{deg v · (n_{slot+1} + … + n_k)}` with `n_j` the arities of `u`.
pub fn surj_compose<S: Scalar>(u: &LatticePath, slot: usize, v: &LatticePath) -> Result<ChainElement<S>> {
    if u.n() != 0 || v.n() != 0 {
        return Err(Error::InvalidPath("surjection composition takes bar-free generators".into()));
    }
    if slot == 0 || slot > u.k() {
        return Err(Error::OutOfRange(format!("slot {slot} for {} colours", u.k())));
    }
    let r = u.multiplicity(slot);
    let after: usize = u.arities()[slot..].iter().sum();
    let extra = generator_degree(v) * after;
    let mut out = ChainElement::zero();
    for (piece, e) in expansion_terms(v, r - 1)? {
        let w = u.compose(slot, &piece)?;
        out.add_term(sign((e + extra) % 2 == 1), w);
    }
    Ok(out)
}

/// The unit of the surjection operad.
pub fn surj_unit<S: Scalar>() -> ChainElement<S> {
    ChainElement::generator(LatticePath::identity(0))
}

impl<S: Scalar> fmt::Display for ChainElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (x, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            let text = c.to_string();
            match text.strip_prefix('-') {
                Some(abs) => write!(f, "-{abs}*{x}")?,
                None => write!(f, "+{text}*{x}")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for ChainElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChainElement({self})")
    }
}

impl<S: Scalar> FromStr for ChainElement<S> {
    type Err = Error;

    /// Parses `+2*121 -1*12|21`; a bare `+` or `-` may stand apart, and a
    /// missing coefficient means one.
    fn from_str(text: &str) -> Result<Self> {
        let mut out = ChainElement::zero();
        let mut pending_neg = false;
        let t = text.trim();
        if t == "0" {
            return Ok(out);
        }
        for word in t.split_whitespace() {
            if word == "+" || word == "-" {
                pending_neg ^= word == "-";
                continue;
            }
            let (neg, body) = match word.as_bytes()[0] {
                b'+' => (false, &word[1..]),
                b'-' => (true, &word[1..]),
                _ => (false, word),
            };
            let (coef, path) = match body.split_once('*') {
                Some((c, p)) => {
                    (parse_scalar::<S>(c).ok_or_else(|| Error::Parse(format!("bad coefficient '{c}'")))?, p)
                }
                None => (S::one(), body),
            };
            let x: LatticePath = path.parse()?;
            if !is_nondegenerate(&x) {
                return Err(Error::Parse(format!("{x} is degenerate")));
            }
            let c = if neg ^ pending_neg { -coef } else { coef };
            out.add_term(c, x);
            pending_neg = false;
        }
        Ok(out)
    }
}

/// Nondegenerate bar-free words on exactly `k` colours with at most
/// `max_len` letters.
pub fn surjection_generators(k: usize, max_len: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    let mut word: Vec<Colour> = Vec::new();
    fn rec(k: usize, max_len: usize, word: &mut Vec<Colour>, out: &mut Vec<LatticePath>) {
        if word.len() >= k {
            let mut seen = vec![false; k];
            word.iter().for_each(|&c| seen[c as usize - 1] = true);
            if seen.iter().all(|&s| s) {
                out.push(LatticePath::new(vec![word.clone()]).unwrap());
            }
        }
        if word.len() == max_len {
            return;
        }
        for c in 1..=k as Colour {
            if word.last() != Some(&c) {
                word.push(c);
                rec(k, max_len, word, out);
                word.pop();
            }
        }
    }
    rec(k, max_len, &mut word, &mut out);
    out
}

/// Nondegenerate subdivided strings on exactly `k` colours with at most
/// `max_len` letters and `max_bars` bars.
pub fn subdivided_generators(k: usize, max_len: usize, max_bars: usize) -> Vec<LatticePath> {
    let mut out = Vec::new();
    for letters in k..=max_len {
        for mults in crate::paths::compositions(letters) {
            if mults.len() != k {
                continue;
            }
            let arities: Vec<usize> = mults.iter().map(|m| m - 1).collect();
            for n in 0..=max_bars {
                out.extend(crate::paths::enumerate(&arities, n).into_iter().filter(is_nondegenerate));
            }
        }
    }
    out
}

/// An algebra over the lattice path operad: subdivided strings act on
/// families of cochains.
pub trait LAlgebra {
    type Scalar: Scalar;
    type Cochain: Clone;

    /// Cosimplicial degree (arity) of a cochain.
    fn cochain_degree(&self, f: &Self::Cochain) -> usize;
    fn zero(&self, degree: usize) -> Self::Cochain;
    fn add_scaled(&self, acc: &mut Self::Cochain, c: &Self::Scalar, f: &Self::Cochain);
    /// The action of one subdivided string; `fs[i]` has degree
    /// `multiplicity(i+1) − 1`.
    fn evaluate(&self, x: &LatticePath, fs: &[Self::Cochain]) -> Result<Self::Cochain>;
}

/// The cochain operation of a homogeneous chain `u`: the signed sum over
/// expansions with colour `i` occurring `deg f_i + 1` times. Returns `None`
/// when the output degree would be negative, where the only cochain is zero.
pub fn act<A: LAlgebra>(alg: &A, u: &ChainElement<A::Scalar>, fs: &[A::Cochain]) -> Result<Option<A::Cochain>> {
    let ms: Vec<usize> = fs.iter().map(|f| alg.cochain_degree(f)).collect();
    let total: usize = ms.iter().sum();
    let Some(d) = u.degree().or(if u.is_zero() { Some(0) } else { None }) else {
        return Err(Error::Arity("the acting chain is not homogeneous".into()));
    };
    let Some(n) = total.checked_sub(d) else {
        return Ok(None);
    };
    let mults: Vec<usize> = ms.iter().map(|m| m + 1).collect();
    let mut out = alg.zero(n);
    for (g, c) in u.terms() {
        if g.n() != 0 {
            return Err(Error::InvalidPath(format!("{g} is not a surjection generator")));
        }
        if g.k() != fs.len() {
            return Err(Error::Arity(format!("{} cochains for {} colours", fs.len(), g.k())));
        }
        let omega = generator_degree(g);
        for (x, e) in expansion_terms_with_multiplicities(g, &mults)? {
            let val = alg.evaluate(&x, fs)?;
            let s = if (e + omega) % 2 == 1 { -c.clone() } else { c.clone() };
            alg.add_scaled(&mut out, &s, &val);
        }
    }
    Ok(Some(out))
}

/// Rings in which homology can be computed exactly.
pub trait HomologyScalar: Scalar {
    /// Rank of a matrix and, over the integers, the invariant factors
    /// greater than one.
    fn rank_and_torsion(m: &Matrix<Self>) -> Result<(usize, Vec<i64>)>;
}

impl HomologyScalar for i64 {
    fn rank_and_torsion(m: &Matrix<i64>) -> Result<(usize, Vec<i64>)> {
        let inv = smith_invariants(m)?;
        Ok((inv.len(), inv.into_iter().filter(|&d| d > 1).collect()))
    }
}

impl HomologyScalar for Q {
    fn rank_and_torsion(m: &Matrix<Q>) -> Result<(usize, Vec<i64>)> {
        Ok((m.rank(), Vec::new()))
    }
}

impl<const P: u64> HomologyScalar for Fp<P> {
    fn rank_and_torsion(m: &Matrix<Fp<P>>) -> Result<(usize, Vec<i64>)> {
        Ok((m.rank(), Vec::new()))
    }
}

/// A finite graded module with a differential of degree `step` (`-1` for
/// chains, `+1` for cochains).
#[derive(Clone)]
pub struct ChainComplex<S> {
    step: i64,
    basis: BTreeMap<i64, Vec<String>>,
    differential: BTreeMap<i64, Matrix<S>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: i64,
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: rank {}", self.degree, self.rank)?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
            write!(f, ", torsion {}", t.join(" + "))?;
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for ChainComplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainComplex").field("step", &self.step).field("basis", &self.basis).finish()
    }
}

impl<S: HomologyScalar> ChainComplex<S> {
    pub fn new(step: i64) -> Self {
        assert!(step == 1 || step == -1, "differentials have degree ±1");
        ChainComplex { step, basis: BTreeMap::new(), differential: BTreeMap::new() }
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn set_basis(&mut self, degree: i64, labels: Vec<String>) {
        self.basis.insert(degree, labels);
    }

    /// The differential out of `degree`, as a matrix from `C_degree` to
    /// `C_{degree+step}` (columns are source generators).
    pub fn set_differential(&mut self, degree: i64, m: Matrix<S>) -> Result<()> {
        let src = self.dim(degree);
        let dst = self.dim(degree + self.step);
        if m.cols() != src || m.rows() != dst {
            return Err(Error::Arity(format!(
                "differential out of degree {degree} is {}x{}, expected {dst}x{src}",
                m.rows(),
                m.cols()
            )));
        }
        self.differential.insert(degree, m);
        Ok(())
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.basis.get(&degree).map_or(0, Vec::len)
    }

    pub fn basis(&self, degree: i64) -> &[String] {
        self.basis.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn differential(&self, degree: i64) -> Matrix<S> {
        self.differential
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(degree + self.step), self.dim(degree)))
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.basis.keys().copied().collect()
    }

    /// Check `d ∘ d = 0` everywhere.
    pub fn validate(&self) -> Result<()> {
        for &deg in self.basis.keys() {
            let first = self.differential(deg);
            let second = self.differential(deg + self.step);
            if first.cols() > 0 && second.rows() > 0 && !second.mul(&first).is_zero() {
                return Err(Error::NotSquareZero(deg));
            }
        }
        Ok(())
    }

    /// Homology in the given degrees (ascending).
    pub fn homology(&self, degrees: impl IntoIterator<Item = i64>) -> Result<Vec<HomologyGroup>> {
        self.validate()?;
        let mut degrees: Vec<i64> = degrees.into_iter().collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
            .into_iter()
            .map(|deg| {
                let (out_rank, _) = S::rank_and_torsion(&self.differential(deg))?;
                let (in_rank, torsion) = S::rank_and_torsion(&self.differential(deg - self.step))?;
                Ok(HomologyGroup { degree: deg, rank: self.dim(deg) - out_rank - in_rank, torsion })
            })
            .collect()
    }
}

/// The subcomplex `X_m(k)` of the surjection operad spanned by generators
/// of complexity at most `m`, as a chain complex over `S`.
pub fn surjection_complex<S: HomologyScalar>(k: usize, m: usize) -> ChainComplex<S> {
    // complexity ≤ m bounds every pair projection to m + 1 runs
    let max_len = k * (m + 1);
    let gens: Vec<LatticePath> =
        surjection_generators(k, max_len).into_iter().filter(|g| g.complexity() <= m).collect();
    let mut by_degree: BTreeMap<i64, Vec<LatticePath>> = BTreeMap::new();
    for g in gens {
        by_degree.entry(generator_degree(&g) as i64).or_default().push(g);
    }
    let mut cx = ChainComplex::new(-1);
    for (d, gs) in &by_degree {
        cx.set_basis(*d, gs.iter().map(ToString::to_string).collect());
    }
    for (d, gs) in &by_degree {
        let Some(targets) = by_degree.get(&(d - 1)) else { continue };
        let index: BTreeMap<&LatticePath, usize> = targets.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut mat = Matrix::zeros(targets.len(), gs.len());
        for (j, g) in gs.iter().enumerate() {
            for (x, c) in boundary_generator::<S>(g).terms() {
                mat[(index[x], j)] = c.clone();
            }
        }
        cx.set_differential(*d, mat).expect("shapes agree");
    }
    cx
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = i64;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn el(s: &str) -> ChainElement<Z> {
        s.parse().unwrap()
    }

    #[test]
    fn boundary_examples() {
        assert!(ChainElement::<Z>::generator(p("12")).boundary().is_zero());
        assert_eq!(ChainElement::<Z>::generator(p("121")).boundary(), el("+1*21 -1*12"));
        assert_eq!(ChainElement::<Z>::generator(p("212")).boundary(), el("+1*12 -1*21"));
    }

    #[test]
    fn expansion_example() {
        let e: ChainElement<Z> = expansion(&p("121"), 1).unwrap();
        assert_eq!(e, el("-1*1|121 +1*12|21 +1*121|1"));
        let e0: ChainElement<Z> = expansion(&p("121"), 0).unwrap();
        assert_eq!(e0, el("-1*121"));
        let e: ChainElement<Z> = expansion(&p("12"), 2).unwrap();
        assert_eq!(e.len(), 3);
    }

    #[test]
    fn composition_examples() {
        let c: ChainElement<Z> = surj_compose(&p("12"), 1, &p("12")).unwrap();
        assert_eq!(c, el("123"));
        let c: ChainElement<Z> = surj_compose(&p("12"), 1, &p("1")).unwrap();
        assert_eq!(c, el("12"));
        let c: ChainElement<Z> = surj_compose(&p("1"), 1, &p("121")).unwrap();
        assert_eq!(c, el("121"));
    }

    #[test]
    fn filtration_examples() {
        assert_eq!(el("121").filtration(), 2);
        assert_eq!(el("1212").filtration(), 3);
    }

    #[test]
    fn parse_format() {
        let e = el("1|121 - 12|21 -1*121|1");
        assert_eq!(e.to_string(), "+1*1|121 -1*12|21 -1*121|1");
        assert!("+1*11".parse::<ChainElement<Z>>().is_err());
        assert_eq!(el("0"), ChainElement::zero());
    }

    #[test]
    fn surjection_stage_two_is_a_circle() {
        let h = surjection_complex::<Z>(2, 2).homology(0..=2).unwrap();
        assert_eq!(h.iter().map(|g| g.rank).collect::<Vec<_>>(), vec![1, 1, 0]);
    }

    fn gen(x: &LatticePath) -> ChainElement<Z> {
        ChainElement::generator(x.clone())
    }

    #[test]
    fn boundary_squares_to_zero_on_subdivided_strings() {
        for k in 1..=3 {
            for x in subdivided_generators(k, 5, 2) {
                assert!(gen(&x).boundary().boundary().is_zero(), "{x}");
            }
        }
    }

    #[test]
    fn expansion_is_a_map_into_the_totalization() {
        for k in 1..=3 {
            for u in surjection_generators(k, 4) {
                for n in 1..=3 {
                    let lhs = expansion::<Z>(&u, n)
                        .unwrap()
                        .boundary()
                        .plus(&gen(&u).boundary().expansion(n).unwrap().scaled(&Z::sign(n % 2 == 1)));
                    let prev = expansion::<Z>(&u, n - 1).unwrap();
                    let mut rhs = ChainElement::zero();
                    for j in 0..=n {
                        let cof = prev.map_linear(|x| Ok(gen(&x.output_coface(j).unwrap()))).unwrap();
                        rhs.add_scaled(&Z::sign(j % 2 == 1), &cof);
                    }
                    assert_eq!(lhs, rhs, "{u} n={n}");
                }
            }
        }
    }

    #[test]
    fn expansion_is_killed_by_codegeneracies() {
        for k in 1..=3 {
            for u in surjection_generators(k, 4) {
                for n in 1..=3 {
                    let e = expansion::<Z>(&u, n).unwrap();
                    for j in 0..n {
                        let s = e.map_linear(|x| Ok(gen(&x.output_codegeneracy(j).unwrap()))).unwrap();
                        assert!(s.is_zero(), "{u} n={n} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn composition_satisfies_leibniz() {
        let us = surjection_generators(2, 4).into_iter().chain(surjection_generators(1, 1));
        for u in us {
            for v in surjection_generators(2, 4) {
                for slot in 1..=u.k() {
                    let lhs = surj_compose::<Z>(&u, slot, &v).unwrap().boundary();
                    let a = gen(&u).boundary().compose(slot, &gen(&v)).unwrap();
                    let b = gen(&u).compose(slot, &gen(&v).boundary()).unwrap();
                    let rhs = a.plus(&b.scaled(&Z::sign(generator_degree(&u) % 2 == 1)));
                    assert_eq!(lhs, rhs, "{u} o{slot} {v}");
                }
            }
        }
    }
}
