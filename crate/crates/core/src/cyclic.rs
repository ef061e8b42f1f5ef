//! Cyclic lattice paths: a lattice path together with one distinguished
//! occurrence per colour.
//!
//! The marker of colour `i` is the occurrence that element `0` of `[n_i]`
//! is sent to; element `a` goes to occurrence `(marker + a) mod (n_i + 1)`.
//! Read this way the path is a [`JoinMorphism`] whose components lie in the
//! cyclic category, and output rotations act by post-composition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{split_tokens, tokenize, write_colour, Colour, JoinMorphism, LatticePath, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicLatticePath {
    base: LatticePath,
    markers: Vec<usize>,
}

impl CyclicLatticePath {
    pub fn new(base: LatticePath, markers: Vec<usize>) -> Result<Self> {
        if markers.len() != base.k() {
            return Err(Error::Arity(format!("{} markers for {} colours", markers.len(), base.k())));
        }
        for (i, (&m, r)) in markers.iter().zip(base.multiplicities()).enumerate() {
            if m >= r {
                return Err(Error::OutOfRange(format!("marker {m} for colour {} of multiplicity {r}", i + 1)));
            }
        }
        Ok(CyclicLatticePath { base, markers })
    }

    /// All markers on first occurrences.
    pub fn plain(base: LatticePath) -> Self {
        let k = base.k();
        CyclicLatticePath { base, markers: vec![0; k] }
    }

    /// `1|1|…|1` with the marker on occurrence `s`: the rotation
    /// `a ↦ a + s` of `[n]`.
    pub fn rotation(n: usize, s: usize) -> Self {
        CyclicLatticePath { base: LatticePath::identity(n), markers: vec![s % (n + 1)] }
    }

    pub fn base(&self) -> &LatticePath {
        &self.base
    }

    pub fn markers(&self) -> &[usize] {
        &self.markers
    }

    pub fn k(&self) -> usize {
        self.base.k()
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Every marker choice over a base path.
    pub fn all_markings(base: &LatticePath) -> Vec<CyclicLatticePath> {
        let mults = base.multiplicities();
        let mut out = Vec::new();
        let mut cur = vec![0; mults.len()];
        loop {
            out.push(CyclicLatticePath { base: base.clone(), markers: cur.clone() });
            let mut i = 0;
            loop {
                if i == cur.len() {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < mults[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// The component of colour `i` (1-based) as a set map `[n_i] → [n]`.
    pub fn component_map(&self, colour: usize) -> Vec<usize> {
        let plain = &self.base.components()[colour - 1];
        let r = plain.values().len();
        let m = self.markers[colour - 1];
        (0..r).map(|a| plain.values()[(m + a) % r]).collect()
    }

    pub fn join_morphism(&self) -> JoinMorphism {
        let mults = self.base.multiplicities();
        let mut counters = vec![0; self.k()];
        let mut order = Vec::with_capacity(self.base.len());
        for &c in self.base.substrings().iter().flatten() {
            let i = c as usize - 1;
            order.push((i, (counters[i] + mults[i] - self.markers[i]) % mults[i]));
            counters[i] += 1;
        }
        let values = (1..=self.k()).map(|i| self.component_map(i)).collect();
        JoinMorphism::new(values, self.n(), order).expect("cyclic path gives a join morphism")
    }

    /// Read back a join morphism whose blocks appear along the string in
    /// a cyclic rotation of their natural order.
    pub fn from_join_morphism(j: &JoinMorphism) -> Option<CyclicLatticePath> {
        let arities = j.arities();
        let k = arities.len();
        let mut seq: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut subs = Vec::with_capacity(j.target() + 1);
        for fiber in j.fibers() {
            let mut sub = Vec::with_capacity(fiber.len());
            for (i, a) in fiber {
                seq[i].push(a);
                sub.push(i as Colour + 1);
            }
            subs.push(sub);
        }
        let mut markers = Vec::with_capacity(k);
        for (i, s) in seq.iter().enumerate() {
            let r = arities[i] + 1;
            let m = s.iter().position(|&a| a == 0)?;
            if (0..r).any(|q| s[q] != (q + r - m) % r) {
                return None;
            }
            markers.push(m);
        }
        let base = LatticePath::new(subs).ok()?;
        Some(CyclicLatticePath { base, markers })
    }

    /// Cyclic composition `self ∘_slot y`: the first substring of `y` goes to
    /// the marked occurrence of `slot`, the rest follow circularly.
    pub fn compose(&self, slot: usize, y: &CyclicLatticePath) -> Result<CyclicLatticePath> {
        let k = self.k();
        if slot == 0 || slot > k {
            return Err(Error::OutOfRange(format!("slot {slot} for {k} colours")));
        }
        let r = self.base.multiplicity(slot);
        if r != y.n() + 1 {
            return Err(Error::Arity(format!(
                "colour {slot} occurs {r} times but the inserted path has {} substrings",
                y.n() + 1
            )));
        }
        let ky = y.k();
        let s = slot as Colour;
        let rename_x = |c: Colour| if c < s { c } else { c + ky as Colour - 1 };
        let m = self.markers[slot - 1];

        // Track every letter as (new colour, is marked) so markers follow
        // their occurrence.
        let marked_y: Vec<Vec<(Colour, bool)>> = {
            let mut counters = vec![0; ky];
            y.base
                .substrings()
                .iter()
                .map(|sub| {
                    sub.iter()
                        .map(|&c| {
                            let i = c as usize - 1;
                            let hit = counters[i] == y.markers[i];
                            counters[i] += 1;
                            (c + s - 1, hit)
                        })
                        .collect()
                })
                .collect()
        };
        let mut counters = vec![0; k];
        let mut subs: Vec<Vec<(Colour, bool)>> = Vec::with_capacity(self.n() + 1);
        for sub in self.base.substrings() {
            let mut out = Vec::new();
            for &c in sub {
                let i = c as usize - 1;
                let q = counters[i];
                counters[i] += 1;
                if c == s {
                    let piece = (q + r - m) % r;
                    out.extend(marked_y[piece].iter().copied());
                } else {
                    out.push((rename_x(c), q == self.markers[i]));
                }
            }
            subs.push(out);
        }
        Self::from_marked(subs)
    }

    fn from_marked(subs: Vec<Vec<(Colour, bool)>>) -> Result<CyclicLatticePath> {
        let plain: Vec<Vec<Colour>> = subs.iter().map(|s| s.iter().map(|p| p.0).collect()).collect();
        let base = LatticePath::new(plain)?;
        let mut counters = vec![0; base.k()];
        let mut markers = vec![None; base.k()];
        for &(c, hit) in subs.iter().flatten() {
            let i = c as usize - 1;
            if hit {
                if markers[i].is_some() {
                    return Err(Error::Parse(format!("colour {c} is marked twice")));
                }
                markers[i] = Some(counters[i]);
            }
            counters[i] += 1;
        }
        let markers = markers.into_iter().map(|m| m.unwrap_or(0)).collect();
        CyclicLatticePath::new(base, markers)
    }

    /// Act by the rotation `t ↦ t + s` of the output `[n]`.
    pub fn output_rotate(&self, s: usize) -> CyclicLatticePath {
        let n = self.n();
        let g: Vec<usize> = (0..=n).map(|t| (t + s) % (n + 1)).collect();
        let j = self.join_morphism().post_compose(&g, n).expect("rotation has the right shape");
        Self::from_join_morphism(&j).expect("rotations preserve the cyclic normal form")
    }

    /// Relabel colours; markers travel with their colour.
    pub fn sym_action(&self, rho: &Permutation) -> Result<CyclicLatticePath> {
        let base = self.base.sym_action(rho)?;
        let mut markers = vec![0; self.k()];
        for (i, &m) in self.markers.iter().enumerate() {
            markers[rho.apply(i + 1) - 1] = m;
        }
        Ok(CyclicLatticePath { base, markers })
    }

    /// The least even bound for `c_ij` over all output rotations.
    pub fn cyclic_complexity(&self) -> usize {
        if self.k() < 2 {
            return 0;
        }
        let mut best = 0;
        for s in 0..=self.n() {
            best = best.max(self.output_rotate(s).base.complexity());
        }
        best + best % 2
    }
}

impl fmt::Display for CyclicLatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counters = vec![0; self.k()];
        for (s, sub) in self.base.substrings().iter().enumerate() {
            if s > 0 {
                f.write_str("|")?;
            }
            for &c in sub {
                let i = c as usize - 1;
                if counters[i] == self.markers[i] {
                    f.write_str("^")?;
                }
                counters[i] += 1;
                write_colour(f, c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclicLatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicLatticePath({self})")
    }
}

impl FromStr for CyclicLatticePath {
    type Err = Error;

    /// Markers are written `^` before the letter; an unmarked colour is
    /// marked on its first occurrence.
    fn from_str(text: &str) -> Result<Self> {
        let tokens = tokenize(text, true)?;
        CyclicLatticePath::from_marked(split_tokens(&tokens))
    }
}

/// A planar operad with cyclic actions `τ_n` on arity `n`.
pub trait CyclicOperad {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn arity(&self, x: &Self::Elem) -> usize;
    /// `x ∘_i y`, 1-based.
    fn compose(&self, x: &Self::Elem, i: usize, y: &Self::Elem) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    /// The generator `τ_n` of `ℤ/(n+1)` acting on an arity-`n` element.
    fn rotate(&self, x: &Self::Elem) -> Self::Elem;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub violation: Option<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Check the planar cyclic operad relations on all pairs of samples:
/// `τ(x ∘_1 y) = τ(y) ∘_n τ(x)`, `τ(x ∘_i y) = τ(x) ∘_{i−1} y` for `i > 1`,
/// `τ^{n+1} = id`, and the unit is fixed.
pub fn cyclic_operad_axiom_check<O: CyclicOperad>(op: &O, samples: &[O::Elem]) -> AxiomReport {
    let mut checked = 0;
    let unit = op.unit();
    checked += 1;
    if op.rotate(&unit) != unit {
        return AxiomReport { checked, violation: Some("the unit is not fixed by τ_1".into()) };
    }
    for x in samples {
        let n = op.arity(x);
        let mut t = x.clone();
        for _ in 0..=n {
            t = op.rotate(&t);
        }
        checked += 1;
        if &t != x {
            return AxiomReport { checked, violation: Some(format!("τ^{} ≠ id on {x:?}", n + 1)) };
        }
    }
    for x in samples {
        let m = op.arity(x);
        for y in samples {
            let n = op.arity(y);
            for i in 1..=m {
                // with no inputs, y has no slot to receive τ(x)
                if i == 1 && n == 0 {
                    continue;
                }
                let lhs = op.rotate(&op.compose(x, i, y));
                let rhs = if i == 1 {
                    op.compose(&op.rotate(y), n, &op.rotate(x))
                } else {
                    op.compose(&op.rotate(x), i - 1, y)
                };
                checked += 1;
                if lhs != rhs {
                    return AxiomReport {
                        checked,
                        violation: Some(format!("relation fails for x = {x:?}, i = {i}, y = {y:?}")),
                    };
                }
            }
        }
    }
    AxiomReport { checked, violation: None }
}

/// The associativity operad: one operation per arity, trivial rotations.
pub struct AssociativeOperad;

impl CyclicOperad for AssociativeOperad {
    type Elem = usize;

    fn arity(&self, x: &usize) -> usize {
        *x
    }
    fn compose(&self, x: &usize, _i: usize, y: &usize) -> usize {
        x + y - 1
    }
    fn unit(&self) -> usize {
        1
    }
    fn rotate(&self, x: &usize) -> usize {
        *x
    }
}
