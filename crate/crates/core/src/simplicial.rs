//! Finite simplicial sets, normalized (co)chains, the lattice path action
//! on cochains, the sphere coalgebra and Steenrod squares.
//!
//! A simplex is stored in Eilenberg–Zilber normal form: a nondegenerate
//! cell together with a degeneracy operator onto its dimension.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::chains::{self, ChainComplex, ChainElement, HomologyScalar, LAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{in_span, Matrix};
use crate::paths::{LatticePath, SimplicialOperator};
use crate::scalar::{Field, Scalar};
use crate::F2;

/// `σ^* y` for a nondegenerate cell `y` and a surjection `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplex {
    pub cell: usize,
    pub degeneracy: SimplicialOperator,
}

impl Simplex {
    pub fn nondegenerate(dim: usize, cell: usize) -> Self {
        Simplex { cell, degeneracy: SimplicialOperator::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.degeneracy.source()
    }

    pub fn cell_dim(&self) -> usize {
        self.degeneracy.target()
    }

    pub fn is_degenerate(&self) -> bool {
        self.dim() != self.cell_dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub label: String,
    /// `d_0 … d_k` of a `k`-cell; empty for vertices.
    pub faces: Vec<Simplex>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    name: String,
    cells: Vec<Vec<Cell>>,
}

impl SimplicialSet {
    /// Validates face dimensions and the simplicial identities
    /// `d_i d_j = d_{j−1} d_i` for `i < j`.
    pub fn new(name: impl Into<String>, cells: Vec<Vec<Cell>>) -> Result<Self> {
        let set = SimplicialSet { name: name.into(), cells };
        set.validate()?;
        Ok(set)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSimplicial(m));
        for (k, cells) in self.cells.iter().enumerate() {
            for c in cells {
                let expected = if k == 0 { 0 } else { k + 1 };
                if c.faces.len() != expected {
                    return bad(format!("{} has {} faces, expected {expected}", c.label, c.faces.len()));
                }
                for f in &c.faces {
                    if f.dim() + 1 != k || !f.degeneracy.is_surjective() || f.cell >= self.count(f.cell_dim()) {
                        return bad(format!("{} has a malformed face", c.label));
                    }
                }
            }
        }
        for k in 2..self.cells.len() {
            for c in &self.cells[k] {
                for j in 0..=k {
                    for i in 0..j {
                        let a = self.apply(&SimplicialOperator::coface(k - 1, i), &c.faces[j]);
                        let b = self.apply(&SimplicialOperator::coface(k - 1, j - 1), &c.faces[i]);
                        if a != b {
                            return bad(format!("d_{i} d_{j} ≠ d_{} d_{i} on {}", j - 1, c.label));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    /// Number of nondegenerate `n`-simplices.
    pub fn count(&self, n: usize) -> usize {
        self.cells.get(n).map_or(0, Vec::len)
    }

    pub fn cell(&self, n: usize, idx: usize) -> &Cell {
        &self.cells[n][idx]
    }

    pub fn labels(&self, n: usize) -> Vec<String> {
        self.cells.get(n).map_or(Vec::new(), |cs| cs.iter().map(|c| c.label.clone()).collect())
    }

    pub fn find(&self, n: usize, label: &str) -> Option<usize> {
        self.cells.get(n)?.iter().position(|c| c.label == label)
    }

    /// `θ^* s` for a simplicial operator `θ : [m] → [dim s]`.
    pub fn apply(&self, theta: &SimplicialOperator, s: &Simplex) -> Simplex {
        let phi = s.degeneracy.after(theta).expect("operator matches the simplex dimension");
        let (epi, mono) = phi.factor();
        let k = mono.target();
        if mono.source() == k {
            return Simplex { cell: s.cell, degeneracy: epi };
        }
        let i = (0..=k).rev().find(|v| !mono.values().contains(v)).unwrap();
        let shifted: Vec<usize> = mono.values().iter().map(|&v| if v > i { v - 1 } else { v }).collect();
        let rest = SimplicialOperator::new(shifted, k - 1).unwrap();
        let face = &self.cells[k][s.cell].faces[i];
        let inner = self.apply(&rest, face);
        Simplex { cell: inner.cell, degeneracy: inner.degeneracy.after(&epi).unwrap() }
    }

    /// `d_j` of a nondegenerate `n`-simplex.
    pub fn face(&self, n: usize, idx: usize, j: usize) -> &Simplex {
        &self.cells[n][idx].faces[j]
    }

    /// The standard simplex `Δ[n]`; cells are increasing vertex lists.
    pub fn standard(n: usize) -> Self {
        let facet: Vec<usize> = (0..=n).collect();
        Self::from_complex(format!("delta{n}"), &[facet]).expect("standard simplex")
    }

    /// An ordered simplicial complex given by its facets (vertex lists);
    /// every face is included and simplices are oriented by vertex order.
    pub fn from_complex(name: impl Into<String>, facets: &[Vec<usize>]) -> Result<Self> {
        let mut by_dim: Vec<std::collections::BTreeSet<Vec<usize>>> = Vec::new();
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                return Err(Error::InvalidSimplicial("empty facet".into()));
            }
            let k = f.len();
            for mask in 1u64..(1 << k) {
                let sub: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = sub.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, Default::default());
                }
                by_dim[d].insert(sub);
            }
        }
        let index: Vec<BTreeMap<Vec<usize>, usize>> =
            by_dim.iter().map(|s| s.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect()).collect();
        let label = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join("");
        let cells = by_dim
            .iter()
            .enumerate()
            .map(|(d, simplices)| {
                simplices
                    .iter()
                    .map(|s| Cell {
                        label: label(s),
                        faces: if d == 0 {
                            Vec::new()
                        } else {
                            (0..=d)
                                .map(|j| {
                                    let mut t = s.clone();
                                    t.remove(j);
                                    Simplex::nondegenerate(d - 1, index[d - 1][&t])
                                })
                                .collect()
                        },
                    })
                    .collect()
            })
            .collect();
        Self::new(name, cells)
    }

    /// `S^m = Δ[m]/∂Δ[m]`: a base point `*` and one cell `e` of dimension `m`.
    pub fn sphere(m: usize) -> Self {
        let base = Cell { label: "*".into(), faces: Vec::new() };
        let mut cells = vec![vec![base]];
        if m == 0 {
            cells[0].push(Cell { label: "e".into(), faces: Vec::new() });
        } else {
            cells.resize(m + 1, Vec::new());
            let collapsed = Simplex { cell: 0, degeneracy: SimplicialOperator::new(vec![0; m], 0).unwrap() };
            cells[m].push(Cell { label: "e".into(), faces: vec![collapsed; m + 1] });
        }
        Self::new(format!("sphere{m}"), cells).expect("sphere")
    }

    /// The six-vertex real projective plane (hemi-icosahedron).
    pub fn rp2() -> Self {
        let t = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]];
        let facets: Vec<Vec<usize>> = t.iter().map(|f| f.to_vec()).collect();
        Self::from_complex("rp2", &facets).expect("rp2")
    }

    /// The 9-vertex, 18-triangle torus on a 3×3 grid.
    pub fn torus() -> Self {
        let v = |i: usize, j: usize| 3 * (i % 3) + (j % 3);
        let mut facets = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                facets.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
                facets.push(vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
            }
        }
        Self::from_complex("torus", &facets).expect("torus")
    }

    /// `delta:N`, `sphere:M`, `rp2` or `torus`.
    pub fn builtin(name: &str) -> Result<Self> {
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad dimension in '{name}'")));
        match name.split_once(':') {
            Some(("delta", n)) => Ok(Self::standard(num(n)?)),
            Some(("sphere", m)) => Ok(Self::sphere(num(m)?)),
            None if name == "rp2" => Ok(Self::rp2()),
            None if name == "torus" => Ok(Self::torus()),
            None if name == "circle" => Ok(Self::sphere(1)),
            _ => Err(Error::Parse(format!("unknown space '{name}'"))),
        }
    }

    /// Reads `{"name", "simplices": [[cell, …] per dimension]}` where a cell
    /// is `{"label", "faces": [face, …]}` and a face is either the label of
    /// a nondegenerate cell one dimension down or
    /// `{"cell": label, "dim": d, "degeneracy": [i₁, …]}` meaning
    /// `s_{i₁} ⋯ s_{i_r}` applied to that cell.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("simplicial set JSON: {m}"));
        let name = v.get("name").and_then(Value::as_str).unwrap_or("custom").to_string();
        let dims = v.get("simplices").and_then(Value::as_array).ok_or_else(|| bad("missing simplices"))?;
        let mut labels: Vec<Vec<String>> = Vec::new();
        for d in dims {
            let cells = d.as_array().ok_or_else(|| bad("each dimension is an array"))?;
            labels.push(
                cells
                    .iter()
                    .map(|c| c.get("label").and_then(Value::as_str).map(String::from).ok_or_else(|| bad("missing label")))
                    .collect::<Result<_>>()?,
            );
        }
        let lookup = |d: usize, l: &str| {
            labels.get(d).and_then(|ls| ls.iter().position(|x| x == l)).ok_or_else(|| bad(&format!("unknown cell {l}")))
        };
        let mut cells = Vec::new();
        for (k, d) in dims.iter().enumerate() {
            let mut row = Vec::new();
            for c in d.as_array().unwrap() {
                let label = c["label"].as_str().unwrap().to_string();
                let mut faces = Vec::new();
                if k > 0 {
                    for f in c.get("faces").and_then(Value::as_array).ok_or_else(|| bad("missing faces"))? {
                        faces.push(match f {
                            Value::String(l) => Simplex::nondegenerate(k - 1, lookup(k - 1, l)?),
                            Value::Object(o) => {
                                let cd = o.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("face dim"))? as usize;
                                let l = o.get("cell").and_then(Value::as_str).ok_or_else(|| bad("face cell"))?;
                                let word: Vec<usize> = o
                                    .get("degeneracy")
                                    .and_then(Value::as_array)
                                    .map(|a| a.iter().filter_map(Value::as_u64).map(|x| x as usize).collect())
                                    .unwrap_or_default();
                                Simplex { cell: lookup(cd, l)?, degeneracy: degeneracy_from_word(cd, &word)? }
                            }
                            _ => return Err(bad("face must be a label or an object")),
                        });
                    }
                }
                row.push(Cell { label, faces });
            }
            cells.push(row);
        }
        Self::new(name, cells)
    }

    pub fn to_json(&self) -> Value {
        let dims: Vec<Value> = self
            .cells
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|c| {
                        let faces: Vec<Value> = c
                            .faces
                            .iter()
                            .map(|f| {
                                let l = &self.cells[f.cell_dim()][f.cell].label;
                                if f.is_degenerate() {
                                    json!({"cell": l, "dim": f.cell_dim(), "degeneracy": degeneracy_word(&f.degeneracy)})
                                } else {
                                    Value::String(l.clone())
                                }
                            })
                            .collect();
                        if faces.is_empty() {
                            json!({"label": c.label})
                        } else {
                            json!({"label": c.label, "faces": faces})
                        }
                    })
                    .collect()
            })
            .collect();
        json!({"name": self.name, "simplices": dims})
    }

    /// Normalized chains `N_*(X; S)`.
    pub fn chain_complex<S: HomologyScalar>(&self) -> ChainComplex<S> {
        let mut cx = ChainComplex::new(-1);
        for n in 0..self.cells.len() {
            cx.set_basis(n as i64, self.labels(n));
        }
        for n in 1..self.cells.len() {
            cx.set_differential(n as i64, self.boundary_matrix(n)).expect("shapes agree");
        }
        cx
    }

    /// Normalized cochains `N^*(X; S)`.
    pub fn cochain_complex<S: HomologyScalar>(&self) -> ChainComplex<S> {
        let mut cx = ChainComplex::new(1);
        for n in 0..self.cells.len() {
            cx.set_basis(n as i64, self.labels(n));
        }
        for n in 0..self.cells.len().saturating_sub(1) {
            cx.set_differential(n as i64, self.boundary_matrix(n + 1).transpose()).expect("shapes agree");
        }
        cx
    }

    /// `∂ = Σ (−1)^j d_j` from `N_n` to `N_{n−1}`, degenerate faces dropped.
    pub fn boundary_matrix<S: Scalar>(&self, n: usize) -> Matrix<S> {
        let mut m = Matrix::<S>::zeros(self.count(n - 1), self.count(n));
        for (y, c) in self.cells.get(n).into_iter().flatten().enumerate() {
            for (j, f) in c.faces.iter().enumerate() {
                if !f.is_degenerate() {
                    m[(f.cell, y)] = m[(f.cell, y)].clone() + S::sign(j % 2 == 1);
                }
            }
        }
        m
    }
}

/// A simplicial map, given by the images of the nondegenerate cells.
pub struct SimplicialMap<'a> {
    source: &'a SimplicialSet,
    target: &'a SimplicialSet,
    images: Vec<Vec<Simplex>>,
}

impl<'a> SimplicialMap<'a> {
    /// Checks dimensions and compatibility with every face.
    pub fn new(source: &'a SimplicialSet, target: &'a SimplicialSet, images: Vec<Vec<Simplex>>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidSimplicial(m));
        if images.len() != source.cells.len() {
            return bad("one list of images per dimension".into());
        }
        for (k, row) in images.iter().enumerate() {
            if row.len() != source.count(k) {
                return bad(format!("{} images for {} cells of dimension {k}", row.len(), source.count(k)));
            }
            for s in row {
                if s.dim() != k || s.cell >= target.count(s.cell_dim()) || !s.degeneracy.is_surjective() {
                    return bad(format!("malformed image in dimension {k}"));
                }
            }
        }
        let map = SimplicialMap { source, target, images };
        for k in 1..map.images.len() {
            for (y, c) in source.cells[k].iter().enumerate() {
                for (j, face) in c.faces.iter().enumerate() {
                    let image_face = target.apply(&SimplicialOperator::coface(k, j), &map.images[k][y]);
                    if image_face != map.image(face) {
                        return bad(format!("the map does not commute with d_{j} on {}", c.label));
                    }
                }
            }
        }
        Ok(map)
    }

    pub fn image(&self, s: &Simplex) -> Simplex {
        self.target.apply(&s.degeneracy, &self.images[s.cell_dim()][s.cell])
    }

    pub fn pullback<S: Scalar>(&self, f: &SimplicialCochain<S>) -> SimplicialCochain<S> {
        let n = f.degree;
        let values = (0..self.source.count(n)).map(|y| f.evaluate(&self.images[n][y])).collect();
        SimplicialCochain { degree: n, values }
    }

    /// `Δ[n] → S^n` sending the top simplex to the sphere cell and every
    /// other simplex to the base point.
    pub fn collapse_boundary(delta: &'a SimplicialSet, sphere: &'a SimplicialSet) -> Result<Self> {
        let n = delta.dimension();
        let images = (0..=n)
            .map(|k| {
                (0..delta.count(k))
                    .map(|_| {
                        if k == n {
                            Simplex::nondegenerate(n, 0)
                        } else {
                            Simplex { cell: 0, degeneracy: SimplicialOperator::new(vec![0; k + 1], 0).unwrap() }
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(delta, sphere, images)
    }
}

/// `s_{i₁} ⋯ s_{i_r}` on a `d`-cell, as the surjection `σ^{i_r} ∘ ⋯ ∘ σ^{i₁}`.
fn degeneracy_from_word(d: usize, word: &[usize]) -> Result<SimplicialOperator> {
    let mut op = SimplicialOperator::identity(d);
    let mut dim = d;
    for &i in word.iter().rev() {
        if i > dim {
            return Err(Error::InvalidSimplicial(format!("degeneracy s_{i} on a {dim}-simplex")));
        }
        op = op.after(&SimplicialOperator::codegeneracy(dim, i))?;
        dim += 1;
    }
    Ok(op)
}

/// Canonical word `s_{i₁} ⋯ s_{i_r}` with `i₁ > ⋯ > i_r` for a surjection.
fn degeneracy_word(op: &SimplicialOperator) -> Vec<usize> {
    let v = op.values();
    (0..v.len() - 1).rev().filter(|&i| v[i] == v[i + 1]).collect()
}

/// A normalized cochain: one value per nondegenerate simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCochain<S> {
    pub degree: usize,
    pub values: Vec<S>,
}

impl<S: Scalar> SimplicialCochain<S> {
    pub fn zero(x: &SimplicialSet, degree: usize) -> Self {
        SimplicialCochain { degree, values: vec![S::zero(); x.count(degree)] }
    }

    /// The dual of one nondegenerate simplex.
    pub fn indicator(x: &SimplicialSet, degree: usize, cell: usize) -> Self {
        let mut f = Self::zero(x, degree);
        f.values[cell] = S::one();
        f
    }

    /// Value on any simplex; zero on degenerate ones.
    pub fn evaluate(&self, s: &Simplex) -> S {
        if s.is_degenerate() || s.dim() != self.degree {
            S::zero()
        } else {
            self.values[s.cell].clone()
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "cochains of different degrees");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.clone() + b.clone()).collect();
        SimplicialCochain { degree: self.degree, values }
    }

    pub fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "cochains of different degrees");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.clone() - b.clone()).collect();
        SimplicialCochain { degree: self.degree, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// `δf = Σ (−1)^j f ∘ d_j`.
pub fn coboundary<S: Scalar>(x: &SimplicialSet, f: &SimplicialCochain<S>) -> SimplicialCochain<S> {
    let n = f.degree + 1;
    let values = (0..x.count(n))
        .map(|y| {
            x.cell(n, y).faces.iter().enumerate().fold(S::zero(), |acc, (j, face)| {
                let v = f.evaluate(face);
                if j % 2 == 1 {
                    acc - v
                } else {
                    acc + v
                }
            })
        })
        .collect();
    SimplicialCochain { degree: n, values }
}

/// Normalized cochains of a simplicial set as an algebra over the lattice
/// path operad: `x` sends `(f_i)` to `y ↦ Π f_i(x_i^* y)`.
pub struct CochainAlgebra<'a, S> {
    set: &'a SimplicialSet,
    _ring: std::marker::PhantomData<S>,
}

impl<'a, S: Scalar> CochainAlgebra<'a, S> {
    pub fn new(set: &'a SimplicialSet) -> Self {
        CochainAlgebra { set, _ring: std::marker::PhantomData }
    }
}

impl<S: Scalar> LAlgebra for CochainAlgebra<'_, S> {
    type Scalar = S;
    type Cochain = SimplicialCochain<S>;

    fn cochain_degree(&self, f: &SimplicialCochain<S>) -> usize {
        f.degree
    }

    fn zero(&self, degree: usize) -> SimplicialCochain<S> {
        SimplicialCochain::zero(self.set, degree)
    }

    fn add_scaled(&self, acc: &mut SimplicialCochain<S>, c: &S, f: &SimplicialCochain<S>) {
        for (a, b) in acc.values.iter_mut().zip(&f.values) {
            *a = a.clone() + c.clone() * b.clone();
        }
    }

    fn evaluate(&self, x: &LatticePath, fs: &[SimplicialCochain<S>]) -> Result<SimplicialCochain<S>> {
        let n = x.n();
        let comps = x.components();
        for (i, (f, c)) in fs.iter().zip(&comps).enumerate() {
            if f.degree != c.source() {
                return Err(Error::Arity(format!("colour {} needs degree {}, got {}", i + 1, c.source(), f.degree)));
            }
        }
        let values = (0..self.set.count(n))
            .map(|y| {
                let top = Simplex::nondegenerate(n, y);
                comps.iter().zip(fs).fold(S::one(), |acc, (c, f)| {
                    if acc.is_zero() {
                        acc
                    } else {
                        acc * f.evaluate(&self.set.apply(c, &top))
                    }
                })
            })
            .collect();
        Ok(SimplicialCochain { degree: n, values })
    }
}

/// The surjection operad action on normalized cochains. `None` is the zero
/// cochain of a negative degree.
pub fn cochain_action<S: Scalar>(
    x: &SimplicialSet,
    u: &ChainElement<S>,
    fs: &[SimplicialCochain<S>],
) -> Result<Option<SimplicialCochain<S>>> {
    chains::act(&CochainAlgebra::new(x), u, fs)
}

/// The word `1212…` of length `j + 2`, acting as `∪_j`.
pub fn cup_i_word(j: usize) -> LatticePath {
    let word = (0..j + 2).map(|t| if t % 2 == 0 { 1 } else { 2 }).collect();
    LatticePath::new(vec![word]).expect("alternating word")
}

/// `f ∪_j g`; `None` when `j` exceeds the total degree.
pub fn cup_i<S: Scalar>(
    x: &SimplicialSet,
    j: usize,
    f: &SimplicialCochain<S>,
    g: &SimplicialCochain<S>,
) -> Result<Option<SimplicialCochain<S>>> {
    cochain_action(x, &ChainElement::generator(cup_i_word(j)), &[f.clone(), g.clone()])
}

/// A basis of cohomology in degree `p` by representing cocycles.
pub fn cohomology_basis<S: Field + HomologyScalar>(x: &SimplicialSet, p: usize) -> Vec<SimplicialCochain<S>> {
    let out: Matrix<S> = if p < x.dimension() { x.boundary_matrix::<S>(p + 1).transpose() } else { Matrix::zeros(0, x.count(p)) };
    let mut spanning: Vec<Vec<S>> = if p == 0 {
        Vec::new()
    } else {
        let incoming: Matrix<S> = x.boundary_matrix::<S>(p).transpose();
        (0..incoming.cols()).map(|j| incoming.column(j)).collect()
    };
    let mut reps = Vec::new();
    for v in out.nullspace() {
        if !in_span(x.count(p), &spanning, &v) {
            spanning.push(v.clone());
            reps.push(SimplicialCochain { degree: p, values: v });
        }
    }
    reps
}

/// Whether `f = δg` for some cochain `g`.
pub fn is_coboundary<S: Field>(x: &SimplicialSet, f: &SimplicialCochain<S>) -> bool {
    if f.degree == 0 {
        return f.is_zero();
    }
    x.boundary_matrix::<S>(f.degree).transpose().solve(&f.values).is_some()
}

/// `Sq^i[f] = [f ∪_{p−i} f]` for a mod-2 cocycle of degree `p`.
pub fn steenrod_square(x: &SimplicialSet, i: usize, f: &SimplicialCochain<F2>) -> Result<SimplicialCochain<F2>> {
    if !coboundary(x, f).is_zero() {
        return Err(Error::NotCocycle(format!("{}-cochain has nonzero coboundary", f.degree)));
    }
    let p = f.degree;
    if i > p {
        return Ok(SimplicialCochain { degree: p + i, values: vec![F2::new(0); x.count(p + i)] });
    }
    Ok(cup_i(x, p - i, f, f)?.expect("degree p + i is nonnegative"))
}

/// The mod-2 reduction of the integral Bockstein: lift `f` to integers,
/// halve its coboundary, reduce.
pub fn bockstein_mod2(x: &SimplicialSet, f: &SimplicialCochain<F2>) -> Result<SimplicialCochain<F2>> {
    if !coboundary(x, f).is_zero() {
        return Err(Error::NotCocycle(format!("{}-cochain has nonzero coboundary", f.degree)));
    }
    let lift = SimplicialCochain { degree: f.degree, values: f.values.iter().map(|v| v.value() as i64).collect() };
    let d = coboundary(x, &lift);
    let values = d.values.iter().map(|&v| F2::new(v.div_euclid(2))).collect();
    Ok(SimplicialCochain { degree: d.degree, values })
}

/// Whether the `k` components of `x` send the simplex `y : [n] → [m]` of
/// `S^m` to at most one point other than the base point (a component lands
/// off the base point exactly when `y ∘ x_i` is surjective).
pub fn coalgebra_check(m: usize, x: &LatticePath, y: &SimplicialOperator) -> Result<bool> {
    if y.target() != m || y.source() != x.n() {
        return Err(Error::Arity(format!("simplex [{}]→[{}] for a path with {} bars into S^{m}", y.source(), y.target(), x.n())));
    }
    let off_base = x.components().iter().filter(|c| y.after(c).map(|z| z.is_surjective()).unwrap_or(false)).count();
    Ok(off_base <= 1)
}

/// Every `n`-simplex of `S^m` as a monotone map `[n] → [m]`: the
/// surjections plus one representative of the base point.
pub fn sphere_simplices(m: usize, n: usize) -> Vec<SimplicialOperator> {
    let mut out: Vec<SimplicialOperator> = crate::paths::cut_sequences(n + 1, m)
        .into_iter()
        .filter_map(|v| SimplicialOperator::new(v, m).ok())
        .filter(SimplicialOperator::is_surjective)
        .collect();
    out.push(SimplicialOperator::new(vec![0; n + 1], m).unwrap());
    out
}

/// A path with two colours, `n + 1` substrings `12|21|12|…` and complexity
/// `n + 1`, which fails the coalgebra condition on the top simplex of `S^n`.
pub fn coalgebra_witness(n: usize) -> LatticePath {
    let subs = (0..=n).map(|j| if j % 2 == 0 { vec![1, 2] } else { vec![2, 1] }).collect();
    LatticePath::new(subs).expect("witness path")
}
