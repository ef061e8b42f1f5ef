//! Vertex-labelled planar trees and lattice paths of complexity at most two.
//!
//! The clockwise boundary walk of a tree visits a labelled vertex once
//! before its first child, between consecutive children and after its last
//! child; each visit writes its label. Crossing an input edge writes a bar.
//! Unlabelled vertices write nothing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{Colour, LatticePath, Permutation, Token};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Node {
    /// A free input edge.
    Input,
    /// A vertex; `label: None` marks an unlabelled (multiplication) vertex.
    Vertex { label: Option<usize>, children: Vec<Node> },
}

impl Node {
    pub fn labelled(label: usize, children: Vec<Node>) -> Node {
        Node::Vertex { label: Some(label), children }
    }

    pub fn unlabelled(children: Vec<Node>) -> Node {
        Node::Vertex { label: None, children }
    }

    fn walk(&self, out: &mut Vec<Token>) {
        match self {
            Node::Input => out.push(Token::Bar),
            Node::Vertex { label: None, children } => children.iter().for_each(|c| c.walk(out)),
            Node::Vertex { label: Some(l), children } => {
                let letter = Token::Letter { colour: *l as Colour, marked: false };
                out.push(letter);
                for c in children {
                    c.walk(out);
                    out.push(letter);
                }
            }
        }
    }

    fn validate(&self, is_root: bool, parent_labelled: bool, labels: &mut Vec<usize>) -> Result<()> {
        match self {
            Node::Input => Ok(()),
            Node::Vertex { label, children } => {
                match label {
                    Some(l) => labels.push(*l),
                    None => {
                        if children.len() == 1 {
                            return Err(Error::InvalidTree("an unlabelled vertex of valence 2".into()));
                        }
                        if !is_root && !parent_labelled {
                            return Err(Error::InvalidTree("an inner edge between unlabelled vertices".into()));
                        }
                    }
                }
                children.iter().try_for_each(|c| c.validate(false, label.is_some(), labels))
            }
        }
    }

    fn count_labelled(&self) -> usize {
        match self {
            Node::Input => 0,
            Node::Vertex { label, children } => {
                label.is_some() as usize + children.iter().map(Node::count_labelled).sum::<usize>()
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabelledPlanarTree {
    root: Node,
}

impl LabelledPlanarTree {
    pub fn new(root: Node) -> Result<Self> {
        let mut labels = Vec::new();
        root.validate(true, false, &mut labels)?;
        labels.sort_unstable();
        if labels.iter().enumerate().any(|(i, &l)| l != i + 1) {
            return Err(Error::InvalidTree(format!("labels {labels:?} are not 1..k, each used once")));
        }
        Ok(LabelledPlanarTree { root })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn k(&self) -> usize {
        self.root.count_labelled()
    }

    /// The boundary walk.
    pub fn to_path(&self) -> LatticePath {
        let mut tokens = Vec::new();
        self.root.walk(&mut tokens);
        let mut subs = vec![Vec::new()];
        for t in tokens {
            match t {
                Token::Bar => subs.push(Vec::new()),
                Token::Letter { colour, .. } => subs.last_mut().unwrap().push(colour),
            }
        }
        LatticePath::new(subs).expect("a valid tree walks to a valid path")
    }

    /// Invert the boundary walk. Fails when some pair of colour spans
    /// interleaves, i.e. when the path has complexity above two.
    pub fn from_path(x: &LatticePath) -> Result<Self> {
        let mut tokens = Vec::with_capacity(x.len() + x.n());
        for (s, sub) in x.substrings().iter().enumerate() {
            if s > 0 {
                tokens.push(Token::Bar);
            }
            tokens.extend(sub.iter().map(|&c| Token::Letter { colour: c, marked: false }));
        }
        let mults = x.multiplicities();
        let items = parse_items(&tokens, &mults).ok_or(Error::Complexity { found: x.complexity(), bound: 2 })?;
        Ok(LabelledPlanarTree { root: gather(items) })
    }
}

/// Children of a segment: nothing is a stump, one item stands alone, more
/// items hang off an unlabelled vertex.
fn gather(mut items: Vec<Node>) -> Node {
    match items.len() {
        0 => Node::unlabelled(Vec::new()),
        1 => items.pop().unwrap(),
        _ => Node::unlabelled(items),
    }
}

fn parse_items(tokens: &[Token], mults: &[usize]) -> Option<Vec<Node>> {
    let mut items = Vec::new();
    let mut pos = 0;
    while pos < tokens.len() {
        match tokens[pos] {
            Token::Bar => {
                items.push(Node::Input);
                pos += 1;
            }
            Token::Letter { colour, .. } => {
                let occ: Vec<usize> = (pos..tokens.len())
                    .filter(|&q| matches!(tokens[q], Token::Letter { colour: c, .. } if c == colour))
                    .collect();
                if occ.len() != mults[colour as usize - 1] {
                    return None;
                }
                let children = occ
                    .windows(2)
                    .map(|w| parse_items(&tokens[w[0] + 1..w[1]], mults).map(gather))
                    .collect::<Option<Vec<_>>>()?;
                items.push(Node::labelled(colour as usize, children));
                pos = *occ.last().unwrap() + 1;
            }
        }
    }
    Some(items)
}

/// A non-symmetric operad with an associative multiplication `μ_n` in
/// every arity, `μ_1` being the unit.
pub trait MultiplicativeOperad {
    type Elem: Clone;

    fn arity(&self, x: &Self::Elem) -> usize;
    /// `x ∘_i y`, 1-based.
    fn compose(&self, x: &Self::Elem, i: usize, y: &Self::Elem) -> Self::Elem;
    fn multiplication(&self, n: usize) -> Self::Elem;
}

/// Evaluate the tree of `x` with `elems[i−1]` at the vertex labelled `i`.
pub fn tree_evaluate<O: MultiplicativeOperad>(op: &O, x: &LatticePath, elems: &[O::Elem]) -> Result<O::Elem> {
    if elems.len() != x.k() {
        return Err(Error::Arity(format!("{} elements for {} colours", elems.len(), x.k())));
    }
    for (i, (e, m)) in elems.iter().zip(x.multiplicities()).enumerate() {
        if op.arity(e) + 1 != m {
            return Err(Error::Arity(format!(
                "colour {} occurs {m} times but its element has arity {}",
                i + 1,
                op.arity(e)
            )));
        }
    }
    let tree = LabelledPlanarTree::from_path(x)?;
    Ok(evaluate_node(op, tree.root(), elems))
}

pub fn evaluate_tree<O: MultiplicativeOperad>(op: &O, tree: &LabelledPlanarTree, elems: &[O::Elem]) -> O::Elem {
    evaluate_node(op, tree.root(), elems)
}

fn evaluate_node<O: MultiplicativeOperad>(op: &O, node: &Node, elems: &[O::Elem]) -> O::Elem {
    match node {
        Node::Input => op.multiplication(1),
        Node::Vertex { label, children } => {
            let mut acc = match label {
                Some(l) => elems[l - 1].clone(),
                None => op.multiplication(children.len()),
            };
            for (j, c) in children.iter().enumerate().rev() {
                acc = op.compose(&acc, j + 1, &evaluate_node(op, c, elems));
            }
            acc
        }
    }
}

/// All valid trees whose walk has at most `max_letters` letters and
/// `max_inputs` bars.
pub fn all_trees(max_letters: usize, max_inputs: usize) -> Vec<LabelledPlanarTree> {
    let mut shapes: Vec<Node> = Vec::new();
    for (node, _, _) in shapes_with(max_letters, max_inputs, Position::Root) {
        shapes.push(node);
    }
    let mut out = Vec::new();
    for shape in shapes {
        let k = shape.count_labelled();
        for perm in Permutation::all(k) {
            let mut next = 0;
            let labelled = relabel(&shape, &perm, &mut next);
            out.push(LabelledPlanarTree::new(labelled).expect("generated trees are valid"));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Position {
    Root,
    UnderLabelled,
    UnderUnlabelled,
}

/// Shapes (labels all 1, fixed later) with their letter and input counts.
fn shapes_with(max_letters: usize, max_inputs: usize, at: Position) -> Vec<(Node, usize, usize)> {
    let mut out = Vec::new();
    if max_inputs >= 1 {
        out.push((Node::Input, 0, 1));
    }
    if at != Position::UnderUnlabelled {
        out.push((Node::unlabelled(Vec::new()), 0, 0));
        for (children, l, i) in sequences(max_letters, max_inputs, Position::UnderUnlabelled, 2) {
            out.push((Node::unlabelled(children), l, i));
        }
    }
    if max_letters >= 1 {
        for (children, l, i) in sequences(max_letters - 1, max_inputs, Position::UnderLabelled, 0) {
            // a labelled vertex with r children writes r + 1 letters
            let letters = l + children.len() + 1;
            if letters <= max_letters {
                out.push((Node::labelled(1, children), letters, i));
            }
        }
    }
    out
}

/// Child sequences of length ≥ `min_len`; a labelled parent pays one
/// letter per child, which bounds the length.
fn sequences(max_letters: usize, max_inputs: usize, at: Position, min_len: usize) -> Vec<(Vec<Node>, usize, usize)> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        budget_l: usize,
        budget_i: usize,
        at: Position,
        min_len: usize,
        used: (usize, usize),
        cur: &mut Vec<Node>,
        out: &mut Vec<(Vec<Node>, usize, usize)>,
    ) {
        if cur.len() >= min_len {
            out.push((cur.clone(), used.0, used.1));
        }
        // under a labelled vertex each child costs a letter of the parent
        let per_child = if at == Position::UnderLabelled { 1 } else { 0 };
        if budget_l < per_child {
            return;
        }
        let room = budget_l - per_child;
        for (node, l, i) in shapes_with(room, budget_i, at) {
            if at == Position::UnderUnlabelled && l == 0 && i == 0 {
                continue;
            }
            cur.push(node);
            rec(room - l, budget_i - i, at, min_len, (used.0 + l, used.1 + i), cur, out);
            cur.pop();
        }
    }
    rec(max_letters, max_inputs, at, min_len, (0, 0), &mut cur, &mut out);
    out
}

fn relabel(node: &Node, perm: &Permutation, next: &mut usize) -> Node {
    match node {
        Node::Input => Node::Input,
        Node::Vertex { label, children } => {
            let label = label.map(|_| {
                *next += 1;
                perm.apply(*next)
            });
            Node::Vertex { label, children: children.iter().map(|c| relabel(c, perm, next)).collect() }
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Input => f.write_str("[slot]"),
            Node::Vertex { label, children } => {
                match label {
                    Some(l) => write!(f, "(v{l}")?,
                    None => f.write_str("(u")?,
                }
                for c in children {
                    write!(f, " {c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for LabelledPlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

impl FromStr for LabelledPlanarTree {
    type Err = Error;

    /// Parses `(v1 [slot] (v2 [slot]))`; `(u …)` is an unlabelled vertex.
    fn from_str(text: &str) -> Result<Self> {
        let spaced = text.replace('(', " ( ").replace(')', " ) ");
        let words: Vec<&str> = spaced.split_whitespace().collect();
        let mut pos = 0;
        let root = parse_node(&words, &mut pos)?;
        if pos != words.len() {
            return Err(Error::Parse("trailing input after the tree".into()));
        }
        LabelledPlanarTree::new(root)
    }
}

fn parse_node(words: &[&str], pos: &mut usize) -> Result<Node> {
    let bad = |m: &str| Error::Parse(format!("tree: {m}"));
    match words.get(*pos) {
        Some(&"[slot]") => {
            *pos += 1;
            Ok(Node::Input)
        }
        Some(&"(") => {
            *pos += 1;
            let head = words.get(*pos).ok_or_else(|| bad("unexpected end"))?;
            let label = if *head == "u" {
                None
            } else {
                let l = head.strip_prefix('v').and_then(|d| d.parse::<usize>().ok()).ok_or_else(|| bad("expected v<label> or u"))?;
                if l == 0 {
                    return Err(bad("labels start at 1"));
                }
                Some(l)
            };
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match words.get(*pos) {
                    Some(&")") => {
                        *pos += 1;
                        return Ok(Node::Vertex { label, children });
                    }
                    Some(_) => children.push(parse_node(words, pos)?),
                    None => return Err(bad("unbalanced parentheses")),
                }
            }
        }
        Some(w) => Err(bad(&format!("unexpected '{w}'"))),
        None => Err(bad("empty input")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    fn t(s: &str) -> LabelledPlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(LabelledPlanarTree::from_path(&p("12|21")).unwrap().to_string(), "(v1 (v2 [slot]))");
        assert_eq!(LabelledPlanarTree::from_path(&p("12")).unwrap().to_string(), "(u (v1) (v2))");
        assert_eq!(LabelledPlanarTree::from_path(&p("1|1")).unwrap().to_string(), "(v1 [slot])");
        assert_eq!(LabelledPlanarTree::from_path(&p("1|12|21")).unwrap().to_string(), "(v1 [slot] (v2 [slot]))");
        assert_eq!(LabelledPlanarTree::from_path(&p("11")).unwrap().to_string(), "(v1 (u))");
        assert!(LabelledPlanarTree::from_path(&p("1212")).is_err());
    }

    #[test]
    fn walks() {
        assert_eq!(t("(v1)").to_path().to_string(), "1");
        assert_eq!(t("(v1 [slot] (v2 [slot]))").to_path().to_string(), "1|12|21");
        assert_eq!(t("(u [slot] [slot])").to_path().to_string(), "||");
    }

    #[test]
    fn invalid_trees() {
        assert!("(u (v1))".parse::<LabelledPlanarTree>().is_err());
        assert!("(v1 (u (u) [slot]))".parse::<LabelledPlanarTree>().is_err());
        assert!("(v1 (v1))".parse::<LabelledPlanarTree>().is_err());
        assert!("(v2)".parse::<LabelledPlanarTree>().is_err());
        assert!("(v1".parse::<LabelledPlanarTree>().is_err());
    }

    #[test]
    fn generated_trees_roundtrip() {
        let trees = all_trees(4, 2);
        assert!(trees.len() > 100);
        for tree in trees {
            let x = tree.to_path();
            assert_eq!(LabelledPlanarTree::from_path(&x).unwrap(), tree, "{x}");
        }
    }
}
