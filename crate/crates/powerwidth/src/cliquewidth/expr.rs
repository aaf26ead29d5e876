//! Construction expressions witnessing a clique-width bound.
//!
//! An expression is a tree whose leaves create labeled vertices and
//! whose internal nodes are disjoint union, join between two distinct
//! labels, and relabeling. Evaluation yields a graph with vertices
//! numbered by leaf order (left to right).
//!
//! Text form (S-expressions), grammar:
//!
//! ```text
//! expr    := (kexpr WIDTH body)
//! body    := (create LABEL)
//!          | (union body body)
//!          | (join LABEL LABEL body)
//!          | (relabel LABEL LABEL body)   ; relabel FROM TO
//! ```
//!
//! Labels are integers in `1..=WIDTH`.

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub type Label = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("join requires two distinct labels, got ({0}, {0})")]
    JoinEqualLabels(Label),
    #[error("label {0} exceeds the declared width {1}")]
    LabelOutOfRange(Label, usize),
    #[error("label 0 is not allowed; labels start at 1")]
    ZeroLabel,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CwNode {
    Create(Label),
    Union(Box<CwNode>, Box<CwNode>),
    Join(Label, Label, Box<CwNode>),
    Relabel(Label, Label, Box<CwNode>),
}

/// A construction tree together with its declared label budget.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CwExpression {
    width: usize,
    root: CwNode,
}

struct Labeled {
    pairs: Vec<(Vertex, Vertex)>,
    labels: Vec<Label>,
}

fn eval_node(node: &CwNode, width: usize) -> Result<Labeled, ExprError> {
    let check = |l: Label| {
        if l == 0 {
            Err(ExprError::ZeroLabel)
        } else if l > width {
            Err(ExprError::LabelOutOfRange(l, width))
        } else {
            Ok(())
        }
    };
    match node {
        CwNode::Create(l) => {
            check(*l)?;
            Ok(Labeled { pairs: vec![], labels: vec![*l] })
        }
        CwNode::Union(a, b) => {
            let la = eval_node(a, width)?;
            let lb = eval_node(b, width)?;
            let shift = la.labels.len();
            let mut pairs = la.pairs;
            pairs.extend(lb.pairs.into_iter().map(|(u, v)| (u + shift, v + shift)));
            let mut labels = la.labels;
            labels.extend(lb.labels);
            Ok(Labeled { pairs, labels })
        }
        CwNode::Join(i, j, inner) => {
            check(*i)?;
            check(*j)?;
            if i == j {
                return Err(ExprError::JoinEqualLabels(*i));
            }
            let mut l = eval_node(inner, width)?;
            for u in 0..l.labels.len() {
                for v in 0..l.labels.len() {
                    if l.labels[u] == *i && l.labels[v] == *j && u < v {
                        l.pairs.push((u, v));
                    } else if l.labels[u] == *j && l.labels[v] == *i && u < v {
                        l.pairs.push((u, v));
                    }
                }
            }
            Ok(l)
        }
        CwNode::Relabel(from, to, inner) => {
            check(*from)?;
            check(*to)?;
            let mut l = eval_node(inner, width)?;
            for lab in &mut l.labels {
                if lab == from {
                    *lab = *to;
                }
            }
            Ok(l)
        }
    }
}

impl CwExpression {
    pub fn new(width: usize, root: CwNode) -> Self {
        CwExpression { width, root }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn root(&self) -> &CwNode {
        &self.root
    }

    /// Evaluates the expression; labels are discarded from the result.
    pub fn eval(&self) -> Result<Graph, ExprError> {
        let l = eval_node(&self.root, self.width)?;
        let n = l.labels.len();
        Ok(Graph::from_edges(n, &l.pairs).expect("evaluation produces valid pairs"))
    }

    /// Evaluates and also returns the final label per vertex.
    pub fn eval_labeled(&self) -> Result<(Graph, Vec<Label>), ExprError> {
        let l = eval_node(&self.root, self.width)?;
        let n = l.labels.len();
        let g = Graph::from_edges(n, &l.pairs).expect("evaluation produces valid pairs");
        Ok((g, l.labels))
    }

    pub fn to_sexpr(&self) -> String {
        fn rec(node: &CwNode, out: &mut String) {
            match node {
                CwNode::Create(l) => out.push_str(&format!("(create {l})")),
                CwNode::Union(a, b) => {
                    out.push_str("(union ");
                    rec(a, out);
                    out.push(' ');
                    rec(b, out);
                    out.push(')');
                }
                CwNode::Join(i, j, inner) => {
                    out.push_str(&format!("(join {i} {j} "));
                    rec(inner, out);
                    out.push(')');
                }
                CwNode::Relabel(f, t, inner) => {
                    out.push_str(&format!("(relabel {f} {t} "));
                    rec(inner, out);
                    out.push(')');
                }
            }
        }
        let mut out = format!("(kexpr {} ", self.width);
        rec(&self.root, &mut out);
        out.push(')');
        out
    }

    pub fn parse_sexpr(text: &str) -> Result<CwExpression, ExprError> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let expr = parse_kexpr(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(ExprError::Parse("trailing input".into()));
        }
        Ok(expr)
    }
}

fn tokenize(text: &str) -> Vec<String> {
    text.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn expect(tokens: &[String], pos: &mut usize, what: &str) -> Result<String, ExprError> {
    let t = tokens
        .get(*pos)
        .ok_or_else(|| ExprError::Parse(format!("expected {what}, found end of input")))?;
    *pos += 1;
    Ok(t.clone())
}

fn parse_num(tokens: &[String], pos: &mut usize) -> Result<usize, ExprError> {
    let t = expect(tokens, pos, "a number")?;
    t.parse().map_err(|_| ExprError::Parse(format!("expected a number, found `{t}`")))
}

fn parse_kexpr(tokens: &[String], pos: &mut usize) -> Result<CwExpression, ExprError> {
    if expect(tokens, pos, "(")? != "(" || expect(tokens, pos, "kexpr")? != "kexpr" {
        return Err(ExprError::Parse("expected (kexpr ...)".into()));
    }
    let width = parse_num(tokens, pos)?;
    let root = parse_body(tokens, pos)?;
    if expect(tokens, pos, ")")? != ")" {
        return Err(ExprError::Parse("expected closing paren".into()));
    }
    Ok(CwExpression { width, root })
}

fn parse_body(tokens: &[String], pos: &mut usize) -> Result<CwNode, ExprError> {
    if expect(tokens, pos, "(")? != "(" {
        return Err(ExprError::Parse("expected opening paren".into()));
    }
    let head = expect(tokens, pos, "an operator")?;
    let node = match head.as_str() {
        "create" => CwNode::Create(parse_num(tokens, pos)?),
        "union" => {
            let a = parse_body(tokens, pos)?;
            let b = parse_body(tokens, pos)?;
            CwNode::Union(Box::new(a), Box::new(b))
        }
        "join" => {
            let i = parse_num(tokens, pos)?;
            let j = parse_num(tokens, pos)?;
            CwNode::Join(i, j, Box::new(parse_body(tokens, pos)?))
        }
        "relabel" => {
            let f = parse_num(tokens, pos)?;
            let t = parse_num(tokens, pos)?;
            CwNode::Relabel(f, t, Box::new(parse_body(tokens, pos)?))
        }
        other => return Err(ExprError::Parse(format!("unknown operator `{other}`"))),
    };
    if expect(tokens, pos, ")")? != ")" {
        return Err(ExprError::Parse("expected closing paren".into()));
    }
    Ok(node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::iso;

    fn create(l: Label) -> CwNode {
        CwNode::Create(l)
    }

    #[test]
    fn tiny_evaluations() {
        let e = CwExpression::new(1, create(1));
        assert_eq!(e.eval().unwrap(), generators::complete(1));

        let k2 = CwExpression::new(
            2,
            CwNode::Join(
                1,
                2,
                Box::new(CwNode::Union(Box::new(create(1)), Box::new(create(2)))),
            ),
        );
        assert_eq!(k2.eval().unwrap(), generators::complete(2));
    }

    /// The textbook 3-expression for P_4.
    pub(crate) fn p4_expression() -> CwExpression {
        let ab = CwNode::Join(
            1,
            2,
            Box::new(CwNode::Union(Box::new(create(1)), Box::new(create(2)))),
        );
        let ab = CwNode::Relabel(1, 3, Box::new(ab));
        let abc = CwNode::Join(1, 2, Box::new(CwNode::Union(Box::new(ab), Box::new(create(1)))));
        let abc = CwNode::Relabel(2, 3, Box::new(abc));
        let abcd =
            CwNode::Join(1, 2, Box::new(CwNode::Union(Box::new(abc), Box::new(create(2)))));
        CwExpression::new(3, abcd)
    }

    #[test]
    fn textbook_p4() {
        let g = p4_expression().eval().unwrap();
        assert!(iso::is_isomorphic(&g, &generators::path(4)));
    }

    #[test]
    fn errors() {
        let bad = CwExpression::new(
            2,
            CwNode::Join(
                1,
                1,
                Box::new(CwNode::Union(Box::new(create(1)), Box::new(create(1)))),
            ),
        );
        assert_eq!(bad.eval(), Err(ExprError::JoinEqualLabels(1)));

        let bad = CwExpression::new(1, create(2));
        assert_eq!(bad.eval(), Err(ExprError::LabelOutOfRange(2, 1)));
    }

    #[test]
    fn sexpr_roundtrip() {
        let e = p4_expression();
        let text = e.to_sexpr();
        let back = CwExpression::parse_sexpr(&text).unwrap();
        assert_eq!(back, e);
        assert!(text.starts_with("(kexpr 3 "));

        assert!(CwExpression::parse_sexpr("(kexpr 2 (create 1) junk)").is_err());
        assert!(CwExpression::parse_sexpr("(kexpr 2 (frobnicate 1))").is_err());
    }
}
