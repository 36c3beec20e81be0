use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{Matrix, PrimeField};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertex and arrow names are unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are given as `(name, source name, target name)`.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex name `{v}`")));
            }
        }
        let mut names = HashMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (name, s, t) in arrows {
            let (name, s, t) = (name.as_ref(), s.as_ref(), t.as_ref());
            if names.insert(name.to_string(), ()).is_some() || index.contains_key(name) {
                return Err(Error::InvalidQuiver(format!("duplicate name `{name}`")));
            }
            let source = *index
                .get(s)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow `{name}`: unknown source `{s}`")))?;
            let target = *index
                .get(t)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow `{name}`: unknown target `{t}`")))?;
            out.push(Arrow { name: name.to_string(), source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }

    /// The Euler form `<x, y> = sum_v x_v y_v - sum_(a: s -> t) x_s y_t`.
    pub fn euler_form(&self, x: &[usize], y: &[usize]) -> i64 {
        let diag: i64 = x.iter().zip(y).map(|(&a, &b)| (a * b) as i64).sum();
        let off: i64 = self.arrows.iter().map(|a| (x[a.source] * y[a.target]) as i64).sum();
        diag - off
    }
}

/// A path, listed in the order the arrows are traversed. A path with no
/// arrows is the trivial path (idempotent) at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Self {
        Path { start: q.arrow(a).source, arrows: vec![a] }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrow(a).target)
    }

    /// Validates that consecutive arrows compose.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidQuiver("empty arrow sequence".into()));
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::InvalidQuiver(format!(
                    "arrows `{}` and `{}` do not compose",
                    q.arrow(w[0]).name,
                    q.arrow(w[1]).name
                )));
            }
        }
        Ok(Path { start: q.arrow(first).source, arrows })
    }

    /// `self` followed by `then`.
    pub fn concat(&self, then: &Path) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Path { start: self.start, arrows }
    }

    pub fn describe(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices()[self.start])
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// The matrix of the path acting on a representation given by its
    /// per-arrow matrices.
    pub fn evaluate(&self, field: PrimeField, dims: &[usize], maps: &[Matrix]) -> Matrix {
        let mut acc = Matrix::identity(field, dims[self.start]);
        for &a in &self.arrows {
            acc = maps[a].mul(&acc);
        }
        acc
    }
}

/// A linear combination of parallel paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(u64, Path)>,
}

impl Relation {
    pub fn new(q: &Quiver, terms: Vec<(u64, Path)>) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidQuiver("empty relation".into()));
        };
        let (s, t) = (first.start, first.end(q));
        for (_, p) in &terms {
            if p.start != s || p.end(q) != t {
                return Err(Error::InvalidQuiver(format!(
                    "relation terms are not parallel: `{}`",
                    p.describe(q)
                )));
            }
        }
        Ok(Relation { terms })
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.start
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.terms[0].1.end(q)
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn is_admissible(&self) -> bool {
        self.terms.iter().all(|(_, p)| p.len() >= 2)
    }

    pub fn evaluate(&self, field: PrimeField, dims: &[usize], maps: &[Matrix], q: &Quiver) -> Matrix {
        let mut acc = Matrix::zeros(field, dims[self.target(q)], dims[self.source()]);
        for (c, p) in &self.terms {
            acc = acc.add_scaled(&p.evaluate(field, dims, maps), *c);
        }
        acc
    }

    pub fn describe(&self, q: &Quiver, field: PrimeField) -> String {
        self.terms
            .iter()
            .map(|(c, p)| {
                let c = field.to_signed(*c);
                if c == 1 {
                    p.describe(q)
                } else {
                    format!("{c}*{}", p.describe(q))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn new(relations: Vec<Relation>) -> Self {
        RelationSet { relations }
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Admissibility of every relation (all paths of length at least two).
    pub fn check_admissible(&self, q: &Quiver, field: PrimeField) -> Result<()> {
        for r in &self.relations {
            if !r.is_admissible() {
                return Err(Error::Inadmissible(r.describe(q, field)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver(")?;
        for (i, a) in self.arrows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}: {} -> {}", a.name, self.vertices[a.source], self.vertices[a.target])?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quiver_validation() {
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1", "2"], &[("a", "1", "3")]).is_err());
        assert!(Quiver::new(&["1", "2"], &[("a", "1", "2"), ("a", "2", "1")]).is_err());
        let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")]).unwrap();
        assert!(q.is_acyclic());
        let p = Path::from_arrows(&q, vec![0, 1]).unwrap();
        assert_eq!(p.end(&q), 2);
        assert!(Path::from_arrows(&q, vec![1, 0]).is_err());
        let cyc = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        assert!(!cyc.is_acyclic());
    }

    #[test]
    fn euler_form_a2() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        // <S1, S2> = -1, <S2, S1> = 0
        assert_eq!(q.euler_form(&[1, 0], &[0, 1]), -1);
        assert_eq!(q.euler_form(&[0, 1], &[1, 0]), 0);
    }
}
