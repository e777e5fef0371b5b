//! Coxeter diagrams and the textual diagram language.
//!
//! ```text
//! diagram  := family | explicit
//! family   := "A1^" INT | ("A"|"B"|"D"|"E"|"F"|"G"|"H") INT | "I2(" INT ")"
//! explicit := "rank" "=" INT [ ";" "edges" ":" [ edge { "," edge } ] ]
//! edge     := INT "-" INT [ ":" INT ]        (label defaults to 3)
//! ```
//!
//! Whitespace is allowed between tokens. Nodes are numbered from 1.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("unknown diagram `{0}`")]
    UnknownDiagram(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("label m_{i}{j} = {label} must be at least 2")]
    LabelTooSmall { i: usize, j: usize, label: u32 },
    #[error("labels are not symmetric: m_{i}{j} = {a} but m_{j}{i} = {b}")]
    NonSymmetric { i: usize, j: usize, a: u32, b: u32 },
    #[error("node {node} outside 1..={rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("rank must be at least 1")]
    EmptyDiagram,
    #[error("rank {0} exceeds the limit of {MAX_RANK}")]
    RankTooLarge(usize),
}

/// Largest rank accepted by the parser.
pub const MAX_RANK: usize = 64;

/// Coxeter labels `m_ij` of a rank-`n` diagram: `m_ii = 1`, `m_ij = m_ji ≥ 2`.
/// A label of 2 means the nodes are not joined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoxeterDiagram {
    rank: usize,
    labels: Vec<u32>,
}

impl CoxeterDiagram {
    /// Rank-`n` diagram with no edges.
    pub fn disconnected(rank: usize) -> Self {
        let mut labels = vec![2; rank * rank];
        for i in 0..rank {
            labels[i * rank + i] = 1;
        }
        CoxeterDiagram { rank, labels }
    }

    /// Validates a full label matrix given row by row.
    pub fn from_matrix(matrix: &[Vec<u32>]) -> Result<Self, DiagramError> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(DiagramError::EmptyDiagram);
        }
        let mut d = Self::disconnected(rank);
        for (i, row) in matrix.iter().enumerate() {
            assert_eq!(row.len(), rank, "label matrix must be square");
            for (j, &a) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if a < 2 {
                    return Err(DiagramError::LabelTooSmall {
                        i: i + 1,
                        j: j + 1,
                        label: a,
                    });
                }
                let b = matrix[j][i];
                if a != b {
                    return Err(DiagramError::NonSymmetric {
                        i: i + 1,
                        j: j + 1,
                        a,
                        b,
                    });
                }
                d.labels[i * rank + j] = a;
            }
        }
        Ok(d)
    }

    fn chain(rank: usize) -> Self {
        let mut d = Self::disconnected(rank);
        for i in 1..rank {
            d.set(i - 1, i, 3);
        }
        d
    }

    /// Adds isolated nodes up to `rank`.
    fn grown_to(&self, rank: usize) -> Self {
        let mut d = Self::disconnected(rank);
        for (i, j, m) in self.edges() {
            d.set(i - 1, j - 1, m);
        }
        d
    }

    fn set(&mut self, i: usize, j: usize, m: u32) {
        self.labels[i * self.rank + j] = m;
        self.labels[j * self.rank + i] = m;
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Label between 0-based nodes `i` and `j`.
    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.labels[i * self.rank + j]
    }

    pub fn matrix(&self) -> Vec<Vec<u32>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.label(i, j)).collect())
            .collect()
    }

    /// Edges `(i, j, m)` with `i < j`, 1-based, for every label above 2.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let m = self.label(i, j);
                if m > 2 {
                    out.push((i + 1, j + 1, m));
                }
            }
        }
        out
    }

    /// The diagram restricted to `nodes` (0-based), in that order.
    pub fn restrict(&self, nodes: &[usize]) -> Self {
        let mut d = Self::disconnected(nodes.len());
        for (a, &i) in nodes.iter().enumerate() {
            for (b, &j) in nodes.iter().enumerate() {
                if a != b {
                    d.labels[a * nodes.len() + b] = self.label(i, j);
                }
            }
        }
        d
    }

    /// Label-preserving injections of `self` into `host`: each result maps
    /// node `i` of `self` to node `result[i]` of `host`.
    pub fn embeddings_into(&self, host: &CoxeterDiagram) -> Vec<Vec<usize>> {
        fn go(small: &CoxeterDiagram, host: &CoxeterDiagram, partial: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let i = partial.len();
            if i == small.rank {
                out.push(partial.clone());
                return;
            }
            for cand in 0..host.rank {
                if partial.contains(&cand) {
                    continue;
                }
                if partial
                    .iter()
                    .enumerate()
                    .all(|(j, &pj)| small.label(i, j) == host.label(cand, pj))
                {
                    partial.push(cand);
                    go(small, host, partial, out);
                    partial.pop();
                }
            }
        }
        let mut out = Vec::new();
        if self.rank <= host.rank {
            go(self, host, &mut Vec::new(), &mut out);
        }
        out
    }

    pub fn is_isomorphic(&self, other: &CoxeterDiagram) -> bool {
        self.rank == other.rank && !self.embeddings_into(other).is_empty()
    }

    /// Canonical text in the explicit grammar, parseable by [`parse_diagram`].
    pub fn to_dsl(&self) -> String {
        let edges: Vec<String> = self.edges().iter().map(|(i, j, m)| format!("{i}-{j}:{m}")).collect();
        format!("rank={}; edges: {}", self.rank, edges.join(", "))
    }
}

impl fmt::Debug for CoxeterDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}

/// Expands a named family such as `H3`, `E8` or `A1^3`.
pub fn named_family(name: &str) -> Option<CoxeterDiagram> {
    let name = name.trim();
    if let Some(k) = name.strip_prefix("A1^") {
        let k: usize = k.parse().ok().filter(|&k| (1..=MAX_RANK).contains(&k))?;
        return Some(CoxeterDiagram::disconnected(k));
    }
    if let Some(rest) = name.strip_prefix("I2(") {
        let m: u32 = rest.strip_suffix(')')?.parse().ok().filter(|&m| m >= 2)?;
        let mut d = CoxeterDiagram::disconnected(2);
        d.set(0, 1, m);
        return Some(d);
    }
    let mut chars = name.chars();
    let letter = chars.next()?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: usize = digits.parse().ok().filter(|&n| n <= MAX_RANK)?;
    let d = match (letter, n) {
        ('A', n) if n >= 1 => CoxeterDiagram::chain(n),
        ('B', n) if n >= 2 => {
            let mut d = CoxeterDiagram::chain(n);
            d.set(n - 2, n - 1, 4);
            d
        }
        ('D', n) if n >= 4 => {
            let mut d = CoxeterDiagram::chain(n - 1).grown_to(n);
            d.set(n - 3, n - 1, 3);
            d
        }
        // Chain 1..n-1 with the extra node n attached to node n-3
        // (node 5 for E8, matching the folding diagram).
        ('E', 6..=8) => {
            let mut d = CoxeterDiagram::chain(n - 1).grown_to(n);
            d.set(n - 4, n - 1, 3);
            d
        }
        ('F', 4) => {
            let mut d = CoxeterDiagram::chain(4);
            d.set(1, 2, 4);
            d
        }
        ('G', 2) => {
            let mut d = CoxeterDiagram::disconnected(2);
            d.set(0, 1, 6);
            d
        }
        // The 5-label sits at the end of the chain: (2,3) for H3, (3,4) for H4.
        ('H', 2..=4) => {
            let mut d = CoxeterDiagram::chain(n);
            d.set(n - 2, n - 1, 5);
            d
        }
        _ => return None,
    };
    Some(d)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, DiagramError> {
        Err(DiagramError::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, token: &str) -> Result<(), DiagramError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<(usize, usize), DiagramError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return self.err("expected an integer");
        }
        self.pos += len;
        match self.text[start..self.pos].parse() {
            Ok(v) => Ok((v, start)),
            Err(_) => Err(DiagramError::Parse {
                position: start,
                message: "integer out of range".into(),
            }),
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }
}

/// Parses a diagram in the grammar documented at the top of this module.
pub fn parse_diagram(text: &str) -> Result<CoxeterDiagram, DiagramError> {
    let trimmed = text.trim();
    if !trimmed.starts_with("rank") {
        return named_family(trimmed).ok_or_else(|| DiagramError::UnknownDiagram(trimmed.to_string()));
    }
    let mut cur = Cursor { text, pos: 0 };
    cur.expect("rank")?;
    cur.expect("=")?;
    let (rank, _) = cur.int()?;
    if rank == 0 {
        return Err(DiagramError::EmptyDiagram);
    }
    if rank > MAX_RANK {
        return Err(DiagramError::RankTooLarge(rank));
    }
    let mut labels: Vec<Vec<Option<u32>>> = vec![vec![None; rank]; rank];
    if cur.eat(";") {
        cur.expect("edges")?;
        cur.expect(":")?;
        if !cur.at_end() {
            loop {
                let (i, pi) = cur.int()?;
                cur.expect("-")?;
                let (j, pj) = cur.int()?;
                let m = if cur.eat(":") {
                    let (m, pm) = cur.int()?;
                    u32::try_from(m).map_err(|_| DiagramError::Parse {
                        position: pm,
                        message: "label out of range".into(),
                    })?
                } else {
                    3
                };
                for (node, _) in [(i, pi), (j, pj)] {
                    if node == 0 || node > rank {
                        return Err(DiagramError::NodeOutOfRange { node, rank });
                    }
                }
                if i == j {
                    return Err(DiagramError::SelfLoop(i));
                }
                if m < 2 {
                    return Err(DiagramError::LabelTooSmall { i, j, label: m });
                }
                for (a, b) in [(i, j), (j, i)] {
                    match labels[a - 1][b - 1] {
                        Some(prev) if prev != m => {
                            return Err(DiagramError::NonSymmetric {
                                i: a,
                                j: b,
                                a: prev,
                                b: m,
                            })
                        }
                        _ => labels[a - 1][b - 1] = Some(m),
                    }
                }
                if !cur.eat(",") {
                    break;
                }
            }
        }
    }
    if !cur.at_end() {
        return cur.err("unexpected trailing input");
    }
    let matrix: Vec<Vec<u32>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| if i == j { 1 } else { labels[i][j].unwrap_or(2) })
                .collect()
        })
        .collect();
    CoxeterDiagram::from_matrix(&matrix)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h3_places_the_five_on_the_last_pair() {
        let d = parse_diagram("H3").unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.label(0, 1), 3);
        assert_eq!(d.label(1, 2), 5);
        assert_eq!(d.label(0, 2), 2);
    }

    #[test]
    fn a1_cubed_is_disconnected() {
        let d = parse_diagram("A1^3").unwrap();
        assert_eq!(d.rank(), 3);
        assert!(d.edges().is_empty());
    }

    #[test]
    fn explicit_h2() {
        let d = parse_diagram("rank=2; edges: 1-2:5").unwrap();
        assert_eq!(d, named_family("H2").unwrap());
        assert_eq!(d, named_family("I2(5)").unwrap());
    }

    #[test]
    fn explicit_round_trip_and_default_label() {
        let d = parse_diagram("rank=4; edges: 1-2:3, 2-3:3, 3-4:5").unwrap();
        assert_eq!(d, named_family("H4").unwrap());
        assert_eq!(parse_diagram(&d.to_dsl()).unwrap(), d);
        assert_eq!(
            parse_diagram("rank = 3 ; edges : 1-2, 2 - 3").unwrap(),
            named_family("A3").unwrap()
        );
        assert_eq!(parse_diagram("rank=2").unwrap(), CoxeterDiagram::disconnected(2));
        assert_eq!(parse_diagram("rank=65").unwrap_err(), DiagramError::RankTooLarge(65));
        assert!(named_family("A100").is_none());
    }

    #[test]
    fn e8_matches_the_folding_diagram() {
        let d = named_family("E8").unwrap();
        let mut expected: Vec<(usize, usize, u32)> = vec![
            (1, 2, 3),
            (2, 3, 3),
            (3, 4, 3),
            (4, 5, 3),
            (5, 6, 3),
            (6, 7, 3),
            (5, 8, 3),
        ];
        expected.sort();
        assert_eq!(d.edges(), expected);
    }

    #[test]
    fn d4_has_a_trivalent_node() {
        let d = named_family("D4").unwrap();
        let degree = |i: usize| (0..4).filter(|&j| j != i && d.label(i, j) > 2).count();
        assert_eq!((0..4).map(degree).max(), Some(3));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_diagram("Z9"), Err(DiagramError::UnknownDiagram("Z9".into())));
        assert!(matches!(
            parse_diagram("rank=3; edges: 1-x"),
            Err(DiagramError::Parse { position: 17, .. })
        ));
        assert_eq!(
            parse_diagram("rank=3; edges: 1-2:1"),
            Err(DiagramError::LabelTooSmall { i: 1, j: 2, label: 1 })
        );
        assert!(matches!(
            parse_diagram("rank=3; edges: 1-2:3, 2-1:5"),
            Err(DiagramError::NonSymmetric { .. })
        ));
        assert_eq!(
            parse_diagram("rank=2; edges: 1-3"),
            Err(DiagramError::NodeOutOfRange { node: 3, rank: 2 })
        );
        assert!(matches!(
            parse_diagram("rank=2; edges: 1-2 junk"),
            Err(DiagramError::Parse { .. })
        ));
    }

    #[test]
    fn non_symmetric_matrix_rejected() {
        let m = vec![vec![1, 3], vec![5, 1]];
        assert!(matches!(
            CoxeterDiagram::from_matrix(&m),
            Err(DiagramError::NonSymmetric { .. })
        ));
    }

    #[test]
    fn subdiagram_embeddings() {
        let h2 = named_family("H2").unwrap();
        let h3 = named_family("H3").unwrap();
        assert_eq!(h2.embeddings_into(&h3), vec![vec![1, 2], vec![2, 1]]);
        let d4 = named_family("D4").unwrap();
        assert!(!d4.embeddings_into(&named_family("E8").unwrap()).is_empty());
    }
}
