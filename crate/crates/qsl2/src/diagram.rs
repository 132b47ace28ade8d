//! Sliced diagrams of tangles whose boundary points all lie on the bottom
//! line, built row by row from five elementary tokens. Rows are read top to
//! bottom; the top boundary is empty. An n-component diagram in standard
//! (bottom-tangle) position pairs its 2n bottom points adjacently, with
//! component `i` occupying points `2i`, `2i+1`; every component is oriented
//! from its right boundary point to its left boundary point.
//!
//! Tracing the strands derives, for each component, the ordered list of
//! label sites (crossing passages and extrema) that downstream code turns
//! into tensor factors, plus the signed crossing data for linking matrices.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::DMatrix;

/// One elementary tangle piece inside a row, with (inputs, outputs) counted
/// on the line above and below the row.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Token {
    /// Vertical strand (1, 1).
    I,
    /// Positive crossing (2, 2): the top-left/bottom-right strand is over.
    P,
    /// Negative crossing (2, 2): the top-right/bottom-left strand is over.
    M,
    /// Cap (2, 0): joins two strands from above in a local minimum.
    C,
    /// Cup (0, 2): emits two new strands downward from a local maximum.
    U,
}

impl std::str::FromStr for Token {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Token, DiagramError> {
        match s {
            "I" => Ok(Token::I),
            "P" => Ok(Token::P),
            "M" => Ok(Token::M),
            "C" => Ok(Token::C),
            "U" => Ok(Token::U),
            _ => Err(DiagramError::UnknownToken(s.to_string())),
        }
    }
}

impl Token {
    pub fn widths(self) -> (usize, usize) {
        match self {
            Token::I => (1, 1),
            Token::P | Token::M => (2, 2),
            Token::C => (2, 0),
            Token::U => (0, 2),
        }
    }

    fn letter(self) -> &'static str {
        match self {
            Token::I => "I",
            Token::P => "P",
            Token::M => "M",
            Token::C => "C",
            Token::U => "U",
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("row {row} consumes {needed} strands but the line above has {have}")]
    WidthMismatch { row: usize, needed: usize, have: usize },
    #[error("header requests {expected} components but the diagram has {found}")]
    HeaderMismatch { expected: usize, found: usize },
    #[error("bad header line `{0}`")]
    BadHeader(String),
    #[error("not a bottom tangle: {0}")]
    NotBottomTangle(String),
    #[error("partition {0:?} does not sum to the component count {1}")]
    PartitionMismatch(Vec<usize>, usize),
    #[error("expected an even number of components, found {0}")]
    ComponentParity(usize),
    #[error("bottom points lack the clasp-closure pairing: {0}")]
    NotClaspClosed(String),
    #[error("unknown built-in `{0}`")]
    UnknownBuiltin(String),
    #[error("diagram contains a closed component")]
    ClosedComponent,
}

/// One passage of a component through a labeled token, in reading order
/// (from the left boundary point, against the orientation).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelSite {
    Crossing {
        /// Crossing id (row-major, left to right).
        id: usize,
        /// This passage carries the first tensorand of the crossing's label
        /// pair (the second goes to the other passage).
        alpha_leg: bool,
        /// Orientation of the strand points upward here.
        upward: bool,
    },
    Extremum {
        /// Local maximum (cup token) as opposed to minimum (cap token).
        maximum: bool,
        /// The orientation crosses the extremum moving rightward.
        rightward: bool,
    },
}

#[derive(Clone, Debug)]
pub struct Component {
    /// Bottom boundary columns of the two endpoints.
    pub left: usize,
    pub right: usize,
    /// Label sites in reading order.
    pub sites: Vec<LabelSite>,
}

#[derive(Clone, Debug)]
pub struct CrossingInfo {
    /// Token was `P`.
    pub positive: bool,
    /// Sign of the crossing under the derived orientations.
    pub sign: i64,
    /// Components of the two strands (over strand first is NOT implied;
    /// order is top-left/bottom-right strand, then top-right/bottom-left).
    pub comps: [usize; 2],
}

/// Symmetric matrix of linking numbers (off-diagonal) and per-component
/// writhes (diagonal) of the closure link.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkingMatrix {
    n: usize,
    a: Vec<i64>,
}

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn writhe(&self, i: usize) -> i64 {
        self.get(i, i)
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    /// The Cartan-coupling matrix the invariant's state terms must carry:
    /// diagonal = writhe, off-diagonal entry = twice the linking number.
    pub fn to_coupling_matrix(&self) -> DMatrix {
        let mut d = DMatrix::zero(self.n);
        for i in 0..self.n {
            d.add(i, i, self.get(i, i));
            for j in (i + 1)..self.n {
                d.add(i, j, 2 * self.get(i, j));
            }
        }
        d
    }
}

type Port = (usize, usize);

#[derive(Clone, Copy, Debug)]
enum SegKind {
    Vertical,
    Diag { id: usize, tlbr: bool },
    Arc { maximum: bool },
}

#[derive(Clone, Copy, Debug)]
struct Seg {
    a: Port,
    b: Port,
    kind: SegKind,
}

#[derive(Clone, Debug)]
pub struct SlicedDiagram {
    rows: Vec<Vec<Token>>,
    widths: Vec<usize>,
    components: Vec<Component>,
    crossings: Vec<CrossingInfo>,
    port_comp: HashMap<Port, usize>,
    port_up: HashMap<Port, bool>,
}

impl SlicedDiagram {
    pub fn new(rows: Vec<Vec<Token>>) -> Result<Self, DiagramError> {
        let mut widths = vec![0usize];
        for (r, row) in rows.iter().enumerate() {
            let (ins, outs) = row
                .iter()
                .fold((0, 0), |(i, o), t| {
                    let (ti, to) = t.widths();
                    (i + ti, o + to)
                });
            if ins != widths[r] {
                return Err(DiagramError::WidthMismatch {
                    row: r,
                    needed: ins,
                    have: widths[r],
                });
            }
            widths.push(outs);
        }

        // Build the segment list and crossing token table.
        let mut segs: Vec<Seg> = Vec::new();
        let mut crossing_tokens: Vec<bool> = Vec::new();
        for (r, row) in rows.iter().enumerate() {
            let (mut ip, mut op) = (0usize, 0usize);
            for &tok in row {
                match tok {
                    Token::I => {
                        segs.push(Seg {
                            a: (r, ip),
                            b: (r + 1, op),
                            kind: SegKind::Vertical,
                        });
                        ip += 1;
                        op += 1;
                    }
                    Token::P | Token::M => {
                        let id = crossing_tokens.len();
                        crossing_tokens.push(tok == Token::P);
                        segs.push(Seg {
                            a: (r, ip),
                            b: (r + 1, op + 1),
                            kind: SegKind::Diag { id, tlbr: true },
                        });
                        segs.push(Seg {
                            a: (r, ip + 1),
                            b: (r + 1, op),
                            kind: SegKind::Diag { id, tlbr: false },
                        });
                        ip += 2;
                        op += 2;
                    }
                    Token::C => {
                        segs.push(Seg {
                            a: (r, ip),
                            b: (r, ip + 1),
                            kind: SegKind::Arc { maximum: false },
                        });
                        ip += 2;
                    }
                    Token::U => {
                        segs.push(Seg {
                            a: (r + 1, op),
                            b: (r + 1, op + 1),
                            kind: SegKind::Arc { maximum: true },
                        });
                        op += 2;
                    }
                }
            }
        }

        let mut adj: HashMap<Port, Vec<usize>> = HashMap::new();
        for (i, s) in segs.iter().enumerate() {
            adj.entry(s.a).or_default().push(i);
            adj.entry(s.b).or_default().push(i);
        }

        // Trace components from the bottom boundary.
        let bottom = rows.len();
        let width = *widths.last().unwrap();
        let mut visited = vec![false; width];
        let mut components = Vec::new();
        let mut port_comp: HashMap<Port, usize> = HashMap::new();
        let mut port_up: HashMap<Port, bool> = HashMap::new();
        // Per crossing: (orientation epsilon product, passage components).
        let mut cross_eps: Vec<i64> = vec![1; crossing_tokens.len()];
        let mut cross_comps: Vec<Vec<usize>> = vec![Vec::new(); crossing_tokens.len()];

        for start in 0..width {
            if visited[start] {
                continue;
            }
            // Walk from this endpoint to the other one.
            let mut path: Vec<(usize, bool)> = Vec::new(); // (seg, entered at a)
            let mut port = (bottom, start);
            let mut last: Option<usize> = None;
            loop {
                let inc = &adj[&port];
                let si = *inc
                    .iter()
                    .find(|&&i| Some(i) != last)
                    .expect("interior ports have two segments");
                let s = &segs[si];
                let forward = s.a == port;
                path.push((si, forward));
                port = if forward { s.b } else { s.a };
                last = Some(si);
                if port.0 == bottom {
                    break;
                }
            }
            let end = port.1;
            visited[start] = true;
            visited[end] = true;
            let (left, right) = (start.min(end), start.max(end));
            // Reading order runs from the left endpoint.
            if start != left {
                path.reverse();
                for p in path.iter_mut() {
                    p.1 = !p.1;
                }
            }

            let comp_id = components.len();
            let mut sites = Vec::new();
            for &(si, forward) in &path {
                let s = &segs[si];
                let (u, v) = if forward { (s.a, s.b) } else { (s.b, s.a) };
                port_comp.insert(u, comp_id);
                port_comp.insert(v, comp_id);
                // Orientation is opposite to the reading direction. At each
                // port the strand crosses the boundary line once; it is
                // oriented upward exactly when the reading passes downward.
                let (up_u, up_v) = match s.kind {
                    SegKind::Arc { maximum } => (!maximum, maximum),
                    _ => {
                        let down = v.0 > u.0;
                        (down, down)
                    }
                };
                let prev = port_up.insert(u, up_u);
                debug_assert!(prev.is_none() || prev == Some(up_u));
                let prev = port_up.insert(v, up_v);
                debug_assert!(prev.is_none() || prev == Some(up_v));
                match s.kind {
                    SegKind::Vertical => {}
                    SegKind::Diag { id, tlbr } => {
                        // Reading moves against the orientation.
                        let upward = v.0 > u.0;
                        let alpha_leg = crossing_tokens[id] == tlbr;
                        sites.push(LabelSite::Crossing {
                            id,
                            alpha_leg,
                            upward,
                        });
                        cross_eps[id] *= if upward { -1 } else { 1 };
                        cross_comps[id].push(comp_id);
                    }
                    SegKind::Arc { maximum } => {
                        let rightward = u.1 > v.1;
                        sites.push(LabelSite::Extremum { maximum, rightward });
                    }
                }
            }
            components.push(Component { left, right, sites });
        }

        // Every segment must be reached from the bottom boundary; a shortfall
        // means a closed loop, which carries no boundary data.
        let traced: usize = segs
            .iter()
            .enumerate()
            .filter(|(_, s)| port_comp.contains_key(&s.a) || port_comp.contains_key(&s.b))
            .count();
        if traced != segs.len() {
            return Err(DiagramError::ClosedComponent);
        }

        let crossings = crossing_tokens
            .iter()
            .zip(cross_eps)
            .zip(&cross_comps)
            .map(|((&positive, eps), comps)| {
                debug_assert_eq!(comps.len(), 2);
                let s_tok = if positive { 1 } else { -1 };
                CrossingInfo {
                    positive,
                    sign: s_tok * eps,
                    comps: [comps[0], comps[1]],
                }
            })
            .collect();

        Ok(SlicedDiagram {
            rows,
            widths,
            components,
            crossings,
            port_comp,
            port_up,
        })
    }

    /// Component owning the strand through boundary port `(line, col)`.
    pub fn port_component(&self, line: usize, col: usize) -> usize {
        self.port_comp[&(line, col)]
    }

    /// Whether the strand through boundary port `(line, col)` is oriented
    /// upward there.
    pub fn port_upward(&self, line: usize, col: usize) -> bool {
        self.port_up[&(line, col)]
    }

    pub fn rows(&self) -> &[Vec<Token>] {
        &self.rows
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn crossings(&self) -> &[CrossingInfo] {
        &self.crossings
    }

    pub fn bottom_width(&self) -> usize {
        *self.widths.last().unwrap()
    }

    /// Components are paired adjacently at the bottom in order.
    pub fn is_bottom_tangle(&self) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(k, c)| c.left == 2 * k && c.right == 2 * k + 1)
    }

    fn require_bottom_tangle(&self) -> Result<(), DiagramError> {
        if self.is_bottom_tangle() {
            Ok(())
        } else {
            let pairs: Vec<(usize, usize)> =
                self.components.iter().map(|c| (c.left, c.right)).collect();
            Err(DiagramError::NotBottomTangle(format!(
                "endpoint pairs {:?}",
                pairs
            )))
        }
    }

    /// Endpoint pattern left behind by `nu_b`: pair `k` of components has
    /// interleaved endpoints `(4k, 4k+2)` and `(4k+1, 4k+3)`.
    pub fn has_clasp_closure(&self) -> bool {
        let n = self.components.len();
        n % 2 == 0
            && self.components.iter().enumerate().all(|(i, c)| {
                let k = i / 2;
                if i % 2 == 0 {
                    c.left == 4 * k && c.right == 4 * k + 2
                } else {
                    c.left == 4 * k + 1 && c.right == 4 * k + 3
                }
            })
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let n = self.components.len();
        let mut a = vec![0i64; n * n];
        for c in &self.crossings {
            let [i, j] = c.comps;
            if i == j {
                a[i * n + i] += c.sign;
            } else {
                a[i * n + j] += c.sign;
                a[j * n + i] += c.sign;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert!(a[i * n + j] % 2 == 0, "odd signed crossing count");
                    a[i * n + j] /= 2;
                }
            }
        }
        LinkingMatrix { n, a }
    }

    /// Insert a pure identity row at boundary line `line` (a re-slicing that
    /// changes nothing).
    pub fn with_identity_row(&self, line: usize) -> SlicedDiagram {
        let mut rows = self.rows.clone();
        rows.insert(line, vec![Token::I; self.widths[line]]);
        SlicedDiagram::new(rows).expect("identity row keeps the diagram valid")
    }

    /// Insert a cup-cap zigzag on the strand at column `col` of boundary
    /// line `line`; `flip` picks the mirror-image zigzag. Planar isotopy.
    pub fn with_zigzag(&self, line: usize, col: usize, flip: bool) -> SlicedDiagram {
        let w = self.widths[line];
        assert!(col < w);
        let mut rows = self.rows.clone();
        let (cup_at, cap_at) = if flip { (col + 1, col) } else { (col, col + 1) };
        let mut r1 = Vec::new();
        let mut r2 = Vec::new();
        for p in 0..w {
            if p == cup_at {
                r1.push(Token::U);
            }
            r1.push(Token::I);
        }
        if cup_at == w {
            r1.push(Token::U);
        }
        for p in 0..w + 1 {
            if p == cap_at {
                r2.push(Token::C);
            } else {
                r2.push(Token::I);
            }
        }
        rows.insert(line, r1);
        rows.insert(line + 1, r2);
        SlicedDiagram::new(rows).expect("zigzag keeps the diagram valid")
    }

    /// Replace each selected component by two parallel copies (cabling):
    /// vertical strands double, extrema nest, crossings expand into blocks
    /// of elementary crossings of the same handedness.
    pub fn double(&self, selected: &[usize]) -> SlicedDiagram {
        let mult = |port: Port| -> usize {
            if selected.contains(&self.port_comp[&port]) {
                2
            } else {
                1
            }
        };
        let mut rows: Vec<Vec<Token>> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            // Per-token expansion into mini-rows.
            let mut expansions: Vec<Vec<Vec<Token>>> = Vec::new();
            let (mut ip, mut op) = (0usize, 0usize);
            for &tok in row {
                let exp = match tok {
                    Token::I => {
                        let m = mult((r, ip));
                        ip += 1;
                        op += 1;
                        vec![vec![Token::I; m]]
                    }
                    Token::P | Token::M => {
                        let (m1, m2) = (mult((r, ip)), mult((r, ip + 1)));
                        ip += 2;
                        op += 2;
                        crossing_block(m1, m2, tok)
                    }
                    Token::C => {
                        let m = mult((r, ip));
                        ip += 2;
                        if m == 1 {
                            vec![vec![Token::C]]
                        } else {
                            vec![
                                vec![Token::I, Token::C, Token::I],
                                vec![Token::C],
                            ]
                        }
                    }
                    Token::U => {
                        let m = mult((r + 1, op));
                        op += 2;
                        if m == 1 {
                            vec![vec![Token::U]]
                        } else {
                            vec![
                                vec![Token::U],
                                vec![Token::I, Token::U, Token::I],
                            ]
                        }
                    }
                };
                expansions.push(exp);
            }
            let depth = expansions.iter().map(Vec::len).max().unwrap_or(1);
            for exp in expansions.iter_mut() {
                let out: usize = exp
                    .last()
                    .map(|mr| mr.iter().map(|t| t.widths().1).sum())
                    .unwrap_or(0);
                while exp.len() < depth {
                    exp.push(vec![Token::I; out]);
                }
            }
            for d in 0..depth {
                let mut new_row = Vec::new();
                for exp in &expansions {
                    new_row.extend_from_slice(&exp[d]);
                }
                rows.push(new_row);
            }
        }
        SlicedDiagram::new(rows).expect("cabling keeps the diagram valid")
    }

    /// Merge consecutive blocks of components at the bottom: within each
    /// block the neighboring endpoint pairs are joined by caps.
    pub fn mu_b(&self, partition: &[usize]) -> Result<SlicedDiagram, DiagramError> {
        self.require_bottom_tangle()?;
        let g = self.components.len();
        if partition.iter().sum::<usize>() != g {
            return Err(DiagramError::PartitionMismatch(partition.to_vec(), g));
        }
        let mut join_after = vec![false; g]; // join component c with c+1
        let mut c = 0usize;
        for &s in partition {
            for k in 0..s.saturating_sub(1) {
                join_after[c + k] = true;
            }
            c += s;
        }
        let mut row = Vec::new();
        let mut col = 0usize;
        while col < 2 * g {
            if col % 2 == 1 && join_after[col / 2] {
                row.push(Token::C);
                col += 2;
            } else {
                row.push(Token::I);
                col += 1;
            }
        }
        let mut rows = self.rows.clone();
        rows.push(row);
        Ok(SlicedDiagram::new(rows).expect("caps keep the diagram valid"))
    }

    /// Append one clasp crossing below each adjacent pair of components,
    /// interleaving their endpoints.
    pub fn nu_b(&self) -> Result<SlicedDiagram, DiagramError> {
        self.require_bottom_tangle()?;
        let n = self.components.len();
        if n % 2 != 0 {
            return Err(DiagramError::ComponentParity(n));
        }
        if n == 0 {
            return Ok(self.clone());
        }
        let mut row = Vec::new();
        for _ in 0..n / 2 {
            row.extend_from_slice(&[Token::I, Token::M, Token::I]);
        }
        let mut rows = self.rows.clone();
        rows.push(row);
        Ok(SlicedDiagram::new(rows).expect("clasps keep the diagram valid"))
    }

    /// On a clasp-closed 2g-component diagram (a `nu_b` image): double every
    /// component and cap the six inner legs of each pair, producing the
    /// g-component bottom tangle whose components are the boundary curves of
    /// the genus-1 surface pieces spanned by each pair.
    pub fn ybar_b(&self) -> Result<SlicedDiagram, DiagramError> {
        if self.components.is_empty() {
            return Ok(self.clone());
        }
        if !self.has_clasp_closure() {
            let pairs: Vec<(usize, usize)> =
                self.components.iter().map(|c| (c.left, c.right)).collect();
            return Err(DiagramError::NotClaspClosed(format!(
                "endpoint pairs {:?}",
                pairs
            )));
        }
        let g = self.components.len() / 2;
        let all: Vec<usize> = (0..2 * g).collect();
        let doubled = self.double(&all);
        let mut row = Vec::new();
        for _ in 0..g {
            row.extend_from_slice(&[
                Token::I,
                Token::C,
                Token::C,
                Token::C,
                Token::I,
            ]);
        }
        let mut rows = doubled.rows.clone();
        rows.push(row);
        let out = SlicedDiagram::new(rows).expect("caps keep the diagram valid");
        debug_assert_eq!(out.num_components(), g);
        Ok(out)
    }
}

/// Expansion of a crossing token acting on cables of widths `m1`, `m2` into
/// rows of elementary crossings of the same handedness.
fn crossing_block(m1: usize, m2: usize, tok: Token) -> Vec<Vec<Token>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Side {
        L,
        R,
    }
    let mut state: Vec<Side> = std::iter::repeat(Side::L)
        .take(m1)
        .chain(std::iter::repeat(Side::R).take(m2))
        .collect();
    let mut rows = Vec::new();
    loop {
        let mut row = Vec::new();
        let mut moved = false;
        let mut i = 0;
        while i < state.len() {
            if i + 1 < state.len() && state[i] == Side::L && state[i + 1] == Side::R {
                row.push(tok);
                state.swap(i, i + 1);
                moved = true;
                i += 2;
            } else {
                row.push(Token::I);
                i += 1;
            }
        }
        if !moved {
            break;
        }
        rows.push(row);
    }
    rows
}

impl fmt::Display for SlicedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let line: Vec<&str> = row.iter().map(|t| t.letter()).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn parse(text: &str) -> Result<SlicedDiagram, DiagramError> {
    let mut header: Option<usize> = None;
    let mut rows = Vec::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with("bottomtangle") {
            let rest = line["bottomtangle".len()..].trim();
            let n = rest
                .strip_prefix("n=")
                .and_then(|v| v.trim().parse::<usize>().ok())
                .ok_or_else(|| DiagramError::BadHeader(line.to_string()))?;
            header = Some(n);
            continue;
        }
        let row: Result<Vec<Token>, _> =
            line.split_whitespace().map(str::parse).collect();
        rows.push(row?);
    }
    let d = SlicedDiagram::new(rows)?;
    if let Some(n) = header {
        if !d.is_bottom_tangle() || d.num_components() != n {
            return Err(DiagramError::HeaderMismatch {
                expected: n,
                found: d.num_components(),
            });
        }
    }
    Ok(d)
}

/// A 2g-component clasp-closed tangle together with the block sizes that
/// assemble its pairs into n components.
#[derive(Clone, Debug)]
pub struct BoundaryData {
    pub tangle: SlicedDiagram,
    pub g: usize,
    pub partition: Vec<usize>,
}

pub enum Builtin {
    Diagram(SlicedDiagram),
    Boundary(BoundaryData),
}

pub fn builtin(name: &str) -> Result<Builtin, DiagramError> {
    let diagram = |rows: Vec<Vec<Token>>| {
        Ok(Builtin::Diagram(
            SlicedDiagram::new(rows).expect("built-in diagrams are valid"),
        ))
    };
    match name {
        "unknot" => diagram(vec![vec![Token::U]]),
        "B" | "hopf" => diagram(vec![
            vec![Token::U, Token::U],
            vec![Token::I, Token::P, Token::I],
            vec![Token::I, Token::P, Token::I],
        ]),
        // Two-bridge plat of three half twists. The cap must join a twist
        // strand to an outer strand: capping the two twist strands against
        // each other would let the whole twist region unwind around the cap.
        "trefoil" => diagram(vec![
            vec![Token::U, Token::U],
            vec![Token::I, Token::M, Token::I],
            vec![Token::I, Token::M, Token::I],
            vec![Token::I, Token::M, Token::I],
            vec![Token::C, Token::I, Token::I],
        ]),
        "borromean" => Ok(Builtin::Diagram(milnor(3))),
        "trefoil_boundary_data" => {
            let t = trefoil_surface_tangle();
            let tangle = t.nu_b().expect("clasp closure of the stored tangle");
            Ok(Builtin::Boundary(BoundaryData {
                tangle,
                g: 1,
                partition: vec![1],
            }))
        }
        _ => {
            if let Some(arg) = name
                .strip_prefix("milnor(")
                .and_then(|r| r.strip_suffix(')'))
            {
                let n: usize = arg
                    .trim()
                    .parse()
                    .map_err(|_| DiagramError::UnknownBuiltin(name.to_string()))?;
                if n < 3 {
                    return Err(DiagramError::UnknownBuiltin(name.to_string()));
                }
                return Ok(Builtin::Diagram(milnor(n)));
            }
            if let Some(arg) = name
                .strip_prefix("unlink(")
                .and_then(|r| r.strip_suffix(')'))
            {
                let n: usize = arg
                    .trim()
                    .parse()
                    .map_err(|_| DiagramError::UnknownBuiltin(name.to_string()))?;
                return diagram(vec![vec![Token::U; n]]);
            }
            Err(DiagramError::UnknownBuiltin(name.to_string()))
        }
    }
}

/// Row with a single 2-wide token at columns (p, p+1) inside width w.
fn row_with(w: usize, p: usize, tok: Token) -> Vec<Token> {
    let mut row = vec![Token::I; p];
    row.push(tok);
    row.extend(vec![Token::I; w - p - 2]);
    row
}

/// Kink (one self-crossing curl) inserted on the strand at column `col` of
/// a width-`w` boundary line; three rows, net width unchanged.
pub(crate) fn kink_rows(w: usize, col: usize, tok: Token) -> Vec<Vec<Token>> {
    let mut r1 = vec![Token::I; col];
    r1.push(Token::U);
    r1.extend(vec![Token::I; w - col]);
    let r2 = row_with(w + 2, col + 1, tok);
    let mut r3 = vec![Token::I; col];
    r3.push(Token::C);
    r3.extend(vec![Token::I; w - col]);
    vec![r1, r2, r3]
}

/// Two-component tangle of band cores for the trefoil: each band carries one
/// kink and the bands clasp once.
fn trefoil_surface_tangle() -> SlicedDiagram {
    let mut rows = vec![
        vec![Token::U, Token::U],
        row_with(4, 1, Token::P),
        row_with(4, 1, Token::P),
    ];
    rows.extend(kink_rows(4, 0, Token::P));
    rows.extend(kink_rows(4, 3, Token::P));
    SlicedDiagram::new(rows).expect("stored tangle is valid")
}

/// Global mirror lever for the weave: when `true`, every crossing of the
/// weave construction is flipped.
const WEAVE_MIRROR: bool = false;

/// The n-component Brunnian link diagram: n-1 simple rings side by side and
/// one weaving component whose left-hand strand makes one excursion per
/// letter of an iterated commutator word. The strand passes over everything
/// it meets except for a single under-crossing at the target ring (on the
/// inbound leg for a positive letter, on the outbound leg for a negative
/// one), so the under-passes along the weave spell the word.
pub fn milnor(n: usize) -> SlicedDiagram {
    assert!(n >= 3);
    let w = 2 * n;
    let home = 2 * n - 2;
    // outbound leg has the weave running left to right (the TL->BR strand)
    let tok = |outbound: bool, under: bool| match (outbound != under) != WEAVE_MIRROR {
        true => Token::P,
        false => Token::M,
    };
    let mut rows = vec![vec![Token::U; n]];
    for (ring, positive) in milnor_word(n - 1) {
        let target = 2 * ring - 1;
        for p in (target..home).rev() {
            rows.push(row_with(w, p, tok(false, p == target && positive)));
        }
        for p in target..home {
            rows.push(row_with(w, p, tok(true, p == target && !positive)));
        }
    }
    SlicedDiagram::new(rows).expect("weave construction is valid")
}

/// Iterated commutator word over ring indices 1..=k:
/// w_1 = x_1, w_j = [w_{j-1}, x_j].
fn milnor_word(k: usize) -> Vec<(usize, bool)> {
    assert!(k >= 2);
    let mut w: Vec<(usize, bool)> = vec![(1, true)];
    for j in 2..=k {
        let winv: Vec<(usize, bool)> =
            w.iter().rev().map(|&(r, s)| (r, !s)).collect();
        let mut next = w.clone();
        next.push((j, true));
        next.extend(winv);
        next.push((j, false));
        w = next;
    }
    w
}
