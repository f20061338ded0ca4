//! The line-oriented instance and complex file formats.
//!
//! Instance files (UTF-8, `#` starts a comment, tokens split on
//! whitespace):
//!
//! ```text
//! ground 4
//! matroid M uniform 2
//! matroid N circuits { 0 1 2 }
//! set 1 : 0
//! set 2 : 0 3
//! set 3 : 1 3
//! target 2
//! ```
//!
//! Matroid kinds: `uniform <k>`, `partition <b0,b1|b2,b3|...>`,
//! `graphic <nv> <u-v,...>`, `linear <p> <col;col;...>` (a column is
//! comma-separated residues), `circuits { ... } { ... }`,
//! `independent { ... } ...` (the full family).
//!
//! Complex files: `ground <k>` followed by `edge <e...>` lines
//! (hypergraph) or `facet <e...>` lines (simplicial complex, empty line
//! meaning the empty face). A complex file with no `facet` lines is the
//! void complex.

use std::fmt;

use rainbow_matroids_core::complex::SimplicialComplex;
use rainbow_matroids_core::error::MatroidError;
use rainbow_matroids_core::hypergraph::Hypergraph;
use rainbow_matroids_core::matroid::Matroid;
use rainbow_matroids_core::rainbow::RainbowInstance;
use rainbow_matroids_core::set::ElementSet;

/// A parse or validation error with its position (1-based line, 1-based
/// column of the offending token; column 0 for whole-line problems).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Declarative matroid description, kept alongside the built matroid so
/// instances can be serialized back to files byte-for-byte.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatroidSpec {
    Uniform { k: usize },
    Partition { blocks: Vec<Vec<usize>> },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Linear { prime: u64, columns: Vec<Vec<u64>> },
    Circuits { circuits: Vec<Vec<usize>> },
    Independent { family: Vec<Vec<usize>> },
}

/// Bounds-checks raw element lists before they become bit masks.
fn checked_sets(groups: &[Vec<usize>], ground: usize) -> Result<Vec<ElementSet>, MatroidError> {
    for group in groups {
        for &e in group {
            if e >= ground {
                return Err(MatroidError::ElementOutOfRange { element: e, ground });
            }
        }
    }
    Ok(groups.iter().map(|g| g.iter().copied().collect()).collect())
}

impl MatroidSpec {
    pub fn build(&self, ground: usize) -> Result<Matroid, MatroidError> {
        if ground > rainbow_matroids_core::set::MAX_GROUND {
            return Err(MatroidError::GroundTooLarge(ground));
        }
        match self {
            MatroidSpec::Uniform { k } => Matroid::uniform(ground, *k),
            MatroidSpec::Partition { blocks } => {
                Matroid::partition(ground, &checked_sets(blocks, ground)?)
            }
            MatroidSpec::Graphic { vertices, edges } => {
                if edges.len() != ground {
                    return Err(MatroidError::GroundSizeMismatch {
                        expected: ground,
                        got: edges.len(),
                    });
                }
                Matroid::graphic(*vertices, edges)
            }
            MatroidSpec::Linear { prime, columns } => {
                if columns.len() != ground {
                    return Err(MatroidError::GroundSizeMismatch {
                        expected: ground,
                        got: columns.len(),
                    });
                }
                Matroid::linear(*prime, columns)
            }
            MatroidSpec::Circuits { circuits } => {
                Matroid::from_circuits(ground, &checked_sets(circuits, ground)?)
            }
            MatroidSpec::Independent { family } => {
                Matroid::from_independent_sets(ground, &checked_sets(family, ground)?)
            }
        }
    }

    fn write_to(&self, out: &mut String, which: char) {
        use std::fmt::Write;
        let _ = write!(out, "matroid {which} ");
        match self {
            MatroidSpec::Uniform { k } => {
                let _ = writeln!(out, "uniform {k}");
            }
            MatroidSpec::Partition { blocks } => {
                let rendered: Vec<String> = blocks
                    .iter()
                    .map(|b| {
                        b.iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                let _ = writeln!(out, "partition {}", rendered.join("|"));
            }
            MatroidSpec::Graphic { vertices, edges } => {
                let rendered: Vec<String> =
                    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                let _ = writeln!(out, "graphic {vertices} {}", rendered.join(","));
            }
            MatroidSpec::Linear { prime, columns } => {
                let rendered: Vec<String> = columns
                    .iter()
                    .map(|c| {
                        c.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                let _ = writeln!(out, "linear {prime} {}", rendered.join(";"));
            }
            MatroidSpec::Circuits { circuits } => {
                let _ = write!(out, "circuits");
                for c in circuits {
                    let _ = write!(out, " {{ ");
                    for e in c {
                        let _ = write!(out, "{e} ");
                    }
                    let _ = write!(out, "}}");
                }
                let _ = writeln!(out);
            }
            MatroidSpec::Independent { family } => {
                let _ = write!(out, "independent");
                for c in family {
                    let _ = write!(out, " {{ ");
                    for e in c {
                        let _ = write!(out, "{e} ");
                    }
                    let _ = write!(out, "}}");
                }
                let _ = writeln!(out);
            }
        }
    }
}

/// A fully parsed and semantically validated instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub ground: usize,
    pub matroid_m: MatroidSpec,
    pub matroid_n: MatroidSpec,
    pub sets: Vec<Vec<usize>>,
    pub target: usize,
}

impl InstanceFile {
    /// Builds the validated rainbow instance (both matroids constructed,
    /// every set checked independent in both).
    pub fn instance(&self) -> Result<RainbowInstance, String> {
        let m = self.matroid_m.build(self.ground).map_err(|e| e.to_string())?;
        let n = self.matroid_n.build(self.ground).map_err(|e| e.to_string())?;
        let sets: Vec<ElementSet> = self
            .sets
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect();
        RainbowInstance::new(m, n, sets, self.target).map_err(|e| e.to_string())
    }

    /// Renders back to the file format; `parse_instance` round-trips it.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        use std::fmt::Write;
        let _ = writeln!(out, "ground {}", self.ground);
        self.matroid_m.write_to(&mut out, 'M');
        self.matroid_n.write_to(&mut out, 'N');
        for (i, set) in self.sets.iter().enumerate() {
            let _ = write!(out, "set {} :", i + 1);
            for e in set {
                let _ = write!(out, " {e}");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "target {}", self.target);
        out
    }
}

/// A token with its 1-based line and column.
struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let effective = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut col = 0;
        for piece in effective.split_whitespace() {
            let offset = effective[col..].find(piece).unwrap() + col;
            tokens.push(Token {
                text: piece,
                line: li + 1,
                col: offset + 1,
            });
            col = offset + piece.len();
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

fn parse_usize(tok: &Token) -> Result<usize, ParseError> {
    tok.text
        .parse()
        .map_err(|_| ParseError::new(tok.line, tok.col, format!("expected a number, got `{}`", tok.text)))
}

fn parse_u64(tok: &Token) -> Result<u64, ParseError> {
    tok.text
        .parse()
        .map_err(|_| ParseError::new(tok.line, tok.col, format!("expected a number, got `{}`", tok.text)))
}

/// Parses brace-delimited element groups: `{ 0 1 } { 2 }`.
fn parse_brace_groups(tokens: &[Token]) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut groups = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    for tok in tokens {
        match tok.text {
            "{" => {
                if current.is_some() {
                    return Err(ParseError::new(tok.line, tok.col, "nested `{`"));
                }
                current = Some(Vec::new());
            }
            "}" => match current.take() {
                Some(group) => groups.push(group),
                None => return Err(ParseError::new(tok.line, tok.col, "`}` without `{`")),
            },
            _ => match current.as_mut() {
                Some(group) => group.push(parse_usize(tok)?),
                None => {
                    return Err(ParseError::new(
                        tok.line,
                        tok.col,
                        format!("expected `{{`, got `{}`", tok.text),
                    ))
                }
            },
        }
    }
    if current.is_some() {
        let last = tokens.last().unwrap();
        return Err(ParseError::new(last.line, last.col, "unclosed `{`"));
    }
    Ok(groups)
}

fn parse_matroid_spec(tokens: &[Token]) -> Result<MatroidSpec, ParseError> {
    let kind = &tokens[0];
    match kind.text {
        "uniform" => {
            let k = tokens
                .get(1)
                .ok_or_else(|| ParseError::new(kind.line, kind.col, "uniform needs a rank"))?;
            Ok(MatroidSpec::Uniform { k: parse_usize(k)? })
        }
        "partition" => {
            let spec = tokens.get(1).ok_or_else(|| {
                ParseError::new(kind.line, kind.col, "partition needs a block list")
            })?;
            let mut blocks = Vec::new();
            for part in spec.text.split('|') {
                if part.is_empty() {
                    continue;
                }
                let mut block = Vec::new();
                for e in part.split(',') {
                    block.push(e.parse::<usize>().map_err(|_| {
                        ParseError::new(
                            spec.line,
                            spec.col,
                            format!("bad block element `{e}`"),
                        )
                    })?);
                }
                blocks.push(block);
            }
            Ok(MatroidSpec::Partition { blocks })
        }
        "graphic" => {
            let nv = tokens.get(1).ok_or_else(|| {
                ParseError::new(kind.line, kind.col, "graphic needs a vertex count")
            })?;
            let vertices = parse_usize(nv)?;
            let list = tokens.get(2).ok_or_else(|| {
                ParseError::new(kind.line, kind.col, "graphic needs an edge list")
            })?;
            let mut edges = Vec::new();
            for part in list.text.split(',') {
                let Some((u, v)) = part.split_once('-') else {
                    return Err(ParseError::new(
                        list.line,
                        list.col,
                        format!("bad edge `{part}`, expected `u-v`"),
                    ));
                };
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| {
                        ParseError::new(list.line, list.col, format!("bad vertex `{s}`"))
                    })
                };
                edges.push((parse(u)?, parse(v)?));
            }
            Ok(MatroidSpec::Graphic { vertices, edges })
        }
        "linear" => {
            let p = tokens.get(1).ok_or_else(|| {
                ParseError::new(kind.line, kind.col, "linear needs a prime modulus")
            })?;
            let prime = parse_u64(p)?;
            let list = tokens.get(2).ok_or_else(|| {
                ParseError::new(kind.line, kind.col, "linear needs a column list")
            })?;
            let mut columns = Vec::new();
            for col in list.text.split(';') {
                let mut column = Vec::new();
                for e in col.split(',') {
                    column.push(e.parse::<u64>().map_err(|_| {
                        ParseError::new(list.line, list.col, format!("bad residue `{e}`"))
                    })?);
                }
                columns.push(column);
            }
            Ok(MatroidSpec::Linear { prime, columns })
        }
        "circuits" => Ok(MatroidSpec::Circuits {
            circuits: parse_brace_groups(&tokens[1..])?,
        }),
        "independent" => Ok(MatroidSpec::Independent {
            family: parse_brace_groups(&tokens[1..])?,
        }),
        other => Err(ParseError::new(
            kind.line,
            kind.col,
            format!("unknown matroid kind `{other}`"),
        )),
    }
}

/// Parses and validates an instance file. Syntax errors carry positions;
/// semantic failures (matroid construction, dependent sets) name the
/// offending construct and its line.
pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let lines = tokenize(text);
    let mut ground: Option<(usize, usize)> = None; // (value, line)
    let mut matroid_m: Option<(MatroidSpec, usize)> = None;
    let mut matroid_n: Option<(MatroidSpec, usize)> = None;
    let mut sets: Vec<(usize, Vec<usize>, usize)> = Vec::new(); // (index, elements, line)
    let mut target: Option<usize> = None;

    for tokens in &lines {
        let head = &tokens[0];
        match head.text {
            "ground" => {
                let v = tokens.get(1).ok_or_else(|| {
                    ParseError::new(head.line, head.col, "ground needs a size")
                })?;
                ground = Some((parse_usize(v)?, head.line));
            }
            "matroid" => {
                let which = tokens.get(1).ok_or_else(|| {
                    ParseError::new(head.line, head.col, "matroid needs a name (M or N)")
                })?;
                if tokens.len() < 3 {
                    return Err(ParseError::new(head.line, head.col, "matroid needs a kind"));
                }
                let spec = parse_matroid_spec(&tokens[2..])?;
                match which.text {
                    "M" => matroid_m = Some((spec, head.line)),
                    "N" => matroid_n = Some((spec, head.line)),
                    other => {
                        return Err(ParseError::new(
                            which.line,
                            which.col,
                            format!("matroid name must be M or N, got `{other}`"),
                        ))
                    }
                }
            }
            "set" => {
                let idx_tok = tokens.get(1).ok_or_else(|| {
                    ParseError::new(head.line, head.col, "set needs an index")
                })?;
                let idx = parse_usize(idx_tok)?;
                let colon = tokens.get(2).ok_or_else(|| {
                    ParseError::new(head.line, head.col, "set needs a `:`")
                })?;
                if colon.text != ":" {
                    return Err(ParseError::new(
                        colon.line,
                        colon.col,
                        format!("expected `:`, got `{}`", colon.text),
                    ));
                }
                let mut elements = Vec::new();
                for tok in &tokens[3..] {
                    elements.push(parse_usize(tok)?);
                }
                sets.push((idx, elements, head.line));
            }
            "target" => {
                let v = tokens.get(1).ok_or_else(|| {
                    ParseError::new(head.line, head.col, "target needs a value")
                })?;
                target = Some(parse_usize(v)?);
            }
            other => {
                return Err(ParseError::new(
                    head.line,
                    head.col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let (ground, ground_line) =
        ground.ok_or_else(|| ParseError::new(0, 0, "missing `ground` line"))?;
    if ground > rainbow_matroids_core::set::MAX_GROUND {
        return Err(ParseError::new(
            ground_line,
            0,
            format!(
                "ground size {ground} exceeds the supported maximum of {}",
                rainbow_matroids_core::set::MAX_GROUND
            ),
        ));
    }
    let (matroid_m, m_line) =
        matroid_m.ok_or_else(|| ParseError::new(0, 0, "missing `matroid M` line"))?;
    let (matroid_n, n_line) =
        matroid_n.ok_or_else(|| ParseError::new(0, 0, "missing `matroid N` line"))?;
    let target = target.ok_or_else(|| ParseError::new(0, 0, "missing `target` line"))?;

    sets.sort_by_key(|(idx, _, _)| *idx);
    let mut ordered = Vec::with_capacity(sets.len());
    for (expect, (idx, elements, line)) in sets.into_iter().enumerate() {
        if idx != expect + 1 {
            return Err(ParseError::new(
                line,
                0,
                format!("set indices must be 1..m exactly once; found index {idx}"),
            ));
        }
        ordered.push((elements, line));
    }

    // Semantic validation: build both matroids and check every set.
    let m = matroid_m
        .build(ground)
        .map_err(|e| ParseError::new(m_line, 0, format!("matroid M: {e}")))?;
    let n = matroid_n
        .build(ground)
        .map_err(|e| ParseError::new(n_line, 0, format!("matroid N: {e}")))?;
    for (i, (elements, line)) in ordered.iter().enumerate() {
        if let Some(&e) = elements.iter().find(|&&e| e >= ground) {
            return Err(ParseError::new(
                *line,
                0,
                format!(
                    "set {} contains element {e} outside ground 0..{ground}",
                    i + 1
                ),
            ));
        }
        let set: ElementSet = elements.iter().copied().collect();
        if !m.is_independent(set) {
            return Err(ParseError::new(
                *line,
                0,
                format!("set {} is not independent in matroid M", i + 1),
            ));
        }
        if !n.is_independent(set) {
            return Err(ParseError::new(
                *line,
                0,
                format!("set {} is not independent in matroid N", i + 1),
            ));
        }
    }

    Ok(InstanceFile {
        ground,
        matroid_m,
        matroid_n,
        sets: ordered.into_iter().map(|(e, _)| e).collect(),
        target,
    })
}

/// Either side of a complex file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexFile {
    Hypergraph(Hypergraph),
    Complex(SimplicialComplex),
}

impl ComplexFile {
    /// The complex a file denotes: I(H) for hypergraphs, the complex
    /// itself otherwise.
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            ComplexFile::Hypergraph(h) => SimplicialComplex::independence_complex(h),
            ComplexFile::Complex(c) => c.clone(),
        }
    }
}

/// Parses a hypergraph (`edge` lines) or complex (`facet` lines) file.
pub fn parse_complex_file(text: &str) -> Result<ComplexFile, ParseError> {
    let lines = tokenize(text);
    let mut ground: Option<usize> = None;
    let mut edges: Vec<ElementSet> = Vec::new();
    let mut facets: Vec<ElementSet> = Vec::new();

    for tokens in &lines {
        let head = &tokens[0];
        match head.text {
            "ground" => {
                let size = parse_usize(tokens.get(1).ok_or_else(|| {
                    ParseError::new(head.line, head.col, "ground needs a size")
                })?)?;
                if size > rainbow_matroids_core::set::MAX_GROUND {
                    return Err(ParseError::new(
                        head.line,
                        head.col,
                        format!(
                            "ground size {size} exceeds the supported maximum of {}",
                            rainbow_matroids_core::set::MAX_GROUND
                        ),
                    ));
                }
                ground = Some(size);
            }
            "edge" | "facet" => {
                let g = ground.ok_or_else(|| {
                    ParseError::new(head.line, head.col, "`ground` must come first")
                })?;
                let mut set = ElementSet::EMPTY;
                for tok in &tokens[1..] {
                    let e = parse_usize(tok)?;
                    if e >= g {
                        return Err(ParseError::new(
                            tok.line,
                            tok.col,
                            format!("element {e} outside ground 0..{g}"),
                        ));
                    }
                    set = set.with(e);
                }
                if head.text == "edge" {
                    edges.push(set);
                } else {
                    facets.push(set);
                }
            }
            other => {
                return Err(ParseError::new(
                    head.line,
                    head.col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let ground = ground.ok_or_else(|| ParseError::new(0, 0, "missing `ground` line"))?;
    match (edges.is_empty(), facets.is_empty()) {
        (false, false) => Err(ParseError::new(
            0,
            0,
            "a file cannot mix `edge` and `facet` lines",
        )),
        (false, true) => Ok(ComplexFile::Hypergraph(
            Hypergraph::new(ground, &edges).map_err(|e| ParseError::new(0, 0, e.to_string()))?,
        )),
        (true, false) => Ok(ComplexFile::Complex(
            SimplicialComplex::from_facets(ground, &facets)
                .map_err(|e| ParseError::new(0, 0, e.to_string()))?,
        )),
        // No edge/facet lines: an edgeless hypergraph and the void
        // complex would both be plausible; read it as a hypergraph with
        // no edges (I = full simplex). An explicit `facet` line with no
        // elements gives {∅}, and `edge` with no elements voids I(H).
        (true, true) => Ok(ComplexFile::Hypergraph(
            Hypergraph::edgeless(ground).map_err(|e| ParseError::new(0, 0, e.to_string()))?,
        )),
    }
}
