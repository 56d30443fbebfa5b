//! Violation semantics for ℓ-vertex-rankings.
//!
//! A path `x_0 … x_r` with `r <= ell` is a violation when its endpoints share
//! a colour that is also the maximum colour on the path. A colouring is an
//! ℓ-vertex-ranking exactly when it has no violations.

use std::collections::BTreeSet;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::{walk_paths, PathFamily, UPath};

/// Which palette a vertex colour was drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PaletteTag {
    /// First-phase palette of the given layer.
    Layer(usize),
    /// Second-phase recolouring palette.
    Phase2,
    /// Fresh colour given to a split-off high-degree vertex.
    Split,
    /// Plain greedy proper colouring (`ell = 1`).
    Greedy,
}

/// A complete vertex colouring with positive integer colours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankedColouring {
    colours: Vec<usize>,
    tags: Option<Vec<PaletteTag>>,
}

impl RankedColouring {
    pub fn new(colours: Vec<usize>) -> Result<Self> {
        if let Some(vertex) = colours.iter().position(|&c| c == 0) {
            return Err(Error::Uncoloured { vertex });
        }
        Ok(RankedColouring { colours, tags: None })
    }

    pub fn with_tags(colours: Vec<usize>, tags: Vec<PaletteTag>) -> Result<Self> {
        if tags.len() != colours.len() {
            return Err(Error::param("one palette tag per vertex required"));
        }
        let mut col = Self::new(colours)?;
        col.tags = Some(tags);
        Ok(col)
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn tags(&self) -> Option<&[PaletteTag]> {
        self.tags.as_deref()
    }

    pub fn distinct_colours(&self) -> usize {
        self.colours.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn max_colour(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.colours.len() != g.n() {
            return Err(Error::ColouringLength {
                expected: g.n(),
                got: self.colours.len(),
            });
        }
        Ok(())
    }
}

/// A path witnessing that a colouring is not a ranking.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub path: UPath,
    /// The shared endpoint colour, which is the maximum on the path.
    pub colour: usize,
}

/// Every violating path with at most `ell` edges, in canonical order.
///
/// The walk only passes through vertices no brighter than the start colour,
/// so valid colourings are checked without enumerating every short path.
pub fn find_violations(g: &Graph, ell: usize, col: &RankedColouring) -> Result<Vec<Violation>> {
    let mut found = Vec::new();
    walk_violations(g, ell, col, |p| {
        found.push(Violation {
            path: UPath::new(p.to_vec()),
            colour: col.colour(p[0]),
        });
        true
    })?;
    Ok(found)
}

pub fn is_valid_ranking(g: &Graph, ell: usize, col: &RankedColouring) -> Result<bool> {
    let mut valid = true;
    walk_violations(g, ell, col, |_| {
        valid = false;
        false
    })?;
    Ok(valid)
}

/// First violation in canonical order, if any.
pub fn first_violation(g: &Graph, ell: usize, col: &RankedColouring) -> Result<Option<Violation>> {
    let mut first = None;
    walk_violations(g, ell, col, |p| {
        first = Some(Violation {
            path: UPath::new(p.to_vec()),
            colour: col.colour(p[0]),
        });
        false
    })?;
    Ok(first)
}

fn walk_violations<V>(g: &Graph, ell: usize, col: &RankedColouring, visit: V) -> Result<()>
where
    V: FnMut(&[usize]) -> bool,
{
    if ell == 0 {
        return Err(Error::param("ell must be at least 1"));
    }
    col.check_covers(g)?;
    let c = col.colours();
    walk_paths(g, ell, |s, v| c[v] == c[s], |s, v| c[v] <= c[s], visit);
    Ok(())
}

/// Checks a colouring against an already enumerated family.
pub fn violations_in_family(fam: &PathFamily, colours: &[usize]) -> Vec<Violation> {
    fam.iter()
        .filter(|p| path_violates(p, colours))
        .map(|p| Violation {
            path: UPath::new(p.to_vec()),
            colour: colours[p[0]],
        })
        .collect()
}

pub fn path_violates(path: &[usize], colours: &[usize]) -> bool {
    let top = colours[path[0]];
    top == colours[path[path.len() - 1]] && path[1..path.len() - 1].iter().all(|&v| colours[v] <= top)
}

#[derive(Serialize)]
struct ViolationJson<'a> {
    path: &'a [usize],
    colours: Vec<usize>,
    colour: usize,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    ell: usize,
    valid: bool,
    violations: Vec<ViolationJson<'a>>,
}

/// Writes one line per violation: the path, then its colours.
pub fn write_report_text<W: Write>(mut out: W, col: &RankedColouring, violations: &[Violation]) -> std::io::Result<()> {
    if violations.is_empty() {
        writeln!(out, "valid")?;
    }
    for v in violations {
        let path: Vec<String> = v.path.vertices().iter().map(usize::to_string).collect();
        let colours: Vec<String> = v.path.vertices().iter().map(|&x| col.colour(x).to_string()).collect();
        writeln!(out, "violation path={} colours={} colour={}", path.join(","), colours.join(","), v.colour)?;
    }
    Ok(())
}

pub fn report_json(ell: usize, col: &RankedColouring, violations: &[Violation]) -> serde_json::Value {
    let report = ReportJson {
        ell,
        valid: violations.is_empty(),
        violations: violations
            .iter()
            .map(|v| ViolationJson {
                path: v.path.vertices(),
                colours: v.path.vertices().iter().map(|&x| col.colour(x)).collect(),
                colour: v.colour,
            })
            .collect(),
    };
    serde_json::to_value(report).expect("report serialises")
}
