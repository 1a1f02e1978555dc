//! Tableaux over the mixed alphabet `{1..m, 1̄..n̄}` and their enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::borel::{require_hook, BorelSequence, Letter, Weight};
use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

#[derive(Deserialize)]
struct RawTableau {
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        let t = Tableau::new(raw.rows)?;
        if t.shape != raw.shape {
            return Err(Error::ShapeMismatch {
                shape: raw.shape,
                rows: t.rows.iter().map(Vec::len).collect(),
            });
        }
        Ok(t)
    }
}

impl Tableau {
    /// Builds a tableau from its rows; the shape is read off the row lengths.
    pub fn new(mut rows: Vec<Vec<Letter>>) -> Result<Self> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lengths.clone()).map_err(|_| Error::ShapeMismatch {
            shape: Partition::empty(),
            rows: lengths,
        })?;
        if shape.len() != rows.len() {
            // an empty row in the middle
            return Err(Error::ShapeMismatch {
                shape,
                rows: rows.iter().map(Vec::len).collect(),
            });
        }
        Ok(Tableau { shape, rows })
    }

    pub fn empty() -> Self {
        Tableau {
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        self.rows.get(row)?.get(col).copied()
    }

    /// Entries row by row, left to right.
    pub fn reading_word(&self) -> impl Iterator<Item = Letter> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Occurrence counts of each letter of gl(m|n).
    pub fn content(&self, m: usize, n: usize) -> Result<Content> {
        let mut content = Content::zero(m, n);
        for letter in self.reading_word() {
            let slot = match letter {
                Letter::Unbarred(i) if i <= m => &mut content.unbarred[i - 1],
                Letter::Barred(j) if j <= n => &mut content.barred[j - 1],
                _ => {
                    return Err(Error::LetterOutOfRange {
                        letter: letter.to_string(),
                        m,
                        n,
                    })
                }
            };
            *slot += 1;
        }
        Ok(content)
    }

    /// The weight of the Gelfand-Tsetlin basis vector indexed by this tableau.
    pub fn weight(&self, m: usize, n: usize) -> Result<Weight> {
        Ok(self.content(m, n)?.into())
    }

    /// Conditions for `b`-semistandardness:
    /// entries weakly increase along rows and columns under `<_b`, unbarred
    /// letters strictly increase down columns and barred letters strictly
    /// increase along rows. Letters outside the alphabet of `b` fail.
    pub fn is_b_semistandard(&self, b: &BorelSequence) -> bool {
        let Some(ranks) = self.ranks(b) else {
            return false;
        };
        let letters = b.letters();
        for (r, row) in ranks.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if c > 0 && !admissible_right_of(row[c - 1], x, &letters) {
                    return false;
                }
                if r > 0 && !admissible_below(ranks[r - 1][c], x, &letters) {
                    return false;
                }
            }
        }
        true
    }

    fn ranks(&self, b: &BorelSequence) -> Option<Vec<Vec<usize>>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&l| b.rank(l)).collect())
            .collect()
    }
}

// `x` directly right of `left`: weakly larger, and not a repeated barred letter.
fn admissible_right_of(left: usize, x: usize, letters: &[Letter]) -> bool {
    x > left || (x == left && !letters[x].is_barred())
}

// `x` directly below `up`: weakly larger, and not a repeated unbarred letter.
fn admissible_below(up: usize, x: usize, letters: &[Letter]) -> bool {
    x > up || (x == up && letters[x].is_barred())
}

/// Letter multiplicities `(μ_1..μ_m | μ_1̄..μ_n̄)`. Ordered lexicographically by
/// unbarred then barred counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Content {
    pub unbarred: Vec<usize>,
    pub barred: Vec<usize>,
}

impl Content {
    pub fn zero(m: usize, n: usize) -> Self {
        Content {
            unbarred: vec![0; m],
            barred: vec![0; n],
        }
    }

    pub fn total(&self) -> usize {
        self.unbarred.iter().chain(&self.barred).sum()
    }

    /// Flag syntax: `2,2:2`; either side may be empty.
    pub fn code(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        format!("{}:{}", join(&self.unbarred), join(&self.barred))
    }

    fn count(&self, letter: Letter) -> usize {
        match letter {
            Letter::Unbarred(i) => self.unbarred[i - 1],
            Letter::Barred(j) => self.barred[j - 1],
        }
    }
}

impl From<Content> for Weight {
    fn from(c: Content) -> Self {
        Weight {
            delta: c.unbarred.into_iter().map(|x| x as i64).collect(),
            epsilon: c.barred.into_iter().map(|x| x as i64).collect(),
        }
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.unbarred), join(&self.barred))
    }
}

impl FromStr for Content {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (left, right) = s
            .split_once(':')
            .ok_or_else(|| format!("expected unbarred:barred counts, got {s:?}"))?;
        let parse = |part: &str| -> std::result::Result<Vec<usize>, String> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}")))
                .collect()
        };
        Ok(Content {
            unbarred: parse(left)?,
            barred: parse(right)?,
        })
    }
}

/// Depth-first search over `b`-semistandard fillings of a shape.
///
/// Boxes are filled in reading order with letters tried in increasing `<_b`
/// order, so tableaux come out sorted lexicographically by reading word.
pub struct TableauSearch<'a> {
    b: &'a BorelSequence,
    shape: &'a Partition,
    content: Option<&'a Content>,
    max_nodes: Option<u64>,
}

impl<'a> TableauSearch<'a> {
    pub fn new(b: &'a BorelSequence, shape: &'a Partition) -> Self {
        TableauSearch {
            b,
            shape,
            content: None,
            max_nodes: None,
        }
    }

    pub fn content(mut self, content: Option<&'a Content>) -> Self {
        self.content = content;
        self
    }

    /// Abort with [`Error::NodeLimit`] once this many letters have been placed.
    pub fn max_nodes(mut self, limit: Option<u64>) -> Self {
        self.max_nodes = limit;
        self
    }

    pub fn for_each(&self, mut visit: impl FnMut(Tableau)) -> Result<()> {
        let (m, n) = (self.b.m(), self.b.n());
        let letters = self.b.letters();
        let target: Option<Vec<usize>> = match self.content {
            Some(c) => {
                if c.unbarred.len() != m || c.barred.len() != n {
                    return Err(Error::ContentMismatch {
                        m,
                        n,
                        got_m: c.unbarred.len(),
                        got_n: c.barred.len(),
                    });
                }
                if c.total() != self.shape.size() {
                    return Ok(());
                }
                Some(letters.iter().map(|&l| c.count(l)).collect())
            }
            None => None,
        };
        if letters.is_empty() && !self.shape.is_empty() {
            return Ok(());
        }

        let cells: Vec<(usize, usize)> = self.shape.cells().collect();
        let mut state = SearchState {
            letters: &letters,
            target: target.as_deref(),
            used: vec![0; letters.len()],
            grid: self.shape.parts().iter().map(|&len| vec![0; len]).collect(),
            nodes: 0,
            max_nodes: self.max_nodes,
        };
        state.fill(&cells, 0, &mut visit)
    }

    pub fn collect(&self) -> Result<Vec<Tableau>> {
        let mut out = Vec::new();
        self.for_each(|t| out.push(t))?;
        Ok(out)
    }

    pub fn count(&self) -> Result<u64> {
        let mut count = 0;
        self.for_each(|_| count += 1)?;
        Ok(count)
    }
}

struct SearchState<'s> {
    letters: &'s [Letter],
    target: Option<&'s [usize]>,
    used: Vec<usize>,
    grid: Vec<Vec<usize>>,
    nodes: u64,
    max_nodes: Option<u64>,
}

impl SearchState<'_> {
    fn fill(
        &mut self,
        cells: &[(usize, usize)],
        k: usize,
        visit: &mut impl FnMut(Tableau),
    ) -> Result<()> {
        let Some(&(r, c)) = cells.get(k) else {
            let rows = self
                .grid
                .iter()
                .map(|row| row.iter().map(|&x| self.letters[x]).collect())
                .collect();
            visit(Tableau::new(rows).expect("grid follows the shape"));
            return Ok(());
        };
        let left = (c > 0).then(|| self.grid[r][c - 1]);
        let up = (r > 0).then(|| self.grid[r - 1][c]);
        let lo = left.into_iter().chain(up).max().unwrap_or(0);
        for x in lo..self.letters.len() {
            if left.is_some_and(|l| !admissible_right_of(l, x, self.letters))
                || up.is_some_and(|u| !admissible_below(u, x, self.letters))
            {
                continue;
            }
            if self.target.is_some_and(|t| self.used[x] == t[x]) {
                continue;
            }
            self.nodes += 1;
            if self.max_nodes.is_some_and(|cap| self.nodes > cap) {
                return Err(Error::NodeLimit(self.max_nodes.unwrap()));
            }
            self.grid[r][c] = x;
            self.used[x] += 1;
            self.fill(cells, k + 1, visit)?;
            self.used[x] -= 1;
        }
        Ok(())
    }
}

/// All `b`-semistandard tableaux of shape `λ`, optionally with fixed content,
/// in lexicographic order of reading words under `<_b`.
pub fn enumerate_tableaux(
    b: &BorelSequence,
    lambda: &Partition,
    content: Option<&Content>,
) -> Result<Vec<Tableau>> {
    require_hook(lambda, b.m(), b.n())?;
    enumerate_tableaux_relaxed(b, lambda, content)
}

/// Same as [`enumerate_tableaux`] without the hook precondition; non-hook
/// shapes simply have no fillings.
pub fn enumerate_tableaux_relaxed(
    b: &BorelSequence,
    lambda: &Partition,
    content: Option<&Content>,
) -> Result<Vec<Tableau>> {
    TableauSearch::new(b, lambda).content(content).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (expected text, latex or json)")),
        }
    }
}

/// Text is one line per row with barred letters as `k'`; LaTeX is a
/// `\young(...)` body; JSON is `{"shape":[..],"rows":[["1","1b"],..]}`.
pub fn render(t: &Tableau, format: Format) -> String {
    match format {
        Format::Text => t
            .rows
            .iter()
            .map(|row| row.iter().map(Letter::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Latex => {
            let body = t
                .rows
                .iter()
                .map(|row| row.iter().map(|l| l.latex()).collect::<String>())
                .collect::<Vec<_>>()
                .join(",");
            format!("\\young({body})")
        }
        Format::Json => serde_json::to_string(t).expect("tableau serializes"),
    }
}
