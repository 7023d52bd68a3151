//! Explicit finite models: table representation, the MO-family constructor,
//! file I/O, axiom checking with named witnesses, and a constraint-pruned
//! enumerator of every model up to size 6.
//!
//! A finite model is a table ⟨names, comp, dot⟩ over indices `0..size`, with
//! the element `0` pinned at index 0 and `1 = 0'` pinned at index 1. Tables
//! are validated against the full seven-condition axiom check before being
//! exposed as models; a deliberately broken table (a negative control) can be
//! carried through [`FiniteAlgebra::parse_unchecked`].

use rand::{Rng, RngCore};
use rayon::prelude::*;

use crate::model::{Feature, PAlgebra};

/// Sentinel for a not-yet-assigned product cell during enumeration.
const UNSET: usize = usize::MAX;

/// A named violation of one of the seven defining conditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("axiom {law} violated at ({saw})", saw = witness.join(", "))]
pub struct AxiomViolation {
    /// Which condition broke (e.g. `P-commutativity`, `O`).
    pub law: &'static str,
    /// Offending elements, by name, in the order the condition quantifies them.
    pub witness: Vec<String>,
}

/// Errors from building, parsing, or validating a finite table.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    /// The text did not match the table file format.
    #[error("line {line}: {msg}")]
    Parse {
        /// 1-based line number in the input text.
        line: usize,
        /// What was expected or found.
        msg: String,
    },
    /// Sizes, ranges, or the complement involution are inconsistent.
    #[error("malformed table: {0}")]
    Structural(String),
    /// The table is well-formed but is not a model of the axioms.
    #[error("{0}")]
    Axiom(#[from] AxiomViolation),
}

/// A finite model given by explicit tables.
#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    name: String,
    names: Vec<String>,
    comp: Vec<usize>,
    dot: Vec<Vec<usize>>,
}

impl FiniteAlgebra {
    /// Build and fully validate a table (structure, then all seven axioms).
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        comp: Vec<usize>,
        dot: Vec<Vec<usize>>,
    ) -> Result<Self, TableError> {
        let a = Self::new_unchecked(name, names, comp, dot)?;
        a.check_axioms().map_err(TableError::Axiom)?;
        Ok(a)
    }

    /// Build with structural validation only (sizes, ranges, involution) —
    /// for negative-control tables that deliberately violate an axiom.
    pub fn new_unchecked(
        name: impl Into<String>,
        names: Vec<String>,
        comp: Vec<usize>,
        dot: Vec<Vec<usize>>,
    ) -> Result<Self, TableError> {
        let n = names.len();
        let bad = |msg: String| Err(TableError::Structural(msg));
        if n < 2 {
            return bad(format!("need at least the elements 0 and 1, got size {n}"));
        }
        for (i, a) in names.iter().enumerate() {
            if a.is_empty() || a.chars().any(|c| c.is_whitespace() || c == '#') {
                return bad(format!("element name {a:?} (index {i}) is not a bare word"));
            }
            if names[..i].contains(a) {
                return bad(format!("duplicate element name {a:?}"));
            }
        }
        if comp.len() != n {
            return bad(format!("comp has {} entries, expected {n}", comp.len()));
        }
        if let Some(&i) = comp.iter().find(|&&i| i >= n) {
            return bad(format!("comp entry {i} out of range for size {n}"));
        }
        for i in 0..n {
            if comp[comp[i]] != i {
                return bad(format!(
                    "comp is not an involution: comp(comp({i})) = {}",
                    comp[comp[i]]
                ));
            }
        }
        if comp[0] != 1 {
            return bad(format!(
                "the complement of 0 must sit at index 1, found index {}",
                comp[0]
            ));
        }
        if dot.len() != n || dot.iter().any(|row| row.len() != n) {
            return bad(format!("dot table is not {n}×{n}"));
        }
        if let Some(&v) = dot.iter().flatten().find(|&&v| v >= n) {
            return bad(format!("dot entry {v} out of range for size {n}"));
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            names,
            comp,
            dot,
        })
    }

    /// Carrier size.
    pub fn size(&self) -> usize {
        self.names.len()
    }

    /// Element names, in index order (index 0 is `0`, index 1 is `1`).
    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    /// Index of the named element, if present.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Complement by index.
    pub fn comp_index(&self, i: usize) -> usize {
        self.comp[i]
    }

    /// Product by indices.
    pub fn dot_index(&self, i: usize, j: usize) -> usize {
        self.dot[i][j]
    }

    /// Same carrier names and tables (the registry name is ignored).
    pub fn same_table(&self, other: &FiniteAlgebra) -> bool {
        self.names == other.names && self.comp == other.comp && self.dot == other.dot
    }

    /// Replace the registry name (used when loading from a file spec).
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The MO family: `0`, `1`, and `k` orthogonal pairs of "lines", where the
    /// product of distinct non-complementary lines `p·q` is `q` (projecting a
    /// line onto a non-orthogonal line lands on the target line). `k = 0` is
    /// the two-element Boolean algebra, `k = 1` the four-element one, and
    /// `k ≥ 2` is non-commutative.
    pub fn mo_algebra(k: usize) -> FiniteAlgebra {
        let n = 2 * k + 2;
        let mut names = vec!["0".to_string(), "1".to_string()];
        for p in 0..k {
            let stem = if k <= 26 {
                ((b'a' + p as u8) as char).to_string()
            } else {
                format!("p{p}")
            };
            names.push(stem.clone());
            names.push(format!("{stem}'"));
        }
        let mut comp = vec![1, 0];
        for p in 0..k {
            comp.push(2 * p + 3);
            comp.push(2 * p + 2);
        }
        let mut dot = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                dot[i][j] = if i == 0 || j == 0 {
                    0
                } else if i == 1 {
                    j
                } else if j == 1 {
                    i
                } else if i == j {
                    i
                } else if comp[i] == j {
                    0
                } else {
                    j
                };
            }
        }
        let a = FiniteAlgebra {
            name: format!("mo:{k}"),
            names,
            comp,
            dot,
        };
        debug_assert!(a.check_axioms().is_ok());
        a
    }

    /// The hexagon ortho-poset (two interleaved three-element chains
    /// `0 < a < b < 1` and `0 < b' < a' < 1`, product = lattice meet).
    /// This is **not** a model: superposition (axiom `O`) fails on
    /// `(a', b, b')`, and orthomodularity fails on `a < b`. It ships as a
    /// negative control and must be built unchecked.
    pub fn hexagon_control() -> FiniteAlgebra {
        let names = ["0", "1", "a", "a'", "b", "b'"]
            .map(str::to_string)
            .to_vec();
        let comp = vec![1, 0, 3, 2, 5, 4];
        // Meet table for the hexagon order.
        let dot = vec![
            vec![0, 0, 0, 0, 0, 0],
            vec![0, 1, 2, 3, 4, 5],
            vec![0, 2, 2, 0, 2, 0],
            vec![0, 3, 0, 3, 0, 5],
            vec![0, 4, 2, 0, 4, 0],
            vec![0, 5, 0, 3, 0, 5],
        ];
        FiniteAlgebra::new_unchecked("hexagon", names, comp, dot)
            .expect("hexagon table is structurally sound")
    }

    /// Run the full seven-condition check, reporting the first violation with
    /// the condition's name and a witness tuple.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        check_axioms_table(&self.comp, &self.dot).map_err(|(law, witness)| AxiomViolation {
            law,
            witness: witness.into_iter().map(|i| self.names[i].clone()).collect(),
        })
    }

    /// Parse the table file format, then run the full axiom check.
    pub fn parse(text: &str) -> Result<FiniteAlgebra, TableError> {
        let a = Self::parse_unchecked(text)?;
        a.check_axioms().map_err(TableError::Axiom)?;
        Ok(a)
    }

    /// Parse the table file format with structural validation only.
    ///
    /// Format (comments run from `#` to end of line, blank lines ignored):
    ///
    /// ```text
    /// palgebra
    /// size 6
    /// names 0 1 a a' b b'
    /// comp 1 0 3 2 5 4
    /// dot
    /// 0 0 0 0 0 0
    /// …five more rows of six indices…
    /// ```
    pub fn parse_unchecked(text: &str) -> Result<FiniteAlgebra, TableError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut next = |what: &str| {
            lines.next().ok_or_else(|| TableError::Parse {
                line: text.lines().count() + 1,
                msg: format!("unexpected end of input, expected {what}"),
            })
        };
        let (ln, magic) = next("the header word `palgebra`")?;
        if magic != "palgebra" {
            return Err(TableError::Parse {
                line: ln,
                msg: format!("expected the header word `palgebra`, found {magic:?}"),
            });
        }
        let (ln, size_line) = next("`size N`")?;
        let size: usize = match size_line.strip_prefix("size") {
            Some(rest) => rest.trim().parse().map_err(|e| TableError::Parse {
                line: ln,
                msg: format!("bad size: {e}"),
            })?,
            None => {
                return Err(TableError::Parse {
                    line: ln,
                    msg: format!("expected `size N`, found {size_line:?}"),
                })
            }
        };
        let (ln, names_line) = next("`names …`")?;
        let names: Vec<String> = match names_line.strip_prefix("names") {
            Some(rest) => rest.split_whitespace().map(str::to_string).collect(),
            None => {
                return Err(TableError::Parse {
                    line: ln,
                    msg: format!("expected `names …`, found {names_line:?}"),
                })
            }
        };
        if names.len() != size {
            return Err(TableError::Parse {
                line: ln,
                msg: format!("expected {size} names, found {}", names.len()),
            });
        }
        let parse_indices = |ln: usize, s: &str| -> Result<Vec<usize>, TableError> {
            s.split_whitespace()
                .map(|t| {
                    t.parse().map_err(|e| TableError::Parse {
                        line: ln,
                        msg: format!("bad index {t:?}: {e}"),
                    })
                })
                .collect()
        };
        let (ln, comp_line) = next("`comp …`")?;
        let comp = match comp_line.strip_prefix("comp") {
            Some(rest) => parse_indices(ln, rest)?,
            None => {
                return Err(TableError::Parse {
                    line: ln,
                    msg: format!("expected `comp …`, found {comp_line:?}"),
                })
            }
        };
        let (ln, dot_header) = next("`dot`")?;
        if dot_header != "dot" {
            return Err(TableError::Parse {
                line: ln,
                msg: format!("expected the row header `dot`, found {dot_header:?}"),
            });
        }
        let mut dot = Vec::with_capacity(size);
        for r in 0..size {
            let (ln, row_line) = next(&format!("product row {r}"))?;
            let row = parse_indices(ln, row_line)?;
            if row.len() != size {
                return Err(TableError::Parse {
                    line: ln,
                    msg: format!("product row {r} has {} entries, expected {size}", row.len()),
                });
            }
            dot.push(row);
        }
        if let Some((ln, extra)) = lines.next() {
            return Err(TableError::Parse {
                line: ln,
                msg: format!("unexpected trailing content {extra:?}"),
            });
        }
        Self::new_unchecked("file", names, comp, dot)
    }

    /// Render in the table file format; [`FiniteAlgebra::parse`] inverts this.
    pub fn save(&self) -> String {
        let n = self.size();
        let mut out = format!(
            "# {}\npalgebra\nsize {n}\nnames {}\ncomp ",
            self.name,
            self.names.join(" ")
        );
        out.push_str(
            &self
                .comp
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push_str("\ndot\n");
        for row in &self.dot {
            out.push_str(
                &row.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            out.push('\n');
        }
        out
    }

    /// Does a relabeling fixing `0` (and hence `1`) carry this table to the
    /// other — i.e. are the two models isomorphic?
    pub fn is_isomorphic(&self, other: &FiniteAlgebra) -> bool {
        let n = self.size();
        if other.size() != n {
            return false;
        }
        // f(0) = 0 is forced, and f(1) = f(0') = f(0)' = 1 follows; search
        // over the remaining index permutations.
        let rest: Vec<usize> = (2..n).collect();
        permutations(&rest).into_iter().any(|perm| {
            let mut f = vec![0; n];
            f[1] = 1;
            for (a, b) in rest.iter().zip(&perm) {
                f[*a] = *b;
            }
            (0..n).all(|i| f[self.comp[i]] == other.comp[f[i]])
                && (0..n).all(|i| (0..n).all(|j| f[self.dot[i][j]] == other.dot[f[i]][f[j]]))
        })
    }

    /// Is the product commutative on the whole carrier?
    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.dot[i][j] == self.dot[j][i]))
    }

    /// Is the product associative on the whole carrier?
    pub fn is_associative(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            (0..n)
                .all(|j| (0..n).all(|k| self.dot[self.dot[i][j]][k] == self.dot[i][self.dot[j][k]]))
        })
    }
}

/// All permutations of the given items (small inputs only).
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// The seven-condition check over raw index tables. `UNSET` cells make a
/// constraint instance undetermined and it is skipped, so the same routine
/// prunes partial tables during enumeration (it never rejects a table that
/// some completion could satisfy).
///
/// Returns the first violation as (condition name, witness indices), scanning
/// conditions in definition order and tuples lexicographically.
fn check_axioms_table(
    comp: &[usize],
    dot: &[Vec<usize>],
) -> Result<(), (&'static str, Vec<usize>)> {
    let n = comp.len();
    let known = |v: usize| v != UNSET;
    // x ≤ y iff x·y = x; three-valued under partial tables.
    let leq = |x: usize, y: usize| -> Option<bool> {
        let v = dot[x][y];
        known(v).then_some(v == x)
    };
    // x ⌣ y iff x·y ≤ x.
    let smile = |x: usize, y: usize| -> Option<bool> {
        let v = dot[x][y];
        if !known(v) {
            return None;
        }
        leq(v, x)
    };
    let zero_status = |v: usize| known(v).then_some(v == 0);

    for x in 0..n {
        if let Some(false) = leq(x, x) {
            return Err(("partial order (reflexivity)", vec![x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y {
                if let (Some(true), Some(true)) = (leq(x, y), leq(y, x)) {
                    return Err(("partial order (antisymmetry)", vec![x, y]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let (Some(true), Some(true), Some(false)) = (leq(x, y), leq(y, z), leq(x, z)) {
                    return Err(("partial order (transitivity)", vec![x, y, z]));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if let (Some(true), Some(false)) = (smile(x, y), smile(y, x)) {
                return Err(("P-commutativity", vec![x, y]));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // (x·y)·z = 0 iff (z·y)·x = 0.
                let fwd = if known(dot[x][y]) {
                    zero_status(dot[dot[x][y]][z])
                } else {
                    None
                };
                let bwd = if known(dot[z][y]) {
                    zero_status(dot[dot[z][y]][x])
                } else {
                    None
                };
                if let (Some(a), Some(b)) = (fwd, bwd) {
                    if a != b {
                        return Err(("P-associativity (a)", vec![x, y, z]));
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if leq(x, y) != Some(true) {
                continue;
            }
            for z in 0..n {
                // x ≤ y ⇒ (x·y)·z = x·(y·z).
                if known(dot[x][y]) && known(dot[y][z]) {
                    let l = dot[dot[x][y]][z];
                    let r = dot[x][dot[y][z]];
                    if known(l) && known(r) && l != r {
                        return Err(("P-associativity (b)", vec![x, y, z]));
                    }
                }
                // x ≤ y ⇒ (z·y)·x = z·(y·x).
                if known(dot[z][y]) && known(dot[y][x]) {
                    let l = dot[dot[z][y]][x];
                    let r = dot[z][dot[y][x]];
                    if known(l) && known(r) && l != r {
                        return Err(("P-associativity (c)", vec![x, y, z]));
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if leq(x, y) != Some(true) {
                continue;
            }
            for z in 0..n {
                // x ≤ y ⇒ x·z ≤ y·z.
                if known(dot[x][z]) && known(dot[y][z]) {
                    if let Some(false) = leq(dot[x][z], dot[y][z]) {
                        return Err(("dot-monotonicity (a)", vec![x, y, z]));
                    }
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            // x·y ≤ y.
            if known(dot[x][y]) {
                if let Some(false) = leq(dot[x][y], y) {
                    return Err(("dot-monotonicity (b)", vec![x, y]));
                }
            }
        }
    }
    for x in 0..n {
        if let Some(false) = zero_status(dot[0][x]) {
            return Err(("Z", vec![x]));
        }
    }
    for x in 0..n {
        if let Some(false) = zero_status(dot[x][comp[x]]) {
            return Err(("Comp", vec![x]));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                // x·y ≤ z and x·y' ≤ z imply x ≤ z.
                let p = if known(dot[x][y]) {
                    leq(dot[x][y], z)
                } else {
                    None
                };
                let q = if known(dot[x][comp[y]]) {
                    leq(dot[x][comp[y]], z)
                } else {
                    None
                };
                if let (Some(true), Some(true), Some(false)) = (p, q, leq(x, z)) {
                    return Err(("O", vec![x, y, z]));
                }
            }
        }
    }
    Ok(())
}

/// The requested enumeration size is outside the supported range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("enumeration supports carrier sizes 2 through 6, got {0}")]
pub struct EnumSizeError(pub usize);

/// All complement involutions on `0..n` with `comp(0) = 1` and no fixed
/// points (a fixed point would force `x·x = x` and `x·x' = 0` to coincide).
fn complement_pairings(n: usize) -> Vec<Vec<usize>> {
    fn pair_up(free: &[usize]) -> Vec<Vec<(usize, usize)>> {
        match free.split_first() {
            None => vec![vec![]],
            Some((&a, rest)) => {
                let mut out = Vec::new();
                for (i, &b) in rest.iter().enumerate() {
                    let mut remaining = rest.to_vec();
                    remaining.remove(i);
                    for mut tail in pair_up(&remaining) {
                        tail.insert(0, (a, b));
                        out.push(tail);
                    }
                }
                out
            }
        }
    }
    let free: Vec<usize> = (2..n).collect();
    if free.len() % 2 != 0 {
        return Vec::new();
    }
    pair_up(&free)
        .into_iter()
        .map(|pairs| {
            let mut comp = vec![UNSET; n];
            comp[0] = 1;
            comp[1] = 0;
            for (a, b) in pairs {
                comp[a] = b;
                comp[b] = a;
            }
            comp
        })
        .collect()
}

/// Product cells not forced by the axioms, in fill order.
fn free_cells(n: usize, comp: &[usize]) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for i in 2..n {
        for j in 2..n {
            if i != j && comp[i] != j {
                cells.push((i, j));
            }
        }
    }
    cells
}

/// Seed a product table with the forced cells: `0·x = x·0 = 0`, `1·x = x·1 = x`
/// (both directions are theorems of the axioms, so pinning them loses no
/// models), the diagonal `x·x = x` from reflexivity, and `x·x' = x'·x = 0`.
fn seeded_table(n: usize, comp: &[usize]) -> Vec<Vec<usize>> {
    let mut dot = vec![vec![UNSET; n]; n];
    for i in 0..n {
        dot[0][i] = 0;
        dot[i][0] = 0;
        dot[1][i] = i;
        dot[i][1] = i;
        dot[i][i] = i;
        dot[i][comp[i]] = 0;
        dot[comp[i]][i] = 0;
    }
    dot
}

fn backtrack(
    comp: &[usize],
    dot: &mut Vec<Vec<usize>>,
    cells: &[(usize, usize)],
    depth: usize,
    out: &mut Vec<(Vec<usize>, Vec<Vec<usize>>)>,
) {
    if check_axioms_table(comp, dot).is_err() {
        return;
    }
    match cells.get(depth) {
        None => out.push((comp.to_vec(), dot.clone())),
        Some(&(i, j)) => {
            for v in 0..comp.len() {
                dot[i][j] = v;
                backtrack(comp, dot, cells, depth + 1, out);
            }
            dot[i][j] = UNSET;
        }
    }
}

/// Enumerate every model of the given carrier size (2 ≤ size ≤ 6), up to the
/// index-pinning conventions (`0` at index 0, `1` at index 1). Elements are
/// named `0, 1, e2, e3, …`. The search backtracks over (complement pairing,
/// undetermined product cells) with the partial axiom check as pruning, and
/// the full check guards each emission. The tree is partitioned across worker
/// threads by the first undetermined cell; results are sorted, so the output
/// is deterministic regardless of worker count.
pub fn enumerate_palgebras(size: usize) -> Result<Vec<FiniteAlgebra>, EnumSizeError> {
    if !(2..=6).contains(&size) {
        return Err(EnumSizeError(size));
    }
    let n = size;
    // Work units: one per (pairing, value of the first free cell).
    let mut units: Vec<(Vec<usize>, Option<usize>)> = Vec::new();
    for comp in complement_pairings(n) {
        if free_cells(n, &comp).is_empty() {
            units.push((comp, None));
        } else {
            for v in 0..n {
                units.push((comp.clone(), Some(v)));
            }
        }
    }
    let mut tables: Vec<(Vec<usize>, Vec<Vec<usize>>)> = units
        .into_par_iter()
        .map(|(comp, first)| {
            let cells = free_cells(n, &comp);
            let mut dot = seeded_table(n, &comp);
            let mut found = Vec::new();
            match first {
                None => backtrack(&comp, &mut dot, &cells, 0, &mut found),
                Some(v) => {
                    let (i, j) = cells[0];
                    dot[i][j] = v;
                    backtrack(&comp, &mut dot, &cells, 1, &mut found);
                }
            }
            found
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    tables.sort();
    tables.dedup();
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            i => format!("e{i}"),
        })
        .collect();
    Ok(tables
        .into_iter()
        .enumerate()
        .map(|(k, (comp, dot))| {
            let a = FiniteAlgebra {
                name: format!("enum:{n}/{k}"),
                names: names.clone(),
                comp,
                dot,
            };
            debug_assert!(a.check_axioms().is_ok());
            a
        })
        .collect())
}

/// Drop tables isomorphic to an earlier one (brute-force relabeling search;
/// small sizes only). Off the main path: raw table counts are the regression
/// numbers, this is for reporting.
pub fn dedupe_isomorphic(algebras: Vec<FiniteAlgebra>) -> Vec<FiniteAlgebra> {
    let mut reps: Vec<FiniteAlgebra> = Vec::new();
    for a in algebras {
        if !reps.iter().any(|r| r.is_isomorphic(&a)) {
            reps.push(a);
        }
    }
    reps
}

/// Slow oracle for the enumerator at sizes ≤ 4: scan *every* table over all
/// complement involutions, with only the rows and columns of `0` and `1`
/// fixed, and keep the ones passing the full check. Exponential in cells —
/// test use only.
pub fn naive_enumerate_small(size: usize) -> Vec<FiniteAlgebra> {
    assert!((2..=4).contains(&size), "oracle supports sizes 2 through 4");
    let n = size;
    let mut out: Vec<(Vec<usize>, Vec<Vec<usize>>)> = Vec::new();
    for comp in complement_pairings(n) {
        // Free cells: everything outside the rows/columns of 0 and 1.
        let cells: Vec<(usize, usize)> = (2..n).flat_map(|i| (2..n).map(move |j| (i, j))).collect();
        let mut dot = vec![vec![UNSET; n]; n];
        for i in 0..n {
            dot[0][i] = 0;
            dot[i][0] = 0;
            dot[1][i] = i;
            dot[i][1] = i;
        }
        let mut counter = vec![0usize; cells.len()];
        loop {
            for (c, &(i, j)) in counter.iter().zip(&cells) {
                dot[i][j] = *c;
            }
            if check_axioms_table(&comp, &dot).is_ok() {
                out.push((comp.clone(), dot.clone()));
            }
            // Odometer increment over all n^cells tables.
            let mut k = 0;
            loop {
                if k == counter.len() {
                    break;
                }
                counter[k] += 1;
                if counter[k] < n {
                    break;
                }
                counter[k] = 0;
                k += 1;
            }
            if counter.iter().all(|&c| c == 0) {
                break;
            }
            if cells.is_empty() {
                break;
            }
        }
    }
    out.sort();
    out.dedup();
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            1 => "1".to_string(),
            i => format!("e{i}"),
        })
        .collect();
    out.into_iter()
        .enumerate()
        .map(|(k, (comp, dot))| FiniteAlgebra {
            name: format!("naive:{n}/{k}"),
            names: names.clone(),
            comp,
            dot,
        })
        .collect()
}

impl PAlgebra for FiniteAlgebra {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn zero(&self) -> Feature {
        Feature::Index(0)
    }

    fn comp(&self, x: &Feature) -> Feature {
        Feature::Index(self.comp[self.idx(x)])
    }

    fn dot(&self, x: &Feature, y: &Feature) -> Feature {
        Feature::Index(self.dot[self.idx(x)][self.idx(y)])
    }

    fn eq(&self, x: &Feature, y: &Feature) -> bool {
        self.idx(x) == self.idx(y)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Feature {
        Feature::Index(rng.gen_range(0..self.size()))
    }

    fn carrier(&self) -> Option<Vec<Feature>> {
        Some((0..self.size()).map(Feature::Index).collect())
    }

    fn glb(&self, x: &Feature, y: &Feature) -> Option<Feature> {
        let (x, y) = (self.idx(x), self.idx(y));
        let lowers: Vec<usize> = (0..self.size())
            .filter(|&z| self.leq_idx(z, x) && self.leq_idx(z, y))
            .collect();
        lowers
            .iter()
            .copied()
            .find(|&g| lowers.iter().all(|&z| self.leq_idx(z, g)))
            .map(Feature::Index)
    }

    fn lub(&self, x: &Feature, y: &Feature) -> Option<Feature> {
        let (x, y) = (self.idx(x), self.idx(y));
        let uppers: Vec<usize> = (0..self.size())
            .filter(|&z| self.leq_idx(x, z) && self.leq_idx(y, z))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&g| uppers.iter().all(|&z| self.leq_idx(g, z)))
            .map(Feature::Index)
    }

    fn is_atom(&self, x: &Feature) -> bool {
        let x = self.idx(x);
        x != 0 && (0..self.size()).all(|z| !self.leq_idx(z, x) || z == 0 || z == x)
    }

    fn pick_atom_below(&self, x: &Feature) -> Option<Feature> {
        let x = self.idx(x);
        (0..self.size())
            .map(Feature::Index)
            .find(|a| self.is_atom(a) && self.leq_idx(self.idx(a), x))
    }

    fn sample_atom_below(&self, x: &Feature, rng: &mut dyn RngCore) -> Option<Feature> {
        let x = self.idx(x);
        let atoms: Vec<usize> = (0..self.size())
            .filter(|&a| self.is_atom(&Feature::Index(a)) && self.leq_idx(a, x))
            .collect();
        if atoms.is_empty() {
            None
        } else {
            Some(Feature::Index(atoms[rng.gen_range(0..atoms.len())]))
        }
    }

    fn describe(&self, x: &Feature) -> String {
        self.names[self.idx(x)].clone()
    }
}

impl FiniteAlgebra {
    fn idx(&self, f: &Feature) -> usize {
        match f {
            Feature::Index(i) => {
                assert!(*i < self.size(), "index {i} out of range for {}", self.name);
                *i
            }
            Feature::Space(_) => {
                panic!("subspace feature passed to the finite model {}", self.name)
            }
        }
    }

    fn leq_idx(&self, x: usize, y: usize) -> bool {
        self.dot[x][y] == x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{atoms_below, one, plus, PAlgebra};

    #[test]
    fn mo_family_passes_the_axiom_check() {
        for k in 0..=4 {
            let a = FiniteAlgebra::mo_algebra(k);
            assert_eq!(a.size(), 2 * k + 2);
            a.check_axioms().unwrap();
        }
    }

    #[test]
    fn mo2_table_shape() {
        let a = FiniteAlgebra::mo_algebra(2);
        assert_eq!(a.element_names(), &["0", "1", "a", "a'", "b", "b'"]);
        let (ia, ib) = (a.index_of("a").unwrap(), a.index_of("b").unwrap());
        // Projecting line a onto line b lands on b, and vice versa.
        assert_eq!(a.dot_index(ia, ib), ib);
        assert_eq!(a.dot_index(ib, ia), ia);
        assert!(!a.is_commutative());
        assert!(FiniteAlgebra::mo_algebra(1).is_commutative());
        assert!(FiniteAlgebra::mo_algebra(0).is_commutative());
    }

    #[test]
    fn mo2_atoms_and_unit() {
        let a = FiniteAlgebra::mo_algebra(2);
        assert_eq!(a.element_names()[1], "1");
        let unit = one(&a);
        assert_eq!(a.describe(&unit), "1");
        let at0 = atoms_below(&a, &a.zero()).unwrap();
        assert!(at0.is_empty());
        let at1: Vec<String> = atoms_below(&a, &unit)
            .unwrap()
            .iter()
            .map(|f| a.describe(f))
            .collect();
        assert_eq!(at1, ["a", "a'", "b", "b'"]);
        // 0 + a = a.
        let ia = Feature::Index(a.index_of("a").unwrap());
        assert!(a.eq(&plus(&a, &a.zero(), &ia), &ia));
    }

    #[test]
    fn hexagon_control_fails_superposition() {
        let h = FiniteAlgebra::hexagon_control();
        let err = h.check_axioms().unwrap_err();
        assert_eq!(err.law, "O");
        assert_eq!(err.witness, ["a'", "b", "b'"]);
    }

    #[test]
    fn corrupting_a_product_cell_is_caught_with_a_named_witness() {
        // a·b := 0 makes a ⌣ b hold while b ⌣ a fails.
        let a = FiniteAlgebra::mo_algebra(2);
        let (ia, ib) = (a.index_of("a").unwrap(), a.index_of("b").unwrap());
        let mut dot: Vec<Vec<usize>> = (0..a.size())
            .map(|i| (0..a.size()).map(|j| a.dot_index(i, j)).collect())
            .collect();
        dot[ia][ib] = 0;
        let broken = FiniteAlgebra::new_unchecked(
            "broken",
            a.element_names().to_vec(),
            (0..a.size()).map(|i| a.comp_index(i)).collect(),
            dot,
        )
        .unwrap();
        let err = broken.check_axioms().unwrap_err();
        assert_eq!(err.law, "P-commutativity");
        assert_eq!(err.witness, ["a", "b"]);

        // a·b := a silently creates the order fact a ≤ b, so compatibility
        // stays symmetric; the break surfaces in the associativity family.
        let mut dot2: Vec<Vec<usize>> = (0..a.size())
            .map(|i| (0..a.size()).map(|j| a.dot_index(i, j)).collect())
            .collect();
        dot2[ia][ib] = ia;
        dot2[ib][ia] = ia;
        let broken2 = FiniteAlgebra::new_unchecked(
            "broken2",
            a.element_names().to_vec(),
            (0..a.size()).map(|i| a.comp_index(i)).collect(),
            dot2,
        )
        .unwrap();
        let err2 = broken2.check_axioms().unwrap_err();
        assert_eq!(err2.law, "P-associativity (a)");
        assert_eq!(err2.witness, ["a", "b", "a'"]);
    }

    #[test]
    fn table_file_round_trip() {
        let a = FiniteAlgebra::mo_algebra(2);
        let reloaded = FiniteAlgebra::parse(&a.save()).unwrap();
        assert!(a.same_table(&reloaded));

        let b2 =
            FiniteAlgebra::parse("palgebra\nsize 2\nnames 0 1\ncomp 1 0\ndot\n0 0\n0 1\n").unwrap();
        assert!(b2.same_table(&FiniteAlgebra::mo_algebra(0)));
    }

    #[test]
    fn parse_rejects_malformed_and_violating_tables() {
        let err = FiniteAlgebra::parse("nonsense\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 1, .. }), "{err}");

        let err = FiniteAlgebra::parse("palgebra\nsize 2\nnames 0 1\ncomp 1 1\ndot\n0 0\n0 1\n")
            .unwrap_err();
        assert!(matches!(err, TableError::Structural(_)), "{err}");

        let err =
            FiniteAlgebra::parse("palgebra\nsize 2\nnames 0 1\ncomp 1 0\ndot\n0 0\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { .. }), "{err}");

        // The hexagon is structurally fine but not a model: parse refuses…
        let text = FiniteAlgebra::hexagon_control().save();
        let err = FiniteAlgebra::parse(&text).unwrap_err();
        assert!(
            matches!(err, TableError::Axiom(AxiomViolation { law: "O", .. })),
            "{err}"
        );
        // …while the unchecked loader carries it for negative controls.
        FiniteAlgebra::parse_unchecked(&text).unwrap();
    }

    #[test]
    fn enumeration_at_small_sizes() {
        assert_eq!(enumerate_palgebras(1).unwrap_err(), EnumSizeError(1));
        assert_eq!(enumerate_palgebras(7).unwrap_err(), EnumSizeError(7));

        let size2 = enumerate_palgebras(2).unwrap();
        assert_eq!(size2.len(), 1);
        assert!(size2[0].same_table(&FiniteAlgebra::mo_algebra(0)));

        // Odd carriers admit no fixed-point-free complement.
        assert!(enumerate_palgebras(3).unwrap().is_empty());
        assert!(enumerate_palgebras(5).unwrap().is_empty());

        let size4 = enumerate_palgebras(4).unwrap();
        assert_eq!(size4.len(), 1);
        assert!(size4[0].is_isomorphic(&FiniteAlgebra::mo_algebra(1)));
        for a in &size4 {
            a.check_axioms().unwrap();
            assert!(a.is_commutative());
            assert!(a.is_associative());
        }
    }

    #[test]
    fn enumeration_matches_the_naive_oracle_up_to_size_4() {
        for size in 2..=4 {
            let fast = enumerate_palgebras(size).unwrap();
            let slow = naive_enumerate_small(size);
            assert_eq!(fast.len(), slow.len(), "size {size}");
            for (f, s) in fast.iter().zip(&slow) {
                assert!(f.same_table(s), "size {size}");
            }
        }
    }

    #[test]
    fn size_6_enumeration_contains_the_mo2_table() {
        // One table per complement pairing of the four line indices, and every
        // one of them is a relabeling of the MO2 model: there is no
        // commutative carrier of size 6 (a commutative model is Boolean, and
        // Boolean carriers have 2^k elements).
        let all = enumerate_palgebras(6).unwrap();
        assert_eq!(all.len(), 3);
        assert_eq!(dedupe_isomorphic(all.clone()).len(), 1);
        let mo2 = FiniteAlgebra::mo_algebra(2);
        assert!(all.iter().all(|a| a.is_isomorphic(&mo2)));
        for a in &all {
            a.check_axioms().unwrap();
            assert!(!a.is_commutative());
        }
    }

    #[test]
    fn minimality_of_the_non_commutative_example() {
        // Every model on fewer than 6 elements is commutative.
        for size in 2..=5 {
            for a in enumerate_palgebras(size).unwrap() {
                assert!(a.is_commutative(), "size {size}");
            }
        }
    }
}
