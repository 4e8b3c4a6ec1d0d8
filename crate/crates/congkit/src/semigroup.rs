//! Finite semigroups as Cayley tables.
//!
//! Element order is creation order; every canonical form downstream
//! (partitions, RREF coordinates) references this fixed order.

use crate::relations::{congruence_violation, Partition};
use crate::{Error, Result};

/// Default upper bound on the element count of constructed semigroups.
pub const DEFAULT_SIZE_BOUND: usize = 12;

/// A finite semigroup: an n×n composition table over element indices.
///
/// `table[i][j]` is the index of the product `s_i · s_j`. Associativity is
/// enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    n: usize,
    table: Vec<Vec<usize>>,
    names: Vec<String>,
    name: String,
}

impl CayleyTable {
    /// Validate and wrap a raw table. Checks entry ranges, associativity,
    /// and name distinctness.
    pub fn new(table: Vec<Vec<usize>>, names: Vec<String>, name: &str) -> Result<Self> {
        Self::bounded(table, names, name, DEFAULT_SIZE_BOUND)
    }

    pub fn bounded(
        table: Vec<Vec<usize>>,
        names: Vec<String>,
        name: &str,
        bound: usize,
    ) -> Result<Self> {
        let n = table.len();
        if n < 1 || n > bound {
            return Err(Error::InvalidSize { n, bound });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::EntryOutOfRange {
                        row: i,
                        col: j,
                        value: v,
                        n,
                    });
                }
            }
        }
        if names.len() != n {
            return Err(Error::Parse(format!(
                "{} names for {n} elements",
                names.len()
            )));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::DuplicateName(a.clone()));
            }
        }
        validate_associativity(&table)?;
        Ok(CayleyTable {
            n,
            table,
            names,
            name: name.to_string(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn product(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Display name of the semigroup (family spec or "custom").
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Serialize to the plain-text table format:
    /// line 1 `n`, line 2 the names, then n rows of zero-based indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n", self.n));
        out.push_str(&self.names.join(" "));
        out.push('\n');
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parse the plain-text table format. `#` starts a comment line.
    pub fn from_text(text: &str) -> Result<Self> {
        Self::from_text_bounded(text, DEFAULT_SIZE_BOUND)
    }

    pub fn from_text_bounded(text: &str, bound: usize) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing element count line".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("bad element count: {e}")))?;
        let names: Vec<String> = lines
            .next()
            .ok_or_else(|| Error::Parse("missing names line".into()))?
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let mut table = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing table row {i}")))?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|c| {
                    c.parse()
                        .map_err(|e| Error::Parse(format!("bad index in row {i}: {e}")))
                })
                .collect::<Result<_>>()?;
            table.push(row);
        }
        Self::bounded(table, names, "custom", bound)
    }
}

/// Check associativity of a raw index table; returns the first violating
/// triple `(i, j, k)` in lexicographic order.
pub fn validate_associativity(table: &[Vec<usize>]) -> Result<()> {
    let n = table.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAssociative { i, j, k });
                }
            }
        }
    }
    Ok(())
}

/// Built-in semigroup families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Meet semilattice of an n-element chain.
    SemilatticeChain(usize),
    /// L×R with (a,b)(a',b') = (a,b').
    RectangularBand(usize, usize),
    /// Cyclic group of order n.
    CyclicGroup(usize),
    /// xy = x.
    LeftZero(usize),
    /// xy = y.
    RightZero(usize),
    /// {e, f} with e² = e, f² = f, ef = fe = e.
    TwoElementSemilattice,
    Custom(Vec<Vec<usize>>, Vec<String>),
}

impl FamilySpec {
    /// Parse a `family:args` string as used by the CLI, e.g. `cyclic:4`,
    /// `rect-band:2,2`, `chain-semilattice:3`, `two-semilattice`.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let (kind, args) = match text.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (text, None),
        };
        let one = |args: Option<&str>| -> Result<usize> {
            args.ok_or_else(|| Error::Parse(format!("`{kind}` needs a size argument")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad size for `{kind}`: {e}")))
        };
        match kind {
            "chain-semilattice" => Ok(FamilySpec::SemilatticeChain(one(args)?)),
            "cyclic" => Ok(FamilySpec::CyclicGroup(one(args)?)),
            "left-zero" => Ok(FamilySpec::LeftZero(one(args)?)),
            "right-zero" => Ok(FamilySpec::RightZero(one(args)?)),
            "two-semilattice" => {
                if args.is_some() {
                    return Err(Error::Parse("two-semilattice takes no argument".into()));
                }
                Ok(FamilySpec::TwoElementSemilattice)
            }
            "rect-band" => {
                let args =
                    args.ok_or_else(|| Error::Parse("rect-band needs `l,r` sizes".into()))?;
                let (l, r) = args
                    .split_once(',')
                    .ok_or_else(|| Error::Parse("rect-band needs `l,r` sizes".into()))?;
                let l = l
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad rect-band size: {e}")))?;
                let r = r
                    .trim()
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad rect-band size: {e}")))?;
                Ok(FamilySpec::RectangularBand(l, r))
            }
            other => Err(Error::Parse(format!("unknown family `{other}`"))),
        }
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilySpec::SemilatticeChain(n) => write!(f, "chain-semilattice:{n}"),
            FamilySpec::RectangularBand(l, r) => write!(f, "rect-band:{l},{r}"),
            FamilySpec::CyclicGroup(n) => write!(f, "cyclic:{n}"),
            FamilySpec::LeftZero(n) => write!(f, "left-zero:{n}"),
            FamilySpec::RightZero(n) => write!(f, "right-zero:{n}"),
            FamilySpec::TwoElementSemilattice => write!(f, "two-semilattice"),
            FamilySpec::Custom(..) => write!(f, "custom"),
        }
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn subscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Letter names e, f, g, ... used for chains and zero semigroups.
fn letter_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| char::from(b'e' + i as u8).to_string())
        .collect()
}

/// Power names 1, a, a², a³, ... used for cyclic groups.
fn power_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "a".to_string(),
            _ => format!("a{}", superscript(k)),
        })
        .collect()
}

/// Construct a built-in family. The result always passes
/// [`validate_associativity`].
pub fn build(spec: FamilySpec) -> Result<CayleyTable> {
    build_bounded(spec, DEFAULT_SIZE_BOUND)
}

pub fn build_bounded(spec: FamilySpec, bound: usize) -> Result<CayleyTable> {
    let name = spec.to_string();
    match spec {
        FamilySpec::SemilatticeChain(n) => {
            check_size(n, bound)?;
            let table = (0..n)
                .map(|i| (0..n).map(|j| i.min(j)).collect())
                .collect();
            CayleyTable::bounded(table, letter_names(n), &name, bound)
        }
        FamilySpec::TwoElementSemilattice => {
            let table = vec![vec![0, 0], vec![0, 1]];
            CayleyTable::bounded(table, letter_names(2), &name, bound)
        }
        FamilySpec::CyclicGroup(n) => {
            check_size(n, bound)?;
            let table = (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect();
            CayleyTable::bounded(table, power_names(n), &name, bound)
        }
        FamilySpec::LeftZero(n) => {
            check_size(n, bound)?;
            let table = (0..n).map(|i| vec![i; n]).collect();
            CayleyTable::bounded(table, letter_names(n), &name, bound)
        }
        FamilySpec::RightZero(n) => {
            check_size(n, bound)?;
            let table = (0..n).map(|_| (0..n).collect()).collect();
            CayleyTable::bounded(table, letter_names(n), &name, bound)
        }
        FamilySpec::RectangularBand(l, r) => {
            check_size(l, bound)?;
            check_size(r, bound)?;
            check_size(l * r, bound)?;
            // (i,j) has index i*r + j; (a_i,b_j)(a_k,b_m) = (a_i,b_m).
            let n = l * r;
            let table = (0..n)
                .map(|x| (0..n).map(|y| (x / r) * r + y % r).collect())
                .collect();
            let names = (0..l)
                .flat_map(|i| {
                    (0..r).map(move |j| {
                        format!("(a{},b{})", subscript(i + 1), subscript(j + 1))
                    })
                })
                .collect();
            CayleyTable::bounded(table, names, &name, bound)
        }
        FamilySpec::Custom(table, names) => CayleyTable::bounded(table, names, &name, bound),
    }
}

fn check_size(n: usize, bound: usize) -> Result<()> {
    if n < 1 || n > bound {
        return Err(Error::InvalidSize { n, bound });
    }
    Ok(())
}

/// Quotient semigroup S/α for a congruence α.
///
/// Elements are the α-classes, named `{` + comma-joined member names (in
/// element order) + `}`. Products are taken on class representatives; the
/// congruence property makes them well defined.
pub fn quotient(s: &CayleyTable, alpha: &Partition) -> Result<CayleyTable> {
    if alpha.carrier() != s.n() {
        return Err(Error::CarrierMismatch {
            left: alpha.carrier(),
            right: s.n(),
        });
    }
    if congruence_violation(s, alpha)?.is_some() {
        return Err(Error::NotACongruence);
    }
    let classes = alpha.classes();
    let k = classes.len();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let table: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| alpha.class_of()[s.product(reps[i], reps[j])])
                .collect()
        })
        .collect();
    let names = classes
        .iter()
        .map(|cls| {
            let members: Vec<&str> = cls.iter().map(|&i| s.names()[i].as_str()).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    CayleyTable::bounded(table, names, &format!("{}/{}", s.name(), k), s.n())
}
