use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Descent positions (1-indexed) and the number of ascending runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentData {
    pub descents: BTreeSet<usize>,
    pub runs: usize,
}

/// Positions `i` with `p[i] > p[i+1]`, 1-indexed. The empty sequence has no
/// runs.
pub fn descent_set(p: &[u32]) -> DescentData {
    let descents: BTreeSet<usize> = p
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect();
    let runs = if p.is_empty() { 0 } else { descents.len() + 1 };
    DescentData { descents, runs }
}

/// Checks that `p` is a permutation of `1..=p.len()`.
pub fn check_permutation(p: &[u32]) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for &x in p {
        let i = x as usize;
        if i == 0 || i > p.len() || seen[i - 1] {
            return Err(Error::MalformedPermutation(format!(
                "{p:?} is not a permutation of 1..={}",
                p.len()
            )));
        }
        seen[i - 1] = true;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Colored {
    pub value: u32,
    pub color: Color,
}

impl Colored {
    pub fn left(value: u32) -> Self {
        Colored { value, color: Color::Left }
    }

    pub fn right(value: u32) -> Self {
        Colored { value, color: Color::Right }
    }
}

impl fmt::Display for Colored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.color {
            Color::Left => 'L',
            Color::Right => 'R',
        };
        write!(f, "{tag}{}", self.value)
    }
}

impl FromStr for Colored {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedPermutation(format!("bad entry {s:?}, expected L<n> or R<n>"));
        let (color, digits) = match s.as_bytes().first() {
            Some(b'L') => (Color::Left, &s[1..]),
            Some(b'R') => (Color::Right, &s[1..]),
            _ => return Err(bad()),
        };
        let value = digits.parse().map_err(|_| bad())?;
        Ok(Colored { value, color })
    }
}

/// A permutation of `n` left values `1..=n` and `k` right values `1..=k`.
///
/// Optionally carries the two sentinels, `L0` in front and `R(k+1)` at the
/// end; `n` and `k` never count them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicoloredPermutation {
    entries: Vec<Colored>,
    n: usize,
    k: usize,
    sentinels: bool,
}

impl BicoloredPermutation {
    pub fn new(entries: Vec<Colored>) -> Result<Self> {
        let lefts: Vec<u32> = values_of(&entries, Color::Left);
        let rights: Vec<u32> = values_of(&entries, Color::Right);
        let sentinels = lefts.contains(&0);
        let (n, k) = if sentinels {
            if lefts.is_empty() || rights.is_empty() {
                return Err(Error::MalformedPermutation("sentinel L0 without R(k+1)".into()));
            }
            (lefts.len() - 1, rights.len() - 1)
        } else {
            (lefts.len(), rights.len())
        };
        if sentinels {
            let first = entries.first().copied();
            let last = entries.last().copied();
            if first != Some(Colored::left(0)) || last != Some(Colored::right(k as u32 + 1)) {
                return Err(Error::MalformedPermutation(
                    "sentinels must be L0 first and R(k+1) last".into(),
                ));
            }
        }
        let offset = u32::from(sentinels);
        let expect_left: BTreeSet<u32> = (1 - offset..=n as u32).collect();
        let expect_right: BTreeSet<u32> = (1..=k as u32 + offset).collect();
        let got_left: BTreeSet<u32> = lefts.iter().copied().collect();
        let got_right: BTreeSet<u32> = rights.iter().copied().collect();
        if got_left.len() != lefts.len() || got_left != expect_left {
            return Err(Error::MalformedPermutation(format!(
                "left values {lefts:?} are not 1..={n}"
            )));
        }
        if got_right.len() != rights.len() || got_right != expect_right {
            return Err(Error::MalformedPermutation(format!(
                "right values {rights:?} are not 1..={k}"
            )));
        }
        Ok(BicoloredPermutation { entries, n, k, sentinels })
    }

    pub(crate) fn from_parts_unchecked(entries: Vec<Colored>, n: usize, k: usize) -> Self {
        BicoloredPermutation { entries, n, k, sentinels: false }
    }

    pub fn entries(&self) -> &[Colored] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn has_sentinels(&self) -> bool {
        self.sentinels
    }

    /// `L0 · self · R(k+1)`.
    pub fn with_sentinels(&self) -> Self {
        if self.sentinels {
            return self.clone();
        }
        let mut entries = Vec::with_capacity(self.entries.len() + 2);
        entries.push(Colored::left(0));
        entries.extend_from_slice(&self.entries);
        entries.push(Colored::right(self.k as u32 + 1));
        BicoloredPermutation { entries, sentinels: true, ..*self }
    }

    pub fn without_sentinels(&self) -> Self {
        if !self.sentinels {
            return self.clone();
        }
        let entries = self.entries[1..self.entries.len() - 1].to_vec();
        BicoloredPermutation { entries, sentinels: false, ..*self }
    }

    /// Maximal runs of equal color, in order.
    pub fn blocks(&self) -> Vec<(Color, Vec<u32>)> {
        let mut out: Vec<(Color, Vec<u32>)> = Vec::new();
        for e in &self.entries {
            match out.last_mut() {
                Some((c, vals)) if *c == e.color => vals.push(e.value),
                _ => out.push((e.color, vec![e.value])),
            }
        }
        out
    }

    /// Integer encoding `L i -> i`, `R j -> n + j`; orders Left before Right.
    pub fn encoded(&self) -> Vec<u32> {
        self.entries
            .iter()
            .map(|e| match e.color {
                Color::Left => e.value,
                Color::Right => self.n as u32 + e.value,
            })
            .collect()
    }
}

fn values_of(entries: &[Colored], color: Color) -> Vec<u32> {
    entries.iter().filter(|e| e.color == color).map(|e| e.value).collect()
}

impl fmt::Display for BicoloredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for BicoloredPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Colored>>>()?;
        BicoloredPermutation::new(entries)
    }
}

/// Every maximal same-color substring is increasing.
pub fn is_callan(p: &BicoloredPermutation) -> bool {
    p.entries
        .windows(2)
        .all(|w| w[0].color != w[1].color || w[0].value < w[1].value)
}

/// The left and right subsequences, in order of appearance. Sentinels are
/// kept when present.
pub fn restrict(p: &BicoloredPermutation) -> (Vec<u32>, Vec<u32>) {
    (values_of(&p.entries, Color::Left), values_of(&p.entries, Color::Right))
}
