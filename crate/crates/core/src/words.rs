//! Words over vertex alphabets and the alternation relation.
//!
//! Letters are 0-based vertex ids. The text forms used by the CLI are
//! 1-based (see [`Word::parse`] and [`Word::render`]).

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} is outside the alphabet of size {alphabet_size}")]
    LetterOutOfRange { letter: usize, alphabet_size: usize },
    #[error("alternation needs two distinct letters, got {0} twice")]
    SameLetter(usize),
    #[error("vertex {0} does not occur in the word")]
    MissingLetter(usize),
    #[error("word alphabet has {word} letters but the graph has {graph} vertices")]
    AlphabetMismatch { word: usize, graph: usize },
    #[error("alphabet of size {0} exceeds the limit of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("word search over {n} letters with multiplicity cap {k_max} exceeds the enumeration budget")]
    BudgetExceeded { n: usize, k_max: usize },
    #[error("multiplicity cap must be at least 1")]
    ZeroMultiplicityCap,
    #[error("cannot parse word: {0}")]
    Parse(String),
}

/// A finite sequence of letters drawn from `0..alphabet_size`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(letters: Vec<usize>, alphabet_size: usize) -> Result<Self, WordError> {
        if let Some(&letter) = letters.iter().find(|&&l| l >= alphabet_size) {
            return Err(WordError::LetterOutOfRange { letter, alphabet_size });
        }
        Ok(Word { letters, alphabet_size })
    }

    /// Word whose alphabet is exactly large enough for its largest letter.
    pub fn from_letters(letters: Vec<usize>) -> Self {
        let alphabet_size = letters.iter().max().map_or(0, |&m| m + 1);
        Word { letters, alphabet_size }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn occurrences(&self, letter: usize) -> usize {
        self.letters.iter().filter(|&&l| l == letter).count()
    }

    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect(), alphabet_size: self.alphabet_size }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters, alphabet_size: self.alphabet_size.max(other.alphabet_size) }
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), WordError> {
        for l in [i, j] {
            if l >= self.alphabet_size {
                return Err(WordError::LetterOutOfRange { letter: l, alphabet_size: self.alphabet_size });
            }
        }
        if i == j {
            return Err(WordError::SameLetter(i));
        }
        Ok(())
    }

    /// The subsequence of occurrences of `i` and `j`.
    pub fn restrict(&self, i: usize, j: usize) -> Result<Word, WordError> {
        self.check_pair(i, j)?;
        Ok(Word {
            letters: self.letters.iter().copied().filter(|&l| l == i || l == j).collect(),
            alphabet_size: self.alphabet_size,
        })
    }

    /// Whether `i` and `j` alternate. A letter that never occurs alternates
    /// with every other letter.
    pub fn alternate(&self, i: usize, j: usize) -> Result<bool, WordError> {
        let r = self.restrict(i, j)?;
        if !r.letters.contains(&i) || !r.letters.contains(&j) {
            return Ok(true);
        }
        Ok(r.letters.windows(2).all(|w| w[0] != w[1]))
    }

    /// The graph on the alphabet with an edge wherever two letters alternate.
    pub fn graph(&self) -> Result<Graph, WordError> {
        let n = self.alphabet_size;
        if n > MAX_VERTICES {
            return Err(WordError::TooManyVertices(n));
        }
        let mut seen = VertexSet::EMPTY;
        for &l in &self.letters {
            seen.insert(l);
        }
        if let Some(missing) = VertexSet::full(n).difference(seen).first() {
            return Err(WordError::MissingLetter(missing));
        }
        // broken[i] bit j: some factor ii or jj occurs in w_ij.
        // Scanning left to right, a repeat of i breaks every j not seen since
        // the previous i.
        let mut broken = [0u64; MAX_VERTICES];
        let mut since_last = [0u64; MAX_VERTICES];
        let mut occurred = VertexSet::EMPTY;
        for &l in &self.letters {
            if occurred.contains(l) {
                broken[l] |= !since_last[l] & VertexSet::full(n).0 & !(1u64 << l);
            }
            occurred.insert(l);
            for (k, s) in since_last.iter_mut().enumerate().take(n) {
                if k != l {
                    *s |= 1u64 << l;
                }
            }
            since_last[l] = 0;
        }
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && broken[i] >> j & 1 == 0 && broken[j] >> i & 1 == 0 {
                    rows[i] |= 1u64 << j;
                }
            }
        }
        Graph::from_rows(&rows).map_err(|e| match e {
            GraphError::TooManyVertices(k) => WordError::TooManyVertices(k),
            other => unreachable!("alternation rows are symmetric and loop-free: {other}"),
        })
    }

    /// Whether this word represents `g` exactly.
    pub fn represents(&self, g: &Graph) -> Result<bool, WordError> {
        if self.alphabet_size != g.vertex_count() {
            return Err(WordError::AlphabetMismatch { word: self.alphabet_size, graph: g.vertex_count() });
        }
        Ok(self.graph()? == *g)
    }

    /// Parses the 1-based text form: one base-36 digit per letter (`1`-`9`,
    /// then `a`-`z` for 10..35), or comma-separated decimals. The alphabet
    /// is `1..=max letter` unless `alphabet_size` is given.
    pub fn parse(s: &str, alphabet_size: Option<usize>) -> Result<Word, WordError> {
        let s = s.trim();
        let labels: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| WordError::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(36).map(|d| d as usize).ok_or_else(|| WordError::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<_, _>>()?
        };
        if labels.contains(&0) {
            return Err(WordError::Parse("letters are 1-based; 0 is not a letter".into()));
        }
        let letters: Vec<usize> = labels.into_iter().map(|l| l - 1).collect();
        match alphabet_size {
            Some(n) => Word::new(letters, n),
            None => Ok(Word::from_letters(letters)),
        }
    }

    /// 1-based text form; single characters when the alphabet fits in
    /// `1..=35`, comma-separated decimals otherwise.
    pub fn render(&self) -> String {
        if self.alphabet_size <= 35 {
            self.letters.iter().map(|&l| char::from_digit(l as u32 + 1, 36).expect("letter below 36")).collect()
        } else {
            self.letters.iter().map(|l| (l + 1).to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?}, n={})", self.letters, self.alphabet_size)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Shortest word representing `g` in which every letter occurs between 1 and
/// `k_max` times, or `None` when no such word exists.
///
/// Words are tried by increasing length, lexicographically within a length.
/// `None` says nothing about representability with larger multiplicities.
pub fn find_word_bruteforce(g: &Graph, k_max: usize) -> Result<Option<Word>, WordError> {
    let n = g.vertex_count();
    if k_max == 0 {
        return Err(WordError::ZeroMultiplicityCap);
    }
    let within_budget = if k_max >= 3 { n <= 5 } else { n <= 6 };
    if !within_budget {
        return Err(WordError::BudgetExceeded { n, k_max });
    }
    if n == 0 {
        return Ok(Some(Word { letters: vec![], alphabet_size: 0 }));
    }
    for len in n..=n * k_max {
        let mut search = WordSearch::new(g, k_max, len);
        if search.run(0) {
            return Ok(Some(Word { letters: search.word, alphabet_size: n }));
        }
    }
    Ok(None)
}

struct WordSearch<'a> {
    g: &'a Graph,
    k_max: usize,
    len: usize,
    word: Vec<usize>,
    counts: Vec<usize>,
    // since_last[v]: letters placed after the latest occurrence of v.
    since_last: Vec<u64>,
    // broken[v]: letters u such that w_uv already contains a repeated letter.
    broken: Vec<u64>,
}

impl<'a> WordSearch<'a> {
    fn new(g: &'a Graph, k_max: usize, len: usize) -> Self {
        let n = g.vertex_count();
        WordSearch {
            g,
            k_max,
            len,
            word: Vec::with_capacity(len),
            counts: vec![0; n],
            since_last: vec![0; n],
            broken: vec![0; n],
        }
    }

    fn run(&mut self, pos: usize) -> bool {
        let n = self.g.vertex_count();
        if pos == self.len {
            return self.complete();
        }
        let remaining = self.len - pos;
        let missing = self.counts.iter().filter(|&&c| c == 0).count();
        if missing > remaining {
            return false;
        }
        for l in 0..n {
            if self.counts[l] == self.k_max {
                continue;
            }
            // Every still-missing letter must fit after this one.
            let missing_after = missing - usize::from(self.counts[l] == 0);
            if missing_after > remaining - 1 {
                continue;
            }
            let full = VertexSet::full(n).0 & !(1u64 << l);
            let newly_broken = if self.counts[l] > 0 { !self.since_last[l] & full } else { 0 };
            // An edge whose letters stop alternating can never recover.
            if newly_broken & self.g.neighbors(l).0 != 0 {
                continue;
            }
            let saved_since = self.since_last.clone();
            let saved_broken = self.broken[l];
            self.broken[l] |= newly_broken;
            for (k, s) in self.since_last.iter_mut().enumerate() {
                if k != l {
                    *s |= 1u64 << l;
                }
            }
            self.since_last[l] = 0;
            self.counts[l] += 1;
            self.word.push(l);
            if self.run(pos + 1) {
                return true;
            }
            self.word.pop();
            self.counts[l] -= 1;
            self.broken[l] = saved_broken;
            self.since_last = saved_since;
        }
        false
    }

    fn complete(&self) -> bool {
        let n = self.g.vertex_count();
        (0..n).all(|i| {
            let broken =
                self.broken[i] | (0..n).filter(|&j| self.broken[j] >> i & 1 == 1).fold(0, |a, j| a | 1u64 << j);
            // Non-edges must be broken; edges were kept intact during the search.
            let non_edges = VertexSet::full(n).0 & !(1u64 << i) & !self.g.neighbors(i).0;
            non_edges & !broken == 0
        })
    }
}
