//! Words over the four-letter alphabet `{a, ā, b, b̄}`, their validity
//! predicates, the quarter-plane walk correspondence, and exact counting.
//!
//! ASCII surface syntax: `a`, `A`, `b`, `B` stand for `a`, `ā`, `b`, `b̄`.
//! The enumeration order is lexicographic with `a < A < b < B`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

/// One letter of the shuffle alphabet.
///
/// The derived order `AOpen < AClose < BOpen < BClose` is the fixed
/// enumeration order `a < A < b < B`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    /// `a`, an opening parenthesis of the first system (a North step).
    AOpen,
    /// `ā`, a closing parenthesis of the first system (a South step).
    AClose,
    /// `b`, an opening parenthesis of the second system (an East step).
    BOpen,
    /// `b̄`, a closing parenthesis of the second system (a West step).
    BClose,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::AOpen, Letter::AClose, Letter::BOpen, Letter::BClose];

    pub fn from_ascii(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::AOpen),
            'A' => Some(Letter::AClose),
            'b' => Some(Letter::BOpen),
            'B' => Some(Letter::BClose),
            _ => None,
        }
    }

    pub fn to_ascii(self) -> char {
        match self {
            Letter::AOpen => 'a',
            Letter::AClose => 'A',
            Letter::BOpen => 'b',
            Letter::BClose => 'B',
        }
    }

    /// True for `a` and `b`.
    pub fn is_open(self) -> bool {
        matches!(self, Letter::AOpen | Letter::BOpen)
    }

    /// True for `a` and `ā`.
    pub fn is_a_family(self) -> bool {
        matches!(self, Letter::AOpen | Letter::AClose)
    }
}

/// Errors raised by word validation and parsing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordError {
    /// A character outside the expected alphabet, with its position.
    InvalidAlphabet { position: usize, found: char },
    /// Some prefix has more closing than opening letters in one family.
    NotPrefixShuffle { position: usize },
    /// The word is a valid prefix but is not balanced.
    NotParenShuffle,
    /// A walk step leaves the quadrant `x >= 0, y >= 0`.
    WalkLeavesQuadrant { position: usize },
    /// The walk does not return to the origin.
    WalkNotClosed,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordError::InvalidAlphabet { position, found } => {
                write!(f, "invalid letter {found:?} at position {position}")
            }
            WordError::NotPrefixShuffle { position } => {
                write!(f, "prefix balance violated at position {position}")
            }
            WordError::NotParenShuffle => write!(f, "word is not balanced"),
            WordError::WalkLeavesQuadrant { position } => {
                write!(f, "walk leaves the quadrant at step {position}")
            }
            WordError::WalkNotClosed => write!(f, "walk does not end at the origin"),
        }
    }
}

impl core::error::Error for WordError {}

/// A word over the alphabet `{a, ā, b, b̄}`, with no validity constraint.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ShuffleWord(Vec<Letter>);

impl ShuffleWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        ShuffleWord(letters)
    }

    pub fn empty() -> Self {
        ShuffleWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of occurrences of `letter`, the quantity `|w|_x`.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// The subword made of the letters `a, ā`.
    pub fn subword_a(&self) -> ShuffleWord {
        ShuffleWord(self.0.iter().copied().filter(|l| l.is_a_family()).collect())
    }

    /// The subword made of the letters `b, b̄`.
    pub fn subword_b(&self) -> ShuffleWord {
        ShuffleWord(self.0.iter().copied().filter(|l| !l.is_a_family()).collect())
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }
}

impl fmt::Display for ShuffleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_ascii())?;
        }
        Ok(())
    }
}

impl FromStr for ShuffleWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match Letter::from_ascii(c) {
                Some(l) => letters.push(l),
                None => return Err(WordError::InvalidAlphabet { position, found: c }),
            }
        }
        Ok(ShuffleWord(letters))
    }
}

/// How a word sits relative to the prefix-shuffle and parenthesis-shuffle
/// conditions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordClass {
    /// Some prefix has a negative balance in one of the two families.
    NotPrefix,
    /// All prefixes balance, but the whole word does not.
    Prefix,
    /// A parenthesis-shuffle: all prefixes balance and the word is balanced.
    Complete,
}

/// Classifies a word as `NotPrefix`, `Prefix` or `Complete` in a single scan.
pub fn classify(w: &ShuffleWord) -> WordClass {
    let mut a = 0i64;
    let mut b = 0i64;
    for &l in w.letters() {
        match l {
            Letter::AOpen => a += 1,
            Letter::AClose => a -= 1,
            Letter::BOpen => b += 1,
            Letter::BClose => b -= 1,
        }
        if a < 0 || b < 0 {
            return WordClass::NotPrefix;
        }
    }
    if a == 0 && b == 0 {
        WordClass::Complete
    } else {
        WordClass::Prefix
    }
}

/// Is `w` a parenthesis system on the alphabet `{a, ā}`?
///
/// Letters `b, b̄` are rejected with `InvalidAlphabet`; on the two-letter
/// alphabet, the answer is true iff `|w|_a = |w|_ā` and every prefix has
/// `|w'|_a >= |w'|_ā`.
pub fn is_paren_system(w: &ShuffleWord) -> Result<bool, WordError> {
    let mut depth = 0i64;
    for (position, &l) in w.letters().iter().enumerate() {
        match l {
            Letter::AOpen => depth += 1,
            Letter::AClose => depth -= 1,
            other => {
                return Err(WordError::InvalidAlphabet {
                    position,
                    found: other.to_ascii(),
                })
            }
        }
        if depth < 0 {
            return Ok(false);
        }
    }
    Ok(depth == 0)
}

/// A word all of whose prefixes have `|w'|_a >= |w'|_ā` and `|w'|_b >= |w'|_b̄`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PrefixShuffle(ShuffleWord);

impl PrefixShuffle {
    pub fn new(w: ShuffleWord) -> Result<Self, WordError> {
        match first_violation(&w) {
            Some(position) => Err(WordError::NotPrefixShuffle { position }),
            None => Ok(PrefixShuffle(w)),
        }
    }

    pub fn empty() -> Self {
        PrefixShuffle(ShuffleWord::empty())
    }

    pub fn word(&self) -> &ShuffleWord {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.count(letter)
    }

    /// The prefix-shuffle `w` extended by one letter, if still valid.
    pub fn extended(&self, letter: Letter) -> Option<PrefixShuffle> {
        let mut w = self.0.clone();
        w.push(letter);
        PrefixShuffle::new(w).ok()
    }

    /// The prefix of length `n`; prefixes of prefix-shuffles stay valid.
    pub fn prefix(&self, n: usize) -> PrefixShuffle {
        PrefixShuffle(ShuffleWord(self.letters()[..n].to_vec()))
    }

    /// `|w|_a - |w|_ā`, the number of unmatched letters `a`.
    pub fn open_a(&self) -> usize {
        self.count(Letter::AOpen) - self.count(Letter::AClose)
    }

    /// `|w|_b - |w|_b̄`, the number of unmatched letters `b`.
    pub fn open_b(&self) -> usize {
        self.count(Letter::BOpen) - self.count(Letter::BClose)
    }

    /// The parenthesis system `w_a^+`: the `a`-subword completed by
    /// `|w|_a - |w|_ā` closing letters.
    pub fn plus_completion(&self) -> ShuffleWord {
        let mut sub = self.0.subword_a();
        for _ in 0..self.open_a() {
            sub.push(Letter::AClose);
        }
        sub
    }

    /// The word `w^+`: `w` followed by `|w|_a - |w|_ā` closing letters `ā`.
    pub fn full_completion(&self) -> ShuffleWord {
        let mut w = self.0.clone();
        for _ in 0..self.open_a() {
            w.push(Letter::AClose);
        }
        w
    }
}

impl fmt::Display for PrefixShuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for PrefixShuffle {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        PrefixShuffle::new(s.parse()?)
    }
}

fn first_violation(w: &ShuffleWord) -> Option<usize> {
    let mut a = 0i64;
    let mut b = 0i64;
    for (i, &l) in w.letters().iter().enumerate() {
        match l {
            Letter::AOpen => a += 1,
            Letter::AClose => a -= 1,
            Letter::BOpen => b += 1,
            Letter::BClose => b -= 1,
        }
        if a < 0 || b < 0 {
            return Some(i);
        }
    }
    None
}

/// A shuffle of two parenthesis systems: a prefix-shuffle that is balanced
/// in both families. Its size is half its length.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ParenShuffle(PrefixShuffle);

impl ParenShuffle {
    pub fn new(w: ShuffleWord) -> Result<Self, WordError> {
        let p = PrefixShuffle::new(w)?;
        if p.open_a() != 0 || p.open_b() != 0 {
            return Err(WordError::NotParenShuffle);
        }
        Ok(ParenShuffle(p))
    }

    pub fn empty() -> Self {
        ParenShuffle(PrefixShuffle::empty())
    }

    pub fn as_prefix(&self) -> &PrefixShuffle {
        &self.0
    }

    pub fn word(&self) -> &ShuffleWord {
        self.0.word()
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.count(letter)
    }

    /// Half the length of the word.
    pub fn size(&self) -> usize {
        self.0.len() / 2
    }

    /// The walk reading of the word: `a, ā, b, b̄` as North, South, East,
    /// West steps. Always a closed quadrant walk.
    pub fn to_walk(&self) -> LatticeWalk {
        let steps = self
            .letters()
            .iter()
            .map(|&l| match l {
                Letter::AOpen => Step::North,
                Letter::AClose => Step::South,
                Letter::BOpen => Step::East,
                Letter::BClose => Step::West,
            })
            .collect();
        LatticeWalk::new(steps).expect("a parenthesis-shuffle reads as a quadrant walk")
    }

    /// The inverse reading; rejects walks that do not return to the origin.
    pub fn from_walk(walk: &LatticeWalk) -> Result<ParenShuffle, WordError> {
        if !walk.is_closed() {
            return Err(WordError::WalkNotClosed);
        }
        let letters = walk
            .steps()
            .iter()
            .map(|&s| match s {
                Step::North => Letter::AOpen,
                Step::South => Letter::AClose,
                Step::East => Letter::BOpen,
                Step::West => Letter::BClose,
            })
            .collect();
        ParenShuffle::new(ShuffleWord::new(letters))
    }
}

impl fmt::Display for ParenShuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for ParenShuffle {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        ParenShuffle::new(s.parse()?)
    }
}

/// One step of a square-lattice walk.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    North,
    South,
    East,
    West,
}

impl Step {
    pub fn to_ascii(self) -> char {
        match self {
            Step::North => 'N',
            Step::South => 'S',
            Step::East => 'E',
            Step::West => 'W',
        }
    }

    pub fn from_ascii(c: char) -> Option<Step> {
        match c {
            'N' => Some(Step::North),
            'S' => Some(Step::South),
            'E' => Some(Step::East),
            'W' => Some(Step::West),
            _ => None,
        }
    }
}

/// A walk confined in the quadrant `x >= 0, y >= 0`, starting at the origin.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeWalk(Vec<Step>);

impl LatticeWalk {
    /// Validates quadrant confinement; the endpoint may be anywhere.
    pub fn new(steps: Vec<Step>) -> Result<Self, WordError> {
        let mut x = 0i64;
        let mut y = 0i64;
        for (position, &s) in steps.iter().enumerate() {
            match s {
                Step::North => y += 1,
                Step::South => y -= 1,
                Step::East => x += 1,
                Step::West => x -= 1,
            }
            if x < 0 || y < 0 {
                return Err(WordError::WalkLeavesQuadrant { position });
            }
        }
        Ok(LatticeWalk(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Endpoint of the walk.
    pub fn end(&self) -> (i64, i64) {
        let mut x = 0;
        let mut y = 0;
        for &s in &self.0 {
            match s {
                Step::North => y += 1,
                Step::South => y -= 1,
                Step::East => x += 1,
                Step::West => x -= 1,
            }
        }
        (x, y)
    }

    pub fn is_closed(&self) -> bool {
        self.end() == (0, 0)
    }
}

impl fmt::Display for LatticeWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_ascii())?;
        }
        Ok(())
    }
}

impl FromStr for LatticeWalk {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, WordError> {
        let mut steps = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match Step::from_ascii(c) {
                Some(st) => steps.push(st),
                None => return Err(WordError::InvalidAlphabet { position, found: c }),
            }
        }
        LatticeWalk::new(steps)
    }
}

/// Streams all parenthesis-shuffles of size `n` in lexicographic order
/// (`a < A < b < B`), by backtracking with prefix pruning.
pub fn enumerate_paren_shuffles(n: usize) -> ParenShuffleIter {
    ParenShuffleIter {
        target: 2 * n,
        word: Vec::with_capacity(2 * n),
        open_a: 0,
        open_b: 0,
        done: false,
        fresh: true,
    }
}

pub struct ParenShuffleIter {
    target: usize,
    word: Vec<Letter>,
    open_a: usize,
    open_b: usize,
    done: bool,
    fresh: bool,
}

impl ParenShuffleIter {
    /// Can `letter` start a completable suffix from the current state?
    fn feasible(&self, letter: Letter) -> bool {
        let (a, b) = match letter {
            Letter::AOpen => (self.open_a + 1, self.open_b),
            Letter::AClose => {
                if self.open_a == 0 {
                    return false;
                }
                (self.open_a - 1, self.open_b)
            }
            Letter::BOpen => (self.open_a, self.open_b + 1),
            Letter::BClose => {
                if self.open_b == 0 {
                    return false;
                }
                (self.open_a, self.open_b - 1)
            }
        };
        let remaining = self.target - self.word.len() - 1;
        // Unmatched letters must close within the remaining positions.
        remaining >= a + b && (remaining - a - b).is_multiple_of(2)
    }

    fn apply(&mut self, letter: Letter) {
        match letter {
            Letter::AOpen => self.open_a += 1,
            Letter::AClose => self.open_a -= 1,
            Letter::BOpen => self.open_b += 1,
            Letter::BClose => self.open_b -= 1,
        }
        self.word.push(letter);
    }

    fn unapply(&mut self) -> Letter {
        let letter = self.word.pop().expect("backtrack on empty word");
        match letter {
            Letter::AOpen => self.open_a -= 1,
            Letter::AClose => self.open_a += 1,
            Letter::BOpen => self.open_b -= 1,
            Letter::BClose => self.open_b += 1,
        }
        letter
    }

    /// Extends the current word letter by letter, smallest first.
    fn descend(&mut self) {
        while self.word.len() < self.target {
            let next = Letter::ALL
                .into_iter()
                .find(|&l| self.feasible(l))
                .expect("every reachable state is completable");
            self.apply(next);
        }
    }

    /// Backtracks to the deepest position that can advance, then descends.
    fn advance(&mut self) -> bool {
        while let Some(&last) = self.word.last() {
            self.unapply();
            let mut candidates = Letter::ALL.into_iter().skip_while(|&l| l <= last);
            if let Some(next) = candidates.find(|&l| self.feasible(l)) {
                self.apply(next);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for ParenShuffleIter {
    type Item = ParenShuffle;

    fn next(&mut self) -> Option<ParenShuffle> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            self.descend();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(ParenShuffle(PrefixShuffle(ShuffleWord(self.word.clone()))))
    }
}

/// All prefix-shuffles of length exactly `len`, in lexicographic order.
pub fn enumerate_prefix_shuffles(len: usize) -> Vec<PrefixShuffle> {
    let mut out = Vec::new();
    let current = PrefixShuffle::empty();
    fn rec(current: &PrefixShuffle, len: usize, out: &mut Vec<PrefixShuffle>) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for l in Letter::ALL {
            if let Some(next) = current.extended(l) {
                rec(&next, len, out);
            }
        }
    }
    rec(&current, len, &mut out);
    out
}

/// The n-th Catalan number, exactly.
pub fn catalan(n: usize) -> BigUint {
    // Cat(n) = C(2n, n) / (n + 1)
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Binomial coefficient, exactly.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The number of parenthesis-shuffles of size `n`, computed as the shuffle
/// sum `Σ_k C(2n, 2k) Cat(k) Cat(n-k)`.
pub fn count_paren_shuffles(n: usize) -> BigUint {
    let mut total = BigUint::from(0u32);
    for k in 0..=n {
        total += binomial(2 * n, 2 * k) * catalan(k) * catalan(n - k);
    }
    total
}

/// The same number in closed form, `Cat(n) Cat(n+1)`. The two routes agree
/// by the Chu–Vandermonde identity.
pub fn count_paren_shuffles_product(n: usize) -> BigUint {
    catalan(n) * catalan(n + 1)
}
