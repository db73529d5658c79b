//! Substitution morphisms over small finite alphabets.

use std::fmt;

use crate::error::Error;
use crate::expansion::expand_u64;
use crate::report::{ReportBuilder, VerificationReport};
use crate::sequences::{lucas, lucas_u64};
use crate::theorems::{t_plus_code_from, TCode, TPlusCode};

/// A letter, stored as its position in the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub u8);

pub type Word = Vec<Letter>;

/// A morphism given by one nonempty image word per letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    names: Vec<String>,
    rules: Vec<Word>,
}

impl Morphism {
    pub fn new(names: Vec<String>, rules: Vec<Word>) -> Result<Self, Error> {
        if names.is_empty() || names.len() > 256 {
            return Err(Error::InvalidMorphism(
                "alphabet must have 1 to 256 letters".into(),
            ));
        }
        if names.len() != rules.len() {
            return Err(Error::InvalidMorphism(
                "one rule per letter is required".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidMorphism(format!("bad letter name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidMorphism(format!("duplicate letter {name}")));
            }
        }
        for (name, rule) in names.iter().zip(&rules) {
            if rule.is_empty() {
                return Err(Error::InvalidMorphism(format!("empty image for {name}")));
            }
            if let Some(l) = rule.iter().find(|l| l.0 as usize >= names.len()) {
                return Err(Error::InvalidMorphism(format!(
                    "image of {name} uses letter #{}",
                    l.0
                )));
            }
        }
        Ok(Morphism { names, rules })
    }

    /// Builds a morphism from `(letter, image)` pairs, parsing each image
    /// with [`Morphism::parse_word`].
    pub fn from_rules(rules: &[(&str, &str)]) -> Result<Self, Error> {
        let names: Vec<String> = rules.iter().map(|(n, _)| n.to_string()).collect();
        let placeholder = Morphism {
            names: names.clone(),
            rules: vec![vec![Letter(0)]; names.len()],
        };
        let images = rules
            .iter()
            .map(|(_, img)| placeholder.parse_word(img))
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::new(names, images)
    }

    pub fn alphabet_len(&self) -> usize {
        self.names.len()
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u8))
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.0 as usize]
    }

    pub fn rule(&self, letter: Letter) -> &[Letter] {
        &self.rules[letter.0 as usize]
    }

    /// Parses a word: whitespace-separated names, or, without whitespace,
    /// the longest matching name at each position.
    pub fn parse_word(&self, s: &str) -> Result<Word, Error> {
        let unknown = |letter: &str, position| Error::LetterOutsideAlphabet {
            letter: letter.to_string(),
            position,
        };
        if s.chars().any(char::is_whitespace) {
            return s
                .split_whitespace()
                .enumerate()
                .map(|(i, tok)| self.letter(tok).ok_or_else(|| unknown(tok, i)))
                .collect();
        }
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len());
            match best {
                Some((i, n)) => {
                    out.push(Letter(i as u8));
                    rest = &rest[n.len()..];
                }
                None => {
                    let c = rest.chars().next().unwrap();
                    return Err(unknown(&c.to_string(), out.len()));
                }
            }
        }
        Ok(out)
    }

    /// Renders a word, separating letters by spaces unless every letter name
    /// is a single character.
    pub fn format_word(&self, w: &[Letter]) -> String {
        let sep = if self.names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else {
            " "
        };
        w.iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    fn check_word(&self, w: &[Letter]) -> Result<(), Error> {
        match w.iter().position(|l| l.0 as usize >= self.names.len()) {
            Some(position) => Err(Error::LetterOutsideAlphabet {
                letter: format!("#{}", w[position].0),
                position,
            }),
            None => Ok(()),
        }
    }

    pub fn apply(&self, w: &[Letter]) -> Result<Word, Error> {
        self.check_word(w)?;
        Ok(w.iter()
            .flat_map(|&l| self.rule(l).iter().copied())
            .collect())
    }

    /// `m^n(w)`; `n = 0` returns `w` unchanged.
    pub fn iterate(&self, w: &[Letter], n: usize) -> Result<Word, Error> {
        self.check_word(w)?;
        let mut cur = w.to_vec();
        for _ in 0..n {
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }

    /// Lazy stream of the one-sided fixed point starting with `seed`.
    pub fn fixed_point(&self, seed: Letter) -> Result<FixedPoint<'_>, Error> {
        self.check_word(&[seed])?;
        let image = self.rule(seed);
        if image[0] != seed || image.len() < 2 {
            return Err(Error::NotProlongable(self.name(seed).to_string()));
        }
        Ok(FixedPoint {
            morphism: self,
            buf: image.to_vec(),
            expanded: 1,
            emitted: 0,
        })
    }

    pub fn fixed_point_prefix(&self, seed: Letter, length: usize) -> Result<Word, Error> {
        Ok(self.fixed_point(seed)?.take(length).collect())
    }

    /// 1-based positions `i ≤ limit` at which `prefix ++ fixed point` has
    /// the letter `target`.
    pub fn letter_positions(
        &self,
        seed: Letter,
        target: Letter,
        limit: usize,
        prefix: &[Letter],
    ) -> Result<Vec<usize>, Error> {
        self.check_word(prefix)?;
        let stream = prefix.iter().copied().chain(self.fixed_point(seed)?);
        Ok(stream
            .take(limit)
            .enumerate()
            .filter(|(_, l)| *l == target)
            .map(|(i, _)| i + 1)
            .collect())
    }
}

/// Letters of a fixed point, produced on demand.
///
/// The buffer holds the letters generated so far; since the fixed point is
/// its own image, appending the image of the next unexpanded letter extends
/// it without ever re-applying the morphism from the start.
pub struct FixedPoint<'a> {
    morphism: &'a Morphism,
    buf: Vec<Letter>,
    expanded: usize,
    emitted: usize,
}

impl Iterator for FixedPoint<'_> {
    type Item = Letter;

    fn next(&mut self) -> Option<Letter> {
        if self.emitted == self.buf.len() {
            let l = self.buf[self.expanded];
            self.expanded += 1;
            self.buf.extend_from_slice(self.morphism.rule(l));
        }
        let l = self.buf[self.emitted];
        self.emitted += 1;
        Some(l)
    }
}

/// The Fibonacci morphism `0 → 01, 1 → 0`.
pub fn sigma() -> Morphism {
    Morphism::from_rules(&[("0", "01"), ("1", "0")]).expect("valid")
}

/// `A → AB, B → C, C → D, D → ABC`.
pub fn gamma() -> Morphism {
    Morphism::from_rules(&[("A", "AB"), ("B", "C"), ("C", "D"), ("D", "ABC")]).expect("valid")
}

pub(crate) const GAMMA_PLUS_NAMES: [&str; 8] = ["A0", "A1", "B0", "B1", "C0", "C1", "D0", "D1"];

fn t_plus_word(from: u64, to: u64, k: i64) -> Result<Word, Error> {
    (from..=to)
        .map(|n| Ok(t_plus_code_from(&expand_u64(n)?, k).letter()))
        .collect()
}

/// The 8-letter morphism whose images are the `T₊` words on the intervals
/// `[2, L_{k+2}+1]`, `[L_{k+2}+2, L_{k+3}+1]`, `[L_{k+3}+2, L_{k+4}+1]` and
/// `[L_{k+4}+2, L_{k+5}+1]`, where `T₊(N)` pairs `T(N)` with `d_k(N)`.
///
/// `X₀` and `X₁` share the image of `X`.
pub fn gamma_plus(k: u32) -> Result<Morphism, Error> {
    if k < 1 {
        return Err(Error::OutOfRange("gamma_plus needs k >= 1".into()));
    }
    let l =
        |i: u32| lucas_u64(i).ok_or_else(|| Error::OutOfRange(format!("L_{i} exceeds 64 bits")));
    let bounds = [
        (2, l(k + 2)? + 1),
        (l(k + 2)? + 2, l(k + 3)? + 1),
        (l(k + 3)? + 2, l(k + 4)? + 1),
        (l(k + 4)? + 2, l(k + 5)? + 1),
    ];
    let mut rules = Vec::with_capacity(8);
    for (from, to) in bounds {
        let w = t_plus_word(from, to, k as i64)?;
        rules.push(w.clone());
        rules.push(w);
    }
    Morphism::new(
        GAMMA_PLUS_NAMES.iter().map(|s| s.to_string()).collect(),
        rules,
    )
}

/// Maps a word over the `γ₊` alphabet to the `γ` alphabet by dropping the
/// digit subscript.
pub fn erase_subscripts(w: &[Letter]) -> Word {
    w.iter().map(|l| Letter(l.0 / 2)).collect()
}

impl TPlusCode {
    pub fn letter(&self) -> Letter {
        Letter(self.base as u8 * 2 + self.j)
    }
}

impl TCode {
    pub fn letter(self) -> Letter {
        Letter(self as u8)
    }
}

/// Lengths `|γⁿ(X)|` against Lucas numbers and the word identities
/// `γⁿ(A) = γⁿ(C) = γⁿ⁺¹(B)` for `n` in `[2, n_max]`.
pub fn check_lemma_31(n_max: usize) -> Result<VerificationReport, Error> {
    let g = gamma();
    let [a, b, c, d] = [0u8, 1, 2, 3].map(Letter);
    let mut report = ReportBuilder::new("l31").param("n_max", n_max);
    let (mut ga, mut gb, mut gc, mut gd) = (vec![a], vec![b], vec![c], vec![d]);
    for n in 1..=n_max {
        ga = g.apply(&ga)?;
        gb = g.apply(&gb)?;
        gc = g.apply(&gc)?;
        gd = g.apply(&gd)?;
        if n < 2 {
            continue;
        }
        let n32 = n as u32;
        for (name, word, idx) in [
            ("A", &ga, n32),
            ("B", &gb, n32 - 1),
            ("C", &gc, n32),
            ("D", &gd, n32 + 1),
        ] {
            let want = lucas(idx);
            report.check(
                want == word.len().into(),
                n as i64,
                || format!("|γ^{n}({name})| = L_{idx} = {want}"),
                || word.len().to_string(),
            );
        }
        report.check(
            ga == gc,
            n as i64,
            || "γⁿ(A) = γⁿ(C)".into(),
            || g.format_word(&gc),
        );
        let gb_next = g.apply(&gb)?;
        report.check(
            ga == gb_next,
            n as i64,
            || "γⁿ(A) = γⁿ⁺¹(B)".into(),
            || g.format_word(&gb_next),
        );
    }
    Ok(report.finish())
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}
