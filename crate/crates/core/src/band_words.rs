//! Band-generator braid words.
//!
//! A letter `a(i,j)` is a band joining strands `i < j` that passes in front of
//! every strand strictly between them. As a braid it is
//! `(σ_i ⋯ σ_{j-2}) σ_{j-1} (σ_i ⋯ σ_{j-2})^-1`, so `a(i,i+1) = σ_i`.
//!
//! Letter order is height order: the first letter is the bottom band of the
//! fence diagram and the first factor of the braid. Strands and letter
//! positions are 1-based throughout the crate.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandLetter {
    lower: usize,
    upper: usize,
    sign: Sign,
}

impl BandLetter {
    pub fn new(lower: usize, upper: usize, sign: Sign) -> Result<Self> {
        if lower < 1 || lower >= upper {
            return Err(Error::IndexViolation {
                lower,
                upper,
                strands: 0,
            });
        }
        Ok(BandLetter { lower, upper, sign })
    }

    pub fn positive(lower: usize, upper: usize) -> Result<Self> {
        Self::new(lower, upper, Sign::Positive)
    }

    pub fn negative(lower: usize, upper: usize) -> Result<Self> {
        Self::new(lower, upper, Sign::Negative)
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_positive(&self) -> bool {
        self.sign.is_positive()
    }

    pub fn touches(&self, strand: usize) -> bool {
        self.lower == strand || self.upper == strand
    }

    /// The other endpoint of the band, if `strand` is one of its endpoints.
    pub fn opposite(&self, strand: usize) -> Option<usize> {
        if strand == self.lower {
            Some(self.upper)
        } else if strand == self.upper {
            Some(self.lower)
        } else {
            None
        }
    }

    /// Same band with both endpoints moved by `f`. `f` must stay monotone on the pair.
    pub(crate) fn remapped(&self, f: impl Fn(usize) -> usize) -> BandLetter {
        let (lower, upper) = (f(self.lower), f(self.upper));
        debug_assert!(lower < upper);
        BandLetter {
            lower,
            upper,
            sign: self.sign,
        }
    }

    pub fn sign_reversed(&self) -> BandLetter {
        BandLetter {
            sign: -self.sign,
            ..*self
        }
    }
}

impl fmt::Display for BandLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.lower, self.upper)?;
        if self.sign == Sign::Negative {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BandWord {
    strands: usize,
    letters: Vec<BandLetter>,
}

impl BandWord {
    pub fn new(strands: usize, letters: Vec<BandLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::PreconditionViolated(
                "a band word needs at least one strand".into(),
            ));
        }
        if let Some(bad) = letters.iter().find(|l| l.upper > strands) {
            return Err(Error::IndexViolation {
                lower: bad.lower,
                upper: bad.upper,
                strands,
            });
        }
        Ok(BandWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter at a 1-based position.
    pub fn letter(&self, position: usize) -> Option<&BandLetter> {
        position.checked_sub(1).and_then(|i| self.letters.get(i))
    }

    pub fn is_strongly_quasipositive(&self) -> bool {
        self.letters.iter().all(BandLetter::is_positive)
    }

    /// 1-based positions of the negative letters, in word order.
    pub fn negative_positions(&self) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_positive())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Every sign flipped. This is the mirror image only when all bands join
    /// adjacent strands: a reversed band still passes in front of the strands
    /// between its ends.
    pub fn sign_reversed(&self) -> BandWord {
        BandWord {
            strands: self.strands,
            letters: self.letters.iter().map(BandLetter::sign_reversed).collect(),
        }
    }

    /// Number of bands incident to each strand, indexed by strand (index 0 unused).
    pub fn valences(&self) -> Vec<usize> {
        let mut valence = vec![0; self.strands + 1];
        for l in &self.letters {
            valence[l.lower] += 1;
            valence[l.upper] += 1;
        }
        valence
    }

    /// Final position of the strand starting at each position, following the
    /// transpositions `(lower upper)` in word order. Index 0 unused.
    pub fn permutation(&self) -> Vec<usize> {
        let mut image: Vec<usize> = (0..=self.strands).collect();
        for (s, slot) in image.iter_mut().enumerate().skip(1) {
            let mut pos = s;
            for l in &self.letters {
                if let Some(other) = l.opposite(pos) {
                    pos = other;
                }
            }
            *slot = pos;
        }
        image
    }

    pub fn closure_summary(&self) -> ClosureSummary {
        ClosureSummary::from_permutation(&self.permutation())
    }

    pub fn artin_expand(&self) -> ArtinWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            letters.extend(expand_letter(l));
        }
        ArtinWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn render(&self) -> String {
        let body = self
            .letters
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        format!("strands: {}\n{}", self.strands, body)
    }

    /// Word text without the `strands:` header.
    pub fn letters_text(&self) -> String {
        self.letters
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for BandWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("BandWord", 2)?;
        s.serialize_field("strands", &self.strands)?;
        s.serialize_field("word", &self.letters_text())?;
        s.end()
    }
}

impl FromStr for BandWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_band_word(s)
    }
}

fn expand_letter(l: &BandLetter) -> Vec<ArtinLetter> {
    let (i, j) = (l.lower, l.upper);
    let mut out = Vec::with_capacity(2 * (j - i) - 1);
    out.extend((i..j - 1).map(|g| ArtinLetter::new(g, Sign::Positive)));
    out.push(ArtinLetter::new(j - 1, l.sign));
    out.extend(
        (i..j - 1)
            .rev()
            .map(|g| ArtinLetter::new(g, Sign::Negative)),
    );
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArtinLetter {
    pub generator: usize,
    pub sign: Sign,
}

impl ArtinLetter {
    pub fn new(generator: usize, sign: Sign) -> Self {
        ArtinLetter { generator, sign }
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Positive => write!(f, "s{}", self.generator),
            Sign::Negative => write!(f, "s{}^-1", self.generator),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    strands: usize,
    letters: Vec<ArtinLetter>,
}

impl ArtinWord {
    pub fn new(strands: usize, letters: Vec<ArtinLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::PreconditionViolated(
                "an Artin word needs at least one strand".into(),
            ));
        }
        if let Some(bad) = letters
            .iter()
            .find(|l| l.generator == 0 || l.generator >= strands)
        {
            return Err(Error::PreconditionViolated(format!(
                "generator s{} out of range on {} strands",
                bad.generator, strands
            )));
        }
        Ok(ArtinWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same convention as [`BandWord::permutation`].
    pub fn permutation(&self) -> Vec<usize> {
        // occupant[p] = starting position of the strand currently at p
        let mut occupant: Vec<usize> = (0..=self.strands).collect();
        for l in &self.letters {
            occupant.swap(l.generator, l.generator + 1);
        }
        let mut image = vec![0; self.strands + 1];
        for (p, &s) in occupant.iter().enumerate().skip(1) {
            image[s] = p;
        }
        image
    }

    /// Cancels adjacent inverse pairs.
    pub fn free_reduce(&self) -> ArtinWord {
        let mut out: Vec<ArtinLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(prev) if prev.generator == l.generator && prev.sign != l.sign => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        ArtinWord {
            strands: self.strands,
            letters: out,
        }
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "strands: {}", self.strands)?;
        let body = self
            .letters
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        f.write_str(&body)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureSummary {
    pub components: usize,
    /// Component label (1-based) of each strand; index 0 unused.
    pub strand_partition: Vec<usize>,
}

impl ClosureSummary {
    /// Labels cycles of `image` in order of their smallest strand.
    pub fn from_permutation(image: &[usize]) -> Self {
        let n = image.len().saturating_sub(1);
        let mut label = vec![0; n + 1];
        let mut components = 0;
        for s in 1..=n {
            if label[s] != 0 {
                continue;
            }
            components += 1;
            let mut x = s;
            while label[x] == 0 {
                label[x] = components;
                x = image[x];
            }
        }
        ClosureSummary {
            components,
            strand_partition: label,
        }
    }

    pub fn component_of(&self, strand: usize) -> usize {
        self.strand_partition[strand]
    }

    pub fn strands_of(&self, component: usize) -> Vec<usize> {
        (1..self.strand_partition.len())
            .filter(|&s| self.strand_partition[s] == component)
            .collect()
    }
}

pub fn parse_band_word(text: &str) -> Result<BandWord> {
    Parser::new(text).file()
}

pub fn render_band_word(word: &BandWord) -> String {
    word.render()
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace and `#` comment lines. Returns whether a newline was crossed.
    fn skip_trivia(&mut self) -> bool {
        let mut newline = false;
        while let Some(&c) = self.chars.peek() {
            if c == '#' && self.column == 1 {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
                newline = true;
            } else if c.is_whitespace() {
                newline |= c == '\n';
                self.bump();
            } else {
                break;
            }
        }
        newline
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        for expected in s.chars() {
            match self.chars.peek() {
                Some(&c) if c == expected => {
                    self.bump();
                }
                Some(&c) => return Err(self.error(format!("expected `{s}`, found `{c}`"))),
                None => return Err(self.error(format!("expected `{s}`, found end of input"))),
            }
        }
        Ok(())
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_trivia();
        let mut digits = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        let value: usize = digits
            .parse()
            .map_err(|_| self.error(format!("integer `{digits}` is too large")))?;
        if value == 0 {
            return Err(self.error("integers must be at least 1"));
        }
        Ok(value)
    }

    fn file(mut self) -> Result<BandWord> {
        self.skip_trivia();
        self.expect_str("strands:")?;
        let strands = self.int()?;
        // the header must end its line
        while let Some(&c) = self.chars.peek() {
            if c == '\n' || !c.is_whitespace() {
                break;
            }
            self.bump();
        }
        match self.chars.peek() {
            None | Some('\n') => {}
            Some(&c) => {
                return Err(self.error(format!("expected newline after header, found `{c}`")))
            }
        }

        let mut letters = Vec::new();
        loop {
            self.skip_trivia();
            if self.chars.peek().is_none() {
                break;
            }
            self.expect_str("a")?;
            self.skip_trivia();
            self.expect_str("(")?;
            let lower = self.int()?;
            self.skip_trivia();
            self.expect_str(",")?;
            let upper = self.int()?;
            self.skip_trivia();
            self.expect_str(")")?;
            let sign = if self.chars.peek() == Some(&'^') {
                self.expect_str("^-1")?;
                Sign::Negative
            } else {
                Sign::Positive
            };
            if lower >= upper || upper > strands {
                return Err(Error::IndexViolation {
                    lower,
                    upper,
                    strands,
                });
            }
            letters.push(BandLetter { lower, upper, sign });
        }
        BandWord::new(strands, letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn word(text: &str) -> BandWord {
        parse_band_word(text).unwrap()
    }

    const TREFOIL_ANNULUS: &str = "strands: 6\na(2,6) a(1,4) a(2,5) a(4,6) a(3,5) a(1,3)";

    #[test]
    fn parses_the_trefoil_annulus() {
        let w = word(TREFOIL_ANNULUS);
        assert_eq!(w.strands(), 6);
        assert_eq!(w.len(), 6);
        assert!(w.is_strongly_quasipositive());
        assert_eq!(w.letters()[0], BandLetter::positive(2, 6).unwrap());
        assert_eq!(w.letters()[5], BandLetter::positive(1, 3).unwrap());
    }

    #[test]
    fn parses_empty_and_negative_words() {
        let w = word("strands: 1\n");
        assert_eq!(w.strands(), 1);
        assert!(w.is_empty());

        let w = word("strands: 3\na(1,3)^-1");
        assert_eq!(w.letters(), &[BandLetter::negative(1, 3).unwrap()]);
    }

    #[test]
    fn parser_tolerates_comments_and_spacing() {
        let w = word("# header comment\nstrands:   4\n# body\n a( 1 , 3 )^-1\n\na(2,4)   a(1,2)\n");
        assert_eq!(w.len(), 3);
        assert_eq!(w.letters()[0].sign(), Sign::Negative);
        assert_eq!(w.letters()[2], BandLetter::positive(1, 2).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_band_word("strands: 3\na(3,2)"),
            Err(Error::IndexViolation {
                lower: 3,
                upper: 2,
                ..
            })
        ));
        assert!(matches!(
            parse_band_word("strands: 3\na(1,4)"),
            Err(Error::IndexViolation {
                upper: 4,
                strands: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_band_word("strands: 3\na(1,2) b(1,2)"),
            Err(Error::Syntax {
                line: 2,
                column: 8,
                ..
            })
        ));
        assert!(matches!(
            parse_band_word("strands: 0\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_band_word("strands: 3 a(1,2)"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_band_word("strand: 3\n"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_band_word("strands: 3\na(1,2)^-2"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn renders_canonically() {
        let l = BandLetter::positive(1, 2).unwrap();
        assert_eq!(
            BandWord::new(2, vec![l; 3]).unwrap().render(),
            "strands: 2\na(1,2) a(1,2) a(1,2)"
        );
        assert_eq!(BandWord::empty(1).unwrap().render(), "strands: 1\n");
        let w = BandWord::new(3, vec![BandLetter::negative(1, 3).unwrap()]).unwrap();
        assert_eq!(w.render(), "strands: 3\na(1,3)^-1");
    }

    #[test]
    fn artin_expansion_of_single_letters() {
        let e = word("strands: 2\na(1,2)").artin_expand();
        assert_eq!(e.letters(), &[ArtinLetter::new(1, Sign::Positive)]);

        let e = word("strands: 3\na(1,3)").artin_expand();
        assert_eq!(
            e.letters(),
            &[
                ArtinLetter::new(1, Sign::Positive),
                ArtinLetter::new(2, Sign::Positive),
                ArtinLetter::new(1, Sign::Negative),
            ]
        );

        let e = word("strands: 6\na(2,5)^-1").artin_expand();
        let expected = [
            ArtinLetter::new(2, Sign::Positive),
            ArtinLetter::new(3, Sign::Positive),
            ArtinLetter::new(4, Sign::Negative),
            ArtinLetter::new(3, Sign::Negative),
            ArtinLetter::new(2, Sign::Negative),
        ];
        assert_eq!(e.letters(), &expected);
        assert_eq!(e.free_reduce().letters(), &expected);
        // transposition (2 5)
        assert_eq!(e.permutation(), vec![0, 1, 5, 3, 4, 2, 6]);
    }

    #[test]
    fn closure_components() {
        assert_eq!(
            word("strands: 2\na(1,2) a(1,2) a(1,2)")
                .closure_summary()
                .components,
            1
        );
        let empty = word("strands: 3\n").closure_summary();
        assert_eq!(empty.components, 3);
        assert_eq!(empty.strand_partition, vec![0, 1, 2, 3]);

        let annulus = word(TREFOIL_ANNULUS).closure_summary();
        assert_eq!(annulus.components, 2);
        // track each strand through the six transpositions directly
        let mut image = vec![0; 7];
        for s in 1..=6 {
            let mut p = s;
            for (a, b) in [(2, 6), (1, 4), (2, 5), (4, 6), (3, 5), (1, 3)] {
                if p == a {
                    p = b
                } else if p == b {
                    p = a
                }
            }
            image[s] = p;
        }
        assert_eq!(word(TREFOIL_ANNULUS).permutation(), image);
    }

    #[test]
    fn negative_positions_scan() {
        let w = word("strands: 3\na(1,2)^-1 a(1,3)^-1 a(1,2) a(1,3)");
        assert_eq!(w.negative_positions(), vec![1, 2]);
        assert!(word(TREFOIL_ANNULUS).negative_positions().is_empty());
        let w = word("strands: 3\na(1,2) a(2,3)^-1 a(1,2) a(2,3)^-1");
        assert_eq!(w.negative_positions(), vec![2, 4]);
        assert!(!w.is_strongly_quasipositive());
        assert!(word("strands: 1\n").is_strongly_quasipositive());
        assert!(!word("strands: 2\na(1,2)^-1").is_strongly_quasipositive());
    }
}
