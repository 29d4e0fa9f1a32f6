use crate::error::{Error, Result};

/// A normal-form word: sorted list of (generator index, exponent) pairs
/// with indices 0-based, exponents in [1, p).
pub type Word = Vec<(usize, u16)>;

/// A power-commutator presentation of a finite p-group on generators
/// g1..gn: one relation gi^p per generator and one relation gj^{gi}
/// (meaning gi^-1 gj gi) per pair i < j.
///
/// Relation right-hand sides are normal-form words over generators of
/// index strictly greater than i; a missing conjugate relation means
/// gj^{gi} = gj, a missing power relation means gi^p = identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    prime: u16,
    ngens: usize,
    /// powers[i] = normal form of g_{i+1}^p (0-based index i).
    powers: Vec<Word>,
    /// conjugates[i][j] for i < j: normal form of g_{j+1}^{g_{i+1}}, or
    /// None when the generators commute.
    conjugates: Vec<Vec<Option<Word>>>,
}

fn is_odd_prime(p: u16) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u32;
    let p32 = p as u32;
    while d * d <= p32 {
        if p32.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PcPresentation {
    /// Builds and syntactically validates a presentation.
    ///
    /// `powers` maps generator index (0-based) to the word for gi^p;
    /// `conjugates` maps (i, j) with i < j to the word for gj^{gi}.
    /// Trivial relations may be omitted.
    pub fn new(
        prime: u16,
        ngens: usize,
        powers: Vec<(usize, Word)>,
        conjugates: Vec<(usize, usize, Word)>,
    ) -> Result<Self> {
        if !is_odd_prime(prime) {
            return Err(Error::InvalidPresentation(format!(
                "prime must be an odd prime >= 3, got {prime}"
            )));
        }
        if ngens == 0 {
            return Err(Error::InvalidPresentation("ngens must be >= 1".into()));
        }
        let mut pw = vec![Vec::new(); ngens];
        for (i, w) in powers {
            if i >= ngens {
                return Err(Error::InvalidPresentation(format!(
                    "power relation for generator {} out of range",
                    i + 1
                )));
            }
            validate_word(&w, prime, ngens, i, "power")?;
            pw[i] = w;
        }
        let mut cj = vec![vec![None; ngens]; ngens];
        for (i, j, w) in conjugates {
            if i >= j || j >= ngens {
                return Err(Error::InvalidPresentation(format!(
                    "conjugate relation indices ({}, {}) invalid",
                    i + 1,
                    j + 1
                )));
            }
            validate_word(&w, prime, ngens, i, "conjugate")?;
            // A conjugate word equal to the bare generator is the trivial relation.
            if w.len() == 1 && w[0] == (j, 1) {
                continue;
            }
            cj[i][j] = Some(w);
        }
        Ok(PcPresentation {
            prime,
            ngens,
            powers: pw,
            conjugates: cj,
        })
    }

    pub fn prime(&self) -> u16 {
        self.prime
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub(crate) fn power_word(&self, i: usize) -> &Word {
        &self.powers[i]
    }

    pub(crate) fn conjugate_word(&self, i: usize, j: usize) -> Option<&Word> {
        debug_assert!(i < j);
        self.conjugates[i][j].as_ref()
    }

    /// Iterates the nontrivial relations in canonical order, for writers.
    pub(crate) fn nontrivial_powers(&self) -> impl Iterator<Item = (usize, &Word)> {
        self.powers
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_empty())
    }

    pub(crate) fn nontrivial_conjugates(&self) -> impl Iterator<Item = (usize, usize, &Word)> {
        self.conjugates.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(j, w)| w.as_ref().map(|w| (i, j, w)))
        })
    }
}

fn validate_word(w: &Word, prime: u16, ngens: usize, above: usize, kind: &str) -> Result<()> {
    let mut last: Option<usize> = None;
    for &(g, e) in w {
        if g >= ngens {
            return Err(Error::InvalidPresentation(format!(
                "{kind} relation for g{} references generator g{} beyond ngens",
                above + 1,
                g + 1
            )));
        }
        // Relation words must only involve generators deeper than the
        // relation's left index; collection termination relies on this.
        if g <= above {
            return Err(Error::InvalidPresentation(format!(
                "{kind} relation for g{} involves generator g{} of index <= {}",
                above + 1,
                g + 1,
                above + 1
            )));
        }
        if e == 0 || e >= prime {
            return Err(Error::InvalidPresentation(format!(
                "exponent {e} out of range [1, {prime}) in {kind} relation"
            )));
        }
        if let Some(prev) = last {
            if g <= prev {
                return Err(Error::InvalidPresentation(
                    "word generators must be strictly increasing".into(),
                ));
            }
        }
        last = Some(g);
    }
    Ok(())
}
