use super::LogicalVector;
use crate::error::{check_index, Error, Result};

/// Mixed-radix product space `Π_i 1..k_i` with player 1 most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProfileSpace {
    cards: Vec<usize>,
    total: usize,
}

impl ProfileSpace {
    pub fn new(cardinalities: Vec<usize>) -> Result<Self> {
        if cardinalities.contains(&0) {
            return Err(Error::Invalid("cardinalities must be positive".into()));
        }
        let total = cardinalities.iter().product();
        Ok(ProfileSpace {
            cards: cardinalities,
            total,
        })
    }

    pub fn cardinalities(&self) -> &[usize] {
        &self.cards
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    /// `κ = Π k_i`.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Product of cardinalities before coordinate `i` (zero-based).
    pub fn prefix(&self, i: usize) -> usize {
        self.cards[..i].iter().product()
    }

    /// Product of cardinalities after coordinate `i` (zero-based).
    pub fn suffix(&self, i: usize) -> usize {
        self.cards[i + 1..].iter().product()
    }

    /// 1-based flat index of a 1-based profile.
    pub fn index(&self, profile: &[usize]) -> Result<usize> {
        if profile.len() != self.cards.len() {
            return Err(Error::DimensionMismatch(format!(
                "profile has {} coordinates, space has {}",
                profile.len(),
                self.cards.len()
            )));
        }
        let mut idx = 0;
        for (&s, &k) in profile.iter().zip(&self.cards) {
            check_index("profile coordinate", s, k)?;
            idx = idx * k + (s - 1);
        }
        Ok(idx + 1)
    }

    /// Inverse of [`ProfileSpace::index`].
    pub fn unindex(&self, idx: usize) -> Result<Vec<usize>> {
        check_index("profile index", idx, self.total)?;
        let mut rest = idx - 1;
        let mut out = vec![0; self.cards.len()];
        for (slot, &k) in out.iter_mut().zip(&self.cards).rev() {
            *slot = rest % k + 1;
            rest /= k;
        }
        Ok(out)
    }

    /// The profile as the STP of its coordinate unit vectors.
    pub fn to_logical(&self, profile: &[usize]) -> Result<LogicalVector> {
        LogicalVector::new(self.total, self.index(profile)?)
    }

    /// All profiles in lexicographic order.
    pub fn iter(&self) -> ProfileIter<'_> {
        ProfileIter {
            space: self,
            next: if self.total > 0 { Some(vec![1; self.cards.len()]) } else { None },
        }
    }
}

pub struct ProfileIter<'a> {
    space: &'a ProfileSpace,
    next: Option<Vec<usize>>,
}

impl Iterator for ProfileIter<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < self.space.cards[pos] {
                succ[pos] += 1;
                self.next = Some(succ);
                break;
            }
            succ[pos] = 1;
        }
        Some(cur)
    }
}

/// Flat 1-based index for a standalone cardinality list.
pub fn profile_index(indices: &[usize], space: &ProfileSpace) -> Result<usize> {
    space.index(indices)
}

pub fn profile_unindex(idx: usize, space: &ProfileSpace) -> Result<Vec<usize>> {
    space.unindex(idx)
}
