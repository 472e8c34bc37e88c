use rand::Rng;

use crate::error::{Error, Result};

/// A permutation of the color set `{0, .., k-1}`, stored as an image list:
/// `images[c]` is where color `c` goes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || seen[i] {
                return Err(Error::InvalidCover {
                    detail: format!("{images:?} is not a permutation of 0..{k}"),
                });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// The k-cycle `c -> c+1 (mod k)`.
    pub fn cyclic_shift(k: usize) -> Self {
        Permutation {
            images: (0..k).map(|c| (c + 1) % k).collect(),
        }
    }

    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, c: usize) -> usize {
        self.images[c]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (c, &i) in self.images.iter().enumerate() {
            images[i] = c;
        }
        Permutation { images }
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&c| self.images[c]).collect(),
        }
    }

    /// Conjugate `sigma ∘ self ∘ sigma⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Self {
        sigma.compose(self).compose(&sigma.inverse())
    }

    /// Cycle lengths in decreasing order. Equal cycle type means conjugate.
    pub fn cycle_type(&self) -> Vec<usize> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut lengths = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = self.images[c];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// All permutations of `{0,..,k-1}` in lexicographic order of image lists.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_lex(&mut current) {
                break;
            }
        }
        out
    }

    /// One representative per conjugacy class, ordered by cycle type.
    ///
    /// Each integer partition of `k` yields a representative built from
    /// consecutive cycles, e.g. the partition `3+2` of 5 maps `0->1->2->0`
    /// and `3->4->3`.
    pub fn conjugacy_class_representatives(k: usize) -> Vec<Permutation> {
        let mut reps = Vec::new();
        for partition in partitions(k) {
            let mut images: Vec<usize> = (0..k).collect();
            let mut base = 0;
            for part in partition {
                for offset in 0..part {
                    images[base + offset] = base + (offset + 1) % part;
                }
                base += part;
            }
            reps.push(Permutation { images });
        }
        reps
    }

    /// Uniform random permutation by Fisher–Yates, fully determined by the
    /// generator state.
    pub fn random<R: Rng>(k: usize, rng: &mut R) -> Permutation {
        let mut images: Vec<usize> = (0..k).collect();
        for i in (1..k).rev() {
            let j = rng.random_range(0..=i);
            images.swap(i, j);
        }
        Permutation { images }
    }
}

/// Advances `v` to the next lexicographic permutation; false once exhausted.
fn next_lex(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Integer partitions of `k` in decreasing-part form, largest-first order.
fn partitions(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    go(k, k, &mut current, &mut out);
    out
}

pub fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![1, 0, 2]).is_ok());
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let shift = Permutation::cyclic_shift(3); // 0->1->2->0
        let swap = Permutation::transposition(3, 0, 1);
        let composed = swap.compose(&shift);
        // shift then swap: 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
        assert_eq!(composed.images(), &[0, 2, 1]);
    }

    #[test]
    fn inverse_undoes() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
    }

    #[test]
    fn all_is_lexicographic_and_complete() {
        let all = Permutation::all(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].images(), &[0, 1, 2]);
        assert_eq!(all[5].images(), &[2, 1, 0]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn class_representatives_cover_all_cycle_types() {
        let reps = Permutation::conjugacy_class_representatives(4);
        // partitions of 4: 4, 3+1, 2+2, 2+1+1, 1+1+1+1
        assert_eq!(reps.len(), 5);
        let mut types: Vec<Vec<usize>> = reps.iter().map(|p| p.cycle_type()).collect();
        types.sort();
        types.dedup();
        assert_eq!(types.len(), 5);
    }

    #[test]
    fn conjugation_preserves_cycle_type() {
        let p = Permutation::cyclic_shift(4);
        for sigma in Permutation::all(4) {
            assert_eq!(p.conjugate_by(&sigma).cycle_type(), p.cycle_type());
        }
    }

    #[test]
    fn random_is_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(
            Permutation::random(5, &mut a),
            Permutation::random(5, &mut b)
        );
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(4), 24);
    }
}
