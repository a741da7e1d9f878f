//! Lexicographic `k`-subsets of `0..m` with ranking, so the subset space can
//! be cut into contiguous slices for parallel screening.

/// `C(m, k)`, saturating at `u64::MAX`.
pub fn binomial(m: usize, k: usize) -> u64 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (m - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The combination of lexicographic rank `rank` among `k`-subsets of `0..m`.
pub fn unrank(m: usize, k: usize, mut rank: u64) -> Option<Vec<usize>> {
    if rank >= binomial(m, k) {
        return None;
    }
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let left = k - slot - 1;
        loop {
            // subsets whose element at `slot` is `next`
            let block = binomial(m - next - 1, left);
            if rank < block {
                break;
            }
            rank -= block;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    Some(out)
}

/// Streams `k`-subsets of `0..m` in lexicographic order, starting at a given
/// rank and yielding at most `limit` of them.
#[derive(Debug, Clone)]
pub struct Combinations {
    m: usize,
    current: Vec<usize>,
    remaining: u64,
    started: bool,
}

impl Combinations {
    pub fn new(m: usize, k: usize) -> Self {
        Self::slice(m, k, 0, u64::MAX)
    }

    pub fn slice(m: usize, k: usize, start: u64, limit: u64) -> Self {
        let total = binomial(m, k);
        let remaining = total.saturating_sub(start).min(limit);
        let current = unrank(m, k, start).unwrap_or_default();
        Combinations {
            m,
            current,
            remaining,
            started: false,
        }
    }

    /// Advances in place and returns the next subset as a borrowed slice.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.remaining == 0 {
            return None;
        }
        if self.started {
            let k = self.current.len();
            let mut i = k;
            while i > 0 && self.current[i - 1] == self.m - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                self.remaining = 0;
                return None;
            }
            self.current[i - 1] += 1;
            for j in i..k {
                self.current[j] = self.current[j - 1] + 1;
            }
        }
        self.started = true;
        self.remaining -= 1;
        Some(&self.current)
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        self.next_subset().map(<[usize]>::to_vec)
    }
}
