//! Set partitions as restricted growth strings, in lexicographic order.

/// Bell number B(n), the count of set partitions of an n-element set.
pub fn bell_number(n: usize) -> u128 {
    // Bell triangle
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// Lexicographic enumeration of restricted growth strings
/// `a[0] = 0, a[i] <= 1 + max(a[0..i])`.
#[derive(Clone, Debug)]
pub struct RestrictedGrowthStrings {
    rgs: Vec<usize>,
    // prefix_max[i] = max(rgs[0..=i])
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowthStrings {
    pub fn new(n: usize) -> Self {
        RestrictedGrowthStrings {
            rgs: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
            done: false,
        }
    }

    /// Advances to the next string and returns it, or `None` when exhausted.
    /// The empty set has exactly one (empty) partition.
    pub fn next_rgs(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.rgs);
        }
        let n = self.rgs.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.rgs[i] <= self.prefix_max[i - 1] {
                self.rgs[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.rgs[i]);
                for j in (i + 1)..n {
                    self.rgs[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return Some(&self.rgs);
            }
        }
        self.done = true;
        None
    }

    /// Number of blocks of the current string.
    pub fn blocks(&self) -> usize {
        self.prefix_max.last().map_or(0, |m| m + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let expected = [
            1u128, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
        ];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell_number(n), b);
        }
    }

    #[test]
    fn enumerates_in_lexicographic_order() {
        let mut it = RestrictedGrowthStrings::new(3);
        let mut all = Vec::new();
        while let Some(s) = it.next_rgs() {
            all.push(s.to_vec());
        }
        assert_eq!(
            all,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn counts_match_bell() {
        for n in 0..=8 {
            let mut it = RestrictedGrowthStrings::new(n);
            let mut count = 0u128;
            let mut prev: Option<Vec<usize>> = None;
            while let Some(s) = it.next_rgs() {
                if let Some(p) = &prev {
                    assert!(p.as_slice() < s);
                }
                prev = Some(s.to_vec());
                count += 1;
            }
            assert_eq!(count, bell_number(n), "n = {n}");
        }
    }

    #[test]
    fn block_count_tracks_string() {
        let mut it = RestrictedGrowthStrings::new(5);
        while let Some(s) = it.next_rgs() {
            let max = s.iter().copied().max().unwrap();
            assert_eq!(it.blocks(), max + 1);
        }
    }
}
