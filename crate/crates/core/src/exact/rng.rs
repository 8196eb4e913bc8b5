/// splitmix64 stream. Identical seeds yield identical streams on every
/// platform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeededGenerator {
    state: u64,
}

impl SeededGenerator {
    pub fn new(seed: u64) -> Self {
        SeededGenerator { state: seed }
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform on `0..n` by rejection of the biased tail. Panics when `n == 0`.
    pub fn next_below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        // 2^64 mod n
        let rem = (u64::MAX % n + 1) % n;
        let limit = u64::MAX - rem;
        loop {
            let v = self.next_u64();
            if rem == 0 || v <= limit {
                return v % n;
            }
        }
    }

    /// Uniform on the inclusive range `lo..=hi`.
    pub fn next_in_range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u64;
        (lo as i128 + self.next_below(span) as i128) as i64
    }
}
