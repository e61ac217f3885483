//! Thread-local instrumentation counters backing the constant-time tests.
//!
//! Three quantities are tracked per thread:
//!
//! * `words` — 64-bit words of structure memory read or written,
//! * `accesses` — bounded-size component accesses (one bin block, one
//!   counter block, one spare slot, one queue operation),
//! * `relocations` — cuckoo placement steps performed while draining the
//!   spare's pending queue.
//!
//! Word counts depend on the configured block geometry (a block is one or
//! two words depending on the derived parameters), so per-operation word
//! ceilings are asserted per configuration. Access and relocation counts
//! are determined by the routing control flow alone and are the quantities
//! certified to be independent of the capacity.

use std::cell::Cell;
use std::ops::Sub;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Probes {
    pub words: u64,
    pub accesses: u64,
    pub relocations: u64,
}

impl Sub for Probes {
    type Output = Probes;

    fn sub(self, rhs: Probes) -> Probes {
        Probes {
            words: self.words - rhs.words,
            accesses: self.accesses - rhs.accesses,
            relocations: self.relocations - rhs.relocations,
        }
    }
}

impl Probes {
    pub fn max(self, other: Probes) -> Probes {
        Probes {
            words: self.words.max(other.words),
            accesses: self.accesses.max(other.accesses),
            relocations: self.relocations.max(other.relocations),
        }
    }
}

thread_local! {
    static COUNTS: Cell<Probes> = const { Cell::new(Probes { words: 0, accesses: 0, relocations: 0 }) };
}

/// Zero the current thread's counters.
pub fn reset() {
    COUNTS.with(|c| c.set(Probes::default()));
}

/// Read the current thread's counters.
pub fn snapshot() -> Probes {
    COUNTS.with(|c| c.get())
}

#[inline]
pub(crate) fn add_words(n: u64) {
    COUNTS.with(|c| {
        let mut p = c.get();
        p.words += n;
        c.set(p);
    });
}

#[inline]
pub(crate) fn add_access() {
    COUNTS.with(|c| {
        let mut p = c.get();
        p.accesses += 1;
        c.set(p);
    });
}

#[inline]
pub(crate) fn add_relocation() {
    COUNTS.with(|c| {
        let mut p = c.get();
        p.relocations += 1;
        c.set(p);
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counters_accumulate_and_reset() {
        reset();
        add_words(3);
        add_access();
        add_access();
        add_relocation();
        let p = snapshot();
        assert_eq!(
            p,
            Probes {
                words: 3,
                accesses: 2,
                relocations: 1
            }
        );
        reset();
        assert_eq!(snapshot(), Probes::default());
    }
}
