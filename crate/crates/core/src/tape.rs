//! A two-way infinite tape that stores only its written region.

use crate::symbol::Symbol;

// Polynomial fingerprint modulus (Mersenne prime 2^61 - 1) and radix.
const MODULUS: u64 = (1 << 61) - 1;
const RADIX: u64 = 0x1f3d_5b79_a3c5;
const RADIX_INV: u64 = pow_mod(RADIX, MODULUS - 2);

#[inline]
const fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MODULUS as u128) as u64
}

const fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Blank maps to zero, so blank cells never contribute to the fingerprint.
#[inline]
fn symbol_value(s: Symbol) -> u64 {
    (s.as_char() as u64 + MODULUS - '_' as u64) % MODULUS
}

/// Caches `radix^pos` so that nearby positions cost a multiplication.
#[derive(Debug, Clone)]
struct PowerCursor {
    radix: u64,
    inverse: u64,
    pos: i64,
    value: u64,
}

impl PowerCursor {
    fn new(radix: u64, inverse: u64) -> Self {
        PowerCursor {
            radix,
            inverse,
            pos: 0,
            value: 1,
        }
    }

    fn at(&mut self, pos: i64) -> u64 {
        let diff = pos - self.pos;
        if diff.unsigned_abs() <= 16 {
            let factor = if diff > 0 { self.radix } else { self.inverse };
            for _ in 0..diff.unsigned_abs() {
                self.value = mul_mod(self.value, factor);
            }
        } else if pos >= 0 {
            self.value = pow_mod(self.radix, pos as u64);
        } else {
            self.value = pow_mod(self.inverse, pos.unsigned_abs());
        }
        self.pos = pos;
        self.value
    }
}

/// Tape contents.
///
/// Cells outside the tight interval `[lo, hi]` are blank; both ends of the
/// interval hold non-blank symbols. Two tapes are equal iff their tight
/// intervals and contents are equal.
#[derive(Debug, Clone)]
pub struct Tape {
    cells: Vec<Symbol>,
    // cell index of cells[0]
    origin: i64,
    bounds: Option<(i64, i64)>,
    // sum of value(cell i) * RADIX^i over all cells
    hash: u64,
    write_pow: PowerCursor,
    // RADIX^-lo
    lo_pow: PowerCursor,
}

impl PartialEq for Tape {
    fn eq(&self, other: &Self) -> bool {
        self.bounds == other.bounds && self.content() == other.content()
    }
}

impl Eq for Tape {}

impl Default for Tape {
    fn default() -> Self {
        Tape::empty()
    }
}

impl Tape {
    pub fn empty() -> Self {
        Tape {
            cells: Vec::new(),
            origin: 0,
            bounds: None,
            hash: 0,
            write_pow: PowerCursor::new(RADIX, RADIX_INV),
            lo_pow: PowerCursor::new(RADIX_INV, RADIX),
        }
    }

    /// Places `symbols` on cells `0..len`.
    pub fn from_symbols(symbols: &[Symbol]) -> Self {
        let mut tape = Tape::empty();
        tape.cells.reserve(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            tape.set(i as i64, s);
        }
        tape
    }

    #[inline]
    pub fn get(&self, cell: i64) -> Symbol {
        let idx = cell - self.origin;
        if idx >= 0 && (idx as usize) < self.cells.len() {
            self.cells[idx as usize]
        } else {
            Symbol::BLANK
        }
    }

    /// The tight interval, or `None` if every cell is blank.
    pub fn bounds(&self) -> Option<(i64, i64)> {
        self.bounds
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    /// Symbols of the tight interval, left to right.
    pub fn content(&self) -> &[Symbol] {
        match self.bounds {
            None => &[],
            Some((lo, hi)) => {
                let a = (lo - self.origin) as usize;
                let b = (hi - self.origin) as usize;
                &self.cells[a..=b]
            }
        }
    }

    /// A fingerprint of the tight content that ignores where it sits on the tape.
    pub fn translation_invariant_hash(&self) -> u64 {
        match self.bounds {
            None => 0,
            Some(_) => mul_mod(self.hash, self.lo_pow.value),
        }
    }

    fn ensure_cell(&mut self, cell: i64) {
        if self.cells.is_empty() {
            self.origin = cell;
            self.cells.push(Symbol::BLANK);
            return;
        }
        if cell < self.origin {
            let need = (self.origin - cell) as usize;
            let grow = need.max(self.cells.len());
            let mut cells = vec![Symbol::BLANK; grow];
            cells.extend_from_slice(&self.cells);
            self.cells = cells;
            self.origin -= grow as i64;
        } else {
            let idx = (cell - self.origin) as usize;
            if idx >= self.cells.len() {
                let grow = (idx + 1 - self.cells.len()).max(self.cells.len());
                self.cells.resize(self.cells.len() + grow, Symbol::BLANK);
            }
        }
    }

    pub fn set(&mut self, cell: i64, symbol: Symbol) {
        let old = self.get(cell);
        if old == symbol {
            return;
        }
        self.ensure_cell(cell);
        self.cells[(cell - self.origin) as usize] = symbol;

        let delta = (symbol_value(symbol) + MODULUS - symbol_value(old)) % MODULUS;
        let pow = self.write_pow.at(cell);
        self.hash = (self.hash + mul_mod(delta, pow)) % MODULUS;

        let old_lo = self.bounds.map(|b| b.0);
        self.bounds = if !symbol.is_blank() {
            Some(match self.bounds {
                None => (cell, cell),
                Some((lo, hi)) => (lo.min(cell), hi.max(cell)),
            })
        } else {
            match self.bounds {
                Some((lo, hi)) if lo == cell && hi == cell => None,
                Some((lo, hi)) if lo == cell => {
                    let mut lo = lo + 1;
                    while self.get(lo).is_blank() {
                        lo += 1;
                    }
                    Some((lo, hi))
                }
                Some((lo, hi)) if hi == cell => {
                    let mut hi = hi - 1;
                    while self.get(hi).is_blank() {
                        hi -= 1;
                    }
                    Some((lo, hi))
                }
                other => other,
            }
        };
        let new_lo = self.bounds.map(|b| b.0);
        if new_lo != old_lo {
            if let Some(lo) = new_lo {
                self.lo_pow.at(lo);
            }
        }
        debug_assert!(self.is_tight());
    }

    fn is_tight(&self) -> bool {
        match self.bounds {
            None => self.cells.iter().all(|s| s.is_blank()),
            Some((lo, hi)) => !self.get(lo).is_blank() && !self.get(hi).is_blank(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sym(c: char) -> Symbol {
        Symbol::new(c).unwrap()
    }

    #[test]
    fn from_symbols_places_input_at_zero() {
        let tape = Tape::from_symbols(&[sym('u'), sym('0'), sym('h')]);
        assert_eq!(tape.bounds(), Some((0, 2)));
        assert_eq!(tape.get(-1), Symbol::BLANK);
        assert_eq!(tape.get(1), sym('0'));
    }

    #[test]
    fn blank_write_retightens() {
        let mut tape = Tape::from_symbols(&[sym('a'), sym('b'), sym('c')]);
        tape.set(1, Symbol::BLANK);
        assert_eq!(tape.bounds(), Some((0, 2)));
        tape.set(0, Symbol::BLANK);
        assert_eq!(tape.bounds(), Some((2, 2)));
        tape.set(2, Symbol::BLANK);
        assert_eq!(tape.bounds(), None);
        assert_eq!(tape, Tape::empty());
        assert_eq!(tape.translation_invariant_hash(), 0);
    }

    #[test]
    fn equality_ignores_buffer_padding() {
        let mut a = Tape::empty();
        a.set(-50, sym('x'));
        a.set(-50, Symbol::BLANK);
        a.set(3, sym('y'));
        let mut b = Tape::empty();
        b.set(3, sym('y'));
        assert_eq!(a, b);
    }

    #[test]
    fn power_cursor_far_jumps() {
        let mut c = PowerCursor::new(RADIX, RADIX_INV);
        assert_eq!(c.at(1000), pow_mod(RADIX, 1000));
        assert_eq!(c.at(-7), pow_mod(RADIX_INV, 7));
        assert_eq!(c.at(-3), pow_mod(RADIX_INV, 3));
        assert_eq!(mul_mod(RADIX, RADIX_INV), 1);
    }

    proptest! {
        #[test]
        fn hash_is_translation_invariant(
            writes in proptest::collection::vec((-20i64..20, 0usize..3), 0..60),
            shift in -40i64..40,
        ) {
            let alphabet = [Symbol::BLANK, sym('a'), sym('b')];
            let mut a = Tape::empty();
            let mut b = Tape::empty();
            for (cell, s) in writes {
                a.set(cell, alphabet[s]);
                b.set(cell + shift, alphabet[s]);
            }
            prop_assert_eq!(a.content(), b.content());
            prop_assert_eq!(a.translation_invariant_hash(), b.translation_invariant_hash());
            prop_assert!(a.is_tight());
        }
    }
}
