//! Syntactic membership tests for the comparator languages.

/// Counts of a string of the form `u^n 0^m h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct U0hShape {
    pub n: usize,
    pub m: usize,
}

/// Membership in the regular language `u* 0* h`.
pub fn parse_u0h(s: &str) -> Option<U0hShape> {
    let bytes = s.as_bytes();
    let n = bytes.iter().take_while(|&&b| b == b'u').count();
    let m = bytes[n..].iter().take_while(|&&b| b == b'0').count();
    (&bytes[n + m..] == b"h").then_some(U0hShape { n, m })
}

/// `n >= base^m - 1`, exact for any `m` (overflowing powers exceed every `n`).
pub fn counter_predicate(n: usize, m: usize, base: u32) -> bool {
    let Ok(exp) = u32::try_from(m) else {
        return false;
    };
    match (base as u128).checked_pow(exp) {
        Some(pow) => n as u128 >= pow - 1,
        None => false,
    }
}

/// `u^n 0^m h` with `n >= 2^m - 1`.
pub fn in_lcc_prime(s: &str) -> bool {
    parse_u0h(s).is_some_and(|shape| counter_predicate(shape.n, shape.m, 2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::well_formed_input;

    #[test]
    fn shapes() {
        assert_eq!(parse_u0h("uuuu00h"), Some(U0hShape { n: 4, m: 2 }));
        assert_eq!(parse_u0h("h"), Some(U0hShape { n: 0, m: 0 }));
        assert_eq!(parse_u0h("u0u0h"), None);
        assert_eq!(parse_u0h(""), None);
        assert_eq!(parse_u0h("uu0hh"), None);
        assert_eq!(parse_u0h("uu0"), None);
        assert_eq!(parse_u0h("0uh"), None);
    }

    #[test]
    fn membership() {
        assert!(in_lcc_prime("uuu00h"));
        assert!(!in_lcc_prime("uu00h"));
        assert!(in_lcc_prime("h"));
        assert!(!in_lcc_prime("0h"));
        assert!(in_lcc_prime("u0h"));
        for p in 1..=10 {
            assert!(in_lcc_prime(&well_formed_input((1 << p) - 1, p)));
            assert!(!in_lcc_prime(&well_formed_input((1 << p) - 2, p)));
        }
    }

    #[test]
    fn large_exponents_are_exact() {
        assert!(counter_predicate(usize::MAX, 64, 2));
        assert!(!counter_predicate(usize::MAX, 65, 2));
        assert!(!counter_predicate(usize::MAX, 200, 2));
        assert!(counter_predicate((1 << 62) - 1, 62, 2));
        assert!(!counter_predicate((1 << 62) - 2, 62, 2));
        assert!(counter_predicate(8, 2, 3));
        assert!(!counter_predicate(7, 2, 3));
    }
}
