#![no_main]

use cechpers::geometry::{parse_decimal, parse_radius, parse_rational};
use cechpers::SqRadius;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Some(q) = parse_decimal(text) {
        assert_eq!(parse_rational(text), Some(q));
    }
    if let Some(q) = parse_rational(text) {
        let exact = SqRadius::new(q.clone() * q.clone()).exact_string();
        assert_eq!(parse_rational(&exact), Some(q.clone() * q));
    }
    if let Some(sq) = parse_radius(text) {
        assert!(sq >= SqRadius::zero());
        assert_eq!(exact_round_trip(&sq), sq);
    }
});

fn exact_round_trip(sq: &SqRadius) -> SqRadius {
    sq.exact_string().parse().expect("exact strings parse")
}
