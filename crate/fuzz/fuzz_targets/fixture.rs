#![no_main]

use cechpers::complex::Filtration;
use cechpers::persistence::{barcode, standard_reduction_oracle, GridSpec};
use cechpers::Field;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = Filtration::from_fixture_json(text) else {
        return;
    };
    for (i, e) in f.entries().iter().enumerate() {
        for (_, face) in e.simplex.facets() {
            let j = f.position(face.vertices()).expect("faces are present");
            assert!(j < i && f.entries()[j].sq_radius <= e.sq_radius);
        }
    }
    // Keep the linear algebra small.
    if f.vertex_count() <= 10 && f.len() <= 40 {
        let max_p = f.max_dim().min(1);
        let bars = barcode(&f, &GridSpec::AllCritical, max_p, Field::Rational).unwrap().bars;
        assert_eq!(bars, standard_reduction_oracle(&f, max_p, Field::Rational));
    }
});
