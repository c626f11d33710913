#![no_main]

use cechpers::geometry::{min_enclosing_ball, parse_point_cloud};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(cloud) = parse_point_cloud(text) else {
        return;
    };
    assert!(!cloud.is_empty());
    assert!(cloud.points().iter().all(|p| p.len() == cloud.dim()));
    if cloud.dim() <= 3 {
        let head = &cloud.points()[..cloud.len().min(4)];
        let ball = min_enclosing_ball(head).unwrap();
        assert!(head.iter().all(|p| ball.contains(p)));
    }
});
