mod common;
use common::*;
use dehnfill_core::*;

#[test]
#[ignore]
fn dump_pair() {
    let s = surface(1, 1);
    let wa = slope_word(1, -1, &s.marking);
    let wb = slope_word(4, -3, &s.marking);
    match intersection_number(&s.holonomy, &wa, &wb, 1e-9) {
        Ok(n) => eprintln!("count = {n} oracle = {}", slope_det((1,-1),(4,-3))),
        Err(e) => eprintln!("error: {e}"),
    }
}
