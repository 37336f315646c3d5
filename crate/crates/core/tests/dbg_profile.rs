use std::time::Instant;

#[test]
fn profile_quartet4() {
    let t0 = Instant::now();
    let q = hfgrowth::construct::example_3_3(4, 0, 13).unwrap();
    let t1 = Instant::now();
    let p = hfgrowth::graded::base_locus_profile(&q.span, 7, None).unwrap();
    let t2 = Instant::now();
    eprintln!(
        "variant 4: build {:?}, profile {:?} (dim {:?} deg {:?}), h6={} h7={}",
        t1 - t0, t2 - t1, p.dimension, p.degree,
        q.span.hilbert_function(6).unwrap(),
        q.span.hilbert_function(7).unwrap()
    );
}
