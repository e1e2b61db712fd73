use qary_core::bounds::pair_count_bounds;
use qary_core::{is_canonical, CodeParams};
use qary_search::{
    alpha_stats, codes_by_deletion, enumerate_codes, extend_deficient, EnumerationTask,
};

fn kirkman() -> CodeParams {
    CodeParams::new(5, 7, 6).unwrap()
}

#[test]
fn kirkman_classes_and_size_14() {
    let p = kirkman();
    let t = std::time::Instant::now();
    let r15 = enumerate_codes(&EnumerationTask::all_classes(p, 15)).unwrap();
    eprintln!(
        "size 15: {} classes, {} nodes, {:?}",
        r15.classes.len(),
        r15.nodes,
        t.elapsed()
    );
    assert_eq!(r15.classes.len(), 7);
    for c in &r15.classes {
        assert!(c.has_min_distance(6));
        assert!(is_canonical(c).unwrap());
        assert!(c.is_equidistant());
    }

    let t = std::time::Instant::now();
    let r14 = enumerate_codes(&EnumerationTask::all_classes(p, 14)).unwrap();
    eprintln!(
        "size 14: {} classes, {} nodes, {:?}",
        r14.classes.len(),
        r14.nodes,
        t.elapsed()
    );
    let by_deletion = codes_by_deletion(&r15.classes).unwrap();
    assert!(by_deletion.len() <= 7 * 15);
    assert_eq!(r14.classes, by_deletion);

    for c in &r14.classes {
        let e = extend_deficient(c, &p).unwrap();
        assert!(e.has_min_distance(6));
    }

    for c in &r15.classes {
        let s = alpha_stats(c, 6).unwrap();
        assert_eq!(s.count(0), 0);
        assert_eq!(s.count(2), 0);
        assert!(s.count(1) <= 21);
    }
    for c in &r14.classes {
        let s = alpha_stats(c, 6).unwrap();
        assert!(s.count(0) <= 8);
        assert!(s.count_at_most(1) <= 39);
    }
    assert_eq!(pair_count_bounds(&p, 15).budget, 0);
}
