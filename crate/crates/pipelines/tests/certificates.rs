use qary_pipelines::{
    verify_a3_16_11, verify_a4_9_6, verify_a5_8_6, verify_divisibility_family, PipelineOptions,
    Verdict,
};

#[test]
fn all_pipelines_verify() {
    let opts = PipelineOptions::default();
    let a5 = verify_a5_8_6(&opts);
    println!("{}", a5.to_text());
    assert_eq!(a5.verdict, Verdict::Verified);
    assert_eq!(a5.bound, Some(65));

    let a4 = verify_a4_9_6(&opts);
    println!("{}", a4.to_text());
    assert_eq!(a4.verdict, Verdict::Verified);
    assert_eq!(a4.bound, Some(120));

    let a3 = verify_a3_16_11(&opts);
    assert_eq!(a3.bound, Some(29));

    let fam = verify_divisibility_family(&opts, &[a5.clone(), a4.clone(), a3.clone()]);
    println!("{}", fam.to_text());
    assert_eq!(fam.verdict, Verdict::Verified);
    let again = verify_divisibility_family(&opts, &[a5, a4, a3]);
    assert_eq!(fam.stable_json(), again.stable_json());
}
