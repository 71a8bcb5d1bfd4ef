use e2_core::{
    check_lemma1, lemma2_scan, recheck, verify_corrigendum, Certificate, Error, RingDesc, SearchParams, Status,
};

fn multiples(d: u64, k: u64) -> Vec<u64> {
    (1..=k).map(|i| d * i).collect()
}

#[test]
fn corrigendum_passes_for_every_listed_n() {
    let cert = verify_corrigendum(2, &multiples(2, 20)).unwrap();
    assert_eq!(cert.checks.len(), 9 * 20);
    assert!(cert.passed(), "{:?}", cert.failures().next());
    for d in 3..=5 {
        let cert = verify_corrigendum(d, &multiples(d, 10)).unwrap();
        assert_eq!(cert.ring, RingDesc::gaussian_multiple(d).unwrap());
        assert_eq!(cert.checks.len(), 90);
        assert!(cert.passed());
    }
}

#[test]
fn corrigendum_checks_are_ordered_by_name() {
    let cert = verify_corrigendum(3, &[9, 3, 6, 3]).unwrap();
    assert_eq!(cert.checks.len(), 27);
    let again = verify_corrigendum(3, &[3, 6, 9]).unwrap();
    assert_eq!(cert, again);
}

#[test]
fn corrigendum_rejects_bad_parameters() {
    assert!(matches!(verify_corrigendum(1, &[1]), Err(Error::InvalidParameter(_)) | Err(Error::OutOfScopeRing { .. })));
    assert!(matches!(verify_corrigendum(2, &[]), Err(Error::InvalidParameter(_))));
    assert!(matches!(verify_corrigendum(2, &[3]), Err(Error::InvalidParameter(_))));
    assert!(matches!(verify_corrigendum(2, &[0]), Err(Error::InvalidParameter(_))));
}

#[test]
fn certificates_survive_a_json_round_trip() {
    let ring = RingDesc::gaussian_multiple(2).unwrap();
    let parts = vec![
        verify_corrigendum(2, &[2, 4, 6]).unwrap(),
        check_lemma1(ring, 40, 3).unwrap(),
        lemma2_scan(ring, 40, &SearchParams::new(160, 640, 100_000, 100).unwrap()).unwrap(),
    ];
    let cert = Certificate::merge(ring, parts).unwrap();
    assert!(cert.passed());
    let text = cert.to_json();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["ring"], "sqrt:4");
    assert_eq!(value["overall"], "PASS");
    for c in value["checks"].as_array().unwrap() {
        for key in ["name", "claim", "status", "witness"] {
            assert!(c.get(key).is_some(), "{key} missing");
        }
    }
    let back = Certificate::from_json(&text).unwrap();
    assert_eq!(back, cert);
    assert_eq!(recheck(&back).unwrap(), Vec::<String>::new());
}

#[test]
fn tampering_is_detected_on_recheck() {
    let cert = verify_corrigendum(2, &[2]).unwrap();

    let mut forged = cert.clone();
    forged.checks[0].witness = forged.checks[0].witness.as_ref().map(|w| w.replacen('1', "7", 1));
    assert_eq!(recheck(&forged).unwrap().len(), 1);

    let mut forged = cert.clone();
    forged.checks[3].status = Status::Fail;
    assert_eq!(recheck(&forged).unwrap().len(), 2);

    let mut forged = cert;
    forged.checks[1].name = "corrigendum.2-special-norms[d=2;n=4]".into();
    assert!(!recheck(&forged).unwrap().is_empty());

    let mut forged = verify_corrigendum(2, &[2]).unwrap();
    forged.checks[1].name = "nonsense".into();
    assert!(recheck(&forged).is_err());
}

#[test]
fn lemma1_examples_pass() {
    for (ring, samples, seed) in [
        (RingDesc::gaussian_multiple(2).unwrap(), 500, 1),
        (RingDesc::sqrt(1).unwrap(), 500, 1),
        (RingDesc::half(3).unwrap(), 200, 7),
    ] {
        let cert = check_lemma1(ring, samples, seed).unwrap();
        assert_eq!(cert.checks.len(), 3);
        assert!(cert.passed(), "{ring}");
        for c in &cert.checks {
            assert_eq!(c.witness_field("failures"), Some("0"));
        }
    }
    assert!(check_lemma1(RingDesc::sqrt(1).unwrap(), 0, 1).is_err());
}

#[test]
fn lemma1_is_reproducible_from_its_seed() {
    let ring = RingDesc::sqrt(5).unwrap();
    assert_eq!(check_lemma1(ring, 50, 11).unwrap(), check_lemma1(ring, 50, 11).unwrap());
}

#[test]
fn lemma2_scan_out_of_scope_rings() {
    let p = SearchParams::default();
    for r in
        [RingDesc::sqrt(1).unwrap(), RingDesc::sqrt(2).unwrap(), RingDesc::sqrt(3).unwrap(), RingDesc::half(1).unwrap()]
    {
        assert!(matches!(lemma2_scan(r, 50, &p), Err(Error::OutOfScopeRing { .. })), "{r}");
    }
}

#[test]
fn lemma2_scan_small_windows() {
    for (r, cap) in [(RingDesc::sqrt(9).unwrap(), 120), (RingDesc::sqrt(5).unwrap(), 60)] {
        let params = SearchParams::new(4 * cap, 16 * cap, 1_000_000, 200).unwrap();
        let cert = lemma2_scan(r, cap, &params).unwrap();
        assert!(!cert.checks.is_empty());
        assert!(cert.passed(), "{r}: {:?}", cert.failures().next());
        for c in cert.checks.iter().filter(|c| c.name.starts_with("lemma2.separation")) {
            assert_eq!(c.witness_field("cross_class"), Some("[]"));
        }
    }
}
