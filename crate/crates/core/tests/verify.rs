use starcrit::enumerate::canonical_form;
use starcrit::families::{standard, StandardFamily};
use starcrit::graph6;
use starcrit::verify::{verify_claim, Claim};

#[test]
fn holding_claims_at_five_and_six() {
    for claim in Claim::ALL {
        if matches!(claim, Claim::LemFreeN2 | Claim::N2Critical) {
            continue;
        }
        for n in [5, 6] {
            let run = verify_claim(claim, n).unwrap();
            assert!(run.holds(), "{claim} at {n}: {:?}", run.counterexamples);
        }
    }
}

#[test]
fn applicable_counts() {
    assert_eq!(verify_claim(Claim::LemFree, 6).unwrap().applicable, 111);
    assert_eq!(verify_claim(Claim::LemP4, 4).unwrap().applicable, 6);
    // (n-1)-critical graphs on 5 vertices: two of them, with 5 and 6 edges
    assert_eq!(verify_claim(Claim::EdgeBoundsN1, 5).unwrap().applicable, 2);
    assert_eq!(verify_claim(Claim::EdgeBoundsN2, 6).unwrap().applicable, 2);
}

#[test]
fn n_minus_2_equivalence_fails_from_six() {
    assert!(verify_claim(Claim::LemFreeN2, 5).unwrap().holds());
    let run = verify_claim(Claim::LemFreeN2, 6).unwrap();
    let c6 = standard(StandardFamily::Cycle, 6).unwrap();
    let c6 = graph6::encode(&canonical_form(&c6).unwrap().to_graph()).unwrap();
    assert_eq!(run.counterexamples.len(), 2);
    assert!(run.counterexamples.contains(&c6));
    assert_eq!(
        verify_claim(Claim::LemFreeN2, 7)
            .unwrap()
            .counterexamples
            .len(),
        17
    );
}

#[test]
fn n2_critical_characterization_misses_two_triangles_plus_bridge() {
    // G - (3,5) is 2K3: pattern-free yet chi_s = 3, so the characterization
    // rejects a graph the direct method accepts.
    let g = starcrit::Graph::from_edge_list(
        6,
        &[(0, 4), (0, 5), (4, 5), (1, 2), (1, 3), (2, 3), (3, 5)],
    )
    .unwrap();
    let code = graph6::encode(&canonical_form(&g).unwrap().to_graph()).unwrap();
    let run = verify_claim(Claim::N2Critical, 6).unwrap();
    assert_eq!(run.counterexamples.len(), 3);
    assert!(run.counterexamples.contains(&code));
    assert!(verify_claim(Claim::N2Critical, 5).unwrap().holds());
}
