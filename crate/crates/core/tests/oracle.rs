use fpsoft_core::oracle::{decode, encode, enumerate_topologies, topology_indices};
use fpsoft_core::{check_compactness, Context, LatticeSpec, Rational};

#[test]
fn topology_counts_on_small_carriers() {
    // One point and one parameter: the carrier is the chain-by-Boolean
    // product L_q x {0,1}.
    assert_eq!(topology_indices(1, 1, 1).unwrap().len(), 4);
    let counts: Vec<usize> = (1..=3).map(|q| topology_indices(1, 1, q).unwrap().len()).collect();
    assert!(counts.windows(2).all(|w| w[0] < w[1]), "{counts:?}");
}

#[test]
fn encoding_is_a_bijection() {
    for (nx, ne, q) in [(1, 1, 1), (2, 1, 2), (1, 2, 3), (2, 2, 2)] {
        let len = ((q as usize + 1) << nx).pow(ne as u32);
        for index in 0..len {
            assert_eq!(encode(&decode(nx, ne, q, index), nx, q), index);
        }
    }
}

#[test]
fn every_small_topology_is_compact() {
    let spec = LatticeSpec::new(Context::numbered(1, 1).unwrap(), 1).unwrap();
    for t in enumerate_topologies::<Rational>(&spec).unwrap() {
        let report = check_compactness(&t).unwrap();
        assert!(report.compact && report.fip_equivalence_verified);
    }
}
