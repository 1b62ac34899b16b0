mod common;

use common::channels;
use e0_extremal::channel::{e0_raw, BinaryChannel};
use e0_extremal::extremal::{bec_matrix, bsc_matrix, match_at_rho};
use e0_extremal::renyi::*;

#[test]
fn order_mutual_information_is_e0_over_rho() {
    for ch in channels(50, 9) {
        for rho in [-0.5, 0.5, 1.0, 3.0] {
            let lhs = order_mutual_info(1.0 / (1.0 + rho), &ch).unwrap();
            let rhs = e0_raw(rho, &ch).unwrap() / rho;
            assert!((lhs - rhs).abs() <= 1e-12, "rho = {rho}: {lhs} vs {rhs}");
        }
    }
}

#[test]
fn conditioning_reduces_entropy() {
    for ch in channels(50, 10) {
        let joint = JointDistribution::from_channel_uniform(&ch);
        for alpha in [0.1, 0.25, 0.5, 0.8, 1.5, 2.0, 4.0] {
            let h = renyi_cond_entropy(alpha, &joint).unwrap();
            let hx = renyi_entropy(alpha, &joint.x_marginal()).unwrap();
            assert!(h <= hx + 1e-12);
        }
    }
}

#[test]
fn matched_equivocation_is_ordered() {
    // at orders below the matching order the erasure coupling leaves the
    // least uncertainty and the symmetric coupling the most
    for ch in channels(30, 11) {
        for rho1 in [0.0, 0.3, 1.0] {
            let m = match_at_rho(&ch, rho1).unwrap();
            let bec = JointDistribution::from_channel_uniform(&bec_matrix(m.bec.epsilon()).unwrap());
            let bsc = JointDistribution::from_channel_uniform(&bsc_matrix(m.bsc.x()).unwrap());
            let w = JointDistribution::from_channel_uniform(&ch);
            for rho2 in [rho1 + 0.1, rho1 + 0.7, 2.0, 5.0] {
                let beta = 1.0 / (1.0 + rho2);
                let (hb, hw, hs) = (
                    renyi_cond_entropy(beta, &bec).unwrap(),
                    renyi_cond_entropy(beta, &w).unwrap(),
                    renyi_cond_entropy(beta, &bsc).unwrap(),
                );
                assert!(hb <= hw + 1e-9 && hw <= hs + 1e-9, "rho1 = {rho1}, rho2 = {rho2}: {hb} {hw} {hs}");
            }
        }
    }
}

#[test]
fn degenerate_channels() {
    assert!(order_mutual_info(0.3, &BinaryChannel::noiseless()).unwrap() > 0.69);
    assert!(order_mutual_info(0.3, &BinaryChannel::useless(vec![1.0]).unwrap()).unwrap().abs() < 1e-15);
}
