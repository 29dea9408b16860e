//! Integration checks for the two infinite families beyond the acceptance
//! degrees, plus frozen regression values computed by direct enumeration.

use skewprod::catalog;
use skewprod::classify::{run_case, RunCfg};
use skewprod::{PermGroup, Permutation};

/// The power formula streams over all of Alt(10) at n = 10 without storing
/// tables, and the printed cycle set still generates.
#[test]
fn case6_at_n_equals_10() {
    let r = run_case(6, Some(10), &RunCfg::default());
    for c in &r.claims {
        assert!(c.pass, "{}: {}", c.id, c.detail);
    }
    let formula = r
        .claims
        .iter()
        .find(|c| c.id == "power_formula")
        .expect("power_formula");
    assert!(formula.detail.contains("1814400"), "{}", formula.detail);
}

/// Regression guard, value frozen from direct enumeration: dropping the last
/// double transposition from the n = 8 cycle set still generates the full
/// alternating group of order 20160.
#[test]
fn case6_reduced_set_still_generates() {
    let n = 8usize;
    let y = Permutation::from_cycles(n + 1, &[(0..=n as u16).collect()]).unwrap();
    let x = Permutation::from_cycles(n + 1, &[vec![0, 1], vec![2, 3]]).unwrap();
    let mut set = vec![x.clone()];
    for (a, b) in [(1i64, -2i64), (2, -1), (3, -4), (4, -3)] {
        set.push(y.pow(a).compose(&x).compose(&y.pow(b)));
    }
    for k in 5..n as i64 {
        // deliberately stop before k = n: the last entry is the one removed
        set.push(y.pow(k).compose(&x).compose(&y.pow(-k)));
    }
    assert_eq!(set.len(), n); // one element short of the full cycle set
    let generated = PermGroup::new(n + 1, set);
    assert_eq!(generated.order(), 20_160);
}

/// The index-two proposition bound is attained with room to spare on the
/// degenerate p = 2 sharpness instance.
#[test]
fn sharp_instance_p2() {
    let left = catalog::psigmal2(4).unwrap();
    let right = catalog::agl1(2).unwrap();
    let g = catalog::direct_product(&left, &right);
    assert_eq!(g.order(), 240);
    assert_eq!(left.order(), 120);
    assert_eq!(right.order(), 2);
}
