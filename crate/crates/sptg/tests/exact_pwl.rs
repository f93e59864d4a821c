use proptest::prelude::*;
use sptg::reduce::{family_closed_form, gen_exp_family};
use sptg::{envelope, q, ExtendedValue, PwlFunction, Rational, Segment, Side};

fn one() -> Rational {
    Rational::one()
}

fn seg(t0: Rational, v0: Rational, t1: Rational, v1: Rational) -> Segment {
    Segment::new(t0, v0, t1, v1, ())
}

fn fin(r: Rational) -> ExtendedValue {
    ExtendedValue::Finite(r)
}

#[test]
fn lower_envelope_of_constant_and_ramp() {
    let segs = [seg(q(0, 1), one(), one(), one()), seg(q(0, 1), q(0, 1), one(), q(2, 1))];
    let f = envelope(&segs, Side::Lower, &one()).unwrap();
    let want = PwlFunction::new(one(), vec![(q(0, 1), q(0, 1)), (q(1, 2), one()), (one(), one())]).unwrap();
    assert_eq!(f, want);
}

#[test]
fn upper_envelope_of_one_segment() {
    let s = seg(q(0, 1), q(3, 1), one(), q(1, 1));
    let f = envelope(std::slice::from_ref(&s), Side::Upper, &one()).unwrap();
    assert_eq!(f.breakpoints(), &[(q(0, 1), q(3, 1)), (one(), one())]);
}

#[test]
fn lower_envelope_reproduces_first_level_of_family() {
    let segs = [seg(q(0, 1), q(1, 2), one(), q(1, 2)), seg(q(0, 1), one(), one(), q(0, 1))];
    let f = envelope(&segs, Side::Lower, &one()).unwrap();
    let want = PwlFunction::new(one(), vec![(q(0, 1), q(1, 2)), (q(1, 2), q(1, 2)), (one(), q(0, 1))]).unwrap();
    assert_eq!(f, want);
    let g = gen_exp_family(1);
    let vl1 = g.find("vl1").unwrap();
    assert_eq!(&f, family_closed_form(1).get(vl1));
}

#[test]
fn evaluate_examples() {
    assert_eq!(PwlFunction::constant(one(), q(0, 1)).evaluate(&q(2, 7)).unwrap(), fin(q(0, 1)));
    let fam0 = family_closed_form(0);
    let vr0 = gen_exp_family(0).find("vr0").unwrap();
    assert_eq!(fam0.get(vr0).evaluate(&q(1, 3)).unwrap(), fin(q(2, 3)));
    let fam1 = family_closed_form(1);
    let vl1 = gen_exp_family(1).find("vl1").unwrap();
    assert_eq!(fam1.get(vl1).evaluate(&q(3, 4)).unwrap(), fin(q(1, 4)));
    assert!(fam1.get(vl1).evaluate(&q(5, 4)).is_err());
}

#[test]
fn shift_examples() {
    let zero = PwlFunction::constant(one(), q(0, 1));
    assert_eq!(zero.shift(&q(1, 2)), PwlFunction::constant(one(), q(1, 2)));
    let line = PwlFunction::linear(one(), one(), q(-1, 1));
    assert_eq!(line.shift(&q(1, 4)), PwlFunction::linear(one(), q(5, 4), q(-1, 1)));
    let inf = PwlFunction::infinite(one());
    assert_eq!(inf.shift(&q(3, 1)), inf);
}

#[test]
fn wait_extension_examples() {
    let c = PwlFunction::constant(one(), one());
    let segs = c.wait_extension(&one());
    assert!(segs.contains(&seg(q(0, 1), q(2, 1), one(), one())));

    let f = PwlFunction::new(one(), vec![(q(0, 1), q(3, 1)), (q(1, 2), q(1, 1)), (one(), q(1, 2))]).unwrap();
    for s in f.wait_extension(&q(0, 1)) {
        assert_eq!(s.v0, s.v1);
    }

    let vr0 = PwlFunction::linear(one(), one(), q(-1, 1));
    for s in vr0.wait_extension(&one()) {
        assert_eq!(s.v0, one() - &s.t0);
        assert_eq!(s.v1, one() - &s.t1);
    }
}

#[test]
fn equality_is_canonical() {
    let f = family_closed_form(3).functions()[5].clone();
    assert_eq!(f, f.clone());
    assert_ne!(PwlFunction::constant(one(), q(0, 1)), PwlFunction::constant(one(), one()));
    // collinear breakpoints are dropped, so re-canonicalising changes nothing
    let redundant = PwlFunction::new(one(), vec![(q(0, 1), one()), (q(1, 3), q(2, 3)), (one(), q(0, 1))]).unwrap();
    assert_eq!(redundant, PwlFunction::linear(one(), one(), q(-1, 1)));
    let again = PwlFunction::new(one(), redundant.breakpoints().to_vec()).unwrap();
    assert_eq!(again, redundant);
}

fn small() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..9).prop_map(|(n, d)| q(n, d))
}

fn unit_time() -> impl Strategy<Value = Rational> {
    (0i64..=48).prop_map(|n| q(n, 48))
}

proptest! {
    #[test]
    fn envelope_is_pointwise_extreme(
        lines in prop::collection::vec((small(), small()), 1..6),
        t in unit_time(),
        upper in any::<bool>(),
    ) {
        let segs: Vec<Segment> = lines.iter().map(|(a, b)| seg(q(0, 1), a.clone(), one(), b.clone())).collect();
        let side = if upper { Side::Upper } else { Side::Lower };
        let f = envelope(&segs, side, &one()).unwrap();
        let at = |(a, b): &(Rational, Rational)| a + &(&(b - a) * &t);
        let vals = lines.iter().map(at);
        let want = if upper { vals.max() } else { vals.min() }.unwrap();
        prop_assert_eq!(f.evaluate(&t).unwrap(), fin(want));
    }

    #[test]
    fn envelope_of_partial_segments_covers_their_union(
        a in small(), b in small(), c in small(), split in 1i64..48, t in unit_time(),
    ) {
        // two segments meeting at `split` plus a spanning one
        let m = q(split, 48);
        let segs = [
            seg(q(0, 1), a.clone(), m.clone(), b.clone()),
            seg(m.clone(), b.clone(), one(), c.clone()),
            seg(q(0, 1), c.clone(), one(), a.clone()),
        ];
        let f = envelope(&segs, Side::Lower, &one()).unwrap();
        let on = |s: &Segment| (s.t0 <= t && t <= s.t1).then(|| &s.v0 + &(&(&s.v1 - &s.v0) / &(&s.t1 - &s.t0) * &(&t - &s.t0)));
        let want = segs.iter().filter_map(on).min().unwrap();
        prop_assert_eq!(f.evaluate(&t).unwrap(), fin(want));
    }

    #[test]
    fn shift_adds_everywhere(vals in prop::collection::vec(small(), 2..6), c in small(), t in unit_time()) {
        let n = vals.len() as i64 - 1;
        let pts: Vec<(Rational, Rational)> = vals.iter().enumerate().map(|(k, v)| (q(k as i64, n), v.clone())).collect();
        let f = PwlFunction::new(one(), pts).unwrap();
        prop_assert_eq!(f.shift(&c).at(&t), &f.at(&t) + &c);
    }

    #[test]
    fn wait_segments_end_on_the_function(vals in prop::collection::vec(small(), 2..6), rate in small()) {
        let n = vals.len() as i64 - 1;
        let pts: Vec<(Rational, Rational)> = vals.iter().enumerate().map(|(k, v)| (q(k as i64, n), v.clone())).collect();
        let f = PwlFunction::new(one(), pts).unwrap();
        for s in f.wait_extension(&rate) {
            prop_assert_eq!(&s.v1, &f.at(&s.t1));
            prop_assert_eq!(&s.v0, &(&s.v1 + &(&rate * &s.t1)));
        }
    }
}
