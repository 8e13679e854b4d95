use belltrans::bell::{
    faa_di_bruno_compose, log_polynomial, partial_bell, partial_bell_direct, potential_polynomial, BellTable,
};
use belltrans::catalog::{parse_records, PinnedRecord};
use belltrans::discovery::{search, verify, SearchGrid};
use belltrans::sequence::{binomial, factorial, int, pow, Rational};
use belltrans::transform::{bell_inverse, bell_transform, bell_transform_k_slices, NamedTransform};
use belltrans::{BellParams, OperatorWord, Sequence, Series};
use proptest::prelude::*;

fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn seq(len: usize, bound: i64) -> impl Strategy<Value = Sequence> {
    prop::collection::vec(rational(bound), len).prop_map(|v| Sequence::new(v).unwrap())
}

fn int_seq(len: usize, bound: i64) -> impl Strategy<Value = Sequence> {
    prop::collection::vec(-bound..=bound, len).prop_map(Sequence::from_ints)
}

fn params(bound: i64) -> impl Strategy<Value = BellParams> {
    (rational(bound), rational(bound), rational(bound), rational(bound))
        .prop_map(|(a, b, c, d)| BellParams::new(a, b, c, d))
}

fn int_params(bound: i64) -> impl Strategy<Value = BellParams> {
    (-bound..=bound, -bound..=bound, -bound..=bound, -bound..=bound)
        .prop_map(|(a, b, c, d)| BellParams::from_ints(a, b, c, d))
}

/// Series with the given constant and linear terms and random higher terms.
fn series(order: usize, c0: i64, c1: Option<i64>) -> impl Strategy<Value = Series> {
    (prop::collection::vec(rational(5), order - 1), 1i64..=3).prop_map(move |(rest, lin)| {
        let mut v = vec![int(c0), int(c1.unwrap_or(lin))];
        v.extend(rest);
        Series::new(v)
    })
}

fn egf_image(g: &Sequence) -> Series {
    let mut v = vec![int(1)];
    v.extend(
        g.iter()
            .enumerate()
            .map(|(i, x)| x / Rational::from_integer(factorial(i + 1))),
    );
    Series::new(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bell_homogeneous(z in seq(8, 6), c in rational(4)) {
        let scaled = z.scale(&c);
        let (t, ts) = (BellTable::new(&z, 8).unwrap(), BellTable::new(&scaled, 8).unwrap());
        for n in 1..=8 {
            for k in 1..=n {
                prop_assert_eq!(ts.get(n, k), &(pow(&c, k) * t.get(n, k)));
            }
        }
    }

    #[test]
    fn bell_recurrence_matches_direct(z in int_seq(9, 5)) {
        for n in 1..=9 {
            for k in 1..=n {
                prop_assert_eq!(partial_bell(n, k, &z).unwrap(), partial_bell_direct(n, k, &z).unwrap());
            }
        }
    }

    #[test]
    fn bell_boundary_rows(z in seq(9, 6)) {
        let t = BellTable::new(&z, 9).unwrap();
        for n in 1..=9 {
            prop_assert_eq!(t.get(n, 1), &z[n]);
            prop_assert_eq!(t.get(n, n), &pow(&z[1], n));
        }
    }

    #[test]
    fn bell_shift_convolution(z in seq(9, 5)) {
        let t = BellTable::new(&z, 9).unwrap();
        for n in 2..=9usize {
            for k in 1..n {
                let rhs: Rational = (k..n)
                    .map(|l| Rational::from_integer(binomial(n as i64 - 1, l as i64)) * &z[n - l] * t.get(l, k))
                    .sum();
                prop_assert_eq!(t.get(n, k + 1), &rhs);
            }
        }
    }

    #[test]
    fn log_and_potential_match_series(g in seq(10, 4), r in rational(5)) {
        let s = egf_image(&g);
        let log = s.log1p().unwrap();
        let power = s.pow(&r).unwrap();
        for n in 1..=10 {
            let nf = Rational::from_integer(factorial(n));
            prop_assert_eq!(log_polynomial(n, &g).unwrap(), &log.coeffs()[n] * &nf);
            prop_assert_eq!(potential_polynomial(n, &r, &g).unwrap(), &power.coeffs()[n] * &nf);
        }
    }

    #[test]
    fn compose_matches_faa_di_bruno(f in seq(11, 4), g in seq(10, 4)) {
        let n = 10;
        let fo = Series::new(
            f.iter().enumerate().map(|(k, v)| v / Rational::from_integer(factorial(k))).collect(),
        );
        let mut go = vec![int(0)];
        go.extend(g.iter().enumerate().map(|(i, v)| v / Rational::from_integer(factorial(i + 1))));
        let h = fo.compose(&Series::new(go)).unwrap();
        let expected = faa_di_bruno_compose(f.terms(), &g, n).unwrap();
        for (m, want) in expected.iter().enumerate() {
            prop_assert_eq!(&h.coeffs()[m] * Rational::from_integer(factorial(m)), want.clone());
        }
    }

    #[test]
    fn reversion_is_two_sided(s in series(12, 0, None)) {
        let t = s.revert().unwrap();
        prop_assert_eq!(s.compose(&t).unwrap(), Series::t(12));
        prop_assert_eq!(t.compose(&s).unwrap(), Series::t(12));
        prop_assert_eq!(t, s.revert_by_substitution().unwrap());
    }

    #[test]
    fn powers_add(s in series(10, 1, None), r in rational(6), q in rational(6)) {
        let lhs = &s.pow(&r).unwrap() * &s.pow(&q).unwrap();
        prop_assert_eq!(lhs, s.pow(&(&r + &q)).unwrap());
    }

    #[test]
    fn inverse_round_trip(p in params(3), x in seq(8, 9)) {
        prop_assert_eq!(bell_inverse(&p, &bell_transform(&p, &x)), x.clone());
        prop_assert_eq!(bell_transform(&p, &bell_inverse(&p, &x)), x);
    }

    #[test]
    fn round_trip_with_c_zero(p in int_params(3), x in int_seq(8, 9)) {
        let p = BellParams::new(p.a, p.b, int(0), p.d);
        prop_assert_eq!(bell_inverse(&p, &bell_transform(&p, &x)), x);
    }

    #[test]
    fn mirror_parameters_agree(p in params(3), x in seq(8, 6)) {
        prop_assert_eq!(bell_transform(&p, &x), bell_transform(&p.mirror(), &x));
        prop_assert_eq!(bell_transform(&p, &x), bell_transform(&p.canonical(), &x));
        prop_assert_eq!(p.canonical(), p.mirror().canonical());
    }

    #[test]
    fn special_inverses(a in rational(3), c in rational(3), d in rational(3), x in seq(8, 6)) {
        let z = Rational::from_integer(0.into());
        let cases = [
            (BellParams::new(a.clone(), z.clone(), c.clone(), d.clone()), BellParams::new(-&a, z.clone(), -&d, -&c)),
            (BellParams::new(a.clone(), -&c, c.clone(), d.clone()), BellParams::new(-&a, z.clone(), -&d, c.clone())),
            (BellParams::new(a.clone(), z.clone(), z.clone(), d.clone()), BellParams::new(-&a, z.clone(), -&d, z.clone())),
        ];
        for (p, q) in cases {
            prop_assert_eq!(bell_inverse(&p, &x), bell_transform(&q, &x), "{} vs {}", p, q);
        }
    }

    #[test]
    fn ncp_semigroup(m in -2i64..=3, m2 in -2i64..=3, x in seq(8, 6)) {
        let t = |k: i64, s: &Sequence| NamedTransform::Ncp(k).apply(s).unwrap();
        prop_assert_eq!(t(m2, &t(m, &x)), t(m + m2, &x));
        prop_assert_eq!(bell_inverse(&BellParams::from_ints(m, 0, -1, 1), &x), t(-m, &x));
    }

    #[test]
    fn first_terms_and_slices(p in params(4), x in seq(8, 6)) {
        let y = bell_transform(&p, &x);
        prop_assert_eq!(&y[1], &x[1]);
        let slices = bell_transform_k_slices(&p, &x);
        for n in 1..=8 {
            prop_assert_eq!(&slices[n - 1][0], &x[n]);
            let total: Rational = slices[n - 1].iter().sum();
            prop_assert_eq!(&total, &y[n]);
        }
    }

    #[test]
    fn text_forms_round_trip(p in params(9), x in seq(6, 50)) {
        prop_assert_eq!(p.to_string().parse::<BellParams>().unwrap(), p.clone());
        prop_assert_eq!(x.to_csv().parse::<Sequence>().unwrap(), x.clone());
        let word = OperatorWord::bell(p);
        prop_assert_eq!(word.to_string().parse::<OperatorWord>().unwrap(), word);
        let record = PinnedRecord {
            key: "k".into(),
            oeis_id: None,
            offset: 1,
            terms: x.into_terms(),
            provenance: "random".into(),
        };
        prop_assert_eq!(parse_records(&record.to_string()).unwrap(), vec![record]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn discovered_relations_are_sound(
        a in prop::sample::select(vec![-2i64, -1, 1, 2]),
        b in -2i64..=2,
        c in prop::sample::select(vec![-2i64, -1, 1, 2]),
        d in prop::sample::select(vec![-1i64, 1]),
        rest in prop::collection::vec(1i64..=9, 9),
    ) {
        let mut x = vec![1];
        x.extend(rest);
        let x = Sequence::from_ints(x);
        let p = BellParams::from_ints(a, b, c, d);
        let y = bell_transform(&p, &x);
        let grid = SearchGrid::default();
        let found = search("x", &x, "y", &y, &grid, 8).unwrap();
        let again = search("x", &x, "y", &y, &grid, 8).unwrap();
        prop_assert_eq!(&found, &again);
        prop_assert!(found.iter().any(|h| h.word == OperatorWord::bell(p.canonical())), "{:?}", found);
        prop_assert!(found.iter().all(|h| h.word.canonical() == h.word));
        for h in &found {
            prop_assert!(verify("x", &x, "y", &y, &h.word, 8).is_ok());
        }
    }
}
