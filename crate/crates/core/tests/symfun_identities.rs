use num_bigint::BigInt;
use omega_core::algebra::{Monomial, Polynomial, Var};
use omega_core::symfun::*;
use proptest::prelude::*;

fn xs(n: usize) -> Alphabet {
    Alphabet::indexed("x", n)
}

fn monomial_of(vars: &Alphabet, exps: &[i64]) -> Polynomial {
    let pairs = vars
        .letters()
        .iter()
        .zip(exps)
        .map(|(m, &e)| (*m.as_var().unwrap(), e));
    Polynomial::from(Monomial::from_exponents(pairs))
}

/// All integer vectors of length `n` with `lo(i) <= v_i <= hi`.
fn vectors(n: usize, lo: impl Fn(usize) -> i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for i in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo(i)..=hi).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Straightening by sorting `v + staircase`: zero on a repeat, otherwise the
/// sign of the sorting permutation times a bialternant Schur function.
fn straighten_oracle(v: &[i64], a: &Alphabet) -> Polynomial {
    let n = v.len();
    let mut w: Vec<i64> = v
        .iter()
        .enumerate()
        .map(|(i, x)| x + (n - 1 - i) as i64)
        .collect();
    let mut sign = 1;
    for i in 0..n {
        for j in 0..n - 1 - i {
            if w[j] < w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) || w.iter().any(|&x| x < 0) {
        return Polynomial::zero();
    }
    let parts: Vec<usize> = w
        .iter()
        .enumerate()
        .map(|(i, x)| (x - (n - 1 - i) as i64) as usize)
        .collect();
    let mu = Partition::new(parts).unwrap();
    schur_bialternant(&mu, a)
        .unwrap()
        .scale(&BigInt::from(sign))
}

#[test]
fn jacobi_trudi_equals_bialternant() {
    for n in 1..=4 {
        let a = xs(n);
        for w in 0..=6 {
            for mu in Partition::bounded(w, n, usize::MAX) {
                let jt = schur_jt(&mu.to_vector(n), &a).unwrap();
                assert_eq!(jt, schur_bialternant(&mu, &a).unwrap(), "mu={mu} n={n}");
                assert!(jt.is_homogeneous() || jt.is_zero());
            }
        }
    }
}

#[test]
fn pi_omega_of_dominant_monomial_is_schur() {
    for n in 1..=3 {
        let a = xs(n);
        for w in 0..=4 {
            for mu in Partition::bounded(w, n, usize::MAX) {
                let v = mu.to_vector(n);
                assert_eq!(
                    pi_omega(&monomial_of(&a, &v), &a).unwrap(),
                    schur(&mu, &a).unwrap()
                );
            }
        }
    }
}

#[test]
fn straightening_region() {
    for n in 1..=3 {
        let a = xs(n);
        for v in vectors(n, |i| i as i64 + 1 - n as i64, 4) {
            let jt = schur_jt(&v, &a).unwrap();
            assert_eq!(pi_omega(&monomial_of(&a, &v), &a).unwrap(), jt, "v={v:?}");
            assert_eq!(jt, straighten_oracle(&v, &a), "v={v:?}");
        }
    }
}

#[test]
fn symmetrizing_the_tail_first() {
    for n in 1..=3 {
        let a = xs(n);
        let tail = Alphabet::new(a.letters()[1..].to_vec());
        for w in 0..=5 {
            for mu in Partition::bounded(w, n, usize::MAX) {
                let v = mu.to_vector(n);
                let head = Polynomial::from(Monomial::power(Var::new("x1"), v[0]));
                let f = &head * &schur_jt(&v[1..], &tail).unwrap();
                assert_eq!(
                    pi_omega(&f, &a).unwrap(),
                    schur_jt(&v, &a).unwrap(),
                    "mu={mu}"
                );
            }
        }
    }
}

#[test]
fn complete_functions_split_over_a_union() {
    let a = Alphabet::from_vars(&["x1", "x2"]);
    let b = Alphabet::from_vars(&["y1", "y2", "y3"]).one_plus();
    let union = &a + &b;
    for total in 0..=6i64 {
        let split: Polynomial = (0..=total)
            .map(|k| complete_h(k, &a) * complete_h(total - k, &b))
            .sum();
        assert_eq!(complete_h(total, &union), split);
    }
}

#[test]
fn complete_functions_count_monomials() {
    // S^j over n letters has binomial(n + j - 1, j) terms, all with coefficient 1.
    let a = xs(3);
    for j in 0..=6usize {
        let h = complete_h(j as i64, &a);
        let binom = (1..=j).fold(1usize, |acc, t| acc * (2 + t) / t);
        assert_eq!(h.len(), binom);
        assert!(h.terms().all(|(_, c)| *c == BigInt::from(1)));
    }
}

#[test]
fn cauchy_identity() {
    for na in 0..=3 {
        for nb in 0..=3 {
            let a = xs(na);
            let b = Alphabet::indexed("y", nb);
            let sum: Polynomial = Partition::in_box(na, nb)
                .iter()
                .map(|mu| {
                    let t = schur(mu, &a).unwrap() * schur(&mu.conjugate(), &b).unwrap();
                    if mu.weight() % 2 == 1 {
                        -t
                    } else {
                        t
                    }
                })
                .sum();
            assert_eq!(cauchy_kernel(&a, &b), sum, "|A|={na} |B|={nb}");
        }
    }
}

#[test]
fn elementary_functions_of_one_plus_y() {
    for m in 0..=3 {
        let y = Alphabet::indexed("y", m);
        let b = y.one_plus();
        for i in -1..=(m as i64 + 2) {
            assert_eq!(
                elementary_e(i, &b),
                elementary_e(i, &y) + elementary_e(i - 1, &y)
            );
        }
    }
}

/// A random element of Sym(1|n-1): sums of `c * x1^a * e_i(tail) * e_j(tail)`.
fn sym_one_rest() -> impl Strategy<Value = (usize, Polynomial)> {
    (2usize..=3).prop_flat_map(|n| {
        let term = (-5i64..=5, 0i64..=4, 0i64..=2, 0i64..=2);
        prop::collection::vec(term, 1..=4).prop_map(move |terms| {
            let a = xs(n);
            let tail = Alphabet::new(a.letters()[1..].to_vec());
            let f: Polynomial = terms
                .into_iter()
                .filter(|&(_, d, i, j)| d + i + j <= 4)
                .map(|(c, d, i, j)| {
                    Polynomial::term(c, Monomial::power(Var::new("x1"), d))
                        * elementary_e(i, &tail)
                        * elementary_e(j, &tail)
                })
                .sum();
            (n, f)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lagrange_operator_matches_pi_omega((n, f) in sym_one_rest()) {
        let a = xs(n);
        let shifted = f.mul_monomial(&Monomial::power(Var::new("x1"), n as i64 - 1));
        let l = lagrange_op(&shifted, &a).unwrap();
        prop_assert!(l.denominator_factors().is_empty());
        prop_assert_eq!(l.numerator(), &pi_omega(&f, &a).unwrap());
    }

    #[test]
    fn pi_omega_output_is_symmetric(n in 1usize..=3, exps in prop::collection::vec((0i64..=3, 0i64..=3, 0i64..=3, -2i64..=2), 1..=4)) {
        let a = xs(n);
        // the extra variable t is a scalar for the symmetrizer
        let f: Polynomial = exps
            .into_iter()
            .map(|(e1, e2, e3, c)| {
                let v = [e1 - 2, e2 - 1, e3][3 - n..].to_vec();
                let t = Polynomial::term(c, Monomial::power(Var::new("t"), e1));
                &monomial_of(&a, &v) * &t
            })
            .sum();
        let g = pi_omega(&f, &a).unwrap();
        prop_assert!(is_symmetric(&g, &a).unwrap());
    }
}
