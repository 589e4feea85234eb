//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Reference values come from independent oracles below (tableau
//! enumeration, brute-force complete functions, explicit straightening).

use std::collections::BTreeSet;
use std::panic;
use std::process::Command;
use std::time::{Duration, Instant};

use omega_core::omega::{
    closed_form_partitions, closed_form_term, omega_closed_form, omega_lagrange,
    omega_series_oracle, OmegaProblem,
};
use omega_core::symfun::{
    lagrange_op, pi_omega, schur, schur_bialternant, schur_jt, Alphabet, Partition,
};
use omega_core::{Monomial, Polynomial, Var};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const FINAL: &str = "omega(lambda / ((1-x1*lambda)*(1-x2*lambda)*(1-y/lambda)))";

fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

fn vars(prefix: &str, n: usize) -> Vec<Var> {
    (1..=n).map(|i| Var::new(&format!("{prefix}{i}"))).collect()
}

fn monomial(vs: &[Var], exps: &[i64]) -> Polynomial {
    Polynomial::from(Monomial::from_exponents(
        vs.iter().copied().zip(exps.iter().copied()),
    ))
}

/// All exponent vectors of length `len` with nonnegative entries summing to `total`.
fn compositions(total: usize, len: usize) -> Vec<Vec<i64>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, len - 1) {
            rest.insert(0, first as i64);
            out.push(rest);
        }
    }
    out
}

/// `h_j` as the sum of every monomial of degree `j`.
fn brute_h(j: i64, vs: &[Var]) -> Polynomial {
    if j < 0 {
        return Polynomial::zero();
    }
    compositions(j as usize, vs.len())
        .iter()
        .map(|e| monomial(vs, e))
        .sum()
}

/// Schur polynomial as a sum over semistandard tableaux with entries `0..n`.
fn tableau_schur(shape: &[usize], vs: &[Var]) -> Polynomial {
    fn fill(
        cells: &[(usize, usize)],
        at: usize,
        t: &mut Vec<Vec<usize>>,
        n: usize,
        acc: &mut Vec<Vec<i64>>,
    ) {
        if at == cells.len() {
            let mut content = vec![0i64; n];
            for row in t.iter() {
                for &e in row {
                    content[e] += 1;
                }
            }
            acc.push(content);
            return;
        }
        let (r, c) = cells[at];
        let lo_row = if c > 0 { t[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { t[r - 1][c] + 1 } else { 0 };
        for e in lo_row.max(lo_col)..n {
            t[r].push(e);
            fill(cells, at + 1, t, n, acc);
            t[r].pop();
        }
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut t = vec![Vec::new(); shape.len()];
    let mut acc = Vec::new();
    fill(&cells, 0, &mut t, vs.len(), &mut acc);
    acc.iter().map(|e| monomial(vs, e)).sum()
}

/// Partitions of `w` with at most `len` parts, as plain vectors.
fn partitions(w: usize, max_part: usize, len: usize) -> Vec<Vec<usize>> {
    if w == 0 {
        return vec![vec![]];
    }
    if len == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    for first in (1..=w.min(max_part)).rev() {
        for mut rest in partitions(w - first, first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn alphabet(vs: &[Var]) -> Alphabet {
    Alphabet::new(vs.iter().map(|v| Monomial::var(*v)).collect())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden() -> Outcome {
    let start = Instant::now();
    let out =
        omega_closed_form(&OmegaProblem::standard(2, 1, 1).unwrap()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let v = &out.value;
    ensure(v.numerator() == &p("(1 + y) - y*(x1 + x2)"), || {
        format!("numerator {}", v.numerator())
    })?;
    let got: BTreeSet<String> = v
        .denominator_factors()
        .iter()
        .map(|d| format!("{}^{}", d.factor, d.multiplicity))
        .collect();
    let want: BTreeSet<String> = ["1 - x1", "1 - x2", "1 - x1*y", "1 - x2*y"]
        .iter()
        .map(|s| format!("{}^1", p(s)))
        .collect();
    ensure(got == want, || format!("denominator {got:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("exact match in {elapsed:?}"))
}

fn grid() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for n in 1..=4 {
        for m in 0..=3 {
            for k in 0..n as u32 {
                let prob = OmegaProblem::standard(n, m, k).unwrap();
                let schur = omega_closed_form(&prob).map_err(|e| e.to_string())?;
                let lagrange = omega_lagrange(&prob).map_err(|e| e.to_string())?;
                ensure(schur.value.semantically_equal(&lagrange.value), || {
                    format!("n={n} m={m} k={k}: schur != lagrange")
                })?;
                let oracle = omega_series_oracle(&prob, 6);
                let expanded = schur.value.series_expansion(6).map_err(|e| e.to_string())?;
                ensure(&expanded == oracle.value.numerator(), || {
                    format!("n={n} m={m} k={k}: series mismatch")
                })?;
                cases += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(cases == 40, || format!("{cases} cases"))?;
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{cases} cases in {elapsed:?}"))
}

fn schur_engines() -> Outcome {
    let mut checked = 0;
    for n in 1..=4 {
        let vs = vars("x", n);
        let a = alphabet(&vs);
        for w in 0..=6 {
            for mu in partitions(w, w, n) {
                let oracle = tableau_schur(&mu, &vs);
                let part = Partition::new(mu.clone()).unwrap();
                let v = part.to_vector(n);
                let jt = schur_jt(&v, &a).map_err(|e| e.to_string())?;
                let bi = schur_bialternant(&part, &a).map_err(|e| e.to_string())?;
                let pi = pi_omega(&monomial(&vs, &v), &a).map_err(|e| e.to_string())?;
                ensure(jt == oracle && bi == oracle && pi == oracle, || {
                    format!("n={n} mu={mu:?}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, mu) pairs agree with tableau sums"))
}

/// `sign * S_lambda` from straightening `v + delta`, or zero on a repeat.
fn straightened(v: &[i64], vs: &[Var]) -> Polynomial {
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
    if w.windows(2).any(|p| p[0] == p[1]) || w.last().is_some_and(|&x| x < 0) {
        return Polynomial::zero();
    }
    let shape: Vec<usize> = w
        .iter()
        .enumerate()
        .map(|(i, x)| (x - (n - 1 - i) as i64) as usize)
        .filter(|&x| x > 0)
        .collect();
    let s = tableau_schur(&shape, vs);
    if sign < 0 {
        -s
    } else {
        s
    }
}

/// Every integer vector with `lo[i] <= v[i] <= hi`.
fn integer_box(lo: &[i64], hi: i64) -> Vec<Vec<i64>> {
    let Some((&first, rest)) = lo.split_first() else {
        return vec![vec![]];
    };
    let tails = integer_box(rest, hi);
    (first..=hi)
        .flat_map(|x| {
            tails.iter().map(move |t| {
                let mut v = vec![x];
                v.extend(t);
                v
            })
        })
        .collect()
}

fn straightening() -> Outcome {
    let (mut checked, mut zeros) = (0, 0);
    for n in 1..=3usize {
        let vs = vars("x", n);
        let a = alphabet(&vs);
        let lo: Vec<i64> = (1..=n).map(|i| i as i64 - n as i64).collect();
        for v in integer_box(&lo, 4) {
            let pi = pi_omega(&monomial(&vs, &v), &a).map_err(|e| format!("{v:?}: {e}"))?;
            let jt = schur_jt(&v, &a).map_err(|e| e.to_string())?;
            let oracle = straightened(&v, &vs);
            ensure(pi == jt && jt == oracle, || format!("n={n} v={v:?}"))?;
            // rows i and j of the Jacobi-Trudi matrix coincide iff v_i - i = v_j - j
            let shifted: Vec<i64> = v.iter().enumerate().map(|(i, x)| x - i as i64).collect();
            if (0..n).any(|i| (i + 1..n).any(|j| shifted[i] == shifted[j])) {
                ensure(jt.is_zero(), || {
                    format!("n={n} v={v:?} has equal rows but nonzero value")
                })?;
                zeros += 1;
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} vectors, {zeros} with repeated rows vanish"
    ))
}

fn shifted_complete() -> Outcome {
    let d = 6i64;
    let mut checked = 0;
    for n in 1..=3 {
        let xs = vars("x", n);
        let a = alphabet(&xs);
        for m in 0..=2 {
            let ys = vars("y", m);
            for k in 0..n as i64 {
                let x1 = Monomial::var(xs[0]);
                let mut lhs_in = Polynomial::zero();
                let mut rhs = Polynomial::zero();
                for j in 0..=d {
                    let hy = brute_h(j, &ys);
                    let term = Polynomial::from(x1.pow(j - k)) * hy.clone();
                    if j < k {
                        let single = pi_omega(&term, &a).map_err(|e| e.to_string())?;
                        ensure(single.is_zero(), || {
                            format!("n={n} m={m} k={k} j={j} term nonzero")
                        })?;
                    }
                    lhs_in += &term;
                    rhs += &(brute_h(j - k, &xs) * hy);
                }
                let lhs = pi_omega(&lhs_in, &a).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || format!("n={n} m={m} k={k}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (n, m, k) cases at D = {d}"))
}

fn cauchy() -> Outcome {
    let mut checked = 0;
    for nx in 0..=3 {
        for ny in 0..=3 {
            let xs = vars("x", nx);
            let ys = vars("y", ny);
            let mut lhs = Polynomial::one();
            for x in &xs {
                for y in &ys {
                    lhs = lhs * (Polynomial::one() - monomial(&[*x, *y], &[1, 1]));
                }
            }
            let (ax, ay) = (alphabet(&xs), alphabet(&ys));
            let mut rhs = Polynomial::zero();
            for mu in Partition::in_box(nx, ny) {
                let t = schur(&mu, &ax).map_err(|e| e.to_string())?
                    * schur(&mu.conjugate(), &ay).map_err(|e| e.to_string())?;
                if mu.weight() % 2 == 1 {
                    rhs -= &t;
                } else {
                    rhs += &t;
                }
            }
            ensure(lhs == rhs, || format!("|X|={nx} |Y|={ny}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} alphabet size pairs"))
}

/// Random element of Sym(1|n-1) of degree <= 4: powers of x1 times
/// orbit sums of monomials in the remaining letters.
fn random_sym_1_rest(rng: &mut StdRng, xs: &[Var]) -> Polynomial {
    let n = xs.len();
    let mut f = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let a = rng.gen_range(0..=4i64);
        let rest_degree = rng.gen_range(0..=(4 - a) as usize);
        let comps = compositions(rest_degree, n - 1);
        let e = &comps[rng.gen_range(0..comps.len())];
        let mut orbit: BTreeSet<Vec<i64>> = BTreeSet::new();
        permutations(e, &mut orbit);
        let coeff = loop {
            let c = rng.gen_range(-3i64..=3);
            if c != 0 {
                break c;
            }
        };
        for perm in orbit {
            let mut full = vec![a];
            full.extend(perm);
            f += &(monomial(xs, &full) * Polynomial::constant(coeff));
        }
    }
    f
}

fn permutations(e: &[i64], out: &mut BTreeSet<Vec<i64>>) {
    fn go(cur: &mut Vec<i64>, at: usize, out: &mut BTreeSet<Vec<i64>>) {
        if at >= cur.len() {
            out.insert(cur.clone());
            return;
        }
        for i in at..cur.len() {
            cur.swap(at, i);
            go(cur, at + 1, out);
            cur.swap(at, i);
        }
    }
    go(&mut e.to_vec(), 0, out);
}

fn lagrange_identity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0401);
    for trial in 0..50 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let xs = vars("x", n);
        let a = alphabet(&xs);
        let f = random_sym_1_rest(&mut rng, &xs);
        let lhs = pi_omega(&f, &a).map_err(|e| e.to_string())?;
        let shifted = f.mul_monomial(&Monomial::power(xs[0], n as i64 - 1));
        let rhs = lagrange_op(&shifted, &a).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(rhs.denominator_factors().is_empty(), || {
            format!("trial {trial}: f={f} left a denominator")
        })?;
        ensure(&lhs == rhs.numerator(), || format!("trial {trial}: f={f}"))?;
    }
    Ok("50 seeded samples, n in {2, 3}".to_string())
}

fn finiteness() -> Outcome {
    let start = Instant::now();
    let mut terms = 0;
    for n in 1..=4 {
        for m in 0..=3 {
            for k in 0..n as u32 {
                let prob = OmegaProblem::standard(n, m, k).unwrap();
                let inside = closed_form_partitions(&prob);
                for mu in Partition::in_box(n, m + 2) {
                    if inside.contains(&mu) {
                        continue;
                    }
                    ensure(mu.len() == n || mu.first() == m + 2, || {
                        format!("{mu} is not just outside")
                    })?;
                    ensure(closed_form_term(&prob, &mu).is_zero(), || {
                        format!("n={n} m={m} k={k} mu={mu}")
                    })?;
                    terms += 1;
                }
            }
        }
    }
    Ok(format!(
        "{terms} boundary terms vanish ({:?})",
        start.elapsed()
    ))
}

fn cli_end_to_end() -> Outcome {
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_omega"))
            .args(["--expr", FINAL, "--check", "--truncate", "5"])
            .args(extra)
            .output()
            .map_err(|e| e.to_string())
    };
    let ok = run(&[])?;
    let out = String::from_utf8_lossy(&ok.stdout);
    ensure(ok.status.code() == Some(0), || {
        format!("exit {:?}", ok.status.code())
    })?;
    ensure(out.trim_end().ends_with("all-pass"), || {
        format!("report: {out}")
    })?;
    let bad = run(&["--corrupt-numerator"])?;
    ensure(bad.status.code() == Some(2), || {
        format!("control exit {:?}", bad.status.code())
    })?;
    ensure(!bad.stderr.is_empty(), || {
        "control printed no diagnostic".into()
    })?;
    Ok("check exits 0 with all-pass; corrupted control exits 2".to_string())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden example", golden),
        ("three-way agreement grid", grid),
        ("schur engines agree", schur_engines),
        ("straightening region", straightening),
        ("symmetrizing shifted complete functions", shifted_complete),
        ("cauchy identity", cauchy),
        ("lagrange operator identity", lagrange_identity),
        ("finiteness of the partition sum", finiteness),
        ("cli end to end", cli_end_to_end),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(f).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {}  {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}  {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
