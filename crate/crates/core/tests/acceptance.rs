//! Acceptance criteria 1–8, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

use apolar_kit::apolarity::{apolar_ideal_piece, catalecticant, macaulay_inverse};
use apolar_kit::curvegen::{eval_in_algebra, sample_points, tetragonal_curve, trigonal_curve};
use apolar_kit::exact::samples::{fermat, random_form, random_nonzero_form};
use apolar_kit::exact::{binomial, monomial_basis, ExactMatrix, Monomial, Polynomial};
use apolar_kit::numeric::{abs_f64, from_rational, NumericConfig};
use apolar_kit::pipeline::{splits, theorem_b_bound, verify_theorem_a, verify_theorem_b};
use apolar_kit::planemodel::{
    blowup_intersect, higher_gonality_degree, nakai_certificate, tetragonal_numerology, BlowupClass,
};
use apolar_kit::scroll::{chow_product, divisor_degree, scroll_quadrics, DivisorClass, Scroll};
use apolar_kit::waring::{fermat_detect, reconstruct};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dual(n: usize, exps: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0u32; n];
    for &(i, k) in exps {
        e[i] += k;
    }
    Monomial::new(e)
}

fn criterion_1() -> Check {
    for n in 3..=5 {
        let f = fermat(n);
        let q = apolar_ideal_piece(&f, 2).map_err(|e| e.to_string())?;
        let want = binomial(n as u64, 2) as usize;
        ensure(q.dim() == want, || format!("n={n}: degree-2 dim {} != {want}", q.dim()))?;
        let c = apolar_ideal_piece(&f, 3).map_err(|e| e.to_string())?;
        for i in 0..n {
            for j in i + 1..n {
                let dij = Polynomial::monomial(dual(n, &[(i, 1), (j, 1)]), Rational::from(1));
                ensure(q.contains(&dij), || format!("n={n}: d{i}d{j} missing"))?;
                let cube = |k: usize| Polynomial::monomial(dual(n, &[(k, 3)]), Rational::from(1));
                let diff = &cube(i) - &cube(j);
                ensure(c.contains(&diff), || format!("n={n}: d{i}^3 - d{j}^3 missing"))?;
            }
        }
    }
    Ok("Fermat n=3,4,5: (F-perp)_2 = <d_i d_j>, d_i^3 - d_j^3 in (F-perp)_3".into())
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..50 {
        let n = 2 + i % 5;
        let f = random_nonzero_form(&mut rng, n, 3, 5);
        let pieces = (1..=3)
            .map(|k| apolar_ideal_piece(&f, k))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let back = macaulay_inverse(&pieces, 3).map_err(|e| format!("cubic {i}: {e}"))?;
        ensure(back == f.normalized(), || format!("cubic {i} (n={n}) not recovered"))?;
    }
    Ok("50 random cubics, n = 2..6, recovered exactly".into())
}

fn parse(s: &str) -> f64 {
    s.parse().unwrap_or(f64::INFINITY)
}

fn criterion_3(cfg: &NumericConfig) -> Check {
    let mut lines = Vec::new();
    for g in 5..=7u32 {
        let r = verify_theorem_a(g, 5, 30 + u64::from(g), cfg).map_err(|e| format!("g={g}: {e}"))?;
        let n = g as usize - 2;
        for t in &r.trials {
            ensure(t.hilbert == [1, n, n, 1], || {
                format!("g={g} trial {}: hilbert {:?}", t.trial, t.hilbert)
            })?;
            ensure(t.fermat_length == n, || {
                format!("g={g} trial {}: {} forms", t.trial, t.fermat_length)
            })?;
            ensure(parse(&t.fermat_residual) <= 1e-10, || {
                format!("g={g}: residual {}", t.fermat_residual)
            })?;
            ensure(t.gamma_length == n && parse(&t.gamma_residual) <= 1e-10, || {
                format!(
                    "g={g} trial {}: gamma {} residual {}",
                    t.trial, t.gamma_length, t.gamma_residual
                )
            })?;
            ensure(t.agreement, || {
                format!("g={g} trial {}: decompositions disagree", t.trial)
            })?;
        }
        lines.push(format!("g={g}: 5/5 Fermat of rank {n}"));
    }
    Ok(lines.join("; "))
}

fn criterion_4(cfg: &NumericConfig) -> Check {
    let mut lines = Vec::new();
    for g in 6..=8u32 {
        let trials = 2 * splits(g).len();
        let r = verify_theorem_b(g, None, trials, 40 + u64::from(g), cfg).map_err(|e| format!("g={g}: {e}"))?;
        let bound = theorem_b_bound(i64::from(g));
        ensure(r.bound == [6, 7, 9][g as usize - 6], || {
            format!("g={g}: bound {}", r.bound)
        })?;
        for t in &r.trials {
            ensure(t.length as i64 <= bound, || {
                format!("g={g}: length {} > {bound}", t.length)
            })?;
        }
        let lens: Vec<String> = r
            .trials
            .iter()
            .map(|t| {
                format!(
                    "({},{})->{} in [{},{}]",
                    t.split[0], t.split[1], t.length, t.rank_interval[0], t.rank_interval[1]
                )
            })
            .collect();
        lines.push(format!("g={g} bound {bound}: {}", lens.join(" ")));
    }
    for (split, want) in [((0, 2), 6usize), ((1, 1), 7)] {
        let r = verify_theorem_b(7, Some(split), 2, 77, cfg).map_err(|e| format!("g=7 {split:?}: {e}"))?;
        for t in &r.trials {
            ensure(t.length == want, || {
                format!("g=7 split {split:?}: length {} != {want}", t.length)
            })?;
        }
        lines.push(format!("g=7 split {split:?} -> {want}"));
    }
    Ok(lines.join("; "))
}

fn criterion_5() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut types = 0;
    while types < 20 {
        let k = rng.gen_range(1..=4);
        let ty: Vec<u32> = (0..k).map(|_| rng.gen_range(0..=5)).collect();
        let Ok(s) = Scroll::new(ty.clone()) else { continue };
        types += 1;
        let n = s.ambient_dim();
        ensure(s.degree() == n - k as i64 + 1, || {
            format!("{ty:?}: degree {} vs N-k+1 = {}", s.degree(), n - k as i64 + 1)
        })?;
        let hk = vec![DivisorClass::H; k];
        ensure(chow_product(&s, &hk).ok() == Some(s.degree()), || {
            format!("{ty:?}: H^k != degree")
        })?;
    }
    let mut checked = 0;
    for g in 5..=12u32 {
        let s = Scroll::balanced(3, g - 3).map_err(|e| e.to_string())?;
        for (b1, b2) in splits(g) {
            let y1 = DivisorClass::new(2, -b1);
            let y2 = DivisorClass::new(2, -b2);
            let deg = chow_product(&s, &[y1, y2, DivisorClass::H]).map_err(|e| e.to_string())?;
            ensure(deg == 2 * i64::from(g) - 2, || {
                format!("g={g} ({b1},{b2}): degree {deg}")
            })?;
            for b in [b1, b2] {
                let d = divisor_degree(&s, DivisorClass::new(2, -b)).map_err(|e| e.to_string())?;
                ensure(d == 2 * i64::from(g) - 6 - b, || format!("g={g} b={b}: deg {d}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("20 random types; {checked} splits for g <= 12"))
}

fn criterion_6() -> Check {
    let g7 = tetragonal_numerology(7).map_err(|e| e.to_string())?;
    let b = &g7.branches[0];
    ensure(
        g7.branches.len() == 1
            && b.multiplicities == [3, 3, 2, 2]
            && b.sum_m_m_minus_1 == 16
            && b.sum_m_minus_1 == 6
            && b.deg_s == 6,
        || format!("g=7: {g7:?}"),
    )?;
    for k in 2..=8 {
        let r = tetragonal_numerology(3 * k).map_err(|e| e.to_string())?;
        ensure(
            r.branches.len() == 1 && r.multiplicities == [k; 4] && r.deg_s == 4 * k - 3,
            || format!("g={}: {r:?}", 3 * k),
        )?;
        let r = tetragonal_numerology(3 * k + 1).map_err(|e| e.to_string())?;
        ensure(
            r.branches.len() == 1 && r.multiplicities == [k + 1, k + 1, k, k] && r.deg_s == 4 * k - 2,
            || format!("g={}: {r:?}", 3 * k + 1),
        )?;
        if k >= 3 {
            let r = tetragonal_numerology(3 * k - 1).map_err(|e| e.to_string())?;
            let shapes: Vec<(Vec<i64>, i64)> = r.branches.iter().map(|b| (b.multiplicities.clone(), b.deg_s)).collect();
            let want = vec![(vec![k, k, k, k, 2], 4 * k - 4), (vec![k + 1, k, k, k - 1], 4 * k - 5)];
            ensure(shapes == want && r.stated_bound == 4 * k - 3 && r.within_bound, || {
                format!("g={}: {shapes:?}", 3 * k - 1)
            })?;
        }
    }
    for k in 2..=20 {
        let h = higher_gonality_degree(4, k, 0).map_err(|e| e.to_string())?;
        ensure(h.deg_s == 4 * k - 3, || format!("n=4, k={k}: {}", h.deg_s))?;
    }
    Ok("g=7 (3,3,2,2) 16/6/6; g=3k k<=8; g=3k+-1 branches; n=4 reduction k<=20".into())
}

fn criterion_7() -> Check {
    for k in 2..=20 {
        let l = BlowupClass {
            a: 2 * k - 1,
            b: vec![-(k - 1); 4],
        };
        let c = BlowupClass {
            a: 2 * k + 2,
            b: vec![-k; 4],
        };
        ensure(blowup_intersect(&l, &l).ok() == Some(4 * k - 3), || {
            format!("k={k}: L^2")
        })?;
        ensure(blowup_intersect(&c, &c).ok() == Some(8 * k + 4), || {
            format!("k={k}: C^2")
        })?;
    }
    let mut classes = 0;
    for k in 2..=8 {
        let r = nakai_certificate(k, 50).map_err(|e| e.to_string())?;
        ensure(r.certified, || {
            format!("k={k}: {} / {} violations", r.l_violations.len(), r.c_violations.len())
        })?;
        classes += r.classes_checked;
    }
    Ok(format!(
        "L^2, C^2 for k <= 20; no violation for k <= 8 among {classes} classes, A_max = 50"
    ))
}

fn random_dual<R: Rng>(rng: &mut R, n: usize, d: u32) -> Polynomial {
    random_form(rng, n, d, 4)
}

fn criterion_8(cfg: &NumericConfig) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    const N: usize = 20;
    // contraction is bilinear and composes
    for _ in 0..N {
        let n = rng.gen_range(1..=4);
        let (a, b) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let (d1, d2) = (random_dual(&mut rng, n, a), random_dual(&mut rng, n, a));
        let (f, g) = (random_form(&mut rng, n, a + b, 4), random_form(&mut rng, n, a + b, 4));
        let c = Rational::from(rng.gen_range(-5..=5));
        let lhs = (&d1.scale(&c) + &d2).contract(&f).map_err(|e| e.to_string())?;
        let rhs = &d1.contract(&f).unwrap().scale(&c) + &d2.contract(&f).unwrap();
        ensure(lhs == rhs, || "contraction not linear in D".into())?;
        let lhs = d1.contract(&(&f + &g)).unwrap();
        ensure(lhs == &d1.contract(&f).unwrap() + &d1.contract(&g).unwrap(), || {
            "contraction not linear in f".into()
        })?;
        let e = random_dual(&mut rng, n, b);
        let h = random_form(&mut rng, n, a + b + 1, 4);
        let composed = (&d1 * &e).contract(&h).unwrap();
        ensure(composed == d1.contract(&e.contract(&h).unwrap()).unwrap(), || {
            "contraction does not compose".into()
        })?;
    }
    // the pairing on degree-d forms is perfect
    for _ in 0..N {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(0..=4);
        let basis = monomial_basis(n, d);
        let rows: Vec<Vec<Rational>> = basis
            .iter()
            .map(|m| {
                let dm = Polynomial::monomial(m.clone(), Rational::from(1));
                basis
                    .iter()
                    .map(|x| Polynomial::pair(&Polynomial::monomial(x.clone(), Rational::from(1)), &dm).unwrap())
                    .collect()
            })
            .collect();
        let gram = ExactMatrix::from_rows(rows).map_err(|e| e.to_string())?;
        ensure(gram.rank() == basis.len(), || {
            format!("pairing degenerate for n={n}, d={d}")
        })?;
    }
    // catalecticant ranks are symmetric
    for _ in 0..N {
        let n = rng.gen_range(1..=4);
        let d = rng.gen_range(1..=5);
        let f = random_nonzero_form(&mut rng, n, d, 3);
        for k in 0..=d {
            let r1 = catalecticant(&f, k).unwrap().rank();
            let r2 = catalecticant(&f, d - k).unwrap().rank();
            ensure(r1 == r2, || {
                format!("catalecticant ranks {r1} != {r2} for d={d}, k={k}")
            })?;
        }
    }
    // Fermat detection is invariant under GL_n
    for i in 0..N {
        let n = 2 + i % 5;
        let m = ExactMatrix::random_invertible(&mut rng, n, 3);
        let f = fermat(n).change_coordinates(&m).map_err(|e| e.to_string())?;
        let dec = fermat_detect(&f, &mut rng, cfg)
            .map_err(|e| e.to_string())?
            .map_err(|why| format!("transformed Fermat n={n} not detected: {why:?}"))?;
        ensure(dec.rank() == n, || format!("rank {} for n={n}", dec.rank()))?;
        let back = reconstruct(&dec, n, 3, cfg.precision);
        let worst = back
            .iter()
            .zip(f.coeffs())
            .map(|(z, q)| abs_f64(&(z.clone() - from_rational(cfg.precision, &q))))
            .fold(0.0, f64::max);
        ensure(
            worst <= 1e-10 * (1.0 + f.coeffs().iter().map(|q| q.to_f64().abs()).fold(0.0, f64::max)),
            || format!("reconstruction error {worst:e}"),
        )?;
    }
    // sampled curve points satisfy every equation exactly
    for i in 0..N as u64 {
        let curve = if i % 2 == 0 {
            trigonal_curve(5 + (i as u32 / 2) % 3, 100 + i)
        } else {
            let g = 6 + (i as u32 / 2) % 2;
            let (b1, b2) = splits(g)[0];
            tetragonal_curve(g, b1, b2, 100 + i)
        }
        .map_err(|e| e.to_string())?;
        let quadrics = scroll_quadrics(&curve.scroll);
        for p in sample_points(&curve, 12, 200 + i).map_err(|e| e.to_string())? {
            for eq in &curve.equations {
                let v = eval_in_algebra(&p.algebra, &eq.at_base(&p.t), &p.fiber);
                ensure(p.algebra.is_zero(&v), || {
                    format!("curve {i}: equation does not vanish at t = {}", p.t)
                })?;
            }
            for q in &quadrics {
                let v = eval_in_algebra(&p.algebra, q, &p.image);
                ensure(p.algebra.is_zero(&v), || {
                    format!("curve {i}: scroll quadric does not vanish")
                })?;
            }
        }
    }
    Ok(format!("{N} instances each: bilinearity/composition, perfect pairing, catalecticant symmetry, GL-invariance, point residuals"))
}

type CheckFn = Box<dyn Fn() -> Check>;

fn main() -> ExitCode {
    let cfg = NumericConfig::default();
    let checks: Vec<(u32, Duration, CheckFn)> = vec![
        (1, Duration::from_secs(1), Box::new(criterion_1)),
        (2, Duration::from_secs(10), Box::new(criterion_2)),
        (3, Duration::from_secs(120), Box::new(move || criterion_3(&cfg))),
        (4, Duration::from_secs(300), Box::new(move || criterion_4(&cfg))),
        (5, Duration::from_secs(1), Box::new(criterion_5)),
        (6, Duration::from_secs(1), Box::new(criterion_6)),
        (7, Duration::from_secs(30), Box::new(criterion_7)),
        (8, Duration::from_secs(120), Box::new(move || criterion_8(&cfg))),
    ];
    let mut failed = 0;
    for (id, budget, check) in checks {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(detail) => {
                let note = if took > budget {
                    format!(" (over the {budget:?} budget)")
                } else {
                    String::new()
                };
                println!("PASS criterion {id} [{:.2}s]{note}: {detail}", took.as_secs_f64());
            }
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id} [{:.2}s]: {why}", took.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
