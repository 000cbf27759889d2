//! Acceptance suite: one line per criterion, exact residuals only.

use std::collections::{HashMap, HashSet};
use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use painleve::hamilton::{frame_from_rho, verify_hamilton};
use painleve::solutions::{
    build_multiplet, gen_1x, gen_2x, gen_2x3, rho_shift, verify_dressing_chain, verify_p4, verify_rho,
    verify_rho_third_order, verify_symmetric, verify_wkp1, HierarchyMember, P4Solution, RhoSolution,
    ShiftBranch, Sign, SymMultiplet, Variant,
};
use painleve::weyl::{act_multiplet, check_relations, db_on_j, g_on_littlej, miura, Letter, LittleJPair, VTriple};
use painleve::{BigRat, Error, Poly, RatFun};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: painleve::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn passes(report: &painleve::Report) -> Result<(), String> {
    ensure(report.passed(), || report.to_string())
}

fn member_checks(m: &HierarchyMember) -> Result<(), String> {
    passes(&verify_rho(&m.rho, &int(0)))?;
    passes(&verify_rho_third_order(&m.rho))?;
    passes(&ok(verify_p4(&m.y), &m.label)?)?;
    passes(&m.verify_forms())
}

fn params(m: &HierarchyMember, mu_sq: BigRat, nu: BigRat, b: BigRat) -> Result<(), String> {
    let got = (m.rho.mu_sq.clone(), m.rho.nu.clone(), m.y.a.clone(), m.y.b.clone());
    let want = (mu_sq.clone(), nu, mu_sq, b);
    ensure(got == want, || format!("{}: parameters {got:?}, expected {want:?}", m.label))
}

fn two_x_cases() -> Vec<(u32, u32, bool)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        for k in 1..=n {
            for hatted in [false, true] {
                out.push((k, n, hatted));
            }
        }
    }
    out
}

fn one_x_cases() -> Vec<(u32, u32, Variant, bool)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for k in 1..=n {
            for v in [Variant::One, Variant::Two] {
                for hatted in [false, true] {
                    out.push((k, n, v, hatted));
                }
            }
        }
    }
    out
}

fn two_x3_cases() -> Vec<(Variant, u32, u32, Sign)> {
    let mut out = Vec::new();
    for v in [Variant::One, Variant::Two] {
        for dir in [Sign::Plus, Sign::Minus] {
            for n in 0..=3 {
                for k in 0..=3 {
                    out.push((v, n, k, dir));
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let cases = two_x_cases();
    for &(k, n, hatted) in &cases {
        let m = ok(gen_2x(k, n, hatted), "gen_2x")?;
        ensure(m.sign == Sign::Minus, || format!("{}: expected y_-", m.label))?;
        let (n, k) = (n as i64, k as i64);
        let nu = if hatted { 2 * k - n - 1 } else { n - 2 * k + 1 };
        params(&m, int((n + 1).pow(2)), int(nu), int(nu - 1))?;
        member_checks(&m)?;
    }
    Ok(format!("{} members", cases.len()))
}

fn criterion_2() -> Outcome {
    let cases = one_x_cases();
    let mut forms = 0;
    for &(k, n, v, hatted) in &cases {
        let m = ok(gen_1x(k, n, v, hatted), "gen_1x")?;
        let (n, k) = (n as i64, k as i64);
        let (mu_sq, nu) = match (v, hatted) {
            (Variant::One, false) => ((n - k + 1).pow(2), n + k + 1),
            (Variant::Two, false) => (k * k, -2 * n + k - 2),
            (Variant::One, true) => (k * k, 2 * n - k + 2),
            (Variant::Two, true) => ((n - k + 1).pow(2), -n - k - 1),
        };
        params(&m, int(mu_sq), int(nu), int(nu + 1))?;
        member_checks(&m)?;
        for (name, f) in &m.forms {
            let alt = P4Solution::new(f.clone(), m.y.a.clone(), m.y.b.clone());
            passes(&ok(verify_p4(&alt), name)?)?;
            forms += 1;
        }
        if v == Variant::One {
            passes(&ok(verify_wkp1(k as u32, n as u32, hatted), "sum identity")?)?;
        }
    }
    Ok(format!("{} members, {forms} alternative forms", cases.len()))
}

fn criterion_3() -> Outcome {
    let cases = two_x3_cases();
    for &(v, n, k, dir) in &cases {
        let m = ok(gen_2x3(v, n, k, dir), "gen_2x3")?;
        let (ni, ki) = (n as i64, k as i64);
        let third = rat(1, 3);
        let (mu, nu) = match (v, dir) {
            (Variant::One, Sign::Plus) => (&third + int(ni), 1 - ni + 2 * ki),
            (Variant::Two, Sign::Plus) => (&third - int(ni), -1 - ni + 2 * ki),
            (Variant::One, Sign::Minus) => (&third - int(ni), 1 + ni - 2 * ki),
            (Variant::Two, Sign::Minus) => (&third + int(ni), -1 + ni - 2 * ki),
        };
        params(&m, &mu * &mu, int(nu), int(nu + dir.value()))?;
        member_checks(&m)?;
    }
    let mut dups = 0;
    for n in 0..=3u32 {
        for k in 0..=3u32 {
            let mut pairs = Vec::new();
            if k <= n + 1 {
                pairs.push(((Variant::Two, n, k), (Variant::One, n, n + 1 - k)));
            }
            if k + 1 <= n {
                pairs.push(((Variant::One, n, k), (Variant::Two, n, n - 1 - k)));
            }
            for ((va, na, ka), (vb, nb, kb)) in pairs {
                let a = ok(gen_2x3(va, na, ka, Sign::Plus), "gen_2x3")?.rho;
                let b = ok(gen_2x3(vb, nb, kb, Sign::Minus), "gen_2x3")?.rho;
                ensure(a == b, || format!("duplication ({va},{na},{ka}) vs ({vb},-{nb},-{kb}) differs"))?;
                dups += 1;
            }
        }
    }
    Ok(format!("{} members, {dups} duplication identities", cases.len()))
}

fn cubic(c1: BigRat) -> RatFun {
    RatFun::from_poly(Poly::new(vec![int(0), c1, int(0), rat(8, 27)]))
}

fn criterion_4() -> Outcome {
    let seed = RhoSolution::seed();
    ensure(seed.rho == cubic(int(0)), || "seed is not 8x^3/27".into())?;
    ensure(seed.mu_sq == rat(4, 9) && seed.nu == int(0), || "seed parameters".into())?;
    passes(&verify_rho(&seed, &int(0)))?;
    passes(&verify_rho_third_order(&seed))?;
    let want = [
        (ShiftBranch::I, RhoSolution::new(cubic(rat(-4, 3)), rat(1, 9), int(1))),
        (ShiftBranch::J, RhoSolution::new(cubic(rat(4, 3)), rat(1, 9), int(-1))),
    ];
    for (branch, expected) in want {
        let got = ok(rho_shift(&seed, branch, Sign::Plus), "rho_shift")?;
        ensure(got == expected, || format!("{branch:?}: got {got:?}"))?;
        passes(&verify_rho(&got, &int(0)))?;
        passes(&verify_rho_third_order(&got))?;
    }
    Ok("seed and both shifts".into())
}

fn seed_multiplet(r: &RhoSolution) -> Result<(SymMultiplet, VTriple), String> {
    let mu = ok(r.mu(Sign::Plus), "mu")?;
    Ok((ok(build_multiplet(r, Sign::Plus), "build_multiplet")?, VTriple::from_mu_nu(&mu, &r.nu)))
}

fn random_triple(rng: &mut StdRng) -> VTriple {
    let mut q = || rat(rng.gen_range(-60..=60), rng.gen_range(1..=15));
    let (a, b) = (q(), q());
    let c = -(&a + &b);
    VTriple::new(a, b, c).expect("sum is zero")
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20_241_018);
    let mut checks = 0;
    for _ in 0..100 {
        let rep = ok(check_relations(None, &random_triple(&mut rng)), "relations")?;
        passes(&rep)?;
        checks += rep.checks.len();
    }
    let seeds = [
        RhoSolution::seed(),
        ok(gen_2x(1, 1, false), "gen_2x")?.rho,
        ok(gen_2x(2, 2, false), "gen_2x")?.rho,
    ];
    for r in &seeds {
        let (m, v) = seed_multiplet(r)?;
        let rep = ok(check_relations(Some(&m), &v), "relations")?;
        passes(&rep)?;
        checks += rep.checks.len();
    }
    Ok(format!("{checks} relation checks on 100 random triples and 3 seeds"))
}

fn criterion_6() -> Outcome {
    let (m, v) = seed_multiplet(&RhoSolution::seed())?;
    passes(&verify_symmetric(&m))?;
    let alphabet = Letter::alphabet();
    let minus_two_x = RatFun::from_poly(Poly::monomial(int(-2), 1));
    let mut frontier: HashMap<([RatFun; 3], VTriple), u64> = HashMap::new();
    frontier.insert((m.f.clone(), v), 1);
    let mut seen: HashSet<([RatFun; 3], VTriple)> = frontier.keys().cloned().collect();
    let (mut words, mut degenerate) = (1u64, 0u64);
    for _ in 0..4 {
        let mut next: HashMap<([RatFun; 3], VTriple), u64> = HashMap::new();
        for ((f, v), count) in &frontier {
            let m = SymMultiplet::new(f.clone(), v.alphas());
            for &letter in &alphabet {
                match act_multiplet(letter, &m, v) {
                    Ok((out, w)) => {
                        let key = (out.f.clone(), w);
                        if seen.insert(key.clone()) {
                            passes(&verify_symmetric(&out))?;
                            let sum = &(&out.f[0] + &out.f[1]) + &out.f[2];
                            let alpha = &(&out.alpha[0] + &out.alpha[1]) + &out.alpha[2];
                            ensure(sum == minus_two_x && alpha == int(-2), || "sum rule".into())?;
                        }
                        *next.entry(key).or_default() += count;
                        words += count;
                    }
                    Err(Error::ZeroFunction(_) | Error::DegenerateDenominator(_) | Error::DegenerateStep { .. }) => {
                        degenerate += count;
                    }
                    Err(e) => return Err(format!("{letter}: {e}")),
                }
            }
        }
        frontier = next;
    }
    Ok(format!(
        "{words} words, {} distinct multiplets, {degenerate} words stopped at a vanishing f",
        seen.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut frames = 0;
    for (k, n, hatted) in two_x_cases().into_iter().filter(|c| c.1 <= 4) {
        let r = ok(gen_2x(k, n, hatted), "gen_2x")?.rho;
        for eps in [Sign::Plus, Sign::Minus] {
            let f = ok(frame_from_rho(&r, eps, Sign::Plus), "frame_from_rho")?;
            passes(&verify_hamilton(&f))?;
            ensure(f.rho() == r.rho, || "rho not recovered from H".into())?;
            passes(&ok(verify_p4(&f.p4_solution()), "Q")?)?;
            frames += 1;
        }
    }
    Ok(format!("{frames} frames"))
}

fn random_poly(rng: &mut StdRng) -> RatFun {
    let deg = rng.gen_range(0..=3);
    let mut coeffs: Vec<BigRat> = (0..=deg).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))).collect();
    if coeffs[deg].clone() == int(0) {
        coeffs[deg] = int(1);
    }
    RatFun::from_poly(Poly::new(coeffs))
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(8);
    let (mut done, mut skipped) = (0, 0);
    while done < 50 {
        let seed = LittleJPair { j: random_poly(&mut rng), jbar: random_poly(&mut rng) };
        let lhs = g_on_littlej(&seed, Sign::Plus)
            .and_then(|once| g_on_littlej(&once, Sign::Plus))
            .and_then(|twice| miura(&twice));
        let rhs = miura(&seed).and_then(|p| db_on_j(&p, Sign::Plus));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                ensure(l == r, || format!("mismatch on {seed:?}"))?;
                done += 1;
            }
            _ => skipped += 1,
        }
    }
    Ok(format!("{done} seeds ({skipped} guarded out)"))
}

fn criterion_9() -> Outcome {
    let seeds = [
        RhoSolution::seed(),
        ok(gen_2x(2, 2, false), "gen_2x")?.rho,
        ok(gen_2x3(Variant::One, 1, 0, Sign::Plus), "gen_2x3")?.rho,
    ];
    for r in &seeds {
        let (m, _) = seed_multiplet(r)?;
        let rep = ok(verify_dressing_chain(&m), "dressing chain")?;
        passes(&rep)?;
        ensure(rep.check("sigma rho-equation").is_some(), || "sigma-level check missing".into())?;
    }
    Ok("3 multiplets".into())
}

fn p4rat(args: &[&str]) -> Result<i32, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_p4rat"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    out.status.code().ok_or_else(|| "killed by signal".into())
}

fn pipeline(dir: &Path, tag: &str, member: &[String]) -> Result<(), String> {
    let rec = dir.join(format!("{tag}.jsonl"));
    let rec_s = rec.to_str().unwrap();
    let mut gen: Vec<&str> = vec!["generate"];
    gen.extend(member.iter().map(String::as_str));
    gen.extend(["--out", rec_s]);
    ensure(p4rat(&gen)? == 0, || format!("generate {member:?}"))?;
    for kind in ["p4", "rho"] {
        let exported = dir.join(format!("{tag}.{kind}.json"));
        let ex = exported.to_str().unwrap();
        ensure(p4rat(&["export", "--input", rec_s, "--kind", kind, "--out", ex])? == 0, || {
            format!("export {kind} {member:?}")
        })?;
        ensure(p4rat(&["verify", "--input", ex, "--kind", kind])? == 0, || format!("verify {kind} {member:?}"))?;
    }
    Ok(())
}

fn strings(parts: &[&str]) -> Vec<String> {
    parts.iter().map(|s| s.to_string()).collect()
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut members = Vec::new();
    for (k, n, hatted) in two_x_cases() {
        let h = if hatted { "2x-hat" } else { "2x" };
        members.push(strings(&["--hierarchy", h, "--k", &k.to_string(), "--n", &n.to_string()]));
    }
    for (k, n, v, hatted) in one_x_cases() {
        let h = if hatted { "1x-hat" } else { "1x" };
        let (k, n, v) = (k.to_string(), n.to_string(), v.to_string());
        members.push(strings(&["--hierarchy", h, "--k", &k, "--n", &n, "--variant", &v]));
    }
    for (v, n, k, dir) in two_x3_cases() {
        let (k, n, v, d) = (k.to_string(), n.to_string(), v.to_string(), dir.to_string());
        members.push(strings(&["--hierarchy", "2x3", "--variant", &v, "--n", &n, "--k", &k, "--dir", &d]));
    }
    for (i, m) in members.iter().enumerate() {
        pipeline(dir.path(), &format!("m{i}"), m)?;
    }

    let good = dir.path().join("m0.p4.json");
    let text = fs::read_to_string(&good).map_err(|e| e.to_string())?;
    let mut value: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let coeff = &mut value["y"]["num"][1];
    let perturbed = format!("{}1", coeff.as_str().unwrap_or("0"));
    *coeff = serde_json::Value::String(perturbed);
    let bad = dir.path().join("mutated.json");
    fs::write(&bad, value.to_string()).map_err(|e| e.to_string())?;
    let code = p4rat(&["verify", "--input", bad.to_str().unwrap(), "--kind", "p4"])?;
    ensure(code == 1, || format!("mutated input gave exit {code}"))?;
    Ok(format!("{} pipelines, mutation exits 1", members.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("hierarchy soundness, -2x family", Duration::from_secs(60), criterion_1),
        ("hierarchy soundness, -1/x family", Duration::from_secs(60), criterion_2),
        ("hierarchy soundness, -2x/3 family", Duration::from_secs(120), criterion_3),
        ("seed data and shifts", Duration::MAX, criterion_4),
        ("group relations", Duration::from_secs(120), criterion_5),
        ("closure of length-4 words", Duration::MAX, criterion_6),
        ("hamiltonian equivalence", Duration::MAX, criterion_7),
        ("miura square root", Duration::MAX, criterion_8),
        ("dressing chain", Duration::MAX, criterion_9),
        ("cli round-trip", Duration::MAX, criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; exceeded {}s", limit.as_secs())),
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  criterion {:>2}: {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name} ({secs:.2}s)\n      {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
