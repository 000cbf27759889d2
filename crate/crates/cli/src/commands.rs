use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use painleve::hamilton::{frame_from_rho, verify_hamilton, HamiltonianFrame};
use painleve::ratfun::parse_rat;
use painleve::solutions::{
    build_multiplet, gen_1x, gen_2x, gen_2x3, verify_p4, verify_rho, verify_rho_third_order,
    verify_symmetric, HierarchyMember, P4Solution, RhoSolution, Sign, SymMultiplet, Variant,
};
use painleve::weyl::{act_multiplet, check_relations, OrbitStep, VTriple, Word};
use painleve::{BigRat, Error, Report};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use crate::records::{frame_latex, multiplet_latex, p4_latex, rho_latex, SolutionRecord};
use crate::{Format, Hierarchy, Kind, MemberArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Residual = 1,
    Domain = 2,
    Parse = 3,
    Degenerate = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

type Outcome = Result<Status, Failure>;

fn fail(status: Status, message: impl Into<String>) -> Failure {
    Failure {
        status,
        message: message.into(),
    }
}

fn domain(message: impl Into<String>) -> Failure {
    fail(Status::Domain, message)
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => Status::Parse,
            Error::DegenerateStep { .. } => Status::Degenerate,
            _ => Status::Domain,
        };
        fail(status, e.to_string())
    }
}

fn io_failure(e: io::Error) -> Failure {
    domain(format!("I/O error: {e}"))
}

fn status_of(passed: bool) -> Status {
    if passed {
        Status::Ok
    } else {
        Status::Residual
    }
}

fn read_values(path: &Path) -> Result<Vec<Value>, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_failure)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| domain(format!("cannot read {}: {e}", path.display())))?
    };
    let values = serde_json::Deserializer::from_str(&text)
        .into_iter::<Value>()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| fail(Status::Parse, format!("malformed JSON in {}: {e}", path.display())))?;
    if values.is_empty() {
        return Err(fail(Status::Parse, format!("no JSON values in {}", path.display())));
    }
    Ok(values)
}

/// Decodes `v` as `T`, falling back to a generated record mapped through `from_record`.
fn decode<T: DeserializeOwned>(
    v: &Value,
    what: &str,
    from_record: Option<fn(&SolutionRecord) -> T>,
) -> Result<T, Failure> {
    let direct = serde_json::from_value::<T>(v.clone());
    match (direct, from_record) {
        (Ok(t), _) => Ok(t),
        (Err(e), Some(f)) => serde_json::from_value::<SolutionRecord>(v.clone())
            .map(|r| f(&r))
            .map_err(|_| fail(Status::Parse, format!("not a {what}: {e}"))),
        (Err(e), None) => Err(fail(Status::Parse, format!("not a {what}: {e}"))),
    }
}

fn writer(out: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(
            fs::File::create(p).map_err(|e| domain(format!("cannot create {}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit<T: Serialize>(w: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(|e| domain(e.to_string()))?;
    writeln!(w, "{line}").map_err(io_failure)
}

fn parse_variant(v: Option<&str>) -> Result<Variant, Failure> {
    v.ok_or_else(|| domain("--variant is required for this hierarchy"))?
        .parse()
        .map_err(Failure::from)
}

fn parse_sign(s: &str, flag: &str) -> Result<Sign, Failure> {
    s.parse().map_err(|_| domain(format!("{flag} must be + or -, got {s:?}")))
}

fn index(value: Option<i64>, name: &str, min: i64) -> Result<u32, Failure> {
    let v = value.ok_or_else(|| domain(format!("--{name} is required")))?;
    if v < min {
        return Err(domain(format!("{name} ≥ {min} required")));
    }
    u32::try_from(v).map_err(|_| domain(format!("{name} is too large")))
}

pub fn build_member(args: &MemberArgs) -> Result<HierarchyMember, Failure> {
    let member = match args.hierarchy {
        Hierarchy::TwoX | Hierarchy::TwoXHat => gen_2x(
            index(args.k, "k", 1)?,
            index(args.n, "n", 0)?,
            args.hierarchy == Hierarchy::TwoXHat,
        ),
        Hierarchy::OneX | Hierarchy::OneXHat => gen_1x(
            index(args.k, "k", 1)?,
            index(args.n, "n", 0)?,
            parse_variant(args.variant.as_deref())?,
            args.hierarchy == Hierarchy::OneXHat,
        ),
        Hierarchy::TwoXThird => {
            let dir = args.dir.as_deref().ok_or_else(|| domain("--dir is required for 2x3"))?;
            gen_2x3(
                parse_variant(args.variant.as_deref())?,
                index(args.n, "n", 0)?,
                index(args.k, "k", 0)?,
                parse_sign(dir, "--dir")?,
            )
        }
    };
    Ok(member?)
}

pub fn generate(args: &MemberArgs, out: Option<&Path>, format: Format) -> Outcome {
    let m = build_member(args)?;
    let reports = [
        verify_p4(&m.y)?,
        verify_rho(&m.rho, &BigRat::from_integer(0.into())),
        verify_rho_third_order(&m.rho),
        m.verify_forms(),
    ];
    let record = SolutionRecord::new(&m, &reports);
    let mut w = writer(out)?;
    match format {
        Format::Json => emit(&mut w, &record)?,
        Format::Latex => {
            writeln!(w, "{}", rho_latex(&m.rho)).map_err(io_failure)?;
            writeln!(w, "{}", p4_latex(&m.y)).map_err(io_failure)?;
        }
    }
    w.flush().map_err(io_failure)?;
    if !record.passed {
        for r in &reports {
            for c in r.failures() {
                eprintln!("nonzero residual in {}: {} = {}", r.subject, c.name, c.residual);
            }
        }
    }
    Ok(status_of(record.passed))
}

pub fn verify(input: &Path, kind: Kind, c: &str) -> Outcome {
    let c = parse_rat(c)?;
    let mut passed = true;
    let stdout = io::stdout();
    let mut w = stdout.lock();
    for v in read_values(input)? {
        let reports: Vec<Report> = match kind {
            Kind::P4 => vec![verify_p4(&decode::<P4Solution>(&v, "Painlevé IV solution", Some(SolutionRecord::p4_solution))?)?],
            Kind::Rho => {
                let r = decode::<RhoSolution>(&v, "rho solution", Some(SolutionRecord::rho_solution))?;
                vec![verify_rho(&r, &c), verify_rho_third_order(&r)]
            }
            Kind::Multiplet => vec![verify_symmetric(&decode::<SymMultiplet>(&v, "multiplet", None)?)],
            Kind::Frame => vec![verify_hamilton(&decode::<HamiltonianFrame>(&v, "Hamiltonian frame", None)?)],
        };
        for r in reports {
            passed &= r.passed();
            write!(w, "{r}").map_err(io_failure)?;
        }
    }
    Ok(status_of(passed))
}

fn stream(seed: &SymMultiplet, v: &VTriple, word: &str, out: Option<&Path>) -> Outcome {
    let word: Word = word.parse()?;
    let mut w = writer(out)?;
    let mut passed = verify_symmetric(seed).passed();
    emit(
        &mut w,
        &OrbitStep {
            step: 0,
            letter: None,
            multiplet: seed.clone(),
            v: v.clone(),
            verified: passed,
        },
    )?;
    let (mut m, mut p) = (seed.clone(), v.clone());
    for (index, &letter) in word.letters().iter().enumerate() {
        let next = act_multiplet(letter, &m, &p);
        (m, p) = match next {
            Ok(x) => x,
            Err(e) => {
                w.flush().map_err(io_failure)?;
                return Err(fail(
                    Status::Degenerate,
                    format!("degenerate step {index} ({letter}): {e}"),
                ));
            }
        };
        let verified = verify_symmetric(&m).passed();
        passed &= verified;
        emit(
            &mut w,
            &OrbitStep {
                step: index + 1,
                letter: Some(letter.to_string()),
                multiplet: m.clone(),
                v: p.clone(),
                verified,
            },
        )?;
    }
    w.flush().map_err(io_failure)?;
    Ok(status_of(passed))
}

fn single_multiplet(input: &Path) -> Result<(SymMultiplet, VTriple), Failure> {
    let values = read_values(input)?;
    if values.len() != 1 {
        return Err(domain(format!("expected one multiplet, found {} values", values.len())));
    }
    let m = decode::<SymMultiplet>(&values[0], "multiplet", None)?;
    let v = VTriple::from_alphas(&m.alpha)?;
    Ok((m, v))
}

pub fn transform(input: &Path, word: &str, out: Option<&Path>) -> Outcome {
    let (m, v) = single_multiplet(input)?;
    stream(&m, &v, word, out)
}

fn seed_multiplet(member: Option<&MemberArgs>) -> Result<(SymMultiplet, VTriple), Failure> {
    let rho = match member {
        Some(args) => build_member(args)?.rho,
        None => RhoSolution::seed(),
    };
    let mu = rho.mu(Sign::Plus)?;
    Ok((build_multiplet(&rho, Sign::Plus)?, VTriple::from_mu_nu(&mu, &rho.nu)))
}

pub fn orbit(member: Option<&MemberArgs>, word: &str, out: Option<&Path>) -> Outcome {
    let (m, v) = seed_multiplet(member)?;
    stream(&m, &v, word, out)
}

fn random_triple(rng: &mut StdRng) -> VTriple {
    let mut q = || BigRat::new(rng.gen_range(-40i64..=40).into(), rng.gen_range(1i64..=12).into());
    let (a, b) = (q(), q());
    let c = -(&a + &b);
    VTriple::new(a, b, c).expect("components sum to zero")
}

pub fn relations(input: Option<&Path>, random: usize, seed: u64, format: Format) -> Outcome {
    let (m, v) = match input {
        Some(p) => single_multiplet(p)?,
        None => seed_multiplet(None)?,
    };
    let mut reports = vec![check_relations(Some(&m), &v)?];
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..random {
        reports.push(check_relations(None, &random_triple(&mut rng))?);
    }
    let mut w = writer(None)?;
    for r in &reports {
        match format {
            Format::Json => emit(&mut w, r)?,
            Format::Latex => write!(w, "{r}").map_err(io_failure)?,
        }
    }
    w.flush().map_err(io_failure)?;
    Ok(status_of(reports.iter().all(Report::passed)))
}

pub fn export(input: &Path, kind: Kind, format: Format, epsilon: &str, out: Option<&Path>) -> Outcome {
    let epsilon = parse_sign(epsilon, "--epsilon")?;
    let mut w = writer(out)?;
    for v in read_values(input)? {
        let line = match kind {
            Kind::P4 => {
                let s = decode::<P4Solution>(&v, "Painlevé IV solution", Some(SolutionRecord::p4_solution))?;
                render(&s, format, p4_latex)?
            }
            Kind::Rho => {
                let r = decode::<RhoSolution>(&v, "rho solution", Some(SolutionRecord::rho_solution))?;
                render(&r, format, rho_latex)?
            }
            Kind::Multiplet => {
                let r = decode::<RhoSolution>(&v, "rho solution", Some(SolutionRecord::rho_solution))?;
                render(&build_multiplet(&r, Sign::Plus)?, format, multiplet_latex)?
            }
            Kind::Frame => {
                let r = decode::<RhoSolution>(&v, "rho solution", Some(SolutionRecord::rho_solution))?;
                render(&frame_from_rho(&r, epsilon, Sign::Plus)?, format, frame_latex)?
            }
        };
        writeln!(w, "{line}").map_err(io_failure)?;
    }
    w.flush().map_err(io_failure)?;
    Ok(Status::Ok)
}

fn render<T: Serialize>(value: &T, format: Format, latex: fn(&T) -> String) -> Result<String, Failure> {
    match format {
        Format::Json => serde_json::to_string(value).map_err(|e| domain(e.to_string())),
        Format::Latex => Ok(latex(value)),
    }
}
