//! One function per subcommand, each producing a [`Report`].

use std::fmt;

use gradalg_core::brackets::bracket_decompose;
use gradalg_core::center::cancel;
use gradalg_core::freealg::{GeneratorSet, NcPoly, Word};
use gradalg_core::groebner::{BoundedIdeal, ReductionSystem};
use gradalg_core::invariants::{
    central_elements, characters_enumerate, graded_fingerprint, is_normal_up_to, j_s, j_sequence, normal_lines_degree_one, tangent_profiles,
};
use gradalg_core::iso::{brute_force_graded_iso, skew_quotient_iso, IsoVerdict, ScalarSearch, Witness};
use gradalg_core::presentation::Presentation;
use gradalg_core::scalars::FieldSpec;
use gradalg_core::Error as CoreError;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::report::*;
use crate::textio::{parse_poly, print_presentation, ParseError};

/// Settings shared by every subcommand.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub degree: u32,
    pub budget: u128,
    pub seed: u64,
}

#[derive(Debug)]
pub enum CliError {
    Parse { source: String, error: ParseError },
    Core(CoreError),
    Io(String),
    Usage(String),
}

impl CliError {
    /// 2 for unreadable input, 3 for violated hypotheses, 4 for exhausted
    /// budgets and 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Core(CoreError::HypothesisViolated(_)) => 3,
            CliError::Core(CoreError::BudgetExceeded { .. }) => 4,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { source, error } => write!(f, "{source}:{error}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) | CliError::Usage(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn poly_arg(pres: &Presentation, text: &str) -> CliResult<NcPoly> {
    parse_poly(pres, text).map_err(|error| CliError::Parse { source: "<argument>".into(), error })
}

fn generator_arg(gens: &GeneratorSet, name: &str) -> CliResult<usize> {
    gens.index_of(name).ok_or_else(|| CliError::Usage(format!("unknown generator `{name}`")))
}

pub fn hilbert(pres: &Presentation, opts: &Options) -> CliResult<Report> {
    let rs = ReductionSystem::build(pres, opts.degree)?;
    Ok(Report::Hilbert(HilbertReport { hilbert: rs.hilbert(), truncation: opts.degree }))
}

pub fn gb(pres: &Presentation, opts: &Options) -> CliResult<Report> {
    let rs = ReductionSystem::build(pres, opts.degree)?;
    let gens = rs.gens();
    let rules = rs.rules().map(|(w, tail)| Rule { lhs: w.to_text(gens), rhs: tail.to_text(gens) }).collect();
    Ok(Report::Gb(GbReport { rules, truncation: opts.degree }))
}

pub fn characters(pres: &Presentation) -> CliResult<Report> {
    let characters = characters_enumerate(pres)?.iter().map(|c| scalar_row(c.point())).collect();
    Ok(Report::Characters(CharactersReport { characters }))
}

pub fn tangent(pres: &Presentation, depth: usize, opts: &Options) -> CliResult<Report> {
    let rs = ReductionSystem::build(pres, opts.degree)?;
    let profiles = tangent_profiles(&rs, depth)?
        .into_iter()
        .map(|t| Profile { point: scalar_row(t.character.point()), cotangent: t.cotangent, powers: t.powers })
        .collect();
    Ok(Report::Tangent(TangentReport { depth, profiles }))
}

fn ideal_parts(rs: &ReductionSystem, ideal: &BoundedIdeal) -> Vec<SubspaceReport> {
    (0..=rs.truncation()).map(|d| SubspaceReport::new(rs, d, &ideal.homogeneous_part(d))).collect()
}

/// `J_s` when `s` is given, otherwise `J_(profile)`.
pub fn js(pres: &Presentation, s: Option<usize>, profile: Option<Vec<usize>>, opts: &Options) -> CliResult<Report> {
    let rs = ReductionSystem::build(pres, opts.degree)?;
    let ideal = match (s, &profile) {
        (Some(s), None) => j_s(&rs, s)?,
        (None, Some(p)) => j_sequence(&rs, p)?,
        _ => return Err(CliError::Usage("give exactly one of --s and --profile".into())),
    };
    Ok(Report::Ideal(IdealReport {
        s,
        profile,
        truncation: opts.degree,
        dim: ideal.dim(),
        codim: ideal.codim(),
        parts: ideal_parts(&rs, &ideal),
    }))
}

/// Tests `element` for normality, or lists every normal line in degree one.
pub fn normal(pres: &Presentation, element: Option<&str>, opts: &Options) -> CliResult<Report> {
    let rs = ReductionSystem::build(pres, opts.degree)?;
    let gens = rs.gens();
    Ok(Report::Normal(match element {
        Some(text) => {
            let f = poly_arg(pres, text)?;
            let normal = is_normal_up_to(&rs, &f, opts.degree)?;
            NormalReport::Element { element: f.to_text(gens), bound: opts.degree, normal }
        }
        None => {
            let lines = normal_lines_degree_one(&rs, opts.degree, opts.budget)?;
            NormalReport::Lines { bound: opts.degree, normal_lines: lines.iter().map(|f| f.to_text(gens)).collect() }
        }
    }))
}

pub fn center(pres: &Presentation, degree: u32, opts: &Options) -> CliResult<Report> {
    let rs = ReductionSystem::build(pres, opts.degree)?;
    let space = central_elements(&rs, degree)?;
    let elements = space.basis().iter().map(|v| rs.poly_from_homogeneous(degree, v).to_text(rs.gens())).collect();
    Ok(Report::Center(CenterReport { part: SubspaceReport::new(&rs, degree, &space), elements }))
}

/// A random homogeneous element of degree `degree` with a handful of terms.
pub fn random_homogeneous(gens: &GeneratorSet, field: FieldSpec, degree: u32, rng: &mut StdRng) -> NcPoly {
    let n = gens.len();
    let mut f = NcPoly::zero();
    if n == 0 {
        return f;
    }
    for _ in 0..rng.gen_range(1..=6) {
        let letters: Vec<usize> = (0..degree).map(|_| rng.gen_range(0..n)).collect();
        let word: Word = gens.word(&letters).expect("letters in range");
        let c = field.from_i64(rng.gen_range(-5..=5));
        f = &f + &NcPoly::monomial(word, c);
    }
    f
}

/// Decomposes `poly`, or a random element of degree `random_degree`, into
/// powers of the distinguished generator times bracket polynomials.
pub fn brackets(
    pres: &Presentation,
    poly: Option<&str>,
    random_degree: Option<u32>,
    distinguished: &str,
    opts: &Options,
) -> CliResult<Report> {
    let gens = pres.gens();
    let d = generator_arg(gens, distinguished)?;
    let f = match (poly, random_degree) {
        (Some(text), None) => poly_arg(pres, text)?,
        (None, Some(m)) => random_homogeneous(gens, pres.field(), m, &mut StdRng::seed_from_u64(opts.seed)),
        _ => return Err(CliError::Usage("give exactly one of --poly and --random-degree".into())),
    };
    let dec = bracket_decompose(gens, &f, d)?;
    let verified = dec.expand(gens, pres.field())? == f;
    Ok(Report::Brackets(BracketsReport {
        input: f.to_text(gens),
        distinguished: distinguished.to_string(),
        degree: dec.degree(),
        parts: dec.parts().iter().map(|(s, p)| BracketPart { power: *s, part: p.to_text(gens) }).collect(),
        decomposition: dec.to_text(gens),
        verified,
    }))
}

pub fn fingerprint(pres: &Presentation, opts: &Options) -> CliResult<Report> {
    let rs = ReductionSystem::build(pres, opts.degree)?;
    let fp = graded_fingerprint(&rs, opts.budget)?;
    Ok(Report::Fingerprint(FingerprintReport {
        truncation: fp.truncation,
        hilbert: fp.hilbert,
        commutator_dims: fp.commutator_dims,
        normal_line_count: fp.normal_line_count,
        cotangent_multiset: fp.cotangent_multiset,
    }))
}

fn iso_report(v: IsoVerdict) -> Report {
    let mut r = IsoReport { isomorphic: v.isomorphic, sigma: None, scalars: None, matrix: None, checked_degree: v.checked_degree };
    match v.witness {
        Some(Witness::Elementary(c)) => {
            r.sigma = Some(c.sigma().iter().map(|i| i + 1).collect());
            r.scalars = Some(scalar_row(c.scalars()));
        }
        Some(Witness::Linear(m)) => r.matrix = Some(m.iter().map(|row| scalar_row(row)).collect()),
        None => {}
    }
    Report::Iso(r)
}

/// Skew-quotient isomorphism test, or exhaustive search over linear maps
/// with `brute_force`.
pub fn iso(a: &Presentation, b: &Presentation, brute_force: bool, opts: &Options) -> CliResult<Report> {
    let verdict = if brute_force {
        brute_force_graded_iso(a, b, opts.degree)?
    } else {
        let search = ScalarSearch::default_for(a.field(), a.num_gens(), opts.budget);
        skew_quotient_iso(a, b, opts.degree, &search)?
    };
    Ok(iso_report(verdict))
}

pub fn cancel_central(pres: &Presentation, count: usize, opts: &Options) -> CliResult<Report> {
    let back = cancel(pres, count, opts.degree)?;
    let rs = ReductionSystem::build(&back, opts.degree)?;
    Ok(Report::Cancel(CancelReport { presentation: print_presentation(&back), hilbert: rs.hilbert(), truncation: opts.degree }))
}
