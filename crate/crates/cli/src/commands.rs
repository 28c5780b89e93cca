//! Command implementations.

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use superyangian::classify::{hopf_classes, superalgebra_class, verify_iso, HopfClass, IsoReport, IsoSpec};
use superyangian::enveloping::UEAlgebra;
use superyangian::exact::{fmt_rational, Rational, TruncSeries};
use superyangian::loopmap::{
    check_ge_identity, g_series, hbar_over_q_difference, q_difference, qnumber_series, sqrt_hbar_over_q_difference,
    GeReport, LoopError, LoopGenerator, LoopMap, LoopRelationId, Sign,
};
use superyangian::rootdata::{Bialgebra, ParityDiagram, RootSystem, SuperMatrixAlg};
use superyangian::weyl;
use superyangian::yangian::{Caps, HopfMode, RelationCheck, RelationId, YElement, YLetter, Yangian, YangianError};

use crate::output::{print_json, Check, Report};
use crate::{
    CapArgs, CheckCmd, ClassifyCmd, ClassifyMode, Cli, CliError, Command, DiagramCmd, Format, PhiCmd, SeriesCmd,
    SeriesName, SignChoice, Suite, VerifyCmd, YangianCmd,
};

/// Runs the parsed command; `Ok(false)` means a check failed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Diagram(cmd) => diagram(cmd, f),
        Command::Cartan(d) => cartan(&parse_diagram(&d.diagram)?, f),
        Command::Roots(d) => roots(&parse_diagram(&d.diagram)?, f),
        Command::Weyl(d) => weyl_cmd(&parse_diagram(&d.diagram)?, f),
        Command::Verify(cmd) => verify(cmd, f),
        Command::Classify(cmd) => classify(cmd, f),
        Command::Series(cmd) => series(cmd, f),
        Command::Phi(cmd) => phi(cmd, f),
        Command::Check { what: CheckCmd::Ge { a, sign, order, parity } } => check_ge(a, *sign, *order, *parity, f),
        Command::Yangian { what } => yangian(what, f),
    }
}

fn parse_diagram(s: &str) -> Result<ParityDiagram, CliError> {
    Ok(ParityDiagram::parse(s)?)
}

fn caps(c: &CapArgs) -> Result<Caps, CliError> {
    let len = usize::try_from(c.len).map_err(|_| CliError::Usage(format!("length cap {} is too large", c.len)))?;
    Ok(Caps::new(c.cap, len))
}

fn build_yangian(d: &ParityDiagram, c: &CapArgs, assume_hopf: bool) -> Result<Yangian, CliError> {
    let mode = if assume_hopf { HopfMode::Assumed } else { HopfMode::Constrained };
    Ok(Yangian::with_mode(d, caps(c)?, mode)?)
}

fn flags(group: &str, checks: Vec<(String, bool)>) -> Vec<Check> {
    checks.into_iter().map(|(label, holds)| Check::flag(group, label, holds)).collect()
}

fn relation_checks(checks: Vec<RelationCheck>) -> Vec<Check> {
    checks.into_iter().map(|c| Check { group: c.relation, label: c.label, holds: c.holds, defect: c.defect }).collect()
}

#[derive(Serialize)]
struct DiagramInfo {
    diagram: ParityDiagram,
    n_even: usize,
    n_odd: usize,
    rank: usize,
    simple_root_parities: Vec<u8>,
    odd_simple_roots: usize,
}

fn diagram_info(d: &ParityDiagram) -> DiagramInfo {
    DiagramInfo {
        diagram: d.clone(),
        n_even: d.n_even(),
        n_odd: d.n_odd(),
        rank: d.rank(),
        simple_root_parities: d.simple_root_parities(),
        odd_simple_roots: d.odd_simple_count(),
    }
}

fn diagram(cmd: &DiagramCmd, f: Format) -> Result<bool, CliError> {
    if let Some(mn) = &cmd.distinguished {
        let d = ParityDiagram::distinguished(mn[0], mn[1])?;
        match f {
            Format::Plain => println!("{d}"),
            Format::Json => print_json(&diagram_info(&d))?,
        }
    } else if let (Some(np), Some(nm)) = (cmd.np, cmd.nm) {
        let all = ParityDiagram::all_with_counts(np, nm);
        match f {
            Format::Plain => {
                for d in &all {
                    println!("{d}");
                }
            }
            Format::Json => print_json(&all)?,
        }
    } else if let Some(s) = &cmd.diagram {
        let info = diagram_info(&parse_diagram(s)?);
        match f {
            Format::Plain => {
                println!("diagram {}", info.diagram);
                println!("even entries {}, odd entries {}, rank {}", info.n_even, info.n_odd, info.rank);
                println!("simple root parities {:?}", info.simple_root_parities);
            }
            Format::Json => print_json(&info)?,
        }
    } else {
        return Err(CliError::Usage("give --distinguished M N, --np/--nm or --diagram".to_string()));
    }
    Ok(true)
}

fn matrix_string(m: &[Vec<i64>]) -> String {
    let rows: Vec<String> =
        m.iter().map(|r| format!("[{}]", r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", rows.join(","))
}

fn cartan(d: &ParityDiagram, f: Format) -> Result<bool, CliError> {
    let rs = RootSystem::new(d.clone());
    match f {
        Format::Plain => println!("{}", matrix_string(rs.cartan())),
        Format::Json => print_json(&rs.cartan())?,
    }
    Ok(true)
}

fn roots(d: &ParityDiagram, f: Format) -> Result<bool, CliError> {
    let summary = RootSystem::new(d.clone()).summary();
    match f {
        Format::Plain => {
            println!("positive roots of {}", summary.diagram);
            for r in &summary.positive_roots {
                let parity = if r.parity == 0 { "even" } else { "odd" };
                println!("{}  [{}]  height {}  {}", r.eps, r.interval, r.height, parity);
            }
        }
        Format::Json => print_json(&summary)?,
    }
    Ok(true)
}

fn weyl_cmd(d: &ParityDiagram, f: Format) -> Result<bool, CliError> {
    let s = weyl::summary(d);
    let ok = s.coxeter.iter().all(|c| c.pass);
    match f {
        Format::Plain => {
            println!("diagram {}", s.diagram);
            println!("W order {}, Wc order {}", s.weyl_order, s.complete_order);
            println!("simple reflection grades {:?}", s.simple_grades);
            for c in &s.coxeter {
                println!("{} {} {}", if c.pass { "PASS" } else { "FAIL" }, c.group, c.relation);
            }
        }
        Format::Json => print_json(&s)?,
    }
    Ok(ok)
}

fn verify(cmd: &VerifyCmd, f: Format) -> Result<bool, CliError> {
    let d = parse_diagram(&cmd.diagram.diagram)?;
    let name = match cmd.suite {
        Suite::Lie => "lie",
        Suite::Casimir => "casimir",
        Suite::Yangian => "yangian",
        Suite::Hopf => "hopf",
        Suite::Phi => "phi",
    };
    let mut report = Report::new(name);
    report.diagram = Some(d.to_string());
    match cmd.suite {
        Suite::Lie => {
            let alg = SuperMatrixAlg::new(RootSystem::new(d.clone()))?;
            let t = Instant::now();
            report.extend("presentation", flags("presentation", alg.check_presentation()), t.elapsed());
            let t = Instant::now();
            let checks = flags("bialgebra", Bialgebra::new(&alg).bialgebra_checks(2));
            report.extend("bialgebra", checks, t.elapsed());
        }
        Suite::Casimir => {
            let alg = SuperMatrixAlg::new(RootSystem::new(d.clone()))?;
            let t = Instant::now();
            report.extend("casimir", flags("casimir", Bialgebra::new(&alg).casimir_checks()), t.elapsed());
            let t = Instant::now();
            let checks = UEAlgebra::for_casimir(alg).omega_plus_checks()?;
            report.extend("omega-plus", flags("omega-plus", checks), t.elapsed());
        }
        Suite::Yangian => {
            let y = build_yangian(&d, &cmd.caps, cmd.assume_hopf)?;
            set_caps(&mut report, &y);
            let t = Instant::now();
            let mut checks = Vec::new();
            for id in RelationId::all() {
                match y.verify_relations(&[id]) {
                    Ok(c) => checks.extend(relation_checks(c)),
                    Err(YangianError::Constraint { reason, .. }) => {
                        report.notes.push(format!("{} not checked: {reason}", id.name()));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            report.extend("relations", checks, t.elapsed());
            let t = Instant::now();
            let counts = y
                .graded_table()
                .into_iter()
                .map(|row| Check {
                    group: "pbw-count".to_string(),
                    label: format!("degree {} length {}", row.degree, row.length),
                    holds: row.enumerated == row.generating,
                    defect: if row.enumerated == row.generating {
                        String::new()
                    } else {
                        format!("{} ordered monomials, generating function {}", row.enumerated, row.generating)
                    },
                })
                .collect();
            report.extend("pbw-count", counts, t.elapsed());
            let t = Instant::now();
            let cells = match y.certify_straightening() {
                Ok(cells) => cells
                    .into_iter()
                    .map(|c| Check::flag("straightening", format!("weight {:?} degree {}", c.weight, c.degree), true))
                    .collect(),
                Err(e @ YangianError::Certification { .. }) => {
                    vec![Check {
                        group: "straightening".to_string(),
                        label: "cells".to_string(),
                        holds: false,
                        defect: e.to_string(),
                    }]
                }
                Err(e) => return Err(e.into()),
            };
            report.extend("straightening", cells, t.elapsed());
        }
        Suite::Hopf => {
            let y = build_yangian(&d, &cmd.caps, cmd.assume_hopf)?;
            set_caps(&mut report, &y);
            match y.hopf_available() {
                Err(YangianError::Constraint { reason, .. }) => report.skip(reason),
                Err(e) => return Err(e.into()),
                Ok(()) => {
                    let t = Instant::now();
                    report.extend("hopf", relation_checks(y.hopf_checks()?), t.elapsed());
                }
            }
        }
        Suite::Phi => {
            let y = build_yangian(&d, &cmd.caps, cmd.assume_hopf)?;
            set_caps(&mut report, &y);
            match LoopMap::new(&y) {
                Err(LoopError::Constraint { vertex, .. }) => {
                    report.skip(format!("odd vertex {vertex} has an odd neighbour"));
                }
                Err(e) => return Err(e.into()),
                Ok(map) => {
                    let modes: Vec<i64> = (-cmd.modes.abs()..=cmd.modes.abs()).collect();
                    for id in LoopRelationId::all() {
                        let t = Instant::now();
                        let checks = map
                            .verify(&map.instances(id, &modes))?
                            .into_iter()
                            .map(|c| Check {
                                group: id.name().to_string(),
                                label: c.label,
                                holds: c.holds,
                                defect: c.defect,
                            })
                            .collect();
                        report.extend(id.name(), checks, t.elapsed());
                    }
                }
            }
        }
    }
    report.emit(f)
}

fn set_caps(report: &mut Report, y: &Yangian) {
    report.degree_cap = Some(y.caps().degree);
    report.length_cap = Some(y.caps().length);
}

#[derive(Serialize)]
struct ClassMember {
    diagram: ParityDiagram,
    /// Kinds of the isomorphisms leading from the first member.
    witness: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    constraint: Option<String>,
}

#[derive(Serialize)]
struct ClassOut {
    diagrams: Vec<ParityDiagram>,
    #[serde(skip_serializing_if = "Option::is_none")]
    odd_simple_roots: Option<usize>,
    members: Vec<ClassMember>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    relabelings: Vec<String>,
}

#[derive(Serialize)]
struct IsoCheckOut {
    kind: String,
    source: ParityDiagram,
    target: ParityDiagram,
    checked: usize,
    holds: bool,
    failures: Vec<RelationCheck>,
}

#[derive(Serialize)]
struct ClassifyOut {
    mode: &'static str,
    np: usize,
    nm: usize,
    classes: Vec<ClassOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<Vec<IsoCheckOut>>,
}

fn hopf_class_out(c: &HopfClass) -> ClassOut {
    ClassOut {
        diagrams: c.diagrams(),
        odd_simple_roots: Some(c.odd_simple_roots),
        members: c
            .members
            .iter()
            .map(|m| ClassMember {
                diagram: m.diagram.clone(),
                witness: m.witness.iter().map(|w| w.kind.name()).collect(),
                constraint: m.constraint.clone(),
            })
            .collect(),
        relabelings: c.relabelings.iter().map(|r| r.kind.name()).collect(),
    }
}

fn classify(cmd: &ClassifyCmd, f: Format) -> Result<bool, CliError> {
    if cmd.np + cmd.nm < 2 {
        return Err(CliError::Usage("a diagram needs at least two entries".to_string()));
    }
    let (mode, classes, specs): (&str, Vec<ClassOut>, Vec<IsoSpec>) = match cmd.mode {
        ClassifyMode::Hopf => {
            let classes = hopf_classes(cmd.np, cmd.nm)?;
            let specs = classes.iter().flat_map(HopfClass::isomorphisms).collect();
            ("hopf", classes.iter().map(hopf_class_out).collect(), specs)
        }
        ClassifyMode::Super => {
            let all = ParityDiagram::all_with_counts(cmd.np, cmd.nm);
            let class = match all.first() {
                Some(d) => {
                    let members = superalgebra_class(d);
                    vec![ClassOut {
                        diagrams: members.clone(),
                        odd_simple_roots: None,
                        members: members
                            .into_iter()
                            .map(|m| ClassMember { diagram: m, witness: Vec::new(), constraint: None })
                            .collect(),
                        relabelings: Vec::new(),
                    }]
                }
                None => Vec::new(),
            };
            ("super", class, Vec::new())
        }
    };
    let verification = if cmd.verify {
        let caps = caps(&cmd.caps)?;
        let reports: Vec<IsoReport> = specs.iter().map(|s| verify_iso(s, caps)).collect::<Result<_, _>>()?;
        Some(
            reports
                .into_iter()
                .map(|r| IsoCheckOut {
                    kind: r.spec.kind.name(),
                    source: r.spec.source.clone(),
                    target: r.spec.target.clone(),
                    checked: r.checked,
                    holds: r.failures.is_empty(),
                    failures: r.failures,
                })
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let ok = verification.as_ref().map_or(true, |v| v.iter().all(|r| r.holds));
    let out = ClassifyOut { mode, np: cmd.np, nm: cmd.nm, classes, verification };
    match f {
        Format::Json => print_json(&out)?,
        Format::Plain => {
            for c in &out.classes {
                let members: Vec<String> = c
                    .members
                    .iter()
                    .map(|m| {
                        let mut s = m.diagram.to_string();
                        if !m.witness.is_empty() {
                            s.push_str(&format!(" ({})", m.witness.join(" then ")));
                        }
                        if m.constraint.is_some() {
                            s.push_str(" [outside the minimalistic range]");
                        }
                        s
                    })
                    .collect();
                match c.odd_simple_roots {
                    Some(k) => println!("{{{}}}  odd simple roots: {k}", members.join(", ")),
                    None => println!("{{{}}}", members.join(", ")),
                }
            }
            if let Some(v) = &out.verification {
                for r in v {
                    let status = if r.holds { "PASS" } else { "FAIL" };
                    println!("{status} {} {} -> {} ({} relations)", r.kind, r.source, r.target, r.checked);
                }
            }
        }
    }
    Ok(ok)
}

#[derive(Serialize)]
struct SeriesOut {
    series: String,
    order: u32,
    value: String,
}

fn series(cmd: &SeriesCmd, f: Format) -> Result<bool, CliError> {
    let (name, s): (String, TruncSeries) = match cmd.name {
        SeriesName::G => ("G".into(), g_series(cmd.order)?),
        SeriesName::Qd => ("qd".into(), q_difference(cmd.order)?),
        SeriesName::HbarOverQd => ("hbar-over-qd".into(), hbar_over_q_difference(cmd.order)?),
        SeriesName::SqrtHbarOverQd => ("sqrt-hbar-over-qd".into(), sqrt_hbar_over_q_difference(cmd.order)?),
        SeriesName::Qnumber => (format!("qnumber({})", cmd.n), qnumber_series(cmd.n, cmd.order)?),
    };
    let out = SeriesOut { series: name, order: cmd.order, value: s.canonical_string() };
    match f {
        Format::Plain => println!("{}", out.value),
        Format::Json => print_json(&out)?,
    }
    Ok(true)
}

#[derive(Serialize)]
struct PhiOut {
    diagram: ParityDiagram,
    generator: String,
    degree_cap: u32,
    length_cap: usize,
    image: String,
}

fn phi(cmd: &PhiCmd, f: Format) -> Result<bool, CliError> {
    let d = parse_diagram(&cmd.diagram.diagram)?;
    let y = build_yangian(&d, &cmd.caps, false)?;
    let gen = LoopGenerator::from_str(&cmd.gen)?;
    let map = LoopMap::new(&y)?;
    let image = map.phi(gen)?;
    let out = PhiOut {
        diagram: d,
        generator: gen.to_string(),
        degree_cap: y.caps().degree,
        length_cap: y.caps().length,
        image: y.render(&image),
    };
    match f {
        Format::Plain => println!("Phi({}) = {}", out.generator, out.image),
        Format::Json => print_json(&out)?,
    }
    Ok(true)
}

fn check_ge(a: &str, sign: SignChoice, order: u32, parity: i8, f: Format) -> Result<bool, CliError> {
    let a = Rational::from_str(a.trim()).map_err(|_| CliError::Usage(format!("`{a}` is not an exact rational")))?;
    let signs = match sign {
        SignChoice::Plus => vec![Sign::Plus],
        SignChoice::Minus => vec![Sign::Minus],
        SignChoice::Both => vec![Sign::Plus, Sign::Minus],
    };
    let reports: Vec<GeReport> =
        signs.into_iter().map(|s| check_ge_identity(&a, s, parity, order)).collect::<Result<_, _>>()?;
    let ok = reports.iter().all(|r| r.holds);
    match f {
        Format::Json => print_json(&reports)?,
        Format::Plain => {
            for r in &reports {
                let sign = match r.sign {
                    Sign::Plus => "plus",
                    Sign::Minus => "minus",
                };
                let status = if r.holds { "PASS" } else { "FAIL" };
                println!("{status} exchange identity, a = {}, sign {sign}, order {}", fmt_rational(&r.a), r.order);
                if !r.holds {
                    println!("  lhs: {}", r.lhs);
                    println!("  rhs: {}", r.rhs);
                }
            }
        }
    }
    Ok(ok)
}

fn parse_relations(s: &str) -> Result<Vec<RelationId>, CliError> {
    match s.trim() {
        "all" => Ok(RelationId::all()),
        "defining" => Ok(RelationId::DEFINING.to_vec()),
        "minimal" => Ok(RelationId::minimal()),
        list => list
            .split(',')
            .map(|n| RelationId::parse(n.trim()).ok_or_else(|| CliError::Usage(format!("unknown relation `{n}`"))))
            .collect(),
    }
}

#[derive(Serialize)]
struct DeltaOut {
    diagram: ParityDiagram,
    generator: String,
    degree_cap: u32,
    length_cap: usize,
    coproduct: String,
}

fn yangian(cmd: &YangianCmd, f: Format) -> Result<bool, CliError> {
    match cmd {
        YangianCmd::Verify { diagram, relations, caps } => {
            let d = parse_diagram(&diagram.diagram)?;
            let ids = parse_relations(relations)?;
            let y = build_yangian(&d, caps, false)?;
            let mut report = Report::new("yangian-relations");
            report.diagram = Some(d.to_string());
            set_caps(&mut report, &y);
            let t = Instant::now();
            report.extend("relations", relation_checks(y.verify_relations(&ids)?), t.elapsed());
            report.emit(f)
        }
        YangianCmd::Delta { diagram, gen, caps, assume_hopf } => {
            let d = parse_diagram(&diagram.diagram)?;
            let y = build_yangian(&d, caps, *assume_hopf)?;
            let letter = YLetter::from_str(gen)?;
            let delta = y.coproduct(&YElement::letter(letter))?;
            let out = DeltaOut {
                diagram: d,
                generator: letter.to_string(),
                degree_cap: y.caps().degree,
                length_cap: y.caps().length,
                coproduct: y.render_tensor(&delta),
            };
            match f {
                Format::Plain => println!("Delta({}) = {}", out.generator, out.coproduct),
                Format::Json => print_json(&out)?,
            }
            Ok(true)
        }
    }
}
