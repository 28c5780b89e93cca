//! Classification of Drinfeld super Yangians of type A up to superalgebra
//! isomorphism and up to Hopf superalgebra isomorphism, with explicit
//! generator-level isomorphisms that can be checked on the defining relations.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{HPoly, Rational};
use crate::rootdata::{ParityDiagram, RootDataError, RootSystem};
use crate::yangian::{
    minimalistic_violation, Caps, Evaluator, Kind, RelationCheck, RelationId, YElement, YLetter, Yangian, YangianError,
};

/// Errors raised by the classification module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// The two diagrams are not related by the requested kind of isomorphism.
    #[error("{kind} does not map {source_diagram} to {target}: {reason}")]
    Incompatible {
        /// Requested kind.
        kind: IsoKind,
        /// Source diagram.
        source_diagram: String,
        /// Target diagram.
        target: String,
        /// Which condition fails.
        reason: String,
    },
    /// A diagram could not be built.
    #[error(transparent)]
    RootData(#[from] RootDataError),
    /// Yangian arithmetic failed.
    #[error(transparent)]
    Yangian(#[from] YangianError),
}

/// The kinds of generator-level isomorphisms between super Yangians.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "vertex")]
pub enum IsoKind {
    /// Every generator to its namesake in the same diagram.
    Identity,
    /// Transport by the even simple reflection at a vertex (0-based); the
    /// parity pattern is unchanged and generators keep their labels.
    EvenReflection(usize),
    /// Reversal of the diagram: vertex `j` goes to `|I| − 1 − j` (0-based).
    Reversal,
    /// Flip of every parity: `x⁺_j ↦ (−1)^{1+|α_j|} x⁻_j`, `x⁻_j ↦ x⁺_j`.
    ParitySwap,
    /// Parity flip followed by reversal.
    ParitySwapReversal,
}

impl IsoKind {
    /// Stable name.
    pub fn name(self) -> String {
        match self {
            IsoKind::Identity => "identity".into(),
            IsoKind::EvenReflection(i) => format!("even-reflection-{}", i + 1),
            IsoKind::Reversal => "reversal".into(),
            IsoKind::ParitySwap => "parity-swap".into(),
            IsoKind::ParitySwapReversal => "parity-swap-reversal".into(),
        }
    }

    /// Parses a name produced by [`IsoKind::name`].
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "identity" => Some(IsoKind::Identity),
            "reversal" => Some(IsoKind::Reversal),
            "parity-swap" => Some(IsoKind::ParitySwap),
            "parity-swap-reversal" => Some(IsoKind::ParitySwapReversal),
            _ => {
                let i: usize = s.strip_prefix("even-reflection-")?.parse().ok()?;
                i.checked_sub(1).map(IsoKind::EvenReflection)
            }
        }
    }

    /// Whether the kind exchanges `x⁺` and `x⁻`.
    pub fn swaps_parity(self) -> bool {
        matches!(self, IsoKind::ParitySwap | IsoKind::ParitySwapReversal)
    }

    /// Whether the kind reverses the vertex order.
    pub fn reverses(self) -> bool {
        matches!(self, IsoKind::Reversal | IsoKind::ParitySwapReversal)
    }

    /// The diagram that this kind produces from `d`.
    pub fn transport(self, d: &ParityDiagram) -> ParityDiagram {
        let d = if self.swaps_parity() { d.swapped() } else { d.clone() };
        if self.reverses() {
            d.reversed()
        } else {
            d
        }
    }
}

impl fmt::Display for IsoKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Family of a generator `h_{j,r}`, `x⁺_{j,r}` or `x⁻_{j,r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `h_{j,r}`.
    H,
    /// `x⁺_{j,r}`.
    Plus,
    /// `x⁻_{j,r}`.
    Minus,
}

impl Family {
    fn kind(self) -> Kind {
        match self {
            Family::H => Kind::Cartan,
            Family::Plus => Kind::Plus,
            Family::Minus => Kind::Minus,
        }
    }

    fn of(kind: Kind) -> Self {
        match kind {
            Kind::Cartan => Family::H,
            Kind::Plus => Family::Plus,
            Kind::Minus => Family::Minus,
        }
    }
}

/// Image of the generators `g_{j,r}` of one family and vertex, for every level `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorImage {
    /// Source family.
    pub family: Family,
    /// Source vertex (0-based).
    pub vertex: usize,
    /// Target family.
    pub target_family: Family,
    /// Target vertex (0-based).
    pub target_vertex: usize,
    /// Sign in front of the target generator.
    pub sign: i8,
}

impl fmt::Display for GeneratorImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |fam: Family, j: usize| match fam {
            Family::H => format!("h[{},r]", j + 1),
            Family::Plus => format!("x+[{},r]", j + 1),
            Family::Minus => format!("x-[{},r]", j + 1),
        };
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{} -> {sign}{}", name(self.family, self.vertex), name(self.target_family, self.target_vertex))
    }
}

/// A generator-level isomorphism between the super Yangians of two diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoSpec {
    /// Kind.
    pub kind: IsoKind,
    /// Source diagram.
    pub source: ParityDiagram,
    /// Target diagram.
    pub target: ParityDiagram,
    /// One entry per family and source vertex.
    pub table: Vec<GeneratorImage>,
}

impl IsoSpec {
    /// The image of a simple-root letter of the source, as a sign and a target letter.
    pub fn image(&self, l: &YLetter) -> Option<(i8, YLetter)> {
        if l.lo != l.hi {
            return None;
        }
        let fam = Family::of(l.kind);
        let e = self.table.iter().find(|e| e.family == fam && e.vertex == usize::from(l.lo))?;
        let j = e.target_vertex as u8;
        Some((e.sign, YLetter { kind: e.target_family.kind(), lo: j, hi: j, level: l.level }))
    }
}

fn incompatible(kind: IsoKind, d1: &ParityDiagram, d2: &ParityDiagram, reason: impl Into<String>) -> ClassifyError {
    ClassifyError::Incompatible {
        kind,
        source_diagram: d1.to_eo_string(),
        target: d2.to_eo_string(),
        reason: reason.into(),
    }
}

/// Builds the generator table of an isomorphism of the given kind from `d1` to `d2`,
/// after checking that the Cartan matrices are related as the kind requires.
pub fn build_iso(kind: IsoKind, d1: &ParityDiagram, d2: &ParityDiagram) -> Result<IsoSpec, ClassifyError> {
    if d1.len() != d2.len() {
        return Err(incompatible(kind, d1, d2, "different lengths"));
    }
    let (r1, r2) = (RootSystem::new(d1.clone()), RootSystem::new(d2.clone()));
    let n = r1.rank();
    if let IsoKind::EvenReflection(i) = kind {
        if i >= n {
            return Err(incompatible(kind, d1, d2, format!("vertex {} out of range", i + 1)));
        }
        if r1.simple_parity(i) != 0 {
            return Err(incompatible(kind, d1, d2, format!("simple root {} is odd", i + 1)));
        }
        if d1 != d2 {
            return Err(incompatible(kind, d1, d2, "an even reflection fixes the parity pattern"));
        }
    }
    let target_vertex = |j: usize| if kind.reverses() { n - 1 - j } else { j };
    let cartan_sign = if kind.swaps_parity() { -1 } else { 1 };
    for i in 0..n {
        if r1.simple_parity(i) != r2.simple_parity(target_vertex(i)) {
            return Err(incompatible(kind, d1, d2, format!("simple root {} changes parity", i + 1)));
        }
        for j in 0..n {
            if r1.c(i, j) != cartan_sign * r2.c(target_vertex(i), target_vertex(j)) {
                return Err(incompatible(kind, d1, d2, format!("Cartan entry ({}, {}) does not match", i + 1, j + 1)));
            }
        }
    }
    let mut table = Vec::with_capacity(3 * n);
    for j in 0..n {
        let t = target_vertex(j);
        let even_sign = if r1.simple_parity(j) == 0 { -1 } else { 1 };
        let image =
            |family, target_family, sign| GeneratorImage { family, vertex: j, target_family, target_vertex: t, sign };
        table.push(image(Family::H, Family::H, 1));
        if kind.swaps_parity() {
            table.push(image(Family::Plus, Family::Minus, even_sign));
            table.push(image(Family::Minus, Family::Plus, 1));
        } else {
            table.push(image(Family::Plus, Family::Plus, 1));
            table.push(image(Family::Minus, Family::Minus, 1));
        }
    }
    Ok(IsoSpec { kind, source: d1.clone(), target: d2.clone(), table })
}

/// Evaluates source expressions in the target algebra through a generator table.
struct IsoEvaluator<'a> {
    spec: &'a IsoSpec,
    source: &'a Yangian,
    target: &'a Yangian,
}

impl Evaluator for IsoEvaluator<'_> {
    type Value = YElement;

    fn generator(&self, l: YLetter) -> Result<YElement, YangianError> {
        let (sign, t) = self.spec.image(&l).ok_or_else(|| YangianError::UnknownGenerator(format!("{l:?}")))?;
        Ok(YElement::letter(t).scale(&Rational::from_integer(i64::from(sign).into())))
    }

    fn scalar(&self, c: &HPoly) -> YElement {
        Evaluator::scalar(self.target, c)
    }

    fn add(&self, a: &YElement, b: &YElement) -> YElement {
        a.add(b)
    }

    fn scale(&self, a: &YElement, c: &HPoly) -> YElement {
        a.scale_poly(c, self.target.cap())
    }

    fn mul(&self, a: &YElement, b: &YElement) -> YElement {
        self.target.mul(a, b)
    }

    fn letter_parity(&self, l: &YLetter) -> u8 {
        self.source.letter_parity(l)
    }
}

/// Outcome of checking an isomorphism on the defining relations.
#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    /// The isomorphism.
    pub spec: IsoSpec,
    /// Degree cap.
    pub degree: u32,
    /// Length cap.
    pub length: usize,
    /// Number of relation instances checked.
    pub checked: usize,
    /// Instances whose image does not vanish.
    pub failures: Vec<RelationCheck>,
}

impl IsoReport {
    /// True when every image vanished.
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Maps every defining relation of the source with levels inside the caps
/// through the generator table and normalizes it in the target.
pub fn verify_iso(spec: &IsoSpec, caps: Caps) -> Result<IsoReport, ClassifyError> {
    let source = Yangian::new(&spec.source, caps)?;
    let target = Yangian::new(&spec.target, caps)?;
    let mut rels = Vec::new();
    for id in RelationId::DEFINING {
        rels.extend(source.relation_instances(id)?);
    }
    let eval = IsoEvaluator { spec, source: &source, target: &target };
    let checks: Vec<RelationCheck> = rels
        .par_iter()
        .map(|rel| {
            let d = eval.eval(&rel.difference())?.project_length(caps.length);
            Ok(RelationCheck {
                relation: rel.id.name(),
                label: rel.label.clone(),
                holds: d.is_zero(),
                defect: if d.is_zero() { String::new() } else { target.render(&d) },
            })
        })
        .collect::<Result<_, YangianError>>()?;
    Ok(IsoReport {
        spec: spec.clone(),
        degree: caps.degree,
        length: caps.length,
        checked: checks.len(),
        failures: checks.into_iter().filter(|c| !c.holds).collect(),
    })
}

/// All diagrams with the same numbers of even and odd entries as `d`; their
/// Yangians are isomorphic as superalgebras.
pub fn superalgebra_class(d: &ParityDiagram) -> Vec<ParityDiagram> {
    ParityDiagram::all_with_counts(d.n_even(), d.n_odd())
}

/// Whether the parity flip and its reversal are available as Hopf moves at `d`:
/// equal numbers of even and odd entries and every simple root odd.
pub fn parity_swap_allowed(d: &ParityDiagram) -> bool {
    d.n_even() == d.n_odd() && d.simple_root_parities().iter().all(|&p| p == 1)
}

/// One member of a Hopf class together with a chain of isomorphisms from the class root.
#[derive(Clone, Debug, Serialize)]
pub struct HopfMember {
    /// The diagram.
    pub diagram: ParityDiagram,
    /// Isomorphisms leading from the root of the class to this member.
    pub witness: Vec<IsoSpec>,
    /// The first violated constraint of the minimalistic presentation, if any.
    /// Such members are classified under the same coproduct formulas.
    pub constraint: Option<String>,
}

/// A class of diagrams whose super Yangians are connected by Hopf isomorphisms.
#[derive(Clone, Debug, Serialize)]
pub struct HopfClass {
    /// The diagram the class was generated from.
    pub root: ParityDiagram,
    /// Members in lexicographic order, each with a witness chain.
    pub members: Vec<HopfMember>,
    /// Relabelling automorphisms of the root from its even simple reflections.
    pub relabelings: Vec<IsoSpec>,
    /// Number of odd simple roots shared by all members.
    pub odd_simple_roots: usize,
}

impl HopfClass {
    /// The member diagrams.
    pub fn diagrams(&self) -> Vec<ParityDiagram> {
        self.members.iter().map(|m| m.diagram.clone()).collect()
    }

    /// Whether `d` belongs to the class.
    pub fn contains(&self, d: &ParityDiagram) -> bool {
        self.members.iter().any(|m| &m.diagram == d)
    }

    /// Every isomorphism emitted by the class.
    pub fn isomorphisms(&self) -> Vec<IsoSpec> {
        let mut out = self.relabelings.clone();
        for m in &self.members {
            for w in &m.witness {
                if !out.contains(w) {
                    out.push(w.clone());
                }
            }
        }
        out
    }
}

/// The orbit of `d` under reversal and, where allowed, the parity flip and
/// its reversal, with a witness chain for every member.
pub fn hopf_class(d: &ParityDiagram) -> Result<HopfClass, ClassifyError> {
    let mut seen: BTreeMap<ParityDiagram, Vec<IsoSpec>> = BTreeMap::new();
    seen.insert(d.clone(), Vec::new());
    let mut queue = VecDeque::from([d.clone()]);
    while let Some(cur) = queue.pop_front() {
        let mut kinds = vec![IsoKind::Reversal];
        if parity_swap_allowed(&cur) {
            kinds.extend([IsoKind::ParitySwap, IsoKind::ParitySwapReversal]);
        }
        for kind in kinds {
            let next = kind.transport(&cur);
            if seen.contains_key(&next) {
                continue;
            }
            let mut chain = seen[&cur].clone();
            chain.push(build_iso(kind, &cur, &next)?);
            seen.insert(next.clone(), chain);
            queue.push_back(next);
        }
    }
    let relabelings = d
        .simple_root_parities()
        .iter()
        .enumerate()
        .filter(|(_, &p)| p == 0)
        .map(|(i, _)| build_iso(IsoKind::EvenReflection(i), d, d))
        .collect::<Result<_, _>>()?;
    let members = seen
        .into_iter()
        .map(|(diagram, witness)| {
            let constraint = minimalistic_violation(&diagram.simple_root_parities());
            HopfMember { diagram, witness, constraint }
        })
        .collect();
    Ok(HopfClass { root: d.clone(), members, relabelings, odd_simple_roots: d.odd_simple_count() })
}

/// Partition of all diagrams with `n_even` even and `n_odd` odd entries into Hopf classes,
/// ordered by their smallest member.
pub fn hopf_classes(n_even: usize, n_odd: usize) -> Result<Vec<HopfClass>, ClassifyError> {
    let mut out: Vec<HopfClass> = Vec::new();
    for d in ParityDiagram::all_with_counts(n_even, n_odd) {
        if out.iter().any(|c| c.contains(&d)) {
            continue;
        }
        out.push(hopf_class(&d)?);
    }
    Ok(out)
}

/// Result of comparing two diagrams as Hopf superalgebras.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Distinction {
    /// Different numbers of simple roots.
    DifferentRank {
        /// Ranks of the two diagrams.
        ranks: (usize, usize),
    },
    /// Different numbers of odd simple roots, an invariant of Hopf isomorphism.
    Distinct {
        /// Odd simple root counts.
        odd_counts: (usize, usize),
    },
    /// Connected by the listed isomorphisms.
    SameClass {
        /// Chain from the first diagram to the second.
        witness: Vec<IsoSpec>,
    },
    /// Same odd count but not connected by reversal or the parity flip.
    NotConnected {
        /// The shared odd simple root count.
        odd_count: usize,
    },
}

/// Compares two diagrams: an invariant that separates them, a witness chain
/// that connects them, or neither.
pub fn hopf_distinguisher(d1: &ParityDiagram, d2: &ParityDiagram) -> Result<Distinction, ClassifyError> {
    if d1.rank() != d2.rank() {
        return Ok(Distinction::DifferentRank { ranks: (d1.rank(), d2.rank()) });
    }
    let (a, b) = (d1.odd_simple_count(), d2.odd_simple_count());
    if a != b {
        return Ok(Distinction::Distinct { odd_counts: (a, b) });
    }
    let class = hopf_class(d1)?;
    Ok(match class.members.into_iter().find(|m| &m.diagram == d2) {
        Some(m) => Distinction::SameClass { witness: m.witness },
        None => Distinction::NotConnected { odd_count: a },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> ParityDiagram {
        ParityDiagram::parse(s).unwrap()
    }

    #[test]
    fn kind_names_round_trip() {
        for k in [
            IsoKind::Identity,
            IsoKind::EvenReflection(2),
            IsoKind::Reversal,
            IsoKind::ParitySwap,
            IsoKind::ParitySwapReversal,
        ] {
            assert_eq!(IsoKind::parse(&k.name()), Some(k));
        }
        assert_eq!(IsoKind::parse("even-reflection-0"), None);
    }

    #[test]
    fn reversal_table() {
        let spec = build_iso(IsoKind::Reversal, &d("EEO"), &d("OEE")).unwrap();
        let (s, l) = spec.image(&YLetter::h(0, 3)).unwrap();
        assert_eq!((s, l), (1, YLetter::h(1, 3)));
    }

    #[test]
    fn parity_swap_signs() {
        let spec = build_iso(IsoKind::ParitySwap, &d("EEO"), &d("OOE")).unwrap();
        assert_eq!(spec.image(&YLetter::xp(0, 1)).unwrap(), (-1, YLetter::xm(0, 1)));
        assert_eq!(spec.image(&YLetter::xp(1, 0)).unwrap(), (1, YLetter::xm(1, 0)));
        assert_eq!(spec.image(&YLetter::xm(0, 2)).unwrap(), (1, YLetter::xp(0, 2)));
    }

    #[test]
    fn incompatible_diagrams_are_refused() {
        assert!(build_iso(IsoKind::Reversal, &d("EEO"), &d("EOE")).is_err());
        assert!(build_iso(IsoKind::EvenReflection(1), &d("EEO"), &d("EEO")).is_err());
        assert!(build_iso(IsoKind::Identity, &d("EOOE"), &d("OEEO")).is_err());
    }
}
