use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{
    idealization, localize, multiplicative_closure, quotient, ConstructionError, GradedModule, Idealization, ModuleError,
    LocalizationMap,
};
use crate::elements::ElementSet;
use crate::graded::{GradedRing, GradingError};
use crate::group::{FiniteGroup, GroupError};
use crate::ideal::IdealError;
use crate::lattice::{enumerate_graded_ideals, EnumerationOptions};
use crate::ring::{FiniteRing, RingError};
use crate::ringspec::{self, SpecError};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("ring order cap {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("seed {path}: ring of order {order} exceeds the corpus cap {cap}")]
    SeedTooLarge { path: PathBuf, order: usize, cap: usize },
    #[error("seed {path}: {source}")]
    SeedRead { path: PathBuf, source: std::io::Error },
    #[error("seed {path}: {source}")]
    SeedParse { path: PathBuf, source: SpecError },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupChoice {
    Trivial,
    Z2,
    Z3,
    Z4,
    Klein4,
}

impl GroupChoice {
    fn group(self) -> FiniteGroup {
        match self {
            GroupChoice::Trivial => FiniteGroup::trivial(),
            GroupChoice::Z2 => FiniteGroup::cyclic(2).expect("small cyclic group"),
            GroupChoice::Z3 => FiniteGroup::cyclic(3).expect("small cyclic group"),
            GroupChoice::Z4 => FiniteGroup::cyclic(4).expect("small cyclic group"),
            GroupChoice::Klein4 => FiniteGroup::klein4(),
        }
    }

    fn label(self) -> &'static str {
        match self {
            GroupChoice::Trivial => "1",
            GroupChoice::Z2 => "Z_2",
            GroupChoice::Z3 => "Z_3",
            GroupChoice::Z4 => "Z_4",
            GroupChoice::Klein4 => "K_4",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Families {
    pub zmod: bool,
    pub products: bool,
    pub polyquot: bool,
    pub group_rings: bool,
    pub idealizations: bool,
    pub quotients: bool,
    pub localizations: bool,
}

impl Default for Families {
    fn default() -> Self {
        Self {
            zmod: true,
            products: true,
            polyquot: true,
            group_rings: true,
            idealizations: true,
            quotients: true,
            localizations: true,
        }
    }
}

impl Families {
    pub fn none() -> Self {
        Self {
            zmod: false,
            products: false,
            polyquot: false,
            group_rings: false,
            idealizations: false,
            quotients: false,
            localizations: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    pub max_ring_order: usize,
    pub groups: Vec<GroupChoice>,
    pub families: Families,
    pub seeds: Vec<PathBuf>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        Self {
            max_ring_order: 32,
            groups: vec![
                GroupChoice::Trivial,
                GroupChoice::Z2,
                GroupChoice::Z3,
                GroupChoice::Z4,
                GroupChoice::Klein4,
            ],
            families: Families::default(),
            seeds: Vec::new(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Origin {
    Base,
    Seed(PathBuf),
    Quotient { base: usize, ideal: ElementSet },
    Localization { base: usize, map: Arc<LocalizationMap> },
    Idealization(Arc<Idealization>),
}

impl Origin {
    pub fn kind(&self) -> &'static str {
        match self {
            Origin::Base => "base",
            Origin::Seed(_) => "seed",
            Origin::Quotient { .. } => "quotient",
            Origin::Localization { .. } => "localization",
            Origin::Idealization(_) => "idealization",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub ring: Arc<GradedRing>,
    pub origin: Origin,
}

#[derive(Debug, Clone)]
pub struct Corpus {
    spec: CorpusSpec,
    entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn spec(&self) -> &CorpusSpec {
        &self.spec
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, kind: &str) -> usize {
        self.entries.iter().filter(|e| e.origin.kind() == kind).count()
    }
}

impl fmt::Display for Corpus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            writeln!(f, "{i:4}  {:<13} order {:<3} {}", e.origin.kind(), e.ring.order(), e.name)?;
        }
        Ok(())
    }
}

fn graded(ring: FiniteRing, group: FiniteGroup, components: Vec<ElementSet>) -> Result<Arc<GradedRing>, CorpusError> {
    Ok(Arc::new(GradedRing::new(ring, group, components)?))
}

fn trivial(ring: FiniteRing) -> Arc<GradedRing> {
    Arc::new(GradedRing::trivially_graded(ring))
}

/// Z_n[x]/(x^d - c) with deg x = 1 in Z_k, k >= d, so that x^i sits in
/// degree i and x^d = c must vanish unless k = d.
fn monomial_graded(n: usize, d: usize, c: usize, k: usize) -> Result<Arc<GradedRing>, CorpusError> {
    let mut poly = vec![0; d + 1];
    poly[0] = (n - c) % n;
    poly[d] = 1;
    let ring = FiniteRing::polyquot(n, &poly)?;
    let order = ring.order();
    let components = (0..k)
        .map(|g| {
            if g < d {
                let step = n.pow(g as u32);
                ElementSet::from_elements(order, (0..n).map(|a| a * step))
            } else {
                ElementSet::singleton(order, 0)
            }
        })
        .collect();
    graded(ring, FiniteGroup::cyclic(k)?, components)
}

/// Z_n[G], graded by G with deg g = g. Element Σ c_g g has index Σ c_g n^g.
fn group_ring(n: usize, group: &FiniteGroup) -> Result<Arc<GradedRing>, CorpusError> {
    let k = group.order();
    let order = n.pow(k as u32);
    let coeffs = |mut x: usize| {
        let mut c = vec![0; k];
        for slot in c.iter_mut() {
            *slot = x % n;
            x /= n;
        }
        c
    };
    let pack = |c: &[usize]| c.iter().rev().fold(0, |acc, &x| acc * n + x);
    let decoded: Vec<Vec<usize>> = (0..order).map(coeffs).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in &decoded {
        for b in &decoded {
            let s: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % n).collect();
            add.push(pack(&s));
            let mut p = vec![0; k];
            for (g, &ag) in a.iter().enumerate() {
                for (h, &bh) in b.iter().enumerate() {
                    let gh = group.mul(g, h);
                    p[gh] = (p[gh] + ag * bh) % n;
                }
            }
            mul.push(pack(&p));
        }
    }
    let one = n.pow(group.identity() as u32);
    let ring = FiniteRing::from_tables(order, add, mul, 0, one)?;
    let components = (0..k)
        .map(|g| ElementSet::from_elements(order, (0..n).map(|c| c * n.pow(g as u32))))
        .collect();
    graded(ring, group.clone(), components)
}

fn format_set(set: &ElementSet) -> String {
    set.to_string()
}

pub fn build_corpus(spec: &CorpusSpec) -> Result<Corpus, CorpusError> {
    let cap = EnumerationOptions::default().max_order;
    if spec.max_ring_order > cap {
        return Err(CorpusError::CapExceeded {
            requested: spec.max_ring_order,
            cap,
        });
    }
    let max = spec.max_ring_order;
    let has = |g: GroupChoice| spec.groups.contains(&g);
    let fam = &spec.families;
    let mut bases: Vec<CorpusEntry> = Vec::new();
    let mut push_base = |name: String, ring: Arc<GradedRing>| {
        bases.push(CorpusEntry {
            name,
            ring,
            origin: Origin::Base,
        })
    };

    if has(GroupChoice::Trivial) {
        if fam.zmod {
            for n in 2..=max {
                push_base(format!("Z_{n}"), trivial(FiniteRing::zmod(n)?));
            }
        }
        if fam.products {
            for m in 2..=max {
                for n in m..=max {
                    if m * n <= max {
                        push_base(format!("Z_{m} x Z_{n}"), trivial(FiniteRing::product(&[m, n])?));
                    }
                }
            }
        }
    }
    if fam.polyquot {
        if has(GroupChoice::Z2) {
            for n in 2..=5 {
                if n * n > max {
                    continue;
                }
                for c in 0..n {
                    let name = if c == 0 {
                        format!("Z_{n}[x]/(x^2) graded by Z_2")
                    } else {
                        format!("Z_{n}[x]/(x^2-{c}) graded by Z_2")
                    };
                    push_base(name, monomial_graded(n, 2, c, 2)?);
                }
            }
        }
        if has(GroupChoice::Z3) {
            for n in 2..=3 {
                if n * n * n > max {
                    continue;
                }
                for c in 0..n {
                    let name = if c == 0 {
                        format!("Z_{n}[x]/(x^3) graded by Z_3")
                    } else {
                        format!("Z_{n}[x]/(x^3-{c}) graded by Z_3")
                    };
                    push_base(name, monomial_graded(n, 3, c, 3)?);
                }
            }
        }
        if has(GroupChoice::Z4) {
            for n in 2..=3 {
                if n * n * n <= max {
                    push_base(format!("Z_{n}[x]/(x^3) graded by Z_4"), monomial_graded(n, 3, 0, 4)?);
                }
            }
        }
    }
    if fam.group_rings {
        for choice in [GroupChoice::Z2, GroupChoice::Z3, GroupChoice::Z4, GroupChoice::Klein4] {
            if !has(choice) {
                continue;
            }
            let group = choice.group();
            for n in 2usize.. {
                match n.checked_pow(group.order() as u32) {
                    Some(order) if order <= max => {
                        push_base(format!("Z_{n}[{}] graded by {}", choice.label(), choice.label()), group_ring(n, &group)?)
                    }
                    _ => break,
                }
            }
        }
    }
    if fam.idealizations {
        if has(GroupChoice::Trivial) {
            for m in 2..=max {
                for n in 2..=m {
                    if m % n == 0 && m * n <= max {
                        let base = trivial(FiniteRing::zmod(m)?);
                        let module = GradedModule::cyclic(&base, n)?;
                        let x = Arc::new(idealization(&module)?);
                        bases.push(CorpusEntry {
                            name: format!("Z_{m}(+)Z_{n}"),
                            ring: Arc::clone(x.ring()),
                            origin: Origin::Idealization(x),
                        });
                    }
                }
            }
        }
        if has(GroupChoice::Z2) {
            for c in 0..2 {
                let base = monomial_graded(2, 2, c, 2)?;
                if base.order() * base.order() > max {
                    continue;
                }
                let x = Arc::new(idealization(&GradedModule::regular(&base))?);
                let r = if c == 0 { "Z_2[x]/(x^2)" } else { "Z_2[x]/(x^2-1)" };
                bases.push(CorpusEntry {
                    name: format!("{r}(+){r} graded by Z_2"),
                    ring: Arc::clone(x.ring()),
                    origin: Origin::Idealization(x),
                });
            }
        }
    }
    for path in &spec.seeds {
        let text = std::fs::read_to_string(path).map_err(|source| CorpusError::SeedRead {
            path: path.clone(),
            source,
        })?;
        let parsed = ringspec::parse(&text).map_err(|source| CorpusError::SeedParse {
            path: path.clone(),
            source,
        })?;
        if parsed.ring.order() > max {
            return Err(CorpusError::SeedTooLarge {
                path: path.clone(),
                order: parsed.ring.order(),
                cap: max,
            });
        }
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        bases.push(CorpusEntry {
            name,
            ring: parsed.ring,
            origin: Origin::Seed(path.clone()),
        });
    }

    let mut entries = bases.clone();
    for (index, base) in bases.iter().enumerate() {
        let ring = &base.ring;
        if fam.quotients {
            let inventory = enumerate_graded_ideals(ring)?;
            for p in inventory.proper().filter(|p| !p.is_zero()) {
                let q = quotient(p)?;
                entries.push(CorpusEntry {
                    name: format!("({}) / {}", base.name, format_set(p.elements())),
                    ring: Arc::clone(q.target()),
                    origin: Origin::Quotient {
                        base: index,
                        ideal: p.elements().clone(),
                    },
                });
            }
        }
        if fam.localizations {
            for s in localization_sets(ring) {
                let map = Arc::new(localize(ring, &s)?);
                entries.push(CorpusEntry {
                    name: format!("({}) localized at {}", base.name, format_set(&s)),
                    ring: Arc::clone(map.target()),
                    origin: Origin::Localization { base: index, map },
                });
            }
        }
    }
    Ok(Corpus {
        spec: spec.clone(),
        entries,
    })
}

/// Up to two multiplicative sets: the powers of the smallest homogeneous
/// unit other than 1, and of the smallest homogeneous non-nilpotent zero
/// divisor.
fn localization_sets(ring: &GradedRing) -> Vec<ElementSet> {
    let mut sets = Vec::new();
    let h = ring.homogeneous();
    if let Some(u) = h.iter().find(|&x| x != ring.one() && ring.is_regular(x)) {
        sets.push(multiplicative_closure(ring, &[u]));
    }
    let zero = ElementSet::singleton(ring.order(), ring.zero());
    if let Some(z) = h
        .iter()
        .find(|&x| !ring.is_regular(x) && ring.first_power_in(x, &zero).is_none())
    {
        sets.push(multiplicative_closure(ring, &[z]));
    }
    sets
}
