//! The small-groups catalog format, and classification of catalog entries.
//!
//! ```text
//! # comment
//! group 24.12 degree=4
//! gen 2,1,3,4
//! gen 2,3,4,1
//! ```
//!
//! Records are separated by blank lines; generator lines list 1-based images.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::cd_lattice;
use crate::normal::has_property_a;
use crate::numtheory::{excluded_order, ExclusionWitness};
use crate::perm::Permutation;

pub const BUNDLED_CATALOG: &str = include_str!("../../../data/smallgroups-1-50.cat");

#[derive(Debug)]
pub struct CatalogEntry {
    pub order: usize,
    pub index: usize,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub group: Group,
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        format!("{}.{}", self.order, self.index)
    }
}

#[derive(Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub warnings: Vec<String>,
}

impl Catalog {
    pub fn bundled() -> Catalog {
        parse_catalog_str(BUNDLED_CATALOG).expect("bundled catalog is valid")
    }

    pub fn get(&self, order: usize, index: usize) -> Option<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.order == order && e.index == index)
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order == order)
    }

    pub fn in_range(&self, orders: &RangeInclusive<usize>) -> Vec<&CatalogEntry> {
        let mut v: Vec<&CatalogEntry> = self
            .entries
            .iter()
            .filter(|e| orders.contains(&e.order))
            .collect();
        v.sort_by_key(|e| (e.order, e.index));
        v
    }
}

pub fn parse_catalog(path: &Path) -> Result<Catalog> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_catalog_str(&text)
}

struct Pending {
    line: usize,
    order: usize,
    index: usize,
    degree: usize,
    generators: Vec<Permutation>,
}

pub fn parse_catalog_str(text: &str) -> Result<Catalog> {
    let mut cat = Catalog::default();
    let mut seen = HashSet::new();
    let mut pending: Option<Pending> = None;

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim_end();
        let parse_err = |msg: String| Error::Parse { line: lineno, msg };
        if line.starts_with('#') {
            continue;
        }
        if line.trim().is_empty() {
            if let Some(p) = pending.take() {
                finish(&mut cat, &mut seen, p)?;
            }
            continue;
        }
        if let Some(rest) = line.strip_prefix("group ") {
            if let Some(p) = pending.take() {
                finish(&mut cat, &mut seen, p)?;
            }
            pending = Some(parse_header(rest).map_err(parse_err)?);
            pending.as_mut().expect("just set").line = lineno;
        } else if let Some(rest) = line.strip_prefix("gen ") {
            let p = pending
                .as_mut()
                .ok_or_else(|| parse_err("generator line outside a group record".into()))?;
            let images = rest
                .split(',')
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<Vec<usize>, _>>()
                .map_err(|e| parse_err(format!("bad image list: {e}")))?;
            if images.len() != p.degree {
                return Err(parse_err(format!(
                    "generator has {} images but degree is {}",
                    images.len(),
                    p.degree
                )));
            }
            let perm =
                Permutation::from_one_based(&images).map_err(|e| parse_err(e.to_string()))?;
            p.generators.push(perm);
        } else {
            return Err(parse_err(format!("unrecognized line `{line}`")));
        }
    }
    if let Some(p) = pending.take() {
        finish(&mut cat, &mut seen, p)?;
    }
    if cat.entries.is_empty() {
        cat.warnings.push("catalog contains no entries".into());
    }
    Ok(cat)
}

fn parse_header(rest: &str) -> std::result::Result<Pending, String> {
    let mut parts = rest.split_whitespace();
    let id = parts.next().ok_or("missing <order>.<index>")?;
    let deg = parts.next().ok_or("missing degree=<d>")?;
    if parts.next().is_some() {
        return Err("trailing text after degree".into());
    }
    let (o, i) = id.split_once('.').ok_or("id must be <order>.<index>")?;
    let order: usize = o.parse().map_err(|_| format!("bad order `{o}`"))?;
    let index: usize = i.parse().map_err(|_| format!("bad index `{i}`"))?;
    let degree: usize = deg
        .strip_prefix("degree=")
        .ok_or("expected degree=<d>")?
        .parse()
        .map_err(|_| format!("bad degree in `{deg}`"))?;
    if order == 0 || index == 0 || degree == 0 {
        return Err("order, index and degree must be positive".into());
    }
    Ok(Pending {
        line: 0,
        order,
        index,
        degree,
        generators: Vec::new(),
    })
}

fn finish(cat: &mut Catalog, seen: &mut HashSet<(usize, usize)>, p: Pending) -> Result<()> {
    if !seen.insert((p.order, p.index)) {
        return Err(Error::DuplicateEntry {
            order: p.order,
            index: p.index,
        });
    }
    let group = match Group::generate(p.degree, p.generators.clone()) {
        Ok(g) => g,
        Err(Error::GroupTooLarge { partial, .. }) => {
            return Err(Error::OrderMismatch {
                order: p.order,
                index: p.index,
                computed: partial,
            })
        }
        Err(e) => {
            return Err(Error::Parse {
                line: p.line,
                msg: e.to_string(),
            })
        }
    };
    if group.order() != p.order {
        return Err(Error::OrderMismatch {
            order: p.order,
            index: p.index,
            computed: group.order(),
        });
    }
    cat.entries.push(CatalogEntry {
        order: p.order,
        index: p.index,
        degree: p.degree,
        generators: p.generators,
        group,
    });
    Ok(())
}

/// One record in catalog format, without a trailing blank line.
pub fn format_entry(order: usize, index: usize, g: &Group) -> String {
    let mut s = format!("group {order}.{index} degree={}\n", g.degree());
    for gen in g.generators() {
        let imgs: Vec<String> = gen
            .one_based_images()
            .iter()
            .map(|x| x.to_string())
            .collect();
        let _ = writeln!(s, "gen {}", imgs.join(","));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub order: usize,
    pub index: usize,
    pub m_star: u64,
    pub cd_size: usize,
    pub cd_simple: bool,
    pub property_a: bool,
    pub excluded_by_thm23: bool,
    #[serde(skip)]
    pub witness: Option<ExclusionWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassSummary {
    pub groups: usize,
    pub cd_simple: usize,
    pub nontrivial_cd_simple: usize,
    pub property_a: usize,
    pub excluded_by_thm23: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub records: Vec<ClassRecord>,
    pub summary: ClassSummary,
}

impl ClassificationReport {
    pub fn cd_simple_ids(&self) -> Vec<(usize, usize)> {
        self.records
            .iter()
            .filter(|r| r.cd_simple)
            .map(|r| (r.order, r.index))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("id        m*        |CD|  cd_simple  property_a  excluded\n");
        for r in &self.records {
            let id = format!("{}.{}", r.order, r.index);
            let _ = write!(
                s,
                "{id:<9} {:<9} {:<5} {:<10} {:<11} {}",
                r.m_star,
                r.cd_size,
                yes_no(r.cd_simple),
                yes_no(r.property_a),
                yes_no(r.excluded_by_thm23)
            );
            if let Some(e) = &r.error {
                let _ = write!(s, "  error: {e}");
            }
            s.push('\n');
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "{} groups, {} CD-simple ({} nontrivial), {} with Property A, {} with excluded order, {} errors",
            m.groups, m.cd_simple, m.nontrivial_cd_simple, m.property_a, m.excluded_by_thm23, m.errors
        );
        s
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn classify_entry(e: &CatalogEntry) -> ClassRecord {
    let g = &e.group;
    let lattice = cd_lattice(g);
    let cd_simple = lattice.len() <= 2
        && lattice.members[lattice.least].is_trivial()
        && g.is_whole(&lattice.members[lattice.greatest]);
    let (witness, error) = match excluded_order(g.order() as u64) {
        Ok(w) => (w, None),
        Err(err) => (None, Some(err.to_string())),
    };
    ClassRecord {
        order: e.order,
        index: e.index,
        m_star: lattice.max_measure,
        cd_size: lattice.len(),
        cd_simple,
        property_a: has_property_a(g).holds,
        excluded_by_thm23: witness.is_some(),
        witness,
        error,
    }
}

/// Classifies the entries with order in `orders`, in (order, index)
/// sequence, spreading the work over the available cores.
pub fn classify_orders(cat: &Catalog, orders: RangeInclusive<usize>) -> ClassificationReport {
    let entries = cat.in_range(&orders);
    let slots: Vec<Mutex<Option<ClassRecord>>> = entries.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(entries.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= entries.len() {
                    break;
                }
                let rec = classify_entry(entries[i]);
                *slots[i].lock().expect("no poisoned slots") = Some(rec);
            });
        }
    });
    let records: Vec<ClassRecord> = slots
        .into_iter()
        .map(|m| {
            m.into_inner()
                .expect("no poisoned slots")
                .expect("every slot filled")
        })
        .collect();
    let summary = ClassSummary {
        groups: records.len(),
        cd_simple: records.iter().filter(|r| r.cd_simple).count(),
        nontrivial_cd_simple: records
            .iter()
            .filter(|r| r.cd_simple && r.order > 1)
            .count(),
        property_a: records.iter().filter(|r| r.property_a).count(),
        excluded_by_thm23: records.iter().filter(|r| r.excluded_by_thm23).count(),
        errors: records.iter().filter(|r| r.error.is_some()).count(),
    };
    ClassificationReport { records, summary }
}

/// Parses `A..B` (inclusive) or a single order `A`.
pub fn parse_order_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::InvalidParameters(format!("order range `{s}` is not A..B"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let a: usize = s.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}
