//! The line-oriented ring-spec text format.
//!
//! ```text
//! # comment
//! ring zmod 4 | ring product [2, 3] | ring polyquot modulus=2 poly=[0, 0, 1]
//! ring table order=N zero=Z one=O      followed by N `add [..]` and N `mul [..]` rows
//! group trivial | group cyclic K | group klein4
//! group table order=K identity=E       followed by K `group_row [..]` rows
//! component G [elements]               one per group element; optional when trivial
//! ideal NAME [generators]
//! mulset NAME [elements]
//! module zero | module self | module cyclic N
//! module table order=K zero=Z          followed by K `module_add [..]` rows,
//!                                      |R| `module_act [..]` rows and
//!                                      `module_component G [..]` lines
//! ```
//!
//! Polynomials list coefficients constant term first, leading 1 included.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::constructions::{GradedModule, ModuleError};
use crate::elements::ElementSet;
use crate::graded::{GradedRing, GradingError};
use crate::group::{FiniteGroup, GroupError, GroupKind};
use crate::ring::{FiniteRing, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid ring: {0}")]
    Ring(#[from] RingError),
    #[error("invalid group: {0}")]
    Group(#[from] GroupError),
    #[error("invalid grading: {0}")]
    Grading(#[from] GradingError),
    #[error("invalid module: {0}")]
    Module(#[from] ModuleError),
}

impl SpecError {
    /// Whether the text itself is malformed, as opposed to describing a
    /// structure that fails validation.
    pub fn is_syntax(&self) -> bool {
        matches!(self, SpecError::Syntax { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSet {
    pub name: String,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct RingSpec {
    pub ring: Arc<GradedRing>,
    pub module: Option<GradedModule>,
    pub ideals: Vec<NamedSet>,
    pub mulsets: Vec<NamedSet>,
}

impl RingSpec {
    pub fn ideal(&self, name: &str) -> Option<&[usize]> {
        self.ideals.iter().find(|s| s.name == name).map(|s| s.elements.as_slice())
    }

    pub fn mulset(&self, name: &str) -> Option<&[usize]> {
        self.mulsets.iter().find(|s| s.name == name).map(|s| s.elements.as_slice())
    }
}

#[derive(Debug, Clone)]
enum Value {
    Num(usize),
    List(Vec<usize>),
    Word(String),
}

#[derive(Debug)]
struct Args {
    line: usize,
    positional: Vec<Value>,
    named: BTreeMap<String, Value>,
}

fn syntax(line: usize, message: impl Into<String>) -> SpecError {
    SpecError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_list(line: usize, body: &str) -> Result<Vec<usize>, SpecError> {
    body.split([',', ' ', '\t'])
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| syntax(line, format!("`{t}` is not a non-negative integer")))
        })
        .collect()
}

fn parse_value(line: usize, text: &str) -> Result<Value, SpecError> {
    if let Some(body) = text.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| syntax(line, "unterminated list"))?;
        return Ok(Value::List(parse_list(line, body)?));
    }
    Ok(match text.parse::<usize>() {
        Ok(n) => Value::Num(n),
        Err(_) => Value::Word(text.to_string()),
    })
}

/// Splits on whitespace outside brackets.
fn tokens(line: usize, rest: &str) -> Result<Vec<String>, SpecError> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for c in rest.chars() {
        match c {
            '[' => {
                if depth > 0 {
                    return Err(syntax(line, "nested lists are not allowed"));
                }
                depth = 1;
                current.push(c);
            }
            ']' => {
                if depth == 0 {
                    return Err(syntax(line, "unmatched `]`"));
                }
                depth = 0;
                current.push(c);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if depth > 0 {
        return Err(syntax(line, "unterminated list"));
    }
    if !current.is_empty() {
        out.push(current);
    }
    Ok(out)
}

fn parse_args(line: usize, rest: &str) -> Result<Args, SpecError> {
    let mut args = Args {
        line,
        positional: Vec::new(),
        named: BTreeMap::new(),
    };
    for token in tokens(line, rest)? {
        match token.split_once('=') {
            Some((key, value)) if !token.starts_with('[') => {
                if key.is_empty() || value.is_empty() {
                    return Err(syntax(line, format!("malformed `{token}`")));
                }
                if args.named.insert(key.to_string(), parse_value(line, value)?).is_some() {
                    return Err(syntax(line, format!("`{key}` given twice")));
                }
            }
            _ => args.positional.push(parse_value(line, &token)?),
        }
    }
    Ok(args)
}

impl Args {
    fn num(&mut self, key: &str) -> Result<usize, SpecError> {
        match self.named.remove(key) {
            Some(Value::Num(n)) => Ok(n),
            Some(_) => Err(syntax(self.line, format!("`{key}` must be a number"))),
            None => Err(syntax(self.line, format!("missing `{key}=`"))),
        }
    }

    fn list(&mut self, key: &str) -> Result<Vec<usize>, SpecError> {
        match self.named.remove(key) {
            Some(Value::List(l)) => Ok(l),
            Some(_) => Err(syntax(self.line, format!("`{key}` must be a list"))),
            None => Err(syntax(self.line, format!("missing `{key}=`"))),
        }
    }

    fn finish(&self, positional: usize) -> Result<(), SpecError> {
        if let Some(key) = self.named.keys().next() {
            return Err(syntax(self.line, format!("unknown key `{key}`")));
        }
        if self.positional.len() != positional {
            return Err(syntax(
                self.line,
                format!("expected {positional} arguments, found {}", self.positional.len()),
            ));
        }
        Ok(())
    }

    fn pos_word(&self, i: usize) -> Result<&str, SpecError> {
        match self.positional.get(i) {
            Some(Value::Word(w)) => Ok(w),
            _ => Err(syntax(self.line, format!("argument {} must be a word", i + 1))),
        }
    }

    fn pos_num(&self, i: usize) -> Result<usize, SpecError> {
        match self.positional.get(i) {
            Some(Value::Num(n)) => Ok(*n),
            _ => Err(syntax(self.line, format!("argument {} must be a number", i + 1))),
        }
    }

    fn pos_list(&self, i: usize) -> Result<Vec<usize>, SpecError> {
        match self.positional.get(i) {
            Some(Value::List(l)) => Ok(l.clone()),
            _ => Err(syntax(self.line, format!("argument {} must be a list", i + 1))),
        }
    }
}

enum RingDecl {
    Zmod(usize),
    Product(Vec<usize>),
    PolyQuot(usize, Vec<usize>),
    Table { order: usize, zero: usize, one: usize },
}

enum GroupDecl {
    Trivial,
    Cyclic(usize),
    Klein4,
    Table { order: usize, identity: usize },
}

enum ModuleDecl {
    Zero,
    Regular,
    Cyclic(usize),
    Table { order: usize, zero: usize },
}

#[derive(Default)]
struct Draft {
    ring: Option<(usize, RingDecl)>,
    add_rows: Vec<(usize, Vec<usize>)>,
    mul_rows: Vec<(usize, Vec<usize>)>,
    group: Option<(usize, GroupDecl)>,
    group_rows: Vec<(usize, Vec<usize>)>,
    components: BTreeMap<usize, (usize, Vec<usize>)>,
    ideals: Vec<(usize, NamedSet)>,
    mulsets: Vec<(usize, NamedSet)>,
    module: Option<(usize, ModuleDecl)>,
    module_add_rows: Vec<(usize, Vec<usize>)>,
    module_act_rows: Vec<(usize, Vec<usize>)>,
    module_components: BTreeMap<usize, (usize, Vec<usize>)>,
}

pub fn parse(text: &str) -> Result<RingSpec, SpecError> {
    let mut draft = Draft::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let mut args = parse_args(line, rest)?;
        match keyword {
            "ring" => {
                if draft.ring.is_some() {
                    return Err(syntax(line, "duplicate `ring` line"));
                }
                let decl = match args.pos_word(0)? {
                    "zmod" => {
                        args.finish(2)?;
                        RingDecl::Zmod(args.pos_num(1)?)
                    }
                    "product" => {
                        args.finish(2)?;
                        RingDecl::Product(args.pos_list(1)?)
                    }
                    "polyquot" => {
                        let modulus = args.num("modulus")?;
                        let poly = args.list("poly")?;
                        args.finish(1)?;
                        RingDecl::PolyQuot(modulus, poly)
                    }
                    "table" => {
                        let order = args.num("order")?;
                        let zero = args.num("zero")?;
                        let one = args.num("one")?;
                        args.finish(1)?;
                        RingDecl::Table { order, zero, one }
                    }
                    other => return Err(syntax(line, format!("unknown ring form `{other}`"))),
                };
                draft.ring = Some((line, decl));
            }
            "add" | "mul" | "group_row" | "module_add" | "module_act" => {
                args.finish(1)?;
                let row = (line, args.pos_list(0)?);
                match keyword {
                    "add" => draft.add_rows.push(row),
                    "mul" => draft.mul_rows.push(row),
                    "group_row" => draft.group_rows.push(row),
                    "module_add" => draft.module_add_rows.push(row),
                    _ => draft.module_act_rows.push(row),
                }
            }
            "group" => {
                if draft.group.is_some() {
                    return Err(syntax(line, "duplicate `group` line"));
                }
                let decl = match args.pos_word(0)? {
                    "trivial" => {
                        args.finish(1)?;
                        GroupDecl::Trivial
                    }
                    "cyclic" => {
                        args.finish(2)?;
                        GroupDecl::Cyclic(args.pos_num(1)?)
                    }
                    "klein4" => {
                        args.finish(1)?;
                        GroupDecl::Klein4
                    }
                    "table" => {
                        let order = args.num("order")?;
                        let identity = args.num("identity")?;
                        args.finish(1)?;
                        GroupDecl::Table { order, identity }
                    }
                    other => return Err(syntax(line, format!("unknown group form `{other}`"))),
                };
                draft.group = Some((line, decl));
            }
            "component" | "module_component" => {
                args.finish(2)?;
                let g = args.pos_num(0)?;
                let elements = args.pos_list(1)?;
                let map = if keyword == "component" {
                    &mut draft.components
                } else {
                    &mut draft.module_components
                };
                if map.insert(g, (line, elements)).is_some() {
                    return Err(syntax(line, format!("component {g} given twice")));
                }
            }
            "ideal" | "mulset" => {
                args.finish(2)?;
                let set = NamedSet {
                    name: args.pos_word(0)?.to_string(),
                    elements: args.pos_list(1)?,
                };
                let list = if keyword == "ideal" {
                    &mut draft.ideals
                } else {
                    &mut draft.mulsets
                };
                if list.iter().any(|(_, s)| s.name == set.name) {
                    return Err(syntax(line, format!("`{}` defined twice", set.name)));
                }
                list.push((line, set));
            }
            "module" => {
                if draft.module.is_some() {
                    return Err(syntax(line, "duplicate `module` line"));
                }
                let decl = match args.pos_word(0)? {
                    "zero" => {
                        args.finish(1)?;
                        ModuleDecl::Zero
                    }
                    "self" => {
                        args.finish(1)?;
                        ModuleDecl::Regular
                    }
                    "cyclic" => {
                        args.finish(2)?;
                        ModuleDecl::Cyclic(args.pos_num(1)?)
                    }
                    "table" => {
                        let order = args.num("order")?;
                        let zero = args.num("zero")?;
                        args.finish(1)?;
                        ModuleDecl::Table { order, zero }
                    }
                    other => return Err(syntax(line, format!("unknown module form `{other}`"))),
                };
                draft.module = Some((line, decl));
            }
            other => return Err(syntax(line, format!("unknown keyword `{other}`"))),
        }
    }
    draft.build()
}

fn flatten_rows(
    rows: &[(usize, Vec<usize>)],
    count: usize,
    width: usize,
    what: &str,
    anchor: usize,
) -> Result<Vec<usize>, SpecError> {
    if rows.len() != count {
        return Err(syntax(
            anchor,
            format!("expected {count} `{what}` rows, found {}", rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(count * width);
    for (line, row) in rows {
        if row.len() != width {
            return Err(syntax(*line, format!("`{what}` row needs {width} entries, found {}", row.len())));
        }
        out.extend(row);
    }
    Ok(out)
}

fn check_range(line: usize, elements: &[usize], order: usize) -> Result<(), SpecError> {
    match elements.iter().find(|&&x| x >= order) {
        Some(x) => Err(syntax(line, format!("element {x} is out of range for order {order}"))),
        None => Ok(()),
    }
}

fn no_rows(rows: &[(usize, Vec<usize>)], what: &str) -> Result<(), SpecError> {
    match rows.first() {
        Some((line, _)) => Err(syntax(*line, format!("`{what}` rows are only allowed with a table form"))),
        None => Ok(()),
    }
}

impl Draft {
    fn build(self) -> Result<RingSpec, SpecError> {
        let (ring_line, ring_decl) = self.ring.ok_or_else(|| syntax(1, "missing `ring` line"))?;
        let ring = match ring_decl {
            RingDecl::Table { order, zero, one } => {
                let add = flatten_rows(&self.add_rows, order, order, "add", ring_line)?;
                let mul = flatten_rows(&self.mul_rows, order, order, "mul", ring_line)?;
                FiniteRing::from_tables(order, add, mul, zero, one)?
            }
            other => {
                no_rows(&self.add_rows, "add")?;
                no_rows(&self.mul_rows, "mul")?;
                match other {
                    RingDecl::Zmod(n) => FiniteRing::zmod(n)?,
                    RingDecl::Product(moduli) => FiniteRing::product(&moduli)?,
                    RingDecl::PolyQuot(modulus, poly) => FiniteRing::polyquot(modulus, &poly)?,
                    RingDecl::Table { .. } => unreachable!(),
                }
            }
        };
        let n = ring.order();

        let (group_line, group_decl) = self.group.unwrap_or((ring_line, GroupDecl::Trivial));
        let group = match group_decl {
            GroupDecl::Table { order, identity } => {
                let table = flatten_rows(&self.group_rows, order, order, "group_row", group_line)?;
                FiniteGroup::from_table(order, table, identity)?
            }
            other => {
                no_rows(&self.group_rows, "group_row")?;
                match other {
                    GroupDecl::Trivial => FiniteGroup::trivial(),
                    GroupDecl::Cyclic(k) => FiniteGroup::cyclic(k)?,
                    GroupDecl::Klein4 => FiniteGroup::klein4(),
                    GroupDecl::Table { .. } => unreachable!(),
                }
            }
        };

        let components = read_components(&self.components, group.order(), n, group_line)?;
        let graded = Arc::new(GradedRing::new(ring, group, components)?);

        for (line, set) in self.ideals.iter().chain(&self.mulsets) {
            check_range(*line, &set.elements, n)?;
        }

        let module = match self.module {
            None => {
                for rows in [&self.module_add_rows, &self.module_act_rows] {
                    no_rows(rows, "module")?;
                }
                if let Some((_, (line, _))) = self.module_components.iter().next() {
                    return Err(syntax(*line, "`module_component` without a `module` line"));
                }
                None
            }
            Some((line, decl)) => {
                if !matches!(decl, ModuleDecl::Table { .. }) {
                    no_rows(&self.module_add_rows, "module_add")?;
                    no_rows(&self.module_act_rows, "module_act")?;
                    if let Some((_, (l, _))) = self.module_components.iter().next() {
                        return Err(syntax(*l, "`module_component` is only allowed with a table module"));
                    }
                }
                Some(match decl {
                    ModuleDecl::Zero => GradedModule::zero_module(&graded),
                    ModuleDecl::Regular => GradedModule::regular(&graded),
                    ModuleDecl::Cyclic(k) => GradedModule::cyclic(&graded, k)?,
                    ModuleDecl::Table { order, zero } => {
                        let add = flatten_rows(&self.module_add_rows, order, order, "module_add", line)?;
                        let act = flatten_rows(&self.module_act_rows, n, order, "module_act", line)?;
                        let components =
                            read_components(&self.module_components, graded.group().order(), order, line)?;
                        GradedModule::from_tables(&graded, order, add, zero, act, components)?
                    }
                })
            }
        };

        Ok(RingSpec {
            ring: graded,
            module,
            ideals: self.ideals.into_iter().map(|(_, s)| s).collect(),
            mulsets: self.mulsets.into_iter().map(|(_, s)| s).collect(),
        })
    }
}

/// Components listed per group element. When the group is trivial and none
/// are given, everything sits in degree e.
fn read_components(
    given: &BTreeMap<usize, (usize, Vec<usize>)>,
    group_order: usize,
    order: usize,
    anchor: usize,
) -> Result<Vec<ElementSet>, SpecError> {
    if given.is_empty() && group_order == 1 {
        return Ok(vec![ElementSet::full(order)]);
    }
    for (&g, (line, elements)) in given {
        if g >= group_order {
            return Err(syntax(*line, format!("group element {g} is out of range")));
        }
        check_range(*line, elements, order)?;
    }
    (0..group_order)
        .map(|g| {
            given
                .get(&g)
                .map(|(_, elements)| ElementSet::from_elements(order, elements.iter().copied()))
                .ok_or_else(|| syntax(anchor, format!("missing component {g}")))
        })
        .collect()
}

fn write_list(out: &mut String, items: impl IntoIterator<Item = usize>) {
    out.push('[');
    for (i, x) in items.into_iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{x}");
    }
    out.push(']');
}

/// Writes a graded ring in table form, which `parse` reads back to an equal
/// ring.
pub fn emit(ring: &GradedRing) -> String {
    let mut out = String::new();
    let r = ring.ring();
    let n = r.order();
    let _ = writeln!(out, "ring table order={n} zero={} one={}", r.zero(), r.one());
    for (name, table) in [("add", r.add_table()), ("mul", r.mul_table())] {
        for row in table.chunks(n) {
            out.push_str(name);
            out.push(' ');
            write_list(&mut out, row.iter().copied());
            out.push('\n');
        }
    }
    let group = ring.group();
    match group.kind() {
        GroupKind::Trivial => out.push_str("group trivial\n"),
        GroupKind::Cyclic(k) => {
            let _ = writeln!(out, "group cyclic {k}");
        }
        GroupKind::Klein4 => out.push_str("group klein4\n"),
        GroupKind::Table => {
            let k = group.order();
            let _ = writeln!(out, "group table order={k} identity={}", group.identity());
            for row in group.table().chunks(k) {
                out.push_str("group_row ");
                write_list(&mut out, row.iter().copied());
                out.push('\n');
            }
        }
    }
    for (g, c) in ring.grading().components().iter().enumerate() {
        let _ = write!(out, "component {g} ");
        write_list(&mut out, c.iter());
        out.push('\n');
    }
    out
}
