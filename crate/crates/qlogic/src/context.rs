//! Named entities and the three evaluation semantics.
//!
//! A [`Context`] fixes the ambient dimension and binds names to subspaces
//! and ray sets. One formula then evaluates three ways:
//!
//! * `quantum`: atoms are subspaces; `&` = meet, `|` = join, `~` =
//!   orthocomplement. `!` and `->` are rejected — the quantum lattice has
//!   no classical complement and no implication here.
//! * `weak-heyting`: atoms are ray sets (subspace atoms lift through the
//!   embedding r); `&` = intersection, `|` = union, `~` = pseudo-negation,
//!   `->` = the weak-Heyting implication. `!` is rejected.
//! * `classical`: the plain set algebra; `!` = complement and `A -> B`
//!   abbreviates `!A | B`. `~` is rejected.
//!
//! Rejection is loud and names the semantics; no connective is ever silently
//! coerced to a neighbouring meaning.
//!
//! Context files declare one entity per line:
//!
//! ```text
//! # spin-1/2 toy context
//! space dim=2
//! sub A  = span((1/1, 0/1))
//! sub B  = full
//! set SA = r(A)
//! set SB = SA | ~SA
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::formula::{parse, Formula};
use crate::rayset::{embed_r, RaySet};
use crate::subspace::Subspace;
use crate::exact::Vector;

/// Which of the three logics interprets the connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    Quantum,
    WeakHeyting,
    Classical,
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Semantics::Quantum => "quantum",
            Semantics::WeakHeyting => "weak-heyting",
            Semantics::Classical => "classical",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quantum" => Ok(Semantics::Quantum),
            "weak-heyting" => Ok(Semantics::WeakHeyting),
            "classical" => Ok(Semantics::Classical),
            other => Err(format!(
                "unknown semantics `{other}` (expected quantum, weak-heyting or classical)"
            )),
        }
    }
}

/// Evaluation result: a subspace under quantum semantics, a ray set otherwise.
#[derive(Debug, Clone)]
pub enum Value {
    Subspace(Subspace),
    RaySet(RaySet),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Subspace(s) => write!(f, "{s}"),
            Value::RaySet(s) => write!(f, "{s}"),
        }
    }
}

/// Evaluation failure: exactly the two declared classes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unbound atom `{name}`{hint}")]
    UnboundAtom { name: String, hint: String },
    #[error("connective `{connective}` is not available in {semantics} semantics")]
    ConnectiveUnavailable {
        connective: &'static str,
        semantics: &'static str,
    },
}

/// Context-file failure.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ContextError {
    #[error("context line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("context line {line}: {source}")]
    Eval {
        line: usize,
        #[source]
        source: EvalError,
    },
}

/// Named subspaces and ray sets over one ambient dimension.
#[derive(Debug, Clone)]
pub struct Context {
    ambient_dim: usize,
    subspaces: BTreeMap<String, Subspace>,
    raysets: BTreeMap<String, RaySet>,
}

impl Context {
    pub fn new(ambient_dim: usize) -> Context {
        assert!(ambient_dim >= 1);
        Context {
            ambient_dim,
            subspaces: BTreeMap::new(),
            raysets: BTreeMap::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    fn check_fresh(&self, name: &str) -> Result<(), String> {
        if self.subspaces.contains_key(name) || self.raysets.contains_key(name) {
            Err(format!("name `{name}` is already defined"))
        } else {
            Ok(())
        }
    }

    pub fn define_sub(&mut self, name: &str, sub: Subspace) -> Result<(), String> {
        self.check_fresh(name)?;
        if sub.ambient_dim() != self.ambient_dim {
            return Err(format!(
                "`{name}` has ambient dimension {}, context has {}",
                sub.ambient_dim(),
                self.ambient_dim
            ));
        }
        self.subspaces.insert(name.to_string(), sub);
        Ok(())
    }

    pub fn define_set(&mut self, name: &str, set: RaySet) -> Result<(), String> {
        self.check_fresh(name)?;
        if set.ambient_dim() != self.ambient_dim {
            return Err(format!(
                "`{name}` has ambient dimension {}, context has {}",
                set.ambient_dim(),
                self.ambient_dim
            ));
        }
        self.raysets.insert(name.to_string(), set);
        Ok(())
    }

    pub fn subspace(&self, name: &str) -> Option<&Subspace> {
        self.subspaces.get(name)
    }

    pub fn rayset(&self, name: &str) -> Option<&RaySet> {
        self.raysets.get(name)
    }

    pub fn subspace_names(&self) -> impl Iterator<Item = &str> {
        self.subspaces.keys().map(String::as_str)
    }

    pub fn rayset_names(&self) -> impl Iterator<Item = &str> {
        self.raysets.keys().map(String::as_str)
    }

    /// Parse a context file: `space dim=<d>` first, then `sub`/`set` lines.
    pub fn parse(text: &str) -> Result<Context, ContextError> {
        let mut ctx: Option<Context> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| ContextError::Parse { line, message };

            if let Some(rest) = content.strip_prefix("space") {
                let dim = rest
                    .trim()
                    .strip_prefix("dim=")
                    .and_then(|v| v.parse::<usize>().ok())
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| err("expected `space dim=<d>` with d ≥ 1".into()))?;
                if ctx.is_some() {
                    return Err(err("duplicate `space` declaration".into()));
                }
                ctx = Some(Context::new(dim));
                continue;
            }

            let ctx_ref = ctx
                .as_mut()
                .ok_or_else(|| err("`space dim=<d>` must come first".into()))?;

            if let Some(rest) = content.strip_prefix("sub ") {
                let (name, rhs) = split_definition(rest).map_err(&err)?;
                let sub = parse_subspace_rhs(ctx_ref.ambient_dim, rhs).map_err(&err)?;
                ctx_ref.define_sub(name, sub).map_err(&err)?;
            } else if let Some(rest) = content.strip_prefix("set ") {
                let (name, rhs) = split_definition(rest).map_err(&err)?;
                let set = parse_rayset_rhs(ctx_ref, rhs, line)?;
                ctx_ref.define_set(name, set).map_err(&err)?;
            } else {
                return Err(err("expected `space`, `sub` or `set`".into()));
            }
        }
        ctx.ok_or(ContextError::Parse {
            line: 0,
            message: "missing `space dim=<d>` declaration".into(),
        })
    }
}

fn split_definition(rest: &str) -> Result<(&str, &str), String> {
    let (name, rhs) = rest
        .split_once('=')
        .ok_or_else(|| "expected `NAME = ...`".to_string())?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(format!("invalid name `{name}`"));
    }
    Ok((name, rhs.trim()))
}

fn parse_subspace_rhs(dim: usize, rhs: &str) -> Result<Subspace, String> {
    match rhs {
        "full" => Ok(Subspace::full(dim)),
        "zero" => Ok(Subspace::zero(dim)),
        other => {
            let inner = other
                .strip_prefix("span(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| "expected `span(VEC, ...)`, `full` or `zero`".to_string())?;
            let mut generators = Vec::new();
            for piece in split_vectors(inner)? {
                let v: Vector = piece.parse().map_err(|e| format!("{e}"))?;
                generators.push(v);
            }
            Subspace::span(dim, &generators).map_err(|e| format!("{e}"))
        }
    }
}

/// Split `(1,0), (0,1)` into parenthesized vector literals.
fn split_vectors(inner: &str) -> Result<Vec<&str>, String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = None;
    for (k, c) in inner.char_indices() {
        match c {
            '(' => {
                if depth == 0 {
                    start = Some(k);
                }
                depth += 1;
            }
            ')' => {
                depth = depth.checked_sub(1).ok_or("unbalanced parentheses")?;
                if depth == 0 {
                    let s = start.take().ok_or("unbalanced parentheses")?;
                    out.push(&inner[s..=k]);
                }
            }
            ',' | ' ' | '\t' if depth == 0 => {}
            other if depth == 0 => return Err(format!("unexpected `{other}` between vectors")),
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".to_string());
    }
    Ok(out)
}

/// Right-hand side of a `set` definition: either `r(SUBNAME)` or an
/// expression over already-defined names. Definitions are constructors, so
/// every connective is available here regardless of semantics.
fn parse_rayset_rhs(ctx: &Context, rhs: &str, line: usize) -> Result<RaySet, ContextError> {
    let parse_err = |message: String| ContextError::Parse { line, message };

    let compact = rhs.trim();
    if let Some(inner) = compact.strip_prefix("r(").and_then(|t| t.strip_suffix(')')) {
        let name = inner.trim();
        let sub = ctx
            .subspace(name)
            .ok_or_else(|| parse_err(format!("unknown subspace `{name}` in r(...)")))?;
        return Ok(embed_r(sub));
    }

    let formula = parse(compact).map_err(|e| parse_err(e.to_string()))?;
    eval_constructor(&formula, ctx).map_err(|source| ContextError::Eval { line, source })
}

/// Evaluate a definition expression with every connective enabled.
fn eval_constructor(f: &Formula, ctx: &Context) -> Result<RaySet, EvalError> {
    let dim = ctx.ambient_dim;
    Ok(match f {
        Formula::Atom(name) => lookup_rayset(ctx, name)?,
        Formula::Top => RaySet::top(dim),
        Formula::Bot => RaySet::empty(dim),
        Formula::And(a, b) => eval_constructor(a, ctx)?
            .intersect(&eval_constructor(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::Or(a, b) => eval_constructor(a, ctx)?
            .union(&eval_constructor(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::WeakNeg(a) => eval_constructor(a, ctx)?.pseudo_neg(),
        Formula::ClassicalNeg(a) => eval_constructor(a, ctx)?.complement(),
        Formula::Implies(a, b) => eval_constructor(a, ctx)?
            .implies(&eval_constructor(b, ctx)?)
            .expect("context dims are uniform"),
    })
}

/// Atom lookup for the ray-set semantics: ray sets directly, subspaces
/// lifted through the embedding r.
fn lookup_rayset(ctx: &Context, name: &str) -> Result<RaySet, EvalError> {
    if let Some(s) = ctx.rayset(name) {
        return Ok(s.clone());
    }
    if let Some(k) = ctx.subspace(name) {
        return Ok(embed_r(k));
    }
    Err(EvalError::UnboundAtom {
        name: name.to_string(),
        hint: String::new(),
    })
}

/// Evaluate a formula in the selected semantics.
pub fn eval(f: &Formula, ctx: &Context, semantics: Semantics) -> Result<Value, EvalError> {
    match semantics {
        Semantics::Quantum => eval_quantum(f, ctx).map(Value::Subspace),
        Semantics::WeakHeyting => eval_weak(f, ctx).map(Value::RaySet),
        Semantics::Classical => eval_classical(f, ctx).map(Value::RaySet),
    }
}

fn eval_quantum(f: &Formula, ctx: &Context) -> Result<Subspace, EvalError> {
    let dim = ctx.ambient_dim;
    Ok(match f {
        Formula::Atom(name) => match ctx.subspace(name) {
            Some(s) => s.clone(),
            None => {
                let hint = if ctx.rayset(name).is_some() {
                    format!(" (`{name}` is a ray set; quantum semantics binds atoms to subspaces)")
                } else {
                    String::new()
                };
                return Err(EvalError::UnboundAtom { name: name.clone(), hint });
            }
        },
        Formula::Top => Subspace::full(dim),
        Formula::Bot => Subspace::zero(dim),
        Formula::And(a, b) => eval_quantum(a, ctx)?
            .meet(&eval_quantum(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::Or(a, b) => eval_quantum(a, ctx)?
            .join(&eval_quantum(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::WeakNeg(a) => eval_quantum(a, ctx)?.ortho(),
        Formula::ClassicalNeg(_) => {
            return Err(EvalError::ConnectiveUnavailable {
                connective: "!",
                semantics: "quantum",
            })
        }
        Formula::Implies(..) => {
            return Err(EvalError::ConnectiveUnavailable {
                connective: "->",
                semantics: "quantum",
            })
        }
    })
}

fn eval_weak(f: &Formula, ctx: &Context) -> Result<RaySet, EvalError> {
    let dim = ctx.ambient_dim;
    Ok(match f {
        Formula::Atom(name) => lookup_rayset(ctx, name)?,
        Formula::Top => RaySet::top(dim),
        Formula::Bot => RaySet::empty(dim),
        Formula::And(a, b) => eval_weak(a, ctx)?
            .intersect(&eval_weak(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::Or(a, b) => eval_weak(a, ctx)?
            .union(&eval_weak(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::WeakNeg(a) => eval_weak(a, ctx)?.pseudo_neg(),
        Formula::ClassicalNeg(_) => {
            return Err(EvalError::ConnectiveUnavailable {
                connective: "!",
                semantics: "weak-heyting",
            })
        }
        Formula::Implies(a, b) => eval_weak(a, ctx)?
            .implies(&eval_weak(b, ctx)?)
            .expect("context dims are uniform"),
    })
}

fn eval_classical(f: &Formula, ctx: &Context) -> Result<RaySet, EvalError> {
    let dim = ctx.ambient_dim;
    Ok(match f {
        Formula::Atom(name) => lookup_rayset(ctx, name)?,
        Formula::Top => RaySet::top(dim),
        Formula::Bot => RaySet::empty(dim),
        Formula::And(a, b) => eval_classical(a, ctx)?
            .intersect(&eval_classical(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::Or(a, b) => eval_classical(a, ctx)?
            .union(&eval_classical(b, ctx)?)
            .expect("context dims are uniform"),
        Formula::WeakNeg(_) => {
            return Err(EvalError::ConnectiveUnavailable {
                connective: "~",
                semantics: "classical",
            })
        }
        Formula::ClassicalNeg(a) => eval_classical(a, ctx)?.complement(),
        // A -> B is material: !A | B.
        Formula::Implies(a, b) => {
            let a = eval_classical(a, ctx)?;
            let b = eval_classical(b, ctx)?;
            a.complement().union(&b).expect("context dims are uniform")
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn demo_context() -> Context {
        Context::parse(
            "# two lines in the plane\n\
             space dim=2\n\
             sub A = span((1/1, 0/1))\n\
             sub B = span((0,1))\n\
             sub F = full\n\
             sub Z = zero\n\
             set SA = r(A)\n\
             set SB = r(B)\n\
             set U = SA | SB\n",
        )
        .unwrap()
    }

    #[test]
    fn parses_declarations() {
        let ctx = demo_context();
        assert_eq!(ctx.ambient_dim(), 2);
        assert_eq!(ctx.subspace("A").unwrap().dim(), 1);
        assert!(ctx.subspace("F").unwrap().is_full());
        assert!(ctx.subspace("Z").unwrap().is_zero());
        assert!(!ctx.rayset("U").unwrap().is_empty());
    }

    #[test]
    fn quantum_excluded_middle_holds() {
        let ctx = demo_context();
        let f = parse("A | ~A").unwrap();
        match eval(&f, &ctx, Semantics::Quantum).unwrap() {
            Value::Subspace(s) => assert!(s.is_full()),
            _ => panic!("quantum value must be a subspace"),
        }
    }

    #[test]
    fn weak_excluded_middle_fails() {
        let ctx = demo_context();
        let f = parse("SA | ~SA").unwrap();
        match eval(&f, &ctx, Semantics::WeakHeyting).unwrap() {
            Value::RaySet(s) => {
                let expected = ctx
                    .rayset("SA")
                    .unwrap()
                    .union(ctx.rayset("SB").unwrap())
                    .unwrap();
                assert!(s.equals(&expected).unwrap());
                assert!(!s.equals(&RaySet::top(2)).unwrap());
            }
            _ => panic!("weak-heyting value must be a ray set"),
        }
    }

    #[test]
    fn weak_implication_to_bot_is_pseudo_negation() {
        let ctx = demo_context();
        let imp = parse("SA -> bot").unwrap();
        let neg = parse("~SA").unwrap();
        let (Value::RaySet(a), Value::RaySet(b)) = (
            eval(&imp, &ctx, Semantics::WeakHeyting).unwrap(),
            eval(&neg, &ctx, Semantics::WeakHeyting).unwrap(),
        ) else {
            panic!("expected ray sets")
        };
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn subspace_atoms_lift_outside_quantum() {
        let ctx = demo_context();
        let f = parse("A | B").unwrap();
        let Value::RaySet(s) = eval(&f, &ctx, Semantics::Classical).unwrap() else {
            panic!("expected a ray set")
        };
        let expected = ctx.rayset("U").unwrap();
        assert!(s.equals(expected).unwrap());
    }

    #[test]
    fn rejections_are_loud_and_name_the_semantics() {
        let ctx = demo_context();
        let bang = parse("!A").unwrap();
        let tilde = parse("~SA").unwrap();
        let arrow = parse("A -> B").unwrap();

        assert_eq!(
            eval(&bang, &ctx, Semantics::Quantum).unwrap_err(),
            EvalError::ConnectiveUnavailable { connective: "!", semantics: "quantum" }
        );
        assert_eq!(
            eval(&arrow, &ctx, Semantics::Quantum).unwrap_err(),
            EvalError::ConnectiveUnavailable { connective: "->", semantics: "quantum" }
        );
        assert_eq!(
            eval(&bang, &ctx, Semantics::WeakHeyting).unwrap_err(),
            EvalError::ConnectiveUnavailable { connective: "!", semantics: "weak-heyting" }
        );
        assert_eq!(
            eval(&tilde, &ctx, Semantics::Classical).unwrap_err(),
            EvalError::ConnectiveUnavailable { connective: "~", semantics: "classical" }
        );
    }

    #[test]
    fn unbound_atoms_are_reported() {
        let ctx = demo_context();
        let f = parse("Nope").unwrap();
        assert!(matches!(
            eval(&f, &ctx, Semantics::Classical),
            Err(EvalError::UnboundAtom { .. })
        ));
        // Ray-set atom under quantum semantics: unbound, with a hint.
        let f = parse("SA").unwrap();
        match eval(&f, &ctx, Semantics::Quantum) {
            Err(EvalError::UnboundAtom { hint, .. }) => assert!(!hint.is_empty()),
            other => panic!("expected an unbound-atom error, got {other:?}"),
        }
    }

    #[test]
    fn classical_and_weak_agree_on_positive_connectives() {
        let ctx = demo_context();
        for text in ["SA | SB", "SA & SB", "SA & (SB | SA)"] {
            let f = parse(text).unwrap();
            let (Value::RaySet(c), Value::RaySet(w)) = (
                eval(&f, &ctx, Semantics::Classical).unwrap(),
                eval(&f, &ctx, Semantics::WeakHeyting).unwrap(),
            ) else {
                panic!("expected ray sets")
            };
            assert!(c.equals(&w).unwrap(), "{text}");
        }
    }

    #[test]
    fn quantum_join_outgrows_classical_union() {
        // The semantics agree on conjunction but split on disjunction: the
        // quantum join spans, the classical union does not.
        let ctx = demo_context();
        let f = parse("A | B").unwrap();
        let Value::Subspace(join) = eval(&f, &ctx, Semantics::Quantum).unwrap() else {
            panic!("expected a subspace")
        };
        let Value::RaySet(union) = eval(&f, &ctx, Semantics::Classical).unwrap() else {
            panic!("expected a ray set")
        };
        assert!(join.is_full());
        assert!(!union.equals(&crate::rayset::embed_r(&join)).unwrap());
        assert!(union.leq(&crate::rayset::embed_r(&join)).unwrap());
    }

    #[test]
    fn context_file_errors() {
        assert!(Context::parse("sub A = full").is_err());
        assert!(Context::parse("space dim=0").is_err());
        assert!(Context::parse("space dim=2\nsub A = span((1,0,0))").is_err());
        assert!(Context::parse("space dim=2\nsub A = full\nsub A = zero").is_err());
        assert!(Context::parse("space dim=2\nset S = r(Missing)").is_err());
        assert!(Context::parse("space dim=2\nset S = Missing | top").is_err());
        assert!(Context::parse("space dim=2\nfrob A = full").is_err());
    }

    #[test]
    fn definition_expressions_allow_all_connectives() {
        let ctx = Context::parse(
            "space dim=2\n\
             sub A = span((1,0))\n\
             set S = r(A)\n\
             set T = (S -> bot) | !S & top\n",
        )
        .unwrap();
        assert!(ctx.rayset("T").is_some());
    }
}
