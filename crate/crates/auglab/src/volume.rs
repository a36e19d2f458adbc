//! Exact symbolic volume arithmetic for generalized belted sums.
//!
//! Volumes are rational linear combinations over a basis of symbols: `OCT`,
//! the volume of the ideal regular octahedron, plus opaque named link
//! volumes. The belted sum of two links over a 2n-string tangle loses
//! exactly `4(n-2)` octahedra, the volume of the discarded untwisted daisy
//! chain, so everything stays exact until numbers are requested.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Volume of the ideal regular octahedron, 8 Λ(π/4).
pub const V_OCT: f64 = 3.663862376708876;

/// Default absolute tolerance for numeric comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum VolumeError {
    #[error("belt parameter must be at least {min}, got {got}")]
    BadBeltParameter { min: u32, got: u32 },
    #[error("unbound symbols: {}", names.join(", "))]
    UnboundSymbol { names: Vec<String> },
    #[error("leaf {name} bound to conflicting volumes {a} and {b}")]
    ConflictingLeaf { name: String, a: f64, b: f64 },
    #[error("zero denominator in coefficient for {symbol}")]
    ZeroDenominator { symbol: String },
}

/// A basis symbol: the octahedron constant or an opaque link volume.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VolumeSymbol {
    Oct,
    Named(String),
}

impl VolumeSymbol {
    pub fn named(name: impl Into<String>) -> Self {
        VolumeSymbol::Named(name.into())
    }
}

impl fmt::Display for VolumeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VolumeSymbol::Oct => write!(f, "OCT"),
            VolumeSymbol::Named(name) => write!(f, "{name}"),
        }
    }
}

/// An exact rational linear combination of volume symbols.
///
/// Zero coefficients are never stored, so equality is term-wise.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VolumeExpr {
    terms: BTreeMap<VolumeSymbol, Rational64>,
}

impl VolumeExpr {
    pub fn zero() -> Self {
        VolumeExpr::default()
    }

    /// The expression `coeff * OCT`.
    pub fn oct(coeff: Rational64) -> Self {
        let mut e = VolumeExpr::zero();
        e.add_term(VolumeSymbol::Oct, coeff);
        e
    }

    /// The volume of a named link, as the symbol itself.
    pub fn named(name: impl Into<String>) -> Self {
        let mut e = VolumeExpr::zero();
        e.add_term(VolumeSymbol::named(name), Rational64::from_integer(1));
        e
    }

    pub fn add_term(&mut self, symbol: VolumeSymbol, coeff: Rational64) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(symbol) {
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VolumeSymbol, Rational64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn coefficient(&self, symbol: &VolumeSymbol) -> Rational64 {
        self.terms.get(symbol).copied().unwrap_or_else(Rational64::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitute numeric values: `OCT` gets [`V_OCT`], every named symbol
    /// must appear in `bindings`.
    pub fn numeric(&self, bindings: &BTreeMap<String, f64>) -> Result<f64, VolumeError> {
        let unbound: Vec<String> = self
            .terms
            .keys()
            .filter_map(|s| match s {
                VolumeSymbol::Named(name) if !bindings.contains_key(name) => Some(name.clone()),
                _ => None,
            })
            .collect();
        if !unbound.is_empty() {
            return Err(VolumeError::UnboundSymbol { names: unbound });
        }
        let mut total = 0.0;
        for (symbol, coeff) in &self.terms {
            let value = match symbol {
                VolumeSymbol::Oct => V_OCT,
                VolumeSymbol::Named(name) => bindings[name],
            };
            total += rational_to_f64(*coeff) * value;
        }
        Ok(total)
    }
}

impl Add for VolumeExpr {
    type Output = VolumeExpr;
    fn add(mut self, rhs: VolumeExpr) -> VolumeExpr {
        for (symbol, coeff) in rhs.terms {
            self.add_term(symbol, coeff);
        }
        self
    }
}

impl Sub for VolumeExpr {
    type Output = VolumeExpr;
    fn sub(self, rhs: VolumeExpr) -> VolumeExpr {
        self + (-rhs)
    }
}

impl Neg for VolumeExpr {
    type Output = VolumeExpr;
    fn neg(mut self) -> VolumeExpr {
        for coeff in self.terms.values_mut() {
            *coeff = -*coeff;
        }
        self
    }
}

impl fmt::Display for VolumeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (symbol, coeff)) in self.terms.iter().enumerate() {
            let abs = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs == Rational64::from_integer(1) {
                write!(f, "{symbol}")?;
            } else if abs.is_integer() {
                write!(f, "{}*{symbol}", abs.numer())?;
            } else {
                write!(f, "({}/{})*{symbol}", abs.numer(), abs.denom())?;
            }
        }
        Ok(())
    }
}

fn rational_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// The exact octahedron constant as a one-term expression, together with
/// its numeric value.
pub fn v_oct() -> (VolumeExpr, f64) {
    (VolumeExpr::oct(Rational64::from_integer(1)), V_OCT)
}

/// Volume of the generalized belted sum over a 2n-string tangle:
/// `v1 + v2 - 4(n-2) OCT`. The classical case `n = 2` adds volumes
/// exactly.
pub fn belted_sum(v1: &VolumeExpr, v2: &VolumeExpr, n: u32) -> Result<VolumeExpr, VolumeError> {
    if n < 2 {
        return Err(VolumeError::BadBeltParameter { min: 2, got: n });
    }
    let mut out = v1.clone() + v2.clone();
    out.add_term(
        VolumeSymbol::Oct,
        -Rational64::from_integer(4 * (i64::from(n) - 2)),
    );
    Ok(out)
}

/// Volume of the untwisted daisy chain discarded by a generalized belted
/// sum: `4(n-2) OCT`, defined for `n >= 3`.
pub fn daisy_chain_volume(n: u32) -> Result<VolumeExpr, VolumeError> {
    if n < 3 {
        return Err(VolumeError::BadBeltParameter { min: 3, got: n });
    }
    Ok(VolumeExpr::oct(Rational64::from_integer(
        4 * (i64::from(n) - 2),
    )))
}

/// A decomposition expression: leaves are links with optional known
/// volumes, `Sum` is a generalized belted sum, and `Offset` adds an
/// explicit correction term.
#[derive(Debug, Clone, PartialEq)]
pub enum BeltedSumNode {
    Leaf {
        name: String,
        volume: Option<f64>,
    },
    Sum {
        left: Box<BeltedSumNode>,
        right: Box<BeltedSumNode>,
        n: u32,
    },
    Offset {
        node: Box<BeltedSumNode>,
        terms: VolumeExpr,
    },
}

impl BeltedSumNode {
    pub fn leaf(name: impl Into<String>) -> Self {
        BeltedSumNode::Leaf {
            name: name.into(),
            volume: None,
        }
    }

    pub fn leaf_with_volume(name: impl Into<String>, volume: f64) -> Self {
        BeltedSumNode::Leaf {
            name: name.into(),
            volume: Some(volume),
        }
    }

    pub fn sum(left: BeltedSumNode, right: BeltedSumNode, n: u32) -> Self {
        BeltedSumNode::Sum {
            left: Box::new(left),
            right: Box::new(right),
            n,
        }
    }

    pub fn offset(node: BeltedSumNode, terms: VolumeExpr) -> Self {
        BeltedSumNode::Offset {
            node: Box::new(node),
            terms,
        }
    }
}

/// Fold a decomposition tree into one symbolic expression. Named leaves
/// stay symbolic whether or not a numeric volume is attached.
pub fn evaluate(tree: &BeltedSumNode) -> Result<VolumeExpr, VolumeError> {
    match tree {
        BeltedSumNode::Leaf { name, .. } => Ok(VolumeExpr::named(name.clone())),
        BeltedSumNode::Sum { left, right, n } => {
            let l = evaluate(left)?;
            let r = evaluate(right)?;
            belted_sum(&l, &r, *n)
        }
        BeltedSumNode::Offset { node, terms } => Ok(evaluate(node)? + terms.clone()),
    }
}

/// Collect the numeric bindings attached to leaves, rejecting conflicting
/// duplicates.
pub fn leaf_bindings(tree: &BeltedSumNode) -> Result<BTreeMap<String, f64>, VolumeError> {
    fn walk(
        tree: &BeltedSumNode,
        out: &mut BTreeMap<String, f64>,
    ) -> Result<(), VolumeError> {
        match tree {
            BeltedSumNode::Leaf { name, volume } => {
                if let Some(v) = volume {
                    if let Some(&old) = out.get(name) {
                        if old != *v {
                            return Err(VolumeError::ConflictingLeaf {
                                name: name.clone(),
                                a: old,
                                b: *v,
                            });
                        }
                    }
                    out.insert(name.clone(), *v);
                }
                Ok(())
            }
            BeltedSumNode::Sum { left, right, .. } => {
                walk(left, out)?;
                walk(right, out)
            }
            BeltedSumNode::Offset { node, .. } => walk(node, out),
        }
    }
    let mut out = BTreeMap::new();
    walk(tree, &mut out)?;
    Ok(out)
}

/// Direct recursive numeric evaluation of a tree, bypassing the symbolic
/// layer; used to cross-check `evaluate` + `numeric`.
pub fn numeric_of_tree(
    tree: &BeltedSumNode,
    bindings: &BTreeMap<String, f64>,
) -> Result<f64, VolumeError> {
    match tree {
        BeltedSumNode::Leaf { name, .. } => bindings.get(name).copied().ok_or_else(|| {
            VolumeError::UnboundSymbol {
                names: vec![name.clone()],
            }
        }),
        BeltedSumNode::Sum { left, right, n } => {
            if *n < 2 {
                return Err(VolumeError::BadBeltParameter { min: 2, got: *n });
            }
            let l = numeric_of_tree(left, bindings)?;
            let r = numeric_of_tree(right, bindings)?;
            Ok(l + r - 4.0 * (f64::from(*n) - 2.0) * V_OCT)
        }
        BeltedSumNode::Offset { node, terms } => {
            Ok(numeric_of_tree(node, bindings)? + terms.numeric(bindings)?)
        }
    }
}

/// Absolute-tolerance comparison used wherever volumes are checked
/// numerically.
pub fn approx_eq(a: f64, b: f64, tolerance: f64) -> bool {
    (a - b).abs() <= tolerance
}

#[derive(Debug, Error)]
pub enum ExpressionError {
    #[error("invalid expression file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Volume(#[from] VolumeError),
}

#[derive(Debug, serde::Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum NodeJson {
    Leaf {
        name: String,
        #[serde(default)]
        volume: Option<f64>,
    },
    Sum {
        left: Box<NodeJson>,
        right: Box<NodeJson>,
        n: u32,
    },
    Offset {
        node: Box<NodeJson>,
        terms: Vec<Term>,
    },
}

/// One term of a volume expression on the wire: `symbol * num / den`.
/// The symbol `"OCT"` denotes the octahedron constant.
#[derive(Debug, serde::Serialize, serde::Deserialize)]
pub struct Term {
    pub symbol: String,
    pub num: i64,
    #[serde(default = "default_den")]
    pub den: i64,
}

fn default_den() -> i64 {
    1
}

/// Parse an expression file (JSON nodes `leaf`, `sum`, `offset`).
pub fn parse_expression(text: &str) -> Result<BeltedSumNode, ExpressionError> {
    let node: NodeJson = serde_json::from_str(text)?;
    convert_node(&node)
}

fn convert_node(node: &NodeJson) -> Result<BeltedSumNode, ExpressionError> {
    match node {
        NodeJson::Leaf { name, volume } => Ok(BeltedSumNode::Leaf {
            name: name.clone(),
            volume: *volume,
        }),
        NodeJson::Sum { left, right, n } => Ok(BeltedSumNode::Sum {
            left: Box::new(convert_node(left)?),
            right: Box::new(convert_node(right)?),
            n: *n,
        }),
        NodeJson::Offset { node, terms } => {
            let mut expr = VolumeExpr::zero();
            for term in terms {
                if term.den == 0 {
                    return Err(VolumeError::ZeroDenominator {
                        symbol: term.symbol.clone(),
                    }
                    .into());
                }
                expr.add_term(parse_symbol(&term.symbol), Rational64::new(term.num, term.den));
            }
            Ok(BeltedSumNode::Offset {
                node: Box::new(convert_node(node)?),
                terms: expr,
            })
        }
    }
}

fn parse_symbol(name: &str) -> VolumeSymbol {
    if name == "OCT" {
        VolumeSymbol::Oct
    } else {
        VolumeSymbol::named(name)
    }
}

/// Render an expression as wire terms, `OCT` first and names sorted.
pub fn expression_terms(expr: &VolumeExpr) -> Vec<Term> {
    expr.terms()
        .map(|(symbol, coeff)| Term {
            symbol: symbol.to_string(),
            num: *coeff.numer(),
            den: *coeff.denom(),
        })
        .collect()
}
