//! Embedded transcriptions of the checkable claims (expansion ladders,
//! congruences modulo the negative part, a-function values, cell-block
//! memberships, Condition-I5 rows) and the checker that evaluates each
//! claim kind against the algebra and cell engines.
//!
//! Datasets live in `data/*.json`; every row carries its source anchor.
//! Symbolic cell minima like `u_0^6` are bound through the computed left
//! partition and the figure label coordinates; bindings are emitted into
//! every report for audit.

use crate::cells::{self, CellPartition, CellSide};
use crate::coxeter::{parse_word, Ball, Element, GroupCtx, Preset};
use crate::hecke::{congruent_mod_neg, ElemId, HeckeElt, Session, SessionOpts, Side};
use crate::laurent::LaurentPoly;
use crate::plane::PlaneModel;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

const REGIMES_JSON: &str = include_str!("../data/regimes.json");
const G2_I5_JSON: &str = include_str!("../data/g2_i5.json");
const B2_I5_JSON: &str = include_str!("../data/b2_i5.json");
const B2_PART_JSON: &str = include_str!("../data/b2_part.json");
const G2_SEC1_JSON: &str = include_str!("../data/g2_sec1.json");

// ------------------------------------------------------------------ dataset

#[derive(Deserialize, Clone, Debug)]
pub struct Constraint {
    pub lhs: [i64; 3],
    pub op: String,
}

#[derive(Deserialize, Clone, Debug)]
pub struct RegimeDef {
    pub id: String,
    pub weights: Vec<i64>,
    pub constraints: Vec<Constraint>,
    pub i5_case: Option<String>,
    pub partition_case: String,
    #[serde(default)]
    pub pc_label: Option<String>,
}

#[derive(Deserialize, Debug)]
struct RegimesFile {
    #[allow(dead_code)]
    schema: u32,
    g2t: Vec<RegimeDef>,
    b2t: Vec<RegimeDef>,
}

#[derive(Deserialize, Clone, Debug)]
pub struct LabelDef {
    pub name: String,
    pub point: [f64; 2],
}

#[derive(Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum XCell {
    Lit { lit: String },
    Var { var: String, w: bool, tail: String },
}

#[derive(Deserialize, Clone, Debug)]
pub struct RhsTerm {
    pub coeff: String,
    #[serde(default)]
    pub t: Option<Vec<String>>,
    #[serde(default)]
    pub c: Option<Vec<String>>,
}

#[derive(Deserialize, Clone, Debug)]
pub struct I5Row {
    pub u: String,
    pub x: XCell,
    pub rhs: Vec<RhsTerm>,
    pub anchor: String,
}

#[derive(Deserialize, Clone, Debug)]
pub struct I5Case {
    pub labels: Vec<LabelDef>,
    pub translations: BTreeMap<String, String>,
    pub rows: Vec<I5Row>,
}

#[derive(Deserialize, Clone, Debug)]
pub struct BlockDef {
    pub name: String,
    pub words: Vec<String>,
    pub value: Option<String>,
    pub anchor: String,
}

#[derive(Deserialize, Clone, Debug)]
pub struct PcRow {
    pub label: String,
    pub groups: Vec<Vec<String>>,
    pub anchor: String,
}

#[derive(Deserialize, Clone, Debug)]
pub struct PartCase {
    pub blocks: Vec<BlockDef>,
    pub pc: Vec<PcRow>,
}

#[derive(Deserialize, Clone, Debug)]
pub struct SymbolDef {
    pub name: String,
    #[serde(default)]
    pub word: Option<String>,
    #[serde(default)]
    pub point: Option<[f64; 2]>,
}

#[derive(Deserialize, Clone, Debug)]
#[serde(tag = "kind")]
pub enum Sec1Claim {
    #[serde(rename = "expansion")]
    Expansion {
        x: String,
        u: String,
        terms: Vec<RhsTerm>,
        anchor: String,
    },
    #[serde(rename = "ladder")]
    Ladder {
        x: String,
        u: String,
        support: Vec<Vec<String>>,
        anchor: String,
    },
    #[serde(rename = "congruence")]
    Congruence {
        x: XCell,
        u: String,
        #[serde(default)]
        rhs: Vec<RhsTerm>,
        #[serde(default)]
        rhs_full: Option<Vec<RhsTerm>>,
        anchor: String,
    },
}

#[derive(Deserialize, Clone, Debug)]
pub struct Sec1File {
    pub group: String,
    pub weights: Vec<i64>,
    pub resolution_radius: u32,
    pub translations: BTreeMap<String, String>,
    pub symbols: Vec<SymbolDef>,
    pub claims: Vec<Sec1Claim>,
}

pub struct Dataset {
    pub regimes_g2: Vec<RegimeDef>,
    pub regimes_b2: Vec<RegimeDef>,
    pub g2_i5: BTreeMap<String, I5Case>,
    pub b2_i5: BTreeMap<String, I5Case>,
    pub b2_part: BTreeMap<String, PartCase>,
    pub sec1: Sec1File,
}

impl Dataset {
    pub fn load() -> Result<Dataset> {
        let regimes: RegimesFile = serde_json::from_str(REGIMES_JSON)?;
        Ok(Dataset {
            regimes_g2: regimes.g2t,
            regimes_b2: regimes.b2t,
            g2_i5: serde_json::from_str(G2_I5_JSON)?,
            b2_i5: serde_json::from_str(B2_I5_JSON)?,
            b2_part: serde_json::from_str(B2_PART_JSON)?,
            sec1: serde_json::from_str(G2_SEC1_JSON)?,
        })
    }

    pub fn regimes(&self, preset: Preset) -> &[RegimeDef] {
        match preset {
            Preset::B2Affine => &self.regimes_b2,
            _ => &self.regimes_g2,
        }
    }

    pub fn regime(&self, preset: Preset, id: &str) -> Result<&RegimeDef> {
        self.regimes(preset)
            .iter()
            .find(|r| r.id == id)
            .ok_or_else(|| Error::UnknownRegime(id.to_string()))
    }
}

/// `ca*a + cb*b + cc*c OP 0` over the concrete weights.
pub fn constraint_holds(c: &Constraint, w: [i64; 3]) -> bool {
    let v = c.lhs[0] * w[0] + c.lhs[1] * w[1] + c.lhs[2] * w[2];
    match c.op.as_str() {
        ">" => v > 0,
        "<" => v < 0,
        "=" => v == 0,
        ">=" => v >= 0,
        "<=" => v <= 0,
        _ => false,
    }
}

// ------------------------------------------------------------- linear forms

/// Evaluates an integer-linear expression in the weight letters, e.g.
/// `2a-b`, `-a+3b`, `4`, `0`.
pub fn eval_linear(expr: &str, w: [i64; 3]) -> Result<i64> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty linear form".into()));
    }
    let mut total = 0i64;
    let mut idx = 0;
    let bytes = s.as_bytes();
    let mut sign = 1i64;
    while idx < bytes.len() {
        match bytes[idx] {
            b'+' => {
                sign = 1;
                idx += 1;
            }
            b'-' => {
                sign = -1;
                idx += 1;
            }
            _ => {
                let start = idx;
                while idx < bytes.len() && bytes[idx].is_ascii_digit() {
                    idx += 1;
                }
                let num: i64 = if idx > start {
                    s[start..idx].parse().unwrap()
                } else {
                    1
                };
                let letter = if idx < bytes.len() && matches!(bytes[idx], b'a' | b'b' | b'c') {
                    let l = bytes[idx];
                    idx += 1;
                    Some(l)
                } else {
                    None
                };
                let val = match letter {
                    Some(b'a') => num * w[0],
                    Some(b'b') => num * w[1],
                    Some(b'c') => num * w[2],
                    None if idx > start => num,
                    _ => return Err(Error::Parse(format!("bad linear form {expr:?}"))),
                };
                total += sign * val;
                sign = 1;
            }
        }
    }
    Ok(total)
}

/// Evaluates a coefficient template: `1`, `-1`, `v^(expr)`, `-v^(expr)`,
/// `(v^(e1)-v^(e2))`, optionally negated.
pub fn eval_coeff(template: &str, w: [i64; 3]) -> Result<LaurentPoly> {
    let t = template.trim();
    let (neg, t) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let base = if t == "1" {
        LaurentPoly::one()
    } else if let Some(inner) = t.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
        // v^(e1)-v^(e2)
        let parts: Vec<&str> = inner.splitn(2, "-v^").collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!(
                "bad coefficient template {template:?}"
            )));
        }
        let e1 = eval_linear(strip_vpow(parts[0])?, w)?;
        let e2 = eval_linear(parts[1].trim_start_matches('(').trim_end_matches(')'), w)?;
        &LaurentPoly::v_pow(e1) - &LaurentPoly::v_pow(e2)
    } else {
        let e = eval_linear(strip_vpow(t)?, w)?;
        LaurentPoly::v_pow(e)
    };
    Ok(if neg { -&base } else { base })
}

fn strip_vpow(t: &str) -> Result<&str> {
    let t = t.trim();
    if t == "v" {
        return Ok("1");
    }
    t.strip_prefix("v^(")
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("bad v-power {t:?}")))
}

// ------------------------------------------------------------- symbol table

#[derive(Serialize, Clone, Debug)]
pub struct Binding {
    pub name: String,
    pub word: String,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block: Option<u32>,
}

pub struct Symbols {
    map: BTreeMap<String, ElemId>,
    pub bindings: Vec<Binding>,
    pub unresolved: Vec<(String, String)>,
}

impl Symbols {
    pub fn get(&self, name: &str) -> Option<ElemId> {
        self.map.get(name).copied()
    }
}

/// Binds explicit-word symbols directly and figure symbols through the
/// computed left partition: the label point selects an alcove, the alcove's
/// block must have a unique minimal-length element. Symbols carrying both a
/// word and a point must agree, which cross-validates the whole geometric
/// pipeline.
pub fn resolve_symbols(
    session: &Session,
    partition: &CellPartition,
    explicit: &[SymbolDef],
    labels: &[LabelDef],
) -> Result<Symbols> {
    let ctx = session.ctx;
    let ball = session.ball;
    let model = PlaneModel::for_preset(ctx.preset())?;
    let mut map = BTreeMap::new();
    let mut bindings = Vec::new();
    let mut unresolved = Vec::new();

    let mut resolve_point = |point: [f64; 2]| -> std::result::Result<(ElemId, u32), String> {
        let q = model.point(point[0], point[1]);
        let n = ball.ids_within(partition.radius).end;
        let mut hit = None;
        for id in 0..n {
            let poly = model.alcove(ctx, &ball.element(id));
            if poly.contains(&q) {
                let c = poly.centroid();
                let d = (c.0 - point[0]).powi(2) + (c.1 - point[1]).powi(2);
                match hit {
                    Some((_, best)) if best <= d => {}
                    _ => hit = Some((id, d)),
                }
            }
        }
        let Some((alcove_id, _)) = hit else {
            return Err(format!(
                "label point ({}, {}) outside the enumerated picture",
                point[0], point[1]
            ));
        };
        let block = partition.block_of_id(alcove_id).expect("within radius");
        let minima = &partition.minima[block as usize];
        if minima.len() != 1 {
            return Err(format!(
                "block {} has {} minimal-length elements",
                block,
                minima.len()
            ));
        }
        Ok((minima[0], block))
    };

    for sym in explicit {
        match (&sym.word, &sym.point) {
            (Some(word), maybe_point) => {
                let elem = ctx.element_from_str(word)?;
                let id = ball
                    .id_of(&elem)
                    .ok_or_else(|| Error::NotInBall(format!("symbol {}", sym.name)))?;
                if let Some(p) = maybe_point {
                    match resolve_point(*p) {
                        Ok((geo_id, _)) if geo_id == id => {}
                        Ok((geo_id, _)) => {
                            return Err(Error::Symbol(format!(
                                "symbol {}: figure binds {} but the listed word is {}",
                                sym.name,
                                ball.word_string(geo_id),
                                word
                            )));
                        }
                        Err(e) => {
                            return Err(Error::Symbol(format!(
                                "symbol {}: cross-validation failed: {e}",
                                sym.name
                            )));
                        }
                    }
                }
                map.insert(sym.name.clone(), id);
                bindings.push(Binding {
                    name: sym.name.clone(),
                    word: word.clone(),
                    source: "explicit".into(),
                    block: None,
                });
            }
            (None, Some(point)) => match resolve_point(*point) {
                Ok((id, block)) => {
                    map.insert(sym.name.clone(), id);
                    bindings.push(Binding {
                        name: sym.name.clone(),
                        word: ball.word_string(id),
                        source: "figure".into(),
                        block: Some(block),
                    });
                }
                Err(reason) => unresolved.push((sym.name.clone(), reason)),
            },
            (None, None) => unresolved.push((sym.name.clone(), "no word and no point".into())),
        }
    }
    for label in labels {
        if map.contains_key(&label.name) {
            continue;
        }
        match resolve_point(label.point) {
            Ok((id, block)) => {
                map.insert(label.name.clone(), id);
                bindings.push(Binding {
                    name: label.name.clone(),
                    word: ball.word_string(id),
                    source: "figure".into(),
                    block: Some(block),
                });
            }
            Err(reason) => unresolved.push((label.name.clone(), reason)),
        }
    }
    Ok(Symbols {
        map,
        bindings,
        unresolved,
    })
}

// ------------------------------------------------------------------- claims

/// A fully instantiated congruence instance.
struct CongInstance {
    x: Element,
    /// Residual variable value for `$y`-style rhs substitution.
    y_value: Option<Element>,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Serialize, Clone, Debug)]
pub struct ClaimResult {
    pub claim: String,
    pub kind: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub anchor: String,
    /// For family rows: (evaluated, passed, skipped) instance counts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<(usize, usize, usize)>,
    /// True for rows instantiated from a family template.
    pub family: bool,
}

pub struct RunOptions {
    pub radius: u32,
    pub nmax: u32,
    pub a_radius: u32,
    pub resolution_radius: u32,
}

/// Everything needed to evaluate one regime's claims.
pub struct SuiteRun<'a> {
    pub ctx: &'a GroupCtx,
    pub ball: &'a Ball,
    pub session: Session<'a>,
    pub left_partition: CellPartition,
    pub symbols: Symbols,
    pub opts: RunOptions,
    translations: BTreeMap<String, Element>,
    y_sets: BTreeMap<String, Vec<Element>>,
}

/// Builds the evaluation state for one regime: ball, session, left
/// partition at the resolution radius and the symbol table.
pub fn prepare<'a>(
    ctx: &'a GroupCtx,
    ball: &'a Ball,
    opts: RunOptions,
    explicit_symbols: &[SymbolDef],
    labels: &[LabelDef],
    translations: &BTreeMap<String, String>,
) -> Result<SuiteRun<'a>> {
    let session = Session::new(
        ctx,
        ball,
        SessionOpts {
            kl_radius: ball.radius(),
            bar_radius: 0,
            smul_radius: Some(ball.radius().saturating_sub(1)),
        },
    )?;
    let res_radius = opts
        .resolution_radius
        .min(ball.radius().saturating_sub(1));
    let left_partition = cells::cells_partition(&session, res_radius, CellSide::Left)?;
    let symbols = resolve_symbols(&session, &left_partition, explicit_symbols, labels)?;
    let mut trans_elems = BTreeMap::new();
    let mut y_sets = BTreeMap::new();
    for (k, word) in translations {
        let elem = ctx.element_from_str(word)?;
        y_sets.insert(k.clone(), ctx.y_set(&elem)?);
        trans_elems.insert(k.clone(), elem);
    }
    Ok(SuiteRun {
        ctx,
        ball,
        session,
        left_partition,
        symbols,
        opts,
        translations: trans_elems,
        y_sets,
    })
}

impl<'a> SuiteRun<'a> {
    fn element_of_tokens(
        &self,
        tokens: &[String],
        x: Option<&Element>,
        u: Option<&Element>,
        yv: Option<&Element>,
    ) -> Result<Element> {
        let mut acc = self.ctx.identity();
        for tok in tokens {
            let next = match tok.as_str() {
                "$x" => x
                    .cloned()
                    .ok_or_else(|| Error::Symbol("$x outside row".into()))?,
                "$u" => u
                    .cloned()
                    .ok_or_else(|| Error::Symbol("$u outside row".into()))?,
                "$y" | "$y1" | "$y2" => yv
                    .cloned()
                    .ok_or_else(|| Error::Symbol(format!("{tok} in a non-family row")))?,
                w if w.chars().all(|c| matches!(c, '1'..='3')) || w == "e" => {
                    self.ctx.element_from_str(w)?
                }
                sym => {
                    let id = self
                        .symbols
                        .get(sym)
                        .ok_or_else(|| Error::Symbol(format!("unresolved symbol {sym}")))?;
                    self.ball.element(id)
                }
            };
            acc = self.ctx.mul(&acc, &next)?;
        }
        Ok(acc)
    }

    fn missing_symbol(&self, tokens: &[String]) -> Option<String> {
        for tok in tokens {
            let is_sym = !matches!(tok.as_str(), "$x" | "$u" | "$y" | "$y1" | "$y2")
                && !tok.chars().all(|c| matches!(c, '1'..='3'))
                && tok != "e";
            if is_sym && self.symbols.get(tok).is_none() {
                return Some(tok.clone());
            }
        }
        None
    }

    /// Expands a variable row into concrete instances for `n` up to nmax.
    fn instances(&self, var: &str, with_w: bool, tail: &str) -> Result<Vec<CongInstance>> {
        let trans_key = match var {
            "y" => "w",
            "y1" => "w1",
            "y2" => "w2",
            other => return Err(Error::Dataset(format!("unknown variable {other}"))),
        };
        let w = self
            .translations
            .get(trans_key)
            .ok_or_else(|| Error::Dataset(format!("suite lacks translation {trans_key}")))?;
        let ys = self
            .y_sets
            .get(trans_key)
            .ok_or_else(|| Error::Dataset(format!("no Y-set for {trans_key}")))?;
        let tail_elem = self.ctx.element_from_str(tail)?;
        let mut out = Vec::new();
        let n_range = if with_w {
            1..=self.opts.nmax
        } else {
            0..=self.opts.nmax
        };
        for n in n_range {
            for z in ys {
                // x = z w^n tail; the rhs variable is z w^{n-1} when one w
                // is written explicitly in the row, z w^n otherwise
                let mut x = z.clone();
                for _ in 0..n {
                    x = self.ctx.mul(&x, w)?;
                }
                let y_value = if with_w {
                    let mut y = z.clone();
                    for _ in 0..n.saturating_sub(1) {
                        y = self.ctx.mul(&y, w)?;
                    }
                    y
                } else {
                    x.clone()
                };
                x = self.ctx.mul(&x, &tail_elem)?;
                out.push(CongInstance {
                    x,
                    y_value: Some(y_value),
                });
            }
        }
        Ok(out)
    }

    /// Concrete x-elements of a family row, with the translation power
    /// capped explicitly (used for coverage bookkeeping).
    pub fn raw_instances(
        &self,
        var: &str,
        with_w: bool,
        tail: &str,
        nmax: u32,
    ) -> Result<Vec<Element>> {
        let saved = self.opts.nmax;
        let _ = saved;
        let trans_key = match var {
            "y" => "w",
            "y1" => "w1",
            "y2" => "w2",
            other => return Err(Error::Dataset(format!("unknown variable {other}"))),
        };
        let w = self
            .translations
            .get(trans_key)
            .ok_or_else(|| Error::Dataset(format!("suite lacks translation {trans_key}")))?;
        let ys = self
            .y_sets
            .get(trans_key)
            .ok_or_else(|| Error::Dataset(format!("no Y-set for {trans_key}")))?;
        let tail_elem = self.ctx.element_from_str(tail)?;
        let mut out = Vec::new();
        let n_range = if with_w { 1..=nmax } else { 0..=nmax };
        for n in n_range {
            for z in ys {
                let mut x = z.clone();
                for _ in 0..n {
                    x = self.ctx.mul(&x, w)?;
                }
                x = self.ctx.mul(&x, &tail_elem)?;
                out.push(x);
            }
        }
        Ok(out)
    }

    fn lhs_product(&self, x: &Element, u_id: ElemId) -> Result<HeckeElt> {
        let word = self.ctx.sl_word(x);
        self.session
            .t_mul_word(&word, self.session.kl_basis(u_id)?, Side::Left)
    }

    fn rhs_value(
        &self,
        terms: &[RhsTerm],
        x: &Element,
        u: &Element,
        yv: Option<&Element>,
        include_txu: bool,
    ) -> Result<HeckeElt> {
        let weights = self.ctx.weights();
        let mut rhs = HeckeElt::zero();
        if include_txu {
            let xu = self.ctx.mul(x, u)?;
            let id = self
                .ball
                .id_of(&xu)
                .ok_or_else(|| Error::NotInBall("T_{xu}".into()))?;
            rhs.add_term(id, &LaurentPoly::one());
        }
        for term in terms {
            let coeff = eval_coeff(&term.coeff, weights)?;
            let mut piece = match &term.c {
                Some(ctoks) => {
                    let celem = self.element_of_tokens(ctoks, Some(x), Some(u), yv)?;
                    let cid = self
                        .ball
                        .id_of(&celem)
                        .ok_or_else(|| Error::NotInBall("C-symbol".into()))?;
                    self.session.kl_basis(cid)?.clone()
                }
                None => HeckeElt::t(0),
            };
            if let Some(ttoks) = &term.t {
                let telem = self.element_of_tokens(ttoks, Some(x), Some(u), yv)?;
                let word = self.ctx.sl_word(&telem);
                piece = self.session.t_mul_word(&word, &piece, Side::Left)?;
            }
            rhs.add_scaled(&coeff, &piece);
        }
        Ok(rhs)
    }

    fn check_congruence_instance(
        &self,
        inst: &CongInstance,
        u_id: ElemId,
        rhs: &[RhsTerm],
        full: bool,
    ) -> Result<Verdict> {
        let u = self.ball.element(u_id);
        let xu = self.ctx.mul(&inst.x, &u)?;
        if xu.length() != inst.x.length() + u.length() {
            return Ok(Verdict::Skip); // x not in X_u by length bookkeeping
        }
        if xu.length() > self.ball.radius() {
            return Ok(Verdict::Skip); // beyond the configured radius
        }
        let lhs = self.lhs_product(&inst.x, u_id)?;
        let rhs_val = self.rhs_value(rhs, &inst.x, &u, inst.y_value.as_ref(), !full)?;
        Ok(if congruent_mod_neg(&lhs, &rhs_val) {
            Verdict::Pass
        } else {
            Verdict::Fail
        })
    }

    fn congruence_result(
        &self,
        name: String,
        x: &XCell,
        u: &str,
        rhs: &[RhsTerm],
        full: bool,
        anchor: &str,
    ) -> ClaimResult {
        let family = matches!(x, XCell::Var { .. });
        let Some(u_id) = self.symbols.get(u) else {
            return skip_result(
                "congruence",
                &name,
                anchor,
                format!("unresolved symbol {u}"),
                family,
            );
        };
        for term in rhs {
            for toks in [&term.t, &term.c].into_iter().flatten() {
                if let Some(missing) = self.missing_symbol(toks) {
                    return skip_result(
                        "congruence",
                        &name,
                        anchor,
                        format!("unresolved symbol {missing}"),
                        family,
                    );
                }
            }
        }
        let instances = match x {
            XCell::Lit { lit } => match self.ctx.element_from_str(lit) {
                Ok(xe) => vec![CongInstance {
                    x: xe,
                    y_value: None,
                }],
                Err(e) => return skip_result("congruence", &name, anchor, e.to_string(), family),
            },
            XCell::Var { var, w, tail } => {
                if self.opts.nmax == 0 {
                    return skip_result(
                        "congruence",
                        &name,
                        anchor,
                        "family row not evaluated at n_max = 0".into(),
                        family,
                    );
                }
                match self.instances(var, *w, tail) {
                    Ok(v) => v,
                    Err(e) => {
                        return skip_result("congruence", &name, anchor, e.to_string(), family)
                    }
                }
            }
        };
        let mut evaluated = 0;
        let mut passed = 0;
        let mut skipped = 0;
        let mut detail = None;
        for inst in &instances {
            match self.check_congruence_instance(inst, u_id, rhs, full) {
                Ok(Verdict::Pass) => {
                    evaluated += 1;
                    passed += 1;
                }
                Ok(Verdict::Fail) => {
                    evaluated += 1;
                    if detail.is_none() {
                        detail = Some(format!("failing instance x = {}", self.ctx.display(&inst.x)));
                    }
                }
                Ok(Verdict::Skip) => skipped += 1,
                Err(e) => {
                    if matches!(e, Error::NotInBall(_)) {
                        skipped += 1;
                    } else {
                        evaluated += 1;
                        if detail.is_none() {
                            detail = Some(e.to_string());
                        }
                    }
                }
            }
        }
        let verdict = if evaluated == 0 {
            Verdict::Skip
        } else if passed == evaluated {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        ClaimResult {
            claim: name,
            kind: "congruence".into(),
            verdict,
            detail: detail.or_else(|| {
                if evaluated == 0 && !instances.is_empty() {
                    Some("no instance fits the configured radius".into())
                } else {
                    None
                }
            }),
            anchor: anchor.to_string(),
            instances: Some((evaluated, passed, skipped)),
            family,
        }
    }
}

fn skip_result(kind: &str, claim: &str, anchor: &str, reason: String, family: bool) -> ClaimResult {
    ClaimResult {
        claim: claim.to_string(),
        kind: kind.to_string(),
        verdict: Verdict::Skip,
        detail: Some(reason),
        anchor: anchor.to_string(),
        instances: None,
        family,
    }
}

fn describe_x(x: &XCell) -> String {
    match x {
        XCell::Lit { lit } => lit.clone(),
        XCell::Var { var, w, tail } => {
            format!("{var}{}{tail}", if *w { "·w" } else { "" })
        }
    }
}

/// Checks one I5-style row (implicit leading `T_{xu}`).
pub fn check_i5_row(run: &SuiteRun, row: &I5Row) -> ClaimResult {
    let name = format!("T_{{{}}} C_{{{}}}", describe_x(&row.x), row.u);
    run.congruence_result(name, &row.x, &row.u, &row.rhs, false, &row.anchor)
}

/// Checks a section-1 claim (exact expansion, support ladder or congruence
/// with possibly full right-hand side).
pub fn check_sec1_claim(run: &SuiteRun, claim: &Sec1Claim) -> ClaimResult {
    match claim {
        Sec1Claim::Expansion { x, u, terms, anchor } => check_expansion(run, x, u, terms, anchor),
        Sec1Claim::Ladder {
            x,
            u,
            support,
            anchor,
        } => check_ladder(run, x, u, support, anchor),
        Sec1Claim::Congruence {
            x,
            u,
            rhs,
            rhs_full,
            anchor,
        } => {
            let name = format!("T_{{{}}} C_{{{}}}", describe_x(x), u);
            match rhs_full {
                Some(full) => run.congruence_result(name, x, u, full, true, anchor),
                None => run.congruence_result(name, x, u, rhs, false, anchor),
            }
        }
    }
}

fn check_expansion(
    run: &SuiteRun,
    x: &str,
    u: &str,
    terms: &[RhsTerm],
    anchor: &str,
) -> ClaimResult {
    let name = format!("expand T_{{{x}}} C_{{{u}}}");
    let Some(u_id) = run.symbols.get(u) else {
        return skip_result("expansion", &name, anchor, format!("unresolved {u}"), false);
    };
    for term in terms {
        if let Some(missing) = term.c.as_ref().and_then(|t| run.missing_symbol(t)) {
            return skip_result(
                "expansion",
                &name,
                anchor,
                format!("unresolved symbol {missing}"),
                false,
            );
        }
    }
    let weights = run.ctx.weights();
    let inner = || -> Result<(bool, String)> {
        let x_elem = run.ctx.element_from_str(x)?;
        let prod = run.lhs_product(&x_elem, u_id)?;
        let expansion = run.session.expand_in_kl(&prod)?;
        let mut expect: BTreeMap<ElemId, LaurentPoly> = BTreeMap::new();
        for term in terms {
            let ctoks = term
                .c
                .as_ref()
                .ok_or_else(|| Error::Dataset("expansion term without C part".into()))?;
            let celem = run.element_of_tokens(ctoks, None, None, None)?;
            let cid = run
                .ball
                .id_of(&celem)
                .ok_or_else(|| Error::NotInBall("expansion term".into()))?;
            expect.insert(cid, eval_coeff(&term.coeff, weights)?);
        }
        let got: BTreeMap<ElemId, LaurentPoly> = expansion.into_iter().collect();
        if got == expect {
            Ok((true, String::new()))
        } else {
            let fmt = |m: &BTreeMap<ElemId, LaurentPoly>| {
                m.iter()
                    .map(|(id, p)| format!("C[{}]: {}", run.ball.word_string(*id), p.to_text()))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            Ok((
                false,
                format!("got {{{}}}, expected {{{}}}", fmt(&got), fmt(&expect)),
            ))
        }
    };
    finish_check(inner(), name, "expansion", anchor)
}

fn check_ladder(
    run: &SuiteRun,
    x: &str,
    u: &str,
    support: &[Vec<String>],
    anchor: &str,
) -> ClaimResult {
    let name = format!("ladder T_{{{x}}} C_{{{u}}}");
    let Some(u_id) = run.symbols.get(u) else {
        return skip_result("ladder", &name, anchor, format!("unresolved {u}"), false);
    };
    for toks in support {
        if let Some(missing) = run.missing_symbol(toks) {
            return skip_result(
                "ladder",
                &name,
                anchor,
                format!("unresolved symbol {missing}"),
                false,
            );
        }
    }
    let inner = || -> Result<(bool, String)> {
        let x_elem = run.ctx.element_from_str(x)?;
        let prod = run.lhs_product(&x_elem, u_id)?;
        let expansion = run.session.expand_in_kl(&prod)?;
        let mut allowed = Vec::new();
        for toks in support {
            let celem = run.element_of_tokens(toks, None, None, None)?;
            allowed.push(
                run.ball
                    .id_of(&celem)
                    .ok_or_else(|| Error::NotInBall("ladder support symbol".into()))?,
            );
        }
        let top = allowed[0];
        let mut top_ok = false;
        for (id, coeff) in &expansion {
            if *id == top {
                if !coeff.is_one() {
                    return Ok((false, format!("top coefficient {}", coeff.to_text())));
                }
                top_ok = true;
            } else if !allowed.contains(id) {
                return Ok((
                    false,
                    format!(
                        "support leaks to C[{}] (coeff {})",
                        run.ball.word_string(*id),
                        coeff.to_text()
                    ),
                ));
            }
        }
        if !top_ok {
            return Ok((false, "top term missing".into()));
        }
        Ok((true, String::new()))
    };
    finish_check(inner(), name, "ladder", anchor)
}

fn finish_check(
    outcome: Result<(bool, String)>,
    name: String,
    kind: &str,
    anchor: &str,
) -> ClaimResult {
    match outcome {
        Ok((true, _)) => ClaimResult {
            claim: name,
            kind: kind.into(),
            verdict: Verdict::Pass,
            detail: None,
            anchor: anchor.to_string(),
            instances: None,
            family: false,
        },
        Ok((false, diff)) => ClaimResult {
            claim: name,
            kind: kind.into(),
            verdict: Verdict::Fail,
            detail: Some(diff),
            anchor: anchor.to_string(),
            instances: None,
            family: false,
        },
        Err(e) => skip_result(kind, &name, anchor, e.to_string(), false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dataset_loads_and_lints() {
        let ds = Dataset::load().unwrap();
        assert!(!ds.regimes_g2.is_empty());
        assert!(!ds.regimes_b2.is_empty());
        // every regime's representative satisfies its own constraints
        for r in ds.regimes_g2.iter().chain(ds.regimes_b2.iter()) {
            let w = [r.weights[0], r.weights[1], r.weights[2]];
            for c in &r.constraints {
                assert!(
                    constraint_holds(c, w),
                    "regime {} rep {:?} violates {:?}",
                    r.id,
                    w,
                    c
                );
            }
        }
        // anchors nonempty, words parse, coefficient templates evaluate
        for case in ds.g2_i5.values().chain(ds.b2_i5.values()) {
            for row in &case.rows {
                assert!(!row.anchor.is_empty());
                if let XCell::Lit { lit } = &row.x {
                    parse_word(lit).unwrap();
                }
                for term in &row.rhs {
                    eval_coeff(&term.coeff, [9, 2, 2]).unwrap();
                }
            }
            for t in case.translations.values() {
                parse_word(t).unwrap();
            }
        }
        for part in ds.b2_part.values() {
            for blk in &part.blocks {
                assert!(!blk.anchor.is_empty());
                for w in &blk.words {
                    parse_word(w).unwrap();
                }
                if let Some(v) = &blk.value {
                    eval_linear(v, [3, 2, 3]).unwrap();
                }
            }
        }
        for claim in &ds.sec1.claims {
            match claim {
                Sec1Claim::Expansion { x, anchor, .. } => {
                    parse_word(x).unwrap();
                    assert!(!anchor.is_empty());
                }
                Sec1Claim::Ladder { x, anchor, .. } => {
                    parse_word(x).unwrap();
                    assert!(!anchor.is_empty());
                }
                Sec1Claim::Congruence { anchor, .. } => assert!(!anchor.is_empty()),
            }
        }
    }

    #[test]
    fn linear_forms_evaluate() {
        assert_eq!(eval_linear("2a-b", [9, 2, 2]).unwrap(), 16);
        assert_eq!(eval_linear("-a+3b", [9, 2, 2]).unwrap(), -3);
        assert_eq!(eval_linear("0", [1, 1, 1]).unwrap(), 0);
        assert_eq!(eval_linear("4b", [3, 2, 3]).unwrap(), 8);
        assert_eq!(eval_linear("a+c", [3, 2, 3]).unwrap(), 6);
    }

    #[test]
    fn coeff_templates_evaluate() {
        let w = [7, 4, 4];
        assert_eq!(eval_coeff("1", w).unwrap(), LaurentPoly::one());
        assert_eq!(eval_coeff("-1", w).unwrap(), LaurentPoly::constant(-1));
        assert_eq!(eval_coeff("v^(-a+3b)", w).unwrap(), LaurentPoly::v_pow(5));
        assert_eq!(
            eval_coeff("-v^(a)", w).unwrap(),
            LaurentPoly::monomial(-1, 7)
        );
        assert_eq!(
            eval_coeff("(v^(2a)-v^(2a-2b))", w).unwrap(),
            &LaurentPoly::v_pow(14) - &LaurentPoly::v_pow(6)
        );
        assert_eq!(eval_coeff("v^(1)", w).unwrap(), LaurentPoly::v_pow(1));
    }

    #[test]
    fn unknown_regime_rejected() {
        let ds = Dataset::load().unwrap();
        assert!(matches!(
            ds.regime(Preset::G2Affine, "no_such_regime"),
            Err(Error::UnknownRegime(_))
        ));
    }
}
