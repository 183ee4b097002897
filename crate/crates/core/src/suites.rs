//! Per-regime verification runs: assembles the embedded claims for one
//! regime (Condition-I5 rows, a-function values, two-sided block
//! memberships, separations, the default-I5 spot check, and for the
//! high-ratio hexagonal regime the section-1 ladders and congruences),
//! evaluates them and produces a deterministic report.

use crate::cells::{self, CellSide};
use crate::coxeter::{CoxeterSpec, GroupCtx, Preset};
use crate::hecke::Side;
use crate::laurent::LaurentPoly;
use crate::tables::*;
use crate::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub group: String,
    pub regime: String,
    pub weights: [i64; 3],
    pub radius: u32,
    pub nmax: u32,
    pub resolution_radius: u32,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub status: String,
    pub bindings: Vec<Binding>,
    pub unresolved: Vec<(String, String)>,
    pub results: Vec<ClaimResult>,
    /// Wall-clock milliseconds, kept apart from the deterministic payload.
    pub timings_ms: BTreeMap<String, u128>,
}

pub fn group_name(preset: Preset) -> &'static str {
    match preset {
        Preset::G2Affine => "g2t",
        Preset::B2Affine => "b2t",
        Preset::Custom => "custom",
    }
}

pub fn parse_group(s: &str) -> Result<Preset> {
    match s {
        "g2t" => Ok(Preset::G2Affine),
        "b2t" => Ok(Preset::B2Affine),
        "custom" => Ok(Preset::Custom),
        _ => Err(Error::Parse(format!("unknown group {s:?}"))),
    }
}

pub struct RegimeConfig {
    pub radius: u32,
    pub nmax: u32,
    pub a_radius: u32,
    /// Override for the resolution radius; defaults per group.
    pub resolution_radius: Option<u32>,
    /// Fixed margin the working ball adds over `radius`.
    pub ball_margin: u32,
}

impl RegimeConfig {
    pub fn quick(radius: u32) -> Self {
        RegimeConfig {
            radius,
            nmax: 0,
            a_radius: 10,
            resolution_radius: None,
            ball_margin: 8,
        }
    }

    pub fn full(radius: u32) -> Self {
        RegimeConfig {
            radius,
            nmax: 1,
            a_radius: 10,
            resolution_radius: None,
            ball_margin: 8,
        }
    }
}

fn default_resolution(preset: Preset) -> u32 {
    match preset {
        Preset::G2Affine => 25,
        _ => 16,
    }
}

fn ctx_for(ds: &Dataset, preset: Preset, regime: &RegimeDef) -> Result<GroupCtx> {
    let _ = ds;
    let w = &regime.weights;
    let spec = match preset {
        Preset::G2Affine => CoxeterSpec::g2(w[0], w[1]),
        Preset::B2Affine => CoxeterSpec::b2(w[0], w[1], w[2]),
        Preset::Custom => return Err(Error::Parse("custom groups have no regimes".into())),
    };
    GroupCtx::new(spec)
}

/// Runs every claim attached to the regime and assembles the report.
pub fn run_regime(
    ds: &Dataset,
    preset: Preset,
    regime_id: &str,
    cfg: &RegimeConfig,
) -> Result<Report> {
    let regime = ds.regime(preset, regime_id)?;
    let ctx = ctx_for(ds, preset, regime)?;
    let is_sec1_host = preset == Preset::G2Affine && regime_id == "r_gt_4";

    let i5_case = regime
        .i5_case
        .as_ref()
        .and_then(|case| match preset {
            Preset::G2Affine => ds.g2_i5.get(case),
            Preset::B2Affine => ds.b2_i5.get(case),
            Preset::Custom => None,
        });

    let resolution_radius = cfg.resolution_radius.unwrap_or_else(|| {
        let base = default_resolution(preset);
        if is_sec1_host {
            base.max(ds.sec1.resolution_radius)
        } else {
            base
        }
    });
    let ball_radius = (cfg.radius + cfg.ball_margin)
        .max(resolution_radius + 1)
        .max(2 * cfg.a_radius + 1);

    let mut timings = BTreeMap::new();
    let t0 = std::time::Instant::now();
    let ball = ctx.ball(ball_radius)?;
    timings.insert("ball".into(), t0.elapsed().as_millis());

    let empty = BTreeMap::new();
    let translations = if is_sec1_host {
        // section 1 and the high-ratio I5 table share the same translations
        &ds.sec1.translations
    } else {
        i5_case.map(|c| &c.translations).unwrap_or(&empty)
    };
    let labels: &[LabelDef] = i5_case.map(|c| c.labels.as_slice()).unwrap_or(&[]);
    let symbols: &[SymbolDef] = if is_sec1_host {
        &ds.sec1.symbols
    } else {
        &[]
    };

    let t0 = std::time::Instant::now();
    let run = prepare(
        &ctx,
        &ball,
        RunOptions {
            radius: cfg.radius,
            nmax: cfg.nmax,
            a_radius: cfg.a_radius,
            resolution_radius,
        },
        symbols,
        labels,
        translations,
    )?;
    timings.insert("prepare".into(), t0.elapsed().as_millis());

    let mut results: Vec<ClaimResult> = Vec::new();

    // section-1 claims ride along with the high-ratio regime
    if is_sec1_host {
        let t0 = std::time::Instant::now();
        for claim in &ds.sec1.claims {
            results.push(check_sec1_claim(&run, claim));
        }
        timings.insert("sec1".into(), t0.elapsed().as_millis());
    }

    // Condition I5 rows
    if let Some(case) = i5_case {
        let t0 = std::time::Instant::now();
        for row in &case.rows {
            results.push(check_i5_row(&run, row));
        }
        timings.insert("i5".into(), t0.elapsed().as_millis());
    }

    // partition claims (square lattice only)
    if preset == Preset::B2Affine {
        let part_case = ds
            .b2_part
            .get(&regime.partition_case)
            .ok_or_else(|| Error::Dataset(format!("no partition case {}", regime.partition_case)))?;
        let t0 = std::time::Instant::now();
        results.extend(check_partition_claims(&run, regime, part_case, cfg)?);
        timings.insert("partition".into(), t0.elapsed().as_millis());
    }

    // default I5 spot check over the resolved cell minima
    if i5_case.is_some() {
        let t0 = std::time::Instant::now();
        results.push(check_default_i5(&run, i5_case.map(|c| c.rows.as_slice()).unwrap_or(&[])));
        timings.insert("default_i5".into(), t0.elapsed().as_millis());
    }

    let pass = results.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let fail = results.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let skip = results.iter().filter(|r| r.verdict == Verdict::Skip).count();
    Ok(Report {
        schema: 1,
        group: group_name(preset).into(),
        regime: regime_id.into(),
        weights: [regime.weights[0], regime.weights[1], regime.weights[2]],
        radius: cfg.radius,
        nmax: cfg.nmax,
        resolution_radius,
        pass,
        fail,
        skip,
        status: if fail == 0 { "pass" } else { "fail" }.into(),
        bindings: run.symbols.bindings.clone(),
        unresolved: run.symbols.unresolved.clone(),
        results,
        timings_ms: timings,
    })
}

/// a-value, set-block and separation claims from one partition table plus
/// the P_C row for this regime.
fn check_partition_claims(
    run: &SuiteRun,
    regime: &RegimeDef,
    part: &PartCase,
    cfg: &RegimeConfig,
) -> Result<Vec<ClaimResult>> {
    let mut results = Vec::new();
    let weights = run.ctx.weights();
    let two_sided = cells::cells_partition(&run.session, cfg.a_radius, CellSide::TwoSided)?;
    let has_values = part.blocks.iter().any(|b| b.value.is_some());
    let a_table = if has_values {
        Some(cells::a_table(&run.session, cfg.a_radius)?)
    } else {
        None
    };

    // block name -> ids, for set/separation claims
    let mut block_ids: BTreeMap<&str, Vec<u32>> = BTreeMap::new();
    for blk in &part.blocks {
        let mut ids = Vec::new();
        let mut missing = None;
        for w in &blk.words {
            match run
                .ctx
                .element_from_str(w)
                .ok()
                .and_then(|e| run.ball.id_of(&e))
            {
                Some(id) => ids.push(id),
                None => missing = Some(w.clone()),
            }
        }
        if let Some(w) = missing {
            results.push(ClaimResult {
                claim: format!("block {}", blk.name),
                kind: "setblock".into(),
                verdict: Verdict::Skip,
                detail: Some(format!("word {w} outside ball")),
                anchor: blk.anchor.clone(),
                instances: None,
                family: false,
            });
            continue;
        }
        block_ids.insert(&blk.name, ids.clone());

        // SetBlock: all listed words in one two-sided block
        let blocks: BTreeSet<u32> = ids
            .iter()
            .map(|&id| two_sided.block_of_id(id).unwrap())
            .collect();
        results.push(ClaimResult {
            claim: format!("{} = {{{}}} in one two-sided block", blk.name, blk.words.join(",")),
            kind: "setblock".into(),
            verdict: if blocks.len() == 1 {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            detail: if blocks.len() == 1 {
                None
            } else {
                Some(format!("split across {} blocks", blocks.len()))
            },
            anchor: blk.anchor.clone(),
            instances: None,
            family: false,
        });

        // AValue claims per listed element
        if let (Some(expr), Some(at)) = (&blk.value, &a_table) {
            let expected = eval_linear(expr, weights)?;
            for (&id, w) in ids.iter().zip(&blk.words) {
                let (value, stabilized) = at.entries[&id];
                let ok = value == expected && stabilized;
                results.push(ClaimResult {
                    claim: format!("a({w}) = {expr} = {expected}"),
                    kind: "avalue".into(),
                    verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                    detail: if ok {
                        None
                    } else {
                        Some(format!("computed {value}, stabilized {stabilized}"))
                    },
                    anchor: blk.anchor.clone(),
                    instances: None,
                    family: false,
                });
            }
        }
    }

    // P_C row for this regime: unions must merge; groups with distinct
    // a-values must separate
    if let Some(label) = &regime.pc_label {
        let row = part
            .pc
            .iter()
            .find(|r| r.label.contains(label.as_str()))
            .ok_or_else(|| Error::Dataset(format!("no P_C row matching {label:?}")))?;
        let value_of = |names: &Vec<String>| -> Option<i64> {
            let exprs: Vec<&String> = part
                .blocks
                .iter()
                .filter(|b| names.contains(&b.name))
                .filter_map(|b| b.value.as_ref())
                .collect();
            exprs
                .first()
                .map(|e| eval_linear(e, weights).expect("linted"))
        };
        let group_block = |names: &Vec<String>| -> Option<BTreeSet<u32>> {
            let mut set = BTreeSet::new();
            for n in names {
                for id in block_ids.get(n.as_str())? {
                    set.insert(two_sided.block_of_id(*id).unwrap());
                }
            }
            Some(set)
        };
        for group in &row.groups {
            if group.len() > 1 {
                let merged = group_block(group);
                let ok = matches!(&merged, Some(s) if s.len() == 1);
                results.push(ClaimResult {
                    claim: format!("two-sided union {}", group.join(" + ")),
                    kind: "setblock".into(),
                    verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                    detail: merged.map(|s| format!("{} distinct blocks", s.len())),
                    anchor: row.anchor.clone(),
                    instances: None,
                    family: false,
                });
            }
        }
        for (i, ga) in row.groups.iter().enumerate() {
            for gb in row.groups.iter().skip(i + 1) {
                let (va, vb) = (value_of(ga), value_of(gb));
                if let (Some(va), Some(vb)) = (va, vb) {
                    if va != vb {
                        let (sa, sb) = (group_block(ga), group_block(gb));
                        let ok = match (&sa, &sb) {
                            (Some(a), Some(b)) => a.is_disjoint(b),
                            _ => false,
                        };
                        results.push(ClaimResult {
                            claim: format!(
                                "{} (a={va}) and {} (a={vb}) in distinct blocks",
                                ga.join("+"),
                                gb.join("+")
                            ),
                            kind: "separation".into(),
                            verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                            detail: None,
                            anchor: row.anchor.clone(),
                            instances: None,
                            family: false,
                        });
                    }
                }
            }
        }
    }
    Ok(results)
}

/// For every resolved cell minimum `u` and every `x` of length at most 6
/// with `x u` in the cell of `u` (computed in the left partition), not
/// covered by an explicit or family row: `T_x C_u` must be congruent to
/// `T_{xu}` alone.
fn check_default_i5(run: &SuiteRun, rows: &[I5Row]) -> ClaimResult {
    let anchor = "when there is no table it means T_x C_u = T_xu mod H_<0";
    let inner = || -> Result<(usize, usize, Option<String>)> {
        // coverage: all row instances per u-symbol, for x up to length 6
        let mut covered: BTreeMap<String, BTreeSet<u32>> = BTreeMap::new();
        for row in rows {
            let entry = covered.entry(row.u.clone()).or_default();
            match &row.x {
                XCell::Lit { lit } => {
                    if let Ok(x) = run.ctx.element_from_str(lit) {
                        if let Some(id) = run.ball.id_of(&x) {
                            entry.insert(id);
                        }
                    }
                }
                XCell::Var { var, w, tail } => {
                    if let Ok(instances) = run.coverage_instances(var, *w, tail, 6) {
                        entry.extend(instances);
                    }
                }
            }
        }
        let mut checked = 0;
        let mut passed = 0;
        let mut first_fail = None;
        for binding in &run.symbols.bindings {
            if !binding.name.starts_with("u_") {
                continue;
            }
            let Some(u_id) = run.symbols.get(&binding.name) else {
                continue;
            };
            let u = run.ball.element(u_id);
            let u_block = run
                .left_partition
                .block_of_id(u_id)
                .ok_or_else(|| Error::NotInBall("u outside partition".into()))?;
            let empty = BTreeSet::new();
            let cov = covered.get(&binding.name).unwrap_or(&empty);
            for x_id in run.ball.ids_within(6) {
                if x_id == 0 {
                    continue;
                }
                let x = run.ball.element(x_id);
                let xu = run.ctx.mul(&x, &u)?;
                if xu.length() != x.length() + u.length() {
                    continue;
                }
                let Some(xu_id) = run.ball.id_of(&xu) else {
                    continue;
                };
                match run.left_partition.block_of_id(xu_id) {
                    Some(b) if b == u_block => {}
                    _ => continue,
                }
                if cov.contains(&x_id) {
                    continue;
                }
                checked += 1;
                if run.plain_congruence(&x, u_id)? {
                    passed += 1;
                } else if first_fail.is_none() {
                    first_fail = Some(format!(
                        "T_{{{}}} C_{{{}}} with extra nonnegative part",
                        run.ctx.display(&x),
                        binding.name
                    ));
                }
            }
        }
        Ok((checked, passed, first_fail))
    };
    match inner() {
        Ok((checked, passed, first_fail)) => ClaimResult {
            claim: format!("default I5 spot check ({checked} pairs)"),
            kind: "default_i5".into(),
            verdict: if passed == checked {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            detail: first_fail,
            anchor: anchor.into(),
            instances: Some((checked, passed, 0)),
            family: false,
        },
        Err(e) => ClaimResult {
            claim: "default I5 spot check".into(),
            kind: "default_i5".into(),
            verdict: Verdict::Skip,
            detail: Some(e.to_string()),
            anchor: anchor.into(),
            instances: None,
            family: false,
        },
    }
}

impl<'a> SuiteRun<'a> {
    /// Ball ids of the x-instances a family row covers (for the coverage
    /// set of the default-I5 check), up to the given length.
    pub fn coverage_instances(
        &self,
        var: &str,
        with_w: bool,
        tail: &str,
        max_len: u32,
    ) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        for inst in self.raw_instances(var, with_w, tail, 1)? {
            if inst.length() <= max_len {
                if let Some(id) = self.ball.id_of(&inst) {
                    out.push(id);
                }
            }
        }
        Ok(out)
    }

    /// `T_x C_u = T_{xu} mod H_{<0}`, the default I5 shape.
    pub fn plain_congruence(&self, x: &crate::coxeter::Element, u_id: u32) -> Result<bool> {
        let u = self.ball.element(u_id);
        let xu = self.ctx.mul(x, &u)?;
        let xu_id = self
            .ball
            .id_of(&xu)
            .ok_or_else(|| Error::NotInBall("xu".into()))?;
        let prod = self
            .session
            .t_mul_word(&self.ctx.sl_word(x), self.session.kl_basis(u_id)?, Side::Left)?;
        let mut rhs = crate::hecke::HeckeElt::zero();
        rhs.add_term(xu_id, &LaurentPoly::one());
        Ok(crate::hecke::congruent_mod_neg(&prod, &rhs))
    }
}
