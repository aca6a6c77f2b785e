use std::fmt::Write as _;

use serde_json::{json, Value};

use semiglue::binomial::parse_binomial;
use semiglue::constructions::{default_index, embed_and_glue, PlaneHomogeneousGens};
use semiglue::gluing::{
    check_rank_conditions, find_coprime_pair, gluable_lattice_point, implication_chain_audit,
    is_member, level, necessary_conditions, nondegenerate_rows, verify_gluing, AuditOptions,
    DEFAULT_DBOX,
};
use semiglue::homology::glued_betti;
use semiglue::toric::{enumerate_oracle, toric_ideal};
use semiglue::{BettiSequence, Error, GluingCandidate, GluingReport, SemigroupGens, Verdict};

use crate::input::InputDocument;
use crate::report::{self, Bounds};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Yes = 0,
    No = 1,
    Input = 2,
    Inconclusive = 3,
}

impl Exit {
    pub fn outcome(self) -> &'static str {
        match self {
            Exit::Yes => "yes",
            Exit::No => "no",
            Exit::Input => "input-error",
            Exit::Inconclusive => "inconclusive",
        }
    }

    fn of(v: Verdict) -> Exit {
        match v {
            Verdict::Yes => Exit::Yes,
            Verdict::No => Exit::No,
            Verdict::NotFoundWithinBound => Exit::Inconclusive,
        }
    }
}

pub struct Outcome {
    pub exit: Exit,
    pub text: String,
    pub result: Value,
}

#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            exit: Exit::Input,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::BoundTooLarge { .. } | Error::Overflow(_) => Exit::Inconclusive,
            Error::RankConditionsFail { .. } | Error::NotAGluing | Error::NotInIdeal(_) => Exit::No,
            _ => Exit::Input,
        };
        Failure {
            exit,
            message: e.to_string(),
        }
    }
}

type Run = Result<Outcome, Failure>;

pub struct Context<'a> {
    pub doc: &'a InputDocument,
    pub bounds: Bounds,
}

impl Context<'_> {
    fn a(&self) -> Result<SemigroupGens, Failure> {
        if self.doc.a.is_empty() {
            return Err(Failure::input("missing A: section"));
        }
        Ok(SemigroupGens::new(self.doc.a.clone(), "x")?)
    }

    fn b(&self) -> Result<SemigroupGens, Failure> {
        match &self.doc.b {
            Some(b) if !b.is_empty() => Ok(SemigroupGens::new(b.clone(), "y")?),
            _ => Err(Failure::input("missing B: section")),
        }
    }

    fn pair(&self) -> Result<(SemigroupGens, SemigroupGens), Failure> {
        let (a, b) = (self.a()?, self.b()?);
        if a.n() != b.n() {
            return Err(Failure::input(format!(
                "A has vectors of length {}, B of length {}",
                a.n(),
                b.n()
            )));
        }
        Ok((a, b))
    }

    fn multipliers(&self, k1: Option<u64>, k2: Option<u64>) -> (u64, u64) {
        (
            k1.or(self.doc.k1).unwrap_or(1),
            k2.or(self.doc.k2).unwrap_or(1),
        )
    }
}

fn vector<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn rank_line(rc: &semiglue::gluing::RankConditions) -> String {
    format!(
        "rank A = {}, rank B = {}, rank [A|B] = {}, n = {}",
        rc.rank_a, rc.rank_b, rc.rank_ab, rc.n
    )
}

pub fn lattice_point(ctx: &Context) -> Run {
    let (a, b) = ctx.pair()?;
    let rc = check_rank_conditions(&a, &b)?;
    let mut text = rank_line(&rc) + "\n";
    if !rc.hold_after_projection() {
        text.push_str("rank conditions fail: need rank A + rank B = rank [A|B] + 1\n");
        return Ok(Outcome {
            exit: Exit::No,
            text,
            result: json!({ "rank_conditions": report::rank_conditions(&rc), "u": null }),
        });
    }
    let mut projected = None;
    if rc.is_degenerate() {
        let rows = nondegenerate_rows(&a, &b)?;
        let shown: Vec<usize> = rows.iter().map(|i| i + 1).collect();
        writeln!(
            text,
            "degenerate: projected onto coordinates {}",
            vector(&shown)
        )
        .unwrap();
        projected = Some(shown);
    }
    let u = gluable_lattice_point(&a, &b)?;
    writeln!(text, "u = {u}").unwrap();
    Ok(Outcome {
        exit: Exit::Yes,
        text,
        result: json!({
            "rank_conditions": report::rank_conditions(&rc),
            "projected_rows": projected,
            "u": report::lattice(&u),
        }),
    })
}

pub fn toric(ctx: &Context) -> Run {
    let a = ctx.a()?;
    let ideal = toric_ideal(&a)?;
    let block = a.block();
    let mut text = format!("mu = {}\n", ideal.mu());
    for g in ideal.generators() {
        writeln!(text, "  {}", g.display(block)).unwrap();
    }
    let mut result = json!({
        "mu": ideal.mu(),
        "generators": report::binomials(ideal.generators(), block),
        "degrees": ideal.degrees.iter().map(|d| d.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    let mut exit = Exit::Yes;
    if let Some(bound) = &ctx.bounds.degree_bound {
        let bound = expand_bound(bound, a.n())?;
        match enumerate_oracle(&a, &bound, ctx.bounds.work_limit) {
            Ok(oracle) => {
                let outside = oracle.iter().filter(|o| !ideal.ideal.contains(o)).count();
                let within: Vec<_> = ideal
                    .generators()
                    .iter()
                    .filter(|g| {
                        a.degree(&g.plus().0)
                            .iter()
                            .zip(&bound)
                            .all(|(&d, &b)| d <= i128::from(b))
                    })
                    .collect();
                let missing = within
                    .iter()
                    .filter(|g| !oracle.contains(g) && !oracle.contains(&g.negated()))
                    .count();
                writeln!(
                    text,
                    "oracle: {} binomials within degree {}, {} outside I_A; {} of {} generators within the bound missing",
                    oracle.len(),
                    vector(&bound),
                    outside,
                    missing,
                    within.len()
                )
                .unwrap();
                if outside + missing > 0 {
                    exit = Exit::No;
                }
                result["oracle"] = json!({
                    "size": oracle.len(),
                    "outside_ideal": outside,
                    "generators_within_bound": within.len(),
                    "generators_missing": missing,
                });
            }
            Err(Error::BoundTooLarge { limit }) => {
                writeln!(text, "oracle: work limit {limit} exceeded").unwrap();
                exit = Exit::Inconclusive;
                result["oracle"] = json!({ "work_limit_exceeded": limit });
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Outcome { exit, text, result })
}

fn expand_bound(bound: &[i64], n: usize) -> Result<Vec<i64>, Failure> {
    match bound.len() {
        1 => Ok(vec![bound[0]; n]),
        m if m == n => Ok(bound.to_vec()),
        m => Err(Failure::input(format!(
            "degree bound of length {m}, expected 1 or {n}"
        ))),
    }
}

fn describe(r: &GluingReport, text: &mut String) {
    let block = &r.block;
    writeln!(text, "C = {}·A u {}·B", r.k1, r.k2).unwrap();
    writeln!(text, "{}", rank_line(&r.rank_conditions)).unwrap();
    if let Some(rows) = &r.projected_rows {
        let shown: Vec<usize> = rows.iter().map(|i| i + 1).collect();
        writeln!(
            text,
            "degenerate: projected onto coordinates {}",
            vector(&shown)
        )
        .unwrap();
    }
    if let Some(u) = &r.u {
        writeln!(text, "u = {u}").unwrap();
    }
    if r.u.is_some() {
        match &r.witness_a {
            Some(c) => writeln!(text, "A·{} = {}·u", vector(c), r.k2).unwrap(),
            None => writeln!(text, "{}·u is not in <A>", r.k2).unwrap(),
        }
        match &r.witness_b {
            Some(d) => writeln!(text, "B·{} = {}·u", vector(d), r.k1).unwrap(),
            None => writeln!(text, "{}·u is not in <B>", r.k1).unwrap(),
        }
    }
    writeln!(
        text,
        "mu(I_A) = {}, mu(I_B) = {}, mu(I_C) = {}",
        r.mu_a(),
        r.mu_b(),
        r.mu_c()
    )
    .unwrap();
    writeln!(text, "is_gluing = {}", r.is_gluing).unwrap();
    if let (Some(rho), Some(source)) = (&r.rho, r.rho_source) {
        let lvl = r
            .rho_level
            .map(|l| format!(", level {l}"))
            .unwrap_or_default();
        writeln!(
            text,
            "rho = {} ({}{lvl})",
            rho.display(block),
            source.as_str()
        )
        .unwrap();
    }
    for (name, gens) in [
        ("I_A", &r.ideal_a),
        ("I_B", &r.ideal_b),
        ("I_C", &r.ideal_c),
    ] {
        writeln!(text, "{name}:").unwrap();
        for g in gens.iter() {
            writeln!(text, "  {}", g.display(block)).unwrap();
        }
    }
    if !r.is_gluing && !r.extra_generators.is_empty() {
        writeln!(text, "generators of I_C outside I_A + I_B:").unwrap();
        for g in &r.extra_generators {
            writeln!(text, "  {}", g.display(block)).unwrap();
        }
    }
    let h = |s: &semiglue::HomologySummary| {
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_else(|| "?".into());
        format!(
            "dim {}, pd {}, depth {}, ci {}, cm {}, gorenstein {}",
            s.dim,
            opt(s.pd),
            opt(s.depth),
            s.ci,
            s.cm,
            s.gorenstein
        )
    };
    writeln!(text, "k[A]: {}", h(&r.homology_a)).unwrap();
    writeln!(text, "k[B]: {}", h(&r.homology_b)).unwrap();
    writeln!(text, "k[C]: {}", h(&r.homology_c)).unwrap();
    if let Some(p) = &r.predicted {
        writeln!(text, "predicted k[C]: {}", h(p)).unwrap();
    }
}

pub fn check_gluing(ctx: &Context, k1: Option<u64>, k2: Option<u64>) -> Run {
    let (a, b) = ctx.pair()?;
    let (k1, k2) = ctx.multipliers(k1, k2);
    let cand = GluingCandidate::new(a, b, k1, k2)?;
    let r = verify_gluing(&cand)?;
    let mut text = String::new();
    describe(&r, &mut text);
    Ok(Outcome {
        exit: if r.is_gluing { Exit::Yes } else { Exit::No },
        text,
        result: report::gluing(&r),
    })
}

pub fn find_gluing(ctx: &Context) -> Run {
    let (a, b) = ctx.pair()?;
    let kmax = ctx.bounds.kmax;
    let nc = necessary_conditions(&a, &b, kmax)?;
    if !nc.rank_conditions.hold_after_projection() {
        return Ok(Outcome {
            exit: Exit::No,
            text: format!("{}\nrank conditions fail\n", rank_line(&nc.rank_conditions)),
            result: json!({ "pair": null, "rank_conditions": report::rank_conditions(&nc.rank_conditions) }),
        });
    }
    let u = nc.u.clone().expect("rank conditions hold");
    let never = |m: &Option<semiglue::gluing::Multiples>| m.as_ref().is_some_and(|m| m.never);
    if never(&nc.multiples_a) || never(&nc.multiples_b) {
        let side = if never(&nc.multiples_a) { "A" } else { "B" };
        return Ok(Outcome {
            exit: Exit::No,
            text: format!("u = {u}\nno positive multiple of u lies in <{side}>\n"),
            result: json!({ "pair": null, "u": report::lattice(&u), "never": side }),
        });
    }
    let Some(pair) = find_coprime_pair(&a, &b, kmax)? else {
        let ks = |m: &Option<semiglue::gluing::Multiples>| {
            m.as_ref().map(|m| m.ks()).unwrap_or_default()
        };
        return Ok(Outcome {
            exit: Exit::Inconclusive,
            text: format!(
                "u = {u}\nmultiples in <A>: {:?}\nmultiples in <B>: {:?}\nno coprime pair within bound {kmax}\n",
                ks(&nc.multiples_a),
                ks(&nc.multiples_b)
            ),
            result: json!({
                "pair": null,
                "u": report::lattice(&u),
                "multiples_a": ks(&nc.multiples_a),
                "multiples_b": ks(&nc.multiples_b),
            }),
        });
    };
    let cand = GluingCandidate::new(a, b, pair.k1, pair.k2)?;
    let r = verify_gluing(&cand)?;
    let mut text = format!("coprime pair k1 = {}, k2 = {}\n", pair.k1, pair.k2);
    describe(&r, &mut text);
    let mut result = report::gluing(&r);
    result["pair"] = json!([pair.k1, pair.k2]);
    Ok(Outcome {
        exit: if r.is_gluing { Exit::Yes } else { Exit::No },
        text,
        result,
    })
}

pub fn audit(ctx: &Context) -> Run {
    let (a, b) = ctx.pair()?;
    let mut options = AuditOptions {
        kmax: ctx.bounds.kmax,
        dbox: DEFAULT_DBOX,
        extra_pairs: Vec::new(),
    };
    if ctx.doc.k1.is_some() || ctx.doc.k2.is_some() {
        options.extra_pairs.push(ctx.multipliers(None, None));
    }
    let rc = check_rank_conditions(&a, &b)?;
    if !rc.hold_after_projection() {
        return Ok(Outcome {
            exit: Exit::No,
            text: format!("{}\nrank conditions fail\n", rank_line(&rc)),
            result: json!({ "rank_conditions": report::rank_conditions(&rc) }),
        });
    }
    let au = implication_chain_audit(&a, &b, &options)?;
    let mut text = format!("u = {}\n", au.u);
    let pair = |p: Option<(u64, u64)>| {
        p.map(|(x, y)| format!(" k1 = {x}, k2 = {y}"))
            .unwrap_or_default()
    };
    writeln!(
        text,
        "(a) coprime multipliers: {}{}",
        au.a.as_str(),
        pair(au.coprime_pair)
    )
    .unwrap();
    writeln!(
        text,
        "(b) gluing verified: {}{}",
        au.b.as_str(),
        pair(au.glued_pair)
    )
    .unwrap();
    writeln!(
        text,
        "(c) multiples of u: {} (A: {:?}, B: {:?})",
        au.c.as_str(),
        au.multiples_a,
        au.multiples_b
    )
    .unwrap();
    match &au.d_witness {
        Some((x, y)) => writeln!(
            text,
            "(d) A·X = B·Y: yes, X = {}, Y = {}",
            vector(x),
            vector(y)
        )
        .unwrap(),
        None => writeln!(text, "(d) A·X = B·Y: {}", au.d.as_str()).unwrap(),
    }
    for v in &au.violations {
        writeln!(text, "violation: {v}").unwrap();
    }
    let exit = if !au.violations.is_empty() {
        Exit::Inconclusive
    } else {
        Exit::of(au.b)
    };
    Ok(Outcome {
        exit,
        text,
        result: json!({
            "u": report::lattice(&au.u),
            "a": au.a.as_str(),
            "b": au.b.as_str(),
            "c": au.c.as_str(),
            "d": au.d.as_str(),
            "coprime_pair": au.coprime_pair,
            "glued_pair": au.glued_pair,
            "multiples_a": au.multiples_a,
            "multiples_b": au.multiples_b,
            "d_witness": au.d_witness,
            "violations": au.violations,
            "dbox": options.dbox,
        }),
    })
}

fn rows_of(g: &SemigroupGens) -> Vec<Vec<i64>> {
    (0..g.n())
        .map(|i| g.columns().iter().map(|c| c[i]).collect())
        .collect()
}

pub fn embed_glue(ctx: &Context, index: Option<usize>) -> Run {
    let (a, b) = ctx.pair()?;
    let p = PlaneHomogeneousGens::from_gens(&a)?;
    let q = PlaneHomogeneousGens::from_gens(&b)?;
    let i = match index.or(ctx.doc.i) {
        Some(i) => i,
        None => match default_index(&p, &q) {
            Some(i) => i,
            None => {
                return Ok(Outcome {
                    exit: Exit::No,
                    text: format!("no index i with gcd({}, a_i) = 1\n", q.degree()),
                    result: json!({ "index": null }),
                })
            }
        },
    };
    let e = embed_and_glue(&p, &q, i)?;
    let r = verify_gluing(&e.candidate)?;
    let block = e.candidate.block();
    let mut text = format!(
        "i = {i}, m = {}, r = {}, k1 = {}, k2 = {}, degree {}\n",
        e.m,
        e.r,
        e.k1,
        e.k2,
        e.degree()
    );
    for (name, g) in [("A'", &e.a_prime), ("B'", &e.b_prime), ("C", e.c())] {
        writeln!(text, "{name}:").unwrap();
        for row in rows_of(g) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(text, "  {}", cells.join(" ")).unwrap();
        }
    }
    writeln!(text, "rho = {}", e.rho.display(block)).unwrap();
    describe(&r, &mut text);
    let mut result = report::gluing(&r);
    result["embedding"] = json!({
        "i": i,
        "m": e.m,
        "r": e.r,
        "degree": e.degree(),
        "a_prime": rows_of(&e.a_prime),
        "b_prime": rows_of(&e.b_prime),
        "c": rows_of(e.c()),
        "rho": e.rho.display(block),
    });
    Ok(Outcome {
        exit: if r.is_gluing { Exit::Yes } else { Exit::No },
        text,
        result,
    })
}

pub fn betti_glue(ctx: &Context) -> Run {
    let get = |v: &Option<Vec<u64>>, name: &str| -> Result<BettiSequence, Failure> {
        let v = v
            .clone()
            .ok_or_else(|| Failure::input(format!("missing {name}: line")))?;
        Ok(BettiSequence::new(v)?)
    };
    let a = get(&ctx.doc.betti_a, "betti_a")?;
    let b = get(&ctx.doc.betti_b, "betti_b")?;
    let c = glued_betti(&a, &b)?;
    let text = format!(
        "beta(C) = {}\npd = {}\n",
        vector(c.values()),
        c.projective_dimension()
    );
    Ok(Outcome {
        exit: Exit::Yes,
        text,
        result: json!({ "betti": c.values(), "pd": c.projective_dimension() }),
    })
}

pub fn membership(ctx: &Context) -> Run {
    let a = ctx.a()?;
    let v = ctx
        .doc
        .v
        .clone()
        .ok_or_else(|| Failure::input("missing v: line"))?;
    if v.len() != a.n() {
        return Err(Failure::input(format!(
            "v has length {}, expected {}",
            v.len(),
            a.n()
        )));
    }
    match is_member(&v, &a)? {
        Some(x) => Ok(Outcome {
            exit: Exit::Yes,
            text: format!("{} = A·{}\n", vector(&v), vector(&x)),
            result: json!({ "member": true, "coefficients": x }),
        }),
        None => Ok(Outcome {
            exit: Exit::No,
            text: format!("{} is not in <A>\n", vector(&v)),
            result: json!({ "member": false, "coefficients": null }),
        }),
    }
}

pub fn level_cmd(ctx: &Context, k1: Option<u64>, k2: Option<u64>) -> Run {
    let (a, b) = ctx.pair()?;
    let (k1, k2) = ctx.multipliers(k1, k2);
    let cand = GluingCandidate::new(a, b, k1, k2)?;
    let w = ctx
        .doc
        .w
        .as_deref()
        .ok_or_else(|| Failure::input("missing w: line"))?;
    let w = parse_binomial(w, cand.block())?;
    let shown = w.display(cand.block());
    if !toric_ideal(cand.glued())?.ideal.contains(&w) {
        return Ok(Outcome {
            exit: Exit::No,
            text: format!("{shown} is not in I_C\n"),
            result: json!({ "w": shown, "in_ideal": false, "level": null }),
        });
    }
    let l = level(&w, &cand)?;
    Ok(Outcome {
        exit: Exit::Yes,
        text: format!("level({shown}) = {l}\n"),
        result: json!({ "w": shown, "in_ideal": true, "level": l }),
    })
}
