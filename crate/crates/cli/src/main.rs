mod args;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use serde_json::json;

use absorder::alternating::{self, AlternatingContext};
use absorder::cosets::{self, abs_cosets, EmbeddedSubgroup, Subgroup};
use absorder::groups::parse_element;
use absorder::lattice::{enumerate_flats, theorem_modular_equivalence};
use absorder::matchings::{self, FlipGraph};
use absorder::posets::abs_group;
use absorder::{search, tuples, verify, Error, RankedPoset, ReflectionGroup, Result};

use args::{Action, Cli, Command, Embedding, Format, GroupArg};

/// What a command prints, and whether the checks it ran all held.
struct Emitted {
    text: String,
    ok: bool,
}

impl Emitted {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(e) => {
            print!("{}", e.text);
            if e.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Emitted> {
    let out = cli.out;
    match &cli.command {
        Command::Poset { group: g, subgroup, action } => poset(g, subgroup.as_deref(), *action, out),
        Command::Poly { group: g, subgroup } => poly(g, subgroup.as_deref(), out),
        Command::Modular { group: g, subgroup } => modular(g, subgroup, out),
        Command::Quasi { group: g, subgroup, embed } => quasi(g, subgroup.as_deref(), *embed, out),
        Command::Lattice { group: g, subgroup } => lattice(g, subgroup.as_deref(), out),
        Command::Matchings { n, check_bijection, flip_graph } => matchings_cmd(*n, *check_bijection, *flip_graph, out),
        Command::Alternating { group: g, s0, check } => alternating_cmd(g, s0.as_deref(), *check, out),
        Command::Chains { n, k } => chains(*n, *k, out),
        Command::Verify { targets, level: _ } => verify_cmd(targets, out),
        Command::Search { kind, group: g, max_order } => search_cmd(g, (*kind).into(), *max_order, out),
    }
}

fn group(arg: &GroupArg) -> Result<ReflectionGroup> {
    ReflectionGroup::new(arg.group.parse()?)
}

fn subgroup(g: &ReflectionGroup, gens: &str) -> Result<Subgroup> {
    Ok(EmbeddedSubgroup::parse(g, gens)?.subgroup)
}

fn no_dot(command: &str) -> Error {
    Error::InvalidArgument(format!("dot output is not available for `{command}`"))
}

fn pretty<T: serde::Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit_poset(p: &RankedPoset, name: &str, out: Format) -> String {
    match out {
        Format::Json => pretty(&p.to_json()),
        Format::Dot => p.to_dot(name),
        Format::Table => poset_table(p, name),
    }
}

fn poset_table(p: &RankedPoset, name: &str) -> String {
    let mut s = String::new();
    let (graded, rank) = p.is_graded();
    writeln!(s, "{name}").unwrap();
    writeln!(s, "elements: {}", p.len()).unwrap();
    writeln!(s, "covers: {}", p.covers().len()).unwrap();
    writeln!(s, "rank polynomial: {}", p.rank_polynomial()).unwrap();
    if graded {
        writeln!(s, "graded: yes (rank {rank})").unwrap();
    } else {
        writeln!(s, "graded: no").unwrap();
    }
    writeln!(s, "maximal elements: {}", p.maximal_elements().len()).unwrap();
    writeln!(s, "maximal chains: {}", p.count_maximal_chains()).unwrap();
    if p.len() <= 64 {
        for r in 0..=p.max_rank() {
            let labels: Vec<&str> = (0..p.len()).filter(|&x| p.rank(x) == r).map(|x| p.label(x)).collect();
            writeln!(s, "rank {r}: {}", labels.join("  ")).unwrap();
        }
    }
    s
}

fn poset(arg: &GroupArg, gens: Option<&str>, action: Option<Action>, out: Format) -> Result<Emitted> {
    let g = group(arg)?;
    let action = action.unwrap_or(if gens.is_some() { Action::Cosets } else { Action::Own });
    let (p, name) = match action {
        Action::Own => (abs_group(&g), format!("Abs({})", g.desc())),
        Action::Cosets => {
            let gens = gens.ok_or_else(|| Error::InvalidArgument("the coset action needs --subgroup".into()))?;
            (abs_cosets(&g, &subgroup(&g, gens)?).0, format!("Abs({}/<{gens}>)", g.desc()))
        }
    };
    Ok(Emitted::ok(emit_poset(&p, &name, out)))
}

fn poly(arg: &GroupArg, gens: Option<&str>, out: Format) -> Result<Emitted> {
    let g = group(arg)?;
    let w = g.rank_polynomial();
    let quotient = match gens {
        Some(gens) => {
            let h = subgroup(&g, gens)?;
            let hp = h.ambient_rank_polynomial(&g);
            let xp = cosets::enumerate_cosets(&g, &h).rank_polynomial();
            let factors = w == &hp * &xp;
            Some((hp, xp, factors))
        }
        None => None,
    };
    let text = match out {
        Format::Dot => return Err(no_dot("poly")),
        Format::Json => pretty(&match &quotient {
            None => json!({ "group": g.desc().to_string(), "group_polynomial": w }),
            Some((hp, xp, f)) => json!({
                "group": g.desc().to_string(),
                "group_polynomial": w,
                "subgroup_polynomial": hp,
                "quotient_polynomial": xp,
                "factors": f,
            }),
        }),
        Format::Table => {
            let mut s = format!("W_T(q) = {w}\n");
            if let Some((hp, xp, f)) = &quotient {
                writeln!(s, "H_T(q) = {hp}").unwrap();
                writeln!(s, "X_T(q) = {xp}").unwrap();
                writeln!(s, "W_T = H_T * X_T: {}", yes(*f)).unwrap();
            }
            s
        }
    };
    Ok(Emitted::ok(text))
}

fn modular(arg: &GroupArg, gens: &str, out: Format) -> Result<Emitted> {
    let g = group(arg)?;
    let h = subgroup(&g, gens)?;
    let report = cosets::modularity_report(&g, &h);
    let text = match out {
        Format::Dot => return Err(no_dot("modular")),
        Format::Json => pretty(&report),
        Format::Table => {
            let mut s = format!("{}: |H| = {}, {} cosets\n", report.group, report.subgroup_order, report.cosets.len());
            for c in &report.cosets {
                writeln!(
                    s,
                    "{}H  length {}  minimum {}  minimal {}",
                    c.representative,
                    c.length,
                    yes(c.has_minimum),
                    c.minimal_elements.join(", ")
                )
                .unwrap();
            }
            writeln!(s, "modular: {}", yes(report.modular)).unwrap();
            if let Some(w) = &report.witness {
                writeln!(s, "witness: coset {}H has no minimum; minimal elements {}", w.representative, w.minimal_elements.join(", "))
                    .unwrap();
            }
            s
        }
    };
    Ok(Emitted { text, ok: report.modular })
}

fn quasi(arg: &GroupArg, gens: Option<&str>, embed: Option<Embedding>, out: Format) -> Result<Emitted> {
    let g = group(arg)?;
    let h = match (gens, embed) {
        (_, Some(Embedding::BInS)) => EmbeddedSubgroup::hyperoctahedral_in_symmetric(&g)?,
        (_, Some(Embedding::BInD)) => EmbeddedSubgroup::hyperoctahedral_in_even(&g)?,
        (Some(gens), None) => EmbeddedSubgroup::parse(&g, gens)?.with_induced_reflections(&g),
        (None, None) => return Err(Error::InvalidArgument("give --subgroup or --embed".into())),
    };
    let report = cosets::is_quasi_modular(&g, &h)?;
    let modular = cosets::is_modular(&g, &h.subgroup);
    let text = match out {
        Format::Dot => return Err(no_dot("quasi")),
        Format::Json => pretty(&json!({ "report": report, "modular": modular })),
        Format::Table => format!(
            "W_T(q) = {}\nH_T(H)(q) = {}\nX_T(q) = {}\nquasi-modular: {}\nmodular: {}\n",
            report.group_polynomial,
            report.subgroup_polynomial,
            report.quotient_polynomial,
            yes(report.holds),
            yes(modular)
        ),
    };
    Ok(Emitted { text, ok: report.holds })
}

fn lattice(arg: &GroupArg, gens: Option<&str>, out: Format) -> Result<Emitted> {
    let g = group(arg)?;
    let l = enumerate_flats(g.desc())?;
    let Some(gens) = gens else {
        let text = match out {
            Format::Dot => l.hasse().to_dot(&format!("L({})", g.desc())),
            Format::Json => pretty(&l.report()),
            Format::Table => {
                let report = l.report();
                let mut s = format!("{} flats, rank {}\n", report.flats.len(), report.rank);
                for f in &report.flats {
                    writeln!(s, "dim {}  mu {:>3}  modular {:<3}  {}", f.dim, f.mobius, yes(f.modular), f.flat).unwrap();
                }
                writeln!(s, "characteristic polynomial: {}", report.characteristic_polynomial).unwrap();
                s
            }
        };
        return Ok(Emitted::ok(text));
    };
    let h = subgroup(&g, gens)?;
    let r = theorem_modular_equivalence(&g, &l, &h)?;
    let text = match out {
        Format::Dot => return Err(no_dot("lattice --subgroup")),
        Format::Json => pretty(&r),
        Format::Table => {
            let rows = [
                ("modular subgroup", r.modular_subgroup),
                ("modular flat", r.modular_element),
                ("intersections are flats", r.intersections_are_flats),
                ("minimum criterion", r.minimum_criterion),
                ("minimal criterion", r.minimal_criterion),
                ("lattice factorization", r.lattice_factorization),
                ("length factorization", r.length_factorization),
                ("all agree", r.agree),
            ];
            let mut s = format!("V_H = {}, |H| = {}\n", r.flat, r.subgroup_order);
            for (name, v) in rows {
                writeln!(s, "{name}: {}", yes(v)).unwrap();
            }
            s
        }
    };
    Ok(Emitted { text, ok: r.agree })
}

fn matchings_cmd(n: usize, check: bool, flip_graph: bool, out: Format) -> Result<Emitted> {
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidArgument(format!("n must be between 1 and 6, got {n}")));
    }
    if check {
        let r = matchings::bijection_check(n)?;
        let text = match out {
            Format::Dot => return Err(no_dot("matchings --check-bijection")),
            Format::Json => pretty(&r),
            Format::Table => {
                let mut s = String::new();
                let ok = |b: bool| if b { "ok" } else { "FAILED" };
                writeln!(s, "matchings: {}", r.matchings).unwrap();
                writeln!(s, "round trip matching -> element -> matching: {}", ok(r.round_trip)).unwrap();
                writeln!(s, "round trip element -> matching -> element: {}", ok(r.inverse_round_trip)).unwrap();
                writeln!(s, "base matching -> identity: {}", ok(r.base_to_identity)).unwrap();
                writeln!(s, "flip graph edges: {}, reflection graph edges: {}", r.delta_edges, r.gamma_edges).unwrap();
                writeln!(s, "graph isomorphism: {}", yes(r.graph_isomorphism)).unwrap();
                writeln!(s, "order isomorphism: {}", yes(r.order_isomorphism)).unwrap();
                writeln!(s, "rank polynomial: {}", r.rank_polynomial).unwrap();
                writeln!(s, "bijection check: {}", ok(r.holds)).unwrap();
                s
            }
        };
        return Ok(Emitted { text, ok: r.holds });
    }
    if flip_graph {
        let f = FlipGraph::new(n);
        let text = match out {
            Format::Dot => f.to_dot(&format!("Delta_{n}")),
            Format::Json => pretty(&f),
            Format::Table => format!("flip graph on {} matchings, {} edges\n", f.vertices.len(), f.edges.len()),
        };
        return Ok(Emitted::ok(text));
    }
    Ok(Emitted::ok(emit_poset(&matchings::abs_matchings(n), &format!("Abs(M_{n})"), out)))
}

fn alternating_cmd(arg: &GroupArg, s0: Option<&str>, check: bool, out: Format) -> Result<Emitted> {
    let g = group(arg)?;
    let desc = *g.desc();
    let ctx = match s0 {
        Some(s) => {
            let s0 = parse_element(&desc, s)?;
            AlternatingContext::new(g, &s0)?
        }
        None => AlternatingContext::with_first_generator(g)?,
    };
    let name = format!("Abs({desc}+, s0 = {})", ctx.group().label(ctx.s0()));
    let p = alternating::abs_alternating(&ctx);
    if !check || out == Format::Dot {
        return Ok(Emitted::ok(emit_poset(&p, &name, out)));
    }
    let lemmas = alternating::length_lemmas_check(&ctx);
    let phi = alternating::phi_isomorphism_check(&ctx);
    let r0 = alternating::r0_ideal_check(&ctx);
    let ok = lemmas.holds && phi.holds && r0.holds;
    let text = match out {
        Format::Json => pretty(&json!({ "length_lemmas": lemmas, "phi": phi, "r0": r0 })),
        _ => {
            let mut s = poset_table(&p, &name);
            writeln!(s, "length lemmas: {}", yes(lemmas.holds)).unwrap();
            writeln!(s, "coset isomorphism: {}", yes(phi.holds)).unwrap();
            writeln!(s, "R0 order ideal: {} ({} of {} elements)", yes(r0.holds), r0.size, r0.group_order).unwrap();
            s
        }
    };
    Ok(Emitted { text, ok })
}

fn chains(n: usize, k: Option<usize>, out: Format) -> Result<Emitted> {
    if n > 7 {
        return Err(Error::TooLarge(format!("n = {n} (at most 7)")));
    }
    let rows = match k {
        Some(k) => vec![tuples::chain_count_row(n, k)?],
        None => (2..=n).flat_map(|m| (1..m).map(move |k| (m, k))).map(|(m, k)| tuples::chain_count_row(m, k)).collect::<Result<_>>()?,
    };
    let ok = rows.iter().all(|r| r.matches);
    let text = match out {
        Format::Dot => return Err(no_dot("chains")),
        Format::Json => pretty(&rows),
        Format::Table => {
            let mut s = format!("{:>2} {:>2} {:>12} {:>12}  match\n", "n", "k", "formula", "brute force");
            for r in &rows {
                writeln!(s, "{:>2} {:>2} {:>12} {:>12}  {}", r.n, r.k, r.formula, r.brute_force, yes(r.matches)).unwrap();
            }
            s
        }
    };
    Ok(Emitted { text, ok })
}

fn verify_cmd(targets: &[String], out: Format) -> Result<Emitted> {
    let mut ids = Vec::new();
    for t in targets {
        if t == "all" {
            ids.extend(verify::CRITERIA.iter().map(|&(id, _)| id));
        } else {
            let id: u8 = t.parse().map_err(|_| Error::Parse { input: t.clone(), reason: "expected `all` or a criterion number".into() })?;
            if !(1..=verify::CRITERIA.len() as u8).contains(&id) {
                return Err(Error::InvalidArgument(format!("no criterion {id}")));
            }
            ids.push(id);
        }
    }
    let results = ids.into_iter().map(verify::run).collect::<Result<Vec<_>>>()?;
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    let text = match out {
        Format::Dot => return Err(no_dot("verify")),
        Format::Json => pretty(&results),
        Format::Table => {
            let mut s: String = results.iter().map(|r| format!("{r}\n")).collect();
            writeln!(s, "{} of {} criteria passed", results.len() - failed.len(), results.len()).unwrap();
            s
        }
    };
    Ok(Emitted { text, ok: failed.is_empty() })
}

fn search_cmd(arg: &GroupArg, kind: search::SearchKind, max_order: usize, out: Format) -> Result<Emitted> {
    let g = group(arg)?;
    let report = search::search(&g, kind, max_order)?;
    let text = match out {
        Format::Dot => return Err(no_dot("search")),
        Format::Json => pretty(&report),
        Format::Table => {
            let mut s =
                format!("{}: {} subgroup classes examined, {} hits\n", report.group, report.classes_examined, report.hits.len());
            for h in &report.hits {
                let graded = if h.graded { format!("rank {}", h.max_rank) } else { "no".into() };
                writeln!(
                    s,
                    "order {:>4}  modular {:<3}  reflection {:<3}  graded {:<7}  maximal {:>3}  X_T = {}  <{}>",
                    h.order,
                    yes(h.modular),
                    yes(h.reflection_subgroup),
                    graded,
                    h.maximal_elements,
                    h.rank_polynomial,
                    h.generators.join(";")
                )
                .unwrap();
            }
            s
        }
    };
    Ok(Emitted::ok(text))
}
