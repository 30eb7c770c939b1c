//! Fixed check lists run by `hgs verify` and the acceptance test.
//!
//! Every item records what was expected, what was observed, and whether
//! it passed. An error inside an item fails that item only.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use crate::catalog::Catalog;
use crate::count::{
    duality_profile, e_brute_perm, e_byott, e_formula_product, e_formula_self, e_formula_sn, e_fpf_inhol,
    reverse_profile, BruteOptions, BruteResult, SnType,
};
use crate::error::{HgsError, Result};
use crate::group::{FiniteGroup, Limits, Subgroup};
use crate::holomorph::{
    check_h_properties, crossed_homomorphisms, hol2_holds, regular_subgroups_in_holomorph, CrossedHom, EnumOptions,
    HolElement, Holomorph, QuotientContext,
};
use crate::morphisms::{automorphism_group, normal_subgroups_flagged, HomSearch};
use crate::report::{CheckItem, Status, SuiteReport};
use crate::screen::{
    classify_group, screen_candidate, socle_and_prime, verify_lifting_certificate, verify_shape_certificate,
    Certificate, StructureKind, Tri,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Small,
    Order120,
    Order720,
    Structural,
    Stretch720,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Small, Suite::Order120, Suite::Order720, Suite::Structural, Suite::Stretch720];

    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Small => "small",
            Suite::Order120 => "paper-120",
            Suite::Order720 => "paper-720",
            Suite::Structural => "lemmas",
            Suite::Stretch720 => "stretch-720",
        }
    }
}

impl FromStr for Suite {
    type Err = HgsError;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| HgsError::Precondition(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub limits: Limits,
    /// Directory for stretch checkpoints; a temp directory if unset.
    pub checkpoint_dir: Option<PathBuf>,
    /// Also run the two optional stretch pairs with `G = S6`.
    pub stretch_optional: bool,
    /// Interrupt the first stretch run after this many homomorphisms and
    /// resume it from its checkpoint.
    pub stretch_interrupt: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            limits: Limits::default(),
            checkpoint_dir: None,
            stretch_optional: false,
            stretch_interrupt: Some(128),
        }
    }
}

struct Runner {
    items: Vec<CheckItem>,
}

impl Runner {
    fn new() -> Runner {
        Runner { items: Vec::new() }
    }

    /// Runs one item. The closure returns the observed text and whether it
    /// matched.
    fn check(&mut self, id: &str, description: &str, expected: impl Display, f: impl FnOnce() -> Result<(String, bool)>) {
        let start = Instant::now();
        let (observed, status) = match f() {
            Ok((obs, ok)) => (obs, if ok { Status::Pass } else { Status::Fail }),
            Err(e) => (format!("error: {e}"), Status::Fail),
        };
        self.push(id, description, expected.to_string(), observed, status, start);
    }

    /// An item that reports a profile and never fails.
    fn info(&mut self, id: &str, description: &str, f: impl FnOnce() -> Result<String>) {
        let start = Instant::now();
        let observed = f().unwrap_or_else(|e| format!("error: {e}"));
        self.push(id, description, "-".into(), observed, Status::Info, start);
    }

    fn push(&mut self, id: &str, description: &str, expected: String, observed: String, status: Status, start: Instant) {
        self.items.push(CheckItem {
            id: id.into(),
            description: description.into(),
            expected,
            observed,
            status,
            runtime_ms: start.elapsed().as_millis() as u64,
        });
    }
}

fn value_check(observed: u64, expected: u64) -> Result<(String, bool)> {
    Ok((observed.to_string(), observed == expected))
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> SuiteReport {
    let start = Instant::now();
    let cat = Catalog::new(opts.limits);
    let mut r = Runner::new();
    match suite {
        Suite::Small => small(&cat, &mut r),
        Suite::Order120 => order_120(&cat, &mut r),
        Suite::Order720 => order_720(&cat, &mut r),
        Suite::Structural => properties(&cat, &mut r),
        Suite::Stretch720 => stretch_720(&cat, opts, &mut r),
    }
    SuiteReport {
        suite: suite.as_str().into(),
        items: r.items,
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

fn resolve_all(cat: &Catalog, labels: &[&str]) -> Result<Vec<Arc<FiniteGroup>>> {
    labels.iter().map(|l| cat.resolve(l)).collect()
}

fn brute(g: &Arc<FiniteGroup>, candidates: &[Arc<FiniteGroup>], limits: &Limits) -> Result<BruteResult> {
    e_brute_perm(
        g,
        candidates,
        &BruteOptions {
            allow_12: false,
            limits: *limits,
        },
    )
}

fn render_types(m: &BTreeMap<String, u64>) -> String {
    let parts: Vec<String> = m.iter().filter(|(_, &v)| v > 0).map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", parts.join(", "))
}

const SMALL_ORDERS: [&[&str]; 3] = [
    &["C4", "V4"],
    &["C6", "S3"],
    &["C8", "C4xC2", "C2xC2xC2", "D4", "Q8"],
];

fn small(cat: &Catalog, r: &mut Runner) {
    let limits = *cat.limits();
    for (labels, expected) in [
        (["C4", "V4"], "{C4:1, V4:1}"),
        (["V4", "C4"], "{C4:3, V4:1}"),
    ] {
        r.check(
            &format!("fixture/brute/{}", labels[0]),
            "hand-verified brute-force fixture",
            expected,
            || {
                let gs = resolve_all(cat, &labels)?;
                let b = brute(&gs[0], &gs, &limits)?;
                let s = render_types(&b.per_type());
                let ok = s == expected;
                Ok((s, ok))
            },
        );
    }
    for labels in SMALL_ORDERS {
        let groups = match resolve_all(cat, labels) {
            Ok(g) => g,
            Err(e) => {
                r.check("resolve", "catalog resolution", "ok", || Err(e));
                continue;
            }
        };
        for g in &groups {
            let b = brute(g, &groups, &limits);
            let b = match b {
                Ok(b) => b,
                Err(e) => {
                    r.check(&format!("brute/{}", g.label()), "brute-force search", "ok", || Err(e));
                    continue;
                }
            };
            r.check(
                &format!("brute/{}/types", g.label()),
                "every regular subgroup found has a catalog type",
                "no unnamed types",
                || {
                    let unnamed = b.types.iter().filter(|(l, _)| l.starts_with("unnamed")).count();
                    Ok((format!("{unnamed} unnamed"), unnamed == 0))
                },
            );
            for n in &groups {
                r.check(
                    &format!("oracle/{}/{}", g.label(), n.label()),
                    "per-type brute-force count equals the holomorph count",
                    "brute = byott",
                    || {
                        let bv = b.count_for(&n.label());
                        let opts = EnumOptions {
                            limits,
                            ..EnumOptions::default()
                        };
                        let hv = e_byott(g, n, &opts)?.value;
                        Ok((format!("brute {bv}, byott {hv}"), bv == hv))
                    },
                );
            }
        }
    }
}

fn order_120(cat: &Catalog, r: &mut Runner) {
    let limits = *cat.limits();
    let s5 = cat.resolve("S5");
    let n = cat.resolve("AxCp(A5,2)");
    let opts = EnumOptions {
        limits,
        ..EnumOptions::default()
    };
    r.check("e(S5,S5)/formula-self", "almost simple formula for e(G, G)", 32, || {
        let c = e_formula_self(s5.as_ref().map_err(clone_err)?, &limits)?;
        Ok((format!("{}{}", c.value, cond_tag(c.conditional)), c.value == 32 && !c.conditional))
    });
    r.check("e(S5,S5)/formula-sn", "symmetric group formula, by scan of S5", 32, || {
        value_check(e_formula_sn(5, SnType::Sn)?.value, 32)
    });
    r.check("e(S5,S5)/byott", "holomorph enumeration", 32, || {
        let s5 = s5.as_ref().map_err(clone_err)?;
        value_check(e_byott(s5, s5, &opts)?.value, 32)
    });
    r.check("e(S5,A5xC2)/formula-product", "almost simple formula for e(G, A x C_p)", 20, || {
        value_check(e_formula_product(s5.as_ref().map_err(clone_err)?, &limits)?.value, 20)
    });
    r.check("e(S5,A5xC2)/formula-sn", "symmetric group formula, by scan of S5", 20, || {
        value_check(e_formula_sn(5, SnType::AnxC2)?.value, 20)
    });
    r.check("e(S5,A5xC2)/byott", "holomorph enumeration", 20, || {
        value_check(
            e_byott(s5.as_ref().map_err(clone_err)?, n.as_ref().map_err(clone_err)?, &opts)?.value,
            20,
        )
    });
    r.check("e(S5,A5xC2)/fpf-inhol", "fixed-point-free pairs in the inner holomorph", 20, || {
        value_check(
            e_fpf_inhol(s5.as_ref().map_err(clone_err)?, n.as_ref().map_err(clone_err)?, &limits)?.value,
            20,
        )
    });
}

fn clone_err(e: &HgsError) -> HgsError {
    HgsError::Precondition(format!("setup failed: {e}"))
}

fn cond_tag(conditional: bool) -> &'static str {
    if conditional {
        " (conditional)"
    } else {
        ""
    }
}

fn order_720(cat: &Catalog, r: &mut Runner) {
    let limits = *cat.limits();
    let get = |s: &str| cat.resolve(s);
    for (label, expected) in [("PGL(2,9)", 92u64), ("M10", 92)] {
        r.check(
            &format!("e({label},{label})/formula-self"),
            "almost simple formula for e(G, G), hypothesis checked",
            expected,
            || {
                let c = e_formula_self(&get(label)?, &limits)?;
                Ok((format!("{}{}", c.value, cond_tag(c.conditional)), c.value == expected && !c.conditional))
            },
        );
    }
    for (label, expected) in [("PGL(2,9)", 72u64), ("M10", 0)] {
        r.check(
            &format!("e({label},A6xC2)/formula-product"),
            "almost simple formula for e(G, A x C_p)",
            expected,
            || value_check(e_formula_product(&get(label)?, &limits)?.value, expected),
        );
    }
    for label in ["PGL(2,9)", "M10"] {
        r.check(
            &format!("screen({label},SL(2,9))"),
            "perfect N fails condition 3; certificate re-verified",
            "excluded, condition 3 fails, certificate valid",
            || {
                let n = get("SL(2,9)")?;
                let rep = screen_candidate(&get(label)?, &n, &limits)?;
                let cert_ok = match &rep.certificate {
                    Some(Certificate::LiftingFails { pairs }) => verify_lifting_certificate(&n, rep.p, pairs),
                    _ => false,
                };
                let obs = format!(
                    "excluded {}, condition 3 {:?}, certificate {}",
                    rep.excluded(),
                    rep.cond3.status,
                    if cert_ok { "valid" } else { "invalid" }
                );
                Ok((obs, rep.excluded() && rep.cond3.status == Tri::Fails && cert_ok))
            },
        );
    }
    for label in ["PGL(2,9)", "M10"] {
        r.check(
            &format!("screen({label},C720)"),
            "cyclic N excluded; certificate re-verified",
            "excluded, certificate valid",
            || {
                let g = get(label)?;
                let n = get("C720")?;
                let rep = screen_candidate(&g, &n, &limits)?;
                let (a_sub, p) = socle_and_prime(&g, &limits)?;
                let a = Arc::new(g.subgroup_as_group(&a_sub).0);
                let cert_ok = match &rep.certificate {
                    Some(Certificate::NoNormalCopyOfSocle { index_p_normals }) => {
                        verify_shape_certificate(&n, &a, p, index_p_normals, &limits)?
                    }
                    _ => false,
                };
                let obs = format!("excluded {}, certificate {}", rep.excluded(), if cert_ok { "valid" } else { "invalid" });
                Ok((obs, rep.excluded() && cert_ok))
            },
        );
    }
    r.check(
        "aut6-tower",
        "three index-2 overgroups of Inn(A6) labeled; M10 outer coset has no involutions",
        "S6, PGL(2,9), M10 of order 720; M10 outer involutions 0",
        || {
            let t = cat.tower()?;
            let mid: Vec<String> = t.entries[1..4]
                .iter()
                .map(|e| format!("{}:{}:{}", e.label, e.order, e.outer_involutions))
                .collect();
            let m10 = t.entry("M10").map(|e| e.outer_involutions);
            let labels: Vec<&str> = t.entries[1..4].iter().map(|e| e.label.as_str()).collect();
            let ok = labels == ["S6", "PGL(2,9)", "M10"]
                && t.entries[1..4].iter().all(|e| e.order == 720)
                && m10 == Some(0)
                && t.entries[4].order == 1440;
            Ok((mid.join(", "), ok))
        },
    );
    for (label, expected) in [("PGL(2,9)", 72u64), ("M10", 0)] {
        r.check(
            &format!("e({label},A6xC2)/fpf-inhol"),
            "independent route for the product formula",
            expected,
            || value_check(e_fpf_inhol(&get(label)?, &get("AxCp(A6,2)")?, &limits)?.value, expected),
        );
    }
}

/// Pairs over which crossed homomorphisms are enumerated in full.
const CROSSED_PAIRS: [(&str, &str); 9] = [
    ("S3", "S3"),
    ("S3", "C6"),
    ("C6", "S3"),
    ("D4", "Q8"),
    ("Q8", "D4"),
    ("C4xC2", "D4"),
    ("D4", "C4xC2"),
    ("C2xC2xC2", "D4"),
    ("A4", "A4"),
];

struct CrossedData {
    label: String,
    hol: Holomorph,
    all: Vec<CrossedHom>,
}

fn crossed_data(cat: &Catalog, g: &str, n: &str, bijective_only: bool) -> Result<CrossedData> {
    let limits = *cat.limits();
    let g = cat.resolve(g)?;
    let n = cat.resolve(n)?;
    let hol = Holomorph::build(&n, &limits)?;
    let mut all = Vec::new();
    for f in HomSearch::new(&g, hol.aut().carrier()).collect() {
        all.extend(crossed_homomorphisms(&hol, &f, bijective_only)?);
    }
    Ok(CrossedData {
        label: format!("({}, {})", g.label(), n.label()),
        hol,
        all,
    })
}

fn properties(cat: &Catalog, r: &mut Runner) {
    let limits = *cat.limits();
    let mut data: Vec<Result<CrossedData>> = CROSSED_PAIRS
        .iter()
        .map(|(g, n)| crossed_data(cat, g, n, false))
        .collect();
    data.push(crossed_data(cat, "S5", "AxCp(A5,2)", true));
    let data_ok = |d: &Result<CrossedData>| d.as_ref().map_err(clone_err).map(|_| ());

    r.check(
        "crossed/pair-check",
        "every emitted crossed homomorphism satisfies the crossed relation on all pairs",
        "all pass",
        || {
            let mut total = 0;
            let mut bad = Vec::new();
            for d in &data {
                data_ok(d)?;
                let d = d.as_ref().expect("checked");
                total += d.all.len();
                let b = d.all.iter().filter(|c| !c.verify_full()).count();
                if b > 0 {
                    bad.push(format!("{} {b}", d.label));
                }
            }
            Ok((format!("{total} checked, failures: [{}]", bad.join(", ")), bad.is_empty() && total > 0))
        },
    );
    r.check(
        "crossed/h-properties",
        "h is a homomorphism; fixed points, ker f and ker h behave as stated",
        "all pass",
        || {
            let mut total = 0;
            for d in &data {
                data_ok(d)?;
                let d = d.as_ref().expect("checked");
                for c in &d.all {
                    total += 1;
                    if let Err(msg) = check_h_properties(c) {
                        return Ok((format!("{}: {msg}", d.label), false));
                    }
                }
            }
            Ok((format!("{total} checked"), true))
        },
    );
    r.check(
        "crossed/characteristic-preimage",
        "g^-1 of a characteristic subgroup is a subgroup, and g induces a crossed hom on the quotient",
        "all pass",
        || {
            let mut total = 0;
            for d in &data {
                data_ok(d)?;
                let d = d.as_ref().expect("checked");
                for fl in normal_subgroups_flagged(d.hol.aut(), &limits)? {
                    if !fl.characteristic {
                        continue;
                    }
                    let q = QuotientContext::new(&d.hol, &fl.subgroup, &limits)?;
                    for c in &d.all {
                        q.induce(c)?;
                        total += 1;
                    }
                }
            }
            Ok((format!("{total} (crossed hom, subgroup) pairs"), total > 0))
        },
    );
    r.check(
        "crossed/socle-preserved",
        "g(A) = A for every bijective crossed hom for (S5, A5 x C2)",
        "all 2400",
        || {
            let d = data.last().expect("pushed");
            data_ok(d)?;
            let d = d.as_ref().expect("checked");
            let g = d.all[0].source().clone();
            let n = d.hol.base();
            let a_g = g.derived_subgroup();
            let a_n = n.derived_subgroup();
            let good = d
                .all
                .iter()
                .filter(|c| {
                    let mut img: Vec<usize> = a_g.members().iter().map(|&x| c.apply(x)).collect();
                    img.sort_unstable();
                    img == a_n.members()
                })
                .count();
            Ok((format!("{good} of {}", d.all.len()), good == d.all.len() && good == 2400))
        },
    );
    r.check(
        "holomorph/normalizer",
        "Norm(lambda) = Hol = Norm(rho) in Perm(G) for |G| <= 6",
        "holds for all 8 groups",
        || {
            let mut fails = Vec::new();
            let labels = ["C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3"];
            for l in labels {
                let hol = Holomorph::build(&cat.resolve(l)?, &limits)?;
                if !hol2_holds(&hol)? {
                    fails.push(l);
                }
            }
            Ok((format!("{} of 8, failures {fails:?}", 8 - fails.len()), fails.is_empty()))
        },
    );

    let order_le_8: [&[&str]; 8] = [
        &["C1"],
        &["C2"],
        &["C3"],
        &["C4", "V4"],
        &["C5"],
        &["C6", "S3"],
        &["C7"],
        &["C8", "C4xC2", "C2xC2xC2", "D4", "Q8"],
    ];
    let brutes: Vec<Result<(Arc<FiniteGroup>, BruteResult)>> = order_le_8
        .iter()
        .flat_map(|labels| {
            let groups = resolve_all(cat, labels);
            labels
                .iter()
                .enumerate()
                .map(move |(i, _)| {
                    let gs = groups.as_ref().map_err(clone_err)?;
                    Ok((gs[i].clone(), brute(&gs[i], gs, &limits)?))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    r.check(
        "duality",
        "for |G| <= 8: closed under duals, double dual is the identity, duals share a type, self-dual iff abelian",
        "all hold",
        || {
            let mut total = 0;
            let mut fails = Vec::new();
            for b in &brutes {
                let (g, b) = b.as_ref().map_err(clone_err)?;
                let p = duality_profile(b);
                total += p.total;
                if !(p.closed && p.double_dual && p.same_type && p.self_dual_iff_abelian) {
                    fails.push(format!("{}: {p:?}", g.label()));
                }
            }
            Ok((format!("{total} subgroups, failures [{}]", fails.join("; ")), fails.is_empty()))
        },
    );
    r.info(
        "reverse-profile",
        "for |G| <= 8 and D other than lambda, rho: how many of D, D* lie in Hol(G)",
        || {
            let mut parts = Vec::new();
            for b in &brutes {
                let (g, b) = b.as_ref().map_err(clone_err)?;
                let p = reverse_profile(g, b, &limits)?;
                if p.considered > 0 {
                    parts.push(format!(
                        "{}: one {}, both {} ({} abelian), neither {}",
                        g.label(),
                        p.exactly_one,
                        p.both,
                        p.both_abelian,
                        p.neither
                    ));
                }
            }
            Ok(parts.join("; "))
        },
    );
    r.check(
        "one-of-lambda-rho",
        "each S5-type regular subgroup of Hol(A5 x C2) is normalized by exactly one of lambda(N), rho(N)",
        "20 of 20",
        || {
            let g = cat.resolve("S5")?;
            let n = cat.resolve("AxCp(A5,2)")?;
            let hol = Holomorph::build(&n, &limits)?;
            let rc = regular_subgroups_in_holomorph(
                &hol,
                &g,
                &EnumOptions {
                    collect_subgroups: true,
                    limits,
                    ..EnumOptions::default()
                },
            )?;
            let lam: Vec<HolElement> = n.generators().iter().map(|&x| hol.lambda(x)).collect();
            let rho: Vec<HolElement> = n.generators().iter().map(|&x| hol.rho(x)).collect();
            let good = rc
                .subgroups
                .iter()
                .filter(|d| d.normalized_by(&hol, &lam) != d.normalized_by(&hol, &rho))
                .count();
            Ok((
                format!("{good} of {}", rc.subgroups.len()),
                good == rc.subgroups.len() && good == 20,
            ))
        },
    );
    for a in ["A5", "A6"] {
        r.check(
            &format!("simple/{a}/fixed-points"),
            "every automorphism fixes a nontrivial element",
            "minimum fixed-point count >= 2",
            || {
                let g = cat.resolve(a)?;
                let aut = automorphism_group(&g, &limits)?;
                let min = (0..aut.order()).map(|x| aut.fixed_point_count(x)).min().unwrap_or(0);
                Ok((format!("minimum {min} over {} automorphisms", aut.order()), min >= 2))
            },
        );
        r.check(
            &format!("simple/{a}/unique-copy"),
            "Inn(A) is the only subgroup of Aut(A) isomorphic to A",
            "every embedding of A lands on Inn(A)",
            || {
                let g = cat.resolve(a)?;
                let aut = automorphism_group(&g, &limits)?;
                let mut embeddings = 0;
                let mut images: Vec<Subgroup> = Vec::new();
                for h in HomSearch::new(&g, aut.carrier()).collect() {
                    if h.is_injective() {
                        embeddings += 1;
                        let im = h.image();
                        if !images.contains(&im) {
                            images.push(im);
                        }
                    }
                }
                let only_inner = images.len() == 1 && images[0] == *aut.inner();
                let derived_ok = g.is_perfect() && aut.carrier().derived_subgroup() == *aut.inner();
                Ok((
                    format!(
                        "{embeddings} embeddings, {} distinct image(s), A perfect and [Aut, Aut] = Inn: {derived_ok}",
                        images.len()
                    ),
                    only_inner && derived_ok && embeddings == aut.order(),
                ))
            },
        );
    }
    for (label, a, aut_order) in [("AxCp(A5,2)", "A5", 120usize), ("AxCp(A6,2)", "A6", 1440)] {
        r.check(
            &format!("product/{a}xC2"),
            "normal subgroups are 1, A, C_p, N; both factors characteristic; |Aut(N)| = (p-1)|Aut(A)|",
            format!("4 normal subgroups, |Aut| = {aut_order}"),
            || {
                let n = cat.resolve(label)?;
                let aut = automorphism_group(&n, &limits)?;
                let flagged = normal_subgroups_flagged(&aut, &limits)?;
                let orders: Vec<usize> = flagged.iter().map(|f| f.subgroup.order()).collect();
                let all_char = flagged.iter().all(|f| f.characteristic);
                let simple = cat.resolve(a)?.order();
                let mut want = vec![1, 2, simple, 2 * simple];
                want.sort_unstable();
                let mut got = orders.clone();
                got.sort_unstable();
                Ok((
                    format!(
                        "normal orders {got:?}, all characteristic {all_char}, |Aut| = {}",
                        aut.order()
                    ),
                    got == want && all_char && aut.order() == aut_order,
                ))
            },
        );
    }
    r.check(
        "almost-simple/centre",
        "almost simple groups have trivial centre and the socle has trivial centralizer",
        "S5, S6, PGL(2,9), M10 all almost simple with trivial centre",
        || {
            let mut obs = Vec::new();
            let mut ok = true;
            for l in ["S5", "S6", "PGL(2,9)", "M10"] {
                let g = cat.resolve(l)?;
                let class = classify_group(&g, &limits)?;
                let (a, p) = socle_and_prime(&g, &limits)?;
                let this = matches!(class.kind, StructureKind::AlmostSimple { .. })
                    && g.center().is_trivial()
                    && g.centralizer_of_subgroup(&a).is_trivial();
                ok &= this;
                obs.push(format!("{l}: index {p}, {}", if this { "ok" } else { "failed" }));
            }
            Ok((obs.join(", "), ok))
        },
    );
}

fn stretch_720(cat: &Catalog, opts: &SuiteOptions, r: &mut Runner) {
    let limits = *cat.limits();
    let dir = opts
        .checkpoint_dir
        .clone()
        .unwrap_or_else(|| std::env::temp_dir().join("hgs-stretch"));
    let mut pairs = vec![
        ("PGL(2,9)", "M10", 60u64),
        ("M10", "PGL(2,9)", 60),
        ("M10", "S6", 72),
        ("PGL(2,9)", "S6", 0),
    ];
    if opts.stretch_optional {
        pairs.push(("S6", "M10", 72));
        pairs.push(("S6", "PGL(2,9)", 0));
    }
    let mut values: BTreeMap<(String, String), u64> = BTreeMap::new();
    for (i, (g, n, expected)) in pairs.into_iter().enumerate() {
        r.check(
            &format!("e({g},{n})/byott"),
            "holomorph enumeration at order 720 with checkpointing",
            expected,
            || {
                std::fs::create_dir_all(&dir)?;
                let path = dir.join(format!("{}-{}.ckpt", slug(g), slug(n)));
                let gg = cat.resolve(g)?;
                let nn = cat.resolve(n)?;
                let base = EnumOptions {
                    verify_pairs: false,
                    checkpoint: Some(path.clone()),
                    resume: true,
                    limits,
                    ..EnumOptions::default()
                };
                let mut note = String::new();
                if let (0, Some(stop)) = (i, opts.stretch_interrupt) {
                    let _ = std::fs::remove_file(&path);
                    let first = EnumOptions {
                        stop_after: Some(stop),
                        ..base.clone()
                    };
                    match e_byott(&gg, &nn, &first) {
                        Err(HgsError::Checkpoint(_)) => note = format!(", interrupted after {stop} and resumed"),
                        Err(e) => return Err(e),
                        Ok(_) => {}
                    }
                }
                let c = e_byott(&gg, &nn, &base)?;
                values.insert((g.to_string(), n.to_string()), c.value);
                Ok((format!("{}{note}", c.value), c.value == expected))
            },
        );
    }
    r.info("symmetry", "e(G1, G2) against e(G2, G1) where both were computed", || {
        let mut parts = Vec::new();
        for ((g, n), v) in &values {
            if g < n {
                if let Some(w) = values.get(&(n.clone(), g.clone())) {
                    parts.push(format!("e({g},{n}) = {v}, e({n},{g}) = {w}"));
                }
            }
        }
        Ok(parts.join("; "))
    });
}

fn slug(s: &str) -> String {
    s.chars().filter(|c| c.is_ascii_alphanumeric()).collect()
}
