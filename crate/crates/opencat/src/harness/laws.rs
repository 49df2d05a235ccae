//! The law corpus runner: generates instance families and feeds them to the
//! checkers in [`crate::coherence`].
//!
//! Output is a pure function of the configuration: instances derive their
//! seeds from the base seed and the instance index, checks run sequentially,
//! and the rendered report is byte-stable across runs.

use crate::coherence::{LawChecker, LawReport};
use crate::error::Result;
use crate::harness::generate::{
    enumerate_open_nats, gen_category, gen_open_functor, mix, CategoryStyle, GenParams,
};
use crate::openfun::OpenFunctor;
use crate::opennat::OpenNatTrans;

/// The laws the corpus runner knows how to exercise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    UnitorNat,
    AssocNat,
    HomCat,
    Interchange,
    Pentagon,
    Triangle,
}

impl LawKind {
    pub const ALL: [LawKind; 6] = [
        LawKind::UnitorNat,
        LawKind::AssocNat,
        LawKind::HomCat,
        LawKind::Interchange,
        LawKind::Pentagon,
        LawKind::Triangle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawKind::UnitorNat => "unitor-nat",
            LawKind::AssocNat => "assoc-nat",
            LawKind::HomCat => "homcat",
            LawKind::Interchange => "interchange",
            LawKind::Pentagon => "pentagon",
            LawKind::Triangle => "triangle",
        }
    }

    /// Parse a `--law` argument; `all` selects every law.
    pub fn parse(text: &str) -> Option<Vec<LawKind>> {
        if text == "all" {
            return Some(LawKind::ALL.to_vec());
        }
        LawKind::ALL
            .into_iter()
            .find(|law| law.name() == text)
            .map(|law| vec![law])
    }

    fn salt(self) -> u64 {
        match self {
            LawKind::UnitorNat => 0x1001,
            LawKind::AssocNat => 0x2002,
            LawKind::HomCat => 0x3003,
            LawKind::Interchange => 0x4004,
            LawKind::Pentagon => 0x5005,
            LawKind::Triangle => 0x6006,
        }
    }
}

/// Configuration of one corpus run.
#[derive(Clone, Debug)]
pub struct LawRunConfig {
    pub seed: u64,
    pub count: usize,
    pub laws: Vec<LawKind>,
    pub max_objects: usize,
    pub max_extra_arrows: usize,
    pub max_fiber: usize,
    /// Bound on composite fiber sizes the checkers will accept.
    pub guard: usize,
}

impl Default for LawRunConfig {
    fn default() -> Self {
        let defaults = GenParams::default();
        LawRunConfig {
            seed: 0,
            count: 25,
            laws: LawKind::ALL.to_vec(),
            max_objects: defaults.max_objects,
            max_extra_arrows: defaults.max_extra_arrows,
            max_fiber: defaults.max_fiber,
            guard: crate::coherence::DEFAULT_MAX_FIBER,
        }
    }
}

/// Per-law tallies plus the reports of every failing instance.
#[derive(Clone, Debug, Default)]
pub struct LawRunOutcome {
    pub tallies: Vec<(LawKind, usize, usize)>,
    pub failures: Vec<LawReport>,
}

impl LawRunOutcome {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    /// One line per law, `name: held/total hold`, then one line per failure.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (law, held, total) in &self.tallies {
            out.push_str(&format!("{}: {held}/{total} hold\n", law.name()));
        }
        for failure in &self.failures {
            out.push_str(&format!("{failure}\n"));
        }
        out
    }
}

fn instance_params(cfg: &LawRunConfig, law: LawKind, index: usize, role: u64) -> GenParams {
    let style = match index % 8 {
        3 => CategoryStyle::Preorder,
        6 => CategoryStyle::Product,
        _ => CategoryStyle::DagFree,
    };
    GenParams {
        seed: mix(mix(cfg.seed, law.salt()), (index as u64) << 8 | role),
        max_objects: cfg.max_objects,
        max_extra_arrows: cfg.max_extra_arrows,
        max_fiber: cfg.max_fiber,
        style,
    }
}

/// A transformation out of `dom` to use in a law instance: an enumerated
/// cell into `cod` when one exists, the identity cell otherwise.
fn pick_cell(dom: &OpenFunctor, cod: &OpenFunctor, pick: usize) -> OpenNatTrans {
    let cells = enumerate_open_nats(dom, cod, 8);
    if cells.is_empty() {
        OpenNatTrans::identity(dom)
    } else {
        cells[pick % cells.len()].clone()
    }
}

/// Run the selected laws over `count` generated instances each.
pub fn run_laws(cfg: &LawRunConfig) -> Result<LawRunOutcome> {
    let mut outcome = LawRunOutcome::default();
    for law in LawKind::ALL {
        if !cfg.laws.contains(&law) {
            continue;
        }
        let mut held = 0;
        for index in 0..cfg.count {
            let reports = run_instance(cfg, law, index)?;
            if reports.iter().all(LawReport::holds) {
                held += 1;
            } else {
                outcome
                    .failures
                    .extend(reports.into_iter().filter(|r| !r.holds()).map(|mut r| {
                        r.instance = format!("instance #{index} (seed {}): {}", cfg.seed, r.instance);
                        r
                    }));
            }
        }
        outcome.tallies.push((law, held, cfg.count));
    }
    Ok(outcome)
}

fn run_instance(cfg: &LawRunConfig, law: LawKind, index: usize) -> Result<Vec<LawReport>> {
    let p = |role: u64| instance_params(cfg, law, index, role);
    let mut checker = LawChecker::with_max_fiber(cfg.guard);
    match law {
        LawKind::UnitorNat => {
            let c = gen_category(&p(1));
            let d = gen_category(&p(2));
            let f = gen_open_functor(&p(3), &c, &d);
            let g = gen_open_functor(&p(4), &c, &d);
            let theta = pick_cell(&f, &g, index);
            let (left, right) = checker.check_unitor_naturality(&theta)?;
            Ok(vec![left, right])
        }
        LawKind::AssocNat => {
            let b = gen_category(&p(1));
            let c = gen_category(&p(2));
            let d = gen_category(&p(3));
            let e = gen_category(&p(4));
            let theta = pick_cell(
                &gen_open_functor(&p(5), &b, &c),
                &gen_open_functor(&p(6), &b, &c),
                index,
            );
            let phi = pick_cell(
                &gen_open_functor(&p(7), &c, &d),
                &gen_open_functor(&p(8), &c, &d),
                index + 1,
            );
            let psi = pick_cell(
                &gen_open_functor(&p(9), &d, &e),
                &gen_open_functor(&p(10), &d, &e),
                index + 2,
            );
            Ok(vec![checker.check_associator_naturality(&theta, &phi, &psi)?])
        }
        LawKind::HomCat => {
            let c = gen_category(&p(1));
            let d = gen_category(&p(2));
            let f = gen_open_functor(&p(3), &c, &d);
            let g = gen_open_functor(&p(4), &c, &d);
            let mut pool = enumerate_open_nats(&f, &f, 4);
            pool.extend(enumerate_open_nats(&f, &g, 4));
            pool.extend(enumerate_open_nats(&g, &g, 4));
            Ok(checker.check_hom_category_laws(&pool))
        }
        LawKind::Interchange => {
            let c = gen_category(&p(1));
            let d = gen_category(&p(2));
            let e = gen_category(&p(3));
            let f = gen_open_functor(&p(4), &c, &d);
            let f2 = gen_open_functor(&p(5), &c, &d);
            let theta = pick_cell(&f, &f2, index);
            let theta2 = pick_cell(theta.cod(), theta.cod(), index + 1);
            let g = gen_open_functor(&p(6), &d, &e);
            let g2 = gen_open_functor(&p(7), &d, &e);
            let phi = pick_cell(&g, &g2, index);
            let phi2 = pick_cell(phi.cod(), phi.cod(), index + 1);
            Ok(vec![checker.check_interchange(&theta, &theta2, &phi, &phi2)?])
        }
        LawKind::Pentagon => {
            let cats: Vec<_> = (1..=5).map(|r| gen_category(&p(r))).collect();
            let f = gen_open_functor(&p(6), &cats[0], &cats[1]);
            let g = gen_open_functor(&p(7), &cats[1], &cats[2]);
            let h = gen_open_functor(&p(8), &cats[2], &cats[3]);
            let i = gen_open_functor(&p(9), &cats[3], &cats[4]);
            Ok(vec![checker.check_pentagon(&f, &g, &h, &i)?])
        }
        LawKind::Triangle => {
            let b = gen_category(&p(1));
            let c = gen_category(&p(2));
            let d = gen_category(&p(3));
            let f = gen_open_functor(&p(4), &b, &c);
            let g = gen_open_functor(&p(5), &c, &d);
            Ok(vec![checker.check_triangle(&f, &g)?])
        }
    }
}
