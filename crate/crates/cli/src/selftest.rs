//! Seeded randomized consistency suites behind the hidden `selftest` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use multicurve::{
    additivity_check, cor2_check, dual_invariants, eqx_check, slice_derived, CurveContext,
    FiltrationSlice, Invariants, RigidSheaf,
};

pub struct Report {
    pub failures: u64,
    pub text: String,
}

fn random_ctx(rng: &mut ChaCha8Rng) -> CurveContext {
    let n = rng.gen_range(2..=5);
    let g = rng.gen_range(0..=4);
    let l = rng.gen_range(-4..=-1);
    CurveContext::new(n, g, l).unwrap()
}

fn random_slice(rng: &mut ChaCha8Rng) -> FiltrationSlice {
    let ctx = random_ctx(rng);
    let r_total = rng.gen_range(2..=12);
    let r_sub = rng.gen_range(1..r_total);
    let d_total = rng.gen_range(-20..=20);
    let d_sub = rng.gen_range(-20..=20);
    let k = rng.gen_range(1..ctx.n());
    let t = rng.gen_range(0..=5);
    FiltrationSlice::new(
        ctx,
        Invariants::new(r_total, d_total).unwrap(),
        Invariants::new(r_sub, d_sub).unwrap(),
        k,
        t,
    )
    .unwrap()
}

fn random_rigid(rng: &mut ChaCha8Rng) -> RigidSheaf {
    let ctx = random_ctx(rng);
    let a = rng.gen_range(1..=3);
    let k = rng.gen_range(1..ctx.n());
    let de = rng.gen_range(-10..=10);
    let df = rng.gen_range(-10..=10);
    RigidSheaf::new(ctx, a, k, de, df).unwrap()
}

pub fn run(seed: u64, cases: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0u64;
    let mut text = String::new();

    let mut suite = |name: &str, ok: bool| {
        text.push_str(&format!("{name}: {}\n", if ok { "ok" } else { "FAILED" }));
        if !ok {
            failures += 1;
        }
    };

    let mut duality_ok = true;
    let mut eqx_ok = true;
    for _ in 0..cases {
        let sl = random_slice(&mut rng);
        let d = slice_derived(&sl).unwrap();
        let dd =
            dual_invariants(dual_invariants(sl.total(), 0, sl.ctx()).unwrap(), 0, sl.ctx())
                .unwrap();
        duality_ok &= dd == sl.total();
        duality_ok &= d.bracket.deg() - sl.sub().deg() == sl.t_k();
        duality_ok &= cor2_check(&sl).unwrap();

        let rep = eqx_check(&sl).unwrap();
        let primal = d.bidual_restriction.slope().unwrap() >= d.bracket.slope().unwrap();
        let dual = d.dual_bidual_restriction.slope().unwrap() >= d.dual_bracket.slope().unwrap();
        eqx_ok &= rep.second == primal && rep.first == dual;
    }
    suite("duality involution / torsion bookkeeping / cor2", duality_ok);
    suite("eqX bracket-form equivalence", eqx_ok);

    let mut graded_ok = true;
    for _ in 0..cases {
        let s = random_rigid(&mut rng);
        let inv = s.invariants().unwrap();
        let fd: i64 = s.first_graded().unwrap().iter().map(|b| b.deg()).sum();
        let sd: i64 = s.second_graded().unwrap().iter().map(|b| b.deg()).sum();
        graded_ok &= fd == inv.deg() && sd == inv.deg();
        graded_ok &= additivity_check(&s.star_sequence().unwrap());
    }
    suite("rigid graded sums / star additivity", graded_ok);

    text.push_str(&format!(
        "selftest: {} suite failure(s), seed {seed}, {cases} cases\n",
        failures
    ));
    Report { failures, text }
}
