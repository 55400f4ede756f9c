//! Acceptance criteria, one line of output each. Runs as a plain binary
//! (`harness = false`) so the report prints under `cargo test`.

mod common;

use std::fmt::Write as _;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use nilpotent_rref::kernel::same_null_space;
use nilpotent_rref::witness::fixtures::{
    a0, index3_fixture, f_reduction, resolve_a0_sign, resolve_script_sign, Sign, SCRIPT_LITERAL,
};
use nilpotent_rref::witness::{
    catalog_3x3, nilpotent_index, rank2_form1, witness, CatalogParams, NilpotentIndex,
};
use nilpotent_rref::{rref, Field, Matrix, RowOp, RowScript, Scalar};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64) -> Scalar {
    Scalar::from_i64(Field::RATIONALS, n)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn index_of(m: &Matrix) -> Option<usize> {
    match nilpotent_index(m).ok()? {
        NilpotentIndex::Nilpotent(k) => Some(k),
        NilpotentIndex::NotNilpotent => None,
    }
}

/// Checks every certificate invariant independently of `verify()`.
fn check_certificate(m: &Matrix) -> Result<(), String> {
    let n = m.rows();
    let cert = witness(m).map_err(|e| format!("witness failed on\n{m}: {e}"))?;
    let nil = &cert.nilpotent;
    let l = rref(m).free_cols.len();
    ensure(cert.nullity == l, || format!("nullity {} != {l}", cert.nullity))?;
    ensure(index_of(nil) == Some(n - l + 1), || {
        format!("index {:?} != n-l+1 = {} for\n{m}", index_of(nil), n - l + 1)
    })?;
    ensure(cert.index == n - l + 1, || "certificate index field wrong".into())?;
    ensure(rref(nil).rref == rref(m).rref, || format!("RREF differs for\n{m}"))?;
    ensure(cert.rref_common == rref(m).rref, || "rref_common wrong".into())?;
    ensure(m.apply(&cert.script_m_to_n).ok().as_ref() == Some(nil), || {
        format!("script does not map M to N for\n{m}")
    })
}

fn exhaustive(n: usize, p: u64) -> Outcome {
    let all = all_matrices(n, p);
    let singular_by_det = all.iter().filter(|m| det_mod(m, p) == 0).count();
    let singular_by_formula = (p.pow((n * n) as u32) - gl_order(n as u32, p)) as usize;
    let mut singular = 0;
    for rows in &all {
        let m = gf_matrix(rows, p);
        if rref(&m).rank < n {
            singular += 1;
            check_certificate(&m)?;
        }
    }
    ensure(singular == singular_by_det && singular == singular_by_formula, || {
        format!("singular count {singular}, by determinant {singular_by_det}, by |GL| {singular_by_formula}")
    })?;
    Ok(format!("{} matrices, {singular} singular, 0 failures", all.len()))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let detail = exhaustive(3, 2)?;
    let took = start.elapsed();
    ensure(took < Duration::from_secs(5), || format!("took {took:?} (limit 5s)"))?;
    Ok(format!("{detail}, {took:.2?}"))
}

fn criterion_2() -> Outcome {
    exhaustive(2, 3)
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut sizes = [0usize; 7];
    for _ in 0..500 {
        let n = rng.gen_range(2..=6);
        sizes[n] += 1;
        let m = random_singular(&mut rng, Field::RATIONALS, n);
        ensure(rref(&m).rank < n, || format!("generator produced a nonsingular matrix\n{m}"))?;
        check_certificate(&m)?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:?} (limit 60s)"))?;
    Ok(format!("500 matrices, sizes 2..6 = {:?}, {took:.2?}", &sizes[2..]))
}

const FIXTURE_SAMPLES: [(i64, i64); 5] = [(1, 1), (2, 3), (-1, 5), (7, -2), (1, 0)];

fn criterion_4() -> Outcome {
    for (a, b) in FIXTURE_SAMPLES {
        let m = index3_fixture(&q(a), &q(b)).map_err(|e| e.to_string())?;
        let sq = m.mul(&m).unwrap();
        ensure(!sq.is_zero() && sq.mul(&m).unwrap().is_zero(), || {
            format!("({a},{b}): not nilpotent of index 3")
        })?;
        let t = catalog_3x3(&CatalogParams::new(Field::RATIONALS, 2, 1).with_a(q(a)).with_b(q(b))).unwrap();
        ensure(rref(&m).rref == t, || format!("({a},{b}): RREF is not T(a,b)"))?;
    }
    Ok(format!("{} parameter pairs", FIXTURE_SAMPLES.len()))
}

/// `a, b ≠ 0` and `b ≠ 1` (at `b = 1` the final step has coefficient 0 and
/// both sign variants coincide).
const SCRIPT_SAMPLES: [(i64, i64); 6] = [(1, 2), (2, 3), (-1, 5), (7, -2), (3, -1), (-4, 7)];

fn criterion_5() -> Outcome {
    let samples: Vec<_> = SCRIPT_SAMPLES.iter().map(|&(a, b)| (q(a), q(b))).collect();
    let res = resolve_script_sign(&samples).map_err(|e| e.to_string())?;
    let sign = match res.sign {
        Sign::Plus => "III -> III + ((b-1)/b) II",
        Sign::Minus => "III -> III - ((b-1)/b) II",
    };
    Ok(format!(
        "valid final step: {sign}; as written ({SCRIPT_LITERAL}) {}",
        if res.literal_holds() { "holds" } else { "does not hold" }
    ))
}

fn criterion_6() -> Outcome {
    let mut signs = Vec::new();
    for b in [1, 2, -3] {
        let res = resolve_a0_sign(&q(b)).map_err(|e| e.to_string())?;
        signs.push(res.sign);
        let m = a0(&q(b));
        ensure(index_of(&m) == Some(3), || format!("b={b}: index {:?}", index_of(&m)))?;
        let t = rank2_form1(&q(0), &q(b)).unwrap();
        ensure(rref(&m).rref == t, || format!("b={b}: RREF is not T(0,b)"))?;
        ensure(same_null_space(&m, &t).unwrap(), || format!("b={b}: null spaces differ"))?;
    }
    ensure(signs.iter().all(|&s| s == Sign::Minus), || format!("unexpected signs {signs:?}"))?;
    Ok("b in {1, 2, -3}: entry (II,3) resolved to -b^2 (as written +b^2 fails)".into())
}

fn is_strictly_lower(m: &Matrix) -> bool {
    (0..m.rows()).all(|i| (i..m.cols()).all(|j| m.get(i, j).is_zero()))
}

fn criterion_7() -> Outcome {
    let f = Field::RATIONALS;
    for c in [-3, 0, 1, 5] {
        let m = catalog_3x3(&CatalogParams::new(f, 1, 2).with_c(q(c))).unwrap();
        ensure(index_of(&m).is_some_and(|k| k <= 3), || format!("form 2, c={c} not nilpotent"))?;
    }
    let m = catalog_3x3(&CatalogParams::new(f, 1, 3)).unwrap();
    ensure(index_of(&m).is_some_and(|k| k <= 3), || "form 3 not nilpotent".into())?;

    for (a, b) in [(1, 2), (0, 1), (-3, 4), (5, -7)] {
        let fm = catalog_3x3(&CatalogParams::new(f, 1, 1).with_a(q(a)).with_b(q(b))).unwrap();
        let op = RowOp::add_mul(3, -q(b).inv().unwrap(), 1).unwrap();
        let reduced = fm.apply(&RowScript::from_ops(vec![op])).unwrap();
        ensure(reduced.mul(&reduced).unwrap().is_zero(), || format!("F({a},{b}) reduction does not square to 0"))?;
        ensure(fm.apply(&f_reduction(&q(b)).unwrap()).unwrap() == reduced, || "f_reduction disagrees".into())?;
    }
    for a in [0, 1, -2] {
        let fm = catalog_3x3(&CatalogParams::new(f, 1, 1).with_a(q(a)).with_b(q(0))).unwrap();
        let swapped = fm.apply(&RowScript::from_ops(vec![RowOp::swap(1, 3).unwrap()])).unwrap();
        ensure(is_strictly_lower(&swapped), || format!("F({a},0) swap not strictly lower"))?;
        ensure(index_of(&swapped).is_some(), || format!("F({a},0) swap not nilpotent"))?;
    }
    Ok("forms 2 and 3 nilpotent; F reductions square to zero / strictly lower".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let fields = [Field::RATIONALS, Field::prime(5).unwrap(), Field::prime(2).unwrap()];
    for i in 0..200 {
        let field = fields[i % fields.len()];
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let m = if i % 2 == 0 && r == c {
            random_singular(&mut rng, field, r)
        } else {
            random_matrix(&mut rng, field, r, c)
        };
        let e = random_invertible(&mut rng, field, r, 10);
        let em = e.mul(&m).unwrap();
        ensure(rref(&em).rref == rref(&m).rref, || format!("rref(E·M) != rref(M) for\n{m}"))?;
        ensure(same_null_space(&m, &em).unwrap(), || format!("null space changed for\n{m}"))?;
    }
    Ok("200 (M, E) pairs over Q, GF(5), GF(2)".into())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for i in 0..200 {
        let field = if i % 2 == 0 { Field::RATIONALS } else { Field::prime(5).unwrap() };
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let m = random_matrix(&mut rng, field, r, c);
        let s = random_script(&mut rng, field, r, 12);
        let back = m.apply(&s).unwrap().apply(&s.inverse()).unwrap();
        ensure(back == m, || format!("inverse script round trip failed for\n{m}"))?;
        let red = rref(&m);
        ensure(m.apply(&red.script).unwrap() == red.rref, || format!("rref script unfaithful for\n{m}"))?;
        let oracle_ok = field.modulus().is_some() || from_dense(&naive_rref(&to_dense(&m))) == red.rref;
        ensure(oracle_ok, || format!("rref disagrees with independent reducer for\n{m}"))?;
    }
    Ok("200 matrices over Q and GF(5)".into())
}

// ---- criterion 10: the same checks through the command line ----

struct Session<'a> {
    dir: &'a Path,
    transcript: String,
}

impl Session<'_> {
    fn write(&mut self, name: &str, text: &str) {
        std::fs::write(self.dir.join(name), text).unwrap();
        writeln!(self.transcript, "== write {name}\n{text}").unwrap();
    }

    fn run(&mut self, args: &[&str]) -> (i32, String) {
        let out = Command::new(env!("CARGO_BIN_EXE_nilrref"))
            .args(args)
            .current_dir(self.dir)
            .output()
            .expect("binary runs");
        let code = out.status.code().unwrap_or(-1);
        let stdout = String::from_utf8(out.stdout).unwrap();
        writeln!(self.transcript, "== nilrref {} -> {code}\n{stdout}", args.join(" ")).unwrap();
        (code, stdout)
    }

    /// Runs and requires exit 0.
    fn ok(&mut self, args: &[&str]) -> Result<String, String> {
        match self.run(args) {
            (0, out) => Ok(out),
            (code, _) => Err(format!("`nilrref {}` exited {code}", args.join(" "))),
        }
    }

    fn save(&mut self, name: &str, args: &[&str]) -> Result<String, String> {
        let out = self.ok(args)?;
        self.write(name, &out);
        Ok(out)
    }
}

/// `n/d` with the sign moved onto the numerator.
fn frac(n: i64, d: i64) -> String {
    if d < 0 {
        format!("{}/{}", -n, -d)
    } else {
        format!("{n}/{d}")
    }
}

fn matrix_only(rref_output: &str) -> String {
    rref_output.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect()
}

fn cli_session(dir: &Path) -> Result<String, String> {
    let mut s = Session {
        dir,
        transcript: String::new(),
    };
    s.write("empty.script", "");

    // criterion 4
    for (a, b) in FIXTURE_SAMPLES {
        let (sa, sb) = (a.to_string(), b.to_string());
        let fixture = format!(
            "Q\n3 3\n-1 0 {}\n{} 0 {}\n{} 1 1\n",
            -a,
            frac(-b, a),
            -b,
            frac(-(b - 1), a)
        );
        s.write("fixture.txt", &fixture);
        s.save("t.txt", &["catalog3", "--rank", "2", "--form", "1", "--a", &sa, "--b", &sb])?;
        let idx = s.ok(&["index", "fixture.txt"])?;
        ensure(idx == "3\n", || format!("index3_fixture({a},{b}) index {idx:?}"))?;
        let reduced = matrix_only(&s.ok(&["rref", "fixture.txt"])?);
        let t = s.ok(&["apply", "t.txt", "empty.script"])?;
        ensure(reduced == t, || format!("index3_fixture({a},{b}) RREF is not T"))?;
        let cert = s.ok(&["certify", "fixture.txt", "t.txt"])?;
        ensure(cert == "row-equivalent\n", || format!("index3_fixture({a},{b}) not certified"))?;
    }

    // criterion 5
    let mut valid = [true, true];
    for (a, b) in SCRIPT_SAMPLES {
        let (sa, sb) = (a.to_string(), b.to_string());
        s.save("t.txt", &["catalog3", "--rank", "2", "--form", "1", "--a", &sa, "--b", &sb])?;
        s.write(
            "fixture.txt",
            &format!("Q\n3 3\n-1 0 {}\n{} 0 {}\n{} 1 1\n", -a, frac(-b, a), -b, frac(-(b - 1), a)),
        );
        let target = s.ok(&["apply", "fixture.txt", "empty.script"])?;
        for (k, sign) in [1i64, -1].into_iter().enumerate() {
            let script = format!(
                "swap 2 3\naddmul 2 {} 1\nscale 1 -1\naddmul 3 {} 2\n",
                frac(-b, a),
                frac(sign * (b - 1), b)
            );
            s.write("reduce.script", &script);
            let out = s.ok(&["apply", "t.txt", "reduce.script"])?;
            valid[k] &= out == target;
        }
    }
    ensure(valid[0] != valid[1], || format!("reduction script sign variants valid (+, -) = {valid:?}"))?;

    // criterion 6
    for b in [1i64, 2, -3] {
        let sb = b.to_string();
        s.save("t0.txt", &["catalog3", "--rank", "2", "--form", "1", "--a", "0", "--b", &sb])?;
        let mut resolved = Vec::new();
        for sign in [1i64, -1] {
            s.write("a0.txt", &format!("Q\n3 3\n0 0 0\n1 {} {}\n0 1 {b}\n", -b, sign * b * b));
            if s.ok(&["certify", "a0.txt", "t0.txt"])? == "row-equivalent\n" {
                resolved.push(sign);
                ensure(s.ok(&["index", "a0.txt"])? == "3\n", || format!("a0(b={b}) index"))?;
                let reduced = matrix_only(&s.ok(&["rref", "a0.txt"])?);
                ensure(reduced == s.ok(&["apply", "t0.txt", "empty.script"])?, || {
                    format!("a0(b={b}) RREF is not T(0,b)")
                })?;
            }
        }
        ensure(resolved == [-1], || format!("a0(b={b}) resolved signs {resolved:?}"))?;
    }

    // criterion 7
    for c in ["-3", "0", "5"] {
        s.save("f2.txt", &["catalog3", "--rank", "1", "--form", "2", "--c", c])?;
        let idx = s.ok(&["index", "f2.txt"])?;
        ensure(matches!(idx.as_str(), "1\n" | "2\n" | "3\n"), || format!("form 2 index {idx:?}"))?;
    }
    s.save("f3.txt", &["catalog3", "--rank", "1", "--form", "3"])?;
    ensure(s.ok(&["index", "f3.txt"])? == "2\n", || "form 3 index".into())?;
    for (a, b) in [(1i64, 2i64), (-3, 4)] {
        let (sa, sb) = (a.to_string(), b.to_string());
        s.save("f.txt", &["catalog3", "--rank", "1", "--form", "1", "--a", &sa, "--b", &sb])?;
        s.write("f.script", &format!("addmul 3 {} 1\n", frac(-1, b)));
        s.save("fr.txt", &["apply", "f.txt", "f.script"])?;
        ensure(s.ok(&["index", "fr.txt"])? == "2\n", || format!("F({a},{b}) reduction index"))?;
    }
    s.save("f.txt", &["catalog3", "--rank", "1", "--form", "1", "--a", "2", "--b", "0"])?;
    s.write("swap.script", "swap 1 3\n");
    let swapped = s.save("fr.txt", &["apply", "f.txt", "swap.script"])?;
    ensure(swapped == "Q\n3 3\n0 0 0\n0 0 0\n1 2 0\n", || format!("F(2,0) swapped: {swapped:?}"))?;
    ensure(s.ok(&["index", "fr.txt"])? == "2\n", || "F(2,0) swap index".into())?;

    // certificate reports written to files, for the transcript
    s.save("t.txt", &["catalog3", "--rank", "2", "--form", "1", "--a", "2", "--b", "3"])?;
    for (input, index) in [("t.txt", 3), ("fr.txt", 2)] {
        s.ok(&["witness", input, "--report", "report.txt"])?;
        let report = std::fs::read_to_string(dir.join("report.txt")).map_err(|e| e.to_string())?;
        writeln!(s.transcript, "== report.txt\n{report}").unwrap();
        ensure(report.contains(&format!("[index]\n{index}\n")), || format!("{input}: report index"))?;
    }

    Ok(s.transcript)
}

fn criterion_10() -> Outcome {
    let first = tempfile::tempdir().map_err(|e| e.to_string())?;
    let second = tempfile::tempdir().map_err(|e| e.to_string())?;
    let a = cli_session(first.path())?;
    let b = cli_session(second.path())?;
    ensure(a == b, || "transcripts differ between runs".into())?;
    Ok(format!(
        "{} commands, transcript {} bytes identical across two runs",
        a.matches("== nilrref").count(),
        a.len()
    ))
}

fn main() {
    // `cargo test -- --list` and friends pass flags; only run on a plain call.
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [Criterion; 10] = [
        ("exhaustive theorem check, GF(2) 3x3", criterion_1),
        ("exhaustive theorem check, GF(3) 2x2", criterion_2),
        ("randomized rational theorem check", criterion_3),
        ("index-3 fixture nilpotent of index 3 with RREF T(a,b)", criterion_4),
        ("reduction script sign resolution", criterion_5),
        ("a=0 fixture sign resolution", criterion_6),
        ("rank-1 fixtures", criterion_7),
        ("left-invertible invariance of RREF and null space", criterion_8),
        ("script algebra", criterion_9),
        ("end-to-end CLI reproduction", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
