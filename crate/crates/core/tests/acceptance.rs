//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::{HashMap, HashSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use typeb::partitions::{abs_fiber, abs_map, enumerate_nca, enumerate_ncb};
use typeb::verify::{run, Params};
use typeb::{MarkedElement, NcPartitionB, Permutation, SignedPermutation};

type Check = fn() -> Result<String, String>;

/// Runs a registered property and turns its report into a check result.
fn property(id: &str, params: Params) -> Result<String, String> {
    let report = run(id, &params).map_err(|e| format!("{id}: {e}"))?;
    if report.passed {
        Ok(format!("{id}: {}", report.summary))
    } else {
        Err(format!("{id}: {}", report.counterexample.unwrap_or(report.summary)))
    }
}

fn all(parts: Vec<Result<String, String>>) -> Result<String, String> {
    let mut ok = Vec::new();
    for p in parts {
        ok.push(p?);
    }
    Ok(ok.join("; "))
}

fn params(n: Option<usize>, order: Option<usize>, samples: Option<usize>) -> Params {
    Params { n, order, samples, seed: 1 }
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1() -> Result<String, String> {
    for n in 1..=10usize {
        let got = enumerate_nca(n).map_err(|e| e.to_string())?.count() as u128;
        let want = binomial(2 * n as u128, n as u128) / (n as u128 + 1);
        if got != want {
            return Err(format!("|NC^(A)({n})| = {got}, expected {want}"));
        }
    }
    for n in 1..=8usize {
        let got = enumerate_ncb(n).map_err(|e| e.to_string())?.count() as u128;
        let want = binomial(2 * n as u128, n as u128);
        if got != want {
            return Err(format!("|NC^(B)({n})| = {got}, expected {want}"));
        }
    }
    Ok("type A n = 1..10, type B n = 1..8".into())
}

fn criterion_2() -> Result<String, String> {
    for n in 1..=6usize {
        let everything: HashSet<NcPartitionB> = enumerate_ncb(n).map_err(|e| e.to_string())?.collect();
        let mut covered: HashSet<NcPartitionB> = HashSet::new();
        for q in enumerate_nca(n).map_err(|e| e.to_string())? {
            let fiber = abs_fiber(&q);
            if fiber.len() != n + 1 {
                return Err(format!("fiber of {q} has {} elements", fiber.len()));
            }
            for pi in fiber {
                if abs_map(&pi) != q || !covered.insert(pi.clone()) {
                    return Err(format!("{pi} is misplaced in the fiber of {q}"));
                }
            }
        }
        if covered != everything {
            return Err(format!("fibers do not cover NC^(B)({n})"));
        }
    }
    property("abs-cover", params(Some(6), None, None))
}

fn criterion_3() -> Result<String, String> {
    property("kreweras", params(Some(5), None, None))
}

fn criterion_4() -> Result<String, String> {
    all(vec![property("iota-a", params(Some(5), None, None)), property("iota-b", params(Some(4), None, None))])
}

fn compose(a: &[i32], b: &[i32]) -> Vec<i32> {
    let apply = |p: &[i32], x: i32| x.signum() * p[x.unsigned_abs() as usize - 1];
    (1..=a.len() as i32).map(|x| apply(a, apply(b, x))).collect()
}

/// Breadth-first distances on raw signed images, generated by all reflections.
fn raw_distances(n: usize, signed: bool) -> HashMap<Vec<i32>, usize> {
    let id: Vec<i32> = (1..=n as i32).collect();
    let mut gens = Vec::new();
    for i in 0..n {
        if signed {
            let mut r = id.clone();
            r[i] = -r[i];
            gens.push(r);
        }
        for j in i + 1..n {
            let mut r = id.clone();
            r.swap(i, j);
            if signed {
                let mut s = r.clone();
                s[i] = -s[i];
                s[j] = -s[j];
                gens.push(s);
            }
            gens.push(r);
        }
    }
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut queue = VecDeque::from([id]);
    while let Some(a) = queue.pop_front() {
        let d = dist[&a];
        for r in &gens {
            let c = compose(&a, r);
            if !dist.contains_key(&c) {
                dist.insert(c.clone(), d + 1);
                queue.push_back(c);
            }
        }
    }
    dist
}

fn criterion_5() -> Result<String, String> {
    for (img, d) in raw_distances(4, false) {
        let images: Vec<usize> = img.iter().map(|&x| x as usize).collect();
        let t = Permutation::new(&images).map_err(|e| e.to_string())?;
        if t.word_length() != d {
            return Err(format!("|{t}| = {}, distance {d}", t.word_length()));
        }
    }
    for (img, d) in raw_distances(3, true) {
        let t = SignedPermutation::new(&img).map_err(|e| e.to_string())?;
        if t.word_length() != d {
            return Err(format!("|{t}| = {}, distance {d}", t.word_length()));
        }
    }
    all(vec![property("length-bfs", params(Some(4), None, None)), property("covers-b", params(Some(3), None, None))])
}

fn criterion_6() -> Result<String, String> {
    all(vec![
        property("bridge", params(Some(2), None, Some(20))),
        property("bridge", params(Some(3), None, Some(20))),
        property("bridge", params(Some(4), None, Some(20))),
        property("bridge-negative", params(Some(2), None, Some(5))),
    ])
}

fn criterion_7() -> Result<String, String> {
    property("boxconv-b-dual", params(None, Some(7), Some(50)))
}

fn criterion_8() -> Result<String, String> {
    property("boxconv-b-algebra", params(None, Some(5), Some(20)))
}

fn criterion_9() -> Result<String, String> {
    property("cumulants", params(None, Some(5), Some(3)))
}

fn criterion_10() -> Result<String, String> {
    property("moment-transform", params(None, Some(6), Some(3)))
}

fn criterion_11() -> Result<String, String> {
    all(vec![
        property("freeness", params(None, Some(5), Some(10))),
        property("free-transforms", params(None, Some(5), Some(3))),
    ])
}

fn criterion_12() -> Result<String, String> {
    property("boxconv-a-closed-forms", params(None, None, Some(10)))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Duration); 12] = [
        ("cardinalities of NC^(A) and NC^(B)", criterion_1, Duration::from_secs(60)),
        ("Abs is an (n+1)-to-1 cover", criterion_2, Duration::from_secs(30)),
        ("Kreweras complements", criterion_3, Duration::from_secs(60)),
        ("iota order isomorphisms", criterion_4, Duration::from_secs(60)),
        ("word length and covers", criterion_5, Duration::from_secs(30)),
        ("restricted convolution bridge", criterion_6, Duration::from_secs(60)),
        ("type-B boxed convolution by dual numbers", criterion_7, Duration::from_secs(120)),
        ("type-B boxed convolution algebra", criterion_8, Duration::from_secs(120)),
        ("cumulant engine", criterion_9, Duration::from_secs(120)),
        ("moment series and R-transform", criterion_10, Duration::from_secs(120)),
        ("freeness and free transforms", criterion_11, Duration::from_secs(120)),
        ("type-A boxed convolution closed forms", criterion_12, Duration::from_secs(60)),
    ];
    let mut failures = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= *budget => (true, d),
            Ok(d) => (false, format!("{d} (over the {}s budget)", budget.as_secs())),
            Err(e) => (false, e),
        };
        if !ok {
            failures += 1;
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {name} ({:.2}s): {detail}", i + 1, elapsed.as_secs_f64());
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
