//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Each check compares the library against an oracle computed
//! pointwise or by brute force in this file.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use nba_core::check::Mode;
use nba_core::derived::{
    coordinates_index, perm_index, reconstruct_summands, sum_i, Bracketing, CenterParams, Permutation,
};
use nba_core::ideals::{
    admissible_atoms, all_congruences, all_multideals, all_ultramultideals, boolean_ideal_filter_view,
    extend_to_ultra, is_homomorphism_onto, is_prime, multideal_of, stone_embed, theta_of, Congruence,
    Multideal, DEFAULT_CONGRUENCE_BOUND,
};
use nba_core::representation::{partial_fn_algebra, star_embed, verify_embedding, PartialFn};
use nba_core::skew::{
    audit_right_handed, audit_skew_ba, audit_skew_lattice, audit_skew_star, boolean_center, relations,
    right_church_reduct, skew_reduct, AxiomReport, SkewTables, StarTable,
};
use nba_core::synthesis::{simplify, synth, verify_term, TruthTable};
use nba_core::term::laws::{nba_axioms, skew_dictionary};
use nba_core::{
    check_identity, power_algebra, subalgebra_closure, AuditConfig, CheckMode, Dim, Element, IndexedAlgebra,
    PowerAlgebra, TableAlgebra, Term,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dim(n: usize) -> Dim {
    Dim::new(n).unwrap()
}

fn pow(n: usize, m: usize) -> PowerAlgebra {
    power_algebra(n, m).unwrap()
}

fn cfg() -> AuditConfig {
    AuditConfig::default()
}

fn report_ok(r: &AxiomReport, what: &str) -> Result<(), String> {
    if let Some(f) = r.first_failure() {
        return Err(format!("{what}: {} fails at {:?}", f.name, f.counterexample));
    }
    ensure(r.outcomes.iter().all(|o| o.mode.is_exhaustive()), || format!("{what}: not exhaustive"))
}

/// Every assignment of `vars` values from `1..=n`, last position fastest.
fn for_each_tuple(n: usize, vars: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut t = vec![1usize; vars];
    loop {
        if !f(&t) {
            return false;
        }
        let mut pos = vars;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            if t[pos] < n {
                t[pos] += 1;
                break;
            }
            t[pos] = 1;
        }
    }
}

/// B0–B4 evaluated directly in the generator, `q(x, ys) = ys[x]`.
fn oracle_axioms(n: usize) -> bool {
    let q = |x: usize, ys: &[usize]| ys[x - 1];
    let consts: Vec<usize> = (1..=n).collect();
    let b0 = for_each_tuple(n, n, |xs| (1..=n).all(|i| q(i, xs) == xs[i - 1]));
    let b1 = for_each_tuple(n, 2, |v| q(v[0], &vec![v[1]; n]) == v[1]);
    let b2 = for_each_tuple(n, 1 + n * n, |v| {
        let y = v[0];
        let row = |r: usize| &v[1 + (r - 1) * n..1 + r * n];
        let inner: Vec<usize> = (1..=n).map(|r| q(y, row(r))).collect();
        let diag: Vec<usize> = (1..=n).map(|r| row(r)[r - 1]).collect();
        q(y, &inner) == q(y, &diag)
    });
    // x_r = (x_r0, x_r1..x_rn) for r in 1..=n
    let b3 = for_each_tuple(n, 1 + n * (n + 1), |v| {
        let y = v[0];
        let row = |r: usize| &v[1 + (r - 1) * (n + 1)..1 + r * (n + 1)];
        let inner: Vec<usize> = (1..=n).map(|r| q(row(r)[0], &row(r)[1..])).collect();
        let cols: Vec<usize> = (0..=n).map(|s| q(y, &(1..=n).map(|r| row(r)[s]).collect::<Vec<_>>())).collect();
        q(y, &inner) == q(cols[0], &cols[1..])
    });
    let b4 = (1..=n).all(|y| q(y, &consts) == y);
    b0 && b1 && b2 && b3 && b4
}

fn criterion_1() -> Check {
    let mut assignments = 0u128;
    for n in [2, 3] {
        ensure(oracle_axioms(n), || format!("direct evaluation of B0-B4 fails in {n}"))?;
        for law in nba_axioms(dim(n)) {
            for (l, r) in &law.instances {
                let v = check_identity(l, r, dim(n), CheckMode::exhaustive()).map_err(|e| e.to_string())?;
                ensure(v.is_valid(), || format!("{} invalid in {n}: {:?}", law.name, v.outcome))?;
                match v.mode {
                    Mode::Exhaustive { assignments: a } => assignments += a,
                    m => return Err(format!("{} not exhaustive in {n}: {m:?}", law.name)),
                }
            }
        }
    }
    for law in nba_axioms(dim(4)) {
        for (l, r) in &law.instances {
            let mode = CheckMode::Sampled { count: 100_000, seed: 0xA11CE };
            let v = check_identity(l, r, dim(4), mode).map_err(|e| e.to_string())?;
            ensure(v.is_valid(), || format!("{} fails in 4: {:?}", law.name, v.outcome))?;
            ensure(v.mode == Mode::Sampled { count: 100_000, seed: 0xA11CE }, || "wrong sampling mode".into())?;
        }
    }
    Ok(format!("{assignments} exhaustive assignments at n=2,3; 10^5 samples per axiom at n=4"))
}

fn criterion_2() -> Check {
    let g = pow(3, 1);
    let v = |a: &PowerAlgebra, x: usize| a.element(x).get(0) as usize;
    for i in 1..=3u8 {
        let sk = skew_reduct(&g, i).map_err(|e| e.to_string())?;
        let rc = right_church_reduct(&g, i).map_err(|e| e.to_string())?;
        // t_i(x,y,z) = z where x = i, y elsewhere
        let t = |x: usize, y: usize, z: usize| if v(&g, x) == i as usize { z } else { y };
        let zero = IndexedAlgebra::constant(&g, i);
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    ensure(rc.q.get(x, y, z) == t(x, y, z), || format!("t_{i} table at {x},{y},{z}"))?;
                    let via = sk.join.get(sk.meet.get(x, y), sk.minus.get(z, x));
                    ensure(rc.q.get(x, y, z) == via, || format!("q dictionary, i={i}, ({x},{y},{z})"))?;
                }
                ensure(sk.join.get(x, y) == t(x, x, y), || format!("join dictionary, i={i}"))?;
                ensure(sk.meet.get(x, y) == t(x, y, zero), || format!("meet dictionary, i={i}"))?;
                ensure(sk.minus.get(y, x) == t(x, zero, y), || format!("minus dictionary, i={i}"))?;
            }
        }
        for law in skew_dictionary(i) {
            let (l, r) = &law.instances[0];
            let verdict = check_identity(l, r, dim(3), CheckMode::exhaustive()).map_err(|e| e.to_string())?;
            ensure(verdict.is_valid(), || format!("{} identity, i={i}", law.name))?;
        }
    }
    Ok("4 identities x 27 triples in each S_i(3)".into())
}

fn criterion_3() -> Check {
    for n in [2, 3] {
        for m in [1, 2] {
            let a = pow(n, m);
            let table = TableAlgebra::from_algebra(&a).map_err(|e| e.to_string())?;
            let star = StarTable::of(&a).map_err(|e| e.to_string())?;
            let s = a.size();
            // t_k must be the pointwise ternary selector
            for k in 1..=n as u8 {
                ensure(star.zero(k) == IndexedAlgebra::constant(&a, k), || format!("0_{k} in {n}^{m}"))?;
                for x in 0..s {
                    for y in 0..s {
                        for z in 0..s {
                            let want: Vec<u8> = (0..m)
                                .map(|p| {
                                    let pick = if a.element(x).get(p) == k { z } else { y };
                                    a.element(pick).get(p)
                                })
                                .collect();
                            ensure(a.element(star.t(k, x, y, z)).values() == want, || {
                                format!("t_{k} entry in {n}^{m}")
                            })?;
                        }
                    }
                }
            }
            let back = star.bullet().map_err(|e| e.to_string())?;
            ensure(back == table, || format!("(A*)• differs from A on {n}^{m}"))?;
            ensure(back.q_table() == table.q_table(), || format!("q tables differ on {n}^{m}"))?;
            let again = StarTable::of(&back).map_err(|e| e.to_string())?;
            ensure(again == star, || format!("(B•)* differs from B on {n}^{m}"))?;
            report_ok(&audit_skew_star(&star, &cfg()), "SKEW_STAR")?;
        }
    }
    Ok("Par_n(I) for n in {2,3}, |I| in {1,2}".into())
}

/// Pointwise skew operations on `n^m` at index `i`.
fn oracle_skew(a: &PowerAlgebra, i: u8) -> SkewTables {
    let s = a.size();
    let idx = |v: Vec<u8>| a.index_of(&Element::new(a.dim(), v).unwrap()).unwrap();
    let pw = |x: usize, y: usize, f: &dyn Fn(u8, u8) -> u8| {
        let (ex, ey) = (a.element(x), a.element(y));
        idx(ex.values().iter().zip(ey.values()).map(|(&p, &q)| f(p, q)).collect())
    };
    let mut sk = skew_reduct(a, i).unwrap();
    sk.meet = nba_core::skew::BinTable::from_fn(s, |x, y| pw(x, y, &|p, q| if p == i { i } else { q }));
    sk.join = nba_core::skew::BinTable::from_fn(s, |x, y| pw(x, y, &|p, q| if p == i { q } else { p }));
    sk.minus = nba_core::skew::BinTable::from_fn(s, |x, y| pw(x, y, &|p, q| if q == i { p } else { i }));
    sk
}

fn criterion_4() -> Check {
    let a = pow(3, 2);
    let sk = skew_reduct(&a, 1).map_err(|e| e.to_string())?;
    let oracle = oracle_skew(&a, 1);
    ensure(sk.meet == oracle.meet && sk.join == oracle.join && sk.minus == oracle.minus, || {
        "skew tables differ from pointwise operations".into()
    })?;
    report_ok(&audit_skew_lattice(&sk, &cfg()), "SKEW_LATTICE")?;
    let ba = audit_skew_ba(&sk, &cfg());
    report_ok(&ba, "SKEW_BA")?;
    for name in ["S1-normal", "S1-dist-left", "S1-dist-right"] {
        ensure(ba.get(name).is_some_and(|o| o.ok), || format!("{name} missing or failing"))?;
    }
    report_ok(&audit_right_handed(&sk, &cfg()), "RIGHT_HANDED")?;
    let rel = relations(&sk, &cfg()).map_err(|e| e.to_string())?;
    let e1 = IndexedAlgebra::constant(&a, 1);
    ensure(rel.minimum() == Some(e1), || format!("minimum {:?}", rel.minimum()))?;
    // x <= y iff x∧y = x = y∧x; maximal elements avoid the value 1
    let le = |x: usize, y: usize| oracle.meet.get(x, y) == x && oracle.meet.get(y, x) == x;
    let maximal: Vec<usize> =
        (0..a.size()).filter(|&x| (0..a.size()).all(|y| !le(x, y) || x == y)).collect();
    let no_one: Vec<usize> = (0..a.size()).filter(|&x| !a.element(x).values().contains(&1)).collect();
    ensure(maximal == no_one, || "maximal elements are not those avoiding 1".into())?;
    ensure(rel.maximal() == maximal, || format!("maximal {:?} vs {maximal:?}", rel.maximal()))?;
    Ok(format!("9 elements, bottom e1, {} maximal", maximal.len()))
}

fn criterion_5() -> Check {
    let a = pow(3, 2);
    let s = a.size();
    let mut count = 0;
    for r in 1..=3u8 {
        for k in r + 1..=3 {
            let sigma = Permutation::transposition(a.dim(), r, k).map_err(|e| e.to_string())?;
            let swap = |v: u8| if v == r { k } else if v == k { r } else { v };
            let phi: Vec<usize> = (0..s).map(|x| perm_index(&a, x, &sigma)).collect();
            for (x, &px) in phi.iter().enumerate() {
                let want: Vec<u8> = a.element(x).values().iter().map(|&v| swap(v)).collect();
                ensure(a.element(px).values() == want, || format!("x^({r}{k}) is not the pointwise swap"))?;
            }
            let distinct: BTreeSet<usize> = phi.iter().copied().collect();
            ensure(distinct.len() == s, || format!("({r}{k}) not bijective"))?;
            let (from, to) = (oracle_skew(&a, r), oracle_skew(&a, k));
            let (lib_from, lib_to) = (skew_reduct(&a, r).unwrap(), skew_reduct(&a, k).unwrap());
            ensure(lib_from == from && lib_to == to, || "skew tables differ from pointwise".into())?;
            for x in 0..s {
                for y in 0..s {
                    ensure(phi[from.meet.get(x, y)] == to.meet.get(phi[x], phi[y]), || format!("meet ({r}{k})"))?;
                    ensure(phi[from.join.get(x, y)] == to.join.get(phi[x], phi[y]), || format!("join ({r}{k})"))?;
                    ensure(phi[from.minus.get(x, y)] == to.minus.get(phi[x], phi[y]), || format!("minus ({r}{k})"))?;
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} transpositions x 81 pairs"))
}

fn criterion_6() -> Check {
    let a = pow(3, 2);
    let s = a.size();
    let n = 3usize;
    let (i, j) = (1u8, 2u8);
    let cp = CenterParams::new(a.dim(), i, j).map_err(|e| e.to_string())?;
    let sk = skew_reduct(&a, i).map_err(|e| e.to_string())?;
    let idx = |v: Vec<u8>| a.index_of(&Element::new(a.dim(), v).unwrap()).unwrap();
    let e = |k: u8| IndexedAlgebra::constant(&a, k);
    // x_k takes j where x is k, i elsewhere
    let coord = |x: usize, k: u8| idx(a.element(x).values().iter().map(|&v| if v == k { j } else { i }).collect());
    let coords: Vec<Vec<usize>> = (0..s).map(|x| (1..=n as u8).map(|k| coord(x, k)).collect()).collect();
    for x in 0..s {
        ensure(coordinates_index(&a, x, cp) == coords[x], || format!("coordinates of {x}"))?;
    }
    let c = |x: usize, k: u8| coords[x][k as usize - 1];
    let meet = |x, y| sk.meet.get(x, y);
    let join = |x, y| sk.join.get(x, y);
    let join_all = |xs: &mut dyn Iterator<Item = usize>| xs.reduce(|p, q| join(p, q)).unwrap();
    let center = boolean_center(&a, cp);
    let in_center = |x: usize| center.contains(x);

    for x in 0..s {
        for k in 1..=n as u8 {
            for r in 1..=n as u8 {
                if k != r {
                    ensure(meet(c(x, k), c(x, r)) == e(i), || format!("(i) x={x} k={k} r={r}"))?;
                }
            }
        }
        ensure(join_all(&mut (1..=n as u8).map(|k| c(x, k))) == e(j), || format!("(ii) x={x}"))?;
        for k in (1..=n as u8).filter(|&k| k != i) {
            ensure(meet(c(x, k), x) == meet(c(x, k), e(k)), || format!("(v) x={x} k={k}"))?;
            for y in 0..s {
                ensure(c(meet(x, y), k) == meet(x, c(y, k)), || format!("(iv) x={x} y={y} k={k}"))?;
            }
        }
        ensure(meet(c(x, i), x) == e(i), || format!("(vi) x={x}"))?;
        if in_center(x) {
            for k in 1..=n as u8 {
                let want = if k == i {
                    center.neg(x)
                } else if k == j {
                    x
                } else {
                    e(i)
                };
                ensure(c(x, k) == want, || format!("(vii) x={x} k={k}"))?;
            }
        }
    }
    // (iii) over all x, y^1..y^3
    let ok = for_each_tuple(s, n + 1, |v| {
        let x = v[0] - 1;
        let ys: Vec<usize> = v[1..].iter().map(|y| y - 1).collect();
        let qv = a.q(x, &ys);
        (1..=n as u8).all(|k| {
            let yk: Vec<usize> = ys.iter().map(|&y| c(y, k)).collect();
            let lhs = c(qv, k);
            let mid = a.q(x, &yk);
            let rhs = join_all(&mut (1..=n as u8).map(|r| meet(c(x, r), yk[r as usize - 1])));
            lhs == mid && mid == rhs
        })
    });
    ensure(ok, || "(iii) fails".into())?;

    // Boolean elements: x ≤ e_j in the natural order of the skew reduct
    let rel = relations(&sk, &cfg()).map_err(|e| e.to_string())?;
    let all_coords: BTreeSet<usize> = coords.iter().flatten().copied().collect();
    let mut booleans = 0;
    for x in 0..s {
        let conds = [
            rel.le(x, e(j)),
            meet(x, e(j)) == x,
            all_coords.contains(&x),
            x == c(x, j),
            (1..=n as u8).filter(|&k| k != i && k != j).all(|k| c(x, k) == e(i)),
            x == c(c(x, i), i),
        ];
        ensure(conds.iter().all(|&b| b == conds[0]), || format!("conditions disagree on {x}: {conds:?}"))?;
        ensure(conds[0] == in_center(x), || format!("center membership of {x}"))?;
        ensure(conds[0] == a.element(x).values().iter().all(|&v| v == i || v == j), || {
            format!("pointwise Boolean test on {x}")
        })?;
        booleans += conds[0] as usize;
    }

    // reconstruction under every order and bracketing
    let mut sums = 0;
    for x in 0..s {
        let cs: Vec<Element> = coords[x].iter().map(|&y| a.element(y)).collect();
        let summands = reconstruct_summands(&a, &cs, i).map_err(|e| e.to_string())?;
        for perm in Permutation::all(a.dim()) {
            let ordered: Vec<Element> = perm.images().iter().map(|&k| summands[k as usize - 1].clone()).collect();
            for b in [Bracketing::Left, Bracketing::Right] {
                let got = sum_i(&a, &ordered, i, b).map_err(|e| e.to_string())?;
                ensure(got == a.element(x), || format!("reconstruction of {x} under {:?} {b:?}", perm.images()))?;
                sums += 1;
            }
        }
    }
    Ok(format!("clauses (i)-(vii), 6 Boolean conditions on 9 elements ({booleans} Boolean), {sums} reconstructions"))
}

/// Compatibility checked on whole argument tuples, hashing block keys.
fn brute_compatible<A: IndexedAlgebra>(alg: &A, labels: &[usize]) -> bool {
    let n = alg.dim().get();
    let s = alg.size();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for_each_tuple(s, n + 1, |v| {
        let args: Vec<usize> = v.iter().map(|x| x - 1).collect();
        let key: Vec<usize> = args.iter().map(|&x| labels[x]).collect();
        let out = labels[alg.q(args[0], &args[1..])];
        *seen.entry(key).or_insert(out) == out
    })
}

fn partitions(size: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, size, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), size, &mut out);
    out
}

fn brute_congruences<A: IndexedAlgebra>(alg: &A) -> BTreeSet<Vec<usize>> {
    partitions(alg.size())
        .into_iter()
        .filter(|p| brute_compatible(alg, p))
        .map(|p| Congruence::from_labels(&p).labels().to_vec())
        .collect()
}

fn subalgebras_of_square() -> Vec<PowerAlgebra> {
    let a = pow(3, 2);
    let els = a.elements();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << els.len() {
        let gens: Vec<Element> = (0..els.len()).filter(|b| mask >> b & 1 == 1).map(|b| els[b].clone()).collect();
        let sub = subalgebra_closure(&a, &gens).unwrap();
        if seen.insert(sub.elements()) {
            out.push(sub);
        }
    }
    out
}

fn bijection_round_trips<A: IndexedAlgebra>(alg: &A, what: &str) -> Result<usize, String> {
    let cp = CenterParams::default();
    let congs = all_congruences(alg, DEFAULT_CONGRUENCE_BOUND).map_err(|e| e.to_string())?;
    let mut proper = 0;
    for c in &congs {
        ensure(c.is_compatible(alg) && brute_compatible(alg, c.labels()), || format!("{what}: not a congruence"))?;
        let m = multideal_of(alg, c).map_err(|e| e.to_string())?;
        // proper congruences are those separating the constants
        let consts = alg.constants();
        let separating = consts.iter().enumerate().all(|(p, &x)| consts[p + 1..].iter().all(|&y| !c.related(x, y)));
        ensure(m.is_degenerate() != separating, || format!("{what}: degeneracy of I(θ)"))?;
        if separating {
            let back = theta_of(alg, &m, cp).map_err(|e| e.to_string())?;
            ensure(&back == c, || format!("{what}: θ_I(θ) ≠ θ"))?;
            proper += 1;
        }
    }
    for m in all_multideals(alg, DEFAULT_CONGRUENCE_BOUND).map_err(|e| e.to_string())? {
        let theta = theta_of(alg, &m, cp).map_err(|e| e.to_string())?;
        ensure(multideal_of(alg, &theta).map_err(|e| e.to_string())? == m, || format!("{what}: I(θ_H) ≠ H"))?;
    }
    Ok(proper)
}

fn criterion_7() -> Check {
    let (sq, cube) = (pow(3, 2), pow(2, 3));
    for (a, want, name) in [(&sq, 4, "3^2"), (&cube, 8, "2^3")] {
        let congs = all_congruences(a, DEFAULT_CONGRUENCE_BOUND).map_err(|e| e.to_string())?;
        ensure(congs.len() == want, || format!("{name}: {} congruences", congs.len()))?;
        let lib: BTreeSet<Vec<usize>> = congs.iter().map(|c| c.labels().to_vec()).collect();
        ensure(lib == brute_congruences(a), || format!("{name}: differs from brute force"))?;
        bijection_round_trips(a, name)?;
    }
    let subs = subalgebras_of_square();
    let mut proper = 0;
    for sub in &subs {
        proper += bijection_round_trips(sub, "subalgebra of 3^2")?;
    }
    Ok(format!("4 and 8 congruences; round trips on {} subalgebras of 3^2 ({proper} proper congruences)", subs.len()))
}

fn criterion_8() -> Check {
    let cp = CenterParams::default();
    for (n, m) in [(2, 3), (3, 2), (3, 3), (4, 2)] {
        let a = pow(n, m);
        let ultras = all_ultramultideals(&a);
        ensure(ultras.len() == m, || format!("{n}^{m}: {} ultramultideals", ultras.len()))?;
        // the point projections are the surjective homomorphisms onto n
        let projections: BTreeSet<Vec<u8>> =
            (0..m).map(|p| (0..a.size()).map(|x| a.element(x).get(p)).collect()).collect();
        let homs: BTreeSet<Vec<u8>> = ultras.iter().map(|u| u.homomorphism()).collect();
        ensure(homs == projections, || format!("{n}^{m}: homomorphisms are not the projections"))?;
        for u in &ultras {
            let h = u.homomorphism();
            ensure(is_homomorphism_onto(&a, &h), || format!("{n}^{m}: not a surjective homomorphism"))?;
            let back = nba_core::ideals::Ultramultideal::from_homomorphism(&a, &h).map_err(|e| e.to_string())?;
            ensure(&back == u, || format!("{n}^{m}: hom round trip"))?;
        }
    }
    let sq = pow(3, 2);
    let mut checked = 0;
    for m in all_multideals(&sq, DEFAULT_CONGRUENCE_BOUND).map_err(|e| e.to_string())? {
        let ultra = m.is_ultra(sq.size());
        let prime = is_prime(&sq, &m, cp).map_err(|e| e.to_string())?;
        ensure(prime == ultra, || format!("prime {prime} but ultra {ultra}"))?;
        let atoms = admissible_atoms(&sq, &m, cp).map_err(|e| e.to_string())?;
        ensure(!atoms.is_empty(), || "no admissible atom".into())?;
        for atom in atoms {
            let u = extend_to_ultra(&sq, &m, cp, atom).map_err(|e| e.to_string())?;
            let comps = m.components().unwrap();
            let extends = comps
                .iter()
                .zip(u.components())
                .all(|(small, big)| small.iter().all(|x| big.contains(x)));
            ensure(extends, || "extension does not contain the multideal".into())?;
            ensure(u.size() == sq.size() && is_homomorphism_onto(&sq, &u.homomorphism()), || {
                "extension is not ultra".into()
            })?;
        }
        checked += 1;
    }
    Ok(format!("counts |I| for 4 powers; {checked} multideals of 3^2 prime iff ultra and extendable"))
}

fn criterion_9() -> Check {
    let subs = subalgebras_of_square();
    for sub in &subs {
        let st = stone_embed(sub).map_err(|e| e.to_string())?;
        ensure(st.is_injective() && st.preserves_q(sub), || format!("subalgebra of size {}", sub.size()))?;
        // independent check: each image coordinate is a surjective homomorphism
        for p in 0..st.target().points() {
            let h: Vec<u8> = (0..sub.size()).map(|x| st.image(x).get(p)).collect();
            ensure(is_homomorphism_onto(sub, &h), || "image coordinate is not a homomorphism".into())?;
        }
        let distinct: BTreeSet<&Element> = st.images().iter().collect();
        ensure(distinct.len() == sub.size(), || "images collide".into())?;
    }
    for (n, m) in [(3, 2), (2, 3)] {
        let a = pow(n, m);
        let st = stone_embed(&a).map_err(|e| e.to_string())?;
        ensure(st.is_surjective() && st.preserves_q(&a), || format!("{n}^{m} not isomorphic"))?;
        ensure(st.target().size() == a.size(), || format!("{n}^{m} target size"))?;
    }
    Ok(format!("{} subalgebras embedded; 3^2 and 2^3 isomorphic", subs.len()))
}

/// Direct evaluation of a q-term in the generator.
fn eval(t: &Term, env: &[u8]) -> u8 {
    match t {
        Term::Const(k) => *k,
        Term::Var(v) => env[v[1..].parse::<usize>().unwrap() - 1],
        Term::Q(args) => eval(&args[eval(&args[0], env) as usize], env),
        other => panic!("unexpected node {other:?}"),
    }
}

fn table_matches(t: &Term, table: &TruthTable) -> bool {
    let (n, k) = (table.dim().get(), table.arity());
    for_each_tuple(n, k, |args| {
        let env: Vec<u8> = args.iter().map(|&a| a as u8).collect();
        eval(t, &env) == table.get(&env)
    })
}

fn criterion_10() -> Check {
    let n = dim(3);
    let mut count = 0;
    for arity in [1, 2] {
        for table in TruthTable::all(n, arity) {
            let term = synth(&table);
            ensure(term.depth() <= arity + 1, || format!("depth of synth({:?})", table.entries()))?;
            ensure(table_matches(&term, &table), || format!("synth({:?}) wrong", table.entries()))?;
            ensure(verify_term(&term, &table).map_err(|e| e.to_string())?, || "verify_term rejects".into())?;
            let (simple, _) = simplify(&term, n);
            ensure(simple.node_count() <= term.node_count(), || "simplify grew the term".into())?;
            ensure(table_matches(&simple, &table), || format!("simplified {:?} wrong", table.entries()))?;
            ensure(verify_term(&simple, &table).map_err(|e| e.to_string())?, || "verify_term rejects".into())?;
            let same = check_identity(&term, &simple, n, CheckMode::exhaustive()).map_err(|e| e.to_string())?;
            ensure(same.is_valid(), || "simplify is unsound".into())?;
            count += 1;
        }
    }
    let projections = [(1, 1, "x1"), (2, 1, "x1"), (2, 2, "x2")];
    for (arity, p, var) in projections {
        let table = TruthTable::from_fn(n, arity, |args| args[p - 1]).map_err(|e| e.to_string())?;
        let (simple, _) = simplify(&synth(&table), n);
        ensure(simple == Term::var(var), || format!("projection {p}/{arity} simplifies to {simple:?}"))?;
    }
    ensure(count == 27 + 19_683, || format!("{count} tables"))?;
    Ok(format!("{count} tables synthesised and verified; 3 projections simplify to variables"))
}

fn criterion_11() -> Check {
    for (points, n, i) in [(2usize, 3usize, 3u8), (1, 4, 4)] {
        let report = verify_embedding(points, dim(n), i).map_err(|e| e.to_string())?;
        ensure(report.ok(), || format!("X={points}, n={n}, i={i}: {:?}", report.failure))?;
        // oracle: f* and the skew operations of n^X computed pointwise
        let pf = partial_fn_algebra(points).map_err(|e| e.to_string())?;
        let star = |f: &PartialFn| -> Vec<u8> { f.values().iter().map(|v| v.unwrap_or(i)).collect() };
        let t = |x: &[u8], y: &[u8], z: &[u8]| -> Vec<u8> {
            (0..points).map(|p| if x[p] == i { z[p] } else { y[p] }).collect()
        };
        let zero = vec![i; points];
        let fs = pf.elements();
        let images: BTreeSet<Vec<u8>> = fs.iter().map(star).collect();
        ensure(images.len() == fs.len(), || "star map not injective".into())?;
        let mut pairs = 0;
        for f in &fs {
            for g in &fs {
                ensure(star_embed(f, dim(n), i).map_err(|e| e.to_string())?.values() == star(f), || {
                    "star_embed differs from the pointwise image".into()
                })?;
                let (x, y) = (star(f), star(g));
                // f ∧ g = g on the common domain, g \ f = g off dom f, f ∨ g = f ∪ g|_{G∖F}
                let meet: Vec<Option<u8>> = (0..points).map(|p| f.get(p).and(g.get(p))).collect();
                let join: Vec<Option<u8>> = (0..points).map(|p| f.get(p).or(g.get(p))).collect();
                let minus: Vec<Option<u8>> =
                    (0..points).map(|p| if f.get(p).is_some() { None } else { g.get(p) }).collect();
                ensure(f.meet(g).values() == meet && f.join(g).values() == join && g.minus(f).values() == minus, || {
                    "partial-function operations".into()
                })?;
                let (meet, join, minus) =
                    (PartialFn::new(meet).unwrap(), PartialFn::new(join).unwrap(), PartialFn::new(minus).unwrap());
                ensure(star(&meet) == t(&x, &y, &zero), || format!("meet {f} {g}"))?;
                ensure(star(&join) == t(&x, &x, &y), || format!("join {f} {g}"))?;
                ensure(star(&minus) == t(&x, &zero, &y), || format!("minus {g} \\ {f}"))?;
                pairs += 1;
            }
        }
        ensure(pairs == report.pairs_checked, || "pair count".into())?;
    }
    Ok("X={a,b}, n=3, i=3: 81 pairs; X={a}, n=4, i=4: 9 pairs".into())
}

fn criterion_12() -> Check {
    let a = pow(2, 3);
    let ms = all_multideals(&a, DEFAULT_CONGRUENCE_BOUND).map_err(|e| e.to_string())?;
    let val = |x: usize| a.element(x).values().to_vec();
    let idx = |v: Vec<u8>| a.index_of(&Element::new(a.dim(), v).unwrap()).unwrap();
    let pw = |x: usize, y: usize, f: fn(u8, u8) -> u8| idx(val(x).iter().zip(val(y)).map(|(&p, q)| f(p, q)).collect());
    // 1 = e1, 0 = e2 pointwise
    let join = |x, y| pw(x, y, |p, q| if p == 1 || q == 1 { 1 } else { 2 });
    let meet = |x, y| pw(x, y, |p, q| if p == 1 && q == 1 { 1 } else { 2 });
    let neg = |x| pw(x, x, |p, _| 3 - p);
    for m in &ms {
        let view = boolean_ideal_filter_view(&a, m).map_err(|e| e.to_string())?;
        let comps = m.components().unwrap();
        ensure(view.ideal == comps[1] && view.filter == comps[0], || "view components".into())?;
        let ideal: BTreeSet<usize> = view.ideal.iter().copied().collect();
        ensure(ideal.contains(&idx(vec![2; 3])) && !ideal.contains(&idx(vec![1; 3])), || "0 in, 1 out".into())?;
        for &x in &ideal {
            for y in 0..a.size() {
                ensure(ideal.contains(&meet(x, y)), || "down-set".into())?;
                if ideal.contains(&y) {
                    ensure(ideal.contains(&join(x, y)), || "join-closed".into())?;
                }
            }
        }
        let negated: BTreeSet<usize> = ideal.iter().map(|&x| neg(x)).collect();
        let filter: BTreeSet<usize> = view.filter.iter().copied().collect();
        ensure(negated == filter, || "I_1 ≠ ¬I_2".into())?;
    }
    ensure(!ms.is_empty() && ms.iter().all(|m: &Multideal| !m.is_degenerate()), || "no proper multideals".into())?;
    Ok(format!("{} proper multideals of 2^3", ms.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("axiom completeness", criterion_1),
        ("term-equivalence dictionary", criterion_2),
        ("skew-star round trips", criterion_3),
        ("skew reduct audits", criterion_4),
        ("transposition isomorphisms", criterion_5),
        ("coordinate laws", criterion_6),
        ("congruence counts and bijection", criterion_7),
        ("ultramultideals", criterion_8),
        ("Stone embedding", criterion_9),
        ("synthesis", criterion_10),
        ("representation", criterion_11),
        ("2BA ideal and filter", criterion_12),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
