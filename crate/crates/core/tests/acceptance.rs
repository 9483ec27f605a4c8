//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;

use dyck_tilings::dyck::{dts, gf_z_paths, hermite_label};
use dyck_tilings::label::{build_poset, gf_z, gf_z_recursive, pre_order_seed};
use dyck_tilings::lgv::{factorization, factorized_gf, gf_w, gf_y, lgv_determinant, PointConfig, YDir, YoungDiagram};
use dyck_tilings::path::Step;
use dyck_tilings::qpoly::{q_binomial, q_int};
use dyck_tilings::rational::*;
use dyck_tilings::tau::{check_common_covers, tau_covers, tau_of_label, tau_poset, upper_covers, verify_lattice};
use dyck_tilings::tiling::{enumerate_tilings, enumerate_tilings_below, trivial_tiling, Tiling};
use dyck_tilings::{Direction, DyckPath, Error, LabeledTree, PlaneTree, QPoly};

type Check = std::result::Result<String, String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn eq<T: std::fmt::Debug + PartialEq>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn poly(s: &str) -> QPoly {
    s.parse().unwrap()
}

fn qi(n: usize) -> QPoly {
    q_int(n).unwrap()
}

fn dec(path: &str, word: &[usize]) -> LabeledTree {
    LabeledTree::from_pre_order(PlaneTree::parse(path).unwrap(), word, Direction::Decreasing).unwrap()
}

fn trees_up_to(n: usize) -> Vec<PlaneTree> {
    (0..=n).flat_map(PlaneTree::enumerate).collect()
}

fn sets(s: &[&[usize]]) -> Vec<Vec<usize>> {
    s.iter().map(|x| x.to_vec()).collect()
}

fn hook_formula() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for t in trees_up_to(5) {
        let seed = pre_order_seed(&t);
        let z = gf_z(&seed).map_err(err)?;
        let h = dyck_tilings::dyck::hook_length_gf(&t).map_err(err)?;
        eq(&format!("gf_Z on {t}"), z, h)?;
        count += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    if secs > 60.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(format!("{count} trees, {secs:.2}s"))
}

fn zigzag_example() -> Check {
    let z = gf_z_paths(&DyckPath::zigzag(3), &DyckPath::top(3)).map_err(err)?;
    eq("Z", z.clone(), poly("1+2q+2q^2+q^3"))?;
    eq("[3][2]", z, &qi(3) * &qi(2))?;
    Ok("1 + 2q + 2q^2 + q^3".into())
}

fn young_and_lgv() -> Check {
    eq("Y_down((2,1))", gf_y(&YoungDiagram::new(vec![2, 1]).unwrap(), YDir::Down), poly("1+2q+q^2+q^3"))?;
    for p in 0..=6 {
        for r in 0..=6 {
            let y = gf_y(&YoungDiagram::rectangle(r, p), YDir::Up);
            eq(&format!("Y({p}^{r})"), y, q_binomial(p, r))?;
        }
    }
    let all = YoungDiagram::rectangle(6, 6).subdiagrams();
    for mu in &all {
        let d = lgv_determinant(&PointConfig::for_diagram(mu)).map_err(err)?;
        let y = gf_y(&YoungDiagram::new(mu.clone()).map_err(err)?, YDir::Up);
        eq(&format!("det for {mu:?}"), d, y)?;
    }
    Ok(format!("{} diagrams in (6^6)", all.len()))
}

fn factorization_values() -> Check {
    let ex = dec("UUDDUUDUDD", &[4, 1, 5, 2, 3]);
    let want = &poly("1+2q+2q^2+q^3+q^4") * &qi(2);
    eq("factorized", factorized_gf(&ex).map_err(err)?, want.clone())?;
    eq("Z", gf_z(&ex).map_err(err)?, want)?;
    let d5 = dec("UDUDUDUDUD", &[1, 2, 5, 3, 4]);
    let want = [qi(4), qi(3), qi(3), qi(2)].into_iter().product::<QPoly>();
    eq("D5 factorized", factorized_gf(&d5).map_err(err)?, want.clone())?;
    eq("D5 Z", gf_z(&d5).map_err(err)?, want)?;
    let ce = dec("UUDDUUDUDD", &[2, 1, 5, 4, 3]);
    if factorization(&ce).is_ok() {
        return Err("the counterexample passed the factorization precondition".into());
    }
    eq("counterexample Z", gf_z(&ce).map_err(err)?, poly("1+2q+4q^2+4q^3+3q^4+2q^5+q^6"))?;
    Ok("three examples exact".into())
}

fn w_counts() -> Check {
    let w = |p: &str, word: &[usize]| gf_w(&dec(p, word)).map(|x| x.at_one()).map_err(err);
    eq("D1", w("UUDDUDUD", &[2, 1, 4, 3])?, BigInt::from(1))?;
    eq("D2", w("UDUDUUDD", &[1, 3, 4, 2])?, BigInt::from(2))?;
    eq("D5", w("UDUDUDUDUD", &[1, 2, 5, 3, 4])?, BigInt::from(35))?;
    let (mut tested, mut skipped) = (0, 0);
    for t in trees_up_to(5) {
        for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
            match gf_w(&l) {
                Ok(x) if x.is_nonnegative() => tested += 1,
                Ok(x) => return Err(format!("W({l}) = {x}")),
                Err(Error::Precondition(_)) => skipped += 1,
                Err(e) => return Err(format!("W({l}): {e}")),
            }
        }
    }
    Ok(format!("W nonnegative on {tested} labels ({skipped} without a trivial determinant tiling)"))
}

fn duality() -> Check {
    let mut labels = 0;
    for t in trees_up_to(5) {
        let n = t.size();
        for up in LabeledTree::enumerate(&t, Direction::Increasing) {
            let down = hermite_label(&dts(&up).map_err(err)?).map_err(err)?;
            for e in 0..n {
                if down.label(e) != n + 1 - up.label(e) {
                    return Err(format!("{up} -> {down} at edge {e}"));
                }
            }
            labels += 1;
        }
    }
    for n in 0..=6 {
        let got: usize = PlaneTree::enumerate(n).iter().map(|t| LabeledTree::enumerate(t, Direction::Increasing).len()).sum();
        let want: usize = (1..=n).map(|i| 2 * i - 1).product();
        eq(&format!("increasing labels of size {n}"), got, want)?;
    }
    Ok(format!("{labels} labels round-trip; (2n-1)!! for n <= 6"))
}

fn tau_lattice() -> Check {
    let lp = build_poset(&dec("UDUDUD", &[1, 2, 3])).map_err(err)?;
    eq("label poset size", lp.len(), 6)?;
    let (a, b) = (dec("UDUDUD", &[1, 3, 2]), dec("UDUDUD", &[3, 1, 2]));
    let (ia, ib) = (lp.index_of(&a).unwrap(), lp.index_of(&b).unwrap());
    if !lp.covers.contains(&(ia, ib)) {
        return Err("132 < 312 missing from the label poset".into());
    }
    let tp = tau_poset(&tau_of_label(&dec("UDUDUD", &[1, 2, 3])).map_err(err)?).map_err(err)?;
    eq("tau-poset size", tp.len(), 6)?;
    if tau_covers(&tau_of_label(&a).map_err(err)?, &tau_of_label(&b).map_err(err)?).map_err(err)? {
        return Err("132 < 312 present in the tau-poset".into());
    }
    let mut seeds = 0;
    for t in trees_up_to(4) {
        for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
            let seed = tau_of_label(&l).map_err(err)?;
            let rep = verify_lattice(&t, &seed).map_err(err)?;
            if !rep.ok() {
                return Err(format!("{t} seed {seed}: {:?}", rep.violations));
            }
            let p = tau_poset(&seed).map_err(err)?;
            for x in &p.elements {
                upper_covers(x).map_err(|e| format!("unique partner: {e}"))?;
            }
            check_common_covers(&p, &p.ranks().map_err(err)?).map_err(|e| format!("common covers: {e}"))?;
            seeds += 1;
        }
    }
    Ok(format!("{seeds} seeds on trees of size <= 4"))
}

fn rational_counts() -> Check {
    let all = enumerate_rational(3, 1, 2).map_err(err)?;
    eq("(1,2)-paths", all.len(), 12)?;
    eq("inflated", all.iter().filter(|p| p.is_inflated()).count(), 5)?;
    let lambda = DyckPath::zigzag(3);
    let seed = tau_1k_of_sets(&lambda, &sets(&[&[2, 3], &[4, 5], &[1, 6]])).map_err(err)?;
    eq("(1,2) seed", seed.seq.clone(), vec![0, 2, 3, 6, 7, 1])?;
    let p1 = tau_1k_poset(&seed).map_err(err)?;
    eq("(1,2) elements", p1.len(), 8)?;
    // elements not read off a trivial tiling below U^3 D^6
    let mut hi = vec![Step::U; 3];
    hi.extend(vec![Step::D; 6]);
    let trivial: Vec<BlockSeq> = enumerate_tilings_below(1, 2, &expand_d(&lambda, 2), &hi)
        .iter()
        .filter(|t| t.is_trivial())
        .map(tau_1k_of_tiling)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let odd: Vec<Vec<usize>> =
        p1.elements.iter().filter(|x| !trivial.contains(x)).map(|x| x.seq.clone()).collect();
    eq("non-trivial elements", odd, vec![vec![0, 1, 0, 6, 7, 1]])?;
    let kseed = label_k1(&lambda, &sets(&[&[3, 2], &[5, 4], &[6, 1]])).map_err(err)?;
    eq("(2,1) seed", eta_of_label(&kseed).map_err(err)?, vec![0, 0, 1, 4, 5, 9])?;
    let p2 = eta_poset(&kseed, 2).map_err(err)?;
    eq("(2,1) elements", p2.len(), 8)?;
    if !p1.isomorphic(&p2) {
        return Err("the lattices are not isomorphic".into());
    }
    Ok("12/5 paths; both lattices have 8 elements and are isomorphic".into())
}

fn decomposition() -> Check {
    let lambda = DyckPath::zigzag(3);
    let t = trivial_tiling(1, 3, &expand_d(&lambda, 3), &dyck_tilings::path::parse_steps("UDUDUDDDDDDD").unwrap())
        .map_err(err)?;
    let parts = decompose_1k(&t).map_err(err)?;
    let ls: Vec<LabeledTree> = parts.iter().map(hermite_label).collect::<Result<_, _>>().map_err(err)?;
    let words: Vec<Vec<usize>> = ls
        .iter()
        .map(|l| {
            let mut w = l.pre_order_word();
            w.reverse();
            w
        })
        .collect();
    eq("labels", words.clone(), vec![vec![2, 1, 3], vec![2, 3, 1], vec![3, 2, 1]])?;
    // (UD)^3 is its own mirror, so reading right to left is the mirrored label
    let mirrored: Vec<LabeledTree> = words.iter().map(|w| dec("UDUDUD", w)).collect();
    let chain = build_poset(&mirrored[0]).map_err(err)?;
    let leq = chain.order_matrix();
    let idx: Vec<usize> = mirrored.iter().map(|l| chain.index_of(l).ok_or("label not above 213")).collect::<Result<_, _>>()?;
    if !(leq[idx[0]][idx[1]] && leq[idx[1]][idx[2]]) {
        return Err("213 <= 231 <= 321 fails".into());
    }

    let seed = vhh_seed(&lambda, 2, 3, &[0, 0, 3, 1, 1, 1, 0, 0, 0]).map_err(err)?;
    let nt: Vec<Tiling> = enumerate_tilings(2, 3, &seed.bottom, &seed.top().map_err(err)?)
        .into_iter()
        .filter(|x| !x.is_trivial())
        .collect();
    eq("size-one example", nt.len(), 1)?;
    let g = decompose_ab(&nt[0]).map_err(err)?;
    eq("grid weights", g.weights(), vec![vec![0, 0, 1], vec![1, 1, 2]])?;
    eq("weight", (nt[0].weight(), g.total_weight()), (5, 5))?;

    let mut checked = 0;
    for (a, b) in [(2, 2), (2, 3)] {
        for n in 0..=3 {
            for l in DyckPath::enumerate(n) {
                let bottom = expand_du(&l, a, b);
                let mut hi = vec![Step::U; a * n];
                hi.extend(vec![Step::D; b * n]);
                for t in enumerate_tilings_below(a, b, &bottom, &hi) {
                    let g = decompose_trivial_ab(&t).map_err(err)?;
                    check_grid_admissible(&g).map_err(|e| format!("({a},{b}) {l}: {e}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("labels 213 <= 231 <= 321; 5 = 0+0+1+1+1+2; {checked} tilings admissible"))
}

fn vhh() -> Check {
    let lambda = DyckPath::zigzag(3);
    let seed = vhh_seed(&lambda, 2, 3, &[0, 0, 3, 1, 1, 1, 0, 0, 0]).map_err(err)?;
    let p = vhh_poset(&seed).map_err(err)?;
    eq("elements", p.len(), 14)?;
    let (lo, hi) = nonzero_window(&seed).map_err(err)?;
    let mut trivial: Vec<String> = p
        .elements
        .iter()
        .filter(|t| t.is_trivial())
        .map(|t| vhh_compact(t, lo, hi))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    trivial.sort();
    let mut drawn: Vec<String> = [
        "2111/1000", "1111/1000", "1111/0000", "0111/0000", "0011/0000", "0001/0000", "0000/0000", "1011/1000",
        "1001/1000", "1000/1000", "1000/0000", "1011/0000", "1001/0000",
    ]
    .map(String::from)
    .to_vec();
    drawn.sort();
    eq("trivial elements", trivial, drawn)?;
    let ranks = p.ranks().map_err(err)?;
    eq("rank span", (ranks.iter().min().copied(), ranks.iter().max().copied()), (Some(0), Some(6)))?;
    let nt: Vec<usize> = (0..p.len()).filter(|&i| !p.elements[i].is_trivial()).collect();
    eq("non-trivial elements", nt.len(), 1)?;
    if !p.upper_covers(nt[0]).is_empty() {
        return Err("the non-trivial element is covered".into());
    }
    Ok("14 elements, ranks 0..6, non-trivial element maximal".into())
}

fn oracle_equivalence() -> Check {
    let (mut all, mut fact) = (0, 0);
    let mut bad = Vec::new();
    for t in trees_up_to(5) {
        for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
            let z = gf_z(&l).map_err(err)?;
            eq(&format!("recursive Z for {l} on {t}"), gf_z_recursive(&l).map_err(err)?, z.clone())?;
            match factorized_gf(&l) {
                Ok(f) => {
                    if f != z {
                        bad.push(format!("{l} on {t}: product {} but Z = {}", f.compact(), z.compact()));
                    }
                    fact += 1;
                }
                Err(Error::Precondition(_)) => {}
                Err(e) => return Err(format!("{l} on {t}: {e}")),
            }
            all += 1;
        }
    }
    if !bad.is_empty() {
        return Err(format!("{} of {fact} factorizable labels differ: {}", bad.len(), bad.join("; ")));
    }
    Ok(format!("{all} labels agree; {fact} of them also factorize"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("hook-length formula for trees with <= 5 edges", hook_formula),
        ("Z((UD)^3, U^3D^3) = 1+2q+2q^2+q^3", zigzag_example),
        ("Y values, q-binomials and determinants in (6^6)", young_and_lgv),
        ("factorization values", factorization_values),
        ("W counts 1, 2, 35 and nonnegativity", w_counts),
        ("duality and (2n-1)!! count", duality),
        ("tau-lattice", tau_lattice),
        ("rational counts and the two small lattices", rational_counts),
        ("decomposition", decomposition),
        ("(3,2,3) vertical-history poset", vhh),
        ("oracle equivalence of the three Z computations", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let res = panic::catch_unwind(f).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match res {
            Ok(msg) => println!("PASS {:>2} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
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
