//! Reference values with known answers, run by `dyck verify-paper` in declaration order.

use std::fmt::Debug;

use crate::dyck::{dts, gf_z_paths, hermite_history, hermite_label, hook_length_gf, tiling_of_decreasing};
use crate::error::{Error, Result};
use crate::label::{build_poset, gf_z, inversion, Direction, LabeledTree};
use crate::lgv::{
    check_condition_star2, factorization, factorized_gf, gf_w, gf_y, lgv_determinant, rectangle_division,
    PointConfig, YDir, YoungDiagram,
};
use crate::path::{parse_steps, steps_to_string, DyckPath};
use crate::poset::Poset;
use crate::qpoly::{q_binomial, q_factorial, q_int, QPoly};
use crate::rational::*;
use crate::tau::{join, label_of_tau, rank, tau_covers, tau_of_label, tau_poset, Tau};
use crate::tiling::{enumerate_tilings, trivial_tiling, Tiling};
use crate::tree::PlaneTree;

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<()>,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Outcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

pub fn run_all() -> Vec<Outcome> {
    checks()
        .into_iter()
        .map(|c| {
            let r = (c.run)();
            Outcome { name: c.name, passed: r.is_ok(), detail: r.err().map(|e| e.to_string()) }
        })
        .collect()
}

fn ensure_eq<T: Debug + PartialEq>(what: &str, got: T, want: T) -> Result<()> {
    if got == want {
        Ok(())
    } else {
        Err(Error::Invariant(format!("{what}: got {got:?}, expected {want:?}")))
    }
}

fn ensure(what: &str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(format!("{what} does not hold")))
    }
}

fn poly(s: &str) -> QPoly {
    s.parse().expect("literal polynomial")
}

fn prod(ps: &[&QPoly]) -> QPoly {
    ps.iter().map(|p| (*p).clone()).product()
}

fn qi(n: usize) -> QPoly {
    q_int(n).expect("positive")
}

fn dec(path: &str, word: &[usize]) -> Result<LabeledTree> {
    LabeledTree::from_pre_order(PlaneTree::parse(path)?, word, Direction::Decreasing)
}

fn words(p: &Poset<LabeledTree>) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> =
        p.covers.iter().map(|&(i, j)| (p.elements[i].to_string(), p.elements[j].to_string())).collect();
    v.sort();
    v
}

fn pairs(e: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = e.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    v.sort();
    v
}

fn zigzag() -> DyckPath {
    DyckPath::zigzag(3)
}

fn sets(s: &[&[usize]]) -> Vec<Vec<usize>> {
    s.iter().map(|x| x.to_vec()).collect()
}

fn one_k_seed() -> Result<BlockSeq> {
    tau_1k_of_sets(&zigzag(), &sets(&[&[2, 3], &[4, 5], &[1, 6]]))
}

fn k_one_seed() -> Result<LabeledTree> {
    label_k1(&zigzag(), &sets(&[&[3, 2], &[5, 4], &[6, 1]]))
}

/// The (1,2)-tiling on `UUDUDDUD` with `mu = (1,3,2,0)`.
fn fig_pair_label() -> Result<LabeledTree> {
    label_1k(&DyckPath::parse("UUDUDDUD")?, &sets_from_mu(&[1, 3, 2, 0], 2)?)
}

fn dyck23_seed() -> Result<Tiling> {
    vhh_seed(&zigzag(), 2, 3, &[0, 0, 3, 1, 1, 1, 0, 0, 0])
}

pub fn checks() -> Vec<Check> {
    macro_rules! check {
        ($name:expr, $body:expr) => {
            Check { name: $name, run: || -> Result<()> { $body } }
        };
    }
    vec![
        check!("q-integer [3] = 1 + q + q^2", ensure_eq("[3]", qi(3), poly("1+q+q^2"))),
        check!("[2][3] = 1 + 2q + 2q^2 + q^3", ensure_eq("[2][3]", &qi(2) * &qi(3), poly("1+2q+2q^2+q^3"))),
        check!("[3]^2 = 1 + 2q + 3q^2 + 2q^3 + q^4", ensure_eq("[3]^2", qi(3).pow(2), poly("1+2q+3q^2+2q^3+q^4"))),
        check!("UUDUDD is a Dyck path of size 3", ensure_eq("size", DyckPath::parse("UUDUDD")?.size(), 3)),
        check!("the five Dyck paths of size 3", {
            let got: Vec<String> = DyckPath::enumerate(3).iter().map(|p| p.to_string()).collect();
            ensure_eq("paths", got, ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"].map(String::from).to_vec())
        }),
        check!("post-order word 51423 and pre-order word 54123 read right to left", {
            // both words are printed reversed relative to the reading used here
            let l = dec("UDUDUUDDUD", &[3, 2, 4, 1, 5])?;
            let mut pre = l.pre_order_word();
            pre.reverse();
            let mut post = l.post_order_word();
            post.reverse();
            ensure_eq("reversed pre-order", pre, vec![5, 1, 4, 2, 3])?;
            ensure_eq("reversed post-order", post, vec![5, 4, 1, 2, 3])?;
            let t = tiling_of_decreasing(&l)?;
            ensure_eq("bottom path", steps_to_string(&t.bottom), "UDUDUUDDUD".to_string())?;
            ensure_eq("history decodes back", hermite_label(&t)?, l)
        }),
        check!("inv(52431) = 2 and inv(54321) = 0", {
            ensure_eq("inv(52431)", inversion(&[5, 2, 4, 3, 1]), 2)?;
            ensure_eq("inv(54321)", inversion(&[5, 4, 3, 2, 1]), 0)
        }),
        check!("52413 on UUDDUUDDUD contains a 312 pattern", {
            let l = dec("UUDDUUDDUD", &[5, 2, 4, 1, 3])?;
            ensure("312 pattern", !l.is_312_avoiding())?;
            ensure("all tiles trivial", tiling_of_decreasing(&l)?.is_trivial())
        }),
        check!("label poset from 1423 on UDUUDUDD (8 elements, drawn Hasse diagram)", {
            let p = build_poset(&dec("UDUUDUDD", &[1, 4, 2, 3])?)?;
            ensure_eq("elements", p.len(), 8)?;
            let drawn = pairs(&[
                ("1423", "2413"),
                ("2413", "3412"),
                ("3412", "4312"),
                ("4312", "4321"),
                ("1423", "1432"),
                ("1432", "2431"),
                ("2431", "3421"),
                ("3421", "4321"),
                ("1432", "3412"),
                ("2413", "2431"),
                ("3412", "3421"),
            ]);
            ensure_eq("cover edges", words(&p), drawn)
        }),
        check!("label poset from 1423 on UDUUDUDD is not a lattice, its tau-poset is", {
            let l = dec("UDUUDUDD", &[1, 4, 2, 3])?;
            ensure("label poset is not a lattice", !build_poset(&l)?.is_lattice())?;
            let tp = tau_poset(&tau_of_label(&l)?)?;
            ensure("tau-poset is a lattice", tp.is_lattice())?;
            ensure_eq("tau-poset cover edges", tp.covers.len(), 10)
        }),
        check!("label poset from 123 on (UD)^3 has all six permutations", {
            let p = build_poset(&dec("UDUDUD", &[1, 2, 3])?)?;
            let drawn = pairs(&[
                ("123", "213"),
                ("123", "132"),
                ("213", "312"),
                ("213", "231"),
                ("132", "312"),
                ("132", "231"),
                ("312", "321"),
                ("231", "321"),
            ]);
            ensure_eq("elements", p.len(), 6)?;
            ensure_eq("cover edges", words(&p), drawn)
        }),
        check!("Z(D1) = (1+q+q^2)^2", ensure_eq("Z", gf_z(&dec("UUDDUDUD", &[2, 1, 4, 3])?)?, qi(3).pow(2))),
        check!("Z(D2) = (1+q)(1+2q+q^2+q^3)", {
            ensure_eq("Z", gf_z(&dec("UDUDUUDD", &[1, 3, 4, 2])?)?, prod(&[&qi(2), &poly("1+2q+q^2+q^3")]))
        }),
        check!("Z of 5374621 on UUDDUUDDUUUDDD = (1+q)(1+3q+2q^2+3q^3+q^4+q^5)", {
            let l = dec("UUDDUUDDUUUDDD", &[5, 3, 7, 4, 6, 2, 1])?;
            ensure_eq("Z", gf_z(&l)?, prod(&[&qi(2), &poly("1+3q+2q^2+3q^3+q^4+q^5")]))
        }),
        check!("a tiling with four unit tiles and tiles of size one and two", {
            let bottom = parse_steps("UDUDUUDUDDUUDD")?;
            let top = parse_steps("UUUUDUUDDDUDDD")?;
            let found = enumerate_tilings(1, 1, &bottom, &top).into_iter().any(|t| {
                let mut s: Vec<usize> = t.tiles.iter().map(|x| x.size()).collect();
                s.sort_unstable();
                s == [0, 0, 0, 0, 1, 2] && t.is_valid()
            });
            ensure("tiling with tile sizes 0,0,0,0,1,2 exists", found)
        }),
        check!("size one: the single path UD with an empty tiling", {
            let l = LabeledTree::from_pre_order(PlaneTree::parse("UD")?, &[1], Direction::Increasing)?;
            let t = dts(&l)?;
            ensure_eq("tiles", t.tiles.len(), 0)?;
            ensure_eq("paths", DyckPath::enumerate(1).len(), 1)
        }),
        check!("size two: exactly three tilings", {
            let mut n = 0;
            for l in DyckPath::enumerate(2) {
                for nu in l.paths_between(&DyckPath::top(2)) {
                    n += enumerate_tilings(1, 1, l.steps(), nu.steps()).len();
                }
            }
            ensure_eq("tilings", n, 3)
        }),
        check!("Z((UD)^3, UUUDDD) = [3][2]", {
            ensure_eq("Z", gf_z_paths(&zigzag(), &DyckPath::top(3))?, &qi(3) * &qi(2))
        }),
        check!("hook formula on (UD)^3 gives [3]!", ensure_eq("hook", hook_length_gf(&PlaneTree::parse("UDUDUD")?)?, q_factorial(3))),
        check!("adding unit tiles right of the new peak", {
            let lambda = DyckPath::zigzag(5);
            let left = trivial_tiling(1, 1, lambda.steps(), &parse_steps("UUUDDUDUDD")?)?;
            let right = trivial_tiling(1, 1, lambda.steps(), &parse_steps("UUUDUDUDDD")?)?;
            ensure_eq("added boxes", right.box_count() - left.box_count(), 2)?;
            let back = tiling_of_decreasing(&hermite_label(&right)?)?;
            ensure_eq("top path from the history", back.top()?, right.top()?)
        }),
        check!("Y_down((2,1)) = 1 + 2q + q^2 + q^3", {
            ensure_eq("Y", gf_y(&YoungDiagram::new(vec![2, 1])?, YDir::Down), poly("1+2q+q^2+q^3"))
        }),
        check!("Y of a rectangle is a q-binomial", {
            for p in 1..=4 {
                for r in 1..=4 {
                    let y = gf_y(&YoungDiagram::rectangle(r, p), YDir::Up);
                    ensure_eq(&format!("Y({p}^{r})"), y, q_binomial(p, r))?;
                }
            }
            Ok(())
        }),
        check!("determinant for (2,1) equals Y_up((2,1))", {
            let d = lgv_determinant(&PointConfig::for_diagram(&[2, 1]))?;
            ensure_eq("det", d, gf_y(&YoungDiagram::new(vec![2, 1])?, YDir::Up))
        }),
        check!("decreasing labels on U^nD^nU^mD^m: Z = Y_down of the boxes on the right block", {
            for n in 1..=3 {
                for m in 1..=3 {
                    let lambda = DyckPath::from_blocks(&[n, m]);
                    let t = PlaneTree::from_path(&lambda);
                    for l in LabeledTree::enumerate(&t, Direction::Decreasing) {
                        ensure(&format!("{l} is 312-avoiding"), l.is_312_avoiding())?;
                        let d = tiling_of_decreasing(&l)?;
                        ensure("all tiles trivial", d.is_trivial())?;
                        let mu = YoungDiagram::new(hermite_history(&d)[n..].to_vec())?;
                        ensure_eq(&format!("Z({l})"), gf_z(&l)?, gf_y(&mu, YDir::Down))?;
                    }
                }
            }
            Ok(())
        }),
        check!("UDUUDUDUUDDD divides into three rectangles", {
            ensure_eq("rectangles", rectangle_division(&DyckPath::parse("UDUUDUDUUDDD")?).len(), 3)
        }),
        check!("the sibling condition holds for 41523 and fails for 21543", {
            ensure("41523", check_condition_star2(&dec("UUDDUUDUDD", &[4, 1, 5, 2, 3])?))?;
            ensure("not 21543", !check_condition_star2(&dec("UUDDUUDUDD", &[2, 1, 5, 4, 3])?))
        }),
        check!("factorization of 41523: (1+2q+2q^2+q^3+q^4)(1+q), diagrams (2,1,1) and (1)", {
            let l = dec("UUDDUUDUDD", &[4, 1, 5, 2, 3])?;
            let want = prod(&[&poly("1+2q+2q^2+q^3+q^4"), &qi(2)]);
            ensure_eq("factorized", factorized_gf(&l)?, want.clone())?;
            ensure_eq("Z", gf_z(&l)?, want)?;
            let mut ds: Vec<Vec<usize>> = factorization(&l)?.iter().map(|f| f.diagram.parts().to_vec()).collect();
            ds.sort();
            ensure_eq("diagrams", ds, vec![vec![1], vec![2, 1, 1]])
        }),
        check!("counterexample 21543: Z = 1+2q+4q^2+4q^3+3q^4+2q^5+q^6", {
            ensure_eq("Z", gf_z(&dec("UUDDUUDUDD", &[2, 1, 5, 4, 3])?)?, poly("1+2q+4q^2+4q^3+3q^4+2q^5+q^6"))
        }),
        check!("12534 on (UD)^5: Z = [4][3]^2[2] with diagrams (1),(2),(2),(3)", {
            let l = dec("UDUDUDUDUD", &[1, 2, 5, 3, 4])?;
            let want = prod(&[&qi(4), &qi(3), &qi(3), &qi(2)]);
            ensure_eq("Z", gf_z(&l)?, want.clone())?;
            ensure_eq("factorized", factorized_gf(&l)?, want)?;
            let ds: Vec<Vec<usize>> = factorization(&l)?.iter().map(|f| f.diagram.parts().to_vec()).collect();
            ensure_eq("diagrams", ds, vec![vec![1], vec![2], vec![2], vec![3]])?;
            ensure_eq("rectangles", rectangle_division(&DyckPath::zigzag(5)).len(), 4)
        }),
        check!("W(1) = 1, 2, 35", {
            let w = |p: &str, word: &[usize]| -> Result<num_bigint::BigInt> { Ok(gf_w(&dec(p, word)?)?.at_one()) };
            ensure_eq("D1", w("UUDDUDUD", &[2, 1, 4, 3])?, 1.into())?;
            ensure_eq("D2", w("UDUDUUDD", &[1, 3, 4, 2])?, 2.into())?;
            ensure_eq("D5", w("UDUDUDUDUD", &[1, 2, 5, 3, 4])?, 35.into())
        }),
        check!("tau of 123 is 024 and tau of 321 is 000 on (UD)^3", {
            let t = PlaneTree::parse("UDUDUD")?;
            ensure_eq("tau(123)", tau_of_label(&dec("UDUDUD", &[1, 2, 3])?)?, Tau(vec![0, 2, 4]))?;
            ensure_eq("tau(321)", tau_of_label(&dec("UDUDUD", &[3, 2, 1])?)?, Tau(vec![0, 0, 0]))?;
            ensure_eq("label(024)", label_of_tau(&t, &Tau(vec![0, 2, 4]))?.pre_order_word(), vec![1, 2, 3])
        }),
        check!("tau-poset on (UD)^3: drawn covers, no edge from 132 to 312", {
            let p = tau_poset(&Tau(vec![0, 2, 4]))?;
            let got: Vec<(String, String)> = {
                let mut v: Vec<_> =
                    p.covers.iter().map(|&(i, j)| (p.elements[i].to_string(), p.elements[j].to_string())).collect();
                v.sort();
                v
            };
            let drawn = pairs(&[
                ("024", "022"),
                ("024", "004"),
                ("022", "002"),
                ("022", "020"),
                ("002", "000"),
                ("004", "020"),
                ("020", "000"),
            ]);
            ensure_eq("elements", p.len(), 6)?;
            ensure_eq("covers", got, drawn)?;
            ensure("004 is not covered by 002", !tau_covers(&Tau(vec![0, 0, 4]), &Tau(vec![0, 0, 2]))?)?;
            ensure("lattice", p.is_lattice())
        }),
        check!("join(022, 004) = 020 and rank(000) = 3", {
            ensure_eq("join", join(&Tau(vec![0, 2, 2]), &Tau(vec![0, 0, 4]))?, Tau(vec![0, 2, 0]))?;
            ensure_eq("rank", rank(&Tau(vec![0, 2, 4]), &Tau(vec![0, 0, 0]))?, 3)
        }),
        check!("D^2(UDUUDD) = UDDUUDDDD", {
            ensure_eq("word", steps_to_string(&expand_d(&DyckPath::parse("UDUUDD")?, 2)), "UDDUUDDDD".to_string())
        }),
        check!("twelve (1,2)-Dyck paths of size 3, five of them inflated", {
            let all = enumerate_rational(3, 1, 2)?;
            ensure_eq("total", all.len(), 12)?;
            ensure_eq("inflated", all.iter().filter(|p| p.is_inflated()).count(), 5)?;
            ensure_eq("inflated list", inflated_paths(3, 1, 2).len(), 5)
        }),
        check!("(1,2) sets {2,3},{4,5},{1,6} give tau (0,2,3,6,7,1)", {
            ensure_eq("tau", one_k_seed()?.seq, vec![0, 2, 3, 6, 7, 1])?;
            ensure_eq("sets of mu", sets_from_mu(&mu_from_sets(&sets(&[&[2, 3], &[4, 5], &[1, 6]]), 2)?, 2)?, sets(&[&[2, 3], &[4, 5], &[1, 6]]))
        }),
        check!("mu = 0 gives consecutive blocks and the Stirling word n^k ... 1^k", {
            let s = sets_from_mu(&[0, 0, 0], 2)?;
            ensure_eq("sets", s.clone(), sets(&[&[1, 2], &[3, 4], &[5, 6]]))?;
            ensure_eq("stirling", stirling_from_sets(&s)?, vec![3, 3, 2, 2, 1, 1])
        }),
        check!("eta (0,0,1,4,5,9) and (0,0,1,0,1,9) come from their Q sets", {
            ensure_eq("eta", eta_of_sets(&zigzag(), &sets(&[&[3, 2], &[5, 4], &[6, 1]]))?.seq, vec![0, 0, 1, 4, 5, 9])?;
            ensure_eq("eta", eta_of_sets(&zigzag(), &sets(&[&[5, 4], &[3, 2], &[6, 1]]))?.seq, vec![0, 0, 1, 0, 1, 9])
        }),
        check!("(1,2) lattice on (UD)^3: 8 elements, covers of the seed, top (0,1,0,1,0,1)", {
            let p = tau_1k_poset(&one_k_seed()?)?;
            ensure_eq("elements", p.len(), 8)?;
            ensure_eq("cover edges", p.covers.len(), 10)?;
            let mut up: Vec<Vec<usize>> = p.upper_covers(0).iter().map(|&j| p.elements[j].seq.clone()).collect();
            up.sort();
            ensure_eq("covers of the seed", up, vec![vec![0, 1, 0, 6, 7, 1], vec![0, 2, 4, 5, 3, 1]])?;
            let top: Vec<Vec<usize>> = p.maximal().iter().map(|&i| p.elements[i].seq.clone()).collect();
            ensure_eq("maximal", top, vec![vec![0, 1, 0, 1, 0, 1]])?;
            ensure("lattice", p.is_lattice())
        }),
        check!("(2,1) lattice on (UD)^3: seed (0,0,1,4,5,9), 8 elements, top (0,1,0,1,0,1)", {
            let seed = k_one_seed()?;
            ensure_eq("seed", eta_of_label(&seed)?, vec![0, 0, 1, 4, 5, 9])?;
            let p = eta_poset(&seed, 2)?;
            ensure_eq("elements", p.len(), 8)?;
            let top: Vec<Vec<usize>> = p.maximal().iter().map(|&i| eta_of_label(&p.elements[i])).collect::<Result<_>>()?;
            ensure_eq("maximal", top, vec![vec![0, 1, 0, 1, 0, 1]])?;
            ensure("lattice", p.is_lattice())
        }),
        check!("the (1,2) and (2,1) lattices on (UD)^3 are isomorphic", {
            let a = tau_1k_poset(&one_k_seed()?)?;
            let b = eta_poset(&k_one_seed()?, 2)?;
            ensure("isomorphic", a.isomorphic(&b))
        }),
        check!("decreasing tree with chain sets {2,3},{4,5},{1,6},{7,8} on UUDUDDUD and its increasing image", {
            let l = fig_pair_label()?;
            ensure_eq("decreasing", l.pre_order_word(), vec![3, 2, 8, 7, 5, 4, 6, 1])?;
            ensure_eq("increasing", phi(&l)?.pre_order_word(), vec![2, 3, 1, 4, 6, 7, 5, 8])
        }),
        check!("chain sets {2,3},{4,5},{1,6},{7,8} pair with {3,2},{7,6},{8,5},{4,1}", {
            let l = fig_pair_label()?;
            let sorted = |v: Vec<Vec<usize>>| -> Vec<Vec<usize>> {
                v.into_iter()
                    .map(|mut x| {
                        x.sort_unstable();
                        x
                    })
                    .collect()
            };
            ensure_eq("decreasing chains", sorted(chain_sets(&l, 2)?), sets(&[&[2, 3], &[4, 5], &[1, 6], &[7, 8]]))?;
            let inc = phi(&l)?;
            ensure_eq("increasing chains", sorted(chain_sets(&inc, 2)?), sets(&[&[2, 3], &[6, 7], &[5, 8], &[1, 4]]))?;
            let q = label_k1(&DyckPath::parse("UDUUDUDD")?, &sets(&[&[3, 2], &[7, 6], &[8, 5], &[4, 1]]))?;
            ensure_eq("label from the dual sets", q, inc)
        }),
        check!("(1,3) tiling splits into tilings with labels 213 <= 231 <= 321", {
            let t = trivial_tiling(1, 3, &expand_d(&zigzag(), 3), &parse_steps("UDUDUDDDDDDD")?)?;
            let got: Vec<Vec<usize>> = decompose_1k(&t)?
                .iter()
                .map(|d| {
                    let mut w = hermite_label(d)?.pre_order_word();
                    w.reverse();
                    Ok(w)
                })
                .collect::<Result<_>>()?;
            ensure_eq("labels", got, vec![vec![2, 1, 3], vec![2, 3, 1], vec![3, 2, 1]])
        }),
        check!("(2,3) tiling with one tile of size one: weight 5 = 0+0+1+1+1+2", {
            let seed = dyck23_seed()?;
            let nt: Vec<Tiling> = enumerate_tilings(2, 3, &seed.bottom, &seed.top()?)
                .into_iter()
                .filter(|t| !t.is_trivial())
                .collect();
            ensure_eq("non-trivial tilings", nt.len(), 1)?;
            ensure_eq("weight", nt[0].weight(), 5)?;
            let g = decompose_ab(&nt[0])?;
            ensure_eq("grid", g.weights(), vec![vec![0, 0, 1], vec![1, 1, 2]])?;
            ensure_eq("sum", g.total_weight(), 5)
        }),
        check!("(2,3) poset from (0,0,3,1,1,1,0,0,0): 14 elements, ranks 0..6", {
            let p = vhh_poset(&dyck23_seed()?)?;
            ensure_eq("elements", p.len(), 14)?;
            ensure_eq("non-trivial", p.elements.iter().filter(|t| !t.is_trivial()).count(), 1)?;
            let ranks = p.ranks()?;
            ensure_eq("rank span", (ranks.iter().min().copied(), ranks.iter().max().copied()), (Some(0), Some(6)))?;
            let i = p.elements.iter().position(|t| !t.is_trivial()).expect("counted above");
            ensure("non-trivial element is maximal", p.upper_covers(i).is_empty())
        }),
        check!("gf --hook --path UDUDUD prints [3]! = 1 + 2q + 2q^2 + q^3", {
            let s = crate::cli::hook_line(&PlaneTree::parse("UDUDUD")?)?;
            ensure_eq("line", s, "[3]! = 1 + 2q + 2q^2 + q^3".to_string())
        }),
        check!("the hook formula at q = 1 counts the 15 increasing labels of size 3", {
            let mut total = QPoly::zero();
            let mut count = 0;
            for t in PlaneTree::enumerate(3) {
                total = &total + &hook_length_gf(&t)?;
                count += LabeledTree::enumerate(&t, Direction::Increasing).len();
            }
            ensure_eq("labels", count, 15)?;
            ensure_eq("hook sum at q = 1", total.at_one(), 15.into())
        }),
    ]
}
