//! Exhaustive checks of basic hypergroup facts. Each check returns the first
//! violation found; candidates are visited smallest first, so the witness is
//! minimal in that order.

use hallscheme::{find_isomorphism, ClosedSubset, ElementSubset, Hypergroup, HypergroupHomomorphism};

pub type Check = fn(&Hypergroup) -> Result<(), String>;

/// `(property, check)` for the axioms, closed subsets, normality, quotients
/// and solvability.
pub fn battery() -> Vec<(&'static str, Check)> {
    vec![
        ("identity in inverse product", identity_in_inverse_product),
        ("inverse is involution", inverse_is_involution),
        ("products nonempty", products_nonempty),
        ("membership symmetries", membership_symmetries),
        ("thin products singleton", thin_products_singleton),
        ("star properties", star_properties),
        ("closedness criterion", closedness_criterion),
        ("closed under intersection", closed_under_intersection),
        ("modular law", modular_law),
        ("double coset partition", double_coset_partition),
        ("product closed iff permutable", product_closed_iff_permutable),
        ("normalizer products", normalizer_products),
        ("subnormal times normal", subnormal_times_normal),
        ("strongly normal is normal", strongly_normal_is_normal),
        ("theta core properties", theta_core_properties),
        ("metathin properties", metathin_properties),
        ("quotient products", quotient_products),
        ("correspondence", correspondence),
        ("normality transfers", normality_transfers),
        ("thin quotient iff strongly normal", thin_quotient_iff_strongly_normal),
        ("closed subsets of solvable", closed_subsets_of_solvable),
        ("quotients of solvable", quotients_of_solvable),
        ("extensions of solvable", extensions_of_solvable),
        ("subnormal transfer", subnormal_transfer),
    ]
}

/// `(property, check)` for the isomorphism theorems.
pub fn isomorphism_battery() -> Vec<(&'static str, Check)> {
    vec![
        ("first isomorphism", first_isomorphism),
        ("third isomorphism", third_isomorphism),
        ("second isomorphism", second_isomorphism),
    ]
}

fn all_subsets(h: &Hypergroup) -> Vec<ElementSubset> {
    let k = h.order();
    let mut v: Vec<ElementSubset> = (0u32..1 << k)
        .map(|m| h.subset((0..k).filter(|i| m >> i & 1 == 1)))
        .collect();
    v.sort_by_key(|a| (a.len(), a.to_vec()));
    v
}

fn subsets_of(h: &Hypergroup, f: &ElementSubset) -> Vec<ElementSubset> {
    let m = f.to_vec();
    (0u32..1 << m.len())
        .map(|mask| h.subset((0..m.len()).filter(|i| mask >> i & 1 == 1).map(|i| m[i])))
        .collect()
}

fn prod(h: &Hypergroup, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
    h.subset_product(a, b).expect("same parent")
}

fn single(h: &Hypergroup, x: usize) -> ElementSubset {
    h.subset([x])
}

fn set(a: &ElementSubset) -> Vec<usize> {
    a.to_vec()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn identity_in_inverse_product(h: &Hypergroup) -> Result<(), String> {
    for a in 0..h.order() {
        for b in 0..h.order() {
            let has = h.product(h.inverse(a), b).contains(0);
            ensure!(has == (a == b), "a={a}, b={b}: 1 ∈ a*b is {has}");
        }
    }
    Ok(())
}

fn inverse_is_involution(h: &Hypergroup) -> Result<(), String> {
    for a in 0..h.order() {
        ensure!(h.inverse(h.inverse(a)) == a, "a={a}: a** ≠ a");
    }
    Ok(())
}

fn products_nonempty(h: &Hypergroup) -> Result<(), String> {
    for a in 0..h.order() {
        for b in 0..h.order() {
            ensure!(!h.product(a, b).is_empty(), "a={a}, b={b}: ab is empty");
        }
    }
    Ok(())
}

fn membership_symmetries(h: &Hypergroup) -> Result<(), String> {
    let inv = |x| h.inverse(x);
    let k = h.order();
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                let v = [
                    h.product(a, b).contains(c),
                    h.product(inv(a), c).contains(b),
                    h.product(b, inv(c)).contains(inv(a)),
                    h.product(inv(b), inv(a)).contains(inv(c)),
                    h.product(inv(c), a).contains(inv(b)),
                    h.product(c, inv(b)).contains(a),
                ];
                ensure!(
                    v.iter().all(|&x| x == v[0]),
                    "(a,b,c)=({a},{b},{c}): memberships {v:?}"
                );
            }
        }
    }
    Ok(())
}

fn thin_products_singleton(h: &Hypergroup) -> Result<(), String> {
    for b in (0..h.order()).filter(|&b| h.is_thin_element(b)) {
        for a in 0..h.order() {
            ensure!(h.product(a, b).len() == 1, "thin b={b}, a={a}: |ab| ≠ 1");
        }
    }
    Ok(())
}

fn star_properties(h: &Hypergroup) -> Result<(), String> {
    let subsets = all_subsets(h);
    for a in &subsets {
        for b in &subsets {
            if a.is_subset_of(b).unwrap() {
                ensure!(
                    h.star(a).is_subset_of(&h.star(b)).unwrap(),
                    "A={:?} ⊆ B={:?} but A* ⊄ B*",
                    set(a),
                    set(b)
                );
            }
            let lhs = h.star(&prod(h, a, b));
            let rhs = prod(h, &h.star(b), &h.star(a));
            ensure!(lhs == rhs, "A={:?}, B={:?}: (AB)* ≠ B*A*", set(a), set(b));
        }
    }
    Ok(())
}

fn closedness_criterion(h: &Hypergroup) -> Result<(), String> {
    for a in all_subsets(h).iter().filter(|a| !a.is_empty()) {
        let criterion = a.contains(0) && h.star(a) == *a && prod(h, a, a) == *a;
        ensure!(
            h.is_closed(a) == criterion,
            "A={:?}: closed={} but 1∈A, A*=A, AA=A is {criterion}",
            set(a),
            h.is_closed(a)
        );
    }
    Ok(())
}

fn closed_under_intersection(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    for d in &closed {
        for e in &closed {
            let i = d.intersection(e).unwrap();
            ensure!(h.is_closed(&i), "D={:?} ∩ E={:?} not closed", d.to_vec(), e.to_vec());
        }
    }
    let all = closed
        .iter()
        .fold(h.all(), |acc, c| acc.intersection(c).unwrap());
    ensure!(h.is_closed(&all), "intersection of all closed subsets is not closed");
    Ok(())
}

fn modular_law(h: &Hypergroup) -> Result<(), String> {
    let subsets = all_subsets(h);
    for f in h.closed_subsets() {
        for a in subsets_of(h, &f) {
            for b in &subsets {
                let lhs = prod(h, &a, &b.intersection(&f).unwrap());
                let rhs = prod(h, &a, b).intersection(&f).unwrap();
                ensure!(
                    lhs == rhs,
                    "F={:?}, A={:?}, B={:?}: A(B∩F) ≠ AB∩F",
                    f.to_vec(),
                    set(&a),
                    set(b)
                );
                // the mirrored statement with the roles of A and B exchanged
                let lhs = prod(h, &b.intersection(&f).unwrap(), &a);
                let rhs = prod(h, b, &a).intersection(&f).unwrap();
                ensure!(
                    lhs == rhs,
                    "F={:?}, B={:?}, A={:?}: (B∩F)A ≠ BA∩F",
                    f.to_vec(),
                    set(&a),
                    set(b)
                );
            }
        }
    }
    Ok(())
}

fn double_coset(h: &Hypergroup, d: &ElementSubset, x: usize, e: &ElementSubset) -> ElementSubset {
    prod(h, &prod(h, d, &single(h, x)), e)
}

fn double_coset_partition(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    for d in &closed {
        for e in &closed {
            let cosets: Vec<ElementSubset> = (0..h.order())
                .map(|x| double_coset(h, d, x, e))
                .collect();
            for a in 0..h.order() {
                ensure!(cosets[a].contains(a), "a={a} ∉ DaE");
                for b in 0..h.order() {
                    if cosets[b].contains(a) {
                        ensure!(
                            cosets[b].is_subset_of(&cosets[a]).unwrap() && cosets[a] == cosets[b],
                            "D={:?}, E={:?}: a={a} ∈ DbE (b={b}) but DbE ≠ DaE",
                            d.to_vec(),
                            e.to_vec()
                        );
                    } else {
                        ensure!(
                            cosets[a].intersection(&cosets[b]).unwrap().is_empty(),
                            "D={:?}, E={:?}: DaE and DbE overlap (a={a}, b={b})",
                            d.to_vec(),
                            e.to_vec()
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn product_closed_iff_permutable(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    for d in &closed {
        for e in &closed {
            let de = prod(h, d, e);
            let ed = prod(h, e, d);
            ensure!(
                h.is_closed(&de) == (de == ed),
                "D={:?}, E={:?}: DE closed={} but DE=ED is {}",
                d.to_vec(),
                e.to_vec(),
                h.is_closed(&de),
                de == ed
            );
        }
    }
    Ok(())
}

fn normalizer_products(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    for d in &closed {
        for e in &closed {
            if !h.normalizes(d, e).unwrap() {
                continue;
            }
            let w = || format!("D={:?} normalizes E={:?}", d.to_vec(), e.to_vec());
            for x in d.iter() {
                let ex = prod(h, e, &single(h, x));
                let xe = prod(h, &single(h, x), e);
                ensure!(ex == xe, "{}: Ed ≠ dE for d={x}", w());
            }
            let ed = prod(h, e, d);
            ensure!(h.is_closed(&ed), "{}: ED not closed", w());
            let ed = h.as_closed(&ed).unwrap();
            ensure!(h.is_normal(e, &ed).unwrap(), "{}: E not normal in ED", w());
            let i = h.as_closed(&e.intersection(d).unwrap()).unwrap();
            ensure!(h.is_normal(&i, d).unwrap(), "{}: E∩D not normal in D", w());
        }
    }
    Ok(())
}

fn subnormal_times_normal(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    let whole = h.whole();
    for d in &closed {
        if !h.is_subnormal(d, &whole).unwrap() {
            continue;
        }
        for e in closed.iter().filter(|e| h.is_normal(e, &whole).unwrap()) {
            let ed = prod(h, e, d);
            ensure!(
                h.is_closed(&ed),
                "D={:?} subnormal, E={:?} normal: ED not closed",
                d.to_vec(),
                e.to_vec()
            );
            let ed = h.as_closed(&ed).unwrap();
            ensure!(
                h.is_subnormal(&ed, &whole).unwrap(),
                "D={:?} subnormal, E={:?} normal: ED not subnormal",
                d.to_vec(),
                e.to_vec()
            );
        }
    }
    Ok(())
}

fn strongly_normal_is_normal(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    for f in &closed {
        for g in closed.iter().filter(|g| f.is_subset_of(g).unwrap()) {
            if h.is_strongly_normal(f, g).unwrap() {
                ensure!(
                    h.is_normal(f, g).unwrap(),
                    "F={:?} strongly normal but not normal in {:?}",
                    f.to_vec(),
                    g.to_vec()
                );
            }
        }
    }
    Ok(())
}

fn theta_core_properties(h: &Hypergroup) -> Result<(), String> {
    let report = h.theta_core_report();
    let core = report.core;
    ensure!(
        h.is_strongly_normal(&core, &h.whole()).unwrap(),
        "O^ϑ(H)={:?} not strongly normal",
        core.to_vec()
    );
    for x in 0..h.order() {
        let xx = h.product(h.inverse(x), x);
        ensure!(
            xx.is_subset_of(&core).unwrap(),
            "h={x}: h*h ⊄ O^ϑ(H)={:?}",
            core.to_vec()
        );
    }
    Ok(())
}

fn metathin_properties(h: &Hypergroup) -> Result<(), String> {
    if !h.is_metathin() {
        return Ok(());
    }
    let core = h.theta_core();
    for x in 0..h.order() {
        let xs = single(h, x);
        let hh = prod(h, &prod(h, &xs, &single(h, h.inverse(x))), &xs);
        ensure!(hh == xs, "metathin, h={x}: hh*h = {:?}", set(&hh));
        let sq = h.product(h.inverse(x), x);
        ensure!(h.is_closed(&sq), "metathin, h={x}: h*h not closed");
        ensure!(
            sq.iter().all(|y| h.is_thin_element(y)),
            "metathin, h={x}: h*h not thin"
        );
        let sq = h.as_closed(&sq).unwrap();
        ensure!(
            h.is_normal(&sq, &core).unwrap(),
            "metathin, h={x}: h*h not normal in O^ϑ(H)"
        );
    }
    Ok(())
}

fn quotient_products(h: &Hypergroup) -> Result<(), String> {
    let mut pieces: Vec<ElementSubset> = (0..h.order()).map(|x| single(h, x)).collect();
    pieces.extend(h.closed_subsets().iter().map(|c| *c.subset()));
    for f in h.closed_subsets() {
        let q = h.quotient(&f).unwrap();
        let qh = q.hypergroup();
        let fab = |a: &ElementSubset| prod(h, &prod(h, &f, a), &f);
        let check = |parts: &[&ElementSubset]| -> Result<(), String> {
            let mut upstairs = fab(parts[0]);
            let mut downstairs = q.project_subset(parts[0]).unwrap();
            for p in &parts[1..] {
                upstairs = prod(h, &upstairs, &fab(p));
                downstairs = qh.subset_product(&downstairs, &q.project_subset(p).unwrap()).unwrap();
            }
            for x in 0..h.order() {
                ensure!(
                    downstairs.contains(q.coset_of(x)) == upstairs.contains(x),
                    "F={:?}, h={x}, A={:?}",
                    f.to_vec(),
                    parts.iter().map(|p| p.to_vec()).collect::<Vec<_>>()
                );
            }
            Ok(())
        };
        for a in &pieces {
            check(&[a])?;
            for b in &pieces {
                check(&[a, b])?;
            }
        }
        for a in 0..h.order() {
            for b in 0..h.order() {
                for c in 0..h.order() {
                    check(&[&pieces[a], &pieces[b], &pieces[c]])?;
                }
            }
        }
    }
    Ok(())
}

fn correspondence(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    for f in &closed {
        let q = h.quotient(f).unwrap();
        let above: Vec<&ClosedSubset> = closed.iter().filter(|e| f.is_subset_of(e).unwrap()).collect();
        let downstairs = q.hypergroup().closed_subsets();
        ensure!(
            above.len() == downstairs.len(),
            "F={:?}: {} closed supersets but {} closed subsets of H//F",
            f.to_vec(),
            above.len(),
            downstairs.len()
        );
        for e in &above {
            let p = q.project(e).unwrap();
            ensure!(
                q.lift_closed(p.subset()).unwrap() == **e,
                "F={:?}, E={:?}: lift(project(E)) ≠ E",
                f.to_vec(),
                e.to_vec()
            );
        }
        for c in &downstairs {
            let l = q.lift_closed(c.subset()).unwrap();
            ensure!(
                q.project(&l).unwrap() == *c,
                "F={:?}, C={:?}: project(lift(C)) ≠ C",
                f.to_vec(),
                c.to_vec()
            );
        }
    }
    Ok(())
}

fn normality_transfers(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    let whole = h.whole();
    for d in &closed {
        let q = h.quotient(d).unwrap();
        let qh = q.hypergroup();
        for e in closed.iter().filter(|e| d.is_subset_of(e).unwrap()) {
            let ed = q.project(e).unwrap();
            if h.is_normal(e, &whole).unwrap() {
                ensure!(
                    qh.is_normal(&ed, &qh.whole()).unwrap(),
                    "D={:?}, E={:?}: E normal but E//D not normal",
                    d.to_vec(),
                    e.to_vec()
                );
            }
            let up = h.is_strongly_normal(e, &whole).unwrap();
            let down = qh.is_strongly_normal(&ed, &qh.whole()).unwrap();
            ensure!(
                up == down,
                "D={:?}, E={:?}: strongly normal {up} upstairs, {down} downstairs",
                d.to_vec(),
                e.to_vec()
            );
        }
    }
    Ok(())
}

fn thin_quotient_iff_strongly_normal(h: &Hypergroup) -> Result<(), String> {
    for f in h.closed_subsets() {
        let thin = h.quotient(&f).unwrap().hypergroup().is_thin();
        let sn = h.is_strongly_normal(&f, &h.whole()).unwrap();
        ensure!(thin == sn, "F={:?}: H//F thin={thin}, strongly normal={sn}", f.to_vec());
    }
    Ok(())
}

fn closed_subsets_of_solvable(h: &Hypergroup) -> Result<(), String> {
    if !h.is_solvable() {
        return Ok(());
    }
    for e in h.closed_subsets() {
        ensure!(h.restrict(&e).is_solvable(), "E={:?} not solvable", e.to_vec());
    }
    Ok(())
}

fn quotients_of_solvable(h: &Hypergroup) -> Result<(), String> {
    if !h.is_solvable() {
        return Ok(());
    }
    let whole = h.whole();
    for e in h.closed_subsets() {
        if h.is_subnormal(&e, &whole).unwrap() {
            ensure!(
                h.quotient(&e).unwrap().hypergroup().is_solvable(),
                "E={:?} subnormal but H//E not solvable",
                e.to_vec()
            );
        }
    }
    Ok(())
}

fn extensions_of_solvable(h: &Hypergroup) -> Result<(), String> {
    for e in h.closed_subsets() {
        if h.restrict(&e).is_solvable() && h.quotient(&e).unwrap().hypergroup().is_solvable() {
            ensure!(
                h.is_solvable(),
                "E={:?} and H//E solvable but H is not",
                e.to_vec()
            );
        }
    }
    Ok(())
}

fn subnormal_transfer(h: &Hypergroup) -> Result<(), String> {
    if !h.is_solvable() {
        return Ok(());
    }
    let whole = h.whole();
    let closed = h.closed_subsets();
    for d in closed.iter().filter(|d| h.is_subnormal(d, &whole).unwrap()) {
        let q = h.quotient(d).unwrap();
        let qh = q.hypergroup();
        for e in closed.iter().filter(|e| d.is_subset_of(e).unwrap()) {
            let ed = q.project(e).unwrap();
            if qh.is_subnormal(&ed, &qh.whole()).unwrap() {
                ensure!(
                    h.is_subnormal(e, &whole).unwrap(),
                    "D={:?}, E={:?}: E//D subnormal but E not subnormal",
                    d.to_vec(),
                    e.to_vec()
                );
            }
        }
    }
    Ok(())
}

/// The image of a homomorphism as a hypergroup of its own.
fn image_hypergroup(phi: &HypergroupHomomorphism) -> Hypergroup {
    phi.target().restrict(&phi.image())
}

fn isomorphic(a: &Hypergroup, b: &Hypergroup) -> bool {
    find_isomorphism(a, b).expect("within cap").is_some()
}

/// Homomorphisms out of `h`: identity, the map to the singleton, and every
/// projection `H → H//F` that is a homomorphism, composed with the
/// projections of its target.
fn homomorphisms(h: &Hypergroup) -> Vec<HypergroupHomomorphism> {
    let mut out = vec![
        HypergroupHomomorphism::identity(h),
        HypergroupHomomorphism::to_trivial(h),
    ];
    for f in h.closed_subsets() {
        let Ok(p) = h.quotient(&f).unwrap().projection() else {
            continue;
        };
        for g in p.target().closed_subsets() {
            if let Ok(p2) = p.target().quotient(&g).unwrap().projection() {
                out.push(p.then(&p2).expect("composition of homomorphisms"));
            }
        }
        out.push(p);
    }
    out
}

fn first_isomorphism(h: &Hypergroup) -> Result<(), String> {
    for phi in homomorphisms(h) {
        let w = || format!("φ={:?}", phi.map());
        for x in 0..h.order() {
            ensure!(
                phi.apply(h.inverse(x)) == phi.target().inverse(phi.apply(x)),
                "{}: φ(h*) ≠ φ(h)* at h={x}",
                w()
            );
        }
        let ker = phi.kernel();
        ensure!(h.is_normal(&ker, &h.whole()).unwrap(), "{}: kernel not normal", w());
        for a in 0..h.order() {
            for b in 0..h.order() {
                let same = prod(h, &single(h, a), &ker) == prod(h, &single(h, b), &ker);
                ensure!(
                    (phi.apply(a) == phi.apply(b)) == same,
                    "{}: fibre criterion fails at a={a}, b={b}",
                    w()
                );
            }
        }
        let quotient = h.quotient(&ker).unwrap();
        ensure!(
            isomorphic(quotient.hypergroup(), &image_hypergroup(&phi)),
            "{}: H//ker(φ) ≇ im(φ)",
            w()
        );
    }
    Ok(())
}

fn third_isomorphism(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    let whole = h.whole();
    for e in closed.iter().filter(|e| h.is_normal(e, &whole).unwrap()) {
        let he = h.quotient(e).unwrap();
        for d in closed.iter().filter(|d| d.is_subset_of(e).unwrap()) {
            let hd = h.quotient(d).unwrap();
            let qh = hd.hypergroup();
            let ed = hd.project(e).unwrap();
            ensure!(
                qh.is_normal(&ed, &qh.whole()).unwrap(),
                "D={:?}, E={:?}: E//D not normal in H//D",
                d.to_vec(),
                e.to_vec()
            );
            let double = qh.quotient(&ed).unwrap();
            ensure!(
                isomorphic(double.hypergroup(), he.hypergroup()),
                "D={:?}, E={:?}: (H//D)//(E//D) ≇ H//E",
                d.to_vec(),
                e.to_vec()
            );
        }
    }
    Ok(())
}

/// `a` re-indexed inside `r = h.restrict(f)`.
fn inside(r: &Hypergroup, f: &ClosedSubset, a: &ElementSubset) -> ClosedSubset {
    let members = f.to_vec();
    let sub = r.subset(a.iter().map(|x| members.iter().position(|&m| m == x).expect("member")));
    r.as_closed(&sub).expect("closed inside")
}

fn second_isomorphism(h: &Hypergroup) -> Result<(), String> {
    let closed = h.closed_subsets();
    for d in &closed {
        for e in &closed {
            if !h.normalizes(d, e).unwrap() {
                continue;
            }
            let w = || format!("D={:?} normalizes E={:?}", d.to_vec(), e.to_vec());
            let ed = prod(h, e, d);
            ensure!(h.is_closed(&ed), "{}: ED not closed", w());
            let ed = h.as_closed(&ed).unwrap();
            let r_ed = h.restrict(&ed);
            let e_in = inside(&r_ed, &ed, e);
            ensure!(
                r_ed.is_normal(&e_in, &r_ed.whole()).unwrap(),
                "{}: E not normal in ED",
                w()
            );
            let r_d = h.restrict(d);
            let i_in = inside(&r_d, d, &e.intersection(d).unwrap());
            ensure!(
                r_d.is_normal(&i_in, &r_d.whole()).unwrap(),
                "{}: E∩D not normal in D",
                w()
            );
            let left = r_ed.quotient(&e_in).unwrap();
            let right = r_d.quotient(&i_in).unwrap();
            ensure!(
                isomorphic(left.hypergroup(), right.hypergroup()),
                "{}: ED//E ≇ D//(E∩D)",
                w()
            );
        }
    }
    Ok(())
}
