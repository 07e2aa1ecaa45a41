use hdtl_core::{
    check_laws, compose, compose_h, enumerate_h_classes, multiplication_table, parse_boundary, AlgebraElement,
    BoundaryConfig, LawMode,
};

fn configs(circles: usize) -> Vec<String> {
    if circles == 0 {
        return vec![String::new()];
    }
    let mut out = Vec::new();
    for inner in 0..circles {
        for a in configs(inner) {
            for b in configs(circles - 1 - inner) {
                out.push(format!("({a}){b}"));
            }
        }
    }
    out
}

fn cfg(s: &str) -> BoundaryConfig {
    parse_boundary(s).unwrap()
}

#[test]
fn laws_hold_exhaustively_up_to_three_circles() {
    for n in 0..=3 {
        for s in configs(n) {
            let report = check_laws(&cfg(&s), LawMode::Exhaustive);
            assert!(report.passed(), "{s}: {:?}", report.checks);
        }
    }
}

#[test]
fn laws_hold_on_samples_with_four_circles() {
    for s in configs(4) {
        let report = check_laws(&cfg(&s), LawMode::Sampled { seed: 11, samples: 1000 });
        assert!(report.passed(), "{s}: {:?}", report.checks);
        assert_eq!(report.checks.iter().find(|c| c.law == "associativity").unwrap().tested, 1000);
    }
}

#[test]
fn laws_hold_on_samples_with_five_circles() {
    for s in ["(()()())()", "((()))(())", "(())()()()"] {
        let report = check_laws(&cfg(s), LawMode::Sampled { seed: 5, samples: 1000 });
        assert!(report.passed(), "{s}: {:?}", report.checks);
    }
}

#[test]
fn associativity_across_different_configurations() {
    let names = ["", "()", "(())", "()()"];
    for a in names {
        for b in names {
            for c in names {
                for d in names {
                    let (fa, fb, fc, fd) = (cfg(a), cfg(b), cfg(c), cfg(d));
                    let xs = enumerate_h_classes(&fa, &fb);
                    let ys = enumerate_h_classes(&fb, &fc);
                    let zs = enumerate_h_classes(&fc, &fd);
                    for x in xs.iter().step_by(3) {
                        for y in ys.iter().step_by(2) {
                            let xy = compose_h(x, y).unwrap();
                            for z in zs.iter().step_by(3) {
                                let z = AlgebraElement::basis(z);
                                let lhs = compose(&xy, &z).unwrap();
                                let rhs = compose(
                                    &AlgebraElement::basis(x),
                                    &compose(&AlgebraElement::basis(y), &z).unwrap(),
                                )
                                .unwrap();
                                assert_eq!(lhs, rhs, "{a} {b} {c} {d}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn results_are_deterministic() {
    let f = cfg("(()())");
    assert_eq!(multiplication_table(&f).unwrap(), multiplication_table(&f).unwrap());
    let mode = LawMode::Sampled { seed: 3, samples: 300 };
    assert_eq!(check_laws(&cfg("()()()"), mode), check_laws(&cfg("()()()"), mode));
}
