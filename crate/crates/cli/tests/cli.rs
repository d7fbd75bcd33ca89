use std::collections::BTreeMap;
use std::io::Write;
use std::process::{Command, Output};

use monalg::parse::{parse_ideal, render_ideal};
use monalg::reconstruct::{reconstruct_ideal, weight_data_of};
use monalg::sample::corpus;
use monalg::{ExponentVector, MonomialIdeal};

fn monalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn machine_output_matches_golden_files() {
    for (ideal, file) in [
        ("x^3", "x3.machine"),
        ("x^2, y^2", "x2_y2.machine"),
        ("y^3, x*y, x^3", "y3_xy_x3.machine"),
    ] {
        let o = monalg(&["analyze", ideal, "--machine"]);
        assert_eq!(o.status.code(), Some(0), "{ideal}");
        assert_eq!(stdout(&o), golden(file), "{ideal}");
    }
}

#[test]
fn generator_order_and_redundancy_do_not_change_output() {
    let a = monalg(&["analyze", "y^3, x*y, x^3", "--machine"]);
    let b = monalg(&["analyze", "x^3, x^4*y, x*y, y^3, x*y^2", "--machine"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn validation_and_parse_errors_exit_2() {
    for bad in [
        "x*y",
        "x^2, y",
        "x^^2",
        "",
        "x^2, y^-1",
        "x^2, q^2",
        "x^2, x1^2",
    ] {
        let o = monalg(&["analyze", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(stdout(&o).is_empty(), "{bad:?}");
        assert!(stderr(&o).starts_with("error:"), "{bad:?}: {}", stderr(&o));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["analyze"],
        &["roundtrip"],
        &["roundtrip", "x^2", "--random", "3", "--n", "2"],
        &["roundtrip", "--random", "3"],
        &["reconstruct"],
    ] {
        assert_eq!(monalg(args).status.code(), Some(2), "{args:?}");
    }
}

/// Machine records agree with the round trip and with each other.
#[test]
fn machine_report_is_self_consistent() {
    for ideal in corpus(11, 40, 1..=3, 4).unwrap() {
        let text = render_ideal(&ideal);
        let o = monalg(&["analyze", &text, "--machine"]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let mut fields: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for line in out.lines() {
            let (key, rest) = line.split_once(' ').unwrap();
            fields.entry(key).or_default().push(rest);
        }
        assert_eq!(fields["ROUNDTRIP"], ["ok"]);
        assert_eq!(fields["N"], [ideal.n().to_string()]);
        assert_eq!(fields["GEN"].len(), ideal.generators().len());
        let algdim: usize = fields["ALGDIM"][0].parse().unwrap();
        assert_eq!(fields["MONO"].len(), algdim);
        let dims: Vec<usize> = fields["DEG"]
            .iter()
            .map(|r| r.rsplit(' ').next().unwrap().parse().unwrap())
            .collect();
        let liedim: usize = fields["LIEDIM"][0].parse().unwrap();
        assert_eq!(dims.iter().sum::<usize>(), liedim);
        assert_eq!(fields["DER"].len(), liedim);
        assert_eq!(fields["TORUS"], [ideal.n().to_string()]);
        let roots = fields.get("ROOT").map_or(0, Vec::len);
        assert_eq!(roots + 1, fields["DEG"].len());
        let symmetries: usize = fields["SYMMETRIES"][0].parse().unwrap();
        assert_eq!(fields["PERM"].len(), symmetries);
        assert_eq!(stdout(&monalg(&["roundtrip", &text])), "OK\n");
    }
}

#[test]
fn printed_ideals_parse_back() {
    for ideal in corpus(12, 300, 1..=6, 5).unwrap() {
        assert_eq!(parse_ideal(&render_ideal(&ideal)).unwrap(), ideal);
    }
}

/// An outer degree `alpha` (single -1 at `k`) carries a derivation iff
/// `x^alpha * x_k d/dx_k` maps every generator divisible by `x_k` into the
/// ideal and some basis monomial `c` with `c_k > 0` lands on a basis monomial.
fn outer_oracle(ideal: &MonomialIdeal, basis: &[ExponentVector], alpha: &ExponentVector) -> bool {
    let Some(k) = (0..alpha.dim()).find(|&i| alpha.get(i) == -1) else {
        return false;
    };
    if (0..alpha.dim()).any(|i| i != k && alpha.get(i) < 0) {
        return false;
    }
    let preserved = ideal
        .generators()
        .iter()
        .filter(|g| g.get(k) > 0)
        .all(|g| ideal.contains(&g.add(alpha)).unwrap());
    let lands = basis
        .iter()
        .any(|c| c.get(k) > 0 && basis.contains(&c.add(alpha)));
    preserved && lands
}

#[test]
fn staircase_cells_match_independent_recomputation() {
    let mut ideals = corpus(13, 60, 1..=2, 5).unwrap();
    ideals.push(parse_ideal("y^3, x*y, x^3").unwrap());
    for ideal in ideals {
        let n = ideal.n();
        let o = monalg(&["staircase", &render_ideal(&ideal)]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        let corner: Vec<i64> = (0..n).map(|i| ideal.pure_power(i).unwrap()).collect();
        let basis: Vec<ExponentVector> = monalg::lattice::box_points(
            &ExponentVector::zero(n),
            &ExponentVector::new(corner.iter().map(|d| d - 1).collect()),
        )
        .filter(|m| !ideal.contains(m).unwrap())
        .collect();
        let rows: Vec<&str> = out
            .lines()
            .filter(|l| l.contains(" | ") && !l.starts_with("legend"))
            .collect();
        let ys: Vec<Option<i64>> = if n == 1 {
            vec![None]
        } else {
            (-1..=corner[1] + 1).rev().map(Some).collect()
        };
        assert_eq!(rows.len(), ys.len(), "{out}");
        let mut seen = 0;
        for (row, y) in rows.iter().zip(ys) {
            let (label, cells) = row.split_once(" | ").unwrap();
            assert_eq!(label.trim().parse::<i64>().ok(), y);
            let cells: Vec<char> = cells
                .split_whitespace()
                .map(|c| c.chars().next().unwrap())
                .collect();
            assert_eq!(cells.len() as i64, corner[0] + 3);
            for (x, cell) in (-1..=corner[0] + 1).zip(cells) {
                let alpha = ExponentVector::new(match y {
                    Some(y) => vec![x, y],
                    None => vec![x],
                });
                let expected = if alpha.is_nonneg() {
                    if ideal.contains(&alpha).unwrap() {
                        '#'
                    } else if (0..n).any(|i| basis.contains(&alpha.shifted(i, 1))) {
                        'G'
                    } else {
                        'o'
                    }
                } else if outer_oracle(&ideal, &basis, &alpha) {
                    'R'
                } else {
                    '.'
                };
                assert_eq!(cell, expected, "{} at {alpha}\n{out}", render_ideal(&ideal));
                seen += 1;
            }
        }
        assert!(seen > 0);
    }
}

#[test]
fn staircase_rejects_three_variables() {
    let o = monalg(&["staircase", "x^2, y^2, z^2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unsupported"));
}

#[test]
fn roundtrip_single_ideal() {
    let o = monalg(&["roundtrip", "y^3, x*y, x^3"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "OK\n"));
    assert_eq!(monalg(&["roundtrip", "x*y"]).status.code(), Some(2));
}

#[test]
fn roundtrip_random_batch_succeeds() {
    let o = monalg(&[
        "roundtrip",
        "--random",
        "500",
        "--n",
        "3",
        "--max-exp",
        "6",
        "--seed",
        "99",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "seed 99 n 3 max-exp 6");
    assert_eq!(lines.len(), 502);
    assert!(lines[1..501].iter().all(|l| l.starts_with("OK ")));
    assert_eq!(lines[501], "500/500 OK");
    // same seed, same output
    let again = monalg(&[
        "roundtrip",
        "--random",
        "500",
        "--n",
        "3",
        "--max-exp",
        "6",
        "--seed",
        "99",
    ]);
    assert_eq!(stdout(&again), out);
}

#[test]
fn roundtrip_random_rejects_bad_parameters() {
    let o = monalg(&["roundtrip", "--random", "5", "--n", "2", "--max-exp", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
}

#[test]
fn isocheck_examples() {
    let o = monalg(&["isocheck", "x^2, y^3", "x^3, y^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "isomorphic via [2 1] (x -> y, y -> x)\n");

    let o = monalg(&["isocheck", "y^3, x*y, x^3", "x^3, x*y, y^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("isomorphic via [1 2]"));

    let o = monalg(&["isocheck", "y^3, x*y, x^3", "x^2, y^2"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(1), "not isomorphic\n")
    );

    // different numbers of variables are never isomorphic
    let o = monalg(&["isocheck", "x^2", "x^2, y^2"]);
    assert_eq!(o.status.code(), Some(1));

    let o = monalg(&["isocheck", "x^2", "x*y"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn isocheck_witness_maps_one_ideal_onto_the_other() {
    let o = monalg(&[
        "isocheck",
        "x1^2, x2^3, x3^4, x1*x3",
        "x1^3, x2^4, x3^2, x2*x3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("isomorphic via [3 1 2]"), "{out}");
}

#[test]
fn weights_then_reconstruct_recovers_the_ideal() {
    for ideal in corpus(14, 30, 1..=3, 5).unwrap() {
        let text = render_ideal(&ideal);
        let o = monalg(&["weights", &text]);
        assert_eq!(o.status.code(), Some(0));
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(&o.stdout).unwrap();
        let o = monalg(&["reconstruct", "--weights", file.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(stdout(&o), format!("{text}\n"));
        // the library agrees
        let back = reconstruct_ideal(&weight_data_of(&ideal).unwrap()).unwrap();
        assert_eq!(back, ideal);
    }
}

#[test]
fn reconstruct_rejects_bad_weight_files() {
    for body in [
        "",
        "# nothing\n",
        "0 0 2\n1 1\n",
        "0 0 two\n",
        // degree 0 missing
        "1 0 1\n",
        // m(0) = 2 but no monomial of degree e1 or e2 follows consistently
        "0 0 2\n2 2 1\n",
    ] {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(body.as_bytes()).unwrap();
        let o = monalg(&["reconstruct", "--weights", file.path().to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{body:?}: {}", stdout(&o));
        assert!(stderr(&o).starts_with("error:"), "{body:?}");
    }
    let o = monalg(&["reconstruct", "--weights", "/nonexistent/weights.txt"]);
    assert_eq!(o.status.code(), Some(2));
}
