//! Command implementations behind the `tmis` binary. Each command maps a
//! parsed input to deterministic report text; the binary handles argument
//! parsing, file IO, batching, and exit codes.

use crate::catalog::{is_isomorphic_small, make, recognize_tn, recognize_un, PatternKind};
use crate::decompose::decompose_and_solve;
use crate::error::{Error, Result};
use crate::format::{
    parse_graph, parse_tournament, parse_weights_file, write_reduction_instance, write_tournament,
};
use crate::pattern::{find_induced, is_1_in_degenerate, is_1_out_degenerate};
use crate::reductions::{build_misp_instance, verify_reduction, Gadget};
use crate::solution::Solution;
use crate::solvers::{solve, Method};
use crate::tournament::Tournament;
use crate::weights::{format_weight, WeightMap};

/// Exit code for an error: 2 input/parse, 3 out-of-class/unsupported,
/// 4 reduction verification failure.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotInClass(_) | Error::Unsupported => 3,
        Error::IdentityViolation { .. } | Error::FreenessViolation(_) => 4,
        _ => 2,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(verts: &[usize]) -> String {
    verts
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_solve(
    tournament_text: &str,
    weights_text: Option<&str>,
    method: Method,
    certificate: bool,
    verify_class: bool,
) -> Result<String> {
    let (t, mut w) = parse_tournament(tournament_text)?;
    if let Some(text) = weights_text {
        w = parse_weights_file(text, t.n())?;
    }
    let outcome = solve(&t, &w, method, verify_class)?;
    let mut out = format!("value={}\n", format_weight(outcome.solution.weight()));
    if certificate {
        out.push_str(&format!("set={}\n", join(outcome.solution.vertices())));
        out.push_str(&format!("method={}\n", outcome.method));
    }
    Ok(out)
}

fn recognized_as(t: &Tournament) -> Result<&'static str> {
    if t.is_transitive() {
        return Ok("In");
    }
    if t.n() == 7 && is_isomorphic_small(t, &make(PatternKind::Q7)?)?.is_some() {
        return Ok("Q7");
    }
    if t.n() == 6 && is_isomorphic_small(t, &make(PatternKind::Q7MinusV)?)?.is_some() {
        return Ok("Q7-v");
    }
    if recognize_tn(t).is_some() {
        return Ok("Tn");
    }
    if recognize_un(t).is_some() {
        return Ok("Un");
    }
    Ok("none")
}

pub fn cmd_classify(tournament_text: &str) -> Result<String> {
    let (t, _) = parse_tournament(tournament_text)?;
    let mut out = String::new();
    out.push_str(&format!("transitive={}\n", yes_no(t.is_transitive())));
    out.push_str(&format!(
        "prime={}\n",
        yes_no(crate::decompose::minimal_homogeneous_set(&t).is_none())
    ));
    for (label, kind) in [
        ("w5free", PatternKind::Wn(5)),
        ("u5free", PatternKind::Un(5)),
        ("k4free", PatternKind::K4),
        ("b4free", PatternKind::B4),
        ("c4free", PatternKind::C4),
        ("d4free", PatternKind::D4),
    ] {
        let free = find_induced(&t, &make(kind)?)?.is_none();
        out.push_str(&format!("{label}={}\n", yes_no(free)));
    }
    out.push_str(&format!(
        "1-in-degenerate={}\n",
        yes_no(is_1_in_degenerate(&t).degenerate)
    ));
    out.push_str(&format!(
        "1-out-degenerate={}\n",
        yes_no(is_1_out_degenerate(&t).degenerate)
    ));
    out.push_str(&format!("recognized={}\n", recognized_as(&t)?));
    Ok(out)
}

/// Parsed form of the `generate` positional arguments.
pub enum GenerateSpec {
    Pattern(PatternKind),
    MispHard { graph_path: String, gadget: Gadget },
}

pub fn parse_generate_spec(args: &[String]) -> Result<GenerateSpec> {
    let bad = |msg: &str| Error::BadParameter(msg.into());
    let kind = args.first().ok_or_else(|| bad("missing generate kind"))?;
    let num = |i: usize| -> Result<usize> {
        args.get(i)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad(&format!("'{kind}' needs a numeric parameter")))
    };
    let expect_len = |l: usize| -> Result<()> {
        if args.len() == l {
            Ok(())
        } else {
            Err(bad(&format!("'{kind}' takes {} argument(s)", l - 1)))
        }
    };
    match kind.as_str() {
        "tn" => {
            expect_len(2)?;
            Ok(GenerateSpec::Pattern(PatternKind::Tn(num(1)?)))
        }
        "un" => {
            expect_len(2)?;
            Ok(GenerateSpec::Pattern(PatternKind::Un(num(1)?)))
        }
        "wn" => {
            expect_len(2)?;
            Ok(GenerateSpec::Pattern(PatternKind::Wn(num(1)?)))
        }
        "in" => {
            expect_len(2)?;
            Ok(GenerateSpec::Pattern(PatternKind::In(num(1)?)))
        }
        "snake" => {
            expect_len(2)?;
            Ok(GenerateSpec::Pattern(PatternKind::Snake(num(1)?)))
        }
        "q7" => {
            expect_len(1)?;
            Ok(GenerateSpec::Pattern(PatternKind::Q7))
        }
        "q7mv" => {
            expect_len(1)?;
            Ok(GenerateSpec::Pattern(PatternKind::Q7MinusV))
        }
        "misp-hard" => {
            expect_len(3)?;
            Ok(GenerateSpec::MispHard {
                graph_path: args[1].clone(),
                gadget: args[2].parse()?,
            })
        }
        other => Err(bad(&format!("unknown generate kind '{other}'"))),
    }
}

pub fn cmd_generate_pattern(kind: PatternKind) -> Result<String> {
    Ok(write_tournament(&make(kind)?, None))
}

pub fn cmd_generate_misp_hard(graph_text: &str, gadget: Gadget) -> Result<String> {
    let g = parse_graph(graph_text)?;
    let inst = build_misp_instance(&g, gadget)?;
    Ok(write_reduction_instance(&inst))
}

pub fn cmd_decompose(tournament_text: &str) -> Result<String> {
    let (t, w) = parse_tournament(tournament_text)?;
    let mut inner = |t: &Tournament, w: &WeightMap| -> Result<Solution> {
        solve(t, w, Method::Auto, true).map(|o| o.solution)
    };
    let (reduction, _) = decompose_and_solve(&t, &w, &mut inner)?;
    let mut out = String::new();
    for (i, step) in reduction.steps.iter().enumerate() {
        out.push_str(&format!(
            "step={} set={} inner={}\n",
            i + 1,
            join(&step.module_ids),
            format_weight(&step.inner_weight)
        ));
    }
    out.push_str(&format!(
        "prime ({} steps) size={}\n",
        reduction.steps.len(),
        reduction.final_tournament.n()
    ));
    Ok(out)
}

/// Pattern argument of `check-free`: a named pattern, `snake:K`, or
/// `file:<path>` (the file is read by the caller).
pub enum PatternSpec {
    Kind(PatternKind),
    File(String),
}

pub fn parse_pattern_spec(s: &str) -> Result<PatternSpec> {
    if let Some(path) = s.strip_prefix("file:") {
        return Ok(PatternSpec::File(path.to_string()));
    }
    if let Some(k) = s.strip_prefix("snake:") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::BadParameter(format!("bad snake length '{k}'")))?;
        return Ok(PatternSpec::Kind(PatternKind::Snake(k)));
    }
    let kind = match s {
        "k4" => PatternKind::K4,
        "b4" => PatternKind::B4,
        "c4" => PatternKind::C4,
        "d4" => PatternKind::D4,
        "t5" => PatternKind::Tn(5),
        "u5" => PatternKind::Un(5),
        "w5" => PatternKind::Wn(5),
        other => return Err(Error::BadParameter(format!("unknown pattern '{other}'"))),
    };
    Ok(PatternSpec::Kind(kind))
}

pub fn cmd_check_free(tournament_text: &str, pattern: &Tournament) -> Result<String> {
    let (t, _) = parse_tournament(tournament_text)?;
    Ok(match find_induced(&t, pattern)? {
        None => "free=yes\n".to_string(),
        Some(hit) => format!("free=no witness={}\n", join(&hit.vertices)),
    })
}

pub fn cmd_verify_reduction(graph_text: &str, gadget: Gadget) -> Result<String> {
    let g = parse_graph(graph_text)?;
    let inst = build_misp_instance(&g, gadget)?;
    let report = verify_reduction(&inst)?;
    let mut line = format!(
        "mis={} offset={} tau={}",
        report.mis, report.offset, report.tau
    );
    if report.degenerate_checked {
        line.push_str(" 1outdeg=yes rev1indeg=yes");
    }
    if report.snake7_checked {
        line.push_str(" snake7free=yes");
    }
    line.push_str(" OK\n");
    Ok(line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_tournament;

    fn file_of(kind: PatternKind) -> String {
        write_tournament(&make(kind).unwrap(), None)
    }

    #[test]
    fn solve_reports_value_and_certificate() {
        let out = cmd_solve(&file_of(PatternKind::Tn(5)), None, Method::Auto, true, true).unwrap();
        assert!(out.starts_with("value=3\n"), "{out}");
        assert!(out.contains("set=0 1 2\n"), "{out}");
        assert!(out.contains("method=auto:"), "{out}");
    }

    #[test]
    fn solve_weighted_triangle() {
        let text = "3\n010\n001\n100\nweights: 3 1 2\n";
        let out = cmd_solve(text, None, Method::Auto, false, true).unwrap();
        assert_eq!(out, "value=5\n");
        let override_w = cmd_solve(text, Some("1 1 1"), Method::Auto, false, true).unwrap();
        assert_eq!(override_w, "value=2\n");
    }

    #[test]
    fn classify_q7() {
        let out = cmd_classify(&file_of(PatternKind::Q7)).unwrap();
        assert!(out.contains("prime=yes\n"));
        assert!(out.contains("w5free=yes\n"));
        assert!(out.contains("recognized=Q7\n"));
        assert!(out.contains("transitive=no\n"));
        assert!(out.contains("k4free=yes\n"));
    }

    #[test]
    fn classify_t5_and_i6() {
        let out = cmd_classify(&file_of(PatternKind::Tn(5))).unwrap();
        assert!(out.contains("1-in-degenerate=no\n"));
        assert!(out.contains("recognized=Tn\n"));
        let out = cmd_classify(&file_of(PatternKind::In(6))).unwrap();
        assert!(out.contains("transitive=yes\n"));
        assert!(out.contains("recognized=In\n"));
    }

    #[test]
    fn generate_fixtures() {
        let spec = parse_generate_spec(&["tn".into(), "5".into()]).unwrap();
        let GenerateSpec::Pattern(kind) = spec else {
            panic!()
        };
        let out = cmd_generate_pattern(kind).unwrap();
        assert!(out.starts_with("5\n01100\n"), "{out}");

        let out = cmd_generate_pattern(PatternKind::Q7).unwrap();
        assert!(out.starts_with("7\n0110100\n"), "{out}");

        let out = cmd_generate_pattern(PatternKind::In(3)).unwrap();
        assert_eq!(out, "3\n011\n001\n000\n");

        let spec = parse_generate_spec(&["tn".into(), "4".into()]).unwrap();
        let GenerateSpec::Pattern(bad) = spec else {
            panic!()
        };
        assert!(cmd_generate_pattern(bad).is_err());
    }

    #[test]
    fn decompose_traces() {
        let out = cmd_decompose(&file_of(PatternKind::Q7)).unwrap();
        assert_eq!(out, "prime (0 steps) size=7\n");
        let out = cmd_decompose(&file_of(PatternKind::In(4))).unwrap();
        assert!(out.contains("step=1"));
        assert!(out.ends_with("size=2\n"), "{out}");
    }

    #[test]
    fn check_free_outputs() {
        let t9 = file_of(PatternKind::Tn(9));
        let d4 = make(PatternKind::D4).unwrap();
        assert_eq!(cmd_check_free(&t9, &d4).unwrap(), "free=yes\n");
        let w5file = file_of(PatternKind::Wn(5));
        let w5 = make(PatternKind::Wn(5)).unwrap();
        assert_eq!(
            cmd_check_free(&w5file, &w5).unwrap(),
            "free=no witness=0 1 2 3 4\n"
        );
        let i4 = file_of(PatternKind::In(4));
        let t5 = make(PatternKind::Tn(5)).unwrap();
        assert_eq!(cmd_check_free(&i4, &t5).unwrap(), "free=yes\n");
    }

    #[test]
    fn verify_reduction_lines() {
        let out = cmd_verify_reduction("3 3\n0 1\n0 2\n1 2\n", Gadget::Plain).unwrap();
        assert_eq!(out, "mis=4 offset=6 tau=2 OK\n");
        let out = cmd_verify_reduction("3 0\n", Gadget::Plain).unwrap();
        assert_eq!(out, "mis=6 offset=6 tau=0 OK\n");
        let out = cmd_verify_reduction("3 2\n0 1\n1 2\n", Gadget::Snake7).unwrap();
        assert!(out.contains("snake7free=yes"), "{out}");
        // the K_3 snake7 instance genuinely contains a snake: exit-4 error
        let err = cmd_verify_reduction("3 3\n0 1\n0 2\n1 2\n", Gadget::Snake7).unwrap_err();
        assert_eq!(exit_code(&err), 4);
    }

    #[test]
    fn error_exit_codes() {
        let parse_err = cmd_solve("2\n00\n00\n", None, Method::Auto, false, true).unwrap_err();
        assert_eq!(exit_code(&parse_err), 2);
        let class_err = cmd_solve(
            &file_of(PatternKind::B4),
            None,
            Method::B4Free,
            false,
            true,
        )
        .unwrap_err();
        assert_eq!(exit_code(&class_err), 3);
    }
}
