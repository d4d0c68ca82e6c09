use clap::ValueEnum;
use platknot_core::{
    heegaard_genus_bound, normalize_to_special, track_components, CoveringClass, CoveringSpec,
    PlatPresentation,
};

use crate::document::Document;
use crate::error::CliError;
use crate::render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Components, arc counts and arc memberships of the closure
    Trace,
    /// Values of conditions (1), (2), (2') and specialness
    Special,
    /// Move the plat to a special one and print the moves
    Normalize,
    /// Strongest class of the covering and every class it satisfies
    Classify,
    /// Preimage component count over each link component
    CoverComponents,
    /// p-symmetric Heegaard genus bound (n-1)(p-1)
    Genus,
    /// (0,n)-decomposition data
    Decompose,
    /// ASCII or SVG drawing of the plat
    Render,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub format: Format,
    pub svg: bool,
    pub emit_normalized: bool,
}

/// Flat `key: value` output, one pair per line.
#[derive(Default)]
struct Structured(String);

impl Structured {
    fn put(&mut self, key: &str, value: impl std::fmt::Display) -> &mut Self {
        let value = value.to_string();
        if value.is_empty() {
            self.0.push_str(&format!("{key}:\n"));
        } else {
            self.0.push_str(&format!("{key}: {value}\n"));
        }
        self
    }

    fn list<T: std::fmt::Display>(&mut self, key: &str, values: &[T]) -> &mut Self {
        self.put(key, joined(values, " "))
    }
}

fn joined<T: std::fmt::Display>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn need_plat(doc: &Document, command: &str) -> Result<PlatPresentation, CliError> {
    doc.plat
        .clone()
        .ok_or_else(|| CliError::Usage(format!("'{command}' needs a plat in the document")))
}

fn need_covering(doc: &Document, command: &str) -> Result<CoveringSpec, CliError> {
    doc.covering
        .clone()
        .ok_or_else(|| CliError::Usage(format!("'{command}' needs a covering in the document")))
}

pub fn run_command(command: Command, doc: &Document, opts: &Options) -> Result<String, CliError> {
    let structured = opts.format == Format::Structured;
    let mut s = Structured::default();
    let text = match command {
        Command::Trace => {
            let trace = need_plat(doc, "trace")?.trace();
            if structured {
                s.put("mu", trace.mu())
                    .list("n_j", trace.arc_counts())
                    .list("component_of_top_arc", trace.top_components())
                    .list("component_of_bottom_arc", trace.bottom_components());
                return Ok(s.0);
            }
            format!(
                "mu={}; n=[{}]; top arcs: [{}]; bottom arcs: [{}]\n",
                trace.mu(),
                joined(trace.arc_counts(), ","),
                joined(trace.top_components(), ","),
                joined(trace.bottom_components(), ",")
            )
        }
        Command::Special => {
            let plat = need_plat(doc, "special")?;
            let trace = plat.trace();
            let (c1, c2, c2p) = (
                trace.condition_1(),
                plat.condition_2(),
                trace.condition_2prime(),
            );
            if structured {
                s.put("condition1", c1)
                    .put("condition2", c2)
                    .put("condition2prime", c2p)
                    .put("special", c1 && c2);
                return Ok(s.0);
            }
            format!(
                "condition (1): {c1}\ncondition (2): {c2}\ncondition (2'): {c2p}\nspecial: {}\n",
                c1 && c2
            )
        }
        Command::Normalize => {
            let plat = need_plat(doc, "normalize")?;
            let (out, record) = normalize_to_special(&plat).map_err(CliError::domain)?;
            if opts.emit_normalized {
                let covering = match &doc.covering {
                    Some(cov) => Some(carry_covering(&plat, &record, cov)?),
                    None => None,
                };
                return Ok(Document {
                    plat: Some(out),
                    covering,
                }
                .emit());
            }
            if structured {
                s.put("moves", &record).put("word", out.braid());
                return Ok(s.0);
            }
            let moves = if record.is_empty() {
                "(none)".to_string()
            } else {
                record.to_string()
            };
            format!("moves: {moves}\nword: {}\n", out.braid())
        }
        Command::Classify => {
            let cov = need_covering(doc, "classify")?;
            let names: Vec<&str> = cov
                .satisfied_classes()
                .into_iter()
                .map(CoveringClass::name)
                .collect();
            if structured {
                s.put("p", cov.p())
                    .list("coefficients", cov.coefficients())
                    .put("class", cov.classify())
                    .list("classes_satisfied", &names);
                return Ok(s.0);
            }
            format!(
                "covering: {cov}\nclass: {}\nclasses satisfied: {}\n",
                cov.classify(),
                names.join(", ")
            )
        }
        Command::CoverComponents => {
            let cov = need_covering(doc, "cover-components")?;
            let counts = (1..=cov.mu())
                .map(|j| cov.preimage_component_count(j))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::domain)?;
            if structured {
                s.put("p", cov.p())
                    .list("coefficients", cov.coefficients())
                    .list("preimage_components", &counts);
                return Ok(s.0);
            }
            let mut text = String::new();
            for (j, count) in counts.iter().enumerate() {
                let perm = cov.monodromy_permutation(j + 1).map_err(CliError::domain)?;
                text.push_str(&format!(
                    "component {}: c={} monodromy {perm} preimage components {count}\n",
                    j + 1,
                    cov.coefficients()[j]
                ));
            }
            text
        }
        Command::Genus => {
            let plat = need_plat(doc, "genus")?;
            let cov = need_covering(doc, "genus")?;
            let (strict, flips) = cov.reorient_to_strict().map_err(CliError::domain)?;
            let n = plat.n();
            let g = heegaard_genus_bound(n, &strict).map_err(CliError::domain)?;
            if structured {
                s.put("p", strict.p())
                    .list("coefficients", strict.coefficients())
                    .put("genus_bound", g);
                return Ok(s.0);
            }
            let mut text = String::new();
            if !flips.is_empty() {
                text.push_str(&format!(
                    "reoriented components [{}]: {cov} -> {strict}\n",
                    joined(&flips, ",")
                ));
            }
            text.push_str(&format!("g ≤ ({n}-1)({}-1) = {g}\n", strict.p()));
            text
        }
        Command::Decompose => {
            let plat = need_plat(doc, "decompose")?;
            let (n, gluing) = plat.decomposition_data();
            if structured {
                s.put("n", n).put("word", &gluing);
                return Ok(s.0);
            }
            format!(
                "bridges: {n}\ngluing word: {gluing}\ngluing permutation: {}\n",
                gluing.induced_permutation()
            )
        }
        Command::Render => {
            let plat = need_plat(doc, "render")?;
            if opts.svg {
                render::svg(&plat)
            } else {
                render::ascii(&plat)
            }
        }
    };
    Ok(text)
}

/// Coefficients of `cov` re-indexed for the moved plat, negated on every
/// component whose carried orientation is opposite to the new canonical one.
fn carry_covering(
    input: &PlatPresentation,
    record: &platknot_core::MoveRecord,
    cov: &CoveringSpec,
) -> Result<CoveringSpec, CliError> {
    let carried = track_components(input, record).map_err(CliError::domain)?;
    let p = cov.p() as i64;
    let coefficients: Vec<i64> = carried
        .iter()
        .map(|c| {
            let value = cov.coefficients()[c.source - 1] as i64;
            if c.reversed {
                p - value
            } else {
                value
            }
        })
        .collect();
    CoveringSpec::validate(p, &coefficients).map_err(CliError::domain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::parse_document;

    fn run(command: Command, text: &str, opts: Options) -> String {
        run_command(command, &parse_document(text).unwrap(), &opts).unwrap()
    }

    fn structured() -> Options {
        Options {
            format: Format::Structured,
            ..Options::default()
        }
    }

    #[test]
    fn trace_text() {
        assert_eq!(
            run(Command::Trace, "plat 4\nword 2 2\n", Options::default()),
            "mu=2; n=[1,1]; top arcs: [1,2]; bottom arcs: [1,2]\n"
        );
        assert_eq!(
            run(Command::Trace, "plat 4\nword 2 2 2\n", structured()),
            "mu: 1\nn_j: 2\ncomponent_of_top_arc: 1 1\ncomponent_of_bottom_arc: 1 1\n"
        );
    }

    #[test]
    fn genus_text() {
        assert_eq!(
            run(
                Command::Genus,
                "plat 4\nword 2 2\ncovering 5 2 2\n",
                Options::default()
            ),
            "g ≤ (2-1)(5-1) = 4\n"
        );
        assert_eq!(
            run(
                Command::Genus,
                "plat 4\nword 2 2\ncovering 5 2 3\n",
                Options::default()
            ),
            "reoriented components [2]: (5; 2,3) -> (5; 2,2)\ng ≤ (2-1)(5-1) = 4\n"
        );
        assert_eq!(
            run(
                Command::Genus,
                "plat 6\nword 2 2 2 4\ncovering 2 1\n",
                structured()
            ),
            "p: 2\ncoefficients: 1\ngenus_bound: 2\n"
        );
    }

    #[test]
    fn genus_rejects_weak_coverings() {
        let doc = parse_document("plat 4\ncovering 7 1 3\n").unwrap();
        let err = run_command(Command::Genus, &doc, &Options::default()).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn missing_parts_are_usage_errors() {
        let doc = parse_document("covering 5 1\n").unwrap();
        for c in [
            Command::Trace,
            Command::Genus,
            Command::Render,
            Command::Normalize,
        ] {
            assert_eq!(
                run_command(c, &doc, &Options::default())
                    .unwrap_err()
                    .exit_code(),
                1
            );
        }
        let doc = parse_document("plat 2\n").unwrap();
        let err = run_command(Command::Classify, &doc, &Options::default()).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn normalize_text_and_document() {
        assert_eq!(
            run(Command::Normalize, "plat 4\nword 1\n", Options::default()),
            "moves: II'@1\nword: 1 1\n"
        );
        assert_eq!(
            run(Command::Normalize, "plat 4\nword 2 2\n", Options::default()),
            "moves: (none)\nword: 2 2\n"
        );
        assert_eq!(
            run(Command::Normalize, "plat 4\nword 1\n", structured()),
            "moves: II'@1\nword: 1 1\n"
        );
        let emit = Options {
            emit_normalized: true,
            ..Options::default()
        };
        let out = run(
            Command::Normalize,
            "plat 6\nword 2 3 1 2 4\ncovering 5 1 2\n",
            emit,
        );
        let doc = parse_document(&out).unwrap();
        assert!(doc.plat.unwrap().is_special());
        assert_eq!(doc.covering.unwrap().mu(), 2);
    }

    #[test]
    fn special_and_classify() {
        assert_eq!(
            run(Command::Special, "plat 4\nword 1\n", structured()),
            "condition1: true\ncondition2: false\ncondition2prime: false\nspecial: false\n"
        );
        assert_eq!(
            run(Command::Classify, "covering 4 1 2\n", structured()),
            "p: 4\ncoefficients: 1 2\nclass: singly-cyclic\nclasses_satisfied: singly-cyclic monodromy-cyclic\n"
        );
        assert_eq!(
            run(Command::Classify, "covering 5 2 3\n", Options::default()),
            "covering: (5; 2,3)\nclass: almost-strictly-cyclic\nclasses satisfied: almost-strictly-cyclic, meridian-cyclic, singly-cyclic, monodromy-cyclic\n"
        );
    }

    #[test]
    fn cover_components_and_decompose() {
        assert_eq!(
            run(
                Command::CoverComponents,
                "covering 6 2 1\n",
                Options::default()
            ),
            "component 1: c=2 monodromy (1 3 5)(2 4 6) preimage components 2\n\
             component 2: c=1 monodromy (1 2 3 4 5 6) preimage components 1\n"
        );
        assert_eq!(
            run(Command::CoverComponents, "covering 6 2 1\n", structured()),
            "p: 6\ncoefficients: 2 1\npreimage_components: 2 1\n"
        );
        assert_eq!(
            run(Command::Decompose, "plat 4\nword 2 2\n", structured()),
            "n: 2\nword: 2 2\n"
        );
        assert_eq!(
            run(
                Command::Decompose,
                "plat 4\nword 1 2 3\n",
                Options::default()
            ),
            "bridges: 2\ngluing word: 1 2 3\ngluing permutation: (1 4 3 2)\n"
        );
    }
}
