use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use graphent::graph::{make_family, parse_arc_list, parse_edge_list, parse_graph6, Family};
use graphent::verifier::Member;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Decide from the extension: `.g6` is graph6, `.arcs` an arc list,
    /// anything else an edge list.
    Auto,
    Edges,
    Arcs,
    Graph6,
}

fn resolve(format: InputFormat, path: &Path) -> InputFormat {
    if format != InputFormat::Auto {
        return format;
    }
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => InputFormat::Graph6,
        Some("arcs") => InputFormat::Arcs,
        _ => InputFormat::Edges,
    }
}

/// Reads the graphs in `path`: one for edge and arc lists, one per
/// non-empty line for graph6.
pub fn read_graphs(path: &Path, format: InputFormat) -> Result<Vec<Member>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let what = || format!("in {}", path.display());
    Ok(match resolve(format, path) {
        InputFormat::Graph6 => {
            let graphs = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(k, l)| {
                    parse_graph6(l.trim_end().as_bytes())
                        .map(Member::Plain)
                        .with_context(|| format!("line {} {}", k + 1, what()))
                })
                .collect::<Result<Vec<_>>>()?;
            if graphs.is_empty() {
                bail!("no graph6 lines {}", what());
            }
            graphs
        }
        InputFormat::Arcs => vec![Member::Oriented(parse_arc_list(&text).with_context(what)?)],
        InputFormat::Edges | InputFormat::Auto => {
            vec![Member::Plain(parse_edge_list(&text).with_context(what)?)]
        }
    })
}

/// `<family>:<n>`, e.g. `star:5`.
pub fn family_graph(spec: &str) -> Result<Member> {
    let (name, n) = spec
        .split_once(':')
        .with_context(|| format!("bad family {spec:?}: expected <family>:<n>"))?;
    let family: Family = name.parse()?;
    let n: usize = n
        .parse()
        .with_context(|| format!("bad order in family {spec:?}"))?;
    Ok(Member::Plain(make_family(family, n)?))
}
