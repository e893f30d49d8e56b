//! Where a command's graph comes from.

use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use cayley_drg::graphs::{cayley_graph, graph6, Graph, NamedGraph};
use cayley_drg::groups::{parse_word_list, ConnectionSet, FiniteGroup, GroupSpec};
use clap::Args;

#[derive(Debug, Args)]
pub struct Source {
    /// graph6 string, a file holding one, or `-` for stdin (the default).
    pub input: Option<String>,
    /// A named graph such as `petersen` or `line(heawood)`.
    #[arg(long, conflicts_with_all = ["input", "group"])]
    pub named: Option<String>,
    /// Group for a Cayley graph, e.g. `SD(7,3,2)` or `Z4 x Z4`.
    #[arg(long, requires = "set", conflicts_with = "input")]
    pub group: Option<String>,
    /// Comma-separated connection-set words, e.g. `b, a^-1 b a`.
    #[arg(long, requires = "group")]
    pub set: Option<String>,
    /// Close the connection set under inverses.
    #[arg(long, requires = "set")]
    pub invclose: bool,
}

pub struct Loaded {
    pub graph: Graph,
    pub construction: Option<(FiniteGroup, ConnectionSet)>,
}

fn read_graph6(input: Option<&str>) -> Result<Graph> {
    let text = match input {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
        Some(arg) if Path::new(arg).is_file() => {
            std::fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
        }
        Some(arg) => arg.to_string(),
    };
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    Ok(graph6::decode(line)?)
}

pub fn construction(group: &str, set: &str, invclose: bool) -> Result<(FiniteGroup, ConnectionSet)> {
    let g = GroupSpec::parse(group)
        .and_then(|s| s.build())
        .with_context(|| format!("group `{group}`"))?;
    let words = parse_word_list(set).with_context(|| format!("connection set `{set}`"))?;
    let elems = words
        .iter()
        .map(|w| g.evaluate(w))
        .collect::<cayley_drg::Result<Vec<_>>>()?;
    if !invclose {
        if let Some(&x) = elems.iter().find(|&&x| !elems.contains(&g.inv(x))) {
            bail!("connection set is not inverse-closed (element {x} lacks its inverse); use --invclose");
        }
    }
    let s = if invclose { ConnectionSet::inverse_closure(&g, elems)? } else { ConnectionSet::new(&g, elems)? };
    Ok((g, s))
}

impl Source {
    pub fn load(&self) -> Result<Loaded> {
        if let Some(name) = &self.named {
            let graph = NamedGraph::parse(name)?.build()?;
            return Ok(Loaded { graph, construction: None });
        }
        if let (Some(group), Some(set)) = (&self.group, &self.set) {
            let (g, s) = construction(group, set, self.invclose)?;
            let graph = cayley_graph(&g, &s);
            return Ok(Loaded { graph, construction: Some((g, s)) });
        }
        let graph = read_graph6(self.input.as_deref())?;
        if graph.n() == 0 {
            bail!("graph has no vertices");
        }
        Ok(Loaded { graph, construction: None })
    }
}
