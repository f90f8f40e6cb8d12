//! Construction expressions for the command line.
//!
//! ```text
//! expr := name [":" int {":" num}]            e.g. path:4, complete_bipartite:2:3
//!       | "cone(" expr ")"
//!       | "attach(" expr ";" expr {"," expr} ")"
//!       | "cw(" expr ";leaves=" int ";triangles=" int ")"
//!       | "cmbip(" file ")"
//!       | file                                 a graph JSON path
//! ```
//!
//! Atoms: `edge`, `vertex`, `none`, `empty:n`, `path:n`, `cycle:n`,
//! `complete:n`, `complete_bipartite:a:b`, `star:n`, `friendship:n`, `fan:n`,
//! `random:n:p` (seeded from the context).

use std::path::PathBuf;

use super::{
    attach, cameron_walker, cm_bipartite_from_poset, cone, edgeless, random_graph, standard_family, Family, Graph,
    GraphError, GraphJson, PosetJson,
};

#[derive(Debug, Clone, Default)]
pub struct DslContext {
    pub seed: u64,
    /// Relative file paths resolve against this directory when set.
    pub base_dir: Option<PathBuf>,
}

fn dsl_err(expr: &str, reason: impl Into<String>) -> GraphError {
    GraphError::Dsl {
        expr: expr.to_string(),
        reason: reason.into(),
    }
}

/// Splits on `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Result<Vec<&str>, GraphError> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(dsl_err(s, "unbalanced `)`"));
                }
            }
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(dsl_err(s, "unbalanced `(`"));
    }
    out.push(s[start..].trim());
    Ok(out)
}

fn parse_usize(expr: &str, text: &str) -> Result<usize, GraphError> {
    text.trim()
        .parse()
        .map_err(|_| dsl_err(expr, format!("expected a non-negative integer, got `{text}`")))
}

fn keyed(expr: &str, arg: &str, key: &str) -> Result<usize, GraphError> {
    match arg.split_once('=') {
        Some((k, v)) if k.trim() == key => parse_usize(expr, v),
        _ => Err(dsl_err(expr, format!("expected `{key}=<count>`, got `{arg}`"))),
    }
}

pub fn parse_dsl(expr: &str, ctx: &DslContext) -> Result<Graph, GraphError> {
    let e = expr.trim();
    if e.is_empty() {
        return Err(dsl_err(expr, "empty expression"));
    }
    if let (Some(open), true) = (e.find('('), e.ends_with(')')) {
        let name = e[..open].trim();
        let inner = &e[open + 1..e.len() - 1];
        let args = split_top(inner, ';')?;
        return match name {
            "cone" => {
                let [g] = args.as_slice() else {
                    return Err(dsl_err(e, "cone takes one argument"));
                };
                Ok(cone(&parse_dsl(g, ctx)?))
            }
            "attach" => {
                let [base, hs] = args.as_slice() else {
                    return Err(dsl_err(e, "attach takes `base;h1,h2,...`"));
                };
                let base = parse_dsl(base, ctx)?;
                let hs = split_top(hs, ',')?
                    .into_iter()
                    .map(|h| parse_dsl(h, ctx))
                    .collect::<Result<Vec<_>, _>>()?;
                attach(&base, &hs)
            }
            "cw" => {
                let [bip, leaves, triangles] = args.as_slice() else {
                    return Err(dsl_err(e, "cw takes `bipartite;leaves=n;triangles=m`"));
                };
                let bip = parse_dsl(bip, ctx)?;
                let leaves = keyed(e, leaves, "leaves")?;
                let triangles = keyed(e, triangles, "triangles")?;
                let parts = match bip.parts() {
                    Some(p) => p.clone(),
                    None => bip.bipartition().ok_or(GraphError::NotBipartite)?,
                };
                cameron_walker(&bip, &vec![leaves; parts.x.len()], &vec![triangles; parts.y.len()])
            }
            "cmbip" => {
                let [file] = args.as_slice() else {
                    return Err(dsl_err(e, "cmbip takes a poset file"));
                };
                Ok(cm_bipartite_from_poset(&PosetJson::parse(&read(file, ctx)?)?))
            }
            other => Err(dsl_err(e, format!("unknown constructor `{other}`"))),
        };
    }
    let mut pieces = e.split(':');
    let name = pieces.next().unwrap_or_default();
    let params: Vec<&str> = pieces.collect();
    let int = |k: usize| -> Result<usize, GraphError> {
        params
            .get(k)
            .ok_or_else(|| dsl_err(e, "missing parameter"))
            .and_then(|p| parse_usize(e, p))
    };
    let arity = |n: usize| -> Result<(), GraphError> {
        if params.len() == n {
            Ok(())
        } else {
            Err(dsl_err(e, format!("`{name}` takes {n} parameter(s)")))
        }
    };
    match name {
        "edge" => {
            arity(0)?;
            standard_family(Family::Path(2))
        }
        "vertex" => {
            arity(0)?;
            Ok(edgeless(1))
        }
        "none" => {
            arity(0)?;
            Ok(edgeless(0))
        }
        "empty" => {
            arity(1)?;
            Ok(edgeless(int(0)?))
        }
        "path" | "cycle" | "complete" | "star" | "friendship" | "fan" => {
            arity(1)?;
            let n = int(0)?;
            let family = match name {
                "path" => Family::Path(n),
                "cycle" => Family::Cycle(n),
                "complete" => Family::Complete(n),
                "star" => Family::Star(n),
                "friendship" => Family::Friendship(n),
                _ => Family::Fan(n),
            };
            standard_family(family)
        }
        "complete_bipartite" => {
            arity(2)?;
            standard_family(Family::CompleteBipartite(int(0)?, int(1)?))
        }
        "random" => {
            arity(2)?;
            let p: f64 = params[1]
                .parse()
                .map_err(|_| dsl_err(e, "edge probability must be a number"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(dsl_err(e, "edge probability must lie in [0, 1]"));
            }
            Ok(random_graph(int(0)?, p, ctx.seed))
        }
        _ if e.ends_with(".json") => GraphJson::parse(&read(e, ctx)?),
        _ => Err(dsl_err(e, "unknown graph expression")),
    }
}

fn read(path: &str, ctx: &DslContext) -> Result<String, GraphError> {
    let full = match &ctx.base_dir {
        Some(dir) => dir.join(path),
        None => PathBuf::from(path),
    };
    std::fs::read_to_string(&full).map_err(|source| GraphError::Io {
        path: full.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str) -> Graph {
        parse_dsl(s, &DslContext::default()).unwrap()
    }

    #[test]
    fn atoms_and_calls() {
        assert_eq!(eval("path:4").edge_count(), 3);
        assert_eq!(eval("cone(path:3)"), standard_family(Family::Fan(3)).unwrap());
        assert_eq!(eval("friendship:2").vertex_count(), 5);
        let g = eval("attach(edge;edge,edge)");
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        assert_eq!(eval("attach(vertex;empty:3)"), eval("star:3"));
        assert_eq!(eval("complete_bipartite:2:3").edge_count(), 6);
        let cw = eval("cw(edge;leaves=1;triangles=1)");
        assert_eq!((cw.vertex_count(), cw.edge_count()), (5, 5));
        assert_eq!(eval("attach(path:3;edge,none,vertex)").vertex_count(), 6);
    }

    #[test]
    fn nested_attach_splits_at_top_level() {
        let g = eval("attach(edge;cone(edge),attach(edge;vertex,vertex))");
        assert_eq!(g.vertex_count(), 2 + 3 + 4);
    }

    #[test]
    fn errors() {
        let ctx = DslContext::default();
        for bad in [
            "",
            "path",
            "path:x",
            "cone(edge",
            "blah:3",
            "attach(edge)",
            "cw(edge;leaves=1)",
            "random:4:2",
        ] {
            assert!(parse_dsl(bad, &ctx).is_err(), "{bad}");
        }
        assert!(matches!(parse_dsl("missing.json", &ctx), Err(GraphError::Io { .. })));
    }

    #[test]
    fn json_files_resolve_against_base_dir() {
        let dir = std::env::temp_dir().join(format!("reeslin-dsl-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(
            dir.join("k2.json"),
            r#"{"vertices":["a","b"],"edges":[["a","b"]],"parts":{"X":["a"],"Y":["b"]}}"#,
        )
        .unwrap();
        let ctx = DslContext {
            seed: 0,
            base_dir: Some(dir.clone()),
        };
        let g = parse_dsl("cw(k2.json;leaves=2;triangles=1)", &ctx).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        std::fs::remove_dir_all(dir).ok();
    }
}
