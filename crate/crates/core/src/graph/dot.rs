use std::fmt::Write;

use super::Graph;

/// Graphviz rendering with optional vertex labels.
pub fn to_dot(g: &Graph, name: &str, labels: Option<&[String]>) -> String {
    let mut out = String::new();
    let id: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    let _ = writeln!(out, "graph {} {{", if id.is_empty() { "G".into() } else { id });
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let dot = to_dot(&Graph::complete(3), "k3", None);
        assert!(dot.starts_with("graph k3 {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        let labels = vec!["a".to_string(), "b\"".to_string()];
        let dot = to_dot(&Graph::path(2), "p-2", Some(&labels));
        assert!(dot.contains("graph p_2"));
        assert!(dot.contains("label=\"b\\\"\""));
    }
}
