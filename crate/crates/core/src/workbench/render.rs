use serde_json::Value;

fn verdicts(v: &Value, path: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            if let Some(Value::Bool(pass)) = m.get("pass") {
                if !path.is_empty() {
                    let mut line = format!("{} {path}", if *pass { "PASS" } else { "FAIL" });
                    if let Some(c) = m.get("checked").and_then(Value::as_u64) {
                        line.push_str(&format!(" ({c} checked)"));
                    }
                    out.push(line);
                    if !pass {
                        if let Some(Value::Array(ws)) = m.get("witnesses") {
                            for w in ws.iter().take(3) {
                                let s = match w {
                                    Value::String(s) => s.clone(),
                                    Value::Object(o) => match (o.get("morphism"), o.get("detail")) {
                                        (Some(Value::String(m)), Some(Value::String(d))) => format!("{m}: {d}"),
                                        _ => Value::Object(o.clone()).to_string(),
                                    },
                                    other => other.to_string(),
                                };
                                out.push(format!("    witness: {s}"));
                            }
                        }
                        if let Some(Value::String(r)) = m.get("reason") {
                            out.push(format!("    {r}"));
                        }
                    }
                }
            }
            for (k, child) in m {
                if k == "search" || k == "certificates" {
                    continue;
                }
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                verdicts(child, &p, out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                let p = match x.get("name").and_then(Value::as_str) {
                    Some(name) => format!("{path}.{name}"),
                    None => format!("{path}[{i}]"),
                };
                verdicts(x, &p, out);
            }
        }
        _ => {}
    }
}

/// Human-readable summary: header, notable facts, then one line per verdict.
pub fn render_text(report: &Value) -> String {
    let get = |k: &str| report.get(k).map(|v| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())).unwrap_or_default();
    let mut out = vec![
        format!("{} on {} (n = {}, seed = {})", get("command"), get("instance"), get("n"), get("seed")),
        format!("instance sha256 {}", get("instance_sha256")),
    ];
    if let Some(labels) = report.pointer("/ambient/labels").and_then(Value::as_array) {
        let ls: Vec<&str> = labels.iter().filter_map(Value::as_str).collect();
        out.push(format!("ambient indecomposables ({}): {}", ls.len(), ls.join(" ")));
    }
    let result = report.get("result").cloned().unwrap_or(Value::Null);
    for ct in [result.get("found"), result.pointer("/find_ct/found")].into_iter().flatten() {
        if let Some(xs) = ct.as_array() {
            out.push(format!("cluster tilting subcategories found: {}", xs.len()));
            for x in xs {
                out.push(format!("    {} {}", x["name"].as_str().unwrap_or(""), x["members"]));
            }
        }
    }
    for g in [result.get("gamma"), result.pointer("/verify_auslander/gamma")].into_iter().flatten() {
        out.push(format!("dim Γ = {}", g["dim"]));
    }
    for e in [result.get("effaceable"), result.pointer("/verify_auslander/effaceable")].into_iter().flatten() {
        out.push(format!(
            "effaceable simples: {}; non-effaceable simples: {}",
            e["effaceable_simples"], e["non_effaceable_simples"]
        ));
    }
    let mut lines = Vec::new();
    verdicts(&result, "", &mut lines);
    out.extend(lines);
    if let Some(t) = report.get("timings_ms") {
        out.push(format!("timings (ms): {t}"));
    }
    out.push(format!("verdict: {}", if report["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" }));
    let mut s = out.join("\n");
    s.push('\n');
    s
}
