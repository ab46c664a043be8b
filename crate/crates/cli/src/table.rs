use kleinian::classify::Classification;

/// One row per class: number, |Aut|, skeleton, children and `A_0..A_n`.
pub fn classification(cls: &Classification) -> String {
    let header: Vec<String> = ["No.", "|Aut|", "skeleton", "children"]
        .iter()
        .map(|s| s.to_string())
        .chain((0..=cls.n).map(|i| format!("A{i}")))
        .collect();
    let mut rows = vec![header];
    for (i, r) in cls.classes.iter().enumerate() {
        let kids = r
            .children
            .iter()
            .map(|k| (k + 1).to_string())
            .collect::<Vec<_>>()
            .join(",");
        let mut row = vec![
            (i + 1).to_string(),
            r.aut_order.to_string(),
            r.skeleton.to_string(),
            if kids.is_empty() { "-".into() } else { kids },
        ];
        row.extend(r.we.coeffs().iter().map(|a| a.to_string()));
        rows.push(row);
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| if j == 2 { format!("{c:<w$}", w = widths[j]) } else { format!("{c:>w$}", w = widths[j]) })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
