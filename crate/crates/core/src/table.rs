//! Pair-indexed set-valued operator tables and their text renderings.

use serde::Serialize;

use crate::set::{self, ElemSet};

/// A total map `carrier × carrier → 2^carrier`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Table {
    n: usize,
    cells: Vec<ElemSet>,
}

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> ElemSet) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        Table { n, cells }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> ElemSet {
        self.cells[x * self.n + y]
    }

    pub fn set(&mut self, x: usize, y: usize, v: ElemSet) {
        self.cells[x * self.n + y] = v;
    }

    /// `table(x, y) = {z}`
    pub fn is(&self, x: usize, y: usize, z: usize) -> bool {
        self.get(x, y) == ElemSet::singleton(z)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Every cell is a subset of the carrier.
    pub fn is_within_carrier(&self) -> bool {
        let all = ElemSet::full(self.n);
        self.cells.iter().all(|c| c.is_subset(all))
    }

    /// First pair on which two tables differ.
    pub fn first_difference(&self, other: &Table) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) != other.get(x, y))
    }

    /// The aligned layout used for golden files: a header row of element
    /// names, a `-`/`+` rule, one row per element, cells in compact set
    /// notation, single-space separated, trailing blanks trimmed.
    pub fn render(&self, symbol: &str, names: &[String]) -> String {
        let cells: Vec<Vec<String>> = (0..self.n)
            .map(|x| (0..self.n).map(|y| set::compact(names, self.get(x, y))).collect())
            .collect();
        let label_w = names.iter().map(|s| s.len()).chain([symbol.len()]).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.n)
            .map(|y| cells.iter().map(|row| row[y].len()).chain([names[y].len()]).max().unwrap_or(0))
            .collect();
        let line = |label: &str, row: &[String]| {
            let body: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            format!("{label:<label_w$} | {}", body.join(" ")).trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&line(symbol, names));
        out.push('\n');
        let rule_w = 1 + widths.iter().sum::<usize>() + widths.len().saturating_sub(1);
        out.push_str(&format!("{}+{}\n", "-".repeat(label_w + 1), "-".repeat(rule_w)));
        for (x, row) in cells.iter().enumerate() {
            out.push_str(&line(&names[x], row));
            out.push('\n');
        }
        out
    }

    /// Machine-readable dump: element list plus rows of member-name lists.
    pub fn to_json(&self, op: &str, names: &[String]) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump<'a> {
            op: &'a str,
            elements: &'a [String],
            cells: Vec<Vec<Vec<&'a str>>>,
        }
        let cells = (0..self.n)
            .map(|x| {
                (0..self.n)
                    .map(|y| self.get(x, y).iter().map(|i| names[i].as_str()).collect())
                    .collect()
            })
            .collect();
        serde_json::to_value(Dump { op, elements: names, cells }).expect("table dump serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_layout() {
        let names: Vec<String> = ["0", "a'", "1"].iter().map(|s| s.to_string()).collect();
        let t = Table::from_fn(3, |x, y| ElemSet::singleton(x) | ElemSet::singleton(y));
        let expected = "\
+  | 0   a'  1
---+------------
0  | 0   0a' 01
a' | 0a' a'  a'1
1  | 01  a'1 1
";
        assert_eq!(t.render("+", &names), expected);
    }

    #[test]
    fn json_dump_lists_member_names() {
        let names: Vec<String> = ["p", "q"].iter().map(|s| s.to_string()).collect();
        let t = Table::from_fn(2, |x, y| if x == y { ElemSet::singleton(x) } else { ElemSet::full(2) });
        let v = t.to_json("maxl", &names);
        assert_eq!(v["cells"][0][1], serde_json::json!(["p", "q"]));
        assert_eq!(v["elements"], serde_json::json!(["p", "q"]));
    }
}
