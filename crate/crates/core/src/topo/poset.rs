use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use super::PointSet;
use crate::{Error, Result};

/// Default cap on the number of elements for which all down-sets are
/// materialized.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

/// A finite poset, read as the specialization order of a finite spectral
/// space: `x ≤ y` iff `y` is in the closure of `{x}`.
///
/// Elements are kept sorted by label, so point indices follow the
/// lexicographic order of labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    // down[x] = { q : q ≤ x }, up[x] = { q : x ≤ q }
    down: Vec<PointSet>,
    up: Vec<PointSet>,
}

impl FinitePoset {
    /// Builds a poset from element labels and a relation `a ≤ b` given as
    /// pairs. The reflexive-transitive closure is taken; labels that only
    /// appear in pairs are added automatically.
    pub fn from_relation<L, A, B>(labels: L, pairs: impl IntoIterator<Item = (A, B)>) -> Result<Self>
    where
        L: IntoIterator,
        L::Item: AsRef<str>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut names: BTreeSet<String> = labels.into_iter().map(|l| l.as_ref().to_string()).collect();
        let pairs: Vec<(String, String)> = pairs
            .into_iter()
            .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
            .collect();
        for (a, b) in &pairs {
            names.insert(a.clone());
            names.insert(b.clone());
        }
        let labels: Vec<String> = names.into_iter().collect();
        let index: HashMap<String, usize> = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for (a, b) in &pairs {
            let (ia, ib) = (index[a], index[b]);
            if ia != ib {
                succ[ia].push(ib);
            }
        }
        // up[x] by breadth-first reachability
        let mut up = Vec::with_capacity(n);
        for x in 0..n {
            let mut seen = PointSet::singleton(n, x);
            let mut queue = VecDeque::from([x]);
            while let Some(v) = queue.pop_front() {
                for &w in &succ[v] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            up.push(seen);
        }
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    let mut cycle = path(&succ, x, y);
                    cycle.extend(path(&succ, y, x).into_iter().skip(1));
                    return Err(Error::OrderCycle(
                        cycle.into_iter().map(|i| labels[i].clone()).collect(),
                    ));
                }
            }
        }
        let down = transpose(&up);
        Ok(FinitePoset {
            labels,
            index,
            down,
            up,
        })
    }

    /// Builds a poset from labels and an order predicate, checking the
    /// partial-order axioms. Labels must be distinct.
    pub fn from_order(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        for w in order.windows(2) {
            if labels[w[0]] == labels[w[1]] {
                return Err(Error::NotPartialOrder(format!("duplicate label `{}`", labels[w[0]])));
            }
        }
        for a in 0..n {
            if !leq(a, a) {
                return Err(Error::NotPartialOrder(format!("`{}` ≰ itself", labels[a])));
            }
            for b in 0..n {
                if a != b && leq(a, b) && leq(b, a) {
                    return Err(Error::OrderCycle(vec![
                        labels[a].clone(),
                        labels[b].clone(),
                        labels[a].clone(),
                    ]));
                }
                if !leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if leq(b, c) && !leq(a, c) {
                        return Err(Error::NotPartialOrder(format!(
                            "not transitive at `{}` ≤ `{}` ≤ `{}`",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        let sorted: Vec<String> = order.iter().map(|&i| labels[i].clone()).collect();
        let index: HashMap<String, usize> = sorted.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let up: Vec<PointSet> = order
            .iter()
            .map(|&a| PointSet::from_indices(n, (0..n).filter(|&j| leq(a, order[j]))))
            .collect();
        let down = transpose(&up);
        Ok(FinitePoset {
            labels: sorted,
            index,
            down,
            up,
        })
    }

    /// The chain `labels[0] < labels[1] < …`.
    pub fn chain(labels: &[&str]) -> Self {
        Self::from_relation(labels.iter(), labels.windows(2).map(|w| (w[0], w[1])))
            .expect("a chain of distinct labels is a poset")
    }

    pub fn antichain(labels: &[&str]) -> Self {
        Self::from_relation(labels.iter(), std::iter::empty::<(&str, &str)>()).expect("an antichain is a poset")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `{q : q ≤ x}`, the smallest open set containing `x`.
    pub fn principal_down(&self, x: usize) -> &PointSet {
        &self.down[x]
    }

    /// `{q : x ≤ q}`, the closure of `{x}`.
    pub fn principal_up(&self, x: usize) -> &PointSet {
        &self.up[x]
    }

    pub fn point_set<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<PointSet> {
        let mut set = PointSet::empty(self.len());
        for l in labels {
            set.insert(self.index_of(l.as_ref())?);
        }
        Ok(set)
    }

    pub fn set_labels(&self, set: &PointSet) -> Vec<String> {
        set.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub(crate) fn check_set(&self, set: &PointSet) -> Result<()> {
        if set.universe() != self.len() {
            return Err(Error::ForeignPointSet {
                expected: self.len(),
                found: set.universe(),
            });
        }
        Ok(())
    }

    /// `{q : q ≤ p for some p ∈ S}`.
    pub fn down_closure(&self, set: &PointSet) -> Result<PointSet> {
        self.check_set(set)?;
        let mut out = PointSet::empty(self.len());
        for p in set.iter() {
            out.union_with(&self.down[p]);
        }
        Ok(out)
    }

    pub fn up_closure(&self, set: &PointSet) -> Result<PointSet> {
        self.check_set(set)?;
        let mut out = PointSet::empty(self.len());
        for p in set.iter() {
            out.union_with(&self.up[p]);
        }
        Ok(out)
    }

    /// Open sets are the down-sets.
    pub fn is_open(&self, set: &PointSet) -> Result<bool> {
        Ok(&self.down_closure(set)? == set)
    }

    pub fn is_closed(&self, set: &PointSet) -> Result<bool> {
        Ok(&self.up_closure(set)? == set)
    }

    /// The same points with the order reversed: the inverse topology of a
    /// finite spectral space.
    pub fn inverse_space(&self) -> FinitePoset {
        FinitePoset {
            labels: self.labels.clone(),
            index: self.index.clone(),
            down: self.up.clone(),
            up: self.down.clone(),
        }
    }

    /// All down-sets (open sets), in lexicographic order. Fails when the
    /// poset has more than `limit` elements.
    pub fn down_sets(&self, limit: usize) -> Result<Vec<PointSet>> {
        let n = self.len();
        if n > limit {
            return Err(Error::SizeLimit { size: n, limit });
        }
        // a linear extension: fewer elements below comes first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        let mut out = Vec::new();
        let mut current = PointSet::empty(n);
        self.extend_down_sets(&order, 0, &mut current, &mut out);
        out.sort();
        Ok(out)
    }

    fn extend_down_sets(&self, order: &[usize], k: usize, current: &mut PointSet, out: &mut Vec<PointSet>) {
        if k == order.len() {
            out.push(current.clone());
            return;
        }
        let x = order[k];
        self.extend_down_sets(order, k + 1, current, out);
        let mut below = self.down[x].clone();
        below.remove(x);
        if below.is_subset(current) {
            current.insert(x);
            self.extend_down_sets(order, k + 1, current, out);
            current.remove(x);
        }
    }

    /// Minimal elements of a subset.
    pub fn minimal(&self, set: &PointSet) -> PointSet {
        PointSet::from_indices(
            self.len(),
            set.iter().filter(|&x| set.iter().all(|y| y == x || !self.leq(y, x))),
        )
    }

    pub fn maximal(&self, set: &PointSet) -> PointSet {
        PointSet::from_indices(
            self.len(),
            set.iter().filter(|&x| set.iter().all(|y| y == x || !self.leq(x, y))),
        )
    }

    pub fn is_antichain(&self, set: &PointSet) -> bool {
        set.iter().all(|x| set.iter().all(|y| x == y || !self.leq(x, y)))
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self.up[x].iter().any(|z| z != x && z != y && self.leq(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Sub-poset on the given points with the induced order.
    pub fn restrict(&self, set: &PointSet) -> Result<FinitePoset> {
        self.check_set(set)?;
        let kept: Vec<usize> = set.to_vec();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        FinitePoset::from_order(labels, |a, b| self.leq(kept[a], kept[b]))
    }

    /// Parses the text format: one `a < b` cover pair per line, `point a`
    /// for isolated points, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut points = Vec::new();
        let mut pairs = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            if let Some(rest) = line.strip_prefix("point ") {
                let name = rest.trim();
                if name.is_empty() || name.contains(char::is_whitespace) || name.contains('<') {
                    return Err(err("expected `point <label>`"));
                }
                points.push(name.to_string());
            } else if let Some((a, b)) = line.split_once('<') {
                let (a, b) = (a.trim(), b.trim());
                let valid = |s: &str| !s.is_empty() && !s.contains(char::is_whitespace) && !s.contains('<');
                if !valid(a) || !valid(b) {
                    return Err(err("expected `<label> < <label>`"));
                }
                pairs.push((a.to_string(), b.to_string()));
            } else {
                return Err(err("expected `a < b` or `point a`"));
            }
        }
        Self::from_relation(points, pairs)
    }

    /// Text format of [`FinitePoset::parse`], listing cover pairs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let covers = self.covers();
        for x in 0..self.len() {
            if !covers.iter().any(|&(a, b)| a == x || b == x) {
                let _ = writeln!(out, "point {}", self.labels[x]);
            }
        }
        for (a, b) in covers {
            let _ = writeln!(out, "{} < {}", self.labels[a], self.labels[b]);
        }
        out
    }

    /// DOT graph of the Hasse diagram, smaller elements at the bottom.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(name));
        for l in &self.labels {
            let _ = writeln!(out, "  \"{}\";", escape(l));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\";",
                escape(&self.labels[a]),
                escape(&self.labels[b])
            );
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn transpose(up: &[PointSet]) -> Vec<PointSet> {
    let n = up.len();
    let mut down = vec![PointSet::empty(n); n];
    for (x, ups) in up.iter().enumerate() {
        for y in ups.iter() {
            down[y].insert(x);
        }
    }
    down
}

fn path(succ: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; succ.len()];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &w in &succ[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut out = vec![to];
    let mut v = to;
    while v != from {
        v = prev[v];
        out.push(v);
    }
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> FinitePoset {
        FinitePoset::chain(&["a", "b", "c"])
    }

    #[test]
    fn down_closure_examples() {
        let x = chain3();
        let s = x.point_set(["b"]).unwrap();
        assert_eq!(x.set_labels(&x.down_closure(&s).unwrap()), ["a", "b"]);
        let all = PointSet::full(3);
        assert_eq!(x.down_closure(&all).unwrap(), all);
        let anti = FinitePoset::antichain(&["a", "b", "c"]);
        let s = anti.point_set(["a"]).unwrap();
        assert_eq!(anti.down_closure(&s).unwrap(), s);
    }

    #[test]
    fn down_closure_rejects_foreign_sets() {
        let x = chain3();
        assert!(matches!(
            x.down_closure(&PointSet::empty(5)),
            Err(Error::ForeignPointSet { .. })
        ));
        assert!(matches!(x.point_set(["z"]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn open_sets_of_a_chain() {
        let x = chain3();
        assert!(x.is_open(&x.point_set(["a"]).unwrap()).unwrap());
        assert!(!x.is_open(&x.point_set(["b"]).unwrap()).unwrap());
        assert!(x.is_open(&PointSet::empty(3)).unwrap());
    }

    #[test]
    fn inverse_space_reverses_order() {
        let x = chain3();
        let inv = x.inverse_space();
        assert!(inv.leq(x.index_of("c").unwrap(), x.index_of("a").unwrap()));
        assert_eq!(inv.inverse_space(), x);
        let anti = FinitePoset::antichain(&["a", "b", "c"]);
        assert_eq!(anti.inverse_space(), anti);
    }

    #[test]
    fn cycle_is_reported() {
        let err = FinitePoset::from_relation(["a"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap_err();
        match err {
            Error::OrderCycle(c) => {
                assert_eq!(c.first(), c.last());
                assert!(c.len() >= 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn transitive_closure_is_taken() {
        let x = FinitePoset::from_relation(["d"], [("a", "b"), ("b", "c")]).unwrap();
        assert!(x.leq(0, 2));
        assert_eq!(x.len(), 4);
        assert_eq!(x.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn down_sets_of_small_posets() {
        assert_eq!(chain3().down_sets(20).unwrap().len(), 4);
        let anti = FinitePoset::antichain(&["a", "b", "c"]);
        assert_eq!(anti.down_sets(20).unwrap().len(), 8);
        assert!(matches!(anti.down_sets(2), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn from_order_validates() {
        let labels = vec!["x".to_string(), "y".to_string()];
        assert!(FinitePoset::from_order(labels.clone(), |_, _| true).is_err());
        assert!(FinitePoset::from_order(labels, |a, b| a == b).is_ok());
    }

    #[test]
    fn text_and_dot_round_trip() {
        let text = "# diamond\nb < d\na < b\na < c\nc < d\npoint e\n";
        let x = FinitePoset::parse(text).unwrap();
        assert_eq!(x.len(), 5);
        assert_eq!(FinitePoset::parse(&x.to_text()).unwrap(), x);
        let dot = x.to_dot("diamond");
        assert!(dot.contains("\"a\" -> \"b\";"));
        assert!(dot.contains("\"e\";"));
        assert!(matches!(FinitePoset::parse("a b"), Err(Error::Parse { line: 1, .. })));
    }
}
