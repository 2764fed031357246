use crate::group::GroupHandle;

use super::sharp::sharp_order;
use super::spec::parse_group_spec;
use super::standard::{standard_order, StandardKind};
use super::{BuildOptions, SpecError};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Base {
    order: u128,
    name: String,
}

fn bases(limit: u128) -> Vec<Base> {
    let mut out = Vec::new();
    let mut push = |order: Option<u128>, name: String| {
        if let Some(order) = order.filter(|&o| o > 1 && o < limit) {
            out.push(Base { order, name });
        }
    };
    let top = limit.min(1 << 20) as usize;
    for m in 2..top {
        push(standard_order(StandardKind::Cyclic, m), format!("C{m}"));
    }
    for m in 3..top / 2 + 1 {
        push(standard_order(StandardKind::Dihedral, m), format!("Dih{m}"));
    }
    for k in 3..=12 {
        push(standard_order(StandardKind::Symmetric, k), format!("S{k}"));
    }
    for k in 4..=12 {
        push(standard_order(StandardKind::Alternating, k), format!("A{k}"));
    }
    for k in 3..=10 {
        push(sharp_order(k), format!("Sharp{k}"));
    }
    out.sort();
    out
}

/// Names of the built-in constructible groups with order below `limit`: the trivial
/// group, cyclic, dihedral, symmetric, alternating and sharp groups, products of two
/// of these, and products of three cyclic groups. Sorted by order, then name.
pub fn builtin_catalog_names(limit: u128) -> Vec<(u128, String)> {
    let mut names: Vec<(u128, String)> = Vec::new();
    if limit > 1 {
        names.push((1, "C1".into()));
    }
    let bases = bases(limit);
    for b in &bases {
        names.push((b.order, b.name.clone()));
    }
    for (i, a) in bases.iter().enumerate() {
        for b in &bases[i..] {
            let order = a.order * b.order;
            if order < limit {
                names.push((order, format!("{}x{}", a.name, b.name)));
            }
        }
    }
    let cyclic: Vec<&Base> = bases.iter().filter(|b| b.name.starts_with('C')).collect();
    for (i, a) in cyclic.iter().enumerate() {
        for (j, b) in cyclic.iter().enumerate().skip(i) {
            for c in &cyclic[j..] {
                let order = a.order * b.order * c.order;
                if order < limit {
                    names.push((order, format!("{}x{}x{}", a.name, b.name, c.name)));
                }
            }
        }
    }
    names.sort();
    names.dedup();
    names
}

pub fn builtin_catalog(limit: u128, opts: &BuildOptions) -> Result<Vec<GroupHandle>, SpecError> {
    builtin_catalog_names(limit)
        .into_iter()
        .map(|(_, name)| parse_group_spec(&name, opts))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_below_four() {
        let names: Vec<String> = builtin_catalog_names(4).into_iter().map(|(_, n)| n).collect();
        assert_eq!(names, ["C1", "C2", "C3"]);
    }

    #[test]
    fn catalog_orders_match_names() {
        let opts = BuildOptions::default();
        let catalog = builtin_catalog(24, &opts).unwrap();
        let names = builtin_catalog_names(24);
        assert_eq!(catalog.len(), names.len());
        for (g, (order, name)) in catalog.iter().zip(&names) {
            assert_eq!(g.order() as u128, *order, "{name}");
            assert_eq!(g.name(), name);
            assert!(g.order() < 24);
        }
        for expected in ["A4", "Dih11", "C2xC2xC2", "C3xS3", "C23"] {
            assert!(names.iter().any(|(_, n)| n == expected), "{expected}");
        }
    }
}
