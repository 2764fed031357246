use crate::group::GroupHandle;

use super::product::make_direct_product;
use super::registry::{ArgumentKind, FamilyRegistry};
use super::{BuildOptions, SpecError};

/// A parsed factor of a group spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFactor {
    pub prefix: String,
    pub argument: String,
    /// Byte offset of the factor in the (whitespace-free) spec.
    pub position: usize,
}

/// Textual group name: `S<n> | A<n> | C<m> | Dih<m> | Sharp<n> | <spec>x<spec> | file:<path> | perm:<path>`.
///
/// Products bind left to right. A `file:`/`perm:` path runs to the end of the
/// spec, so a file factor can only appear last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub text: String,
    pub factors: Vec<SpecFactor>,
}

impl GroupSpec {
    pub fn parse(text: &str, registry: &FamilyRegistry) -> Result<GroupSpec, SpecError> {
        let compact: String = {
            // whitespace is insignificant outside file paths
            let trimmed = text.trim();
            match ["file:", "perm:"].iter().filter_map(|p| trimmed.find(p)).min() {
                Some(cut) => {
                    let (head, tail) = trimmed.split_at(cut);
                    head.chars().filter(|c| !c.is_whitespace()).collect::<String>() + tail
                }
                None => trimmed.chars().filter(|c| !c.is_whitespace()).collect(),
            }
        };
        if compact.is_empty() {
            return Err(SpecError::Parse {
                position: 0,
                message: "empty group spec".into(),
            });
        }
        let mut factors = Vec::new();
        let mut pos = 0;
        loop {
            let rest = &compact[pos..];
            let family = registry.longest_match(rest).ok_or_else(|| SpecError::UnknownKind {
                position: pos,
                text: rest.chars().take_while(|c| c.is_alphabetic()).collect(),
            })?;
            let prefix = family.prefix();
            let after = &rest[prefix.len()..];
            let (argument, consumed) = match family.argument() {
                ArgumentKind::Path => {
                    if after.trim().is_empty() {
                        return Err(SpecError::Parse {
                            position: pos + prefix.len(),
                            message: format!("{prefix} needs a path"),
                        });
                    }
                    (after.trim().to_string(), after.len())
                }
                ArgumentKind::Integer => {
                    let digits: String = after.chars().take_while(|c| c.is_ascii_digit()).collect();
                    if digits.is_empty() {
                        return Err(SpecError::Parse {
                            position: pos + prefix.len(),
                            message: format!("{prefix} needs a size"),
                        });
                    }
                    let n = digits.len();
                    (digits, n)
                }
            };
            factors.push(SpecFactor {
                prefix: prefix.to_string(),
                argument,
                position: pos,
            });
            pos += prefix.len() + consumed;
            if pos == compact.len() {
                break;
            }
            if compact[pos..].starts_with('x') {
                pos += 1;
                if pos == compact.len() {
                    return Err(SpecError::Parse {
                        position: pos,
                        message: "dangling product".into(),
                    });
                }
            } else {
                return Err(SpecError::Parse {
                    position: pos,
                    message: format!("expected 'x' or end, found '{}'", &compact[pos..]),
                });
            }
        }
        Ok(GroupSpec { text: compact, factors })
    }

    pub fn build(&self, registry: &FamilyRegistry, opts: &BuildOptions) -> Result<GroupHandle, SpecError> {
        let mut acc: Option<GroupHandle> = None;
        for factor in &self.factors {
            let family = registry
                .longest_match(&factor.prefix)
                .filter(|f| f.prefix() == factor.prefix)
                .ok_or_else(|| SpecError::UnknownKind {
                    position: factor.position,
                    text: factor.prefix.clone(),
                })?;
            let group = family.build(&factor.argument, opts)?;
            acc = Some(match acc {
                None => group,
                Some(left) => make_direct_product(&left, &group, opts)?,
            });
        }
        Ok(acc.expect("at least one factor").with_name(self.text.clone()))
    }
}

/// Parses and builds a group spec with the built-in families.
pub fn parse_group_spec(text: &str, opts: &BuildOptions) -> Result<GroupHandle, SpecError> {
    let registry = FamilyRegistry::builtin();
    GroupSpec::parse(text, &registry)?.build(&registry, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{BackingKind, Elem};

    fn build(text: &str) -> GroupHandle {
        parse_group_spec(text, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn simple_specs() {
        assert_eq!(build("S5").order(), 120);
        assert_eq!(build("Sharp4").order(), 192);
        assert_eq!(build("Sharp4").backing(), BackingKind::Semidirect);
        assert_eq!(build("Dih4").order(), 8);
        assert_eq!(build(" A 4 ").order(), 12);
    }

    #[test]
    fn products_bind_left() {
        let g = build("C2xC2xC2");
        assert_eq!(g.order(), 8);
        assert!(g.elements().all(|e| g.mul(e, e) == g.identity()));
        assert_eq!(g.name(), "C2xC2xC2");
        assert_eq!(build("S3xSharp3").order(), 144);
    }

    #[test]
    fn longest_prefix_wins() {
        let registry = FamilyRegistry::builtin();
        let spec = GroupSpec::parse("Sharp3xS3", &registry).unwrap();
        let prefixes: Vec<_> = spec.factors.iter().map(|f| f.prefix.as_str()).collect();
        assert_eq!(prefixes, ["Sharp", "S"]);
    }

    #[test]
    fn errors_report_positions() {
        let registry = FamilyRegistry::builtin();
        match GroupSpec::parse("S3xQ8", &registry) {
            Err(SpecError::UnknownKind { position: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match GroupSpec::parse("S3x", &registry) {
            Err(SpecError::Parse { position: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match GroupSpec::parse("S", &registry) {
            Err(SpecError::Parse { position: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(GroupSpec::parse("S3y", &registry).is_err());
        assert!(GroupSpec::parse("", &registry).is_err());
    }

    #[test]
    fn file_factor_reads_to_end() {
        let dir = std::env::temp_dir().join(format!("tssforge-spec-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("x c2.cayley");
        std::fs::write(&path, "cayley 2\n0 1\n1 0\n").unwrap();
        let g = build(&format!("S3xfile:{}", path.display()));
        assert_eq!(g.order(), 12);
        let t = build(&format!("file:{}", path.display()));
        assert_eq!(t.backing(), BackingKind::Table);
        assert_eq!(t.format_element(Elem::from_index(1)), "#1");
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
