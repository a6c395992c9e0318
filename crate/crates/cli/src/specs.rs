//! Generator-list syntax used on the command line.
//!
//! A monoid is written as a comma-separated list of generators, where each
//! entry is either a single number or an inclusive range `a..b`:
//! `3,4,5`, `3..7`, `2,5..9,20`. A semicolon-separated sequence of such
//! lists names several monoids at once.

/// Expanded generator list, before canonicalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorList(pub Vec<u64>);

impl GeneratorList {
    /// Canonical echo of the expanded list: `"3,4,5,6,7"`.
    pub fn echo(&self) -> String {
        self.0.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Several generator lists, as given to `intersect`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidList(pub Vec<GeneratorList>);

impl MonoidList {
    pub fn echo(&self) -> String {
        self.0.iter().map(GeneratorList::echo).collect::<Vec<_>>().join(";")
    }
}

/// Expanded entries may not exceed this many generators; canonicalization
/// would cope, but a wider list on the command line is surely a typo.
const MAX_EXPANDED: usize = 10_000;

pub fn parse_generator_list(s: &str) -> Result<GeneratorList, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(format!("empty entry in generator list {s:?}"));
        }
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u64 = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in {part:?}"))?;
            let hi: u64 = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in {part:?}"))?;
            if lo > hi {
                return Err(format!("empty range {part:?}"));
            }
            if (hi - lo) as usize >= MAX_EXPANDED {
                return Err(format!("range {part:?} expands to too many generators"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| format!("bad generator {part:?}"))?);
        }
        if out.len() > MAX_EXPANDED {
            return Err(format!("generator list {s:?} is too long"));
        }
    }
    Ok(GeneratorList(out))
}

pub fn parse_monoid_list(s: &str) -> Result<MonoidList, String> {
    let lists = s
        .split(';')
        .map(parse_generator_list)
        .collect::<Result<Vec<_>, _>>()?;
    if lists.is_empty() {
        return Err("no monoids given".to_string());
    }
    Ok(MonoidList(lists))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_lists_and_ranges_expand() {
        assert_eq!(parse_generator_list("3,4,5").unwrap().0, vec![3, 4, 5]);
        assert_eq!(parse_generator_list("3..7").unwrap().0, vec![3, 4, 5, 6, 7]);
        assert_eq!(parse_generator_list("2,5..9,20").unwrap().0, vec![2, 5, 6, 7, 8, 9, 20]);
        assert_eq!(parse_generator_list(" 2 , 3 ").unwrap().0, vec![2, 3]);
        assert_eq!(parse_generator_list("7..7").unwrap().0, vec![7]);
    }

    #[test]
    fn malformed_lists_are_rejected() {
        assert!(parse_generator_list("").is_err());
        assert!(parse_generator_list("2,,3").is_err());
        assert!(parse_generator_list("5..3").is_err());
        assert!(parse_generator_list("x").is_err());
        assert!(parse_generator_list("2..y").is_err());
        assert!(parse_generator_list("1..20001").is_err());
    }

    #[test]
    fn monoid_lists_split_on_semicolons() {
        let ml = parse_monoid_list("3,4,5;5,7,9").unwrap();
        assert_eq!(ml.0.len(), 2);
        assert_eq!(ml.0[1].0, vec![5, 7, 9]);
        assert_eq!(ml.echo(), "3,4,5;5,7,9");
        assert!(parse_monoid_list("3,4,5;;2,3").is_err());
    }

    #[test]
    fn echoes_expand_ranges() {
        assert_eq!(parse_generator_list("3..7").unwrap().echo(), "3,4,5,6,7");
    }
}
