//! Flag-value parsing: set literals, group and sequence syntax, cap
//! resolution against the environment.

use std::collections::BTreeSet;
use std::env;

use factorlen_core::fp::Caps;
use factorlen_core::zerosum::{FiniteAbelianGroup, GroupElement, ZsSequence};

/// Comma-separated integers, each entry either a value or an inclusive
/// `lo..hi` range: `"2,3,4"`, `"3..7"`, `"1,4..6,9"`.
pub fn set_literal(text: &str) -> Result<BTreeSet<u64>, String> {
    let mut out = BTreeSet::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(format!("empty entry in set literal {text:?}"));
        }
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u64 = parse_int(lo)?;
            let hi: u64 = parse_int(hi)?;
            if lo > hi {
                return Err(format!("descending range {part:?}"));
            }
            out.extend(lo..=hi);
        } else {
            out.insert(parse_int(part)?);
        }
    }
    Ok(out)
}

fn parse_int(text: &str) -> Result<u64, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("expected an integer, found {text:?}"))
}

/// Cyclic orders joined by `x`: `"3"` is C3, `"2x2"` the Klein group.
pub fn group(text: &str) -> Result<FiniteAbelianGroup, String> {
    let orders: Vec<u64> = text
        .split('x')
        .map(parse_int)
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad group {text:?}: {e}"))?;
    FiniteAbelianGroup::new(orders).map_err(|e| format!("bad group {text:?}: {e}"))
}

/// One element as colon-separated residues: `"2"`, `"1:0"`.
fn element(group: &FiniteAbelianGroup, token: &str) -> Result<GroupElement, String> {
    let coords: Vec<u64> = token
        .split(':')
        .map(parse_int)
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad element {token:?}: {e}"))?;
    group
        .element(coords)
        .map_err(|e| format!("bad element {token:?}: {e}"))
}

/// Comma-separated elements with optional `^multiplicity`; empty input is
/// the empty sequence.
pub fn sequence(group: &FiniteAbelianGroup, text: &str) -> Result<ZsSequence, String> {
    let mut elems = Vec::new();
    if text.trim().is_empty() {
        return Ok(ZsSequence::empty());
    }
    for token in text.split(',') {
        let token = token.trim();
        let (elem, count) = match token.split_once('^') {
            Some((e, c)) => (e, parse_int(c).map_err(|e| format!("bad token {token:?}: {e}"))?),
            None => (token, 1),
        };
        if count == 0 {
            return Err(format!("zero multiplicity in {token:?}"));
        }
        let elem = element(group, elem)?;
        elems.extend(std::iter::repeat_n(elem, count as usize));
    }
    Ok(ZsSequence::new(elems))
}

/// Support list for restricted searches; `None` means all of the group.
pub fn support(
    group: &FiniteAbelianGroup,
    text: Option<&str>,
) -> Result<Vec<GroupElement>, String> {
    match text {
        None => Ok(group.elements()),
        Some(text) => {
            let mut out = BTreeSet::new();
            for token in text.split(',') {
                out.insert(element(group, token.trim())?);
            }
            if out.is_empty() {
                return Err("empty support list".to_string());
            }
            Ok(out.into_iter().collect())
        }
    }
}

/// Flag > environment > built-in default, per cap.
pub fn resolve_caps(max_len: Option<usize>, max_iter: Option<usize>) -> Result<Caps, String> {
    let defaults = Caps::default();
    let from_env = |name: &str| -> Result<Option<usize>, String> {
        match env::var(name) {
            Ok(text) => text
                .parse()
                .map(Some)
                .map_err(|_| format!("{name} is not an integer: {text:?}")),
            Err(env::VarError::NotPresent) => Ok(None),
            Err(e) => Err(format!("{name}: {e}")),
        }
    };
    Ok(Caps {
        max_len: match max_len {
            Some(v) => v,
            None => from_env("FACTORLEN_MAX_LEN")?.unwrap_or(defaults.max_len),
        },
        max_iter: match max_iter {
            Some(v) => v,
            None => from_env("FACTORLEN_MAX_ITER")?.unwrap_or(defaults.max_iter),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_mix_values_and_ranges() {
        assert_eq!(
            set_literal("1,4..6,9").unwrap(),
            BTreeSet::from([1, 4, 5, 6, 9])
        );
        assert_eq!(set_literal("3..7").unwrap(), BTreeSet::from([3, 4, 5, 6, 7]));
        assert!(set_literal("7..3").is_err());
        assert!(set_literal("2,,3").is_err());
    }

    #[test]
    fn sequences_expand_multiplicities() {
        let g = group("3").unwrap();
        let seq = sequence(&g, "1^3,2^3").unwrap();
        assert_eq!(seq.len(), 6);
        assert_eq!(seq.to_string(), "1^3,2^3");
        assert!(sequence(&g, "1^0").is_err());
        assert!(sequence(&g, "5").is_err());
    }

    #[test]
    fn klein_elements_use_colons() {
        let g = group("2x2").unwrap();
        let seq = sequence(&g, "0:1^2,1:0").unwrap();
        assert_eq!(seq.len(), 3);
        assert!(sequence(&g, "3").is_err());
    }
}
