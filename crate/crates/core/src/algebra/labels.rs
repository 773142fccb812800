//! Structured basis-label formats shared by the constructions.
//!
//! * `E:i,j` matrix units (1-based)
//! * `g:(v1,...,vk)` lattice points, `g:name` finite group elements
//! * `w:...` words; generators are concatenated when all names are one
//!   character, otherwise joined with `.`; `w:` alone is the empty word
//! * `a|b` pairs in tensor and crossed products

pub fn matrix_unit(i: usize, j: usize) -> String {
    format!("E:{i},{j}")
}

pub fn parse_matrix_unit(label: &str) -> Option<(usize, usize)> {
    let rest = label.strip_prefix("E:")?;
    let (a, b) = rest.split_once(',')?;
    Some((a.parse().ok()?, b.parse().ok()?))
}

pub fn lattice(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("g:({})", parts.join(","))
}

pub fn parse_lattice(label: &str, rank: usize) -> Option<Vec<i64>> {
    let inner = label.strip_prefix("g:(")?.strip_suffix(')')?;
    let v: Vec<i64> = inner.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?;
    (v.len() == rank).then_some(v)
}

pub fn group_element(name: &str) -> String {
    format!("g:{name}")
}

fn single_char(gens: &[String]) -> bool {
    gens.iter().all(|g| g.chars().count() == 1)
}

pub fn word(letters: &[usize], gens: &[String]) -> String {
    let names: Vec<&str> = letters.iter().map(|&i| gens[i].as_str()).collect();
    if single_char(gens) {
        format!("w:{}", names.concat())
    } else {
        format!("w:{}", names.join("."))
    }
}

pub fn parse_word(label: &str, gens: &[String]) -> Option<Vec<usize>> {
    let body = label.strip_prefix("w:")?;
    if body.is_empty() {
        return Some(Vec::new());
    }
    let find = |name: &str| gens.iter().position(|g| g == name);
    if single_char(gens) {
        body.chars().map(|c| find(&c.to_string())).collect()
    } else {
        body.split('.').map(find).collect()
    }
}

pub fn pair(a: &str, b: &str) -> String {
    format!("{a}|{b}")
}

/// Splits at the last `|`, so nested pairs keep their left part intact.
pub fn split_pair(label: &str) -> Option<(&str, &str)> {
    label.rsplit_once('|')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        assert_eq!(parse_matrix_unit(&matrix_unit(1, 2)), Some((1, 2)));
        assert_eq!(parse_lattice(&lattice(&[2, -1]), 2), Some(vec![2, -1]));
        assert_eq!(parse_lattice("g:(1)", 2), None);
        let gens: Vec<String> = ["U", "V"].iter().map(|s| s.to_string()).collect();
        assert_eq!(word(&[0, 1, 1, 0], &gens), "w:UVVU");
        assert_eq!(parse_word("w:UVVU", &gens), Some(vec![0, 1, 1, 0]));
        let long: Vec<String> = ["x1", "x2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(word(&[1, 0], &long), "w:x2.x1");
        assert_eq!(parse_word("w:x2.x1", &long), Some(vec![1, 0]));
        assert_eq!(parse_word("w:", &long), Some(vec![]));
    }
}
