//! Cycle notation for permutations and signed permutations, and the
//! `[c1,..,cn; one-line]` form for colored permutations.

use std::fmt;

use super::element::{ColoredPerm, DihedralElem, GroupElement, Perm, SignedPerm};
use crate::error::{Error, Result};

fn parse_err(input: &str, reason: impl Into<String>) -> Error {
    Error::Parse { input: input.to_string(), reason: reason.into() }
}

/// Splits `"(1 2)((3 -4))"` into `[(false, [1,2]), (true, [3,-4])]`; the flag
/// marks a doubled-parenthesis cycle.
fn split_cycles(s: &str) -> Result<Vec<(bool, Vec<i64>)>> {
    let t = s.trim();
    if t.is_empty() || t == "e" || t == "()" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let (doubled, open, close) = if rest.starts_with("((") {
            (true, 2, "))")
        } else if rest.starts_with('(') {
            (false, 1, ")")
        } else {
            return Err(parse_err(s, "expected '('"));
        };
        let body_end = rest[open..].find(close).ok_or_else(|| parse_err(s, "unbalanced parentheses"))?;
        let body = &rest[open..open + body_end];
        let letters = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<i64>().map_err(|_| parse_err(s, format!("bad letter {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        out.push((doubled, letters));
        rest = rest[open + body_end + close.len()..].trim_start();
    }
    Ok(out)
}

impl Perm {
    /// Parses cycle notation over the letters `1..n`.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let mut images: Vec<Option<u8>> = vec![None; n];
        for (doubled, cyc) in split_cycles(s)? {
            if doubled {
                return Err(parse_err(s, "doubled cycles are only meaningful for signed permutations"));
            }
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a < 1 || a as usize > n || b < 1 || b as usize > n {
                    return Err(parse_err(s, format!("letters must lie in 1..{n}")));
                }
                let slot = &mut images[a as usize - 1];
                if slot.is_some() {
                    return Err(parse_err(s, format!("letter {a} repeated")));
                }
                *slot = Some(b as u8 - 1);
            }
        }
        let images = images.iter().enumerate().map(|(i, x)| x.unwrap_or(i as u8)).collect();
        Perm::from_images(images).ok_or_else(|| parse_err(s, "not a bijection"))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let letters: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", letters.join(" "))?;
        }
        Ok(())
    }
}

impl SignedPerm {
    /// Parses signed cycle notation. Each cycle `(a b ..)` also implies its
    /// mirror `(-a -b ..)`; `((a b))` is the explicit shorthand for
    /// `(a b)(-a -b)`.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let mut images: Vec<Option<i8>> = vec![None; n];
        let mut set = |x: i64, y: i64| -> Result<()> {
            let (x, y) = if x < 0 { (-x, -y) } else { (x, y) };
            let slot = &mut images[x as usize - 1];
            match slot {
                Some(old) if *old as i64 != y => Err(parse_err(s, format!("letter {x} mapped twice"))),
                _ => {
                    *slot = Some(y as i8);
                    Ok(())
                }
            }
        };
        for (_, cyc) in split_cycles(s)? {
            for &a in &cyc {
                if a == 0 || a.unsigned_abs() as usize > n {
                    return Err(parse_err(s, format!("letters must lie in ±1..±{n}")));
                }
            }
            for (k, &a) in cyc.iter().enumerate() {
                set(a, cyc[(k + 1) % cyc.len()])?;
            }
        }
        let images = images.iter().enumerate().map(|(i, x)| x.unwrap_or(i as i8 + 1)).collect();
        SignedPerm::from_images(images).ok_or_else(|| parse_err(s, "not a signed permutation"))
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (cyc, negs) in self.abs_cycles() {
            if negs % 2 == 0 && cyc.len() == 1 {
                continue;
            }
            let start = cyc[0] as i8;
            let mut letters = vec![start.to_string()];
            let mut x = self.apply(start);
            while x != start {
                letters.push(x.to_string());
                x = self.apply(x);
            }
            if negs % 2 == 0 {
                write!(f, "(({}))", letters.join(" "))?;
            } else {
                write!(f, "({})", letters.join(" "))?;
            }
            any = true;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl ColoredPerm {
    /// Parses `[c1,..,cn; p1 .. pn]` with a 1-based one-line permutation.
    pub fn parse(s: &str, r: usize) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| parse_err(s, "expected [colors; one-line permutation]"))?;
        let (cs, ps) = inner.split_once(';').ok_or_else(|| parse_err(s, "missing ';'"))?;
        let nums = |x: &str| -> Result<Vec<i64>> {
            x.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|y| !y.is_empty())
                .map(|y| y.parse::<i64>().map_err(|_| parse_err(s, format!("bad number {y:?}"))))
                .collect()
        };
        let colors = nums(cs)?;
        let perm = nums(ps)?;
        if colors.len() != perm.len() {
            return Err(parse_err(s, "color and permutation lengths differ"));
        }
        let n = perm.len() as i64;
        if perm.iter().any(|&p| p < 1 || p > n) {
            return Err(parse_err(s, "one-line permutation out of range"));
        }
        let perm = Perm::from_images(perm.iter().map(|&p| (p - 1) as u8).collect())
            .ok_or_else(|| parse_err(s, "not a bijection"))?;
        let colors = colors.iter().map(|&c| c.rem_euclid(r as i64) as u8).collect();
        ColoredPerm::new(r, colors, perm).ok_or_else(|| parse_err(s, "invalid colored permutation"))
    }
}

impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.colors().iter().map(|c| c.to_string()).collect();
        let ps: Vec<String> = self.perm().images().iter().map(|p| (p + 1).to_string()).collect();
        write!(f, "[{}; {}]", cs.join(","), ps.join(" "))
    }
}

impl DihedralElem {
    /// Parses `e`, `r`, `r^k`, `s`, `sr^k` (whitespace ignored).
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (refl, rest) = match t.strip_prefix('s') {
            Some(rest) => (true, rest),
            None => (false, t.as_str()),
        };
        let k = match rest {
            "" | "e" => 0,
            "r" => 1,
            _ => rest
                .strip_prefix("r^")
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| parse_err(s, "expected e, r^k or sr^k"))?,
        };
        Ok(if refl { Self::reflection(m, k) } else { Self::rotation(m, k) })
    }
}

impl fmt::Display for DihedralElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflection, self.index) {
            (false, 0) => write!(f, "e"),
            (false, k) => write!(f, "r^{k}"),
            (true, k) => write!(f, "sr^{k}"),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Perm(p) => p.fmt(f),
            Self::Signed(p) => p.fmt(f),
            Self::Colored(p) => p.fmt(f),
            Self::Dihedral(p) => p.fmt(f),
        }
    }
}
