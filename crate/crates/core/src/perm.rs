//! Permutations on a fixed number of points, used to build concrete groups.
//!
//! Points are 0-based internally; cycle notation is rendered and parsed
//! 1-based, e.g. `(1 2 3)(4 5)`. The group product is "apply left, then
//! right", which matches exponential right-action notation throughout the
//! crate: `i^(gh) = (i^g)^h`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(points: usize) -> Perm {
        Perm {
            images: (0..points as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation of {} points: {:?}",
                    n, images
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)` or `e`.
    pub fn parse(points: usize, text: &str) -> Result<Perm> {
        let text = text.trim();
        let mut images: Vec<u8> = (0..points as u8).collect();
        if text.is_empty() || text == "e" || text == "()" {
            return Ok(Perm { images });
        }
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::InvalidInput(format!("bad cycle notation: {text}")))?;
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| Error::InvalidInput(format!("unbalanced cycle: {text}")))?
                + open;
            let cycle: Vec<usize> = rest[open + 1..close]
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad point `{tok}` in {text}")))
                })
                .collect::<Result<_>>()?;
            for &pt in &cycle {
                if pt == 0 || pt > points {
                    return Err(Error::InvalidInput(format!(
                        "point {pt} out of range 1..={points}"
                    )));
                }
            }
            for i in 0..cycle.len() {
                let from = cycle[i] - 1;
                let to = cycle[(i + 1) % cycle.len()] - 1;
                images[from] = to as u8;
            }
            rest = &rest[close + 1..];
        }
        Perm::from_images(images)
    }

    pub fn points(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.points(), other.points());
        Perm {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (from, &to) in self.images.iter().enumerate() {
            images[to as usize] = from as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u8 == j)
    }

    /// Renders 1-based cycle notation; the identity renders as `e`.
    pub fn cycle_notation(&self) -> String {
        let n = self.points();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            out.push('(');
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&(pt + 1).to_string());
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push('e');
        }
        out
    }
}

/// Closure of a generating set: all products of generators and inverses.
/// Result is sorted, so element order is reproducible.
pub fn generate(points: usize, generators: &[Perm]) -> Vec<Perm> {
    let mut elements: Vec<Perm> = vec![Perm::identity(points)];
    let mut frontier = elements.clone();
    while let Some(g) = frontier.pop() {
        for gen in generators {
            for candidate in [g.then(gen), g.then(&gen.inverse())] {
                if !elements.contains(&candidate) {
                    elements.push(candidate.clone());
                    frontier.push(candidate);
                }
            }
        }
    }
    elements.sort();
    elements
}

/// All permutations of `points` points, sorted.
pub fn symmetric_group(points: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..points as u8).collect();
    permute_rec(&mut images, 0, &mut out);
    out.sort();
    out
}

fn permute_rec(images: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
    if k == images.len() {
        out.push(Perm {
            images: images.clone(),
        });
        return;
    }
    for i in k..images.len() {
        images.swap(k, i);
        permute_rec(images, k + 1, out);
        images.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        let p = Perm::parse(4, "(1 2 3 4)").unwrap();
        assert_eq!(p.cycle_notation(), "(1 2 3 4)");
        let q = Perm::parse(4, "(1 3)").unwrap();
        assert_eq!(q.cycle_notation(), "(1 3)");
        assert_eq!(Perm::identity(4).cycle_notation(), "e");
        let two = Perm::parse(5, "(1 2)(3 4)").unwrap();
        assert_eq!(two.cycle_notation(), "(1 2)(3 4)");
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse(3, "(1 2)").unwrap();
        let b = Perm::parse(3, "(2 3)").unwrap();
        // apply (1 2) then (2 3): 1 -> 2 -> 3, 2 -> 1, 3 -> 2
        let c = a.then(&b);
        assert_eq!(c.cycle_notation(), "(1 3 2)");
    }

    #[test]
    fn inverse_cancels() {
        let p = Perm::parse(5, "(1 4 2)(3 5)").unwrap();
        assert!(p.then(&p.inverse()).is_identity());
    }

    #[test]
    fn generated_dihedral_has_order_eight() {
        let r = Perm::parse(4, "(1 2 3 4)").unwrap();
        let s = Perm::parse(4, "(1 3)").unwrap();
        assert_eq!(generate(4, &[r, s]).len(), 8);
    }

    #[test]
    fn symmetric_group_sizes() {
        assert_eq!(symmetric_group(3).len(), 6);
        assert_eq!(symmetric_group(4).len(), 24);
    }
}
