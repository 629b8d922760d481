use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use super::{AlgebraError, BoundQuiverAlgebra, Quiver};

/// An arrow or a formal inverse. Ordered by arrow index, direct before inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn inverse(arrow: usize) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn flip(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.target
        } else {
            a.source
        }
    }

    pub fn target(self, q: &Quiver) -> usize {
        let a = q.arrow(self.arrow);
        if self.inverse {
            a.source
        } else {
            a.target
        }
    }

    pub fn display(self, q: &Quiver) -> String {
        let name = &q.arrow(self.arrow).name;
        if self.inverse {
            format!("{name}⁻¹")
        } else {
            name.clone()
        }
    }
}

/// A walk in the quiver. An empty letter list is the trivial walk at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StringWalk {
    pub start: usize,
    pub letters: Vec<Letter>,
}

impl StringWalk {
    pub fn trivial(v: usize) -> Self {
        StringWalk {
            start: v,
            letters: Vec::new(),
        }
    }

    pub fn from_letters(q: &Quiver, letters: Vec<Letter>) -> Self {
        assert!(!letters.is_empty(), "use StringWalk::trivial for empty walks");
        StringWalk {
            start: letters[0].source(q),
            letters,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.letters.last().map_or(self.start, |l| l.target(q))
    }

    /// Vertices visited, one per position of the walk (length + 1 entries).
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut vs = vec![self.start];
        vs.extend(self.letters.iter().map(|l| l.target(q)));
        vs
    }

    pub fn inverse(&self, q: &Quiver) -> StringWalk {
        StringWalk {
            start: self.end(q),
            letters: self.letters.iter().rev().map(|l| l.flip()).collect(),
        }
    }

    /// The lexicographically smaller of `w` and `w⁻¹`.
    pub fn canonical(&self, q: &Quiver) -> StringWalk {
        let inv = self.inverse(q);
        if inv.letters < self.letters {
            inv
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self, q: &Quiver) -> bool {
        *self == self.canonical(q)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.letters.is_empty() {
            return format!("e{}", q.vertices()[self.start]);
        }
        self.letters
            .iter()
            .map(|l| l.display(q))
            .collect::<Vec<_>>()
            .join("·")
    }

    /// Order used for catalogs: length, start, letters.
    pub fn cmp_key(&self, other: &StringWalk) -> Ordering {
        (self.letters.len(), &self.letters, self.start).cmp(&(other.letters.len(), &other.letters, other.start))
    }
}

/// A band: a closed walk all of whose powers are strings, not itself a proper
/// power, normalised to the least rotation of `w` or `w⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Band {
    pub letters: Vec<Letter>,
    pub display: String,
}

impl BoundQuiverAlgebra {
    fn window(&self) -> usize {
        let m = self.relations().iter().map(|r| r.arrows.len()).max().unwrap_or(2);
        m.max(2) - 1
    }

    /// Checks only the constraints involving the last letter of `letters`,
    /// assuming the prefix is already a string.
    fn last_letter_ok(&self, letters: &[Letter]) -> bool {
        let q = self.quiver();
        let n = letters.len();
        if n < 2 {
            return true;
        }
        let (prev, last) = (letters[n - 2], letters[n - 1]);
        if prev.target(q) != last.source(q) || prev.flip() == last {
            return false;
        }
        // maximal run of same-direction letters ending at the last one
        let run_start = letters[..n]
            .iter()
            .rposition(|l| l.inverse != last.inverse)
            .map_or(0, |i| i + 1);
        let run = &letters[run_start..];
        let arrows: Vec<usize> = if last.inverse {
            run.iter().rev().map(|l| l.arrow).collect()
        } else {
            run.iter().map(|l| l.arrow).collect()
        };
        // only relations touching the newest letter can be new
        let hits = |r: &[usize]| {
            if last.inverse {
                arrows.starts_with(r)
            } else {
                arrows.ends_with(r)
            }
        };
        !self.relations().iter().any(|r| hits(&r.arrows))
    }

    /// Whether a letter sequence is a string: letters compose, no `αα⁻¹` or
    /// `α⁻¹α`, and no direct or inverse run contains a relation.
    pub fn is_string(&self, letters: &[Letter]) -> bool {
        (1..=letters.len()).all(|n| self.last_letter_ok(&letters[..n]))
    }

    fn all_letters(&self) -> Vec<Letter> {
        (0..self.quiver().arrows().len())
            .flat_map(|a| [Letter::direct(a), Letter::inverse(a)])
            .collect()
    }

    fn extensions(&self, w: &[Letter]) -> Vec<Letter> {
        let letters = self.all_letters();
        letters
            .into_iter()
            .filter(|&l| {
                let mut v = w.to_vec();
                v.push(l);
                self.last_letter_ok(&v)
            })
            .collect()
    }

    /// Strings of exactly `len` letters.
    fn strings_of_length(&self, len: usize) -> Vec<Vec<Letter>> {
        let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::new();
            for w in &layer {
                let cands = if w.is_empty() { self.all_letters() } else { self.extensions(w) };
                for l in cands {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            layer = next;
        }
        layer
    }

    /// Searches for a band. Validity of a walk is decided by windows of `k + 1`
    /// consecutive letters (`k` = longest relation minus one), so bands are
    /// exactly the cycles of the graph on `k`-letter strings.
    pub fn find_band(&self) -> Result<Option<Band>, AlgebraError> {
        let check = self.is_string_algebra();
        if let Some(v) = check.violation {
            return Err(AlgebraError::NotStringAlgebra(v.describe(self.quiver())));
        }
        let k = self.window();
        let nodes = self.strings_of_length(k);
        let index: HashMap<&[Letter], usize> =
            nodes.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let succ: Vec<Vec<(usize, Letter)>> = nodes
            .iter()
            .map(|w| {
                self.extensions(w)
                    .into_iter()
                    .map(|l| {
                        let mut v = w[1..].to_vec();
                        v.push(l);
                        (index[v.as_slice()], l)
                    })
                    .collect()
            })
            .collect();
        // iterative DFS with colours; on a back edge the stack holds the cycle
        let mut colour = vec![0u8; nodes.len()];
        for root in 0..nodes.len() {
            if colour[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize, Option<Letter>)> = vec![(root, 0, None)];
            colour[root] = 1;
            while let Some(&mut (node, ref mut next, _)) = stack.last_mut() {
                if *next < succ[node].len() {
                    let (child, letter) = succ[node][*next];
                    *next += 1;
                    match colour[child] {
                        0 => {
                            colour[child] = 1;
                            stack.push((child, 0, Some(letter)));
                        }
                        1 => {
                            let pos = stack.iter().position(|f| f.0 == child).expect("on stack");
                            let mut cycle: Vec<Letter> =
                                stack[pos + 1..].iter().map(|f| f.2.expect("non-root")).collect();
                            cycle.push(letter);
                            return Ok(Some(self.normalise_band(cycle)));
                        }
                        _ => {}
                    }
                } else {
                    colour[node] = 2;
                    stack.pop();
                }
            }
        }
        Ok(None)
    }

    fn normalise_band(&self, w: Vec<Letter>) -> Band {
        let n = w.len();
        let period = (1..=n)
            .find(|&d| n % d == 0 && (0..n).all(|i| w[i] == w[i % d]))
            .unwrap_or(n);
        let root = w[..period].to_vec();
        let inv: Vec<Letter> = root.iter().rev().map(|l| l.flip()).collect();
        let best = [root, inv]
            .iter()
            .flat_map(|u| (0..u.len()).map(move |r| [&u[r..], &u[..r]].concat()))
            .min()
            .expect("nonempty band");
        let q = self.quiver();
        let mut display = String::new();
        for (i, l) in best.iter().enumerate() {
            if i > 0 {
                display.push('·');
            }
            let _ = write!(display, "{}", l.display(q));
        }
        Band { letters: best, display }
    }

    /// All strings up to inversion, in canonical form, trivial strings first.
    pub fn enumerate_strings(&self) -> Result<Vec<StringWalk>, AlgebraError> {
        if let Some(b) = self.find_band()? {
            return Err(AlgebraError::BandPresent(b.display));
        }
        let q = self.quiver();
        let mut found: BTreeSet<(usize, Vec<Letter>, usize)> = BTreeSet::new();
        let mut layer: Vec<Vec<Letter>> = self.all_letters().into_iter().map(|l| vec![l]).collect();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for w in &layer {
                let s = StringWalk::from_letters(q, w.clone()).canonical(q);
                found.insert((s.len(), s.letters.clone(), s.start));
                for l in self.extensions(w) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            layer = next;
        }
        let mut out: Vec<StringWalk> = (0..q.vertex_count()).map(StringWalk::trivial).collect();
        out.extend(
            found
                .into_iter()
                .map(|(_, letters, start)| StringWalk { start, letters }),
        );
        Ok(out)
    }
}
