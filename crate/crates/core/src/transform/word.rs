use std::fmt;
use std::str::FromStr;

use num_traits::One;

use super::{bell_inverse, bell_transform, binomial_transform, BellParams};
use crate::error::{Error, Result};
use crate::sequence::{format_rational, parse_rational, Rational, Sequence};

/// One operator in an [`OperatorWord`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    Bell(BellParams),
    InverseBell(BellParams),
    /// `(x_1, x_2, ...) -> (x_2, x_3, ...)`
    L,
    /// `(x_1, x_2, ...) -> (1, x_1, x_2, ...)`
    R,
    /// `(x_1, x_2, x_3, ...) -> (x_1, -x_2, x_3, ...)`
    I,
    /// `(x_1, x_2, ...) -> (x_1 + nu, x_2, ...)`
    S(Rational),
    /// `binomial^m` on the input read as `(a_0, a_1, ...)`:
    /// `b_n = sum_k C(n,k) m^{n-k} a_k`.
    Binomial(i64),
}

impl Atom {
    pub fn apply(&self, x: &Sequence) -> Result<Sequence> {
        match self {
            Atom::Bell(p) => Ok(bell_transform(p, x)),
            Atom::InverseBell(p) => Ok(bell_inverse(p, x)),
            Atom::L => {
                if x.len() < 2 {
                    return Err(Error::Length {
                        needed: 2,
                        available: x.len(),
                    });
                }
                Sequence::new(x.terms()[1..].to_vec())
            }
            Atom::R => {
                let mut terms = Vec::with_capacity(x.len() + 1);
                terms.push(Rational::one());
                terms.extend(x.iter().cloned());
                Sequence::new(terms)
            }
            Atom::I => Sequence::new(
                x.iter()
                    .enumerate()
                    .map(|(i, t)| if i % 2 == 1 { -t } else { t.clone() })
                    .collect(),
            ),
            Atom::S(nu) => {
                let mut terms = x.terms().to_vec();
                terms[0] += nu;
                Sequence::new(terms)
            }
            Atom::Binomial(m) => Ok(binomial_transform(*m, x)),
        }
    }

    /// The same atom with Bell parameters replaced by their canonical form.
    pub fn canonical(&self) -> Atom {
        match self {
            Atom::Bell(p) => Atom::Bell(p.canonical()),
            Atom::InverseBell(p) => Atom::InverseBell(p.canonical()),
            other => other.clone(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Bell(p) => write!(f, "{p}"),
            Atom::InverseBell(p) => {
                let s = p.to_string();
                write!(f, "Yinv{}", &s[1..])
            }
            Atom::L => f.write_str("L"),
            Atom::R => f.write_str("R"),
            Atom::I => f.write_str("I"),
            Atom::S(nu) => write!(f, "S({})", format_rational(nu)),
            Atom::Binomial(m) => write!(f, "B({m})"),
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("unrecognised operator `{s}`"));
        let args = |prefix: &str| {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
        };
        match s {
            "L" => return Ok(Atom::L),
            "R" => return Ok(Atom::R),
            "I" => return Ok(Atom::I),
            "id" => return Ok(Atom::Bell(BellParams::identity())),
            _ => {}
        }
        if let Some(inner) = args("Yinv") {
            return Ok(Atom::InverseBell(inner.parse()?));
        }
        if let Some(inner) = args("Y") {
            return Ok(Atom::Bell(inner.parse()?));
        }
        if let Some(inner) = args("S") {
            return Ok(Atom::S(parse_rational(inner)?));
        }
        if let Some(inner) = args("B") {
            let m: i64 = inner.trim().parse().map_err(|_| bad())?;
            return Ok(Atom::Binomial(m));
        }
        Err(bad())
    }
}

/// Composition of atoms, applied right to left: the word `[R, Y, I, L]`
/// maps `x` to `R(Y(I(L(x))))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorWord {
    atoms: Vec<Atom>,
}

impl OperatorWord {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::domain("operator word must contain at least one atom"));
        }
        Ok(OperatorWord { atoms })
    }

    pub fn single(atom: Atom) -> Self {
        OperatorWord { atoms: vec![atom] }
    }

    pub fn bell(p: BellParams) -> Self {
        Self::single(Atom::Bell(p))
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Applies the atoms right to left. The output may be shorter than the
    /// input (each `L` drops a term) or longer (each `R` adds one).
    pub fn apply(&self, x: &Sequence) -> Result<Sequence> {
        let mut cur = x.clone();
        for atom in self.atoms.iter().rev() {
            cur = atom.apply(&cur)?;
        }
        Ok(cur)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn then_after(&self, other: &OperatorWord) -> OperatorWord {
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        OperatorWord { atoms }
    }

    pub fn canonical(&self) -> OperatorWord {
        OperatorWord {
            atoms: self.atoms.iter().map(Atom::canonical).collect(),
        }
    }

    /// True when the word is a single Bell atom, direct or inverse, whose
    /// parameters define the identity transform.
    pub fn is_trivial_identity(&self) -> bool {
        matches!(self.atoms.as_slice(), [Atom::Bell(p) | Atom::InverseBell(p)] if p.is_identity())
    }

    /// Net change in length: `#R - #L`.
    pub fn length_delta(&self) -> i64 {
        self.atoms
            .iter()
            .map(|a| match a {
                Atom::L => -1,
                Atom::R => 1,
                _ => 0,
            })
            .sum()
    }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, atom) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("∘")?;
            }
            write!(f, "{atom}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for OperatorWord {
    type Err = Error;

    /// Atoms separated by `∘` or `.`, e.g. `Y(1,1,-1,1).R`.
    fn from_str(s: &str) -> Result<Self> {
        let atoms = s
            .split(['∘', '.'])
            .filter(|a| !a.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Atom>>>()?;
        OperatorWord::new(atoms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::int;

    #[test]
    fn shift_operators() {
        let x: Sequence = "5,6,7,8".parse().unwrap();
        let lr: OperatorWord = "L.R".parse().unwrap();
        assert_eq!(lr.apply(&x).unwrap(), x);
        let ii: OperatorWord = "I∘I".parse().unwrap();
        assert_eq!(ii.apply(&x).unwrap(), x);
        assert_eq!(Atom::I.apply(&x).unwrap(), Sequence::from_ints([5, -6, 7, -8]));
        assert_eq!(Atom::R.apply(&x).unwrap(), Sequence::from_ints([1, 5, 6, 7, 8]));
        assert_eq!(
            Atom::S(int(2)).apply(&x).unwrap(),
            Sequence::from_ints([7, 6, 7, 8])
        );
        assert!(matches!(
            Atom::L.apply(&Sequence::from_ints([1])),
            Err(Error::Length { .. })
        ));
        // R∘L loses x_1
        let rl: OperatorWord = "R.L".parse().unwrap();
        assert_eq!(rl.apply(&x).unwrap(), Sequence::from_ints([1, 6, 7, 8]));
    }

    #[test]
    fn word_round_trip_text() {
        let w: OperatorWord = "Y(1,1,-1,1)∘R".parse().unwrap();
        assert_eq!(w.to_string(), "Y(1,1,-1,1)∘R");
        let w2: OperatorWord = w.to_string().parse().unwrap();
        assert_eq!(w, w2);
        let w3: OperatorWord = "Yinv(0,1,-1,1).S(-1/2).B(2)".parse().unwrap();
        assert_eq!(w3.to_string(), "Yinv(0,1,-1,1)∘S(-1/2)∘B(2)");
        assert!("".parse::<OperatorWord>().is_err());
        assert!("Q".parse::<OperatorWord>().is_err());
        assert!(OperatorWord::new(vec![]).is_err());
    }

    #[test]
    fn inverse_atom_undoes_bell_atom() {
        let p = BellParams::from_ints(2, -1, 3, 1);
        let w = OperatorWord::new(vec![Atom::InverseBell(p.clone()), Atom::Bell(p)]).unwrap();
        let x: Sequence = "1,2,-3,1/2,4".parse().unwrap();
        assert_eq!(w.apply(&x).unwrap(), x);
    }
}
