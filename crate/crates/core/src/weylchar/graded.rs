use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::table::{char_table, tensor_decompose, IrrLabel};
use super::WeylError;
use crate::exactalg::QPoly;

/// `Σ_χ m_χ(q) [L_χ]` with polynomial multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedCharacter<L: Ord> {
    pub mult: BTreeMap<L, QPoly>,
}

impl<L: Ord> Default for GradedCharacter<L> {
    fn default() -> Self {
        GradedCharacter { mult: BTreeMap::new() }
    }
}

impl<L: IrrLabel> GradedCharacter<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(l: L) -> Self {
        let mut g = Self::new();
        g.add_term(l, QPoly::one());
        g
    }

    pub fn get(&self, l: &L) -> QPoly {
        self.mult.get(l).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn add_term(&mut self, l: L, p: QPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.mult.entry(l.clone()).or_insert_with(QPoly::zero);
        *entry = &*entry + &p;
        if entry.is_zero() {
            self.mult.remove(&l);
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (l, p) in &other.mult {
            self.add_term(l.clone(), p.clone());
        }
    }

    pub fn scale(&self, p: &QPoly) -> Self {
        let mut out = Self::new();
        for (l, m) in &self.mult {
            out.add_term(l.clone(), m * p);
        }
        out
    }

    /// Substitute `q ↦ q^factor` in every multiplicity.
    pub fn inflate(&self, factor: usize) -> Self {
        GradedCharacter { mult: self.mult.iter().map(|(l, p)| (l.clone(), p.inflate(factor))).collect() }
    }

    pub fn relabel(&self, f: impl Fn(&L) -> L) -> Self {
        let mut out = Self::new();
        for (l, p) in &self.mult {
            out.add_term(f(l), p.clone());
        }
        out
    }

    /// `self ⊗ L_x`
    pub fn tensor_label(&self, x: &L) -> Result<Self, WeylError> {
        let mut out = Self::new();
        for (l, p) in &self.mult {
            for (m, c) in tensor_decompose(l, x)? {
                out.add_term(m, p.scale(&BigRational::from_integer(c.into())));
            }
        }
        Ok(out)
    }

    pub fn support(&self) -> impl Iterator<Item = &L> {
        self.mult.keys()
    }

    pub fn is_natural(&self) -> bool {
        self.mult.values().all(QPoly::is_natural)
    }

    pub fn multiplicities_at_one(&self) -> BTreeMap<L, BigRational> {
        self.mult.iter().map(|(l, p)| (l.clone(), p.at_one())).collect()
    }

    /// Ungraded character values (at `t = 1`) on the classes of `W_n`.
    pub fn class_function(&self, n: usize) -> Result<Vec<BigRational>, WeylError> {
        let t = char_table::<L>(n)?;
        let mut out = vec![BigRational::zero(); t.classes.len()];
        for (l, p) in &self.mult {
            let m = p.at_one();
            for (o, &v) in out.iter_mut().zip(t.row(l)?) {
                *o += &m * BigRational::from_integer(v.into());
            }
        }
        Ok(out)
    }

    /// Total graded dimension.
    pub fn gdim(&self, n: usize) -> Result<QPoly, WeylError> {
        let t = char_table::<L>(n)?;
        let mut acc = QPoly::zero();
        for (l, p) in &self.mult {
            acc = acc + p.scale(&BigRational::from_integer(t.dim(l)?.into()));
        }
        Ok(acc)
    }
}

fn poly_text(p: &QPoly) -> String {
    p.to_t_string().unwrap_or_else(|| format!("({p})"))
}

impl<L: IrrLabel> fmt::Display for GradedCharacter<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, p)) in self.mult.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if p.is_one() {
                write!(f, "[{l}]")?;
            } else {
                let s = poly_text(p);
                if s.contains(' ') {
                    write!(f, "({s})[{l}]")?;
                } else {
                    write!(f, "{s}[{l}]")?;
                }
            }
        }
        Ok(())
    }
}

impl<L: IrrLabel> fmt::Debug for GradedCharacter<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
