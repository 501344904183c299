use crate::algebroid::{Side, VectorField};
use crate::doubled::{DoubledRealization, DoubledSection};
use crate::error::Error;
use crate::generic::{generic_poly, ParamPool};
use crate::poly::{Poly, Var};

/// Bounded-degree stand-in for "for all sections".
///
/// Every coefficient is a sum over admissible monomials of degree `<= degree`,
/// each with its own fresh parameter. `seed` is the index of the first
/// parameter, so different seeds name the parameters differently while the
/// family itself is the same.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenericSectionFamily {
    pub degree: u32,
    pub count: usize,
    pub seed: u64,
}

impl Default for GenericSectionFamily {
    fn default() -> Self {
        GenericSectionFamily { degree: 2, count: 3, seed: 0 }
    }
}

impl GenericSectionFamily {
    pub fn new(degree: u32, count: usize, seed: u64) -> Self {
        GenericSectionFamily { degree, count, seed }
    }

    pub(crate) fn sampler<'a>(&self, r: &'a DoubledRealization, degree: u32) -> Sampler<'a> {
        Sampler { r, degree, pool: ParamPool::new(self.seed as usize), explicit: None }
    }
}

/// Concrete sections and functions to test instead of generic ones. Requests
/// cycle through each list in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExplicitData {
    pub sections: Vec<DoubledSection>,
    pub functions: Vec<Poly>,
}

impl ExplicitData {
    pub(crate) fn sampler<'a>(&'a self, r: &'a DoubledRealization) -> Sampler<'a> {
        Sampler { r, degree: 0, pool: ParamPool::new(0), explicit: Some(Cursor { data: self, sections: 0, functions: 0 }) }
    }
}

pub(crate) struct Cursor<'a> {
    data: &'a ExplicitData,
    sections: usize,
    functions: usize,
}

impl Cursor<'_> {
    fn section(&mut self) -> Result<DoubledSection, Error> {
        let list = &self.data.sections;
        if list.is_empty() {
            return Err(Error::Precondition("explicit data has no sections".into()));
        }
        let out = list[self.sections % list.len()].clone();
        self.sections += 1;
        Ok(out)
    }

    fn function(&mut self) -> Result<Poly, Error> {
        let list = &self.data.functions;
        if list.is_empty() {
            return Err(Error::Precondition("explicit data has no functions".into()));
        }
        let out = list[self.functions % list.len()].clone();
        self.functions += 1;
        Ok(out)
    }
}

/// Draws generic admissible data from one parameter pool.
pub(crate) struct Sampler<'a> {
    r: &'a DoubledRealization,
    degree: u32,
    pool: ParamPool,
    explicit: Option<Cursor<'a>>,
}

impl Sampler<'_> {
    fn poly(&mut self, vars: &[Var]) -> Result<Poly, Error> {
        generic_poly(vars, self.degree, &mut self.pool)
    }

    /// A generic function in `vars` of the given degree, from the same pool.
    pub fn poly_in(&mut self, vars: &[Var], degree: u32) -> Result<Poly, Error> {
        if let Some(c) = &mut self.explicit {
            return c.function();
        }
        generic_poly(vars, degree, &mut self.pool)
    }

    pub fn function(&mut self) -> Result<Poly, Error> {
        if let Some(c) = &mut self.explicit {
            return c.function();
        }
        let vars = self.r.admissibility().function_vars();
        self.poly(&vars)
    }

    /// A function whose variables may be anything a section may depend on.
    pub fn section_function(&mut self) -> Result<Poly, Error> {
        if let Some(c) = &mut self.explicit {
            return c.function();
        }
        let vars = self.r.admissibility().section_vars();
        self.poly(&vars)
    }

    pub fn vector(&mut self) -> Result<VectorField, Error> {
        if let Some(c) = &mut self.explicit {
            return Ok(c.section()?.x);
        }
        let vars = self.r.admissibility().vector_vars();
        let comps = (0..self.r.dim()).map(|_| self.poly(&vars)).collect::<Result<_, _>>()?;
        Ok(VectorField::new(Side::E, comps))
    }

    pub fn form(&mut self) -> Result<VectorField, Error> {
        if let Some(c) = &mut self.explicit {
            return Ok(c.section()?.xi);
        }
        let vars = self.r.admissibility().form_vars();
        let comps = (0..self.r.dim()).map(|_| self.poly(&vars)).collect::<Result<_, _>>()?;
        Ok(VectorField::new(Side::EStar, comps))
    }

    pub fn section(&mut self) -> Result<DoubledSection, Error> {
        if let Some(c) = &mut self.explicit {
            return c.section();
        }
        let x = self.vector()?;
        let xi = self.form()?;
        Ok(DoubledSection::new(x, xi))
    }
}

/// `family.count` generic admissible sections at `family.degree`.
pub fn generic_sections(family: &GenericSectionFamily, r: &DoubledRealization) -> Result<Vec<DoubledSection>, Error> {
    let mut s = family.sampler(r, family.degree);
    (0..family.count).map(|_| s.section()).collect()
}
