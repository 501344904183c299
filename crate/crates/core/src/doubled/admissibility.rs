use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::poly::{DoubledIndex, Poly, Var};

/// Which chart coordinates test data may depend on, per class of object.
///
/// Functions, vector components (`X^mu`) and form components (`xi_mu`) each
/// get their own variable set. A single mask applies to all three; separate
/// masks express the relaxed constraints where only some classes are
/// restricted. The function set must lie inside the other two so that
/// `f * e` stays admissible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Admissibility {
    name: String,
    functions: BTreeSet<Var>,
    vectors: BTreeSet<Var>,
    forms: BTreeSet<Var>,
}

fn all_coords(dim: usize) -> BTreeSet<Var> {
    DoubledIndex::all(dim).map(DoubledIndex::var).collect()
}

impl Admissibility {
    pub fn unrestricted(dim: usize) -> Admissibility {
        let all = all_coords(dim);
        Admissibility { name: "unrestricted".into(), functions: all.clone(), vectors: all.clone(), forms: all }
    }

    /// No dependence on the winding coordinates `xt`.
    pub fn x_only(dim: usize) -> Admissibility {
        let xs: BTreeSet<Var> = (0..dim).map(Var::x).collect();
        Admissibility { name: "x-only".into(), functions: xs.clone(), vectors: xs.clone(), forms: xs }
    }

    /// No dependence on the ordinary coordinates `x`.
    pub fn xt_only(dim: usize) -> Admissibility {
        let xs: BTreeSet<Var> = (0..dim).map(Var::xt).collect();
        Admissibility { name: "xt-only".into(), functions: xs.clone(), vectors: xs.clone(), forms: xs }
    }

    /// The same variable set for every class.
    pub fn mask(vars: impl IntoIterator<Item = Var>) -> Result<Admissibility, Error> {
        let set: BTreeSet<Var> = vars.into_iter().collect();
        Admissibility::per_class(set.clone(), set.clone(), set).map(|mut a| {
            a.name = "mask".into();
            a
        })
    }

    /// Separate sets for functions, vector components and form components.
    pub fn per_class(
        functions: impl IntoIterator<Item = Var>,
        vectors: impl IntoIterator<Item = Var>,
        forms: impl IntoIterator<Item = Var>,
    ) -> Result<Admissibility, Error> {
        let a = Admissibility {
            name: "per-class".into(),
            functions: functions.into_iter().collect(),
            vectors: vectors.into_iter().collect(),
            forms: forms.into_iter().collect(),
        };
        for set in [&a.functions, &a.vectors, &a.forms] {
            if let Some(v) = set.iter().find(|v| v.is_param()) {
                return Err(Error::Admissibility(format!("parameter {v} in a coordinate mask")));
            }
        }
        if !a.functions.is_subset(&a.vectors) || !a.functions.is_subset(&a.forms) {
            return Err(Error::Admissibility("function variables must be allowed for vectors and forms too".into()));
        }
        Ok(a)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn function_vars(&self) -> Vec<Var> {
        self.functions.iter().copied().collect()
    }

    pub fn vector_vars(&self) -> Vec<Var> {
        self.vectors.iter().copied().collect()
    }

    pub fn form_vars(&self) -> Vec<Var> {
        self.forms.iter().copied().collect()
    }

    /// Coordinates allowed for some section component.
    pub fn section_vars(&self) -> Vec<Var> {
        self.vectors.union(&self.forms).copied().collect()
    }

    fn within(set: &BTreeSet<Var>, p: &Poly) -> bool {
        p.vars().iter().all(|v| v.is_param() || set.contains(v))
    }

    pub fn allows_function(&self, f: &Poly) -> bool {
        Self::within(&self.functions, f)
    }

    pub fn allows_vector_comp(&self, f: &Poly) -> bool {
        Self::within(&self.vectors, f)
    }

    pub fn allows_form_comp(&self, f: &Poly) -> bool {
        Self::within(&self.forms, f)
    }

    /// True when the coordinate range is the full chart for every class.
    pub fn is_unrestricted(&self, dim: usize) -> bool {
        let all = all_coords(dim);
        self.functions == all && self.vectors == all && self.forms == all
    }
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &BTreeSet<Var>| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        if self.functions == self.vectors && self.vectors == self.forms {
            write!(f, "{} {{{}}}", self.name, show(&self.functions))
        } else {
            write!(
                f,
                "{} {{functions: {}; vectors: {}; forms: {}}}",
                self.name,
                show(&self.functions),
                show(&self.vectors),
                show(&self.forms)
            )
        }
    }
}
