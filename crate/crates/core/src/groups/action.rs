use std::fmt;
use std::sync::Arc;

use super::{FiniteGroup, GroupError, GroupHom};
use crate::algebra::ZnModule;

/// Witness for an invalid action table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionFailure {
    Shape {
        element: usize,
    },
    NotWellDefined {
        element: usize,
        row: usize,
        col: usize,
    },
    IdentityActsNontrivially,
    NotMultiplicative {
        g: usize,
        h: usize,
    },
}

impl fmt::Display for ActionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shape { element } => {
                write!(f, "action matrix of element {element} has the wrong shape")
            }
            Self::NotWellDefined { element, row, col } => {
                write!(
                    f,
                    "entry ({row}, {col}) of element {element} does not respect the cyclic orders"
                )
            }
            Self::IdentityActsNontrivially => write!(f, "the identity acts nontrivially"),
            Self::NotMultiplicative { g, h } => {
                write!(f, "action of {g}*{h} differs from the composite")
            }
        }
    }
}

#[derive(PartialEq, Eq, Hash)]
struct ModuleData {
    group: FiniteGroup,
    module: ZnModule,
    /// `|G|` row-major `r x r` integer matrices; entry `(k, i)` is reduced mod `n_k`.
    action: Vec<u32>,
    trivial: bool,
}

/// A `Z/n`-module `M = sum Z/n_i` with a left action of a finite group, each
/// element acting by an integer matrix on the cyclic components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GModule(Arc<ModuleData>);

impl GModule {
    /// `action[g][k][i]`: coefficient of component `i` in component `k` of `g.x`.
    pub fn new(
        group: &FiniteGroup,
        module: ZnModule,
        action: &[Vec<Vec<u32>>],
    ) -> Result<Self, GroupError> {
        let r = module.rank();
        let orders = module.orders().to_vec();
        if action.len() != group.order() {
            return Err(GroupError::InvalidAction(ActionFailure::Shape {
                element: action.len().min(group.order()),
            }));
        }
        let mut flat = Vec::with_capacity(group.order() * r * r);
        for (g, m) in action.iter().enumerate() {
            if m.len() != r || m.iter().any(|row| row.len() != r) {
                return Err(GroupError::InvalidAction(ActionFailure::Shape {
                    element: g,
                }));
            }
            for (k, row) in m.iter().enumerate() {
                for (i, &t) in row.iter().enumerate() {
                    let t = t % orders[k];
                    if !(t as u64 * orders[i] as u64).is_multiple_of(orders[k] as u64) {
                        return Err(GroupError::InvalidAction(ActionFailure::NotWellDefined {
                            element: g,
                            row: k,
                            col: i,
                        }));
                    }
                    flat.push(t);
                }
            }
        }
        let identity: Vec<u32> = (0..r * r)
            .map(|x| u32::from(x / r == x % r) % orders[x / r])
            .collect();
        if flat[..r * r] != identity[..] {
            return Err(GroupError::InvalidAction(
                ActionFailure::IdentityActsNontrivially,
            ));
        }
        let at = |g: usize| &flat[g * r * r..(g + 1) * r * r];
        for g in group.elements() {
            for h in group.elements() {
                let prod = compose(&orders, at(g), at(h));
                if prod != at(group.mul(g, h)) {
                    return Err(GroupError::InvalidAction(
                        ActionFailure::NotMultiplicative { g, h },
                    ));
                }
            }
        }
        let trivial = (0..group.order()).all(|g| at(g) == &identity[..]);
        Ok(Self(Arc::new(ModuleData {
            group: group.clone(),
            module,
            action: flat,
            trivial,
        })))
    }

    pub fn trivial(group: &FiniteGroup, module: ZnModule) -> Self {
        let r = module.rank();
        let orders = module.orders();
        let identity: Vec<u32> = (0..r * r)
            .map(|x| u32::from(x / r == x % r) % orders[x / r])
            .collect();
        let action = identity.repeat(group.order());
        Self(Arc::new(ModuleData {
            group: group.clone(),
            module,
            action,
            trivial: true,
        }))
    }

    /// Rank-one module `Z/n` where `g` acts by multiplication by `scalars[g]`.
    pub fn scalar(group: &FiniteGroup, modulus: u32, scalars: &[u32]) -> Result<Self, GroupError> {
        let module = ZnModule::cyclic(modulus).map_err(GroupError::Algebra)?;
        let action: Vec<Vec<Vec<u32>>> = scalars.iter().map(|&s| vec![vec![s]]).collect();
        Self::new(group, module, &action)
    }

    /// `Z/n` twisted by a character `chi: G -> Z/2`: the nontrivial element acts by `-1`.
    pub fn sign(chi: &GroupHom, modulus: u32) -> Result<Self, GroupError> {
        if chi.cod().order() != 2 {
            return Err(GroupError::GroupMismatch);
        }
        let scalars: Vec<u32> = chi
            .map()
            .iter()
            .map(|&x| if x == 0 { 1 } else { modulus - 1 })
            .collect();
        Self::scalar(chi.dom(), modulus, &scalars)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.0.group
    }

    pub fn module(&self) -> &ZnModule {
        &self.0.module
    }

    pub fn modulus(&self) -> u32 {
        self.0.module.modulus()
    }

    pub fn rank(&self) -> usize {
        self.0.module.rank()
    }

    pub fn orders(&self) -> &[u32] {
        self.0.module.orders()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.trivial
    }

    /// Row-major `r x r` matrix of `g`.
    pub fn matrix(&self, g: usize) -> &[u32] {
        let rr = self.rank() * self.rank();
        &self.0.action[g * rr..(g + 1) * rr]
    }

    /// The scalar by which `g` acts, for rank-one modules.
    pub fn scalar_of(&self, g: usize) -> Option<u32> {
        (self.rank() == 1).then(|| self.matrix(g)[0])
    }

    /// Write `g . x` into `out`.
    pub fn act_into(&self, g: usize, x: &[u32], out: &mut [u32]) {
        if self.0.trivial {
            out.copy_from_slice(x);
            return;
        }
        let r = self.rank();
        let m = self.matrix(g);
        for (k, (o, &nk)) in out.iter_mut().zip(self.orders()).enumerate() {
            let nk = nk as u64;
            let s: u64 = (0..r).map(|i| m[k * r + i] as u64 * x[i] as u64 % nk).sum();
            *o = (s % nk) as u32;
        }
    }

    pub fn act(&self, g: usize, x: &[u32]) -> Vec<u32> {
        let mut out = vec![0; x.len()];
        self.act_into(g, x, &mut out);
        out
    }

    /// The module over `hom.dom()` acting through `hom`.
    pub fn pullback(&self, hom: &GroupHom) -> Result<Self, GroupError> {
        if hom.cod() != self.group() {
            return Err(GroupError::GroupMismatch);
        }
        if self.0.trivial {
            return Ok(Self::trivial(hom.dom(), self.module().clone()));
        }
        if hom.map().iter().all(|&x| self.matrix(x) == self.matrix(0)) {
            return Ok(Self::trivial(hom.dom(), self.module().clone()));
        }
        let rr = self.rank() * self.rank();
        let mut action = Vec::with_capacity(hom.dom().order() * rr);
        for g in hom.dom().elements() {
            action.extend_from_slice(self.matrix(hom.apply(g)));
        }
        Ok(Self(Arc::new(ModuleData {
            group: hom.dom().clone(),
            module: self.module().clone(),
            action,
            trivial: false,
        })))
    }
}

fn compose(orders: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let r = orders.len();
    let mut out = vec![0u32; r * r];
    for k in 0..r {
        let nk = orders[k] as u64;
        for i in 0..r {
            let s: u64 = (0..r)
                .map(|j| a[k * r + j] as u64 * b[j * r + i] as u64 % nk)
                .sum();
            out[k * r + i] = (s % nk) as u32;
        }
    }
    out
}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GModule(|G|={}, n={}, orders={:?}, trivial={})",
            self.group().order(),
            self.modulus(),
            self.orders(),
            self.is_trivial()
        )
    }
}
