use super::{FiniteGroup, GroupError};

/// A validated homomorphism `dom -> cod` stored as an element map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    dom: FiniteGroup,
    cod: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(dom: &FiniteGroup, cod: &FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != dom.order() {
            return Err(GroupError::MapLength {
                expected: dom.order(),
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= cod.order()) {
            return Err(GroupError::ElementOutOfRange {
                element: bad,
                order: cod.order(),
            });
        }
        if map[0] != 0 {
            return Err(GroupError::NotAHom { g: 0, h: 0 });
        }
        for g in dom.elements() {
            for h in dom.elements() {
                if map[dom.mul(g, h)] != cod.mul(map[g], map[h]) {
                    return Err(GroupError::NotAHom { g, h });
                }
            }
        }
        Ok(Self {
            dom: dom.clone(),
            cod: cod.clone(),
            map,
        })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Self {
            dom: g.clone(),
            cod: g.clone(),
            map: g.elements().collect(),
        }
    }

    pub fn trivial(dom: &FiniteGroup, cod: &FiniteGroup) -> Self {
        Self {
            dom: dom.clone(),
            cod: cod.clone(),
            map: vec![0; dom.order()],
        }
    }

    pub fn dom(&self) -> &FiniteGroup {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteGroup {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom, GroupError> {
        if inner.cod != self.dom {
            return Err(GroupError::GroupMismatch);
        }
        Ok(GroupHom {
            dom: inner.dom.clone(),
            cod: self.cod.clone(),
            map: inner.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.map
            .iter()
            .all(|&x| !std::mem::replace(&mut seen[x], true))
    }

    pub fn is_trivial(&self) -> bool {
        self.map.iter().all(|&x| x == 0)
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.dom.elements().filter(|&g| self.map[g] == 0).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }

    /// Restriction to a subgroup given by an injective hom into `dom`.
    pub fn restrict(&self, inclusion: &GroupHom) -> Result<GroupHom, GroupError> {
        self.compose(inclusion)
    }
}

/// Inner automorphism `x -> a x a^{-1}`.
pub fn conjugation_hom(g: &FiniteGroup, a: usize) -> Result<GroupHom, GroupError> {
    if a >= g.order() {
        return Err(GroupError::ElementOutOfRange {
            element: a,
            order: g.order(),
        });
    }
    Ok(GroupHom {
        dom: g.clone(),
        cod: g.clone(),
        map: g.elements().map(|x| g.conj(a, x)).collect(),
    })
}

/// `Ad_a ∘ rho`.
pub fn conjugate_hom(rho: &GroupHom, a: usize) -> Result<GroupHom, GroupError> {
    conjugation_hom(rho.cod(), a)?.compose(rho)
}

/// Quotient `g / n` for a normal subgroup `n`. Cosets are ordered by their
/// smallest element, so the identity coset is element 0.
pub fn quotient(g: &FiniteGroup, normal: &[usize]) -> Result<(FiniteGroup, GroupHom), GroupError> {
    if !g.is_normal(normal) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == usize::MAX {
            let idx = reps.len();
            reps.push(x);
            for &k in normal {
                coset_of[g.mul(x, k)] = idx;
            }
        }
    }
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[g.mul(a, b)]).collect())
        .collect();
    let q = FiniteGroup::from_table(&table)?;
    let proj = GroupHom::new(g, &q, coset_of)?;
    Ok((q, proj))
}

/// Every homomorphism `dom -> cod`, in lexicographic order of generator images.
pub fn all_homs(dom: &FiniteGroup, cod: &FiniteGroup) -> Vec<GroupHom> {
    let gens = dom.generators();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_on_generators(dom, cod, &gens, &images) {
            out.push(GroupHom {
                dom: dom.clone(),
                cod: cod.clone(),
                map,
            });
        }
        // odometer over generator images
        let mut i = gens.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            images[i] += 1;
            if images[i] < cod.order() {
                break;
            }
            images[i] = 0;
        }
    }
}

/// Extend an assignment on generators along the Cayley graph; `None` if the
/// assignment is inconsistent.
fn extend_on_generators(
    dom: &FiniteGroup,
    cod: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; dom.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        for (&s, &t) in gens.iter().zip(images) {
            let y = dom.mul(x, s);
            let fy = cod.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}
