use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{Family, FiniteGroup};
use crate::error::{Error, Result};

/// Default cap on `|G|` for exhaustive subgroup enumeration.
pub const DEFAULT_MAX_ORDER: usize = 256;

/// Structural descriptor of a subgroup of a family group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupKind {
    Trivial,
    /// A subgroup of the rotation subgroup `⟨a⟩` (or of a cyclic parent).
    Cyclic {
        order: usize,
    },
    /// `⟨ba^i⟩ ≅ C_2` inside a dihedral group; `generator` is its element outside `⟨a⟩`.
    Reflection {
        generator: usize,
        label: String,
    },
    /// `⟨ba^i⟩ ≅ C_4` inside a dicyclic group.
    BaType {
        generator: usize,
        label: String,
    },
    Dihedral {
        order: usize,
    },
    Dicyclic {
        order: usize,
    },
    Unclassified,
}

impl SubgroupKind {
    /// Whether the subgroup lies in `⟨a⟩`.
    pub fn is_rotation(&self) -> bool {
        matches!(self, SubgroupKind::Trivial | SubgroupKind::Cyclic { .. })
    }
}

impl fmt::Display for SubgroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupKind::Trivial => write!(f, "trivial"),
            SubgroupKind::Cyclic { order } => write!(f, "C{order}"),
            SubgroupKind::Reflection { label, .. } | SubgroupKind::BaType { label, .. } => write!(f, "<{label}>"),
            SubgroupKind::Dihedral { order } => write!(f, "D{order}"),
            SubgroupKind::Dicyclic { order } => write!(f, "Dic{order}"),
            SubgroupKind::Unclassified => write!(f, "unclassified"),
        }
    }
}

/// An isomorphism from a family group onto a subgroup: `embedding[x]` is the
/// parent element that model element `x` maps to.
#[derive(Debug)]
pub struct Model {
    pub group: Arc<FiniteGroup>,
    pub embedding: Vec<usize>,
    /// Inverse of `embedding` on the parent, `None` off the subgroup.
    pub preimage: Vec<Option<usize>>,
}

#[derive(Clone, Debug)]
enum ModelFailure {
    Unsupported(String),
    Inconsistent(String),
}

#[derive(Clone, Debug)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    members: Vec<usize>,
    generators: Vec<usize>,
    model: OnceLock<std::result::Result<Arc<Model>, ModelFailure>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members
    }
}

impl Eq for Subgroup {}

/// Closure of `gens` under multiplication, plus an irredundant generating list.
fn close(g: &FiniteGroup, gens: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = g.order();
    let mut inside = vec![false; n];
    inside[g.identity()] = true;
    let mut elems = vec![g.identity()];
    let mut used: Vec<usize> = Vec::new();
    for &s in gens {
        if inside[s] {
            continue;
        }
        used.push(s);
        // Re-close from scratch over every element with the enlarged generator list.
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &t in &used {
                let y = g.mul(x, t);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
    }
    elems.sort_unstable();
    (elems, used)
}

/// The smallest subgroup containing `gens`.
pub fn generated_subgroup(g: &Arc<FiniteGroup>, gens: &[usize]) -> Result<Subgroup> {
    if let Some(&bad) = gens.iter().find(|&&x| x >= g.order()) {
        return Err(Error::Domain(format!("element index {bad} is outside {}", g.name())));
    }
    let (members, generators) = close(g, gens);
    Ok(Subgroup::from_parts(Arc::clone(g), members, generators))
}

/// Every subgroup of `g`, once each, ordered by (order, member set).
pub fn all_subgroups(g: &Arc<FiniteGroup>) -> Result<Vec<Subgroup>> {
    all_subgroups_bounded(g, DEFAULT_MAX_ORDER)
}

/// Cyclic subgroups closed under pairwise joins until nothing new appears.
pub fn all_subgroups_bounded(g: &Arc<FiniteGroup>, max_order: usize) -> Result<Vec<Subgroup>> {
    if g.order() > max_order {
        return Err(Error::SizeLimit { order: g.order(), bound: max_order });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut found: Vec<(Vec<usize>, Vec<usize>, Vec<bool>)> = Vec::new();
    let mut push = |members: Vec<usize>, gens: Vec<usize>, found: &mut Vec<_>| {
        if seen.insert(members.clone()) {
            let mut mask = vec![false; g.order()];
            for &x in &members {
                mask[x] = true;
            }
            found.push((members, gens, mask));
        }
    };
    for x in 0..g.order() {
        let (members, gens) = close(g, &[x]);
        push(members, gens, &mut found);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let (a, b) = (&found[i], &found[j]);
            if a.0.iter().all(|&x| b.2[x]) || b.0.iter().all(|&x| a.2[x]) {
                continue;
            }
            let gens: Vec<usize> = a.1.iter().chain(&b.1).copied().collect();
            let (members, used) = close(g, &gens);
            push(members, used, &mut found);
        }
        i += 1;
    }
    let mut subgroups: Vec<Subgroup> =
        found.into_iter().map(|(members, gens, _)| Subgroup::from_parts(Arc::clone(g), members, gens)).collect();
    subgroups.sort_by(|x, y| (x.order(), &x.members).cmp(&(y.order(), &y.members)));
    Ok(subgroups)
}

pub fn describe_subgroup(h: &Subgroup) -> SubgroupKind {
    h.kind()
}

/// Whether some `x ∈ G` has `x H₁ x⁻¹ = H₂`.
pub fn are_conjugate_subgroups(g: &FiniteGroup, h1: &Subgroup, h2: &Subgroup) -> bool {
    if h1.order() != h2.order() || *h1.parent != *g || *h2.parent != *g {
        return false;
    }
    (0..g.order()).any(|x| {
        let mut image: Vec<usize> = h1.members.iter().map(|&y| g.conjugate(y, x)).collect();
        image.sort_unstable();
        image == h2.members
    })
}

impl Subgroup {
    fn from_parts(parent: Arc<FiniteGroup>, members: Vec<usize>, generators: Vec<usize>) -> Self {
        Subgroup { parent, members, generators, model: OnceLock::new() }
    }

    pub fn whole(g: &Arc<FiniteGroup>) -> Self {
        let gens = g.generators().to_vec();
        generated_subgroup(g, &gens).expect("generators lie in the group")
    }

    pub fn trivial(g: &Arc<FiniteGroup>) -> Self {
        Self::from_parts(Arc::clone(g), vec![g.identity()], vec![])
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    /// Sorted element indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_labels(&self) -> Vec<String> {
        self.generators.iter().map(|&x| self.parent.label(x).to_string()).collect()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// Closure invariants: identity, products, inverses, Lagrange.
    pub fn check_closed(&self) -> Result<()> {
        let g = &self.parent;
        let fail = |m: &str| Err(Error::InternalConsistency(format!("subgroup of {}: {m}", g.name())));
        if !self.contains(g.identity()) {
            return fail("missing identity");
        }
        for &x in &self.members {
            if !self.contains(g.inv(x)) {
                return fail("not closed under inverses");
            }
            if self.members.iter().any(|&y| !self.contains(g.mul(x, y))) {
                return fail("not closed under products");
            }
        }
        if !g.order().is_multiple_of(self.order()) {
            return fail("order does not divide the group order");
        }
        Ok(())
    }

    fn is_cyclic(&self) -> bool {
        self.members.iter().any(|&x| self.parent.element_order(x) == self.order())
    }

    fn min_outside_rotation(&self) -> Option<usize> {
        self.members.iter().copied().find(|&x| !self.parent.is_rotation(x))
    }

    /// Smallest-index element of `H ∩ ⟨a⟩` generating that intersection.
    fn rotation_generator(&self) -> usize {
        let g = &self.parent;
        let rot: Vec<usize> = self.members.iter().copied().filter(|&x| g.is_rotation(x)).collect();
        rot.iter().copied().find(|&x| g.element_order(x) == rot.len()).unwrap_or(g.identity())
    }

    pub fn kind(&self) -> SubgroupKind {
        let g = &self.parent;
        if self.order() == 1 {
            return SubgroupKind::Trivial;
        }
        match g.family() {
            Family::Cyclic(_) => SubgroupKind::Cyclic { order: self.order() },
            Family::Product(..) => SubgroupKind::Unclassified,
            family @ (Family::Dihedral(_) | Family::Dicyclic(_)) => {
                let dihedral = matches!(family, Family::Dihedral(_));
                let Some(outside) = self.min_outside_rotation() else {
                    return SubgroupKind::Cyclic { order: self.order() };
                };
                let label = g.label(outside).to_string();
                match (self.is_cyclic(), dihedral) {
                    (true, true) => SubgroupKind::Reflection { generator: outside, label },
                    (true, false) => SubgroupKind::BaType { generator: outside, label },
                    (false, true) => SubgroupKind::Dihedral { order: self.order() },
                    (false, false) => SubgroupKind::Dicyclic { order: self.order() },
                }
            }
        }
    }

    /// `descriptor` string: `trivial`, `C<d>`, `D<2m>`, `Dic<4k>` or `<ba^i>`.
    pub fn descriptor(&self) -> String {
        self.kind().to_string()
    }

    /// An isomorphism from a freshly constructed family group onto this
    /// subgroup, verified to be a homomorphism.
    pub fn model(&self) -> Result<Arc<Model>> {
        let cached = self.model.get_or_init(|| self.build_model().map(Arc::new));
        match cached {
            Ok(m) => Ok(Arc::clone(m)),
            Err(ModelFailure::Unsupported(msg)) => Err(Error::Unsupported(msg.clone())),
            Err(ModelFailure::Inconsistent(msg)) => Err(Error::InternalConsistency(msg.clone())),
        }
    }

    fn build_model(&self) -> std::result::Result<Model, ModelFailure> {
        let g = &self.parent;
        let kind = self.kind();
        let err = |e: Error| ModelFailure::Inconsistent(e.to_string());
        let cyclic_on = |gen: usize, d: usize| -> std::result::Result<(Arc<FiniteGroup>, Vec<usize>), ModelFailure> {
            let model = FiniteGroup::cyclic(d).map_err(err)?;
            let emb = (0..d).map(|k| g.pow(gen, k)).collect();
            Ok((model, emb))
        };
        let (group, embedding) = match kind {
            SubgroupKind::Trivial => cyclic_on(g.identity(), 1)?,
            SubgroupKind::Cyclic { order } => {
                let gen = self.members.iter().copied().find(|&x| g.element_order(x) == order).ok_or_else(|| {
                    ModelFailure::Inconsistent(format!("cyclic subgroup of order {order} has no generator"))
                })?;
                cyclic_on(gen, order)?
            }
            SubgroupKind::Reflection { generator, .. } | SubgroupKind::BaType { generator, .. } => {
                cyclic_on(generator, self.order())?
            }
            SubgroupKind::Dihedral { .. } | SubgroupKind::Dicyclic { .. } => {
                let r = self.rotation_generator();
                let s = self.min_outside_rotation().expect("non-rotation subgroup");
                let rot = self.order() / 2;
                let model = match kind {
                    SubgroupKind::Dihedral { .. } => FiniteGroup::dihedral(rot),
                    _ => FiniteGroup::dicyclic(rot / 2),
                }
                .map_err(err)?;
                let emb = (0..self.order()).map(|x| g.mul(g.pow(s, x / rot), g.pow(r, x % rot))).collect();
                (model, emb)
            }
            SubgroupKind::Unclassified => {
                return Err(ModelFailure::Unsupported(format!("subgroups of {} have no family model", g.name())))
            }
        };
        let mut preimage = vec![None; g.order()];
        for (x, &y) in embedding.iter().enumerate() {
            if preimage[y].is_some() || !self.contains(y) {
                return Err(ModelFailure::Inconsistent(format!("model of {kind} in {} is not a bijection", g.name())));
            }
            preimage[y] = Some(x);
        }
        if embedding.len() != self.order() {
            return Err(ModelFailure::Inconsistent(format!("model of {kind} has the wrong order")));
        }
        for x in 0..group.order() {
            for y in 0..group.order() {
                if embedding[group.mul(x, y)] != g.mul(embedding[x], embedding[y]) {
                    return Err(ModelFailure::Inconsistent(format!(
                        "model of {kind} in {} is not a homomorphism",
                        g.name()
                    )));
                }
            }
        }
        Ok(Model { group, embedding, preimage })
    }
}
