//! Ontology data model: vocabulary interning, concepts, axioms, assertions,
//! and the indexed immutable [`Ontology`].

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

/// Interned atomic concept name.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ConceptName(pub u32);

/// Interned role name (the base of a possibly inverted [`Role`]).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RoleName(pub u32);

/// Interned individual name.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Individual(pub u32);

/// Stable identifier of an assertion: its zero-based position among the
/// assertions of the source file.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AssertionId(pub u32);

/// A named role or its inverse. `inv(inv(R)) = R` by construction: inversion
/// just flips the flag, so `R--` is unrepresentable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Role {
    pub base: RoleName,
    pub inverted: bool,
}

impl Role {
    pub fn named(base: RoleName) -> Self {
        Role { base, inverted: false }
    }

    pub fn inverse_of(base: RoleName) -> Self {
        Role { base, inverted: true }
    }

    /// The `Inv` function: `Inv(R) = R^-` and `Inv(R^-) = R`.
    pub fn inv(self) -> Self {
        Role { base: self.base, inverted: !self.inverted }
    }
}

/// A SHIQ concept expression.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Concept {
    Top,
    Bottom,
    Atomic(ConceptName),
    Not(Box<Concept>),
    And(Box<Concept>, Box<Concept>),
    Or(Box<Concept>, Box<Concept>),
    /// `some(R, C)`, the existential restriction.
    SomeValues(Role, Box<Concept>),
    /// `all(R, C)`, the value restriction.
    AllValues(Role, Box<Concept>),
    /// `min(n, R, C)`, the at-least qualified number restriction.
    AtLeast(u32, Role, Box<Concept>),
    /// `max(n, R, C)`, the at-most qualified number restriction.
    AtMost(u32, Role, Box<Concept>),
}

impl Concept {
    pub fn not(c: Concept) -> Concept {
        Concept::Not(Box::new(c))
    }

    pub fn and(a: Concept, b: Concept) -> Concept {
        Concept::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Concept, b: Concept) -> Concept {
        Concept::Or(Box::new(a), Box::new(b))
    }

    pub fn some(r: Role, c: Concept) -> Concept {
        Concept::SomeValues(r, Box::new(c))
    }

    pub fn all(r: Role, c: Concept) -> Concept {
        Concept::AllValues(r, Box::new(c))
    }

    pub fn at_least(n: u32, r: Role, c: Concept) -> Concept {
        Concept::AtLeast(n, r, Box::new(c))
    }

    pub fn at_most(n: u32, r: Role, c: Concept) -> Concept {
        Concept::AtMost(n, r, Box::new(c))
    }

    /// True for atomic names, `top`, and `bottom`.
    pub fn is_atomic(&self) -> bool {
        matches!(self, Concept::Atomic(_) | Concept::Top | Concept::Bottom)
    }

    /// True if any quantifier (`some`/`all`/`min`/`max`) occurs in the tree.
    pub fn has_quantifier(&self) -> bool {
        match self {
            Concept::Top | Concept::Bottom | Concept::Atomic(_) => false,
            Concept::Not(c) => c.has_quantifier(),
            Concept::And(a, b) | Concept::Or(a, b) => a.has_quantifier() || b.has_quantifier(),
            Concept::SomeValues(..) | Concept::AllValues(..) | Concept::AtLeast(..) | Concept::AtMost(..) => true,
        }
    }

    /// Maximum nesting level of quantifiers; a concept is in simple form when
    /// this is less than 2.
    pub fn quantifier_depth(&self) -> u32 {
        match self {
            Concept::Top | Concept::Bottom | Concept::Atomic(_) => 0,
            Concept::Not(c) => c.quantifier_depth(),
            Concept::And(a, b) | Concept::Or(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            Concept::SomeValues(_, c) | Concept::AllValues(_, c) | Concept::AtLeast(_, _, c) | Concept::AtMost(_, _, c) => {
                1 + c.quantifier_depth()
            }
        }
    }
}

/// A TBox axiom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Axiom {
    /// General concept inclusion `lhs ⊑ rhs`. `EquivalentClasses` inputs are
    /// stored as two GCIs at parse time.
    Gci { lhs: Concept, rhs: Concept },
    SubRoleOf { sub: Role, sup: Role },
    Transitive(RoleName),
}

/// An ABox assertion. Class assertions carry atomic concept names only.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Assertion {
    ClassOf { individual: Individual, class: ConceptName },
    RoleOf { role: Role, subject: Individual, object: Individual },
    Different(Individual, Individual),
}

impl Assertion {
    /// The named individuals occurring in the assertion.
    pub fn signature(&self) -> impl Iterator<Item = Individual> {
        let (a, b) = match *self {
            Assertion::ClassOf { individual, .. } => (individual, None),
            Assertion::RoleOf { subject, object, .. } => (subject, Some(object)),
            Assertion::Different(x, y) => (x, Some(y)),
        };
        core::iter::once(a).chain(b.into_iter().filter(move |x| *x != a))
    }
}

/// Immutable SHIQ ontology: interned vocabulary, TBox, ABox, and per-entity
/// assertion indexes. Construct through [`OntologyBuilder`] or the parser.
pub struct Ontology {
    concept_names: Vec<String>,
    role_names: Vec<String>,
    individual_names: Vec<String>,
    tbox: Vec<Axiom>,
    abox: Vec<Assertion>,
    indexes: AssertionIndexes,
}

/// Per-individual and per-role assertion-id indexes, exactly consistent with
/// the assertion list.
#[derive(PartialEq, Eq, Debug)]
pub struct AssertionIndexes {
    pub role_by_individual: Vec<Vec<AssertionId>>,
    pub class_by_individual: Vec<Vec<AssertionId>>,
    pub inequality_by_individual: Vec<Vec<AssertionId>>,
    pub by_role_name: Vec<Vec<AssertionId>>,
}

impl AssertionIndexes {
    pub fn build(abox: &[Assertion], individual_count: usize, role_count: usize) -> Self {
        let mut idx = AssertionIndexes {
            role_by_individual: alloc::vec![Vec::new(); individual_count],
            class_by_individual: alloc::vec![Vec::new(); individual_count],
            inequality_by_individual: alloc::vec![Vec::new(); individual_count],
            by_role_name: alloc::vec![Vec::new(); role_count],
        };
        for (i, assertion) in abox.iter().enumerate() {
            let id = AssertionId(i as u32);
            match *assertion {
                Assertion::ClassOf { individual, .. } => {
                    idx.class_by_individual[individual.0 as usize].push(id);
                }
                Assertion::RoleOf { role, subject, object } => {
                    idx.role_by_individual[subject.0 as usize].push(id);
                    if object != subject {
                        idx.role_by_individual[object.0 as usize].push(id);
                    }
                    idx.by_role_name[role.base.0 as usize].push(id);
                }
                Assertion::Different(a, b) => {
                    idx.inequality_by_individual[a.0 as usize].push(id);
                    if b != a {
                        idx.inequality_by_individual[b.0 as usize].push(id);
                    }
                }
            }
        }
        idx
    }
}

impl Ontology {
    pub fn tbox(&self) -> &[Axiom] {
        &self.tbox
    }

    pub fn abox(&self) -> &[Assertion] {
        &self.abox
    }

    pub fn assertion(&self, id: AssertionId) -> &Assertion {
        &self.abox[id.0 as usize]
    }

    pub fn concept_count(&self) -> usize {
        self.concept_names.len()
    }

    pub fn role_count(&self) -> usize {
        self.role_names.len()
    }

    pub fn individual_count(&self) -> usize {
        self.individual_names.len()
    }

    pub fn concept_name(&self, c: ConceptName) -> &str {
        &self.concept_names[c.0 as usize]
    }

    pub fn role_name(&self, r: RoleName) -> &str {
        &self.role_names[r.0 as usize]
    }

    pub fn individual_name(&self, i: Individual) -> &str {
        &self.individual_names[i.0 as usize]
    }

    pub fn lookup_concept(&self, name: &str) -> Option<ConceptName> {
        self.concept_names.iter().position(|n| n == name).map(|i| ConceptName(i as u32))
    }

    pub fn lookup_role(&self, name: &str) -> Option<RoleName> {
        self.role_names.iter().position(|n| n == name).map(|i| RoleName(i as u32))
    }

    pub fn lookup_individual(&self, name: &str) -> Option<Individual> {
        self.individual_names.iter().position(|n| n == name).map(|i| Individual(i as u32))
    }

    pub fn individuals(&self) -> impl Iterator<Item = Individual> {
        (0..self.individual_names.len() as u32).map(Individual)
    }

    pub fn concept_names(&self) -> impl Iterator<Item = ConceptName> {
        (0..self.concept_names.len() as u32).map(ConceptName)
    }

    pub fn role_names_iter(&self) -> impl Iterator<Item = RoleName> {
        (0..self.role_names.len() as u32).map(RoleName)
    }

    /// Role assertions incident to `a` (as subject or object).
    pub fn role_assertions_of(&self, a: Individual) -> &[AssertionId] {
        &self.indexes.role_by_individual[a.0 as usize]
    }

    /// Class assertions of `a`.
    pub fn class_assertions_of(&self, a: Individual) -> &[AssertionId] {
        &self.indexes.class_by_individual[a.0 as usize]
    }

    /// Inequality assertions mentioning `a`.
    pub fn inequalities_of(&self, a: Individual) -> &[AssertionId] {
        &self.indexes.inequality_by_individual[a.0 as usize]
    }

    /// Role assertions over role name `r` (in either direction).
    pub fn assertions_of_role(&self, r: RoleName) -> &[AssertionId] {
        &self.indexes.by_role_name[r.0 as usize]
    }

    /// Explicit class names asserted for `a`, in assertion order.
    pub fn explicit_classes_of(&self, a: Individual) -> Vec<ConceptName> {
        self.class_assertions_of(a)
            .iter()
            .map(|id| match self.assertion(*id) {
                Assertion::ClassOf { class, .. } => *class,
                _ => unreachable!(),
            })
            .collect()
    }

    /// True if `Different(a, b)` (in either order) is asserted.
    pub fn explicitly_different(&self, a: Individual, b: Individual) -> bool {
        self.inequalities_of(a).iter().any(|id| match *self.assertion(*id) {
            Assertion::Different(x, y) => (x == a && y == b) || (x == b && y == a),
            _ => false,
        })
    }

    /// Rebuild the indexes from the assertion list (used by tests to check
    /// index consistency).
    pub fn rebuilt_indexes(&self) -> AssertionIndexes {
        AssertionIndexes::build(&self.abox, self.individual_count(), self.role_count())
    }

    pub fn indexes(&self) -> &AssertionIndexes {
        &self.indexes
    }
}

/// Mutable accumulator for an [`Ontology`].
pub struct OntologyBuilder {
    concept_names: Vec<String>,
    concept_ids: HashMap<String, u32>,
    role_names: Vec<String>,
    role_ids: HashMap<String, u32>,
    individual_names: Vec<String>,
    individual_ids: HashMap<String, u32>,
    tbox: Vec<Axiom>,
    abox: Vec<Assertion>,
}

impl OntologyBuilder {
    pub fn new() -> Self {
        OntologyBuilder {
            concept_names: Vec::new(),
            concept_ids: HashMap::new(),
            role_names: Vec::new(),
            role_ids: HashMap::new(),
            individual_names: Vec::new(),
            individual_ids: HashMap::new(),
            tbox: Vec::new(),
            abox: Vec::new(),
        }
    }

    pub fn concept(&mut self, name: &str) -> ConceptName {
        if let Some(&id) = self.concept_ids.get(name) {
            return ConceptName(id);
        }
        let id = self.concept_names.len() as u32;
        self.concept_names.push(String::from(name));
        self.concept_ids.insert(String::from(name), id);
        ConceptName(id)
    }

    pub fn role(&mut self, name: &str) -> RoleName {
        if let Some(&id) = self.role_ids.get(name) {
            return RoleName(id);
        }
        let id = self.role_names.len() as u32;
        self.role_names.push(String::from(name));
        self.role_ids.insert(String::from(name), id);
        RoleName(id)
    }

    pub fn individual(&mut self, name: &str) -> Individual {
        if let Some(&id) = self.individual_ids.get(name) {
            return Individual(id);
        }
        let id = self.individual_names.len() as u32;
        self.individual_names.push(String::from(name));
        self.individual_ids.insert(String::from(name), id);
        Individual(id)
    }

    pub fn axiom(&mut self, axiom: Axiom) {
        self.tbox.push(axiom);
    }

    pub fn subclass(&mut self, lhs: Concept, rhs: Concept) {
        self.tbox.push(Axiom::Gci { lhs, rhs });
    }

    /// `EquivalentClasses(C, D)` expands to `C ⊑ D` and `D ⊑ C` immediately,
    /// so axiom ids are fixed by the source alone.
    pub fn equivalent(&mut self, a: Concept, b: Concept) {
        self.tbox.push(Axiom::Gci { lhs: a.clone(), rhs: b.clone() });
        self.tbox.push(Axiom::Gci { lhs: b, rhs: a });
    }

    pub fn class_assertion(&mut self, class: ConceptName, individual: Individual) -> AssertionId {
        self.push_assertion(Assertion::ClassOf { individual, class })
    }

    pub fn role_assertion(&mut self, role: Role, subject: Individual, object: Individual) -> AssertionId {
        self.push_assertion(Assertion::RoleOf { role, subject, object })
    }

    pub fn different(&mut self, a: Individual, b: Individual) -> AssertionId {
        self.push_assertion(Assertion::Different(a, b))
    }

    fn push_assertion(&mut self, a: Assertion) -> AssertionId {
        let id = AssertionId(self.abox.len() as u32);
        self.abox.push(a);
        id
    }

    pub fn finish(self) -> Ontology {
        let indexes = AssertionIndexes::build(&self.abox, self.individual_names.len(), self.role_names.len());
        Ontology {
            concept_names: self.concept_names,
            role_names: self.role_names,
            individual_names: self.individual_names,
            tbox: self.tbox,
            abox: self.abox,
            indexes,
        }
    }
}

impl Default for OntologyBuilder {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn role_inversion_is_an_involution() {
        let r = Role::named(RoleName(0));
        assert_eq!(r.inv(), Role::inverse_of(RoleName(0)));
        assert_eq!(r.inv().inv(), r);
    }

    #[test]
    fn role_equality_is_structural() {
        assert_eq!(Role::named(RoleName(1)), Role::named(RoleName(1)));
        assert_ne!(Role::named(RoleName(1)), Role::inverse_of(RoleName(1)));
        assert_ne!(Role::named(RoleName(1)), Role::named(RoleName(2)));
    }

    #[test]
    fn assertion_ids_are_dense_and_stable() {
        let mut b = OntologyBuilder::new();
        let c = b.concept("B");
        let r = b.role("R0");
        let a = b.individual("a");
        let x = b.individual("b");
        let i0 = b.role_assertion(Role::named(r), a, x);
        let i1 = b.class_assertion(c, x);
        let i2 = b.different(a, x);
        assert_eq!((i0, i1, i2), (AssertionId(0), AssertionId(1), AssertionId(2)));
        let o = b.finish();
        assert_eq!(o.abox().len(), 3);
        assert_eq!(o.role_assertions_of(a), &[AssertionId(0)]);
        assert_eq!(o.class_assertions_of(x), &[AssertionId(1)]);
        assert_eq!(o.inequalities_of(a), &[AssertionId(2)]);
        assert_eq!(o.inequalities_of(x), &[AssertionId(2)]);
        assert_eq!(o.assertions_of_role(r), &[AssertionId(0)]);
    }

    #[test]
    fn rebuilding_indexes_is_identity() {
        let mut b = OntologyBuilder::new();
        let r = b.role("R");
        let inds: Vec<_> = (0..6).map(|i| b.individual(&alloc::format!("i{i}"))).collect();
        for w in inds.windows(2) {
            b.role_assertion(Role::named(r), w[0], w[1]);
        }
        b.role_assertion(Role::inverse_of(r), inds[5], inds[0]);
        let c = b.concept("C");
        b.class_assertion(c, inds[3]);
        let o = b.finish();
        assert_eq!(*o.indexes(), o.rebuilt_indexes());
    }

    #[test]
    fn quantifier_depth_matches_simple_form() {
        let r1 = Role::named(RoleName(0));
        let r2 = Role::named(RoleName(1));
        let a = Concept::Atomic(ConceptName(0));
        assert_eq!(a.quantifier_depth(), 0);
        let one = Concept::some(r1, a.clone());
        assert_eq!(one.quantifier_depth(), 1);
        let two = Concept::some(r1, Concept::and(a.clone(), Concept::some(r2, a.clone())));
        assert_eq!(two.quantifier_depth(), 2);
        assert!(one.quantifier_depth() < 2 && two.quantifier_depth() >= 2);
    }
}
