//! Grounded FOND task representation and the state/regression algebra.
//!
//! A task is a set of finite-domain variables, a complete initial state, a
//! partial goal state, and a set of (possibly non-deterministic) actions.
//! Everything downstream — search, regression, heuristics, deadend
//! generalization — is written against the small algebra defined here:
//! the `⊕` update operator ([`PartialState::update`]), consistency,
//! applicability, outcome application, and logical regression.

use serde::{Deserialize, Serialize};

pub type VarId = usize;
pub type Val = u32;
pub type ActionId = usize;
pub type OutcomeIdx = usize;

/// A finite-domain state variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub id: VarId,
    pub name: String,
    pub domain_size: Val,
    /// One display name per value; `value_names.len() == domain_size`.
    pub value_names: Vec<String>,
}

impl Variable {
    pub fn binary(id: VarId, name: impl Into<String>) -> Self {
        Variable {
            id,
            name: name.into(),
            domain_size: 2,
            value_names: vec!["false".to_string(), "true".to_string()],
        }
    }
}

/// A partial assignment to the task variables. Absence of a variable means
/// "undefined" (⊥). Assignments are kept sorted by variable id, which gives
/// deterministic iteration and cheap merge-based operations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartialState {
    assignments: Vec<(VarId, Val)>,
}

impl PartialState {
    pub fn empty() -> Self {
        PartialState::default()
    }

    /// Build from pairs; later entries for the same variable win.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, Val)>) -> Self {
        let mut ps = PartialState::empty();
        for (v, val) in pairs {
            ps.set(v, val);
        }
        ps
    }

    pub fn get(&self, var: VarId) -> Option<Val> {
        self.assignments
            .binary_search_by_key(&var, |&(v, _)| v)
            .ok()
            .map(|i| self.assignments[i].1)
    }

    pub fn defines(&self, var: VarId) -> bool {
        self.get(var).is_some()
    }

    pub fn set(&mut self, var: VarId, val: Val) {
        match self.assignments.binary_search_by_key(&var, |&(v, _)| v) {
            Ok(i) => self.assignments[i].1 = val,
            Err(i) => self.assignments.insert(i, (var, val)),
        }
    }

    pub fn unset(&mut self, var: VarId) {
        if let Ok(i) = self.assignments.binary_search_by_key(&var, |&(v, _)| v) {
            self.assignments.remove(i);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, Val)> + '_ {
        self.assignments.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// The `⊕` update operator: `self ⊕ other`. Values defined in `other`
    /// win; all other values are taken from `self`.
    pub fn update(&self, other: &PartialState) -> PartialState {
        let mut out = Vec::with_capacity(self.assignments.len() + other.assignments.len());
        let (mut i, mut j) = (0, 0);
        while i < self.assignments.len() && j < other.assignments.len() {
            let (va, _) = self.assignments[i];
            let (vb, _) = other.assignments[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    out.push(self.assignments[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.assignments[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(other.assignments[j]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.assignments[i..]);
        out.extend_from_slice(&other.assignments[j..]);
        PartialState { assignments: out }
    }

    /// True iff no variable is assigned conflicting values by the two states.
    pub fn consistent(&self, other: &PartialState) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.assignments.len() && j < other.assignments.len() {
            let (va, a) = self.assignments[i];
            let (vb, b) = other.assignments[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a != b {
                        return false;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        true
    }

    /// True iff `other` defines every variable this state defines, with the
    /// same value (i.e. `other ⊇ self` as an assignment set).
    pub fn subsumed_by(&self, other: &PartialState) -> bool {
        self.iter().all(|(v, val)| other.get(v) == Some(val))
    }
}

/// A complete assignment: one value per variable, densely stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompleteState {
    values: Vec<Val>,
}

impl CompleteState {
    pub fn new(values: Vec<Val>) -> Self {
        CompleteState { values }
    }

    pub fn get(&self, var: VarId) -> Val {
        self.values[var]
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Val] {
        &self.values
    }

    pub fn to_partial(&self) -> PartialState {
        PartialState {
            assignments: self.values.iter().copied().enumerate().collect(),
        }
    }

    /// True iff this state extends `p` on `p`'s support.
    pub fn satisfies(&self, p: &PartialState) -> bool {
        p.iter().all(|(v, val)| self.values[v] == val)
    }

    /// `self ⊕ effect`, producing a new complete state.
    pub fn apply(&self, effect: &PartialState) -> CompleteState {
        let mut values = self.values.clone();
        for (v, val) in effect.iter() {
            values[v] = val;
        }
        CompleteState { values }
    }
}

/// One non-deterministic outcome of an action: a partial assignment applied
/// on top of the current state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub action_id: ActionId,
    pub outcome_index: OutcomeIdx,
    pub effect: PartialState,
}

/// A grounded (possibly non-deterministic) action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Action {
    pub id: ActionId,
    /// Grounded name, whitespace-separated: `"move loc1 loc2"`.
    pub name: String,
    pub precondition: PartialState,
    pub outcomes: Vec<Outcome>,
    pub cost: u32,
}

impl Action {
    pub fn is_deterministic(&self) -> bool {
        self.outcomes.len() == 1
    }
}

/// One entry of the all-outcomes determinization: a deterministic action per
/// (action, outcome) pair, precondition and effect copied verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminizedAction {
    pub id: usize,
    pub source: (ActionId, OutcomeIdx),
    pub precondition: PartialState,
    pub effect: PartialState,
    pub cost: u32,
}

/// A grounded FOND planning task.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FondTask {
    pub variables: Vec<Variable>,
    pub initial_state: CompleteState,
    pub goal: PartialState,
    pub actions: Vec<Action>,
}

impl FondTask {
    /// Check the structural invariants; used by constructors and tests.
    pub fn validate(&self) -> Result<(), String> {
        if self.initial_state.num_vars() != self.variables.len() {
            return Err("initial state size does not match variable count".into());
        }
        for (v, var) in self.variables.iter().enumerate() {
            if var.id != v {
                return Err(format!("variable {v} has mismatched id {}", var.id));
            }
            if var.domain_size < 1 {
                return Err(format!("variable {} has empty domain", var.name));
            }
            if var.value_names.len() != var.domain_size as usize {
                return Err(format!("variable {} has wrong value_names length", var.name));
            }
            if self.initial_state.get(v) >= var.domain_size {
                return Err(format!("initial value of {} out of domain", var.name));
            }
        }
        let check_ps = |ps: &PartialState, what: &str| -> Result<(), String> {
            for (v, val) in ps.iter() {
                if v >= self.variables.len() {
                    return Err(format!("{what} references undeclared variable {v}"));
                }
                if val >= self.variables[v].domain_size {
                    return Err(format!("{what} assigns out-of-domain value to variable {v}"));
                }
            }
            Ok(())
        };
        check_ps(&self.goal, "goal")?;
        for (i, a) in self.actions.iter().enumerate() {
            if a.id != i {
                return Err(format!("action {i} has mismatched id {}", a.id));
            }
            if a.outcomes.is_empty() {
                return Err(format!("action {} has no outcomes", a.name));
            }
            check_ps(&a.precondition, &format!("precondition of {}", a.name))?;
            for (k, o) in a.outcomes.iter().enumerate() {
                if o.action_id != i || o.outcome_index != k {
                    return Err(format!("outcome indices of {} are inconsistent", a.name));
                }
                check_ps(&o.effect, &format!("outcome {k} of {}", a.name))?;
            }
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    /// All-outcomes determinization, ordered by (action id, outcome index).
    pub fn determinize(&self) -> Vec<DeterminizedAction> {
        let mut dets = Vec::new();
        for a in &self.actions {
            for o in &a.outcomes {
                dets.push(DeterminizedAction {
                    id: dets.len(),
                    source: (a.id, o.outcome_index),
                    precondition: a.precondition.clone(),
                    effect: o.effect.clone(),
                    cost: a.cost,
                });
            }
        }
        dets
    }

    /// `CanR(p)`: every (action, outcome) pair whose outcome is consistent
    /// with `p`, in (action id, outcome index) order.
    pub fn can_regress_set(&self, p: &PartialState) -> Vec<(ActionId, OutcomeIdx)> {
        let mut out = Vec::new();
        for a in &self.actions {
            for o in &a.outcomes {
                if p.consistent(&o.effect) {
                    out.push((a.id, o.outcome_index));
                }
            }
        }
        out
    }

    /// Render a partial state with variable/value display names.
    pub fn format_partial(&self, ps: &PartialState) -> String {
        let parts: Vec<String> = ps
            .iter()
            .map(|(v, val)| {
                format!(
                    "{}={}",
                    self.variables[v].name, self.variables[v].value_names[val as usize]
                )
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// Debug dump: one line per variable, action, and outcome.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for v in &self.variables {
            s.push_str(&format!(
                "var {} \"{}\" domain {}\n",
                v.id, v.name, v.domain_size
            ));
        }
        s.push_str(&format!("init {:?}\n", self.initial_state.values()));
        s.push_str(&format!("goal {}\n", self.format_partial(&self.goal)));
        for a in &self.actions {
            s.push_str(&format!(
                "action {} \"{}\" pre {}\n",
                a.id,
                a.name,
                self.format_partial(&a.precondition)
            ));
            for o in &a.outcomes {
                s.push_str(&format!(
                    "  outcome {} eff {}\n",
                    o.outcome_index,
                    self.format_partial(&o.effect)
                ));
            }
        }
        s
    }
}

/// True iff `a` can be executed in `s`.
pub fn applicable(s: &CompleteState, a: &Action) -> bool {
    s.satisfies(&a.precondition)
}

/// Apply outcome `o` of an applicable action in `s`: `s ⊕ eff(o)`.
///
/// Callers must ensure the owning action is applicable; this is checked in
/// debug builds only.
pub fn apply_outcome(s: &CompleteState, a: &Action, o: &Outcome) -> CompleteState {
    debug_assert!(applicable(s, a), "apply_outcome on inapplicable action");
    debug_assert_eq!(o.action_id, a.id);
    s.apply(&o.effect)
}

/// Logical regression of `p` through action `a` with outcome `o`.
///
/// Returns `None` when `p` and the outcome's effect are inconsistent
/// (regression undefined). Otherwise, per variable: the precondition value
/// if defined; undefined if the outcome establishes `p`'s value; `p`'s
/// value otherwise.
pub fn regress(p: &PartialState, a: &Action, o: &Outcome) -> Option<PartialState> {
    if !p.consistent(&o.effect) {
        return None;
    }
    let mut out = a.precondition.clone();
    for (v, val) in p.iter() {
        if a.precondition.defines(v) {
            continue;
        }
        // o consistent with p, so a defined o(v) equals val; drop it then.
        if o.effect.get(v) == Some(val) {
            continue;
        }
        out.set(v, val);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(pairs: &[(VarId, Val)]) -> PartialState {
        PartialState::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn update_overwrites_and_keeps() {
        assert_eq!(ps(&[(0, 0), (1, 1)]).update(&ps(&[(1, 0)])), ps(&[(0, 0), (1, 0)]));
        let p = ps(&[(0, 1), (3, 2)]);
        assert_eq!(p.update(&PartialState::empty()), p);
        assert_eq!(PartialState::empty().update(&ps(&[(0, 1)])), ps(&[(0, 1)]));
    }

    #[test]
    fn consistency_cases() {
        assert!(ps(&[(0, 0)]).consistent(&ps(&[(1, 1)])));
        assert!(!ps(&[(0, 0)]).consistent(&ps(&[(0, 1)])));
        let p = ps(&[(0, 0), (2, 1)]);
        assert!(p.consistent(&p));
        // symmetry
        let q = ps(&[(2, 1), (3, 0)]);
        assert_eq!(p.consistent(&q), q.consistent(&p));
    }

    fn act(id: ActionId, pre: PartialState, effs: Vec<PartialState>) -> Action {
        Action {
            id,
            name: format!("a{id}"),
            precondition: pre,
            outcomes: effs
                .into_iter()
                .enumerate()
                .map(|(k, effect)| Outcome { action_id: id, outcome_index: k, effect })
                .collect(),
            cost: 1,
        }
    }

    #[test]
    fn applicability() {
        let s = CompleteState::new(vec![0, 1]);
        assert!(applicable(&s, &act(0, ps(&[(0, 0)]), vec![ps(&[])])));
        assert!(!applicable(&s, &act(0, ps(&[(0, 1)]), vec![ps(&[])])));
        assert!(applicable(&s, &act(0, ps(&[]), vec![ps(&[])])));
    }

    #[test]
    fn outcome_application() {
        let s = CompleteState::new(vec![0, 0]);
        let a = act(0, ps(&[]), vec![ps(&[(0, 1)]), ps(&[]), ps(&[(0, 0)])]);
        assert_eq!(apply_outcome(&s, &a, &a.outcomes[0]), CompleteState::new(vec![1, 0]));
        assert_eq!(apply_outcome(&s, &a, &a.outcomes[1]), s);
        assert_eq!(apply_outcome(&s, &a, &a.outcomes[2]), s);
    }

    #[test]
    fn regression_cases() {
        // pre {v1=1}, outcome sets v0=1, target {v0=1} -> {v1=1}
        let a = act(0, ps(&[(1, 1)]), vec![ps(&[(0, 1)])]);
        assert_eq!(regress(&ps(&[(0, 1)]), &a, &a.outcomes[0]), Some(ps(&[(1, 1)])));
        // no-op action leaves p
        let noop = act(0, ps(&[]), vec![ps(&[])]);
        assert_eq!(regress(&ps(&[(0, 1)]), &noop, &noop.outcomes[0]), Some(ps(&[(0, 1)])));
        // inconsistent p and o -> undefined
        let b = act(0, ps(&[]), vec![ps(&[(0, 0)])]);
        assert_eq!(regress(&ps(&[(0, 1)]), &b, &b.outcomes[0]), None);
    }

    fn micro_task(actions: Vec<Action>) -> FondTask {
        let nv = 3;
        FondTask {
            variables: (0..nv).map(|i| Variable::binary(i, format!("v{i}"))).collect(),
            initial_state: CompleteState::new(vec![0; nv]),
            goal: ps(&[(2, 1)]),
            actions,
        }
    }

    #[test]
    fn can_regress_enumeration() {
        let t = micro_task(vec![
            act(0, ps(&[]), vec![ps(&[(0, 1)])]),
            act(1, ps(&[]), vec![ps(&[(1, 0)])]),
        ]);
        assert_eq!(t.can_regress_set(&ps(&[])), vec![(0, 0), (1, 0)]);
        assert_eq!(t.can_regress_set(&ps(&[(0, 1)])), vec![(0, 0), (1, 0)]);
        let t2 = micro_task(vec![act(0, ps(&[]), vec![ps(&[(0, 0)])])]);
        assert_eq!(t2.can_regress_set(&ps(&[(0, 1)])), vec![]);
    }

    #[test]
    fn determinize_counts_and_order() {
        let t = micro_task(vec![
            act(0, ps(&[]), vec![ps(&[(0, 1)]), ps(&[(1, 1)])]),
            act(1, ps(&[]), vec![ps(&[(2, 1)])]),
        ]);
        let dets = t.determinize();
        assert_eq!(dets.len(), 3);
        assert_eq!(
            dets.iter().map(|d| d.source).collect::<Vec<_>>(),
            vec![(0, 0), (0, 1), (1, 0)]
        );
        // regrouping by source action reconstructs the original set
        for d in &dets {
            let a = &t.actions[d.source.0];
            assert_eq!(d.precondition, a.precondition);
            assert_eq!(d.effect, a.outcomes[d.source.1].effect);
        }
        let t3 = micro_task(vec![act(0, ps(&[]), vec![ps(&[]), ps(&[]), ps(&[])])]);
        assert_eq!(t3.determinize().len(), 3);
    }
}
