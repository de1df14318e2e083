//! Zariski closures of finitely generated matrix groups.
//!
//! The closure is described by the Lie algebra of its identity component
//! together with one representative per component. The Lie algebra is
//! grown from the algebras of the one-generator groups `G(a)` and closed
//! under conjugation; components are found by a breadth-first walk over
//! products of generators, testing membership in the identity component.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::jordan::{log_unipotent, multiplicative_jordan, JordanPair};
use crate::liealg::{
    cartan_subalgebra_with, centralizer_in, conjugate_with_inverse, generated_subalgebra, split_semisimple_nilpotent,
    LieSubalgebra, CARTAN_TRIALS,
};
use crate::linalg::{rational_form, Matrix, Subspace};
use crate::multrel::{relations_with, MultrelConfig};
use crate::torus::{diagonalize_toral, toral_algebra_of_lattice, torus_contains, DiagonalizedTorus};

#[derive(Clone, Debug)]
pub struct ClosureConfig {
    /// Cap on the absolute degree of any splitting field.
    pub max_field_degree: usize,
    /// Longest product explored while enumerating components.
    pub max_bfs_length: usize,
    pub time_budget: Option<Duration>,
    /// Seed for the Cartan subalgebra search.
    pub seed: u64,
    pub cartan_trials: usize,
    pub multrel: MultrelConfig,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig {
            max_field_degree: 64,
            max_bfs_length: 20,
            time_budget: None,
            seed: 0,
            cartan_trials: CARTAN_TRIALS,
            multrel: MultrelConfig::default(),
        }
    }
}

/// The closure `G`: `Lie(G)` and one element of each component, identity
/// first.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupDescription<F: Field> {
    pub n: usize,
    pub lie_algebra: LieSubalgebra<F>,
    pub components: Vec<Matrix<F>>,
    /// Whether every relation lattice used was certified complete.
    pub certified: bool,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ClosureTrace {
    /// Number of times the Lie algebra was rebuilt from scratch.
    pub rounds: usize,
    pub dim_history: Vec<usize>,
    /// Longest product length reached in each round's enumeration.
    pub bfs_lengths: Vec<usize>,
    pub multrel_calls: usize,
    pub multrel_time: Duration,
    /// Largest degree of a field holding the eigenvalues passed to the
    /// relation engine.
    pub multrel_max_degree: usize,
    pub membership_calls: usize,
    pub membership_time: Duration,
    /// Largest degree of a field used to diagonalize a torus.
    pub torus_max_degree: usize,
    pub total_time: Duration,
}

/// A failed closure computation with the trace gathered so far.
#[derive(Debug, thiserror::Error)]
#[error("{error}")]
pub struct ClosureFailure {
    pub error: Error,
    pub trace: ClosureTrace,
}

/// Shared state of one computation: configuration, counters and caches
/// keyed by matrices.
pub struct Engine<F: Field> {
    field: F,
    n: usize,
    pub config: ClosureConfig,
    pub trace: ClosureTrace,
    certified: bool,
    start: Instant,
    jordan: HashMap<Matrix<F>, JordanPair<F>>,
    semisimple: HashMap<Matrix<F>, (LieSubalgebra<F>, bool)>,
    tori: HashMap<Vec<Vec<F::Elem>>, DiagonalizedTorus<F>>,
    members: HashMap<Matrix<F>, bool>,
    members_of: Option<LieSubalgebra<F>>,
}

impl<F: Field> Engine<F> {
    pub fn new(field: F, n: usize, config: ClosureConfig) -> Self {
        Engine {
            field,
            n,
            config,
            trace: ClosureTrace::default(),
            certified: true,
            start: Instant::now(),
            jordan: HashMap::new(),
            semisimple: HashMap::new(),
            tori: HashMap::new(),
            members: HashMap::new(),
            members_of: None,
        }
    }

    /// Conjunction of the certification flags of all relation lattices
    /// computed so far.
    pub fn certified(&self) -> bool {
        self.certified
    }

    fn check_budget(&self) -> Result<()> {
        if let Some(b) = self.config.time_budget {
            if self.start.elapsed() > b {
                return Err(Error::BudgetExhausted(format!("time budget of {:.1}s", b.as_secs_f64())));
            }
        }
        Ok(())
    }

    pub fn jordan(&mut self, g: &Matrix<F>) -> Result<JordanPair<F>> {
        if let Some(j) = self.jordan.get(g) {
            return Ok(j.clone());
        }
        let j = multiplicative_jordan(g)?;
        self.jordan.insert(g.clone(), j.clone());
        Ok(j)
    }

    pub fn lie_of_unipotent(&self, u: &Matrix<F>) -> Result<LieSubalgebra<F>> {
        let l = log_unipotent(u)?;
        Ok(generated_subalgebra(&self.field, self.n, &[l]))
    }

    /// `Lie(G(s))` for semisimple `s`: diagonalize, compute the relation
    /// lattice of the eigenvalues, and conjugate its toral algebra back.
    pub fn lie_of_semisimple(&mut self, s: &Matrix<F>) -> Result<(LieSubalgebra<F>, bool)> {
        if let Some(r) = self.semisimple.get(s) {
            return Ok(r.clone());
        }
        let n = self.n;
        let t = diagonalize_toral(&self.field, n, std::slice::from_ref(s), self.config.max_field_degree)?;
        let k = t.field().clone();
        let start = Instant::now();
        let rel = relations_with(&k, &t.diagonals[0], &self.config.multrel);
        self.trace.multrel_calls += 1;
        self.trace.multrel_time += start.elapsed();
        self.trace.multrel_max_degree = self.trace.multrel_max_degree.max(k.degree());
        self.certified &= rel.certified;
        let diag = toral_algebra_of_lattice(&k, &rel.lattice);
        let back: Vec<Vec<_>> = diag
            .basis()
            .iter()
            .map(|d| t.c_inv.mul(&Matrix::from_flat(k.clone(), n, d)).mul(&t.c).into_flat())
            .collect();
        let v = Subspace::from_vectors(k.clone(), n * n, back);
        let space = rational_form(&v, &t.embedding)?;
        let out = (LieSubalgebra::from_space_unchecked(n, space), rel.certified);
        self.semisimple.insert(s.clone(), out.clone());
        Ok(out)
    }

    /// `Lie(G(a))` for `a` semisimple or unipotent.
    fn lie_of_element(&mut self, a: &Matrix<F>) -> Result<LieSubalgebra<F>> {
        let j = self.jordan(a)?;
        let mut l = self.lie_of_unipotent(&j.unipotent)?;
        if !j.semisimple.is_identity() {
            let (ls, _) = self.lie_of_semisimple(&j.semisimple)?;
            l = l.join(&ls);
        }
        Ok(l)
    }

    fn torus_for(&mut self, t: &Subspace<F>) -> Result<DiagonalizedTorus<F>> {
        let key = t.basis().to_vec();
        if let Some(d) = self.tori.get(&key) {
            return Ok(d.clone());
        }
        let basis: Vec<Matrix<F>> = t.basis().iter().map(|v| Matrix::from_flat(self.field.clone(), self.n, v)).collect();
        let d = diagonalize_toral(&self.field, self.n, &basis, self.config.max_field_degree)?;
        self.trace.torus_max_degree = self.trace.torus_max_degree.max(d.field().degree());
        self.tori.insert(key, d.clone());
        Ok(d)
    }

    /// Whether `g` lies in the connected group with Lie algebra `g_lie`.
    pub fn member_connected(&mut self, g_lie: &LieSubalgebra<F>, g: &Matrix<F>) -> Result<bool> {
        if self.members_of.as_ref() != Some(g_lie) {
            self.members.clear();
            self.members_of = Some(g_lie.clone());
        }
        if let Some(&b) = self.members.get(g) {
            return Ok(b);
        }
        let start = Instant::now();
        self.trace.membership_calls += 1;
        let r = self.member_connected_uncached(g_lie, g);
        self.trace.membership_time += start.elapsed();
        let r = r?;
        self.members.insert(g.clone(), r);
        Ok(r)
    }

    fn member_connected_uncached(&mut self, g_lie: &LieSubalgebra<F>, g: &Matrix<F>) -> Result<bool> {
        let j = self.jordan(g)?;
        let (s, u) = (j.semisimple, j.unipotent);
        if !u.is_identity() && !g_lie.contains(&log_unipotent(&u)?) {
            return Ok(false);
        }
        if s.is_identity() {
            return Ok(true);
        }
        let s_inv = s.inverse().ok_or(Error::Singular)?;
        if !g_lie.is_normalized_by(&s, &s_inv) {
            return Ok(false);
        }
        let z = centralizer_in(g_lie, &s);
        let h = cartan_subalgebra_with(&z, self.config.seed, self.config.cartan_trials)?;
        let (t, _) = split_semisimple_nilpotent(&h)?;
        let torus = self.torus_for(&t)?;
        Ok(torus_contains(&torus, &s))
    }

    /// Runs the closure computation on `gens`.
    pub fn closure(&mut self, gens: &[Matrix<F>]) -> Result<GroupDescription<F>> {
        let n = self.n;
        let f = self.field.clone();
        let id = Matrix::identity(f.clone(), n);
        for g in gens {
            if (g.rows(), g.cols()) != (n, n) {
                return Err(Error::DimensionMismatch(format!("expected {n}x{n}, got {}x{}", g.rows(), g.cols())));
            }
        }
        // working set: Jordan parts of the generators and their inverses
        let mut work: Vec<Matrix<F>> = Vec::new();
        let push = |m: Matrix<F>, work: &mut Vec<Matrix<F>>| {
            if !m.is_identity() && !work.contains(&m) {
                work.push(m);
            }
        };
        for g in gens {
            let j = self.jordan(g)?;
            push(j.semisimple.clone(), &mut work);
            push(j.unipotent.clone(), &mut work);
        }
        for g in gens {
            let j = self.jordan(g)?;
            push(j.semisimple.inverse().ok_or(Error::Singular)?, &mut work);
            push(j.unipotent.inverse().ok_or(Error::Singular)?, &mut work);
        }
        let mut inverses: Vec<Matrix<F>> = work.iter().map(|a| a.inverse().unwrap()).collect();
        loop {
            self.trace.rounds += 1;
            // step 1
            let mut parts = Vec::new();
            for a in &work {
                self.check_budget()?;
                parts.extend(self.lie_of_element(a)?.basis());
            }
            let mut lie = generated_subalgebra(&f, n, &parts);
            // step 2
            loop {
                let mut grew = false;
                for (a, ai) in work.iter().zip(&inverses) {
                    if !lie.is_normalized_by(a, ai) {
                        lie = lie.join(&conjugate_with_inverse(a, ai, &lie));
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
            }
            if let Some(&prev) = self.trace.dim_history.last() {
                if lie.dim() <= prev {
                    return Err(Error::InvariantViolation(format!(
                        "Lie algebra dimension did not grow on restart ({prev} -> {})",
                        lie.dim()
                    )));
                }
            }
            self.trace.dim_history.push(lie.dim());
            // step 3
            let mut reps: Vec<Matrix<F>> = vec![id.clone()];
            let mut rep_inv: Vec<Matrix<F>> = vec![id.clone()];
            let mut frontier: Vec<Matrix<F>> = vec![id.clone()];
            let mut length = 0;
            let mut enlarged: Option<Vec<Matrix<F>>> = None;
            'bfs: while !frontier.is_empty() {
                length += 1;
                if length > self.config.max_bfs_length {
                    self.trace.bfs_lengths.push(length - 1);
                    return Err(Error::BudgetExhausted(format!(
                        "no stable component set within products of length {}",
                        self.config.max_bfs_length
                    )));
                }
                let mut next = Vec::new();
                for c in &frontier {
                    for a in &work {
                        self.check_budget()?;
                        let p = c.mul(a);
                        let mut known = false;
                        for bi in &rep_inv {
                            if self.member_connected(&lie, &p.mul(bi))? {
                                known = true;
                                break;
                            }
                        }
                        if known {
                            continue;
                        }
                        let j = self.jordan(&p)?;
                        let mut missing = Vec::new();
                        if !j.unipotent.is_identity() && !lie.contains_algebra(&self.lie_of_unipotent(&j.unipotent)?) {
                            missing.push(j.unipotent.clone());
                        }
                        if !j.semisimple.is_identity() && !lie.contains_algebra(&self.lie_of_semisimple(&j.semisimple)?.0) {
                            missing.push(j.semisimple.clone());
                        }
                        if !missing.is_empty() {
                            enlarged = Some(missing);
                            break 'bfs;
                        }
                        rep_inv.push(p.inverse().ok_or(Error::Singular)?);
                        reps.push(p.clone());
                        next.push(p);
                    }
                }
                frontier = next;
            }
            self.trace.bfs_lengths.push(length);
            match enlarged {
                Some(extra) => {
                    for m in extra {
                        if !work.contains(&m) {
                            inverses.push(m.inverse().ok_or(Error::Singular)?);
                            work.push(m);
                        }
                    }
                }
                None => {
                    return Ok(GroupDescription { n, lie_algebra: lie, components: reps, certified: self.certified });
                }
            }
        }
    }
}

/// `Lie(G(u)) = span{log u}` for unipotent `u`.
pub fn lie_of_unipotent<F: Field>(u: &Matrix<F>) -> Result<LieSubalgebra<F>> {
    Engine::new(u.field().clone(), u.rows(), ClosureConfig::default()).lie_of_unipotent(u)
}

/// `Lie(G(s))` for semisimple invertible `s`, with the certification flag
/// of the relation lattice used.
pub fn lie_of_semisimple<F: Field>(s: &Matrix<F>, config: &ClosureConfig) -> Result<(LieSubalgebra<F>, bool)> {
    Engine::new(s.field().clone(), s.rows(), config.clone()).lie_of_semisimple(s)
}

/// Whether `g` lies in the connected algebraic group with Lie algebra
/// `g_lie`.
pub fn member_connected<F: Field>(g_lie: &LieSubalgebra<F>, g: &Matrix<F>, config: &ClosureConfig) -> Result<bool> {
    Engine::new(g.field().clone(), g.rows(), config.clone()).member_connected(g_lie, g)
}

/// The Zariski closure of the group generated by `gens`, all of size `n`.
pub fn zariski_closure<F: Field>(
    field: &F,
    n: usize,
    gens: &[Matrix<F>],
    config: &ClosureConfig,
) -> std::result::Result<(GroupDescription<F>, ClosureTrace), ClosureFailure> {
    let mut engine = Engine::new(field.clone(), n, config.clone());
    let r = engine.closure(gens);
    engine.trace.total_time = engine.start.elapsed();
    match r {
        Ok(g) => Ok((g, engine.trace)),
        Err(error) => Err(ClosureFailure { error, trace: engine.trace }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::integer::rat;
    use crate::field::{Rationals, QQ};

    fn m(rows: &[Vec<i64>]) -> Matrix<Rationals> {
        Matrix::from_ints(QQ, rows)
    }

    fn close(gens: &[Matrix<Rationals>]) -> (GroupDescription<Rationals>, ClosureTrace) {
        zariski_closure(&QQ, gens[0].rows(), gens, &ClosureConfig::default()).unwrap()
    }

    #[test]
    fn unipotent_examples() {
        assert_eq!(lie_of_unipotent(&Matrix::identity(QQ, 2)).unwrap().dim(), 0);
        let a = lie_of_unipotent(&m(&[vec![1, 1], vec![0, 1]])).unwrap();
        let b = lie_of_unipotent(&m(&[vec![1, 2], vec![0, 1]])).unwrap();
        assert_eq!(a, b);
        assert!(a.contains(&m(&[vec![0, 1], vec![0, 0]])));
    }

    #[test]
    fn semisimple_examples() {
        let cfg = ClosureConfig::default();
        let (l, c) = lie_of_semisimple(&m(&[vec![2, 0], vec![0, 4]]), &cfg).unwrap();
        assert!(c);
        assert_eq!(l.dim(), 1);
        assert!(l.contains(&m(&[vec![1, 0], vec![0, 2]])));
        assert_eq!(lie_of_semisimple(&m(&[vec![-1, 0], vec![0, 1]]), &cfg).unwrap().0.dim(), 0);
        assert_eq!(lie_of_semisimple(&m(&[vec![0, -1], vec![1, 0]]), &cfg).unwrap().0.dim(), 0);
        let (l, _) = lie_of_semisimple(&m(&[vec![2, 0], vec![0, 2]]), &cfg).unwrap();
        assert_eq!(l.dim(), 1);
        assert!(l.contains(&Matrix::identity(QQ, 2)));
        // a hyperbolic rotation: eigenvalues 2 +- sqrt3 are units
        let (l, c) = lie_of_semisimple(&m(&[vec![2, 3], vec![1, 2]]), &cfg).unwrap();
        assert!(c);
        assert_eq!(l.dim(), 1);
        assert!(l.contains(&m(&[vec![0, 3], vec![1, 0]])));
    }

    #[test]
    fn membership_examples() {
        let cfg = ClosureConfig::default();
        let sl2 = generated_subalgebra(&QQ, 2, &[m(&[vec![0, 1], vec![0, 0]]), m(&[vec![0, 0], vec![1, 0]])]);
        assert!(member_connected(&sl2, &m(&[vec![1, 1], vec![0, 1]]), &cfg).unwrap());
        let d = Matrix::diagonal(QQ, &[rat(2, 1), rat(1, 2)]);
        assert!(member_connected(&sl2, &d, &cfg).unwrap());
        assert!(!member_connected(&sl2, &m(&[vec![2, 0], vec![0, 3]]), &cfg).unwrap());
        assert!(!member_connected(&sl2, &m(&[vec![2, 0], vec![0, 2]]), &cfg).unwrap());
        assert!(member_connected(&sl2, &m(&[vec![0, -1], vec![1, 0]]), &cfg).unwrap());
    }

    #[test]
    fn closure_examples() {
        let (g, _) = close(&[Matrix::identity(QQ, 2)]);
        assert_eq!((g.lie_algebra.dim(), g.components.len()), (0, 1));
        let (g, t) = close(&[Matrix::diagonal(QQ, &[rat(2, 1), rat(1, 2)])]);
        assert_eq!((g.lie_algebra.dim(), g.components.len()), (1, 1));
        assert!(g.lie_algebra.contains(&m(&[vec![1, 0], vec![0, -1]])));
        assert!(g.certified);
        assert!(t.multrel_calls > 0);
        let (g, _) = close(&[m(&[vec![1, 1], vec![0, 1]]), m(&[vec![1, 0], vec![1, 1]])]);
        assert_eq!((g.lie_algebra.dim(), g.components.len()), (3, 1));
        let (g, _) = close(&[m(&[vec![-1, 0], vec![0, 1]])]);
        assert_eq!((g.lie_algebra.dim(), g.components.len()), (0, 2));
        assert!(g.components[0].is_identity());
    }

    #[test]
    fn torus_with_finite_part() {
        // diag(-2, 1): closure is {diag(t, 1)} with t in C*, connected
        let (g, _) = close(&[m(&[vec![-2, 0], vec![0, 1]])]);
        assert_eq!((g.lie_algebra.dim(), g.components.len()), (1, 1));
        // -I already lies on the torus diag(t, 1/t)
        let (g, _) = close(&[m(&[vec![-1, 0], vec![0, -1]]), Matrix::diagonal(QQ, &[rat(4, 1), rat(1, 4)])]);
        assert_eq!((g.lie_algebra.dim(), g.components.len()), (1, 1));
        let (g, _) = close(&[m(&[vec![-1, 0], vec![0, 1]]), Matrix::diagonal(QQ, &[rat(4, 1), rat(1, 4)])]);
        assert_eq!((g.lie_algebra.dim(), g.components.len()), (1, 2));
    }
}
