//! The operator catalog of the generalized ChK oscillator.
//!
//! Every named operator is constructible from its basis action (the
//! normative form: the Lie-algebra sections are written in terms of basis
//! actions) and, where the source article states one, from an independent
//! constructor expression. `cross_check` compares the two forms exactly on
//! the truncation-safe domain and classifies disagreements.
//!
//! Matrix-unit conventions follow the article:
//! `P^{m,n}_{s,t} U_{k,l} = δ_{k,m} δ_{l,n} U_{s,t}` (superscript = source),
//! with any negative realized index collapsing the term to zero.

use crate::field::FieldElem;
use crate::fock::{basis_indices, matrix_unit, BasisIndex, SparseOp, StateVector};
use crate::poly::{diff_rep_apply, BiPoly, DiffRep, PolyTable};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("generator {0} has no {1:?} form")]
    MissingForm(String, Form),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn val(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Which recipe to realize an operator from.
///
/// `BasisAction` is the normative ground truth. `Constructor` is the
/// article's constructor expression under the reading Z* = Z̄ (Hilbert
/// adjoint). `ConstructorAlt` reads the * of the radial position-operator
/// display as the basis-conjugate dagger instead; cross-checks adjudicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    BasisAction,
    Constructor,
    ConstructorAlt,
}

/// Identifier of a catalog operator. Signed integer parameters follow the
/// convention that a negative realized index kills the term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorId {
    Identity,
    /// Position operators, Eq 13-2.1 / 13-2.2.
    Z,
    Zbar,
    /// Momentum operators: basis action Eq 13-2.5 / 13-2.6, constructor
    /// kernel conjugation K⁻¹ Z K of Eq 13-2.3.
    Zdag,
    Zbardag,
    /// Diagonal phase unitaries of the two Poisson kernels: (−1)^{k+l}
    /// (Eq 13-2.4) and e^{iπ(k+l)/4} (Eq 13-2.19).
    Ks,
    Kr,
    /// Sectorial ladders a_sect^±: Eq 13-2.10, constructor (Z+Z†)/√40.
    ASect(Sign),
    /// Radial ladders a_rad^±: Eq 13-2.24, constructor Eq 13-2.23.
    ARad(Sign),
    N1,
    N2,
    /// Boundary projectors, Eq 13-2.15.
    P1,
    P2,
    /// Radial position operator, Eq 13-2.18 (constructor-only).
    X,
    /// Kernel conjugate Kr⁻¹ X Kr.
    Xdag,
    /// Sectorial Hamiltonian: ladder form a⁺a⁻+a⁻a⁺ (BasisAction) or the
    /// (1/40)-quadratic display (Constructor).
    HSect,
    /// Radial Hamiltonian: Eq 13-2.28 ladder form (BasisAction) or
    /// Eq 13-2.20 (1/4)(X²+(X*)²) (Constructor / ConstructorAlt).
    HRad,
    /// Auxiliary diagonal operator I_B(α,β), Eq 13-2.22.
    IB { alpha: FieldElem, beta: FieldElem },
    /// Boundary ladders a_{•,0}^± and a_{0,•}^±, Eq 13-2.32.
    ABoundRow(Sign),
    ABoundCol(Sign),
    /// Boundary Hamiltonians, §2.2.3.
    HRow,
    HCol,
    H0,
    /// Matrix unit P^{src}_{dst}, Eq 13-3.1.
    Unit { src: (i64, i64), dst: (i64, i64) },
    /// P^{(n)}_{•,k} = ⊕_m P^{m-k,k}_{m-n,n}, Eq 13-3.3.
    SeriesCol { n: i64, k: i64 },
    /// P^{(q)}_{p,•} = ⊕_l P^{p,l-p}_{q,l-q}, Eq 13-3.3.
    SeriesRow { q: i64, p: i64 },
    /// P^{k,±}_{l} = ⊕_m P^{m±k,k}_{m±l,l}, Eq 13-4.7.
    RadFirst { sign: Sign, k: i64, l: i64 },
    /// P^{k}_{l,±} = ⊕_m P^{k,m±k}_{l,m±l}, Eq 13-4.7.
    RadSecond { sign: Sign, k: i64, l: i64 },
    /// Hatted series P̂^{[k],l}_{[m],n} = ⊕_s P^{s+k,l}_{s+m,n}, Eq 13-6.3.
    /// Bracketed offsets k, m may be negative; l, n < 0 gives zero.
    HatL { k: i64, l: i64, m: i64, n: i64 },
    /// Hatted series P̂^{k,[l]}_{m,[n]} = ⊕_s P^{k,s+l}_{m,s+n}, Eq 13-6.3.
    HatR { k: i64, l: i64, m: i64, n: i64 },
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorId::*;
        match self {
            Identity => write!(f, "I"),
            Z => write!(f, "Z"),
            Zbar => write!(f, "Zbar"),
            Zdag => write!(f, "Zdag"),
            Zbardag => write!(f, "Zbardag"),
            Ks => write!(f, "Ks"),
            Kr => write!(f, "Kr"),
            ASect(s) => write!(f, "a_sect^{s}"),
            ARad(s) => write!(f, "a_rad^{s}"),
            N1 => write!(f, "N1"),
            N2 => write!(f, "N2"),
            P1 => write!(f, "P1"),
            P2 => write!(f, "P2"),
            X => write!(f, "X"),
            Xdag => write!(f, "Xdag"),
            HSect => write!(f, "H_sect"),
            HRad => write!(f, "H_rad"),
            IB { alpha, beta } => write!(f, "I_B({},{})", alpha.to_text(), beta.to_text()),
            ABoundRow(s) => write!(f, "a_row^{s}"),
            ABoundCol(s) => write!(f, "a_col^{s}"),
            HRow => write!(f, "H_row"),
            HCol => write!(f, "H_col"),
            H0 => write!(f, "H_0"),
            Unit { src, dst } => write!(f, "P^{{{},{}}}_{{{},{}}}", src.0, src.1, dst.0, dst.1),
            SeriesCol { n, k } => write!(f, "P^({n})_{{.,{k}}}"),
            SeriesRow { q, p } => write!(f, "P^({q})_{{{p},.}}"),
            RadFirst { sign, k, l } => write!(f, "P^{{{k}{sign}}}_{{{l}}}"),
            RadSecond { sign, k, l } => write!(f, "P^{{{k}}}_{{{l}{sign}}}"),
            HatL { k, l, m, n } => write!(f, "Phat^{{[{k}],{l}}}_{{[{m}],{n}}}"),
            HatR { k, l, m, n } => write!(f, "Phat^{{{k},[{l}]}}_{{{m},[{n}]}}"),
        }
    }
}

fn one() -> FieldElem {
    FieldElem::one()
}

fn diag(cutoff: u32, f: impl Fn(u32, u32) -> FieldElem) -> SparseOp {
    SparseOp::from_transitions(
        cutoff,
        basis_indices(cutoff).into_iter().map(|i| {
            let (k, l) = (i.k as i64, i.l as i64);
            ((k, l), (k, l), f(i.k, i.l))
        }),
    )
}

fn shift_all(cutoff: u32, shifts: &[((i64, i64), FieldElem)]) -> SparseOp {
    let mut tr = Vec::new();
    for i in basis_indices(cutoff) {
        let (k, l) = (i.k as i64, i.l as i64);
        for ((dk, dl), c) in shifts {
            tr.push(((k, l), (k + dk, l + dl), c.clone()));
        }
    }
    SparseOp::from_transitions(cutoff, tr)
}

/// Catalog with memoized construction; building the same (id, form) twice
/// is idempotent and returns the same shared operator.
pub struct Catalog {
    cutoff: u32,
    cache: RefCell<HashMap<(GeneratorId, Form), Rc<SparseOp>>>,
}

impl Catalog {
    pub fn new(cutoff: u32) -> Self {
        Catalog {
            cutoff,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Normative (basis-action) build.
    pub fn get(&self, id: &GeneratorId) -> Rc<SparseOp> {
        self.build(id, Form::BasisAction)
            .expect("every generator has a basis-action form")
    }

    pub fn build(&self, id: &GeneratorId, form: Form) -> Result<Rc<SparseOp>, CatalogError> {
        if let Some(op) = self.cache.borrow().get(&(id.clone(), form)) {
            return Ok(op.clone());
        }
        let op = Rc::new(self.construct(id, form)?);
        self.cache
            .borrow_mut()
            .insert((id.clone(), form), op.clone());
        Ok(op)
    }

    fn construct(&self, id: &GeneratorId, form: Form) -> Result<SparseOp, CatalogError> {
        use GeneratorId::*;
        let cut = self.cutoff;
        match (id, form) {
            (Identity, Form::BasisAction) => Ok(SparseOp::identity(cut)),
            (Z, Form::BasisAction) => Ok(shift_all(
                cut,
                &[((1, 0), one()), ((0, -1), one()), ((-1, 1), one())],
            )),
            (Zbar, Form::BasisAction) => Ok(shift_all(
                cut,
                &[((0, 1), one()), ((-1, 0), one()), ((1, -1), one())],
            )),
            (Zdag, Form::BasisAction) => Ok(shift_all(
                cut,
                &[((1, 0), -&one()), ((0, -1), -&one()), ((-1, 1), one())],
            )),
            (Zbardag, Form::BasisAction) => Ok(shift_all(
                cut,
                &[((0, 1), -&one()), ((-1, 0), -&one()), ((1, -1), one())],
            )),
            // Kernel conjugation, Eq 13-2.3, with the sectorial phase Ks
            // (self-inverse).
            (Zdag, Form::Constructor) => {
                let ks = self.get(&Ks);
                Ok(ks.compose(&self.get(&Z)).compose(&ks))
            }
            (Zbardag, Form::Constructor) => {
                let ks = self.get(&Ks);
                Ok(ks.compose(&self.get(&Zbar)).compose(&ks))
            }
            (Ks, Form::BasisAction) => Ok(diag(cut, |k, l| {
                if (k + l) % 2 == 0 {
                    FieldElem::one()
                } else {
                    FieldElem::from_int(-1)
                }
            })),
            (Kr, Form::BasisAction) => {
                Ok(diag(cut, |k, l| FieldElem::eighth_root_pow((k + l) as i64)))
            }
            (ASect(s), Form::BasisAction) => {
                let (dk, dl) = match s {
                    Sign::Plus => (-1, 1),
                    Sign::Minus => (1, -1),
                };
                Ok(shift_all(cut, &[((dk, dl), FieldElem::inv_sqrt10())]))
            }
            (ASect(s), Form::Constructor) => {
                let sum = match s {
                    Sign::Plus => self.get(&Z).add(&self.get(&Zdag)),
                    Sign::Minus => self.get(&Zbar).add(&self.get(&Zbardag)),
                };
                Ok(sum.scale(&FieldElem::inv_sqrt40()))
            }
            (ARad(s), Form::BasisAction) => {
                let d = s.val();
                Ok(shift_all(cut, &[((d, d), FieldElem::sqrt_two_fifths())]))
            }
            // Eq 13-2.23: (1/√10)(X + iX†) − (2/√5) I_B(¼e^{±iπ/4}, ½e^{±iπ/4}).
            (ARad(s), Form::Constructor | Form::ConstructorAlt) => {
                let x = self.build(&X, form)?;
                let xdag = self.build(&Xdag, form)?;
                let phase = FieldElem::eighth_root_pow(s.val());
                let quarter = crate::field::Rational::new(1.into(), 4.into());
                let half = crate::field::Rational::new(1.into(), 2.into());
                let ib = self.get(&IB {
                    alpha: phase.scale(&quarter),
                    beta: phase.scale(&half),
                });
                let main = x
                    .add(&xdag.scale(&FieldElem::i()))
                    .scale(&FieldElem::inv_sqrt10());
                Ok(main.sub(&ib.scale(&FieldElem::two_over_sqrt5())))
            }
            (N1, Form::BasisAction) => Ok(diag(cut, |k, _| FieldElem::from_int(k as i64))),
            (N2, Form::BasisAction) => Ok(diag(cut, |_, l| FieldElem::from_int(l as i64))),
            (P1, Form::BasisAction) => Ok(diag(cut, |_, l| {
                if l == 0 {
                    FieldElem::one()
                } else {
                    FieldElem::zero()
                }
            })),
            (P2, Form::BasisAction) => Ok(diag(cut, |k, _| {
                if k == 0 {
                    FieldElem::one()
                } else {
                    FieldElem::zero()
                }
            })),
            // Eq 13-2.18 with Z* = Z̄: correction term (1/2)(Z² + Z̄²).
            (X, Form::Constructor) => {
                let hs = self.get(&HSect);
                let z = self.get(&Z);
                let zb = self.get(&Zbar);
                let corr = z.compose(&z).add(&zb.compose(&zb));
                Ok(hs
                    .scale(&FieldElem::from_int(-5))
                    .sub(&corr.scale(&FieldElem::from_ratio(1, 2))))
            }
            // Same display with * read as the basis-conjugate dagger:
            // −5H_s − (1/4)(Z Z̄† + Z† Z̄ + Z̄ Z† + Z̄† Z).
            (X, Form::ConstructorAlt) => {
                let hs = self.get(&HSect);
                let z = self.get(&Z);
                let zb = self.get(&Zbar);
                let zd = self.get(&Zdag);
                let zbd = self.get(&Zbardag);
                let corr = z
                    .compose(&zbd)
                    .add(&zd.compose(&zb))
                    .add(&zb.compose(&zd))
                    .add(&zbd.compose(&z));
                Ok(hs
                    .scale(&FieldElem::from_int(-5))
                    .sub(&corr.scale(&FieldElem::from_ratio(1, 4))))
            }
            (Xdag, Form::Constructor | Form::ConstructorAlt) => {
                let kr = self.get(&Kr);
                Ok(kr.adjoint().compose(&self.build(&X, form)?).compose(&kr))
            }
            (HSect, Form::BasisAction) => {
                let ap = self.get(&ASect(Sign::Plus));
                let am = self.get(&ASect(Sign::Minus));
                Ok(ap.compose(&am).add(&am.compose(&ap)))
            }
            (HSect, Form::Constructor) => {
                let z = self.get(&Z);
                let zb = self.get(&Zbar);
                let zd = self.get(&Zdag);
                let zbd = self.get(&Zbardag);
                let h1 = z
                    .compose(&zb)
                    .add(&z.compose(&zbd))
                    .add(&zd.compose(&zb))
                    .add(&zd.compose(&zbd));
                let h2 = zb
                    .compose(&z)
                    .add(&zb.compose(&zd))
                    .add(&zbd.compose(&z))
                    .add(&zbd.compose(&zd));
                Ok(h1.add(&h2).scale(&FieldElem::from_ratio(1, 40)))
            }
            // Eq 13-2.28: a_r⁺a_r⁻ + a_r⁻a_r⁺ + I_B(1/8, 1/2).
            (HRad, Form::BasisAction) => {
                let ap = self.get(&ARad(Sign::Plus));
                let am = self.get(&ARad(Sign::Minus));
                let ib = self.get(&IB {
                    alpha: FieldElem::from_ratio(1, 8),
                    beta: FieldElem::from_ratio(1, 2),
                });
                Ok(ap.compose(&am).add(&am.compose(&ap)).add(&ib))
            }
            // Eq 13-2.20: (1/4)(X² + (X*)²) with the Hilbert adjoint.
            (HRad, Form::Constructor | Form::ConstructorAlt) => {
                let x = self.build(&X, form)?;
                let xadj = x.adjoint();
                Ok(x
                    .compose(&x)
                    .add(&xadj.compose(&xadj))
                    .scale(&FieldElem::from_ratio(1, 4)))
            }
            (IB { alpha, beta }, Form::BasisAction) => Ok(diag(cut, |k, l| {
                if k == 0 && l == 0 {
                    beta.clone()
                } else if k == 0 || l == 0 {
                    alpha.clone()
                } else {
                    FieldElem::zero()
                }
            })),
            (ABoundRow(s), Form::BasisAction) => Ok(SparseOp::from_transitions(
                cut,
                (0..=cut as i64).map(|m| ((m, 0), (m + s.val(), 0), one())),
            )),
            (ABoundCol(s), Form::BasisAction) => Ok(SparseOp::from_transitions(
                cut,
                (0..=cut as i64).map(|m| ((0, m), (0, m + s.val()), one())),
            )),
            (HRow, Form::BasisAction) => {
                let ap = self.get(&ABoundRow(Sign::Plus));
                let am = self.get(&ABoundRow(Sign::Minus));
                Ok(ap.compose(&am).add(&am.compose(&ap)))
            }
            (HCol, Form::BasisAction) => {
                let ap = self.get(&ABoundCol(Sign::Plus));
                let am = self.get(&ABoundCol(Sign::Minus));
                Ok(ap.compose(&am).add(&am.compose(&ap)))
            }
            // H_0 = (1/5)(H_{•,0} + H_{0,•} − P^{0,0}_{0,0}).
            (H0, Form::BasisAction) => {
                let sum = self
                    .get(&HRow)
                    .add(&self.get(&HCol))
                    .sub(&matrix_unit(cut, 0, 0, 0, 0));
                Ok(sum.scale(&FieldElem::from_ratio(1, 5)))
            }
            (Unit { src, dst }, Form::BasisAction) => {
                Ok(matrix_unit(cut, src.0, src.1, dst.0, dst.1))
            }
            (SeriesCol { n, k }, Form::BasisAction) => {
                if *n < 0 || *k < 0 {
                    return Ok(SparseOp::zero(cut));
                }
                Ok(SparseOp::from_transitions(
                    cut,
                    (0..=cut as i64).map(|m| ((m - k, *k), (m - n, *n), one())),
                ))
            }
            (SeriesRow { q, p }, Form::BasisAction) => {
                if *q < 0 || *p < 0 {
                    return Ok(SparseOp::zero(cut));
                }
                Ok(SparseOp::from_transitions(
                    cut,
                    (0..=cut as i64).map(|l| ((*p, l - p), (*q, l - q), one())),
                ))
            }
            (RadFirst { sign, k, l }, Form::BasisAction) => {
                if *k < 0 || *l < 0 {
                    return Ok(SparseOp::zero(cut));
                }
                let s = sign.val();
                Ok(SparseOp::from_transitions(
                    cut,
                    (0..=2 * cut as i64).map(|m| ((m * s + k, *k), (m * s + l, *l), one())),
                ))
            }
            (RadSecond { sign, k, l }, Form::BasisAction) => {
                if *k < 0 || *l < 0 {
                    return Ok(SparseOp::zero(cut));
                }
                let s = sign.val();
                Ok(SparseOp::from_transitions(
                    cut,
                    (0..=2 * cut as i64).map(|m| ((*k, m * s + k), (*l, m * s + l), one())),
                ))
            }
            (HatL { k, l, m, n }, Form::BasisAction) => {
                if *l < 0 || *n < 0 {
                    return Ok(SparseOp::zero(cut));
                }
                Ok(SparseOp::from_transitions(
                    cut,
                    (0..=cut as i64 + 12).map(|s| ((s + k, *l), (s + m, *n), one())),
                ))
            }
            (HatR { k, l, m, n }, Form::BasisAction) => {
                if *k < 0 || *m < 0 {
                    return Ok(SparseOp::zero(cut));
                }
                Ok(SparseOp::from_transitions(
                    cut,
                    (0..=cut as i64 + 12).map(|s| ((*k, s + l), (*m, s + n), one())),
                ))
            }
            _ => Err(CatalogError::MissingForm(id.to_string(), form)),
        }
    }
}

/// Outcome of comparing two forms of one generator.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CrossCheck {
    pub id: String,
    pub compared: String,
    pub consistent: bool,
    pub residual: f64,
    pub first_difference: Option<(u32, u32)>,
    /// "consistent", "inconsistent (documented)" or "inconsistent (new)".
    pub classification: String,
}

/// Cross-checks whose printed constructor is already known not to
/// reproduce the basis action; anything else that fails is new.
const DOCUMENTED_INCONSISTENT: &[&str] = &[
    "a_rad^+ [constructor, Z*=Zbar reading]",
    "a_rad^- [constructor, Z*=Zbar reading]",
    "H_rad [constructor, Z*=Zbar reading]",
    "H_rad [constructor, dagger reading]",
];

fn classify(compared: &str, consistent: bool) -> String {
    if consistent {
        "consistent".to_string()
    } else if DOCUMENTED_INCONSISTENT.contains(&compared) {
        "inconsistent (documented)".to_string()
    } else {
        "inconsistent (new)".to_string()
    }
}

fn compare_forms(
    catalog: &Catalog,
    id: &GeneratorId,
    label: &str,
    reference: &SparseOp,
    candidate: &SparseOp,
) -> CrossCheck {
    let cut = catalog.cutoff();
    let margin = reference.reach().max(candidate.reach()).max(4);
    let safe = cut.saturating_sub(margin);
    let diff = candidate.first_difference(reference, safe);
    let consistent = diff.is_none();
    CrossCheck {
        id: id.to_string(),
        compared: label.to_string(),
        consistent,
        residual: diff.map(|d| d.1).unwrap_or(0.0),
        first_difference: diff.map(|d| (d.0.k, d.0.l)),
        classification: classify(label, consistent),
    }
}

/// Compare every stated constructor form of `id` against its basis action.
pub fn cross_check(catalog: &Catalog, id: &GeneratorId) -> Vec<CrossCheck> {
    use GeneratorId::*;
    let mut out = Vec::new();
    let reference = catalog.get(id);
    match id {
        Zdag | Zbardag | ASect(_) | HSect => {
            let cons = catalog.build(id, Form::Constructor).expect("form exists");
            out.push(compare_forms(
                catalog,
                id,
                &format!("{id} [constructor]"),
                &reference,
                &cons,
            ));
        }
        ARad(_) | HRad => {
            for (form, tag) in [
                (Form::Constructor, "Z*=Zbar reading"),
                (Form::ConstructorAlt, "dagger reading"),
            ] {
                let cons = catalog.build(id, form).expect("form exists");
                out.push(compare_forms(
                    catalog,
                    id,
                    &format!("{id} [constructor, {tag}]"),
                    &reference,
                    &cons,
                ));
            }
        }
        _ => {}
    }
    out
}

/// Hamiltonians with printed eigenvalue tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hamiltonian {
    Sectorial,
    Radial,
    Boundary,
}

impl Hamiltonian {
    pub fn generator(self) -> GeneratorId {
        match self {
            Hamiltonian::Sectorial => GeneratorId::HSect,
            Hamiltonian::Radial => GeneratorId::HRad,
            Hamiltonian::Boundary => GeneratorId::H0,
        }
    }

    /// The printed eigenvalue table.
    pub fn printed_eigenvalue(self, k: u32, l: u32) -> FieldElem {
        let origin = k == 0 && l == 0;
        let boundary = !origin && (k == 0 || l == 0);
        match self {
            Hamiltonian::Sectorial => {
                if origin {
                    FieldElem::zero()
                } else if boundary {
                    FieldElem::from_ratio(1, 10)
                } else {
                    FieldElem::from_ratio(1, 5)
                }
            }
            Hamiltonian::Radial => {
                if origin {
                    FieldElem::from_ratio(4, 5)
                } else if boundary {
                    FieldElem::from_ratio(1, 2)
                } else {
                    FieldElem::from_ratio(1, 5)
                }
            }
            Hamiltonian::Boundary => {
                if origin {
                    FieldElem::from_ratio(1, 5)
                } else if boundary {
                    FieldElem::from_ratio(2, 5)
                } else {
                    FieldElem::zero()
                }
            }
        }
    }

    /// Eigenvalues recomputed from the stated basis actions (the oracle
    /// route). For the radial ladder form this disagrees with the printed
    /// table: interior 2/5+2/5, boundary 2/5+1/8, origin 2/5+1/2.
    pub fn oracle_eigenvalue(self, k: u32, l: u32) -> FieldElem {
        let origin = k == 0 && l == 0;
        let boundary = !origin && (k == 0 || l == 0);
        match self {
            Hamiltonian::Sectorial | Hamiltonian::Boundary => self.printed_eigenvalue(k, l),
            Hamiltonian::Radial => {
                if origin {
                    FieldElem::from_ratio(9, 10)
                } else if boundary {
                    FieldElem::from_ratio(21, 40)
                } else {
                    FieldElem::from_ratio(4, 5)
                }
            }
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectrumRow {
    pub k: u32,
    pub l: u32,
    /// Exact eigenvalue in field text form, or None when the basis vector
    /// is not an exact eigenvector of this form.
    pub computed: Option<String>,
    pub printed: String,
    pub matches_printed: bool,
    pub matches_oracle: bool,
    /// Off-eigenvector residual dump (empty when an exact eigenvector).
    pub residual: String,
}

/// Verify each basis vector inside the safe domain is an exact eigenvector
/// and compare its eigenvalue with the printed and the oracle tables.
pub fn spectrum_check(
    catalog: &Catalog,
    h: Hamiltonian,
    form: Form,
) -> Result<Vec<SpectrumRow>, CatalogError> {
    let op = catalog.build(&h.generator(), form)?;
    // every Hamiltonian form composes two factors of this reach
    let margin = 2 * op.reach().max(2);
    let safe = catalog.cutoff().saturating_sub(margin);
    let mut rows = Vec::new();
    for idx in basis_indices(catalog.cutoff()) {
        if idx.level() > safe {
            continue;
        }
        let image = op.apply(&StateVector::basis(idx));
        let lambda = image.amplitude(idx);
        let residual = image.sub(&StateVector::basis(idx).scale(&lambda));
        let exact = residual.is_zero();
        let printed = h.printed_eigenvalue(idx.k, idx.l);
        let oracle = h.oracle_eigenvalue(idx.k, idx.l);
        rows.push(SpectrumRow {
            k: idx.k,
            l: idx.l,
            computed: exact.then(|| lambda.to_text()),
            printed: printed.to_text(),
            matches_printed: exact && lambda == printed,
            matches_oracle: exact && lambda == oracle,
            residual: if exact {
                String::new()
            } else {
                image
                    .amplitudes()
                    .map(|(i, v)| format!("({},{}): {}", i.k, i.l, v.to_text()))
                    .collect::<Vec<_>>()
                    .join("; ")
            },
        });
    }
    Ok(rows)
}

/// Verdict for one boundary position-operator display reading.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DisplayCheck {
    pub display: String,
    pub reading: String,
    pub holds: bool,
    pub residual: f64,
}

/// Realize a blockwise differential formula as an operator by applying it
/// to every basis polynomial and expanding the result in the table.
fn op_from_poly_map(
    cutoff: u32,
    table: &PolyTable,
    f: impl Fn(&BiPoly, u32) -> BiPoly,
) -> SparseOp {
    let mut transitions = Vec::new();
    for idx in basis_indices(cutoff) {
        let p = table.get(idx.k, idx.l).expect("table covers cutoff");
        let image = f(p, idx.level());
        let coords = table
            .expand_in_basis(&image)
            .expect("image stays inside the extended table");
        for ((tk, tl), c) in coords {
            transitions.push(((idx.k as i64, idx.l as i64), (tk as i64, tl as i64), c));
        }
    }
    SparseOp::from_transitions(cutoff, transitions)
}

/// The §2.2.3 position-operator displays (structured and differential),
/// each evaluated in its literal reading and in the unit-normalized reading
/// that replaces the sectorial ladders by √10·a_sect^± and projects the
/// whole expression onto the boundary subspace. The table must extend at
/// least two degrees beyond the catalog cutoff.
pub fn boundary_position_report(catalog: &Catalog, table: &PolyTable) -> Vec<DisplayCheck> {
    use GeneratorId::*;
    let cut = catalog.cutoff();
    let safe = cut.saturating_sub(4);
    let mut out = Vec::new();
    let row_target = catalog
        .get(&ABoundRow(Sign::Plus))
        .add(&catalog.get(&ABoundRow(Sign::Minus)));
    let col_target = catalog
        .get(&ABoundCol(Sign::Plus))
        .add(&catalog.get(&ABoundCol(Sign::Minus)));

    // Structured displays: (Z + Z̄ − A − A·M + A²)·proj with A the sectorial
    // ladder (a_sect^+ for the row, a_sect^- for the column) and M the
    // multiplier of the third product term (Z as printed; the column display
    // is also evaluated with the mirror-consistent Z̄).
    for (axis, ladder_sign, proj, mult, target) in [
        ("structured row", Sign::Plus, P1, Z, &row_target),
        ("structured col (as printed, Z)", Sign::Minus, P2, Z, &col_target),
        ("structured col (Zbar-corrected)", Sign::Minus, P2, Zbar, &col_target),
    ] {
        let z = catalog.get(&Z);
        let zb = catalog.get(&Zbar);
        let multiplier = catalog.get(&mult);
        let projector = catalog.get(&proj);
        for (reading, ladder) in [
            (
                "literal a_sect",
                catalog.get(&ASect(ladder_sign)).as_ref().clone(),
            ),
            (
                "unit-normalized shift",
                catalog.get(&ASect(ladder_sign)).scale(&FieldElem::sqrt10()),
            ),
        ] {
            let expr = z
                .add(&zb)
                .sub(&ladder)
                .sub(&ladder.compose(&multiplier))
                .add(&ladder.compose(&ladder))
                .compose(&projector);
            let diff = expr.first_difference(target, safe);
            out.push(DisplayCheck {
                display: axis.to_string(),
                reading: reading.to_string(),
                holds: diff.is_none(),
                residual: diff.map(|d| d.1).unwrap_or(0.0),
            });
        }
    }

    // Differential displays. The row version applies, on each level-N block,
    //   Σ_m U_{m-1,N-m+1} D_{m,N-m}/(m!(N-m)!)  to (1+z)p
    // minus
    //   Σ_{m≤N-2} U_{m,N-m} D_{m+2,N-m-2}/((m+2)!(N-m-2)!)  to p;
    // the column version mirrors it with z̄.
    for (axis, rep, proj, use_zbar, target) in [
        ("differential row", DiffRep::SectRaise, P1, false, &row_target),
        ("differential col", DiffRep::SectLower, P2, true, &col_target),
    ] {
        let projector = catalog.get(&proj);
        let z = catalog.get(&Z);
        let zb = catalog.get(&Zbar);
        let block = |p: &BiPoly, level: u32| -> BiPoly {
            if level == 0 {
                return BiPoly::zero();
            }
            let shifted = if use_zbar {
                p.add(&p.mul_zbar())
            } else {
                p.add(&p.mul_z())
            };
            let first = unit_dsum(table, rep, &shifted, level);
            let second = second_dsum(table, rep, p, level);
            first.sub(&second)
        };
        let dop = op_from_poly_map(cut, table, block);
        for (reading, expr) in [
            (
                "literal (1/sqrt10 prefactor, unprojected Z+Zbar)",
                z.add(&zb)
                    .sub(&dop.scale(&FieldElem::inv_sqrt10()).compose(&projector)),
            ),
            (
                "unit-normalized, projected",
                z.add(&zb)
                    .compose(&projector)
                    .sub(&dop.compose(&projector)),
            ),
        ] {
            let diff = expr.first_difference(target, safe);
            out.push(DisplayCheck {
                display: axis.to_string(),
                reading: reading.to_string(),
                holds: diff.is_none(),
                residual: diff.map(|d| d.1).unwrap_or(0.0),
            });
        }
    }
    out
}

fn factorials_inv(m: u32, n: u32) -> FieldElem {
    use crate::field::Rational;
    use num::{BigInt, One};
    let mut fact = Rational::one();
    for j in 2..=m {
        fact *= Rational::from(BigInt::from(j));
    }
    for j in 2..=n {
        fact *= Rational::from(BigInt::from(j));
    }
    FieldElem::from_rational(fact.recip())
}

/// Unit-normalized sectorial shift as the printed differential sum
/// Σ_m U_{m∓1,N-m±1} D_{m,N-m}/(m!(N-m)!), applied literally to `p`
/// (which may have degree above N).
fn unit_dsum(table: &PolyTable, rep: DiffRep, p: &BiPoly, level: u32) -> BiPoly {
    let n = level;
    let mut acc = BiPoly::zero();
    for m in 0..=n {
        let (uk, ul) = match rep {
            DiffRep::SectRaise => (m as i64 - 1, (n - m) as i64 + 1),
            DiffRep::SectLower => (m as i64 + 1, (n - m) as i64 - 1),
            _ => unreachable!("only sectorial shifts appear in the displays"),
        };
        let u = table.get_signed(uk, ul).expect("table covers shifts");
        if u.is_zero() {
            continue;
        }
        let d = p.partial_derivative(m, n - m);
        if d.is_zero() {
            continue;
        }
        acc = acc.add(&u.mul(&d.scale(&factorials_inv(m, n - m))));
    }
    acc
}

/// The second printed sum: Σ_{m=0}^{N-2} U_{m,N-m} D_{m+2,N-m-2}/((m+2)!(N-m-2)!)
/// for the row display, and its mirror for the column display.
fn second_dsum(table: &PolyTable, rep: DiffRep, p: &BiPoly, level: u32) -> BiPoly {
    let n = level;
    if n < 2 {
        return BiPoly::zero();
    }
    let mut acc = BiPoly::zero();
    for m in 0..=(n - 2) {
        let (uk, ul, dm, dn) = match rep {
            DiffRep::SectRaise => (m as i64, (n - m) as i64, m + 2, n - m - 2),
            DiffRep::SectLower => ((m + 2) as i64, (n - m - 2) as i64, m, n - m),
            _ => unreachable!(),
        };
        let u = table.get_signed(uk, ul).expect("table covers shifts");
        let d = p.partial_derivative(dm, dn);
        if u.is_zero() || d.is_zero() {
            continue;
        }
        acc = acc.add(&u.mul(&d.scale(&factorials_inv(dm, dn))));
    }
    acc
}

/// Check the ladder differential representations against the basis actions
/// for every level ≤ `max_level`; returns per-index mismatches (empty = all
/// exact).
pub fn diff_rep_check(table: &PolyTable, rep: DiffRep, max_level: u32) -> Vec<(u32, u32)> {
    let mut mismatches = Vec::new();
    for n in 0..=max_level {
        for k in 0..=n {
            let l = n - k;
            let p = table.get(k, l).expect("table covers level");
            let got = diff_rep_apply(table, rep, p, n).expect("graded input");
            let expected = expected_ladder_poly(table, rep, k, l);
            if got != expected {
                mismatches.push((k, l));
            }
        }
    }
    mismatches
}

fn expected_ladder_poly(table: &PolyTable, rep: DiffRep, k: u32, l: u32) -> BiPoly {
    let (dk, dl, scalar) = match rep {
        DiffRep::SectRaise => (-1, 1, FieldElem::inv_sqrt10()),
        DiffRep::SectLower => (1, -1, FieldElem::inv_sqrt10()),
        DiffRep::RadRaise => (1, 1, FieldElem::sqrt_two_fifths()),
        DiffRep::RadLower => (-1, -1, FieldElem::sqrt_two_fifths()),
        DiffRep::RowRaise => {
            if l != 0 {
                return BiPoly::zero();
            }
            (1, 0, FieldElem::one())
        }
        DiffRep::RowLower => {
            if l != 0 {
                return BiPoly::zero();
            }
            (-1, 0, FieldElem::one())
        }
        DiffRep::ColRaise => {
            if k != 0 {
                return BiPoly::zero();
            }
            (0, 1, FieldElem::one())
        }
        DiffRep::ColLower => {
            if k != 0 {
                return BiPoly::zero();
            }
            (0, -1, FieldElem::one())
        }
    };
    table
        .get_signed(k as i64 + dk, l as i64 + dl)
        .expect("table covers shifts")
        .scale(&scalar)
}

/// One row of the `catalog list` output.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub paper_ref: &'static str,
    pub reach: u32,
}

/// Every named generator (families listed through a representative member),
/// with its source equation and reach.
pub fn catalog_listing(cutoff: u32) -> Vec<CatalogEntry> {
    use GeneratorId::*;
    let catalog = Catalog::new(cutoff);
    let entries: Vec<(GeneratorId, &'static str)> = vec![
        (Identity, "-"),
        (Z, "13-2.1"),
        (Zbar, "13-2.2"),
        (Zdag, "13-2.3 / 13-2.5"),
        (Zbardag, "13-2.3 / 13-2.6"),
        (Ks, "13-2.4"),
        (Kr, "13-2.19"),
        (ASect(Sign::Plus), "13-2.10"),
        (ASect(Sign::Minus), "13-2.10"),
        (N1, "sec 2.2.1 number operators"),
        (N2, "sec 2.2.1 number operators"),
        (P1, "13-2.15"),
        (P2, "13-2.15"),
        (X, "13-2.18"),
        (Xdag, "13-2.19 conjugation"),
        (HSect, "sec 2.2.1 Hamiltonian"),
        (HRad, "13-2.20 / 13-2.28"),
        (
            IB {
                alpha: FieldElem::from_ratio(1, 2),
                beta: FieldElem::from_ratio(1, 2),
            },
            "13-2.22",
        ),
        (ARad(Sign::Plus), "13-2.23 / 13-2.24"),
        (ARad(Sign::Minus), "13-2.23 / 13-2.24"),
        (ABoundRow(Sign::Plus), "13-2.32"),
        (ABoundRow(Sign::Minus), "13-2.32"),
        (ABoundCol(Sign::Plus), "13-2.32"),
        (ABoundCol(Sign::Minus), "13-2.32"),
        (HRow, "sec 2.2.3 Hamiltonian"),
        (HCol, "sec 2.2.3 Hamiltonian"),
        (H0, "sec 2.2.3 Hamiltonian"),
        (
            Unit {
                src: (1, 0),
                dst: (0, 1),
            },
            "13-3.1 (family)",
        ),
        (SeriesCol { n: 1, k: 0 }, "13-3.3 (family)"),
        (SeriesRow { q: 1, p: 0 }, "13-3.3 (family)"),
        (
            RadFirst {
                sign: Sign::Plus,
                k: 0,
                l: 1,
            },
            "13-4.7 (family)",
        ),
        (
            RadSecond {
                sign: Sign::Plus,
                k: 0,
                l: 1,
            },
            "13-4.7 (family)",
        ),
        (
            HatL {
                k: 0,
                l: 0,
                m: 1,
                n: 0,
            },
            "13-6.3 (family)",
        ),
        (
            HatR {
                k: 0,
                l: 0,
                m: 1,
                n: 0,
            },
            "13-6.3 (family)",
        ),
    ];
    let mut out = Vec::new();
    for (id, paper_ref) in entries {
        let op = match id {
            X | Xdag => catalog.build(&id, Form::Constructor).expect("constructor"),
            _ => catalog.get(&id),
        };
        out.push(CatalogEntry {
            name: id.to_string(),
            paper_ref,
            reach: op.reach(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::safe_domain;

    const CUT: u32 = 10;

    fn basis(k: u32, l: u32) -> StateVector {
        StateVector::basis(BasisIndex::new(k, l))
    }

    #[test]
    fn ladder_basis_actions() {
        let c = Catalog::new(CUT);
        let ap = c.get(&GeneratorId::ASect(Sign::Plus));
        assert_eq!(
            ap.apply(&basis(2, 1)),
            basis(1, 2).scale(&FieldElem::inv_sqrt10())
        );
        assert!(ap.apply(&basis(0, 3)).is_zero());
        let am = c.get(&GeneratorId::ASect(Sign::Minus));
        assert!(am.apply(&basis(3, 0)).is_zero());
        let rm = c.get(&GeneratorId::ARad(Sign::Minus));
        assert_eq!(
            rm.apply(&basis(3, 2)),
            basis(2, 1).scale(&FieldElem::sqrt_two_fifths())
        );
        assert!(rm.apply(&basis(0, 2)).is_zero());
    }

    #[test]
    fn diagonal_actions() {
        let c = Catalog::new(CUT);
        assert_eq!(
            c.get(&GeneratorId::N1).apply(&basis(2, 3)),
            basis(2, 3).scale(&FieldElem::from_int(2))
        );
        let p2 = c.get(&GeneratorId::P2);
        assert_eq!(p2.apply(&basis(0, 4)), basis(0, 4));
        assert!(p2.apply(&basis(1, 3)).is_zero());
        let ib = c.get(&GeneratorId::IB {
            alpha: FieldElem::from_ratio(1, 2),
            beta: FieldElem::from_ratio(1, 2),
        });
        assert_eq!(
            ib.apply(&basis(0, 0)),
            basis(0, 0).scale(&FieldElem::from_ratio(1, 2))
        );
        assert_eq!(
            ib.apply(&basis(4, 0)),
            basis(4, 0).scale(&FieldElem::from_ratio(1, 2))
        );
        assert!(ib.apply(&basis(1, 1)).is_zero());
    }

    #[test]
    fn z_action_and_adjointness() {
        let c = Catalog::new(CUT);
        let z = c.get(&GeneratorId::Z);
        assert_eq!(z.apply(&basis(0, 0)), basis(1, 0));
        let zbar = c.get(&GeneratorId::Zbar);
        let (ok, _) = z.adjoint().equal_on_domain(&zbar, CUT - 1);
        assert!(ok, "Z* = Zbar on the safe domain");
        let ap = c.get(&GeneratorId::ASect(Sign::Plus));
        let am = c.get(&GeneratorId::ASect(Sign::Minus));
        let (ok, _) = ap.adjoint().equal_on_domain(&am, CUT);
        assert!(ok, "(a_sect^+)* = a_sect^-");
        // adjoint of a matrix unit transposes the indices
        assert_eq!(
            matrix_unit(CUT, 2, 1, 0, 3).adjoint(),
            matrix_unit(CUT, 0, 3, 2, 1)
        );
    }

    #[test]
    fn kernel_unitaries() {
        let c = Catalog::new(CUT);
        for id in [GeneratorId::Ks, GeneratorId::Kr] {
            let k = c.get(&id);
            assert_eq!(k.compose(&k.adjoint()), SparseOp::identity(CUT));
            assert_eq!(k.adjoint().compose(&k), SparseOp::identity(CUT));
        }
    }

    #[test]
    fn constructor_cross_checks() {
        let c = Catalog::new(CUT);
        for id in [
            GeneratorId::Zdag,
            GeneratorId::Zbardag,
            GeneratorId::ASect(Sign::Plus),
            GeneratorId::ASect(Sign::Minus),
            GeneratorId::HSect,
        ] {
            let checks = cross_check(&c, &id);
            assert!(checks.iter().all(|x| x.consistent), "{id} cross-check");
        }
    }

    #[test]
    fn radial_constructor_adjudication() {
        // The Z* = Z̄ reading of Eq 13-2.18 does not reproduce Eq 13-2.24;
        // the dagger reading does.
        let c = Catalog::new(CUT);
        for sign in [Sign::Plus, Sign::Minus] {
            let checks = cross_check(&c, &GeneratorId::ARad(sign));
            let literal = checks
                .iter()
                .find(|x| x.compared.contains("Z*=Zbar"))
                .unwrap();
            assert!(!literal.consistent);
            assert_eq!(literal.classification, "inconsistent (documented)");
            let dagger = checks
                .iter()
                .find(|x| x.compared.contains("dagger"))
                .unwrap();
            assert!(dagger.consistent, "dagger reading reproduces 13-2.24");
        }
    }

    #[test]
    fn series_identities() {
        let c = Catalog::new(CUT);
        // P1 = Phat^{[0],0}_{[0],0}, P2 = Phat^{0,[0]}_{0,[0]}
        assert_eq!(
            *c.get(&GeneratorId::P1),
            *c.get(&GeneratorId::HatL {
                k: 0,
                l: 0,
                m: 0,
                n: 0
            })
        );
        assert_eq!(
            *c.get(&GeneratorId::P2),
            *c.get(&GeneratorId::HatR {
                k: 0,
                l: 0,
                m: 0,
                n: 0
            })
        );
        // P^{k,-}_l = P^{(l)}_{•,k}
        assert_eq!(
            *c.get(&GeneratorId::RadFirst {
                sign: Sign::Minus,
                k: 2,
                l: 1
            }),
            *c.get(&GeneratorId::SeriesCol { n: 1, k: 2 })
        );
        // boundary ladders as hatted series
        assert_eq!(
            *c.get(&GeneratorId::ABoundRow(Sign::Plus)),
            *c.get(&GeneratorId::HatL {
                k: 0,
                l: 0,
                m: 1,
                n: 0
            })
        );
        assert_eq!(
            *c.get(&GeneratorId::ABoundCol(Sign::Minus)),
            *c.get(&GeneratorId::HatR {
                k: 0,
                l: 0,
                m: 0,
                n: -1
            })
        );
        // Eq 13-4.2: I_B(1/2,1/2) = (1/2)(P^{(0)}_{•,0} + P^{(0)}_{0,•} − P^{0,0}_{0,0})
        let ib = c.get(&GeneratorId::IB {
            alpha: FieldElem::from_ratio(1, 2),
            beta: FieldElem::from_ratio(1, 2),
        });
        let rhs = c
            .get(&GeneratorId::SeriesCol { n: 0, k: 0 })
            .add(&c.get(&GeneratorId::SeriesRow { q: 0, p: 0 }))
            .sub(&matrix_unit(CUT, 0, 0, 0, 0))
            .scale(&FieldElem::from_ratio(1, 2));
        assert_eq!(*ib, rhs);
    }

    #[test]
    fn matrix_unit_negative_index_is_zero() {
        let c = Catalog::new(CUT);
        let p = c.get(&GeneratorId::Unit {
            src: (1, 0),
            dst: (0, 1),
        });
        assert_eq!(p.apply(&basis(1, 0)), basis(0, 1));
        assert!(p.apply(&basis(0, 0)).is_zero());
        assert!(c
            .get(&GeneratorId::Unit {
                src: (2, 2),
                dst: (-1, 0),
            })
            .is_zero());
    }

    #[test]
    fn boundary_ladders_vanish_off_their_subspace() {
        let c = Catalog::new(CUT);
        let arow = c.get(&GeneratorId::ABoundRow(Sign::Plus));
        for idx in basis_indices(CUT) {
            if idx.l >= 1 {
                assert!(arow.apply(&StateVector::basis(idx)).is_zero());
            }
        }
    }

    #[test]
    fn composition_chain_example() {
        // a_sect^+ a_sect^- on U_{1,1} gives (1/10) U_{1,1}
        let c = Catalog::new(CUT);
        let ap = c.get(&GeneratorId::ASect(Sign::Plus));
        let am = c.get(&GeneratorId::ASect(Sign::Minus));
        let out = ap.compose(&am).apply(&basis(1, 1));
        assert_eq!(out, basis(1, 1).scale(&FieldElem::from_ratio(1, 10)));
        // both orderings annihilate the corner
        assert!(am.commutator(&ap).apply(&basis(0, 0)).is_zero());
    }

    #[test]
    fn spectra_sectorial_and_boundary() {
        let c = Catalog::new(CUT);
        let rows = spectrum_check(&c, Hamiltonian::Sectorial, Form::BasisAction).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.matches_printed && r.matches_oracle));
        let rows = spectrum_check(&c, Hamiltonian::Boundary, Form::BasisAction).unwrap();
        assert!(rows.iter().all(|r| r.matches_printed && r.matches_oracle));
    }

    #[test]
    fn spectrum_radial_documented_mismatch() {
        let c = Catalog::new(CUT);
        let rows = spectrum_check(&c, Hamiltonian::Radial, Form::BasisAction).unwrap();
        // exact eigenvectors with the oracle values, not the printed table
        assert!(rows.iter().all(|r| r.computed.is_some()));
        assert!(rows.iter().all(|r| r.matches_oracle));
        assert!(rows.iter().any(|r| !r.matches_printed));
        let origin = rows.iter().find(|r| r.k == 0 && r.l == 0).unwrap();
        assert_eq!(origin.computed.as_deref(), Some("9/10"));
    }

    #[test]
    fn safe_domain_of_radial_pair() {
        let c = Catalog::new(CUT);
        let ap = c.get(&GeneratorId::ARad(Sign::Plus));
        let am = c.get(&GeneratorId::ARad(Sign::Minus));
        assert_eq!(safe_domain(&[&ap, &am], CUT), 6);
    }

    #[test]
    fn diff_reps_reproduce_ladders() {
        let table = PolyTable::build(8);
        for rep in [
            DiffRep::SectRaise,
            DiffRep::SectLower,
            DiffRep::RadRaise,
            DiffRep::RadLower,
            DiffRep::RowRaise,
            DiffRep::RowLower,
            DiffRep::ColRaise,
            DiffRep::ColLower,
        ] {
            assert!(diff_rep_check(&table, rep, 6).is_empty(), "{rep:?}");
        }
    }

    #[test]
    fn boundary_position_displays_adjudicated() {
        let c = Catalog::new(8);
        let table = PolyTable::build(8 + 3);
        let report = boundary_position_report(&c, &table);
        // literal readings fail; unit-normalized projected readings hold,
        // except the column structured display as printed (Z where the
        // mirror demands Z̄)
        for check in &report {
            let expect_hold = check.reading.contains("unit-normalized")
                && !check.display.contains("as printed");
            assert_eq!(
                check.holds, expect_hold,
                "{} / {}",
                check.display, check.reading
            );
        }
    }
}
