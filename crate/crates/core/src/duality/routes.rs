//! Hypothesis checks and isomorphism chains built on the duality square:
//! compatibility of `(V, U)`, the coaction route for choosing `V`, the
//! matrix-algebra form at full dual, the detour through the opposite
//! crossed product, and the cleft route.

use crate::actions::ComoduleAlgebraData;
use crate::algebra::{AlgebraData, AlgebraIso};
use crate::crossed::{crossed_from_integral, integral_from_crossed, opposite_crossed, CleftCrossed, CleftData, CrossedProductData};
use crate::error::{Error, Result};
use crate::hopf::HopfData;
use crate::linalg::{solve_many, span_generators, twist, FreeModule, LinearMap, Matrix};
use crate::report::ValidationReport;
use crate::ring::{nonzeros, Scalar, Vector};
use crate::smash::{end_algebra, op_smash, right_smash, Side, SubalgebraU};

use super::coaction::{coaction_table, CoactionKind};
use super::diagram::build_diagram;
use super::maps::{first_diff, lambda_map, rl_check};

/// `φ, ψ: H⊗A → Hom(H, A)` (right side) or `φ̄, ψ̄` (left side).
/// `Hom(H, A)` is indexed `h̃·rank(A) + a`.
#[derive(Clone, Debug)]
pub struct CompatMaps {
    pub side: Side,
    pub phi: LinearMap,
    pub psi: LinearMap,
}

fn hom_h_a(h: &HopfData, a: &AlgebraData) -> Result<FreeModule> {
    h.carrier().dual().tensor(a.carrier())
}

pub fn compat_maps(cp: &CrossedProductData, side: Side) -> Result<CompatMaps> {
    let h = cp.hopf();
    let a = cp.base();
    let ring = h.ring().clone();
    let (n, m) = (h.dim(), a.dim());
    let ha = h.algebra();
    let anti = match side {
        Side::Right => h.twisted_antipode()?.clone(),
        Side::Left => h.antipode().clone(),
    };
    let s = |i: usize| anti.column(i);
    let sigma = cp.sigma();
    let sigma_inv = cp.sigma_inv();
    let act = |x: &[Scalar], v: &[Scalar]| cp.action.act(x, v);
    let domain = h.carrier().tensor(a.carrier())?;
    let codomain = hom_h_a(h, a)?;
    let sw2 = h.coalgebra().sweedler_table(2);
    let sw5 = h.coalgebra().sweedler_table(5);

    let phi = LinearMap::from_fn(&domain, &codomain, |p| {
        let (hh, x) = (p / m, p % m);
        let av = a.basis(x);
        let mut out = ring.zeros(n * m);
        for t in 0..n {
            let mut acc = a.zero();
            for (l, c) in &sw2[t] {
                let v = match side {
                    // [S̄(h̃_2)a]σ(S̄(h̃_1)⊗h)
                    Side::Right => a.mul(&act(&s(l[1]), &av), &sigma.apply_left(&s(l[0]), hh)),
                    // [h̃_1a]σ(h̃_2⊗h)
                    Side::Left => a.mul(cp.action.act_basis(l[0], x), sigma.basis(l[1], hh)),
                };
                ring.axpy(&mut acc, c, &v);
            }
            out[t * m..(t + 1) * m].clone_from_slice(&acc);
        }
        out
    })?;

    let psi = LinearMap::from_fn(&domain, &codomain, |p| {
        let (hh, x) = (p / m, p % m);
        let av = a.basis(x);
        let hv = ha.basis(hh);
        let mut out = ring.zeros(n * m);
        for t in 0..n {
            let mut acc = a.zero();
            for (l, c) in &sw5[t] {
                let v = match side {
                    // σ^{-1}(h̃_3⊗S̄(h̃_2))[h̃_4a]σ(h̃_5⊗S̄(h̃_1)h)
                    Side::Right => {
                        let left = sigma_inv.apply_right(l[2], &s(l[1]));
                        let mid = cp.action.act_basis(l[3], x);
                        let right = sigma.apply_right(l[4], &ha.mul(&s(l[0]), &hv));
                        a.mul(&a.mul(&left, mid), &right)
                    }
                    // σ^{-1}(S(h̃_3)⊗h̃_4)[S(h̃_2)a]σ(S(h̃_1)⊗h̃_5h)
                    Side::Left => {
                        let left = sigma_inv.apply_left(&s(l[2]), l[3]);
                        let mid = act(&s(l[1]), &av);
                        let hb = ha.mul(&ha.basis(l[4]), &hv);
                        let right = sigma.apply(&s(l[0]), &hb);
                        a.mul(&a.mul(&left, &mid), &right)
                    }
                };
                ring.axpy(&mut acc, c, &v);
            }
            out[t * m..(t + 1) * m].clone_from_slice(&acc);
        }
        out
    })?;
    Ok(CompatMaps { side, phi, psi })
}

/// Spanning vectors of `J(A⊗V) ⊆ Hom(H, A)`, `J(a⊗g)(h̃) = g(h̃)a`.
pub fn j_generators(a: &AlgebraData, n: usize, v: &[Vector]) -> Vec<Vector> {
    let ring = a.ring();
    let m = a.dim();
    let mut gens = Vec::with_capacity(m * v.len());
    for x in 0..m {
        for g in v {
            let mut out = ring.zeros(n * m);
            for (t, c) in nonzeros(g) {
                out[t * m + x] = c.clone();
            }
            gens.push(out);
        }
    }
    gens
}

/// First column of `map` outside the span of `gens`, if any.
fn first_outside(map: &LinearMap, gens: &[Vector]) -> Result<Option<usize>> {
    let ring = map.ring();
    let len = map.codomain().rank();
    let cols = map.matrix().columns();
    if gens.is_empty() {
        return Ok(cols.iter().position(|c| c.iter().any(|x| !num_traits::Zero::is_zero(x))));
    }
    let g = Matrix::from_columns(gens, len);
    let res = solve_many(ring, &g, &cols)?;
    Ok(res.iter().position(|r| r.particular.is_none()))
}

/// Compatibility of `(V, U)`: `φ(H⊗A), ψ(H⊗A) ⊆ J(A⊗V)` and the
/// RL-condition, on the side of `U`.
pub fn compat_check(cp: &CrossedProductData, u: &SubalgebraU, v: &[Vector]) -> Result<ValidationReport> {
    let side = u.side();
    let maps = compat_maps(cp, side)?;
    let gens = j_generators(cp.base(), cp.hopf().dim(), v);
    let dom = maps.phi.domain().clone();
    let (p, s) = match side {
        Side::Right => ("φ", "ψ"),
        Side::Left => ("φ̄", "ψ̄"),
    };
    let mut r = ValidationReport::new();
    let w = first_outside(&maps.phi, &gens)?.map(|j| dom.label(j).to_string());
    r.record(format!("{p}(H⊗A) ⊆ J(A⊗V)"), w);
    let w = first_outside(&maps.psi, &gens)?.map(|j| dom.label(j).to_string());
    r.record(format!("{s}(H⊗A) ⊆ J(A⊗V)"), w);
    let rl = rl_check(u, v)?;
    let dual = u.dual().carrier();
    let w = rl.iter().find(|w| w.solution.is_none()).map(|w| dual.render(&w.g));
    r.record("RL-condition for (V, U)", w);
    Ok(r)
}

/// `V = υ^{-1}(H⊗U)` for right `U`, `ω^{-1}(H⊗U)` for left `U`.
pub fn coaction_preimage(u: &SubalgebraU) -> Result<Vec<Vector>> {
    let kind = match u.side() {
        Side::Right => CoactionKind::Upsilon,
        Side::Left => CoactionKind::Omega,
    };
    coaction_table(u.hopf(), kind)?.preimage(u)
}

/// Hypotheses of the coaction route: `(V, U)` compatible with `V` the
/// coaction preimage of `H⊗U`.
pub fn coaction_route_check(cp: &CrossedProductData, u: &SubalgebraU) -> Result<ValidationReport> {
    let v = coaction_preimage(u)?;
    let mut r = compat_check(cp, u, &v)?;
    r.record(
        "V = coaction preimage of H⊗U is nonzero",
        v.is_empty().then(|| "V = 0".to_string()),
    );
    Ok(r)
}

/// Hypotheses of the stable-subalgebra form: the coaction maps `U` into
/// `H⊗U`, and `(U, U)` is compatible. The right side uses `φ, ψ`.
pub fn stable_subalgebra_check(cp: &CrossedProductData, u: &SubalgebraU) -> Result<ValidationReport> {
    let kind = match u.side() {
        Side::Right => CoactionKind::Upsilon,
        Side::Left => CoactionKind::Omega,
    };
    let table = coaction_table(u.hopf(), kind)?;
    let n = u.hopf().dim();
    let ring = u.ring();
    let mut targets = Vec::new();
    for y in 0..n {
        for f in u.elements() {
            let mut t = ring.zeros(n * n);
            for (x, c) in nonzeros(f) {
                t[y * n + x] = c.clone();
            }
            targets.push(t);
        }
    }
    let images: Vec<Vector> = u.elements().iter().map(|f| table.coaction.apply(f).expect("shape")).collect();
    let g = Matrix::from_columns(&targets, n * n);
    let res = solve_many(ring, &g, &images)?;
    let w = res
        .iter()
        .position(|r| r.particular.is_none())
        .map(|i| u.dual().carrier().render(&u.elements()[i]));
    let mut r = ValidationReport::new();
    r.record("coaction(U) ⊆ H⊗U", w);
    r.extend("", compat_check(cp, u, u.elements())?);
    Ok(r)
}

/// The module-algebra case with trivial cocycle: `V` spanned by the
/// coefficient functionals of `A` and their pullbacks along `S̄`.
pub fn coefficient_functionals(cp: &CrossedProductData) -> Result<Vec<Vector>> {
    let h = cp.hopf();
    let a = cp.base();
    let (n, m) = (h.dim(), a.dim());
    let sbar = h.twisted_antipode()?;
    let ring = h.ring();
    let mut gens = Vec::new();
    for x in 0..m {
        for b in 0..m {
            let f: Vector = (0..n).map(|i| cp.action.act_basis(i, x)[b].clone()).collect();
            let fs: Vector = (0..n).map(|i| ring.dot(&f, &sbar.column(i))).collect();
            gens.push(f);
            gens.push(fs);
        }
    }
    Ok(span_generators(ring, &gens, n))
}

/// Trivial cocycle and a module action; `V` from coefficient functionals
/// together with `U` is compatible with `U`.
pub fn module_algebra_check(cp: &CrossedProductData, u: &SubalgebraU) -> Result<ValidationReport> {
    let mut r = ValidationReport::new();
    let trivial = {
        let s = cp.sigma();
        let h = cp.hopf();
        let eps = h.coalgebra().counit();
        let n = h.dim();
        (0..n * n).find(|&p| {
            let c = cp.ring().mul(&eps[p / n], &eps[p % n]);
            *s.basis(p / n, p % n) != cp.ring().scale_vec(&c, cp.base().unit())
        })
    };
    r.record(
        "σ trivial",
        trivial.map(|p| {
            let c = cp.hopf().carrier();
            let n = cp.hopf().dim();
            format!("σ({}⊗{})", c.label(p / n), c.label(p % n))
        }),
    );
    r.record(
        "action is a module action",
        cp.action.module_witness().map(|(i, j, x)| {
            let c = cp.hopf().carrier();
            format!("{}, {}, {}", c.label(i), c.label(j), cp.base().carrier().label(x))
        }),
    );
    let mut v = coefficient_functionals(cp)?;
    let rl = rl_check(u, &v)?;
    let dual = u.dual().carrier();
    r.record(
        "RL-condition for (Cf(A) + S̄*Cf(A), U)",
        rl.iter().find(|w| w.solution.is_none()).map(|w| dual.render(&w.g)),
    );
    v.extend(u.elements().iter().cloned());
    let c = compat_check(cp, u, &v)?;
    for check in c.checks.into_iter().take(2) {
        r.record(check.name.replace('V', "(Cf(A) + S̄*Cf(A) + U)"), check.witness);
    }
    Ok(r)
}

/// The composite `(A#_σH)#U → A⊗(H#U) → A⊗End_R(H) → A⊗M_n(R) → M_n(A)`
/// with every leg certified.
#[derive(Clone, Debug)]
pub struct MatrixChain {
    pub legs: Vec<AlgebraIso>,
    pub iso: AlgebraIso,
}

pub fn matrix_iso(cp: &CrossedProductData) -> Result<MatrixChain> {
    let u = SubalgebraU::full(cp.hopf(), Side::Right)?;
    matrix_iso_with(cp, &u)
}

/// As [`matrix_iso`] for any right `U` of the rank of `H`; a lattice `U`
/// that is not all of `H*` fails with `NotInvertible`.
pub fn matrix_iso_with(cp: &CrossedProductData, u: &SubalgebraU) -> Result<MatrixChain> {
    let h = cp.hopf();
    let a = cp.base();
    let ring = h.ring();
    let (n, m) = (h.dim(), a.dim());
    let leg1 = build_diagram(cp, u)?.duality_iso()?;

    let end = end_algebra(h.carrier());
    let a_end = a.tensor(&end)?;
    let lam = LinearMap::identity(a.carrier()).kron(&lambda_map(u)?)?;
    let lam = lam.with_modules(leg1.target.carrier(), a_end.carrier())?;
    let leg2 = AlgebraIso::certify(lam, &leg1.target, &a_end)?;

    let mn = AlgebraData::matrix_algebra(ring, n);
    let a_mn = a.tensor(&mn)?;
    // [x↦y] ↦ e_{yx}
    let perm = LinearMap::from_fn(a_end.carrier(), a_mn.carrier(), |p| {
        let (x, q) = (p / (n * n), p % (n * n));
        let (src, dst) = (q / n, q % n);
        ring.unit_vector(m * n * n, x * n * n + dst * n + src)
    })?;
    let leg3 = AlgebraIso::certify(perm, &a_end, &a_mn)?;

    let mn_a = mn.tensor(a)?;
    let tw = twist(a.carrier(), mn.carrier())?.with_modules(a_mn.carrier(), mn_a.carrier())?;
    let leg4 = AlgebraIso::certify(tw, &a_mn, &mn_a)?;

    let iso = leg4.compose(&leg3)?.compose(&leg2)?.compose(&leg1)?;
    Ok(MatrixChain {
        legs: vec![leg1, leg2, leg3, leg4],
        iso,
    })
}

/// The detour `(A#_σH)#U ≅ ((A^op#_τH^op)#^opU')^op ≅ (A^op⊗(H^op#^opU'))^op
/// ≅ A⊗(H^op#^opU')^op ≅ A⊗(H#U)`, where `U'` is `U` seen as a left
/// module subalgebra of `(H^op)*`.
#[derive(Clone, Debug)]
pub struct OppositeChain {
    pub steps: Vec<AlgebraIso>,
    pub iso: AlgebraIso,
    /// Whether the composite equals `χ^{-1}∘γ` for `(cp, U)`.
    pub equals_direct: bool,
}

pub fn opposite_chain(cp: &CrossedProductData, u: &SubalgebraU) -> Result<OppositeChain> {
    if u.side() != Side::Right {
        return Err(Error::SideMismatch);
    }
    let h = cp.hopf();
    let oc = opposite_crossed(cp)?;
    let c = &oc.crossed;
    let ucop = u.for_opposite()?;

    let x = right_smash(&cp.comodule, u)?.algebra;
    let xc = op_smash(&c.comodule, &ucop)?.algebra;
    let xc_op = xc.opposite();
    let psi_inv = oc.iso.inverse.kron(&LinearMap::identity(u.carrier()))?;
    let step1 = AlgebraIso::certify(psi_inv.with_modules(x.carrier(), xc_op.carrier())?, &x, &xc_op)?;

    let iso2 = build_diagram(c, &ucop)?.duality_iso()?;
    let y_op = iso2.target.opposite();
    let step2 = AlgebraIso::certify(iso2.map.with_modules(xc_op.carrier(), y_op.carrier())?, &xc_op, &y_op)?;

    let k = op_smash(&ComoduleAlgebraData::regular(c.hopf()), &ucop)?.algebra;
    let a_kop = cp.base().tensor(&k.opposite())?;
    let id3 = LinearMap::identity(y_op.carrier()).with_modules(y_op.carrier(), a_kop.carrier())?;
    let step3 = AlgebraIso::certify(id3, &y_op, &a_kop)?;

    let hu = right_smash(&ComoduleAlgebraData::regular(h), u)?.algebra;
    let target = cp.base().tensor(&hu)?;
    let id4 = LinearMap::identity(a_kop.carrier()).with_modules(a_kop.carrier(), target.carrier())?;
    let step4 = AlgebraIso::certify(id4, &a_kop, &target)?;

    let iso = step4.compose(&step3)?.compose(&step2)?.compose(&step1)?;
    let direct = build_diagram(cp, u)?.duality_iso()?;
    let equals_direct = iso.map.same_matrix(&direct.map);
    Ok(OppositeChain {
        steps: vec![step1, step2, step3, step4],
        iso,
        equals_direct,
    })
}

/// `B#U ≅ (A#_σH)#U ≅ A⊗(H#U)` for a cleft extension, through the crossed
/// product recovered from the integral.
#[derive(Clone, Debug)]
pub struct CleftDuality {
    pub recovered: CleftCrossed,
    pub iso: AlgebraIso,
}

pub fn cleft_duality(cl: &CleftData, u: &SubalgebraU) -> Result<CleftDuality> {
    let rec = crossed_from_integral(cl)?;
    let xb = right_smash(&cl.comodule, u)?.algebra;
    let xr = right_smash(&rec.crossed.comodule, u)?.algebra;
    let back = rec.iso.inverse.kron(&LinearMap::identity(u.carrier()))?;
    let step = AlgebraIso::certify(back.with_modules(xb.carrier(), xr.carrier())?, &xb, &xr)?;
    let iso = build_diagram(&rec.crossed, u)?.duality_iso()?.compose(&step)?;
    Ok(CleftDuality { recovered: rec, iso })
}

/// Runs the cleft route on the extension `A ⊆ A#_σH` and compares it with
/// `χ^{-1}∘γ`, after identifying the recovered coinvariants with `A` by
/// `id⊗ε`.
pub fn cleft_matches_direct(cp: &CrossedProductData, u: &SubalgebraU) -> Result<Option<String>> {
    let cl = integral_from_crossed(cp)?;
    let cd = cleft_duality(&cl, u)?;
    let h = cp.hopf();
    let a = cp.base();
    let n = h.dim();
    let ring = h.ring();
    let eps = h.coalgebra().counit();
    let basis = cd.recovered.coinvariants.basis();
    let to_a = LinearMap::from_fn(cd.recovered.crossed.base().carrier(), a.carrier(), |i| {
        let mut out = a.zero();
        for (p, c) in nonzeros(&basis[i]) {
            ring.add_mul_assign(&mut out[p / n], c, &eps[p % n]);
        }
        out
    })?;
    let hu = right_smash(&ComoduleAlgebraData::regular(h), u)?.algebra;
    let transport = to_a.kron(&LinearMap::identity(hu.carrier()))?;
    let routed = transport.compose(&cd.iso.map)?;
    let direct = build_diagram(cp, u)?.duality_iso()?;
    if routed.domain().rank() != direct.map.domain().rank() {
        return Ok(Some("ranks differ".into()));
    }
    let routed = routed.with_modules(direct.map.domain(), direct.map.codomain())?;
    Ok(first_diff(&routed, &direct.map).map(|j| direct.source.carrier().label(j).to_string()))
}
