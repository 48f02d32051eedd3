"""Claim registry, orchestration and deterministic report emission.

Every named check in the package is wrapped as a ClaimRecord with a short
source phrasing, a kind (exact / numeric / contested-by-design) and a
status assigned only by running the verifier.  Claims of kind
contested-by-design publish their measured residuals and can never fail
the suite; exact and numeric claims decide the exit status.

Machine-readable reports are JSON with sorted keys and every float
rendered to 17 significant digits, so identical configuration and seed
reproduce byte-identical output.  Wall-clock runtimes are tracked on the
records but excluded from the machine document to keep it stable.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, asdict

import numpy as np

from . import __version__
from .exact import real_span_dim
from .gammas import build_gamma_set
from .grid import Grid, GridConfig, make_test_states

SCHEMA = "diracsym-report/1"

TOL = {
    "fw_numeric": 1e-8,        # multiplier/matrix identities
    "grid_potential": 1e-6,    # checks involving the sampled potential
    "spin_orbit": 1e-10,
    "kd_anticommutator": 1e-8,
    "spectrum": 1e-6,
    "degeneracy": 1e-8,
    "so4_block": 1e-8,
    "unitarity": 1e-12,
    "negative_control_floor": 1e-2,
}


@dataclass
class ClaimRecord:
    id: str
    anchor: str
    kind: str                      # exact | numeric | contested-by-design
    status: str = "pending"        # verified-exact | verified-numeric | failed | contested
    residual: float | None = None
    tolerance: float | None = None
    runtime_s: float = 0.0
    details: dict = field(default_factory=dict)

    def finish_exact(self, ok: bool, details=None):
        self.status = "verified-exact" if ok else "failed"
        if details:
            self.details.update(details)

    def finish_numeric(self, residual: float, tolerance: float, details=None):
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        ok = residual <= tolerance
        if self.kind == "contested-by-design":
            self.status = "verified-numeric" if ok else "contested"
        else:
            self.status = "verified-numeric" if ok else "failed"
        if details:
            self.details.update(details)


@dataclass(frozen=True)
class RunConfig:
    """Suite-level configuration; grid size must be a power of two."""

    grid_n: int = 32
    box: float = 10.0
    mass: float = 1.0
    zalpha: float = 1.0 / 137.035999084
    seed: int = 752
    tol_numeric: float = TOL["fw_numeric"]
    form: str = "both"             # FW-A | FW-B | both

    def __post_init__(self):
        n = self.grid_n
        if n < 16 or (n & (n - 1)) != 0:
            raise ValueError("grid size must be a power of two, at least 16")
        if not 0.0 < self.zalpha < 1.0:
            raise ValueError("coupling must satisfy 0 < zalpha < 1")
        if self.form not in ("FW-A", "FW-B", "both"):
            raise ValueError("form must be FW-A, FW-B or both")

    def grid_config(self) -> GridConfig:
        return GridConfig(n=self.grid_n, box=self.box, mass=self.mass,
                          zalpha=self.zalpha, seed=self.seed)


# ---------------------------------------------------------------------------
# claim runners
# ---------------------------------------------------------------------------

def _claim_anti14(cfg: RunConfig, rec: ClaimRecord):
    from .exact import anticommutator, compose, RealLinearOp
    from .exact import I_UNIT, sc
    g = build_gamma_set()
    ident = RealLinearOp.identity()
    count = 0
    ok = True
    for a in range(1, 8):
        for b in range(a, 8):
            res = anticommutator(g[a], g[b])
            want = ident.scale(sc(-2)) if a == b else RealLinearOp.zero()
            ok &= res == want
            count += 1
    prod = ident
    for a in range(1, 8):
        prod = compose(prod, g[a])
    ok &= prod == ident
    ok &= compose(g[5], g[6]) == ident.scale(I_UNIT)
    rec.finish_exact(ok, {"relations": count, "product_identity": prod == ident})


def _claim_cliff64(cfg: RunConfig, rec: ClaimRecord):
    from .so8 import build_clifford64, clifford64_closure_report
    elems = build_clifford64(build_gamma_set())
    rep = clifford64_closure_report(elems)
    rec.finish_exact(rep.status == "verified-exact" and rep.real_dimension == 64,
                     {"element_count": rep.element_count,
                      "real_dimension": rep.real_dimension,
                      "products_checked": rep.relations_checked})


def _claim_so8(cfg: RunConfig, rec: ClaimRecord):
    from .so8 import build_so8, verify_so8
    rep = verify_so8(build_so8(build_gamma_set()))
    rec.finish_exact(rep.status == "verified-exact",
                     {"relations_checked": rep.relations_checked,
                      "real_dimension": rep.real_dimension,
                      "failures": [lbl for lbl, _ in rep.failures]})


def _claim_su2_pair(cfg: RunConfig, rec: ClaimRecord):
    from .so8 import build_so8, verify_su2_pair
    rep = verify_su2_pair(build_so8(build_gamma_set()))
    rec.finish_exact(rep.status == "verified-exact",
                     {"relations_checked": rep.relations_checked})


def _claim_31dim(cfg: RunConfig, rec: ClaimRecord):
    from .so8 import build_algebra31, verify_algebra31
    from .evolution import build_form, formal_commutator
    elems = build_algebra31(build_gamma_set())
    rep = verify_algebra31(elems)
    free = build_form("FW-A", include_potential=False)
    free_ok = all(formal_commutator(op, free).commutes for _, op in elems)
    rec.finish_exact(
        rep.status == "verified-exact" and rep.real_dimension == 31 and free_ok,
        {"element_count": rep.element_count,
         "real_dimension": rep.real_dimension,
         "bracket_pairs": rep.relations_checked,
         "free_evolution_all_commute": free_ok})


def _so6_column(form_label: str):
    """Verdicts for all 31 invariance-algebra elements against one form."""
    from .so8 import build_algebra31
    from .evolution import build_form, sweep_invariance
    elems = build_algebra31(build_gamma_set())
    form = build_form(form_label)
    col = {}
    for name, rep in sweep_invariance(elems, form):
        col[name] = rep.status
    return col


def _claim_fwa_so6(cfg: RunConfig, rec: ClaimRecord):
    col = _so6_column("FW-A")
    n_comm = sum(1 for v in col.values() if v == "commutes")
    rec.details["column"] = col
    rec.details["commuting"] = n_comm
    # the two normalizations disagree on the antilinear elements; that
    # discrepancy is the published finding, never a failure
    rec.residual = float(len(col) - n_comm)
    rec.tolerance = 0.0
    rec.status = "verified-numeric" if n_comm == len(col) else "contested"


def _claim_fwb_so6(cfg: RunConfig, rec: ClaimRecord):
    col = _so6_column("FW-B")
    n_comm = sum(1 for v in col.values() if v == "commutes")
    rec.details["column"] = col
    rec.details["commuting"] = n_comm
    rec.finish_exact(n_comm == len(col))


def _claim_lorentz(label):
    def run(cfg: RunConfig, rec: ClaimRecord):
        from .lorentz import build_lorentz, verify_so13
        rep = verify_so13(build_lorentz(label))
        rec.finish_exact(rep.status == "verified-exact",
                         {"relations_checked": rep.relations_checked})
    return run


def _claim_w_inv(cfg: RunConfig, rec: ClaimRecord):
    from .exact import RealLinearOp, compose
    from .lorentz import build_transition_w
    w = build_transition_w()
    ident = RealLinearOp.identity()
    ok = (compose(w.W, w.W_inv) == ident and compose(w.W_inv, w.W) == ident)
    rec.finish_exact(ok)


def _claim_eq26(cfg: RunConfig, rec: ClaimRecord):
    from .lorentz import build_lorentz, build_transition_w, verify_spin_block
    rep = verify_spin_block(build_transition_w(), build_lorentz("TS"))
    rec.finish_exact(rep.status == "verified-exact",
                     {"relations_checked": rep.relations_checked,
                      "failures": [lbl for lbl, _ in rep.failures]})


def _claim_casimir(cfg: RunConfig, rec: ClaimRecord):
    from fractions import Fraction
    from .exact import Matrix4, RealLinearOp, ZERO, compose, sc
    from .lorentz import build_lorentz, build_transition_w, casimir_so13
    g = build_gamma_set()
    ident = RealLinearOp.identity()
    checks = {}
    c1, c2 = casimir_so13(build_lorentz("I"))
    checks["spinor_I_c1"] = c1 == ident.scale(sc(Fraction(-3, 2)))
    checks["spinor_I_c2"] = c2 == g.gamma0.scale(sc(0, 0, Fraction(-3, 2)))
    c1, c2 = casimir_so13(build_lorentz("V"))
    checks["vector_c1"] = c1 == ident.scale(sc(-3))
    checks["vector_c2_zero"] = c2.is_zero
    c1, _ = casimir_so13(build_lorentz("TS"))
    w = build_transition_w()
    c1w = compose(compose(w.W, c1), w.W_inv)
    want = RealLinearOp.from_linear(Matrix4.diag(sc(-4), sc(-4), sc(-4), ZERO))
    checks["tensor_scalar_c1_block"] = c1w == want
    rec.finish_exact(all(checks.values()), checks)


def _claim_lor_hermiticity(cfg: RunConfig, rec: ClaimRecord):
    from .lorentz import build_lorentz, hermiticity_table
    tables = {lbl: dict(hermiticity_table(build_lorentz(lbl)))
              for lbl in ("I", "II", "TS", "V")}
    all_anti = all(kind == "anti-hermitian"
                   for t in tables.values() for kind in t.values())
    rec.details["tables"] = tables
    rec.residual = 0.0 if all_anti else 1.0
    rec.tolerance = 0.0
    # boosts come out Hermitian under the fixed adjoint; the printed
    # anti-Hermiticity statement holds only for the rotation sector
    rec.status = "verified-exact" if all_anti else "contested"


def _claim_lor_cross(cfg: RunConfig, rec: ClaimRecord):
    from .lorentz import build_lorentz, cross_commutators
    table = cross_commutators(build_lorentz("I"), build_lorentz("II"))
    nonzero = [lbl for lbl, res in table if not res.is_zero]
    rec.details["nonzero_brackets"] = nonzero
    rec.residual = float(len(nonzero))
    rec.tolerance = 0.0
    rec.status = "verified-exact" if not nonzero else "contested"


def _claim_pg(cfg: RunConfig, rec: ClaimRecord):
    from .observables import verify_pauli_gursey
    rep = verify_pauli_gursey()
    rec.finish_exact(rep.status == "verified-exact" and rep.real_dimension == 3,
                     {"real_dimension": rep.real_dimension,
                      "relations_checked": rep.relations_checked})


def _motion_reports(cfg: RunConfig, cache={}):
    key = (cfg.grid_n, cfg.box, cfg.mass, cfg.zalpha, cfg.seed)
    if key not in cache:
        from .observables import constants_of_motion_report
        cache.clear()
        cache[key] = constants_of_motion_report(cfg.grid_config())
    return cache[key]


def _claim_const_jk(cfg: RunConfig, rec: ClaimRecord):
    rep = _motion_reports(cfg)
    worst = max(rep[k] for k in ("J1", "J2", "J3", "K"))
    rec.finish_numeric(worst, TOL["grid_potential"],
                       {k: rep[k] for k in ("J1", "J2", "J3", "K")})


def _claim_k_sq(cfg: RunConfig, rec: ClaimRecord):
    rep = _motion_reports(cfg)
    rec.finish_numeric(rep["spin_orbit_identity"], TOL["spin_orbit"])


def _claim_kd_anti(cfg: RunConfig, rec: ClaimRecord):
    rep = _motion_reports(cfg)
    rec.finish_numeric(rep["KD_anticommutator"], TOL["kd_anticommutator"])


def _claim_negctrl(cfg: RunConfig, rec: ClaimRecord):
    rep = _motion_reports(cfg)
    floor = TOL["negative_control_floor"]
    rec.residual = float(rep["negative_control"])
    rec.tolerance = floor
    rec.status = ("verified-numeric" if rep["negative_control"] >= floor
                  else "failed")
    rec.details["note"] = "residual must exceed the floor"


def _radial_states(cfg: RunConfig, cache={}):
    key = (cfg.zalpha,)
    if key not in cache:
        from .radial import RadialConfig, solve_radial
        rcfg = RadialConfig(zalpha=cfg.zalpha, mass=cfg.mass)
        cache.clear()
        cache[key] = (rcfg, solve_radial(3, range(-2, 3), rcfg))
    return cache[key]


def _claim_spectrum(cfg: RunConfig, rec: ClaimRecord):
    from .radial import sommerfeld_energy
    rcfg, states = _radial_states(cfg)
    devs = {}
    for s in states:
        ref = sommerfeld_energy(s.n, s.kappa, rcfg.zalpha)
        devs[f"n={s.n},kappa={s.kappa:+d}"] = abs(s.energy - ref) / ref
    by_label = {(s.n, s.kappa): s.energy for s in states}
    degen = {}
    for (n, k) in ((2, 1), (3, 1), (3, 2)):
        degen[f"n={n},|kappa|={k}"] = (
            abs(by_label[(n, -k)] - by_label[(n, k)]) / by_label[(n, k)])
    worst = max(devs.values())
    rec.details["closed_form_deviation"] = devs
    rec.details["degenerate_pairs"] = degen
    rec.details["degeneracy_tolerance"] = TOL["degeneracy"]
    ok_deg = max(degen.values()) <= TOL["degeneracy"]
    rec.finish_numeric(worst, TOL["spectrum"])
    if rec.status == "verified-numeric" and not ok_deg:
        rec.status = "failed"


def _claim_jl(cfg: RunConfig, rec: ClaimRecord):
    from .radial import verify_johnson_lippmann
    rcfg, states = _radial_states(cfg)
    rep = verify_johnson_lippmann(states, rcfg.zalpha)
    worst_sq = max(e["d_squared_deviation"] for e in rep["states"].values())
    worst_map = max(
        e.get("partner_leak", e.get("annihilation_norm", 0.0))
        for e in rep["states"].values())
    worst_dh = max(e["dh_commutator"] for e in rep["states"].values())
    rec.details["per_state"] = rep["states"]
    rec.finish_numeric(max(worst_sq, worst_map, worst_dh),
                       TOL["grid_potential"],
                       {"d_squared_worst": worst_sq,
                        "partner_mapping_worst": worst_map,
                        "dh_commutator_worst": worst_dh})


def _claim_so4(cfg: RunConfig, rec: ClaimRecord):
    from .radial import verify_so4
    rcfg, states = _radial_states(cfg)
    rep = verify_so4(states, rcfg.zalpha)
    worst = 0.0
    for b in rep["blocks"].values():
        worst = max(worst, b["t_squared_deviation"],
                    b["so4_rotation_vector_defect"], b["su2_half_sum"],
                    b["su2_half_diff"], b["half_pair_commutation"])
    rec.details["blocks"] = rep["blocks"]
    rec.details["incomplete"] = rep["incomplete"]
    rec.finish_numeric(worst, TOL["so4_block"])


def _claim_so4_printed_pair(cfg: RunConfig, rec: ClaimRecord):
    from .radial import verify_so4
    rcfg, states = _radial_states(cfg)
    rep = verify_so4(states, rcfg.zalpha)
    worst = max(b["printed_pair_cross_norm"] for b in rep["blocks"].values())
    rec.finish_numeric(worst, 0.0 if worst == 0 else TOL["so4_block"],
                       {"note": "unhalved sum/difference pair closes as the"
                                " rotation/vector presentation; elementwise"
                                " commutation holds for the halved pair"})


def _claim_fw_unitary(cfg: RunConfig, rec: ClaimRecord):
    from .fw import build_fw_unitary
    grid = Grid(cfg.grid_config())
    fw = build_fw_unitary(grid)
    rec.finish_numeric(fw.unitarity_defect, TOL["unitarity"])


def _claim_tilde_gamma(cfg: RunConfig, rec: ClaimRecord):
    from .fw import verify_tilde_gammas
    grid = Grid(cfg.grid_config())
    rep = verify_tilde_gammas(grid)
    tol = cfg.tol_numeric
    worst = max(rep["clifford_residual"], rep["oracle_deviation_max"],
                rep["diagonalization_residual"])
    rec.finish_numeric(worst, tol, {
        "clifford_residual": rep["clifford_residual"],
        "oracle_deviation": rep["oracle_deviation"],
        "diagonalization_residual": rep["diagonalization_residual"]})


def _tilde_invariance(cfg: RunConfig, cache={}):
    key = (cfg.grid_n, cfg.box, cfg.mass, cfg.zalpha, cfg.seed, cfg.tol_numeric)
    if key not in cache:
        from .fw import verify_tilde_invariance
        cache.clear()
        cache[key] = verify_tilde_invariance(cfg.grid_config(),
                                             free_tol=cfg.tol_numeric)
    return cache[key]


def _claim_tilde_free(cfg: RunConfig, rec: ClaimRecord):
    rep = _tilde_invariance(cfg)
    rec.finish_numeric(rep["free_max"], cfg.tol_numeric)


def _claim_tilde_coul(cfg: RunConfig, rec: ClaimRecord):
    rep = _tilde_invariance(cfg)
    rec.details["per_element"] = {
        k: {"residual": v["coulomb"], "status": v["coulomb_status"]}
        for k, v in rep["elements"].items()}
    rec.finish_numeric(rep["coulomb_max"], cfg.tol_numeric)


def _claim_tilde_lorentz(cfg: RunConfig, rec: ClaimRecord):
    from .fw import verify_bosonic_tilde
    rep = verify_bosonic_tilde(cfg.grid_config())
    worst = max(max(rep["sets"].values()), rep["casimir_block_residual"],
                rep["w_inverse_residual"])
    rec.finish_numeric(worst, cfg.tol_numeric,
                       {"sets": rep["sets"],
                        "casimir_block_residual": rep["casimir_block_residual"],
                        "w_inverse_residual": rep["w_inverse_residual"]})


def _claim_tilde_ctilde(cfg: RunConfig, rec: ClaimRecord):
    from .fw import ctilde_analysis
    rep = ctilde_analysis(cfg.grid_config())
    rec.finish_numeric(rep["printed_vs_conjugation_symbol"], cfg.tol_numeric,
                       rep)


# (claim id, anchor phrasing, kind, group, runner)
_REGISTRY = [
    ("CL-ANTI-14", "satisfy the anti-commutation relations",
     "exact", "algebra", _claim_anti14),
    ("CL-CLIFF64", "the set of 64 elements",
     "exact", "algebra", _claim_cliff64),
    ("CL-SO8-19", "commutation relations of the Lie algebra SO(8)",
     "exact", "so8", _claim_so8),
    ("CL-SU2-PAIR", "two different sets of SU(2) spin 1/2 generators",
     "exact", "so8", _claim_su2_pair),
    ("CL-31DIM", "31 operators, which form the 31-dimensional algebra",
     "exact", "so8", _claim_31dim),
    ("CL-FWA-SO6", "determines the algebra of invariance",
     "contested-by-design", "so8", _claim_fwa_so6),
    ("CL-FWB-SO6", "determines the algebra of invariance",
     "exact", "so8", _claim_fwb_so6),
    ("CL-LOR-28-I", "commutation relations of the Lie algebra SO(1,3)",
     "exact", "lorentz", _claim_lorentz("I")),
    ("CL-LOR-28-II", "commutation relations of the Lie algebra SO(1,3)",
     "exact", "lorentz", _claim_lorentz("II")),
    ("CL-LOR-28-TS", "commutation relations of the Lie algebra SO(1,3)",
     "exact", "lorentz", _claim_lorentz("TS")),
    ("CL-LOR-28-V", "commutation relations of the Lie algebra SO(1,3)",
     "exact", "lorentz", _claim_lorentz("V")),
    ("CL-W-INV", "WW^-1 = W^-1 W = I_4",
     "exact", "lorentz", _claim_w_inv),
    ("CL-EQ26", "the Bose character of the operators is evident",
     "exact", "lorentz", _claim_eq26),
    ("CL-CASIMIR", "tensor-scalar D(1,0)+(0,0) and irreducible vector D(1/2,1/2)",
     "exact", "lorentz", _claim_casimir),
    ("CL-LOR-AH", "Anti-Hermitian operators of every set",
     "contested-by-design", "lorentz", _claim_lor_hermiticity),
    ("CL-LOR-CROSS", "taking the combinations of operators",
     "contested-by-design", "lorentz", _claim_lor_cross),
    ("CL-PG", "The Pauli-Gursey operators",
     "exact", "known", _claim_pg),
    ("CL-CONST-JK", "three components of the vector J ... constants of motion",
     "numeric", "known", _claim_const_jk),
    ("CL-K-SQ", "K^2 = J^2 + 1/4",
     "numeric", "known", _claim_k_sq),
    ("CL-KD-ANTI", "anti-commutes with the Dirac symmetry operator K",
     "numeric", "known", _claim_kd_anti),
    ("CL-NEGCTRL", "artifact control; no published statement",
     "numeric", "known", _claim_negctrl),
    ("CL-JL-SQ", "D^2 = 1 + (H^2/m^2 - 1) K^2 / (Z^2 e^4)",
     "numeric", "known", _claim_jl),
    ("CL-SO4", "SO(4) symmetry of the Dirac equation ... given by the six operators",
     "numeric", "known", _claim_so4),
    ("CL-SO4-PRINTED-PAIR", "I = J + T, R = J - T",
     "contested-by-design", "known", _claim_so4_printed_pair),
    ("CL-SPECTRUM", "Dirac equation in the external Coulomb field",
     "numeric", "spectrum", _claim_spectrum),
    ("CL-FW-UNITARY", "inverse Foldy-Wouthuysen transformation",
     "numeric", "fw", _claim_fw_unitary),
    ("CL-TILDE-GAMMA", "the images of gamma matrices in the Dirac representation",
     "numeric", "fw", _claim_tilde_gamma),
    ("CL-TILDE-FREE", "commute with the operator of the Dirac equation in the"
     " Foldy-Wouthuysen representation",
     "numeric", "fw", _claim_tilde_free),
    ("CL-TILDE-COUL", "invariant with respect to the 31-dimensional gamma"
     " matrix representation",
     "contested-by-design", "fw", _claim_tilde_coul),
    ("CL-TILDE-LOR-28", "satisfy the commutation relations ... as well",
     "numeric", "fw", _claim_tilde_lorentz),
    ("CL-TILDE-CTILDE", "C~ = (I + 2(i g1 d1 + i g2 d2)/sqrt(2 omega(omega+m))) C",
     "contested-by-design", "fw", _claim_tilde_ctilde),
]

CLAIM_IDS = [c[0] for c in _REGISTRY]
GROUPS = ("algebra", "so8", "lorentz", "known", "fw", "spectrum")


def clear_caches():
    """Drop memoized heavy intermediates (for determinism tests)."""
    for fn in (_motion_reports, _radial_states, _tilde_invariance):
        fn.__defaults__[0].clear()


def claim_catalog() -> list[dict]:
    return [{"id": cid, "anchor": anchor, "kind": kind, "group": group}
            for cid, anchor, kind, group, _ in _REGISTRY]


def run_suite(cfg: RunConfig, selection: str | None = None) -> dict:
    """Execute selected claims (comma-separated ids or group names; None
    means everything) and assemble the report document."""
    chosen = []
    if selection:
        wanted = {s.strip() for s in selection.split(",") if s.strip()}
        unknown = wanted - set(CLAIM_IDS) - set(GROUPS)
        if unknown:
            raise ValueError(f"unknown claim ids or groups: {sorted(unknown)}")
        for entry in _REGISTRY:
            if entry[0] in wanted or entry[3] in wanted:
                chosen.append(entry)
    else:
        chosen = list(_REGISTRY)
    if cfg.form != "both":
        drop = "CL-FWB-SO6" if cfg.form == "FW-A" else "CL-FWA-SO6"
        chosen = [e for e in chosen if e[0] != drop]

    records = []
    for cid, anchor, kind, group, runner in chosen:
        rec = ClaimRecord(id=cid, anchor=anchor, kind=kind)
        t0 = time.time()
        runner(cfg, rec)
        rec.runtime_s = time.time() - t0
        rec.details["group"] = group
        records.append(rec)

    failed = [r.id for r in records if r.status == "failed"]
    contested = [r.id for r in records if r.status == "contested"]
    doc = {
        "schema": SCHEMA,
        "package_version": __version__,
        "config": {
            "grid_n": cfg.grid_n, "box": cfg.box, "mass": cfg.mass,
            "zalpha": cfg.zalpha, "seed": cfg.seed,
            "tol_numeric": cfg.tol_numeric, "form": cfg.form,
        },
        "claims": {r.id: {
            "anchor": r.anchor,
            "kind": r.kind,
            "status": r.status,
            "residual": r.residual,
            "tolerance": r.tolerance,
            "details": r.details,
        } for r in records},
        "summary": {
            "total": len(records),
            "failed": sorted(failed),
            "contested": sorted(contested),
            "exit_code": 1 if failed else 0,
        },
    }
    doc["_runtimes"] = {r.id: r.runtime_s for r in records}
    return doc


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _stable(obj):
    """floats to 17 significant digits as strings, keys sorted."""
    if isinstance(obj, dict):
        return {str(k): _stable(obj[k]) for k in sorted(obj, key=str)}
    if isinstance(obj, (list, tuple)):
        return [_stable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (float, np.floating)):
        return format(float(obj), ".17g")
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    return obj


def render_machine(doc: dict) -> str:
    body = {k: v for k, v in doc.items() if not k.startswith("_")}
    return json.dumps(_stable(body), sort_keys=True, indent=1) + "\n"


def render_text(doc: dict) -> str:
    lines = [f"{doc['schema']}  (package {doc['package_version']})"]
    cfgline = ", ".join(f"{k}={v}" for k, v in sorted(doc["config"].items()))
    lines.append(f"config: {cfgline}")
    lines.append("")
    runtimes = doc.get("_runtimes", {})
    for cid in sorted(doc["claims"]):
        c = doc["claims"][cid]
        res = ""
        if c["residual"] is not None:
            res = f"  residual={c['residual']:.3e}"
            if c["tolerance"]:
                res += f" (tol {c['tolerance']:.1e})"
        dt = runtimes.get(cid)
        dts = f"  [{dt:.2f}s]" if dt is not None else ""
        lines.append(f"{cid:22s} {c['status']:18s}{res}{dts}")
    s = doc["summary"]
    lines.append("")
    lines.append(f"total {s['total']}, failed {len(s['failed'])}, "
                 f"contested {len(s['contested'])}")
    if s["failed"]:
        lines.append("FAILED: " + ", ".join(s["failed"]))
    if s["contested"]:
        lines.append("contested: " + ", ".join(s["contested"]))
    return "\n".join(lines) + "\n"
