"""
Verification suites: named checks grouped by subject, and the runner.

Every check gets its own generator seeded from (seed, crc32(check_id)), so a
check replays identically whether it runs alone or inside `all`.
"""

import logging
import time
import zlib
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import configs, congruence, lattice, segre, weddle
from .config import (
    CONGRUENCE_MIN_GENERIC, CONGRUENCE_PARAM_SETS, CONGRUENCE_PROBES, DEFAULT_BUDGET_MS, DEFAULT_SEED,
    DOUBLE_PLANE_SAMPLES, ENUM_FIELD, KUMMER_TRIALS, LINE_SCAN_SAMPLES, MAX_ENUM_FIELD_DEGREE, MAX_SAMPLES,
    MIN_BUDGET_MS, POLAR_SAMPLES, SAMPLE_FIELD, TEN_CONICS_SAMPLES, WEDDLE_SAMPLES,
)
from .errors import (
    CheckSkipped, DegenerateF2, DegeneratePolar, GenericityError, InconclusiveSample, ResampleRequired,
    VerificationFailure,
)
from .gf2k import FieldSpec, field_make
from .mvpoly import MultiPoly, is_singular_at, monomials_of_degree
from .projgeom import random_line, random_point, restrict_to_line
from .report import CheckRecord, SuiteReport

logger = logging.getLogger(__name__)

SUITE_NAMES = ("weddle", "segre", "congruence", "configs", "lattice")


@dataclass
class SuiteOptions:
    enum_field: FieldSpec
    sample_field: FieldSpec
    seed: int = DEFAULT_SEED
    samples: Optional[int] = None
    params: Optional[Tuple[int, ...]] = None
    budget_ms: int = DEFAULT_BUDGET_MS

    @classmethod
    def build(
        cls,
        field: Optional[str] = None,
        seed: int = DEFAULT_SEED,
        samples: Optional[int] = None,
        params: Optional[str] = None,
        budget_ms: int = DEFAULT_BUDGET_MS,
    ) -> "SuiteOptions":
        """
        Validate raw option values; every problem raises ValueError.

        A given field replaces both the enumeration and the sampling field.
        """
        enum_field = FieldSpec.parse(field or ENUM_FIELD)
        sample_field = FieldSpec.parse(field or SAMPLE_FIELD)
        if samples is not None and not 1 <= samples <= MAX_SAMPLES:
            raise ValueError(f"samples must be in [1, {MAX_SAMPLES}], got {samples}")
        if budget_ms < MIN_BUDGET_MS:
            raise ValueError(f"budget must be at least {MIN_BUDGET_MS} ms")
        values = None
        if params:
            try:
                values = tuple(int(part, 16) for part in params.split(","))
            except ValueError:
                raise ValueError(f"parameters must be comma-separated hex values, got {params!r}") from None
            if len(values) not in (4, 12):
                raise ValueError(f"4 (Weddle) or 12 (congruence) parameters expected, got {len(values)}")
            if any(not 0 <= v < enum_field.order for v in values):
                raise ValueError(f"parameters out of range for {enum_field}")
        return cls(enum_field, sample_field, seed, samples, values, budget_ms)

    def describe(self) -> str:
        return f"{self.enum_field},{self.sample_field}"


@dataclass
class SuiteContext:
    """Options plus objects shared between the checks of one run."""
    options: SuiteOptions
    cache: Dict[str, object] = dc_field(default_factory=dict)

    def rng(self, check_id: str) -> np.random.Generator:
        return np.random.default_rng([self.options.seed, zlib.crc32(check_id.encode())])

    def count(self, default: int) -> int:
        return self.options.samples if self.options.samples is not None else default

    def require_enumerable(self) -> FieldSpec:
        f = self.options.enum_field
        if f.k > MAX_ENUM_FIELD_DEGREE:
            raise CheckSkipped(f"exhaustive scan over {f} exceeds 2^{MAX_ENUM_FIELD_DEGREE}")
        return f

    def weddle_params(self) -> weddle.WeddleParams:
        if "weddle_params" not in self.cache:
            field = self.options.enum_field
            given = self.options.params
            if given is not None and len(given) == 4:
                params = weddle.WeddleParams.of(field, given)
            else:
                params = weddle.WeddleParams.random(field, self.rng("weddle.params"))
            logger.info(f"Weddle parameters over {field}: {params}")
            self.cache["weddle_params"] = params
        return self.cache["weddle_params"]

    def weddle_surface(self) -> weddle.WeddleSurface:
        if "weddle_surface" not in self.cache:
            self.cache["weddle_surface"] = weddle.WeddleSurface.build(self.weddle_params())
        return self.cache["weddle_surface"]

    def congruence_surfaces(self) -> List[congruence.CongruenceSurface]:
        """Parameter sets with a smooth congruence, each with its rational rays."""
        if "congruence" not in self.cache:
            field = self.require_enumerable()
            given = self.options.params
            surfaces = []
            if given is not None and len(given) == 12:
                surfaces.append(congruence.congruence_points(congruence.CongruenceParams.of(field, given)))
            else:
                rng = self.rng("congruence.params")
                while len(surfaces) < CONGRUENCE_PARAM_SETS:
                    params = congruence.CongruenceParams.random(field, rng)
                    try:
                        congruence.f2_from_params(params)
                        surfaces.append(congruence.congruence_points(params))
                    except (GenericityError, DegenerateF2) as exc:
                        logger.debug(f"redrawing congruence parameters: {exc}")
            self.cache["congruence"] = surfaces
        return self.cache["congruence"]


@dataclass(frozen=True)
class Check:
    suite: str
    check_id: str
    anchor: str
    func: Callable[[SuiteContext], str]


CHECKS: Dict[str, List[Check]] = {name: [] for name in SUITE_NAMES}


def check(suite: str, check_id: str, anchor: str):
    def register(func: Callable[[SuiteContext], str]) -> Callable[[SuiteContext], str]:
        CHECKS[suite].append(Check(suite, check_id, anchor, func))
        return func
    return register


def expect(condition: bool, message: str) -> None:
    if not condition:
        raise VerificationFailure(message)


# -- weddle --

@check("weddle", "weddle.nodes", "the quartic is singular at p1..p6 and at [sqrt a, sqrt b, sqrt c, sqrt d]")
def _weddle_nodes(ctx: SuiteContext) -> str:
    surface = ctx.weddle_surface()
    expect(len(surface.nodes) == 7, f"{len(surface.nodes)} nodes")
    expect(all(is_singular_at(surface.quartic, p.coords) for p in surface.nodes), "a node is smooth")
    return f"params {surface.params}; P = {surface.nodes[6]}"


@check("weddle", "weddle.singular_scan", "over the enumeration field the quartic has exactly seven singular points")
def _weddle_singular_scan(ctx: SuiteContext) -> str:
    field = ctx.require_enumerable()
    surface = ctx.weddle_surface()
    found = set(weddle.singular_points_bruteforce(surface.quartic, field))
    expect(found == set(surface.nodes), f"scan found {sorted(map(str, found))}")
    return f"{len(found)} singular points among {(field.order ** 4 - 1) // (field.order - 1)}"


@check("weddle", "weddle.curves", "R3, the 15 lines l_ij and the 10 lines l_ijk lie on the quartic")
def _weddle_curves(ctx: SuiteContext) -> str:
    surface = ctx.weddle_surface()
    expect(surface.curve_count() == 26, f"{surface.curve_count()} curves")
    for label, line in surface.residual_lines.items():
        expect(restrict_to_line(surface.quartic, line).is_zero(), f"{label} is off the quartic")
    expect(surface.quartic.pullback(surface.cubic).is_zero(), "R3 is off the quartic")
    return "26 curves"


@check("weddle", "weddle.kummer_configuration", "the 32 curves form the non-degenerate Kummer (16_6)")
def _weddle_kummer(ctx: SuiteContext) -> str:
    inc = weddle.kummer_incidence(ctx.weddle_params(), ctx.weddle_surface())
    expect(weddle.matches_abstract_kummer(inc), "incidence differs from the abstract Kummer configuration")
    return inc.signature()


@check("weddle", "weddle.hutchinson", "T preserves W, squares to (xyzw)^2 id, fixes P and contracts the coordinate planes")
def _weddle_hutchinson(ctx: SuiteContext) -> str:
    surface = ctx.weddle_surface()
    contractions = weddle.hutchinson_contractions(surface.params, surface.hutchinson)
    expect(all(contractions.values()), f"contractions {contractions}")
    return "W o T = abcd (xyzw)^2 W; planes x_i = 0 collapse onto " + ", ".join(sorted(contractions))


@check("weddle", "weddle.hutchinson_orbits", "T swaps l_56 and R3; the six crossing lines form three orbits")
def _weddle_orbits(ctx: SuiteContext) -> str:
    orbits = weddle.hutchinson_orbits(ctx.weddle_params(), ctx.weddle_surface())
    return " ".join(f"{a}<->{b}" for a, b in orbits.orbits)


@check("weddle", "weddle.random_params", "seven nodes for further random parameters")
def _weddle_random(ctx: SuiteContext) -> str:
    rng = ctx.rng("weddle.random_params")
    field = ctx.options.enum_field
    for _ in range(ctx.count(WEDDLE_SAMPLES)):
        params = weddle.WeddleParams.random(field, rng)
        logger.debug(f"weddle sample {params}")
        weddle.weddle_nodes(params)
    return f"{ctx.count(WEDDLE_SAMPLES)} parameter sets"


@check("weddle", "weddle.double_plane", "the conic condition on the six line intersections agrees with the dual conic condition")
def _double_plane(ctx: SuiteContext) -> str:
    report = weddle.double_plane_identity(
        ctx.options.sample_field, ctx.count(DOUBLE_PLANE_SAMPLES), ctx.rng("weddle.double_plane"))
    expect(report.ok, f"{len(report.failures)} disagreements, first {report.failures[:1]}")
    return f"{report.accepted} samples, {report.rejected} rejected, {report.counts}"


@check("weddle", "weddle.ten_conics", "the ten conics share exactly two points on the line dual to the conic")
def _ten_conics(ctx: SuiteContext) -> str:
    report = weddle.ten_conics_check(
        ctx.options.sample_field, ctx.count(TEN_CONICS_SAMPLES), ctx.rng("weddle.ten_conics"))
    expect(report.ok, f"{len(report.failures)} failures, first {report.failures[:1]}")
    expect(report.counts.get("common_points_2", 0) == report.accepted, f"counts {report.counts}")
    return f"{report.accepted} samples, {report.rejected} rejected"


# -- segre --

@check("segre", "segre.nodes", "the ten listed points are singular on the Segre cubic")
def _segre_nodes(ctx: SuiteContext) -> str:
    nodes = segre.segre_nodes(ctx.options.sample_field)
    return f"{len(nodes)} nodes"


@check("segre", "segre.node_completeness", "over GF(2) and GF(4) the cubic has no other singular points")
def _segre_completeness(ctx: SuiteContext) -> str:
    counts = segre.node_completeness((1, 2))
    expect(all(v == 10 for v in counts.values()), f"counts {counts}")
    return f"{counts}"


@check("segre", "segre.phi", "the quadrics through p1..p5 parametrize the cubic")
def _segre_phi(ctx: SuiteContext) -> str:
    segre.phi_map(ctx.options.sample_field)
    printed = segre.printed_phi_discrepancy(ctx.options.sample_field)
    return f"corrected map lands on the cubic; printed variant fails at {printed.base_point_failures}"


@check("segre", "segre.s6_closure", "both generator sets close to groups of order 720")
def _segre_closure(ctx: SuiteContext) -> str:
    details = []
    for which in ("rep33", "rep222"):
        group = segre.rep_generators(which)
        order = segre.group_closure(group)
        expect(order == 720, f"{which} closes to {order} elements")
        expect(segre.permutation_order(group) == 720, f"{which} permutation order differs")
        relations = segre.coxeter_relations(group)
        expect(all(relations.values()), f"{which} relations {relations}")
        details.append(f"{which}: 720")
    return ", ".join(details)


@check("segre", "segre.rep33_invariance", "every element of rep33 preserves the cubic and fixes no vector")
def _segre_rep33(ctx: SuiteContext) -> str:
    group = segre.rep_generators("rep33")
    cubic = segre.segre_equation(field_make(1))
    bad = [g.to_text() for g in group.closure() if not segre.preserves(cubic, g)]
    expect(not bad, f"{len(bad)} elements move the cubic")
    expect(not segre.fixed_space(group), "rep33 has fixed vectors")
    return "720 elements preserve the cubic; fixed space 0"


@check("segre", "segre.rep222_invariance", "rep222 preserves q and fixes (1,1,1,1,1)")
def _segre_rep222(ctx: SuiteContext) -> str:
    group = segre.rep_generators("rep222")
    q = segre.coble_quadric(field_make(1))
    bad = [g.to_text() for g in group.closure() if not segre.preserves(q, g)]
    expect(not bad, f"{len(bad)} elements move q")
    ones = (1, 1, 1, 1, 1)
    expect(all(tuple(g.apply(ones)) == ones for g in group.generators), "(1,1,1,1,1) is moved")
    fixed = segre.fixed_space(group)
    return f"720 elements preserve q; fixed space of dimension {len(fixed)} contains (1,1,1,1,1)"


@check("segre", "segre.polar_theorem", "the pulled back polar quadric at phi(p6) is the Weddle quartic of p1..p6")
def _segre_polar(ctx: SuiteContext) -> str:
    rng = ctx.rng("segre.polar_theorem")
    field = ctx.options.enum_field
    proportional, degenerate = 0, 0
    total = ctx.count(POLAR_SAMPLES)
    for _ in range(total):
        params = weddle.WeddleParams.random(field, rng)
        logger.debug(f"polar sample {params}")
        try:
            report = segre.weddle_via_polar(params)
        except DegeneratePolar:
            degenerate += 1
            continue
        proportional += report.weddle_scalar is not None
    expect(degenerate < total, "every sampled pole has a vanishing polar")
    return f"{total - degenerate} samples, {proportional} proportional to the Weddle quartic"


@check("segre", "segre.coble", "the Coble-type double cover is invariant under w -> w + q")
def _segre_coble(ctx: SuiteContext) -> str:
    report = segre.coble_char2()
    expect(report.involution_invariant, "w -> w + q changes the equation")
    expect(all(report.q_invariant_generators.values()), f"generators {report.q_invariant_generators}")
    expect(report.q_singular_points_f4 == 0, f"q has {report.q_singular_points_f4} singular points over GF(4)")
    return report.equation


@check("segre", "segre.phi_equivariance", "coordinate symmetries of P^3 act on phi through rep33")
def _segre_equivariance(ctx: SuiteContext) -> str:
    matches = segre.phi_equivariance_probe()
    identity = next(m for m in matches if m.sigma == "id")
    expect(identity.matrix == segre.MatrixF2.identity(5).to_text(), f"identity acts by {identity.matrix}")
    linear = [m for m in matches if m.matrix is not None]
    return f"{len(linear)} of {len(matches)} maps act linearly, {sum(m.in_closure for m in linear)} inside rep33"


# -- congruence --

@check("congruence", "congruence.points", "the rational rays of each congruence lie in the point-count window and are smooth")
def _congruence_points(ctx: SuiteContext) -> str:
    counts = []
    for surface in ctx.congruence_surfaces():
        low, high = surface.point_count_window()
        n = len(surface.points)
        expect(low <= n <= high, f"{n} rays for {surface.params}, window [{low}, {high}]")
        counts.append(n)
    return f"ray counts {counts}"


@check("congruence", "congruence.order_class", "two rays through a general point and two rays in a general plane")
def _congruence_order_class(ctx: SuiteContext) -> str:
    rng = ctx.rng("congruence.order_class")
    probes = ctx.count(CONGRUENCE_PROBES)
    need = min(CONGRUENCE_MIN_GENERIC, probes)
    summary = []
    for surface in ctx.congruence_surfaces():
        reports = congruence.probe_order_and_class(surface, probes, rng)
        for kind, report in reports.items():
            expect(report.two_rays >= need and not report.failures,
                   f"{kind}: {report.two_rays}/{report.generic} for {surface.params}, failures {report.failures[:3]}")
        summary.append(f"{reports['order'].two_rays}/{reports['class'].two_rays}")
    return f"order/class passes per parameter set: {summary}"


@check("congruence", "congruence.rays_avoid_quadric", "no ray lies inside V(F2)")
def _congruence_avoid(ctx: SuiteContext) -> str:
    for surface in ctx.congruence_surfaces():
        expect(congruence.rays_avoid_quadric(surface), f"a ray of {surface.params} lies in V(F2)")
    return f"{sum(len(s.points) for s in ctx.congruence_surfaces())} rays"


@check("congruence", "congruence.rays_through", "rays found through a point satisfy all three equations")
def _congruence_rays_through(ctx: SuiteContext) -> str:
    rng = ctx.rng("congruence.rays_through")
    found = 0
    for surface in ctx.congruence_surfaces():
        for _ in range(10):
            x = random_point(surface.field, 4, rng)
            try:
                rays = congruence.rays_through(surface, x)
            except ResampleRequired:
                continue
            expect(len(rays) <= 2, f"{len(rays)} rays through {x}")
            found += len(rays)
    return f"{found} rational rays back-substituted"


@check("congruence", "congruence.tangency", "the polar form of F2 vanishes exactly on the tangent lines")
def _congruence_tangency(ctx: SuiteContext) -> str:
    rng = ctx.rng("congruence.tangency")
    surface = ctx.congruence_surfaces()[0]
    f2 = congruence.f2_from_params(surface.params)
    form = congruence.tangency_form(f2)
    samples = ctx.count(LINE_SCAN_SAMPLES)
    tangent = 0
    for _ in range(samples):
        line = random_line(surface.field, rng)
        expect(congruence.tangency_agrees(f2, line), f"tangency form disagrees on {line}")
        tangent += form.eval_bits(congruence.pluecker_of_line(line).coords) == 0
    points = congruence.quadric_points(f2)
    for i in rng.choice(len(points), size=min(20, len(points)), replace=False):
        line = congruence.tangent_line_at(f2, points[int(i)], rng)
        expect(form.eval_bits(congruence.pluecker_of_line(line).coords) == 0, f"{line} is tangent but the form is nonzero")
    return f"{samples} random lines ({tangent} tangent), tangent lines at {min(20, len(points))} points"


@check("congruence", "congruence.singular_pencil", "lambda G + S is singular exactly at lambda = a1, a2, a3")
def _congruence_pencil(ctx: SuiteContext) -> str:
    for surface in ctx.congruence_surfaces():
        members = congruence.singular_pencil_members(surface.params)
        expected = sorted(surface.params.bits("a"))
        expect(members == expected, f"singular members {members}, expected {expected}")
    return "three singular members per pencil"


@check("congruence", "congruence.vertices", "pencil vertices lie on V(F2) and carry a whole pencil of rays")
def _congruence_vertices(ctx: SuiteContext) -> str:
    counts = []
    for surface in ctx.congruence_surfaces():
        vertices = congruence.pencil_vertices(surface.params)
        expect(len(vertices) <= 16, f"{len(vertices)} vertices")
        for x in vertices[:2]:
            rays = congruence.rays_through(surface, x)
            expect(len(rays) == surface.field.order + 1, f"{len(rays)} rays through vertex {x}")
        counts.append(len(vertices))
    return f"rational vertices per parameter set: {counts}"


def _random_form(field: FieldSpec, nvars: int, degree: int, rng: np.random.Generator) -> MultiPoly:
    return MultiPoly(field, nvars, {m: field.random_bits(rng) for m in monomials_of_degree(nvars, degree)})


@check("congruence", "congruence.normalize_quartic", "the canonical F4 is the lexicographic minimum of its class modulo A^2 + A F2")
def _congruence_normalize(ctx: SuiteContext) -> str:
    rng = ctx.rng("congruence.normalize_quartic")
    f2_field = field_make(1)
    compared = 0
    while compared < 3:
        f2 = _random_form(f2_field, 4, 2, rng)
        try:
            congruence.tangency_form(f2)
        except DegenerateF2:
            continue
        f4 = _random_form(f2_field, 4, 4, rng)
        fast = congruence.normalize_quartic(f4, f2)
        slow = congruence.normalize_quartic_bruteforce(f4, f2)
        expect(fast == slow, f"normal forms differ for F2 = {f2}: {fast} vs {slow}")
        compared += 1
    field = ctx.options.enum_field
    f2 = congruence.f2_from_params(ctx.congruence_surfaces()[0].params)
    for _ in range(5):
        f4 = _random_form(field, 4, 4, rng)
        a = _random_form(field, 4, 2, rng)
        shifted = f4 + a.square() + a * f2
        expect(congruence.normalize_quartic(shifted, f2) == congruence.normalize_quartic(f4, f2),
               f"normal form moves under A = {a}")
        cover = congruence.cover_equation(f2, f4)
        lift = MultiPoly(field, 5, {e + (0,): c for e, c in a.terms.items()})
        moved = segre.substitute(cover.equation, 4, MultiPoly.variable(field, 5, 4) + lift)
        expect(moved == congruence.cover_equation(f2, shifted).equation, "x4 -> x4 + A does not shift F4")
    return f"{compared} exhaustive comparisons over GF(2), 5 class invariance checks over {field}"


@check("congruence", "congruence.kummer_on_quadric", "sixteen vertices and sixteen conics on V(F2) form the Kummer (16_6)")
def _congruence_kummer(ctx: SuiteContext) -> str:
    field = ctx.require_enumerable()
    params = congruence.find_sixteen_line_params(field, ctx.rng("congruence.kummer_on_quadric"), KUMMER_TRIALS)
    surface = congruence.congruence_points(params)
    result = congruence.kummer_on_quadric(surface)
    expect(result.bijection is not None, "vertex/conic incidence is not the Kummer configuration")
    return f"params {params}; {result.incidence.signature()}"


# -- configs --

@check("configs", "configs.rosenhain", "the sixteen lines carry 20 Rosenhain pairs of tetrads")
def _configs_rosenhain(ctx: SuiteContext) -> str:
    g = configs.dp4_line_graph()
    pairs = configs.rosenhain_enumerate(g)
    expect(len(pairs) == 20, f"{len(pairs)} pairs")
    report = configs.rosenhain_family_report(g, pairs)
    expect(report["first"]["found"] == 10, f"first family {report['first']}")
    expect(report["second_corrected"]["found"] == 10, f"second family {report['second_corrected']}")
    return f"20 pairs; printed second family valid for {report['second_printed']['found']} of 10"


@check("configs", "configs.goepel", "the sixteen lines carry 30 Göpel tetrads")
def _configs_goepel(ctx: SuiteContext) -> str:
    tetrads = configs.goepel_enumerate(configs.dp4_line_graph())
    expect(len(tetrads) == 30, f"{len(tetrads)} tetrads")
    return "30 tetrads"


@check("configs", "configs.symplectic", "F_2^4 has 35 planes: 15 isotropic, 20 not; 60 and 80 translates")
def _configs_symplectic(ctx: SuiteContext) -> str:
    counts = configs.symplectic_counts(configs.symplectic_f2_4())
    expected = configs.SymplecticCounts(35, 15, 20, 60, 80)
    expect(counts == expected, f"{counts}")
    return f"{counts}"


@check("configs", "configs.cremona_richmond", "duads and synthemes form a (15_3)")
def _configs_cremona(ctx: SuiteContext) -> str:
    return configs.cremona_richmond().signature()


@check("configs", "configs.diagram_8_4", "a Rosenhain pair with its tropes is the (8_4) diagram")
def _configs_diagram(ctx: SuiteContext) -> str:
    g = configs.dp4_line_graph()
    diagram = configs.diagram_8_4()
    pairs = configs.rosenhain_enumerate(g)
    bad = [i for i, pair in enumerate(pairs) if not configs.is_isomorphic(configs.rosenhain_union(g, pair), diagram)]
    expect(not bad, f"pairs {bad} differ from the (8_4) diagram")
    return diagram.signature()


@check("configs", "configs.kummer_16_6", "the Kummer (16_6) is non-degenerate and differs from a degenerate one")
def _configs_kummer(ctx: SuiteContext) -> str:
    kummer = configs.abstract_kummer()
    other = configs.degenerate_16_6()
    expect(configs.is_symmetric_config(other, 6), "degenerate example is not a (16_6)")
    expect(not configs.nondegenerate_16_6(other), "degenerate example passes the non-degeneracy test")
    expect(not configs.is_isomorphic(kummer, other), "the two (16_6) are isomorphic")
    return kummer.signature()


@check("configs", "configs.dp4_lines", "each of the sixteen lines meets exactly five others")
def _configs_dp4(ctx: SuiteContext) -> str:
    g = configs.dp4_line_graph()
    meets = (g.gram == 1).sum(axis=1)
    expect(bool(np.all(meets == 5)), f"degrees {sorted(set(meets.tolist()))}")
    return "16 lines, degree 5"


# -- lattice --

@check("lattice", "lattice.discriminant", "|disc(D4^3 + A1^8)| = 2^14, a 2-elementary group")
def _lattice_disc(ctx: SuiteContext) -> str:
    disc = lattice.discriminant_group(lattice.fiber_lattice())
    expect(disc.order == 2 ** 14 and disc.two_elementary, f"{disc}")
    return f"order {disc.order}, 2-rank {disc.two_rank}"


@check("lattice", "lattice.shioda_tate", "MW of order 8 gives Artin invariant 4")
def _lattice_shioda(ctx: SuiteContext) -> str:
    st = lattice.shioda_tate_bound(8)
    expect(st.sigma == 4 and st.disc_pic == 2 ** 8, f"{st}")
    return f"|disc Pic| = {st.disc_pic}, sigma = {st.sigma}"


@check("lattice", "lattice.fibration", "F and G are orthogonal fibres with eight disjoint sections")
def _lattice_fibration(ctx: SuiteContext) -> str:
    result = lattice.fibration_sections(configs.abstract_kummer())
    expect(result.ok, f"{result}")
    return f"F^2 = {result.f_squared}, G^2 = {result.g_squared}, F.G = {result.f_dot_g}"


@check("lattice", "lattice.euler_bound", "three D4 and six A1 fibres exceed the Euler number 24")
def _lattice_euler(ctx: SuiteContext) -> str:
    total, exceeded = lattice.euler_bound([lattice.D4_TILDE] * 3 + [lattice.A1_STAR] * 6)
    expect(total == 30 and exceeded, f"total {total}")
    return "30 > 24"


@check("lattice", "lattice.index", "the self-intersection 128 forces index 6")
def _lattice_index(ctx: SuiteContext) -> str:
    kummer = configs.abstract_kummer()
    n = lattice.index_identity(kummer)
    expect(n == 6, f"index {n}")
    return f"branch divisor and configuration both give {lattice.configuration_self_intersection(kummer)}"


@check("lattice", "lattice.chern", "c2 of the twisted cotangent bundle: 20 on the quadric, 21 on the plane")
def _lattice_chern(ctx: SuiteContext) -> str:
    quadric = lattice.chern_count("quadric", (4, 4))
    plane = lattice.chern_count("P2", 6)
    expect((quadric, plane) == (20, 21), f"got {quadric}, {plane}")
    return "20, 21"


# -- runner --

def run_check(ctx: SuiteContext, chk: Check) -> CheckRecord:
    start = time.perf_counter()
    logger.info(f"Running {chk.check_id}")
    try:
        detail = chk.func(ctx)
        status = "pass"
    except VerificationFailure as exc:
        status, detail = "fail", str(exc)
    except InconclusiveSample as exc:
        status, detail = "inconclusive", str(exc)
    except CheckSkipped as exc:
        status, detail = "skip", str(exc)
    except Exception as exc:
        logger.error(f"{chk.check_id} crashed: {exc}", exc_info=True)
        status, detail = "fail", f"{type(exc).__name__}: {exc}"
    elapsed = (time.perf_counter() - start) * 1000
    logger.info(f"{chk.check_id}: {status} in {elapsed:.1f} ms")
    return CheckRecord(chk.check_id, chk.anchor, status, detail, elapsed)


def run(suite: str, options: SuiteOptions) -> SuiteReport:
    """Run one suite, or every suite for `all`, within the per-suite budget."""
    if suite != "all" and suite not in CHECKS:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITE_NAMES + ('all',)}")
    names: Sequence[str] = SUITE_NAMES if suite == "all" else (suite,)
    ctx = SuiteContext(options)
    report = SuiteReport(suite, options.describe(), options.seed)
    for name in names:
        suite_start = time.perf_counter()
        for chk in CHECKS[name]:
            spent = (time.perf_counter() - suite_start) * 1000
            if spent > options.budget_ms:
                report.add(CheckRecord(chk.check_id, chk.anchor, "skip", f"budget of {options.budget_ms} ms spent"))
                continue
            report.add(run_check(ctx, chk))
    logger.info(f"Suite {suite}: {report.status} {report.counts()}")
    return report


def catalogue() -> Dict[str, List[Dict[str, str]]]:
    return {name: [{"check_id": c.check_id, "anchor": c.anchor} for c in CHECKS[name]] for name in SUITE_NAMES}
