"""Completeness tests for ring approximations, each with a certificate.

``king_gen`` and ``king_rel`` are the two halves of the criterion for groups
that are not of prime power order: the first certifies that the comparison
map is surjective from the generation degree of a subgroup cohomology ring,
the second compares the Poincare series against parameter degrees and a
depth bound.  ``benson_threshold`` and ``symonds_test`` are the rival bounds.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .hilbert import HilbertSeries, IntegerPolynomial, NotPolynomial, clear_parameters
from .morphism import GendegReport, RingMorphism, gendeg, identity
from .parameters import (
    ExistenceCertificate,
    FilterRegularityReport,
    ParameterSet,
    as_parameters,
    filter_regular_report,
    is_hsop,
    pars_existence,
)

COMPLETE = "complete"
NOT_YET = "not-yet"
INAPPLICABLE = "inapplicable"
SURJECTIVE = "surjective"
BOUND = "bound"


@dataclass
class CriterionReport:
    criterion: str
    verdict: str
    threshold: int | None = None
    inputs: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    reason: str | None = None

    @property
    def definite(self) -> bool:
        return self.verdict != INAPPLICABLE

    def to_dict(self) -> dict:
        return asdict(self)


def _poly_data(q: IntegerPolynomial) -> dict:
    return {"coefficients": list(q.coefficients), "degree": q.degree, "text": str(q)}


def _fr_data(report: FilterRegularityReport) -> dict:
    steps = []
    for s in report.steps:
        ann = s.annihilator
        steps.append(
            {
                "index": s.index,
                "degree": s.degree,
                "filter_regular": s.filter_regular,
                "annihilator": str(ann) if isinstance(ann, IntegerPolynomial) else None,
                "top_degree": s.top_degree,
            }
        )
    return {"is_hsop": bool(report.hsop), "filter_regular": report.filter_regular, "steps": steps}


def benson_threshold(param_degrees, fr_report: FilterRegularityReport | None = None) -> CriterionReport:
    """Applicability bound sum(d_i - 1) of Benson's test for a filter-regular hsop.

    Only the threshold is computed; Benson's further conditions on the
    filter degree type are left to the caller, who gets the per-step
    annihilator data in the witness.
    """
    degrees = [int(d) for d in param_degrees]
    threshold = sum(d - 1 for d in degrees)
    inputs = {"param_degrees": degrees}
    witness = {"degree_bound": threshold}
    if fr_report is not None:
        witness["filter_regularity"] = _fr_data(fr_report)
        if not fr_report.hsop:
            return CriterionReport("benson", INAPPLICABLE, threshold, inputs, witness, "parameters are not an hsop")
        if not fr_report.filter_regular:
            return CriterionReport(
                "benson",
                INAPPLICABLE,
                threshold,
                inputs,
                witness,
                f"step {fr_report.first_failure} is not filter-regular",
            )
    return CriterionReport("benson", BOUND, threshold, inputs, witness)


def symonds_test(ring, params, n: int) -> CriterionReport:
    """Complete iff n > sum(d_i - 1) and R is generated in degree <= n over the parameters."""
    params = as_parameters(ring, params)
    degrees = list(params.degrees)
    threshold = sum(d - 1 for d in degrees)
    inputs = {"param_degrees": degrees, "n": n}
    hsop = is_hsop(ring, params)
    if not hsop:
        why = (
            f"generator {hsop.offending_generator} survives in the quotient"
            if hsop.offending_generator
            else f"{hsop.size} parameters for Krull dimension {hsop.krull_dimension}"
        )
        return CriterionReport("symonds", INAPPLICABLE, threshold, inputs, {}, f"not an hsop: {why}")
    g = hsop.quotient_top_degree
    witness = {"generation_degree": g, "first_degree": max(threshold + 1, g)}
    verdict = COMPLETE if n > threshold and g <= n else NOT_YET
    return CriterionReport("symonds", verdict, threshold, inputs, witness)


def _gendeg_data(report: GendegReport) -> dict:
    return {
        "gendeg": report.gendeg if report.finite else "infinite",
        "hilbert_function": list(report.hilbert_function),
        "generator_degrees": list(report.generator_degrees),
        "offending_generator": report.offending_generator,
    }


def king_gen(m: RingMorphism, n: int, report: GendegReport | None = None) -> CriterionReport:
    """Surjectivity of the comparison map once n >= gendeg."""
    report = report if report is not None else gendeg(m)
    witness = _gendeg_data(report)
    threshold = report.gendeg if report.finite else None
    verdict = SURJECTIVE if report.finite and n >= report.gendeg else NOT_YET
    return CriterionReport("king-gen", verdict, threshold, {"n": n}, witness)


def king_rel(series: HilbertSeries, param_degrees, depth_lower_bound: int, n: int, surjective: bool) -> CriterionReport:
    """Poincare-series test with N = sum(d_i) - depth.

    Given surjectivity and n >= N, the approximation is complete iff
    P(R; t) * prod(1 - t^d_i) is a polynomial of degree at most N.
    """
    degrees = [int(d) for d in param_degrees]
    N = sum(degrees) - depth_lower_bound
    inputs = {"param_degrees": degrees, "depth": depth_lower_bound, "n": n, "surjective": bool(surjective)}
    if not surjective:
        return CriterionReport("king-rel", INAPPLICABLE, N, inputs, {}, "surjectivity not certified")
    if n < N:
        return CriterionReport("king-rel", INAPPLICABLE, N, inputs, {}, f"n = {n} < N = {N}")
    q = clear_parameters(series, degrees)
    if isinstance(q, NotPolynomial):
        witness = {"remainder": str(q.remainder), "lowest_degree": q.lowest_degree}
        return CriterionReport("king-rel", NOT_YET, N, inputs, witness, "product is not a polynomial")
    witness = {"polynomial": _poly_data(q), "series": str(series)}
    if q.degree is not None and q.degree > N:
        return CriterionReport("king-rel", NOT_YET, N, inputs, witness, f"polynomial degree {q.degree} > N = {N}")
    return CriterionReport("king-rel", COMPLETE, N, inputs, witness)


@dataclass
class Bundle:
    """Everything compare_all needs for one ring.

    ``benson`` and ``symonds`` map labels to parameter sets.  ``king`` maps
    labels to either a full hsop or a pair ``(fixed, degree)`` fed to
    :func:`pars_existence`.
    """

    ring: object
    morphism: RingMorphism | None = None
    depth: int = 0
    benson: dict = field(default_factory=dict)
    symonds: dict = field(default_factory=dict)
    king: dict = field(default_factory=dict)
    n_max: int = 100


@dataclass
class ComparisonRow:
    criterion: str
    label: str
    degree: int | None
    report: CriterionReport

    def to_dict(self) -> dict:
        return {"criterion": self.criterion, "label": self.label, "degree": self.degree, "report": self.report.to_dict()}


def _in_range(n, bundle):
    return n if n is not None and n <= bundle.n_max else None


def compare_all(bundle: Bundle) -> list:
    """Minimal certifying degree of every criterion over 0..n_max."""
    from .hilbert import poincare_series

    ring = bundle.ring
    rows = []
    for label, params in bundle.benson.items():
        params = as_parameters(ring, params)
        fr = filter_regular_report(ring, params)
        report = benson_threshold(params.degrees, fr)
        degree = report.threshold if report.verdict == BOUND else None
        rows.append(ComparisonRow("benson", label, _in_range(degree, bundle), report))
    for label, params in bundle.symonds.items():
        params = as_parameters(ring, params)
        probe = symonds_test(ring, params, bundle.n_max)
        degree = None
        if probe.verdict != INAPPLICABLE:
            degree = _in_range(probe.witness["first_degree"], bundle)
        report = symonds_test(ring, params, degree) if degree is not None else probe
        rows.append(ComparisonRow("symonds", label, degree, report))
    morphism = bundle.morphism if bundle.morphism is not None else identity(ring)
    gen = gendeg(morphism)
    gen_report = king_gen(morphism, gen.gendeg if gen.finite else bundle.n_max, gen)
    gen_degree = _in_range(gen.gendeg, bundle) if gen.finite else None
    rows.append(ComparisonRow("king-gen", "surjectivity", gen_degree, gen_report))
    series = poincare_series(ring)
    for label, spec in bundle.king.items():
        report, degree = _king_row(ring, series, spec, bundle, gen_degree)
        rows.append(ComparisonRow("king-rel", label, degree, report))
    return rows


def _king_row(ring, series, spec, bundle, gen_degree):
    if isinstance(spec, tuple) and len(spec) == 2 and isinstance(spec[1], int):
        fixed, d = spec
        cert = pars_existence(ring, fixed, d)
        if not cert:
            report = CriterionReport("king-rel", INAPPLICABLE, None, {"fixed_degrees": list(cert.fixed_degrees), "degree": d}, {}, "no parameters of that degree certified")
            return report, None
        degrees = cert.parameter_degrees
        certificate = {"fixed_degrees": list(cert.fixed_degrees), "degree": d, "count": cert.count, "verdict": cert.verdict}
    else:
        params = as_parameters(ring, spec)
        hsop = is_hsop(ring, params)
        if not hsop:
            return CriterionReport("king-rel", INAPPLICABLE, None, {"param_degrees": list(params.degrees)}, {}, "not an hsop"), None
        degrees = params.degrees
        certificate = {"hsop": True}
    if gen_degree is None:
        report = king_rel(series, degrees, bundle.depth, bundle.n_max, False)
        return report, None
    N = sum(degrees) - bundle.depth
    n = max(N, gen_degree, 0)
    report = king_rel(series, degrees, bundle.depth, n, True)
    report.witness["parameters"] = certificate
    if report.verdict != COMPLETE:
        return report, None
    return report, _in_range(n, bundle)
