from dataclasses import dataclass
from enum import Enum, unique
from typing import Tuple

from kannanfix.contraction.condition import kannan_lambda, t_kannan_lambda
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.map.properties import Trivalent, classify_convergence
from kannanfix.space.axioms import (validate_generalized_metric,
                                    validate_metric)


@unique
class Reason(Enum):

    NOT_METRIC = "NotMetric"
    NOT_GENERALIZED_METRIC = "NotGeneralizedMetric"
    NOT_INJECTIVE = "NotInjective"
    LAMBDA_NOT_BELOW_HALF = "LambdaNotBelowHalf"
    CONVERGENCE_UNDECIDED = "ConvergenceUndecided"


@dataclass(frozen=True)
class TheoremVerdict:
    """
    Whether the extended Kannan theorem applies on a metric space
    ('extended-kannan', T-dependent form of Kannan's theorem) or on a
    generalized metric space ('extended-branciari', T-dependent form of
    the Azam-Arshad theorem). `iteratesConverge` additionally needs T
    sequentially convergent.
    """

    theorem: str
    applies: bool
    reasons: Tuple[Reason, ...]
    iteratesConverge: bool


@dataclass(frozen=True)
class AnalysisReport:

    metricViolations: list
    generalizedViolations: list
    kannanVerdict: object
    extendedVerdict: object
    properties: object
    metricTheorem: TheoremVerdict
    generalizedTheorem: TheoremVerdict
    auxiliaryIsIdentity: bool

    @property
    def anyTheoremApplies(self):
        return self.metricTheorem.applies or self.generalizedTheorem.applies


def _theorem_verdict(theorem, spaceReason, properties, extendedVerdict):

    reasons = []

    if spaceReason is not None:
        reasons.append(spaceReason)

    if not properties.injective:
        reasons.append(Reason.NOT_INJECTIVE)

    if not extendedVerdict.feasibleBelowHalf:
        reasons.append(Reason.LAMBDA_NOT_BELOW_HALF)

    if properties.subsequentiallyConvergent != Trivalent.YES:
        reasons.append(Reason.CONVERGENCE_UNDECIDED)

    applies = not reasons
    iteratesConverge = applies and \
        properties.sequentiallyConvergent == Trivalent.YES

    return TheoremVerdict(theorem, applies, tuple(reasons), iteratesConverge)


def analyze(space, selfMap, auxiliaryMap=None, excluded=frozenset(),
            family=None) -> AnalysisReport:
    """
    Bundle axiom validation, both contraction constants and the hypotheses
    on T into theorem verdicts. Without T the identity is used, which turns
    the verdicts into the classical Kannan / Azam-Arshad ones. When the
    maps come from a built-in analytic family, its convergence
    classification is used for T.
    """
    if auxiliaryMap is None:
        auxiliaryMap = FiniteSelfMap.identity(space)

    metricViolations = validate_metric(space)
    generalizedViolations = validate_generalized_metric(space)

    kannanVerdict = kannan_lambda(space, selfMap, excluded)
    extendedVerdict = t_kannan_lambda(space, selfMap, auxiliaryMap, excluded)

    properties = classify_convergence(
        family if family is not None else auxiliaryMap)

    metricTheorem = _theorem_verdict(
        "extended-kannan",
        Reason.NOT_METRIC if metricViolations else None,
        properties, extendedVerdict)

    generalizedTheorem = _theorem_verdict(
        "extended-branciari",
        Reason.NOT_GENERALIZED_METRIC if generalizedViolations else None,
        properties, extendedVerdict)

    isIdentity = isinstance(auxiliaryMap, FiniteSelfMap) and \
        auxiliaryMap.is_identity()

    return AnalysisReport(metricViolations, generalizedViolations,
                          kannanVerdict, extendedVerdict, properties,
                          metricTheorem, generalizedTheorem, isIdentity)
