import json

from dataclasses import dataclass, field

from kannanfix.contraction.verdict import format_lambda
from kannanfix.space.rational import format_rational


def _normalise(value):
    """
    JSON-shaped copy: tuples become lists so that a parsed report compares
    equal to the one that was emitted.
    """
    if isinstance(value, dict):
        return {str(k): _normalise(v) for k, v in value.items()}

    if isinstance(value, (list, tuple)):
        return [_normalise(v) for v in value]

    return value


@dataclass
class ReportDocument:
    """
    Machine-readable command report. Rationals are strings ("p/q", "p",
    or "inf"), so emit/parse is lossless and byte-stable.
    """

    command: str
    exitCode: int
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)

    def __post_init__(self):

        self.inputs = _normalise(self.inputs)
        self.results = _normalise(self.results)

    def to_dict(self):

        return {"command": self.command,
                "exit_code": self.exitCode,
                "inputs": self.inputs,
                "results": self.results}

    def emit(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def parse(cls, text):

        data = json.loads(text)
        return cls(data["command"], data["exit_code"], data["inputs"],
                   data["results"])

    def write(self, path):

        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.emit())


def pair_record(pair):

    if pair is None:
        return None

    return [p.label for p in pair]


def violation_record(violation):

    return {"axiom": violation.axiom.tag,
            "witness": [p.label for p in violation.witness],
            "lhs": format_rational(violation.lhs),
            "rhs": format_rational(violation.rhs)}


def verdict_record(verdict):

    excluded = sorted(sorted(pair) for pair in verdict.excludedPairs)

    return {"condition": verdict.condition,
            "lambda_min": format_lambda(verdict.lambdaMin),
            "feasible_below_half": verdict.feasibleBelowHalf,
            "argmax_pair": pair_record(verdict.argmaxPair),
            "excluded_pairs": len(excluded)}


def properties_record(properties):

    return {"injective": properties.injective,
            "collision": pair_record(properties.collision),
            "subsequentially_convergent":
                properties.subsequentiallyConvergent.value,
            "subsequential_rationale": properties.subsequentialRationale.value,
            "sequentially_convergent":
                properties.sequentiallyConvergent.value,
            "sequential_rationale": properties.sequentialRationale.value,
            "continuous": properties.continuous.value}


def theorem_record(verdict):

    return {"theorem": verdict.theorem,
            "applies": verdict.applies,
            "reasons": [r.value for r in verdict.reasons],
            "iterates_converge": verdict.iteratesConverge}


def trajectory_record(trajectory):

    return {"start": trajectory.start.label,
            "path": trajectory.path_labels(),
            "t_gaps": [None if g is None else format_rational(g)
                       for g in trajectory.gaps],
            "successor": trajectory.successor.label,
            "termination": trajectory.termination.value,
            "fixed_point": None if trajectory.fixedPoint is None
            else trajectory.fixedPoint.label,
            "cycle": [p.label for p in trajectory.cycle],
            "clamped": trajectory.clamped,
            "steps": trajectory.nSteps}


def bound_record(report):

    return {"lambda": format_rational(report.lam),
            "factor": format_rational(report.factor),
            "all_hold": report.allHold,
            "steps": [{"n": r.n,
                       "t_gap": format_rational(r.tGap),
                       "ratio_bound": None if r.ratioBound is None
                       else format_rational(r.ratioBound),
                       "geometric_bound": format_rational(r.geometricBound),
                       "holds": r.holds} for r in report.stepRecords],
            "tail": [{"m": r.m, "n": r.n,
                      "lhs": format_rational(r.lhs),
                      "tail_bound": format_rational(r.tailBound),
                      "holds": r.holds} for r in report.tailRecords]}


def map_record(auxMap):

    if hasattr(auxMap, "as_labels"):
        return auxMap.as_labels()

    return {p.label: format_rational(auxMap.image(p))
            for p in auxMap.space.points}


def certificate_record(certificate):

    if certificate is None:
        return None

    return {"T": map_record(certificate.auxiliaryMap),
            "lambda": format_rational(certificate.lam),
            "argmax_pair": pair_record(certificate.verdict.argmaxPair),
            "properties": properties_record(certificate.properties)}


def fixed_point_record(certificate):

    return {"point": certificate.point.label,
            "residual": format_rational(certificate.residual),
            "unique": certificate.unique,
            "other_fixed_point": None if certificate.otherFixedPoint is None
            else certificate.otherFixedPoint.label}
