from kannanfix.cli.document import load_document
from kannanfix.cli.report import (ReportDocument, bound_record,
                                  certificate_record, fixed_point_record,
                                  properties_record, theorem_record,
                                  trajectory_record, verdict_record,
                                  violation_record)
from kannanfix.contraction.analysis import analyze
from kannanfix.contraction.certificate import (SearchSpace,
                                               search_certificate,
                                               verify_certificate)
from kannanfix.iteration.bounds import verify_bounds
from kannanfix.iteration.builder import PicardBuilder
from kannanfix.iteration.diagnostics import GapDiagnostics
from kannanfix.iteration.fixedPoint import fixed_points_exhaustive
from kannanfix.iteration.trajectory import Termination
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.space.axioms import validate_declared
from kannanfix.space.rational import format_rational
from kannanfix.utility.errors import DocumentError


EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _build(path):
    return load_document(path).build()


def _optional_rational(value):
    return None if value is None else format_rational(value)


def _clamp_labels(built):

    if built.realisation is None:
        return []

    return sorted(p.label for p in built.realisation.clampedPoints)


def cmd_validate(path) -> ReportDocument:
    """
    Validate the space against the axioms of its declared kind.
    """
    space = _build(path).space
    violations = validate_declared(space)

    results = {"kind": space.kind.value,
               "points": space.labels,
               "valid": not violations,
               "violations": [violation_record(v) for v in violations]}

    return ReportDocument("validate",
                          EXIT_NEGATIVE if violations else EXIT_OK,
                          {"file": str(path)}, results)


def cmd_analyze(path, mapName, auxName=None, excludeClamp=False):

    built = _build(path)
    space = built.space

    selfMap = built.self_map(mapName)
    auxMap = None if auxName is None else built.map(auxName, "--aux")

    excluded = built.excluded_pairs(excludeClamp)
    family = None if auxMap is None else built.family_of(auxMap)

    report = analyze(space, selfMap, auxMap, excluded, family)

    results = {
        "kind": space.kind.value,
        "metric_violations":
            [violation_record(v) for v in report.metricViolations],
        "generalized_violations":
            [violation_record(v) for v in report.generalizedViolations],
        "kannan": verdict_record(report.kannanVerdict),
        "t_kannan": verdict_record(report.extendedVerdict),
        "properties": properties_record(report.properties),
        "theorems": [theorem_record(report.metricTheorem),
                     theorem_record(report.generalizedTheorem)],
        "auxiliary_is_identity": report.auxiliaryIsIdentity,
        "clamped_points": _clamp_labels(built)}

    inputs = {"file": str(path), "map": mapName, "aux": auxName,
              "exclude_clamp": excludeClamp}

    return ReportDocument(
        "analyze", EXIT_OK if report.anyTheoremApplies else EXIT_NEGATIVE,
        inputs, results)


def cmd_solve(path, mapName, start, auxName=None, maxIterations=None,
              checkBounds=None, window=None):
    """
    Picard iteration from `start`. With checkBounds the trajectory is
    compared against the convergence bounds for that lambda; T defaults to
    the identity then.
    """
    built = _build(path)
    space = built.space
    selfMap = built.self_map(mapName)

    if auxName is not None:
        auxMap = built.map(auxName, "--aux")
    elif checkBounds is not None:
        auxMap = FiniteSelfMap.identity(space)
    else:
        auxMap = None

    if start not in space.labels:
        raise DocumentError(f"unknown start point '{start}'", field="--start")

    builder = PicardBuilder()
    builder.selfMap = selfMap
    builder.auxiliaryMap = auxMap
    if maxIterations is not None:
        builder.maxIterations = maxIterations
    if built.realisation is not None:
        builder.clampedPoints = built.realisation.clampedPoints
    diagnostics = GapDiagnostics()
    builder.diagnostics = diagnostics

    trajectory = builder.build_method().run(start, lambdaUsed=checkBounds)

    results = {"trajectory": trajectory_record(trajectory),
               "max_gap_factor": _optional_rational(diagnostics.maxFactor),
               "fixed_points": [fixed_point_record(c) for c in
                                fixed_points_exhaustive(space, selfMap)],
               "bounds": None}

    success = trajectory.termination == Termination.FIXED_POINT

    if checkBounds is not None:
        bounds = verify_bounds(trajectory, auxMap, checkBounds, window)
        results["bounds"] = bound_record(bounds)
        success = success and bounds.allHold

    inputs = {"file": str(path), "map": mapName, "aux": auxName,
              "start": start, "max_iter": maxIterations,
              "check_bounds": _optional_rational(checkBounds),
              "window": window}

    return ReportDocument("solve", EXIT_OK if success else EXIT_NEGATIVE,
                          inputs, results)


def cmd_search_t(path, mapName, lambdaCap, auxName=None,
                 searchSpace=SearchSpace.PERMUTATIONS, maxPoints=None,
                 excludeClamp=False, verbose=False):

    built = _build(path)
    space = built.space
    selfMap = built.self_map(mapName)
    excluded = built.excluded_pairs(excludeClamp)
    searchSpace = SearchSpace(searchSpace)

    verification = None
    if auxName is not None:
        auxMap = built.map(auxName, "--aux")
        valid, verdict = verify_certificate(space, selfMap, auxMap,
                                            lambdaCap, excluded)
        verification = {"aux": auxName, "valid": valid,
                        "verdict": verdict_record(verdict)}

    certificate = search_certificate(space, selfMap, lambdaCap, searchSpace,
                                     excluded, maxPoints, verbose)

    results = {"found": certificate is not None,
               "certificate": certificate_record(certificate),
               "verification": verification}

    inputs = {"file": str(path), "map": mapName,
              "lambda_cap": format_rational(lambdaCap), "aux": auxName,
              "search_space": searchSpace.value, "max_points": maxPoints,
              "exclude_clamp": excludeClamp}

    return ReportDocument(
        "search-t", EXIT_OK if certificate is not None else EXIT_NEGATIVE,
        inputs, results)


def error_report(command, exitCode, inputs, error):

    results = {"error": type(error).__name__, "message": str(error)}

    if isinstance(error, DocumentError):
        results["field"] = error.field
        results["line"] = error.line

    return ReportDocument(command, exitCode, inputs, results)


# human-readable rendering of the machine report

def _render_verdict(name, record):

    line = f"  {name}: lambda = {record['lambda_min']}"

    if record["argmax_pair"] is not None:
        line += f" at ({','.join(record['argmax_pair'])})"

    if record["excluded_pairs"]:
        line += f", {record['excluded_pairs']} pairs excluded"

    feasible = "feasible" if record["feasible_below_half"] else "infeasible"

    return line + f" [{feasible}]"


def _render_violation(record):

    witness = ",".join(record["witness"])
    relation = ">" if record["axiom"] in ("Triangle", "Rectangular") \
        else "vs"

    return (f"  {record['axiom']} ({witness}): {record['lhs']} {relation} "
            f"{record['rhs']}")


def _render_validate(results):

    lines = [f"space of kind {results['kind']} with "
             f"{len(results['points'])} points"]

    if results["valid"]:
        lines.append("valid")
    else:
        lines.append(f"{len(results['violations'])} violations:")
        lines.extend(_render_violation(v) for v in results["violations"])

    return lines


def _render_analyze(results):

    lines = [f"metric violations: {len(results['metric_violations'])}",
             "generalized metric violations: "
             f"{len(results['generalized_violations'])}",
             _render_verdict("kannan", results["kannan"]),
             _render_verdict("t-kannan", results["t_kannan"])]

    props = results["properties"]
    lines.append(f"  T injective: {props['injective']}, subsequentially "
                 f"convergent: {props['subsequentially_convergent']} "
                 f"({props['subsequential_rationale']}), sequentially "
                 f"convergent: {props['sequentially_convergent']} "
                 f"({props['sequential_rationale']})")

    for theorem in results["theorems"]:
        if theorem["applies"]:
            lines.append(f"{theorem['theorem']} applies")
        else:
            lines.append(f"{theorem['theorem']} does not apply: "
                         f"{', '.join(theorem['reasons'])}")

    if results["clamped_points"]:
        lines.append(f"clamped points: {', '.join(results['clamped_points'])}")

    return lines


def _render_solve(results):

    trajectory = results["trajectory"]
    lines = [f"path: {' -> '.join(trajectory['path'])}",
             f"termination: {trajectory['termination']} after "
             f"{trajectory['steps']} steps"]

    if trajectory["fixed_point"] is not None:
        clamp = " (truncation clamp)" if trajectory["clamped"] else ""
        lines.append(f"fixed point: {trajectory['fixed_point']}{clamp}")

    if trajectory["cycle"]:
        lines.append(f"cycle: [{', '.join(trajectory['cycle'])}]")

    fixedPoints = [c["point"] for c in results["fixed_points"]]
    lines.append(f"fixed points by exhaustion: "
                 f"{', '.join(fixedPoints) if fixedPoints else 'none'}")

    bounds = results["bounds"]
    if bounds is not None:
        failures = sum(not r["holds"] for r in bounds["steps"]) + \
            sum(not r["holds"] for r in bounds["tail"])
        state = "all hold" if bounds["all_hold"] else f"{failures} failures"
        lines.append(f"bounds at lambda {bounds['lambda']} (factor "
                     f"{bounds['factor']}): {state}")

    return lines


def _render_search(results):

    lines = []

    verification = results["verification"]
    if verification is not None:
        state = "valid" if verification["valid"] else "not valid"
        lines.append(f"supplied T '{verification['aux']}' is {state} "
                     f"(lambda = {verification['verdict']['lambda_min']})")

    certificate = results["certificate"]
    if certificate is None:
        lines.append("NotFound")
    else:
        table = ", ".join(f"{x}->{y}" for x, y in certificate["T"].items())
        lines.append(f"certificate T: {table}")
        lines.append(f"  lambda = {certificate['lambda']}")

    return lines


RENDERERS = {"validate": _render_validate,
             "analyze": _render_analyze,
             "solve": _render_solve,
             "search-t": _render_search}


def render(report: ReportDocument):

    if "error" in report.results:
        return f"{report.command}: {report.results['message']}\n"

    lines = RENDERERS[report.command](report.results)

    return "\n".join(lines) + "\n"
