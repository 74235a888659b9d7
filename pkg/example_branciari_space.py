from fractions import Fraction

from kannanfix.space.finiteSpace import FiniteSpace, SpaceKind
from kannanfix.space.axioms import validate_metric, validate_generalized_metric
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.contraction.analysis import analyze
from kannanfix.contraction.certificate import (search_certificate,
                                               verify_certificate)
from kannanfix.iteration.picard import picard
from kannanfix.iteration.bounds import verify_bounds
from kannanfix.iteration.fixedPoint import fixed_points_exhaustive
from kannanfix.space.rational import format_rational


LAMBDA = Fraction(1, 3)


# -----------------------------------------------------------------------------
#                             SPACE AND MAPS
# -----------------------------------------------------------------------------

space = FiniteSpace.from_table(
    ["1", "2", "3", "4"],
    [("1", "2", 3), ("1", "3", 1), ("1", "4", 4),
     ("2", "3", 1), ("2", "4", 4), ("3", "4", 4)],
    SpaceKind.GENERALIZED)

S = FiniteSelfMap.from_labels(space, {"1": "4", "2": "2", "3": "2", "4": "2"},
                              "S")
T = FiniteSelfMap.from_labels(space, {"1": "4", "2": "3", "3": "1", "4": "2"},
                              "T")


# -----------------------------------------------------------------------------
#                             AXIOMS
# -----------------------------------------------------------------------------

print("Metric axioms:")
for violation in validate_metric(space):
    print(f"  {violation.describe()}")

nViolations = len(validate_generalized_metric(space))
print(f"Rectangular axioms: {nViolations} violations\n")


# -----------------------------------------------------------------------------
#                             CONTRACTION ANALYSIS
# -----------------------------------------------------------------------------

report = analyze(space, S, T)

print(f"Kannan constant:    {format_rational(report.kannanVerdict.lambdaMin)}")
print(f"T-Kannan constant:  "
      f"{format_rational(report.extendedVerdict.lambdaMin)}")

for theorem in (report.metricTheorem, report.generalizedTheorem):
    state = "applies" if theorem.applies else \
        f"fails ({', '.join(r.value for r in theorem.reasons)})"
    print(f"  {theorem.theorem}: {state}")

valid, _ = verify_certificate(space, S, T, LAMBDA)
certificate = search_certificate(space, S, LAMBDA)

print(f"\nGiven T certifies S at lambda = {format_rational(LAMBDA)}: {valid}")
print(f"Smallest certificate: {certificate.auxiliaryMap.as_labels()} "
      f"(lambda = {format_rational(certificate.lam)})\n")


# -----------------------------------------------------------------------------
#                             PICARD ITERATION
# -----------------------------------------------------------------------------

for start in space.labels:

    trajectory = picard(space, S, start, auxiliaryMap=T)
    bounds = verify_bounds(trajectory, T, LAMBDA)

    print(f"x0 = {start}: {' -> '.join(trajectory.path_labels())}, "
          f"bounds hold: {bounds.allHold}")

fixedPoints = fixed_points_exhaustive(space, S)
print(f"\nFixed points: {[c.point.label for c in fixedPoints]}")
