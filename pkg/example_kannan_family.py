import numpy as np

from fractions import Fraction

from kannanfix.map.family import AnalyticFamily, realize_family
from kannanfix.map.properties import sample_subsequential_convergence
from kannanfix.contraction.condition import kannan_lambda, t_kannan_lambda
from kannanfix.iteration.picard import picard
from kannanfix.iteration.bounds import verify_bounds
from kannanfix.iteration.diagnostics import GapDiagnostics
from kannanfix.iteration.builder import PicardBuilder
from kannanfix.space.rational import format_rational


LAMBDA = Fraction(1, 3)
TRUNCATIONS = [10, 20, 50]


# -----------------------------------------------------------------------------
#                             CONTRACTION CONSTANTS
# -----------------------------------------------------------------------------

# the classical constant grows with N, the T-dependent one does not
for N in TRUNCATIONS:

    realisation = realize_family(AnalyticFamily(truncation=N))
    space, S, T = realisation
    excluded = realisation.excluded_pairs()

    kannan = kannan_lambda(space, S, excluded)
    extended = t_kannan_lambda(space, S, T, excluded)

    print(f"N = {N:3d}: kannan = {format_rational(kannan.lambdaMin):>4}, "
          f"t-kannan = {format_rational(extended.lambdaMin)}")


# -----------------------------------------------------------------------------
#                             ITERATION TOWARDS THE CLAMP
# -----------------------------------------------------------------------------

realisation = realize_family(AnalyticFamily(truncation=40))
space, S, T = realisation

diagnostics = GapDiagnostics()

builder = PicardBuilder()
builder.selfMap = S
builder.auxiliaryMap = T
builder.clampedPoints = realisation.clampedPoints
builder.diagnostics = diagnostics

trajectory = builder.build_method().run("1/4", lambdaUsed=LAMBDA)

print(f"\nPicard from 1/4 stops at {trajectory.fixedPoint.label} "
      f"(clamped: {trajectory.clamped}) after {trajectory.nSteps} steps")
print(f"Largest one-step gap factor: "
      f"{float(diagnostics.maxFactor):.3e}")

prefix = trajectory.prefix(len(trajectory.points) - 1)
bounds = verify_bounds(prefix, T, LAMBDA)
print(f"Bounds on the pre-clamp prefix hold: {bounds.allHold}")

# the limit of the untruncated iteration
origin = picard(space, S, "0")
print(f"Orbit of 0: {origin.path_labels()} ({origin.termination.value})")


# -----------------------------------------------------------------------------
#                             SAMPLED CONVERGENCE OF T
# -----------------------------------------------------------------------------

outcome = sample_subsequential_convergence(T, 500, space.size + 5,
                                           np.random.default_rng(23))
print(f"\nSampled subsequential convergence: "
      f"{outcome.nWithConvergentSubsequence}/{outcome.nImageConvergent}")
