from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from kannanfix.contraction.verdict import HALF
from kannanfix.iteration.trajectory import Trajectory
from kannanfix.utility.errors import LambdaOutOfRange


@dataclass(frozen=True)
class StepBound:
    """
    Per-step checks for gap g_n = d(Tx_n, Tx_{n+1}):
    one-step bound g_n <= q g_{n-1} (absent for n = 0) and geometric bound
    g_n <= q^n g_0, with q = lambda / (1 - lambda).
    """

    n: int
    tGap: Fraction
    ratioBound: Optional[Fraction]
    geometricBound: Fraction
    holds: bool


@dataclass(frozen=True)
class TailBound:
    """
    Cauchy tail check d(Tx_m, Tx_n) <= q^n / (1 - q) g_0 for m > n.
    """

    m: int
    n: int
    lhs: Fraction
    tailBound: Fraction
    holds: bool


@dataclass(frozen=True)
class BoundReport:

    lam: Fraction
    factor: Fraction
    stepRecords: List[StepBound]
    tailRecords: List[TailBound]

    @property
    def allHold(self):
        return all(r.holds for r in self.stepRecords) and \
            all(r.holds for r in self.tailRecords)

    def failures(self):
        return [r for r in self.stepRecords + self.tailRecords if not r.holds]


class BoundVerifier:
    """
    Checks a Picard trajectory against the convergence bounds implied by
    the T-dependent Kannan condition with constant lambda, in exact
    arithmetic. The tail check visits all pairs among the first
    `window` + 1 iterates.
    """

    TAIL_WINDOW = 200

    def __init__(self, lam, window=None):

        lam = Fraction(lam)

        if lam < 0 or lam >= HALF:
            raise LambdaOutOfRange(
                f"bounds need lambda in [0, 1/2), got {lam}")

        self._lambda = lam
        self._factor = lam / (1 - lam)
        self._window = BoundVerifier.TAIL_WINDOW if window is None \
            else window

    @property
    def factor(self):
        return self._factor

    def verify(self, trajectory: Trajectory, auxiliaryMap) -> BoundReport:

        iterates = trajectory.iterates
        q = self._factor

        gaps = [auxiliaryMap.image_distance(iterates[n], iterates[n + 1])
                for n in range(len(iterates) - 1)]

        powers = [Fraction(1)]
        for _ in range(len(iterates)):
            powers.append(powers[-1] * q)

        g0 = gaps[0]

        stepRecords = []
        for n, gap in enumerate(gaps):

            geometricBound = powers[n] * g0
            holds = gap <= geometricBound

            ratioBound = None
            if n > 0:
                ratioBound = q * gaps[n - 1]
                holds = holds and gap <= ratioBound

            stepRecords.append(
                StepBound(n, gap, ratioBound, geometricBound, holds))

        last = min(len(iterates) - 1, self._window)
        tailScale = g0 / (1 - q)

        tailRecords = []
        for n in range(last):
            tailBound = powers[n] * tailScale
            for m in range(n + 1, last + 1):

                lhs = auxiliaryMap.image_distance(iterates[m], iterates[n])
                tailRecords.append(
                    TailBound(m, n, lhs, tailBound, lhs <= tailBound))

        return BoundReport(self._lambda, q, stepRecords, tailRecords)


def verify_bounds(trajectory, auxiliaryMap, lam, window=None) -> BoundReport:
    return BoundVerifier(lam, window).verify(trajectory, auxiliaryMap)
