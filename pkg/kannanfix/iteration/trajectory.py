from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from typing import Optional

from kannanfix.space.point import PointId


@unique
class Termination(Enum):

    FIXED_POINT = "FixedPoint"
    CYCLE_DETECTED = "CycleDetected"
    MAX_ITER = "MaxIter"


@dataclass(frozen=True)
class StepRecord:
    """
    Iterate x_n with t_gap = d(Tx_n, Tx_{n+1}); t_gap is None when the run
    had no auxiliary map.
    """

    point: PointId
    tGap: Optional[Fraction]


@dataclass(frozen=True)
class StepData:

    n: int
    point: PointId
    successor: PointId
    tGap: Optional[Fraction]


class Trajectory:
    """
    Picard orbit x_0, x_1 = S x_0, ..., x_K together with the successor
    x_{K+1} = S x_K of its last point and the reason the run stopped.

    For a fixed point the successor equals the last point; for a cycle it is
    the first revisited point; after MaxIter it is the next, unvisited
    iterate.
    """

    def __init__(self, start, steps, successor, termination,
                 cycle=(), clamped=False, lambdaUsed=None):

        self._start = start
        self._steps = tuple(steps)
        self._successor = successor
        self._termination = Termination(termination)
        self._cycle = tuple(cycle)
        self._clamped = clamped
        self._lambdaUsed = lambdaUsed

    @property
    def start(self):
        return self._start

    @property
    def steps(self):
        return self._steps

    @property
    def points(self):
        return [s.point for s in self._steps]

    @property
    def gaps(self):
        return [s.tGap for s in self._steps]

    @property
    def iterates(self):
        return self.points + [self._successor]

    @property
    def successor(self):
        return self._successor

    @property
    def termination(self):
        return self._termination

    @property
    def fixedPoint(self):

        if self._termination == Termination.FIXED_POINT:
            return self._steps[-1].point

        return None

    @property
    def cycle(self):
        return self._cycle

    @property
    def clamped(self):
        """
        True if the run stopped at a point fixed only by truncation.
        """
        return self._clamped

    @property
    def lambdaUsed(self):
        return self._lambdaUsed

    @property
    def nSteps(self):
        """
        Number of applications of S that produced a new point.
        """
        if self._termination == Termination.FIXED_POINT:
            return len(self._steps) - 1

        return len(self._steps)

    def prefix(self, nPoints):
        """
        Leading nPoints iterates; the following iterate becomes the
        successor and the run counts as stopped by MaxIter.
        """
        if nPoints < 1 or nPoints > len(self._steps):
            raise ValueError(f"prefix length {nPoints} outside "
                             f"[1, {len(self._steps)}]")

        if nPoints == len(self._steps):
            return self

        successor = self._steps[nPoints].point

        return Trajectory(self._start, self._steps[:nPoints], successor,
                          Termination.MAX_ITER, lambdaUsed=self._lambdaUsed)

    def path_labels(self):
        return [p.label for p in self.points]
