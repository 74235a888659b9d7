from kannanfix.iteration.diagnostics import DummyDiagnostics
from kannanfix.iteration.interface import IterationDiagnostics
from kannanfix.iteration.trajectory import (StepData, StepRecord, Termination,
                                            Trajectory)
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.space.point import PointId
from kannanfix.utility.verbosity import VerbosityController


class PicardIteration:
    """
    Picard iteration x_{n+1} = S x_n on a finite space.

    On a finite space the orbit either reaches a fixed point or revisits a
    point, so MaxIter only triggers when the cap is smaller than the orbit.
    """

    MAX_ITERATIONS = 200

    def __init__(self, selfMap: FiniteSelfMap, auxiliaryMap=None,
                 maxIterations=None, clampedPoints=(),
                 diagnostics: IterationDiagnostics = None):

        if maxIterations is None:
            maxIterations = PicardIteration.MAX_ITERATIONS

        if maxIterations < 1:
            raise ValueError(f"maxIterations must be at least 1, got "
                             f"{maxIterations}")

        self._selfMap = selfMap
        self._auxMap = auxiliaryMap
        self._maxIterations = maxIterations
        self._clampedPoints = frozenset(clampedPoints)
        self._diagnostics = diagnostics if diagnostics is not None \
            else DummyDiagnostics()

        self._verbosityController = VerbosityController(task="picard")

    @property
    def selfMap(self):
        return self._selfMap

    @property
    def auxiliaryMap(self):
        return self._auxMap

    @property
    def maxIterations(self):
        return self._maxIterations

    @property
    def diagnostics(self):
        return self._diagnostics

    def set_up_verbosity_controller(self, verbose):

        if verbose:
            self._verbosityController.prepare(self._maxIterations,
                                              self._diagnostics)
        else:
            self._verbosityController.turn_off()

    def _gap(self, x, successor):

        if self._auxMap is None:
            return None

        return self._auxMap.image_distance(x, successor)

    def run(self, start, lambdaUsed=None, verbose=False) -> Trajectory:

        self.set_up_verbosity_controller(verbose)
        self._diagnostics.reset()

        space = self._selfMap.space
        x = space.points[start.index] if isinstance(start, PointId) \
            else space.point(start)

        steps = []
        visited = {x: 0}

        for n in range(self._maxIterations):

            self._verbosityController.run(n)

            successor = self._selfMap(x)
            tGap = self._gap(x, successor)

            steps.append(StepRecord(x, tGap))
            self._diagnostics.process(StepData(n, x, successor, tGap))

            if successor == x:
                return Trajectory(steps[0].point, steps, successor,
                                  Termination.FIXED_POINT,
                                  clamped=x in self._clampedPoints,
                                  lambdaUsed=lambdaUsed)

            if successor in visited:
                cycle = [s.point for s in steps[visited[successor]:]]
                return Trajectory(steps[0].point, steps, successor,
                                  Termination.CYCLE_DETECTED, cycle=cycle,
                                  lambdaUsed=lambdaUsed)

            visited[successor] = len(steps)
            x = successor

        return Trajectory(steps[0].point, steps, x, Termination.MAX_ITER,
                          lambdaUsed=lambdaUsed)


def picard(space, selfMap, start, maxIterations=None, auxiliaryMap=None,
           clampedPoints=()) -> Trajectory:
    """
    Iterate S from `start` (PointId or label) until a fixed point, a cycle
    or the iteration cap.
    """
    if selfMap.space != space:
        raise ValueError("S is not defined on the given space")

    solver = PicardIteration(selfMap, auxiliaryMap, maxIterations,
                             clampedPoints)

    return solver.run(start)
