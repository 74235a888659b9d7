from kannanfix.iteration.diagnostics import DummyDiagnostics
from kannanfix.iteration.picard import PicardIteration


class PicardBuilder:

    def __init__(self):

        self._selfMap = None
        self._auxMap = None
        self._maxIterations = PicardIteration.MAX_ITERATIONS
        self._clampedPoints = ()

        # no overhead unless the caller asks for gap tracking
        self._diagnostics = DummyDiagnostics()

    @property
    def selfMap(self):
        return self._selfMap

    @selfMap.setter
    def selfMap(self, selfMap):
        self._selfMap = selfMap

    @property
    def auxiliaryMap(self):
        return self._auxMap

    @auxiliaryMap.setter
    def auxiliaryMap(self, auxMap):
        self._auxMap = auxMap

    @property
    def maxIterations(self):
        return self._maxIterations

    @maxIterations.setter
    def maxIterations(self, maxIter):
        self._maxIterations = maxIter

    @property
    def clampedPoints(self):
        return self._clampedPoints

    @clampedPoints.setter
    def clampedPoints(self, points):
        self._clampedPoints = tuple(points)

    @property
    def diagnostics(self):
        return self._diagnostics

    @diagnostics.setter
    def diagnostics(self, diagnostics):
        self._diagnostics = diagnostics

    def _validate_parameters(self):

        if self._selfMap is None:
            raise ValueError("Self-map S not set for Picard iteration")

        if self._maxIterations is None or self._maxIterations < 1:
            raise ValueError("Iteration cap must be a positive integer")

        if self._auxMap is not None and \
                self._auxMap.space != self._selfMap.space:
            raise ValueError("S and T must be defined on the same space")

        for p in self._clampedPoints:
            if p not in self._selfMap.space.points:
                raise ValueError(f"clamped point {p} is not a point of the "
                                 "space")

    def build_method(self) -> PicardIteration:

        self._validate_parameters()

        return PicardIteration(self._selfMap, self._auxMap,
                               self._maxIterations, self._clampedPoints,
                               self._diagnostics)
