from fractions import Fraction

from kannanfix.iteration.interface import IterationDiagnostics
from kannanfix.space.rational import format_rational


class DummyDiagnostics(IterationDiagnostics):

    def process(self, stepData):
        return

    def print_diagnostics(self, logger):
        return

    def reset(self):
        return


class GapDiagnostics(IterationDiagnostics):
    """
    Records the T-image gaps d(Tx_n, Tx_{n+1}) of a run and the largest
    observed one-step factor g_n / g_{n-1}. Under the T-dependent Kannan
    condition with constant lambda this factor never exceeds
    lambda / (1 - lambda).
    """

    def __init__(self):

        self._gaps = []
        self._maxFactor = None

    @property
    def gaps(self):
        return list(self._gaps)

    @property
    def maxFactor(self):
        return self._maxFactor

    def process(self, stepData):

        if stepData.tGap is None:
            return

        if self._gaps and self._gaps[-1] > 0:

            factor = Fraction(stepData.tGap) / self._gaps[-1]

            if self._maxFactor is None or factor > self._maxFactor:
                self._maxFactor = factor

        self._gaps.append(stepData.tGap)

    def print_diagnostics(self, logger):

        if not self._gaps:
            logger.warning("  - No T-image gaps recorded (no auxiliary map).")
            return

        logger.info(f"  - Current T-image gap: "
                    f"{format_rational(self._gaps[-1])}")

        if self._maxFactor is not None:
            logger.info(f"  - Largest one-step gap factor: "
                        f"{format_rational(self._maxFactor)}")

    def reset(self):

        self._gaps = []
        self._maxFactor = None
