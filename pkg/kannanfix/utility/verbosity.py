from kannanfix.utility.boilerplate import create_logger


class VerbosityLevel:

    OFF = 0
    FULL = 1


class VerbosityController:
    """
    Periodically reports progress of a long loop (Picard steps, certificate
    candidates) and lets an attached diagnostics object print its state.
    """

    def __init__(self, nPrintIntervals=20, minInterval=10, task="iteration"):

        self._verbosityLevel = VerbosityLevel.FULL

        self._nPrintIntervals = nPrintIntervals
        self._minInterval = minInterval
        self._task = task

        self._logger = create_logger(f"{task}_{id(self)}")

        self._printInterval = None
        self._diagnostics = None

    @property
    def printInterval(self):
        return self._printInterval

    @property
    def isOn(self):
        return self._verbosityLevel == VerbosityLevel.FULL

    def prepare(self, totalWork, diagnostics=None):

        self._verbosityLevel = VerbosityLevel.FULL
        self._printInterval = max(totalWork // self._nPrintIntervals,
                                  self._minInterval)
        self._diagnostics = diagnostics

    def turn_off(self):
        self._verbosityLevel = VerbosityLevel.OFF

    def run(self, iterIdx):

        if self._verbosityLevel == VerbosityLevel.OFF:
            return

        if iterIdx == 0:
            self._logger.info(f"Starting {self._task}.")

        if iterIdx % self._printInterval == 0 and iterIdx > 0:

            self._logger.info(f"{self._task}: {iterIdx} steps computed.")

            if self._diagnostics is not None:
                self._diagnostics.print_diagnostics(self._logger)
