from abc import ABC, abstractmethod


class IterationDiagnostics(ABC):

    @abstractmethod
    def process(self, stepData):
        pass

    @abstractmethod
    def print_diagnostics(self, logger):
        pass

    @abstractmethod
    def reset(self):
        pass
