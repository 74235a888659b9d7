from abc import ABC, abstractmethod


class ContractionCondition(ABC):
    """
    A Kannan-type inequality numerator(x, y) <= lambda * denominator(x, y),
    required for all pairs of points. Both sides are exact and symmetric in
    (x, y).
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def numerator(self, x, y):
        pass

    @abstractmethod
    def denominator(self, x, y):
        pass
