from dataclasses import dataclass, field


@dataclass(frozen=True, order=True)
class PointId:
    """
    A point of a finite space. Ordering, equality and hashing follow the
    index; the label is carried for display only.
    """

    index: int
    label: str = field(default="", compare=False)

    def __str__(self):
        return self.label
