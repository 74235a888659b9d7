from abc import ABC, abstractmethod


class MapInterface(ABC):
    """
    A total map defined on the points of a finite space.

    Images live in an ambient space that contains the finite one: either
    the finite space itself (self-maps given by a table) or the rational
    line the space was cut out of (closed-form maps of a truncated family).
    The contraction conditions only ever need distances between images, so
    that is what the interface exposes. Implementations are read-only.
    """

    @property
    @abstractmethod
    def space(self):
        pass

    @abstractmethod
    def image(self, point):
        pass

    @abstractmethod
    def image_key(self, point):
        """
        Hashable identity of the image of a point; equal keys iff equal
        images. Used for injectivity and convergence checks.
        """
        pass

    @abstractmethod
    def image_distance(self, x, y):
        """
        Exact ambient distance between the images of x and y.
        """
        pass

    def __call__(self, point):
        return self.image(point)
