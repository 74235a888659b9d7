class MalformedSpace(ValueError):
    """
    Raised when a distance table cannot describe a space at all: missing,
    duplicated or negative entries, unknown or repeated labels.

    Instance Attributes
    -------------------
    evidence : list
        Axiom violations backing the complaint (NonNegativity witnesses for
        negative entries). Empty for purely structural problems.
    """

    def __init__(self, message, evidence=None):

        super().__init__(message)
        self.evidence = list(evidence) if evidence is not None else []


class TruncationTooSmall(ValueError):
    pass


class LambdaOutOfRange(ValueError):
    pass


class SearchSpaceTooLarge(RuntimeError):
    pass


class DocumentError(ValueError):
    """
    Parse or schema error in a space document. `field` names the offending
    entry (e.g. 'distances[3]'), `line` is set for syntax errors.
    """

    def __init__(self, message, field=None, line=None):

        super().__init__(message)
        self.field = field
        self.line = line

    def diagnostic(self):

        location = []
        if self.line is not None:
            location.append(f"line {self.line}")
        if self.field is not None:
            location.append(f"field '{self.field}'")

        if not location:
            return str(self)

        return f"{', '.join(location)}: {self}"
