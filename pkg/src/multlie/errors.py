"""Exception hierarchy for the engine."""


class MLAError(Exception):
    pass


class NotAGroup(MLAError):
    pass


class NotAssociative(NotAGroup):
    def __init__(self, x, y, z):
        super().__init__(f"not associative at ({x}, {y}, {z})")
        self.witness = (x, y, z)


class NoIdentity(NotAGroup):
    def __init__(self):
        super().__init__("no two-sided identity")


class NoInverse(NotAGroup):
    def __init__(self, x):
        super().__init__(f"element {x} has no two-sided inverse")
        self.witness = (x,)


class OrderTooLarge(MLAError):
    pass


class NotASubgroup(MLAError):
    pass


class NotNormal(MLAError):
    pass


class NotASubalgebra(MLAError):
    pass


class NotAnIdeal(MLAError):
    pass


class NotCentral(MLAError):
    def __init__(self, element):
        super().__init__(f"ideal element {element} is not central")
        self.witness = element


class NotAHomomorphism(MLAError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AxiomViolation(MLAError):
    """Raised by :func:`multlie.algebra.check_axioms`.

    ``axiom`` is 1..5 and ``witnesses`` the lexicographically first tuple
    of element indices at which the identity fails.
    """

    def __init__(self, axiom: int, witnesses: tuple, names=None):
        self.axiom = axiom
        self.witnesses = tuple(witnesses)
        labels = ("x", "y", "z")
        shown = [names[w] if names else w for w in self.witnesses]
        where = ", ".join(f"{k}={v}" for k, v in zip(labels, shown))
        super().__init__(f"axiom {axiom} violated at {where}")


class StarNotWellDefined(MLAError):
    """Internal consistency failure: star does not descend to a quotient."""


class CentralityLost(MLAError):
    """Internal failure while iterating excisions."""


class VerificationFailed(MLAError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnknownTheoremId(MLAError):
    pass
