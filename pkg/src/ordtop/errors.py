"""Exception hierarchy shared by every ordtop module."""


class OrdTopError(Exception):
    """Base class for all library errors."""


class DuplicateId(OrdTopError):
    pass


class UnknownElement(OrdTopError):
    pass


class CycleDetected(OrdTopError):
    """The supplied pairs violate antisymmetry."""


class EmptySet(OrdTopError):
    pass


class SizeLimit(OrdTopError):
    """An exhaustive operation was asked to run on a carrier above the guard."""


class InvalidTopology(OrdTopError):
    pass


class NotClosed(OrdTopError):
    pass


class NotFiltered(OrdTopError):
    pass


class NotCompactSaturated(OrdTopError):
    pass


class NotContinuous(OrdTopError):
    pass


class NotIrreducibleClosed(OrdTopError):
    pass


class NotIrreducibleFamily(OrdTopError):
    pass


class NotRudinSet(OrdTopError):
    pass


class MissesMember(OrdTopError):
    """The closed set is disjoint from some member of the family."""


class NotUpperSet(OrdTopError):
    pass


class UnrepresentableSet(OrdTopError):
    """The result falls outside the representable fragment of a zoo space."""


class WrongGrammar(OrdTopError):
    pass


class NonMonotoneFamily(OrdTopError):
    pass


class NotCoarser(OrdTopError):
    pass
