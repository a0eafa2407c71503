"""Exception hierarchy.

Every validation failure raises a subclass of :class:`BraceError`, which is
itself a ``ValueError`` so callers that only care about "bad input" can catch
that instead.
"""

from __future__ import annotations


class BraceError(ValueError):
    pass


# group tables

class NotLatinSquare(BraceError):
    pass


class NoIdentity(BraceError):
    pass


class NotAssociative(BraceError):
    pass


class MissingInverse(BraceError):
    pass


class OrderCapExceeded(BraceError):
    pass


# permutations

class NotAPermutation(BraceError):
    pass


class NotAGroup(BraceError):
    pass


class DegreeMismatch(BraceError):
    pass


class NotASubgroup(BraceError):
    pass


# braces

class OrderMismatch(BraceError):
    pass


class IdentityMismatch(BraceError):
    pass


class BraceAxiomFailure(BraceError):
    def __init__(self, g: int, h: int, k: int):
        super().__init__(f"brace axiom fails at (g, h, k) = ({g}, {h}, {k})")
        self.triple = (g, h, k)


class IndexOutOfRange(BraceError):
    pass


class NotAStarSubgroup(BraceError):
    pass


class EmptySubset(BraceError):
    pass


# constructors

class NotInHolomorph(BraceError):
    pass


class NotRegular(BraceError):
    pass


class NotAnIsomorphism(BraceError):
    pass


class NotComplementary(BraceError):
    pass


class NotFixedPointFree(BraceError):
    pass


class NotHomomorphism(BraceError):
    pass


# algebras

class NotPrime(BraceError):
    pass


class NotNilpotent(BraceError):
    pass


# fixtures

class UnknownFixture(BraceError):
    pass


class BadParams(BraceError):
    pass
