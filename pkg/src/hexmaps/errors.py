"""Exception types, one per violated contract."""


class HexmapsError(Exception):
    pass


# map core

class NonInvolution(HexmapsError):
    pass


class NotPermutation(HexmapsError):
    pass


class Disconnected(HexmapsError):
    pass


class NonPlanar(HexmapsError):
    pass


class OddCycle(HexmapsError):
    pass


class NotSimpleCycle(HexmapsError):
    pass


class MissingRoot(HexmapsError):
    pass


class PmapFormatError(HexmapsError):
    pass


# trees and words

class NotBlackRooted(HexmapsError):
    pass


class NotBicolored(HexmapsError):
    pass


class LengthMismatch(HexmapsError):
    pass


class CompositionMismatch(HexmapsError):
    pass


class EmptyClass(HexmapsError):
    pass


class UnbalancedWord(HexmapsError):
    pass


class TrailingBits(HexmapsError):
    pass


class RankOutOfRange(HexmapsError):
    pass


# closure / opening

class HasClockwiseCircuit(HexmapsError):
    pass


class InvalidTriOrientation(HexmapsError):
    pass


class NotIrreducible(HexmapsError):
    pass


# orientation algorithm

class NotOuterTriangular(HexmapsError):
    pass


class NoEligibleVertex(HexmapsError):
    pass


# angular mappings

class NotQuadrangulation(HexmapsError):
    pass


class RootNotBlack(HexmapsError):
    pass


class NotComplete(HexmapsError):
    pass


class RootMissing(HexmapsError):
    pass


# codec

class TooSmall(HexmapsError):
    pass


class MalformedHeader(HexmapsError):
    pass


class BadRootIndex(HexmapsError):
    pass


# oracle / sampling / series

class TooLarge(HexmapsError):
    pass


class TrialCapExceeded(HexmapsError):
    pass


class NonIntegerCoefficient(HexmapsError):
    pass
