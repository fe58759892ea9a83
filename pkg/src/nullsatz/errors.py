"""Exception hierarchy.

Every error records the module and operation that raised it so the CLI can
print a precise diagnostic.  ``exit_code`` follows the CLI contract:
2 for bad input, 3 for unsupported regimes, 1 for mathematical failures.
"""


class NullsatzError(Exception):
    exit_code = 1

    def __init__(self, message, module=None, op=None):
        super().__init__(message)
        self.module = module
        self.op = op

    def where(self):
        if self.module and self.op:
            return f"{self.module}.{self.op}"
        return self.module or self.op or "nullsatz"


class InputError(NullsatzError):
    exit_code = 2


class UnsupportedError(NullsatzError):
    exit_code = 3


class ParseError(InputError):
    def __init__(self, message, offset, module="polymod", op="parse"):
        super().__init__(f"{message} at offset {offset}", module, op)
        self.offset = offset


class NotIrreducible(InputError):
    pass


class NotMonic(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class RankMismatch(InputError):
    pass


class MixedParents(InputError):
    pass


class FactorIndexOutOfRange(InputError):
    pass


class ZeroVector(InputError):
    pass


class NotSurjective(InputError):
    pass


class NotSimpleModule(InputError):
    pass


class NotSupported(UnsupportedError):
    pass


class SmallCharacteristic(UnsupportedError):
    pass


class NotSplit(UnsupportedError):
    pass


class NotAzumaya(UnsupportedError):
    pass


class TooLargeForExhaustion(UnsupportedError):
    pass


class DegreeBudgetExceeded(UnsupportedError):
    pass


class NotZeroDimensional(UnsupportedError):
    pass


class InfiniteBaseField(UnsupportedError):
    pass


class DegreeBoundTooSmall(UnsupportedError):
    pass


class InternalInconsistency(NullsatzError):
    pass


class IdentityFailed(NullsatzError):
    pass
