"""Exception hierarchy.  ``exit_code`` feeds the CLI: 1 check failure,
2 input error, 3 resource budget exceeded."""


class SkewAlgError(Exception):
    exit_code = 1


class InputError(SkewAlgError):
    exit_code = 2


class BudgetError(SkewAlgError):
    exit_code = 3


class MalformedRelation(InputError):
    def __init__(self, message, term=None):
        super().__init__(message)
        self.term = term


class MalformedQuiver(InputError):
    pass


class CapExceeded(BudgetError):
    pass


class NotAdmissibleAtCap(BudgetError):
    pass


class UnsupportedCharacteristic(SkewAlgError):
    pass


class NonSplitQuotient(SkewAlgError):
    pass


class NonSplitEndo(SkewAlgError):
    pass


class PresentationDegreeOverflow(BudgetError):
    pass


class SearchBudgetExceeded(BudgetError):
    pass


class NotAutomorphism(InputError):
    pass


class NotHomomorphism(InputError):
    pass


class RelationsNotPreserved(InputError):
    pass


class BadCharacteristic(InputError):
    pass


class NotStable(SkewAlgError):
    pass


class NonCoherentStabilizers(SkewAlgError):
    pass


class NotEquivariant(SkewAlgError):
    pass


class HasProjectiveSummand(SkewAlgError):
    pass


class HasInjectiveSummand(SkewAlgError):
    pass


class NotRepFinite(SkewAlgError):
    pass


class KnittingStuck(SkewAlgError):
    pass


class SimpleProjectiveInjective(InputError):
    pass


class OrbitNotClosed(InputError):
    pass


class NotTauEquivariant(InputError):
    pass


class SliceImagesInconsistent(InputError):
    pass


class WindowExhausted(BudgetError):
    pass


class SectionEndoNotHereditary(SkewAlgError):
    pass


class SchemaError(InputError):
    pass
