__all__ = ["BoundDirection", "CheckStatus", "ExitCode", "FamilyName"]

import enum


class ExitCode(enum.IntEnum):
    #: Every check held.
    PASS = 0
    #: At least one check failed.
    CHECK_FAILURE = 1
    #: The graphs or arguments could not be understood.
    INPUT_ERROR = 2
    #: The enumeration budget was exceeded.
    BUDGET = 3
    #: The requested quantity is not defined for this input.
    UNDEFINED = 4


class CheckStatus(enum.Enum):
    PASSED = "passed"
    FAILED = "failed"
    #: The hypotheses of the check are not met by its inputs.
    NOT_APPLICABLE = "not_applicable"
    #: Computed and recorded but deliberately not asserted.
    RECORDED = "recorded"


class BoundDirection(enum.Enum):
    #: The subject must be at least the bound.
    LOWER = "lower"
    #: The subject must be at most the bound.
    UPPER = "upper"
    #: The subject must equal the bound exactly.
    EQUAL = "equal"


class FamilyName(enum.Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    EMPTY = "empty"
    COMPLETE_MINUS_EDGE = "complete_minus_edge"
    DUMBBELL = "dumbbell"
    REGULARIZED_DUMBBELL = "regularized_dumbbell"
    BALANCED_BIPARTITE_PLUS_MATCHING = "balanced_bipartite_plus_matching"
    RED_CLIQUE_BIPARTITE = "red_clique_bipartite"

    def __str__(self):
        return self.value
