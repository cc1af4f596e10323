"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class for every structured error raised by this package."""


class AssociativityViolation(WorkbenchError):
    """h*(g*f) != (h*g)*f for some composable triple; names the triple."""


class IdentityViolation(WorkbenchError):
    """An identity morphism fails a unit law or is mistyped."""


class IllTypedComposition(WorkbenchError):
    """The composition table is defined off, or undefined on, a composable pair."""


class SizeLimitExceeded(WorkbenchError):
    """An enumeration would exceed the configured search budget."""


class NotMonomorphism(WorkbenchError):
    """A functor expected to be injective on objects and morphisms is not."""


class NotSieve(WorkbenchError):
    """An inclusion expected to be closed under incoming morphisms is not."""


class NotPoset(WorkbenchError):
    """A category expected to be a poset is not one."""


class InvalidWitness(WorkbenchError):
    """A Dwyer witness fails one of its defining conditions."""


class IncompleteInput(WorkbenchError):
    """An operation needing a complete simplicial set got a truncated one."""


class ClosureBudgetExceeded(WorkbenchError):
    """Word-closure did not stabilize within the step budget."""


class NotOrbit(WorkbenchError):
    """A set-valued diagram whose colimit should be a point has a bigger one."""


class NotMonoTower(WorkbenchError):
    """A tower link is not pointwise injective."""


class NotSubgroupOfStabilizer(WorkbenchError):
    """H is not contained in the stabilizer of the chosen object."""


class UnknownSuite(WorkbenchError):
    """run_suite was asked for a suite name that is not registered."""
