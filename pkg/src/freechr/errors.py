class FreeCHRError(Exception):
    """Base class for all errors raised by this package."""


class ProgramConstructionError(FreeCHRError, ValueError):
    """A rule or composition violates a structural constraint."""


class MalformedMatchError(FreeCHRError, ValueError):
    """Occurrence indices do not describe a valid selection of a state."""


class DomainFunctionError(FreeCHRError):
    """A head predicate, guard or body raised while being evaluated."""

    def __init__(self, rule_name, role, cause):
        self.rule_name = rule_name
        self.role = role
        self.cause = cause
        super().__init__(f"{role} of rule {rule_name!r} raised {cause!r}")
