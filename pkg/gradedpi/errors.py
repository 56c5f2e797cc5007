class GradedPIError(ValueError):
    pass


class GroupSyntaxError(GradedPIError):
    def __init__(self, message: str, token: str):
        super().__init__(f"{message}: `{token}`")
        self.token = token


class DescriptorMismatchError(GradedPIError):
    pass


class TorsionError(GradedPIError):
    pass


class RepeatedEntriesError(GradedPIError):
    pass


class NotInSupportError(GradedPIError):
    pass


class NotAnIdentityError(GradedPIError):
    pass


class UnsupportedSizeError(GradedPIError):
    pass


class CriteriaDisagreementError(RuntimeError):
    """Criteria that must agree did not. Always a bug, never a verdict."""
