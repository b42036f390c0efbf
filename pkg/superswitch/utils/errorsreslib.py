# =======
# Classes
# =======
class ChannelDomainError(ValueError):
    """
    Exception raised when a channel parameter, a state or an
    ensemble violates its legal domain. The message names the
    legal interval or the violated invariant.
    """

class DimensionMismatchError(ValueError):
    """
    Exception raised when channels, states or measurements with
    different Hilbert space dimensions are combined.
    """

class UnsupportedStrategyError(ValueError):
    """
    Exception raised when a guessing strategy or a protocol is
    requested for an ensemble or a dimension it does not cover.
    """

class BranchLimitError(RuntimeError):
    """
    Exception raised when the number of superswitch branches
    to be generated exceeds the configured limit.
    """
    # === Constructor ===
    def __init__(self, branch_count, max_branches):
        self.branch_count = branch_count
        self.max_branches = max_branches
        super().__init__(f'Branch limit exceeded - {branch_count} branches requested, '
                         f'limit is {max_branches}')
