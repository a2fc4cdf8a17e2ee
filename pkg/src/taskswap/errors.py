"""Exception hierarchy shared by the library and the command line front end."""


class TaskSwapError(Exception):
    """Base class for every error raised by :mod:`taskswap`."""


class PermutationError(TaskSwapError, ValueError):
    """Malformed permutation or transposition."""


class SizeMismatchError(TaskSwapError, ValueError):
    """Two objects that must share a size ``n`` do not."""


class TopologyError(TaskSwapError, ValueError):
    """Invalid topology description (bad ``n``, ``k`` or tree edge list)."""


class UnknownTopologyError(TopologyError):
    """Topology kind outside the supported set."""


class NotATreeError(TopologyError):
    """A tree-only operation was called on a graph that is not a tree."""


class UnstableDisplacementError(TaskSwapError, ValueError):
    """A displacement vector still admits a contracting transformation."""


class CapExceededError(TaskSwapError):
    """The brute-force oracle was asked for more states than its cap allows."""


class UnreachableError(TaskSwapError):
    """The generators do not connect the two permutations."""


class PlannerInvariantError(TaskSwapError, RuntimeError):
    """A planner reached a state its algorithm says cannot happen."""
