"""
Error Types
Exceptions raised by the Pascal network tools
"""


class PascalNetError(Exception):
    """Base class for every error raised by pascalnet"""


class DomainError(PascalNetError, ValueError):
    """An argument lies outside the operation's domain (order 0, bad index, ...)"""


class CapacityError(DomainError):
    """An order exceeds the configured maximum"""

    def __init__(self, value: int, limit: int):
        super().__init__(f"order {value} exceeds the configured maximum of {limit} "
                         f"(set PASCALNET_MAX_ORDER to raise it)")
        self.value = value
        self.limit = limit


class UnreachableError(PascalNetError):
    """No path exists where one is required"""


class UsageError(PascalNetError):
    """Invalid combination of command-line options"""


class ConfigError(PascalNetError):
    """Malformed configuration value"""
