"""
CLI Utility Functions
Flag parsing helpers shared by the command-line script and its tests
"""

from typing import List, Optional, Tuple

from .errors import UsageError


def _parse_int(text: str, what: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise UsageError(f"{what} must be an integer, got {text!r}") from None


def parse_range(text: str) -> List[int]:
    """Parse "A..B" (inclusive) or a single "A" into a list of orders"""
    if '..' in text:
        low_text, high_text = text.split('..', 1)
        low = _parse_int(low_text, "range start")
        high = _parse_int(high_text, "range end")
        if high < low:
            raise UsageError(f"range {text!r} is empty")
        return list(range(low, high + 1))
    return [_parse_int(text, "range")]


def parse_fail_set(text: str) -> Tuple[int, ...]:
    """Parse "i,j,..." into a sorted tuple of distinct vertex indices"""
    parts = [part for part in text.split(',') if part.strip()]
    if not parts:
        raise UsageError("--fail-set needs at least one vertex")
    return tuple(sorted({_parse_int(part, "failed vertex") for part in parts}))


def resolve_orders(n: Optional[int], range_text: Optional[str]) -> List[int]:
    """Combine the positional order and --range into one list"""
    if n is not None and range_text is not None:
        raise UsageError("give either an order or --range, not both")
    if range_text is not None:
        return parse_range(range_text)
    if n is not None:
        return [n]
    return []


def parse_seed(text: Optional[str]) -> Optional[int]:
    """Unsigned 64-bit seed, or None when not given"""
    if text is None:
        return None
    seed = _parse_int(text, "--seed")
    if not 0 <= seed < 2 ** 64:
        raise UsageError(f"--seed must be an unsigned 64-bit integer, got {seed}")
    return seed
