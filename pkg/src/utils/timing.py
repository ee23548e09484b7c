"""
Utility functions for wall-clock measurement of checks.
"""
import time


def start_timer() -> float:
    """Return a monotonic reference point for elapsed_millis."""
    return time.perf_counter()


def elapsed_millis(started: float) -> int:
    """
    Whole milliseconds elapsed since a start_timer() reference.

    Args:
        started (float): Value returned by start_timer().

    Returns:
        int: Non-negative elapsed time in milliseconds.
    """
    return max(0, int(round((time.perf_counter() - started) * 1000)))


def format_duration(millis: int) -> str:
    """Render a duration for progress messages, e.g. '850ms' or '2.4s'."""
    if millis < 1000:
        return f"{millis}ms"
    elif millis < 60000:
        return f"{millis / 1000:.1f}s"
    else:
        return f"{millis // 60000}m{(millis % 60000) // 1000:02d}s"
