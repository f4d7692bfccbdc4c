"""Collects one pass/fail line per acceptance criterion during a test run."""

import functools

RESULTS: dict[int, tuple[str, str]] = {}


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                RESULTS[number] = ("FAIL", title)
                print(f"criterion {number:>2}: FAIL  {title}")
                raise
            RESULTS[number] = ("PASS", title)
            print(f"criterion {number:>2}: PASS  {title}")

        return run

    return wrap


def summary_lines() -> list[str]:
    return [f"criterion {n:>2}: {status}  {title}" for n, (status, title) in sorted(RESULTS.items())]
