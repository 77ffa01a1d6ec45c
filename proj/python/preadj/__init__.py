from ._preadj import (
    BudgetExceeded,
    DomainError,
    compose,
    decide_gr,
    enumerate_words,
    is_tight,
    pa_random_suite,
    worked_example,
    run,
    tight_complete,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "compose",
    "decide_gr",
    "enumerate_words",
    "is_tight",
    "pa_random_suite",
    "worked_example",
    "run",
    "tight_complete",
]
