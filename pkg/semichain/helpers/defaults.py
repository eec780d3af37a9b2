"""
Default configuration of the semichain graphs and search kernels.
"""

DEFAULT_SIZE_CAP = 10_000

DEFAULT_CONFIG = {
    "verbose": False,
    "debug": False,
    # None resolves to the machine parallelism
    "threads": None,
    "size_cap": DEFAULT_SIZE_CAP,
    "budget": {
        "max_subsemigroups": 250_000,
        "max_millis": 120_000,
    },
    # None lets the league search decide (on for n >= 7)
    "symmetry": None,
    "long_run": False,
    "strict": False,
    "format": "json",
    # largest group order handed to the exact subgroup-chain search
    "group_search_cap": 200,
}
