MAX_ELEMENTS = 16

# Number of posets on p unlabeled points, p = 1..13.
POSET_COUNTS: dict[int, int] = {
    1: 1,
    2: 2,
    3: 5,
    4: 16,
    5: 63,
    6: 318,
    7: 2045,
    8: 16999,
    9: 183231,
    10: 2567284,
    11: 46749427,
    12: 1104891746,
    13: 33823827452,
}

DIGRAPH6_HEADER = ">>digraph6<<"
DIGRAPH6_PREFIX = ord("&")
DIGRAPH6_BIAS = 63
DIGRAPH6_MAX_BYTE = 126
DIGRAPH6_MAX_SHORT_ORDER = 62

CHECKED_PROPERTIES = (
    "ehrhart_positive",
    "real_rooted",
    "log_concave",
    "unimodal",
    "graded_symmetric",
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3
