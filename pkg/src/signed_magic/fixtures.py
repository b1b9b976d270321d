"""Hand-made small array sets used as base cases.

Each set is stored verbatim and checked against a SHA-256 digest of its
canonical JSON form when loaded, so an accidental edit is caught early.
"""

from __future__ import annotations

import hashlib
import json
from functools import lru_cache

from .core import ArraySet, PartialGrid
from .errors import IntegrityError, ParameterError

_FIG1 = (
    (
        (  10,   -4,   -6,    5,   -5,    7,   -7),
        (  -2,   19,  -17,  -32,   32,  -33,   33),
        (  -8,  -15,   23,   27,  -27,   26,  -26),
        (   1,  -30,   29,   14,  -16,  -18,   20),
        (  -1,   30,  -29,  -14,   16,   18,  -20),
    ),
    (
        ( -10,    4,    6,    9,   -9,   11,  -11),
        (   2,  -19,   17,  -34,   34,  -35,   35),
        (   8,   15,  -23,   25,  -25,   24,  -24),
        (   3,  -31,   28,   12,  -13,  -21,   22),
        (  -3,   31,  -28,  -12,   13,   21,  -22),
    ),
)

_FIG2 = (
    (
        (  10,   -8,   -2,    5,   -5,   17,  -17),
        (  -6,  -59,   65,  -90,   90,  -96,   96),
        (  -4,   68,  -63,   84,  -85,   79,  -79),
        (   1,  -89,   87,  -45,   47,   49,  -50),
        (  -1,   88,  -87,   46,  -47,  -49,   50),
    ),
    (
        ( -10,    8,    2,    7,   -7,   19,  -19),
        (   6,   59,  -65,  -91,   91,  -97,   97),
        (   4,  -68,   63,   85,  -84,   78,  -78),
        (  -3,   89,  -86,   45,  -44,   51,  -52),
        (   3,  -88,   86,  -46,   44,  -51,   52),
    ),
    (
        (  40,  -18,  -22,   21,  -21,   23,  -23),
        ( -14,   48,  -34,  -98,   98,  -99,   99),
        ( -26,  -30,   56,   77,  -77,   76,  -76),
        (   9,  -92,   83,   60,  -62,  -64,   66),
        (  -9,   92,  -83,  -60,   62,   64,  -66),
    ),
    (
        ( -40,   18,   22,   25,  -25,   27,  -27),
        (  14,  -48,   34, -100,  100, -101,  101),
        (  26,   30,  -56,   75,  -75,   74,  -74),
        (  11,  -93,   82,   55,  -57,  -67,   69),
        ( -11,   93,  -82,  -55,   57,   67,  -69),
    ),
    (
        (  36,  -16,  -20,   29,  -29,   31,  -31),
        ( -12,   53,  -41, -102,  102, -103,  103),
        ( -24,  -37,   61,   73,  -73,   72,  -72),
        (  13,  -94,   81,   39,  -43,  -54,   58),
        ( -13,   94,  -81,  -39,   43,   54,  -58),
    ),
    (
        ( -36,   16,   20,   33,  -33,   35,  -35),
        (  12,  -53,   41, -104,  104, -105,  105),
        (  24,   37,  -61,   71,  -71,   70,  -70),
        (  15,  -95,   80,   28,  -32,  -38,   42),
        ( -15,   95,  -80,  -28,   32,   38,  -42),
    ),
)

_FIG3 = (
    (
        (  53,    3,  -56,   17,  -17,   19,  -19),
        ( -57,   59,   -2,  -65,   65,  -66,   66),
        (  55,  -60,    5,   48,  -48,   47,  -47),
        ( -58,    4,   54,   16,  -18,  -26,   28),
        (   7,   -6,   -1,  -16,   18,   26,  -28),
    ),
    (
        ( -53,   -3,   56,   21,  -21,   23,  -23),
        (  57,  -59,    2,  -67,   67,  -68,   68),
        ( -55,   60,   -5,   46,  -46,   45,  -45),
        (  58,   -4,  -54,   31,  -33,  -34,   36),
        (  -7,    6,    1,  -31,   33,   34,  -36),
    ),
    (
        (  22,  -14,   -8,   13,  -13,   25,  -25),
        ( -12,  -20,   32,  -63,   63,  -69,   69),
        ( -10,   35,  -24,   49,  -50,   44,  -44),
        (   9,  -62,   52,  -38,   40,   29,  -30),
        (  -9,   61,  -52,   39,  -40,  -29,   30),
    ),
    (
        ( -22,   14,    8,   15,  -15,   27,  -27),
        (  12,   20,  -32,  -64,   64,  -70,   70),
        (  10,  -35,   24,   50,  -49,   43,  -43),
        ( -11,   62,  -51,   38,  -37,   41,  -42),
        (  11,  -61,   51,  -39,   37,  -41,   42),
    ),
)

_FIG4 = (
    (
        (  -4,   -5,    9,   11,  -11),
        (   4,   -7,    3,  -13,   13),
        (  -2,    5,   -3,  -24,   24),
        (   2,   -8,    6,   25,  -25),
        (  -1,    7,   -6,  -26,   26),
        (   1,    8,   -9,   27,  -27),
    ),
    (
        (  10,  -28,   17,   19,  -18),
        ( -10,   28,  -17,  -23,   22),
        (  12,  -29,   16,  -20,   21),
        ( -12,   29,  -16,  -19,   18),
        (  14,  -30,   15,   23,  -22),
        ( -14,   30,  -15,   20,  -21),
    ),
)
_TABLE = {
    "fig1": (_FIG1, "d861290aeaaac1354ee54785c32996d207dc32e9a3ebc2fda8e31058bb672a8e"),
    "fig2": (_FIG2, "6aad66dcfaaa07a6345db68fd2f884bd8cb631d5e4e3a410449ff711981b9f48"),
    "fig3": (_FIG3, "d37a7ecb0d25fad76ed12e3671853194f349c716025db7bb66a3ed3e3a3a1674"),
    "fig4": (_FIG4, "861342b3202d35595fe784453c39c7ccf8535a0c38c885533096a7f2adab43c0"),
}

# (a, b, e) of each fixture.
SHAPES = {"fig1": (5, 7, 2), "fig2": (5, 7, 6), "fig3": (5, 7, 4), "fig4": (6, 5, 2)}


def digest(arrays) -> str:
    payload = json.dumps([[list(r) for r in a] for a in arrays])
    return hashlib.sha256(payload.encode()).hexdigest()


@lru_cache(maxsize=None)
def fixture(name: str) -> ArraySet:
    """Return the named fixture (``fig1`` .. ``fig4``) as an ArraySet."""
    if name not in _TABLE:
        raise ParameterError(f"unknown fixture {name!r}; choose from {sorted(_TABLE)}")
    data, expected = _TABLE[name]
    if digest(data) != expected:
        raise IntegrityError(f"fixture {name} does not match its checksum")
    return ArraySet.of([PartialGrid.from_rows(a) for a in data])
