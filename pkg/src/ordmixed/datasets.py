"""Built-in datasets.

The strawberry experiment: 12 seedling populations (3 male parents crossed
with 4 female parents) grown in 4 randomized blocks, roughly 10 plants per
plot, each plant graded into one of three ordered fungus-damage categories.
Counts are embedded verbatim so nothing depends on external files.
"""

from __future__ import annotations

from io import StringIO

from .io import FactorSchema, load_dataset
from .model import Dataset

STRAWBERRY_SCHEMA = FactorSchema(
    factors=(("male", 3), ("female", 4), ("block", 4)), n_categories=3
)

# one row per plot: male female block y1 y2 y3
STRAWBERRY_TABLE = """\
male,female,block,y1,y2,y3
1,1,1,0,3,6
1,1,2,2,2,6
1,1,3,2,3,5
1,1,4,2,5,3
1,2,1,2,3,5
1,2,2,0,3,7
1,2,3,4,6,0
1,2,4,2,3,5
1,3,1,3,4,3
1,3,2,7,2,1
1,3,3,1,1,7
1,3,4,2,3,5
1,4,1,0,5,5
1,4,2,5,4,1
1,4,3,2,8,0
1,4,4,1,4,5
2,1,1,1,4,4
2,1,2,2,2,6
2,1,3,1,2,7
2,1,4,1,5,4
2,2,1,1,4,5
2,2,2,3,4,2
2,2,3,1,6,3
2,2,4,4,2,4
2,3,1,4,3,3
2,3,2,5,1,4
2,3,3,3,3,4
2,3,4,4,2,4
2,4,1,1,4,5
2,4,2,1,2,6
2,4,3,8,2,0
2,4,4,2,5,3
3,1,1,0,0,9
3,1,2,3,5,2
3,1,3,2,5,3
3,1,4,0,0,10
3,2,1,5,3,2
3,2,2,3,2,5
3,2,3,3,6,1
3,2,4,2,1,7
3,3,1,0,3,6
3,3,2,2,5,3
3,3,3,1,3,6
3,3,4,0,3,7
3,4,1,3,0,7
3,4,2,5,2,3
3,4,3,7,3,0
3,4,4,3,4,3
"""

_BUILTIN = {"strawberry": (STRAWBERRY_TABLE, STRAWBERRY_SCHEMA)}


def strawberry_dataset() -> Dataset:
    """The embedded strawberry experiment as a ready-to-fit dataset."""
    return load_dataset(StringIO(STRAWBERRY_TABLE), STRAWBERRY_SCHEMA)


def builtin_dataset(name: str) -> Dataset:
    """Look up an embedded dataset by name."""
    try:
        table, schema = _BUILTIN[name]
    except KeyError:
        raise ValueError(
            f"unknown builtin dataset {name!r}; available: {sorted(_BUILTIN)}"
        ) from None
    return load_dataset(StringIO(table), schema)
