"""Size caps used to refuse computations that would not finish at desk scale."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Budgets:
    # pairwise operations done in pure Python (big integers)
    python_pairs: int = 30_000_000
    # pairwise operations done with vectorised int64 arithmetic
    vector_pairs: int = 400_000_000
    # distinct keys held in a multiplicity counter
    counter_support: int = 5_000_000
    # tuples visited by brute-force enumerations
    brute_force: int = 20_000_000
    # side length of biadjacency matrices
    matrix_dim: int = 4_000
    # elements of an enumerated group slice
    group_elements: int = 2_000_000

    def with_(self, **changes) -> "Budgets":
        return replace(self, **changes)


DEFAULT_BUDGETS = Budgets()
