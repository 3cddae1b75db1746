from src.arith.roots import (
    integer_root,
    is_perfect_power,
    is_perfect_square,
    isqrt,
    kronecker,
)
from src.arith.factorization import (
    Factorization,
    SquarefreeDecomposition,
    factorize,
    is_squarefree,
    squarefree_decompose,
)

__all__ = [
    "integer_root",
    "is_perfect_power",
    "is_perfect_square",
    "isqrt",
    "kronecker",
    "Factorization",
    "SquarefreeDecomposition",
    "factorize",
    "is_squarefree",
    "squarefree_decompose",
]
