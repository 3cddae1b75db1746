from src.diophantine.sequences import fibonacci, lucas, lucas_squares_upto
from src.diophantine.equations import (
    k_with_solutions_at_z1_and_z2,
    lemma32_solutions,
    lemma32_uniqueness,
    solve_2x2_plus_1_eq_3y,
    solve_d1x2_plus_d2_eq_cpy,
    solve_x2_plus_1_eq_2kz,
    solve_x2_plus_1_eq_2y4,
    solve_x4_minus_2y2,
    thm6_square_condition,
)
from src.diophantine.bugeaud_shorey import (
    BSClassification,
    BSInstance,
    classify_bs,
    count_solutions_D1x2_plus_D2_eq_g2py,
    fibonacci_family_witness,
    g_family_witness,
    h_family_witness,
)

__all__ = [
    "fibonacci",
    "lucas",
    "lucas_squares_upto",
    "k_with_solutions_at_z1_and_z2",
    "lemma32_solutions",
    "lemma32_uniqueness",
    "solve_2x2_plus_1_eq_3y",
    "solve_d1x2_plus_d2_eq_cpy",
    "solve_x2_plus_1_eq_2kz",
    "solve_x2_plus_1_eq_2y4",
    "solve_x4_minus_2y2",
    "thm6_square_condition",
    "BSClassification",
    "BSInstance",
    "classify_bs",
    "count_solutions_D1x2_plus_D2_eq_g2py",
    "fibonacci_family_witness",
    "g_family_witness",
    "h_family_witness",
]
