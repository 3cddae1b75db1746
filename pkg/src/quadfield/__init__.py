from src.quadfield.ring import (
    RingElement,
    alpha,
    elem_conj,
    elem_mul,
    elem_neg,
    elem_norm,
    elem_pow,
    elem_trace,
    eta,
    is_pth_power_in_ring,
    is_square_in_ring,
    square_root_in_ring,
    tau,
    unit_group,
)
from src.quadfield.forms import (
    QuadForm,
    compose,
    form_inverse,
    form_order,
    form_power,
    prime_form_above,
    principal_form,
    reduce_form,
    reduced_forms,
)
from src.quadfield.classgroup import (
    CLASS_GROUP_CACHE,
    ClassGroupSummary,
    class_group,
    class_number,
    fundamental_discriminant,
    ideal_class_order_above,
)

__all__ = [
    "RingElement",
    "alpha",
    "elem_conj",
    "elem_mul",
    "elem_neg",
    "elem_norm",
    "elem_pow",
    "elem_trace",
    "eta",
    "is_pth_power_in_ring",
    "is_square_in_ring",
    "square_root_in_ring",
    "tau",
    "unit_group",
    "QuadForm",
    "compose",
    "form_inverse",
    "form_order",
    "form_power",
    "prime_form_above",
    "principal_form",
    "reduce_form",
    "reduced_forms",
    "CLASS_GROUP_CACHE",
    "ClassGroupSummary",
    "class_group",
    "class_number",
    "fundamental_discriminant",
    "ideal_class_order_above",
]
