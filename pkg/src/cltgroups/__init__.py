"""Groups without subgroups of prescribed orders, and the CLT-degree D(G)/tau(|G|)."""

from .constructions import agl1, frobenius_subgroup, g_pqn, theorem1_construct
from .density import approximate_target, lemma32_value, verify_lemma32, witness_description
from .errors import DomainError, ResourceError
from .permgroup import PermGroup, cyclic_group, direct_product, generate, symmetric_group
from .spectrum import SpectrumReport, enumerate_subgroups, has_subgroup_of_order, spectrum

__all__ = [
    "DomainError", "PermGroup", "ResourceError", "SpectrumReport", "agl1", "approximate_target",
    "cyclic_group", "direct_product", "enumerate_subgroups", "frobenius_subgroup", "g_pqn",
    "generate", "has_subgroup_of_order", "lemma32_value", "spectrum", "symmetric_group",
    "theorem1_construct", "verify_lemma32", "witness_description",
]
