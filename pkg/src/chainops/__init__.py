"""Exact computer algebra for operadic structures on chains.

Models the surjection and Barratt-Eccles operads over the integers and
their quotients, together with the chain-level representatives of mod-p
power operations acting on standard simplices and cubes.
"""

from .barratt_eccles import BarrattEcclesElement, eilenberg_zilber
from .chains import (CubicalElement, SimplicialElement, act_cubical,
                     act_simplicial, render, standard_cube, standard_simplex)
from .freemod import FreeModuleElement, TorsionError, make_element
from .surjection import BERGER_FRESSE, MCCLURE_SMITH, SurjectionElement
from .symgroup import (SymmetricRingElement, compose_at, compose_perms,
                       cyclic_generator, identity, norm_element, sign,
                       transfer_element)
from .steenrod import nu, psi_be, psi_surj, steenrod_chain, steenrod_index

__version__ = "0.1.0"

__all__ = [
    "BarrattEcclesElement", "CubicalElement", "FreeModuleElement",
    "SimplicialElement", "SurjectionElement", "SymmetricRingElement",
    "TorsionError", "BERGER_FRESSE", "MCCLURE_SMITH",
    "act_cubical", "act_simplicial", "compose_at", "compose_perms",
    "cyclic_generator", "eilenberg_zilber", "identity", "make_element",
    "norm_element", "nu", "psi_be", "psi_surj", "render", "sign",
    "standard_cube", "standard_simplex", "steenrod_chain",
    "steenrod_index", "transfer_element",
]
