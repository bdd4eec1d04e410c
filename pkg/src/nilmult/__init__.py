"""2-nilpotent multipliers of two-generator p-groups of class two.

Modules: ``hall`` (free nilpotent group of class 4 on a, b), ``words``
(relator grammar), ``lattice`` (Smith normal form), ``oracle`` (multiplier
from a presentation), ``groups`` (the class-two groups themselves),
``theory`` (classification and closed forms) and ``cli``.
"""
from .errors import InadmissibleParams, NoClosedForm, NotCentral, NotClassTwo
from .groups import GroupElement, GroupParams
from .hall import NfElement
from .lattice import AbelianInvariants, IntLattice, InfiniteQuotient
from .oracle import Presentation, multiplier_of, presentation_relators, two_nilpotent_multiplier
from .theory import (
    Classification,
    canonicalize,
    closed_form_multiplier,
    epicenter_membership,
    epicenter_witness,
    identify,
    is_2_capable,
    is_capable,
    validate,
)

__version__ = "0.1.0"
