"""McKay quivers of the complex reflection groups G(r,p,n).

The combinatorial builders live in :mod:`mckayquiver.mckay`, the character
oracle that checks them in :mod:`mckayquiver.characters`, and the Lusztig
algebra engine in :mod:`mckayquiver.lusztig`.
"""

from .characters import character_table, verify_quiver_gr1n, verify_quiver_grpn
from .clifford import HIrrep, OrbitClass, irreps_grpn, orbit_of, shift
from .cyclotomic import Cyclo
from .mckay import Quiver, mckay_gr1n, mckay_grpn, mckay_sn
from .partitions import MultiPartition, Partition, parse_multipartition

__version__ = "0.1.0"

__all__ = [
    "Cyclo",
    "HIrrep",
    "MultiPartition",
    "OrbitClass",
    "Partition",
    "Quiver",
    "character_table",
    "irreps_grpn",
    "mckay_gr1n",
    "mckay_grpn",
    "mckay_sn",
    "orbit_of",
    "parse_multipartition",
    "shift",
    "verify_quiver_gr1n",
    "verify_quiver_grpn",
]
