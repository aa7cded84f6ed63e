"""Exact computational algebra for the Brauer algebra of type B_n.

The algebra lives over the Laurent ring Z[d, d^-1] and is handled entirely
symbolically: no floating point anywhere.  The main entry points are

* :mod:`brauerb.ring`       exact Laurent arithmetic and the marker monoid H
* :mod:`brauerb.weyl`       signed permutations, roots, reflections, cosets
* :mod:`brauerb.admissible` admissible root sets and the monoid action
* :mod:`brauerb.connector`  decorated connectors and basis counting
* :mod:`brauerb.normalform` normal forms, multiplication, basis enumeration
* :mod:`brauerb.cellular`   the cell datum and its verification
* :mod:`brauerb.cli`        command line interface
"""

from brauerb.ring import Laurent, Marker, marker_mul

__all__ = ["Laurent", "Marker", "marker_mul", "BrauerEngine"]
__version__ = "0.1.0"


def __getattr__(name):
    if name == "BrauerEngine":
        from brauerb.normalform import BrauerEngine

        return BrauerEngine
    raise AttributeError(name)
