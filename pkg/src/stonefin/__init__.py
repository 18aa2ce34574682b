"""Finite-scale Stone duality, ultrafilter spaces and non-Archimedean function algebras."""

from .balg import BoolAlg, Filter, Ultrafilter, fil_generate, is_ultrafilter
from .funcalg import BerkovichPoint, BoundedFunction, IdealDescriptor, spectrum, sup_norm, uf_seminorm
from .topo import ContinuousMap, FiniteSpace, clopens, components
from .ufspace import build_uf, principal
from .valfield import ONE, ZERO, AbsValue, FiniteField, GaussianField, RationalField, Scalar, abs_value

__version__ = "0.1.0"
