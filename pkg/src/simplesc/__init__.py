"""Simple supercuspidals of split adjoint p-adic groups: exact classification data."""

from .chevalley import structure_constants, verify_sign_product
from .errors import SimpleSCError
from .gf import Field, FieldElem, embed, field_of_order, make_field
from .inventory import (InputPair, SSCLabel, base_change, class_representatives,
                        enumerate_representations, equivalent, formal_degree_ep)
from .lparam import (Candidate, adjoint_l_ratio, derive_from_fdc, gamma_principal, mu_jx,
                     principal_parameter, ssc_parameter_invariants)
from .mp_layer import Covector, TorusElem, delta, is_stable, omega_act, torus_act
from .orbit_oracle import check_delta_classification, hx_orbits, torus_orbits
from .polynomials import IntPoly, RatFunc
from .root_data import RootDatum, build_root_datum, omega_group

__version__ = "0.1.0"
