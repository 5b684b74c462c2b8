"""Higher topological complexity of finite spaces.

Finite posets stand for finite T0 spaces (opens are down-sets).  The package
computes ``cat``, ``cc_{n,m}``, ``cc_n``, ``cc^k_n`` and ``cc^inf_n`` as
minimum covers by opens passing a hereditary test, decides homotopy of
monotone maps, and moves between complexes and posets through order
complexes and face posets.
"""

from .complex import (SimplicialComplex, barycentric_subdivision, count_chains, face_poset,
                      order_complex, sd_complex, tau, tau_k)
from .complexity import (EXACT, INFINITY, UPPER_BOUND, Budget, ComplexityReport, cat, cc_n, cc_nm,
                         maximal_sectionable_opens, sectionable_limit)
from .errors import (BudgetExceeded, CycleDetected, DomainMismatch, DuplicateLabel, EndpointMismatch,
                     FiniteTCError, IndexOutOfRange, Infeasible, InvalidWitness, ParityViolation,
                     ParseError, SizeLimitExceeded, UNKNOWN)
from .formats import load_complex, load_poset, zoo_complex, zoo_poset
from .homotopy import (CombinatorialPath, HomotopyWitness, beat_point_removals, concatenate, contractible_in,
                       core, homotopic, homotopic_bounded, homotopy_witness, is_contractible)
from .poset import (DownSet, FinitePoset, MonotoneMap, antichain, build_poset, chain, fence,
                    is_connected, minimal_open, power, product, projection, sphere, wedge_fence)
from .sections import (LINEAR, WEDGE, SectionWitness, section_exists_bounded, transport_R,
                       transport_f, transport_g)
from .simplicial import (K_functor, SimplicialMap, X_functor, contiguous_one_step, same_contiguity_class,
                         sc_n_of_complex, sc_n_of_order_complex)
from .subdivision import SubdivisionTower, cc_inf_n, cc_k_n

__version__ = "0.1.0"
