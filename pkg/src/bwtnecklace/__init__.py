"""Burrows-Wheeler transforms of necklaces, generalized de Bruijn words and invertible necklaces."""

from .bwt import (BwtImage, BwtMatrix, ImageKind, Permutation, bwt, bwt_matrix,
                  inverse_bwt, inverse_bwt_balanced, inverse_standard_permutation_cycle,
                  is_bwt_image, is_generalized_de_bruijn, standard_permutation)
from .gdb_graph import (GdbGraph, count_gdb_words, cycle_to_gdb_word, enumerate_gdb_words,
                        enumerate_hamiltonian_cycles, eulerian_cycle_count, kappa, laplacian,
                        reduced_laplacian)
from .gfp_algebra import (CirculantClass, GfpMatrix, circulant, count_normal_elements,
                          det_mod_p, enumerate_invertible_necklaces, is_invertible_necklace,
                          is_p_rooted, reutenauer_act, reutenauer_mul, trace_class,
                          verify_invertibility_dichotomy)
from .snf_sandpile import (AbelianGroup, SnfResult, count_gdb_words_prime, group_order,
                           groups_isomorphic, reutenauer_group_structure, sandpile_group,
                           sandpile_prime_power, smith_normal_form)
from .words import (Necklace, Word, canonical_rotation, count_lyn, count_neck,
                    enumerate_necklaces, euler_phi, is_app, is_primitive, mobius, parikh,
                    shift, weight)

__version__ = "0.1.0"
