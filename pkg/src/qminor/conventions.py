"""Sign and coproduct conventions for the quantized enveloping algebra.

The defining formulas for the braid operators, the Hopf pairing and the
coproduct each admit a q <-> q^-1 variant, and the literature does not
use them consistently.  All variant choices are collected here as one
frozen Convention object; the foundational test suite (quantum Serre
vanishing, PBW biorthogonality, normalizer values at q = 0, lattice
triangularity) pins down the default.

Changing the active convention invalidates every pairing/braid cache,
so caches register themselves here and are flushed on switch.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class Convention:
    # +1: T_i(E_j) uses q_i^(a_ij + s) as printed; -1 flips the exponent.
    e_braid_exp: int = 1
    # +1: T_i(F_j) uses q_i^(-a_ij - s) as printed; -1 flips the exponent.
    f_braid_exp: int = 1
    # generator pairing (E_i, F_i) = 1/(1 - q_i^(2 * pairing_exp))
    pairing_exp: int = -1
    # (K_lambda, K_mu) = q^(k_pairing_sign * (lambda, mu))
    k_pairing_sign: int = -1
    # coproduct variant: 1 is Delta(E) = E x 1 + K x E, Delta(F) = F x K + 1 x F;
    # 2 is the transposed form Delta(E) = E x K + 1 x E, Delta(F) = F x 1 + K x F.
    coproduct: int = 1
    # the K factor of Delta(E_i) is K_{cop_e_k_sign * alpha_i}
    cop_e_k_sign: int = 1
    # the K factor of Delta(F_i) is K_{-cop_f_k_sign * alpha_i}
    cop_f_k_sign: int = -1
    # F-side PBW monomials multiply the F root vectors in word order (+1)
    # or in reversed order (-1).
    f_pbw_order: int = 1
    # strip the +-q^a unit from 1/(E(m), F(m)) so that f_m(0) = 1
    normalizer_strip: bool = True
    # sign of the exponent in the sigma-eta eigen scalar
    # s_mu = (-1)^tr(mu) q^(eigen_exp * (<mu,mu>/2 + sum k_i d_i))
    eigen_exp: int = -1
    # root vectors built by braid operators are rescaled by
    # q^(root_unit_exp * (sum k_i d_i - <beta,beta>/2)) for beta = sum k_i alpha_i;
    # this is the unit that makes the twisted bar matrix unitriangular with
    # diagonal 1 while keeping every dual normalizer f_m in 1 + qZ[q].
    root_unit_exp: int = 1


_ACTIVE = Convention()
_REGISTERED_CACHES = []


def active():
    return _ACTIVE


def set_convention(conv):
    """Install a Convention and flush all dependent caches."""
    global _ACTIVE
    if conv != _ACTIVE:
        _ACTIVE = conv
        flush_caches()


def register_cache(cache):
    """Register a dict-like cache to be cleared on convention switch."""
    _REGISTERED_CACHES.append(cache)
    return cache


def flush_caches():
    for cache in _REGISTERED_CACHES:
        cache.clear()
