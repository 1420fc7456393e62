"""Descent by the two (3,3)-isogenies: connecting maps, local images, Selmer groups."""
from .connecting import connecting_image, local_image
from .local import LocalImage, local_bound
from .model import DIRECTIONS, Convention, DescentDirection, lemma_model
from .selftest import certify_convention, homomorphism_trials, tangency_trials
from .selmer import (SelmerResult, assemble, bad_primes, descent_data, monotonicity_check,
                     selmer_group)

__all__ = [
    "connecting_image", "local_image", "LocalImage", "local_bound", "DIRECTIONS", "Convention",
    "DescentDirection", "lemma_model", "certify_convention", "homomorphism_trials",
    "tangency_trials", "SelmerResult", "assemble", "bad_primes", "descent_data",
    "monotonicity_check", "selmer_group",
]
