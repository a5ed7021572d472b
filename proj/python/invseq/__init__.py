"""Inversion sequences avoiding 102, lattice paths and the bijections between them."""

from ._invseq import *  # noqa: F401,F403
from ._invseq import InvseqError  # noqa: F401
