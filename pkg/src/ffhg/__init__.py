"""Exact character sums and Greene hypergeometric functions over F_p, with verifiers
for their closed-form evaluations through Hecke characters of CM elliptic curves."""

from .characters import MulChar, char_from_ideal, greene_binomial, jacobi_sum, quadratic, trivial
from .cyclotomic import CycInt
from .errors import FFHGError
from .field import PrimeContext, make_prime_context
from .hecke import HeckeValue, QuadInt, hecke_z2, hecke_z6, hecke_zi, hecke_zi_twisted
from .hgvalue import HGValue
from .hypergeometric import f_eta, hg2f1, hg_n1fn, s_eta
from .verify import VerificationReport, scan, verify_lemmas, verify_theorem

__version__ = "0.1.0"

__all__ = [
    "CycInt",
    "FFHGError",
    "HGValue",
    "HeckeValue",
    "MulChar",
    "PrimeContext",
    "QuadInt",
    "VerificationReport",
    "char_from_ideal",
    "f_eta",
    "greene_binomial",
    "hecke_z2",
    "hecke_z6",
    "hecke_zi",
    "hecke_zi_twisted",
    "hg2f1",
    "hg_n1fn",
    "jacobi_sum",
    "make_prime_context",
    "quadratic",
    "s_eta",
    "scan",
    "trivial",
    "verify_lemmas",
    "verify_theorem",
]
