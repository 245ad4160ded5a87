"""Extended RSA over arbitrary moduli, and the membership set that governs
which messages survive the round trip."""

from .arith import DivRem, div_rem, ext_gcd, gcd, is_congruent, mod_inv, mod_pow
from .bigphi import (
    BigPhiSet,
    PhiMembershipWitness,
    big_phi_count,
    big_phi_count_by_enumeration,
    big_phi_set,
    membership_mask,
    phi_membership,
)
from .errors import (
    CapacityError,
    DomainError,
    FactorizationTimeout,
    InternalConsistencyError,
)
from .factoring import Factorization, factorize, gen_prime, is_prime, is_squarefree
from .harness import (
    ConjectureReport,
    SweepConfig,
    reproduce_worked_examples,
    sweep_conjecture,
    verify_theorem_suite,
)
from .rsa import (
    CorrectnessReport,
    KeyPair,
    correctness_set,
    decrypt,
    encrypt,
    import_key,
    load_keyfile,
    make_keypair,
    roundtrip_ok,
    save_keyfile,
)
from .totient import PhiSet, multiplicative_order, phi, phi_set

__version__ = "0.1.0"

__all__ = [
    "BigPhiSet",
    "CapacityError",
    "ConjectureReport",
    "CorrectnessReport",
    "DivRem",
    "DomainError",
    "Factorization",
    "FactorizationTimeout",
    "InternalConsistencyError",
    "KeyPair",
    "PhiMembershipWitness",
    "PhiSet",
    "SweepConfig",
    "big_phi_count",
    "big_phi_count_by_enumeration",
    "big_phi_set",
    "correctness_set",
    "decrypt",
    "div_rem",
    "encrypt",
    "ext_gcd",
    "factorize",
    "gcd",
    "gen_prime",
    "import_key",
    "is_congruent",
    "is_prime",
    "is_squarefree",
    "load_keyfile",
    "make_keypair",
    "membership_mask",
    "mod_inv",
    "mod_pow",
    "multiplicative_order",
    "phi",
    "phi_membership",
    "phi_set",
    "reproduce_worked_examples",
    "roundtrip_ok",
    "save_keyfile",
    "sweep_conjecture",
    "verify_theorem_suite",
]
