"""
This file contains small domain-free functions reusable across components which do not have
a separate domain-specific file.
"""

import typing
import numpy as np
from shared import param_validators as shared_param_val


SEED_UPPER_BOUND: typing.Final[int] = 2**64 - 1


def make_rng(seed: int) -> np.random.Generator:
    """
    Creates random generator over the counter-based *Philox* bit generator. The same <seed> gives the same stream of
    numbers across runs and platforms.

    Args:
        seed (int): 64-bit seed.

    Returns (np.random.Generator): Random generator.

    Exceptions:
        ValueError: If <seed> does not fit into 64 bits.
    """
    shared_param_val.type_check(seed, int)
    shared_param_val.parameter_value_in_range(seed, 0, SEED_UPPER_BOUND, label="seed")

    return np.random.Generator(np.random.Philox(seed))


def derive_seed(base_seed: int, index: int) -> int:
    """
    Derives a 64-bit seed of the <index>-th independent trial from <base_seed>.

    Args:
        base_seed (int): Seed given by the user.
        index (int): Trial index.

    Returns (int): Derived seed.
    """
    shared_param_val.type_check(base_seed, int)
    shared_param_val.non_negative_int_check(index, "index")

    sequence = np.random.SeedSequence([base_seed, index])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def ceil_div(numerator: int, denominator: int) -> int:
    """
    Integer ceiling of <numerator> / <denominator> for positive <denominator>.

    Args:
        numerator (int): Numerator.
        denominator (int): Positive denominator.

    Returns (int): Rounded up quotient.
    """
    return -(-numerator // denominator)
