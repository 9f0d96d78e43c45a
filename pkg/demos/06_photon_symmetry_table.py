"""
What decoherence destroys: the discrete symmetries of a photon pair
===================================================================

Two involutions act on an oppositely moving photon pair: parity
(inversion through the source) and a half-turn about a transverse axis.
They commute, and the four Bell states are simultaneous eigenstates of
both. The definite-helicity branches a decohered pair collapses into are
not: they keep zero total helicity (the conservation-law correlation)
but lose the phase symmetries that only interference terms can carry.
"""

import numpy as np

from eprsim import (
    PARITY,
    ROTATION_PERP,
    apply_parity,
    apply_r_perp,
    classification_table,
    helicity_state,
)


def show(label):
    return label if label is not None else "not an eigenstate"


print("basis actions (helicity product states, slots = propagation directions):")
for name in ("RR", "RL", "LR", "LL"):
    psi = helicity_state(name)
    p = PARITY @ psi
    r = ROTATION_PERP @ psi
    names = ["RR", "RL", "LR", "LL"]
    p_name = names[int(np.argmax(np.abs(p)))]
    r_name = names[int(np.argmax(np.abs(r)))]
    print(f"  parity: {name} -> {p_name:<3}  half-turn: {name} -> {r_name}")

print("\ncommutator check: [parity, half-turn] = 0 exactly:",
      bool(np.array_equal(PARITY @ ROTATION_PERP, ROTATION_PERP @ PARITY)))

print(f"\n{'state':<10} {'parity':<20} {'transverse half-turn':<20}")
for name, cls in classification_table():
    print(f"{name:<10} {show(cls.parity):<20} {show(cls.r_perp):<20}")

# The singlet is the odd one out: even under parity, odd under the
# half-turn. Its decohered branches RL and LR are parity eigenstates but
# are exchanged by the half-turn.
psi = helicity_state("RL")
print("\nhalf-turn image of the RL branch equals LR:",
      bool(np.allclose(apply_r_perp(psi), helicity_state("LR"))))
print("parity leaves the RL branch invariant:",
      bool(np.allclose(apply_parity(psi), psi)))
