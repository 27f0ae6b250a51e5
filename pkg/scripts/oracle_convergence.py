#!/usr/bin/env python3
"""Grid-refinement study of the numerical oracle against the closed forms.

Shows the relative error of the oracle level as n_points doubles, for one
representative state of each model. Useful when picking n_points for a
verification run at a tolerance other than the default.
"""

import argparse
import time

from pdmag.models import ModelKind, energy
from pdmag.oracle import oracle_energy
from pdmag.params import PhysicalParams, QuantumState

CASES = (
    (ModelKind.A, QuantumState(1, 1), PhysicalParams(beta=0.5, kz=1.0), "exact"),
    (ModelKind.B, QuantumState(0, 2), PhysicalParams(), "exact"),
    (ModelKind.C, QuantumState(0, 1), PhysicalParams(mu=0.15, delta=0.1), "ga"),
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-points", type=int, default=16000)
    args = parser.parse_args()

    for kind, state, params, target in CASES:
        closed = energy(kind, state, params)
        print(f"# model {kind.value}, state (n_rho={state.n_rho}, m={state.m}), "
              f"closed form E = {closed:.12g}")
        print(f"{'n_points':>9} {'E_oracle':>20} {'rel_err':>10} {'seconds':>8}")
        n = 1000
        while n <= args.max_points:
            half = max(0.5, 0.1 * abs(closed))
            t0 = time.perf_counter()
            got = oracle_energy(
                kind, state, params, (closed - half, closed + half),
                n_points=n, target=target,
            )
            dt = time.perf_counter() - t0
            rel = abs(got - closed) / max(1.0, abs(closed))
            print(f"{n:>9} {got:>20.12g} {rel:>10.2e} {dt:>8.2f}")
            n *= 2
        print()


if __name__ == "__main__":
    main()
