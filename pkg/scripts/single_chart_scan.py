"""Best fidelity to a target reachable from |0> alone (xi = 0), as a function of the zeta range.

With zeta restricted to [0, pi] the Eastern target (pi/2, pi/2) is out of reach; with
zeta over the full [0, 2pi] it is reached exactly at eta = pi/2, zeta = 3pi/2.
"""

import argparse
import math

from hopfqubit import gadget, qubit
from hopfqubit.qubit import BlochAngles
from hopfqubit.verify import SINGLE_CHART_BOUND, best_single_chart_fidelity


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--theta", type=float, default=math.pi / 2)
    parser.add_argument("--phi", type=float, default=math.pi / 2)
    parser.add_argument("--n-eta", type=int, default=200)
    parser.add_argument("--n-zeta", type=int, default=400)
    args = parser.parse_args()

    target = BlochAngles(args.theta, args.phi)
    for label, zeta_max in (("[0, pi]", math.pi), ("[0, 2pi]", 2 * math.pi)):
        best = best_single_chart_fidelity(target, args.n_eta, args.n_zeta, zeta_max)
        verdict = "below" if best < SINGLE_CHART_BOUND else "not below"
        print(f"zeta in {label:9s} best fidelity {best:.15f} ({verdict} {SINGLE_CHART_BOUND})")

    exact = gadget.prepare(qubit.ZERO, gadget.EulerAngles(0.0, math.pi / 2, 3 * math.pi / 2))
    print(f"eta=pi/2, zeta=3pi/2 gives {exact.vector}, fidelity "
          f"{qubit.fidelity(exact, qubit.state_from_angles(target)):.15f}")


if __name__ == "__main__":
    main()
