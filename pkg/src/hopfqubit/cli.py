"""Command-line entry point.

Every subcommand prints one JSON object on stdout.

Exit codes:
    0: success
    1: a reported check failed
    2: usage error (bad arguments or out-of-range input)
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

from hopfqubit import gadget, hopf, qubit, tolerances, verify
from hopfqubit.qubit import TWO_PI, BlochAngles, DomainError, PureState

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    command: str
    inputs: dict
    outputs: dict
    checks: list[verify.Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "checks": [c.to_dict() for c in self.checks],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _complex(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _extended(z) -> dict | str:
    return "infinity" if hopf.is_infinite(z) else _complex(z)


def _matrix(m) -> list[list[dict]]:
    return [[_complex(complex(x)) for x in row] for row in m]


def _point(p) -> list[float]:
    return [p.x1, p.x2, p.x3] if isinstance(p, hopf.SpherePoint) else [p.x, p.y, p.z]


def _plates(p: gadget.PlateAngles) -> dict:
    return {"q1": p.q1, "h1": p.h1, "q2": p.q2, "h2": p.h2, "branch": p.sign_branch.name.lower()}


def cmd_prepare(theta: float, phi: float) -> CommandResult:
    if not 0.0 <= theta <= math.pi:
        raise UsageError(f"theta={theta!r} out of range: theta must lie in [0, pi]")
    if not 0.0 <= phi < TWO_PI:
        raise UsageError(f"phi={phi!r} out of range: phi must lie in [0, 2pi)")
    target = BlochAngles(theta, phi)
    choice, e = gadget.target_to_gadget(target)
    plates = gadget.plate_angles_from_euler(e)
    out = gadget.prepare(choice.state, e)
    residual = 1 - qubit.fidelity(out, qubit.state_from_angles(target))
    return CommandResult(
        "prepare",
        {"theta": theta, "phi": phi},
        {
            "input": choice.value,
            "euler": {"xi": e.xi, "eta": e.eta, "zeta": e.zeta},
            "plates": _plates(plates),
            "state": {"a": _complex(out.a), "b": _complex(out.b)},
        },
        [verify.make_check("fidelity_to_target", residual, tolerances.get().fid)],
    )


def cmd_project(a_re: float, a_im: float, b_re: float, b_im: float) -> CommandResult:
    a, b = complex(a_re, a_im), complex(b_re, b_im)
    try:
        psi = PureState(a, b)
    except qubit.NormalizationError:
        raise UsageError(f"state is not normalized: |a|^2+|b|^2 = {abs(a) ** 2 + abs(b) ** 2!r}") from None
    point = hopf.hopf_project(psi)
    bloch = qubit.bloch_from_density(qubit.density_matrix(psi))
    mirrored = [bloch.x, bloch.y, -bloch.z]
    residual = math.dist(_point(point), mirrored)
    return CommandResult(
        "project",
        {"a_re": a_re, "a_im": a_im, "b_re": b_re, "b_im": b_im},
        {
            "sphere_point": _point(point),
            "chart": _extended(hopf.ratio_chart(psi)),
            "bloch_vector": _point(bloch),
        },
        [verify.make_check("mirror_relation", residual, tolerances.get().proj)],
    )


def fiber_csv(fiber: hopf.Fiber) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["alpha", "x1", "x2", "x3", "x4"])
    for alpha, s in zip(fiber.phases, fiber.samples):
        w.writerow([f"{v:.17g}" for v in (alpha, *s.real4)])
    return buf.getvalue()


def cmd_fiber(x: float, y: float, z: float, n: int, out: str | None = None) -> CommandResult:
    if n < 2:
        raise UsageError(f"n={n} too small: need at least 2 samples")
    try:
        base = hopf.SpherePoint(x, y, z)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    fiber = hopf.fiber_sample(base, n)
    residual = max(hopf.distance(hopf.hopf_project(s), base) for s in fiber.samples)
    body = fiber_csv(fiber)
    outputs: dict = {"n": n}
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(body)
        outputs["csv_path"] = out
    else:
        outputs["csv"] = body
    return CommandResult(
        "fiber",
        {"x": x, "y": y, "z": z, "n": n},
        outputs,
        [verify.make_check("max_projection_residual", residual, tolerances.get().proj)],
    )


def cmd_decompose(xi: float, eta: float, zeta: float) -> CommandResult:
    if not 0.0 <= eta <= math.pi:
        raise UsageError(f"eta={eta!r}: eta is restricted to [0, pi]")
    try:
        e = gadget.EulerAngles(xi, eta, zeta)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    g = gadget.gadget_unitary(e)
    agreement = qubit.phase_agreement(g, gadget.euler_unitary(e))
    return CommandResult(
        "decompose",
        {"xi": xi, "eta": eta, "zeta": zeta},
        {
            "plates": {b.name.lower(): _plates(gadget.plate_angles_from_euler(e, b)) for b in gadget.Branch},
            "validated_branch": gadget.VALIDATED_BRANCH.name.lower(),
            "gadget_matrix": _matrix(g),
            "agreement": agreement,
        },
        [verify.make_check("euler_phase_agreement", 1 - agreement, tolerances.get().fid)],
    )


def cmd_verify(seed: int = 42, samples: int = 1000) -> CommandResult:
    if samples < 1:
        raise UsageError(f"samples={samples}: need at least 1")
    checks = verify.run_verification(seed, samples)
    return CommandResult("verify", {"seed": seed, "samples": samples}, {"families": len(checks)}, checks)


def summary_lines(result: CommandResult) -> list[str]:
    return [
        f"{'PASS' if c.passed else 'FAIL'}  {c.name}  value={c.value:.12g}  {c.relation} {c.bound:.12g}"
        for c in result.checks
    ]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfqubit", description="Qubit geometry and wave-plate state preparation")
    parser.add_argument("--tolerance-scale", type=float, default=1.0,
                        help="multiply every numerical tolerance by this factor")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prepare", help="plate settings preparing a Bloch direction")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--degrees", action="store_true", help="read angles in degrees")

    p = sub.add_parser("project", help="Hopf projection of a state")
    for name in ("--a-re", "--a-im", "--b-re", "--b-im"):
        p.add_argument(name, type=float, required=True)

    p = sub.add_parser("fiber", help="sample the fiber over a sphere point as CSV")
    for name in ("--x", "--y", "--z"):
        p.add_argument(name, type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None, help="write the CSV here instead of embedding it")

    p = sub.add_parser("decompose", help="plate angles for Euler angles")
    p.add_argument("--xi", type=float, required=True)
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--zeta", type=float, required=True)
    p.add_argument("--degrees", action="store_true", help="read angles in degrees")

    p = sub.add_parser("verify", help="run every seeded property check")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=1000)
    return parser


def dispatch(args: argparse.Namespace) -> CommandResult:
    rad = math.radians if getattr(args, "degrees", False) else float
    if args.command == "prepare":
        return cmd_prepare(rad(args.theta), rad(args.phi))
    if args.command == "project":
        return cmd_project(args.a_re, args.a_im, args.b_re, args.b_im)
    if args.command == "fiber":
        return cmd_fiber(args.x, args.y, args.z, args.n, args.out)
    if args.command == "decompose":
        return cmd_decompose(rad(args.xi), rad(args.eta), rad(args.zeta))
    return cmd_verify(args.seed, args.samples)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.tolerance_scale > 0:
        parser.error("--tolerance-scale must be positive")
    try:
        with tolerances.scaled(args.tolerance_scale):
            result = dispatch(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(result.to_json())
    if args.command == "verify":
        print("\n".join(summary_lines(result)), file=sys.stderr)
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
