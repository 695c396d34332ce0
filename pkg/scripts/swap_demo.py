"""Apply SWAP to |00> + 2|01> + 3|10> + 4|11> and show where the amplitudes land.

    python scripts/swap_demo.py
"""

from pathlib import Path

from qrega.qra import amplitudes_from_state, new_context
from qrega.script import format_outputs, qra_definition, run_source

DATA = Path(__file__).resolve().parent.parent / "data"


def main() -> None:
    ev = run_source((DATA / "swap2.clu").read_text(), qra_definition(2))
    print(format_outputs(ev), end="")

    ctx = new_context(2)
    print()
    for name in ("psi", "SwapPsi"):
        amps = amplitudes_from_state(ctx, ev.environment[name])
        terms = " + ".join(
            f"{a.real:g}|{k:02b}>" for k, a in enumerate(amps) if a != 0
        )
        print(f"{name:8s} = ({terms}) I")


if __name__ == "__main__":
    main()
