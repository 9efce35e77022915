"""Generate the coframe structure equations and probe the constraints."""

from pathlib import Path

from cartancr import structeq

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def main():
    table = structeq.load_constraints((FIXTURES / "constraints.json").read_text())
    print(f"constraint table: {len(table.entries)} slots "
          f"({len(table.primal_slots())} primal, rest derived by conjugation)")

    eqs = structeq.generate_structure_equations(table)
    counts = [len(e.rhs) for e in eqs]
    print("curvature terms per equation:", counts)

    want = structeq.equations_from_json(
        (FIXTURES / "structure_equations.json").read_text(),
        derive_conjugates=True)
    diff = structeq.equations_diff(eqs, want)
    print("symbolic diff against the stored system:", diff or "empty")

    # drop one constraint and watch the system change
    victim = table.primal_slots()[0]
    weak = structeq.generate_structure_equations(table.without(victim))
    broken = structeq.equations_diff(weak, want)
    print(f"\nafter removing constraint {victim}:")
    for line in broken[:3]:
        print("  ", line)

    print("\nfirst equation, rendered:")
    tex = structeq.equations_to_latex(eqs[:1])
    print(tex.strip())


if __name__ == "__main__":
    main()
