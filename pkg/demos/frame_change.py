"""Check the coframe-change identities, then break them on purpose."""

from cartancr import structeq


def main():
    res = structeq.verify_iz_change_of_frame(include_torsion=True)
    print("with torsion terms:")
    print("  first residual vanishes: ", res["residual_11"].is_zero())
    print("  second residual vanishes:", res["residual_12"].is_zero())

    ctrl = structeq.verify_iz_change_of_frame(include_torsion=False)
    print("\nwithout torsion terms (negative control):")
    print("  first residual vanishes: ", ctrl["residual_11"].is_zero())
    print("  second residual vanishes:", ctrl["residual_12"].is_zero())
    print("  leftover terms:", ctrl["residual_12"].name())


if __name__ == "__main__":
    main()
