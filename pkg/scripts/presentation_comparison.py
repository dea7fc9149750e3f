"""Which straightening rules make T_1, T_2 preserve the defining relations.

The images of T_i are read in U_{s^-1,r^-1}.  This compares reducing them with
the (r,s) rules against the rules of the swapped parameter pair, relation by
relation.

    python3 scripts/presentation_comparison.py
"""

from qg2.lusztig import presentation_comparison
from qg2.params import RELATION_IDS


def main():
    table = presentation_comparison()
    print(f"{'relation':10}" + "".join(f"{f'T{i} ' + name:>14}" for name in table for i in (1, 2)))
    for rid in RELATION_IDS:
        cells = ["ok" if table[name][(i, rid)] else "FAILS" for name in table for i in (1, 2)]
        print(f"{rid:10}" + "".join(f"{c:>14}" for c in cells))


if __name__ == "__main__":
    main()
