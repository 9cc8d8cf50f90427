"""The combinatorics behind the rows: recursive trees and permutations.

Scaled row values count recursive trees by leaves and by where the
smallest-child path ends.  Reading a tree depth-first (children largest
first) is a bijection onto permutations that carries leaf count to
special descents and path end to the last digit, which brings Eulerian
numbers into the first column.
"""
from dispersion import (
    RecursiveTree,
    eulerian_triangle,
    lx_to_sumtroid,
    perm_stats,
    r_table_bruteforce,
    r_table_recursive,
    scaled_row,
    t_values,
    tree_stats,
    tree_to_perm,
)


def main() -> None:
    n = 5
    table = r_table_bruteforce(n)
    print(f"trees with {n} vertices, counted by (leaves l, path end x):")
    for ell in range(2, n):
        cells = [f"x={x}: {table.value(ell, x)}" for x in range(1, n)]
        print(f"  l={ell}:  " + "  ".join(cells))
    print(f"leaf totals: {t_values(n)}; recursion agrees: "
          f"{r_table_recursive(n).r == table.r}")
    print()

    t = RecursiveTree((None, 0, 0, 0, 3))
    word = tree_to_perm(t)
    ts, ps = tree_stats(t), perm_stats(word)
    print(f"the tree with parents {t.parents} reads as the word {word}")
    print(f"  leaves {ts.leaves} -> special descents {ps.special_descents} (+1)")
    print(f"  path end {ts.path_end} -> last digit {ps.last}")
    print()

    print("the x=1 column is a column of Eulerian numbers:")
    for m in range(3, 8):
        col = [r_table_recursive(m).value(ell, 1) for ell in range(2, m)]
        print(f"  size {m}: {col}  (Eulerian row {eulerian_triangle(m)[m - 3]})")
    print()

    row = scaled_row(n)
    print(f"and each cell equals a scaled row value of size {n}:")
    for ell in range(2, n):
        for x in range(1, n):
            if table.value(ell, x) == 0:
                continue
            k = lx_to_sumtroid(n, ell, x)
            print(
                f"  R({n},{ell},{x}) = {table.value(ell, x)} = row value at K = {k:+d}"
            )


if __name__ == "__main__":
    main()
