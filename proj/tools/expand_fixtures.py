#!/usr/bin/env python3
"""Regenerate data/gf_numerators.txt from the factored reference numerators.

Each entry is the factored numerator p(x) of sum_{k>=1} a(k) x^(k-1) over
(x-1)^3 (x+1). The expanded ascending coefficients are written one line per
(n, class). The script also asserts iso == acute + right + obtuse for every n.

    python3 tools/expand_fixtures.py > data/gf_numerators.txt
"""
import sympy as sp

x = sp.symbols("x")

ISO = {
    2: "2*x*(2*x**2 - x - 2)",
    3: "2*x*(2*x**4 + 4*x**3 + 2*x**2 - 8*x - 5)",
    4: "4*x*(x**10 - x**8 + 2*x**6 + x**5 + 4*x**4 + 4*x**3 - 3*x**2 - 9*x - 4)",
    5: "4*x*(x**16 - x**14 + 2*x**10 + 2*x**9 - x**8 - x**7 + 5*x**6 + 6*x**5 + 6*x**4"
       " + x**3 - 8*x**2 - 15*x - 6)",
    6: "2*x*(2*x**26 - 2*x**24 + 2*x**22 - 2*x**20 + 6*x**16 - 4*x**14 + 2*x**13 - 2*x**11"
       " + 6*x**10 + 12*x**9 - 6*x**7 + 26*x**6 + 24*x**5 + 6*x**4 - 8*x**3 - 30*x**2"
       " - 43*x - 16)",
    7: "2*x*(2*x**36 - 2*x**34 + 2*x**28 + 2*x**26 - 4*x**24 + 4*x**22 - 4*x**20 + 4*x**19"
       " - 2*x**17 + 10*x**16 - 6*x**14 + 4*x**13 + 2*x**12 - 2*x**11 + 10*x**10 + 18*x**9"
       " + 2*x**8 + 4*x**7 + 40*x**6 + 22*x**5 - 2*x**4 - 20*x**3 - 44*x**2 - 58*x - 21)",
    8: "4*x*(x**50 - x**48 + x**46 - x**44 + 3*x**36 - 2*x**34 - x**32 + 2*x**28 + 2*x**26"
       " + x**25 - 3*x**24 - x**23 + 3*x**22 + x**21 - 4*x**20 + 4*x**19 + x**18 - 3*x**17"
       " + 7*x**16 - 3*x**14 + 5*x**13 + 3*x**12 - 2*x**11 + 6*x**10 + 13*x**9 + 10*x**8"
       " + 7*x**7 + 19*x**6 + 9*x**5 - 7*x**4 - 17*x**3 - 29*x**2 - 37*x - 13)",
}

OBTUSE = {
    2: "-2*x**4",
    3: "-2*x**4*(x**2 + 2)",
    4: "2*x**3*(2*x**8 - 2*x**6 - x**5 - 2*x**3 + 2*x**2 - 3*x - 2)",
    5: "2*x*(2*x**16 - 2*x**14 + 4*x**10 + x**9 - 4*x**8 - 4*x**7 - x**5 + 4*x**4 - 6*x**3"
       " - 3*x**2 - 1)",
    6: "2*x*(2*x**26 - 2*x**24 + 2*x**22 - 2*x**20 + 6*x**16 - 6*x**14 + 2*x**13 - 3*x**11"
       " + 6*x**10 + 2*x**9 - 6*x**8 - 7*x**7 + 4*x**6 + 2*x**4 - 9*x**3 - 4*x**2 - 2)",
    7: "2*x*(2*x**36 - 2*x**34 + 2*x**28 + 2*x**26 - 4*x**24 + 4*x**22 - 4*x**20 + 2*x**19"
       " + 10*x**16 - 2*x**15 - 10*x**14 + 5*x**13 - 8*x**11 + 8*x**10 + 3*x**9 - 8*x**8"
       " - 6*x**7 + 8*x**6 - 3*x**5 - 11*x**3 - 4*x**2 - x - 4)",
    8: "2*x*(2*x**50 - 2*x**48 + 2*x**46 - 2*x**44 + 6*x**36 - 4*x**34 - 2*x**32 + 4*x**28"
       " + 2*x**26 + 2*x**25 - 6*x**24 - 2*x**23 + 8*x**22 + 2*x**21 - 8*x**20 + 2*x**19"
       " + 16*x**16 - 5*x**15 - 16*x**14 + 10*x**13 - 15*x**11 + 10*x**10 + 4*x**9 - 4*x**8"
       " - 5*x**7 + 6*x**6 - 6*x**5 - 2*x**4 - 13*x**3 - 4*x**2 - 2*x - 6)",
}

ACUTE = {
    2: "0",
    3: "2*x**2*(x + 1)*(3*x - 4)",
    4: "2*x**2*(x + 1)*(2*x**4 - x**3 + 3*x**2 + 3*x - 9)",
    5: "2*x**2*(x + 1)*(2*x**7 - 2*x**6 + x**5 + 5*x**4 + 3*x**3 - x**2 + 3*x - 15)",
    6: "2*x**2*(x + 1)*(2*x**12 - 2*x**11 + 2*x**10 - 2*x**9 + 7*x**7 - 5*x**6 + x**5"
       " + 15*x**4 + 2*x**3 - 6*x**2 + 2*x - 22)",
    7: "2*x**2*(x + 1)*(2*x**17 - 2*x**16 + 2*x**13 + 2*x**12 - 4*x**11 + 4*x**10 - x**9"
       " - x**8 + 11*x**7 - 7*x**6 + 10*x**5 + 14*x**4 + 2*x**3 - 13*x**2 + 2*x - 30)",
    8: "2*x**2*(x + 1)*(2*x**24 - 2*x**23 + 2*x**22 - 2*x**21 + 6*x**17 - 4*x**16"
       " - 2*x**15 + 4*x**13 + 4*x**12 - 7*x**11 + 9*x**10 - 3*x**9 - x**8 + 16*x**7"
       " + 10*x**5 + 12*x**4 + x**3 - 21*x**2 + 3*x - 39)",
}

RIGHT_TAIL = {
    2: "x + 2",
    3: "x**3 + 2*x**2 + 4*x + 5",
    4: "x**5 + 2*x**4 + 4*x**3 + 6*x**2 + 9*x + 8",
    5: "x**7 + 2*x**6 + 4*x**5 + 6*x**4 + 9*x**3 + 12*x**2 + 15*x + 11",
    6: "x**9 + 2*x**8 + 4*x**7 + 6*x**6 + 9*x**5 + 12*x**4 + 16*x**3 + 20*x**2 + 21*x + 14",
    7: "x**11 + 2*x**10 + 4*x**9 + 6*x**8 + 9*x**7 + 12*x**6 + 16*x**5 + 20*x**4 + 25*x**3"
       " + 29*x**2 + 27*x + 17",
    8: "x**13 + 2*x**12 + 4*x**11 + 6*x**10 + 9*x**9 + 12*x**8 + 16*x**7 + 20*x**6"
       " + 25*x**5 + 30*x**4 + 36*x**3 + 38*x**2 + 33*x + 20",
}
RIGHT = {n: f"2*x*(x - 1)*(x + 1)*({q})" for n, q in RIGHT_TAIL.items()}

SOURCES = [("iso", "numerator of the isosceles count", ISO),
           ("obtuse", "numerator of the obtuse isosceles count", OBTUSE),
           ("acute", "numerator of the acute isosceles count", ACUTE),
           ("right", "numerator of the right isosceles count", RIGHT)]


def ascending(expr):
    poly = sp.Poly(sp.expand(sp.sympify(expr)), x)
    if poly.is_zero:
        return []
    return [int(c) for c in reversed(poly.all_coeffs())]


def main():
    print("# Generating-function numerators p(x) with")
    print("#   sum_{k>=1} a_n(k) x^(k-1) = p(x) / ((x-1)^3 (x+1)).")
    print("# Format: n <class> c0 c1 c2 ... (ascending powers). Generated by")
    print("# tools/expand_fixtures.py from the factored reference numerators.")
    for cls, title, table in SOURCES:
        print(f"\n# {title}")
        for n in sorted(table):
            print(f"# n={n}: {table[n]}")
            coeffs = ascending(table[n])
            print(" ".join([str(n), cls] + [str(c) for c in coeffs]))

    for n in ISO:
        parts = sp.expand(sp.sympify(ACUTE[n]) + sp.sympify(RIGHT[n]) + sp.sympify(OBTUSE[n]))
        assert sp.expand(parts - sp.sympify(ISO[n])) == 0, f"class sum mismatch at n={n}"


if __name__ == "__main__":
    main()
