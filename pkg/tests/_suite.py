"""Fixed zero-dimensional instances shared by the radical tests and the acceptance run.

Each entry is (algebra preset, number of variables, generators).
"""

SUITE = [
    ("F_3", 1, ["x^2"]),
    ("F_3", 1, ["x^3 - x"]),
    ("F_3", 1, ["x^2 + 1"]),
    ("F_3", 1, ["x^3 - x^2 - x + 1"]),
    ("F_3", 2, ["x^2", "y^2"]),
    ("F_3", 2, ["x^2 - y", "y^3 - y"]),
    ("F_3", 2, ["x*y - 1", "x^2 - 1"]),
    ("F_5", 1, ["x^2 - 2"]),
    ("F_5", 1, ["x^3"]),
    ("F_5", 1, ["x^4 - 1"]),
    ("F_5", 2, ["x^2 - 2", "y - x"]),
    ("F_5", 2, ["x^2", "y^2", "x*y"]),
    ("F_5[u]/(u^2-2)", 1, ["x^2 - 2"]),
    ("F_5[u]/(u^2-2)", 1, ["x^2"]),
    ("F_5[u]/(u^2-2)", 1, ["u*x - 1"]),
    ("F_5[u]/(u^2-2)", 2, ["x^2 - u", "y^2"]),
    ("M2(2)", 1, ["x^2 + x + 1"]),
    ("M2(2)", 1, ["e11*x^2 + e22", "e12*x"]),
    ("M2(2)", 2, ["x", "y^2"]),
    ("M2(3)", 1, ["x^2"]),
    ("M2(3)", 1, ["e11*x^2", "e22"]),
    ("M2(3)", 1, ["x^2 + 1"]),
    ("dual_numbers(5)", 1, ["x^2"]),
    ("dual_numbers(5)", 1, ["eps*x - 1"]),
    ("dual_numbers(5)", 1, ["x^2 - eps"]),
    ("dual_numbers(5)", 2, ["x^2", "y - eps"]),
    ("group:C2(5)", 1, ["x^2 - g"]),
    ("group:C2(5)", 1, ["(g - 1)*x", "x^2 - 1"]),
    ("group:C2(5)", 1, ["g*x - 2"]),
    ("upper_triangular:2(5)", 1, ["x^3 - x"]),
    ("upper_triangular:2(5)", 1, ["e12*x - e22", "x^2"]),
    ("upper_triangular:2(5)", 2, ["x^2", "y^2 - e11"]),
]


def instance_id(entry):
    name, n, gens = entry
    return f"{name}|n={n}|{';'.join(gens)}"
