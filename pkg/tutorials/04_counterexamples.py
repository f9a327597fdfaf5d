"""Two places where the theory over fields breaks over rings."""

from semisym.diag import eisenstein_counterexample, z15_counterexample

z = z15_counterexample()
print("Z/15, Klein character: image rank mod 3 =", z["image_rank_mod_3"],
      "mod 5 =", z["image_rank_mod_5"])
print("  image cardinality", z["image_cardinality"], "is not a power of 15,"
      " so the image is not free")

e = eisenstein_counterexample()
print("Eisenstein integers: invariant factors", e["invariant_factors"])
print("  torsion", e["torsion_factors"], "so the quotient is not free")
