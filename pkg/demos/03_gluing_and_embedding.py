"""Gluings T = <alpha> + beta*S and the cone embedding that explains them.

The same base is glued twice: once with alpha outside the Apery set
(plain extension) and once with alpha inside it (augmented extension,
extra wrap-around relations).  The embedding side then rebuilds both
glued posets without ever constructing the glued semigroups.

Run:  python3 demos/03_gluing_and_embedding.py
"""

from kunzcone import (
    APERY,
    EmbeddingSpec,
    GluingSpec,
    NumericalSemigroup,
    beta_ray,
    extend_poset,
    face_of,
    factor_monoscopic,
    glue,
    glued_poset,
    kunz_poset_of,
    phi,
    verify_face_image,
)

S = NumericalSemigroup([4, 13, 18])
print("base:", S.generators, " Apery:", list(S.apery_set(4)))

plain = GluingSpec(S, 43, 3)       # 43 in S, not an Apery element
augmented = GluingSpec(S, 31, 3)   # 31 is the top Apery element
for spec in (plain, augmented):
    T = glue(spec)
    inside = spec.alpha in S.apery_set(4)
    print("\nalpha=%d beta=%d -> %s  (alpha in Apery: %s)"
          % (spec.alpha, spec.beta, T.generators, inside))
    P = glued_poset(spec)
    print("  relations:", P.relations())

P1 = glued_poset(plain)
P2 = glued_poset(augmented)
print("\naugmented poset gains exactly:",
      sorted(set(P2.relations()) - set(P1.relations())))

# embedding view: Z_4 sits inside Z_12 as the multiples of beta=3,
# and rho=7 plays the role of alpha mod 12
spec = EmbeddingSpec(12, 3, 7)
print("\nembedding n=12, subgroup", spec.subgroup, ", rho =", spec.rho)
w = S.coordinates(4, APERY)
print("phi maps the base Apery tuple to:", phi(spec, w).entries)
print("beta ray:", beta_ray(spec).entries)

F = face_of(w)
P = F.kunz_poset
print("\nextension of the base face poset (modulo relabeling):")
print("  plain     == glued poset of alpha=43:",
      extend_poset(P, spec, augmented=False) == P1)
print("  augmented == glued poset of alpha=31:",
      extend_poset(P, spec, augmented=True) == P2)

report = verify_face_image(spec, [w, w.scale(2)])
print("\nface-image verification:", report)

print("\nfactoring the gluings back:")
for spec in (plain, augmented):
    T = glue(spec)
    S2, alpha2, beta2 = factor_monoscopic(T)
    print(" ", T.generators, "= <%d> + %d*%s" % (alpha2, beta2, S2.generators))

# gluings can nest; keep factoring until nothing is left
T = NumericalSemigroup([8, 12, 18, 27])
print("\npeeling", T.generators)
while True:
    out = factor_monoscopic(T)
    if out is None:
        break
    T, alpha, beta = out[0], out[1], out[2]
    print("  alpha=%d beta=%d leaves %s" % (alpha, beta, T.generators))
