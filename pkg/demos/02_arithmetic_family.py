"""Tour of the arithmetic-like generator family <a, ah+d, ..., ah+kd>.

Everything printed by a closed form here is double-checked against the
generic machinery on the spot.

Run:  python3 demos/02_arithmetic_family.py
"""

from kunzcone import (
    APERY,
    NumericalSemigroup,
    ega_apery_grid,
    ega_contains,
    ega_detect,
    ega_face_dimension,
    ega_frobenius,
    ega_kunz_poset,
    ega_new,
    ega_rays,
    face_of,
    kunz_poset_of,
)

params, S = ega_new(13, 1, 4, 1)
print("parameters a=13 h=1 k=4 d=1 ->", S.generators)
print("Frobenius by formula:", ega_frobenius(params))
print("Frobenius by search: ", S.frobenius())

print("\nmembership threshold, first disagreement-free stretch:")
row = ["%3d%s" % (n, "+" if ega_contains(params, n) else " ") for n in range(26, 46)]
print(" ".join(row))

print("\nApery grid (row x, column y) -> value")
for spot, value in ega_apery_grid(params):
    print("  x=%d y=%d  %3d" % (spot.x, spot.y, value))

P = ega_kunz_poset(13, 4, 1)
print("\ngrid poset == generic poset:", P == kunz_poset_of(S, 13))

# a pessimistic instance: negative common difference, same machinery
params2, S2 = ega_new(11, 2, 5, -2)
print("\npessimistic instance a=11 h=2 k=5 d=-2 ->", S2.generators)
print("Frobenius:", ega_frobenius(params2), "==", S2.frobenius())
print("its poset only depends on d mod a, so d=-2 and d=9 families agree:",
      ega_kunz_poset(11, 5, -2) == ega_kunz_poset(11, 5, 9))

print("\nface dimensions across k for a=13:")
for k in range(1, 13):
    print("  k=%2d  dim %d" % (k, ega_face_dimension(13, k)))

r, t = ega_rays(params)
print("\nextremal rays of the 2-dimensional face for (13, 4, d=1):")
print("  r =", r.entries)
print("  t =", t.entries)
F = face_of(S.coordinates(13, APERY))
print("  both sharpen the face:",
      all(F.tight < face_of(ray).tight for ray in (r, t)))
combo = r.scale(4) + t
print("  4r + t recovers the Apery tuple of S:",
      combo.entries == S.coordinates(13, APERY).entries)

print("\ndetection from raw generators:")
for gens in ([11, 12, 14, 16, 18, 20], [4, 7], [5, 6, 9]):
    print(" ", gens, "->", ega_detect(NumericalSemigroup(gens)))
