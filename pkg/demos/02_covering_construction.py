"""
Building an interval with no sums of two squares
================================================

Richards' trick: take P as the product of primes p <= 4Y with
p % 4 == 3, each raised until p**b exceeds 4Y, and pick the shift a
with 4a = -1 (mod P).  Then every element a+1 .. a+Y is divisible by
some 3 mod 4 prime to an odd power, so the whole interval misses the
sums of two squares.
"""

from twosquare_gaps import (
    construction_to_json,
    covering_certificate,
    interval_check,
    richards_construction,
    verify_covering,
)

Y = 10
c = richards_construction(Y)

print(f"Y = {Y}")
print("modulus factors:", c.modulus.factors)
print("modulus value:  ", c.modulus.value())
print("shift a:        ", c.shift)
print("4a + 1 =", 4 * c.shift + 1, "(equals the modulus, so 4a = -1 mod P)")
print()

# Each offset has its own certificate: an odd prime-power valuation, or
# the form 2**k * (4m + 3).  The certificate is a statement about
# a + j as a plain integer.
for j in range(1, Y + 1):
    cert = covering_certificate(c, j)
    print(f"a + {j:>2}: {cert.certificate}")

# verify_covering replays all offsets and reports the first hole, if any.
report = verify_covering(c)
print()
print("covered:", report.ok, f"({len(report.certificates)}/{c.y} offsets)")

# interval_check goes one step further: it hands every element to the
# independent membership oracle.  At Y = 10 the elements are small
# enough (about 2.2e13) to factor completely.
checks = interval_check(c)
print("oracle statuses:", {chk.oracle for chk in checks})

# Constructions serialize to JSON, so they can be stored and re-verified
# later (the CLI round-trips the same format).
print()
print(construction_to_json(c))
